use alloc::vec::Vec;

use nalgebra::DVector;

use super::FiberDim;
use crate::{Error, Result};

/// An element `X + ξ` of the fiber `V ⊕ V*`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralizedVector {
    dim: FiberDim,
    coords: DVector<f64>,
}

impl GeneralizedVector {
    /// `coords` must have length `2n`: the `V` part first, then the `V*` part.
    pub fn new(dim: FiberDim, coords: Vec<f64>) -> Result<Self> {
        Self::from_coords(dim, DVector::from_vec(coords))
    }

    /// Same as [`GeneralizedVector::new`] for an existing vector.
    pub fn from_coords(dim: FiberDim, coords: DVector<f64>) -> Result<Self> {
        if coords.len() != dim.total() {
            return Err(Error::Dimension {
                expected: dim.total(),
                found: coords.len(),
            });
        }
        Ok(GeneralizedVector { dim, coords })
    }

    /// `X + ξ` from its two parts.
    pub fn from_parts(x: &DVector<f64>, xi: &DVector<f64>) -> Result<Self> {
        if x.len() != xi.len() {
            return Err(Error::Dimension {
                expected: x.len(),
                found: xi.len(),
            });
        }
        let dim = FiberDim::new(x.len())?;
        let mut coords = DVector::zeros(dim.total());
        coords.rows_mut(0, dim.n()).copy_from(x);
        coords.rows_mut(dim.n(), dim.n()).copy_from(xi);
        Ok(GeneralizedVector { dim, coords })
    }

    /// Fiber dimension.
    pub fn dim(&self) -> FiberDim {
        self.dim
    }

    /// All `2n` coordinates.
    pub fn coords(&self) -> &DVector<f64> {
        &self.coords
    }

    /// The vector part `X`.
    pub fn vector_part(&self) -> DVector<f64> {
        self.coords.rows(0, self.dim.n()).into_owned()
    }

    /// The covector part `ξ`.
    pub fn covector_part(&self) -> DVector<f64> {
        self.coords.rows(self.dim.n(), self.dim.n()).into_owned()
    }
}
