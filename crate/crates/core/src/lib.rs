//! Fiberwise linear algebra for geometric structures on the generalized
//! tangent space `V ⊕ V*`.
//!
//! A single fiber is modelled with a fixed basis `e_1..e_n` of `V` and its
//! dual basis of `V*`, so every structure becomes a matrix:
//!
//! * endomorphisms of `V ⊕ V*` are [`BlockOperator`]s `[[H, σ], [τ, K]]`,
//! * bilinear forms on the fiber are [`BilinearForm`]s with a `2n × 2n` Gram
//!   matrix, forms on `V` are [`BaseForm`]s,
//! * a covector `ξ` acting on a vector `X` is the dot product `ξᵀX`, and the
//!   dual map `A*` of an endomorphism is its transpose.
//!
//! On top of that model the crate builds the canonical structures
//! ([`canonical`]), the correspondence between generalized metrics and
//! endomorphisms ([`metrics`]), the zoo of `(α, ε)`-metric structures
//! ([`zoo`]), triple structures ([`triples`]) and generalized almost Kähler
//! pairs ([`kahler`]). [`generators`] produces seeded, reproducible inputs.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod canonical;
mod error;
pub mod fiber;
pub mod generators;
pub mod kahler;
mod linalg;
pub mod metrics;
mod sign;
mod tolerance;
pub mod triples;
pub mod zoo;

pub use error::{Error, Result};
pub use fiber::{
    dual_map, musicals, polynomial_class, signature, BaseForm, BilinearForm, BlockOperator,
    FiberDim, Form, FormKind, GeneralizedVector, Musicals, PolynomialClass,
};
pub use linalg::Matrix;
pub use sign::Sign;
pub use tolerance::{relative_residual, Tolerance};
