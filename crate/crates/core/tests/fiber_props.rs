mod common;

use common::*;
use gentangent_core::canonical::{f0, g0, omega0};
use gentangent_core::generators::{random_metric, Sampler, Seed};
use gentangent_core::{
    dual_map, musicals, polynomial_class, signature, BaseForm, BilinearForm, BlockOperator, Error,
    FiberDim, FormKind, GeneralizedVector, Matrix, PolynomialClass, Tolerance,
};
use nalgebra::DVector;
use proptest::prelude::*;

const TOL: Tolerance = Tolerance::DEFAULT;

fn vector(s: &mut Sampler, n: usize) -> GeneralizedVector {
    GeneralizedVector::new(dim(n), (0..2 * n).map(|_| s.uniform()).collect()).unwrap()
}

#[test]
fn apply_examples() {
    let zero = BlockOperator::zero(dim(1));
    let v = GeneralizedVector::new(dim(1), vec![1.0, 1.0]).unwrap();
    assert_eq!(zero.apply(&v).unwrap().coords().as_slice(), &[0.0, 0.0]);
    let v = GeneralizedVector::new(dim(1), vec![3.0, 5.0]).unwrap();
    assert_eq!(
        f0(dim(1)).apply(&v).unwrap().coords().as_slice(),
        &[-3.0, 5.0]
    );
    let w = GeneralizedVector::new(dim(2), vec![0.0; 4]).unwrap();
    assert!(matches!(f0(dim(1)).apply(&w), Err(Error::Dimension { .. })));
}

#[test]
fn dual_map_examples() {
    assert_eq!(dual_map(&Matrix::identity(3, 3)), Matrix::identity(3, 3));
    let a = Matrix::from_row_slice(2, 2, &[0.0, 1.0, 0.0, 0.0]);
    assert_eq!(
        dual_map(&a),
        Matrix::from_row_slice(2, 2, &[0.0, 0.0, 1.0, 0.0])
    );
}

#[test]
fn musical_examples() {
    let g = BaseForm::metric(Matrix::from_element(1, 1, 2.0)).unwrap();
    let m = musicals(&g).unwrap();
    assert_eq!(m.flat[(0, 0)], 2.0);
    assert_eq!(m.sharp[(0, 0)], 0.5);

    let w = BaseForm::symplectic(Matrix::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0])).unwrap();
    let m = musicals(&w).unwrap();
    assert!(TOL.close(&(&m.flat * &m.sharp), &Matrix::identity(2, 2)));
    for i in 0..2 {
        for j in 0..2 {
            let x = DVector::from_fn(2, |k, _| if k == i { 1.0 } else { 0.0 });
            let y = DVector::from_fn(2, |k, _| if k == j { 1.0 } else { 0.0 });
            let flat_x = &m.flat * &x;
            assert_eq!(flat_x.dot(&y), w.eval(&x, &y).unwrap());
        }
    }
    let degenerate = BaseForm::metric(Matrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, 1.0])).unwrap();
    assert_eq!(musicals(&degenerate).unwrap_err(), Error::DegenerateForm);
}

#[test]
fn signature_examples() {
    let g = BaseForm::metric(Matrix::identity(3, 3)).unwrap();
    assert_eq!(signature(&g, TOL), Ok((3, 0)));
    assert_eq!(signature(&g0(dim(2)), TOL), Ok((2, 2)));
    let g = BaseForm::metric(Matrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0])).unwrap();
    let gg = gentangent_core::metrics::induced_metric(&g).unwrap();
    assert_eq!(signature(&gg, TOL), Ok((2, 2)));
    assert!(matches!(
        signature(&omega0(dim(2)), TOL),
        Err(Error::FormKind(_))
    ));
    let degenerate = BilinearForm::new(Matrix::zeros(2, 2), FormKind::Symmetric).unwrap();
    assert_eq!(signature(&degenerate, TOL), Err(Error::DegenerateForm));
}

#[test]
fn polynomial_examples() {
    assert_eq!(
        polynomial_class(&f0(dim(3)), TOL),
        PolynomialClass::AlmostProduct { plus: 3, minus: 3 }
    );
    let g = BaseForm::metric(Matrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 2.0])).unwrap();
    let jg = gentangent_core::zoo::build_musical(&g, gentangent_core::Sign::Minus).unwrap();
    assert_eq!(polynomial_class(&jg, TOL), PolynomialClass::AlmostComplex);
    let two = BlockOperator::identity(dim(2)).scaled(2.0);
    assert_eq!(polynomial_class(&two, TOL), PolynomialClass::Neither);
    assert_eq!(
        polynomial_class(&BlockOperator::identity(dim(2)), TOL),
        PolynomialClass::Neither
    );
}

#[test]
fn canonical_examples() {
    let e = |c: Vec<f64>| GeneralizedVector::new(dim(1), c).unwrap();
    assert_eq!(
        g0(dim(1)).eval(&e(vec![1.0, 0.0]), &e(vec![0.0, 1.0])),
        Ok(0.5)
    );
    assert_eq!(
        omega0(dim(1)).eval(&e(vec![1.0, 0.0]), &e(vec![0.0, 1.0])),
        Ok(-0.5)
    );
    assert_eq!(
        omega0(dim(1)).eval(&e(vec![0.0, 1.0]), &e(vec![1.0, 0.0])),
        Ok(0.5)
    );
    assert!((omega0(dim(2)).gram().determinant().abs() - 0.5f64.powi(4)).abs() < 1e-15);
    assert!(f0(dim(4))
        .square()
        .approx_eq(&BlockOperator::identity(dim(4)), TOL));
    assert_eq!(
        polynomial_class(&f0(dim(2)), TOL),
        PolynomialClass::AlmostProduct { plus: 2, minus: 2 }
    );
}

#[test]
fn tolerance_validation() {
    assert!(Tolerance::new(0.0, 0.0).is_err());
    assert!(Tolerance::new(-1.0, 0.1).is_err());
    assert!(Tolerance::new(f64::NAN, 0.1).is_err());
    assert!(Tolerance::new(0.0, 1e-9).is_ok());
    assert!(FiberDim::new(0).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn composition_matches_dense(seed in any::<u64>(), n in 1usize..=4) {
        let mut s = Sampler::new(Seed(seed));
        let a = s.block_operator(dim(n));
        let b = s.block_operator(dim(n));
        let dense = a.assemble() * b.assemble();
        prop_assert!(max_abs_diff(&(&a * &b).assemble(), &dense) <= 1e-12);
        let v = vector(&mut s, n);
        let image = a.apply(&v).unwrap();
        prop_assert!((image.coords() - a.assemble() * v.coords()).amax() <= 1e-12);
    }

    #[test]
    fn dual_map_is_an_involution_and_adjoint(seed in any::<u64>(), n in 1usize..=6) {
        let mut s = Sampler::new(Seed(seed));
        let a = s.matrix(n, n);
        prop_assert_eq!(dual_map(&dual_map(&a)), a.clone());
        let x = s.matrix(n, 1);
        let xi = s.matrix(n, 1);
        let lhs = (dual_map(&a) * &xi).dot(&x);
        let rhs = xi.dot(&(&a * &x));
        prop_assert!((lhs - rhs).abs() <= 1e-12);
    }

    #[test]
    fn sharp_inverts_flat(seed in any::<u64>(), r in 0usize..=3, s_ in 0usize..=3) {
        prop_assume!(r + s_ > 0);
        let g = random_metric(r + s_, r, s_, Seed(seed)).unwrap();
        let m = musicals(&g).unwrap();
        let n = r + s_;
        prop_assert!(TOL.close(&(&m.sharp * &m.flat), &Matrix::identity(n, n)));
        let mut sampler = Sampler::new(Seed(seed ^ 1));
        let x = DVector::from_iterator(n, (0..n).map(|_| sampler.uniform()));
        let y = DVector::from_iterator(n, (0..n).map(|_| sampler.uniform()));
        prop_assert!(((&m.flat * &x).dot(&y) - g.eval(&x, &y).unwrap()).abs() <= 1e-12);
        prop_assert!((&m.sharp * (&m.flat * &x) - &x).amax() <= 1e-9);
    }

    #[test]
    fn sylvester_law(seed in any::<u64>(), r in 0usize..=3, s_ in 0usize..=3) {
        prop_assume!(r + s_ > 0);
        let n = r + s_;
        let g = random_metric(n, r, s_, Seed(seed)).unwrap();
        let p = Sampler::new(Seed(seed ^ 7)).invertible(n);
        let moved = BaseForm::metric(p.transpose() * g.gram() * &p).unwrap();
        prop_assert_eq!(signature(&g, TOL), Ok((r, s_)));
        prop_assert_eq!(signature(&moved, TOL), Ok((r, s_)));
    }

    #[test]
    fn polynomial_class_is_similarity_invariant(seed in any::<u64>(), n in 1usize..=4) {
        let mut s = Sampler::new(Seed(seed));
        let g = s.metric(n, 0).unwrap();
        let ops = [
            gentangent_core::zoo::build_musical(&g, gentangent_core::Sign::Minus).unwrap(),
            gentangent_core::zoo::build_musical(&g, gentangent_core::Sign::Plus).unwrap(),
            f0(dim(n)),
            s.block_operator(dim(n)),
        ];
        let p = s.invertible(2 * n);
        let p_inv = p.clone().try_inverse().unwrap();
        for op in ops {
            let moved = BlockOperator::from_dense(&(&p_inv * op.assemble() * &p)).unwrap();
            prop_assert_eq!(polynomial_class(&op, TOL), polynomial_class(&moved, TOL));
        }
    }

    #[test]
    fn canonical_relations_hold(seed in any::<u64>(), n in 1usize..=6) {
        let mut s = Sampler::new(Seed(seed));
        let u = vector(&mut s, n);
        let v = vector(&mut s, n);
        let d = dim(n);
        let f0u = f0(d).apply(&u).unwrap();
        let f0v = f0(d).apply(&v).unwrap();
        let lhs = omega0(d).eval(&u, &v).unwrap();
        let rhs = g0(d).eval(&f0u, &v).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12);
        let flipped = g0(d).eval(&f0u, &f0v).unwrap();
        prop_assert!((flipped + g0(d).eval(&u, &v).unwrap()).abs() <= 1e-12);
        let x = GeneralizedVector::from_parts(&u.vector_part(), &DVector::zeros(n)).unwrap();
        let y = GeneralizedVector::from_parts(&v.vector_part(), &DVector::zeros(n)).unwrap();
        let xi = GeneralizedVector::from_parts(&DVector::zeros(n), &u.covector_part()).unwrap();
        let eta = GeneralizedVector::from_parts(&DVector::zeros(n), &v.covector_part()).unwrap();
        prop_assert_eq!(g0(d).eval(&x, &y).unwrap(), 0.0);
        prop_assert_eq!(g0(d).eval(&xi, &eta).unwrap(), 0.0);
        prop_assert_eq!(omega0(d).eval(&u, &u).unwrap().abs() <= 1e-15, true);
    }
}
