mod common;

use common::*;
use gentangent_core::canonical::{f0, g0 as g0_form};
use gentangent_core::generators::{AeKind, Sampler, Seed};
use gentangent_core::metrics::induced_metric;
use gentangent_core::zoo::{
    build_diagonal, build_family, build_musical, build_triangular, check_flat_sharp_identities,
    classify_pair, designated_form, extract_base_complex, extract_base_complex_traced,
    fundamental_tensor, fundamental_tensor_with, AeManifoldData, BaseData, DesignatedMetric,
    Family, StructureName, TensorKind, Variant,
};
use gentangent_core::{
    polynomial_class, BaseForm, BlockOperator, Error, FormKind, Matrix, PolynomialClass, Sign,
    Tolerance,
};
use proptest::prelude::*;

const TOL: Tolerance = Tolerance::DEFAULT;

fn kinds() -> impl Strategy<Value = AeKind> {
    prop::sample::select(AeKind::ALL.to_vec())
}

fn metrics() -> impl Strategy<Value = DesignatedMetric> {
    prop::sample::select(vec![DesignatedMetric::Natural, DesignatedMetric::Induced])
}

fn hermitian() -> AeManifoldData {
    let g = BaseForm::metric(Matrix::identity(2, 2)).unwrap();
    AeManifoldData::infer(jstd(), g, TOL).unwrap()
}

fn std_symplectic() -> BaseForm {
    BaseForm::symplectic(Matrix::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0])).unwrap()
}

/// Congruent copy `(P⁻¹JP, PᵀgP)` of `data`, with `ω` moved along.
fn transported(base: &BaseData, p: &Matrix) -> BaseData {
    let p_inv = p.clone().try_inverse().unwrap();
    let congruent = |f: &BaseForm| BaseForm::new(p.transpose() * f.gram() * p, f.kind()).unwrap();
    BaseData {
        g: base.g.as_ref().map(congruent),
        j: base.j.as_ref().map(|j| &p_inv * j * p),
        omega: base.omega.as_ref().map(congruent),
    }
}

#[test]
fn musical_examples() {
    let g = BaseForm::metric(Matrix::from_element(1, 1, 2.0)).unwrap();
    let jg = build_musical(&g, Sign::Minus).unwrap();
    assert_eq!(
        jg.assemble(),
        Matrix::from_row_slice(2, 2, &[0.0, -0.5, 2.0, 0.0])
    );
    assert!(jg
        .square()
        .approx_eq(&-BlockOperator::identity(dim(1)), TOL));

    let g = BaseForm::metric(Matrix::identity(2, 2)).unwrap();
    let fg = build_musical(&g, Sign::Plus).unwrap();
    assert_eq!(
        polynomial_class(&fg, TOL),
        PolynomialClass::AlmostProduct { plus: 2, minus: 2 }
    );

    let jw = build_musical(&std_symplectic(), Sign::Minus).unwrap();
    assert_eq!(
        classify_pair(&jw, &g0_form(dim(2)), TOL).name,
        StructureName::IndefiniteHermitian
    );
}

#[test]
fn diagonal_examples() {
    let g0 = g0_form(dim(2));
    let name = |a: &Matrix, l: Sign| classify_pair(&build_diagonal(a, l).unwrap(), &g0, TOL).name;
    assert_eq!(
        name(&jstd(), Sign::Minus),
        StructureName::IndefiniteHermitian
    );
    assert_eq!(name(&jstd(), Sign::Plus), StructureName::Norden);
    let f = Matrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
    assert_eq!(name(&f, Sign::Minus), StructureName::ParaHermitian);
    assert_eq!(
        build_diagonal(&(jstd() * 2.0), Sign::Plus).unwrap_err(),
        Error::NotPolynomial
    );
}

#[test]
fn triangular_examples() {
    let g0 = g0_form(dim(2));
    let herm = hermitian();
    let flat = build_triangular(&herm, Variant::Flat).unwrap();
    assert_eq!(classify_pair(&flat, &g0, TOL).name, StructureName::Norden);

    let norden = AeManifoldData::new(
        jstd(),
        BaseForm::metric(Matrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0])).unwrap(),
        Sign::Minus,
        Sign::Minus,
        TOL,
    )
    .unwrap();
    let flat = build_triangular(&norden, Variant::Flat).unwrap();
    assert_eq!(
        classify_pair(&flat, &g0, TOL).name,
        StructureName::Incompatible
    );

    let para = pair(AeKind::ParaHermitian, 2, 3);
    let sharp = build_triangular(&para, Variant::Sharp).unwrap();
    assert_eq!(
        classify_pair(&sharp, &g0, TOL).name,
        StructureName::ProductPseudoRiemannian
    );
}

#[test]
fn classification_examples() {
    let d = dim(2);
    let c = classify_pair(&f0(d), &g0_form(d), TOL);
    assert_eq!(c.name, StructureName::ParaHermitian);
    assert_eq!(c.signature, Some((2, 2)));
    let g = BaseForm::metric(Matrix::identity(2, 2)).unwrap();
    let jg = build_musical(&g, Sign::Minus).unwrap();
    assert_eq!(
        classify_pair(&jg, &g0_form(d), TOL).name,
        StructureName::Norden
    );
    let gg = induced_metric(&g).unwrap();
    assert_eq!(classify_pair(&jg, &gg, TOL).name, StructureName::Hermitian);
}

#[test]
fn fundamental_tensor_examples() {
    let d = dim(2);
    let phi = fundamental_tensor(&f0(d), &g0_form(d)).unwrap();
    assert_eq!(phi.kind, TensorKind::FundamentalSymplectic);
    assert!(TOL.close(phi.form.gram(), &omega0(2)));

    let g = random_metric_spd(2, 11);
    let gg = induced_metric(&g).unwrap();
    let phi = fundamental_tensor(&build_musical(&g, Sign::Plus).unwrap(), &gg).unwrap();
    assert_eq!(phi.kind, TensorKind::TwinMetric);
    assert!(TOL.close(phi.form.gram(), &(g0(2) * 2.0)));
    let phi = fundamental_tensor(&build_musical(&g, Sign::Minus).unwrap(), &gg).unwrap();
    assert_eq!(phi.kind, TensorKind::FundamentalSymplectic);
    assert!(TOL.close(phi.form.gram(), &(omega0(2) * -2.0)));

    let jg = build_musical(&g, Sign::Minus).unwrap();
    let twice = gg.gram() * 2.0;
    let scaled = gentangent_core::BilinearForm::new(twice, FormKind::Symmetric).unwrap();
    assert!(fundamental_tensor(&jg.scaled(2.0), &scaled).is_err());
}

fn random_metric_spd(n: usize, seed: u64) -> BaseForm {
    gentangent_core::generators::random_metric(n, n, 0, Seed(seed)).unwrap()
}

#[test]
fn flat_sharp_examples() {
    assert_eq!(check_flat_sharp_identities(&hermitian(), TOL), Ok(true));
    let norden = pair(AeKind::Norden, 2, 5);
    assert_eq!(check_flat_sharp_identities(&norden, TOL), Ok(true));
    let mut corrupted = hermitian();
    corrupted.j *= 2.0;
    assert_eq!(check_flat_sharp_identities(&corrupted, TOL), Ok(false));
}

#[test]
fn extraction_examples() {
    let jw = build_musical(&std_symplectic(), Sign::Minus).unwrap();
    let j = extract_base_complex(&jw, TOL).unwrap();
    assert!((&j * &j + Matrix::identity(2, 2)).amax() <= 1e-8);

    let op = build_diagonal(&jstd(), Sign::Minus).unwrap();
    let j = extract_base_complex(&op, TOL).unwrap();
    assert!((&j * &j + Matrix::identity(2, 2)).amax() <= 1e-8);
    assert!(j.trace().abs() <= 1e-8);
    assert!((j.determinant() - 1.0).abs() <= 1e-8);

    let g = BaseForm::metric(Matrix::identity(2, 2)).unwrap();
    let norden = build_musical(&g, Sign::Minus).unwrap();
    assert!(matches!(
        extract_base_complex(&norden, TOL),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn family_ids_round_trip() {
    for family in Family::ALL {
        assert_eq!(family.id().parse::<Family>(), Ok(family));
    }
    assert!(matches!(
        "nope".parse::<Family>(),
        Err(Error::UnknownFamily(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn families_satisfy_their_polynomial(seed in any::<u64>(), kind in kinds(), pick in 0usize..16) {
        for n in dims_for(kind) {
            let data = pair(kind, n, seed);
            let families = families_for(kind, n);
            let family = families[pick % families.len()];
            let base = family_base(family, &data, seed);
            let op = build_family(family, &base, TOL).unwrap();
            let alpha = family.alpha().unwrap();
            let target = BlockOperator::identity(dim(n)).scaled(alpha.value()).assemble();
            let sq = op.assemble() * op.assemble();
            prop_assert!(rel_diff(&sq, &target) <= 1e-9, "{} at n={}", family.id(), n);
            prop_assert_eq!(polynomial_class(&op, TOL).alpha(), Some(alpha));
        }
    }

    #[test]
    fn classification_is_consistent(
        seed in any::<u64>(),
        kind in kinds(),
        metric in metrics(),
        pick in 0usize..16,
    ) {
        for n in dims_for(kind) {
            let data = pair(kind, n, seed);
            let families = families_for(kind, n);
            let family = families[pick % families.len()];
            let base = family_base(family, &data, seed);
            let op = build_family(family, &base, TOL).unwrap();
            let form = designated_form(metric, &base).unwrap();
            let class = classify_pair(&op, &form, TOL);
            prop_assert_eq!(class.alpha, polynomial_class(&op, TOL).alpha());
            let pulled = isometry_gram(&op, form.gram());
            let plus = rel_diff(&pulled, form.gram()) <= 1e-9;
            let minus = rel_diff(&pulled, &-form.gram()) <= 1e-9;
            prop_assert!(!(plus && minus));
            match class.epsilon {
                Some(Sign::Plus) => prop_assert!(plus),
                Some(Sign::Minus) => prop_assert!(minus),
                None => prop_assert!(!plus && !minus),
            }
            if let Some(expected) = expected_class(family, metric, kind, &op) {
                prop_assert_eq!(class.name, expected, "{} {:?} {:?}", family.id(), metric, kind);
            }
        }
    }

    #[test]
    fn tensor_kind_matches_symmetry(
        seed in any::<u64>(),
        kind in kinds(),
        metric in metrics(),
        pick in 0usize..16,
    ) {
        for n in dims_for(kind) {
            let data = pair(kind, n, seed);
            let families = families_for(kind, n);
            let family = families[pick % families.len()];
            let base = family_base(family, &data, seed);
            let op = build_family(family, &base, TOL).unwrap();
            let form = designated_form(metric, &base).unwrap();
            let class = classify_pair(&op, &form, TOL);
            let Ok(tensor) = fundamental_tensor_with(&op, &form, TOL) else {
                prop_assert_eq!(class.name, StructureName::Incompatible);
                continue;
            };
            let raw = pulled_gram(&op, form.gram());
            let symmetric = rel_diff(&raw, &raw.transpose()) <= 1e-9;
            let skew = rel_diff(&raw, &-raw.transpose()) <= 1e-9;
            let ae = class.alpha.unwrap() * class.epsilon.unwrap();
            match tensor.kind {
                TensorKind::TwinMetric => {
                    prop_assert!(symmetric && ae == Sign::Plus);
                    prop_assert_eq!(tensor.form.kind(), FormKind::Symmetric);
                }
                TensorKind::FundamentalSymplectic => {
                    prop_assert!(skew && ae == Sign::Minus);
                    prop_assert_eq!(tensor.form.kind(), FormKind::Skew);
                }
            }
            prop_assert!(rel_diff(tensor.form.gram(), &raw) <= 1e-9);
        }
    }

    #[test]
    fn classification_is_transport_invariant(
        seed in any::<u64>(),
        kind in kinds(),
        metric in metrics(),
        pick in 0usize..16,
    ) {
        for n in dims_for(kind) {
            let data = pair(kind, n, seed);
            let families = families_for(kind, n);
            let family = families[pick % families.len()];
            let base = family_base(family, &data, seed);
            let p = Sampler::new(Seed(seed ^ 0xabc)).invertible(n);
            let moved = transported(&base, &p);
            let classify = |b: &BaseData| {
                let op = build_family(family, b, TOL).unwrap();
                classify_pair(&op, &designated_form(metric, b).unwrap(), TOL).name
            };
            prop_assert_eq!(classify(&base), classify(&moved), "{} {:?}", family.id(), metric);
        }
    }

    #[test]
    fn mixed_families_decompose(seed in any::<u64>(), kind in kinds()) {
        for n in dims_for(kind) {
            let data = pair(kind, n, seed);
            let base = BaseData::from_ae(&data);
            let r2 = 2f64.sqrt();
            let build = |f: Family| build_family(f, &base, TOL).unwrap().assemble();
            let e = data.epsilon;
            let (mixed, sum) = match data.alpha {
                Sign::Minus => (build(Family::FJg), build(Family::Fg) * r2 + build(Family::JlamJ(e))),
                Sign::Plus => (build(Family::JFg), build(Family::Jg) * r2 + build(Family::FlamF(-e))),
            };
            prop_assert!(rel_diff(&mixed, &sum) <= 1e-9);
        }
    }

    #[test]
    fn flat_sharp_identities_hold(seed in any::<u64>(), kind in kinds()) {
        for n in dims_for(kind) {
            prop_assert_eq!(check_flat_sharp_identities(&pair(kind, n, seed), TOL), Ok(true));
        }
    }

    #[test]
    fn extraction_returns_complex_structure(seed in any::<u64>(), half in 1usize..=2) {
        let n = 2 * half;
        let data = pair(AeKind::Hermitian, n, seed);
        let mut s = Sampler::new(Seed(seed));
        let ops = [
            build_musical(&s.symplectic(n).unwrap(), Sign::Minus).unwrap(),
            build_diagonal(&data.j, Sign::Minus).unwrap(),
        ];
        for op in ops {
            let (j, attempts) = extract_base_complex_traced(&op, TOL).unwrap();
            prop_assert!(attempts <= n);
            prop_assert!((&j * &j + Matrix::identity(n, n)).norm() <= 1e-8);
        }
    }
}
