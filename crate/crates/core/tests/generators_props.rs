mod common;

use common::*;
use gentangent_core::generators::{
    random_ae_pair, random_kahler_data, random_metric, random_symplectic, AeKind, Sampler, Seed,
};
use gentangent_core::{signature, Error, FormKind, Matrix, Sign, Tolerance};
use proptest::prelude::*;

fn tight() -> Tolerance {
    Tolerance::new(1e-10, 1e-10).unwrap()
}

#[test]
fn reference_sequence() {
    let mut s = Sampler::new(Seed(0));
    assert_eq!(s.next_u64(), 0xe220a8397b1dcdaf);
    assert_eq!(s.next_u64(), 0x6e789e6aa1b965f4);
}

#[test]
fn metric_examples() {
    let g = random_metric(2, 2, 0, Seed(5)).unwrap();
    assert!(g.gram().clone().cholesky().is_some());
    let g = random_metric(4, 2, 2, Seed(5)).unwrap();
    assert_eq!(signature(&g, Tolerance::DEFAULT), Ok((2, 2)));
    assert!(matches!(
        random_metric(3, 1, 1, Seed(5)),
        Err(Error::Dimension { .. })
    ));
}

#[test]
fn symplectic_examples() {
    let w = random_symplectic(2, Seed(8)).unwrap();
    assert_eq!(w.kind(), FormKind::Skew);
    assert!(w.gram().determinant().abs() > 1e-6);
    assert_eq!(w.gram(), &-w.gram().transpose());
    assert!(matches!(
        random_symplectic(3, Seed(8)),
        Err(Error::Dimension { .. })
    ));
}

#[test]
fn pair_examples() {
    let tol = Tolerance::DEFAULT;
    let h = random_ae_pair(AeKind::Hermitian, 2, Seed(1)).unwrap();
    assert!(tol.close(&(&h.j * &h.j), &-Matrix::identity(2, 2)));
    assert_eq!(signature(&h.g, tol), Ok((2, 0)));

    let nd = random_ae_pair(AeKind::Norden, 2, Seed(1)).unwrap();
    assert_eq!(signature(&nd.g, tol), Ok((1, 1)));
    let pulled = nd.j.transpose() * nd.g.gram() * &nd.j;
    assert!(tol.close(&pulled, &-nd.g.gram()));

    let ph = random_ae_pair(AeKind::ParaHermitian, 2, Seed(1)).unwrap();
    let eig = ph.j.clone().eigenvalues().expect("real spectrum");
    let plus = eig.iter().filter(|e| **e > 0.0).count();
    assert_eq!(plus, 1);
    let pulled = ph.j.transpose() * ph.g.gram() * &ph.j;
    assert!(tol.close(&pulled, &-ph.g.gram()));

    assert!(matches!(
        random_ae_pair(AeKind::Hermitian, 3, Seed(1)),
        Err(Error::Dimension { .. })
    ));
}

#[test]
fn kind_names_round_trip() {
    for kind in AeKind::ALL {
        assert_eq!(kind.as_str().parse::<AeKind>(), Ok(kind));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn equal_seeds_give_equal_data(seed in any::<u64>(), kind in prop::sample::select(AeKind::ALL.to_vec())) {
        for n in dims_for(kind) {
            prop_assert_eq!(random_ae_pair(kind, n, Seed(seed)), random_ae_pair(kind, n, Seed(seed)));
        }
        prop_assert_eq!(random_kahler_data(2, Seed(seed)), random_kahler_data(2, Seed(seed)));
        let mut a = Sampler::new(Seed(seed));
        let mut b = Sampler::new(Seed(seed));
        let (x, y) = (a.block_operator(dim(3)).assemble(), b.block_operator(dim(3)).assemble());
        let bits = |m: &Matrix| m.iter().map(|v| v.to_bits()).collect::<Vec<_>>();
        prop_assert_eq!(bits(&x), bits(&y));
    }

    #[test]
    fn pairs_pass_tight_invariants(seed in any::<u64>(), kind in prop::sample::select(AeKind::ALL.to_vec())) {
        let (alpha, epsilon) = kind.signs();
        for n in dims_for(kind) {
            let data = random_ae_pair(kind, n, Seed(seed)).unwrap();
            prop_assert_eq!(data.validate(tight()), Ok(()));
            prop_assert_eq!((data.alpha, data.epsilon), (alpha, epsilon));
            let (_, s) = signature(&data.g, tight()).unwrap();
            prop_assert_eq!(s == 0, is_definite(kind));
        }
    }

    #[test]
    fn metrics_have_requested_signature(seed in any::<u64>(), r in 0usize..=3, s in 0usize..=3) {
        prop_assume!(r + s > 0);
        let g = random_metric(r + s, r, s, Seed(seed)).unwrap();
        prop_assert_eq!(signature(&g, tight()), Ok((r, s)));
    }

    #[test]
    fn kahler_data_is_valid(seed in any::<u64>(), half in 1usize..=2) {
        let n = 2 * half;
        let kd = random_kahler_data(n, Seed(seed)).unwrap();
        let tol = tight();
        prop_assert!(tol.close(kd.b(), &-kd.b().transpose()));
        prop_assert_eq!(signature(kd.g(), tol), Ok((n, 0)));
        for j in [kd.j1(), kd.j2()] {
            prop_assert!(tol.close(&(j * j), &-Matrix::identity(n, n)));
            prop_assert!(tol.close(&(j.transpose() * kd.g().gram() * j), kd.g().gram()));
        }
    }

    #[test]
    fn inducers_have_their_symmetry(seed in any::<u64>(), n in 1usize..=4) {
        let mut s = Sampler::new(Seed(seed));
        for sign in Sign::ALL {
            let op = match sign {
                Sign::Plus => s.metric_inducer(dim(n)),
                Sign::Minus => s.symplectic_inducer(dim(n)),
            };
            let v = sign.value();
            prop_assert_eq!(op.k(), &(op.h().transpose() * v));
            prop_assert_eq!(op.tau(), &(op.tau().transpose() * v));
            prop_assert_eq!(op.sigma(), &(op.sigma().transpose() * v));
        }
    }
}
