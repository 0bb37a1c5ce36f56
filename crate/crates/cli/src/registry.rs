//! Registry of verifiable propositions.
//!
//! Every entry is a seeded check at one fiber dimension. A check returns the
//! relative residual of its defining identity, or a description of the
//! mismatch; it fails when it errors or its residual exceeds the relative
//! tolerance.

use gentangent_core::canonical::{f0, g0, omega0};
use gentangent_core::generators::{random_metric, AeKind, Sampler, Seed};
use gentangent_core::kahler::{is_almost_kahler, kahler_roundtrip};
use gentangent_core::metrics::{
    diagonal_inducer, endomorphism_from_metric, endomorphism_from_symplectic, induced_metric,
    metric_from_endomorphism, musical_inducer, nannicini_metric, symplectic_from_endomorphism,
};
use gentangent_core::triples::{
    canonical_triple, classify_triple, combine, f0_commutation, Commutation, TripleKind, TripleName,
};
use gentangent_core::zoo::{
    build_diagonal, build_family, build_musical, check_flat_sharp_identities, classify_pair,
    closed_form, designated_form, extract_base_complex_traced, fundamental_tensor_with,
    AeManifoldData, BaseData, DesignatedMetric, Family, StructureName,
};
use gentangent_core::{
    polynomial_class, relative_residual, signature, BaseForm, BilinearForm, BlockOperator,
    FiberDim, FormKind, Matrix, Sign, Tolerance,
};

/// Inputs of one trial.
#[derive(Clone, Copy, Debug)]
pub struct Trial {
    pub n: usize,
    pub seed: u64,
    pub tol: Tolerance,
}

/// Residual of a passing identity, or why the trial failed.
pub type Outcome = Result<f64, String>;

/// A registered proposition.
pub struct Proposition {
    pub id: &'static str,
    pub statement: &'static str,
    pub supports: fn(usize) -> bool,
    pub check: fn(&Trial) -> Outcome,
}

fn any(_: usize) -> bool {
    true
}

fn even(n: usize) -> bool {
    n.is_multiple_of(2)
}

fn at_least_two(n: usize) -> bool {
    n >= 2
}

pub const REGISTRY: &[Proposition] = &[
    Proposition {
        id: "P2.flat-sharp",
        statement: "flat and sharp of φ = g(J·,·) factor through those of g",
        supports: at_least_two,
        check: flat_sharp,
    },
    Proposition {
        id: "P3.metric-char",
        statement: "valid metric inducers give nondegenerate symmetric 𝒢₀(𝒦·,·), inverted exactly",
        supports: any,
        check: metric_char,
    },
    Proposition {
        id: "P3.symplectic-char",
        statement: "valid symplectic inducers give nondegenerate skew 𝒢₀(𝒦·,·), inverted exactly",
        supports: any,
        check: symplectic_char,
    },
    Proposition {
        id: "P3.lambda-inducer",
        statement: "𝒦_{λ,H} induces a metric for λ = +1 and a symplectic form for λ = −1",
        supports: at_least_two,
        check: lambda_inducer,
    },
    Proposition {
        id: "P3.induced-metric",
        statement: "𝒢₀(2ℱ_g·,·) = 𝒢_g",
        supports: any,
        check: induced_metric_check,
    },
    Proposition {
        id: "P3.nannicini",
        statement: "the Nannicini metric is induced by 𝒦_{+1,J} + 2ℱ_g",
        supports: even,
        check: nannicini,
    },
    Proposition {
        id: "P3.induced-signature",
        statement: "g of signature (r,s) gives 𝒢_g of signature (2r,2s)",
        supports: any,
        check: induced_signature,
    },
    Proposition {
        id: "P4.F0-metric",
        statement: "(ℱ₀, 𝒢) is compatible iff 𝒢(X,ξ) = 0, para-Hermitian iff 𝒢(X,Y) = 𝒢(ξ,η) = 0",
        supports: any,
        check: f0_metric,
    },
    Proposition {
        id: "P4.F0-G0-parahermitian",
        statement: "(ℱ₀, 𝒢₀) is para-Hermitian with fundamental form Ω₀",
        supports: any,
        check: f0_g0,
    },
    Proposition {
        id: "P4.G0-existence",
        statement: "an indefinite Hermitian (𝒥, 𝒢₀) yields an almost complex J on V",
        supports: even,
        check: g0_existence,
    },
    Proposition {
        id: "P4.Jg-G0-norden",
        statement: "(𝒥_g, 𝒢₀) is Norden and (ℱ_g, 𝒢₀) pseudo-Riemannian product",
        supports: any,
        check: jg_g0,
    },
    Proposition {
        id: "P4.Jom-G0",
        statement: "(𝒥_ω, 𝒢₀) is indefinite Hermitian and (ℱ_ω, 𝒢₀) para-Hermitian",
        supports: even,
        check: jom_g0,
    },
    Proposition {
        id: "P4.JlamJ-G0",
        statement: "(𝒥_{λ,J}, 𝒢₀) is indefinite Hermitian for λ = −1 and Norden for λ = +1",
        supports: even,
        check: jlamj_g0,
    },
    Proposition {
        id: "P4.FlamF-G0",
        statement: "(ℱ_{λ,F}, 𝒢₀) is para-Hermitian for λ = −1 and product for λ = +1",
        supports: at_least_two,
        check: flamf_g0,
    },
    Proposition {
        id: "P4.triangular-iff",
        statement: "triangular structures are 𝒢₀-compatible iff ε = +1 (α = −1) or ε = −1 (α = +1)",
        supports: at_least_two,
        check: triangular_iff,
    },
    Proposition {
        id: "P4.mixed-iff",
        statement: "ℱ_{J,g} is 𝒢₀-compatible iff ε = +1 and 𝒥_{F,g} iff ε = −1",
        supports: at_least_two,
        check: mixed_iff,
    },
    Proposition {
        id: "P4.Jg-Gg-hermitian",
        statement: "𝒥_g, ℱ_g are 𝒢_g-isometric with Φ = −2Ω₀ and 2𝒢₀",
        supports: any,
        check: jg_gg,
    },
    Proposition {
        id: "P4.phi-Gg",
        statement: "𝒥_φ, ℱ_φ with 𝒢_g and their fundamental tensors",
        supports: at_least_two,
        check: phi_gg,
    },
    Proposition {
        id: "P4.JlamJ-Gg",
        statement: "𝒥_{λ,J} is 𝒢_g-compatible with Φ = φ(X,Y) − λφ(♯ξ,♯η)",
        supports: even,
        check: jlamj_gg,
    },
    Proposition {
        id: "P4.FJg-Gg-iff",
        statement: "ℱ_{J,g} is 𝒢_g-compatible iff ε = −1",
        supports: even,
        check: fjg_gg,
    },
    Proposition {
        id: "P4.FlamF-Gg",
        statement: "ℱ_{λ,F} is 𝒢_g-compatible with Φ = φ(X,Y) + λφ(♯ξ,♯η)",
        supports: at_least_two,
        check: flamf_gg,
    },
    Proposition {
        id: "P4.JFg-Gg-iff",
        statement: "𝒥_{F,g} is 𝒢_g-compatible iff ε = −1",
        supports: at_least_two,
        check: jfg_gg,
    },
    Proposition {
        id: "P5.f0-commutation",
        statement: "𝒦 commutes with ℱ₀ iff σ = τ = 0 and anti-commutes iff H = K = 0",
        supports: any,
        check: f0_commutation_check,
    },
    Proposition {
        id: "P5.Fg-triple",
        statement: "(ℱ₀, ℱ_g, 𝒥_g = ℱ₀ℱ_g) is biparacomplex",
        supports: any,
        check: fg_triple,
    },
    Proposition {
        id: "P5.Fom-triple",
        statement: "(ℱ₀, ℱ_ω, 𝒥_ω = ℱ₀ℱ_ω) is biparacomplex",
        supports: even,
        check: fom_triple,
    },
    Proposition {
        id: "P5.JlamJ-triple",
        statement: "(𝒥_{+1,J}, 𝒥_{−1,J}, ℱ₀) is bicomplex",
        supports: even,
        check: jlamj_triple,
    },
    Proposition {
        id: "P5.FlamF-triple",
        statement: "(ℱ_{+1,F}, ℱ_{−1,F}, −ℱ₀) is hyperproduct",
        supports: at_least_two,
        check: flamf_triple,
    },
    Proposition {
        id: "P5.triple-MJG",
        statement:
            "triples of an (α,ε)-manifold with α = −1, and (aF + bF' + cJ)² = (a² + b² − c²)Id",
        supports: even,
        check: triple_mjg,
    },
    Proposition {
        id: "P5.triple-MFG",
        statement:
            "triples of an (α,ε)-manifold with α = +1, and (aF + bF' + cJ)² = (a² + b² − c²)Id",
        supports: even,
        check: triple_mfg,
    },
    Proposition {
        id: "P5.kahler-example",
        statement: "(𝒥_φ, 𝒥_{−1,J}) is almost Kähler and (𝒥_{+1,J}, 𝒥_{−1,J}) is not",
        supports: even,
        check: kahler_example,
    },
    Proposition {
        id: "T5.kahler-roundtrip",
        statement: "(b, g, J₁, J₂) is recovered from the pair it induces",
        supports: even,
        check: kahler_roundtrip_check,
    },
];

pub fn find(id: &str) -> Option<&'static Proposition> {
    REGISTRY.iter().find(|p| p.id == id)
}

pub fn ids() -> Vec<&'static str> {
    REGISTRY.iter().map(|p| p.id).collect()
}

// ---------------------------------------------------------------------------
// helpers

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn err(e: gentangent_core::Error) -> String {
    e.to_string()
}

fn dim(n: usize) -> FiberDim {
    FiberDim::new(n).expect("registered dimensions are positive")
}

fn sampler(t: &Trial) -> Sampler {
    Sampler::new(Seed(t.seed))
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Kinds with base `α` (any when `None`) that exist at dimension `n`.
fn kinds(n: usize, alpha: Option<Sign>) -> Vec<AeKind> {
    AeKind::ALL
        .into_iter()
        .filter(|k| k.supports(n) && alpha.is_none_or(|a| k.signs().0 == a))
        .collect()
}

/// A pair of a kind chosen by the seed.
fn ae_pair(t: &Trial, alpha: Option<Sign>) -> Result<AeManifoldData, String> {
    let ks = kinds(t.n, alpha);
    if ks.is_empty() {
        return fail(format!("no (α, ε)-pair with α = {alpha:?} at n = {}", t.n));
    }
    let kind = ks[(t.seed % ks.len() as u64) as usize];
    sampler(t).ae_pair(kind, t.n).map_err(err)
}

/// A metric of seed-chosen signature.
fn any_metric(t: &Trial) -> Result<BaseForm, String> {
    let r = (t.seed % (t.n as u64 + 1)) as usize;
    random_metric(t.n, r, t.n - r, Seed(t.seed)).map_err(err)
}

fn is_definite(g: &BaseForm, tol: Tolerance) -> bool {
    matches!(signature(g, tol), Ok((_, 0)))
}

fn named(alpha: Sign, epsilon: Sign, definite: bool, para: bool) -> StructureName {
    match (alpha, epsilon) {
        (Sign::Plus, Sign::Plus) if definite && para => StructureName::ParaNorden,
        (Sign::Plus, Sign::Plus) if definite => StructureName::ProductRiemannian,
        (Sign::Plus, Sign::Plus) => StructureName::ProductPseudoRiemannian,
        (Sign::Plus, Sign::Minus) => StructureName::ParaHermitian,
        (Sign::Minus, Sign::Plus) if definite => StructureName::Hermitian,
        (Sign::Minus, Sign::Plus) => StructureName::IndefiniteHermitian,
        (Sign::Minus, Sign::Minus) => StructureName::Norden,
    }
}

/// Classification of `(op, metric)` against `expected`; the residual is
/// that of the isometry identity `𝒢(𝒦·, 𝒦·) = ε𝒢`.
fn expect_class(
    what: &str,
    op: &BlockOperator,
    metric: &BilinearForm,
    expected: StructureName,
    tol: Tolerance,
) -> Outcome {
    let c = classify_pair(op, metric, tol);
    ensure(c.name == expected, || {
        format!(
            "{what}: classified {} instead of {}",
            c.name.as_str(),
            expected.as_str()
        )
    })?;
    let Some(e) = c.epsilon else { return Ok(0.0) };
    if expected == StructureName::Incompatible {
        return Ok(0.0);
    }
    let a = op.assemble();
    let pulled = a.transpose() * metric.gram() * &a;
    Ok(relative_residual(&pulled, &(metric.gram() * e.value())))
}

/// Fundamental tensor of `family` with `metric` against its closed form.
fn twin(family: Family, metric: DesignatedMetric, base: &BaseData, tol: Tolerance) -> Outcome {
    let op = build_family(family, base, tol).map_err(err)?;
    let form = designated_form(metric, base).map_err(err)?;
    let actual = fundamental_tensor_with(&op, &form, tol).map_err(err)?;
    let expected = closed_form(family, metric, base, tol).map_err(err)?;
    Ok(relative_residual(actual.form.gram(), expected.gram()))
}

fn build(family: Family, base: &BaseData, tol: Tolerance) -> Result<BlockOperator, String> {
    build_family(family, base, tol).map_err(err)
}

fn worst(residuals: impl IntoIterator<Item = Outcome>) -> Outcome {
    residuals
        .into_iter()
        .try_fold(0.0f64, |acc, r| r.map(|r| acc.max(r)))
}

// ---------------------------------------------------------------------------
// checks

fn flat_sharp(t: &Trial) -> Outcome {
    let data = ae_pair(t, None)?;
    match check_flat_sharp_identities(&data, t.tol) {
        Ok(true) => Ok(0.0),
        Ok(false) => fail("identities do not hold"),
        Err(e) => Err(err(e)),
    }
}

fn metric_char(t: &Trial) -> Outcome {
    let op = sampler(t).metric_inducer(dim(t.n));
    let (form, report) = metric_from_endomorphism(&op, t.tol);
    ensure(report.valid(), || {
        format!("report {:?}", report.violations())
    })?;
    ensure(form.kind() == FormKind::Symmetric, || {
        "form is not symmetric".into()
    })?;
    ensure(form.is_nondegenerate(t.tol), || "form is degenerate".into())?;
    let back = endomorphism_from_metric(&form, t.tol).map_err(err)?;
    Ok(relative_residual(&back.assemble(), &op.assemble()))
}

fn symplectic_char(t: &Trial) -> Outcome {
    let op = sampler(t).symplectic_inducer(dim(t.n));
    let (form, report) = symplectic_from_endomorphism(&op, t.tol);
    ensure(report.valid(), || {
        format!("report {:?}", report.violations())
    })?;
    ensure(form.kind() == FormKind::Skew, || "form is not skew".into())?;
    ensure(form.is_nondegenerate(t.tol), || "form is degenerate".into())?;
    let back = endomorphism_from_symplectic(&form, t.tol).map_err(err)?;
    Ok(relative_residual(&back.assemble(), &op.assemble()))
}

fn lambda_inducer(t: &Trial) -> Outcome {
    let data = ae_pair(t, None)?;
    let (_, metric) =
        metric_from_endomorphism(&diagonal_inducer(&data.j, Sign::Plus).map_err(err)?, t.tol);
    let (_, symplectic) =
        symplectic_from_endomorphism(&diagonal_inducer(&data.j, Sign::Minus).map_err(err)?, t.tol);
    ensure(metric.valid(), || {
        format!("λ = +1: {:?}", metric.violations())
    })?;
    ensure(symplectic.valid(), || {
        format!("λ = −1: {:?}", symplectic.violations())
    })?;
    Ok(0.0)
}

fn induced_metric_check(t: &Trial) -> Outcome {
    let g = any_metric(t)?;
    let op = musical_inducer(&g).map_err(err)?.scaled(2.0);
    let (form, report) = metric_from_endomorphism(&op, t.tol);
    ensure(report.valid(), || {
        format!("report {:?}", report.violations())
    })?;
    let gg = induced_metric(&g).map_err(err)?;
    Ok(relative_residual(form.gram(), gg.gram()))
}

fn nannicini(t: &Trial) -> Outcome {
    let data = sampler(t).ae_pair(AeKind::Hermitian, t.n).map_err(err)?;
    let form = nannicini_metric(&data.j, &data.g).map_err(err)?;
    let inducer = diagonal_inducer(&data.j, Sign::Plus)
        .and_then(|k| k.try_add(&musical_inducer(&data.g)?.scaled(2.0)))
        .map_err(err)?;
    let (induced, report) = metric_from_endomorphism(&inducer, t.tol);
    ensure(report.valid(), || {
        format!("report {:?}", report.violations())
    })?;
    Ok(relative_residual(form.gram(), induced.gram()))
}

fn induced_signature(t: &Trial) -> Outcome {
    let r = (t.seed % (t.n as u64 + 1)) as usize;
    let s = t.n - r;
    let g = random_metric(t.n, r, s, Seed(t.seed)).map_err(err)?;
    let sig = signature(&induced_metric(&g).map_err(err)?, t.tol).map_err(err)?;
    ensure(sig == (2 * r, 2 * s), || {
        format!("signature {sig:?} for ({r},{s})")
    })?;
    Ok(0.0)
}

fn f0_metric(t: &Trial) -> Outcome {
    let n = t.n;
    let mut s = sampler(t);
    let d = dim(n);
    let block_diagonal = {
        let r1 = (t.seed % (n as u64 + 1)) as usize;
        let r2 = ((t.seed / 7) % (n as u64 + 1)) as usize;
        let a = s.metric(r1, n - r1).map_err(err)?;
        let b = s.metric(r2, n - r2).map_err(err)?;
        let a = a.gram().clone();
        let b = b.gram().clone();
        Matrix::from_fn(2 * n, 2 * n, |r, c| match (r < n, c < n) {
            (true, true) => a[(r, c)],
            (false, false) => b[(r - n, c - n)],
            _ => 0.0,
        })
    };
    let off_diagonal = {
        let p = s.invertible(n);
        let mut m = Matrix::zeros(2 * n, 2 * n);
        m.view_mut((0, n), (n, n)).copy_from(&p);
        m.view_mut((n, 0), (n, n)).copy_from(&p.transpose());
        m
    };
    let generic = {
        let (form, _) = metric_from_endomorphism(&s.metric_inducer(d), t.tol);
        form.gram().clone()
    };
    let metric = |m: Matrix| BilinearForm::new(m, FormKind::Symmetric).map_err(err);
    let block = metric(block_diagonal)?;
    let definite = matches!(block.signature(t.tol), Ok((_, 0)));
    let expected = if definite {
        StructureName::ParaNorden
    } else {
        StructureName::ProductPseudoRiemannian
    };
    let f = f0(d);
    worst([
        expect_class("block diagonal", &f, &block, expected, t.tol),
        expect_class(
            "off diagonal",
            &f,
            &metric(off_diagonal)?,
            StructureName::ParaHermitian,
            t.tol,
        ),
        expect_class(
            "generic",
            &f,
            &metric(generic)?,
            StructureName::Incompatible,
            t.tol,
        ),
    ])
}

fn f0_g0(t: &Trial) -> Outcome {
    let d = dim(t.n);
    let c = expect_class("ℱ₀", &f0(d), &g0(d), StructureName::ParaHermitian, t.tol)?;
    let phi = fundamental_tensor_with(&f0(d), &g0(d), t.tol).map_err(err)?;
    Ok(c.max(relative_residual(phi.form.gram(), omega0(d).gram())))
}

fn g0_existence(t: &Trial) -> Outcome {
    let n = t.n;
    let mut s = sampler(t);
    let omega = s.symplectic(n).map_err(err)?;
    let data = s.ae_pair(AeKind::Hermitian, n).map_err(err)?;
    let inputs = [
        build_musical(&omega, Sign::Minus).map_err(err)?,
        build_diagonal(&data.j, Sign::Minus).map_err(err)?,
    ];
    let id = Matrix::identity(n, n);
    worst(inputs.iter().map(|op| {
        let (j, attempts) = extract_base_complex_traced(op, t.tol).map_err(err)?;
        ensure(attempts <= n, || format!("{attempts} attempts"))?;
        Ok((&j * &j + &id).norm() / id.norm())
    }))
}

fn jg_g0(t: &Trial) -> Outcome {
    let g = any_metric(t)?;
    let g0 = g0(dim(t.n));
    worst([
        expect_class(
            "𝒥_g",
            &build_musical(&g, Sign::Minus).map_err(err)?,
            &g0,
            StructureName::Norden,
            t.tol,
        ),
        expect_class(
            "ℱ_g",
            &build_musical(&g, Sign::Plus).map_err(err)?,
            &g0,
            StructureName::ProductPseudoRiemannian,
            t.tol,
        ),
    ])
}

fn jom_g0(t: &Trial) -> Outcome {
    let w = sampler(t).symplectic(t.n).map_err(err)?;
    let g0 = g0(dim(t.n));
    worst([
        expect_class(
            "𝒥_ω",
            &build_musical(&w, Sign::Minus).map_err(err)?,
            &g0,
            StructureName::IndefiniteHermitian,
            t.tol,
        ),
        expect_class(
            "ℱ_ω",
            &build_musical(&w, Sign::Plus).map_err(err)?,
            &g0,
            StructureName::ParaHermitian,
            t.tol,
        ),
    ])
}

fn jlamj_g0(t: &Trial) -> Outcome {
    let data = ae_pair(t, Some(Sign::Minus))?;
    let g0 = g0(dim(t.n));
    worst([
        expect_class(
            "λ = −1",
            &build_diagonal(&data.j, Sign::Minus).map_err(err)?,
            &g0,
            StructureName::IndefiniteHermitian,
            t.tol,
        ),
        expect_class(
            "λ = +1",
            &build_diagonal(&data.j, Sign::Plus).map_err(err)?,
            &g0,
            StructureName::Norden,
            t.tol,
        ),
    ])
}

fn flamf_g0(t: &Trial) -> Outcome {
    let data = ae_pair(t, Some(Sign::Plus))?;
    let g0 = g0(dim(t.n));
    worst([
        expect_class(
            "λ = −1",
            &build_diagonal(&data.j, Sign::Minus).map_err(err)?,
            &g0,
            StructureName::ParaHermitian,
            t.tol,
        ),
        expect_class(
            "λ = +1",
            &build_diagonal(&data.j, Sign::Plus).map_err(err)?,
            &g0,
            StructureName::ProductPseudoRiemannian,
            t.tol,
        ),
    ])
}

fn triangular_iff(t: &Trial) -> Outcome {
    let data = ae_pair(t, None)?;
    let base = BaseData::from_ae(&data);
    let g0 = g0(dim(t.n));
    let (families, compatible, name) = match data.alpha {
        Sign::Minus => (
            [Family::JJgFlat, Family::JJgSharp],
            data.epsilon == Sign::Plus,
            StructureName::Norden,
        ),
        Sign::Plus => (
            [Family::FFgFlat, Family::FFgSharp],
            data.epsilon == Sign::Minus,
            StructureName::ProductPseudoRiemannian,
        ),
    };
    let expected = if compatible {
        name
    } else {
        StructureName::Incompatible
    };
    worst(
        families
            .into_iter()
            .map(|f| expect_class(f.id(), &build(f, &base, t.tol)?, &g0, expected, t.tol)),
    )
}

fn mixed_iff(t: &Trial) -> Outcome {
    let data = ae_pair(t, None)?;
    let base = BaseData::from_ae(&data);
    let g0 = g0(dim(t.n));
    let (family, compatible, name) = match data.alpha {
        Sign::Minus => (
            Family::FJg,
            data.epsilon == Sign::Plus,
            StructureName::ProductPseudoRiemannian,
        ),
        Sign::Plus => (
            Family::JFg,
            data.epsilon == Sign::Minus,
            StructureName::Norden,
        ),
    };
    let expected = if compatible {
        name
    } else {
        StructureName::Incompatible
    };
    expect_class(
        family.id(),
        &build(family, &base, t.tol)?,
        &g0,
        expected,
        t.tol,
    )
}

fn jg_gg(t: &Trial) -> Outcome {
    let g = any_metric(t)?;
    let definite = is_definite(&g, t.tol);
    let gg = induced_metric(&g).map_err(err)?;
    let base = BaseData {
        g: Some(g.clone()),
        ..BaseData::default()
    };
    let jg = build(Family::Jg, &base, t.tol)?;
    let fg = build(Family::Fg, &base, t.tol)?;
    let fg_name = named(
        Sign::Plus,
        Sign::Plus,
        definite,
        polynomial_class(&fg, t.tol).is_paracomplex(),
    );
    worst([
        expect_class(
            "𝒥_g",
            &jg,
            &gg,
            named(Sign::Minus, Sign::Plus, definite, false),
            t.tol,
        ),
        expect_class("ℱ_g", &fg, &gg, fg_name, t.tol),
        twin(Family::Jg, DesignatedMetric::Induced, &base, t.tol),
        twin(Family::Fg, DesignatedMetric::Induced, &base, t.tol),
    ])
}

/// `family` with `𝒢_g` classified as `(α, ε)` and matched to its closed form.
fn induced_case(
    family: Family,
    data: &AeManifoldData,
    alpha: Sign,
    epsilon: Sign,
    t: &Trial,
) -> Outcome {
    let base = BaseData::from_ae(data);
    let op = build(family, &base, t.tol)?;
    let gg = induced_metric(&data.g).map_err(err)?;
    let para = polynomial_class(&op, t.tol).is_paracomplex();
    let expected = named(alpha, epsilon, is_definite(&data.g, t.tol), para);
    worst([
        expect_class(family.id(), &op, &gg, expected, t.tol),
        twin(family, DesignatedMetric::Induced, &base, t.tol),
    ])
}

fn phi_gg(t: &Trial) -> Outcome {
    let data = ae_pair(t, None)?;
    let e = data.epsilon;
    worst([
        induced_case(Family::Jphi, &data, Sign::Minus, e, t),
        induced_case(Family::Fphi, &data, Sign::Plus, e, t),
    ])
}

fn jlamj_gg(t: &Trial) -> Outcome {
    let data = ae_pair(t, Some(Sign::Minus))?;
    let e = data.epsilon;
    worst(Sign::ALL.map(|l| induced_case(Family::JlamJ(l), &data, Sign::Minus, e, t)))
}

fn flamf_gg(t: &Trial) -> Outcome {
    let data = ae_pair(t, Some(Sign::Plus))?;
    let e = data.epsilon;
    worst(Sign::ALL.map(|l| induced_case(Family::FlamF(l), &data, Sign::Plus, e, t)))
}

fn mixed_gg(t: &Trial, alpha: Sign, family: Family, name: StructureName) -> Outcome {
    let data = ae_pair(t, Some(alpha))?;
    if data.epsilon == Sign::Minus {
        let base = BaseData::from_ae(&data);
        let gg = induced_metric(&data.g).map_err(err)?;
        worst([
            expect_class(family.id(), &build(family, &base, t.tol)?, &gg, name, t.tol),
            twin(family, DesignatedMetric::Induced, &base, t.tol),
        ])
    } else {
        let base = BaseData::from_ae(&data);
        let gg = induced_metric(&data.g).map_err(err)?;
        expect_class(
            family.id(),
            &build(family, &base, t.tol)?,
            &gg,
            StructureName::Incompatible,
            t.tol,
        )
    }
}

fn fjg_gg(t: &Trial) -> Outcome {
    mixed_gg(
        t,
        Sign::Minus,
        Family::FJg,
        StructureName::ProductPseudoRiemannian,
    )
}

fn jfg_gg(t: &Trial) -> Outcome {
    mixed_gg(
        t,
        Sign::Plus,
        Family::JFg,
        StructureName::IndefiniteHermitian,
    )
}

fn f0_commutation_check(t: &Trial) -> Outcome {
    let n = t.n;
    let raw = sampler(t).block_operator(dim(n));
    let z = Matrix::zeros(n, n);
    let (op, expected) = match t.seed % 3 {
        0 => (
            BlockOperator::new(raw.h().clone(), z.clone(), z, raw.k().clone()).map_err(err)?,
            Commutation::Commutes,
        ),
        1 => (
            BlockOperator::new(z.clone(), raw.sigma().clone(), raw.tau().clone(), z)
                .map_err(err)?,
            Commutation::AntiCommutes,
        ),
        _ => (raw, Commutation::Neither),
    };
    let found = f0_commutation(&op, t.tol);
    ensure(found == expected, || {
        format!("{} instead of {}", found.as_str(), expected.as_str())
    })?;
    let (a, f) = (op.assemble(), f0(dim(n)).assemble());
    let sign = match expected {
        Commutation::Commutes => 1.0,
        Commutation::AntiCommutes => -1.0,
        Commutation::Neither => return Ok(0.0),
    };
    Ok(relative_residual(&(&f * &a), &(&a * &f * sign)))
}

fn expect_triple(
    what: &str,
    f: &BlockOperator,
    j: &BlockOperator,
    kind: TripleKind,
    k: &BlockOperator,
    tol: Tolerance,
) -> Outcome {
    let r = classify_triple(f, j, tol);
    ensure(r.kind == kind, || {
        format!("{what}: {} instead of {}", r.kind, kind)
    })?;
    let product = r.k.ok_or_else(|| format!("{what}: no product"))?;
    Ok(relative_residual(&product.assemble(), &k.assemble()))
}

fn fg_triple(t: &Trial) -> Outcome {
    let g = any_metric(t)?;
    let fg = build_musical(&g, Sign::Plus).map_err(err)?;
    let jg = build_musical(&g, Sign::Minus).map_err(err)?;
    expect_triple(
        "(ℱ₀, ℱ_g)",
        &f0(dim(t.n)),
        &fg,
        TripleKind::Biparacomplex,
        &jg,
        t.tol,
    )
}

fn fom_triple(t: &Trial) -> Outcome {
    let w = sampler(t).symplectic(t.n).map_err(err)?;
    let fw = build_musical(&w, Sign::Plus).map_err(err)?;
    let jw = build_musical(&w, Sign::Minus).map_err(err)?;
    expect_triple(
        "(ℱ₀, ℱ_ω)",
        &f0(dim(t.n)),
        &fw,
        TripleKind::Biparacomplex,
        &jw,
        t.tol,
    )
}

fn jlamj_triple(t: &Trial) -> Outcome {
    let data = ae_pair(t, Some(Sign::Minus))?;
    let jp = build_diagonal(&data.j, Sign::Plus).map_err(err)?;
    let jm = build_diagonal(&data.j, Sign::Minus).map_err(err)?;
    expect_triple(
        "(𝒥_{+1,J}, 𝒥_{−1,J})",
        &jp,
        &jm,
        TripleKind::Bicomplex,
        &f0(dim(t.n)),
        t.tol,
    )
}

fn flamf_triple(t: &Trial) -> Outcome {
    let data = ae_pair(t, Some(Sign::Plus))?;
    let fp = build_diagonal(&data.j, Sign::Plus).map_err(err)?;
    let fm = build_diagonal(&data.j, Sign::Minus).map_err(err)?;
    expect_triple(
        "(ℱ_{+1,F}, ℱ_{−1,F})",
        &fp,
        &fm,
        TripleKind::Hyperproduct,
        &-f0(dim(t.n)),
        t.tol,
    )
}

/// The named triples on data with `alpha`, then the combination law on
/// `combined`.
fn triples_of(t: &Trial, alpha: Sign, names: [TripleName; 4], combined: TripleName) -> Outcome {
    let data = ae_pair(t, Some(alpha))?;
    let mut residuals: Vec<Outcome> = names
        .iter()
        .map(|&name| {
            let (f, j, k) = canonical_triple(name, &data).map_err(err)?;
            expect_triple(name.id(), &f, &j, name.expected_kind(), &k, t.tol)
        })
        .collect();
    let (f, f2, j) = canonical_triple(combined, &data).map_err(err)?;
    let mut s = sampler(t);
    let coefficients = (3.0 * s.uniform(), 3.0 * s.uniform(), 3.0 * s.uniform());
    residuals.push((|| {
        let c = combine(coefficients, (&f, &f2, &j), t.tol).map_err(err)?;
        let a = c.op.assemble();
        let id = Matrix::identity(2 * t.n, 2 * t.n);
        let (x, y, z) = coefficients;
        Ok(relative_residual(
            &(&a * &a),
            &(id * (x * x + y * y - z * z)),
        ))
    })());
    worst(residuals)
}

fn triple_mjg(t: &Trial) -> Outcome {
    use TripleName::*;
    triples_of(t, Sign::Minus, [HyperC, BiCPhi, BiCFg, BiparaC], BiparaC)
}

fn triple_mfg(t: &Trial) -> Outcome {
    use TripleName::*;
    triples_of(
        t,
        Sign::Plus,
        [HyperP, BiparaP1, BiparaP2, BiCProduct],
        BiparaP2,
    )
}

fn kahler_example(t: &Trial) -> Outcome {
    let data = sampler(t).ae_pair(AeKind::Hermitian, t.n).map_err(err)?;
    let base = BaseData::from_ae(&data);
    let jphi = build(Family::Jphi, &base, t.tol)?;
    let jm = build(Family::JlamJ(Sign::Minus), &base, t.tol)?;
    let jp = build(Family::JlamJ(Sign::Plus), &base, t.tol)?;
    ensure(is_almost_kahler(&jphi, &jm, t.tol).is_some(), || {
        "(𝒥_φ, 𝒥_{−1,J}) is not almost Kähler".into()
    })?;
    ensure(is_almost_kahler(&jp, &jm, t.tol).is_none(), || {
        "(𝒥_{+1,J}, 𝒥_{−1,J}) is almost Kähler".into()
    })?;
    Ok(0.0)
}

fn kahler_roundtrip_check(t: &Trial) -> Outcome {
    let kd = sampler(t).kahler_data(t.n).map_err(err)?;
    let r = kahler_roundtrip(&kd, t.tol);
    if r.ok {
        Ok(r.max_error)
    } else {
        fail(r.diagnostic.unwrap_or("round trip failed"))
    }
}
