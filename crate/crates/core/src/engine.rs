//! Period verdicts, orbit compatibility and the restriction sign.

pub mod corpus;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::exact::{GaussRat, Rat};
use crate::langlands::{
    factor_param, gl2_has_shalika, is_symplectic_eta, langlands_param, partner,
    restriction_reducible, ArchField, CuspidalFactor, Gl2Generic, LanglandsError, MultChar,
    StandardModule,
};
use crate::orbits::{
    orbit_table, ClassTag, Composition, OrbitDescriptor, OrbitError, ParabolicDatum,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error(transparent)]
    Langlands(#[from] LanglandsError),
    #[error(transparent)]
    Orbit(#[from] OrbitError),
    #[error("the additive character parameter a must be nonzero")]
    ZeroPsi,
    #[error("orbit is for composition {orbit}, module has composition {module}")]
    CompositionMismatch { orbit: String, module: String },
    #[error("orbit {0} is not a matching orbit")]
    NotMatching(String),
    #[error("the linear-period equivalence is only available for generic irreducible input")]
    NotGeneric,
    #[error("the sign needs every factor to be a (limit of) relative discrete series")]
    NotAllDisc,
    #[error("the restriction to GL^+ is irreducible, so the sign is undefined")]
    RestrictionIrreducible,
    #[error("the parameter is not of eta-symplectic type")]
    NotSymplectic,
    #[error("n - p = {n} - {p} is odd")]
    ParityViolation { n: usize, p: usize },
    #[error("block sizes must be even and positive, got {0}")]
    OddBlock(u32),
    #[error("D_{{k,lambda}} needs k >= 0, got {0}")]
    NegativeWeight(i64),
}

/// The character `xi_{eta,psi_a}` data: the twist `eta` and `a != 0` in
/// `psi_a(x) = exp(2 pi a x sqrt(-1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShalikaSpec {
    eta: MultChar,
    a: Rat,
}

impl ShalikaSpec {
    pub fn new(eta: MultChar, a: Rat) -> Result<Self, EngineError> {
        if a.is_zero() {
            return Err(EngineError::ZeroPsi);
        }
        Ok(ShalikaSpec { eta, a })
    }

    pub fn with_unit_psi(eta: MultChar) -> Self {
        ShalikaSpec { eta, a: Rat::one() }
    }

    pub fn eta(&self) -> &MultChar {
        &self.eta
    }

    pub fn a(&self) -> Rat {
        self.a
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Exists,
    NotExists,
    NecessaryOnlyNotGeneric,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Exists => "Exists",
            Verdict::NotExists => "NotExists",
            Verdict::NecessaryOnlyNotGeneric => "NecessaryOnlyNotGeneric",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub necessary: bool,
    /// Pairing of the parameter's parts when `necessary` holds.
    pub pairing: Vec<(usize, usize)>,
    pub matching_orbits: usize,
    pub compatible_orbits: usize,
    pub witness: Option<OrbitDescriptor>,
    pub dim_upper_bound: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EpsilonReport {
    pub p: usize,
    pub q: usize,
    pub epsilon: i8,
}

pub fn parabolic_of(m: &StandardModule) -> Result<ParabolicDatum, EngineError> {
    Ok(ParabolicDatum::new(Composition::new(m.composition())?))
}

/// The orbit condition `pi_i = pi_{s(i)}^vee . eta` on a matching orbit;
/// fixed points of `s` need a Shalika period on the `GL_2` block.
pub fn compatible(
    orbit: &OrbitDescriptor,
    m: &StandardModule,
    eta: &MultChar,
) -> Result<bool, EngineError> {
    let s = match (&orbit.class, &orbit.s_omega) {
        (ClassTag::Matching, Some(s)) => s,
        _ => return Err(EngineError::NotMatching(orbit.omega.to_string())),
    };
    let factors = m.factors();
    let sizes = m.composition();
    if s.len() != factors.len() || !orbit_fits(orbit, &sizes) {
        return Err(EngineError::CompositionMismatch {
            orbit: orbit.omega.to_string(),
            module: Composition::new(sizes)
                .map(|c| c.to_string())
                .unwrap_or_else(|_| format!("{:?}", m.composition())),
        });
    }
    for i in 0..factors.len() {
        let j = s.apply(i);
        if j < i {
            continue;
        }
        let ok = if i == j {
            match factors[i] {
                CuspidalFactor::Disc { k, lambda } => {
                    gl2_has_shalika(&Gl2Generic::Disc { k, lambda }, eta)?
                }
                CuspidalFactor::Char(_) => false,
            }
        } else {
            factor_param(&factors[i])? == partner(&factor_param(&factors[j])?, eta)?
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

// The block involution only pairs blocks of equal size, so checking the sizes
// against the orbit's degree and the involution is enough to catch a
// mismatched composition.
fn orbit_fits(orbit: &OrbitDescriptor, sizes: &[u8]) -> bool {
    let degree: usize = sizes.iter().map(|&x| x as usize).sum();
    let Some(s) = &orbit.s_omega else {
        return false;
    };
    degree == orbit.omega.len()
        && (0..sizes.len())
            .all(|i| sizes[s.apply(i)] == sizes[i] && (s.apply(i) != i || sizes[i] == 2))
}

/// Same as [`shalika_decision`] against a precomputed orbit table.
pub fn decide_with_orbits(
    m: &StandardModule,
    eta: &MultChar,
    assume_generic_irreducible: bool,
    table: &[OrbitDescriptor],
) -> Result<PeriodReport, EngineError> {
    let decision = is_symplectic_eta(&langlands_param(m)?, eta)?;
    let mut matching_orbits = 0;
    let mut compatible_orbits = 0;
    let mut witness = None;
    for orbit in table.iter().filter(|o| o.class == ClassTag::Matching) {
        matching_orbits += 1;
        if compatible(orbit, m, eta)? {
            compatible_orbits += 1;
            if witness.is_none() {
                witness = Some(orbit.clone());
            }
        }
    }
    let verdict = match (decision.symplectic, assume_generic_irreducible) {
        (false, _) => Verdict::NotExists,
        (true, true) => Verdict::Exists,
        (true, false) => Verdict::NecessaryOnlyNotGeneric,
    };
    Ok(PeriodReport {
        necessary: decision.symplectic,
        pairing: decision.pairing,
        matching_orbits,
        compatible_orbits,
        witness,
        dim_upper_bound: compatible_orbits,
        verdict,
    })
}

pub fn shalika_decision(
    m: &StandardModule,
    spec: &ShalikaSpec,
    assume_generic_irreducible: bool,
) -> Result<PeriodReport, EngineError> {
    let table = orbit_table(&parabolic_of(m)?);
    decide_with_orbits(m, &spec.eta, assume_generic_irreducible, &table)
}

/// Twisted linear periods: for generic irreducible input these exist exactly
/// when twisted Shalika periods do.
pub fn linear_decision(
    m: &StandardModule,
    eta: &MultChar,
    assume_generic_irreducible: bool,
) -> Result<PeriodReport, EngineError> {
    if !assume_generic_irreducible {
        return Err(EngineError::NotGeneric);
    }
    shalika_decision(m, &ShalikaSpec::with_unit_psi(*eta), true)
}

/// `(sgn a)^p (-1)^{p(p-1)/2 + q}`.
pub fn epsilon_formula(p: usize, q: usize, sgn_a: i64) -> i8 {
    let mut e: i8 = if (p * p.saturating_sub(1) / 2 + q).is_multiple_of(2) {
        1
    } else {
        -1
    };
    if sgn_a < 0 && p % 2 == 1 {
        e = -e;
    }
    e
}

/// The sign `epsilon_pi` for `pi = D_{k_1,lambda_1} x ... x D_{k_n,lambda_n}`.
pub fn epsilon_pi(m: &StandardModule, spec: &ShalikaSpec) -> Result<EpsilonReport, EngineError> {
    if m.field() != ArchField::Real {
        return Err(LanglandsError::NeedsReal.into());
    }
    let mut p = 0;
    for f in m.factors() {
        match f {
            CuspidalFactor::Disc { k, lambda } => {
                if gl2_has_shalika(
                    &Gl2Generic::Disc {
                        k: *k,
                        lambda: *lambda,
                    },
                    &spec.eta,
                )? {
                    p += 1;
                }
            }
            CuspidalFactor::Char(_) => return Err(EngineError::NotAllDisc),
        }
    }
    let phi = m.expanded_param();
    if !restriction_reducible(&phi)? {
        return Err(EngineError::RestrictionIrreducible);
    }
    if !is_symplectic_eta(&phi, &spec.eta)?.symplectic {
        return Err(EngineError::NotSymplectic);
    }
    let n = m.factors().len();
    if !(n - p).is_multiple_of(2) {
        return Err(EngineError::ParityViolation { n, p });
    }
    let q = (n - p) / 2;
    Ok(EpsilonReport {
        p,
        q,
        epsilon: epsilon_formula(p, q, spec.a.signum()),
    })
}

/// Which of `psi`, `psi^{-1}` a representation has a twisted Shalika period for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PeriodSide {
    Psi,
    PsiInv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InductionVerdict {
    Guaranteed,
    NotGuaranteed,
}

/// Whether `pi_1 x pi_2` (blocks of size `n1`, `n2`) is guaranteed a
/// `(eta, psi)` period by the available periods of the two factors.
pub fn plus_induction_compatible(
    n1: u32,
    n2: u32,
    pi1_periods: &BTreeSet<PeriodSide>,
    pi2_periods: &BTreeSet<PeriodSide>,
) -> Result<InductionVerdict, EngineError> {
    for n in [n1, n2] {
        if n == 0 || n % 2 != 0 {
            return Err(EngineError::OddBlock(n));
        }
    }
    let case1 = (n1.is_multiple_of(4) || n2.is_multiple_of(4))
        && pi1_periods.contains(&PeriodSide::Psi)
        && pi2_periods.contains(&PeriodSide::Psi);
    let case2 = n1 % 4 == 2
        && n2 % 4 == 2
        && pi1_periods.contains(&PeriodSide::PsiInv)
        && pi2_periods.contains(&PeriodSide::Psi);
    Ok(if case1 || case2 {
        InductionVerdict::Guaranteed
    } else {
        InductionVerdict::NotGuaranteed
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Gl4Irreducibility {
    pub irreducible: bool,
    /// Set for `k = 0`, where the criterion is applied by extension to
    /// limits of discrete series rather than proved.
    pub remark_based: bool,
}

/// Irreducibility of `D_{k,lambda} x D_{k, z0 - lambda}`: fails exactly when
/// `2 lambda - z0` is a nonzero integer.
pub fn gl4_pair_irreducible(
    k: i64,
    lambda: GaussRat,
    z0: GaussRat,
) -> Result<Gl4Irreducibility, EngineError> {
    if k < 0 {
        return Err(EngineError::NegativeWeight(k));
    }
    let d = lambda + lambda - z0;
    let nonzero_integer = d.is_real() && d.re.is_integer() && !d.re.is_zero();
    Ok(Gl4Irreducibility {
        irreducible: !nonzero_integer,
        remark_based: k == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::{classify, Perm};

    fn g(s: &str) -> GaussRat {
        s.parse().unwrap()
    }

    fn rc(k: i64, l: &str) -> MultChar {
        MultChar::real(k, g(l)).unwrap()
    }

    fn disc(k: i64, l: &str) -> CuspidalFactor {
        CuspidalFactor::disc(k, g(l)).unwrap()
    }

    fn chi(k: i64, l: &str) -> CuspidalFactor {
        CuspidalFactor::Char(rc(k, l))
    }

    fn module(f: Vec<CuspidalFactor>) -> StandardModule {
        StandardModule::new(ArchField::Real, f).unwrap()
    }

    fn orbit(w: &str, comp: &str) -> OrbitDescriptor {
        let p = ParabolicDatum::new(comp.parse().unwrap());
        classify(&w.parse::<Perm>().unwrap(), &p).unwrap()
    }

    #[test]
    fn compatible_examples() {
        let m = module(vec![disc(3, "1/2"), disc(3, "1/2")]);
        let eta = rc(1, "1");
        assert!(compatible(&orbit("3,4,1,2", "2+2"), &m, &eta).unwrap());
        assert!(!compatible(&orbit("1,3,2,4", "2+2"), &m, &eta).unwrap());
        let m = module(vec![disc(2, "0")]);
        assert!(compatible(&orbit("1,2", "2"), &m, &rc(1, "0")).unwrap());
        assert!(matches!(
            compatible(&orbit("1,2,3,4", "2+2"), &m, &eta),
            Err(EngineError::NotMatching(_))
        ));
        assert!(matches!(
            compatible(&orbit("3,4,1,2", "2+2"), &m, &eta),
            Err(EngineError::CompositionMismatch { .. })
        ));
    }

    #[test]
    fn decision_examples() {
        let m = module(vec![disc(3, "1/2"), disc(3, "1/2")]);
        let spec = ShalikaSpec::with_unit_psi(rc(1, "1"));
        let r = shalika_decision(&m, &spec, true).unwrap();
        assert_eq!(r.verdict, Verdict::Exists);
        assert_eq!(r.witness.unwrap().omega.to_string(), "3,4,1,2");
        assert!(r.dim_upper_bound >= 1);
        assert_eq!(r.matching_orbits, 2);

        let m = module(vec![chi(0, "1/2"), chi(0, "-1/2")]);
        let spec = ShalikaSpec::with_unit_psi(rc(0, "0"));
        assert_eq!(
            shalika_decision(&m, &spec, false).unwrap().verdict,
            Verdict::NecessaryOnlyNotGeneric
        );

        let m = module(vec![chi(0, "1"), chi(0, "0")]);
        let r = shalika_decision(&m, &spec, true).unwrap();
        assert_eq!(r.verdict, Verdict::NotExists);
        assert_eq!(r.compatible_orbits, 0);
    }

    #[test]
    fn linear_examples() {
        let m = module(vec![disc(3, "1/2"), disc(3, "1/2")]);
        assert_eq!(
            linear_decision(&m, &rc(1, "1"), true).unwrap().verdict,
            Verdict::Exists
        );
        let m = module(vec![chi(0, "1"), chi(0, "0")]);
        assert_eq!(
            linear_decision(&m, &rc(0, "0"), true).unwrap().verdict,
            Verdict::NotExists
        );
        assert_eq!(
            linear_decision(&m, &rc(0, "0"), false),
            Err(EngineError::NotGeneric)
        );
    }

    #[test]
    fn epsilon_examples() {
        let spec = ShalikaSpec::new(rc(1, "0"), Rat::one()).unwrap();
        let r = epsilon_pi(&module(vec![disc(2, "0")]), &spec).unwrap();
        assert_eq!((r.p, r.q, r.epsilon), (1, 0, 1));
        let spec = ShalikaSpec::new(rc(1, "0"), Rat::int(-3)).unwrap();
        assert_eq!(
            epsilon_pi(&module(vec![disc(2, "0")]), &spec)
                .unwrap()
                .epsilon,
            -1
        );

        let spec = ShalikaSpec::new(rc(1, "1"), Rat::one()).unwrap();
        let r = epsilon_pi(&module(vec![disc(3, "1/2"), disc(3, "1/2")]), &spec).unwrap();
        assert_eq!((r.p, r.q, r.epsilon), (0, 1, -1));

        assert_eq!(epsilon_formula(3, 1, -1), -1);
        assert_eq!(
            ShalikaSpec::new(rc(0, "0"), Rat::zero()),
            Err(EngineError::ZeroPsi)
        );
        assert_eq!(
            epsilon_pi(&module(vec![chi(0, "0"), chi(1, "0")]), &spec),
            Err(EngineError::NotAllDisc)
        );
        let spec = ShalikaSpec::new(rc(0, "0"), Rat::one()).unwrap();
        assert_eq!(
            epsilon_pi(&module(vec![disc(2, "0")]), &spec),
            Err(EngineError::NotSymplectic)
        );
    }

    #[test]
    fn limit_factor_epsilon() {
        // D_{0,0} has central character sgn
        let spec = ShalikaSpec::new(rc(1, "0"), Rat::one()).unwrap();
        let r = epsilon_pi(&module(vec![disc(0, "0")]), &spec).unwrap();
        assert_eq!((r.p, r.q), (1, 0));
    }

    #[test]
    fn induction_examples() {
        let psi: BTreeSet<_> = [PeriodSide::Psi].into_iter().collect();
        let inv: BTreeSet<_> = [PeriodSide::PsiInv].into_iter().collect();
        assert_eq!(
            plus_induction_compatible(4, 2, &psi, &psi).unwrap(),
            InductionVerdict::Guaranteed
        );
        assert_eq!(
            plus_induction_compatible(2, 2, &inv, &psi).unwrap(),
            InductionVerdict::Guaranteed
        );
        assert_eq!(
            plus_induction_compatible(2, 2, &psi, &psi).unwrap(),
            InductionVerdict::NotGuaranteed
        );
        assert_eq!(
            plus_induction_compatible(3, 2, &psi, &psi),
            Err(EngineError::OddBlock(3))
        );
    }

    #[test]
    fn gl4_irreducibility_examples() {
        let one = g("1");
        assert!(gl4_pair_irreducible(3, g("1/2"), one).unwrap().irreducible);
        assert!(!gl4_pair_irreducible(3, g("3/2"), one).unwrap().irreducible);
        assert!(gl4_pair_irreducible(3, g("3/4"), one).unwrap().irreducible);
        assert!(gl4_pair_irreducible(0, g("1/2"), one).unwrap().remark_based);
        assert!(gl4_pair_irreducible(3, g("1+1i"), one).unwrap().irreducible);
    }
}
