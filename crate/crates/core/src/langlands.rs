//! Archimedean Langlands data for `GL_m` over `R` or `C`.
//!
//! Characters `chi_{k,lambda}`, relative discrete series `D_{k,lambda}` of
//! `GL_2(R)`, irreducible representations of the Weil group and the
//! `eta`-symplectic test on L-parameters.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::exact::{GaussRat, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LanglandsError {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch {
        expected: ArchField,
        found: ArchField,
    },
    #[error("real characters need k in {{0,1}}, got k = {0}")]
    RealCharParity(i64),
    #[error("relative discrete series D_{{k,lambda}} only exist over R")]
    DiscOverComplex,
    #[error("D_{{k,lambda}} needs k >= 0, got k = {0}")]
    NegativeDiscWeight(i64),
    #[error("sigma_{{k,lambda}} needs k != 0")]
    ZeroTwoDimWeight,
    #[error("D_{{0,lambda}} is a limit of discrete series; expand it into characters first")]
    LimitNotAllowed,
    #[error("exponents must be non-increasing: factor {index} has Re(lambda) = {next} > {prev}")]
    ExponentOrder { index: usize, prev: Rat, next: Rat },
    #[error("standard module has no factors")]
    EmptyModule,
    #[error("operation needs the real field")]
    NeedsReal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArchField {
    Real,
    Complex,
}

impl fmt::Display for ArchField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArchField::Real => "R",
            ArchField::Complex => "C",
        })
    }
}

/// `chi_{k,lambda}`: `sgn^k |t|^lambda` over `R`, `(z/|z|)^k |z|^lambda` over `C`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultChar {
    field: ArchField,
    k: i64,
    lambda: GaussRat,
}

impl MultChar {
    pub fn new(field: ArchField, k: i64, lambda: GaussRat) -> Result<Self, LanglandsError> {
        if field == ArchField::Real && !(0..=1).contains(&k) {
            return Err(LanglandsError::RealCharParity(k));
        }
        Ok(MultChar { field, k, lambda })
    }

    pub fn real(k: i64, lambda: GaussRat) -> Result<Self, LanglandsError> {
        MultChar::new(ArchField::Real, k, lambda)
    }

    pub fn complex(k: i64, lambda: GaussRat) -> Self {
        MultChar {
            field: ArchField::Complex,
            k,
            lambda,
        }
    }

    pub fn trivial(field: ArchField) -> Self {
        MultChar {
            field,
            k: 0,
            lambda: GaussRat::zero(),
        }
    }

    pub fn field(&self) -> ArchField {
        self.field
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    pub fn lambda(&self) -> GaussRat {
        self.lambda
    }

    pub fn exponent(&self) -> Rat {
        self.lambda.re
    }

    pub fn mul(&self, other: &MultChar) -> Result<MultChar, LanglandsError> {
        same_field(self.field, other.field)?;
        let k = match self.field {
            ArchField::Real => (self.k + other.k).rem_euclid(2),
            ArchField::Complex => self.k + other.k,
        };
        Ok(MultChar {
            field: self.field,
            k,
            lambda: self.lambda + other.lambda,
        })
    }

    pub fn inverse(&self) -> MultChar {
        let k = match self.field {
            ArchField::Real => self.k,
            ArchField::Complex => -self.k,
        };
        MultChar {
            field: self.field,
            k,
            lambda: -self.lambda,
        }
    }
}

impl fmt::Display for MultChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chi^{}_{{{},{}}}", self.field, self.k, self.lambda)
    }
}

fn same_field(expected: ArchField, found: ArchField) -> Result<(), LanglandsError> {
    if expected == found {
        Ok(())
    } else {
        Err(LanglandsError::FieldMismatch { expected, found })
    }
}

/// An irreducible representation of `W_R` or `W_C`.
///
/// `TwoDim { k, lambda }` is `sigma_{k,lambda} = Ind chi^C_{k,2 lambda}` and
/// only occurs over `R`. Since `sigma_{k,lambda} = sigma_{-k,lambda}` the
/// weight is stored as `|k| >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeilIrr {
    OneDim(MultChar),
    TwoDim { k: i64, lambda: GaussRat },
}

impl WeilIrr {
    pub fn two_dim(k: i64, lambda: GaussRat) -> Result<Self, LanglandsError> {
        if k == 0 {
            return Err(LanglandsError::ZeroTwoDimWeight);
        }
        Ok(WeilIrr::TwoDim { k: k.abs(), lambda })
    }

    pub fn dim(&self) -> usize {
        match self {
            WeilIrr::OneDim(_) => 1,
            WeilIrr::TwoDim { .. } => 2,
        }
    }

    pub fn field(&self) -> ArchField {
        match self {
            WeilIrr::OneDim(c) => c.field,
            WeilIrr::TwoDim { .. } => ArchField::Real,
        }
    }
}

impl fmt::Display for WeilIrr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeilIrr::OneDim(c) => write!(f, "{c}"),
            WeilIrr::TwoDim { k, lambda } => write!(f, "sigma_{{{k},{lambda}}}"),
        }
    }
}

pub fn dual(x: &WeilIrr) -> WeilIrr {
    match x {
        WeilIrr::OneDim(c) => WeilIrr::OneDim(c.inverse()),
        WeilIrr::TwoDim { k, lambda } => WeilIrr::TwoDim {
            k: *k,
            lambda: -*lambda,
        },
    }
}

/// `x (x) (eta o r)`. On `C^x` the reciprocity map is `z -> z zbar`, so the
/// sign part of `eta` does not see a two-dimensional part.
pub fn twist(x: &WeilIrr, eta: &MultChar) -> Result<WeilIrr, LanglandsError> {
    same_field(x.field(), eta.field)?;
    Ok(match x {
        WeilIrr::OneDim(c) => WeilIrr::OneDim(c.mul(eta)?),
        WeilIrr::TwoDim { k, lambda } => WeilIrr::TwoDim {
            k: *k,
            lambda: *lambda + eta.lambda,
        },
    })
}

/// `det sigma_{k,lambda} = sgn^{k+1} |.|^{2 lambda}`.
pub fn det_two_dim(k: i64, lambda: GaussRat) -> MultChar {
    MultChar {
        field: ArchField::Real,
        k: (k + 1).rem_euclid(2),
        lambda: lambda + lambda,
    }
}

/// Central character of `D_{k,lambda}`; for `k = 0` this is the central
/// character of `|.|^lambda x sgn|.|^lambda`, which the same formula gives.
pub fn central_char_disc(k: i64, lambda: GaussRat) -> MultChar {
    det_two_dim(k, lambda)
}

/// Irreducible generic representations of `GL_2` accepted by [`gl2_has_shalika`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gl2Generic {
    Disc { k: i64, lambda: GaussRat },
    PrincipalSeries(MultChar, MultChar),
}

/// A generic irreducible representation of `GL_2` has a twisted Shalika
/// period exactly when its central character is `eta`.
pub fn gl2_has_shalika(rep: &Gl2Generic, eta: &MultChar) -> Result<bool, LanglandsError> {
    let central = match rep {
        Gl2Generic::Disc { k, lambda } => central_char_disc(*k, *lambda),
        Gl2Generic::PrincipalSeries(a, b) => a.mul(b)?,
    };
    same_field(central.field, eta.field)?;
    Ok(central == *eta)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LParameter {
    field: ArchField,
    parts: Vec<WeilIrr>,
}

impl LParameter {
    pub fn new(field: ArchField, parts: Vec<WeilIrr>) -> Result<Self, LanglandsError> {
        for p in &parts {
            same_field(field, p.field())?;
        }
        Ok(LParameter { field, parts })
    }

    pub fn field(&self) -> ArchField {
        self.field
    }

    pub fn parts(&self) -> &[WeilIrr] {
        &self.parts
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().map(WeilIrr::dim).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CuspidalFactor {
    Char(MultChar),
    Disc { k: i64, lambda: GaussRat },
}

impl CuspidalFactor {
    pub fn disc(k: i64, lambda: GaussRat) -> Result<Self, LanglandsError> {
        if k < 0 {
            return Err(LanglandsError::NegativeDiscWeight(k));
        }
        Ok(CuspidalFactor::Disc { k, lambda })
    }

    pub fn lambda(&self) -> GaussRat {
        match self {
            CuspidalFactor::Char(c) => c.lambda,
            CuspidalFactor::Disc { lambda, .. } => *lambda,
        }
    }

    pub fn k(&self) -> i64 {
        match self {
            CuspidalFactor::Char(c) => c.k,
            CuspidalFactor::Disc { k, .. } => *k,
        }
    }

    pub fn exponent(&self) -> Rat {
        self.lambda().re
    }

    /// Block size in the Levi subgroup.
    pub fn size(&self) -> u8 {
        match self {
            CuspidalFactor::Char(_) => 1,
            CuspidalFactor::Disc { .. } => 2,
        }
    }

    fn is_disc(&self) -> bool {
        matches!(self, CuspidalFactor::Disc { .. })
    }
}

impl fmt::Display for CuspidalFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CuspidalFactor::Char(c) => write!(f, "{c}"),
            CuspidalFactor::Disc { k, lambda } => write!(f, "D_{{{k},{lambda}}}"),
        }
    }
}

/// Order used to normalize factor lists: exponent descending, then discrete
/// series before characters, then `k` descending, then `Im lambda` ascending.
pub fn factor_order(a: &CuspidalFactor, b: &CuspidalFactor) -> Ordering {
    b.exponent()
        .cmp(&a.exponent())
        .then_with(|| b.is_disc().cmp(&a.is_disc()))
        .then_with(|| b.k().cmp(&a.k()))
        .then_with(|| a.lambda().im.cmp(&b.lambda().im))
}

/// A standard module `pi_1 x ... x pi_r` with non-increasing exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardModule {
    field: ArchField,
    factors: Vec<CuspidalFactor>,
}

impl StandardModule {
    /// Checks the factor list as given; exponents must already be sorted.
    pub fn new(field: ArchField, factors: Vec<CuspidalFactor>) -> Result<Self, LanglandsError> {
        if factors.is_empty() {
            return Err(LanglandsError::EmptyModule);
        }
        for f in &factors {
            match f {
                CuspidalFactor::Char(c) => same_field(field, c.field)?,
                CuspidalFactor::Disc { k, .. } => {
                    if field != ArchField::Real {
                        return Err(LanglandsError::DiscOverComplex);
                    }
                    if *k < 0 {
                        return Err(LanglandsError::NegativeDiscWeight(*k));
                    }
                }
            }
        }
        for (index, w) in factors.windows(2).enumerate() {
            if w[1].exponent() > w[0].exponent() {
                return Err(LanglandsError::ExponentOrder {
                    index: index + 1,
                    prev: w[0].exponent(),
                    next: w[1].exponent(),
                });
            }
        }
        Ok(StandardModule { field, factors })
    }

    /// Sorts the factors by [`factor_order`] before validating.
    pub fn normalized(
        field: ArchField,
        mut factors: Vec<CuspidalFactor>,
    ) -> Result<Self, LanglandsError> {
        factors.sort_by(factor_order);
        StandardModule::new(field, factors)
    }

    pub fn field(&self) -> ArchField {
        self.field
    }

    pub fn factors(&self) -> &[CuspidalFactor] {
        &self.factors
    }

    /// Block sizes `(n_1, ..., n_r)`.
    pub fn composition(&self) -> Vec<u8> {
        self.factors.iter().map(CuspidalFactor::size).collect()
    }

    /// `2n`, the rank of the general linear group.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.size() as usize).sum()
    }

    pub fn has_limit(&self) -> bool {
        self.factors
            .iter()
            .any(|f| matches!(f, CuspidalFactor::Disc { k: 0, .. }))
    }

    /// The parameter with every `D_{0,lambda}` replaced by
    /// `chi_{0,lambda} + chi_{1,lambda}`.
    pub fn expanded_param(&self) -> LParameter {
        let mut parts = Vec::new();
        for f in &self.factors {
            match f {
                CuspidalFactor::Char(c) => parts.push(WeilIrr::OneDim(*c)),
                CuspidalFactor::Disc { k: 0, lambda } => {
                    for s in 0..2 {
                        parts.push(WeilIrr::OneDim(MultChar {
                            field: ArchField::Real,
                            k: s,
                            lambda: *lambda,
                        }));
                    }
                }
                CuspidalFactor::Disc { k, lambda } => parts.push(WeilIrr::TwoDim {
                    k: *k,
                    lambda: *lambda,
                }),
            }
        }
        LParameter {
            field: self.field,
            parts,
        }
    }
}

/// Parameter of a single cuspidal factor.
pub fn factor_param(f: &CuspidalFactor) -> Result<WeilIrr, LanglandsError> {
    match f {
        CuspidalFactor::Char(c) => Ok(WeilIrr::OneDim(*c)),
        CuspidalFactor::Disc { k: 0, .. } => Err(LanglandsError::LimitNotAllowed),
        CuspidalFactor::Disc { k, lambda } => WeilIrr::two_dim(*k, *lambda),
    }
}

pub fn langlands_param(m: &StandardModule) -> Result<LParameter, LanglandsError> {
    let parts = m
        .factors
        .iter()
        .map(factor_param)
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LParameter {
        field: m.field,
        parts,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticDecision {
    pub symplectic: bool,
    /// Index pairs into the parameter's parts; `(i, i)` marks a
    /// two-dimensional part of similitude `eta` standing alone.
    pub pairing: Vec<(usize, usize)>,
}

/// The partner class `c^vee . eta`.
pub fn partner(c: &WeilIrr, eta: &MultChar) -> Result<WeilIrr, LanglandsError> {
    twist(&dual(c), eta)
}

fn self_similitude(c: &WeilIrr, eta: &MultChar) -> bool {
    match c {
        WeilIrr::TwoDim { k, lambda } => det_two_dim(*k, *lambda) == *eta,
        WeilIrr::OneDim(_) => false,
    }
}

pub fn is_symplectic_eta(
    phi: &LParameter,
    eta: &MultChar,
) -> Result<SymplecticDecision, LanglandsError> {
    same_field(phi.field, eta.field)?;
    let no = SymplecticDecision {
        symplectic: false,
        pairing: Vec::new(),
    };
    if !phi.dim().is_multiple_of(2) {
        return Ok(no);
    }
    let mut classes: BTreeMap<WeilIrr, Vec<usize>> = BTreeMap::new();
    for (i, p) in phi.parts.iter().enumerate() {
        classes.entry(*p).or_default().push(i);
    }
    let mut pairing = Vec::new();
    for (c, idx) in &classes {
        if self_similitude(c, eta) {
            pairing.extend(idx.iter().map(|&i| (i, i)));
            continue;
        }
        let star = partner(c, eta)?;
        match star.cmp(c) {
            Ordering::Equal => {
                if idx.len() % 2 != 0 {
                    return Ok(no);
                }
                pairing.extend(idx.chunks(2).map(|w| (w[0], w[1])));
            }
            // the class with the larger key emits the pairs
            Ordering::Less => {
                let other = classes.get(&star).map_or(&[][..], Vec::as_slice);
                if other.len() != idx.len() {
                    return Ok(no);
                }
                pairing.extend(other.iter().zip(idx).map(|(&a, &b)| (a.min(b), a.max(b))));
            }
            Ordering::Greater => {
                if classes.get(&star).map_or(0, Vec::len) != idx.len() {
                    return Ok(no);
                }
            }
        }
    }
    pairing.sort_unstable();
    Ok(SymplecticDecision {
        symplectic: true,
        pairing,
    })
}

/// Whether the restriction to `GL_m^+(R)` splits: the one-dimensional parts
/// must come in pairs `{chi_{0,t}, chi_{1,t}}`.
pub fn restriction_reducible(phi: &LParameter) -> Result<bool, LanglandsError> {
    if phi.field != ArchField::Real {
        return Err(LanglandsError::NeedsReal);
    }
    let mut balance: BTreeMap<GaussRat, [usize; 2]> = BTreeMap::new();
    for p in &phi.parts {
        if let WeilIrr::OneDim(c) = p {
            balance.entry(c.lambda).or_default()[c.k as usize] += 1;
        }
    }
    Ok(balance.values().all(|[even, odd]| even == odd))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussRat {
        s.parse().unwrap()
    }

    fn rc(k: i64, l: &str) -> MultChar {
        MultChar::real(k, g(l)).unwrap()
    }

    fn sig(k: i64, l: &str) -> WeilIrr {
        WeilIrr::two_dim(k, g(l)).unwrap()
    }

    fn one(k: i64, l: &str) -> WeilIrr {
        WeilIrr::OneDim(rc(k, l))
    }

    fn param(parts: Vec<WeilIrr>) -> LParameter {
        LParameter::new(ArchField::Real, parts).unwrap()
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&one(1, "2")), one(1, "-2"));
        assert_eq!(dual(&sig(3, "1/2")), sig(3, "-1/2"));
        let c = WeilIrr::OneDim(MultChar::complex(2, g("0")));
        assert_eq!(dual(&c), WeilIrr::OneDim(MultChar::complex(-2, g("0"))));
    }

    #[test]
    fn twist_examples() {
        assert_eq!(twist(&sig(3, "1/2"), &rc(1, "1")).unwrap(), sig(3, "3/2"));
        assert_eq!(twist(&one(0, "1/2"), &rc(0, "0")).unwrap(), one(0, "1/2"));
        assert_eq!(twist(&one(1, "0"), &rc(1, "1")).unwrap(), one(0, "1"));
        let c = WeilIrr::OneDim(MultChar::complex(1, g("0")));
        assert!(matches!(
            twist(&c, &rc(0, "0")),
            Err(LanglandsError::FieldMismatch { .. })
        ));
    }

    #[test]
    fn det_and_central_char() {
        assert_eq!(det_two_dim(2, g("0")), rc(1, "0"));
        assert_eq!(det_two_dim(3, g("1/2")), rc(0, "1"));
        assert_eq!(det_two_dim(1, g("0")), rc(0, "0"));
        assert_eq!(central_char_disc(2, g("0")), rc(1, "0"));
        assert_eq!(central_char_disc(3, g("1/2")), rc(0, "1"));
        assert_eq!(central_char_disc(1, g("0")), rc(0, "0"));
    }

    #[test]
    fn gl2_shalika_examples() {
        let d = |k, l| Gl2Generic::Disc { k, lambda: g(l) };
        assert!(gl2_has_shalika(&d(2, "0"), &rc(1, "0")).unwrap());
        assert!(gl2_has_shalika(&d(3, "1/2"), &rc(0, "1")).unwrap());
        assert!(!gl2_has_shalika(&d(3, "1/2"), &rc(1, "1")).unwrap());
        let ps = Gl2Generic::PrincipalSeries(rc(1, "1/3"), rc(0, "-1/3"));
        assert!(gl2_has_shalika(&ps, &rc(1, "0")).unwrap());
    }

    #[test]
    fn langlands_param_examples() {
        let d = |k, l| CuspidalFactor::disc(k, g(l)).unwrap();
        let m = StandardModule::new(ArchField::Real, vec![d(3, "1/2")]).unwrap();
        assert_eq!(langlands_param(&m).unwrap().parts(), &[sig(3, "1/2")]);
        let m = StandardModule::new(
            ArchField::Real,
            vec![
                CuspidalFactor::Char(rc(0, "1/2")),
                CuspidalFactor::Char(rc(0, "-1/2")),
            ],
        )
        .unwrap();
        assert_eq!(
            langlands_param(&m).unwrap().parts(),
            &[one(0, "1/2"), one(0, "-1/2")]
        );
        let m = StandardModule::new(
            ArchField::Real,
            vec![d(3, "1/2"), CuspidalFactor::Char(rc(1, "0"))],
        )
        .unwrap();
        assert_eq!(
            langlands_param(&m).unwrap().parts(),
            &[sig(3, "1/2"), one(1, "0")]
        );
        let lim = StandardModule::new(ArchField::Real, vec![d(0, "0")]).unwrap();
        assert_eq!(langlands_param(&lim), Err(LanglandsError::LimitNotAllowed));
        assert_eq!(lim.expanded_param().parts(), &[one(0, "0"), one(1, "0")]);
    }

    #[test]
    fn module_validation() {
        let c = |k, l| CuspidalFactor::Char(rc(k, l));
        assert!(matches!(
            StandardModule::new(ArchField::Real, vec![c(0, "0"), c(0, "1")]),
            Err(LanglandsError::ExponentOrder { index: 1, .. })
        ));
        let m = StandardModule::normalized(ArchField::Real, vec![c(0, "0"), c(0, "1")]).unwrap();
        assert_eq!(m.factors()[0], c(0, "1"));
        assert_eq!(
            StandardModule::new(
                ArchField::Complex,
                vec![CuspidalFactor::disc(1, g("0")).unwrap()]
            ),
            Err(LanglandsError::DiscOverComplex)
        );
        assert_eq!(
            MultChar::real(2, g("0")),
            Err(LanglandsError::RealCharParity(2))
        );
    }

    #[test]
    fn tie_break_order() {
        let d = CuspidalFactor::disc(1, g("0")).unwrap();
        let d3 = CuspidalFactor::disc(3, g("0+1i")).unwrap();
        let c0 = CuspidalFactor::Char(rc(0, "0-1i"));
        let c1 = CuspidalFactor::Char(rc(1, "0"));
        let m = StandardModule::normalized(ArchField::Real, vec![c1, c0, d, d3]).unwrap();
        assert_eq!(m.factors(), &[d3, d, c1, c0]);
    }

    #[test]
    fn symplectic_examples() {
        let d = is_symplectic_eta(&param(vec![sig(3, "1/2"), sig(3, "1/2")]), &rc(1, "1")).unwrap();
        assert!(d.symplectic);
        assert_eq!(d.pairing, vec![(0, 1)]);

        let d = is_symplectic_eta(&param(vec![sig(2, "0")]), &rc(1, "0")).unwrap();
        assert!(d.symplectic);
        assert_eq!(d.pairing, vec![(0, 0)]);

        let d =
            is_symplectic_eta(&param(vec![one(0, "1/2"), one(0, "-1/2")]), &rc(0, "0")).unwrap();
        assert!(d.symplectic);
        assert_eq!(d.pairing, vec![(0, 1)]);

        assert!(
            !is_symplectic_eta(&param(vec![one(0, "0")]), &rc(0, "0"))
                .unwrap()
                .symplectic
        );
        assert!(
            !is_symplectic_eta(&param(vec![one(0, "1"), one(0, "0")]), &rc(0, "0"))
                .unwrap()
                .symplectic
        );
        // chi^2 = eta still needs a partner
        assert!(
            !is_symplectic_eta(&param(vec![one(0, "0"), one(1, "0")]), &rc(0, "0"))
                .unwrap()
                .symplectic
        );
        assert!(
            is_symplectic_eta(&param(vec![one(0, "0"), one(0, "0")]), &rc(0, "0"))
                .unwrap()
                .symplectic
        );
    }

    #[test]
    fn restriction_examples() {
        assert!(restriction_reducible(&param(vec![one(0, "0"), one(1, "0")])).unwrap());
        assert!(!restriction_reducible(&param(vec![one(0, "0"), one(0, "0")])).unwrap());
        assert!(restriction_reducible(&param(vec![sig(2, "0")])).unwrap());
        let c = LParameter::new(ArchField::Complex, vec![]).unwrap();
        assert_eq!(restriction_reducible(&c), Err(LanglandsError::NeedsReal));
    }
}
