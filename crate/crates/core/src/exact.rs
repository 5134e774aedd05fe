//! Exact scalars: rationals, Gaussian rationals and split-torus characters.
//!
//! Everything that the decision procedures compare for equality (exponents,
//! complex parameters, modular characters) lives here, so no floating point
//! ever enters a verdict.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },
    #[error("torus character length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// A rational number in lowest terms with positive denominator.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rat(Ratio<i64>);

impl Rat {
    pub fn new(numerator: i64, denominator: i64) -> Result<Self, ExactError> {
        if denominator == 0 {
            return Err(ExactError::ZeroDenominator);
        }
        Ok(Rat(Ratio::new(numerator, denominator)))
    }

    pub fn int(value: i64) -> Self {
        Rat(Ratio::from_integer(value))
    }

    pub fn zero() -> Self {
        Rat(Ratio::zero())
    }

    pub fn one() -> Self {
        Rat(Ratio::one())
    }

    pub fn numer(&self) -> i64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> i64 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i64 {
        *self.0.signum().numer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn checked_div(&self, rhs: &Rat) -> Result<Rat, ExactError> {
        if rhs.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(Rat(self.0 / rhs.0))
    }

    pub fn recip(&self) -> Result<Rat, ExactError> {
        Rat::one().checked_div(self)
    }
}

/// Total order on rational values.
pub fn rat_cmp(a: &Rat, b: &Rat) -> Ordering {
    a.cmp(b)
}

impl From<i64> for Rat {
    fn from(value: i64) -> Self {
        Rat::int(value)
    }
}

impl Add for Rat {
    type Output = Rat;
    fn add(self, rhs: Rat) -> Rat {
        Rat(self.0 + rhs.0)
    }
}

impl Sub for Rat {
    type Output = Rat;
    fn sub(self, rhs: Rat) -> Rat {
        Rat(self.0 - rhs.0)
    }
}

impl Mul for Rat {
    type Output = Rat;
    fn mul(self, rhs: Rat) -> Rat {
        Rat(self.0 * rhs.0)
    }
}

/// Panics on a zero divisor, like integer division. Use [`Rat::checked_div`]
/// where the divisor is not known to be nonzero.
impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        self.checked_div(&rhs).expect("rational division by zero")
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom() == 1 {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::Parse {
            kind: "rational",
            input: s.to_string(),
        };
        let parse_int = |t: &str| -> Result<i64, ExactError> {
            if t.is_empty() || t.starts_with('+') {
                return Err(bad());
            }
            t.parse::<i64>().map_err(|_| bad())
        };
        match s.split_once('/') {
            None => Ok(Rat::int(parse_int(s)?)),
            Some((p, q)) => {
                let q = parse_int(q)?;
                if q <= 0 {
                    return Err(bad());
                }
                Rat::new(parse_int(p)?, q)
            }
        }
    }
}

/// A complex number with rational real and imaginary parts.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GaussRat {
            re,
            im: Rat::zero(),
        }
    }

    pub fn int(value: i64) -> Self {
        GaussRat::real(Rat::int(value))
    }

    pub fn zero() -> Self {
        GaussRat::real(Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re, -self.im)
    }

    pub fn norm_sq(&self) -> Rat {
        self.re * self.re + self.im * self.im
    }

    pub fn checked_div(&self, rhs: &GaussRat) -> Result<GaussRat, ExactError> {
        let d = rhs.norm_sq();
        if d.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let num = *self * rhs.conj();
        Ok(GaussRat::new(num.re / d, num.im / d))
    }

    /// Scales by a rational.
    pub fn scale(&self, c: Rat) -> Self {
        GaussRat::new(self.re * c, self.im * c)
    }
}

impl From<Rat> for GaussRat {
    fn from(value: Rat) -> Self {
        GaussRat::real(value)
    }
}

impl Add for GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: GaussRat) -> GaussRat {
        GaussRat::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: GaussRat) -> GaussRat {
        GaussRat::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: GaussRat) -> GaussRat {
        GaussRat::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

impl Div for GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: GaussRat) -> GaussRat {
        self.checked_div(&rhs).expect("gaussian division by zero")
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re, -self.im)
    }
}

// "re" alone when real, otherwise "re+imi" / "re-imi".
impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.im.signum() < 0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussRat {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ExactError::Parse {
            kind: "gaussian rational",
            input: s.to_string(),
        };
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussRat::real(s.parse().map_err(|_| bad())?));
        };
        // The real part is mandatory, so the separating sign is never at 0.
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .find(|&i| !body[..i].ends_with(['+', '-', '/']))
            .ok_or_else(bad)?;
        let re: Rat = body[..split].parse().map_err(|_| bad())?;
        let im_text = &body[split..];
        let im: Rat = match im_text.strip_prefix('+') {
            Some(rest) => rest.parse().map_err(|_| bad())?,
            None => im_text.parse().map_err(|_| bad())?,
        };
        Ok(GaussRat::new(re, im))
    }
}

/// A character of a split torus `(x_1, ..., x_n)`, written as
/// `prod sgn(x_i)^{p_i} |x_i|^{e_i}` with integer exponents `e_i` and sign
/// parities `p_i` in `{0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TorusCharVec {
    exponents: Vec<i64>,
    parities: Vec<u8>,
}

impl TorusCharVec {
    pub fn identity(n: usize) -> Self {
        TorusCharVec {
            exponents: vec![0; n],
            parities: vec![0; n],
        }
    }

    pub fn new(exponents: Vec<i64>, parities: Vec<u8>) -> Result<Self, ExactError> {
        if exponents.len() != parities.len() {
            return Err(ExactError::LengthMismatch {
                left: exponents.len(),
                right: parities.len(),
            });
        }
        let parities = parities.into_iter().map(|p| p & 1).collect();
        Ok(TorusCharVec {
            exponents,
            parities,
        })
    }

    /// The absolute-value character `|x_1|^{e_1} ... |x_n|^{e_n}`.
    pub fn from_exponents(exponents: Vec<i64>) -> Self {
        let n = exponents.len();
        TorusCharVec {
            exponents,
            parities: vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn parities(&self) -> &[u8] {
        &self.parities
    }

    pub fn is_identity(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0) && self.parities.iter().all(|&p| p == 0)
    }

    /// Multiplies in the monomial `(x_i / x_j)^power` (signs included).
    pub fn mul_ratio(&mut self, i: usize, j: usize, power: i64) {
        if i == j {
            return;
        }
        self.exponents[i] += power;
        self.exponents[j] -= power;
        let odd = (power.rem_euclid(2)) as u8;
        self.parities[i] ^= odd;
        self.parities[j] ^= odd;
    }

    pub fn abs(&self) -> Self {
        TorusCharVec::from_exponents(self.exponents.clone())
    }

    pub fn inverse(&self) -> Self {
        TorusCharVec {
            exponents: self.exponents.iter().map(|e| -e).collect(),
            parities: self.parities.clone(),
        }
    }
}

impl fmt::Display for TorusCharVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(",");
        write!(
            f,
            "([{}],[{}])",
            join(self.exponents.iter().map(|e| e.to_string()).collect()),
            join(self.parities.iter().map(|p| p.to_string()).collect())
        )
    }
}

pub fn tchar_mul(a: &TorusCharVec, b: &TorusCharVec) -> Result<TorusCharVec, ExactError> {
    if a.len() != b.len() {
        return Err(ExactError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(TorusCharVec {
        exponents: a
            .exponents
            .iter()
            .zip(&b.exponents)
            .map(|(x, y)| x + y)
            .collect(),
        parities: a
            .parities
            .iter()
            .zip(&b.parities)
            .map(|(x, y)| x ^ y)
            .collect(),
    })
}

/// Whether `|lhs|^2 = |rhs|` as absolute-value characters.
pub fn tchar_square_equals(lhs: &TorusCharVec, rhs: &TorusCharVec) -> Result<bool, ExactError> {
    if lhs.len() != rhs.len() {
        return Err(ExactError::LengthMismatch {
            left: lhs.len(),
            right: rhs.len(),
        });
    }
    Ok(lhs
        .exponents
        .iter()
        .zip(&rhs.exponents)
        .all(|(l, r)| 2 * l == *r))
}

/// Rank of a list of sparse rational vectors over a `dim`-dimensional space,
/// by Gaussian elimination with exact arithmetic.
pub fn rational_rank(dim: usize, rows: &[Vec<(usize, Rat)>]) -> usize {
    // pivot column -> sparse reduced row with leading entry 1 at that column
    let mut pivots: Vec<Option<Vec<(usize, Rat)>>> = vec![None; dim];
    let mut rank = 0;
    let mut row = vec![Rat::zero(); dim];
    for sparse in rows {
        row.iter_mut().for_each(|v| *v = Rat::zero());
        for &(c, v) in sparse {
            row[c] = row[c] + v;
        }
        for c in 0..dim {
            if row[c].is_zero() {
                continue;
            }
            match &pivots[c] {
                Some(p) => {
                    let f = row[c];
                    for &(k, v) in p {
                        row[k] = row[k] - f * v;
                    }
                }
                None => {
                    let lead = row[c];
                    let reduced = (c..dim)
                        .filter(|&k| !row[k].is_zero())
                        .map(|k| (k, row[k] / lead))
                        .collect();
                    pivots[c] = Some(reduced);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
