use crate::exact::TorusCharVec;

use super::classify::{psi_unvanishing, split_psi};
use super::{OrbitError, ParabolicDatum, Perm, Root};

/// Modular characters on the torus `T cap S = {diag(t, t)}`, as monomials in
/// `x_1, ..., x_n`.
///
/// `lhs` is the modulus character of `P^omega cap S`; `rhs` is the
/// conjugated modulus character of `P` times the unmatched character
/// `chi_omega`. The two satisfy `lhs^2 = |rhs|`.
pub fn mod_char_vectors(
    omega: &Perm,
    p: &ParabolicDatum,
) -> Result<(TorusCharVec, TorusCharVec), OrbitError> {
    if !psi_unvanishing(omega, p) {
        return Err(OrbitError::PsiVanishing(omega.to_string()));
    }
    let n = p.n();
    let m = 2 * n;
    let split = split_psi(omega, p);
    let w = |i: usize| omega.apply(i);

    let mut lhs = TorusCharVec::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            if w(i) < w(j) {
                lhs.mul_ratio(i, j, 1);
            }
            if w(i) < w(n + j) {
                lhs.mul_ratio(i, j, 1);
            }
        }
    }
    for i in 0..n {
        if split.ma.contains(&Root(i, i + 1)) {
            lhs.mul_ratio(i, (i + 1) % n, -1);
        }
    }

    // On T cap S the coordinates x_{n+i} and x_i coincide.
    let inv = omega.inverse();
    let x = |pos: usize| inv.apply(pos) % n;
    let mut rhs = TorusCharVec::identity(n);
    for i in 0..m {
        for j in i + 1..m {
            rhs.mul_ratio(x(i), x(j), 1);
        }
    }
    for &d in p.delta_p() {
        rhs.mul_ratio(x(d), x(d + 1), -1);
    }
    for r in &split.um {
        rhs.mul_ratio(r.0 % n, r.1 % n, 1);
    }
    Ok((lhs, rhs))
}
