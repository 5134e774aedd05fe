use std::collections::BTreeSet;

use crate::exact::Rat;

use super::classify::{psi_unvanishing, split_psi};
use super::{conormal, OrbitError, ParabolicDatum, Perm, Root, RootSet};

pub(super) fn lambda_um_from(um: &RootSet, n: usize) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for i in 0..n {
        for j in i + 1..n {
            if [Root(i, j), Root(i, n + j), Root(n + i, n + j)]
                .iter()
                .any(|r| um.contains(r))
            {
                out.insert((i, j));
            }
        }
    }
    out
}

/// `Lambda^{um}`: pairs `i < j <= n` touched by an unmatched root.
pub fn lambda_um(omega: &Perm, p: &ParabolicDatum) -> Result<BTreeSet<(usize, usize)>, OrbitError> {
    if !psi_unvanishing(omega, p) {
        return Err(OrbitError::PsiVanishing(omega.to_string()));
    }
    Ok(lambda_um_from(&split_psi(omega, p).um, p.n()))
}

/// The weight and derivative relations on `{0, ..., n-1}` and their closures
/// under chains `i = i_0 < i_1 < ... < i_l = j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relations {
    pub weightly: BTreeSet<(usize, usize)>,
    pub weightly_closure: BTreeSet<(usize, usize)>,
    pub derivatively: BTreeSet<(usize, usize)>,
    pub derivatively_closure: BTreeSet<(usize, usize)>,
}

#[allow(clippy::needless_range_loop)]
fn closure(n: usize, base: &BTreeSet<(usize, usize)>) -> BTreeSet<(usize, usize)> {
    let mut reach = vec![vec![false; n]; n];
    for &(i, j) in base {
        reach[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if reach[i][k] {
                for j in 0..n {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    let mut out = BTreeSet::new();
    for (i, row) in reach.iter().enumerate() {
        for (j, &r) in row.iter().enumerate() {
            if r {
                out.insert((i, j));
            }
        }
    }
    out
}

pub fn relation_closures(omega: &Perm, p: &ParabolicDatum) -> Result<Relations, OrbitError> {
    if !psi_unvanishing(omega, p) {
        return Err(OrbitError::PsiVanishing(omega.to_string()));
    }
    let n = p.n();
    let split = split_psi(omega, p);
    let weightly = lambda_um_from(&split.um, n);
    let derivatively = conormal::labels(omega, p, &split)
        .iter()
        .map(|e| (e.1, e.0 % n))
        .collect();
    Ok(Relations {
        weightly_closure: closure(n, &weightly),
        derivatively_closure: closure(n, &derivatively),
        weightly,
        derivatively,
    })
}

/// `exp(omega(i)) + exp(omega(n+i)) - exp(omega(j)) - exp(omega(n+j))`, where
/// a position's exponent is the real exponent of the block containing it.
pub fn chain_exponent_gap(
    omega: &Perm,
    p: &ParabolicDatum,
    block_exponents: &[Rat],
    i: usize,
    j: usize,
) -> Rat {
    let n = p.n();
    let e = |k: usize| block_exponents[p.block_of(omega.apply(k))];
    e(i) + e(n + i) - e(j) - e(n + j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> ParabolicDatum {
        ParabolicDatum::new(s.parse().unwrap())
    }

    #[test]
    fn sigma5_lambda_um() {
        let r = relation_closures(&"3,5,6,1,2,4".parse().unwrap(), &datum("2+2+2")).unwrap();
        let want: BTreeSet<_> = [(0, 1), (0, 2), (1, 2)].into_iter().collect();
        assert_eq!(r.weightly, want);
        assert_eq!(r.weightly_closure, want);
    }

    #[test]
    fn matching_and_open_orbits() {
        let r = relation_closures(&"1,3,5,2,4,6".parse().unwrap(), &datum("2+2+2")).unwrap();
        assert!(r.weightly.is_empty());
        let r = relation_closures(&"3,4,1,2".parse().unwrap(), &datum("2+2")).unwrap();
        assert!(r.derivatively.is_empty());
    }

    #[test]
    fn closure_is_transitive() {
        let base: BTreeSet<_> = [(0, 1), (1, 3), (3, 4)].into_iter().collect();
        let c = closure(5, &base);
        assert!(c.contains(&(0, 4)) && c.contains(&(1, 4)));
        assert!(!c.contains(&(0, 2)));
    }
}
