use crate::exact::{rational_rank, Rat};

use super::classify::{psi_unvanishing, split_psi, PsiSplit};
use super::{in_p_omega, MatrixUnit, OrbitError, ParabolicDatum, Perm, Root};

pub(super) fn labels(omega: &Perm, p: &ParabolicDatum, split: &PsiSplit) -> Vec<MatrixUnit> {
    let n = p.n();
    let in_psi = |r: Root| split.ma.contains(&r) || split.wh.contains(&r) || split.um.contains(&r);
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if omega.apply(i) < omega.apply(n + j) && !in_psi(Root(i, n + j)) {
                out.push(MatrixUnit(n + j, i));
            }
            if omega.apply(i) < omega.apply(j) && !in_psi(Root(i, j)) && !in_psi(Root(n + i, n + j))
            {
                out.push(MatrixUnit(j, i));
            }
        }
    }
    out.sort_unstable();
    out
}

/// The matrix units spanning `N_omega`, without the rank verification.
pub fn conormal_labels(omega: &Perm, p: &ParabolicDatum) -> Result<Vec<MatrixUnit>, OrbitError> {
    if !psi_unvanishing(omega, p) {
        return Err(OrbitError::PsiVanishing(omega.to_string()));
    }
    Ok(labels(omega, p, &split_psi(omega, p)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DirectSumRanks {
    /// `|N_omega|`.
    pub conormal: usize,
    /// `rank(p^omega + s)`.
    pub rank_ps: usize,
    /// `rank(p^omega + s + N_omega)`.
    pub rank_all: usize,
    /// `(2n)^2`.
    pub dim: usize,
}

impl DirectSumRanks {
    /// `gl_{2n} = N_omega (+) (p^omega + s)`.
    pub fn is_direct_sum(&self) -> bool {
        self.conormal + self.rank_ps == self.dim && self.rank_all == self.dim
    }
}

/// Spanning vectors of `p^omega + s` in the coordinates `E_{k,l} -> k*2n + l`.
fn ps_rows(omega: &Perm, p: &ParabolicDatum) -> Vec<Vec<(usize, Rat)>> {
    let n = p.n();
    let m = 2 * n;
    let one = Rat::one();
    let idx = |k: usize, l: usize| k * m + l;
    let mut rows = Vec::new();
    for i in 0..n {
        for j in 0..n {
            rows.push(vec![(idx(i, j), one), (idx(n + i, n + j), one)]);
            rows.push(vec![(idx(i, n + j), one)]);
        }
    }
    for k in 0..m {
        for l in 0..m {
            if k == l || in_p_omega(omega, p, k, l) {
                rows.push(vec![(idx(k, l), one)]);
            }
        }
    }
    rows
}

pub fn direct_sum_ranks(omega: &Perm, p: &ParabolicDatum) -> Result<DirectSumRanks, OrbitError> {
    let conormal = conormal_labels(omega, p)?;
    let m = p.degree();
    let mut rows = ps_rows(omega, p);
    let rank_ps = rational_rank(m * m, &rows);
    rows.extend(conormal.iter().map(|e| vec![(e.0 * m + e.1, Rat::one())]));
    let rank_all = rational_rank(m * m, &rows);
    Ok(DirectSumRanks {
        conormal: conormal.len(),
        rank_ps,
        rank_all,
        dim: m * m,
    })
}

/// `N_omega`, verified to complement `p^omega + s` by exact rank computation.
pub fn conormal_basis(omega: &Perm, p: &ParabolicDatum) -> Result<Vec<MatrixUnit>, OrbitError> {
    let ranks = direct_sum_ranks(omega, p)?;
    if !ranks.is_direct_sum() {
        return Err(OrbitError::RankCheck {
            omega: omega.to_string(),
            conormal: ranks.conormal,
            rank: ranks.rank_ps,
            dim: ranks.dim,
        });
    }
    conormal_labels(omega, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(s: &str) -> ParabolicDatum {
        ParabolicDatum::new(s.parse().unwrap())
    }

    #[test]
    fn open_orbits_have_no_conormal() {
        assert!(conormal_basis(&"2,1".parse().unwrap(), &datum("1+1"))
            .unwrap()
            .is_empty());
        assert!(conormal_basis(&"3,4,1,2".parse().unwrap(), &datum("2+2"))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn gl4_closed_matching_orbit() {
        let p = datum("2+2");
        let w: Perm = "1,3,2,4".parse().unwrap();
        let ranks = direct_sum_ranks(&w, &p).unwrap();
        assert!(ranks.is_direct_sum());
        assert_eq!(
            conormal_basis(&w, &p).unwrap(),
            vec![MatrixUnit(1, 0), MatrixUnit(3, 0)]
        );
    }

    #[test]
    fn vanishing_rejected() {
        let p = datum("2+2");
        assert!(matches!(
            conormal_basis(&"1,2,3,4".parse().unwrap(), &p),
            Err(OrbitError::PsiVanishing(_))
        ));
    }
}
