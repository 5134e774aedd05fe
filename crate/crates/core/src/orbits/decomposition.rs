use super::classify::psi_unvanishing;
use super::{in_p_omega, OrbitError, ParabolicDatum, Perm, Root, RootSet};

/// Root supports of the two factors in `P^omega cap S = R_omega . V_omega`.
///
/// A root `alpha_{i,j}` of the diagonal `GL_n` is listed in both copies,
/// `(i, j)` and `(n+i, n+j)`; the unipotent part contributes `alpha_{i,n+j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupDecomposition {
    pub r_roots: RootSet,
    pub v_roots: RootSet,
}

pub(super) fn decompose(omega: &Perm, p: &ParabolicDatum) -> GroupDecomposition {
    let n = p.n();
    let inp = |k, l| in_p_omega(omega, p, k, l);
    let diag = |i: usize, j: usize| inp(i, j) && inp(n + i, n + j);
    let mut r_roots = RootSet::new();
    let mut v_roots = RootSet::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !diag(i, j) {
                continue;
            }
            // Levi part of P_1 cap P_2 when the opposite root is present too
            let target = if diag(j, i) {
                &mut r_roots
            } else {
                &mut v_roots
            };
            target.insert(Root(i, j));
            target.insert(Root(n + i, n + j));
        }
    }
    for i in 0..n {
        for j in 0..n {
            if !inp(i, n + j) {
                continue;
            }
            let levi = i == j && p.block_of(omega.apply(i)) == p.block_of(omega.apply(n + i));
            if levi {
                r_roots.insert(Root(i, n + i));
            } else {
                v_roots.insert(Root(i, n + j));
            }
        }
    }
    GroupDecomposition { r_roots, v_roots }
}

pub fn group_decomposition(
    omega: &Perm,
    p: &ParabolicDatum,
) -> Result<GroupDecomposition, OrbitError> {
    if !psi_unvanishing(omega, p) {
        return Err(OrbitError::PsiVanishing(omega.to_string()));
    }
    Ok(decompose(omega, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gl6(w: &str) -> GroupDecomposition {
        let p = ParabolicDatum::new("2+2+2".parse().unwrap());
        group_decomposition(&w.parse().unwrap(), &p).unwrap()
    }

    #[test]
    fn sigma3_levi_part() {
        let g = gl6("3,4,5,1,2,6");
        for (i, j) in [(1, 2), (2, 1), (4, 5), (5, 4), (3, 6)] {
            assert!(g.r_roots.contains(&Root(i - 1, j - 1)), "a({i},{j})");
        }
    }

    #[test]
    fn sigma5_torus_only() {
        assert!(gl6("3,5,6,1,2,4").r_roots.is_empty());
    }

    #[test]
    fn gl2_open_orbit() {
        let p = ParabolicDatum::new("1+1".parse().unwrap());
        let g = group_decomposition(&"2,1".parse().unwrap(), &p).unwrap();
        assert!(g.r_roots.is_empty() && g.v_roots.is_empty());
    }
}
