//! Shalika-subgroup orbits on partial flag manifolds `P \ GL_{2n}`.
//!
//! Indices are 0-based throughout; `Display` impls print them 1-based.
//! For a Weyl element `omega`, `P^omega` is the conjugate with
//! `E_{k,l}` in `p^omega` iff `E_{omega(k),omega(l)}` is in `p`.

mod classify;
mod composition;
mod conormal;
mod decomposition;
mod enumerate;
mod modchar;
mod perm;
mod relations;
mod roots;

use thiserror::Error;

pub use classify::{classify, psi_set, psi_unvanishing, s_omega, ClassTag, OrbitDescriptor};
pub use composition::{Composition, Marker, ParabolicDatum};
pub use conormal::{conormal_basis, conormal_labels, direct_sum_ranks, DirectSumRanks};
pub use decomposition::{group_decomposition, GroupDecomposition};
pub use enumerate::{
    combine, delta_q, display_order, enumerate_omega, factorize, inner_parabolics,
    relative_weyl_set, relative_weyl_set_contains, Factorization,
};
pub use modchar::mod_char_vectors;
pub use perm::{AllPerms, Perm};
pub use relations::{chain_exponent_gap, lambda_um, relation_closures, Relations};
pub use roots::{format_roots, MatrixUnit, Root, RootSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrbitError {
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("cannot parse {kind} from {input:?}")]
    Parse { kind: &'static str, input: String },
    #[error("empty composition")]
    EmptyComposition,
    #[error("block size {0} is not cuspidal (parts must be 1 or 2)")]
    NonCuspidal(usize),
    #[error("composition sums to {0}, which is odd")]
    OddDegree(usize),
    #[error("{omega} is not an orbit representative for {comp}")]
    NotInOmega { omega: String, comp: String },
    #[error("{0} is psi-vanishing")]
    PsiVanishing(String),
    #[error("{0} is not a matching orbit")]
    NotMatching(String),
    #[error("s_omega is inconsistent at position {position} for {omega}")]
    SOmegaInconsistent { omega: String, position: usize },
    #[error("rank check failed for {omega}: |N| = {conormal}, rank(p+s) = {rank}, dim = {dim}")]
    RankCheck {
        omega: String,
        conormal: usize,
        rank: usize,
        dim: usize,
    },
}

/// `E_{k,l}` lies in `p^omega`.
#[inline]
pub fn in_p_omega(omega: &Perm, p: &ParabolicDatum, k: usize, l: usize) -> bool {
    p.contains_unit(omega.apply(k), omega.apply(l))
}

/// Full orbit table for a composition, in display order.
pub fn orbit_table(p: &ParabolicDatum) -> Vec<OrbitDescriptor> {
    enumerate_omega(p)
        .into_iter()
        .map(|f| classify::describe(f, p))
        .collect()
}
