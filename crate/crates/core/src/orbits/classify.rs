use std::collections::BTreeSet;
use std::fmt;

use super::{
    conormal, decomposition, factorize, relations, Factorization, Marker, MatrixUnit, OrbitError,
    ParabolicDatum, Perm, Root, RootSet,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    PsiVanishing,
    Matching,
    Unmatching,
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClassTag::PsiVanishing => "PsiVanishing",
            ClassTag::Matching => "Matching",
            ClassTag::Unmatching => "Unmatching",
        })
    }
}

/// Everything attached to one orbit representative. For psi-vanishing
/// orbits only `omega`, `gamma`, `sigma` and `class` carry information.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDescriptor {
    pub omega: Perm,
    pub gamma: Perm,
    pub sigma: Perm,
    pub class: ClassTag,
    pub psi_ma: RootSet,
    pub psi_wh: RootSet,
    pub psi_um: RootSet,
    /// Involution on the blocks `{0, ..., r-1}`; present for matching orbits.
    pub s_omega: Option<Perm>,
    pub conormal: Vec<MatrixUnit>,
    pub lambda_um: BTreeSet<(usize, usize)>,
    pub r_roots: RootSet,
    pub v_roots: RootSet,
}

/// `omega(k) > omega(n+k)` or `alpha_{omega(k), omega(n+k)}` simple in `P`, for all `k <= n`.
pub fn psi_unvanishing(omega: &Perm, p: &ParabolicDatum) -> bool {
    let n = p.n();
    (0..n).all(|k| {
        let (x, y) = (omega.apply(k), omega.apply(n + k));
        x > y || (y == x + 1 && p.is_simple(x))
    })
}

/// `Psi_{P,omega} = omega^{-1}(Delta_P)`.
pub fn psi_set(omega: &Perm, p: &ParabolicDatum) -> RootSet {
    let inv = omega.inverse();
    p.delta_p()
        .iter()
        .map(|&d| Root(inv.apply(d), inv.apply(d + 1)))
        .collect()
}

pub(super) struct PsiSplit {
    pub ma: RootSet,
    pub wh: RootSet,
    pub um: RootSet,
}

pub(super) fn split_psi(omega: &Perm, p: &ParabolicDatum) -> PsiSplit {
    let n = p.n();
    let psi = psi_set(omega, p);
    let mut split = PsiSplit {
        ma: RootSet::new(),
        wh: RootSet::new(),
        um: RootSet::new(),
    };
    for r in &psi {
        if r.0 < n && r.1 == r.0 + n {
            split.wh.insert(*r);
        } else if psi.contains(&r.iota(n)) {
            split.ma.insert(*r);
        } else {
            split.um.insert(*r);
        }
    }
    split
}

fn build_s(omega: &Perm, p: &ParabolicDatum) -> Result<Perm, OrbitError> {
    let n = p.n();
    let r = p.blocks();
    let inconsistent = |k: usize| OrbitError::SOmegaInconsistent {
        omega: omega.to_string(),
        position: k + 1,
    };
    let mut s: Vec<Option<usize>> = vec![None; r];
    let set = |s: &mut Vec<Option<usize>>, i: usize, j: usize, k: usize| match s[i] {
        Some(prev) if prev != j => Err(inconsistent(k)),
        _ => {
            s[i] = Some(j);
            Ok(())
        }
    };
    let mut deferred = Vec::new();
    for k in 0..n {
        match (p.marker(omega.apply(k)), p.marker(omega.apply(n + k))) {
            (Marker::A(i), Marker::A(j)) => {
                set(&mut s, i, j, k)?;
                set(&mut s, j, i, k)?;
            }
            (Marker::A(i), Marker::B(j)) if i == j => set(&mut s, i, i, k)?,
            (Marker::B(i), Marker::B(j)) => deferred.push((i, j, k)),
            _ => return Err(inconsistent(k)),
        }
    }
    let mut images = Vec::with_capacity(r);
    for (i, x) in s.iter().enumerate() {
        let j = x.ok_or_else(|| inconsistent(i))?;
        if i == j && p.composition().parts()[i] != 2 {
            return Err(inconsistent(i));
        }
        images.push(j);
    }
    for (i, j, k) in deferred {
        if images[i] != j {
            return Err(inconsistent(k));
        }
    }
    let perm = Perm::from_images(images).map_err(|_| inconsistent(0))?;
    if !perm.is_involution() {
        return Err(inconsistent(0));
    }
    Ok(perm)
}

/// The block involution `s_omega` of a matching orbit.
pub fn s_omega(omega: &Perm, p: &ParabolicDatum) -> Result<Perm, OrbitError> {
    let d = classify(omega, p)?;
    match d.class {
        ClassTag::Matching => Ok(d.s_omega.expect("matching orbits carry s_omega")),
        _ => Err(OrbitError::NotMatching(omega.to_string())),
    }
}

pub(super) fn describe(f: Factorization, p: &ParabolicDatum) -> OrbitDescriptor {
    let Factorization {
        omega,
        gamma,
        sigma,
    } = f;
    let mut d = OrbitDescriptor {
        omega,
        gamma,
        sigma,
        class: ClassTag::PsiVanishing,
        psi_ma: RootSet::new(),
        psi_wh: RootSet::new(),
        psi_um: RootSet::new(),
        s_omega: None,
        conormal: Vec::new(),
        lambda_um: BTreeSet::new(),
        r_roots: RootSet::new(),
        v_roots: RootSet::new(),
    };
    if !psi_unvanishing(&d.omega, p) {
        return d;
    }
    let split = split_psi(&d.omega, p);
    d.class = if split.um.is_empty() {
        ClassTag::Matching
    } else {
        ClassTag::Unmatching
    };
    d.conormal = conormal::labels(&d.omega, p, &split);
    d.lambda_um = relations::lambda_um_from(&split.um, p.n());
    let g = decomposition::decompose(&d.omega, p);
    d.r_roots = g.r_roots;
    d.v_roots = g.v_roots;
    d.psi_ma = split.ma;
    d.psi_wh = split.wh;
    d.psi_um = split.um;
    if d.class == ClassTag::Matching {
        // Well defined on matching orbits; a failure here is a bug.
        d.s_omega = Some(build_s(&d.omega, p).expect("s_omega on a matching orbit"));
    }
    d
}

pub fn classify(omega: &Perm, p: &ParabolicDatum) -> Result<OrbitDescriptor, OrbitError> {
    let f = factorize(omega, p).ok_or_else(|| OrbitError::NotInOmega {
        omega: omega.to_string(),
        comp: p.composition().to_string(),
    })?;
    Ok(describe(f, p))
}
