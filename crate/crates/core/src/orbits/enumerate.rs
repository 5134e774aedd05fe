use std::collections::BTreeSet;

use super::{ParabolicDatum, Perm};

/// Minimal-length double coset representatives `^{P1} W_m ^{P2}`: all `w`
/// with `w(alpha_k) > 0` for `k` in `delta2` and `w^{-1}(alpha_k) > 0` for
/// `k` in `delta1` (root indices 0-based, `alpha_k = alpha_{k,k+1}`).
///
/// Output is in lexicographic order.
pub fn relative_weyl_set(
    delta1: &BTreeSet<usize>,
    delta2: &BTreeSet<usize>,
    m: usize,
) -> Vec<Perm> {
    struct Search<'a> {
        m: usize,
        delta1: &'a BTreeSet<usize>,
        delta2: &'a BTreeSet<usize>,
        images: Vec<usize>,
        used: Vec<bool>,
        out: Vec<Perm>,
    }

    impl Search<'_> {
        fn go(&mut self) {
            let pos = self.images.len();
            if pos == self.m {
                self.out
                    .push(Perm::from_images(self.images.clone()).unwrap());
                return;
            }
            for v in 0..self.m {
                if self.used[v] {
                    continue;
                }
                // value v-1 must sit to the left of v
                if v > 0 && self.delta1.contains(&(v - 1)) && !self.used[v - 1] {
                    continue;
                }
                if pos > 0 && self.delta2.contains(&(pos - 1)) && self.images[pos - 1] > v {
                    continue;
                }
                self.used[v] = true;
                self.images.push(v);
                self.go();
                self.images.pop();
                self.used[v] = false;
            }
        }
    }

    let mut s = Search {
        m,
        delta1,
        delta2,
        images: Vec::with_capacity(m),
        used: vec![false; m],
        out: Vec::new(),
    };
    s.go();
    s.out
}

/// A representative `omega = gamma . sigma` with `sigma` acting on the
/// first `n` letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub omega: Perm,
    pub gamma: Perm,
    pub sigma: Perm,
}

/// Simple roots of the two parabolics `P_{1,gamma}`, `P_{2,gamma}` of `GL_n`.
pub fn inner_parabolics(gamma: &Perm, p: &ParabolicDatum) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let n = p.n();
    let alive = |k: usize| gamma.apply(k + 1) == gamma.apply(k) + 1 && p.is_simple(gamma.apply(k));
    let p1 = (0..n.saturating_sub(1)).filter(|&k| alive(k)).collect();
    let p2 = (n..2 * n - 1)
        .filter(|&k| alive(k))
        .map(|k| k - n)
        .collect();
    (p1, p2)
}

/// `Delta_Q` for the `(n, n)` parabolic.
pub fn delta_q(n: usize) -> BTreeSet<usize> {
    (0..2 * n - 1).filter(|&k| k != n - 1).collect()
}

/// `gamma . sigma` with `sigma` in `S_n` embedded in the first `n` letters.
pub fn combine(gamma: &Perm, sigma: &Perm) -> Perm {
    let n = sigma.len();
    let images = (0..gamma.len())
        .map(|k| {
            if k < n {
                gamma.apply(sigma.apply(k))
            } else {
                gamma.apply(k)
            }
        })
        .collect();
    Perm::from_images(images).unwrap()
}

/// Display order: Coxeter length descending, then lexicographic.
pub fn display_order(a: &Perm, b: &Perm) -> std::cmp::Ordering {
    b.length().cmp(&a.length()).then_with(|| a.cmp(b))
}

/// The orbit representatives `Omega` of the Shalika subgroup on `P \ GL_{2n}`.
pub fn enumerate_omega(p: &ParabolicDatum) -> Vec<Factorization> {
    let n = p.n();
    let mut out = Vec::new();
    for gamma in relative_weyl_set(p.delta_p(), &delta_q(n), 2 * n) {
        let (p1, p2) = inner_parabolics(&gamma, p);
        for sigma in relative_weyl_set(&p1, &p2, n) {
            out.push(Factorization {
                omega: combine(&gamma, &sigma),
                gamma: gamma.clone(),
                sigma,
            });
        }
    }
    out.sort_by(|x, y| display_order(&x.omega, &y.omega));
    out
}

/// Recovers `(gamma, sigma)` from `omega`, or `None` when `omega` is not in `Omega`.
pub fn factorize(omega: &Perm, p: &ParabolicDatum) -> Option<Factorization> {
    let n = p.n();
    if omega.len() != 2 * n {
        return None;
    }
    let mut first: Vec<usize> = omega.images()[..n].to_vec();
    first.sort_unstable();
    let gamma_images: Vec<usize> = first.iter().chain(&omega.images()[n..]).copied().collect();
    let gamma = Perm::from_images(gamma_images).ok()?;
    let ginv = gamma.inverse();
    let sigma = Perm::from_images((0..n).map(|k| ginv.apply(omega.apply(k))).collect()).ok()?;

    let ok_gamma = relative_weyl_set_contains(&gamma, p.delta_p(), &delta_q(n));
    let (p1, p2) = inner_parabolics(&gamma, p);
    if ok_gamma && relative_weyl_set_contains(&sigma, &p1, &p2) {
        Some(Factorization {
            omega: omega.clone(),
            gamma,
            sigma,
        })
    } else {
        None
    }
}

/// Membership test for [`relative_weyl_set`].
pub fn relative_weyl_set_contains(
    w: &Perm,
    delta1: &BTreeSet<usize>,
    delta2: &BTreeSet<usize>,
) -> bool {
    let inv = w.inverse();
    delta2.iter().all(|&k| w.apply(k) < w.apply(k + 1))
        && delta1.iter().all(|&k| inv.apply(k) < inv.apply(k + 1))
}
