//! Invariant and oracle suites behind the `verify` command.
//!
//! Each suite recomputes a quantity by a slower, independent route (full
//! scans of the symmetric group, direct root counting, exhaustive pairing
//! search) and compares it against the library.

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::corpus::{self, CorpusOptions};
use crate::engine::{
    decide_with_orbits, epsilon_formula, epsilon_pi, linear_decision, parabolic_of, ShalikaSpec,
};
use crate::exact::{tchar_square_equals, Rat, TorusCharVec};
use crate::langlands::{
    det_two_dim, dual, is_symplectic_eta, langlands_param, twist, LParameter, MultChar,
    StandardModule, WeilIrr,
};
use crate::orbits::{
    chain_exponent_gap, direct_sum_ranks, enumerate_omega, in_p_omega, mod_char_vectors,
    orbit_table, relation_closures, ClassTag, Composition, OrbitDescriptor, ParabolicDatum, Perm,
    Root,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: usize,
    pub first_counterexample: Option<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        SuiteReport {
            name,
            checked: 0,
            failures: 0,
            first_counterexample: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn compositions(max_n: usize) -> Vec<ParabolicDatum> {
    (1..=max_n)
        .flat_map(|n| Composition::all_of(2 * n))
        .map(ParabolicDatum::new)
        .collect()
}

fn sends_to_positive(w: &Perm, simple: &BTreeSet<usize>) -> bool {
    simple
        .iter()
        .all(|&k| Root(k, k + 1).image(w).is_positive())
}

/// `^{P1} W ^{P2}` by filtering all of `S_m`.
pub fn brute_relative_set(
    delta1: &BTreeSet<usize>,
    delta2: &BTreeSet<usize>,
    m: usize,
) -> Vec<Perm> {
    Perm::all(m)
        .filter(|w| sends_to_positive(w, delta2) && sends_to_positive(&w.inverse(), delta1))
        .collect()
}

/// The orbit set by a full scan of `S_{2n}` over all factorizations.
pub fn brute_omega(p: &ParabolicDatum) -> BTreeSet<Perm> {
    let n = p.n();
    let m = 2 * n;
    let q: BTreeSet<usize> = (0..m - 1).filter(|&k| k != n - 1).collect();
    let gammas = brute_relative_set(p.delta_p(), &q, m);
    let inner: Vec<(Perm, Perm, Vec<Perm>)> = gammas
        .into_iter()
        .map(|g| {
            let ginv = g.inverse();
            let pulled: Vec<Root> = p
                .delta_p()
                .iter()
                .map(|&d| Root(d, d + 1).image(&ginv))
                .collect();
            let p1 = pulled
                .iter()
                .filter(|r| r.1 == r.0 + 1 && r.1 < n)
                .map(|r| r.0)
                .collect();
            let p2 = pulled
                .iter()
                .filter(|r| r.1 == r.0 + 1 && r.0 >= n)
                .map(|r| r.0 - n)
                .collect();
            let sigmas = brute_relative_set(&p1, &p2, n);
            (g, ginv, sigmas)
        })
        .collect();
    let mut out = BTreeSet::new();
    for w in Perm::all(m) {
        for (_, ginv, sigmas) in &inner {
            let x = ginv.compose(&w);
            if (n..m).any(|k| x.apply(k) != k) {
                continue;
            }
            let sigma = Perm::from_images(x.images()[..n].to_vec()).unwrap();
            if sigmas.contains(&sigma) {
                out.insert(w.clone());
                break;
            }
        }
    }
    out
}

pub fn factorization_suite(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("factorization");
    for p in compositions(max_n) {
        let fast: Vec<Perm> = enumerate_omega(&p).into_iter().map(|f| f.omega).collect();
        let distinct: BTreeSet<Perm> = fast.iter().cloned().collect();
        r.check(distinct.len() == fast.len(), || {
            format!(
                "{}: enumerate_omega repeats a representative",
                p.composition()
            )
        });
        let scan = brute_omega(&p);
        r.check(distinct == scan, || {
            let missing: Vec<_> = scan.difference(&distinct).take(3).collect();
            let extra: Vec<_> = distinct.difference(&scan).take(3).collect();
            format!(
                "{}: missing {:?}, extra {:?}",
                p.composition(),
                missing,
                extra
            )
        });
    }
    r
}

/// psi-unvanishing: no `alpha_{i,n+i}` lands in the nilradical of `p^omega`.
fn oracle_unvanishing(w: &Perm, p: &ParabolicDatum) -> bool {
    let n = p.n();
    (0..n).all(|i| p.block_of(w.apply(i)) >= p.block_of(w.apply(n + i)))
}

pub fn classification_suite(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("classification");
    for p in compositions(max_n) {
        let n = p.n();
        for d in orbit_table(&p) {
            let w = &d.omega;
            let unv = oracle_unvanishing(w, &p);
            r.check(unv == (d.class != ClassTag::PsiVanishing), || {
                format!("{} {}: psi-vanishing mismatch", p.composition(), w)
            });
            if !unv {
                continue;
            }
            let winv = w.inverse();
            let psi: BTreeSet<Root> = p
                .delta_p()
                .iter()
                .map(|&k| Root(k, k + 1).image(&winv))
                .collect();
            let union: BTreeSet<Root> = d
                .psi_ma
                .iter()
                .chain(&d.psi_wh)
                .chain(&d.psi_um)
                .copied()
                .collect();
            let sizes = d.psi_ma.len() + d.psi_wh.len() + d.psi_um.len();
            r.check(union == psi && sizes == psi.len(), || {
                format!(
                    "{} {}: Psi-sets do not partition omega^-1(Delta_P)",
                    p.composition(),
                    w
                )
            });
            r.check(
                d.psi_ma.iter().all(|x| d.psi_ma.contains(&x.iota(n))),
                || format!("{} {}: Psi^ma not iota-stable", p.composition(), w),
            );
            r.check(d.psi_wh.iter().all(|x| x.0 < n && x.1 == x.0 + n), || {
                format!("{} {}: Psi^wh has a foreign root", p.composition(), w)
            });
            let matching = d.psi_um.is_empty();
            r.check(matching == (d.class == ClassTag::Matching), || {
                format!(
                    "{} {}: matching tag disagrees with Psi^um",
                    p.composition(),
                    w
                )
            });
            r.check(matching == d.s_omega.is_some(), || {
                format!("{} {}: s_omega presence", p.composition(), w)
            });
        }
    }
    r
}

/// Involutions of the blocks pairing equal sizes, fixing only size-2 blocks.
pub fn admissible_involutions(parts: &[u8]) -> BTreeSet<Perm> {
    fn rec(parts: &[u8], s: &mut Vec<Option<usize>>, out: &mut BTreeSet<Perm>) {
        let Some(i) = s.iter().position(Option::is_none) else {
            let images = s.iter().map(|x| x.unwrap()).collect();
            out.insert(Perm::from_images(images).unwrap());
            return;
        };
        if parts[i] == 2 {
            s[i] = Some(i);
            rec(parts, s, out);
            s[i] = None;
        }
        for j in i + 1..parts.len() {
            if s[j].is_none() && parts[j] == parts[i] {
                s[i] = Some(j);
                s[j] = Some(i);
                rec(parts, s, out);
                s[i] = None;
                s[j] = None;
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(parts, &mut vec![None; parts.len()], &mut out);
    out
}

pub fn involution_suite(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("matching-involutions");
    for p in compositions(max_n) {
        let mut seen: BTreeMap<Perm, usize> = BTreeMap::new();
        for d in orbit_table(&p) {
            if let Some(s) = d.s_omega {
                *seen.entry(s).or_default() += 1;
            }
        }
        let want = admissible_involutions(p.composition().parts());
        let got: BTreeSet<Perm> = seen.keys().cloned().collect();
        r.check(got == want, || {
            format!(
                "{}: s_omega image differs from admissible involutions",
                p.composition()
            )
        });
        r.check(seen.values().all(|&c| c == 1), || {
            format!("{}: two matching orbits share s_omega", p.composition())
        });
    }
    r
}

/// Modulus character of `P^omega cap S` read off its root support.
fn direct_modulus(w: &Perm, p: &ParabolicDatum) -> TorusCharVec {
    let n = p.n();
    let inp = |k, l| in_p_omega(w, p, k, l);
    let mut c = TorusCharVec::identity(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && inp(i, j) && inp(n + i, n + j) {
                c.mul_ratio(i, j, 1);
            }
            if inp(i, n + j) {
                c.mul_ratio(i, j, 1);
            }
        }
    }
    c
}

pub fn modchar_suite(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("modular-character");
    for p in compositions(max_n) {
        for d in unvanishing(&p) {
            let w = &d.omega;
            let (lhs, rhs) = mod_char_vectors(w, &p).expect("unvanishing");
            r.check(tchar_square_equals(&lhs, &rhs).unwrap(), || {
                format!("{} {}: lhs {} rhs {}", p.composition(), w, lhs, rhs)
            });
            let direct = direct_modulus(w, &p);
            r.check(direct.exponents() == lhs.exponents(), || {
                format!(
                    "{} {}: root count {} vs {}",
                    p.composition(),
                    w,
                    direct,
                    lhs
                )
            });
        }
    }
    r
}

fn unvanishing(p: &ParabolicDatum) -> Vec<OrbitDescriptor> {
    orbit_table(p)
        .into_iter()
        .filter(|d| d.class != ClassTag::PsiVanishing)
        .collect()
}

pub fn direct_sum_suite(max_n: usize) -> SuiteReport {
    let mut r = SuiteReport::new("direct-sum");
    for p in compositions(max_n) {
        let n = p.n();
        let m = 2 * n;
        for d in unvanishing(&p) {
            let w = &d.omega;
            let ranks = direct_sum_ranks(w, &p).expect("unvanishing");
            r.check(ranks.is_direct_sum(), || {
                format!("{} {}: {:?}", p.composition(), w, ranks)
            });

            // dim(p^w cap s) from ranks against the root split of R_w V_w
            let dim_p = (0..m)
                .flat_map(|k| (0..m).map(move |l| (k, l)))
                .filter(|&(k, l)| k == l || in_p_omega(w, &p, k, l))
                .count();
            let dim_cap = dim_p + 2 * n * n - ranks.rank_ps;
            let roots: Vec<&Root> = d.r_roots.iter().chain(&d.v_roots).collect();
            let diag = roots.iter().filter(|x| (x.0 < n) == (x.1 < n)).count();
            let mixed = roots.len() - diag;
            let disjoint = d.r_roots.is_disjoint(&d.v_roots);
            r.check(disjoint && dim_cap == n + diag / 2 + mixed, || {
                format!("{} {}: R/V root split has wrong size", p.composition(), w)
            });
        }
    }
    r
}

fn random_exponents(rng: &mut ChaCha8Rng, r: usize) -> Vec<Rat> {
    let mut e: Vec<Rat> = (0..r)
        .map(|_| Rat::new(rng.gen_range(-8..=8), 4).unwrap())
        .collect();
    e.sort_by(|a, b| b.cmp(a));
    e
}

pub fn orbit_identity_suite(max_n: usize, seed: u64, modules_per_comp: usize) -> SuiteReport {
    let mut r = SuiteReport::new("orbit-identities");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for p in compositions(max_n) {
        let n = p.n();
        let exps: Vec<Vec<Rat>> = (0..modules_per_comp)
            .map(|_| random_exponents(&mut rng, p.blocks()))
            .collect();
        for d in unvanishing(&p) {
            let w = &d.omega;
            let winv = w.inverse();
            for &k in p.delta_p() {
                let x = Root(k, k + 1).image(&winv);
                if x.0 < n && x.1 >= n {
                    r.check(x.0 <= x.1 - n, || {
                        format!("{} {}: {} crosses backwards", p.composition(), w, x)
                    });
                }
                if x.0 >= n && x.1 == x.0 + 1 && x.1 < 2 * n {
                    let k0 = x.0 - n;
                    r.check(w.apply(k0) < w.apply(k0 + 1), || {
                        format!(
                            "{} {}: simple root a({},{}) dies",
                            p.composition(),
                            w,
                            k0 + 1,
                            k0 + 2
                        )
                    });
                }
            }
            for e in &d.conormal {
                let (i, j) = (e.1, e.0 % n);
                r.check(
                    w.apply(i) < w.apply(j) && w.apply(n + i) < w.apply(n + j),
                    || {
                        format!(
                            "{} {}: {} breaks the order condition",
                            p.composition(),
                            w,
                            e
                        )
                    },
                );
            }
            let rel = relation_closures(w, &p).expect("unvanishing");
            for &(i, j) in rel.weightly_closure.iter().chain(&rel.derivatively_closure) {
                for ex in &exps {
                    let gap = chain_exponent_gap(w, &p, ex, i, j);
                    r.check(gap.signum() >= 0, || {
                        format!(
                            "{} {} ({},{}) exps {:?}: gap {}",
                            p.composition(),
                            w,
                            i + 1,
                            j + 1,
                            ex,
                            gap
                        )
                    });
                }
            }
        }
    }
    r
}

/// Exhaustive search for a perfect pairing of the parts.
pub fn brute_symplectic(phi: &LParameter, eta: &MultChar) -> bool {
    fn rec(parts: &[WeilIrr], used: &mut [bool], eta: &MultChar) -> bool {
        let Some(i) = used.iter().position(|u| !u) else {
            return true;
        };
        used[i] = true;
        if let WeilIrr::TwoDim { k, lambda } = parts[i] {
            if det_two_dim(k, lambda) == *eta && rec(parts, used, eta) {
                used[i] = false;
                return true;
            }
        }
        let want = twist(&dual(&parts[i]), eta).unwrap();
        for j in i + 1..parts.len() {
            if !used[j] && parts[j] == want {
                used[j] = true;
                let ok = rec(parts, used, eta);
                used[j] = false;
                if ok {
                    used[i] = false;
                    return true;
                }
            }
        }
        used[i] = false;
        false
    }
    phi.dim().is_multiple_of(2) && rec(phi.parts(), &mut vec![false; phi.parts().len()], eta)
}

struct TableCache(BTreeMap<Vec<u8>, Vec<OrbitDescriptor>>);

impl TableCache {
    fn get(&mut self, m: &StandardModule) -> &[OrbitDescriptor] {
        self.0
            .entry(m.composition())
            .or_insert_with(|| orbit_table(&parabolic_of(m).expect("valid composition")))
    }
}

/// Swaps adjacent factors of equal exponent.
fn reorder_equal_exponents(m: &StandardModule) -> Option<StandardModule> {
    let f = m.factors();
    let i = (1..f.len()).find(|&i| f[i].exponent() == f[i - 1].exponent() && f[i] != f[i - 1])?;
    let mut g = f.to_vec();
    g.swap(i - 1, i);
    StandardModule::new(m.field(), g).ok()
}

pub fn engine_suite(max_n: usize, seed: u64, corpus_size: usize) -> SuiteReport {
    let mut r = SuiteReport::new("engine");
    let mut cache = TableCache(BTreeMap::new());
    let generic = corpus::generate(
        seed,
        corpus_size,
        CorpusOptions {
            max_degree: 2 * max_n,
            generic: true,
        },
    );
    let general = corpus::generate(
        seed ^ 0x5eed,
        corpus_size,
        CorpusOptions {
            max_degree: 2 * max_n,
            generic: false,
        },
    );
    for (entry, is_generic) in generic
        .iter()
        .map(|e| (e, true))
        .chain(general.iter().map(|e| (e, false)))
    {
        let m = &entry.module;
        let eta = &entry.eta;
        let describe = || crate::io::ModuleRecord::from_module(m, eta);
        let phi = langlands_param(m).expect("corpus avoids limits");
        let fast = is_symplectic_eta(&phi, eta).unwrap().symplectic;
        if phi.dim() <= 8 {
            r.check(fast == brute_symplectic(&phi, eta), || {
                format!("pairing oracle disagrees on {:?}", describe())
            });
        }
        let table = cache.get(m);
        let report = decide_with_orbits(m, eta, is_generic, table).unwrap();
        r.check(report.compatible_orbits == 0 || report.necessary, || {
            format!(
                "compatible orbit without symplectic parameter: {:?}",
                describe()
            )
        });
        if is_generic {
            r.check(fast == (report.compatible_orbits >= 1), || {
                format!("equivalence fails on {:?}", describe())
            });
            let lin = linear_decision(m, eta, true).unwrap();
            r.check(lin.verdict == report.verdict, || {
                format!("linear and Shalika verdicts differ on {:?}", describe())
            });
        }
        if let Some(m2) = reorder_equal_exponents(m) {
            let table2 = cache.get(&m2).to_vec();
            let report2 = decide_with_orbits(&m2, eta, is_generic, &table2).unwrap();
            r.check(
                report2.verdict == report.verdict
                    && report2.compatible_orbits == report.compatible_orbits,
                || format!("reordering changes the decision on {:?}", describe()),
            );
        }
    }
    for (m, spec) in corpus::epsilon_corpus(seed ^ 0xe95, corpus_size, max_n.max(1)) {
        let rep = epsilon_pi(&m, &spec).unwrap();
        let n = m.factors().len();
        r.check(rep.p % 2 == n % 2 && rep.p + 2 * rep.q == n, || {
            format!("p = {} has the wrong parity for n = {}", rep.p, n)
        });
        let flipped = ShalikaSpec::new(*spec.eta(), -spec.a()).unwrap();
        let rep2 = epsilon_pi(&m, &flipped).unwrap();
        let sign: i8 = if rep.p.is_multiple_of(2) { 1 } else { -1 };
        r.check(rep2.epsilon == rep.epsilon * sign, || {
            format!("sign flip fails for p = {}", rep.p)
        });
        r.check(
            rep.epsilon == epsilon_formula(rep.p, rep.q, spec.a().signum()),
            || "epsilon disagrees with the closed formula".to_string(),
        );
    }
    r
}

/// Every suite, in a fixed order.
pub fn run_all(max_n: usize, seed: u64) -> Vec<SuiteReport> {
    vec![
        factorization_suite(max_n),
        classification_suite(max_n),
        involution_suite(max_n),
        modchar_suite(max_n),
        direct_sum_suite(max_n),
        orbit_identity_suite(max_n, seed, 100),
        engine_suite(max_n, seed, 200),
    ]
}
