//! Seeded generators of standard modules for the cross-checks.
//!
//! Modules are assembled from symplectic building blocks (a self-paired
//! discrete series, partner pairs of discrete series or characters) and then
//! perturbed at random, so both verdicts occur.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{GaussRat, Rat};
use crate::langlands::{ArchField, CuspidalFactor, MultChar, StandardModule};

use super::ShalikaSpec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub module: StandardModule,
    pub eta: MultChar,
    /// No perturbation was applied, so the parameter is symplectic by construction.
    pub built_symplectic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorpusOptions {
    /// Largest `2n`.
    pub max_degree: usize,
    /// Keep only modules passing [`generic_filter`].
    pub generic: bool,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            max_degree: 8,
            generic: true,
        }
    }
}

fn rat(p: i64, q: i64) -> Rat {
    Rat::new(p, q).expect("nonzero denominator")
}

fn grid_point(rng: &mut ChaCha8Rng) -> GaussRat {
    let re = rat(rng.gen_range(-9..=9), 6);
    let im = *[
        rat(0, 1),
        rat(0, 1),
        rat(0, 1),
        rat(1, 3),
        rat(-1, 2),
        rat(1, 1),
    ]
    .choose(rng)
    .unwrap();
    GaussRat::new(re, im)
}

fn half(z: GaussRat) -> GaussRat {
    z.scale(rat(1, 2))
}

/// Standard modules whose factors differ pairwise by something other than a
/// nonzero half-integer and whose exponents are strictly decreasing. This
/// keeps every induced representation irreducible, hence generic.
pub fn generic_filter(m: &StandardModule) -> bool {
    let f = m.factors();
    if f.windows(2).any(|w| w[0].exponent() <= w[1].exponent()) {
        return false;
    }
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let d = f[i].lambda() - f[j].lambda();
            let twice = d.re + d.re;
            if d.is_real() && twice.is_integer() && !d.is_zero() {
                return false;
            }
        }
    }
    true
}

fn real_char(k: i64, lambda: GaussRat) -> CuspidalFactor {
    CuspidalFactor::Char(MultChar::real(k.rem_euclid(2), lambda).expect("k reduced mod 2"))
}

fn build_real(rng: &mut ChaCha8Rng, degree: usize) -> (Vec<CuspidalFactor>, MultChar) {
    let m0 = rng.gen_range(0..=1);
    let z0 = grid_point(rng);
    let eta = MultChar::real(m0, z0).unwrap();
    let mut factors = Vec::new();
    let mut rem = degree;
    let mut self_used = false;
    while rem > 0 {
        let roll: f64 = rng.gen();
        if rem >= 2 && !self_used && roll < 0.25 {
            // central character sgn^{k+1} |.|^{2 lambda} = eta
            let k = 2 * rng.gen_range(0..=1) + if m0 == 0 { 1 } else { 2 };
            factors.push(CuspidalFactor::Disc {
                k,
                lambda: half(z0),
            });
            self_used = true;
            rem -= 2;
        } else if rem >= 4 && roll < 0.6 {
            let k = rng.gen_range(1..=4);
            let l = grid_point(rng);
            factors.push(CuspidalFactor::Disc { k, lambda: l });
            factors.push(CuspidalFactor::Disc { k, lambda: z0 - l });
            rem -= 4;
        } else {
            let e = rng.gen_range(0..=1);
            let l = grid_point(rng);
            factors.push(real_char(e, l));
            factors.push(real_char(e + m0, z0 - l));
            rem -= 2;
        }
    }
    (factors, eta)
}

fn build_complex(rng: &mut ChaCha8Rng, degree: usize) -> (Vec<CuspidalFactor>, MultChar) {
    let k0 = rng.gen_range(-2..=2);
    let z0 = grid_point(rng);
    let eta = MultChar::complex(k0, z0);
    let mut factors = Vec::new();
    for _ in 0..degree / 2 {
        let k = rng.gen_range(-3..=3);
        let l = grid_point(rng);
        factors.push(CuspidalFactor::Char(MultChar::complex(k, l)));
        factors.push(CuspidalFactor::Char(MultChar::complex(k0 - k, z0 - l)));
    }
    (factors, eta)
}

fn perturb(rng: &mut ChaCha8Rng, factors: &mut [CuspidalFactor]) {
    let i = rng.gen_range(0..factors.len());
    let shift = *[
        GaussRat::real(rat(1, 6)),
        GaussRat::real(rat(-1, 3)),
        GaussRat::new(rat(0, 1), rat(1, 3)),
        GaussRat::new(rat(1, 6), rat(-1, 2)),
    ]
    .choose(rng)
    .unwrap();
    let kind = rng.gen_range(0..2);
    factors[i] = match factors[i] {
        CuspidalFactor::Char(c) if kind == 0 => {
            let k = c.k() + 1;
            match c.field() {
                ArchField::Real => real_char(k, c.lambda()),
                ArchField::Complex => CuspidalFactor::Char(MultChar::complex(k, c.lambda())),
            }
        }
        CuspidalFactor::Char(c) => match c.field() {
            ArchField::Real => real_char(c.k(), c.lambda() + shift),
            ArchField::Complex => {
                CuspidalFactor::Char(MultChar::complex(c.k(), c.lambda() + shift))
            }
        },
        CuspidalFactor::Disc { k, lambda } if kind == 0 => {
            CuspidalFactor::Disc { k: k + 1, lambda }
        }
        CuspidalFactor::Disc { k, lambda } => CuspidalFactor::Disc {
            k,
            lambda: lambda + shift,
        },
    };
}

/// `count` modules of degree at most `opts.max_degree`, reproducible from `seed`.
pub fn generate(seed: u64, count: usize, opts: CorpusOptions) -> Vec<CorpusEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let degrees: Vec<usize> = (1..=opts.max_degree / 2).map(|h| 2 * h).collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count && !degrees.is_empty() {
        let degree = *degrees.choose(&mut rng).unwrap();
        let complex = rng.gen_bool(0.2);
        let (mut factors, eta) = if complex {
            build_complex(&mut rng, degree)
        } else {
            build_real(&mut rng, degree)
        };
        let perturbed = rng.gen_bool(0.4);
        if perturbed {
            perturb(&mut rng, &mut factors);
        }
        let field = if complex {
            ArchField::Complex
        } else {
            ArchField::Real
        };
        let Ok(module) = StandardModule::normalized(field, factors) else {
            continue;
        };
        if opts.generic && !generic_filter(&module) {
            continue;
        }
        out.push(CorpusEntry {
            module,
            eta,
            built_symplectic: !perturbed,
        });
    }
    out
}

/// Symplectic products of (limits of) relative discrete series with a
/// random `psi_a`, the valid inputs of the restriction sign.
pub fn epsilon_corpus(
    seed: u64,
    count: usize,
    max_factors: usize,
) -> Vec<(StandardModule, ShalikaSpec)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let m0 = rng.gen_range(0..=1);
        let z0 = grid_point(&mut rng);
        let eta = MultChar::real(m0, z0).unwrap();
        let n = rng.gen_range(1..=max_factors.max(1));
        let mut factors = Vec::new();
        while factors.len() < n {
            if factors.len() + 2 <= n && rng.gen_bool(0.5) {
                let k = rng.gen_range(0..=4);
                let l = grid_point(&mut rng);
                factors.push(CuspidalFactor::Disc { k, lambda: l });
                factors.push(CuspidalFactor::Disc { k, lambda: z0 - l });
            } else {
                // k + 1 = m0 mod 2, so k = 0 occurs for m0 = 1
                let k = 2 * rng.gen_range(0..=1) + (1 - m0);
                factors.push(CuspidalFactor::Disc {
                    k,
                    lambda: half(z0),
                });
            }
        }
        let a = *[
            rat(-3, 1),
            rat(-1, 1),
            rat(-1, 2),
            rat(1, 2),
            rat(1, 1),
            rat(2, 1),
        ]
        .choose(&mut rng)
        .unwrap();
        let module = StandardModule::normalized(ArchField::Real, factors).expect("valid factors");
        out.push((module, ShalikaSpec::new(eta, a).expect("a != 0")));
    }
    out
}
