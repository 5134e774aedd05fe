use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::OrbitError;

/// Block sizes `(n_1, ..., n_r)` of a cuspidal parabolic of `GL_{2n}(R)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Composition {
    parts: Vec<u8>,
}

impl Composition {
    pub fn new(parts: Vec<u8>) -> Result<Self, OrbitError> {
        if parts.is_empty() {
            return Err(OrbitError::EmptyComposition);
        }
        if let Some(&p) = parts.iter().find(|&&p| p == 0 || p > 2) {
            return Err(OrbitError::NonCuspidal(p as usize));
        }
        let total: usize = parts.iter().map(|&p| p as usize).sum();
        if !total.is_multiple_of(2) {
            return Err(OrbitError::OddDegree(total));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[u8] {
        &self.parts
    }

    /// Number of blocks `r`.
    pub fn blocks(&self) -> usize {
        self.parts.len()
    }

    /// `2n`.
    pub fn degree(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// `n`.
    pub fn half(&self) -> usize {
        self.degree() / 2
    }

    /// All cuspidal compositions of `m`, in lexicographic order.
    pub fn all_of(m: usize) -> Vec<Composition> {
        fn rec(m: usize, prefix: &mut Vec<u8>, out: &mut Vec<Composition>) {
            if m == 0 {
                out.push(Composition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in 1..=2u8 {
                if p as usize <= m {
                    prefix.push(p);
                    rec(m - p as usize, prefix, out);
                    prefix.pop();
                }
            }
        }
        let mut out = Vec::new();
        if m > 0 && m.is_multiple_of(2) {
            rec(m, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u8::to_string).collect();
        f.write_str(&parts.join("+"))
    }
}

impl FromStr for Composition {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || OrbitError::Parse {
            kind: "composition",
            input: s.to_string(),
        };
        let parts = s
            .split('+')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(&p) = parts.iter().find(|&&p| p > 2) {
            return Err(OrbitError::NonCuspidal(p));
        }
        Composition::new(parts.into_iter().map(|p| p as u8).collect())
    }
}

/// The standard parabolic `P` attached to a composition, with its simple
/// roots and the block markers `a_i`, `b_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicDatum {
    comp: Composition,
    /// `k` such that `alpha_{k,k+1}` is a simple root of the Levi (0-based).
    delta_p: BTreeSet<usize>,
    a: Vec<usize>,
    b: Vec<Option<usize>>,
    block_of: Vec<usize>,
}

/// Whether a position is the first or second row of its block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Marker {
    A(usize),
    B(usize),
}

impl ParabolicDatum {
    pub fn new(comp: Composition) -> Self {
        let mut delta_p = BTreeSet::new();
        let mut a = Vec::new();
        let mut b = Vec::new();
        let mut block_of = Vec::new();
        let mut pos = 0;
        for (i, &p) in comp.parts.iter().enumerate() {
            a.push(pos);
            block_of.push(i);
            if p == 2 {
                delta_p.insert(pos);
                b.push(Some(pos + 1));
                block_of.push(i);
            } else {
                b.push(None);
            }
            pos += p as usize;
        }
        ParabolicDatum {
            comp,
            delta_p,
            a,
            b,
            block_of,
        }
    }

    pub fn composition(&self) -> &Composition {
        &self.comp
    }

    pub fn delta_p(&self) -> &BTreeSet<usize> {
        &self.delta_p
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[Option<usize>] {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.comp.half()
    }

    pub fn degree(&self) -> usize {
        self.comp.degree()
    }

    pub fn blocks(&self) -> usize {
        self.comp.blocks()
    }

    /// Index of the block containing a position.
    pub fn block_of(&self, pos: usize) -> usize {
        self.block_of[pos]
    }

    pub fn marker(&self, pos: usize) -> Marker {
        let i = self.block_of[pos];
        if self.a[i] == pos {
            Marker::A(i)
        } else {
            Marker::B(i)
        }
    }

    /// `alpha_{k,k+1}` is in `Delta_P`.
    pub fn is_simple(&self, k: usize) -> bool {
        self.delta_p.contains(&k)
    }

    /// Whether `E_{k,l}` lies in the Lie algebra of `P` (0-based positions).
    pub fn contains_unit(&self, k: usize, l: usize) -> bool {
        k <= l || (k == l + 1 && self.is_simple(l))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn datum_markers() {
        let p = ParabolicDatum::new("1+2+1+2".parse().unwrap());
        assert_eq!(p.a(), &[0, 1, 3, 4]);
        assert_eq!(p.b(), &[None, Some(2), None, Some(5)]);
        assert_eq!(p.delta_p().iter().copied().collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(p.n(), 3);
        assert_eq!(p.marker(2), Marker::B(1));
        assert_eq!(p.marker(3), Marker::A(2));
        assert!(p.contains_unit(2, 1));
        assert!(!p.contains_unit(3, 2));
    }

    #[test]
    fn parse_rejects() {
        assert!(matches!(
            "3+1".parse::<Composition>(),
            Err(OrbitError::NonCuspidal(3))
        ));
        assert!(matches!(
            "2+1".parse::<Composition>(),
            Err(OrbitError::OddDegree(3))
        ));
        assert!("2+".parse::<Composition>().is_err());
        assert!("0+2".parse::<Composition>().is_err());
        assert_eq!("2+2+2".parse::<Composition>().unwrap().to_string(), "2+2+2");
    }

    #[test]
    fn all_compositions() {
        assert_eq!(Composition::all_of(2).len(), 2);
        assert_eq!(Composition::all_of(4).len(), 5);
        assert_eq!(Composition::all_of(8).len(), 34);
        assert!(Composition::all_of(3).is_empty());
    }
}
