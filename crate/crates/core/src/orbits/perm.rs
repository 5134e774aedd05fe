use std::fmt;
use std::str::FromStr;

use super::OrbitError;

/// A permutation of `{0, ..., m-1}` in one-line notation.
///
/// Stored 0-based; displayed and parsed 1-based as `"3,5,6,1,2,4"`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm((0..m).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, OrbitError> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            if x >= m || seen[x] {
                return Err(OrbitError::NotAPermutation(images.clone()));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// From 1-based images, as written in the literature.
    pub fn from_one_based(images: &[usize]) -> Result<Self, OrbitError> {
        if images.contains(&0) {
            return Err(OrbitError::NotAPermutation(images.to_vec()));
        }
        Perm::from_images(images.iter().map(|x| x - 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|x| x + 1).collect()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// `self o other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// Number of inversions, the Coxeter length in `S_m`.
    pub fn length(&self) -> usize {
        let mut count = 0;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if self.0[i] > self.0[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_involution(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| self.0[x] == i)
    }

    /// Advances to the next permutation in lexicographic order; returns
    /// `false` (leaving `self` sorted) after the last one.
    pub fn next_lex(&mut self) -> bool {
        let v = &mut self.0;
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            v.reverse();
            return false;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    /// All permutations of `m` letters in lexicographic order.
    pub fn all(m: usize) -> AllPerms {
        AllPerms {
            next: Some(Perm::identity(m)),
        }
    }
}

pub struct AllPerms {
    next: Option<Perm>,
}

impl Iterator for AllPerms {
    type Item = Perm;

    fn next(&mut self) -> Option<Perm> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        if succ.next_lex() {
            self.next = Some(succ);
        }
        Some(current)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Perm {
    type Err = OrbitError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let images = s
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| OrbitError::Parse {
                kind: "permutation",
                input: s.to_string(),
            })?;
        Perm::from_one_based(&images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_roundtrip() {
        let p: Perm = "3,5,6,1,2,4".parse().unwrap();
        assert_eq!(p.to_string(), "3,5,6,1,2,4");
        assert_eq!(p.apply(0), 2);
        assert!("1,1".parse::<Perm>().is_err());
        assert!("0,1".parse::<Perm>().is_err());
        assert!("1,x".parse::<Perm>().is_err());
    }

    #[test]
    fn group_ops() {
        let p: Perm = "2,3,1".parse().unwrap();
        assert_eq!(p.compose(&p.inverse()), Perm::identity(3));
        assert_eq!(p.compose(&p).to_string(), "3,1,2");
        assert_eq!(p.length(), 2);
        assert!(!p.is_involution());
        assert!("2,1,3".parse::<Perm>().unwrap().is_involution());
    }

    #[test]
    fn all_count_and_order() {
        let v: Vec<Perm> = Perm::all(3).collect();
        assert_eq!(v.len(), 6);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(Perm::all(5).count(), 120);
        assert_eq!(Perm::all(0).count(), 1);
    }
}
