use std::collections::BTreeSet;
use std::fmt;

use super::Perm;

/// The root `alpha_{i,j} = e_i - e_j` (0-based, `i != j`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Root(pub usize, pub usize);

impl Root {
    pub fn is_positive(&self) -> bool {
        self.0 < self.1
    }

    pub fn negate(&self) -> Root {
        Root(self.1, self.0)
    }

    /// `w(alpha_{i,j}) = alpha_{w(i), w(j)}`.
    pub fn image(&self, w: &Perm) -> Root {
        Root(w.apply(self.0), w.apply(self.1))
    }

    /// The swap `i <-> n+i` of indices, i.e. conjugation by `(n+1,...,2n,1,...,n)`.
    pub fn iota(&self, n: usize) -> Root {
        let f = |i: usize| if i < n { i + n } else { i - n };
        Root(f(self.0), f(self.1))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.0 + 1, self.1 + 1)
    }
}

pub type RootSet = BTreeSet<Root>;

/// Comma separated list of roots, `-` when empty.
pub fn format_roots(set: &RootSet) -> String {
    if set.is_empty() {
        return "-".to_string();
    }
    set.iter()
        .map(Root::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// The matrix unit `E_{i,j}` (0-based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MatrixUnit(pub usize, pub usize);

impl fmt::Display for MatrixUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({},{})", self.0 + 1, self.1 + 1)
    }
}
