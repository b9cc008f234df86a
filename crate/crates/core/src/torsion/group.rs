use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{AtlasError, Result};

/// One of the fifteen torsion groups of elliptic curves over Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorsionGroup {
    /// `Z/NZ`, `N ∈ {1..10, 12}`.
    Cyclic(u32),
    /// `Z/2Z × Z/NZ`, `N ∈ {2, 4, 6, 8}`.
    Bicyclic(u32),
}

impl TorsionGroup {
    /// Validated constructor from invariant factors `n1 | n2`.
    pub fn from_invariants(n1: u32, n2: u32) -> Result<Self> {
        let g = match n1 {
            1 => TorsionGroup::Cyclic(n2),
            2 => TorsionGroup::Bicyclic(n2),
            _ => {
                return Err(AtlasError::invariant(format!(
                    "torsion Z/{n1} x Z/{n2} is not a group over Q"
                )))
            }
        };
        if g.is_mazur() {
            Ok(g)
        } else {
            Err(AtlasError::invariant(format!("torsion {g} is outside Mazur's list")))
        }
    }

    pub fn is_mazur(&self) -> bool {
        match *self {
            TorsionGroup::Cyclic(n) => (1..=10).contains(&n) || n == 12,
            TorsionGroup::Bicyclic(n) => matches!(n, 2 | 4 | 6 | 8),
        }
    }

    pub fn order(&self) -> u32 {
        match *self {
            TorsionGroup::Cyclic(n) => n,
            TorsionGroup::Bicyclic(n) => 2 * n,
        }
    }

    pub fn is_bicyclic(&self) -> bool {
        matches!(self, TorsionGroup::Bicyclic(_))
    }

    /// Largest element order.
    pub fn exponent(&self) -> u32 {
        match *self {
            TorsionGroup::Cyclic(n) | TorsionGroup::Bicyclic(n) => n,
        }
    }

    pub fn has_two_torsion(&self) -> bool {
        self.order().is_multiple_of(2)
    }

    /// All fifteen groups.
    pub fn mazur() -> Vec<TorsionGroup> {
        let mut v: Vec<_> = (1..=10).chain([12]).map(TorsionGroup::Cyclic).collect();
        v.extend([2, 4, 6, 8].map(TorsionGroup::Bicyclic));
        v
    }
}

/// Canonical-form ordering: bicyclic groups first, then larger groups first.
impl Ord for TorsionGroup {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .is_bicyclic()
            .cmp(&self.is_bicyclic())
            .then_with(|| other.order().cmp(&self.order()))
    }
}

impl PartialOrd for TorsionGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TorsionGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionGroup::Cyclic(n) => write!(f, "[{n}]"),
            TorsionGroup::Bicyclic(n) => write!(f, "[2,{n}]"),
        }
    }
}

impl FromStr for TorsionGroup {
    type Err = AtlasError;

    /// Parses `[N]` or `[2,N]`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || AtlasError::Parse(format!("bad torsion label {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let parts: Vec<u32> = inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let g = match parts.as_slice() {
            [n] => TorsionGroup::Cyclic(*n),
            [2, n] => TorsionGroup::Bicyclic(*n),
            _ => return Err(bad()),
        };
        if g.is_mazur() {
            Ok(g)
        } else {
            Err(bad())
        }
    }
}
