//! Partitions, hook conditions, and the hook-weight map into gl(m|n) weights.

use std::fmt;
use std::str::FromStr;

use crate::parity::{GlWeight, ParitySeq};
use crate::rat::Rat;

/// A partition: weakly decreasing positive parts (trailing zeros trimmed).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<u64>,
}

/// Error for weights requested from a non-hook partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotHook {
    pub m: usize,
    pub n: usize,
}

impl fmt::Display for NotHook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "partition is not ({}|{})-hook", self.m, self.n)
    }
}

impl std::error::Error for NotHook {}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Part at 1-based row index, zero beyond the length.
    pub fn part(&self, i: usize) -> u64 {
        if i >= 1 {
            self.parts.get(i - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The conjugate partition (columns become rows).
    pub fn conjugate(&self) -> Partition {
        if self.parts.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.parts.iter().filter(|&&p| p >= j as u64).count() as u64);
        }
        Partition { parts }
    }

    /// True when row i contains a cell at column j.
    pub fn contains_cell(&self, i: usize, j: u64) -> bool {
        j >= 1 && self.part(i) >= j
    }

    /// Diagram containment: every row of `inner` fits in this partition.
    pub fn contains(&self, inner: &Partition) -> bool {
        (1..=inner.length()).all(|i| self.part(i) >= inner.part(i))
    }

    /// The (m|n)-hook condition: the (m+1)-st part is at most n.
    pub fn is_hook(&self, m: usize, n: usize) -> bool {
        self.part(m + 1) <= n as u64
    }

    /// The gl(m|n)-weight attached to a hook partition for the given parity
    /// sequence. Position of the i-th plus sign receives max(lambda_i - a_i, 0)
    /// and of the j-th minus sign max(lambda'_j - b_j, 0), where a_i counts
    /// minus signs before the i-th plus and b_j plus signs before the j-th
    /// minus.
    pub fn hook_weight(&self, s: &ParitySeq) -> Result<GlWeight, NotHook> {
        let (m, n) = (s.m(), s.n());
        if !self.is_hook(m, n) {
            return Err(NotHook { m, n });
        }
        let conj = self.conjugate();
        let mut coords = vec![Rat::zero(); s.len()];
        for i in 1..=m {
            let a = s.minus_before_plus(i);
            let val = self.part(i).saturating_sub(a as u64);
            coords[a + i - 1] = Rat::from_int(val as i64);
        }
        for j in 1..=n {
            let b = s.plus_before_minus(j);
            let val = conj.part(j).saturating_sub(b as u64);
            coords[b + j - 1] = Rat::from_int(val as i64);
        }
        Ok(GlWeight::new(coords))
    }

    /// All partitions of `total`, largest-first parts, in lexicographically
    /// decreasing order.
    pub fn all_of(total: u64) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut parts = Vec::new();
        fn rec(remaining: u64, max: u64, parts: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition {
                    parts: parts.clone(),
                });
                return;
            }
            let top = remaining.min(max);
            for p in (1..=top).rev() {
                parts.push(p);
                rec(remaining - p, p, parts, out);
                parts.pop();
            }
        }
        rec(total, total, &mut parts, &mut out);
        out
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as "".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{}", p)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

/// Error when text does not parse as a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsePartitionError(pub String);

impl fmt::Display for ParsePartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid partition: {:?}", self.0)
    }
}

impl std::error::Error for ParsePartitionError {}

impl FromStr for Partition {
    type Err = ParsePartitionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u64> = s
            .split(',')
            .map(|p| p.trim().parse::<u64>())
            .collect::<Result<_, _>>()
            .map_err(|_| ParsePartitionError(s.to_string()))?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(ParsePartitionError(s.to_string()));
        }
        Ok(Partition::new(parts))
    }
}
