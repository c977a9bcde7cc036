//! Parity sequences and their combinatorial attributes.
//!
//! A parity sequence is a tuple of signs +-1 with `m` plus-ones and `n`
//! minus-ones; it fixes a Borel subalgebra of gl(m|n) and therefore the
//! meaning of "highest weight" everywhere else in this crate. Indices follow
//! the usual 1-based conventions: *positions* run over 1..=m+n and *nodes*
//! (adjacent pairs) over 1..=m+n-1.

use std::fmt;
use std::str::FromStr;

use crate::rat::Rat;

/// A sequence of signs +-1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ParitySeq {
    entries: Vec<i8>,
}

/// Errors from parity-sequence operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParityError {
    /// An odd reflection was requested at a node whose neighbors carry the
    /// same sign.
    SameParity { node: usize },
    /// The target parity sequence has different counts of +1 / -1.
    IncompatibleCounts,
    /// Text did not parse as a sign string.
    Invalid(String),
}

impl ParityError {
    pub fn name(&self) -> &'static str {
        match self {
            ParityError::SameParity { .. } => "SameParity",
            ParityError::IncompatibleCounts => "IncompatibleCounts",
            ParityError::Invalid(_) => "InvalidParity",
        }
    }
}

impl fmt::Display for ParityError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityError::SameParity { node } => {
                write!(f, "signs at positions {} and {} are equal", node, node + 1)
            }
            ParityError::IncompatibleCounts => {
                write!(f, "parity sequences have different sign counts")
            }
            ParityError::Invalid(s) => write!(f, "invalid parity string: {:?}", s),
        }
    }
}

impl std::error::Error for ParityError {}

impl ParitySeq {
    pub fn new(entries: Vec<i8>) -> Self {
        assert!(!entries.is_empty(), "parity sequence must be nonempty");
        assert!(
            entries.iter().all(|&s| s == 1 || s == -1),
            "entries must be +-1"
        );
        ParitySeq { entries }
    }

    /// The standard sequence (1,...,1,-1,...,-1).
    pub fn standard(m: usize, n: usize) -> Self {
        assert!(m + n > 0);
        let mut entries = vec![1i8; m];
        entries.extend(std::iter::repeat_n(-1i8, n));
        ParitySeq { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of +1 entries.
    pub fn m(&self) -> usize {
        self.entries.iter().filter(|&&s| s == 1).count()
    }

    /// Number of -1 entries.
    pub fn n(&self) -> usize {
        self.entries.len() - self.m()
    }

    /// Sign at 1-based position `i`.
    pub fn sign(&self, i: usize) -> i8 {
        assert!(
            (1..=self.entries.len()).contains(&i),
            "position {} out of range 1..={}",
            i,
            self.entries.len()
        );
        self.entries[i - 1]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn is_standard(&self) -> bool {
        *self == ParitySeq::standard(self.m(), self.n())
    }

    /// True when the signs at node `i` differ, so an odd reflection exists.
    pub fn is_odd_node(&self, i: usize) -> bool {
        i >= 1 && i < self.entries.len() && self.entries[i - 1] != self.entries[i]
    }

    /// All nodes where an odd reflection is possible.
    pub fn odd_nodes(&self) -> Vec<usize> {
        (1..self.entries.len())
            .filter(|&i| self.is_odd_node(i))
            .collect()
    }

    /// Exchange the signs at positions i and i+1. They must differ.
    pub fn swap_at(&self, i: usize) -> Result<ParitySeq, ParityError> {
        assert!(
            i >= 1 && i < self.entries.len(),
            "node {} out of range 1..={}",
            i,
            self.entries.len() - 1
        );
        if self.entries[i - 1] == self.entries[i] {
            return Err(ParityError::SameParity { node: i });
        }
        let mut entries = self.entries.clone();
        entries.swap(i - 1, i);
        Ok(ParitySeq { entries })
    }

    /// The kappa shifts: kappa_1 is 0 for a leading +1 and -1 for a leading
    /// -1; each later entry repeats its predecessor when the sign changes
    /// and moves by the sign when it repeats.
    pub fn kappa(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.entries.len());
        let mut prev = if self.entries[0] == 1 { 0 } else { -1 };
        out.push(prev);
        for w in self.entries.windows(2) {
            if w[1] == w[0] {
                prev += w[1] as i64;
            }
            out.push(prev);
        }
        out
    }

    /// Pairing (alpha_i, eps_j) = s_i d_{ij} - s_{i+1} d_{i+1,j} of the i-th
    /// simple root with the j-th basis weight.
    pub fn alpha_pair(&self, i: usize, j: usize) -> i64 {
        assert!(i >= 1 && i < self.entries.len(), "node out of range");
        assert!(j >= 1 && j <= self.entries.len(), "position out of range");
        let mut v = 0i64;
        if j == i {
            v += self.entries[i - 1] as i64;
        }
        if j == i + 1 {
            v -= self.entries[i] as i64;
        }
        v
    }

    /// The ordered alphabet: position i receives the next unused unbarred
    /// letter when s_i = +1, the next barred letter otherwise.
    pub fn alphabet_order(&self) -> Vec<Letter> {
        let mut unbarred = 0u32;
        let mut barred = 0u32;
        self.entries
            .iter()
            .map(|&s| {
                if s == 1 {
                    unbarred += 1;
                    Letter {
                        barred: false,
                        value: unbarred,
                    }
                } else {
                    barred += 1;
                    Letter {
                        barred: true,
                        value: barred,
                    }
                }
            })
            .collect()
    }

    /// Number of -1 entries before the i-th +1 (1-based), the row offset in
    /// hook-weight coordinates.
    pub fn minus_before_plus(&self, i: usize) -> usize {
        let mut seen_plus = 0;
        let mut minus = 0;
        for &s in &self.entries {
            if s == 1 {
                seen_plus += 1;
                if seen_plus == i {
                    return minus;
                }
            } else {
                minus += 1;
            }
        }
        panic!("fewer than {} plus signs", i);
    }

    /// Number of +1 entries before the j-th -1 (1-based).
    pub fn plus_before_minus(&self, j: usize) -> usize {
        let mut seen_minus = 0;
        let mut plus = 0;
        for &s in &self.entries {
            if s == -1 {
                seen_minus += 1;
                if seen_minus == j {
                    return plus;
                }
            } else {
                plus += 1;
            }
        }
        panic!("fewer than {} minus signs", j);
    }

    /// All parity sequences with the given sign counts, in lexicographic
    /// order with +1 sorting before -1.
    pub fn all(m: usize, n: usize) -> Vec<ParitySeq> {
        assert!(m + n > 0);
        let mut out = Vec::new();
        let mut entries = Vec::with_capacity(m + n);
        fn rec(entries: &mut Vec<i8>, m_left: usize, n_left: usize, out: &mut Vec<ParitySeq>) {
            if m_left == 0 && n_left == 0 {
                out.push(ParitySeq {
                    entries: entries.clone(),
                });
                return;
            }
            if m_left > 0 {
                entries.push(1);
                rec(entries, m_left - 1, n_left, out);
                entries.pop();
            }
            if n_left > 0 {
                entries.push(-1);
                rec(entries, m_left, n_left - 1, out);
                entries.pop();
            }
        }
        rec(&mut entries, m, n, &mut out);
        out
    }
}

impl fmt::Display for ParitySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.entries {
            write!(f, "{}", if s == 1 { '+' } else { '-' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParitySeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for ParitySeq {
    type Err = ParityError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let entries: Vec<i8> = s
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                _ => Err(ParityError::Invalid(s.to_string())),
            })
            .collect::<Result<_, _>>()?;
        if entries.is_empty() {
            return Err(ParityError::Invalid(s.to_string()));
        }
        Ok(ParitySeq { entries })
    }
}

/// A letter of the (m|n) alphabet: unbarred letters come from the first m
/// symbols, barred letters from the last n.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    pub barred: bool,
    pub value: u32,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}\u{0304}", self.value)
        } else {
            write!(f, "{}", self.value)
        }
    }
}

/// Coordinates of a gl(m|n) weight in the eps-basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GlWeight {
    coords: Vec<Rat>,
}

impl GlWeight {
    pub fn new(coords: Vec<Rat>) -> Self {
        GlWeight { coords }
    }

    pub fn zero(len: usize) -> Self {
        GlWeight {
            coords: vec![Rat::zero(); len],
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        GlWeight {
            coords: coords.iter().map(|&c| Rat::from_int(c)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Coordinate at 1-based position i.
    pub fn coord(&self, i: usize) -> &Rat {
        &self.coords[i - 1]
    }

    pub fn add(&self, other: &GlWeight) -> GlWeight {
        assert_eq!(self.len(), other.len());
        GlWeight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &GlWeight) -> GlWeight {
        assert_eq!(self.len(), other.len());
        GlWeight {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// The simple root alpha_i = eps_i - eps_{i+1} as a coordinate vector.
    pub fn simple_root(len: usize, i: usize) -> GlWeight {
        assert!(i >= 1 && i < len);
        let mut coords = vec![Rat::zero(); len];
        coords[i - 1] = Rat::one();
        coords[i] = Rat::from_int(-1);
        GlWeight { coords }
    }

    /// Exchange coordinates i and i+1 (1-based node index).
    pub fn swap_at(&self, i: usize) -> GlWeight {
        assert!(i >= 1 && i < self.coords.len());
        let mut coords = self.coords.clone();
        coords.swap(i - 1, i);
        GlWeight { coords }
    }

    /// Partial order on weights: `self <= other` when the difference
    /// `other - self` is a nonnegative integer combination of simple roots,
    /// i.e. all partial sums of the coordinate differences are nonnegative
    /// integers and the total sum is zero.
    pub fn leq(&self, other: &GlWeight) -> bool {
        assert_eq!(self.len(), other.len());
        let mut partial = Rat::zero();
        for (a, b) in self.coords.iter().zip(&other.coords) {
            partial = &partial + &(b - a);
            if partial.is_negative() || !partial.is_integer() {
                return false;
            }
        }
        partial.is_zero()
    }
}
