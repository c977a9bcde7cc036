//! Formal integer combinations of l-weights (elements of the group ring).
//!
//! A q-character is a finitely supported map from l-weights to nonzero
//! integers, all keys sharing one parity sequence. The ring structure mirrors
//! tensor products: addition merges multiplicities, multiplication convolves
//! supports.

use std::collections::BTreeMap;
use std::fmt;

use crate::lweight::{LWeight, LWeightError};
use crate::parity::ParitySeq;

#[derive(Clone, PartialEq, Eq)]
pub struct QChar {
    parity: ParitySeq,
    terms: BTreeMap<LWeight, i64>,
}

impl QChar {
    /// The zero element over the given parity.
    pub fn zero(parity: ParitySeq) -> Self {
        QChar {
            parity,
            terms: BTreeMap::new(),
        }
    }

    /// A single term with multiplicity one.
    pub fn single(z: LWeight) -> Self {
        let mut q = QChar::zero(z.parity().clone());
        q.add_term(z, 1).unwrap();
        q
    }

    pub fn parity(&self) -> &ParitySeq {
        &self.parity
    }

    pub fn terms(&self) -> &BTreeMap<LWeight, i64> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct l-weights in the support.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// Multiplicity of an l-weight (zero when absent).
    pub fn multiplicity(&self, z: &LWeight) -> i64 {
        self.terms.get(z).copied().unwrap_or(0)
    }

    /// Add `mult` copies of the l-weight; entries cancelling to zero are
    /// removed so representations stay canonical.
    pub fn add_term(&mut self, z: LWeight, mult: i64) -> Result<(), LWeightError> {
        if z.parity() != &self.parity {
            return Err(LWeightError::ParityMismatch);
        }
        if mult == 0 {
            return Ok(());
        }
        let value = self.terms.get(&z).copied().unwrap_or(0) + mult;
        if value == 0 {
            self.terms.remove(&z);
        } else {
            self.terms.insert(z, value);
        }
        Ok(())
    }

    /// Sum of multiplicities; for a genuine character this is the dimension.
    pub fn dim(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn has_negative(&self) -> bool {
        self.terms.values().any(|&v| v < 0)
    }

    /// Commutative merge: add multiplicities pointwise.
    pub fn add(&self, other: &QChar) -> Result<QChar, LWeightError> {
        if self.parity != other.parity {
            return Err(LWeightError::ParityMismatch);
        }
        let mut out = self.clone();
        for (z, &m) in &other.terms {
            out.add_term(z.clone(), m)?;
        }
        Ok(out)
    }

    /// Group-ring product: multiply supports pairwise, multiplicities
    /// multiply. This is the character of a tensor product.
    pub fn mul(&self, other: &QChar) -> Result<QChar, LWeightError> {
        if self.parity != other.parity {
            return Err(LWeightError::ParityMismatch);
        }
        let mut out = QChar::zero(self.parity.clone());
        for (a, &ma) in &self.terms {
            for (b, &mb) in &other.terms {
                out.add_term(a.try_mul(b)?, ma * mb)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> QChar {
        if c == 0 {
            return QChar::zero(self.parity.clone());
        }
        QChar {
            parity: self.parity.clone(),
            terms: self
                .terms
                .iter()
                .map(|(z, &m)| (z.clone(), m * c))
                .collect(),
        }
    }

    /// The terms whose ordinary weight is not strictly below any other
    /// term's; for the character of an irreducible this singles out the
    /// highest l-weight.
    pub fn varpi_maximal_terms(&self) -> Vec<&LWeight> {
        let entries: Vec<_> = self.terms.keys().map(|z| (z, z.varpi())).collect();
        entries
            .iter()
            .filter(|(_, w)| !entries.iter().any(|(_, ow)| w.leq(ow) && ow != w))
            .map(|(z, _)| *z)
            .collect()
    }
}

impl fmt::Display for QChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (z, m) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            if *m != 1 {
                write!(f, "{}*", m)?;
            }
            write!(f, "[{}]", z)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for QChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
