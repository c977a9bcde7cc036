use std::fmt;
use std::ops::Mul;

use super::{DensePoly, PolyError};
use crate::rat::Rat;

/// A monic polynomial represented by the multiset of its rational roots:
/// the product of (u - r) over the stored roots. The empty multiset is the
/// constant polynomial 1.
///
/// Roots are kept sorted, so equal polynomials compare equal structurally.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FactoredPoly {
    roots: Vec<Rat>,
}

impl FactoredPoly {
    /// The constant polynomial 1.
    pub fn one() -> Self {
        FactoredPoly { roots: Vec::new() }
    }

    pub fn from_roots<I: IntoIterator<Item = Rat>>(roots: I) -> Self {
        let mut roots: Vec<Rat> = roots.into_iter().collect();
        roots.sort();
        FactoredPoly { roots }
    }

    /// Convenience constructor from integer roots.
    pub fn from_int_roots(roots: &[i64]) -> Self {
        Self::from_roots(roots.iter().map(|&r| Rat::from_int(r)))
    }

    /// The single factor (u - r).
    pub fn linear(root: Rat) -> Self {
        FactoredPoly { roots: vec![root] }
    }

    pub fn roots(&self) -> &[Rat] {
        &self.roots
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    pub fn is_one(&self) -> bool {
        self.roots.is_empty()
    }

    /// Multiplicity of `r` as a root.
    pub fn multiplicity(&self, r: &Rat) -> usize {
        self.roots.iter().filter(|x| *x == r).count()
    }

    /// Sum of all roots (with multiplicity).
    pub fn root_sum(&self) -> Rat {
        self.roots.iter().fold(Rat::zero(), |acc, r| &acc + r)
    }

    /// The polynomial p(u + a); every root r moves to r - a.
    pub fn shift(&self, a: &Rat) -> Self {
        Self::from_roots(self.roots.iter().map(|r| r - a))
    }

    /// Value at the point `x`: the product of (x - r).
    pub fn eval(&self, x: &Rat) -> Rat {
        self.roots.iter().fold(Rat::one(), |acc, r| &acc * &(x - r))
    }

    /// Multiset intersection: the greatest common monic divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.roots.len() && j < other.roots.len() {
            match self.roots[i].cmp(&other.roots[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.roots[i].clone());
                    i += 1;
                    j += 1;
                }
            }
        }
        FactoredPoly { roots: out }
    }

    /// Multiset difference; fails unless `other`'s roots all occur here.
    pub fn try_div(&self, other: &Self) -> Result<Self, PolyError> {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.roots.len() {
            if j < other.roots.len() {
                match self.roots[i].cmp(&other.roots[j]) {
                    std::cmp::Ordering::Less => {
                        out.push(self.roots[i].clone());
                        i += 1;
                    }
                    std::cmp::Ordering::Greater => return Err(PolyError::NotDivisible),
                    std::cmp::Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                }
            } else {
                out.push(self.roots[i].clone());
                i += 1;
            }
        }
        if j < other.roots.len() {
            return Err(PolyError::NotDivisible);
        }
        Ok(FactoredPoly { roots: out })
    }

    /// Expand into dense coefficient form.
    pub fn to_dense(&self) -> DensePoly {
        let mut p = DensePoly::one();
        for r in &self.roots {
            p = &p * &DensePoly::from_coeffs(vec![-r, Rat::one()]);
        }
        p
    }
}

impl Mul for &FactoredPoly {
    type Output = FactoredPoly;

    /// Multiset union of roots.
    fn mul(self, rhs: &FactoredPoly) -> FactoredPoly {
        let mut roots = self.roots.clone();
        roots.extend_from_slice(&rhs.roots);
        roots.sort();
        FactoredPoly { roots }
    }
}

impl Mul for FactoredPoly {
    type Output = FactoredPoly;
    fn mul(self, rhs: FactoredPoly) -> FactoredPoly {
        &self * &rhs
    }
}

impl fmt::Display for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.roots.is_empty() {
            return write!(f, "1");
        }
        let mut i = 0;
        while i < self.roots.len() {
            let r = &self.roots[i];
            let mult = self.roots[i..].iter().take_while(|x| *x == r).count();
            if r.is_zero() {
                write!(f, "u")?;
            } else if r.is_negative() {
                write!(f, "(u+{})", -r)?;
            } else {
                write!(f, "(u-{})", r)?;
            }
            if mult > 1 {
                write!(f, "^{}", mult)?;
            }
            i += mult;
        }
        Ok(())
    }
}

impl fmt::Debug for FactoredPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(roots: &[i64]) -> FactoredPoly {
        FactoredPoly::from_int_roots(roots)
    }

    #[test]
    fn mul_is_multiset_union() {
        assert_eq!(&fp(&[-1]) * &fp(&[0]), fp(&[-1, 0]));
        assert_eq!(&FactoredPoly::one() * &fp(&[5]), fp(&[5]));
        assert_eq!(&fp(&[2, 2]) * &fp(&[2]), fp(&[2, 2, 2]));
    }

    #[test]
    fn shift_moves_roots() {
        // u at u+1 is u+1, whose root is -1
        assert_eq!(fp(&[0]).shift(&Rat::from_int(1)), fp(&[-1]));
        let p = fp(&[3, -2, 0]);
        assert_eq!(p.shift(&Rat::zero()), p);
    }

    #[test]
    fn shift_matches_dense_expansion() {
        // (u+1)(u+2) at u-1 is u(u+1)
        let p = fp(&[-1, -2]);
        let shifted = p.shift(&Rat::from_int(-1));
        assert_eq!(shifted, fp(&[0, -1]));
        let dense_direct = shifted.to_dense();
        let dense_via_shift = p.to_dense().shift(&Rat::from_int(-1));
        assert_eq!(dense_direct, dense_via_shift);
    }

    #[test]
    fn gcd_and_div() {
        assert_eq!(fp(&[0, 1]).gcd(&fp(&[1, 2])), fp(&[1]));
        assert_eq!(fp(&[0, 1, 1]).try_div(&fp(&[1])).unwrap(), fp(&[0, 1]));
        assert_eq!(fp(&[0]).gcd(&fp(&[1])), FactoredPoly::one());
        assert_eq!(
            fp(&[0]).try_div(&fp(&[1])).unwrap_err(),
            PolyError::NotDivisible
        );
        // multiplicity is respected
        assert_eq!(fp(&[1, 1, 2]).gcd(&fp(&[1, 2, 2])), fp(&[1, 2]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(FactoredPoly::one().to_string(), "1");
        assert_eq!(fp(&[0]).to_string(), "u");
        assert_eq!(fp(&[-1, -1]).to_string(), "(u+1)^2");
        assert_eq!(
            FactoredPoly::from_roots(vec![Rat::new(1, 2)]).to_string(),
            "(u-1/2)"
        );
    }
}
