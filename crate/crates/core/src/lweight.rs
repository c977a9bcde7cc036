//! The abelian group of l-weights.
//!
//! An l-weight is a tuple of m+n components, one per position of a parity
//! sequence, each a reduced ratio of monic polynomials of equal degree. The
//! equal-degree reduced form is exactly the class of series in
//! 1 + u^{-1}Q[[u^{-1}]] that expand rational functions at infinity, so group
//! operations are multiset operations on roots and equality is structural.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::parity::{GlWeight, ParitySeq};
use crate::poly::FactoredPoly;
use crate::rat::Rat;

/// Errors from l-weight construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LWeightError {
    /// A component's numerator and denominator have different degrees after
    /// reduction, so it does not expand to 1 + O(u^{-1}).
    UnequalDegrees { component: usize },
    /// The number of components does not match the parity length.
    ComponentCount { expected: usize, got: usize },
    /// Two l-weights over different parity sequences were combined.
    ParityMismatch,
    /// The finiteness criterion is only stated for the standard sequence.
    NotStandardParity,
}

impl LWeightError {
    pub fn name(&self) -> &'static str {
        match self {
            LWeightError::UnequalDegrees { .. } => "UnequalDegrees",
            LWeightError::ComponentCount { .. } => "ComponentCount",
            LWeightError::ParityMismatch => "ParityMismatch",
            LWeightError::NotStandardParity => "NotStandardParity",
        }
    }
}

impl fmt::Display for LWeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LWeightError::UnequalDegrees { component } => {
                write!(
                    f,
                    "component {} has unequal numerator/denominator degree",
                    component
                )
            }
            LWeightError::ComponentCount { expected, got } => {
                write!(f, "expected {} components, got {}", expected, got)
            }
            LWeightError::ParityMismatch => write!(f, "parity sequences differ"),
            LWeightError::NotStandardParity => {
                write!(
                    f,
                    "finiteness criterion requires the standard parity sequence"
                )
            }
        }
    }
}

impl std::error::Error for LWeightError {}

/// A reduced ratio of monic polynomials of equal degree, an element of
/// 1 + u^{-1}Q[[u^{-1}]] that is rational with rational roots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatB {
    num: FactoredPoly,
    den: FactoredPoly,
}

impl RatB {
    /// Reduce and validate the equal-degree invariant.
    pub fn new(num: FactoredPoly, den: FactoredPoly) -> Result<Self, LWeightError> {
        let r = Self::reduced(num, den);
        if r.num.degree() != r.den.degree() {
            return Err(LWeightError::UnequalDegrees { component: 0 });
        }
        Ok(r)
    }

    /// Cancel the common root multiset. Degrees are the caller's business.
    fn reduced(num: FactoredPoly, den: FactoredPoly) -> Self {
        let g = num.gcd(&den);
        if g.is_one() {
            return RatB { num, den };
        }
        RatB {
            num: num.try_div(&g).unwrap(),
            den: den.try_div(&g).unwrap(),
        }
    }

    pub fn one() -> Self {
        RatB {
            num: FactoredPoly::one(),
            den: FactoredPoly::one(),
        }
    }

    /// (u - a) / (u - b), already coprime when a != b.
    pub fn linear_ratio(num_root: Rat, den_root: Rat) -> Self {
        if num_root == den_root {
            return RatB::one();
        }
        RatB {
            num: FactoredPoly::linear(num_root),
            den: FactoredPoly::linear(den_root),
        }
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn num(&self) -> &FactoredPoly {
        &self.num
    }

    pub fn den(&self) -> &FactoredPoly {
        &self.den
    }

    /// Degree of numerator (= denominator).
    pub fn degree(&self) -> usize {
        self.num.degree()
    }

    pub fn mul(&self, other: &RatB) -> RatB {
        RatB::reduced(&self.num * &other.num, &self.den * &other.den)
    }

    /// Multiply by the ratio num/den of factored polynomials.
    pub fn mul_ratio(&self, num: &FactoredPoly, den: &FactoredPoly) -> RatB {
        RatB::reduced(&self.num * num, &self.den * den)
    }

    pub fn inverse(&self) -> RatB {
        RatB {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }

    pub fn div(&self, other: &RatB) -> RatB {
        self.mul(&other.inverse())
    }

    /// Coefficient of u^{-1} in the expansion at infinity: the sum of
    /// denominator roots minus the sum of numerator roots.
    pub fn u_inv_coeff(&self) -> Rat {
        &self.den.root_sum() - &self.num.root_sum()
    }

    /// The function evaluated at u -> u + a.
    pub fn shift(&self, a: &Rat) -> RatB {
        RatB {
            num: self.num.shift(a),
            den: self.den.shift(a),
        }
    }
}

impl fmt::Display for RatB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            write!(f, "1")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// An l-weight: one `RatB` component per position of its parity sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LWeight {
    parity: ParitySeq,
    components: Vec<RatB>,
}

impl LWeight {
    pub fn new(parity: ParitySeq, components: Vec<RatB>) -> Result<Self, LWeightError> {
        if components.len() != parity.len() {
            return Err(LWeightError::ComponentCount {
                expected: parity.len(),
                got: components.len(),
            });
        }
        Ok(LWeight { parity, components })
    }

    /// The identity of the group: every component 1.
    pub fn unit(parity: ParitySeq) -> Self {
        let components = vec![RatB::one(); parity.len()];
        LWeight { parity, components }
    }

    pub fn parity(&self) -> &ParitySeq {
        &self.parity
    }

    pub fn components(&self) -> &[RatB] {
        &self.components
    }

    /// Component at 1-based position i.
    pub fn component(&self, i: usize) -> &RatB {
        &self.components[i - 1]
    }

    pub fn is_unit(&self) -> bool {
        self.components.iter().all(|c| c.is_one())
    }

    /// Pointwise product. Both factors must live over the same parity.
    pub fn try_mul(&self, other: &LWeight) -> Result<LWeight, LWeightError> {
        if self.parity != other.parity {
            return Err(LWeightError::ParityMismatch);
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.mul(b))
            .collect();
        Ok(LWeight {
            parity: self.parity.clone(),
            components,
        })
    }

    pub fn try_div(&self, other: &LWeight) -> Result<LWeight, LWeightError> {
        self.try_mul(&other.inverse())
    }

    pub fn inverse(&self) -> LWeight {
        LWeight {
            parity: self.parity.clone(),
            components: self.components.iter().map(|c| c.inverse()).collect(),
        }
    }

    /// Replace component i (1-based) by component * num/den, reduced.
    pub fn with_component_ratio(
        &self,
        i: usize,
        num: &FactoredPoly,
        den: &FactoredPoly,
    ) -> LWeight {
        let mut components = self.components.clone();
        components[i - 1] = components[i - 1].mul_ratio(num, den);
        LWeight {
            parity: self.parity.clone(),
            components,
        }
    }

    /// Rebuild the same components over another parity sequence of equal
    /// length (used by the reflection rule, which relabels positions).
    pub(crate) fn with_parity(&self, parity: ParitySeq, components: Vec<RatB>) -> LWeight {
        assert_eq!(parity.len(), components.len());
        LWeight { parity, components }
    }

    /// The ordinary gl(m|n)-weight of this l-weight: coordinate i is
    /// s_i times the u^{-1}-coefficient of component i.
    pub fn varpi(&self) -> GlWeight {
        let coords = self
            .components
            .iter()
            .enumerate()
            .map(|(idx, c)| {
                let s = Rat::from_int(self.parity.sign(idx + 1) as i64);
                &s * &c.u_inv_coeff()
            })
            .collect();
        GlWeight::new(coords)
    }

    /// The reduced ratio component_i / component_{i+1} as a coprime pair of
    /// monic equal-degree polynomials (numerator, denominator).
    pub fn coprime_ratio(&self, i: usize) -> (FactoredPoly, FactoredPoly) {
        assert!(i >= 1 && i < self.components.len(), "node out of range");
        let a = &self.components[i - 1];
        let b = &self.components[i];
        let ratio = RatB::reduced(a.num() * b.den(), a.den() * b.num());
        (ratio.num, ratio.den)
    }

    /// The simple l-root at node i with parameter a: component j is
    /// (u-a)/(u-a-(alpha_i, eps_j)).
    pub fn simple_lroot(s: &ParitySeq, i: usize, a: &Rat) -> LWeight {
        assert!(i >= 1 && i < s.len(), "node out of range");
        let components = (1..=s.len())
            .map(|j| {
                let c = s.alpha_pair(i, j);
                if c == 0 {
                    RatB::one()
                } else {
                    RatB::linear_ratio(a.clone(), a + &Rat::from_int(c))
                }
            })
            .collect();
        LWeight {
            parity: s.clone(),
            components,
        }
    }

    /// The X-factor at position i with integer content a: the only nontrivial
    /// component sits at position i and equals
    /// (u+a+kappa_i+1)/(u+a+kappa_i) raised to the sign s_i.
    pub fn xfactor(s: &ParitySeq, i: usize, a: i64) -> LWeight {
        assert!(i >= 1 && i <= s.len(), "position out of range");
        let kappa = s.kappa()[i - 1];
        let base = a + kappa;
        // roots of u+c are -c
        let upper = Rat::from_int(-(base + 1));
        let lower = Rat::from_int(-base);
        let ratio = if s.sign(i) == 1 {
            RatB::linear_ratio(upper, lower)
        } else {
            RatB::linear_ratio(lower, upper)
        };
        let mut components = vec![RatB::one(); s.len()];
        components[i - 1] = ratio;
        LWeight {
            parity: s.clone(),
            components,
        }
    }

    /// Finiteness criterion at the standard parity sequence: at each node
    /// i != m the reduced ratio must be a shift ladder g(u+s_i)/g(u); at node
    /// m the equal-degree reduced ratio is the only requirement, which this
    /// representation enforces by construction.
    pub fn finite_dim_check(&self) -> Result<bool, LWeightError> {
        if !self.parity.is_standard() {
            return Err(LWeightError::NotStandardParity);
        }
        let (m, n) = (self.parity.m(), self.parity.n());
        for i in 1..self.parity.len() {
            if m >= 1 && n >= 1 && i == m {
                continue;
            }
            let (num, den) = self.coprime_ratio(i);
            if shift_ladder_solve(&num, &den, self.parity.sign(i)).is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl fmt::Display for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self, self.parity)
    }
}

/// Solve num/den = g(u+step)/g(u) for a monic polynomial g with rational
/// roots, if one exists.
///
/// Roots are partitioned into classes modulo the integers. Within a class
/// with multiplicities nu(t) (numerator) and delta(t) (denominator) at
/// integer coordinate t, the multiplicity of g at t is the partial sum of
/// nu - delta over coordinates below t (step +1) or above t (step -1);
/// g exists exactly when all partial sums are nonnegative and each class
/// balances to zero.
pub fn shift_ladder_solve(
    num: &FactoredPoly,
    den: &FactoredPoly,
    step: i8,
) -> Option<FactoredPoly> {
    assert!(step == 1 || step == -1, "step must be +-1");
    debug_assert!(num.gcd(den).is_one(), "inputs must be coprime");

    // class representative -> coordinate -> nu - delta
    let mut classes: BTreeMap<Rat, BTreeMap<BigInt, i64>> = BTreeMap::new();
    for (roots, sign) in [(num.roots(), 1i64), (den.roots(), -1i64)] {
        for r in roots {
            let coord = r.floor_int();
            let rep = r - &Rat::from_bigint(coord.clone());
            *classes.entry(rep).or_default().entry(coord).or_insert(0) += sign;
        }
    }

    let mut g_roots: Vec<Rat> = Vec::new();
    for (rep, class) in classes {
        let support: Vec<(BigInt, i64)> = if step == 1 {
            class.into_iter().collect()
        } else {
            class.into_iter().rev().collect()
        };
        let mut run: i64 = 0;
        let mut prev: Option<BigInt> = None;
        for (t, net) in support {
            if let Some(p) = prev {
                if run > 0 {
                    // the partial sum is constant on the whole gap
                    let width = if step == 1 { &t - &p } else { &p - &t };
                    let width = usize::try_from(width).expect("shift ladder gap too large");
                    for k in 0..width {
                        let offset = if step == 1 {
                            &p + BigInt::from(k + 1)
                        } else {
                            &p - BigInt::from(k + 1)
                        };
                        let root = &rep + &Rat::from_bigint(offset);
                        for _ in 0..run {
                            g_roots.push(root.clone());
                        }
                    }
                }
            }
            run += net;
            if run < 0 {
                return None;
            }
            prev = Some(t);
        }
        if run != 0 {
            return None;
        }
    }
    Some(FactoredPoly::from_roots(g_roots))
}
