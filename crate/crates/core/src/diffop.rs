//! Truncated series in the shift operator D with rational-function
//! coefficients, and the rational difference operator attached to a Bethe
//! system.
//!
//! D denotes the unit downward shift: D f(u) = f(u-1) D. A series is stored
//! as coefficients c_0..c_R of powers of D and all arithmetic is performed
//! modulo D^{R+1}. The operator of a system is the ordered product over
//! positions i of (1 - A_i(u) D)^(s_i) with
//!
//! ```text
//! A_i(u) = zeta_i(u) * y_{i-1}(u+s_i) y_i(u-s_i) / (y_{i-1}(u) y_i(u)).
//! ```
//!
//! Equality of two series certifies the operator identity only up to the
//! truncation order, so comparisons always carry that order.

use std::fmt;

use crate::lweight::LWeight;
use crate::poly::DensePoly;
use crate::rat::Rat;

/// Errors from shift-operator arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiffOpError {
    /// Two series of different truncation orders were combined.
    OrderMismatch { left: usize, right: usize },
}

impl DiffOpError {
    pub fn name(&self) -> &'static str {
        match self {
            DiffOpError::OrderMismatch { .. } => "OrderMismatch",
        }
    }
}

impl fmt::Display for DiffOpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiffOpError::OrderMismatch { left, right } => {
                write!(f, "truncation orders differ: {} vs {}", left, right)
            }
        }
    }
}

impl std::error::Error for DiffOpError {}

/// A reduced ratio of dense polynomials; the denominator is monic and
/// coprime to the numerator, so equality is structural.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFuncDense {
    num: DensePoly,
    den: DensePoly,
}

impl RatFuncDense {
    pub fn new(num: DensePoly, den: DensePoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::reduced(num, den)
    }

    fn reduced(num: DensePoly, den: DensePoly) -> Self {
        if num.is_zero() {
            return RatFuncDense {
                num,
                den: DensePoly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() > 0 {
            (num.exact_div(&g), den.exact_div(&g))
        } else {
            (num, den)
        };
        let lc_inv = den.leading().unwrap().recip();
        RatFuncDense {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    pub fn zero() -> Self {
        RatFuncDense {
            num: DensePoly::zero(),
            den: DensePoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFuncDense {
            num: DensePoly::one(),
            den: DensePoly::one(),
        }
    }

    pub fn from_poly(p: DensePoly) -> Self {
        RatFuncDense {
            num: p,
            den: DensePoly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFuncDense::from_poly(DensePoly::constant(c))
    }

    pub fn num(&self) -> &DensePoly {
        &self.num
    }

    pub fn den(&self) -> &DensePoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == DensePoly::one() && self.den == DensePoly::one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let d = self.den.gcd(&other.den);
        if d.degree() == 0 {
            // coprime denominators: the sum is already reduced
            return RatFuncDense {
                num: &(&self.num * &other.den) + &(&other.num * &self.den),
                den: &self.den * &other.den,
            };
        }
        let other_red = other.den.exact_div(&d);
        let num = &(&self.num * &other_red) + &(&other.num * &self.den.exact_div(&d));
        Self::reduced(num, &self.den * &other_red)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        // both factors are reduced, so only cross cancellations can occur
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let num = &self.num.exact_div(&g1) * &other.num.exact_div(&g2);
        let den = &self.den.exact_div(&g2) * &other.den.exact_div(&g1);
        RatFuncDense { num, den }
    }

    pub fn neg(&self) -> Self {
        RatFuncDense {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// The function at u -> u + a; reduction is preserved by shifts.
    pub fn shift(&self, a: &Rat) -> Self {
        RatFuncDense {
            num: self.num.shift(a),
            den: self.den.shift(a),
        }
    }
}

impl fmt::Display for RatFuncDense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == DensePoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// A truncated series sum of c_r(u) D^r for r = 0..=order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftOpSeries {
    coeffs: Vec<RatFuncDense>,
}

impl ShiftOpSeries {
    /// The identity operator at the given truncation order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![RatFuncDense::zero(); order + 1];
        coeffs[0] = RatFuncDense::one();
        ShiftOpSeries { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<RatFuncDense>) -> Self {
        assert!(!coeffs.is_empty());
        ShiftOpSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[RatFuncDense] {
        &self.coeffs
    }

    pub fn coeff(&self, r: usize) -> &RatFuncDense {
        &self.coeffs[r]
    }

    /// The two-term factor 1 - a(u) D, padded to the order.
    pub fn factor(a: &RatFuncDense, order: usize) -> Self {
        let mut coeffs = vec![RatFuncDense::zero(); order + 1];
        coeffs[0] = RatFuncDense::one();
        if order >= 1 {
            coeffs[1] = a.neg();
        }
        ShiftOpSeries { coeffs }
    }

    /// The geometric inverse (1 - a(u) D)^{-1}: coefficient r is the
    /// product a(u) a(u-1) ... a(u-r+1).
    pub fn inverse_factor(a: &RatFuncDense, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(RatFuncDense::one());
        for r in 1..=order {
            let shifted = a.shift(&Rat::from_int(-((r - 1) as i64)));
            coeffs.push(coeffs[r - 1].mul(&shifted));
        }
        ShiftOpSeries { coeffs }
    }

    /// Noncommutative product truncated at the common order: the coefficient
    /// of D^k collects a_r(u) * b_t(u - r) over r + t = k.
    pub fn mul(&self, other: &Self) -> Result<Self, DiffOpError> {
        if self.order() != other.order() {
            return Err(DiffOpError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        let order = self.order();
        let mut coeffs = vec![RatFuncDense::zero(); order + 1];
        for (r, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in other.coeffs.iter().enumerate() {
                if r + t > order {
                    break;
                }
                if b.is_zero() {
                    continue;
                }
                let term = a.mul(&b.shift(&Rat::from_int(-(r as i64))));
                coeffs[r + t] = coeffs[r + t].add(&term);
            }
        }
        Ok(ShiftOpSeries { coeffs })
    }

    /// Componentwise equality at matching truncation orders.
    pub fn eq_checked(&self, other: &Self) -> Result<bool, DiffOpError> {
        if self.order() != other.order() {
            return Err(DiffOpError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(self == other)
    }

    /// Index of the first differing coefficient, if any.
    pub fn first_mismatch(&self, other: &Self) -> Option<usize> {
        let shared = self.coeffs.len().min(other.coeffs.len());
        for r in 0..shared {
            if self.coeffs[r] != other.coeffs[r] {
                return Some(r);
            }
        }
        if self.coeffs.len() != other.coeffs.len() {
            return Some(shared);
        }
        None
    }
}

impl fmt::Display for ShiftOpSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (r, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            match r {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "[{}] D", c)?,
                _ => write!(f, "[{}] D^{}", c, r)?,
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The rational difference operator of an l-weight and node polynomials,
/// truncated at `order`: the ordered product over positions i = 1..=m+n of
/// (1 - A_i(u) D)^(s_i), with the boundary convention y_0 = y_{m+n} = 1.
pub fn build_operator(zeta: &LWeight, y: &[DensePoly], order: usize) -> ShiftOpSeries {
    let s = zeta.parity();
    let len = s.len();
    assert_eq!(y.len(), len - 1, "one node polynomial per inner node");
    let y_at = |i: usize| -> DensePoly {
        if i == 0 || i == len {
            DensePoly::one()
        } else {
            y[i - 1].clone()
        }
    };
    let mut acc = ShiftOpSeries::one(order);
    for i in 1..=len {
        let si = Rat::from_int(s.sign(i) as i64);
        let comp = zeta.component(i);
        let prev = y_at(i - 1);
        let cur = y_at(i);
        let num = &(&comp.num().to_dense() * &prev.shift(&si)) * &cur.shift(&(-&si));
        let den = &(&comp.den().to_dense() * &prev) * &cur;
        let a = RatFuncDense::new(num, den);
        let factor = if s.sign(i) == 1 {
            ShiftOpSeries::factor(&a, order)
        } else {
            ShiftOpSeries::inverse_factor(&a, order)
        };
        acc = acc.mul(&factor).expect("orders match by construction");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lweight::RatB;
    use crate::parity::ParitySeq;
    use crate::poly::FactoredPoly;

    fn rf(coeffs: &[i64]) -> RatFuncDense {
        RatFuncDense::from_poly(DensePoly::from_int_coeffs(coeffs))
    }

    #[test]
    fn rational_function_reduction() {
        // (u^2 - 1)/(2u + 2) = (u - 1)/2
        let r = RatFuncDense::new(
            DensePoly::from_int_coeffs(&[-1, 0, 1]),
            DensePoly::from_int_coeffs(&[2, 2]),
        );
        assert_eq!(
            r.num(),
            &DensePoly::from_coeffs(vec![Rat::new(-1, 2), Rat::new(1, 2)])
        );
        assert_eq!(r.den(), &DensePoly::one());

        let a = RatFuncDense::new(DensePoly::one(), DensePoly::ident());
        let b = RatFuncDense::new(DensePoly::one(), DensePoly::from_int_coeffs(&[1, 1]));
        let sum = a.add(&b);
        // 1/u + 1/(u+1) = (2u+1)/(u(u+1))
        assert_eq!(sum.num(), &DensePoly::from_int_coeffs(&[1, 2]));
        assert_eq!(sum.den(), &DensePoly::from_int_coeffs(&[0, 1, 1]));
        assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn identity_multiplication() {
        let one = ShiftOpSeries::one(4);
        let b = ShiftOpSeries::inverse_factor(&rf(&[3, 1]), 4);
        assert_eq!(one.mul(&b).unwrap(), b);
        assert_eq!(b.mul(&one).unwrap(), b);
    }

    #[test]
    fn shift_rule_single_power() {
        // (f D)(g D) = f(u) g(u-1) D^2
        let f = rf(&[0, 1]); // u
        let g = rf(&[1, 1]); // u + 1
        let mut fa = vec![RatFuncDense::zero(); 3];
        fa[1] = f.clone();
        let mut ga = vec![RatFuncDense::zero(); 3];
        ga[1] = g.clone();
        let prod = ShiftOpSeries::from_coeffs(fa)
            .mul(&ShiftOpSeries::from_coeffs(ga))
            .unwrap();
        assert!(prod.coeff(0).is_zero());
        assert!(prod.coeff(1).is_zero());
        // g(u-1) = u, so the D^2 coefficient is u^2
        assert_eq!(prod.coeff(2), &rf(&[0, 0, 1]));
    }

    #[test]
    fn geometric_inverse_of_constant() {
        let inv = ShiftOpSeries::inverse_factor(&rf(&[1]), 2);
        assert_eq!(inv.coeff(0), &RatFuncDense::one());
        assert_eq!(inv.coeff(1), &RatFuncDense::one());
        assert_eq!(inv.coeff(2), &RatFuncDense::one());
        let zero_inv = ShiftOpSeries::inverse_factor(&RatFuncDense::zero(), 3);
        assert_eq!(zero_inv, ShiftOpSeries::one(3));
    }

    #[test]
    fn factor_times_inverse_is_identity() {
        let a = RatFuncDense::new(
            DensePoly::from_int_coeffs(&[2, 0, 1]),
            DensePoly::from_int_coeffs(&[-1, 1]),
        );
        for order in [0, 1, 5, 8] {
            let f = ShiftOpSeries::factor(&a, order);
            let inv = ShiftOpSeries::inverse_factor(&a, order);
            assert_eq!(f.mul(&inv).unwrap(), ShiftOpSeries::one(order));
            assert_eq!(inv.mul(&f).unwrap(), ShiftOpSeries::one(order));
        }
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = ShiftOpSeries::one(3);
        let b = ShiftOpSeries::one(4);
        assert!(matches!(
            a.mul(&b).unwrap_err(),
            DiffOpError::OrderMismatch { left: 3, right: 4 }
        ));
        assert!(a.eq_checked(&b).is_err());
    }

    #[test]
    fn unit_weight_operators() {
        // rank (1|1): (1 - D)(1 - D)^{-1} = 1
        let z = LWeight::unit("+-".parse().unwrap());
        let op = build_operator(&z, &[DensePoly::one()], 6);
        assert_eq!(op, ShiftOpSeries::one(6));

        // rank (2|0): (1 - D)^2 = 1 - 2D + D^2
        let z = LWeight::unit(ParitySeq::standard(2, 0));
        let op = build_operator(&z, &[DensePoly::one()], 2);
        assert_eq!(op.coeff(0), &RatFuncDense::one());
        assert_eq!(op.coeff(1), &rf(&[-2]));
        assert_eq!(op.coeff(2), &rf(&[1]));
    }

    #[test]
    fn leading_coefficient_is_always_one() {
        let zeta = LWeight::new(
            "+-".parse().unwrap(),
            vec![
                RatB::new(
                    FactoredPoly::from_int_roots(&[-1, -2]),
                    FactoredPoly::from_int_roots(&[0, 1]),
                )
                .unwrap(),
                RatB::one(),
            ],
        )
        .unwrap();
        let y = vec![DensePoly::from_coeffs(vec![Rat::new(1, 2), Rat::one()])];
        let op = build_operator(&zeta, &y, 5);
        assert!(op.coeff(0).is_one());
    }

    #[test]
    fn rank_two_reproduction_identity_example() {
        // ((u+1)/u, 1) over +- with y = 1 against ((u-1)/u, 1) over -+ with
        // y = 1: the same operator to every checked order
        let before = LWeight::new(
            "+-".parse().unwrap(),
            vec![
                RatB::new(
                    FactoredPoly::from_int_roots(&[-1]),
                    FactoredPoly::from_int_roots(&[0]),
                )
                .unwrap(),
                RatB::one(),
            ],
        )
        .unwrap();
        let after = LWeight::new(
            "-+".parse().unwrap(),
            vec![
                RatB::new(
                    FactoredPoly::from_int_roots(&[1]),
                    FactoredPoly::from_int_roots(&[0]),
                )
                .unwrap(),
                RatB::one(),
            ],
        )
        .unwrap();
        for order in [1, 4, 8] {
            let lhs = build_operator(&before, &[DensePoly::one()], order);
            let rhs = build_operator(&after, &[DensePoly::one()], order);
            assert!(lhs.eq_checked(&rhs).unwrap(), "order {}", order);
        }
    }
}
