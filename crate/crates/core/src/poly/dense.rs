use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{FactoredPoly, PolyError};
use crate::rat::Rat;

/// A polynomial with rational coefficients stored lowest degree first.
/// The zero polynomial is the empty list; otherwise the last coefficient
/// is nonzero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DensePoly {
    coeffs: Vec<Rat>,
}

impl DensePoly {
    pub fn zero() -> Self {
        DensePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        DensePoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        DensePoly::from_coeffs(vec![c])
    }

    /// The monomial u.
    pub fn ident() -> Self {
        DensePoly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    /// Build from coefficients, lowest degree first; trailing zeros are
    /// trimmed so representations are canonical.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        DensePoly { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        DensePoly::from_coeffs(coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of u^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; by convention 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Divide by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => DensePoly::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return DensePoly::zero();
        }
        DensePoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// The polynomial p(u + a), by binomial expansion.
    pub fn shift(&self, a: &Rat) -> Self {
        if a.is_zero() || self.is_zero() {
            return self.clone();
        }
        let n = self.coeffs.len();
        let mut out = vec![Rat::zero(); n];
        // powers[t] = a^t
        let mut powers = Vec::with_capacity(n);
        powers.push(Rat::one());
        for _ in 1..n {
            powers.push(powers.last().unwrap() * a);
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // c * (u+a)^i contributes c * C(i,j) a^(i-j) to u^j
            let mut binom = Rat::one();
            for j in 0..=i {
                // binom = C(i, j) maintained incrementally
                out[j] = &out[j] + &(&(c * &binom) * &powers[i - j]);
                if j < i {
                    binom =
                        &(&binom * &Rat::from_int((i - j) as i64)) / &Rat::from_int((j + 1) as i64);
                }
            }
        }
        DensePoly::from_coeffs(out)
    }

    /// Euclidean division: self = q * divisor + r with deg r < deg divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        if divisor.is_zero() {
            return Err(PolyError::DivideByZero);
        }
        let dlen = divisor.coeffs.len();
        if self.coeffs.len() < dlen {
            return Ok((DensePoly::zero(), self.clone()));
        }
        let lc_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![Rat::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dlen - 1] * &lc_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * d);
                }
            }
            quot[k] = c;
        }
        rem.truncate(dlen - 1);
        Ok((DensePoly::from_coeffs(quot), DensePoly::from_coeffs(rem)))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor).expect("division by zero");
        assert!(r.is_zero(), "exact_div left a remainder");
        q
    }

    /// Monic greatest common divisor.
    ///
    /// Runs a primitive pseudo-remainder sequence over the integers to keep
    /// intermediate coefficients small; the naive rational Euclid blows up
    /// on the degrees the operator checks produce.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let mut a = primitive_int_coeffs(self);
        let mut b = primitive_int_coeffs(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = primitive_part(r);
        }
        let rational = DensePoly::from_coeffs(a.into_iter().map(Rat::from_bigint).collect());
        rational.monic()
    }

    /// Split off every rational linear factor: returns the multiset of
    /// rational roots and the remaining monic factor with no rational roots
    /// (the constant 1 when the polynomial splits). The leading coefficient
    /// is dropped.
    pub fn split_rational_roots(&self) -> Result<(FactoredPoly, DensePoly), PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let mut roots: Vec<Rat> = Vec::new();
        let mut work = self.monic().coeffs;

        // roots at zero
        let mut low = 0;
        while low < work.len() - 1 && work[low].is_zero() {
            roots.push(Rat::zero());
            low += 1;
        }
        work.drain(..low);

        let mut rem = DensePoly { coeffs: work };
        if rem.degree() > 0 {
            for cand in root_candidates(&rem) {
                loop {
                    if rem.degree() == 0 {
                        break;
                    }
                    if !rem.eval(&cand).is_zero() {
                        break;
                    }
                    let factor = DensePoly::from_coeffs(vec![-&cand, Rat::one()]);
                    rem = rem.exact_div(&factor);
                    roots.push(cand.clone());
                }
            }
        }
        Ok((FactoredPoly::from_roots(roots), rem))
    }

    /// Full factorization over the rationals: the leading coefficient and
    /// the multiset of roots. Fails with `NotSplitOverRationals` if a factor
    /// of degree >= 2 without rational roots remains.
    pub fn rational_roots(&self) -> Result<(Rat, FactoredPoly), PolyError> {
        let leading = match self.leading() {
            Some(lc) => lc.clone(),
            None => return Err(PolyError::ZeroPolynomial),
        };
        let (roots, core) = self.split_rational_roots()?;
        if core.degree() > 0 {
            return Err(PolyError::NotSplitOverRationals);
        }
        Ok((leading, roots))
    }
}

/// Clear denominators and divide out the integer content; result is primitive
/// with positive leading coefficient.
fn primitive_int_coeffs(p: &DensePoly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let mut v: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if !content.is_zero() {
        if v.last().map(|c| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if !content.is_zero() {
        if v.last().map(|c| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

/// Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a divided by b, over Z.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    debug_assert!(!b.is_empty() && a.len() >= b.len());
    let lc = b.last().unwrap().clone();
    let mut rem: Vec<BigInt> = a.to_vec();
    for k in (0..=(a.len() - b.len())).rev() {
        for c in rem.iter_mut().take(k + b.len() - 1) {
            *c = &*c * &lc;
        }
        let top = std::mem::replace(&mut rem[k + b.len() - 1], BigInt::zero());
        for (j, d) in b.iter().enumerate().take(b.len() - 1) {
            rem[k + j] = &rem[k + j] - &(&top * d);
        }
    }
    rem.truncate(b.len() - 1);
    while rem.last().is_some_and(|c| c.is_zero()) {
        rem.pop();
    }
    rem
}

/// Candidate rational roots p/q by the rational root theorem, for a
/// polynomial with nonzero constant term.
fn root_candidates(p: &DensePoly) -> Vec<Rat> {
    let v = primitive_int_coeffs(p);
    let lows = divisors(v.first().unwrap().abs());
    let highs = divisors(v.last().unwrap().abs());
    let mut out = Vec::new();
    for num in &lows {
        for den in &highs {
            if num.gcd(den).is_one() {
                let pos = Rat::from_bigint(num.clone()) / Rat::from_bigint(den.clone());
                out.push(-&pos);
                out.push(pos);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All positive divisors of |n|, by trial division.
fn divisors(n: BigInt) -> Vec<BigInt> {
    debug_assert!(n.is_positive());
    if let Some(small) = n.to_u128() {
        let mut out = Vec::new();
        let mut d: u128 = 1;
        while d * d <= small {
            if small % d == 0 {
                out.push(BigInt::from(d));
                out.push(BigInt::from(small / d));
            }
            d += 1;
        }
        return out;
    }
    // large constant terms only appear with artificially big inputs
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out
}

impl Add for &DensePoly {
    type Output = DensePoly;
    fn add(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        DensePoly::from_coeffs(out)
    }
}

impl Sub for &DensePoly {
    type Output = DensePoly;
    fn sub(self, rhs: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) - &rhs.coeff(k));
        }
        DensePoly::from_coeffs(out)
    }
}

impl Mul for &DensePoly {
    type Output = DensePoly;
    fn mul(self, rhs: &DensePoly) -> DensePoly {
        if self.is_zero() || rhs.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        DensePoly::from_coeffs(out)
    }
}

impl Neg for &DensePoly {
    type Output = DensePoly;
    fn neg(self) -> DensePoly {
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            match k {
                0 => write!(f, "{}", a)?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{}*", a)?;
                    }
                    if k == 1 {
                        write!(f, "u")?;
                    } else {
                        write!(f, "u^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for DensePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
