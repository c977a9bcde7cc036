//! Bethe ansatz systems: residual evaluation, the divisibility form of the
//! equations at odd nodes, and the fermionic reproduction step.
//!
//! A system is an l-weight together with one monic polynomial per node. At an
//! odd node i the equations say that y_i divides
//!
//! ```text
//! P_i(u) = phi_i(u) y_{i-1}(u+s_i) y_{i+1}(u)
//!        - psi_i(u) y_{i-1}(u)     y_{i+1}(u-s_{i+1})
//! ```
//!
//! and reproduction replaces y_i by the monic normalization of
//! (P_i / y_i)(u - s_i) while reflecting the l-weight, yielding a system
//! over the swapped parity sequence. Doing it twice returns the original.

use std::fmt;

use crate::lweight::{LWeight, LWeightError};
use crate::parity::ParitySeq;
use crate::poly::DensePoly;
use crate::rat::Rat;
use crate::reflection::{reflect, ReflectionError};

/// Errors from Bethe-system operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BetheError {
    /// The node's signs agree; the divisibility form only exists at odd
    /// nodes.
    SameParity { node: usize },
    /// An evaluation point hit a pole; the offending factor is named.
    PoleAtEvaluation { factor: String },
    /// Reproduction was requested but y_i does not divide P_i.
    NotASolution { node: usize },
    /// P_i vanished identically, so the reproduction relation constrains
    /// nothing.
    DegenerateReproduction { node: usize },
    /// The y list or l-weight does not match the parity sequence.
    Shape(LWeightError),
    /// Non-monic y polynomial.
    NotMonic { index: usize },
}

impl BetheError {
    pub fn name(&self) -> &'static str {
        match self {
            BetheError::SameParity { .. } => "SameParity",
            BetheError::PoleAtEvaluation { .. } => "PoleAtEvaluation",
            BetheError::NotASolution { .. } => "NotASolution",
            BetheError::DegenerateReproduction { .. } => "DegenerateReproduction",
            BetheError::Shape(_) => "Shape",
            BetheError::NotMonic { .. } => "NotMonic",
        }
    }
}

impl fmt::Display for BetheError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BetheError::SameParity { node } => {
                write!(
                    f,
                    "node {} is even; the divisibility form needs an odd node",
                    node
                )
            }
            BetheError::PoleAtEvaluation { factor } => {
                write!(f, "evaluation point is a pole of {}", factor)
            }
            BetheError::NotASolution { node } => {
                write!(f, "y_{} does not divide P_{}", node, node)
            }
            BetheError::DegenerateReproduction { node } => {
                write!(f, "P_{} vanishes identically; reproduction undefined", node)
            }
            BetheError::Shape(e) => write!(f, "{}", e),
            BetheError::NotMonic { index } => write!(f, "y_{} is not monic", index),
        }
    }
}

impl std::error::Error for BetheError {}

impl From<LWeightError> for BetheError {
    fn from(e: LWeightError) -> Self {
        BetheError::Shape(e)
    }
}

impl From<ReflectionError> for BetheError {
    fn from(e: ReflectionError) -> Self {
        match e {
            ReflectionError::SameParity { node, .. } => BetheError::SameParity { node },
            ReflectionError::IncompatibleCounts => BetheError::Shape(LWeightError::ParityMismatch),
        }
    }
}

/// A candidate Bethe solution: parity, l-weight and the node polynomials
/// y_1..y_{m+n-1} (the boundary conventions y_0 = y_{m+n} = 1 are implicit).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BAESystem {
    zeta: LWeight,
    y: Vec<DensePoly>,
}

impl BAESystem {
    pub fn new(zeta: LWeight, y: Vec<DensePoly>) -> Result<Self, BetheError> {
        let nodes = zeta.parity().len() - 1;
        if y.len() != nodes {
            return Err(BetheError::Shape(LWeightError::ComponentCount {
                expected: nodes,
                got: y.len(),
            }));
        }
        for (idx, p) in y.iter().enumerate() {
            if !p.is_monic() {
                return Err(BetheError::NotMonic { index: idx + 1 });
            }
        }
        Ok(BAESystem { zeta, y })
    }

    pub fn parity(&self) -> &ParitySeq {
        self.zeta.parity()
    }

    pub fn zeta(&self) -> &LWeight {
        &self.zeta
    }

    pub fn y(&self) -> &[DensePoly] {
        &self.y
    }

    /// y_i with the boundary convention y_0 = y_{m+n} = 1.
    pub fn y_at(&self, i: usize) -> DensePoly {
        if i == 0 || i == self.zeta.parity().len() {
            DensePoly::one()
        } else {
            self.y[i - 1].clone()
        }
    }

    /// The combination whose divisibility by y_i expresses the equations at
    /// the odd node i.
    pub fn node_combination(&self, i: usize) -> Result<DensePoly, BetheError> {
        let s = self.zeta.parity();
        if !s.is_odd_node(i) {
            return Err(BetheError::SameParity { node: i });
        }
        let si = Rat::from_int(s.sign(i) as i64);
        let si1 = Rat::from_int(s.sign(i + 1) as i64);
        let (phi, psi) = self.zeta.coprime_ratio(i);
        let prev = self.y_at(i - 1);
        let next = self.y_at(i + 1);
        let plus = &(&phi.to_dense() * &prev.shift(&si)) * &next;
        let minus = &(&psi.to_dense() * &prev) * &next.shift(&(-&si1));
        Ok(&plus - &minus)
    }

    /// Whether y_i divides the node combination P_i.
    pub fn divisibility(&self, i: usize) -> Result<bool, BetheError> {
        let p = self.node_combination(i)?;
        let (_, rem) = p.div_rem(&self.y_at(i)).expect("monic divisor");
        Ok(rem.is_zero())
    }

    /// Exact value of the equation's left side minus one at the point `t`,
    /// for any node. The l-weight ratio is evaluated in reduced form.
    pub fn residual(&self, i: usize, t: &Rat) -> Result<Rat, BetheError> {
        let s = self.zeta.parity();
        assert!(i >= 1 && i < s.len(), "node out of range");
        let si = Rat::from_int(s.sign(i) as i64);
        let si1 = Rat::from_int(s.sign(i + 1) as i64);
        let (phi, psi) = self.zeta.coprime_ratio(i);

        let pole = |what: &str| BetheError::PoleAtEvaluation {
            factor: what.to_string(),
        };
        let psi_t = psi.eval(t);
        if psi_t.is_zero() {
            return Err(pole("the reduced l-weight ratio denominator"));
        }
        let prev = self.y_at(i - 1);
        let cur = self.y_at(i);
        let next = self.y_at(i + 1);
        let prev_t = prev.eval(t);
        if prev_t.is_zero() {
            return Err(pole("y_{i-1}(t)"));
        }
        let cur_shift = cur.shift(&si1).eval(t);
        if cur_shift.is_zero() {
            return Err(pole("y_i(t+s_{i+1})"));
        }
        let next_shift = next.shift(&(-&si1)).eval(t);
        if next_shift.is_zero() {
            return Err(pole("y_{i+1}(t-s_{i+1})"));
        }
        let value = &(&phi.eval(t) / &psi_t)
            * &(&(&prev.shift(&si).eval(t) / &prev_t)
                * &(&(&cur.shift(&(-&si)).eval(t) / &cur_shift) * &(&next.eval(t) / &next_shift)));
        Ok(&value - &Rat::one())
    }

    /// The fermionic reproduction step at the odd node i: reflect the
    /// l-weight and replace y_i by the monic normalization of
    /// (P_i / y_i)(u - s_i).
    pub fn reproduce(&self, i: usize) -> Result<BAESystem, BetheError> {
        let s = self.zeta.parity();
        let p = self.node_combination(i)?;
        if p.is_zero() {
            return Err(BetheError::DegenerateReproduction { node: i });
        }
        let (quot, rem) = p.div_rem(&self.y_at(i)).expect("monic divisor");
        if !rem.is_zero() {
            return Err(BetheError::NotASolution { node: i });
        }
        let step = Rat::from_int(s.sign(i) as i64);
        let y_new = quot.shift(&(-&step)).monic();

        let zeta = reflect(&self.zeta, i)?;
        let mut y = self.y.clone();
        y[i - 1] = y_new;
        Ok(BAESystem { zeta, y })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lweight::RatB;
    use crate::poly::FactoredPoly;

    fn fp(roots: &[i64]) -> FactoredPoly {
        FactoredPoly::from_int_roots(roots)
    }

    fn ratb(num: &[i64], den: &[i64]) -> RatB {
        RatB::new(fp(num), fp(den)).unwrap()
    }

    /// The worked rank-(1|1) data: phi = (u+1)(u+2), psi = u(u-1).
    fn worked_system(y: DensePoly) -> BAESystem {
        let zeta = LWeight::new(
            "+-".parse().unwrap(),
            vec![ratb(&[-1, -2], &[0, 1]), RatB::one()],
        )
        .unwrap();
        BAESystem::new(zeta, vec![y]).unwrap()
    }

    fn half_root() -> DensePoly {
        // u + 1/2
        DensePoly::from_coeffs(vec![Rat::new(1, 2), Rat::one()])
    }

    #[test]
    fn trivial_residual_vanishes() {
        let unit = LWeight::unit("+-".parse().unwrap());
        let sys = BAESystem::new(unit, vec![DensePoly::one()]).unwrap();
        assert!(sys.residual(1, &Rat::new(3, 7)).unwrap().is_zero());
    }

    #[test]
    fn worked_residual_vanishes_at_root() {
        let sys = worked_system(half_root());
        assert!(sys.residual(1, &Rat::new(-1, 2)).unwrap().is_zero());
        // elsewhere it does not
        assert!(!sys.residual(1, &Rat::from_int(5)).unwrap().is_zero());
    }

    #[test]
    fn pole_is_reported() {
        let sys = worked_system(half_root());
        // t = 0 makes psi(t) = 0
        assert!(matches!(
            sys.residual(1, &Rat::zero()),
            Err(BetheError::PoleAtEvaluation { .. })
        ));
    }

    #[test]
    fn divisibility_examples() {
        // P = phi - psi = 4u + 2
        let sys = worked_system(half_root());
        assert_eq!(
            sys.node_combination(1).unwrap(),
            DensePoly::from_int_coeffs(&[2, 4])
        );
        assert!(sys.divisibility(1).unwrap());

        let sys = worked_system(DensePoly::ident());
        assert!(!sys.divisibility(1).unwrap());

        // y = 1 divides everything
        let sys = worked_system(DensePoly::one());
        assert!(sys.divisibility(1).unwrap());
    }

    #[test]
    fn divisibility_requires_odd_node() {
        let zeta = LWeight::unit("++-".parse().unwrap());
        let sys = BAESystem::new(zeta, vec![DensePoly::one(), DensePoly::one()]).unwrap();
        assert_eq!(
            sys.divisibility(1).unwrap_err(),
            BetheError::SameParity { node: 1 }
        );
        assert!(sys.divisibility(2).is_ok());
    }

    #[test]
    fn reproduction_constant_quotient() {
        // P / y = 4, so the new y is 1
        let sys = worked_system(half_root());
        let rep = sys.reproduce(1).unwrap();
        assert_eq!(rep.parity(), &"-+".parse().unwrap());
        assert_eq!(rep.y()[0], DensePoly::one());
        assert_eq!(rep.zeta(), &reflect(sys.zeta(), 1).unwrap());
    }

    #[test]
    fn reproduction_shifts_the_quotient() {
        // y = 1: P = 4u+2, so y~(u+1) ~ u+1/2 and y~ = u - 1/2
        let sys = worked_system(DensePoly::one());
        let rep = sys.reproduce(1).unwrap();
        assert_eq!(
            rep.y()[0],
            DensePoly::from_coeffs(vec![Rat::new(-1, 2), Rat::one()])
        );
    }

    #[test]
    fn reproduction_round_trip() {
        for y in [DensePoly::one(), half_root()] {
            let sys = worked_system(y);
            let once = sys.reproduce(1).unwrap();
            assert!(once.divisibility(1).unwrap());
            let twice = once.reproduce(1).unwrap();
            assert_eq!(twice, sys);
        }
    }

    #[test]
    fn degenerate_reproduction() {
        let unit = LWeight::unit("+-".parse().unwrap());
        let sys = BAESystem::new(unit, vec![DensePoly::one()]).unwrap();
        assert_eq!(
            sys.reproduce(1).unwrap_err(),
            BetheError::DegenerateReproduction { node: 1 }
        );
    }

    #[test]
    fn non_solution_is_rejected() {
        let sys = worked_system(DensePoly::ident());
        assert_eq!(
            sys.reproduce(1).unwrap_err(),
            BetheError::NotASolution { node: 1 }
        );
    }

    #[test]
    fn non_monic_y_is_rejected() {
        let unit = LWeight::unit("+-".parse().unwrap());
        let bad = DensePoly::from_int_coeffs(&[1, 2]);
        assert_eq!(
            BAESystem::new(unit, vec![bad]).unwrap_err(),
            BetheError::NotMonic { index: 1 }
        );
    }

    #[test]
    fn degree_bookkeeping() {
        // leading terms cancel: deg P < k + l_{i-1} + l_{i+1}
        let zeta = LWeight::new(
            "+-+".parse().unwrap(),
            vec![ratb(&[-1, -3], &[0, 2]), RatB::one(), ratb(&[5], &[7])],
        )
        .unwrap();
        let y1 = DensePoly::from_int_coeffs(&[-1, 1]);
        let y2 = DensePoly::from_int_coeffs(&[3, 1]);
        let sys = BAESystem::new(zeta, vec![y1, y2]).unwrap();
        let p = sys.node_combination(1).unwrap();
        let (phi, _) = sys.zeta().coprime_ratio(1);
        let (l_prev, l_next) = (0, 1); // y_0 = 1 and deg y_2 = 1
        assert!(p.degree() < phi.degree() + l_prev + l_next);
    }
}
