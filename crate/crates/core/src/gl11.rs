//! q-characters of rank (1|1): the closed-form expansion of an irreducible
//! character and the reflection algorithm for arbitrary characters.
//!
//! For an l-weight whose component ratio is phi/psi with deg phi = k, the
//! irreducible character is the sum over subsets J of the root indices of
//!
//! ```text
//! [z * (phi_J(u-s_1)/phi_J(u), phi_J(u-s_1)/phi_J(u))]
//! ```
//!
//! so the dimension is 2^k. The reflection algorithm peels maximal terms off
//! a character over one parity sequence and rebuilds the character over the
//! swapped sequence, one irreducible at a time.

use std::fmt;

use crate::lweight::LWeight;
use crate::parity::ParitySeq;
use crate::poly::FactoredPoly;
use crate::qchar::QChar;
use crate::rat::Rat;
use crate::reflection::reflect;

/// Errors from the rank-(1|1) character routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gl11Error {
    /// The parity sequence is not of shape (1|1).
    WrongRank { len: usize },
    /// Subtraction drove a multiplicity below zero: the input was not a
    /// genuine character.
    NegativeMultiplicity,
    /// The iteration guard tripped; the input was not a genuine character.
    NonTermination,
}

impl Gl11Error {
    pub fn name(&self) -> &'static str {
        match self {
            Gl11Error::WrongRank { .. } => "WrongRank",
            Gl11Error::NegativeMultiplicity => "NegativeMultiplicity",
            Gl11Error::NonTermination => "NonTermination",
        }
    }
}

impl fmt::Display for Gl11Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gl11Error::WrongRank { len } => {
                write!(f, "rank (1|1) required, parity has length {}", len)
            }
            Gl11Error::NegativeMultiplicity => {
                write!(f, "multiplicity went negative: not a character")
            }
            Gl11Error::NonTermination => {
                write!(f, "iteration guard exceeded: not a character")
            }
        }
    }
}

impl std::error::Error for Gl11Error {}

/// The character expansion of one irreducible, with diagnostics.
#[derive(Clone, Debug)]
pub struct CharExpansion {
    pub chi: QChar,
    /// Degree k of the coprime ratio; the dimension is 2^k.
    pub ratio_degree: usize,
    /// True when repeated ratio roots made distinct subsets collide, so the
    /// support has fewer than 2^k distinct l-weights.
    pub collided: bool,
}

fn check_rank(s: &ParitySeq) -> Result<(), Gl11Error> {
    if s.m() != 1 || s.n() != 1 {
        return Err(Gl11Error::WrongRank { len: s.len() });
    }
    Ok(())
}

/// All subset products of the factors (u - r) of `poly`, as pairs
/// (num, den) = (poly_J shifted by -s1, poly_J) when `forward`, and
/// (poly_J, poly_J shifted by -s1) otherwise.
fn subset_bundle(base: &LWeight, poly: &FactoredPoly, forward: bool, s1: i64) -> Vec<LWeight> {
    let roots = poly.roots();
    let k = roots.len();
    assert!(k < 48, "subset expansion of degree {} is not tractable", k);
    let minus_s1 = Rat::from_int(-s1);
    let mut out = Vec::with_capacity(1 << k);
    for mask in 0u64..(1u64 << k) {
        let sub = FactoredPoly::from_roots(
            roots
                .iter()
                .enumerate()
                .filter(|(idx, _)| mask >> idx & 1 == 1)
                .map(|(_, r)| r.clone()),
        );
        let shifted = sub.shift(&minus_s1);
        let (num, den) = if forward {
            (&shifted, &sub)
        } else {
            (&sub, &shifted)
        };
        out.push(
            base.with_component_ratio(1, num, den)
                .with_component_ratio(2, num, den),
        );
    }
    out
}

/// The q-character of the irreducible with highest l-weight `z`, with the
/// ratio degree and collision flag alongside.
pub fn irreducible_qchar_detailed(z: &LWeight) -> Result<CharExpansion, Gl11Error> {
    check_rank(z.parity())?;
    let (phi, _psi) = z.coprime_ratio(1);
    let k = phi.degree();
    let s1 = z.parity().sign(1) as i64;
    let mut chi = QChar::zero(z.parity().clone());
    for term in subset_bundle(z, &phi, true, s1) {
        chi.add_term(term, 1).unwrap();
    }
    let collided = chi.support_size() < (1usize << k);
    Ok(CharExpansion {
        chi,
        ratio_degree: k,
        collided,
    })
}

/// The q-character of the irreducible with highest l-weight `z`.
pub fn irreducible_qchar(z: &LWeight) -> Result<QChar, Gl11Error> {
    Ok(irreducible_qchar_detailed(z)?.chi)
}

/// Maximal support element: largest s_1 * (u^{-1}-coefficient of the first
/// component), which is the height in the simple-root order; ties broken by
/// the structural order on l-weights so runs are reproducible.
fn select_maximal(q: &QChar) -> Option<LWeight> {
    let s1 = q.parity().sign(1) as i64;
    let s1 = Rat::from_int(s1);
    let mut best: Option<(Rat, LWeight)> = None;
    for z in q.terms().keys() {
        let height = &s1 * &z.component(1).u_inv_coeff();
        match &best {
            Some((h, _)) if *h >= height => {}
            _ => best = Some((height, z.clone())),
        }
    }
    best.map(|(_, z)| z)
}

/// Rewrite a character over the swapped parity sequence.
///
/// Repeatedly: pick the maximal l-weight, subtract its full irreducible
/// expansion from the working character, and add the reflected irreducible's
/// expansion to the output. The input must decompose into irreducible
/// characters with nonnegative multiplicities; otherwise
/// `NegativeMultiplicity` (or, defensively, `NonTermination`) is returned.
pub fn reflect_qchar(q: &QChar) -> Result<QChar, Gl11Error> {
    check_rank(q.parity())?;
    let swapped = q.parity().swap_at(1).expect("rank (1|1) node is odd");
    let s1 = q.parity().sign(1) as i64;

    let mut working = q.clone();
    let mut out = QChar::zero(swapped);
    let guard = working.dim().max(0);
    let mut rounds = 0i64;
    while !working.is_zero() {
        rounds += 1;
        if rounds > guard {
            return Err(Gl11Error::NonTermination);
        }
        let zeta = select_maximal(&working).expect("nonzero character has support");
        let mult = working.multiplicity(&zeta);
        if mult <= 0 {
            return Err(Gl11Error::NegativeMultiplicity);
        }
        let (phi, psi) = zeta.coprime_ratio(1);
        for term in subset_bundle(&zeta, &phi, true, s1) {
            working.add_term(term, -mult).unwrap();
        }
        if working.has_negative() {
            return Err(Gl11Error::NegativeMultiplicity);
        }
        let reflected = reflect(&zeta, 1).expect("rank (1|1) node is odd");
        for term in subset_bundle(&reflected, &psi, false, s1) {
            out.add_term(term, mult).unwrap();
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lweight::RatB;

    fn fp(roots: &[i64]) -> FactoredPoly {
        FactoredPoly::from_int_roots(roots)
    }

    fn ratb(num: &[i64], den: &[i64]) -> RatB {
        RatB::new(fp(num), fp(den)).unwrap()
    }

    fn lw(parity: &str, comps: Vec<RatB>) -> LWeight {
        LWeight::new(parity.parse().unwrap(), comps).unwrap()
    }

    #[test]
    fn degree_zero_is_a_single_term() {
        let z = LWeight::unit("+-".parse().unwrap());
        let chi = irreducible_qchar(&z).unwrap();
        assert_eq!(chi.dim(), 1);
        assert_eq!(chi.multiplicity(&z), 1);
    }

    #[test]
    fn vector_module_expansion() {
        let z = lw("+-", vec![ratb(&[-1], &[0]), RatB::one()]);
        let chi = irreducible_qchar(&z).unwrap();
        let lower = lw("+-", vec![RatB::one(), ratb(&[0], &[-1])]);
        assert_eq!(chi.dim(), 2);
        assert_eq!(chi.multiplicity(&z), 1);
        assert_eq!(chi.multiplicity(&lower), 1);
    }

    #[test]
    fn dimension_is_two_to_the_k() {
        let z = lw("+-", vec![ratb(&[-1, -2, -3], &[0, 4, 9]), RatB::one()]);
        let detail = irreducible_qchar_detailed(&z).unwrap();
        assert_eq!(detail.ratio_degree, 3);
        assert_eq!(detail.chi.dim(), 8);
        assert!(!detail.collided);
    }

    #[test]
    fn repeated_roots_collide_but_keep_dimension() {
        let z = lw("+-", vec![ratb(&[-1, -1], &[0, 0]), RatB::one()]);
        let detail = irreducible_qchar_detailed(&z).unwrap();
        assert_eq!(detail.chi.dim(), 4);
        assert!(detail.collided);
        assert!(detail.chi.support_size() < 4);
    }

    #[test]
    fn wrong_rank_is_rejected() {
        let z = LWeight::unit("+-+".parse().unwrap());
        assert!(matches!(
            irreducible_qchar(&z).unwrap_err(),
            Gl11Error::WrongRank { len: 3 }
        ));
    }

    #[test]
    fn reflect_unit_character() {
        let q = QChar::single(LWeight::unit("+-".parse().unwrap()));
        let r = reflect_qchar(&q).unwrap();
        assert_eq!(r, QChar::single(LWeight::unit("-+".parse().unwrap())));
    }

    #[test]
    fn reflect_matches_direct_expansion() {
        // the reflected character of L((u+1)/u, 1) over +- is the character
        // of L((u-1)/u, 1) over -+, computed independently
        let z = lw("+-", vec![ratb(&[-1], &[0]), RatB::one()]);
        let reflected_char = reflect_qchar(&irreducible_qchar(&z).unwrap()).unwrap();
        let ztilde = lw("-+", vec![ratb(&[1], &[0]), RatB::one()]);
        let direct = irreducible_qchar(&ztilde).unwrap();
        assert_eq!(reflected_char, direct);
    }

    #[test]
    fn non_character_is_detected() {
        // a bare term with k >= 1 forces subtraction of absent lower terms
        let z = lw("+-", vec![ratb(&[-1], &[0]), RatB::one()]);
        let q = QChar::single(z).scale(2);
        assert_eq!(
            reflect_qchar(&q).unwrap_err(),
            Gl11Error::NegativeMultiplicity
        );
    }

    #[test]
    fn reflect_preserves_dimension() {
        let z = lw("+-", vec![ratb(&[-1, -4], &[0, 2]), ratb(&[5], &[3])]);
        let chi = irreducible_qchar(&z).unwrap();
        let r = reflect_qchar(&chi).unwrap();
        assert_eq!(r.dim(), chi.dim());
    }
}
