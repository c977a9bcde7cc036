//! Shared generators and independent oracles for the integration tests.
//!
//! Randomness is a seeded splitmix64 stream so every run is reproducible.

#![allow(dead_code)]

use superyang::bethe::BAESystem;
use superyang::lweight::{LWeight, RatB};
use superyang::parity::ParitySeq;
use superyang::poly::{DensePoly, FactoredPoly};
use superyang::rat::Rat;
use superyang::tableaux::{Cell, STableau};

pub struct Rng(u64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(seed)
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        lo + self.below((hi - lo + 1) as u64) as i64
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }

    /// A small rational with denominator 1 or 2.
    pub fn small_rat(&mut self) -> Rat {
        let num = self.int_in(-8, 8);
        if self.chance(1, 3) {
            Rat::new(2 * num + 1, 2)
        } else {
            Rat::from_int(num)
        }
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// A random parity sequence with the given sign counts.
pub fn random_parity(rng: &mut Rng, m: usize, n: usize) -> ParitySeq {
    let mut entries = vec![1i8; m];
    entries.extend(std::iter::repeat_n(-1i8, n));
    rng.shuffle(&mut entries);
    ParitySeq::new(entries)
}

/// A random monic factored polynomial with small rational roots.
pub fn random_factored(rng: &mut Rng, max_deg: usize) -> FactoredPoly {
    let d = rng.below(max_deg as u64 + 1) as usize;
    FactoredPoly::from_roots((0..d).map(|_| rng.small_rat()))
}

/// A random reduced equal-degree component.
pub fn random_ratb(rng: &mut Rng, max_deg: usize) -> RatB {
    let d = rng.below(max_deg as u64 + 1) as usize;
    let num = FactoredPoly::from_roots((0..d).map(|_| rng.small_rat()));
    let den = FactoredPoly::from_roots((0..d).map(|_| rng.small_rat()));
    RatB::new(num, den).expect("equal degrees by construction")
}

/// A random l-weight over the given parity.
pub fn random_lweight(rng: &mut Rng, parity: &ParitySeq, max_deg: usize) -> LWeight {
    let components = (0..parity.len())
        .map(|_| random_ratb(rng, max_deg))
        .collect();
    LWeight::new(parity.clone(), components).unwrap()
}

/// A rank-(1|1) l-weight whose reduced ratio has `k` distinct numerator
/// roots (and k denominator roots disjoint from them), times a random
/// common factor.
pub fn random_gl11_weight(rng: &mut Rng, k: usize) -> LWeight {
    let parity = if rng.chance(1, 2) { "+-" } else { "-+" };
    let parity: ParitySeq = parity.parse().unwrap();
    let mut pool: Vec<Rat> = (-24..24).map(|c| Rat::new(2 * c + 1, 2)).collect();
    pool.extend((-24..24).map(Rat::from_int));
    rng.shuffle(&mut pool);
    let phi = FactoredPoly::from_roots(pool.drain(..k));
    let psi = FactoredPoly::from_roots(pool.drain(..k));
    let common = random_ratb(rng, 2);
    let z2 = common;
    let z1 = z2.mul_ratio(&phi, &psi);
    LWeight::new(parity, vec![z1, z2]).unwrap()
}

/// A product of irreducible rank-(1|1) characters in general position: the
/// ratio roots of distinct factors are globally disjoint, so the product's
/// reduced ratio is the product of the factors' ratios. Returns the factor
/// highest weights and the product character.
pub fn random_generic_gl11_product(
    rng: &mut Rng,
    factors: usize,
) -> (Vec<LWeight>, superyang::qchar::QChar) {
    let parity: ParitySeq = if rng.chance(1, 2) { "+-" } else { "-+" }.parse().unwrap();
    let mut pool: Vec<Rat> = (-30..30).map(|c| Rat::new(2 * c + 1, 2)).collect();
    pool.extend((-30..30).map(Rat::from_int));
    rng.shuffle(&mut pool);
    let mut tops = Vec::new();
    let mut product = superyang::qchar::QChar::single(LWeight::unit(parity.clone()));
    for _ in 0..factors {
        let k = rng.below(3) as usize;
        let phi = FactoredPoly::from_roots(pool.drain(..k));
        let psi = FactoredPoly::from_roots(pool.drain(..k));
        let z2 = random_ratb(rng, 1);
        let z1 = z2.mul_ratio(&phi, &psi);
        let z = LWeight::new(parity.clone(), vec![z1, z2]).unwrap();
        let chi = superyang::gl11::irreducible_qchar(&z).unwrap();
        product = product.mul(&chi).unwrap();
        tops.push(z);
    }
    (tops, product)
}

/// Brute-force oracle for the shift ladder: search every monic g with roots
/// drawn (with multiplicity up to max_deg) from the integer window
/// [-range, range], and return the first solving num/den = g(u+step)/g(u).
pub fn brute_force_shift_ladder(
    num: &FactoredPoly,
    den: &FactoredPoly,
    step: i8,
    range: i64,
    max_deg: usize,
) -> Option<FactoredPoly> {
    let candidates: Vec<Rat> = (-range..=range).map(Rat::from_int).collect();
    let mut multiset: Vec<Rat> = Vec::new();
    fn search(
        candidates: &[Rat],
        start: usize,
        left: usize,
        multiset: &mut Vec<Rat>,
        num: &FactoredPoly,
        den: &FactoredPoly,
        step: i8,
    ) -> Option<FactoredPoly> {
        let g = FactoredPoly::from_roots(multiset.iter().cloned());
        let shifted = g.shift(&Rat::from_int(step as i64));
        if let Ok(r) = RatB::new(shifted, g.clone()) {
            if r.num() == num && r.den() == den {
                return Some(g);
            }
        }
        if left == 0 {
            return None;
        }
        for idx in start..candidates.len() {
            multiset.push(candidates[idx].clone());
            if let Some(hit) = search(candidates, idx, left - 1, multiset, num, den, step) {
                return Some(hit);
            }
            multiset.pop();
        }
        None
    }
    search(&candidates, 0, max_deg, &mut multiset, num, den, step)
}

/// A random Bethe system satisfying the divisibility form at the returned
/// odd node, built by choosing y_i as a divisor of the node combination.
/// `split_only` restricts y_i to products of rational linear factors.
pub fn random_solvable_system(
    rng: &mut Rng,
    m: usize,
    n: usize,
    split_only: bool,
) -> (BAESystem, usize) {
    assert!(m >= 1 && n >= 1);
    loop {
        let parity = random_parity(rng, m, n);
        let odd = parity.odd_nodes();
        let node = odd[rng.below(odd.len() as u64) as usize];
        let zeta = random_lweight(rng, &parity, 2);
        let mut y: Vec<DensePoly> = (0..parity.len() - 1)
            .map(|_| random_factored(rng, 2).to_dense())
            .collect();
        y[node - 1] = DensePoly::one();
        let sys = BAESystem::new(zeta, y.clone()).unwrap();
        let p = sys.node_combination(node).unwrap();
        if p.is_zero() {
            continue;
        }
        let (roots, core) = p.split_rational_roots().unwrap();
        let mut chosen: Vec<Rat> = Vec::new();
        for r in roots.roots() {
            if rng.chance(1, 2) {
                chosen.push(r.clone());
            }
        }
        let mut y_i = FactoredPoly::from_roots(chosen).to_dense();
        if !split_only && core.degree() > 0 && rng.chance(1, 2) {
            y_i = &y_i * &core;
        }
        y[node - 1] = y_i;
        let sys = BAESystem::new(sys.zeta().clone(), y).unwrap();
        debug_assert!(sys.divisibility(node).unwrap());
        return (sys, node);
    }
}

/// The central-series scalar of a tableau: the product over positions p of
/// component_p(u - kappa_p) raised to the sign s_p, as a reduced ratio of
/// factored polynomials (numerator, denominator).
pub fn central_series_scalar(s: &ParitySeq, t: &STableau) -> (FactoredPoly, FactoredPoly) {
    let z = t.lweight(s);
    let kappa = s.kappa();
    let mut num = FactoredPoly::one();
    let mut den = FactoredPoly::one();
    for p in 1..=s.len() {
        let c = z.component(p).shift(&Rat::from_int(-kappa[p - 1]));
        let (top, bottom) = if s.sign(p) == 1 {
            (c.num().clone(), c.den().clone())
        } else {
            (c.den().clone(), c.num().clone())
        };
        num = &num * &top;
        den = &den * &bottom;
    }
    let r = RatB::new(num, den).expect("central scalar has equal degrees");
    (r.num().clone(), r.den().clone())
}

/// The hook-content product over the cells of a diagram:
/// prod (u + c + 1)/(u + c), reduced.
pub fn content_product(cells: &[Cell]) -> (FactoredPoly, FactoredPoly) {
    let num = FactoredPoly::from_roots(cells.iter().map(|c| Rat::from_int(-(c.content() + 1))));
    let den = FactoredPoly::from_roots(cells.iter().map(|c| Rat::from_int(-c.content())));
    let r = RatB::new(num, den).expect("equal degrees");
    (r.num().clone(), r.den().clone())
}
