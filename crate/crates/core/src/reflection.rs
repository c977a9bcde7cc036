//! Odd reflections of highest l-weights.
//!
//! At a node whose two signs differ, an l-weight over a parity sequence
//! determines one over the swapped sequence: extract the coprime ratio
//! (phi, psi) of the adjacent components, then
//!
//! ```text
//! new_i     = old_{i+1} * psi(u - s_i) / psi(u)
//! new_{i+1} = old_i     * phi(u - s_i) / phi(u)
//! ```
//!
//! with every other component unchanged. Applying the rule twice at the same
//! node is the identity.

use std::fmt;

use crate::lweight::LWeight;
use crate::parity::{ParityError, ParitySeq};
use crate::rat::Rat;

/// Errors from reflection operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReflectionError {
    /// The node's signs agree, so no odd reflection exists there. For paths,
    /// `step` reports which entry failed (0-based).
    SameParity { node: usize, step: usize },
    /// The target parity sequence has different sign counts.
    IncompatibleCounts,
}

impl ReflectionError {
    pub fn name(&self) -> &'static str {
        match self {
            ReflectionError::SameParity { .. } => "SameParity",
            ReflectionError::IncompatibleCounts => "IncompatibleCounts",
        }
    }
}

impl fmt::Display for ReflectionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReflectionError::SameParity { node, step } => {
                write!(f, "no odd reflection at node {} (path step {})", node, step)
            }
            ReflectionError::IncompatibleCounts => {
                write!(f, "target parity has different sign counts")
            }
        }
    }
}

impl std::error::Error for ReflectionError {}

impl From<ParityError> for ReflectionError {
    fn from(e: ParityError) -> Self {
        match e {
            ParityError::SameParity { node } => ReflectionError::SameParity { node, step: 0 },
            ParityError::IncompatibleCounts => ReflectionError::IncompatibleCounts,
            ParityError::Invalid(_) => unreachable!("no parsing here"),
        }
    }
}

/// Reflect a highest l-weight across the odd node `i`.
pub fn reflect(z: &LWeight, i: usize) -> Result<LWeight, ReflectionError> {
    let s = z.parity();
    let swapped = s.swap_at(i)?;
    let step = Rat::from_int(s.sign(i) as i64);
    // coprimality is re-extracted here rather than trusted from the caller
    let (phi, psi) = z.coprime_ratio(i);

    let mut components = z.components().to_vec();
    components[i - 1] = z.component(i + 1).mul_ratio(&psi.shift(&(-&step)), &psi);
    components[i] = z.component(i).mul_ratio(&phi.shift(&(-&step)), &phi);
    Ok(z.with_parity(swapped, components))
}

/// Apply `reflect` along a sequence of nodes, left to right.
pub fn reflect_path(z: &LWeight, path: &[usize]) -> Result<LWeight, ReflectionError> {
    let mut current = z.clone();
    for (step, &node) in path.iter().enumerate() {
        current = reflect(&current, node).map_err(|e| match e {
            ReflectionError::SameParity { node, .. } => ReflectionError::SameParity { node, step },
            other => other,
        })?;
    }
    Ok(current)
}

/// The canonical swap path from one parity sequence to another with the same
/// sign counts: repeatedly locate the leftmost position where the sequences
/// disagree and bubble the nearest matching sign leftward through adjacent
/// (necessarily odd) swaps.
pub fn swap_path(from: &ParitySeq, to: &ParitySeq) -> Result<Vec<usize>, ReflectionError> {
    if from.m() != to.m() || from.n() != to.n() {
        return Err(ReflectionError::IncompatibleCounts);
    }
    let mut cur: Vec<i8> = from.entries().to_vec();
    let target = to.entries();
    let mut path = Vec::new();
    for p in 0..cur.len() {
        if cur[p] == target[p] {
            continue;
        }
        let q = (p + 1..cur.len())
            .find(|&q| cur[q] == target[p])
            .expect("equal sign counts guarantee a match");
        for j in (p..q).rev() {
            cur.swap(j, j + 1);
            path.push(j + 1); // 1-based node
        }
    }
    Ok(path)
}

/// Reflect an l-weight to the given target parity sequence along the
/// canonical swap path.
pub fn reflect_to(z: &LWeight, target: &ParitySeq) -> Result<LWeight, ReflectionError> {
    let path = swap_path(z.parity(), target)?;
    reflect_path(z, &path)
}
