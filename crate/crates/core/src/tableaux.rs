//! Skew Young diagrams, semi-standard tableaux for an ordered alphabet, and
//! the tableau expansion of skew characters.
//!
//! A filling is semi-standard for a parity sequence when entries (read as
//! positions in the sequence's alphabet order) weakly increase along rows and
//! columns, repeat in a row only at unbarred letters, and repeat in a column
//! only at barred letters. The character of a skew shape is the sum over all
//! such fillings of the product of X-factors, one per box, keyed by the
//! box's entry and content.

use std::collections::HashMap;
use std::fmt;

use crate::lweight::{LWeight, RatB};
use crate::parity::ParitySeq;
use crate::partition::Partition;
use crate::poly::FactoredPoly;
use crate::qchar::QChar;
use crate::rat::Rat;

/// Default bound on the number of enumerated tableaux.
pub const DEFAULT_TABLEAU_CAP: usize = 1_000_000;

/// Errors from tableau enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TableauxError {
    /// The inner partition is not contained in the outer one.
    NotContained,
    /// Enumeration exceeded the configured tableau cap.
    CapExceeded { cap: usize },
}

impl TableauxError {
    pub fn name(&self) -> &'static str {
        match self {
            TableauxError::NotContained => "NotContained",
            TableauxError::CapExceeded { .. } => "CapExceeded",
        }
    }
}

impl fmt::Display for TableauxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauxError::NotContained => {
                write!(f, "inner partition is not contained in the outer partition")
            }
            TableauxError::CapExceeded { cap } => {
                write!(f, "more than {} tableaux; raise the cap to enumerate", cap)
            }
        }
    }
}

impl std::error::Error for TableauxError {}

/// A box of a skew diagram: 1-based row and column, content = col - row.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Cell {
    pub row: usize,
    pub col: u64,
}

impl Cell {
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A skew shape outer/inner.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewDiagram {
    outer: Partition,
    inner: Partition,
}

impl SkewDiagram {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, TableauxError> {
        if !outer.contains(&inner) {
            return Err(TableauxError::NotContained);
        }
        Ok(SkewDiagram { outer, inner })
    }

    /// The straight shape of a partition.
    pub fn straight(outer: Partition) -> Self {
        SkewDiagram {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn num_cells(&self) -> u64 {
        self.outer.size() - self.inner.size()
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for row in 1..=self.outer.length() {
            for col in self.inner.part(row) + 1..=self.outer.part(row) {
                out.push(Cell { row, col });
            }
        }
        out
    }

    pub fn contains_cell(&self, row: usize, col: u64) -> bool {
        self.outer.contains_cell(row, col) && col > self.inner.part(row)
    }
}

impl fmt::Display for SkewDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

/// A filling of a skew diagram by alphabet positions 1..=m+n, stored in
/// row-major cell order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct STableau {
    diagram: SkewDiagram,
    entries: Vec<usize>,
}

impl STableau {
    pub fn diagram(&self) -> &SkewDiagram {
        &self.diagram
    }

    /// Entries aligned with `diagram().cells()`.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The product of X-factors over the boxes; accumulated per position and
    /// reduced once at the end.
    pub fn lweight(&self, s: &ParitySeq) -> LWeight {
        let kappa = s.kappa();
        let mut nums: Vec<Vec<Rat>> = vec![Vec::new(); s.len()];
        let mut dens: Vec<Vec<Rat>> = vec![Vec::new(); s.len()];
        for (cell, &pos) in self.diagram.cells().iter().zip(&self.entries) {
            let base = cell.content() + kappa[pos - 1];
            // (u + base + 1)/(u + base) to the power s_pos
            let upper = Rat::from_int(-(base + 1));
            let lower = Rat::from_int(-base);
            if s.sign(pos) == 1 {
                nums[pos - 1].push(upper);
                dens[pos - 1].push(lower);
            } else {
                nums[pos - 1].push(lower);
                dens[pos - 1].push(upper);
            }
        }
        let components = nums
            .into_iter()
            .zip(dens)
            .map(|(num, den)| {
                RatB::new(FactoredPoly::from_roots(num), FactoredPoly::from_roots(den))
                    .expect("X-factor products have equal degrees")
            })
            .collect();
        LWeight::new(s.clone(), components).unwrap()
    }
}

struct Enumerator<'a> {
    s: &'a ParitySeq,
    cells: Vec<Cell>,
    /// index into `cells` of the box directly above, if any
    above: Vec<Option<usize>>,
    /// whether the previous cell in row-major order is the left neighbor
    left_adjacent: Vec<bool>,
    cap: usize,
}

enum Sink<'v> {
    Collect(&'v mut Vec<Vec<usize>>),
    Count(&'v mut u64),
}

impl<'a> Enumerator<'a> {
    fn new(s: &'a ParitySeq, diagram: &SkewDiagram, cap: usize) -> Self {
        let cells = diagram.cells();
        let mut index: HashMap<(usize, u64), usize> = HashMap::new();
        for (k, c) in cells.iter().enumerate() {
            index.insert((c.row, c.col), k);
        }
        let above = cells
            .iter()
            .map(|c| {
                if c.row > 1 {
                    index.get(&(c.row - 1, c.col)).copied()
                } else {
                    None
                }
            })
            .collect();
        let left_adjacent = cells
            .iter()
            .enumerate()
            .map(|(k, c)| k > 0 && cells[k - 1].row == c.row && cells[k - 1].col + 1 == c.col)
            .collect();
        Enumerator {
            s,
            cells,
            above,
            left_adjacent,
            cap,
        }
    }

    fn run(&self, sink: &mut Sink) -> Result<(), TableauxError> {
        let mut entries = vec![0usize; self.cells.len()];
        self.fill(0, &mut entries, sink)
    }

    fn fill(
        &self,
        idx: usize,
        entries: &mut Vec<usize>,
        sink: &mut Sink,
    ) -> Result<(), TableauxError> {
        if idx == self.cells.len() {
            match sink {
                Sink::Collect(v) => {
                    if v.len() >= self.cap {
                        return Err(TableauxError::CapExceeded { cap: self.cap });
                    }
                    v.push(entries.clone());
                }
                Sink::Count(c) => **c += 1,
            }
            return Ok(());
        }
        let left = if self.left_adjacent[idx] {
            Some(entries[idx - 1])
        } else {
            None
        };
        let up = self.above[idx].map(|k| entries[k]);
        let low = left.unwrap_or(1).max(up.unwrap_or(1));
        for p in low..=self.s.len() {
            // a repeat within a row must be unbarred, within a column barred
            if left == Some(p) && self.s.sign(p) == -1 {
                continue;
            }
            if up == Some(p) && self.s.sign(p) == 1 {
                continue;
            }
            entries[idx] = p;
            self.fill(idx + 1, entries, sink)?;
        }
        Ok(())
    }
}

/// All semi-standard fillings, in row-major lexicographic order, bounded by
/// `cap`.
pub fn enumerate_ssyt_capped(
    s: &ParitySeq,
    diagram: &SkewDiagram,
    cap: usize,
) -> Result<Vec<STableau>, TableauxError> {
    let en = Enumerator::new(s, diagram, cap);
    let mut raw = Vec::new();
    en.run(&mut Sink::Collect(&mut raw))?;
    Ok(raw
        .into_iter()
        .map(|entries| STableau {
            diagram: diagram.clone(),
            entries,
        })
        .collect())
}

/// All semi-standard fillings with the default cap.
pub fn enumerate_ssyt(
    s: &ParitySeq,
    diagram: &SkewDiagram,
) -> Result<Vec<STableau>, TableauxError> {
    enumerate_ssyt_capped(s, diagram, DEFAULT_TABLEAU_CAP)
}

/// Number of semi-standard fillings, without materializing them.
pub fn count_ssyt(s: &ParitySeq, diagram: &SkewDiagram) -> u64 {
    let en = Enumerator::new(s, diagram, usize::MAX);
    let mut count = 0u64;
    en.run(&mut Sink::Count(&mut count)).unwrap();
    count
}

/// The skew character: one term per semi-standard filling. Thinness of skew
/// shapes makes every multiplicity one.
pub fn skew_qchar(s: &ParitySeq, diagram: &SkewDiagram) -> Result<QChar, TableauxError> {
    skew_qchar_capped(s, diagram, DEFAULT_TABLEAU_CAP)
}

pub fn skew_qchar_capped(
    s: &ParitySeq,
    diagram: &SkewDiagram,
    cap: usize,
) -> Result<QChar, TableauxError> {
    let mut chi = QChar::zero(s.clone());
    for t in enumerate_ssyt_capped(s, diagram, cap)? {
        chi.add_term(t.lweight(s), 1).unwrap();
    }
    Ok(chi)
}

/// Number of standard Young tableaux of a straight shape, by removing
/// corners one at a time (no closed formula involved).
pub fn count_syt(shape: &Partition) -> u64 {
    fn rec(parts: &mut Vec<u64>, memo: &mut HashMap<Vec<u64>, u64>) -> u64 {
        if parts.is_empty() {
            return 1;
        }
        if let Some(&v) = memo.get(parts) {
            return v;
        }
        let mut total = 0;
        for i in 0..parts.len() {
            let is_corner = i + 1 == parts.len() || parts[i] > parts[i + 1];
            if !is_corner {
                continue;
            }
            parts[i] -= 1;
            if parts[i] == 0 {
                let restored = parts.remove(i);
                debug_assert_eq!(restored, 0);
                total += rec(parts, memo);
                parts.insert(i, 0);
            } else {
                total += rec(parts, memo);
            }
            parts[i] += 1;
        }
        memo.insert(parts.clone(), total);
        total
    }
    let mut parts = shape.parts().to_vec();
    rec(&mut parts, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(parts: &[u64]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn skew(outer: &[u64], inner: &[u64]) -> SkewDiagram {
        SkewDiagram::new(pt(outer), pt(inner)).unwrap()
    }

    #[test]
    fn cells_and_contents_of_worked_shape() {
        let d = skew(&[5, 3, 3, 3, 3], &[3, 3, 2, 2]);
        assert_eq!(d.num_cells(), 7);
        let contents: Vec<i64> = d.cells().iter().map(|c| c.content()).collect();
        assert_eq!(contents, vec![3, 4, 0, -1, -4, -3, -2]);
    }

    #[test]
    fn degenerate_shapes() {
        let d = skew(&[2, 1], &[2, 1]);
        assert!(d.cells().is_empty());
        let d = skew(&[2], &[1]);
        assert_eq!(d.cells(), vec![Cell { row: 1, col: 2 }]);
        assert_eq!(d.cells()[0].content(), 1);
        assert_eq!(
            SkewDiagram::new(pt(&[1, 1]), pt(&[2])).unwrap_err(),
            TableauxError::NotContained
        );
    }

    #[test]
    fn enumeration_order_is_row_major_lexicographic() {
        // the output order is part of the contract
        let d = skew(&[2, 1], &[]);
        let s: ParitySeq = "+-".parse().unwrap();
        let ts = enumerate_ssyt(&s, &d).unwrap();
        let entries: Vec<&[usize]> = ts.iter().map(|t| t.entries()).collect();
        assert_eq!(entries, vec![&[1, 1, 2][..], &[1, 2, 2][..]]);

        let s: ParitySeq = "-+".parse().unwrap();
        let ts = enumerate_ssyt(&s, &d).unwrap();
        let entries: Vec<&[usize]> = ts.iter().map(|t| t.entries()).collect();
        // alphabet 1bar < 1: barred strict in rows, unbarred strict in columns
        assert_eq!(entries, vec![&[1, 2, 1][..], &[1, 2, 2][..]]);
    }

    #[test]
    fn single_box_has_all_singleton_fillings() {
        let d = skew(&[1], &[]);
        for p in ["+-", "-+"] {
            let s: ParitySeq = p.parse().unwrap();
            let ts = enumerate_ssyt(&s, &d).unwrap();
            assert_eq!(ts.len(), 2);
            assert_eq!(ts[0].entries(), &[1]);
            assert_eq!(ts[1].entries(), &[2]);
        }
    }

    #[test]
    fn column_strictness_can_kill_everything() {
        // two-row column with a single unbarred letter admits no filling
        let d = skew(&[2, 2], &[]);
        let s: ParitySeq = "+".parse().unwrap();
        assert!(enumerate_ssyt(&s, &d).unwrap().is_empty());
        // a single barred letter fills columns but not length-2 rows
        let s: ParitySeq = "-".parse().unwrap();
        assert!(enumerate_ssyt(&s, &d).unwrap().is_empty());
        // and one barred letter does fill a column shape
        let col = skew(&[1, 1, 1], &[]);
        assert_eq!(enumerate_ssyt(&s, &col).unwrap().len(), 1);
    }

    #[test]
    fn worked_example_filling_is_enumerated() {
        let d = skew(&[5, 3, 3, 3, 3], &[3, 3, 2, 2]);
        let s: ParitySeq = "+-+-".parse().unwrap();
        let ts = enumerate_ssyt(&s, &d).unwrap();
        // boxes row-major: (1,4) (1,5) (3,3) (4,3) (5,1) (5,2) (5,3)
        let shown = vec![1, 1, 2, 2, 2, 3, 4];
        assert!(
            ts.iter().any(|t| t.entries() == shown.as_slice()),
            "published filling missing from enumeration"
        );
    }

    #[test]
    fn tableau_cap_is_enforced() {
        let d = skew(&[2, 1], &[]);
        let s = ParitySeq::standard(2, 1);
        let err = enumerate_ssyt_capped(&s, &d, 3).unwrap_err();
        assert_eq!(err, TableauxError::CapExceeded { cap: 3 });
    }

    #[test]
    fn single_box_lweights() {
        let d = skew(&[1], &[]);
        let s: ParitySeq = "+-".parse().unwrap();
        let ts = enumerate_ssyt(&s, &d).unwrap();
        let w1 = ts[0].lweight(&s);
        let w2 = ts[1].lweight(&s);
        assert_eq!(w1, LWeight::xfactor(&s, 1, 0));
        assert_eq!(w2, LWeight::xfactor(&s, 2, 0));
    }

    #[test]
    fn tableau_lweight_matches_xfactor_product() {
        let d = skew(&[2, 1], &[]);
        for s in ParitySeq::all(1, 2) {
            for t in enumerate_ssyt(&s, &d).unwrap() {
                let mut product = LWeight::unit(s.clone());
                for (cell, &pos) in d.cells().iter().zip(t.entries()) {
                    product = product
                        .try_mul(&LWeight::xfactor(&s, pos, cell.content()))
                        .unwrap();
                }
                assert_eq!(t.lweight(&s), product);
            }
        }
    }

    #[test]
    fn empty_diagram_character_is_the_unit() {
        let d = skew(&[3, 1], &[3, 1]);
        let s: ParitySeq = "+-".parse().unwrap();
        let chi = skew_qchar(&s, &d).unwrap();
        assert_eq!(chi.dim(), 1);
        assert_eq!(chi.multiplicity(&LWeight::unit(s)), 1);
    }

    #[test]
    fn single_box_character_matches_rank_two_expansion() {
        let d = skew(&[1], &[]);
        let s: ParitySeq = "+-".parse().unwrap();
        let chi = skew_qchar(&s, &d).unwrap();
        let z = LWeight::xfactor(&s, 1, 0);
        let expansion = crate::gl11::irreducible_qchar(&z).unwrap();
        assert_eq!(chi, expansion);
    }

    #[test]
    fn count_matches_enumeration() {
        let d = skew(&[3, 2], &[1]);
        for s in ParitySeq::all(2, 1) {
            assert_eq!(
                count_ssyt(&s, &d),
                enumerate_ssyt(&s, &d).unwrap().len() as u64
            );
        }
    }

    #[test]
    fn count_syt_small_shapes() {
        assert_eq!(count_syt(&pt(&[1])), 1);
        assert_eq!(count_syt(&pt(&[2, 1])), 2);
        assert_eq!(count_syt(&pt(&[2, 2])), 2);
        assert_eq!(count_syt(&Partition::empty()), 1);
        assert_eq!(count_syt(&pt(&[3, 2])), 5);
        assert_eq!(count_syt(&pt(&[4, 1, 1])), 10);
    }
}
