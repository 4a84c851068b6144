//! The representation-stability criterion for `FI^op`-spaces, checked on the
//! homology of the Lie model.
//!
//! Degrees are homological. In the general variant the abelian quotient sits
//! in degree -1; the stability variant places it in degree 0 and is handled
//! by lowering every degree by one before applying the general criterion.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::TwistedLie;
use crate::linalg::{rank_of, SparseVec};
use crate::twisted::day::{day_power, orbit_sym};
use crate::twisted::{basis_table, homology_with_action, shift, HomTable, Piece, SymSeq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Path-connected values: condition (2) reads `H_0(L_k) = 0` for `k > 1`.
    Stability,
    /// Arbitrary values: condition (2) reads `H_{-1}(L_k) = 0` for `k > 1`
    /// and `H_i = 0` for `i < -1`.
    General,
}

impl Variant {
    fn offset(self) -> i32 {
        match self {
            Variant::Stability => -1,
            Variant::General => 0,
        }
    }
}

/// Homology of a Lie algebra with its symmetric-group actions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieHomologyData {
    pub seq: SymSeq,
}

impl LieHomologyData {
    pub fn new(seq: SymSeq) -> Result<Self> {
        let report = crate::twisted::validate(&seq);
        report.into_result()?;
        if seq.pieces.iter().any(|p| !p.d.is_zero()) {
            return Err(Error::arg("homology data must have zero differential"));
        }
        if !seq.is_reduced() {
            return Err(Error::arg("homology data must vanish in weight 0"));
        }
        Ok(LieHomologyData { seq })
    }

    pub fn from_lie(l: &TwistedLie) -> Result<Self> {
        LieHomologyData::new(homology_with_action(&l.seq))
    }

    pub fn max_weight(&self) -> usize {
        self.seq.max_weight
    }

    pub fn table(&self) -> HomTable {
        basis_table(&self.seq)
    }

    fn translated(&self, variant: Variant) -> SymSeq {
        match variant.offset() {
            0 => self.seq.clone(),
            r => shift(&self.seq, r),
        }
    }
}

/// The threshold `ℓ(i)`: `H_{≤i}(L_k) = 0` for every `k ≥ ℓ(i)` inside the
/// truncation. It is conclusive only if a nonzero class is not found in the
/// top weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Threshold {
    pub degree: i32,
    pub ell: usize,
    pub conclusive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub variant: Variant,
    pub max_weight: usize,
    pub finite_dimensional: bool,
    pub low_degree_vanishing: bool,
    /// `(weight, degree, dimension)` of every class breaking condition (2).
    pub low_degree_failures: Vec<(usize, i32, usize)>,
    pub thresholds: Vec<Threshold>,
    /// Condition (3) witnessed for every degree up to `i_max`.
    pub eventual_vanishing: bool,
}

impl StabilityReport {
    /// All conditions witnessed through the truncation.
    pub fn holds(&self) -> bool {
        self.finite_dimensional && self.low_degree_vanishing && self.eventual_vanishing
    }

    pub fn inconclusive(&self) -> bool {
        self.low_degree_vanishing && !self.eventual_vanishing
    }
}

impl fmt::Display for StabilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "variant: {:?}, verified through weight {}", self.variant, self.max_weight)?;
        writeln!(f, "(1) finite type: {}", if self.finite_dimensional { "yes" } else { "no" })?;
        write!(f, "(2) low-degree vanishing: ")?;
        if self.low_degree_vanishing {
            writeln!(f, "yes")?;
        } else {
            let cells: Vec<String> =
                self.low_degree_failures.iter().map(|(k, i, d)| format!("H_{i}(L_{k}) = {d}")).collect();
            writeln!(f, "no ({})", cells.join(", "))?;
        }
        writeln!(f, "(3) eventual vanishing:")?;
        for t in &self.thresholds {
            let tag = if t.conclusive { "" } else { " (inconclusive: reaches the truncation)" };
            writeln!(f, "  l({}) = {}{tag}", t.degree, t.ell)?;
        }
        let verdict = if self.holds() {
            "all conditions hold through the truncation"
        } else if self.inconclusive() {
            "inconclusive"
        } else {
            "conditions fail"
        };
        write!(f, "verdict: {verdict}")
    }
}

/// `1 +` the largest weight carrying a nonzero class of degree `≤ i`.
fn cumulative_threshold(table: &HomTable, i: i32) -> (usize, bool) {
    let top = table.entries.iter().filter(|((_, p), d)| *p <= i && **d > 0).map(|((k, _), _)| *k).max().unwrap_or(0);
    (top + 1, top < table.max_weight)
}

pub fn check_conditions(h: &LieHomologyData, i_max: i32, variant: Variant) -> StabilityReport {
    let table = h.table();
    let general = basis_table(&h.translated(variant));
    let low_degree_failures: Vec<(usize, i32, usize)> = general
        .entries
        .iter()
        .filter(|((k, p), d)| **d > 0 && ((*p == -1 && *k > 1) || *p < -1))
        .map(|((k, p), d)| (*k, p - variant.offset(), *d))
        .collect();
    let lowest = table.entries.iter().filter(|(_, d)| **d > 0).map(|((_, p), _)| *p).min().unwrap_or(0);
    let thresholds: Vec<Threshold> = (lowest.min(i_max)..=i_max)
        .map(|i| {
            let (ell, conclusive) = cumulative_threshold(&table, i);
            Threshold { degree: i, ell, conclusive }
        })
        .collect();
    StabilityReport {
        variant,
        max_weight: h.max_weight(),
        finite_dimensional: true,
        low_degree_vanishing: low_degree_failures.is_empty(),
        low_degree_failures,
        eventual_vanishing: thresholds.iter().all(|t| t.conclusive),
        thresholds,
    }
}

/// `Sym(H[1])` through weight `w`, on the orbit basis of the Day powers.
pub fn e1_page(h: &LieHomologyData, w: usize) -> Result<HomTable> {
    let shifted = shift(&h.seq.truncate(w)?, 1);
    Ok(basis_table(&orbit_sym(&shifted, w, None)?.seq))
}

/// `Sym(H[1])` summed over `r` as `Σ_r`-coinvariants of Day powers, each
/// computed as the rank of the averaging operator.
pub fn e1_page_brute_force(h: &LieHomologyData, w: usize) -> Result<HomTable> {
    let shifted = shift(&h.seq.truncate(w)?, 1);
    let mut table = HomTable { max_weight: w, ..Default::default() };
    table.set(0, 0, 1);
    for r in 1..=w {
        let power = day_power(&shifted, r, w)?;
        for k in r..=w {
            for (deg, cols) in power.product.seq.piece(k).degree_blocks() {
                let rank = rank_of(cols.iter().map(|&b| power.symmetrize(k, &SparseVec::unit(b))));
                if rank > 0 {
                    table.set(k, deg, table.get(k, deg) + rank);
                }
            }
        }
    }
    Ok(table)
}

/// `V = H[1]` modulo its weight-1 degree-0 part, in the general convention.
pub fn indecomposables(h: &LieHomologyData, variant: Variant) -> SymSeq {
    let mut v = shift(&h.translated(variant), 1);
    if v.max_weight >= 1 {
        let p = &v.pieces[1];
        let keep: Vec<i32> = p.degrees.iter().copied().filter(|&d| d != 0).collect();
        v.pieces[1] = Piece::trivial(1, keep);
    }
    v
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundRow {
    pub degree: i32,
    pub ell: usize,
    /// First weight at which vanishing is asserted.
    pub from_weight: usize,
    pub checked_weights: usize,
    /// `(weight, dimension)` of the first nonvanishing cell, if any.
    pub first_failure: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub max_weight: usize,
    pub rows: Vec<BoundRow>,
}

impl BoundReport {
    pub fn verified(&self) -> bool {
        self.rows.iter().all(|r| r.first_failure.is_none())
    }
}

/// Checks `Sym(V)_{k,i} = 0` for `i ≤ i_max` and `i·ℓ ≤ k ≤ w`, where `ℓ`
/// is the cumulative threshold of `V` in degrees `≤ i`.
pub fn vanishing_bound_report(h: &LieHomologyData, i_max: i32, w: usize, variant: Variant) -> Result<BoundReport> {
    let report = check_conditions(h, i_max, variant);
    if !report.low_degree_vanishing {
        return Err(Error::Precondition(format!(
            "low-degree vanishing fails at {:?}",
            report.low_degree_failures
        )));
    }
    let v = indecomposables(h, variant).truncate(w)?;
    let v_table = basis_table(&v);
    let sym = basis_table(&orbit_sym(&v, w, Some(i_max.max(0)))?.seq);
    let mut rows = Vec::new();
    for i in 0..=i_max.max(0) {
        let (ell, _) = cumulative_threshold(&v_table, i);
        let from = (i as usize * ell).max(1);
        let mut first_failure = None;
        for k in from..=w {
            let d = sym.get(k, i);
            if d > 0 {
                first_failure = Some((k, d));
                break;
            }
        }
        rows.push(BoundRow { degree: i, ell, from_weight: from, checked_weights: (w + 1).saturating_sub(from), first_failure });
    }
    Ok(BoundReport { max_weight: w, rows })
}

/// Sorted `(weight, degree) → dim` cells, for reports.
pub fn cells(t: &HomTable) -> BTreeMap<(usize, i32), usize> {
    t.entries.iter().filter(|(_, d)| **d > 0).map(|(k, d)| (*k, *d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{braid_poincare_oracle, conf_lie_model};
    use crate::random::{rep_piece, Rep};

    fn conf(n: i32, w: usize) -> LieHomologyData {
        LieHomologyData::from_lie(&conf_lie_model(n, w, false).unwrap()).unwrap()
    }

    #[test]
    fn conf_model_is_stable() {
        let r = check_conditions(&conf(2, 6), 3, Variant::General);
        assert!(r.holds(), "{r}");
        for t in &r.thresholds {
            assert_eq!(t.ell as i32, t.degree + 3);
        }
        assert_eq!(r.thresholds.first().unwrap().degree, -1);
    }

    #[test]
    fn low_degree_class_breaks_condition_two() {
        let mut s = SymSeq::zero(5);
        s.pieces[5] = rep_piece(5, Rep::Trivial, -1);
        let h = LieHomologyData::new(s).unwrap();
        let r = check_conditions(&h, 1, Variant::General);
        assert!(!r.low_degree_vanishing);
        assert_eq!(r.low_degree_failures, vec![(5, -1, 1)]);
        assert!(matches!(vanishing_bound_report(&h, 1, 5, Variant::General), Err(Error::Precondition(_))));
        let mut s = SymSeq::zero(5);
        s.pieces[5] = rep_piece(5, Rep::Trivial, 0);
        let r = check_conditions(&LieHomologyData::new(s).unwrap(), 1, Variant::Stability);
        assert_eq!(r.low_degree_failures, vec![(5, 0, 1)]);
    }

    #[test]
    fn zero_is_vacuously_stable() {
        let h = LieHomologyData::new(SymSeq::zero(4)).unwrap();
        let r = check_conditions(&h, 2, Variant::General);
        assert!(r.holds());
        assert!(vanishing_bound_report(&h, 2, 4, Variant::General).unwrap().verified());
        let e1 = e1_page(&h, 4).unwrap();
        assert_eq!(cells(&e1), [((0, 0), 1)].into_iter().collect());
    }

    #[test]
    fn single_class_in_weight_one() {
        let h = LieHomologyData::new(SymSeq::generator(4, 1, -1)).unwrap();
        let e1 = e1_page(&h, 4).unwrap();
        for k in 0..=4 {
            assert_eq!(e1.get(k, 0), 1);
            assert_eq!(e1.weight_total(k), 1);
        }
        assert_eq!(e1, e1_page_brute_force(&h, 4).unwrap());
        let v = indecomposables(&h, Variant::General);
        assert_eq!(v.total_dim(), 0);
        assert!(vanishing_bound_report(&h, 3, 4, Variant::General).unwrap().verified());
    }

    #[test]
    fn e1_of_conf_model_is_the_braid_oracle() {
        let h = conf(2, 5);
        let e1 = e1_page(&h, 5).unwrap();
        for k in 1..=5 {
            assert_eq!(e1.poincare(k), braid_poincare_oracle(k, 2).unwrap());
        }
        let small = conf(3, 4);
        assert_eq!(e1_page(&small, 4).unwrap(), e1_page_brute_force(&small, 4).unwrap());
    }

    #[test]
    fn vanishing_bound_for_conf_model() {
        let h = conf(2, 8);
        let b = vanishing_bound_report(&h, 2, 8, Variant::General).unwrap();
        assert!(b.verified(), "{b:?}");
        assert!(b.rows.iter().any(|r| r.checked_weights > 0));
    }
}
