//! Weight-truncated symmetric sequences of rational chain complexes.
//!
//! Weight `k` carries a finite graded basis, a differential of degree `-1`
//! stored as a square matrix, and the left action of the adjacent
//! transpositions `s_0, …, s_{k-2}` (`s_i` swaps `i` and `i + 1`).

pub mod day;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{rank_of, sign, SparseMat, SparseVec, SubspaceBasis, Q};
use crate::perm::Perm;
use crate::poly::Polynomial;

/// The weight-`k` component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub degrees: Vec<i32>,
    pub d: SparseMat,
    pub transpositions: Vec<SparseMat>,
}

impl Piece {
    pub fn zero(weight: usize) -> Self {
        Piece {
            degrees: Vec::new(),
            d: SparseMat::zeros(0, 0),
            transpositions: vec![SparseMat::zeros(0, 0); weight.saturating_sub(1)],
        }
    }

    /// A piece with trivial action and zero differential.
    pub fn trivial(weight: usize, degrees: Vec<i32>) -> Self {
        let n = degrees.len();
        Piece {
            degrees,
            d: SparseMat::zeros(n, n),
            transpositions: vec![SparseMat::identity(n); weight.saturating_sub(1)],
        }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    /// Basis indices grouped by degree.
    pub fn degree_blocks(&self) -> BTreeMap<i32, Vec<usize>> {
        let mut out: BTreeMap<i32, Vec<usize>> = BTreeMap::new();
        for (i, &p) in self.degrees.iter().enumerate() {
            out.entry(p).or_default().push(i);
        }
        out
    }

    /// Matrix of an arbitrary permutation, built from the adjacent word.
    pub fn perm_matrix(&self, p: &Perm) -> SparseMat {
        let mut m = SparseMat::identity(self.dim());
        for j in p.adjacent_word() {
            m = self.transpositions[j - 1].compose(&m);
        }
        m
    }

    /// Block sum, basis of `self` first.
    pub fn direct_sum(&self, other: &Piece) -> Piece {
        let n = self.dim();
        let total = n + other.dim();
        let shifted = |m: &SparseMat| m.cols().iter().map(|c| c.reindex(|i| Some(i + n))).collect::<Vec<_>>();
        let stack = |a: &SparseMat, b: &SparseMat| {
            let mut cols = a.cols().to_vec();
            cols.extend(shifted(b));
            SparseMat::from_cols(total, cols)
        };
        let mut degrees = self.degrees.clone();
        degrees.extend(&other.degrees);
        Piece {
            degrees,
            d: stack(&self.d, &other.d),
            transpositions: self.transpositions.iter().zip(&other.transpositions).map(|(a, b)| stack(a, b)).collect(),
        }
    }

    pub fn act(&self, p: &Perm, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for j in p.adjacent_word() {
            v = self.transpositions[j - 1].apply(&v);
        }
        v
    }
}

/// A symmetric sequence truncated at `max_weight`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymSeq {
    pub max_weight: usize,
    pub pieces: Vec<Piece>,
}

impl SymSeq {
    pub fn zero(max_weight: usize) -> Self {
        SymSeq { max_weight, pieces: (0..=max_weight).map(Piece::zero).collect() }
    }

    /// The monoidal unit: one class in weight 0, degree 0.
    pub fn unit(max_weight: usize) -> Self {
        let mut s = SymSeq::zero(max_weight);
        s.pieces[0] = Piece::trivial(0, vec![0]);
        s
    }

    /// One class of the given weight and degree with trivial action.
    pub fn generator(max_weight: usize, weight: usize, degree: i32) -> Self {
        let mut s = SymSeq::zero(max_weight);
        s.pieces[weight] = Piece::trivial(weight, vec![degree]);
        s
    }

    pub fn piece(&self, k: usize) -> &Piece {
        &self.pieces[k]
    }

    pub fn dim(&self, k: usize) -> usize {
        self.pieces.get(k).map_or(0, Piece::dim)
    }

    pub fn degree(&self, k: usize, b: usize) -> i32 {
        self.pieces[k].degrees[b]
    }

    pub fn total_dim(&self) -> usize {
        self.pieces.iter().map(Piece::dim).sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.dim(0) == 0
    }

    pub fn require(&self, needed: usize) -> Result<()> {
        if self.max_weight < needed {
            return Err(Error::Truncation { needed, available: self.max_weight });
        }
        Ok(())
    }

    /// Restriction to weights `≤ w`.
    pub fn truncate(&self, w: usize) -> Result<SymSeq> {
        self.require(w)?;
        Ok(SymSeq { max_weight: w, pieces: self.pieces[..=w].to_vec() })
    }

    /// Direct sum, basis of `self` first.
    pub fn direct_sum(&self, other: &SymSeq) -> Result<SymSeq> {
        if self.max_weight != other.max_weight {
            return Err(Error::arg("direct sum of sequences with different truncations"));
        }
        let pieces = self.pieces.iter().zip(&other.pieces).map(|(a, b)| a.direct_sum(b)).collect();
        Ok(SymSeq { max_weight: self.max_weight, pieces })
    }
}

/// Violations found by [`validate`]; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<String>,
}

impl Report {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push(&mut self, v: impl Into<String>) {
        self.violations.push(v.into());
    }

    pub fn extend(&mut self, other: Report) {
        self.violations.extend(other.violations);
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::Validation(self.violations.join("; ")))
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks every structural invariant of a symmetric sequence.
pub fn validate(f: &SymSeq) -> Report {
    let mut r = Report::default();
    if f.pieces.len() != f.max_weight + 1 {
        r.push(format!("expected {} weight pieces, found {}", f.max_weight + 1, f.pieces.len()));
        return r;
    }
    for (k, p) in f.pieces.iter().enumerate() {
        let n = p.dim();
        if p.d.nrows() != n || p.d.ncols() != n {
            r.push(format!("weight {k}: differential is not {n}x{n}"));
            continue;
        }
        if p.transpositions.len() != k.saturating_sub(1) {
            r.push(format!("weight {k}: expected {} transpositions", k.saturating_sub(1)));
            continue;
        }
        if p.transpositions.iter().any(|t| t.nrows() != n || t.ncols() != n) {
            r.push(format!("weight {k}: transposition matrix has the wrong shape"));
            continue;
        }
        for (j, c) in p.d.cols().iter().enumerate() {
            if c.iter().any(|(i, _)| p.degrees[*i] != p.degrees[j] - 1) {
                r.push(format!("weight {k}: differential does not lower degree by one on basis {j}"));
            }
        }
        if !p.d.compose(&p.d).is_zero() {
            r.push(format!("weight {k}: d^2 != 0"));
        }
        let id = SparseMat::identity(n);
        for (i, s) in p.transpositions.iter().enumerate() {
            for (j, c) in s.cols().iter().enumerate() {
                if c.iter().any(|(x, _)| p.degrees[*x] != p.degrees[j]) {
                    r.push(format!("weight {k}: s_{i} does not preserve degree"));
                    break;
                }
            }
            if s.compose(s) != id {
                r.push(format!("weight {k}: s_{i} is not an involution"));
            }
            if s.compose(&p.d) != p.d.compose(s) {
                r.push(format!("weight {k}: d does not commute with s_{i}"));
            }
            if let Some(t) = p.transpositions.get(i + 1) {
                if s.compose(t).compose(s) != t.compose(s).compose(t) {
                    r.push(format!("weight {k}: braid relation fails for s_{i}, s_{}", i + 1));
                }
            }
            for (j, t) in p.transpositions.iter().enumerate().skip(i + 2) {
                if s.compose(t) != t.compose(s) {
                    r.push(format!("weight {k}: s_{i} and s_{j} do not commute"));
                }
            }
        }
    }
    r
}

/// Homology dimensions by `(weight, degree)`, zero entries omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomTable {
    pub max_weight: usize,
    pub entries: BTreeMap<(usize, i32), usize>,
}

impl HomTable {
    pub fn get(&self, k: usize, p: i32) -> usize {
        self.entries.get(&(k, p)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, k: usize, p: i32, dim: usize) {
        if dim == 0 {
            self.entries.remove(&(k, p));
        } else {
            self.entries.insert((k, p), dim);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn weight_total(&self, k: usize) -> usize {
        self.entries.range((k, i32::MIN)..=(k, i32::MAX)).map(|(_, v)| v).sum()
    }

    /// Poincaré polynomial of weight `k` in the variable tracking degree.
    pub fn poincare(&self, k: usize) -> Polynomial {
        Polynomial::from_coeffs(
            self.entries.range((k, i32::MIN)..=(k, i32::MAX)).map(|(&(_, p), &v)| (p, v as i64)),
        )
    }

    /// Lines `weight<TAB>degree<TAB>dim`, sorted.
    pub fn to_tsv(&self) -> String {
        let mut s = String::from("weight\tdegree\tdim\n");
        for ((k, p), v) in &self.entries {
            s.push_str(&format!("{k}\t{p}\t{v}\n"));
        }
        s
    }

    pub fn poincare_lines(&self) -> String {
        (0..=self.max_weight).map(|k| format!("{k}\t{}\n", self.poincare(k))).collect()
    }

    /// Keeps weights in `range`.
    pub fn restrict_weights(&self, lo: usize, hi: usize) -> HomTable {
        HomTable {
            max_weight: hi.min(self.max_weight),
            entries: self.entries.iter().filter(|((k, _), _)| *k >= lo && *k <= hi).map(|(a, b)| (*a, *b)).collect(),
        }
    }
}

/// The dimensions of the basis itself, ignoring the differential.
pub fn basis_table(f: &SymSeq) -> HomTable {
    let mut t = HomTable { max_weight: f.max_weight, ..Default::default() };
    for (k, p) in f.pieces.iter().enumerate() {
        for (deg, idx) in p.degree_blocks() {
            t.set(k, deg, idx.len());
        }
    }
    t
}

fn block_rank(d: &SparseMat, cols: &[usize]) -> usize {
    rank_of(cols.iter().map(|&j| d.col(j).clone()))
}

/// Exact homology dimensions of a single weight piece.
pub fn piece_homology(p: &Piece) -> BTreeMap<i32, usize> {
    let blocks = p.degree_blocks();
    let ranks: BTreeMap<i32, usize> = blocks.iter().map(|(&deg, cols)| (deg, block_rank(&p.d, cols))).collect();
    let mut out = BTreeMap::new();
    for (&deg, cols) in &blocks {
        let h = cols.len() - ranks[&deg] - ranks.get(&(deg + 1)).copied().unwrap_or(0);
        if h > 0 {
            out.insert(deg, h);
        }
    }
    out
}

pub fn homology(f: &SymSeq) -> HomTable {
    let mut t = HomTable { max_weight: f.max_weight, ..Default::default() };
    for (k, p) in f.pieces.iter().enumerate() {
        for (deg, h) in piece_homology(p) {
            t.set(k, deg, h);
        }
    }
    t
}

/// Homology with the induced symmetric-group actions. Representatives are
/// chosen by extending an echelon basis of the boundaries with cycles in
/// basis order, so the result is deterministic.
pub fn homology_with_action(f: &SymSeq) -> SymSeq {
    let mut pieces = Vec::with_capacity(f.pieces.len());
    for (k, p) in f.pieces.iter().enumerate() {
        let blocks = p.degree_blocks();
        let mut degrees = Vec::new();
        // Per degree: the basis of boundaries+representatives and the offset of
        // the representatives among the kept vectors.
        let mut spaces: Vec<(i32, SubspaceBasis, usize, usize)> = Vec::new();
        for (&deg, cols) in &blocks {
            let local = p.d.block(&(0..p.dim()).collect::<Vec<_>>(), cols);
            let cycles: Vec<SparseVec> =
                local.kernel().into_iter().map(|v| v.reindex(|i| Some(cols[i]))).collect();
            let boundaries: Vec<SparseVec> = blocks
                .get(&(deg + 1))
                .map(|up| up.iter().map(|&j| p.d.col(j).clone()).filter(|v| !v.is_zero()).collect())
                .unwrap_or_default();
            let nb = rank_of(boundaries.iter().cloned());
            let basis = SubspaceBasis::new(boundaries.into_iter().chain(cycles));
            let h = basis.dim() - nb;
            if h > 0 {
                let offset = degrees.len();
                degrees.extend(std::iter::repeat_n(deg, h));
                spaces.push((deg, basis, nb, offset));
            }
        }
        let n = degrees.len();
        let mut transpositions = Vec::with_capacity(k.saturating_sub(1));
        for s in &p.transpositions {
            let mut cols = Vec::with_capacity(n);
            for (_, basis, nb, offset) in &spaces {
                for rep in &basis.vectors()[*nb..] {
                    let image = s.apply(rep);
                    let coords = basis.coordinates(&image).expect("action preserves cycles");
                    cols.push(coords.reindex(|i| (i >= *nb).then(|| i - nb + offset)));
                }
            }
            transpositions.push(SparseMat::from_cols(n, cols));
        }
        pieces.push(Piece { degrees, d: SparseMat::zeros(n, n), transpositions });
    }
    SymSeq { max_weight: f.max_weight, pieces }
}

/// Degrees raised by `r`; the differential picks up `(-1)^r`.
pub fn shift(f: &SymSeq, r: i32) -> SymSeq {
    let s = sign(r as i64);
    SymSeq {
        max_weight: f.max_weight,
        pieces: f
            .pieces
            .iter()
            .map(|p| Piece {
                degrees: p.degrees.iter().map(|x| x + r).collect(),
                d: p.d.scale(&s),
                transpositions: p.transpositions.clone(),
            })
            .collect(),
    }
}

/// A degree-preserving map of symmetric sequences, one matrix per weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub source: SymSeq,
    pub target: SymSeq,
    pub maps: Vec<SparseMat>,
}

impl ChainMap {
    pub fn identity(f: &SymSeq) -> Self {
        ChainMap {
            source: f.clone(),
            target: f.clone(),
            maps: f.pieces.iter().map(|p| SparseMat::identity(p.dim())).collect(),
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &ChainMap) -> ChainMap {
        ChainMap {
            source: other.source.clone(),
            target: self.target.clone(),
            maps: self.maps.iter().zip(&other.maps).map(|(a, b)| a.compose(b)).collect(),
        }
    }

    /// Degree, commutation with `d` and equivariance.
    pub fn check(&self) -> Report {
        let mut r = Report::default();
        for (k, m) in self.maps.iter().enumerate() {
            let (a, b) = (&self.source.pieces[k], &self.target.pieces[k]);
            if m.nrows() != b.dim() || m.ncols() != a.dim() {
                r.push(format!("weight {k}: map has the wrong shape"));
                continue;
            }
            for (j, c) in m.cols().iter().enumerate() {
                if c.iter().any(|(i, _)| b.degrees[*i] != a.degrees[j]) {
                    r.push(format!("weight {k}: map does not preserve degree"));
                    break;
                }
            }
            if m.compose(&a.d) != b.d.compose(m) {
                r.push(format!("weight {k}: map does not commute with d"));
            }
            for (i, (s, t)) in a.transpositions.iter().zip(&b.transpositions).enumerate() {
                if m.compose(s) != t.compose(m) {
                    r.push(format!("weight {k}: map is not equivariant for s_{i}"));
                }
            }
        }
        r
    }
}

/// Mapping cone: `source[1] ⊕ target` with `d(a, b) = (-da, f a + db)`.
pub fn cone(f: &ChainMap) -> SymSeq {
    let pieces = f
        .source
        .pieces
        .iter()
        .zip(&f.target.pieces)
        .zip(&f.maps)
        .map(|((a, b), m)| {
            let na = a.dim();
            let total = na + b.dim();
            let mut degrees: Vec<i32> = a.degrees.iter().map(|x| x + 1).collect();
            degrees.extend(&b.degrees);
            let minus = -Q::one();
            let mut d: Vec<SparseVec> = (0..na)
                .map(|j| a.d.col(j).scale(&minus).add(&m.col(j).reindex(|i| Some(i + na))))
                .collect();
            d.extend(b.d.cols().iter().map(|c| c.reindex(|i| Some(i + na))));
            let transpositions = a
                .transpositions
                .iter()
                .zip(&b.transpositions)
                .map(|(s, t)| {
                    let mut cols = s.cols().to_vec();
                    cols.extend(t.cols().iter().map(|c| c.reindex(|i| Some(i + na))));
                    SparseMat::from_cols(total, cols)
                })
                .collect();
            Piece { degrees, d: SparseMat::from_cols(total, d), transpositions }
        })
        .collect();
    SymSeq { max_weight: f.source.max_weight.min(f.target.max_weight), pieces }
}

/// Whether the cone is acyclic in every weight `< below`.
pub fn is_quasi_iso_below(f: &ChainMap, below: usize) -> bool {
    let c = cone(f);
    c.pieces.iter().take(below).all(|p| piece_homology(p).is_empty())
}

/// Whether the cone is acyclic through the truncation weight.
pub fn is_quasi_iso(f: &ChainMap) -> bool {
    is_quasi_iso_below(f, f.source.max_weight.min(f.target.max_weight) + 1)
}

/// Cache of permutation matrices on the pieces of one sequence.
pub struct ActionCache<'a> {
    seq: &'a SymSeq,
    cache: HashMap<(usize, Perm), SparseMat>,
}

impl<'a> ActionCache<'a> {
    pub fn new(seq: &'a SymSeq) -> Self {
        ActionCache { seq, cache: HashMap::new() }
    }

    pub fn matrix(&mut self, k: usize, p: &Perm) -> &SparseMat {
        let seq = self.seq;
        self.cache.entry((k, p.clone())).or_insert_with(|| seq.pieces[k].perm_matrix(p))
    }

    pub fn apply(&mut self, k: usize, p: &Perm, v: &SparseVec) -> SparseVec {
        if p.is_identity() {
            return v.clone();
        }
        self.matrix(k, p).apply(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    /// The regular representation of Σ₂ in degree 0: basis `e, s·e`.
    pub(crate) fn regular2() -> SymSeq {
        let mut s = SymSeq::zero(2);
        let swap = SparseMat::from_cols(2, vec![SparseVec::unit(1), SparseVec::unit(0)]);
        s.pieces[2] = Piece { degrees: vec![0, 0], d: SparseMat::zeros(2, 2), transpositions: vec![swap] };
        s
    }

    #[test]
    fn zero_and_regular_are_valid() {
        assert!(validate(&SymSeq::zero(4)).is_valid());
        assert!(validate(&regular2()).is_valid());
    }

    #[test]
    fn broken_square_is_named() {
        let mut s = SymSeq::zero(1);
        let d = SparseMat::from_triples(3, 3, &[(1, 0, q(1)), (2, 1, q(1))]).unwrap();
        s.pieces[1] = Piece { degrees: vec![2, 1, 0], d, transpositions: vec![] };
        let r = validate(&s);
        assert!(r.violations.iter().any(|v| v.contains("d^2")), "{r}");
    }

    #[test]
    fn homology_of_small_complexes() {
        let mut s = SymSeq::zero(1);
        s.pieces[1] = Piece::trivial(1, vec![0, 1, 1]);
        let h = homology(&s);
        assert_eq!(h.get(1, 0), 1);
        assert_eq!(h.get(1, 1), 2);
        s.pieces[1].d = SparseMat::from_triples(3, 3, &[(0, 1, q(1)), (0, 2, q(2))]).unwrap();
        let h = homology(&s);
        assert_eq!(h.get(1, 0), 0);
        assert_eq!(h.get(1, 1), 1);
        s.pieces[1] = Piece { degrees: vec![0, 1], d: SparseMat::from_triples(2, 2, &[(0, 1, q(3))]).unwrap(), transpositions: vec![] };
        assert!(homology(&s).is_zero());
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let f = ChainMap::identity(&regular2());
        assert!(f.check().is_valid());
        assert!(is_quasi_iso(&f));
        let z = ChainMap {
            source: regular2(),
            target: SymSeq::zero(2),
            maps: vec![SparseMat::zeros(0, 0), SparseMat::zeros(0, 0), SparseMat::zeros(0, 2)],
        };
        assert!(!is_quasi_iso(&z));
        assert!(is_quasi_iso_below(&z, 2));
    }

    #[test]
    fn shifts_compose() {
        let s = regular2();
        assert_eq!(shift(&s, 0), s);
        assert_eq!(shift(&shift(&s, 1), -1), s);
        assert_eq!(shift(&s, 3).pieces[2].degrees, vec![3, 3]);
    }

    #[test]
    fn action_on_homology() {
        // Regular Σ₂ in degree 1 mapping onto the trivial line in degree 0:
        // homology is the sign line in degree 1.
        let mut s = SymSeq::zero(2);
        let swap = SparseMat::from_cols(3, vec![SparseVec::unit(1), SparseVec::unit(0), SparseVec::unit(2)]);
        let d = SparseMat::from_triples(3, 3, &[(2, 0, q(1)), (2, 1, q(1))]).unwrap();
        s.pieces[2] = Piece { degrees: vec![1, 1, 0], d, transpositions: vec![swap] };
        assert!(validate(&s).is_valid());
        let h = homology_with_action(&s);
        assert!(validate(&h).is_valid());
        assert_eq!(h.pieces[2].degrees, vec![1]);
        assert_eq!(h.pieces[2].transpositions[0].get(0, 0), q(-1));
    }
}
