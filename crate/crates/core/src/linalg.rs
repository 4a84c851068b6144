//! Exact sparse linear algebra over the rationals.
//!
//! Vectors are sorted `(index, coefficient)` lists without zero entries and
//! matrices are stored column by column. Ranks, kernels and quotients are all
//! computed by incremental Gaussian elimination into an [`Echelon`] basis.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// `(-1)^e` as a rational.
pub fn sign(e: i64) -> Q {
    if e.rem_euclid(2) == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::arg(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Sparse vector with strictly increasing indices and nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Q)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        SparseVec { entries: vec![(i, Q::one())] }
    }

    pub fn single(i: usize, c: Q) -> Self {
        if c.is_zero() {
            Self::new()
        } else {
            SparseVec { entries: vec![(i, c)] }
        }
    }

    /// Builds a vector from arbitrary `(index, coefficient)` pairs, summing repeats.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Q)>>(pairs: I) -> Self {
        let mut acc = VecBuilder::new();
        for (i, c) in pairs {
            acc.add(i, c);
        }
        acc.finish()
    }

    /// Trusts the caller: sorted, distinct, nonzero.
    pub(crate) fn from_sorted(entries: Vec<(usize, Q)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|(_, c)| !c.is_zero()));
        SparseVec { entries }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, Q)> {
        self.entries.iter()
    }

    pub fn entries(&self) -> &[(usize, Q)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Q)> {
        self.entries
    }

    pub fn lead(&self) -> Option<&(usize, Q)> {
        self.entries.first()
    }

    pub fn get(&self, i: usize) -> Q {
        match self.entries.binary_search_by_key(&i, |e| e.0) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, x * c)).collect() }
    }

    pub fn neg(&self) -> Self {
        SparseVec { entries: self.entries.iter().map(|(i, x)| (*i, -x)).collect() }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &SparseVec, c: &Q) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ia, xa)), Some((ib, xb))) => {
                    if ia < ib {
                        out.push((*ia, xa.clone()));
                        a.next();
                    } else if ib < ia {
                        out.push((*ib, xb * c));
                        b.next();
                    } else {
                        let s = xa + xb * c;
                        if !s.is_zero() {
                            out.push((*ia, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((ia, xa)), None) => {
                    out.push((*ia, xa.clone()));
                    a.next();
                }
                (None, Some((ib, xb))) => {
                    out.push((*ib, xb * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &Q::one())
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        self.add_scaled(other, &-Q::one())
    }

    /// Reindexes through `f`; entries mapped to `None` are dropped.
    pub fn reindex(&self, mut f: impl FnMut(usize) -> Option<usize>) -> SparseVec {
        SparseVec::from_pairs(self.entries.iter().filter_map(|(i, c)| f(*i).map(|j| (j, c.clone()))))
    }

    pub fn to_dense(&self, len: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); len];
        for (i, c) in &self.entries {
            v[*i] = c.clone();
        }
        v
    }
}

impl fmt::Display for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (n, (i, c)) in self.entries.iter().enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{i}:{}", format_q(c))?;
        }
        write!(f, "]")
    }
}

/// Accumulates coefficients by index.
#[derive(Default)]
pub struct VecBuilder {
    acc: BTreeMap<usize, Q>,
}

impl VecBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, i: usize, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.acc.entry(i) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_vec(&mut self, v: &SparseVec, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v.iter() {
            self.add(*i, x * c);
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec { entries: self.acc.into_iter().collect() }
    }
}

/// Column-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMat {
    nrows: usize,
    cols: Vec<SparseVec>,
}

impl SparseMat {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMat { nrows, cols: vec![SparseVec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        SparseMat { nrows: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_cols(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.max_index().is_none_or(|m| m < nrows)));
        SparseMat { nrows, cols }
    }

    pub fn from_triples(nrows: usize, ncols: usize, triples: &[(usize, usize, Q)]) -> Result<Self> {
        let mut builders: Vec<VecBuilder> = (0..ncols).map(|_| VecBuilder::new()).collect();
        for (r, c, x) in triples {
            if *r >= nrows || *c >= ncols {
                return Err(Error::arg(format!("matrix entry ({r},{c}) outside {nrows}x{ncols}")));
            }
            builders[*c].add(*r, x.clone());
        }
        Ok(SparseMat { nrows, cols: builders.into_iter().map(VecBuilder::finish).collect() })
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn cols(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.cols[c].get(r)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn triples(&self) -> Vec<(usize, usize, Q)> {
        let mut out = Vec::new();
        for (c, col) in self.cols.iter().enumerate() {
            for (r, x) in col.iter() {
                out.push((*r, c, x.clone()));
            }
        }
        out.sort_by_key(|a| (a.0, a.1));
        out
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut acc = VecBuilder::new();
        for (j, c) in v.iter() {
            acc.add_vec(&self.cols[*j], c);
        }
        acc.finish()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SparseMat) -> SparseMat {
        assert_eq!(self.ncols(), other.nrows, "dimension mismatch in compose");
        SparseMat { nrows: self.nrows, cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn add(&self, other: &SparseMat) -> SparseMat {
        assert_eq!((self.nrows, self.ncols()), (other.nrows, other.ncols()));
        SparseMat {
            nrows: self.nrows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &SparseMat) -> SparseMat {
        assert_eq!((self.nrows, self.ncols()), (other.nrows, other.ncols()));
        SparseMat {
            nrows: self.nrows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> SparseMat {
        SparseMat { nrows: self.nrows, cols: self.cols.iter().map(|v| v.scale(c)).collect() }
    }

    pub fn transpose(&self) -> SparseMat {
        let mut rows: Vec<Vec<(usize, Q)>> = vec![Vec::new(); self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, x) in col.iter() {
                rows[*r].push((c, x.clone()));
            }
        }
        SparseMat { nrows: self.ncols(), cols: rows.into_iter().map(SparseVec::from_sorted).collect() }
    }

    /// Submatrix on the given rows and columns, reindexed in the given order.
    pub fn block(&self, rows: &[usize], cols: &[usize]) -> SparseMat {
        let mut pos = vec![usize::MAX; self.nrows];
        for (k, r) in rows.iter().enumerate() {
            pos[*r] = k;
        }
        SparseMat {
            nrows: rows.len(),
            cols: cols
                .iter()
                .map(|c| self.cols[*c].reindex(|r| (pos[r] != usize::MAX).then_some(pos[r])))
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        rank_of(self.cols.iter().cloned())
    }

    /// Basis of the kernel, as vectors in the column space.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let mut ech = Echelon::with_tracking();
        let mut out = Vec::new();
        for (j, c) in self.cols.iter().enumerate() {
            if let Some(dep) = ech.insert_tracked(c.clone(), SparseVec::unit(j)) {
                out.push(dep);
            }
        }
        out
    }
}

/// Rank of a family of vectors.
pub fn rank_of<I: IntoIterator<Item = SparseVec>>(vectors: I) -> usize {
    let mut vs: Vec<SparseVec> = vectors.into_iter().filter(|v| !v.is_zero()).collect();
    vs.sort_by_key(|v| v.nnz());
    let mut ech = Echelon::new();
    for v in vs {
        ech.insert(v);
    }
    ech.rank()
}

struct Pivot {
    row: SparseVec,
    combo: SparseVec,
}

/// Row-echelon basis keyed by leading index; every stored vector has leading
/// coefficient one. Optionally tracks each stored vector as a combination of
/// the inserted inputs.
#[derive(Default)]
pub struct Echelon {
    pivots: BTreeMap<usize, Pivot>,
    tracking: bool,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_tracking() -> Self {
        Echelon { pivots: BTreeMap::new(), tracking: true }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Eliminates leading terms only; the result is zero iff `v` lies in the span.
    fn reduce_lead(&self, mut v: SparseVec, mut combo: Option<&mut SparseVec>) -> SparseVec {
        while let Some((i, c)) = v.lead().cloned() {
            match self.pivots.get(&i) {
                Some(p) => {
                    let f = -c;
                    v = v.add_scaled(&p.row, &f);
                    if let Some(t) = combo.as_deref_mut() {
                        *t = t.add_scaled(&p.combo, &f);
                    }
                }
                None => break,
            }
        }
        v
    }

    /// Eliminates every entry sitting at a pivot index.
    pub fn reduce_full(&self, v: &SparseVec) -> SparseVec {
        self.reduce_full_tracked(v).0
    }

    /// Full reduction, also returning the coefficients `c` with
    /// `v = reduced + Σ c_p · row_p`.
    fn reduce_full_tracked(&self, v: &SparseVec) -> (SparseVec, Vec<(usize, Q)>) {
        let mut v = v.clone();
        let mut used = Vec::new();
        let mut cursor = 0usize;
        loop {
            let next = v.iter().find(|(i, _)| *i >= cursor && self.pivots.contains_key(i)).cloned();
            match next {
                Some((i, c)) => {
                    v = v.add_scaled(&self.pivots[&i].row, &-c.clone());
                    used.push((i, c));
                    cursor = i + 1;
                }
                None => break,
            }
        }
        (v, used)
    }

    /// Inserts `v`; returns whether it was independent of the current span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce_lead(v, None);
        self.push_reduced(r, SparseVec::new())
    }

    /// Inserts `v` whose provenance is `combo`; when `v` is dependent returns the
    /// vanishing combination.
    pub fn insert_tracked(&mut self, v: SparseVec, mut combo: SparseVec) -> Option<SparseVec> {
        let r = self.reduce_lead(v, Some(&mut combo));
        if r.is_zero() {
            Some(combo)
        } else {
            self.push_reduced(r, combo);
            None
        }
    }

    fn push_reduced(&mut self, r: SparseVec, combo: SparseVec) -> bool {
        let Some((i, c)) = r.lead().cloned() else { return false };
        let inv = c.recip();
        let row = r.scale(&inv);
        let combo = if self.tracking { combo.scale(&inv) } else { combo };
        self.pivots.insert(i, Pivot { row, combo });
        true
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce_lead(v.clone(), None).is_zero()
    }

    /// For a tracking echelon built from independent inputs, expresses `v` in
    /// terms of the inserted inputs. `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        debug_assert!(self.tracking);
        let (rest, used) = self.reduce_full_tracked(v);
        if !rest.is_zero() {
            return None;
        }
        let mut acc = VecBuilder::new();
        for (i, c) in used {
            acc.add_vec(&self.pivots[&i].combo, &c);
        }
        Some(acc.finish())
    }
}

/// A chosen basis of a subspace together with coordinate extraction.
pub struct SubspaceBasis {
    vectors: Vec<SparseVec>,
    ech: Echelon,
}

impl SubspaceBasis {
    /// Keeps a maximal independent subfamily of `vectors`, in order.
    pub fn new<I: IntoIterator<Item = SparseVec>>(vectors: I) -> Self {
        let mut ech = Echelon::with_tracking();
        let mut kept = Vec::new();
        for v in vectors {
            let idx = kept.len();
            if ech.insert_tracked(v.clone(), SparseVec::unit(idx)).is_none() {
                kept.push(v);
            }
        }
        SubspaceBasis { vectors: kept, ech }
    }

    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[SparseVec] {
        &self.vectors
    }

    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        self.ech.coordinates(v)
    }
}

/// Quotient of `Q^n` by a subspace, with the complement spanned by the standard
/// basis vectors that are not pivots of the subspace's echelon form.
pub struct Quotient {
    ech: Echelon,
    free: Vec<usize>,
    pos: Vec<Option<usize>>,
}

impl Quotient {
    pub fn new<I: IntoIterator<Item = SparseVec>>(ambient: usize, relations: I) -> Self {
        let mut ech = Echelon::new();
        for r in relations {
            ech.insert(r);
        }
        // Full reduction needs every pivot row reduced against later pivots, which
        // `reduce_full` handles by sweeping indices in increasing order.
        let mut pos = vec![None; ambient];
        let mut free = Vec::new();
        for i in 0..ambient {
            if !ech.pivots.contains_key(&i) {
                pos[i] = Some(free.len());
                free.push(i);
            }
        }
        Quotient { ech, free, pos }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Ambient index of the `k`-th quotient basis vector.
    pub fn representative(&self, k: usize) -> usize {
        self.free[k]
    }

    /// Class of `v` in quotient coordinates.
    pub fn project(&self, v: &SparseVec) -> SparseVec {
        let r = self.ech.reduce_full(v);
        r.reindex(|i| self.pos[i])
    }
}

/// Parses a rational written as a JSON number or string.
pub fn q_from_json(v: &serde_json::Value) -> Result<Q> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(q(i))
            } else {
                Err(Error::arg(format!("non-integer JSON number {n}; write rationals as \"p/q\"")))
            }
        }
        serde_json::Value::String(s) => parse_q(s),
        other => Err(Error::arg(format!("expected a rational, found {other}"))),
    }
}

pub fn is_positive(x: &Q) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(pairs: &[(usize, i64)]) -> SparseVec {
        SparseVec::from_pairs(pairs.iter().map(|(i, c)| (*i, q(*c))))
    }

    #[test]
    fn add_scaled_cancels() {
        let a = v(&[(0, 1), (2, 3)]);
        let b = v(&[(2, 1), (5, 1)]);
        assert_eq!(a.add_scaled(&b, &q(-3)), v(&[(0, 1), (5, -3)]));
    }

    #[test]
    fn rank_and_kernel() {
        let m = SparseMat::from_cols(3, vec![v(&[(0, 1), (1, 1)]), v(&[(1, 1), (2, 1)]), v(&[(0, 1), (2, -1)])]);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        assert!(m.apply(&ker[0]).is_zero());
    }

    #[test]
    fn coordinates_in_subspace() {
        let b = SubspaceBasis::new(vec![v(&[(0, 1), (1, 2)]), v(&[(1, 1), (2, 1)]), v(&[(0, 1), (1, 3), (2, 1)])]);
        assert_eq!(b.dim(), 2);
        let target = v(&[(0, 2), (1, 7), (2, 3)]);
        let c = b.coordinates(&target).unwrap();
        let mut acc = SparseVec::new();
        for (i, x) in c.iter() {
            acc = acc.add_scaled(&b.vectors()[*i], x);
        }
        assert_eq!(acc, target);
        assert!(b.coordinates(&v(&[(2, 1)])).is_none());
    }

    #[test]
    fn quotient_projection() {
        let quo = Quotient::new(3, vec![v(&[(0, 1), (1, -1)])]);
        assert_eq!(quo.dim(), 2);
        assert_eq!(quo.project(&v(&[(0, 1)])), quo.project(&v(&[(1, 1)])));
        assert!(quo.project(&v(&[(0, 1), (1, -1)])).is_zero());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_q("-3/6").unwrap(), qf(-1, 2));
        assert_eq!(format_q(&qf(4, 2)), "2");
        assert!(parse_q("1/0").is_err());
    }
}
