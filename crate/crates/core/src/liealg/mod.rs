//! Twisted Lie algebras and cocommutative coalgebras over FB, the
//! Chevalley–Eilenberg and Quillen complexes, and the maps between them.
//!
//! Structure maps are stored on the standard shuffle only: `β_{i,j}` has one
//! column per pair `(a, b)` at index `a · dim L(j) + b`, with `a` on
//! `{0..i-1}` and `b` on `{i..i+j-1}`. Other shuffles follow by equivariance.

pub mod ce;
pub mod free;
pub mod quillen;

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{sign, Quotient, SparseMat, SparseVec, VecBuilder, Q};
use crate::perm::{full_mask, relative_mask, shuffle_perm};
use crate::twisted::{validate, ChainMap, Piece, Report, SymSeq};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedLie {
    pub seq: SymSeq,
    pub brackets: BTreeMap<(usize, usize), SparseMat>,
}

/// Standard block of size `i` inside `[i + j]`.
fn std_mask(i: usize) -> u32 {
    full_mask(i)
}

impl TwistedLie {
    /// The abelian Lie algebra on a reduced sequence.
    pub fn abelian(seq: SymSeq) -> Self {
        let w = seq.max_weight;
        let mut brackets = BTreeMap::new();
        for i in 1..w {
            for j in 1..=w - i {
                brackets.insert((i, j), SparseMat::zeros(seq.dim(i + j), seq.dim(i) * seq.dim(j)));
            }
        }
        TwistedLie { seq, brackets }
    }

    pub fn max_weight(&self) -> usize {
        self.seq.max_weight
    }

    pub fn bracket_std(&self, i: usize, j: usize, a: usize, b: usize) -> SparseVec {
        match self.brackets.get(&(i, j)) {
            Some(m) => m.col(a * self.seq.dim(j) + b).clone(),
            None => SparseVec::new(),
        }
    }

    /// `β(S, x, y)` with `x ∈ L(i)` on `S` and `y ∈ L(j)` on the complement.
    pub fn bracket_shuffle(&self, i: usize, j: usize, s: u32, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = VecBuilder::new();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                acc.add_vec(&self.bracket_std(i, j, *a, *b), &(ca * cb));
            }
        }
        let v = acc.finish();
        if s == std_mask(i) || v.is_zero() {
            return v;
        }
        self.seq.piece(i + j).act(&shuffle_perm(i + j, s), &v)
    }

    /// Bracket of elements living on disjoint blocks `a` and `b` of some ground
    /// set; the result lives on `a ∪ b`.
    pub fn bracket_blocks(&self, a: u32, x: &SparseVec, b: u32, y: &SparseVec) -> SparseVec {
        let (i, j) = (a.count_ones() as usize, b.count_ones() as usize);
        self.bracket_shuffle(i, j, relative_mask(a, a | b), x, y)
    }

    pub fn is_reduced(&self) -> bool {
        self.seq.is_reduced()
    }

    pub fn truncate(&self, w: usize) -> Result<TwistedLie> {
        let seq = self.seq.truncate(w)?;
        let brackets = self.brackets.iter().filter(|((i, j), _)| i + j <= w).map(|(k, v)| (*k, v.clone())).collect();
        Ok(TwistedLie { seq, brackets })
    }
}


/// Antisymmetry, Jacobi, equivariance and Leibniz on every weight `≤ W`.
pub fn validate_lie(l: &TwistedLie) -> Report {
    let mut r = validate(&l.seq);
    if !r.is_valid() {
        return r;
    }
    let w = l.max_weight();
    if !l.is_reduced() {
        r.push("Lie algebra is not reduced");
        return r;
    }
    let seq = &l.seq;
    for i in 1..w {
        for j in 1..=w - i {
            let k = i + j;
            let Some(m) = l.brackets.get(&(i, j)) else {
                r.push(format!("missing bracket component ({i},{j})"));
                continue;
            };
            if m.nrows() != seq.dim(k) || m.ncols() != seq.dim(i) * seq.dim(j) {
                r.push(format!("bracket ({i},{j}) has the wrong shape"));
                continue;
            }
            let (pi, pj, pk) = (seq.piece(i), seq.piece(j), seq.piece(k));
            for a in 0..seq.dim(i) {
                for b in 0..seq.dim(j) {
                    let v = l.bracket_std(i, j, a, b);
                    let (da, db) = (pi.degrees[a], pj.degrees[b]);
                    if v.iter().any(|(x, _)| pk.degrees[*x] != da + db) {
                        r.push(format!("bracket ({i},{j}) does not add degrees"));
                    }
                    // Antisymmetry against the swapped component.
                    let t = full_mask(k) & !std_mask(i);
                    let swapped = l.bracket_shuffle(j, i, t, &SparseVec::unit(b), &SparseVec::unit(a));
                    let s = if (da * db).rem_euclid(2) == 1 { Q::one() } else { -Q::one() };
                    if v != swapped.scale(&s) {
                        r.push(format!("antisymmetry fails for ({i},{j}) on basis ({a},{b})"));
                    }
                    // Leibniz.
                    let lhs = pk.d.apply(&v);
                    let rhs = l
                        .bracket_shuffle(i, j, std_mask(i), pi.d.col(a), &SparseVec::unit(b))
                        .add(&l.bracket_shuffle(i, j, std_mask(i), &SparseVec::unit(a), pj.d.col(b)).scale(&sign(da as i64)));
                    if lhs != rhs {
                        r.push(format!("bracket ({i},{j}) is not a chain map on basis ({a},{b})"));
                    }
                    // Equivariance for transpositions inside either block.
                    for t in 0..i.saturating_sub(1) {
                        let lhs = l.bracket_shuffle(i, j, std_mask(i), pi.transpositions[t].col(a), &SparseVec::unit(b));
                        if lhs != pk.transpositions[t].apply(&v) {
                            r.push(format!("bracket ({i},{j}) is not equivariant for s_{t}"));
                        }
                    }
                    for t in 0..j.saturating_sub(1) {
                        let lhs = l.bracket_shuffle(i, j, std_mask(i), &SparseVec::unit(a), pj.transpositions[t].col(b));
                        if lhs != pk.transpositions[i + t].apply(&v) {
                            r.push(format!("bracket ({i},{j}) is not equivariant for s_{}", i + t));
                        }
                    }
                }
            }
        }
    }
    check_jacobi(l, &mut r);
    r.violations.dedup();
    r
}

fn check_jacobi(l: &TwistedLie, r: &mut Report) {
    let w = l.max_weight();
    let seq = &l.seq;
    for k in 3..=w {
        for a in 1..k - 1 {
            for b in 1..k - a {
                let c = k - a - b;
                let ma = full_mask(a);
                let mb = full_mask(b) << a;
                let mc = full_mask(c) << (a + b);
                for x in 0..seq.dim(a) {
                    for y in 0..seq.dim(b) {
                        for z in 0..seq.dim(c) {
                            let (ex, ey, ez) = (SparseVec::unit(x), SparseVec::unit(y), SparseVec::unit(z));
                            let (dx, dy) = (seq.degree(a, x), seq.degree(b, y));
                            // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]].
                            let yz = l.bracket_blocks(mb, &ey, mc, &ez);
                            let lhs = l.bracket_blocks(ma, &ex, mb | mc, &yz);
                            let xy = l.bracket_blocks(ma, &ex, mb, &ey);
                            let t1 = l.bracket_blocks(ma | mb, &xy, mc, &ez);
                            let xz = l.bracket_blocks(ma, &ex, mc, &ez);
                            let t2 = l.bracket_blocks(mb, &ey, ma | mc, &xz);
                            if lhs != t1.add(&t2.scale(&sign((dx * dy) as i64))) {
                                r.push(format!("Jacobi identity fails in weights ({a},{b},{c})"));
                                return;
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Chain map that also commutes with brackets.
pub fn check_lie_map(f: &ChainMap, src: &TwistedLie, tgt: &TwistedLie) -> Report {
    let mut r = f.check();
    let w = src.max_weight().min(tgt.max_weight());
    for i in 1..w {
        for j in 1..=w - i {
            for a in 0..src.seq.dim(i) {
                for b in 0..src.seq.dim(j) {
                    let lhs = f.maps[i + j].apply(&src.bracket_std(i, j, a, b));
                    let rhs = tgt.bracket_shuffle(i, j, std_mask(i), f.maps[i].col(a), f.maps[j].col(b));
                    if lhs != rhs {
                        r.push(format!("map does not preserve the bracket ({i},{j})"));
                        return r;
                    }
                }
            }
        }
    }
    r
}

/// A reduced cocommutative coalgebra: weight 0 is the one-dimensional unit and
/// `comults[(i, j)]` is the standard-shuffle component of the reduced
/// comultiplication `K(i + j) → K(i) ⊗ K(j)`, rows at `a · dim K(j) + b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedCoalg {
    pub seq: SymSeq,
    pub comults: BTreeMap<(usize, usize), SparseMat>,
}

impl TwistedCoalg {
    /// The coalgebra with zero reduced comultiplication on `1 ⊕ K̄`.
    pub fn primitive(reduced: &SymSeq) -> Result<Self> {
        if !reduced.is_reduced() {
            return Err(Error::arg("the reduced part must vanish in weight 0"));
        }
        let mut seq = reduced.clone();
        seq.pieces[0] = Piece::trivial(0, vec![0]);
        let w = seq.max_weight;
        let mut comults = BTreeMap::new();
        for i in 1..w {
            for j in 1..=w - i {
                comults.insert((i, j), SparseMat::zeros(seq.dim(i) * seq.dim(j), seq.dim(i + j)));
            }
        }
        Ok(TwistedCoalg { seq, comults })
    }

    pub fn max_weight(&self) -> usize {
        self.seq.max_weight
    }

    pub fn reduced(&self) -> SymSeq {
        let mut s = self.seq.clone();
        s.pieces[0] = Piece::zero(0);
        s
    }

    /// The `(S, complement)` component of the reduced coproduct of `k ∈ K(n)`
    /// as a map `(a, b) ↦ coefficient`.
    pub fn coproduct_component(&self, n: usize, s: u32, k: &SparseVec) -> BTreeMap<(usize, usize), Q> {
        let i = s.count_ones() as usize;
        let j = n - i;
        let mut out = BTreeMap::new();
        if i == 0 || j == 0 {
            return out;
        }
        let Some(m) = self.comults.get(&(i, j)) else { return out };
        let v = if s == std_mask(i) { k.clone() } else { self.seq.piece(n).act(&shuffle_perm(n, s).inverse(), k) };
        let dj = self.seq.dim(j);
        for (row, c) in m.apply(&v).iter() {
            out.insert((row / dj, row % dj), c.clone());
        }
        out
    }
}

/// Coassociativity, cocommutativity, equivariance, the chain-map property and
/// the counit.
pub fn validate_coalg(kc: &TwistedCoalg) -> Report {
    let mut r = validate(&kc.seq);
    if !r.is_valid() {
        return r;
    }
    let seq = &kc.seq;
    if seq.dim(0) != 1 || seq.degree(0, 0) != 0 {
        r.push("weight 0 is not the one-dimensional unit in degree 0");
        return r;
    }
    let w = kc.max_weight();
    for i in 1..w {
        for j in 1..=w - i {
            let n = i + j;
            let Some(m) = kc.comults.get(&(i, j)) else {
                r.push(format!("missing comultiplication component ({i},{j})"));
                continue;
            };
            if m.ncols() != seq.dim(n) || m.nrows() != seq.dim(i) * seq.dim(j) {
                r.push(format!("comultiplication ({i},{j}) has the wrong shape"));
                continue;
            }
            let (pi, pj, pn) = (seq.piece(i), seq.piece(j), seq.piece(n));
            let dj = seq.dim(j);
            let split = |v: &SparseVec| -> BTreeMap<(usize, usize), Q> {
                m.apply(v).iter().map(|(row, c)| ((row / dj, row % dj), c.clone())).collect()
            };
            for k in 0..seq.dim(n) {
                let ek = SparseVec::unit(k);
                let delta = split(&ek);
                for (a, b) in delta.keys() {
                    if pi.degrees[*a] + pj.degrees[*b] != pn.degrees[k] {
                        r.push(format!("comultiplication ({i},{j}) does not preserve degree"));
                    }
                }
                // Cocommutativity against the swapped component.
                let t = full_mask(n) & !std_mask(i);
                let swapped = kc.coproduct_component(n, t, &ek);
                let mut expect = BTreeMap::new();
                for ((b, a), c) in swapped {
                    let s = sign((pi.degrees[a] * pj.degrees[b]) as i64);
                    expect.insert((a, b), c * s);
                }
                if expect != delta {
                    r.push(format!("cocommutativity fails for ({i},{j})"));
                }
                // Chain map: δ d = (d ⊗ 1 + 1 ⊗ d) δ.
                let lhs = split(pn.d.col(k));
                let mut rhs: BTreeMap<(usize, usize), Q> = BTreeMap::new();
                for ((a, b), c) in &delta {
                    for (a2, x) in pi.d.col(*a).iter() {
                        *rhs.entry((*a2, *b)).or_insert_with(Q::zero) += c * x;
                    }
                    let s = sign(pi.degrees[*a] as i64);
                    for (b2, x) in pj.d.col(*b).iter() {
                        *rhs.entry((*a, *b2)).or_insert_with(Q::zero) += c * x * &s;
                    }
                }
                rhs.retain(|_, v| !v.is_zero());
                if lhs != rhs {
                    r.push(format!("comultiplication ({i},{j}) is not a chain map"));
                }
                // Equivariance inside either block.
                for t in 0..i.saturating_sub(1) {
                    let lhs = split(pn.transpositions[t].col(k));
                    let mut rhs: BTreeMap<(usize, usize), Q> = BTreeMap::new();
                    for ((a, b), c) in &delta {
                        for (a2, x) in pi.transpositions[t].col(*a).iter() {
                            *rhs.entry((*a2, *b)).or_insert_with(Q::zero) += c * x;
                        }
                    }
                    rhs.retain(|_, v| !v.is_zero());
                    if lhs != rhs {
                        r.push(format!("comultiplication ({i},{j}) is not equivariant for s_{t}"));
                    }
                }
                for t in 0..j.saturating_sub(1) {
                    let lhs = split(pn.transpositions[i + t].col(k));
                    let mut rhs: BTreeMap<(usize, usize), Q> = BTreeMap::new();
                    for ((a, b), c) in &delta {
                        for (b2, x) in pj.transpositions[t].col(*b).iter() {
                            *rhs.entry((*a, *b2)).or_insert_with(Q::zero) += c * x;
                        }
                    }
                    rhs.retain(|_, v| !v.is_zero());
                    if lhs != rhs {
                        r.push(format!("comultiplication ({i},{j}) is not equivariant for s_{}", i + t));
                    }
                }
            }
        }
    }
    check_coassociativity(kc, &mut r);
    r.violations.dedup();
    r
}

fn check_coassociativity(kc: &TwistedCoalg, r: &mut Report) {
    let seq = &kc.seq;
    let w = kc.max_weight();
    let split = |i: usize, j: usize, v: &SparseVec| -> Vec<((usize, usize), Q)> {
        let dj = seq.dim(j);
        kc.comults[&(i, j)].apply(v).iter().map(|(row, c)| ((row / dj, row % dj), c.clone())).collect()
    };
    for n in 3..=w {
        for a in 1..n - 1 {
            for b in 1..n - a {
                let c = n - a - b;
                for k in 0..seq.dim(n) {
                    let ek = SparseVec::unit(k);
                    let mut left: BTreeMap<(usize, usize, usize), Q> = BTreeMap::new();
                    for ((u, z), x) in split(a + b, c, &ek) {
                        for ((p, q2), y) in split(a, b, &SparseVec::unit(u)) {
                            *left.entry((p, q2, z)).or_insert_with(Q::zero) += &x * &y;
                        }
                    }
                    let mut right: BTreeMap<(usize, usize, usize), Q> = BTreeMap::new();
                    for ((p, v), x) in split(a, b + c, &ek) {
                        for ((q2, z), y) in split(b, c, &SparseVec::unit(v)) {
                            *right.entry((p, q2, z)).or_insert_with(Q::zero) += &x * &y;
                        }
                    }
                    left.retain(|_, v| !v.is_zero());
                    right.retain(|_, v| !v.is_zero());
                    if left != right {
                        r.push(format!("coassociativity fails in weights ({a},{b},{c})"));
                        return;
                    }
                }
            }
        }
    }
}

/// A finite-dimensional graded-commutative algebra without differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedAlgebra {
    pub degrees: Vec<i32>,
    /// Products of basis elements; missing entries are zero.
    pub products: HashMap<(usize, usize), SparseVec>,
    pub unit: Option<usize>,
}

impl GradedAlgebra {
    pub fn ground_field() -> Self {
        GradedAlgebra {
            degrees: vec![0],
            products: [((0, 0), SparseVec::unit(0))].into_iter().collect(),
            unit: Some(0),
        }
    }

    /// One class in degree `-n` with zero square, the compactly supported
    /// cohomology of `R^n` in homological grading.
    pub fn compact_euclidean(n: i32) -> Self {
        GradedAlgebra { degrees: vec![-n], products: HashMap::new(), unit: None }
    }

    /// Cohomology of the two-torus in homological grading: `1, a, b, ab`.
    pub fn torus() -> Self {
        let mut products = HashMap::new();
        for x in 0..4 {
            products.insert((0, x), SparseVec::unit(x));
            products.insert((x, 0), SparseVec::unit(x));
        }
        products.insert((1, 2), SparseVec::unit(3));
        products.insert((2, 1), SparseVec::single(3, -Q::one()));
        GradedAlgebra { degrees: vec![0, -1, -1, -2], products, unit: Some(0) }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> SparseVec {
        self.products.get(&(a, b)).cloned().unwrap_or_default()
    }

    fn mul_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc = VecBuilder::new();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                acc.add_vec(&self.mul(*a, *b), &(ca * cb));
            }
        }
        acc.finish()
    }

    /// Degree additivity, graded commutativity, associativity and the unit.
    pub fn validate(&self) -> Report {
        let mut r = Report::default();
        let n = self.dim();
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                if ab.iter().any(|(x, _)| *x >= n || self.degrees[*x] != self.degrees[a] + self.degrees[b]) {
                    r.push(format!("product ({a},{b}) does not add degrees"));
                }
                let s = sign((self.degrees[a] * self.degrees[b]) as i64);
                if ab != self.mul(b, a).scale(&s) {
                    r.push(format!("product ({a},{b}) is not graded commutative"));
                }
                for c in 0..n {
                    let left = self.mul_vec(&ab, &SparseVec::unit(c));
                    let right = self.mul_vec(&SparseVec::unit(a), &self.mul(b, c));
                    if left != right {
                        r.push(format!("product is not associative on ({a},{b},{c})"));
                    }
                }
            }
            if let Some(u) = self.unit {
                if self.mul(u, a) != SparseVec::unit(a) || self.mul(a, u) != SparseVec::unit(a) {
                    r.push(format!("unit law fails on {a}"));
                }
            }
        }
        r
    }
}

/// `A ⊗ L` with `[α⊗x, β⊗y] = (-1)^{|x||β|} αβ ⊗ [x, y]`; the basis of
/// weight `k` is `(α, x)` at index `α · dim L(k) + x`.
pub fn tensor_lie(alg: &GradedAlgebra, l: &TwistedLie) -> Result<TwistedLie> {
    let report = alg.validate();
    if !report.is_valid() {
        return Err(Error::arg(format!("not a graded-commutative algebra: {}", report.violations.join("; "))));
    }
    let na = alg.dim();
    let w = l.max_weight();
    let pieces = l
        .seq
        .pieces
        .iter()
        .map(|p| {
            let nl = p.dim();
            let n = na * nl;
            let idx = |a: usize, x: usize| a * nl + x;
            let degrees = (0..n).map(|i| alg.degrees[i / nl] + p.degrees[i % nl]).collect();
            let lift = |m: &SparseMat, twist: bool| -> SparseMat {
                let cols = (0..n)
                    .map(|i| {
                        let (a, x) = (i / nl, i % nl);
                        let s = if twist { sign(alg.degrees[a] as i64) } else { Q::one() };
                        m.col(x).reindex(|y| Some(idx(a, y))).scale(&s)
                    })
                    .collect();
                SparseMat::from_cols(n, cols)
            };
            Piece { degrees, d: lift(&p.d, true), transpositions: p.transpositions.iter().map(|t| lift(t, false)).collect() }
        })
        .collect();
    let seq = SymSeq { max_weight: w, pieces };
    let mut brackets = BTreeMap::new();
    for &(i, j) in l.brackets.keys() {
        let (ni, nj, nk) = (l.seq.dim(i), l.seq.dim(j), l.seq.dim(i + j));
        let mut cols = Vec::with_capacity(na * ni * na * nj);
        for alpha in 0..na {
            for x in 0..ni {
                for beta in 0..na {
                    for y in 0..nj {
                        let s = sign((l.seq.degree(i, x) * alg.degrees[beta]) as i64);
                        let xy = l.bracket_std(i, j, x, y);
                        let mut acc = VecBuilder::new();
                        for (g, cg) in alg.mul(alpha, beta).iter() {
                            for (z, cz) in xy.iter() {
                                acc.add(g * nk + z, cg * cz * &s);
                            }
                        }
                        cols.push(acc.finish());
                    }
                }
            }
        }
        brackets.insert((i, j), SparseMat::from_cols(na * nk, cols));
    }
    Ok(TwistedLie { seq, brackets })
}

/// The quotient map `L → coker(d: L(1)_0 → L(1)_{-1})`, concentrated in
/// weight 1 and degree -1 with zero bracket.
pub fn abelian_quotient(l: &TwistedLie) -> Result<(TwistedLie, ChainMap)> {
    if !l.is_reduced() {
        return Err(Error::arg("abelian quotient needs a reduced Lie algebra"));
    }
    let w = l.max_weight();
    let p1 = l.seq.piece(1);
    let blocks = p1.degree_blocks();
    let low = blocks.get(&-1).cloned().unwrap_or_default();
    let pos: HashMap<usize, usize> = low.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let relations: Vec<SparseVec> = blocks
        .get(&0)
        .map(|cols| cols.iter().map(|&j| p1.d.col(j).reindex(|i| pos.get(&i).copied())).collect())
        .unwrap_or_default();
    let quot = Quotient::new(low.len(), relations);
    let mut target = SymSeq::zero(w);
    if w >= 1 {
        target.pieces[1] = Piece::trivial(1, vec![-1; quot.dim()]);
    }
    let mut maps: Vec<SparseMat> = (0..=w).map(|k| SparseMat::zeros(target.dim(k), l.seq.dim(k))).collect();
    if w >= 1 {
        let cols = (0..p1.dim())
            .map(|b| match pos.get(&b) {
                Some(&i) => quot.project(&SparseVec::unit(i)),
                None => SparseVec::new(),
            })
            .collect();
        maps[1] = SparseMat::from_cols(quot.dim(), cols);
    }
    let target = TwistedLie::abelian(target);
    let map = ChainMap { source: l.seq.clone(), target: target.seq.clone(), maps };
    let report = check_lie_map(&map, l, &target);
    report.into_result()?;
    Ok((target, map))
}

#[cfg(test)]
mod tests {
    use super::free::free_lie;
    use super::*;
    use crate::linalg::q;
    use crate::random::{rep_piece, Rep};

    #[test]
    fn abelian_is_valid() {
        let mut v = SymSeq::zero(3);
        v.pieces[1] = Piece::trivial(1, vec![0, 1]);
        v.pieces[2] = rep_piece(2, Rep::Sign, 3);
        assert!(validate_lie(&TwistedLie::abelian(v)).is_valid());
    }

    #[test]
    fn corrupted_sign_breaks_the_axioms() {
        let f = free_lie(&SymSeq::generator(3, 1, 0), 3).unwrap();
        let mut l = f.lie.clone();
        let m = l.brackets.get_mut(&(1, 2)).unwrap();
        *m = m.scale(&q(-1));
        let rep = validate_lie(&l);
        assert!(!rep.is_valid());
        assert!(rep.violations.iter().any(|v| v.contains("Jacobi") || v.contains("antisymmetry")), "{rep}");
    }

    #[test]
    fn algebras() {
        assert!(GradedAlgebra::ground_field().validate().is_valid());
        assert!(GradedAlgebra::compact_euclidean(2).validate().is_valid());
        assert!(GradedAlgebra::torus().validate().is_valid());
        let mut bad = GradedAlgebra::torus();
        bad.products.insert((2, 1), SparseVec::unit(3));
        assert!(!bad.validate().is_valid());
        let f = free_lie(&SymSeq::generator(2, 1, 0), 2).unwrap();
        assert!(matches!(tensor_lie(&bad, &f.lie), Err(Error::Argument(_))));
    }

    #[test]
    fn tensor_with_algebras() {
        let f = free_lie(&SymSeq::generator(4, 1, 1), 4).unwrap();
        assert_eq!(tensor_lie(&GradedAlgebra::ground_field(), &f.lie).unwrap(), f.lie);
        let c = tensor_lie(&GradedAlgebra::compact_euclidean(2), &f.lie).unwrap();
        assert!(c.brackets.values().all(SparseMat::is_zero));
        assert!(validate_lie(&c).is_valid());
        let t = tensor_lie(&GradedAlgebra::torus(), &f.lie).unwrap();
        assert!(t.brackets.values().any(|m| !m.is_zero()));
        assert!(validate_lie(&t).is_valid(), "{}", validate_lie(&t));
    }

    #[test]
    fn abelian_quotients() {
        let f = free_lie(&SymSeq::generator(3, 1, -1), 3).unwrap();
        let (target, _) = abelian_quotient(&f.lie).unwrap();
        assert_eq!(target.seq.dim(1), 1);
        let high = free_lie(&SymSeq::generator(4, 2, -1), 4).unwrap();
        assert_eq!(abelian_quotient(&high.lie).unwrap().0.seq.total_dim(), 0);
    }

    #[test]
    fn primitive_coalgebra() {
        let mut v = SymSeq::zero(3);
        v.pieces[1] = Piece::trivial(1, vec![0, 1]);
        let k = TwistedCoalg::primitive(&v).unwrap();
        assert!(validate_coalg(&k).is_valid());
    }
}
