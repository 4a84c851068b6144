//! Day convolution over FB, Day powers with the interchange action, and the
//! symmetric and divided powers built from them.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;

use super::{ChainMap, Piece, SymSeq};
use crate::error::{Error, Result};
use crate::linalg::{sign, Quotient, SparseMat, SparseVec, SubspaceBasis, VecBuilder, Q};
use crate::partitions::{cartesian, restrict, CollisionStructure};
use crate::perm::{all_perms, full_mask, min_elem, ordered_decompositions, rank_in, set_partitions, Perm};

/// Basis element of a Day product: an ordered decomposition of `[k]` and one
/// basis index per factor.
pub type DayKey = (Vec<u32>, Vec<usize>);

/// A Day product of sequences together with its basis bookkeeping.
#[derive(Clone, Debug)]
pub struct DayProduct {
    pub seq: SymSeq,
    pub keys: Vec<Vec<DayKey>>,
    pub lookup: Vec<HashMap<DayKey, usize>>,
}

/// Whether transposing classes of degrees `a` and `b` costs a sign.
pub(crate) fn koszul(a: i32, b: i32) -> bool {
    (a * b).rem_euclid(2) == 1
}

/// Position of `i` inside `mask`, for transpositions acting within one block.
pub(crate) fn block_transposition(mask: u32, i: usize) -> Option<usize> {
    (mask & (1 << i) != 0 && mask & (1 << (i + 1)) != 0).then(|| rank_in(mask, i))
}

pub(crate) fn swap_bits(mask: u32, i: usize) -> u32 {
    let a = (mask >> i) & 1;
    let b = (mask >> (i + 1)) & 1;
    if a == b {
        mask
    } else {
        mask ^ (0b11 << i)
    }
}

/// The Day product `F_1 ⊗ ⋯ ⊗ F_r` through weight `w`.
pub fn day_product(factors: &[&SymSeq], w: usize) -> Result<DayProduct> {
    for f in factors {
        f.require(w)?;
    }
    let r = factors.len();
    let mut pieces = Vec::with_capacity(w + 1);
    let mut all_keys = Vec::with_capacity(w + 1);
    let mut all_lookup = Vec::with_capacity(w + 1);
    for k in 0..=w {
        let mut keys: Vec<DayKey> = Vec::new();
        for dec in ordered_decompositions(full_mask(k), r) {
            let dims: Vec<usize> = dec.iter().zip(factors).map(|(m, f)| f.dim(m.count_ones() as usize)).collect();
            if dims.contains(&0) {
                continue;
            }
            for tuple in cartesian(&dims) {
                keys.push((dec.clone(), tuple));
            }
        }
        let lookup: HashMap<DayKey, usize> = keys.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let n = keys.len();
        let size = |m: &u32| m.count_ones() as usize;
        let degrees: Vec<i32> = keys
            .iter()
            .map(|(dec, t)| dec.iter().zip(t).zip(factors).map(|((m, &a), f)| f.degree(size(m), a)).sum())
            .collect();
        let mut d_cols = Vec::with_capacity(n);
        for (dec, t) in &keys {
            let mut acc = VecBuilder::new();
            let mut before = 0i32;
            for j in 0..r {
                let piece = factors[j].piece(size(&dec[j]));
                let s = sign(before as i64);
                for (b, c) in piece.d.col(t[j]).iter() {
                    let mut t2 = t.clone();
                    t2[j] = *b;
                    acc.add(lookup[&(dec.clone(), t2)], c * &s);
                }
                before += piece.degrees[t[j]];
            }
            d_cols.push(acc.finish());
        }
        let mut transpositions = Vec::with_capacity(k.saturating_sub(1));
        for i in 0..k.saturating_sub(1) {
            let mut cols = Vec::with_capacity(n);
            for (dec, t) in &keys {
                // Each factor is either acted on internally or keeps its label.
                let mut terms: Vec<(Vec<usize>, Q)> = vec![(Vec::new(), Q::one())];
                for j in 0..r {
                    let m = dec[j];
                    let choices: Vec<(usize, Q)> = match block_transposition(m, i) {
                        Some(pos) => {
                            let piece = factors[j].piece(size(&m));
                            piece.transpositions[pos].col(t[j]).iter().cloned().collect()
                        }
                        None => vec![(t[j], Q::one())],
                    };
                    let mut next = Vec::with_capacity(terms.len() * choices.len());
                    for (pre, c) in &terms {
                        for (b, x) in &choices {
                            let mut p = pre.clone();
                            p.push(*b);
                            next.push((p, c * x));
                        }
                    }
                    terms = next;
                }
                let dec2: Vec<u32> = dec.iter().map(|&m| swap_bits(m, i)).collect();
                let mut acc = VecBuilder::new();
                for (t2, c) in terms {
                    acc.add(lookup[&(dec2.clone(), t2)], c);
                }
                cols.push(acc.finish());
            }
            transpositions.push(SparseMat::from_cols(n, cols));
        }
        pieces.push(Piece { degrees, d: SparseMat::from_cols(n, d_cols), transpositions });
        all_keys.push(keys);
        all_lookup.push(lookup);
    }
    Ok(DayProduct { seq: SymSeq { max_weight: w, pieces }, keys: all_keys, lookup: all_lookup })
}

/// `(F ⊗ G)(k) = ⊕ Ind F(i) ⊗ G(j)`, basis indexed by the subset carrying `F`.
pub fn day_tensor_fb(f: &SymSeq, g: &SymSeq, w: usize) -> Result<SymSeq> {
    Ok(day_product(&[f, g], w)?.seq)
}

/// The `r`-fold Day power with the action of `Σ_r` permuting factors.
#[derive(Clone, Debug)]
pub struct DayPower {
    pub r: usize,
    pub product: DayProduct,
    /// `interchange[k][j]` swaps factors `j` and `j + 1` in weight `k`.
    pub interchange: Vec<Vec<SparseMat>>,
}

impl DayPower {
    /// The action of `σ ∈ Σ_r` on weight `k`.
    pub fn act(&self, k: usize, p: &Perm, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        for j in p.adjacent_word() {
            v = self.interchange[k][j - 1].apply(&v);
        }
        v
    }

    /// `Σ_{σ ∈ Σ_r} σ · v`.
    pub fn symmetrize(&self, k: usize, v: &SparseVec) -> SparseVec {
        let mut acc = VecBuilder::new();
        for p in all_perms(self.r) {
            acc.add_vec(&self.act(k, &p, v), &Q::one());
        }
        acc.finish()
    }
}

pub fn day_power(f: &SymSeq, r: usize, w: usize) -> Result<DayPower> {
    let factors = vec![f; r];
    let product = day_product(&factors, w)?;
    let mut interchange = Vec::with_capacity(w + 1);
    for k in 0..=w {
        let keys = &product.keys[k];
        let lookup = &product.lookup[k];
        let mut mats = Vec::new();
        for j in 0..r.saturating_sub(1) {
            let cols = keys
                .iter()
                .map(|(dec, t)| {
                    let pj = f.degree(dec[j].count_ones() as usize, t[j]);
                    let pk = f.degree(dec[j + 1].count_ones() as usize, t[j + 1]);
                    let (mut d2, mut t2) = (dec.clone(), t.clone());
                    d2.swap(j, j + 1);
                    t2.swap(j, j + 1);
                    let c = if koszul(pj, pk) { -Q::one() } else { Q::one() };
                    SparseVec::single(lookup[&(d2, t2)], c)
                })
                .collect();
            mats.push(SparseMat::from_cols(keys.len(), cols));
        }
        interchange.push(mats);
    }
    Ok(DayPower { r, product, interchange })
}

/// `Sym^r(F)`: coinvariants of the interchange action.
pub struct SymPower {
    pub seq: SymSeq,
    pub power: DayPower,
    /// Day-power index of each basis element.
    pub representatives: Vec<Vec<usize>>,
    quotients: Vec<Quotient>,
}

impl SymPower {
    pub fn project(&self, k: usize, v: &SparseVec) -> SparseVec {
        self.quotients[k].project(v)
    }
}

pub fn sym_power(f: &SymSeq, r: usize, w: usize) -> Result<SymPower> {
    let power = day_power(f, r, w)?;
    let mut pieces = Vec::with_capacity(w + 1);
    let mut quotients = Vec::with_capacity(w + 1);
    let mut representatives = Vec::with_capacity(w + 1);
    for k in 0..=w {
        let p = power.product.seq.piece(k);
        let n = p.dim();
        let mut relations = Vec::new();
        for t in &power.interchange[k] {
            for b in 0..n {
                relations.push(t.col(b).sub(&SparseVec::unit(b)));
            }
        }
        let quot = Quotient::new(n, relations);
        let reps: Vec<usize> = (0..quot.dim()).map(|m| quot.representative(m)).collect();
        let degrees = reps.iter().map(|&b| p.degrees[b]).collect();
        let d = reps.iter().map(|&b| quot.project(p.d.col(b))).collect();
        let transpositions = p
            .transpositions
            .iter()
            .map(|s| SparseMat::from_cols(reps.len(), reps.iter().map(|&b| quot.project(s.col(b))).collect()))
            .collect();
        pieces.push(Piece { degrees, d: SparseMat::from_cols(reps.len(), d), transpositions });
        quotients.push(quot);
        representatives.push(reps);
    }
    Ok(SymPower { seq: SymSeq { max_weight: w, pieces }, power, representatives, quotients })
}

/// `Γ^r(F)`: invariants of the interchange action.
pub struct GammaPower {
    pub seq: SymSeq,
    pub power: DayPower,
    pub bases: Vec<SubspaceBasis>,
}

pub fn gamma_power(f: &SymSeq, r: usize, w: usize) -> Result<GammaPower> {
    let power = day_power(f, r, w)?;
    let mut pieces = Vec::with_capacity(w + 1);
    let mut bases = Vec::with_capacity(w + 1);
    for k in 0..=w {
        let p = power.product.seq.piece(k);
        let n = p.dim();
        let mut vectors = Vec::new();
        let mut degrees = Vec::new();
        for (deg, cols) in p.degree_blocks() {
            let stacked: Vec<SparseVec> = cols
                .iter()
                .map(|&b| {
                    let mut acc = VecBuilder::new();
                    for (j, t) in power.interchange[k].iter().enumerate() {
                        let diff = t.col(b).sub(&SparseVec::unit(b));
                        acc.add_vec(&diff.reindex(|i| Some(i + j * n)), &Q::one());
                    }
                    acc.finish()
                })
                .collect();
            let rows = n * power.interchange[k].len().max(1);
            for v in SparseMat::from_cols(rows, stacked).kernel() {
                vectors.push(v.reindex(|i| Some(cols[i])));
                degrees.push(deg);
            }
        }
        let basis = SubspaceBasis::new(vectors);
        let coords = |v: &SparseVec| basis.coordinates(v).expect("invariants are preserved");
        let m = basis.dim();
        let d = basis.vectors().iter().map(|v| coords(&p.d.apply(v))).collect();
        let transpositions = p
            .transpositions
            .iter()
            .map(|s| SparseMat::from_cols(m, basis.vectors().iter().map(|v| coords(&s.apply(v))).collect()))
            .collect();
        pieces.push(Piece { degrees, d: SparseMat::from_cols(m, d), transpositions });
        bases.push(basis);
    }
    Ok(GammaPower { seq: SymSeq { max_weight: w, pieces }, power, bases })
}

/// The norm `Sym^r(F) → Γ^r(F)`, `[v] ↦ Σ_σ σ·v`, one matrix per weight.
pub struct Norm {
    pub sym: SymPower,
    pub gamma: GammaPower,
    pub maps: Vec<SparseMat>,
}

impl Norm {
    /// Whether every weight block is square and invertible.
    pub fn is_iso(&self) -> bool {
        self.maps.iter().all(|m| m.nrows() == m.ncols() && m.rank() == m.ncols())
    }

    pub fn as_chain_map(&self) -> ChainMap {
        ChainMap { source: self.sym.seq.clone(), target: self.gamma.seq.clone(), maps: self.maps.clone() }
    }
}

pub fn norm(f: &SymSeq, r: usize, w: usize) -> Result<Norm> {
    let sym = sym_power(f, r, w)?;
    let gamma = gamma_power(f, r, w)?;
    let mut maps = Vec::with_capacity(w + 1);
    for k in 0..=w {
        let basis = &gamma.bases[k];
        let cols = sym.representatives[k]
            .iter()
            .map(|&b| {
                let v = sym.power.symmetrize(k, &SparseVec::unit(b));
                basis.coordinates(&v).ok_or_else(|| Error::SignConvention("symmetrized vector is not invariant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        maps.push(SparseMat::from_cols(basis.dim(), cols));
    }
    Ok(Norm { sym, gamma, maps })
}

/// `f^{⊗r}` on Day powers, for a degree-preserving map.
pub fn day_power_map(f: &ChainMap, src: &DayPower, tgt: &DayPower) -> Vec<SparseMat> {
    let w = src.product.seq.max_weight;
    (0..=w)
        .map(|k| {
            let cols = src.product.keys[k]
                .iter()
                .map(|(dec, t)| {
                    let mut terms: Vec<(Vec<usize>, Q)> = vec![(Vec::new(), Q::one())];
                    for (m, &a) in dec.iter().zip(t) {
                        let col = f.maps[m.count_ones() as usize].col(a);
                        let mut next = Vec::new();
                        for (pre, c) in &terms {
                            for (b, x) in col.iter() {
                                let mut p = pre.clone();
                                p.push(*b);
                                next.push((p, c * x));
                            }
                        }
                        terms = next;
                    }
                    let mut acc = VecBuilder::new();
                    for (t2, c) in terms {
                        acc.add(tgt.product.lookup[k][&(dec.clone(), t2)], c);
                    }
                    acc.finish()
                })
                .collect();
            SparseMat::from_cols(tgt.product.seq.dim(k), cols)
        })
        .collect()
}

/// `Γ^r(f)` for a chain map `f`.
pub fn gamma_power_map(f: &ChainMap, r: usize, w: usize) -> Result<ChainMap> {
    let src = gamma_power(&f.source, r, w)?;
    let tgt = gamma_power(&f.target, r, w)?;
    let big = day_power_map(f, &src.power, &tgt.power);
    let mut maps = Vec::with_capacity(w + 1);
    for k in 0..=w {
        let cols = src.bases[k]
            .vectors()
            .iter()
            .map(|v| {
                tgt.bases[k]
                    .coordinates(&big[k].apply(v))
                    .ok_or_else(|| Error::SignConvention("image of an invariant is not invariant".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        maps.push(SparseMat::from_cols(tgt.bases[k].dim(), cols));
    }
    Ok(ChainMap { source: src.seq, target: tgt.seq, maps })
}

/// Basis element of `Sym(F)` for reduced `F`: blocks of a set partition sorted
/// by least element, each labelled by a basis index of `F(|block|)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymWord {
    pub blocks: Vec<u32>,
    pub labels: Vec<usize>,
}

/// Sorts `(block, label, degree)` triples by least element; returns the
/// Koszul sign of the reordering.
pub fn canonicalize(mut items: Vec<(u32, usize, i32)>) -> (SymWord, bool) {
    let mut odd = false;
    // Insertion sort keeps track of every transposition performed.
    for i in 1..items.len() {
        let mut j = i;
        while j > 0 && min_elem(items[j - 1].0) > min_elem(items[j].0) {
            if koszul(items[j - 1].2, items[j].2) {
                odd = !odd;
            }
            items.swap(j - 1, j);
            j -= 1;
        }
    }
    (SymWord { blocks: items.iter().map(|x| x.0).collect(), labels: items.iter().map(|x| x.1).collect() }, odd)
}

/// `Sym(F)` of a reduced sequence on the orbit basis, optionally keeping only
/// degrees `≤ max_degree` (a subcomplex).
#[derive(Clone, Debug)]
pub struct OrbitSym {
    pub seq: SymSeq,
    pub words: Vec<Vec<SymWord>>,
    pub lookup: Vec<HashMap<SymWord, usize>>,
}

pub fn orbit_sym(f: &SymSeq, w: usize, max_degree: Option<i32>) -> Result<OrbitSym> {
    f.require(w)?;
    if !f.is_reduced() {
        return Err(Error::arg("the orbit basis needs a reduced sequence"));
    }
    let min_deg: BTreeMap<usize, i32> =
        (1..=w).filter_map(|k| f.piece(k).degrees.iter().min().map(|&m| (k, m))).collect();
    let mut pieces = Vec::new();
    let (mut all_words, mut all_lookup) = (Vec::new(), Vec::new());
    for k in 0..=w {
        let mut words = Vec::new();
        for part in set_partitions(full_mask(k)) {
            let sizes: Vec<usize> = part.iter().map(|m| m.count_ones() as usize).collect();
            if sizes.iter().any(|s| !min_deg.contains_key(s)) {
                continue;
            }
            if let Some(top) = max_degree {
                if sizes.iter().map(|s| min_deg[s]).sum::<i32>() > top {
                    continue;
                }
            }
            let dims: Vec<usize> = sizes.iter().map(|&s| f.dim(s)).collect();
            for labels in cartesian(&dims) {
                let deg: i32 = sizes.iter().zip(&labels).map(|(&s, &a)| f.degree(s, a)).sum();
                if max_degree.is_none_or(|top| deg <= top) {
                    words.push(SymWord { blocks: part.clone(), labels });
                }
            }
        }
        let lookup: HashMap<SymWord, usize> = words.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let n = words.len();
        let deg_of = |wd: &SymWord| -> i32 {
            wd.blocks.iter().zip(&wd.labels).map(|(m, &a)| f.degree(m.count_ones() as usize, a)).sum()
        };
        let degrees: Vec<i32> = words.iter().map(deg_of).collect();
        let d = words
            .iter()
            .map(|wd| {
                let mut acc = VecBuilder::new();
                let mut before = 0;
                for j in 0..wd.blocks.len() {
                    let piece = f.piece(wd.blocks[j].count_ones() as usize);
                    let s = sign(before as i64);
                    for (b, c) in piece.d.col(wd.labels[j]).iter() {
                        let mut w2 = wd.clone();
                        w2.labels[j] = *b;
                        if let Some(&idx) = lookup.get(&w2) {
                            acc.add(idx, c * &s);
                        }
                    }
                    before += piece.degrees[wd.labels[j]];
                }
                acc.finish()
            })
            .collect();
        let mut transpositions = Vec::new();
        for i in 0..k.saturating_sub(1) {
            let cols = words
                .iter()
                .map(|wd| {
                    let mut terms: Vec<(Vec<(u32, usize, i32)>, Q)> = vec![(Vec::new(), Q::one())];
                    for (&m, &a) in wd.blocks.iter().zip(&wd.labels) {
                        let size = m.count_ones() as usize;
                        let piece = f.piece(size);
                        let m2 = swap_bits(m, i);
                        let choices: Vec<(usize, Q)> = match block_transposition(m, i) {
                            Some(pos) => piece.transpositions[pos].col(a).iter().cloned().collect(),
                            None => vec![(a, Q::one())],
                        };
                        let mut next = Vec::new();
                        for (pre, c) in &terms {
                            for (b, x) in &choices {
                                let mut p = pre.clone();
                                p.push((m2, *b, piece.degrees[*b]));
                                next.push((p, c * x));
                            }
                        }
                        terms = next;
                    }
                    let mut acc = VecBuilder::new();
                    for (items, c) in terms {
                        let (w2, odd) = canonicalize(items);
                        acc.add(lookup[&w2], if odd { -c } else { c });
                    }
                    acc.finish()
                })
                .collect();
            transpositions.push(SparseMat::from_cols(n, cols));
        }
        pieces.push(Piece { degrees, d: SparseMat::from_cols(n, d), transpositions });
        all_words.push(words);
        all_lookup.push(lookup);
    }
    Ok(OrbitSym { seq: SymSeq { max_weight: w, pieces }, words: all_words, lookup: all_lookup })
}

/// Graded dimensions `degree → dim` of a presheaf value.
pub type GradedDims = BTreeMap<i32, usize>;

fn tensor_dims(a: &GradedDims, b: &GradedDims) -> GradedDims {
    let mut out = GradedDims::new();
    for (p, x) in a {
        for (q, y) in b {
            *out.entry(p + q).or_default() += x * y;
        }
    }
    out.retain(|_, v| *v > 0);
    out
}

fn lookup_value<'a>(
    factor: &'a HashMap<CollisionStructure, GradedDims>,
    cs: &CollisionStructure,
    j: usize,
) -> Result<&'a GradedDims> {
    factor.get(cs).ok_or_else(|| Error::arg(format!("factor {j} has no value on {cs}")))
}

/// `(F_1 ⊗ ⋯ ⊗ F_r)(S) = ⊕ ⊗_j F_j(S|_{I_j})` over ordered decompositions.
pub fn day_tensor_at_cs(s: &CollisionStructure, factors: &[HashMap<CollisionStructure, GradedDims>]) -> Result<GradedDims> {
    let n = s.ground_size();
    let mut total = GradedDims::new();
    for dec in ordered_decompositions(full_mask(n), factors.len()) {
        let mut acc: GradedDims = [(0, 1)].into_iter().collect();
        for (j, (&m, factor)) in dec.iter().zip(factors).enumerate() {
            acc = tensor_dims(&acc, lookup_value(factor, &restrict(s, m)?, j)?);
        }
        for (p, v) in acc {
            *total.entry(p).or_default() += v;
        }
    }
    total.retain(|_, v| *v > 0);
    Ok(total)
}

/// The same value computed as a colimit: every ordering `[n] ≅ I` with every
/// weak composition of `n` gives a diagram object, and relabelings inside the
/// blocks glue them. Each glued class is evaluated at its order-preserving
/// member, whose blocks carry the restrictions of `S`.
pub fn day_tensor_at_cs_colimit(
    s: &CollisionStructure,
    factors: &[HashMap<CollisionStructure, GradedDims>],
) -> Result<GradedDims> {
    use petgraph::unionfind::UnionFind;
    let n = s.ground_size();
    let r = factors.len();
    let perms = all_perms(n);
    let pindex: HashMap<&Perm, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut total = GradedDims::new();
    for comp in crate::partitions::compositions_weak(n, r) {
        let mut uf = UnionFind::<usize>::new(perms.len());
        let offsets: Vec<usize> = comp.iter().scan(0, |acc, &c| {
            let o = *acc;
            *acc += c;
            Some(o)
        }).collect();
        for (pi, p) in perms.iter().enumerate() {
            for (j, &c) in comp.iter().enumerate() {
                // Adjacent relabelings inside block j generate the block group.
                for t in 0..c.saturating_sub(1) {
                    let mut q = p.0.clone();
                    q.swap(offsets[j] + t, offsets[j] + t + 1);
                    uf.union(pi, pindex[&Perm(q)]);
                }
            }
        }
        let mut roots: BTreeMap<usize, usize> = BTreeMap::new();
        for pi in 0..perms.len() {
            let root = uf.find(pi);
            let p = &perms[pi];
            let sorted = comp
                .iter()
                .enumerate()
                .all(|(j, &c)| (0..c.saturating_sub(1)).all(|t| p.0[offsets[j] + t] < p.0[offsets[j] + t + 1]));
            if sorted && roots.insert(root, pi).is_some() {
                return Err(Error::Validation("a glued class has two order-preserving members".into()));
            }
        }
        for (_, pi) in roots {
            let p = &perms[pi];
            let mut acc: GradedDims = [(0, 1)].into_iter().collect();
            for (j, &c) in comp.iter().enumerate() {
                let mask = p.0[offsets[j]..offsets[j] + c].iter().fold(0u32, |m, &x| m | (1 << x));
                acc = tensor_dims(&acc, lookup_value(&factors[j], &restrict(s, mask)?, j)?);
            }
            for (deg, v) in acc {
                *total.entry(deg).or_default() += v;
            }
        }
    }
    total.retain(|_, v| *v > 0);
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::super::validate;
    use super::*;
    use crate::linalg::q;
    use crate::partitions::all_collision_structures;

    fn odd_and_even() -> SymSeq {
        let mut s = SymSeq::zero(3);
        s.pieces[1] = Piece::trivial(1, vec![0, 1]);
        s
    }

    #[test]
    fn two_weight_one_generators() {
        let g = SymSeq::generator(2, 1, 0);
        let t = day_tensor_fb(&g, &g, 2).unwrap();
        assert!(validate(&t).is_valid());
        assert_eq!(t.dim(2), 2);
        // Regular representation: s_0 swaps the two basis vectors.
        let s = &t.pieces[2].transpositions[0];
        assert_eq!(s.get(1, 0), q(1));
        assert_eq!(s.get(0, 1), q(1));
        assert_eq!(t.dim(0) + t.dim(1), 0);
    }

    #[test]
    fn zero_tensor_is_zero() {
        let t = day_tensor_fb(&SymSeq::zero(3), &odd_and_even(), 3).unwrap();
        assert_eq!(t.total_dim(), 0);
    }

    #[test]
    fn truncation_is_enforced() {
        let g = SymSeq::generator(2, 1, 0);
        assert!(matches!(day_tensor_fb(&g, &g, 3), Err(Error::Truncation { .. })));
    }

    #[test]
    fn unit_power() {
        let p = sym_power(&odd_and_even(), 0, 3).unwrap();
        assert_eq!(p.seq.dim(0), 1);
        assert_eq!(p.seq.total_dim(), 1);
    }

    #[test]
    fn gamma_square_of_weight_one_classes() {
        // Even class: Γ² is the trivial line in weight 2.
        let even = SymSeq::generator(2, 1, 0);
        assert_eq!(gamma_power(&even, 2, 2).unwrap().seq.dim(2), 1);
        // Odd class: Σ₂ acts freely on the regular piece, still one invariant.
        let odd = SymSeq::generator(2, 1, 1);
        assert_eq!(gamma_power(&odd, 2, 2).unwrap().seq.dim(2), 1);
        // The sign shows up in the isotypic type: trivial vs sign line.
        let ge = gamma_power(&even, 2, 2).unwrap();
        let go = gamma_power(&odd, 2, 2).unwrap();
        assert_eq!(ge.seq.pieces[2].transpositions[0].get(0, 0), q(1));
        assert_eq!(go.seq.pieces[2].transpositions[0].get(0, 0), q(-1));
    }

    #[test]
    fn gamma_square_in_weight_zero_is_sign_sensitive() {
        let mut odd = SymSeq::zero(1);
        odd.pieces[0] = Piece::trivial(0, vec![1, 1, 1]);
        let mut even = SymSeq::zero(1);
        even.pieces[0] = Piece::trivial(0, vec![0, 0, 0]);
        assert_eq!(gamma_power(&odd, 2, 1).unwrap().seq.dim(0), 3);
        assert_eq!(gamma_power(&even, 2, 1).unwrap().seq.dim(0), 6);
        assert_eq!(gamma_power(&super::super::shift(&even, 1), 2, 1).unwrap().seq.dim(0), 3);
    }

    #[test]
    fn norm_is_iso_and_powers_are_valid() {
        let f = odd_and_even();
        for r in 0..=3 {
            let n = norm(&f, r, 3).unwrap();
            assert!(n.is_iso(), "r = {r}");
            assert!(validate(&n.sym.seq).is_valid());
            assert!(validate(&n.gamma.seq).is_valid());
            assert!(n.as_chain_map().check().is_valid());
        }
    }

    #[test]
    fn orbit_sym_matches_coinvariants() {
        let f = odd_and_even();
        let o = orbit_sym(&f, 3, None).unwrap();
        assert!(validate(&o.seq).is_valid());
        let mut expect = [0usize; 4];
        for r in 0..=3 {
            let s = sym_power(&f, r, 3).unwrap();
            for (k, e) in expect.iter_mut().enumerate() {
                *e += s.seq.dim(k);
            }
        }
        for (k, &e) in expect.iter().enumerate() {
            assert_eq!(o.seq.dim(k), e, "weight {k}");
        }
    }

    #[test]
    fn cs_value_enumeration() {
        let mut f = HashMap::new();
        for n in 0..=3 {
            for cs in all_collision_structures(n).unwrap() {
                let dims: GradedDims = [(n as i32, 1 + cs.generators().len())].into_iter().collect();
                f.insert(cs, dims);
            }
        }
        let s = CollisionStructure::trivial(1);
        let v = day_tensor_at_cs(&s, &[f.clone(), f.clone()]).unwrap();
        assert_eq!(v.values().sum::<usize>(), 2);
        for n in 0..=3 {
            for cs in all_collision_structures(n).unwrap() {
                let a = day_tensor_at_cs(&cs, &[f.clone(), f.clone()]).unwrap();
                let b = day_tensor_at_cs_colimit(&cs, &[f.clone(), f.clone()]).unwrap();
                assert_eq!(a, b, "{cs}");
            }
        }
        // A reduced factor kills the value on the empty set.
        let mut reduced = f.clone();
        for cs in all_collision_structures(0).unwrap() {
            reduced.insert(cs, GradedDims::new());
        }
        let empty = CollisionStructure::trivial(0);
        assert!(day_tensor_at_cs(&empty, &[reduced, f.clone()]).unwrap().is_empty());
        assert!(day_tensor_at_cs(&empty, &[HashMap::new()]).is_err());
    }
}
