//! Free twisted Lie algebras on the multilinear left-normed basis.
//!
//! A letter is a generator basis element placed on a block of the ground set.
//! Letters of one word sit on disjoint blocks and are compared by the least
//! element of their block. The basis of the span of words on fixed letters is
//! the left-normed brackets `[[…[x_1, x_σ(2)], …], x_σ(r)]` whose first letter
//! is the least one, so there are `(r - 1)!` of them.

use std::cell::RefCell;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};

use super::TwistedLie;
use crate::error::{Error, Result};
use crate::linalg::{q, sign, SparseMat, SparseVec, VecBuilder, Q};
use crate::partitions::cartesian;
use crate::perm::{all_perms, embed_mask, full_mask, min_elem, set_partitions};
use crate::twisted::day::{block_transposition, swap_bits};
use crate::twisted::{ChainMap, Piece, SymSeq};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub mask: u32,
    pub label: usize,
}

impl Letter {
    pub fn weight(&self) -> usize {
        self.mask.count_ones() as usize
    }

    fn key(&self) -> usize {
        min_elem(self.mask)
    }
}

pub type Word = Vec<Letter>;

/// A Lie polynomial: normalized words with rational coefficients.
pub type LieElem = BTreeMap<Word, Q>;

pub fn add_term(e: &mut LieElem, w: Word, c: Q) {
    if c.is_zero() {
        return;
    }
    match e.entry(w) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

pub fn single(w: Word) -> LieElem {
    let mut e = LieElem::new();
    e.insert(w, Q::one());
    e
}

fn scale_into(acc: &mut LieElem, e: &LieElem, c: &Q) {
    for (w, x) in e {
        add_term(acc, w.clone(), x * c);
    }
}

type RankWord = Vec<u8>;
type MemoKey = (RankWord, RankWord, u32);

thread_local! {
    static MEMO: RefCell<HashMap<MemoKey, Rc<Vec<(i64, RankWord)>>>> = RefCell::new(HashMap::new());
}

/// Rewriting in rank space: letters are `0..n` ordered by rank, `odd` holds
/// the parity of each rank as a bit.
struct Rewriter {
    odd: u32,
}

impl Rewriter {
    fn parity(&self, w: &[u8]) -> bool {
        w.iter().fold(false, |acc, &x| acc ^ ((self.odd >> x) & 1 == 1))
    }

    fn push(out: &mut BTreeMap<RankWord, i64>, w: RankWord, c: i64) {
        let e = out.entry(w).or_insert(0);
        *e += c;
    }

    /// `[u, y]` for a normalized word `u` and a letter `y`.
    fn with_letter(&self, u: &[u8], y: u8, out: &mut BTreeMap<RankWord, i64>, c: i64) {
        if u[0] < y {
            let mut w = u.to_vec();
            w.push(y);
            Self::push(out, w, c);
        } else {
            // [u, y] = -(-1)^{|u||y|} [y, u].
            let s = if self.parity(u) && (self.odd >> y) & 1 == 1 { c } else { -c };
            self.bracket(&[y], u, out, s);
        }
    }

    /// `[u, v]` for normalized words, accumulated with coefficient `c`.
    fn bracket(&self, u: &[u8], v: &[u8], out: &mut BTreeMap<RankWord, i64>, c: i64) {
        if v.len() == 1 {
            self.with_letter(u, v[0], out, c);
            return;
        }
        let (vp, z) = (&v[..v.len() - 1], v[v.len() - 1]);
        // [u, [v', z]] = [[u, v'], z] - (-1)^{|v'||z|} [[u, z], v'].
        let mut first = BTreeMap::new();
        self.bracket(u, vp, &mut first, 1);
        for (w, x) in first {
            if x != 0 {
                self.with_letter(&w, z, out, c * x);
            }
        }
        let s = if self.parity(vp) && (self.odd >> z) & 1 == 1 { c } else { -c };
        let mut second = BTreeMap::new();
        self.with_letter(u, z, &mut second, 1);
        for (w, x) in second {
            if x != 0 {
                self.bracket(&w, vp, out, s * x);
            }
        }
    }
}

/// `[a, b]` of two normalized words on disjoint letters, as normalized words
/// with integer coefficients.
pub fn bracket_words(a: &[Letter], b: &[Letter], odd: impl Fn(&Letter) -> bool) -> Vec<(i64, Word)> {
    let mut letters: Vec<Letter> = a.iter().chain(b).copied().collect();
    letters.sort_by_key(Letter::key);
    debug_assert!(letters.windows(2).all(|w| w[0].key() != w[1].key()), "letters must be disjoint");
    let rank = |l: &Letter| letters.iter().position(|x| x == l).expect("present") as u8;
    let ra: RankWord = a.iter().map(rank).collect();
    let rb: RankWord = b.iter().map(rank).collect();
    let parity = letters.iter().enumerate().fold(0u32, |acc, (i, l)| if odd(l) { acc | (1 << i) } else { acc });
    let key = (ra, rb, parity);
    let result = MEMO.with(|m| m.borrow().get(&key).cloned());
    let result = match result {
        Some(r) => r,
        None => {
            let rw = Rewriter { odd: parity };
            let mut out = BTreeMap::new();
            rw.bracket(&key.0, &key.1, &mut out, 1);
            let r: Rc<Vec<(i64, RankWord)>> = Rc::new(out.into_iter().filter(|(_, c)| *c != 0).map(|(w, c)| (c, w)).collect());
            MEMO.with(|m| m.borrow_mut().insert(key, r.clone()));
            r
        }
    };
    result.iter().map(|(c, w)| (*c, w.iter().map(|&i| letters[i as usize]).collect())).collect()
}

/// Bilinear bracket of Lie polynomials.
pub fn bracket_elems(x: &LieElem, y: &LieElem, odd: &impl Fn(&Letter) -> bool) -> LieElem {
    let mut out = LieElem::new();
    for (wx, cx) in x {
        for (wy, cy) in y {
            let c = cx * cy;
            for (s, w) in bracket_words(wx, wy, odd) {
                add_term(&mut out, w, &c * q(s));
            }
        }
    }
    out
}

/// Normal form of the left-normed bracket of letters in arbitrary order.
pub fn normalize(word: &[Letter], odd: &impl Fn(&Letter) -> bool) -> LieElem {
    let mut acc = single(vec![word[0]]);
    for l in &word[1..] {
        acc = bracket_elems(&acc, &single(vec![*l]), odd);
    }
    acc
}

/// Relabels every letter of `e` from `[n]` onto the block `outer`.
pub fn embed(e: &LieElem, outer: u32) -> LieElem {
    e.iter()
        .map(|(w, c)| (w.iter().map(|l| Letter { mask: embed_mask(l.mask, outer), label: l.label }).collect(), c.clone()))
        .collect()
}

/// Iterated bracket `[[…[prefix, middle], rest_1], …]` for the derivation rule.
fn splice(prefix: &[Letter], middle: &LieElem, rest: &[Letter], odd: &impl Fn(&Letter) -> bool) -> LieElem {
    let mut acc = if prefix.is_empty() { middle.clone() } else { bracket_elems(&single(prefix.to_vec()), middle, odd) };
    for l in rest {
        acc = bracket_elems(&acc, &single(vec![*l]), odd);
    }
    acc
}

/// The free Lie algebra with its word basis.
#[derive(Clone, Debug)]
pub struct FreeLie {
    pub lie: TwistedLie,
    pub generators: SymSeq,
    pub words: Vec<Vec<Word>>,
    pub lookup: Vec<HashMap<Word, usize>>,
}

impl FreeLie {
    pub fn odd(&self) -> impl Fn(&Letter) -> bool + '_ {
        |l: &Letter| self.generators.degree(l.weight(), l.label).rem_euclid(2) == 1
    }

    pub fn degree_of(&self, w: &[Letter]) -> i32 {
        w.iter().map(|l| self.generators.degree(l.weight(), l.label)).sum()
    }

    /// Coordinates of a Lie polynomial on `[k]`.
    pub fn to_vec(&self, k: usize, e: &LieElem) -> SparseVec {
        let mut acc = VecBuilder::new();
        for (w, c) in e {
            acc.add(self.lookup[k][w], c.clone());
        }
        acc.finish()
    }

    pub fn to_elem(&self, k: usize, v: &SparseVec) -> LieElem {
        v.iter().map(|(i, c)| (self.words[k][*i].clone(), c.clone())).collect()
    }
}

/// Normalized words on `[k]` in canonical order.
fn enumerate_words(gens: &SymSeq, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for part in set_partitions(full_mask(k)) {
        let dims: Vec<usize> = part.iter().map(|m| gens.dim(m.count_ones() as usize)).collect();
        if part.is_empty() || dims.contains(&0) {
            continue;
        }
        let r = part.len();
        for labels in cartesian(&dims) {
            let letters: Vec<Letter> = part.iter().zip(&labels).map(|(&mask, &label)| Letter { mask, label }).collect();
            for p in all_perms(r.saturating_sub(1)) {
                let mut w = vec![letters[0]];
                w.extend(p.0.iter().map(|&i| letters[i + 1]));
                out.push(w);
            }
        }
    }
    out
}

/// Generator differential used by [`free_lie_with`]: the image of the single
/// letter with label `label` on `[k]`.
pub type GeneratorDifferential<'a> = dyn Fn(usize, usize) -> LieElem + 'a;

/// The free Lie algebra on a reduced sequence `V` through weight `w`.
pub fn free_lie(v: &SymSeq, w: usize) -> Result<FreeLie> {
    let d = |k: usize, label: usize| -> LieElem {
        v.piece(k)
            .d
            .col(label)
            .iter()
            .map(|(b, c)| (vec![Letter { mask: full_mask(k), label: *b }], c.clone()))
            .collect()
    };
    free_lie_with(v, w, &d)
}

/// Free Lie algebra on the graded generators of `v` whose differential is the
/// derivation extending `gen_d`. The differential of `v` itself is ignored.
pub fn free_lie_with(v: &SymSeq, w: usize, gen_d: &GeneratorDifferential<'_>) -> Result<FreeLie> {
    v.require(w)?;
    if !v.is_reduced() {
        return Err(Error::arg("free Lie algebras need a reduced generating sequence"));
    }
    let gens = v.truncate(w)?;
    let odd = |l: &Letter| gens.degree(l.weight(), l.label).rem_euclid(2) == 1;
    let mut words = Vec::with_capacity(w + 1);
    let mut lookup = Vec::with_capacity(w + 1);
    for k in 0..=w {
        let ws = enumerate_words(&gens, k);
        lookup.push(ws.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect::<HashMap<_, _>>());
        words.push(ws);
    }
    let deg_of = |wd: &[Letter]| -> i32 { wd.iter().map(|l| gens.degree(l.weight(), l.label)).sum() };
    let to_vec = |k: usize, e: &LieElem| -> Result<SparseVec> {
        let mut acc = VecBuilder::new();
        for (wd, c) in e {
            let idx = lookup[k].get(wd).ok_or_else(|| Error::SignConvention(format!("word {wd:?} is not normalized")))?;
            acc.add(*idx, c.clone());
        }
        Ok(acc.finish())
    };
    let mut pieces = Vec::with_capacity(w + 1);
    for k in 0..=w {
        let n = words[k].len();
        let degrees = words[k].iter().map(|wd| deg_of(wd)).collect();
        let mut d_cols = Vec::with_capacity(n);
        for wd in &words[k] {
            let mut acc = LieElem::new();
            let mut before = 0;
            for i in 0..wd.len() {
                let l = wd[i];
                let image = embed(&gen_d(l.weight(), l.label), l.mask);
                if !image.is_empty() {
                    let term = splice(&wd[..i], &image, &wd[i + 1..], &odd);
                    scale_into(&mut acc, &term, &sign(before as i64));
                }
                before += gens.degree(l.weight(), l.label);
            }
            d_cols.push(to_vec(k, &acc)?);
        }
        let mut transpositions = Vec::with_capacity(k.saturating_sub(1));
        for i in 0..k.saturating_sub(1) {
            let mut cols = Vec::with_capacity(n);
            for wd in &words[k] {
                let mut terms: Vec<(Word, Q)> = vec![(Vec::new(), Q::one())];
                for l in wd {
                    let m2 = swap_bits(l.mask, i);
                    let choices: Vec<(usize, Q)> = match block_transposition(l.mask, i) {
                        Some(pos) => gens.piece(l.weight()).transpositions[pos].col(l.label).iter().cloned().collect(),
                        None => vec![(l.label, Q::one())],
                    };
                    let mut next = Vec::new();
                    for (pre, c) in &terms {
                        for (b, x) in &choices {
                            let mut p = pre.clone();
                            p.push(Letter { mask: m2, label: *b });
                            next.push((p, c * x));
                        }
                    }
                    terms = next;
                }
                let mut acc = LieElem::new();
                for (t, c) in terms {
                    scale_into(&mut acc, &normalize(&t, &odd), &c);
                }
                cols.push(to_vec(k, &acc)?);
            }
            transpositions.push(SparseMat::from_cols(n, cols));
        }
        pieces.push(Piece { degrees, d: SparseMat::from_cols(n, d_cols), transpositions });
    }
    let seq = SymSeq { max_weight: w, pieces };
    let mut brackets = BTreeMap::new();
    for i in 1..w {
        for j in 1..=w - i {
            let k = i + j;
            let mut cols = Vec::with_capacity(words[i].len() * words[j].len());
            for a in &words[i] {
                for b in &words[j] {
                    let shifted: Word = b.iter().map(|l| Letter { mask: l.mask << i, label: l.label }).collect();
                    let mut acc = LieElem::new();
                    for (s, wd) in bracket_words(a, &shifted, odd) {
                        add_term(&mut acc, wd, q(s));
                    }
                    cols.push(to_vec(k, &acc)?);
                }
            }
            brackets.insert((i, j), SparseMat::from_cols(words[k].len(), cols));
        }
    }
    Ok(FreeLie { lie: TwistedLie { seq, brackets }, generators: gens, words, lookup })
}

/// `Lie(φ)` for a map of generating sequences.
pub fn free_lie_map(phi: &ChainMap, src: &FreeLie, tgt: &FreeLie) -> ChainMap {
    let w = src.lie.seq.max_weight;
    let maps = (0..=w)
        .map(|k| {
            let cols = src.words[k]
                .iter()
                .map(|wd| {
                    let mut terms: Vec<(Word, Q)> = vec![(Vec::new(), Q::one())];
                    for l in wd {
                        let mut next = Vec::new();
                        for (pre, c) in &terms {
                            for (b, x) in phi.maps[l.weight()].col(l.label).iter() {
                                let mut p = pre.clone();
                                p.push(Letter { mask: l.mask, label: *b });
                                next.push((p, c * x));
                            }
                        }
                        terms = next;
                    }
                    let mut acc = VecBuilder::new();
                    for (t, c) in terms {
                        acc.add(tgt.lookup[k][&t], c);
                    }
                    acc.finish()
                })
                .collect();
            SparseMat::from_cols(tgt.words[k].len(), cols)
        })
        .collect();
    ChainMap { source: src.lie.seq.clone(), target: tgt.lie.seq.clone(), maps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::validate_lie;
    use crate::twisted::validate;

    fn letter(i: usize) -> Letter {
        Letter { mask: 1 << i, label: 0 }
    }

    #[test]
    fn one_generator_dimensions() {
        let f = free_lie(&SymSeq::generator(5, 1, 0), 5).unwrap();
        let dims: Vec<usize> = (1..=5).map(|k| f.lie.seq.dim(k)).collect();
        assert_eq!(dims, vec![1, 1, 2, 6, 24]);
        assert!(validate(&f.lie.seq).is_valid());
        assert!(validate_lie(&f.lie).is_valid());
    }

    #[test]
    fn antisymmetry_in_weight_two() {
        for (deg, expect) in [(0, q(-1)), (1, q(1))] {
            let f = free_lie(&SymSeq::generator(2, 1, deg), 2).unwrap();
            // s_0 acts on [x_0, x_1] by -(-1)^{|x||x|}, so the coinvariant
            // [g, g] survives exactly for odd g.
            assert_eq!(f.lie.seq.pieces[2].transpositions[0].get(0, 0), expect);
        }
    }

    #[test]
    fn jacobi_rewrites() {
        let even = |_: &Letter| false;
        // [x0, [x1, x2]] = [[x0, x1], x2] - [[x0, x2], x1].
        let r = bracket_words(&[letter(0)], &[letter(1), letter(2)], even);
        assert_eq!(r, vec![(1, vec![letter(0), letter(1), letter(2)]), (-1, vec![letter(0), letter(2), letter(1)])]);
        // [x1, x0] = -[x0, x1].
        assert_eq!(bracket_words(&[letter(1)], &[letter(0)], even), vec![(-1, vec![letter(0), letter(1)])]);
        let odd = |_: &Letter| true;
        assert_eq!(bracket_words(&[letter(1)], &[letter(0)], odd), vec![(1, vec![letter(0), letter(1)])]);
    }

    #[test]
    fn zero_generators() {
        let f = free_lie(&SymSeq::zero(3), 3).unwrap();
        assert_eq!(f.lie.seq.total_dim(), 0);
        assert!(free_lie(&SymSeq::unit(2), 2).is_err());
    }

    #[test]
    fn mixed_generators_are_valid() {
        let mut v = SymSeq::zero(4);
        v.pieces[1] = Piece::trivial(1, vec![0, 1]);
        v.pieces[2] = crate::random::rep_piece(2, crate::random::Rep::Regular, 1);
        let f = free_lie(&v, 4).unwrap();
        assert!(validate(&f.lie.seq).is_valid());
        assert!(validate_lie(&f.lie).is_valid(), "{}", validate_lie(&f.lie));
    }
}
