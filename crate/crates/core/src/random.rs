//! Seeded generation of test inputs.
//!
//! Every randomized suite draws from `stream(seed, label, case)`: a ChaCha8
//! generator seeded with `seed` on the stream `label << 32 | case`, so cases
//! are independent of one another and of evaluation order.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::{q, SparseMat, SparseVec};
use crate::perm::{all_perms, Perm};
use crate::twisted::{ChainMap, Piece, SymSeq};

pub fn stream(seed: u64, label: u32, case: u32) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(((label as u64) << 32) | case as u64);
    rng
}

/// Representation types used as building blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rep {
    Trivial,
    Sign,
    Regular,
}

/// The representation `rep` of `Σ_w` placed in one degree.
pub fn rep_piece(w: usize, rep: Rep, degree: i32) -> Piece {
    match rep {
        Rep::Trivial => Piece::trivial(w, vec![degree]),
        Rep::Sign => {
            let t = SparseMat::from_cols(1, vec![SparseVec::single(0, q(-1))]);
            Piece { degrees: vec![degree], d: SparseMat::zeros(1, 1), transpositions: vec![t; w.saturating_sub(1)] }
        }
        Rep::Regular => {
            let perms = all_perms(w);
            let n = perms.len();
            let index = |p: &Perm| perms.iter().position(|x| x == p).expect("listed");
            let transpositions = (0..w.saturating_sub(1))
                .map(|i| {
                    let s = Perm::adjacent(w, i);
                    SparseMat::from_cols(n, perms.iter().map(|p| SparseVec::unit(index(&s.compose(p)))).collect())
                })
                .collect();
            Piece { degrees: vec![degree; n], d: SparseMat::zeros(n, n), transpositions }
        }
    }
}

fn signed_augmentation(w: usize, rep: Rep) -> Vec<SparseVec> {
    all_perms(w)
        .iter()
        .map(|p| SparseVec::single(0, if rep == Rep::Sign { q(p.sign()) } else { q(1) }))
        .collect()
}

/// `X[1] → X` with the identity, an acyclic piece.
pub fn contractible_pair(w: usize, rep: Rep, degree: i32) -> Piece {
    let lower = rep_piece(w, rep, degree);
    let upper = rep_piece(w, rep, degree + 1);
    let n = lower.dim();
    let mut p = lower.direct_sum(&upper);
    p.d = SparseMat::from_cols(2 * n, (0..2 * n).map(|j| if j < n { SparseVec::new() } else { SparseVec::unit(j - n) }).collect());
    p
}

/// The regular representation in `degree + 1` mapping onto a line in
/// `degree` by the (signed) augmentation.
pub fn augmentation_pair(w: usize, line: Rep, degree: i32) -> Piece {
    let lower = rep_piece(w, line, degree);
    let upper = rep_piece(w, Rep::Regular, degree + 1);
    let mut p = lower.direct_sum(&upper);
    let n = p.dim();
    let mut cols = vec![SparseVec::new()];
    cols.extend(signed_augmentation(w, line));
    p.d = SparseMat::from_cols(n, cols);
    p
}

/// Shape of random sequences.
#[derive(Clone, Debug)]
pub struct SeqShape {
    pub max_weight: usize,
    pub min_weight: usize,
    pub max_summands: usize,
    pub degrees: (i32, i32),
    /// Regular representations are used only up to this weight.
    pub regular_up_to: usize,
    pub acyclic_only: bool,
}

impl Default for SeqShape {
    fn default() -> Self {
        SeqShape { max_weight: 4, min_weight: 1, max_summands: 2, degrees: (0, 2), regular_up_to: 2, acyclic_only: false }
    }
}

fn random_rep<R: Rng>(rng: &mut R, w: usize, shape: &SeqShape) -> Rep {
    let regular = w >= 2 && w <= shape.regular_up_to;
    match rng.gen_range(0..if regular { 3 } else { 2 }) {
        0 => Rep::Trivial,
        1 => Rep::Sign,
        _ => Rep::Regular,
    }
}

/// A random weight-`w` piece: a sum of cycles, contractible pairs and
/// augmentation pairs.
pub fn random_piece<R: Rng>(rng: &mut R, w: usize, shape: &SeqShape) -> Piece {
    let mut piece = Piece::zero(w);
    let count = rng.gen_range(0..=shape.max_summands);
    for _ in 0..count {
        let deg = rng.gen_range(shape.degrees.0..=shape.degrees.1);
        let rep = random_rep(rng, w, shape);
        let kind = if shape.acyclic_only { 1 } else { rng.gen_range(0..4) };
        let part = match kind {
            0 | 3 => rep_piece(w, rep, deg),
            1 => contractible_pair(w, rep, deg),
            _ if w >= 2 && w <= shape.regular_up_to && rep != Rep::Regular => augmentation_pair(w, rep, deg),
            _ => contractible_pair(w, rep, deg),
        };
        piece = piece.direct_sum(&part);
    }
    piece
}

pub fn random_seq<R: Rng>(rng: &mut R, shape: &SeqShape) -> SymSeq {
    let mut s = SymSeq::zero(shape.max_weight);
    for w in shape.min_weight..=shape.max_weight {
        s.pieces[w] = random_piece(rng, w, shape);
    }
    s
}

/// The inclusion `F → F ⊕ A ⊕ B` where `A` is acyclic in weights `< n` and
/// `B` is arbitrary in weights `≥ n`: a quasi-isomorphism below weight `n`.
pub fn random_quasi_iso_below<R: Rng>(rng: &mut R, shape: &SeqShape, n: usize) -> ChainMap {
    let f = random_seq(rng, shape);
    let mut g = f.clone();
    let acyclic = SeqShape { acyclic_only: true, ..shape.clone() };
    for w in shape.min_weight..=shape.max_weight {
        let extra = if w < n { random_piece(rng, w, &acyclic) } else { random_piece(rng, w, shape) };
        g.pieces[w] = g.pieces[w].direct_sum(&extra);
    }
    let maps = f
        .pieces
        .iter()
        .zip(&g.pieces)
        .map(|(a, b)| SparseMat::from_cols(b.dim(), (0..a.dim()).map(SparseVec::unit).collect()))
        .collect();
    ChainMap { source: f, target: g, maps }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twisted::{homology, is_quasi_iso_below, validate};

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let a: u64 = stream(42, 1, 0).gen();
        let b: u64 = stream(42, 1, 0).gen();
        let c: u64 = stream(42, 1, 1).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn building_blocks_are_valid() {
        for w in 1..=3 {
            for rep in [Rep::Trivial, Rep::Sign, Rep::Regular] {
                let mut s = SymSeq::zero(w);
                s.pieces[w] = contractible_pair(w, rep, 0);
                assert!(validate(&s).is_valid(), "{rep:?} {w}");
                assert!(homology(&s).is_zero());
            }
            for line in [Rep::Trivial, Rep::Sign] {
                let mut s = SymSeq::zero(w);
                s.pieces[w] = augmentation_pair(w, line, 1);
                assert!(validate(&s).is_valid(), "{line:?} {w}");
                let expected: usize = (1..=w).product::<usize>() - 1;
                assert_eq!(homology(&s).get(w, 2), expected);
            }
        }
    }

    #[test]
    fn random_sequences_and_maps() {
        for case in 0..20 {
            let mut rng = stream(7, 0, case);
            let shape = SeqShape { max_weight: 3, ..Default::default() };
            let s = random_seq(&mut rng, &shape);
            assert!(validate(&s).is_valid());
            let f = random_quasi_iso_below(&mut rng, &shape, 2);
            assert!(f.check().is_valid());
            assert!(is_quasi_iso_below(&f, 2));
        }
    }
}
