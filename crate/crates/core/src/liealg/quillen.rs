//! The Quillen complex `Lie(K̄[-1])` of a cocommutative coalgebra and the
//! duality maps `η: K → CE(Q(K))` and `ε: Q(CE(L)) → L`.
//!
//! On a generator, `∂(s⁻¹k) = -s⁻¹dk + Σ (-1)^{|k'|+1} [s⁻¹k', s⁻¹k'']`,
//! summing over the reduced diagonal with one representative per symmetric
//! pair: the block holding the least point goes on the left.

use num_traits::One;

use super::ce::CeComplex;
use super::free::{add_term, bracket_words, free_lie_with, FreeLie, LieElem, Letter};
use super::{TwistedCoalg, TwistedLie};
use crate::error::{Error, Result};
use crate::linalg::{q, sign, SparseMat, SparseVec, VecBuilder, Q};
use crate::perm::{all_subsets, full_mask, relative_mask, set_partitions};
use crate::twisted::day::SymWord;
use crate::twisted::{shift, ChainMap};

/// `Q(K)` through weight `w`, with the square-zero assertion.
pub fn quillen_complex(k: &TwistedCoalg, w: usize) -> Result<FreeLie> {
    let reduced = k.reduced();
    reduced.require(w)?;
    if k.seq.dim(0) != 1 {
        return Err(Error::arg("the coalgebra must be one-dimensional in weight 0"));
    }
    let gens = shift(&reduced.truncate(w)?, -1);
    let odd = |l: &Letter| gens.degree(l.weight(), l.label).rem_euclid(2) == 1;
    let gen_d = |n: usize, label: usize| -> LieElem {
        let mut out = LieElem::new();
        for (b, c) in gens.piece(n).d.col(label).iter() {
            add_term(&mut out, vec![Letter { mask: full_mask(n), label: *b }], c.clone());
        }
        let full = full_mask(n);
        for s in all_subsets(full) {
            if s & 1 == 0 || s == full {
                continue;
            }
            let t = full & !s;
            for ((a, b), c) in k.coproduct_component(n, s, &SparseVec::unit(label)) {
                let left = Letter { mask: s, label: a };
                let right = Letter { mask: t, label: b };
                let e = sign(reduced.degree(left.weight(), a) as i64 + 1) * c;
                for (x, word) in bracket_words(&[left], &[right], odd) {
                    add_term(&mut out, word, &e * q(x));
                }
            }
        }
        out
    };
    let f = free_lie_with(&gens, w, &gen_d)?;
    for (n, p) in f.lie.seq.pieces.iter().enumerate() {
        if !p.d.compose(&p.d).is_zero() {
            return Err(Error::SignConvention(format!("Quillen differential does not square to zero in weight {n}")));
        }
    }
    Ok(f)
}

/// Bracket length of each basis word of a free Lie algebra.
pub fn bracket_lengths(f: &FreeLie, n: usize) -> Vec<usize> {
    f.words[n].iter().map(Vec::len).collect()
}

/// Iterated reduced coproduct of `k ∈ K(n)` along an ordered list of blocks
/// covering `[n]`: a list of label tuples with coefficients.
fn iterated_coproduct(kc: &TwistedCoalg, n: usize, blocks: &[u32], k: usize) -> Vec<(Vec<usize>, Q)> {
    let mut terms: Vec<(Vec<usize>, Q, usize)> = vec![(Vec::new(), Q::one(), k)];
    let mut rest = full_mask(n);
    for &b in &blocks[..blocks.len() - 1] {
        let size = rest.count_ones() as usize;
        let rel = relative_mask(b, rest);
        let mut next = Vec::new();
        for (labels, c, x) in &terms {
            for ((a, y), e) in kc.coproduct_component(size, rel, &SparseVec::unit(*x)) {
                let mut l = labels.clone();
                l.push(a);
                next.push((l, c * e, y));
            }
        }
        terms = next;
        rest &= !b;
    }
    terms
        .into_iter()
        .map(|(mut l, c, x)| {
            l.push(x);
            (l, c)
        })
        .collect()
}

/// `η: K → CE(Q(K))`, sending `k` to the sum over its iterated reduced
/// coproducts of products of the letters `s s⁻¹ k_i`.
pub fn eta(kc: &TwistedCoalg, q: &FreeLie, ce: &CeComplex) -> Result<ChainMap> {
    let w = ce.max_weight().min(kc.max_weight());
    let mut maps = Vec::with_capacity(w + 1);
    for n in 0..=w {
        let mut cols = Vec::with_capacity(kc.seq.dim(n));
        for k in 0..kc.seq.dim(n) {
            if n == 0 {
                cols.push(SparseVec::unit(ce.lookup[0][&SymWord { blocks: vec![], labels: vec![] }]));
                continue;
            }
            let mut acc = VecBuilder::new();
            for part in set_partitions(full_mask(n)) {
                for (labels, c) in iterated_coproduct(kc, n, &part, k) {
                    let letters: Vec<usize> = part
                        .iter()
                        .zip(&labels)
                        .map(|(m, &a)| {
                            let size = m.count_ones() as usize;
                            q.lookup[size][&vec![Letter { mask: full_mask(size), label: a }]]
                        })
                        .collect();
                    let word = SymWord { blocks: part.clone(), labels: letters };
                    let idx = ce.lookup[n].get(&word).ok_or_else(|| Error::arg("CE(Q(K)) is truncated below the image of η"))?;
                    acc.add(*idx, c);
                }
            }
            cols.push(acc.finish());
        }
        maps.push(SparseMat::from_cols(ce.seq.dim(n), cols));
    }
    let mut source = kc.seq.truncate(w)?;
    source.max_weight = w;
    Ok(ChainMap { source, target: ce.seq.truncate(w)?, maps })
}

/// `ε: Q(CE(L)) → L`, the Lie map sending `s⁻¹(sx)` to `x` and every longer
/// word to zero.
pub fn epsilon(l: &TwistedLie, ce: &CeComplex, q: &FreeLie) -> Result<ChainMap> {
    let w = q.lie.max_weight().min(l.max_weight());
    let mut maps = Vec::with_capacity(w + 1);
    for n in 0..=w {
        let cols = q.words[n]
            .iter()
            .map(|word| {
                let mut acc: Option<(u32, SparseVec)> = None;
                for letter in word {
                    let size = letter.weight();
                    let ce_word = &ce.words[size][letter.label];
                    if ce_word.blocks.len() != 1 {
                        return SparseVec::new();
                    }
                    let x = SparseVec::unit(ce_word.labels[0]);
                    acc = Some(match acc {
                        None => (letter.mask, x),
                        Some((m, v)) => (m | letter.mask, l.bracket_blocks(m, &v, letter.mask, &x)),
                    });
                }
                acc.map(|(_, v)| v).unwrap_or_default()
            })
            .collect();
        maps.push(SparseMat::from_cols(l.seq.dim(n), cols));
    }
    Ok(ChainMap { source: q.lie.seq.truncate(w)?, target: l.seq.truncate(w)?, maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::ce::{ce_coalgebra, ce_complex, ce_map};
    use crate::liealg::free::free_lie;
    use crate::liealg::{check_lie_map, validate_lie};
    use crate::twisted::{homology, is_quasi_iso, Piece, SymSeq};

    #[test]
    fn primitive_coalgebra_has_no_bracket_terms() {
        let mut v = SymSeq::zero(3);
        v.pieces[1] = Piece::trivial(1, vec![1, 2]);
        let k = TwistedCoalg::primitive(&v).unwrap();
        let f = quillen_complex(&k, 3).unwrap();
        assert!(f.lie.seq.pieces.iter().all(|p| p.d.is_zero()));
        assert!(validate_lie(&f.lie).is_valid());
    }

    #[test]
    fn duality_for_a_free_lie_algebra() {
        for deg in [0, 1] {
            let l = free_lie(&SymSeq::generator(3, 1, deg), 3).unwrap().lie;
            let (ce, kc) = ce_coalgebra(&l).unwrap();
            let q = quillen_complex(&kc, 3).unwrap();
            assert!(validate_lie(&q.lie).is_valid());
            let e = epsilon(&l, &ce, &q).unwrap();
            assert!(check_lie_map(&e, &q.lie, &l).is_valid());
            assert!(is_quasi_iso(&e));
            let ce_q = ce_complex(&q.lie, None).unwrap();
            let h = eta(&kc, &q, &ce_q).unwrap();
            assert!(h.check().is_valid(), "{}", h.check());
            assert!(is_quasi_iso(&h));
            let back = ce_map(&e, &ce_q, &ce).unwrap();
            assert_eq!(back.compose(&h), ChainMap::identity(&ce.seq));
        }
    }

    #[test]
    fn quillen_of_primitive_matches_free_lie_homology() {
        let mut v = SymSeq::zero(3);
        v.pieces[1] = Piece::trivial(1, vec![1]);
        let k = TwistedCoalg::primitive(&v).unwrap();
        let f = quillen_complex(&k, 3).unwrap();
        let h = homology(&f.lie.seq);
        assert_eq!(h.weight_total(3), 2);
        let ce = ce_complex(&f.lie, None).unwrap();
        assert_eq!(homology(&ce.seq).weight_total(3), 0);
    }
}
