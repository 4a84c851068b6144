//! The Chevalley–Eilenberg complex `Sym(L[1])` of a twisted Lie algebra,
//! on the orbit basis: a word is a set partition of the ground set with one
//! basis element of `L[1]` per block.
//!
//! `d(sx) = -s dx` and `d(sx · sy) = (-1)^{|x|} s[x, y]`, extended as a
//! coderivation.

use std::collections::{BTreeMap, HashMap};

use num_traits::One;

use super::{TwistedCoalg, TwistedLie};
use crate::error::{Error, Result};
use crate::linalg::{sign, SparseMat, SparseVec, VecBuilder, Q};
use crate::partitions::cartesian;
use crate::perm::{full_mask, relative_mask};
use crate::twisted::day::{canonicalize, orbit_sym, SymWord};
use crate::twisted::{shift, ChainMap, SymSeq};

#[derive(Clone, Debug)]
pub struct CeComplex {
    pub seq: SymSeq,
    /// `L[1]`, whose degrees are the letter degrees.
    pub letters: SymSeq,
    pub words: Vec<Vec<SymWord>>,
    pub lookup: Vec<HashMap<SymWord, usize>>,
}

impl CeComplex {
    pub fn max_weight(&self) -> usize {
        self.seq.max_weight
    }

    /// Number of letters of each basis word.
    pub fn lengths(&self, k: usize) -> Vec<usize> {
        self.words[k].iter().map(|w| w.blocks.len()).collect()
    }

    fn letter_degree(&self, block: u32, label: usize) -> i32 {
        self.letters.degree(block.count_ones() as usize, label)
    }

    /// Index of a word given as unsorted `(block, label)` letters, with the
    /// Koszul sign of sorting.
    pub fn locate(&self, k: usize, letters: &[(u32, usize)]) -> Option<(usize, bool)> {
        let items = letters.iter().map(|&(m, a)| (m, a, self.letter_degree(m, a))).collect();
        let (w, odd) = canonicalize(items);
        self.lookup[k].get(&w).map(|&i| (i, odd))
    }
}

/// `CE(L)` through the weights of `L`, keeping degrees `≤ max_degree` when
/// given (a subcomplex).
pub fn ce_complex(l: &TwistedLie, max_degree: Option<i32>) -> Result<CeComplex> {
    if !l.is_reduced() {
        return Err(Error::arg("the Chevalley–Eilenberg complex needs a reduced Lie algebra"));
    }
    let w = l.max_weight();
    let letters = shift(&l.seq, 1);
    let sym = orbit_sym(&letters, w, max_degree)?;
    let mut ce = CeComplex { seq: sym.seq, letters, words: sym.words, lookup: sym.lookup };
    for k in 0..=w {
        let extra: Vec<SparseVec> =
            (0..ce.words[k].len()).map(|i| bracket_part(l, &ce, k, &ce.words[k][i])).collect::<Result<_>>()?;
        let n = ce.words[k].len();
        let d = ce.seq.pieces[k].d.add(&SparseMat::from_cols(n, extra));
        ce.seq.pieces[k].d = d;
    }
    for k in 0..=w {
        let d = &ce.seq.pieces[k].d;
        if !d.compose(d).is_zero() {
            return Err(Error::SignConvention(format!("Chevalley–Eilenberg differential does not square to zero in weight {k}")));
        }
    }
    Ok(ce)
}

fn bracket_part(l: &TwistedLie, ce: &CeComplex, k: usize, word: &SymWord) -> Result<SparseVec> {
    let n = word.blocks.len();
    let deg: Vec<i32> = word.blocks.iter().zip(&word.labels).map(|(&m, &a)| ce.letter_degree(m, a)).collect();
    let mut acc = VecBuilder::new();
    for a in 0..n {
        for b in a + 1..n {
            // Koszul sign of moving letters a and b to the front.
            let mut e: i32 = (0..a).map(|c| deg[a] * deg[c]).sum();
            e += (0..b).filter(|&c| c != a).map(|c| deg[b] * deg[c]).sum::<i32>();
            let x_deg = deg[a] - 1;
            let s = sign((e + x_deg) as i64);
            let (ma, mb) = (word.blocks[a], word.blocks[b]);
            let v = l.bracket_blocks(ma, &SparseVec::unit(word.labels[a]), mb, &SparseVec::unit(word.labels[b]));
            let rest: Vec<(u32, usize)> =
                (0..n).filter(|&c| c != a && c != b).map(|c| (word.blocks[c], word.labels[c])).collect();
            for (z, c) in v.iter() {
                let mut letters = vec![(ma | mb, *z)];
                letters.extend(&rest);
                let (idx, odd) = ce
                    .locate(k, &letters)
                    .ok_or_else(|| Error::SignConvention("bracket term leaves the truncated complex".into()))?;
                acc.add(idx, if odd { -(c * &s) } else { c * &s });
            }
        }
    }
    Ok(acc.finish())
}

/// `CE(L)` with its shuffle coproduct.
pub fn ce_coalgebra(l: &TwistedLie) -> Result<(CeComplex, TwistedCoalg)> {
    let ce = ce_complex(l, None)?;
    let w = ce.max_weight();
    let mut comults = BTreeMap::new();
    for i in 1..w {
        for j in 1..=w - i {
            let n = i + j;
            let left = full_mask(i);
            let right = full_mask(n) & !left;
            let dj = ce.words[j].len();
            let cols = ce.words[n]
                .iter()
                .map(|word| {
                    let mut ls = Vec::new();
                    let mut rs = Vec::new();
                    let mut odd = false;
                    for (&m, &a) in word.blocks.iter().zip(&word.labels) {
                        let d = ce.letter_degree(m, a);
                        if m & !left == 0 {
                            // Moves in front of every right letter seen so far.
                            let passed: i32 = rs.iter().map(|&(_, _, e)| e).sum();
                            odd ^= (d * passed).rem_euclid(2) == 1;
                            ls.push((m, a, d));
                        } else if m & !right == 0 {
                            rs.push((relative_mask(m, right), a, d));
                        } else {
                            return SparseVec::new();
                        }
                    }
                    if ls.is_empty() || rs.is_empty() {
                        return SparseVec::new();
                    }
                    let lw = SymWord { blocks: ls.iter().map(|x| x.0).collect(), labels: ls.iter().map(|x| x.1).collect() };
                    let rw = SymWord { blocks: rs.iter().map(|x| x.0).collect(), labels: rs.iter().map(|x| x.1).collect() };
                    let row = ce.lookup[i][&lw] * dj + ce.lookup[j][&rw];
                    SparseVec::single(row, if odd { -Q::one() } else { Q::one() })
                })
                .collect();
            comults.insert((i, j), SparseMat::from_cols(ce.words[i].len() * dj, cols));
        }
    }
    let coalg = TwistedCoalg { seq: ce.seq.clone(), comults };
    Ok((ce, coalg))
}

/// `CE(f)` for a map of Lie algebras: `f` applied to every letter.
pub fn ce_map(f: &ChainMap, src: &CeComplex, tgt: &CeComplex) -> Result<ChainMap> {
    let w = src.max_weight().min(tgt.max_weight());
    let mut maps = Vec::with_capacity(w + 1);
    for k in 0..=w {
        let mut cols = Vec::with_capacity(src.words[k].len());
        for word in &src.words[k] {
            let images: Vec<Vec<(usize, Q)>> = word
                .blocks
                .iter()
                .zip(&word.labels)
                .map(|(m, &a)| f.maps[m.count_ones() as usize].col(a).iter().cloned().collect())
                .collect();
            let dims: Vec<usize> = images.iter().map(Vec::len).collect();
            let mut acc = VecBuilder::new();
            for choice in cartesian(&dims) {
                let mut c = Q::one();
                let mut labels = Vec::with_capacity(choice.len());
                for (img, &t) in images.iter().zip(&choice) {
                    c *= &img[t].1;
                    labels.push(img[t].0);
                }
                let target = SymWord { blocks: word.blocks.clone(), labels };
                let idx = tgt.lookup[k]
                    .get(&target)
                    .ok_or_else(|| Error::arg("target complex is truncated below the image"))?;
                acc.add(*idx, c);
            }
            cols.push(acc.finish());
        }
        maps.push(SparseMat::from_cols(tgt.words[k].len(), cols));
    }
    let mut target = tgt.seq.clone();
    target.max_weight = w;
    target.pieces.truncate(w + 1);
    let mut source = src.seq.clone();
    source.max_weight = w;
    source.pieces.truncate(w + 1);
    Ok(ChainMap { source, target, maps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::free::free_lie;
    use crate::liealg::{tensor_lie, validate_coalg, GradedAlgebra};
    use crate::twisted::{homology, validate, Piece};

    #[test]
    fn abelian_ce_is_the_symmetric_algebra() {
        let mut v = SymSeq::zero(3);
        v.pieces[1] = Piece::trivial(1, vec![0]);
        let ce = ce_complex(&TwistedLie::abelian(v), None).unwrap();
        // One letter of degree 1 per point: only the discrete partition, sign line.
        assert_eq!(ce.seq.dim(3), 1);
        assert_eq!(ce.seq.piece(2).transpositions[0].get(0, 0), -Q::one());
    }

    #[test]
    fn free_lie_on_one_class_is_acyclic_above_weight_one() {
        for deg in [-1, 0, 1] {
            let f = free_lie(&SymSeq::generator(4, 1, deg), 4).unwrap();
            let ce = ce_complex(&f.lie, None).unwrap();
            assert!(validate(&ce.seq).is_valid());
            let h = homology(&ce.seq);
            assert_eq!(h.weight_total(0), 1);
            assert_eq!(h.weight_total(1), 1);
            for k in 2..=4 {
                assert_eq!(h.weight_total(k), 0, "degree {deg} weight {k}");
            }
        }
    }

    #[test]
    fn coalgebra_axioms() {
        let f = free_lie(&SymSeq::generator(4, 1, 1), 4).unwrap();
        let (_, k) = ce_coalgebra(&f.lie).unwrap();
        assert!(validate_coalg(&k).is_valid(), "{}", validate_coalg(&k));
        let t = tensor_lie(&GradedAlgebra::torus(), &free_lie(&SymSeq::generator(3, 1, 0), 3).unwrap().lie).unwrap();
        let (_, k) = ce_coalgebra(&t).unwrap();
        assert!(validate_coalg(&k).is_valid(), "{}", validate_coalg(&k));
    }

    #[test]
    fn truncation_is_a_subcomplex() {
        let f = free_lie(&SymSeq::generator(4, 1, 0), 4).unwrap();
        let full = ce_complex(&f.lie, None).unwrap();
        let low = ce_complex(&f.lie, Some(2)).unwrap();
        assert!(low.seq.total_dim() < full.seq.total_dim());
        assert!(validate(&low.seq).is_valid());
    }

    #[test]
    fn maps_are_chain_maps() {
        let f = free_lie(&SymSeq::generator(3, 1, 0), 3).unwrap();
        let ce = ce_complex(&f.lie, None).unwrap();
        let id = ChainMap::identity(&f.lie.seq);
        let m = ce_map(&id, &ce, &ce).unwrap();
        assert_eq!(m, ChainMap::identity(&ce.seq));
    }
}
