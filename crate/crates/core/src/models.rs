//! Configuration-space inputs and the arrangement-theoretic oracles they are
//! checked against.
//!
//! The oracles share no code with the Lie pipeline: chromatic polynomials are
//! computed by deletion–contraction on plain edge lists.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::caps::{caps, check};
use crate::error::{Error, Result};
use crate::liealg::free::free_lie;
use crate::liealg::{tensor_lie, GradedAlgebra, TwistedCoalg, TwistedLie};
use crate::linalg::{SparseMat, SparseVec};
use crate::partitions::{all_injections, pushforward, CollisionStructure, InjMap, Partition};
use crate::poly::Polynomial;
use crate::twisted::{Piece, SymSeq};

/// A Lie model for `Conf(R^n)`: `H_c(R^n) ⊗ Lie(g)` with `g` of degree `n - 1`
/// in weight 1. With `unshifted`, the algebra factor is the ground field and
/// the result is the free Lie algebra itself.
pub fn conf_lie_model(n: i32, w: usize, unshifted: bool) -> Result<TwistedLie> {
    if n < 2 {
        return Err(Error::Unsupported(format!("configuration models need dimension at least 2, got {n}")));
    }
    check("weight", w, caps().weight)?;
    let g = free_lie(&SymSeq::generator(w, 1, n - 1), w)?;
    let alg = if unshifted { GradedAlgebra::ground_field() } else { GradedAlgebra::compact_euclidean(n) };
    tensor_lie(&alg, &g.lie)
}

/// Degree-0 chains on configurations of `k` labeled points in an `m`-point
/// discrete space, split along subsets.
pub fn discrete_conf_coalgebra(m: usize, w: usize) -> Result<TwistedCoalg> {
    check("points", m, caps().points)?;
    // Weights above `m` have no configurations and stay zero.
    let basis: Vec<Vec<InjMap>> = (0..=w).map(|k| all_injections(k, m)).collect();
    let index: Vec<HashMap<Vec<usize>, usize>> =
        basis.iter().map(|b| b.iter().enumerate().map(|(i, f)| (f.images.clone(), i)).collect()).collect();
    let pieces = (0..=w)
        .map(|k| {
            let n = basis[k].len();
            // σ·g = g ∘ σ⁻¹ swaps two images.
            let transpositions = (0..k.saturating_sub(1))
                .map(|t| {
                    let cols = basis[k]
                        .iter()
                        .map(|f| {
                            let mut im = f.images.clone();
                            im.swap(t, t + 1);
                            SparseVec::unit(index[k][&im])
                        })
                        .collect();
                    SparseMat::from_cols(n, cols)
                })
                .collect();
            Piece { degrees: vec![0; n], d: SparseMat::zeros(n, n), transpositions }
        })
        .collect();
    let mut comults = BTreeMap::new();
    for i in 1..w {
        for j in 1..=w - i {
            let dj = basis[j].len();
            let cols = basis[i + j]
                .iter()
                .map(|f| {
                    let a = index[i][&f.images[..i]];
                    let b = index[j][&f.images[i..]];
                    SparseVec::unit(a * dj + b)
                })
                .collect();
            comults.insert((i, j), SparseMat::from_cols(basis[i].len() * dj, cols));
        }
    }
    Ok(TwistedCoalg { seq: SymSeq { max_weight: w, pieces }, comults })
}

/// A simple graph on `0..vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphSpec {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            if a >= vertices || b >= vertices {
                return Err(Error::arg(format!("edge ({a},{b}) leaves the vertex set")));
            }
            if a == b {
                return Err(Error::arg(format!("loop at vertex {a}")));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::arg(format!("repeated edge ({a},{b})")));
            }
        }
        Ok(GraphSpec { vertices, edges })
    }

    pub fn complete(v: usize) -> Self {
        let edges = (0..v).flat_map(|a| (a + 1..v).map(move |b| (a, b))).collect();
        GraphSpec { vertices: v, edges }
    }

    pub fn edgeless(v: usize) -> Self {
        GraphSpec { vertices: v, edges: Vec::new() }
    }
}

type EdgeSet = BTreeSet<(u8, u8)>;

fn normalized(v: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> (usize, EdgeSet) {
    (v, edges.into_iter().map(|(a, b)| (a.min(b) as u8, a.max(b) as u8)).collect())
}

fn falling_factorial(v: usize) -> Polynomial {
    (0..v as i64).fold(Polynomial::one(), |p, i| p.mul(&Polynomial::from_coeffs([(1, 1), (0, -i)])))
}

fn chromatic_rec(v: usize, edges: &EdgeSet, memo: &mut HashMap<(usize, EdgeSet), Polynomial>) -> Polynomial {
    if edges.is_empty() {
        return Polynomial::monomial(v as i32, 1);
    }
    if edges.len() == v * (v - 1) / 2 {
        return falling_factorial(v);
    }
    let key = (v, edges.clone());
    if let Some(p) = memo.get(&key) {
        return p.clone();
    }
    let &(a, b) = edges.iter().next_back().expect("nonempty");
    let mut deleted = edges.clone();
    deleted.remove(&(a, b));
    // Contract b into a and close the gap left by b.
    let relabel = |x: u8| -> usize {
        let x = if x == b { a } else { x };
        if x > b { x as usize - 1 } else { x as usize }
    };
    let (_, contracted) = normalized(
        v - 1,
        deleted.iter().map(|&(x, y)| (relabel(x), relabel(y))).filter(|(x, y)| x != y),
    );
    let p = chromatic_rec(v, &deleted, memo).sub(&chromatic_rec(v - 1, &contracted, memo));
    memo.insert(key, p.clone());
    p
}

pub fn chromatic_polynomial(g: &GraphSpec) -> Result<Polynomial> {
    check("graph vertices", g.vertices, caps().graph)?;
    let (v, edges) = normalized(g.vertices, g.edges.iter().copied());
    Ok(chromatic_rec(v, &edges, &mut HashMap::new()))
}

/// Proper colorings with `colors` colors, by enumeration.
pub fn count_colorings(g: &GraphSpec, colors: usize) -> u64 {
    let mut count = 0;
    let total = colors.pow(g.vertices as u32);
    for code in 0..total {
        let mut c = vec![0; g.vertices];
        let mut x = code;
        for slot in c.iter_mut() {
            *slot = x % colors;
            x /= colors;
        }
        if g.edges.iter().all(|&(a, b)| c[a] != c[b]) {
            count += 1;
        }
    }
    count
}

/// `∏_{i<k} (1 + i t^{n-1})`.
pub fn braid_poincare_product(k: usize, n: i32) -> Polynomial {
    (1..k as i64).fold(Polynomial::one(), |p, i| p.mul(&Polynomial::from_coeffs([(0, 1), (n - 1, i)])))
}

/// Poincaré polynomial of `Conf_k(R^n)` from the characteristic polynomial of
/// the braid arrangement, cross-checked against the product formula.
pub fn braid_poincare_oracle(k: usize, n: i32) -> Result<Polynomial> {
    check("braid configuration size", k, caps().braid)?;
    if n < 2 {
        return Err(Error::Unsupported(format!("configuration oracle needs dimension at least 2, got {n}")));
    }
    let chi = chromatic_polynomial(&GraphSpec::complete(k))?;
    let mut p = Polynomial::zero();
    for (j, c) in chi.terms() {
        let rank = k as i32 - j;
        p.add_term(rank * (n - 1), if rank % 2 == 0 { c } else { -c });
    }
    let product = braid_poincare_product(k, n);
    if p != product {
        return Err(Error::Validation(format!("braid oracle paths disagree: {p} vs {product}")));
    }
    Ok(p)
}

/// Checks `π_f⁻¹(Δ_S) = Δ_{f_*S}` at every point of `X^J` for an
/// `x_size`-point set `X`, where `f: I → J` and `π_f(y) = y ∘ f`.
pub fn delta_pullback_check(f: &InjMap, s: &CollisionStructure, x_size: usize) -> Result<bool> {
    let cap = caps().points_check;
    check("point set", x_size, cap)?;
    check("ground set", f.dst_size, cap)?;
    if s.ground_size() != f.src_size {
        return Err(Error::arg("collision structure does not live on the source of the map"));
    }
    let pushed = pushforward(f, s)?;
    let j = f.dst_size;
    for code in 0..x_size.pow(j as u32) {
        let mut y = vec![0; j];
        let mut x = code;
        for slot in y.iter_mut() {
            *slot = x % x_size;
            x /= x_size;
        }
        let pulled: Vec<usize> = f.images.iter().map(|&i| y[i]).collect();
        let lhs = s.contains(&Partition::from_labels(&pulled))?;
        let rhs = pushed.contains(&Partition::from_labels(&y))?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::ce::ce_complex;
    use crate::liealg::quillen::quillen_complex;
    use crate::liealg::{abelian_quotient, validate_coalg, validate_lie};
    use crate::partitions::all_injections;
    use crate::projcat::oplax::FinitePresheaf;
    use crate::twisted::homology;

    #[test]
    fn conf_model_shape() {
        let l = conf_lie_model(2, 4, false).unwrap();
        assert_eq!(l.seq.dim(1), 1);
        assert_eq!(l.seq.degree(1, 0), -1);
        assert_eq!(l.seq.dim(3), 2);
        assert!(l.seq.piece(3).degrees.iter().all(|&d| d == 1));
        assert!(validate_lie(&l).is_valid());
        assert!(l.brackets.values().all(SparseMat::is_zero));
        assert!(matches!(conf_lie_model(1, 3, false), Err(Error::Unsupported(_))));
        let (q, _) = abelian_quotient(&l).unwrap();
        assert_eq!(q.seq.dim(1), 1);
    }

    #[test]
    fn conf_model_matches_the_braid_oracle() {
        for n in [2, 3] {
            let l = conf_lie_model(n, 4, false).unwrap();
            let h = homology(&ce_complex(&l, None).unwrap().seq);
            for k in 1..=4 {
                assert_eq!(h.poincare(k), braid_poincare_oracle(k, n).unwrap(), "k={k} n={n}");
            }
            let h2 = h.poincare(2);
            assert_eq!(h2, Polynomial::from_coeffs([(0, 1), (n - 1, 1)]));
        }
    }

    #[test]
    fn discrete_configurations() {
        let k = discrete_conf_coalgebra(3, 3).unwrap();
        assert!(validate_coalg(&k).is_valid(), "{}", validate_coalg(&k));
        let presheaf = FinitePresheaf::configurations(3, 3);
        for w in 0..=3 {
            assert_eq!(k.seq.dim(w), all_injections(w, 3).len());
            assert_eq!(k.seq.dim(w), presheaf.sizes[w]);
        }
        let q = quillen_complex(&k, 3).unwrap();
        let h = homology(&ce_complex(&q.lie, None).unwrap().seq);
        for (w, expected) in [1usize, 3, 6, 6].into_iter().enumerate() {
            assert_eq!(h.get(w, 0), expected);
            assert_eq!(h.weight_total(w), expected);
        }
    }

    #[test]
    fn chromatic_small_graphs() {
        assert_eq!(chromatic_polynomial(&GraphSpec::edgeless(3)).unwrap(), Polynomial::monomial(3, 1));
        let edge = GraphSpec::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(chromatic_polynomial(&edge).unwrap(), Polynomial::from_coeffs([(2, 1), (1, -1)]));
        assert_eq!(
            chromatic_polynomial(&GraphSpec::complete(3)).unwrap(),
            Polynomial::from_coeffs([(3, 1), (2, -3), (1, 2)])
        );
        let path = GraphSpec::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let p = chromatic_polynomial(&path).unwrap();
        for c in 0..5 {
            assert_eq!(p.eval(c as i64), count_colorings(&path, c) as i64);
        }
        assert!(GraphSpec::new(2, vec![(0, 0)]).is_err());
        assert!(GraphSpec::new(2, vec![(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn braid_oracle_values() {
        assert_eq!(braid_poincare_oracle(1, 2).unwrap(), Polynomial::one());
        assert_eq!(braid_poincare_oracle(3, 2).unwrap(), Polynomial::from_coeffs([(0, 1), (1, 3), (2, 2)]));
        assert_eq!(
            braid_poincare_oracle(4, 2).unwrap(),
            Polynomial::from_coeffs([(0, 1), (1, 6), (2, 11), (3, 6)])
        );
        assert!(matches!(braid_poincare_oracle(9, 2), Err(Error::Size { .. })));
    }

    #[test]
    fn delta_pullback_small_cases() {
        let s = CollisionStructure::new(2, vec![Partition::from_labels(&[0, 0])]).unwrap();
        assert!(delta_pullback_check(&InjMap::identity(2), &s, 3).unwrap());
        assert!(delta_pullback_check(&InjMap::new(3, vec![2, 0]).unwrap(), &s, 3).unwrap());
        assert!(delta_pullback_check(&InjMap::new(4, vec![1, 3]).unwrap(), &CollisionStructure::trivial(2), 2).unwrap());
    }
}
