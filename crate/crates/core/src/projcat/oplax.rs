//! Presheaves on `Pr(FB)` versus symmetric oplax functors on `FB^op`, for
//! finite sets up to a weight bound.
//!
//! A presheaf sends an injection `f: [m] → [n]` to a map `X(n) → X(m)`. An
//! oplax functor carries the bijection actions plus maps
//! `μ: X(i ⊔ j) → X(i) × X(j)`. Elements of `X(k)` are `0..size(k)`.

use std::collections::HashMap;

use super::fb::{lift_injection, pr_fb_hom};
use crate::error::{Error, Result};
use crate::partitions::{all_injections, InjMap};
use crate::perm::{all_perms, Perm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePresheaf {
    pub max_weight: usize,
    pub sizes: Vec<usize>,
    /// `maps[f][x] = X(f)(x)`.
    pub maps: HashMap<InjMap, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OplaxFunctor {
    pub max_weight: usize,
    pub sizes: Vec<usize>,
    /// `actions[σ]` is `X(σ): X(k) → X(k)`, contravariant in `σ`.
    pub actions: HashMap<Perm, Vec<usize>>,
    /// `mu[(i, j)][x] = (X(ι₁)x, X(ι₂)x)`.
    pub mu: HashMap<(usize, usize), Vec<(usize, usize)>>,
}

fn first_inclusion(i: usize, j: usize) -> InjMap {
    InjMap { src_size: i, dst_size: i + j, images: (0..i).collect() }
}

fn second_inclusion(i: usize, j: usize) -> InjMap {
    InjMap { src_size: j, dst_size: i + j, images: (i..i + j).collect() }
}

impl FinitePresheaf {
    /// `I ↦ X^I` for a set with `x` points; tuples are encoded in base `x`,
    /// first coordinate most significant.
    pub fn product(x: usize, max_weight: usize) -> Self {
        let sizes: Vec<usize> = (0..=max_weight).map(|k| x.pow(k as u32)).collect();
        let decode = |code: usize, k: usize| -> Vec<usize> {
            let mut c = code;
            let mut t = vec![0; k];
            for slot in t.iter_mut().rev() {
                *slot = c % x;
                c /= x;
            }
            t
        };
        let encode = |t: &[usize]| t.iter().fold(0, |acc, &d| acc * x + d);
        let mut maps = HashMap::new();
        for n in 0..=max_weight {
            for m in 0..=n {
                for f in all_injections(m, n) {
                    let table = (0..sizes[n])
                        .map(|code| {
                            let t = decode(code, n);
                            encode(&f.images.iter().map(|&i| t[i]).collect::<Vec<_>>())
                        })
                        .collect();
                    maps.insert(f, table);
                }
            }
        }
        FinitePresheaf { max_weight, sizes, maps }
    }

    /// `I ↦ Inj(I, [x])`, the discrete configuration presheaf.
    pub fn configurations(x: usize, max_weight: usize) -> Self {
        let configs: Vec<Vec<InjMap>> = (0..=max_weight).map(|k| all_injections(k, x)).collect();
        let index: Vec<HashMap<&InjMap, usize>> =
            configs.iter().map(|c| c.iter().enumerate().map(|(i, g)| (g, i)).collect()).collect();
        let sizes = configs.iter().map(Vec::len).collect();
        let mut maps = HashMap::new();
        for n in 0..=max_weight {
            for m in 0..=n {
                for f in all_injections(m, n) {
                    let table = configs[n]
                        .iter()
                        .map(|g| index[m][&g.compose(&f).expect("composable")])
                        .collect();
                    maps.insert(f, table);
                }
            }
        }
        FinitePresheaf { max_weight, sizes, maps }
    }

    pub fn constant_singleton(max_weight: usize) -> Self {
        let mut maps = HashMap::new();
        for n in 0..=max_weight {
            for m in 0..=n {
                for f in all_injections(m, n) {
                    maps.insert(f, vec![0]);
                }
            }
        }
        FinitePresheaf { max_weight, sizes: vec![1; max_weight + 1], maps }
    }

    pub fn apply(&self, f: &InjMap, x: usize) -> usize {
        self.maps[f][x]
    }

    /// Identities and `X(g ∘ f) = X(f) ∘ X(g)`.
    pub fn validate(&self) -> Result<()> {
        for n in 0..=self.max_weight {
            let id = &self.maps[&InjMap::identity(n)];
            if id.iter().enumerate().any(|(i, &x)| i != x) {
                return Err(Error::Validation(format!("X(id_{n}) is not the identity")));
            }
            for m in 0..=n {
                for f in all_injections(m, n) {
                    for q in n..=self.max_weight {
                        for g in all_injections(n, q) {
                            let gf = g.compose(&f)?;
                            for x in 0..self.sizes[q] {
                                if self.apply(&gf, x) != self.apply(&f, self.apply(&g, x)) {
                                    return Err(Error::Validation(format!(
                                        "functoriality fails for {:?} after {:?}",
                                        g.images, f.images
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Restricts to bijections and extracts `μ` from the identity and symmetry
/// complementary morphisms.
pub fn projection_to_oplax(x: &FinitePresheaf) -> OplaxFunctor {
    let mut actions = HashMap::new();
    for k in 0..=x.max_weight {
        for p in all_perms(k) {
            actions.insert(p.clone(), x.maps[&InjMap::from_perm(&p)].clone());
        }
    }
    let mut mu = HashMap::new();
    for i in 0..=x.max_weight {
        for j in 0..=x.max_weight - i {
            let (a, b) = (first_inclusion(i, j), second_inclusion(i, j));
            let table = (0..x.sizes[i + j]).map(|e| (x.apply(&a, e), x.apply(&b, e))).collect();
            mu.insert((i, j), table);
        }
    }
    OplaxFunctor { max_weight: x.max_weight, sizes: x.sizes.clone(), actions, mu }
}

fn block_sum(p: &Perm, q: &Perm) -> Perm {
    Perm(p.0.iter().copied().chain(q.0.iter().map(|&x| x + p.len())).collect())
}

/// Symmetric oplax axioms: functoriality on bijections, naturality of `μ`,
/// coassociativity, counitality and symmetry. Errors name the failing square.
pub fn check_oplax(f: &OplaxFunctor) -> Result<()> {
    let w = f.max_weight;
    let fail = |what: String| Err(Error::Validation(what));
    if f.sizes[0] != 1 {
        return fail("unit square: value on the empty set is not a singleton".into());
    }
    for k in 0..=w {
        let perms = all_perms(k);
        for p in &perms {
            for q in &perms {
                // X(p ∘ q) = X(q) ∘ X(p).
                let pq = &f.actions[&p.compose(q)];
                let xp = &f.actions[p];
                let xq = &f.actions[q];
                if (0..f.sizes[k]).any(|e| pq[e] != xq[xp[e]]) {
                    return fail(format!("functoriality square fails for {:?}, {:?}", p.0, q.0));
                }
            }
        }
    }
    for i in 0..=w {
        for j in 0..=w - i {
            let mu = &f.mu[&(i, j)];
            // Naturality in bijections of both factors.
            for p in all_perms(i) {
                for q in all_perms(j) {
                    let pq = &f.actions[&block_sum(&p, &q)];
                    for e in 0..f.sizes[i + j] {
                        let (a, b) = mu[pq[e]];
                        let (a0, b0) = mu[e];
                        if (a, b) != (f.actions[&p][a0], f.actions[&q][b0]) {
                            return fail(format!("naturality square fails at ({i},{j}) for {:?} ⊔ {:?}", p.0, q.0));
                        }
                    }
                }
            }
            // Counit: μ_{i,0} and μ_{0,j} are the identity on the nonempty side.
            if j == 0 && mu.iter().enumerate().any(|(e, &(a, _))| a != e) {
                return fail(format!("right unit square fails at weight {i}"));
            }
            if i == 0 && mu.iter().enumerate().any(|(e, &(_, b))| b != e) {
                return fail(format!("left unit square fails at weight {j}"));
            }
            // Symmetry: μ_{j,i} = swap ∘ μ_{i,j} ∘ X(β) with β: i ⊔ j → j ⊔ i.
            let beta = Perm((0..i).map(|x| x + j).chain(0..j).collect());
            let xb = &f.actions[&beta];
            let mu_ji = &f.mu[&(j, i)];
            for e in 0..f.sizes[i + j] {
                let (a, b) = mu[xb[e]];
                if mu_ji[e] != (b, a) {
                    return fail(format!("symmetry square fails at ({i},{j})"));
                }
            }
            // Coassociativity against every third factor.
            for l in 0..=w - i - j {
                let left = &f.mu[&(i + j, l)];
                let right = &f.mu[&(i, j + l)];
                for e in 0..f.sizes[i + j + l] {
                    let (ab, c) = left[e];
                    let (a, b) = mu[ab];
                    let (a2, bc) = right[e];
                    let (b2, c2) = f.mu[&(j, l)][bc];
                    if (a, b, c) != (a2, b2, c2) {
                        return fail(format!("associativity square fails at ({i},{j},{l})"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// The presheaf `X̄(f) = π₁ ∘ μ ∘ F(f̂)`, checked independent of the chosen
/// representative of each class.
pub fn oplax_to_projection(f: &OplaxFunctor) -> Result<FinitePresheaf> {
    check_oplax(f)?;
    let w = f.max_weight;
    let mut maps = HashMap::new();
    for n in 0..=w {
        for m in 0..=n {
            let classes = pr_fb_hom(m, n)?;
            for class in &classes {
                let value = |bij: &[usize]| -> Vec<usize> {
                    let act = &f.actions[&Perm(bij.to_vec())];
                    let mu = &f.mu[&(m, n - m)];
                    (0..f.sizes[n]).map(|e| mu[act[e]].0).collect()
                };
                let first = value(&class.representative.bijection);
                for other in &class.class_members {
                    if value(&other.bijection) != first {
                        return Err(Error::Validation(format!(
                            "value on the class of {:?} depends on the representative",
                            class.representative.bijection
                        )));
                    }
                }
                maps.insert(class.representative.restrict(), first);
            }
        }
    }
    // Every injection has its lift inside exactly one class.
    for n in 0..=w {
        for m in 0..=n {
            for i in all_injections(m, n) {
                if !maps.contains_key(&i) {
                    return Err(Error::Validation(format!("no class restricts to {:?}", i.images)));
                }
                debug_assert_eq!(lift_injection(&i).restrict(), i);
            }
        }
    }
    Ok(FinitePresheaf { max_weight: w, sizes: f.sizes.clone(), maps })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_presheaf_round_trip() {
        let x = FinitePresheaf::product(3, 3);
        x.validate().unwrap();
        let f = projection_to_oplax(&x);
        check_oplax(&f).unwrap();
        // μ is the pair of coordinate projections.
        let mu = &f.mu[&(1, 2)];
        assert_eq!(mu[2 * 9 + 3], (2, 3));
        assert_eq!(oplax_to_projection(&f).unwrap(), x);
    }

    #[test]
    fn configuration_round_trip() {
        for pts in 0..=3 {
            let x = FinitePresheaf::configurations(pts, 3);
            x.validate().unwrap();
            let back = oplax_to_projection(&projection_to_oplax(&x)).unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn singleton_forced() {
        let x = FinitePresheaf::constant_singleton(3);
        let f = projection_to_oplax(&x);
        assert!(f.mu.values().all(|m| m == &vec![(0, 0)]));
        assert_eq!(oplax_to_projection(&f).unwrap(), x);
    }

    #[test]
    fn broken_symmetry_is_named() {
        let x = FinitePresheaf::product(2, 2);
        let mut f = projection_to_oplax(&x);
        let mu = f.mu.get_mut(&(1, 1)).unwrap();
        mu[1] = (1, 0);
        let err = check_oplax(&f).unwrap_err().to_string();
        assert!(err.contains("square"), "{err}");
    }
}
