//! `Pr(FB)` and its identification with finite sets and injections.
//!
//! A complementary morphism `m → n` is a bijection `f: [m] ⊔ [n-m] → [n]`,
//! stored as its image list of length `n` (first `m` entries on `[m]`).

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use super::{classes_from, PrHomOf};
use crate::caps::{self, caps};
use crate::error::{Error, Result};
use crate::partitions::{all_injections, InjMap};
use crate::perm::{all_perms, Perm};

/// Complementary morphism in FB: source size and the bijection.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FbMorphism {
    pub source: usize,
    pub bijection: Vec<usize>,
}

impl FbMorphism {
    pub fn target(&self) -> usize {
        self.bijection.len()
    }

    pub fn complement_size(&self) -> usize {
        self.bijection.len() - self.source
    }

    /// `f ∘ (first ⊔ D)`: `self` after `first`.
    pub fn after(&self, first: &FbMorphism) -> FbMorphism {
        assert_eq!(first.target(), self.source);
        let (m, d1) = (first.source, first.complement_size());
        let n = first.target();
        let mut out = Vec::with_capacity(self.target());
        for x in 0..m + d1 {
            out.push(self.bijection[first.bijection[x]]);
        }
        for y in n..self.target() {
            out.push(self.bijection[y]);
        }
        FbMorphism { source: m, bijection: out }
    }

    pub fn restrict(&self) -> InjMap {
        InjMap { src_size: self.source, dst_size: self.target(), images: self.bijection[..self.source].to_vec() }
    }
}

pub type FbClass = PrHomOf<FbMorphism>;

/// Classes of complementary morphisms `m → n` in FB. The complement is forced
/// to have `n - m` elements and every bijection of it is an elementary
/// equivalence.
pub fn pr_fb_hom(m: usize, n: usize) -> Result<Vec<FbClass>> {
    caps::check("FB object", n, caps().fb)?;
    caps::check("FB object", m, caps().fb)?;
    if m > n {
        return Ok(Vec::new());
    }
    let d = n - m;
    let members: Vec<FbMorphism> =
        all_perms(n).into_iter().map(|p| FbMorphism { source: m, bijection: p.0 }).collect();
    let index: HashMap<&[usize], usize> = members.iter().enumerate().map(|(i, f)| (f.bijection.as_slice(), i)).collect();
    let mut uf = UnionFind::<usize>::new(members.len());
    let complements = all_perms(d);
    for (i, f) in members.iter().enumerate() {
        // f ~ f' whenever f = f' ∘ (id ⊔ g); equivalently f' = f ∘ (id ⊔ g⁻¹).
        for g in &complements {
            let lifted: Vec<usize> = (0..n).map(|x| if x < m { x } else { m + g.apply(x - m) }).collect();
            let f2: Vec<usize> = lifted.iter().map(|&x| f.bijection[x]).collect();
            uf.union(i, index[f2.as_slice()]);
        }
    }
    Ok(classes_from(members, |i| uf.find(i)))
}

/// All injections `[m] → [n]`.
pub fn fi_hom(m: usize, n: usize) -> Result<Vec<InjMap>> {
    caps::check("FI object", n, caps().fb)?;
    Ok(all_injections(m, n))
}

/// The standard lift of an injection: `[m] ⊔ ([n] \ im i) ≅ [n]`, complement in
/// increasing order.
pub fn lift_injection(i: &InjMap) -> FbMorphism {
    let img = i.image_mask();
    let mut bij = i.images.clone();
    bij.extend((0..i.dst_size).filter(|x| img & (1 << x) == 0));
    FbMorphism { source: i.src_size, bijection: bij }
}

/// The two mutually inverse maps between `Pr(FB)(m, n)` and `FI(m, n)`.
pub struct FbCorrespondence {
    pub classes: Vec<FbClass>,
    pub injections: Vec<InjMap>,
    /// `to_fi[c]` is the injection index of class `c`.
    pub to_fi: Vec<usize>,
    /// `to_pr[i]` is the class index of injection `i`.
    pub to_pr: Vec<usize>,
}

pub fn fb_correspondence(m: usize, n: usize) -> Result<FbCorrespondence> {
    let classes = pr_fb_hom(m, n)?;
    let injections = fi_hom(m, n)?;
    let inj_index: HashMap<&InjMap, usize> = injections.iter().enumerate().map(|(k, i)| (i, k)).collect();
    let mut to_fi = Vec::with_capacity(classes.len());
    for c in &classes {
        let images: Vec<usize> = c.class_members.iter().map(|f| inj_index[&f.restrict()]).collect();
        if images.iter().any(|&x| x != images[0]) {
            return Err(Error::Validation(format!("restriction is not constant on the class of {:?}", c.representative)));
        }
        to_fi.push(images[0]);
    }
    let member_class: HashMap<&FbMorphism, usize> = classes
        .iter()
        .enumerate()
        .flat_map(|(k, c)| c.class_members.iter().map(move |f| (f, k)))
        .collect();
    let to_pr: Vec<usize> = injections.iter().map(|i| member_class[&lift_injection(i)]).collect();
    for (k, &i) in to_fi.iter().enumerate() {
        if to_pr[i] != k {
            return Err(Error::Validation("correspondence maps are not mutually inverse".into()));
        }
    }
    for (i, &k) in to_pr.iter().enumerate() {
        if to_fi[k] != i {
            return Err(Error::Validation("correspondence maps are not mutually inverse".into()));
        }
    }
    Ok(FbCorrespondence { classes, injections, to_fi, to_pr })
}

/// Checks that restriction to the source turns composition of complementary
/// morphisms into composition of injections, for the given representatives.
pub fn composition_preserved(first: &FbMorphism, second: &FbMorphism) -> bool {
    let composite = second.after(first).restrict();
    let expected = second.restrict().compose(&first.restrict()).expect("composable");
    composite == expected
}

/// Checks composition at the level of classes: the class of the composite of
/// the lifts of `i` and `j` is the lift of `j ∘ i`.
pub fn class_composition_preserved(i: &InjMap, j: &InjMap) -> Result<bool> {
    let composite = lift_injection(j).after(&lift_injection(i));
    let target = lift_injection(&j.compose(i)?);
    let classes = pr_fb_hom(i.src_size, j.dst_size)?;
    let find = |f: &FbMorphism| classes.iter().position(|c| c.class_members.contains(f));
    Ok(find(&composite).is_some() && find(&composite) == find(&target))
}

/// Random permutation helper shared by the acceptance driver.
pub fn perm_from_lehmer(n: usize, mut code: u64) -> Perm {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for k in (1..=n).rev() {
        let idx = (code % k as u64) as usize;
        code /= k as u64;
        out.push(pool.remove(idx));
    }
    Perm(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        assert_eq!(pr_fb_hom(2, 4).unwrap().len(), 12);
        assert_eq!(pr_fb_hom(0, 3).unwrap().len(), 1);
        assert_eq!(pr_fb_hom(3, 2).unwrap().len(), 0);
        for n in 0..=5 {
            for m in 0..=n {
                let expect: usize = (n - m + 1..=n).product();
                assert_eq!(pr_fb_hom(m, n).unwrap().len(), expect);
            }
        }
    }

    #[test]
    fn correspondence_is_bijective() {
        for (m, n) in [(0, 2), (1, 3), (2, 4), (3, 3)] {
            let c = fb_correspondence(m, n).unwrap();
            assert_eq!(c.classes.len(), c.injections.len());
        }
    }

    #[test]
    fn composition_on_all_small_pairs() {
        for i in all_injections(1, 2) {
            for j in all_injections(2, 4) {
                assert!(class_composition_preserved(&i, &j).unwrap());
                assert!(composition_preserved(&lift_injection(&i), &lift_injection(&j)));
            }
        }
    }

    #[test]
    fn lehmer_codes_cover_all_perms() {
        let mut seen: Vec<Perm> = (0..24).map(|c| perm_from_lehmer(4, c)).collect();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), 24);
    }
}
