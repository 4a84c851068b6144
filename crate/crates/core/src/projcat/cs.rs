//! `Pr(CSB)` and injective collision maps.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use super::fb::FbMorphism;
use super::{classes_from, PrHomOf};
use crate::caps::{self, caps};
use crate::error::{Error, Result};
use crate::partitions::{
    all_collision_structures, all_injections, cs_from_complex, cs_from_graph, disjoint_union, is_cs_map, pushforward,
    CollisionStructure, InjMap,
};
use crate::perm::{all_perms, bits};

/// A complementary morphism `S → T` in CSB.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CsMorphism {
    pub complement: CollisionStructure,
    pub bijection: Vec<usize>,
}

impl CsMorphism {
    pub fn source_size(&self) -> usize {
        self.bijection.len() - self.complement.ground_size()
    }

    pub fn underlying(&self) -> FbMorphism {
        FbMorphism { source: self.source_size(), bijection: self.bijection.clone() }
    }

    pub fn restrict(&self) -> InjMap {
        self.underlying().restrict()
    }

    /// `self ∘ (first ⊔ D)`.
    pub fn after(&self, first: &CsMorphism) -> CsMorphism {
        CsMorphism {
            complement: disjoint_union(&first.complement, &self.complement),
            bijection: self.underlying().after(&first.underlying()).bijection,
        }
    }
}

pub type CsClass = PrHomOf<CsMorphism>;

fn bij_map(b: &[usize]) -> InjMap {
    InjMap { src_size: b.len(), dst_size: b.len(), images: b.to_vec() }
}

/// Classes of complementary morphisms `S → T` whose complements range over
/// `universe(d)`, the allowed collision structures on `d = |T| - |S|` points.
pub fn pr_cs_hom_in(
    s: &CollisionStructure,
    t: &CollisionStructure,
    universe: &[CollisionStructure],
) -> Result<Vec<CsClass>> {
    let (m, n) = (s.ground_size(), t.ground_size());
    if m > n {
        return Ok(Vec::new());
    }
    let d = n - m;
    let perms = all_perms(n);
    let mut members = Vec::new();
    for u in universe {
        if u.ground_size() != d {
            return Err(Error::arg("complement universe has the wrong ground size"));
        }
        let src = disjoint_union(s, u);
        for p in &perms {
            if is_cs_map(&bij_map(&p.0), &src, t)? {
                members.push(CsMorphism { complement: u.clone(), bijection: p.0.clone() });
            }
        }
    }
    let index: HashMap<&CsMorphism, usize> = members.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut uf = UnionFind::<usize>::new(members.len());
    let dperms = all_perms(d);
    for (i, x) in members.iter().enumerate() {
        for g in &dperms {
            // Elementary equivalence g: U → U' with f = f' ∘ (id ⊔ g).
            let gu = pushforward(&InjMap::from_perm(g), &x.complement)?;
            let ginv = g.inverse();
            let f2: Vec<usize> = (0..n)
                .map(|y| if y < m { x.bijection[y] } else { x.bijection[m + ginv.apply(y - m)] })
                .collect();
            for u2 in universe.iter().filter(|u2| gu.is_subset(u2)) {
                let cand = CsMorphism { complement: u2.clone(), bijection: f2.clone() };
                if let Some(&j) = index.get(&cand) {
                    uf.union(i, j);
                }
            }
        }
    }
    Ok(classes_from(members, |i| uf.find(i)))
}

/// Classes of complementary morphisms `S → T` over all complements.
pub fn pr_cs_hom(s: &CollisionStructure, t: &CollisionStructure) -> Result<Vec<CsClass>> {
    caps::check("collision structure ground set", t.ground_size(), caps().cs)?;
    if s.ground_size() > t.ground_size() {
        return Ok(Vec::new());
    }
    let universe = all_collision_structures(t.ground_size() - s.ground_size())?;
    pr_cs_hom_in(s, t, &universe)
}

/// Injective collision maps `S → T`.
pub fn csi_hom(s: &CollisionStructure, t: &CollisionStructure) -> Result<Vec<InjMap>> {
    caps::check("collision structure ground set", t.ground_size(), caps().cs)?;
    let mut out = Vec::new();
    for i in all_injections(s.ground_size(), t.ground_size()) {
        if is_cs_map(&i, s, t)? {
            out.push(i);
        }
    }
    Ok(out)
}

/// The lift of a collision map with the trivial structure on the complement.
pub fn lift_cs_injection(i: &InjMap) -> CsMorphism {
    let fb = super::fb::lift_injection(i);
    CsMorphism {
        complement: CollisionStructure::trivial(fb.complement_size()),
        bijection: fb.bijection,
    }
}

pub struct CsCorrespondence {
    pub classes: Vec<CsClass>,
    pub injections: Vec<InjMap>,
    pub to_csi: Vec<usize>,
    pub to_pr: Vec<usize>,
}

/// Restriction to the source, checked constant on classes and inverse to the
/// trivial-complement lift.
pub fn cs_correspondence(s: &CollisionStructure, t: &CollisionStructure) -> Result<CsCorrespondence> {
    let classes = pr_cs_hom(s, t)?;
    let injections = csi_hom(s, t)?;
    correspondence_from(classes, injections)
}

fn correspondence_from(classes: Vec<CsClass>, injections: Vec<InjMap>) -> Result<CsCorrespondence> {
    let inj_index: HashMap<&InjMap, usize> = injections.iter().enumerate().map(|(k, i)| (i, k)).collect();
    let mut to_csi = Vec::with_capacity(classes.len());
    for c in &classes {
        let mut target = None;
        for x in &c.class_members {
            let k = *inj_index
                .get(&x.restrict())
                .ok_or_else(|| Error::Validation("restriction is not a collision map".into()))?;
            if target.is_some_and(|t| t != k) {
                return Err(Error::Validation("restriction is not constant on a class".into()));
            }
            target = Some(k);
        }
        to_csi.push(target.expect("classes are nonempty"));
    }
    let member_class: HashMap<&CsMorphism, usize> = classes
        .iter()
        .enumerate()
        .flat_map(|(k, c)| c.class_members.iter().map(move |x| (x, k)))
        .collect();
    let mut to_pr = Vec::with_capacity(injections.len());
    for i in &injections {
        let lift = lift_cs_injection(i);
        let k = *member_class
            .get(&lift)
            .ok_or_else(|| Error::Validation("trivial-complement lift is not a collision map".into()))?;
        to_pr.push(k);
    }
    for (k, &i) in to_csi.iter().enumerate() {
        if to_pr[i] != k {
            return Err(Error::Validation("correspondence maps are not mutually inverse".into()));
        }
    }
    Ok(CsCorrespondence { classes, injections, to_csi, to_pr })
}

/// Composition check across `S → T → R` on every pair of classes: the class of
/// the composite restricts to the composite of restrictions, and the result
/// does not depend on the chosen class members.
pub fn cs_composition_preserved(
    s: &CollisionStructure,
    t: &CollisionStructure,
    r: &CollisionStructure,
) -> Result<bool> {
    let first = pr_cs_hom(s, t)?;
    let second = pr_cs_hom(t, r)?;
    let outer = pr_cs_hom(s, r)?;
    let member_class: HashMap<&CsMorphism, usize> = outer
        .iter()
        .enumerate()
        .flat_map(|(k, c)| c.class_members.iter().map(move |x| (x, k)))
        .collect();
    for a in &first {
        for b in &second {
            let mut seen = None;
            for x in &a.class_members {
                for y in &b.class_members {
                    let comp = y.after(x);
                    let Some(&k) = member_class.get(&comp) else { return Ok(false) };
                    if seen.is_some_and(|s| s != k) {
                        return Ok(false);
                    }
                    seen = Some(k);
                    let expect = y.restrict().compose(&x.restrict())?;
                    if comp.restrict() != expect {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Classwise injectivity of the forgetful map to `Pr(FB)`.
pub fn forgetful_faithful(s: &CollisionStructure, t: &CollisionStructure) -> Result<bool> {
    let classes = pr_cs_hom(s, t)?;
    let fb = super::fb::pr_fb_hom(s.ground_size(), t.ground_size())?;
    let fb_class: HashMap<&FbMorphism, usize> = fb
        .iter()
        .enumerate()
        .flat_map(|(k, c)| c.class_members.iter().map(move |x| (x, k)))
        .collect();
    let mut images: Vec<usize> = classes.iter().map(|c| fb_class[&c.representative.underlying()]).collect();
    let before = images.len();
    images.sort_unstable();
    images.dedup();
    Ok(images.len() == before)
}

/// Collision structures of all simple graphs on `d` vertices.
pub fn graph_structures(d: usize) -> Result<Vec<CollisionStructure>> {
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let edges: Vec<(usize, usize)> = bits(mask).map(|i| pairs[i]).collect();
        out.push(cs_from_graph(d, &edges)?);
    }
    Ok(out)
}

/// Collision structures of all simplicial complexes on the vertex set `[d]`.
pub fn complex_structures(d: usize) -> Result<Vec<CollisionStructure>> {
    // Candidate faces of size ≥ 2; a complex is a down-closed choice of them.
    let big: Vec<u32> = (1u32..(1u32 << d)).filter(|m| m.count_ones() >= 2).collect();
    let mut out = Vec::new();
    for choice in 0u64..(1u64 << big.len()) {
        let chosen: Vec<u32> = big.iter().enumerate().filter(|(i, _)| choice & (1 << i) != 0).map(|(_, m)| *m).collect();
        let is_face = |m: u32| m.count_ones() <= 1 || chosen.contains(&m);
        let closed = chosen.iter().all(|&m| bits(m).all(|v| is_face(m & !(1 << v))));
        if !closed {
            continue;
        }
        let faces: Vec<Vec<usize>> =
            (0..d).map(|v| vec![v]).chain(chosen.iter().map(|&m| bits(m).collect())).collect();
        out.push(cs_from_complex(d, &faces)?);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Full faithfulness of `Pr(C0) → Pr(CSB)` on `S → T`, where `C0` has the
/// given complements: each `Pr(C0)` class lands in a distinct `Pr(CSB)` class
/// and every `Pr(CSB)` class is hit.
pub fn subcategory_fully_faithful(
    s: &CollisionStructure,
    t: &CollisionStructure,
    sub_universe: &[CollisionStructure],
) -> Result<bool> {
    let full = pr_cs_hom(s, t)?;
    let sub = pr_cs_hom_in(s, t, sub_universe)?;
    let member_class: HashMap<&CsMorphism, usize> = full
        .iter()
        .enumerate()
        .flat_map(|(k, c)| c.class_members.iter().map(move |x| (x, k)))
        .collect();
    let mut images = Vec::with_capacity(sub.len());
    for c in &sub {
        let ks: Vec<usize> = c.class_members.iter().map(|x| member_class[x]).collect();
        if ks.iter().any(|&k| k != ks[0]) {
            return Ok(false);
        }
        images.push(ks[0]);
    }
    images.sort_unstable();
    let n = images.len();
    images.dedup();
    Ok(images.len() == n && n == full.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_on_one_point() {
        let s = CollisionStructure::trivial(1);
        assert_eq!(pr_cs_hom(&s, &s).unwrap().len(), 1);
    }

    #[test]
    fn trivial_into_edge() {
        let s = CollisionStructure::trivial(2);
        let t = cs_from_graph(2, &[(0, 1)]).unwrap();
        assert_eq!(csi_hom(&s, &t).unwrap().len(), 2);
        let c = cs_correspondence(&s, &t).unwrap();
        assert_eq!(c.classes.len(), 2);
        // An edge cannot map into the discrete graph.
        assert_eq!(csi_hom(&t, &s).unwrap().len(), 0);
        assert_eq!(pr_cs_hom(&t, &s).unwrap().len(), 0);
    }

    #[test]
    fn small_classification() {
        for m in 0..=2 {
            for n in m..=2 {
                for s in all_collision_structures(m).unwrap() {
                    for t in all_collision_structures(n).unwrap() {
                        let c = cs_correspondence(&s, &t).unwrap();
                        assert_eq!(c.classes.len(), c.injections.len());
                        assert!(forgetful_faithful(&s, &t).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn structure_counts() {
        assert_eq!(graph_structures(3).unwrap().len(), 8);
        // Complexes on 3 vertices: none, 1, 2 or 3 edges, or the full triangle.
        assert_eq!(complex_structures(3).unwrap().len(), 9);
    }

    #[test]
    fn graphs_fully_faithful() {
        let g = graph_structures(2).unwrap();
        let h = graph_structures(3).unwrap();
        for s in &g {
            for t in &h {
                assert!(subcategory_fully_faithful(s, t, &graph_structures(1).unwrap()).unwrap());
            }
        }
    }
}
