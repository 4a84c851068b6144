//! Projection categories.
//!
//! A complementary morphism `c1 → c2` is a pair `(D, f: c1 ⊗ D → c2)`; two are
//! equivalent when joined by a zig-zag of arrows `g: D → D'` with
//! `f' ∘ (c1 ⊗ g) = f`. Arbitrary arrows `g` are allowed, not just isomorphisms.
//! [`pr_hom_generic`] runs this closure on any finite strict symmetric monoidal
//! category; [`fb`] and [`cs`] specialize it to finite sets and collision
//! structures, where cardinality pins down the complement.

pub mod cs;
pub mod fb;
pub mod oplax;

use std::collections::{BTreeMap, HashMap};

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite strict monoidal category with optional symmetry, given by tables.
#[derive(Clone, Debug)]
pub struct FiniteSmc {
    objects: Vec<String>,
    arrows: Vec<Arrow>,
    identities: Vec<usize>,
    compose: HashMap<(usize, usize), usize>,
    tensor_obj: HashMap<(usize, usize), usize>,
    tensor_arr: HashMap<(usize, usize), usize>,
    unit: usize,
    symmetry: HashMap<(usize, usize), usize>,
    weights: Option<Vec<usize>>,
    homs: HashMap<(usize, usize), Vec<usize>>,
    out: Vec<Vec<usize>>,
    into: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

/// Serialized form of a [`FiniteSmc`], referring to objects and arrows by name.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SmcSpec {
    pub objects: Vec<String>,
    pub unit: String,
    pub arrows: Vec<ArrowSpec>,
    /// Identity arrow of each object.
    pub identities: BTreeMap<String, String>,
    /// Triples `[g, f, g∘f]`.
    pub compose: Vec<[String; 3]>,
    /// Triples `[a, b, a⊗b]` on objects.
    pub tensor_objects: Vec<[String; 3]>,
    /// Triples `[f, g, f⊗g]` on arrows.
    pub tensor_arrows: Vec<[String; 3]>,
    /// Triples `[a, b, s_{a,b}]`.
    #[serde(default)]
    pub symmetry: Vec<[String; 3]>,
    /// Optional weights; a missing tensor is tolerated only above the top weight.
    #[serde(default)]
    pub weights: Option<BTreeMap<String, usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub src: String,
    pub dst: String,
}

/// One complementary morphism `c1 ⊗ complement → target` via `arrow`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ComplementaryMorphism {
    pub source: usize,
    pub target: usize,
    pub complement: usize,
    pub arrow: usize,
}

/// An equivalence class of complementary morphisms.
pub type PrHom = PrHomOf<ComplementaryMorphism>;

impl FiniteSmc {
    pub fn from_spec(spec: &SmcSpec) -> Result<Self> {
        let obj_index: HashMap<&str, usize> =
            spec.objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
        if obj_index.len() != spec.objects.len() {
            return Err(Error::Validation("duplicate object names".into()));
        }
        let obj = |name: &str| {
            obj_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Validation(format!("unknown object {name:?}")))
        };
        let mut arrows = Vec::new();
        let mut arr_index = HashMap::new();
        for a in &spec.arrows {
            if arr_index.insert(a.name.clone(), arrows.len()).is_some() {
                return Err(Error::Validation(format!("duplicate arrow name {:?}", a.name)));
            }
            arrows.push(Arrow { name: a.name.clone(), src: obj(&a.src)?, dst: obj(&a.dst)? });
        }
        let arr = |name: &str| {
            arr_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Validation(format!("unknown arrow {name:?}")))
        };
        let mut identities = vec![usize::MAX; spec.objects.len()];
        for (o, a) in &spec.identities {
            identities[obj(o)?] = arr(a)?;
        }
        let mut compose = HashMap::new();
        for [g, f, h] in &spec.compose {
            compose.insert((arr(g)?, arr(f)?), arr(h)?);
        }
        let mut tensor_obj = HashMap::new();
        for [a, b, c] in &spec.tensor_objects {
            tensor_obj.insert((obj(a)?, obj(b)?), obj(c)?);
        }
        let mut tensor_arr = HashMap::new();
        for [f, g, h] in &spec.tensor_arrows {
            tensor_arr.insert((arr(f)?, arr(g)?), arr(h)?);
        }
        let mut symmetry = HashMap::new();
        for [a, b, s] in &spec.symmetry {
            symmetry.insert((obj(a)?, obj(b)?), arr(s)?);
        }
        let weights = match &spec.weights {
            None => None,
            Some(w) => {
                let mut out = vec![usize::MAX; spec.objects.len()];
                for (o, &x) in w {
                    out[obj(o)?] = x;
                }
                if out.contains(&usize::MAX) {
                    return Err(Error::Validation("weights must cover every object".into()));
                }
                Some(out)
            }
        };
        let cat = FiniteSmc::from_parts(
            spec.objects.clone(),
            arrows,
            identities,
            compose,
            tensor_obj,
            tensor_arr,
            obj(&spec.unit)?,
            symmetry,
            weights,
        )?;
        Ok(cat)
    }

    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        objects: Vec<String>,
        arrows: Vec<Arrow>,
        identities: Vec<usize>,
        compose: HashMap<(usize, usize), usize>,
        tensor_obj: HashMap<(usize, usize), usize>,
        tensor_arr: HashMap<(usize, usize), usize>,
        unit: usize,
        symmetry: HashMap<(usize, usize), usize>,
        weights: Option<Vec<usize>>,
    ) -> Result<Self> {
        let mut homs: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut out = vec![Vec::new(); objects.len()];
        let mut into = vec![Vec::new(); objects.len()];
        for (i, a) in arrows.iter().enumerate() {
            if a.src >= objects.len() || a.dst >= objects.len() {
                return Err(Error::Validation(format!("arrow {} has an unknown endpoint", a.name)));
            }
            homs.entry((a.src, a.dst)).or_default().push(i);
            out[a.src].push(i);
            into[a.dst].push(i);
        }
        let cat = FiniteSmc {
            objects,
            arrows,
            identities,
            compose,
            tensor_obj,
            tensor_arr,
            unit,
            symmetry,
            weights,
            homs,
            out,
            into,
        };
        cat.validate()?;
        Ok(cat)
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn hom(&self, a: usize, b: usize) -> &[usize] {
        self.homs.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `g ∘ f`.
    pub fn compose(&self, g: usize, f: usize) -> usize {
        self.compose[&(g, f)]
    }

    pub fn tensor_obj(&self, a: usize, b: usize) -> Option<usize> {
        self.tensor_obj.get(&(a, b)).copied()
    }

    pub fn tensor_arr(&self, f: usize, g: usize) -> Option<usize> {
        self.tensor_arr.get(&(f, g)).copied()
    }

    fn tensor_allowed_missing(&self, a: usize, b: usize) -> bool {
        match &self.weights {
            Some(w) => {
                let top = w.iter().copied().max().unwrap_or(0);
                w[a] + w[b] > top
            }
            None => false,
        }
    }

    /// Checks the category, strict monoidal and symmetry axioms on the tables.
    pub fn validate(&self) -> Result<()> {
        let v = |msg: String| Err(Error::Validation(msg));
        let n = self.objects.len();
        if self.unit >= n {
            return v("unit is not an object".into());
        }
        for o in 0..n {
            let id = self.identities[o];
            if id == usize::MAX || id >= self.arrows.len() {
                return v(format!("object {} has no identity", self.objects[o]));
            }
            if self.arrows[id].src != o || self.arrows[id].dst != o {
                return v(format!("identity of {} has the wrong endpoints", self.objects[o]));
            }
        }
        // Composition: total, well-typed, unital, associative.
        for (g, ga) in self.arrows.iter().enumerate() {
            for (f, fa) in self.arrows.iter().enumerate() {
                if fa.dst != ga.src {
                    continue;
                }
                let Some(&h) = self.compose.get(&(g, f)) else {
                    return v(format!("composite {} ∘ {} missing", ga.name, fa.name));
                };
                if self.arrows[h].src != fa.src || self.arrows[h].dst != ga.dst {
                    return v(format!("composite {} ∘ {} has the wrong type", ga.name, fa.name));
                }
            }
            if self.compose[&(g, self.identities[ga.src])] != g || self.compose[&(self.identities[ga.dst], g)] != g {
                return v(format!("identity law fails for {}", ga.name));
            }
        }
        for (h, ha) in self.arrows.iter().enumerate() {
            for &g in &self.into[ha.src] {
                for &f in &self.into[self.arrows[g].src] {
                    let left = self.compose[&(h, self.compose[&(g, f)])];
                    let right = self.compose[&(self.compose[&(h, g)], f)];
                    if left != right {
                        return v(format!("composition is not associative at {}", ha.name));
                    }
                }
            }
        }
        // Tensor on objects: defined or excused by weights; strictly unital and associative.
        for a in 0..n {
            for b in 0..n {
                if self.tensor_obj(a, b).is_none() && !self.tensor_allowed_missing(a, b) {
                    return Err(Error::Unsupported(format!(
                        "tensor of {} and {} is missing; the category must be tensor-closed",
                        self.objects[a], self.objects[b]
                    )));
                }
            }
            if self.tensor_obj(a, self.unit) != Some(a) || self.tensor_obj(self.unit, a) != Some(a) {
                return v(format!("unit law fails on object {}", self.objects[a]));
            }
            for b in 0..n {
                for c in 0..n {
                    let l = self.tensor_obj(a, b).and_then(|ab| self.tensor_obj(ab, c));
                    let r = self.tensor_obj(b, c).and_then(|bc| self.tensor_obj(a, bc));
                    if l != r {
                        return v(format!(
                            "tensor is not strictly associative on {}, {}, {}",
                            self.objects[a], self.objects[b], self.objects[c]
                        ));
                    }
                }
            }
        }
        // Tensor on arrows: typed, functorial, unital.
        for (f, fa) in self.arrows.iter().enumerate() {
            for (g, ga) in self.arrows.iter().enumerate() {
                let src = self.tensor_obj(fa.src, ga.src);
                let dst = self.tensor_obj(fa.dst, ga.dst);
                match (src, dst, self.tensor_arr(f, g)) {
                    (Some(s), Some(d), Some(h)) => {
                        if self.arrows[h].src != s || self.arrows[h].dst != d {
                            return v(format!("{} ⊗ {} has the wrong type", fa.name, ga.name));
                        }
                    }
                    (Some(_), Some(_), None) => {
                        return v(format!("tensor of arrows {} and {} missing", fa.name, ga.name));
                    }
                    _ => {}
                }
            }
            let u = self.identities[self.unit];
            if self.tensor_arr(f, u) != Some(f) || self.tensor_arr(u, f) != Some(f) {
                return v(format!("unit law fails on arrow {}", fa.name));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if let Some(ab) = self.tensor_obj(a, b) {
                    if self.tensor_arr(self.identities[a], self.identities[b]) != Some(self.identities[ab]) {
                        return v(format!(
                            "tensor of identities of {} and {} is not an identity",
                            self.objects[a], self.objects[b]
                        ));
                    }
                }
            }
        }
        // Interchange law (f' ∘ f) ⊗ (g' ∘ g) = (f' ⊗ g') ∘ (f ⊗ g).
        for (f, fa) in self.arrows.iter().enumerate() {
            for (g, ga) in self.arrows.iter().enumerate() {
                let Some(fg) = self.tensor_arr(f, g) else { continue };
                for &f2 in &self.out[fa.dst] {
                    for &g2 in &self.out[ga.dst] {
                        let Some(f2g2) = self.tensor_arr(f2, g2) else { continue };
                        let lhs = self.tensor_arr(self.compose(f2, f), self.compose(g2, g));
                        if lhs != Some(self.compose(f2g2, fg)) {
                            return v(format!("interchange law fails at {} ⊗ {}", fa.name, ga.name));
                        }
                    }
                }
            }
        }
        // Symmetry: typed, involutive, natural, hexagon.
        if !self.symmetry.is_empty() {
            for a in 0..n {
                for b in 0..n {
                    let Some(ab) = self.tensor_obj(a, b) else { continue };
                    let ba = self.tensor_obj(b, a).expect("tensor symmetric in definedness");
                    let Some(&s) = self.symmetry.get(&(a, b)) else {
                        return v(format!("symmetry for {}, {} missing", self.objects[a], self.objects[b]));
                    };
                    if self.arrows[s].src != ab || self.arrows[s].dst != ba {
                        return v(format!("symmetry for {}, {} has the wrong type", self.objects[a], self.objects[b]));
                    }
                    let back = self.symmetry[&(b, a)];
                    if self.compose(back, s) != self.identities[ab] {
                        return v(format!("symmetry for {}, {} is not involutive", self.objects[a], self.objects[b]));
                    }
                    for c in 0..n {
                        if self.tensor_obj(ab, c).is_none() {
                            continue;
                        }
                        let bc = self.tensor_obj(b, c).expect("associativity of definedness");
                        let lhs = self.symmetry[&(a, bc)];
                        let step1 = self.tensor_arr(s, self.identities[c]).expect("defined");
                        let step2 = self.tensor_arr(self.identities[b], self.symmetry[&(a, c)]).expect("defined");
                        if self.compose(step2, step1) != lhs {
                            return v(format!(
                                "hexagon fails on {}, {}, {}",
                                self.objects[a], self.objects[b], self.objects[c]
                            ));
                        }
                    }
                }
            }
            for (f, fa) in self.arrows.iter().enumerate() {
                for (g, ga) in self.arrows.iter().enumerate() {
                    let (Some(fg), Some(gf)) = (self.tensor_arr(f, g), self.tensor_arr(g, f)) else { continue };
                    let s_src = self.symmetry[&(fa.src, ga.src)];
                    let s_dst = self.symmetry[&(fa.dst, ga.dst)];
                    if self.compose(s_dst, fg) != self.compose(gf, s_src) {
                        return v(format!("symmetry is not natural at {}, {}", fa.name, ga.name));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_groupoid(&self) -> bool {
        self.arrows.iter().enumerate().all(|(f, fa)| {
            self.hom(fa.dst, fa.src).iter().any(|&g| {
                self.compose(g, f) == self.identities[fa.src] && self.compose(f, g) == self.identities[fa.dst]
            })
        })
    }

    pub fn is_skeletal(&self) -> bool {
        (0..self.objects.len()).all(|a| {
            (0..self.objects.len())
                .filter(|&b| b != a)
                .all(|b| self.hom(a, b).is_empty() || self.hom(b, a).is_empty() || !self.isomorphic(a, b))
        })
    }

    fn isomorphic(&self, a: usize, b: usize) -> bool {
        self.hom(a, b).iter().any(|&f| {
            self.hom(b, a).iter().any(|&g| self.compose(g, f) == self.identities[a] && self.compose(f, g) == self.identities[b])
        })
    }

    /// All complementary morphisms `c1 → c2`.
    pub fn complementary_morphisms(&self, c1: usize, c2: usize) -> Vec<ComplementaryMorphism> {
        let mut out = Vec::new();
        for d in 0..self.objects.len() {
            if let Some(src) = self.tensor_obj(c1, d) {
                for &f in self.hom(src, c2) {
                    out.push(ComplementaryMorphism { source: c1, target: c2, complement: d, arrow: f });
                }
            }
        }
        out
    }

    /// Composite of `(D1, f1): c1 → c2` followed by `(D2, f2): c2 → c3`, namely
    /// `(D1 ⊗ D2, f2 ∘ (f1 ⊗ D2))`.
    pub fn compose_complementary(
        &self,
        first: &ComplementaryMorphism,
        second: &ComplementaryMorphism,
    ) -> Option<ComplementaryMorphism> {
        debug_assert_eq!(first.target, second.source);
        let d = self.tensor_obj(first.complement, second.complement)?;
        let lifted = self.tensor_arr(first.arrow, self.identities[second.complement])?;
        Some(ComplementaryMorphism {
            source: first.source,
            target: second.target,
            complement: d,
            arrow: self.compose(second.arrow, lifted),
        })
    }

    /// The class of the identity: `c ⊗ 𝟙 = c` followed by the identity.
    pub fn identity_complementary(&self, c: usize) -> ComplementaryMorphism {
        ComplementaryMorphism { source: c, target: c, complement: self.unit, arrow: self.identities[c] }
    }
}

/// Equivalence classes of complementary morphisms `c1 → c2`.
pub fn pr_hom_generic(cat: &FiniteSmc, c1: usize, c2: usize) -> Vec<PrHom> {
    let members = cat.complementary_morphisms(c1, c2);
    let index: HashMap<(usize, usize), usize> =
        members.iter().enumerate().map(|(i, m)| ((m.complement, m.arrow), i)).collect();
    let mut uf = UnionFind::<usize>::new(members.len());
    for (i, m) in members.iter().enumerate() {
        for d2 in 0..cat.num_objects() {
            for &g in cat.hom(m.complement, d2) {
                let Some(lift) = cat.tensor_arr(cat.identity(c1), g) else { continue };
                let src2 = cat.arrow(lift).dst;
                for &f2 in cat.hom(src2, c2) {
                    if cat.compose(f2, lift) == m.arrow {
                        uf.union(i, index[&(d2, f2)]);
                    }
                }
            }
        }
    }
    classes_from(members, |i| uf.find(i))
}

pub(crate) fn classes_from<T: Ord + Clone>(members: Vec<T>, mut root: impl FnMut(usize) -> usize) -> Vec<PrHomOf<T>> {
    let mut groups: BTreeMap<usize, Vec<T>> = BTreeMap::new();
    for (i, m) in members.into_iter().enumerate() {
        groups.entry(root(i)).or_default().push(m);
    }
    let mut out: Vec<PrHomOf<T>> = groups
        .into_values()
        .map(|mut v| {
            v.sort();
            PrHomOf { representative: v[0].clone(), class_members: v }
        })
        .collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    out
}

/// A class of complementary morphisms of any encoding.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrHomOf<T> {
    pub representative: T,
    pub class_members: Vec<T>,
}

/// Locates the class containing `m`.
pub fn class_of<T: PartialEq>(classes: &[PrHomOf<T>], m: &T) -> Option<usize> {
    classes.iter().position(|c| c.class_members.contains(m))
}

/// The composition table of `Pr(cat)`, keyed by `(c1, c2, c3, class of first, class of second)`.
pub struct PrCategory {
    pub homs: HashMap<(usize, usize), Vec<PrHomOf<ComplementaryMorphism>>>,
}

impl PrCategory {
    pub fn build(cat: &FiniteSmc) -> Self {
        let mut homs = HashMap::new();
        for a in 0..cat.num_objects() {
            for b in 0..cat.num_objects() {
                let classes = pr_hom_generic(cat, a, b)
                    .into_iter()
                    .map(|p| PrHomOf { representative: p.representative, class_members: p.class_members })
                    .collect();
                homs.insert((a, b), classes);
            }
        }
        PrCategory { homs }
    }

    pub fn hom_size(&self, a: usize, b: usize) -> usize {
        self.homs[&(a, b)].len()
    }

    /// Class index of the composite of class `i: a → b` and class `j: b → c`,
    /// checked to be independent of the chosen representatives.
    pub fn compose(&self, cat: &FiniteSmc, a: usize, b: usize, c: usize, i: usize, j: usize) -> Result<usize> {
        let first = &self.homs[&(a, b)][i];
        let second = &self.homs[&(b, c)][j];
        let mut found = None;
        for f in &first.class_members {
            for g in &second.class_members {
                let comp = cat
                    .compose_complementary(f, g)
                    .ok_or_else(|| Error::Unsupported("composite leaves the truncated category".into()))?;
                let k = class_of(&self.homs[&(a, c)], &comp)
                    .ok_or_else(|| Error::Validation("composite is not a complementary morphism".into()))?;
                match found {
                    None => found = Some(k),
                    Some(prev) if prev != k => {
                        return Err(Error::Validation("composition depends on representatives".into()))
                    }
                    _ => {}
                }
            }
        }
        found.ok_or_else(|| Error::Validation("empty class".into()))
    }

    pub fn identity_class(&self, cat: &FiniteSmc, c: usize) -> Option<usize> {
        class_of(&self.homs[&(c, c)], &cat.identity_complementary(c))
    }
}

/// Number of classes `c1 → c2` in a skeletal groupoid via orbits of `Aut(D)`
/// acting on `Aut(c2)` through `c1 ⊗ g`.
pub fn groupoid_hom_count(cat: &FiniteSmc, c1: usize, c2: usize) -> Result<usize> {
    if !cat.is_groupoid() {
        return Err(Error::arg("groupoid_hom_count needs a groupoid"));
    }
    if !cat.is_skeletal() {
        return Err(Error::arg("groupoid_hom_count needs a skeletal groupoid"));
    }
    let mut total = 0;
    for d in 0..cat.num_objects() {
        if cat.tensor_obj(c1, d) != Some(c2) {
            continue;
        }
        let aut_c2 = cat.hom(c2, c2);
        let mut uf = UnionFind::<usize>::new(aut_c2.len());
        let pos: HashMap<usize, usize> = aut_c2.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        for &g in cat.hom(d, d) {
            let lift = cat.tensor_arr(cat.identity(c1), g).expect("tensor-closed");
            for (i, &a) in aut_c2.iter().enumerate() {
                uf.union(i, pos[&cat.compose(a, lift)]);
            }
        }
        let mut roots: Vec<usize> = (0..aut_c2.len()).map(|i| uf.find(i)).collect();
        roots.sort_unstable();
        roots.dedup();
        total += roots.len();
    }
    Ok(total)
}

/// `Σ_{c1 ⊗ D = c2} |Aut(c2)| / |Aut(D)|`.
pub fn groupoid_orbit_formula(cat: &FiniteSmc, c1: usize, c2: usize) -> usize {
    (0..cat.num_objects())
        .filter(|&d| cat.tensor_obj(c1, d) == Some(c2))
        .map(|d| cat.hom(c2, c2).len() / cat.hom(d, d).len().max(1))
        .sum()
}

/// The walking arrow `0 → 1` with multiplication as tensor and unit `1`.
pub fn walking_arrow() -> FiniteSmc {
    let objects = vec!["0".to_string(), "1".to_string()];
    let arrows = vec![
        Arrow { name: "id0".into(), src: 0, dst: 0 },
        Arrow { name: "id1".into(), src: 1, dst: 1 },
        Arrow { name: "e".into(), src: 0, dst: 1 },
    ];
    let mut compose = HashMap::new();
    compose.insert((0, 0), 0);
    compose.insert((1, 1), 1);
    compose.insert((2, 0), 2);
    compose.insert((1, 2), 2);
    let mut tensor_obj = HashMap::new();
    for a in 0..2 {
        for b in 0..2 {
            tensor_obj.insert((a, b), a * b);
        }
    }
    // On arrows: anything tensored with an arrow out of 0 lands in id0, except
    // identities of 1 acting as the unit.
    let mut tensor_arr = HashMap::new();
    let ends = |a: usize| match a {
        0 => (0, 0),
        1 => (1, 1),
        _ => (0, 1),
    };
    let arrow_between = |s: usize, d: usize| match (s, d) {
        (0, 0) => 0,
        (1, 1) => 1,
        (0, 1) => 2,
        _ => unreachable!("no arrow 1 → 0"),
    };
    for f in 0..3 {
        for g in 0..3 {
            let (fs, fd) = ends(f);
            let (gs, gd) = ends(g);
            tensor_arr.insert((f, g), arrow_between(fs * gs, fd * gd));
        }
    }
    let mut symmetry = HashMap::new();
    for a in 0..2 {
        for b in 0..2 {
            symmetry.insert((a, b), if a * b == 1 { 1 } else { 0 });
        }
    }
    FiniteSmc::from_parts(objects, arrows, vec![0, 1], compose, tensor_obj, tensor_arr, 1, symmetry, None)
        .expect("walking arrow is a valid symmetric monoidal category")
}

/// The one-object category with only the identity.
pub fn trivial_category() -> FiniteSmc {
    let arrows = vec![Arrow { name: "id".into(), src: 0, dst: 0 }];
    let single = |_: ()| {
        let mut m = HashMap::new();
        m.insert((0, 0), 0);
        m
    };
    FiniteSmc::from_parts(vec!["*".into()], arrows, vec![0], single(()), single(()), single(()), 0, single(()), None)
        .expect("valid")
}

/// Skeleton of finite sets and bijections on `0..=max`, with block-sum tensor
/// defined up to total size `max`.
pub fn fb_skeleton(max: usize) -> FiniteSmc {
    use crate::perm::{all_perms, Perm};
    let objects: Vec<String> = (0..=max).map(|n| n.to_string()).collect();
    let mut arrows = Vec::new();
    let mut index: HashMap<Perm, usize> = HashMap::new();
    let mut identities = Vec::new();
    for n in 0..=max {
        for p in all_perms(n) {
            if p.is_identity() {
                identities.push(arrows.len());
            }
            index.insert(p.clone(), arrows.len());
            let name = format!("{:?}", p.0);
            arrows.push((Arrow { name, src: n, dst: n }, p));
        }
    }
    let mut compose = HashMap::new();
    for (i, (_, p)) in arrows.iter().enumerate() {
        for (j, (_, q)) in arrows.iter().enumerate() {
            if p.len() == q.len() {
                compose.insert((i, j), index[&p.compose(q)]);
            }
        }
    }
    let mut tensor_obj = HashMap::new();
    for a in 0..=max {
        for b in 0..=max - a {
            tensor_obj.insert((a, b), a + b);
        }
    }
    let block_sum = |p: &Perm, q: &Perm| Perm(p.0.iter().copied().chain(q.0.iter().map(|&x| x + p.len())).collect());
    let mut tensor_arr = HashMap::new();
    let mut symmetry = HashMap::new();
    for (i, (_, p)) in arrows.iter().enumerate() {
        for (j, (_, q)) in arrows.iter().enumerate() {
            if p.len() + q.len() <= max {
                tensor_arr.insert((i, j), index[&block_sum(p, q)]);
            }
        }
    }
    for a in 0..=max {
        for b in 0..=max - a {
            // s_{a,b}: a ⊔ b → b ⊔ a.
            let s = Perm((0..a).map(|x| x + b).chain(0..b).collect());
            symmetry.insert((a, b), index[&s]);
        }
    }
    let weights = Some((0..=max).collect());
    FiniteSmc::from_parts(
        objects,
        arrows.into_iter().map(|(a, _)| a).collect(),
        identities,
        compose,
        tensor_obj,
        tensor_arr,
        0,
        symmetry,
        weights,
    )
    .expect("FB skeleton is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walking_arrow_is_walking_isomorphism() {
        let cat = walking_arrow();
        let pr = PrCategory::build(&cat);
        for a in 0..2 {
            for b in 0..2 {
                assert_eq!(pr.hom_size(a, b), 1, "hom({a},{b})");
            }
        }
        let comp = |a, b, c| pr.compose(&cat, a, b, c, 0, 0).unwrap();
        assert_eq!(Some(comp(0, 1, 0)), pr.identity_class(&cat, 0));
        assert_eq!(Some(comp(1, 0, 1)), pr.identity_class(&cat, 1));
        let total: usize = (0..2).flat_map(|a| (0..2).map(move |b| (a, b))).map(|(a, b)| cat.complementary_morphisms(a, b).len()).sum();
        assert_eq!(total, 7);
    }

    #[test]
    fn trivial_category_has_identity_only() {
        let cat = trivial_category();
        let homs = pr_hom_generic(&cat, 0, 0);
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].representative, cat.identity_complementary(0));
    }

    #[test]
    fn fb_skeleton_counts_match_orbits() {
        let cat = fb_skeleton(4);
        for m in 0..=4 {
            for n in 0..=4 {
                let generic = pr_hom_generic(&cat, m, n).len();
                let orbits = groupoid_hom_count(&cat, m, n).unwrap();
                assert_eq!(generic, orbits, "({m},{n})");
                assert_eq!(orbits, groupoid_orbit_formula(&cat, m, n));
                let expect = if m <= n { (n - m + 1..=n).product::<usize>() } else { 0 };
                assert_eq!(generic, expect);
            }
        }
        assert_eq!(groupoid_hom_count(&cat, 1, 3).unwrap(), 3);
        assert_eq!(groupoid_hom_count(&cat, 2, 3).unwrap(), 6);
    }

    #[test]
    fn non_groupoid_rejected() {
        assert!(groupoid_hom_count(&walking_arrow(), 0, 1).is_err());
    }

    #[test]
    fn missing_tensor_needs_weights() {
        let mut spec_cat = fb_skeleton(2);
        spec_cat.weights = None;
        assert!(matches!(spec_cat.validate(), Err(Error::Unsupported(_))));
    }
}
