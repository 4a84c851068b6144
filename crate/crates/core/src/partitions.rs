//! Set partitions, collision structures and the maps between them.
//!
//! A partition of `{0..n-1}` is a restricted-growth string: element `i` gets
//! the label of its block and labels appear in first-use order. A collision
//! structure is an upward-closed set of partitions, stored by its minimal
//! elements.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::caps::{self, caps};
use crate::error::{Error, Result};
use crate::perm::{all_perms, bits, full_mask, Perm};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    rgs: Vec<u8>,
}

impl Partition {
    pub fn from_rgs(rgs: Vec<u8>) -> Result<Self> {
        let mut next = 0u8;
        for &l in &rgs {
            if l > next {
                return Err(Error::arg(format!("{rgs:?} is not a restricted-growth string")));
            }
            if l == next {
                next += 1;
            }
        }
        Ok(Partition { rgs })
    }

    /// Canonicalizes arbitrary block labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, u8)> = Vec::new();
        let rgs = labels
            .iter()
            .map(|l| match map.iter().find(|(x, _)| x == l) {
                Some((_, r)) => *r,
                None => {
                    let r = map.len() as u8;
                    map.push((*l, r));
                    r
                }
            })
            .collect();
        Partition { rgs }
    }

    pub fn from_blocks(n: usize, blocks: &[u32]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (b, &mask) in blocks.iter().enumerate() {
            if mask == 0 {
                return Err(Error::arg("partition blocks must be nonempty"));
            }
            for i in bits(mask) {
                if i >= n || labels[i] != usize::MAX {
                    return Err(Error::arg(format!("blocks {blocks:?} do not partition {n} elements")));
                }
                labels[i] = b;
            }
        }
        if labels.contains(&usize::MAX) {
            return Err(Error::arg(format!("blocks {blocks:?} do not cover {n} elements")));
        }
        Ok(Partition::from_labels(&labels))
    }

    pub fn discrete(n: usize) -> Self {
        Partition { rgs: (0..n as u8).collect() }
    }

    pub fn indiscrete(n: usize) -> Self {
        Partition { rgs: vec![0; n] }
    }

    pub fn ground_size(&self) -> usize {
        self.rgs.len()
    }

    pub fn rgs(&self) -> &[u8] {
        &self.rgs
    }

    pub fn label(&self, i: usize) -> usize {
        self.rgs[i] as usize
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    /// Blocks as masks, in label order (equivalently by least element).
    pub fn blocks(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.num_blocks()];
        for (i, &l) in self.rgs.iter().enumerate() {
            out[l as usize] |= 1 << i;
        }
        out
    }

    pub fn is_discrete(&self) -> bool {
        self.num_blocks() == self.rgs.len()
    }
}

impl fmt::Display for Partition {
    /// Blocks separated by `|`, e.g. `{01|2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (b, mask) in self.blocks().iter().enumerate() {
            if b > 0 {
                write!(f, "|")?;
            }
            for i in bits(*mask) {
                write!(f, "{i}")?;
            }
        }
        write!(f, "}}")
    }
}

/// Bell numbers, for cross-checks.
pub fn bell(n: usize) -> u64 {
    let mut row = vec![1u64];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// All partitions of `{0..n-1}` in lexicographic restricted-growth order.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    caps::check("partition ground set", n, caps().partitions)?;
    Ok(enumerate_unchecked(n))
}

fn enumerate_unchecked(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, next: u8, cur: &mut Vec<u8>, out: &mut Vec<Partition>) {
        if cur.len() == n {
            out.push(Partition { rgs: cur.clone() });
            return;
        }
        for l in 0..=next {
            cur.push(l);
            rec(n, if l == next { next + 1 } else { next }, cur, out);
            cur.pop();
        }
    }
    rec(n, 0, &mut cur, &mut out);
    out
}

fn same_size(p: &Partition, q: &Partition) -> Result<()> {
    if p.ground_size() != q.ground_size() {
        return Err(Error::arg(format!(
            "ground sizes differ: {} vs {}",
            p.ground_size(),
            q.ground_size()
        )));
    }
    Ok(())
}

/// `P ≤ Q`: every block of `Q` is a union of blocks of `P`.
pub fn refines(p: &Partition, q: &Partition) -> Result<bool> {
    same_size(p, q)?;
    Ok(refines_unchecked(p, q))
}

fn refines_unchecked(p: &Partition, q: &Partition) -> bool {
    // P ≤ Q iff the label map of P factors through Q.
    let mut image = vec![u8::MAX; p.num_blocks()];
    for (a, b) in p.rgs.iter().zip(&q.rgs) {
        let slot = &mut image[*a as usize];
        if *slot == u8::MAX {
            *slot = *b;
        } else if *slot != *b {
            return false;
        }
    }
    true
}

/// Least upper bound in the refinement order.
pub fn join(p: &Partition, q: &Partition) -> Result<Partition> {
    same_size(p, q)?;
    let n = p.ground_size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for part in [p, q] {
        let mut first = vec![usize::MAX; part.num_blocks()];
        for i in 0..n {
            let l = part.label(i);
            if first[l] == usize::MAX {
                first[l] = i;
            } else {
                let (a, b) = (find(&mut parent, first[l]), find(&mut parent, i));
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let labels: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
    Ok(Partition::from_labels(&labels))
}

/// An injection `{0..src-1} → {0..dst-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InjMap {
    pub src_size: usize,
    pub dst_size: usize,
    pub images: Vec<usize>,
}

impl InjMap {
    pub fn new(dst_size: usize, images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; dst_size];
        for &x in &images {
            if x >= dst_size || seen[x] {
                return Err(Error::arg(format!("{images:?} is not an injection into {dst_size} elements")));
            }
            seen[x] = true;
        }
        Ok(InjMap { src_size: images.len(), dst_size, images })
    }

    pub fn identity(n: usize) -> Self {
        InjMap { src_size: n, dst_size: n, images: (0..n).collect() }
    }

    /// Inclusion of a subset, listed increasingly.
    pub fn inclusion(dst_size: usize, mask: u32) -> Self {
        InjMap { src_size: mask.count_ones() as usize, dst_size, images: bits(mask).collect() }
    }

    pub fn from_perm(p: &Perm) -> Self {
        InjMap { src_size: p.len(), dst_size: p.len(), images: p.0.clone() }
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &InjMap) -> Result<InjMap> {
        if other.dst_size != self.src_size {
            return Err(Error::arg("composition of injections with mismatched sizes"));
        }
        Ok(InjMap {
            src_size: other.src_size,
            dst_size: self.dst_size,
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn image_mask(&self) -> u32 {
        self.images.iter().fold(0, |m, &i| m | (1 << i))
    }

    /// `f_*P`: images of the blocks together with the singletons off the image.
    pub fn push_partition(&self, p: &Partition) -> Partition {
        let mut labels = vec![usize::MAX; self.dst_size];
        for (i, &x) in self.images.iter().enumerate() {
            labels[x] = p.label(i);
        }
        let mut fresh = p.num_blocks();
        for l in labels.iter_mut().filter(|l| **l == usize::MAX) {
            *l = fresh;
            fresh += 1;
        }
        Partition::from_labels(&labels)
    }
}

/// All injections `{0..m-1} → {0..n-1}` in lexicographic order of images.
pub fn all_injections(m: usize, n: usize) -> Vec<InjMap> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    let mut used = vec![false; n];
    fn rec(m: usize, n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<InjMap>) {
        if cur.len() == m {
            out.push(InjMap { src_size: m, dst_size: n, images: cur.clone() });
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(m, n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(m, n, &mut cur, &mut used, &mut out);
    out
}

/// Upward-closed set of partitions, kept as its antichain of minimal elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CollisionStructure {
    ground_size: usize,
    generators: Vec<Partition>,
}

impl CollisionStructure {
    /// Generated by `gens`; non-minimal and repeated generators are discarded.
    pub fn new(ground_size: usize, gens: Vec<Partition>) -> Result<Self> {
        for g in &gens {
            if g.ground_size() != ground_size {
                return Err(Error::arg(format!(
                    "generator {g} does not live on {ground_size} elements"
                )));
            }
        }
        Ok(Self::minimalized(ground_size, gens))
    }

    fn minimalized(ground_size: usize, mut gens: Vec<Partition>) -> Self {
        gens.sort();
        gens.dedup();
        let keep: Vec<Partition> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && refines_unchecked(h, g)))
            .cloned()
            .collect();
        CollisionStructure { ground_size, generators: keep }
    }

    /// The empty collision structure: no collisions are forbidden.
    pub fn trivial(n: usize) -> Self {
        CollisionStructure { ground_size: n, generators: Vec::new() }
    }

    /// Every partition is forbidden.
    pub fn full(n: usize) -> Self {
        CollisionStructure { ground_size: n, generators: vec![Partition::discrete(n)] }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn generators(&self) -> &[Partition] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, p: &Partition) -> Result<bool> {
        if p.ground_size() != self.ground_size {
            return Err(Error::arg(format!(
                "partition on {} elements tested against a structure on {}",
                p.ground_size(),
                self.ground_size
            )));
        }
        Ok(self.contains_unchecked(p))
    }

    pub(crate) fn contains_unchecked(&self, p: &Partition) -> bool {
        self.generators.iter().any(|g| refines_unchecked(g, p))
    }

    /// Is `self ⊆ other` as sets of partitions.
    pub fn is_subset(&self, other: &CollisionStructure) -> bool {
        self.ground_size == other.ground_size && self.generators.iter().all(|g| other.contains_unchecked(g))
    }

    /// Relabels along a bijection of the ground set.
    pub fn permute(&self, p: &Perm) -> CollisionStructure {
        pushforward(&InjMap::from_perm(p), self).expect("sizes agree")
    }
}

impl fmt::Display for CollisionStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">/{}", self.ground_size)
    }
}

/// Membership test through the generators.
pub fn cs_contains(s: &CollisionStructure, p: &Partition) -> Result<bool> {
    s.contains(p)
}

pub fn pushforward(f: &InjMap, s: &CollisionStructure) -> Result<CollisionStructure> {
    if s.ground_size != f.src_size {
        return Err(Error::arg("pushforward along a map whose source is not the ground set"));
    }
    let gens = s.generators.iter().map(|g| f.push_partition(g)).collect();
    Ok(CollisionStructure::minimalized(f.dst_size, gens))
}

/// `f^*S = {P : f_*P ∈ S}`, by enumeration of the source partitions.
pub fn pullback(f: &InjMap, s: &CollisionStructure) -> Result<CollisionStructure> {
    if s.ground_size != f.dst_size {
        return Err(Error::arg("pullback along a map whose target is not the ground set"));
    }
    let parts = enumerate_partitions(f.src_size)?;
    let members = parts.into_iter().filter(|p| s.contains_unchecked(&f.push_partition(p))).collect();
    Ok(CollisionStructure::minimalized(f.src_size, members))
}

/// `S|_{I₀}` for a subset mask, relabeled increasingly onto `{0..|I₀|-1}`.
pub fn restrict(s: &CollisionStructure, mask: u32) -> Result<CollisionStructure> {
    if mask & !full_mask(s.ground_size) != 0 {
        return Err(Error::arg("restriction to a subset outside the ground set"));
    }
    pullback(&InjMap::inclusion(s.ground_size, mask), s)
}

pub fn disjoint_union(s: &CollisionStructure, t: &CollisionStructure) -> CollisionStructure {
    let (m, n) = (s.ground_size, t.ground_size);
    let left = InjMap { src_size: m, dst_size: m + n, images: (0..m).collect() };
    let right = InjMap { src_size: n, dst_size: m + n, images: (m..m + n).collect() };
    let gens = s
        .generators
        .iter()
        .map(|g| left.push_partition(g))
        .chain(t.generators.iter().map(|g| right.push_partition(g)))
        .collect();
    CollisionStructure::minimalized(m + n, gens)
}

pub fn disjoint_union_all(parts: &[CollisionStructure]) -> CollisionStructure {
    parts.iter().fold(CollisionStructure::trivial(0), |acc, s| disjoint_union(&acc, s))
}

/// Whether `f_*S ⊆ T`.
pub fn is_cs_map(f: &InjMap, s: &CollisionStructure, t: &CollisionStructure) -> Result<bool> {
    if f.src_size != s.ground_size || f.dst_size != t.ground_size {
        return Err(Error::arg("map sizes do not match the collision structures"));
    }
    Ok(s.generators.iter().all(|g| t.contains_unchecked(&f.push_partition(g))))
}

/// One generator `{e | singletons}` per edge.
pub fn cs_from_graph(n: usize, edges: &[(usize, usize)]) -> Result<CollisionStructure> {
    let mut gens = Vec::new();
    for &(a, b) in edges {
        if a >= n || b >= n || a == b {
            return Err(Error::arg(format!("edge ({a},{b}) is not a simple edge on {n} vertices")));
        }
        gens.push(single_block(n, (1 << a) | (1 << b)));
    }
    Ok(CollisionStructure::minimalized(n, gens))
}

/// The partition with one block `mask` and singletons elsewhere.
pub fn single_block(n: usize, mask: u32) -> Partition {
    let labels: Vec<usize> = (0..n).map(|i| if mask & (1 << i) != 0 { n } else { i }).collect();
    Partition::from_labels(&labels)
}

/// One generator per minimal non-face. `faces` must be closed under subsets;
/// the empty face is implicit.
pub fn cs_from_complex(n: usize, faces: &[Vec<usize>]) -> Result<CollisionStructure> {
    caps::check("complex vertex count", n, caps().partitions)?;
    let mut is_face = vec![false; 1usize << n];
    is_face[0] = true;
    for f in faces {
        let mut m = 0u32;
        for &v in f {
            if v >= n {
                return Err(Error::arg(format!("face {f:?} has a vertex outside {n}")));
            }
            m |= 1 << v;
        }
        is_face[m as usize] = true;
    }
    for m in 1..(1u32 << n) {
        if is_face[m as usize] && bits(m).any(|v| !is_face[(m & !(1 << v)) as usize]) {
            return Err(Error::arg(format!("face set is not closed under subsets at {m:#b}")));
        }
    }
    let mut gens = Vec::new();
    for m in 1..(1u32 << n) {
        if !is_face[m as usize] && bits(m).all(|v| is_face[(m & !(1 << v)) as usize]) {
            gens.push(single_block(n, m));
        }
    }
    Ok(CollisionStructure::minimalized(n, gens))
}

/// Faces of the independence complex of a graph.
pub fn independence_complex(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    (1u32..(1u32 << n))
        .filter(|m| edges.iter().all(|&(a, b)| m & (1 << a) == 0 || m & (1 << b) == 0))
        .map(|m| bits(m).collect())
        .collect()
}

/// Every collision structure on `n` elements, i.e. every antichain of `Π_n`.
pub fn all_collision_structures(n: usize) -> Result<Vec<CollisionStructure>> {
    caps::check("collision structure ground set", n, caps().cs)?;
    let parts = enumerate_unchecked(n);
    let k = parts.len();
    let comparable: Vec<Vec<bool>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| refines_unchecked(&parts[i], &parts[j]) || refines_unchecked(&parts[j], &parts[i]))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    fn rec(
        start: usize,
        k: usize,
        comparable: &[Vec<bool>],
        chosen: &mut Vec<usize>,
        parts: &[Partition],
        n: usize,
        out: &mut Vec<CollisionStructure>,
    ) {
        out.push(CollisionStructure {
            ground_size: n,
            generators: chosen.iter().map(|&i| parts[i].clone()).collect(),
        });
        for i in start..k {
            if chosen.iter().all(|&j| !comparable[i][j]) {
                chosen.push(i);
                rec(i + 1, k, comparable, chosen, parts, n, out);
                chosen.pop();
            }
        }
    }
    rec(0, k, &comparable, &mut chosen, &parts, n, &mut out);
    Ok(out)
}

/// A surjection `{0..n-1} → {0..r-1}` as its value list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surjection(pub Vec<usize>);

impl Surjection {
    /// The ordered partition `(p^{-1}(0), …, p^{-1}(r-1))`.
    pub fn blocks(&self, r: usize) -> Vec<u32> {
        let mut out = vec![0u32; r];
        for (i, &j) in self.0.iter().enumerate() {
            out[j] |= 1 << i;
        }
        out
    }

    /// Post-composition with a permutation of the target.
    pub fn relabel(&self, sigma: &Perm) -> Surjection {
        Surjection(self.0.iter().map(|&j| sigma.apply(j)).collect())
    }
}

pub fn surjections(n: usize, r: usize) -> Result<Vec<Surjection>> {
    caps::check("surjection source", n, caps().partitions)?;
    caps::check("surjection target", r, caps().partitions)?;
    let mut out = Vec::new();
    if r > n {
        return Ok(out);
    }
    let total = (r as u64).pow(n as u32);
    for code in 0..total.max(1) {
        if r == 0 {
            if n == 0 {
                out.push(Surjection(Vec::new()));
            }
            break;
        }
        let mut c = code;
        let mut vals = Vec::with_capacity(n);
        for _ in 0..n {
            vals.push((c % r as u64) as usize);
            c /= r as u64;
        }
        vals.reverse();
        let mut hit = vec![false; r];
        for &v in &vals {
            hit[v] = true;
        }
        if hit.iter().all(|&h| h) {
            out.push(Surjection(vals));
        }
    }
    Ok(out)
}

/// Outcome of the finality check for `Surj(I, r) ⊆ (⊔^{(r)} ↓ S)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinalityReport {
    /// Bijective collision maps `⊔ S_j → S` with nonempty `I_j` examined.
    pub objects_checked: usize,
    /// Objects with some empty component; these have no factorization through
    /// a surjection and are only counted.
    pub objects_with_empty_component: usize,
    /// Objects failing unique factorization.
    pub failures: usize,
}

impl FinalityReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Runs the unique-factorization argument over every bijective collision map
/// `S_1 ⊔ … ⊔ S_r → S`.
pub fn finality_check(s: &CollisionStructure, r: usize) -> Result<FinalityReport> {
    let n = s.ground_size;
    caps::check("finality ground set", n, caps().cs.min(4))?;
    caps::check("finality arity", r, 4)?;
    let surjs = surjections(n, r)?;
    let restricted: Vec<Vec<CollisionStructure>> = surjs
        .iter()
        .map(|p| p.blocks(r).iter().map(|&b| restrict(s, b)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let structures: Vec<Vec<CollisionStructure>> =
        (0..=n).map(all_collision_structures).collect::<Result<_>>()?;
    let perms = all_perms(n);
    let mut report = FinalityReport { objects_checked: 0, objects_with_empty_component: 0, failures: 0 };

    for sizes in compositions_weak(n, r) {
        let choices: Vec<&[CollisionStructure]> = sizes.iter().map(|&m| structures[m].as_slice()).collect();
        for combo in cartesian(&choices.iter().map(|c| c.len()).collect::<Vec<_>>()) {
            let comps: Vec<&CollisionStructure> = combo.iter().zip(&choices).map(|(&i, c)| &c[i]).collect();
            let source = disjoint_union_all(&comps.iter().map(|c| (*c).clone()).collect::<Vec<_>>());
            for sigma in &perms {
                let f = InjMap::from_perm(sigma);
                if !is_cs_map(&f, &source, s)? {
                    continue;
                }
                if sizes.contains(&0) {
                    report.objects_with_empty_component += 1;
                    continue;
                }
                report.objects_checked += 1;
                // Components of the source inside ⊔ I_j.
                let mut offsets = Vec::with_capacity(r);
                let mut acc = 0;
                for &m in &sizes {
                    offsets.push(acc);
                    acc += m;
                }
                let factorizations = surjs
                    .iter()
                    .zip(&restricted)
                    .filter(|(p, rest)| {
                        (0..r).all(|j| {
                            let block = p.blocks(r)[j];
                            let imgs: Vec<usize> = (offsets[j]..offsets[j] + sizes[j]).map(|x| f.apply(x)).collect();
                            if imgs.iter().any(|&x| block & (1 << x) == 0) {
                                return false;
                            }
                            let comp = InjMap {
                                src_size: sizes[j],
                                dst_size: popcount_usize(block),
                                images: imgs.iter().map(|&x| crate::perm::rank_in(block, x)).collect(),
                            };
                            is_cs_map(&comp, comps[j], &rest[j]).unwrap_or(false)
                        })
                    })
                    .count();
                if factorizations != 1 {
                    report.failures += 1;
                }
            }
        }
    }
    Ok(report)
}

fn popcount_usize(m: u32) -> usize {
    m.count_ones() as usize
}

/// Sequences of `r` non-negative integers summing to `n`.
pub fn compositions_weak(n: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 0 {
        return if n == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 0..=n {
        for mut tail in compositions_weak(n - first, r - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// All index tuples below the given bounds, in lexicographic order.
pub fn cartesian(bounds: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        let mut next = Vec::with_capacity(out.len() * b);
        for prefix in &out {
            for i in 0..b {
                let mut v = prefix.clone();
                v.push(i);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rgs: &[u8]) -> Partition {
        Partition::from_rgs(rgs.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(0).unwrap(), vec![Partition::discrete(0)]);
        assert_eq!(enumerate_partitions(3).unwrap().len(), 5);
        assert_eq!(enumerate_partitions(4).unwrap().len(), 15);
        for n in 0..8 {
            assert_eq!(enumerate_unchecked(n).len() as u64, bell(n));
        }
        assert!(matches!(enumerate_partitions(11), Err(Error::Size { .. })));
    }

    #[test]
    fn refinement_examples() {
        assert!(refines(&Partition::discrete(3), &p(&[0, 1, 0])).unwrap());
        assert!(refines(&p(&[0, 0, 1]), &p(&[0, 0, 0])).unwrap());
        assert!(!refines(&p(&[0, 0, 1]), &p(&[0, 1, 0])).unwrap());
        assert!(refines(&p(&[0]), &p(&[0, 0])).is_err());
    }

    #[test]
    fn membership_examples() {
        let s = cs_from_graph(2, &[(0, 1)]).unwrap();
        assert!(s.contains(&p(&[0, 0])).unwrap());
        assert!(!s.contains(&Partition::discrete(2)).unwrap());
        assert!(!CollisionStructure::trivial(2).contains(&p(&[0, 0])).unwrap());
    }

    #[test]
    fn pushforward_adds_singletons() {
        let s = CollisionStructure::new(2, vec![p(&[0, 0])]).unwrap();
        let f = InjMap::new(3, vec![0, 1]).unwrap();
        let t = pushforward(&f, &s).unwrap();
        assert_eq!(t.generators(), &[p(&[0, 0, 1])]);
        assert_eq!(pushforward(&InjMap::identity(2), &s).unwrap(), s);
    }

    #[test]
    fn restriction_of_graphs_and_complexes() {
        let k3 = cs_from_graph(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(k3.generators().len(), 3);
        assert_eq!(restrict(&k3, 0b101).unwrap(), cs_from_graph(2, &[(0, 1)]).unwrap());
        // Boundary of a triangle: all edges but not the 2-face.
        let faces: Vec<Vec<usize>> = vec![vec![0], vec![1], vec![2], vec![0, 1], vec![0, 2], vec![1, 2]];
        let k = cs_from_complex(3, &faces).unwrap();
        assert_eq!(k.generators(), &[Partition::indiscrete(3)]);
        let r = restrict(&k, 0b011).unwrap();
        assert!(r.is_trivial());
    }

    #[test]
    fn graph_matches_independence_complex() {
        let edges = [(0, 1), (1, 2), (2, 3)];
        let g = cs_from_graph(4, &edges).unwrap();
        let c = cs_from_complex(4, &independence_complex(4, &edges)).unwrap();
        assert_eq!(g, c);
    }

    #[test]
    fn complex_must_be_closed() {
        assert!(cs_from_complex(2, &[vec![0, 1]]).is_err());
    }

    #[test]
    fn disjoint_union_example() {
        let s = CollisionStructure::new(2, vec![p(&[0, 0])]).unwrap();
        let u = disjoint_union(&s, &s);
        assert_eq!(u.generators(), &[p(&[0, 0, 1, 2]), p(&[0, 1, 2, 2])]);
        assert_eq!(disjoint_union(&s, &CollisionStructure::trivial(0)), s);
    }

    #[test]
    fn surjection_counts() {
        assert_eq!(surjections(3, 2).unwrap().len(), 6);
        assert_eq!(surjections(0, 0).unwrap().len(), 1);
        assert_eq!(surjections(0, 2).unwrap().len(), 0);
        assert_eq!(surjections(4, 3).unwrap().len(), 36);
    }

    #[test]
    fn antichain_counts() {
        assert_eq!(all_collision_structures(0).unwrap().len(), 2);
        assert_eq!(all_collision_structures(1).unwrap().len(), 2);
        assert_eq!(all_collision_structures(2).unwrap().len(), 3);
        assert_eq!(all_collision_structures(3).unwrap().len(), 10);
    }

    #[test]
    fn finality_small() {
        let s = cs_from_graph(3, &[(0, 1)]).unwrap();
        for r in 0..=3 {
            let rep = finality_check(&s, r).unwrap();
            assert!(rep.passed(), "r = {r}: {rep:?}");
        }
    }

    #[test]
    fn join_is_least_upper_bound() {
        let a = p(&[0, 0, 1, 2]);
        let b = p(&[0, 1, 1, 2]);
        assert_eq!(join(&a, &b).unwrap(), p(&[0, 0, 0, 1]));
    }
}
