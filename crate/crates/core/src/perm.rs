//! Permutations in one-line notation and the subset bookkeeping used by Day
//! convolution. Subsets of `{0..k-1}` are `u32` bit masks.

/// `p[i]` is the image of `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Perm(inv)
    }

    /// Transposition of `i` and `i + 1`.
    pub fn adjacent(n: usize, i: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.0.swap(i, i + 1);
        p
    }

    pub fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        for &x in &self.0 {
            if x >= seen.len() || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    pub fn inversions(&self) -> usize {
        let p = &self.0;
        let mut n = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    n += 1;
                }
            }
        }
        n
    }

    pub fn sign(&self) -> i64 {
        if self.inversions().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// A word in adjacent transpositions for `self`. Entry `i` stands for the
    /// swap of `i - 1` and `i`; acting by the entries in the returned order
    /// acts by `self`.
    pub fn adjacent_word(&self) -> Vec<usize> {
        let mut w = self.0.clone();
        let mut word = Vec::new();
        let n = w.len();
        for end in (1..n).rev() {
            for j in 1..=end {
                if w[j - 1] > w[j] {
                    w.swap(j - 1, j);
                    word.push(j);
                }
            }
        }
        word
    }

    /// Image of a subset mask.
    pub fn image_mask(&self, mask: u32) -> u32 {
        let mut out = 0;
        for i in bits(mask) {
            out |= 1 << self.0[i];
        }
        out
    }

    /// The permutation of `{0..|S|-1}` that `self` induces between `S` and
    /// `self(S)`, both ordered increasingly.
    pub fn induced(&self, mask: u32) -> Perm {
        let img = self.image_mask(mask);
        Perm(bits(mask).map(|i| rank_in(img, self.0[i])).collect())
    }
}

/// All permutations of `{0..n-1}` in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
        if cur.len() == n {
            out.push(Perm(cur.clone()));
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(n, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Set bits of a mask in increasing order.
pub fn bits(mask: u32) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub fn full_mask(k: usize) -> u32 {
    if k == 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

pub fn popcount(mask: u32) -> usize {
    mask.count_ones() as usize
}

/// Position of element `x` inside `mask`.
pub fn rank_in(mask: u32, x: usize) -> usize {
    (mask & ((1u32 << x) - 1)).count_ones() as usize
}

/// The `j`-th element of `mask`.
pub fn select(mask: u32, j: usize) -> usize {
    bits(mask).nth(j).expect("select out of range")
}

/// Relabels a mask on `{0..|outer|-1}` into the positions of `outer`.
pub fn embed_mask(inner: u32, outer: u32) -> u32 {
    let mut out = 0;
    for (j, x) in bits(outer).enumerate() {
        if inner & (1 << j) != 0 {
            out |= 1 << x;
        }
    }
    out
}

/// Inverse of [`embed_mask`]: positions of `sub` inside `outer`.
pub fn relative_mask(sub: u32, outer: u32) -> u32 {
    debug_assert_eq!(sub & !outer, 0);
    let mut out = 0;
    for (j, x) in bits(outer).enumerate() {
        if sub & (1 << x) != 0 {
            out |= 1 << j;
        }
    }
    out
}

/// The shuffle of `{0..k-1}` carrying `{0..|S|-1}` onto `S` and the rest onto
/// the complement, both order-preservingly.
pub fn shuffle_perm(k: usize, s: u32) -> Perm {
    let t = full_mask(k) & !s;
    Perm(bits(s).chain(bits(t)).collect())
}

/// Subsets of `mask` with exactly `size` elements, in increasing numeric order.
pub fn subsets_of_size(mask: u32, size: usize) -> Vec<u32> {
    let elems: Vec<usize> = bits(mask).collect();
    let mut out = Vec::new();
    if size > elems.len() {
        return out;
    }
    let n = elems.len();
    for local in 0u32..(1u32 << n) {
        if popcount(local) == size {
            out.push(embed_mask(local, mask));
        }
    }
    out.sort_unstable();
    out
}

/// All subsets of `mask` in increasing numeric order.
pub fn all_subsets(mask: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut s = 0u32;
    loop {
        out.push(s);
        if s == mask {
            break;
        }
        s = (s.wrapping_sub(mask)) & mask;
    }
    out
}

/// Set partitions of `mask` into nonempty blocks, each listed with blocks
/// ordered by their least element.
pub fn set_partitions(mask: u32) -> Vec<Vec<u32>> {
    if mask == 0 {
        return vec![Vec::new()];
    }
    let low = mask & mask.wrapping_neg();
    let rest = mask & !low;
    let mut out = Vec::new();
    for sub in all_subsets(rest) {
        let block = low | sub;
        for mut tail in set_partitions(rest & !sub) {
            tail.insert(0, block);
            out.push(tail);
        }
    }
    out.sort();
    out
}

/// Ordered decompositions of `mask` into `r` possibly empty blocks.
pub fn ordered_decompositions(mask: u32, r: usize) -> Vec<Vec<u32>> {
    if r == 0 {
        return if mask == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    if r == 1 {
        return vec![vec![mask]];
    }
    let mut out = Vec::new();
    for first in all_subsets(mask) {
        for mut tail in ordered_decompositions(mask & !first, r - 1) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Least element of a nonempty mask.
pub fn min_elem(mask: u32) -> usize {
    mask.trailing_zeros() as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacent_word_reconstructs() {
        for p in all_perms(4) {
            let mut acc = Perm::identity(4);
            for i in p.adjacent_word() {
                acc = Perm::adjacent(4, i - 1).compose(&acc);
            }
            assert_eq!(acc, p);
        }
    }

    #[test]
    fn counts() {
        assert_eq!(all_perms(4).len(), 24);
        assert_eq!(set_partitions(full_mask(4)).len(), 15);
        assert_eq!(ordered_decompositions(full_mask(3), 2).len(), 8);
        assert_eq!(subsets_of_size(0b10110, 2), vec![0b00110, 0b10010, 0b10100]);
    }

    #[test]
    fn induced_and_shuffle() {
        let s = shuffle_perm(4, 0b1010);
        assert_eq!(s.0, vec![1, 3, 0, 2]);
        let p = Perm(vec![2, 0, 3, 1]);
        // Both {0,2} and {1,3} keep their order.
        assert!(p.induced(0b0101).is_identity());
        assert_eq!(p.induced(0b1010).0, vec![0, 1]);
        let q = Perm(vec![3, 0, 1, 2]);
        assert_eq!(q.induced(0b0011).0, vec![1, 0]);
    }

    #[test]
    fn masks_roundtrip() {
        assert_eq!(embed_mask(0b101, 0b11010), 0b10010);
        assert_eq!(relative_mask(0b10010, 0b11010), 0b101);
        assert_eq!(all_subsets(0b101), vec![0, 1, 4, 5]);
    }
}
