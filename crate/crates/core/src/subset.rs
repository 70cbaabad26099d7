//! Bitmask subsets of the ground set `{1..d}`.
//!
//! Element `i` is stored in bit `i - 1`, so the subset index is `Σ 2^(i-1)`.

pub type Mask = u32;

/// Largest supported ground set.
pub const MAX_D: usize = 16;

#[inline]
pub fn full(d: usize) -> Mask {
    if d == 0 {
        0
    } else {
        Mask::MAX >> (32 - d)
    }
}

#[inline]
pub fn card(a: Mask) -> usize {
    a.count_ones() as usize
}

#[inline]
pub fn is_subset(a: Mask, b: Mask) -> bool {
    a & !b == 0
}

/// Zero-based element indices of `a`, ascending.
pub fn elements(a: Mask) -> impl Iterator<Item = usize> {
    let mut rest = a;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

/// All subsets of `a`, including `0` and `a`, in increasing numeric order.
pub fn subsets_of(a: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(0 as Mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == a { None } else { Some((cur.wrapping_sub(a)) & a) };
        Some(cur)
    })
}

/// Subsets of `{1..d}` ordered by cardinality, then by numeric value.
pub fn by_cardinality(d: usize) -> Vec<Mask> {
    let mut all: Vec<Mask> = (0..=full(d)).collect();
    all.sort_by_key(|&a| (card(a), a));
    all
}

/// Compress `c ⊆ within` to an initial segment, preserving order.
pub fn compress(c: Mask, within: Mask) -> Mask {
    let mut out = 0;
    for (pos, i) in elements(within).enumerate() {
        if c >> i & 1 == 1 {
            out |= 1 << pos;
        }
    }
    out
}

/// Inverse of [`compress`]: spread an initial-segment subset onto `within`.
pub fn expand(c: Mask, within: Mask) -> Mask {
    let mut out = 0;
    for (pos, i) in elements(within).enumerate() {
        if c >> pos & 1 == 1 {
            out |= 1 << i;
        }
    }
    out
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (0..n).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
}

/// Image of `a` under the element map `perm` (old index -> new index).
pub fn permute(a: Mask, perm: &[usize]) -> Mask {
    elements(a).fold(0, |m, i| m | 1 << perm[i])
}

/// Human-readable form, one-based: `{1,3}`.
pub fn show(a: Mask) -> String {
    let parts: Vec<String> = elements(a).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Parse a one-based element list into a mask.
pub fn from_elements(items: &[usize]) -> Mask {
    items.iter().fold(0, |m, &i| m | 1 << (i - 1))
}
