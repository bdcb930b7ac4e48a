//! Small helpers for vertex sets stored as `u32` bitmasks.

/// Vertex set over at most [`crate::graph::MAX_ORDER`] vertices.
pub type VertexMask = u32;

#[inline]
pub fn bit(v: usize) -> VertexMask {
    1 << v
}

#[inline]
pub fn full(n: usize) -> VertexMask {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Iterates the set bits of `mask` in increasing order.
#[inline]
pub fn iter(mut mask: VertexMask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub fn from_slice(vs: &[usize]) -> VertexMask {
    vs.iter().fold(0, |m, &v| m | bit(v))
}

pub fn to_vec(mask: VertexMask) -> Vec<usize> {
    iter(mask).collect()
}

/// All subsets of `universe` with exactly `k` elements, in increasing
/// numeric order of the mask.
pub fn subsets_of_size(universe: VertexMask, k: usize) -> Vec<VertexMask> {
    fn go(elems: &[usize], k: usize, acc: VertexMask, out: &mut Vec<VertexMask>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        if elems.len() < k {
            return;
        }
        go(&elems[1..], k - 1, acc | bit(elems[0]), out);
        go(&elems[1..], k, acc, out);
    }
    let elems = to_vec(universe);
    let mut out = Vec::new();
    go(&elems, k, 0, &mut out);
    out.sort_unstable();
    out
}
