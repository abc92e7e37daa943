//! Word-level helpers for bitset rows stored as `&[u64]` slices.
//!
//! All graph and vertex-set operations reduce to these; keeping them in one
//! place makes the word-parallel code paths easy to audit.

/// Number of 64-bit words needed to hold `n` bits.
#[inline(always)]
pub fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Mask selecting the valid low bits of the last word for an `n`-bit set.
/// All-ones when `n` is a multiple of 64 (including n = 0, where no word exists).
#[inline(always)]
pub fn tail_mask(n: usize) -> u64 {
    if n % 64 == 0 {
        !0
    } else {
        (1u64 << (n % 64)) - 1
    }
}

#[inline(always)]
pub fn get(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}

#[inline(always)]
pub fn set(words: &mut [u64], i: usize) {
    words[i / 64] |= 1u64 << (i % 64);
}

#[inline(always)]
pub fn clear(words: &mut [u64], i: usize) {
    words[i / 64] &= !(1u64 << (i % 64));
}

#[inline(always)]
pub fn count(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

#[inline(always)]
pub fn is_empty(words: &[u64]) -> bool {
    words.iter().all(|&w| w == 0)
}

/// True when `a` and `b` share at least one set bit.
#[inline(always)]
pub fn intersects(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).any(|(x, y)| x & y != 0)
}

#[inline(always)]
pub fn and_into(a: &[u64], b: &[u64], out: &mut [u64]) {
    for ((x, y), o) in a.iter().zip(b).zip(out.iter_mut()) {
        *o = x & y;
    }
}

#[inline(always)]
pub fn and_assign(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x &= y;
    }
}

#[inline(always)]
pub fn or_assign(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x |= y;
    }
}

/// a &= !b
#[inline(always)]
pub fn and_not_assign(a: &mut [u64], b: &[u64]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x &= !y;
    }
}

/// Index of the lowest set bit, if any.
#[inline(always)]
pub fn first(words: &[u64]) -> Option<usize> {
    for (k, &w) in words.iter().enumerate() {
        if w != 0 {
            return Some(k * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

/// Iterate set-bit indices in ascending order.
pub fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(k, &w)| {
        std::iter::successors(
            if w == 0 { None } else { Some(w) },
            |&r| {
                let r = r & (r - 1);
                if r == 0 {
                    None
                } else {
                    Some(r)
                }
            },
        )
        .map(move |r| k * 64 + r.trailing_zeros() as usize)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tail_mask_boundaries() {
        assert_eq!(tail_mask(1), 1);
        assert_eq!(tail_mask(64), !0);
        assert_eq!(tail_mask(65), 1);
        assert_eq!(tail_mask(0), !0);
    }

    #[test]
    fn iter_ones_matches_get() {
        let mut w = vec![0u64; 3];
        for i in [0, 1, 63, 64, 70, 128, 170] {
            set(&mut w, i);
        }
        let got: Vec<usize> = iter_ones(&w).collect();
        assert_eq!(got, vec![0, 1, 63, 64, 70, 128, 170]);
        assert_eq!(count(&w), 7);
        assert_eq!(first(&w), Some(0));
        clear(&mut w, 0);
        assert_eq!(first(&w), Some(1));
    }
}
