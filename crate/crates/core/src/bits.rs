//! Helpers for `u64` vertex masks.

/// Iterates the set bits of a mask, lowest first.
#[derive(Clone, Copy)]
pub(crate) struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

#[inline]
pub(crate) fn full(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Union of the neighbourhoods of every vertex in `set`.
#[inline]
pub(crate) fn neighbourhood(adj: &[u64], set: u64) -> u64 {
    Bits(set).fold(0, |acc, v| acc | adj[v])
}
