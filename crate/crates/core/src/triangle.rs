//! Indexing helpers for arrays labelled by pairs `1 <= i < j <= n`.

/// Number of pairs `i < j` in `[1, n]`.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `(i, j)` in lexicographic pair order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n, "bad pair ({i},{j}) for n={n}");
    // pairs (t, *) for t < i come first
    let before: usize = (1..i).map(|t| n - t).sum();
    before + (j - i - 1)
}

/// All pairs in lexicographic order.
pub fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_matches_enumeration() {
        for n in 2..8 {
            for (pos, (i, j)) in pairs(n).enumerate() {
                assert_eq!(pair_index(n, i, j), pos);
            }
            assert_eq!(pairs(n).count(), pair_count(n));
        }
    }
}
