//! Small shared helpers.

/// Calls `f` with every size-`r` combination of `0..n` in lexicographic
/// order. Returning `false` from `f` stops the enumeration early.
pub(crate) fn for_each_combination(n: usize, r: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if r > n {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        if !f(&idx) {
            return;
        }
        // Rightmost position that can still advance.
        let mut i = r;
        while i > 0 && idx[i - 1] == i - 1 + n - r {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_binomials() {
        let mut count = 0usize;
        for_each_combination(13, 5, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 1287);

        count = 0;
        for_each_combination(13, 9, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 715);

        count = 0;
        for_each_combination(4, 0, |c| {
            assert!(c.is_empty());
            count += 1;
            true
        });
        assert_eq!(count, 1);

        count = 0;
        for_each_combination(3, 5, |_| {
            count += 1;
            true
        });
        assert_eq!(count, 0);
    }

    #[test]
    fn lexicographic_order_and_early_stop() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut n = 0;
        for_each_combination(4, 2, |_| {
            n += 1;
            n < 3
        });
        assert_eq!(n, 3);
    }
}
