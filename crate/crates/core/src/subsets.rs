//! Small enumeration helpers: k-subsets in lexicographic order.

/// Visit all k-element index subsets of 0..n in lexicographic order.
/// The callback returns `false` to stop early; the function reports
/// whether enumeration ran to completion.
pub fn for_each_combination<F>(n: usize, k: usize, mut f: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if k > n {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return false;
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return true;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Collect all k-subsets of the given slice, lexicographic by position.
pub fn combinations<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    for_each_combination(items.len(), k, |idx| {
        out.push(idx.iter().map(|&i| items[i].clone()).collect());
        true
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_and_count() {
        let got = combinations(&[0, 1, 2, 3], 2);
        assert_eq!(
            got,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(&[1, 2, 3], 0), vec![Vec::<i32>::new()]);
        assert_eq!(combinations(&[1, 2], 3), Vec::<Vec<i32>>::new());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn binom(n: usize, k: usize) -> usize {
            if k > n {
                return 0;
            }
            (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
        }

        proptest! {
            #[test]
            fn count_and_order(n in 0usize..10, k in 0usize..10) {
                let mut seen: Vec<Vec<usize>> = Vec::new();
                for_each_combination(n, k, |idx| {
                    seen.push(idx.to_vec());
                    true
                });
                prop_assert_eq!(seen.len(), binom(n, k));
                // strictly increasing within, lexicographic across
                for w in seen.windows(2) {
                    prop_assert!(w[0] < w[1]);
                }
                for idx in &seen {
                    for w in idx.windows(2) {
                        prop_assert!(w[0] < w[1]);
                    }
                }
            }
        }
    }

    #[test]
    fn early_stop() {
        let mut seen = 0;
        let complete = for_each_combination(5, 2, |_| {
            seen += 1;
            seen < 3
        });
        assert!(!complete);
        assert_eq!(seen, 3);
    }
}
