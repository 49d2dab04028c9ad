//! Index bookkeeping for exterior-power bases: strictly increasing tuples in
//! lexicographic order, their ranks, and permutation signs.

/// Binomial coefficient C(n, k), zero when k > n.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (n - i) as u128;
        den *= (i + 1) as u128;
    }
    usize::try_from(num / den).expect("binomial fits usize")
}

/// All strictly increasing k-tuples with entries in 0..dim, lexicographic.
/// k = 0 yields the single empty tuple.
pub fn increasing_tuples(dim: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binomial(dim, k));
    let mut cur = Vec::with_capacity(k);
    fn rec(dim: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let remaining = k - cur.len();
        for i in start..=dim.saturating_sub(remaining) {
            cur.push(i);
            rec(dim, k, i + 1, cur, out);
            cur.pop();
        }
    }
    if k <= dim {
        rec(dim, k, 0, &mut cur, &mut out);
    }
    out
}

/// Lexicographic rank of a strictly increasing tuple with entries in 0..dim.
pub fn tuple_rank(tuple: &[usize], dim: usize) -> usize {
    let k = tuple.len();
    let mut rank = 0;
    let mut prev: isize = -1;
    for (p, &t) in tuple.iter().enumerate() {
        for c in (prev + 1) as usize..t {
            rank += binomial(dim - 1 - c, k - 1 - p);
        }
        prev = t as isize;
    }
    rank
}

/// Sorts the indices ascending in place and returns the permutation sign, or
/// None when an index repeats (the alternating evaluation is then zero).
pub fn sort_with_sign(idx: &mut [usize]) -> Option<i64> {
    let mut sign = 1i64;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_table() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(4, 0), 1);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }

    #[test]
    fn tuples_are_lexicographic_and_ranked() {
        for dim in 0..6 {
            for k in 0..5 {
                let tuples = increasing_tuples(dim, k);
                assert_eq!(tuples.len(), binomial(dim, k));
                let mut sorted = tuples.clone();
                sorted.sort();
                assert_eq!(tuples, sorted);
                for (pos, t) in tuples.iter().enumerate() {
                    assert_eq!(tuple_rank(t, dim), pos, "rank of {t:?} in dim {dim}");
                }
            }
        }
    }

    #[test]
    fn signs_count_inversions() {
        let mut a = vec![2, 0, 1];
        assert_eq!(sort_with_sign(&mut a), Some(1));
        assert_eq!(a, vec![0, 1, 2]);
        let mut b = vec![1, 0];
        assert_eq!(sort_with_sign(&mut b), Some(-1));
        let mut c = vec![1, 1];
        assert_eq!(sort_with_sign(&mut c), None);
        let mut d: Vec<usize> = vec![];
        assert_eq!(sort_with_sign(&mut d), Some(1));
    }
}
