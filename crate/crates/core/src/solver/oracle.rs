//! Brute-force reference for `χ_la`: every bijection, no pruning.

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NaiveResult {
    /// `None` when no bijection is proper (or the graph has no edges).
    pub chi_la: Option<usize>,
    /// The lexicographically first labeling attaining `chi_la`.
    pub witness: Option<Vec<u64>>,
    pub permutations: u64,
}

fn next_permutation(a: &mut [u64]) -> bool {
    let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) else {
        return false;
    };
    let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).expect("a[i] qualifies");
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

fn distinct_proper_sums(g: &Graph, labels: &[u64], sums: &mut [u64]) -> Option<usize> {
    sums.iter_mut().for_each(|s| *s = 0);
    for (&(u, v), &l) in g.edges().iter().zip(labels) {
        sums[u] += l;
        sums[v] += l;
    }
    if g.edges().iter().any(|&(u, v)| sums[u] == sums[v]) {
        return None;
    }
    let mut seen: Vec<u64> = sums.to_vec();
    seen.sort_unstable();
    seen.dedup();
    Some(seen.len())
}

/// Enumerates all `q!` labelings in lexicographic order. Meant for `q <= 9`.
pub fn chi_la_naive(g: &Graph) -> NaiveResult {
    let q = g.size() as u64;
    let mut best: Option<(usize, Vec<u64>)> = None;
    let mut permutations = 0;
    if q > 0 {
        let mut perm: Vec<u64> = (1..=q).collect();
        let mut sums = vec![0; g.order()];
        loop {
            permutations += 1;
            if let Some(c) = distinct_proper_sums(g, &perm, &mut sums) {
                if best.as_ref().is_none_or(|(b, _)| c < *b) {
                    best = Some((c, perm.clone()));
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
    }
    NaiveResult {
        chi_la: best.as_ref().map(|b| b.0),
        witness: best.map(|b| b.1),
        permutations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_count() {
        let mut a = vec![1, 2, 3, 4];
        let mut n = 1;
        while next_permutation(&mut a) {
            n += 1;
        }
        assert_eq!(n, 24);
        assert_eq!(a, vec![4, 3, 2, 1]);
    }

    #[test]
    fn triangle_and_path() {
        let c3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let r = chi_la_naive(&c3);
        assert_eq!(r.chi_la, Some(3));
        assert_eq!(r.permutations, 6);
        // P3: the two leaves carry distinct labels, the centre their total
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(chi_la_naive(&p3).chi_la, Some(3));
        let k2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(chi_la_naive(&k2).chi_la, None);
    }
}
