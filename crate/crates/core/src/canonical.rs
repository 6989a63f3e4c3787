//! Canonical labelling of finite posets up to isomorphism.
//!
//! Elements are first coloured by order invariants (down-set size, up-set
//! size, cover degrees). The colouring is refined until stable: each element's
//! new colour is its old colour plus the sorted colours strictly below and
//! strictly above it. Remaining symmetry is broken by individualising one
//! element of the first non-singleton cell and refining again, over every
//! choice, keeping the permutation whose relation table is lexicographically
//! smallest. Elements with identical strict up- and down-sets are
//! interchangeable, so only one of them is tried per cell.
//!
//! Colours start with down-set size, so every canonical order is a linear
//! extension.

use crate::poset::FinitePoset;

/// Row-major relation table packed MSB-first, so `Ord` is the lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate {
    n: usize,
    bits: Vec<u64>,
}

impl Certificate {
    fn of(p: &FinitePoset, order: &[usize]) -> Certificate {
        let n = order.len();
        let mut bits = vec![0u64; (n * n).div_ceil(64)];
        for (k, &a) in order.iter().enumerate() {
            for (l, &b) in order.iter().enumerate() {
                if p.leq(a, b) {
                    let pos = k * n + l;
                    bits[pos / 64] |= 1 << (63 - pos % 64);
                }
            }
        }
        Certificate { n, bits }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

fn distinct(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

fn refine(p: &FinitePoset, colors: &mut Vec<usize>) {
    loop {
        let before = distinct(colors);
        let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..p.len())
            .map(|x| {
                let mut below: Vec<usize> = p.down_set(x).iter().filter(|&y| y != x).map(|y| colors[y]).collect();
                let mut above: Vec<usize> = p.up_set(x).iter().filter(|&y| y != x).map(|y| colors[y]).collect();
                below.sort_unstable();
                above.sort_unstable();
                (colors[x], below, above)
            })
            .collect();
        *colors = rank(&sigs);
        if distinct(colors) == before {
            return;
        }
    }
}

fn initial_colors(p: &FinitePoset) -> Vec<usize> {
    let (lower, upper) = p.cover_degrees();
    let keys: Vec<(usize, usize, usize, usize)> = (0..p.len())
        .map(|x| (p.down_set(x).count(), p.up_set(x).count(), lower[x], upper[x]))
        .collect();
    rank(&keys)
}

fn twins(p: &FinitePoset, a: usize, b: usize) -> bool {
    let strict = |s: &crate::subset::Subset, x: usize| {
        let mut s = s.clone();
        s.remove(x);
        s
    };
    !p.leq(a, b)
        && !p.leq(b, a)
        && strict(p.up_set(a), a) == strict(p.up_set(b), b)
        && strict(p.down_set(a), a) == strict(p.down_set(b), b)
}

fn search(p: &FinitePoset, mut colors: Vec<usize>, best: &mut Option<(Certificate, Vec<usize>)>) {
    refine(p, &mut colors);
    let n = p.len();
    if distinct(&colors) == n {
        let mut order = vec![0; n];
        for (x, &c) in colors.iter().enumerate() {
            order[c] = x;
        }
        let cert = Certificate::of(p, &order);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, order));
        }
        return;
    }
    let mut sizes = vec![0usize; distinct(&colors)];
    for &c in &colors {
        sizes[c] += 1;
    }
    let target = sizes.iter().position(|&s| s > 1).expect("non-discrete colouring");
    let mut tried: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&x| colors[x] == target) {
        if tried.iter().any(|&u| twins(p, u, v)) {
            continue;
        }
        tried.push(v);
        let keys: Vec<(usize, bool)> = (0..n).map(|x| (colors[x], x != v)).collect();
        search(p, rank(&keys), best);
    }
}

/// Canonical element order: position `k` holds original element `order[k]`.
pub fn canonical_order(p: &FinitePoset) -> Vec<usize> {
    if p.is_empty() {
        return Vec::new();
    }
    let mut best = None;
    search(p, initial_colors(p), &mut best);
    best.expect("at least one leaf").1
}

/// Isomorphism-complete certificate: equal iff the posets are isomorphic.
pub fn certificate(p: &FinitePoset) -> Certificate {
    Certificate::of(p, &canonical_order(p))
}

/// The canonical representative: canonically ordered, labelled `0..n`.
pub fn canonical_form(p: &FinitePoset) -> FinitePoset {
    let ordered = p.permuted(&canonical_order(p));
    let labels = (0..p.len()).map(|i| i.to_string()).collect();
    ordered.with_labels(labels).expect("numeric labels are distinct")
}

/// Canonically ordered but keeping the original labels.
pub fn canonically_ordered(p: &FinitePoset) -> FinitePoset {
    p.permuted(&canonical_order(p))
}

pub fn is_isomorphic(p: &FinitePoset, q: &FinitePoset) -> bool {
    p.len() == q.len() && p.hasse().len() == q.hasse().len() && certificate(p) == certificate(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::BuildMode;

    fn poset(labels: &[&str], covers: &[(&str, &str)]) -> FinitePoset {
        FinitePoset::build("t", labels, covers, BuildMode::Covers).unwrap()
    }

    #[test]
    fn relabelled_chains_share_a_canonical_form() {
        let a = poset(&["x", "y"], &[("x", "y")]);
        let b = poset(&["q", "p"], &[("p", "q")]);
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert!(is_isomorphic(&a, &b));
    }

    #[test]
    fn chain_vs_antichain() {
        let c = poset(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let a = poset(&["a", "b", "c"], &[]);
        assert!(!is_isomorphic(&c, &a));
    }

    #[test]
    fn m3_vs_n5_and_self_duality_of_n5() {
        let m3 = poset(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        );
        let n5 = poset(
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        );
        assert!(!is_isomorphic(&m3, &n5));
        assert!(is_isomorphic(&n5, &n5.dual()));
        assert!(is_isomorphic(&m3, &m3.dual()));
    }

    #[test]
    fn canonical_order_is_a_linear_extension_and_idempotent() {
        let p = poset(&["d", "c", "b", "a"], &[("a", "b"), ("a", "c"), ("b", "d")]);
        let c = canonical_form(&p);
        for i in 0..c.len() {
            for j in 0..c.len() {
                if c.leq(i, j) {
                    assert!(i <= j);
                }
            }
        }
        assert_eq!(canonical_form(&c), c);
    }

    #[test]
    fn large_symmetric_posets_finish() {
        let labels: Vec<String> = (0..20).map(|i| format!("e{i}")).collect();
        let anti = FinitePoset::from_index_pairs("anti", labels, &[]).unwrap();
        assert_eq!(canonical_order(&anti).len(), 20);
    }
}
