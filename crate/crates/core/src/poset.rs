//! Finite partially ordered sets.

use std::collections::HashMap;

use crate::error::{OrderError, Result};
use crate::limits;
use crate::subset::{all_subsets, Subset};

/// How the pairs handed to [`FinitePoset::build`] are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildMode {
    /// Each pair `(x, y)` says `x` is covered by `y`; reflexive pairs are rejected.
    Covers,
    /// Each pair `(x, y)` says `x <= y`.
    Relation,
}

/// A finite poset stored as one up-set and one down-set bitmap per element.
///
/// Values are immutable once built. Equality compares labels and the order
/// relation; the name is metadata and is ignored.
#[derive(Clone)]
pub struct FinitePoset {
    name: String,
    labels: Vec<String>,
    up: Vec<Subset>,
    down: Vec<Subset>,
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl Eq for FinitePoset {}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let covers: Vec<_> = self
            .hasse()
            .into_iter()
            .map(|(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("FinitePoset")
            .field("name", &self.name)
            .field("labels", &self.labels)
            .field("covers", &covers)
            .finish()
    }
}

/// A directed subset together with its supremum, when one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectedSet {
    pub members: Subset,
    pub sup: Option<usize>,
}

impl FinitePoset {
    /// Builds a poset from labelled pairs, taking the reflexive-transitive closure.
    pub fn build<L, P>(name: &str, labels: &[L], pairs: &[(P, P)], mode: BuildMode) -> Result<Self>
    where
        L: AsRef<str>,
        P: AsRef<str>,
    {
        let labels: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.as_str(), i).is_some() {
                return Err(OrderError::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| OrderError::UnknownLabel(l.to_string()))
        };
        let mut idx_pairs = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let (a, b) = (lookup(a.as_ref())?, lookup(b.as_ref())?);
            if mode == BuildMode::Covers && a == b {
                return Err(OrderError::ReflexiveCover(labels[a].clone()));
            }
            idx_pairs.push((a, b));
        }
        Self::from_index_pairs(name, labels, &idx_pairs)
    }

    /// Builds a poset from index pairs `(i, j)` meaning `i <= j`, closing reflexively and transitively.
    pub fn from_index_pairs(name: &str, labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut up: Vec<Subset> = (0..n).map(|i| Subset::singleton(n, i)).collect();
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(OrderError::InvalidRelation(format!("pair ({a}, {b}) out of range")));
            }
            up[a].insert(b);
        }
        // Warshall over bit rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    let (a, b) = (i.min(j), i.max(j));
                    return Err(OrderError::Cycle {
                        a: labels[a].clone(),
                        b: labels[b].clone(),
                    });
                }
            }
        }
        Ok(Self::from_up_sets(name.to_string(), labels, up))
    }

    /// Builds a poset from a full `leq` table, validating all three axioms.
    pub fn from_relation(name: &str, labels: Vec<String>, leq: &[Vec<bool>]) -> Result<Self> {
        let n = labels.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(OrderError::InvalidRelation("table shape does not match labels".into()));
        }
        let up: Vec<Subset> = leq
            .iter()
            .map(|row| Subset::from_indices(n, (0..n).filter(|&j| row[j])))
            .collect();
        let p = Self::from_up_sets(name.to_string(), labels, up);
        p.validate()?;
        Ok(p)
    }

    pub(crate) fn from_up_sets(name: String, labels: Vec<String>, up: Vec<Subset>) -> Self {
        let n = labels.len();
        let mut down: Vec<Subset> = (0..n).map(|_| Subset::empty(n)).collect();
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j].insert(i);
            }
        }
        FinitePoset { name, labels, up, down }
    }

    /// Checks reflexivity, antisymmetry, transitivity and label distinctness.
    pub fn validate(&self) -> Result<()> {
        let n = self.len();
        let mut seen = std::collections::HashSet::new();
        for l in &self.labels {
            if !seen.insert(l) {
                return Err(OrderError::DuplicateLabel(l.clone()));
            }
        }
        for i in 0..n {
            if !self.leq(i, i) {
                return Err(OrderError::InvalidRelation(format!(
                    "{} is not <= itself",
                    self.labels[i]
                )));
            }
            for j in self.up[i].iter() {
                if j != i && self.leq(j, i) {
                    return Err(OrderError::Cycle {
                        a: self.labels[i.min(j)].clone(),
                        b: self.labels[i.max(j)].clone(),
                    });
                }
                if !self.up[j].is_subset_of(&self.up[i]) {
                    return Err(OrderError::InvalidRelation(format!(
                        "not transitive through {} <= {}",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    /// `↑x` as a subset.
    pub fn up_set(&self, x: usize) -> &Subset {
        &self.up[x]
    }

    /// `↓x` as a subset.
    pub fn down_set(&self, x: usize) -> &Subset {
        &self.down[x]
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn empty_subset(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn subset<I: IntoIterator<Item = usize>>(&self, items: I) -> Subset {
        Subset::from_indices(self.len(), items)
    }

    /// Subset from labels; unknown labels are an error.
    pub fn subset_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Subset> {
        let mut s = self.empty_subset();
        for l in labels {
            let i = self
                .index_of(l.as_ref())
                .ok_or_else(|| OrderError::UnknownLabel(l.as_ref().to_string()))?;
            s.insert(i);
        }
        Ok(s)
    }

    fn check_owner(&self, s: &Subset) {
        assert_eq!(
            s.universe(),
            self.len(),
            "subset belongs to a carrier of a different size"
        );
    }

    pub fn up_closure(&self, s: &Subset) -> Subset {
        self.check_owner(s);
        let mut out = self.empty_subset();
        for x in s.iter() {
            out.union_with(&self.up[x]);
        }
        out
    }

    pub fn down_closure(&self, s: &Subset) -> Subset {
        self.check_owner(s);
        let mut out = self.empty_subset();
        for x in s.iter() {
            out.union_with(&self.down[x]);
        }
        out
    }

    pub fn is_upper(&self, s: &Subset) -> bool {
        s.iter().all(|x| self.up[x].is_subset_of(s))
    }

    pub fn is_lower(&self, s: &Subset) -> bool {
        s.iter().all(|x| self.down[x].is_subset_of(s))
    }

    /// Nonempty, and every pair of members has an upper bound among the members.
    pub fn is_directed(&self, s: &Subset) -> bool {
        self.check_owner(s);
        if s.is_empty() {
            return false;
        }
        let members: Vec<usize> = s.iter().collect();
        members.iter().enumerate().all(|(k, &a)| {
            members[k + 1..]
                .iter()
                .all(|&b| self.up[a].intersection(&self.up[b]).intersects(s))
        })
    }

    pub fn upper_bounds(&self, s: &Subset) -> Subset {
        self.check_owner(s);
        let mut out = self.carrier();
        for x in s.iter() {
            out.intersect_with(&self.up[x]);
        }
        out
    }

    pub fn lower_bounds(&self, s: &Subset) -> Subset {
        self.check_owner(s);
        let mut out = self.carrier();
        for x in s.iter() {
            out.intersect_with(&self.down[x]);
        }
        out
    }

    /// Least element of `s`, if it has one.
    pub fn least(&self, s: &Subset) -> Option<usize> {
        s.iter().find(|&u| s.is_subset_of(&self.up[u]))
    }

    /// Greatest element of `s`, if it has one.
    pub fn greatest(&self, s: &Subset) -> Option<usize> {
        s.iter().find(|&u| s.is_subset_of(&self.down[u]))
    }

    /// Least upper bound of `s`. `sup(∅)` is the bottom element when there is one.
    pub fn sup(&self, s: &Subset) -> Option<usize> {
        self.least(&self.upper_bounds(s))
    }

    pub fn inf(&self, s: &Subset) -> Option<usize> {
        self.greatest(&self.lower_bounds(s))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least(&self.carrier())
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest(&self.carrier())
    }

    pub fn minimal_elements(&self, s: &Subset) -> Subset {
        let mut out = self.empty_subset();
        for x in s.iter() {
            if self.down[x].intersection(s).count() == 1 {
                out.insert(x);
            }
        }
        out
    }

    pub fn maximal_elements(&self, s: &Subset) -> Subset {
        let mut out = self.empty_subset();
        for x in s.iter() {
            if self.up[x].intersection(s).count() == 1 {
                out.insert(x);
            }
        }
        out
    }

    /// Cover pairs `(x, y)`: `x < y` with nothing strictly between. Sorted.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut covers = Vec::new();
        for x in 0..n {
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                let between = self.up[x].intersection(&self.down[y]);
                if between.count() == 2 {
                    covers.push((x, y));
                }
            }
        }
        covers
    }

    /// Number of lower covers of each element and number of upper covers.
    pub fn cover_degrees(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.len();
        let (mut lower, mut upper) = (vec![0; n], vec![0; n]);
        for (a, b) in self.hasse() {
            upper[a] += 1;
            lower[b] += 1;
        }
        (lower, upper)
    }

    /// The order dual: `leq` transposed.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            name: format!("dual({})", self.name),
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Reorders elements: new index `k` holds old element `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> FinitePoset {
        let n = self.len();
        assert_eq!(order.len(), n);
        let mut pos = vec![0; n];
        for (k, &old) in order.iter().enumerate() {
            pos[old] = k;
        }
        let up = order
            .iter()
            .map(|&old| Subset::from_indices(n, self.up[old].iter().map(|j| pos[j])))
            .collect();
        let labels = order.iter().map(|&old| self.labels[old].clone()).collect();
        Self::from_up_sets(self.name.clone(), labels, up)
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Result<FinitePoset> {
        if labels.len() != self.len() {
            return Err(OrderError::InvalidArgument("label count mismatch".into()));
        }
        let mut p = self.clone();
        p.labels = labels;
        p.validate()?;
        Ok(p)
    }

    /// A linear extension, ordered by down-set size then index.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| (self.down[x].count(), x));
        order
    }

    /// Counts upper sets by backtracking, stopping once the count passes `stop_after`.
    pub fn count_upper_sets(&self, stop_after: u128) -> u128 {
        let order: Vec<usize> = self.linear_extension().into_iter().rev().collect();
        let mut count = 0u128;
        let mut current = self.empty_subset();
        self.upper_set_walk(&order, 0, &mut current, &mut |_| {
            count += 1;
            count <= stop_after
        });
        count
    }

    /// All upper sets, sorted by (size, bitmask value).
    ///
    /// Enumeration walks the elements from the top of a linear extension down,
    /// deciding membership one element at a time; an element may join only once
    /// everything strictly above it is in. Fails with `SizeLimit` (carrying the
    /// exact count) when there are more than `limit` upper sets.
    pub fn upper_sets(&self, limit: usize) -> Result<Vec<Subset>> {
        let count = self.count_upper_sets(u128::MAX);
        if count > limit as u128 {
            return Err(OrderError::SizeLimit {
                what: "upper sets",
                size: count,
                cap: limit as u128,
            });
        }
        let order: Vec<usize> = self.linear_extension().into_iter().rev().collect();
        let mut out = Vec::with_capacity(count as usize);
        let mut current = self.empty_subset();
        self.upper_set_walk(&order, 0, &mut current, &mut |s| {
            out.push(s.clone());
            true
        });
        out.sort();
        Ok(out)
    }

    /// All lower sets, sorted by (size, bitmask value).
    pub fn lower_sets(&self, limit: usize) -> Result<Vec<Subset>> {
        let mut out: Vec<Subset> = self.dual().upper_sets(limit)?;
        out.sort();
        Ok(out)
    }

    fn upper_set_walk<F: FnMut(&Subset) -> bool>(
        &self,
        order: &[usize],
        k: usize,
        current: &mut Subset,
        visit: &mut F,
    ) -> bool {
        if k == order.len() {
            return visit(current);
        }
        let x = order[k];
        if !self.upper_set_walk(order, k + 1, current, visit) {
            return false;
        }
        let mut strictly_above = self.up[x].clone();
        strictly_above.remove(x);
        if strictly_above.is_subset_of(current) {
            current.insert(x);
            let go_on = self.upper_set_walk(order, k + 1, current, visit);
            current.remove(x);
            return go_on;
        }
        true
    }

    /// Every directed subset with its supremum, found by scanning all `2^n` subsets.
    ///
    /// This is the definitional enumeration used by the oracle routes: it does
    /// not assume that a finite directed set contains its own supremum.
    pub fn directed_subsets(&self) -> Result<Vec<DirectedSet>> {
        limits::check_subset_enumeration("directed-subset enumeration", self.len())?;
        Ok(all_subsets(self.len())
            .filter(|s| self.is_directed(s))
            .map(|members| {
                let sup = self.sup(&members);
                DirectedSet { members, sup }
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> FinitePoset {
        FinitePoset::build("c2", &["a", "b"], &[("a", "b")], BuildMode::Covers).unwrap()
    }

    fn m3() -> FinitePoset {
        FinitePoset::build(
            "M3",
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
            BuildMode::Covers,
        )
        .unwrap()
    }

    #[test]
    fn build_examples() {
        let p = chain2();
        assert!(p.leq(0, 1) && !p.leq(1, 0));
        let one = FinitePoset::build::<_, &str>("one", &["a"], &[], BuildMode::Covers).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one.leq(0, 0));
        let err = FinitePoset::build("bad", &["a", "b"], &[("a", "b"), ("b", "a")], BuildMode::Relation);
        assert!(matches!(err, Err(OrderError::Cycle { .. })));
        let err = FinitePoset::build("bad", &["a"], &[("a", "z")], BuildMode::Relation);
        assert_eq!(err.unwrap_err(), OrderError::UnknownLabel("z".into()));
        let err = FinitePoset::build("bad", &["a"], &[("a", "a")], BuildMode::Covers);
        assert!(matches!(err, Err(OrderError::ReflexiveCover(_))));
        let err = FinitePoset::build::<_, &str>("bad", &["a", "a"], &[], BuildMode::Covers);
        assert!(matches!(err, Err(OrderError::DuplicateLabel(_))));
    }

    #[test]
    fn from_relation_rejects_non_transitive_tables() {
        let t = vec![
            vec![true, true, false],
            vec![false, true, true],
            vec![false, false, true],
        ];
        let labels = vec!["x".into(), "y".into(), "z".into()];
        assert!(matches!(
            FinitePoset::from_relation("t", labels, &t),
            Err(OrderError::InvalidRelation(_))
        ));
    }

    #[test]
    fn closures() {
        let p = chain2();
        assert_eq!(p.up_closure(&p.subset([0])), p.carrier());
        assert!(p.up_closure(&p.empty_subset()).is_empty());
        let m = m3();
        assert_eq!(m.up_closure(&m.subset([1, 2])), m.subset([1, 2, 4]));
        assert_eq!(m.down_closure(&m.subset([1, 2])), m.subset([0, 1, 2]));
    }

    #[test]
    fn directedness_and_bounds() {
        let m = m3();
        assert!(m.is_directed(&m.subset([1, 2, 4])));
        assert!(!m.is_directed(&m.subset([1, 2])));
        assert!(!m.is_directed(&m.empty_subset()));
        assert_eq!(m.sup(&m.subset([1, 2])), Some(4));
        assert_eq!(m.inf(&m.subset([1, 2])), Some(0));
        assert_eq!(m.sup(&m.empty_subset()), Some(0));
        assert_eq!(m.sup(&m.subset([3])), Some(3));
        let anti = FinitePoset::build::<_, &str>("a2", &["a", "b"], &[], BuildMode::Covers).unwrap();
        assert_eq!(anti.sup(&anti.subset([0, 1])), None);
        assert_eq!(anti.sup(&anti.empty_subset()), None);
        assert!(!anti.is_directed(&anti.subset([0, 1])));
    }

    #[test]
    fn hasse_and_dual() {
        let m = m3();
        assert_eq!(m.hasse().len(), 6);
        let d = m.dual();
        assert!(d.leq(4, 1) && d.leq(1, 0));
        assert_eq!(d.dual(), m);
    }

    #[test]
    fn upper_sets_of_m3() {
        let m = m3();
        let ups = m.upper_sets(1000).unwrap();
        // ∅, {1}, three singletons-with-top, three pairs, all atoms, everything
        assert_eq!(ups.len(), 10);
        assert!(ups.iter().all(|u| m.is_upper(u)));
        assert_eq!(m.count_upper_sets(u128::MAX), 10);
        assert!(matches!(m.upper_sets(5), Err(OrderError::SizeLimit { size: 10, .. })));
        assert_eq!(m.lower_sets(1000).unwrap().len(), 10);
    }

    #[test]
    fn directed_subsets_carry_their_max_as_sup() {
        let m = m3();
        let ds = m.directed_subsets().unwrap();
        for d in &ds {
            assert_eq!(d.sup, m.greatest(&d.members));
        }
        // subsets with a greatest element: 1 + 2+2+2 + 16 = 23
        assert_eq!(ds.len(), 23);
    }
}
