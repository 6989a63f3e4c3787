//! The lattice `σ(P)` of Scott-open sets and the lattice `Γ(P)` of Scott-closed sets.

use std::collections::HashMap;

use crate::error::Result;
use crate::lattice::FiniteLattice;
use crate::poset::{DirectedSet, FinitePoset};
use crate::relations::Method;
use crate::subset::Subset;

pub use crate::limits::DEFAULT_UPPER_SET_LIMIT as DEFAULT_OPEN_LIMIT;

/// A family of subsets of `base`, closed under union and intersection,
/// ordered by inclusion. Element `i` of `lattice` is `sets[i]`.
#[derive(Debug, Clone)]
pub struct OpenSetLattice {
    pub base: FinitePoset,
    pub sets: Vec<Subset>,
    pub lattice: FiniteLattice,
}

impl OpenSetLattice {
    fn from_sets(base: &FinitePoset, sets: Vec<Subset>, name: String) -> OpenSetLattice {
        let m = sets.len();
        let index: HashMap<&Subset, usize> = sets.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let labels: Vec<String> = sets.iter().map(|s| set_label(base, s)).collect();
        let up: Vec<Subset> = sets
            .iter()
            .map(|a| Subset::from_indices(m, (0..m).filter(|&j| a.is_subset_of(&sets[j]))))
            .collect();
        let mut join = vec![vec![0; m]; m];
        let mut meet = vec![vec![0; m]; m];
        for i in 0..m {
            for j in i..m {
                let u = index[&sets[i].union(&sets[j])];
                let v = index[&sets[i].intersection(&sets[j])];
                join[i][j] = u;
                join[j][i] = u;
                meet[i][j] = v;
                meet[j][i] = v;
            }
        }
        let bottom = index[&base.empty_subset()];
        let top = index[&base.carrier()];
        let poset = FinitePoset::from_up_sets(name, labels, up);
        let lattice = FiniteLattice::from_tables(poset, join, meet, bottom, top);
        OpenSetLattice {
            base: base.clone(),
            sets,
            lattice,
        }
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn index_of(&self, s: &Subset) -> Option<usize> {
        self.sets.iter().position(|t| t == s)
    }
}

/// `{a,b}`-style label built from the base poset's labels.
pub fn set_label(base: &FinitePoset, s: &Subset) -> String {
    let inner: Vec<&str> = s.iter().map(|i| base.label(i)).collect();
    format!("{{{}}}", inner.join(","))
}

fn meets_directed_sups(u: &Subset, directed: &[DirectedSet]) -> bool {
    directed.iter().all(|d| match d.sup {
        Some(s) if u.contains(s) => d.members.intersects(u),
        _ => true,
    })
}

/// `U` is upper, and every directed set whose existing supremum lies in `U` meets `U`.
///
/// [`Method::ClosedForm`] checks only the first condition, which is all that
/// matters on a finite carrier.
pub fn is_scott_open(p: &FinitePoset, u: &Subset, method: Method) -> Result<bool> {
    if !p.is_upper(u) {
        return Ok(false);
    }
    match method {
        Method::ClosedForm => Ok(true),
        Method::Oracle => Ok(meets_directed_sups(u, &p.directed_subsets()?)),
    }
}

/// Upper sets that also pass the directed-supremum condition against `directed`.
pub(crate) fn definitional_opens(p: &FinitePoset, directed: &[DirectedSet]) -> Result<Vec<Subset>> {
    Ok(p.upper_sets(DEFAULT_OPEN_LIMIT)?
        .into_iter()
        .filter(|u| meets_directed_sups(u, directed))
        .collect())
}

/// `σ(P)`: all Scott-open sets ordered by inclusion, sorted by (size, bitmask).
///
/// Fails with `SizeLimit`, carrying the exact number of opens, when there are
/// more than `limit`.
pub fn scott_opens(p: &FinitePoset, limit: usize) -> Result<OpenSetLattice> {
    let opens = p.upper_sets(limit)?;
    Ok(OpenSetLattice::from_sets(p, opens, format!("sigma({})", p.name())))
}

/// `Γ(P)`: complements of the Scott-open sets, ordered by inclusion.
pub fn scott_closed_lattice(p: &FinitePoset, limit: usize) -> Result<OpenSetLattice> {
    let mut closed: Vec<Subset> = p.upper_sets(limit)?.iter().map(Subset::complement).collect();
    closed.sort();
    Ok(OpenSetLattice::from_sets(p, closed, format!("gamma({})", p.name())))
}

/// Smallest Scott-closed superset of `s`.
///
/// [`Method::Oracle`] intersects every Scott-closed superset;
/// [`Method::ClosedForm`] returns `↓s`.
pub fn scott_closure(p: &FinitePoset, s: &Subset, method: Method) -> Result<Subset> {
    match method {
        Method::ClosedForm => Ok(p.down_closure(s)),
        Method::Oracle => {
            let directed = p.directed_subsets()?;
            let mut out = p.carrier();
            for u in definitional_opens(p, &directed)? {
                let c = u.complement();
                if s.is_subset_of(&c) {
                    out.intersect_with(&c);
                }
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;
    use crate::generators::{boolean, chain, named};

    #[test]
    fn scott_open_examples() {
        let c2 = named("chain(2)").unwrap();
        for m in [Method::Oracle, Method::ClosedForm] {
            assert!(is_scott_open(&c2, &c2.subset([1]), m).unwrap());
            assert!(!is_scott_open(&c2, &c2.subset([0]), m).unwrap());
        }
        let m3 = named("M3").unwrap();
        assert!(is_scott_open(&m3, &m3.subset([1, 2, 4]), Method::Oracle).unwrap());
    }

    #[test]
    fn opens_of_small_posets() {
        let a2 = named("antichain(2)").unwrap();
        let s = scott_opens(&a2, 100).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.lattice.poset().labels(), &["{}", "{a}", "{b}", "{a,b}"]);
        assert!(is_isomorphic(s.lattice.poset(), &boolean(2).unwrap()));

        let c2 = named("chain(2)").unwrap();
        let s = scott_opens(&c2, 100).unwrap();
        assert_eq!(s.sets, vec![c2.empty_subset(), c2.subset([1]), c2.carrier()]);
        assert!(is_isomorphic(s.lattice.poset(), &chain(3)));

        let one = named("chain(1)").unwrap();
        assert!(is_isomorphic(
            scott_opens(&one, 100).unwrap().lattice.poset(),
            &chain(2)
        ));
    }

    #[test]
    fn closed_lattice_examples() {
        for (name, expect) in [
            ("antichain(2)", boolean(2).unwrap()),
            ("chain(2)", chain(3)),
            ("chain(1)", chain(2)),
        ] {
            let p = named(name).unwrap();
            let g = scott_closed_lattice(&p, 100).unwrap();
            assert!(is_isomorphic(g.lattice.poset(), &expect), "{name}");
            let s = scott_opens(&p, 100).unwrap();
            assert!(is_isomorphic(g.lattice.poset(), &s.lattice.poset().dual()));
        }
    }

    #[test]
    fn lattice_tables_match_bound_scan() {
        let m3 = named("M3").unwrap();
        let s = scott_opens(&m3, 100).unwrap();
        let scanned = crate::lattice::as_lattice(s.lattice.poset()).unwrap();
        assert_eq!(scanned, s.lattice);
    }

    #[test]
    fn open_limit_reports_count() {
        let a3 = named("antichain(3)").unwrap();
        let err = scott_opens(&a3, 7).unwrap_err();
        assert!(matches!(err, crate::OrderError::SizeLimit { size: 8, cap: 7, .. }));
    }

    #[test]
    fn closure_examples() {
        let c3 = named("chain(3)").unwrap();
        let m3 = named("M3").unwrap();
        for method in [Method::Oracle, Method::ClosedForm] {
            assert_eq!(scott_closure(&c3, &c3.subset([1]), method).unwrap(), c3.subset([0, 1]));
            assert!(scott_closure(&c3, &c3.empty_subset(), method).unwrap().is_empty());
            assert_eq!(
                scott_closure(&m3, &m3.subset([1, 2]), method).unwrap(),
                m3.subset([0, 1, 2])
            );
        }
    }
}
