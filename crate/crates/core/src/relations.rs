//! Auxiliary relations: way-below `≪`, its set version `F ≪ G`, way-way-below
//! `◁`, and the hypercontinuity relation `≺`.
//!
//! Each relation has a definitional route ([`Method::Oracle`]) that quantifies
//! over subsets exactly as the definition reads, and a closed form
//! ([`Method::ClosedForm`]). On finite carriers `≪` and `≺` coincide with `≤`
//! because every finite directed set contains its supremum and every family of
//! upper sets is finite; `◁` does not collapse.

use std::collections::BTreeSet;

use crate::error::{OrderError, Result};
use crate::lattice::FiniteLattice;
use crate::limits;
use crate::poset::{DirectedSet, FinitePoset};
use crate::subset::{all_subsets, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Quantify over subsets as the definition states.
    Oracle,
    /// Use the closed form (for `≪` and `≺` on finite carriers: the order itself).
    ClosedForm,
}

/// A binary relation on `0..n`; `rows[x]` is the set of `y` with `x R y`.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation {
    rows: Vec<Subset>,
}

impl std::fmt::Debug for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            rows: (0..n).map(|_| Subset::empty(n)).collect(),
        }
    }

    pub fn full(n: usize) -> Self {
        Relation {
            rows: (0..n).map(|_| Subset::full(n)).collect(),
        }
    }

    /// The order relation `≤` of `p`.
    pub fn of_order(p: &FinitePoset) -> Self {
        Relation {
            rows: (0..p.len()).map(|x| p.up_set(x).clone()).collect(),
        }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut r = Self::empty(n);
        for &(x, y) in pairs {
            r.set(x, y, true);
        }
        r
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.rows[x].contains(y)
    }

    pub fn set(&mut self, x: usize, y: usize, value: bool) {
        if value {
            self.rows[x].insert(y);
        } else {
            self.rows[x].remove(y);
        }
    }

    /// `{y | x R y}`
    pub fn successors(&self, x: usize) -> &Subset {
        &self.rows[x]
    }

    /// `{x | x R y}`
    pub fn predecessors(&self, y: usize) -> Subset {
        Subset::from_indices(self.len(), (0..self.len()).filter(|&x| self.get(x, y)))
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(x, row)| row.iter().map(move |y| (x, y)))
            .collect()
    }

    pub fn is_subrelation_of(&self, other: &Relation) -> bool {
        self.rows.len() == other.rows.len() && self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset_of(b))
    }
}

/// `x ≪ y` for all pairs.
pub fn way_below(p: &FinitePoset, method: Method) -> Result<Relation> {
    match method {
        Method::ClosedForm => Ok(Relation::of_order(p)),
        Method::Oracle => Ok(way_below_from(p, &p.directed_subsets()?)),
    }
}

pub(crate) fn way_below_from(p: &FinitePoset, directed: &[DirectedSet]) -> Relation {
    let mut table = Relation::full(p.len());
    for d in directed {
        let Some(s) = d.sup else { continue };
        // x such that D meets ↑x
        let met = p.down_closure(&d.members);
        for y in p.down_set(s).iter() {
            for x in met.complement().iter() {
                table.set(x, y, false);
            }
        }
    }
    table
}

/// `↟x = {p | p ≪ x}`, computed through the oracle route.
pub fn approximants(p: &FinitePoset, x: usize) -> Result<Subset> {
    Ok(way_below(p, Method::Oracle)?.predecessors(x))
}

/// `F ≪ G`: every directed set whose existing supremum lies in `↑G` meets `↑F`.
pub fn way_below_sets(p: &FinitePoset, f: &Subset, g: &Subset) -> Result<bool> {
    if f.is_empty() || g.is_empty() {
        return Err(OrderError::InvalidArgument("F and G must be nonempty".into()));
    }
    Ok(way_below_sets_from(p, &p.directed_subsets()?, f, g))
}

pub(crate) fn way_below_sets_from(p: &FinitePoset, directed: &[DirectedSet], f: &Subset, g: &Subset) -> bool {
    let up_f = p.up_closure(f);
    let up_g = p.up_closure(g);
    directed.iter().all(|d| match d.sup {
        Some(s) if up_g.contains(s) => d.members.intersects(&up_f),
        _ => true,
    })
}

/// The family `fin(x) = {↑F | F finite, F ≪ {x}}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinFamily {
    /// Every distinct member, in canonical subset order.
    pub members: Vec<Subset>,
    /// The `⊆`-minimal members.
    pub minimal: Vec<Subset>,
}

impl FinFamily {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

pub fn fin_family(p: &FinitePoset, x: usize) -> Result<FinFamily> {
    Ok(fin_family_from(p, &p.directed_subsets()?, x))
}

pub(crate) fn fin_family_from(p: &FinitePoset, directed: &[DirectedSet], x: usize) -> FinFamily {
    let target = p.subset([x]);
    let members: BTreeSet<Subset> = all_subsets(p.len())
        .filter(|f| !f.is_empty() && way_below_sets_from(p, directed, f, &target))
        .map(|f| p.up_closure(&f))
        .collect();
    let members: Vec<Subset> = members.into_iter().collect();
    let minimal = members
        .iter()
        .filter(|m| !members.iter().any(|o| o != *m && o.is_subset_of(m)))
        .cloned()
        .collect();
    FinFamily { members, minimal }
}

/// `u ◁ v` for all pairs.
///
/// The closed form uses the worst-case witness `S = L ∖ ↑u`: `u ◁ v` iff
/// `⋁(L ∖ ↑u) ≱ v`.
pub fn way_way_below(l: &FiniteLattice, method: Method) -> Result<Relation> {
    let n = l.len();
    let p = l.poset();
    match method {
        Method::ClosedForm => {
            let mut table = Relation::empty(n);
            for u in 0..n {
                let worst = l.join_of(&p.up_set(u).complement());
                for v in 0..n {
                    table.set(u, v, !l.leq(v, worst));
                }
            }
            Ok(table)
        }
        Method::Oracle => {
            limits::check_subset_enumeration("way-way-below oracle", n)?;
            let mut table = Relation::full(n);
            for s in all_subsets(n) {
                let sup = l.join_of(&s);
                let below_s = p.down_closure(&s);
                for v in p.down_set(sup).iter() {
                    for u in below_s.complement().iter() {
                        table.set(u, v, false);
                    }
                }
            }
            Ok(table)
        }
    }
}

/// `x ≺ y` for all pairs.
///
/// The oracle quantifies over single upper sets `V`: every intersection of a
/// nonempty family of upper sets is again an upper set, and on a finite
/// carrier the finite subfamily can be the whole family.
pub fn prec(l: &FiniteLattice, method: Method) -> Result<Relation> {
    let p = l.poset();
    match method {
        Method::ClosedForm => Ok(Relation::of_order(p)),
        Method::Oracle => {
            let uppers = p.upper_sets(limits::DEFAULT_UPPER_SET_LIMIT)?;
            let n = l.len();
            let mut table = Relation::empty(n);
            for y in 0..n {
                let inside: Vec<&Subset> = uppers.iter().filter(|v| v.is_subset_of(p.up_set(y))).collect();
                for x in 0..n {
                    let ok = inside.iter().all(|v| v.is_subset_of(p.up_set(x)));
                    table.set(x, y, ok);
                }
            }
            Ok(table)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;
    use crate::lattice::as_lattice;

    fn lat(name: &str) -> FiniteLattice {
        as_lattice(&named(name).unwrap()).unwrap()
    }

    #[test]
    fn way_below_on_chain_and_m3() {
        let c3 = named("chain(3)").unwrap();
        assert_eq!(way_below(&c3, Method::Oracle).unwrap(), Relation::of_order(&c3));
        let m3 = named("M3").unwrap();
        let fast = way_below(&m3, Method::ClosedForm).unwrap();
        assert_eq!(fast, Relation::of_order(&m3));
        assert_eq!(fast, way_below(&m3, Method::Oracle).unwrap());
        let one = named("chain(1)").unwrap();
        assert_eq!(way_below(&one, Method::Oracle).unwrap().pairs(), vec![(0, 0)]);
    }

    #[test]
    fn approximants_examples() {
        let c3 = named("chain(3)").unwrap();
        assert_eq!(approximants(&c3, 2).unwrap(), c3.carrier());
        let a2 = named("antichain(2)").unwrap();
        assert_eq!(approximants(&a2, 0).unwrap(), a2.subset([0]));
        let m3 = named("M3").unwrap();
        assert_eq!(approximants(&m3, 4).unwrap(), m3.carrier());
    }

    #[test]
    fn way_below_sets_examples() {
        let m3 = named("M3").unwrap();
        let a = m3.index_of("a").unwrap();
        let top = m3.index_of("1").unwrap();
        assert!(way_below_sets(&m3, &m3.subset([a]), &m3.subset([top])).unwrap());
        for x in 0..m3.len() {
            assert!(way_below_sets(&m3, &m3.subset([x]), &m3.subset([x])).unwrap());
        }
        let c3 = named("chain(3)").unwrap();
        assert!(!way_below_sets(&c3, &c3.subset([2]), &c3.subset([0])).unwrap());
        assert!(way_below_sets(&c3, &c3.empty_subset(), &c3.subset([0])).is_err());
    }

    #[test]
    fn fin_family_examples() {
        let c2 = named("chain(2)").unwrap();
        let fam = fin_family(&c2, 1).unwrap();
        assert_eq!(fam.minimal, vec![c2.subset([1])]);
        // upper sets containing b: {b} and {a, b}
        assert_eq!(fam.size(), 2);
        let a2 = named("antichain(2)").unwrap();
        assert_eq!(fin_family(&a2, 0).unwrap().minimal, vec![a2.subset([0])]);
        let one = named("chain(1)").unwrap();
        let fam = fin_family(&one, 0).unwrap();
        assert_eq!(fam.members, vec![one.subset([0])]);
    }

    #[test]
    fn way_way_below_examples() {
        let c3 = lat("chain(3)");
        let expected = Relation::from_pairs(3, &[(0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]);
        assert_eq!(way_way_below(&c3, Method::ClosedForm).unwrap(), expected);
        assert_eq!(way_way_below(&c3, Method::Oracle).unwrap(), expected);

        let m3 = lat("M3");
        let wwb = way_way_below(&m3, Method::ClosedForm).unwrap();
        assert_eq!(wwb, way_way_below(&m3, Method::Oracle).unwrap());
        let (bot, a, top) = (m3.bottom(), 1, m3.top());
        assert!(wwb.successors(a).is_empty());
        assert!(wwb.successors(top).is_empty());
        assert_eq!(wwb.successors(bot), &m3.poset().subset([1, 2, 3, 4]));

        let one = lat("chain(1)");
        assert!(way_way_below(&one, Method::Oracle).unwrap().pairs().is_empty());
        assert!(way_way_below(&one, Method::ClosedForm).unwrap().pairs().is_empty());
    }

    #[test]
    fn prec_collapses_to_order() {
        for name in ["chain(2)", "boolean(2)", "chain(1)", "M3", "N5"] {
            let l = lat(name);
            assert_eq!(
                prec(&l, Method::Oracle).unwrap(),
                Relation::of_order(l.poset()),
                "{name}"
            );
        }
    }
}
