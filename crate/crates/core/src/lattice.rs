//! Finite lattices. Every finite lattice is complete: arbitrary joins and meets
//! are folds of the binary tables, with `⋁∅ = bottom` and `⋀∅ = top`.

use crate::error::{OrderError, Result};
use crate::poset::FinitePoset;
use crate::subset::Subset;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteLattice").field("poset", &self.poset).finish()
    }
}

/// Builds the join/meet tables of `p`, failing on the first pair without a bound.
pub fn as_lattice(p: &FinitePoset) -> Result<FiniteLattice> {
    FiniteLattice::from_poset(p.clone())
}

impl FiniteLattice {
    pub fn from_poset(poset: FinitePoset) -> Result<Self> {
        let n = poset.len();
        if n == 0 {
            return Err(OrderError::EmptyLattice);
        }
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in a..n {
                let pair = poset.subset([a, b]);
                let missing = |what| OrderError::NotALattice {
                    a: poset.label(a).to_string(),
                    b: poset.label(b).to_string(),
                    missing: what,
                };
                let j = poset.sup(&pair).ok_or_else(|| missing("join"))?;
                let m = poset.inf(&pair).ok_or_else(|| missing("meet"))?;
                join[a][b] = j;
                join[b][a] = j;
                meet[a][b] = m;
                meet[b][a] = m;
            }
        }
        let top = poset.top().expect("finite lattice has a top");
        let bottom = poset.bottom().expect("finite lattice has a bottom");
        Ok(FiniteLattice {
            poset,
            join,
            meet,
            bottom,
            top,
        })
    }

    /// Assembles a lattice from tables the caller has already computed.
    pub(crate) fn from_tables(
        poset: FinitePoset,
        join: Vec<Vec<usize>>,
        meet: Vec<Vec<usize>>,
        bottom: usize,
        top: usize,
    ) -> Self {
        debug_assert_eq!(join.len(), poset.len());
        FiniteLattice {
            poset,
            join,
            meet,
            bottom,
            top,
        }
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn into_poset(self) -> FinitePoset {
        self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn label(&self, i: usize) -> &str {
        self.poset.label(i)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn join_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.bottom, |acc, x| self.join[acc][x])
    }

    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(self.top, |acc, x| self.meet[acc][x])
    }

    /// `⋁S`
    pub fn join_of(&self, s: &Subset) -> usize {
        self.join_all(s.iter())
    }

    /// `⋀S`
    pub fn meet_of(&self, s: &Subset) -> usize {
        self.meet_all(s.iter())
    }

    /// The order-dual lattice, with join and meet swapped.
    pub fn dual(&self) -> FiniteLattice {
        FiniteLattice {
            poset: self.poset.dual(),
            join: self.meet.clone(),
            meet: self.join.clone(),
            bottom: self.top,
            top: self.bottom,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::BuildMode;

    #[test]
    fn antichain_is_not_a_lattice() {
        let p = FinitePoset::build::<_, &str>("a2", &["a", "b"], &[], BuildMode::Covers).unwrap();
        let err = as_lattice(&p).unwrap_err();
        assert_eq!(
            err,
            OrderError::NotALattice {
                a: "a".into(),
                b: "b".into(),
                missing: "join"
            }
        );
    }

    #[test]
    fn empty_poset_is_rejected() {
        let p = FinitePoset::build::<&str, &str>("e", &[], &[], BuildMode::Covers).unwrap();
        assert_eq!(as_lattice(&p).unwrap_err(), OrderError::EmptyLattice);
    }

    #[test]
    fn m3_tables() {
        let p = FinitePoset::build(
            "M3",
            &["0", "a", "b", "c", "1"],
            &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
            BuildMode::Covers,
        )
        .unwrap();
        let l = as_lattice(&p).unwrap();
        assert_eq!(l.join(1, 2), 4);
        assert_eq!(l.meet(1, 2), 0);
        assert_eq!((l.bottom(), l.top()), (0, 4));
        assert_eq!(l.join_of(&p.carrier()), 4);
        assert_eq!(l.meet_of(&p.carrier()), 0);
        assert_eq!(l.join_of(&p.empty_subset()), 0);
        assert_eq!(l.meet_of(&p.empty_subset()), 4);
        let d = l.dual();
        assert_eq!(d.join(1, 2), 0);
        assert_eq!(d.top(), 0);
    }
}
