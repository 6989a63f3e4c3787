//! Continuity predicates on finite posets and lattices.
//!
//! Every predicate returns a [`Verdict`]; on failure the witness is the first
//! offending element (then subset, in bitmask order) in index order.
//!
//! On finite carriers `is_continuous`, `is_quasicontinuous`,
//! `is_meet_continuous` and `is_hypercontinuous` always hold. They are still
//! computed from the definitions through the oracle routes, so a failure
//! points at an implementation bug rather than at mathematics.
//! `is_join_continuous`, `is_frame`, `is_distributive` and
//! `is_prime_continuous` genuinely discriminate.

use std::fmt;

use crate::error::{OrderError, Result};
use crate::lattice::FiniteLattice;
use crate::limits;
use crate::poset::FinitePoset;
use crate::relations::{self, Method};
use crate::stone_dual;
use crate::subset::{all_subsets, Subset};
use crate::verdict::{Verdict, Witness};

/// Lattices up to this size are checked for join continuity by scanning all
/// subsets in bitmask order; larger ones use the pair-reachability closure.
pub const JOIN_CONTINUITY_SCAN_MAX: usize = 16;

/// Default number of index sets in [`is_completely_distributive_oracle`].
pub const DEFAULT_FAMILY_BOUND: usize = 3;

/// `P` is continuous: each `↟x` is directed with supremum `x`.
pub fn is_continuous(p: &FinitePoset) -> Result<Verdict> {
    let wb = relations::way_below(p, Method::Oracle)?;
    for x in 0..p.len() {
        let approx = wb.predecessors(x);
        let directed = p.is_directed(&approx);
        let sup = p.sup(&approx);
        if !directed || sup != Some(x) {
            let mut w = Witness::new().element(x).subset(approx);
            w.lhs = sup;
            w.rhs = Some(x);
            let why = if directed {
                "sup of approximants differs"
            } else {
                "approximants not directed"
            };
            return Ok(Verdict::fail(w.note(why)));
        }
    }
    Ok(Verdict::pass())
}

/// `P` is quasicontinuous: each `fin(x)` is directed under `⊇` and meets in `↑x`.
pub fn is_quasicontinuous(p: &FinitePoset) -> Result<Verdict> {
    let directed = p.directed_subsets()?;
    for x in 0..p.len() {
        let fam = relations::fin_family_from(p, &directed, x);
        if fam.members.is_empty() {
            return Ok(Verdict::fail(Witness::new().element(x).note("fin(x) is empty")));
        }
        for (i, a) in fam.members.iter().enumerate() {
            for b in &fam.members[i..] {
                let both = a.intersection(b);
                if !fam.members.iter().any(|c| c.is_subset_of(&both)) {
                    let w = Witness::new()
                        .element(x)
                        .subset(a.clone())
                        .subset(b.clone())
                        .note("fin(x) not directed under reverse inclusion");
                    return Ok(Verdict::fail(w));
                }
            }
        }
        let mut meet = p.carrier();
        for m in &fam.members {
            meet.intersect_with(m);
        }
        if &meet != p.up_set(x) {
            let w = Witness::new()
                .element(x)
                .subset(meet)
                .note("intersection of fin(x) differs from the principal up-set");
            return Ok(Verdict::fail(w));
        }
    }
    Ok(Verdict::pass())
}

/// Topological meet continuity: `x ∈ cl_σ(↓x ∩ ↓D)` whenever `x ≤ ⋁D` for a
/// directed `D` with existing supremum. The closure is the intersection of the
/// Scott-closed supersets, with Scott-openness checked from its definition.
pub fn is_meet_continuous(p: &FinitePoset) -> Result<Verdict> {
    let directed = p.directed_subsets()?;
    let closed: Vec<Subset> = stone_dual::definitional_opens(p, &directed)?
        .into_iter()
        .map(|u| u.complement())
        .collect();
    for x in 0..p.len() {
        for d in &directed {
            let Some(s) = d.sup else { continue };
            if !p.leq(x, s) {
                continue;
            }
            let base = p.down_set(x).intersection(&p.down_closure(&d.members));
            let mut cl = p.carrier();
            for c in closed.iter().filter(|c| base.is_subset_of(c)) {
                cl.intersect_with(c);
            }
            if !cl.contains(x) {
                let w = Witness::new().element(x).subset(d.members.clone()).subset(cl);
                return Ok(Verdict::fail(w));
            }
        }
    }
    Ok(Verdict::pass())
}

/// Algebraic meet continuity: `x ∧ ⋁D = ⋁{x ∧ d | d ∈ D}` for nonempty directed `D`.
pub fn is_meet_continuous_algebraic(l: &FiniteLattice) -> Result<Verdict> {
    let p = l.poset();
    let directed = p.directed_subsets()?;
    for x in 0..l.len() {
        for d in &directed {
            let lhs = l.meet(x, l.join_of(&d.members));
            let rhs = l.join_all(d.members.iter().map(|e| l.meet(x, e)));
            if lhs != rhs {
                let w = Witness::new().element(x).subset(d.members.clone()).sides(lhs, rhs);
                return Ok(Verdict::fail(w));
            }
        }
    }
    Ok(Verdict::pass())
}

/// Join continuity: `x ∨ ⋀S = ⋀{x ∨ s | s ∈ S}` for every `x` and every `S ⊆ L`,
/// including `S = ∅`.
pub fn is_join_continuous(l: &FiniteLattice) -> Result<Verdict> {
    if l.len() <= JOIN_CONTINUITY_SCAN_MAX {
        limits::check_subset_enumeration("join-continuity scan", l.len())?;
        Ok(join_continuity_scan(l))
    } else {
        Ok(join_continuity_closure(l))
    }
}

pub(crate) fn join_continuity_scan(l: &FiniteLattice) -> Verdict {
    for x in 0..l.len() {
        for s in all_subsets(l.len()) {
            let lhs = l.join(x, l.meet_of(&s));
            let rhs = l.meet_all(s.iter().map(|e| l.join(x, e)));
            if lhs != rhs {
                return Verdict::fail(Witness::new().element(x).subset(s).sides(lhs, rhs));
            }
        }
    }
    Verdict::pass()
}

/// Exhaustive over all `S` without listing them: for fixed `x`, the pairs
/// `(⋀S, ⋀{x ∨ s})` reachable by adding one element at a time from `S = ∅`
/// are exactly the pairs realised by subsets, since adding a member twice
/// changes nothing. Breadth-first order yields a smallest failing `S`.
pub(crate) fn join_continuity_closure(l: &FiniteLattice) -> Verdict {
    let n = l.len();
    let start = (l.top(), l.top());
    for x in 0..n {
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; n * n];
        let mut seen = vec![false; n * n];
        let mut queue = std::collections::VecDeque::new();
        seen[start.0 * n + start.1] = true;
        queue.push_back(start);
        while let Some((a, b)) = queue.pop_front() {
            if l.join(x, a) != b {
                let mut s = Subset::empty(n);
                let mut at = a * n + b;
                while let Some((prev, e)) = parent[at] {
                    s.insert(e);
                    at = prev;
                }
                let w = Witness::new().element(x).subset(s).sides(l.join(x, a), b);
                return Verdict::fail(w);
            }
            for e in 0..n {
                let next = (l.meet(a, e), l.meet(b, l.join(x, e)));
                let key = next.0 * n + next.1;
                if !seen[key] {
                    seen[key] = true;
                    parent[key] = Some((a * n + b, e));
                    queue.push_back(next);
                }
            }
        }
    }
    Verdict::pass()
}

/// Frame law `x ∧ ⋁S = ⋁{x ∧ s}`, decided as join continuity of the dual lattice.
pub fn is_frame(l: &FiniteLattice) -> Result<Verdict> {
    is_join_continuous(&l.dual())
}

/// Every `y` is the join of its `≺`-predecessors.
pub fn is_hypercontinuous(l: &FiniteLattice) -> Result<Verdict> {
    let rel = relations::prec(l, Method::Oracle)?;
    Ok(join_of_predecessors(l, &rel))
}

/// Every `y` is the join of its `◁`-predecessors.
pub fn is_prime_continuous(l: &FiniteLattice) -> Result<Verdict> {
    let rel = relations::way_way_below(l, Method::ClosedForm)?;
    Ok(join_of_predecessors(l, &rel))
}

fn join_of_predecessors(l: &FiniteLattice, rel: &relations::Relation) -> Verdict {
    for y in 0..l.len() {
        let preds = rel.predecessors(y);
        let lhs = l.join_of(&preds);
        if lhs != y {
            return Verdict::fail(Witness::new().element(y).subset(preds).sides(lhs, y));
        }
    }
    Verdict::pass()
}

/// Binary distributive law `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` over all triples.
pub fn is_distributive(l: &FiniteLattice) -> Result<Verdict> {
    let n = l.len();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = l.meet(x, l.join(y, z));
                let rhs = l.join(l.meet(x, y), l.meet(x, z));
                if lhs != rhs {
                    let w = Witness::new().element(x).element(y).element(z).sides(lhs, rhs);
                    return Ok(Verdict::fail(w));
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// The complete distributive law
/// `⋀_i ⋁_{j ∈ J_i} u_{i,j} = ⋁_{f ∈ Π J_i} ⋀_i u_{i,f(i)}`
/// for every family of at most `family_bound` subsets of `L`, with choice
/// functions enumerated one by one.
pub fn is_completely_distributive_oracle(l: &FiniteLattice, family_bound: usize) -> Result<Verdict> {
    let n = l.len();
    limits::check_subset_enumeration("complete-distributivity oracle", n)?;
    let families = (n as u32).saturating_mul(family_bound as u32);
    if families > 30 {
        return Err(OrderError::SizeLimit {
            what: "complete-distributivity families (log2)",
            size: families as u128,
            cap: 30,
        });
    }
    let subsets: Vec<Subset> = all_subsets(n).collect();
    let mut family: Vec<usize> = Vec::with_capacity(family_bound);
    for k in 0..=family_bound {
        if let Some(v) = families_of_size(l, &subsets, k, 0, &mut family) {
            return Ok(v);
        }
    }
    Ok(Verdict::pass())
}

// Multisets of subset indices, non-decreasing.
fn families_of_size(
    l: &FiniteLattice,
    subsets: &[Subset],
    k: usize,
    from: usize,
    family: &mut Vec<usize>,
) -> Option<Verdict> {
    if family.len() == k {
        return check_family(l, subsets, family);
    }
    for i in from..subsets.len() {
        family.push(i);
        let found = families_of_size(l, subsets, k, i, family);
        family.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

fn check_family(l: &FiniteLattice, subsets: &[Subset], family: &[usize]) -> Option<Verdict> {
    let members: Vec<Vec<usize>> = family.iter().map(|&i| subsets[i].iter().collect()).collect();
    let lhs = l.meet_all(members.iter().map(|js| l.join_all(js.iter().copied())));
    let mut rhs = l.bottom();
    if members.iter().all(|js| !js.is_empty()) {
        let mut choice = vec![0usize; members.len()];
        'odometer: loop {
            let term = l.meet_all(choice.iter().zip(&members).map(|(&c, js)| js[c]));
            rhs = l.join(rhs, term);
            for i in (0..choice.len()).rev() {
                choice[i] += 1;
                if choice[i] < members[i].len() {
                    continue 'odometer;
                }
                choice[i] = 0;
            }
            break;
        }
    }
    if lhs != rhs {
        let mut w = Witness::new().sides(lhs, rhs);
        for &i in family {
            w = w.subset(subsets[i].clone());
        }
        return Some(Verdict::fail(w));
    }
    None
}

/// `⋁{⋀U | x ∈ U ∈ σ(L)}`; on a finite carrier the Scott-open sets are the upper sets.
pub fn supinf_continuous_rhs(l: &FiniteLattice, x: usize) -> Result<usize> {
    let uppers = l.poset().upper_sets(limits::DEFAULT_UPPER_SET_LIMIT)?;
    Ok(l.join_all(uppers.iter().filter(|u| u.contains(x)).map(|u| l.meet_of(u))))
}

/// `⋁{⋀(L ∖ ↓M) | M ⊆ L, x ∉ ↓M}`.
pub fn supinf_hyper_rhs(l: &FiniteLattice, x: usize) -> Result<usize> {
    let p = l.poset();
    limits::check_subset_enumeration("hypercontinuity characterisation", l.len())?;
    Ok(l.join_all(
        all_subsets(l.len())
            .map(|m| p.down_closure(&m))
            .filter(|down| !down.contains(x))
            .map(|down| l.meet_of(&down.complement())),
    ))
}

/// `⋁{⋀(L ∖ ↓y) | x ≰ y}`.
pub fn supinf_prime_rhs(l: &FiniteLattice, x: usize) -> usize {
    let p = l.poset();
    l.join_all(
        (0..l.len())
            .filter(|&y| !l.leq(x, y))
            .map(|y| l.meet_of(&p.down_set(y).complement())),
    )
}

/// Named predicates, as used by the command line and the search grammar.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    Continuous,
    Quasicontinuous,
    MeetContinuous,
    MeetContinuousAlgebraic,
    JoinContinuous,
    Frame,
    Hypercontinuous,
    PrimeContinuous,
    Distributive,
    CompletelyDistributive,
    Lattice,
}

impl Property {
    pub const ALL: [Property; 11] = [
        Property::Continuous,
        Property::Quasicontinuous,
        Property::MeetContinuous,
        Property::MeetContinuousAlgebraic,
        Property::JoinContinuous,
        Property::Frame,
        Property::Hypercontinuous,
        Property::PrimeContinuous,
        Property::Distributive,
        Property::CompletelyDistributive,
        Property::Lattice,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Continuous => "continuous",
            Property::Quasicontinuous => "quasicontinuous",
            Property::MeetContinuous => "meet_continuous",
            Property::MeetContinuousAlgebraic => "meet_continuous_algebraic",
            Property::JoinContinuous => "join_continuous",
            Property::Frame => "frame",
            Property::Hypercontinuous => "hypercontinuous",
            Property::PrimeContinuous => "prime_continuous",
            Property::Distributive => "distributive",
            Property::CompletelyDistributive => "completely_distributive",
            Property::Lattice => "lattice",
        }
    }

    pub fn from_name(name: &str) -> Option<Property> {
        Property::ALL.into_iter().find(|p| p.name() == name)
    }

    /// Whether the predicate is only defined on lattices.
    pub fn needs_lattice(self) -> bool {
        !matches!(
            self,
            Property::Continuous | Property::Quasicontinuous | Property::MeetContinuous | Property::Lattice
        )
    }

    /// Evaluates the predicate. `Ok(None)` means it does not apply (a lattice
    /// predicate on a poset that is not a lattice).
    pub fn evaluate(self, p: &FinitePoset, lattice: Option<&FiniteLattice>) -> Result<Option<Verdict>> {
        if self == Property::Lattice {
            return Ok(Some(match crate::lattice::as_lattice(p) {
                Ok(_) => Verdict::pass(),
                Err(OrderError::NotALattice { a, b, .. }) => {
                    let w = Witness::new()
                        .element(p.index_of(&a).expect("label"))
                        .element(p.index_of(&b).expect("label"))
                        .note("pair without a bound");
                    Verdict::fail(w)
                }
                Err(_) => Verdict::fail(Witness::new().note("empty poset")),
            }));
        }
        if !self.needs_lattice() {
            let v = match self {
                Property::Continuous => is_continuous(p)?,
                Property::Quasicontinuous => is_quasicontinuous(p)?,
                _ => is_meet_continuous(p)?,
            };
            return Ok(Some(v));
        }
        let Some(l) = lattice else { return Ok(None) };
        let v = match self {
            Property::MeetContinuousAlgebraic => is_meet_continuous_algebraic(l)?,
            Property::JoinContinuous => is_join_continuous(l)?,
            Property::Frame => is_frame(l)?,
            Property::Hypercontinuous => is_hypercontinuous(l)?,
            Property::PrimeContinuous => is_prime_continuous(l)?,
            Property::Distributive => is_distributive(l)?,
            Property::CompletelyDistributive => is_completely_distributive_oracle(l, DEFAULT_FAMILY_BOUND)?,
            _ => unreachable!("poset predicates handled above"),
        };
        Ok(Some(v))
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
