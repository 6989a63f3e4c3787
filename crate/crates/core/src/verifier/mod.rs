//! Executable checks of the finite content of the join/hyper/prime continuity
//! theorems, per instance and over enumerated universes.
//!
//! Several biconditionals have both sides true on every finite carrier
//! (continuity, quasicontinuity, meet continuity, hypercontinuity). Their
//! checks still run, as consistency tests between independent predicate
//! implementations, and suite reports mark them as trivialized at finite
//! scale. The non-trivial finite content is the finite-set reduction of the
//! hypercontinuity characterisation and the agreement of join continuity,
//! frame law, distributivity and prime continuity.

pub mod expr;
pub mod suite;

pub use expr::Expr;
pub use suite::{run_suite, search, Failure, Suite, SuiteReport, Universe};

use crate::canonical::is_isomorphic;
use crate::error::Result;
use crate::lattice::FiniteLattice;
use crate::limits;
use crate::poset::FinitePoset;
use crate::properties::{
    is_continuous, is_distributive, is_frame, is_hypercontinuous, is_join_continuous, is_meet_continuous,
    is_prime_continuous, is_quasicontinuous, supinf_continuous_rhs, supinf_hyper_rhs, supinf_prime_rhs,
};
use crate::stone_dual::{scott_closed_lattice, scott_opens, DEFAULT_OPEN_LIMIT};
use crate::subset::all_subsets;
use crate::verdict::{Verdict, Witness};

/// `L ∖ ↓M = ⋂_{m ∈ M} (L ∖ ↓m)` for every `M ⊆ L`. Holds in every poset.
pub fn lemma31_identity_check(l: &FiniteLattice) -> Result<Verdict> {
    let p = l.poset();
    limits::check_subset_enumeration("finite-set reduction", l.len())?;
    for m in all_subsets(l.len()) {
        let lhs = p.down_closure(&m).complement();
        let mut rhs = p.carrier();
        for e in m.iter() {
            rhs.intersect_with(&p.down_set(e).complement());
        }
        if lhs != rhs {
            let w = Witness::new()
                .subset(m)
                .subset(lhs)
                .subset(rhs)
                .note("set identity fails");
            return Ok(Verdict::fail(w));
        }
    }
    Ok(Verdict::pass())
}

/// `⋀(L ∖ ↓M) = ⋁_{m ∈ M} ⋀(L ∖ ↓m)` for every `M ⊆ L`, plus the set identity
/// behind it. Witness: the first failing `M` with both sides.
pub fn lemma31_check(l: &FiniteLattice) -> Result<Verdict> {
    let identity = lemma31_identity_check(l)?;
    if !identity.holds {
        return Ok(identity);
    }
    let p = l.poset();
    for m in all_subsets(l.len()) {
        let lhs = l.meet_of(&p.down_closure(&m).complement());
        let rhs = l.join_all(m.iter().map(|e| l.meet_of(&p.down_set(e).complement())));
        if lhs != rhs {
            return Ok(Verdict::fail(Witness::new().subset(m).sides(lhs, rhs)));
        }
    }
    Ok(Verdict::pass())
}

fn biconditional(lhs: bool, rhs: bool, profile: Vec<(&str, bool)>, what: &str) -> Verdict {
    let v = if lhs == rhs {
        Verdict::pass()
    } else {
        Verdict::fail(Witness::new().note(format!("{what}: left side {lhs}, right side {rhs}")))
    };
    v.with_profile(profile)
}

/// (join continuous ∧ hypercontinuous) ⟺ prime continuous.
pub fn thm32_check(l: &FiniteLattice) -> Result<Verdict> {
    let jc = is_join_continuous(l)?.holds;
    let hc = is_hypercontinuous(l)?.holds;
    let pc = is_prime_continuous(l)?.holds;
    Ok(biconditional(
        jc && hc,
        pc,
        vec![
            ("join_continuous", jc),
            ("hypercontinuous", hc),
            ("prime_continuous", pc),
        ],
        "join_continuous & hypercontinuous <=> prime_continuous",
    ))
}

/// (meet continuous ∧ quasicontinuous) ⟺ continuous.
pub fn thm34_check(p: &FinitePoset) -> Result<Verdict> {
    let mc = is_meet_continuous(p)?.holds;
    let qc = is_quasicontinuous(p)?.holds;
    let c = is_continuous(p)?.holds;
    Ok(biconditional(
        mc && qc,
        c,
        vec![("meet_continuous", mc), ("quasicontinuous", qc), ("continuous", c)],
        "meet_continuous & quasicontinuous <=> continuous",
    ))
}

/// `P` continuous ⟺ `σ(P)` prime continuous.
pub fn thm21_check(p: &FinitePoset) -> Result<Verdict> {
    let c = is_continuous(p)?.holds;
    let sigma = scott_opens(p, DEFAULT_OPEN_LIMIT)?;
    let pc = is_prime_continuous(&sigma.lattice)?.holds;
    Ok(biconditional(
        c,
        pc,
        vec![("continuous", c), ("sigma_prime_continuous", pc)],
        "continuous <=> sigma prime_continuous",
    ))
}

/// `P` meet continuous ⟺ `σ(P)` join continuous ⟺ `Γ(P)` a frame.
pub fn thm23_check(p: &FinitePoset) -> Result<Verdict> {
    let mc = is_meet_continuous(p)?.holds;
    let sigma = scott_opens(p, DEFAULT_OPEN_LIMIT)?;
    let gamma = scott_closed_lattice(p, DEFAULT_OPEN_LIMIT)?;
    let jc = is_join_continuous(&sigma.lattice)?.holds;
    let fr = is_frame(&gamma.lattice)?.holds;
    let profile = vec![
        ("meet_continuous", mc),
        ("sigma_join_continuous", jc),
        ("gamma_frame", fr),
    ];
    let v = if mc == jc && jc == fr {
        Verdict::pass()
    } else {
        Verdict::fail(Witness::new().note(format!(
            "meet_continuous {mc}, sigma join_continuous {jc}, gamma frame {fr}"
        )))
    };
    Ok(v.with_profile(profile))
}

/// `P` quasicontinuous ⟺ `σ(P)` hypercontinuous.
pub fn thm25_check(p: &FinitePoset) -> Result<Verdict> {
    let qc = is_quasicontinuous(p)?.holds;
    let sigma = scott_opens(p, DEFAULT_OPEN_LIMIT)?;
    let hc = is_hypercontinuous(&sigma.lattice)?.holds;
    Ok(biconditional(
        qc,
        hc,
        vec![("quasicontinuous", qc), ("sigma_hypercontinuous", hc)],
        "quasicontinuous <=> sigma hypercontinuous",
    ))
}

/// `σ(P)` is prime continuous, and complementation is an order-reversing
/// bijection `σ(P) → Γ(P)` (so `Γ(P) ≅ σ(P)^op`, cross-checked by canonical form).
pub fn stone_dual_check(p: &FinitePoset) -> Result<Verdict> {
    let sigma = scott_opens(p, DEFAULT_OPEN_LIMIT)?;
    let gamma = scott_closed_lattice(p, DEFAULT_OPEN_LIMIT)?;
    let pc = is_prime_continuous(&sigma.lattice)?.holds;
    let image: Vec<Option<usize>> = sigma.sets.iter().map(|u| gamma.index_of(&u.complement())).collect();
    let mut bijective = image.iter().all(Option::is_some) && sigma.len() == gamma.len();
    if bijective {
        let mut hit = vec![false; gamma.len()];
        for i in image.iter().flatten() {
            hit[*i] = true;
        }
        bijective = hit.iter().all(|&h| h);
    }
    let reversing = bijective
        && (0..sigma.len()).all(|i| {
            (0..sigma.len()).all(|j| {
                let (gi, gj) = (image[i].unwrap(), image[j].unwrap());
                sigma.lattice.leq(i, j) == gamma.lattice.leq(gj, gi)
            })
        });
    let iso = is_isomorphic(gamma.lattice.poset(), &sigma.lattice.poset().dual());
    let profile = vec![
        ("sigma_prime_continuous", pc),
        ("complement_antiisomorphism", reversing),
        ("gamma_isomorphic_to_dual_sigma", iso),
    ];
    let v = if pc && reversing && iso {
        Verdict::pass()
    } else {
        Verdict::fail(Witness::new().note("stone dual invariant violated"))
    };
    Ok(v.with_profile(profile))
}

/// prime ⟹ join continuous, prime ⟹ frame, prime ⟹ hyper ⟹ continuous.
pub fn chain_check(l: &FiniteLattice) -> Result<Verdict> {
    let pc = is_prime_continuous(l)?.holds;
    let jc = is_join_continuous(l)?.holds;
    let fr = is_frame(l)?.holds;
    let hc = is_hypercontinuous(l)?.holds;
    let c = is_continuous(l.poset())?.holds;
    let broken: Vec<&str> = [
        (pc && !jc, "prime_continuous => join_continuous"),
        (pc && !fr, "prime_continuous => frame"),
        (pc && !hc, "prime_continuous => hypercontinuous"),
        (hc && !c, "hypercontinuous => continuous"),
    ]
    .into_iter()
    .filter_map(|(bad, name)| bad.then_some(name))
    .collect();
    let v = if broken.is_empty() {
        Verdict::pass()
    } else {
        Verdict::fail(Witness::new().note(broken.join("; ")))
    };
    Ok(v.with_profile(vec![
        ("prime_continuous", pc),
        ("join_continuous", jc),
        ("frame", fr),
        ("hypercontinuous", hc),
        ("continuous", c),
    ]))
}

/// Each relational predicate agrees with its sup-inf characterisation.
pub fn characterization_check(l: &FiniteLattice) -> Result<Verdict> {
    let n = l.len();
    let first_gap = |rhs: &[usize]| (0..n).find(|&x| rhs[x] != x);
    let cont_rhs = (0..n)
        .map(|x| supinf_continuous_rhs(l, x))
        .collect::<Result<Vec<_>>>()?;
    let hyper_rhs = (0..n).map(|x| supinf_hyper_rhs(l, x)).collect::<Result<Vec<_>>>()?;
    let prime_rhs: Vec<usize> = (0..n).map(|x| supinf_prime_rhs(l, x)).collect();
    let rows = [
        ("continuous", is_continuous(l.poset())?.holds, &cont_rhs),
        ("hypercontinuous", is_hypercontinuous(l)?.holds, &hyper_rhs),
        ("prime_continuous", is_prime_continuous(l)?.holds, &prime_rhs),
    ];
    let mut profile = Vec::new();
    let mut failure = None;
    for (name, relational, rhs) in rows {
        let gap = first_gap(rhs);
        profile.push((name, relational));
        if relational != gap.is_none() && failure.is_none() {
            let mut w = Witness::new().note(format!(
                "{name}: relational form {relational}, sup-inf form {}",
                gap.is_none()
            ));
            if let Some(x) = gap {
                w = w.element(x).sides(rhs[x], x);
            }
            failure = Some(w);
        }
    }
    let v = failure.map_or_else(Verdict::pass, Verdict::fail);
    Ok(v.with_profile(profile))
}

/// join continuous = frame = distributive = prime continuous, and hypercontinuous.
pub fn discrimination_check(l: &FiniteLattice) -> Result<Verdict> {
    let jc = is_join_continuous(l)?.holds;
    let fr = is_frame(l)?.holds;
    let di = is_distributive(l)?.holds;
    let pc = is_prime_continuous(l)?.holds;
    let hc = is_hypercontinuous(l)?.holds;
    let profile = vec![
        ("join_continuous", jc),
        ("frame", fr),
        ("distributive", di),
        ("prime_continuous", pc),
        ("hypercontinuous", hc),
    ];
    let v = if jc == fr && fr == di && di == pc && hc {
        Verdict::pass()
    } else {
        Verdict::fail(
            Witness::new()
                .note("join_continuous, frame, distributive, prime_continuous disagree or hypercontinuity fails"),
        )
    };
    Ok(v.with_profile(profile))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{named, posets_up_to};
    use crate::lattice::as_lattice;

    fn lat(name: &str) -> FiniteLattice {
        as_lattice(&named(name).unwrap()).unwrap()
    }

    #[test]
    fn lemma31_examples() {
        let b2 = lat("boolean(2)");
        assert!(lemma31_check(&b2).unwrap().holds);
        let m = b2.poset().subset([1, 2]);
        let p = b2.poset();
        assert_eq!(b2.meet_of(&p.down_closure(&m).complement()), b2.top());
        assert_eq!(
            b2.join_all(m.iter().map(|e| b2.meet_of(&p.down_set(e).complement()))),
            b2.top()
        );

        let m3 = lat("M3");
        let v = lemma31_check(&m3).unwrap();
        let w = v.witness.unwrap();
        let idx = |s: &str| m3.poset().index_of(s).unwrap();
        assert_eq!(w.subsets, vec![m3.poset().subset([idx("a"), idx("b")])]);
        assert_eq!((w.lhs, w.rhs), (Some(idx("c")), Some(idx("0"))));
        assert!(lemma31_identity_check(&m3).unwrap().holds);

        // M = ∅: both sides are the least element
        for name in ["M3", "N5", "chain(3)", "chain(1)"] {
            let l = lat(name);
            let empty = l.poset().empty_subset();
            assert_eq!(l.meet_of(&l.poset().down_closure(&empty).complement()), l.bottom());
            assert_eq!(l.join_all(empty.iter()), l.bottom());
        }
    }

    #[test]
    fn theorem_examples() {
        for name in ["M3", "boolean(3)", "chain(1)", "N5"] {
            assert!(thm32_check(&lat(name)).unwrap().holds, "{name}");
        }
        let v = thm32_check(&lat("M3")).unwrap();
        assert_eq!(
            v.profile,
            vec![
                ("join_continuous".to_string(), false),
                ("hypercontinuous".to_string(), true),
                ("prime_continuous".to_string(), false)
            ]
        );
        for name in [
            "antichain(3)",
            "chain(4)",
            "chain(1)",
            "N5",
            "antichain(2)",
            "chain(3)",
            "M3",
        ] {
            let p = named(name).unwrap();
            assert!(thm34_check(&p).unwrap().holds, "{name}");
            assert!(thm21_check(&p).unwrap().holds, "{name}");
            assert!(thm23_check(&p).unwrap().holds, "{name}");
            assert!(thm25_check(&p).unwrap().holds, "{name}");
            assert!(stone_dual_check(&p).unwrap().holds, "{name}");
        }
        for p in posets_up_to(4).unwrap() {
            assert!(thm34_check(&p).unwrap().holds);
        }
    }

    #[test]
    fn sigma_sizes() {
        let a3 = named("antichain(3)").unwrap();
        assert_eq!(scott_opens(&a3, 100).unwrap().len(), 8);
        let c4 = named("chain(4)").unwrap();
        let s = scott_opens(&c4, 100).unwrap();
        assert!(is_isomorphic(s.lattice.poset(), &named("chain(5)").unwrap()));
    }

    #[test]
    fn chain_and_characterization_examples() {
        for name in ["M3", "N5", "boolean(2)", "chain(3)", "chain(1)"] {
            assert!(chain_check(&lat(name)).unwrap().holds, "{name}");
            assert!(characterization_check(&lat(name)).unwrap().holds, "{name}");
            assert!(discrimination_check(&lat(name)).unwrap().holds, "{name}");
        }
        let v = characterization_check(&lat("M3")).unwrap();
        assert!(v.profile.contains(&("prime_continuous".to_string(), false)));
        assert_eq!(supinf_prime_rhs(&lat("M3"), 1), 0);
    }
}
