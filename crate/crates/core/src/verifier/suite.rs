//! Exhaustive suites over enumerated universes, and counterexample search.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::{OrderError, Result};
use crate::generators::{enumerate_lattices, enumerate_posets, Kind};
use crate::lattice::{as_lattice, FiniteLattice};
use crate::poset::FinitePoset;
use crate::properties::is_join_continuous;
use crate::verdict::{Verdict, Witness};

use super::expr::Expr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Lemma31,
    Thm32,
    Thm34,
    Thm21,
    Thm23,
    Thm25,
    Chains,
    Characterizations,
    Discrimination,
}

impl Suite {
    /// Every suite, in the order `full` runs them.
    pub const ALL: [Suite; 9] = [
        Suite::Lemma31,
        Suite::Thm32,
        Suite::Thm34,
        Suite::Thm21,
        Suite::Thm23,
        Suite::Thm25,
        Suite::Chains,
        Suite::Characterizations,
        Suite::Discrimination,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma31 => "lemma31",
            Suite::Thm32 => "thm32",
            Suite::Thm34 => "thm34",
            Suite::Thm21 => "thm21",
            Suite::Thm23 => "thm23",
            Suite::Thm25 => "thm25",
            Suite::Chains => "chains",
            Suite::Characterizations => "characterizations",
            Suite::Discrimination => "discrimination",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn on_lattices(self) -> bool {
        !matches!(self, Suite::Thm34 | Suite::Thm21 | Suite::Thm23 | Suite::Thm25)
    }

    /// Conjuncts that hold on every finite carrier.
    pub fn trivialized(self) -> &'static [&'static str] {
        match self {
            Suite::Lemma31 => &[],
            Suite::Thm32 => &["hypercontinuous"],
            Suite::Thm34 => &["meet_continuous", "quasicontinuous", "continuous"],
            Suite::Thm21 => &["continuous", "sigma_prime_continuous"],
            Suite::Thm23 => &["meet_continuous", "sigma_join_continuous", "gamma_frame"],
            Suite::Thm25 => &["quasicontinuous", "sigma_hypercontinuous"],
            Suite::Chains => &["hypercontinuous", "continuous"],
            Suite::Characterizations => &["continuous", "hypercontinuous"],
            Suite::Discrimination => &["hypercontinuous"],
        }
    }

    pub fn note(self) -> &'static str {
        match self {
            Suite::Lemma31 => {
                "equation checked for every M; failures on lattices that are not \
                 join continuous are listed separately and do not fail the suite"
            }
            Suite::Thm32 | Suite::Discrimination | Suite::Chains => {
                "join continuity and prime continuity discriminate between instances"
            }
            Suite::Characterizations => "only the prime-continuity characterisation discriminates between instances",
            Suite::Thm34 | Suite::Thm21 | Suite::Thm23 | Suite::Thm25 => {
                "both sides hold on every finite poset; run as a consistency test \
                 of independent predicate implementations"
            }
        }
    }
}

/// Isomorphism classes of posets or lattices with `min_n <= n <= max_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Universe {
    pub kind: Kind,
    pub min_n: usize,
    pub max_n: usize,
}

impl Universe {
    pub fn posets(max_n: usize) -> Self {
        Universe {
            kind: Kind::Posets,
            min_n: 1,
            max_n,
        }
    }

    pub fn lattices(max_n: usize) -> Self {
        Universe {
            kind: Kind::Lattices,
            min_n: 1,
            max_n,
        }
    }

    pub fn describe(&self) -> String {
        let kind = match self.kind {
            Kind::Lattices => "lattices",
            _ => "posets",
        };
        format!("{kind} n={}..{}", self.min_n, self.max_n)
    }

    fn level(&self, n: usize) -> Result<Vec<FinitePoset>> {
        match self.kind {
            Kind::Lattices => Ok(enumerate_lattices(n)?
                .into_iter()
                .map(FiniteLattice::into_poset)
                .collect()),
            Kind::Posets => enumerate_posets(n),
            Kind::Random => Err(OrderError::InvalidArgument(
                "random universes are not enumerable".into(),
            )),
        }
    }

    pub fn instances(&self) -> Result<Vec<FinitePoset>> {
        let mut out = Vec::new();
        for n in self.min_n..=self.max_n {
            out.extend(self.level(n)?);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    /// Canonical form of the offending instance.
    pub instance: FinitePoset,
    pub verdict: Verdict,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub universe: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    /// Lemma suite only: instances outside the join-continuity hypothesis on
    /// which the equation fails. Informational; they do not fail the suite.
    pub outside_hypothesis: Vec<Failure>,
    pub wall_time: Duration,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn trivialized(&self) -> &'static [&'static str] {
        self.suite.trivialized()
    }

    pub fn note(&self) -> &'static str {
        self.suite.note()
    }
}

enum Outcome {
    Pass,
    Fail(Verdict),
    OutsideHypothesis(Verdict),
}

fn check_instance(suite: Suite, p: &FinitePoset) -> Result<Outcome> {
    let lattice = |p: &FinitePoset| as_lattice(p);
    let verdict = match suite {
        Suite::Lemma31 => {
            let l = lattice(p)?;
            let v = super::lemma31_check(&l)?;
            if v.holds {
                return Ok(Outcome::Pass);
            }
            if is_join_continuous(&l)?.holds {
                return Ok(Outcome::Fail(v));
            }
            let identity = super::lemma31_identity_check(&l)?;
            if !identity.holds {
                return Ok(Outcome::Fail(identity));
            }
            return Ok(Outcome::OutsideHypothesis(v));
        }
        Suite::Thm32 => super::thm32_check(&lattice(p)?)?,
        Suite::Thm34 => super::thm34_check(p)?,
        Suite::Thm21 => {
            let v = super::thm21_check(p)?;
            if !v.holds {
                return Ok(Outcome::Fail(v));
            }
            let dual = super::stone_dual_check(p)?;
            let mut profile = v.profile;
            profile.extend(dual.profile.iter().cloned());
            Verdict { profile, ..dual }
        }
        Suite::Thm23 => super::thm23_check(p)?,
        Suite::Thm25 => super::thm25_check(p)?,
        Suite::Chains => super::chain_check(&lattice(p)?)?,
        Suite::Characterizations => super::characterization_check(&lattice(p)?)?,
        Suite::Discrimination => super::discrimination_check(&lattice(p)?)?,
    };
    Ok(if verdict.holds {
        Outcome::Pass
    } else {
        Outcome::Fail(verdict)
    })
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| OrderError::InvalidArgument(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Runs `suite` on every instance of `universe` with `jobs` worker threads
/// (0 = one per core). Lattice suites skip non-lattice instances. Per-instance
/// errors such as `SizeLimit` are recorded as failures. The report lists
/// instances in canonical order whatever the thread count.
pub fn run_suite(suite: Suite, universe: &Universe, jobs: usize) -> Result<SuiteReport> {
    let start = Instant::now();
    let mut instances = universe.instances()?;
    if suite.on_lattices() {
        instances.retain(|p| as_lattice(p).is_ok());
    }
    let outcomes: Vec<Result<Outcome>> = with_pool(jobs, || {
        instances.par_iter().map(|p| check_instance(suite, p)).collect()
    })?;
    let mut failures = Vec::new();
    let mut outside_hypothesis = Vec::new();
    for (p, outcome) in instances.iter().zip(outcomes) {
        let failure = |verdict| Failure {
            instance: p.clone(),
            verdict,
        };
        match outcome {
            Ok(Outcome::Pass) => {}
            Ok(Outcome::Fail(v)) => failures.push(failure(v)),
            Ok(Outcome::OutsideHypothesis(v)) => outside_hypothesis.push(failure(v)),
            Err(e) => failures.push(failure(Verdict::fail(Witness::new().note(e.to_string())))),
        }
    }
    Ok(SuiteReport {
        suite,
        universe: universe.describe(),
        instances: instances.len(),
        failures,
        outside_hypothesis,
        wall_time: start.elapsed(),
    })
}

/// The first instance (smallest `n`, then canonical order) satisfying `expr`.
pub fn search(universe: &Universe, expr: &str, jobs: usize) -> Result<Option<FinitePoset>> {
    let expr = Expr::parse(expr)?;
    for n in universe.min_n..=universe.max_n {
        let level = universe.level(n)?;
        let hits: Vec<Result<bool>> = with_pool(jobs, || level.par_iter().map(|p| expr.eval(p)).collect())?;
        for (p, hit) in level.into_iter().zip(hits) {
            if hit? {
                return Ok(Some(p));
            }
        }
    }
    Ok(None)
}
