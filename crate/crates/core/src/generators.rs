//! Test universes: named examples, isomorphism-class enumeration, random posets.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::{canonical_form, certificate, Certificate};
use crate::error::{OrderError, Result};
use crate::lattice::{as_lattice, FiniteLattice};
use crate::limits;
use crate::poset::{BuildMode, FinitePoset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    Posets,
    Lattices,
    Random,
}

/// Parameters for a generated universe.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub kind: Kind,
    pub seed: u64,
    /// Probability of relating a pair; only read for [`Kind::Random`].
    pub density: f64,
}

impl GenSpec {
    pub fn random(n: usize, seed: u64, density: f64) -> Self {
        GenSpec {
            n,
            kind: Kind::Random,
            seed,
            density,
        }
    }
}

fn letter_labels(k: usize) -> Vec<String> {
    if k <= 26 {
        (0..k).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
    } else {
        (0..k).map(|i| format!("e{i}")).collect()
    }
}

fn parse_arg(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?
        .strip_prefix('(')?
        .strip_suffix(')')?
        .trim()
        .parse()
        .ok()
}

pub fn chain(k: usize) -> FinitePoset {
    let pairs: Vec<(usize, usize)> = (1..k).map(|i| (i - 1, i)).collect();
    FinitePoset::from_index_pairs(&format!("chain({k})"), letter_labels(k), &pairs).expect("chain")
}

pub fn antichain(k: usize) -> FinitePoset {
    FinitePoset::from_index_pairs(&format!("antichain({k})"), letter_labels(k), &[]).expect("antichain")
}

/// Powerset of a `k`-element set; elements are listed by bitmask and named by
/// their members (`0` for the empty set).
pub fn boolean(k: usize) -> Result<FinitePoset> {
    if k > 10 {
        return Err(OrderError::SizeLimit {
            what: "boolean lattice rank",
            size: k as u128,
            cap: 10,
        });
    }
    let atoms = letter_labels(k);
    let labels: Vec<String> = (0..1usize << k)
        .map(|m| {
            if m == 0 {
                "0".to_string()
            } else {
                (0..k).filter(|i| m >> i & 1 == 1).map(|i| atoms[i].as_str()).collect()
            }
        })
        .collect();
    let mut pairs = Vec::new();
    for m in 0..1usize << k {
        for i in 0..k {
            if m >> i & 1 == 0 {
                pairs.push((m, m | 1 << i));
            }
        }
    }
    FinitePoset::from_index_pairs(&format!("boolean({k})"), labels, &pairs)
}

/// The diamond: bottom `0`, three atoms `a b c`, top `1`.
pub fn m3() -> FinitePoset {
    FinitePoset::build(
        "M3",
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")],
        BuildMode::Covers,
    )
    .expect("M3")
}

/// The pentagon: `0 < a < c < 1` and `0 < b < 1`.
pub fn n5() -> FinitePoset {
    FinitePoset::build(
        "N5",
        &["0", "a", "b", "c", "1"],
        &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        BuildMode::Covers,
    )
    .expect("N5")
}

/// Looks up `chain(k)`, `antichain(k)`, `boolean(k)`, `M3`, `N5` or `one-point`.
pub fn named(name: &str) -> Result<FinitePoset> {
    let name = name.trim();
    match name {
        "M3" => return Ok(m3()),
        "N5" => return Ok(n5()),
        "one-point" => return Ok(chain(1).with_name("one-point")),
        _ => {}
    }
    if let Some(k) = parse_arg(name, "chain") {
        return Ok(chain(k));
    }
    if let Some(k) = parse_arg(name, "antichain") {
        return Ok(antichain(k));
    }
    if let Some(k) = parse_arg(name, "boolean") {
        return boolean(k);
    }
    Err(OrderError::UnknownName(name.to_string()))
}

fn check_enum(n: usize) -> Result<()> {
    let cap = limits::max_enum_n();
    if n > cap {
        return Err(OrderError::SizeLimit {
            what: "isomorphism-class enumeration",
            size: n as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}

/// One canonical representative per isomorphism class of `n`-element posets,
/// sorted by certificate.
///
/// Each class at size `n` arises from a class at size `n - 1` by adding a new
/// maximal element above some down-set, so the level is built from the
/// previous one and deduplicated by canonical certificate.
pub fn enumerate_posets(n: usize) -> Result<Vec<FinitePoset>> {
    check_enum(n)?;
    let mut level: Vec<FinitePoset> = vec![FinitePoset::from_index_pairs("", Vec::new(), &[])?];
    for size in 1..=n {
        let mut seen: HashSet<Certificate> = HashSet::new();
        let mut next: Vec<(Certificate, FinitePoset)> = Vec::new();
        for p in &level {
            for below in p.lower_sets(usize::MAX)? {
                let mut pairs: Vec<(usize, usize)> = p.hasse();
                pairs.extend(below.iter().map(|b| (b, size - 1)));
                let labels = (0..size).map(|i| i.to_string()).collect();
                let q = FinitePoset::from_index_pairs("", labels, &pairs)?;
                let cert = certificate(&q);
                if seen.insert(cert.clone()) {
                    next.push((cert, q));
                }
            }
        }
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next
            .into_iter()
            .enumerate()
            .map(|(i, (_, q))| canonical_form(&q).with_name(format!("P{size}.{i}")))
            .collect();
    }
    Ok(level)
}

/// Lattices among [`enumerate_posets`], in the same canonical order.
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteLattice>> {
    let lattices: Vec<FiniteLattice> = enumerate_posets(n)?
        .into_iter()
        .filter_map(|p| as_lattice(&p).ok())
        .enumerate()
        .map(|(i, l)| {
            let p = l.into_poset().with_name(format!("L{n}.{i}"));
            as_lattice(&p).expect("lattice")
        })
        .collect();
    Ok(lattices)
}

/// All posets with `1 <= n <= max_n`, smallest first.
pub fn posets_up_to(max_n: usize) -> Result<Vec<FinitePoset>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_posets(n)?);
    }
    Ok(out)
}

pub fn lattices_up_to(max_n: usize) -> Result<Vec<FiniteLattice>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_lattices(n)?);
    }
    Ok(out)
}

/// Random poset: shuffle the elements into a linear order, relate each
/// earlier/later pair with probability `density`, then close transitively.
/// A pure function of `(n, seed, density)`; the sampler is biased and not
/// uniform over isomorphism classes.
pub fn random_poset(spec: &GenSpec) -> Result<FinitePoset> {
    if spec.kind != Kind::Random {
        return Err(OrderError::InvalidArgument("random_poset needs kind = random".into()));
    }
    if !(0.0..=1.0).contains(&spec.density) {
        return Err(OrderError::InvalidArgument(format!(
            "density {} outside [0, 1]",
            spec.density
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut order: Vec<usize> = (0..spec.n).collect();
    order.shuffle(&mut rng);
    let mut pairs = Vec::new();
    for i in 0..spec.n {
        for j in i + 1..spec.n {
            if rng.gen_bool(spec.density) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    let labels = (0..spec.n).map(|i| i.to_string()).collect();
    FinitePoset::from_index_pairs(
        &format!("random(n={}, seed={}, density={})", spec.n, spec.seed, spec.density),
        labels,
        &pairs,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::is_isomorphic;

    #[test]
    fn named_examples() {
        assert_eq!(named("chain(1)").unwrap().len(), 1);
        let m3 = named("M3").unwrap();
        assert_eq!(m3.len(), 5);
        let atoms = m3.subset([1, 2, 3]);
        let bottom = m3.subset([0]);
        assert_eq!(m3.minimal_elements(&m3.carrier().difference(&bottom)), atoms);
        let b2 = named("boolean(2)").unwrap();
        assert_eq!(b2.labels(), &["0", "a", "b", "ab"]);
        assert_eq!(b2.hasse().len(), 4);
        assert!(matches!(named("K4"), Err(OrderError::UnknownName(_))));
        assert!(named("chain(x)").is_err());
    }

    #[test]
    fn small_enumeration_counts() {
        assert_eq!(enumerate_posets(1).unwrap().len(), 1);
        assert_eq!(enumerate_posets(3).unwrap().len(), 5);
        assert_eq!(enumerate_lattices(1).unwrap().len(), 1);
        let four = enumerate_lattices(4).unwrap();
        assert_eq!(four.len(), 2);
        assert!(four.iter().any(|l| is_isomorphic(l.poset(), &chain(4))));
        assert!(four.iter().any(|l| is_isomorphic(l.poset(), &boolean(2).unwrap())));
    }

    #[test]
    fn enumeration_respects_cap() {
        let too_big = limits::max_enum_n() + 1;
        assert!(matches!(enumerate_posets(too_big), Err(OrderError::SizeLimit { .. })));
    }

    #[test]
    fn random_extremes() {
        let empty = random_poset(&GenSpec::random(5, 1, 0.0)).unwrap();
        assert!(is_isomorphic(&empty, &antichain(5)));
        let full = random_poset(&GenSpec::random(5, 1, 1.0)).unwrap();
        assert!(is_isomorphic(&full, &chain(5)));
        let p = random_poset(&GenSpec::random(6, 42, 0.3)).unwrap();
        p.validate().unwrap();
        assert_eq!(p, random_poset(&GenSpec::random(6, 42, 0.3)).unwrap());
        let bad = GenSpec {
            kind: Kind::Posets,
            ..GenSpec::random(3, 0, 0.5)
        };
        assert!(random_poset(&bad).is_err());
    }
}
