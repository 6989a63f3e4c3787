//! JSON reports. Elements always appear by label, never by index.

use std::collections::BTreeMap;

use orderkit::generators::{antichain, boolean, chain, m3, n5};
use orderkit::verifier::{Failure, SuiteReport};
use orderkit::{is_isomorphic, FinitePoset, Verdict, Witness};
use serde::Serialize;

use crate::posetfile;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum PropertyValue {
    Bool(bool),
    Skipped(&'static str),
}

impl PropertyValue {
    pub const SKIPPED: PropertyValue = PropertyValue::Skipped("skipped");

    pub fn render(&self) -> &'static str {
        match self {
            PropertyValue::Bool(true) => "true",
            PropertyValue::Bool(false) => "false",
            PropertyValue::Skipped(s) => s,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub elements: Vec<String>,
    pub subsets: Vec<Vec<String>>,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl WitnessJson {
    pub fn new(p: &FinitePoset, w: &Witness) -> Self {
        let label = |i: usize| p.label(i).to_string();
        WitnessJson {
            elements: w.elements.iter().map(|&i| label(i)).collect(),
            subsets: w.subsets.iter().map(|s| s.iter().map(label).collect()).collect(),
            lhs: w.lhs.map(label),
            rhs: w.rhs.map(label),
            note: w.note.clone(),
        }
    }

    /// `elements a; subsets {b,c}; lhs a; rhs 1`
    pub fn render(&self) -> String {
        let mut parts = Vec::new();
        if !self.elements.is_empty() {
            parts.push(format!("elements {}", self.elements.join(",")));
        }
        if !self.subsets.is_empty() {
            let sets: Vec<String> = self.subsets.iter().map(|s| format!("{{{}}}", s.join(","))).collect();
            parts.push(format!("subsets {}", sets.join(" ")));
        }
        if let Some(l) = &self.lhs {
            parts.push(format!("lhs {l}"));
        }
        if let Some(r) = &self.rhs {
            parts.push(format!("rhs {r}"));
        }
        if let Some(n) = &self.note {
            parts.push(n.clone());
        }
        parts.join("; ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceJson {
    pub name: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub known_as: Option<String>,
    /// The instance in poset-file syntax.
    pub poset: String,
    pub profile: BTreeMap<String, bool>,
    pub witness: Option<WitnessJson>,
}

impl InstanceJson {
    pub fn new(f: &Failure) -> Self {
        InstanceJson {
            name: f.instance.name().to_string(),
            n: f.instance.len(),
            known_as: known_name(&f.instance),
            poset: posetfile::emit(&f.instance).unwrap_or_default(),
            profile: f.verdict.profile.iter().cloned().collect(),
            witness: f.verdict.witness.as_ref().map(|w| WitnessJson::new(&f.instance, w)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteJson {
    pub suite: &'static str,
    pub universe: String,
    pub instances: usize,
    pub passed: bool,
    pub trivialized: Vec<&'static str>,
    pub note: &'static str,
    pub failures: Vec<InstanceJson>,
    pub outside_hypothesis: Vec<InstanceJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl SuiteJson {
    pub fn new(r: &SuiteReport, deterministic: bool) -> Self {
        SuiteJson {
            suite: r.suite.name(),
            universe: r.universe.clone(),
            instances: r.instances,
            passed: r.passed(),
            trivialized: r.trivialized().to_vec(),
            note: r.note(),
            failures: r.failures.iter().map(InstanceJson::new).collect(),
            outside_hypothesis: r.outside_hypothesis.iter().map(InstanceJson::new).collect(),
            wall_time_ms: (!deterministic).then_some(r.wall_time.as_millis()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: String,
    pub n: usize,
    pub properties: BTreeMap<String, PropertyValue>,
    pub witnesses: BTreeMap<String, WitnessJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub suite: Option<Vec<SuiteJson>>,
}

impl Report {
    pub fn new(name: impl Into<String>, n: usize) -> Self {
        Report {
            name: name.into(),
            n,
            properties: BTreeMap::new(),
            witnesses: BTreeMap::new(),
            suite: None,
        }
    }

    /// Records `verdict` (or `skipped` for `None`) under `name`.
    pub fn record(&mut self, p: &FinitePoset, name: &str, verdict: Option<&Verdict>) {
        let value = verdict.map_or(PropertyValue::SKIPPED, |v| PropertyValue::Bool(v.holds));
        self.properties.insert(name.to_string(), value);
        if let Some(w) = verdict.and_then(|v| v.witness.as_ref()) {
            self.witnesses.insert(name.to_string(), WitnessJson::new(p, w));
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }
}

/// The named example `p` is isomorphic to, if any.
pub fn known_name(p: &FinitePoset) -> Option<String> {
    let n = p.len();
    let mut candidates = vec![("M3".to_string(), m3()), ("N5".to_string(), n5())];
    candidates.push((format!("chain({n})"), chain(n)));
    candidates.push((format!("antichain({n})"), antichain(n)));
    if n.is_power_of_two() {
        let k = n.trailing_zeros() as usize;
        if let Ok(b) = boolean(k) {
            candidates.push((format!("boolean({k})"), b));
        }
    }
    candidates
        .into_iter()
        .find(|(_, q)| q.len() == n && is_isomorphic(p, q))
        .map(|(name, _)| name)
}
