use crate::subset::Subset;

/// Offending data behind a failed check. Elements are indices into the
/// structure that was checked; `lhs`/`rhs` are the two evaluated sides.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Witness {
    pub elements: Vec<usize>,
    pub subsets: Vec<Subset>,
    pub lhs: Option<usize>,
    pub rhs: Option<usize>,
    pub note: Option<String>,
}

impl Witness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn element(mut self, x: usize) -> Self {
        self.elements.push(x);
        self
    }

    pub fn subset(mut self, s: Subset) -> Self {
        self.subsets.push(s);
        self
    }

    pub fn sides(mut self, lhs: usize, rhs: usize) -> Self {
        self.lhs = Some(lhs);
        self.rhs = Some(rhs);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Outcome of a predicate or theorem check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
    /// Named predicate values a composite check was decided from.
    pub profile: Vec<(String, bool)>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
            profile: Vec::new(),
        }
    }

    pub fn fail(witness: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(witness),
            profile: Vec::new(),
        }
    }

    pub fn from_bool(holds: bool) -> Self {
        Verdict {
            holds,
            witness: None,
            profile: Vec::new(),
        }
    }

    pub fn with_profile(mut self, profile: Vec<(&str, bool)>) -> Self {
        self.profile = profile.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        self
    }
}
