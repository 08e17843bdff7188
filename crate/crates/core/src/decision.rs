//! Three-valued verdicts and the search limits that produce them.

use serde::Serialize;

/// Caps for bounded searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SearchBound {
    /// Largest total degree of any enumerated word, intermediate words included.
    pub max_degree: u64,
    /// Largest number of words collected for a single congruence class.
    pub max_class_size: usize,
    /// Largest coefficient or multiplier tried by coefficient searches.
    pub max_coefficient: u64,
}

impl SearchBound {
    pub const DEFAULT: SearchBound = SearchBound {
        max_degree: 6,
        max_class_size: 20_000,
        max_coefficient: 5,
    };

    pub fn new(max_degree: u64, max_class_size: usize, max_coefficient: u64) -> Self {
        assert!(max_class_size >= 1, "max_class_size must be positive");
        assert!(max_coefficient >= 1, "max_coefficient must be positive");
        SearchBound {
            max_degree,
            max_class_size,
            max_coefficient,
        }
    }

    pub fn with_degree(self, max_degree: u64) -> Self {
        SearchBound { max_degree, ..self }
    }

    pub fn with_coefficient(self, max_coefficient: u64) -> Self {
        SearchBound::new(self.max_degree, self.max_class_size, max_coefficient)
    }

    pub fn with_class_size(self, max_class_size: usize) -> Self {
        SearchBound::new(self.max_degree, max_class_size, self.max_coefficient)
    }
}

impl Default for SearchBound {
    fn default() -> Self {
        SearchBound::DEFAULT
    }
}

/// Holds with a witness, Fails with a counterexample, or Unknown at the exhausted bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "detail")]
pub enum Decision<H, F = H> {
    Holds(H),
    Fails(F),
    Unknown(SearchBound),
}

impl<H, F> Decision<H, F> {
    pub fn is_holds(&self) -> bool {
        matches!(self, Decision::Holds(_))
    }

    pub fn is_fails(&self) -> bool {
        matches!(self, Decision::Fails(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, Decision::Unknown(_))
    }

    pub fn holds(self) -> Option<H> {
        match self {
            Decision::Holds(h) => Some(h),
            _ => None,
        }
    }

    pub fn fails(self) -> Option<F> {
        match self {
            Decision::Fails(f) => Some(f),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Decision::Holds(_) => "Holds",
            Decision::Fails(_) => "Fails",
            Decision::Unknown(_) => "Unknown",
        }
    }

    pub fn map<H2, F2>(self, h: impl FnOnce(H) -> H2, f: impl FnOnce(F) -> F2) -> Decision<H2, F2> {
        match self {
            Decision::Holds(w) => Decision::Holds(h(w)),
            Decision::Fails(c) => Decision::Fails(f(c)),
            Decision::Unknown(b) => Decision::Unknown(b),
        }
    }

    /// Drops the witnesses.
    pub fn truth(&self) -> Truth {
        match self {
            Decision::Holds(_) => Truth::True,
            Decision::Fails(_) => Truth::False,
            Decision::Unknown(_) => Truth::Unknown,
        }
    }
}

/// Witness-free three-valued truth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Truth {
    True,
    False,
    Unknown,
}

impl Truth {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }
}
