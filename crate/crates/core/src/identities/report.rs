use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::exactmat::IndexSet;
use crate::polyring::{PolyStats, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Sylvester,
    Chio,
    CauchyBinet,
    Griolv,
    LemmaAdb0,
    B0,
    Ab0,
    Quotient,
}

impl CheckKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckKind::Sylvester => "sylvester",
            CheckKind::Chio => "chio",
            CheckKind::CauchyBinet => "cauchy-binet",
            CheckKind::Griolv => "griolv",
            CheckKind::LemmaAdb0 => "lemma-adb0",
            CheckKind::B0 => "b0",
            CheckKind::Ab0 => "ab0",
            CheckKind::Quotient => "quotient",
        }
    }
}

/// Which corner hypotheses a divisibility statement assumes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `b_{n+1,n+1} = 0`; `det A` divides `det W`.
    B0,
    /// Both corners zero; `det A * det B` divides `det W`.
    Ab0,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::B0 => "b0",
            Mode::Ab0 => "ab0",
        }
    }
}

/// Evidence behind a failed check.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct Witness {
    pub description: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trial: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subsets: Option<(IndexSet, IndexSet)>,
    /// Named matrices in the matrix text format.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub matrices: BTreeMap<String, String>,
    /// Named scalar or polynomial values in text form.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub values: BTreeMap<String, String>,
}

impl Witness {
    pub fn new(description: impl Into<String>) -> Self {
        Witness {
            description: description.into(),
            ..Witness::default()
        }
    }

    pub fn with_trial(mut self, trial: u64) -> Self {
        self.trial = Some(trial);
        self
    }

    pub fn with_subsets(mut self, rows: &IndexSet, cols: &IndexSet) -> Self {
        self.subsets = Some((rows.clone(), cols.clone()));
        self
    }

    pub fn with_matrix(mut self, name: &str, text: impl ToString) -> Self {
        self.matrices.insert(name.to_owned(), text.to_string());
        self
    }

    pub fn with_value(mut self, name: &str, value: impl ToString) -> Self {
        self.values.insert(name.to_owned(), value.to_string());
        self
    }

    /// Records a polynomial by its size, or in full when it is small.
    pub fn with_poly(self, name: &str, p: &Polynomial) -> Self {
        if p.num_terms() <= 64 {
            self.with_value(name, p)
        } else {
            let s = p.stats();
            let degree = s.degree.map_or("-".to_owned(), |d| d.to_string());
            self.with_value(name, format!("<{} terms, degree {degree}>", s.monomials))
        }
    }
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: CheckKind,
    pub n: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
    /// `(n, p, m)` shape parameters, for checks on rectangular products.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<[usize; 3]>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<PolyStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub(crate) fn new(check: CheckKind, n: usize, k: usize) -> Self {
        VerificationReport {
            check,
            n,
            k,
            mode: None,
            dims: None,
            pass: true,
            stats: None,
            witness: None,
            elapsed_ms: 0,
        }
    }

    /// Marks the report failed, keeping the first witness seen.
    pub(crate) fn fail(&mut self, witness: Witness) {
        self.pass = false;
        self.witness.get_or_insert(witness);
    }

    pub(crate) fn finish(mut self, started: Instant) -> Self {
        self.elapsed_ms = elapsed_ms(started);
        self
    }
}

/// Outcome of dividing `det W` by the divisor a theorem promises.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientReport {
    pub check: CheckKind,
    pub n: usize,
    pub k: usize,
    pub mode: Mode,
    /// Divisible and the quotient times the divisor reproduces `det W`.
    pub pass: bool,
    pub divisible: bool,
    /// Size of the quotient.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stats: Option<PolyStats>,
    pub detw_stats: PolyStats,
    pub divisor_stats: PolyStats,
    /// `det W` with no corner constraints at all, when requested.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unconstrained_detw_stats: Option<PolyStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    pub elapsed_ms: u64,
    #[serde(skip)]
    pub quotient: Option<Polynomial>,
    #[serde(skip)]
    pub det_w: Polynomial,
    #[serde(skip)]
    pub divisor: Polynomial,
}

pub(crate) fn elapsed_ms(started: Instant) -> u64 {
    u64::try_from(started.elapsed().as_millis()).unwrap_or(u64::MAX)
}
