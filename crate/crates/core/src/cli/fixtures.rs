use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::clsgraph::{classify, GraphShape, TorsionConfiguration};
use crate::error::{AtlasError, Result};
use crate::qpoly::Rational;
use crate::weier::WeierstrassModel;

/// A coefficient written either as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(i64),
    Text(String),
}

impl Coefficient {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            Coefficient::Int(n) => Ok(Rational::from_integer((*n).into())),
            Coefficient::Text(s) => super::parse_rational(s),
        }
    }
}

/// One line of a fixture file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureEntry {
    pub label: String,
    pub a_invariants: Vec<Coefficient>,
    pub expected_shape: String,
    pub expected_config: Vec<String>,
    #[serde(default)]
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<serde_json::Value>,
}

impl FixtureEntry {
    pub fn model(&self) -> Result<WeierstrassModel> {
        let a: Vec<Rational> = self
            .a_invariants
            .iter()
            .map(Coefficient::to_rational)
            .collect::<Result<_>>()?;
        let a: [Rational; 5] = a.try_into().map_err(|v: Vec<Rational>| {
            AtlasError::Parse(format!("{}: expected 5 a-invariants, got {}", self.label, v.len()))
        })?;
        WeierstrassModel::new(a)
    }

    pub fn expected(&self) -> Result<(GraphShape, TorsionConfiguration)> {
        Ok((
            self.expected_shape.parse()?,
            TorsionConfiguration::from_labels(&self.expected_config)?,
        ))
    }
}

/// Reads a JSON Lines fixture file; blank lines are skipped.
pub fn load_fixtures(path: &Path) -> Result<Vec<FixtureEntry>> {
    let text = std::fs::read_to_string(path)?;
    parse_fixtures(&text)
}

pub fn parse_fixtures(text: &str) -> Result<Vec<FixtureEntry>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let entry: FixtureEntry =
                serde_json::from_str(l).map_err(|e| AtlasError::Parse(format!("fixture line {}: {e}", i + 1)))?;
            entry.expected()?;
            Ok(entry)
        })
        .collect()
}

/// Result of classifying one fixture entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutcome {
    pub label: String,
    pub expected_shape: String,
    pub expected_config: String,
    /// `shape config` on success, the error message otherwise.
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub outcomes: Vec<VerifyOutcome>,
    pub passed: usize,
    pub total: usize,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &VerifyOutcome> {
        self.outcomes.iter().filter(|o| !o.pass)
    }
}

pub fn verify_entry(entry: &FixtureEntry) -> VerifyOutcome {
    let expected = entry.expected();
    let computed = entry.model().and_then(|e| classify(&e)).map(|g| {
        let c = g.classification.expect("classify sets the classification");
        (c.shape, c.config)
    });
    let pass = matches!((&expected, &computed), (Ok(a), Ok(b)) if a == b);
    VerifyOutcome {
        label: entry.label.clone(),
        expected_shape: entry.expected_shape.clone(),
        expected_config: format!("({})", entry.expected_config.join(",")),
        computed: match computed {
            Ok((s, c)) => format!("{s} {c}"),
            Err(e) => format!("error: {e}"),
        },
        pass,
    }
}

/// Classifies every entry in parallel; outcomes are sorted by label.
pub fn verify_entries(entries: &[FixtureEntry]) -> VerifySummary {
    let mut outcomes: Vec<VerifyOutcome> = entries.par_iter().map(verify_entry).collect();
    outcomes.sort_by(|a, b| a.label.cmp(&b.label));
    let passed = outcomes.iter().filter(|o| o.pass).count();
    VerifySummary {
        total: outcomes.len(),
        passed,
        outcomes,
    }
}

pub fn run_verify_tables(path: &Path) -> Result<VerifySummary> {
    Ok(verify_entries(&load_fixtures(path)?))
}
