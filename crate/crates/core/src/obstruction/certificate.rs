use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use super::genus::GenusValue;
use super::rational::RationalRepr;
use crate::error::{Error, Result};

/// Identifies the inequality a certificate applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    #[serde(rename = "prop_1_4")]
    Prop14,
    #[serde(rename = "cor_1_6")]
    Cor16,
    #[serde(rename = "cor_1_9")]
    Cor19,
    #[serde(rename = "thm_2_3")]
    Thm23,
    #[serde(rename = "thm_2_5")]
    Thm25,
    #[serde(rename = "cor_2_6")]
    Cor26,
    #[serde(rename = "cor_2_7")]
    Cor27,
    #[serde(rename = "thm_3_2")]
    Thm32,
    #[serde(rename = "cor_3_3")]
    Cor33,
    #[serde(rename = "cor_3_4")]
    Cor34,
    #[serde(rename = "prop_3_6")]
    Prop36,
}

impl Rule {
    pub const ALL: [Rule; 11] = [
        Rule::Prop14,
        Rule::Cor16,
        Rule::Cor19,
        Rule::Thm23,
        Rule::Thm25,
        Rule::Cor26,
        Rule::Cor27,
        Rule::Thm32,
        Rule::Cor33,
        Rule::Cor34,
        Rule::Prop36,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Rule::Prop14 => "prop_1_4",
            Rule::Cor16 => "cor_1_6",
            Rule::Cor19 => "cor_1_9",
            Rule::Thm23 => "thm_2_3",
            Rule::Thm25 => "thm_2_5",
            Rule::Cor26 => "cor_2_6",
            Rule::Cor27 => "cor_2_7",
            Rule::Thm32 => "thm_3_2",
            Rule::Cor33 => "cor_3_3",
            Rule::Cor34 => "cor_3_4",
            Rule::Prop36 => "prop_3_6",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Rule {
    type Err = Error;

    /// Accepts the identifier (`thm_2_3`) or its short form (`thm23`).
    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "");
        Rule::ALL
            .into_iter()
            .find(|r| r.id().replace('_', "") == key)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown rule '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Obstructed,
    NotObstructed,
}

impl Verdict {
    pub fn from_obstructed(obstructed: bool) -> Self {
        if obstructed {
            Verdict::Obstructed
        } else {
            Verdict::NotObstructed
        }
    }

    pub fn is_obstructed(self) -> bool {
        self == Verdict::Obstructed
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "OBSTRUCTED",
            Verdict::NotObstructed => "NOT_OBSTRUCTED",
        })
    }
}

/// A named value stored in a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "QuantityRepr", try_from = "QuantityRepr")]
pub enum Quantity {
    Integer(i64),
    Rational(Rational64),
    Genus(GenusValue),
    Boolean(bool),
    Text(String),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "type", content = "value", rename_all = "snake_case")]
enum QuantityRepr {
    Integer(i64),
    Rational(RationalRepr),
    Genus(GenusValue),
    Boolean(bool),
    Text(String),
}

impl From<Quantity> for QuantityRepr {
    fn from(q: Quantity) -> Self {
        match q {
            Quantity::Integer(n) => QuantityRepr::Integer(n),
            Quantity::Rational(r) => QuantityRepr::Rational(r.into()),
            Quantity::Genus(g) => QuantityRepr::Genus(g),
            Quantity::Boolean(b) => QuantityRepr::Boolean(b),
            Quantity::Text(t) => QuantityRepr::Text(t),
        }
    }
}

impl TryFrom<QuantityRepr> for Quantity {
    type Error = Error;

    fn try_from(q: QuantityRepr) -> Result<Self> {
        Ok(match q {
            QuantityRepr::Integer(n) => Quantity::Integer(n),
            QuantityRepr::Rational(r) => Quantity::Rational(r.try_into()?),
            QuantityRepr::Genus(g) => Quantity::Genus(g),
            QuantityRepr::Boolean(b) => Quantity::Boolean(b),
            QuantityRepr::Text(t) => Quantity::Text(t),
        })
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Integer(n) => write!(f, "{n}"),
            Quantity::Rational(r) => write!(f, "{r}"),
            Quantity::Genus(g) => write!(f, "{} ({})", g.value(), g.kind().as_str()),
            Quantity::Boolean(b) => write!(f, "{b}"),
            Quantity::Text(t) => f.write_str(t),
        }
    }
}

/// A checkable record of one application of an obstruction rule.
///
/// Everything except `inputs` is derived: [`Certificate::recheck`] rebuilds
/// the certificate from its inputs and compares.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub rule: Rule,
    pub inputs: BTreeMap<String, Quantity>,
    /// Hypotheses taken on trust; never verified by this crate.
    pub assumptions: Vec<String>,
    pub computed: BTreeMap<String, Quantity>,
    pub inequality_trace: Vec<String>,
    pub verdict: Verdict,
}

impl Certificate {
    /// Re-derives the certificate from `inputs` alone.
    pub fn rebuild(&self) -> Result<Certificate> {
        super::rules::rebuild(self)
    }

    /// True iff rebuilding from the stored inputs reproduces this record.
    pub fn recheck(&self) -> Result<bool> {
        Ok(self.rebuild()? == *self)
    }

    fn input(&self, name: &str) -> Result<&Quantity> {
        self.inputs
            .get(name)
            .ok_or_else(|| Error::InvalidArgument(format!("certificate input '{name}' missing")))
    }

    fn mismatch(name: &str, want: &str) -> Error {
        Error::InvalidArgument(format!("certificate input '{name}' must be {want}"))
    }

    pub(crate) fn int(&self, name: &str) -> Result<i64> {
        match self.input(name)? {
            Quantity::Integer(n) => Ok(*n),
            _ => Err(Self::mismatch(name, "an integer")),
        }
    }

    pub(crate) fn genus(&self, name: &str) -> Result<GenusValue> {
        match self.input(name)? {
            Quantity::Genus(g) => Ok(g.clone()),
            _ => Err(Self::mismatch(name, "a genus value")),
        }
    }

    pub(crate) fn optional_genus(&self, name: &str) -> Result<Option<GenusValue>> {
        match self.inputs.get(name) {
            None => Ok(None),
            Some(Quantity::Genus(g)) => Ok(Some(g.clone())),
            Some(_) => Err(Self::mismatch(name, "a genus value")),
        }
    }

    pub(crate) fn boolean(&self, name: &str) -> Result<bool> {
        match self.input(name)? {
            Quantity::Boolean(b) => Ok(*b),
            _ => Err(Self::mismatch(name, "a boolean")),
        }
    }

    pub(crate) fn text(&self, name: &str) -> Result<String> {
        match self.input(name)? {
            Quantity::Text(t) => Ok(t.clone()),
            _ => Err(Self::mismatch(name, "text")),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rule {}: {}", self.rule, self.verdict)?;
        for (k, v) in &self.inputs {
            writeln!(f, "  input    {k} = {v}")?;
        }
        for a in &self.assumptions {
            writeln!(f, "  assume   {a}")?;
        }
        for (k, v) in &self.computed {
            writeln!(f, "  computed {k} = {v}")?;
        }
        for line in &self.inequality_trace {
            writeln!(f, "  | {line}")?;
        }
        Ok(())
    }
}

/// Incremental construction used by the rule functions.
pub(crate) struct Draft {
    cert: Certificate,
}

impl Draft {
    pub fn new(rule: Rule) -> Self {
        Self {
            cert: Certificate {
                rule,
                inputs: BTreeMap::new(),
                assumptions: Vec::new(),
                computed: BTreeMap::new(),
                inequality_trace: Vec::new(),
                verdict: Verdict::NotObstructed,
            },
        }
    }

    pub fn input(&mut self, name: &str, q: Quantity) -> &mut Self {
        self.cert.inputs.insert(name.to_string(), q);
        self
    }

    pub fn assume(&mut self, text: impl Into<String>) -> &mut Self {
        self.cert.assumptions.push(text.into());
        self
    }

    pub fn compute(&mut self, name: &str, q: Quantity) -> &mut Self {
        self.cert.computed.insert(name.to_string(), q);
        self
    }

    pub fn line(&mut self, text: impl Into<String>) -> &mut Self {
        self.cert.inequality_trace.push(text.into());
        self
    }

    pub fn finish(mut self, obstructed: bool) -> Certificate {
        self.cert.verdict = Verdict::from_obstructed(obstructed);
        self.cert
    }
}
