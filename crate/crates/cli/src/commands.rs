use std::fmt::Write as _;

use cbord_core::braid::BraidWord;
use cbord_core::homfly::{homfly_with_budget, mfw_bounds, Budget};
use cbord_core::obstruction::{
    cor16_order, cor19_mirror, cor26_certificate, cor27_certificate, cor33_test, cor34_test,
    parse_rational, prop14_certificate, spc_test, thm23_certificate, thm25_certificate,
    Certificate, GenusKind, GenusValue, RationalRepr, Rule, Verdict,
};
use cbord_core::plumbing::{
    boundary_components, genus_lower_bound, is_spc_cboundary, is_strongly_excessive, mp_ord_v,
    tree_seifert_matrix, uniform_decomposition, PlumbingTree,
};
use cbord_core::seifert::{
    alexander, alexander_raw, bennequin_seifert_matrix, determinant_and_nullity, signature,
    SeifertMatrix,
};
use cbord_core::{Error, Rational64};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::args::{CertifyArgs, LinkInput};
use crate::report::{CliError, Outcome, Report};

type CmdResult = Result<Outcome, CliError>;

enum Link {
    Braid(BraidWord),
    Tree(PlumbingTree),
}

impl Link {
    fn parse(input: &LinkInput) -> Result<Self, CliError> {
        match (&input.braid, &input.tree) {
            (Some(b), None) => Ok(Link::Braid(b.parse()?)),
            (None, Some(t)) => Ok(Link::Tree(t.parse()?)),
            _ => Err(CliError::input("give either a braid word or --tree, not both")),
        }
    }

    fn echo(&self) -> String {
        match self {
            Link::Braid(b) => b.to_string(),
            Link::Tree(t) => t.to_string(),
        }
    }

    fn seifert(&self) -> SeifertMatrix {
        match self {
            Link::Braid(b) => bennequin_seifert_matrix(b),
            Link::Tree(t) => tree_seifert_matrix(t),
        }
    }
}

/// Integers that fit in `i64` become JSON numbers, larger ones strings.
fn big_json(n: &BigInt) -> Value {
    let s = n.to_string();
    s.parse::<i64>().map(Value::from).unwrap_or(Value::String(s))
}

fn rational_json(r: Rational64) -> Value {
    serde_json::to_value(RationalRepr::from(r)).expect("rationals serialize")
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("core types serialize")
}

fn budget() -> Result<Budget, CliError> {
    Ok(Budget::from_env()?)
}

pub fn homfly(text: &str) -> CmdResult {
    let b: BraidWord = text.parse()?;
    let h = homfly_with_budget(&b, &budget()?)?;
    let (lo, hi) = mfw_bounds(&b);
    let poly = h.polynomial.to_string();
    let results = json!({
        "polynomial": poly,
        "ord_v": h.ord_v,
        "maxdeg_v": h.maxdeg_v,
        "r": h.components,
        "writhe": b.writhe(),
        "strands": b.strands(),
        "mfw_lower": lo,
        "mfw_upper": hi,
    });
    let text = format!(
        "P = {poly}\nord_v = {}\nmaxdeg_v = {}\nr = {}\nMFW window: {lo} <= ord_v <= maxdeg_v <= {hi}\n",
        h.ord_v, h.maxdeg_v, h.components
    );
    Ok(Outcome {
        report: Report::new("homfly", b.to_string(), results),
        text,
    })
}

fn matrix_text(v: &SeifertMatrix) -> String {
    v.entries()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            format!("  [{}]\n", cells.join(" "))
        })
        .collect()
}

pub fn signature_cmd(input: &LinkInput) -> CmdResult {
    let link = Link::parse(input)?;
    let v = link.seifert();
    let sigma = signature(&v);
    let (det, nullity) = determinant_and_nullity(&v);
    let results = json!({
        "signature": sigma,
        "determinant": big_json(&det),
        "nullity": nullity,
        "size": v.size(),
        "seifert_matrix": v.entries(),
    });
    let text = format!(
        "V =\n{}signature = {sigma}\ndet(V + V^T) = {det}\nnullity = {nullity}\n",
        matrix_text(&v)
    );
    Ok(Outcome {
        report: Report::new("signature", link.echo(), results),
        text,
    })
}

pub fn alexander_cmd(input: &LinkInput) -> CmdResult {
    let link = Link::parse(input)?;
    let v = link.seifert();
    let normalized = alexander(&v);
    let raw = alexander_raw(&v);
    let coefficients: Vec<Value> = match (normalized.min_degree(), normalized.max_degree()) {
        (Some(lo), Some(hi)) => (lo..=hi).map(|e| big_json(&normalized.coeff(e))).collect(),
        _ => Vec::new(),
    };
    let results = json!({
        "alexander": normalized.to_string(),
        "coefficients": coefficients,
        "raw": raw.to_string(),
        "trivial": normalized.is_one(),
    });
    let text = format!("Delta(t) = {normalized}\ndet(V - t V^T) = {raw}\n");
    Ok(Outcome {
        report: Report::new("alexander", link.echo(), results),
        text,
    })
}

fn certificates_text(certs: &[Certificate]) -> String {
    certs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n")
}

pub fn obstruct(input: &LinkInput, genus_lb: Option<&str>, auto_sigma: bool) -> CmdResult {
    let link = Link::parse(input)?;
    let b = match link {
        Link::Tree(t) => return obstruct_tree(&t),
        Link::Braid(b) => b,
    };
    let h = homfly_with_budget(&b, &budget()?)?;
    let knot = h.components == 1;
    let mut warnings = Vec::new();
    let sigma = knot.then(|| signature(&bennequin_seifert_matrix(&b)));
    let m = match (genus_lb, auto_sigma, sigma) {
        (Some(text), _, _) => GenusValue::new(parse_rational(text)?, GenusKind::LowerBound, "command line")?,
        (None, true, Some(s)) => {
            GenusValue::lower_bound(Rational64::new(s.abs(), 2), format!("|sigma|/2 with sigma = {s}"))
        }
        (None, auto, _) => {
            if auto {
                warnings.push("--auto-sigma applies to knots only; using M >= 0".to_string());
            }
            GenusValue::lower_bound(Rational64::from(0), "default: M >= 0")
        }
    };
    let mut certs = vec![cor33_test(&h)];
    if let Some(s) = sigma {
        certs.push(cor34_test(&h, s)?);
    }
    certs.push(spc_test(&h, &m)?);
    let obstructed = certs.iter().any(|c| c.verdict.is_obstructed());
    let verdict = Verdict::from_obstructed(obstructed);
    let results = json!({
        "ord_v": h.ord_v,
        "r": h.components,
        "sigma": sigma,
        "M": to_json(&m),
        "verdict": verdict,
        "certificates": to_json(&certs),
    });
    let text = format!("verdict: {verdict}\n\n{}", certificates_text(&certs));
    let mut report = Report::new("obstruct", b.to_string(), results);
    report.warnings = warnings;
    Ok(Outcome { report, text })
}

fn spc_word(is_spc: bool) -> &'static str {
    if is_spc { "YES" } else { "NO" }
}

fn obstruct_tree(t: &PlumbingTree) -> CmdResult {
    let d = is_spc_cboundary(t)?;
    let results = json!({
        "spc": d.is_spc,
        "spc_verdict": spc_word(d.is_spc),
        "verdict": d.certificate.verdict,
        "certificates": [to_json(&d.certificate)],
    });
    let text = format!("spc-C-boundary: {}\n\n{}", spc_word(d.is_spc), d.certificate);
    Ok(Outcome {
        report: Report::new("obstruct", t.to_string(), results),
        text,
    })
}

pub fn plumbing(text: &str) -> CmdResult {
    let t: PlumbingTree = text.parse()?;
    let d = uniform_decomposition(&t)?;
    let excess = is_strongly_excessive(&t);
    let r = boundary_components(&t);
    let v = tree_seifert_matrix(&t);
    let (det, nullity) = determinant_and_nullity(&v);
    let sigma = signature(&v);
    let mut warnings = Vec::new();
    let (ord_v, m_lb, decision) = match mp_ord_v(&t) {
        Ok(ord) => (Some(ord), Some(genus_lower_bound(&t)?), Some(is_spc_cboundary(&t)?)),
        Err(Error::NotStronglyExcessive { .. }) => {
            warnings.push(format!(
                "tree is not strongly excessive ({}); valuation formula and spc decision skipped",
                excess.failures.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("; ")
            ));
            (None, None, None)
        }
        Err(e) => return Err(e.into()),
    };
    let subtrees: Vec<Value> = d
        .subtrees
        .iter()
        .map(|s| json!({"tree": s.tree.to_string(), "vertices": s.vertices, "positive": s.positive}))
        .collect();
    let alex = alexander(&v);
    let results = json!({
        "weights": t.weights(),
        "k": d.k(),
        "s": d.s,
        "p": d.p,
        "q": d.q,
        "subtrees": subtrees,
        "strongly_excessive": excess.strongly_excessive,
        "excess_failures": to_json(&excess.failures),
        "ord_v": ord_v,
        "r": r,
        "genus_lower_bound": m_lb.map(rational_json),
        "spc_verdict": decision.as_ref().map(|d| spc_word(d.is_spc)),
        "certificate": decision.as_ref().map(|d| to_json(&d.certificate)),
        "seifert_matrix": v.entries(),
        "signature": sigma,
        "determinant": big_json(&det),
        "nullity": nullity,
        "alexander": alex.to_string(),
    });

    let mut out = String::new();
    let _ = writeln!(out, "tree {t}");
    let _ = writeln!(out, "decomposition: k = {}, s = {}, p = {}, q = {}", d.k(), d.s, d.p, d.q);
    let _ = writeln!(out, "strongly excessive: {}", excess.strongly_excessive);
    for f in &excess.failures {
        let _ = writeln!(out, "  {f}");
    }
    let _ = writeln!(out, "r = {r}");
    if let (Some(ord), Some(m)) = (ord_v, m_lb) {
        let _ = writeln!(out, "ord_v = {ord}");
        let _ = writeln!(out, "M(L) >= {m}");
    }
    let _ = writeln!(out, "signature = {sigma}, det = {det}, Delta(t) = {alex}");
    if let Some(d) = &decision {
        let _ = writeln!(out, "spc-C-boundary: {}\n\n{}", spc_word(d.is_spc), d.certificate);
    }
    let mut report = Report::new("plumbing", t.to_string(), results);
    report.warnings = warnings;
    Ok(Outcome { report, text: out })
}

/// `3/2` exact, `>=3/2` lower bound, `<=3/2` upper bound.
fn genus_arg(name: &str, text: &str) -> Result<GenusValue, CliError> {
    let text = text.trim();
    let (kind, rest) = if let Some(rest) = text.strip_prefix(">=") {
        (GenusKind::LowerBound, rest)
    } else if let Some(rest) = text.strip_prefix("<=") {
        (GenusKind::UpperBound, rest)
    } else {
        (GenusKind::Exact, text)
    };
    let value = parse_rational(rest).map_err(|e| CliError::input(format!("--{name}: {e}")))?;
    Ok(GenusValue::new(value, kind, format!("command line --{name}"))?)
}

struct Picker<'a> {
    args: &'a CertifyArgs,
    rule: Rule,
    used: Vec<&'static str>,
}

impl Picker<'_> {
    fn missing(&self, name: &str) -> CliError {
        CliError::input(format!("rule {} needs --{name}", self.rule))
    }

    fn genus(&mut self, name: &'static str) -> Result<GenusValue, CliError> {
        self.optional_genus(name)?.ok_or_else(|| self.missing(name))
    }

    fn optional_genus(&mut self, name: &'static str) -> Result<Option<GenusValue>, CliError> {
        self.used.push(name);
        self.genus_text(name).map(|t| genus_arg(name, t)).transpose()
    }

    fn genus_text(&self, name: &str) -> Option<&str> {
        let a = self.args;
        match name {
            "M" => a.m.as_deref(),
            "MK" => a.m_k.as_deref(),
            "MJ" => a.m_j.as_deref(),
            "M1" => a.m1.as_deref(),
            "M2" => a.m2.as_deref(),
            "Msum" => a.m_sum.as_deref(),
            "M-pattern" => a.m_pattern.as_deref(),
            _ => None,
        }
    }

    fn int(&mut self, name: &'static str) -> Result<i64, CliError> {
        self.used.push(name);
        let a = self.args;
        let v = match name {
            "order" => a.order,
            "p" => a.p,
            "q" => a.q,
            "t" => a.t,
            "omega" => a.omega,
            _ => None,
        };
        v.ok_or_else(|| self.missing(name))
    }

    /// Names of supplied arguments the rule did not read.
    fn unused(&self) -> Vec<String> {
        let a = self.args;
        let supplied = [
            ("M", a.m.is_some()),
            ("MK", a.m_k.is_some()),
            ("MJ", a.m_j.is_some()),
            ("M1", a.m1.is_some()),
            ("M2", a.m2.is_some()),
            ("Msum", a.m_sum.is_some()),
            ("order", a.order.is_some()),
            ("p", a.p.is_some()),
            ("q", a.q.is_some()),
            ("t", a.t.is_some()),
            ("omega", a.omega.is_some()),
            ("M-pattern", a.m_pattern.is_some()),
            ("sigma", a.sigma.is_some()),
            ("pattern-tree", a.pattern_tree.is_some()),
            ("null-concordant", a.null_concordant),
        ];
        supplied
            .into_iter()
            .filter(|(name, given)| *given && !self.used.contains(name))
            .map(|(name, _)| format!("--{name} is not used by rule {}", self.rule))
            .collect()
    }
}

pub fn certify(rule_text: &str, args: &CertifyArgs) -> CmdResult {
    let rule: Rule = rule_text.parse()?;
    let mut pick = Picker {
        args,
        rule,
        used: Vec::new(),
    };
    let mut warnings = Vec::new();
    let cert = match rule {
        Rule::Prop14 => {
            let (m1, m2) = (pick.genus("M1")?, pick.genus("M2")?);
            prop14_certificate(&m1, &m2, pick.optional_genus("Msum")?.as_ref())?
        }
        Rule::Cor16 => cor16_order(&pick.genus("M")?, pick.int("order")?)?,
        Rule::Cor19 => cor19_mirror(&pick.genus("M")?)?,
        Rule::Thm23 => thm23_certificate(&pick.genus("MK")?, &pick.genus("MJ")?)?,
        Rule::Thm25 => {
            let (m_j, m_k) = (pick.genus("MJ")?, pick.genus("MK")?);
            thm25_certificate(&m_j, &m_k, pick.int("t")?, pick.int("omega")?)?
        }
        Rule::Cor26 => cor26_certificate(&pick.genus("MK")?, pick.int("p")?, pick.int("q")?)?,
        Rule::Cor27 => {
            pick.used.extend(["sigma", "pattern-tree", "null-concordant"]);
            let m = pick
                .optional_genus("M-pattern")?
                .unwrap_or_else(|| GenusValue::lower_bound(Rational64::from(0), "default: M >= 0"));
            let sigma = match (args.sigma, &args.pattern_tree) {
                (Some(s), _) => s,
                (None, Some(text)) => {
                    let t: PlumbingTree = text.parse()?;
                    let s = signature(&tree_seifert_matrix(&t));
                    warnings.push(format!("pattern signature {s} computed from tree {t}"));
                    s
                }
                (None, None) => return Err(pick.missing("sigma")),
            };
            cor27_certificate(&m, sigma, args.null_concordant)?
        }
        Rule::Thm32 | Rule::Cor33 | Rule::Cor34 | Rule::Prop36 => {
            return Err(CliError::input(format!(
                "rule {rule} works from a link; use the obstruct command"
            )))
        }
    };
    warnings.extend(pick.unused());
    let text = cert.to_string();
    let mut report = Report::new("certify", rule.id(), to_json(&cert));
    report.warnings = warnings;
    Ok(Outcome { report, text })
}
