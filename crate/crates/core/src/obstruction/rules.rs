use num_rational::Rational64;

use super::certificate::{Certificate, Draft, Quantity, Rule};
use super::genus::{check_satellite, GenusValue};
use super::rational::{add, int, mul, sub};
use crate::error::{Error, Result};
use crate::homfly::HomflyResult;

const SPC_FORM: &str = "L = V ∩ ∂B^4 for a smooth algebraic curve V ⊂ C^2 and a smooth \
                        ball B^4 with strictly pseudoconvex boundary (spc-C-boundary)";

fn genus_q(g: &GenusValue) -> Quantity {
    Quantity::Genus(g.clone())
}

fn rat(r: Rational64) -> Quantity {
    Quantity::Rational(r)
}

fn cmp_word(obstructed: bool, strict: &str, weak: &str) -> String {
    if obstructed { strict.to_string() } else { weak.to_string() }
}

/// The valuation test `ord_v P_L >= 1 - r + 2M(L)` for spc-C-boundaries,
/// applied with a lower bound (or exact value) for `M`.
pub fn spc_test(p: &HomflyResult, m_lb: &GenusValue) -> Result<Certificate> {
    thm32(p.ord_v as i64, p.components as i64, m_lb)
}

pub(crate) fn thm32(ord_v: i64, r: i64, m: &GenusValue) -> Result<Certificate> {
    m.require_lower("M(L)")?;
    let bound = add(int(1 - r), mul(int(2), m.value())?)?;
    let obstructed = int(ord_v) < bound;
    let mut d = Draft::new(Rule::Thm32);
    d.input("ord_v", Quantity::Integer(ord_v))
        .input("r", Quantity::Integer(r))
        .input("M", genus_q(m))
        .assume(format!("if L is an spc-C-boundary then {SPC_FORM}"))
        .compute("bound", rat(bound))
        .line("spc-C-boundaries satisfy ord_v P_L >= 1 - r + 2M(L)")
        .line(format!("1 - r + 2M = 1 - {r} + 2*{} = {bound}", m.value()))
        .line(format!(
            "ord_v = {ord_v} {} {bound}",
            cmp_word(obstructed, "<", ">=")
        ))
        .line(cmp_word(
            obstructed,
            "inequality fails, so L is not an spc-C-boundary",
            "inequality holds; no obstruction",
        ));
    Ok(d.finish(obstructed))
}

/// `ord_v P_L >= 1 - r`, the genus-free special case.
pub fn cor33_test(p: &HomflyResult) -> Certificate {
    cor33(p.ord_v as i64, p.components as i64)
}

pub(crate) fn cor33(ord_v: i64, r: i64) -> Certificate {
    let bound = 1 - r;
    let obstructed = ord_v < bound;
    let mut d = Draft::new(Rule::Cor33);
    d.input("ord_v", Quantity::Integer(ord_v))
        .input("r", Quantity::Integer(r))
        .assume(format!("if L is an spc-C-boundary then {SPC_FORM}"))
        .compute("bound", Quantity::Integer(bound))
        .line("spc-C-boundaries satisfy ord_v P_L >= 1 - r")
        .line(format!(
            "ord_v = {ord_v} {} 1 - {r} = {bound}",
            cmp_word(obstructed, "<", ">=")
        ))
        .line(cmp_word(
            obstructed,
            "inequality fails, so L is not an spc-C-boundary",
            "inequality holds; no obstruction",
        ));
    d.finish(obstructed)
}

/// `ord_v P_K >= |σ(K)|` for knots, from `|σ| <= 2M`.
pub fn cor34_test(p: &HomflyResult, sigma: i64) -> Result<Certificate> {
    cor34(p.ord_v as i64, p.components as i64, sigma)
}

pub(crate) fn cor34(ord_v: i64, r: i64, sigma: i64) -> Result<Certificate> {
    if r != 1 {
        return Err(Error::Hypothesis(format!(
            "the signature test applies to knots only, got {r} components"
        )));
    }
    let bound = sigma.abs();
    let obstructed = ord_v < bound;
    let mut d = Draft::new(Rule::Cor34);
    d.input("ord_v", Quantity::Integer(ord_v))
        .input("r", Quantity::Integer(r))
        .input("sigma", Quantity::Integer(sigma))
        .assume(format!("if K is an spc-C-boundary then {SPC_FORM}"))
        .compute("bound", Quantity::Integer(bound))
        .line("|sigma(K)| <= 2M(K), so spc-C-boundary knots satisfy ord_v P_K >= |sigma(K)|")
        .line(format!(
            "ord_v = {ord_v} {} |{sigma}| = {bound}",
            cmp_word(obstructed, "<", ">=")
        ))
        .line(cmp_word(
            obstructed,
            "inequality fails, so K is not an spc-C-boundary",
            "inequality holds; no obstruction",
        ));
    Ok(d.finish(obstructed))
}

/// Connected-sum inequality `M(L1 # L2) >= M(L1) + M(L2) - 1`. With an upper
/// bound on `M(L1 # L2)` below that value, `L1` and `L2` cannot both be
/// concordant to C-boundaries.
pub fn prop14_certificate(
    m1: &GenusValue,
    m2: &GenusValue,
    m_sum: Option<&GenusValue>,
) -> Result<Certificate> {
    m1.require_lower("M(L1)")?;
    m2.require_lower("M(L2)")?;
    if let Some(s) = m_sum {
        s.require_upper("M(L1 # L2)")?;
    }
    let raw = sub(add(m1.value(), m2.value())?, int(1))?;
    let lower = raw.max(int(0));
    let mut d = Draft::new(Rule::Prop14);
    d.input("M1", genus_q(m1))
        .input("M2", genus_q(m2))
        .assume("L1 and L2 are concordant to C-boundaries")
        .compute("lower_bound", rat(lower))
        .line(format!(
            "M(L1 # L2) >= max(0, M(L1) + M(L2) - 1) = max(0, {} + {} - 1) = {lower}",
            m1.value(),
            m2.value()
        ));
    let obstructed = match m_sum {
        Some(s) => {
            d.input("M_sum", genus_q(s));
            let o = s.value() < lower;
            d.line(format!(
                "M(L1 # L2) <= {} {} {lower}",
                s.value(),
                cmp_word(o, "<", ">=")
            ));
            d.line(cmp_word(
                o,
                "contradiction: L1 and L2 are not both concordant to C-boundaries",
                "consistent",
            ));
            o
        }
        None => false,
    };
    Ok(d.finish(obstructed))
}

/// Finite concordance order `p` forces `0 >= pM - (p - 1)`.
pub fn cor16_order(m: &GenusValue, order_p: i64) -> Result<Certificate> {
    m.require_lower("M(K)")?;
    if order_p < 1 {
        return Err(Error::InvalidArgument(format!("order must be >= 1, got {order_p}")));
    }
    let rhs = sub(mul(int(order_p), m.value())?, int(order_p - 1))?;
    let obstructed = rhs > int(0);
    let mut d = Draft::new(Rule::Cor16);
    d.input("M", genus_q(m))
        .input("order", Quantity::Integer(order_p))
        .assume("K is a C-boundary")
        .assume(format!("K has order {order_p} in the smooth concordance group"))
        .compute("rhs", rat(rhs))
        .line(format!(
            "0 = M(K # ... # K) >= pM(K) - (p - 1) = {order_p}*{} - {} = {rhs}",
            m.value(),
            order_p - 1
        ))
        .line(cmp_word(
            obstructed,
            "contradiction: K is either null-concordant or of infinite order",
            "consistent",
        ));
    Ok(d.finish(obstructed))
}

/// `L` and its mirror both C-boundaries forces `0 >= 2M(L) - 1`.
pub fn cor19_mirror(m: &GenusValue) -> Result<Certificate> {
    m.require_lower("M(L)")?;
    let rhs = sub(mul(int(2), m.value())?, int(1))?;
    let obstructed = rhs > int(0);
    let mut d = Draft::new(Rule::Cor19);
    d.input("M", genus_q(m))
        .assume("L is a C-boundary")
        .assume("the mirror L* is a C-boundary")
        .compute("rhs", rat(rhs))
        .line(format!(
            "0 = M(L # L*) >= M(L) + M(L*) - 1 = 2*{} - 1 = {rhs}",
            m.value()
        ))
        .line(cmp_word(
            obstructed,
            "contradiction: L and L* are not both C-boundaries",
            "consistent",
        ));
    Ok(d.finish(obstructed))
}

/// `M(J) > M(K)` with `J` concordant to a C-boundary rules out every band
/// sum `K #_b J*`.
pub fn thm23_certificate(m_k: &GenusValue, m_j: &GenusValue) -> Result<Certificate> {
    m_k.require_upper("M(K)")?;
    m_j.require_lower("M(J)")?;
    let obstructed = m_j.value() > m_k.value();
    let mut d = Draft::new(Rule::Thm23);
    d.input("M_K", genus_q(m_k))
        .input("M_J", genus_q(m_j))
        .assume("J is concordant to a C-boundary")
        .line("if K #_b J* were concordant to a C-boundary: M(K) >= M(J) + M(K # J*) - 1 with M(K # J*) >= 1")
        .line(format!(
            "M(J) = {} {} M(K) = {}",
            m_j.value(),
            cmp_word(obstructed, ">", "<="),
            m_k.value()
        ))
        .line(cmp_word(
            obstructed,
            "no band sum K #_b J* is concordant to a C-boundary",
            "hypothesis M(J) > M(K) fails; no conclusion",
        ));
    Ok(d.finish(obstructed))
}

/// Satellite test: `M(J) > |ω| M(K) + (t - |ω|)/2 + 1`.
pub fn thm25_certificate(m_j: &GenusValue, m_k: &GenusValue, t: i64, omega: i64) -> Result<Certificate> {
    m_j.require_lower("M(J)")?;
    m_k.require_upper("M(K)")?;
    check_satellite(t, omega)?;
    let w = omega.abs();
    let upper = add(mul(int(w), m_k.value())?, Rational64::new(t - w, 2))?;
    let threshold = add(upper, int(1))?;
    let obstructed = m_j.value() > threshold;
    let mut d = Draft::new(Rule::Thm25);
    d.input("M_J", genus_q(m_j))
        .input("M_K", genus_q(m_k))
        .input("t", Quantity::Integer(t))
        .input("omega", Quantity::Integer(omega))
        .assume("J* is concordant to a C-boundary")
        .compute("satellite_upper", rat(upper))
        .compute("threshold", rat(threshold))
        .line(format!(
            "M(K(J # J*)) <= |w| M(K) + (t - |w|)/2 = {w}*{} + ({t} - {w})/2 = {upper}",
            m_k.value()
        ))
        .line(format!(
            "M(J) = {} {} {upper} + 1 = {threshold}",
            m_j.value(),
            cmp_word(obstructed, ">", "<=")
        ))
        .line(cmp_word(
            obstructed,
            "the satellite K(J) is not concordant to a C-boundary",
            "inequality not strict; no conclusion",
        ));
    Ok(d.finish(obstructed))
}

/// Cable test: `(p - 1)(q - 1) > 2q M(K) + 1` rules out `K(-p, q)`.
pub fn cor26_certificate(m_k: &GenusValue, p: i64, q: i64) -> Result<Certificate> {
    m_k.require_upper("M(K)")?;
    if p < 2 || q < 2 {
        return Err(Error::InvalidArgument(format!(
            "cable test needs p, q >= 2, got p = {p}, q = {q}"
        )));
    }
    let lhs = mul(int(p - 1), int(q - 1))?;
    let rhs = add(mul(int(2 * q), m_k.value())?, int(1))?;
    let obstructed = lhs > rhs;
    let mut d = Draft::new(Rule::Cor26);
    d.input("M_K", genus_q(m_k))
        .input("p", Quantity::Integer(p))
        .input("q", Quantity::Integer(q))
        .assume(format!("T(-{p},{q})* = T({p},{q}) is a C-boundary"))
        .compute("torus_genus", rat(lhs / 2))
        .compute("lhs", rat(lhs))
        .compute("rhs", rat(rhs))
        .line(format!("M(T({p},{q})) = (p-1)(q-1)/2 = {}, with t = |w| = {q}", lhs / 2))
        .line(format!(
            "(p-1)(q-1) = {lhs} {} 2q M(K) + 1 = 2*{q}*{} + 1 = {rhs}",
            cmp_word(obstructed, ">", "<="),
            m_k.value()
        ))
        .line(cmp_word(
            obstructed,
            "the cable K(-p,q) is not concordant to a C-boundary",
            "inequality fails; no conclusion",
        ));
    Ok(d.finish(obstructed))
}

/// Negative Whitehead doubles of null-concordant knots. A nonzero pattern
/// signature makes the pattern non-slice, and the connected-sum inequality
/// then contradicts `M(D # W*) = 0`.
pub fn cor27_certificate(
    m_pattern: &GenusValue,
    sigma_pattern: i64,
    k_null_concordant: bool,
) -> Result<Certificate> {
    if !k_null_concordant {
        return Err(Error::Hypothesis(
            "the companion K must be null-concordant".into(),
        ));
    }
    let murasugi = Rational64::new(sigma_pattern.abs(), 2);
    if m_pattern.kind().bounds_above() && m_pattern.value() < murasugi {
        return Err(Error::InvalidArgument(format!(
            "M(W) <= {} contradicts |sigma(W)|/2 = {murasugi}",
            m_pattern.value()
        )));
    }
    let obstructed = sigma_pattern != 0;
    let mut d = Draft::new(Rule::Cor27);
    d.input("M_pattern", genus_q(m_pattern))
        .input("sigma_pattern", Quantity::Integer(sigma_pattern))
        .input("K_null_concordant", Quantity::Boolean(k_null_concordant))
        .assume("the mirror W* of the pattern is a C-boundary")
        .assume("D and W have the same Alexander module")
        .compute("murasugi_bound", rat(murasugi));
    if obstructed {
        let m = if m_pattern.kind().bounds_below() {
            m_pattern.value().max(murasugi)
        } else {
            murasugi
        };
        let sum = sub(mul(int(2), m)?, int(1))?;
        d.compute("sum_lower", rat(sum))
            .line(format!(
                "sigma(W) = {sigma_pattern} != 0, so M(W) >= |sigma|/2 = {murasugi} and W is not null-concordant"
            ))
            .line(format!("M(D) = M(W*) >= {m}"))
            .line(format!("M(D # W*) >= M(D) + M(W*) - 1 >= {sum}"))
            .line("D # W* is an order 2, winding 0 satellite of W # W* along K, so M(D # W*) = 0")
            .line("contradiction: D is not concordant to a C-boundary");
    } else {
        d.line("sigma(W) = 0: the pattern may be slice; no conclusion");
    }
    Ok(d.finish(obstructed))
}

pub(crate) fn rebuild(c: &Certificate) -> Result<Certificate> {
    match c.rule {
        Rule::Thm32 => thm32(c.int("ord_v")?, c.int("r")?, &c.genus("M")?),
        Rule::Cor33 => Ok(cor33(c.int("ord_v")?, c.int("r")?)),
        Rule::Cor34 => cor34(c.int("ord_v")?, c.int("r")?, c.int("sigma")?),
        Rule::Prop14 => prop14_certificate(
            &c.genus("M1")?,
            &c.genus("M2")?,
            c.optional_genus("M_sum")?.as_ref(),
        ),
        Rule::Cor16 => cor16_order(&c.genus("M")?, c.int("order")?),
        Rule::Cor19 => cor19_mirror(&c.genus("M")?),
        Rule::Thm23 => thm23_certificate(&c.genus("M_K")?, &c.genus("M_J")?),
        Rule::Thm25 => thm25_certificate(&c.genus("M_J")?, &c.genus("M_K")?, c.int("t")?, c.int("omega")?),
        Rule::Cor26 => cor26_certificate(&c.genus("M_K")?, c.int("p")?, c.int("q")?),
        Rule::Cor27 => cor27_certificate(
            &c.genus("M_pattern")?,
            c.int("sigma_pattern")?,
            c.boolean("K_null_concordant")?,
        ),
        Rule::Prop36 => crate::plumbing::prop36_from_certificate(c),
    }
}
