//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always print.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use cbord_core::algebra::{LaurentPoly1, LaurentPoly2};
use cbord_core::braid::{Band, BraidWord, QuasipositiveWord, Sign};
use cbord_core::homfly::{homfly, mfw_bounds, HomflyResult};
use cbord_core::obstruction::{
    cor16_order, cor19_mirror, cor26_certificate, cor34_test, quasipositive_genus, spc_test,
    thm25_certificate, Certificate, GenusValue, Quantity, Rule,
};
use cbord_core::plumbing::{is_spc_cboundary, mp_ord_v, PlumbingTree};
use cbord_core::seifert::{alexander, bennequin_seifert_matrix, determinant_and_nullity, signature};
use cbord_core::{Error, Rational64};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn braid(s: &str) -> BraidWord {
    s.parse().unwrap()
}

fn poly(s: &str) -> LaurentPoly2 {
    s.parse().unwrap()
}

fn hom(b: &BraidWord) -> Result<HomflyResult, String> {
    homfly(b).map_err(|e| format!("{b}: {e}"))
}

fn exact(n: i64) -> GenusValue {
    GenusValue::exact(Rational64::from(n), "acceptance").unwrap()
}

fn random_braid(rng: &mut ChaCha8Rng, max_strands: usize, max_len: usize) -> BraidWord {
    let n = rng.gen_range(2..=max_strands);
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn corpus(seed: u64, count: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_braid(&mut rng, 5, 12)).collect()
}

fn timed(limit: Duration, f: impl FnOnce() -> Check) -> Check {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure!(took <= limit, "took {took:?}, limit {limit:?}");
    Ok(())
}

fn c1_homfly_values() -> Check {
    let cases = [
        ("B1:", "1"),
        ("B2:", "1*v^-1*z^-1 - 1*v^1*z^-1"),
        ("B2: 1 1", "1*v^1*z^-1 - 1*v^3*z^-1 + 1*v^1*z^1"),
        ("B2: 1 1 1", "2*v^2 - 1*v^4 + 1*v^2*z^2"),
        ("B3: 1 -2 1 -2", "1*v^-2 - 1 + 1*v^2 - 1*z^2"),
    ];
    for (b, expect) in cases {
        timed(Duration::from_secs(1), || {
            let got = hom(&braid(b))?.polynomial;
            ensure!(got == poly(expect), "{b}: got {got}, want {expect}");
            Ok(())
        })?;
    }
    Ok(())
}

fn c2_markov() -> Check {
    timed(Duration::from_secs(60), || {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for b in corpus(20, 200) {
            let base = hom(&b)?.polynomial;
            let mut cur = b.clone();
            for _ in 0..5 {
                cur = match rng.gen_range(0..5) {
                    0 => {
                        let g = rng.gen_range(1..cur.strands() as i32);
                        cur.conjugate(&[if rng.gen_bool(0.5) { g } else { -g }]).unwrap()
                    }
                    1 => cur.stabilize(Sign::Positive),
                    2 => cur.stabilize(Sign::Negative),
                    3 => cur.destabilize().unwrap_or(cur),
                    _ => cur.free_reduce(),
                };
                let p = hom(&cur)?.polynomial;
                ensure!(p == base, "{b} -> {cur}: {p} != {base}");
            }
        }
        Ok(())
    })
}

fn c3_skein_mfw() -> Check {
    timed(Duration::from_secs(120), || {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let vz = poly("1*v^1*z^1");
        let v2 = poly("1*v^2");
        for b in corpus(30, 500) {
            let h = hom(&b)?;
            let (lo, hi) = mfw_bounds(&b);
            ensure!(
                lo <= h.ord_v as i64 && h.ord_v <= h.maxdeg_v && h.maxdeg_v as i64 <= hi,
                "{b}: MFW window [{lo}, {hi}] vs ord_v {} maxdeg_v {}",
                h.ord_v,
                h.maxdeg_v
            );
            if b.is_empty() {
                continue;
            }
            let pos = rng.gen_range(0..b.len());
            let (l0, switched) = b.skein_children(pos).unwrap();
            let (lp, lm) = if b.letters()[pos] > 0 { (b.clone(), switched) } else { (switched, b.clone()) };
            let lhs = hom(&lp)?.polynomial;
            let rhs = &(&vz * &hom(&l0)?.polynomial) + &(&v2 * &hom(&lm)?.polynomial);
            ensure!(lhs == rhs, "{b} at {pos}: skein fails");
        }
        Ok(())
    })
}

fn c4_mirror() -> Check {
    for b in corpus(30, 500) {
        let p = hom(&b)?.polynomial;
        let pm = hom(&b.mirror())?.polynomial;
        ensure!(pm == p.substitute_mirror(), "{b}: mirror identity fails");
    }
    let fig8 = hom(&braid("B3: 1 -2 1 -2"))?.polynomial;
    ensure!(fig8.substitute_mirror() == fig8, "figure-eight is not a mirror fixed point");
    Ok(())
}

fn c5_mp_formula() -> Check {
    let mut cases: Vec<(PlumbingTree, BraidWord, Option<i64>)> = vec![
        ("(-2)".parse().unwrap(), braid("B2: 1 1"), Some(1)),
        ("(-2 (-2))".parse().unwrap(), braid("B2: 1 1 1"), Some(2)),
        ("(2 (-2))".parse().unwrap(), braid("B3: 1 -2 1 -2"), Some(-2)),
        ("(2 (2))".parse().unwrap(), braid("B2: -1 -1 -1"), Some(-4)),
    ];
    for k in 1..=6 {
        let word = BraidWord::new(2, vec![1; k + 1]).unwrap();
        cases.push((PlumbingTree::chain(&vec![-2; k]).unwrap(), word.clone(), None));
        cases.push((PlumbingTree::chain(&vec![2; k]).unwrap(), word.mirror(), None));
    }
    for (t, b, expect) in cases {
        let mp = mp_ord_v(&t).map_err(|e| format!("{t}: {e}"))?;
        let ord = hom(&b)?.ord_v as i64;
        ensure!(mp == ord, "{t}: formula {mp} vs HOMFLY of {b} {ord}");
        if let Some(e) = expect {
            ensure!(mp == e, "{t}: formula {mp}, expected {e}");
        }
    }
    Ok(())
}

fn c6_seifert() -> Check {
    let cases = [
        ("B2: 1 1 1", -2, 3, "1 - 1*t^1 + 1*t^2"),
        ("B3: 1 -2 1 -2", 0, 5, "1 - 3*t^1 + 1*t^2"),
        ("B2: 1 1 1 1 1", -4, 5, "1 - 1*t^1 + 1*t^2 - 1*t^3 + 1*t^4"),
    ];
    for (b, sigma, det, delta) in cases {
        let v = bennequin_seifert_matrix(&braid(b));
        let s = signature(&v);
        let (d, _) = determinant_and_nullity(&v);
        let a = alexander(&v);
        ensure!(s == sigma, "{b}: signature {s}, want {sigma}");
        ensure!(d == BigInt::from(det) || d == BigInt::from(-det), "{b}: det {d}, want ±{det}");
        ensure!(a == delta.parse::<LaurentPoly1>().unwrap(), "{b}: Δ = {a}, want {delta}");
    }
    Ok(())
}

fn c7_prop36() -> Check {
    for (t, spc) in [("(-2 (-2))", true), ("(2 (-2))", false), ("(2 (2))", false)] {
        let d = is_spc_cboundary(&t.parse().unwrap()).map_err(|e| format!("{t}: {e}"))?;
        ensure!(d.is_spc == spc, "{t}: decision {}, want {spc}", d.is_spc);
        ensure!(d.certificate.recheck().unwrap(), "{t}: certificate does not recheck");
    }
    match is_spc_cboundary(&"(-2 (-2) (-2) (-2))".parse().unwrap()) {
        Err(Error::NotStronglyExcessive { failing }) => {
            ensure!(failing == vec![0], "star: failing vertices {failing:?}, want [0]");
        }
        other => return Err(format!("star: expected rejection, got {other:?}")),
    }
    Ok(())
}

fn c8_obstructions() -> Check {
    let left = hom(&braid("B2: -1 -1 -1"))?;
    let sigma = signature(&bennequin_seifert_matrix(&braid("B2: -1 -1 -1")));
    ensure!(left.ord_v == -4 && sigma.abs() == 2, "left trefoil: ord_v {}, σ {sigma}", left.ord_v);
    ensure!(cor34_test(&left, sigma).unwrap().verdict.is_obstructed(), "cor34 misses left trefoil");
    ensure!(spc_test(&left, &exact(1)).unwrap().verdict.is_obstructed(), "thm32 misses left trefoil");
    let right = hom(&braid("B2: 1 1 1"))?;
    let c = spc_test(&right, &exact(1)).unwrap();
    ensure!(!c.verdict.is_obstructed(), "right trefoil obstructed");
    ensure!(
        right.ord_v == 2 && c.computed["bound"] == Quantity::Rational(Rational64::from(2)),
        "right trefoil: equality 2 = 1 - 1 + 2*1 fails"
    );
    // d = e - n + 1 equals 1 - r + 2M on quasipositive closures
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let n = rng.gen_range(2..=5usize);
        let bands: Vec<Band> = (0..rng.gen_range(0..=6))
            .map(|_| Band {
                conjugator: (0..rng.gen_range(0..=2))
                    .map(|_| {
                        let g = rng.gen_range(1..n as i32);
                        if rng.gen_bool(0.5) { g } else { -g }
                    })
                    .collect(),
                generator: rng.gen_range(1..n),
            })
            .collect();
        let q = QuasipositiveWord::new(n, bands).unwrap();
        let b = q.expand();
        let m = quasipositive_genus(&q).map_err(|e| format!("{q}: {e}"))?;
        let h = hom(&b)?;
        let d = Rational64::from(mfw_bounds(&b).0);
        let bound = Rational64::from(1 - h.components as i64) + m.value() * 2;
        ensure!(d == bound, "{q}: d = {d}, 1 - r + 2M = {bound}");
        ensure!(!spc_test(&h, &m).unwrap().verdict.is_obstructed(), "{q}: obstructed");
    }
    Ok(())
}

fn trace_has(c: &Certificate, needle: &str) -> bool {
    c.inequality_trace.iter().any(|l| l.contains(needle))
}

fn c9_certificates() -> Check {
    let c = cor26_certificate(&exact(0), 3, 2).unwrap();
    ensure!(c.verdict.is_obstructed(), "cor26(0, 3, 2) not obstructed");
    let c = cor26_certificate(&exact(0), 2, 2).unwrap();
    ensure!(!c.verdict.is_obstructed(), "cor26(0, 2, 2) obstructed");
    let c = cor16_order(&exact(1), 2).unwrap();
    ensure!(
        c.verdict.is_obstructed() && trace_has(&c, "0 = M(K # ... # K) >= pM(K) - (p - 1)"),
        "cor16 trace: {c}"
    );
    let c = cor19_mirror(&exact(1)).unwrap();
    ensure!(c.verdict.is_obstructed() && trace_has(&c, "2*1 - 1 = 1"), "cor19 trace: {c}");
    // M_J = |w| M_K + (t - |w|)/2 + 1 exactly: not strict
    for (mk, t, w) in [(1i64, 3i64, 1i64), (0, 2, 0), (2, 5, -3)] {
        let mj = Rational64::from(w.abs() * mk) + Rational64::new(t - w.abs(), 2) + 1;
        let m_j = GenusValue::exact(mj, "acceptance").unwrap();
        let c = thm25_certificate(&m_j, &exact(mk), t, w).unwrap();
        ensure!(!c.verdict.is_obstructed(), "thm25 boundary ({mk}, {t}, {w}) obstructed");
        ensure!(c.recheck().unwrap(), "thm25 boundary does not recheck");
    }
    Ok(())
}

// ---- criterion 10: grammars, JSON schema and exit codes

fn cbord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cbord"))
        .args(args)
        .env_remove("CBORD_BUDGET")
        .output()
        .expect("run cbord")
}

fn cbord_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cbord")).args(args).env(key, val).output().expect("run cbord")
}

#[derive(Clone, Copy)]
enum Ty {
    Int,
    Str,
    Bool,
    Arr,
    Obj,
    IntOrStr,
    IntOrNull,
    Rational,
    RationalOrNull,
    StrOrNull,
    ObjOrNull,
}

fn type_ok(v: &Value, ty: Ty) -> bool {
    let rational = |v: &Value| {
        v.get("num").is_some_and(Value::is_i64)
            && v.get("den").is_some_and(|d| d.as_i64().is_some_and(|d| d > 0))
            && v.as_object().is_some_and(|o| o.len() == 2)
    };
    match ty {
        Ty::Int => v.is_i64(),
        Ty::Str => v.is_string(),
        Ty::Bool => v.is_boolean(),
        Ty::Arr => v.is_array(),
        Ty::Obj => v.is_object(),
        Ty::IntOrStr => v.is_i64() || v.is_string(),
        Ty::IntOrNull => v.is_i64() || v.is_null(),
        Ty::Rational => rational(v),
        Ty::RationalOrNull => v.is_null() || rational(v),
        Ty::StrOrNull => v.is_string() || v.is_null(),
        Ty::ObjOrNull => v.is_object() || v.is_null(),
    }
}

fn fields(v: &Value, schema: &[(&str, Ty)], what: &str) -> Check {
    let obj = v.as_object().ok_or(format!("{what}: not an object"))?;
    for (k, ty) in schema {
        let x = obj.get(*k).ok_or(format!("{what}: missing '{k}'"))?;
        ensure!(type_ok(x, *ty), "{what}: '{k}' has the wrong type: {x}");
    }
    Ok(())
}

fn certificate_schema(v: &Value) -> Check {
    use Ty::*;
    fields(
        v,
        &[("rule", Str), ("inputs", Obj), ("assumptions", Arr), ("computed", Obj), ("inequality_trace", Arr), ("verdict", Str)],
        "certificate",
    )?;
    let rule = v["rule"].as_str().unwrap();
    ensure!(Rule::ALL.iter().any(|r| r.id() == rule), "unknown rule {rule}");
    ensure!(matches!(v["verdict"].as_str(), Some("OBSTRUCTED" | "NOT_OBSTRUCTED")), "bad verdict");
    let cert: Certificate = serde_json::from_value(v.clone()).map_err(|e| format!("certificate: {e}"))?;
    ensure!(cert.recheck().unwrap_or(false), "certificate does not recheck: {cert}");
    Ok(())
}

fn report_schema(v: &Value) -> Check {
    use Ty::*;
    fields(v, &[("command", Str), ("input", Str), ("results", ObjOrNull), ("warnings", Arr)], "report")?;
    if let Some(err) = v.get("error") {
        fields(err, &[("kind", Str), ("message", Str), ("exit_code", Int)], "error")?;
        ensure!(v["results"].is_null(), "failed report carries results");
        return Ok(());
    }
    let r = &v["results"];
    match v["command"].as_str().unwrap() {
        "homfly" => fields(
            r,
            &[("polynomial", Str), ("ord_v", Int), ("maxdeg_v", Int), ("r", Int), ("writhe", Int), ("strands", Int), ("mfw_lower", Int), ("mfw_upper", Int)],
            "homfly",
        ),
        "signature" => fields(
            r,
            &[("signature", Int), ("determinant", IntOrStr), ("nullity", Int), ("size", Int), ("seifert_matrix", Arr)],
            "signature",
        ),
        "alexander" => fields(r, &[("alexander", Str), ("coefficients", Arr), ("raw", Str), ("trivial", Bool)], "alexander"),
        "obstruct" => {
            fields(r, &[("verdict", Str), ("certificates", Arr)], "obstruct")?;
            if r.get("spc").is_some() {
                fields(r, &[("spc", Bool), ("spc_verdict", Str)], "obstruct tree")?;
            } else {
                fields(r, &[("ord_v", Int), ("r", Int), ("sigma", IntOrNull), ("M", Obj)], "obstruct braid")?;
            }
            r["certificates"].as_array().unwrap().iter().try_for_each(certificate_schema)
        }
        "plumbing" => {
            fields(
                r,
                &[
                    ("weights", Arr), ("k", Int), ("s", Int), ("p", Int), ("q", Int),
                    ("strongly_excessive", Bool), ("ord_v", IntOrNull), ("r", Int),
                    ("genus_lower_bound", RationalOrNull), ("spc_verdict", StrOrNull),
                    ("certificate", ObjOrNull), ("seifert_matrix", Arr), ("signature", Int),
                    ("determinant", IntOrStr), ("alexander", Str),
                ],
                "plumbing",
            )?;
            if r["certificate"].is_object() {
                certificate_schema(&r["certificate"])?;
                ensure!(type_ok(&r["genus_lower_bound"], Rational), "plumbing: bound missing");
            }
            Ok(())
        }
        "certify" => certificate_schema(r),
        other => Err(format!("unknown command {other}")),
    }
}

fn json_report(out: &Output) -> Result<Value, String> {
    let text = String::from_utf8_lossy(&out.stdout);
    let v: Value = serde_json::from_str(text.trim()).map_err(|e| format!("bad JSON ({e}): {text}"))?;
    report_schema(&v)?;
    Ok(v)
}

fn expect_code(out: &Output, code: i32, what: &str) -> Check {
    ensure!(
        out.status.code() == Some(code),
        "{what}: exit {:?}, want {code}; stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    Ok(())
}

fn grammar_round_trip() -> Check {
    let braids = ["B2: 1 1 1", "B3: 1 -2 1 -2", "B1:", "B2: -1 -1 -1", "B3:  1   2\t-1 ", "B4: 1 1 1 3 3 3"];
    for s in braids {
        let b: BraidWord = s.parse().map_err(|e| format!("{s}: {e}"))?;
        let again: BraidWord = b.to_string().parse().unwrap();
        ensure!(again == b && again.to_string() == b.to_string(), "braid {s} does not round-trip");
    }
    for s in ["QP2: ( | 1) ( | 1) ( | 1)", "QP3: (1 | 2)", "QP4: (2 | 3) (-1 2 | 1)"] {
        let q: QuasipositiveWord = s.parse().map_err(|e| format!("{s}: {e}"))?;
        let again: QuasipositiveWord = q.to_string().parse().unwrap();
        ensure!(again == q && again.to_string() == q.to_string(), "QP word {s} does not round-trip");
    }
    let trees = [
        "(-2)", "(-2 (-2))", "(2 (-2))", "(2 (2))", "(2 (2) (-2 (-4)))", "(-2 (-2) (-2) (-2))",
        "(2 (-4 (6 (-2))))", "(-2 (-2 (-2)))", "(0)", "( -2  ( -2 ) )",
    ];
    for s in trees {
        let t: PlumbingTree = s.parse().map_err(|e| format!("{s}: {e}"))?;
        let again: PlumbingTree = t.to_string().parse().unwrap();
        ensure!(again == t && again.to_string() == t.to_string(), "tree {s} does not round-trip");
    }
    let polys = ["2*v^2 - 1*v^4 + 1*v^2*z^2", "1*v^-2 - 1 + 1*v^2 - 1*z^2", "1", "1*v^1*z^-1 - 1*v^3*z^-1 + 1*v^1*z^1"];
    for s in polys {
        let p: LaurentPoly2 = s.parse().map_err(|e| format!("{s}: {e}"))?;
        ensure!(p.to_string() == s, "polynomial {s} prints as {p}");
    }
    Ok(())
}

fn c10_cli() -> Check {
    grammar_round_trip()?;

    let v = json_report(&cbord(&["homfly", "B2: 1 1 1", "--json"]))?;
    ensure!(v["results"]["polynomial"] == "2*v^2 - 1*v^4 + 1*v^2*z^2", "homfly trefoil: {v}");
    ensure!(v["results"]["ord_v"] == 2, "homfly trefoil ord_v");
    let v = json_report(&cbord(&["homfly", "B3: 1 -2 1 -2", "--json"]))?;
    ensure!(v["results"]["ord_v"] == -2, "figure-eight ord_v");
    let v = json_report(&cbord(&["homfly", "B1:", "--json"]))?;
    ensure!(v["results"]["polynomial"] == "1", "unknot");

    let v = json_report(&cbord(&["obstruct", "B2: -1 -1 -1", "--auto-sigma", "--json"]))?;
    ensure!(v["results"]["verdict"] == "OBSTRUCTED", "left trefoil obstruct");
    let v = json_report(&cbord(&["obstruct", "B2: 1 1 1", "--genus-lb", "1", "--json"]))?;
    ensure!(v["results"]["verdict"] == "NOT_OBSTRUCTED", "right trefoil obstruct");
    let v = json_report(&cbord(&["obstruct", "--tree", "(2 (-2))", "--json"]))?;
    ensure!(v["results"]["spc_verdict"] == "NO", "tree obstruct");
    ensure!(v["results"]["certificates"][0]["computed"]["ord_v"]["value"] == -2, "tree obstruct certificate");

    let v = json_report(&cbord(&["plumbing", "(-2 (-2))", "--json"]))?;
    let r = &v["results"];
    ensure!(r["ord_v"] == 2 && r["r"] == 1 && r["spc_verdict"] == "YES", "plumbing (-2 (-2)): {r}");
    let v = json_report(&cbord(&["plumbing", "(2 (-2))", "--json"]))?;
    let r = &v["results"];
    ensure!(r["ord_v"] == -2 && r["r"] == 1 && r["spc_verdict"] == "NO", "plumbing (2 (-2)): {r}");
    json_report(&cbord(&["plumbing", "(-2 (-2) (-2) (-2))", "--json"]))?;
    for args in [["signature", "B2: 1 1 1"], ["alexander", "B3: 1 -2 1 -2"]] {
        json_report(&cbord(&[args[0], args[1], "--json"]))?;
    }
    json_report(&cbord(&["signature", "--tree", "(2 (-2))", "--json"]))?;

    let v = json_report(&cbord(&["certify", "cor26", "--MK", "0", "--p", "3", "--q", "2", "--json"]))?;
    ensure!(v["results"]["verdict"] == "OBSTRUCTED", "certify cor26");
    let v = json_report(&cbord(&["certify", "thm23", "--MK", "0", "--MJ", "1", "--json"]))?;
    ensure!(v["results"]["verdict"] == "OBSTRUCTED", "certify thm23");
    let v = json_report(&cbord(&["certify", "cor16", "--M", "1", "--order", "2", "--json"]))?;
    ensure!(v["results"]["verdict"] == "OBSTRUCTED", "certify cor16");

    // exit codes
    let out = cbord(&["plumbing", "(0)", "--json"]);
    expect_code(&out, 2, "zero weight")?;
    json_report(&out)?;
    expect_code(&cbord(&["plumbing", "(3)"]), 2, "odd weight")?;
    expect_code(&cbord(&["homfly", "B2: 1 2"]), 2, "bad generator")?;
    expect_code(&cbord(&["homfly", "B2 1"]), 2, "syntax error")?;
    expect_code(&cbord(&["obstruct", "B2: 1", "--genus-lb", "1", "--auto-sigma"]), 2, "flag conflict")?;
    let out = cbord_env(&["homfly", "B4: 1 2 3 1 2 3", "--json"], "CBORD_BUDGET", "3,40");
    expect_code(&out, 3, "budget")?;
    json_report(&out)?;
    expect_code(&cbord(&["homfly", "B1:"]), 0, "success")?;

    let dir = std::env::temp_dir().join(format!("cbord-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.txt");
    std::fs::write(&good, "homfly \"B2: 1 1 1\"\n# comment\n\nplumbing \"(2 (-2))\"\ncertify cor19 --M 1\n").unwrap();
    let bad = dir.join("bad.txt");
    std::fs::write(&bad, "homfly \"B2: 1 1 1\"\nplumbing \"(0)\"\nsignature \"B3: 1 -2 1 -2\"\n").unwrap();
    let empty = dir.join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    for (path, code, count) in [(&good, 0, 3), (&bad, 1, 3), (&empty, 0, 0)] {
        let out = cbord(&["batch", path.to_str().unwrap()]);
        expect_code(&out, code, &format!("batch {}", path.display()))?;
        let text = String::from_utf8_lossy(&out.stdout).to_string();
        let lines: Vec<&str> = text.lines().collect();
        ensure!(lines.len() == count, "batch {}: {} reports, want {count}", path.display(), lines.len());
        for line in lines {
            report_schema(&serde_json::from_str(line).map_err(|e| e.to_string())?)?;
        }
    }
    let out = cbord(&["batch", bad.to_str().unwrap()]);
    let text = String::from_utf8_lossy(&out.stdout).to_string();
    let commands: Vec<String> = text
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["command"].as_str().unwrap().to_string())
        .collect();
    ensure!(commands == ["homfly", "plumbing", "signature"], "batch order {commands:?}");
    let _ = std::fs::remove_dir_all(&dir);
    Ok(())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("HOMFLY exact values", c1_homfly_values),
        ("Markov invariance, 200 braids x 5 moves", c2_markov),
        ("skein identity and MFW window, 500 braids", c3_skein_mfw),
        ("mirror identity and amphicheiral figure-eight", c4_mirror),
        ("valuation formula vs braid realizations", c5_mp_formula),
        ("Seifert signature, determinant, Alexander", c6_seifert),
        ("spc decision on plumbing trees", c7_prop36),
        ("valuation and signature obstructions", c8_obstructions),
        ("certificate arithmetic", c9_certificates),
        ("CLI grammars, JSON schema, exit codes", c10_cli),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("PASS  {:>2}. {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL  {:>2}. {name} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
