//! Acceptance criteria 1-10. Each criterion prints one `PASS` or `FAIL`
//! line; the test fails if any criterion fails.

use std::io::Write;
use std::time::{Duration, Instant};

use sdcov_verify::{run_suite, CheckRecord, EntryReport, Mode, Report, RunConfig};

type Outcome = Result<String, String>;

fn run(cfg: RunConfig) -> (Report, Duration) {
    let start = Instant::now();
    let r = run_suite(&cfg).expect("suite runs");
    (r, start.elapsed())
}

fn single(cfg: RunConfig) -> (EntryReport, Duration) {
    let (r, t) = run(cfg);
    assert_eq!(r.entries.len(), 1);
    (r.entries.into_iter().next().unwrap(), t)
}

fn tag(e: &EntryReport) -> String {
    let p: Vec<String> = e.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{}[{}]", e.id, p.join(","))
}

fn no_failures(e: &EntryReport) -> Result<(), String> {
    match e.failures().next() {
        None => Ok(()),
        Some(c) => Err(format!("{}: `{}` failed: {}", tag(e), c.name, c.detail)),
    }
}

fn get<'a>(e: &'a EntryReport, name: &str) -> Result<&'a CheckRecord, String> {
    e.check(name).ok_or_else(|| format!("{}: no check `{name}`", tag(e)))
}

/// The named check passed with one of `verdicts`.
fn verdict(e: &EntryReport, name: &str, verdicts: &[&str]) -> Result<(), String> {
    let c = get(e, name)?;
    if verdicts.contains(&c.verdict) {
        Ok(())
    } else {
        Err(format!("{}: `{name}` is {} ({})", tag(e), c.verdict, c.detail))
    }
}

fn proved(e: &EntryReport, name: &str) -> Result<(), String> {
    verdict(e, name, &["pass"])
}

fn passed(e: &EntryReport, name: &str) -> Result<(), String> {
    verdict(e, name, &["pass", "sampled-pass"])
}

/// Every check whose name starts with `prefix` has a verdict in `verdicts`;
/// at least `count` exist.
fn all_with(e: &EntryReport, prefix: &str, count: usize, verdicts: &[&str]) -> Result<(), String> {
    let found: Vec<&CheckRecord> = e.checks.iter().filter(|c| c.name.starts_with(prefix)).collect();
    if found.len() < count {
        return Err(format!("{}: {} checks `{prefix}*`, expected {count}", tag(e), found.len()));
    }
    for c in found {
        if !verdicts.contains(&c.verdict) {
            return Err(format!("{}: `{}` is {} ({})", tag(e), c.name, c.verdict, c.detail));
        }
    }
    Ok(())
}

fn detail_has(e: &EntryReport, name: &str, needle: &str) -> Result<(), String> {
    let c = get(e, name)?;
    if c.detail.contains(needle) {
        Ok(())
    } else {
        Err(format!("{}: `{name}` detail `{}` lacks `{needle}`", tag(e), c.detail))
    }
}

fn within(t: Duration, secs: u64, what: &str) -> Result<(), String> {
    if t <= Duration::from_secs(secs) {
        Ok(())
    } else {
        Err(format!("{what} took {:.1} s, limit {secs} s", t.as_secs_f64()))
    }
}

const AUDIT: &str = "degree audit: sum deg F_i + q(V//G) = dim V";

fn criterion_1() -> Outcome {
    let cfg = RunConfig { negative_controls: true, ..Default::default() }.entries(&["cubic"]).seed(42).mode(Mode::Exact);
    let (e, t) = single(cfg);
    no_failures(&e)?;
    proved(&e, "Ker(phi) on span{F1,F2,F3} is l+m+n=0")?;
    proved(&e, "F(1,-1,0) in Ker(phi) holds")?;
    proved(&e, "F(2,3,-5) in Ker(phi) holds")?;
    proved(&e, "F(1,0,0) in Ker(phi) fails")?;
    proved(&e, "negative control: F(1,1,1) not in Ker(phi)")?;
    all_with(&e, "Ker(phi): ", 2, &["pass"])?;
    all_with(&e, "equivariance under sl2^3: ", 2, &["pass"])?;
    proved(&e, AUDIT)?;
    detail_has(&e, AUDIT, "sum deg = 4, dim V - q = 4")?;
    passed(&e, "g_v abelian of dimension l at 20 regular points")?;
    proved(&e, "generic stabiliser dimension = l")?;
    passed(&e, "Poisson brackets of lifts vanish at 20 points")?;
    within(t, 5, "cubic")?;
    Ok(format!("cubic exact in {} ms", t.as_millis()))
}

fn criterion_2() -> Outcome {
    let cfg = RunConfig::default().entries(&["tri-sl"]).param("n", 3).mode(Mode::Exact);
    let (e, t) = single(cfg);
    no_failures(&e)?;
    proved(&e, "coefficients n-1 and n vanish")?;
    proved(&e, "Ker(phi): F_0")?;
    proved(&e, "Ker(phi): F_1")?;
    all_with(&e, "equivariance under sl_n x sl_n: ", 2, &["pass"])?;
    let full = get(&e, "equivariance under sl_n x sl_n x sl_2 fails: F_0")?;
    if full.verdict != "pass" || full.witness.as_ref().map_or(true, |w| w.point.is_empty() || w.value.is_none()) {
        return Err("full-G equivariance did not fail with a witness".into());
    }
    proved(&e, "weight: h * F_0 = (2-n) F_0")?;
    proved(&e, "weight: f * F_0 = 0")?;
    proved(&e, "span stable under sl_n x sl_n x sl_2")?;
    proved(&e, "span is the simple sl_2-module of dimension n-1")?;
    detail_has(&e, AUDIT, "sum deg = 6, dim V - q = 6")?;
    within(t, 60, "tri-sl n=3")?;
    Ok(format!("tri-sl n=3 exact in {} ms", t.as_millis()))
}

fn criterion_3() -> Outcome {
    let mut notes = Vec::new();
    for (n, k) in [(2i64, 2i64), (3, 2)] {
        let cfg = RunConfig::default().entries(&["ex5.3/cyclic-quiver"]).param("n", n).param("k", k);
        let (e, t) = single(cfg);
        no_failures(&e)?;
        all_with(&e, "Ker(phi): ", (n - 1) as usize, &["pass"])?;
        all_with(&e, "equivariance under ", (n - 1) as usize, &["pass"])?;
        let sum = k * n * (n - 1) / 2;
        detail_has(&e, AUDIT, &format!("sum deg = {sum}, dim V - q = {sum}"))?;
        passed(&e, "witness plane is non-derogatory off the origin")?;
        passed(&e, "char-poly coefficients of M_1...M_k are invariants of degrees k..nk")?;
        passed(&e, "char-poly coefficients lift to R_u(Q)-invariants on q*")?;
        within(t, 60, "cyclic quiver")?;
        notes.push(format!("(n,k)=({n},{k}) {} ms", t.as_millis()));
    }
    Ok(notes.join(", "))
}

fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    for n in [4i64, 5] {
        let (e, t) = single(RunConfig::default().entries(&["ex6.1"]).param("n", n));
        no_failures(&e)?;
        proved(&e, "tr (AB)^(2i-1) = 0")?;
        for c in e.checks.iter().filter(|c| c.name.starts_with("Ker(phi): ")) {
            let ok = c.verdict == "pass" || (n == 5 && c.verdict == "sampled-pass");
            if !ok {
                return Err(format!("n={n}: `{}` is {}", c.name, c.verdict));
            }
        }
        proved(&e, "independent at the block witness with distinct c_j d_j")?;
        let want = if n == 5 { "Equality" } else { "Surplus(2)" };
        proved(&e, AUDIT)?;
        detail_has(&e, AUDIT, want)?;
        within(t, 120, "ex6.1")?;
        notes.push(format!("n={n} {} ms", t.as_millis()));
    }
    Ok(notes.join(", "))
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    for n in [3i64, 4, 5] {
        let cfg = RunConfig { negative_controls: true, ..Default::default() }.entries(&["ex6.2"]).param("n", n);
        let (e, t) = single(cfg);
        no_failures(&e)?;
        proved(&e, "det(A + t B) is even in t")?;
        passed(&e, "even coefficients are traceless")?;
        all_with(&e, "equivariance under ", 1, &["pass", "sampled-pass"])?;
        all_with(&e, "Ker(phi): ", 1, &["pass", "sampled-pass"])?;
        if n == 3 {
            let c = get(&e, "negative control: traceless F_1 not in Ker(phi)")?;
            if c.verdict != "pass" || c.witness.as_ref().and_then(|w| w.value.as_ref()).is_none() {
                return Err("odd coefficient was not rejected by Ker(phi)".into());
            }
        }
        within(t, 120, "ex6.2")?;
        notes.push(format!("n={n} {} ms", t.as_millis()));
    }
    Ok(notes.join(", "))
}

fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    for m in [1i64, 2] {
        for (id, extra_q) in [("ex6.3/i", 0), ("ex6.3/ii", 0), ("ex6.3/iii", 2 * m)] {
            let (e, t) = single(RunConfig::default().entries(&[id]).param("m", m));
            no_failures(&e)?;
            proved(&e, "X^t J + J X = 0 and Y^t + Y = 0")?;
            if id == "ex6.3/iii" {
                proved(&e, "A_M is skew and M A_M = 0")?;
            }
            let sum = 2 * m * m + extra_q;
            detail_has(&e, AUDIT, &format!("sum deg = {sum},"))?;
            proved(&e, AUDIT)?;
            within(t, 120, id)?;
            notes.push(format!("{id} m={m} {} ms", t.as_millis()));
        }
    }
    Ok(notes.join(", "))
}

fn criterion_7() -> Outcome {
    let mut notes = Vec::new();
    for n in [2i64, 3] {
        let (e, t) = single(RunConfig::default().entries(&["ex6.4"]).param("n", n));
        no_failures(&e)?;
        proved(&e, "A_M is skew and A_M M = 0")?;
        detail_has(&e, AUDIT, &format!("sum deg = {n}, dim V - q = {n}"))?;
        let vg = "dim V//G = dim V - max orbit dimension";
        proved(&e, vg)?;
        detail_has(&e, vg, &format!("computed {}", n * (n + 1) / 2))?;
        within(t, 30, "ex6.4")?;
        notes.push(format!("n={n} {} ms", t.as_millis()));
    }
    Ok(notes.join(", "))
}

fn criterion_8() -> Outcome {
    let mut notes = Vec::new();
    for n in [2i64, 3, 4] {
        let (e, t) = single(RunConfig::default().entries(&["adjoint"]).param("n", n));
        no_failures(&e)?;
        all_with(&e, "equivariance under ", (n - 1) as usize, &["pass", "sampled-pass"])?;
        all_with(&e, "Ker(phi): ", (n - 1) as usize, &["pass", "sampled-pass"])?;
        let degs: Vec<String> = (1..n).map(|d| d.to_string()).collect();
        detail_has(&e, "construction: covariant degrees", &format!("computed [{}]", degs.join(", ")))?;
        passed(&e, "span F_i(v) = g_v at 20 regular points")?;
        within(t, 30, "adjoint")?;
        notes.push(format!("n={n} {} ms", t.as_millis()));
    }
    Ok(notes.join(", "))
}

const STRUCTURAL: [&str; 5] = [
    "Jacobi on q",
    "Kirillov rank even at 20 points",
    "Rais: ind q = dim V - dim g + dim g_x + ind g_x",
    "b(q) = dim V + l",
    "bookkeeping: q(V//G) + sum (deg F_i + 1) = dim V + l",
];

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let (full, _) = run(RunConfig::default());
    // Table rows realised only at non-default parameters.
    let (extra, _) = run(RunConfig::default().entries(&["tri-sl"]).param("n", 4));
    let (extra2, _) = run(RunConfig::default().entries(&["tri-sl"]).param("n", 5));
    let t = start.elapsed();
    let entries: Vec<&EntryReport> = full.entries.iter().chain(&extra.entries).chain(&extra2.entries).collect();
    let mut rows = 0;
    for e in &entries {
        no_failures(e)?;
        for name in STRUCTURAL {
            passed(e, name)?;
        }
        for c in &e.table_row_comparison {
            if !c.matches {
                return Err(format!("{} {}: printed {}, computed {}", c.row, c.field, c.printed, c.computed));
            }
            rows += 1;
        }
    }
    if full.entries.len() < 11 {
        return Err(format!("only {} entries", full.entries.len()));
    }
    within(t, 15 * 60, "full suite")?;
    Ok(format!("{} entry runs, {rows} table values, {:.1} s", entries.len(), t.as_secs_f64()))
}

fn criterion_10() -> Outcome {
    let a = run(RunConfig::default().seed(7)).0.to_json();
    let b = run(RunConfig { jobs: 1, ..RunConfig::default().seed(7) }).0.to_json();
    if a == b {
        Ok(format!("{} bytes, identical", a.len()))
    } else {
        let at = a.bytes().zip(b.bytes()).position(|(x, y)| x != y).unwrap_or(a.len().min(b.len()));
        Err(format!("reports differ at byte {at}"))
    }
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("cubic", criterion_1),
        ("tri-sl n=3", criterion_2),
        ("cyclic quiver", criterion_3),
        ("sym/skew-dual", criterion_4),
        ("sym/skew", criterion_5),
        ("sp x so", criterion_6),
        ("so copies", criterion_7),
        ("adjoint", criterion_8),
        ("structural suite", criterion_9),
        ("determinism", criterion_10),
    ];
    let mut failed = Vec::new();
    let mut out = std::io::stdout().lock();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let line = match f() {
            Ok(note) => format!("criterion {:>2} PASS {name}: {note}", i + 1),
            Err(why) => {
                failed.push(i + 1);
                format!("criterion {:>2} FAIL {name}: {why}", i + 1)
            }
        };
        // Written to the process stdout so the lines survive output capture.
        writeln!(out, "{line}").unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
