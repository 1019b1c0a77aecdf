//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Built with `harness = false` so the lines always print.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{random_pairs, run};
use graph_energy::report::Item;
use graph_energy_core::charpoly::QuasiOrder;
use graph_energy_core::energy::DEFAULT_SPECTRUM_TOL;
use graph_energy_core::proofkit::{monotonicity_scan, verify_exact_identities, RowStatus};
use graph_energy_core::{
    charpoly_auto, charpoly_cycle, charpoly_deletion, charpoly_general, charpoly_p6,
    charpoly_path, coulson_diff, spectrum, Graph,
};
use num_bigint::BigInt;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn compare_reference(n: usize, quoted: f64) -> Result<String, String> {
    let spec_a = format!("cycle:{n}");
    let spec_b = format!("p6:{n}");
    let r = run(&["compare", &spec_a, &spec_b, "--json"]);
    ensure(r.code == 0, || format!("exit {}: {}", r.code, r.stderr))?;
    ensure(r.elapsed < Duration::from_secs(5), || format!("took {:?}", r.elapsed))?;
    let report = r.report();
    let Some(Item::Comparison(c)) = report.items.first() else {
        return Err("no comparison in report".into());
    };
    let s = c.spectral_diff.ok_or("spectral route did not run")?;
    let q = c.coulson_diff.ok_or("Coulson route did not run")?;
    ensure((s - quoted).abs() <= 5e-4 && (q - quoted).abs() <= 5e-4, || {
        format!("n = {n}: spectral {s:.6}, Coulson {q:.6}, expected {quoted}")
    })?;
    Ok(format!("n = {n}: spectral {s:.6}, Coulson {q:.6}"))
}

fn c1() -> Outcome {
    compare_reference(18, -0.03752)
}

fn c2() -> Outcome {
    let a = compare_reference(17, -0.00961)?;
    let b = compare_reference(19, -0.02290)?;
    Ok(format!("{a}; {b}"))
}

fn c3() -> Outcome {
    let r = run(&["certify", "4k", "--json"]);
    ensure(r.code == 0, || format!("exit {}: {}", r.code, r.stderr))?;
    let report = r.report();
    let l = report
        .items
        .iter()
        .find_map(|i| match i {
            Item::LimitIntegrals(l) => Some(*l),
            _ => None,
        })
        .ok_or("no limit integrals in report")?;
    for v in [l.first, l.second] {
        ensure((v + 0.047643).abs() <= 1e-4, || format!("limit integral {v:.6}"))?;
    }
    Ok(format!("{:.6} and {:.6}", l.first, l.second))
}

fn c4() -> Outcome {
    let start = Instant::now();
    let r = run(&["verify-theorem", "16", "400", "--json"]);
    ensure(r.code == 0, || format!("exit {}: {}", r.code, r.stderr))?;
    let rows = theorem_rows(&r.report());
    ensure(rows.len() == 385, || format!("{} rows", rows.len()))?;
    ensure(rows.iter().all(|&(_, s)| s == RowStatus::Holds), || "a row fails".into())?;
    let r = run(&["verify-theorem", "8", "15", "--json"]);
    ensure(r.code == 0, || format!("exit {}: {}", r.code, r.stderr))?;
    for (n, status) in theorem_rows(&r.report()) {
        let want = if [8, 12, 14].contains(&n) {
            RowStatus::Holds
        } else {
            RowStatus::ExcludedReversed
        };
        ensure(status == want, || format!("n = {n}: {status:?}"))?;
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(300), || format!("took {t:?}"))?;
    Ok(format!("16..400 hold, 8..15 as listed, {:.2} s", t.as_secs_f64()))
}

fn theorem_rows(report: &graph_energy::RunReport) -> Vec<(usize, RowStatus)> {
    report
        .items
        .iter()
        .filter_map(|i| match i {
            Item::TheoremRow(r) => Some((r.n, r.status)),
            _ => None,
        })
        .collect()
}

fn c5() -> Outcome {
    let checks = verify_exact_identities();
    ensure(checks.len() == 5, || format!("{} identities", checks.len()))?;
    for c in &checks {
        ensure(c.holds && c.residual.is_none(), || format!("{} fails", c.name))?;
    }
    Ok("5 identities with zero residual".into())
}

fn c6() -> Outcome {
    let mut count = 0;
    for n in 1..=24 {
        let mut cases = vec![(Graph::path(n), charpoly_path(n))];
        if n >= 3 {
            cases.push((Graph::cycle(n), charpoly_cycle(n)));
        }
        if n >= 7 {
            cases.push((Graph::p6(n), charpoly_p6(n)));
        }
        for (g, rec) in cases {
            let (g, rec) = (g.map_err(|e| e.to_string())?, rec.map_err(|e| e.to_string())?);
            let general = charpoly_general(&g);
            ensure(rec == general, || format!("recurrence vs general, n = {n}"))?;
            for &e in g.edges() {
                let del = charpoly_deletion(&g, e).map_err(|e| e.to_string())?;
                ensure(del == general, || format!("deletion at {e:?} vs general, n = {n}"))?;
            }
            count += 1;
        }
    }
    Ok(format!("{count} graphs, deletion at every edge"))
}

fn c7() -> Outcome {
    let mut worst: f64 = 0.0;
    for (a, b) in random_pairs(0x5eed, 50, 40) {
        let ea = spectrum(&a, DEFAULT_SPECTRUM_TOL).map_err(|e| e.to_string())?.energy();
        let eb = spectrum(&b, DEFAULT_SPECTRUM_TOL).map_err(|e| e.to_string())?.energy();
        let q = coulson_diff(&charpoly_auto(&a), &charpoly_auto(&b), 1e-10)
            .map_err(|e| e.to_string())?;
        ensure(q.converged, || "quadrature did not converge".into())?;
        worst = worst.max((ea - eb - q.value).abs());
    }
    ensure(worst <= 1e-6, || format!("largest gap {worst:e}"))?;
    Ok(format!("50 pairs, largest gap {worst:.2e}"))
}

fn c8() -> Outcome {
    let mut corpus = Vec::new();
    for n in 3..=40 {
        corpus.push(Graph::cycle(n).map_err(|e| e.to_string())?);
        corpus.push(Graph::path(n).map_err(|e| e.to_string())?);
        if n >= 7 {
            corpus.push(Graph::p6(n).map_err(|e| e.to_string())?);
        }
    }
    for (a, b) in random_pairs(0xc0ffee, 50, 40) {
        corpus.push(a);
        corpus.push(b);
    }
    for g in &corpus {
        let s = spectrum(g, DEFAULT_SPECTRUM_TOL).map_err(|e| e.to_string())?;
        ensure(s.check_invariants(g), || format!("invariants fail on {g:?}"))?;
    }
    Ok(format!("{} graphs", corpus.len()))
}

fn c9() -> Outcome {
    for n in (8..=60).step_by(2) {
        let (a, b) = (format!("cycle:{n}"), format!("p6:{n}"));
        let r = run(&["quasi-order", &a, &b, "--json"]);
        ensure(r.code == 0, || format!("exit {}: {}", r.code, r.stderr))?;
        let Some(Item::QuasiOrder(q)) = r.report().items.first().cloned() else {
            return Err("no quasi-order item".into());
        };
        ensure(q.verdict == QuasiOrder::Incomparable, || format!("n = {n}: {:?}", q.verdict))?;
        let coeff = |v: &[String], k: usize| -> BigInt {
            v.get(k).map_or(BigInt::from(0), |s| s.parse().expect("integer"))
        };
        let (less, greater) = (
            q.witness_less.ok_or("missing witness")?,
            q.witness_greater.ok_or("missing witness")?,
        );
        ensure(coeff(&q.b_a, less) < coeff(&q.b_b, less), || format!("n = {n}: bad < witness"))?;
        ensure(coeff(&q.b_a, greater) > coeff(&q.b_b, greater), || {
            format!("n = {n}: bad > witness")
        })?;
    }
    Ok("even n in 8..=60, witnesses verified".into())
}

fn c10() -> Outcome {
    let mut lens = Vec::new();
    for residue in 1..=3 {
        let r = monotonicity_scan(residue, 200, 1e-10).map_err(|e| e.to_string())?;
        ensure(r.violations.is_empty(), || format!("residue {residue}: {:?}", r.violations))?;
        ensure(
            r.entries.windows(2).all(|w| w[1].difference < w[0].difference),
            || format!("residue {residue}: not strictly decreasing"),
        )?;
        lens.push(r.entries.len());
    }
    Ok(format!("{lens:?} steps, no violations"))
}

fn c11() -> Outcome {
    let r = run(&["exhaustive-small", "8", "--json"]);
    ensure(r.code == 0, || format!("exit {}: {}", r.code, r.stderr))?;
    ensure(r.elapsed < Duration::from_secs(180), || format!("took {:?}", r.elapsed))?;
    let Some(Item::Exhaustive(x)) = r.report().items.first().cloned() else {
        return Err("no exhaustive item".into());
    };
    ensure(x.passed() && x.max_other_energy < x.energy_p6, || format!("{x:?}"))?;
    Ok(format!(
        "{} graphs, max other {:.6} < {:.6}, {:.2} s",
        x.graphs,
        x.max_other_energy,
        x.energy_p6,
        r.elapsed.as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("compare cycle:18 p6:18 by both routes", c1),
        ("compare at n = 17 and n = 19", c2),
        ("certify 4k limit integrals", c3),
        ("verify-theorem 16 400 and the small-n pattern", c4),
        ("exact identities", c5),
        ("characteristic polynomial oracles agree", c6),
        ("spectral and Coulson differences on random pairs", c7),
        ("spectrum invariants on the corpus", c8),
        ("quasi-order incomparability for even n", c9),
        ("monotonicity scans to n = 200", c10),
        ("exhaustive-small 8", c11),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
