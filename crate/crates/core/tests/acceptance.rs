//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion;
//! run with `--nocapture` to see them.

use std::time::{Duration, Instant};

use zariski_core::field::{Rationals, QQ};
use zariski_core::fixtures;
use zariski_core::linalg::Matrix;
use zariski_core::{member_connected, zariski_closure, ClosureConfig, ClosureTrace, Error, GroupDescription};

type Outcome = (GroupDescription<Rationals>, ClosureTrace, Duration);

fn run(gens: &[Matrix<Rationals>], config: &ClosureConfig) -> Outcome {
    let t = Instant::now();
    let (g, trace) = zariski_closure(&QQ, gens[0].rows(), gens, config).expect("closure failed");
    (g, trace, t.elapsed())
}

fn ints(rows: &[Vec<i64>]) -> Matrix<Rationals> {
    Matrix::from_ints(QQ, rows)
}

fn diag(num: &[(i64, i64)]) -> Matrix<Rationals> {
    let d: Vec<_> = num.iter().map(|&(p, q)| num_rational::BigRational::new(p.into(), q.into())).collect();
    Matrix::diagonal(QQ, &d)
}

fn strictly_increasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] < w[1])
}

/// Bracket closure, stability under the generators, distinct components
/// and a monotone dimension history.
fn invariants(gens: &[Matrix<Rationals>], out: &Outcome, config: &ClosureConfig) -> Result<(), String> {
    let (g, trace, _) = out;
    let lie = &g.lie_algebra;
    if !lie.is_bracket_closed() {
        return Err("not bracket closed".into());
    }
    for a in gens {
        if !lie.is_normalized_by(a, &a.inverse().unwrap()) {
            return Err("not stable under a generator".into());
        }
    }
    if !g.components[0].is_identity() {
        return Err("first component is not the identity".into());
    }
    for (i, b) in g.components.iter().enumerate() {
        for c in &g.components[..i] {
            if member_connected(lie, &b.mul(&c.inverse().unwrap()), config).map_err(|e| e.to_string())? {
                return Err(format!("component {i} repeats an earlier one"));
            }
        }
    }
    if !strictly_increasing(&trace.dim_history) {
        return Err(format!("dimension history {:?} not increasing", trace.dim_history));
    }
    Ok(())
}

struct Report {
    failures: Vec<usize>,
}

impl Report {
    fn line(&mut self, k: usize, name: &str, ok: bool, detail: String) {
        println!("criterion {k} {} {name}: {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failures.push(k);
        }
    }
}

#[test]
fn acceptance() {
    let config = ClosureConfig::default();
    let mut report = Report { failures: Vec::new() };
    let mut runs: Vec<(&str, Vec<Matrix<Rationals>>, Outcome)> = Vec::new();

    let sl2 = vec![ints(&[vec![1, 1], vec![0, 1]]), ints(&[vec![1, 0], vec![1, 1]])];
    let o = run(&sl2, &config);
    report.line(
        1,
        "SL2 from elementary unipotents",
        o.0.lie_algebra.dim() == 3 && o.0.components.len() == 1 && o.2 < Duration::from_secs(5),
        format!("dim {} components {} in {:.3?} (limit 5s)", o.0.lie_algebra.dim(), o.0.components.len(), o.2),
    );
    runs.push(("sl2", sl2, o));

    let torus = vec![diag(&[(2, 1), (1, 2)])];
    let o = run(&torus, &config);
    report.line(
        2,
        "diag(2, 1/2)",
        o.0.lie_algebra.dim() == 1
            && o.0.lie_algebra.contains(&ints(&[vec![1, 0], vec![0, -1]]))
            && o.0.components.len() == 1
            && o.0.certified
            && o.2 < Duration::from_secs(1),
        format!(
            "dim {} components {} certified {} in {:.3?} (limit 1s)",
            o.0.lie_algebra.dim(),
            o.0.components.len(),
            o.0.certified,
            o.2
        ),
    );
    runs.push(("diag", torus, o));

    let sign = vec![diag(&[(-1, 1), (1, 1)])];
    let o = run(&sign, &config);
    report.line(
        3,
        "diag(-1, 1)",
        o.0.lie_algebra.dim() == 0 && o.0.components.len() == 2 && o.2 < Duration::from_secs(1),
        format!("dim {} components {} in {:.3?} (limit 1s)", o.0.lie_algebra.dim(), o.0.components.len(), o.2),
    );
    runs.push(("sign", sign, o));

    let g2 = fixtures::g2();
    let o = run(&g2, &config);
    report.line(
        4,
        "G2 fixture",
        o.0.lie_algebra.dim() == 14 && o.0.components.len() == 1 && o.0.certified && o.1.multrel_max_degree == 12,
        format!(
            "dim {} components {} certified {} field degree {} in {:.2?}",
            o.0.lie_algebra.dim(),
            o.0.components.len(),
            o.0.certified,
            o.1.multrel_max_degree,
            o.2
        ),
    );
    runs.push(("g2", g2, o));

    let b2 = fixtures::b2();
    let o = run(&b2, &config);
    report.line(
        5,
        "B2 fixture",
        o.0.lie_algebra.dim() == 10 && o.0.components.len() == 2 && o.1.multrel_max_degree == 8,
        format!(
            "dim {} components {} certified {} field degree {} in {:.2?}",
            o.0.lie_algebra.dim(),
            o.0.components.len(),
            o.0.certified,
            o.1.multrel_max_degree,
            o.2
        ),
    );
    runs.push(("b2", b2, o));

    // A3 is allowed to stop on its budget as long as the partial trace is sane.
    let budget = Duration::from_secs(120);
    let a3_config = ClosureConfig { time_budget: Some(budget), ..config.clone() };
    let a3 = fixtures::a3();
    let t = Instant::now();
    match zariski_closure(&QQ, 6, &a3, &a3_config) {
        Ok((g, trace)) => report.line(
            6,
            "A3 fixture (optional)",
            g.lie_algebra.dim() == 15 && g.components.len() == 1 && trace.multrel_max_degree == 24,
            format!(
                "dim {} components {} certified {} field degree {} in {:.2?}",
                g.lie_algebra.dim(),
                g.components.len(),
                g.certified,
                trace.multrel_max_degree,
                t.elapsed()
            ),
        ),
        Err(f) => {
            let ok = matches!(f.error, Error::BudgetExhausted(_)) && strictly_increasing(&f.trace.dim_history);
            report.line(
                6,
                "A3 fixture (optional)",
                ok,
                format!(
                    "stopped: {} after {:.2?}; dim history {:?}, {} relation calls, max degree {}",
                    f.error,
                    t.elapsed(),
                    f.trace.dim_history,
                    f.trace.multrel_calls,
                    f.trace.multrel_max_degree
                ),
            );
        }
    }

    let mut bad = Vec::new();
    for (name, gens, o) in &runs {
        if let Err(e) = invariants(gens, o, &config) {
            bad.push(format!("{name}: {e}"));
        }
    }
    report.line(
        7,
        "closure invariants on all runs (module properties: tests/properties.rs)",
        bad.is_empty(),
        if bad.is_empty() { format!("{} runs checked", runs.len()) } else { bad.join("; ") },
    );

    let (_, _, (_, trace, _)) = runs.iter().find(|r| r.0 == "g2").unwrap();
    report.line(
        8,
        "trace counters populated",
        trace.rounds > 0
            && !trace.dim_history.is_empty()
            && !trace.bfs_lengths.is_empty()
            && trace.multrel_calls > 0
            && trace.membership_calls > 0
            && trace.torus_max_degree > 0
            && trace.total_time > Duration::ZERO,
        format!(
            "rounds {} relation calls {} ({:.2?}) membership calls {} ({:.2?})",
            trace.rounds, trace.multrel_calls, trace.multrel_time, trace.membership_calls, trace.membership_time
        ),
    );

    assert!(report.failures.is_empty(), "failed criteria: {:?}", report.failures);
}

#[test]
fn short_budget_stops_with_partial_trace() {
    let config = ClosureConfig { time_budget: Some(Duration::from_millis(200)), ..ClosureConfig::default() };
    let f = zariski_closure(&QQ, 6, &fixtures::a3(), &config).unwrap_err();
    assert!(matches!(f.error, Error::BudgetExhausted(_)), "{}", f.error);
    assert!(strictly_increasing(&f.trace.dim_history));
    assert!(f.trace.rounds >= 1);
}
