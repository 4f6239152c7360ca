//! Acceptance criteria 1–9, one line each. Tolerances and sample counts are pinned here and
//! checked against what each report records, so a looser run cannot pass.

use paraquat_cli::{run_suite, CheckReport, Config, Suite};
use std::process::ExitCode;
use std::time::Instant;

struct Outcome {
    ok: bool,
    detail: String,
}

/// Requirement on one named check: it passed, with the pinned tolerance and enough samples.
fn require(reports: &[CheckReport], name: &str, tolerance: f64, min_samples: usize, notes: &mut Vec<String>) -> bool {
    let Some(r) = reports.iter().find(|r| r.name == name) else {
        notes.push(format!("{name}: missing"));
        return false;
    };
    let ok = r.passed() && r.tolerance == tolerance && r.sample_count >= min_samples;
    if !ok {
        notes.push(format!(
            "{name}: status {:?}, residual {:?}, tolerance {:e} (pinned {tolerance:e}), samples {} (need {min_samples})",
            r.status, r.max_residual, r.tolerance, r.sample_count
        ));
    }
    ok
}

fn evaluate(reqs: &[(&str, f64, usize)], reports: &[CheckReport], extra: Option<(bool, String)>, summary: String) -> Outcome {
    let mut notes = Vec::new();
    let mut ok = reqs.iter().fold(true, |acc, (n, t, s)| require(reports, n, *t, *s, &mut notes) && acc);
    if let Some((good, note)) = extra {
        ok &= good;
        if !good {
            notes.push(note);
        }
    }
    let detail = if notes.is_empty() { summary } else { format!("{summary}; {}", notes.join("; ")) };
    Outcome { ok, detail }
}

fn timed(suite: Suite, config: &Config) -> (Vec<CheckReport>, f64) {
    let start = Instant::now();
    let reports = run_suite(suite, config).expect("valid configuration");
    (reports, start.elapsed().as_secs_f64())
}

fn criterion_1() -> Outcome {
    let config = Config { samples: 100_000, ..Config::default() };
    let (reports, secs) = timed(Suite::Algebra, &config);
    let reqs = [
        ("algebra.norm_multiplicativity", 0.0, 100_000),
        ("algebra.conjugation_antiautomorphism", 0.0, 100_000),
        ("algebra.product_table", 0.0, 1),
    ];
    evaluate(&reqs, &reports, Some((secs < 10.0, format!("runtime {secs:.1} s >= 10 s"))), format!("algebra exact over 1e5 pairs in {secs:.1} s"))
}

fn criterion_2() -> Outcome {
    let config = Config { samples: 1000, ..Config::default() };
    let (reports, secs) = timed(Suite::Linalg, &config);
    let reqs = [
        ("linalg.real_rep_brackets.n1", 0.0, 1000),
        ("linalg.real_rep_brackets.n2", 0.0, 1000),
        ("linalg.real_rep_brackets.n3", 0.0, 1000),
        ("linalg.sp_bracket_closed", 0.0, 1000),
    ];
    evaluate(&reqs, &reports, None, format!("mu brackets exact for n = 1, 2, 3 over 1e3 pairs in {secs:.1} s"))
}

fn criterion_3() -> Outcome {
    let config = Config { samples: 100, ..Config::default() };
    let (reports, secs) = timed(Suite::Forms, &config);
    let reqs = [
        ("forms.four_form_rotation_invariance", 0.0, 100),
        ("forms.projector_idempotent", 0.0, 100),
        ("forms.projector_basis_independent", 0.0, 100),
    ];
    evaluate(&reqs, &reports, None, format!("four-form invariant under 100 SO(2,1) rotations, projector exact, {secs:.1} s"))
}

fn criterion_4() -> Outcome {
    let config = Config { n: 2, ..Config::default() };
    let (reports, secs) = timed(Suite::Curvature, &config);
    let reqs = [
        ("curvature.model_bianchi", 0.0, 1),
        ("curvature.model_autg", 0.0, 1),
        ("curvature.model_einstein", 0.0, 1),
        ("curvature.model_jacobi_spectrum", 1e-9, 1),
        ("curvature.ricci_split", 0.0, 1),
    ];
    evaluate(&reqs, &reports, None, format!("n = 2 model curvature exact, spectrum within 1e-9, {secs:.1} s"))
}

fn criterion_5() -> Outcome {
    let (reports, secs) = timed(Suite::Curvature, &Config::default());
    let reqs = [("curvature.solvable_example", 0.0, 1), ("curvature.sl4_example", 0.0, 1)];
    evaluate(&reqs, &reports, None, format!("solvable nilpotent Jacobi and sl4 Einstein, exact, {secs:.1} s"))
}

fn criterion_6() -> Outcome {
    let config = Config { samples: 200, n: 2, ..Config::default() };
    let (reports, secs) = timed(Suite::ReduceS1, &config);
    let reqs = [
        ("reduce-s1.moment_gradient", 5e-4, 200),
        ("reduce-s1.reduced_structure", 1e-9, 50),
        ("reduce-s1.quotient_equations", 1e-9, 50),
    ];
    evaluate(&reqs, &reports, None, format!("flat S1 gradient, induced structure and quotient equations, {secs:.1} s"))
}

fn criterion_7_and_8() -> (Outcome, Outcome) {
    let config = Config { samples: 100, p: 1, q: 2, ..Config::default() };
    let (reports, secs) = timed(Suite::ReducePq, &config);
    let reqs = [
        ("reduce-pq.lemma_zero_agreement", 0.0, 100),
        ("reduce-pq.trace_identity", 1e-12, 20),
        ("reduce-pq.ratio_direction_independence", 1e-6, 20 * 20),
        ("reduce-pq.ratio_point_dependence", 0.0, 20),
    ];
    let seven = evaluate(
        &reqs,
        &reports,
        Some((secs < 60.0, format!("runtime {secs:.1} s >= 60 s"))),
        format!("(p,q) = (1,2) zero sets agree, trace identity, pointwise but not global Osserman, {secs:.1} s"),
    );
    let eight = evaluate(&[("reduce-pq.i_axis_empty", 0.0, 10_000)], &reports, None, "i-axis variant has no zeros among 1e4 samples".into());
    (seven, eight)
}

fn criterion_9() -> Outcome {
    let config = Config { samples: 20, seed: 123, ..Config::default() };
    let strip = |mut v: Vec<CheckReport>| {
        for r in &mut v {
            r.wall_time = 0.0;
        }
        v
    };
    let a = strip(run_suite(Suite::All, &config).expect("valid configuration"));
    let b = strip(run_suite(Suite::All, &config).expect("valid configuration"));
    let bits = |v: &[CheckReport]| v.iter().map(|r| r.max_residual.map(f64::to_bits)).collect::<Vec<_>>();
    let same = a == b && bits(&a) == bits(&b);
    let randomized = a.iter().filter(|r| r.seed.is_some()).count();
    Outcome {
        ok: same,
        detail: if same {
            format!("{} checks ({randomized} randomized) reproduce bit-for-bit under seed 123", a.len())
        } else {
            "reports differ between identical runs".into()
        },
    }
}

fn main() -> ExitCode {
    let (seven, eight) = criterion_7_and_8();
    let outcomes = [criterion_1(), criterion_2(), criterion_3(), criterion_4(), criterion_5(), criterion_6(), seven, eight, criterion_9()];
    for (i, o) in outcomes.iter().enumerate() {
        println!("criterion {} {}  {}", i + 1, if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    if outcomes.iter().all(|o| o.ok) { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
