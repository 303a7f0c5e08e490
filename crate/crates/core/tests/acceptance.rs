//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Timed criteria run on a one-thread pool.

use std::f64::consts::LN_2;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use graphent::entropy::{
    closed_form, entropy_i1, entropy_i2, entropy_i3, probabilities_from_spectrum, LogBase,
    ProbabilityVector,
};
use graphent::graph::{
    encode_graph6, enumerate_labeled_graphs, make_family, parse_graph6, Family, GraphInput,
};
use graphent::report::to_json;
use graphent::spectra::symmetric_eigenvalues;
use graphent::verifier::{
    audit_corpus, audit_theorem10, run_verification, scan_extremal, AuditStatus, Corpus,
    ScanFamily, Tally, VerificationConfig, VerificationReport,
};
use graphent::zoo::spectrum;
use graphent::{DenseMatrix, Graph, MatrixKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GOLDEN_TOL: f64 = 1e-9;
const TRACE_REL_TOL: f64 = 1e-9;
const KN_SPECTRUM_TOL: f64 = 1e-10;
const AUDIT_EQ_TOL: f64 = 1e-12;
const EQUALITIES_BUDGET: Duration = Duration::from_secs(120);
const SCAN_BUDGET: Duration = Duration::from_secs(300);

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
/// Name, kind, graph, expected `(I1, I2, I3)` at `α = 2` if pinned, expected `I1`.
type Golden<'a> = (&'a str, MatrixKind, &'a Graph, Option<[f64; 3]>, f64);

fn single_threaded<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("thread pool")
        .install(f)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tally<'a>(report: &'a VerificationReport, id: &str) -> Result<&'a Tally, String> {
    report
        .summary
        .by_claim
        .get(id)
        .ok_or_else(|| format!("claim {id} was never evaluated"))
}

fn fam(f: Family, n: usize) -> Graph {
    make_family(f, n).expect("family graph")
}

fn all_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (1..=max_n).flat_map(|n| enumerate_labeled_graphs(n).expect("enumerable order"))
}

fn suite_config(equalities: bool, traces: bool, bounds: bool) -> VerificationConfig {
    VerificationConfig {
        alphas: vec![0.5, 2.0, 3.0],
        betas: vec![-1.0, -0.5, 1.0],
        equalities,
        traces,
        bounds,
        ..VerificationConfig::default()
    }
}

fn theorem_equalities() -> Outcome {
    let corpus = Corpus::All { max_order: 6 };
    let start = Instant::now();
    let report = single_threaded(|| run_verification(&corpus, &suite_config(true, false, false)))
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(report.corpus.members == 33_867, || {
        format!("corpus has {} members", report.corpus.members)
    })?;
    ensure(report.failures() == 0, || {
        let first = report
            .claims
            .first()
            .map(|c| format!("{} on {}", c.id, c.graph));
        format!("{} failures, first {first:?}", report.failures())
    })?;
    for t in 1..=9 {
        let passed: u64 = report
            .summary
            .by_claim
            .iter()
            .filter(|(id, _)| id.starts_with(&format!("thm{t}/")))
            .map(|(_, c)| c.pass + c.equality_attained)
            .sum();
        ensure(passed > 0, || format!("theorem {t} never applied"))?;
    }
    ensure(elapsed <= EQUALITIES_BUDGET, || {
        format!(
            "took {:.1}s, budget {}s",
            elapsed.as_secs_f64(),
            EQUALITIES_BUDGET.as_secs()
        )
    })?;
    Ok(format!(
        "{} evaluations, 0 failures, {:.1}s single-threaded",
        report.summary.evaluations,
        elapsed.as_secs_f64()
    ))
}

/// `(I1, I2, I3)` through the spectrum, independent of the closed forms.
fn spectral_entropies<G: GraphInput>(kind: MatrixKind, g: &G, alpha: f64) -> (f64, f64, f64) {
    let p = probabilities_from_spectrum(&spectrum(kind, g).expect("spectrum"))
        .expect("distribution")
        .with_log_base(LogBase::TWO);
    (
        entropy_i1(&p),
        entropy_i2(&p, alpha).expect("alpha"),
        entropy_i3(&p, alpha).expect("alpha"),
    )
}

fn golden_values() -> Outcome {
    let k3 = fam(Family::Complete, 3);
    let s4 = fam(Family::Star, 4);
    let p3 = fam(Family::Path, 3);
    let k2 = fam(Family::Complete, 2);
    let id_p3 = 1.0 - 3.0 / (4.0 + 2.0 * 3f64.sqrt());
    let cases: [Golden; 4] = [
        (
            "Q(K3)",
            MatrixKind::SignlessLaplacian,
            &k3,
            Some([0.5, 1.0, 1.0]),
            0.5,
        ),
        (
            "norm-L(S4)",
            MatrixKind::NormalizedLaplacian,
            &s4,
            None,
            0.625,
        ),
        ("D(P3)", MatrixKind::Distance, &p3, None, id_p3),
        ("I(K2)", MatrixKind::Incidence, &k2, None, 0.0),
    ];
    for (name, kind, g, triple, i1) in cases {
        let closed = closed_form(kind, g, 2.0, LogBase::TWO).map_err(|e| format!("{name}: {e}"))?;
        let spectral = spectral_entropies(kind, g, 2.0);
        for (route, got) in [("closed form", closed), ("spectrum", spectral)] {
            ensure((got.0 - i1).abs() <= GOLDEN_TOL, || {
                format!("{name} {route}: I1 = {} vs {i1}", got.0)
            })?;
            if let Some([_, i2, i3]) = triple {
                ensure(
                    (got.1 - i2).abs() <= GOLDEN_TOL && (got.2 - i3).abs() <= GOLDEN_TOL,
                    || {
                        format!(
                            "{name} {route}: (I2, I3) = ({}, {}) vs ({i2}, {i3})",
                            got.1, got.2
                        )
                    },
                )?;
            }
        }
    }
    Ok(format!(
        "I_Q(K3)=(0.5,1,1), I_L(S4)=0.625, I_D(P3)={id_p3:.6}, I_I(K2)=0"
    ))
}

fn trace_identities() -> Outcome {
    let corpus = Corpus::All { max_order: 6 };
    let report =
        run_verification(&corpus, &suite_config(false, true, false)).map_err(|e| e.to_string())?;
    ensure(report.failures() == 0, || {
        let first = report
            .claims
            .first()
            .map(|c| format!("{} on {}", c.id, c.graph));
        format!("{} failures, first {first:?}", report.failures())
    })?;
    let required = [
        "trace/q/sum",
        "trace/q/squares",
        "trace/norm-l/squares",
        "trace/skew/squares",
        "trace/randic/squares",
        "trace/randic-incidence/squares",
        "trace/general-randic:-1/squares",
        "trace/general-randic:-0.5/squares",
        "trace/general-randic:1/squares",
        "trace/distance/squares",
    ];
    for id in required {
        let t = tally(&report, id)?;
        ensure(t.pass > 0, || format!("{id} never passed"))?;
    }
    Ok(format!(
        "{} identities over {} graphs at {TRACE_REL_TOL:e} relative, 0 failures",
        report.summary.evaluations, report.corpus.members
    ))
}

fn corollary_bounds() -> Outcome {
    let corpus = Corpus::All { max_order: 6 };
    let report =
        run_verification(&corpus, &suite_config(false, false, true)).map_err(|e| e.to_string())?;
    ensure(report.failures() == 0, || {
        let first = report
            .claims
            .first()
            .map(|c| format!("{} on {}", c.id, c.graph));
        format!("{} failures, first {first:?}", report.failures())
    })?;

    // Expected equality counts, counted directly from the structure of
    // each labeled graph.
    let (mut regular, mut complete, mut single_edge, mut k2, mut matchings) = (0, 0, 0, 0, 0);
    for g in all_graphs(6) {
        let no_isolated = g.min_degree() >= 1;
        if no_isolated && g.is_regular() {
            regular += 1;
        }
        if g.order() >= 2 && g.is_complete() {
            complete += 1;
        }
        if g.size() == 1 {
            single_edge += 1;
        }
        if g.order() == 2 && g.size() == 1 {
            k2 += 1;
        }
        if g.size() >= 1 && g.degrees().iter().all(|&d| d == 1) {
            matchings += 1;
        }
    }
    let characterizations = [
        ("cor2.ii/norm-l/lower-equality", regular),
        ("cor2.ii/norm-q/upper-equality", regular),
        ("cor2.i/norm-l/upper-equality", complete),
        ("cor2.i/norm-q/upper-equality", complete),
        ("cor3.i/lower-equality", single_edge),
        ("cor7.i/equality", k2),
        ("cor7.ii/equality", complete),
        ("cor6/equality", matchings),
    ];
    let mut notes = Vec::new();
    for (id, expected) in characterizations {
        let t = tally(&report, id)?;
        ensure(t.equality_attained == expected, || {
            format!(
                "{id}: equality attained {} times, expected {expected}",
                t.equality_attained
            )
        })?;
        notes.push(format!("{id}={expected}"));
    }
    Ok(format!(
        "{} bound evaluations, 0 violations; equality cases {}",
        report.summary.evaluations,
        notes.join(" ")
    ))
}

fn extremal_scans() -> Outcome {
    let n = 8;
    let start = Instant::now();
    let (inc, ir) = single_threaded(|| {
        let inc = scan_extremal(ScanFamily::Trees, n, MatrixKind::Incidence, 0);
        let ir = scan_extremal(ScanFamily::Trees, n, MatrixKind::RandicIncidence, 0);
        (inc, ir)
    });
    let elapsed = start.elapsed();
    let (inc, ir) = (
        inc.map_err(|e| e.to_string())?,
        ir.map_err(|e| e.to_string())?,
    );
    let is_star = |g: &Graph| g.max_degree() == n - 1;
    let is_path = |g: &Graph| g.max_degree() <= 2;
    let paths: usize = (1..=n).product::<usize>() / 2;
    ensure(inc.members == 262_144, || format!("{} trees", inc.members))?;
    ensure(
        inc.min.witnesses.len() == n && inc.min.witnesses.iter().all(is_star),
        || {
            format!(
                "I_I minimizers: {} graphs, not exactly the stars",
                inc.min.witnesses.len()
            )
        },
    )?;
    ensure(
        inc.max.witnesses.len() == paths && inc.max.witnesses.iter().all(is_path),
        || {
            format!(
                "I_I maximizers: {} graphs, not exactly the paths",
                inc.max.witnesses.len()
            )
        },
    )?;
    ensure(
        ir.max.witnesses.len() == n && ir.max.witnesses.iter().all(is_star),
        || {
            format!(
                "I_IR maximizers: {} graphs, not exactly the stars",
                ir.max.witnesses.len()
            )
        },
    )?;
    ensure(elapsed <= SCAN_BUDGET, || {
        format!(
            "took {:.1}s, budget {}s",
            elapsed.as_secs_f64(),
            SCAN_BUDGET.as_secs()
        )
    })?;
    Ok(format!(
        "I_I min {:.9} (8 stars), max {:.9} ({paths} paths); I_IR max {:.9} (8 stars); {:.1}s single-threaded",
        inc.min.value,
        inc.max.value,
        ir.max.value,
        elapsed.as_secs_f64()
    ))
}

fn theorem10_audit() -> Outcome {
    let find = |p: &[f64]| -> Result<graphent::verifier::AuditResult, String> {
        let pv = ProbabilityVector::new(p.to_vec(), LogBase::E).map_err(|e| e.to_string())?;
        audit_theorem10(&pv, &[0.5], LogBase::E)
            .map_err(|e| e.to_string())?
            .into_iter()
            .find(|r| r.id == "thm10.i.a")
            .ok_or_else(|| "claim i.a missing".to_string())
    };
    let uniform = find(&[0.5, 0.5])?;
    ensure(uniform.status == AuditStatus::HoldsWithEquality, || {
        format!("uniform: {:?}", uniform.status)
    })?;
    ensure((uniform.lhs - uniform.rhs).abs() <= AUDIT_EQ_TOL, || {
        format!("uniform: I3 ln2 = {} vs I2 = {}", uniform.lhs, uniform.rhs)
    })?;

    // independent evaluation of both sides for p = (0.9, 0.1), α = 1/2
    let s: f64 = 0.9f64.sqrt() + 0.1f64.sqrt();
    let i2 = 2.0 * s.ln();
    let i3 = (s - 1.0) / (2f64.sqrt() - 1.0);
    let skewed = find(&[0.9, 0.1])?;
    ensure(skewed.status == AuditStatus::Violated, || {
        format!("(0.9, 0.1): {:?}", skewed.status)
    })?;
    ensure(
        (skewed.rhs - i2).abs() <= 1e-12 && (skewed.lhs - i3 * LN_2).abs() <= 1e-12,
        || {
            format!(
                "(0.9, 0.1): sides {} {} vs {} {}",
                skewed.lhs,
                skewed.rhs,
                i3 * LN_2,
                i2
            )
        },
    )?;
    ensure((skewed.margin + 0.0267).abs() < 5e-5, || {
        format!("margin {}", skewed.margin)
    })?;

    let alphas = [0.5, 1.5, 2.0, 3.0];
    let a = audit_corpus(5, &alphas, LogBase::TWO).map_err(|e| e.to_string())?;
    let b = audit_corpus(5, &alphas, LogBase::TWO).map_err(|e| e.to_string())?;
    let (ja, jb) = (to_json(&a), to_json(&b));
    ensure(ja == jb && a.to_csv() == b.to_csv(), || {
        "corpus audit is not deterministic".into()
    })?;
    Ok(format!(
        "uniform boundary holds with equality; (0.9,0.1) margin {:.6}; corpus audit of {} vectors reproducible ({} violations recorded)",
        skewed.margin,
        a.vectors,
        a.violations()
    ))
}

fn eigensolver() -> Outcome {
    for n in 3..=10 {
        let s = spectrum(MatrixKind::SignlessLaplacian, &fam(Family::Complete, n))
            .map_err(|e| e.to_string())?;
        let mut expected = vec![n as f64 - 2.0; n];
        expected[0] = 2.0 * n as f64 - 2.0;
        for (got, want) in s.values().iter().zip(&expected) {
            ensure((got - want).abs() <= KN_SPECTRUM_TOL, || {
                format!("Q(K{n}): {got} vs {want}")
            })?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst: f64 = 0.0;
    for k in 0..1000 {
        let n = rng.random_range(1..=12);
        let mut m = DenseMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let v = rng.random_range(-10.0..10.0);
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        let s = symmetric_eigenvalues(&m).map_err(|e| format!("matrix {k}: {e}"))?;
        for (got, want) in [
            (s.sum(), m.trace()),
            (s.sum_of_squares(), m.frobenius_norm().powi(2)),
        ] {
            let rel = (got - want).abs() / 1f64.max(got.abs()).max(want.abs());
            worst = worst.max(rel);
            ensure(rel <= TRACE_REL_TOL, || {
                format!("matrix {k} ({n}x{n}): {got} vs {want}")
            })?;
        }
    }
    Ok(format!("Q(K3..K10) exact to {KN_SPECTRUM_TOL:e}; 1000 random matrices, worst relative error {worst:.1e}"))
}

fn graph6_parser() -> Outcome {
    let mut count = 0;
    for g in all_graphs(6) {
        let code = encode_graph6(&g);
        let back = parse_graph6(code.as_bytes()).map_err(|e| format!("{code}: {e}"))?;
        ensure(back == g, || format!("{code} decodes to a different graph"))?;
        ensure(encode_graph6(&back) == code, || {
            format!("{code} re-encodes differently")
        })?;
        count += 1;
    }
    let k2 = parse_graph6(b"A_").map_err(|e| e.to_string())?;
    ensure(k2 == fam(Family::Complete, 2), || "A_ is not K2".into())?;
    let empty = parse_graph6(b"A?").map_err(|e| e.to_string())?;
    ensure(empty == Graph::empty(2).expect("graph"), || {
        "A? is not the edgeless graph".into()
    })?;
    Ok(format!("{count} graphs round-trip; A_ = K2, A? = 2K1"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("theorem equalities, n <= 6", theorem_equalities),
        ("golden values", golden_values),
        ("trace identities, n <= 6", trace_identities),
        (
            "corollary bounds and equality cases, n <= 6",
            corollary_bounds,
        ),
        ("extremal tree scans, n = 8", extremal_scans),
        ("entropy inequality audit", theorem10_audit),
        ("eigensolver", eigensolver),
        ("graph6 parser", graph6_parser),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of {} criteria failed", criteria.len());
        ExitCode::FAILURE
    }
}
