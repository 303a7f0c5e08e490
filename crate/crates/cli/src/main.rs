//! `graphent`: spectra, energies, indices and generalized entropies of
//! graphs, plus the exhaustive verification, audit and scan suites.

mod input;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use graphent::entropy::{LogBase, ProbabilityVector};
use graphent::graph::{random_orientation, GraphInput, OrientedGraph};
use graphent::report::{measure_report, to_json};
use graphent::verifier::{
    audit_corpus, audit_vectors, run_verification, scan_extremal, Corpus, Member, ScanFamily,
    VerificationConfig,
};
use graphent::MatrixKind;
use input::{family_graph, read_graphs, InputFormat};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "graphent", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads for corpus runs and scans (default: all cores).
    #[arg(long, global = true, env = "GRAPHENT_WORKERS")]
    workers: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Orient {
    /// Every edge from its smaller to its larger endpoint.
    Canonical,
    /// A coin flip per edge, driven by --seed.
    Random,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Indices, spectra, energies and entropies of one graph.
    Compute(ComputeArgs),
    /// Check the entropy identities, trace identities and bounds over a corpus.
    Verify(VerifyArgs),
    /// Audit the inequalities between I1, I2 and I3.
    Audit(AuditArgs),
    /// Find the extremal members of a family for the first entropy of a matrix.
    Scan(ScanArgs),
}

#[derive(Args, Debug)]
struct GraphSource {
    /// Graph file: edge list, arc list (.arcs) or graph6 (.g6).
    #[arg(long)]
    input: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    input_format: InputFormat,

    /// A named family instead of a file, e.g. star:5 or cycle:6.
    #[arg(long, conflicts_with = "input")]
    family: Option<String>,
}

impl GraphSource {
    fn label(&self) -> Option<String> {
        self.input
            .as_ref()
            .map(|p| p.display().to_string())
            .or_else(|| self.family.clone())
    }

    fn load(&self) -> Result<Option<Vec<Member>>> {
        match (&self.input, &self.family) {
            (Some(path), _) => Ok(Some(read_graphs(path, self.input_format)?)),
            (None, Some(spec)) => Ok(Some(vec![family_graph(spec)?])),
            (None, None) => Ok(None),
        }
    }
}

#[derive(Args, Debug)]
struct EntropyArgs {
    /// Orders of the second and third entropies.
    #[arg(long, value_delimiter = ',', default_values_t = [0.5, 2.0, 3.0])]
    alpha: Vec<f64>,

    /// Logarithm base: a number, or "e".
    #[arg(long, default_value_t = LogBase::TWO)]
    log_base: LogBase,

    /// Seed for random orientations and random graphs.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    source: GraphSource,

    /// Matrix kinds (all ten when omitted), e.g. q,norm-l,general-randic:0.5.
    #[arg(long, value_delimiter = ',')]
    matrix: Vec<MatrixKind>,

    /// Orientation for skew kinds when the input is not an arc list.
    #[arg(long, value_enum, default_value_t = Orient::Canonical)]
    orient: Orient,

    #[command(flatten)]
    entropy: EntropyArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// all:<n>, trees:<n>, gnp:<n>,<p>,<count> or gnp:<min>-<max>,<p>,<count>.
    #[arg(long, conflicts_with_all = ["input", "family"])]
    corpus: Option<Corpus>,

    #[command(flatten)]
    source: GraphSource,

    /// Exponents of the general Randić matrix.
    #[arg(long, value_delimiter = ',', default_values_t = [-1.0, -0.5, 1.0])]
    beta: Vec<f64>,

    /// Suites to run.
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Suite::Equalities, Suite::Traces, Suite::Bounds])]
    suite: Vec<Suite>,

    /// List every claim, not only failures.
    #[arg(long)]
    all_claims: bool,

    #[command(flatten)]
    entropy: EntropyArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Equalities,
    Traces,
    Bounds,
}

#[derive(Args, Debug)]
struct AuditArgs {
    /// An explicit probability vector, e.g. 0.9,0.1. Repeatable.
    #[arg(long = "p")]
    p: Vec<String>,

    /// Audit the spectral distributions of every graph in all:<n>.
    #[arg(long, conflicts_with = "p")]
    corpus: Option<Corpus>,

    /// Orders at which every inequality is evaluated.
    #[arg(long, value_delimiter = ',', default_values_t = [0.5, 1.5, 2.0, 3.0])]
    alpha: Vec<f64>,

    /// Logarithm base: a number, or "e".
    #[arg(long, default_value_t = LogBase::TWO)]
    log_base: LogBase,
}

#[derive(Args, Debug)]
struct ScanArgs {
    /// trees, oriented-trees or all-graphs.
    #[arg(long, value_parser = parse_scan_family, default_value = "trees")]
    family: ScanFamily,

    /// Number of vertices: 1 to 9 for trees, 1 to 7 for all graphs.
    #[arg(long)]
    order: usize,

    #[arg(long, default_value = "incidence")]
    matrix: MatrixKind,

    /// Seed for the orientations of oriented trees.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_scan_family(s: &str) -> Result<ScanFamily, String> {
    s.parse().map_err(|e: graphent::Error| e.to_string())
}

/// Result of a command that ran to completion.
enum Outcome {
    Ok,
    ClaimsFailed(u64),
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::ClaimsFailed(n)) => {
            log::error!("{n} claim evaluations failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers {
        if w == 0 {
            bail!("--workers must be at least 1");
        }
        pool = pool.num_threads(w);
    }
    let pool = pool.build().context("cannot start worker pool")?;
    pool.install(|| match &cli.command {
        Command::Compute(a) => compute(cli, a),
        Command::Verify(a) => verify(cli, a),
        Command::Audit(a) => audit(cli, a),
        Command::Scan(a) => scan(cli, a),
    })
}

fn emit(cli: &Cli, json: impl FnOnce() -> String, csv: impl FnOnce() -> String) -> Result<()> {
    let text = match cli.format {
        Format::Json => json(),
        Format::Csv => csv(),
    };
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn compute(cli: &Cli, a: &ComputeArgs) -> Result<Outcome> {
    let Some(mut graphs) = a.source.load()? else {
        bail!("compute needs --input or --family");
    };
    if graphs.len() != 1 {
        bail!("compute takes one graph, the input holds {}", graphs.len());
    }
    let kinds: Vec<MatrixKind> = if a.matrix.is_empty() {
        MatrixKind::ALL.to_vec()
    } else {
        a.matrix.clone()
    };
    let mut member = graphs.remove(0);
    if kinds.iter().any(|k| k.needs_orientation()) {
        if let Member::Plain(g) = &member {
            member = Member::Oriented(match a.orient {
                Orient::Canonical => OrientedGraph::canonical(g.clone()),
                Orient::Random => random_orientation(g, a.entropy.seed),
            });
        }
    }
    let report = measure_report(&member, &kinds, &a.entropy.alpha, a.entropy.log_base)?;
    if !a.matrix.is_empty() {
        if let Some(k) = report.unavailable.first() {
            bail!("{}: {}", k.matrix, k.error);
        }
    }
    for k in &report.unavailable {
        log::warn!(
            "{} unavailable for {}: {}",
            k.matrix,
            member.graph(),
            k.error
        );
    }
    emit(cli, || to_json(&report), || report.to_csv())?;
    Ok(Outcome::Ok)
}

fn verify(cli: &Cli, a: &VerifyArgs) -> Result<Outcome> {
    let corpus = match (&a.corpus, a.source.load()?) {
        (Some(c), _) => c.clone(),
        (None, Some(members)) => Corpus::Explicit {
            label: a.source.label().unwrap_or_default(),
            members,
        },
        (None, None) => bail!("verify needs --corpus, --input or --family"),
    };
    let cfg = VerificationConfig {
        alphas: a.entropy.alpha.clone(),
        betas: a.beta.clone(),
        seed: a.entropy.seed,
        log_base: a.entropy.log_base,
        equalities: a.suite.contains(&Suite::Equalities),
        traces: a.suite.contains(&Suite::Traces),
        bounds: a.suite.contains(&Suite::Bounds),
        include_passing: a.all_claims,
    };
    let report = run_verification(&corpus, &cfg)?;
    log::info!(
        "{} evaluations: {} pass, {} equality-attained, {} not applicable, {} fail ({:.2?})",
        report.summary.evaluations,
        report.summary.totals.pass,
        report.summary.totals.equality_attained,
        report.summary.totals.not_applicable,
        report.summary.totals.fail,
        report.runtime
    );
    emit(cli, || to_json(&report), || report.to_csv())?;
    Ok(match report.failures() {
        0 => Outcome::Ok,
        n => Outcome::ClaimsFailed(n),
    })
}

fn parse_vector(text: &str, base: LogBase) -> Result<ProbabilityVector> {
    let p = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .with_context(|| format!("bad probability {t:?} in {text:?}"))
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(ProbabilityVector::new(p, base)?)
}

fn audit(cli: &Cli, a: &AuditArgs) -> Result<Outcome> {
    let report = match &a.corpus {
        Some(Corpus::All { max_order }) => audit_corpus(*max_order, &a.alpha, a.log_base)?,
        Some(other) => bail!("audit supports all:<n> corpora only, not {other}"),
        None => {
            if a.p.is_empty() {
                bail!("audit needs --p or --corpus");
            }
            let vectors =
                a.p.iter()
                    .map(|t| parse_vector(t, a.log_base))
                    .collect::<Result<Vec<_>>>()?;
            audit_vectors(&vectors, &a.alpha, a.log_base)?
        }
    };
    log::info!(
        "{} vectors audited, {} violations",
        report.vectors,
        report.violations()
    );
    emit(cli, || to_json(&report), || report.to_csv())?;
    Ok(Outcome::Ok)
}

fn scan(cli: &Cli, a: &ScanArgs) -> Result<Outcome> {
    let report = scan_extremal(a.family, a.order, a.matrix, a.seed)?;
    log::info!(
        "{} members, min {} ({} witnesses), max {} ({} witnesses)",
        report.members,
        report.min.value,
        report.min.witnesses.len(),
        report.max.value,
        report.max.witnesses.len()
    );
    emit(cli, || to_json(&report), || report.to_csv())?;
    Ok(Outcome::Ok)
}
