//! The `graphcurve` command line.
//!
//! Exit status: 0 success, 1 computation failure, 2 invalid input,
//! 3 certificate failure or golden mismatch.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use graphcurve_algebra::text::format_generators;
use graphcurve_algebra::{AlgebraError, BettiDiagram, MonomialOrder, PrimeField, Ring, DEFAULT_PRIME};
use serde::Serialize;
use serde_json::json;

use crate::error::Error;
use crate::golden::{compare_golden, Golden, GoldenReport};
use crate::graph::{cycle, path, random_valid, subdivided_k4, Graph};
use crate::homology::{analyze, Analysis, Guardrails};
use crate::idealgen::{certify, Certificate};
use crate::labeling::{label_edges, EdgeKey, Labeling};
use crate::secant::secant_ideal;
use crate::survey::{survey_all, SurveyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CHECK: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "graphcurve", version, about = "Graph curves: embeddings, ideals, Betti diagrams, secants")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the graph assumptions and report invariants.
    Validate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Label the edges and print the line of each vertex.
    Embed(Common),
    /// Curve ideal generators and the generation certificate.
    Ideal {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Source::Combinatorial)]
        source: Source,
    },
    /// Betti diagram of the curve.
    Betti(Common),
    /// Secant variety: components, ideal and Betti diagram.
    Secant {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Run the full pipeline over a family of graphs, one JSON record per line.
    Survey(SurveyArgs),
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    graph: PathBuf,
    /// Labeling document; the default labeling is used otherwise.
    #[arg(long)]
    labeling: Option<PathBuf>,
    #[arg(long)]
    allow_violations: bool,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    field: u32,
    #[arg(long, value_enum, default_value_t = Order::Grevlex)]
    order: Order,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long)]
    golden: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SurveyArgs {
    #[arg(long, value_enum)]
    family: FamilyName,
    /// Number of vertices (cycle length for `cycle`).
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, default_value_t = 0)]
    g: usize,
    /// Subdivisions per edge for `subdivided_k4`.
    #[arg(long, default_value_t = 1)]
    s: usize,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    field: u32,
    #[arg(long)]
    allow_violations: bool,
    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    Grevlex,
    /// Eliminates the last variable.
    Elim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Source {
    Combinatorial,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyName {
    Cycle,
    Path,
    #[value(name = "subdivided_k4", alias = "subdivided-k4")]
    SubdividedK4,
    #[value(name = "random_valid", alias = "random-valid")]
    RandomValid,
}

/// A failure with its exit status.
struct Failure {
    code: i32,
    kind: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let (code, kind) = match &e {
            Error::Graph(_) => (EXIT_INPUT, "graph"),
            Error::Labeling(_) => (EXIT_INPUT, "labeling"),
            Error::Algebra(AlgebraError::Parse { .. }) => (EXIT_INPUT, "parse"),
            Error::Algebra(AlgebraError::InvalidPrime(_)) => (EXIT_INPUT, "field"),
            Error::Algebra(_) => (EXIT_COMPUTATION, "algebra"),
            Error::Io(_) => (EXIT_INPUT, "io"),
            Error::Invalid(_) => (EXIT_INPUT, "argument"),
            Error::Golden(_) => (EXIT_INPUT, "golden"),
        };
        Failure { code, kind, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_COMPUTATION, kind: "io", message: e.to_string() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            report(err, &Failure { code: EXIT_INPUT, kind: "usage", message: e.to_string() });
            return EXIT_INPUT;
        }
    };
    let result = match cli.command {
        Command::Validate { graph, format } => validate(&graph, format, out),
        Command::Embed(c) => embed(&c, out),
        Command::Ideal { common, source } => ideal(&common, source, out),
        Command::Betti(c) => betti(&c, out),
        Command::Secant { common, k } => secant(&common, k, out),
        Command::Survey(s) => survey(&s, out, err),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            report(err, &f);
            f.code
        }
    }
}

fn report(err: &mut dyn Write, f: &Failure) {
    let doc = json!({"error": {"kind": f.kind, "message": f.message.trim_end(), "exit": f.code}});
    let _ = writeln!(err, "{doc}");
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())).into())
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(Graph::from_json(&read(path)?).map_err(Error::from)?)
}

fn load_labeling(c: &Common, g: &Graph) -> Result<Labeling, Failure> {
    let l = match &c.labeling {
        Some(p) => Labeling::from_json(g, &read(p)?),
        None => label_edges(g, c.allow_violations),
    };
    Ok(l.map_err(Error::from)?)
}

fn make_ring(nvars: usize, field: u32, order: Order) -> Result<Ring, Failure> {
    let f = PrimeField::new(field).map_err(Error::from)?;
    let order = match order {
        Order::Grevlex => MonomialOrder::Grevlex,
        Order::Elim => MonomialOrder::Elimination { keep: nvars - 1 },
    };
    Ok(Ring::new(nvars, f, order).map_err(Error::from)?)
}

fn load_golden(c: &Common) -> Result<Option<Golden>, Failure> {
    c.golden.as_ref().map(|p| Ok(Golden::from_json(&read(p)?)?)).transpose()
}

fn json_line(out: &mut dyn Write, v: &impl Serialize) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string(v).expect("serializable"))?;
    Ok(())
}

fn golden_text(out: &mut dyn Write, rep: &GoldenReport) -> Result<(), Failure> {
    if rep.matches() {
        writeln!(out, "golden: match ({})", rep.compared.join(", "))?;
    } else {
        writeln!(out, "golden: {} mismatches", rep.mismatches.len())?;
        for m in &rep.mismatches {
            writeln!(out, "  {m}")?;
        }
    }
    Ok(())
}

fn validate(path: &Path, format: Format, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = load_graph(path)?;
    let rep = g.validate();
    let inv = g.invariants().ok();
    match format {
        Format::Json => json_line(out, &json!({"validation": rep, "invariants": inv, "admissible": rep.is_admissible()}))?,
        Format::Text => {
            let names = ["connected", "simple", "strictly subtrivalent", "trivalent separation >= 3", "triangle-free"];
            for (i, (n, ok)) in names.iter().zip(rep.flags()).enumerate() {
                writeln!(out, "({}) {n}: {}", i + 1, if ok { "ok" } else { "FAIL" })?;
            }
            if let Some(inv) = &inv {
                let girth = inv.girth.map_or("inf".into(), |m| m.to_string());
                writeln!(
                    out,
                    "d = {}, m = {}, g = {}, girth = {girth} ({} cycles)",
                    inv.vertices, inv.edges, inv.genus, inv.girth_cycle_count
                )?;
            }
        }
    }
    if rep.is_admissible() {
        Ok(EXIT_OK)
    } else {
        Err(Failure { code: EXIT_INPUT, kind: "assumptions", message: rep.violations.join("; ") })
    }
}

fn embed(c: &Common, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = load_graph(&c.graph)?;
    let l = load_labeling(c, &g)?;
    match c.format {
        Format::Json => {
            let lines: Vec<_> = l.line_ideals().iter().map(|li| json!({"vertex": li.vertex, "forms": li.to_string()})).collect();
            let labeling: serde_json::Value = serde_json::from_str(&l.to_json()).expect("labeling json");
            json_line(out, &json!({"ambient_dim": l.ambient_dim(), "labeling": labeling, "line_ideals": lines}))?;
        }
        Format::Text => {
            writeln!(out, "# labels in P^{}", l.ambient_dim())?;
            for (k, lab) in l.labels() {
                match k {
                    EdgeKey::Edge(u, v) => writeln!(out, "{u}-{v}: {lab}")?,
                    EdgeKey::Loop(v) => writeln!(out, "loop {v}: {lab}")?,
                }
            }
            writeln!(out, "# line ideals")?;
            write!(out, "{}", l.format_line_ideals())?;
        }
    }
    Ok(EXIT_OK)
}

fn ideal(c: &Common, source: Source, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = load_graph(&c.graph)?;
    let l = load_labeling(c, &g)?;
    let ring = make_ring(l.nvars(), c.field, c.order)?;
    let cert = certify(&l, &ring)?;
    let comb: Vec<_> = cert.generators.iter().map(|q| q.to_poly(&ring)).collect();
    let oracle = cert.oracle.minimal_generators().map_err(Error::from)?;

    let mut actual = Golden::default().with_certificate(&cert.certificate);
    actual = match source {
        Source::Oracle => actual.with_generators(&ring, &oracle),
        _ => actual.with_generators(&ring, &comb),
    };
    let golden = load_golden(c)?
        .map(|want| compare_golden(&actual, &Golden { betti: None, ..want }, &ring))
        .transpose()?;

    match c.format {
        Format::Json => {
            let mut doc = json!({"certificate": cert.certificate});
            if source != Source::Oracle {
                doc["generators"] = json!(actual_strings(&ring, &comb));
            }
            if source != Source::Combinatorial {
                doc["oracle_generators"] = json!(actual_strings(&ring, &oracle));
            }
            if let Some(r) = &golden {
                doc["golden"] = json!(r);
            }
            json_line(out, &doc)?;
        }
        Format::Text => {
            if source != Source::Oracle {
                writeln!(out, "# products of linear forms ({})", comb.len())?;
                write!(out, "{}", format_generators(&ring, &comb))?;
            }
            if source != Source::Combinatorial {
                writeln!(out, "# minimal generators of the intersection of lines ({})", oracle.len())?;
                write!(out, "{}", format_generators(&ring, &oracle))?;
            }
            write_certificate(out, &cert.certificate)?;
            if let Some(r) = &golden {
                golden_text(out, r)?;
            }
        }
    }
    if !cert.certificate.passed() || golden.is_some_and(|r| !r.matches()) {
        return Ok(EXIT_CHECK);
    }
    Ok(EXIT_OK)
}

fn actual_strings(ring: &Ring, gens: &[graphcurve_algebra::Polynomial]) -> Vec<String> {
    gens.iter().map(|g| graphcurve_algebra::format_polynomial(ring, g)).collect()
}

fn write_certificate(out: &mut dyn Write, c: &Certificate) -> Result<(), Failure> {
    writeln!(out, "# certificate")?;
    for ch in &c.checks {
        let status = serde_json::to_value(ch.status).expect("status");
        writeln!(out, "{}: {} ({})", ch.check, status.as_str().unwrap_or("?"), ch.details)?;
    }
    Ok(())
}

fn analysis_json(a: &Analysis) -> serde_json::Value {
    let mut v = serde_json::to_value(a.diagram.to_json(a.summary.as_ref())).expect("betti json");
    v["codim"] = json!(a.summary.as_ref().map(|s| s.codimension));
    v["hilbert_polynomial"] = json!(a.hilbert.hilbert_polynomial_string());
    v["degree"] = json!(a.hilbert.degree());
    v["euler_ok"] = json!(a.euler_ok);
    v
}

fn write_analysis(out: &mut dyn Write, a: &Analysis) -> Result<(), Failure> {
    write!(out, "{}", a.diagram)?;
    if let Some(s) = &a.summary {
        writeln!(out, "regularity: {} (of the ideal: {})", s.regularity, s.regularity + 1)?;
        writeln!(out, "projective dimension: {}", s.projective_dimension)?;
        writeln!(out, "codimension: {}", s.codimension)?;
        writeln!(out, "arithmetically Cohen-Macaulay: {}", if s.is_acm { "yes" } else { "no" })?;
    }
    writeln!(out, "Hilbert polynomial: {}", a.hilbert.hilbert_polynomial_string())?;
    Ok(())
}

fn diagram_outcome(a: &Analysis, golden: Option<&GoldenReport>) -> i32 {
    if golden.is_some_and(|r| !r.matches()) {
        EXIT_CHECK
    } else if !a.is_complete() || !a.euler_ok {
        EXIT_COMPUTATION
    } else {
        EXIT_OK
    }
}

fn betti(c: &Common, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = load_graph(&c.graph)?;
    let l = load_labeling(c, &g)?;
    let ring = make_ring(l.nvars(), c.field, c.order)?;
    let ideal = crate::idealgen::intersection_ideal(&l, &ring)?;
    let a = analyze(&ideal, Guardrails::from_env()?)?;
    let golden = match load_golden(c)? {
        Some(want) => {
            let want = Golden { betti: want.betti, ..Golden::default() };
            Some(compare_golden(&Golden::default().with_betti(&a.diagram), &want, &ring)?)
        }
        None => None,
    };
    match c.format {
        Format::Json => {
            let mut v = analysis_json(&a);
            if let Some(r) = &golden {
                v["golden"] = json!(r);
            }
            json_line(out, &v)?;
        }
        Format::Text => {
            write_analysis(out, &a)?;
            if let Some(r) = &golden {
                golden_text(out, r)?;
            }
        }
    }
    Ok(diagram_outcome(&a, golden.as_ref()))
}

fn secant(c: &Common, k: usize, out: &mut dyn Write) -> Result<i32, Failure> {
    let g = load_graph(&c.graph)?;
    let l = load_labeling(c, &g)?;
    let ring = make_ring(l.nvars(), c.field, c.order)?;
    let spec = secant_ideal(&l, &ring, k)?;
    let gens = spec.ideal.minimal_generators().map_err(Error::from)?;
    let a = match spec.ideal.generators().is_empty() {
        true => None,
        false => Some(analyze(&spec.ideal, Guardrails::from_env()?)?),
    };
    let golden = match load_golden(c)? {
        Some(want) => {
            let mut actual = Golden::default().with_generators(&ring, &gens);
            if let Some(a) = &a {
                actual = actual.with_betti(&a.diagram);
            }
            let want = Golden { certificate: None, ..want };
            Some(compare_golden(&actual, &want, &ring)?)
        }
        None => None,
    };
    match c.format {
        Format::Json => {
            let mut v = json!({
                "k": k,
                "status": spec.status,
                "components": spec.component_report(),
                "generators": actual_strings(&ring, &gens),
                "betti": a.as_ref().map(analysis_json),
            });
            if let Some(r) = &golden {
                v["golden"] = json!(r);
            }
            json_line(out, &v)?;
        }
        Format::Text => {
            writeln!(out, "# secant level {k}: {}", spec.status.describe())?;
            writeln!(out, "# {} components from {} candidate spans", spec.components.len(), spec.candidates)?;
            for comp in spec.component_report() {
                writeln!(out, "{:?} span_dim {}", comp.vertices, comp.span_dim)?;
            }
            writeln!(out, "# minimal generators ({})", gens.len())?;
            write!(out, "{}", format_generators(&ring, &gens))?;
            if let Some(a) = &a {
                writeln!(out, "# Betti diagram")?;
                write_analysis(out, a)?;
            }
            if let Some(r) = &golden {
                golden_text(out, r)?;
            }
        }
    }
    Ok(match &a {
        Some(a) => diagram_outcome(a, golden.as_ref()),
        None if golden.is_some_and(|r| !r.matches()) => EXIT_CHECK,
        None => EXIT_OK,
    })
}

fn family(s: &SurveyArgs) -> Result<Vec<Graph>, Failure> {
    let need_d = || s.d.ok_or_else(|| Failure::from(Error::Invalid("--d is required for this family".into())));
    let graphs = match s.family {
        FamilyName::Cycle => vec![cycle(need_d()?)],
        FamilyName::Path => vec![path(need_d()?)],
        FamilyName::SubdividedK4 => vec![subdivided_k4(s.s)],
        FamilyName::RandomValid => {
            let d = need_d()?;
            (0..s.count as u64).map(|i| random_valid(d, s.g, s.seed.wrapping_add(i))).collect()
        }
    };
    Ok(graphs.into_iter().collect::<Result<Vec<_>, _>>().map_err(Error::from)?)
}

fn survey(s: &SurveyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, Failure> {
    let graphs = family(s)?;
    let opts = SurveyOptions {
        field: s.field,
        guardrails: Guardrails::from_env()?,
        timings: s.timings,
        allow_violations: s.allow_violations || s.family == FamilyName::SubdividedK4,
    };
    let jobs = s.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let mut code = EXIT_OK;
    for r in survey_all(&graphs, &opts, jobs)? {
        match r {
            Ok(rec) => {
                if !rec.certificate.passed() {
                    code = code.max(EXIT_CHECK);
                }
                match s.format {
                    Format::Json => json_line(out, &rec)?,
                    Format::Text => {
                        let b = BettiDiagram::from_triples(&rec.curve.betti);
                        writeln!(
                            out,
                            "{} d={} g={} girth={} certificate={} curve totals={:?} acm={:?}",
                            &rec.hash[..12],
                            rec.invariants.vertices,
                            rec.invariants.genus,
                            rec.invariants.girth.map_or("inf".into(), |m| m.to_string()),
                            if rec.certificate.passed() { "PASS" } else { "FAIL" },
                            b.totals(),
                            rec.curve.acm,
                        )?;
                    }
                }
            }
            Err(e) => {
                let f = Failure::from(e);
                report(err, &f);
                code = code.max(EXIT_COMPUTATION);
            }
        }
    }
    Ok(code)
}
