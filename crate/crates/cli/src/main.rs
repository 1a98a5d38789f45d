use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use momentlab::identities::{hankel_minor_det, hankel_minor_gv, gv_model, HankelMinorSpec};
use momentlab::jacobi::{jacobi_from_moments, moments_from_jacobi, JacobiParams};
use momentlab::paths::{enumerate_paths, Discipline};
use momentlab::poly::MultiPoly;
use momentlab::rational::Rational;
use momentlab::transforms::{
    cumulants_from_moments, moments_from_cumulants, CumulantKind, CumulantSeq, MomentSeq,
};
use momentlab::{catalog, Error};

#[derive(Parser)]
#[command(
    name = "momentlab",
    version,
    about = "Exact moment/cumulant transforms, lattice-path sums, and Jacobi parameters"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate lattice paths of a given length
    Paths(PathsArgs),
    /// Convert a sequence document between moment and cumulant kinds
    Transform(TransformArgs),
    /// Convert between moments and Jacobi parameters
    Jacobi(JacobiArgs),
    /// Evaluate a Hankel minor of the symbolic model
    Minor(MinorArgs),
    /// Run the cross-module identity suite
    Verify(VerifyArgs),
    /// Emit a built-in named moment sequence
    Catalog(CatalogArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum DisciplineArg {
    Motzkin,
    Lukasiewicz,
}

impl From<DisciplineArg> for Discipline {
    fn from(d: DisciplineArg) -> Discipline {
        match d {
            DisciplineArg::Motzkin => Discipline::Motzkin,
            DisciplineArg::Lukasiewicz => Discipline::Lukasiewicz,
        }
    }
}

#[derive(Args)]
struct PathsArgs {
    /// Path length (number of steps)
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "motzkin")]
    discipline: DisciplineArg,
    /// Only paths touching the axis at the endpoints
    #[arg(long)]
    irreducible: bool,
    /// Print only the number of paths
    #[arg(long)]
    count: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Moments,
    Free,
    Classical,
    Boolean,
}

#[derive(Args)]
struct TransformArgs {
    /// Target kind
    #[arg(long, value_enum)]
    to: KindArg,
    /// Render values as decimal approximations (display only)
    #[arg(long)]
    float: bool,
}

#[derive(Args)]
struct JacobiArgs {
    #[command(subcommand)]
    direction: JacobiDirection,
}

#[derive(Subcommand)]
enum JacobiDirection {
    /// Recover (a_n, lambda_n) from a moments document
    FromMoments,
    /// Expand a Jacobi document into moments up to --order
    ToMoments {
        #[arg(long)]
        order: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Motzkin,
    LukasFree,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Det,
    Gv,
}

#[derive(Args)]
struct MinorArgs {
    /// Row indices, e.g. 0,1,2
    #[arg(long)]
    rows: String,
    /// Column indices, e.g. 1,2,3
    #[arg(long)]
    cols: String,
    #[arg(long, value_enum, default_value = "det")]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "motzkin")]
    scheme: SchemeArg,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    depth: usize,
    /// Restrict to one identity class
    #[arg(long)]
    identity: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogName {
    Semicircle,
    GaussianHermite,
    PointMass,
    FreePoisson,
}

#[derive(Args)]
struct CatalogArgs {
    name: CatalogName,
    #[arg(long)]
    order: usize,
    /// Parameter for point-mass and free-poisson
    #[arg(long, default_value = "1")]
    t: String,
    #[arg(long)]
    float: bool,
}

/// The JSON interchange document. Moments are indexed from 0 (values[0]
/// is mu_0 = 1); cumulants from 1 (values[0] is the first cumulant).
#[derive(Serialize, Deserialize)]
struct SequenceDocument {
    v: u32,
    kind: String,
    order: usize,
    symbolic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    lambda: Option<Vec<String>>,
}

enum Payload {
    Moments(MomentSeq),
    Cumulants(CumulantSeq),
    Jacobi(JacobiParams),
}

fn parse_polys(values: &[String]) -> Result<Vec<MultiPoly>, Error> {
    values.iter().map(|s| s.parse()).collect()
}

fn render_polys(polys: &[MultiPoly], float: bool) -> Vec<String> {
    polys
        .iter()
        .map(|p| match (float, p.as_rational()) {
            (true, Some(r)) => format!("{}", r.to_f64()),
            _ => p.to_string(),
        })
        .collect()
}

fn is_symbolic(polys: &[MultiPoly]) -> bool {
    polys.iter().any(|p| p.as_rational().is_none())
}

impl SequenceDocument {
    fn from_payload(payload: &Payload, float: bool) -> SequenceDocument {
        match payload {
            Payload::Moments(m) => SequenceDocument {
                v: 1,
                kind: "moments".into(),
                order: m.order(),
                symbolic: is_symbolic(m.values()),
                values: Some(render_polys(m.values(), float)),
                a: None,
                lambda: None,
            },
            Payload::Cumulants(c) => SequenceDocument {
                v: 1,
                kind: c.kind.name().into(),
                order: c.order(),
                symbolic: is_symbolic(c.values()),
                values: Some(render_polys(c.values(), float)),
                a: None,
                lambda: None,
            },
            Payload::Jacobi(j) => SequenceDocument {
                v: 1,
                kind: "jacobi".into(),
                order: j.lam().len(),
                symbolic: is_symbolic(j.a()) || is_symbolic(j.lam()),
                values: None,
                a: Some(render_polys(j.a(), false)),
                lambda: Some(render_polys(j.lam(), false)),
            },
        }
    }

    fn into_payload(self) -> Result<Payload, Error> {
        match self.kind.as_str() {
            "moments" => {
                let values = self.values.ok_or_else(|| missing("values"))?;
                Ok(Payload::Moments(MomentSeq::new(parse_polys(&values)?)?))
            }
            "free" | "classical" | "boolean" => {
                let kind = match self.kind.as_str() {
                    "free" => CumulantKind::Free,
                    "classical" => CumulantKind::Classical,
                    _ => CumulantKind::Boolean,
                };
                let values = self.values.ok_or_else(|| missing("values"))?;
                Ok(Payload::Cumulants(CumulantSeq::new(kind, parse_polys(&values)?)))
            }
            "jacobi" => {
                let a = self.a.ok_or_else(|| missing("a"))?;
                let lambda = self.lambda.ok_or_else(|| missing("lambda"))?;
                Ok(Payload::Jacobi(JacobiParams::new(
                    parse_polys(&a)?,
                    parse_polys(&lambda)?,
                )))
            }
            other => Err(Error::Parse(format!("unknown document kind {other:?}"))),
        }
    }
}

fn missing(field: &str) -> Error {
    Error::Parse(format!("document is missing the {field:?} field"))
}

fn read_document() -> Result<SequenceDocument, Error> {
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
    let doc: SequenceDocument =
        serde_json::from_str(&buf).map_err(|e| Error::Parse(format!("invalid document: {e}")))?;
    if doc.v != 1 {
        return Err(Error::Parse(format!("unsupported document version {}", doc.v)));
    }
    Ok(doc)
}

fn print_document(doc: &SequenceDocument) {
    println!("{}", serde_json::to_string(doc).expect("document serializes"));
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NonInvertibleConstantTerm => "NonInvertibleConstantTerm",
        Error::CompositionConstantTerm => "CompositionConstantTerm",
        Error::NotReversible => "NotReversible",
        Error::BadConstantTerm => "BadConstantTerm",
        Error::SchemeMismatch { .. } => "SchemeMismatch",
        Error::IndexBeyondPrefix { .. } => "IndexBeyondPrefix",
        Error::SingularHankel(_) => "SingularHankel",
        Error::InsufficientMoments { .. } => "InsufficientMoments",
        Error::InsufficientDepth { .. } => "InsufficientDepth",
        Error::ExplosionGuard { .. } => "ExplosionGuard",
        Error::InexactDivision => "InexactDivision",
        Error::BadOrder(_) => "BadOrder",
        Error::Parse(_) => "Parse",
    }
}

fn to_moments(payload: Payload) -> Result<MomentSeq, Error> {
    match payload {
        Payload::Moments(m) => Ok(m),
        Payload::Cumulants(c) => Ok(moments_from_cumulants(&c)),
        Payload::Jacobi(j) => {
            let order = 2 * j.lam().len().min(j.a().len().saturating_sub(1)) + 1;
            moments_from_jacobi(&j, order)
        }
    }
}

fn cmd_paths(args: &PathsArgs) {
    let discipline = args.discipline.into();
    if args.count {
        println!("{}", enumerate_paths(args.n, discipline, args.irreducible).count());
        return;
    }
    for path in enumerate_paths(args.n, discipline, args.irreducible) {
        println!("{path}");
    }
}

fn cmd_transform(args: &TransformArgs) -> Result<(), Error> {
    let m = to_moments(read_document()?.into_payload()?)?;
    let out = match args.to {
        KindArg::Moments => Payload::Moments(m),
        KindArg::Free => Payload::Cumulants(cumulants_from_moments(CumulantKind::Free, &m)),
        KindArg::Classical => {
            Payload::Cumulants(cumulants_from_moments(CumulantKind::Classical, &m))
        }
        KindArg::Boolean => Payload::Cumulants(cumulants_from_moments(CumulantKind::Boolean, &m)),
    };
    print_document(&SequenceDocument::from_payload(&out, args.float));
    Ok(())
}

fn cmd_jacobi(args: &JacobiArgs) -> Result<(), Error> {
    match args.direction {
        JacobiDirection::FromMoments => {
            let doc = read_document()?;
            let m = match doc.into_payload()? {
                Payload::Moments(m) => m,
                _ => return Err(Error::Parse("jacobi from-moments expects a moments document".into())),
            };
            let j = jacobi_from_moments(&m)?;
            print_document(&SequenceDocument::from_payload(&Payload::Jacobi(j), false));
        }
        JacobiDirection::ToMoments { order } => {
            let doc = read_document()?;
            let j = match doc.into_payload()? {
                Payload::Jacobi(j) => j,
                _ => return Err(Error::Parse("jacobi to-moments expects a jacobi document".into())),
            };
            let m = moments_from_jacobi(&j, order)?;
            print_document(&SequenceDocument::from_payload(&Payload::Moments(m), false));
        }
    }
    Ok(())
}

fn parse_indices(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad index {p:?}")))
        })
        .collect()
}

#[derive(Serialize)]
struct MinorOutput {
    v: u32,
    rows: Vec<usize>,
    cols: Vec<usize>,
    scheme: &'static str,
    method: &'static str,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    configurations: Option<usize>,
}

fn max_configs_from_env() -> Result<u64, Error> {
    match std::env::var("MOMENTLAB_MAX_CONFIGS") {
        Ok(s) => s
            .parse()
            .map_err(|_| Error::Parse(format!("bad MOMENTLAB_MAX_CONFIGS value {s:?}"))),
        Err(_) => Ok(momentlab::DEFAULT_MAX_CONFIGS),
    }
}

fn cmd_minor(args: &MinorArgs) -> Result<(), Error> {
    let spec = HankelMinorSpec::new(parse_indices(&args.rows)?, parse_indices(&args.cols)?)?;
    let (discipline, scheme_name) = match args.scheme {
        SchemeArg::Motzkin => (Discipline::Motzkin, "motzkin"),
        SchemeArg::LukasFree => (Discipline::Lukasiewicz, "lukas-free"),
    };
    let (scheme, moments) = gv_model(discipline, spec.max_moment())?;
    let output = match args.method {
        MethodArg::Det => MinorOutput {
            v: 1,
            rows: spec.rows().to_vec(),
            cols: spec.cols().to_vec(),
            scheme: scheme_name,
            method: "det",
            value: hankel_minor_det(&moments, &spec)?.to_string(),
            configurations: None,
        },
        MethodArg::Gv => {
            let report = hankel_minor_gv(&scheme, &spec, max_configs_from_env()?)?;
            MinorOutput {
                v: 1,
                rows: spec.rows().to_vec(),
                cols: spec.cols().to_vec(),
                scheme: scheme_name,
                method: "gv",
                value: report.total.to_string(),
                configurations: Some(report.configurations.len()),
            }
        }
    };
    println!("{}", serde_json::to_string(&output).expect("output serializes"));
    Ok(())
}

fn cmd_verify(args: &VerifyArgs) -> Result<bool, Error> {
    let report = momentlab::verify_suite(args.depth);
    let known_groups = ["eq13", "gv", "boolean", "delta-product", "transforms", "jacobi"];
    if let Some(group) = &args.identity {
        if !known_groups.contains(&group.as_str()) {
            return Err(Error::Parse(format!(
                "unknown identity class {group:?}; expected one of {known_groups:?}"
            )));
        }
    }
    let mut all_passed = true;
    for entry in &report.entries {
        if let Some(group) = &args.identity {
            if entry.group != group {
                continue;
            }
        }
        let status = if entry.passed { "PASS" } else { "FAIL" };
        println!("{status} {}: {}", entry.name, entry.detail);
        all_passed &= entry.passed;
    }
    Ok(all_passed)
}

fn cmd_catalog(args: &CatalogArgs) -> Result<(), Error> {
    let t: Rational = args.t.parse()?;
    let m = match args.name {
        CatalogName::Semicircle => catalog::semicircle(args.order)?,
        CatalogName::GaussianHermite => catalog::gaussian_hermite(args.order)?,
        CatalogName::PointMass => catalog::point_mass(args.order, &t),
        CatalogName::FreePoisson => catalog::free_poisson(args.order, &t),
    };
    print_document(&SequenceDocument::from_payload(&Payload::Moments(m), args.float));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Paths(args) => {
            cmd_paths(args);
            Ok(true)
        }
        Command::Transform(args) => cmd_transform(args).map(|_| true),
        Command::Jacobi(args) => cmd_jacobi(args).map(|_| true),
        Command::Minor(args) => cmd_minor(args).map(|_| true),
        Command::Verify(args) => cmd_verify(args),
        Command::Catalog(args) => cmd_catalog(args).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            let err = serde_json::json!({
                "v": 1,
                "error": { "kind": error_kind(&e), "message": e.to_string() },
            });
            eprintln!("{err}");
            ExitCode::FAILURE
        }
    }
}
