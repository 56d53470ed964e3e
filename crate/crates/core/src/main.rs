use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use apolar_kit::apolarity::{
    apolar_ideal_piece, hilbert_function, is_apolar_scheme, macaulay_inverse, quotient_hilbert, GradedIdealPiece,
};
use apolar_kit::curvegen::{expected_ideal_dims, reconstruct_ideal, CurveSpec, CurveSpecJson};
use apolar_kit::exact::Polynomial;
use apolar_kit::numeric::{format_scalar, NumericConfig, DEFAULT_PRECISION, DEFAULT_TOLERANCE};
use apolar_kit::pipeline::{run_alpha, splits, trial_curve, verify_theorem_a, verify_theorem_b, AlphaReport};
use apolar_kit::planemodel::{higher_gonality_degree, nakai_certificate, tetragonal_numerology};
use apolar_kit::report::{DecompositionJson, DualPointJson, PolynomialJson};
use apolar_kit::scroll::{
    canonical_class, chow_product, divisor_degree, section_count, section_templates, DivisorClass, Scroll,
};
use apolar_kit::waring::{fermat_detect, rank_lower_bound};
use apolar_kit::{curvegen, Error, Result};

#[derive(Parser, Debug)]
#[command(
    name = "apolar-kit",
    version,
    about = "Apolar ideals, Waring decompositions and canonical curves"
)]
struct Cli {
    /// Working precision of the floating fallback, in bits.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision_bits: u32,
    #[arg(long, global = true, default_value_t = DEFAULT_TOLERANCE)]
    tolerance: f64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apolar ideal pieces and Hilbert function of a form.
    Apolar(ApolarArgs),
    /// Macaulay inverse of ideal pieces, or round trip of a form.
    Inverse(InputArgs),
    /// Fermat cubic detection.
    Fermat(FermatArgs),
    /// Intersection numbers on a rational normal scroll.
    Scroll(ScrollArgs),
    /// A random trigonal or tetragonal canonical curve.
    CurveGen(CurveArgs),
    /// The cubic F for two general hyperplanes, with its surface sections.
    Alpha(AlphaArgs),
    /// Trigonal curves give Fermat cubics.
    VerifyA(VerifyArgs),
    /// Tetragonal curves give short power sums.
    VerifyB(VerifyBArgs),
    /// Plane-model multiplicities and deg S for a tetragonal genus.
    Numerology(GArgs),
    /// Nakai–Moishezon enumeration on the plane blown up in four points.
    Nakai(NakaiArgs),
    /// Degree formulas for gonality n.
    GonalityN(GonalityArgs),
}

#[derive(Args, Debug)]
struct InputArgs {
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Args, Debug)]
struct ApolarArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Only this degree of the apolar ideal.
    #[arg(long)]
    k: Option<u32>,
}

#[derive(Args, Debug)]
struct FermatArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    seed: u64,
}

#[derive(Args, Debug)]
struct ScrollArgs {
    /// Scroll type, e.g. 1,1,2.
    #[arg(long = "type", value_delimiter = ',', allow_hyphen_values = true)]
    ty: Vec<u32>,
    /// A divisor class `h,f`; repeat for products.
    #[arg(long = "class", allow_hyphen_values = true)]
    classes: Vec<String>,
    #[arg(long, value_enum, default_value_t = ScrollOp::Degree)]
    op: ScrollOp,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug)]
enum ScrollOp {
    Degree,
    Chow,
    Canonical,
    Sections,
    Genus,
    Info,
}

#[derive(Args, Debug)]
struct CurveArgs {
    #[arg(long)]
    g: u32,
    #[arg(long, default_value_t = 3)]
    gonality: u32,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    split: Option<Vec<i64>>,
    #[arg(long)]
    seed: u64,
    /// Also reconstruct the degree 2 and 3 ideal pieces.
    #[arg(long)]
    ideal: bool,
}

#[derive(Args, Debug)]
struct AlphaArgs {
    #[arg(long)]
    g: Option<u32>,
    #[arg(long, default_value_t = 3)]
    gonality: u32,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    split: Option<Vec<i64>>,
    #[arg(long)]
    seed: u64,
    /// A curve written by `curve-gen` instead of `--g`.
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    g: u32,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long)]
    seed: u64,
}

#[derive(Args, Debug)]
struct VerifyBArgs {
    #[arg(long)]
    g: u32,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    split: Option<Vec<i64>>,
}

#[derive(Args, Debug)]
struct GArgs {
    #[arg(long, allow_hyphen_values = true)]
    g: i64,
}

#[derive(Args, Debug)]
struct NakaiArgs {
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    #[arg(long, default_value_t = 50)]
    a_max: i64,
}

#[derive(Args, Debug)]
struct GonalityArgs {
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
    #[arg(long, allow_hyphen_values = true)]
    k: i64,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    excess: i64,
}

/// `{"form": ..., "points": [...]}`
#[derive(Deserialize)]
struct FormInput {
    form: PolynomialJson,
    #[serde(default)]
    points: Option<Vec<DualPointJson>>,
}

#[derive(Deserialize)]
struct PieceInput {
    degree: u32,
    generators: Vec<PolynomialJson>,
}

/// Either a form to round-trip or explicit ideal pieces.
#[derive(Deserialize)]
struct InverseInput {
    #[serde(default)]
    form: Option<PolynomialJson>,
    #[serde(default)]
    nvars: Option<usize>,
    #[serde(default)]
    degree: Option<u32>,
    #[serde(default)]
    pieces: Option<Vec<PieceInput>>,
}

#[derive(Serialize)]
struct PieceJson {
    degree: u32,
    dim: usize,
    basis: Vec<PolynomialJson>,
}

impl PieceJson {
    fn new(p: &GradedIdealPiece) -> Self {
        PieceJson {
            degree: p.degree(),
            dim: p.dim(),
            basis: p.basis().iter().map(PolynomialJson::from).collect(),
        }
    }
}

/// A report and whether every assertion in it held.
struct Outcome {
    report: Value,
    passed: bool,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Outcome { report, passed: true }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &PathBuf) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn parse_split(v: &Option<Vec<i64>>) -> Result<Option<(i64, i64)>> {
    match v.as_deref() {
        None => Ok(None),
        Some([a, b]) => Ok(Some((*a, *b))),
        Some(other) => Err(Error::InvalidInput(format!("--split needs two values, got {other:?}"))),
    }
}

fn parse_class(s: &str) -> Result<DivisorClass> {
    let parts: Vec<&str> = s.split(',').collect();
    let [h, f] = parts.as_slice() else {
        return Err(Error::InvalidInput(format!("class {s:?} is not `h,f`")));
    };
    let num = |x: &str| {
        x.trim()
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad integer {x:?}")))
    };
    Ok(DivisorClass::new(num(h)?, num(f)?))
}

fn config_json(cfg: &NumericConfig, seed: Option<u64>) -> Value {
    let mut v = json!({ "precision_bits": cfg.precision, "tolerance": format_scalar(cfg.tolerance) });
    if let Some(s) = seed {
        v["seed"] = json!(s);
    }
    v
}

fn apolar(args: &ApolarArgs, cfg: &NumericConfig) -> Result<Outcome> {
    let input: FormInput = read_json(&args.input)?;
    let f = Polynomial::try_from(&input.form)?;
    let profile = hilbert_function(&f)?;
    let degrees: Vec<u32> = match args.k {
        Some(k) => vec![k],
        None => (1..=f.degree()).collect(),
    };
    let pieces = degrees
        .iter()
        .map(|&k| apolar_ideal_piece(&f, k).map(|p| PieceJson::new(&p)))
        .collect::<Result<Vec<_>>>()?;
    let mut report = json!({
        "claim": "F-perp is a Gorenstein ideal: its quotient has a symmetric Hilbert function and a one-dimensional socle",
        "config": config_json(cfg, None),
        "hilbert": profile.hilbert,
        "socle_degree": profile.socle_degree,
        "socle_dim": profile.socle_dim,
        "symmetric": profile.is_symmetric(),
        "pieces": pieces,
    });
    if f.degree() == 3 {
        report["rank_lower_bound"] = json!(rank_lower_bound(&f)?);
    }
    if let Some(points) = &input.points {
        let points = points
            .iter()
            .map(|p| p.to_point(cfg.precision))
            .collect::<Result<Vec<_>>>()?;
        let check = is_apolar_scheme(&points, &f, cfg)?;
        report["apolar_scheme"] = json!({
            "apolar": check.apolar,
            "decomposition": check.certificate.as_ref().map(|d| DecompositionJson::new(d, cfg.precision)),
        });
    }
    let passed = profile.socle_dim == 1 && profile.is_symmetric();
    Ok(Outcome { report, passed })
}

fn inverse(args: &InputArgs) -> Result<Outcome> {
    let input: InverseInput = read_json(&args.input)?;
    let (pieces, d, original) = match (&input.form, &input.pieces) {
        (Some(form), None) => {
            let f = Polynomial::try_from(form)?;
            let pieces = (1..=f.degree())
                .map(|k| apolar_ideal_piece(&f, k))
                .collect::<Result<Vec<_>>>()?;
            (pieces, f.degree(), Some(f))
        }
        (None, Some(pieces)) => {
            let n = input
                .nvars
                .ok_or_else(|| Error::InvalidInput("`nvars` is required with `pieces`".into()))?;
            let d = input
                .degree
                .ok_or_else(|| Error::InvalidInput("`degree` is required with `pieces`".into()))?;
            let pieces = pieces
                .iter()
                .map(|p| {
                    let gens = p
                        .generators
                        .iter()
                        .map(Polynomial::try_from)
                        .collect::<Result<Vec<_>>>()?;
                    GradedIdealPiece::new(n, p.degree, &gens)
                })
                .collect::<Result<Vec<_>>>()?;
            (pieces, d, None)
        }
        _ => return Err(Error::InvalidInput("give exactly one of `form` or `pieces`".into())),
    };
    let f = macaulay_inverse(&pieces, d)?;
    let n = f.nvars();
    let mut report = json!({
        "claim": "an Artinian Gorenstein ideal with socle in degree d determines its dual form up to scalar",
        "form": PolynomialJson::from(&f),
        "hilbert": quotient_hilbert(n, &pieces, d + 1),
    });
    let mut passed = true;
    if let Some(orig) = original {
        let same = orig.normalized() == f.normalized();
        report["matches_input"] = json!(same);
        passed = same;
    }
    Ok(Outcome { report, passed })
}

fn fermat(args: &FermatArgs, cfg: &NumericConfig) -> Result<Outcome> {
    let input: FormInput = read_json(&args.input)?;
    let f = Polynomial::try_from(&input.form)?;
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let result = fermat_detect(&f, &mut rng, cfg)?;
    let mut report = json!({
        "claim": "a cubic in n variables is Fermat when the pencil of its contractions diagonalizes simultaneously",
        "config": config_json(cfg, Some(args.seed)),
        "rank_lower_bound": rank_lower_bound(&f)?,
        "fermat": result.is_ok(),
    });
    match result {
        Ok(d) => report["decomposition"] = json!(DecompositionJson::new(&d, cfg.precision)),
        Err(why) => report["failure"] = json!(format!("{why:?}")),
    }
    Ok(Outcome::ok(report))
}

fn scroll(args: &ScrollArgs) -> Result<Outcome> {
    let s = Scroll::new(args.ty.clone())?;
    let classes = args
        .classes
        .iter()
        .map(|c| parse_class(c))
        .collect::<Result<Vec<_>>>()?;
    let first = || {
        classes
            .first()
            .copied()
            .ok_or_else(|| Error::InvalidInput("this operation needs --class".into()))
    };
    let value = match args.op {
        ScrollOp::Degree => json!(divisor_degree(&s, first()?)?),
        ScrollOp::Chow => json!(chow_product(&s, &classes)?),
        ScrollOp::Canonical => json!(canonical_class(&s)),
        ScrollOp::Sections => json!(section_count(&section_templates(&s, first()?)?)),
        ScrollOp::Genus => json!(curvegen::genus_adjunction(&s, first()?)?),
        ScrollOp::Info => json!({
            "degree": s.degree(),
            "ambient_dim": s.ambient_dim(),
            "smooth": s.is_smooth(),
            "balanced": s.is_balanced(),
        }),
    };
    Ok(Outcome::ok(json!({
        "claim": "a divisor aH + bF on a k-dimensional scroll of degree e has H^(k-1)-degree a*e + b",
        "type": s.type_vec(),
        "classes": classes,
        "op": format!("{:?}", args.op).to_lowercase(),
        "value": value,
    })))
}

fn curve_from(g: u32, gonality: u32, split: Option<(i64, i64)>, seed: u64) -> Result<CurveSpec> {
    match (gonality, split) {
        (3, None) => trial_curve(g, None, seed),
        (3, Some(_)) => Err(Error::InvalidInput("--split applies to tetragonal curves".into())),
        (4, s) => {
            let s = match s {
                Some(s) => s,
                None => *splits(g)
                    .first()
                    .ok_or_else(|| Error::InvalidInput(format!("no split for g={g}")))?,
            };
            trial_curve(g, Some(s), seed)
        }
        _ => Err(Error::InvalidInput(format!("gonality must be 3 or 4, got {gonality}"))),
    }
}

fn curve_gen(args: &CurveArgs, cfg: &NumericConfig) -> Result<Outcome> {
    let curve = curve_from(args.g, args.gonality, parse_split(&args.split)?, args.seed)?;
    let mut report = json!({
        "claim": "a general curve of gonality n and genus g lies on a balanced scroll swept by its g1n",
        "config": config_json(cfg, Some(args.seed)),
        "curve": CurveSpecJson::from(&curve),
    });
    if args.ideal {
        let ideal = reconstruct_ideal(&curve, args.seed ^ 0x1dea)?;
        let (e2, e3) = expected_ideal_dims(curve.genus);
        report["ideal"] = json!({
            "degree2_dim": ideal.degree2.dim(),
            "degree3_dim": ideal.degree3.dim(),
            "expected": [e2, e3],
            "point_count": ideal.point_count,
            "degree2": ideal.degree2.basis().iter().map(PolynomialJson::from).collect::<Vec<_>>(),
        });
    }
    Ok(Outcome::ok(report))
}

fn alpha(args: &AlphaArgs, cfg: &NumericConfig) -> Result<Outcome> {
    let curve = match (&args.input, args.g) {
        (Some(path), _) => {
            let json: CurveSpecJson = read_json(path)?;
            CurveSpec::try_from(json)?
        }
        (None, Some(g)) => curve_from(g, args.gonality, parse_split(&args.split)?, args.seed)?,
        (None, None) => return Err(Error::InvalidInput("give --g or --in".into())),
    };
    let ideal = reconstruct_ideal(&curve, args.seed ^ 0x1dea)?;
    let run = run_alpha(&curve, &ideal, args.seed, cfg)?;
    let report = AlphaReport::new(&curve, &run, args.seed, cfg.precision);
    Ok(Outcome::ok(serde_json::to_value(report)?))
}

fn run(cli: &Cli) -> Result<Outcome> {
    if cli.precision_bits < 64 || cli.tolerance.is_nan() || cli.tolerance <= 0.0 {
        return Err(Error::InvalidInput(
            "need --precision-bits >= 64 and a positive --tolerance".into(),
        ));
    }
    let cfg = NumericConfig {
        precision: cli.precision_bits,
        tolerance: cli.tolerance,
    };
    match &cli.command {
        Command::Apolar(a) => apolar(a, &cfg),
        Command::Inverse(a) => inverse(a),
        Command::Fermat(a) => fermat(a, &cfg),
        Command::Scroll(a) => scroll(a),
        Command::CurveGen(a) => curve_gen(a, &cfg),
        Command::Alpha(a) => alpha(a, &cfg),
        Command::VerifyA(a) => {
            let r = verify_theorem_a(a.g, a.trials, a.seed, &cfg)?;
            Ok(Outcome {
                passed: r.passed,
                report: serde_json::to_value(r)?,
            })
        }
        Command::VerifyB(a) => {
            let r = verify_theorem_b(a.g, parse_split(&a.split)?, a.trials, a.seed, &cfg)?;
            Ok(Outcome {
                passed: r.passed,
                report: serde_json::to_value(r)?,
            })
        }
        Command::Numerology(a) => {
            let r = tetragonal_numerology(a.g)?;
            let mut v = serde_json::to_value(&r)?;
            v["claim"] = json!(
                "plane models of tetragonal curves: adjunction and the conic pencil fix the multiplicities and deg S"
            );
            Ok(Outcome {
                passed: r.within_bound,
                report: v,
            })
        }
        Command::Nakai(a) => {
            let r = nakai_certificate(a.k, a.a_max)?;
            let mut v = serde_json::to_value(&r)?;
            v["claim"] = json!(
                "L = (2k-1)H - (k-1)(E1+..+E4) is ample and C = (2k+2)H - k(E1+..+E4) meets every curve positively"
            );
            Ok(Outcome {
                passed: r.certified,
                report: v,
            })
        }
        Command::GonalityN(a) => {
            let r = higher_gonality_degree(a.n, a.k, a.excess)?;
            let mut v = serde_json::to_value(&r)?;
            v["claim"] = json!("for gonality n and g = (n-1)k the surface degree is compared against 2g-3");
            Ok(Outcome::ok(v))
        }
    }
}

fn emit(out: &Option<PathBuf>, value: &Value) -> std::io::Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("values serialize");
    text.push('\n');
    match out {
        Some(path) => fs::write(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn threads() -> Option<usize> {
    let v = std::env::var("APOLAR_KIT_THREADS").ok()?;
    let n: usize = v.trim().parse().ok()?;
    Some(n.max(1))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads() {
        builder = builder.num_threads(n);
    }
    let pool = builder.build().expect("thread pool");
    let result = pool.install(|| run(&cli));
    match result {
        Ok(outcome) => {
            if let Err(e) = emit(&cli.out, &outcome.report) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            let input = e.is_input_error();
            let report = json!({
                "error": e.to_string(),
                "kind": if input { "input" } else { "certificate" },
            });
            eprintln!("{}", serde_json::to_string(&report).expect("values serialize"));
            if !input {
                let _ = emit(&cli.out, &report);
            }
            ExitCode::from(if input { 2 } else { 1 })
        }
    }
}
