mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hgreg_core::ellcurve::{curve_data, family_model, integrality_check, minimal_model, Family, WeierstrassModel};
use hgreg_core::hyper::{pfq, HGSpec};
use hgreg_core::lfunc::l_value_for_model;
use hgreg_core::precision::{parse_exact, parse_rational, rational_to_string};
use hgreg_core::regulators::{
    family_reg, fermat_index_set, fermat_reg_delta, fermat_reg_delta_alt, fermat_reg_delta_digamma, fermat_reg_gamma,
    gauss_reg, FermatFibration, GaussCycle, GaussFibration, RegResult,
};
use hgreg_core::verify::{compute_rt, golden_tables, reproduce_tables, run_identity_suite_perturbed, RowStatus};
use hgreg_core::{Context, Error, Rational, XComplex, XReal};
use num_bigint::BigInt;
use serde_json::{json, Value};

use output::{emit, Format};

#[derive(Parser)]
#[command(name = "hgreg", version, about = "Hypergeometric regulator formulas at extended precision")]
struct Cli {
    /// Decimal digits of working precision (default: HGREG_PREC or 40)
    #[arg(long, global = true)]
    prec: Option<u32>,
    /// Largest denominator accepted by rational reconstruction
    #[arg(long, global = true, default_value_t = 100_000)]
    qmax: u64,
    /// Reconstruction tolerance
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cap on series terms
    #[arg(long, global = true, default_value_t = 10_000_000)]
    max_terms: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Hypergeometric functions
    Hyper {
        #[command(subcommand)]
        cmd: HyperCmd,
    },
    /// Regulator values
    Reg {
        #[command(subcommand)]
        cmd: RegCmd,
    },
    /// Elliptic curve data
    Curve {
        #[command(subcommand)]
        cmd: CurveCmd,
    },
    /// L(E, 2) for a family member or an explicit model
    Lvalue(LvalueArgs),
    /// Recompute the ratio tables
    Table(TableArgs),
    /// Identity suite and ratio checks
    Verify {
        #[command(subcommand)]
        cmd: VerifyCmd,
    },
}

#[derive(Subcommand)]
enum HyperCmd {
    /// Evaluate pFq; spec "a1,a2,..;b1,..;z"
    Eval {
        #[arg(long)]
        pfq: String,
    },
}

#[derive(Args)]
struct FamilyT {
    #[arg(long)]
    family: String,
    #[arg(long, allow_hyphen_values = true)]
    t: String,
}

#[derive(Args)]
struct TArg {
    #[arg(long, allow_hyphen_values = true)]
    t: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum FermatCycle {
    Delta,
    Gamma,
}

#[derive(Clone, Copy, ValueEnum)]
enum DeltaForm {
    Standard,
    Digamma,
    Alt,
}

#[derive(Clone, Copy, ValueEnum)]
enum GaussCycleArg {
    Gamma0,
    Gamma1,
}

#[derive(Subcommand)]
enum RegCmd {
    Legendre(TArg),
    Family2(TArg),
    Family3(TArg),
    Fermat {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        nu1: u32,
        #[arg(long)]
        nu2: u32,
        #[arg(long, default_value_t = 0)]
        eps1: u32,
        #[arg(long, default_value_t = 0)]
        eps2: u32,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, value_enum, default_value_t = FermatCycle::Delta)]
        cycle: FermatCycle,
        /// Closed form used for the delta cycle
        #[arg(long, value_enum, default_value_t = DeltaForm::Standard)]
        form: DeltaForm,
        #[arg(long, default_value_t = 1)]
        i0: u32,
        #[arg(long, default_value_t = 1)]
        j0: u32,
    },
    Gauss {
        #[arg(long = "N")]
        big_n: u32,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        d: u32,
        /// Comma-separated rationals, one per element of I_e
        #[arg(long)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, value_enum)]
        cycle: GaussCycleArg,
    },
}

#[derive(Subcommand)]
enum CurveCmd {
    /// Invariants, minimal model, conductor and local data
    Info(FamilyT),
}

#[derive(Args)]
struct LvalueArgs {
    #[arg(long, requires = "t", conflicts_with = "model")]
    family: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// a1,a2,a3,a4,a6
    #[arg(long, allow_hyphen_values = true)]
    model: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Legendre,
    Family2,
    Family3,
    All,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    which: Which,
    /// Worker threads (default: logical cores)
    #[arg(long)]
    jobs: Option<usize>,
    /// Leave runtime_ms empty so output is reproducible byte for byte
    #[arg(long)]
    no_timing: bool,
}

#[derive(Subcommand)]
enum VerifyCmd {
    Identities {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Relative perturbation of C_{a,b} in the Zudilin check
        #[arg(long, default_value_t = 0.0, hide = true)]
        perturb: f64,
    },
    Beilinson {
        #[arg(long)]
        family: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Warn instead of failing when the integrality criterion does not hold
        #[arg(long)]
        allow_nonintegral: bool,
    },
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(s) => Failure::Usage(s),
            e => Failure::Compute(e),
        }
    }
}

type Out = Result<(Value, bool), Failure>;

fn cx(z: &XComplex, ctx: &Context) -> Value {
    json!({ "re": z.re.to_string_digits(ctx.digits), "im": z.im.to_string_digits(ctx.digits) })
}

fn rx(x: &XReal, ctx: &Context) -> String {
    x.to_string_digits(ctx.digits)
}

fn rs(r: &Rational) -> String {
    rational_to_string(r)
}

fn reg_json(r: &RegResult, ctx: &Context) -> Value {
    json!({ "value": cx(&r.value, ctx), "ambiguity": r.ambiguity, "branch_note": r.branch_note, "P": ctx.digits })
}

fn hyper_eval(spec: &str, ctx: &Context) -> Out {
    let parts: Vec<&str> = spec.split(';').collect();
    if parts.len() != 3 {
        return Err(Failure::Usage(format!("--pfq expects \"a1,..;b1,..;z\", got {spec:?}")));
    }
    let list = |s: &str| -> Result<Vec<XReal>, Failure> {
        s.split(',').map(str::trim).filter(|p| !p.is_empty()).map(|p| Ok(ctx.rational(&parse_exact(p)?))).collect()
    };
    let (upper, lower) = (list(parts[0])?, list(parts[1])?);
    let z = ctx.parse_complex(parts[2].trim())?;
    let h = HGSpec::new(upper, lower, z.clone())?;
    let v = pfq(&h, ctx)?;
    Ok((json!({ "pfq": spec, "z": cx(&z, ctx), "value": cx(&v, ctx), "P": ctx.digits }), true))
}

fn t_complex(t: &Rational, ctx: &Context) -> XComplex {
    XComplex::from_real(ctx.rational(t))
}

fn reg(cmd: RegCmd, ctx: &Context) -> Out {
    let family = |f: Family, t: &str| -> Out {
        let t = parse_rational(t)?;
        let v = family_reg(f, &t, ctx)?;
        Ok((json!({ "family": f, "t": rs(&t), "reg": rx(&v, ctx), "P": ctx.digits }), true))
    };
    match cmd {
        RegCmd::Legendre(a) => family(Family::Legendre, &a.t),
        RegCmd::Family2(a) => family(Family::Family2, &a.t),
        RegCmd::Family3(a) => family(Family::Family3, &a.t),
        RegCmd::Fermat { n, m, nu1, nu2, eps1, eps2, t, cycle, form, i0, j0 } => {
            let fib = FermatFibration::new(n, m, nu1, nu2, eps1, eps2)?;
            let tq = parse_rational(&t)?;
            let tc = t_complex(&tq, ctx);
            let r = match cycle {
                FermatCycle::Delta => match form {
                    DeltaForm::Standard => fermat_reg_delta(&fib, &tc, ctx)?,
                    DeltaForm::Digamma => fermat_reg_delta_digamma(&fib, &tc, ctx)?,
                    DeltaForm::Alt => fermat_reg_delta_alt(&fib, &tc, ctx)?,
                },
                FermatCycle::Gamma => {
                    let idx = fermat_index_set(n, m, i0, j0)?;
                    fermat_reg_gamma(&fib, &idx, &tc, ctx)?
                }
            };
            let mut v = reg_json(&r, ctx);
            v["t"] = json!(rs(&tq));
            Ok((v, true))
        }
        RegCmd::Gauss { big_n, a, b, d, lambda, t, cycle } => {
            let lambda = lambda.split(',').map(|s| parse_rational(s.trim())).collect::<Result<Vec<_>, _>>()?;
            let fib = GaussFibration::new(big_n, a, b, d, lambda)?;
            let tq = parse_rational(&t)?;
            let cycle = match cycle {
                GaussCycleArg::Gamma0 => GaussCycle::Gamma0,
                GaussCycleArg::Gamma1 => GaussCycle::Gamma1,
            };
            let r = gauss_reg(&fib, &t_complex(&tq, ctx), cycle, ctx)?;
            let mut v = reg_json(&r, ctx);
            v["t"] = json!(rs(&tq));
            v["index"] = json!(fib.index);
            Ok((v, true))
        }
    }
}

fn model_json(m: &WeierstrassModel) -> Value {
    json!([rs(&m.a1), rs(&m.a2), rs(&m.a3), rs(&m.a4), rs(&m.a6)])
}

fn curve_info(a: FamilyT) -> Out {
    let f = Family::parse(&a.family)?;
    let t = parse_rational(&a.t)?;
    let model = family_model(f, &t)?;
    let min = minimal_model(&model)?;
    let (_, data) = curve_data(&model)?;
    let local: Vec<Value> = data
        .local_data
        .iter()
        .map(|l| json!({ "p": l.p.to_string(), "kodaira": l.kodaira.to_string(), "f": l.f, "reduction": l.kind, "ord_disc": l.ord_disc }))
        .collect();
    Ok((
        json!({
            "family": f,
            "t": rs(&t),
            "model": model_json(&model),
            "minimal_model": model_json(&min),
            "c4": rs(&data.c4),
            "c6": rs(&data.c6),
            "disc": rs(&data.disc),
            "j": rs(&data.j),
            "conductor": data.conductor.to_string(),
            "local_data": local,
            "integral_symbol": integrality_check(f, &t)?,
        }),
        true,
    ))
}

fn lvalue(a: LvalueArgs, ctx: &Context) -> Out {
    let model = match (&a.family, &a.t, &a.model) {
        (Some(f), Some(t), None) => family_model(Family::parse(f)?, &parse_rational(t)?)?,
        (None, None, Some(m)) => {
            let c = m.split(',').map(|s| parse_rational(s.trim())).collect::<Result<Vec<_>, _>>()?;
            let c: [Rational; 5] = c.try_into().map_err(|_| Failure::Usage("--model expects a1,a2,a3,a4,a6".into()))?;
            WeierstrassModel::new(c)?
        }
        _ => return Err(Failure::Usage("give --family and --t, or --model".into())),
    };
    let (series, l) = l_value_for_model(&model, ctx)?;
    Ok((
        json!({
            "model": model_json(&model),
            "conductor": series.conductor,
            "root_number": series.root_number,
            "terms": series.a.len(),
            "L2": rx(&l, ctx),
            "P": ctx.digits,
        }),
        true,
    ))
}

fn table(a: TableArgs, ctx: &Context, qmax: &BigInt, tol: &XReal) -> Out {
    let jobs = a.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().map_err(|e| Failure::Usage(e.to_string()))?;
    let keep = |f: Family| match a.which {
        Which::All => true,
        Which::Legendre => f == Family::Legendre,
        Which::Family2 => f == Family::Family2,
        Which::Family3 => f == Family::Family3,
    };
    let entries: Vec<_> = golden_tables().into_iter().filter(|e| keep(e.family)).collect();
    let rows = pool.install(|| reproduce_tables(&entries, ctx, qmax, tol, !a.no_timing));
    let ok = rows.iter().all(|r| r.status == RowStatus::Match);
    Ok((serde_json::to_value(&rows).expect("rows serialize"), ok))
}

fn verify(cmd: VerifyCmd, ctx: &Context, qmax: &BigInt, tol: &XReal) -> Out {
    match cmd {
        VerifyCmd::Identities { seed, count, perturb } => {
            let rep = run_identity_suite_perturbed(seed, count, perturb, ctx);
            let ok = rep.passed;
            Ok((serde_json::to_value(&rep).expect("report serializes"), ok))
        }
        VerifyCmd::Beilinson { family, t, allow_nonintegral } => {
            let f = Family::parse(&family)?;
            let t = parse_rational(&t)?;
            let integral = integrality_check(f, &t)?;
            if !integral {
                if !allow_nonintegral {
                    return Err(Error::NotIntegral(rs(&t)).into());
                }
                eprintln!("warning: symbol is not integral at t = {}; proceeding", rs(&t));
            }
            let r = compute_rt(f, &t, ctx, qmax, tol, false)?;
            let expected = golden_tables().into_iter().find(|e| e.family == f && e.t == t).map(|e| e.expected);
            let ok = match (&r.r_rational, &expected) {
                (Some(got), Some(want)) => got == want,
                (Some(_), None) => true,
                (None, _) => false,
            };
            Ok((
                json!({
                    "family": f,
                    "t": rs(&t),
                    "integral": integral,
                    "regulator": rx(&r.regulator, ctx),
                    "L2": rx(&r.l_value, ctx),
                    "conductor": r.conductor,
                    "root_number": r.root_number,
                    "R_decimal": rx(&r.r, ctx),
                    "R_rational": r.r_rational.as_ref().map(rs),
                    "expected": expected.as_ref().map(rs),
                    "P": ctx.digits,
                }),
                ok,
            ))
        }
    }
}

fn run(cli: Cli) -> Out {
    let digits = match cli.prec {
        Some(p) => p,
        None => Context::from_env().digits,
    };
    if digits < 20 {
        return Err(Failure::Usage(format!("precision must be at least 20 digits, got {digits}")));
    }
    if cli.qmax == 0 || cli.max_terms == 0 || !(cli.tol > 0.0) {
        return Err(Failure::Usage("--qmax, --max-terms and --tol must be positive".into()));
    }
    let ctx = Context::new(digits).with_max_terms(cli.max_terms);
    let qmax = BigInt::from(cli.qmax);
    let tol = XReal::from_f64(cli.tol, ctx.bits());
    match cli.cmd {
        Cmd::Hyper { cmd: HyperCmd::Eval { pfq } } => hyper_eval(&pfq, &ctx),
        Cmd::Reg { cmd } => reg(cmd, &ctx),
        Cmd::Curve { cmd: CurveCmd::Info(a) } => curve_info(a),
        Cmd::Lvalue(a) => lvalue(a, &ctx),
        Cmd::Table(a) => table(a, &ctx, &qmax, &tol),
        Cmd::Verify { cmd } => verify(cmd, &ctx, &qmax, &tol),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let format = cli.format;
    match run(cli) {
        Ok((v, ok)) => {
            let mut out = std::io::stdout().lock();
            if emit(&v, format, &mut out).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(if ok { 0 } else { 3 })
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
