//! Command-line front end: weight hierarchies, minimum-weight subcodes,
//! Artin-Schreier curves, fibre products, maximal families, and a one-shot
//! verification of the published numeric results.

mod expr;
mod report;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use grmcurves::curve::{hasse_weil, ArtinSchreierCurve, FibreProduct};
use grmcurves::families::{self, DerivedVariant};
use grmcurves::field::{AlphaOrder, FieldElement, FieldTower, DEFAULT_SIZE_CAP};
use grmcurves::hierarchy::{
    d_r_formula, first_r_sigmas, gaussian_binomial, ghw_bruteforce, ghw_by_shortening,
    min_weight_subcode, BRUTE_CAP,
};
use grmcurves::verify::{self, VerifyOptions};
use grmcurves::{grm, Error, TraceForm};

use report::ReportRecord;

#[derive(Parser)]
#[command(
    name = "grmcurves",
    about = "Reed-Muller weight hierarchies and Artin-Schreier curves with many points",
    version
)]
struct Cli {
    /// Emit CSV instead of JSON.
    #[arg(long, global = true)]
    csv: bool,
    /// Emit JSON (the default).
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-time in the output. Off by default so identical
    /// invocations produce byte-identical reports.
    #[arg(long, global = true)]
    timing: bool,
    /// Enumeration order of the alpha elements of F_q.
    #[arg(long, global = true, value_enum, default_value_t = AlphaOrderArg::Desc)]
    alpha_order: AlphaOrderArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlphaOrderArg {
    Asc,
    Desc,
}

impl From<AlphaOrderArg> for AlphaOrder {
    fn from(a: AlphaOrderArg) -> Self {
        match a {
            AlphaOrderArg::Asc => AlphaOrder::Ascending,
            AlphaOrderArg::Desc => AlphaOrder::Descending,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generalized Hamming weight d_r of R_q(s, m) by formula, measured
    /// subcode weight, and optionally a brute-force oracle.
    Ghw {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        s: u64,
        #[arg(short)]
        r: usize,
        /// Also run an independent exhaustive oracle.
        #[arg(long)]
        brute: bool,
    },
    /// The minimum-weight subcode construction: qualifying tuples, basis
    /// polynomials, and both weight computations.
    Subcode {
        #[arg(short)]
        q: u64,
        #[arg(short)]
        m: usize,
        #[arg(short)]
        s: u64,
        #[arg(short)]
        r: usize,
    },
    /// A single curve y^p - y = R(x) over F_{p^m}: genus, points, bounds.
    Curve {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        m: usize,
        /// Right-hand side, e.g. "2*x^4 + x^2 - x" or "a*x^2" with --gen.
        #[arg(short = 'R')]
        rhs: Option<String>,
        /// Use a named family model instead of -R (5.1, 5.2a, 5.2b, 5.2c).
        #[arg(long)]
        family: Option<String>,
        /// Binding for the generator "a" in -R (supported: trace-zero).
        #[arg(long)]
        gen: Option<String>,
        #[arg(short, default_value_t = 1)]
        r: usize,
    },
    /// A fibre product of curves given by repeated -R forms.
    Fibre {
        #[arg(short)]
        p: u64,
        #[arg(short)]
        m: usize,
        /// One member right-hand side per occurrence.
        #[arg(short = 'R', required = true)]
        rhs: Vec<String>,
        #[arg(long)]
        gen: Option<String>,
    },
    /// Maximal families: constructive models (5.1, 5.2a/b/c) or quotient
    /// invariants (5.3, 5.4, 5.5).
    Maximal {
        #[arg(long)]
        family: String,
        #[arg(short)]
        p: u64,
        #[arg(short)]
        m: usize,
        #[arg(short, default_value_t = 1)]
        r: usize,
        /// Divisor parameter for the roots-of-unity quotients.
        #[arg(short, default_value_t = 1)]
        d: u64,
    },
    /// Re-derive every published numeric claim; exit 1 on any failure.
    VerifyPaper {
        /// Run a single claim by id.
        #[arg(long)]
        only: Option<String>,
        /// Skip exhaustive counts over fields larger than this size.
        #[arg(long)]
        grid_max: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    match result {
        Ok(mut records) => {
            if cli.timing {
                let ms = start.elapsed().as_millis();
                for rec in &mut records {
                    rec.ms = Some(ms);
                }
            }
            report::emit(&records, cli.csv);
            if records.iter().all(|r| r.checks.values().all(|&p| p)) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Vec<ReportRecord>, Error> {
    let order: AlphaOrder = cli.alpha_order.into();
    match &cli.command {
        Command::Ghw { q, m, s, r, brute } => cmd_ghw(*q, *m, *s, *r, *brute, order),
        Command::Subcode { q, m, s, r } => cmd_subcode(*q, *m, *s, *r, order),
        Command::Curve {
            p,
            m,
            rhs,
            family,
            gen,
            r,
        } => cmd_curve(*p, *m, rhs.as_deref(), family.as_deref(), gen.as_deref(), *r, order),
        Command::Fibre { p, m, rhs, gen } => cmd_fibre(*p, *m, rhs, gen.as_deref(), order),
        Command::Maximal { family, p, m, r, d } => cmd_maximal(family, *p, *m, *r, *d, order),
        Command::VerifyPaper { only, grid_max } => cmd_verify(only.clone(), *grid_max),
    }
}

/// Factor a prime power `q = p^e`.
fn prime_power(q: u64) -> Result<(u64, usize), Error> {
    if q < 2 {
        return Err(Error::BadParameter(format!("{} is not a prime power", q)));
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q; // q itself is prime
    }
    let mut e = 0;
    let mut rest = q;
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    if rest != 1 {
        return Err(Error::BadParameter(format!("{} is not a prime power", q)));
    }
    Ok((p, e))
}

fn tower_for(q: u64, m: usize, order: AlphaOrder) -> Result<FieldTower, Error> {
    let (p, e) = prime_power(q)?;
    FieldTower::build(p, e, m, order, DEFAULT_SIZE_CAP)
}

fn sigma_strings(q: u64, m: usize, s: u64, r: usize) -> Result<Vec<String>, Error> {
    Ok(first_r_sigmas(q, m, s, r)?
        .iter()
        .map(|t| format!("{:?}", t.sigma))
        .collect())
}

fn cmd_ghw(
    q: u64,
    m: usize,
    s: u64,
    r: usize,
    brute: bool,
    order: AlphaOrder,
) -> Result<Vec<ReportRecord>, Error> {
    let tower = tower_for(q, m, order)?;
    let formula = d_r_formula(q, m, s, r)?;
    let subcode = min_weight_subcode(s, r, &tower)?;
    let measured = subcode.support_weight();

    let mut outputs = BTreeMap::new();
    outputs.insert("d_r".into(), json!(formula));
    outputs.insert("measured_weight".into(), json!(measured));
    outputs.insert("sigmas".into(), json!(sigma_strings(q, m, s, r)?));
    let mut checks = BTreeMap::new();
    checks.insert("formula_matches_measured".into(), formula == measured);

    if brute {
        let generator = grm::rm_generator_basis(s, &tower)?;
        let k = generator.len();
        let oracle = if gaussian_binomial(k, r, q) <= BRUTE_CAP {
            outputs.insert("oracle".into(), json!("subspace-enumeration"));
            ghw_bruteforce(&generator, r, BRUTE_CAP, &tower)?
        } else {
            outputs.insert("oracle".into(), json!("coordinate-shortening"));
            ghw_by_shortening(&generator, r, &tower)?
        };
        outputs.insert("brute_weight".into(), json!(oracle));
        checks.insert("formula_matches_brute".into(), formula == oracle);
    }

    Ok(vec![ReportRecord::new(
        "ghw",
        params(&[("q", json!(q)), ("m", json!(m)), ("s", json!(s)), ("r", json!(r))]),
        outputs,
        checks,
    )])
}

fn cmd_subcode(
    q: u64,
    m: usize,
    s: u64,
    r: usize,
    order: AlphaOrder,
) -> Result<Vec<ReportRecord>, Error> {
    let tower = tower_for(q, m, order)?;
    let subcode = min_weight_subcode(s, r, &tower)?;
    let support = subcode.support_weight();
    let by_sum = subcode.weight_by_sum(&tower)?;
    let word_weights: Vec<u64> = subcode.words().iter().map(|w| w.weight()).collect();

    let mut outputs = BTreeMap::new();
    outputs.insert("support_weight".into(), json!(support));
    outputs.insert("weight_by_sum".into(), json!(by_sum));
    outputs.insert("basis_word_weights".into(), json!(word_weights));
    outputs.insert("sigmas".into(), json!(sigma_strings(q, m, s, r)?));
    outputs.insert("code_dimension".into(), json!(grm::dim_rm(q, m, s)));
    let mut checks = BTreeMap::new();
    checks.insert("averaging_identity".into(), support == by_sum);
    checks.insert("equals_d_r".into(), support == d_r_formula(q, m, s, r)?);

    Ok(vec![ReportRecord::new(
        "subcode",
        params(&[("q", json!(q)), ("m", json!(m)), ("s", json!(s)), ("r", json!(r))]),
        outputs,
        checks,
    )])
}

/// Resolve the generator binding for expressions mentioning `a`.
fn resolve_gen(spec: Option<&str>, tower: &FieldTower) -> Result<Option<FieldElement>, Error> {
    match spec {
        None => Ok(None),
        Some("trace-zero") => {
            let one = tower.one();
            let a = tower
                .elements()
                .find(|x| {
                    tower.trace_to(x, tower.prime_subfield()).is_zero()
                        && tower.rank_over_prime(&[one.clone(), x.clone()]) == 2
                })
                .ok_or_else(|| {
                    Error::BadParameter("no trace-zero generator outside F_p exists".into())
                })?;
            Ok(Some(a))
        }
        Some(other) => Err(Error::BadParameter(format!(
            "unsupported --gen value {:?} (supported: trace-zero)",
            other
        ))),
    }
}

fn curve_record(
    command: &str,
    p: BTreeMap<String, Value>,
    form: &TraceForm,
    tower: &FieldTower,
) -> Result<ReportRecord, Error> {
    let reduced = form.reduce_full(tower)?;
    let curve = ArtinSchreierCurve::new(reduced, tower)?;
    let rep = curve.report(tower);
    let weight = form.codeword(tower).weight();

    let mut outputs = BTreeMap::new();
    outputs.insert("genus".into(), json!(rep.genus));
    outputs.insert("n_points".into(), json!(rep.n_points));
    outputs.insert("tau".into(), json!(rep.tau));
    outputs.insert("hw_bound".into(), json!(rep.hw_bound));
    outputs.insert("maximal".into(), json!(rep.maximal));
    outputs.insert("word_weight".into(), json!(weight));
    outputs.insert("reduced_degree".into(), json!(curve.degree()));
    let mut checks = BTreeMap::new();
    checks.insert(
        "weight_dictionary".into(),
        curve.weight_point_check(weight, tower)?,
    );
    checks.insert("within_hasse_weil".into(), rep.n_points <= rep.hw_bound);
    Ok(ReportRecord::new(command, p, outputs, checks))
}

fn cmd_curve(
    p: u64,
    m: usize,
    rhs: Option<&str>,
    family: Option<&str>,
    gen: Option<&str>,
    r: usize,
    order: AlphaOrder,
) -> Result<Vec<ReportRecord>, Error> {
    let tower = FieldTower::build(p, 1, m, order, DEFAULT_SIZE_CAP)?;
    match (rhs, family) {
        (Some(expr), None) => {
            let a = resolve_gen(gen, &tower)?;
            let form = expr::parse(expr, a.as_ref(), &tower)?;
            let pm = params(&[("p", json!(p)), ("m", json!(m)), ("R", json!(expr))]);
            Ok(vec![curve_record("curve", pm, &form, &tower)?])
        }
        (None, Some(id)) => {
            let inst = build_constructive_family(id, &tower, r)?;
            let pm = params(&[
                ("p", json!(p)),
                ("m", json!(m)),
                ("r", json!(r)),
                ("family", json!(id)),
            ]);
            Ok(vec![family_record("curve", pm, &inst)])
        }
        _ => Err(Error::BadParameter(
            "provide exactly one of -R <expr> or --family <id>".into(),
        )),
    }
}

fn cmd_fibre(
    p: u64,
    m: usize,
    rhs: &[String],
    gen: Option<&str>,
    order: AlphaOrder,
) -> Result<Vec<ReportRecord>, Error> {
    let tower = FieldTower::build(p, 1, m, order, DEFAULT_SIZE_CAP)?;
    let a = resolve_gen(gen, &tower)?;
    let forms: Result<Vec<TraceForm>, Error> = rhs
        .iter()
        .map(|e| Ok(expr::parse(e, a.as_ref(), &tower)?.reduce_full(&tower)?))
        .collect();
    let fp = FibreProduct::new(forms?, &tower)?;
    let rep = fp.report(&tower)?;
    let w = fp.subcode(&tower)?.support_weight();
    let tau = fp.tau_aggregate(&tower)?;
    let qr = tower.q().pow(fp.dim() as u32);

    let mut outputs = BTreeMap::new();
    outputs.insert("genus".into(), json!(rep.genus));
    outputs.insert("n_points".into(), json!(rep.n_points));
    outputs.insert("tau".into(), json!(rep.tau));
    outputs.insert("hw_bound".into(), json!(rep.hw_bound));
    outputs.insert("maximal".into(), json!(rep.maximal));
    outputs.insert("subcode_weight".into(), json!(w));
    let mut checks = BTreeMap::new();
    checks.insert(
        "points_from_subcode_weight".into(),
        rep.n_points == qr * (tower.size() - w) + 1,
    );
    checks.insert("tau_aggregation".into(), tau == rep.tau);
    checks.insert("within_hasse_weil".into(), rep.n_points <= rep.hw_bound);
    let pm = params(&[("p", json!(p)), ("m", json!(m)), ("R", json!(rhs))]);
    Ok(vec![ReportRecord::new("fibre", pm, outputs, checks)])
}

fn build_constructive_family(
    id: &str,
    tower: &FieldTower,
    r: usize,
) -> Result<families::FamilyInstance, Error> {
    match id {
        "5.1" => families::build_family_51(tower, r),
        "5.2a" => families::build_family_52(tower, DerivedVariant::A, r),
        "5.2b" => families::build_family_52(tower, DerivedVariant::B, r),
        "5.2c" => families::build_family_52(tower, DerivedVariant::C, r),
        _ => Err(Error::BadParameter(format!(
            "unknown constructive family {:?} (use 5.1, 5.2a, 5.2b, 5.2c)",
            id
        ))),
    }
}

fn family_record(
    command: &str,
    pm: BTreeMap<String, Value>,
    inst: &families::FamilyInstance,
) -> ReportRecord {
    let rep = &inst.report;
    let mut outputs = BTreeMap::new();
    outputs.insert("genus".into(), json!(rep.genus));
    outputs.insert("n_points".into(), json!(rep.n_points));
    outputs.insert("tau".into(), json!(rep.tau));
    outputs.insert("hw_bound".into(), json!(rep.hw_bound));
    outputs.insert("maximal".into(), json!(rep.maximal));
    outputs.insert("members".into(), json!(inst.forms.len()));
    let mut checks = BTreeMap::new();
    checks.insert("attains_hasse_weil".into(), rep.maximal == Some(true));
    ReportRecord::new(command, pm, outputs, checks)
}

fn cmd_maximal(
    family: &str,
    p: u64,
    m: usize,
    r: usize,
    d: u64,
    order: AlphaOrder,
) -> Result<Vec<ReportRecord>, Error> {
    let pm = params(&[
        ("family", json!(family)),
        ("p", json!(p)),
        ("m", json!(m)),
        ("r", json!(r)),
        ("d", json!(d)),
    ]);
    let rep = match family {
        "5.3" => families::quotient_invariants_53(p, m, r)?,
        "5.4" => families::quotient_invariants_54(p, m, d)?,
        "5.5" => families::quotient_invariants_55(p, m, r, d)?,
        _ => {
            let tower = FieldTower::build(p, 1, m, order, DEFAULT_SIZE_CAP)?;
            let inst = build_constructive_family(family, &tower, r)?;
            return Ok(vec![family_record("maximal", pm, &inst)]);
        }
    };
    let mut outputs = BTreeMap::new();
    outputs.insert("genus".into(), json!(rep.genus));
    outputs.insert("n_points".into(), json!(rep.n_points));
    outputs.insert("tau".into(), json!(rep.tau));
    outputs.insert("hw_bound".into(), json!(rep.hw_bound));
    outputs.insert("maximal".into(), json!(rep.maximal));
    let mut checks = BTreeMap::new();
    checks.insert(
        "attains_hasse_weil".into(),
        rep.n_points == hasse_weil(rep.genus, p.pow(m as u32)),
    );
    Ok(vec![ReportRecord::new("maximal", pm, outputs, checks)])
}

fn cmd_verify(only: Option<String>, grid_max: Option<u64>) -> Result<Vec<ReportRecord>, Error> {
    let reports = verify::run(&VerifyOptions { only, grid_max })?;
    Ok(reports
        .iter()
        .map(|claim| {
            let mut outputs = BTreeMap::new();
            outputs.insert("title".into(), json!(claim.title));
            if !claim.notes.is_empty() {
                outputs.insert("notes".into(), json!(claim.notes));
            }
            let details: BTreeMap<String, String> = claim
                .checks
                .iter()
                .map(|c| (c.name.clone(), c.detail.clone()))
                .collect();
            outputs.insert("details".into(), json!(details));
            let checks: BTreeMap<String, bool> =
                claim.checks.iter().map(|c| (c.name.clone(), c.pass)).collect();
            ReportRecord::new(
                "verify-paper",
                params(&[("claim", json!(claim.id))]),
                outputs,
                checks,
            )
        })
        .collect())
}

fn params(kv: &[(&str, Value)]) -> BTreeMap<String, Value> {
    kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}
