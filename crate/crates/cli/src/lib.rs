//! Command-line front end: generic polynomial tables, extension construction,
//! classification, ramification and a self-check suite.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use ffcyclic::ff::{build_field_tower, Fq};
use ffcyclic::generic_poly::{
    bivariate_identity_check, build_p, build_q, coeff_table, compose_chain, dickson_oracle, format_symbolic,
    halve_even, ordered_factorizations, REFERENCE_FORMS,
};
use ffcyclic::json::{classify_to_json, ramification_to_json, spec_from_str, spec_to_json};
use ffcyclic::kummer::{build_extension, check_conjugates, from_ab, hilbert90, isomorphic, ExtensionSpec};
use ffcyclic::poly::text::{parse_poly, parse_ratfunc};
use ffcyclic::poly::{PolyRing, RatFuncField};
use ffcyclic::ramification::{kummer_side_index, ramification_table};
use ffcyclic::ring::{Conjugation, Field, Ring};
use ffcyclic::{Error, ZZ};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "ffcyclic", version, about = "Cyclic extensions of F_q(x) for q = -1 mod l")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct TowerArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub n: usize,
    #[arg(long)]
    pub ell: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the coefficient table c[s][j] behind P^l.
    Table {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print P^l symbolically, or over F_q(x) when --p, --u and --alpha are given.
    Poly {
        #[arg(long)]
        ell: u64,
        #[arg(long, requires_all = ["u", "alpha"])]
        p: Option<u64>,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, requires = "p")]
        u: Option<String>,
        #[arg(long, requires = "p")]
        alpha: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Build the extension attached to (A, B).
    Construct {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long = "A")]
        a: String,
        #[arg(long = "B")]
        b: String,
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two spec files describe the same extension.
    Classify {
        #[arg(long)]
        spec1: String,
        #[arg(long)]
        spec2: String,
        #[arg(long)]
        json: bool,
    },
    /// Ramification table of a spec file.
    Ramify {
        #[arg(long)]
        spec: String,
        #[arg(long)]
        json: bool,
    },
    /// Run the self-check suite for one tower.
    Verify {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long)]
        json: bool,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
        Err(Failure::Domain(e)) => Outcome {
            code: if matches!(e, Error::Parse(_)) { 2 } else { 1 },
            stdout: String::new(),
            stderr: format!("{}: {e}\n", e.name()),
        },
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json serializes");
    s.push('\n');
    s
}

fn big(c: &num_bigint::BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn read_spec(path: &str) -> Result<ExtensionSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    Ok(spec_from_str(&text)?)
}

fn dispatch(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Table { ell, json } => table(ell, json),
        Command::Poly { ell, p, n, u, alpha, json } => poly(ell, p.map(|p| (p, n, u.unwrap(), alpha.unwrap())), json),
        Command::Construct { tower, a, b, u, json } => construct(&tower, &a, &b, u.as_deref(), json),
        Command::Classify { spec1, spec2, json } => classify(&spec1, &spec2, json),
        Command::Ramify { spec, json } => ramify(&spec, json),
        Command::Verify { tower, json } => verify(&tower, json),
    }
}

fn table(ell: u64, json: bool) -> Result<Outcome, Failure> {
    if ell == 0 {
        return Err(Failure::Usage("--ell must be positive".into()));
    }
    let t = coeff_table(ell);
    let rows: Vec<Vec<_>> = (0..=t.iota).map(|j| (0..=j).map(|s| t.get(s, j).clone()).collect()).collect();
    if json {
        let rows: Vec<Value> = rows.iter().map(|r| Value::Array(r.iter().map(big).collect())).collect();
        return Ok(Outcome::ok(render(&json!({"ell": ell, "r": t.r, "iota": t.iota, "rows": rows}))));
    }
    let mut out = format!("# c[s][j] for l = {ell} (r = {}, iota = {}); row j lists s = 0..j\n", t.r, t.iota);
    for (j, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        writeln!(out, "j={j}: {}", cells.join(" ")).unwrap();
    }
    Ok(Outcome::ok(out))
}

fn poly(ell: u64, concrete: Option<(u64, usize, String, String)>, json: bool) -> Result<Outcome, Failure> {
    if ell == 0 {
        return Err(Failure::Usage("--ell must be positive".into()));
    }
    let Some((p, n, u, alpha)) = concrete else {
        let text = format_symbolic(ell);
        let c: Vec<Value> = coeff_table(ell).top_row().iter().map(big).collect();
        return Ok(Outcome::ok(if json {
            render(&json!({"ell": ell, "P": text, "coefficients": c}))
        } else {
            format!("{text}\n")
        }));
    };
    let k = RatFuncField::new(Fq::new(p, n)?, "x");
    let u = parse_ratfunc(&k, &u)?;
    let alpha = parse_ratfunc(&k, &alpha)?;
    let gp = build_p(&k, ell, &u, &alpha);
    let kx = PolyRing::new(k.clone(), "X");
    let text = kx.format(&gp.poly);
    Ok(Outcome::ok(if json {
        let c: Vec<String> = gp.poly.coeffs().iter().map(|c| k.format(c)).collect();
        render(&json!({"ell": ell, "p": p, "n": n, "P": text, "coefficients": c}))
    } else {
        format!("{text}\n")
    }))
}

fn construct(ta: &TowerArgs, a: &str, b: &str, u: Option<&str>, json: bool) -> Result<Outcome, Failure> {
    let tower = build_field_tower(ta.p, ta.n, ta.ell)?;
    let r = tower.fq_x();
    let a = parse_poly(&r, a)?;
    let b = parse_poly(&r, b)?;
    let u = u.map(|u| parse_ratfunc(&tower.k(), u)).transpose()?;
    let (spec, gp) = build_extension(&tower, &a, &b, u)?;
    if json {
        return Ok(Outcome::ok(render(&serde_json::to_value(spec_to_json(&spec)).unwrap())));
    }
    let k = tower.k();
    let kx = tower.k_xi();
    let mut out = format!("# {}\n", tower.describe());
    writeln!(out, "A = {}", r.format(&a)).unwrap();
    writeln!(out, "B = {}", r.format(&b)).unwrap();
    writeln!(out, "a = {}", kx.format(&spec.a)).unwrap();
    writeln!(out, "u = {}", k.format(&spec.u)).unwrap();
    writeln!(out, "alpha = {}", k.format(&spec.alpha)).unwrap();
    writeln!(out, "eta = {}", tower.fq2().format(&spec.eta)).unwrap();
    writeln!(out, "P = {}", PolyRing::new(k, "X").format(&gp.poly)).unwrap();
    Ok(Outcome::ok(out))
}

fn classify(path1: &str, path2: &str, json: bool) -> Result<Outcome, Failure> {
    let s1 = read_spec(path1)?;
    let s2 = read_spec(path2)?;
    let result = isomorphic(&s1, &s2)?;
    if json {
        return Ok(Outcome::ok(render(&serde_json::to_value(classify_to_json(&result)).unwrap())));
    }
    let kx = s1.tower.k_xi();
    let mut out = format!("# {}\n", s1.tower.describe());
    match &result {
        Some((j, c)) => writeln!(out, "isomorphic: yes\nj = {j}\nwitness = {}", kx.format(c)).unwrap(),
        None => writeln!(out, "isomorphic: no").unwrap(),
    }
    Ok(Outcome::ok(out))
}

fn ramify(path: &str, json: bool) -> Result<Outcome, Failure> {
    let spec = read_spec(path)?;
    let records = ramification_table(&spec)?;
    if json {
        let rows = ramification_to_json(&spec.tower, &records);
        return Ok(Outcome::ok(render(&serde_json::to_value(rows).unwrap())));
    }
    let k = spec.tower.k();
    let mut out = format!("# {}\n# alpha = {}\n# u = {}\n", spec.tower.describe(), k.format(&spec.alpha), k.format(&spec.u));
    writeln!(out, "place\tdegree\tv_alpha\tv_u\tcase\te").unwrap();
    for r in &records {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}",
            r.place.format(&k),
            r.degree,
            r.v_alpha,
            r.v_u,
            r.case_tag.as_str(),
            r.e
        )
        .unwrap();
    }
    Ok(Outcome::ok(out))
}

/// Pairs `(A, B)` tried by `verify`, as coefficient lists over the prime field.
const SAMPLE_PAIRS: [(&[u64], &[u64]); 6] = [
    (&[0, 1], &[1]),
    (&[1, 0, 1], &[0, 1]),
    (&[1, 1], &[0, 0, 1]),
    (&[0, 0, 1], &[1, 1]),
    (&[1, 1, 1], &[1, 0, 1]),
    (&[1, 0, 0, 1], &[0, 1, 1]),
];

fn verify(ta: &TowerArgs, json: bool) -> Result<Outcome, Failure> {
    let tower = build_field_tower(ta.p, ta.n, ta.ell)?;
    let ell = ta.ell;
    let mut checks: Vec<(String, bool)> = Vec::new();

    checks.push((
        "reference forms".into(),
        REFERENCE_FORMS.iter().all(|(l, text)| format_symbolic(*l) == *text),
    ));

    let zu = PolyRing::new(ZZ::new(), "u");
    let u_sym = zu.gen();
    checks.push(("dickson equivalence".into(), build_q(&zu, ell, &u_sym) == dickson_oracle(&zu, ell, &u_sym)));

    checks.push((
        "bivariate identity".into(),
        bivariate_identity_check(ell, &ZZ::new()) && bivariate_identity_check(ell, &Fq::prime(tower.p())?),
    ));

    let zua = PolyRing::new(zu.clone(), "alpha");
    let (u2, alpha2) = (zua.constant(zu.gen()), zua.gen());
    let direct = build_p(&zua, ell, &u2, &alpha2).poly;
    checks.push((
        "composition chain".into(),
        ordered_factorizations(ell)
            .iter()
            .all(|f| compose_chain(&zua, f, ell, &u2, &alpha2).map(|c| c == direct).unwrap_or(false)),
    ));

    let k = tower.k();
    if ell.is_multiple_of(2) {
        let (u, alpha) = (k.gen(), k.add(&k.gen(), &k.one()));
        checks.push(("halving".into(), halve_even(&k, ell, &u, &alpha)?.1.holds));
    }

    let r = tower.fq_x();
    let kx = tower.k_xi();
    let mut norm_one = true;
    let mut hilbert = true;
    let mut roots = true;
    let mut ramification = true;
    let mut built = 0;
    for (a, b) in SAMPLE_PAIRS {
        let (a, b) = (r.from_coeffs(a.to_vec()), r.from_coeffs(b.to_vec()));
        let (d, _) = from_ab(&tower, &a, &b)?;
        norm_one &= kx.is_one(&kx.mul(&d, &kx.conj(&d)));
        let theta = hilbert90(&tower, &d)?;
        hilbert &= kx.div(&theta, &kx.conj(&theta)) == Some(d);
        let spec = match build_extension(&tower, &a, &b, None) {
            Ok((spec, _)) => spec,
            Err(Error::NotIrreducible | Error::Degenerate) => continue,
            Err(e) => return Err(e.into()),
        };
        built += 1;
        roots &= check_conjugates(&spec).passed(ell);
        ramification &= match ramification_table(&spec) {
            Ok(records) => records
                .iter()
                .all(|rec| ell.is_multiple_of(rec.e) && kummer_side_index(&spec, &rec.place).ok() == Some(rec.e)),
            Err(_) => false,
        };
    }
    checks.push(("norm one".into(), norm_one));
    checks.push(("hilbert 90".into(), hilbert));
    checks.push(("model roots".into(), roots && built > 0));
    checks.push(("ramification".into(), ramification && built > 0));

    let all = checks.iter().all(|(_, ok)| *ok);
    let stdout = if json {
        let items: Vec<Value> = checks.iter().map(|(n, ok)| json!({"name": n, "pass": ok})).collect();
        render(&json!({"tower": tower.to_json(), "checks": items, "pass": all}))
    } else {
        let mut out = format!("# {}\n", tower.describe());
        for (name, ok) in &checks {
            writeln!(out, "{} {name}", if *ok { "PASS" } else { "FAIL" }).unwrap();
        }
        out
    };
    Ok(Outcome { code: if all { 0 } else { 1 }, stdout, stderr: String::new() })
}

