//! `qsk`: computations in quiver Schur algebras and Hall structures, verification suites
//! and tables of classes, cosets and refinement data.

use clap::{Args, Parser, Subcommand};
use qsk::hall::{Coha, Cohm};
use qsk::poly::classes::{class_e, class_s, relative_e, relative_s, theta_e, theta_r, theta_s};
use qsk::poly::RootProduct;
use qsk::schur::{Graded, Key, MixedSchurAlgebra, Realization, SchurAlgebra};
use qsk::verify::{self, Config};
use qsk::weyl::{
    kinds, min_double_coset_reps, parabolic, theta_kinds, theta_parabolic, OrbitDatum, Parabolic, ThetaOrbitDatum,
};
use qsk::{Comp, Error, IsoComp, Polynomial, Quiver};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qsk", version, about = "Quiver Schur algebras, CoHA and CoHM as exact polynomial operators")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct QuiverArg {
    /// Quiver JSON file, or a built-in name: jordan, or aN for the linear quiver 1 → ⋯ → N.
    #[arg(long, default_value = "a1")]
    quiver: String,
}

#[derive(Subcommand)]
enum Command {
    /// CoHA product m(f, g) of f ∈ H_a and g ∈ H_b, with --comp "(a,b)".
    Mul {
        #[command(flatten)]
        q: QuiverArg,
        #[arg(long)]
        comp: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// CoHM action of f ∈ H_a on v ∈ θM_b, with --comp "(a|b)".
    Act {
        #[command(flatten)]
        q: QuiverArg,
        #[arg(long)]
        comp: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        v: String,
    },
    /// Merge from the component at --comp to the coarser --to.
    Merge {
        #[command(flatten)]
        q: QuiverArg,
        #[arg(long)]
        comp: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        f: String,
    },
    /// Split from the component at --comp to the finer --to.
    Split {
        #[command(flatten)]
        q: QuiverArg,
        #[arg(long)]
        comp: String,
        #[arg(long)]
        to: String,
        #[arg(long)]
        f: String,
    },
    /// Components of the CoHA coproduct of f ∈ H_c: one composition with --comp, or every
    /// two-part composition of --dim.
    Comul {
        #[command(flatten)]
        q: QuiverArg,
        #[arg(long, conflicts_with = "comp", required_unless_present = "comp")]
        dim: Option<String>,
        #[arg(long)]
        comp: Option<String>,
        #[arg(long)]
        f: String,
    },
    /// Run a verification suite; exits 1 when a check fails.
    Verify {
        /// One of the names listed by `qsk verify --help`.
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(verify::SUITES))]
        suite: String,
        /// Replaces the suite's default quivers.
        #[arg(long)]
        quiver: Option<String>,
        /// Bound on the total dimension (rank for the isotropic and coset suites).
        #[arg(long)]
        dim: Option<u32>,
        /// Degree bound for basis inputs.
        #[arg(long)]
        degree: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// S/E classes (θS/θE for "(a|b)"), and with --to the double coset representatives
    /// and their refinement data.
    Tables {
        #[command(flatten)]
        q: QuiverArg,
        /// The composition d.
        #[arg(long)]
        comp: String,
        /// A second composition e with the same total.
        #[arg(long)]
        to: Option<String>,
        /// Comma-separated reduced word for u; keeps the representatives it applies to.
        #[arg(long, requires = "to")]
        word: Option<String>,
    },
}

/// Errors exit with code 2; failing checks exit with code 1.
type CliResult<T> = qsk::Result<T>;

/// The text and JSON forms of one command's output.
struct Output {
    text: String,
    json: Value,
    passed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Output {
        Output { text, json, passed: true }
    }
}

fn load_quiver(arg: &str) -> qsk::Result<Quiver> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Structure(format!("{}: {}", arg, e)))?;
        return Quiver::from_json(&text);
    }
    let name = arg.to_ascii_lowercase();
    if name == "jordan" {
        return Ok(Quiver::jordan());
    }
    match name.strip_prefix('a').and_then(|n| n.parse::<usize>().ok()) {
        Some(n) if n >= 1 => Ok(Quiver::linear(n)),
        _ => Err(Error::Structure(format!("{:?} is neither a readable file nor a built-in name (jordan, a1, a2, ...)", arg))),
    }
}

fn is_iso(s: &str) -> bool {
    s.contains('|')
}

fn poly(q: &Quiver, s: &str) -> qsk::Result<Polynomial> {
    Polynomial::parse(s, &q.vertices)
}

fn element_output<K: Key>(q: &Quiver, x: &Graded<K>) -> Output {
    Output::ok(x.to_text(&q.vertices), x.to_json(&q.vertices))
}

fn poly_output(q: &Quiver, f: &Polynomial) -> Output {
    let t = f.to_text(&q.vertices);
    Output::ok(t.clone(), json!(t))
}

fn cmd_mul(q: &Quiver, comp: &str, f: &str, g: &str) -> CliResult<Output> {
    let d = q.parse_comp(comp)?;
    if d.len() != 2 {
        return Err(Error::Argument(format!("mul needs a two-part composition (a,b); got {}", d)));
    }
    let coha = Coha::new(q);
    let out = coha.mul(d.part(0), &poly(q, f)?, d.part(1), &poly(q, g)?)?;
    Ok(poly_output(q, &out))
}

fn cmd_act(q: &Quiver, comp: &str, f: &str, v: &str) -> CliResult<Output> {
    let d = q.parse_iso(comp)?;
    if d.len() != 1 {
        return Err(Error::Argument(format!("act needs a two-block composition (a|b); got {}", d)));
    }
    let m = Cohm::new(q)?;
    let out = m.act(d.part(0), &poly(q, f)?, d.inf(), &poly(q, v)?)?;
    Ok(poly_output(q, &out))
}

fn move_in<R: Realization>(r: &R, merge: bool, from: &str, to: &str, f: &Polynomial) -> CliResult<Output> {
    let (d, e) = (r.parse_key(from)?, r.parse_key(to)?);
    let x = Graded::single(d.clone(), f.clone());
    let out = if merge { r.apply_merge(&d, &e, &x)? } else { r.apply_split(&d, &e, &x)? };
    Ok(element_output(r.quiver(), &out))
}

fn cmd_move(q: &Quiver, merge: bool, from: &str, to: &str, f: &str) -> CliResult<Output> {
    let f = poly(q, f)?;
    if is_iso(from) {
        let d = q.parse_iso(from)?;
        let z = MixedSchurAlgebra::new(q, &d.total(&q.inv()?.vertex_map))?;
        move_in(&z, merge, from, to, &f)
    } else {
        let z = SchurAlgebra::new(q, &q.parse_comp(from)?.total())?;
        move_in(&z, merge, from, to, &f)
    }
}

fn cmd_comul(q: &Quiver, dim: Option<&str>, comp: Option<&str>, f: &str) -> CliResult<Output> {
    let f = poly(q, f)?;
    let comps = match (comp, dim) {
        (Some(d), _) => vec![q.parse_comp(d)?],
        (None, Some(c)) => Comp::all_of(&q.parse_dim(c)?).into_iter().filter(|d| d.len() == 2).collect(),
        (None, None) => unreachable!("clap requires --dim or --comp"),
    };
    let coha = Coha::new(q);
    let mut x: Graded<Comp> = Graded::zero();
    for d in comps {
        let g = coha.comul_component(&d, &f)?;
        x.add(d, &g);
    }
    Ok(element_output(q, &x))
}

fn cmd_verify(suite: &str, quiver: Option<&str>, dim: Option<u32>, degree: Option<u32>, seed: u64) -> CliResult<Output> {
    let quiver = match quiver {
        Some(s) => Some((s.to_string(), load_quiver(s)?)),
        None => None,
    };
    let report = verify::run_suite(suite, &Config { dim, degree, seed, quiver })?;
    Ok(Output { text: report.to_text().trim_end().to_string(), json: report.to_json(), passed: report.passed() })
}

struct Table {
    text: Vec<String>,
    json: serde_json::Map<String, Value>,
}

impl Table {
    fn new() -> Table {
        Table { text: Vec::new(), json: serde_json::Map::new() }
    }

    fn line(&mut self, key: &str, label: &str, value: impl Into<String>) {
        let value = value.into();
        self.text.push(format!("{} = {}", label, value));
        self.json.insert(key.to_string(), json!(value));
    }
}

fn product_text(q: &Quiver, p: &RootProduct) -> String {
    p.to_text(&q.vertices)
}

fn parse_word(s: &str) -> qsk::Result<Vec<usize>> {
    s.split(',')
        .map(|t| t.trim().trim_start_matches("s_").parse::<usize>().map_err(|_| Error::Parse(format!("bad word entry {:?}", t))))
        .collect()
}

fn word_text(word: &[usize]) -> String {
    if word.is_empty() {
        return "id".to_string();
    }
    word.iter().map(|j| format!("s_{}", j)).collect::<Vec<_>>().join(" ")
}

fn tables_ordinary(q: &Quiver, comp: &str, to: Option<&str>, word: Option<&[usize]>) -> CliResult<Output> {
    let d = q.parse_comp(comp)?;
    let c = d.total();
    let mut t = Table::new();
    t.line("c", "c", c.to_text());
    t.line("d", "d", d.to_text());
    t.line("S_d", "S_d", product_text(q, &class_s(&d)));
    t.line("E_d", "E_d", product_text(q, &class_e(q, &d)?));
    let mut reps_json = Vec::new();
    if let Some(to) = to {
        let e = q.parse_comp(to)?;
        if e.total() != c {
            return Err(Error::Argument(format!("{} and {} have different totals", d, e)));
        }
        t.line("e", "e", e.to_text());
        if d.refines(&e).is_some() {
            t.line("S^e_d", "S^e_d", product_text(q, &relative_s(&d, &e)?));
            t.line("E^e_d", "E^e_d", product_text(q, &relative_e(q, &d, &e)?));
        }
        let reps = min_double_coset_reps(&Parabolic::whole(&kinds(&c)), &parabolic(&e), &parabolic(&d));
        t.text.push(format!("W_e\\W_c/W_d: {} representatives", reps.len()));
        for w in reps {
            let od = OrbitDatum::new(e.clone(), d.clone(), w.clone())?;
            let (lam, mu) = od.partitionings();
            let rd = od.refinement_datum();
            let cd = match word {
                Some(wd) => match rd.crossing_datum_with_word(wd) {
                    Ok(cd) => cd,
                    Err(_) => continue,
                },
                None => rd.crossing_datum(),
            };
            let (ut, total) = cd.utilde();
            let steps: Vec<String> = cd.steps.iter().map(|s| s.to_text()).collect();
            t.text.push(format!("w = {}", w));
            t.text.push(format!("  λ = {}", lam.to_text(q)));
            t.text.push(format!("  μ = {}", mu.to_text(q)));
            t.text.push(format!("  ê = {}", rd.e_hat.to_text()));
            t.text.push(format!("  d̂ = {}", rd.d_hat.to_text()));
            t.text.push(format!("  u = {} = {}", rd.u, word_text(&cd.word)));
            for (m, s) in steps.iter().enumerate() {
                t.text.push(format!("  e^{} = {}", m, s));
            }
            t.text.push(format!("  ũ = {}, Σℓ(w_l) = {}", ut, total));
            reps_json.push(json!({
                "w": w.to_string(),
                "lambda": lam.to_text(q),
                "mu": mu.to_text(q),
                "e_hat": rd.e_hat.to_text(),
                "d_hat": rd.d_hat.to_text(),
                "u": rd.u.to_string(),
                "word": cd.word,
                "steps": steps,
                "u_tilde": ut.to_string(),
                "length_sum": total,
            }));
        }
        t.json.insert("representatives".into(), Value::Array(reps_json));
    }
    Ok(Output::ok(t.text.join("\n"), Value::Object(t.json)))
}

fn tables_theta(q: &Quiver, comp: &str, to: Option<&str>, word: Option<&[usize]>) -> CliResult<Output> {
    let d = q.parse_iso(comp)?;
    let vm = q.inv()?.vertex_map.clone();
    let c = d.total(&vm);
    let mut t = Table::new();
    t.line("c", "c", c.to_text());
    t.line("d", "d", d.to_string());
    if d.len() <= 1 {
        t.line("theta_S_d", "θS_d", product_text(q, &theta_s(q, &d)?));
        t.line("theta_E_d", "θE_d", product_text(q, &theta_e(q, &d)?));
        t.line("theta_r_d", "θr_d", theta_r(q, &d)?.to_string());
    }
    if let Some(to) = to {
        let e: IsoComp = q.parse_iso(to)?;
        if e.total(&vm) != c {
            return Err(Error::Argument(format!("{} and {} have different totals", d, e)));
        }
        t.line("e", "e", e.to_string());
        let whole = Parabolic::whole(&theta_kinds(q, &c)?);
        let reps = min_double_coset_reps(&whole, &theta_parabolic(q, &e)?, &theta_parabolic(q, &d)?);
        t.text.push(format!("θW_e\\θW_c/θW_d: {} representatives", reps.len()));
        let mut reps_json = Vec::new();
        for w in reps {
            let od = ThetaOrbitDatum::new(q, e.clone(), d.clone(), w.clone())?;
            let (lam, mu) = od.partitionings(q)?;
            let rd = od.refinement_datum(q)?;
            let cd = match word {
                Some(wd) => match rd.crossing_datum_with_word(q, wd) {
                    Ok(cd) => cd,
                    Err(_) => continue,
                },
                None => rd.crossing_datum(q)?,
            };
            let (ut, total) = cd.utilde(q)?;
            let steps: Vec<String> = cd.steps.iter().map(|s| s.to_string()).collect();
            t.text.push(format!("w = {}", w));
            t.text.push(format!("  λ = {}", lam.to_text(q)));
            t.text.push(format!("  μ = {}", mu.to_text(q)));
            t.text.push(format!("  ê = {}", rd.e_hat));
            t.text.push(format!("  d̂ = {}", rd.d_hat));
            t.text.push(format!("  u = {} = {}", rd.u, word_text(&cd.word)));
            for (m, s) in steps.iter().enumerate() {
                t.text.push(format!("  e^{} = {}", m, s));
            }
            t.text.push(format!("  ũ = {}, Σℓ(w_l) = {}", ut, total));
            reps_json.push(json!({
                "w": w.to_string(),
                "lambda": lam.to_text(q),
                "mu": mu.to_text(q),
                "e_hat": rd.e_hat.to_string(),
                "d_hat": rd.d_hat.to_string(),
                "u": rd.u.to_string(),
                "word": cd.word,
                "steps": steps,
                "u_tilde": ut.to_string(),
                "length_sum": total,
            }));
        }
        t.json.insert("representatives".into(), Value::Array(reps_json));
    }
    Ok(Output::ok(t.text.join("\n"), Value::Object(t.json)))
}

fn cmd_tables(q: &Quiver, comp: &str, to: Option<&str>, word: Option<&str>) -> CliResult<Output> {
    let word = word.map(parse_word).transpose()?;
    if is_iso(comp) {
        tables_theta(q, comp, to, word.as_deref())
    } else {
        tables_ordinary(q, comp, to, word.as_deref())
    }
}

fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Mul { q, comp, f, g } => cmd_mul(&load_quiver(&q.quiver)?, comp, f, g),
        Command::Act { q, comp, f, v } => cmd_act(&load_quiver(&q.quiver)?, comp, f, v),
        Command::Merge { q, comp, to, f } => cmd_move(&load_quiver(&q.quiver)?, true, comp, to, f),
        Command::Split { q, comp, to, f } => cmd_move(&load_quiver(&q.quiver)?, false, comp, to, f),
        Command::Comul { q, dim, comp, f } => cmd_comul(&load_quiver(&q.quiver)?, dim.as_deref(), comp.as_deref(), f),
        Command::Verify { suite, quiver, dim, degree, seed } => cmd_verify(suite, quiver.as_deref(), *dim, *degree, *seed),
        Command::Tables { q, comp, to, word } => cmd_tables(&load_quiver(&q.quiver)?, comp, to.as_deref(), word.as_deref()),
    }
}

fn configure_threads() -> CliResult<()> {
    let Ok(s) = std::env::var("QSK_THREADS") else { return Ok(()) };
    let n: usize = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("QSK_THREADS must be a positive integer; got {:?}", s)))?;
    if n == 0 {
        return Err(Error::Parse("QSK_THREADS must be a positive integer; got 0".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Error::Structure(format!("thread pool: {}", e)))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match configure_threads().and_then(|()| run(&cli)) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("JSON values serialize"));
            } else {
                println!("{}", out.text);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(error) => {
            if cli.json {
                let v = json!({ "error": { "kind": error.kind(), "message": error.message() } });
                println!("{}", serde_json::to_string_pretty(&v).expect("JSON values serialize"));
            } else {
                eprintln!("error: {}", error);
            }
            ExitCode::from(2)
        }
    }
}
