use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use super::parse::{parse_poly, parse_word};
use crate::gsb::{
    assoc_check, check_gsb, complete, dim_oracle_with, irr_enumerate, preset_rules, random_lambdas,
    CompositionReport, LambdaMode, PresetKind, RuleSet, ORACLE_SEED,
};
use crate::gsb::{Ambiguity, AmbiguityKind};
use crate::lie_poly::{AssocPoly, Coefficient, LiePoly};
use crate::lyndon::std_bracket;
use crate::omega_words::Alphabet;

#[derive(Parser, Debug)]
#[command(
    name = "lieomega",
    version,
    about = "Gröbner–Shirshov bases in free Lie algebras with operators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Session {
    /// Generators, greatest first.
    #[arg(long, value_delimiter = ',', default_value = "x")]
    gens: Vec<String>,
    /// Operators as name:arity, greatest first; pass "" for none.
    #[arg(long, value_delimiter = ',', default_value = "P:1")]
    ops: Vec<String>,
    /// "symbolic" or a rational such as 2/3.
    #[arg(long, default_value = "symbolic")]
    lambda: String,
    /// Degree bound for ambiguities, bases and preset families.
    #[arg(long = "max-deg", default_value_t = 6)]
    max_deg: usize,
    /// Built-in rule family: rb, mrb, nij or perturbed.
    #[arg(long)]
    preset: Option<PresetKind>,
    /// File of rules, one polynomial per line, '#' starts a comment.
    #[arg(long)]
    rules: Option<PathBuf>,
    /// Emit JSON lines instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the standard bracketing of an ALSW word and its expansion.
    Bracket {
        #[command(flatten)]
        session: Session,
        #[arg(long)]
        word: String,
    },
    /// Reduce a polynomial modulo the rules.
    Normalize {
        #[command(flatten)]
        session: Session,
        #[arg(long)]
        poly: String,
    },
    /// Check every Lie composition up to the degree bound.
    CheckGsb {
        #[command(flatten)]
        session: Session,
    },
    /// Adjoin nontrivial compositions until none remain.
    Complete {
        #[command(flatten)]
        session: Session,
    },
    /// List the irreducible ALSW words by degree.
    Basis {
        #[command(flatten)]
        session: Session,
        /// Print counts only.
        #[arg(long)]
        count: bool,
    },
    /// Quotient dimensions by exact linear algebra.
    Oracle {
        #[command(flatten)]
        session: Session,
        /// Number of random values of λ.
        #[arg(long, default_value_t = 3)]
        samples: usize,
        #[arg(long, default_value_t = ORACLE_SEED)]
        seed: u64,
    },
    /// Check the associative compositions of the rule expansions.
    AssocCheck {
        #[command(flatten)]
        session: Session,
    },
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

struct Ctx {
    alphabet: Alphabet,
    lambda: LambdaMode,
    max_deg: usize,
    json: bool,
}

fn context(s: &Session) -> Result<Ctx, Failure> {
    let gens: Vec<&str> = s
        .gens
        .iter()
        .map(String::as_str)
        .filter(|g| !g.is_empty())
        .collect();
    let mut ops = Vec::new();
    for spec in s.ops.iter().filter(|o| !o.is_empty()) {
        let (name, arity) = spec
            .split_once(':')
            .ok_or_else(|| Failure(format!("operator `{spec}` must be written name:arity")))?;
        let arity: usize = arity
            .parse()
            .map_err(|_| Failure(format!("bad arity in `{spec}`")))?;
        ops.push((name, arity));
    }
    let alphabet = Alphabet::new(&gens, &ops)?;
    let lambda = match s.lambda.as_str() {
        "symbolic" => LambdaMode::Symbolic,
        text => LambdaMode::Specialized(
            text.parse::<BigRational>()
                .map_err(|_| Failure(format!("`{text}` is neither `symbolic` nor a rational")))?,
        ),
    };
    if s.max_deg == 0 {
        return Err(Failure("--max-deg must be at least 1".into()));
    }
    Ok(Ctx {
        alphabet,
        lambda,
        max_deg: s.max_deg,
        json: s.json,
    })
}

fn load_rules(s: &Session, ctx: &Ctx, max_deg: usize) -> Result<RuleSet, Failure> {
    let mut rules = match s.preset {
        Some(kind) => preset_rules(kind, &ctx.alphabet, max_deg, ctx.lambda.clone())?,
        None => RuleSet::new(&ctx.alphabet, ctx.lambda.clone()),
    };
    if let Some(path) = &s.rules {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let p = parse_poly(line, &ctx.alphabet)
                .map_err(|e| Failure(format!("{}:{}: {e}", path.display(), n + 1)))?;
            rules
                .push_monic(p)
                .map_err(|e| Failure(format!("{}:{}: {e}", path.display(), n + 1)))?;
        }
    }
    Ok(rules)
}

fn coeff_json(c: &Coefficient) -> Value {
    Value::String(c.to_string())
}

fn lie_json(p: &LiePoly) -> Value {
    Value::Array(
        p.trees()
            .map(|(t, c)| json!({ "coeff": coeff_json(c), "tree": t.to_string() }))
            .collect(),
    )
}

fn assoc_json(p: &AssocPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(w, c)| json!({ "coeff": coeff_json(c), "word": w.to_string() }))
            .collect(),
    )
}

fn ambiguity_json(a: &Ambiguity) -> Value {
    let mut v = json!({ "f": a.f, "g": a.g, "w": a.w.to_string(), "degree": a.w.degree() });
    let m = v.as_object_mut().expect("object");
    match &a.kind {
        AmbiguityKind::Intersection { a, b } => {
            m.insert("kind".into(), "intersection".into());
            m.insert("a".into(), a.to_string().into());
            m.insert("b".into(), b.to_string().into());
        }
        AmbiguityKind::Inclusion { pi } => {
            m.insert("kind".into(), "inclusion".into());
            m.insert("pi".into(), pi.to_string().into());
        }
    }
    v
}

fn emit(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string(v)?)?;
    Ok(())
}

fn report_checks<P: std::fmt::Display>(
    out: &mut dyn Write,
    ctx: &Ctx,
    rules: &RuleSet,
    reports: &[CompositionReport<P>],
    to_json: fn(&P) -> Value,
) -> Result<i32, Failure> {
    let nontrivial = reports.iter().filter(|r| !r.trivial).count();
    if ctx.json {
        for r in reports {
            let mut v = ambiguity_json(&r.ambiguity);
            let m = v.as_object_mut().expect("object");
            m.insert("trivial".into(), r.trivial.into());
            m.insert("normal_form".into(), to_json(&r.normal_form));
            emit(out, &v)?;
        }
        emit(
            out,
            &json!({ "summary": {
                "rules": rules.len(),
                "max_degree": ctx.max_deg,
                "compositions": reports.len(),
                "nontrivial": nontrivial,
            }}),
        )?;
    } else {
        writeln!(
            out,
            "{} rules, {} compositions up to degree {}",
            rules.len(),
            reports.len(),
            ctx.max_deg
        )?;
        for r in reports.iter().filter(|r| !r.trivial) {
            writeln!(out, "nontrivial  {}", r.ambiguity)?;
            writeln!(out, "  normal form: {}", r.normal_form)?;
        }
        if nontrivial == 0 {
            writeln!(out, "all compositions trivial")?;
        } else {
            writeln!(out, "{nontrivial} nontrivial")?;
        }
    }
    Ok(i32::from(nontrivial > 0))
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Command::Bracket { session, word } => {
            let ctx = context(&session)?;
            let u = parse_word(&word, &ctx.alphabet)?;
            let tree = std_bracket(&u)?;
            let expansion = LiePoly::basis(u.clone()).expand();
            if ctx.json {
                emit(
                    out,
                    &json!({
                        "word": u.to_string(),
                        "tree": tree.to_string(),
                        "degree": u.degree(),
                        "breadth": u.breadth(),
                        "depth": u.depth(),
                        "expansion": assoc_json(&expansion),
                    }),
                )?;
            } else {
                writeln!(out, "{tree}")?;
                writeln!(
                    out,
                    "deg {}  bre {}  dep {}",
                    u.degree(),
                    u.breadth(),
                    u.depth()
                )?;
                writeln!(out, "expansion: {expansion}")?;
            }
            Ok(0)
        }
        Command::Normalize { session, poly } => {
            let ctx = context(&session)?;
            let p = parse_poly(&poly, &ctx.alphabet)?;
            let p = match &ctx.lambda {
                LambdaMode::Symbolic => p,
                LambdaMode::Specialized(r) => p.specialize(r),
            };
            let rules = load_rules(&session, &ctx, ctx.max_deg.max(p.max_degree()))?;
            let nf = rules.reduce(&p);
            if ctx.json {
                emit(
                    out,
                    &json!({ "input": lie_json(&p), "normal_form": lie_json(&nf) }),
                )?;
            } else {
                writeln!(out, "{nf}")?;
            }
            Ok(0)
        }
        Command::CheckGsb { session } => {
            let ctx = context(&session)?;
            let rules = load_rules(&session, &ctx, ctx.max_deg)?;
            let reports = check_gsb(&rules, ctx.max_deg)?;
            report_checks(out, &ctx, &rules, &reports, lie_json)
        }
        Command::AssocCheck { session } => {
            let ctx = context(&session)?;
            let rules = load_rules(&session, &ctx, ctx.max_deg)?;
            let reports = assoc_check(&rules, ctx.max_deg)?;
            report_checks(out, &ctx, &rules, &reports, assoc_json)
        }
        Command::Complete { session } => {
            let ctx = context(&session)?;
            let rules = load_rules(&session, &ctx, ctx.max_deg)?;
            let done = complete(&rules, ctx.max_deg)?;
            for r in done.rules.rules() {
                let added = done.added.contains(&r.id());
                if ctx.json {
                    emit(
                        out,
                        &json!({
                            "id": r.id(),
                            "lead": r.lead().to_string(),
                            "added": added,
                            "poly": lie_json(r.poly()),
                        }),
                    )?;
                } else {
                    let mark = if added { "+" } else { " " };
                    writeln!(out, "{mark}{:>4}  {}", r.id(), r.poly())?;
                }
            }
            if ctx.json {
                emit(
                    out,
                    &json!({ "summary": {
                        "rules": done.rules.len(),
                        "added": done.added.len(),
                        "examined": done.examined,
                    }}),
                )?;
            } else {
                writeln!(
                    out,
                    "{} rules ({} added, {} compositions examined)",
                    done.rules.len(),
                    done.added.len(),
                    done.examined
                )?;
            }
            Ok(0)
        }
        Command::Basis { session, count } => {
            let ctx = context(&session)?;
            let rules = load_rules(&session, &ctx, ctx.max_deg)?;
            for (i, words) in irr_enumerate(&rules, ctx.max_deg).iter().enumerate() {
                let degree = i + 1;
                let trees: Vec<String> = words
                    .iter()
                    .map(|w| std_bracket(w).expect("ALSW").to_string())
                    .collect();
                if ctx.json {
                    let mut v = json!({ "degree": degree, "count": words.len() });
                    if !count {
                        v.as_object_mut()
                            .expect("object")
                            .insert("words".into(), trees.into());
                    }
                    emit(out, &v)?;
                } else {
                    writeln!(out, "degree {degree}: {}", words.len())?;
                    if !count {
                        for t in trees {
                            writeln!(out, "  {t}")?;
                        }
                    }
                }
            }
            Ok(0)
        }
        Command::Oracle {
            session,
            samples,
            seed,
        } => {
            let ctx = context(&session)?;
            if samples == 0 {
                return Err(Failure("--samples must be at least 1".into()));
            }
            let rules = load_rules(&session, &ctx, ctx.max_deg)?;
            let dims = dim_oracle_with(&rules, ctx.max_deg, &random_lambdas(samples, seed))?;
            for (i, d) in dims.iter().enumerate() {
                if ctx.json {
                    emit(out, &json!({ "degree": i + 1, "dim": d }))?;
                } else {
                    writeln!(out, "degree {}: {d}", i + 1)?;
                }
            }
            Ok(0)
        }
    }
}

/// Runs the command line `args` (program name first), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code: 0 on
/// success or when every composition is trivial, 1 when some composition
/// is not, 2 on a usage or input error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
