use std::fs;
use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};
use splice_algebra::{
    associator, audit_adjacency_restriction, check_f_equations, check_f_symmetry,
    check_identity_with, identity_defect_poly, AdjacencyRelation, Alphabet, Error, IdentityKind,
    IdentityReport, InsertionOperator, Polynomial, SearchMode, SearchOptions, WeightFunction,
    WeightTable,
};

use crate::args::{
    AssociatorArgs, AuditArgs, CheckFArgs, CheckIdentityArgs, Cli, Command, InsertArgs, ModeArg,
    OpArgs, OpKind,
};
use crate::fixtures;

/// Exit codes: 0 holds, 1 violation found, 2 usage or configuration, 3 domain error.
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Domain(_) => EXIT_DOMAIN,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) => m,
        }
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn domain(e: Error) -> Failure {
    match e {
        Error::InvalidSearch(_) => Failure::Usage(e.to_string()),
        _ => Failure::Domain(e.to_string()),
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Usage(format!("write failed: {e}"))
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    match &cli.command {
        Command::Insert(a) => cmd_insert(cli, a, out),
        Command::Associator(a) => cmd_associator(cli, a, out),
        Command::CheckIdentity(a) => cmd_check_identity(cli, a, out),
        Command::CheckF(a) => cmd_check_f(a, out),
        Command::Audit(a) => cmd_audit(a, out),
        Command::Repro(a) => fixtures::cmd_repro(cli, a, out),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

pub fn load_weight(spec: &str) -> Result<WeightFunction, Failure> {
    if let Some(path) = spec.strip_prefix("table:") {
        let text = read_file(Path::new(path))?;
        return WeightTable::from_json_str(&text)
            .map(WeightFunction::Table)
            .map_err(usage);
    }
    match WeightFunction::parse_family(spec) {
        Ok(f) => Ok(f),
        Err(e) if Path::new(spec).is_file() => {
            let text = read_file(Path::new(spec))?;
            WeightTable::from_json_str(&text)
                .map(WeightFunction::Table)
                .map_err(|t| usage(format!("{e}; as a table file: {t}")))
        }
        Err(e) => Err(usage(e)),
    }
}

fn parse_forbid(alphabet: &Alphabet, text: &str) -> Result<AdjacencyRelation, Failure> {
    let mut pairs = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let cs: Vec<char> = item.chars().collect();
        match cs.as_slice() {
            [a, b] => pairs.push((*a, *b)),
            _ => {
                return Err(usage(format!(
                    "forbidden pair {item:?} must be two letters"
                )))
            }
        }
    }
    AdjacencyRelation::with_forbidden(alphabet, &pairs).map_err(usage)
}

/// Resolves the operator and the alphabet it works over.
pub fn build_operator(
    cli_alphabet: Option<&str>,
    args: &OpArgs,
) -> Result<(InsertionOperator, Alphabet), Failure> {
    let declared = cli_alphabet
        .map(|s| Alphabet::parse(s).map_err(|e| usage(format!("--alphabet: {e}"))))
        .transpose()?;
    if args.op != OpKind::Weighted && args.f.is_some() {
        return Err(usage("--f only applies to --op weighted"));
    }
    if args.op != OpKind::Adjacency && (args.rel.is_some() || args.forbid.is_some()) {
        return Err(usage("--rel/--forbid only apply to --op adjacency"));
    }
    let need_alphabet = || {
        declared
            .clone()
            .ok_or_else(|| usage("--alphabet is required"))
    };

    let op = match args.op {
        OpKind::Simple => InsertionOperator::Simple,
        OpKind::Delta => InsertionOperator::DeltaRestricted,
        OpKind::Sync => InsertionOperator::Synchronized,
        OpKind::Weighted => {
            let spec = args
                .f
                .as_deref()
                .ok_or_else(|| usage("--op weighted requires --f"))?;
            InsertionOperator::Weighted(load_weight(spec)?)
        }
        OpKind::Adjacency => {
            let rel = match (&args.rel, &args.forbid) {
                (Some(path), _) => {
                    let rel = AdjacencyRelation::from_json_str(&read_file(path)?).map_err(usage)?;
                    if let Some(a) = &declared {
                        if a != rel.alphabet() {
                            return Err(usage(format!(
                                "--alphabet {a} differs from the relation's alphabet {}",
                                rel.alphabet()
                            )));
                        }
                    }
                    rel
                }
                (None, Some(pairs)) => parse_forbid(&need_alphabet()?, pairs)?,
                (None, None) => AdjacencyRelation::full(&need_alphabet()?),
            };
            let alphabet = rel.alphabet().clone();
            return Ok((InsertionOperator::AdjacencyRestricted(rel), alphabet));
        }
    };
    Ok((op, need_alphabet()?))
}

fn poly(alphabet: &Alphabet, text: &str) -> Result<Polynomial, Failure> {
    Polynomial::parse(text, alphabet).map_err(domain)
}

fn print_result(cli: &Cli, p: &Polynomial, out: &mut dyn Write) -> Result<(), Failure> {
    if cli.json {
        writeln!(out, "{}", json!({ "result": p.to_string() })).map_err(io)
    } else {
        writeln!(out, "{p}").map_err(io)
    }
}

fn cmd_insert(cli: &Cli, a: &InsertArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (op, alphabet) = build_operator(cli.alphabet.as_deref(), &a.op)?;
    let (x, y) = (poly(&alphabet, &a.x)?, poly(&alphabet, &a.y)?);
    let p = op.apply(&x, &y).map_err(domain)?;
    print_result(cli, &p, out)?;
    Ok(0)
}

fn cmd_associator(cli: &Cli, a: &AssociatorArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let (op, alphabet) = build_operator(cli.alphabet.as_deref(), &a.op)?;
    let kind: IdentityKind = a.identity.parse().map_err(usage)?;
    let (x, y, z) = (
        poly(&alphabet, &a.x)?,
        poly(&alphabet, &a.y)?,
        poly(&alphabet, &a.z)?,
    );
    let p = if a.defect {
        identity_defect_poly(&op, kind, &x, &y, &z)
    } else {
        associator(&op, &x, &y, &z)
    }
    .map_err(domain)?;
    print_result(cli, &p, out)?;
    Ok(0)
}

fn write_identity_text(r: &IdentityReport, out: &mut dyn Write) -> std::io::Result<()> {
    let mode = match r.mode {
        SearchMode::Exhaustive => "exhaustive".to_string(),
        SearchMode::Random { seed, trials } => format!("random (seed {seed}, trials {trials})"),
    };
    writeln!(out, "op: {}", r.operator)?;
    writeln!(out, "identity: {}", r.identity)?;
    writeln!(
        out,
        "search: {mode}, alphabet {}, max-len {}, include-empty {}",
        r.alphabet, r.max_total_length, r.include_empty
    )?;
    writeln!(out, "tuples checked: {}", r.tuples_checked)?;
    match &r.witness {
        None => writeln!(out, "result: holds"),
        Some(w) => {
            let f = |word| r.alphabet.format_word(word);
            writeln!(out, "result: violated")?;
            writeln!(out, "witness: x={} y={} z={}", f(&w.x), f(&w.y), f(&w.z))?;
            writeln!(out, "defect: {}", w.defect)
        }
    }
}

fn cmd_check_identity(
    cli: &Cli,
    a: &CheckIdentityArgs,
    out: &mut dyn Write,
) -> Result<i32, Failure> {
    let (op, alphabet) = build_operator(cli.alphabet.as_deref(), &a.op)?;
    let kind: IdentityKind = a.identity.parse().map_err(usage)?;
    let mode = match a.mode {
        ModeArg::Exhaustive => SearchMode::Exhaustive,
        ModeArg::Random => SearchMode::Random {
            seed: cli.seed,
            trials: a.trials,
        },
    };
    let mut opts = SearchOptions {
        include_empty: a.include_empty,
        ..SearchOptions::default()
    };
    if let Some(c) = a.ceiling {
        opts.ceiling = c;
    }
    let report =
        check_identity_with(&op, kind, &alphabet, a.max_len, mode, &opts).map_err(domain)?;
    if cli.json {
        writeln!(out, "{}", report.to_json()).map_err(io)?;
    } else {
        write_identity_text(&report, out).map_err(io)?;
    }
    Ok(if report.passed { 0 } else { EXIT_VIOLATION })
}

fn cmd_check_f(a: &CheckFArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let f = load_weight(&a.f)?;
    let report = check_f_equations(&f, a.bound).map_err(domain)?;
    let mut passed = report.passed;
    let mut value: Value = serde_json::to_value(&report).expect("report serializes");
    if a.symmetry {
        let sym = check_f_symmetry(&f, a.bound).map_err(domain)?;
        passed &= sym.symmetric;
        value["symmetry"] = serde_json::to_value(&sym).expect("report serializes");
    }
    writeln!(out, "{value}").map_err(io)?;
    Ok(if passed { 0 } else { EXIT_VIOLATION })
}

fn cmd_audit(a: &AuditArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let report = audit_adjacency_restriction(a.max_len).map_err(domain)?;
    writeln!(out, "{}", report.to_json()).map_err(io)?;
    Ok(if report.all_agree() {
        0
    } else {
        EXIT_VIOLATION
    })
}
