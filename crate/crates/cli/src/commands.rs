use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;

use serde::Serialize;

use extremal_core::builders::{b_m, greedy_tree, pendant_path_family, s_c_n, u_m, FamilyKind};
use extremal_core::degseq::{format_degrees, muirhead_chain, DegreeSequence};
use extremal_core::graphs::{parse_edge_list, to_dot, to_edge_list, Graph};
use extremal_core::indices::{
    classify as classify_fn, connectivity_function, parse_function, DEFAULT_GRID_BOUND,
};
use extremal_core::oracle::{
    verify_majorization_suite, verify_suite, Claim, EnumerationOptions, Oracle, Suite,
};

use crate::error::CliError;
use crate::{Format, Kind, SuiteArg};

type Outcome = Result<bool, CliError>;

macro_rules! out {
    ($($arg:tt)*) => {
        say(&format!("{}\n", format_args!($($arg)*)))?
    };
}

fn sequence(text: &str) -> Result<DegreeSequence, CliError> {
    Ok(text.parse::<DegreeSequence>()?)
}

fn json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(CliError::Json)
}

/// Write to stdout; a closed pipe ends output quietly.
fn say(text: &str) -> Result<(), CliError> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::io("<stdout>", e)),
        _ => Ok(()),
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::io(path, e)),
        None => say(text),
    }
}

fn kind_name(kind: Kind) -> String {
    clap::ValueEnum::to_possible_value(&kind)
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn oracle(workers: Option<usize>) -> Oracle {
    let opts = EnumerationOptions::default();
    Oracle::new(match workers {
        Some(w) => opts.with_workers(w),
        None => opts,
    })
}

#[derive(Serialize)]
struct ValidateReport {
    sequence: String,
    n: usize,
    c: usize,
    valid: bool,
}

pub fn validate(text: &str, as_json: bool) -> Outcome {
    let pi = sequence(text)?;
    let report = ValidateReport {
        sequence: format_degrees(pi.degrees()),
        n: pi.len(),
        c: pi.cyclic_class().0,
        valid: true,
    };
    if as_json {
        out!("{}", json(&report)?);
    } else {
        out!("n={} c={} valid", report.n, report.c);
    }
    Ok(true)
}

fn need<T>(value: Option<T>, flag: &str, kind: Kind) -> Result<T, CliError> {
    value.ok_or_else(|| {
        CliError::Usage(format!(
            "--{flag} is required for --kind {}",
            kind_name(kind)
        ))
    })
}

fn construct(
    kind: Kind,
    pi: Option<&str>,
    n: Option<usize>,
    k: Option<usize>,
) -> Result<Graph, CliError> {
    let seq = || sequence(need(pi, "pi", kind)?);
    let family = |fk: FamilyKind| -> Result<Graph, CliError> {
        Ok(pendant_path_family(
            fk,
            need(n, "n", kind)?,
            need(k, "k", kind)?,
        )?)
    };
    let star = |c: usize| -> Result<Graph, CliError> { Ok(s_c_n(c, need(n, "n", kind)?)?) };
    match kind {
        Kind::GreedyTree => Ok(greedy_tree(&seq()?)?),
        Kind::Um => Ok(u_m(&seq()?)?),
        Kind::Bm => Ok(b_m(&seq()?)?),
        Kind::F => family(FamilyKind::Tree),
        Kind::Fp => family(FamilyKind::Unicyclic),
        Kind::Fpp => family(FamilyKind::Bicyclic),
        Kind::S0 => star(0),
        Kind::S1 => star(1),
        Kind::S2 => star(2),
    }
}

pub fn build(
    kind: Kind,
    pi: Option<&str>,
    n: Option<usize>,
    k: Option<usize>,
    format: Format,
    output: Option<&Path>,
) -> Outcome {
    let g = construct(kind, pi, n, k)?;
    let text = match format {
        Format::EdgeList => to_edge_list(&g),
        Format::Dot => to_dot(&g, &kind_name(kind)),
        Format::Json => json(&g)? + "\n",
    };
    emit(&text, output)?;
    Ok(true)
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::io(path, e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    }
    if text.trim_start().starts_with('{') {
        serde_json::from_str(&text).map_err(CliError::Json)
    } else {
        Ok(parse_edge_list(&text)?)
    }
}

pub fn eval(name: &str, path: &Path) -> Outcome {
    let f = parse_function(name)?;
    let g = read_graph(path)?;
    out!("{}", connectivity_function(&g, &f)?);
    Ok(true)
}

pub fn classify(name: &str, d: Option<usize>, pi: Option<&str>) -> Outcome {
    let f = parse_function(name)?;
    let floor = match pi {
        Some(text) => DEFAULT_GRID_BOUND.max(sequence(text)?.max_degree() + 1),
        None => DEFAULT_GRID_BOUND,
    };
    let d = d.unwrap_or(floor);
    if d < 2 {
        return Err(CliError::Usage(format!("--D must be at least 2, got {d}")));
    }
    say(&(json(&classify_fn(&f, d))?
        + "
"))?;
    Ok(true)
}

#[derive(Serialize)]
struct Record<'a, T> {
    record: &'static str,
    #[serde(flatten)]
    body: &'a T,
}

pub fn verify(
    suite: SuiteArg,
    max_n: usize,
    name: &str,
    output: Option<&Path>,
    workers: Option<usize>,
) -> Outcome {
    let f = parse_function(name)?;
    let suite = match suite {
        SuiteArg::Tree => Suite::Tree,
        SuiteArg::Unicyclic => Suite::Unicyclic,
        SuiteArg::Bicyclic => Suite::Bicyclic,
    };
    let oracle = oracle(workers);
    let reports = verify_suite(suite, max_n, &f, &oracle)?;
    let verdicts = verify_majorization_suite(suite.class(), max_n, &f, &oracle)?;

    if let Some(path) = output {
        let file = File::create(path).map_err(|e| CliError::io(path, e))?;
        let mut out = BufWriter::new(file);
        let mut line = |text: String| writeln!(out, "{text}").map_err(|e| CliError::io(path, e));
        for r in &reports {
            let rec = Record {
                record: "extremal",
                body: r,
            };
            line(serde_json::to_string(&rec).map_err(CliError::Json)?)?;
        }
        for v in &verdicts {
            let rec = Record {
                record: "majorization",
                body: v,
            };
            line(serde_json::to_string(&rec).map_err(CliError::Json)?)?;
        }
        out.flush().map_err(|e| CliError::io(path, e))?;
    }

    let bad_reports = reports.iter().filter(|r| !r.passed()).count();
    let claim = verdicts.first().map(|v| v.claim);
    let bad_pairs = verdicts
        .iter()
        .filter(|v| !v.strict_inequality_holds)
        .count();
    out!("suite {suite:?}, f = {f}, 3 <= n <= {max_n}");
    out!(
        "extremal: {} sequences, {bad_reports} failed",
        reports.len()
    );
    for r in reports.iter().filter(|r| !r.passed()) {
        out!(
            "  {}: optimum {} vs {} {:?}",
            r.pi,
            r.optimum_value,
            r.constructor.unwrap_or("construction"),
            r.constructor_value.map(|v| v.to_string())
        );
    }
    let label = match claim {
        Some(Claim::ConjectureCheck) => "conjecture check",
        _ => "theorem",
    };
    out!(
        "majorization ({label}): {} pairs, {bad_pairs} failed",
        verdicts.len()
    );
    let theorem_failed = claim == Some(Claim::Theorem) && bad_pairs > 0;
    Ok(bad_reports == 0 && !theorem_failed)
}

pub fn majorize(pi: &str, pi_prime: &str, name: &str, workers: Option<usize>) -> Outcome {
    let f = parse_function(name)?;
    let (a, b) = (sequence(pi)?, sequence(pi_prime)?);
    let v = oracle(workers).majorization(&a, &b, &f)?;
    out!(
        "{}",
        json(&Record {
            record: "majorization",
            body: &v,
        })?
    );
    Ok(v.claim != Claim::Theorem || v.strict_inequality_holds)
}

pub fn chain(pi: &str, pi_prime: &str) -> Outcome {
    let (a, b) = (sequence(pi)?, sequence(pi_prime)?);
    for step in muirhead_chain(&a, &b)? {
        out!("{step}");
    }
    Ok(true)
}
