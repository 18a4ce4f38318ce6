//! Command line front end: enumeration, products, series, and verification
//! with text or JSON output.
//!
//! Everything written to standard output is a pure function of the flags
//! (including `--seed`), byte for byte. Timings and warnings go to standard
//! error.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use bracetree::{
    brace, brace_hilbert, check_brace, check_e1, check_nap, check_prelie, check_shuffle,
    decoration_series, enumerate_planar, enumerate_rooted, generator_hilbert, parallel_enabled,
    parse_forest, parse_planar, parse_rooted, prelie_hilbert, prelie_planar, prelie_rooted,
    shuffle, star_planar, star_rooted, verify_nap_freeness, verify_prelie_generation, w_sequence,
    DecorationAlphabet, FreenessOptions, FreenessReport, LinComb, SuiteOptions, SuiteReport,
};

/// Parses `argv` and runs the selected subcommand, writing results to `out`
/// and diagnostics to `err`. Returns the process exit code: 0 on success,
/// 1 when a verification fails, 2 on usage or expression errors.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                0
            } else {
                let _ = write!(err, "{}", e.render());
                2
            };
        }
    };
    let result = match &cli.command {
        Command::Enum(args) => run_enum(args, cli.json),
        Command::Prod(args) => run_prod(args, cli.json),
        Command::Series(args) => run_series(args, cli.json),
        Command::Verify(args) => run_verify(args, cli.json, err),
    };
    match result {
        Ok(run) => {
            if let Some(path) = &cli.output {
                if let Err(e) = std::fs::write(path, &run.payload) {
                    let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                    return 2;
                }
            } else {
                let _ = out.write_all(run.payload.as_bytes());
            }
            i32::from(run.failed)
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

/// Payload for standard output plus the verification verdict.
struct Run {
    payload: String,
    failed: bool,
}

impl Run {
    fn ok(payload: String) -> Result<Run, String> {
        Ok(Run {
            payload,
            failed: false,
        })
    }

    fn failed(payload: String) -> Result<Run, String> {
        Ok(Run {
            payload,
            failed: true,
        })
    }
}

#[derive(Parser)]
#[command(
    name = "bracetree",
    version,
    about = "Exact computer algebra on decorated rooted trees",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write the result to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List every tree of one weight in canonical order.
    Enum(EnumArgs),
    /// Evaluate a product of trees.
    Prod(ProdArgs),
    /// Print a dimension or generator-count series.
    Series(SeriesArgs),
    /// Check the algebra laws or the freeness theorem; exits 1 on failure.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Ordered children.
    Planar,
    /// Children as a sorted multiset.
    Rooted,
}

#[derive(Args)]
struct AlphabetArgs {
    /// Comma-separated decoration symbols, e.g. `a,b,c`.
    #[arg(long, value_name = "SYMBOLS", conflicts_with = "alphabet_size")]
    alphabet: Option<String>,
    /// Shorthand for the symbols `x1,..,xD`.
    #[arg(long, value_name = "D")]
    alphabet_size: Option<usize>,
    /// Comma-separated positive grades, one per symbol.
    #[arg(long, value_name = "GRADES")]
    grades: Option<String>,
}

impl AlphabetArgs {
    /// Resolves the flags to an alphabet. `expressions` supplies the texts
    /// to harvest symbols from when no flag names them; with no flags and
    /// no expressions the alphabet is the single symbol `a`.
    fn build(&self, expressions: &[&str]) -> Result<DecorationAlphabet, String> {
        let symbols: Vec<String> = if let Some(list) = &self.alphabet {
            list.split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect()
        } else if let Some(d) = self.alphabet_size {
            (1..=d).map(|i| format!("x{i}")).collect()
        } else if self.grades.is_some() {
            return Err("--grades needs --alphabet or --alphabet-size".into());
        } else if expressions.is_empty() {
            vec!["a".into()]
        } else {
            let found = scan_symbols(expressions);
            if found.is_empty() {
                return Err("no decoration symbols in the expressions; pass --alphabet".into());
            }
            found
        };
        if symbols.is_empty() {
            return Err("the alphabet is empty".into());
        }
        match &self.grades {
            None => DecorationAlphabet::new(symbols),
            Some(list) => {
                let grades = list
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<u64>()
                            .map_err(|_| format!("bad grade `{s}`"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                DecorationAlphabet::with_grades(symbols, grades)
            }
        }
        .map_err(|e| e.to_string())
    }
}

/// Distinct identifiers appearing in the texts, sorted.
fn scan_symbols(texts: &[&str]) -> Vec<String> {
    let mut found = BTreeSet::new();
    for text in texts {
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_alphabetic() || bytes[i] == b'_' {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                found.insert(text[start..i].to_string());
            } else {
                i += 1;
            }
        }
    }
    found.into_iter().collect()
}

#[derive(Args)]
struct EnumArgs {
    /// Tree flavour to list.
    #[arg(long, value_enum, default_value_t = Kind::Planar)]
    kind: Kind,
    /// Total weight of the listed trees.
    #[arg(long)]
    weight: u64,
    #[command(flatten)]
    alphabet: AlphabetArgs,
}

fn run_enum(args: &EnumArgs, json: bool) -> Result<Run, String> {
    let al = args.alphabet.build(&[])?;
    let listed: Vec<String> = match args.kind {
        Kind::Planar => enumerate_planar(&al, args.weight)
            .iter()
            .map(|t| t.serialize(&al))
            .collect(),
        Kind::Rooted => enumerate_rooted(&al, args.weight)
            .iter()
            .map(|t| t.serialize(&al))
            .collect(),
    };
    if json {
        return Run::ok(format!(
            "{}\n",
            serde_json::to_string(&listed).expect("strings")
        ));
    }
    let mut payload = String::new();
    for line in &listed {
        payload.push_str(line);
        payload.push('\n');
    }
    Run::ok(payload)
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    /// Grafting product; one argument tree.
    Prelie,
    /// Multi-argument grafting over a planar target.
    Brace,
    /// Graft on the root; one argument tree.
    Star,
    /// Interleave two forests.
    Shuffle,
}

#[derive(Args)]
struct ProdArgs {
    /// Product to evaluate.
    #[arg(long, value_enum)]
    op: Op,
    /// Tree flavour the expressions live in.
    #[arg(long, value_enum, default_value_t = Kind::Planar)]
    kind: Kind,
    /// Comma-separated argument trees; may be empty for the brace.
    #[arg(long, default_value = "", value_name = "FOREST")]
    args: String,
    /// Target tree, or the right forest for the shuffle.
    #[arg(long, value_name = "TREE")]
    target: String,
    #[command(flatten)]
    alphabet: AlphabetArgs,
}

fn run_prod(args: &ProdArgs, json: bool) -> Result<Run, String> {
    let al = args.alphabet.build(&[&args.args, &args.target])?;
    let parse_err = |text: &str, e: bracetree::ParseError| format!("cannot parse \"{text}\": {e}");

    let terms: Vec<(String, String)> = match (args.op, args.kind) {
        (Op::Prelie, Kind::Rooted) | (Op::Star, Kind::Rooted) => {
            let x = parse_rooted(&args.args, &al).map_err(|e| parse_err(&args.args, e))?;
            let y = parse_rooted(&args.target, &al).map_err(|e| parse_err(&args.target, e))?;
            let product = match args.op {
                Op::Prelie => prelie_rooted(&x, &y),
                _ => LinComb::basis(star_rooted(&x, &y)),
            };
            comb_terms(&product, |t| t.serialize(&al))
        }
        (Op::Prelie, Kind::Planar) | (Op::Star, Kind::Planar) => {
            let x = parse_planar(&args.args, &al).map_err(|e| parse_err(&args.args, e))?;
            let y = parse_planar(&args.target, &al).map_err(|e| parse_err(&args.target, e))?;
            let product = match args.op {
                Op::Prelie => prelie_planar(&x, &y),
                _ => star_planar(&x, &y),
            };
            comb_terms(&product, |t| t.serialize(&al))
        }
        (Op::Brace, Kind::Planar) => {
            let forest = if args.args.trim().is_empty() {
                bracetree::Forest::empty()
            } else {
                parse_forest(&args.args, &al).map_err(|e| parse_err(&args.args, e))?
            };
            let y = parse_planar(&args.target, &al).map_err(|e| parse_err(&args.target, e))?;
            comb_terms(&brace(forest.trees(), &y), |t| t.serialize(&al))
        }
        (Op::Shuffle, Kind::Planar) => {
            let left = parse_forest(&args.args, &al).map_err(|e| parse_err(&args.args, e))?;
            let right = parse_forest(&args.target, &al).map_err(|e| parse_err(&args.target, e))?;
            comb_terms(&shuffle(&left, &right), |f| f.serialize(&al))
        }
        (Op::Brace, Kind::Rooted) => return Err("the brace lives on planar trees".into()),
        (Op::Shuffle, Kind::Rooted) => return Err("the shuffle lives on planar forests".into()),
    };

    if json {
        let items: Vec<serde_json::Value> = terms
            .iter()
            .map(|(c, t)| serde_json::json!({ "coeff": c, "term": t }))
            .collect();
        return Run::ok(format!("{}\n", serde_json::Value::Array(items)));
    }
    if terms.is_empty() {
        return Run::ok("0\n".into());
    }
    let rendered: Vec<String> = terms
        .iter()
        .map(|(c, t)| {
            if c == "1" {
                t.clone()
            } else {
                format!("{c}*{t}")
            }
        })
        .collect();
    Run::ok(format!("{}\n", rendered.join(" + ")))
}

/// Coefficient and serialized basis element per term, canonical order.
fn comb_terms<T: Ord>(comb: &LinComb<T>, show: impl Fn(&T) -> String) -> Vec<(String, String)> {
    comb.terms()
        .map(|(t, c)| (c.to_string(), show(t)))
        .collect()
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    /// Symbol counts per grade.
    Decorations,
    /// Rooted-tree dimensions.
    Prelie,
    /// Planar-tree dimensions.
    Brace,
    /// Predicted generator counts per degree.
    Generators,
    /// Colour multiplicities under the exponential correspondence.
    W,
}

#[derive(Args)]
struct SeriesArgs {
    /// Which series to print.
    #[arg(long, value_enum)]
    kind: SeriesKind,
    /// Highest degree kept.
    #[arg(long, default_value_t = 7)]
    order: usize,
    #[command(flatten)]
    alphabet: AlphabetArgs,
}

fn run_series(args: &SeriesArgs, json: bool) -> Result<Run, String> {
    let al = args.alphabet.build(&[])?;
    let f_d = decoration_series(&al, args.order);
    let series = match args.kind {
        SeriesKind::Decorations => Ok(f_d),
        SeriesKind::Prelie => prelie_hilbert(&f_d),
        SeriesKind::Brace => brace_hilbert(&f_d),
        SeriesKind::Generators => generator_hilbert(&f_d),
        SeriesKind::W => w_sequence(&f_d),
    }
    .map_err(|e| e.to_string())?;
    if json {
        return Run::ok(format!(
            "{}\n",
            serde_json::to_string(&series).expect("series")
        ));
    }
    let mut payload = String::new();
    for n in 0..=series.order() {
        payload.push_str(&format!("x^{n}: {}\n", series.coeff(n)));
    }
    Run::ok(payload)
}

#[derive(Clone, Copy, ValueEnum)]
enum Axiom {
    Prelie,
    Nap,
    Brace,
    E1,
    Shuffle,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true).args(["axiom", "freeness"]))]
struct VerifyArgs {
    /// Law suite to run.
    #[arg(long, value_enum)]
    axiom: Option<Axiom>,
    /// Check generator counts and pre-Lie generation degree by degree.
    #[arg(long)]
    freeness: bool,
    /// Largest total weight the law suites sample.
    #[arg(long, default_value_t = 5)]
    max_weight: u64,
    /// Random trials per sampled weight.
    #[arg(long, default_value_t = 100)]
    trials: u64,
    /// Seed for the sampled trials.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Highest verified degree; defaults to 7, 5, 4, 3 as the alphabet
    /// grows (elimination cost rises steeply with both degree and size).
    #[arg(long)]
    max_degree: Option<u64>,
    /// Spread independent checks over threads. Needs the `parallel` build
    /// feature; results are identical either way.
    #[arg(long)]
    parallel: bool,
    #[command(flatten)]
    alphabet: AlphabetArgs,
}

fn run_verify(args: &VerifyArgs, json: bool, err: &mut dyn Write) -> Result<Run, String> {
    let al = args.alphabet.build(&[])?;
    if args.parallel && !parallel_enabled() {
        let _ = writeln!(
            err,
            "warning: built without the parallel feature; running sequentially"
        );
    }
    match args.axiom {
        Some(axiom) => verify_axiom(axiom, args, &al, json, err),
        None => verify_freeness(args, &al, json, err),
    }
}

fn verify_axiom(
    axiom: Axiom,
    args: &VerifyArgs,
    al: &DecorationAlphabet,
    json: bool,
    err: &mut dyn Write,
) -> Result<Run, String> {
    let opts = SuiteOptions {
        max_weight: args.max_weight,
        trials: args.trials,
        seed: args.seed,
        parallel: args.parallel,
    };
    let start = Instant::now();
    let report: SuiteReport = match axiom {
        Axiom::Prelie => check_prelie(al, &opts),
        Axiom::Nap => check_nap(al, &opts),
        Axiom::Brace => check_brace(al, &opts),
        Axiom::E1 => check_e1(al, &opts),
        Axiom::Shuffle => check_shuffle(al, &opts),
    };
    let _ = writeln!(
        err,
        "{}: {} checks in {:.2?}",
        report.name,
        report.checks,
        start.elapsed()
    );

    let passed = report.passed();
    let payload = if json {
        format!("{}\n", serde_json::to_string(&report).expect("report"))
    } else {
        match &report.counterexample {
            None => format!("{}: pass ({} checks)\n", report.name, report.checks),
            Some(ce) => format!(
                "{}: FAIL after {} checks\n{ce}\n",
                report.name, report.checks
            ),
        }
    };
    if passed {
        Run::ok(payload)
    } else {
        Run::failed(payload)
    }
}

fn verify_freeness(
    args: &VerifyArgs,
    al: &DecorationAlphabet,
    json: bool,
    err: &mut dyn Write,
) -> Result<Run, String> {
    let max_degree = args.max_degree.unwrap_or(match al.len() {
        1 => 7,
        2 => 5,
        3 => 4,
        _ => 3,
    });
    let options = FreenessOptions::new(max_degree).parallel(args.parallel);

    let start = Instant::now();
    let nap = verify_nap_freeness(al, options);
    let _ = writeln!(
        err,
        "complement check up to degree {max_degree} in {:.2?}",
        start.elapsed()
    );
    let start = Instant::now();
    let generation = nap
        .as_ref()
        .ok()
        .map(|_| verify_prelie_generation(al, options));
    let _ = writeln!(
        err,
        "generation check up to degree {max_degree} in {:.2?}",
        start.elapsed()
    );

    let outcome: Result<(FreenessReport, FreenessReport), String> = match (nap, generation) {
        (Ok(n), Some(Ok(g))) => Ok((n, g)),
        (Err(e), _) | (_, Some(Err(e))) => Err(e.to_string()),
        (Ok(_), None) => unreachable!("generation runs whenever the complement check passes"),
    };

    match outcome {
        Ok((nap, generation)) => {
            if json {
                let value = serde_json::json!({
                    "nap_freeness": nap,
                    "prelie_generation": generation,
                });
                return Run::ok(format!("{value}\n"));
            }
            let mut payload = String::new();
            payload.push_str(&format!(
                "complement sizes match the predicted generator counts up to degree {max_degree}\n"
            ));
            for r in &nap.degrees {
                payload.push_str(&format!(
                    "degree {}: dim {}, star span {}, complement {}; generators: {}\n",
                    r.n,
                    r.dim,
                    r.star_span,
                    r.complement,
                    if r.complement_trees.is_empty() {
                        "(none)".into()
                    } else {
                        r.complement_trees.join(" ")
                    }
                ));
            }
            payload.push_str(&format!(
                "complement and pre-Lie products span every degree up to {max_degree}\n"
            ));
            Run::ok(payload)
        }
        Err(message) => {
            let payload = if json {
                format!("{}\n", serde_json::json!({ "error": message }))
            } else {
                format!("freeness verification failed: {message}\n")
            };
            Run::failed(payload)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn capture(argv: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(argv.iter().copied(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = capture(&["bracetree", "--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("enum"));
    }

    #[test]
    fn missing_subcommand_is_usage_error() {
        let (code, out, err) = capture(&["bracetree"]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }

    #[test]
    fn enum_defaults_to_single_symbol_planar() {
        let (code, out, _) = capture(&["bracetree", "enum", "--weight", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out, "a[a,a]\na[a[a]]\n");
    }

    #[test]
    fn prod_infers_the_alphabet_from_expressions() {
        let (code, out, _) = capture(&[
            "bracetree",
            "prod",
            "--op",
            "prelie",
            "--args",
            "a",
            "--target",
            "b[c]",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "b[a,c] + b[c,a] + b[c[a]]\n");
    }

    #[test]
    fn prod_rejects_unknown_symbols() {
        let (code, out, err) = capture(&[
            "bracetree",
            "prod",
            "--op",
            "prelie",
            "--args",
            "a",
            "--target",
            "b",
            "--alphabet",
            "a",
        ]);
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("cannot parse"));
    }

    #[test]
    fn brace_on_rooted_trees_is_rejected() {
        let (code, _, err) = capture(&[
            "bracetree",
            "prod",
            "--op",
            "brace",
            "--kind",
            "rooted",
            "--args",
            "a",
            "--target",
            "a",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("planar"));
    }

    #[test]
    fn verify_needs_a_mode() {
        let (code, _, err) = capture(&["bracetree", "verify"]);
        assert_eq!(code, 2);
        assert!(err.contains("--axiom") || err.contains("--freeness"));
    }

    #[test]
    fn grades_require_named_symbols() {
        let (code, _, err) = capture(&["bracetree", "enum", "--weight", "2", "--grades", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("--grades"));
    }

    #[test]
    fn series_kinds_render_text() {
        let (code, out, _) = capture(&[
            "bracetree",
            "series",
            "--kind",
            "brace",
            "--order",
            "4",
            "--alphabet",
            "a",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "x^0: 0\nx^1: 1\nx^2: 1\nx^3: 2\nx^4: 5\n");
    }

    #[test]
    fn shuffle_renders_forests() {
        let (code, out, _) = capture(&[
            "bracetree",
            "prod",
            "--op",
            "shuffle",
            "--args",
            "a,b",
            "--target",
            "c",
            "--alphabet",
            "a,b,c",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out, "a,b,c + a,c,b + c,a,b\n");
    }

    #[test]
    fn scan_symbols_is_sorted_and_distinct() {
        assert_eq!(scan_symbols(&["d[c,a]", "b1[a]"]), ["a", "b1", "c", "d"]);
        assert!(scan_symbols(&["[],,"]).is_empty());
    }
}
