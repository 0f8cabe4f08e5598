use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use leaflang::automata::regex_to_min_dfa_capped;
use leaflang::automata::DEFAULT_DFA_CAP;
use leaflang::barrington::{gadget, select_convention, Convention, CONVENTION};
use leaflang::cardinal::{SearchBounds, DEFAULT_SEARCH_LIMIT};
use leaflang::classify::classify_with_cap;
use leaflang::leafsim::{format_trace, sat_machine_capped, DEFAULT_VAR_CAP};
use leaflang::monoid::{transition_monoid, DEFAULT_MONOID_CAP};
use leaflang::{
    bleaf_accepts, catalog, compile, leaf_string, pad_to_balanced, parse_regex, search_reduction, Acceptor,
    Alphabet, BoolFormula, CardinalSpec, Cnf, Error, SearchOutcome,
};
use num_bigint::BigUint;

#[derive(Parser)]
#[command(name = "leaflang", version, about = "Leaf-language classification, simulation and reductions")]
struct Cli {
    /// Print only the verdict or result line.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a leaf language by its syntactic monoid or catalog identity.
    Classify(ClassifyArgs),
    /// Run the SAT leaf machine of a DIMACS formula against a catalog language.
    Simulate(SimulateArgs),
    /// Compile a prefix boolean formula to an S5 permutation program.
    Compile(CompileArgs),
    /// Search for a multinomial reduction between two cardinal languages.
    Reduce(ReduceArgs),
    /// Check the NOR gadget identities and report the composition convention.
    Selftest,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Catalog name, e.g. E, U, maj, us, par, mod_k, np_and_conp, A, s5_word.
    #[arg(long, conflicts_with = "regex", required_unless_present = "regex")]
    name: Option<String>,
    /// Catalog parameter (k for mod_k and A).
    #[arg(long = "param")]
    params: Vec<usize>,
    /// Regular expression over the alphabet.
    #[arg(long)]
    regex: Option<String>,
    /// Alphabet letters for --regex, one character each.
    #[arg(long, default_value = "01")]
    alphabet: String,
    #[arg(long, default_value_t = DEFAULT_MONOID_CAP, value_parser = positive)]
    monoid_cap: usize,
    /// Append the monoid's multiplication table.
    #[arg(long)]
    export_monoid: bool,
}

#[derive(Args)]
struct SimulateArgs {
    /// DIMACS CNF file.
    #[arg(long)]
    cnf: PathBuf,
    /// Catalog leaf language.
    #[arg(long)]
    lang: String,
    #[arg(long = "param")]
    params: Vec<usize>,
    #[arg(long, default_value_t = DEFAULT_VAR_CAP, value_parser = positive)]
    var_cap: usize,
}

#[derive(Args)]
struct CompileArgs {
    /// File holding a prefix formula such as `nor (var 1) (var 2)`.
    #[arg(long)]
    formula: PathBuf,
    /// Bits for variables 1, 2, …, e.g. `01`.
    #[arg(long)]
    assign: Option<String>,
    /// Pad the listing to a balanced tree with identity leaves.
    #[arg(long)]
    pad: bool,
}

#[derive(Args)]
struct ReduceArgs {
    /// Cardinal spec of the source language.
    spec_a: PathBuf,
    /// Cardinal spec of the target language.
    spec_b: PathBuf,
    /// Degree bound per source letter; one value applies to all letters.
    #[arg(long, value_delimiter = ',', default_value = "1")]
    z_max: Vec<u32>,
    #[arg(long, default_value_t = 2, value_parser = positive_u32)]
    alpha_max: u32,
    /// Verification grid bound V.
    #[arg(long, default_value_t = 10)]
    grid: u64,
    /// Cap on candidates examined.
    #[arg(long, default_value_t = DEFAULT_SEARCH_LIMIT, value_parser = positive)]
    limit: usize,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

fn positive_u32(s: &str) -> Result<u32, String> {
    positive(s).and_then(|n| u32::try_from(n).map_err(|e| e.to_string()))
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_resource_cap() { 3 } else { 2 }, message: e.to_string() }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure { code: 2, message: format!("{}: {e}", path.display()) })
}

fn classify(args: &ClassifyArgs) -> Result<String, Failure> {
    let (label, acceptor) = match (&args.name, &args.regex) {
        (Some(name), _) => {
            let a = catalog(name, &args.params)?;
            (a.name().to_string(), a)
        }
        (None, Some(text)) => {
            let alphabet = Alphabet::from_chars(&args.alphabet)?;
            let re = parse_regex(text, &alphabet)?;
            let dfa = regex_to_min_dfa_capped(&re, &alphabet, DEFAULT_DFA_CAP)?;
            (text.clone(), Acceptor::regular(text.clone(), alphabet, dfa)?)
        }
        (None, None) => unreachable!("clap requires --name or --regex"),
    };
    let mut out = classify_with_cap(&acceptor, args.monoid_cap)?.report(&label);
    if args.export_monoid {
        match acceptor.to_dfa() {
            Some(dfa) => out.push_str(&transition_monoid(&dfa.minimize(), args.monoid_cap)?.to_text(acceptor.alphabet())),
            None => out.push_str("MONOID: n/a\n"),
        }
    }
    Ok(out)
}

fn simulate(args: &SimulateArgs) -> Result<String, Failure> {
    let cnf = Cnf::parse_dimacs(&read(&args.cnf)?)?;
    let machine = sat_machine_capped(&cnf, args.var_cap)?;
    let b = catalog(&args.lang, &args.params)?;
    let accepted = bleaf_accepts(&machine, &b, &[])?;
    let leaf = leaf_string(&machine, &[])?;
    let mut out = format!("LANGUAGE: {}\n", b.name());
    out.push_str(&format_trace("", &leaf, machine.output_alphabet(), accepted));
    Ok(out)
}

fn parse_bits(text: &str) -> Result<Vec<bool>, Failure> {
    text.trim()
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(Failure { code: 2, message: format!("assignment must be 0/1 bits, found {other:?}") }),
        })
        .collect()
}

fn compile_cmd(args: &CompileArgs) -> Result<String, Failure> {
    let phi = BoolFormula::parse(&read(&args.formula)?)?;
    let mut program = compile(&phi);
    if args.pad {
        program = pad_to_balanced(&program);
    }
    match &args.assign {
        None => Ok(program.listing()),
        Some(bits) => {
            let assignment = parse_bits(bits)?;
            phi.check_arity(&assignment)?;
            let product = program.evaluate(&assignment);
            let accepted = product == gadget::a1();
            Ok(format!(
                "LEAF_COUNT: {}\nPRODUCT: {product}\nVERDICT: {}\n",
                program.leaf_count(),
                if accepted { "accept" } else { "reject" }
            ))
        }
    }
}

fn reduce(args: &ReduceArgs) -> Result<String, Failure> {
    let a = CardinalSpec::from_text(&read(&args.spec_a)?)?;
    let b = CardinalSpec::from_text(&read(&args.spec_b)?)?;
    let z_max = match args.z_max.as_slice() {
        [z] => vec![*z; a.k()],
        zs => zs.to_vec(),
    };
    let bounds = SearchBounds { z_max, alpha_max: args.alpha_max, grid: args.grid, limit: args.limit };
    let join = |z: &[u32]| z.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
    Ok(match search_reduction::<BigUint>(&a, &b, &bounds)? {
        SearchOutcome::Found(w) => format!("RESULT: WITNESS\n{}", w.to_text()),
        SearchOutcome::NoneWithinBounds { z_max, alpha_max, grid } => format!(
            "RESULT: NONE-WITHIN-BOUNDS\nZ_MAX: {}\nALPHA_MAX: {alpha_max}\nGRID: {grid}\n\
             NOTE: bounded search only; not a proof of irreducibility\n",
            join(&z_max)
        ),
    })
}

fn selftest() -> Result<String, Failure> {
    use gadget::{a0, a1, w_word};
    let mut out = String::new();
    for conv in [Convention::LeftToRight, Convention::RightToLeft] {
        let key = conv.to_string().to_uppercase().replace('-', "_");
        let _ = write!(out, "{key}:");
        for (xn, x, yn, y) in [("a0", a0(), "a0", a0()), ("a0", a0(), "a1", a1()), ("a1", a1(), "a0", a0()), ("a1", a1(), "a1", a1())] {
            let _ = write!(out, " w({xn},{yn})={}", conv.product(&w_word(x, y)));
        }
        let _ = writeln!(out, " {}", if conv.satisfies_gadget() { "holds" } else { "fails" });
    }
    let selected = select_convention();
    if selected != [CONVENTION] {
        return Err(Failure { code: 1, message: format!("{out}gadget identities hold under {selected:?}") });
    }
    let _ = writeln!(out, "CONVENTION: {CONVENTION}");
    Ok(out)
}

/// Keeps only the headline line of a report.
fn headline(report: &str) -> String {
    match report.lines().find(|l| l.starts_with("VERDICT:") || l.starts_with("RESULT:") || l.starts_with("CONVENTION:")) {
        Some(line) => format!("{line}\n"),
        None => report.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify(a) => classify(a),
        Command::Simulate(a) => simulate(a),
        Command::Compile(a) => compile_cmd(a),
        Command::Reduce(a) => reduce(a),
        Command::Selftest => selftest(),
    };
    match result {
        Ok(report) => {
            print!("{}", if cli.quiet { headline(&report) } else { report });
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
