//! Command-line front end for birack labelling invariants.
//!
//! Exit codes: 0 success, 1 input error, 2 verification or axiom failure,
//! 3 budget refusal.

use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use birack::algebra::{check_birack_for_theory, CheckKind, FiniteBirack, Tag, TheoryDescriptor, TheoryReport};
use birack::braid::{self, BraidWord};
use birack::catalog::{self, CatalogError, EnumerateOptions, Mode};
use birack::golden::{self, Cell};
use birack::invariant::{self, BirackPolynomial, InvariantError, Options, DEFAULT_BUDGET};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "birack", version, about = "Birack polynomials of braid closures")]
struct Cli {
    /// Worker threads; 0 uses one per core.
    #[arg(long, global = true, env = "BIRACK_WORKERS", default_value_t = 0)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a birack against the axioms of a knot theory.
    Check(CheckArgs),
    /// Compute the birack polynomial of a braid closure.
    Poly(PolyArgs),
    /// Recompute every published table cell and compare with the golden values.
    Verify(VerifyArgs),
    /// Enumerate small racks, biracks or biquandles.
    Enumerate(EnumerateArgs),
    /// Summarise a birack: size, biquandle status, period, sub-biracks.
    Info(InfoArgs),
}

#[derive(Args, Debug)]
struct BirackSource {
    /// Built-in birack: R5_40, R6_114 or BR6_125.
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
    /// Birack text file.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Stanza to pick from --file.
    #[arg(long, requires = "file")]
    name: Option<String>,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    source: BirackSource,
    /// classical, rotational, singular or singular-rotational.
    #[arg(long, default_value = "classical")]
    theory: String,
    /// Also require every forbidden dominance to fail.
    #[arg(long)]
    essential: bool,
    /// Require the birack to be a biquandle for each R1-permitting type.
    #[arg(long)]
    biquandle: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Inline braid word, e.g. "s1 -s2 s1 -s2".
    #[arg(long, group = "braid_source")]
    braid: Option<String>,
    /// File holding a braid word.
    #[arg(long, group = "braid_source")]
    braid_file: Option<PathBuf>,
    /// Named braid: unknot, trefoil, fig8, unlink5, unlink6, bigelow1, bigelow2.
    #[arg(long, group = "braid_source")]
    braid_macro: Option<String>,
    /// Strand count; defaults to one more than the largest generator index.
    #[arg(long)]
    strands: Option<usize>,
    #[command(flatten)]
    source: BirackSource,
    /// Grade coefficients by smallest sub-birack size.
    #[arg(long)]
    refined: bool,
    /// Cross-check every coefficient against the independent counter.
    #[arg(long)]
    oracle: bool,
    /// Maximum label vectors per count.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Golden table file to use instead of the embedded one.
    #[arg(long)]
    golden: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(short = 'n', long)]
    size: usize,
    #[arg(long, default_value = "rack")]
    mode: Mode,
    /// Write the catalog here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Keep every labelled structure instead of one per relabeling class.
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = EnumerateOptions::DEFAULT_NODE_BUDGET)]
    node_budget: u64,
}

#[derive(Args, Debug)]
struct InfoArgs {
    #[command(flatten)]
    source: BirackSource,
    #[arg(long)]
    json: bool,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Verification(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Budget(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Input(m) | Failure::Verification(m) | Failure::Budget(m) => f.write_str(m),
        }
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Budget { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Budget { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn input(e: impl fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build_global() {
        eprintln!("error: cannot start worker pool: {e}");
        return ExitCode::from(1);
    }
    let result = match cli.command {
        Command::Check(a) => cmd_check(a),
        Command::Poly(a) => cmd_poly(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Enumerate(a) => cmd_enumerate(a),
        Command::Info(a) => cmd_info(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn print_json(value: &impl Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

impl BirackSource {
    /// Every birack the source names; a file without --name yields all stanzas.
    fn load_all(&self) -> Result<Vec<FiniteBirack>, Failure> {
        match (&self.builtin, &self.file) {
            (Some(name), _) => Ok(vec![catalog::builtin(name)?]),
            (None, Some(path)) => {
                let all = catalog::load(path)?;
                if all.is_empty() {
                    return Err(input(format!("{}: no biracks in file", path.display())));
                }
                match &self.name {
                    None => Ok(all),
                    Some(name) => {
                        let found = all.into_iter().find(|b| b.name() == Some(name.as_str()));
                        found
                            .map(|b| vec![b])
                            .ok_or_else(|| input(format!("{}: no birack named {name:?}", path.display())))
                    }
                }
            }
            (None, None) => Err(input("no birack given: pass --builtin or --file")),
        }
    }

    fn load_one(&self) -> Result<FiniteBirack, Failure> {
        let mut all = self.load_all()?;
        if all.len() > 1 {
            return Err(input(format!("file holds {} biracks; pick one with --name", all.len())));
        }
        Ok(all.remove(0))
    }
}

fn cmd_check(args: CheckArgs) -> Result<(), Failure> {
    let theory = TheoryDescriptor::by_name(&args.theory).ok_or_else(|| {
        input(format!("unknown theory {:?} (expected one of {})", args.theory, TheoryDescriptor::NAMES.join(", ")))
    })?;
    let mut reports: Vec<TheoryReport> = Vec::new();
    for b in args.source.load_all()? {
        let mut report = check_birack_for_theory(&b, &theory, args.essential).map_err(input)?;
        if args.biquandle {
            report.require(CheckKind::Biquandle);
        }
        reports.push(report);
    }

    if args.json {
        if reports.len() == 1 {
            print_json(&reports[0]);
        } else {
            print_json(&reports);
        }
    } else {
        for r in &reports {
            print_report(r);
        }
    }
    let failed: Vec<&str> =
        reports.iter().filter(|r| !r.passed).map(|r| r.birack.as_deref().unwrap_or("(unnamed)")).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("axiom check failed for {}", failed.join(", "))))
    }
}

fn print_report(r: &TheoryReport) {
    let mode = if r.essential { " (essential)" } else { "" };
    println!("{} against {}{mode}", r.birack.as_deref().unwrap_or("(unnamed)"), r.theory);
    for c in &r.checks {
        let status = match (c.passed, c.required) {
            (true, _) => "pass",
            (false, true) => "FAIL",
            (false, false) => "no",
        };
        let witness = match &c.witness {
            Some(w) if w.len() == 1 => format!("  witness x={}", w[0]),
            Some(w) if !w.is_empty() => {
                format!("  witness ({})", w.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            }
            _ => String::new(),
        };
        let note = if c.required { "" } else { " [informational]" };
        println!("  {status:<4} {}{witness}{note}", c.subject);
    }
    println!("result: {}", if r.passed { "pass" } else { "fail" });
}

#[derive(Serialize)]
struct PolyOutput<'a> {
    braid: String,
    strands: usize,
    writhe: i64,
    birack: Option<&'a str>,
    polynomial: String,
    #[serde(flatten)]
    detail: &'a BirackPolynomial,
    oracle_checked: bool,
}

fn load_braid(args: &PolyArgs) -> Result<BraidWord, Failure> {
    let parse = |text: &str| braid::parse_braid(text, args.strands).map_err(input);
    match (&args.braid, &args.braid_file, &args.braid_macro) {
        (Some(text), _, _) => parse(text),
        (_, Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
            parse(&text)
        }
        (_, _, Some(name)) => {
            let word = braid::named(name).ok_or_else(|| {
                input(format!("unknown braid macro {name:?} (expected one of {})", braid::MACRO_NAMES.join(", ")))
            })?;
            match args.strands {
                Some(r) => word.with_strands(r).map_err(input),
                None => Ok(word),
            }
        }
        _ => Err(input("no braid given: pass --braid, --braid-file or --braid-macro")),
    }
}

fn cmd_poly(args: PolyArgs) -> Result<(), Failure> {
    let word = load_braid(&args)?;
    let b = args.source.load_one()?;
    let opts = Options::default().with_budget(args.budget);
    let poly = if args.refined {
        invariant::refined_polynomial_with(&word, &b, &opts)?
    } else {
        invariant::birack_polynomial_with(&word, &b, &opts)?
    };

    if args.oracle {
        let mut stabilized = word.clone();
        for j in 0..poly.period() {
            let expected = poly.coefficient(word.writhe() + j as i64);
            let got = invariant::oracle_count_with(&stabilized, &b, &opts)?;
            if got != expected {
                return Err(Failure::Verification(format!(
                    "oracle mismatch after {j} stabilizations: polynomial gives {expected}, oracle counts {got}"
                )));
            }
            stabilized = stabilized.stabilize(braid::Polarity::Positive);
        }
    }

    if args.json {
        print_json(&PolyOutput {
            braid: word.to_string(),
            strands: word.strands(),
            writhe: word.writhe(),
            birack: b.name(),
            polynomial: poly.to_string(),
            detail: &poly,
            oracle_checked: args.oracle,
        });
    } else {
        println!("{poly}");
    }
    Ok(())
}

#[derive(Serialize)]
struct CellReport<'a> {
    #[serde(flatten)]
    cell: &'a Cell,
    got: String,
    passed: bool,
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let cells = match &args.golden {
        None => golden::embedded(),
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| input(format!("{}: {e}", path.display())))?;
            golden::parse_golden(&text).map_err(|e| input(format!("{}: {e}", path.display())))?
        }
    };
    let opts = Options::default().with_budget(args.budget);
    let outcomes = golden::verify(&cells, &opts);

    if let Some(e) = outcomes.iter().find_map(|o| o.got.as_ref().err()) {
        if matches!(e, InvariantError::Budget { .. }) {
            return Err(e.clone().into());
        }
    }

    let reports: Vec<CellReport> = outcomes
        .iter()
        .map(|o| CellReport {
            cell: &o.cell,
            got: match &o.got {
                Ok(s) => s.clone(),
                Err(e) => format!("error: {e}"),
            },
            passed: o.passed(),
        })
        .collect();
    let failed = reports.iter().filter(|r| !r.passed).count();

    if args.json {
        print_json(&reports);
    } else {
        for r in &reports {
            let kind = if r.cell.refined { "refined" } else { "plain" };
            let id = format!("{} {} {} {kind}", r.cell.table, r.cell.link, r.cell.birack);
            if r.passed {
                println!("ok   {id}: {}", r.got);
            } else {
                println!("FAIL {id}: expected {:?}, got {:?}", r.cell.expected, r.got);
            }
        }
        println!("{}/{} cells match", reports.len() - failed, reports.len());
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Verification(format!("{failed} of {} cells differ from the golden values", reports.len())))
    }
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), Failure> {
    let opts = EnumerateOptions { mode: args.mode, dedup: !args.all, node_budget: args.node_budget };
    let found = catalog::enumerate_biracks_with(args.size, &opts)?;
    match &args.output {
        Some(path) => catalog::save(&found, path)?,
        None => print!("{}", catalog::to_text(&found)),
    }
    eprintln!("{} {} structure(s) of size {}", found.len(), args.mode, args.size);
    Ok(())
}

#[derive(Serialize)]
struct TagInfo {
    tag: Tag,
    fully_formed: bool,
    biquandle: bool,
    /// One-based label fixed-point witness when not a biquandle.
    #[serde(skip_serializing_if = "Option::is_none")]
    biquandle_witness: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    period: Option<usize>,
}

#[derive(Serialize)]
struct SubBirack {
    labels: Vec<usize>,
    /// Indices of the maximal proper sub-biracks contained in this one.
    covers: Vec<usize>,
}

#[derive(Serialize)]
struct Info {
    name: Option<String>,
    size: usize,
    tags: Vec<TagInfo>,
    sub_biracks: Vec<SubBirack>,
}

fn info(b: &FiniteBirack) -> Info {
    let tags = b
        .components()
        .map(|(tag, c)| {
            let witness = c.biquandle_witness();
            TagInfo {
                tag,
                fully_formed: c.is_fully_formed(),
                biquandle: witness.is_none(),
                biquandle_witness: witness.map(|x| x + 1),
                period: b.stabilization_period(tag).ok(),
            }
        })
        .collect();

    let subs = b.sub_biracks();
    let masks: Vec<u64> = subs.iter().map(|s| s.iter().fold(0u64, |m, &x| m | 1 << x)).collect();
    let below = |i: usize, j: usize| i != j && masks[i] & masks[j] == masks[i];
    let sub_biracks = subs
        .iter()
        .enumerate()
        .map(|(j, labels)| SubBirack {
            labels: labels.iter().map(|x| x + 1).collect(),
            covers: (0..subs.len())
                .filter(|&i| below(i, j) && !(0..subs.len()).any(|m| below(i, m) && below(m, j)))
                .collect(),
        })
        .collect();

    Info { name: b.name().map(str::to_string), size: b.size(), tags, sub_biracks }
}

fn cmd_info(args: InfoArgs) -> Result<(), Failure> {
    let infos: Vec<Info> = args.source.load_all()?.iter().map(info).collect();
    if args.json {
        if infos.len() == 1 {
            print_json(&infos[0]);
        } else {
            print_json(&infos);
        }
        return Ok(());
    }
    for i in &infos {
        println!("name: {}", i.name.as_deref().unwrap_or("(unnamed)"));
        println!("size: {}", i.size);
        for t in &i.tags {
            let biquandle = match t.biquandle_witness {
                None => "yes".to_string(),
                Some(x) => format!("no (witness x={x})"),
            };
            let period = t.period.map_or("n/a".to_string(), |k| k.to_string());
            println!("{}: fully formed {}, biquandle {biquandle}, period k = {period}", t.tag, yes_no(t.fully_formed));
        }
        println!("sub-biracks: {}", i.sub_biracks.len());
        for (j, s) in i.sub_biracks.iter().enumerate() {
            let labels = s.labels.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            let covers = s.covers.iter().map(|c| format!("#{c}")).collect::<Vec<_>>().join(" ");
            if covers.is_empty() {
                println!("  #{j} {{{labels}}}");
            } else {
                println!("  #{j} {{{labels}}} > {covers}");
            }
        }
    }
    Ok(())
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
