//! `knotproj`: invariants, moves and (1,3) homotopy search on Gauss codes.
//!
//! Exit codes: 0 success, 1 a verification suite failed, 2 malformed input
//! or usage, 3 a word is not realizable on the sphere.

mod verify;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use knotproj::corpus::{bundled, parse_corpus, CorpusEntry};
use knotproj::explore::{
    bfs_class, equivalence_query, one_triangle_neighbors, twist_family, SearchConfig,
};
use knotproj::knots::{
    alternating, determinant, jones_normalized, kauffman_bracket, positive_resolution,
    SignedDiagram,
};
use knotproj::moves::{all_sites, apply, MoveKind, MoveSite};
use knotproj::{
    cross_chord_number, h_invariant, prime_decompose, trivializing_number, BracketPoly,
    DoubleOccurrenceWord, InvariantReport, KnotProjection,
};
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(
    name = "knotproj",
    version,
    about = "Invariants and (1,3) homotopy search for knot projections"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Crossing cap for searches and enumerations.
    #[arg(long, global = true, value_name = "K")]
    max_n: Option<usize>,
    /// Move set for searches.
    #[arg(long, global = true, value_enum)]
    moves: Option<MoveSet>,
    /// Corpus file of `name: code` lines (default: the bundled table).
    #[arg(long, global = true, value_name = "PATH")]
    corpus: Option<PathBuf>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MoveSet {
    /// First moves and strong third moves.
    Strong,
    /// First moves and weak third moves.
    Weak,
    /// All first and third moves.
    Both,
    /// First moves only.
    R1,
}

impl MoveSet {
    fn kinds(self) -> BTreeSet<MoveKind> {
        match self {
            MoveSet::Strong => MoveKind::strong_set(),
            MoveSet::Weak => MoveKind::weak_set(),
            MoveSet::Both => MoveKind::all_set(),
            MoveSet::R1 => MoveKind::first_set(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Invariant report for each word, or for the corpus when none is given.
    Invariants { words: Vec<String> },
    /// Corpus table with adjacency under first moves and one third move.
    Table,
    /// Run a verification suite.
    Verify { suite: verify::Suite },
    /// Locate and apply moves.
    Moves {
        #[command(subcommand)]
        command: MovesCommand,
    },
    /// Homotopy classes and equivalence queries.
    Explore {
        #[command(subcommand)]
        command: ExploreCommand,
    },
    /// Knot diagrams over a projection.
    Knots {
        #[command(subcommand)]
        command: KnotsCommand,
    },
}

#[derive(Subcommand)]
enum MovesCommand {
    /// Number and classify every move site.
    List { word: String },
    /// Apply site `K` of `moves list`.
    Apply {
        word: String,
        #[arg(long, value_name = "K")]
        site: usize,
    },
}

#[derive(Subcommand)]
enum ExploreCommand {
    /// Every word reachable within the crossing cap.
    Class { word: String },
    /// Decide whether two words are related, with a path or a separating
    /// invariant.
    Equiv { source: String, target: String },
    /// Members 1..=N of a named family (`T`: twist projections).
    Family { name: String, n: usize },
}

#[derive(Subcommand)]
enum KnotsCommand {
    /// Over/under choices and signs.
    Resolve {
        word: String,
        #[arg(long)]
        alternating: bool,
    },
    /// Kauffman bracket and its normalization.
    Bracket {
        word: String,
        #[arg(long)]
        alternating: bool,
    },
    /// Knot determinant.
    Det {
        word: String,
        #[arg(long)]
        alternating: bool,
    },
}

#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl From<knotproj::Error> for Failure {
    fn from(e: knotproj::Error) -> Self {
        let realizability = knotproj::Error::NotRealizable.to_string();
        let code = match &e {
            knotproj::Error::NotRealizable => 3,
            knotproj::Error::Corpus { message, .. } if *message == realizability => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

type CliResult<T> = Result<T, Failure>;

/// What a command prints, and whether it counts as a pass.
struct Output {
    text: String,
    json: serde_json::Value,
    pass: bool,
}

impl Output {
    fn new<T: Serialize>(text: String, value: &T) -> Self {
        Output {
            text,
            json: serde_json::to_value(value).expect("serializable"),
            pass: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json"));
            } else {
                print!("{}", out.text);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::Invariants { words } => cmd_invariants(cli, words),
        Command::Table => cmd_table(cli),
        Command::Verify { suite } => Ok(verify::run(*suite, cli.max_n, cli.seed)),
        Command::Moves { command } => match command {
            MovesCommand::List { word } => cmd_moves_list(word),
            MovesCommand::Apply { word, site } => cmd_moves_apply(word, *site),
        },
        Command::Explore { command } => match command {
            ExploreCommand::Class { word } => cmd_class(cli, word),
            ExploreCommand::Equiv { source, target } => cmd_equiv(cli, source, target),
            ExploreCommand::Family { name, n } => cmd_family(name, *n),
        },
        Command::Knots { command } => match command {
            KnotsCommand::Resolve { word, alternating } => cmd_resolve(word, *alternating),
            KnotsCommand::Bracket { word, alternating } => cmd_bracket(word, *alternating),
            KnotsCommand::Det { word, alternating } => cmd_det(word, *alternating),
        },
    }
}

fn projection(text: &str) -> CliResult<KnotProjection> {
    Ok(KnotProjection::parse(text)?)
}

fn load_corpus(cli: &Cli) -> CliResult<Vec<CorpusEntry>> {
    match &cli.corpus {
        None => Ok(bundled()),
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| usage(format!("{}: {e}", path.display())))?;
            Ok(parse_corpus(&text, &path.display().to_string())?)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct NamedReport {
    name: String,
    word: DoubleOccurrenceWord,
    #[serde(flatten)]
    report: InvariantReport,
}

const REPORT_HEADER: &str = "name        n    X  X%3  tr  H  trefoils  reduced";

fn report_line(name: &str, r: &InvariantReport) -> String {
    format!(
        "{name:<10} {:>3} {:>4} {:>4} {:>3} {:>2} {:>9}  {}\n",
        r.n, r.x, r.x_mod3, r.tr, r.h, r.trefoil_summands, r.reduced_word
    )
}

fn cmd_invariants(cli: &Cli, words: &[String]) -> CliResult<Output> {
    if words.len() == 1 && cli.corpus.is_none() {
        let p = projection(&words[0])?;
        let r = InvariantReport::compute(&p.word)?;
        let text = format!("{REPORT_HEADER}\n{}", report_line("-", &r));
        return Ok(Output::new(text, &r));
    }
    let entries: Vec<(String, DoubleOccurrenceWord)> = if words.is_empty() {
        load_corpus(cli)?
            .into_iter()
            .map(|e| (e.name, e.word))
            .collect()
    } else {
        words
            .iter()
            .enumerate()
            .map(|(i, w)| Ok((format!("#{}", i + 1), projection(w)?.word)))
            .collect::<CliResult<_>>()?
    };
    let mut text = format!("{REPORT_HEADER}\n");
    let mut rows = Vec::new();
    for (name, word) in entries {
        let report = InvariantReport::compute(&word)?;
        text.push_str(&report_line(&name, &report));
        rows.push(NamedReport { name, word, report });
    }
    Ok(Output::new(text, &rows))
}

#[derive(Serialize)]
struct TableRow {
    name: String,
    word: DoubleOccurrenceWord,
    canonical: DoubleOccurrenceWord,
    n: usize,
    tr: usize,
    #[serde(rename = "X")]
    x: usize,
    #[serde(rename = "X_mod3")]
    x_mod3: usize,
    #[serde(rename = "H")]
    h: u8,
    factors: Vec<DoubleOccurrenceWord>,
    line: usize,
}

#[derive(Serialize)]
struct TableEdge {
    from: String,
    to: String,
    moves: Vec<MoveKind>,
}

/// Extra 1-gons allowed before the third move; a triangle touches at most
/// three of them.
const TABLE_CURLS: usize = 3;

fn cmd_table(cli: &Cli) -> CliResult<Output> {
    let entries = load_corpus(cli)?;
    let mut rows: Vec<TableRow> = entries
        .into_iter()
        .map(|e| {
            let x = cross_chord_number(&e.word);
            Ok(TableRow {
                canonical: e.word.canonicalize(),
                n: e.word.crossing_count(),
                tr: trivializing_number(&e.word)?,
                x,
                x_mod3: x % 3,
                h: h_invariant(&e.word),
                factors: prime_decompose(&e.word),
                name: e.name,
                word: e.word,
                line: e.line,
            })
        })
        .collect::<CliResult<_>>()?;
    rows.sort_by(|a, b| (a.n, &a.canonical).cmp(&(b.n, &b.canonical)));

    let reduced: Vec<DoubleOccurrenceWord> =
        rows.iter().map(|r| knotproj::reduce_r1(&r.word)).collect();
    let mut edges = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let reach = one_triangle_neighbors(&row.word, TABLE_CURLS)?;
        for (j, other) in rows.iter().enumerate().skip(i + 1) {
            if let Some(kinds) = reach.get(&reduced[j]) {
                edges.push(TableEdge {
                    from: row.name.clone(),
                    to: other.name.clone(),
                    moves: kinds.iter().copied().collect(),
                });
            }
        }
    }

    let mut text = String::from("name        n   tr    X  X%3  H  factors\n");
    for r in &rows {
        let factors: Vec<String> = r.factors.iter().map(|f| format!("[{f}]")).collect();
        let _ = writeln!(
            text,
            "{:<10} {:>2} {:>4} {:>4} {:>4} {:>2}  {}",
            r.name,
            r.n,
            r.tr,
            r.x,
            r.x_mod3,
            r.h,
            factors.join(" ")
        );
    }
    if !edges.is_empty() {
        text.push_str("\nadjacent by first moves and one third move:\n");
        for e in &edges {
            let kinds: Vec<String> = e.moves.iter().map(|k| k.to_string()).collect();
            let _ = writeln!(text, "{} -- {}  {}", e.from, e.to, kinds.join(", "));
        }
    }
    Ok(Output::new(
        text,
        &serde_json::json!({ "rows": rows, "edges": edges }),
    ))
}

#[derive(Serialize)]
struct ListedSite {
    index: usize,
    #[serde(flatten)]
    site: MoveSite,
    expected_delta_x: i64,
}

fn cmd_moves_list(word: &str) -> CliResult<Output> {
    let p = projection(word)?;
    let sites: Vec<ListedSite> = all_sites(&p.word)
        .into_iter()
        .enumerate()
        .map(|(index, site)| ListedSite {
            index,
            expected_delta_x: site.expected_delta_x(),
            site,
        })
        .collect();
    let mut text = String::new();
    for s in &sites {
        let _ = writeln!(
            text,
            "{:>3}: {}  dX {:+}",
            s.index, s.site, s.expected_delta_x
        );
    }
    Ok(Output::new(text, &sites))
}

#[derive(Serialize)]
struct Applied {
    site: MoveSite,
    result: DoubleOccurrenceWord,
    canonical: DoubleOccurrenceWord,
    delta_x: i64,
    delta_tr: i64,
    delta_h: i64,
}

fn cmd_moves_apply(word: &str, k: usize) -> CliResult<Output> {
    let p = projection(word)?;
    let sites = all_sites(&p.word);
    let site = sites
        .get(k)
        .ok_or_else(|| usage(format!("site {k} out of range: {} sites", sites.len())))?
        .clone();
    let out = apply(&p.word, &site)?;
    let delta = |f: &dyn Fn(&DoubleOccurrenceWord) -> CliResult<i64>| -> CliResult<i64> {
        Ok(f(&out)? - f(&p.word)?)
    };
    let applied = Applied {
        delta_x: delta(&|w| Ok(cross_chord_number(w) as i64))?,
        delta_tr: delta(&|w| Ok(trivializing_number(w)? as i64))?,
        delta_h: delta(&|w| Ok(i64::from(h_invariant(w))))?,
        canonical: out.canonicalize(),
        result: out,
        site,
    };
    let text = format!(
        "{}\ncanonical {}\ndX {:+}  dtr {:+}  dH {:+}\n",
        applied.result, applied.canonical, applied.delta_x, applied.delta_tr, applied.delta_h
    );
    Ok(Output::new(text, &applied))
}

fn search_config(cli: &Cli, n: usize, slack: usize) -> SearchConfig {
    let kinds = cli.moves.unwrap_or(MoveSet::Strong).kinds();
    SearchConfig::new(cli.max_n.unwrap_or(n + slack), kinds)
}

fn cmd_class(cli: &Cli, word: &str) -> CliResult<Output> {
    let p = projection(word)?;
    let cfg = search_config(cli, p.crossing_count().max(5), 2);
    let class = bfs_class(&p.word, &cfg)?;
    let mut text = format!(
        "{} words with at most {} crossings{}\n",
        class.words.len(),
        cfg.max_crossings,
        if class.complete {
            ""
        } else {
            " (state cap hit)"
        }
    );
    for w in &class.words {
        let _ = writeln!(text, "[{w}]");
    }
    Ok(Output::new(text, &class))
}

fn cmd_equiv(cli: &Cli, source: &str, target: &str) -> CliResult<Output> {
    let (p, q) = (projection(source)?, projection(target)?);
    let cfg = search_config(cli, p.crossing_count().max(q.crossing_count()), 2);
    let cert = equivalence_query(&p.word, &q.word, &cfg.allowed, &cfg)?;
    let mut text = format!(
        "{}\n",
        serde_json::to_value(cert.verdict)
            .expect("json")
            .as_str()
            .unwrap_or("")
    );
    if let Some(s) = &cert.separation {
        let _ = writeln!(
            text,
            "separated by {}: {} vs {}",
            s.invariant, s.source, s.target
        );
    }
    for step in &cert.path {
        let _ = writeln!(text, "[{}] --{}--> [{}]", step.from, step.site, step.to);
    }
    let _ = writeln!(text, "{} states, cap {}", cert.states, cert.max_crossings);
    Ok(Output::new(text, &cert))
}

#[derive(Serialize)]
struct FamilyMember {
    n: usize,
    word: DoubleOccurrenceWord,
    tr: usize,
    #[serde(rename = "X")]
    x: usize,
    #[serde(rename = "X_mod3")]
    x_mod3: usize,
}

fn cmd_family(name: &str, n: usize) -> CliResult<Output> {
    if !name.eq_ignore_ascii_case("t") {
        return Err(usage(format!("unknown family `{name}`; known: T")));
    }
    let members: Vec<FamilyMember> = (1..=n)
        .map(|k| {
            let word = twist_family(k)?;
            let x = cross_chord_number(&word);
            Ok(FamilyMember {
                n: k,
                tr: trivializing_number(&word)?,
                x,
                x_mod3: x % 3,
                word,
            })
        })
        .collect::<CliResult<_>>()?;
    let mut text = String::from(" n  tr    X  X%3  word\n");
    for m in &members {
        let _ = writeln!(
            text,
            "{:>2} {:>3} {:>4} {:>4}  {}",
            m.n, m.tr, m.x, m.x_mod3, m.word
        );
    }
    Ok(Output::new(text, &members))
}

fn diagram(word: &str, alt: bool) -> CliResult<SignedDiagram> {
    let p = projection(word)?;
    Ok(if alt {
        alternating(&p)
    } else {
        positive_resolution(&p)
    })
}

fn cmd_resolve(word: &str, alt: bool) -> CliResult<Output> {
    let d = diagram(word, alt)?;
    let mut text = String::from("crossing  first-pass  sign\n");
    for (c, label) in d.word.labels().iter().enumerate() {
        let _ = writeln!(
            text,
            "{label:<9} {:<11} {:+}",
            if d.over_first[c] { "over" } else { "under" },
            d.sign[c]
        );
    }
    let _ = writeln!(text, "writhe {}", d.writhe());
    Ok(Output::new(
        text,
        &serde_json::json!({ "diagram": d, "writhe": d.writhe() }),
    ))
}

#[derive(Serialize)]
struct Bracket {
    bracket: BracketPoly,
    normalized: BracketPoly,
    writhe: i32,
}

fn cmd_bracket(word: &str, alt: bool) -> CliResult<Output> {
    let d = diagram(word, alt)?;
    let b = Bracket {
        bracket: kauffman_bracket(&d)?,
        normalized: jones_normalized(&d)?,
        writhe: d.writhe(),
    };
    let text = format!(
        "bracket    {}\nnormalized {}\nwrithe     {}\n",
        b.bracket, b.normalized, b.writhe
    );
    Ok(Output::new(text, &b))
}

fn cmd_det(word: &str, alt: bool) -> CliResult<Output> {
    let d = diagram(word, alt)?;
    let det = determinant(&d)?;
    Ok(Output::new(
        format!("{det}\n"),
        &serde_json::json!({ "determinant": det }),
    ))
}
