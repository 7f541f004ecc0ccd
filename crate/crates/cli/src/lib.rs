//! Command-line front end: argument definitions and command dispatch.

pub mod claims;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use tord::kl::{kl_table, left_cells};
use tord::orders::io::{summary, to_csv, to_dot, write_relation_file};
use tord::orders::{diff, OrderRelation};
use tord::spaltenstein::{verify_double_chain, verify_level, DEFAULT_PRIME};
use tord::{enumerate, rs, rs_inverse, t_ab_tableau, t_ab_word, AdjacentPair, Engine, OrderId, Tableau, Word};

use claims::{verify_claims, Settings};

#[derive(Parser, Debug)]
#[command(name = "tord", version, about = "Orders on standard Young tableaux")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Directory for cached relation files.
    #[arg(long, global = true, env = "TORD_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the main result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Dot,
    /// Binary relation file (order build only).
    Bin,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderArg {
    D,
    Ch,
    Dv,
    Vch,
    Kl,
}

impl From<OrderArg> for OrderId {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::D => OrderId::D,
            OrderArg::Ch => OrderId::Ch,
            OrderArg::Dv => OrderId::DV,
            OrderArg::Vch => OrderId::VCh,
            OrderArg::Kl => OrderId::Kl,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List T_n in canonical order.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Robinson–Schensted: a word gives (P, Q); `--p` and `--q` give the word back.
    Rs {
        word: Option<Word>,
        #[arg(long, requires = "q")]
        p: Option<Tableau>,
        #[arg(long, requires = "p")]
        q: Option<Tableau>,
    },
    /// Jeu de taquin window projection.
    Taquin {
        tableau: Tableau,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        /// Relabel the result to 1..=j-i+1.
        #[arg(long)]
        standardize: bool,
    },
    /// Apply T_ab to a tableau or a word; the pair is `i,up` or `i,down`.
    Vogan {
        /// Tableau text such as `1,2;3`, or a word such as `[2,1,3]`.
        target: String,
        #[arg(long)]
        pair: AdjacentPair,
    },
    #[command(subcommand)]
    Order(OrderCommand),
    #[command(subcommand)]
    Spaltenstein(SpaltensteinCommand),
    #[command(subcommand)]
    Kl(KlCommand),
    /// Run the claims catalog and write a JSON report.
    VerifyClaims {
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long)]
        include_heavy: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
    },
    /// Report whether an order at level n is preserved by insertions into
    /// level n+1. Informational; nothing is asserted.
    Probe {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Vch)]
        order: OrderArg,
    },
}

#[derive(Subcommand, Debug)]
pub enum OrderCommand {
    /// Materialize an order; prints its summary and writes `--out` in `--format`.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        order: OrderArg,
    },
    /// Pairs of `--upper` missing from `--lower`.
    Diff {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        lower: OrderArg,
        #[arg(long, value_enum)]
        upper: OrderArg,
    },
    /// Hasse covers.
    Hasse {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        order: OrderArg,
    },
    /// Whether `lower <= upper`.
    Query {
        #[arg(long, value_enum)]
        order: OrderArg,
        lower: Tableau,
        upper: Tableau,
    },
}

#[derive(Subcommand, Debug)]
pub enum SpaltensteinCommand {
    /// Check double chains against generic matrices, for one tableau or all of T_n.
    Verify {
        #[arg(long, conflicts_with = "tableau", required_unless_present = "tableau")]
        n: Option<usize>,
        #[arg(long)]
        tableau: Option<Tableau>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        prime: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum KlCommand {
    /// Kazhdan–Lusztig polynomials of S_n; CSV of nonzero entries or a JSON summary.
    Build {
        #[arg(long)]
        n: usize,
    },
    /// Left cells with their recording tableaux.
    Cells {
        #[arg(long)]
        n: usize,
    },
}

fn emit(out: &Option<PathBuf>, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn to_json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn engine(global: &Global) -> Engine {
    match &global.cache_dir {
        Some(dir) => Engine::with_cache(dir),
        None => Engine::new(),
    }
}

fn render(rel: &OrderRelation, eng: &mut Engine, format: Format) -> Result<String> {
    let level = eng.level(rel.n)?;
    Ok(match format {
        Format::Json => {
            let pairs: Vec<(String, String)> = rel
                .bits
                .pairs()
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (level.tableau(a).to_string(), level.tableau(b).to_string()))
                .collect();
            to_json(&json!({ "summary": summary(rel), "pairs": pairs }))?
        }
        Format::Csv => to_csv(rel, &level),
        Format::Dot => to_dot(rel, &level),
        Format::Bin => bail!("binary output needs --out"),
    })
}

fn write_bin(path: &Path, rel: &OrderRelation) -> Result<()> {
    write_relation_file(path, rel).with_context(|| format!("writing {}", path.display()))
}

/// Runs one command; the return value is the process exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<i32> {
    if let Some(k) = cli.global.threads {
        // a second call in one process keeps the first pool, which is fine
        let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
    }
    let g = &cli.global;
    match cli.command {
        Command::Enumerate { n } => {
            let all = enumerate(n)?;
            let text = match g.format {
                Format::Json => to_json(&all)?,
                _ => all.iter().map(|t| format!("{t}\n")).collect(),
            };
            emit(&g.out, stdout, &text)?;
        }
        Command::Rs { word, p, q } => {
            let text = match (word, p, q) {
                (Some(w), None, None) => {
                    let (p, q) = rs(&w);
                    to_json(&json!({ "word": w, "p": p, "q": q }))?
                }
                (None, Some(p), Some(q)) => to_json(&json!({ "p": p, "q": q, "word": rs_inverse(&p, &q)? }))?,
                _ => bail!("give either a word or both --p and --q"),
            };
            emit(&g.out, stdout, &text)?;
        }
        Command::Taquin { tableau, i, j, standardize } => {
            let mut t = tableau.taquin_project(i, j)?;
            if standardize {
                t = t.standardize();
            }
            emit(&g.out, stdout, &to_json(&json!({ "tableau": t, "shape": t.shape() }))?)?;
        }
        Command::Vogan { target, pair } => {
            let text = if target.trim_start().starts_with('[') {
                let w: Word = target.parse()?;
                let img = t_ab_word(&w, pair)?;
                to_json(&json!({ "word": w, "image": img, "p": rs(&img).0 }))?
            } else {
                let t: Tableau = target.parse()?;
                to_json(&json!({ "tableau": t, "image": t_ab_tableau(&t, pair)? }))?
            };
            emit(&g.out, stdout, &text)?;
        }
        Command::Order(cmd) => return order(cmd, g, stdout),
        Command::Spaltenstein(SpaltensteinCommand::Verify { n, tableau, trials, seed, prime }) => {
            let reports = match (n, tableau) {
                (_, Some(t)) => vec![verify_double_chain(&t, trials, prime, seed)?],
                (Some(n), None) => verify_level(n, trials, prime, seed)?,
                (None, None) => bail!("give --n or --tableau"),
            };
            let ok = reports.iter().all(|r| r.status == tord::spaltenstein::Status::Pass);
            emit(&g.out, stdout, &to_json(&reports)?)?;
            return Ok(if ok { 0 } else { 1 });
        }
        Command::Kl(KlCommand::Build { n }) => {
            let table = kl_table(n)?;
            let text = match g.format {
                Format::Csv => table.to_csv(),
                _ => {
                    let polys: Vec<String> = table.distinct_polys().iter().map(|p| p.to_string()).collect();
                    to_json(&json!({ "n": n, "elements": table.len(), "distinct_polynomials": polys }))?
                }
            };
            emit(&g.out, stdout, &text)?;
        }
        Command::Kl(KlCommand::Cells { n }) => {
            let table = kl_table(n)?;
            let cells: Vec<_> = left_cells(&table)
                .into_iter()
                .map(|cell| {
                    let words: Vec<Word> = cell.iter().map(|&k| table.word(k)).collect();
                    json!({ "recording": rs(&words[0]).1, "words": words })
                })
                .collect();
            emit(&g.out, stdout, &to_json(&cells)?)?;
        }
        Command::VerifyClaims { max_n, include_heavy, seed, prime } => {
            let mut eng = engine(g);
            let report = verify_claims(&mut eng, max_n, &Settings { include_heavy, seed, prime });
            for c in &report.claims {
                writeln!(stdout, "claim {:>2} {:<7} {}: {}", c.claim_id, format!("{:?}", c.status), c.statement, c.details)?;
            }
            let path = g.out.clone().unwrap_or_else(|| PathBuf::from("claims_report.json"));
            fs::write(&path, to_json(&report)?).with_context(|| format!("writing {}", path.display()))?;
            return Ok(if report.passed() { 0 } else { 1 });
        }
        Command::Probe { n, order } => {
            let mut eng = engine(g);
            let report = probe_insertions(&mut eng, n, order.into())?;
            emit(&g.out, stdout, &to_json(&report)?)?;
        }
    }
    Ok(0)
}

fn order(cmd: OrderCommand, g: &Global, stdout: &mut dyn Write) -> Result<i32> {
    let mut eng = engine(g);
    match cmd {
        OrderCommand::Build { n, order } => {
            let rel = eng.relation(order.into(), n)?;
            match (&g.out, g.format) {
                (Some(path), Format::Bin) => write_bin(path, &rel)?,
                (Some(path), f) => fs::write(path, render(&rel, &mut eng, f)?)?,
                (None, Format::Bin) => bail!("binary output needs --out"),
                (None, _) => {}
            }
            writeln!(stdout, "{}", serde_json::to_string(&summary(&rel))?)?;
        }
        OrderCommand::Diff { n, lower, upper } => {
            let level = eng.level(n)?;
            let (a, b) = (eng.relation(lower.into(), n)?, eng.relation(upper.into(), n)?);
            let entries = diff(&a, &b, &level)?;
            emit(&g.out, stdout, &to_json(&entries)?)?;
        }
        OrderCommand::Hasse { n, order } => {
            let rel = eng.relation(order.into(), n)?;
            let covers = rel.hasse_covers();
            let text = match g.format {
                Format::Dot => to_dot(&rel, &*eng.level(n)?),
                Format::Bin => bail!("binary output is only for order build"),
                f => render(&covers, &mut eng, f)?,
            };
            emit(&g.out, stdout, &text)?;
        }
        OrderCommand::Query { order, lower, upper } => {
            let n = lower.size();
            let rel = eng.relation(order.into(), n)?;
            let level = eng.level(n)?;
            let related = rel.relates(&level, &lower, &upper)?;
            emit(&g.out, stdout, &to_json(&json!({ "order": rel.order, "lower": lower, "upper": upper, "related": related }))?)?;
        }
    }
    Ok(0)
}

#[derive(Serialize, Debug)]
pub struct ProbeReport {
    pub n: usize,
    pub order: String,
    pub pairs_checked: usize,
    pub row_failures: usize,
    pub col_failures: usize,
    pub first_failure: Option<(Tableau, Tableau, usize)>,
}

/// Counts pairs of level `n` whose insertion lifts leave the order at `n+1`.
pub fn probe_insertions(eng: &mut Engine, n: usize, order: OrderId) -> Result<ProbeReport> {
    let lower = eng.relation(order, n)?;
    let upper = eng.relation(order, n + 1)?;
    let (ln, lu) = (eng.level(n)?, eng.level(n + 1)?);
    let mut report = ProbeReport {
        n,
        order: order.name().to_string(),
        pairs_checked: 0,
        row_failures: 0,
        col_failures: 0,
        first_failure: None,
    };
    for (a, b) in lower.bits.pairs().filter(|(a, b)| a != b) {
        let (t, s) = (ln.tableau(a), ln.tableau(b));
        for x in 1..=n + 1 {
            let (tb, sb) = (t.shift_entries(x)?, s.shift_entries(x)?);
            let row = upper.relates(&lu, &tb.row_insert(x)?, &sb.row_insert(x)?)?;
            let col = upper.relates(&lu, &tb.col_insert(x)?, &sb.col_insert(x)?)?;
            report.pairs_checked += 1;
            report.row_failures += usize::from(!row);
            report.col_failures += usize::from(!col);
            if (!row || !col) && report.first_failure.is_none() {
                report.first_failure = Some((t.clone(), s.clone(), x));
            }
        }
    }
    Ok(report)
}
