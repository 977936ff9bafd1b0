//! Command line surface over the tableau library: transforms compose
//! through stdin and stdout, verification suites exercise the exhaustive
//! universes, and every structured payload carries a schema tag.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on invalid
//! input.

mod io;
mod verify;

use anyhow::{bail, Result};
use clap::{Parser, Subcommand, ValueEnum};
use inctab::dynamics::{
    dual_evacuate, evacuate, promote_inverse, promote_steps, promotion_orbit, GrowthDiagram,
};
use inctab::enumerate::{enumerate_shape, enumerate_two_row};
use inctab::examples::{verify_example, EXAMPLE_IDS};
use inctab::flag::{skew_of, to_flag};
use inctab::frieze::{classify_row, jdt_frieze, TropicalFrieze};
use inctab::json::{CspReportDto, FriezeDto, GrowthDto, PartitionDto, TableauDto};
use inctab::noncrossing::{to_ncpartition, typeb_bruteforce, typeb_count, typeb_symmetric_total};
use inctab::qpoly::{cyclotomic, f_poly, q_binomial, IntPolynomial};
use inctab::render::{render_frieze, render_growth, render_skew};
use inctab::sieving::{csp_evacuation, csp_promotion, maj_generating_function, CspReport};
use inctab::words::{height_word, to_steps};
use inctab::{IncreasingTableau, PartitionShape};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "inctab", version, about = "Increasing tableaux: dynamics, bijections, friezes, and sieving checks")]
struct Cli {
    /// Output format for structured results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Promotion,
    Evacuation,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Bijections,
    Dynamics,
    Words,
    Frieze,
    Csp,
    Identities,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Path,
    Word,
    Flag,
    Skew,
    Partition,
}

#[derive(Subcommand)]
enum Command {
    /// Promote the tableau read from stdin.
    Promote {
        /// Number of promotions to apply.
        #[arg(long, default_value_t = 1)]
        steps: u64,
    },
    /// Undo one promotion of the tableau read from stdin.
    PromoteInv,
    /// Evacuate the tableau read from stdin.
    Evacuate {
        /// Conjugate by the half turn instead (rectangular input only).
        #[arg(long)]
        dual: bool,
    },
    /// Rotate a rectangular tableau by a half turn, complementing entries.
    Rot,
    /// Re-encode a two-row rectangular tableau.
    Biject {
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Print a tropical frieze, from a seed row or from a tableau on stdin.
    Frieze {
        /// Comma-separated seed row with zero ends, instead of stdin.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        row: Option<Vec<i64>>,
        /// Number of rows to generate from a seed row.
        #[arg(long)]
        depth: Option<usize>,
        /// Report which row conditions each row satisfies.
        #[arg(long)]
        classify: bool,
    },
    /// Print the promotion orbit of the tableau read from stdin.
    Orbit,
    /// Print the growth diagram of the tableau read from stdin.
    Growth,
    /// List a universe of tableaux.
    Enumerate {
        /// Columns of the two-row rectangle.
        #[arg(long, conflicts_with = "shape")]
        n: Option<usize>,
        /// Number of repeated values.
        #[arg(long, default_value_t = 0)]
        k: usize,
        /// Comma-separated row lengths, for example 4,4,4.
        #[arg(long)]
        shape: Option<String>,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Census of a shape across every repeat count.
    Scan {
        /// Comma-separated row lengths, for example 4,4,4.
        #[arg(long)]
        shape: String,
        /// Restrict to one repeat count.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Recompute bundled worked examples and diff against frozen data.
    Examples {
        /// One of fig2, fig3, fig4, fig5, fig7, ex-4row, ex-3row,
        /// ex-frieze; all of them when omitted.
        id: Option<String>,
    },
    /// Run a verification suite over exhaustive small universes.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest two-row width to cover.
        #[arg(long, env = "INCTAB_N_MAX", default_value_t = 6)]
        n_max: usize,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Fixed-point table of a cyclic action against the q-count.
    Csp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Group::Promotion)]
        group: Group,
    },
    /// Print q-polynomials: the q-count, the major index distribution,
    /// a q-binomial, or a cyclotomic polynomial.
    Qpoly {
        /// The q-count for the two-row universe: N K.
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        f: Option<Vec<u64>>,
        /// Major index distribution over the two-row universe: N K.
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        maj: Option<Vec<u64>>,
        /// Gaussian binomial coefficient: N K.
        #[arg(long, num_args = 2, value_names = ["N", "K"])]
        qbinom: Option<Vec<u64>>,
        /// Cyclotomic polynomial of the given order.
        #[arg(long, value_name = "D")]
        cyclotomic: Option<u64>,
    },
    /// Tabulate half-turn symmetric partition counts by brute force and
    /// compare with the closed forms.
    Typeb {
        /// Half size to enumerate, at most 8.
        #[arg(long, value_name = "N")]
        brute: u64,
    },
    /// Check the count identities up to a bound.
    Identities {
        #[arg(long, default_value_t = 30)]
        max_n: u64,
    },
}

fn main() {
    // Die quietly when a downstream pipe closes, like any filter.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => {}
        Ok(false) => std::process::exit(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn emit_tableau(t: &IncreasingTableau, format: Format) -> Result<()> {
    match format {
        Format::Text => println!("{t}"),
        Format::Json => io::print_json(&TableauDto::of(t))?,
    }
    Ok(())
}

#[derive(Serialize)]
struct PathPayload {
    schema: &'static str,
    path: String,
}

#[derive(Serialize)]
struct WordPayload {
    schema: &'static str,
    word: Vec<u32>,
}

#[derive(Serialize)]
struct SkewPayload {
    schema: &'static str,
    hat: Vec<u32>,
    body: [Vec<u32>; 2],
}

#[derive(Serialize)]
struct OrbitPayload {
    schema: &'static str,
    size: usize,
    tableaux: Vec<TableauDto>,
}

#[derive(Serialize)]
struct FriezeReportPayload {
    schema: &'static str,
    rows: Vec<Vec<i64>>,
    encodes_word: Vec<bool>,
    encodes_standard_word: Vec<bool>,
}

#[derive(Serialize)]
struct CountPayload {
    schema: &'static str,
    shape: Vec<usize>,
    counts: Vec<(usize, usize)>,
    total: usize,
}

#[derive(Serialize)]
struct ExamplesPayload {
    schema: &'static str,
    reports: Vec<ExampleEntry>,
}

#[derive(Serialize)]
struct ExampleEntry {
    id: String,
    ok: bool,
    checks: Vec<(String, bool, String)>,
}

#[derive(Serialize)]
struct VerifyPayload {
    schema: &'static str,
    suites: Vec<String>,
    n_max: usize,
    failures: Vec<String>,
    ok: bool,
}

#[derive(Serialize)]
struct PolyPayload {
    schema: &'static str,
    name: String,
    coeffs: Vec<String>,
}

#[derive(Serialize)]
struct TypebPayload {
    schema: &'static str,
    n: u64,
    rows: Vec<TypebRow>,
    ok: bool,
}

#[derive(Serialize)]
struct TypebRow {
    pairs: u64,
    central: bool,
    strict: u64,
    strict_formula: String,
    total: u64,
    total_formula: String,
    ok: bool,
}

/// Exhaustive sweeps stay at desk scale.
const TWO_ROW_MAX: usize = 8;
const SHAPE_BOX_MAX: usize = 13;

fn check_two_row_bound(n: usize) -> Result<()> {
    if n > TWO_ROW_MAX {
        bail!("two-row universes are bounded at n = {TWO_ROW_MAX}, got {n}");
    }
    Ok(())
}

fn parse_shape(text: &str) -> Result<PartitionShape> {
    let parts: Vec<usize> = text
        .split([',', ' '])
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|e| anyhow::anyhow!("bad row length {s:?}: {e}")))
        .collect::<Result<_>>()?;
    let shape = PartitionShape::new(parts)?;
    if shape.size() > SHAPE_BOX_MAX {
        bail!("shape sweeps are bounded at {SHAPE_BOX_MAX} boxes, got {}", shape.size());
    }
    Ok(shape)
}

fn emit_poly(p: &IntPolynomial, name: &str, format: Format) -> Result<()> {
    match format {
        Format::Text => println!("{}", io::poly_text(p)),
        Format::Json => io::print_json(&PolyPayload {
            schema: "inctab.qpoly.v1",
            name: name.to_string(),
            coeffs: io::poly_coeffs(p),
        })?,
    }
    Ok(())
}

fn csp_table(report: &CspReport, format: Format) -> Result<bool> {
    match format {
        Format::Json => io::print_json(&CspReportDto::of(report))?,
        Format::Text => {
            println!(
                "universe 2 x {}, {} repeats; cyclic order {}",
                report.n, report.k, report.order
            );
            println!("{:>4} {:>8} {:>8}  ok", "m", "fixed", "value");
            for e in &report.entries {
                println!(
                    "{:>4} {:>8} {:>8}  {}",
                    e.m,
                    e.fixed,
                    e.f_value,
                    if e.ok { "yes" } else { "NO" }
                );
            }
            println!("{}", if report.ok { "all entries agree" } else { "DISAGREEMENT" });
        }
    }
    Ok(report.ok)
}

fn run(cli: &Cli) -> Result<bool> {
    let format = cli.format;
    match &cli.command {
        Command::Promote { steps } => {
            let t = io::read_tableau()?;
            emit_tableau(&promote_steps(&t, *steps), format)?;
        }
        Command::PromoteInv => {
            let t = io::read_tableau()?;
            emit_tableau(&promote_inverse(&t)?, format)?;
        }
        Command::Evacuate { dual } => {
            let t = io::read_tableau()?;
            let out = if *dual { dual_evacuate(&t)? } else { evacuate(&t) };
            emit_tableau(&out, format)?;
        }
        Command::Rot => {
            let t = io::read_tableau()?;
            emit_tableau(&t.rot()?, format)?;
        }
        Command::Biject { to } => {
            let t = io::read_tableau()?;
            match to {
                Target::Path => {
                    let path = to_steps(&t)?.to_string();
                    match format {
                        Format::Text => println!("{path}"),
                        Format::Json => {
                            io::print_json(&PathPayload { schema: "inctab.path.v1", path })?
                        }
                    }
                }
                Target::Word => {
                    let word = height_word(&t)?.as_slice().to_vec();
                    match format {
                        Format::Text => println!(
                            "{}",
                            word.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
                        ),
                        Format::Json => {
                            io::print_json(&WordPayload { schema: "inctab.word.v1", word })?
                        }
                    }
                }
                Target::Flag => emit_tableau(&to_flag(&t)?, format)?,
                Target::Skew => {
                    let s = skew_of(&t)?;
                    match format {
                        Format::Text => println!("{}", render_skew(&s)),
                        Format::Json => io::print_json(&SkewPayload {
                            schema: "inctab.skew.v1",
                            hat: s.hat().to_vec(),
                            body: s.body_rows().clone(),
                        })?,
                    }
                }
                Target::Partition => {
                    let p = to_ncpartition(&t)?;
                    match format {
                        Format::Text => println!("{p}"),
                        Format::Json => io::print_json(&PartitionDto::of(&p))?,
                    }
                }
            }
        }
        Command::Frieze { row, depth, classify } => {
            let fr = match row {
                Some(seed) => {
                    let d = depth.unwrap_or(2 * (seed.len() + 1) + 1);
                    TropicalFrieze::from_seed(seed.clone(), d)?
                }
                None => {
                    let t = io::read_tableau()?;
                    jdt_frieze(&t)?
                }
            };
            if *classify {
                let conditions: Vec<_> = fr.rows().iter().map(|r| classify_row(r)).collect();
                match format {
                    Format::Json => io::print_json(&FriezeReportPayload {
                        schema: "inctab.frieze-report.v1",
                        rows: fr.rows().to_vec(),
                        encodes_word: conditions.iter().map(|c| c.encodes_word()).collect(),
                        encodes_standard_word: conditions
                            .iter()
                            .map(|c| c.encodes_standard_word())
                            .collect(),
                    })?,
                    Format::Text => {
                        for (row, c) in fr.rows().iter().zip(&conditions) {
                            let kind = if c.encodes_standard_word() {
                                "standard word"
                            } else if c.encodes_word() {
                                "word"
                            } else {
                                "free"
                            };
                            let body =
                                row.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
                            println!("{body}  [{kind}]");
                        }
                    }
                }
            } else {
                match format {
                    Format::Json => io::print_json(&FriezeDto::of(&fr))?,
                    Format::Text => println!("{}", render_frieze(&fr)),
                }
            }
        }
        Command::Orbit => {
            let t = io::read_tableau()?;
            let orbit = promotion_orbit(&t)?;
            match format {
                Format::Json => io::print_json(&OrbitPayload {
                    schema: "inctab.orbit.v1",
                    size: orbit.len(),
                    tableaux: orbit.iter().map(TableauDto::of).collect(),
                })?,
                Format::Text => {
                    println!("orbit size {}", orbit.len());
                    for t in &orbit {
                        println!();
                        println!("{t}");
                    }
                }
            }
        }
        Command::Growth => {
            let t = io::read_tableau()?;
            let g = GrowthDiagram::new(&t);
            match format {
                Format::Json => io::print_json(&GrowthDto::of(&g))?,
                Format::Text => println!("{}", render_growth(&g)),
            }
        }
        Command::Enumerate { n, k, shape, count } => {
            let universe = match (n, shape) {
                (Some(n), None) => {
                    check_two_row_bound(*n)?;
                    enumerate_two_row(*n, *k)
                }
                (None, Some(s)) => enumerate_shape(&parse_shape(s)?, *k),
                _ => bail!("pass exactly one of --n or --shape"),
            };
            if *count {
                println!("{}", universe.len());
            } else {
                match format {
                    Format::Json => {
                        io::print_json(&universe.iter().map(TableauDto::of).collect::<Vec<_>>())?
                    }
                    Format::Text => {
                        for (i, t) in universe.iter().enumerate() {
                            if i > 0 {
                                println!();
                            }
                            println!("{t}");
                        }
                    }
                }
            }
        }
        Command::Scan { shape, k } => {
            let shape = parse_shape(shape)?;
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (0..=shape.size()).collect(),
            };
            let counts: Vec<(usize, usize)> = ks
                .iter()
                .map(|&k| (k, enumerate_shape(&shape, k).len()))
                .filter(|&(_, c)| c > 0)
                .collect();
            let total = counts.iter().map(|&(_, c)| c).sum();
            match format {
                Format::Json => io::print_json(&CountPayload {
                    schema: "inctab.scan.v1",
                    shape: shape.parts().to_vec(),
                    counts,
                    total,
                })?,
                Format::Text => {
                    println!("shape {shape}");
                    println!("{:>4} {:>8}", "k", "count");
                    for (k, c) in &counts {
                        println!("{k:>4} {c:>8}");
                    }
                    println!("total {total}");
                }
            }
        }
        Command::Examples { id } => {
            let ids: Vec<&str> = match id {
                Some(id) => {
                    if !EXAMPLE_IDS.contains(&id.as_str()) {
                        bail!("unknown example {id:?}; expected one of {}", EXAMPLE_IDS.join(", "));
                    }
                    vec![id.as_str()]
                }
                None => EXAMPLE_IDS.to_vec(),
            };
            let reports: Vec<_> = ids.iter().map(|id| verify_example(id).unwrap()).collect();
            let ok = reports.iter().all(|r| r.passed());
            match format {
                Format::Json => io::print_json(&ExamplesPayload {
                    schema: "inctab.examples.v1",
                    reports: reports
                        .iter()
                        .map(|r| ExampleEntry {
                            id: r.id.clone(),
                            ok: r.passed(),
                            checks: r
                                .checks
                                .iter()
                                .map(|c| (c.label.clone(), c.passed, c.detail.clone()))
                                .collect(),
                        })
                        .collect(),
                })?,
                Format::Text => {
                    for r in &reports {
                        println!("== {} ==", r.id);
                        println!("{}", r.artifact);
                        for c in &r.checks {
                            if c.passed {
                                println!("ok   {}", c.label);
                            } else {
                                println!("FAIL {}: {}", c.label, c.detail);
                            }
                        }
                        println!();
                    }
                }
            }
            return Ok(ok);
        }
        Command::Verify { suite, n_max, jobs } => {
            check_two_row_bound(*n_max)?;
            if let Some(jobs) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(*jobs)
                    .build_global()
                    .map_err(|e| anyhow::anyhow!("thread pool: {e}"))?;
            }
            let names: Vec<&str> = match suite {
                Suite::All => verify::SUITE_NAMES.to_vec(),
                Suite::Bijections => vec!["bijections"],
                Suite::Dynamics => vec!["dynamics"],
                Suite::Words => vec!["words"],
                Suite::Frieze => vec!["frieze"],
                Suite::Csp => vec!["csp"],
                Suite::Identities => vec!["identities"],
            };
            let mut failures = Vec::new();
            for name in &names {
                let bad = verify::run_suite(name, *n_max);
                if format == Format::Text {
                    if bad.is_empty() {
                        println!("suite {name}: pass");
                    } else {
                        println!("suite {name}: FAIL ({} witnesses)", bad.len());
                        for w in &bad {
                            println!("{w}");
                        }
                    }
                }
                failures.extend(bad);
            }
            let ok = failures.is_empty();
            if format == Format::Json {
                io::print_json(&VerifyPayload {
                    schema: "inctab.verify.v1",
                    suites: names.iter().map(|s| s.to_string()).collect(),
                    n_max: *n_max,
                    failures,
                    ok,
                })?;
            }
            return Ok(ok);
        }
        Command::Csp { n, k, group } => {
            check_two_row_bound(*n)?;
            if *k >= *n {
                bail!("k must be below n, got n={n} k={k}");
            }
            let report = match group {
                Group::Promotion => csp_promotion(*n, *k),
                Group::Evacuation => csp_evacuation(*n, *k),
            };
            return csp_table(&report, format);
        }
        Command::Qpoly { f, maj, qbinom, cyclotomic: cyc } => {
            let picked = [f.is_some(), maj.is_some(), qbinom.is_some(), cyc.is_some()]
                .iter()
                .filter(|&&b| b)
                .count();
            if picked != 1 {
                bail!("pass exactly one of --f, --maj, --qbinom, --cyclotomic");
            }
            if let Some(args) = f {
                let (n, k) = (args[0], args[1]);
                if n == 0 || k >= n {
                    bail!("the q-count needs 1 <= n and k < n, got n={n} k={k}");
                }
                emit_poly(&f_poly(n, k), &format!("f({n},{k})"), format)?;
            } else if let Some(args) = maj {
                let (n, k) = (args[0], args[1]);
                if n == 0 || k >= n {
                    bail!("the distribution needs 1 <= n and k < n, got n={n} k={k}");
                }
                let p = maj_generating_function(n as usize, k as usize);
                emit_poly(&p, &format!("maj({n},{k})"), format)?;
            } else if let Some(args) = qbinom {
                emit_poly(&q_binomial(args[0], args[1]), &format!("qbinom({},{})", args[0], args[1]), format)?;
            } else if let Some(d) = cyc {
                if *d == 0 {
                    bail!("cyclotomic order must be positive");
                }
                emit_poly(&cyclotomic(*d), &format!("cyclotomic({d})"), format)?;
            }
        }
        Command::Typeb { brute } => {
            let n = *brute;
            if n > 8 {
                bail!("brute force is limited to half size 8, got {n}");
            }
            let table = typeb_bruteforce(n);
            let mut rows = Vec::new();
            for pairs in 0..=n {
                for central in [false, true] {
                    let strict = table.get(&(pairs, central, true)).copied().unwrap_or(0);
                    let loose = table.get(&(pairs, central, false)).copied().unwrap_or(0);
                    let total = strict + loose;
                    if strict == 0 && total == 0 {
                        continue;
                    }
                    let strict_formula = typeb_count(n, pairs, central);
                    let total_formula = typeb_symmetric_total(n, pairs, central);
                    let ok = strict_formula == strict.into() && total_formula == total.into();
                    rows.push(TypebRow {
                        pairs,
                        central,
                        strict,
                        strict_formula: strict_formula.to_string(),
                        total,
                        total_formula: total_formula.to_string(),
                        ok,
                    });
                }
            }
            let ok = rows.iter().all(|r| r.ok);
            match format {
                Format::Json => {
                    io::print_json(&TypebPayload { schema: "inctab.typeb.v1", n, rows, ok })?
                }
                Format::Text => {
                    println!("half-turn symmetric partitions of 1..={}", 2 * n);
                    println!(
                        "{:>6} {:>8} {:>8} {:>8} {:>8} {:>8}  ok",
                        "pairs", "central", "strict", "formula", "total", "formula"
                    );
                    for r in &rows {
                        println!(
                            "{:>6} {:>8} {:>8} {:>8} {:>8} {:>8}  {}",
                            r.pairs,
                            r.central,
                            r.strict,
                            r.strict_formula,
                            r.total,
                            r.total_formula,
                            if r.ok { "yes" } else { "NO" }
                        );
                    }
                }
            }
            return Ok(ok);
        }
        Command::Identities { max_n } => {
            let failures = verify::identities(6, *max_n);
            let ok = failures.is_empty();
            match format {
                Format::Json => io::print_json(&VerifyPayload {
                    schema: "inctab.verify.v1",
                    suites: vec!["identities".to_string()],
                    n_max: 6,
                    failures,
                    ok,
                })?,
                Format::Text => {
                    if ok {
                        println!("all identities hold up to half size {max_n}");
                    } else {
                        for w in &failures {
                            println!("{w}");
                        }
                    }
                }
            }
            return Ok(ok);
        }
    }
    Ok(true)
}
