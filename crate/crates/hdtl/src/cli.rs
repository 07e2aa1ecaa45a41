//! The `hdtl` command line.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a law check
//! finds a counterexample.

use std::fmt::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hdtl_core::tables::multiplication_table_with_limit;
use hdtl_core::{
    automorphism_group, check_laws, dimensions, parse_boundary, AlgebraElement, BoundaryConfig, Composer, HomSpace,
    LawMode, LawReport, ShClass,
};
use serde::{Deserialize, Serialize};

use crate::format::{serialize_table, TableFormat};

#[derive(Debug, Parser)]
#[command(name = "hdtl", version, about = "Heterotopy classes of surface diagrams between circle configurations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Write the result to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableOutput {
    Markdown,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the heterotopy classes between two configurations.
    Classes {
        top: String,
        bottom: String,
        /// List every strong-heterotopy class instead of orbit representatives.
        #[arg(long)]
        sh: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Print the boundary symmetry group of a configuration.
    Aut {
        config: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Compose two classes: `compose CFG A B` on `[CFG, CFG]`, or
    /// `compose --top T --mid M --bottom B A B`.
    Compose {
        #[arg(long)]
        top: Option<String>,
        #[arg(long)]
        mid: Option<String>,
        #[arg(long)]
        bottom: Option<String>,
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Multiplication table of the endomorphism algebra of a configuration.
    Table {
        config: String,
        #[arg(long, value_enum, default_value_t = TableOutput::Markdown)]
        format: TableOutput,
        /// Refuse bases larger than this.
        #[arg(long, default_value_t = hdtl_core::tables::DEFAULT_BASIS_LIMIT)]
        limit: usize,
    },
    /// Check unit and associativity laws.
    Check {
        config: String,
        #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Count classes and group orders between two configurations.
    Dims {
        top: String,
        bottom: String,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

/// Result of one invocation.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn failure(message: impl std::fmt::Display) -> Self {
        Self { code: 1, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let (code, text) = match execute(&cli.command) {
        Ok(done) => done,
        Err(message) => return Outcome::failure(message),
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome { code, ..Default::default() },
            Err(e) => Outcome::failure(format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome { code, stdout: text, stderr: String::new() },
    }
}

fn config(text: &str) -> Result<BoundaryConfig, String> {
    parse_boundary(text).map_err(|e| format!("{text:?}: {e}"))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("documents serialise");
    s.push('\n');
    s
}

fn execute(command: &Command) -> Result<(i32, String), String> {
    match command {
        Command::Classes { top, bottom, sh, format } => classes(&config(top)?, &config(bottom)?, *sh, *format),
        Command::Aut { config: c, format } => Ok((0, aut(&config(c)?, *format))),
        Command::Compose { top, mid, bottom, args, format } => compose(top, mid, bottom, args, *format),
        Command::Table { config: c, format, limit } => {
            let t = multiplication_table_with_limit(&config(c)?, *limit).map_err(|e| e.to_string())?;
            let format = match format {
                TableOutput::Markdown => TableFormat::Markdown,
                TableOutput::Csv => TableFormat::Csv,
                TableOutput::Json => TableFormat::Json,
            };
            let mut text = serialize_table(&t, format).map_err(|e| e.to_string())?;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            Ok((0, text))
        }
        Command::Check { config: c, mode, seed, samples, format } => {
            let mode = match mode {
                Mode::Exhaustive => LawMode::Exhaustive,
                Mode::Sampled => LawMode::Sampled { seed: *seed, samples: *samples },
            };
            let report = check_laws(&config(c)?, mode);
            let code = if report.passed() { 0 } else { 2 };
            let text = match format {
                OutputFormat::Text => report_text(&report),
                OutputFormat::Json => json(&LawsDocument::from(&report)),
            };
            Ok((code, text))
        }
        Command::Dims { top, bottom, format } => {
            let (t, b) = (config(top)?, config(bottom)?);
            let d = dimensions(&t, &b);
            Ok((
                0,
                match format {
                    OutputFormat::Text => format!(
                        "sh={} h={} |Pi_top|={} |Pi_bottom|={}\n",
                        d.sh_classes, d.h_classes, d.top_group_order, d.bottom_group_order
                    ),
                    OutputFormat::Json => json(&DimsDocument {
                        schema: "hdtl-dims/1".into(),
                        top: t.render(),
                        bottom: b.render(),
                        sh_classes: d.sh_classes,
                        h_classes: d.h_classes,
                        top_group_order: d.top_group_order,
                        bottom_group_order: d.bottom_group_order,
                    }),
                },
            ))
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimsDocument {
    pub schema: String,
    pub top: String,
    pub bottom: String,
    pub sh_classes: usize,
    pub h_classes: usize,
    pub top_group_order: usize,
    pub bottom_group_order: usize,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutDocument {
    pub schema: String,
    pub config: String,
    pub order: usize,
    pub elements: Vec<AutElement>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutElement {
    pub cycles: String,
    pub images: Vec<usize>,
}

fn aut(cfg: &BoundaryConfig, format: OutputFormat) -> String {
    let g = automorphism_group(cfg);
    match format {
        OutputFormat::Text => {
            let mut out = format!("order={}\n", g.order());
            for e in g.elements() {
                writeln!(out, "{}", e.cycles("t")).unwrap();
            }
            out
        }
        OutputFormat::Json => json(&AutDocument {
            schema: "hdtl-aut/1".into(),
            config: cfg.render(),
            order: g.order(),
            elements: g
                .elements()
                .iter()
                .map(|e| AutElement { cycles: e.cycles("t"), images: e.images().to_vec() })
                .collect(),
        }),
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassesDocument {
    pub schema: String,
    pub top: String,
    pub bottom: String,
    pub sh_classes: Vec<String>,
    pub h_classes: Vec<HClassEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HClassEntry {
    pub representative: String,
    pub orbit: Vec<String>,
}

fn classes(
    top: &BoundaryConfig,
    bottom: &BoundaryConfig,
    sh: bool,
    format: OutputFormat,
) -> Result<(i32, String), String> {
    let space = HomSpace::new(top, bottom);
    let all = space.sh_classes();
    let reps = space.h_classes();
    let orbit = |h: &hdtl_core::HClass| -> Vec<String> {
        space.orbit(h.representative()).expect("same space").iter().map(|s| s.to_string()).collect()
    };
    let text = match format {
        OutputFormat::Json => json(&ClassesDocument {
            schema: "hdtl-classes/1".into(),
            top: top.render(),
            bottom: bottom.render(),
            sh_classes: all.iter().map(|s| s.to_string()).collect(),
            h_classes: reps.iter().map(|h| HClassEntry { representative: h.to_string(), orbit: orbit(h) }).collect(),
        }),
        OutputFormat::Text if sh => {
            let mut out = format!("sh={}\n", all.len());
            for s in &all {
                writeln!(out, "[{s}]").unwrap();
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!("h={} sh={}\n", reps.len(), all.len());
            for (k, h) in reps.iter().enumerate() {
                writeln!(out, "D{} [{h}] orbit={}", k + 1, orbit(h).len()).unwrap();
            }
            out
        }
    };
    Ok((0, text))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDocument {
    pub schema: String,
    pub top: String,
    pub bottom: String,
    /// `[class, coefficient]` pairs.
    pub terms: Vec<(String, String)>,
}

fn compose(
    top: &Option<String>,
    mid: &Option<String>,
    bottom: &Option<String>,
    args: &[String],
    format: OutputFormat,
) -> Result<(i32, String), String> {
    let (t, m, b, a_text, b_text) = match (top, mid, bottom, args) {
        (None, None, None, [c, x, y]) => {
            let c = config(c)?;
            (c.clone(), c.clone(), c, x, y)
        }
        (_, Some(m), _, [x, y]) => {
            let m = config(m)?;
            let t = top.as_deref().map(config).transpose()?.unwrap_or_else(|| m.clone());
            let b = bottom.as_deref().map(config).transpose()?.unwrap_or_else(|| m.clone());
            (t, m, b, x, y)
        }
        _ => {
            return Err("expected `compose CFG A B` or `compose --mid M [--top T] [--bottom B] A B`".into());
        }
    };
    let a = ShClass::parse(&t, &m, a_text).map_err(|e| format!("first class {a_text:?}: {e}"))?;
    let bb = ShClass::parse(&m, &b, b_text).map_err(|e| format!("second class {b_text:?}: {e}"))?;
    let ha = HomSpace::new(&t, &m).h_class(&a).map_err(|e| e.to_string())?;
    let hb = HomSpace::new(&m, &b).h_class(&bb).map_err(|e| e.to_string())?;
    let product: AlgebraElement = Composer::new(&t, &m, &b).compose_h(&ha, &hb).map_err(|e| e.to_string())?;
    let text = match format {
        OutputFormat::Text => format!("{product}\n"),
        OutputFormat::Json => json(&ElementDocument {
            schema: "hdtl-element/1".into(),
            top: t.render(),
            bottom: b.render(),
            terms: product.terms().map(|(h, c)| (h.to_string(), c.to_string())).collect(),
        }),
    };
    Ok((0, text))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LawsDocument {
    pub schema: String,
    pub config: String,
    pub mode: String,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub basis_size: usize,
    pub passed: bool,
    pub checks: Vec<LawEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LawEntry {
    pub law: String,
    pub tested: u64,
    pub passed: bool,
    pub counterexample: Option<CounterexampleEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CounterexampleEntry {
    pub classes: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl From<&LawReport> for LawsDocument {
    fn from(r: &LawReport) -> Self {
        let (mode, seed, samples) = match r.mode {
            LawMode::Exhaustive => ("exhaustive", None, None),
            LawMode::Sampled { seed, samples } => ("sampled", Some(seed), Some(samples)),
        };
        Self {
            schema: "hdtl-laws/1".into(),
            config: r.config.render(),
            mode: mode.into(),
            seed,
            samples,
            basis_size: r.basis_size,
            passed: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| LawEntry {
                    law: c.law.into(),
                    tested: c.tested,
                    passed: c.passed,
                    counterexample: c.counterexample.as_ref().map(|x| CounterexampleEntry {
                        classes: x.classes.iter().map(|h| h.to_string()).collect(),
                        lhs: x.lhs.clone(),
                        rhs: x.rhs.clone(),
                    }),
                })
                .collect(),
        }
    }
}

fn report_text(r: &LawReport) -> String {
    let mut out = match r.mode {
        LawMode::Exhaustive => format!("config={:?} mode=exhaustive basis={}\n", r.config.render(), r.basis_size),
        LawMode::Sampled { seed, samples } => format!(
            "config={:?} mode=sampled seed={seed} samples={samples} basis={}\n",
            r.config.render(),
            r.basis_size
        ),
    };
    for c in &r.checks {
        let verdict = if c.passed { "pass" } else { "FAIL" };
        writeln!(out, "{}: {verdict} ({} tested)", c.law, c.tested).unwrap();
        if let Some(x) = &c.counterexample {
            let classes: Vec<String> = x.classes.iter().map(|h| format!("[{h}]")).collect();
            writeln!(out, "  counterexample: {}", classes.join(" ")).unwrap();
            writeln!(out, "  lhs: {}", x.lhs).unwrap();
            writeln!(out, "  rhs: {}", x.rhs).unwrap();
        }
    }
    out
}
