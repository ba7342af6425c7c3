//! Command-line front end. [`run`] returns the exit code and both output
//! streams so it can be driven from tests.

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use crate::almost_abelian::{analyze, HolonomyInput, MostowStatus, Scale};
use crate::catalog::{catalog_get, catalog_names, CatalogError};
use crate::cohomology::{betti_numbers, build_complex, structural_checks, ComplexOptions};
use crate::io::{dump_structure_file, parse_matrix, parse_structure_file, StructureError};
use crate::lie::{
    completely_solvable_flag, derived_series, is_nilpotent, is_solvable, is_unimodular,
    lower_central_series, FlagStatus, LieAlgebra, Subspace,
};
use crate::splitting::{kill_map, modified_bracket, KillMode, SplittingInput};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH: i32 = 1;
pub const EXIT_UNDETERMINED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "solvco",
    version,
    about = "Exact cohomology and splittings of solvable Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Tsv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kill {
    Full,
    Compact,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum ScaleArg {
    #[value(name = "1")]
    One,
    Pi,
}

/// FILE arguments accept a path, a catalog name, or `-` for stdin.
#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a structure file and check antisymmetry and the Jacobi identity.
    Validate { file: String },
    /// Derived and lower central series, unimodularity, completely solvable flag.
    Info {
        file: String,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Chevalley-Eilenberg cohomology.
    Cohomology {
        file: String,
        /// Print cocycle representatives.
        #[arg(long)]
        reps: bool,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Modified bracket removing the semisimple action of a complement V.
    Split {
        file: String,
        /// 1-based basis indices spanning V, e.g. 1,2.
        #[arg(long)]
        complement: String,
        #[arg(long, value_enum)]
        kill: Kill,
    },
    /// Lattice analysis of R x_phi R^n.
    AlmostAbelian {
        /// Matrix file with the integer holonomy phi(1).
        #[arg(long)]
        holonomy: String,
        /// Matrix file with a rational derivation Z generating phi.
        #[arg(long)]
        derivation: Option<String>,
        #[arg(long, value_enum, default_value = "1", requires = "derivation")]
        scale: ScaleArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// List the built-in algebras, or print one as a structure file.
    Catalog { name: Option<String> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Key/value records printed as `key value` or `key<TAB>value`. Keys are
/// dotted paths; plain output joins their parts with spaces.
struct Report {
    format: Format,
    out: String,
}

impl Report {
    fn new(format: Format) -> Self {
        Self {
            format,
            out: String::new(),
        }
    }

    fn put(&mut self, key: &str, value: impl std::fmt::Display) {
        match self.format {
            Format::Plain => writeln!(self.out, "{} {value}", key.replace('.', " ")).unwrap(),
            Format::Tsv => writeln!(self.out, "{key}\t{value}").unwrap(),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn read_source(
    file: &str,
    stdin: &mut dyn FnMut() -> std::io::Result<String>,
) -> Result<String, Outcome> {
    if file == "-" {
        return stdin().map_err(|e| Outcome::fail(EXIT_USAGE, format!("reading stdin: {e}")));
    }
    if Path::new(file).exists() {
        return std::fs::read_to_string(file)
            .map_err(|e| Outcome::fail(EXIT_USAGE, format!("{file}: {e}")));
    }
    match catalog_get(file) {
        Ok(entry) => Ok(dump_structure_file(&entry.algebra)),
        Err(CatalogError::UnknownName(_)) => Err(Outcome::fail(
            EXIT_USAGE,
            format!("{file}: no such file or catalog entry"),
        )),
        Err(e) => Err(Outcome::fail(EXIT_MATH, e)),
    }
}

fn load_algebra(
    file: &str,
    stdin: &mut dyn FnMut() -> std::io::Result<String>,
) -> Result<LieAlgebra, Outcome> {
    let text = read_source(file, stdin)?;
    parse_structure_file(&text).map_err(|e| match e {
        StructureError::Parse(p) => Outcome::fail(EXIT_USAGE, format!("{file}: {p}")),
        StructureError::Lie(l) => Outcome::fail(EXIT_MATH, format!("{file}: {l}")),
    })
}

fn load_matrix(
    file: &str,
    stdin: &mut dyn FnMut() -> std::io::Result<String>,
) -> Result<crate::linalg::Matrix, Outcome> {
    let text = if file == "-" || Path::new(file).exists() {
        read_source(file, stdin)?
    } else {
        return Err(Outcome::fail(EXIT_USAGE, format!("{file}: no such file")));
    };
    parse_matrix(&text).map_err(|e| Outcome::fail(EXIT_USAGE, format!("{file}: {e}")))
}

fn series_dims(series: &[Subspace]) -> String {
    series
        .iter()
        .map(|s| s.dim().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn cmd_info(g: &LieAlgebra, format: Format) -> Outcome {
    let mut r = Report::new(format);
    r.put("dim", g.dim());
    r.put("derived-series", series_dims(&derived_series(g)));
    r.put(
        "lower-central-series",
        series_dims(&lower_central_series(g)),
    );
    let solvable = is_solvable(g);
    r.put("solvable", yes_no(solvable));
    r.put("nilpotent", yes_no(is_nilpotent(g)));
    r.put("unimodular", yes_no(is_unimodular(g)));
    if !solvable {
        r.put("completely-solvable", "no");
        return Outcome::ok(r.out);
    }
    let cert = match completely_solvable_flag(g) {
        Ok(c) => c,
        Err(e) => return Outcome::fail(EXIT_MATH, e),
    };
    let status = match cert.status {
        FlagStatus::Yes => "yes",
        FlagStatus::No => "no",
        FlagStatus::Undetermined => "undetermined",
    };
    r.put("completely-solvable", status);
    if let Some(chain) = &cert.chain {
        for (i, ideal) in chain.iter().enumerate() {
            r.put(&format!("flag.{i}"), ideal);
        }
    }
    if let Some((i, factor)) = &cert.witness {
        r.put(
            "witness",
            format!(
                "ad(e{}) has minimal polynomial factor {factor} with non-real roots",
                i + 1
            ),
        );
    }
    let code = if cert.status == FlagStatus::Undetermined {
        EXIT_UNDETERMINED
    } else {
        EXIT_OK
    };
    Outcome {
        code,
        stdout: r.out,
        stderr: String::new(),
    }
}

fn cmd_cohomology(
    g: &LieAlgebra,
    reps: bool,
    max_degree: Option<usize>,
    format: Format,
) -> Outcome {
    let options = ComplexOptions {
        max_degree,
        ..ComplexOptions::default()
    };
    let cx = match build_complex(g, options) {
        Ok(cx) => cx,
        Err(e) => return Outcome::fail(EXIT_MATH, e),
    };
    let res = betti_numbers(&cx);
    let mut r = Report::new(format);
    for (k, b) in res.betti.iter().enumerate() {
        r.put(&format!("betti.{k}"), b);
    }
    let checks = structural_checks(&res, g);
    if let Some(e) = checks.euler_characteristic {
        r.put("euler", e);
    }
    r.put("unimodular", yes_no(checks.unimodular));
    if let Some(d) = checks.duality_holds {
        r.put("duality", yes_no(d));
    }
    r.put(
        "checks",
        if checks.all_ok() {
            "ok"
        } else {
            "inconsistent"
        },
    );
    if reps {
        for (k, vs) in res.representatives.iter().enumerate() {
            for (i, v) in vs.iter().enumerate() {
                r.put(
                    &format!("rep.{k}.{}", i + 1),
                    res.format_representative(k, v),
                );
            }
        }
    }
    if checks.all_ok() {
        Outcome::ok(r.out)
    } else {
        Outcome {
            code: EXIT_MATH,
            stdout: r.out,
            stderr: "error: structural checks failed\n".into(),
        }
    }
}

fn parse_index_list(list: &str, dim: usize) -> Result<Vec<usize>, Outcome> {
    let mut out = Vec::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.parse::<usize>() {
            Ok(i) if (1..=dim).contains(&i) && !out.contains(&(i - 1)) => out.push(i - 1),
            _ => {
                return Err(Outcome::fail(
                    EXIT_USAGE,
                    format!("bad complement index '{part}' (dimension {dim})"),
                ))
            }
        }
    }
    Ok(out)
}

fn cmd_split(g: LieAlgebra, complement: &str, kill: Kill) -> Outcome {
    let indices = match parse_index_list(complement, g.dim()) {
        Ok(i) => i,
        Err(o) => return o,
    };
    let mode = match kill {
        Kill::Full => KillMode::Full,
        Kill::Compact => KillMode::CompactOnly,
    };
    let result = SplittingInput::from_complement_indices(g, &indices)
        .and_then(|input| kill_map(&input, mode).and_then(|k| modified_bracket(&input, &k)));
    match result {
        Ok(res) => {
            let names: Vec<String> = indices.iter().map(|i| format!("e{}", i + 1)).collect();
            let kind = match kill {
                Kill::Full => "full",
                Kill::Compact => "compact",
            };
            let mut out = format!(
                "# modified bracket, kill {kind}, complement {}\n",
                names.join(",")
            );
            out.push_str(&dump_structure_file(&res.output));
            Outcome::ok(out)
        }
        Err(e) => Outcome::fail(EXIT_MATH, e),
    }
}

fn cmd_almost_abelian(
    holonomy: &str,
    derivation: Option<&str>,
    scale: ScaleArg,
    format: Format,
    stdin: &mut dyn FnMut() -> std::io::Result<String>,
) -> Outcome {
    let b = match load_matrix(holonomy, stdin) {
        Ok(m) => m,
        Err(o) => return o,
    };
    let z = match derivation.map(|d| load_matrix(d, stdin)).transpose() {
        Ok(z) => z,
        Err(o) => return o,
    };
    let scale = match scale {
        ScaleArg::One => Scale::One,
        ScaleArg::Pi => Scale::Pi,
    };
    let input = match HolonomyInput::new(Some(b), z.map(|z| (z, scale))) {
        Ok(i) => i,
        Err(e) => return Outcome::fail(EXIT_USAGE, e),
    };
    let report = match analyze(&input) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(EXIT_MATH, e),
    };
    let mut r = Report::new(format);
    if let Some(b1) = report.b1 {
        r.put("b1", b1);
    }
    match format {
        Format::Plain => r.put(
            "mostow",
            format!("{} {}", report.mostow.status, report.mostow.reason),
        ),
        Format::Tsv => {
            r.put("mostow.status", report.mostow.status);
            r.put("mostow.reason", &report.mostow.reason);
        }
    }
    for (d, mult) in &report.cyclotomic {
        r.put(&format!("cyclotomic.{d}"), mult);
    }
    if let Some(m) = report.order_m {
        r.put("order", m);
    }
    r.put("cover", report.cover_type);
    if let Some(b) = report.quotient_betti() {
        for (k, v) in b.iter().enumerate() {
            r.put(&format!("betti.{k}"), v);
        }
    }
    if let Some(b) = &report.cover_betti {
        for (k, v) in b.iter().enumerate() {
            r.put(&format!("cover-betti.{k}"), v);
        }
    }
    if let Some(b) = &report.algebra_betti {
        for (k, v) in b.iter().enumerate() {
            r.put(&format!("algebra-betti.{k}"), v);
        }
        r.put("derham-valid", yes_no(report.derham_valid));
    }
    let code = if report.mostow.status == MostowStatus::Undetermined {
        EXIT_UNDETERMINED
    } else {
        EXIT_OK
    };
    Outcome {
        code,
        stdout: r.out,
        stderr: String::new(),
    }
}

fn cmd_catalog(name: Option<&str>) -> Outcome {
    match name {
        None => {
            let mut out = String::new();
            for n in catalog_names() {
                let probe = if n == "abelian<N>" {
                    "abelian1".to_string()
                } else {
                    n.to_string()
                };
                match catalog_get(&probe) {
                    Ok(e) if n == "abelian<N>" => {
                        writeln!(out, "{n}\t{}\tabelian R^N", e.classification).unwrap()
                    }
                    Ok(e) => writeln!(out, "{n}\t{}\t{}", e.classification, e.note).unwrap(),
                    Err(err) => return Outcome::fail(EXIT_MATH, err),
                }
            }
            Outcome::ok(out)
        }
        Some(n) => match catalog_get(n) {
            Ok(e) => {
                let complement: Vec<String> =
                    e.complement.iter().map(|i| (i + 1).to_string()).collect();
                let mut out = format!("# {}: {}\n# {}\n", e.name, e.classification, e.note);
                if !complement.is_empty() {
                    writeln!(out, "# complement {}", complement.join(",")).unwrap();
                }
                out.push_str(&dump_structure_file(&e.algebra));
                Outcome::ok(out)
            }
            Err(e @ CatalogError::UnknownName(_)) => Outcome::fail(EXIT_USAGE, e),
            Err(e) => Outcome::fail(EXIT_MATH, e),
        },
    }
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with_stdin(args, &mut || {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map(|_| s)
    })
}

pub fn run_with_stdin<I, T>(args: I, stdin: &mut dyn FnMut() -> std::io::Result<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let result = match cli.command {
        Command::Validate { file } => {
            load_algebra(&file, stdin).map(|g| Outcome::ok(format!("valid: dim {}\n", g.dim())))
        }
        Command::Info { file, format } => load_algebra(&file, stdin).map(|g| cmd_info(&g, format)),
        Command::Cohomology {
            file,
            reps,
            max_degree,
            format,
        } => load_algebra(&file, stdin).map(|g| cmd_cohomology(&g, reps, max_degree, format)),
        Command::Split {
            file,
            complement,
            kill,
        } => load_algebra(&file, stdin).map(|g| cmd_split(g, &complement, kill)),
        Command::AlmostAbelian {
            holonomy,
            derivation,
            scale,
            format,
        } => Ok(cmd_almost_abelian(
            &holonomy,
            derivation.as_deref(),
            scale,
            format,
            stdin,
        )),
        Command::Catalog { name } => Ok(cmd_catalog(name.as_deref())),
    };
    result.unwrap_or_else(|o| o)
}
