//! The `young` command line.
//!
//! Exit status is 0 on success, 1 when a verification fails or a search
//! finds nothing, and 2 for usage, parse and I/O errors. Reports go to
//! `out`, diagnostics to `err`.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::partition::Shape;
use crate::poset::{
    build_lattice, check_splitting_identities, gaussian_binomial, parse_poset, write_poset,
    Coordinates,
};
use crate::render::{to_dot, to_svg, LabelMode, RenderSpec};
use crate::scd::{
    brute_force_scd, lindstrom, parse_decomposition, scd_n2, verify_scd, write_decomposition,
    SearchOutcome, DEFAULT_BUDGET,
};

#[derive(Parser, Debug)]
#[command(
    name = "young",
    version,
    about = "Finite Young lattices and their symmetric chain decompositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the poset file of L(M,N)
    Lattice {
        m: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = Coords::Partition)]
        coords: Coords,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the rank numbers of L(M,N), one per line
    Ranks { m: usize, n: usize },
    /// Check both splitting identities of L(M,N)
    Identities {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Symmetric chain decompositions
    Scd {
        #[command(subcommand)]
        command: ScdCommand,
    },
    /// Draw a poset file as DOT or SVG
    Render {
        poset: PathBuf,
        #[arg(long)]
        scd: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Labels::Partition)]
        labels: Labels,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ScdCommand {
    /// Recursive decomposition of L'(M,3)
    Lindstrom {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Alternating-color decomposition of L(M,2)
    N2 {
        m: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search on L(M,N)
    Brute {
        m: usize,
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a decomposition file against a poset file
    Verify { poset: PathBuf, scd: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Coords {
    Partition,
    Composition,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Svg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Labels {
    Partition,
    Composition,
    Young,
}

/// A failure that ends the command with a diagnostic on `err`.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Outcome {
    match command {
        Command::Lattice {
            m,
            n,
            coords,
            out: file,
        } => {
            let coords = match coords {
                Coords::Partition => Coordinates::Partition,
                Coords::Composition => Coordinates::Composition,
            };
            emit(
                &write_poset(&build_lattice(Shape::new(m, n), coords)),
                file,
                out,
            )
        }
        Command::Ranks { m, n } => {
            let mut text = String::new();
            for c in gaussian_binomial(m, n).coefficients() {
                text.push_str(&format!("{c}\n"));
            }
            emit(&text, None, out)
        }
        Command::Identities { m, n } => identities(m as usize, n as usize, out),
        Command::Scd { command } => scd(command, out),
        Command::Render {
            poset,
            scd,
            format,
            labels,
            out: file,
        } => {
            let p = read(&poset, parse_poset)?;
            let mut spec = RenderSpec::for_poset(&p).labels(match labels {
                Labels::Partition => LabelMode::Partition,
                Labels::Composition => LabelMode::Composition,
                Labels::Young => LabelMode::Young,
            });
            if let Some(path) = scd {
                spec = spec.highlight(read(&path, parse_decomposition)?);
            }
            let text = match format {
                Format::Dot => to_dot(&p, &spec),
                Format::Svg => to_svg(&p, &spec).map_err(|e| Failure::usage(e.to_string()))?,
            };
            emit(&text, file, out)
        }
    }
}

fn identities(m: usize, n: usize, out: &mut dyn Write) -> Outcome {
    let r = check_splitting_identities(m, n);
    let verdict = |ok: bool| if ok { "pass" } else { "fail" };
    let text = format!(
        "identities L({m},{n})\n\
         by-largest-part {}\n\
         by-part-count {}\n\
         with-part-n {} without-part-n {}\n\
         short {} full {}\n\
         bijections {}\n\
         result {}\n",
        verdict(r.by_largest_part),
        verdict(r.by_part_count),
        r.with_part_n,
        r.without_part_n,
        r.short,
        r.full,
        verdict(r.bijections),
        verdict(r.holds()),
    );
    emit(&text, None, out)?;
    Ok(if r.holds() { 0 } else { 1 })
}

fn scd(command: ScdCommand, out: &mut dyn Write) -> Outcome {
    match command {
        ScdCommand::Lindstrom { m, out: file } => {
            emit(&write_decomposition(&lindstrom(m as usize)), file, out)
        }
        ScdCommand::N2 { m, out: file } => emit(&write_decomposition(&scd_n2(m)), file, out),
        ScdCommand::Brute {
            m,
            n,
            budget,
            out: file,
        } => {
            let p = build_lattice(Shape::new(m, n), Coordinates::Composition);
            match brute_force_scd(&p, budget) {
                SearchOutcome::Found(d) => emit(&write_decomposition(&d), file, out),
                SearchOutcome::NotFound { nodes } => {
                    emit(&format!("not-found L({m},{n}) nodes={nodes}\n"), None, out)?;
                    Ok(1)
                }
                SearchOutcome::BudgetExhausted { nodes } => {
                    emit(
                        &format!("budget-exhausted L({m},{n}) nodes={nodes}\n"),
                        None,
                        out,
                    )?;
                    Ok(1)
                }
            }
        }
        ScdCommand::Verify { poset, scd } => {
            let p = read(&poset, parse_poset)?;
            let d = read(&scd, parse_decomposition)?;
            let report = verify_scd(&d, &p);
            emit(&report.to_string(), None, out)?;
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn read<T>(
    path: &Path,
    parse: fn(&str) -> crate::error::Result<T>,
) -> std::result::Result<T, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn emit(text: &str, file: Option<PathBuf>, out: &mut dyn Write) -> Outcome {
    match file {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::usage(format!("stdout: {e}")))?,
    }
    Ok(0)
}
