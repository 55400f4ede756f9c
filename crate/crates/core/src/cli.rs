//! The `nilrref` command line.
//!
//! Exit codes: 0 success (negative findings such as `not nilpotent` are
//! answers, not failures), 1 usage or I/O error, 2 malformed input, 3 a
//! violated mathematical precondition.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::error::Error;
use crate::format::{parse_matrix, parse_script};
use crate::kernel::null_space_basis;
use crate::matrix::{rref, row_equivalent, Matrix};
use crate::scalar::{Field, Scalar};
use crate::witness::{catalog_3x3, nilpotent_index, witness, CatalogParams, NilpotentIndex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "nilrref", version, about = "Exact RREF, kernels and nilpotent row-equivalence witnesses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Reduce to RREF; prints the matrix followed by `# rank` and `# pivots`
    Rref {
        file: PathBuf,
        /// Write the reducing row script here
        #[arg(long)]
        script: Option<PathBuf>,
    },
    /// Print the special-solution basis of the null space, one n x 1 block each
    Kernel { file: PathBuf },
    /// Build and verify a nilpotent matrix row equivalent to a singular input
    Witness {
        file: PathBuf,
        /// Write the certificate report here instead of standard output
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Print the nilpotent index, or `not nilpotent`
    Index { file: PathBuf },
    /// Print `row-equivalent` or `not-row-equivalent`
    Certify { file_a: PathBuf, file_b: PathBuf },
    /// Apply a row script to a matrix
    Apply { file: PathBuf, script: PathBuf },
    /// Print one of the parametrised 3x3 RREF forms of rank 1 or 2
    Catalog3 {
        #[arg(long)]
        rank: u8,
        #[arg(long)]
        form: u8,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// `Q` or `GF p`
        #[arg(long, default_value = "Q")]
        field: String,
    },
}

enum Failure {
    Usage(String),
    Input(String),
    Domain(String),
}

impl Failure {
    fn from_error(context: &str, e: Error) -> Self {
        let msg = if context.is_empty() {
            e.to_string()
        } else {
            format!("{context}: {e}")
        };
        if e.is_parse_error() {
            Failure::Input(msg)
        } else {
            Failure::Domain(msg)
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Io<'_> {
    fn read(&mut self, path: &Path) -> Result<String, Failure> {
        if path == Path::new("-") {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| Failure::Usage(format!("<stdin>: {e}")))?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
        }
    }

    fn matrix(&mut self, path: &Path) -> Result<Matrix, Failure> {
        let text = self.read(path)?;
        parse_matrix(&text).map_err(|e| Failure::from_error(&path.display().to_string(), e))
    }

    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        self.out
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Usage(format!("write failed: {e}")))
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn execute(command: Command, io: &mut Io<'_>) -> Result<(), Failure> {
    let domain = |e: Error| Failure::from_error("", e);
    match command {
        Command::Rref { file, script } => {
            let m = io.matrix(&file)?;
            let r = rref(&m);
            let mut text = r.rref.to_string();
            text.push_str(&format!("# rank {}\n# pivots", r.rank));
            for p in &r.pivot_cols {
                text.push_str(&format!(" {p}"));
            }
            text.push('\n');
            if let Some(path) = script {
                write_file(&path, &r.script.to_string())?;
            }
            io.emit(&text)
        }
        Command::Kernel { file } => {
            let m = io.matrix(&file)?;
            let k = null_space_basis(&m);
            let mut text = format!("# nullity {}\n", k.nullity());
            for (i, v) in k.vectors.iter().enumerate() {
                if i > 0 {
                    text.push('\n');
                }
                text.push_str(&v.to_string());
            }
            io.emit(&text)
        }
        Command::Witness { file, report } => {
            let m = io.matrix(&file)?;
            let cert = witness(&m).map_err(domain)?;
            // witness() verifies before returning; check again on the exact
            // object being written out.
            cert.verify().map_err(domain)?;
            let text = cert.to_string();
            match report {
                Some(path) => write_file(&path, &text),
                None => io.emit(&text),
            }
        }
        Command::Index { file } => {
            let m = io.matrix(&file)?;
            match nilpotent_index(&m).map_err(domain)? {
                NilpotentIndex::Nilpotent(k) => io.emit(&format!("{k}\n")),
                NilpotentIndex::NotNilpotent => io.emit("not nilpotent\n"),
            }
        }
        Command::Certify { file_a, file_b } => {
            let a = io.matrix(&file_a)?;
            let b = io.matrix(&file_b)?;
            if row_equivalent(&a, &b).map_err(domain)? {
                io.emit("row-equivalent\n")
            } else {
                io.emit("not-row-equivalent\n")
            }
        }
        Command::Apply { file, script } => {
            let m = io.matrix(&file)?;
            let text = io.read(&script)?;
            let s = parse_script(&text, m.field())
                .map_err(|e| Failure::from_error(&script.display().to_string(), e))?;
            let out = m.apply(&s).map_err(domain)?;
            io.emit(&out.to_string())
        }
        Command::Catalog3 {
            rank,
            form,
            a,
            b,
            c,
            field,
        } => {
            let field: Field = field.parse().map_err(|e| Failure::from_error("--field", e))?;
            let scalar = |name: &str, v: Option<String>| -> Result<Option<Scalar>, Failure> {
                v.map(|s| {
                    Scalar::parse(&s, field).map_err(|e| match e {
                        Error::DivisionByZero => Failure::Input(format!("--{name}: zero denominator")),
                        e => Failure::from_error(&format!("--{name}"), e),
                    })
                })
                .transpose()
            };
            let params = CatalogParams {
                field,
                rank,
                form,
                a: scalar("a", a)?,
                b: scalar("b", b)?,
                c: scalar("c", c)?,
            };
            let m = catalog_3x3(&params).map_err(|e| match e {
                Error::InvalidParams(msg) => Failure::Usage(msg),
                e => domain(e),
            })?;
            io.emit(&m.to_string())
        }
    }
}

/// Runs one invocation against the given streams and returns the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(rendered.as_bytes())
            } else {
                stdout.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let mut io = Io { stdin, out: stdout };
    match execute(cli.command, &mut io) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Usage(m) => (EXIT_USAGE, m),
                Failure::Input(m) => (EXIT_PARSE, m),
                Failure::Domain(m) => (EXIT_DOMAIN, m),
            };
            let _ = writeln!(stderr, "nilrref: {msg}");
            code
        }
    }
}
