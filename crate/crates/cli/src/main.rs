use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use genera_core::genera::{l_gf, todd, GenusTable, Method};
use genera_core::numbers::{record, Family};
use genera_core::render::{self, BasisTable, Format};
use genera_core::verify::{self, Suite};
use genera_core::BasisTag;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_DISAGREEMENT: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Exact Todd and L polynomials, symmetric-function bases and denominator
/// identities.
#[derive(Parser)]
#[command(name = "genera", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormatArg {
    /// Output format: text, json, latex or csv.
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Todd polynomial T_k in Chern classes.
    Todd {
        #[arg(long)]
        k: u32,
        /// gf, forgotten, gbasis or all.
        #[arg(long, default_value = "gf")]
        method: String,
        /// Basis for the output: m, e, h, p, f or g (e = Chern classes).
        #[arg(long, default_value = "e")]
        basis: BasisTag,
        #[command(flatten)]
        format: FormatArg,
    },
    /// L polynomial L_k in Pontryagin classes.
    Lgenus {
        #[arg(long)]
        k: u32,
        /// Basis for the output: m, e, h, p, f or g (e = Pontryagin classes).
        #[arg(long, default_value = "e")]
        basis: BasisTag,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Value tables: hirzebruch, ldenom, buchstaber or bernoulli.
    Numbers {
        family: Family,
        /// A single index.
        #[arg(long, conflicts_with = "upto", required_unless_present = "upto")]
        k: Option<u32>,
        /// All indices from the first one up to this bound.
        #[arg(long)]
        upto: Option<u32>,
        /// A method name for the family, or all.
        #[arg(long)]
        method: Option<String>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Basis tables: f, g (in m) or the coefficient matrix cmatrix.
    Basis {
        which: BasisTable,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the invariant suites.
    Verify {
        /// Restrict to one or more suites (repeatable).
        #[arg(long)]
        suite: Vec<Suite>,
        /// Override the bound of every selected suite.
        #[arg(long)]
        max_k: Option<u32>,
        #[command(flatten)]
        format: FormatArg,
    },
}

struct Output {
    text: String,
    code: u8,
}

fn usage(msg: impl std::fmt::Display) -> Output {
    Output {
        text: String::new(),
        code: EXIT_USAGE,
    }
    .with_error(msg)
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }

    fn with_error(self, msg: impl std::fmt::Display) -> Self {
        eprintln!("error: {msg}");
        self
    }
}

fn genus_methods(method: &str) -> Result<Vec<Method>, String> {
    if method == "all" {
        return Ok(Method::ALL.to_vec());
    }
    method.parse::<Method>().map(|m| vec![m]).map_err(|e| e.to_string())
}

fn genus_output(tables: &[GenusTable], basis: BasisTag, format: Format) -> Output {
    match render::render_genus(tables, basis, format) {
        Ok(text) => {
            let agree = tables.iter().all(|t| t.polynomial == tables[0].polynomial);
            Output {
                text,
                code: if agree { 0 } else { EXIT_DISAGREEMENT },
            }
        }
        Err(e) => usage(e),
    }
}

fn run(command: Command) -> Output {
    match command {
        Command::Todd {
            k,
            method,
            basis,
            format,
        } => {
            let methods = match genus_methods(&method) {
                Ok(m) => m,
                Err(e) => return usage(e),
            };
            let tables: Vec<GenusTable> = methods.into_iter().map(|m| todd(k, m)).collect();
            genus_output(&tables, basis, format.format)
        }
        Command::Lgenus { k, basis, format } => genus_output(&[l_gf(k)], basis, format.format),
        Command::Numbers {
            family,
            k,
            upto,
            method,
            format,
        } => {
            let methods: Vec<&str> = match method.as_deref() {
                None => vec![family.methods()[0]],
                Some("all") => family.methods().to_vec(),
                Some(m) => match family.methods().iter().find(|x| **x == m) {
                    Some(x) => vec![*x],
                    None => {
                        return usage(format!(
                            "unknown method {m} for {}; expected one of {} or all",
                            family.name(),
                            family.methods().join(", ")
                        ))
                    }
                },
            };
            let indices: Vec<u32> = match (k, upto) {
                (Some(k), _) => vec![k],
                (None, Some(n)) => (family.min_index()..=n).collect(),
                (None, None) => return usage("one of --k or --upto is required"),
            };
            let mut rows = Vec::with_capacity(indices.len());
            for i in indices {
                match record(family, i, &methods) {
                    Ok(r) => rows.push(r),
                    Err(e) => return usage(e),
                }
            }
            let agree = rows.iter().all(|r| r.agree);
            match render::render_numbers(family, &methods, &rows, format.format) {
                Ok(text) => Output {
                    text,
                    code: if agree { 0 } else { EXIT_DISAGREEMENT },
                },
                Err(e) => usage(e),
            }
        }
        Command::Basis { which, k, format } => match render::render_basis(which, k, format.format) {
            Ok(text) => Output::ok(text),
            Err(e) => usage(e),
        },
        Command::Verify { suite, max_k, format } => {
            let report = verify::run(&suite, max_k);
            match render::render_verify(&report, format.format) {
                Ok(text) => Output {
                    text,
                    code: if report.passed() { 0 } else { EXIT_VERIFY_FAILED },
                },
                Err(e) => usage(e),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let out = run(cli.command);
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(out.text.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::FAILURE;
    }
    ExitCode::from(out.code)
}
