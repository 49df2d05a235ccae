//! Command line front end: validate, compose and apply serialized artifacts,
//! generate seeded instances, and run the law suite.
//!
//! Exit codes: 0 success, 1 validation or law failure, 2 parse error,
//! 3 boundary mismatch.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use opencat::harness::document::{self, Document};
use opencat::harness::generate::{
    gen_category, gen_functor, gen_open_functor, gen_open_nat, gen_presheaf, GenParams,
};
use opencat::harness::laws::{LawKind, LawRunConfig};
use opencat::{ElementValue, Error, OpenFunctor, OpenNatTrans, ValidationReport};

#[derive(Parser)]
#[command(name = "opencat", version, about = "Finite open functors and their bicategory laws")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a document and print its report.
    Validate { file: PathBuf },
    /// Compose two open functors, outer first: `compose g.json f.json` forms g ∘ f.
    Compose {
        g: PathBuf,
        f: PathBuf,
        /// Write the composite here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Apply an open functor to an object under an interaction element.
    Apply {
        file: PathBuf,
        #[arg(long)]
        object: String,
        /// Element in token syntax: an atom, `*`, or `<left,right>`.
        #[arg(long)]
        element: String,
    },
    /// Run the law suite over generated instances.
    Laws {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 25)]
        count: usize,
        /// One of unitor-nat, assoc-nat, homcat, interchange, pentagon,
        /// triangle, or all.
        #[arg(long, default_value = "all")]
        law: String,
        #[arg(long, default_value_t = 3)]
        max_objects: usize,
        #[arg(long, default_value_t = 3)]
        max_fiber: usize,
    },
    /// Generate a document from a seed.
    Gen {
        /// One of category, presheaf, functor, open_functor, open_nat_trans.
        #[arg(long)]
        kind: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_objects: usize,
        #[arg(long, default_value_t = 3)]
        max_fiber: usize,
        /// Write the document here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Schema(_) => 2,
        Error::BoundaryMismatch(_) | Error::NotComposable { .. } => 3,
        _ => 1,
    }
}

fn read_document(path: &Path) -> Result<Document, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Schema(format!("cannot read {}: {e}", path.display())))?;
    document::parse(&text)
}

fn write_or_print(text: &str, output: Option<&Path>) -> Result<(), Error> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Schema(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn validate_document(doc: &Document) -> ValidationReport {
    match doc {
        Document::Category(c) => c.validate(),
        Document::Presheaf(p) => p.validate(),
        Document::Functor(f) => f.validate(),
        Document::NatTrans(t) => t.validate(),
        Document::OpenFunctor(f) => f.validate(),
        Document::OpenNatTrans(t) => t.validate(),
        Document::LawRequest(_) => ValidationReport::default(),
    }
}

/// Open functor documents pass through; classical functors lift with a
/// singleton interaction set.
fn as_open_functor(doc: Document, role: &str) -> Result<OpenFunctor, Error> {
    match doc {
        Document::OpenFunctor(f) => Ok(f),
        Document::Functor(f) => Ok(OpenFunctor::from_classical(&f)),
        other => Err(Error::Schema(format!(
            "{role} must be an open_functor or functor document, found `{}`",
            other.kind()
        ))),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Validate { file } => {
            let report = validate_document(&read_document(&file)?);
            println!("{report}");
            Ok(if report.is_valid() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Compose { g, f, output } => {
            let outer = as_open_functor(read_document(&g)?, "the first operand")?;
            let inner = as_open_functor(read_document(&f)?, "the second operand")?;
            let composed = opencat::compose_open(&outer, &inner)?;
            write_or_print(
                &document::serialize(&Document::OpenFunctor(composed)),
                output.as_deref(),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Apply {
            file,
            object,
            element,
        } => {
            let open = as_open_functor(read_document(&file)?, "the operand")?;
            let element = ElementValue::parse_token(&element)?;
            let result = open.apply_object(&object.as_str().into(), &element)?;
            println!("{result}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Laws {
            seed,
            count,
            law,
            max_objects,
            max_fiber,
        } => {
            let laws = LawKind::parse(&law)
                .ok_or_else(|| Error::Schema(format!("unknown law `{law}`")))?;
            let guard = match std::env::var("OPENCAT_MAX_FIBER") {
                Ok(raw) => raw
                    .parse()
                    .map_err(|_| Error::Schema(format!("bad OPENCAT_MAX_FIBER `{raw}`")))?,
                Err(_) => opencat::coherence::DEFAULT_MAX_FIBER,
            };
            let cfg = LawRunConfig {
                seed,
                count,
                laws,
                max_objects,
                max_fiber,
                guard,
                ..LawRunConfig::default()
            };
            let outcome = opencat::harness::laws::run_laws(&cfg)?;
            print!("{}", outcome.render());
            Ok(if outcome.all_hold() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Gen {
            kind,
            seed,
            max_objects,
            max_fiber,
            output,
        } => {
            let params = GenParams {
                seed,
                max_objects,
                max_fiber,
                ..GenParams::default()
            };
            let doc = generate_document(&kind, &params)?;
            write_or_print(&document::serialize(&doc), output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn generate_document(kind: &str, params: &GenParams) -> Result<Document, Error> {
    let dom = gen_category(params);
    let cod = gen_category(&params.derive(0x0c0d));
    match kind {
        "category" => Ok(Document::Category(dom)),
        "presheaf" => Ok(Document::Presheaf(gen_presheaf(params, &dom))),
        "functor" => Ok(Document::Functor(gen_functor(params, &dom, &cod))),
        "open_functor" => Ok(Document::OpenFunctor(gen_open_functor(params, &dom, &cod))),
        "open_nat_trans" => {
            let f = gen_open_functor(params, &dom, &cod);
            let g = gen_open_functor(&params.derive(0x0e0f), &dom, &cod);
            let cell = gen_open_nat(params, &f, &g)
                .into_iter()
                .next()
                .unwrap_or_else(|| OpenNatTrans::identity(&f));
            Ok(Document::OpenNatTrans(cell))
        }
        other => Err(Error::Schema(format!("unknown kind `{other}`"))),
    }
}
