//! `bindsig`: check signatures, enumerate and substitute terms, run law
//! suites and translations from the command line.
//!
//! Exit status is 0 on success, 1 when validation or a law fails and 2 for
//! usage and I/O errors.

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;

use bindsig_core::model::{fold, fv_model, run_all, term_model, LawReport, Model, ReportFormat, Samples, SuiteScale};
use bindsig_core::sigdef::{parse_signature_file, BUILTIN_NAMES};
use bindsig_core::subst::parse_assignment_images;
use bindsig_core::term::{chain_count, enumerate, parse_context, parse_sort, Chain};
use bindsig_core::translate::{builtin_table, parse_table, translate, TranslationTable, BUILTIN_TABLES};
use bindsig_core::{
    builtin, parse_term, print_term, sort_of, subst, Assignment, Bounds, Context, Error, Signature, Sort,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "bindsig", version, about = "Syntax with binding from binding signatures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SigArgs {
    /// Signature file or builtin name (ulc, fol, ll, stlc, pcf, nat)
    #[arg(value_name = "SIG")]
    sig_pos: Option<String>,
    #[arg(long = "sig", value_name = "SIG", conflicts_with = "sig_pos")]
    sig: Option<String>,
}

#[derive(Args)]
struct Scope {
    /// Context as "(ctx s0 s1 ...)" or, for untyped signatures, its length
    #[arg(long)]
    ctx: Option<String>,
    /// Sort of the terms; defaults to the single sort of untyped signatures
    #[arg(long)]
    sort: Option<String>,
    /// Bound on the arrow depth of sort parameters
    #[arg(long)]
    max_sort_depth: Option<usize>,
    /// Bound on nat parameters
    #[arg(long)]
    max_nat: Option<u64>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelChoice {
    Term,
    Fv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a signature file
    Check {
        #[command(flatten)]
        sig: SigArgs,
    },
    /// List the terms of depth at most --depth
    Enum {
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        scope: Scope,
        #[arg(long)]
        depth: usize,
        /// Print only how many there are
        #[arg(long)]
        count: bool,
    },
    /// Run the monoid, module and morphism law suites
    Laws {
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        scope: Scope,
        #[arg(long, value_enum, default_value = "term")]
        model: ModelChoice,
        /// Depth of the terms under test
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random cases; ignored with --exhaustive
        #[arg(long, default_value_t = 1000)]
        cases: usize,
        /// Check every case at the scale instead of random ones
        #[arg(long)]
        exhaustive: bool,
        /// Largest context used
        #[arg(long, default_value_t = 2)]
        max_ctx: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Apply a simultaneous substitution
    Subst {
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        scope: Scope,
        #[arg(long)]
        term: String,
        /// Images as "(assign t0 t1 ...)", one per context entry
        #[arg(long)]
        assign: String,
        /// Context of the images; defaults to --ctx
        #[arg(long)]
        to: Option<String>,
    },
    /// Translate a term with a builtin table (fol2ll, stlc2ulc) or a table file
    Translate {
        #[arg(long)]
        table: String,
        #[arg(long)]
        ctx: Option<String>,
        #[arg(long = "term", value_name = "TERM", conflicts_with = "term_pos")]
        term: Option<String>,
        #[arg(value_name = "TERM")]
        term_pos: Option<String>,
    },
    /// Free variables of an untyped term
    Fv {
        #[arg(long, default_value = "ulc")]
        sig: String,
        #[arg(long)]
        ctx: Option<String>,
        #[arg(long = "term", value_name = "TERM", conflicts_with = "term_pos")]
        term: Option<String>,
        #[arg(value_name = "TERM")]
        term_pos: Option<String>,
    },
    /// Sizes of the stages of the term chain
    Chain {
        #[command(flatten)]
        sig: SigArgs,
        #[command(flatten)]
        scope: Scope,
        #[arg(long)]
        depth: usize,
    },
}

enum Failure {
    /// Bad flags, unreadable files.
    Usage(String),
    /// Input that does not validate, or a failing law.
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Check { sig } => cmd_check(&sig),
        Command::Enum {
            sig,
            scope,
            depth,
            count,
        } => cmd_enum(&load_signature(&sig)?, &scope, depth, count),
        Command::Laws {
            sig,
            scope,
            model,
            depth,
            seed,
            cases,
            exhaustive,
            max_ctx,
            format,
        } => {
            let sig = load_signature(&sig)?;
            let scale = suite_scale(&sig, &scope, depth, max_ctx)?;
            let samples = if exhaustive {
                Samples::Exhaustive(scale)
            } else {
                Samples::Random { scale, seed, cases }
            };
            let format = match format {
                Format::Text => ReportFormat::Text,
                Format::Records => ReportFormat::Records,
            };
            cmd_laws(&sig, model, &samples, format)
        }
        Command::Subst {
            sig,
            scope,
            term,
            assign,
            to,
        } => cmd_subst(&load_signature(&sig)?, &scope, &term, &assign, to.as_deref()),
        Command::Translate {
            table,
            ctx,
            term,
            term_pos,
        } => cmd_translate(&table, ctx.as_deref(), &one_term(term, term_pos)?),
        Command::Fv {
            sig,
            ctx,
            term,
            term_pos,
        } => cmd_fv(&resolve_signature(&sig)?, ctx.as_deref(), &one_term(term, term_pos)?),
        Command::Chain { sig, scope, depth } => cmd_chain(&load_signature(&sig)?, &scope, depth),
    }
}

fn one_term(flag: Option<String>, positional: Option<String>) -> Result<String, Failure> {
    flag.or(positional)
        .ok_or_else(|| Failure::Usage("a term is required".into()))
}

fn read_file(path: &str) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))
}

/// A builtin name, unless a file of that name exists.
fn resolve_signature(name: &str) -> Result<Signature, Failure> {
    if BUILTIN_NAMES.contains(&name) && !Path::new(name).exists() {
        return Ok(builtin(name)?);
    }
    Ok(parse_signature_file(&read_file(name)?)?.signature)
}

fn load_signature(args: &SigArgs) -> Result<Signature, Failure> {
    let name = args
        .sig
        .as_deref()
        .or(args.sig_pos.as_deref())
        .ok_or_else(|| Failure::Usage("a signature is required (file or builtin name)".into()))?;
    resolve_signature(name)
}

fn parse_ctx(sig: &Signature, text: Option<&str>) -> Result<Context, Failure> {
    let ctx = match text {
        None => Context::empty(),
        Some(t) if t.trim().bytes().all(|b| b.is_ascii_digit()) => {
            let n: usize = t
                .trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad context size {t}")))?;
            let sort = sig.types().single_sort().ok_or_else(|| {
                Failure::Usage("a context size needs an untyped signature; write (ctx ...)".into())
            })?;
            Context::uniform(&sort, n)
        }
        Some(t) => parse_context(t)?,
    };
    if !ctx.is_well_formed(sig.types()) {
        return Err(Failure::Invalid(format!("context {ctx} has sorts outside the signature")));
    }
    Ok(ctx)
}

fn parse_sort_flag(sig: &Signature, text: Option<&str>) -> Result<Sort, Failure> {
    match text {
        Some(t) => {
            let s = parse_sort(t)?;
            if !sig.types().is_well_formed(&s) {
                return Err(Failure::Invalid(format!("sort {s} is not a sort of the signature")));
            }
            Ok(s)
        }
        None => sig
            .types()
            .single_sort()
            .ok_or_else(|| Failure::Usage("--sort is required for typed signatures".into())),
    }
}

fn bounds(scope: &Scope) -> Bounds {
    Bounds::new(scope.max_sort_depth, scope.max_nat)
}

fn suite_scale(sig: &Signature, scope: &Scope, depth: usize, max_ctx: usize) -> Result<SuiteScale, Failure> {
    let sorts = match &scope.sort {
        Some(s) => vec![parse_sort_flag(sig, Some(s))?],
        None => sig
            .types()
            .sorts_up_to_depth(scope.max_sort_depth.unwrap_or(1)),
    };
    Ok(SuiteScale {
        term_depth: depth,
        image_depth: depth.saturating_sub(1).max(1),
        max_ctx,
        sorts,
        bounds: bounds(scope),
    })
}

fn cmd_check(args: &SigArgs) -> Outcome {
    let sig = load_signature(args)?;
    Ok(format!(
        "signature {} ok: {} constructors\n",
        sig.name(),
        sig.schemas().len()
    ))
}

fn cmd_enum(sig: &Signature, scope: &Scope, depth: usize, count: bool) -> Outcome {
    let ctx = parse_ctx(sig, scope.ctx.as_deref())?;
    let sort = parse_sort_flag(sig, scope.sort.as_deref())?;
    if count {
        return Ok(format!("{}\n", chain_count(sig, &ctx, &sort, depth, bounds(scope))?));
    }
    let mut out = String::new();
    for t in enumerate(sig, &ctx, &sort, depth, bounds(scope))? {
        out.push_str(&print_term(&t));
        out.push('\n');
    }
    Ok(out)
}

fn render_reports(reports: &[LawReport], format: ReportFormat) -> Outcome {
    let out: String = reports.iter().map(|r| r.render(format)).collect();
    if reports.iter().all(LawReport::passed) {
        Ok(out)
    } else {
        // the report goes to standard output either way
        print!("{out}");
        Err(Failure::Invalid("law failures".into()))
    }
}

fn run_suites<M: Model>(m: &M, sig: &Signature, samples: &Samples, format: ReportFormat) -> Outcome {
    render_reports(&run_all(m, sig, samples)?, format)
}

fn cmd_laws(sig: &Signature, model: ModelChoice, samples: &Samples, format: ReportFormat) -> Outcome {
    match model {
        ModelChoice::Term => run_suites(&term_model(sig), sig, samples, format),
        ModelChoice::Fv => run_suites(&fv_model(sig)?, sig, samples, format),
    }
}

fn cmd_subst(sig: &Signature, scope: &Scope, term: &str, assign: &str, to: Option<&str>) -> Outcome {
    let source = parse_ctx(sig, scope.ctx.as_deref())?;
    let target = match to {
        Some(t) => parse_ctx(sig, Some(t))?,
        None => source.clone(),
    };
    let t = parse_term(term)?;
    sort_of(sig, &source, &t)?;
    let sigma = Assignment::new(sig, source, target, parse_assignment_images(assign)?)?;
    Ok(format!("{}\n", print_term(&subst(sig, &t, &sigma))))
}

fn load_table(name: &str) -> Result<TranslationTable, Failure> {
    if BUILTIN_TABLES.contains(&name) && !Path::new(name).exists() {
        return Ok(builtin_table(name)?);
    }
    let text = read_file(name)?;
    let base = Path::new(name).parent().map(Path::to_path_buf).unwrap_or_default();
    let resolve = |sig: &str| -> bindsig_core::Result<Signature> {
        if BUILTIN_NAMES.contains(&sig) {
            return builtin(sig);
        }
        let text = std::fs::read_to_string(base.join(sig))
            .map_err(|_| Error::UnknownBuiltin(sig.to_string()))?;
        Ok(parse_signature_file(&text)?.signature)
    };
    Ok(parse_table(&text, &resolve)?)
}

fn cmd_translate(table: &str, ctx: Option<&str>, term: &str) -> Outcome {
    let table = load_table(table)?;
    let ctx = parse_ctx(table.source(), ctx)?;
    let out = translate(&table, &ctx, &parse_term(term)?)?;
    Ok(format!("{}\n", print_term(&out)))
}

fn cmd_fv(sig: &Signature, ctx: Option<&str>, term: &str) -> Outcome {
    let m = fv_model(sig)?;
    let ctx = parse_ctx(sig, ctx)?;
    let t = parse_term(term)?;
    sort_of(sig, &ctx, &t)?;
    let set = fold(&m, sig, &ctx, &t)?;
    Ok(format!("{}\n", m.render(&set)))
}

fn cmd_chain(sig: &Signature, scope: &Scope, depth: usize) -> Outcome {
    let ctx = parse_ctx(sig, scope.ctx.as_deref())?;
    let sort = parse_sort_flag(sig, scope.sort.as_deref())?;
    let mut chain = Chain::new(sig, bounds(scope));
    let mut out = String::from("stage count\n");
    for k in 0..=depth {
        let _ = writeln!(out, "{k} {}", chain.count(&ctx, &sort, k)?);
    }
    Ok(out)
}
