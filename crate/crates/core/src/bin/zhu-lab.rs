use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zhu_lab::report::{self, catalog, Format, ParamRange, Report, RunConfig, Task};
use zhu_lab::{Error, Result};

#[derive(Parser)]
#[command(name = "zhu-lab", version, about = "Exact checks of constant-term identities, WZ certificates and Zhu-algebra dimensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        task: VerifyTask,
        #[command(flatten)]
        opts: SweepOpts,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Zhu-algebra dimensions, centers and decompositions.
    Zhu {
        #[arg(value_enum)]
        family: ZhuFamily,
        /// Use the twisted algebra (striplet only).
        #[arg(long)]
        twisted: bool,
        #[command(flatten)]
        opts: SweepOpts,
    },
    /// Poisson-algebra dimensions from the rewriting presentations.
    Poisson {
        #[arg(value_enum)]
        family: PoissonFamily,
        #[command(flatten)]
        opts: SweepOpts,
    },
    /// Constant-term evaluation.
    Ct {
        #[command(subcommand)]
        action: CtAction,
    },
    /// Hypergeometric summation tools.
    Wz {
        #[command(subcommand)]
        action: WzAction,
    },
    /// List claim ids with their anchors and quotes.
    Catalog,
}

#[derive(Subcommand)]
enum CtAction {
    Eval {
        #[arg(long, value_name = "FILE")]
        expr: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Subcommand)]
enum WzAction {
    Gosper {
        #[arg(long, value_name = "FILE")]
        term: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    Zeilberger {
        #[arg(long, value_name = "FILE")]
        term: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
    VerifyCert {
        #[arg(long, value_name = "FILE")]
        term: PathBuf,
        #[arg(long, value_name = "FILE")]
        cert: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyTask {
    TripletCt,
    StripletCt,
    TwistedCt,
    KIdentity,
    Wz,
}

#[derive(Clone, Copy, ValueEnum)]
enum ZhuFamily {
    Triplet,
    Striplet,
    C0,
}

#[derive(Clone, Copy, ValueEnum)]
enum PoissonFamily {
    Triplet,
    Striplet,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SweepOpts {
    #[arg(long)]
    p_min: Option<u32>,
    #[arg(long)]
    p_max: Option<u32>,
    #[arg(long)]
    m_min: Option<u32>,
    #[arg(long)]
    m_max: Option<u32>,
    /// Allow parameters below the usual validity range.
    #[arg(long)]
    diagnostic: bool,
    #[command(flatten)]
    out: OutputOpts,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }
}

fn range(lo: Option<u32>, hi: Option<u32>, task: Task, name: &str) -> Result<Option<ParamRange>> {
    match (lo, hi) {
        (None, None) => Ok(None),
        (Some(lo), Some(hi)) => Ok(Some(ParamRange::new(lo, hi))),
        _ => Err(Error::Input(format!("{task} needs both --{name}-min and --{name}-max"))),
    }
}

fn config(task: Task, opts: SweepOpts, k: Option<u32>) -> Result<RunConfig> {
    let mut c = RunConfig::new(task);
    c.p = range(opts.p_min, opts.p_max, task, "p")?;
    c.m = range(opts.m_min, opts.m_max, task, "m")?;
    c.k = k;
    c.diagnostic = opts.diagnostic;
    c.format = opts.out.format.into();
    c.output = opts.out.output;
    Ok(c)
}

fn emit(report: &Report, out: &OutputOpts) -> Result<i32> {
    let text = report.render(out.format.into());
    match &out.output {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(report.exit_code())
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify { task, opts, k } => {
            let task = match task {
                VerifyTask::TripletCt => Task::TripletCt,
                VerifyTask::StripletCt => Task::StripletCt,
                VerifyTask::TwistedCt => Task::TwistedCt,
                VerifyTask::KIdentity => Task::KIdentity,
                VerifyTask::Wz => Task::Wz,
            };
            report::run_to_output(&config(task, opts, k)?)
        }
        Command::Zhu { family, twisted, opts } => {
            let task = match (family, twisted) {
                (ZhuFamily::Triplet, false) => Task::ZhuTriplet,
                (ZhuFamily::Striplet, false) => Task::ZhuStriplet,
                (ZhuFamily::Striplet, true) => Task::ZhuTwisted,
                (ZhuFamily::C0, false) => Task::ZhuC0,
                (_, true) => return Err(Error::Input("--twisted applies to striplet only".into())),
            };
            report::run_to_output(&config(task, opts, None)?)
        }
        Command::Poisson { family, opts } => {
            let task = match family {
                PoissonFamily::Triplet => Task::PoissonTriplet,
                PoissonFamily::Striplet => Task::PoissonStriplet,
            };
            report::run_to_output(&config(task, opts, None)?)
        }
        Command::Ct { action: CtAction::Eval { expr, out } } => emit(&report::ct_eval(&expr)?, &out),
        Command::Wz { action } => match action {
            WzAction::Gosper { term, out } => emit(&report::wz_gosper(&term)?, &out),
            WzAction::Zeilberger { term, out } => emit(&report::wz_zeilberger(&term)?, &out),
            WzAction::VerifyCert { term, cert, out } => emit(&report::wz_verify_cert(&term, &cert)?, &out),
        },
        Command::Catalog => {
            print!("{}", catalog::render());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("zhu-lab: {e}");
            ExitCode::from(2)
        }
    }
}
