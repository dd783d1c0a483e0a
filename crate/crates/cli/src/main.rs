use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gradex::census::{self, DEFAULT_MAX_N};
use gradex::config::GradingConfig;
use gradex::report::{analyze, verify_report, AnalysisReport, PropertySelector};
use gradex::{error_exit_code, leavitt_verify, CliError, Result};
use gradex_core::coeff::RingSpec;
use gradex_core::groups::GroupSpec;

#[derive(Parser)]
#[command(
    name = "gradex",
    version,
    about = "Decide strong, epsilon-strong and epsilon-crossed properties of group gradings on matrix rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one grading config. Exit code: 0 yes, 1 no, 2 unknown.
    Analyze {
        config: PathBuf,
        /// epsilon-crossed, epsilon-strong, strong or locally-strong=<g>
        #[arg(long, default_value = "epsilon-crossed")]
        property: String,
        /// Write the JSON report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Classify every tuple (e, g_2, ..., g_n) over a finite group; CSV output.
    Exhaustive {
        #[arg(long)]
        group: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "Q")]
        ring: String,
        /// Worker threads; 0 picks one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that the 3x3 Leavitt matrix C squares to the identity.
    LeavittVerify {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-check every certificate in a saved JSON report.
    VerifyReport { report: PathBuf },
}

fn output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(File::create(p)?),
        None => Box::new(io::stdout().lock()),
    })
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Analyze {
            config,
            property,
            out,
            format,
        } => {
            let selector: PropertySelector = property.parse()?;
            let cfg = GradingConfig::load(&config)?;
            let mut report = analyze(&cfg)?;
            let answer = report.select(&selector)?;
            let mut w = output(&out)?;
            match format {
                Format::Json => writeln!(w, "{}", serde_json::to_string_pretty(&report)?)?,
                Format::Text => write!(w, "{}", report.to_text())?,
            }
            if out.is_some() {
                eprintln!("{property}: {answer:?}");
            }
            Ok(answer.exit_code())
        }
        Command::Exhaustive {
            group,
            n,
            ring,
            jobs,
            max_n,
            out,
        } => {
            let group: GroupSpec = group.parse()?;
            let ring: RingSpec = ring.parse()?;
            let c = census::run(&group, n, &ring, jobs, max_n)?;
            c.write_csv(output(&out)?)?;
            eprintln!("{}", c.summary);
            Ok(0)
        }
        Command::LeavittVerify { format } => {
            let r = leavitt_verify::run()?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&r)?),
                Format::Text => print!("{}", r.to_text()),
            }
            Ok(if r.passed() { 0 } else { 1 })
        }
        Command::VerifyReport { report } => {
            let text = std::fs::read_to_string(&report)?;
            let report: AnalysisReport = serde_json::from_str(&text)?;
            let lines = verify_report(&report)?;
            let mut all_ok = true;
            for l in &lines {
                all_ok &= l.ok();
                println!(
                    "{}: {:?} certificate {} answer {}",
                    l.property,
                    l.answer,
                    if l.certificate_ok { "ok" } else { "REJECTED" },
                    if l.answer_reproduced {
                        "reproduced"
                    } else {
                        "DIFFERS"
                    }
                );
            }
            if all_ok {
                Ok(0)
            } else {
                Err(CliError::Algebra(gradex_core::Error::CertificateFailed(
                    "report did not re-verify".into(),
                )))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
