use std::fmt::Write as _;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use theodorus_core::anthyphairesis::{self, anthyphairesis_int, anthyphairesis_surd, SurdOutcome, SurdRun};
use theodorus_core::lesson::{
    self, coverage_stats, criteria_check, render_coverage, render_table, run_lesson, LessonConfig, Method,
    StopRule,
};
use theodorus_core::oracle::{oracle_classify, OracleVerdict};
use theodorus_core::theodorus::{self, naive_boys_tree};
use theodorus_core::{Error, Natural};

#[derive(Parser)]
#[command(name = "theodorus", version, about = "Exact irrationality tests for square roots of integers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether sqrt(n) is rational with one method
    Classify {
        n: Natural,
        #[arg(long, value_enum, default_value_t = ClassifyMethod::Theodorus)]
        method: ClassifyMethod,
        #[arg(long, default_value_t = anthyphairesis::DEFAULT_MAX_STATES)]
        max_states: usize,
    },
    /// Replay the lesson over odd integers and print the remainder table
    Lesson(LessonArgs),
    /// Count how many of 1..=max the remainder method settles
    Coverage {
        #[arg(long = "max")]
        max: Natural,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Reciprocal subtraction on two integers, or on (sqrt(n), 1) with --surd
    Anthyphairesis {
        #[arg(required_unless_present = "surd", conflicts_with = "surd")]
        a: Option<Natural>,
        #[arg(required_unless_present = "surd", conflicts_with = "surd")]
        b: Option<Natural>,
        #[arg(long)]
        surd: Option<Natural>,
        #[arg(long, default_value_t = anthyphairesis::DEFAULT_MAX_STATES)]
        max_states: usize,
    },
    /// Check the default lesson against the six criteria
    Criteria {
        #[arg(long, default_value_t = lesson::DEFAULT_BUDGET)]
        budget: usize,
    },
}

#[derive(Args)]
struct LessonArgs {
    #[arg(long, default_value_t = Natural::from(lesson::DEFAULT_START))]
    start: Natural,
    #[arg(long, default_value_t = Natural::from(lesson::DEFAULT_LIMIT))]
    limit: Natural,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Stop at the first inconclusive case (default)
    #[arg(long, conflicts_with = "exhaust")]
    until_inconclusive: bool,
    /// Run to the limit regardless of inconclusive cases
    #[arg(long)]
    exhaust: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassifyMethod {
    Theodorus,
    Oracle,
    Naive,
    Anthyphairesis,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
}

impl From<OutputFormat> for lesson::Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Text => lesson::Format::Text,
            OutputFormat::Csv => lesson::Format::Csv,
        }
    }
}

enum Failure {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli.command, &mut out) {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::Zero(_) | Error::InvalidStart(_) | Error::Parse(_) => ExitCode::from(2),
                _ => ExitCode::FAILURE,
            }
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Result<ExitCode, Failure> {
    match command {
        Command::Classify { n, method, max_states } => {
            let line = match method {
                ClassifyMethod::Theodorus => theodorus::classify(&n)?.0.to_string(),
                ClassifyMethod::Oracle => match oracle_classify(&n)? {
                    OracleVerdict::Rational { root } => format!("rational (root {root})"),
                    OracleVerdict::Irrational => "irrational (not a perfect square)".to_owned(),
                },
                ClassifyMethod::Naive => {
                    let (verdict, asserted) = naive_boys_tree(&n)?;
                    if asserted {
                        format!("{verdict} [asserted without proof]")
                    } else {
                        verdict.to_string()
                    }
                }
                ClassifyMethod::Anthyphairesis => {
                    let (verdict, _) = anthyphairesis::classify(&n, max_states)?;
                    let run = anthyphairesis_surd(&n, max_states)?;
                    format!("{verdict}; {}", expansion(&run))
                }
            };
            writeln!(out, "{n}: {line}")?;
        }
        Command::Lesson(args) => {
            let config = LessonConfig {
                start: args.start,
                limit: args.limit,
                stop_rule: if args.exhaust { StopRule::Exhaust } else { StopRule::UntilInconclusive },
                method: Method::Theodorus,
                ..LessonConfig::default()
            };
            let lesson = run_lesson(&config)?;
            render_table(&lesson.report, args.format.into(), out)?;
        }
        Command::Coverage { max, format } => {
            let stats = coverage_stats(&max)?;
            render_coverage(&stats, format.into(), out)?;
        }
        Command::Anthyphairesis { a, b, surd, max_states } => {
            if let Some(n) = surd {
                let run = anthyphairesis_surd(&n, max_states)?;
                writeln!(out, "{}", expansion(&run))?;
                match run.outcome {
                    SurdOutcome::TerminatesAsInteger(root) => {
                        writeln!(out, "terminates: sqrt({n}) = {root}, commensurable with the unit")?
                    }
                    SurdOutcome::Periodic => writeln!(
                        out,
                        "periodic after {} states: sqrt({n}) is incommensurable with the unit",
                        run.states.len()
                    )?,
                }
            } else {
                let (a, b) = (a.expect("clap requires a"), b.expect("clap requires b"));
                let run = anthyphairesis_int(&a, &b)?;
                for step in &run.steps {
                    let rest = &step.larger - &(&step.times * &step.smaller);
                    writeln!(out, "{} = {} x {} + {rest}", step.larger, step.times, step.smaller)?;
                }
                writeln!(out, "common measure: {} ({} steps)", run.gcd, run.steps.len())?;
            }
        }
        Command::Criteria { budget } => {
            let lesson = run_lesson(&LessonConfig::default())?;
            let report = criteria_check(&lesson.report, &lesson.trace, budget)?;
            write!(out, "{report}")?;
            return Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn expansion(run: &SurdRun) -> String {
    let mut s = format!("sqrt({}) = [", run.n);
    let join = |v: &[Natural]| v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(", ");
    s.push_str(&join(&run.prefix));
    if !run.period.is_empty() {
        let _ = write!(s, "; ({})", join(&run.period));
    }
    s.push(']');
    s
}
