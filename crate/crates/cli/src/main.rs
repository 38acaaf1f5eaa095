//! `flagcav`: ampleness of base cycles in flag and period domains.

mod error;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use flagcav_core::closed_forms::{closed_form_index, young_diagram};
use flagcav_core::engine::case_reports;
use flagcav_core::real_forms::{validate_cycle, CASE_TOKENS};
use flagcav_core::verify::verify_all_with;
use flagcav_core::{
    ampleness_report, build_model, hook_data, period_report, CycleParam, FlagError, HodgeNumbers,
    RealFormCase, VerifySummary,
};

use crate::error::CliError;
use crate::output::{emit, Format, HookRecord, Method, OutputRecord, PeriodRecord};

#[derive(Parser)]
#[command(
    name = "flagcav",
    version,
    about = "Ampleness of base cycles in flag domains and period domains"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report for one base cycle.
    Ampleness {
        #[command(flatten)]
        case: CaseArgs,
        /// Sorted index set, e.g. `2,3,5`. Omit for the empty set.
        #[arg(long, value_delimiter = ',')]
        cycle: Vec<usize>,
        /// The primed variant (the flipped cycle for sl-real with even m).
        #[arg(long, alias = "flip")]
        primed: bool,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Reports for every base cycle of a case.
    Enumerate {
        #[command(flatten)]
        case: CaseArgs,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Base cycle of the period domain of the given Hodge numbers.
    Period {
        #[arg(long)]
        weight: usize,
        /// `h^{n,0}, h^{n-1,1}, ...` down to the middle.
        #[arg(long, value_delimiter = ',', required = true)]
        hodge: Vec<usize>,
        /// Also compute the cycle dimension inside the period domain.
        #[arg(long)]
        dim: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run every cross-check up to a rank bound.
    Verify {
        #[arg(long, env = "FLAGCAV_MAX_RANK", default_value_t = 7,
              value_parser = clap::value_parser!(u16).range(1..=10))]
        max_rank: u16,
        /// Worker threads; all cores when omitted.
        #[arg(long)]
        parallel: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Shift one closed-form row by one to exercise failure reporting.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Hook lengths and the labeled Young diagram of an index set.
    Hook {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        j: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Args)]
struct CaseArgs {
    /// Case token.
    #[arg(value_parser = clap::builder::PossibleValuesParser::new(CASE_TOKENS))]
    token: String,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
}

impl CaseArgs {
    fn case(&self) -> Result<RealFormCase, CliError> {
        let case = RealFormCase::from_parts(&self.token, self.p, self.q, self.r, self.m)?;
        let used: Vec<&str> = case.params().into_iter().map(|(k, _)| k).collect();
        for (name, v) in [("p", self.p), ("q", self.q), ("r", self.r), ("m", self.m)] {
            if v.is_some() && !used.contains(&name) {
                return Err(CliError::Usage(format!("{} takes no --{name}", self.token)));
            }
        }
        Ok(case)
    }
}

fn record(
    case: &RealFormCase,
    cycle: &CycleParam,
    method: Method,
) -> Result<OutputRecord, CliError> {
    validate_cycle(case, cycle)?;
    match method {
        Method::Engine => Ok(OutputRecord::from_engine(
            &ampleness_report(case, cycle)?,
            method,
        )),
        Method::Closed => {
            let model = build_model(case)?;
            let ind = closed_form_index(case, cycle)?;
            let codim = model.ambient_positive_count - model.dim_cycle;
            Ok(OutputRecord::from_parts(
                case,
                cycle,
                ind,
                model.dim_cycle,
                codim,
                method,
            ))
        }
        Method::Both => {
            let r = ampleness_report(case, cycle)?;
            check_both(case, cycle, r.ind)?;
            Ok(OutputRecord::from_engine(&r, method))
        }
    }
}

fn check_both(case: &RealFormCase, cycle: &CycleParam, engine: usize) -> Result<(), CliError> {
    let closed = closed_form_index(case, cycle)?;
    if closed != engine {
        return Err(FlagError::Consistency(format!(
            "{case} {cycle}: engine {engine} but closed form {closed}"
        ))
        .into());
    }
    Ok(())
}

fn emit_records(
    out: &mut impl Write,
    format: Format,
    recs: &[OutputRecord],
    single: bool,
) -> Result<(), CliError> {
    let rows: Vec<Vec<String>> = recs.iter().map(OutputRecord::cells).collect();
    let json = if single {
        serde_json::to_value(&recs[0])?
    } else {
        serde_json::to_value(recs)?
    };
    emit(out, format, &OutputRecord::header(), &rows, &json)
}

fn verify_text(s: &VerifySummary) -> String {
    let mut t = String::new();
    let b = &s.bounds;
    t.push_str(&format!(
        "bounds: p+q <= {}, sp-real r <= {}, sl-real m <= {}, sl-quat m <= {}\n",
        b.pq, b.sp_real, b.sl_real, b.sl_quat
    ));
    let lines = [
        (
            "closed form vs engine",
            s.closed_form.checked,
            s.closed_form.discrepancies.len(),
        ),
        (
            "counted vs walked index",
            s.index_checked,
            s.index_mismatches.len(),
        ),
        (
            "pair vs diagram hooks",
            s.hook_checked,
            s.hook_mismatches.len(),
        ),
        ("period domains", s.period_checked, s.period_failures.len()),
    ];
    for (name, n, bad) in lines {
        t.push_str(&format!("{name}: {n} checked, {bad} discrepancies\n"));
    }
    let details = s
        .closed_form
        .discrepancies
        .iter()
        .map(ToString::to_string)
        .chain(s.index_mismatches.iter().cloned())
        .chain(s.hook_mismatches.iter().cloned())
        .chain(s.period_failures.iter().cloned());
    for d in details.take(20) {
        t.push_str(&format!("  {d}\n"));
    }
    t.push_str(&format!("total discrepancies: {}\n", s.discrepancy_count()));
    t
}

fn verify_json(s: &VerifySummary) -> serde_json::Value {
    serde_json::json!({
        "max_rank": s.rank,
        "closed_form": {
            "checked": s.closed_form.checked,
            "discrepancies": s.closed_form.discrepancies.iter().map(ToString::to_string).collect::<Vec<_>>(),
        },
        "index": { "checked": s.index_checked, "discrepancies": s.index_mismatches },
        "hook": { "checked": s.hook_checked, "discrepancies": s.hook_mismatches },
        "period": { "checked": s.period_checked, "discrepancies": s.period_failures },
        "total_discrepancies": s.discrepancy_count(),
    })
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    match cli.command {
        Command::Ampleness {
            case,
            cycle,
            primed,
            method,
            format,
        } => {
            let case = case.case()?;
            let rec = record(&case, &CycleParam::new(cycle, primed), method)?;
            emit_records(out, format, &[rec], true)
        }
        Command::Enumerate {
            case,
            method,
            format,
        } => {
            let case = case.case()?;
            let recs = match method {
                Method::Closed => flagcav_core::enumerate_cycles(&case)
                    .iter()
                    .map(|c| record(&case, c, method))
                    .collect::<Result<Vec<_>, _>>()?,
                _ => {
                    let mut recs = Vec::new();
                    for r in case_reports(&case)? {
                        if method == Method::Both {
                            check_both(&case, &r.cycle, r.ind)?;
                        }
                        recs.push(OutputRecord::from_engine(&r, method));
                    }
                    recs
                }
            };
            emit_records(out, format, &recs, false)
        }
        Command::Period {
            weight,
            hodge,
            dim,
            format,
        } => {
            let h = HodgeNumbers::from_upper(weight, &hodge)?;
            let rec = PeriodRecord::new(&period_report(&h, dim)?);
            let json = serde_json::to_value(&rec)?;
            emit(out, format, &PeriodRecord::header(), &[rec.cells()], &json)
        }
        Command::Verify {
            max_rank,
            parallel,
            format,
            inject_fault,
        } => {
            let threads = parallel.unwrap_or(0);
            let summary = verify_all_with(max_rank as usize, threads, |case, cycle| {
                let v = closed_form_index(case, cycle)?;
                let shifted = inject_fault
                    && matches!(case, RealFormCase::Su { .. })
                    && cycle.subset.contains(&2);
                Ok(if shifted { v + 1 } else { v })
            })?;
            let text = match format {
                Format::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&verify_json(&summary))?
                ),
                Format::Table | Format::Csv => verify_text(&summary),
            };
            out.write_all(text.as_bytes())?;
            if summary.is_clean() {
                Ok(())
            } else {
                Err(FlagError::Consistency(format!(
                    "{} discrepancies",
                    summary.discrepancy_count()
                ))
                .into())
            }
        }
        Command::Hook { p, q, j, format } => {
            let h = hook_data(&j, p, q)?;
            let diagram = young_diagram(&j, p, q)?.to_string();
            let rec = HookRecord::new(&h, diagram.clone());
            let json = serde_json::to_value(&rec)?;
            emit(out, format, &HookRecord::header(), &[rec.cells()], &json)?;
            if format == Format::Table {
                writeln!(out)?;
                out.write_all(diagram.as_bytes())?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
