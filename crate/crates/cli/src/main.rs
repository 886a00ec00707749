mod cli;
mod report;

use std::fs;
use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use interval_rules::oracle::{box_count, reference_pipeline, OracleResult};
use interval_rules::synth::{random_case, RandomTaskShape};
use interval_rules::{
    discretize, load_csv, mine_rules, BinaryTask, Dataset, DiscretizedTask, Error, MiningOutcome, PatternRecord,
};

use cli::{ClassArgs, Cli, Command, DataArgs, DiscretizeArgs, Format, MineArgs, SweepArgs, VerifyArgs};
use report::{ClassReport, Counts, MineReport, ModalityReport, Params, RuleOutput, SweepRow, SWEEP_HEADER};

/// A failure with its process exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::EmptyPositives | Error::UnknownLabel(_) => 3,
            Error::CapExceeded { .. } => 5,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Command::Mine(args) => cmd_mine(&args),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Discretize(args) => cmd_discretize(&args),
        Command::Verify(args) => cmd_verify(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn delimiter_byte(c: char) -> Result<u8, Failure> {
    u8::try_from(c)
        .ok()
        .filter(u8::is_ascii)
        .ok_or_else(|| Failure::new(1, format!("delimiter {c:?} must be a single ASCII character")))
}

fn load(data: &DataArgs) -> Result<Dataset, Failure> {
    Ok(load_csv(&data.input, &data.class_column(), delimiter_byte(data.delimiter)?)?)
}

fn labels(dataset: &Dataset, class: &ClassArgs) -> Vec<String> {
    match &class.positive_label {
        Some(l) if !class.all_classes => vec![l.clone()],
        _ => dataset.distinct_labels(),
    }
}

fn write_output(path: &Path, contents: &str) -> CmdResult {
    fs::write(path, contents).map_err(|e| Failure::new(2, format!("cannot write {}: {e}", path.display())))
}

fn ms(outcome: &MiningOutcome) -> f64 {
    outcome.elapsed.as_secs_f64() * 1e3
}

struct ClassRun {
    label: String,
    outcome: MiningOutcome,
}

fn cmd_mine(args: &MineArgs) -> CmdResult {
    let dataset = load(&args.data)?;
    let mut runs = Vec::new();
    for label in labels(&dataset, &args.class) {
        let task = discretize(
            &dataset.split_one_vs_rest(&label)?,
            args.modality.modalities.into(),
            args.modality.eqmod as usize,
        )?;
        let minsup = args.thresholds.minsup.to_count(task.n_pos());
        let maxfp = args.thresholds.maxfp.to_count(task.n_neg());
        let outcome = mine_rules(&task, minsup, maxfp);
        let (closed, rules, relevant) = outcome.counts();
        println!(
            "class={label} closed={closed} rules={rules} relevant={relevant} time_ms={:.3}",
            ms(&outcome)
        );
        runs.push(ClassRun { label, outcome });
    }

    let Some(path) = &args.output else {
        return Ok(());
    };
    let features = dataset.feature_names();
    let classes: Vec<ClassReport<'_>> = runs
        .iter()
        .map(|run| {
            let (closed, rules, relevant) = run.outcome.counts();
            ClassReport {
                label: &run.label,
                counts: Counts {
                    closed,
                    rules,
                    relevant,
                },
                time_ms: args.record_time.then(|| ms(&run.outcome)),
                rules: run
                    .outcome
                    .relevant
                    .kept
                    .iter()
                    .map(|r| RuleOutput::new(&run.label, features, r))
                    .collect(),
            }
        })
        .collect();
    let contents = match args.format {
        Format::Json => {
            let report = MineReport {
                dataset: args.data.input.display().to_string(),
                params: Params {
                    minsup: args.thresholds.minsup.to_string(),
                    maxfp: args.thresholds.maxfp.to_string(),
                    eqmod: args.modality.eqmod,
                    modalities: interval_rules::ModalityMode::from(args.modality.modalities).to_string(),
                },
                classes,
            };
            let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Csv => report::rules_csv(features, &classes),
    };
    write_output(path, &contents)
}

fn cmd_sweep(args: &SweepArgs) -> CmdResult {
    let dataset = load(&args.data)?;
    let grid = args.grid();
    let mut per_class: Vec<Vec<SweepRow>> = Vec::new();
    for label in labels(&dataset, &args.class) {
        let task = discretize(
            &dataset.split_one_vs_rest(&label)?,
            args.modality.modalities.into(),
            args.modality.eqmod as usize,
        )?;
        let maxfp = args.maxfp.to_count(task.n_neg());
        let rows = grid
            .iter()
            .map(|minsup| {
                let outcome = mine_rules(&task, minsup.to_count(task.n_pos()), maxfp);
                let (closed, rules, relevant) = outcome.counts();
                SweepRow {
                    class: label.clone(),
                    minsup: minsup.to_string(),
                    closed,
                    rules,
                    relevant,
                    time_ms: ms(&outcome),
                }
            })
            .collect();
        per_class.push(rows);
    }

    let rows: Vec<SweepRow> = if args.sum_classes {
        grid.iter()
            .enumerate()
            .map(|(k, minsup)| {
                let mut row = SweepRow {
                    class: "ALL".to_string(),
                    minsup: minsup.to_string(),
                    closed: 0,
                    rules: 0,
                    relevant: 0,
                    time_ms: 0.0,
                };
                for class_rows in &per_class {
                    let r = &class_rows[k];
                    row.closed += r.closed;
                    row.rules += r.rules;
                    row.relevant += r.relevant;
                    row.time_ms += r.time_ms;
                }
                row
            })
            .collect()
    } else {
        per_class.into_iter().flatten().collect()
    };

    let mut csv = String::from(SWEEP_HEADER);
    csv.push('\n');
    for row in &rows {
        csv.push_str(&row.to_csv());
        csv.push('\n');
    }
    match &args.output {
        Some(path) => write_output(path, &csv),
        None => {
            let _ = std::io::stdout().write_all(csv.as_bytes());
            Ok(())
        }
    }
}

fn cmd_discretize(args: &DiscretizeArgs) -> CmdResult {
    let dataset = load(&args.data)?;
    let task = discretize(
        &dataset.split_one_vs_rest(&args.positive_label)?,
        args.modality.modalities.into(),
        args.modality.eqmod as usize,
    )?;
    let report = ModalityReport {
        features: dataset.feature_names(),
        modalities: task.modalities(),
    };
    println!("{}", serde_json::to_string_pretty(&report).expect("modalities serialize"));
    Ok(())
}

/// First differing stage between miner and oracle, if any.
fn compare(outcome: &MiningOutcome, oracle: &OracleResult) -> Option<(&'static str, Vec<String>)> {
    let stages: [(&str, &[PatternRecord], &[PatternRecord]); 3] = [
        ("closed", &outcome.closed, &oracle.closed),
        ("rules", &outcome.rules, &oracle.rules),
        ("relevant", &outcome.relevant.kept, &oracle.relevant),
    ];
    for (name, mined, expected) in stages {
        if mined != expected {
            let mut lines = Vec::new();
            for r in mined.iter().filter(|r| !expected.contains(r)) {
                lines.push(format!("  miner only:  {} (supp+={}, supp-={})", r.pattern, r.supp_pos, r.supp_neg));
            }
            for r in expected.iter().filter(|r| !mined.contains(r)) {
                lines.push(format!("  oracle only: {} (supp+={}, supp-={})", r.pattern, r.supp_pos, r.supp_neg));
            }
            return Some((name, lines));
        }
    }
    None
}

fn dump_task(task: &BinaryTask) -> String {
    let fmt = |rows: &[Vec<f64>]| rows.iter().map(|r| format!("{r:?}")).collect::<Vec<_>>().join(" ");
    format!("  P: {}\n  N: {}", fmt(task.positives()), fmt(task.negatives()))
}

fn check(task: &DiscretizedTask, minsup: usize, maxfp: usize, cap: u128, name: &str) -> CmdResult {
    let boxes = box_count(task);
    if boxes > cap {
        return Err(Failure::new(5, format!("{name}: {boxes} boxes exceed the oracle cap of {cap}")));
    }
    let oracle = reference_pipeline(task, minsup, maxfp, cap)?;
    let outcome = mine_rules(task, minsup, maxfp);
    match compare(&outcome, &oracle) {
        None => Ok(()),
        Some((stage, lines)) => Err(Failure::new(
            4,
            format!(
                "MISMATCH in {name} at stage {stage} (minsup={minsup}, maxfp={maxfp})\n{}\n{}",
                lines.join("\n"),
                dump_task(task.task())
            ),
        )),
    }
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    match &args.input {
        Some(input) => {
            let data = DataArgs {
                input: input.clone(),
                class_col: args.class_col.clone(),
                delimiter: args.delimiter,
            };
            let dataset = load(&data)?;
            let class = ClassArgs {
                positive_label: args.positive_label.clone(),
                all_classes: args.all_classes || args.positive_label.is_none(),
            };
            for label in labels(&dataset, &class) {
                let task = discretize(
                    &dataset.split_one_vs_rest(&label)?,
                    args.modality.modalities.into(),
                    args.modality.eqmod as usize,
                )?;
                check(
                    &task,
                    args.thresholds.minsup.to_count(task.n_pos()),
                    args.thresholds.maxfp.to_count(task.n_neg()),
                    args.cap,
                    &format!("class {label}"),
                )?;
            }
            println!("EQUIVALENT");
        }
        None => {
            for seed in args.seed..args.seed + args.random {
                let case = random_case(seed, RandomTaskShape::default());
                check(&case.task, case.minsup, case.maxfp, args.cap, &format!("seed {seed}"))?;
            }
            println!("EQUIVALENT ({} random tasks)", args.random);
        }
    }
    Ok(())
}
