use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hopfhomology::instance::{parse_instance_file, CONSTRUCTIONS};
use hopfhomology::ops::{self, OPS};
use hopfhomology::report::{emit, Format};

/// Worker threads for task-level parallelism; unset means one per core.
const WORKERS_VAR: &str = "HOPFHOMOLOGY_WORKERS";

#[derive(Parser)]
#[command(name = "hopfhomology", version, about = "Exact Hopf-Galois homology over Q")]
struct Cli {
    /// Truncation degree N, overriding every task's own value.
    #[arg(long, global = true)]
    truncation: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse an instance file and resolve every object without running tasks.
    Validate { file: PathBuf },
    /// Run every task and print the human report.
    Run { file: PathBuf },
    /// Run every task and print the report in the chosen format.
    Report {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OutFormat::Json)]
        format: OutFormat,
    },
    /// List task operations and construction calls.
    ListOps,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Human,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = std::env::var(WORKERS_VAR).ok().and_then(|v| v.parse::<usize>().ok()) {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let (file, format) = match cli.command {
        Command::ListOps => {
            for op in OPS {
                println!("{:<36} {:<14} ({}) {}", op.name, op.module, op.args, op.about);
            }
            for (sig, about) in CONSTRUCTIONS {
                println!("{sig:<36} {:<14} {about}", "construction");
            }
            return ExitCode::SUCCESS;
        }
        Command::Validate { file } => {
            return match parse_instance_file(&file) {
                Ok(inst) => {
                    println!("{}: {} objects, {} tasks", file.display(), inst.order.len(), inst.tasks.len());
                    for name in &inst.order {
                        println!("  {name}: {}", inst.objects[name].kind());
                    }
                    for (i, t) in inst.tasks.iter().enumerate() {
                        if ops::lookup_op(&t.op).is_none() {
                            eprintln!("task {i}: unknown op {:?}", t.op);
                            return ExitCode::FAILURE;
                        }
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("{}: {e}", file.display());
                    ExitCode::FAILURE
                }
            };
        }
        Command::Run { file } => (file, Format::Human),
        Command::Report { file, format } => {
            (file, if matches!(format, OutFormat::Json) { Format::Json } else { Format::Human })
        }
    };
    let inst = match parse_instance_file(&file) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("{}: {e}", file.display());
            return ExitCode::from(2);
        }
    };
    let source = file.file_name().map_or_else(|| file.display().to_string(), |n| n.to_string_lossy().into_owned());
    let report = ops::run(&inst, &source, cli.truncation);
    print!("{}", emit(&report, format));
    ExitCode::from(report.exit_code() as u8)
}
