use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use minla_core::bench::{run_bench, Family};
use minla_core::format::{
    parse_arrangement, parse_instance, parse_intervals, write_arrangement, write_edge_list,
    write_intervals, Instance,
};
use minla_core::generators::{
    generate_chain_graph, random_chain_ranges, random_intervals, random_proper_interval,
    random_proper_intervals, Density,
};
use minla_core::oracle::{
    brute_force_minla_with, enumerate_optimal, find_pi_suboptimal, OracleOptions, Provenance,
    SearchFamily, DEFAULT_ENUMERATION_LIMIT, DEFAULT_LIMIT,
};
use minla_core::{
    approximate, cost, graph_from_intervals, recognize_proper_interval, solve_proper_interval,
    Arrangement, Error, Graph,
};

#[derive(Parser)]
#[command(name = "minla", version, about = "Minimum linear arrangement for interval graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Decide whether a graph is a proper interval graph and print its clique chain.
    Recognize { file: PathBuf },
    /// Exact minimum linear arrangement of a proper interval graph.
    Solve {
        file: PathBuf,
        /// Write the optimal arrangement here.
        #[arg(long, value_name = "OUT")]
        arrangement: Option<PathBuf>,
    },
    /// pi-order of an interval model with its certified cost bounds.
    Approx {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
        /// Write the pi-order arrangement here.
        #[arg(long, value_name = "OUT")]
        arrangement: Option<PathBuf>,
    },
    /// Exhaustive optimum for small graphs.
    Oracle {
        file: PathBuf,
        /// List every optimal arrangement instead of the lexicographically first.
        #[arg(long)]
        all_optima: bool,
        /// Largest n searched [default: 10, or 8 with --all-optima].
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, env = "MINLA_THREADS", default_value_t = 1)]
        threads: usize,
    },
    /// Validate an arrangement against a graph and print its cost.
    Check { file: PathBuf, arrangement: PathBuf },
    /// Search random interval models for one whose pi-order is not optimal.
    FindCounterexample {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, value_enum, default_value_t = SearchKind::Intervals)]
        family: SearchKind,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Time recognition plus exact solving on generated chain graphs.
    Bench {
        #[arg(long, value_enum, default_value_t = BenchFamily::Chain)]
        family: BenchFamily,
        /// Comma-separated sizes; scientific notation such as 1e5 is accepted.
        #[arg(long, value_delimiter = ',', value_parser = parse_size,
              default_value = "1e3,1e4,1e5,1e6")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repeats: usize,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Chain of cliques on 1..=n, from explicit ranges or random ones.
    Chain {
        #[arg(long)]
        n: usize,
        /// Clique ranges such as `1:3,3:4`; random ranges are drawn when omitted.
        #[arg(long, value_delimiter = ',', value_parser = parse_range)]
        ranges: Option<Vec<(usize, usize)>>,
        #[arg(long, value_parser = parse_density, default_value = "1/2")]
        density: Density,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random proper interval graph with shuffled labels, or its interval model.
    Proper {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_density, default_value = "1/2")]
        density: Density,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the interval model instead of the edge list.
        #[arg(long)]
        intervals: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random intervals with endpoints in 1..=span.
    Intervals {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        span: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SearchKind {
    Intervals,
    Proper,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFamily {
    Chain,
    Shuffled,
}

/// Exit status plus message for stderr.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::TooLarge { .. } => 3,
            _ => 2,
        };
        Failure::new(code, e.to_string())
    }
}

const NOT_PROPER: &str = "NOT_PROPER_INTERVAL";

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("minla: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Gen { kind } => generate(kind),
        Command::Recognize { file } => {
            let g = read_graph(&file)?;
            let Some(chain) = recognize_proper_interval(&g) else {
                println!("{NOT_PROPER}");
                return Ok(1);
            };
            println!("chain n={} k={}", g.n(), chain.len());
            println!("order{}", join_prefixed(chain.order()));
            for c in chain.cliques() {
                println!("clique {} {}", c.lo, c.hi);
            }
            Ok(0)
        }
        Command::Solve { file, arrangement } => {
            let g = read_graph(&file)?;
            let Some(solution) = solve_proper_interval(&g)? else {
                println!("{NOT_PROPER}");
                return Ok(1);
            };
            println!("cost {}", solution.cost);
            if let Some(out) = arrangement {
                write_file(&out, &write_arrangement(&solution.arrangement))?;
            }
            Ok(0)
        }
        Command::Approx {
            file,
            report,
            arrangement,
        } => {
            let iv = parse_intervals(&read_file(&file)?)?;
            let approx = approximate(&iv)?;
            let record = approx.report.to_serializable();
            match report {
                ReportFormat::Json => {
                    let json = serde_json::to_string(&record)
                        .map_err(|e| Failure::new(2, e.to_string()))?;
                    println!("{json}");
                }
                ReportFormat::Text => {
                    println!("cost {}", record.cost);
                    println!("lower_bound_A {}", record.lower_bound_a);
                    println!("upper_bound_B {}", record.upper_bound_b);
                    println!("ratio {}", record.ratio.as_deref().unwrap_or("none"));
                }
            }
            if let Some(out) = arrangement {
                write_file(&out, &write_arrangement(&approx.arrangement))?;
            }
            Ok(0)
        }
        Command::Oracle {
            file,
            all_optima,
            limit,
            threads,
        } => {
            let g = read_graph(&file)?;
            if all_optima {
                let optima = enumerate_optimal(&g, limit.unwrap_or(DEFAULT_ENUMERATION_LIMIT))?;
                let best = match optima.first() {
                    Some(a) => cost(&g, a)?,
                    None => 0,
                };
                println!("cost {best}");
                println!("optima {}", optima.len());
                for a in &optima {
                    println!("order{}", join_prefixed(a.order()));
                }
            } else {
                let opts = OracleOptions {
                    limit_n: limit.unwrap_or(DEFAULT_LIMIT),
                    threads: threads.max(1),
                    ..OracleOptions::default()
                };
                let best = brute_force_minla_with(&g, &opts)?;
                println!("cost {}", best.cost);
                println!("order{}", join_prefixed(best.arrangement.order()));
            }
            Ok(0)
        }
        Command::Check { file, arrangement } => {
            let g = read_graph(&file)?;
            let a: Arrangement = parse_arrangement(&read_file(&arrangement)?)?;
            println!("cost {}", cost(&g, &a)?);
            Ok(0)
        }
        Command::FindCounterexample {
            max_n,
            seed,
            trials,
            family,
            output,
        } => {
            let family = match family {
                SearchKind::Intervals => SearchFamily::Intervals,
                SearchKind::Proper => SearchFamily::ProperChains,
            };
            let Some(found) = find_pi_suboptimal(max_n, seed, trials, family)? else {
                println!("NOT_FOUND");
                return Ok(1);
            };
            let mut comments = match &found.provenance {
                Provenance::RandomIntervals { n, span, seed } => {
                    vec![format!("seed={seed}"), format!("family=intervals n={n} span={span}")]
                }
                Provenance::ProperIntervals { n, density, seed } => {
                    vec![format!("seed={seed}"), format!("family=proper n={n} density={density}")]
                }
                Provenance::Star { leaves } => vec![format!("family=star leaves={leaves}")],
            };
            comments.push(format!("pi_cost={} optimum={}", found.pi_cost, found.optimum));
            let text = write_intervals(&found.intervals, &comments);
            match output {
                Some(path) => {
                    write_file(&path, &text)?;
                    println!(
                        "found n={} pi_cost={} optimum={}",
                        found.intervals.len(),
                        found.pi_cost,
                        found.optimum
                    );
                }
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Bench {
            family,
            sizes,
            seed,
            repeats,
        } => {
            let family = match family {
                BenchFamily::Chain => Family::Chain,
                BenchFamily::Shuffled => Family::Shuffled,
            };
            println!(
                "{:>9} {:>10} {:>13} {:>11} {:>11} {:>11}",
                "n", "m", "recognize_ms", "solve_ms", "total_ms", "ns_per_n+m"
            );
            for &n in &sizes {
                for row in run_bench(family, &[n], seed, repeats)? {
                    println!(
                        "{:>9} {:>10} {:>13.3} {:>11.3} {:>11.3} {:>11.1}",
                        row.n,
                        row.m,
                        row.recognize.as_secs_f64() * 1e3,
                        row.solve.as_secs_f64() * 1e3,
                        row.total().as_secs_f64() * 1e3,
                        row.ns_per_unit()
                    );
                }
            }
            Ok(0)
        }
    }
}

fn generate(kind: GenKind) -> Result<u8, Failure> {
    let (text, output) = match kind {
        GenKind::Chain {
            n,
            ranges,
            density,
            seed,
            output,
        } => {
            let (ranges, header) = match ranges {
                Some(r) => (r, "c chain".to_string()),
                None => (
                    random_chain_ranges(n, density, seed)?,
                    format!("c chain n={n} density={density} seed={seed}"),
                ),
            };
            let g = generate_chain_graph(n, &ranges)?;
            (format!("{header}\n{}", write_edge_list(&g)), output)
        }
        GenKind::Proper {
            n,
            density,
            seed,
            intervals,
            output,
        } => {
            let header = format!("proper n={n} density={density} seed={seed}");
            let text = if intervals {
                write_intervals(&random_proper_intervals(n, density, seed)?, &[header])
            } else {
                let g = random_proper_interval(n, density, seed)?;
                format!("c {header}\n{}", write_edge_list(&g))
            };
            (text, output)
        }
        GenKind::Intervals {
            n,
            span,
            seed,
            output,
        } => {
            let iv = random_intervals(n, span, seed)?;
            let header = format!("intervals n={n} span={span} seed={seed}");
            (write_intervals(&iv, &[header]), output)
        }
    };
    match output {
        Some(path) => write_file(&path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn read_file(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::new(2, format!("{}: {e}", path.display())))
}

/// Edge lists are taken as is; interval files become their intersection graph.
fn read_graph(path: &Path) -> Result<Graph, Failure> {
    match parse_instance(&read_file(path)?)? {
        Instance::Graph(g) => Ok(g),
        Instance::Intervals(iv) => Ok(graph_from_intervals(&iv)?),
    }
}

fn join_prefixed(vertices: &[usize]) -> String {
    vertices.iter().map(|v| format!(" {v}")).collect()
}

fn parse_size(s: &str) -> Result<usize, String> {
    if let Ok(n) = s.parse::<usize>() {
        return Ok(n);
    }
    let x: f64 = s.parse().map_err(|_| format!("invalid size `{s}`"))?;
    if x < 0.0 || x.fract() != 0.0 || x > 1e12 {
        return Err(format!("size `{s}` is not a whole number"));
    }
    Ok(x as usize)
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| format!("range `{s}` should look like lo:hi"))?;
    let lo = lo.trim().parse().map_err(|_| format!("invalid range start in `{s}`"))?;
    let hi = hi.trim().parse().map_err(|_| format!("invalid range end in `{s}`"))?;
    Ok((lo, hi))
}

fn parse_density(s: &str) -> Result<Density, String> {
    s.parse::<Density>().map_err(|_| format!("density `{s}` should be p/q or an integer"))
}
