//! `ratcat`: command-line front end for the `ratcat` library.
//!
//! Pair order: the first positional argument is `m`, the second is `n`.
//! `m` indexes `G_m`, reconstruction and bounce paths; diagrams live in a
//! frame of width `n` and height `m`.

use std::process::ExitCode;

use clap::{error::ErrorKind, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ratcat::bounce::{bounce_path, bounce_tree, reconstruct};
use ratcat::cores::{count_self_conjugate_cores, enumerate_cores};
use ratcat::diagrams::{
    h_plus, poincare_polynomials, qt_catalan, rational_catalan_count,
    Frame, Partition,
};
use ratcat::gmaps::{check_transpose_duality, g_columns};
use ratcat::semimodules::{enumerate_semimodules, parse_gaps, parse_list, Semimodule};
use ratcat::smallsym::{involution, StatPair};
use ratcat::verify::{threads_from_env, verify_with, Options};
use ratcat::Error;

#[derive(Parser)]
#[command(name = "ratcat", version, about = "Rational-slope q,t-Catalan combinatorics")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(clap::Args)]
struct Pair {
    /// First generator; indexes G_m and reconstruction
    m: u32,
    /// Second generator
    n: u32,
}

impl Pair {
    fn frame(&self) -> Result<Frame, Error> {
        Frame::new(self.m, self.n)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Number of diagrams below the diagonal
    Count {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The q,t-Catalan polynomial
    Poly {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Poincare polynomials by area and by delta - h+
    Poincare {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// All semimodules with their diagrams
    Semimodules {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// G_m and G_n column vectors of a semimodule
    Gmap {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        gaps: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The dual semimodule
    Dual {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        gaps: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Inverts G_m for m = kn +- 1
    Reconstruct {
        #[command(flatten)]
        pair: Pair,
        /// Column heights g(a_0), ..., g(a_{m-1})
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Bounce path and statistic for m = kn +- 1
    Bounce {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, conflicts_with = "gaps", required_unless_present = "gaps")]
        g: Option<String>,
        #[arg(long)]
        gaps: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Simultaneous (m, n)-cores
    Cores {
        #[command(flatten)]
        pair: Pair,
        #[arg(long, group = "mode")]
        count: bool,
        #[arg(long, group = "mode")]
        list: bool,
        #[arg(long = "self-conjugate", group = "mode")]
        self_conjugate: bool,
    },
    /// Image of a diagram under the area/h+ exchanging involution
    Involution {
        #[command(flatten)]
        pair: Pair,
        #[arg(long)]
        diagram: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Checks every property on all coprime pairs with m + n <= max-sum
    Verify {
        #[arg(long, default_value_t = 12)]
        max_sum: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Replace h+ by a corrupted statistic (harness self-test)
        #[arg(long, hide = true)]
        mutate_hplus: bool,
    },
}

enum Failure {
    Input(String),
    Violation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Violation) => ExitCode::from(2),
    }
}

fn lines<I: IntoIterator<Item = String>>(it: I) -> String {
    it.into_iter().map(|l| l + "\n").collect()
}

fn list<T: ToString>(xs: &[T]) -> String {
    if xs.is_empty() {
        return "-".into();
    }
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

fn json_out(v: serde_json::Value) -> String {
    v.to_string() + "\n"
}

fn semimodule(f: Frame, gaps: &str) -> Result<Semimodule, Failure> {
    Ok(Semimodule::new(f, parse_gaps(gaps)?)?)
}

fn no_csv(format: Format) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Input("csv output is not available for this command".into()));
    }
    Ok(())
}

fn run(cmd: Command) -> Result<String, Failure> {
    match cmd {
        Command::Count { pair, format } => {
            let f = pair.frame()?;
            let c = rational_catalan_count(f.m(), f.n());
            Ok(match format {
                Format::Text => format!("{c}\n"),
                Format::Json => json_out(json!({"m": f.m(), "n": f.n(), "count": c as u64})),
                Format::Csv => format!("m,n,count\n{},{},{c}\n", f.m(), f.n()),
            })
        }
        Command::Poly { pair, format } => {
            no_csv(format)?;
            let p = qt_catalan(&pair.frame()?)?;
            Ok(match format {
                Format::Json => p.to_json_string() + "\n",
                _ => format!("{p}\n"),
            })
        }
        Command::Poincare { pair, format } => {
            no_csv(format)?;
            let (area, h) = poincare_polynomials(&pair.frame()?)?;
            Ok(match format {
                Format::Json => json_out(json!({
                    "area": area.to_json(),
                    "h": h.to_json(),
                    "equal": area == h,
                })),
                _ => lines([format!("area: {area}"), format!("h: {h}"), format!("equal: {}", area == h)]),
            })
        }
        Command::Semimodules { pair, format } => {
            let f = pair.frame()?;
            let sms = enumerate_semimodules(&f);
            let row = |s: &Semimodule| {
                let d = s.to_diagram();
                (s.gaps_string(), d.to_string(), f.delta() - d.area(), h_plus(&d, &f))
            };
            Ok(match format {
                Format::Text => lines(sms.iter().map(|s| {
                    let (_, d, a, h) = row(s);
                    format!("{s} diagram={d} a={a} h+={h}")
                })),
                Format::Csv => {
                    let mut out = String::from("gaps,diagram,a,h_plus\n");
                    out += &lines(sms.iter().map(|s| {
                        let (g, d, a, h) = row(s);
                        format!("\"{g}\",\"{d}\",{a},{h}")
                    }));
                    out
                }
                Format::Json => json_out(json!(sms
                    .iter()
                    .map(|s| {
                        let d = s.to_diagram();
                        json!({
                            "gaps": s.gaps(),
                            "diagram": d.rows(),
                            "a": f.delta() - d.area(),
                            "h_plus": h_plus(&d, &f),
                        })
                    })
                    .collect::<Vec<_>>())),
            })
        }
        Command::Gmap { pair, gaps, format } => {
            no_csv(format)?;
            let f = pair.frame()?;
            let s = semimodule(f, &gaps)?;
            let gm = g_columns(&s, f.m());
            let gn = g_columns(&s, f.n());
            let holds = check_transpose_duality(&s);
            Ok(match format {
                Format::Json => json_out(json!({
                    "gaps": s.gaps(),
                    "g_m": gm,
                    "g_n": gn,
                    "transpose_duality": holds,
                })),
                _ => lines([
                    format!("G_m: {}", list(&gm)),
                    format!("G_n: {}", list(&gn)),
                    format!("transpose-duality: {}", if holds { "holds" } else { "fails" }),
                ]),
            })
        }
        Command::Dual { pair, gaps, format } => {
            no_csv(format)?;
            let d = semimodule(pair.frame()?, &gaps)?.dual();
            Ok(match format {
                Format::Json => json_out(json!({"gaps": d.gaps()})),
                _ => format!("{d}\n"),
            })
        }
        Command::Reconstruct { pair, g, format } => {
            no_csv(format)?;
            let f = pair.frame()?;
            let r = reconstruct(&f, &parse_list(&g)?)?;
            let edges: Vec<String> = r.tree.edges().iter().map(|(i, p)| format!("{i}->{p}")).collect();
            Ok(match format {
                Format::Json => json_out(json!({
                    "gaps": r.semimodule.gaps(),
                    "generators": r.generators,
                    "tree": edges,
                })),
                _ => lines([
                    format!("gaps: {}", r.semimodule.gaps_string()),
                    format!("generators: {}", list(&r.generators)),
                    format!("tree: {}", r.tree.edges_string()),
                ]),
            })
        }
        Command::Bounce { pair, g, gaps, format } => {
            no_csv(format)?;
            let f = pair.frame()?;
            let (columns, tree) = match (g, gaps) {
                (Some(g), _) => (parse_list(&g)?, None),
                (None, Some(gaps)) => {
                    let s = semimodule(f, &gaps)?;
                    (g_columns(&s, f.m()), Some(bounce_tree(&s)?))
                }
                (None, None) => unreachable!("clap requires one of --g, --gaps"),
            };
            let p = bounce_path(&columns, &f)?;
            let tree_edges = tree.map(|t| {
                t.edges()
                    .iter()
                    .map(|(i, p)| format!("{i}->{p}"))
                    .collect::<Vec<_>>()
            });
            Ok(match format {
                Format::Json => {
                    let mut v = json!({
                        "vertical": p.vertical,
                        "horizontal": p.horizontal,
                        "steps": p.steps_string(),
                        "statistic": p.statistic(),
                    });
                    if let Some(e) = tree_edges {
                        v["tree"] = json!(e);
                    }
                    json_out(v)
                }
                _ => {
                    let mut out = lines([
                        format!("vertical: {}", list(&p.vertical)),
                        format!("horizontal: {}", list(&p.horizontal)),
                        format!("steps: {}", p.steps_string()),
                        format!("statistic: {}", p.statistic()),
                    ]);
                    if let Some(e) = tree_edges {
                        out += &format!("tree: {}\n", e.join(" "));
                    }
                    out
                }
            })
        }
        Command::Cores { pair, count, list: _, self_conjugate } => {
            let f = pair.frame()?;
            Ok(if count {
                format!("{}\n", enumerate_cores(&f).len())
            } else if self_conjugate {
                format!("{}\n", count_self_conjugate_cores(&f))
            } else {
                lines(enumerate_cores(&f).iter().map(Partition::to_string))
            })
        }
        Command::Involution { pair, diagram, format } => {
            no_csv(format)?;
            let f = pair.frame()?;
            let d: Partition = diagram.parse()?;
            let i = involution(&d, &f)?;
            let (sd, si) = (StatPair::of(&d, &f), StatPair::of(&i, &f));
            Ok(match format {
                Format::Json => json_out(json!({
                    "diagram": d.rows(),
                    "image": i.rows(),
                    "diagram_stats": [sd.a, sd.b],
                    "image_stats": [si.a, si.b],
                })),
                _ => lines([
                    format!("image: {i}"),
                    format!("diagram stats: ({}, {})", sd.a, sd.b),
                    format!("image stats: ({}, {})", si.a, si.b),
                ]),
            })
        }
        Command::Verify { max_sum, format, mutate_hplus } => {
            if max_sum < 3 {
                return Err(Failure::Input("--max-sum must be at least 3".into()));
            }
            let mut opts = Options::new(max_sum);
            opts.threads = threads_from_env();
            if mutate_hplus {
                opts.statistic = corrupted_h_plus;
            }
            let report = verify_with(&opts);
            print!(
                "{}",
                match format {
                    Format::Text => report.to_text(),
                    Format::Json => json_out(report.to_json()),
                    Format::Csv => report.to_csv(),
                }
            );
            if report.passed() {
                Ok(String::new())
            } else {
                Err(Failure::Violation)
            }
        }
    }
}

fn corrupted_h_plus(d: &Partition, f: &Frame) -> u64 {
    h_plus(d, f) + u64::from(!d.is_empty())
}
