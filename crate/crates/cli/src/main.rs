use std::fmt::Write as _;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use z2star::combinatorics::SubsetMask;
use z2star::export;
use z2star::free_product::{
    build_one_quiver, canonicalize_characters, component_count, components,
    dimvector_of_characters, is_iss_smooth, iss_dim, orbit_count, rep2_census, simplicity,
    treelike_census, CharacterMultiset, SimplicityReason,
};
use z2star::local::{
    degeneration_graph, enumerate_settings, labeled_degeneration_graph, local_quiver,
};
use z2star::quiver::{is_simple_dimvector, is_smooth_setting};
use z2star::{DimVector, Error, Quiver};

#[derive(Parser)]
#[command(
    name = "z2star",
    version,
    about = "Exact combinatorics of representations of Z2 * ... * Z2"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
    Dot,
    Csv,
    Matrix,
}

#[derive(Subcommand)]
enum Command {
    /// Number of components of rep_m (and B_n-orbits with --orbits).
    Components {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        /// Also print the orbit count and one canonical representative per orbit.
        #[arg(long)]
        orbits: bool,
    },
    /// Degeneration graph of the local quiver settings for alpha(n,m).
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Use labeled set partitions as nodes instead of Young labels (n <= 6).
        #[arg(long)]
        labeled: bool,
    },
    /// The one quiver on the characters psi_A, A subset of {1..n}.
    OneQuiver {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "matrix")]
        format: OutputFormat,
    },
    /// Whether alpha is a simple dimension vector (exit 0 = yes, 1 = no).
    Simple {
        #[arg(long)]
        alpha: DimVector,
    },
    /// Dimension of the quotient iss_alpha for simple alpha.
    IssDim {
        #[arg(long)]
        alpha: DimVector,
    },
    /// Whether iss_alpha is smooth (exit 0 = yes, 1 = no).
    SmoothComponent {
        #[arg(long)]
        alpha: DimVector,
    },
    /// Local quiver settings for alpha(n,m).
    Local {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Only settings with these row lengths, e.g. `3,3,3`.
        #[arg(long, value_delimiter = ',')]
        young: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Components of rep_2 with dimensions and singularities.
    Rep2 {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Connected tree-like full subquivers of the one quiver, by type.
    Treelike {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
    /// Normal form of a sum of characters, e.g. `{1}^2;{2}`.
    Canon {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        chars: String,
    },
    /// Simplicity and smoothness of an arbitrary quiver setting given as JSON.
    Setting {
        /// `{"v": 2, "arrows": [[0,1],[1,0]]}`
        #[arg(long)]
        quiver: String,
        #[arg(long, value_delimiter = ',')]
        dims: Vec<u32>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// What a command produced: text for stdout and whether its answer was "yes".
struct Outcome {
    text: String,
    yes: bool,
}

impl Outcome {
    fn print(text: String) -> Self {
        Outcome { text, yes: true }
    }
}

fn allow(format: OutputFormat, allowed: &[OutputFormat], command: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        return Ok(());
    }
    let names: Vec<String> = allowed
        .iter()
        .map(|f| format!("{f:?}").to_lowercase())
        .collect();
    Err(Failure::Usage(format!(
        "`{command}` does not support --format {}; use one of: {}",
        format!("{format:?}").to_lowercase(),
        names.join(", ")
    )))
}

fn to_json(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn color_enabled() -> bool {
    std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty())
}

fn run(command: Command) -> Result<Outcome, Failure> {
    use OutputFormat::*;
    match command {
        Command::Components { n, m, orbits } => {
            let mut out = format!("{}\n", component_count(n, m)?);
            if orbits {
                let reps: std::collections::BTreeSet<DimVector> =
                    components(n, m)?.map(|a| a.bn_canonical()).collect();
                writeln!(out, "{}", orbit_count(n, m)?).unwrap();
                for r in reps.iter().rev() {
                    writeln!(out, "{r}").unwrap();
                }
            }
            Ok(Outcome::print(out))
        }
        Command::Graph {
            n,
            m,
            format,
            labeled,
        } => {
            allow(format, &[Text, Json, Dot], "graph")?;
            let g = if labeled {
                labeled_degeneration_graph(n, m)?
            } else {
                degeneration_graph(n, m)?
            };
            Ok(Outcome::print(match format {
                Json => to_json(&export::graph_to_json(&g)),
                Dot => export::graph_to_dot(&g, color_enabled()),
                _ => export::graph_to_text(&g),
            }))
        }
        Command::OneQuiver { n, format } => {
            allow(format, &[Matrix, Dot, Json], "one-quiver")?;
            let q = build_one_quiver(n)?;
            Ok(Outcome::print(match format {
                Json => to_json(&export::quiver_to_json(&q)),
                Dot => {
                    let labels: Vec<String> = SubsetMask::all(n)?.map(|a| a.to_string()).collect();
                    export::quiver_to_dot(&format!("one_quiver_{n}"), &q, &labels, None)
                }
                _ => q.euler_matrix().to_string(),
            }))
        }
        Command::Simple { alpha } => {
            let v = simplicity(&alpha)?;
            let reason = match v.reason {
                SimplicityReason::Character => "level 1: a sum of characters".to_string(),
                SimplicityReason::SmallRank => {
                    "n <= 2: decided on the local quiver at M_alpha".to_string()
                }
                SimplicityReason::Inequality { sum_max, bound } => {
                    let rel = if sum_max <= bound { "<=" } else { ">" };
                    format!("sum of max(a+,a-) = {sum_max} {rel} m(n-1) = {bound}")
                }
                SimplicityReason::ExceptionOrbit { k } => {
                    format!("in the B_n-orbit of (2k,0;...;2k,0;k,k;k,k) with k = {k}")
                }
            };
            let verdict = if v.simple { "simple" } else { "not simple" };
            Ok(Outcome {
                text: format!("{alpha}: {verdict} ({reason})\n"),
                yes: v.simple,
            })
        }
        Command::IssDim { alpha } => Ok(Outcome::print(format!("{}\n", iss_dim(&alpha)?))),
        Command::SmoothComponent { alpha } => {
            let smooth = is_iss_smooth(&alpha);
            let verdict = if smooth { "smooth" } else { "singular" };
            Ok(Outcome {
                text: format!("{alpha}: {verdict}\n"),
                yes: smooth,
            })
        }
        Command::Local {
            n,
            m,
            young,
            format,
        } => {
            allow(format, &[Text, Json, Dot], "local")?;
            let mut settings = enumerate_settings(n, m)?;
            if let Some(mut rows) = young {
                rows.sort_unstable_by(|a, b| b.cmp(a));
                if rows.iter().sum::<usize>() != n || rows.contains(&0) {
                    return Err(Failure::Usage(format!(
                        "--young must list positive row lengths summing to n = {n}"
                    )));
                }
                settings.retain(|s| s.young_label().row_lengths() == rows);
            }
            let mut out = String::new();
            match format {
                Json => {
                    let items: Vec<serde_json::Value> = settings
                        .iter()
                        .map(|s| {
                            let q = local_quiver(s);
                            serde_json::json!({
                                "young": s.young_label().diagram(),
                                "k": s.k(),
                                "setting": s,
                                "quiver": {
                                    "v": q.quiver.vertex_count(),
                                    "arrows": q.quiver.arrow_matrix(),
                                    "dims": q.dims,
                                },
                            })
                        })
                        .collect();
                    out = to_json(&serde_json::Value::Array(items));
                }
                Dot => {
                    for s in &settings {
                        let q = local_quiver(s);
                        let mut labels: Vec<String> =
                            s.blocks().iter().map(|b| format!("psi_{b}")).collect();
                        labels.push("psi_{}".to_string());
                        out.push_str(&export::setting_to_dot(
                            &s.young_label().to_string(),
                            &q,
                            &labels,
                        ));
                    }
                }
                _ => {
                    for s in &settings {
                        let q = local_quiver(s);
                        writeln!(out, "{}  {s}", s.young_label()).unwrap();
                        writeln!(out, "  dims {:?}", q.dims).unwrap();
                        for row in q.quiver.arrow_matrix() {
                            writeln!(out, "  {row:?}").unwrap();
                        }
                    }
                }
            }
            Ok(Outcome::print(out))
        }
        Command::Rep2 { n, format } => {
            allow(format, &[Text, Csv], "rep2")?;
            let rows = rep2_census(n)?;
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            match format {
                Csv => export::write_rep2_csv(rows, &mut w)?,
                _ => export::write_rep2_text(rows, &mut w)?,
            }
            w.flush()?;
            Ok(Outcome::print(String::new()))
        }
        Command::Treelike { n, format } => {
            allow(format, &[Text, Json], "treelike")?;
            let census = treelike_census(n)?;
            if format == Json {
                let types: Vec<serde_json::Value> = census
                    .instances
                    .iter()
                    .map(|(t, inst)| {
                        serde_json::json!({
                            "type": t.to_string(),
                            "count": inst.len(),
                        })
                    })
                    .collect();
                return Ok(Outcome::print(to_json(&serde_json::json!({
                    "n": n,
                    "types": types,
                    "unclassified": census.unclassified.len(),
                }))));
            }
            let mut out = format!("{} types\n", census.instances.len());
            for (t, inst) in &census.instances {
                let example: Vec<String> = inst[0].iter().map(|a| a.to_string()).collect();
                writeln!(
                    out,
                    "{t}: {} subquivers, e.g. {}",
                    inst.len(),
                    example.join(" ")
                )
                .unwrap();
            }
            if !census.unclassified.is_empty() {
                writeln!(out, "unclassified: {}", census.unclassified.len()).unwrap();
            }
            Ok(Outcome::print(out))
        }
        Command::Canon { n, chars } => {
            let c =
                CharacterMultiset::parse(&chars, n).map_err(|e| Failure::Usage(e.to_string()))?;
            let normal = canonicalize_characters(&c);
            Ok(Outcome::print(format!(
                "{normal}\nalpha = {}\n",
                dimvector_of_characters(&normal)
            )))
        }
        Command::Setting { quiver, dims } => {
            let q: Quiver = serde_json::from_str(&quiver)
                .map_err(|e| Failure::Usage(format!("--quiver: {e}")))?;
            let simple = is_simple_dimvector(&q, &dims)?;
            let smooth = match is_smooth_setting(&q, &dims) {
                Ok(true) => "yes".to_string(),
                Ok(false) => "no".to_string(),
                Err(e) => format!("n/a ({e})"),
            };
            Ok(Outcome::print(format!(
                "simple: {}\nsmooth: {smooth}\n",
                if simple { "yes" } else { "no" }
            )))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.yes {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
