//! The `topoq` binary: build spaces from
//! graphs or subbases, check connectivity and continuity, weld and swap
//! entanglement links, run the Heyting sweep, teleport and measure states,
//! and contract or refine tensor networks.
//!
//! Every command reads JSON files (`-` for standard input) and prints one
//! JSON value with sorted keys on standard output. Failures print
//! `{"code", "message", "path"}` and exit with status 2.

use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::SeedableRng;
use serde_json::{json, Map, Value};

use topoq_core::augment::AugmentedSpace;
use topoq_core::dot::space_to_dot;
use topoq_core::graph::{face_model, graph_topology, is_continuous, PointMap};
use topoq_core::heyting::HeytingContext;
use topoq_core::json::{
    map_from_json, matrix_from_json, matrix_to_json, AugmentedJson, GraphJson, LinksJson, MapJson,
    MatrixJson, NetworkJson, SpaceJson, StateJson, TensorJson,
};
use topoq_core::quantum::{entanglement_swap, measure_qubit, measure_qubit_sampled, teleport};
use topoq_core::space::FiniteSpace;
use topoq_core::{tolerance, Error};

#[derive(Parser)]
#[command(
    name = "topoq",
    version,
    about = "Finite-space topology welded to tensor networks"
)]
struct Cli {
    /// Seed for sampled measurement outcomes.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Overrides the rank/projector decision tolerance (default 1e-9).
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Writes a DOT rendering of the resulting space (build/augment/swap).
    #[arg(long, global = true, value_name = "PATH")]
    dot: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Finite-space construction and queries.
    #[command(subcommand)]
    Topo(TopoCommand),
    /// Weld entanglement links into a space.
    Augment {
        #[arg(long)]
        space: PathBuf,
        #[arg(long)]
        links: PathBuf,
    },
    /// Entanglement swap on an augmented space.
    Swap {
        #[arg(long)]
        augmented: PathBuf,
        /// Label of the A–B link.
        #[arg(long)]
        ab: String,
        /// Label of the B–C link.
        #[arg(long)]
        bc: String,
        /// Fresh label for the new A–C link.
        #[arg(long = "new-label")]
        new_label: String,
        /// Measurement matrix file; identity when omitted.
        #[arg(long)]
        m: Option<PathBuf>,
    },
    /// Pure-state operations.
    #[command(subcommand)]
    Quantum(QuantumCommand),
    /// Tensor-network operations.
    #[command(subcommand)]
    Net(NetCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceMode {
    /// Edge-neighborhood topology: an edge's minimal open holds both ends.
    Top,
    /// Face model: edges open, vertex stars minimal.
    Face,
}

#[derive(Subcommand)]
enum TopoCommand {
    /// Build a space from a graph (--mode top|face) or normalize a space
    /// file to its canonical form.
    Build {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "top")]
        mode: SpaceMode,
        #[arg(long)]
        space: Option<PathBuf>,
    },
    /// Connectivity and components of a space.
    Connected {
        #[arg(value_name = "SPACE", conflicts_with = "space")]
        space_pos: Option<PathBuf>,
        #[arg(long)]
        space: Option<PathBuf>,
    },
    /// Negation table of the minimal-open generators and the Boolean
    /// verdict.
    Heyting {
        #[arg(value_name = "SPACE", conflicts_with = "space")]
        space_pos: Option<PathBuf>,
        #[arg(long)]
        space: Option<PathBuf>,
        /// Open-family enumeration limit for the law sweep.
        #[arg(long, default_value_t = 4096)]
        limit: usize,
    },
    /// Continuity of a point map. With --graph, checks the identity map
    /// from the edge-neighborhood topology to the face model.
    Continuity {
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        map: Option<PathBuf>,
        #[arg(long)]
        dom: Option<PathBuf>,
        #[arg(long)]
        cod: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum QuantumCommand {
    /// Teleport a one-qubit state through measurement and link matrices.
    Teleport {
        #[arg(long)]
        psi: PathBuf,
        #[arg(long)]
        m: PathBuf,
        #[arg(long)]
        e: PathBuf,
    },
    /// Combine two link matrices through a measurement: E·M·E'.
    Swap {
        #[arg(long)]
        e: PathBuf,
        #[arg(long)]
        m: PathBuf,
        #[arg(long)]
        e2: PathBuf,
    },
    /// Standard-basis measurement of one qubit; samples the outcome from
    /// --seed when --outcome is omitted.
    Measure {
        #[arg(long)]
        state: PathBuf,
        #[arg(long)]
        qubit: usize,
        #[arg(long)]
        outcome: Option<u8>,
    },
}

#[derive(Subcommand)]
enum NetCommand {
    /// Full contraction of a network, printed as a tensor.
    Contract {
        #[arg(value_name = "NET", conflicts_with = "net")]
        net_pos: Option<PathBuf>,
        #[arg(long)]
        net: Option<PathBuf>,
    },
    /// Split a projector node into two copies joined by a fresh edge.
    Refine {
        #[arg(value_name = "NET", conflicts_with = "net")]
        net_pos: Option<PathBuf>,
        #[arg(long)]
        net: Option<PathBuf>,
        #[arg(long)]
        node: String,
    },
}

/// An error plus the file it arose from, for the error JSON.
struct CliError {
    code: String,
    message: String,
    path: Option<String>,
}

impl CliError {
    fn of(err: Error, path: Option<&Path>) -> CliError {
        CliError {
            code: err.code().to_string(),
            message: err.to_string(),
            path: path.map(|p| p.display().to_string()),
        }
    }

    fn schema(message: impl Into<String>) -> CliError {
        CliError {
            code: "schema".into(),
            message: message.into(),
            path: None,
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read_input(path: &Path) -> CliResult<String> {
    if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError {
                code: "io".into(),
                message: e.to_string(),
                path: Some("-".into()),
            })?;
        return Ok(buf);
    }
    std::fs::read_to_string(path).map_err(|e| CliError {
        code: "file_not_found".into(),
        message: e.to_string(),
        path: Some(path.display().to_string()),
    })
}

fn parse_json<T: serde::de::DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = read_input(path)?;
    serde_json::from_str(&text).map_err(|e| CliError {
        code: "schema".into(),
        message: e.to_string(),
        path: Some(path.display().to_string()),
    })
}

fn load_space(path: &Path) -> CliResult<FiniteSpace> {
    let parsed: SpaceJson = parse_json(path)?;
    parsed.to_space().map_err(|e| CliError::of(e, Some(path)))
}

fn load_matrix(path: &Path) -> CliResult<topoq_core::TwoQubitMatrix64> {
    let parsed: MatrixJson = parse_json(path)?;
    Ok(matrix_from_json(&parsed))
}

fn either(flag: Option<PathBuf>, positional: Option<PathBuf>, what: &str) -> CliResult<PathBuf> {
    flag.or(positional)
        .ok_or_else(|| CliError::schema(format!("a {what} file is required")))
}

fn sorted_value<T: serde::Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("serializable")
}

/// Merges seed/tolerance metadata into the output when overrides were
/// given on the command line.
fn with_meta(mut value: Value, seed: Option<u64>, tol: Option<f64>) -> Value {
    if seed.is_none() && tol.is_none() {
        return value;
    }
    let mut meta = Map::new();
    if let Some(s) = seed {
        meta.insert("seed".into(), json!(s));
    }
    if let Some(t) = tol {
        meta.insert("tolerance".into(), json!(t));
    }
    if let Value::Object(obj) = &mut value {
        obj.insert("meta".into(), Value::Object(meta));
    }
    value
}

fn write_dot(dot: &Option<PathBuf>, content: &str) -> CliResult<()> {
    if let Some(path) = dot {
        std::fs::write(path, content).map_err(|e| CliError {
            code: "io".into(),
            message: e.to_string(),
            path: Some(path.display().to_string()),
        })?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<Value> {
    let rank_tol = cli.tolerance.unwrap_or(tolerance::RANK);
    match cli.command {
        Command::Topo(cmd) => run_topo(cmd, &cli.dot),
        Command::Augment { space, links } => {
            let base = load_space(&space)?;
            let parsed: LinksJson = parse_json(&links)?;
            let augmented = AugmentedSpace::augment(base, parsed.into_links())
                .map_err(|e| CliError::of(e, Some(&links)))?;
            let labels: Vec<String> = augmented.links().iter().map(|l| l.label.clone()).collect();
            write_dot(&cli.dot, &space_to_dot(augmented.space(), &labels))?;
            Ok(sorted_value(&AugmentedJson::from_augmented(&augmented)))
        }
        Command::Swap {
            augmented,
            ab,
            bc,
            new_label,
            m,
        } => {
            let parsed: AugmentedJson = parse_json(&augmented)?;
            let aug = parsed
                .to_augmented()
                .map_err(|e| CliError::of(e, Some(&augmented)))?;
            let measurement = m.as_deref().map(load_matrix).transpose()?;
            let swapped = aug
                .swap_links(&ab, &bc, &new_label, measurement.as_ref())
                .map_err(|e| CliError::of(e, None))?;
            let labels: Vec<String> = swapped.links().iter().map(|l| l.label.clone()).collect();
            write_dot(&cli.dot, &space_to_dot(swapped.space(), &labels))?;
            Ok(sorted_value(&AugmentedJson::from_augmented(&swapped)))
        }
        Command::Quantum(cmd) => run_quantum(cmd, cli.seed, rank_tol),
        Command::Net(cmd) => run_net(cmd, rank_tol),
    }
    .map(|value| with_meta(value, cli.seed, cli.tolerance))
}

fn run_topo(cmd: TopoCommand, dot: &Option<PathBuf>) -> CliResult<Value> {
    match cmd {
        TopoCommand::Build { graph, mode, space } => {
            let built = match (graph, space) {
                (Some(path), _) => {
                    let parsed: GraphJson = parse_json(&path)?;
                    let g = parsed
                        .to_graph()
                        .map_err(|e| CliError::of(e, Some(&path)))?;
                    match mode {
                        SpaceMode::Top => graph_topology(&g),
                        SpaceMode::Face => face_model(&g),
                    }
                }
                (None, Some(path)) => load_space(&path)?,
                (None, None) => {
                    return Err(CliError::schema("either --graph or --space is required"))
                }
            };
            write_dot(dot, &space_to_dot(&built, &[]))?;
            Ok(sorted_value(&SpaceJson::from_space(&built)))
        }
        TopoCommand::Connected { space_pos, space } => {
            let path = either(space, space_pos, "space")?;
            let built = load_space(&path)?;
            let components: Vec<Vec<String>> = built
                .connected_components()
                .iter()
                .map(|c| c.to_sorted_vec())
                .collect();
            Ok(json!({
                "connected": built.is_connected(),
                "components": components,
            }))
        }
        TopoCommand::Heyting {
            space_pos,
            space,
            limit,
        } => {
            let path = either(space, space_pos, "space")?;
            let built = load_space(&path)?;
            let ctx = HeytingContext::new(&built);
            let negations: Vec<Value> = ctx
                .negation_table()
                .iter()
                .map(|(open, negation)| {
                    json!({
                        "open": open.to_sorted_vec(),
                        "negation": negation.to_sorted_vec(),
                    })
                })
                .collect();
            let report = ctx.verify_laws(limit);
            Ok(json!({
                "is_boolean": ctx.is_boolean(),
                "negations": negations,
                "laws": {
                    "passed": report.passed(),
                    "opens_checked": report.opens_checked,
                    "opens_exhaustive": report.opens_exhaustive,
                    "triples_checked": report.triples_checked,
                    "triples_exhaustive": report.triples_exhaustive,
                },
            }))
        }
        TopoCommand::Continuity {
            graph,
            map,
            dom,
            cod,
        } => {
            let (point_map, dom_space, cod_space) = match (graph, map, dom, cod) {
                (Some(path), None, None, None) => {
                    let parsed: GraphJson = parse_json(&path)?;
                    let g = parsed
                        .to_graph()
                        .map_err(|e| CliError::of(e, Some(&path)))?;
                    let top = graph_topology(&g);
                    let fm = face_model(&g);
                    let id = PointMap::identity(top.points().to_vec());
                    (id, top, fm)
                }
                (None, Some(map_path), Some(dom_path), Some(cod_path)) => {
                    let parsed: MapJson = parse_json(&map_path)?;
                    (
                        map_from_json(&parsed),
                        load_space(&dom_path)?,
                        load_space(&cod_path)?,
                    )
                }
                _ => {
                    return Err(CliError::schema(
                        "provide --graph alone, or --map with --dom and --cod",
                    ))
                }
            };
            let check = is_continuous(&point_map, &dom_space, &cod_space)
                .map_err(|e| CliError::of(e, None))?;
            Ok(json!({
                "continuous": check.continuous,
                "witness": check.witness.map(|w| w.to_sorted_vec()),
            }))
        }
    }
}

fn run_quantum(cmd: QuantumCommand, seed: Option<u64>, rank_tol: f64) -> CliResult<Value> {
    match cmd {
        QuantumCommand::Teleport { psi, m, e } => {
            let state: StateJson = parse_json(&psi)?;
            let state = state.to_state().map_err(|e| CliError::of(e, Some(&psi)))?;
            let m = load_matrix(&m)?;
            let e = load_matrix(&e)?;
            let (out, scale) = teleport(&state, &m, &e).map_err(|e| CliError::of(e, None))?;
            Ok(json!({
                "state": sorted_value(&StateJson::from_state(&out)),
                "scale": scale,
            }))
        }
        QuantumCommand::Swap { e, m, e2 } => {
            let e = load_matrix(&e)?;
            let m = load_matrix(&m)?;
            let e2 = load_matrix(&e2)?;
            let out = entanglement_swap(&e, &m, &e2);
            let impossible = out.frobenius_norm() * out.frobenius_norm() < tolerance::BRANCH;
            let entangled = !impossible && state_determinant_above(&out, rank_tol);
            Ok(json!({
                "matrix": matrix_to_json(&out),
                "entangled": entangled,
                "impossible_branch": impossible,
            }))
        }
        QuantumCommand::Measure {
            state,
            qubit,
            outcome,
        } => {
            let parsed: StateJson = parse_json(&state)?;
            let s = parsed
                .to_state()
                .map_err(|e| CliError::of(e, Some(&state)))?;
            let (outcome, probability, residual, sampled) = match outcome {
                Some(b) => {
                    let (p, r) = measure_qubit(&s, qubit, b).map_err(|e| CliError::of(e, None))?;
                    (b, p, r, false)
                }
                None => {
                    let mut rng = StdRng::seed_from_u64(seed.unwrap_or(0));
                    let (b, p, r) = measure_qubit_sampled(&s, qubit, &mut rng)
                        .map_err(|e| CliError::of(e, None))?;
                    (b, p, r, true)
                }
            };
            Ok(json!({
                "qubit": qubit,
                "outcome": outcome,
                "probability": probability,
                "sampled": sampled,
                "residual": sorted_value(&StateJson::from_state(&residual)),
            }))
        }
    }
}

/// Entanglement verdict of a normalized state matrix at a caller-supplied
/// tolerance.
fn state_determinant_above(matrix: &topoq_core::TwoQubitMatrix64, tol: f64) -> bool {
    let norm = matrix.frobenius_norm();
    let det = matrix.determinant().norm() / (norm * norm);
    det > tol
}

fn run_net(cmd: NetCommand, rank_tol: f64) -> CliResult<Value> {
    match cmd {
        NetCommand::Contract { net_pos, net } => {
            let path = either(net, net_pos, "network")?;
            let parsed: NetworkJson = parse_json(&path)?;
            let network = parsed
                .to_network()
                .map_err(|e| CliError::of(e, Some(&path)))?;
            let full = network
                .contract_full()
                .map_err(|e| CliError::of(e, Some(&path)))?;
            Ok(sorted_value(&TensorJson::from_tensor(&full)))
        }
        NetCommand::Refine { net_pos, net, node } => {
            let path = either(net, net_pos, "network")?;
            let parsed: NetworkJson = parse_json(&path)?;
            let network = parsed
                .to_network()
                .map_err(|e| CliError::of(e, Some(&path)))?;
            let refined = network
                .projector_refine_with_tol(&node, rank_tol)
                .map_err(|e| CliError::of(e, None))?;
            Ok(sorted_value(&NetworkJson::from_network(&refined)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(value) => {
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("serializable")
            );
            ExitCode::SUCCESS
        }
        Err(err) => {
            let payload = json!({
                "code": err.code,
                "message": err.message,
                "path": err.path,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).expect("serializable")
            );
            ExitCode::from(2)
        }
    }
}
