//! Command-line front end: computes modular data, fusion rings and fusion
//! graphs for a group given by a catalog name or a `perm:`/`mat:` literal,
//! writes the exact file set, and re-verifies previously written data.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on input errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};

use qdouble::catalog::{self, ParamSpec};
use qdouble::export::{self, ModularDataFile};
use qdouble::fusion;
use qdouble::group::parse_group_literal;
use qdouble::hopf;
use qdouble::{FiniteGroup, ModularData};

#[derive(Parser)]
#[command(
    name = "qdouble",
    about = "Exact modular data (S, T), fusion rules and fusion graphs of Drinfeld doubles of small finite groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute modular data and fusion data for a group and write the file set.
    Compute {
        /// Catalog name (`binary_tetrahedral`, `cyclic:6`, `sl2:3`, ...) or a
        /// literal `perm:(0,1,2)(0,1)` / `mat:p=3:[[1,1],[0,1]];[[0,1],[2,0]]`.
        group_spec: String,
        /// Output directory; created if absent.
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Number format for exports: `exact` or `float:N` (adds float
        /// mirrors with N digits next to the exact records).
        #[arg(long, default_value = "exact")]
        format: String,
        /// Cross-check the transversal-sum S against the centralizer-sum
        /// oracle, entry by entry.
        #[arg(long)]
        oracle_check: bool,
        /// Run the exhaustive Hopf/quasi-triangularity axiom suite.
        #[arg(long)]
        hopf_check: bool,
        /// Largest group order the Hopf suite will accept (the tensor-cube
        /// check grows like |H|^6).
        #[arg(long, default_value_t = 6)]
        hopf_max_order: usize,
        /// Emit only the fusion graphs of these irrep indices (repeatable);
        /// default emits every irrep's graph.
        #[arg(long)]
        graph: Vec<usize>,
        /// Closure bound for group construction.
        #[arg(long, default_value_t = qdouble::DEFAULT_MAX_ORDER)]
        max_order: usize,
        /// Worker threads for S-matrix entries; the output is byte-identical
        /// for any value.
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Comma-separated subset of {s,t,fusion,graphs,summary,chartables},
        /// or `all`.
        #[arg(long, default_value = "all")]
        emit: String,
    },
    /// Re-read a modular_data.json (or a directory holding one), re-run the
    /// modular relations and Verlinde integrality.
    Verify {
        path: PathBuf,
    },
    /// List the built-in group constructors and their expected data.
    ListGroups,
}

enum AppError {
    /// Bad input: unknown group, malformed spec or file. Exit code 2.
    Input(String),
    /// A verification failed on otherwise well-formed data. Exit code 1.
    Verification(String),
}

impl AppError {
    fn report(&self) -> ExitCode {
        match self {
            AppError::Input(msg) => {
                eprintln!(
                    "{}",
                    serde_json::json!({"error": "input", "message": msg})
                );
                ExitCode::from(2)
            }
            AppError::Verification(msg) => {
                eprintln!(
                    "{}",
                    serde_json::json!({"error": "verification_failed", "message": msg})
                );
                ExitCode::from(1)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute {
            group_spec,
            out,
            format,
            oracle_check,
            hopf_check,
            hopf_max_order,
            graph,
            max_order,
            threads,
            emit,
        } => cmd_compute(
            &group_spec,
            &out,
            &format,
            oracle_check,
            hopf_check,
            hopf_max_order,
            &graph,
            max_order,
            threads,
            &emit,
        ),
        Command::Verify { path } => cmd_verify(&path),
        Command::ListGroups => {
            cmd_list_groups();
            Ok(())
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => err.report(),
    }
}

fn resolve_group(spec: &str, max_order: usize) -> Result<FiniteGroup, AppError> {
    if spec.starts_with("perm:") || spec.starts_with("mat:") {
        return parse_group_literal(spec, max_order)
            .map_err(|e| AppError::Input(format!("{e}")));
    }
    let (name, param) = catalog::parse_entry_spec(spec);
    let param = match param {
        None => None,
        Some(Ok(p)) => Some(p),
        Some(Err(bad)) => {
            return Err(AppError::Input(format!(
                "bad parameter `{bad}` in group spec `{spec}`"
            )))
        }
    };
    catalog::build_bounded(name, param, max_order).map_err(|e| AppError::Input(format!("{e}")))
}

struct EmitSet {
    modular: bool,
    fusion: bool,
    graphs: bool,
    summary: bool,
    chartables: bool,
}

fn parse_emit(emit: &str) -> Result<EmitSet, AppError> {
    let mut set = EmitSet {
        modular: false,
        fusion: false,
        graphs: false,
        summary: false,
        chartables: false,
    };
    for token in emit.split(',').map(str::trim) {
        match token {
            "all" => {
                set.modular = true;
                set.fusion = true;
                set.graphs = true;
                set.summary = true;
                set.chartables = true;
            }
            "s" | "t" => set.modular = true,
            "fusion" => set.fusion = true,
            "graphs" => set.graphs = true,
            "summary" => set.summary = true,
            "chartables" => set.chartables = true,
            other => {
                return Err(AppError::Input(format!(
                    "unknown emit token `{other}` (expected s,t,fusion,graphs,summary,chartables or all)"
                )))
            }
        }
    }
    Ok(set)
}

fn parse_format(format: &str) -> Result<Option<u32>, AppError> {
    if format == "exact" {
        return Ok(None);
    }
    if let Some(digits) = format.strip_prefix("float:") {
        let d: u32 = digits
            .parse()
            .map_err(|_| AppError::Input(format!("bad float precision `{digits}`")))?;
        if d < 6 {
            return Err(AppError::Input(
                "float precision below 6 digits is not supported".into(),
            ));
        }
        return Ok(Some(d));
    }
    Err(AppError::Input(format!(
        "unknown format `{format}` (expected `exact` or `float:N`)"
    )))
}

#[allow(clippy::too_many_arguments)]
fn cmd_compute(
    group_spec: &str,
    out: &Path,
    format: &str,
    oracle_check: bool,
    hopf_check: bool,
    hopf_max_order: usize,
    graph_indices: &[usize],
    max_order: usize,
    threads: usize,
    emit: &str,
) -> Result<(), AppError> {
    let emit = parse_emit(emit)?;
    let float_digits = parse_format(format)?;
    let group = Arc::new(resolve_group(group_spec, max_order)?);

    let md = ModularData::compute_with_threads(group.clone(), threads.max(1))
        .map_err(|e| AppError::Verification(format!("{e}")))?;
    let report = md
        .verify()
        .map_err(|e| AppError::Verification(format!("{e}")))?;
    let dims = md
        .quantum_dimensions()
        .map_err(|e| AppError::Verification(format!("{e}")))?;
    let global = md
        .global_dimension()
        .map_err(|e| AppError::Verification(format!("{e}")))?;

    let oracle_result = if oracle_check {
        Some(md.oracle_check().is_ok())
    } else {
        None
    };

    let ring = fusion::verlinde(&md).map_err(|e| AppError::Verification(format!("{e}")))?;
    let fusion_note = format!(
        "all {}^3 coefficients are nonnegative integers",
        ring.rank
    );

    let hopf_report = if hopf_check {
        Some(hopf::hopf_axiom_report(group.clone(), hopf_max_order))
    } else {
        None
    };

    let summary = export::summary_text(
        &md,
        group_spec,
        &report,
        &dims,
        global,
        oracle_result,
        Some(&fusion_note),
        hopf_report.as_ref(),
    );
    print!("{summary}");

    std::fs::create_dir_all(out)
        .map_err(|e| AppError::Input(format!("cannot create {}: {e}", out.display())))?;
    let write = |name: &str, contents: &str| -> Result<(), AppError> {
        std::fs::write(out.join(name), contents)
            .map_err(|e| AppError::Input(format!("cannot write {name}: {e}")))
    };

    if emit.modular {
        let file = export::modular_data_file(&md, group_spec, &report, &dims, global, float_digits);
        let json = serde_json::to_string_pretty(&file)
            .map_err(|e| AppError::Input(format!("serialization failed: {e}")))?;
        write("modular_data.json", &(json + "\n"))?;
    }
    if emit.fusion {
        let json = serde_json::to_string_pretty(&export::fusion_file(&ring))
            .map_err(|e| AppError::Input(format!("serialization failed: {e}")))?;
        write("fusion.json", &(json + "\n"))?;
    }
    if emit.summary {
        write("summary.txt", &summary)?;
    }
    if emit.chartables {
        let mut text = export::character_table_text(
            &format!("character table of {group_spec}"),
            &md.centralizers[0].table,
        );
        for (ci, cent) in md.centralizers.iter().enumerate().skip(1) {
            text.push('\n');
            text.push_str(&export::character_table_text(
                &format!("character table of the centralizer of class {ci}"),
                &cent.table,
            ));
        }
        write("chartables.txt", &text)?;
    }
    if emit.graphs {
        let graph_dir = out.join("graphs");
        std::fs::create_dir_all(&graph_dir)
            .map_err(|e| AppError::Input(format!("cannot create graphs dir: {e}")))?;
        let indices: Vec<usize> = if graph_indices.is_empty() {
            (0..ring.rank).collect()
        } else {
            for &i in graph_indices {
                if i >= ring.rank {
                    return Err(AppError::Input(format!(
                        "graph index {i} out of range (rank {})",
                        ring.rank
                    )));
                }
            }
            graph_indices.to_vec()
        };
        let labels: Vec<String> = md.irreps.iter().map(|ir| ir.label.clone()).collect();
        for i in indices {
            let graph = fusion::fusion_graph(&ring, i);
            let dot = export::graph_dot(&graph, &labels);
            let edges = export::graph_edges_text(&graph);
            std::fs::write(graph_dir.join(format!("irrep_{i}.dot")), dot)
                .map_err(|e| AppError::Input(format!("cannot write graph: {e}")))?;
            std::fs::write(graph_dir.join(format!("irrep_{i}.edges")), edges)
                .map_err(|e| AppError::Input(format!("cannot write graph: {e}")))?;
        }
    }

    let mut failures: Vec<String> = report.failures().iter().map(|s| s.to_string()).collect();
    if oracle_result == Some(false) {
        failures.push("transversal sum matches centralizer sum".into());
    }
    if let Some(h) = &hopf_report {
        if h.skipped_order.is_none() {
            failures.extend(
                h.checks
                    .iter()
                    .filter(|&&(_, ok)| !ok)
                    .map(|&(name, _)| format!("hopf: {name}")),
            );
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(AppError::Verification(failures.join("; ")))
    }
}

fn cmd_verify(path: &Path) -> Result<(), AppError> {
    let file_path = if path.is_dir() {
        path.join("modular_data.json")
    } else {
        path.to_path_buf()
    };
    let raw = std::fs::read_to_string(&file_path)
        .map_err(|e| AppError::Input(format!("cannot read {}: {e}", file_path.display())))?;
    let parsed: ModularDataFile = serde_json::from_str(&raw)
        .map_err(|e| AppError::Input(format!("cannot parse {}: {e}", file_path.display())))?;
    let (s, t) = export::extract_s_t(&parsed).map_err(AppError::Input)?;

    let report = qdouble::verify_s_t(&s, &t)
        .map_err(|e| AppError::Verification(format!("{e}")))?;
    let mut lines = String::new();
    let mut row = |name: &str, ok: bool| {
        let _ = writeln!(lines, "{name}: {}", if ok { "pass" } else { "FAIL" });
    };
    row("S symmetric", report.symmetric);
    row("S unitary", report.unitary);
    row("S^2 is a permutation (charge conjugation)", report.s2_is_permutation);
    row("C^2 = 1", report.c_squared_is_identity);
    row("S^4 = 1", report.s4_is_identity);
    row("(ST)^3 = S^2", report.st_cubed_equals_s2);
    row("|T| = 1", report.t_entries_unit_modulus);

    let verlinde_ok = match fusion::verlinde_from_s(&s) {
        Ok(_) => {
            let _ = writeln!(lines, "Verlinde integrality: pass");
            true
        }
        Err(e) => {
            let _ = writeln!(lines, "Verlinde integrality: FAIL ({e})");
            false
        }
    };
    print!("{lines}");

    if report.all_pass() && verlinde_ok {
        Ok(())
    } else {
        let mut failures: Vec<String> = report.failures().iter().map(|s| s.to_string()).collect();
        if !verlinde_ok {
            failures.push("Verlinde integrality".into());
        }
        Err(AppError::Verification(failures.join("; ")))
    }
}

fn cmd_list_groups() {
    println!("built-in groups (name, parameter, description, known data):");
    for entry in catalog::catalog_entries() {
        let param = match entry.param {
            ParamSpec::None => String::from("-"),
            ParamSpec::Range { min, max } => format!("n in {min}..={max}"),
        };
        // fixed-order entries carry concrete expectations worth printing
        let extra = match entry.param {
            ParamSpec::None => catalog::expectations(entry.name, None)
                .map(|e| {
                    let rank = e
                        .double_rank
                        .map(|r| format!(", double rank {r}"))
                        .unwrap_or_default();
                    format!(" [order {}{rank}]", e.order)
                })
                .unwrap_or_default(),
            ParamSpec::Range { .. } => String::new(),
        };
        println!("  {:<20} {:<14} {}{}", entry.name, param, entry.description, extra);
    }
    println!("literals: perm:(0,1,2)(0,1)  or  mat:p=3:[[1,1],[0,1]];[[0,1],[2,0]]");
}
