//! File formats: exact JSON for modular data and fusion rings, a
//! human-readable summary, character tables in a classes-then-rows text
//! layout, and fusion graphs as edge lists and dot files.
//!
//! `S` is written as a list of lists; `T` and fusion matrices as sparse
//! index/value arrays. Exact values use the cyclotomic record
//! `{"conductor": N, "coeffs": [[k, "p/q"], ...]}`; float mirrors are
//! optional and never read back. Writers are deterministic: rerunning a
//! computation produces byte-identical exact output.

use serde::{Deserialize, Serialize};

use crate::cyclo::Cyclotomic;
use crate::double::{ModularData, ModularReport};
use crate::fusion::{FusionGraph, FusionRing};

pub const MODULAR_DATA_FORMAT: &str = "qdouble/modular-data/v1";
pub const FUSION_FORMAT: &str = "qdouble/fusion/v1";

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassInfo {
    pub representative: usize,
    pub representative_label: String,
    pub size: usize,
    pub element_order: usize,
    pub centralizer_order: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupInfo {
    pub spec: String,
    pub order: usize,
    pub exponent: u64,
    pub classes: Vec<ClassInfo>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IrrepInfo {
    pub label: String,
    pub class_index: usize,
    pub centralizer_irrep: usize,
    pub qdim: u64,
    pub t: Cyclotomic,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t_float: Option<(f64, f64)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModularDataFile {
    pub format: String,
    pub group: GroupInfo,
    pub rank: usize,
    pub block_sizes: Vec<usize>,
    pub irreps: Vec<IrrepInfo>,
    /// Full S matrix, list of lists of exact cyclotomic records.
    pub s_matrix: Vec<Vec<Cyclotomic>>,
    /// `|H| * S`: the same matrix scaled to algebraic-integer entries, the
    /// form in which S blocks are usually printed. Informational; absent
    /// fields parse as empty and verification never reads it.
    #[serde(default)]
    pub s_matrix_scaled: Vec<Vec<Cyclotomic>>,
    /// Diagonal T as a sparse array of (index, value) pairs.
    pub t_diagonal: Vec<(usize, Cyclotomic)>,
    pub quantum_dimensions: Vec<u64>,
    pub global_dimension: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s_matrix_float: Option<Vec<Vec<(f64, f64)>>>,
    pub verification: ModularReport,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FusionMatrixSparse {
    pub irrep: usize,
    /// Sparse `(j, k, N_ij^k)` triples, row-major, zeros omitted.
    pub entries: Vec<(usize, usize, u64)>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FusionFile {
    pub format: String,
    pub rank: usize,
    pub matrices: Vec<FusionMatrixSparse>,
}

/// Assembles the exact modular-data file. `float_digits` adds float mirror
/// fields for human inspection.
pub fn modular_data_file(
    md: &ModularData,
    spec: &str,
    report: &ModularReport,
    quantum_dimensions: &[u64],
    global_dimension: u64,
    float_digits: Option<u32>,
) -> ModularDataFile {
    let classes = md
        .classes
        .iter()
        .map(|c| ClassInfo {
            representative: c.representative,
            representative_label: md.group.label_of(c.representative),
            size: c.size(),
            element_order: c.element_order,
            centralizer_order: c.centralizer.len(),
        })
        .collect();
    let irreps = md
        .irreps
        .iter()
        .map(|ir| IrrepInfo {
            label: ir.label.clone(),
            class_index: ir.class_index,
            centralizer_irrep: ir.centirrep_index,
            qdim: ir.qdim,
            t_float: float_digits.map(|d| ir.t_value.to_complex(d)),
            t: ir.t_value.clone(),
        })
        .collect();
    ModularDataFile {
        format: MODULAR_DATA_FORMAT.to_string(),
        group: GroupInfo {
            spec: spec.to_string(),
            order: md.group.order(),
            exponent: md.group.exponent(),
            classes,
        },
        rank: md.rank(),
        block_sizes: md.block_sizes.clone(),
        irreps,
        s_matrix: md.s.clone(),
        s_matrix_scaled: {
            let order = num_rational::BigRational::from(num_bigint::BigInt::from(
                md.group.order() as u64,
            ));
            md.s.iter()
                .map(|row| row.iter().map(|v| v.scalar_mul(&order)).collect())
                .collect()
        },
        t_diagonal: md.t.iter().cloned().enumerate().collect(),
        quantum_dimensions: quantum_dimensions.to_vec(),
        global_dimension,
        s_matrix_float: float_digits.map(|d| {
            md.s.iter()
                .map(|row| row.iter().map(|v| v.to_complex(d)).collect())
                .collect()
        }),
        verification: report.clone(),
    }
}

/// Extracts the exact `(S, T)` pair back out of a parsed file.
pub fn extract_s_t(
    file: &ModularDataFile,
) -> Result<(Vec<Vec<Cyclotomic>>, Vec<Cyclotomic>), String> {
    let rank = file.rank;
    if file.s_matrix.len() != rank || file.s_matrix.iter().any(|r| r.len() != rank) {
        return Err(format!("S matrix is not {rank}x{rank}"));
    }
    let mut t = vec![None; rank];
    for (idx, value) in &file.t_diagonal {
        if *idx >= rank {
            return Err(format!("T index {idx} out of range"));
        }
        if t[*idx].replace(value.clone()).is_some() {
            return Err(format!("duplicate T index {idx}"));
        }
    }
    let t: Option<Vec<Cyclotomic>> = t.into_iter().collect();
    let t = t.ok_or("missing T diagonal entries")?;
    Ok((file.s_matrix.clone(), t))
}

pub fn fusion_file(ring: &FusionRing) -> FusionFile {
    let matrices = (0..ring.rank)
        .map(|i| {
            let mut entries = Vec::new();
            for j in 0..ring.rank {
                for k in 0..ring.rank {
                    let n = ring.coefficient(i, j, k);
                    if n != 0 {
                        entries.push((j, k, n));
                    }
                }
            }
            FusionMatrixSparse { irrep: i, entries }
        })
        .collect();
    FusionFile {
        format: FUSION_FORMAT.to_string(),
        rank: ring.rank,
        matrices,
    }
}

/// One edge per line: `from to multiplicity`.
pub fn graph_edges_text(graph: &FusionGraph) -> String {
    let mut out = String::new();
    for (j, row) in graph.adjacency.iter().enumerate() {
        for (k, &m) in row.iter().enumerate() {
            if m != 0 {
                out.push_str(&format!("{j} {k} {m}\n"));
            }
        }
    }
    out
}

/// Graphviz digraph with multiplicity labels and one subgraph comment per
/// component.
pub fn graph_dot(graph: &FusionGraph, irrep_labels: &[String]) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph fusion_{} {{\n", graph.base_irrep));
    out.push_str("  node [shape=circle];\n");
    for (ci, comp) in graph.components.iter().enumerate() {
        out.push_str(&format!(
            "  // component {} ({} vertices)\n",
            ci,
            comp.len()
        ));
        for &v in comp {
            out.push_str(&format!("  v{} [label=\"{}\"];\n", v, irrep_labels[v]));
        }
    }
    for (j, row) in graph.adjacency.iter().enumerate() {
        for (k, &m) in row.iter().enumerate() {
            if m == 1 {
                out.push_str(&format!("  v{j} -> v{k};\n"));
            } else if m > 1 {
                out.push_str(&format!("  v{j} -> v{k} [label=\"{m}\"];\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Character table in a classes-then-rows text layout: class sizes and
/// element orders first, then one row per irrep with degree, FS type and the
/// exact values.
pub fn character_table_text(
    title: &str,
    table: &crate::chartable::CharacterTable,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("{title} (order {})\n", table.group.order()));
    let k = table.class_count();
    let mut cells: Vec<Vec<String>> = Vec::new();
    cells.push(
        std::iter::once("class".to_string())
            .chain((0..k).map(|c| format!("{c}")))
            .collect(),
    );
    cells.push(
        std::iter::once("size".to_string())
            .chain(table.classes.iter().map(|c| format!("{}", c.size())))
            .collect(),
    );
    cells.push(
        std::iter::once("order".to_string())
            .chain(table.classes.iter().map(|c| format!("{}", c.element_order)))
            .collect(),
    );
    for (r, irrep) in table.irreps.iter().enumerate() {
        let fs = match irrep.fs_indicator {
            1 => '+',
            -1 => '-',
            _ => '0',
        };
        cells.push(
            std::iter::once(format!("chi_{r} (deg {}, {})", irrep.degree, fs))
                .chain(irrep.values.iter().map(|v| format!("{v}")))
                .collect(),
        );
    }
    let widths: Vec<usize> = (0..=k)
        .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    for row in &cells {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{:>width$}", cell, width = widths[c]))
            .collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

/// The per-group summary: group data, block structure, dimensions,
/// verification outcome.
pub fn summary_text(
    md: &ModularData,
    spec: &str,
    report: &ModularReport,
    quantum_dimensions: &[u64],
    global_dimension: u64,
    oracle_checked: Option<bool>,
    fusion_ok: Option<&str>,
    hopf: Option<&crate::hopf::HopfReport>,
) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "group: {} (order {}, exponent {})\n",
        spec,
        md.group.order(),
        md.group.exponent()
    ));
    out.push_str(&format!("classes: {}\n", md.classes.len()));
    for (i, c) in md.classes.iter().enumerate() {
        out.push_str(&format!(
            "  class {i}: size {}, element order {}, centralizer order {}, representative {}\n",
            c.size(),
            c.element_order,
            c.centralizer.len(),
            md.group.label_of(c.representative)
        ));
    }
    out.push_str(&format!("double rank: {}\n", md.rank()));
    out.push_str(&format!("block sizes: {:?}\n", md.block_sizes));
    out.push_str("quantum dimensions per block:\n");
    for (ci, &start) in md.block_starts.iter().enumerate() {
        let dims: Vec<u64> =
            quantum_dimensions[start..start + md.block_sizes[ci]].to_vec();
        out.push_str(&format!("  block {ci}: {dims:?}\n"));
    }
    out.push_str(&format!(
        "global dimension: {} = {}^2\n",
        global_dimension,
        md.group.order()
    ));
    out.push_str("verification:\n");
    let row = |name: &str, ok: bool| format!("  {name}: {}\n", if ok { "pass" } else { "FAIL" });
    out.push_str(&row("S symmetric", report.symmetric));
    out.push_str(&row("S unitary", report.unitary));
    out.push_str(&row("S^2 is a permutation (charge conjugation)", report.s2_is_permutation));
    out.push_str(&row("C^2 = 1", report.c_squared_is_identity));
    out.push_str(&row("S^4 = 1", report.s4_is_identity));
    out.push_str(&row("(ST)^3 = S^2", report.st_cubed_equals_s2));
    out.push_str(&row("|T| = 1", report.t_entries_unit_modulus));
    if let Some(perm) = &report.charge_conjugation {
        out.push_str(&format!("charge conjugation: {perm:?}\n"));
    }
    if let Some(ok) = oracle_checked {
        out.push_str(&row("transversal sum matches centralizer sum", ok));
    }
    if let Some(msg) = fusion_ok {
        out.push_str(&format!("fusion: {msg}\n"));
    }
    if let Some(h) = hopf {
        match h.skipped_order {
            Some(order) => out.push_str(&format!(
                "hopf checks: skipped (order {order} above the gate)\n"
            )),
            None => {
                out.push_str("hopf checks:\n");
                for &(name, ok) in &h.checks {
                    out.push_str(&row(name, ok));
                }
            }
        }
    }
    out
}
