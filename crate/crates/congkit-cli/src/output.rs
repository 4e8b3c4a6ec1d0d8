//! Rendering: paper-style ideal labels, ASCII Hasse diagrams, DOT export,
//! and the JSON report shapes.

use congkit::algebra::{ideal_lattice, Ideal};
use congkit::correspondence::{f_of_alpha, PhiContext};
use congkit::relations::{congruence_lattice, Partition};
use congkit::report::CheckReport;
use congkit::semigroup::CayleyTable;
use congkit::Result;
use serde::{Deserialize, Serialize};

fn subscript(k: usize) -> String {
    const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
    k.to_string()
        .chars()
        .map(|c| DIGITS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Short names for a congruence list: identity is ι, universal is ω, the
/// rest are α₁, α₂, ... in enumeration order.
pub fn congruence_names(congruences: &[Partition]) -> Vec<String> {
    let last = congruences.len().saturating_sub(1);
    congruences
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.class_count() == c.carrier() {
                "ι".to_string()
            } else if i == last || c.class_count() == 1 {
                "ω".to_string()
            } else {
                format!("α{}", subscript(i))
            }
        })
        .collect()
}

/// Paper-style node labels for an ideal list.
///
/// Priority: `{0}` and `F[S]` for the bounds, `F[α]` for images of the
/// congruence-to-ideal construction, intersections of those, `J_s` for
/// principal closures of single semigroup elements, `J_{s-t}` for closures
/// of differences, and finally a `Span(...)` fallback over the basis rows.
pub fn ideal_labels(ctx: &PhiContext) -> Result<Vec<String>> {
    let algebra = ctx.algebra();
    let ideals = ctx.ideals();
    let names = congruence_names(ctx.congruences());
    let mut labels: Vec<Option<String>> = vec![None; ideals.len()];

    // F[alpha] images (skip the identity congruence: that is the zero ideal).
    let mut f_images: Vec<(usize, Ideal)> = Vec::new();
    for (ci, alpha) in ctx.congruences().iter().enumerate() {
        f_images.push((ci, f_of_alpha(algebra, alpha)?));
    }
    for (i, ideal) in ideals.iter().enumerate() {
        if ideal.space().is_zero() {
            labels[i] = Some("{0}".to_string());
        } else if ideal.space().is_full() {
            labels[i] = Some("F[S]".to_string());
        } else if let Some((ci, _)) = f_images.iter().find(|(_, fi)| fi == ideal) {
            labels[i] = Some(format!("F[{}]", names[*ci]));
        }
    }
    // Intersections of F[alpha]-labeled ideals (catches J_L ∩ J_R).
    for i in 0..ideals.len() {
        if labels[i].is_some() {
            continue;
        }
        'pairs: for a in 0..ideals.len() {
            for b in a + 1..ideals.len() {
                let (Some(la), Some(lb)) = (&labels[a], &labels[b]) else {
                    continue;
                };
                if !la.starts_with("F[α") || !lb.starts_with("F[α") {
                    continue;
                }
                let inter = algebra.ideal_intersect(&ideals[a], &ideals[b])?;
                if inter == ideals[i] {
                    let (first, second) = if la <= lb { (la, lb) } else { (lb, la) };
                    labels[i] = Some(format!("{first}∩{second}"));
                    break 'pairs;
                }
            }
        }
    }
    // Principal closures of single elements, then of differences.
    let s_names = algebra.semigroup().names();
    for i in 0..ideals.len() {
        if labels[i].is_some() {
            continue;
        }
        for (s, s_name) in s_names.iter().enumerate() {
            if algebra.ideal_closure(&[algebra.basis_element(s)])? == ideals[i] {
                labels[i] = Some(format!("J_{s_name}"));
                break;
            }
        }
    }
    for i in 0..ideals.len() {
        if labels[i].is_some() {
            continue;
        }
        'diffs: for s in 0..algebra.dim() {
            for t in s + 1..algebra.dim() {
                let diff = algebra.basis_element(s).sub(&algebra.basis_element(t))?;
                if algebra.ideal_closure(&[diff])? == ideals[i] {
                    labels[i] = Some(format!("J_{{{}-{}}}", s_names[s], s_names[t]));
                    break 'diffs;
                }
            }
        }
    }
    Ok(labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.unwrap_or_else(|| algebra.span_label(ideals[i].space())))
        .collect())
}

/// DOT digraph for a cover relation, with rank hints grouping nodes of
/// equal level (ideal dimension or congruence class count).
pub fn dot_diagram(
    graph_name: &str,
    labels: &[String],
    levels: &[usize],
    edges: &[(usize, usize)],
) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {graph_name} {{\n"));
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box];\n");
    for (i, label) in labels.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{label}\"];\n"));
    }
    let max_level = levels.iter().copied().max().unwrap_or(0);
    for level in 0..=max_level {
        let group: Vec<String> = (0..labels.len())
            .filter(|&i| levels[i] == level)
            .map(|i| format!("n{i}"))
            .collect();
        if group.len() > 1 {
            out.push_str(&format!("  {{ rank=same; {}; }}\n", group.join("; ")));
        }
    }
    for &(a, b) in edges {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}

/// Text Hasse rendering: one line per level, top down, plus the explicit
/// cover list.
pub fn ascii_hasse(labels: &[String], levels: &[usize], edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    let max_level = levels.iter().copied().max().unwrap_or(0);
    for level in (0..=max_level).rev() {
        let row: Vec<&str> = (0..labels.len())
            .filter(|&i| levels[i] == level)
            .map(|i| labels[i].as_str())
            .collect();
        if !row.is_empty() {
            out.push_str(&format!("  [dim {level}] {}\n", row.join("   ")));
        }
    }
    out.push_str("  covers:\n");
    for &(a, b) in edges {
        out.push_str(&format!("    {} < {}\n", labels[a], labels[b]));
    }
    out
}

/// Pretty Cayley table with element names.
pub fn ascii_cayley(s: &CayleyTable) -> String {
    let names = s.names();
    let width = names.iter().map(|n| n.chars().count()).max().unwrap_or(1);
    let pad = |t: &str| {
        let n = t.chars().count();
        format!("{t}{}", " ".repeat(width - n))
    };
    let mut out = String::new();
    out.push_str(&format!("  {} |", pad("·")));
    for name in names {
        out.push_str(&format!(" {}", pad(name)));
    }
    out.push('\n');
    out.push_str(&format!("  {}-+{}\n", "-".repeat(width), "-".repeat((width + 1) * s.n())));
    for i in 0..s.n() {
        out.push_str(&format!("  {} |", pad(&names[i])));
        for j in 0..s.n() {
            out.push_str(&format!(" {}", pad(&names[s.product(i, j)])));
        }
        out.push('\n');
    }
    out
}

fn verdict_word(v: bool) -> &'static str {
    if v {
        "PASS"
    } else {
        "FAIL"
    }
}

/// One-line check summary for text output.
pub fn check_line(report: &CheckReport) -> String {
    let mut line = format!("  {:<20} {}", report.check, verdict_word(report.verdict));
    if let Some(w) = report.witnesses.first() {
        line.push_str(&format!(
            "   witness: ({}, {})",
            w.left.label, w.right.label
        ));
        if let Some([x, y]) = &w.element_pair {
            line.push_str(&format!(" at ({x},{y})"));
        }
    }
    line
}

/// JSON shape of the `semigroup` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SemigroupReport {
    pub semigroup: String,
    pub n: usize,
    pub names: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub congruences: Vec<String>,
    pub congruence_hasse: Vec<(usize, usize)>,
    pub permutability: CheckReport,
}

/// One ideal entry: basis rows plus dimension.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub label: String,
    pub dim: usize,
    pub basis: Vec<Vec<u64>>,
}

/// JSON shape of the `algebra` command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub semigroup: String,
    pub prime: u64,
    pub dim: usize,
    pub ideals: Vec<IdealEntry>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub congruences: Vec<String>,
    pub kernel_classes: Vec<Vec<usize>>,
    pub checks: Vec<CheckReport>,
}

/// Build the full JSON/text payload for the `algebra` command.
pub fn algebra_report(ctx: &PhiContext, checks: Vec<CheckReport>) -> Result<AlgebraReport> {
    let labels = ideal_labels(ctx)?;
    let ideals = ctx
        .ideals()
        .iter()
        .zip(&labels)
        .map(|(ideal, label)| IdealEntry {
            label: label.clone(),
            dim: ideal.dim(),
            basis: ideal.space().basis().to_vec(),
        })
        .collect();
    let names = ctx.algebra().semigroup().names();
    Ok(AlgebraReport {
        semigroup: ctx.algebra().semigroup().name().to_string(),
        prime: ctx.algebra().field().p(),
        dim: ctx.algebra().dim(),
        ideals,
        hasse_edges: ideal_lattice(ctx.ideals())?,
        congruences: ctx
            .congruences()
            .iter()
            .map(|c| c.display_with_names(names))
            .collect(),
        kernel_classes: ctx.kernel_classes(),
        checks,
    })
}

/// Text rendering of the full algebra report.
pub fn algebra_text(ctx: &PhiContext, report: &AlgebraReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "algebra F{}[{}]  (dim {})\n",
        report.prime, report.semigroup, report.dim
    ));
    out.push_str(&format!(
        "ideals: {} with dims {:?}\n",
        report.ideals.len(),
        report.ideals.iter().map(|i| i.dim).collect::<Vec<_>>()
    ));
    let labels: Vec<String> = report.ideals.iter().map(|i| i.label.clone()).collect();
    let levels: Vec<usize> = report.ideals.iter().map(|i| i.dim).collect();
    out.push_str("ideal lattice:\n");
    out.push_str(&ascii_hasse(&labels, &levels, &report.hasse_edges));
    let cnames = congruence_names(ctx.congruences());
    out.push_str("congruences:\n");
    for (name, display) in cnames.iter().zip(&report.congruences) {
        out.push_str(&format!("  {name} = {display}\n"));
    }
    out.push_str("ker φ classes:\n");
    for class in &report.kernel_classes {
        let members: Vec<&str> = class.iter().map(|&i| labels[i].as_str()).collect();
        out.push_str(&format!("  {{{}}}\n", members.join(", ")));
    }
    out.push_str("checks:\n");
    for check in &report.checks {
        out.push_str(&check_line(check));
        out.push('\n');
    }
    out
}

/// Text rendering of the semigroup report.
pub fn semigroup_text(s: &CayleyTable, report: &SemigroupReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("semigroup {} (n={})\n", report.semigroup, report.n));
    out.push_str("cayley table:\n");
    out.push_str(&ascii_cayley(s));
    out.push_str(&format!("congruences ({}):\n", report.congruences.len()));
    for (i, c) in report.congruences.iter().enumerate() {
        out.push_str(&format!("  {i}. {c}\n"));
    }
    out.push_str(&format!("{}\n", check_line(&report.permutability)));
    out
}

/// DOT for the congruence lattice of a semigroup.
pub fn congruence_dot(s: &CayleyTable, congruences: &[Partition]) -> Result<String> {
    let labels: Vec<String> = congruences
        .iter()
        .map(|c| c.display_with_names(s.names()))
        .collect();
    // Level = n - class_count so the identity sits at the bottom.
    let levels: Vec<usize> = congruences
        .iter()
        .map(|c| s.n() - c.class_count())
        .collect();
    let edges = congruence_lattice(congruences)?;
    Ok(dot_diagram("congruence_lattice", &labels, &levels, &edges))
}
