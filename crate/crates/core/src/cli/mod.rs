//! Expression grammar, verification suites, reports and table output behind
//! the `qmink` binary.

pub mod eval;
pub mod expr;
pub mod report;
pub mod suites;

use serde::Serialize;

pub use eval::{normal_form_command, AlgebraName, Evaluator};
pub use expr::{parse, Atom, Expr};
pub use report::{CheckRecord, Format, VerificationReport};
pub use suites::{run_suite, run_suite_with, Context, RunOptions, SUITES};

use crate::classical::bracket_closure_table;
use crate::error::Result;
use crate::minkowski::{MinorSet, QCommutationTable};

#[derive(Serialize)]
struct ClosureTerm {
    word: [String; 2],
    coefficient: String,
}

#[derive(Serialize)]
struct ClosureRow {
    lhs: [String; 2],
    terms: Vec<ClosureTerm>,
    pure: bool,
}

fn closure_rows(table: &QCommutationTable, set: &MinorSet) -> Vec<ClosureRow> {
    table
        .entries
        .iter()
        .map(|e| ClosureRow {
            lhs: [set.label(e.b), set.label(e.a)],
            terms: e
                .coefficients
                .iter()
                .map(|((c, d), k)| ClosureTerm {
                    word: [set.label(*c), set.label(*d)],
                    coefficient: k.to_string(),
                })
                .collect(),
            pure: e.is_pure(),
        })
        .collect()
}

/// The derived minor reordering table, one identity per line or as JSON.
pub fn closure_table_output(format: Format) -> Result<String> {
    let qm = crate::minkowski::QuantumMinkowski::build()?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&closure_rows(&qm.table, &qm.minors))
            .expect("table serializes"),
        Format::Text => qm
            .table
            .entries
            .iter()
            .map(|e| e.display(&qm.minors) + "\n")
            .collect(),
    })
}

/// Structure constants of the conformal algebra, one bracket per line.
pub fn conformal_table_output() -> Result<String> {
    let table = bracket_closure_table()?;
    Ok(table
        .entries
        .iter()
        .map(|e| table.display_entry(e) + "\n")
        .collect())
}
