//! Text and CSV renderings. JSON goes straight through serde.

use std::fmt::Write;

use hookpaths::gram::BasisExpansion;
use hookpaths::sweep::{Property, SweepReport};
use hookpaths::{Check, PathCountArray, VerificationReport};

pub fn array_csv(d: &PathCountArray) -> String {
    let mut out = String::new();
    for row in d.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn basis_csv(basis: &[BasisExpansion]) -> String {
    let mut out = String::from("j,i,coefficient\n");
    for y in basis {
        for i in y.j..=y.n {
            writeln!(out, "{},{},{}", y.j, i, y.coefficient(i)).unwrap();
        }
    }
    out
}

pub fn describe(check: &Check) -> String {
    match check {
        Check::Determinant {
            rows, cols, det, ..
        } => {
            format!("det rows {rows:?} cols {cols:?} = {det}")
        }
        Check::Identity(inst) => {
            let params: Vec<String> = inst
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            format!(
                "{} ({}): {} vs {}",
                inst.name,
                params.join(", "),
                inst.lhs,
                inst.rhs
            )
        }
    }
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn check_text(dets: &VerificationReport, ids: &VerificationReport) -> String {
    let mut out = String::new();
    writeln!(out, "partition: ({})", dets.partition).unwrap();
    writeln!(
        out,
        "unit-corner determinants: {} blocks, {}",
        dets.checks.len(),
        verdict(dets.pass)
    )
    .unwrap();
    for check in &dets.checks {
        writeln!(out, "  {} {}", verdict(check.passed()), describe(check)).unwrap();
    }
    writeln!(
        out,
        "identities: {} checks, {}",
        ids.checks.len(),
        verdict(ids.pass)
    )
    .unwrap();
    for skipped in &ids.skipped {
        writeln!(out, "  skipped {skipped}").unwrap();
    }
    for failed in ids.failures() {
        writeln!(out, "  FAIL {}", describe(failed)).unwrap();
    }
    writeln!(out, "{}", verdict(dets.pass && ids.pass)).unwrap();
    out
}

fn csv_line(out: &mut String, check: &Check) {
    match check {
        Check::Determinant {
            rows,
            cols,
            det,
            pass,
        } => {
            let join = |v: &[usize]| {
                v.iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            writeln!(
                out,
                "determinant,rows={};cols={},{det},1,{pass}",
                join(rows),
                join(cols)
            )
            .unwrap();
        }
        Check::Identity(inst) => {
            let params: Vec<String> = inst
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            writeln!(
                out,
                "{},{},{},{},{}",
                inst.name,
                params.join(";"),
                inst.lhs,
                inst.rhs,
                inst.pass
            )
            .unwrap();
        }
    }
}

pub fn check_csv(dets: &VerificationReport, ids: &VerificationReport) -> String {
    let mut out = String::from("check,params,lhs,rhs,pass\n");
    for check in dets.checks.iter().chain(&ids.checks) {
        csv_line(&mut out, check);
    }
    out
}

pub fn sweep_text(report: &SweepReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "partitions with at most {} cells: {}",
        report.config.max_cells, report.partitions
    )
    .unwrap();
    for r in &report.results {
        writeln!(
            out,
            "{:<13} {:>8} checks  {:>4} failures  {:>4} inconclusive  {}",
            r.property.map_or("?", Property::name),
            r.checks,
            r.failures.len(),
            r.inconclusive.len(),
            verdict(r.pass())
        )
        .unwrap();
    }
    if !report.exploratory.is_empty() {
        let non_unit = report.exploratory.iter().filter(|f| !f.det_is_one).count();
        writeln!(
            out,
            "exploratory: {} non-contiguous unit-corner selections, {} with determinant != 1 (not certified)",
            report.exploratory.len(),
            non_unit
        )
        .unwrap();
    }
    writeln!(out, "{}", verdict(report.pass)).unwrap();
    out
}

pub fn sweep_csv(report: &SweepReport) -> String {
    let mut out = String::from("property,checks,failures,inconclusive,pass\n");
    for r in &report.results {
        writeln!(
            out,
            "{},{},{},{},{}",
            r.property.map_or("?", Property::name),
            r.checks,
            r.failures.len(),
            r.inconclusive.len(),
            r.pass()
        )
        .unwrap();
    }
    out
}
