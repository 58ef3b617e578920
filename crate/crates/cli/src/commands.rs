//! One function per subcommand. Each fills in `report.result` and returns the exit status.

use std::fs;

use serde_json::{json, Value};
use tclass_core::blocks::{
    enumerate_group, group_order, reference_order, render_group_dump, render_tableau, BlockMatrix, FamilyRegistry,
    MethodRegistry, DEFAULT_NODE_CAP,
};
use tclass_core::certify::{certify_gate, has_entangling_two_qubit_gate, VerdictReason};
use tclass_core::code::{distance, StabilizerCode};
use tclass_core::corpus::corpus;
use tclass_core::endo::{classify, endo_algebra, CodeFamily, EndoAlgebra, FamilyCase};
use tclass_core::mat2::Mat2;
use tclass_core::Error;

use crate::input::{load_code, load_tableau};
use crate::report::Report;
use crate::{CliError, Status};

fn tableau_rows(t: &BlockMatrix) -> Value {
    json!(render_tableau(t).lines().collect::<Vec<_>>())
}

fn mat2_rows(m: Mat2) -> Value {
    json!(m.compact().split('/').collect::<Vec<_>>())
}

fn code_summary(c: &StabilizerCode) -> Value {
    json!({"n": c.n(), "k": c.k()})
}

fn algebra_json(a: EndoAlgebra) -> Value {
    let tag = tclass_core::endo::algebra_id(a).map(|id| id.name()).unwrap_or("?");
    json!({
        "tag": tag,
        "size": a.len(),
        "elements": a.elements().iter().map(|m| m.compact()).collect::<Vec<_>>(),
    })
}

fn family_json(f: &CodeFamily) -> Value {
    json!({
        "case": f.case.index(),
        "name": f.case.family_name(),
    })
}

fn core_error(e: Error) -> CliError {
    match e {
        Error::CapExceeded { cap, predicted } => CliError::Cap {
            message: format!("search limit {cap} exceeded"),
            predicted: predicted.map(|p| p.to_string()),
        },
        Error::DistanceCap { n, max } => CliError::Cap {
            message: format!("distance search is capped at n = {max}, code has n = {n}"),
            predicted: None,
        },
        other => CliError::Input(other.to_string()),
    }
}

pub fn classify_cmd(r: &mut Report, file: &str) -> Result<Status, CliError> {
    r.input("file", file);
    let c = r.phase("parse", || load_code(file))?;
    let f = r.phase("classify", || classify(&c));
    let mut out = code_summary(&c);
    out["family"] = family_json(&f);
    out["algebra"] = algebra_json(f.algebra);
    out["witness"] = mat2_rows(f.witness);
    out["canonical_code"] = json!(f.canonical_code.render().lines().collect::<Vec<_>>());
    r.result = out;
    Ok(Status::Ok)
}

pub fn endo_cmd(r: &mut Report, file: &str) -> Result<Status, CliError> {
    r.input("file", file);
    let c = r.phase("parse", || load_code(file))?;
    let a = r.phase("endo", || endo_algebra(&c));
    let mut out = code_summary(&c);
    out["algebra"] = algebra_json(a);
    r.result = out;
    Ok(Status::Ok)
}

pub struct GroupArgs<'a> {
    pub file: &'a str,
    pub blocks: usize,
    pub count_only: bool,
    pub out: Option<&'a str>,
    pub cap: u64,
}

pub fn group_cmd(r: &mut Report, a: GroupArgs) -> Result<Status, CliError> {
    r.input("file", a.file);
    r.input("blocks", a.blocks);
    r.input("count_only", a.count_only);
    r.input("cap", a.cap);
    if let Some(path) = a.out {
        r.input("out", path);
    }
    if a.blocks == 0 {
        return Err(CliError::Input("--blocks must be at least 1".into()));
    }
    let c = r.phase("parse", || load_code(a.file))?;
    let case = classify(&c).case;
    let group = r
        .phase("group", || {
            if a.count_only {
                group_order(&c, a.blocks, DEFAULT_NODE_CAP)
            } else {
                enumerate_group(&c, a.blocks, a.cap)
            }
        })
        .map_err(core_error)?;
    let family = FamilyRegistry::standard().by_case(case).expect("every case registered");
    let reference = reference_order(case, a.blocks);
    let matches = reference.map(|n| group.order == n.into());
    let mut out = json!({
        "blocks": a.blocks,
        "family": {"case": case.index(), "name": case.family_name()},
        "group": family.group_name(a.blocks),
        "order": group.order.to_string(),
        "reference_order": reference.map(|n| n.to_string()),
        "reference_match": matches,
    });
    if let Some(elements) = &group.elements {
        match a.out {
            Some(path) => {
                fs::write(path, render_group_dump(elements))
                    .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
            }
            None => out["elements"] = elements.iter().map(tableau_rows).collect(),
        }
    }
    r.result = out;
    Ok(if matches == Some(false) { Status::Negative } else { Status::Ok })
}

pub fn certify_cmd(r: &mut Report, file: &str, tableau: &str) -> Result<Status, CliError> {
    r.input("file", file);
    r.input("tableau", tableau);
    let c = r.phase("parse", || load_code(file))?;
    let t = load_tableau(tableau)?;
    let v = r.phase("certify", || certify_gate(&c, &t));
    let reason = match &v.reason {
        VerdictReason::Accepted { case } => json!({
            "kind": "accepted",
            "case": case.index(),
        }),
        VerdictReason::BlockOutsideAlgebra { row, col, block, algebra } => json!({
            "kind": "block_outside_algebra",
            "row": row,
            "col": col,
            "block": block.compact(),
            "algebra": algebra_json(*algebra)["tag"],
        }),
        VerdictReason::NotSymplectic => json!({"kind": "not_symplectic"}),
    };
    r.result = json!({
        "blocks": t.ell(),
        "transversal": v.transversal,
        "reason": reason,
    });
    Ok(if v.transversal { Status::Ok } else { Status::Negative })
}

pub fn distance_cmd(r: &mut Report, file: &str, max_n: usize) -> Result<Status, CliError> {
    r.input("file", file);
    r.input("max_n", max_n);
    let c = r.phase("parse", || load_code(file))?;
    let d = r.phase("distance", || distance(&c, max_n)).map_err(core_error)?;
    let mut out = code_summary(&c);
    out["distance"] = json!(d);
    r.result = out;
    Ok(Status::Ok)
}

pub fn entangling_cmd(r: &mut Report, file: &str) -> Result<Status, CliError> {
    r.input("file", file);
    let c = r.phase("parse", || load_code(file))?;
    let g = r.phase("entangling", || has_entangling_two_qubit_gate(&c));
    r.result = json!({
        "family": family_json(&g.family),
        "entangling": g.entangling,
        "witness": g.witness.as_ref().map(tableau_rows),
    });
    Ok(if g.entangling { Status::Ok } else { Status::Negative })
}

pub fn orders_cmd(r: &mut Report, case: Option<usize>, blocks: usize, method: &str) -> Result<Status, CliError> {
    if let Some(c) = case {
        r.input("case", c);
    }
    r.input("blocks", blocks);
    r.input("method", method);
    if blocks == 0 {
        return Err(CliError::Input("--blocks must be at least 1".into()));
    }
    let m = MethodRegistry::standard().get(method).map_err(|e| {
        let known: Vec<_> = MethodRegistry::standard().names().collect();
        CliError::Input(format!("{e}; known methods: {}", known.join(", ")))
    })?;
    let cases = match case {
        Some(i) => vec![FamilyCase::from_index(i).map_err(core_error)?],
        None => FamilyCase::ALL.to_vec(),
    };
    let registry = FamilyRegistry::standard();
    let mut rows = Vec::new();
    let mut status = Status::Ok;
    for case in cases {
        let family = registry.by_case(case).expect("every case registered");
        let order = r.phase(&format!("case_{}", case.index()), || m.order(family.as_ref(), blocks));
        let order = match order {
            Ok(o) => Some(o.to_string()),
            Err(Error::OrderUnavailable { .. }) => {
                if status == Status::Ok {
                    status = Status::Negative;
                }
                None
            }
            Err(Error::CapExceeded { .. }) => {
                status = Status::Cap;
                None
            }
            Err(e) => return Err(core_error(e)),
        };
        rows.push(json!({
            "case": case.index(),
            "name": case.family_name(),
            "group": family.group_name(blocks),
            "order": order,
        }));
    }
    r.result = json!({"orders": rows});
    Ok(status)
}

pub fn corpus_cmd(r: &mut Report) -> Result<Status, CliError> {
    let mut rows = Vec::new();
    let mut status = Status::Ok;
    for e in corpus() {
        let c = e.code();
        let got = classify(&c).case;
        if got != e.expected_case {
            status = Status::Negative;
        }
        rows.push(json!({
            "name": e.name,
            "n": c.n(),
            "k": c.k(),
            "expected_case": e.expected_case.index(),
            "classified_case": got.index(),
            "family": e.expected_case.family_name(),
            "note": e.note,
            "stabilizers": e.stab_text.lines().collect::<Vec<_>>(),
        }));
    }
    r.result = json!({"entries": rows});
    Ok(status)
}
