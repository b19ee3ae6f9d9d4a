//! One-shot reproduction of every checkable number: fixture arithmetic, graph realization,
//! transitions, defensible sets, the irresoluteness table and the impossibility check.

use serde::Serialize;

use crate::axioms::{verify_theorem1_with, TheoremOptions};
use crate::enumerate::table1;
use crate::fixtures::{FixtureSet, REALIZES, TRANSITIONS};
use crate::margin::margin_lines;
use crate::methods::{evaluate, MethodId};
use crate::rational::Rational;
use crate::realize::{verify_transition, TransitionInstance, TransitionSolution};

pub const DEFENSIBLE_SETS: [(&str, &[&str]); 5] = [
    ("m1", &["a", "d"]),
    ("m2", &["b", "d"]),
    ("m3", &["b", "d"]),
    ("m4", &["a", "d"]),
    ("m5", &["d"]),
];

/// `(method, multi-winner classes, mean size as numerator/denominator, max size)`.
pub const TABLE1: [(MethodId, u64, (u64, u64), usize); 7] = [
    (MethodId::SmithSet, 960, (19, 8), 4),
    (MethodId::UncoveredSet, 960, (2, 1), 3),
    (MethodId::Copeland, 960, (13, 8), 3),
    (MethodId::DefensibleSet, 598, (87, 64), 3),
    (MethodId::DefensibleCapSmith, 583, (43, 32), 3),
    (MethodId::SplitCycle, 104, (253, 240), 2),
    (MethodId::Minimax, 0, (1, 1), 1),
];

#[derive(Clone, Debug, Serialize)]
pub struct AuditItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl AuditItem {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> AuditItem {
        AuditItem {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

pub fn run_audit(fx: &FixtureSet) -> Vec<AuditItem> {
    let mut items = Vec::new();

    for (name, printed) in &fx.margin_listings {
        let item = match fx.profile(name) {
            Ok(p) => {
                let ours: Vec<String> = margin_lines(p).iter().map(|l| l.to_string()).collect();
                match ours.iter().zip(printed).find(|(a, b)| a != b) {
                    None if ours.len() == printed.len() => AuditItem::new(
                        format!("margins {name}"),
                        true,
                        format!("{} lines", ours.len()),
                    ),
                    None => AuditItem::new(
                        format!("margins {name}"),
                        false,
                        format!("{} lines, expected {}", ours.len(), printed.len()),
                    ),
                    Some((a, b)) => AuditItem::new(
                        format!("margins {name}"),
                        false,
                        format!("got `{a}`, expected `{b}`"),
                    ),
                }
            }
            Err(e) => AuditItem::new(format!("margins {name}"), false, e.to_string()),
        };
        items.push(item);
    }

    for (p, g) in REALIZES {
        let ok = matches!((fx.profile(p), fx.graph(g)), (Ok(prof), Ok(graph)) if prof.ordinal_margin_graph() == *graph);
        items.push(AuditItem::new(
            format!("graph {p} = {g}"),
            ok,
            if ok {
                "equal"
            } else {
                "ordinal margin graph differs"
            },
        ));
    }

    for t in TRANSITIONS {
        let check = (|| -> crate::Result<String> {
            let inst = TransitionInstance::new(
                fx.graph(t.source)?.clone(),
                fx.graph(t.destination)?.clone(),
                t.favorite,
                u64::MAX,
            )?;
            let sol = TransitionSolution {
                base: fx.profile(t.base)?.clone(),
                added: fx.added(t.added)?.clone(),
            };
            Ok(verify_transition(&sol, &inst).to_string())
        })();
        let (ok, detail) = match check {
            Ok(s) => (s == "ok", s),
            Err(e) => (false, e.to_string()),
        };
        items.push(AuditItem::new(format!("transition {}", t.name), ok, detail));
    }

    for (g, expected) in DEFENSIBLE_SETS {
        let item = match fx
            .graph(g)
            .and_then(|graph| evaluate(MethodId::DefensibleSet, graph))
        {
            Ok(w) => AuditItem::new(
                format!("defensible {g}"),
                w.labels() == expected,
                w.to_string(),
            ),
            Err(e) => AuditItem::new(format!("defensible {g}"), false, e.to_string()),
        };
        items.push(item);
    }

    match table1(&MethodId::TABLE1) {
        Ok(rows) => {
            for (method, multiple, (num, den), max) in TABLE1 {
                let name = format!("table1 {}", method.name());
                let item = match rows.iter().find(|r| r.method == method) {
                    Some(r) => {
                        let ok = r.num_multiple == multiple
                            && r.mean_size == Rational::new(num, den)
                            && r.max_size == max;
                        AuditItem::new(
                            name,
                            ok,
                            format!("{} {} {}", r.num_multiple, r.mean_exact(), r.max_size),
                        )
                    }
                    None => AuditItem::new(name, false, "row missing"),
                };
                items.push(item);
            }
        }
        Err(e) => items.push(AuditItem::new("table1", false, e.to_string())),
    }

    let theorem = match verify_theorem1_with(fx, TheoremOptions::default()) {
        Ok(r) => AuditItem::new(
            "theorem",
            r.verified(),
            format!(
                "{} assignments examined, {} surviving",
                r.assignments_examined,
                r.surviving.len()
            ),
        ),
        Err(e) => AuditItem::new("theorem", false, e.to_string()),
    };
    items.push(theorem);
    items
}
