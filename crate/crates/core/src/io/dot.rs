//! Graphviz (DOT) export of mined and translated frameworks.
//!
//! Edge styles: attacks solid, supports bold, supported attacks dashed,
//! secondary attacks dotted, irrelevance attacks solid and grey. Every edge
//! carries a `class` attribute naming its provenance(s).

use std::fmt::{Display, Write};

use crate::classifier::Prediction;
use crate::mining::{Argument, AttackKind, BipolarFramework};
use crate::translation::{AttackFramework, Provenance};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Bipolar,
    Translated,
}

impl std::str::FromStr for Stage {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bipolar" => Ok(Stage::Bipolar),
            "translated" => Ok(Stage::Translated),
            other => Err(format!(
                "unknown stage `{other}` (expected bipolar or translated)"
            )),
        }
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => {}
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn header(out: &mut String) {
    out.push_str("digraph framework {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box];\n");
}

fn nodes<C: Display>(out: &mut String, arguments: &[Argument<C>]) {
    let mut sorted: Vec<&Argument<C>> = arguments.iter().collect();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    for arg in sorted {
        let outcome = arg.outcome.as_ref().map_or("?", |o| o.as_str());
        let label = format!("{}: {} / {}", arg.id, arg.characterisation, outcome);
        writeln!(out, "  {} [label={}];", quote(&arg.id), quote(&label)).unwrap();
    }
}

fn edge(out: &mut String, from: &str, to: &str, attrs: &str) {
    writeln!(out, "  {} -> {} [{}];", quote(from), quote(to), attrs).unwrap();
}

fn sorted_named<T>(
    arguments: &[Argument<impl Sized>],
    edges: impl Iterator<Item = (crate::mining::Edge, T)>,
) -> Vec<(&str, &str, T)> {
    let mut named: Vec<_> = edges
        .map(|((a, b), t)| (arguments[a.0].id.as_str(), arguments[b.0].id.as_str(), t))
        .collect();
    named.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
    named
}

/// DOT text for the mined attacks and supports.
pub fn export_bipolar<C: Display>(baf: &BipolarFramework<C>) -> String {
    let mut out = String::new();
    header(&mut out);
    nodes(&mut out, baf.arguments());
    for (from, to, kind) in
        sorted_named(baf.arguments(), baf.attacks().iter().map(|(e, k)| (*e, *k)))
    {
        let attrs = match kind {
            AttackKind::Direct => "class=\"direct\", style=solid",
            AttackKind::Equal => "class=\"equal\", style=solid",
            AttackKind::Irrelevance => "class=\"irrelevance\", style=solid, color=gray",
        };
        edge(&mut out, from, to, attrs);
    }
    for (from, to, ()) in sorted_named(baf.arguments(), baf.supports().iter().map(|e| (*e, ()))) {
        edge(&mut out, from, to, "class=\"support\", style=bold");
    }
    out.push_str("}\n");
    out
}

/// DOT text for the attack-only framework, one edge per attacking pair.
pub fn export_translated<C: Display>(af: &AttackFramework<C>) -> String {
    let mut out = String::new();
    header(&mut out);
    nodes(&mut out, af.arguments());
    for (from, to, provenance) in
        sorted_named(af.arguments(), af.edges().iter().map(|(e, p)| (*e, p)))
    {
        let class = provenance
            .iter()
            .map(|p| p.as_str())
            .collect::<Vec<_>>()
            .join(" ");
        // The strongest provenance decides the style: a mined attack beats a
        // supported one, which beats a secondary one.
        let primary = provenance
            .iter()
            .next()
            .copied()
            .expect("edges have a provenance");
        let style = match primary {
            Provenance::Direct | Provenance::Equal => "style=solid",
            Provenance::Irrelevance => "style=solid, color=gray",
            Provenance::Supported => "style=dashed",
            Provenance::Secondary => "style=dotted",
        };
        edge(&mut out, from, to, &format!("class=\"{class}\", {style}"));
    }
    out.push_str("}\n");
    out
}

pub fn export_graph<C: Display>(prediction: &Prediction<C>, stage: Stage) -> String {
    match stage {
        Stage::Bipolar => export_bipolar(&prediction.bipolar),
        Stage::Translated => export_translated(&prediction.framework),
    }
}
