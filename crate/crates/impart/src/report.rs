//! The result record printed by every command, as text or JSON.

use std::fmt::{self, Write as _};

use impart_core::reductions::ReductionOutput;
use impart_core::{Graph, SolverTrace, VertexSet};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct RunReport {
    pub schema: u32,
    /// The arguments after the program name, space separated.
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<usize>,
    /// Deleted vertices `S` certifying a yes answer.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Kept vertices attaining `p(G, k)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub subset: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<IdentityReport>,
    /// An encoded graph (generated or produced by a reduction).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub order: usize,
    pub size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub param: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ell: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
}

impl InstanceReport {
    pub fn of(graph: &Graph) -> Self {
        InstanceReport {
            order: graph.order(),
            size: graph.size(),
            ..InstanceReport::default()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TraceReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub early_exit: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub high_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge_budget: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bag: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isolated: Option<Vec<usize>>,
    pub candidates_examined: u64,
}

impl From<&SolverTrace> for TraceReport {
    fn from(t: &SolverTrace) -> Self {
        TraceReport {
            early_exit: t.early_exit.map(|e| e.tag()),
            high_degree: t.high_degree,
            edge_budget: t.edge_budget,
            bag: t.bag.clone().map(VertexSet::into_vec),
            isolated: t.isolated.clone().map(VertexSet::into_vec),
            candidates_examined: t.candidates_examined,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub name: &'static str,
    pub param: &'static str,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source_m: Option<usize>,
    pub threshold: usize,
    pub source_order: usize,
    pub source_size: usize,
    pub produced_order: usize,
    pub produced_size: usize,
}

impl From<&ReductionOutput> for ReductionReport {
    fn from(out: &ReductionOutput) -> Self {
        let p = &out.provenance;
        ReductionReport {
            name: p.reduction.tag(),
            param: p.param.tag(),
            k: p.k,
            source_m: p.source_m,
            threshold: out.threshold,
            source_order: p.source_order,
            source_size: p.source_size,
            produced_order: out.produced.order(),
            produced_size: out.produced.size(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

impl RunReport {
    pub fn new(command: String) -> Self {
        RunReport {
            schema: SCHEMA_VERSION,
            command,
            ..RunReport::default()
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialises");
        s.push('\n');
        s
    }
}

fn join(vs: &[usize]) -> String {
    let items: Vec<String> = vs.iter().map(usize::to_string).collect();
    format!("[{}]", items.join(" "))
}

fn opt_field(out: &mut String, key: &str, value: Option<impl fmt::Display>) {
    if let Some(v) = value {
        write!(out, " {key}={v}").unwrap();
    }
}

/// One `key: value` line per present field; an attached graph goes last,
/// after a blank line.
impl fmt::Display for RunReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "command: {}", self.command)?;
        if let Some(i) = &self.instance {
            let mut line = format!("order={} size={}", i.order, i.size);
            opt_field(&mut line, "param", i.param.as_ref());
            opt_field(&mut line, "k", i.k);
            opt_field(&mut line, "ell", i.ell);
            opt_field(&mut line, "m", i.m);
            writeln!(f, "instance: {line}")?;
        }
        if let Some(v) = self.verdict {
            writeln!(f, "verdict: {}", if v { "yes" } else { "no" })?;
        }
        if let Some(v) = self.value {
            writeln!(f, "value: {v}")?;
        }
        if let Some(w) = &self.witness {
            writeln!(f, "witness: {}", join(w))?;
        }
        if let Some(s) = &self.subset {
            writeln!(f, "subset: {}", join(s))?;
        }
        if let Some(t) = &self.trace {
            let mut line = format!("candidates_examined={}", t.candidates_examined);
            opt_field(&mut line, "early_exit", t.early_exit);
            opt_field(&mut line, "high_degree", t.high_degree);
            opt_field(&mut line, "edge_budget", t.edge_budget);
            opt_field(&mut line, "bag", t.bag.as_deref().map(join));
            opt_field(&mut line, "isolated", t.isolated.as_deref().map(join));
            writeln!(f, "trace: {line}")?;
        }
        if let Some(r) = &self.reduction {
            let mut line = format!("{} param={} k={}", r.name, r.param, r.k);
            opt_field(&mut line, "m", r.source_m);
            write!(
                line,
                " threshold={} source={}/{} produced={}/{}",
                r.threshold, r.source_order, r.source_size, r.produced_order, r.produced_size
            )
            .unwrap();
            writeln!(f, "reduction: {line}")?;
        }
        if let Some(id) = &self.identity {
            writeln!(
                f,
                "identity: lhs={} rhs={} holds={}",
                id.lhs, id.rhs, id.holds
            )?;
        }
        if let Some(ms) = self.wall_ms {
            writeln!(f, "wall_ms: {ms}")?;
        }
        if let Some(g) = &self.graph {
            write!(f, "\n{g}")?;
        }
        Ok(())
    }
}
