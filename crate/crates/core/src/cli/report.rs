use std::io::{self, Write};

use serde::Serialize;

use crate::embedding::{CutCongestion, WirelengthReport};
use crate::graph::Guest;
use crate::host::{EdgeCut, HostKind, HostTree, LabelScheme};

pub const SWEEP_COLUMNS: [&str; 11] = [
    "n",
    "p",
    "n1",
    "k",
    "host_kind",
    "closed_form",
    "direct",
    "via_partition",
    "exhaustive_min",
    "cut_conditions_ok",
    "agree",
];

const SCHEMA_VERSION: u32 = 1;

/// JSON shape of the `wirelength` command.
#[derive(Debug, Clone, Serialize)]
pub struct WirelengthJson {
    pub schema: u32,
    pub n: u32,
    pub p: u32,
    pub n1: u32,
    pub k: usize,
    pub host_kind: HostKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub swap: Option<[usize; 2]>,
    pub direct: u64,
    pub via_partition: u64,
    pub closed_form: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exhaustive_min: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub local_search_min: Option<u64>,
    pub cut_conditions_ok: bool,
    pub per_cut: Vec<CutCongestion>,
}

impl WirelengthJson {
    pub fn new(
        n: u32,
        p: u32,
        host: &HostTree,
        swap: Option<(usize, usize)>,
        report: WirelengthReport,
        local_search_min: Option<u64>,
    ) -> Self {
        let variant = match host.label_scheme() {
            Some(LabelScheme::Sibling(v)) => Some(v.index()),
            _ => None,
        };
        WirelengthJson {
            schema: SCHEMA_VERSION,
            n,
            p,
            n1: host.n1(),
            k: host.k(),
            host_kind: host.kind(),
            variant,
            swap: swap.map(|(a, b)| [a, b]),
            direct: report.direct,
            via_partition: report.via_partition,
            closed_form: report.closed_form,
            exhaustive_min: report.exhaustive_min,
            local_search_min,
            cut_conditions_ok: report.cut_conditions_ok,
            per_cut: report.per_cut,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepRow {
    pub n: u32,
    pub p: u32,
    pub n1: u32,
    pub k: u64,
    pub host_kind: HostKind,
    pub closed_form: u64,
    pub direct: Option<u64>,
    pub via_partition: Option<u64>,
    pub exhaustive_min: Option<u64>,
    pub cut_conditions_ok: Option<bool>,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyRow {
    pub family: String,
    pub j: u32,
    pub i: usize,
    pub component: [usize; 2],
    pub ec: u64,
    pub lemma_value: u64,
    pub internal_paths_avoid_cut: bool,
    pub crossing_paths_cross_once: bool,
    pub sides_optimal: bool,
}

impl VerifyRow {
    pub fn new(cut: &EdgeCut, c: &CutCongestion) -> Self {
        VerifyRow {
            family: c.family.clone(),
            j: c.j,
            i: c.i,
            component: [cut.component.0, cut.component.1],
            ec: c.ec,
            lemma_value: c.lemma_value,
            internal_paths_avoid_cut: c.conditions.internal_paths_avoid_cut,
            crossing_paths_cross_once: c.conditions.crossing_paths_cross_once,
            sides_optimal: c.conditions.sides_optimal,
        }
    }

    pub fn passes(&self) -> bool {
        self.internal_paths_avoid_cut
            && self.crossing_paths_cross_once
            && self.sides_optimal
            && self.ec == self.lemma_value
    }
}

pub fn write_json<T: Serialize + ?Sized>(value: &T, out: &mut dyn Write) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn write_sweep_csv(rows: &[SweepRow], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{}", SWEEP_COLUMNS.join(","))?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            r.n,
            r.p,
            r.n1,
            r.k,
            r.host_kind,
            r.closed_form,
            opt(r.direct),
            opt(r.via_partition),
            opt(r.exhaustive_min),
            opt(r.cut_conditions_ok),
            r.agree
        )?;
    }
    Ok(())
}

pub fn write_verify_text(rows: &[VerifyRow], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "{:<12} {:>11} {:>8} {:>8}  c1 c2 c3", "cut", "labels", "ec", "lemma")?;
    let mark = |b: bool| if b { "ok" } else { "NO" };
    for r in rows {
        let name = if r.family == "ROOT" {
            format!("ROOT({})", r.i)
        } else {
            format!("{}({},{})", r.family, r.j, r.i)
        };
        writeln!(
            out,
            "{:<12} {:>11} {:>8} {:>8}  {} {} {}",
            name,
            format!("{}..{}", r.component[0], r.component[1]),
            r.ec,
            r.lemma_value,
            mark(r.internal_paths_avoid_cut),
            mark(r.crossing_paths_cross_once),
            mark(r.sides_optimal)
        )?;
    }
    let failed = rows.iter().filter(|r| !r.passes()).count();
    writeln!(out, "{} cuts, {} failing", rows.len(), failed)
}

pub fn write_verify_csv(rows: &[VerifyRow], out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "family,j,i,lo,hi,ec,lemma_value,c1,c2,c3")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{}",
            r.family,
            r.j,
            r.i,
            r.component[0],
            r.component[1],
            r.ec,
            r.lemma_value,
            r.internal_paths_avoid_cut,
            r.crossing_paths_cross_once,
            r.sides_optimal
        )?;
    }
    Ok(())
}

pub fn write_wirelength_text(wl: &WirelengthJson, out: &mut dyn Write) -> io::Result<()> {
    writeln!(out, "guest        K_(2^{}) x 2^{}  (n = {}, p = {})", wl.n - wl.p, wl.p, wl.n, wl.p)?;
    writeln!(out, "host         {} n1 = {} k = {}", wl.host_kind, wl.n1, wl.k)?;
    writeln!(out, "direct       {}", wl.direct)?;
    writeln!(out, "via cuts     {}", wl.via_partition)?;
    writeln!(out, "closed form  {}", opt(wl.closed_form))?;
    if let Some(v) = wl.exhaustive_min {
        writeln!(out, "exhaustive   {v}")?;
    }
    if let Some(v) = wl.local_search_min {
        writeln!(out, "local search {v}")?;
    }
    writeln!(out, "conditions   {}", if wl.cut_conditions_ok { "ok" } else { "FAILED" })
}

#[derive(Serialize)]
struct GuestJson {
    schema: u32,
    n: u32,
    p: u32,
    vertex_count: usize,
    edge_count: usize,
    degree: usize,
    partites: Vec<Vec<usize>>,
}

pub fn write_guest_json(guest: &Guest, out: &mut dyn Write) -> io::Result<()> {
    write_json(
        &GuestJson {
            schema: SCHEMA_VERSION,
            n: guest.n(),
            p: guest.p(),
            vertex_count: guest.vertex_count(),
            edge_count: guest.graph().edge_count(),
            degree: guest.degree(),
            partites: guest.partites(),
        },
        out,
    )
}

pub fn write_guest_text(guest: &Guest, out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "complete {}-partite graph, {} vertices, {} edges, degree {}",
        guest.partite_count(),
        guest.vertex_count(),
        guest.graph().edge_count(),
        guest.degree()
    )?;
    for (i, part) in guest.partites().iter().enumerate() {
        let members: Vec<String> = part.iter().map(|v| v.to_string()).collect();
        writeln!(out, "partite {:>3}: {}", i + 1, members.join(" "))?;
    }
    Ok(())
}

#[derive(Serialize)]
struct HostVertexJson {
    label: usize,
    level: u32,
    parent: Option<usize>,
}

#[derive(Serialize)]
struct HostJson {
    schema: u32,
    host_kind: HostKind,
    n1: u32,
    k: usize,
    vertex_count: usize,
    edge_count: usize,
    vertices: Vec<HostVertexJson>,
    sibling_edges: Vec<[usize; 2]>,
    root_chain: Vec<usize>,
}

fn label(host: &HostTree, v: usize) -> usize {
    host.label_of(v).expect("labeled host")
}

pub fn write_host_json(host: &HostTree, out: &mut dyn Write) -> io::Result<()> {
    let mut vertices: Vec<HostVertexJson> = host
        .graph()
        .vertices()
        .map(|v| HostVertexJson {
            label: label(host, v),
            level: host.level_of(v),
            parent: host.parent_of(v).map(|u| label(host, u)),
        })
        .collect();
    vertices.sort_by_key(|v| v.label);
    write_json(
        &HostJson {
            schema: SCHEMA_VERSION,
            host_kind: host.kind(),
            n1: host.n1(),
            k: host.k(),
            vertex_count: host.vertex_count(),
            edge_count: host.graph().edge_count(),
            vertices,
            sibling_edges: host
                .sibling_edges()
                .into_iter()
                .map(|(a, b)| [label(host, a), label(host, b)])
                .collect(),
            root_chain: host.root_chain().into_iter().map(|v| label(host, v)).collect(),
        },
        out,
    )
}

pub fn write_host_text(host: &HostTree, out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "{} host, n1 = {}, k = {}: {} vertices, {} edges",
        host.kind(),
        host.n1(),
        host.k(),
        host.vertex_count(),
        host.graph().edge_count()
    )?;
    for level in 0..=host.n1() {
        let mut labels: Vec<usize> = host
            .graph()
            .vertices()
            .filter(|&v| host.level_of(v) == level)
            .map(|v| label(host, v))
            .collect();
        labels.sort_unstable();
        let text: Vec<String> = labels.iter().map(|l| l.to_string()).collect();
        writeln!(out, "level {level}: {}", text.join(" "))?;
    }
    Ok(())
}
