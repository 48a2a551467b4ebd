use std::io::BufRead;
use std::path::PathBuf;

use nkt_core::extremal::{Constructor, ExtremalRecord};
use nkt_core::search::{self, NikiforovComparison, SaturationReport};
use nkt_core::verify::{certify_nkt, Certificate};
use nkt_core::{
    candidate_decompositions, graph6, min_nkt, min_nktr, CliqueUnion, Infeasible, NktError,
    NktParams, SearchConfig, SearchReport, MAX_VERTICES,
};
use serde_json::{json, Map, Value};

use crate::{Cap, Cli, Command, Failure, Nkt, Range, Report, SearchKind};

pub const MEMO_FILE: &str = "construct-memo-v1.txt";
const TABLE_MAX_N: usize = 64;
const TABLE_MAX_CELLS: usize = 20_000;

type Outcome = Result<Report, Failure>;

pub(crate) fn execute(cli: &Cli, stdin: &mut dyn BufRead, stderr: &mut String) -> Outcome {
    match &cli.command {
        Command::MinEdges { p, r } => min_edges(p, *r),
        Command::Construct { p, r } => construct(p, *r, stderr),
        Command::Verify { graph6, k, t, r } => verify(graph6.as_deref(), *k, *t, *r, stdin),
        Command::Search { kind } => search_command(kind, cli.jobs),
        Command::Table { n, k, t } => table(*n, *k, *t),
    }
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(map) => map,
        _ => unreachable!("parameter blocks are objects"),
    }
}

fn params_of(p: &NktParams) -> Map<String, Value> {
    object(serde_json::to_value(p).expect("parameters serialize"))
}

fn nkt_params(p: &Nkt, r: Option<usize>) -> Result<NktParams, Failure> {
    let params = NktParams::new(p.n, p.k, p.t)?;
    Ok(match r {
        Some(r) => params.with_r(r)?,
        None => params,
    })
}

fn graph6_of(u: &CliqueUnion) -> Value {
    if u.n() > MAX_VERTICES {
        return Value::Null;
    }
    u.realize()
        .map(|g| graph6::encode(&g).into())
        .unwrap_or(Value::Null)
}

fn union_value(u: &CliqueUnion) -> Value {
    json!({
        "partition": u.to_string(),
        "alpha": u.alpha(),
        "edges": u.edge_count(),
        "graph6": graph6_of(u),
    })
}

fn infeasible(command: &str, params: Map<String, Value>, e: Infeasible) -> Failure {
    let mut report = Report::new(command, params);
    let detail = object(serde_json::to_value(e).expect("reasons serialize"));
    report.field("status", "infeasible");
    report.field("reason", detail["reason"].clone());
    report.field("message", e.to_string());
    Failure {
        error: e.into(),
        report: Some(Box::new(report)),
        hint: None,
    }
}

fn regime_value(p: &NktParams) -> Value {
    serde_json::to_value(p.regime()).expect("regimes serialize")
}

fn min_edges(p: &Nkt, r: Option<usize>) -> Outcome {
    let params = nkt_params(p, r)?;
    let record: Result<ExtremalRecord, Infeasible> = match r {
        Some(r) => min_nktr(p.n, p.k, p.t, r),
        None => min_nkt(p.n, p.k, p.t),
    };
    let rec = record.map_err(|e| infeasible("min-edges", params_of(&params), e))?;
    let mut report = Report::new("min-edges", params_of(&params));
    report
        .field("regime", regime_value(&params))
        .field("min_edges", rec.min_edges)
        .field("exhaustive", rec.exhaustive)
        .list(
            "minimizers",
            "minimizer",
            rec.minimizers.iter().map(union_value).collect(),
        );
    if r.is_none() && p.t >= 2 && p.k >= p.t && p.n >= p.k {
        let candidates = candidate_decompositions(p.n, p.k, p.t)?
            .into_iter()
            .map(|c| json!({"a": c.a, "b": c.b, "partition": c.partition.to_string(), "edges": c.edges}))
            .collect();
        report.list("candidates", "candidate", candidates);
    }
    Ok(report)
}

fn memo_path() -> Option<PathBuf> {
    std::env::var_os("NKT_CACHE_DIR")
        .filter(|d| !d.is_empty())
        .map(|d| PathBuf::from(d).join(MEMO_FILE))
}

fn construct(p: &Nkt, r: usize, stderr: &mut String) -> Outcome {
    let params = nkt_params(p, Some(r))?;
    let path = memo_path();
    let ctor = match &path {
        Some(path) => Constructor::load(path).unwrap_or_else(|e| {
            stderr.push_str(&format!(
                "warning: ignoring construction memo {}: {e}\n",
                path.display()
            ));
            Constructor::new()
        }),
        None => Constructor::new(),
    };
    let c = ctor
        .construct(p.n, p.k, p.t, r)
        .map_err(|e| infeasible("construct", params_of(&params), e))?;
    if let Some(path) = &path {
        let saved = path
            .parent()
            .map_or(Ok(()), std::fs::create_dir_all)
            .and_then(|()| ctor.save(path));
        if let Err(e) = saved {
            stderr.push_str(&format!(
                "warning: cannot write construction memo {}: {e}\n",
                path.display()
            ));
        }
    }
    let steps = c
        .trace
        .iter()
        .map(|s| {
            let mut step = params_of(&s.params);
            step.insert("h".into(), s.h.to_string().into());
            step.insert("h_edges".into(), s.h.edge_count().into());
            Value::Object(step)
        })
        .collect();
    let mut report = Report::new("construct", params_of(&params));
    report
        .field("partition", c.result.to_string())
        .field("edges", c.edges)
        .field("alpha", c.result.alpha())
        .field("graph6", graph6_of(&c.result))
        .list("trace", "step", steps);
    Ok(report)
}

fn verify(
    single: Option<&str>,
    k: usize,
    t: usize,
    r: Option<usize>,
    stdin: &mut dyn BufRead,
) -> Outcome {
    if k == 0 || t == 0 {
        return Err(
            NktError::InvalidInput(format!("k and t must be positive (got k={k}, t={t})")).into(),
        );
    }
    if r == Some(0) {
        return Err(NktError::InvalidInput("r must be positive".into()).into());
    }
    let inputs: Vec<(usize, String)> = match single {
        Some(g) => vec![(1, g.to_string())],
        None => {
            let mut lines = Vec::new();
            for (i, line) in stdin.lines().enumerate() {
                let line = line.map_err(|e| {
                    NktError::InvalidInput(format!("cannot read standard input: {e}"))
                })?;
                if !line.trim().is_empty() {
                    lines.push((i + 1, line.trim().to_string()));
                }
            }
            lines
        }
    };
    if inputs.is_empty() {
        return Err(NktError::InvalidInput("no graph6 input given".into()).into());
    }
    let mut items = Vec::new();
    let mut all = true;
    for (line, text) in &inputs {
        let g = graph6::decode_str(text).map_err(|e| match e {
            NktError::Parse(msg) => NktError::Parse(format!("input line {line}: {msg}")),
            other => other,
        })?;
        let mut item = Map::new();
        item.insert("graph6".into(), graph6::encode(&g).into());
        item.insert("n".into(), g.n().into());
        let member = match certify_nkt(&g, k, t) {
            Certificate::Member { kt_free_size } => {
                item.insert("is_nkt".into(), true.into());
                item.insert("kt_free_size".into(), kt_free_size.into());
                true
            }
            Certificate::Violation { witness } => {
                item.insert("is_nkt".into(), false.into());
                item.insert("witness".into(), json!(witness));
                false
            }
        };
        let mut ok = member;
        if let Some(r) = r {
            let alpha = g.independence_number();
            item.insert("alpha".into(), alpha.into());
            item.insert("is_nktr".into(), (member && alpha == r).into());
            ok &= alpha == r;
        }
        all &= ok;
        items.push(Value::Object(item));
    }
    let mut params = Map::new();
    params.insert("k".into(), k.into());
    params.insert("t".into(), t.into());
    if let Some(r) = r {
        params.insert("r".into(), r.into());
    }
    let mut report = Report::new("verify", params);
    report
        .list("graphs", "graph", items)
        .field("all_members", all);
    Ok(report)
}

fn config(jobs: usize, cap: &Cap, n: usize) -> SearchConfig {
    SearchConfig {
        jobs,
        allow_n8: cap.allow_n8,
        progress: n >= 8,
    }
}

fn cap_hint(e: NktError) -> Failure {
    let hint = matches!(
        e,
        NktError::UnsupportedSize {
            got: 8,
            limit: 7,
            ..
        }
    )
    .then(|| "pass --allow-n8 to search 8 vertices".to_string());
    Failure {
        error: e,
        report: None,
        hint,
    }
}

fn search_command(kind: &SearchKind, jobs: usize) -> Outcome {
    match kind {
        SearchKind::Conjecture { p, cap } => {
            let params = nkt_params(p, None)?;
            let rep = search::verify_strong_conjecture(p.n, p.k, p.t, &config(jobs, cap, p.n))
                .map_err(cap_hint)?;
            Ok(objective_report("search conjecture", &params, &rep))
        }
        SearchKind::Mainthm { p, r, cap } => {
            let params = nkt_params(p, Some(*r))?;
            let rep = search::verify_mainthm(p.n, p.k, p.t, *r, &config(jobs, cap, p.n))
                .map_err(cap_hint)?;
            Ok(objective_report("search mainthm", &params, &rep))
        }
        SearchKind::CliqueMin { p, s, cap } => {
            let params = nkt_params(p, None)?;
            let rep = search::min_clique_count(p.n, p.k, p.t, *s, &config(jobs, cap, p.n))
                .map_err(cap_hint)?;
            let mut report = objective_report("search clique-min", &params, &rep);
            report.params_insert("s", (*s).into());
            Ok(report)
        }
        SearchKind::Saturation { p, cap } => {
            let params = nkt_params(p, None)?;
            let rep = search::inclusion_minimal(p.n, p.k, p.t, &config(jobs, cap, p.n))
                .map_err(cap_hint)?;
            Ok(saturation_report(&params, &rep))
        }
        SearchKind::Nikiforov { n } => {
            let cmp = search::nikiforov_compare(*n)?;
            Ok(nikiforov_report(&cmp))
        }
    }
}

fn partition_value(u: &Option<CliqueUnion>) -> Value {
    u.as_ref().map_or(Value::Null, |u| u.to_string().into())
}

fn objective_report(command: &str, params: &NktParams, rep: &SearchReport) -> Report {
    let objective = match rep.objective {
        search::Objective::Edges => "edges".to_string(),
        search::Objective::Cliques { s } => format!("cliques_{s}"),
    };
    let witnesses = rep
        .witnesses
        .iter()
        .zip(&rep.witness_partitions)
        .map(|(g, u)| json!({"graph6": g, "partition": partition_value(u)}))
        .collect();
    let mut report = Report::new(command, params_of(params));
    report
        .field("objective", objective)
        .field("scanned", rep.scanned)
        .field("qualifying", rep.qualifying)
        .field("min_value", rep.min_value)
        .list("witnesses", "witness", witnesses)
        .field("conjecture_holds", rep.conjecture_holds)
        .field("reference", rep.reference)
        .field("reference_agrees", rep.reference_agrees);
    report
}

fn saturation_report(params: &NktParams, rep: &SaturationReport) -> Report {
    let minimal = rep
        .minimal_graphs
        .iter()
        .map(|m| json!({"graph6": m.graph6, "edges": m.edges, "partition": partition_value(&m.partition)}))
        .collect();
    let mut report = Report::new("search saturation", params_of(params));
    report
        .field("scanned", rep.scanned)
        .field("qualifying", rep.qualifying)
        .list("minimal_graphs", "minimal", minimal)
        .field("max_edges", rep.max_edges)
        .list(
            "max_witnesses",
            "max_witness",
            rep.max_witnesses
                .iter()
                .map(|g| Value::from(g.as_str()))
                .collect(),
        );
    report
}

fn nikiforov_report(c: &NikiforovComparison) -> Report {
    let mut report = Report::new("search nikiforov", object(json!({"n": c.n})));
    report
        .field("blob", c.blob)
        .field("blowup_k4", c.blowup_k4)
        .field("split_k4", c.split_k4)
        .field("blowup_fewer", c.blowup_k4 < c.split_k4)
        .field("explicit", c.explicit)
        .field("blowup_is_n32", c.blowup_is_n32);
    report
}

fn table(n: Range, k: Range, t: Range) -> Outcome {
    if n.hi > TABLE_MAX_N {
        return Err(NktError::UnsupportedSize {
            what: "table vertex count",
            got: n.hi,
            limit: TABLE_MAX_N,
        }
        .into());
    }
    let cells = n.len() * k.len() * t.len();
    if cells > TABLE_MAX_CELLS {
        return Err(NktError::UnsupportedSize {
            what: "table cell count",
            got: cells,
            limit: TABLE_MAX_CELLS,
        }
        .into());
    }
    let mut rows = Vec::with_capacity(cells);
    for n in n.iter() {
        for k in k.iter() {
            for t in t.iter() {
                let cell = match min_nkt(n, k, t) {
                    Ok(rec) => json!({
                        "n": n, "k": k, "t": t,
                        "min_edges": rec.min_edges,
                        "minimizers": rec.minimizers.iter().map(ToString::to_string).collect::<Vec<_>>(),
                    }),
                    Err(_) => json!({"n": n, "k": k, "t": t, "min_edges": null, "minimizers": []}),
                };
                rows.push(cell);
            }
        }
    }
    let params = object(json!({"n": n.to_string(), "k": k.to_string(), "t": t.to_string()}));
    let mut report = Report::new("table", params);
    report.list("cells", "cell", rows);
    Ok(report)
}
