use anyhow::{bail, Context, Result};
use hookcells::counting::kappa_distribution;
use hookcells::hookcode::{hasse_diagram, hook_code};
use hookcells::kappa::{beta_profile, block_stats, is_special, kappa, monomial_betti, GeneratorProfile};
use hookcells::partitions::enumerate_partitions;
use hookcells::{decompose, HilbertFunction, HookCode, Partition};
use hookcells_oracle::{oracle_kappa, oracle_kappa_from, Error as OracleError};
use serde::Serialize;

use crate::cli::{Command, Format};
use crate::render::{dot_escape, join, Table};

pub struct Output {
    pub text: String,
    pub exit: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, exit: 0 }
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse().with_context(|| format!("invalid partition {s:?}"))
}

fn parse_hilbert(s: &str) -> Result<HilbertFunction> {
    s.parse().with_context(|| format!("invalid Hilbert function {s:?}"))
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn profile_text(p: &GeneratorProfile) -> String {
    p.counts.iter().enumerate().map(|(k, c)| format!("{}:{c}", p.start_degree + k)).collect::<Vec<_>>().join(",")
}

fn tabular(table: &Table, format: Format) -> Result<String> {
    match format {
        Format::Tsv => Ok(table.tsv()),
        Format::Markdown => Ok(table.markdown()),
        Format::Json | Format::Dot => unreachable!("handled by the caller"),
    }
}

pub fn run(command: &Command, format: Option<Format>) -> Result<Output> {
    let is_lattice = matches!(command, Command::Lattice { .. });
    let format = format.unwrap_or(if is_lattice { Format::Dot } else { Format::Tsv });
    if format == Format::Dot && !is_lattice {
        bail!("--format dot only applies to lattice");
    }
    match command {
        Command::Enumerate { hilbert } => enumerate(&parse_hilbert(hilbert)?, format).map(Output::ok),
        Command::Kappa { partition } => kappa_report(&parse_partition(partition)?, format).map(Output::ok),
        Command::Decompose { partition } => decomposition(&parse_partition(partition)?, format).map(Output::ok),
        Command::Count { hilbert, k } => count(&parse_hilbert(hilbert)?, *k, format).map(Output::ok),
        Command::Table { hilbert } => table(&parse_hilbert(hilbert)?, format).map(Output::ok),
        Command::Lattice { hilbert } => lattice(&parse_hilbert(hilbert)?, format).map(Output::ok),
        Command::Verify { partition, field, budget } => verify(&parse_partition(partition)?, *field, *budget, format),
    }
}

#[derive(Serialize)]
struct EnumerateRow {
    partition: Partition,
    code: HookCode,
    hooks: usize,
    kappa: usize,
    special: bool,
}

fn enumerate(t: &HilbertFunction, format: Format) -> Result<String> {
    let rows: Vec<EnumerateRow> = enumerate_partitions(t)
        .into_iter()
        .map(|p| {
            let code = hook_code(&p);
            EnumerateRow { hooks: code.size(), kappa: kappa(&p), special: is_special(&p), code, partition: p }
        })
        .collect();
    if format == Format::Json {
        return json(&rows);
    }
    let mut table = Table::new(["partition", "code", "hooks", "kappa", "special"]);
    for r in &rows {
        table.push(vec![
            r.partition.to_string(),
            r.code.human(),
            r.hooks.to_string(),
            r.kappa.to_string(),
            r.special.to_string(),
        ]);
    }
    tabular(&table, format)
}

#[derive(Serialize)]
struct KappaReport {
    partition: Partition,
    hilbert: HilbertFunction,
    code: HookCode,
    kappa: usize,
    kappa_t: usize,
    special: bool,
    profile: GeneratorProfile,
    betti: GeneratorProfile,
}

fn kappa_report(p: &Partition, format: Format) -> Result<String> {
    let t = p.diagonal_lengths();
    let r = KappaReport {
        partition: p.clone(),
        code: hook_code(p),
        kappa: kappa(p),
        kappa_t: t.kappa(),
        special: is_special(p),
        profile: beta_profile(p),
        betti: monomial_betti(p),
        hilbert: t,
    };
    if format == Format::Json {
        return json(&r);
    }
    let mut table = Table::new(["field", "value"]);
    for (k, v) in [
        ("partition", r.partition.to_string()),
        ("hilbert", r.hilbert.to_string()),
        ("code", r.code.human()),
        ("kappa", r.kappa.to_string()),
        ("kappa_t", r.kappa_t.to_string()),
        ("special", r.special.to_string()),
        ("profile", profile_text(&r.profile)),
        ("betti", profile_text(&r.betti)),
    ] {
        table.push(vec![k.into(), v]);
    }
    tabular(&table, format)
}

fn decomposition(p: &Partition, format: Format) -> Result<String> {
    let dec = decompose(p);
    if format == Format::Json {
        return json(&dec);
    }
    let code = hook_code(p);
    let mut table = Table::new(["degree", "hilbert", "partition", "code", "v1", "v2"]);
    for e in &dec.entries {
        let block = code.block(e.degree).map(|b| format!("({})", join(&b.parts, ","))).unwrap_or_default();
        table.push(vec![
            e.degree.to_string(),
            e.hilbert.to_string(),
            e.partition.to_string(),
            block,
            join(&e.v1, " "),
            join(&e.v2, " "),
        ]);
    }
    tabular(&table, format)
}

#[derive(Serialize)]
struct CountRow {
    k: usize,
    mu: String,
}

#[derive(Serialize)]
struct CountReport {
    hilbert: HilbertFunction,
    total: String,
    generic: usize,
    special: String,
    counts: Vec<CountRow>,
}

fn count(t: &HilbertFunction, k: Option<usize>, format: Format) -> Result<String> {
    let dist = kappa_distribution(t);
    let counts: Vec<CountRow> = match k {
        Some(k) => vec![CountRow { k, mu: dist.mu(k).to_string() }],
        None => dist.counts.iter().map(|(&k, v)| CountRow { k, mu: v.to_string() }).collect(),
    };
    let report = CountReport {
        hilbert: t.clone(),
        total: dist.total.to_string(),
        generic: dist.generic,
        special: dist.special.to_string(),
        counts,
    };
    if format == Format::Json {
        return json(&report);
    }
    let mut table = Table::new(["k", "mu"]);
    for row in &report.counts {
        table.push(vec![row.k.to_string(), row.mu.clone()]);
    }
    if k.is_none() {
        table.push(vec!["total".into(), report.total.clone()]);
        table.push(vec!["special".into(), report.special.clone()]);
    }
    tabular(&table, format)
}

#[derive(Serialize)]
struct TauBlock {
    degree: usize,
    values: Vec<i64>,
}

#[derive(Serialize)]
struct TableRow {
    partition: Partition,
    code: HookCode,
    tau: Vec<TauBlock>,
    kappa: usize,
    dimension: usize,
    special: bool,
}

/// Descending rank in the code lattice, then descending code.
fn table_rows(t: &HilbertFunction) -> Vec<TableRow> {
    let mut rows: Vec<TableRow> = enumerate_partitions(t)
        .into_iter()
        .map(|p| {
            let code = hook_code(&p);
            let tau = t
                .blocks()
                .filter_map(|i| block_stats(&p, i).ok())
                .map(|s| TauBlock { degree: s.degree, values: s.tau })
                .collect();
            TableRow { dimension: code.size(), kappa: kappa(&p), special: is_special(&p), tau, code, partition: p }
        })
        .collect();
    rows.sort_by(|a, b| b.dimension.cmp(&a.dimension).then_with(|| b.code.cmp(&a.code)));
    rows
}

fn table(t: &HilbertFunction, format: Format) -> Result<String> {
    let rows = table_rows(t);
    if format == Format::Json {
        return json(&rows);
    }
    let single = t.is_single_block();
    let width = rows.iter().flat_map(|r| r.tau.first()).map(|b| b.values.len()).max().unwrap_or(0);
    let mut headers = vec!["partition".to_string(), "code".to_string()];
    if single {
        headers.extend((1..=width).map(|k| format!("tau_{k}")));
    } else {
        headers.extend(t.blocks().map(|i| format!("tau_{i}")));
    }
    headers.extend(["kappa", "dimension", "special"].map(String::from));
    let mut table = Table::new(headers);
    for r in &rows {
        let mut cells = vec![r.partition.to_string(), r.code.human()];
        if single {
            let values = r.tau.first().map(|b| b.values.clone()).unwrap_or_default();
            cells.extend((0..width).map(|k| values.get(k).map(ToString::to_string).unwrap_or_default()));
        } else {
            cells.extend(
                t.blocks()
                    .map(|i| r.tau.iter().find(|b| b.degree == i).map(|b| join(&b.values, ",")).unwrap_or_default()),
            );
        }
        cells.extend([r.kappa.to_string(), r.dimension.to_string(), r.special.to_string()]);
        table.push(cells);
    }
    tabular(&table, format)
}

#[derive(Serialize)]
struct LatticeNode {
    id: usize,
    partition: Partition,
    code: HookCode,
    kappa: usize,
    special: bool,
}

#[derive(Serialize)]
struct Lattice {
    nodes: Vec<LatticeNode>,
    edges: Vec<(usize, usize)>,
}

fn lattice(t: &HilbertFunction, format: Format) -> Result<String> {
    let nodes: Vec<LatticeNode> = table_rows(t)
        .into_iter()
        .enumerate()
        .map(|(id, r)| LatticeNode { id, partition: r.partition, code: r.code, kappa: r.kappa, special: r.special })
        .collect();
    let id = |q: &HookCode| nodes.iter().position(|n| &n.code == q).expect("every code has a node");
    let mut edges: Vec<(usize, usize)> = hasse_diagram(t).iter().map(|(u, l)| (id(u), id(l))).collect();
    edges.sort_unstable();
    let lattice = Lattice { nodes, edges };
    match format {
        Format::Json => json(&lattice),
        Format::Dot => {
            let mut out = String::from("digraph lattice {\n  rankdir=TB;\n  node [shape=box];\n");
            for n in &lattice.nodes {
                let label = dot_escape(&format!("{} | {} | {}", n.partition, n.code.human(), n.kappa));
                let style = if n.special { ", style=filled, fillcolor=\"#f2a7a7\"" } else { "" };
                out.push_str(&format!("  n{} [label=\"{label}\"{style}];\n", n.id));
            }
            for (u, l) in &lattice.edges {
                out.push_str(&format!("  n{u} -> n{l};\n"));
            }
            out.push_str("}\n");
            Ok(out)
        }
        _ => {
            let mut table = Table::new(["upper", "lower"]);
            for &(u, l) in &lattice.edges {
                table.push(vec![lattice.nodes[u].code.human(), lattice.nodes[l].code.human()]);
            }
            tabular(&table, format)
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyReport {
    pub partition: Partition,
    pub prime: u32,
    pub tuples_tested: u64,
    pub accepted: u64,
    pub min_mu_total: usize,
    pub min_mu_profile: Vec<usize>,
    pub formula_kappa: usize,
    pub formula_profile: Vec<usize>,
    pub agree: bool,
}

#[derive(Serialize)]
struct VerifyFailure {
    partition: Partition,
    error: &'static str,
    message: String,
}

fn verify(p: &Partition, field: Option<u32>, budget: u64, format: Format) -> Result<Output> {
    let result = match field {
        Some(prime) => oracle_kappa_from(p, prime, budget),
        None => oracle_kappa(p, budget),
    };
    let oracle = match result {
        Ok(o) => o,
        Err(e @ OracleError::BudgetExhausted { .. }) => {
            let failure = VerifyFailure { partition: p.clone(), error: "BudgetExhausted", message: e.to_string() };
            let text = if format == Format::Json {
                json(&failure)?
            } else {
                format!("error\t{}\nmessage\t{}\n", failure.error, failure.message)
            };
            return Ok(Output { text, exit: 3 });
        }
        Err(e) => return Err(e.into()),
    };
    let scan = oracle.last_scan();
    let formula_profile = beta_profile(p).dense();
    let formula_kappa = kappa(p);
    let agree = oracle.total == formula_kappa && oracle.profile == formula_profile && oracle.pivot_mismatches() == 0;
    let report = VerifyReport {
        partition: p.clone(),
        prime: scan.prime,
        tuples_tested: scan.tuples_tested,
        accepted: scan.accepted,
        min_mu_total: oracle.total,
        min_mu_profile: oracle.profile.clone(),
        formula_kappa,
        formula_profile,
        agree,
    };
    let text = if format == Format::Json {
        json(&report)?
    } else {
        let mut table = Table::new(["field", "value"]);
        for (k, v) in [
            ("partition", report.partition.to_string()),
            ("prime", report.prime.to_string()),
            ("tuples_tested", report.tuples_tested.to_string()),
            ("accepted", report.accepted.to_string()),
            ("min_mu_total", report.min_mu_total.to_string()),
            ("min_mu_profile", join(&report.min_mu_profile, ",")),
            ("formula_kappa", report.formula_kappa.to_string()),
            ("formula_profile", join(&report.formula_profile, ",")),
            ("agree", report.agree.to_string()),
        ] {
            table.push(vec![k.into(), v]);
        }
        if !agree {
            table.push(vec!["error".into(), "Disagreement".into()]);
        }
        tabular(&table, format)?
    };
    Ok(Output { text, exit: if agree { 0 } else { 2 } })
}
