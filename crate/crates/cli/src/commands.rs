//! One function per subcommand. Each returns the complete document to print,
//! so nothing reaches standard output unless the command succeeds.

use std::fmt::Write as _;

use blockgraph::blocks::{self, BlockPartition};
use blockgraph::chartab::{self, find_match, CharacterTable, TableError};
use blockgraph::graph::{build_block_graph, solvability_criterion, GraphError};
use blockgraph::lietype::{
    self, group_order, is_regular, steinberg_verdict, Family, GenericLieGroup, LieError,
};
use blockgraph::tablegen::{dixon_table, PermGroup, TablegenError};
use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::input;

/// Well-formed input that the computation rejects.
pub const REJECTED: u8 = 2;
/// Usage errors, unreadable files and malformed documents.
pub const USAGE: u8 = 3;

#[derive(Debug, Error)]
#[error("{message}")]
pub struct CliError {
    pub code: u8,
    pub message: String,
    /// A document still worth printing, such as a validation report.
    pub document: Option<String>,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: USAGE,
            message: message.into(),
            document: None,
        }
    }

    pub fn rejected(message: impl ToString) -> Self {
        CliError {
            code: REJECTED,
            message: message.to_string(),
            document: None,
        }
    }
}

impl From<TableError> for CliError {
    fn from(e: TableError) -> Self {
        match e {
            TableError::Syntax(_) => CliError::usage(e.to_string()),
            TableError::Validation(_) => CliError::rejected(e),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::rejected(e)
    }
}

impl From<blocks::BlockError> for CliError {
    fn from(e: blocks::BlockError) -> Self {
        CliError::rejected(e)
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        CliError::rejected(e)
    }
}

impl From<TablegenError> for CliError {
    fn from(e: TablegenError) -> Self {
        match e {
            TablegenError::Syntax(_) => CliError::usage(e.to_string()),
            _ => CliError::rejected(e),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn load_table(arg: &str) -> Result<CharacterTable, CliError> {
    Ok(chartab::parse_table(&input::table_bytes(arg)?)?)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

// ---------------------------------------------------------------- validate

#[derive(Serialize)]
struct ValidateReport<'a> {
    name: &'a str,
    order: u64,
    classes: usize,
    valid: bool,
    violations: Vec<String>,
}

pub fn validate(arg: &str, json: bool) -> Result<String, CliError> {
    let t = chartab::parse_document(&input::table_bytes(arg)?)
        .map_err(|e| CliError::usage(e.to_string()))?;
    let violations: Vec<String> = t.validate().iter().map(ToString::to_string).collect();
    let report = ValidateReport {
        name: t.name(),
        order: t.order(),
        classes: t.class_count(),
        valid: violations.is_empty(),
        violations,
    };
    let document = if json {
        to_json(&report)
    } else {
        let mut s = format!(
            "{}: order {}, {} classes\n",
            report.name, report.order, report.classes
        );
        if report.valid {
            s.push_str("all table relations hold\n");
        }
        for v in &report.violations {
            let _ = writeln!(s, "violated: {v}");
        }
        s
    };
    if report.valid {
        Ok(document)
    } else {
        Err(CliError {
            code: REJECTED,
            message: format!(
                "{} violates {} relation(s)",
                report.name,
                report.violations.len()
            ),
            document: Some(document),
        })
    }
}

// ------------------------------------------------------------------ blocks

#[derive(Serialize)]
struct BlockOut {
    rows: Vec<usize>,
    degrees: Vec<u64>,
    defect: u32,
}

#[derive(Serialize)]
struct BlocksReport<'a> {
    name: &'a str,
    prime: u64,
    principal: usize,
    blocks: Vec<BlockOut>,
}

fn blocks_report<'a>(t: &'a CharacterTable, b: &BlockPartition) -> BlocksReport<'a> {
    BlocksReport {
        name: t.name(),
        prime: b.prime,
        principal: b.principal_index,
        blocks: b
            .blocks
            .iter()
            .map(|blk| BlockOut {
                rows: blk.rows.clone(),
                degrees: blk.rows.iter().map(|&r| t.degree(r)).collect(),
                defect: blk.defect,
            })
            .collect(),
    }
}

pub fn blocks(arg: &str, p: u64, json: bool) -> Result<String, CliError> {
    let t = load_table(arg)?;
    if t.order() % p != 0 && blockgraph::arith::is_prime(p) {
        return Err(CliError::rejected(GraphError::VertexNotFound(p)));
    }
    let partition = blocks::block_partition(&t, p)?;
    let report = blocks_report(&t, &partition);
    if json {
        return Ok(to_json(&report));
    }
    let mut s = format!(
        "{}: {} blocks for p = {p}\n",
        report.name,
        report.blocks.len()
    );
    for (i, b) in report.blocks.iter().enumerate() {
        let mark = if i == report.principal {
            " (principal)"
        } else {
            ""
        };
        let _ = writeln!(
            s,
            "block {i}{mark}: rows [{}], degrees [{}], defect {}",
            join(&b.rows, ", "),
            join(&b.degrees, ", "),
            b.defect
        );
    }
    Ok(s)
}

// ------------------------------------------------------------------- graph

#[derive(Serialize)]
struct EdgeOut {
    p: u64,
    q: u64,
    /// Lowest nontrivial row shared by both principal blocks.
    witness_row: usize,
    witness_degree: u64,
}

#[derive(Serialize)]
struct GraphReport<'a> {
    name: &'a str,
    vertices: Vec<u64>,
    edges: Vec<EdgeOut>,
    missing: Vec<[u64; 2]>,
    complete: bool,
}

pub fn graph(arg: &str, json: bool, dot: bool) -> Result<String, CliError> {
    let t = load_table(arg)?;
    let g = build_block_graph(&t)?;
    if dot {
        return Ok(g.export_dot(t.name()));
    }
    let report = GraphReport {
        name: t.name(),
        vertices: g.vertices().to_vec(),
        edges: g
            .edges()
            .map(|((p, q), w)| EdgeOut {
                p,
                q,
                witness_row: w.row,
                witness_degree: w.degree,
            })
            .collect(),
        missing: g.missing_edges().into_iter().map(|(p, q)| [p, q]).collect(),
        complete: g.is_complete(),
    };
    if json {
        return Ok(to_json(&report));
    }
    let mut s = format!(
        "{}: vertices {{{}}}\n",
        report.name,
        join(&report.vertices, ", ")
    );
    for e in &report.edges {
        let _ = writeln!(
            s,
            "{} -- {} (shared degree {} character)",
            e.p, e.q, e.witness_degree
        );
    }
    if report.complete {
        s.push_str("the block graph is complete\n");
    } else {
        let missing: Vec<String> = report
            .missing
            .iter()
            .map(|[p, q]| format!("{{{p}, {q}}}"))
            .collect();
        let _ = writeln!(s, "missing edges: {}", missing.join(", "));
    }
    Ok(s)
}

// --------------------------------------------------------- psolv, solvable

#[derive(Serialize)]
struct PsolvReport<'a> {
    name: &'a str,
    prime: u64,
    triangles: Vec<[u64; 3]>,
    p_solvable: bool,
    explanation: String,
}

pub fn psolv(arg: &str, p: u64, json: bool) -> Result<String, CliError> {
    let t = load_table(arg)?;
    if !blockgraph::arith::is_prime(p) {
        return Err(CliError::rejected(blocks::BlockError::NotPrime(p)));
    }
    let triangles = build_block_graph(&t)?.triangles_containing(p)?;
    let explanation = if triangles.is_empty() {
        format!("no triangle containing {p}: {} is {p}-solvable", t.name())
    } else {
        format!(
            "{} triangle(s) containing {p}; the block graph does not certify {p}-solvability",
            triangles.len()
        )
    };
    let report = PsolvReport {
        name: t.name(),
        prime: p,
        p_solvable: triangles.is_empty(),
        triangles,
        explanation,
    };
    if json {
        return Ok(to_json(&report));
    }
    let mut s = format!("{}\n", report.explanation);
    for tri in &report.triangles {
        let _ = writeln!(s, "triangle {{{}}}", join(tri, ", "));
    }
    Ok(s)
}

#[derive(Serialize)]
struct SolvableReport<'a> {
    name: &'a str,
    two_divides_order: bool,
    triangles: Vec<[u64; 3]>,
    solvable: bool,
    explanation: String,
}

pub fn solvable(arg: &str, json: bool) -> Result<String, CliError> {
    let t = load_table(arg)?;
    let r = solvability_criterion(&t)?;
    let explanation = if !r.two_divides_order {
        "the group has odd order, so there is no triangle containing 2: solvable".to_string()
    } else if r.solvable {
        "no triangle containing 2: solvable".to_string()
    } else {
        format!(
            "{} triangle(s) containing 2: not certified solvable",
            r.triangles.len()
        )
    };
    let report = SolvableReport {
        name: t.name(),
        two_divides_order: r.two_divides_order,
        triangles: r.triangles,
        solvable: r.solvable,
        explanation,
    };
    if json {
        return Ok(to_json(&report));
    }
    let mut s = format!("{}\n", report.explanation);
    for tri in &report.triangles {
        let _ = writeln!(s, "triangle {{{}}}", join(tri, ", "));
    }
    Ok(s)
}

// ---------------------------------------------------------------- lie type

fn descriptor(family: Family, rank: Option<u32>, q: u64) -> Result<GenericLieGroup, CliError> {
    Ok(match rank {
        Some(n) => GenericLieGroup::new(family, n, q)?,
        None => GenericLieGroup::exceptional(family, q)?,
    })
}

fn big(n: &BigUint) -> String {
    n.to_str_radix(10)
}

#[derive(Serialize)]
struct SteinbergReport {
    group: String,
    ell: u64,
    e: u64,
    regular: bool,
    steinberg_degree: String,
    in_principal_block: bool,
    explanation: String,
}

pub fn steinberg(family: Family, rank: Option<u32>, q: u64, ell: u64) -> Result<String, CliError> {
    let s = descriptor(family, rank, q)?;
    let v = steinberg_verdict(&s, ell)?;
    let explanation = format!(
        "e = {} is the order of {q} modulo {}; e is {} for {}, so the Steinberg character {} in the principal {ell}-block",
        v.e,
        if ell == 2 { 4 } else { ell },
        if v.regular { "regular" } else { "not regular" },
        family_rank(&s),
        if v.regular { "lies" } else { "does not lie" },
    );
    Ok(to_json(&SteinbergReport {
        group: s.to_string(),
        ell,
        e: v.e,
        regular: v.regular,
        steinberg_degree: big(&s.steinberg_degree()),
        in_principal_block: v.regular,
        explanation,
    }))
}

fn family_rank(s: &GenericLieGroup) -> String {
    match s.family().fixed_rank() {
        Some(_) => s.family().to_string(),
        None => format!("{}{}", s.family(), s.rank()),
    }
}

#[derive(Serialize)]
struct RegnumReport {
    family: String,
    rank: u32,
    e: u32,
    regular: bool,
    explanation: String,
}

pub fn regnum(family: Family, rank: Option<u32>, e: u32) -> Result<String, CliError> {
    let rank = match (family.fixed_rank(), rank) {
        (Some(r), None) => r,
        (Some(r), Some(n)) if r != n => {
            return Err(CliError::rejected(LieError::InvalidDescriptor(format!(
                "{family} has rank {r}, not {n}"
            ))))
        }
        (_, Some(n)) if n >= family.min_rank() => n,
        (None, Some(n)) => {
            return Err(CliError::rejected(LieError::InvalidDescriptor(format!(
                "{family}_n needs n ≥ {}, not {n}",
                family.min_rank()
            ))))
        }
        (None, None) => {
            return Err(CliError::rejected(LieError::InvalidDescriptor(format!(
                "{family} needs an explicit rank"
            ))))
        }
        (Some(r), Some(_)) => r,
    };
    if e == 0 {
        return Err(CliError::rejected("e must be positive"));
    }
    let regular = is_regular(family, rank, e);
    let name = if family.fixed_rank().is_some() {
        family.to_string()
    } else {
        format!("{family}{rank}")
    };
    Ok(to_json(&RegnumReport {
        family: family.to_string(),
        rank,
        e,
        regular,
        explanation: format!(
            "e = {e} is {} for {name}",
            if regular { "regular" } else { "not regular" }
        ),
    }))
}

#[derive(Serialize)]
struct ZsigmondyReport {
    t: u64,
    n: u64,
    prime: Option<String>,
    explanation: String,
}

pub fn zsigmondy(t: u64, n: u64) -> Result<String, CliError> {
    if t < 2 || n < 2 {
        return Err(CliError::rejected(format!(
            "need t ≥ 2 and n ≥ 2, got t = {t}, n = {n}"
        )));
    }
    let prime = lietype::zsigmondy(t, n);
    let explanation = match &prime {
        Some(r) => format!(
            "{} is the smallest prime dividing {t}^{n} − 1 but no {t}^m − 1 with m < {n}, so {t} has order {n} modulo {}",
            big(r),
            big(r)
        ),
        None => format!("{t}^{n} − 1 has no Zsigmondy prime"),
    };
    Ok(to_json(&ZsigmondyReport {
        t,
        n,
        prime: prime.as_ref().map(big),
        explanation,
    }))
}

#[derive(Serialize)]
struct FactorOut {
    prime: String,
    exponent: u32,
}

#[derive(Serialize)]
struct OrderReport {
    group: String,
    q: u64,
    order: String,
    factors: Vec<FactorOut>,
    factored: String,
    explanation: String,
}

pub fn order(family: Family, rank: Option<u32>, q: u64) -> Result<String, CliError> {
    let s = descriptor(family, rank, q)?;
    let f = group_order(&s);
    let d = s.index();
    Ok(to_json(&OrderReport {
        group: s.to_string(),
        q,
        order: big(&f.value),
        factors: f.factors.iter().map(|(p, k)| FactorOut { prime: big(p), exponent: *k }).collect(),
        factored: f.to_string(),
        explanation: format!(
            "|{s}| = q^N ∏ Φ_k(q)^(m_k) / d with q = {q} and d = {d}; the Steinberg character has degree {}",
            big(&s.steinberg_degree())
        ),
    }))
}

// ------------------------------------------------------------------- dixon

pub fn dixon(
    arg: &str,
    name: &str,
    bound: usize,
    compare: Option<&str>,
) -> Result<String, CliError> {
    let group = PermGroup::from_json(&input::file_bytes(arg)?, bound)?;
    let table = dixon_table(name, &group.group)?;
    if let Some(other) = compare {
        let reference = load_table(other)?;
        if find_match(&table, &reference).is_none() {
            return Err(CliError::rejected(format!(
                "the computed table of {name} does not match {} up to reordering",
                reference.name()
            )));
        }
    }
    Ok(chartab::print_table(&table))
}
