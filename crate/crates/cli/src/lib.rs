//! Report generation behind the `berge` binary. Every command returns its
//! standard output together with the process exit code.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use berge_core::dual::saito_report;
use berge_core::hyperbolic::{
    alexander_excludes_cable, alexander_excludes_torus, verify_hyperbolic, HyperbolicityCertificate,
    Rejection,
};
use berge_core::knot::alexander_berge;
use berge_core::lens::{identify_from_lens, identify_from_pg};
use berge_core::quad::enumerate_preimages;
use berge_core::{LensSpace, LaurentPoly, Sign, StandardParam};
use rayon::prelude::*;
use serde::Serialize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub code: i32,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Self { stdout, code: EXIT_OK }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub p: u64,
    pub sign: char,
    pub m: u64,
    pub n: u64,
    pub g: u64,
}

impl From<&StandardParam> for TableRow {
    fn from(par: &StandardParam) -> Self {
        Self { p: par.p(), sign: par.sign().as_char(), m: par.m(), n: par.n(), g: par.two_g() / 2 }
    }
}

/// Parameters with `p <= max_p`, found by solving for `(m, n)` at each `p`.
/// `(±, 1, 1)` (the unknot) is left out, as in the published table.
pub fn table_params(max_p: u64) -> Vec<StandardParam> {
    let mut out: Vec<StandardParam> = (2..=max_p)
        .into_par_iter()
        .flat_map_iter(|p| {
            Sign::both().into_iter().flat_map(move |sign| {
                enumerate_preimages(p, sign)
                    .into_iter()
                    .filter(|&(m, n)| (m, n) != (1, 1))
                    .map(move |(m, n)| StandardParam::new(sign, m, n).expect("preimages are standard"))
            })
        })
        .collect();
    out.sort_by_key(|par| (par.p(), par.sign(), par.m()));
    out
}

pub fn table_rows(max_p: u64) -> Vec<TableRow> {
    table_params(max_p).iter().map(TableRow::from).collect()
}

pub fn cmd_table(max_p: u64, format: Format) -> Report {
    let rows = table_rows(max_p);
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str("p,sign,m,n,g\n");
            for r in &rows {
                writeln!(out, "{},{},{},{},{}", r.p, r.sign, r.m, r.n, r.g).unwrap();
            }
        }
        Format::Json => {
            out = serde_json::to_string_pretty(&rows).expect("rows serialize");
            out.push('\n');
        }
        Format::Md => {
            out.push_str("| p | (ε, m, n) | g |\n|---:|:---:|---:|\n");
            let mut last = None;
            for r in &rows {
                let p = if last == Some(r.p) { String::new() } else { r.p.to_string() };
                last = Some(r.p);
                writeln!(out, "| {p} | ({}, {}, {}) | {} |", r.sign, r.m, r.n, r.g).unwrap();
            }
        }
    }
    Report::ok(out)
}

fn describe(par: &StandardParam) -> String {
    match par.torus_type() {
        Some((r, s)) if r >= 2 => format!("{par} torus knot T({r}, {s}), not hyperbolic"),
        Some(_) => format!("{par} unknot, not hyperbolic"),
        None => format!("{par} hyperbolic"),
    }
}

pub enum Query {
    Genus(u64),
    Residue(i64),
}

pub fn cmd_identify(p: u64, query: Query) -> Report {
    let found: Vec<StandardParam> = match query {
        Query::Genus(g) => identify_from_pg(p, 2 * g).into_iter().collect(),
        Query::Residue(q) => match LensSpace::new(p, q) {
            Ok(lens) => identify_from_lens(&lens),
            Err(_) => Vec::new(),
        },
    };
    if found.is_empty() {
        return Report { stdout: "none\n".into(), code: EXIT_FAILURE };
    }
    Report::ok(found.iter().map(|par| describe(par) + "\n").collect())
}

fn rejection_tag(r: &Rejection) -> &'static str {
    match r {
        Rejection::GenusMismatch { .. } => "genus",
        Rejection::FranzMismatch => "franz",
        Rejection::LensMismatch => "lens",
        Rejection::ParityContradiction { .. } => "parity",
        Rejection::CongruenceFilter => "congruence",
        Rejection::GapBound => "gap",
        Rejection::AlexanderMismatch => "alexander",
    }
}

fn tags(rs: &[Rejection]) -> String {
    let v: Vec<&str> = rs.iter().map(rejection_tag).collect();
    format!("[{}]", v.join(","))
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub certificate: HyperbolicityCertificate,
    pub alexander_torus: bool,
    pub alexander_cable: bool,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.certificate.is_valid() && self.alexander_torus && self.alexander_cable
    }

    fn summary(&self) -> String {
        let c = &self.certificate;
        let torus: Vec<String> =
            c.torus.iter().map(|t| format!("T({},{}){}", t.r, t.s, tags(&t.rejections))).collect();
        let cable: Vec<String> = c
            .cable
            .iter()
            .map(|t| format!("C({},{},{}){}", t.r, t.s, t.sign, tags(&t.rejections)))
            .collect();
        let list = |v: Vec<String>| if v.is_empty() { "none".to_string() } else { v.join(" ") };
        format!(
            "{} p={} torus: {} cable: {} alexander: {} {}",
            c.param,
            c.param.p(),
            list(torus),
            list(cable),
            if self.alexander_torus { "non-torus" } else { "TORUS-MATCH" },
            if self.alexander_cable { "non-cable" } else { "CABLE-MATCH" },
        )
    }
}

pub fn verify_param(par: &StandardParam) -> Verification {
    Verification {
        certificate: verify_hyperbolic(par).expect("parameter is nontrivial"),
        alexander_torus: alexander_excludes_torus(par).expect("polynomials are exact"),
        alexander_cable: alexander_excludes_cable(par).expect("polynomials are exact"),
    }
}

/// Verification for every hyperbolic parameter with `p <= max_p`, in table order.
pub fn verify_all(max_p: u64) -> Vec<Verification> {
    let params: Vec<StandardParam> =
        StandardParam::all_up_to(max_p).into_iter().filter(|p| p.is_hyperbolic()).collect();
    params.par_iter().map(verify_param).collect()
}

pub fn cmd_verify(max_p: u64) -> Report {
    let results = verify_all(max_p);
    let mut out = String::new();
    for v in &results {
        writeln!(out, "{} {}", if v.passed() { "ok" } else { "FAIL" }, v.summary()).unwrap();
    }
    let failures: Vec<&Verification> = results.iter().filter(|v| !v.passed()).collect();
    if failures.is_empty() {
        writeln!(out, "verified {} parameters: all certificates valid", results.len()).unwrap();
        Report::ok(out)
    } else {
        writeln!(out, "verified {} parameters: {} failed", results.len(), failures.len()).unwrap();
        for v in failures {
            writeln!(out, "failed {}", v.certificate.param).unwrap();
        }
        Report { stdout: out, code: EXIT_FAILURE }
    }
}

/// Groups of table rows sharing a genus, leaving out the pairs
/// `{(+, 1, n), (-, 1, n-1)}` that always coincide. Groups are ordered by
/// their smallest `p`.
pub fn genus_collisions(max_p: u64) -> Vec<Vec<TableRow>> {
    let mut by_genus: BTreeMap<u64, Vec<TableRow>> = BTreeMap::new();
    for row in table_rows(max_p) {
        by_genus.entry(row.g).or_default().push(row);
    }
    let trivial_pair = |rows: &[TableRow]| {
        if let [a, b] = rows {
            let (plus, minus) = if a.sign == '+' { (a, b) } else { (b, a) };
            plus.sign == '+' && minus.sign == '-' && plus.m == 1 && minus.m == 1 && minus.n + 1 == plus.n
        } else {
            false
        }
    };
    let mut groups: Vec<Vec<TableRow>> = by_genus
        .into_values()
        .filter(|rows| rows.len() >= 2 && !trivial_pair(rows))
        .collect();
    groups.sort_by_key(|rows| rows[0].p);
    groups
}

pub fn cmd_genus_collisions(max_p: u64) -> Report {
    let mut out = String::from("g,p,sign,m,n\n");
    for group in genus_collisions(max_p) {
        for r in group {
            writeln!(out, "{},{},{},{},{}", r.g, r.p, r.sign, r.m, r.n).unwrap();
        }
    }
    Report::ok(out)
}

/// Hyperbolic parameters whose normalized Alexander polynomials coincide.
pub fn alexander_collisions(max_p: u64) -> (usize, Vec<Vec<StandardParam>>) {
    let params: Vec<StandardParam> =
        StandardParam::all_up_to(max_p).into_iter().filter(|p| p.is_hyperbolic()).collect();
    let polys: Vec<LaurentPoly> = params
        .par_iter()
        .map(|par| alexander_berge(par).expect("polynomials are exact"))
        .collect();
    let mut by_poly: BTreeMap<Vec<(i64, String)>, Vec<StandardParam>> = BTreeMap::new();
    for (par, poly) in params.iter().zip(&polys) {
        let key = poly.terms().map(|(e, c)| (e, c.to_string())).collect();
        by_poly.entry(key).or_default().push(*par);
    }
    let collisions = by_poly.into_values().filter(|v| v.len() >= 2).collect();
    (params.len(), collisions)
}

pub fn cmd_alexander_collisions(max_p: u64) -> Report {
    let (n, collisions) = alexander_collisions(max_p);
    let mut out = String::new();
    if n == 0 {
        writeln!(out, "nothing to compare").unwrap();
        return Report::ok(out);
    }
    writeln!(out, "parameters compared: {n}").unwrap();
    writeln!(out, "pairs compared: {}", n * (n - 1) / 2).unwrap();
    let pairs: usize = collisions.iter().map(|g| g.len() * (g.len() - 1) / 2).sum();
    writeln!(out, "collisions: {pairs}").unwrap();
    for group in collisions {
        let names: Vec<String> = group.iter().map(|p| p.to_string()).collect();
        writeln!(out, "same polynomial: {}", names.join(" ")).unwrap();
    }
    Report::ok(out)
}

/// Saito parameters found by search, with whether `-n(m+n)⁻¹` is among them.
pub fn cmd_saito(max_p: u64) -> Report {
    let params: Vec<StandardParam> =
        StandardParam::all_up_to(max_p).into_iter().filter(|p| (p.m(), p.n()) != (1, 1)).collect();
    let chunks: Vec<_> = params
        .par_chunks(8)
        .map(|c| saito_report(c).expect("polynomials are exact"))
        .collect();
    let mut out = String::from("p,sign,m,n,q,k,closed_form\n");
    for obs in chunks.into_iter().flatten() {
        let ks: Vec<String> = obs.found.iter().map(|k| k.to_string()).collect();
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            obs.param.p(),
            obs.param.sign(),
            obs.param.m(),
            obs.param.n(),
            obs.q,
            ks.join(" "),
            if obs.plus_formula_hit { "yes" } else { "no" }
        )
        .unwrap();
    }
    Report::ok(out)
}
