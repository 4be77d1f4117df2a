//! Text, LaTeX, JSON and CSV emitters.
//!
//! Terms always appear in canonical partition order. Rationals are written
//! as `num/den` in text and CSV and as strings in JSON.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::arith::{rat_int, Integer, Rational};
use crate::error::{Error, Result};
use crate::genera::{GenusKind, GenusTable, Method};
use crate::numbers::{Family, NumberRecord};
use crate::partition::{enumerate, Partition};
use crate::reversion::{c_matrix, g_function, CoeffMatrixJson};
use crate::symfunc::{forgotten, BasisTag, SymFn, SymFnJson, TermJson, CONVENTION};
use crate::verify::VerifyReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Format {
    Text,
    Json,
    Latex,
    Csv,
}

impl Format {
    pub const ALL: [Format; 4] = [Format::Text, Format::Json, Format::Latex, Format::Csv];

    pub fn name(self) -> &'static str {
        match self {
            Format::Text => "text",
            Format::Json => "json",
            Format::Latex => "latex",
            Format::Csv => "csv",
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Format::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "format",
                name: s.to_string(),
            })
    }
}

pub const MISPRINT_T6: &str = "paper-misprint: the source display of T_6 prints the term -5c_1^2c_5, \
which has degree 7; the computed degree-6 term is -5c_1^2c_4";

pub const MISPRINT_G31: &str = "paper-misprint: the source display prints g_(3,1) = f_(3,1) + 6f_(3), \
which mixes weights 4 and 3; the computed expansion is f_(3,1) + 6f_(4)";

pub const BUCHSTABER_CONVENTION: &str = "exponent of p in b_n is floor((n-1)/(2(p-1))); \
b_n is constant on n = 4k+1..4k+4 and equals mu(L_k) there";

fn subscript(i: impl fmt::Display, latex: bool) -> String {
    let s = i.to_string();
    if latex && s.len() > 1 {
        format!("_{{{s}}}")
    } else {
        format!("_{s}")
    }
}

fn superscript(i: u32, latex: bool) -> String {
    if latex && i > 9 {
        format!("^{{{i}}}")
    } else {
        format!("^{i}")
    }
}

/// Product notation `c_1^2c_2` for a multiplicative basis element, factors in
/// increasing index.
pub fn class_monomial(var: &str, lambda: &Partition, latex: bool) -> String {
    let mut out = String::new();
    for (part, mult) in lambda.multiplicities().into_iter().rev() {
        out.push_str(var);
        out.push_str(&subscript(part, latex));
        if mult > 1 {
            out.push_str(&superscript(mult, latex));
        }
    }
    out
}

/// Indexed notation `f_(2,1)` or, in LaTeX, `f_{(2,1)}`.
pub fn basis_label(symbol: &str, lambda: &Partition, latex: bool) -> String {
    if lambda.is_empty() {
        return String::new();
    }
    if latex {
        format!("{symbol}_{{{lambda}}}")
    } else {
        format!("{symbol}_{lambda}")
    }
}

fn rational_coeff(c: &Rational, latex: bool) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else if latex {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

/// Joins `(coefficient, atom)` pairs as a signed sum. An empty atom stands
/// for the constant 1.
fn signed_sum(items: &[(Rational, String)], spaced: bool, latex: bool) -> String {
    if items.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (c, atom)) in items.iter().enumerate() {
        let negative = c.is_negative();
        match (i, negative, spaced) {
            (0, true, _) => out.push('-'),
            (0, false, _) => {}
            (_, true, true) => out.push_str(" - "),
            (_, false, true) => out.push_str(" + "),
            (_, true, false) => out.push('-'),
            (_, false, false) => out.push('+'),
        }
        let a = c.abs();
        if !a.is_one() || atom.is_empty() {
            out.push_str(&rational_coeff(&a, latex));
        }
        out.push_str(atom);
    }
    out
}

fn atom(sf_basis: BasisTag, var: &str, lambda: &Partition, latex: bool) -> String {
    if sf_basis == BasisTag::Elementary {
        class_monomial(var, lambda, latex)
    } else {
        basis_label(sf_basis.symbol(), lambda, latex)
    }
}

/// `-m_(2,1) - 2m_(3)`.
pub fn linear_combination(sf: &SymFn, latex: bool) -> String {
    let items: Vec<(Rational, String)> = sf
        .terms()
        .map(|(lam, c)| (c.clone(), basis_label(sf.basis().symbol(), lam, latex)))
        .collect();
    signed_sum(&items, true, latex)
}

/// Genus name `T_4`, `L_2`.
pub fn genus_name(kind: GenusKind, k: u32, latex: bool) -> String {
    let letter = match kind {
        GenusKind::Todd => "T",
        GenusKind::Lgenus => "L",
    };
    format!("{letter}{}", subscript(k, latex))
}

fn class_var(kind: GenusKind) -> &'static str {
    match kind {
        GenusKind::Todd => "c",
        GenusKind::Lgenus => "p",
    }
}

/// Right-hand side of a genus display with the common denominator pulled out,
/// e.g. `\frac{1}{24}c_1c_2` or `(c_2+c_1^2)/12`.
pub fn genus_body(kind: GenusKind, sf: &SymFn, latex: bool) -> String {
    let var = class_var(kind);
    let basis = sf.basis();
    let Ok(den) = sf.denominator() else {
        let items: Vec<(Rational, String)> = sf
            .terms()
            .map(|(lam, c)| (c.clone(), atom(basis, var, lam, latex)))
            .collect();
        return signed_sum(&items, false, latex);
    };
    let scale = rat_int(den.clone());
    let items: Vec<(Rational, String)> = sf
        .terms()
        .map(|(lam, c)| (c * &scale, atom(basis, var, lam, latex)))
        .collect();
    if den.is_one() || items.is_empty() {
        return signed_sum(&items, false, latex);
    }
    if let [(c, a)] = items.as_slice() {
        let sign = if c.is_negative() { "-" } else { "" };
        let num = c.abs();
        return if latex {
            format!("{sign}\\frac{{{num}}}{{{den}}}{a}")
        } else if num.is_one() && !a.is_empty() {
            format!("{sign}{a}/{den}")
        } else {
            format!("{sign}{num}{a}/{den}")
        };
    }
    let inner = signed_sum(&items, false, latex);
    if latex {
        format!("\\frac{{1}}{{{den}}}({inner})")
    } else {
        format!("({inner})/{den}")
    }
}

/// Informational notes attached to a rendered genus.
pub fn genus_notes(kind: GenusKind, k: u32) -> Vec<String> {
    match (kind, k) {
        (GenusKind::Todd, 6) => vec![MISPRINT_T6.to_string()],
        _ => Vec::new(),
    }
}

/// `{kind, k, basis, terms, denominator, method}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusJson {
    pub kind: GenusKind,
    pub k: u32,
    pub basis: BasisTag,
    pub terms: Vec<TermJson>,
    /// Absent for the power-sum basis.
    pub denominator: Option<String>,
    pub method: Method,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl GenusJson {
    pub fn new(table: &GenusTable, basis: BasisTag) -> Self {
        let sf = table.polynomial.convert(basis);
        GenusJson {
            kind: table.kind,
            k: table.degree,
            basis,
            denominator: sf.denominator().ok().map(|d| d.to_string()),
            terms: SymFnJson::from(&sf).terms,
            method: table.method,
            notes: genus_notes(table.kind, table.degree),
        }
    }
}

/// Several constructions of the same genus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusComparisonJson {
    pub kind: GenusKind,
    pub k: u32,
    pub agree: bool,
    pub results: Vec<GenusJson>,
}

/// Renders one or more constructions of a genus. With more than one table an
/// agreement line is included.
pub fn render_genus(tables: &[GenusTable], basis: BasisTag, format: Format) -> Result<String> {
    let first = tables
        .first()
        .ok_or_else(|| Error::InvalidArgument("no genus tables to render".into()))?;
    let agree = tables.iter().all(|t| t.polynomial == first.polynomial);
    let (kind, k) = (first.kind, first.degree);
    let notes = genus_notes(kind, k);
    let multi = tables.len() > 1;
    let mut out = String::new();
    match format {
        Format::Text | Format::Latex => {
            let latex = format == Format::Latex;
            for t in tables {
                let body = genus_body(kind, &t.polynomial.convert(basis), latex);
                let name = genus_name(kind, k, latex);
                match (latex, multi) {
                    (true, true) => out.push_str(&format!("% method: {}\n{name}={body}\n", t.method)),
                    (true, false) => out.push_str(&format!("{name}={body}\n")),
                    (false, true) => out.push_str(&format!("{name} [{}] = {body}\n", t.method)),
                    (false, false) => out.push_str(&format!("{name} = {body}\n")),
                }
            }
            let comment = if latex { "% " } else { "" };
            if basis.is_integral() {
                let den = first.polynomial.convert(basis).denominator()?;
                out.push_str(&format!("{comment}denominator: {den}\n"));
            }
            if multi {
                out.push_str(&format!("{comment}agreement: {agree}\n"));
            }
            for n in &notes {
                out.push_str(&format!("{comment}note: {n}\n"));
            }
        }
        Format::Json => {
            let results: Vec<GenusJson> = tables.iter().map(|t| GenusJson::new(t, basis)).collect();
            out = if multi {
                to_json(&GenusComparisonJson {
                    kind,
                    k,
                    agree,
                    results,
                })?
            } else {
                to_json(&results[0])?
            };
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            write_csv(&mut w, ["kind", "k", "method", "basis", "partition", "num", "den"])?;
            for t in tables {
                let sf = t.polynomial.convert(basis);
                for (lam, c) in sf.terms() {
                    write_csv(
                        &mut w,
                        [
                            kind_name(kind).to_string(),
                            k.to_string(),
                            t.method.to_string(),
                            basis.to_string(),
                            lam.to_string(),
                            c.numer().to_string(),
                            c.denom().to_string(),
                        ],
                    )?;
                }
            }
            out = finish_csv(w)?;
        }
    }
    Ok(out)
}

fn kind_name(kind: GenusKind) -> &'static str {
    match kind {
        GenusKind::Todd => "todd",
        GenusKind::Lgenus => "lgenus",
    }
}

/// Which basis table to print.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisTable {
    F,
    G,
    Cmatrix,
}

impl BasisTable {
    pub const ALL: [BasisTable; 3] = [BasisTable::F, BasisTable::G, BasisTable::Cmatrix];

    pub fn name(self) -> &'static str {
        match self {
            BasisTable::F => "f",
            BasisTable::G => "g",
            BasisTable::Cmatrix => "cmatrix",
        }
    }
}

impl FromStr for BasisTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisTable::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "basis table",
                name: s.to_string(),
            })
    }
}

/// One basis element with its expansions (f: in m; g: in f, then m).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRowJson {
    pub lambda: Partition,
    pub expansions: Vec<SymFnJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisTableJson {
    pub which: BasisTable,
    pub k: u32,
    pub convention: String,
    pub rows: Vec<BasisRowJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn basis_notes(which: BasisTable, k: u32) -> Vec<String> {
    match (which, k) {
        (BasisTable::G, 4) => vec![MISPRINT_G31.to_string()],
        _ => Vec::new(),
    }
}

/// `(λ, [expansions])` for every partition of `k`.
fn basis_rows(which: BasisTable, k: u32) -> Vec<(Partition, Vec<SymFn>)> {
    enumerate(k)
        .into_iter()
        .map(|lam| {
            let expansions = match which {
                BasisTable::F => vec![forgotten(&lam)],
                _ => {
                    let g = g_function(&lam);
                    let m = g.convert(BasisTag::Monomial);
                    vec![g, m]
                }
            };
            (lam, expansions)
        })
        .collect()
}

pub fn render_basis(which: BasisTable, k: u32, format: Format) -> Result<String> {
    if k == 0 {
        return Err(Error::NonPositive("k = 0".into()));
    }
    if which == BasisTable::Cmatrix {
        return render_cmatrix(k, format);
    }
    let rows = basis_rows(which, k);
    let notes = basis_notes(which, k);
    let symbol = which.name();
    let mut out = String::new();
    match format {
        Format::Text | Format::Latex => {
            let latex = format == Format::Latex;
            for (lam, exps) in &rows {
                let mut line = basis_label(symbol, lam, latex);
                for e in exps {
                    line.push_str(" = ");
                    line.push_str(&linear_combination(e, latex));
                }
                out.push_str(&line);
                out.push('\n');
            }
            let comment = if latex { "% " } else { "" };
            for n in &notes {
                out.push_str(&format!("{comment}note: {n}\n"));
            }
        }
        Format::Json => {
            out = to_json(&BasisTableJson {
                which,
                k,
                convention: CONVENTION.to_string(),
                rows: rows
                    .iter()
                    .map(|(lam, exps)| BasisRowJson {
                        lambda: lam.clone(),
                        expansions: exps.iter().map(SymFnJson::from).collect(),
                    })
                    .collect(),
                notes,
            })?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            write_csv(&mut w, ["element", "basis", "partition", "num", "den"])?;
            for (lam, exps) in &rows {
                let element = basis_label(symbol, lam, false);
                for e in exps {
                    for (mu, c) in e.terms() {
                        write_csv(
                            &mut w,
                            [
                                element.clone(),
                                e.basis().to_string(),
                                mu.to_string(),
                                c.numer().to_string(),
                                c.denom().to_string(),
                            ],
                        )?;
                    }
                }
            }
            out = finish_csv(w)?;
        }
    }
    Ok(out)
}

fn render_cmatrix(k: u32, format: Format) -> Result<String> {
    let c = c_matrix(k);
    let labels: Vec<String> = c.partitions().iter().map(|p| p.to_string()).collect();
    let cell = |v: &Integer| v.to_string();
    let out = match format {
        Format::Json => to_json::<CoeffMatrixJson>(&c.to_json())?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["mu\\lambda".to_string()];
            header.extend(labels.iter().cloned());
            write_csv(&mut w, header)?;
            for (label, row) in labels.iter().zip(c.rows()) {
                let mut rec = vec![label.clone()];
                rec.extend(row.iter().map(cell));
                write_csv(&mut w, rec)?;
            }
            finish_csv(w)?
        }
        Format::Text => {
            let mut table: Vec<Vec<String>> = vec![std::iter::once("mu\\lambda".to_string())
                .chain(labels.iter().cloned())
                .collect()];
            for (label, row) in labels.iter().zip(c.rows()) {
                table.push(std::iter::once(label.clone()).chain(row.iter().map(cell)).collect());
            }
            aligned(&table)
        }
        Format::Latex => {
            let mut s = format!("% C(mu,lambda), k = {k}, rows and columns {}\n", labels.join(" "));
            s.push_str("\\begin{pmatrix}\n");
            for row in c.rows() {
                let cells: Vec<String> = row.iter().map(cell).collect();
                s.push_str(&cells.join(" & "));
                s.push_str(" \\\\\n");
            }
            s.push_str("\\end{pmatrix}\n");
            s
        }
    };
    Ok(out)
}

/// A number table over a range of indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberTableJson {
    pub family: Family,
    pub methods: Vec<String>,
    pub rows: Vec<NumberRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

pub fn number_notes(family: Family) -> Vec<String> {
    match family {
        Family::Buchstaber => vec![BUCHSTABER_CONVENTION.to_string()],
        _ => Vec::new(),
    }
}

/// Renders records computed with `methods`, one column per method plus an
/// agreement column.
pub fn render_numbers(family: Family, methods: &[&str], rows: &[NumberRecord], format: Format) -> Result<String> {
    let notes = number_notes(family);
    let mut header = vec!["k".to_string()];
    header.extend(methods.iter().map(|m| m.to_string()));
    header.push("agree".to_string());
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            let mut line = vec![r.k.to_string()];
            line.extend(methods.iter().map(|m| r.methods.get(*m).cloned().unwrap_or_default()));
            line.push(r.agree.to_string());
            line
        })
        .collect();
    let out = match format {
        Format::Json => to_json(&NumberTableJson {
            family,
            methods: methods.iter().map(|m| m.to_string()).collect(),
            rows: rows.to_vec(),
            notes,
        })?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            write_csv(&mut w, &header)?;
            for line in &body {
                write_csv(&mut w, line)?;
            }
            finish_csv(w)?
        }
        Format::Text => {
            let mut table = vec![header];
            table.extend(body);
            let mut s = aligned(&table);
            for n in &notes {
                s.push_str(&format!("note: {n}\n"));
            }
            s
        }
        Format::Latex => {
            let mut s = format!("\\begin{{tabular}}{{{}}}\n", "r".repeat(header.len()));
            s.push_str(&header.join(" & "));
            s.push_str(" \\\\\n\\hline\n");
            for line in &body {
                let cells: Vec<String> = line.iter().map(|c| latex_number(c)).collect();
                s.push_str(&cells.join(" & "));
                s.push_str(" \\\\\n");
            }
            s.push_str("\\end{tabular}\n");
            for n in &notes {
                s.push_str(&format!("% note: {n}\n"));
            }
            s
        }
    };
    Ok(out)
}

fn latex_number(cell: &str) -> String {
    match cell.split_once('/') {
        Some((n, d)) => {
            let (sign, n) = n.strip_prefix('-').map_or(("", n), |n| ("-", n));
            format!("${sign}\\frac{{{n}}}{{{d}}}$")
        }
        None => cell.to_string(),
    }
}

pub fn render_verify(report: &VerifyReport, format: Format) -> Result<String> {
    let out = match format {
        Format::Json => to_json(report)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            write_csv(&mut w, ["suite", "check", "range", "passed", "counterexample"])?;
            for c in &report.checks {
                write_csv(
                    &mut w,
                    [
                        c.suite.name(),
                        &c.name,
                        &c.range,
                        if c.passed { "true" } else { "false" },
                        c.counterexample.as_deref().unwrap_or(""),
                    ],
                )?;
            }
            finish_csv(w)?
        }
        Format::Text | Format::Latex => {
            let comment = if format == Format::Latex { "% " } else { "" };
            let table: Vec<Vec<String>> = report
                .checks
                .iter()
                .map(|c| {
                    let mut row = vec![
                        if c.passed { "PASS" } else { "FAIL" }.to_string(),
                        format!("{}/{}", c.suite, c.name),
                        format!("[{}]", c.range),
                    ];
                    if let Some(x) = &c.counterexample {
                        row.push(format!("counterexample: {x}"));
                    }
                    row
                })
                .collect();
            let mut s: String = aligned(&table).lines().map(|l| format!("{comment}{l}\n")).collect();
            for n in &report.notes {
                s.push_str(&format!("{comment}note: {n}\n"));
            }
            let failed = report.failures().count();
            s.push_str(&format!(
                "{comment}status: {} ({} checks, {failed} failed)\n",
                report.status,
                report.checks.len()
            ));
            s
        }
    };
    Ok(out)
}

/// Left-aligned columns separated by two spaces.
pub fn aligned(table: &[Vec<String>]) -> String {
    let cols = table.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            table
                .iter()
                .filter_map(|r| r.get(j))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in table {
        let mut line = String::new();
        for (j, c) in row.iter().enumerate() {
            if j > 0 {
                line.push_str("  ");
            }
            line.push_str(c);
            if j + 1 < row.len() {
                line.push_str(&" ".repeat(widths[j] - c.chars().count()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::InvalidArgument(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn write_csv<I, T>(w: &mut csv::Writer<Vec<u8>>, record: I) -> Result<()>
where
    I: IntoIterator<Item = T>,
    T: AsRef<[u8]>,
{
    w.write_record(record)
        .map_err(|e| Error::InvalidArgument(e.to_string()))
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String> {
    let bytes = w.into_inner().map_err(|e| Error::InvalidArgument(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::InvalidArgument(e.to_string()))
}
