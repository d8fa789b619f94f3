//! Output views and the json / markdown / latex / csv emitters.

use std::fmt::Write as _;

use clifford_width::geometry::{
    projected_area, CliffordHypersurface, Field, ProjectedClifford, ProjectiveSpace,
};
use clifford_width::spectral::{IndexReport, SpectrumEntry};
use clifford_width::width::{
    CandidateKind, ValueKind, VerificationRow, WidthCandidate, WidthReport,
};
use clifford_width::{Error, ExactReal, Rational};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::Format;

const UPPER_BOUND_BANNER: &str =
    "UPPER BOUND: only Clifford candidates are known in complex projective space; \
the true width may be smaller.";

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct CandidateView {
    kind: &'static str,
    n1: Option<u32>,
    n2: Option<u32>,
    exact: String,
    decimal: String,
    doubled: bool,
    effective: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct WidthView {
    space: String,
    value_kind: String,
    candidates: Vec<CandidateView>,
    winner: usize,
    exact: String,
    decimal: String,
    paper_backed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
}

fn candidate_view(c: &WidthCandidate, places: u32) -> CandidateView {
    let (n1, n2) = c.clifford_dims().unzip();
    CandidateView {
        kind: match c.kind {
            CandidateKind::Clifford(_) => "Clifford",
            CandidateKind::TotallyGeodesic { .. } => "TotallyGeodesic",
        },
        n1,
        n2,
        exact: c.area.to_canonical_string(),
        decimal: c.area.to_fixed(places),
        doubled: c.doubled,
        effective: c.effective.to_canonical_string(),
    }
}

fn width_view(r: &WidthReport, places: u32) -> WidthView {
    WidthView {
        space: r.space.to_string(),
        value_kind: r.value_kind.to_string(),
        candidates: r
            .candidates
            .iter()
            .map(|c| candidate_view(c, places))
            .collect(),
        winner: r.winner,
        exact: r.value.to_canonical_string(),
        decimal: r.decimal(places),
        paper_backed: r.paper_backed,
        note: r.note.clone(),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("views serialize");
    s.push('\n');
    s
}

fn csv<R: AsRef<[u8]>>(header: &[&str], rows: impl IntoIterator<Item = Vec<R>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn markdown_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "| {} |", header.join(" | "));
    let _ = writeln!(out, "|{}", " --- |".repeat(header.len()));
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| c.replace('|', "\\|")).collect();
        let _ = writeln!(out, "| {} |", cells.join(" | "));
    }
    out
}

fn yes_no(b: bool) -> String {
    if b { "yes" } else { "no" }.to_string()
}

// ---- LaTeX ----------------------------------------------------------------

fn latex_frac(num: &str, den: &str) -> String {
    format!("\\frac{{{num}}}{{{den}}}")
}

fn latex_rat(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        latex_frac(&q.numer().to_string(), &q.denom().to_string())
    }
}

fn latex_pi(half_exp: i64) -> String {
    match half_exp {
        0 => String::new(),
        2 => "\\pi".into(),
        p if p % 2 == 0 => format!("\\pi^{{{}}}", p / 2),
        p => format!("\\pi^{{{p}/2}}"),
    }
}

/// `\frac{3\sqrt{3}\pi^{2}}{8}` for integer radicands, moved into the
/// denominator when it divides it (`\frac{8\pi^{2}}{3\sqrt{3}}`), and
/// `\frac{24}{25}\sqrt{\frac{3}{5}}\pi^{3}` for fractional ones.
pub fn latex_exact(x: &ExactReal) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let coeff = x.coeff();
    let sign = if x.signum() < 0 { "-" } else { "" };
    let num = coeff.numer().magnitude().to_string();
    let den = coeff.denom().to_string();
    let radicand = x.radicand();
    let pi = latex_pi(x.pi_half_exp());
    let one = Rational::from_integer(1.into());
    let body =
        if radicand.is_integer() && radicand != one && (coeff.denom() % radicand.numer()).is_zero()
        {
            let mut top = pi.clone();
            if num != "1" || top.is_empty() {
                top = format!("{num}{top}");
            }
            let rest = coeff.denom() / radicand.numer();
            let lead = if rest.is_one() {
                String::new()
            } else {
                rest.to_string()
            };
            latex_frac(&top, &format!("{lead}\\sqrt{{{}}}", radicand.numer()))
        } else if radicand.is_integer() {
            let root = if radicand == one {
                String::new()
            } else {
                format!("\\sqrt{{{}}}", radicand.numer())
            };
            let mut top = format!("{root}{pi}");
            if num != "1" || top.is_empty() {
                top = format!("{num}{top}");
            }
            if den == "1" {
                top
            } else {
                latex_frac(&top, &den)
            }
        } else {
            let lead = if den == "1" {
                if num == "1" {
                    String::new()
                } else {
                    num
                }
            } else {
                latex_frac(&num, &den)
            };
            format!("{lead}\\sqrt{{{}}}{pi}", latex_rat(&radicand))
        };
    format!("{sign}{body}")
}

fn latex_field(f: Field) -> &'static str {
    match f {
        Field::Real => "\\mathbb{R}",
        Field::Complex => "\\mathbb{C}",
        Field::Quaternionic => "\\mathbb{H}",
    }
}

/// Radii written as √(n_i/(n1+n2)) without reduction, as in the classical tables.
fn latex_clifford(p: &ProjectedClifford) -> String {
    let b = p.base();
    let n = b.dim();
    format!(
        "|\\Pi_{{{}}}(S^{{{}}}_{{\\sqrt{{{}}}}}\\times S^{{{}}}_{{\\sqrt{{{}}}}})|",
        latex_field(p.target().field()),
        b.n1(),
        latex_frac(&b.n1().to_string(), &n.to_string()),
        b.n2(),
        latex_frac(&b.n2().to_string(), &n.to_string()),
    )
}

fn latex_candidate(c: &WidthCandidate) -> String {
    match &c.kind {
        CandidateKind::Clifford(p) => latex_clifford(p),
        CandidateKind::TotallyGeodesic { dim } => format!("2|\\mathbb{{R}}P^{{{dim}}}|"),
    }
}

/// One brace table per field, rows in input order.
fn width_latex(reports: &[WidthReport]) -> String {
    let mut out = String::new();
    for field in [Field::Real, Field::Complex, Field::Quaternionic] {
        let rows: Vec<&WidthReport> = reports
            .iter()
            .filter(|r| r.space.field() == field)
            .collect();
        if rows.is_empty() {
            continue;
        }
        let relation = if rows.iter().any(|r| r.value_kind == ValueKind::UpperBound) {
            "\\leq"
        } else {
            "="
        };
        let _ = writeln!(out, "\\begin{{center}}");
        let _ = writeln!(
            out,
            "$\\displaystyle W({}P^{{i}})=|\\Sigma_{{i}}|{relation}\\left\\{{ \\begin{{array}}{{lcc}}",
            latex_field(field)
        );
        for (i, r) in rows.iter().enumerate() {
            let end = if i + 1 < rows.len() { " \\\\" } else { "" };
            let _ = writeln!(
                out,
                "              {}={} &  {{\\rm if}}  & i={}{end}",
                latex_candidate(r.winner()),
                latex_exact(&r.value),
                r.space.projective_dim()
            );
        }
        let _ = writeln!(out, "             \\end{{array}}");
        let _ = writeln!(out, "   \\right.$");
        let _ = writeln!(out, "\\end{{center}}");
    }
    out
}

// ---- width ----------------------------------------------------------------

pub fn width(reports: &[WidthReport], format: Format, places: u32) -> String {
    match format {
        Format::Json if reports.len() == 1 => json(&width_view(&reports[0], places)),
        Format::Json => json(
            &reports
                .iter()
                .map(|r| width_view(r, places))
                .collect::<Vec<_>>(),
        ),
        Format::Latex => width_latex(reports),
        Format::Csv => csv(
            &[
                "space",
                "valueKind",
                "kind",
                "n1",
                "n2",
                "exact",
                "decimal",
                "doubled",
                "effective",
                "winner",
                "paperBacked",
            ],
            reports.iter().flat_map(|r| {
                r.candidates.iter().enumerate().map(move |(i, c)| {
                    let v = candidate_view(c, places);
                    vec![
                        r.space.to_string(),
                        r.value_kind.to_string(),
                        v.kind.to_string(),
                        v.n1.map(|n| n.to_string()).unwrap_or_default(),
                        v.n2.map(|n| n.to_string()).unwrap_or_default(),
                        v.exact,
                        v.decimal,
                        v.doubled.to_string(),
                        v.effective,
                        (i == r.winner).to_string(),
                        r.paper_backed.to_string(),
                    ]
                })
            }),
        ),
        Format::Markdown => reports
            .iter()
            .map(|r| width_markdown(r, places))
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

fn width_markdown(r: &WidthReport, places: u32) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "## Width of {}\n", r.space);
    if r.value_kind == ValueKind::UpperBound {
        let _ = writeln!(out, "> **{UPPER_BOUND_BANNER}**\n");
    }
    if let Some(note) = &r.note {
        let _ = writeln!(out, "> Note: {note}\n");
    }
    let rows: Vec<Vec<String>> = r
        .candidates
        .iter()
        .enumerate()
        .map(|(i, c)| {
            vec![
                format!(
                    "{}{}",
                    c.label(),
                    if i == r.winner { " **(winner)**" } else { "" }
                ),
                format!("`{}`", c.area),
                yes_no(c.doubled),
                format!("`{}`", c.effective),
                c.effective.to_fixed(places),
            ]
        })
        .collect();
    out.push_str(&markdown_table(
        &["candidate", "area", "doubled", "effective", "decimal"],
        &rows,
    ));
    let relation = match r.value_kind {
        ValueKind::Exact => "=",
        ValueKind::UpperBound => "<=",
    };
    let _ = writeln!(
        out,
        "\n**W({}) {relation} {} ≈ {}** ({})",
        r.space,
        r.value,
        r.decimal(places),
        r.value_kind
    );
    out
}

// ---- enumerate ------------------------------------------------------------

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct EnumerateRow {
    n1: u32,
    n2: u32,
    r1_sq: String,
    r2_sq: String,
    area: String,
    decimal: String,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct EnumerateView {
    space: String,
    candidates: Vec<EnumerateRow>,
}

pub fn enumerate(
    space: &ProjectiveSpace,
    list: &[ProjectedClifford],
    format: Format,
    places: u32,
) -> Result<String, Error> {
    let rows = list
        .iter()
        .map(|p| {
            let area = projected_area(p)?;
            Ok(EnumerateRow {
                n1: p.base().n1(),
                n2: p.base().n2(),
                r1_sq: p.base().r1_sq().to_string(),
                r2_sq: p.base().r2_sq().to_string(),
                decimal: area.to_fixed(places),
                area: area.to_canonical_string(),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(match format {
        Format::Json => json(&EnumerateView {
            space: space.to_string(),
            candidates: rows,
        }),
        Format::Csv => csv(
            &["space", "n1", "n2", "r1Sq", "r2Sq", "area", "decimal"],
            rows.into_iter().map(|r| {
                vec![
                    space.to_string(),
                    r.n1.to_string(),
                    r.n2.to_string(),
                    r.r1_sq,
                    r.r2_sq,
                    r.area,
                    r.decimal,
                ]
            }),
        ),
        Format::Markdown => {
            let mut out = format!("## Minimal Clifford hypersurfaces in {space}\n\n");
            let rows: Vec<Vec<String>> = rows
                .into_iter()
                .map(|r| {
                    vec![
                        r.n1.to_string(),
                        r.n2.to_string(),
                        r.r1_sq,
                        r.r2_sq,
                        format!("`{}`", r.area),
                        r.decimal,
                    ]
                })
                .collect();
            out.push_str(&markdown_table(
                &["n1", "n2", "R1^2", "R2^2", "area", "decimal"],
                &rows,
            ));
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{array}{lcl}\n");
            for (i, p) in list.iter().enumerate() {
                let end = if i + 1 < list.len() { " \\\\" } else { "" };
                let _ = writeln!(
                    out,
                    "  {} &=& {}{end}",
                    latex_clifford(p),
                    latex_exact(&projected_area(p)?)
                );
            }
            out.push_str("\\end{array}\n");
            out
        }
    })
}

// ---- index ----------------------------------------------------------------

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct EntryView {
    k1: u32,
    k2: u32,
    beta: String,
    multiplicity: String,
    even_degree: bool,
}

fn entry_view(e: &SpectrumEntry) -> EntryView {
    EntryView {
        k1: e.k1,
        k2: e.k2,
        beta: e.beta.to_string(),
        // u128 does not fit a JSON number losslessly
        multiplicity: e.multiplicity.to_string(),
        even_degree: e.even_degree,
    }
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct IndexView {
    clifford: String,
    target: Option<String>,
    sigma_sq: String,
    threshold: String,
    sphere_index: String,
    quotient_index: Option<String>,
    /// Informational; the index counts do not depend on it.
    sphere_nullity: String,
    entries_below: Vec<EntryView>,
    entries_at_threshold: Vec<EntryView>,
}

pub fn index(
    base: &CliffordHypersurface,
    target: Option<&ProjectiveSpace>,
    r: &IndexReport,
    format: Format,
) -> String {
    let view = IndexView {
        clifford: base.to_string(),
        target: target.map(ToString::to_string),
        sigma_sq: r.sigma_sq.to_string(),
        threshold: r.threshold.to_string(),
        sphere_index: r.sphere_index.to_string(),
        quotient_index: r.quotient_index.map(|q| q.to_string()),
        sphere_nullity: r.sphere_nullity.to_string(),
        entries_below: r.entries_below.iter().map(entry_view).collect(),
        entries_at_threshold: r.entries_at_threshold.iter().map(entry_view).collect(),
    };
    match format {
        Format::Json => json(&view),
        Format::Csv => csv(
            &[
                "clifford",
                "target",
                "sigmaSq",
                "threshold",
                "sphereIndex",
                "quotientIndex",
                "sphereNullity",
            ],
            [vec![
                view.clifford,
                view.target.unwrap_or_default(),
                view.sigma_sq,
                view.threshold,
                view.sphere_index,
                view.quotient_index.unwrap_or_default(),
                view.sphere_nullity,
            ]],
        ),
        Format::Markdown => {
            let mut out = format!("## Index of {}", view.clifford);
            if let Some(t) = &view.target {
                let _ = write!(out, " in {t}");
            }
            out.push_str("\n\n");
            let mut rows = vec![
                vec!["|sigma|^2".to_string(), view.sigma_sq],
                vec!["Jacobi threshold".to_string(), view.threshold],
                vec!["sphere index".to_string(), view.sphere_index],
            ];
            if let Some(q) = view.quotient_index {
                rows.push(vec!["quotient index".to_string(), q]);
            }
            rows.push(vec![
                "sphere nullity (informational)".to_string(),
                view.sphere_nullity,
            ]);
            out.push_str(&markdown_table(&["quantity", "value"], &rows));
            out.push_str("\nEigenvalues below the threshold:\n\n");
            out.push_str(&entries_markdown(&r.entries_below));
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{array}{lc}\n");
            let _ = writeln!(out, "  |\\sigma|^2 & {} \\\\", latex_rat(&r.sigma_sq));
            let _ = writeln!(
                out,
                "  \\text{{threshold}} & {} \\\\",
                latex_rat(&r.threshold)
            );
            match r.quotient_index {
                Some(q) => {
                    let _ = writeln!(out, "  \\mathrm{{Ind}}_{{S}} & {} \\\\", r.sphere_index);
                    let _ = writeln!(out, "  \\mathrm{{Ind}} & {q}");
                }
                None => {
                    let _ = writeln!(out, "  \\mathrm{{Ind}}_{{S}} & {}", r.sphere_index);
                }
            }
            out.push_str("\\end{array}\n");
            out
        }
    }
}

fn entries_markdown(entries: &[SpectrumEntry]) -> String {
    let rows: Vec<Vec<String>> = entries
        .iter()
        .map(|e| {
            vec![
                e.k1.to_string(),
                e.k2.to_string(),
                e.beta.to_string(),
                e.multiplicity.to_string(),
                yes_no(e.even_degree),
            ]
        })
        .collect();
    markdown_table(&["k1", "k2", "beta", "multiplicity", "even degree"], &rows)
}

// ---- spectrum -------------------------------------------------------------

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct SpectrumView {
    clifford: String,
    below: String,
    entries: Vec<EntryView>,
}

pub fn spectrum(
    base: &CliffordHypersurface,
    bound: &Rational,
    entries: &[SpectrumEntry],
    format: Format,
) -> String {
    match format {
        Format::Json => json(&SpectrumView {
            clifford: base.to_string(),
            below: bound.to_string(),
            entries: entries.iter().map(entry_view).collect(),
        }),
        Format::Csv => csv(
            &["k1", "k2", "beta", "multiplicity", "evenDegree"],
            entries.iter().map(|e| {
                vec![
                    e.k1.to_string(),
                    e.k2.to_string(),
                    e.beta.to_string(),
                    e.multiplicity.to_string(),
                    e.even_degree.to_string(),
                ]
            }),
        ),
        Format::Markdown => format!(
            "## Spectrum of {base} below {bound}\n\n{}",
            entries_markdown(entries)
        ),
        Format::Latex => {
            let mut out = String::from("\\begin{array}{ccc}\n  k_1 & k_2 & \\beta \\\\\n");
            for (i, e) in entries.iter().enumerate() {
                let end = if i + 1 < entries.len() { " \\\\" } else { "" };
                let _ = writeln!(out, "  {} & {} & {}{end}", e.k1, e.k2, latex_rat(&e.beta));
            }
            out.push_str("\\end{array}\n");
            out
        }
    }
}

// ---- verify ---------------------------------------------------------------

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VerifyRowView {
    claim: String,
    expected: String,
    computed: String,
    decimal: String,
    pass: bool,
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct VerifyView {
    passed: usize,
    total: usize,
    rows: Vec<VerifyRowView>,
}

pub fn verify(rows: &[VerificationRow], format: Format, places: u32) -> String {
    let views: Vec<VerifyRowView> = rows
        .iter()
        .map(|r| VerifyRowView {
            claim: r.claim.clone(),
            expected: r.expected.to_canonical_string(),
            computed: r.computed.to_canonical_string(),
            decimal: r.computed.to_fixed(places),
            pass: r.pass,
        })
        .collect();
    let passed = views.iter().filter(|v| v.pass).count();
    match format {
        Format::Json => json(&VerifyView {
            passed,
            total: views.len(),
            rows: views,
        }),
        Format::Csv => csv(
            &["claim", "expected", "computed", "decimal", "pass"],
            views.into_iter().map(|v| {
                vec![
                    v.claim,
                    v.expected,
                    v.computed,
                    v.decimal,
                    v.pass.to_string(),
                ]
            }),
        ),
        Format::Markdown => {
            let table: Vec<Vec<String>> = views
                .into_iter()
                .map(|v| {
                    vec![
                        v.claim,
                        format!("`{}`", v.computed),
                        v.decimal,
                        if v.pass { "PASS" } else { "FAIL" }.to_string(),
                    ]
                })
                .collect();
            let mut out = String::from("## Reference values\n\n");
            out.push_str(&markdown_table(
                &["claim", "computed", "decimal", "status"],
                &table,
            ));
            let _ = writeln!(out, "\n{passed}/{} passed", rows.len());
            out
        }
        Format::Latex => {
            let mut out = String::from("\\begin{array}{lcc}\n");
            for (i, r) in rows.iter().enumerate() {
                let end = if i + 1 < rows.len() { " \\\\" } else { "" };
                let mark = if r.pass { "\\checkmark" } else { "\\times" };
                let _ = writeln!(
                    out,
                    "  {} & {} & {mark}{end}",
                    latex_exact(&r.computed),
                    latex_exact(&r.expected)
                );
            }
            out.push_str("\\end{array}\n");
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> String {
        latex_exact(&s.parse().unwrap())
    }

    #[test]
    fn latex_values_match_printed_forms() {
        assert_eq!(l("1 * pi^2"), "\\pi^{2}");
        assert_eq!(l("2 * pi^2"), "2\\pi^{2}");
        assert_eq!(l("1/4 * pi^4"), "\\frac{\\pi^{4}}{4}");
        assert_eq!(l("8/9 * sqrt(3) * pi^2"), "\\frac{8\\pi^{2}}{3\\sqrt{3}}");
        assert_eq!(
            l("128/375 * sqrt(5) * pi^3"),
            "\\frac{128\\pi^{3}}{75\\sqrt{5}}"
        );
        assert_eq!(l("1/2 * sqrt(2)"), "\\frac{1}{\\sqrt{2}}");
        assert_eq!(l("3/8 * sqrt(3) * pi^2"), "\\frac{3\\sqrt{3}\\pi^{2}}{8}");
        assert_eq!(
            l("24/25 * sqrt(3/5) * pi^3"),
            "\\frac{24}{25}\\sqrt{\\frac{3}{5}}\\pi^{3}"
        );
        assert_eq!(l("-1/2"), "-\\frac{1}{2}");
        assert_eq!(l("1 * pi^(3/2)"), "\\pi^{3/2}");
        assert_eq!(l("0"), "0");
    }
}
