//! Output documents and their JSON, CSV and LaTeX emitters.
//!
//! Every scalar is an exact canonical string. Polynomial rows list their
//! nonzero terms in ascending powers.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde::Serialize;

use crate::algebra::Poly;
use crate::identities::Flag;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub pow: usize,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Row {
    pub index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<Term>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Row {
    pub fn value(index: usize, value: impl Into<String>) -> Self {
        Row { index, id: None, value: Some(value.into()), poly: None, detail: None }
    }

    pub fn poly(index: usize, terms: Vec<Term>) -> Self {
        Row { index, id: None, value: None, poly: Some(terms), detail: None }
    }
}

/// Nonzero terms of `p`, ascending.
pub fn terms<S: Scalar>(p: &Poly<S>) -> Vec<Term> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(pow, c)| Term { pow, coeff: c.render() })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Document {
    pub command: String,
    pub params: serde_json::Map<String, serde_json::Value>,
    pub rows: Vec<Row>,
    pub flags: Vec<Flag>,
}

impl Document {
    pub fn new(command: &str) -> Self {
        Document { command: command.to_string(), params: serde_json::Map::new(), rows: Vec::new(), flags: Vec::new() }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
            Format::Latex => self.latex(),
        }
    }

    fn is_poly(&self) -> bool {
        self.rows.iter().any(|r| r.poly.is_some())
    }

    fn csv(&self) -> String {
        let mut out = String::new();
        let has_id = self.rows.iter().any(|r| r.id.is_some());
        if self.is_poly() {
            out.push_str("index,pow,coeff\n");
            for r in &self.rows {
                for t in r.poly.iter().flatten() {
                    let _ = writeln!(out, "{},{},{}", r.index, t.pow, csv_field(&t.coeff));
                }
            }
        } else if has_id {
            out.push_str("index,id,value,detail\n");
            for r in &self.rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    r.index,
                    csv_field(r.id.as_deref().unwrap_or("")),
                    csv_field(r.value.as_deref().unwrap_or("")),
                    csv_field(r.detail.as_deref().unwrap_or(""))
                );
            }
        } else {
            out.push_str("index,value\n");
            for r in &self.rows {
                let _ = writeln!(out, "{},{}", r.index, csv_field(r.value.as_deref().unwrap_or("")));
            }
        }
        out
    }

    fn latex(&self) -> String {
        let mut out = String::from("\\begin{tabular}{r|l}\n");
        let _ = writeln!(out, "$n$ & {} \\\\\n\\hline", latex_text(&self.command));
        for r in &self.rows {
            let body = match (&r.poly, &r.value) {
                (Some(terms), _) => format!("${}$", latex_poly(terms)),
                (None, Some(v)) if r.id.is_some() => {
                    format!("{} & {}", latex_text(r.id.as_deref().unwrap_or("")), latex_text(v))
                }
                (None, Some(v)) => format!("${}$", latex_scalar(v)),
                (None, None) => String::new(),
            };
            let _ = writeln!(out, "{} & {} \\\\", r.index, body);
        }
        out.push_str("\\end{tabular}\n");
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn latex_text(s: &str) -> String {
    format!("\\texttt{{{}}}", s.replace('_', "\\_"))
}

/// Strip one pair of enclosing parentheses.
fn strip_parens(s: &str) -> &str {
    s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s)
}

/// `q^12` → `q^{12}`, `a*b` → `a b`, `num / den` → `\frac{num}{den}`.
pub fn latex_scalar(s: &str) -> String {
    if let Some((base, power)) = split_symbolic(s) {
        let inner = latex_scalar(strip_parens(base));
        let wrapped = if base.starts_with('(') { format!("\\left({inner}\\right)") } else { inner };
        return format!("{wrapped} {}", latex_scalar(power));
    }
    if let Some((num, den)) = s.split_once(" / ") {
        return format!("\\frac{{{}}}{{{}}}", latex_scalar(strip_parens(num)), latex_scalar(strip_parens(den)));
    }
    if let Some((p, q)) = s.split_once('/').filter(|_| !s.contains('q')) {
        let (sign, p) = p.strip_prefix('-').map_or(("", p), |p| ("-", p));
        return format!("{sign}\\frac{{{p}}}{{{q}}}");
    }
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '^' => {
                let mut exp = String::new();
                while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    exp.push(*d);
                    chars.next();
                }
                let _ = write!(out, "^{{{exp}}}");
            }
            '*' => out.push(' '),
            _ => out.push(c),
        }
    }
    out
}

/// `c*s^k` → (`c`, `s^k`).
fn split_symbolic(s: &str) -> Option<(&str, &str)> {
    let i = s.rfind("*s")?;
    let power = &s[i + 1..];
    let tail = power.strip_prefix('s')?;
    (tail.is_empty() || tail.strip_prefix('^').is_some_and(|e| e.chars().all(|c| c.is_ascii_digit())))
        .then(|| (&s[..i], power))
}

fn latex_poly(terms: &[Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let c = latex_scalar(&t.coeff);
        let x = match t.pow {
            0 => String::new(),
            1 => "x".into(),
            p => format!("x^{{{p}}}"),
        };
        let compound = split_symbolic(&t.coeff).is_none() && (t.coeff.contains(" + ") || t.coeff.contains(" - "));
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) if !compound => (true, m.to_string()),
            _ => (false, c),
        };
        let coeff = match (mag.as_str(), t.pow) {
            ("1", p) if p > 0 => String::new(),
            (m, p) if compound && p > 0 => format!("\\left({m}\\right)"),
            (m, 0) => m.to_string(),
            (m, _) => format!("{m} "),
        };
        let sep = match (i, neg) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        };
        let _ = write!(out, "{sep}{coeff}{x}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn latex_scalars() {
        assert_eq!(latex_scalar("q / (1 + q)"), "\\frac{q}{1 + q}");
        assert_eq!(latex_scalar("-2/3"), "-\\frac{2}{3}");
        assert_eq!(latex_scalar("q^12 + 3*q^2"), "q^{12} + 3 q^{2}");
        assert_eq!(latex_scalar("(-q / (1 + q))*s"), "\\left(\\frac{-q}{1 + q}\\right) s");
        assert_eq!(latex_scalar("3*s^2"), "3 s^{2}");
    }

    #[test]
    fn csv_quotes_commas() {
        let mut d = Document::new("t");
        d.rows.push(Row::value(0, "a,b"));
        assert_eq!(d.render(Format::Csv), "index,value\n0,\"a,b\"\n");
    }

    #[test]
    fn latex_polynomial_rows() {
        let terms = vec![
            Term { pow: 0, coeff: "-2".into() },
            Term { pow: 2, coeff: "1".into() },
        ];
        assert_eq!(latex_poly(&terms), "-2 + x^{2}");
    }
}
