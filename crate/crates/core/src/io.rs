//! Text formats.
//!
//! Graph file: a header line `n m` followed by `m` lines `u v` with 1-based
//! labels. Weights file: lines `v c_v`; vertices not listed cost 1. In both,
//! lines starting with `#` and blank lines are ignored.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::ParseError;
use crate::graph::{Graph, VertexWeights};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_fields(line: usize, text: &str) -> Result<(&str, &str), ParseError> {
    let mut it = text.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(ParseError::Malformed {
            line,
            message: format!("expected two fields, got {text:?}"),
        }),
    }
}

fn integer(line: usize, field: &str) -> Result<usize, ParseError> {
    field.parse().map_err(|_| ParseError::Malformed {
        line,
        message: format!("{field:?} is not a nonnegative integer"),
    })
}

fn label(line: usize, field: &str, n: usize) -> Result<usize, ParseError> {
    let label = integer(line, field)?;
    if label == 0 || label > n {
        return Err(ParseError::LabelOutOfRange { line, label, n });
    }
    Ok(label - 1)
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m) = two_fields(hline, header)?;
    let (n, m) = (integer(hline, n)?, integer(hline, m)?);

    let mut g = Graph::new(n);
    let mut seen = HashSet::new();
    for (line, text) in lines {
        let (u, v) = two_fields(line, text)?;
        let (u, v) = (label(line, u, n)?, label(line, v, n)?);
        if u == v {
            return Err(ParseError::SelfLoop { line, label: u + 1 });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: u + 1,
                v: v + 1,
            });
        }
        if g.edge_count() == m {
            return Err(ParseError::Malformed {
                line,
                message: format!("more than the {m} edges announced in the header"),
            });
        }
        g.add_edge(u, v).expect("edge validated above");
    }
    if g.edge_count() != m {
        return Err(ParseError::EdgeCount {
            expected: m,
            found: g.edge_count(),
        });
    }
    Ok(g)
}

/// Canonical rendering; `parse_graph(&render_graph(g)) == g`.
pub fn render_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Decimal costs scaled by `10^scale` to exact integers.
#[derive(Clone, Debug, PartialEq)]
pub struct DecimalWeights {
    pub weights: VertexWeights<i64>,
    pub scale: u32,
}

impl DecimalWeights {
    pub fn unit(n: usize) -> Self {
        DecimalWeights {
            weights: VertexWeights::ones(n),
            scale: 0,
        }
    }

    /// Renders a value in the scaled domain back as a decimal string.
    pub fn format(&self, value: i64) -> String {
        format_scaled(value, self.scale)
    }

    /// Parses a decimal into the scaled domain, if it is representable there.
    pub fn parse_value(&self, text: &str) -> Option<i64> {
        let (digits, frac) = split_decimal(text)?;
        if frac > self.scale {
            // Extra fractional digits must be zeros.
            let cut = digits.len() - (frac - self.scale) as usize;
            if digits[cut..].bytes().any(|b| b != b'0') {
                return None;
            }
            return digits[..cut].parse::<i64>().ok();
        }
        let raw: i64 = digits.parse().ok()?;
        raw.checked_mul(10i64.checked_pow(self.scale - frac)?)
    }
}

pub fn format_scaled(value: i64, scale: u32) -> String {
    if scale == 0 {
        return value.to_string();
    }
    let unit = 10i64.pow(scale);
    let sign = if value < 0 { "-" } else { "" };
    let abs = value.unsigned_abs();
    let int = abs / unit as u64;
    let frac = format!("{:0width$}", abs % unit as u64, width = scale as usize);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Splits `"12.340"` into digits `"12340"` and 3 fractional digits.
fn split_decimal(text: &str) -> Option<(String, u32)> {
    let (int, frac) = match text.split_once('.') {
        Some((i, f)) => (i, f),
        None => (text, ""),
    };
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{}{}", if int.is_empty() { "0" } else { int }, frac);
    Some((digits, frac.len() as u32))
}

pub fn parse_weights(text: &str, n: usize) -> Result<DecimalWeights, ParseError> {
    let mut entries: Vec<Option<(String, u32)>> = vec![None; n];
    let mut scale = 0u32;
    for (line, text) in content_lines(text) {
        let (v, c) = two_fields(line, text)?;
        let v = label(line, v, n)?;
        if c.starts_with('-') {
            return Err(ParseError::NegativeWeight { line, label: v + 1 });
        }
        let parsed = split_decimal(c).ok_or_else(|| ParseError::Malformed {
            line,
            message: format!("{c:?} is not a nonnegative decimal"),
        })?;
        if entries[v].is_some() {
            return Err(ParseError::Malformed {
                line,
                message: format!("cost for vertex {} given twice", v + 1),
            });
        }
        scale = scale.max(parsed.1);
        entries[v] = Some(parsed);
    }
    if scale > 18 {
        return Err(ParseError::ScaleOverflow);
    }
    let costs = entries
        .into_iter()
        .map(|entry| {
            let (digits, frac) = entry.unwrap_or_else(|| ("1".to_string(), 0));
            let raw: i64 = digits.parse().map_err(|_| ParseError::ScaleOverflow)?;
            raw.checked_mul(10i64.pow(scale - frac))
                .ok_or(ParseError::ScaleOverflow)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DecimalWeights {
        weights: VertexWeights::new(costs).expect("costs are nonnegative"),
        scale,
    })
}
