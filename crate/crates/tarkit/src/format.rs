//! The drawing file: one JSON document
//!
//! ```json
//! {"n": 3, "edges": [[0, 1], [1, 2]], "positions": [["0", "0"], ["1/2", 3], [0.25, "1/2*sqrt3"]]}
//! ```
//!
//! A coordinate is an integer, a decimal (taken exactly as written) or a
//! string holding either of those, a fraction `p/q`, or an element of
//! `Q(√3)` written `a+b*sqrt3`. Written files always use strings in lowest
//! terms, so reading a written file gives back identical coordinates.
//! A graph file is the same document without `positions`.

use std::str::FromStr;

use serde_json::{json, Map, Value};
use tarkit_core::drawing::DrawingError;
use tarkit_core::graph::GraphError;
use tarkit_core::{Coord, Drawing, Graph, Point, Rat};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("field `{0}` missing or malformed")]
    Field(&'static str),
    #[error("edge {index}: expected a pair of vertex indices")]
    Edge { index: usize },
    #[error("vertex {vertex}: cannot read coordinate `{text}`")]
    Coordinate { vertex: usize, text: String },
    #[error("{got} positions for {n} vertices")]
    PositionCount { n: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Drawing(#[from] DrawingError),
}

/// Reads one coordinate in any accepted spelling.
pub fn parse_coord(text: &str) -> Option<Coord> {
    let t = text.trim();
    if let Some(body) = t.strip_suffix("*sqrt3") {
        // split `a+b` at the last sign that is not the leading one or part
        // of an exponent
        let bytes = body.as_bytes();
        let cut = (1..bytes.len())
            .rev()
            .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E' | b'/'));
        return match cut {
            Some(i) => {
                let a = parse_rat(&body[..i])?;
                let b = parse_rat(&body[i..])?;
                Some(Coord::new(a, b))
            }
            None => Some(Coord::new(Rat::from_integer(0.into()), parse_rat(body)?)),
        };
    }
    parse_rat(t).map(Coord::from_rat)
}

/// Reads `p`, `p/q` or a decimal with optional exponent, exactly.
pub fn parse_rat(text: &str) -> Option<Rat> {
    let t = text.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    if t.is_empty() {
        return None;
    }
    if !t.contains(['.', 'e', 'E']) {
        return Rat::from_str(t).ok();
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(i) => (&t[..i], t[i + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() || !(int.chars().chain(frac.chars())).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{}{}{}", if neg { "-" } else { "" }, if int.is_empty() { "0" } else { int }, frac);
    let shift = exp - frac.len() as i32;
    let pow = format!("1{}", "0".repeat(shift.unsigned_abs() as usize));
    let text = if shift >= 0 { format!("{digits}{}", &pow[1..]) } else { format!("{digits}/{pow}") };
    Rat::from_str(&text).ok()
}

/// Canonical spelling: `p`, `p/q`, `b*sqrt3` or `a+b*sqrt3`.
pub fn format_coord(c: &Coord) -> String {
    let (a, b) = (c.rational_part(), c.surd_part());
    if b == &Rat::from_integer(0.into()) {
        a.to_string()
    } else if a == &Rat::from_integer(0.into()) {
        format!("{b}*sqrt3")
    } else if b < &Rat::from_integer(0.into()) {
        format!("{a}{b}*sqrt3")
    } else {
        format!("{a}+{b}*sqrt3")
    }
}

fn read_header(v: &Value) -> Result<Graph, FormatError> {
    let n = v.get("n").and_then(Value::as_u64).ok_or(FormatError::Field("n"))? as usize;
    let edges = v.get("edges").and_then(Value::as_array).ok_or(FormatError::Field("edges"))?;
    let mut pairs = Vec::with_capacity(edges.len());
    for (index, e) in edges.iter().enumerate() {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .and_then(|p| Some((p[0].as_u64()? as usize, p[1].as_u64()? as usize)))
            .ok_or(FormatError::Edge { index })?;
        pairs.push(pair);
    }
    Ok(Graph::new(n, pairs)?)
}

fn coord_value(vertex: usize, v: &Value) -> Result<Coord, FormatError> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(x) => x.to_string(),
        other => other.to_string(),
    };
    parse_coord(&text).ok_or(FormatError::Coordinate { vertex, text })
}

/// Parses a graph file; `positions`, if present, are ignored.
pub fn read_graph(text: &str) -> Result<Graph, FormatError> {
    read_header(&serde_json::from_str(text)?)
}

/// Parses a drawing file. The drawing is not validated here.
pub fn read_drawing(text: &str) -> Result<Drawing, FormatError> {
    let v: Value = serde_json::from_str(text)?;
    let g = read_header(&v)?;
    let pos = v.get("positions").and_then(Value::as_array).ok_or(FormatError::Field("positions"))?;
    if pos.len() != g.n() {
        return Err(FormatError::PositionCount { n: g.n(), got: pos.len() });
    }
    let mut points = Vec::with_capacity(pos.len());
    for (vertex, p) in pos.iter().enumerate() {
        let xy = p.as_array().filter(|a| a.len() == 2).ok_or(FormatError::Coordinate { vertex, text: p.to_string() })?;
        points.push(Point { x: coord_value(vertex, &xy[0])?, y: coord_value(vertex, &xy[1])? });
    }
    Ok(Drawing::new(g, points)?)
}

fn header_json(g: &Graph) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("n".into(), json!(g.n()));
    m.insert("edges".into(), json!(g.edges().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>()));
    m
}

pub fn write_graph(g: &Graph) -> String {
    serde_json::to_string(&Value::Object(header_json(g))).expect("serializable") + "\n"
}

/// Serializes with one position per line, so diffs stay readable.
pub fn write_drawing(d: &Drawing) -> String {
    let mut out = String::from("{\n");
    out += &format!("  \"n\": {},\n", d.n());
    let edges: Vec<String> = d.graph().edges().iter().map(|&(a, b)| format!("[{a}, {b}]")).collect();
    out += &format!("  \"edges\": [{}],\n", edges.join(", "));
    out += "  \"positions\": [";
    for (i, p) in d.positions().iter().enumerate() {
        out += if i == 0 { "\n    " } else { ",\n    " };
        out += &format!("[{}, {}]", json!(format_coord(&p.x)), json!(format_coord(&p.y)));
    }
    out += if d.n() == 0 { "]\n}\n" } else { "\n  ]\n}\n" };
    out
}
