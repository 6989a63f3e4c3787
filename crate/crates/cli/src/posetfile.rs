//! Line-oriented poset files.
//!
//! ```text
//! poset M3          # optional name
//! elements: 0 a b c 1
//! cover 0 a         # a covers 0
//! ```
//!
//! `#` starts a comment and blank lines are ignored. Exactly one `elements:`
//! line is required and must precede every `cover` line.

use orderkit::canonical::canonically_ordered;
use orderkit::{BuildMode, FinitePoset, OrderError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PosetFileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Invalid { line: usize, source: OrderError },
    #[error(transparent)]
    Order(#[from] OrderError),
}

fn syntax<T>(line: usize, msg: impl Into<String>) -> Result<T, PosetFileError> {
    Err(PosetFileError::Syntax { line, msg: msg.into() })
}

fn valid_label(s: &str) -> bool {
    !s.is_empty() && !s.contains('#') && !s.chars().any(char::is_whitespace)
}

pub fn parse(text: &str) -> Result<FinitePoset, PosetFileError> {
    let mut name: Option<String> = None;
    let mut elements: Option<Vec<String>> = None;
    let mut covers: Vec<(String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let (keyword, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        let rest = rest.trim();
        if let Some(after) = body.strip_prefix("elements:") {
            if elements.is_some() {
                return syntax(line, "second `elements:` line");
            }
            let labels: Vec<String> = after.split_whitespace().map(str::to_string).collect();
            if labels.is_empty() {
                return syntax(line, "`elements:` lists no elements");
            }
            for (j, l) in labels.iter().enumerate() {
                if labels[..j].contains(l) {
                    return Err(PosetFileError::Invalid {
                        line,
                        source: OrderError::DuplicateLabel(l.clone()),
                    });
                }
            }
            elements = Some(labels);
            continue;
        }
        match keyword {
            "poset" => {
                if name.is_some() || elements.is_some() {
                    return syntax(line, "`poset` must be the first directive and appear once");
                }
                if rest.is_empty() {
                    return syntax(line, "`poset` needs a name");
                }
                name = Some(rest.to_string());
            }
            "cover" => {
                let Some(labels) = &elements else {
                    return syntax(line, "`cover` before `elements:`");
                };
                let args: Vec<&str> = rest.split_whitespace().collect();
                let [x, y] = args[..] else {
                    return syntax(line, "`cover` takes exactly two labels");
                };
                if x == y {
                    return syntax(line, format!("reflexive cover `{x} {x}`; covers are strict"));
                }
                for l in [x, y] {
                    if !labels.iter().any(|e| e == l) {
                        return Err(PosetFileError::Invalid {
                            line,
                            source: OrderError::UnknownLabel(l.to_string()),
                        });
                    }
                }
                covers.push((x.to_string(), y.to_string()));
            }
            other => return syntax(line, format!("unknown directive `{other}`")),
        }
    }
    let Some(labels) = elements else {
        return syntax(text.lines().count().max(1), "missing `elements:` line");
    };
    let name = name.unwrap_or_default();
    Ok(FinitePoset::build(&name, &labels, &covers, BuildMode::Covers)?)
}

/// Writes `p` with elements in canonical order and one line per Hasse cover.
pub fn emit(p: &FinitePoset) -> Result<String, PosetFileError> {
    if let Some(bad) = p.labels().iter().find(|l| !valid_label(l)) {
        return Err(PosetFileError::Order(OrderError::InvalidArgument(format!(
            "label `{bad}` cannot be written to a poset file"
        ))));
    }
    let q = canonically_ordered(p);
    let mut out = String::new();
    let name = q.name().trim();
    if !name.is_empty() && !name.contains('#') && !name.contains('\n') {
        out.push_str(&format!("poset {name}\n"));
    }
    out.push_str("elements:");
    for l in q.labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for (x, y) in q.hasse() {
        out.push_str(&format!("cover {} {}\n", q.label(x), q.label(y)));
    }
    Ok(out)
}
