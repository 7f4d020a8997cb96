//! Text and JSON forms of tables and permutations.
//!
//! Table text: optional `#` comment lines, the order `n`, then `n` rows of
//! `n` whitespace-separated labels in `1..=n`. JSON: `{"order": n, "table": [[..], ..]}`.
//! Permutations: image notation `3 1 2` or cycle notation `(1 5 2)(3 4)`.

use std::fmt::Write as _;

use qloop_core::{FiniteMagma, Permutation};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// JSON table document, also the JSON output form of every table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl TableDoc {
    pub fn new(m: &FiniteMagma) -> Self {
        TableDoc { order: m.order(), table: m.rows() }
    }
}

struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

fn tokens(text: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim_start().starts_with('#') {
            continue;
        }
        let mut offset = 0;
        for piece in line.split_inclusive(char::is_whitespace) {
            let word = piece.trim_end();
            if !word.is_empty() {
                out.push(Token { text: word, line: i + 1, column: offset + 1 });
            }
            offset += piece.len();
        }
    }
    out
}

fn number(t: &Token<'_>) -> Result<usize, ParseError> {
    t.text.parse().map_err(|_| err(t.line, t.column, format!("expected a positive integer, found {:?}", t.text)))
}

/// Parses either form; JSON is recognised by a leading `{`.
pub fn parse_table(text: &str) -> Result<FiniteMagma, ParseError> {
    if text.trim_start().starts_with('{') {
        return parse_json_table(text);
    }
    let toks = tokens(text);
    let Some(first) = toks.first() else {
        return Err(err(1, 1, "empty input: expected the order"));
    };
    let n = number(first)?;
    if n == 0 || n > qloop_core::MAX_ORDER {
        return Err(err(first.line, first.column, format!("order {n} outside 1..={}", qloop_core::MAX_ORDER)));
    }
    let body = &toks[1..];
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut current_line = None;
    for t in body {
        if current_line != Some(t.line) {
            if let (Some(line), Some(row)) = (current_line, rows.last()) {
                if row.len() != n {
                    return Err(err(line, 1, format!("row {} has {} entries, expected {n}", rows.len(), row.len())));
                }
            }
            if rows.len() == n {
                return Err(err(t.line, t.column, format!("more than {n} rows")));
            }
            rows.push(Vec::with_capacity(n));
            current_line = Some(t.line);
        }
        let v = number(t)?;
        if v == 0 || v > n {
            return Err(err(t.line, t.column, format!("label {v} outside 1..={n}")));
        }
        let row = rows.last_mut().expect("row started");
        if row.len() == n {
            return Err(err(t.line, t.column, format!("row {} has more than {n} entries", rows.len())));
        }
        row.push(v);
    }
    if let Some(row) = rows.last() {
        if row.len() != n {
            let line = current_line.unwrap_or(1);
            return Err(err(line, 1, format!("row {} has {} entries, expected {n}", rows.len(), row.len())));
        }
    }
    if rows.len() != n {
        let line = body.last().map_or(first.line, |t| t.line);
        return Err(err(line + 1, 1, format!("found {} rows, expected {n}", rows.len())));
    }
    FiniteMagma::from_rows(&rows).map_err(|e| err(first.line, first.column, e.to_string()))
}

fn parse_json_table(text: &str) -> Result<FiniteMagma, ParseError> {
    let doc: TableDoc =
        serde_json::from_str(text).map_err(|e| err(e.line(), e.column(), format!("invalid JSON table: {e}")))?;
    if doc.table.len() != doc.order {
        return Err(err(1, 1, format!("\"table\" has {} rows but \"order\" is {}", doc.table.len(), doc.order)));
    }
    for (i, row) in doc.table.iter().enumerate() {
        if row.len() != doc.order {
            return Err(err(1, 1, format!("row {} has {} entries, expected {}", i + 1, row.len(), doc.order)));
        }
    }
    FiniteMagma::from_rows(&doc.table).map_err(|e| err(1, 1, e.to_string()))
}

/// Parses a permutation of degree `degree`. Cycle notation is recognised by
/// a leading `(`; image notation may separate labels by spaces or commas.
pub fn parse_permutation(text: &str, degree: usize) -> Result<Permutation, ParseError> {
    let s = text.trim();
    if s.starts_with('(') {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut current: Option<Vec<usize>> = None;
        let mut digits = String::new();
        let mut start = 0;
        let flush = |digits: &mut String, current: &mut Option<Vec<usize>>, col: usize| -> Result<(), ParseError> {
            if digits.is_empty() {
                return Ok(());
            }
            let v: usize = digits.parse().map_err(|_| err(1, col, format!("bad label {digits:?}")))?;
            current.as_mut().ok_or_else(|| err(1, col, "label outside parentheses"))?.push(v);
            digits.clear();
            Ok(())
        };
        for (i, ch) in s.char_indices() {
            let col = i + 1;
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(err(1, col, "nested '('"));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut digits, &mut current, start)?;
                    let c = current.take().ok_or_else(|| err(1, col, "unmatched ')'"))?;
                    if c.len() > 1 {
                        cycles.push(c);
                    }
                }
                d if d.is_ascii_digit() => {
                    if digits.is_empty() {
                        start = col;
                    }
                    digits.push(d);
                }
                c if c.is_whitespace() || c == ',' => flush(&mut digits, &mut current, start)?,
                other => return Err(err(1, col, format!("unexpected character {other:?}"))),
            }
        }
        if current.is_some() {
            return Err(err(1, s.len(), "unclosed '('"));
        }
        Permutation::from_cycles(degree, &cycles).map_err(|e| err(1, 1, e.to_string()))
    } else {
        let mut images = Vec::new();
        for (i, piece) in s.split(|c: char| c.is_whitespace() || c == ',').enumerate() {
            if piece.is_empty() {
                continue;
            }
            images.push(piece.parse::<usize>().map_err(|_| err(1, i + 1, format!("bad label {piece:?}")))?);
        }
        if images.len() != degree {
            return Err(err(1, 1, format!("image notation has {} labels, expected {degree}", images.len())));
        }
        Permutation::from_images(&images).map_err(|e| err(1, 1, e.to_string()))
    }
}

/// The plain text form accepted by [`parse_table`].
pub fn table_text(m: &FiniteMagma) -> String {
    let mut s = format!("{}\n", m.order());
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

/// Bordered Cayley table with `symbol` in the corner.
pub fn render_table(m: &FiniteMagma, symbol: &str) -> String {
    let n = m.order();
    let w = n.to_string().len().max(symbol.chars().count());
    let mut s = String::new();
    let _ = write!(s, "{symbol:>w$} |");
    for j in 1..=n {
        let _ = write!(s, " {j:>w$}");
    }
    s.push('\n');
    let _ = writeln!(s, "{}-+{}", "-".repeat(w), "-".repeat((w + 1) * n));
    for (i, row) in m.rows().iter().enumerate() {
        let _ = write!(s, "{:>w$} |", i + 1);
        for v in row {
            let _ = write!(s, " {v:>w$}");
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_round_trip() {
        let m = qloop_core::catalog::theta_star();
        assert_eq!(parse_table(&table_text(&m)).unwrap(), m);
        let json = serde_json::to_string(&TableDoc::new(&m)).unwrap();
        assert_eq!(parse_table(&json).unwrap(), m);
    }

    #[test]
    fn comments_and_small_tables() {
        let m = parse_table("# trivial loop\n1\n1\n").unwrap();
        assert!(m.is_loop());
        let m = parse_table("2\n1 1\n2 2\n").unwrap();
        assert!(!m.is_latin());
    }

    #[test]
    fn errors_name_line_and_column() {
        let e = parse_table("2\n1 2\n2 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = parse_table("2\n1 2\n2 3\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 3));
        let e = parse_table("3\n1 2 3\n2 3\n3 1 2\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(parse_table("2\n1 2\n").is_err());
        assert!(parse_table("").is_err());
    }

    #[test]
    fn permutation_notations() {
        let p = parse_permutation("(1 5 2 4 3 6)", 6).unwrap();
        assert_eq!(p.to_images(), vec![5, 4, 6, 3, 2, 1]);
        assert_eq!(parse_permutation("5 4 6 3 2 1", 6).unwrap(), p);
        assert_eq!(parse_permutation("5,4,6,3,2,1", 6).unwrap(), p);
        assert!(parse_permutation("()", 3).unwrap().is_identity());
        assert!(parse_permutation("(1 2", 3).is_err());
        assert!(parse_permutation("1 1 2", 3).is_err());
        assert!(parse_permutation("(1 7)", 3).is_err());
    }

    #[test]
    fn bordered_rendering() {
        let m = qloop_core::catalog::cyclic(2);
        assert_eq!(render_table(&m, "·"), "· | 1 2\n--+----\n1 | 1 2\n2 | 2 1\n");
    }
}
