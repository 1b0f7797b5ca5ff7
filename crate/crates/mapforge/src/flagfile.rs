//! The text flag-file format.
//!
//! ```text
//! # comments run to the end of the line
//! rank 2
//! flags 4
//! r0: 1 0 3 2
//! r1: 1 0 3 2
//! r2: 2 3 0 1
//! ```
//!
//! `r<i>(f)` is the `f`-th number on line `r<i>:`. Connections must appear in
//! order. Structural errors point at a line and column; invariant violations
//! found by validation point at the offending entry when there is one.

use std::{fmt, fs, io::Read, path::Path};

use mapforge_core::{Error as CoreError, FlagSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FlagFileError {
    #[error("{location}: {message}")]
    Syntax { location: Location, message: String },
    #[error("{}{error}", .location.as_ref().map(|l| format!("{l}: ")).unwrap_or_default())]
    Invalid {
        error: CoreError,
        location: Option<Location>,
    },
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl FlagFileError {
    pub fn location(&self) -> Option<&Location> {
        match self {
            FlagFileError::Syntax { location, .. } => Some(location),
            FlagFileError::Invalid { location, .. } => location.as_ref(),
            FlagFileError::Io { .. } => None,
        }
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FlagFileError {
    FlagFileError::Syntax {
        location: Location { line, column },
        message: message.into(),
    }
}

/// Whitespace-separated tokens with 1-based columns.
fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = text;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let start = rest.find(|c: char| !c.is_whitespace())?;
        let len = rest[start..].find(char::is_whitespace).unwrap_or(rest.len() - start);
        let token = &rest[start..start + len];
        let column = offset + start + 1;
        offset += start + len;
        rest = &rest[start + len..];
        Some((column, token))
    })
}

fn number(line: usize, column: usize, token: &str) -> Result<usize, FlagFileError> {
    token
        .parse()
        .map_err(|_| syntax(line, column, format!("expected a non-negative integer, found {token:?}")))
}

pub fn parse(text: &str) -> Result<FlagSystem, FlagFileError> {
    let mut rank = None;
    let mut count = None;
    let mut rows: Vec<(usize, Vec<usize>, Vec<usize>)> = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = tokens(content);
        let Some((column, head)) = toks.next() else {
            continue;
        };
        match head {
            "rank" | "flags" => {
                let (c, value) = toks
                    .next()
                    .ok_or_else(|| syntax(line, column + head.len(), format!("{head} needs a value")))?;
                let value = number(line, c, value)?;
                if let Some((c, extra)) = toks.next() {
                    return Err(syntax(line, c, format!("unexpected {extra:?}")));
                }
                if head == "flags" && rank.is_none() {
                    return Err(syntax(line, column, "rank must come before flags"));
                }
                let slot = if head == "rank" { &mut rank } else { &mut count };
                if slot.is_some() {
                    return Err(syntax(line, column, format!("{head} given twice")));
                }
                *slot = Some(value);
            }
            _ => {
                let index = head
                    .strip_prefix('r')
                    .and_then(|s| s.strip_suffix(':'))
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| syntax(line, column, format!("expected rank, flags or r<i>:, found {head:?}")))?;
                let (Some(rank), Some(count)) = (rank, count) else {
                    return Err(syntax(line, column, "connections must follow rank and flags"));
                };
                if index != rows.len() || index > rank {
                    return Err(syntax(
                        line,
                        column,
                        format!("expected r{}:, found {head}", rows.len().min(rank)),
                    ));
                }
                let mut values = Vec::with_capacity(count);
                let mut columns = Vec::with_capacity(count);
                for (c, tok) in toks {
                    if values.len() == count {
                        return Err(syntax(line, c, format!("r{index} has more than {count} entries")));
                    }
                    values.push(number(line, c, tok)?);
                    columns.push(c);
                }
                if values.len() < count {
                    return Err(syntax(
                        line,
                        content.trim_end().len() + 1,
                        format!("r{index} has {} entries, expected {count}", values.len()),
                    ));
                }
                rows.push((line, columns, values));
            }
        }
    }
    let end = last_line + 1;
    let rank = rank.ok_or_else(|| syntax(end, 1, "missing rank"))?;
    if count.is_none() {
        return Err(syntax(end, 1, "missing flags"));
    }
    if rows.len() != rank + 1 {
        return Err(syntax(end, 1, format!("missing r{}:", rows.len())));
    }
    let conns: Vec<Vec<usize>> = rows.iter().map(|(_, _, v)| v.clone()).collect();
    FlagSystem::new(rank, conns).map_err(|error| {
        let at = |i: usize, f: usize| {
            rows.get(i).and_then(|(line, columns, _)| {
                columns.get(f).map(|&column| Location { line: *line, column })
            })
        };
        let location = match error {
            CoreError::OutOfRange { connection, flag, .. } => at(connection, flag),
            CoreError::NotInvolution(i, f) | CoreError::FixedPoint(i, f) => at(i, f),
            CoreError::NonCommuting(i, _, f) | CoreError::NotDisjoint(i, _, f) => at(i, f),
            _ => None,
        };
        FlagFileError::Invalid { error, location }
    })
}

/// Renders `m` so that [`parse`] gives back identical arrays.
pub fn write(m: &FlagSystem) -> String {
    let mut out = format!("rank {}\nflags {}\n", m.rank(), m.flag_count());
    for i in 0..=m.rank() {
        out.push_str(&format!("r{i}:"));
        for f in m.connection(i) {
            out.push(' ');
            out.push_str(&f.to_string());
        }
        out.push('\n');
    }
    out
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String, FlagFileError> {
    let io = |source| FlagFileError::Io {
        path: path.to_string(),
        source,
    };
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        fs::read_to_string(Path::new(path)).map_err(io)
    }
}

pub fn load(path: &str) -> Result<FlagSystem, FlagFileError> {
    parse(&read_source(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE_TORUS: &str = "# abAB\nrank 2\nflags 8\nr0: 1 0 3 2 5 4 7 6\nr1: 7 2 1 4 3 6 5 0\nr2: 5 4 7 6 1 0 3 2\n";

    #[test]
    fn reads_and_writes() {
        let m = parse(SQUARE_TORUS).unwrap();
        assert_eq!(m.flag_count(), 8);
        assert_eq!(parse(&write(&m)).unwrap(), m);
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = parse("rank 2\nflags 2\nr0: 1 x\n").unwrap_err();
        assert_eq!(err.location(), Some(&Location { line: 3, column: 7 }));
        let err = parse("rank 2\nflags 2\nr1: 1 0\n").unwrap_err();
        assert_eq!(err.location().unwrap().line, 3);
        let err = parse("rank 1\nflags 2\nr0: 1\n").unwrap_err();
        assert_eq!(err.location(), Some(&Location { line: 3, column: 6 }));
        let err = parse("flags 2\n").unwrap_err();
        assert_eq!(err.location().unwrap().line, 1);
    }

    #[test]
    fn validation_errors_point_at_entries() {
        let err = parse("rank 1\nflags 2\nr0: 1 0\nr1: 1 5\n").unwrap_err();
        assert!(matches!(err, FlagFileError::Invalid { .. }));
        assert_eq!(err.location(), Some(&Location { line: 4, column: 7 }));
    }
}
