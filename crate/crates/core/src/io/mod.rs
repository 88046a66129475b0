//! Text formats: scenario files, questionnaire choice files and trajectory
//! CSV output.
//!
//! Both input formats are line oriented. Lines whose first non-blank
//! character is `;` are comments. `#` marks an occupied seat and `.` an
//! empty one in grid blocks.

mod choices;
mod csv;
mod scenario;

pub use choices::parse_choices;
pub use csv::{emit_trajectories_csv, CsvError, Series, CSV_HEADER};
pub use scenario::{parse_scenario, serialize_scenario};

use thiserror::Error;

use crate::simulation::ScenarioError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    /// Malformed text. Line and column are 1-based.
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid scenario: {0}")]
    Scenario(#[from] ScenarioError),
    #[error("choice record {index}: {message}")]
    Choice { index: usize, message: String },
}

impl FormatError {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        FormatError::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, FormatError::Parse { .. })
    }

    /// Well-formed text describing an inconsistent scenario or record.
    pub fn is_validation(&self) -> bool {
        !self.is_parse()
    }
}

/// A significant (non-blank, non-comment) input line.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Line<'a> {
    pub number: usize,
    /// 0-based byte offset of `text` within the raw line.
    pub indent: usize,
    pub text: &'a str,
}

impl<'a> Line<'a> {
    fn new(number: usize, raw: &'a str) -> Self {
        let trimmed_start = raw.trim_start();
        Self {
            number,
            indent: raw.len() - trimmed_start.len(),
            text: trimmed_start.trim_end(),
        }
    }

    pub fn is_blank(&self) -> bool {
        self.text.is_empty()
    }

    pub fn is_comment(&self) -> bool {
        self.text.starts_with(';')
    }

    /// 1-based column of a byte offset into `text`.
    pub fn column(&self, offset: usize) -> usize {
        self.indent + offset + 1
    }

    pub fn error(&self, offset: usize, message: impl Into<String>) -> FormatError {
        FormatError::parse(self.number, self.column(offset), message)
    }

    /// Whitespace-separated tokens with their byte offsets into `text`.
    pub fn tokens(&self) -> impl Iterator<Item = (usize, &'a str)> + 'a {
        let base = self.text.as_ptr() as usize;
        self.text
            .split_whitespace()
            .map(move |t| (t.as_ptr() as usize - base, t))
    }
}

pub(crate) fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().map(|(i, raw)| Line::new(i + 1, raw))
}

/// Cursor over significant lines (blank lines and comments skipped).
pub(crate) struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    /// Line number reported for errors at end of input.
    eof_line: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(lines: Vec<Line<'a>>, eof_line: usize) -> Self {
        let lines = lines
            .into_iter()
            .filter(|l| !l.is_blank() && !l.is_comment())
            .collect();
        Self {
            lines,
            pos: 0,
            eof_line,
        }
    }

    pub fn peek(&self) -> Option<Line<'a>> {
        self.lines.get(self.pos).copied()
    }

    pub fn next_line(&mut self, what: &str) -> Result<Line<'a>, FormatError> {
        let line = self
            .peek()
            .ok_or_else(|| FormatError::parse(self.eof_line, 1, format!("unexpected end of input, expected {what}")))?;
        self.pos += 1;
        Ok(line)
    }

    /// Consumes a line consisting of exactly `keyword`.
    pub fn keyword(&mut self, keyword: &str) -> Result<Line<'a>, FormatError> {
        let line = self.next_line(&format!("`{keyword}`"))?;
        if line.text != keyword {
            return Err(line.error(0, format!("expected `{keyword}`, found `{}`", line.text)));
        }
        Ok(line)
    }

    /// Consumes `keyword <positive integer>`.
    pub fn keyword_value(&mut self, keyword: &str) -> Result<usize, FormatError> {
        let line = self.next_line(&format!("`{keyword} <n>`"))?;
        let mut toks = line.tokens();
        match toks.next() {
            Some((_, k)) if k == keyword => {}
            _ => return Err(line.error(0, format!("expected `{keyword} <n>`"))),
        }
        let (off, v) = toks
            .next()
            .ok_or_else(|| line.error(line.text.len(), format!("missing value after `{keyword}`")))?;
        if let Some((off, extra)) = toks.next() {
            return Err(line.error(off, format!("unexpected `{extra}`")));
        }
        parse_positive(&line, off, v)
    }

    pub fn is_done(&self) -> bool {
        self.pos >= self.lines.len()
    }
}

pub(crate) fn parse_positive(line: &Line<'_>, offset: usize, tok: &str) -> Result<usize, FormatError> {
    match tok.parse::<usize>() {
        Ok(0) => Err(line.error(offset, "value must be positive")),
        Ok(v) => Ok(v),
        Err(_) => Err(line.error(offset, format!("expected a positive integer, found `{tok}`"))),
    }
}

/// Parses `r,s` (1-based).
pub(crate) fn parse_coord(
    line: &Line<'_>,
    offset: usize,
    tok: &str,
) -> Result<crate::grid::SeatCoord, FormatError> {
    let (r, s) = tok
        .split_once(',')
        .ok_or_else(|| line.error(offset, format!("expected `row,seat`, found `{tok}`")))?;
    let row = parse_positive(line, offset, r)?;
    let seat = parse_positive(line, offset + r.len() + 1, s)?;
    Ok(crate::grid::SeatCoord::new(row, seat))
}

/// Reads `rows` grid lines of exactly `cols` cells.
pub(crate) fn parse_grid_rows(
    cur: &mut Cursor<'_>,
    rows: usize,
    cols: usize,
) -> Result<Vec<Vec<bool>>, FormatError> {
    let mut grid = Vec::with_capacity(rows);
    for r in 0..rows {
        let line = cur.next_line(&format!("grid row {}", r + 1))?;
        let mut cells = Vec::with_capacity(cols);
        for (off, ch) in line.text.char_indices() {
            match ch {
                '.' => cells.push(false),
                '#' => cells.push(true),
                _ => return Err(line.error(off, format!("unexpected `{ch}` in grid row, expected `.` or `#`"))),
            }
        }
        if cells.len() != cols {
            return Err(line.error(
                line.text.len().min(cols),
                format!("grid row has {} seats, expected {cols}", cells.len()),
            ));
        }
        grid.push(cells);
    }
    Ok(grid)
}

pub(crate) fn write_grid(out: &mut String, aud: &crate::grid::Auditorium) {
    for r in 1..=aud.rows() {
        out.extend(aud.row_cells(r).iter().map(|&c| if c { '#' } else { '.' }));
        out.push('\n');
    }
}
