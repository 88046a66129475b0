//! Questionnaire choice files: records separated by blank lines.
//!
//! ```text
//! groups 2
//! rows 2
//! cols 6
//! grid
//! ##....
//! ....##
//! chosen 1,4
//! ```

use super::{lines, parse_coord, parse_grid_rows, Cursor, FormatError, Line};
use crate::analysis::ChoiceRecord;
use crate::grid::Auditorium;

pub fn parse_choices(text: &str) -> Result<Vec<ChoiceRecord>, FormatError> {
    let all: Vec<Line<'_>> = lines(text).collect();
    let eof = all.len() + 1;
    let mut blocks: Vec<Vec<Line<'_>>> = vec![Vec::new()];
    for line in all {
        if line.is_blank() {
            if !blocks.last().is_some_and(Vec::is_empty) {
                blocks.push(Vec::new());
            }
        } else if !line.is_comment() {
            blocks.last_mut().expect("at least one block").push(line);
        }
    }
    blocks
        .into_iter()
        .filter(|b| !b.is_empty())
        .enumerate()
        .map(|(i, block)| parse_record(i + 1, block, eof))
        .collect()
}

fn parse_record(index: usize, block: Vec<Line<'_>>, eof: usize) -> Result<ChoiceRecord, FormatError> {
    let end = block.last().map_or(eof, |l| l.number + 1);
    let mut cur = Cursor::new(block, end);
    let groups = cur.keyword_value("groups")?;
    let rows = cur.keyword_value("rows")?;
    let cols = cur.keyword_value("cols")?;
    cur.keyword("grid")?;
    let grid = parse_grid_rows(&mut cur, rows, cols)?;
    let line = cur.next_line("`chosen row,seat`")?;
    let mut toks = line.tokens();
    match toks.next() {
        Some((_, "chosen")) => {}
        _ => return Err(line.error(0, "expected `chosen row,seat`")),
    }
    let (off, tok) = toks
        .next()
        .ok_or_else(|| line.error(line.text.len(), "missing seat after `chosen`"))?;
    let chosen = parse_coord(&line, off, tok)?;
    if let Some((off, extra)) = toks.next() {
        return Err(line.error(off, format!("unexpected `{extra}`")));
    }
    if let Some(extra) = cur.peek() {
        return Err(extra.error(0, "unexpected line after `chosen`; separate records with a blank line"));
    }
    let aud = Auditorium::from_rows(&grid).map_err(|e| FormatError::Choice {
        index,
        message: e.to_string(),
    })?;
    ChoiceRecord::new(aud, chosen, groups).map_err(|message| FormatError::Choice { index, message })
}
