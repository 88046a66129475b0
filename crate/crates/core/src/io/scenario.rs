//! Scenario files.
//!
//! ```text
//! ; comment
//! rows 2
//! cols 5
//! grid
//! .##..
//! .....
//! arrivals
//! 1 2
//! observed
//! 1: 2,1
//! 2: 1,4 1,5
//! ```
//!
//! `arrivals` is followed by one line of group sizes, which may be absent
//! when there are no arrivals. The `observed` block is optional and lists
//! the seats taken at each step.

use std::fmt::Write;

use super::{lines, parse_coord, parse_grid_rows, parse_positive, write_grid, Cursor, FormatError};
use crate::grid::Auditorium;
use crate::simulation::{ObservedStep, Scenario};

pub fn parse_scenario(text: &str) -> Result<Scenario, FormatError> {
    let all: Vec<_> = lines(text).collect();
    let eof = all.len() + 1;
    let mut cur = Cursor::new(all, eof);

    let rows = cur.keyword_value("rows")?;
    let cols = cur.keyword_value("cols")?;
    cur.keyword("grid")?;
    let grid = parse_grid_rows(&mut cur, rows, cols)?;
    let aud = Auditorium::from_rows(&grid).map_err(crate::simulation::ScenarioError::from)?;
    let initial = aud.occupied().collect();

    cur.keyword("arrivals")?;
    let mut arrivals = Vec::new();
    if let Some(line) = cur.peek() {
        if line.text != "observed" {
            cur.next_line("group sizes")?;
            for (off, tok) in line.tokens() {
                arrivals.push(parse_positive(&line, off, tok)?);
            }
        }
    }

    let mut observed = None;
    if !cur.is_done() {
        cur.keyword("observed")?;
        let mut steps = Vec::new();
        while !cur.is_done() {
            let line = cur.next_line("observed step")?;
            let (head, rest) = line
                .text
                .split_once(':')
                .ok_or_else(|| line.error(0, "expected `<step>: row,seat ...`"))?;
            let step = parse_positive(&line, 0, head.trim())?;
            let mut seats = Vec::new();
            let rest_off = head.len() + 1;
            let base = rest.as_ptr() as usize;
            for tok in rest.split_whitespace() {
                let off = rest_off + (tok.as_ptr() as usize - base);
                seats.push(parse_coord(&line, off, tok)?);
            }
            if seats.is_empty() {
                return Err(line.error(line.text.len(), "observed step lists no seats"));
            }
            steps.push(ObservedStep { step, seats });
        }
        observed = Some(steps);
    }

    Ok(Scenario::new(rows, cols, initial, arrivals, observed)?)
}

/// Canonical text form: no comments, single spaces, trailing newline.
pub fn serialize_scenario(scenario: &Scenario) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rows {}", scenario.rows());
    let _ = writeln!(out, "cols {}", scenario.cols());
    out.push_str("grid\n");
    write_grid(&mut out, &scenario.initial_auditorium());
    out.push_str("arrivals\n");
    let sizes: Vec<String> = scenario.arrivals().iter().map(usize::to_string).collect();
    out.push_str(&sizes.join(" "));
    out.push('\n');
    if let Some(obs) = scenario.observed() {
        out.push_str("observed\n");
        for o in obs {
            let _ = write!(out, "{}:", o.step);
            for s in &o.seats {
                let _ = write!(out, " {s}");
            }
            out.push('\n');
        }
    }
    out
}
