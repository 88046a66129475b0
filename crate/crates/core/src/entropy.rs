//! Row-transition entropy of an occupancy grid.
//!
//! Each row contributes the square of the number of occupied/empty
//! changes between horizontally adjacent seats. Tightly packed blocks score
//! low, scattered occupants score high.

use std::fmt;

use thiserror::Error;

use crate::grid::Auditorium;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("row {row} is outside 1..={rows}")]
pub struct RowOutOfRange {
    pub row: usize,
    pub rows: usize,
}

/// Entropy value; always a non-negative integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EntropyScore(pub u64);

impl EntropyScore {
    pub fn value(self) -> u64 {
        self.0
    }

    /// Largest attainable score for an `rows x cols` grid.
    pub fn upper_bound(rows: usize, cols: usize) -> Self {
        let t = cols.saturating_sub(1) as u64;
        Self(rows as u64 * t * t)
    }
}

impl fmt::Display for EntropyScore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<EntropyScore> for u64 {
    fn from(e: EntropyScore) -> Self {
        e.0
    }
}

fn transitions(cells: &[bool]) -> usize {
    cells.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of occupied/empty changes along row `row` (1-based).
pub fn row_transitions(aud: &Auditorium, row: usize) -> Result<usize, RowOutOfRange> {
    if row == 0 || row > aud.rows() {
        return Err(RowOutOfRange {
            row,
            rows: aud.rows(),
        });
    }
    Ok(transitions(aud.row_cells(row)))
}

pub fn entropy(aud: &Auditorium) -> EntropyScore {
    let total = (1..=aud.rows())
        .map(|r| {
            let t = transitions(aud.row_cells(r)) as u64;
            t * t
        })
        .sum();
    EntropyScore(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Placement, SeatCoord};

    fn alternating_row(n: usize) -> Auditorium {
        Auditorium::with_occupants(1, n, (1..=n).step_by(2).map(|s| SeatCoord::new(1, s))).unwrap()
    }

    #[test]
    fn full_row_scores_zero() {
        let mut aud = Auditorium::empty(1, 14).unwrap();
        aud.occupy(Placement::new(1, 1, 14)).unwrap();
        assert_eq!(row_transitions(&aud, 1), Ok(0));
        assert_eq!(entropy(&aud), EntropyScore(0));
    }

    #[test]
    fn alternating_row_scores_169() {
        let aud = alternating_row(14);
        assert_eq!(row_transitions(&aud, 1), Ok(13));
        assert_eq!(entropy(&aud), EntropyScore(169));
    }

    #[test]
    fn empty_row_scores_zero() {
        let aud = Auditorium::empty(3, 14).unwrap();
        assert_eq!(row_transitions(&aud, 2), Ok(0));
        assert_eq!(entropy(&aud), EntropyScore(0));
    }

    #[test]
    fn small_grid_by_hand() {
        let aud = Auditorium::from_rows(&[vec![true, false, true], vec![false, false, false]]).unwrap();
        assert_eq!(entropy(&aud), EntropyScore(4));
    }

    #[test]
    fn row_out_of_range() {
        let aud = Auditorium::empty(2, 3).unwrap();
        assert_eq!(row_transitions(&aud, 0), Err(RowOutOfRange { row: 0, rows: 2 }));
        assert_eq!(row_transitions(&aud, 3), Err(RowOutOfRange { row: 3, rows: 2 }));
    }

    #[test]
    fn upper_bound_attained_by_alternation() {
        let rows: Vec<Vec<bool>> = (0..7).map(|_| (0..14).map(|s| s % 2 == 0).collect()).collect();
        let aud = Auditorium::from_rows(&rows).unwrap();
        assert_eq!(entropy(&aud), EntropyScore::upper_bound(7, 14));
        assert_eq!(EntropyScore::upper_bound(7, 14), EntropyScore(1183));
    }
}
