//! Occupancy grid geometry: seat coordinates, group placements, Manhattan
//! distances and the center of mass of seated participants.
//!
//! Coordinates are 1-based. Row 1 is the back row and the largest row index
//! is the front; seats are numbered from left to right.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("auditorium dimensions must be positive, got {rows}x{cols}")]
    EmptyDimensions { rows: usize, cols: usize },
    #[error("seat {0} is outside the auditorium")]
    OutOfBounds(SeatCoord),
    #[error("seat {0} is already occupied")]
    SeatConflict(SeatCoord),
    #[error("group size must be at least 1")]
    ZeroSize,
    #[error("row {row} has {found} seats, expected {expected}")]
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },
}

/// A seat position, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SeatCoord {
    pub row: usize,
    pub seat: usize,
}

impl SeatCoord {
    pub const fn new(row: usize, seat: usize) -> Self {
        Self { row, seat }
    }
}

impl fmt::Display for SeatCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.row, self.seat)
    }
}

/// Manhattan distance `|r1 - r2| + |s1 - s2|`.
pub fn manhattan_distance(p: SeatCoord, q: SeatCoord) -> usize {
    p.row.abs_diff(q.row) + p.seat.abs_diff(q.seat)
}

/// Distance that may be unbounded: the minimum over an empty set of
/// occupants is [`Distance::Infinite`], which orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Distance {
    Finite(usize),
    Infinite,
}

impl Distance {
    pub fn finite(self) -> Option<usize> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Infinite => None,
        }
    }

    pub fn is_at_least(self, bound: usize) -> bool {
        match self {
            Distance::Finite(d) => d >= bound,
            Distance::Infinite => true,
        }
    }

    pub fn is_within(self, lo: usize, hi: usize) -> bool {
        matches!(self, Distance::Finite(d) if lo <= d && d <= hi)
    }
}

impl Ord for Distance {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Distance::Finite(a), Distance::Finite(b)) => a.cmp(b),
            (Distance::Finite(_), Distance::Infinite) => Ordering::Less,
            (Distance::Infinite, Distance::Finite(_)) => Ordering::Greater,
            (Distance::Infinite, Distance::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Distance {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Finite(d) => write!(f, "{d}"),
            Distance::Infinite => f.write_str("inf"),
        }
    }
}

/// A contiguous horizontal run of seats claimed by one group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Placement {
    pub row: usize,
    pub start_seat: usize,
    pub size: usize,
}

impl Placement {
    pub const fn new(row: usize, start_seat: usize, size: usize) -> Self {
        Self {
            row,
            start_seat,
            size,
        }
    }

    /// Last covered seat (inclusive).
    pub fn end_seat(&self) -> usize {
        self.start_seat + self.size - 1
    }

    pub fn seats(&self) -> impl Iterator<Item = SeatCoord> + '_ {
        (self.start_seat..self.start_seat + self.size).map(move |s| SeatCoord::new(self.row, s))
    }
}

impl fmt::Display for Placement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "row {} seats {}-{}", self.row, self.start_seat, self.end_seat())
    }
}

/// Rectangular auditorium stored as a row-major boolean occupancy grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Auditorium {
    rows: usize,
    cols: usize,
    cells: Vec<bool>,
}

impl Auditorium {
    pub fn empty(rows: usize, cols: usize) -> Result<Self, GridError> {
        if rows == 0 || cols == 0 {
            return Err(GridError::EmptyDimensions { rows, cols });
        }
        Ok(Self {
            rows,
            cols,
            cells: vec![false; rows * cols],
        })
    }

    /// Builds a grid from row vectors; every row must have the same length.
    pub fn from_rows(rows: &[Vec<bool>]) -> Result<Self, GridError> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        let mut aud = Self::empty(m, n)?;
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GridError::RaggedRow {
                    row: r + 1,
                    found: row.len(),
                    expected: n,
                });
            }
            for (s, &occ) in row.iter().enumerate() {
                aud.cells[r * n + s] = occ;
            }
        }
        Ok(aud)
    }

    pub fn with_occupants<I>(rows: usize, cols: usize, occupants: I) -> Result<Self, GridError>
    where
        I: IntoIterator<Item = SeatCoord>,
    {
        let mut aud = Self::empty(rows, cols)?;
        for c in occupants {
            aud.set_occupied(c)?;
        }
        Ok(aud)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn contains(&self, c: SeatCoord) -> bool {
        (1..=self.rows).contains(&c.row) && (1..=self.cols).contains(&c.seat)
    }

    fn index(&self, c: SeatCoord) -> usize {
        (c.row - 1) * self.cols + (c.seat - 1)
    }

    /// Occupancy of a seat; seats outside the grid read as empty.
    pub fn is_occupied(&self, c: SeatCoord) -> bool {
        self.contains(c) && self.cells[self.index(c)]
    }

    /// Occupancy flags of one row (1-based), left to right.
    pub fn row_cells(&self, row: usize) -> &[bool] {
        let start = (row - 1) * self.cols;
        &self.cells[start..start + self.cols]
    }

    pub fn occupied_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn is_full(&self) -> bool {
        self.cells.iter().all(|&c| c)
    }

    /// Occupied seats in row-major order.
    pub fn occupied(&self) -> impl Iterator<Item = SeatCoord> + '_ {
        let cols = self.cols;
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, &occ)| occ)
            .map(move |(i, _)| SeatCoord::new(i / cols + 1, i % cols + 1))
    }

    /// Marks a single seat occupied.
    pub fn set_occupied(&mut self, c: SeatCoord) -> Result<(), GridError> {
        if !self.contains(c) {
            return Err(GridError::OutOfBounds(c));
        }
        let i = self.index(c);
        if self.cells[i] {
            return Err(GridError::SeatConflict(c));
        }
        self.cells[i] = true;
        Ok(())
    }

    /// Seats a group in place. On error the grid is left unchanged.
    pub fn occupy(&mut self, pl: Placement) -> Result<(), GridError> {
        if pl.size == 0 {
            return Err(GridError::ZeroSize);
        }
        for s in pl.seats() {
            if !self.contains(s) {
                return Err(GridError::OutOfBounds(s));
            }
            if self.is_occupied(s) {
                return Err(GridError::SeatConflict(s));
            }
        }
        for s in pl.seats() {
            let i = self.index(s);
            self.cells[i] = true;
        }
        Ok(())
    }

    /// Value-returning form of [`Auditorium::occupy`].
    pub fn occupied_with(&self, pl: Placement) -> Result<Self, GridError> {
        let mut next = self.clone();
        next.occupy(pl)?;
        Ok(next)
    }

    /// Left-right mirror image.
    pub fn mirrored(&self) -> Self {
        let mut cells = Vec::with_capacity(self.cells.len());
        for row in self.cells.chunks(self.cols) {
            cells.extend(row.iter().rev());
        }
        Self {
            rows: self.rows,
            cols: self.cols,
            cells,
        }
    }

    pub fn mirror_placement(&self, pl: Placement) -> Placement {
        Placement::new(pl.row, self.cols + 1 - pl.end_seat(), pl.size)
    }

    pub fn mirror_coord(&self, c: SeatCoord) -> SeatCoord {
        SeatCoord::new(c.row, self.cols + 1 - c.seat)
    }

    /// Grid with its rows reordered: row `i` of the result is row
    /// `order[i - 1]` of `self`.
    pub fn with_row_order(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.rows, "row order must cover every row");
        let mut cells = Vec::with_capacity(self.cells.len());
        for &r in order {
            cells.extend_from_slice(self.row_cells(r));
        }
        Self {
            rows: self.rows,
            cols: self.cols,
            cells,
        }
    }
}

/// Every placement of `size` whose seats are all empty, ordered by
/// `(row, start_seat)`.
pub fn feasible_placements(aud: &Auditorium, size: usize) -> Vec<Placement> {
    let mut out = Vec::new();
    if size == 0 || size > aud.cols() {
        return out;
    }
    for row in 1..=aud.rows() {
        let cells = aud.row_cells(row);
        // length of the empty run ending at the current seat
        let mut run = 0;
        for (i, &occ) in cells.iter().enumerate() {
            run = if occ { 0 } else { run + 1 };
            if run >= size {
                out.push(Placement::new(row, i + 2 - size, size));
            }
        }
    }
    out
}

/// Minimum Manhattan distance from any seat of `pl` to any occupied seat.
///
/// Within the placement's own row only the occupants directly left and right
/// of the run can be nearest; in other rows the nearest occupant to a run is
/// found by clamping each occupant's seat into the run.
pub fn min_distance_to_seated(aud: &Auditorium, pl: Placement) -> Distance {
    let mut best: Option<usize> = None;
    let lo = pl.start_seat;
    let hi = pl.end_seat();
    for row in 1..=aud.rows() {
        let dr = row.abs_diff(pl.row);
        if best.is_some_and(|b| dr >= b) {
            continue;
        }
        for (i, &occ) in aud.row_cells(row).iter().enumerate() {
            if !occ {
                continue;
            }
            let s = i + 1;
            let ds = lo.saturating_sub(s) + s.saturating_sub(hi);
            let d = dr + ds;
            if best.is_none_or(|b| d < b) {
                best = Some(d);
            }
        }
    }
    best.map_or(Distance::Infinite, Distance::Finite)
}

/// Rounds `num / den` to the nearest integer, exact halves upward.
/// Both operands are non-negative and `den > 0`.
pub fn round_half_up_ratio(num: usize, den: usize) -> usize {
    assert!(den > 0, "denominator must be positive");
    (2 * num + den) / (2 * den)
}

/// Mean row and mean seat of occupied cells, each rounded half up.
/// `None` for an empty auditorium.
pub fn center_of_mass(aud: &Auditorium) -> Option<SeatCoord> {
    let (count, row_sum, seat_sum) = aud
        .occupied()
        .fold((0, 0, 0), |(n, r, s), c| (n + 1, r + c.row, s + c.seat));
    if count == 0 {
        return None;
    }
    Some(SeatCoord::new(
        round_half_up_ratio(row_sum, count),
        round_half_up_ratio(seat_sum, count),
    ))
}

/// Distance from the nearest member seat of `pl` to the point `c`.
pub fn placement_min_distance_to(pl: Placement, c: SeatCoord) -> usize {
    let ds = if c.seat < pl.start_seat {
        pl.start_seat - c.seat
    } else if c.seat > pl.end_seat() {
        c.seat - pl.end_seat()
    } else {
        0
    };
    pl.row.abs_diff(c.row) + ds
}
