//! Brute-force reference implementations. Nothing here calls into the
//! crate's distance, placement or policy code; grids are read cell by cell.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use seating::{Auditorium, Placement, Policy, SeatCoord};

pub fn occupied_cells(aud: &Auditorium) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for r in 1..=aud.rows() {
        for s in 1..=aud.cols() {
            if aud.is_occupied(SeatCoord::new(r, s)) {
                out.push((r as i64, s as i64));
            }
        }
    }
    out
}

/// Every (row, start) whose `size` seats are all inside and empty.
pub fn naive_feasible(aud: &Auditorium, size: usize) -> Vec<Placement> {
    let mut out = Vec::new();
    for r in 1..=aud.rows() {
        for start in 1..=aud.cols() {
            let mut ok = start + size - 1 <= aud.cols() && size > 0;
            let mut s = start;
            while ok && s < start + size {
                ok = !aud.is_occupied(SeatCoord::new(r, s));
                s += 1;
            }
            if ok {
                out.push(Placement::new(r, start, size));
            }
        }
    }
    out
}

/// Double minimum over member seats and occupants; `None` for no occupants.
pub fn naive_min_distance(aud: &Auditorium, pl: Placement) -> Option<i64> {
    let occ = occupied_cells(aud);
    let mut best: Option<i64> = None;
    for s in pl.start_seat..pl.start_seat + pl.size {
        for &(qr, qs) in &occ {
            let d = (pl.row as i64 - qr).abs() + (s as i64 - qs).abs();
            best = Some(best.map_or(d, |b: i64| b.min(d)));
        }
    }
    best
}

/// Float means rounded with floor(x + 0.5).
pub fn naive_center(aud: &Auditorium) -> Option<(i64, i64)> {
    let occ = occupied_cells(aud);
    if occ.is_empty() {
        return None;
    }
    let n = occ.len() as f64;
    let r = occ.iter().map(|c| c.0 as f64).sum::<f64>() / n;
    let s = occ.iter().map(|c| c.1 as f64).sum::<f64>() / n;
    Some(((r + 0.5).floor() as i64, (s + 0.5).floor() as i64))
}

pub fn naive_entropy(aud: &Auditorium) -> u64 {
    let mut total = 0;
    for r in 1..=aud.rows() {
        let mut t = 0u64;
        for s in 2..=aud.cols() {
            if aud.is_occupied(SeatCoord::new(r, s - 1)) != aud.is_occupied(SeatCoord::new(r, s)) {
                t += 1;
            }
        }
        total += t * t;
    }
    total
}

/// Candidate set of `policy` computed by exhaustive filtering.
pub fn oracle_candidates(policy: Policy, aud: &Auditorium, size: usize) -> BTreeSet<Placement> {
    let feasible = naive_feasible(aud, size);
    // None encodes an empty auditorium (distance unbounded)
    let dist: Vec<(Placement, Option<i64>)> =
        feasible.iter().map(|&pl| (pl, naive_min_distance(aud, pl))).collect();
    let at_least = |d: Option<i64>, k: i64| d.is_none_or(|d| d >= k);
    let all: BTreeSet<_> = feasible.iter().copied().collect();
    match policy {
        Policy::Random => all,
        Policy::Max => {
            if dist.iter().any(|(_, d)| d.is_none()) {
                return all;
            }
            let best = dist.iter().filter_map(|(_, d)| *d).max();
            dist.iter().filter(|(_, d)| *d == best).map(|(p, _)| *p).collect()
        }
        Policy::Space => {
            let band: BTreeSet<_> = dist
                .iter()
                .filter(|(_, d)| matches!(d, Some(d) if (2..=4).contains(d)))
                .map(|(p, _)| *p)
                .collect();
            if !band.is_empty() {
                return band;
            }
            let beyond: Vec<_> = dist.iter().filter(|(_, d)| at_least(*d, 5)).collect();
            if beyond.is_empty() {
                return all;
            }
            if beyond.iter().all(|(_, d)| d.is_none()) {
                return beyond.iter().map(|(p, _)| *p).collect();
            }
            let nearest = beyond.iter().filter_map(|(_, d)| *d).min();
            beyond.iter().filter(|(_, d)| *d == nearest).map(|(p, _)| *p).collect()
        }
        Policy::Simple => {
            let roomy: BTreeSet<_> =
                dist.iter().filter(|(_, d)| at_least(*d, 3)).map(|(p, _)| *p).collect();
            if roomy.is_empty() {
                all
            } else {
                roomy
            }
        }
        Policy::Center => {
            let spaced: Vec<Placement> =
                dist.iter().filter(|(_, d)| at_least(*d, 2)).map(|(p, _)| *p).collect();
            if spaced.is_empty() {
                return all;
            }
            let Some((cr, cs)) = naive_center(aud) else {
                return spaced.into_iter().collect();
            };
            let to_center = |pl: &Placement| {
                (pl.start_seat..pl.start_seat + pl.size)
                    .map(|s| (pl.row as i64 - cr).abs() + (s as i64 - cs).abs())
                    .min()
                    .unwrap()
            };
            let best = spaced.iter().map(to_center).min();
            spaced.iter().filter(|p| Some(to_center(p)) == best).copied().collect()
        }
    }
}

/// Random grid with roughly `fill` occupancy, from a test-local generator.
pub fn random_grid(seed: u64, rows: usize, cols: usize, fill: f64) -> Auditorium {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5EA7_5EA7);
    let rows_v: Vec<Vec<bool>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_bool(fill)).collect())
        .collect();
    Auditorium::from_rows(&rows_v).unwrap()
}

/// Random instance for the oracle suite: dims up to 7x14, fill 0-60%,
/// group size 1-4.
pub fn random_instance(seed: u64) -> (Auditorium, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9) + 11);
    let rows = rng.gen_range(1..=7);
    let cols = rng.gen_range(1..=14);
    let fill = rng.gen_range(0.0..=0.6);
    let size = rng.gen_range(1..=4);
    (random_grid(rng.gen(), rows, cols, fill), size)
}
