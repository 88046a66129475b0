//! Histograms over questionnaire seat choices: distance from the chosen seat
//! to the nearest seated participant, and to the center of mass.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::grid::{center_of_mass, manhattan_distance, Auditorium, SeatCoord};
use crate::stats::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("no choice records supplied")]
    EmptyInput,
    #[error("every record has fewer than {min_groups} seated groups")]
    AllRecordsFiltered { min_groups: usize },
    #[error("record {index}: {message}")]
    InvalidRecord { index: usize, message: String },
}

/// One respondent's marked seat in a pre-seated configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoiceRecord {
    pub configuration: Auditorium,
    pub chosen: SeatCoord,
    /// Number of distinct seated groups, as recorded with the data.
    pub group_count: usize,
}

impl ChoiceRecord {
    pub fn new(configuration: Auditorium, chosen: SeatCoord, group_count: usize) -> Result<Self, String> {
        if !configuration.contains(chosen) {
            return Err(format!("chosen seat {chosen} is outside the auditorium"));
        }
        if configuration.is_occupied(chosen) {
            return Err(format!("chosen seat {chosen} is already occupied"));
        }
        if group_count == 0 {
            return Err("group count must be at least 1".to_string());
        }
        if configuration.occupied_count() == 0 {
            return Err("configuration has no seated participants".to_string());
        }
        Ok(Self {
            configuration,
            chosen,
            group_count,
        })
    }

    /// Distance from the chosen seat to the nearest occupant.
    pub fn nearest_distance(&self) -> usize {
        self.configuration
            .occupied()
            .map(|q| manhattan_distance(self.chosen, q))
            .min()
            .expect("configuration has occupants")
    }

    pub fn center_distance(&self) -> usize {
        let c = center_of_mass(&self.configuration).expect("configuration has occupants");
        manhattan_distance(self.chosen, c)
    }
}

/// Occurrence counts per distance.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Histogram {
    counts: BTreeMap<usize, usize>,
    total: usize,
}

impl Histogram {
    pub fn add(&mut self, distance: usize) {
        *self.counts.entry(distance).or_default() += 1;
        self.total += 1;
    }

    pub fn count(&self, distance: usize) -> usize {
        self.counts.get(&distance).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// Non-empty bins in increasing distance order.
    pub fn bins(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    pub fn merge(&mut self, other: &Histogram) {
        for (d, c) in other.bins() {
            *self.counts.entry(d).or_default() += c;
        }
        self.total += other.total;
    }

    /// Share of records in a bin.
    pub fn fraction<T: Scalar>(&self, distance: usize) -> Option<T> {
        if self.total == 0 {
            return None;
        }
        Some(T::from_usize(self.count(distance))? / T::from_usize(self.total)?)
    }
}

pub fn nearest_distance_histogram(records: &[ChoiceRecord]) -> Result<Histogram, AnalysisError> {
    if records.is_empty() {
        return Err(AnalysisError::EmptyInput);
    }
    let mut h = Histogram::default();
    for r in records {
        h.add(r.nearest_distance());
    }
    Ok(h)
}

/// Distance-to-center histogram over records with at least `min_groups`
/// seated groups.
pub fn center_distance_histogram(
    records: &[ChoiceRecord],
    min_groups: usize,
) -> Result<Histogram, AnalysisError> {
    if records.is_empty() {
        return Err(AnalysisError::EmptyInput);
    }
    let mut h = Histogram::default();
    for r in records.iter().filter(|r| r.group_count >= min_groups) {
        h.add(r.center_distance());
    }
    if h.total() == 0 {
        return Err(AnalysisError::AllRecordsFiltered { min_groups });
    }
    Ok(h)
}
