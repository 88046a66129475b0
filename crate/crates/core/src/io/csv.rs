//! Trajectory CSV: `step,label,mean,std,min,max`, one row per step and
//! label, labels in the order given. `std` is the population standard
//! deviation over runs. Exact trajectories (such as the observed replay)
//! report their value as mean, min and max with a std of 0.

use std::fmt::Write;

use thiserror::Error;

use crate::simulation::Trajectory;
use crate::stats::{MeanTrajectoryOf, Scalar};

pub const CSV_HEADER: &str = "step,label,mean,std,min,max";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CsvError {
    #[error("trajectory `{label}` has {found} steps, expected {expected}")]
    LengthMismatch {
        label: String,
        expected: usize,
        found: usize,
    },
}

#[derive(Debug, Clone, Copy)]
pub enum Series<'a, T> {
    Mean(&'a MeanTrajectoryOf<T>),
    Exact(&'a Trajectory),
}

impl<T: Scalar> Series<'_, T> {
    fn len(&self) -> usize {
        match self {
            Series::Mean(m) => m.len(),
            Series::Exact(t) => t.len(),
        }
    }

    fn write_step(&self, out: &mut String, step: usize) {
        let _ = match self {
            Series::Mean(m) => write!(
                out,
                "{},{},{},{}",
                m.mean[step], m.std[step], m.min[step], m.max[step]
            ),
            Series::Exact(t) => {
                let v = t.value_at(step);
                write!(out, "{v},0,{v},{v}")
            }
        };
    }
}

pub fn emit_trajectories_csv<T: Scalar>(series: &[(&str, Series<'_, T>)]) -> Result<String, CsvError> {
    let steps = series.first().map_or(0, |(_, s)| s.len());
    if let Some((label, s)) = series.iter().find(|(_, s)| s.len() != steps) {
        return Err(CsvError::LengthMismatch {
            label: label.to_string(),
            expected: steps,
            found: s.len(),
        });
    }
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for step in 0..steps {
        for (label, s) in series {
            let _ = write!(out, "{step},{label},");
            s.write_step(&mut out, step);
            out.push('\n');
        }
    }
    Ok(out)
}
