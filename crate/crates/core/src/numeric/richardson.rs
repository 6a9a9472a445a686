//! Richardson extrapolation of a sequence sampled on a geometric grid
//! `h_j = h_0 / ratio^j`, assuming an expansion in integer powers of `h`.

use crate::scalar::{Real, Scalar};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extrapolated<T: Real> {
    pub value: Scalar<T>,
    /// Difference between the chosen tableau entry and its neighbours.
    pub error: T,
}

/// Builds the full Neville tableau and returns the entry with the smallest
/// neighbour difference among the rows built from the finer half of the
/// samples. Coarse rows are skipped since coarse samples may agree by accident.
pub fn richardson<T: Real>(samples: &[Scalar<T>], ratio: T) -> Extrapolated<T> {
    assert!(!samples.is_empty(), "need at least one sample");
    if samples.len() == 1 {
        return Extrapolated {
            value: samples[0],
            error: T::infinity(),
        };
    }
    let mut prev: Vec<Scalar<T>> = vec![samples[0]];
    let mut best = Extrapolated {
        value: samples[samples.len() - 1],
        error: (samples[samples.len() - 1] - samples[samples.len() - 2]).norm(),
    };
    for (j, &s) in samples.iter().enumerate().skip(1) {
        let mut row = vec![s];
        let mut factor = T::one();
        for m in 1..=j {
            factor = factor * ratio;
            let next = row[m - 1] + (row[m - 1] - prev[m - 1]) / (factor - T::one());
            let err = (next - row[m - 1]).norm().max((next - prev[m - 1]).norm());
            if 2 * j >= samples.len() && err < best.error {
                best = Extrapolated { value: next, error: err };
            }
            row.push(next);
        }
        prev = row;
    }
    best
}
