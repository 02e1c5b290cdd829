//! Fixtures shared by the benchmarks.

use qshuffle::qpoly::{int, Rational};
use qshuffle::tableaux::{parse_partition, Partition};

/// The default evaluation point.
pub fn q0() -> Rational {
    int(2)
}

/// A shape of every size used by the per-shape benchmarks.
pub fn shapes() -> Vec<Partition> {
    ["2,1", "3,1", "3,2", "3,1,1"]
        .iter()
        .map(|s| parse_partition(s).expect("fixture shape"))
        .collect()
}
