use serde::Serialize;

use crate::exactlin::{is_zero_vec, ScalarVec, Vector};

/// The first failing basis tuple of an identity and its nonzero defect.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub label: String,
    pub tuple: Vec<usize>,
    pub defect: ScalarVec,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict { holds: true, witness: None }
    }

    pub fn fail(label: impl Into<String>, tuple: Vec<usize>, defect: Vector) -> Self {
        Verdict { holds: false, witness: Some(Witness { label: label.into(), tuple, defect: ScalarVec(defect) }) }
    }

    /// Scans tuples in the given order and stops at the first nonzero defect.
    pub fn first_defect<I, F>(label: &str, tuples: I, mut defect: F) -> Self
    where
        I: IntoIterator<Item = Vec<usize>>,
        F: FnMut(&[usize]) -> Vector,
    {
        for t in tuples {
            let d = defect(&t);
            if !is_zero_vec(&d) {
                return Verdict::fail(label, t, d);
            }
        }
        Verdict::pass()
    }

    /// Conjunction keeping the first witness.
    pub fn and(self, other: impl FnOnce() -> Verdict) -> Verdict {
        if self.holds {
            other()
        } else {
            self
        }
    }
}

/// All ordered pairs `(i, j)` with `i < j < n`, lexicographic.
pub fn pairs(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| vec![i, j]))
}

/// All ordered pairs in `0..a × 0..b`.
pub fn grid2(a: usize, b: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..a).flat_map(move |i| (0..b).map(move |j| vec![i, j]))
}

/// All ordered triples in `0..a × 0..b × 0..c`.
pub fn grid3(a: usize, b: usize, c: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..a).flat_map(move |i| (0..b).flat_map(move |j| (0..c).map(move |k| vec![i, j, k])))
}
