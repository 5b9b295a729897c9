//! Recovering a normalized signed measure from a ranking.
//!
//! Every event `A` at level `k` must satisfy `w(A) = v_k`, consecutive levels
//! must satisfy `v_{k+1} - v_k >= 1`, and the level of `∅` is pinned to zero.
//! A unit gap is enough for strictness: any representation can be rescaled.
//!
//! The equalities are eliminated exactly first. Because `∅` leads its level,
//! they reduce to homogeneous constraints `w(A) - w(first event of A's level) = 0`
//! on the atom weights alone, and their nullspace is the space of candidate
//! measures. Its dimension is reported as the uniqueness diagnostic: any
//! feasible point is interior to the gap region within that space, so the
//! representation is unique up to positive scaling exactly when it is one.
//! Feasibility of the gaps on the reduced space is then decided by an exact
//! simplex.

use serde::Serialize;

use crate::algebra::Event;
use crate::assessment::Assessment;
use crate::error::{Error, Result};
use crate::lp;
use crate::measure::SignedMeasure;
use crate::rational::{self, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepresentationStatus {
    UniqueUpToScaling,
    FeasibleNonUnique,
    Infeasible,
}

impl RepresentationStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::UniqueUpToScaling => "unique-up-to-scaling",
            Self::FeasibleNonUnique => "feasible-non-unique",
            Self::Infeasible => "infeasible",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationResult {
    pub status: RepresentationStatus,
    pub measure: Option<SignedMeasure>,
    pub solution_dimension: usize,
    /// The measure's value on each level, lowest first; strictly increasing.
    pub class_values: Option<Vec<Rational>>,
}

impl RepresentationResult {
    pub fn is_feasible(&self) -> bool {
        self.status != RepresentationStatus::Infeasible
    }
}

/// Order in which atom columns are eliminated. Different orders reach
/// different feasible points when the solution space has dimension above one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum PivotOrder {
    #[default]
    Natural,
    Reversed,
    Custom(Vec<usize>),
}

impl PivotOrder {
    fn columns(&self, n: usize) -> Result<Vec<usize>> {
        let cols: Vec<usize> = match self {
            PivotOrder::Natural => (0..n).collect(),
            PivotOrder::Reversed => (0..n).rev().collect(),
            PivotOrder::Custom(c) => c.clone(),
        };
        let mut sorted = cols.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::Parameter(format!("pivot order {cols:?} is not a permutation of 0..{n}")));
        }
        Ok(cols)
    }
}

pub fn solve_representation(a: &Assessment) -> Result<RepresentationResult> {
    solve_representation_with(a, &PivotOrder::Natural)
}

pub fn solve_representation_with(a: &Assessment, order: &PivotOrder) -> Result<RepresentationResult> {
    let algebra = a.algebra();
    let n = algebra.len();
    let columns = order.columns(n)?;
    if !a.check_nondegeneracy() {
        return Err(Error::Degenerate(
            "every event is tied; the only representation is the zero measure, which cannot be normalized".into(),
        ));
    }

    let levels = a.level_members();
    let indicator = |e: Event| -> Vec<Rational> {
        (0..n)
            .map(|i| if e.contains_atom(i) { rational::one() } else { rational::zero() })
            .collect()
    };

    let mut equalities = Vec::new();
    for level in &levels {
        let lead = indicator(level[0]);
        for &e in &level[1..] {
            let row: Vec<Rational> = indicator(e).iter().zip(&lead).map(|(x, y)| x - y).collect();
            equalities.push(row);
        }
    }
    let basis = lp::nullspace(&equalities, n, &columns);
    let dim = basis.len();

    // Gap constraints on coordinates t, with w = Σ t_j · basis_j.
    let gaps: Vec<Vec<Rational>> = levels
        .windows(2)
        .map(|pair| {
            let hi = indicator(pair[1][0]);
            let lo = indicator(pair[0][0]);
            let diff: Vec<Rational> = hi.iter().zip(&lo).map(|(x, y)| x - y).collect();
            basis.iter().map(|b| lp::dot(&diff, b)).collect()
        })
        .collect();
    let rhs = vec![rational::one(); gaps.len()];

    let Some(t) = lp::find_feasible_point(&gaps, &rhs, dim) else {
        return Ok(RepresentationResult {
            status: RepresentationStatus::Infeasible,
            measure: None,
            solution_dimension: dim,
            class_values: None,
        });
    };

    let weights: Vec<Rational> = (0..n)
        .map(|i| basis.iter().zip(&t).map(|(b, tj)| &b[i] * tj).sum())
        .collect();
    let measure = SignedMeasure::new(algebra.clone(), weights)?.normalize()?;
    let class_values: Vec<Rational> = levels.iter().map(|l| measure.value(l[0])).collect();
    debug_assert!(class_values.windows(2).all(|w| w[0] < w[1]));

    Ok(RepresentationResult {
        status: if dim == 1 {
            RepresentationStatus::UniqueUpToScaling
        } else {
            RepresentationStatus::FeasibleNonUnique
        },
        measure: Some(measure),
        solution_dimension: dim,
        class_values: Some(class_values),
    })
}
