//! Signed measures on a finite algebra, stored as one exact weight per atom.
//!
//! `μ(A)` is the sum of the weights of `A`'s atoms, so finite additivity holds
//! by construction. Countable additivity is vacuous on a finite algebra.

use num_traits::{One, Signed, Zero};

use crate::algebra::{Algebra, Event, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMeasure {
    algebra: Algebra,
    weights: Vec<Rational>,
}

impl SignedMeasure {
    pub fn new(algebra: Algebra, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != algebra.len() {
            return Err(Error::AlgebraMismatch(format!(
                "{} weights for an algebra of {} atoms",
                weights.len(),
                algebra.len()
            )));
        }
        Ok(Self { algebra, weights })
    }

    /// Integer weights on atoms `a1..an`.
    pub fn from_ints(weights: &[i64]) -> Result<Self> {
        let algebra = Algebra::with_atoms(weights.len())?;
        Self::new(algebra, weights.iter().map(|&w| rational::int(w)).collect())
    }

    pub fn zero(algebra: Algebra) -> Self {
        let weights = vec![Rational::zero(); algebra.len()];
        Self { algebra, weights }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn weight(&self, atom: usize) -> &Rational {
        &self.weights[atom]
    }

    pub fn value(&self, e: Event) -> Rational {
        e.atoms().map(|i| &self.weights[i]).sum()
    }

    pub fn total(&self) -> Rational {
        self.weights.iter().sum()
    }

    /// Sum of positive weights: the largest value any event attains.
    pub fn positive_mass(&self) -> Rational {
        self.weights.iter().filter(|w| w.is_positive()).sum()
    }

    /// Absolute sum of negative weights.
    pub fn negative_mass(&self) -> Rational {
        -self.weights.iter().filter(|w| w.is_negative()).sum::<Rational>()
    }

    /// `max |μ(A)|` over all events.
    pub fn sup_norm(&self) -> Rational {
        std::cmp::max(self.positive_mass(), self.negative_mass())
    }

    pub fn is_zero(&self) -> bool {
        self.weights.iter().all(Zero::is_zero)
    }

    pub fn is_normalized(&self) -> bool {
        self.sup_norm().is_one()
    }

    pub fn is_non_negative(&self) -> bool {
        self.weights.iter().all(|w| !w.is_negative())
    }

    pub fn is_probability(&self) -> bool {
        self.is_non_negative() && self.total().is_one()
    }

    /// Atoms with nonzero weight.
    pub fn support(&self) -> Event {
        Event::from_atoms(self.weights.iter().enumerate().filter(|(_, w)| !w.is_zero()).map(|(i, _)| i))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            algebra: self.algebra.clone(),
            weights: self.weights.iter().map(|w| w * c).collect(),
        }
    }

    fn same_algebra(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch("measures live on different algebras".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(Self {
            algebra: self.algebra.clone(),
            weights: self.weights.iter().zip(&other.weights).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_algebra(other)?;
        Ok(Self {
            algebra: self.algebra.clone(),
            weights: self.weights.iter().zip(&other.weights).map(|(a, b)| a - b).collect(),
        })
    }

    /// `(1 - t)·self + t·other`.
    pub fn mix(&self, other: &Self, t: &Rational) -> Result<Self> {
        let s = Rational::one() - t;
        self.scale(&s).add(&other.scale(t))
    }

    /// `A ↦ μ(A ∩ e) / μ(e)`.
    pub fn condition_on(&self, e: Event) -> Result<Self> {
        self.algebra.check(e)?;
        let mass = self.value(e);
        if mass.is_zero() {
            return Err(Error::NullConditioning(self.algebra.describe(e)));
        }
        let weights = self
            .weights
            .iter()
            .enumerate()
            .map(|(i, w)| if e.contains_atom(i) { w / &mass } else { Rational::zero() })
            .collect();
        Ok(Self {
            algebra: self.algebra.clone(),
            weights,
        })
    }

    /// Divides every weight by `max |μ(A)|` so the result attains `max |μ(A)| = 1`.
    pub fn normalize(&self) -> Result<Self> {
        let norm = self.sup_norm();
        if norm.is_zero() {
            return Err(Error::Degenerate("cannot normalize the zero measure".into()));
        }
        Ok(self.scale(&norm.recip()))
    }

    /// `μ(A)` for every event, indexed by subset-as-integer.
    pub fn value_table(&self) -> Result<Vec<Rational>> {
        self.value_table_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn value_table_capped(&self, cap: usize) -> Result<Vec<Rational>> {
        self.algebra.ensure_enumerable(cap)?;
        let count = self.algebra.event_count();
        let mut table = Vec::with_capacity(count);
        table.push(Rational::zero());
        for mask in 1..count {
            let low = mask.trailing_zeros() as usize;
            let v = &table[mask & (mask - 1)] + &self.weights[low];
            table.push(v);
        }
        Ok(table)
    }

    /// Events `A` with `μ(A) ≠ 0` that no subevent splits: every `B ⊆ A` has
    /// `μ(B) ∈ {0, μ(A)}`.
    pub fn measure_atoms(&self) -> Result<Vec<Event>> {
        let table = self.value_table()?;
        let mut atoms = Vec::new();
        for (mask, value) in table.iter().enumerate() {
            if value.is_zero() {
                continue;
            }
            let e = Event::from_bits(mask as u64);
            let unsplit = e.subevents().all(|b| {
                let vb = &table[b.index()];
                vb.is_zero() || vb == value
            });
            if unsplit {
                atoms.push(e);
            }
        }
        Ok(atoms)
    }
}
