//! Finite algebras of events: the power set of `n` labeled atoms.
//!
//! Events are bitmasks over atom indices, so an algebra holds at most 64
//! atoms. Anything that walks all `2^n` events is additionally bounded by an
//! enumeration cap (default 20 atoms).

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ATOMS: usize = 64;
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    labels: Vec<String>,
}

impl Algebra {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidAlgebra("an algebra needs at least one atom".into()));
        }
        if labels.len() > MAX_ATOMS {
            return Err(Error::Capacity {
                what: "atom count",
                actual: labels.len(),
                cap: MAX_ATOMS,
            });
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(Error::InvalidAlgebra(format!("duplicate atom label {label:?}")));
            }
        }
        Ok(Self { labels })
    }

    /// Atoms labeled `a1..an`.
    pub fn with_atoms(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("a{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, atom: usize) -> &str {
        &self.labels[atom]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The sure event `S`.
    pub fn full(&self) -> Event {
        if self.len() == 64 {
            Event(u64::MAX)
        } else {
            Event((1u64 << self.len()) - 1)
        }
    }

    pub fn contains(&self, e: Event) -> bool {
        e.0 & !self.full().0 == 0
    }

    pub fn check(&self, e: Event) -> Result<Event> {
        if self.contains(e) {
            Ok(e)
        } else {
            Err(Error::AlgebraMismatch(format!(
                "event {:#x} has atoms outside an algebra of {} atoms",
                e.0,
                self.len()
            )))
        }
    }

    pub fn complement(&self, e: Event) -> Event {
        Event(self.full().0 & !e.0)
    }

    pub fn event_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Event> {
        let mut bits = 0u64;
        for label in labels {
            let label = label.as_ref();
            let i = self
                .index_of(label)
                .ok_or_else(|| Error::AlgebraMismatch(format!("unknown atom label {label:?}")))?;
            bits |= 1 << i;
        }
        Ok(Event(bits))
    }

    /// Labels of `e`'s atoms in atom order.
    pub fn event_labels(&self, e: Event) -> Vec<&str> {
        e.atoms().map(|i| self.label(i)).collect()
    }

    pub fn describe(&self, e: Event) -> String {
        format!("{{{}}}", self.event_labels(e).join(","))
    }

    pub fn ensure_enumerable(&self, cap: usize) -> Result<()> {
        if self.len() > cap {
            return Err(Error::Capacity {
                what: "atom count for event enumeration",
                actual: self.len(),
                cap,
            });
        }
        Ok(())
    }

    /// All `2^n` events, ordered by subset-as-integer.
    pub fn enumerate_events(&self) -> Result<Vec<Event>> {
        self.enumerate_events_capped(DEFAULT_ENUMERATION_CAP)
    }

    pub fn enumerate_events_capped(&self, cap: usize) -> Result<Vec<Event>> {
        self.ensure_enumerable(cap)?;
        Ok((0..1u64 << self.len()).map(Event).collect())
    }

    pub fn event_count(&self) -> usize {
        1usize << self.len()
    }

    pub fn apply(&self, op: EventOp, a: Event, b: Event) -> Result<Event> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            EventOp::Union => a.union(b),
            EventOp::Intersection => a.intersection(b),
            EventOp::Difference => a.difference(b),
            EventOp::ComplementOfFirst => self.complement(a),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EventOp {
    Union,
    Intersection,
    Difference,
    ComplementOfFirst,
}

/// A set of atom indices.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Event(u64);

impl Event {
    pub const EMPTY: Event = Event(0);

    pub const fn from_bits(bits: u64) -> Self {
        Event(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// Index into tables laid out by subset-as-integer.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub fn atom(i: usize) -> Self {
        Event(1 << i)
    }

    pub fn from_atoms<I: IntoIterator<Item = usize>>(atoms: I) -> Self {
        Event(atoms.into_iter().fold(0, |acc, i| acc | 1 << i))
    }

    pub fn contains_atom(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn atoms(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Event) -> Event {
        Event(self.0 | other.0)
    }

    pub fn intersection(self, other: Event) -> Event {
        Event(self.0 & other.0)
    }

    pub fn difference(self, other: Event) -> Event {
        Event(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Event) -> Event {
        Event(self.0 ^ other.0)
    }

    pub fn is_subset_of(self, other: Event) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Event) -> bool {
        self.0 & other.0 == 0
    }

    /// Every subevent of `self` (including `∅` and `self`), ascending.
    pub fn subevents(self) -> Subevents {
        Subevents {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Sorted atom indices; comparing these compares events lexicographically.
    pub fn lex_key(self) -> Vec<usize> {
        self.atoms().collect()
    }
}

impl fmt::Debug for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.atoms()).finish()
    }
}

pub struct Subevents {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subevents {
    type Item = Event;

    fn next(&mut self) -> Option<Event> {
        let cur = self.next?;
        let succ = (cur | !self.mask).wrapping_add(1) & self.mask;
        self.next = if succ == 0 { None } else { Some(succ) };
        Some(Event(cur))
    }
}

/// Pairwise disjointness. Vacuously true for fewer than two events.
pub fn is_antichain(events: &[Event]) -> bool {
    let mut seen = 0u64;
    for e in events {
        if e.0 & seen != 0 {
            return false;
        }
        seen |= e.0;
    }
    true
}
