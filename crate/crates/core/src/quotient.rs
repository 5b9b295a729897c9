//! The purely-null ideal of a ranking and the quotient by it.
//!
//! Two events are identified when their symmetric difference is purely null.
//! For a separable ranking the purely null events form an ideal, and on a
//! finite algebra that ideal is the power set of one event `N` (the union of
//! all purely null events). Classes are then keyed by `A \ N`, and the
//! quotient is itself the power set of the atoms outside `N`.

use crate::algebra::{Algebra, Event};
use crate::assessment::Assessment;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealReport {
    pub events: Vec<Event>,
    pub contains_empty: bool,
    pub downward_closed: bool,
    pub union_closed: bool,
}

impl IdealReport {
    pub fn laws_hold(&self) -> bool {
        self.contains_empty && self.downward_closed && self.union_closed
    }

    pub fn diagnostics(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.contains_empty {
            out.push("ideal law violated: the empty event is not purely null".to_string());
        }
        if !self.downward_closed {
            out.push("ideal law violated: a subevent of a purely null event is not purely null".to_string());
        }
        if !self.union_closed {
            out.push("ideal law violated: a union of purely null events is not purely null".to_string());
        }
        out
    }

    /// Union of every purely null event.
    pub fn generator(&self) -> Event {
        self.events.iter().fold(Event::EMPTY, |acc, &e| acc.union(e))
    }
}

/// All purely null events, with the finite ideal laws checked. A ranking that
/// violates separability can break those laws; that is reported rather than
/// treated as an error.
pub fn purely_null_ideal(a: &Assessment) -> Result<IdealReport> {
    let events = a.algebra().enumerate_events()?;
    let mut member = vec![false; events.len()];
    let mut ideal = Vec::new();
    for &e in &events {
        if a.is_purely_null(e) {
            member[e.index()] = true;
            ideal.push(e);
        }
    }
    let downward_closed = ideal.iter().all(|e| e.subevents().all(|s| member[s.index()]));
    let union_closed = ideal
        .iter()
        .all(|x| ideal.iter().all(|y| member[x.union(*y).index()]));
    Ok(IdealReport {
        contains_empty: member[0],
        downward_closed,
        union_closed,
        events: ideal,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientAlgebra {
    source: Assessment,
    null_part: Event,
    classes: Vec<Vec<Event>>,
    class_index: Vec<u32>,
    quotient_rank: Vec<u32>,
}

/// Quotient of `a` by its purely-null ideal. Requires a separable ranking.
pub fn null_quotient(a: &Assessment) -> Result<QuotientAlgebra> {
    let violations = a.check_separability_limited(1);
    if !violations.is_empty() {
        return Err(Error::Precondition(format!(
            "the ranking violates separability ({} violating triples); the quotient ranking is not well defined",
            violations.total
        )));
    }
    let ideal = purely_null_ideal(a)?;
    if !ideal.laws_hold() {
        return Err(Error::Precondition(ideal.diagnostics().join("; ")));
    }
    let null_part = ideal.generator();
    let algebra = a.algebra();

    let mut key_to_class: Vec<Option<u32>> = vec![None; algebra.event_count()];
    let mut classes: Vec<Vec<Event>> = Vec::new();
    let mut class_index = vec![0u32; algebra.event_count()];
    for e in algebra.enumerate_events()? {
        let key = e.difference(null_part);
        let c = *key_to_class[key.index()].get_or_insert_with(|| {
            classes.push(Vec::new());
            (classes.len() - 1) as u32
        });
        classes[c as usize].push(e);
        class_index[e.index()] = c;
    }

    let mut quotient_rank = Vec::with_capacity(classes.len());
    for class in &classes {
        let r = a.rank(class[0]);
        if let Some(&odd) = class.iter().find(|&&e| a.rank(e) != r) {
            return Err(Error::Precondition(format!(
                "events {} and {} differ by a purely null event but are ranked differently",
                algebra.describe(class[0]),
                algebra.describe(odd)
            )));
        }
        quotient_rank.push(r);
    }

    Ok(QuotientAlgebra {
        source: a.clone(),
        null_part,
        classes,
        class_index,
        quotient_rank,
    })
}

pub type ClassId = usize;

impl QuotientAlgebra {
    pub fn source(&self) -> &Assessment {
        &self.source
    }

    /// Union of all purely null events of the source.
    pub fn null_part(&self) -> Event {
        self.null_part
    }

    /// Classes in order of their representatives; members in event order.
    pub fn classes(&self) -> &[Vec<Event>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Least member of the class in subset-as-integer order.
    pub fn representative(&self, c: ClassId) -> Event {
        self.classes[c][0]
    }

    pub fn class_of(&self, e: Event) -> ClassId {
        self.class_index[e.index()] as usize
    }

    pub fn quotient_rank(&self, c: ClassId) -> u32 {
        self.quotient_rank[c]
    }

    /// `[A] ∪* [B]`, computed from representatives.
    pub fn union(&self, x: ClassId, y: ClassId) -> ClassId {
        self.class_of(self.representative(x).union(self.representative(y)))
    }

    pub fn intersection(&self, x: ClassId, y: ClassId) -> ClassId {
        self.class_of(self.representative(x).intersection(self.representative(y)))
    }

    /// `¬*[A]`, computed from the representative.
    pub fn complement(&self, x: ClassId) -> ClassId {
        self.class_of(self.source.algebra().complement(self.representative(x)))
    }

    /// `[A] ⊆* [B]`.
    pub fn is_below(&self, x: ClassId, y: ClassId) -> bool {
        self.union(x, y) == y
    }

    /// Levels of the quotient ranking, lowest first, as lists of class ids.
    pub fn levels(&self) -> Vec<Vec<ClassId>> {
        let mut out = vec![Vec::new(); self.source.level_count() as usize];
        for (c, &r) in self.quotient_rank.iter().enumerate() {
            out[r as usize].push(c);
        }
        out
    }

    /// Pairs `(A, B)` where the class operations disagree with the event
    /// operations: `[A ∪ B] ≠ [A] ∪* [B]` or `[¬A] ≠ ¬*[A]`.
    pub fn lattice_law_violations(&self) -> Vec<(Event, Event)> {
        let algebra = self.source.algebra();
        let events: Vec<Event> = (0..algebra.event_count() as u64).map(Event::from_bits).collect();
        let mut out = Vec::new();
        for &a in &events {
            let ca = self.class_of(a);
            if self.class_of(algebra.complement(a)) != self.complement(ca) {
                out.push((a, a));
            }
            for &b in &events {
                if self.class_of(a.union(b)) != self.union(ca, self.class_of(b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Pairs `(A, B)` where `A ≿ B` and `[A] ≿* [B]` disagree.
    pub fn ranking_violations(&self) -> Vec<(Event, Event)> {
        let a = &self.source;
        let n = a.algebra().event_count() as u64;
        let mut out = Vec::new();
        for x in (0..n).map(Event::from_bits) {
            for y in (0..n).map(Event::from_bits) {
                let source = a.weakly_prefers(x, y);
                let quotient = self.quotient_rank(self.class_of(x)) >= self.quotient_rank(self.class_of(y));
                if source != quotient {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Classes all of whose subclasses are null in the quotient ranking.
    pub fn purely_null_classes(&self) -> Vec<ClassId> {
        let zero = self.quotient_rank(self.class_of(Event::EMPTY));
        (0..self.class_count())
            .filter(|&c| {
                (0..self.class_count())
                    .filter(|&d| self.is_below(d, c))
                    .all(|d| self.quotient_rank(d) == zero)
            })
            .collect()
    }

    /// The quotient ranking as an assessment on the atoms outside the null
    /// part, which the quotient algebra is isomorphic to.
    pub fn as_assessment(&self) -> Result<Assessment> {
        let algebra = self.source.algebra();
        let kept: Vec<usize> = algebra.complement(self.null_part).atoms().collect();
        if kept.is_empty() {
            return Err(Error::Degenerate(
                "every atom is purely null; the quotient is the one-element algebra".into(),
            ));
        }
        let reduced = Algebra::new(kept.iter().map(|&i| algebra.label(i).to_string()))?;
        Assessment::from_key(reduced, |e| {
            let lifted = Event::from_atoms(e.atoms().map(|j| kept[j]));
            self.source.rank(lifted)
        })
    }
}
