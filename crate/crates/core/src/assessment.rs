//! Rankings of events and the axioms an inference must satisfy.
//!
//! An [`Assessment`] is a total preorder on every event of a finite algebra,
//! stored as a dense rank per event. `A ≿ B` means `rank(A) >= rank(B)`, so
//! the order axiom (completeness and transitivity) holds by construction.
//!
//! Two axioms have no checker here. Continuity holds vacuously on a finite
//! algebra, since every shrinking sequence of events is eventually constant.
//! No-atoms fails for every non-null singleton of a finite algebra; the
//! measure-side analogue is [`SignedMeasure::measure_atoms`].

use std::cmp::Ordering;

use crate::algebra::{Algebra, Event, DEFAULT_ENUMERATION_CAP};
use crate::error::{Error, Result};
use crate::measure::SignedMeasure;

pub const DEFAULT_VIOLATION_LIMIT: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assessment {
    algebra: Algebra,
    rank: Vec<u32>,
    levels: u32,
}

/// Violations found by a checker: the first `limit` in event order, plus the
/// total count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violations<T> {
    pub items: Vec<T>,
    pub total: usize,
}

impl<T> Violations<T> {
    fn new() -> Self {
        Self {
            items: Vec::new(),
            total: 0,
        }
    }

    fn push(&mut self, item: T, limit: usize) {
        if self.items.len() < limit {
            self.items.push(item);
        }
        self.total += 1;
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn truncated(&self) -> bool {
        self.total > self.items.len()
    }
}

impl Assessment {
    /// Ranks every event by `key`; equal keys share a level.
    pub fn from_key<K, F>(algebra: Algebra, key: F) -> Result<Self>
    where
        K: Ord,
        F: Fn(Event) -> K,
    {
        let events = algebra.enumerate_events()?;
        let keys: Vec<K> = events.iter().map(|&e| key(e)).collect();
        let mut order: Vec<usize> = (0..keys.len()).collect();
        order.sort_by(|&i, &j| keys[i].cmp(&keys[j]));
        let mut rank = vec![0u32; keys.len()];
        let mut level = 0u32;
        for w in 0..order.len() {
            if w > 0 && keys[order[w]] != keys[order[w - 1]] {
                level += 1;
            }
            rank[order[w]] = level;
        }
        Ok(Self {
            algebra,
            rank,
            levels: level + 1,
        })
    }

    /// The ranking `A ≿ B ⇔ μ(A) ≥ μ(B)`.
    pub fn induced(mu: &SignedMeasure) -> Result<Self> {
        let table = mu.value_table()?;
        Self::from_key(mu.algebra().clone(), |e| table[e.index()].clone())
    }

    /// Builds an assessment from its levels, lowest first. The levels must
    /// partition every event and none may be empty.
    pub fn from_levels(algebra: Algebra, levels: &[Vec<Event>]) -> Result<Self> {
        algebra.ensure_enumerable(DEFAULT_ENUMERATION_CAP)?;
        let mut rank = vec![u32::MAX; algebra.event_count()];
        for (k, level) in levels.iter().enumerate() {
            if level.is_empty() {
                return Err(Error::InvalidAssessment(format!("level {k} is empty")));
            }
            for &e in level {
                algebra.check(e)?;
                if rank[e.index()] != u32::MAX {
                    return Err(Error::InvalidAssessment(format!(
                        "event {} appears in more than one level",
                        algebra.describe(e)
                    )));
                }
                rank[e.index()] = k as u32;
            }
        }
        if let Some(missing) = rank.iter().position(|&r| r == u32::MAX) {
            return Err(Error::InvalidAssessment(format!(
                "event {} is not ranked",
                algebra.describe(Event::from_bits(missing as u64))
            )));
        }
        Ok(Self {
            algebra,
            rank,
            levels: levels.len() as u32,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn rank(&self, e: Event) -> u32 {
        self.rank[e.index()]
    }

    pub fn ranks(&self) -> &[u32] {
        &self.rank
    }

    /// Number of equivalence classes `K`.
    pub fn level_count(&self) -> u32 {
        self.levels
    }

    /// Events per level, lowest level first, each level in event order.
    pub fn level_members(&self) -> Vec<Vec<Event>> {
        let mut out = vec![Vec::new(); self.levels as usize];
        for (mask, &r) in self.rank.iter().enumerate() {
            out[r as usize].push(Event::from_bits(mask as u64));
        }
        out
    }

    pub fn compare(&self, a: Event, b: Event) -> Ordering {
        self.rank(a).cmp(&self.rank(b))
    }

    /// `a ≿ b`.
    pub fn weakly_prefers(&self, a: Event, b: Event) -> bool {
        self.rank(a) >= self.rank(b)
    }

    /// `a ≻ b`.
    pub fn strictly_prefers(&self, a: Event, b: Event) -> bool {
        self.rank(a) > self.rank(b)
    }

    /// `a ∼ b`.
    pub fn equivalent(&self, a: Event, b: Event) -> bool {
        self.rank(a) == self.rank(b)
    }

    fn events(&self) -> impl Iterator<Item = Event> + '_ {
        (0..self.rank.len() as u64).map(Event::from_bits)
    }

    pub fn check_separability(&self) -> Violations<(Event, Event, Event)> {
        self.check_separability_limited(DEFAULT_VIOLATION_LIMIT)
    }

    /// Triples `(A, B, C)` with `C` disjoint from `A` and `B` for which
    /// `A ≿ B ⇔ A ∪ C ≿ B ∪ C` fails in either direction. Each unordered pair
    /// is reported once, with `A` the later event in event order.
    pub fn check_separability_limited(&self, limit: usize) -> Violations<(Event, Event, Event)> {
        let mut out = Violations::new();
        for a in self.events() {
            for b in self.events().take_while(|&b| b < a) {
                let before = self.compare(a, b);
                let free = self.algebra.complement(a.union(b));
                for c in free.subevents().skip(1) {
                    if self.compare(a.union(c), b.union(c)) != before {
                        out.push((a, b, c), limit);
                    }
                }
            }
        }
        out
    }

    pub fn check_monotonicity(&self) -> Violations<(Event, Event)> {
        self.check_monotonicity_limited(DEFAULT_VIOLATION_LIMIT)
    }

    /// Pairs `(A, B)` with `A ⊆ B` but `A ≻ B`.
    pub fn check_monotonicity_limited(&self, limit: usize) -> Violations<(Event, Event)> {
        let mut out = Violations::new();
        for b in self.events() {
            for a in b.subevents() {
                if self.strictly_prefers(a, b) {
                    out.push((a, b), limit);
                }
            }
        }
        out
    }

    /// Some event is strictly preferred to another.
    pub fn check_nondegeneracy(&self) -> bool {
        self.levels >= 2
    }

    /// `S ∼ ∅`.
    pub fn check_absoluteness(&self) -> bool {
        self.equivalent(self.algebra.full(), Event::EMPTY)
    }

    pub fn sign_classify(&self, e: Event) -> SignProfile {
        let zero = self.rank(Event::EMPTY);
        let base = match self.rank(e).cmp(&zero) {
            Ordering::Greater => Sign::Positive,
            Ordering::Equal => Sign::Null,
            Ordering::Less => Sign::Negative,
        };
        let mut purely_non_negative = true;
        let mut purely_non_positive = true;
        for sub in e.subevents() {
            let r = self.rank(sub);
            purely_non_negative &= r >= zero;
            purely_non_positive &= r <= zero;
            if !purely_non_negative && !purely_non_positive {
                break;
            }
        }
        SignProfile {
            base,
            purely_non_negative,
            purely_null: purely_non_negative && purely_non_positive,
            purely_non_positive,
            thoroughly_positive: base == Sign::Positive && purely_non_negative,
            thoroughly_negative: base == Sign::Negative && purely_non_positive,
        }
    }

    pub fn is_purely_null(&self, e: Event) -> bool {
        self.sign_classify(e).purely_null
    }

    /// Checks the four clauses of an ordinal Hahn decomposition.
    pub fn check_hahn(&self, pos: Event, neg: Event) -> HahnReport {
        let top_and_bottom = self
            .events()
            .all(|e| self.weakly_prefers(pos, e) && self.weakly_prefers(e, neg));
        let partition = pos.is_disjoint(neg) && pos.union(neg) == self.algebra.full();
        let signs_pos = self.sign_classify(pos);
        let signs_neg = self.sign_classify(neg);
        HahnReport {
            top_and_bottom,
            partition,
            positive_part_non_negative: signs_pos.purely_non_negative,
            negative_part_non_positive: signs_neg.purely_non_positive,
        }
    }

    /// Every event at the highest level.
    pub fn top_ranked(&self) -> Vec<Event> {
        let top = self.levels - 1;
        self.events().filter(|&e| self.rank(e) == top).collect()
    }

    pub fn bottom_ranked(&self) -> Vec<Event> {
        self.events().filter(|&e| self.rank(e) == 0).collect()
    }

    /// The symmetric difference of `x` and `y` is purely null.
    pub fn approx_equivalent(&self, x: Event, y: Event) -> bool {
        self.is_purely_null(x.symmetric_difference(y))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Null,
    Negative,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Positive => "positive",
            Sign::Null => "null",
            Sign::Negative => "negative",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignProfile {
    pub base: Sign,
    pub purely_non_negative: bool,
    pub purely_null: bool,
    pub purely_non_positive: bool,
    pub thoroughly_positive: bool,
    pub thoroughly_negative: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HahnReport {
    /// (i) `pos ≿ A ≿ neg` for every event `A`.
    pub top_and_bottom: bool,
    /// (ii) disjoint and covering `S`.
    pub partition: bool,
    /// (iii) every subevent of `pos` is non-negative.
    pub positive_part_non_negative: bool,
    /// (iv) every subevent of `neg` is non-positive.
    pub negative_part_non_positive: bool,
}

impl HahnReport {
    pub fn holds(&self) -> bool {
        self.top_and_bottom
            && self.partition
            && self.positive_part_non_negative
            && self.negative_part_non_positive
    }
}
