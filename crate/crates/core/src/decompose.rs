//! Hahn and Jordan decompositions, Bayesian representations, densities and
//! annulments for signed measures on a finite algebra.
//!
//! For a normalized `μ` with `μ(S) = 0`, the Jordan parts are the probability
//! measures `μ0 = max(0, -w)` and `μ1 = max(0, w)` atom by atom. The Bayesian
//! representations of the induced ranking are then exactly the triples
//!
//! ```text
//! prior     = (1 - p)·μ0 + p·μ1,   p = prior(H⊕) ∈ (0, 1)
//! posterior = μ1
//! guess     ∼ H⊕ with equal prior and posterior mass
//! ```
//!
//! On a finite algebra a ranking can have several normalized representations.
//! Each is its own `μ` above, so the family is indexed by representation as
//! well as by `p`. [`bayes_family_complete`] checks that claim exhaustively on
//! small algebras.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use crate::algebra::{Algebra, Event};
use crate::assessment::Assessment;
use crate::error::{Error, Result};
use crate::measure::SignedMeasure;
use crate::rational::{self, Rational};

/// Most zero-weight atoms `enumerate-all` will expand (`2^12` pairs).
pub const MAX_ENUMERATED_ZERO_ATOMS: usize = 12;

/// Largest algebra [`bayes_family_complete`] accepts.
pub const MAX_COMPLETENESS_ATOMS: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroPolicy {
    ToPos,
    ToNeg,
    EnumerateAll,
}

impl ZeroPolicy {
    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "to-pos" => Ok(Self::ToPos),
            "to-neg" => Ok(Self::ToNeg),
            "enumerate-all" => Ok(Self::EnumerateAll),
            other => Err(Error::Parse(format!(
                "unknown zero policy {other:?}; expected to-pos, to-neg or enumerate-all"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HahnPair {
    pub pos: Event,
    pub neg: Event,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JordanPair {
    pub mu0: SignedMeasure,
    pub mu1: SignedMeasure,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BayesianRep {
    pub mu0: SignedMeasure,
    pub mu1: SignedMeasure,
    pub guess: Event,
    pub p: Rational,
}

fn sign_split(mu: &SignedMeasure) -> (Event, Event, Event) {
    let mut pos = 0u64;
    let mut neg = 0u64;
    let mut zero = 0u64;
    for (i, w) in mu.weights().iter().enumerate() {
        let bit = 1u64 << i;
        if w.is_positive() {
            pos |= bit;
        } else if w.is_negative() {
            neg |= bit;
        } else {
            zero |= bit;
        }
    }
    (Event::from_bits(pos), Event::from_bits(neg), Event::from_bits(zero))
}

/// The Hahn pair with zero-weight atoms on the positive side.
pub fn default_hahn(mu: &SignedMeasure) -> HahnPair {
    let (pos, neg, zero) = sign_split(mu);
    HahnPair {
        pos: pos.union(zero),
        neg,
    }
}

/// Hahn decompositions of `mu`. Zero-weight atoms may sit on either side;
/// `policy` picks one side or enumerates every split, ordered by positive part.
pub fn hahn(mu: &SignedMeasure, policy: ZeroPolicy) -> Result<Vec<HahnPair>> {
    let (pos, neg, zero) = sign_split(mu);
    match policy {
        ZeroPolicy::ToPos => Ok(vec![HahnPair {
            pos: pos.union(zero),
            neg,
        }]),
        ZeroPolicy::ToNeg => Ok(vec![HahnPair {
            pos,
            neg: neg.union(zero),
        }]),
        ZeroPolicy::EnumerateAll => {
            if zero.len() > MAX_ENUMERATED_ZERO_ATOMS {
                return Err(Error::Capacity {
                    what: "zero-weight atoms to enumerate",
                    actual: zero.len(),
                    cap: MAX_ENUMERATED_ZERO_ATOMS,
                });
            }
            let mut pairs: Vec<HahnPair> = zero
                .subevents()
                .map(|z| HahnPair {
                    pos: pos.union(z),
                    neg: neg.union(zero.difference(z)),
                })
                .collect();
            pairs.sort_by_key(|p| p.pos);
            Ok(pairs)
        }
    }
}

fn require_absolute_normalized(mu: &SignedMeasure) -> Result<()> {
    let total = mu.total();
    if !total.is_zero() {
        return Err(Error::Absoluteness(rational::format(&total)));
    }
    if !mu.is_normalized() {
        return Err(Error::NotNormalized(rational::format(&mu.sup_norm())));
    }
    Ok(())
}

/// The unique Jordan decomposition `mu = mu1 - mu0` of a normalized measure
/// with `mu(S) = 0`.
pub fn jordan(mu: &SignedMeasure) -> Result<JordanPair> {
    require_absolute_normalized(mu)?;
    let negative: Vec<Rational> = mu
        .weights()
        .iter()
        .map(|w| if w.is_negative() { -w.clone() } else { Rational::zero() })
        .collect();
    let positive: Vec<Rational> = mu
        .weights()
        .iter()
        .map(|w| if w.is_positive() { w.clone() } else { Rational::zero() })
        .collect();
    Ok(JordanPair {
        mu0: SignedMeasure::new(mu.algebra().clone(), negative)?,
        mu1: SignedMeasure::new(mu.algebra().clone(), positive)?,
    })
}

/// Brute-force check that `jp.mu1(A) = max{μ(B) : B ⊆ A}` and
/// `jp.mu0(A) = -min{μ(B) : B ⊆ A}` for every event `A`.
pub fn verify_jordan_sup_formula(mu: &SignedMeasure, jp: &JordanPair) -> Result<bool> {
    let values = mu.value_table()?;
    let count = values.len();
    // sup[A] and inf[A] range over B ⊆ A, built from A's immediate subevents.
    let mut sup = values.clone();
    let mut inf = values.clone();
    for mask in 1..count {
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            let smaller = mask ^ bit;
            if sup[smaller] > sup[mask] {
                sup[mask] = sup[smaller].clone();
            }
            if inf[smaller] < inf[mask] {
                inf[mask] = inf[smaller].clone();
            }
        }
    }
    let posterior = jp.mu1.value_table()?;
    let prior = jp.mu0.value_table()?;
    Ok((0..count).all(|m| posterior[m] == sup[m] && prior[m] == -inf[m].clone()))
}

/// `(1 - p)·μ^J_0 + p·μ^J_1` as prior and `μ^J_1` as posterior.
pub fn bayes_family(mu: &SignedMeasure, p: &Rational, guess: Option<Event>) -> Result<BayesianRep> {
    if !rational::in_open_unit(p) {
        return Err(Error::Parameter(format!(
            "p = {} but the prior mass of the guess must satisfy μ0(A*) ∈ (0,1)",
            rational::format(p)
        )));
    }
    let jp = jordan(mu)?;
    let mu0 = jp.mu0.mix(&jp.mu1, p)?;
    let mu1 = jp.mu1;
    let hahn_pos = default_hahn(mu).pos;
    let guess = match guess {
        None => hahn_pos,
        Some(g) => {
            mu.algebra().check(g)?;
            let a = Assessment::induced(mu)?;
            let eq = guess_equivalence(&a, &mu0, &mu1, hahn_pos, g);
            if !eq.holds() {
                return Err(Error::GuessEquivalence(format!(
                    "{} vs H+ = {}: ranked equal {}, equal prior mass {}, equal posterior mass {}",
                    mu.algebra().describe(g),
                    mu.algebra().describe(hahn_pos),
                    eq.ranked_equal,
                    eq.prior_equal,
                    eq.posterior_equal
                )));
            }
            g
        }
    };
    Ok(BayesianRep {
        mu0,
        mu1,
        guess,
        p: p.clone(),
    })
}

/// The three senses in which a guess must match the Hahn positive part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GuessEquivalence {
    pub ranked_equal: bool,
    pub prior_equal: bool,
    pub posterior_equal: bool,
}

impl GuessEquivalence {
    pub fn holds(&self) -> bool {
        self.ranked_equal && self.prior_equal && self.posterior_equal
    }
}

pub fn guess_equivalence(
    a: &Assessment,
    mu0: &SignedMeasure,
    mu1: &SignedMeasure,
    hahn_pos: Event,
    guess: Event,
) -> GuessEquivalence {
    GuessEquivalence {
        ranked_equal: a.equivalent(guess, hahn_pos),
        prior_equal: mu0.value(guess) == mu0.value(hahn_pos),
        posterior_equal: mu1.value(guess) == mu1.value(hahn_pos),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BayesianReport {
    /// Prior and posterior are probability measures on the assessment's algebra.
    pub probability_measures: bool,
    /// (i) the ranking is the one induced by `mu1 - mu0`.
    pub ranking: bool,
    /// (ii) `mu0(guess) ∈ (0, 1)`.
    pub prior_mass_in_unit: bool,
    /// (iii) `mu1(A) = mu0(A ∩ guess) / mu0(guess)` for every event `A`.
    pub conditional: bool,
    /// First event where (iii) fails, when it does.
    pub conditional_witness: Option<Event>,
}

impl BayesianReport {
    pub fn holds(&self) -> bool {
        self.probability_measures && self.ranking && self.prior_mass_in_unit && self.conditional
    }
}

pub fn verify_bayesian(
    a: &Assessment,
    mu0: &SignedMeasure,
    mu1: &SignedMeasure,
    guess: Event,
) -> Result<BayesianReport> {
    let algebra = a.algebra();
    if mu0.algebra() != algebra || mu1.algebra() != algebra {
        return Err(Error::AlgebraMismatch("prior, posterior and assessment must share an algebra".into()));
    }
    algebra.check(guess)?;
    let probability_measures = mu0.is_probability() && mu1.is_probability();
    let diff = mu1.sub(mu0)?;
    let ranking = Assessment::induced(&diff)?.ranks() == a.ranks();
    let prior_guess = mu0.value(guess);
    let prior_mass_in_unit = rational::in_open_unit(&prior_guess);

    let mut conditional_witness = None;
    if prior_guess.is_zero() {
        conditional_witness = Some(Event::EMPTY);
    } else {
        let prior = mu0.value_table()?;
        let posterior = mu1.value_table()?;
        for e in algebra.enumerate_events()? {
            if posterior[e.index()] != &prior[e.intersection(guess).index()] / &prior_guess {
                conditional_witness = Some(e);
                break;
            }
        }
    }
    Ok(BayesianReport {
        probability_measures,
        ranking,
        prior_mass_in_unit,
        conditional: conditional_witness.is_none(),
        conditional_witness,
    })
}

/// The p values used by exhaustive family checks: tenths plus the two priors
/// of the archery example.
pub fn p_grid() -> Vec<Rational> {
    let mut grid: Vec<Rational> = (1..10).map(|k| rational::ratio(k, 10)).collect();
    grid.push(rational::ratio(23, 100));
    grid.push(rational::ratio(73, 150));
    grid.sort();
    grid
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompletenessReport {
    pub tuples_checked: usize,
    pub verified: usize,
    pub in_form: usize,
    /// Tuples where verification and the closed form disagree.
    pub mismatches: Vec<String>,
    /// Whether every Hahn decomposition gave the same closed-form verdict.
    pub hahn_agreement: bool,
    /// Verified tuples whose `posterior - prior` normalizes to a measure other
    /// than the given `mu`. Zero whenever the representation is unique.
    pub other_representations: usize,
    pub admissible_guesses: Vec<Event>,
    pub posteriors: Vec<SignedMeasure>,
}

impl CompletenessReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty() && self.hahn_agreement
    }
}

/// Probability vectors on `n` atoms whose coordinates are multiples of `1/q`.
fn simplex_grid(n: usize, q: i64) -> Vec<Vec<Rational>> {
    fn go(n: usize, left: i64, q: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<Rational>>) {
        if prefix.len() + 1 == n {
            prefix.push(left);
            out.push(prefix.iter().map(|&k| rational::ratio(k, q)).collect());
            prefix.pop();
            return;
        }
        for k in 0..=left {
            prefix.push(k);
            go(n, left - k, q, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, q, q, &mut Vec::new(), &mut out);
    out
}

/// Exhaustively compares Bayesian-representation verification against the
/// closed form on an algebra of at most four atoms.
///
/// Candidate priors are the closed-form mixtures over [`p_grid`] plus every
/// probability vector on a `1/6` grid. Each prior is paired with every guess
/// and with two posteriors: its own conditional on the guess, and the Jordan
/// positive part of `mu`. A tuple is judged against the measure it realizes,
/// `normalize(posterior - prior)`, which must represent the assessment, and
/// against every Hahn decomposition of that measure.
pub fn bayes_family_complete(a: &Assessment, mu: &SignedMeasure) -> Result<CompletenessReport> {
    let algebra: &Algebra = a.algebra();
    if algebra.len() > MAX_COMPLETENESS_ATOMS {
        return Err(Error::Capacity {
            what: "atom count for exhaustive Bayesian search",
            actual: algebra.len(),
            cap: MAX_COMPLETENESS_ATOMS,
        });
    }
    if mu.algebra() != algebra {
        return Err(Error::AlgebraMismatch("measure and assessment must share an algebra".into()));
    }
    if Assessment::induced(mu)?.ranks() != a.ranks() {
        return Err(Error::Precondition("mu does not represent the assessment".into()));
    }
    let jp = jordan(mu).ok();

    let mut priors: Vec<SignedMeasure> = Vec::new();
    if let Some(jp) = &jp {
        for p in p_grid() {
            priors.push(jp.mu0.mix(&jp.mu1, &p)?);
        }
    }
    for w in simplex_grid(algebra.len(), 6) {
        let prior = SignedMeasure::new(algebra.clone(), w)?;
        if !priors.contains(&prior) {
            priors.push(prior);
        }
    }

    // One closed-form verdict per Hahn pair of the realized measure, plus
    // that measure when it represents the assessment.
    let verdicts_for = |mu0: &SignedMeasure, mu1: &SignedMeasure, guess: Event| -> Result<(Vec<bool>, Option<SignedMeasure>)> {
        let Ok(realized) = mu1.sub(mu0)?.normalize() else {
            return Ok((vec![false], None));
        };
        if Assessment::induced(&realized)?.ranks() != a.ranks() {
            return Ok((vec![false], None));
        }
        let Ok(jr) = jordan(&realized) else {
            return Ok((vec![false], None));
        };
        let verdicts = hahn(&realized, ZeroPolicy::EnumerateAll)?
            .iter()
            .map(|h| {
                let p = mu0.value(h.pos);
                let shaped = rational::in_open_unit(&p) && *mu1 == jr.mu1 && *mu0 == jr.mu0.mix(&jr.mu1, &p)?;
                Ok(shaped && guess_equivalence(a, mu0, mu1, h.pos, guess).holds())
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok((verdicts, Some(realized)))
    };

    let mut report = CompletenessReport {
        tuples_checked: 0,
        verified: 0,
        in_form: 0,
        mismatches: Vec::new(),
        hahn_agreement: true,
        other_representations: 0,
        admissible_guesses: Vec::new(),
        posteriors: Vec::new(),
    };
    let mut guesses = BTreeSet::new();
    for prior in &priors {
        for guess in algebra.enumerate_events()? {
            let mut posteriors = Vec::new();
            if let Ok(c) = prior.condition_on(guess) {
                posteriors.push(c);
            }
            if let Some(jp) = &jp {
                if !posteriors.contains(&jp.mu1) {
                    posteriors.push(jp.mu1.clone());
                }
            }
            for posterior in posteriors {
                report.tuples_checked += 1;
                let verified = verify_bayesian(a, prior, &posterior, guess)?.holds();
                let (verdicts, realized) = verdicts_for(prior, &posterior, guess)?;
                let in_form = verdicts[0];
                if verdicts.iter().any(|&v| v != in_form) {
                    report.hahn_agreement = false;
                }
                report.verified += usize::from(verified);
                report.in_form += usize::from(in_form);
                if verified != in_form {
                    report.mismatches.push(format!(
                        "prior {:?}, guess {}: verified {verified}, closed form {in_form}",
                        prior.weights().iter().map(rational::format).collect::<Vec<_>>(),
                        algebra.describe(guess)
                    ));
                }
                if verified {
                    if realized.as_ref() != Some(mu) {
                        report.other_representations += 1;
                    }
                    guesses.insert(guess);
                    if !report.posteriors.contains(&posterior) {
                        report.posteriors.push(posterior);
                    }
                }
            }
        }
    }
    report.admissible_guesses = guesses.into_iter().collect();
    Ok(report)
}

/// Density `f` of `mu1` with respect to `mu0`, atom by atom; zero where
/// `mu0` vanishes.
pub fn radon_nikodym_density(mu0: &SignedMeasure, mu1: &SignedMeasure) -> Result<Vec<Rational>> {
    if mu0.algebra() != mu1.algebra() {
        return Err(Error::AlgebraMismatch("measures live on different algebras".into()));
    }
    mu0.weights()
        .iter()
        .zip(mu1.weights())
        .enumerate()
        .map(|(i, (w0, w1))| {
            if w0.is_zero() {
                if w1.is_zero() {
                    Ok(Rational::zero())
                } else {
                    Err(Error::AbsoluteContinuity(mu0.algebra().label(i).to_string()))
                }
            } else {
                Ok(w1 / w0)
            }
        })
        .collect()
}

/// A subevent `B` of `a_plus` with `μ(B) = -μ(a_minus)`, so that `B ∪ a_minus`
/// is null. Among all such subevents the lexicographically smallest (by
/// sorted atom indices) is returned. On a finite algebra one need not exist.
pub fn annulment_search(mu: &SignedMeasure, a_plus: Event, a_minus: Event) -> Result<Option<Event>> {
    let algebra = mu.algebra();
    algebra.check(a_plus)?;
    algebra.check(a_minus)?;
    if !a_plus.is_disjoint(a_minus) {
        return Err(Error::Contract("a_plus and a_minus must be disjoint".into()));
    }
    let a = Assessment::induced(mu)?;
    if !a.sign_classify(a_plus).purely_non_negative {
        return Err(Error::Contract("a_plus must be purely non-negative".into()));
    }
    if !a.sign_classify(a_minus).purely_non_positive {
        return Err(Error::Contract("a_minus must be purely non-positive".into()));
    }
    if mu.value(a_plus.union(a_minus)).is_negative() {
        return Err(Error::Contract("mu(a_plus ∪ a_minus) must be non-negative".into()));
    }
    let target = -mu.value(a_minus);
    let atoms: Vec<usize> = a_plus.atoms().collect();
    Ok(lex_first_subset_sum(mu.weights(), &atoms, &target))
}

/// Preorder DFS over increasing index sequences visits subsets in
/// lexicographic order, so the first hit is the lexicographic minimum.
fn lex_first_subset_sum(weights: &[Rational], atoms: &[usize], target: &Rational) -> Option<Event> {
    fn visit(
        weights: &[Rational],
        atoms: &[usize],
        start: usize,
        chosen: Event,
        sum: &Rational,
        target: &Rational,
    ) -> Option<Event> {
        if sum == target {
            return Some(chosen);
        }
        for k in start..atoms.len() {
            let i = atoms[k];
            let next = sum + &weights[i];
            // weights inside a_plus are non-negative
            if next > *target {
                continue;
            }
            if let Some(found) = visit(weights, atoms, k + 1, chosen.union(Event::atom(i)), &next, target) {
                return Some(found);
            }
        }
        None
    }
    visit(weights, atoms, 0, Event::EMPTY, &Rational::zero(), target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn ev(atoms: &[usize]) -> Event {
        Event::from_atoms(atoms.iter().copied())
    }

    fn m(weights: &[i64]) -> SignedMeasure {
        SignedMeasure::from_ints(weights).unwrap()
    }

    #[test]
    fn hahn_examples() {
        assert_eq!(
            hahn(&m(&[1, -1]), ZeroPolicy::ToPos).unwrap(),
            vec![HahnPair { pos: ev(&[0]), neg: ev(&[1]) }]
        );
        assert_eq!(
            hahn(&m(&[1, 0, -1]), ZeroPolicy::EnumerateAll).unwrap(),
            vec![
                HahnPair { pos: ev(&[0]), neg: ev(&[1, 2]) },
                HahnPair { pos: ev(&[0, 1]), neg: ev(&[2]) },
            ]
        );
        let zero = m(&[0, 0]);
        assert_eq!(
            hahn(&zero, ZeroPolicy::ToPos).unwrap(),
            vec![HahnPair { pos: ev(&[0, 1]), neg: Event::EMPTY }]
        );
        assert_eq!(
            hahn(&m(&[1, 0, -1]), ZeroPolicy::ToNeg).unwrap(),
            vec![HahnPair { pos: ev(&[0]), neg: ev(&[1, 2]) }]
        );
    }

    #[test]
    fn hahn_enumeration_is_capped() {
        let many_zeros = SignedMeasure::from_ints(&[0; 13]).unwrap();
        assert!(matches!(
            hahn(&many_zeros, ZeroPolicy::EnumerateAll),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn hahn_pairs_pass_the_ordinal_checker() {
        let mu = m(&[2, 0, -1, 0, -1]);
        let a = Assessment::induced(&mu).unwrap();
        for pair in hahn(&mu, ZeroPolicy::EnumerateAll).unwrap() {
            assert!(a.check_hahn(pair.pos, pair.neg).holds());
        }
    }

    #[test]
    fn jordan_examples() {
        let jp = jordan(&m(&[1, -1])).unwrap();
        assert_eq!(jp.mu0.weights(), &[int(0), int(1)]);
        assert_eq!(jp.mu1.weights(), &[int(1), int(0)]);
        assert!(matches!(jordan(&m(&[1])), Err(Error::Absoluteness(_))));
        assert!(matches!(jordan(&m(&[2, -2])), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn sup_formula_examples() {
        let mu = m(&[1, -1]);
        let jp = jordan(&mu).unwrap();
        assert!(verify_jordan_sup_formula(&mu, &jp).unwrap());
        let swapped = JordanPair {
            mu0: jp.mu1.clone(),
            mu1: jp.mu0.clone(),
        };
        assert!(!verify_jordan_sup_formula(&mu, &swapped).unwrap());

        let with_zero = m(&[1, 0, -1]);
        let jp = jordan(&with_zero).unwrap();
        assert!(verify_jordan_sup_formula(&with_zero, &jp).unwrap());
    }

    #[test]
    fn bayes_family_even_mixture() {
        let rep = bayes_family(&m(&[1, -1]), &ratio(1, 2), None).unwrap();
        assert_eq!(rep.mu0.weights(), &[ratio(1, 2), ratio(1, 2)]);
        assert_eq!(rep.mu1.weights(), &[int(1), int(0)]);
        assert_eq!(rep.guess, ev(&[0]));
        let a = Assessment::induced(&m(&[1, -1])).unwrap();
        assert!(verify_bayesian(&a, &rep.mu0, &rep.mu1, rep.guess).unwrap().holds());
    }

    #[test]
    fn bayes_family_rejects_boundary_p() {
        for p in [int(0), int(1), ratio(-1, 2)] {
            assert!(matches!(bayes_family(&m(&[1, -1]), &p, None), Err(Error::Parameter(_))));
        }
    }

    #[test]
    fn bayes_family_checks_alternative_guesses() {
        let mu = m(&[1, 0, -1]);
        assert_eq!(bayes_family(&mu, &ratio(1, 3), Some(ev(&[0]))).unwrap().guess, ev(&[0]));
        assert!(matches!(
            bayes_family(&mu, &ratio(1, 3), Some(ev(&[1]))),
            Err(Error::GuessEquivalence(_))
        ));
    }

    #[test]
    fn completeness_on_signed_pair() {
        let mu = m(&[1, -1]);
        let a = Assessment::induced(&mu).unwrap();
        let r = bayes_family_complete(&a, &mu).unwrap();
        assert!(r.holds(), "{:?}", r.mismatches);
        assert_eq!(r.admissible_guesses, vec![ev(&[0])]);
        assert_eq!(r.posteriors, vec![jordan(&mu).unwrap().mu1]);
    }

    #[test]
    fn completeness_with_zero_atom() {
        let mu = m(&[1, 0, -1]);
        let a = Assessment::induced(&mu).unwrap();
        let r = bayes_family_complete(&a, &mu).unwrap();
        assert!(r.holds(), "{:?}", r.mismatches);
        assert_eq!(r.admissible_guesses, vec![ev(&[0]), ev(&[0, 1])]);
        assert_eq!(r.posteriors.len(), 1);
    }

    #[test]
    fn completeness_finds_nothing_for_degenerate_input() {
        let mu = m(&[0, 0]);
        let a = Assessment::induced(&mu).unwrap();
        let r = bayes_family_complete(&a, &mu).unwrap();
        assert_eq!(r.verified, 0);
        assert!(r.holds());
        assert!(r.admissible_guesses.is_empty());
    }

    #[test]
    fn completeness_is_capped() {
        let mu = m(&[1, -1, 0, 0, 0]);
        let a = Assessment::induced(&mu).unwrap();
        assert!(matches!(bayes_family_complete(&a, &mu), Err(Error::Capacity { .. })));
    }

    #[test]
    fn density_examples() {
        let p = m(&[1, 3]).scale(&ratio(1, 4));
        assert_eq!(radon_nikodym_density(&p, &p).unwrap(), vec![int(1), int(1)]);
        let a = m(&[1, 0]);
        let b = m(&[0, 1]);
        assert!(matches!(radon_nikodym_density(&a, &b), Err(Error::AbsoluteContinuity(l)) if l == "a2"));
    }

    #[test]
    fn annulment_examples() {
        assert_eq!(annulment_search(&m(&[1, 2, -2]), ev(&[0, 1]), ev(&[2])).unwrap(), Some(ev(&[1])));
        assert!(matches!(
            annulment_search(&m(&[1, 1, -3]), ev(&[0, 1]), ev(&[2])),
            Err(Error::Contract(_))
        ));
        assert_eq!(annulment_search(&m(&[1, 1, -1]), ev(&[0, 1]), ev(&[2])).unwrap(), Some(ev(&[0])));
    }

    #[test]
    fn annulment_may_not_exist_on_finite_algebras() {
        assert_eq!(annulment_search(&m(&[2, 2, -1]), ev(&[0, 1]), ev(&[2])).unwrap(), None);
    }

    #[test]
    fn annulment_prefers_lexicographic_order_over_integer_order() {
        // {a1,a3} and {a2} both annul {a4}; {a1,a3} is lexicographically first
        let found = annulment_search(&m(&[1, 2, 1, -2]), ev(&[0, 1, 2]), ev(&[3])).unwrap();
        assert_eq!(found, Some(ev(&[0, 2])));
    }

    #[test]
    fn annulment_contract_checks() {
        let mu = m(&[1, -1, 1]);
        assert!(annulment_search(&mu, ev(&[0, 1]), ev(&[1])).is_err());
        assert!(annulment_search(&mu, ev(&[0, 1]), ev(&[2])).is_err());
        assert!(annulment_search(&mu, ev(&[0]), ev(&[2])).is_err());
    }
}
