//! Generators and independent oracles shared by the integration suites.
//!
//! Oracles work on integer numerators over a common denominator, so they
//! share no arithmetic with the library's rational code.

#![allow(dead_code)]

pub mod fm;

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use signed_inference::rational::{self, Rational};
use signed_inference::{Algebra, Assessment, Event, SignedMeasure};

/// Weights `num[i] / den` on atoms `a1..an`.
#[derive(Clone, Debug)]
pub struct IntMeasure {
    pub num: Vec<i64>,
    pub den: i64,
}

impl IntMeasure {
    pub fn to_measure(&self) -> SignedMeasure {
        let alg = Algebra::with_atoms(self.num.len()).unwrap();
        SignedMeasure::new(alg, self.num.iter().map(|&x| rational::ratio(x, self.den)).collect()).unwrap()
    }

    pub fn n(&self) -> usize {
        self.num.len()
    }

    /// Numerator of the event value, by summing over bits.
    pub fn value(&self, mask: u64) -> i64 {
        (0..self.n()).filter(|i| mask >> i & 1 == 1).map(|i| self.num[i]).sum()
    }

    /// Dense rank of every event by value.
    pub fn ranks(&self) -> Vec<u32> {
        dense_ranks(&(0..1u64 << self.n()).map(|m| self.value(m)).collect::<Vec<_>>())
    }
}

pub fn dense_ranks(values: &[i64]) -> Vec<u32> {
    let mut distinct: Vec<i64> = values.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    values
        .iter()
        .map(|v| distinct.binary_search(v).unwrap() as u32)
        .collect()
}

/// Random numerators in `[-range, range]` over a random denominator.
pub fn random_int_measure(rng: &mut ChaCha8Rng, n: usize, range: i64) -> IntMeasure {
    let den = rng.gen_range(1..=12);
    let num = (0..n).map(|_| rng.gen_range(-range..=range)).collect();
    IntMeasure { num, den }
}

/// As [`random_int_measure`], with the last atom chosen so the total is zero
/// and at least one weight nonzero.
pub fn random_zero_sum(rng: &mut ChaCha8Rng, n: usize, range: i64) -> IntMeasure {
    loop {
        let mut m = random_int_measure(rng, n, range);
        let partial: i64 = m.num[..n - 1].iter().sum();
        m.num[n - 1] = -partial;
        if m.num.iter().any(|&x| x != 0) {
            return m;
        }
    }
}

pub fn ev(atoms: &[usize]) -> Event {
    Event::from_atoms(atoms.iter().copied())
}

pub fn q(n: i64, d: i64) -> Rational {
    rational::ratio(n, d)
}

pub fn ranks_of(a: &Assessment) -> Vec<u32> {
    a.ranks().to_vec()
}

/// Every weight vector in `[-range, range]^n`, in odometer order.
pub fn all_int_vectors(n: usize, range: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-range..=range).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

/// Prints one acceptance line and returns whether it passed.
pub fn report(criterion: &str, passed: bool, elapsed: std::time::Duration, bound_secs: f64) -> bool {
    let within = elapsed.as_secs_f64() < bound_secs;
    let ok = passed && within;
    println!(
        "{} {criterion} ({:.3}s, bound {bound_secs}s{})",
        if ok { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        if within { "" } else { ", exceeded" }
    );
    ok
}
