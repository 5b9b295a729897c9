//! Fourier–Motzkin elimination as an independent feasibility oracle for
//! small systems `rows · x >= rhs` with free variables.

use num_traits::{Signed, Zero};
use signed_inference::Rational;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Row {
    coef: Vec<Rational>,
    rhs: Rational,
}

impl Row {
    /// Scales so the first nonzero coefficient has absolute value one, which
    /// lets duplicates be dropped.
    fn normalized(mut self) -> Row {
        if let Some(lead) = self.coef.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in &mut self.coef {
                *c = &*c / &lead;
            }
            self.rhs = &self.rhs / &lead;
        }
        self
    }
}

pub fn feasible(rows: &[Vec<Rational>], rhs: &[Rational]) -> bool {
    let n = rows.first().map_or(0, Vec::len);
    let mut system: Vec<Row> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| Row { coef: r.clone(), rhs: b.clone() }.normalized())
        .collect();
    for k in 0..n {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for row in system {
            if row.coef[k].is_positive() {
                pos.push(row);
            } else if row.coef[k].is_negative() {
                neg.push(row);
            } else {
                rest.push(row);
            }
        }
        for p in &pos {
            for m in &neg {
                let (a, b) = (p.coef[k].clone(), -m.coef[k].clone());
                let coef: Vec<Rational> = p.coef.iter().zip(&m.coef).map(|(x, y)| x * &b + y * &a).collect();
                let rhs = &p.rhs * &b + &m.rhs * &a;
                rest.push(Row { coef, rhs }.normalized());
            }
        }
        rest.sort();
        rest.dedup();
        system = rest;
    }
    system.iter().all(|r| !r.rhs.is_positive())
}
