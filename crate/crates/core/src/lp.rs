//! Exact two-phase simplex over the rationals with Bland's pivoting rule.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    LessEq,
    GreaterEq,
    Equal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub coefficients: Vec<Rational>,
    pub relation: Relation,
    pub bound: Rational,
}

/// Linear program over non-negative variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpInstance {
    pub direction: Direction,
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub witness: Vec<Rational>,
}

impl LpInstance {
    pub fn new(direction: Direction, objective: Vec<Rational>) -> LpInstance {
        LpInstance { direction, objective, constraints: Vec::new() }
    }

    pub fn variables(&self) -> usize {
        self.objective.len()
    }

    pub fn add(&mut self, coefficients: Vec<Rational>, relation: Relation, bound: Rational) {
        self.constraints.push(Constraint { coefficients, relation, bound });
    }

    /// Whether `x` is non-negative and satisfies every constraint exactly.
    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        if x.len() != self.variables() || x.iter().any(|v| v.is_negative()) {
            return false;
        }
        self.constraints.iter().all(|c| {
            let lhs: Rational = c.coefficients.iter().zip(x).map(|(a, v)| a * v).sum();
            match c.relation {
                Relation::LessEq => lhs <= c.bound,
                Relation::GreaterEq => lhs >= c.bound,
                Relation::Equal => lhs == c.bound,
            }
        })
    }

    pub fn objective_value(&self, x: &[Rational]) -> Rational {
        self.objective.iter().zip(x).map(|(c, v)| c * v).sum()
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    // reduced costs; the last entry is minus the current objective value
    cost: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn rhs(&self) -> usize {
        self.cost.len() - 1
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Rational::one() / &self.rows[r][c];
        for x in self.rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.rows[r].clone();
        let eliminate = |row: &mut Vec<Rational>| {
            if row[c].is_zero() {
                return;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        };
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i != r {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.basis[r] = c;
    }

    /// Minimise with Bland's rule, letting only columns `< allowed` enter.
    fn run(&mut self, allowed: usize) -> Result<()> {
        let rhs = self.rhs();
        loop {
            let Some(enter) = (0..allowed).find(|&j| self.cost[j].is_negative()) else {
                return Ok(());
            };
            let mut leave: Option<(usize, Rational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[enter].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[enter];
                let better = match &leave {
                    None => true,
                    Some((best, best_ratio)) => {
                        ratio < *best_ratio || (ratio == *best_ratio && self.basis[i] < self.basis[*best])
                    }
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else {
                return Err(Error::Unbounded);
            };
            self.pivot(r, enter);
        }
    }
}

/// Exact optimum of `p` together with an optimal non-negative witness.
pub fn solve_lp(p: &LpInstance) -> Result<LpSolution> {
    let n = p.variables();
    for c in &p.constraints {
        if c.coefficients.len() != n {
            return Err(Error::InvalidParameter(alloc::format!(
                "constraint has {} coefficients, LP has {n} variables",
                c.coefficients.len()
            )));
        }
    }
    // normalise to non-negative right-hand sides
    let rows: Vec<(Vec<Rational>, Relation, Rational)> = p
        .constraints
        .iter()
        .map(|c| {
            if c.bound.is_negative() {
                let flipped = match c.relation {
                    Relation::LessEq => Relation::GreaterEq,
                    Relation::GreaterEq => Relation::LessEq,
                    Relation::Equal => Relation::Equal,
                };
                (c.coefficients.iter().map(|a| -a).collect(), flipped, -c.bound.clone())
            } else {
                (c.coefficients.clone(), c.relation, c.bound.clone())
            }
        })
        .collect();
    let m = rows.len();
    let slacks = rows.iter().filter(|r| r.1 != Relation::Equal).count();
    let artificials = rows.iter().filter(|r| r.1 != Relation::LessEq).count();
    let real = n + slacks;
    let width = real + artificials + 1;
    let mut tableau = Tableau {
        rows: Vec::with_capacity(m),
        cost: vec![Rational::zero(); width],
        basis: Vec::with_capacity(m),
    };
    let (mut s, mut a) = (n, real);
    for (coefficients, relation, bound) in rows {
        let mut row = vec![Rational::zero(); width];
        row[..n].clone_from_slice(&coefficients);
        row[width - 1] = bound;
        match relation {
            Relation::LessEq => {
                row[s] = Rational::one();
                tableau.basis.push(s);
                s += 1;
            }
            Relation::GreaterEq => {
                row[s] = -Rational::one();
                s += 1;
                row[a] = Rational::one();
                tableau.basis.push(a);
                a += 1;
            }
            Relation::Equal => {
                row[a] = Rational::one();
                tableau.basis.push(a);
                a += 1;
            }
        }
        tableau.rows.push(row);
    }

    // phase 1: minimise the sum of artificials
    if artificials > 0 {
        for (row, &b) in tableau.rows.iter().zip(&tableau.basis) {
            if b >= real {
                for (c, x) in tableau.cost.iter_mut().zip(row) {
                    *c -= x;
                }
            }
        }
        for j in real..real + artificials {
            tableau.cost[j] = Rational::zero();
        }
        tableau.run(real + artificials)?;
        if !tableau.cost[width - 1].is_zero() {
            return Err(Error::Infeasible);
        }
        // drive remaining (zero-valued) artificials out of the basis
        let mut i = 0;
        while i < tableau.rows.len() {
            if tableau.basis[i] >= real {
                match (0..real).find(|&j| !tableau.rows[i][j].is_zero()) {
                    Some(j) => tableau.pivot(i, j),
                    None => {
                        tableau.rows.remove(i);
                        tableau.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    // phase 2
    let sign = match p.direction {
        Direction::Minimize => Rational::one(),
        Direction::Maximize => -Rational::one(),
    };
    let mut cost = vec![Rational::zero(); width];
    for (j, c) in p.objective.iter().enumerate() {
        cost[j] = c * &sign;
    }
    for (row, &b) in tableau.rows.iter().zip(&tableau.basis) {
        if !cost[b].is_zero() {
            let factor = cost[b].clone();
            for (c, x) in cost.iter_mut().zip(row) {
                *c -= &factor * x;
            }
        }
    }
    tableau.cost = cost;
    tableau.run(real)?;

    let mut witness = vec![Rational::zero(); n];
    for (row, &b) in tableau.rows.iter().zip(&tableau.basis) {
        if b < n {
            witness[b] = row[width - 1].clone();
        }
    }
    let value = p.objective_value(&witness);
    debug_assert_eq!(value, -&tableau.cost[width - 1] * &sign);
    Ok(LpSolution { value, witness })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn qs(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn single_variable_cover() {
        let mut lp = LpInstance::new(Direction::Minimize, qs(&[1]));
        lp.add(qs(&[1]), Relation::GreaterEq, q(1));
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.value, q(1));
        assert!(lp.is_feasible(&sol.witness));
    }

    #[test]
    fn triangle_cover_is_three_halves() {
        // edges {0,1},{1,2},{0,2}; cover each vertex
        let mut lp = LpInstance::new(Direction::Minimize, qs(&[1, 1, 1]));
        lp.add(qs(&[1, 0, 1]), Relation::GreaterEq, q(1));
        lp.add(qs(&[1, 1, 0]), Relation::GreaterEq, q(1));
        lp.add(qs(&[0, 1, 1]), Relation::GreaterEq, q(1));
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.value, Rational::new(3.into(), 2.into()));
        assert!(lp.is_feasible(&sol.witness));
    }

    #[test]
    fn maximisation_with_equality() {
        // max x + 2y s.t. x + y = 4, y <= 3
        let mut lp = LpInstance::new(Direction::Maximize, qs(&[1, 2]));
        lp.add(qs(&[1, 1]), Relation::Equal, q(4));
        lp.add(qs(&[0, 1]), Relation::LessEq, q(3));
        let sol = solve_lp(&lp).unwrap();
        assert_eq!(sol.value, q(7));
        assert_eq!(sol.witness, qs(&[1, 3]));
    }

    #[test]
    fn infeasible_and_unbounded() {
        let mut lp = LpInstance::new(Direction::Minimize, qs(&[1]));
        lp.add(qs(&[1]), Relation::LessEq, q(1));
        lp.add(qs(&[1]), Relation::GreaterEq, q(2));
        assert_eq!(solve_lp(&lp), Err(Error::Infeasible));
        let mut lp = LpInstance::new(Direction::Maximize, qs(&[1]));
        lp.add(qs(&[1]), Relation::GreaterEq, q(2));
        assert_eq!(solve_lp(&lp), Err(Error::Unbounded));
    }

    #[test]
    fn negative_bound_is_normalised() {
        // min x s.t. -x <= -2
        let mut lp = LpInstance::new(Direction::Minimize, qs(&[1]));
        lp.add(qs(&[-1]), Relation::LessEq, q(-2));
        assert_eq!(solve_lp(&lp).unwrap().value, q(2));
    }
}
