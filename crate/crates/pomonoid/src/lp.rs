//! Dense exact-arithmetic linear programming by the two-phase primal
//! simplex method with Bland's rule, generic over the scalar type.
//!
//! Problems here are tiny (a handful of variables and constraints), so the
//! full tableau is kept explicitly and every pivot is exact; Bland's rule
//! guarantees termination.

use crate::{Error, Result, Scalar};

/// Constraint sense.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rel {
    Le,
    Ge,
    Eq,
}

/// A single linear constraint `coeffs . x REL rhs`.
#[derive(Debug, Clone)]
pub struct Constraint<R> {
    pub coeffs: Vec<R>,
    pub rel: Rel,
    pub rhs: R,
}

/// Outcome of a maximization over nonnegative variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome<R> {
    Optimal { value: R, solution: Vec<R> },
    Infeasible,
    Unbounded,
}

/// Maximizes `objective . x` subject to the constraints and `x >= 0`.
pub fn maximize<R: Scalar>(objective: &[R], constraints: &[Constraint<R>]) -> Result<LpOutcome<R>> {
    let nvars = objective.len();
    for (pos, c) in constraints.iter().enumerate() {
        if c.coeffs.len() != nvars {
            return Err(Error::structure(format!(
                "constraint {pos} has {} coefficients for {nvars} variables",
                c.coeffs.len()
            )));
        }
    }

    // Normalize right-hand sides to be nonnegative.
    let rows: Vec<(Vec<R>, Rel, R)> = constraints
        .iter()
        .map(|c| {
            if c.rhs < R::zero() {
                let coeffs = c.coeffs.iter().map(|v| -v.clone()).collect();
                let rel = match c.rel {
                    Rel::Le => Rel::Ge,
                    Rel::Ge => Rel::Le,
                    Rel::Eq => Rel::Eq,
                };
                (coeffs, rel, -c.rhs.clone())
            } else {
                (c.coeffs.clone(), c.rel, c.rhs.clone())
            }
        })
        .collect();

    let m = rows.len();
    let n_slack = rows
        .iter()
        .filter(|(_, rel, _)| matches!(rel, Rel::Le | Rel::Ge))
        .count();
    let n_artificial = rows
        .iter()
        .filter(|(_, rel, _)| matches!(rel, Rel::Ge | Rel::Eq))
        .count();
    let total = nvars + n_slack + n_artificial;

    let mut a = vec![vec![R::zero(); total]; m];
    let mut b = vec![R::zero(); m];
    let mut basis = vec![0usize; m];
    let mut slack_at = nvars;
    let mut art_at = nvars + n_slack;
    let art_start = nvars + n_slack;

    for (i, (coeffs, rel, rhs)) in rows.iter().enumerate() {
        for (j, v) in coeffs.iter().enumerate() {
            a[i][j] = v.clone();
        }
        b[i] = rhs.clone();
        match rel {
            Rel::Le => {
                a[i][slack_at] = R::one();
                basis[i] = slack_at;
                slack_at += 1;
            }
            Rel::Ge => {
                a[i][slack_at] = -R::one();
                slack_at += 1;
                a[i][art_at] = R::one();
                basis[i] = art_at;
                art_at += 1;
            }
            Rel::Eq => {
                a[i][art_at] = R::one();
                basis[i] = art_at;
                art_at += 1;
            }
        }
    }

    // Phase 1: maximize minus the sum of artificials. Reduced costs come
    // from pricing the artificial basis out of that objective; artificial
    // columns never enter.
    if n_artificial > 0 {
        let mut cost = vec![R::zero(); total];
        for i in 0..m {
            if basis[i] >= art_start {
                for j in 0..art_start {
                    cost[j] = cost[j].clone() + a[i][j].clone();
                }
            }
        }
        if !pivot_until_optimal(&mut a, &mut b, &mut basis, &mut cost, art_start)? {
            return Err(Error::paper_check(
                "phase-1 simplex reported an unbounded artificial objective",
            ));
        }
        // Residual infeasibility: some artificial still carries value.
        let residual = (0..m)
            .filter(|&i| basis[i] >= art_start)
            .fold(R::zero(), |acc, i| acc + b[i].clone());
        if !residual.is_zero() {
            return Ok(LpOutcome::Infeasible);
        }
        // Drive remaining artificials out of the basis where possible.
        let mut scratch = vec![R::zero(); total];
        for i in 0..m {
            if basis[i] < art_start {
                continue;
            }
            if let Some(j) = (0..art_start).find(|&j| !a[i][j].is_zero()) {
                pivot(&mut a, &mut b, &mut basis, &mut scratch, i, j);
            }
            // A row with no eligible column is a redundant zero row; its
            // artificial stays basic at value zero, harmless for phase 2.
        }
    }

    // Phase 2: price the real objective out of the current basis.
    let mut cost: Vec<R> = (0..total)
        .map(|j| {
            if j < nvars {
                objective[j].clone()
            } else {
                R::zero()
            }
        })
        .collect();
    // Artificial columns never re-enter; their cost is irrelevant.
    for c in cost.iter_mut().skip(art_start) {
        *c = R::zero();
    }
    for i in 0..m {
        let bi = basis[i];
        let cb = cost[bi].clone();
        if cb.is_zero() {
            continue;
        }
        for j in 0..total {
            cost[j] = cost[j].clone() - cb.clone() * a[i][j].clone();
        }
    }
    if !pivot_until_optimal(&mut a, &mut b, &mut basis, &mut cost, art_start)? {
        return Ok(LpOutcome::Unbounded);
    }

    let mut solution = vec![R::zero(); nvars];
    for i in 0..m {
        if basis[i] < nvars {
            solution[basis[i]] = b[i].clone();
        }
    }
    let value = objective
        .iter()
        .zip(&solution)
        .fold(R::zero(), |acc, (c, x)| acc + c.clone() * x.clone());
    Ok(LpOutcome::Optimal { value, solution })
}

/// Pivots with Bland's rule until no reduced cost is positive. Returns
/// false when an improving column proves the program unbounded. Columns at
/// or beyond `enterable_limit` never enter.
fn pivot_until_optimal<R: Scalar>(
    a: &mut [Vec<R>],
    b: &mut [R],
    basis: &mut [usize],
    cost: &mut [R],
    enterable_limit: usize,
) -> Result<bool> {
    let m = a.len();
    loop {
        let entering = (0..enterable_limit).find(|&j| cost[j] > R::zero());
        let Some(j) = entering else {
            return Ok(true);
        };
        let mut leaving: Option<usize> = None;
        for i in 0..m {
            if a[i][j] <= R::zero() {
                continue;
            }
            leaving = match leaving {
                None => Some(i),
                Some(l) => {
                    let cur = b[i].clone() * a[l][j].clone();
                    let best = b[l].clone() * a[i][j].clone();
                    if cur < best || (cur == best && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        let Some(i) = leaving else {
            return Ok(false);
        };
        pivot(a, b, basis, cost, i, j);
    }
}

fn pivot<R: Scalar>(
    a: &mut [Vec<R>],
    b: &mut [R],
    basis: &mut [usize],
    cost: &mut [R],
    row: usize,
    col: usize,
) {
    let total = a[row].len();
    let p = a[row][col].clone();
    for j in 0..total {
        a[row][j] = a[row][j].clone() / p.clone();
    }
    b[row] = b[row].clone() / p;
    for i in 0..a.len() {
        if i == row || a[i][col].is_zero() {
            continue;
        }
        let factor = a[i][col].clone();
        for j in 0..total {
            a[i][j] = a[i][j].clone() - factor.clone() * a[row][j].clone();
        }
        b[i] = b[i].clone() - factor * b[row].clone();
    }
    if !cost[col].is_zero() {
        let factor = cost[col].clone();
        for j in 0..total {
            cost[j] = cost[j].clone() - factor.clone() * a[row][j].clone();
        }
    }
    basis[row] = col;
}

/// Exact feasibility check of a claimed solution against the original
/// constraints.
pub fn satisfies<R: Scalar>(constraints: &[Constraint<R>], solution: &[R]) -> bool {
    constraints.iter().all(|c| {
        let lhs = c
            .coeffs
            .iter()
            .zip(solution)
            .fold(R::zero(), |acc, (a, x)| acc + a.clone() * x.clone());
        match c.rel {
            Rel::Le => lhs <= c.rhs,
            Rel::Ge => lhs >= c.rhs,
            Rel::Eq => lhs == c.rhs,
        }
    }) && solution.iter().all(|x| *x >= R::zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    fn r(n: i64) -> Rational64 {
        Rational64::from_integer(n)
    }

    fn rq(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn single_variable_cap() {
        let out = maximize(
            &[r(1)],
            &[Constraint {
                coeffs: vec![r(1)],
                rel: Rel::Le,
                rhs: r(3),
            }],
        )
        .unwrap();
        assert_eq!(
            out,
            LpOutcome::Optimal {
                value: r(3),
                solution: vec![r(3)]
            }
        );
    }

    #[test]
    fn two_variable_classic() {
        let constraints = vec![
            Constraint {
                coeffs: vec![r(2), r(1)],
                rel: Rel::Le,
                rhs: r(18),
            },
            Constraint {
                coeffs: vec![r(6), r(5)],
                rel: Rel::Le,
                rhs: r(60),
            },
            Constraint {
                coeffs: vec![r(2), r(5)],
                rel: Rel::Le,
                rhs: r(40),
            },
        ];
        let out = maximize(&[r(2), r(3)], &constraints).unwrap();
        match out {
            LpOutcome::Optimal { value, solution } => {
                assert_eq!(value, r(28));
                assert_eq!(solution, vec![r(5), r(6)]);
                assert!(satisfies(&constraints, &solution));
            }
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn equality_and_ge_constraints() {
        // max t with lambda = 1 and lambda/2 - t >= 0: t* = 1/2.
        let constraints = vec![
            Constraint {
                coeffs: vec![r(1), r(0)],
                rel: Rel::Eq,
                rhs: r(1),
            },
            Constraint {
                coeffs: vec![rq(1, 2), r(-1)],
                rel: Rel::Ge,
                rhs: r(0),
            },
        ];
        let out = maximize(&[r(0), r(1)], &constraints).unwrap();
        match out {
            LpOutcome::Optimal { value, solution } => {
                assert_eq!(value, rq(1, 2));
                assert_eq!(solution[0], r(1));
                assert!(satisfies(&constraints, &solution));
            }
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    #[test]
    fn infeasible_detected() {
        let out = maximize(
            &[r(1)],
            &[
                Constraint {
                    coeffs: vec![r(1)],
                    rel: Rel::Ge,
                    rhs: r(2),
                },
                Constraint {
                    coeffs: vec![r(1)],
                    rel: Rel::Le,
                    rhs: r(1),
                },
            ],
        )
        .unwrap();
        assert_eq!(out, LpOutcome::Infeasible);
    }

    #[test]
    fn unbounded_detected() {
        let out = maximize(
            &[r(1)],
            &[Constraint {
                coeffs: vec![r(1)],
                rel: Rel::Ge,
                rhs: r(1),
            }],
        )
        .unwrap();
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn negative_rhs_normalized() {
        // x <= -1 once normalized is -x >= 1, i.e. infeasible with x >= 0.
        let out = maximize(
            &[r(1)],
            &[Constraint {
                coeffs: vec![r(1)],
                rel: Rel::Le,
                rhs: r(-1),
            }],
        )
        .unwrap();
        assert_eq!(out, LpOutcome::Infeasible);
    }

    #[test]
    fn degenerate_program_terminates() {
        // Degenerate vertex; Bland's rule must still terminate.
        let constraints = vec![
            Constraint {
                coeffs: vec![r(1), r(1)],
                rel: Rel::Le,
                rhs: r(1),
            },
            Constraint {
                coeffs: vec![r(1), r(1)],
                rel: Rel::Le,
                rhs: r(1),
            },
            Constraint {
                coeffs: vec![r(1), r(0)],
                rel: Rel::Le,
                rhs: r(1),
            },
        ];
        let out = maximize(&[r(1), r(1)], &constraints).unwrap();
        match out {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, r(1)),
            other => panic!("expected optimum, got {other:?}"),
        }
    }

    /// Exact vertex-enumeration oracle for box-bounded programs: the
    /// optimum of a bounded feasible LP is attained at a vertex, i.e. at a
    /// solution of `nvars` independent active constraints drawn from the
    /// constraint rows and the nonnegativity bounds.
    fn vertex_oracle(
        objective: &[Rational64],
        constraints: &[Constraint<Rational64>],
    ) -> Option<Rational64> {
        let n = objective.len();
        let mut rows: Vec<(Vec<Rational64>, Rational64)> = Vec::new();
        for c in constraints {
            rows.push((c.coeffs.clone(), c.rhs));
        }
        for i in 0..n {
            let mut coeffs = vec![r(0); n];
            coeffs[i] = r(1);
            rows.push((coeffs, r(0)));
        }
        let mut best: Option<Rational64> = None;
        let total = rows.len();
        let mut pick = (0..n).collect::<Vec<usize>>();
        loop {
            if let Some(x) = solve_square(&pick, &rows, n) {
                if satisfies(constraints, &x) {
                    let value = objective
                        .iter()
                        .zip(&x)
                        .fold(r(0), |acc, (c, v)| acc + *c * *v);
                    best = Some(match best {
                        None => value,
                        Some(b) if value > b => value,
                        Some(b) => b,
                    });
                }
            }
            // next combination
            let mut i = n;
            let mut advanced = false;
            while i > 0 {
                i -= 1;
                if pick[i] < total - n + i {
                    pick[i] += 1;
                    for j in i + 1..n {
                        pick[j] = pick[j - 1] + 1;
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        best
    }

    fn solve_square(
        pick: &[usize],
        rows: &[(Vec<Rational64>, Rational64)],
        n: usize,
    ) -> Option<Vec<Rational64>> {
        let mut a: Vec<Vec<Rational64>> = pick.iter().map(|&i| rows[i].0.clone()).collect();
        let mut b: Vec<Rational64> = pick.iter().map(|&i| rows[i].1).collect();
        for col in 0..n {
            let piv = (col..n).find(|&row| a[row][col] != r(0))?;
            a.swap(col, piv);
            b.swap(col, piv);
            let p = a[col][col];
            for j in 0..n {
                a[col][j] /= p;
            }
            b[col] /= p;
            for row in 0..n {
                if row == col || a[row][col] == r(0) {
                    continue;
                }
                let f = a[row][col];
                for j in 0..n {
                    let v = a[col][j];
                    a[row][j] -= f * v;
                }
                let v = b[col];
                b[row] -= f * v;
            }
        }
        Some(b)
    }

    #[test]
    fn simplex_matches_vertex_oracle_on_random_boxes() {
        // Deterministic pseudo-random instances, always box-bounded so the
        // oracle is complete.
        let mut state: u64 = 0x9e3779b97f4a7c15;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..120 {
            let n = (next() % 3 + 1) as usize;
            let m = (next() % 3 + 1) as usize;
            let mut constraints: Vec<Constraint<Rational64>> = (0..m)
                .map(|_| {
                    let coeffs: Vec<Rational64> =
                        (0..n).map(|_| r(next() as i64 % 5 - 2)).collect();
                    let rel = match next() % 3 {
                        0 => Rel::Le,
                        1 => Rel::Ge,
                        _ => Rel::Eq,
                    };
                    Constraint {
                        coeffs,
                        rel,
                        rhs: r(next() as i64 % 7 - 3),
                    }
                })
                .collect();
            for i in 0..n {
                let mut coeffs = vec![r(0); n];
                coeffs[i] = r(1);
                constraints.push(Constraint {
                    coeffs,
                    rel: Rel::Le,
                    rhs: r(4),
                });
            }
            let objective: Vec<Rational64> = (0..n).map(|_| r(next() as i64 % 5 - 2)).collect();
            let got = maximize(&objective, &constraints).unwrap();
            let oracle = vertex_oracle(&objective, &constraints);
            match (got, oracle) {
                (LpOutcome::Optimal { value, solution }, Some(best)) => {
                    assert!(satisfies(&constraints, &solution));
                    assert_eq!(value, best);
                }
                (LpOutcome::Infeasible, None) => {}
                (got, oracle) => panic!("solver {got:?} vs oracle {oracle:?}"),
            }
        }
    }

    #[test]
    fn piecewise_minmax_crossing_oracle() {
        // max over the simplex of min(g1, g2) where g1 = 1 - s, g2 = s:
        // optimum at the crossing s = 1/2.
        // LP form: vars s1, s2, t; s1 + s2 = 1; s2 - t >= 0; s1 - t >= 0.
        let constraints = vec![
            Constraint {
                coeffs: vec![r(1), r(1), r(0)],
                rel: Rel::Eq,
                rhs: r(1),
            },
            Constraint {
                coeffs: vec![r(1), r(0), r(-1)],
                rel: Rel::Ge,
                rhs: r(0),
            },
            Constraint {
                coeffs: vec![r(0), r(1), r(-1)],
                rel: Rel::Ge,
                rhs: r(0),
            },
        ];
        let out = maximize(&[r(0), r(0), r(1)], &constraints).unwrap();
        match out {
            LpOutcome::Optimal { value, solution } => {
                assert_eq!(value, rq(1, 2));
                assert_eq!(solution[0], rq(1, 2));
                assert_eq!(solution[1], rq(1, 2));
            }
            other => panic!("expected optimum, got {other:?}"),
        }
    }
}
