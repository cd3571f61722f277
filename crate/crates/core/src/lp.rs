//! Exact rational simplex for `max c·x  s.t.  A x <= b, x >= 0` with `b >= 0`.
//!
//! Starting from the slack basis keeps it single-phase. Bland's rule
//! guarantees termination.

use num_traits::{Signed, Zero};

use crate::linalg::Rational;

#[derive(Clone, Debug)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Unbounded,
}

pub fn maximize(a: &[Vec<Rational>], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = c.len();
    assert!(b.iter().all(|v| !v.is_negative()), "right-hand side must be nonnegative");
    // Condensed tableau: x_B(i) = rhs_i - Σ_j t_ij x_N(j); z = z0 + Σ_j obj_j x_N(j).
    let mut t: Vec<Vec<Rational>> = a.to_vec();
    let mut rhs: Vec<Rational> = b.to_vec();
    let mut obj: Vec<Rational> = c.to_vec();
    let mut z = Rational::zero();
    let mut nonbasic: Vec<usize> = (0..n).collect();
    let mut basic: Vec<usize> = (n..n + m).collect();
    loop {
        // Bland: smallest label among improving columns.
        let Some(s) = (0..n).filter(|&j| obj[j].is_positive()).min_by_key(|&j| nonbasic[j]) else { break };
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][s].is_positive() {
                let ratio = &rhs[i] / &t[i][s];
                let better = match &leave {
                    None => true,
                    Some((r, best)) => ratio < *best || (ratio == *best && basic[i] < basic[*r]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else { return LpOutcome::Unbounded };
        let piv = t[r][s].clone();
        let row_r: Vec<Rational> = t[r].iter().map(|v| v / &piv).collect();
        let rhs_r = &rhs[r] / &piv;
        for i in 0..m {
            if i == r || t[i][s].is_zero() {
                continue;
            }
            let f = t[i][s].clone();
            for j in 0..n {
                if j != s {
                    let d = &f * &row_r[j];
                    t[i][j] -= d;
                }
            }
            t[i][s] = -(&f / &piv);
            rhs[i] -= &f * &rhs_r;
        }
        let cs = obj[s].clone();
        for j in 0..n {
            if j != s {
                let d = &cs * &row_r[j];
                obj[j] -= d;
            }
        }
        obj[s] = -(&cs / &piv);
        z += &cs * &rhs_r;
        t[r] = row_r;
        t[r][s] = Rational::from_integer(1.into()) / &piv;
        rhs[r] = rhs_r;
        std::mem::swap(&mut basic[r], &mut nonbasic[s]);
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &v) in basic.iter().enumerate() {
        if v < n {
            x[v] = rhs[i].clone();
        }
    }
    LpOutcome::Optimal { value: z, x }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    #[test]
    fn textbook_problem() {
        // max 3x + 2y  s.t. x + y <= 4, x + 3y <= 6, x <= 3.
        let a = vec![vec![rat(1), rat(1)], vec![rat(1), rat(3)], vec![rat(1), rat(0)]];
        let b = vec![rat(4), rat(6), rat(3)];
        let LpOutcome::Optimal { value, x } = maximize(&a, &b, &[rat(3), rat(2)]) else { panic!() };
        assert_eq!(value, rat(11));
        assert_eq!(x, vec![rat(3), rat(1)]);
    }

    #[test]
    fn fractional_optimum() {
        // max x + y s.t. 2x + y <= 1, x + 2y <= 1 -> x = y = 1/3.
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(2)]];
        let LpOutcome::Optimal { value, .. } = maximize(&a, &[rat(1), rat(1)], &[rat(1), rat(1)]) else { panic!() };
        assert_eq!(value, ratio(2, 3));
    }

    #[test]
    fn unbounded_detected() {
        let a = vec![vec![rat(1), rat(-1)]];
        assert!(matches!(maximize(&a, &[rat(1)], &[rat(0), rat(1)]), LpOutcome::Unbounded));
    }
}
