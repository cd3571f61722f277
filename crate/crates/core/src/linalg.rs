//! Exact integer and rational linear algebra on small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn gcd_slice(v: &[i64]) -> i64 {
    v.iter().fold(0i64, |g, &x| g.gcd(&x))
}

/// Divides out the gcd so the vector is primitive.
pub fn primitive(v: &mut [i64]) {
    let g = gcd_slice(v);
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
}

fn reduce_row(r: &mut [i128]) {
    let g = r.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g > 1 {
        r.iter_mut().for_each(|x| *x /= g);
    }
}

/// Rank over the rationals.
pub fn rank<R: AsRef<[i64]>>(rows: &[R]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.as_ref().iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&k| m[k][c] != 0) else { continue };
        m.swap(r, p);
        for k in r + 1..m.len() {
            if m[k][c] != 0 {
                let (a, b) = (m[r][c], m[k][c]);
                for x in c..cols {
                    m[k][x] = m[k][x] * a - m[r][x] * b;
                }
                reduce_row(&mut m[k]);
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Solves a square system exactly. Returns `(x_num, den)` with `den > 0` and
/// `x = x_num / den`, or `None` when the matrix is singular.
pub fn solve(a: &[Vec<i64>], b: &[i64]) -> Option<(Vec<i128>, i128)> {
    let n = a.len();
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| row.iter().map(|&x| x as i128).chain(std::iter::once(bi as i128)).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&k| m[k][c] != 0)?;
        m.swap(c, p);
        for k in 0..n {
            if k != c && m[k][c] != 0 {
                let (a, bb) = (m[c][c], m[k][c]);
                for x in 0..=n {
                    m[k][x] = m[k][x] * a - m[c][x] * bb;
                }
                reduce_row(&mut m[k]);
            }
        }
    }
    // Diagonal system now: m[i][i] * x_i = m[i][n].
    let mut den: i128 = 1;
    for (i, row) in m.iter().enumerate() {
        den = den.lcm(&row[i].abs());
    }
    let x = m.iter().enumerate().map(|(i, row)| row[n] * (den / row[i])).collect();
    Some((x, den))
}

/// Exact inverse as `(adj, d)` with `inverse = adj / d`, `d > 0`.
pub fn inverse_scaled(a: &[Vec<i64>]) -> Option<(Vec<Vec<i64>>, i64)> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter().map(|&x| rat(x)).chain((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() })).collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&k| !m[k][c].is_zero())?;
        m.swap(c, p);
        let piv = m[c][c].clone();
        m[c].iter_mut().for_each(|x| *x = &*x / &piv);
        for k in 0..n {
            if k != c && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                let pivot_row = m[c].clone();
                for (x, pr) in m[k].iter_mut().zip(pivot_row.iter()) {
                    *x = &*x - &f * pr;
                }
            }
        }
    }
    let mut d = BigInt::one();
    for row in &m {
        for x in &row[n..] {
            d = d.lcm(x.denom());
        }
    }
    let d_i64: i64 = i64::try_from(d.clone()).ok()?;
    let adj = m
        .iter()
        .map(|row| row[n..].iter().map(|x| i64::try_from(x.numer() * (&d / x.denom())).ok()).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    Some((adj, d_i64))
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Formats a rational the way reports expect: `"3"` or `"7/2"`.
pub fn fmt_rat(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

/// Serde helper: rationals serialize as strings like `"7/2"`.
pub mod serde_rat {
    use super::{fmt_rat, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(r))
    }

    pub mod vec {
        use super::super::{fmt_rat, Rational};
        use serde::ser::SerializeSeq;
        use serde::Serializer;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for r in v {
                seq.serialize_element(&fmt_rat(r))?;
            }
            seq.end()
        }
    }

    pub mod opt {
        use super::super::{fmt_rat, Rational};
        use serde::Serializer;

        pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
            match r {
                Some(r) => s.serialize_some(&fmt_rat(r)),
                None => s.serialize_none(),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]), 2);
        assert_eq!(rank::<Vec<i64>>(&[]), 0);
    }

    #[test]
    fn solve_small() {
        let (x, d) = solve(&[vec![2, 1], vec![1, 3]], &[3, 5]).unwrap();
        // x = (4/5, 7/5)
        assert_eq!((x[0] * 5 / d, x[1] * 5 / d), (4, 7));
        assert!(solve(&[vec![1, 1], vec![2, 2]], &[1, 1]).is_none());
    }

    #[test]
    fn inverse_of_unimodular_and_not() {
        let (adj, d) = inverse_scaled(&[vec![2, 0], vec![0, 1]]).unwrap();
        assert_eq!(d, 2);
        assert_eq!(adj, vec![vec![1, 0], vec![0, 2]]);
    }
}
