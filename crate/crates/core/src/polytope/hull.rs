//! Facets of the convex hull of a full-dimensional point set by the double
//! description method.
//!
//! The valid inequalities `a·x <= b` of `conv(X)` form the cone
//! `{(a, b) : a·x - b <= 0 for x in X}`. Its extreme rays are the facets,
//! plus the trivial `0 <= 1`. Rows are added one point at a time; rays are
//! combined only when adjacent, which keeps every intermediate generator
//! set irredundant.

use super::inequality::LinearInequality;
use super::linalg::{primitive, RowSpace};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone)]
struct Ray {
    y: Vec<BigInt>,
    zeros: Vec<u64>,
}

fn bit_set(s: &mut [u64], i: usize) {
    s[i / 64] |= 1 << (i % 64);
}

fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

fn contains_all(sup: &[u64], sub: &[u64]) -> bool {
    sup.iter().zip(sub).all(|(x, y)| x & y == *y)
}

fn dot(h: &[BigInt], y: &[BigInt]) -> BigInt {
    h.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Every facet of `conv(points)`, sorted. The points must be 0/1 vectors of
/// one length spanning an affine space of full dimension.
pub fn facets_of_points(points: &[Vec<u8>]) -> Result<Vec<LinearInequality>> {
    let Some(first) = points.first() else {
        return Err(Error::InvalidParameter("no points".into()));
    };
    let d = first.len();
    let dd = d + 1;
    let rows: Vec<Vec<BigInt>> = points
        .iter()
        .map(|p| {
            p.iter()
                .map(|&x| BigInt::from(x))
                .chain(std::iter::once(-BigInt::one()))
                .collect()
        })
        .collect();

    let mut basis = Vec::with_capacity(dd);
    let mut space = RowSpace::new();
    for (i, r) in rows.iter().enumerate() {
        if space.rank() == dd {
            break;
        }
        if space.insert(r.clone()) {
            basis.push(i);
        }
    }
    if basis.len() < dd {
        return Err(Error::InvalidParameter(format!(
            "points span {} affine dimensions, need {d}",
            basis.len() as i64 - 1
        )));
    }
    let mut order = basis.clone();
    let mut in_basis = vec![false; rows.len()];
    for &i in &basis {
        in_basis[i] = true;
    }
    order.extend((0..rows.len()).filter(|&i| !in_basis[i]));
    let words = rows.len().div_ceil(64);

    // ray k solves H0 y = -e_k, i.e. y = -column k of H0^-1
    let inv = inverse(&basis.iter().map(|&i| rows[i].clone()).collect::<Vec<_>>());
    let mut rays: Vec<Ray> = (0..dd)
        .map(|k| {
            let col: Vec<BigRational> = (0..dd).map(|r| -inv[r][k].clone()).collect();
            let lcm = col.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let mut y: Vec<BigInt> = col.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
            primitive(&mut y);
            let mut zeros = vec![0u64; words];
            for j in (0..dd).filter(|&j| j != k) {
                bit_set(&mut zeros, j);
            }
            Ray { y, zeros }
        })
        .collect();

    for (t, &row) in order.iter().enumerate().skip(dd) {
        let h = &rows[row];
        let s: Vec<BigInt> = rays.iter().map(|r| dot(h, &r.y)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| s[i].is_positive()).collect();
        if pos.is_empty() {
            for (r, si) in rays.iter_mut().zip(&s) {
                if si.is_zero() {
                    bit_set(&mut r.zeros, t);
                }
            }
            continue;
        }
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| s[i].is_negative()).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                if and_count(&rays[p].zeros, &rays[q].zeros) + 2 < dd {
                    continue;
                }
                let common: Vec<u64> = rays[p].zeros.iter().zip(&rays[q].zeros).map(|(a, b)| a & b).collect();
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(i, r)| i != p && i != q && contains_all(&r.zeros, &common));
                if blocked {
                    continue;
                }
                let mut y: Vec<BigInt> = rays[q]
                    .y
                    .iter()
                    .zip(&rays[p].y)
                    .map(|(yq, yp)| &s[p] * yq - &s[q] * yp)
                    .collect();
                primitive(&mut y);
                let mut zeros = common;
                bit_set(&mut zeros, t);
                fresh.push(Ray { y, zeros });
            }
        }
        let mut kept = Vec::with_capacity(rays.len() - pos.len() + fresh.len());
        for (mut r, si) in rays.into_iter().zip(&s) {
            if si.is_zero() {
                bit_set(&mut r.zeros, t);
                kept.push(r);
            } else if si.is_negative() {
                kept.push(r);
            }
        }
        kept.extend(fresh);
        rays = kept;
    }

    let mut out: Vec<LinearInequality> = rays
        .into_iter()
        .filter(|r| r.y[..d].iter().any(|x| !x.is_zero()))
        .map(|mut r| {
            let b = r.y.pop().expect("ray has a right-hand side");
            LinearInequality::from_integers(r.y, b)
        })
        .collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// Inverse of a square nonsingular integer matrix over the rationals.
fn inverse(m: &[Vec<BigInt>]) -> Vec<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .cloned()
                .map(BigRational::from_integer)
                .chain((0..n).map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                }))
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("nonsingular matrix");
        a.swap(c, p);
        let piv = a[c][c].clone();
        for x in a[c].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}
