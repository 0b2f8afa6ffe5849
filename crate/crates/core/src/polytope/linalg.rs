//! Exact rank computations by fraction-free elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Integer row space in echelon form, grown one vector at a time.
#[derive(Debug, Clone, Default)]
pub struct RowSpace {
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `v` if it is independent of the rows so far; returns whether
    /// it was.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        for (p, r) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let (a, b) = (r[*p].clone(), v[*p].clone());
            for (x, y) in v.iter_mut().zip(r) {
                *x = &a * &*x - &b * y;
            }
            primitive(&mut v);
        }
        match v.iter().position(|x| !x.is_zero()) {
            Some(p) => {
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }
}

/// Divides out the content of `v`.
pub fn primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut s = RowSpace::new();
    for r in rows {
        s.insert(r.clone());
    }
    s.rank()
}

/// Affine dimension of a point set; `-1` when empty.
pub fn affine_dim(points: &[Vec<u8>]) -> i64 {
    let Some(first) = points.first() else {
        return -1;
    };
    let d = first.len();
    let mut s = RowSpace::new();
    for p in &points[1..] {
        if s.rank() == d {
            break;
        }
        let diff: Vec<BigInt> = p.iter().zip(first).map(|(&a, &b)| BigInt::from(a as i64 - b as i64)).collect();
        s.insert(diff);
    }
    s.rank() as i64
}
