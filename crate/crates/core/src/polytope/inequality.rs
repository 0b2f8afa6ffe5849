use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// `a·x <= b` over edge-indexed points, kept as the unique integer multiple
/// whose coefficients and right-hand side have gcd 1.
#[derive(Debug, Clone)]
pub struct LinearInequality {
    coeffs: Vec<BigInt>,
    rhs: BigInt,
    small: Option<(Vec<i64>, i64)>,
    tag: Option<String>,
}

impl LinearInequality {
    /// Normalises `coeffs·x <= rhs` by a positive factor. Fails on a zero
    /// coefficient vector.
    pub fn new(coeffs: &[BigRational], rhs: &BigRational) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::InvalidParameter("inequality with zero coefficient vector".into()));
        }
        let lcm = coeffs
            .iter()
            .chain(std::iter::once(rhs))
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let scale = |q: &BigRational| q.numer() * (&lcm / q.denom());
        Self::from_integers(coeffs.iter().map(scale).collect(), scale(rhs))
    }

    pub fn from_ints(coeffs: &[i64], rhs: i64) -> Result<Self> {
        Self::from_integers(coeffs.iter().map(|&c| c.into()).collect(), rhs.into())
    }

    /// Normalises an integer inequality.
    pub fn from_integers(mut coeffs: Vec<BigInt>, mut rhs: BigInt) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::InvalidParameter("inequality with zero coefficient vector".into()));
        }
        let g = coeffs.iter().fold(rhs.abs(), |acc, x| acc.gcd(x));
        if !g.is_one() {
            for x in &mut coeffs {
                *x /= &g;
            }
            rhs /= &g;
        }
        Ok(Self::from_normalised(coeffs, rhs))
    }

    fn from_normalised(coeffs: Vec<BigInt>, rhs: BigInt) -> Self {
        let small = coeffs
            .iter()
            .map(ToPrimitive::to_i64)
            .collect::<Option<Vec<i64>>>()
            .zip(rhs.to_i64())
            .filter(|(c, _)| c.iter().try_fold(0i64, |s, &x| s.checked_add(x.abs())).is_some());
        LinearInequality {
            coeffs,
            rhs,
            small,
            tag: None,
        }
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = Some(tag.into());
        self
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn rhs(&self) -> &BigInt {
        &self.rhs
    }

    pub fn tag(&self) -> Option<&str> {
        self.tag.as_deref()
    }

    /// Number of coordinates.
    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Edges with a non-zero coefficient.
    pub fn support(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&e| !self.coeffs[e].is_zero()).collect()
    }

    /// `a·x` for the point with ones exactly at `edges`.
    pub fn lhs_on(&self, edges: &[usize]) -> BigInt {
        match &self.small {
            Some((c, _)) => edges.iter().map(|&e| c[e]).sum::<i64>().into(),
            None => edges.iter().map(|&e| &self.coeffs[e]).sum(),
        }
    }

    /// Compares `a·x` with `b` for the point with ones at `edges`.
    pub fn compare_on(&self, edges: &[usize]) -> Ordering {
        match &self.small {
            Some((c, b)) => edges.iter().map(|&e| c[e]).sum::<i64>().cmp(b),
            None => self.lhs_on(edges).cmp(&self.rhs),
        }
    }

    /// `a·x` for a 0/1 point.
    pub fn eval(&self, x: &[u8]) -> BigInt {
        let ones: Vec<usize> = (0..x.len()).filter(|&i| x[i] != 0).collect();
        self.lhs_on(&ones)
    }

    /// Coefficients as exact rationals (already integral).
    pub fn rational_coeffs(&self) -> Vec<BigRational> {
        self.coeffs.iter().cloned().map(BigRational::from_integer).collect()
    }

    pub fn rational_rhs(&self) -> BigRational {
        BigRational::from_integer(self.rhs.clone())
    }

    /// Whether this is `-x_e <= 0` for some edge `e`.
    pub fn is_nonnegativity(&self) -> Option<usize> {
        let s = self.support();
        (s.len() == 1 && self.rhs.is_zero() && self.coeffs[s[0]].is_negative()).then_some(s[0])
    }
}

impl PartialEq for LinearInequality {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.rhs == other.rhs
    }
}

impl Eq for LinearInequality {}

impl PartialOrd for LinearInequality {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LinearInequality {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.cmp(&other.coeffs).then_with(|| self.rhs.cmp(&other.rhs))
    }
}

impl std::hash::Hash for LinearInequality {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
        self.rhs.hash(state);
    }
}

/// `x0 + x2 - 2 x5 <= 2`, edges by index.
impl fmt::Display for LinearInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            match (first, c.is_negative()) {
                (true, false) => {}
                (true, true) => write!(f, "-")?,
                (false, _) => write!(f, " {sign} ")?,
            }
            first = false;
            let a = c.abs();
            if a.is_one() {
                write!(f, "x{e}")?;
            } else {
                write!(f, "{a} x{e}")?;
            }
        }
        write!(f, " <= {}", self.rhs)
    }
}

/// Parses `7`, `-3` or `5/2`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::InvalidParameter(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}
