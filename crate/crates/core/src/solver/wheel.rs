//! Maximum weight bond of a wheel in linear time.
//!
//! Edges follow the generator numbering: rim edge `i` joins rim nodes `i`
//! and `i + 1 mod n`, spoke `n + i` joins rim node `i` to the centre. Besides
//! the empty cut and the star of the centre, every bond is cut out by an
//! arc of rim nodes `i..=j` of length `1..n`, and weighs
//! `rim[i - 1] + rim[j] + spokes[i..=j]`.

use crate::error::{Error, Result};
use crate::oracle::Constraint;
use std::collections::VecDeque;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WheelBond {
    Empty,
    /// All spokes.
    Centre,
    /// Rim nodes `start, start + 1, .., start + len - 1` (mod n).
    Arc { start: usize, len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelSolution {
    pub value: i64,
    pub bond: WheelBond,
    /// Sorted edge ids in generator numbering.
    pub edges: Vec<usize>,
}

impl WheelBond {
    pub fn edges(self, n: usize) -> Vec<usize> {
        let mut out = match self {
            WheelBond::Empty => Vec::new(),
            WheelBond::Centre => (n..2 * n).collect(),
            WheelBond::Arc { start, len } => {
                let mut v: Vec<usize> = (0..len).map(|k| n + (start + k) % n).collect();
                v.push((start + n - 1) % n);
                v.push((start + len - 1) % n);
                v
            }
        };
        out.sort_unstable();
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Force {
    Free,
    In,
    Out,
}

/// Maximum weight bond of the wheel with the given rim and spoke weights
/// under `c` (edge ids in generator numbering; `separate` unsupported).
/// Weights must have an absolute sum that fits in `i64`.
pub fn wheel_max_bond(rim: &[i64], spokes: &[i64], c: &Constraint) -> Result<WheelSolution> {
    let n = rim.len();
    if n < 3 || spokes.len() != n {
        return Err(Error::InvalidParameter(format!(
            "wheel needs n >= 3 rim weights and as many spokes, got {} and {}",
            n,
            spokes.len()
        )));
    }
    if c.separate.is_some() {
        return Err(Error::InvalidParameter("wheel solver does not take separate".into()));
    }
    let mut rim_f = vec![Force::Free; n];
    let mut spoke_f = vec![Force::Free; n];
    for (list, f) in [(&c.forced_in, Force::In), (&c.forced_out, Force::Out)] {
        for &e in list.iter() {
            let slot = match e {
                e if e < n => &mut rim_f[e],
                e if e < 2 * n => &mut spoke_f[e - n],
                _ => return Err(Error::EdgeOutOfRange { edge: e, m: 2 * n }),
            };
            if *slot != Force::Free && *slot != f {
                return Err(Error::InvalidParameter(format!("edge {e} forced both ways")));
            }
            *slot = f;
        }
    }
    let rim_in: Vec<usize> = (0..n).filter(|&i| rim_f[i] == Force::In).collect();
    let any_in = !rim_in.is_empty() || spoke_f.contains(&Force::In);

    let mut best: Option<(i128, WheelBond)> = None;
    let mut offer = |value: i128, bond: WheelBond| {
        if best.is_none_or(|(b, _)| value > b) {
            best = Some((value, bond));
        }
    };
    if !any_in {
        offer(0, WheelBond::Empty);
    }
    if rim_in.is_empty() && !spoke_f.contains(&Force::Out) {
        offer(spokes.iter().map(|&s| s as i128).sum(), WheelBond::Centre);
    }
    if rim_in.len() > 2 {
        // only the empty cut or the centre star could avoid rim edges
    } else if rim_in.is_empty() {
        if let Some((v, start, len)) = sweep(rim, spokes, &rim_f, &spoke_f) {
            offer(v, WheelBond::Arc { start, len });
        }
    } else {
        for &t in &rim_in {
            for (v, start, len) in anchored(rim, spokes, &rim_f, &spoke_f, t) {
                offer(v, WheelBond::Arc { start, len });
            }
        }
    }
    let (value, bond) = best.ok_or(Error::Infeasible)?;
    Ok(WheelSolution {
        value: i64::try_from(value).map_err(|_| Error::ArithmeticOverflow)?,
        bond,
        edges: bond.edges(n),
    })
}

/// Best arc when no rim edge is forced in: for each end `j` the best start
/// lies in a window whose bounds only move right, so a monotone deque
/// gives the maximum of `rim[i - 1] - P[i]` in amortised O(1).
fn sweep(rim: &[i64], spokes: &[i64], rim_f: &[Force], spoke_f: &[Force]) -> Option<(i128, usize, usize)> {
    let n = rim.len();
    let m = 2 * n;
    let mut prefix = vec![0i128; m + 1];
    for p in 0..m {
        prefix[p + 1] = prefix[p] + spokes[p % n] as i128;
    }
    let start_val = |i: usize| rim[(i + n - 1) % n] as i128 - prefix[i];
    // next forced-in spoke strictly after p, over three copies
    let mut next_in = vec![usize::MAX; 3 * n + 1];
    for p in (0..3 * n).rev() {
        next_in[p] = if spoke_f[(p + 1) % n] == Force::In {
            p + 1
        } else {
            next_in[p + 1]
        };
    }
    let mut deque: VecDeque<usize> = VecDeque::new();
    let mut pushed = 0usize;
    let mut last_out: Option<usize> = None;
    let mut best: Option<(i128, usize, usize)> = None;
    for j in 0..m - 1 {
        if spoke_f[j % n] == Force::Out {
            last_out = Some(j);
        }
        let lo = (j + 2).saturating_sub(n).max(last_out.map_or(0, |p| p + 1));
        // the arc must contain every forced-in spoke: i + n - 1 < next_in[j]
        let hi = match next_in[j] {
            usize::MAX => j.min(n - 1),
            p if p >= n => j.min(n - 1).min(p - n),
            _ => continue,
        };
        while pushed <= hi {
            let i = pushed;
            pushed += 1;
            if rim_f[(i + n - 1) % n] == Force::Out {
                continue;
            }
            let v = start_val(i);
            while deque.back().is_some_and(|&b| start_val(b) < v) {
                deque.pop_back();
            }
            deque.push_back(i);
        }
        while deque.front().is_some_and(|&f| f < lo) {
            deque.pop_front();
        }
        if rim_f[j % n] == Force::Out || lo > hi {
            continue;
        }
        if let Some(&i) = deque.front() {
            let v = start_val(i) + prefix[j + 1] + rim[j % n] as i128;
            if best.is_none_or(|(b, _, _)| v > b) {
                best = Some((v, i, j - i + 1));
            }
        }
    }
    best
}

/// Arcs with rim edge `t` on their boundary: starting at `t + 1` or
/// ending at `t`.
fn anchored(
    rim: &[i64],
    spokes: &[i64],
    rim_f: &[Force],
    spoke_f: &[Force],
    t: usize,
) -> Vec<(i128, usize, usize)> {
    let n = rim.len();
    let spokes_in = spoke_f.iter().filter(|&&f| f == Force::In).count();
    let rims_in = rim_f.iter().filter(|&&f| f == Force::In).count();
    let mut out = Vec::new();
    for forward in [true, false] {
        let mut best: Option<(i128, usize, usize)> = None;
        let mut sum = 0i128;
        let mut got_in = 0;
        for len in 1..n {
            // the arc grows away from edge t
            let node = if forward { (t + len) % n } else { (t + n + 1 - len) % n };
            match spoke_f[node] {
                Force::Out => break,
                Force::In => got_in += 1,
                Force::Free => {}
            }
            sum += spokes[node] as i128;
            let (start, end) = if forward {
                ((t + 1) % n, node)
            } else {
                (node, t)
            };
            let before = (start + n - 1) % n;
            let other = if forward { end } else { before };
            if got_in != spokes_in || rim_f[other] == Force::Out {
                continue;
            }
            let covered = 1 + usize::from(rim_f[other] == Force::In && other != t);
            if covered != rims_in {
                continue;
            }
            let v = rim[before] as i128 + rim[end] as i128 + sum;
            if best.is_none_or(|(b, _, _)| v > b) {
                best = Some((v, start, len));
            }
        }
        out.extend(best);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_edges() {
        assert_eq!(WheelBond::Arc { start: 0, len: 1 }.edges(4), vec![0, 3, 4]);
        assert_eq!(WheelBond::Arc { start: 3, len: 2 }.edges(4), vec![0, 2, 4, 7]);
        assert_eq!(WheelBond::Centre.edges(3), vec![3, 4, 5]);
    }

    #[test]
    fn simple_cases() {
        let r = wheel_max_bond(&[1; 5], &[1; 5], &Constraint::none()).unwrap();
        // an arc of four rim nodes cuts two rim edges and four spokes
        assert_eq!(r.value, 6);
        let r = wheel_max_bond(&[-1; 4], &[-1; 4], &Constraint::none()).unwrap();
        assert_eq!((r.value, r.bond), (0, WheelBond::Empty));
        let c = Constraint {
            forced_in: vec![0, 1, 2],
            ..Constraint::none()
        };
        assert_eq!(wheel_max_bond(&[1; 4], &[1; 4], &c), Err(Error::Infeasible));
    }
}
