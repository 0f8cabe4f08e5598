//! Permutations of a small fixed point set, written in 1-based cycle notation.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `{1, …, N}`, stored 0-based as an image array.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation<const N: usize> {
    images: [u8; N],
}

pub type S5 = Permutation<5>;

impl<const N: usize> Permutation<N> {
    pub fn identity() -> Self {
        let mut images = [0u8; N];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Permutation { images }
    }

    /// From 0-based images known to form a bijection.
    pub(crate) const fn from_images_const(images: [u8; N]) -> Self {
        Permutation { images }
    }

    /// From 0-based images; fails unless they form a bijection.
    pub fn from_images(images: [u8; N]) -> Result<Self> {
        let mut seen = [false; N];
        for &x in &images {
            let x = x as usize;
            if x >= N || seen[x] {
                return Err(Error::InvalidParameter(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// 0-based image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> [u8; N] {
        self.images
    }

    /// `self` applied first, then `next`.
    #[inline]
    pub fn then(&self, next: &Self) -> Self {
        let mut images = [0u8; N];
        for (i, slot) in images.iter_mut().enumerate() {
            *slot = next.images[self.images[i] as usize];
        }
        Permutation { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = [0u8; N];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn order(&self) -> usize {
        let mut p = *self;
        let mut k = 1;
        while !p.is_identity() {
            p = p.then(self);
            k += 1;
        }
        k
    }

    /// All `N!` permutations in lexicographic order of their image arrays.
    pub fn all() -> Vec<Self> {
        let mut out = Vec::new();
        let mut images = Self::identity().images;
        loop {
            out.push(Permutation { images });
            // next lexicographic permutation
            let Some(i) = (0..N.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
                return out;
            };
            let j = (i + 1..N).rev().find(|&j| images[j] > images[i]).expect("successor exists");
            images.swap(i, j);
            images[i + 1..].reverse();
        }
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point (0-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; N];
        let mut out = Vec::new();
        for start in 0..N {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

impl<const N: usize> Default for Permutation<N> {
    fn default() -> Self {
        Self::identity()
    }
}

impl<const N: usize> fmt::Display for Permutation<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        let sep = if N > 9 { " " } else { "" };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

impl<const N: usize> fmt::Debug for Permutation<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Cycle notation such as `(23)(45)`; `()` is the identity. Points are single
/// digits unless separated by spaces or commas inside a cycle.
impl<const N: usize> FromStr for Permutation<N> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: String| Error::Parse(format!("cycle notation {s:?}: {msg}"));
        let text = s.trim();
        if text.is_empty() {
            return Err(bad("empty".into()));
        }
        let mut images: [u8; N] = Self::identity().images;
        let mut used = [false; N];
        let mut rest = text;
        while !rest.is_empty() {
            let body_start = rest.strip_prefix('(').ok_or_else(|| bad("expected '('".into()))?;
            let close = body_start.find(')').ok_or_else(|| bad("unclosed cycle".into()))?;
            let body = &body_start[..close];
            rest = body_start[close + 1..].trim_start();
            let points: Vec<usize> = if body.contains(|c: char| c == ',' || c.is_whitespace()) {
                body.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| bad(format!("bad point {t:?}"))))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad(format!("bad point {c:?}"))))
                    .collect::<Result<_>>()?
            };
            for &p in &points {
                if p == 0 || p > N {
                    return Err(bad(format!("point {p} outside 1..={N}")));
                }
                if used[p - 1] {
                    return Err(bad(format!("point {p} repeated")));
                }
                used[p - 1] = true;
            }
            for (i, &p) in points.iter().enumerate() {
                images[p - 1] = (points[(i + 1) % points.len()] - 1) as u8;
            }
        }
        Ok(Permutation { images })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> S5 {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("()"), S5::identity());
        assert_eq!(p("(12345)").apply(0), 1);
        assert_eq!(p("(12345)").apply(4), 0);
        assert_eq!(p("(23)(45)").to_string(), "(23)(45)");
        assert_eq!(p("(152)").to_string(), "(152)");
        assert_eq!(p("(1 2)(3,4)"), p("(12)(34)"));
        assert!("(16)".parse::<S5>().is_err());
        assert!("(11)".parse::<S5>().is_err());
        assert!("12".parse::<S5>().is_err());
        assert!("(12".parse::<S5>().is_err());
    }

    #[test]
    fn group_laws() {
        let all = S5::all();
        assert_eq!(all.len(), 120);
        assert_eq!(all[0], S5::identity());
        for x in all.iter().step_by(7) {
            assert!(x.then(&x.inverse()).is_identity());
            for y in all.iter().step_by(11) {
                for z in all.iter().step_by(13) {
                    assert_eq!(x.then(y).then(z), x.then(&y.then(z)));
                }
            }
        }
    }

    #[test]
    fn orders() {
        assert_eq!(p("(12345)").order(), 5);
        assert_eq!(p("(23)(45)").order(), 2);
        assert_eq!(p("(12)(345)").order(), 6);
        assert_eq!(S5::identity().order(), 1);
    }

    #[test]
    fn then_applies_left_first() {
        // (12) then (23): 1 -> 2 -> 3.
        assert_eq!(p("(12)").then(&p("(23)")).apply(0), 2);
    }
}
