//! Exact permutations of {1,..,n}.
//!
//! Composition is the *right action*, left-to-right: `compose(p, q)` applies
//! `p` first, then `q`, so `compose(p, q).apply(i) == q.apply(p.apply(i))`.
//! With a = (12)(34)(56) and b = (23)(45)(67) this gives ab = (1357642);
//! the opposite convention would silently turn some of the five-cycles of
//! the candidate table into seven-cycles and corrupt every downstream count.
//!
//! Points are 1-based in every public signature and in cycle notation;
//! storage is 0-based internally.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Perm {
    /// images[i] is the 0-based image of the 0-based point i.
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Build from 1-based images: `images[i]` is the image of point `i + 1`.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n {
                return Err(Error::PointOutOfRange { point: x, degree: n });
            }
            if seen[x - 1] {
                return Err(Error::RepeatedPoint { point: x });
            }
            seen[x - 1] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|x| x - 1).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 1-based image sequence, for reports and ordering.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Perm { images }
    }

    /// Left-to-right product: apply `self` first, then `other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Perm {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        })
    }

    /// g self g^{-1} in the left-to-right convention: applies g, then self,
    /// then g^{-1}. Matches the usage p b p^{-1} in the conjugacy arguments.
    pub fn conjugate_by(&self, g: &Perm) -> Result<Perm> {
        g.compose(self)?.compose(&g.inverse())
    }

    pub fn order(&self) -> usize {
        self.cycles().into_iter().fold(1, |acc, c| lcm(acc, c.len()))
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.images.iter().enumerate().all(|(i, &x)| self.images[x] == i)
    }

    /// Cycles as 1-based point lists, each rotated to start at its smallest
    /// point, sorted by smallest point. Fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start + 1];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle type as a partition of the degree, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().into_iter().map(|c| c.len()).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// sign = (-1)^(n - #cycles).
    pub fn sign(&self) -> i32 {
        let transpositions = self.degree() - self.cycles().len();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// 1-based fixed points, ascending.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &x)| i == x)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl PartialOrd for Perm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on image sequences; the ordering used everywhere reports
/// need a reproducible element order.
impl Ord for Perm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.images.cmp(&other.images))
    }
}

/// Canonical printing: smallest-point-first cycles, cycles sorted by
/// smallest point, fixed points omitted, identity printed "()". Points are
/// juxtaposed digits for degree <= 9 and comma-separated above that.
impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<Vec<usize>> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 && self.degree() > 9 {
                    write!(f, ",")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parse cycle notation over 1..=degree. Cycles in parentheses; points
/// comma- or whitespace-separated, juxtaposed single digits accepted when
/// degree <= 9; "()" is the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Perm> {
    let bytes = text.as_bytes();
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut pos = 0;
    let mut saw_any = false;

    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if c != b'(' {
            return Err(Error::Malformed {
                pos,
                msg: format!("expected '(', found {:?}", c as char),
            });
        }
        pos += 1;
        saw_any = true;
        let mut cycle: Vec<usize> = Vec::new();
        let mut closed = false;
        while pos < bytes.len() {
            let c = bytes[pos];
            if c == b')' {
                pos += 1;
                closed = true;
                break;
            } else if c == b',' || c.is_ascii_whitespace() {
                pos += 1;
            } else if c.is_ascii_digit() {
                let point = if degree <= 9 {
                    pos += 1;
                    (c - b'0') as usize
                } else {
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    text[start..pos].parse::<usize>().map_err(|_| Error::Malformed {
                        pos: start,
                        msg: "unreadable number".into(),
                    })?
                };
                if point == 0 || point > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                if used[point - 1] {
                    return Err(Error::RepeatedPoint { point });
                }
                used[point - 1] = true;
                cycle.push(point - 1);
            } else {
                return Err(Error::Malformed {
                    pos,
                    msg: format!("unexpected {:?}", c as char),
                });
            }
        }
        if !closed {
            return Err(Error::Malformed {
                pos,
                msg: "unclosed cycle".into(),
            });
        }
        for (k, &pt) in cycle.iter().enumerate() {
            images[pt] = cycle[(k + 1) % cycle.len()];
        }
    }
    if !saw_any {
        return Err(Error::Malformed {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    Ok(Perm { images })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p7(s: &str) -> Perm {
        parse_cycles(s, 7).unwrap()
    }

    #[test]
    fn parse_involution_a() {
        let a = p7("(12)(34)(56)");
        assert_eq!(a.images(), vec![2, 1, 4, 3, 6, 5, 7]);
        assert_eq!(a.to_string(), "(12)(34)(56)");
    }

    #[test]
    fn parse_identity() {
        let e = p7("()");
        assert!(e.is_identity());
        assert_eq!(e.to_string(), "()");
    }

    #[test]
    fn parse_seven_cycle() {
        let s1 = p7("(1357642)");
        assert_eq!(s1.cycle_type(), vec![7]);
        assert_eq!(s1.to_string(), "(1357642)");
    }

    #[test]
    fn parse_commas_and_large_degree() {
        let p = parse_cycles("(1,3,5)", 7).unwrap();
        assert_eq!(p, p7("(135)"));
        let q = parse_cycles("(1,10,11)", 12).unwrap();
        assert_eq!(q.apply(1), 10);
        assert_eq!(q.to_string(), "(1,10,11)");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_cycles("(12)(21)", 7), Err(Error::RepeatedPoint { point: 2 })));
        assert!(matches!(parse_cycles("(18)", 7), Err(Error::PointOutOfRange { point: 8, .. })));
        assert!(matches!(parse_cycles("(12", 7), Err(Error::Malformed { .. })));
        assert!(matches!(parse_cycles("12)", 7), Err(Error::Malformed { .. })));
        assert!(matches!(parse_cycles("", 7), Err(Error::Malformed { .. })));
    }

    #[test]
    fn compose_is_left_to_right() {
        let a = p7("(12)(34)(56)");
        let b1 = p7("(23)(45)(67)");
        assert_eq!(a.compose(&b1).unwrap(), p7("(1357642)"));
        let b3 = p7("(23)(47)(56)");
        assert_eq!(a.compose(&b3).unwrap(), p7("(13742)"));
        assert!(a.compose(&a).unwrap().is_identity());
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = p7("(12)");
        let b = parse_cycles("(12)", 5).unwrap();
        assert_eq!(a.compose(&b), Err(Error::DegreeMismatch(7, 5)));
    }

    #[test]
    fn cycle_type_and_sign() {
        let a = p7("(12)(34)(56)");
        assert_eq!(a.cycle_type(), vec![2, 2, 2, 1]);
        assert_eq!(a.sign(), -1);
        let e = Perm::identity(7);
        assert_eq!(e.cycle_type(), vec![1; 7]);
        assert_eq!(e.sign(), 1);
        let s = p7("(1357642)");
        assert_eq!(s.sign(), 1);
    }

    #[test]
    fn conjugation_matches_the_worked_example() {
        // conjugation by (2463) maps b1 to b8; the witness (35)(46)
        // additionally centralizes a, carrying <a,b1> onto <a,b8>
        let p = p7("(2463)");
        let a = p7("(12)(34)(56)");
        let b1 = p7("(23)(45)(67)");
        let b8 = p7("(25)(36)(47)");
        assert_eq!(b1.conjugate_by(&p).unwrap(), b8);
        let q = p7("(35)(46)");
        assert_eq!(a.conjugate_by(&q).unwrap(), a);
        assert_eq!(b1.conjugate_by(&q).unwrap(), b8);
    }

    #[test]
    fn order_and_inverse() {
        let s = p7("(1357642)");
        assert_eq!(s.order(), 7);
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        assert_eq!(p7("(12)(345)").order(), 6);
    }

    #[test]
    fn fixed_points() {
        assert_eq!(p7("(12)(34)(56)").fixed_points(), vec![7]);
        assert_eq!(p7("(23)(45)(67)").fixed_points(), vec![1]);
    }
}
