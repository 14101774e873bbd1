//! Sturm-sequence root counting and isolation for polynomials with exact
//! rational coefficients. No floating point is involved in any decision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense polynomial over Q, coefficients low to high, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> QPoly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> QPoly {
        QPoly::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> &BigRational {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> QPoly {
        if self.coeffs.len() <= 1 {
            return QPoly::new(vec![]);
        }
        QPoly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from(BigInt::from(i as i64 + 1)))
                .collect(),
        )
    }

    /// Euclidean remainder.
    fn rem(&self, div: &QPoly) -> QPoly {
        let d = div.degree();
        let lead = div.leading();
        let mut r = self.coeffs.clone();
        while r.len() > d {
            let k = r.len() - 1;
            let q = &r[k] / lead;
            if !q.is_zero() {
                for (i, c) in div.coeffs.iter().enumerate() {
                    let idx = k - d + i;
                    r[idx] = &r[idx] - &q * c;
                }
            }
            r.pop();
        }
        QPoly::new(r)
    }
}

/// Standard Sturm chain p, p', -rem(..), ..; counts *distinct* real roots
/// whether or not p is squarefree.
pub struct SturmChain {
    chain: Vec<QPoly>,
}

impl SturmChain {
    pub fn new(p: &QPoly) -> SturmChain {
        let mut chain = vec![p.clone()];
        let d = p.derivative();
        if !d.is_zero() {
            chain.push(d);
            loop {
                let n = chain.len();
                let r = chain[n - 2].rem(&chain[n - 1]);
                if r.is_zero() {
                    break;
                }
                chain.push(QPoly::new(r.coeffs.iter().map(|c| -c).collect()));
            }
        }
        SturmChain { chain }
    }

    fn variations(signs: impl Iterator<Item = i32>) -> usize {
        let mut last = 0i32;
        let mut count = 0usize;
        for s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            let v = p.eval(x);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        }))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            if p.is_zero() {
                0
            } else if p.leading().is_positive() {
                1
            } else {
                -1
            }
        }))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.chain.iter().map(|p| {
            if p.is_zero() {
                return 0;
            }
            let s = if p.leading().is_positive() { 1 } else { -1 };
            if p.degree() % 2 == 0 {
                s
            } else {
                -s
            }
        }))
    }

    pub fn distinct_real_roots(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }

    /// Distinct roots in the half-open interval (a, b], for p(a) != 0.
    pub fn roots_in(&self, a: &BigRational, b: &BigRational) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

/// Isolating intervals (lo, hi] for every distinct real root of p, sorted
/// ascending. Interval endpoints are never roots of p for the polynomials
/// this crate isolates (irrational algebraic roots); asserted.
pub fn isolate_real_roots(p: &QPoly) -> Vec<(BigRational, BigRational)> {
    assert!(p.degree() >= 1);
    let chain = SturmChain::new(p);
    // Cauchy bound: all roots in (-m, m)
    let m = BigRational::one()
        + p.coeffs[..p.coeffs.len() - 1]
            .iter()
            .map(|c| (c / p.leading()).abs())
            .max()
            .unwrap_or_else(BigRational::zero);
    let mut out = Vec::new();
    let mut stack = vec![(-m.clone(), m)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.roots_in(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / BigRational::from(BigInt::from(2));
        assert!(!p.eval(&mid).is_zero(), "bisection midpoint hit a root");
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Shrink an isolating interval of a simple root by sign bisection until
/// its width is at most eps.
pub fn refine_root(
    p: &QPoly,
    (mut lo, mut hi): (BigRational, BigRational),
    eps: &BigRational,
) -> (BigRational, BigRational) {
    let chain = SturmChain::new(p);
    debug_assert_eq!(chain.roots_in(&lo, &hi), 1);
    let two = BigRational::from(BigInt::from(2));
    while &hi - &lo > *eps {
        let mid = (&lo + &hi) / &two;
        if chain.roots_in(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// Product of interval values of a quadratic with exact endpoints:
/// evaluates c0 + c1 t + c2 t^2 over [lo, hi] by naive interval arithmetic.
pub fn interval_eval_quadratic(
    c: &[BigRational; 3],
    lo: &BigRational,
    hi: &BigRational,
) -> (BigRational, BigRational) {
    let mul = |a: &BigRational, b: &BigRational| a * b;
    // t in [lo, hi]; t^2 endpoints
    let sq_cands = [mul(lo, lo), mul(lo, hi), mul(hi, hi)];
    let sq_lo = if lo.is_negative() && hi.is_positive() {
        BigRational::zero()
    } else {
        sq_cands.iter().min().unwrap().clone()
    };
    let sq_hi = sq_cands.iter().max().unwrap().clone();
    let lin = |coef: &BigRational, a: &BigRational, b: &BigRational| {
        if coef.is_negative() {
            (coef * b, coef * a)
        } else {
            (coef * a, coef * b)
        }
    };
    let (l1, h1) = lin(&c[1], lo, hi);
    let (l2, h2) = lin(&c[2], &sq_lo, &sq_hi);
    (&c[0] + l1 + l2, &c[0] + h1 + h2)
}

pub fn interval_mul(
    (alo, ahi): (&BigRational, &BigRational),
    (blo, bhi): (&BigRational, &BigRational),
) -> (BigRational, BigRational) {
    let cands = [alo * blo, alo * bhi, ahi * blo, ahi * bhi];
    (
        cands.iter().min().unwrap().clone(),
        cands.iter().max().unwrap().clone(),
    )
}
