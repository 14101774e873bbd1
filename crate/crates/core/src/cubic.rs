//! Exact arithmetic in Z[eta], the maximal order of the totally real cubic
//! subfield of the 7th cyclotomic field, with eta = zeta + zeta^{-1} and
//! minimal polynomial t^3 + t^2 - 2t - 1. The ring is generic over the
//! backing integer type; see the crate root for the concrete aliases.
//!
//! The minimal polynomial is a module constant but not taken on trust: the
//! test suite rederives it inside Z[zeta] modulo the 7th cyclotomic
//! polynomial and checks its discriminant and maximality at 7.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::sturm::{
    interval_eval_quadratic, interval_mul, isolate_real_roots, refine_root, QPoly, SturmChain,
};

/// Monic minimal polynomial of eta: t^3 + MP[2] t^2 + MP[1] t + MP[0].
pub const MIN_POLY: [i64; 3] = [-1, -2, 1];

/// Backing integer ring for the cubic order.
pub trait Scalar:
    Integer + Signed + Clone + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;
    fn to_big(&self) -> BigInt;
    fn from_big(n: &BigInt) -> Self;
}

impl Scalar for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_big(n: &BigInt) -> Self {
        num_traits::ToPrimitive::to_i64(n).expect("value exceeds i64")
    }
}

impl Scalar for i128 {
    fn from_i64(v: i64) -> Self {
        v as i128
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
    fn from_big(n: &BigInt) -> Self {
        num_traits::ToPrimitive::to_i128(n).expect("value exceeds i128")
    }
}

impl Scalar for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
    fn from_big(n: &BigInt) -> Self {
        n.clone()
    }
}

/// x0 + x1 eta + x2 eta^2 in the power basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cubic<T: Scalar> {
    pub coeffs: [T; 3],
}

impl<T: Scalar> Cubic<T> {
    pub fn new(x0: T, x1: T, x2: T) -> Self {
        Cubic { coeffs: [x0, x1, x2] }
    }

    pub fn from_ints(x0: i64, x1: i64, x2: i64) -> Self {
        Cubic::new(T::from_i64(x0), T::from_i64(x1), T::from_i64(x2))
    }

    pub fn zero() -> Self {
        Cubic::from_ints(0, 0, 0)
    }

    pub fn one() -> Self {
        Cubic::from_ints(1, 0, 0)
    }

    pub fn eta() -> Self {
        Cubic::from_ints(0, 1, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Cubic::from_ints(n, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational_integer(&self) -> bool {
        self.coeffs[1].is_zero() && self.coeffs[2].is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Cubic::new(
            self.coeffs[0].clone() + rhs.coeffs[0].clone(),
            self.coeffs[1].clone() + rhs.coeffs[1].clone(),
            self.coeffs[2].clone() + rhs.coeffs[2].clone(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Cubic::new(
            self.coeffs[0].clone() - rhs.coeffs[0].clone(),
            self.coeffs[1].clone() - rhs.coeffs[1].clone(),
            self.coeffs[2].clone() - rhs.coeffs[2].clone(),
        )
    }

    pub fn neg(&self) -> Self {
        Cubic::new(
            T::zero() - self.coeffs[0].clone(),
            T::zero() - self.coeffs[1].clone(),
            T::zero() - self.coeffs[2].clone(),
        )
    }

    /// Product with reduction by the minimal polynomial: each eta^k for
    /// k >= 3 is rewritten via eta^3 = -MP[2] eta^2 - MP[1] eta - MP[0].
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut raw = [T::zero(), T::zero(), T::zero(), T::zero(), T::zero()];
        for i in 0..3 {
            for j in 0..3 {
                let prod = self.coeffs[i].clone() * rhs.coeffs[j].clone();
                raw[i + j] = raw[i + j].clone() + prod;
            }
        }
        for k in (3..5).rev() {
            let c = std::mem::replace(&mut raw[k], T::zero());
            for (idx, mp) in MIN_POLY.iter().enumerate() {
                raw[k - 3 + idx] = raw[k - 3 + idx].clone() - T::from_i64(*mp) * c.clone();
            }
        }
        Cubic::new(raw[0].clone(), raw[1].clone(), raw[2].clone())
    }

    pub fn scale(&self, s: &T) -> Self {
        Cubic::new(
            self.coeffs[0].clone() * s.clone(),
            self.coeffs[1].clone() * s.clone(),
            self.coeffs[2].clone() * s.clone(),
        )
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Power sums of the conjugates of eta, derived from the minimal
    /// polynomial by the Newton identities: s0 = 3, s1 = -MP[2], ..
    fn eta_power_sums() -> [i64; 3] {
        let e1 = -MIN_POLY[2];
        let e2 = MIN_POLY[1];
        let s1 = e1;
        let s2 = e1 * s1 - 2 * e2;
        [3, s1, s2]
    }

    /// Trace of the element: sum of its three embedding images.
    pub fn trace(&self) -> T {
        let s = Self::eta_power_sums();
        T::from_i64(s[0]) * self.coeffs[0].clone()
            + T::from_i64(s[1]) * self.coeffs[1].clone()
            + T::from_i64(s[2]) * self.coeffs[2].clone()
    }

    /// Norm as the resultant of the minimal polynomial with the element
    /// polynomial x0 + x1 t + x2 t^2, by exact Sylvester determinant.
    pub fn norm(&self) -> T {
        let f: [T; 4] = [
            T::from_i64(MIN_POLY[0]),
            T::from_i64(MIN_POLY[1]),
            T::from_i64(MIN_POLY[2]),
            T::one(),
        ];
        let g = &self.coeffs;
        if !g[2].is_zero() {
            // 5x5 Sylvester matrix of (cubic, quadratic)
            let z = T::zero;
            let m = vec![
                vec![f[3].clone(), f[2].clone(), f[1].clone(), f[0].clone(), z()],
                vec![z(), f[3].clone(), f[2].clone(), f[1].clone(), f[0].clone()],
                vec![g[2].clone(), g[1].clone(), g[0].clone(), z(), z()],
                vec![z(), g[2].clone(), g[1].clone(), g[0].clone(), z()],
                vec![z(), z(), g[2].clone(), g[1].clone(), g[0].clone()],
            ];
            determinant(m)
        } else if !g[1].is_zero() {
            let z = T::zero;
            let m = vec![
                vec![f[3].clone(), f[2].clone(), f[1].clone(), f[0].clone()],
                vec![g[1].clone(), g[0].clone(), z(), z()],
                vec![z(), g[1].clone(), g[0].clone(), z()],
                vec![z(), z(), g[1].clone(), g[0].clone()],
            ];
            determinant(m)
        } else {
            g[0].clone() * g[0].clone() * g[0].clone()
        }
    }

    /// Norm by exact symmetric-function expansion: the elementary
    /// symmetric functions of the conjugate values are rebuilt from their
    /// power sums (traces of powers) via the Newton identities; the third
    /// one is the norm. Independent of the resultant path.
    pub fn norm_symmetric(&self) -> T {
        let p1 = self.trace();
        let p2 = self.square().trace();
        let p3 = self.mul(&self.square()).trace();
        let two = T::from_i64(2);
        let three = T::from_i64(3);
        let e1 = p1.clone();
        let e2_num = e1.clone() * p1.clone() - p2.clone();
        let (e2, r2) = e2_num.div_rem(&two);
        assert!(r2.is_zero());
        let e3_num = e2.clone() * p1 - e1 * p2 + p3;
        let (e3, r3) = e3_num.div_rem(&three);
        assert!(r3.is_zero());
        e3
    }

    /// Characteristic polynomial t^3 + c2 t^2 + c1 t + c0 of the element,
    /// from the multiplication matrix on the power basis.
    pub fn char_poly(&self) -> [T; 3] {
        let cols = [
            self.clone(),
            self.mul(&Cubic::eta()),
            self.mul(&Cubic::eta().square()),
        ];
        // m[i][j] = coefficient of eta^i in x * eta^j
        let m = |i: usize, j: usize| cols[j].coeffs[i].clone();
        let tr = m(0, 0) + m(1, 1) + m(2, 2);
        let minors = m(0, 0).clone() * m(1, 1).clone() - m(0, 1).clone() * m(1, 0).clone()
            + m(0, 0).clone() * m(2, 2).clone()
            - m(0, 2).clone() * m(2, 0).clone()
            + m(1, 1).clone() * m(2, 2).clone()
            - m(1, 2).clone() * m(2, 1).clone();
        let det = m(0, 0).clone() * (m(1, 1).clone() * m(2, 2).clone() - m(1, 2).clone() * m(2, 1).clone())
            - m(0, 1).clone() * (m(1, 0).clone() * m(2, 2).clone() - m(1, 2).clone() * m(2, 0).clone())
            + m(0, 2).clone() * (m(1, 0).clone() * m(2, 1).clone() - m(1, 1).clone() * m(2, 0).clone());
        [T::zero() - det, minors, T::zero() - tr]
    }

    /// All three embedding images > 0, decided exactly by Sturm sign
    /// counting on the characteristic polynomial.
    pub fn is_totally_positive(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let cp = self.char_poly();
        if cp[0].is_zero() {
            // zero is an embedding image
            return false;
        }
        let poly = QPoly::new(vec![
            BigRational::from(cp[0].to_big()),
            BigRational::from(cp[1].to_big()),
            BigRational::from(cp[2].to_big()),
            BigRational::one(),
        ]);
        let chain = SturmChain::new(&poly);
        let total = chain.distinct_real_roots();
        let positive = chain.variations_at(&BigRational::zero()) - chain.variations_at_pos_inf();
        positive == total
    }

    pub fn is_unit(&self) -> bool {
        let n = self.norm();
        n == T::one() || n == T::zero() - T::one()
    }

    /// Exact quotient in the field, as power-basis rationals.
    pub fn field_quotient(&self, div: &Self) -> [BigRational; 3] {
        assert!(!div.is_zero());
        // div * (div^2 + c2 div + c1) = -c0 = norm(div)
        let cp = div.char_poly();
        let cofactor = div
            .square()
            .add(&div.scale(&cp[2]))
            .add(&Cubic::one().scale(&cp[1]));
        let num = self.mul(&cofactor);
        let den = T::zero() - cp[0].clone();
        debug_assert_eq!(den, div.norm());
        [
            BigRational::new(num.coeffs[0].to_big(), den.to_big()),
            BigRational::new(num.coeffs[1].to_big(), den.to_big()),
            BigRational::new(num.coeffs[2].to_big(), den.to_big()),
        ]
    }

    /// Exact ring quotient, if divisible.
    pub fn exact_div(&self, div: &Self) -> Option<Self> {
        let q = self.field_quotient(div);
        if q.iter().all(|c| c.is_integer()) {
            Some(Cubic::new(
                T::from_big(&q[0].to_integer()),
                T::from_big(&q[1].to_integer()),
                T::from_big(&q[2].to_integer()),
            ))
        } else {
            None
        }
    }

    /// Multiplicative inverse when the element is a unit of the ring.
    pub fn unit_inverse(&self) -> Option<Self> {
        Cubic::one().exact_div(self)
    }
}

fn determinant<T: Scalar>(m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = T::zero();
    for (j, top) in m[0].iter().enumerate() {
        if top.is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = top.clone() * determinant(minor);
        det = if j % 2 == 0 { det + term } else { det - term };
    }
    det
}

impl<T: Scalar> fmt::Display for Cubic<T> {
    /// Power-basis triple "(x0,x1,x2)".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.coeffs[0], self.coeffs[1], self.coeffs[2])
    }
}

/// The minimal polynomial as an exact rational polynomial.
pub fn min_poly_q() -> QPoly {
    QPoly::from_ints(&[MIN_POLY[0], MIN_POLY[1], MIN_POLY[2], 1])
}

/// The three real embeddings of eta as isolating rational intervals of
/// width at most eps, ordered descending (2cos(2pi/7), 2cos(4pi/7),
/// 2cos(6pi/7)).
pub fn eta_embeddings(eps: &BigRational) -> [(BigRational, BigRational); 3] {
    let poly = min_poly_q();
    let mut roots = isolate_real_roots(&poly);
    assert_eq!(roots.len(), 3);
    roots.reverse(); // descending
    let refined: Vec<(BigRational, BigRational)> = roots
        .into_iter()
        .map(|r| refine_root(&poly, r, eps))
        .collect();
    [refined[0].clone(), refined[1].clone(), refined[2].clone()]
}

/// Norm as the product of the three embedding values, pinned to a unique
/// integer by Sturm root isolation and interval refinement. A decision
/// procedure fully independent of the resultant route.
pub fn norm_via_embeddings<T: Scalar>(x: &Cubic<T>) -> BigInt {
    let coeffs = [
        BigRational::from(x.coeffs[0].to_big()),
        BigRational::from(x.coeffs[1].to_big()),
        BigRational::from(x.coeffs[2].to_big()),
    ];
    let mut eps = BigRational::new(BigInt::one(), BigInt::from(1024));
    loop {
        let roots = eta_embeddings(&eps);
        let mut acc = (BigRational::one(), BigRational::one());
        for (lo, hi) in &roots {
            let v = interval_eval_quadratic(&coeffs, lo, hi);
            acc = interval_mul((&acc.0, &acc.1), (&v.0, &v.1));
        }
        let lo_int = acc.0.ceil().to_integer();
        let hi_int = acc.1.floor().to_integer();
        if lo_int == hi_int {
            return lo_int;
        }
        eps /= BigRational::from(BigInt::from(1024));
    }
}

/// Extended Euclid in Z[eta] with Bezout certificate: returns (g, u, v)
/// with g = u x + v y, g | x, g | y, determined up to units.
///
/// The division step rounds the exact field quotient to the nearest
/// integer point and searches a small expanding coefficient box for a
/// remainder of strictly smaller norm; the field is norm-Euclidean, and
/// the cap of 4 is validated by the test suite.
pub fn euclid_gcd_bezout<T: Scalar>(
    x: &Cubic<T>,
    y: &Cubic<T>,
) -> Result<(Cubic<T>, Cubic<T>, Cubic<T>)> {
    if x.is_zero() && y.is_zero() {
        return Err(Error::GcdBothZero);
    }
    let mut r0 = x.clone();
    let mut r1 = y.clone();
    let mut s0 = Cubic::one();
    let mut s1 = Cubic::zero();
    let mut t0 = Cubic::zero();
    let mut t1 = Cubic::one();
    while !r1.is_zero() {
        let q = round_quotient(&r0, &r1)?;
        let r2 = r0.sub(&q.mul(&r1));
        let s2 = s0.sub(&q.mul(&s1));
        let t2 = t0.sub(&q.mul(&t1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    debug_assert_eq!(s0.mul(x).add(&t0.mul(y)), r0);
    Ok((r0, s0, t0))
}

const DIVISION_BOX_CAP: i64 = 4;

fn round_quotient<T: Scalar>(x: &Cubic<T>, y: &Cubic<T>) -> Result<Cubic<T>> {
    let fq = x.field_quotient(y);
    let base: Vec<BigInt> = fq.iter().map(|c| c.round().to_integer()).collect();
    let ny = y.norm().abs();
    for radius in 0..=DIVISION_BOX_CAP {
        for d0 in -radius..=radius {
            for d1 in -radius..=radius {
                for d2 in -radius..=radius {
                    if d0.abs().max(d1.abs()).max(d2.abs()) != radius {
                        continue;
                    }
                    let q = Cubic::new(
                        T::from_big(&(&base[0] + BigInt::from(d0))),
                        T::from_big(&(&base[1] + BigInt::from(d1))),
                        T::from_big(&(&base[2] + BigInt::from(d2))),
                    );
                    let rem = x.sub(&q.mul(y));
                    if rem.is_zero() || rem.norm().abs() < ny {
                        return Ok(q);
                    }
                }
            }
        }
    }
    Err(Error::DivisionStepExhausted)
}

/// All phi in the order with power-basis coefficients bounded by the
/// height for which norm(4 - phi^2) = 7 with 4 - phi^2 totally positive.
/// Results deduplicated under phi <-> -phi (first nonzero coefficient
/// positive) and sorted by coefficients.
pub fn solve_det_equation<T: Scalar>(height: i64) -> Vec<Cubic<T>> {
    let four = Cubic::<T>::from_int(4);
    let seven = T::from_i64(7);
    let mut out = Vec::new();
    for x0 in -height..=height {
        for x1 in -height..=height {
            for x2 in -height..=height {
                let first_nonzero = [x0, x1, x2].into_iter().find(|&c| c != 0);
                match first_nonzero {
                    None => continue,
                    Some(c) if c < 0 => continue,
                    _ => {}
                }
                let phi = Cubic::<T>::from_ints(x0, x1, x2);
                let rem = four.sub(&phi.square());
                if rem.norm() == seven && rem.is_totally_positive() {
                    out.push(phi);
                }
            }
        }
    }
    out
}

/// The same search restricted to rational integers phi = n: empty for
/// every height, because (4 - n^2)^3 = 7 has no integer solution.
pub fn solve_det_equation_integers<T: Scalar>(height: i64) -> Vec<Cubic<T>> {
    let four = Cubic::<T>::from_int(4);
    let seven = T::from_i64(7);
    let mut out = Vec::new();
    for n in 0..=height {
        let phi = Cubic::<T>::from_int(n);
        let rem = four.sub(&phi.square());
        if rem.norm() == seven && rem.is_totally_positive() {
            out.push(phi);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Cubic<BigInt>;

    #[test]
    fn reduction_of_eta_cubed() {
        // eta * eta^2 = eta^3 = 1 + 2 eta - eta^2
        let eta = C::eta();
        let cube = eta.mul(&eta.square());
        assert_eq!(cube, C::from_ints(1, 2, -1));
    }

    #[test]
    fn norm_examples_three_routes() {
        let eta = C::eta();
        assert_eq!(eta.norm(), BigInt::from(1));
        assert_eq!(eta.norm_symmetric(), BigInt::from(1));
        assert_eq!(norm_via_embeddings(&eta), BigInt::from(1));

        let x = C::from_int(4).sub(&eta.square());
        assert_eq!(x.norm(), BigInt::from(7));
        assert_eq!(x.norm_symmetric(), BigInt::from(7));
        assert_eq!(norm_via_embeddings(&x), BigInt::from(7));

        assert_eq!(C::from_int(-2).norm(), BigInt::from(-8));
    }

    #[test]
    fn trace_values() {
        assert_eq!(C::eta().trace(), BigInt::from(-1));
        assert_eq!(C::eta().square().trace(), BigInt::from(5));
        assert_eq!(C::one().trace(), BigInt::from(3));
    }

    #[test]
    fn totally_positive_examples() {
        assert!(C::one().is_totally_positive());
        assert!(!C::eta().is_totally_positive());
        assert!(C::from_int(4).sub(&C::eta().square()).is_totally_positive());
        assert!(!C::zero().is_totally_positive());
        assert!(!C::from_int(-1).is_totally_positive());
        // 2 - eta has an embedding value 2 - 1.24.. > 0; all three positive
        assert!(C::from_ints(2, -1, 0).is_totally_positive());
    }

    #[test]
    fn squares_are_totally_nonnegative() {
        for x0 in -2i64..=2 {
            for x1 in -2i64..=2 {
                for x2 in -2i64..=2 {
                    let x = C::from_ints(x0, x1, x2);
                    if !x.is_zero() {
                        assert!(x.square().is_totally_positive(), "({x0},{x1},{x2})^2");
                    }
                }
            }
        }
    }

    #[test]
    fn gcd_edge_cases() {
        let x = C::from_ints(3, 1, 0);
        let (g, u, v) = euclid_gcd_bezout(&x, &C::zero()).unwrap();
        assert_eq!(g, x);
        assert_eq!(u.mul(&x).add(&v.mul(&C::zero())), g);
        assert!(euclid_gcd_bezout(&C::zero(), &C::zero()).is_err());
    }

    #[test]
    fn gcd_of_two_and_eta_is_a_unit() {
        let (g, u, v) = euclid_gcd_bezout(&C::from_int(2), &C::eta()).unwrap();
        assert!(g.is_unit());
        assert_eq!(
            u.mul(&C::from_int(2)).add(&v.mul(&C::eta())),
            g
        );
    }

    #[test]
    fn gcd_divides_and_certifies() {
        let x = C::from_ints(2, 2, 0);
        let y = C::from_int(4);
        let (g, u, v) = euclid_gcd_bezout(&x, &y).unwrap();
        assert!(x.exact_div(&g).is_some());
        assert!(y.exact_div(&g).is_some());
        assert_eq!(u.mul(&x).add(&v.mul(&y)), g);
    }

    #[test]
    fn unit_inverse_roundtrip() {
        let eta = C::eta();
        let inv = eta.unit_inverse().unwrap();
        assert_eq!(eta.mul(&inv), C::one());
        assert!(C::from_int(2).unit_inverse().is_none());
    }

    #[test]
    fn det_equation_contains_eta() {
        let sols = solve_det_equation::<BigInt>(1);
        assert!(sols.contains(&C::eta()));
        for phi in &sols {
            let rem = C::from_int(4).sub(&phi.square());
            assert_eq!(norm_via_embeddings(&rem), BigInt::from(7));
        }
        assert!(solve_det_equation_integers::<BigInt>(100).is_empty());
        assert!(solve_det_equation::<BigInt>(0).is_empty());
    }

    #[test]
    fn det_equation_monotone_in_height() {
        let h1 = solve_det_equation::<i64>(1);
        let h2 = solve_det_equation::<i64>(2);
        for phi in &h1 {
            assert!(h2.contains(phi));
        }
    }

    #[test]
    fn scalar_backends_agree() {
        let a64 = Cubic::<i64>::from_ints(3, -2, 1);
        let abig = Cubic::<BigInt>::from_ints(3, -2, 1);
        assert_eq!(a64.norm(),
            num_traits::ToPrimitive::to_i64(&abig.norm()).unwrap());
        assert_eq!(a64.trace(), num_traits::ToPrimitive::to_i64(&abig.trace()).unwrap());
        assert_eq!(a64.is_totally_positive(), abig.is_totally_positive());
        assert_eq!(
            solve_det_equation::<i64>(1)
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>(),
            solve_det_equation::<BigInt>(1)
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn display_power_basis_triple() {
        assert_eq!(C::from_ints(0, 1, 0).to_string(), "(0,1,0)");
        assert_eq!(C::from_ints(4, 0, -1).to_string(), "(4,0,-1)");
    }
}
