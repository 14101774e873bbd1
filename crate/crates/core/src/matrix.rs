//! 2x2 matrices over the cubic order: polarization candidates and the
//! constructive conjugacy of nontrivial idempotents.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cubic::{euclid_gcd_bezout, Cubic, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2<T: Scalar> {
    /// Row-major entries.
    pub entries: [[Cubic<T>; 2]; 2],
}

impl<T: Scalar> Mat2<T> {
    pub fn new(e11: Cubic<T>, e12: Cubic<T>, e21: Cubic<T>, e22: Cubic<T>) -> Self {
        Mat2 {
            entries: [[e11, e12], [e21, e22]],
        }
    }

    pub fn zero() -> Self {
        Mat2::new(Cubic::zero(), Cubic::zero(), Cubic::zero(), Cubic::zero())
    }

    pub fn identity() -> Self {
        Mat2::new(Cubic::one(), Cubic::zero(), Cubic::zero(), Cubic::one())
    }

    pub fn diag(a: Cubic<T>, d: Cubic<T>) -> Self {
        Mat2::new(a, Cubic::zero(), Cubic::zero(), d)
    }

    /// diag(0, 1), the normal form every nontrivial idempotent reaches.
    pub fn idempotent_normal_form() -> Self {
        Mat2::diag(Cubic::zero(), Cubic::one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Mat2::new(
            self.entries[0][0].add(&rhs.entries[0][0]),
            self.entries[0][1].add(&rhs.entries[0][1]),
            self.entries[1][0].add(&rhs.entries[1][0]),
            self.entries[1][1].add(&rhs.entries[1][1]),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Mat2::new(
            self.entries[0][0].sub(&rhs.entries[0][0]),
            self.entries[0][1].sub(&rhs.entries[0][1]),
            self.entries[1][0].sub(&rhs.entries[1][0]),
            self.entries[1][1].sub(&rhs.entries[1][1]),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let e = |i: usize, j: usize| {
            self.entries[i][0]
                .mul(&rhs.entries[0][j])
                .add(&self.entries[i][1].mul(&rhs.entries[1][j]))
        };
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(
            self.entries[0][0].clone(),
            self.entries[1][0].clone(),
            self.entries[0][1].clone(),
            self.entries[1][1].clone(),
        )
    }

    /// Symmetric under the Rosati involution, which on this totally real
    /// order is entry-wise identity composed with transposition.
    pub fn is_symmetric(&self) -> bool {
        self.entries[0][1] == self.entries[1][0]
    }

    pub fn det(&self) -> Cubic<T> {
        self.entries[0][0]
            .mul(&self.entries[1][1])
            .sub(&self.entries[0][1].mul(&self.entries[1][0]))
    }

    pub fn is_idempotent(&self) -> bool {
        self.mul(self) == *self
    }

    /// Inverse when the determinant is a unit of the order.
    pub fn unit_inverse(&self) -> Option<Self> {
        let d = self.det();
        let d_inv = d.unit_inverse()?;
        Some(Mat2::new(
            self.entries[1][1].mul(&d_inv),
            self.entries[0][1].neg().mul(&d_inv),
            self.entries[1][0].neg().mul(&d_inv),
            self.entries[0][0].mul(&d_inv),
        ))
    }

    fn apply(&self, v: &[Cubic<T>; 2]) -> [Cubic<T>; 2] {
        [
            self.entries[0][0].mul(&v[0]).add(&self.entries[0][1].mul(&v[1])),
            self.entries[1][0].mul(&v[0]).add(&self.entries[1][1].mul(&v[1])),
        ]
    }

    /// Max power-basis coefficient magnitude over all entries.
    pub fn height(&self) -> BigInt {
        let mut h = BigInt::from(0);
        for row in &self.entries {
            for e in row {
                for c in &e.coeffs {
                    let a = num_traits::Signed::abs(&c.to_big());
                    if a > h {
                        h = a;
                    }
                }
            }
        }
        h
    }
}

impl<T: Scalar> std::fmt::Display for Mat2<T> {
    /// Row-major "[e11,e12;e21,e22]" with power-basis triples.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{},{};{},{}]",
            self.entries[0][0], self.entries[0][1], self.entries[1][0], self.entries[1][1]
        )
    }
}

/// A generator of the rank-1 kernel of the matrix, made primitive by
/// dividing out the gcd of its coordinates. The kernel of a nontrivial
/// idempotent (or of idempotent - 1) is a saturated rank-1 submodule of a
/// free rank-2 module over a principal ideal domain, so the primitive
/// vector generates it.
fn primitive_kernel_vector<T: Scalar>(m: &Mat2<T>) -> Option<[Cubic<T>; 2]> {
    let row = if !m.entries[0][0].is_zero() || !m.entries[0][1].is_zero() {
        &m.entries[0]
    } else if !m.entries[1][0].is_zero() || !m.entries[1][1].is_zero() {
        &m.entries[1]
    } else {
        return None; // zero matrix has no rank-1 kernel
    };
    let v = [row[1].clone(), row[0].neg()];
    let (g, _, _) = euclid_gcd_bezout(&v[0], &v[1]).ok()?;
    let v = [v[0].exact_div(&g)?, v[1].exact_div(&g)?];
    let image = m.apply(&v);
    assert!(image[0].is_zero() && image[1].is_zero(), "kernel vector check");
    Some(v)
}

#[derive(Debug, Clone)]
pub struct IdempotentConjugation<T: Scalar> {
    /// g with g * eps * g^{-1} = diag(0, 1).
    pub conjugator: Mat2<T>,
    pub conjugator_inverse: Mat2<T>,
}

/// Conjugate a nontrivial idempotent to diag(0, 1) through the basis
/// {m0, m1} of kernel generators of eps and eps - 1. The determinant of
/// the basis is checked to be a unit and the conjugation identity is
/// reverified exactly before returning.
pub fn conjugate_idempotent<T: Scalar>(eps: &Mat2<T>) -> Result<IdempotentConjugation<T>> {
    if !eps.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    if *eps == Mat2::zero() || *eps == Mat2::identity() {
        return Err(Error::TrivialIdempotent);
    }
    let m0 = primitive_kernel_vector(eps).ok_or(Error::NonUnitBasis)?;
    let m1 =
        primitive_kernel_vector(&eps.sub(&Mat2::identity())).ok_or(Error::NonUnitBasis)?;
    // columns m0, m1
    let basis = Mat2::new(m0[0].clone(), m1[0].clone(), m0[1].clone(), m1[1].clone());
    if !basis.det().is_unit() {
        return Err(Error::NonUnitBasis);
    }
    let conjugator = basis.unit_inverse().expect("unit determinant");
    let normal = conjugator.mul(eps).mul(&basis);
    assert_eq!(
        normal,
        Mat2::idempotent_normal_form(),
        "conjugation certificate failed"
    );
    Ok(IdempotentConjugation {
        conjugator,
        conjugator_inverse: basis,
    })
}

/// Seeded stream of nontrivial idempotents of bounded height, produced by
/// conjugating diag(0, 1) with random unimodular matrices and rejecting
/// oversized results.
pub fn sample_idempotents<T: Scalar>(seed: u64, samples: usize, height: i64) -> Vec<Mat2<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        let mut small = || {
            Cubic::<T>::from_ints(
                rng.gen_range(-1..=1),
                rng.gen_range(-1..=1),
                rng.gen_range(-1..=1),
            )
        };
        let x = small();
        let y = small();
        // [[1, x], [y, 1 + xy]] has determinant 1
        let h = Mat2::new(
            Cubic::one(),
            x.clone(),
            y.clone(),
            Cubic::one().add(&x.mul(&y)),
        );
        let h_inv = h.unit_inverse().expect("determinant 1");
        let eps = h.mul(&Mat2::idempotent_normal_form()).mul(&h_inv);
        if eps.height() > BigInt::from(height) {
            continue;
        }
        debug_assert!(eps.is_idempotent());
        out.push(eps);
    }
    out
}

/// Classification of symmetric totally positive matrices of norm-7
/// determinant up to the given coefficient height; the flag marks the
/// shape diag entries = 2 carried by the pulled-back product polarization.
#[derive(Debug, Clone)]
pub struct PolarizationMatrix<T: Scalar> {
    pub matrix: Mat2<T>,
    pub prym_shape: bool,
}

pub fn classify_polarization_matrices<T: Scalar>(height: i64) -> Vec<PolarizationMatrix<T>> {
    let seven = T::from_i64(7);
    let two = Cubic::<T>::from_int(2);
    let mut box_elems = Vec::new();
    for x0 in -height..=height {
        for x1 in -height..=height {
            for x2 in -height..=height {
                box_elems.push(Cubic::<T>::from_ints(x0, x1, x2));
            }
        }
    }
    let positives: Vec<&Cubic<T>> = box_elems
        .iter()
        .filter(|c| c.is_totally_positive())
        .collect();
    let mut out = Vec::new();
    for alpha in &positives {
        for delta in &positives {
            let ad = alpha.mul(delta);
            for beta in &box_elems {
                let det = ad.sub(&beta.square());
                if det.norm() != seven || !det.is_totally_positive() {
                    continue;
                }
                let matrix = Mat2::new(
                    (*alpha).clone(),
                    beta.clone(),
                    beta.clone(),
                    (*delta).clone(),
                );
                let prym_shape = **alpha == two && **delta == two;
                out.push(PolarizationMatrix { matrix, prym_shape });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Cubic<BigInt>;
    type M = Mat2<BigInt>;

    #[test]
    fn diag_one_zero_is_conjugated_by_a_swap() {
        let eps = M::diag(C::one(), C::zero());
        let c = conjugate_idempotent(&eps).unwrap();
        let swapped = c.conjugator.mul(&eps).mul(&c.conjugator_inverse);
        assert_eq!(swapped, M::idempotent_normal_form());
        // the conjugator is the coordinate swap up to units
        assert!(c.conjugator.entries[0][0].is_zero());
        assert!(c.conjugator.entries[1][1].is_zero());
    }

    #[test]
    fn explicit_rank_one_idempotent() {
        let eps = M::new(C::one(), C::eta(), C::zero(), C::zero());
        assert!(eps.is_idempotent());
        let c = conjugate_idempotent(&eps).unwrap();
        assert_eq!(
            c.conjugator.mul(&eps).mul(&c.conjugator_inverse),
            M::idempotent_normal_form()
        );
        assert!(c.conjugator.det().is_unit());
    }

    #[test]
    fn trivial_and_non_idempotents_rejected() {
        assert!(matches!(
            conjugate_idempotent(&M::zero()),
            Err(Error::TrivialIdempotent)
        ));
        assert!(matches!(
            conjugate_idempotent(&M::identity()),
            Err(Error::TrivialIdempotent)
        ));
        let not = M::new(C::one(), C::one(), C::one(), C::one());
        assert!(matches!(conjugate_idempotent(&not), Err(Error::NotIdempotent)));
    }

    #[test]
    fn random_roundtrip_hundred_samples() {
        let eps_list = sample_idempotents::<BigInt>(1, 100, 3);
        assert_eq!(eps_list.len(), 100);
        for eps in &eps_list {
            let c = conjugate_idempotent(eps).unwrap();
            assert_eq!(
                c.conjugator.mul(eps).mul(&c.conjugator_inverse),
                M::idempotent_normal_form()
            );
            assert!(c.conjugator.det().is_unit());
        }
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let a = sample_idempotents::<BigInt>(7, 10, 3);
        let b = sample_idempotents::<BigInt>(7, 10, 3);
        assert_eq!(a, b);
    }

    #[test]
    fn polarization_search_finds_the_prym_matrix() {
        let found = classify_polarization_matrices::<i64>(2);
        let prym = Mat2::<i64>::new(
            C2::from_int(2),
            C2::eta(),
            C2::eta(),
            C2::from_int(2),
        );
        assert!(found.iter().any(|p| p.matrix == prym && p.prym_shape));
        // no candidate has all entries rational integers
        for p in &found {
            let all_int = p
                .matrix
                .entries
                .iter()
                .flatten()
                .all(|e| e.is_rational_integer());
            assert!(!all_int);
            assert!(p.matrix.is_symmetric());
        }
    }

    type C2 = Cubic<i64>;
}
