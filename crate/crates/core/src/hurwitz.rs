//! Enumeration and classification of branched coverings of the line with
//! dihedral monodromy, genus computations, and the full covering tower
//! (Galois closure, degree-2 base curve, and the p reflection quotients).
//!
//! A covering with b branch points is encoded by a monodromy tuple
//! (c_1, .., c_b) of reflections with c_1 c_2 .. c_b = 1; two tuples give
//! isomorphic coverings iff they are simultaneously conjugate under the
//! normalizer of the dihedral group in S_p. The normalizer is computed,
//! never assumed, and orbit sizes are reported rather than divided out.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::dihedral::{canonical_dihedral, DihedralSubgroup};
use crate::error::{Error, Result};
use crate::group::{identify_group, GroupTag, PermGroup};
use crate::perm::Perm;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BranchData {
    /// Odd prime degree of the covering.
    pub p: usize,
    /// Number of branch points; must be even for a product of odd
    /// permutations to be the identity.
    pub b: usize,
}

/// Precomputed tables for the canonical D_p: multiplication, inverses,
/// reflection indexing, and the action of the normalizer on reflections.
#[derive(Debug, Clone)]
pub struct CoveringContext {
    dihedral: DihedralSubgroup,
    normalizer: PermGroup,
    elems: Vec<Perm>,
    identity_id: usize,
    mult: Vec<Vec<usize>>,
    inv: Vec<usize>,
    /// refl_ids[i] = element id of reflection i (reflections sorted lex).
    refl_ids: Vec<usize>,
    /// element id -> reflection index, if the element is a reflection.
    refl_pos: Vec<Option<usize>>,
    /// One induced permutation of reflection indices per normalizer element.
    refl_maps: Vec<Vec<usize>>,
}

impl CoveringContext {
    pub fn new(p: usize) -> Result<CoveringContext> {
        let dihedral = canonical_dihedral(p)?;
        let normalizer = normalizer_of_dihedral(&dihedral)?;
        let elems: Vec<Perm> = dihedral.group().elements().to_vec();
        let index: HashMap<&Perm, usize> = elems.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let n = elems.len();
        let mut mult = vec![vec![0usize; n]; n];
        let mut inv = vec![0usize; n];
        for (i, g) in elems.iter().enumerate() {
            inv[i] = index[&g.inverse()];
            for (j, h) in elems.iter().enumerate() {
                mult[i][j] = index[&g.compose(h)?];
            }
        }
        let refl_ids: Vec<usize> = dihedral
            .reflections()
            .iter()
            .map(|r| index[r])
            .collect();
        let mut refl_pos = vec![None; n];
        for (i, &id) in refl_ids.iter().enumerate() {
            refl_pos[id] = Some(i);
        }
        let mut refl_maps = Vec::with_capacity(normalizer.order());
        for g in normalizer.elements() {
            let map: Vec<usize> = dihedral
                .reflections()
                .iter()
                .map(|r| {
                    let image = r.conjugate_by(g).unwrap();
                    refl_pos[index[&image]].expect("normalizer preserves reflections")
                })
                .collect();
            refl_maps.push(map);
        }
        let identity_id = elems
            .iter()
            .position(|g| g.is_identity())
            .expect("group contains the identity");
        Ok(CoveringContext {
            dihedral,
            normalizer,
            elems,
            identity_id,
            mult,
            inv,
            refl_ids,
            refl_pos,
            refl_maps,
        })
    }

    pub fn prime(&self) -> usize {
        self.dihedral.prime()
    }

    pub fn dihedral(&self) -> &DihedralSubgroup {
        &self.dihedral
    }

    pub fn normalizer(&self) -> &PermGroup {
        &self.normalizer
    }

    pub fn reflection(&self, index: usize) -> &Perm {
        &self.elems[self.refl_ids[index]]
    }
}

/// N(D_p) in S_p, computed rather than assumed: every normalizer element
/// must normalize the characteristic rotation subgroup, so it solves
/// g c g^{-1} = c^k for some k and is pinned down by the image of one
/// point. The p(p-1) solutions are filtered by an explicit normalizing
/// check; brute force over all of S_p confirms the result at small p in
/// the test suite.
fn normalizer_of_dihedral(d: &DihedralSubgroup) -> Result<PermGroup> {
    let p = d.prime();
    let c = d.rotation();
    let c_cycle = &c.cycles()[0];
    let mut gens = Vec::new();
    let mut target = c.clone();
    for _ in 1..p {
        for start in 1..=p {
            let mut images = vec![0usize; p];
            let mut y = start;
            for &x in c_cycle {
                images[x - 1] = y;
                y = target.apply(y);
            }
            let g = Perm::from_images(images)?;
            let normalizes = d
                .group()
                .elements()
                .iter()
                .all(|x| d.group().contains(&x.conjugate_by(&g).unwrap()));
            if normalizes {
                gens.push(g);
            }
        }
        target = target.compose(c)?;
    }
    let n = PermGroup::generate(&gens)?;
    assert_eq!(n.order(), p * (p - 1));
    Ok(n)
}

/// One branched covering: reflection indices of (c_1, .., c_b), product 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonodromyTuple {
    indices: Vec<usize>,
}

impl MonodromyTuple {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn perms<'a>(&self, ctx: &'a CoveringContext) -> Vec<&'a Perm> {
        self.indices.iter().map(|&i| ctx.reflection(i)).collect()
    }

    pub fn cycle_strings(&self, ctx: &CoveringContext) -> Vec<String> {
        self.perms(ctx).iter().map(|p| p.to_string()).collect()
    }

    /// The subgroup generated by the entries; for distinct entries this is
    /// the whole ambient dihedral group.
    pub fn generated_group(&self, ctx: &CoveringContext) -> PermGroup {
        let gens: Vec<Perm> = self.perms(ctx).into_iter().cloned().collect();
        PermGroup::generate(&gens).expect("nonempty tuple")
    }
}

/// All connected monodromy tuples for the canonical D_p: free choice of
/// c_1 .. c_{b-1}, last entry forced, constant tuples excluded. The forced
/// last entry is checked to be a reflection for every tuple.
pub fn enumerate_tuples(ctx: &CoveringContext, bd: BranchData, budget: u128) -> Result<Vec<MonodromyTuple>> {
    if bd.b % 2 != 0 {
        return Err(Error::OddBranchCount(bd.b));
    }
    let p = ctx.prime();
    assert_eq!(p, bd.p);
    let needed = (p as u128).pow(bd.b as u32 - 1);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    // Prefix-parallel over the first entry; concatenation in index order
    // keeps the output identical for any thread count.
    let chunks: Vec<Vec<MonodromyTuple>> = (0..p)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut digits = vec![0usize; bd.b - 1];
            digits[0] = first;
            loop {
                let mut prod = ctx.identity_id;
                for &d in &digits {
                    prod = ctx.mult[prod][ctx.refl_ids[d]];
                }
                let last_id = ctx.inv[prod];
                let last = ctx.refl_pos[last_id]
                    .expect("product of an odd number of reflections is a reflection");
                let mut indices = digits.clone();
                indices.push(last);
                if indices.iter().any(|&i| i != indices[0]) {
                    out.push(MonodromyTuple { indices });
                }
                // odometer over digits[1..], base p
                if digits.len() == 1 {
                    return out;
                }
                let mut k = bd.b - 2;
                loop {
                    digits[k] += 1;
                    if digits[k] < p {
                        break;
                    }
                    digits[k] = 0;
                    if k == 1 {
                        return out;
                    }
                    k -= 1;
                }
            }
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

#[derive(Debug, Clone)]
pub struct Orbit {
    pub representative: MonodromyTuple,
    pub size: usize,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub branch_data: BranchData,
    /// All product-1 tuples, including the p disconnected constant ones.
    pub total_tuples: u128,
    pub connected_tuples: usize,
    pub normalizer_order: usize,
    /// Orbits sorted by representative index vector.
    pub orbits: Vec<Orbit>,
}

impl Classification {
    pub fn class_count(&self) -> usize {
        self.orbits.len()
    }

    pub fn orbit_size_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for o in &self.orbits {
            *hist.entry(o.size).or_insert(0) += 1;
        }
        hist
    }
}

/// Partition the connected tuples into orbits under simultaneous
/// conjugation by the normalizer. The orbit representative is the
/// lexicographically minimal index vector of the orbit.
pub fn classify_coverings(ctx: &CoveringContext, bd: BranchData, budget: u128) -> Result<Classification> {
    let tuples = enumerate_tuples(ctx, bd, budget)?;
    let connected = tuples.len();
    let counts: Vec<(Vec<usize>, usize)> = tuples
        .par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<Vec<usize>, usize>, t| {
            let canon = ctx
                .refl_maps
                .iter()
                .map(|m| t.indices.iter().map(|&i| m[i]).collect::<Vec<usize>>())
                .min()
                .expect("normalizer is nonempty");
            *acc.entry(canon).or_insert(0) += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        })
        .into_iter()
        .collect();
    let orbits: Vec<Orbit> = counts
        .into_iter()
        .map(|(indices, size)| Orbit {
            representative: MonodromyTuple { indices },
            size,
        })
        .collect();
    debug_assert_eq!(orbits.iter().map(|o| o.size).sum::<usize>(), connected);
    Ok(Classification {
        branch_data: bd,
        total_tuples: connected as u128 + ctx.prime() as u128,
        connected_tuples: connected,
        normalizer_order: ctx.normalizer.order(),
        orbits,
    })
}

/// Orbit count by the orbit-counting lemma: average number of connected
/// tuples fixed by a normalizer element. Must agree with the direct orbit
/// partition; the division is checked to be exact.
pub fn burnside_count(ctx: &CoveringContext, bd: BranchData, budget: u128) -> Result<u128> {
    let tuples = enumerate_tuples(ctx, bd, budget)?;
    let fixed: u128 = ctx
        .refl_maps
        .par_iter()
        .map(|m| {
            tuples
                .iter()
                .filter(|t| t.indices.iter().all(|&i| m[i] == i))
                .count() as u128
        })
        .sum();
    let order = ctx.normalizer.order() as u128;
    assert_eq!(fixed % order, 0, "orbit-counting sum must divide evenly");
    Ok(fixed / order)
}

/// Total number of product-1 tuples of reflections (connected or not) by
/// the character-sum formula r^b / |G| * sum over irreducible characters
/// of chi(c)^b / chi(1)^(b-2). D_p has two linear characters (values 1 and
/// -1 on reflections) and (p-1)/2 degree-2 characters vanishing on them,
/// so the sum collapses to p^(b-1) for even b and 0 for odd b; the
/// rational arithmetic below keeps the formula explicit and checks
/// integrality.
pub fn frobenius_tuple_count(p: usize, b: usize) -> Result<u128> {
    if !crate::dihedral::is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let class_size = BigInt::from(p); // p reflections
    let group_order = BigInt::from(2 * p);
    // (character value on a reflection, degree)
    let mut characters: Vec<(BigInt, BigInt)> = vec![
        (BigInt::one(), BigInt::one()),
        (-BigInt::one(), BigInt::one()),
    ];
    for _ in 0..(p - 1) / 2 {
        characters.push((BigInt::zero(), BigInt::from(2)));
    }
    let mut sum = BigRational::zero();
    for (value, degree) in &characters {
        let num = value.pow(b as u32);
        let den = degree.pow(b as u32 - 2);
        sum += BigRational::new(num, den);
    }
    let total = BigRational::new(class_size.pow(b as u32), group_order) * sum;
    assert!(total.is_integer(), "character sum must be an integer");
    let n = total.to_integer();
    assert!(!n.is_negative());
    Ok(n.to_u128().expect("count fits in u128"))
}

/// Genus from 2g - 2 = -2 * degree + sum over branch points and cycles of
/// (length - 1). Errs on non-partitions, odd parity, or negative genus.
pub fn riemann_hurwitz_genus(degree: usize, branch_cycle_types: &[Vec<usize>]) -> Result<usize> {
    let mut ramification = 0usize;
    for t in branch_cycle_types {
        if t.iter().sum::<usize>() != degree || t.iter().any(|&l| l == 0) {
            return Err(Error::BadPartition(t.clone(), degree));
        }
        ramification += t.iter().map(|&l| l - 1).sum::<usize>();
    }
    // 2g - 2 = -2n + ramification
    let rhs = ramification as i64 - 2 * degree as i64;
    if (rhs + 2) % 2 != 0 {
        return Err(Error::GenusParity);
    }
    let genus2 = rhs + 2;
    if genus2 < 0 {
        return Err(Error::NegativeGenus);
    }
    Ok((genus2 / 2) as usize)
}

/// Genus of an unramified cover of degree n over a base of genus g:
/// 2g' - 2 = n (2g - 2).
pub fn etale_genus(degree: usize, base_genus: usize) -> usize {
    let rhs = degree as i64 * (2 * base_genus as i64 - 2);
    debug_assert!(rhs % 2 == 0 && rhs + 2 >= 0);
    ((rhs + 2) / 2) as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub degree: usize,
    pub branch_cycle_types: Vec<Vec<usize>>,
    pub total_ramification: usize,
    pub genus: usize,
    pub connected: bool,
    pub monodromy_group: GroupTag,
}

fn report_from_perms(perms: &[Perm]) -> Result<CoverReport> {
    let degree = perms[0].degree();
    let branch_cycle_types: Vec<Vec<usize>> = perms.iter().map(|p| p.cycle_type()).collect();
    let total_ramification = branch_cycle_types
        .iter()
        .map(|t| t.iter().map(|&l| l - 1).sum::<usize>())
        .sum();
    let genus = riemann_hurwitz_genus(degree, &branch_cycle_types)?;
    let group = PermGroup::generate(perms)?;
    Ok(CoverReport {
        degree,
        branch_cycle_types,
        total_ramification,
        genus,
        connected: group.is_transitive(),
        monodromy_group: identify_group(&group),
    })
}

/// The intermediate cover attached to a subgroup H of the ambient D_p: the
/// action of each c_i on right cosets of H. H = <reflection> gives a
/// degree-p quotient, H = <rotation> the degree-2 base curve, H = 1 the
/// Galois closure.
pub fn coset_action_cover(
    ctx: &CoveringContext,
    tuple: &MonodromyTuple,
    subgroup: &PermGroup,
) -> Result<CoverReport> {
    if !subgroup.is_subgroup_of(ctx.dihedral.group()) {
        return Err(Error::NotSubgroup {
            sub: subgroup.order(),
            ambient: ctx.dihedral.group().order(),
        });
    }
    let n = ctx.elems.len();
    let sub_ids: Vec<usize> = subgroup
        .elements()
        .iter()
        .map(|h| ctx.elems.binary_search(h).expect("subgroup element"))
        .collect();
    // canonical coset key: minimal element id in Hg
    let coset_key = |g: usize| -> usize {
        sub_ids.iter().map(|&h| ctx.mult[h][g]).min().unwrap()
    };
    // keys[g] = canonical key of Hg
    let keys: Vec<usize> = (0..n).map(coset_key).collect();
    let mut distinct: Vec<usize> = keys.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let coset_of: HashMap<usize, usize> = distinct.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let degree = distinct.len();
    let mut perms = Vec::with_capacity(tuple.indices.len());
    for &ci in &tuple.indices {
        let c = ctx.refl_ids[ci];
        let mut images = vec![0usize; degree];
        for (i, &k) in distinct.iter().enumerate() {
            images[i] = coset_of[&keys[ctx.mult[k][c]]] + 1;
        }
        perms.push(Perm::from_images(images)?);
    }
    report_from_perms(&perms)
}

/// All (12)s: the monodromy of the hyperelliptic double cover, ramified
/// over every branch point.
pub fn hyperelliptic_tuple(b: usize) -> Vec<Perm> {
    (0..b)
        .map(|_| Perm::from_images(vec![2, 1]).unwrap())
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct FiberProductReport {
    /// The product cover of degree 2p over the line.
    pub cover: CoverReport,
    /// Monodromy group order 2p acting regularly, i.e. the cover is Galois.
    pub galois: bool,
    pub galois_group: GroupTag,
    /// No ramification in the projection to the degree-2 factor, at any
    /// branch point (the coprime-index criterion, verified cycle by cycle).
    pub etale_over_base_curve: bool,
}

/// Fiber product of the degree-2 cover and a degree-p dihedral cover over
/// the same branch points: the product action on 2 x p points.
pub fn fiber_product(
    ctx: &CoveringContext,
    h_tuple: &[Perm],
    f_tuple: &MonodromyTuple,
) -> Result<FiberProductReport> {
    let b = f_tuple.indices.len();
    if h_tuple.len() != b {
        return Err(Error::BranchMismatch(h_tuple.len(), b));
    }
    let p = ctx.prime();
    let degree = 2 * p;
    let mut product_perms = Vec::with_capacity(b);
    for (hp, &fi) in h_tuple.iter().zip(&f_tuple.indices) {
        let fp = ctx.reflection(fi);
        // point (x, y) with x in the 2-point fiber, y in the p-point fiber
        let mut images = vec![0usize; degree];
        for x in 1..=2 {
            for y in 1..=p {
                let idx = (x - 1) * p + (y - 1);
                images[idx] = (hp.apply(x) - 1) * p + fp.apply(y);
            }
        }
        product_perms.push(Perm::from_images(images)?);
    }
    let group = PermGroup::generate(&product_perms)?;
    if !group.is_transitive() {
        return Err(Error::DisconnectedProduct);
    }
    let cover = report_from_perms(&product_perms)?;
    let galois_group = identify_group(&group);
    let galois = group.order() == degree && matches!(galois_group, GroupTag::Dihedral(_));
    // Etale over the degree-2 factor: every cycle of the product monodromy
    // must have the same length as the h-cycle it projects onto.
    let mut etale = true;
    for (perm, hp) in product_perms.iter().zip(h_tuple) {
        for cycle in perm.cycles() {
            let x0 = (cycle[0] - 1) / p + 1;
            let mut h_len = 1usize;
            let mut x = hp.apply(x0);
            while x != x0 {
                h_len += 1;
                x = hp.apply(x);
            }
            if cycle.len() != h_len {
                etale = false;
            }
        }
    }
    Ok(FiberProductReport {
        cover,
        galois,
        galois_group,
        etale_over_base_curve: etale,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TowerReport {
    /// Degree-2p regular cover (trivial subgroup).
    pub galois_closure: CoverReport,
    /// Degree-2 quotient by the rotation subgroup.
    pub base_curve: CoverReport,
    /// Degree-p quotients by each of the p reflections.
    pub quotients: Vec<CoverReport>,
    /// N: isomorphism classes of degree-p coverings with this branch data.
    pub class_count: usize,
    /// (p^4 - 1)/(p - 1): cyclic subgroups of order p in the p-torsion of
    /// a genus-2 Jacobian, i.e. classes of cyclic unramified degree-p
    /// covers of the base curve.
    pub torsion_class_count: u128,
    /// d with torsion_class_count = d * N, when the division is exact.
    pub inferred_multiplicity: Option<u128>,
}

pub fn tower_report(
    ctx: &CoveringContext,
    classification: &Classification,
    tuple: &MonodromyTuple,
) -> Result<TowerReport> {
    let p = ctx.prime();
    let galois_closure = coset_action_cover(ctx, tuple, &PermGroup::trivial(p))?;
    let rotation_subgroup = PermGroup::generate(&[ctx.dihedral.rotation().clone()])?;
    let base_curve = coset_action_cover(ctx, tuple, &rotation_subgroup)?;
    let mut quotients = Vec::with_capacity(p);
    for r in ctx.dihedral.reflections() {
        let h = PermGroup::generate(&[r.clone()])?;
        quotients.push(coset_action_cover(ctx, tuple, &h)?);
    }
    let n = classification.class_count() as u128;
    let torsion = ((p as u128).pow(4) - 1) / (p as u128 - 1);
    let inferred = if n > 0 && torsion % n == 0 {
        Some(torsion / n)
    } else {
        None
    };
    Ok(TowerReport {
        galois_closure,
        base_curve,
        quotients,
        class_count: classification.class_count(),
        torsion_class_count: torsion,
        inferred_multiplicity: inferred,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUDGET: u128 = 100_000_000;

    #[test]
    fn tuple_counts_across_primes() {
        for (p, b, expected) in [(3, 4, 24usize), (3, 6, 240), (5, 6, 3120), (7, 6, 16800)] {
            let ctx = CoveringContext::new(p).unwrap();
            let tuples = enumerate_tuples(&ctx, BranchData { p, b }, BUDGET).unwrap();
            assert_eq!(tuples.len(), expected, "(p, b) = ({p}, {b})");
        }
    }

    #[test]
    fn odd_branch_count_rejected() {
        let ctx = CoveringContext::new(3).unwrap();
        assert!(matches!(
            enumerate_tuples(&ctx, BranchData { p: 3, b: 5 }, BUDGET),
            Err(Error::OddBranchCount(5))
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let ctx = CoveringContext::new(7).unwrap();
        assert!(matches!(
            enumerate_tuples(&ctx, BranchData { p: 7, b: 6 }, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn tuples_have_product_one_and_regenerate_the_group() {
        let ctx = CoveringContext::new(5).unwrap();
        let tuples = enumerate_tuples(&ctx, BranchData { p: 5, b: 4 }, BUDGET).unwrap();
        assert_eq!(tuples.len(), 120);
        for t in &tuples {
            let mut prod = Perm::identity(5);
            for c in t.perms(&ctx) {
                assert!(c.is_involution());
                prod = prod.compose(c).unwrap();
            }
            assert!(prod.is_identity());
            assert_eq!(t.generated_group(&ctx), *ctx.dihedral().group());
        }
    }

    #[test]
    fn classification_small_grid() {
        for (p, b, classes, orbit_size) in
            [(3, 4, 4usize, 6usize), (3, 6, 40, 6), (5, 4, 6, 20), (5, 6, 156, 20), (7, 4, 8, 42)]
        {
            let ctx = CoveringContext::new(p).unwrap();
            let c = classify_coverings(&ctx, BranchData { p, b }, BUDGET).unwrap();
            assert_eq!(c.class_count(), classes, "(p, b) = ({p}, {b})");
            let hist = c.orbit_size_histogram();
            assert_eq!(hist.len(), 1);
            assert_eq!(hist[&orbit_size], classes);
            let burnside = burnside_count(&ctx, BranchData { p, b }, BUDGET).unwrap();
            assert_eq!(burnside, classes as u128);
        }
    }

    #[test]
    fn frobenius_counts_match_brute_force() {
        for (p, b) in [(3usize, 4usize), (3, 6), (5, 4), (5, 6), (7, 4), (7, 6)] {
            let ctx = CoveringContext::new(p).unwrap();
            let c = classify_coverings(&ctx, BranchData { p, b }, BUDGET).unwrap();
            assert_eq!(frobenius_tuple_count(p, b).unwrap(), c.total_tuples);
        }
        // only the p constant pairs (c, c) at b = 2
        assert_eq!(frobenius_tuple_count(7, 2).unwrap(), 7);
        assert_eq!(frobenius_tuple_count(5, 6).unwrap(), 3125);
        assert_eq!(frobenius_tuple_count(7, 3).unwrap(), 0);
    }

    #[test]
    fn riemann_hurwitz_examples() {
        let t2221 = vec![vec![2, 2, 2, 1]; 6];
        assert_eq!(riemann_hurwitz_genus(7, &t2221).unwrap(), 3);
        let t2 = vec![vec![2]; 6];
        assert_eq!(riemann_hurwitz_genus(2, &t2).unwrap(), 2);
        let t27 = vec![vec![2; 7]; 6];
        assert_eq!(riemann_hurwitz_genus(14, &t27).unwrap(), 8);
        assert_eq!(etale_genus(7, 2), 8);
        // an unramified connected double cover of genus 0 does not exist
        assert!(matches!(
            riemann_hurwitz_genus(2, &[]),
            Err(Error::NegativeGenus)
        ));
    }

    #[test]
    fn riemann_hurwitz_errors() {
        assert!(matches!(
            riemann_hurwitz_genus(7, &[vec![2, 2]]),
            Err(Error::BadPartition(..))
        ));
        assert!(matches!(
            riemann_hurwitz_genus(2, &[vec![2]]),
            Err(Error::GenusParity)
        ));
        assert!(matches!(
            riemann_hurwitz_genus(3, &[]),
            Err(Error::NegativeGenus)
        ));
    }

    #[test]
    fn coset_quotients_of_a_representative() {
        let ctx = CoveringContext::new(7).unwrap();
        let c = classify_coverings(&ctx, BranchData { p: 7, b: 6 }, BUDGET).unwrap();
        let t = &c.orbits[0].representative;

        let j0 = PermGroup::generate(&[ctx.dihedral().reflections()[0].clone()]).unwrap();
        let y = coset_action_cover(&ctx, t, &j0).unwrap();
        assert_eq!(y.degree, 7);
        assert_eq!(y.genus, 3);
        assert!(y.branch_cycle_types.iter().all(|t| *t == vec![2, 2, 2, 1]));
        assert_eq!(y.monodromy_group, GroupTag::Dihedral(14));

        let rot = PermGroup::generate(&[ctx.dihedral().rotation().clone()]).unwrap();
        let base = coset_action_cover(&ctx, t, &rot).unwrap();
        assert_eq!(base.degree, 2);
        assert_eq!(base.genus, 2);
        assert!(base.branch_cycle_types.iter().all(|t| *t == vec![2]));

        let regular = coset_action_cover(&ctx, t, &PermGroup::trivial(7)).unwrap();
        assert_eq!(regular.degree, 14);
        assert_eq!(regular.genus, 8);
        assert!(regular.branch_cycle_types.iter().all(|t| *t == vec![2; 7]));
    }

    #[test]
    fn coset_action_requires_subgroup() {
        let ctx = CoveringContext::new(7).unwrap();
        let c = classify_coverings(&ctx, BranchData { p: 7, b: 4 }, BUDGET).unwrap();
        let t = &c.orbits[0].representative;
        let alien = PermGroup::generate(&[crate::perm::parse_cycles("(17)", 7).unwrap()]).unwrap();
        assert!(coset_action_cover(&ctx, t, &alien).is_err());
    }

    #[test]
    fn fiber_product_certificates() {
        let ctx = CoveringContext::new(7).unwrap();
        let c = classify_coverings(&ctx, BranchData { p: 7, b: 6 }, BUDGET).unwrap();
        let h = hyperelliptic_tuple(6);
        let fp = fiber_product(&ctx, &h, &c.orbits[0].representative).unwrap();
        assert!(fp.galois);
        assert_eq!(fp.galois_group, GroupTag::Dihedral(14));
        assert!(fp.etale_over_base_curve);
        assert_eq!(fp.cover.genus, 8);
        assert_eq!(fp.cover.degree, 14);
    }

    #[test]
    fn fiber_product_branch_mismatch() {
        let ctx = CoveringContext::new(7).unwrap();
        let c = classify_coverings(&ctx, BranchData { p: 7, b: 6 }, BUDGET).unwrap();
        let h = hyperelliptic_tuple(4);
        assert!(matches!(
            fiber_product(&ctx, &h, &c.orbits[0].representative),
            Err(Error::BranchMismatch(4, 6))
        ));
    }

    #[test]
    fn projection_recovers_the_degree7_report() {
        let ctx = CoveringContext::new(7).unwrap();
        let c = classify_coverings(&ctx, BranchData { p: 7, b: 6 }, BUDGET).unwrap();
        let t = &c.orbits[0].representative;
        let perms: Vec<Perm> = t.perms(&ctx).into_iter().cloned().collect();
        let direct = report_from_perms(&perms).unwrap();
        let j0 = PermGroup::generate(&[ctx.dihedral().reflections()[0].clone()]).unwrap();
        let quotient = coset_action_cover(&ctx, t, &j0).unwrap();
        assert_eq!(direct.degree, quotient.degree);
        assert_eq!(direct.genus, quotient.genus);
        assert_eq!(
            {
                let mut a = direct.branch_cycle_types.clone();
                a.sort();
                a
            },
            {
                let mut b = quotient.branch_cycle_types.clone();
                b.sort();
                b
            }
        );
    }

    #[test]
    fn tower_report_consistency() {
        let ctx = CoveringContext::new(7).unwrap();
        let c = classify_coverings(&ctx, BranchData { p: 7, b: 6 }, BUDGET).unwrap();
        let tower = tower_report(&ctx, &c, &c.orbits[0].representative).unwrap();
        assert_eq!(tower.galois_closure.genus, 8);
        assert_eq!(tower.base_curve.genus, 2);
        assert_eq!(tower.quotients.len(), 7);
        assert!(tower.quotients.iter().all(|q| q.genus == 3));
        assert_eq!(tower.torsion_class_count, 400);
        assert_eq!(tower.class_count, 400);
        assert_eq!(tower.inferred_multiplicity, Some(1));
    }

    #[test]
    fn normalizer_matches_brute_force_at_small_primes() {
        for p in [3usize, 5, 7] {
            let ctx = CoveringContext::new(p).unwrap();
            let sp = PermGroup::symmetric(p);
            let brute = ctx.dihedral().group().normalizer(&sp).unwrap();
            assert_eq!(*ctx.normalizer(), brute);
            assert_eq!(ctx.normalizer().order(), p * (p - 1));
        }
    }

    #[test]
    fn conjugating_a_tuple_preserves_its_reports() {
        let ctx = CoveringContext::new(7).unwrap();
        let c = classify_coverings(&ctx, BranchData { p: 7, b: 4 }, BUDGET).unwrap();
        let t = &c.orbits[1].representative;
        let j0 = PermGroup::generate(&[ctx.dihedral().reflections()[0].clone()]).unwrap();
        let base = coset_action_cover(&ctx, t, &j0).unwrap();
        for (gi, m) in ctx.refl_maps.iter().enumerate().step_by(7) {
            let mapped = MonodromyTuple {
                indices: t.indices.iter().map(|&i| m[i]).collect(),
            };
            let r = coset_action_cover(&ctx, &mapped, &j0).unwrap();
            assert_eq!(r.genus, base.genus, "normalizer element {gi}");
            assert_eq!(r.degree, base.degree);
            assert_eq!(r.connected, base.connected);
            assert_eq!(r.monodromy_group, base.monodromy_group);
        }
    }
}
