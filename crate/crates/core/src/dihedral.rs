//! Recognition and classification of dihedral subgroups D_p of S_p
//! generated by a pair of involutions, including the twelve-candidate
//! table for p = 7 and the conjugacy classification of all D_7 < S_7.

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::{parse_cycles, Perm};

pub fn is_odd_prime(p: usize) -> bool {
    p >= 3 && p % 2 == 1 && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// A transitive dihedral subgroup of S_p of order 2p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralSubgroup {
    group: PermGroup,
    rotation: Perm,
    /// The p involutions, sorted lexicographically.
    reflections: Vec<Perm>,
    p: usize,
}

impl DihedralSubgroup {
    /// Assemble from an order-p rotation, checking every structural
    /// invariant: |G| = 2p, every element is a rotation power or an
    /// involution, and each point is fixed by exactly one reflection.
    pub fn from_rotation(rotation: Perm, group: PermGroup) -> Result<DihedralSubgroup> {
        let p = rotation.degree();
        if !is_odd_prime(p) {
            return Err(Error::NotOddPrime(p));
        }
        assert_eq!(group.order(), 2 * p, "dihedral group must have order 2p");
        assert_eq!(rotation.order(), p);
        let mut reflections = Vec::with_capacity(p);
        let mut powers = std::collections::HashSet::new();
        let mut pw = Perm::identity(p);
        for _ in 0..p {
            powers.insert(pw.clone());
            pw = pw.compose(&rotation)?;
        }
        for g in group.elements() {
            if powers.contains(g) {
                continue;
            }
            assert!(g.is_involution(), "non-rotation element must be an involution");
            reflections.push(g.clone());
        }
        assert_eq!(reflections.len(), p);
        let d = DihedralSubgroup {
            group,
            rotation,
            reflections,
            p,
        };
        d.fixed_point_profile()?;
        Ok(d)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn rotation(&self) -> &Perm {
        &self.rotation
    }

    pub fn reflections(&self) -> &[Perm] {
        &self.reflections
    }

    pub fn prime(&self) -> usize {
        self.p
    }

    /// The bijection point <-> unique reflection fixing it, as
    /// (point, reflection index) pairs sorted by point. Errs if some point
    /// is fixed by zero or several reflections, which would falsify the
    /// structure of D_p; the assembly above guarantees it never fires.
    pub fn fixed_point_profile(&self) -> Result<Vec<(usize, usize)>> {
        let mut profile = Vec::with_capacity(self.p);
        for point in 1..=self.p {
            let fixing: Vec<usize> = self
                .reflections
                .iter()
                .enumerate()
                .filter(|(_, r)| r.apply(point) == point)
                .map(|(i, _)| i)
                .collect();
            if fixing.len() != 1 {
                return Err(Error::ProfileViolation {
                    point,
                    count: fixing.len(),
                });
            }
            profile.push((point, fixing[0]));
        }
        Ok(profile)
    }
}

/// Why a pair of permutations fails to generate a dihedral group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotDihedralReason {
    /// 0-based index of the offending input (0 = first, 1 = second).
    NotInvolution(usize),
    /// The product xy has this order instead of p.
    ProductOrder(usize),
}

#[derive(Debug, Clone)]
pub enum PairClass {
    Dihedral(DihedralSubgroup),
    NotDihedral(NotDihedralReason),
}

/// Classify the pair (x, y): dihedral iff both are involutions and xy is a
/// p-cycle. On success the defining relation x(xy)x = (xy)^{-1} is checked
/// before the subgroup is returned.
pub fn involution_pair_class(x: &Perm, y: &Perm) -> Result<PairClass> {
    let p = x.degree();
    if y.degree() != p {
        return Err(Error::DegreeMismatch(p, y.degree()));
    }
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if !x.is_involution() {
        return Ok(PairClass::NotDihedral(NotDihedralReason::NotInvolution(0)));
    }
    if !y.is_involution() {
        return Ok(PairClass::NotDihedral(NotDihedralReason::NotInvolution(1)));
    }
    let s = x.compose(y)?;
    let order = s.order();
    if order != p || s.cycle_type() != vec![p] {
        return Ok(PairClass::NotDihedral(NotDihedralReason::ProductOrder(order)));
    }
    // asa = s^{-1}
    assert_eq!(x.compose(&s)?.compose(x)?, s.inverse());
    let group = PermGroup::generate(&[x.clone(), y.clone()])?;
    Ok(PairClass::Dihedral(DihedralSubgroup::from_rotation(s, group)?))
}

/// The canonical representative D_p = <a, b> with a = (12)(34)..(p-2,p-1)
/// and b = (23)(45)..(p-1,p); for p = 7 this is <a, b_1> with the labels
/// of the twelve-candidate table.
pub fn canonical_dihedral(p: usize) -> Result<DihedralSubgroup> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let mut a: Vec<usize> = (1..=p).collect();
    let mut b: Vec<usize> = (1..=p).collect();
    for i in (0..p - 1).step_by(2) {
        a.swap(i, i + 1);
    }
    for i in (1..p - 1).step_by(2) {
        b.swap(i, i + 1);
    }
    let a = Perm::from_images(a)?;
    let b = Perm::from_images(b)?;
    match involution_pair_class(&a, &b)? {
        PairClass::Dihedral(d) => Ok(d),
        PairClass::NotDihedral(_) => unreachable!("canonical pair generates D_p"),
    }
}

#[derive(Debug, Clone)]
pub struct CandidateRow {
    /// 1-based row index, matching the labels b_1 .. b_12.
    pub index: usize,
    pub b: Perm,
    pub s: Perm,
    pub dihedral: bool,
}

/// The twelve candidates b_i for an involution partner of a = (12)(34)(56):
/// involutions of type (2,2,2,1) fixing 1 and avoiding the transposition
/// (27), in lexicographic order of their pairings. Row order and cycle
/// strings reproduce the classification table exactly.
pub fn candidate_table() -> Vec<CandidateRow> {
    let a = parse_cycles("(12)(34)(56)", 7).unwrap();
    let mut rows = Vec::with_capacity(12);
    let mut pairings = Vec::new();
    all_pairings(&[2, 3, 4, 5, 6, 7], &mut Vec::new(), &mut pairings);
    for pairing in pairings {
        if pairing.contains(&(2, 7)) {
            continue;
        }
        let mut images: Vec<usize> = (1..=7).collect();
        for &(x, y) in &pairing {
            images.swap(x - 1, y - 1);
        }
        let b = Perm::from_images(images).unwrap();
        let s = a.compose(&b).unwrap();
        let dihedral = matches!(involution_pair_class(&a, &b).unwrap(), PairClass::Dihedral(_));
        rows.push(CandidateRow {
            index: rows.len() + 1,
            b,
            s,
            dihedral,
        });
    }
    assert_eq!(rows.len(), 12);
    rows
}

/// Perfect matchings of an even point set, emitted in lexicographic order:
/// the smallest point pairs with each larger point in increasing order.
fn all_pairings(points: &[usize], acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
    if points.is_empty() {
        out.push(acc.clone());
        return;
    }
    let x = points[0];
    for i in 1..points.len() {
        let y = points[i];
        let rest: Vec<usize> = points[1..]
            .iter()
            .copied()
            .filter(|&z| z != y)
            .collect();
        acc.push((x, y));
        all_pairings(&rest, acc, out);
        acc.pop();
    }
}

#[derive(Debug, Clone)]
pub struct DihedralEnumeration {
    pub representative: DihedralSubgroup,
    pub subgroups: Vec<DihedralSubgroup>,
    /// witnesses[i] conjugates subgroups[i] onto the representative.
    pub witnesses: Vec<Perm>,
}

/// All transitive dihedral subgroups of order 2p in S_p, each with a
/// verified conjugating witness onto the canonical representative.
///
/// Every such subgroup contains a unique cyclic subgroup of order p, and
/// every order-p cyclic subgroup extends to exactly one D_p (the p
/// solutions t of t c t^{-1} = c^{-1} are its reflections), so the
/// enumeration walks the p-cycles.
pub fn enumerate_dihedral_subgroups(p: usize) -> Result<DihedralEnumeration> {
    if !is_odd_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    if p > 11 {
        return Err(Error::DegreeTooLarge { got: p, max: 11 });
    }
    let representative = canonical_dihedral(p)?;
    let mut seen = std::collections::HashSet::new();
    let mut subgroups = Vec::new();
    let mut witnesses = Vec::new();

    // p-cycles written as (1, x_1, .., x_{p-1}); one cyclic subgroup per
    // canonical (lexicographically minimal) generator image vector.
    let mut rest: Vec<usize> = (2..=p).collect();
    permute(&mut rest, 0, &mut |tail| {
        let mut cycle = Vec::with_capacity(p);
        cycle.push(1);
        cycle.extend_from_slice(tail);
        let c = perm_from_cycle(&cycle, p);
        let key = cyclic_subgroup_key(&c);
        if !seen.insert(key) {
            return;
        }
        // The reflection t(x_i) = x_{-i} inverts c; <c, t> is the D_p.
        let mut t_images: Vec<usize> = (1..=p).collect();
        for i in 0..p {
            t_images[cycle[i] - 1] = cycle[(p - i) % p];
        }
        let t = Perm::from_images(t_images).unwrap();
        let group = PermGroup::generate(&[c.clone(), t]).unwrap();
        let d = DihedralSubgroup::from_rotation(c, group).unwrap();
        let w = conjugating_witness_dihedral(&d, &representative)
            .expect("all dihedral subgroups of S_p are conjugate");
        assert_eq!(
            d.group().conjugate_by(&w).unwrap(),
            *representative.group(),
            "witness must conjugate exactly"
        );
        subgroups.push(d);
        witnesses.push(w);
    });
    Ok(DihedralEnumeration {
        representative,
        subgroups,
        witnesses,
    })
}

fn perm_from_cycle(cycle: &[usize], degree: usize) -> Perm {
    let mut images: Vec<usize> = (1..=degree).collect();
    for i in 0..cycle.len() {
        images[cycle[i] - 1] = cycle[(i + 1) % cycle.len()];
    }
    Perm::from_images(images).unwrap()
}

/// Canonical key of <c>: minimum of the image vectors of the p-1 generators.
fn cyclic_subgroup_key(c: &Perm) -> Vec<usize> {
    let mut best = c.images();
    let mut pw = c.clone();
    for _ in 2..c.degree() {
        pw = pw.compose(c).unwrap();
        let imgs = pw.images();
        if imgs < best {
            best = imgs;
        }
    }
    best
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Witness g with g D g^{-1} = E via rotation-cycle matching: a solution
/// of g c g^{-1} = r^k is fixed by the image of one point, giving p(p-1)
/// candidates; each surviving candidate is checked on the whole group.
/// Validated against brute force over S_7 in the test suite.
pub fn conjugating_witness_dihedral(d: &DihedralSubgroup, e: &DihedralSubgroup) -> Option<Perm> {
    let p = d.prime();
    if e.prime() != p {
        return None;
    }
    let c = d.rotation();
    let c_cycle = &c.cycles()[0];
    debug_assert_eq!(c_cycle.len(), p);
    let mut target = e.rotation().clone();
    for _ in 1..p {
        // g c g^{-1} = target  <=>  g(c(i)) = target(g(i)) for all i.
        for start in 1..=p {
            let mut images = vec![0usize; p];
            let mut y = start;
            for &x in c_cycle {
                images[x - 1] = y;
                y = target.apply(y);
            }
            let g = Perm::from_images(images).ok()?;
            let ok = d
                .group()
                .elements()
                .iter()
                .all(|x| e.group().contains(&x.conjugate_by(&g).unwrap()));
            if ok {
                return Some(g);
            }
        }
        target = target.compose(e.rotation()).unwrap();
    }
    None
}
