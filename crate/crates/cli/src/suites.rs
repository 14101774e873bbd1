//! Verification suites: each returns the list of named checks consumed by
//! the report layer.

use covers_core::cubic::{
    norm_via_embeddings, solve_det_equation, solve_det_equation_integers, Cubic,
};
use covers_core::dihedral::{candidate_table, enumerate_dihedral_subgroups};
use covers_core::group::PermGroup;
use covers_core::hurwitz::{
    burnside_count, classify_coverings, fiber_product, frobenius_tuple_count,
    hyperelliptic_tuple, tower_report, BranchData, Classification, CoveringContext,
};
use covers_core::matrix::{classify_polarization_matrices, conjugate_idempotent, sample_idempotents, Mat2};
use covers_core::CubicInt;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::report::{check, Check};

pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// The involution table from the degree-7 classification: candidates b_i
/// for a partner of a = (12)(34)(56), the products s_i = a b_i, and
/// whether <a, b_i> is dihedral of order 14.
const TABLE: [(&str, &str, bool); 12] = [
    ("(23)(45)(67)", "(1357642)", true),
    ("(23)(46)(57)", "(1367542)", true),
    ("(23)(47)(56)", "(13742)", false),
    ("(24)(35)(67)", "(1457632)", true),
    ("(24)(36)(57)", "(1467532)", true),
    ("(24)(37)(56)", "(14732)", false),
    ("(25)(34)(67)", "(15762)", false),
    ("(25)(36)(47)", "(1537462)", true),
    ("(25)(37)(46)", "(1547362)", true),
    ("(26)(34)(57)", "(16752)", false),
    ("(26)(35)(47)", "(1637452)", true),
    ("(26)(37)(45)", "(1647352)", true),
];

pub fn dihedral_table() -> Vec<Check> {
    let rows = candidate_table();
    let mut checks = vec![check("candidate involutions for a = (12)(34)(56)", 12, rows.len())];
    for (row, (b, s, _)) in rows.iter().zip(TABLE.iter()) {
        checks.push(check(&format!("b_{}", row.index), b, &row.b));
        checks.push(check(&format!("s_{} = a b_{}", row.index, row.index), s, &row.s));
    }
    let expected_set: Vec<String> = TABLE
        .iter()
        .enumerate()
        .filter(|(_, t)| t.2)
        .map(|(i, _)| (i + 1).to_string())
        .collect();
    let computed_set: Vec<String> = rows
        .iter()
        .filter(|r| r.dihedral)
        .map(|r| r.index.to_string())
        .collect();
    checks.push(check(
        "rows i with <a, b_i> dihedral of order 14",
        expected_set.join(","),
        computed_set.join(","),
    ));
    checks
}

pub fn conjugacy() -> Vec<Check> {
    let mut checks = Vec::new();
    match enumerate_dihedral_subgroups(7) {
        Ok(e) => {
            checks.push(check(
                "dihedral subgroups of order 14 in S_7",
                120,
                e.subgroups.len(),
            ));
            let verified = e
                .subgroups
                .par_iter()
                .zip(e.witnesses.par_iter())
                .filter(|(d, w)| {
                    d.group()
                        .conjugate_by(w)
                        .map(|g| g.elements() == e.representative.group().elements())
                        .unwrap_or(false)
                })
                .count();
            checks.push(check(
                "verified conjugating witnesses onto <a, b_1>",
                e.subgroups.len(),
                verified,
            ));
            let ambient = PermGroup::symmetric(7);
            match e.representative.group().normalizer(&ambient) {
                Ok(n) => {
                    checks.push(check("normalizer order in S_7", 42, n.order()));
                    checks.push(check(
                        "normalizer sharply 2-transitive (affine group of the 7-point line)",
                        true,
                        n.is_sharply_two_transitive(),
                    ));
                }
                Err(err) => checks.push(check("normalizer computed", "ok", format!("error: {err}"))),
            }
        }
        Err(err) => checks.push(check("subgroup enumeration ran", "ok", format!("error: {err}"))),
    }
    checks
}

fn classification_7_6() -> covers_core::Result<(CoveringContext, Classification)> {
    let ctx = CoveringContext::new(7)?;
    let c = classify_coverings(&ctx, BranchData { p: 7, b: 6 }, DEFAULT_BUDGET)?;
    Ok((ctx, c))
}

pub fn count_400() -> Vec<Check> {
    let (ctx, c) = match classification_7_6() {
        Ok(v) => v,
        Err(err) => return vec![check("classification ran", "ok", format!("error: {err}"))],
    };
    let mut checks = vec![
        check(
            "connected 6-tuples of reflections with product 1, degree 7",
            16800,
            c.connected_tuples,
        ),
        check("classes of degree-7 covers with 6 branch points", 400, c.class_count()),
        check(
            "orbit size histogram",
            "{42: 400}",
            format!("{:?}", c.orbit_size_histogram()),
        ),
    ];
    match burnside_count(&ctx, BranchData { p: 7, b: 6 }, DEFAULT_BUDGET) {
        Ok(n) => checks.push(check("orbit count by the orbit-counting lemma", 400, n)),
        Err(err) => checks.push(check("orbit-counting lemma ran", "ok", format!("error: {err}"))),
    }
    match frobenius_tuple_count(7, 6) {
        Ok(n) => {
            checks.push(check("character-formula tuple total", 16807, n));
            checks.push(check(
                "character formula equals brute-force total",
                c.total_tuples,
                n,
            ));
        }
        Err(err) => checks.push(check("character formula ran", "ok", format!("error: {err}"))),
    }
    checks
}

pub fn small_prime_grid() -> Vec<Check> {
    let grid: [(usize, usize, usize); 5] = [(3, 4, 4), (3, 6, 40), (5, 4, 6), (5, 6, 156), (7, 4, 8)];
    let mut checks = Vec::new();
    for (p, b, classes) in grid {
        let run = || -> covers_core::Result<(usize, u128, u128, u128)> {
            let ctx = CoveringContext::new(p)?;
            let c = classify_coverings(&ctx, BranchData { p, b }, DEFAULT_BUDGET)?;
            let burn = burnside_count(&ctx, BranchData { p, b }, DEFAULT_BUDGET)?;
            let frob = frobenius_tuple_count(p, b)?;
            Ok((c.class_count(), burn, frob, c.total_tuples))
        };
        match run() {
            Ok((direct, burn, frob, total)) => {
                checks.push(check(&format!("classes at p={p}, b={b}"), classes, direct));
                checks.push(check(
                    &format!("orbit-counting lemma agrees at p={p}, b={b}"),
                    direct,
                    burn,
                ));
                checks.push(check(
                    &format!("character formula total agrees at p={p}, b={b}"),
                    total,
                    frob,
                ));
            }
            Err(err) => checks.push(check(
                &format!("grid point p={p}, b={b} ran"),
                "ok",
                format!("error: {err}"),
            )),
        }
    }
    checks
}

pub fn genus_tower() -> Vec<Check> {
    let (ctx, c) = match classification_7_6() {
        Ok(v) => v,
        Err(err) => return vec![check("classification ran", "ok", format!("error: {err}"))],
    };
    let total = c.class_count();
    let h = hyperelliptic_tuple(6);
    let counts = c
        .orbits
        .par_iter()
        .map(|o| {
            let mut good_tower = 0usize;
            let mut good_fiber = 0usize;
            if let Ok(t) = tower_report(&ctx, &c, &o.representative) {
                let quotients_ok = t.quotients.iter().all(|q| q.genus == 3 && q.connected);
                if quotients_ok
                    && t.base_curve.genus == 2
                    && t.base_curve.connected
                    && t.galois_closure.genus == 8
                    && t.galois_closure.connected
                {
                    good_tower = 1;
                }
            }
            if let Ok(f) = fiber_product(&ctx, &h, &o.representative) {
                if f.galois && f.etale_over_base_curve && f.cover.connected && f.cover.genus == 8 {
                    good_fiber = 1;
                }
            }
            (good_tower, good_fiber)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    let torsion = (7u128.pow(4) - 1) / 6;
    vec![
        check("class representatives", 400, total),
        check(
            "genus tower (quotients 3, base 2, closure 8) for all classes",
            format!("{total}/{total}"),
            format!("{}/{total}", counts.0),
        ),
        check(
            "fiber product Galois, unramified over the genus-2 curve, genus 8",
            format!("{total}/{total}"),
            format!("{}/{total}", counts.1),
        ),
        check(
            "order-7 subgroups of the 7-torsion of a genus-2 Jacobian: (7^4 - 1)/6",
            400,
            torsion,
        ),
        check(
            "cyclic unramified degree-7 covers per class (d with torsion = d * N)",
            1,
            torsion / total.max(1) as u128,
        ),
    ]
}

pub fn field() -> Vec<Check> {
    let x = CubicInt::from_ints(4, 0, -1); // 4 - eta^2
    let mut checks = vec![
        check("norm(4 - eta^2) by resultant", 7, x.norm()),
        check(
            "norm(4 - eta^2) by product of real embeddings",
            7,
            norm_via_embeddings(&x),
        ),
        check("norm(4 - eta^2) by symmetric functions", 7, x.norm_symmetric()),
    ];
    let sols = solve_det_equation::<BigInt>(1);
    checks.push(check(
        "solutions of norm(4 - phi^2) = 7 with 4 - phi^2 totally positive, height 1",
        "nonempty",
        if sols.is_empty() { "empty" } else { "nonempty" },
    ));
    checks.push(check(
        "eta = (0,1,0) among the solutions",
        true,
        sols.contains(&CubicInt::eta()),
    ));
    let recomputed = sols
        .iter()
        .filter(|phi| {
            let v = Cubic::from_int(4).sub(&phi.square());
            norm_via_embeddings(&v) == BigInt::from(7)
        })
        .count();
    checks.push(check(
        "every solution re-verified through the embeddings norm",
        sols.len(),
        recomputed,
    ));
    let int_sols = solve_det_equation_integers::<BigInt>(4);
    checks.push(check(
        "no rational-integer solution of norm(4 - n^2) = 7 up to height 4",
        0,
        int_sols.len(),
    ));
    let pols = classify_polarization_matrices::<i64>(2);
    let prym = Mat2::<i64>::new(
        Cubic::from_int(2),
        Cubic::eta(),
        Cubic::eta(),
        Cubic::from_int(2),
    );
    checks.push(check(
        "polarization search (height 2) contains [[2,eta],[eta,2]], flagged",
        true,
        pols.iter().any(|p| p.matrix == prym && p.prym_shape),
    ));
    checks.push(check(
        "no polarization candidate has all entries in Z",
        0,
        pols.iter()
            .filter(|p| {
                p.matrix
                    .entries
                    .iter()
                    .flatten()
                    .all(|e| e.is_rational_integer())
            })
            .count(),
    ));
    checks
}

pub fn idempotents(seed: u64, samples: usize, height: i64) -> Vec<Check> {
    let eps_list = sample_idempotents::<BigInt>(seed, samples, height);
    let mut conjugated = 0usize;
    let mut unit_dets = 0usize;
    for eps in &eps_list {
        if let Ok(c) = conjugate_idempotent(eps) {
            if c.conjugator.mul(eps).mul(&c.conjugator_inverse)
                == Mat2::idempotent_normal_form()
            {
                conjugated += 1;
            }
            if c.conjugator.det().is_unit() && c.conjugator_inverse.det().is_unit() {
                unit_dets += 1;
            }
        }
    }
    vec![
        check("sampled nontrivial idempotents", samples, eps_list.len()),
        check(
            "conjugated to diag(0,1) with exact certificate",
            samples,
            conjugated,
        ),
        check("basis-change determinants are units", samples, unit_dets),
    ]
}

pub fn suite_checks(name: &str, seed: u64, samples: usize, height: i64) -> Option<Vec<Check>> {
    let checks = match name {
        "dihedral-table" => dihedral_table(),
        "conjugacy" => conjugacy(),
        "count-400" => count_400(),
        "small-prime-grid" => small_prime_grid(),
        "genus-tower" => genus_tower(),
        "field" => field(),
        "idempotents" => idempotents(seed, samples, height),
        "all" => {
            let mut all = dihedral_table();
            all.extend(conjugacy());
            all.extend(count_400());
            all.extend(small_prime_grid());
            all.extend(genus_tower());
            all.extend(field());
            all.extend(idempotents(seed, samples, height));
            all
        }
        _ => return None,
    };
    Some(checks)
}
