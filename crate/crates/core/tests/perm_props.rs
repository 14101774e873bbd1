use covers_core::perm::Perm;
use covers_core::group::PermGroup;
use proptest::prelude::*;

fn all_perms(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Vec<usize>, rest: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            rec(prefix, rest, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut images = Vec::new();
    rec(&mut Vec::new(), &mut (1..=n).collect(), &mut images);
    images
        .into_iter()
        .map(|im| Perm::from_images(im).unwrap())
        .collect()
}

#[test]
fn print_parse_roundtrip_exhaustive_small_degrees() {
    for n in 1..=5 {
        for p in all_perms(n) {
            let printed = p.to_string();
            assert_eq!(covers_core::perm::parse_cycles(&printed, n).unwrap(), p);
        }
    }
}

fn perm7() -> impl Strategy<Value = Perm> {
    Just((1..=7usize).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|im| Perm::from_images(im).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn print_parse_roundtrip_degree7(p in perm7()) {
        let printed = p.to_string();
        prop_assert_eq!(covers_core::perm::parse_cycles(&printed, 7).unwrap(), p);
    }

    #[test]
    fn sign_is_a_homomorphism(p in perm7(), q in perm7()) {
        prop_assert_eq!(p.compose(&q).unwrap().sign(), p.sign() * q.sign());
    }

    #[test]
    fn compose_associative_identity_inverse(p in perm7(), q in perm7(), r in perm7()) {
        let id = Perm::identity(7);
        prop_assert_eq!(
            p.compose(&q).unwrap().compose(&r).unwrap(),
            p.compose(&q.compose(&r).unwrap()).unwrap()
        );
        prop_assert_eq!(p.compose(&id).unwrap(), p.clone());
        prop_assert_eq!(id.compose(&p).unwrap(), p.clone());
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn generated_order_divides_factorial(p in perm7(), q in perm7()) {
        let g = PermGroup::generate(&[p, q]).unwrap();
        prop_assert_eq!(5040 % g.order(), 0);
    }
}
