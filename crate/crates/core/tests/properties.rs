use proptest::prelude::*;

use hurwitz::algebra::{int, rat, Monomial, PSeries, Rational, Truncation};
use hurwitz::oracle::{count_naive_for, walk_counts_for, Permutation};
use hurwitz::partitions::{class_size, partitions_of};
use hurwitz::verify::symmetrize;

fn trunc() -> Truncation {
    Truncation::new(4, 4, 1).unwrap()
}

fn coefficient() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn monomial(min_x: u32) -> impl Strategy<Value = Monomial> {
    (min_x..=4u32, 0..=1u32, prop::collection::vec(1..=4u32, 0..3))
        .prop_map(|(x, z, parts)| Monomial::from_parts(x, z, &parts))
}

fn series_from(min_x: u32) -> impl Strategy<Value = PSeries> {
    prop::collection::vec((monomial(min_x), coefficient()), 0..6)
        .prop_map(|terms| PSeries::from_terms(trunc(), terms).unwrap())
}

fn series() -> impl Strategy<Value = PSeries> {
    series_from(0)
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_is_a_commutative_group(f in series(), g in series(), h in series()) {
        prop_assert_eq!(f.add(&g).unwrap(), g.add(&f).unwrap());
        prop_assert_eq!(f.add(&g).unwrap().add(&h).unwrap(), f.add(&g.add(&h).unwrap()).unwrap());
        prop_assert!(f.sub(&f).unwrap().is_zero());
        prop_assert_eq!(f.add(&PSeries::zero(trunc())).unwrap(), f.clone());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(f in series(), g in series(), h in series()) {
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(
            f.mul(&g).unwrap().mul(&h).unwrap(),
            f.mul(&g.mul(&h).unwrap()).unwrap()
        );
        prop_assert_eq!(f.mul(&PSeries::one(trunc())).unwrap(), f.clone());
    }

    #[test]
    fn multiplication_distributes(f in series(), g in series(), h in series()) {
        let lhs = f.mul(&g.add(&h).unwrap()).unwrap();
        let rhs = f.mul(&g).unwrap().add(&f.mul(&h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn log_inverts_exp(f in series_from(1)) {
        let e = f.exp().unwrap();
        let back = e.sub(&PSeries::one(trunc())).unwrap().log1().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn exp_turns_sums_into_products(f in series_from(1), g in series_from(1)) {
        let lhs = f.add(&g).unwrap().exp().unwrap();
        let rhs = f.exp().unwrap().mul(&g.exp().unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reciprocal_is_an_inverse(f in series_from(1), c in 1i64..=5) {
        let unit = f.add(&PSeries::constant(trunc(), int(c))).unwrap();
        let prod = unit.mul(&unit.recip().unwrap()).unwrap();
        prop_assert_eq!(prod, PSeries::one(trunc()));
    }

    #[test]
    fn derivatives_obey_leibniz(f in series(), g in series(), k in 1u32..=4) {
        let fg = f.mul(&g).unwrap();
        let lhs = fg.pdiff(k).unwrap();
        let rhs = f.pdiff(k).unwrap().mul(&g).unwrap().add(&f.mul(&g.pdiff(k).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = fg.xdiff();
        let rhs = f.xdiff().mul(&g).unwrap().add(&f.mul(&g.xdiff()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mixed_partials_commute(f in series(), i in 1u32..=4, j in 1u32..=4) {
        prop_assert_eq!(f.pdiff(i).unwrap().pdiff(j).unwrap(), f.pdiff(j).unwrap().pdiff(i).unwrap());
        prop_assert_eq!(f.pdiff(i).unwrap().xdiff(), f.xdiff().pdiff(i).unwrap());
    }

    #[test]
    fn json_round_trips(f in series()) {
        let back = PSeries::from_json(trunc(), &f.to_json()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn symmetrization_is_injective(
        degree in 1usize..=3,
        terms in prop::collection::vec((prop::collection::vec(1u32..=5, 3), coefficient()), 1..=4),
    ) {
        let tr = Truncation::new(15, 15, 0).unwrap();
        let f = PSeries::from_terms(tr, terms.into_iter().map(|(parts, c)| {
            let parts = &parts[..degree];
            (Monomial::from_parts(parts.iter().sum(), 0, parts), c)
        })).unwrap();
        let image = symmetrize(&f, degree, None).unwrap();
        prop_assert_eq!(image.is_zero(), f.is_zero());
    }

    #[test]
    fn factorization_counts_are_class_functions(
        (target, sigma) in (2usize..=4).prop_flat_map(|n| (permutation(n), permutation(n))),
        r in 0u32..=6,
    ) {
        let conjugate = target.conjugate_by(&sigma);
        prop_assert_eq!(conjugate.cycle_type(), target.cycle_type());
        prop_assert_eq!(count_naive_for(&conjugate, r).unwrap(), count_naive_for(&target, r).unwrap());
        prop_assert_eq!(walk_counts_for(&conjugate, r).unwrap(), walk_counts_for(&target, r).unwrap());
    }
}

#[test]
fn class_sizes_partition_the_group() {
    for n in 1..=9 {
        let total: num_bigint::BigInt = partitions_of(n).iter().map(class_size).sum();
        assert_eq!(total, hurwitz::algebra::factorial(n));
    }
}
