//! Property tests for the permutation layer and the factorisation
//! machinery.

use proptest::prelude::*;

use skewprod::catalog;
use skewprod::factor::validate_pair;
use skewprod::{PermGroup, Permutation};

fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just(())
        .prop_perturb(move |_, mut rng| {
            let mut images: Vec<u16> = (0..degree as u16).collect();
            for i in (1..degree).rev() {
                let j = (rng.next_u32() as usize) % (i + 1);
                images.swap(i, j);
            }
            Permutation::from_images(images).unwrap()
        })
        .no_shrink()
}

proptest! {
    #[test]
    fn composition_is_associative(p in arb_perm(7), q in arb_perm(7), r in arb_perm(7)) {
        prop_assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
    }

    #[test]
    fn inverse_round_trip(p in arb_perm(9)) {
        prop_assert!(p.compose(&p.inverse()).is_identity());
        prop_assert_eq!(p.inverse().inverse(), p.clone());
    }

    #[test]
    fn display_parse_round_trip(p in arb_perm(11)) {
        let back = Permutation::parse_cycles(11, &p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn conjugation_preserves_cycle_structure(p in arb_perm(8), g in arb_perm(8)) {
        let mut a = p.cycle_lengths();
        let mut b = p.conjugate_by(&g).cycle_lengths();
        a.sort_unstable();
        b.sort_unstable();
        prop_assert_eq!(a, b);
    }

    /// Membership round trip: alternating-group membership over random
    /// permutations is exactly the parity test.
    #[test]
    fn alternating_membership_is_parity(p in arb_perm(6)) {
        let a6 = catalog::alternating(6).unwrap();
        prop_assert_eq!(a6.contains(&p), p.is_even());
    }

    /// Every element the chain yields sifts back in; sampled foreign
    /// permutations of the same degree stay outside unless even.
    #[test]
    fn element_stream_round_trip(p in arb_perm(5)) {
        let a5 = catalog::alternating(5).unwrap();
        let elements = a5.elements(100).unwrap();
        prop_assert!(elements.iter().all(|e| a5.contains(e)));
        prop_assert_eq!(a5.contains(&p), p.is_even());
    }

    /// Unique factorisation over the Sym(4) = Sym(3)·C4 pair: recomposition
    /// is exact and the exponent is unique by full scan.
    #[test]
    fn factorization_unique(index in 0usize..24) {
        let s4 = catalog::symmetric(4).unwrap();
        let s3 = s4.point_stabilizer(3);
        let y = Permutation::parse_cycles(4, "(1,2,3,4)").unwrap();
        let pair = validate_pair(&s4, &s3, &y).unwrap();
        let g = &s4.elements(100).unwrap()[index];
        let (b, j) = pair.factor(g).unwrap();
        prop_assert_eq!(&b.compose(pair.y_power(j)), g);
        let hits = (0..4).filter(|&k| {
            s3.contains(&g.compose(&pair.y_power(k).inverse()))
        }).count();
        prop_assert_eq!(hits, 1);
    }

    /// Orders of uniformly sampled elements divide the group order.
    #[test]
    fn element_orders_divide_group_order(seed in any::<u64>()) {
        use rand::SeedableRng;
        let m11 = catalog::mathieu(11).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = m11.random_element(&mut rng);
        prop_assert_eq!(7920 % g.order(), 0);
        prop_assert!(m11.contains(&g));
    }
}

#[test]
fn m11_yields_exactly_its_order_in_elements() {
    let m11 = catalog::mathieu(11).unwrap();
    let elements = m11.elements(10_000).unwrap();
    assert_eq!(elements.len(), 7920);
    let set: std::collections::HashSet<_> = elements.iter().collect();
    assert_eq!(set.len(), 7920);
}

#[test]
fn psl2_11_pair_recomposes_over_ten_thousand_samples() {
    use rand::SeedableRng;
    let g = catalog::psl2(11).unwrap();
    let b = skewprod::classify::find_alt5_in_psl2_11(&g);
    let y = g.gens()[0].clone();
    let pair = validate_pair(&g, &b, &y).unwrap();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
    for _ in 0..10_000 {
        let x = g.random_element(&mut rng);
        let (part, j) = pair.factor(&x).unwrap();
        assert_eq!(part.compose(pair.y_power(j)), x);
        // exponent unique by full scan (|Y| = 11 <= 64)
        let hits = (0..11)
            .filter(|&k| b.contains(&x.compose(&pair.y_power(k).inverse())))
            .count();
        assert_eq!(hits, 1);
    }
}

#[test]
fn normalizer_in_extension_contains_base() {
    // Exhaustive check in the order-360 twisted extension: the normaliser of
    // the Sym(5) block sits between it and the whole group.
    let c3 = catalog::cyclic_regular(3).unwrap();
    let sigma = Permutation::from_images(vec![0, 2, 1]).unwrap();
    let ext = catalog::monolithic_extension(&c3, &sigma).unwrap();
    let n = ext.group.brute_normalizer(&ext.sym5, 1000).unwrap();
    assert!(n.is_supergroup_of(&ext.sym5));
    assert!(ext.group.is_supergroup_of(&n));
    assert_eq!(n.order(), 120); // B is self-normalising here
}

#[test]
fn centralizer_of_socle_in_p3_sharp_example() {
    // The centraliser of the PSL(2,8) block inside the order-6 complement of
    // the sharpness construction has order exactly 2 = p - 1.
    let left = catalog::psigmal2(8).unwrap();
    let right = catalog::agl1(3).unwrap();
    let g = catalog::direct_product(&left, &right);
    assert_eq!(g.order(), 9072);
    let psl = catalog::psl2(8).unwrap();
    let embed_left = |p: &Permutation| {
        let mut images: Vec<u16> = (0..12).collect();
        for i in 0..9 {
            images[i] = p.apply(i as u16);
        }
        Permutation::from_images(images).unwrap()
    };
    let a_gens: Vec<Permutation> = psl.gens().iter().map(embed_left).collect();
    let frob = embed_left(&catalog::frobenius_on_line(8).unwrap());
    let mult = {
        let m = catalog::agl1_multiplier(3).unwrap();
        let mut images: Vec<u16> = (0..12).collect();
        for i in 0..3 {
            images[9 + i] = 9 + m.apply(i as u16);
        }
        Permutation::from_images(images).unwrap()
    };
    let y = frob.compose(&mult);
    assert_eq!(y.order(), 6);
    let z_count = (0..6)
        .filter(|&k| {
            let p = y.pow(k);
            a_gens.iter().all(|a| p.compose(a) == a.compose(&p))
        })
        .count();
    assert_eq!(z_count, 2);
}
