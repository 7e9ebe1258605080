use fusionkit_core::FiniteAbelianGroup;
use proptest::prelude::*;

fn group() -> impl Strategy<Value = FiniteAbelianGroup> {
    prop::collection::vec(1u64..9, 0..4)
        .prop_map(|o| FiniteAbelianGroup::from_cyclic_orders(&o))
        .prop_filter("order at most 128", |g| g.order() <= 128)
}

proptest! {
    #[test]
    fn invariant_factors_divide(g in group()) {
        let f = g.factors();
        prop_assert!(f.windows(2).all(|w| w[1] % w[0] == 0));
        prop_assert!(f.iter().all(|&d| d > 1));
        prop_assert_eq!(f.iter().product::<u64>() as usize, g.order());
    }

    #[test]
    fn arithmetic_laws(g in group(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>(), c in any::<prop::sample::Index>()) {
        let (a, b, c) = (a.index(g.order()), b.index(g.order()), c.index(g.order()));
        prop_assert_eq!(g.add(g.add(a, b), c), g.add(a, g.add(b, c)));
        prop_assert_eq!(g.add(a, b), g.add(b, a));
        prop_assert_eq!(g.add(a, g.neg(a)), g.identity());
        prop_assert_eq!(g.scale(g.element_order(a) as i64, a), g.identity());
        prop_assert_eq!(g.exponent() % g.element_order(a), 0);
    }

    #[test]
    fn cayley_tables_decompose_back(g in group()) {
        let table = g.cayley();
        prop_assert!(table.is_abelian() && table.is_associative());
        let d = table.abelian_decomposition().unwrap();
        prop_assert_eq!(d.group(), &g);
        for x in 0..g.order() {
            prop_assert_eq!(d.from_group(d.to_group(x)), x);
        }
        for x in 0..g.order() {
            for y in 0..g.order() {
                prop_assert_eq!(d.to_group(table.op(x, y)), g.add(d.to_group(x), d.to_group(y)));
            }
        }
    }

    #[test]
    fn index_two_complements(g in group()) {
        let d = g.cayley().abelian_decomposition().unwrap();
        for u in g.elements().filter(|&u| g.element_order(u) == 2) {
            for k in d.index_two_subgroups_avoiding(u) {
                prop_assert_eq!(k.len() * 2, g.order());
                prop_assert!(!k.contains(&u));
                for &x in &k {
                    for &y in &k {
                        prop_assert!(k.contains(&g.add(x, y)));
                    }
                }
            }
        }
    }
}
