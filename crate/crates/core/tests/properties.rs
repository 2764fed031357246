use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;
use tssforge_core::braid::{classify, enumerate_homs, EnumOptions};
use tssforge_core::constructions::{make_sharp_group, parse_group_spec, BuildOptions};
use tssforge_core::group::SharpElement;
use tssforge_core::{Elem, GroupHandle, Permutation};

fn perm(degree: usize) -> impl Strategy<Value = Permutation> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).unwrap())
}

fn s5() -> &'static GroupHandle {
    static G: OnceLock<GroupHandle> = OnceLock::new();
    G.get_or_init(|| parse_group_spec("S5", &BuildOptions::default()).unwrap())
}

fn sharp4() -> &'static GroupHandle {
    static G: OnceLock<GroupHandle> = OnceLock::new();
    G.get_or_init(|| make_sharp_group(4, &BuildOptions::default()).unwrap().handle)
}

fn s4_homs() -> &'static (GroupHandle, BTreeSet<Vec<Elem>>) {
    static H: OnceLock<(GroupHandle, BTreeSet<Vec<Elem>>)> = OnceLock::new();
    H.get_or_init(|| {
        let g = parse_group_spec("S4", &BuildOptions::default()).unwrap();
        let set = enumerate_homs(4, &g, &EnumOptions::default())
            .unwrap()
            .homs
            .into_iter()
            .map(|h| h.images)
            .collect();
        (g, set)
    })
}

fn elem(order: usize) -> impl Strategy<Value = Elem> {
    (0..order).prop_map(Elem::from_index)
}

proptest! {
    #[test]
    fn composition_is_associative(p in perm(7), q in perm(7), r in perm(7)) {
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_cancels(p in perm(9)) {
        prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn cycle_notation_round_trips(p in perm(8)) {
        let text = p.to_string();
        prop_assert_eq!(Permutation::parse_cycles(&text, 8).unwrap(), p.clone());
        prop_assert_eq!(Permutation::from_cycles(8, &p.cycles()).unwrap(), p);
    }

    #[test]
    fn printed_elements_parse_back(a in elem(120), b in elem(192)) {
        let g = s5();
        prop_assert_eq!(g.parse_element(&g.format_element(a)).unwrap(), a);
        let h = sharp4();
        prop_assert_eq!(h.parse_element(&h.format_element(b)).unwrap(), b);
    }

    #[test]
    fn sharp_lifts_parse_to_the_same_element(b in elem(192)) {
        let h = sharp4();
        let s = h.sharp_element(b).unwrap();
        let other = SharpElement::new(s.perm().clone(), s.coset_bits() ^ 0b1111);
        prop_assert_eq!(h.find_sharp(&other), Some(b));
    }

    #[test]
    fn conjugation_is_an_automorphism(h in elem(120), a in elem(120), b in elem(120)) {
        let g = s5();
        prop_assert_eq!(g.conj(h, g.mul(a, b)), g.mul(g.conj(h, a), g.conj(h, b)));
        prop_assert_eq!(g.order_of(g.conj(h, a)), g.order_of(a));
    }

    #[test]
    fn sharp_group_axioms(a in elem(192), b in elem(192), c in elem(192)) {
        let g = sharp4();
        prop_assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
        prop_assert_eq!(g.mul(a, g.inverse(a)), g.identity());
    }

    #[test]
    fn conjugate_homomorphisms_are_enumerated(k in 0usize..1000, h in elem(24)) {
        let (g, homs) = s4_homs();
        let t = homs.iter().nth(k % homs.len()).unwrap();
        let conjugated: Vec<Elem> = t.iter().map(|&x| g.conj(h, x)).collect();
        prop_assert!(homs.contains(&conjugated));
    }
}

#[test]
fn image_lemma_on_small_targets() {
    for (n, spec) in [(5, "S4"), (5, "S5"), (6, "S5"), (6, "S6"), (7, "S5")] {
        let g = parse_group_spec(spec, &BuildOptions::default()).unwrap();
        let e = enumerate_homs(n, &g, &EnumOptions::default()).unwrap();
        for h in &e.homs {
            let c = classify(h);
            assert!([1, n / 2].contains(&c.fx.len()), "B{n} -> {spec}");
            assert!([1, n / 2 - 1].contains(&c.fx_prime.len()), "B{n} -> {spec}");
        }
    }
}
