use std::sync::Arc;

use proptest::prelude::*;

use twoabs::ring::RingHom;
use twoabs::{classify, Caps, ClassificationReport, FactoredInteger, Ideal, IdealLattice, Ring, RingDescriptor};

fn modular() -> impl Strategy<Value = RingDescriptor> {
    (2u32..=64).prop_map(RingDescriptor::Modular)
}

fn small_modular() -> impl Strategy<Value = RingDescriptor> {
    (2u32..=8).prop_map(RingDescriptor::Modular)
}

fn poly_quotient() -> impl Strategy<Value = RingDescriptor> {
    (prop_oneof![Just(2u32), Just(3)], 1usize..=3).prop_flat_map(|(p, deg)| {
        prop::collection::vec(0..p, deg).prop_map(move |mut modulus| {
            modulus.push(1);
            RingDescriptor::PolyQuotient { p, modulus }
        })
    })
}

/// Rings of at most 64 elements in every descriptor shape.
fn descriptor() -> impl Strategy<Value = RingDescriptor> {
    prop_oneof![
        modular(),
        (small_modular(), small_modular()).prop_map(|(a, b)| RingDescriptor::product([a, b])),
        poly_quotient(),
        ((2u32..=4).prop_map(RingDescriptor::Modular), 1u32..=2)
            .prop_map(|(b, k)| RingDescriptor::idealization(b, k)),
    ]
}

fn build(d: &RingDescriptor) -> Arc<Ring> {
    Arc::new(Ring::build(d).unwrap())
}

/// A ring with a few element codes in range.
fn ring_and_elements(k: usize) -> impl Strategy<Value = (RingDescriptor, Vec<u32>)> {
    descriptor().prop_flat_map(move |d| {
        let n = d.size().unwrap() as u32;
        (Just(d), prop::collection::vec(0..n, k))
    })
}

proptest! {
    #[test]
    fn ring_axioms((d, xs) in ring_and_elements(3)) {
        let r = build(&d);
        let (a, b, c) = (xs[0], xs[1], xs[2]);
        prop_assert_eq!(r.add(a, b), r.add(b, a));
        prop_assert_eq!(r.mul(a, b), r.mul(b, a));
        prop_assert_eq!(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
        prop_assert_eq!(r.mul(r.mul(a, b), c), r.mul(a, r.mul(b, c)));
        prop_assert_eq!(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
        prop_assert_eq!(r.add(a, r.zero()), a);
        prop_assert_eq!(r.mul(a, r.one()), a);
        prop_assert_eq!(r.add(a, r.neg(a)), r.zero());
        prop_assert_eq!(r.sub(a, b), r.add(a, r.neg(b)));
    }
}

proptest! {
    #[test]
    fn descriptors_round_trip(d in descriptor()) {
        let text = d.to_string();
        prop_assert_eq!(text.parse::<RingDescriptor>().unwrap(), d);
    }
}

proptest! {
    #[test]
    fn crt_is_a_ring_isomorphism(a in 2u32..=20, b in 2u32..=20, x in 0u32..400, y in 0u32..400) {
        prop_assume!(a * b <= 200);
        prop_assume!((2..=a.min(b)).all(|p| a % p != 0 || b % p != 0));
        let h = RingHom::crt_iso(a, b).unwrap();
        let (s, t) = (h.source(), h.target());
        let (x, y) = (x % (a * b), y % (a * b));
        prop_assert_eq!(h.apply(s.add(x, y)), t.add(h.apply(x), h.apply(y)));
        prop_assert_eq!(h.apply(s.mul(x, y)), t.mul(h.apply(x), h.apply(y)));
        prop_assert_eq!(h.apply(s.one()), t.one());
        let mut image: Vec<u32> = s.codes().map(|z| h.apply(z)).collect();
        image.sort_unstable();
        image.dedup();
        prop_assert_eq!(image.len() as u32, a * b);
    }
}

proptest! {
    #[test]
    fn lattice_fast_paths_agree_with_closure(d in descriptor()) {
        let r = build(&d);
        let fast = IdealLattice::enumerate(&r).unwrap();
        let slow = IdealLattice::enumerate_general(&r);
        prop_assert_eq!(fast.ideals(), slow.ideals());
    }
}

proptest! {
    #[test]
    fn ideal_operations((d, xs) in ring_and_elements(4)) {
        let r = build(&d);
        let i = Ideal::generate(&r, &[xs[0] as u64, xs[1] as u64]).unwrap();
        let j = Ideal::generate(&r, &[xs[2] as u64]).unwrap();
        let meet = i.intersect(&j).unwrap();
        let prod = i.product(&j).unwrap();
        let sum = i.sum(&j).unwrap();
        prop_assert!(prod.is_subset(&meet));
        prop_assert!(meet.is_subset(&i) && meet.is_subset(&j));
        prop_assert!(i.is_subset(&sum) && j.is_subset(&sum));
        let rad = i.radical();
        prop_assert!(i.is_subset(&rad));
        prop_assert_eq!(rad.radical(), rad.clone());
        let colon = i.colon(&j).unwrap();
        prop_assert!(i.is_subset(&colon));
        prop_assert!(colon.product(&j).unwrap().is_subset(&i));
        prop_assert_eq!(i.colon_elem(xs[3]), i.colon(&Ideal::principal(&r, xs[3])).unwrap());
        prop_assert_eq!(i.power(2), i.product(&i).unwrap());
        prop_assert!(i.bracket_power(2).is_subset(&i.power(2)));
    }
}

proptest! {
    #[test]
    fn idealization_radical(b in 2u32..=6, k in 1u32..=2, g in 0u32..6) {
        let base = RingDescriptor::Modular(b);
        let d = RingDescriptor::idealization(base.clone(), k);
        let r = build(&d);
        let br = build(&base);
        let q = Ideal::principal(&br, g % b);
        let lifted: Vec<u64> = r
            .codes()
            .filter(|&x| q.contains(r.idealization_parts(x).0))
            .map(u64::from)
            .collect();
        let qm = Ideal::generate(&r, &lifted).unwrap();
        let rad = q.radical();
        let expected: Vec<u32> = r
            .codes()
            .filter(|&x| rad.contains(r.idealization_parts(x).0))
            .collect();
        prop_assert_eq!(qm.radical().elements().to_vec(), expected);
    }
}

proptest! {
    #[test]
    fn bracket_powers_are_powers_below_the_characteristic(
        p in prop_oneof![Just(3u32), Just(5), Just(7)],
        low in prop::collection::vec(0u32..7, 2),
        g in prop::collection::vec(0u32..49, 2),
    ) {
        let modulus: Vec<u32> = low.iter().map(|c| c % p).chain([1]).collect();
        let r = build(&RingDescriptor::PolyQuotient { p, modulus });
        let gens: Vec<u64> = g.iter().map(|&x| (x % r.size()) as u64).collect();
        let i = Ideal::generate(&r, &gens).unwrap();
        for n in 1..p {
            prop_assert_eq!(i.bracket_power(n), i.power(n));
        }
    }
}

fn report(d: &RingDescriptor, g: u32) -> Option<ClassificationReport> {
    let r = build(d);
    let lattice = IdealLattice::enumerate(&r).unwrap();
    let q = Ideal::principal(&r, g % r.size());
    q.is_proper().then(|| classify(&q, &lattice, &Caps::default()).unwrap())
}

proptest! {
    #[test]
    fn predicate_hierarchy(d in descriptor(), g in 0u32..64) {
        let Some(rep) = report(&d, g) else { return Ok(()) };
        let f = rep.flags;
        let o = rep.orders;
        prop_assert!(!f.maximal || f.prime);
        prop_assert!(!f.prime || (f.primary && f.two_absorbing));
        prop_assert!(!f.primary || f.uniformly_primary);
        prop_assert!(!f.two_absorbing || f.two_absorbing_primary);
        prop_assert!(!f.uniformly_primary || f.special);
        prop_assert!(!f.special || f.uniformly_two_absorbing_primary);
        prop_assert_eq!(f.two_absorbing_primary, f.uniformly_two_absorbing_primary);
        prop_assert_eq!(f.two_absorbing_primary, f.noether_strongly_2ap);
        prop_assert_eq!(f.special, o.two_ord == Some(1));
        prop_assert_eq!(f.uniformly_primary, o.ord.is_some());
        if let (Some(t), Some(e)) = (o.two_ord, o.two_exp) {
            prop_assert!(t <= e);
        }
        if f.two_absorbing_primary {
            prop_assert!(rep.radical_shape.is_prime_or_two());
        }
        for (name, value) in f.entries() {
            prop_assert_eq!(rep.witnesses.contains_key(name), !value, "{}", name);
        }
    }
}

proptest! {
    #[test]
    fn reports_round_trip_byte_identical(d in descriptor(), g in 0u32..64) {
        let Some(rep) = report(&d, g) else { return Ok(()) };
        let json = rep.to_json();
        let back = ClassificationReport::from_json(&json).unwrap();
        prop_assert_eq!(&back, &rep);
        prop_assert_eq!(back.to_json(), json);
    }
}

proptest! {
    #[test]
    fn associates_generate_the_same_ideal(d in descriptor(), g in 0u32..64, u in 0usize..64) {
        let r = build(&d);
        let units = r.units();
        let x = g % r.size();
        let y = r.mul(units[u % units.len()], x);
        prop_assert_eq!(Ideal::principal(&r, x), Ideal::principal(&r, y));
        prop_assert_eq!(r.associate_rep(x), r.associate_rep(y));
    }
}

proptest! {
    #[test]
    fn factored_integers(a in 1u64..5000, b in 1u64..5000) {
        let (fa, fb) = (FactoredInteger::new(a).unwrap(), FactoredInteger::new(b).unwrap());
        prop_assert_eq!(fa.value(), Some(a));
        prop_assert_eq!(fa.to_string().parse::<FactoredInteger>().unwrap(), fa.clone());
        let g = (1..=a.min(b)).rev().find(|d| a % d == 0 && b % d == 0).unwrap();
        prop_assert_eq!(fa.intersect(&fb).value(), Some(a / g * b));
        prop_assert_eq!(fa.product(&fb).value(), Some(a * b));
        let rad = fa.radical().value().unwrap();
        prop_assert!(a % rad == 0);
        prop_assert!(fa.pairs().iter().all(|&(p, _)| rad % p == 0));
        prop_assert_eq!(fa.colon(&fb).value(), Some(a / g));
    }
}
