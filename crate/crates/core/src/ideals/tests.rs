use super::*;
use crate::algebra::{generator, power_algebra, subalgebra_closure, Element, IndexSet, IndexedAlgebra, PowerAlgebra};
use crate::derived::{perm_index, CenterParams, Permutation};
use crate::error::Error;
use alloc::vec;
use alloc::vec::Vec;

fn el(a: &PowerAlgebra, v: &[u8]) -> usize {
    a.index_of(&Element::new(a.dim(), v.to_vec()).unwrap()).unwrap()
}

fn cp() -> CenterParams {
    CenterParams::default()
}

/// Every set partition of `0..size`, as restricted growth strings.
fn partitions(size: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, size: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == size {
            out.push(prefix.clone());
            return;
        }
        let next = prefix.iter().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            prefix.push(b);
            go(prefix, size, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), size, &mut out);
    out
}

/// Compatibility checked on whole argument tuples.
fn brute_compatible<A: IndexedAlgebra>(alg: &A, labels: &[usize]) -> bool {
    let n = alg.dim().get();
    let s = alg.size();
    let mut args = vec![0usize; n + 1];
    let mut seen: Vec<(Vec<usize>, usize)> = Vec::new();
    loop {
        let key: Vec<usize> = args.iter().map(|&a| labels[a]).collect();
        let out = labels[alg.q(args[0], &args[1..])];
        match seen.iter().find(|(k, _)| *k == key) {
            Some((_, o)) if *o != out => return false,
            Some(_) => {}
            None => seen.push((key, out)),
        }
        if !crate::check::advance(&mut args, s) {
            return true;
        }
    }
}

fn brute_congruences<A: IndexedAlgebra>(alg: &A) -> Vec<Congruence> {
    let mut out: Vec<Congruence> = partitions(alg.size())
        .into_iter()
        .filter(|p| brute_compatible(alg, p))
        .map(|p| Congruence::from_labels(&p))
        .collect();
    out.sort();
    out
}

fn sorted(mut v: Vec<Congruence>) -> Vec<Congruence> {
    v.sort();
    v
}

fn brute_homs<A: IndexedAlgebra>(alg: &A) -> Vec<Vec<u8>> {
    let n = alg.dim().get();
    let mut h = vec![0usize; alg.size()];
    let mut out = Vec::new();
    loop {
        let map: Vec<u8> = h.iter().map(|&k| k as u8 + 1).collect();
        if is_homomorphism_onto(alg, &map) {
            out.push(map);
        }
        if !crate::check::advance(&mut h, n) {
            return out;
        }
    }
}

#[test]
fn bell_numbers() {
    assert_eq!(partitions(4).len(), 15);
    assert_eq!(partitions(6).len(), 203);
}

#[test]
fn congruence_lattice_operations() {
    let a = Congruence::from_labels(&[5, 5, 7, 7]);
    let b = Congruence::from_labels(&[0, 1, 1, 2]);
    assert_eq!(a.labels(), &[0, 0, 1, 1]);
    assert!(a.join(&b).is_total());
    assert!(a.meet(&b).is_identity());
    assert!(a.meet(&b).le(&a) && a.le(&a.join(&b)));
    assert!(!a.le(&b));
    assert_eq!(a.classes(), vec![vec![0, 1], vec![2, 3]]);
}

#[test]
fn from_relation_checks_equivalence() {
    assert_eq!(Congruence::from_relation(3, |a, b| a <= b), Err(Error::NotAnEquivalence));
    assert_eq!(Congruence::from_relation(3, |a, b| a != 1 || b != 1), Err(Error::NotAnEquivalence));
    let c = Congruence::from_relation(4, |a, b| a % 2 == b % 2).unwrap();
    assert_eq!(c.labels(), &[0, 1, 0, 1]);
}

#[test]
fn principal_congruence_is_projection_kernel() {
    let a = power_algebra(3, 2).unwrap();
    let c = congruence_generated(&a, &[(el(&a, &[1, 1]), el(&a, &[1, 2]))]).unwrap();
    assert_eq!(c.num_blocks(), 3);
    for x in 0..a.size() {
        for y in 0..a.size() {
            assert_eq!(c.related(x, y), a.element(x).get(0) == a.element(y).get(0));
        }
    }
    assert!(c.is_compatible(&a));
    assert!(brute_compatible(&a, c.labels()));
    assert!(congruence_generated(&a, &[(3, 3)]).unwrap().is_identity());
    assert!(congruence_generated(&a, &[(0, 9)]).is_err());
}

#[test]
fn generator_is_simple() {
    let g = generator(3).unwrap();
    assert!(congruence_generated(&g, &[(0, 1)]).unwrap().is_total());
    let all = all_congruences(&g, 64).unwrap();
    assert_eq!(all, vec![Congruence::identity(3), Congruence::total(3)]);
}

#[test]
fn congruence_counts_match_brute_force() {
    for (n, m, count) in [(3, 2, 4), (2, 3, 8), (2, 2, 4)] {
        let a = power_algebra(n, m).unwrap();
        let all = all_congruences(&a, 64).unwrap();
        assert_eq!(all.len(), count, "{n}^{m}");
        assert_eq!(sorted(all.clone()), brute_congruences(&a));
        assert!(all.iter().all(|c| c.is_compatible(&a)));
        assert!(all[0].is_identity() && all.last().unwrap().is_total());
    }
}

#[test]
fn enumeration_bound() {
    let a = power_algebra(3, 2).unwrap();
    assert_eq!(all_congruences(&a, 8), Err(Error::CarrierTooLarge { size: 9, bound: 8 }));
}

#[test]
fn incompatible_partition_detected() {
    let a = power_algebra(3, 2).unwrap();
    let mut labels: Vec<usize> = (0..9).collect();
    labels[el(&a, &[1, 2])] = labels[el(&a, &[2, 1])];
    let c = Congruence::from_labels(&labels);
    assert!(!c.is_compatible(&a));
    assert!(!brute_compatible(&a, c.labels()));
}

#[test]
fn multideal_of_identity_is_minimum() {
    let a = power_algebra(3, 2).unwrap();
    let m = multideal_of(&a, &Congruence::identity(9)).unwrap();
    assert_eq!(m, Multideal::minimum(&a));
    assert_eq!(multideal_of(&a, &Congruence::total(9)).unwrap(), Multideal::Degenerate);
}

#[test]
fn multideal_of_projection_kernel() {
    let a = power_algebra(3, 2).unwrap();
    let c = congruence_generated(&a, &[(el(&a, &[1, 1]), el(&a, &[1, 2]))]).unwrap();
    let m = multideal_of(&a, &c).unwrap();
    for k in 1..=3u8 {
        let want: Vec<usize> = (0..9).filter(|&x| a.element(x).get(0) == k).collect();
        assert_eq!(m.component(k).unwrap(), &want[..]);
    }
    assert!(m.is_ultra(9));
}

#[test]
fn theta_of_minimum_is_identity() {
    let a = power_algebra(3, 2).unwrap();
    assert!(theta_of(&a, &Multideal::minimum(&a), cp()).unwrap().is_identity());
    assert_eq!(theta_of(&a, &Multideal::Degenerate, cp()), Err(Error::Degenerate));
}

fn all_subalgebras_of_square() -> Vec<PowerAlgebra> {
    let a = power_algebra(3, 2).unwrap();
    let elems = a.elements();
    let mut out: Vec<PowerAlgebra> = Vec::new();
    for mask in 0u32..(1 << elems.len()) {
        let gens: Vec<Element> = (0..elems.len()).filter(|b| mask >> b & 1 == 1).map(|b| elems[b].clone()).collect();
        let s = subalgebra_closure(&a, &gens).unwrap();
        if !out.iter().any(|t| t.elements() == s.elements()) {
            out.push(s);
        }
    }
    out
}

#[test]
fn bijection_round_trips() {
    let mut algebras = vec![power_algebra(3, 2).unwrap(), power_algebra(2, 3).unwrap()];
    algebras.extend(all_subalgebras_of_square());
    for a in &algebras {
        for params in [cp(), CenterParams::new(a.dim(), 2, 1).unwrap()] {
            for c in all_congruences(a, 64).unwrap() {
                let m = multideal_of(a, &c).unwrap();
                if m.is_degenerate() {
                    assert!(c.is_total());
                    continue;
                }
                assert_eq!(theta_of(a, &m, params).unwrap(), c);
                assert_eq!(multideal_of(a, &theta_of(a, &m, params).unwrap()).unwrap(), m);
            }
        }
    }
}

#[test]
fn validation_examples() {
    let a = power_algebra(3, 2).unwrap();
    let e = |k: u8| el(&a, &[k, k]);
    let min = vec![vec![e(1)], vec![e(2)], vec![e(3)]];
    assert_eq!(validate_multideal(&a, &min).unwrap(), Validation::Proper(Multideal::minimum(&a)));
    let degen = vec![vec![e(1), e(2)], vec![e(2)], vec![e(3)]];
    assert_eq!(validate_multideal(&a, &degen).unwrap(), Validation::Degenerate);
    let bad = vec![vec![e(1), el(&a, &[2, 1])], vec![e(2)], vec![e(3)]];
    let Validation::Invalid { clause, witness } = validate_multideal(&a, &bad).unwrap() else {
        panic!("expected an invalid tuple")
    };
    assert_eq!(clause, Clause::M2);
    assert_eq!(witness.len(), 4);
    let out = a.q(witness[0], &witness[1..]);
    assert!(out != e(1) && out != el(&a, &[2, 1]));
}

#[test]
fn validation_reports_other_clauses() {
    let a = power_algebra(3, 2).unwrap();
    let e = |k: u8| el(&a, &[k, k]);
    let v = validate_multideal(&a, &[vec![], vec![e(2)], vec![e(3)]]).unwrap();
    assert_eq!(v, Validation::Invalid { clause: Clause::M1, witness: vec![e(1)] });
    let x = el(&a, &[1, 2]);
    let v = validate_multideal(&a, &[vec![e(1), x], vec![e(2), x], vec![e(3)]]).unwrap();
    assert_eq!(v, Validation::Invalid { clause: Clause::Disjoint, witness: vec![x] });
    assert!(matches!(validate_multideal(&a, &[vec![e(1)]]), Err(Error::Arity { .. })));
}

#[test]
fn validation_agrees_with_enumeration() {
    let a = power_algebra(2, 3).unwrap();
    let mds = all_multideals(&a, 64).unwrap();
    assert_eq!(mds.len(), 7);
    for m in &mds {
        let comps = m.components().unwrap().to_vec();
        assert_eq!(validate_multideal(&a, &comps).unwrap(), Validation::Proper(m.clone()));
    }
}

#[test]
fn closure_examples() {
    let a = power_algebra(3, 2).unwrap();
    let empty = vec![vec![], vec![], vec![]];
    assert_eq!(ideal_closure(&a, &empty).unwrap(), Multideal::minimum(&a));
    let x = el(&a, &[1, 2]);
    let m = ideal_closure(&a, &[vec![x], vec![], vec![]]).unwrap();
    let c = congruence_generated(&a, &[(x, el(&a, &[1, 1]))]).unwrap();
    assert_eq!(m, multideal_of(&a, &c).unwrap());
    assert!(m.components().unwrap().iter().all(|c| c.len() == 3));
    assert_eq!(ideal_closure(&a, &[vec![el(&a, &[2, 2])], vec![], vec![]]).unwrap(), Multideal::Degenerate);
}

#[test]
fn closure_matches_generated_congruence_everywhere() {
    let a = power_algebra(2, 3).unwrap();
    for x in 0..a.size() {
        for k in 1..=2u8 {
            let mut seed = vec![vec![], vec![]];
            seed[k as usize - 1].push(x);
            let c = congruence_generated(&a, &[(x, IndexedAlgebra::constant(&a, k))]).unwrap();
            assert_eq!(ideal_closure(&a, &seed).unwrap(), multideal_of(&a, &c).unwrap());
        }
    }
}

#[test]
fn extension_of_minimum_by_first_point_atom() {
    let a = power_algebra(3, 2).unwrap();
    let atom = el(&a, &[2, 1]);
    let u = extend_to_ultra(&a, &Multideal::minimum(&a), cp(), atom).unwrap();
    for k in 1..=3u8 {
        let want: Vec<usize> = (0..9).filter(|&x| a.element(x).get(0) == k).collect();
        assert_eq!(u.components()[k as usize - 1], want);
    }
    assert!(matches!(
        extend_to_ultra(&a, &Multideal::minimum(&a), cp(), el(&a, &[2, 2])),
        Err(Error::InvalidAtom(_))
    ));
}

#[test]
fn extension_of_ultra_is_identity() {
    let a = power_algebra(3, 2).unwrap();
    for u in all_ultramultideals(&a) {
        let m = u.to_multideal();
        for atom in admissible_atoms(&a, &m, cp()).unwrap() {
            assert_eq!(extend_to_ultra(&a, &m, cp(), atom).unwrap(), u);
        }
    }
}

#[test]
fn every_multideal_extends() {
    let a = power_algebra(3, 2).unwrap();
    for m in all_multideals(&a, 64).unwrap() {
        let atoms = admissible_atoms(&a, &m, cp()).unwrap();
        assert!(!atoms.is_empty());
        for atom in atoms {
            let u = extend_to_ultra(&a, &m, cp(), atom).unwrap();
            for k in 1..=3u8 {
                let g = &u.components()[k as usize - 1];
                assert!(m.component(k).unwrap().iter().all(|x| g.contains(x)));
            }
        }
    }
}

#[test]
fn ultra_counts_and_homomorphisms() {
    let diag = subalgebra_closure(&power_algebra(3, 2).unwrap(), &[]).unwrap();
    let cases: Vec<(PowerAlgebra, usize)> =
        vec![(power_algebra(3, 2).unwrap(), 2), (power_algebra(2, 3).unwrap(), 3), (diag, 1)];
    for (a, count) in cases {
        let ultras = all_ultramultideals(&a);
        assert_eq!(ultras.len(), count);
        let mut homs: Vec<Vec<u8>> = ultras.iter().map(Ultramultideal::homomorphism).collect();
        for (u, h) in ultras.iter().zip(&homs) {
            assert!(is_homomorphism_onto(&a, h));
            assert_eq!(&Ultramultideal::from_homomorphism(&a, h).unwrap(), u);
        }
        homs.sort();
        assert_eq!(homs, brute_homs(&a));
    }
}

#[test]
fn non_homomorphisms_are_rejected() {
    let a = power_algebra(2, 2).unwrap();
    assert!(!is_homomorphism_onto(&a, &[1, 1, 1, 1]));
    assert!(is_homomorphism_onto(&a, &[1, 2, 1, 2]));
    assert!(!is_homomorphism_onto(&a, &[1, 2, 2, 2]));
    assert_eq!(Ultramultideal::from_homomorphism(&a, &[1, 1, 2]), Err(Error::NotHomomorphism));
    assert_eq!(Ultramultideal::new(&Multideal::minimum(&a), 4), Err(Error::NotUltra));
}

#[test]
fn primality() {
    let a = power_algebra(3, 2).unwrap();
    assert!(!is_prime(&a, &Multideal::minimum(&a), cp()).unwrap());
    for m in all_multideals(&a, 64).unwrap() {
        assert_eq!(is_prime(&a, &m, cp()).unwrap(), m.is_ultra(a.size()));
    }
    assert_eq!(is_prime(&a, &Multideal::Degenerate, cp()), Err(Error::Degenerate));
}

#[test]
fn stone_embeddings() {
    let a = power_algebra(3, 2).unwrap();
    let s = stone_embed(&a).unwrap();
    assert_eq!(s.target().points(), 2);
    assert!(s.is_injective() && s.is_surjective() && s.preserves_q(&a));

    let b = power_algebra(2, 3).unwrap();
    let s = stone_embed(&b).unwrap();
    assert!(s.is_surjective() && s.preserves_q(&b));

    for sub in all_subalgebras_of_square() {
        let s = stone_embed(&sub).unwrap();
        assert!(s.is_injective() && s.preserves_q(&sub), "{:?}", sub.elements());
    }
    let diag = subalgebra_closure(&a, &[]).unwrap();
    let s = stone_embed(&diag).unwrap();
    assert_eq!(s.target().points(), 1);
    assert!(s.is_surjective());
}

#[test]
fn ideal_filter_view() {
    let a = power_algebra(2, 2).unwrap();
    let v = boolean_ideal_filter_view(&a, &Multideal::minimum(&a)).unwrap();
    assert_eq!(v.ideal, vec![el(&a, &[2, 2])]);
    assert_eq!(v.filter, vec![el(&a, &[1, 1])]);

    let b = power_algebra(2, 3).unwrap();
    for m in all_multideals(&b, 64).unwrap() {
        let v = boolean_ideal_filter_view(&b, &m).unwrap();
        // principal ideal below the join of its members
        let top = v.ideal.iter().fold(b.constant(2), |acc, &x| {
            let xs = b.element(x);
            Element::new(b.dim(), acc.values().iter().zip(xs.values()).map(|(&p, &q)| p.min(q)).collect()).unwrap()
        });
        let want: Vec<usize> = (0..8)
            .filter(|&x| b.element(x).values().iter().zip(top.values()).all(|(&v, &t)| v >= t))
            .collect();
        assert_eq!(v.ideal, want);
    }
    let c = power_algebra(3, 1).unwrap();
    assert_eq!(
        boolean_ideal_filter_view(&c, &Multideal::minimum(&c)),
        Err(Error::RequiresDimension { expected: 2, found: 3 })
    );
}

#[test]
fn components_are_permuted_copies() {
    for a in [power_algebra(3, 2).unwrap(), power_algebra(2, 3).unwrap()] {
        let n = a.dim().get() as u8;
        for m in all_multideals(&a, 64).unwrap() {
            for r in 1..=n {
                for k in 1..=n {
                    let sigma = Permutation::transposition(a.dim(), r, k).unwrap();
                    let mut img: Vec<usize> = m.component(r).unwrap().iter().map(|&x| perm_index(&a, x, &sigma)).collect();
                    img.sort();
                    assert_eq!(img, m.component(k).unwrap());
                }
            }
        }
    }
}

#[test]
fn components_are_skew_ideals_and_carrier_is_subalgebra() {
    let a = power_algebra(3, 2).unwrap();
    for m in all_multideals(&a, 64).unwrap() {
        let carrier = m.carrier().unwrap();
        let sub = PowerAlgebra::subpower(a.dim(), 2, carrier.iter().map(|&x| a.element(x)));
        assert!(sub.is_ok());
        for i in 1..=3u8 {
            let d = IndexSet::singleton(i);
            let comp = m.component(i).unwrap();
            for &x in comp {
                for &y in comp {
                    assert!(m.contains(i, a.t(d, x, x, y)));
                }
                for y in 0..a.size() {
                    assert!(m.contains(i, a.t(d, y, x, IndexedAlgebra::constant(&a, i))));
                }
            }
        }
    }
}

#[test]
fn membership_via_upper_coordinates() {
    // x ∈ I_r iff x_r ∈ B_12 ∩ I_2
    let a = power_algebra(3, 2).unwrap();
    let b = crate::skew::boolean_center(&a, cp());
    for m in all_multideals(&a, 64).unwrap() {
        for x in 0..a.size() {
            let coords = crate::derived::coordinates_index(&a, x, cp());
            for r in 1..=3u8 {
                let xr = coords[r as usize - 1];
                assert!(b.contains(xr));
                assert_eq!(m.contains(r, x), m.contains(2, xr));
            }
        }
    }
}
