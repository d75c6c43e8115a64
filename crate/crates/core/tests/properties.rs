use std::collections::BTreeSet;

use proptest::prelude::*;
use rado::ample::{back_and_forth, embed_complex, find_witness, PartialIsomorphism, WitnessQuery};
use rado::arith::ArithmeticRado;
use rado::format::{from_json_str, to_json_string};
use rado::grow::grow;
use rado::randomness::{
    cylinder_measure, induced_measure, lemma21_bruteforce, lemma21_sum, p_of_subcomplex, sample_complex,
    CylinderSet, ProbabilitySystem, RandomComplex,
};
use rado::view::ComplexView;
use rado::{external_simplexes, is_isomorphic_small, Complex, Simplex, Vertex};

fn labels(vs: &[u64]) -> Vec<Vertex> {
    vs.iter().copied().map(Vertex::from).collect()
}

/// Complexes on labels `1..=max_label` given by a few random facets.
fn complex_strategy(max_label: u64, max_facets: usize) -> impl Strategy<Value = Complex> {
    prop::collection::vec(prop::collection::btree_set(1..=max_label, 1..=4), 0..=max_facets).prop_map(|facets| {
        let facets: Vec<Simplex> =
            facets.into_iter().map(|f| Simplex::new(labels(&f.into_iter().collect::<Vec<_>>())).unwrap()).collect();
        Complex::from_facets(facets).unwrap()
    })
}

fn is_downward_closed(x: &Complex) -> bool {
    x.simplexes().iter().all(|s| s.proper_faces().all(|f| x.contains(&f)))
        && x.vertices().iter().all(|v| x.contains(&Simplex::vertex(v.clone())))
}

/// Every nonempty subset of `u`, by bitmask.
fn subsets(u: &[Vertex]) -> Vec<Vec<Vertex>> {
    (1u32..1 << u.len())
        .map(|m| u.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, v)| v.clone()).collect())
        .collect()
}

/// Trace of the link of `v` on `u`, computed from the simplex set directly.
fn trace_by_scan(x: &Complex, v: &Vertex, u: &[Vertex]) -> BTreeSet<Simplex> {
    x.simplexes()
        .iter()
        .filter(|s| s.contains(v) && s.len() > 1)
        .filter_map(|s| s.without(v))
        .filter(|t| t.vertices().iter().all(|w| u.contains(w)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn constructions_stay_closed(x in complex_strategy(7, 5), y in complex_strategy(7, 3), pick in 0usize..8) {
        prop_assert!(is_downward_closed(&x));
        prop_assert!(is_downward_closed(&x.union(&y)));
        let u = labels(&[1, 3, 4, 6]);
        prop_assert!(is_downward_closed(&x.induced(&u)));
        let apex = Vertex::from(99u64);
        prop_assert!(is_downward_closed(&Complex::cone(&apex, &x).unwrap()));
        let simplexes: Vec<Simplex> = x.simplexes().iter().cloned().collect();
        if !simplexes.is_empty() {
            let s = simplexes[pick % simplexes.len()].clone();
            let d = x.delete_star(std::slice::from_ref(&s)).unwrap();
            prop_assert!(is_downward_closed(&d));
            prop_assert!(d.simplexes().iter().all(|t| !s.is_subset_of(t)));
        }
    }

    #[test]
    fn json_round_trip(x in complex_strategy(9, 6)) {
        let text = to_json_string(&x);
        prop_assert_eq!(from_json_str(&text).unwrap(), x);
    }

    #[test]
    fn induced_link_identity(x in complex_strategy(6, 5), mask in 1u32..64) {
        let u: Vec<Vertex> = (1..=6u64).filter(|i| mask >> (i - 1) & 1 == 1).map(Vertex::from).collect();
        let y = x.induced(&u);
        for v in y.vertices() {
            let rest: Vec<Vertex> = u.iter().filter(|w| *w != v).cloned().collect();
            let sv = Simplex::vertex(v.clone());
            prop_assert_eq!(y.link(&sv).unwrap(), x.link(&sv).unwrap().induced(&rest));
        }
    }

    #[test]
    fn external_simplexes_are_external(l in complex_strategy(5, 4), keep in 0u64..1 << 10) {
        let subs: Vec<Complex> = l.subcomplexes().unwrap().collect();
        let a = &subs[(keep as usize) % subs.len()];
        let e = external_simplexes(a, &l).unwrap();
        for s in &e {
            prop_assert!(l.contains(s) && !a.contains(s));
            prop_assert!(s.proper_faces().all(|f| a.contains(&f)));
        }
        let singletons: BTreeSet<Simplex> = l.vertices().iter().cloned().map(Simplex::vertex).collect();
        prop_assert_eq!(external_simplexes(&Complex::empty(), &l).unwrap(), singletons);
    }

    #[test]
    fn link_condition_matches_cone_union(x in complex_strategy(4, 4), v in 1u64..=4, mask in 0u32..16) {
        let v = Vertex::from(v);
        prop_assume!(x.has_vertex(&v));
        let u: Vec<Vertex> = (1..=4u64).filter(|i| mask >> (i - 1) & 1 == 1).map(Vertex::from).filter(|w| *w != v).collect();
        let xu = x.induced(&u);
        let mut uv = u.clone();
        uv.push(v.clone());
        for a in xu.subcomplexes().unwrap() {
            let lhs = x.link(&Simplex::vertex(v.clone())).unwrap().induced(&u) == a;
            let rhs = x.induced(&uv) == xu.union(&Complex::cone(&v, &a).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn witnesses_are_correct(x in complex_strategy(8, 7), mask in 0u32..8, pick in 0usize..64) {
        let u: Vec<Vertex> = (1..=3u64).filter(|i| mask >> (i - 1) & 1 == 1).map(Vertex::from).collect();
        let xu = x.induced(&u);
        let subs: Vec<Complex> = xu.subcomplexes().unwrap().collect();
        let a = subs[pick % subs.len()].clone();
        let q = WitnessQuery::new(u.clone(), a.clone());
        let expected: Option<Vertex> = x
            .vertices()
            .iter()
            .filter(|v| !u.contains(v))
            .find(|v| trace_by_scan(&x, v, &u) == *a.simplexes())
            .cloned();
        prop_assert_eq!(find_witness(&x, &q, None).unwrap(), expected);
    }

    #[test]
    fn embeddings_are_induced(host in complex_strategy(9, 8), l in complex_strategy(4, 3)) {
        if let Some(iso) = embed_complex(&host, &l).unwrap() {
            prop_assert!(iso.validate(&host, &l).is_ok());
            let image = host.induced(&iso.left());
            prop_assert!(is_isomorphic_small(&image, &l).unwrap().is_some());
        }
    }

    #[test]
    fn back_and_forth_stays_valid(s1 in 0u64..1000, s2 in 0u64..1000, steps in 1usize..7) {
        let sys = ProbabilitySystem::half();
        let x = RandomComplex::new(300, sys.clone(), s1);
        let y = RandomComplex::new(300, sys, s2);
        let run = back_and_forth(&x, &y, PartialIsomorphism::empty(), steps).unwrap();
        prop_assert!(run.iso.validate(&x, &y).is_ok());
        prop_assert_eq!(run.iso.len(), run.steps_taken);
        prop_assert!(run.steps_taken == steps || run.failure.is_some());
    }

    #[test]
    fn raising_p_only_adds(p in 0.0f64..1.0, dp in 0.0f64..0.5, seed in any::<u64>()) {
        let hi = (p + dp).min(1.0);
        let low = sample_complex(9, &ProbabilitySystem::constant(p).unwrap(), seed);
        let high = sample_complex(9, &ProbabilitySystem::constant(hi).unwrap(), seed);
        prop_assert!(low.is_subcomplex_of(&high));
    }

    #[test]
    fn subcomplex_probabilities_sum_to_one(l in complex_strategy(4, 3), seed in any::<u64>()) {
        prop_assume!(l.len() <= 12);
        let sys = ProbabilitySystem::seeded_range(seed, 0.1, 0.9).unwrap();
        prop_assert!((lemma21_sum(&l, &sys).unwrap() - 1.0).abs() <= 1e-9);
        let bf = lemma21_bruteforce(&l, &sys).unwrap();
        for (a, w) in &bf.marginals {
            prop_assert!((w - p_of_subcomplex(a, &l, &sys).unwrap()).abs() <= 1e-12);
        }
    }

    #[test]
    fn induced_measure_decomposes_into_cylinders(mask in 1u32..16, pick in 0usize..64, seed in any::<u64>()) {
        let sys = ProbabilitySystem::seeded_range(seed, 0.2, 0.8).unwrap();
        let u: Vec<Vertex> = (1..=4u64).filter(|i| mask >> (i - 1) & 1 == 1).map(Vertex::from).collect();
        let n = u.last().and_then(Vertex::as_u64).unwrap() as usize;
        let full = Complex::full_simplex(&u).unwrap();
        let subs: Vec<Complex> = full.subcomplexes().unwrap().collect();
        let l = subs[pick % subs.len()].clone();
        let delta = Complex::standard_simplex(n as u64).unwrap();
        let mut total = 0.0;
        for y in delta.subcomplexes().unwrap() {
            if y.induced(&u) == l {
                total += cylinder_measure(&CylinderSet::new(y, n).unwrap(), &sys).unwrap();
            }
        }
        prop_assert!((induced_measure(&u, &l, &sys).unwrap() - total).abs() <= 1e-9);
    }

    #[test]
    fn lazy_sample_matches_materialized(seed in any::<u64>(), p in 0.2f64..0.9) {
        let rc = RandomComplex::new(10, ProbabilitySystem::constant(p).unwrap(), seed);
        let x = rc.materialize();
        for s in Complex::standard_simplex(10).unwrap().simplexes() {
            prop_assert_eq!(ComplexView::contains(&rc, s), x.contains(s));
        }
    }
}

#[test]
fn arithmetic_witnesses_hold_on_small_windows() {
    let ar = ArithmeticRado::new();
    let base = labels(&[1, 2, 3, 4]);
    for u in subsets(&base) {
        let window = ar.window(&u).unwrap();
        for a in window.subcomplexes().unwrap() {
            let w = ar.witness(&u, &a).unwrap();
            assert!(w > *u.last().unwrap());
            for s in window.simplexes() {
                assert_eq!(ar.is_simplex(&s.with(&w)).unwrap(), a.contains(s), "U={u:?} A={a} σ={s}");
            }
        }
    }
}

#[test]
fn arithmetic_simplexes_are_downward_closed() {
    let ar = ArithmeticRado::new();
    let pool: Vec<u64> = (1..=30).collect();
    for (i, &a) in pool.iter().enumerate() {
        for (j, &b) in pool.iter().enumerate().skip(i + 1) {
            for &c in &pool[j + 1..] {
                let s = Simplex::of(&[a, b, c]);
                if ar.is_simplex(&s).unwrap() {
                    assert!(s.proper_faces().all(|f| ar.is_simplex(&f).unwrap()), "{s}");
                }
            }
        }
    }
}

#[test]
fn arithmetic_edges_follow_the_digit_rule() {
    let ar = ArithmeticRado::new();
    let primes = [2u64, 3, 5, 7, 11, 13, 17, 19];
    for a in 1..=8u64 {
        for b in a + 1..=120u64 {
            // with both labels present, {a, b} is an edge iff bit p_a of b is set
            let expected = (b >> primes[(a - 1) as usize]) & 1 == 1;
            assert_eq!(ar.is_simplex(&Simplex::of(&[a, b])).unwrap(), expected, "{a} {b}");
        }
    }
}

#[test]
fn growth_levels_are_induced_and_exhaustive() {
    let rec = grow(2, None).unwrap();
    for n in 0..rec.levels().len() - 1 {
        let (lower, upper) = (&rec.levels()[n], &rec.levels()[n + 1]);
        let vs = lower.vertex_list();
        assert_eq!(&upper.induced(&vs), lower);
        for a in lower.subcomplexes().unwrap() {
            let apex = rec.witness_lookup(n, &a).unwrap();
            assert_eq!(upper.link(&Simplex::vertex(apex)).unwrap().induced(&vs), a);
        }
    }
    assert_eq!(grow(2, None).unwrap().top(), rec.top());
}
