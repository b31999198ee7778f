use graphcurve_algebra::monomial::monomials_of_degree;
use graphcurve_algebra::resolution::Resolution;
use graphcurve_algebra::{format_polynomial, groebner_basis, parse_polynomial, Ideal, Polynomial, Ring};
use proptest::prelude::*;

const N: usize = 4;

/// Homogeneous polynomials of degree 2 in four variables with small
/// coefficients.
fn quadric() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..10, -3i64..=3), 1..4)
}

fn build(r: &Ring, spec: &[(usize, i64)]) -> Polynomial {
    let mons = monomials_of_degree(N, 2);
    let terms = spec
        .iter()
        .filter(|(_, c)| *c != 0)
        .map(|&(i, c)| (mons[i], r.field().from_i64(c)))
        .collect();
    r.from_terms(terms)
}

fn ideal(r: &Ring, specs: &[Vec<(usize, i64)>]) -> Ideal {
    Ideal::new(r, specs.iter().map(|s| build(r, s)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bases_satisfy_the_s_pair_criterion(gens in prop::collection::vec(quadric(), 1..5)) {
        let r = Ring::grevlex(N).unwrap();
        let i = ideal(&r, &gens);
        let gb = i.gb();
        prop_assert!(gb.satisfies_buchberger_criterion());
        prop_assert!(gb.is_reduced());
        prop_assert_eq!(&groebner_basis(&r, gb.polys()), gb);
        for g in i.generators() {
            prop_assert!(gb.normal_form(g).is_zero());
        }
    }

    #[test]
    fn intersections_are_sound(a in prop::collection::vec(quadric(), 1..3), b in prop::collection::vec(quadric(), 1..3)) {
        let r = Ring::grevlex(N).unwrap();
        let (i, j) = (ideal(&r, &a), ideal(&r, &b));
        let k = i.intersection(&j).unwrap();
        for g in k.generators() {
            prop_assert!(i.is_member(g) && j.is_member(g));
        }
        prop_assert!(k.contains(&i.product(&j).unwrap()));
        prop_assert_eq!(i.intersection(&i).unwrap(), i.clone());
    }

    #[test]
    fn resolutions_are_minimal_exact_complexes(gens in prop::collection::vec(quadric(), 1..4)) {
        let r = Ring::grevlex(N).unwrap();
        let i = ideal(&r, &gens);
        prop_assume!(!i.is_unit() && !i.gb().is_empty());
        let res = Resolution::compute(&i).unwrap();
        let fast = res.betti();
        let min = res.minimize();
        prop_assert!(min.is_minimal() && min.is_complex() && min.is_graded());
        prop_assert_eq!(&min.betti(), &fast);
        prop_assert!(fast.euler_matches(&i.hilbert_series().unwrap().numerator));
        prop_assert_eq!(fast.get(0, 0), 1);
    }

    #[test]
    fn text_round_trip(spec in quadric()) {
        let r = Ring::grevlex(N).unwrap();
        let f = build(&r, &spec);
        let s = format_polynomial(&r, &f);
        prop_assert_eq!(parse_polynomial(&r, &s).unwrap(), f);
    }
}

#[test]
fn product_example() {
    let r = Ring::grevlex(3).unwrap();
    let p = |s: &str| parse_polynomial(&r, s).unwrap();
    let i = Ideal::new(&r, vec![p("x0"), p("x1")]);
    let j = Ideal::new(&r, vec![p("x2")]);
    assert_eq!(i.product(&j).unwrap(), Ideal::new(&r, vec![p("x0*x2"), p("x1*x2")]));
    assert!(Ideal::new(&r, vec![p("x0")]).normal_form(&p("x0*x1")).is_zero());
    let k = Ideal::new(&r, vec![p("x0")]).intersection(&Ideal::new(&r, vec![p("x1")])).unwrap();
    assert_eq!(k, Ideal::new(&r, vec![p("x0*x1")]));
}
