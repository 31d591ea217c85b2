use interlace::certify::{certify, CertifyOptions};
use interlace::clique::{equidistant_family, equidistant_polygon, reduced_ratio};
use interlace::compression::independence_formula;
use interlace::export::{render, GraphFormat};
use interlace::oracles::{
    circular_chromatic_number, max_independent_set, random_independent_set, CircularValue,
    OracleConfig,
};
use interlace::{verify_circular_clique, InterlacingGraph, Parameters};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_params(max_n: u32) -> impl Strategy<Value = Parameters> {
    (2..=max_n)
        .prop_flat_map(|n| (Just(n), 1..=n / 2))
        .prop_flat_map(|(n, k)| (Just(n), Just(k), 2..=n / k))
        .prop_map(|(n, k, r)| Parameters::new(n, k, r).unwrap())
}

proptest! {
    #[test]
    fn equidistant_polygons_are_stable(p in arb_params(60), j in 0u64..200) {
        let poly = equidistant_polygon(&p, j);
        prop_assert_eq!(poly.len(), p.k() as usize);
        prop_assert!(poly.is_r_stable(p.r()));
        prop_assert!(poly.is_r_stable(p.n() / p.k()));
    }

    #[test]
    fn equidistant_stabilizer_is_generated_by_reduced_order(p in arb_params(40)) {
        let np = reduced_ratio(&p).num() as u32;
        let base = equidistant_polygon(&p, 0);
        for t in 0..p.n() {
            prop_assert_eq!(base.rotate(t as u64) == base, t % np == 0);
        }
        prop_assert_eq!(equidistant_family(&p).len() as u32, np);
    }

    #[test]
    fn random_sets_respect_the_formula(p in arb_params(10), seed in any::<u64>()) {
        let g = InterlacingGraph::build(&p);
        let alpha = max_independent_set(&g, &OracleConfig::default()).unwrap().value;
        prop_assert_eq!(alpha as u128, independence_formula(&p).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10 {
            let set = random_independent_set(&g, &mut rng);
            prop_assert!(g.is_independent(&set));
            prop_assert!(set.len() <= alpha);
        }
    }
}

#[test]
fn circular_clique_meets_circular_chromatic_number() {
    for p in Parameters::all_up_to(8) {
        let g = InterlacingGraph::build(&p);
        let clique = verify_circular_clique(&g).unwrap();
        assert!(clique.holds, "{p}");
        let chi_c =
            circular_chromatic_number(&g, g.vertex_count() as u32, &OracleConfig::default())
                .unwrap();
        if g.edge_count() > 0 {
            assert_eq!(chi_c.value, CircularValue::Exact(clique.ratio), "{p}");
        }
    }
}

#[test]
fn outputs_are_deterministic() {
    let p = Parameters::new(9, 3, 2).unwrap();
    for format in [GraphFormat::Dimacs, GraphFormat::Dot, GraphFormat::Json] {
        assert_eq!(
            render(&InterlacingGraph::build(&p), format),
            render(&InterlacingGraph::build(&p), format)
        );
    }
    let options = CertifyOptions {
        seed: 11,
        ..CertifyOptions::all()
    };
    let (mut a, wa) = certify(&p, &options).unwrap();
    let (mut b, wb) = certify(&p, &options).unwrap();
    a.wall_time_ms = 0;
    b.wall_time_ms = 0;
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(wa, wb);
    assert!(a.passed());
}
