use dimdatum::affine::{self, AffineAut, AffineWeight, CatalogEntry};
use dimdatum::branch::{Brancher, Embedding, IrrepLabel, Spectrum, WeightCache};
use dimdatum::lattice::Weight;
use dimdatum::polyfam::{verify_factorization, Parity};
use dimdatum::rational::{self, frac, q};
use proptest::prelude::*;

/// A descending antisymmetric weight of length `2m+1` or `2m`.
fn admissible(parity: Parity, mut top: Vec<i64>) -> Weight {
    top.sort_unstable_by(|a, b| b.cmp(a));
    let mut v = top.clone();
    if parity == Parity::Odd {
        v.push(0);
    }
    v.extend(top.iter().rev().map(|x| -x));
    Weight::new(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn factorization_beyond_the_sweep(top in prop::collection::vec(0i64..7, 1..3), odd in any::<bool>()) {
        let parity = if odd { Parity::Odd } else { Parity::Even };
        prop_assert!(verify_factorization(parity, &admissible(parity, top)).unwrap());
    }

    #[test]
    fn rationals_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let x = frac(n, d);
        prop_assert_eq!(rational::parse(&rational::format(&x)).unwrap(), x);
    }

    #[test]
    fn spectrum_json_round_trip(pairs in prop::collection::vec((0i64..60, 1u64..9), 0..8)) {
        let s = Spectrum::from_pairs(q(60), pairs.into_iter().map(|(e, m)| (q(e), m)));
        prop_assert_eq!(Spectrum::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn torus_branching_counts_weights(a in 0i64..4, b in 0i64..4) {
        let g = "SU(3)".parse().unwrap();
        let emb = Embedding::maximal_torus(&g).unwrap();
        let cache = WeightCache::in_memory();
        let rho = IrrepLabel::new(g, &Weight::from([a + b, b, 0])).unwrap();
        let d = Brancher::new(&cache).branch(&emb, &rho).unwrap();
        prop_assert_eq!(d.parts.iter().map(|(_, m)| m).sum::<i64>(), rho.dimension());
    }

    #[test]
    fn reflections_are_involutions(x in -3i64..4, y in -3i64..4, t in 0i64..4) {
        let r = CatalogEntry::diagonal("A1", 2).build().unwrap();
        let w = AffineWeight::new(Weight::from([x, y]), t, 2);
        for a in r.roots() {
            let s = AffineAut::reflection(a).unwrap();
            prop_assert_eq!(s.apply(&s.apply(&w)), w.clone());
            prop_assert_eq!(s.compose(&s), AffineAut::identity(2, 2));
        }
    }

    #[test]
    fn density_forms_agree_for_any_seed(seed in any::<u64>(), which in 0usize..30) {
        let entries = CatalogEntry::standard_entries();
        let r = entries[which % entries.len()].build().unwrap();
        let (_, worst) = affine::density_samples(&r, 10, seed, 1).unwrap();
        prop_assert!(worst < affine::density::POINTWISE_TOL);
    }
}
