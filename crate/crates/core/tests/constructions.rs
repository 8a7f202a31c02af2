mod support;

use poset_codes::{Budget, CodeClass, ConstructionSpec};
use support::*;

fn assert_nmds_family(code: &poset_codes::LinearCode, b: &Budget) {
    let info = code.classify(b).unwrap();
    assert!(info.class.is_nmds(), "{}", code.generator());
    assert!(code.dual().classify(b).unwrap().class.is_nmds());
    // rows of the dual, read through ideals of the code's own poset, form an
    // orthogonal array of strength d - 1
    if (code.q() as u64).pow((code.n() - code.k()) as u32) <= 1 << 14 {
        let dual = code.dual().with_poset(code.poset().clone()).unwrap();
        assert_eq!(dual.oa_strength(b).unwrap().strength, info.d - 1);
    }
}

#[test]
fn n1_grid() {
    let b = Budget::default();
    for q in [2, 3, 5] {
        for r in 2..=5 {
            for k in 1..r {
                for seed in [None, Some(9), Some(10)] {
                    let mut spec = ConstructionSpec::n1(q, r, k);
                    spec.seed = seed;
                    let c = spec.build(&b).unwrap();
                    assert_nmds_family(&c, &b);
                    if k >= 2 {
                        assert_eq!(c.classify(&b).unwrap().class, CodeClass::Nmds);
                    }
                }
            }
        }
    }
}

#[test]
fn n2_grid() {
    let b = Budget::default();
    for q in [2, 3, 5] {
        for r in 2..=5 {
            for k1 in 1..r {
                for k2 in 1..r {
                    for seed in [None, Some(1), Some(2)] {
                        let mut spec = ConstructionSpec::n2(q, r, k1, k2);
                        spec.seed = seed;
                        let c = spec.build(&b).unwrap();
                        assert_nmds_family(&c, &b);
                        let d = c.classify(&b).unwrap().d;
                        assert_eq!(d, 2 * r - k1 - k2);
                        if (q as u64).pow((k1 + k2) as u32) <= 1 << 12 {
                            assert_eq!(min_distance_by_counting(&c), d);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn n3_codes() {
    let b = Budget::default();
    for r in [6, 7] {
        for seed in [None, Some(4)] {
            let mut spec = ConstructionSpec::n3(3, r);
            spec.seed = seed;
            match spec.build(&b) {
                Ok(c) => {
                    assert_eq!((c.n(), c.k()), (3 * r, 6));
                    assert_eq!(min_distance_by_counting(&c), 3 * r - 6);
                    assert!(nmds_by_duality(&c));
                }
                Err(e) => panic!("r={r} seed={seed:?}: {e}"),
            }
        }
    }
}
