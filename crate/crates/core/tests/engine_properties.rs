mod common;

use std::collections::BTreeMap;

use common::dense::{dense_d_minus, dense_d_plus, Dense};
use floer_gamma::engine::{self, Region};
use floer_gamma::model::{
    build_9_42, build_trefoil, build_unknot, Chain, FundamentalComplex, Hand,
};
use proptest::prelude::*;

const REGIONS: [fn(i64) -> Region; 6] = [
    Region::MaxGe,
    Region::MaxEq,
    Region::BandI,
    Region::BandJ,
    Region::Column,
    Region::Row,
];

fn boundary_squared_zero(c: &FundamentalComplex) -> bool {
    c.check_invariants().is_ok()
        && (0..c.len()).all(|k| Chain::from_indices([k]).boundary(c).boundary(c).is_zero())
}

fn truncations(c: &FundamentalComplex) -> Vec<FundamentalComplex> {
    let w = c.coordinate_extent() + 1;
    let mut out = Vec::new();
    for l in [-w, -1, 0, 1, w] {
        for region in REGIONS {
            for cut in -1..=1 {
                out.push(engine::truncate(c, l, region(cut)));
            }
        }
    }
    out
}

#[test]
fn boundary_squared_after_every_op() {
    for (name, c) in common::corpus() {
        if c.len() > 100 {
            assert!(boundary_squared_zero(&c), "{name}");
            continue;
        }
        assert!(boundary_squared_zero(&c), "{name}");
        assert!(boundary_squared_zero(&engine::mirror(&c)), "mirror {name}");
        assert!(
            boundary_squared_zero(&engine::translate(&c, 3)),
            "translate {name}"
        );
        assert!(
            boundary_squared_zero(&c.canonical_order()),
            "canonical {name}"
        );
        assert!(boundary_squared_zero(&engine::tensor(
            &c,
            &build_trefoil(Hand::Left)
        )));
        for t in truncations(&c) {
            assert!(boundary_squared_zero(&t), "truncation of {name}");
        }
    }
}

#[test]
fn sparse_matches_dense_homology_on_corpus() {
    let mut checked = 0;
    for (name, c) in common::corpus() {
        assert!(c.len() <= 1000);
        let sparse = engine::homology(&c).dimensions();
        assert_eq!(
            sparse,
            Dense::from_model(&c).homology_dimensions(),
            "{name}"
        );
        let pieces = if c.len() <= 100 {
            truncations(&c)
        } else {
            vec![engine::truncate(&c, 0, Region::MaxGe(0))]
        };
        for t in pieces {
            assert_eq!(
                engine::homology(&t).dimensions(),
                Dense::from_model(&t).homology_dimensions(),
                "truncation of {name}"
            );
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn kunneth_gradings_on_9_42_squared() {
    let k = build_9_42();
    let t = engine::tensor(&k, &k);
    assert_eq!(t.len(), k.len() * k.len());
    for a in k.generators() {
        for b in k.generators() {
            let idx = t.index_of(&format!("{}|{}", a.name, b.name)).unwrap();
            let g = t.generator(idx);
            assert_eq!(
                (g.i, g.j, g.maslov),
                (a.i + b.i, a.j + b.j, a.maslov + b.maslov)
            );
            assert_eq!(g.alexander(), a.alexander() + b.alexander());
        }
    }
    let hk = Dense::from_model(&k).homology_dimensions();
    let mut expected: BTreeMap<i64, usize> = BTreeMap::new();
    for (ga, da) in &hk {
        for (gb, db) in &hk {
            *expected.entry(ga + gb).or_default() += da * db;
        }
    }
    assert_eq!(engine::homology(&t).dimensions(), expected);
    // per-slice Künneth on the column and row pieces
    for region in [Region::Column(0), Region::Row(0), Region::BandI(0)] {
        let piece = engine::truncate(&k, 0, region);
        let hp = engine::homology(&piece).dimensions();
        let tp = engine::tensor(&piece, &piece);
        let mut conv: BTreeMap<i64, usize> = BTreeMap::new();
        for (ga, da) in &hp {
            for (gb, db) in &hp {
                *conv.entry(ga + gb).or_default() += da * db;
            }
        }
        assert_eq!(engine::homology(&tp).dimensions(), conv, "{region:?}");
    }
}

#[test]
fn mirror_is_an_involution() {
    for (name, c) in common::corpus() {
        let mm = engine::mirror(&engine::mirror(&c));
        assert!(mm.equal_up_to_renaming(&c), "{name}");
        assert_eq!(mm.named_arrows().len(), c.arrow_count());
    }
    assert!(engine::mirror(&build_trefoil(Hand::Left))
        .equal_up_to_renaming(&build_trefoil(Hand::Right)));
    assert!(engine::mirror(&build_unknot()).equal_up_to_renaming(&build_unknot()));
}

#[test]
fn d_invariants_match_dense_oracle() {
    let cases = [
        ("unknot", build_unknot()),
        ("trefoil_l", build_trefoil(Hand::Left)),
        ("trefoil_r", build_trefoil(Hand::Right)),
        ("9_42", build_9_42()),
        ("9_42^2", engine::tensor_power(&build_9_42(), 2).unwrap()),
        ("9_42^3", engine::tensor_power(&build_9_42(), 3).unwrap()),
    ];
    for (name, c) in cases {
        let dense = Dense::from_model(&c);
        assert_eq!(
            engine::d_plus_one_surgery(&c).unwrap(),
            dense_d_plus(&dense),
            "{name}"
        );
        assert_eq!(
            engine::d_minus_one_surgery(&c).unwrap(),
            dense_d_minus(&dense),
            "{name}"
        );
    }
}

fn piece(k: u8) -> FundamentalComplex {
    match k {
        0 => build_unknot(),
        1 => build_trefoil(Hand::Left),
        2 => build_trefoil(Hand::Right),
        3 => build_9_42(),
        _ => engine::mirror(&build_9_42()),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn random_sums_agree_with_oracle(factors in prop::collection::vec(0u8..5, 1..4)) {
        let mut c = piece(factors[0]);
        for &f in &factors[1..] {
            c = engine::tensor(&c, &piece(f));
        }
        prop_assume!(c.len() <= 1000);
        prop_assert!(boundary_squared_zero(&c));
        let dense = Dense::from_model(&c);
        prop_assert_eq!(engine::homology(&c).dimensions(), dense.homology_dimensions());
        prop_assert_eq!(engine::d_plus_one_surgery(&c).unwrap(), dense_d_plus(&dense));
        let mirror = engine::mirror(&c);
        prop_assert_eq!(
            engine::d_plus_one_surgery(&mirror).unwrap(),
            dense_d_plus(&dense.mirror())
        );
    }

    #[test]
    fn translate_shifts_homology_by_two_l(l in -5i64..=5, k in 0u8..5) {
        let c = piece(k);
        let shifted: BTreeMap<i64, usize> = engine::homology(&c)
            .dimensions()
            .into_iter()
            .map(|(g, d)| (g + 2 * l, d))
            .collect();
        prop_assert_eq!(engine::homology(&engine::translate(&c, l)).dimensions(), shifted);
    }
}
