#![allow(dead_code)]

pub mod dense;
pub mod schema;

use floer_gamma::engine;
use floer_gamma::model::{build_9_42, build_trefoil, build_unknot, FundamentalComplex, Hand};

/// Named complexes shared by the property suites, all under 1000 generators.
pub fn corpus() -> Vec<(String, FundamentalComplex)> {
    let base = vec![
        ("unknot".to_string(), build_unknot()),
        ("trefoil_l".to_string(), build_trefoil(Hand::Left)),
        ("trefoil_r".to_string(), build_trefoil(Hand::Right)),
        ("9_42".to_string(), build_9_42()),
    ];
    let mut out = base.clone();
    for (name, c) in &base[1..] {
        for m in 2..=3 {
            out.push((format!("{name}^{m}"), engine::tensor_power(c, m).unwrap()));
        }
        out.push((format!("mirror({name})"), engine::mirror(c)));
    }
    let t = build_trefoil(Hand::Left);
    let k = build_9_42();
    out.push(("trefoil_l#9_42".into(), engine::tensor(&t, &k)));
    out.push((
        "trefoil_l#trefoil_r".into(),
        engine::tensor(&t, &build_trefoil(Hand::Right)),
    ));
    out.push((
        "9_42#mirror(9_42)".into(),
        engine::tensor(&k, &engine::mirror(&k)),
    ));
    out
}
