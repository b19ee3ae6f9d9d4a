use std::collections::HashMap;

use posinv::enumerate::{self, irresoluteness_serial, pairs, permutations, table1, Leot};
use posinv::rational::Rational;
use posinv::MethodId;

/// Every labeled linearly edge-ordered tournament on `n` vertices.
fn all_labeled(n: usize) -> Vec<Leot> {
    let e = pairs(n).len();
    let mut out = Vec::new();
    for code in 0u32..(1 << e) {
        let bits: Vec<u8> = (0..e).map(|k| ((code >> k) & 1) as u8).collect();
        for order in permutations(e) {
            let ranks = order.iter().map(|&r| r as u8 + 1).collect();
            out.push(Leot::new(n, bits.clone(), ranks).unwrap());
        }
    }
    out
}

#[test]
fn three_vertices_have_eight_classes() {
    let labeled = all_labeled(3);
    assert_eq!(labeled.len(), 48);
    let mut keys: HashMap<_, usize> = HashMap::new();
    for t in &labeled {
        *keys.entry(t.canonical_form()).or_default() += 1;
    }
    assert_eq!(keys.len(), 8);
    assert!(keys.values().all(|&c| c == 6));
    assert_eq!(enumerate::count_classes(3).unwrap(), 8);
}

#[test]
fn four_vertex_orbits_are_regular() {
    let labeled = all_labeled(4);
    assert_eq!(labeled.len(), 46_080);
    let mut keys: HashMap<_, usize> = HashMap::new();
    for t in &labeled {
        *keys.entry(t.canonical_form()).or_default() += 1;
    }
    assert_eq!(keys.len(), 1920);
    assert!(keys.values().all(|&c| c == 24));

    let mut streamed = Vec::new();
    enumerate::enumerate_leot(4, |t| streamed.push(t.canonical_form())).unwrap();
    assert_eq!(streamed.len(), 1920);
    for k in &streamed {
        assert!(keys.contains_key(k));
    }
}

#[test]
fn table_one_rows() {
    let rows = table1(&MethodId::TABLE1).unwrap();
    let got: Vec<(MethodId, u64, Rational, usize)> = rows
        .iter()
        .map(|r| (r.method, r.num_multiple, r.mean_size, r.max_size))
        .collect();
    for r in &rows {
        println!(
            "{:<20} {:>4} {:>20} {}",
            r.method.name(),
            r.num_multiple,
            r.mean_exact(),
            r.max_size
        );
    }
    let expected = vec![
        (MethodId::SmithSet, 960, Rational::new(2375, 1000), 4),
        (MethodId::UncoveredSet, 960, Rational::from_integer(2), 3),
        (MethodId::Copeland, 960, Rational::new(1625, 1000), 3),
        (
            MethodId::DefensibleSet,
            598,
            Rational::new(1_359_375, 1_000_000),
            3,
        ),
        (
            MethodId::DefensibleCapSmith,
            583,
            Rational::new(134_375, 100_000),
            3,
        ),
        (MethodId::SplitCycle, 104, Rational::new(253, 240), 2),
        (MethodId::Minimax, 0, Rational::from_integer(1), 1),
    ];
    assert_eq!(got, expected);
    assert_eq!(irresoluteness_serial(4, &MethodId::TABLE1).unwrap(), rows);
}
