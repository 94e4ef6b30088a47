// Equivalence over Z: filter the (at most six) rational transforms for
// integral ones, and cross-check with an exhaustive search.
//
//     cargo run -p cubiform --example integral_equivalence

use cubiform::{brute_force_oracle, is_equivalent, BinaryCubicForm, Group, Mat2, Ring};

fn main() {
    let g1 = BinaryCubicForm::from_ints(1, 0, 0, -16);
    let g2 = BinaryCubicForm::from_ints(8, 0, 0, -2);
    for (group, ring) in [(Group::SL2, Ring::Q), (Group::SL2, Ring::Z), (Group::GL2, Ring::Z)] {
        let v = is_equivalent(&g1, &g2, group, ring).unwrap();
        let w = v.witness.map(|m| m.to_string()).unwrap_or_else(|| "-".into());
        println!("{group:?} over {ring:?}: {} (witness {w})", v.equivalent);
    }
    assert!(brute_force_oracle(&g2, &g1, 4).is_empty());

    let g = BinaryCubicForm::from_ints(1, 2, -3, 5);
    let m = Mat2::from_ints(2, 1, 3, 2);
    let h = g.act(&m).unwrap();
    let v = is_equivalent(&g, &h, Group::SL2, Ring::Z).unwrap();
    assert_eq!(v.witness, Some(m.clone()));
    println!("{g} ~ {h} over Z via {m}");
}
