// Deciding SL(2, Q)-equivalence two ways: through the Cardano invariant, and
// by recovering the transforming matrices from the bicovariant.
//
//     cargo run -p cubiform --example equivalence_over_q

use cubiform::{classes_equal, sl2_transforms, BinaryCubicForm, Mat2, Orientation};

fn main() {
    let g1 = BinaryCubicForm::from_ints(8, 0, 0, -2);
    let g2 = BinaryCubicForm::from_ints(1, 0, 0, -16);
    assert!(classes_equal(&g1, &g2, Orientation::Preserving).unwrap());
    let set = sl2_transforms(&g1, &g2).unwrap();
    for m in set.matrices() {
        assert_eq!(g2.act(&m).unwrap(), g1);
        println!("{g1} = ({g2})^M  with M = {m}");
    }

    // X^3 + 16Y^3 only matches through a reflection
    let flipped = g2.flip_y();
    assert!(!classes_equal(&flipped, &g2, Orientation::Preserving).unwrap());
    assert!(classes_equal(&flipped, &g2, Orientation::Reversing).unwrap());
    assert!(sl2_transforms(&flipped, &g2).unwrap().is_empty());
    let reflect = Mat2::from_ints(-1, 0, 0, 1);
    println!("{flipped} is only GL(2)-equivalent: ({g2})^{reflect} = {}", g2.act(&reflect).unwrap());
}
