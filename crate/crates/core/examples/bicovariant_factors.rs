// The bicovariant B = g2 G1 - G2 g1 of bidegree (3, 3): its bilinear factors
// over Q are in bijection with the SL(2, Q) transforms between g1 and g2.
//
//     cargo run -p cubiform --example bicovariant_factors

use cubiform::{bicovariant, bilinear_factors, factor_to_matrix, BinaryCubicForm, Orientation};

fn main() {
    let g = BinaryCubicForm::from_ints(1, -6, 11, -6);
    let b = bicovariant(&g, &g, Orientation::Preserving).unwrap();
    println!("B = {b}");
    for l in bilinear_factors(&b).unwrap() {
        let m = factor_to_matrix(&l, Orientation::Preserving).unwrap();
        // the factor fixes M up to sign
        let exact = if g.act(&m).unwrap() == g { m } else { m.neg() };
        assert_eq!(g.act(&exact).unwrap(), g);
        println!("  {l}  ->  {exact}");
    }
}
