// Points on Z^3 = g(X, Y) map to the curve Y^2 = X^3 + k, k = -disc/108.
//
//     cargo run -p cubiform --example covering_map

use cubiform::descent::cube_points;
use cubiform::{cover_point, curve_k, is_on_curve, BinaryCubicForm};

fn main() {
    let g = BinaryCubicForm::from_ints(1, 0, 0, 1);
    let k = curve_k(&g).unwrap();
    println!("g = {g}, curve Y^2 = X^3 + {k}");
    for (x, y, z) in cube_points(&g, 5) {
        let p = cover_point(&g, &x, &y, &z).unwrap();
        assert!(is_on_curve(&k, &p));
        println!("  ({x}, {y}, {z}) -> {p}");
    }
}
