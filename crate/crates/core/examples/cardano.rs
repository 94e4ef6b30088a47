// The Cardano covariant C = (G + 3 delta g)/2 with values in Q[delta],
// delta^2 = -3 disc, and the rational and numeric roots it yields.
//
//     cargo run -p cubiform --example cardano

use cubiform::{
    cardano_representative, cardano_roots_numeric, check_f_identity, is_trivial_class,
    rational_roots_of_form, BinaryCubicForm,
};

fn main() {
    let g = BinaryCubicForm::from_ints(8, 0, 0, -2);
    let (z, (x, y)) = cardano_representative(&g).unwrap();
    let h = g.hessian().eval(&x, &y);
    println!("g = {g}");
    println!("C({x},{y}) = {z}");
    // the norm of any Cardano value is a cube
    assert_eq!(z.norm(), &h * &h * &h);
    println!("N(C) = {} = {h}^3", z.norm());
    assert!(check_f_identity(&g, (&x, &y), (&y, &x)).unwrap());
    println!("trivial class: {}", is_trivial_class(&g).unwrap());

    let split = BinaryCubicForm::from_ints(1, -6, 11, -6);
    let roots = rational_roots_of_form(&split).unwrap();
    println!("rational roots of {split}: {:?}", roots.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>());
    for r in cardano_roots_numeric(&g).unwrap() {
        println!("  root of {g}: {:.12} {:+.12}i", r.re, r.im);
    }
}
