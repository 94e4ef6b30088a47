// Discriminant, seminvariants and covariants of a cubic, and the syzygy
// 4H^3 = G^2 + 27 disc g^2 tying them together.
//
//     cargo run -p cubiform --example invariants

use cubiform::{BinaryCubicForm, Mat2};

fn main() {
    let g = BinaryCubicForm::from_ints(1, -6, 11, -6);
    let (p, u) = g.seminvariants();
    println!("g      = {g}");
    println!("disc   = {}", g.discriminant());
    println!("P, U   = {p}, {u}");
    println!("H      = {}", g.hessian());
    println!("G      = {}", g.cubic_covariant());
    assert!(g.syzygy_holds());

    // SL(2) moves the covariants along with the form
    let m = Mat2::from_ints(2, 1, 1, 1);
    let h = g.act(&m).unwrap();
    assert_eq!(h.discriminant(), g.discriminant());
    assert_eq!(h.hessian(), g.hessian().substitute(&m));
    assert_eq!(h.cubic_covariant(), g.cubic_covariant().substitute(&m));
    println!("g^M    = {h}  (M = {m})");
}
