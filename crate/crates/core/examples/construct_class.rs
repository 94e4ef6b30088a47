// Every norm-P^3 element x + y delta of Q[delta] is the Cardano invariant of
// some form; build one and check it lands in the right class.
//
//     cargo run -p cubiform --example construct_class

use cubiform::{cardano_covariant, classes_equal, construct_from_invariant, BinaryCubicForm, Orientation, Rat};

fn main() {
    let g0 = BinaryCubicForm::from_ints(8, 0, 0, -2);
    let disc = g0.discriminant();
    let one = Rat::from_integer(1.into());
    let cov = cardano_covariant(&g0).unwrap();
    let z = cov.eval(&one, &one);
    let p = g0.hessian().eval(&one, &one);
    println!("z = {z}, N(z) = {} = {p}^3", z.norm());

    let g = construct_from_invariant(&disc, &z.u, &z.v, &p).unwrap();
    println!("constructed {g} with disc {}", g.discriminant());
    assert!(classes_equal(&g, &g0, Orientation::Preserving).unwrap());

    // multiplying by a cube keeps the class
    let w = cov.algebra().element(Rat::from_integer(2.into()), one.clone());
    let z2 = w.pow(3).mul(&z).unwrap();
    let g2 = construct_from_invariant(&disc, &z2.u, &z2.v, &(w.norm() * &p)).unwrap();
    assert!(classes_equal(&g2, &g0, Orientation::Preserving).unwrap());
    println!("w^3 z gives {g2}, same class");
}
