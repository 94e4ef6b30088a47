// Automorphism groups: trivial, C2, C3 or S3 depending on whether the form
// has a rational root and whether its discriminant is a square.
//
//     cargo run -p cubiform --example automorphisms

use cubiform::{automorphisms, BinaryCubicForm};

fn main() {
    for c in [[1, 0, 0, -16], [0, 1, 0, -2], [1, 0, -3, 1], [1, -6, 11, -6]] {
        let g = BinaryCubicForm::from_ints(c[0], c[1], c[2], c[3]);
        let aut = automorphisms(&g).unwrap();
        println!("{g}: {} of order {}", aut.kind, aut.kind.order());
        for t in &aut.transforms.entries {
            assert_eq!(g.act(&t.matrix).unwrap(), g);
            println!("  det {:+}  {}", t.det, t.matrix);
        }
    }
}
