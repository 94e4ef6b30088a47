// A form with a rational linear factor is SL(2, Q)-equivalent to
// Y(X^2 - disc/4 Y^2).
//
//     cargo run -p cubiform --example standard_form

use cubiform::{standard_reducible_form, BinaryCubicForm};

fn main() {
    for c in [[1, -6, 11, -6], [0, 1, 1, 0], [2, 3, -5, 7]] {
        let g = BinaryCubicForm::from_ints(c[0], c[1], c[2], c[3]);
        match standard_reducible_form(&g) {
            Ok((m, std)) => {
                assert_eq!(g.act(&m).unwrap(), std);
                println!("{g} -> {std} via {m}");
            }
            Err(e) => println!("{g}: {e}"),
        }
    }
}
