// Every element of a matroid moved from γ' = 2^(2/N) - 1 onto an available weight.

use bintutte::rational::{self, frac, int};
use bintutte::reductions::weight_shift_pipeline;
use bintutte::{BinaryMatroid, Gf2Matrix};

fn main() {
    let m = BinaryMatroid::new(Gf2Matrix::parse("2 3\n1 0 1\n0 1 1\n").unwrap());
    for (n, avail) in [(2, int(1)), (1, int(1)), (3, int(2)), (6, frac(1, 2))] {
        let r = weight_shift_pipeline(&m, n, &avail, &frac(1, 2), &int(1), 64, 128).unwrap();
        println!(
            "N={n} avail={}: plan {} ({} leaves), γ* = {}, in target: {}, M̂ has {} elements, certificate {:?}",
            rational::format(&avail),
            r.plan.to_text(),
            r.plan.leaf_count(),
            rational::to_decimal(&r.gamma_star, 12, false),
            r.gamma_star_in_target(),
            r.matroid.len(),
            r.certificate
        );
    }
}
