// Ising sums through the sat-spectrum, and enclosures at γ = 2^(2/N) - 1.

use bintutte::partition::{ising, sat_spectrum};
use bintutte::rational::{self, frac};
use bintutte::reductions::var_binary_tutte;
use bintutte::{BinaryMatroid, Gf2Matrix, WeightMap};

fn main() {
    let m = BinaryMatroid::new(Gf2Matrix::parse("2 3\n1 0 1\n0 1 1\n").unwrap());
    let s = sat_spectrum(&m).unwrap();
    println!("spectrum coefficients: {}", s.to_text());

    let gamma = frac(1, 3);
    let w = WeightMap::constant(m.ground(), &gamma);
    let z = ising(&m, &w).unwrap();
    let via_spectrum = s.eval(&(gamma + frac(1, 1)));
    println!("Z_Ising = {} (spectrum gives {})", rational::format(&z), rational::format(&via_spectrum));

    let pair = BinaryMatroid::new(Gf2Matrix::parse("1 2\n1 1\n").unwrap());
    for n in 1..=6 {
        let iv = var_binary_tutte(&pair, n, 64).unwrap();
        println!("N = {n}: {}", iv.to_decimal(20));
    }
}
