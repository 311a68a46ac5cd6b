// Parallel and series extensions, and a plan realizing one weight from another.

use bintutte::gadgets::{apply_plan, parallel_extend, series_extend, synthesize_weight};
use bintutte::partition::tutte_tilde;
use bintutte::rational::{self, frac, int};
use bintutte::{BinaryMatroid, Element, Gf2Matrix, WeightMap};

fn main() {
    let q = int(2);
    let m = BinaryMatroid::new(Gf2Matrix::identity(1));

    let w = WeightMap::constant(m.ground(), &int(3));
    let (p, pw, _) = parallel_extend(&m, &w, Element(0), &int(1), &int(1)).unwrap();
    println!(
        "parallel: Z~ {} -> {}",
        rational::format(&tutte_tilde(&m, &q, &w).unwrap()),
        rational::format(&tutte_tilde(&p, &q, &pw).unwrap())
    );

    let w = WeightMap::constant(m.ground(), &frac(2, 3));
    let (s, sw, _, pre) = series_extend(&m, &w, Element(0), &q, &int(2), &int(2)).unwrap();
    println!(
        "series: {} * {} = {}",
        rational::format(&pre),
        rational::format(&tutte_tilde(&m, &q, &w).unwrap()),
        rational::format(&tutte_tilde(&s, &q, &sw).unwrap())
    );

    let target = frac(141, 100);
    let plan = synthesize_weight(&target, &int(1), &q, &frac(1, 1000), 64).unwrap();
    println!(
        "plan {} gives {} with prefactor {}",
        plan.to_text(),
        rational::format(plan.effective()),
        rational::format(plan.prefactor())
    );
    let (ext, ew, pre) = apply_plan(&m, &w, Element(0), &plan).unwrap();
    let before = WeightMap::constant(m.ground(), plan.effective());
    println!(
        "compiled onto [1]: {} elements, identity holds: {}",
        ext.len(),
        pre * tutte_tilde(&m, &q, &before).unwrap() == tutte_tilde(&ext, &q, &ew).unwrap()
    );
}
