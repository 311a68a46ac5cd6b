// A 3-uniform hypergraph reduced to a binary matroid, checked over many seeds.

use bintutte::partition::hypergraph_potts;
use bintutte::rational::{self, int};
use bintutte::reductions::{choose_n, hyper_to_matroid, verify_reduction, ReductionParams};
use bintutte::{Element, Hypergraph, WeightMap};

fn main() {
    let h = Hypergraph::parse("3 1\n1 2 3\n").unwrap();
    let ones = WeightMap::constant(&[Element(0)], &int(1));
    println!("Z_Potts(H; 2, 1) = {}", rational::format(&hypergraph_potts(&h, 2, &ones).unwrap()));

    let n = choose_n(3, 1, &int(1)).unwrap();
    println!("N for ε = 1: {n}");

    let params = ReductionParams::with_columns(&h, int(1), 4, 7).unwrap();
    let (m, tags) = hyper_to_matroid(&h, &params).unwrap();
    println!("four columns (heuristic N):\n{}tags {tags:?}", m.rep().to_text());

    let report = verify_reduction(&h, &int(1), None, 100, 2024, 128).unwrap();
    println!("{} of {} trials within e^(±1)", report.passed(), report.trials.len());
    print!("{}", report.to_json_lines(8).lines().take(3).collect::<Vec<_>>().join("\n"));
    println!();
}
