// Z̃ and T on the triangle, and the random-cluster sum of the same graph.

use bintutte::partition::{random_cluster_graph, tutte_t, tutte_tilde};
use bintutte::rational::{self, frac, int};
use bintutte::{BinaryMatroid, Element, Graph, WeightMap};

fn main() {
    let triangle = Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
    let m = BinaryMatroid::from_graph(&triangle);
    println!("incidence matrix:\n{}", m.rep().to_text());

    let w = WeightMap::constant(m.ground(), &int(1));
    let z = tutte_tilde(&m, &int(2), &w).unwrap();
    println!("Z~(K3; 2, 1) = {}", rational::format(&z));

    // T(2,2) counts all subsets
    let t = tutte_t(&m, &int(2), &int(2)).unwrap();
    println!("T(K3; 2, 2) = {}", rational::format(&t));

    let edges: Vec<Element> = (0..3).map(Element).collect();
    let mixed = WeightMap::from_values(&edges, vec![frac(1, 2), int(1), int(3)]).unwrap();
    let rc = random_cluster_graph(&triangle, &frac(3, 2), &mixed).unwrap();
    println!("random-cluster(K3; q=3/2, γ=(1/2,1,3)) = {}", rational::format(&rc));
}
