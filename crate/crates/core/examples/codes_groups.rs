// Weight enumerators, their Z̃ form, and the permutation group of a code.

use bintutte::codes::{greene_check, group_code_check, weight_distribution, GeneratingMatrix};
use bintutte::groups::{code_to_group, cycle_index, orbit_count, PermutationGroup};
use bintutte::rational::{self, frac, int};

fn main() {
    let code = GeneratingMatrix::parse("2 4\n1 1 0 1\n0 1 1 1\n").unwrap();
    println!("weight distribution {:?}", weight_distribution(&code).unwrap());
    let g = greene_check(&code, &frac(1, 3)).unwrap();
    println!("W(1/3) = {}, from Z~ = {}", rational::format(&g.lhs), rational::format(&g.rhs));

    let group = code_to_group(&code).unwrap();
    for p in group.generators() {
        println!("generator {p}");
    }
    let c = group_code_check(&code, &int(3), 1000).unwrap();
    println!("|G| = {}, |G| Z_CI(G; 3) = {}, x^2c W(1/x) = {}", c.group_order, c.lhs, c.rhs);

    let s3 = PermutationGroup::symmetric(3);
    println!(
        "S3: cycle index at 2 = {}, orbits on binary strings = {}",
        rational::format(&cycle_index(&s3, &int(2), 100).unwrap()),
        orbit_count(&s3, 2, 1000).unwrap()
    );
}
