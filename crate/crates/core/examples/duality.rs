// The dual of a binary matroid and the identity relating Z̃ of the two.

use bintutte::partition::{duality_multiple, tutte_tilde};
use bintutte::rational::{self, frac, int};
use bintutte::{BinaryMatroid, Element, Gf2Matrix, WeightMap};

fn main() {
    let m = BinaryMatroid::new(Gf2Matrix::parse("2 4\n1 1 0 1\n0 1 1 1\n").unwrap());
    let d = m.dual();
    println!("M:\n{}M*:\n{}", m.rep().to_text(), d.rep().to_text());
    println!("r(M) = {}, r(M*) = {}", m.rank(), d.rank());

    let q = frac(5, 2);
    let w = WeightMap::from_values(m.ground(), vec![int(1), frac(1, 3), int(2), frac(3, 4)]).unwrap();
    let (mult, dual_w) = duality_multiple(&m, &q, &w).unwrap();
    let lhs = tutte_tilde(&m, &q, &w).unwrap();
    let rhs = mult * tutte_tilde(&d, &q, &dual_w).unwrap();
    println!("Z~(M) = {}, via dual = {}", rational::format(&lhs), rational::format(&rhs));

    // deletion in M is contraction in M*: compare rank functions of (M\e)* and M*/e
    let e = Element(1);
    let a = m.delete(e).unwrap().dual();
    let b = d.contract(e).unwrap();
    let same = (0u64..1 << a.len()).all(|s| a.rank_of_mask(s) == b.rank_of_mask(s));
    println!("(M\\{e})* and M*/{e} have the same rank function: {same}");
}
