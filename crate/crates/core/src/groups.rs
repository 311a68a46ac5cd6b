//! Permutation groups given by generators, the cycle index, orbit counting,
//! and the group attached to a binary code.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use num_traits::Zero;

use crate::codes::GeneratingMatrix;
use crate::error::{Error, Result};
use crate::gf2::{content_lines, parse_usizes};
use crate::rational::{int, powi, Rational};

/// Default bound on group enumeration.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;
/// Default bound on the number of strings `orbit_count` visits.
pub const DEFAULT_STRING_BUDGET: u64 = 1 << 24;

/// A permutation of `{0, .., ν-1}` stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::input(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Product of the given disjoint transpositions.
    pub fn from_transpositions(degree: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for &(a, b) in pairs {
            if a >= degree || b >= degree {
                return Err(Error::input("transposition point out of range"));
            }
            images.swap(a, b);
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    /// Number of cycles, fixed points included.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut cycles = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
            }
        }
        cycles
    }
}

/// Cycle notation with 1-based points, fixed points omitted; `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.degree()];
        let mut any = false;
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", i + 1)?;
                first = false;
                i = self.images[i];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
}

impl PermutationGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::input(format!(
                "generator of degree {} in a group on {degree} points",
                g.degree()
            )));
        }
        Ok(PermutationGroup { degree, generators })
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
        }
    }

    /// The symmetric group on `degree` points, by a transposition and a long cycle.
    pub fn symmetric(degree: usize) -> Self {
        if degree < 2 {
            return Self::trivial(degree);
        }
        let swap = Permutation::from_transpositions(degree, &[(0, 1)]).expect("in range");
        let cycle = Permutation {
            images: (0..degree).map(|i| (i + 1) % degree).collect(),
        };
        PermutationGroup {
            degree,
            generators: vec![swap, cycle],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// All elements by breadth-first closure under the generators.
    pub fn enumerate(&self, cap: usize) -> Result<Vec<Permutation>> {
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(p) = queue.pop_front() {
            for g in &self.generators {
                let next = g.compose(&p);
                if seen.insert(next.clone()) {
                    if seen.len() > cap {
                        return Err(Error::size(format!("group has more than {cap} elements")));
                    }
                    order.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(order)
    }

    /// `ν r` header, then one line of 1-based images per generator.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let header = lines.next().ok_or_else(|| Error::input("empty group file"))?;
        let [degree, r] = parse_usizes(header)?[..] else {
            return Err(Error::input(format!("bad group header {header:?}")));
        };
        let mut gens = Vec::with_capacity(r);
        for k in 0..r {
            let line = lines
                .next()
                .ok_or_else(|| Error::input(format!("missing generator {}", k + 1)))?;
            let images = parse_usizes(line)?;
            if images.len() != degree {
                return Err(Error::input(format!(
                    "generator {} has {} images, expected {degree}",
                    k + 1,
                    images.len()
                )));
            }
            if images.contains(&0) {
                return Err(Error::input("points are 1-based"));
            }
            gens.push(Permutation::new(images.into_iter().map(|i| i - 1).collect())?);
        }
        if let Some(extra) = lines.next() {
            return Err(Error::input(format!("trailing content {extra:?}")));
        }
        Self::new(degree, gens)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.degree, self.generators.len());
        for g in &self.generators {
            let imgs: Vec<String> = g.images.iter().map(|i| (i + 1).to_string()).collect();
            s.push_str(&imgs.join(" "));
            s.push('\n');
        }
        s
    }
}

/// `|G|⁻¹ Σ_g x^cyc(g)` over an explicit element list.
pub fn cycle_index_of(elements: &[Permutation], x: &Rational) -> Rational {
    let mut by_cycles: Vec<u64> = Vec::new();
    for g in elements {
        let c = g.cycle_count();
        if by_cycles.len() <= c {
            by_cycles.resize(c + 1, 0);
        }
        by_cycles[c] += 1;
    }
    let sum = by_cycles
        .iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .fold(Rational::zero(), |acc, (c, &n)| acc + powi(x, c as i64) * int(n as i64));
    sum / int(elements.len() as i64)
}

/// The cycle index `Z_CI(G; x)`.
pub fn cycle_index(g: &PermutationGroup, x: &Rational, cap: usize) -> Result<Rational> {
    let elements = g.enumerate(cap)?;
    Ok(cycle_index_of(&elements, x))
}

fn find(parent: &mut [u32], mut i: u32) -> u32 {
    while parent[i as usize] != i {
        parent[i as usize] = parent[parent[i as usize] as usize];
        i = parent[i as usize];
    }
    i
}

/// Orbits of `G` on the `x^ν` strings over an `x`-letter alphabet, counted
/// directly: each string is joined with its images under the generators.
pub fn orbit_count(g: &PermutationGroup, x: u32, budget: u64) -> Result<u64> {
    if x == 0 {
        return Err(Error::parameter("alphabet size must be positive"));
    }
    let total = (x as u64)
        .checked_pow(g.degree() as u32)
        .filter(|&t| t <= budget && t <= u32::MAX as u64)
        .ok_or_else(|| Error::size(format!("{x}^{} strings exceed the budget", g.degree())))?;
    let mut parent: Vec<u32> = (0..total as u32).collect();
    let mut digits = vec![0u32; g.degree()];
    let mut place = vec![1u64; g.degree()];
    for i in 1..g.degree() {
        place[i] = place[i - 1] * x as u64;
    }
    for s in 0..total {
        let mut rest = s;
        for d in digits.iter_mut() {
            *d = (rest % x as u64) as u32;
            rest /= x as u64;
        }
        for p in &g.generators {
            // the letter at position i moves to position p(i)
            let image: u64 = digits
                .iter()
                .enumerate()
                .map(|(i, &d)| d as u64 * place[p.apply(i)])
                .sum();
            let (a, b) = (find(&mut parent, s as u32), find(&mut parent, image as u32));
            if a != b {
                parent[a as usize] = b;
            }
        }
    }
    Ok((0..total as u32).filter(|&i| find(&mut parent, i) == i).count() as u64)
}

/// The group on `2c` points generated by one involution per row: row `i`
/// swaps points `2j` and `2j+1` (0-based) for every column `j` with `M_ij = 1`.
pub fn code_to_group(g: &GeneratingMatrix) -> Result<PermutationGroup> {
    let degree = 2 * g.c();
    let gens = (0..g.r())
        .map(|i| {
            let pairs: Vec<(usize, usize)> = (0..g.c())
                .filter(|&j| g.matrix().get(i, j))
                .map(|j| (2 * j, 2 * j + 1))
                .collect();
            Permutation::from_transpositions(degree, &pairs)
        })
        .collect::<Result<Vec<_>>>()?;
    PermutationGroup::new(degree, gens)
}

/// The element `Π_i g_i^{m_i}` of the code's group.
pub fn code_element(g: &GeneratingMatrix, mask: u64) -> Permutation {
    let degree = 2 * g.c();
    let mut images: Vec<usize> = (0..degree).collect();
    for j in 0..g.c() {
        let flips = (0..g.r()).filter(|&i| (mask >> i) & 1 == 1 && g.matrix().get(i, j)).count();
        if flips % 2 == 1 {
            images.swap(2 * j, 2 * j + 1);
        }
    }
    Permutation { images }
}
