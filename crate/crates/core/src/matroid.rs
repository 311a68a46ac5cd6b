//! Binary matroids represented over GF(2), and the cycle matroids of multigraphs.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{content_lines, parse_usizes, Gf2Matrix};

/// Stable identifier of a ground-set element.
///
/// Identifiers survive deletion, contraction, dualization and the gadget
/// extensions, so weight maps keyed by them stay valid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub usize);

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// A matroid given by the columns of a GF(2) matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryMatroid {
    rep: Gf2Matrix,
    ground: Vec<Element>,
}

impl BinaryMatroid {
    /// Matroid of `rep` with elements `0..cols` in column order.
    pub fn new(rep: Gf2Matrix) -> Self {
        let ground = (0..rep.cols()).map(Element).collect();
        BinaryMatroid { rep, ground }
    }

    pub fn with_ground(rep: Gf2Matrix, ground: Vec<Element>) -> Result<Self> {
        if ground.len() != rep.cols() {
            return Err(Error::input(format!(
                "{} element ids for {} columns",
                ground.len(),
                rep.cols()
            )));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = ground.iter().find(|e| !seen.insert(**e)) {
            return Err(Error::input(format!("duplicate element id {dup}")));
        }
        Ok(BinaryMatroid { rep, ground })
    }

    pub fn rep(&self) -> &Gf2Matrix {
        &self.rep
    }

    pub fn ground(&self) -> &[Element] {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    /// An identifier not yet used in the ground set.
    pub fn fresh_element(&self) -> Element {
        Element(self.ground.iter().map(|e| e.0 + 1).max().unwrap_or(0))
    }

    pub fn index_of(&self, e: Element) -> Result<usize> {
        self.ground
            .iter()
            .position(|&g| g == e)
            .ok_or_else(|| Error::input(format!("unknown element {e}")))
    }

    pub fn rank_of(&self, subset: &[Element]) -> Result<usize> {
        let cols = subset
            .iter()
            .map(|&e| self.index_of(e))
            .collect::<Result<Vec<_>>>()?;
        self.rep.rank(&cols)
    }

    /// Rank of the column subset encoded as a bit mask over column positions.
    pub fn rank_of_mask(&self, mask: u64) -> usize {
        let cols: Vec<usize> = (0..self.len()).filter(|&k| (mask >> k) & 1 == 1).collect();
        self.rep.rank(&cols).expect("mask within column range")
    }

    pub fn rank(&self) -> usize {
        self.rep.full_rank()
    }

    pub fn delete(&self, e: Element) -> Result<Self> {
        let k = self.index_of(e)?;
        let mut ground = self.ground.clone();
        ground.remove(k);
        Ok(BinaryMatroid {
            rep: self.rep.remove_column(k),
            ground,
        })
    }

    /// Contraction `M/e`. Contracting a loop is the same as deleting it.
    pub fn contract(&self, e: Element) -> Result<Self> {
        let k = self.index_of(e)?;
        let Some(pivot) = (0..self.rep.rows()).find(|&i| self.rep.get(i, k)) else {
            return self.delete(e);
        };
        let pivot_row: Vec<bool> = (0..self.rep.cols()).map(|c| self.rep.get(pivot, c)).collect();
        let mut m = self.rep.clone();
        for i in 0..m.rows() {
            if i != pivot && m.get(i, k) {
                for (c, &b) in pivot_row.iter().enumerate() {
                    if b {
                        let v = m.get(i, c);
                        m.set(i, c, !v);
                    }
                }
            }
        }
        let keep_rows: Vec<usize> = (0..m.rows()).filter(|&i| i != pivot).collect();
        let m = m.select_rows(&keep_rows).remove_column(k);
        let mut ground = self.ground.clone();
        ground.remove(k);
        Ok(BinaryMatroid { rep: m, ground })
    }

    pub fn dual(&self) -> Self {
        BinaryMatroid {
            rep: self.rep.dual_representation(),
            ground: self.ground.clone(),
        }
    }

    pub fn is_loop(&self, e: Element) -> Result<bool> {
        let k = self.index_of(e)?;
        Ok(self.rep.is_zero_column(k))
    }

    pub fn is_coloop(&self, e: Element) -> Result<bool> {
        let k = self.index_of(e)?;
        let rest: Vec<usize> = (0..self.len()).filter(|&c| c != k).collect();
        let all: Vec<usize> = (0..self.len()).collect();
        Ok(self.rep.rank(&all)? == self.rep.rank(&rest)? + 1)
    }

    /// Cycle matroid of a multigraph: the vertex-edge incidence matrix over GF(2).
    pub fn from_graph(g: &Graph) -> Self {
        let mut m = Gf2Matrix::zeros(g.n, g.edges.len());
        for (e, &(u, v)) in g.edges.iter().enumerate() {
            if u != v {
                m.set(u, e, true);
                m.set(v, e, true);
            }
        }
        BinaryMatroid::new(m)
    }
}

/// Undirected multigraph; self-loops and parallel edges are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// `edges` use 0-based vertex indices.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::input(format!("edge ({u},{v}) outside {n} vertices")));
        }
        Ok(Graph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Number of connected components of `(V, S)` for the edge subset `mask`.
    pub fn components(&self, mask: u64) -> usize {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut comps = self.n;
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            if (mask >> k) & 1 == 1 {
                let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                if a != b {
                    parent[a] = b;
                    comps -= 1;
                }
            }
        }
        comps
    }

    /// `n m` header followed by `m` lines of 1-based `u v` pairs.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let header = lines.next().ok_or_else(|| Error::input("empty graph file"))?;
        let [n, m] = parse_usizes(header)?[..] else {
            return Err(Error::input(format!("bad graph header {header:?}")));
        };
        let mut edges = Vec::with_capacity(m);
        for k in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::input(format!("missing edge {}", k + 1)))?;
            let [u, v] = parse_usizes(line)?[..] else {
                return Err(Error::input(format!("bad edge line {line:?}")));
            };
            if u == 0 || v == 0 {
                return Err(Error::input("vertex indices are 1-based"));
            }
            edges.push((u - 1, v - 1));
        }
        if let Some(extra) = lines.next() {
            return Err(Error::input(format!("trailing content {extra:?}")));
        }
        Graph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn u12() -> BinaryMatroid {
        BinaryMatroid::new(Gf2Matrix::from_rows(2, &[[1u8, 1]]).unwrap())
    }

    #[test]
    fn rank_of_examples() {
        let lp = BinaryMatroid::new(Gf2Matrix::zeros(1, 1));
        assert_eq!(lp.rank_of(&[Element(0)]).unwrap(), 0);
        let m = BinaryMatroid::from_graph(&k3());
        assert_eq!(m.rank_of(m.ground()).unwrap(), 2);
        assert_eq!(m.rank_of(&[]).unwrap(), 0);
        assert!(m.rank_of(&[Element(9)]).is_err());
    }

    #[test]
    fn delete_examples() {
        let d = u12().delete(Element(0)).unwrap();
        assert_eq!(d.ground(), &[Element(1)]);
        assert_eq!(d.rank(), 1);
        let single = BinaryMatroid::new(Gf2Matrix::identity(1));
        assert!(single.delete(Element(0)).unwrap().is_empty());
        assert!(single.delete(Element(3)).is_err());
    }

    #[test]
    fn contract_examples() {
        let id = BinaryMatroid::new(Gf2Matrix::identity(2));
        let c = id.contract(Element(0)).unwrap();
        assert_eq!(c.ground(), &[Element(1)]);
        assert!(c.is_coloop(Element(1)).unwrap());

        let lp = BinaryMatroid::new(Gf2Matrix::from_rows(2, &[[0u8, 1]]).unwrap());
        let a = lp.contract(Element(0)).unwrap();
        let b = lp.delete(Element(0)).unwrap();
        assert_eq!(a.rank_of(a.ground()).unwrap(), b.rank_of(b.ground()).unwrap());

        let c = u12().contract(Element(0)).unwrap();
        assert!(c.is_loop(Element(1)).unwrap());
    }

    #[test]
    fn dual_examples() {
        let id = BinaryMatroid::new(Gf2Matrix::identity(2));
        let d = id.dual();
        assert!(d.is_loop(Element(0)).unwrap() && d.is_loop(Element(1)).unwrap());
        let d = u12().dual();
        for mask in 0..4u64 {
            assert_eq!(d.rank_of_mask(mask), u12().rank_of_mask(mask));
        }
    }

    #[test]
    fn loop_and_coloop() {
        let lp = BinaryMatroid::new(Gf2Matrix::zeros(2, 1));
        assert!(lp.is_loop(Element(0)).unwrap());
        assert!(!lp.is_coloop(Element(0)).unwrap());
        let id = BinaryMatroid::new(Gf2Matrix::identity(2));
        assert!(id.is_coloop(Element(1)).unwrap());
        let u = u12();
        for e in [Element(0), Element(1)] {
            assert!(!u.is_loop(e).unwrap() && !u.is_coloop(e).unwrap());
        }
    }

    #[test]
    fn graph_examples() {
        let self_loop = Graph::new(1, vec![(0, 0)]).unwrap();
        assert!(BinaryMatroid::from_graph(&self_loop).is_loop(Element(0)).unwrap());
        let par = Graph::new(2, vec![(0, 1), (0, 1)]).unwrap();
        let m = BinaryMatroid::from_graph(&par);
        assert_eq!(m.rep().column(0), m.rep().column(1));
        assert_eq!(m.rank(), 1);
        assert_eq!(k3().components(0b011), 1);
        assert_eq!(k3().components(0), 3);
    }

    #[test]
    fn graph_text() {
        let g = Graph::parse("3 3\n1 2\n2 3\n# c\n1 3\n").unwrap();
        assert_eq!(g, k3());
        assert_eq!(Graph::parse(&g.to_text()).unwrap(), g);
        assert!(Graph::parse("2 1\n1 3\n").is_err());
        assert!(Graph::parse("2 1\n0 1\n").is_err());
    }

    #[test]
    fn ground_ids_must_be_unique() {
        let r = BinaryMatroid::with_ground(Gf2Matrix::zeros(1, 2), vec![Element(1), Element(1)]);
        assert!(r.is_err());
    }
}
