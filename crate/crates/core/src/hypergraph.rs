//! Hypergraphs whose hyperedges form a multiset of nonempty vertex sets.

use crate::error::{Error, Result};
use crate::gf2::{content_lines, parse_usizes};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    hyperedges: Vec<Vec<usize>>,
}

/// Outcome of a uniformity test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Uniformity {
    /// Every hyperedge has this many vertices.
    Uniform(usize),
    /// No hyperedges at all; uniform for every size.
    Vacuous,
    NotUniform,
}

impl Uniformity {
    pub fn size(self) -> Option<usize> {
        match self {
            Uniformity::Uniform(t) => Some(t),
            _ => None,
        }
    }
}

impl Hypergraph {
    /// Hyperedges use 0-based vertex indices; each is stored sorted and deduplicated.
    pub fn new(n: usize, hyperedges: Vec<Vec<usize>>) -> Result<Self> {
        let mut out = Vec::with_capacity(hyperedges.len());
        for (k, mut f) in hyperedges.into_iter().enumerate() {
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                return Err(Error::input(format!("hyperedge {} is empty", k + 1)));
            }
            if let Some(v) = f.iter().find(|&&v| v >= n) {
                return Err(Error::input(format!("vertex {v} outside {n} vertices")));
            }
            out.push(f);
        }
        Ok(Hypergraph {
            n,
            hyperedges: out,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    pub fn is_uniform(&self) -> Uniformity {
        let Some(first) = self.hyperedges.first() else {
            return Uniformity::Vacuous;
        };
        let t = first.len();
        if self.hyperedges.iter().all(|f| f.len() == t) {
            Uniformity::Uniform(t)
        } else {
            Uniformity::NotUniform
        }
    }

    /// Number of hyperedges on which `sigma` is constant.
    pub fn mono_count(&self, sigma: &[usize]) -> Result<usize> {
        if sigma.len() != self.n {
            return Err(Error::input(format!(
                "assignment covers {} of {} vertices",
                sigma.len(),
                self.n
            )));
        }
        Ok(self
            .hyperedges
            .iter()
            .filter(|f| f.iter().all(|&v| sigma[v] == sigma[f[0]]))
            .count())
    }

    /// `n m` header, then `m` lines of 1-based vertex indices.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let header = lines
            .next()
            .ok_or_else(|| Error::input("empty hypergraph file"))?;
        let [n, m] = parse_usizes(header)?[..] else {
            return Err(Error::input(format!("bad hypergraph header {header:?}")));
        };
        let mut edges = Vec::with_capacity(m);
        for k in 0..m {
            let line = lines
                .next()
                .ok_or_else(|| Error::input(format!("missing hyperedge {}", k + 1)))?;
            let vs = parse_usizes(line)?;
            if vs.contains(&0) {
                return Err(Error::input("vertex indices are 1-based"));
            }
            edges.push(vs.into_iter().map(|v| v - 1).collect());
        }
        if let Some(extra) = lines.next() {
            return Err(Error::input(format!("trailing content {extra:?}")));
        }
        Hypergraph::new(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.n, self.m());
        for f in &self.hyperedges {
            let vs: Vec<String> = f.iter().map(|v| (v + 1).to_string()).collect();
            s.push_str(&vs.join(" "));
            s.push('\n');
        }
        s
    }
}
