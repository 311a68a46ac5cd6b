//! Binary linear codes given by generating matrices, their weight
//! enumerators, and the exact identities tying them to Z̃ and to the cycle
//! index of a permutation group.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;
use crate::groups::{self, code_to_group};
use crate::matroid::BinaryMatroid;
use crate::partition::tutte_tilde_const;
use crate::rational::{int, pow2, powi, Rational};

/// Codewords are enumerated up to this many rows.
pub const MAX_CODE_ROWS: usize = 26;

/// A GF(2) matrix with linearly independent rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingMatrix {
    m: Gf2Matrix,
}

impl GeneratingMatrix {
    pub fn new(m: Gf2Matrix) -> Result<Self> {
        let rank = m.full_rank();
        if rank != m.rows() {
            return Err(Error::input(format!(
                "rows are dependent: rank {rank} with {} rows",
                m.rows()
            )));
        }
        Ok(GeneratingMatrix { m })
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(Gf2Matrix::parse(text)?)
    }

    pub fn matrix(&self) -> &Gf2Matrix {
        &self.m
    }

    /// Number of rows, the code dimension.
    pub fn r(&self) -> usize {
        self.m.rows()
    }

    /// Number of columns, the code length.
    pub fn c(&self) -> usize {
        self.m.cols()
    }

    pub fn matroid(&self) -> BinaryMatroid {
        BinaryMatroid::new(self.m.clone())
    }

    /// Hamming weight of the codeword `Σ_i m_i · row_i`.
    pub fn codeword_weight(&self, mask: u64) -> usize {
        let mut acc = vec![0u64; self.c().div_ceil(64)];
        for i in 0..self.r() {
            if (mask >> i) & 1 == 1 {
                for (a, w) in acc.iter_mut().zip(self.m.row_words(i)) {
                    *a ^= w;
                }
            }
        }
        acc.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// `A_k` = number of codewords of weight `k`, for `k = 0..=c`.
pub fn weight_distribution(g: &GeneratingMatrix) -> Result<Vec<u64>> {
    if g.r() > MAX_CODE_ROWS {
        return Err(Error::size(format!(
            "{} rows exceed the codeword limit of {MAX_CODE_ROWS}",
            g.r()
        )));
    }
    let mut dist = vec![0u64; g.c() + 1];
    let mut acc = vec![0u64; g.c().div_ceil(64)];
    let weight = |a: &[u64]| a.iter().map(|w| w.count_ones() as usize).sum::<usize>();
    dist[0] += 1;
    for i in 1u64..1 << g.r() {
        let bit = i.trailing_zeros() as usize;
        for (a, w) in acc.iter_mut().zip(g.m.row_words(bit)) {
            *a ^= w;
        }
        dist[weight(&acc)] += 1;
    }
    Ok(dist)
}

/// `W_M(λ) = Σ_w λ^‖w‖` over the codewords.
pub fn weight_enumerator(g: &GeneratingMatrix, lambda: &Rational) -> Result<Rational> {
    let dist = weight_distribution(g)?;
    Ok(dist
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, &a| acc * lambda + int(a as i64)))
}

/// Both sides of an exact identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub lhs: Rational,
    pub rhs: Rational,
}

impl IdentityCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `W_M(λ)` against `λ^c · 2^r · Z̃(M; 2, 1/λ - 1)`, the latter by subset
/// enumeration over the columns.
pub fn greene_check(g: &GeneratingMatrix, lambda: &Rational) -> Result<IdentityCheck> {
    if lambda.is_zero() {
        return Err(Error::parameter("λ must be nonzero"));
    }
    let lhs = weight_enumerator(g, lambda)?;
    let gamma = lambda.recip() - Rational::one();
    let rhs = powi(lambda, g.c() as i64)
        * pow2(g.r() as i64)
        * tutte_tilde_const(&g.matroid(), &int(2), &gamma)?;
    Ok(IdentityCheck { lhs, rhs })
}

/// Outcome of comparing a code's weight enumerator with the cycle index of
/// its group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCodeCheck {
    /// `|G| · Z_CI(G; x)`.
    pub lhs: Rational,
    /// `x^{2c} · W_M(1/x)`.
    pub rhs: Rational,
    pub group_order: u64,
    /// Whether `|G| = 2^r`.
    pub order_ok: bool,
}

impl GroupCodeCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs && self.order_ok
    }
}

/// Builds the group of `g`, enumerates it by closure and compares
/// `|G|·Z_CI(G;x)` with `x^{2c}·W_M(1/x)`.
pub fn group_code_check(g: &GeneratingMatrix, x: &Rational, cap: usize) -> Result<GroupCodeCheck> {
    if !x.is_positive() {
        return Err(Error::parameter("x must be positive"));
    }
    let group = code_to_group(g)?;
    let elements = group.enumerate(cap)?;
    let order = elements.len() as u64;
    let ci = groups::cycle_index_of(&elements, x);
    let lhs = ci * int(order as i64);
    let rhs = powi(x, 2 * g.c() as i64) * weight_enumerator(g, &x.recip())?;
    Ok(GroupCodeCheck {
        lhs,
        rhs,
        group_order: order,
        order_ok: g.r() < 64 && order == 1u64 << g.r(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn gm(cols: usize, rows: &[&[u8]]) -> GeneratingMatrix {
        GeneratingMatrix::new(Gf2Matrix::from_rows(cols, rows).unwrap()).unwrap()
    }

    #[test]
    fn distributions() {
        assert_eq!(weight_distribution(&gm(2, &[&[1, 1]])).unwrap(), vec![1, 0, 1]);
        let id = GeneratingMatrix::new(Gf2Matrix::identity(2)).unwrap();
        assert_eq!(weight_distribution(&id).unwrap(), vec![1, 2, 1]);
        let empty = GeneratingMatrix::new(Gf2Matrix::zeros(0, 0)).unwrap();
        assert_eq!(weight_distribution(&empty).unwrap(), vec![1]);
    }

    #[test]
    fn enumerator_examples() {
        let l = frac(1, 3);
        let w = weight_enumerator(&gm(2, &[&[1, 1]]), &l).unwrap();
        assert_eq!(w, Rational::one() + &l * &l);
        let id = GeneratingMatrix::new(Gf2Matrix::identity(2)).unwrap();
        assert_eq!(weight_enumerator(&id, &l).unwrap(), frac(16, 9));
        assert_eq!(weight_enumerator(&id, &int(1)).unwrap(), int(4));
    }

    #[test]
    fn rejects_dependent_rows() {
        let m = Gf2Matrix::from_rows(2, &[[1u8, 1], [1, 1]]).unwrap();
        assert!(GeneratingMatrix::new(m).is_err());
    }

    #[test]
    fn greene_examples() {
        let c = greene_check(&gm(2, &[&[1, 1]]), &frac(1, 2)).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone()), (frac(5, 4), frac(5, 4)));
        let id = GeneratingMatrix::new(Gf2Matrix::identity(2)).unwrap();
        let c = greene_check(&id, &frac(1, 3)).unwrap();
        assert!(c.holds() && c.lhs == frac(16, 9));
        assert!(greene_check(&id, &int(1)).unwrap().holds());
        assert!(greene_check(&id, &int(0)).is_err());
    }

    #[test]
    fn group_code_examples() {
        let c = group_code_check(&gm(2, &[&[1, 1]]), &int(2), 1000).unwrap();
        assert_eq!((c.lhs.clone(), c.rhs.clone(), c.group_order), (int(20), int(20), 2));
        assert!(c.holds());
        let id = GeneratingMatrix::new(Gf2Matrix::identity(2)).unwrap();
        for x in [int(2), int(3)] {
            let c = group_code_check(&id, &x, 1000).unwrap();
            let expect = powi(&x, 4) + int(2) * powi(&x, 3) + powi(&x, 2);
            assert_eq!(c.lhs, expect);
            assert!(c.holds());
        }
        let empty = GeneratingMatrix::new(Gf2Matrix::zeros(0, 3)).unwrap();
        let c = group_code_check(&empty, &int(3), 10).unwrap();
        assert_eq!(c.lhs, int(729));
        assert!(c.holds());
    }
}
