//! Exact evaluators for the multivariate Tutte polynomial and the partition
//! functions that specialize it.
//!
//! Every evaluator enumerates its defining sum directly: subsets of the
//! ground set for the Tutte forms, spin assignments for the Potts forms.
//! Large enumerations are split across rayon workers by fixing a prefix of
//! the choices; partial sums are exact, so the result does not depend on how
//! the work is divided.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, XorBasis};
use crate::hypergraph::Hypergraph;
use crate::interval::{pow2_ratio, Interval};
use crate::matroid::{BinaryMatroid, Element, Graph};
use crate::rational::{self, powi, Rational};
use crate::weights::WeightMap;

/// Largest ground set enumerated subset by subset.
pub const MAX_SUBSET_ELEMENTS: usize = 28;
/// Largest number of binary spins enumerated configuration by configuration.
pub const MAX_SPIN_BITS: usize = 26;
/// Largest rank accepted by [`sat_spectrum`].
pub const MAX_SPECTRUM_RANK: usize = 32;

const PAR_SPLIT_BITS: usize = 6;
const PAR_THRESHOLD: usize = 16;

fn subset_budget(n: usize) -> Result<()> {
    if n > MAX_SUBSET_ELEMENTS {
        return Err(Error::size(format!(
            "{n} elements exceed the subset enumeration limit of {MAX_SUBSET_ELEMENTS}"
        )));
    }
    Ok(())
}

/// `counts[s][k]` = number of subsets of size `s` and rank `k`.
pub fn rank_size_profile(m: &BinaryMatroid) -> Result<Vec<Vec<u64>>> {
    let n = m.len();
    subset_budget(n)?;
    let cols = m.rep().columns();
    let rows = m.rep().rows();
    let width = rows.min(n) + 1;
    let run = |prefix: u64, split: usize| {
        let mut counts = vec![vec![0u64; width]; n + 1];
        let mut basis = XorBasis::new(rows);
        let mut size = 0;
        for (k, col) in cols.iter().enumerate().take(split) {
            if (prefix >> k) & 1 == 1 {
                basis.insert(col);
                size += 1;
            }
        }
        profile_dfs(&cols, split, &mut basis, size, &mut counts);
        counts
    };
    let merge = |mut a: Vec<Vec<u64>>, b: Vec<Vec<u64>>| {
        for (ra, rb) in a.iter_mut().zip(b) {
            for (x, y) in ra.iter_mut().zip(rb) {
                *x += y;
            }
        }
        a
    };
    if n >= PAR_THRESHOLD {
        let split = PAR_SPLIT_BITS;
        Ok((0..1u64 << split)
            .into_par_iter()
            .map(|p| run(p, split))
            .reduce(|| vec![vec![0u64; width]; n + 1], merge))
    } else {
        Ok(run(0, 0))
    }
}

fn profile_dfs(
    cols: &[Vec<u64>],
    idx: usize,
    basis: &mut XorBasis,
    size: usize,
    counts: &mut [Vec<u64>],
) {
    if idx == cols.len() {
        counts[size][basis.len()] += 1;
        return;
    }
    profile_dfs(cols, idx + 1, basis, size, counts);
    if basis.insert(&cols[idx]) {
        profile_dfs(cols, idx + 1, basis, size + 1, counts);
        basis.pop();
    } else {
        profile_dfs(cols, idx + 1, basis, size + 1, counts);
    }
}

/// Splits each weight into numerator and denominator so that subset
/// products become integer products over a common denominator.
struct IntegerWeights {
    numer: Vec<BigInt>,
    denom: Vec<BigInt>,
    common: BigInt,
}

impl IntegerWeights {
    fn new(ws: &[Rational]) -> Self {
        let numer = ws.iter().map(|w| w.numer().clone()).collect();
        let denom: Vec<BigInt> = ws.iter().map(|w| w.denom().clone()).collect();
        let common = denom.iter().fold(BigInt::one(), |a, d| a * d);
        IntegerWeights {
            numer,
            denom,
            common,
        }
    }
}

/// `sums[k]` = Σ over subsets `S` of rank `k` of Π_{e∈S} w_e.
pub fn weighted_rank_sums(m: &BinaryMatroid, w: &WeightMap) -> Result<Vec<Rational>> {
    let n = m.len();
    subset_budget(n)?;
    let ws = w.column_weights(m)?;
    let iw = IntegerWeights::new(&ws);
    let cols = m.rep().columns();
    let rows = m.rep().rows();
    let width = rows.min(n) + 1;
    let run = |prefix: u64, split: usize| {
        let mut sums = vec![BigInt::zero(); width];
        let mut basis = XorBasis::new(rows);
        let mut prod = BigInt::one();
        for (k, col) in cols.iter().enumerate().take(split) {
            if (prefix >> k) & 1 == 1 {
                basis.insert(col);
                prod *= &iw.numer[k];
            } else {
                prod *= &iw.denom[k];
            }
        }
        if !prod.is_zero() {
            weighted_dfs(&cols, &iw, split, &mut basis, prod, &mut sums);
        }
        sums
    };
    let merge = |a: Vec<BigInt>, b: Vec<BigInt>| a.into_iter().zip(b).map(|(x, y)| x + y).collect();
    let sums = if n >= PAR_THRESHOLD {
        let split = PAR_SPLIT_BITS;
        (0..1u64 << split)
            .into_par_iter()
            .map(|p| run(p, split))
            .reduce(|| vec![BigInt::zero(); width], merge)
    } else {
        run(0, 0)
    };
    Ok(sums
        .into_iter()
        .map(|s| Rational::new(s, iw.common.clone()))
        .collect())
}

fn weighted_dfs(
    cols: &[Vec<u64>],
    iw: &IntegerWeights,
    idx: usize,
    basis: &mut XorBasis,
    prod: BigInt,
    sums: &mut [BigInt],
) {
    if idx == cols.len() {
        sums[basis.len()] += prod;
        return;
    }
    let out = &prod * &iw.denom[idx];
    weighted_dfs(cols, iw, idx + 1, basis, out, sums);
    if iw.numer[idx].is_zero() {
        return;
    }
    let inc = prod * &iw.numer[idx];
    if basis.insert(&cols[idx]) {
        weighted_dfs(cols, iw, idx + 1, basis, inc, sums);
        basis.pop();
    } else {
        weighted_dfs(cols, iw, idx + 1, basis, inc, sums);
    }
}

/// Multivariate Tutte polynomial Σ_S q^{-r(S)} Π_{e∈S} γ_e by subset enumeration.
pub fn tutte_tilde(m: &BinaryMatroid, q: &Rational, w: &WeightMap) -> Result<Rational> {
    if q.is_zero() {
        return Err(Error::parameter("q must be nonzero"));
    }
    if let Some(gamma) = w.constant_on(m.ground()) {
        let counts = rank_size_profile(m)?;
        let mut total = Rational::zero();
        for (s, row) in counts.iter().enumerate() {
            let gs = powi(&gamma, s as i64);
            for (k, &c) in row.iter().enumerate() {
                if c != 0 {
                    total += &gs * powi(q, -(k as i64)) * Rational::from_integer(c.into());
                }
            }
        }
        return Ok(total);
    }
    let sums = weighted_rank_sums(m, w)?;
    Ok(sums
        .iter()
        .enumerate()
        .map(|(k, s)| s * powi(q, -(k as i64)))
        .sum())
}

/// Constant-weight convenience wrapper around [`tutte_tilde`].
pub fn tutte_tilde_const(m: &BinaryMatroid, q: &Rational, gamma: &Rational) -> Result<Rational> {
    tutte_tilde(m, q, &WeightMap::constant(m.ground(), gamma))
}

/// Classical two-variable Tutte polynomial Σ_A (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}.
pub fn tutte_t(m: &BinaryMatroid, x: &Rational, y: &Rational) -> Result<Rational> {
    let counts = rank_size_profile(m)?;
    let full = m.rank();
    let (xm, ym) = (x - Rational::one(), y - Rational::one());
    let mut total = Rational::zero();
    for (s, row) in counts.iter().enumerate() {
        for (k, &c) in row.iter().enumerate() {
            if c != 0 {
                total += powi(&xm, (full - k) as i64)
                    * powi(&ym, (s - k) as i64)
                    * Rational::from_integer(c.into());
            }
        }
    }
    Ok(total)
}

/// Random-cluster sum Σ_S q^{κ(V,S)} Π_{e∈S} γ_e over edge subsets of a multigraph.
///
/// Edge `k` is weighted by `w[Element(k)]`.
pub fn random_cluster_graph(g: &Graph, q: &Rational, w: &WeightMap) -> Result<Rational> {
    let m = g.edges().len();
    subset_budget(m)?;
    let ground: Vec<Element> = (0..m).map(Element).collect();
    let ws = w.for_elements(&ground)?;
    let mut by_components = vec![Rational::zero(); g.n() + 1];
    for mask in 0..1u64 << m {
        let prod: Rational = (0..m)
            .filter(|k| (mask >> k) & 1 == 1)
            .fold(Rational::one(), |acc, k| acc * &ws[k]);
        if !prod.is_zero() {
            by_components[g.components(mask)] += prod;
        }
    }
    Ok(by_components
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(k, s)| s * powi(q, k as i64))
        .sum())
}

fn spin_budget(bits: usize) -> Result<()> {
    if bits > MAX_SPIN_BITS {
        return Err(Error::size(format!(
            "2^{bits} spin configurations exceed the limit of 2^{MAX_SPIN_BITS}"
        )));
    }
    Ok(())
}

/// Potts partition function Σ_σ Π_e (1 + γ_e δ_e(σ)) of a represented matroid.
///
/// Only `q ∈ {1, 2}` is meaningful for a GF(2) representation.
pub fn potts_matroid(m: &BinaryMatroid, q: u32, w: &WeightMap) -> Result<Rational> {
    let ws = w.column_weights(m)?;
    match q {
        0 => Err(Error::parameter("q must be a positive integer")),
        1 => Ok(ws.iter().fold(Rational::one(), |a, g| a * (g + Rational::one()))),
        2 => ising_enumerate(m.rep(), &ws),
        _ => Err(Error::parameter(format!(
            "q = {q} needs a GF({q}) representation; binary matroids support q in {{1, 2}}"
        ))),
    }
}

/// Ising partition function: [`potts_matroid`] at `q = 2`.
pub fn ising(m: &BinaryMatroid, w: &WeightMap) -> Result<Rational> {
    potts_matroid(m, 2, w)
}

fn ising_enumerate(rep: &Gf2Matrix, ws: &[Rational]) -> Result<Rational> {
    let rows = rep.rows();
    spin_budget(rows)?;
    let factors: Vec<Rational> = ws.iter().map(|g| g + Rational::one()).collect();
    let iw = IntegerWeights::new(&factors);
    let cols = rep.cols();
    let mut parity = vec![0u64; cols.div_ceil(64)];
    let mut total = BigInt::zero();
    for i in 0u64..1 << rows {
        if i > 0 {
            let bit = i.trailing_zeros() as usize;
            for (p, r) in parity.iter_mut().zip(rep.row_words(bit)) {
                *p ^= r;
            }
        }
        let mut prod = BigInt::one();
        for e in 0..cols {
            if (parity[e / 64] >> (e % 64)) & 1 == 0 {
                prod *= &iw.numer[e];
            } else {
                prod *= &iw.denom[e];
            }
        }
        total += prod;
    }
    Ok(Rational::new(total, iw.common))
}

/// Distribution of the number of satisfied column equations over all spin
/// assignments: `coeffs[k] = #{σ : sat(σ) = k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatSpectrum {
    coeffs: Vec<BigUint>,
}

impl SatSpectrum {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        SatSpectrum { coeffs }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Σ_k coeffs[k] · z^k exactly.
    pub fn eval(&self, z: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + Rational::from_integer(BigInt::from(c.clone()));
        }
        acc
    }

    /// Space-separated coefficients, constant term first.
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        parts.join(" ")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let coeffs = text
            .split_whitespace()
            .map(|t| {
                t.parse::<BigUint>()
                    .map_err(|_| Error::input(format!("bad spectrum coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SatSpectrum { coeffs })
    }
}

/// Sat-spectrum of a represented matroid.
///
/// The count is taken over a row basis by Gray-code enumeration (one row XOR
/// per step) and scaled by `2^(rows - rank)`, since `sat(σ)` depends only on
/// the codeword `σᵀM`.
pub fn sat_spectrum(m: &BinaryMatroid) -> Result<SatSpectrum> {
    let rep = m.rep();
    let basis = rep.row_basis();
    let rank = basis.rows();
    if rank > MAX_SPECTRUM_RANK {
        return Err(Error::size(format!(
            "rank {rank} exceeds the spectrum limit of {MAX_SPECTRUM_RANK}"
        )));
    }
    let cols = rep.cols();
    let stride = cols.div_ceil(64);
    let run = |start: u64, end: u64| {
        let mut counts = vec![0u64; cols + 1];
        let mut parity = vec![0u64; stride];
        let gray = start ^ (start >> 1);
        for b in 0..rank {
            if (gray >> b) & 1 == 1 {
                for (p, r) in parity.iter_mut().zip(basis.row_words(b)) {
                    *p ^= r;
                }
            }
        }
        let unsat = |p: &[u64]| p.iter().map(|w| w.count_ones() as usize).sum::<usize>();
        counts[cols - unsat(&parity)] += 1;
        for i in start + 1..end {
            let bit = i.trailing_zeros() as usize;
            for (p, r) in parity.iter_mut().zip(basis.row_words(bit)) {
                *p ^= r;
            }
            counts[cols - unsat(&parity)] += 1;
        }
        counts
    };
    let total = 1u64 << rank;
    let counts = if rank >= 18 {
        let chunks = 1u64 << 8;
        let len = total / chunks;
        (0..chunks)
            .into_par_iter()
            .map(|c| run(c * len, (c + 1) * len))
            .reduce(
                || vec![0u64; cols + 1],
                |a, b| a.into_iter().zip(b).map(|(x, y)| x + y).collect(),
            )
    } else {
        run(0, total)
    };
    let scale = BigUint::one() << (rep.rows() - rank);
    let mut coeffs: Vec<BigUint> = counts.into_iter().map(|c| BigUint::from(c) * &scale).collect();
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    Ok(SatSpectrum { coeffs })
}

/// Point at which a spectrum is evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpectrumPoint {
    Rational(Rational),
    /// `2^(num/den)`.
    Pow2 { num: u64, den: u64 },
}

impl SpectrumPoint {
    /// `2^(2/n)`, the spin factor `1 + γ` for γ = 2^(2/n) - 1.
    pub fn two_to_two_over(n: u64) -> Self {
        SpectrumPoint::Pow2 { num: 2, den: n }
    }
}

/// Rigorous enclosure of Σ_k coeffs[k] · z^k.
///
/// Rational points give a point interval. For `z = 2^(a/b)` the terms are
/// grouped by the residue of `k·a mod b`: the residue-0 group is exact and
/// each other group is one rational times an enclosed root of two, so the
/// result is exact whenever only integral powers of two occur. The width is
/// at most `2^-precision_bits · max(1, value)`.
pub fn eval_spectrum_at(
    s: &SatSpectrum,
    z: &SpectrumPoint,
    precision_bits: u32,
) -> Result<Interval> {
    if precision_bits < 16 {
        return Err(Error::parameter("precision must be at least 16 bits"));
    }
    match z {
        SpectrumPoint::Rational(r) => Ok(Interval::point(s.eval(r))),
        &SpectrumPoint::Pow2 { num, den } => {
            if den == 0 {
                return Err(Error::parameter("zero denominator in exponent"));
            }
            let mut groups = vec![BigUint::zero(); den as usize];
            for (k, c) in s.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let e = k as u64 * num;
                groups[(e % den) as usize] += c << (e / den) as usize;
            }
            let guard = precision_bits + 2;
            let mut acc = Interval::point(Rational::zero());
            for (r, g) in groups.into_iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                let coef = Rational::from_integer(BigInt::from(g));
                let term = if r == 0 {
                    Interval::point(coef)
                } else {
                    // relative width of the root enclosure is below 2^-guard
                    pow2_ratio(r as u64, den, guard + 1).scale(&coef)
                };
                acc = &acc + &term;
            }
            Ok(acc)
        }
    }
}

/// Hypergraph Potts sum Σ_σ Π_f (1 + γ_f δ(σ(f))) over `σ: V → [q]`.
///
/// Hyperedge `k` is weighted by `w[Element(k)]`.
pub fn hypergraph_potts(h: &Hypergraph, q: u32, w: &WeightMap) -> Result<Rational> {
    if q == 0 {
        return Err(Error::parameter("q must be a positive integer"));
    }
    let ground: Vec<Element> = (0..h.m()).map(Element).collect();
    let ws = w.for_elements(&ground)?;
    let configs = (q as f64).powi(h.n() as i32);
    if configs > (1u64 << MAX_SPIN_BITS) as f64 {
        return Err(Error::size(format!(
            "{q}^{} spin configurations exceed the enumeration limit",
            h.n()
        )));
    }
    let factors: Vec<Rational> = ws.iter().map(|g| g + Rational::one()).collect();
    let mut sigma = vec![0usize; h.n()];
    let mut total = Rational::zero();
    loop {
        let mut prod = Rational::one();
        for (f, fac) in h.hyperedges().iter().zip(&factors) {
            if f.iter().all(|&v| sigma[v] == sigma[f[0]]) {
                prod *= fac;
            }
        }
        total += prod;
        // mixed-radix increment
        let mut i = 0;
        loop {
            if i == sigma.len() {
                return Ok(total);
            }
            sigma[i] += 1;
            if sigma[i] < q as usize {
                break;
            }
            sigma[i] = 0;
            i += 1;
        }
    }
}

/// Z̃(M; 2, γ) for constant γ through the spectrum: 2^{-|V|} Σ_k coeffs[k] (1+γ)^k.
pub fn tutte_tilde_q2_by_spectrum(m: &BinaryMatroid, gamma: &Rational) -> Result<Rational> {
    let s = sat_spectrum(m)?;
    Ok(s.eval(&(gamma + Rational::one())) * rational::pow2(-(m.rep().rows() as i64)))
}

/// The multiple relating a matroid to its dual:
/// `Z̃(M;q,γ) = mult · Z̃(M*;q,{q/γ_e})` with `mult = q^{-r(E)} Π_e γ_e`.
///
/// Returns `(mult, dual weights)`. Every weight must be nonzero.
pub fn duality_multiple(m: &BinaryMatroid, q: &Rational, w: &WeightMap) -> Result<(Rational, WeightMap)> {
    if q.is_zero() {
        return Err(Error::parameter("q must be nonzero"));
    }
    let ws = w.column_weights(m)?;
    if ws.iter().any(Zero::is_zero) {
        return Err(Error::parameter("duality needs nonzero weights"));
    }
    let prod = ws.iter().fold(Rational::one(), |a, g| a * g);
    let mult = powi(q, -(m.rank() as i64)) * prod;
    let dual_w = WeightMap::from_values(m.ground(), ws.iter().map(|g| q / g).collect())?;
    Ok((mult, dual_w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn mat(cols: usize, rows: &[&[u8]]) -> BinaryMatroid {
        BinaryMatroid::new(Gf2Matrix::from_rows(cols, rows).unwrap())
    }

    fn k3() -> Graph {
        Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    fn cw(m: &BinaryMatroid, g: Rational) -> WeightMap {
        WeightMap::constant(m.ground(), &g)
    }

    #[test]
    fn tutte_tilde_examples() {
        let empty = BinaryMatroid::new(Gf2Matrix::zeros(2, 0));
        assert_eq!(tutte_tilde_const(&empty, &int(5), &int(3)).unwrap(), int(1));
        let lp = BinaryMatroid::new(Gf2Matrix::zeros(1, 1));
        assert_eq!(tutte_tilde_const(&lp, &int(2), &frac(2, 7)).unwrap(), frac(9, 7));
        let k3m = BinaryMatroid::from_graph(&k3());
        assert_eq!(tutte_tilde_const(&k3m, &int(2), &int(1)).unwrap(), frac(7, 2));
        assert!(matches!(
            tutte_tilde_const(&k3m, &int(0), &int(1)),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn non_constant_weights_match_constant_path() {
        let k3m = BinaryMatroid::from_graph(&k3());
        let mut w = cw(&k3m, int(1));
        let a = tutte_tilde(&k3m, &int(2), &w).unwrap();
        // perturb then restore through the weighted path
        w.insert(Element(0), frac(1, 1));
        let sums = weighted_rank_sums(&k3m, &w).unwrap();
        let b: Rational = sums
            .iter()
            .enumerate()
            .map(|(k, s)| s * powi(&int(2), -(k as i64)))
            .sum();
        assert_eq!(a, b);
    }

    #[test]
    fn tutte_t_examples() {
        let (x, y) = (frac(5, 3), frac(-2, 7));
        let coloop = BinaryMatroid::new(Gf2Matrix::identity(1));
        assert_eq!(tutte_t(&coloop, &x, &y).unwrap(), x);
        let lp = BinaryMatroid::new(Gf2Matrix::zeros(1, 1));
        assert_eq!(tutte_t(&lp, &x, &y).unwrap(), y);
        let k3m = BinaryMatroid::from_graph(&k3());
        // q = γ = 1: T = (q/γ)^r Z̃ = Z̃(K3; 1, 1) = 8 subsets weighted 1^{-r}
        assert_eq!(tutte_t(&k3m, &int(2), &int(2)).unwrap(), int(8));
        assert_eq!(tutte_tilde_const(&k3m, &int(1), &int(1)).unwrap(), int(8));
    }

    #[test]
    fn random_cluster_examples() {
        let q = frac(3, 2);
        let edgeless = Graph::new(4, vec![]).unwrap();
        assert_eq!(
            random_cluster_graph(&edgeless, &q, &WeightMap::new()).unwrap(),
            powi(&q, 4)
        );
        let g = k3();
        let w = WeightMap::constant(&[Element(0), Element(1), Element(2)], &int(1));
        assert_eq!(random_cluster_graph(&g, &int(2), &w).unwrap(), int(28));
        let e = Graph::new(2, vec![(0, 1)]).unwrap();
        let w = WeightMap::constant(&[Element(0)], &int(1));
        assert_eq!(random_cluster_graph(&e, &int(2), &w).unwrap(), int(6));
    }

    #[test]
    fn potts_examples() {
        let u = mat(2, &[&[1, 1]]);
        assert_eq!(potts_matroid(&u, 2, &cw(&u, int(1))).unwrap(), int(5));
        let empty = BinaryMatroid::new(Gf2Matrix::zeros(3, 0));
        assert_eq!(potts_matroid(&empty, 2, &WeightMap::new()).unwrap(), int(8));
        assert_eq!(potts_matroid(&empty, 1, &WeightMap::new()).unwrap(), int(1));
        let lp = BinaryMatroid::new(Gf2Matrix::zeros(1, 1));
        let g = frac(3, 5);
        assert_eq!(
            potts_matroid(&lp, 2, &cw(&lp, g.clone())).unwrap(),
            int(2) * (g + int(1))
        );
        assert!(matches!(potts_matroid(&u, 3, &cw(&u, int(1))), Err(Error::Parameter(_))));
        assert!(matches!(potts_matroid(&u, 0, &cw(&u, int(1))), Err(Error::Parameter(_))));
    }

    #[test]
    fn ising_examples() {
        let u = mat(2, &[&[1, 1]]);
        assert_eq!(ising(&u, &cw(&u, int(1))).unwrap(), int(5));
        assert_eq!(tutte_tilde_const(&u, &int(2), &int(1)).unwrap(), frac(5, 2));
        let k3m = BinaryMatroid::from_graph(&k3());
        assert_eq!(ising(&k3m, &cw(&k3m, int(1))).unwrap(), int(28));
        let empty = BinaryMatroid::new(Gf2Matrix::zeros(2, 0));
        assert_eq!(ising(&empty, &WeightMap::new()).unwrap(), int(4));
    }

    #[test]
    fn spectrum_examples() {
        let u = mat(2, &[&[1, 1]]);
        assert_eq!(sat_spectrum(&u).unwrap().to_text(), "1 0 1");
        let lp = BinaryMatroid::new(Gf2Matrix::zeros(1, 1));
        assert_eq!(sat_spectrum(&lp).unwrap().to_text(), "0 2");
        let id = BinaryMatroid::new(Gf2Matrix::identity(2));
        assert_eq!(sat_spectrum(&id).unwrap().to_text(), "1 2 1");
        // dependent rows: scaled by 2^(rows - rank)
        let dup = mat(2, &[&[1, 1], &[1, 1]]);
        assert_eq!(sat_spectrum(&dup).unwrap().to_text(), "2 0 2");
        let s = SatSpectrum::parse("1 0 1").unwrap();
        assert_eq!(s, sat_spectrum(&u).unwrap());
    }

    #[test]
    fn spectrum_evaluation_examples() {
        let s = SatSpectrum::parse("1 0 1").unwrap();
        let v = eval_spectrum_at(&s, &SpectrumPoint::two_to_two_over(2), 128).unwrap();
        assert_eq!(v, Interval::point(int(5)));
        let v = eval_spectrum_at(&s, &SpectrumPoint::two_to_two_over(4), 128).unwrap();
        assert_eq!(v, Interval::point(int(3)));
        let two_z = SatSpectrum::parse("0 2").unwrap();
        for bits in [16u32, 64, 128] {
            let v = eval_spectrum_at(&two_z, &SpectrumPoint::two_to_two_over(4), bits).unwrap();
            assert!(v.width() <= rational::pow2(-(bits as i64) + 2));
            // encloses 2√2: lo² <= 8 <= hi²
            assert!(v.lo() * v.lo() <= int(8) && v.hi() * v.hi() >= int(8));
        }
        let r = eval_spectrum_at(&s, &SpectrumPoint::Rational(frac(1, 2)), 32).unwrap();
        assert_eq!(r, Interval::point(frac(5, 4)));
        assert!(eval_spectrum_at(&s, &SpectrumPoint::Rational(int(1)), 8).is_err());
    }

    #[test]
    fn hypergraph_potts_examples() {
        let h = Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap();
        let w = WeightMap::constant(&[Element(0)], &int(1));
        assert_eq!(hypergraph_potts(&h, 2, &w).unwrap(), int(10));
        let e = Hypergraph::new(3, vec![]).unwrap();
        assert_eq!(hypergraph_potts(&e, 3, &WeightMap::new()).unwrap(), int(27));
        let two = Hypergraph::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let w = WeightMap::constant(&[Element(0), Element(1)], &int(1));
        assert_eq!(hypergraph_potts(&two, 2, &w).unwrap(), int(36));
    }

    #[test]
    fn duality_multiple_on_u12() {
        let u = mat(2, &[&[1, 1]]);
        let (q, g) = (frac(3, 2), frac(2, 5));
        let (mult, dw) = duality_multiple(&u, &q, &cw(&u, g.clone())).unwrap();
        let lhs = tutte_tilde_const(&u, &q, &g).unwrap();
        let rhs = mult * tutte_tilde(&u.dual(), &q, &dw).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn large_instances_hit_size_limits() {
        let big = BinaryMatroid::new(Gf2Matrix::zeros(1, MAX_SUBSET_ELEMENTS + 1));
        assert!(matches!(rank_size_profile(&big), Err(Error::Size(_))));
        let tall = BinaryMatroid::new(Gf2Matrix::zeros(MAX_SPIN_BITS + 1, 1));
        assert!(matches!(ising(&tall, &cw(&tall, int(1))), Err(Error::Size(_))));
    }

    #[test]
    fn parallel_split_agrees_with_sequential() {
        // 17 columns triggers the split path; compare with the spectrum route
        let mut rep = Gf2Matrix::zeros(4, 17);
        for e in 0..17 {
            for i in 0..4 {
                if (e * 7 + i * 3) % 5 < 2 {
                    rep.set(i, e, true);
                }
            }
        }
        let m = BinaryMatroid::new(rep);
        let g = frac(1, 3);
        let a = tutte_tilde_const(&m, &int(2), &g).unwrap();
        let b = tutte_tilde_q2_by_spectrum(&m, &g).unwrap();
        assert_eq!(a, b);
        let mut w = cw(&m, g.clone());
        w.insert(Element(3), frac(5, 7));
        let c = tutte_tilde(&m, &int(2), &w).unwrap();
        let d = ising(&m, &w).unwrap() * rational::pow2(-4);
        assert_eq!(c, d);
    }
}
