//! The randomized hypergraph-to-matroid reduction, the constant-weight
//! evaluator it targets, and the weight-shift pipeline that moves a constant
//! weight onto an available one through series-parallel plans.
//!
//! Each hyperedge `f` of a t-uniform hypergraph becomes `N` columns, each the
//! indicator of a uniformly random even subset of `f`. A spin assignment
//! constant on `f` satisfies all of them; any other assignment satisfies each
//! with probability 1/2. At weight `γ = 2^(2/N) - 1` the Ising sum of the
//! result then tracks `2^m · Z_Potts(H; 2, 1)` up to a factor `e^(±ε)` with
//! good probability once `N` is large enough.

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gadgets::{apply_plan, synthesize_in_range, GadgetPlan};
use crate::gf2::Gf2Matrix;
use crate::hypergraph::{Hypergraph, Uniformity};
use crate::interval::{self, Interval};
use crate::matroid::BinaryMatroid;
use crate::partition::{
    eval_spectrum_at, hypergraph_potts, sat_spectrum, tutte_tilde_const, SatSpectrum, SpectrumPoint,
};
use crate::rational::{self, int, Rational};
use crate::weights::WeightMap;

/// Largest vertex count `verify_reduction` accepts (2^n spin sums).
pub const MAX_VERIFY_VERTICES: usize = 20;
/// Largest column count `verify_reduction` accepts.
pub const MAX_VERIFY_COLUMNS: u64 = 1 << 20;

/// Parameters of one reduction: accuracy `ε`, `δ = ε/(m ln 2)`, column
/// multiplicity `N` and the seed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionParams {
    epsilon: Rational,
    delta: Option<Interval>,
    n_columns: u64,
    seed: u64,
    heuristic: bool,
}

impl ReductionParams {
    /// `N` from [`choose_n`].
    pub fn automatic(h: &Hypergraph, epsilon: Rational, seed: u64) -> Result<Self> {
        let n_columns = choose_n(h.n().max(1), h.m().max(1), &epsilon)?;
        Self::build(h, epsilon, n_columns, seed, false)
    }

    /// A caller-supplied `N`; flagged heuristic when it is below [`choose_n`].
    pub fn with_columns(h: &Hypergraph, epsilon: Rational, n_columns: u64, seed: u64) -> Result<Self> {
        let auto = choose_n(h.n().max(1), h.m().max(1), &epsilon)?;
        Self::build(h, epsilon, n_columns, seed, n_columns < auto)
    }

    fn build(h: &Hypergraph, epsilon: Rational, n_columns: u64, seed: u64, heuristic: bool) -> Result<Self> {
        check_epsilon(&epsilon)?;
        if n_columns == 0 {
            return Err(Error::parameter("N must be positive"));
        }
        let delta = (h.m() > 0).then(|| {
            interval::ln2(96)
                .scale(&int(h.m() as i64))
                .recip()
                .scale(&epsilon)
        });
        Ok(ReductionParams {
            epsilon,
            delta,
            n_columns,
            seed,
            heuristic,
        })
    }

    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }

    /// `ε/(m ln 2)`; absent for an edgeless hypergraph.
    pub fn delta(&self) -> Option<&Interval> {
        self.delta.as_ref()
    }

    pub fn n_columns(&self) -> u64 {
        self.n_columns
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// True when `N` is below the bound that carries the accuracy guarantee.
    pub fn heuristic(&self) -> bool {
        self.heuristic
    }
}

fn check_epsilon(epsilon: &Rational) -> Result<()> {
    if !epsilon.is_positive() || epsilon > &Rational::one() {
        return Err(Error::parameter("ε must lie in (0, 1]"));
    }
    Ok(())
}

/// Smallest integer `N ≥ 6m²(n + ln 16m)/ε²`.
///
/// The logarithm is enclosed and refined until both ends of the bound round
/// up to the same integer.
pub fn choose_n(n: usize, m: usize, epsilon: &Rational) -> Result<u64> {
    if n == 0 || m == 0 {
        return Err(Error::parameter("n and m must be at least 1"));
    }
    check_epsilon(epsilon)?;
    let k = int(6 * (m as i64) * (m as i64)) / (epsilon * epsilon);
    let log_arg = int(16 * m as i64);
    let mut bits = 64;
    loop {
        let l = interval::ln(&log_arg, bits);
        let lo = (&k * (int(n as i64) + l.lo())).ceil();
        let hi = (&k * (int(n as i64) + l.hi())).ceil();
        if lo == hi || bits >= 4096 {
            return hi
                .to_integer()
                .to_u64()
                .ok_or_else(|| Error::size("N does not fit in 64 bits"));
        }
        bits *= 2;
    }
}

/// Indicator over `n` vertices of a uniformly random even subset of `f`.
///
/// The first `|f| - 1` memberships are fair coins; the last fixes the parity.
pub fn sample_even_subset_column<R: Rng + ?Sized>(f: &[usize], n: usize, rng: &mut R) -> Result<Vec<bool>> {
    if f.len() < 2 {
        return Err(Error::input("even-subset columns need hyperedges of size at least 2"));
    }
    let mut col = vec![false; n];
    let mut parity = false;
    for &v in &f[..f.len() - 1] {
        let bit: bool = rng.gen();
        col[v] = bit;
        parity ^= bit;
    }
    col[f[f.len() - 1]] = parity;
    Ok(col)
}

/// Every even subset of `f` as an indicator over `n` vertices.
pub fn even_subsets(f: &[usize], n: usize) -> Vec<Vec<bool>> {
    let t = f.len();
    (0u64..1 << t)
        .filter(|mask| mask.count_ones() % 2 == 0)
        .map(|mask| {
            let mut col = vec![false; n];
            for (i, &v) in f.iter().enumerate() {
                col[v] = (mask >> i) & 1 == 1;
            }
            col
        })
        .collect()
}

/// Whether the GF(2) equation `Σ_{v ∈ col} σ_v = 0` holds.
pub fn column_satisfied(col: &[bool], sigma: &[bool]) -> bool {
    col.iter().zip(sigma).filter(|(c, s)| **c && **s).count() % 2 == 0
}

/// Even support inside `f` and nothing outside it.
pub fn column_respects_hyperedge(col: &[bool], f: &[usize]) -> bool {
    let inside = f.iter().filter(|&&v| col[v]).count();
    let total = col.iter().filter(|&&b| b).count();
    inside == total && inside % 2 == 0
}

fn column_rng(seed: u64, hyperedge: usize, column: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(hyperedge as u64);
    rng.set_word_pos(u128::from(column) << 32);
    rng
}

/// Builds the `n × (N·m)` matrix, hyperedge-major, and the hyperedge index of
/// every column.
pub fn hyper_to_matroid(h: &Hypergraph, params: &ReductionParams) -> Result<(BinaryMatroid, Vec<usize>)> {
    match h.is_uniform() {
        Uniformity::NotUniform => return Err(Error::input("hypergraph is not uniform")),
        Uniformity::Uniform(t) if t < 2 => {
            return Err(Error::input("hyperedges must have at least 2 vertices"))
        }
        _ => {}
    }
    let per = params.n_columns;
    let total = per
        .checked_mul(h.m() as u64)
        .filter(|&c| c <= usize::MAX as u64 / 64)
        .ok_or_else(|| Error::size("column count overflows"))? as usize;
    let mut rep = Gf2Matrix::zeros(h.n(), total);
    let mut tags = Vec::with_capacity(total);
    for (k, f) in h.hyperedges().iter().enumerate() {
        for i in 0..per {
            let mut rng = column_rng(params.seed, k, i);
            let col = sample_even_subset_column(f, h.n(), &mut rng)?;
            assert!(column_respects_hyperedge(&col, f), "column parity invariant broken");
            let j = tags.len();
            for (v, &b) in col.iter().enumerate() {
                if b {
                    rep.set(v, j, true);
                }
            }
            tags.push(k);
        }
    }
    Ok((BinaryMatroid::new(rep), tags))
}

/// Enclosure of Z̃(M; 2, γ) at constant `γ = 2^(2/N) - 1`, as
/// `2^-|V|` times the sat-spectrum at `2^(2/N)`. A point for `N ∈ {1, 2}`.
pub fn var_binary_tutte(m: &BinaryMatroid, n_columns: u64, precision_bits: u32) -> Result<Interval> {
    if n_columns == 0 {
        return Err(Error::parameter("N must be positive"));
    }
    let s = sat_spectrum(m)?;
    let z = eval_spectrum_at(&s, &SpectrumPoint::two_to_two_over(n_columns), precision_bits)?;
    Ok(z.scale(&rational::pow2(-(m.rep().rows() as i64))))
}

/// One reduction trial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialOutcome {
    pub seed: u64,
    /// Enclosure of `Z_Ising(M̂; γ)`.
    pub reduced: Interval,
    /// `reduced / target`.
    pub ratio: Interval,
    pub pass: bool,
}

#[derive(Serialize)]
struct TrialRecord<'a> {
    seed: u64,
    #[serde(rename = "N")]
    n: u64,
    ratio_lo: &'a str,
    ratio_hi: &'a str,
    pass: bool,
}

/// Outcome of repeated reduction trials on one hypergraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// `2^m · Z_Potts(H; 2, 1)`, exact.
    pub target: Rational,
    pub epsilon: Rational,
    pub n_columns: u64,
    pub heuristic: bool,
    /// Enclosure of `e^ε`.
    pub band: Interval,
    pub trials: Vec<TrialOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> usize {
        self.trials.iter().filter(|t| t.pass).count()
    }

    /// Failure budget of the construction itself.
    pub fn reduction_failure_budget() -> Rational {
        rational::frac(1, 8)
    }

    /// Failure budget left for the evaluator; zero here since evaluation is exact.
    pub fn oracle_failure_budget() -> Rational {
        Rational::zero()
    }

    /// Whether at least 3/4 of the trials pass.
    pub fn meets_three_quarters(&self) -> bool {
        4 * self.passed() >= 3 * self.trials.len()
    }

    /// One JSON object per trial with `seed`, `N`, `ratio_lo`, `ratio_hi`
    /// (decimal strings rounded outward) and `pass`.
    pub fn to_json_lines(&self, digits: usize) -> String {
        let mut out = String::new();
        for t in &self.trials {
            let lo = rational::to_decimal(t.ratio.lo(), digits, false);
            let hi = rational::to_decimal(t.ratio.hi(), digits, true);
            let rec = TrialRecord {
                seed: t.seed,
                n: self.n_columns,
                ratio_lo: &lo,
                ratio_hi: &hi,
                pass: t.pass,
            };
            out.push_str(&serde_json::to_string(&rec).expect("plain record"));
            out.push('\n');
        }
        out
    }
}

/// Whether `ratio` lies certainly inside `[e^-ε, e^ε]` given the enclosure
/// `band` of `e^ε`.
pub fn within_band(ratio: &Interval, band: &Interval) -> bool {
    ratio.lo() >= &band.lo().recip() && ratio.hi() <= band.lo()
}

/// Runs `trials` independent reductions and compares each against the exact
/// hypergraph Potts value. `n_columns = None` uses [`choose_n`].
pub fn verify_reduction(
    h: &Hypergraph,
    epsilon: &Rational,
    n_columns: Option<u64>,
    trials: usize,
    seed: u64,
    precision_bits: u32,
) -> Result<VerificationReport> {
    let params = match n_columns {
        Some(n) => ReductionParams::with_columns(h, epsilon.clone(), n, seed)?,
        None => ReductionParams::automatic(h, epsilon.clone(), seed)?,
    };
    if h.n() > MAX_VERIFY_VERTICES {
        return Err(Error::size(format!(
            "{} vertices exceed the verification limit of {MAX_VERIFY_VERTICES}",
            h.n()
        )));
    }
    if params.n_columns.saturating_mul(h.m() as u64) > MAX_VERIFY_COLUMNS {
        return Err(Error::size("too many columns for verification"));
    }
    let ones = WeightMap::constant(
        &(0..h.m()).map(crate::matroid::Element).collect::<Vec<_>>(),
        &Rational::one(),
    );
    let target = hypergraph_potts(h, 2, &ones)? * rational::pow2(h.m() as i64);
    let band = interval::exp(epsilon, precision_bits);
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    let seeds: Vec<u64> = (0..trials).map(|_| master.gen()).collect();
    let point = SpectrumPoint::two_to_two_over(params.n_columns);
    let outcomes = seeds
        .into_par_iter()
        .map(|s| {
            let p = ReductionParams { seed: s, ..params.clone() };
            let (m, _) = hyper_to_matroid(h, &p)?;
            let spectrum: SatSpectrum = sat_spectrum(&m)?;
            let reduced = eval_spectrum_at(&spectrum, &point, precision_bits)?;
            let ratio = reduced.scale(&target.recip());
            let pass = within_band(&ratio, &band);
            Ok(TrialOutcome {
                seed: s,
                reduced,
                ratio,
                pass,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport {
        target,
        epsilon: epsilon.clone(),
        n_columns: params.n_columns,
        heuristic: params.heuristic,
        band,
        trials: outcomes,
    })
}

/// Result of moving every element of a matroid from the constant weight
/// `γ' = 2^(2/N) - 1` (approximately) onto an available weight.
#[derive(Clone, Debug)]
pub struct PipelineReport {
    /// The extended matroid; every element carries `γ_avail`.
    pub matroid: BinaryMatroid,
    pub gamma_avail: Rational,
    /// Enclosure of `γ'`.
    pub gamma_target: Interval,
    /// The realized weight, inside `[γ' - π, γ']`.
    pub gamma_star: Rational,
    pub chi: Rational,
    /// Enclosure of `π = (χ/2)·γ'`.
    pub pi: Interval,
    pub c_gamma: Rational,
    pub plan: GadgetPlan,
    /// `prefactor · Z̃(M; 2, γ*) = Z̃(M̂; 2, γ_avail)`.
    pub prefactor: Rational,
    /// Result of the exact check of that identity, if the instance was small
    /// enough to evaluate.
    pub certificate: Option<bool>,
}

impl PipelineReport {
    /// Rigorous check that `γ*` lies in `[γ' - π, γ']`.
    pub fn gamma_star_in_target(&self) -> bool {
        let lo_bound = self.gamma_target.hi() - self.pi.lo();
        &self.gamma_star <= self.gamma_target.lo() && self.gamma_star >= lo_bound
    }
}

/// Subset enumeration is used for the certificate up to this many elements.
const CERT_SUBSET_LIMIT: usize = 22;
/// The spectrum is used beyond that, up to this rank.
const CERT_SPECTRUM_RANK: usize = 28;

/// Synthesizes `γ*` in `[γ' - π, γ']` with `χ = ε²/(4 C m² N)` and
/// `π = (χ/2)γ'`, where `m` is the number of elements of `matroid`, and
/// compiles the plan onto every element.
pub fn weight_shift_pipeline(
    matroid: &BinaryMatroid,
    n_columns: u64,
    gamma_avail: &Rational,
    epsilon: &Rational,
    c_gamma: &Rational,
    max_plan: usize,
    precision_bits: u32,
) -> Result<PipelineReport> {
    check_epsilon(epsilon)?;
    if n_columns == 0 {
        return Err(Error::parameter("N must be positive"));
    }
    if !gamma_avail.is_positive() || !c_gamma.is_positive() {
        return Err(Error::parameter("γ_avail and C must be positive"));
    }
    let q = int(2);
    let m = matroid.len().max(1) as i64;
    let chi = epsilon * epsilon / (c_gamma * int(4 * m * m) * int(n_columns as i64));
    let gamma_target = &interval::pow2_ratio(2, n_columns, precision_bits) - &Interval::point(Rational::one());
    let pi = gamma_target.scale(&(&chi / int(2)));
    let shrink = Rational::one() - &chi / int(2);
    let lo = gamma_target.hi() * &shrink;
    let hi = gamma_target.lo().clone();
    if lo > hi {
        return Err(Error::parameter("precision too low to separate the target interval"));
    }
    let plan = synthesize_in_range(&lo, &hi, gamma_avail, &q, max_plan)?;
    let gamma_star = plan.effective().clone();

    let mut ext = matroid.clone();
    let mut w = WeightMap::constant(matroid.ground(), &gamma_star);
    let mut prefactor = Rational::one();
    for &e in matroid.ground() {
        let (m2, w2, p) = apply_plan(&ext, &w, e, &plan)?;
        ext = m2;
        w = w2;
        prefactor *= p;
    }
    debug_assert!(w.iter().all(|(_, g)| g == gamma_avail));

    let certificate = if ext.len() <= CERT_SUBSET_LIMIT || ext.rank() <= CERT_SPECTRUM_RANK {
        let lhs = &prefactor * tutte_tilde_const(matroid, &q, &gamma_star)?;
        let rhs = if ext.len() <= CERT_SUBSET_LIMIT {
            tutte_tilde_const(&ext, &q, gamma_avail)?
        } else {
            crate::partition::tutte_tilde_q2_by_spectrum(&ext, gamma_avail)?
        };
        Some(lhs == rhs)
    } else {
        None
    };

    Ok(PipelineReport {
        matroid: ext,
        gamma_avail: gamma_avail.clone(),
        gamma_target,
        gamma_star,
        chi,
        pi,
        c_gamma: c_gamma.clone(),
        plan,
        prefactor,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn triangle() -> Hypergraph {
        Hypergraph::new(3, vec![vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn choose_n_examples() {
        assert_eq!(choose_n(4, 3, &frac(1, 2)).unwrap(), 1701);
        assert_eq!(choose_n(1, 1, &int(1)).unwrap(), 23);
        assert_eq!(choose_n(3, 1, &int(1)).unwrap(), 35);
        let a = choose_n(3, 2, &frac(1, 2)).unwrap();
        let b = choose_n(3, 2, &frac(1, 4)).unwrap();
        assert!(b >= 4 * a - 3);
        assert!(choose_n(3, 1, &int(2)).is_err());
        assert!(choose_n(0, 1, &int(1)).is_err());
    }

    #[test]
    fn sampled_columns_are_even_subsets() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = [0, 2, 3];
        let mut freq = std::collections::HashMap::new();
        for _ in 0..10_000 {
            let col = sample_even_subset_column(&f, 5, &mut rng).unwrap();
            assert!(column_respects_hyperedge(&col, &f));
            *freq.entry(col).or_insert(0u32) += 1;
        }
        assert_eq!(freq.len(), 4);
        let chi2: f64 = freq
            .values()
            .map(|&o| (o as f64 - 2500.0).powi(2) / 2500.0)
            .sum();
        // 3 degrees of freedom, p = 0.001
        assert!(chi2 < 16.27, "chi2 = {chi2}");
        assert!(sample_even_subset_column(&[1], 3, &mut rng).is_err());
    }

    #[test]
    fn half_of_even_subsets_hold_off_the_diagonal() {
        for t in [3usize, 4] {
            let f: Vec<usize> = (0..t).collect();
            let subsets = even_subsets(&f, t);
            assert_eq!(subsets.len(), 1 << (t - 1));
            for mask in 0u32..1 << t {
                let sigma: Vec<bool> = (0..t).map(|i| (mask >> i) & 1 == 1).collect();
                let ok = subsets.iter().filter(|c| column_satisfied(c, &sigma)).count();
                let mono = mask == 0 || mask == (1 << t) - 1;
                assert_eq!(ok, if mono { 1 << (t - 1) } else { 1 << (t - 2) });
            }
        }
    }

    #[test]
    fn construction_shape_and_determinism() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        let p = ReductionParams::with_columns(&h, int(1), 5, 99).unwrap();
        assert!(p.heuristic());
        let (m1, tags) = hyper_to_matroid(&h, &p).unwrap();
        let (m2, _) = hyper_to_matroid(&h, &p).unwrap();
        assert_eq!(m1, m2);
        assert_eq!((m1.rep().rows(), m1.len()), (4, 10));
        assert_eq!(tags, vec![0, 0, 0, 0, 0, 1, 1, 1, 1, 1]);
        for sigma in [[true; 4], [false; 4]] {
            for j in 0..m1.len() {
                let col: Vec<bool> = (0..4).map(|i| m1.rep().get(i, j)).collect();
                assert!(column_satisfied(&col, &sigma));
            }
        }
        let bad = Hypergraph::new(3, vec![vec![0, 1], vec![0, 1, 2]]).unwrap();
        assert!(hyper_to_matroid(&bad, &p).is_err());
    }

    #[test]
    fn single_column_supports() {
        let h = triangle();
        for seed in 0..20 {
            let p = ReductionParams::with_columns(&h, int(1), 1, seed).unwrap();
            let (m, _) = hyper_to_matroid(&h, &p).unwrap();
            let ones = (0..3).filter(|&i| m.rep().get(i, 0)).count();
            assert!(ones == 0 || ones == 2);
        }
    }

    #[test]
    fn var_binary_tutte_points() {
        let m = BinaryMatroid::new(Gf2Matrix::from_rows(2, &[[1u8, 1]]).unwrap());
        assert_eq!(var_binary_tutte(&m, 1, 64).unwrap(), Interval::point(frac(17, 2)));
        assert_eq!(var_binary_tutte(&m, 2, 64).unwrap(), Interval::point(frac(5, 2)));
        assert_eq!(var_binary_tutte(&m, 4, 64).unwrap(), Interval::point(frac(3, 2)));
        let n3 = var_binary_tutte(&m, 3, 64).unwrap();
        assert!(!n3.is_point() && n3.width() < rational::pow2(-60));
    }

    #[test]
    fn edgeless_hypergraph_ratio_is_one() {
        let h = Hypergraph::new(3, vec![]).unwrap();
        let r = verify_reduction(&h, &int(1), Some(4), 5, 1, 64).unwrap();
        assert!(r.trials.iter().all(|t| t.pass && t.ratio == Interval::point(Rational::one())));
    }

    #[test]
    fn bound_n_triangle_passes_often() {
        let r = verify_reduction(&triangle(), &int(1), None, 40, 3, 128).unwrap();
        assert_eq!(r.n_columns, 35);
        assert!(!r.heuristic);
        assert!(r.meets_three_quarters(), "{} of 40", r.passed());
        let line = r.to_json_lines(6);
        assert_eq!(line.lines().count(), 40);
        assert!(line.starts_with("{\"seed\":"));
    }

    #[test]
    fn band_test_is_symmetric() {
        let band = interval::exp(&frac(1, 2), 64);
        let r = Interval::new(frac(9, 10), frac(13, 10));
        assert_eq!(within_band(&r, &band), within_band(&r.recip(), &band));
        let wide = Interval::new(frac(1, 2), frac(1, 1));
        assert_eq!(within_band(&wide, &band), within_band(&wide.recip(), &band));
        assert!(!within_band(&wide, &band));
    }

    #[test]
    fn pipeline_identity_and_parallel_cases() {
        let m = BinaryMatroid::new(Gf2Matrix::identity(1));
        let r = weight_shift_pipeline(&m, 2, &int(1), &frac(1, 2), &int(1), 32, 128).unwrap();
        assert_eq!(r.plan.to_text(), "1");
        assert_eq!(r.matroid, m);
        assert_eq!(r.prefactor, int(1));
        assert_eq!(r.certificate, Some(true));

        let r = weight_shift_pipeline(&m, 1, &int(1), &frac(1, 2), &int(1), 32, 128).unwrap();
        assert_eq!(r.plan.to_text(), "P(1,1)");
        assert_eq!(r.gamma_star, int(3));
        assert_eq!(r.certificate, Some(true));
    }

    #[test]
    fn pipeline_irrational_target() {
        let m = BinaryMatroid::new(Gf2Matrix::identity(1));
        for avail in [int(1), int(2), frac(1, 2)] {
            let r = weight_shift_pipeline(&m, 3, &avail, &frac(1, 2), &int(1), 64, 128).unwrap();
            assert!(r.gamma_star_in_target());
            assert_eq!(r.certificate, Some(true));
        }
    }
}
