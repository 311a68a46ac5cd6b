//! Series and parallel extensions of binary matroids, and series-parallel
//! plans that realize one element weight from copies of another.
//!
//! Parallel extension duplicates a column; the pair's weights combine as
//! `1 + γ = (1 + γ₁)(1 + γ₂)` and Z̃ is unchanged. Series extension adds a row
//! and a column; weights combine as `1 + q/γ = (1 + q/γ₁)(1 + q/γ₂)` and Z̃ is
//! multiplied by `1 + γ₁/q + γ₂/q`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matroid::{BinaryMatroid, Element};
use crate::rational::{self, Rational};
use crate::weights::WeightMap;

/// `γ₂` with `(1 + γ₁)(1 + γ₂) = 1 + γ_c`.
pub fn parallel_partner(gamma_c: &Rational, gamma_1: &Rational) -> Rational {
    (gamma_c + Rational::one()) / (gamma_1 + Rational::one()) - Rational::one()
}

/// `γ₂` with `(1 + q/γ₁)(1 + q/γ₂) = 1 + q/γ_c`.
pub fn series_partner(q: &Rational, gamma_c: &Rational, gamma_1: &Rational) -> Result<Rational> {
    if gamma_c.is_zero() || gamma_1.is_zero() {
        return Err(Error::input("series weights must be nonzero"));
    }
    let ratio = (Rational::one() + q / gamma_c) / (Rational::one() + q / gamma_1) - Rational::one();
    if ratio.is_zero() {
        return Err(Error::input("no finite series partner for these weights"));
    }
    Ok(q / ratio)
}

pub fn parallel_combine(a: &Rational, b: &Rational) -> Rational {
    (a + Rational::one()) * (b + Rational::one()) - Rational::one()
}

pub fn series_combine(q: &Rational, a: &Rational, b: &Rational) -> Rational {
    q / ((Rational::one() + q / a) * (Rational::one() + q / b) - Rational::one())
}

/// Z̃ factor introduced by one series extension.
pub fn series_prefactor(q: &Rational, a: &Rational, b: &Rational) -> Rational {
    Rational::one() + a / q + b / q
}

fn require_positive(g1: &Rational, g2: &Rational) -> Result<()> {
    if !g1.is_positive() || !g2.is_positive() {
        return Err(Error::input(format!(
            "split weights must be positive, got {} and {}",
            rational::format(g1),
            rational::format(g2)
        )));
    }
    Ok(())
}

/// Replaces element `c` (weight γ_c) by the parallel pair `c` (γ₁), `e'` (γ₂).
pub fn parallel_extend(
    m: &BinaryMatroid,
    w: &WeightMap,
    c: Element,
    gamma_1: &Rational,
    gamma_2: &Rational,
) -> Result<(BinaryMatroid, WeightMap, Element)> {
    let k = m.index_of(c)?;
    let gamma_c = w
        .get(c)
        .ok_or_else(|| Error::input(format!("no weight for element {c}")))?;
    require_positive(gamma_1, gamma_2)?;
    if &parallel_combine(gamma_1, gamma_2) != gamma_c {
        return Err(Error::input(format!(
            "(1+γ₁)(1+γ₂) != 1+γ_c for γ_c = {}",
            rational::format(gamma_c)
        )));
    }
    let rep = m.rep();
    let col: Vec<bool> = (0..rep.rows()).map(|i| rep.get(i, k)).collect();
    let fresh = m.fresh_element();
    let mut ground = m.ground().to_vec();
    ground.push(fresh);
    let ext = BinaryMatroid::with_ground(rep.push_column(&col), ground)?;
    let mut w2 = w.clone();
    w2.insert(c, gamma_1.clone());
    w2.insert(fresh, gamma_2.clone());
    Ok((ext, w2, fresh))
}

/// Replaces element `c` by the series pair `c` (γ₁), `e'` (γ₂).
///
/// Returns the extension, its weights, the new element, and the factor `p`
/// with `p · Z̃(M) = Z̃(M')`.
pub fn series_extend(
    m: &BinaryMatroid,
    w: &WeightMap,
    c: Element,
    q: &Rational,
    gamma_1: &Rational,
    gamma_2: &Rational,
) -> Result<(BinaryMatroid, WeightMap, Element, Rational)> {
    let k = m.index_of(c)?;
    if q.is_zero() {
        return Err(Error::input("series extension needs q != 0"));
    }
    let gamma_c = w
        .get(c)
        .ok_or_else(|| Error::input(format!("no weight for element {c}")))?;
    if gamma_c.is_zero() {
        return Err(Error::input("series extension needs γ_c != 0"));
    }
    require_positive(gamma_1, gamma_2)?;
    let lhs = Rational::one() + q / gamma_c;
    let rhs = (Rational::one() + q / gamma_1) * (Rational::one() + q / gamma_2);
    if lhs != rhs {
        return Err(Error::input(format!(
            "(1+q/γ₁)(1+q/γ₂) != 1+q/γ_c for γ_c = {}",
            rational::format(gamma_c)
        )));
    }
    let rep = m.rep();
    let with_col = rep.push_column(&vec![false; rep.rows()]);
    let mut row = vec![false; rep.cols() + 1];
    row[k] = true;
    row[rep.cols()] = true;
    let fresh = m.fresh_element();
    let mut ground = m.ground().to_vec();
    ground.push(fresh);
    let ext = BinaryMatroid::with_ground(with_col.push_row(&row), ground)?;
    let mut w2 = w.clone();
    w2.insert(c, gamma_1.clone());
    w2.insert(fresh, gamma_2.clone());
    Ok((ext, w2, fresh, series_prefactor(q, gamma_1, gamma_2)))
}

/// `{a, b}` is a circuit, or both are loops.
pub fn is_parallel_pair(m: &BinaryMatroid, a: Element, b: Element) -> Result<bool> {
    let (la, lb) = (m.is_loop(a)?, m.is_loop(b)?);
    if la || lb {
        return Ok(la && lb);
    }
    Ok(m.rank_of(&[a, b])? == 1)
}

/// `{a, b}` is a cocircuit, or both are coloops.
pub fn is_series_pair(m: &BinaryMatroid, a: Element, b: Element) -> Result<bool> {
    is_parallel_pair(&m.dual(), a, b)
}

/// A series-parallel tree whose leaves carry element weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlanNode {
    Leaf(Rational),
    Parallel(Box<PlanNode>, Box<PlanNode>),
    Series(Box<PlanNode>, Box<PlanNode>),
}

impl PlanNode {
    fn effective(&self, q: &Rational) -> Rational {
        match self {
            PlanNode::Leaf(v) => v.clone(),
            PlanNode::Parallel(a, b) => parallel_combine(&a.effective(q), &b.effective(q)),
            PlanNode::Series(a, b) => series_combine(q, &a.effective(q), &b.effective(q)),
        }
    }

    fn prefactor(&self, q: &Rational) -> Rational {
        match self {
            PlanNode::Leaf(_) => Rational::one(),
            PlanNode::Parallel(a, b) => a.prefactor(q) * b.prefactor(q),
            PlanNode::Series(a, b) => {
                series_prefactor(q, &a.effective(q), &b.effective(q)) * a.prefactor(q) * b.prefactor(q)
            }
        }
    }

    fn leaves(&self) -> usize {
        match self {
            PlanNode::Leaf(_) => 1,
            PlanNode::Parallel(a, b) | PlanNode::Series(a, b) => a.leaves() + b.leaves(),
        }
    }

    fn count(&self, series: bool) -> usize {
        match self {
            PlanNode::Leaf(_) => 0,
            PlanNode::Parallel(a, b) => usize::from(!series) + a.count(series) + b.count(series),
            PlanNode::Series(a, b) => usize::from(series) + a.count(series) + b.count(series),
        }
    }

    fn check_positive(&self) -> Result<()> {
        match self {
            PlanNode::Leaf(v) if !v.is_positive() => Err(Error::input(format!(
                "plan leaf weight {} is not positive",
                rational::format(v)
            ))),
            PlanNode::Leaf(_) => Ok(()),
            PlanNode::Parallel(a, b) | PlanNode::Series(a, b) => {
                a.check_positive()?;
                b.check_positive()
            }
        }
    }
}

impl fmt::Display for PlanNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanNode::Leaf(v) => write!(f, "{}", rational::format(v)),
            PlanNode::Parallel(a, b) => write!(f, "P({a},{b})"),
            PlanNode::Series(a, b) => write!(f, "S({a},{b})"),
        }
    }
}

/// A plan together with its parameter `q`, effective weight and Z̃ prefactor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetPlan {
    root: PlanNode,
    q: Rational,
    effective: Rational,
    prefactor: Rational,
}

impl GadgetPlan {
    pub fn new(root: PlanNode, q: Rational) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::input("plans need q > 0"));
        }
        root.check_positive()?;
        let effective = root.effective(&q);
        let prefactor = root.prefactor(&q);
        Ok(GadgetPlan {
            root,
            q,
            effective,
            prefactor,
        })
    }

    pub fn leaf(weight: Rational, q: Rational) -> Result<Self> {
        Self::new(PlanNode::Leaf(weight), q)
    }

    pub fn root(&self) -> &PlanNode {
        &self.root
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    pub fn effective(&self) -> &Rational {
        &self.effective
    }

    /// Product of `1 + γ₁/q + γ₂/q` over all series steps.
    pub fn prefactor(&self) -> &Rational {
        &self.prefactor
    }

    pub fn leaf_count(&self) -> usize {
        self.root.leaves()
    }

    pub fn series_steps(&self) -> usize {
        self.root.count(true)
    }

    pub fn parallel_steps(&self) -> usize {
        self.root.count(false)
    }

    pub fn to_text(&self) -> String {
        self.root.to_string()
    }

    /// Parses `P(a,b)` / `S(a,b)` trees with rational leaves.
    pub fn parse(text: &str, q: Rational) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let root = parse_node(compact.as_bytes(), &mut pos)?;
        if pos != compact.len() {
            return Err(Error::input(format!("trailing plan text at offset {pos}")));
        }
        Self::new(root, q)
    }
}

fn parse_node(s: &[u8], pos: &mut usize) -> Result<PlanNode> {
    let bad = |p: usize| Error::input(format!("malformed plan at offset {p}"));
    match s.get(*pos) {
        Some(&kind @ (b'P' | b'S')) => {
            *pos += 1;
            if s.get(*pos) != Some(&b'(') {
                return Err(bad(*pos));
            }
            *pos += 1;
            let a = parse_node(s, pos)?;
            if s.get(*pos) != Some(&b',') {
                return Err(bad(*pos));
            }
            *pos += 1;
            let b = parse_node(s, pos)?;
            if s.get(*pos) != Some(&b')') {
                return Err(bad(*pos));
            }
            *pos += 1;
            let (a, b) = (Box::new(a), Box::new(b));
            Ok(if kind == b'P' {
                PlanNode::Parallel(a, b)
            } else {
                PlanNode::Series(a, b)
            })
        }
        Some(_) => {
            let start = *pos;
            while *pos < s.len() && !matches!(s[*pos], b',' | b')') {
                *pos += 1;
            }
            let tok = std::str::from_utf8(&s[start..*pos]).map_err(|_| bad(start))?;
            Ok(PlanNode::Leaf(rational::parse(tok)?))
        }
        None => Err(bad(*pos)),
    }
}

/// Compiles a plan onto element `c`: `c` first takes the plan's effective
/// weight, then each internal node becomes one parallel or series extension.
///
/// Returns the extended matroid, its weights and the prefactor `p` with
/// `p · Z̃(M, c ↦ effective) = Z̃(M')`.
pub fn apply_plan(
    m: &BinaryMatroid,
    w: &WeightMap,
    c: Element,
    plan: &GadgetPlan,
) -> Result<(BinaryMatroid, WeightMap, Rational)> {
    m.index_of(c)?;
    let mut w = w.clone();
    w.insert(c, plan.effective.clone());
    let mut m = m.clone();
    let mut prefactor = Rational::one();
    expand(&mut m, &mut w, c, &plan.root, &plan.q, &mut prefactor)?;
    Ok((m, w, prefactor))
}

fn expand(
    m: &mut BinaryMatroid,
    w: &mut WeightMap,
    c: Element,
    node: &PlanNode,
    q: &Rational,
    prefactor: &mut Rational,
) -> Result<()> {
    match node {
        PlanNode::Leaf(_) => Ok(()),
        PlanNode::Parallel(a, b) => {
            let (ga, gb) = (a.effective(q), b.effective(q));
            let (m2, w2, fresh) = parallel_extend(m, w, c, &ga, &gb)?;
            *m = m2;
            *w = w2;
            expand(m, w, c, a, q, prefactor)?;
            expand(m, w, fresh, b, q, prefactor)
        }
        PlanNode::Series(a, b) => {
            let (ga, gb) = (a.effective(q), b.effective(q));
            let (m2, w2, fresh, p) = series_extend(m, w, c, q, &ga, &gb)?;
            *m = m2;
            *w = w2;
            *prefactor *= p;
            expand(m, w, c, a, q, prefactor)?;
            expand(m, w, fresh, b, q, prefactor)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Step {
    Parallel,
    Series,
}

/// Folds a top-down step chain into a tree. `tail` is the innermost
/// residual: `None` drops it (weight 0), `Some` puts a leaf there.
fn chain_to_tree(steps: &[Step], avail: &Rational, tail: Option<()>) -> Option<PlanNode> {
    let leaf = || PlanNode::Leaf(avail.clone());
    let mut node: Option<PlanNode> = tail.map(|_| leaf());
    for step in steps.iter().rev() {
        node = Some(match (step, node) {
            (Step::Parallel, None) => leaf(),
            (Step::Parallel, Some(n)) => PlanNode::Parallel(Box::new(leaf()), Box::new(n)),
            (Step::Series, Some(n)) => PlanNode::Series(Box::new(leaf()), Box::new(n)),
            (Step::Series, None) => return None,
        });
    }
    node
}

/// Finds a plan with leaves of weight `avail` whose effective weight lies in
/// `[lo, hi]`.
///
/// The search walks down from `hi`: while the residual weight is at least
/// `avail` it peels off a parallel leaf, otherwise a series leaf. Both
/// combinations are increasing in each argument, so truncating the residual
/// to zero after a parallel step can only undershoot; the walk stops at the
/// first truncation that lands at or above `lo`, or at an exact hit.
pub fn synthesize_in_range(
    lo: &Rational,
    hi: &Rational,
    avail: &Rational,
    q: &Rational,
    max_size: usize,
) -> Result<GadgetPlan> {
    if !avail.is_positive() || !q.is_positive() {
        return Err(Error::input("synthesis needs positive available weight and q"));
    }
    if !lo.is_positive() || lo > hi {
        return Err(Error::input("target range must satisfy 0 < lo <= hi"));
    }
    let mut steps = Vec::new();
    let mut residual = hi.clone();
    let mut best: Option<Rational> = None;
    loop {
        if &residual == avail {
            if steps.len() + 1 > max_size {
                break;
            }
            let tree = chain_to_tree(&steps, avail, Some(())).expect("nonempty tail");
            return GadgetPlan::new(tree, q.clone());
        }
        if steps.len() >= max_size {
            break;
        }
        if &residual > avail {
            steps.push(Step::Parallel);
            residual = parallel_partner(&residual, avail);
            let tree = chain_to_tree(&steps, avail, None).expect("ends in a parallel step");
            let value = tree.effective(q);
            if &value >= lo {
                return GadgetPlan::new(tree, q.clone());
            }
            if best.as_ref().is_none_or(|b| &value > b) {
                best = Some(value);
            }
        } else {
            steps.push(Step::Series);
            residual = series_partner(q, &residual, avail)?;
        }
    }
    Err(Error::Synthesis(format!(
        "no plan with at most {max_size} leaves reaches [{}, {}]; best found {}",
        rational::format(lo),
        rational::format(hi),
        best.map_or("none".to_string(), |b| rational::format(&b))
    )))
}

/// Plan with leaves `avail` and effective weight in `[target - tolerance, target]`.
pub fn synthesize_weight(
    target: &Rational,
    avail: &Rational,
    q: &Rational,
    tolerance: &Rational,
    max_size: usize,
) -> Result<GadgetPlan> {
    if !target.is_positive() || !tolerance.is_positive() {
        return Err(Error::input("target and tolerance must be positive"));
    }
    if tolerance >= target {
        return Err(Error::input("tolerance must be smaller than the target"));
    }
    synthesize_in_range(&(target - tolerance), target, avail, q, max_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::Gf2Matrix;
    use crate::partition::tutte_tilde;
    use crate::rational::{frac, int};

    fn single() -> BinaryMatroid {
        BinaryMatroid::new(Gf2Matrix::identity(1))
    }

    fn w1(g: Rational) -> WeightMap {
        WeightMap::constant(&[Element(0)], &g)
    }

    #[test]
    fn parallel_example() {
        let m = single();
        let w = w1(int(3));
        let (m2, w2, fresh) = parallel_extend(&m, &w, Element(0), &int(1), &int(1)).unwrap();
        assert_eq!(fresh, Element(1));
        assert_eq!(m2.rep(), &Gf2Matrix::from_rows(2, &[[1u8, 1]]).unwrap());
        let q = int(2);
        assert_eq!(tutte_tilde(&m, &q, &w).unwrap(), frac(5, 2));
        assert_eq!(tutte_tilde(&m2, &q, &w2).unwrap(), frac(5, 2));
    }

    #[test]
    fn parallel_on_loop() {
        let m = BinaryMatroid::new(Gf2Matrix::zeros(1, 1));
        let w = w1(int(8));
        let (m2, w2, _) = parallel_extend(&m, &w, Element(0), &int(2), &int(2)).unwrap();
        assert!(m2.is_loop(Element(0)).unwrap() && m2.is_loop(Element(1)).unwrap());
        let q = frac(3, 2);
        assert_eq!(tutte_tilde(&m, &q, &w).unwrap(), tutte_tilde(&m2, &q, &w2).unwrap());
    }

    #[test]
    fn parallel_rejects_bad_splits() {
        let m = single();
        let w0 = w1(int(0));
        assert!(parallel_extend(&m, &w0, Element(0), &int(0), &int(0)).is_err());
        let w = w1(int(3));
        assert!(parallel_extend(&m, &w, Element(0), &int(1), &int(2)).is_err());
        assert!(parallel_extend(&m, &w, Element(7), &int(1), &int(1)).is_err());
    }

    #[test]
    fn series_example() {
        let m = single();
        let w = w1(frac(2, 3));
        let q = int(2);
        let (m2, w2, _, p) = series_extend(&m, &w, Element(0), &q, &int(2), &int(2)).unwrap();
        assert_eq!(m2.rep(), &Gf2Matrix::from_rows(2, &[[1u8, 0], [1, 1]]).unwrap());
        assert_eq!(p, int(3));
        assert_eq!(tutte_tilde(&m, &q, &w).unwrap(), frac(4, 3));
        assert_eq!(tutte_tilde(&m2, &q, &w2).unwrap(), int(4));
    }

    #[test]
    fn series_on_coloop_gives_coloops() {
        let m = single();
        let w = w1(frac(2, 3));
        let (m2, _, fresh, _) = series_extend(&m, &w, Element(0), &int(2), &int(2), &int(2)).unwrap();
        assert!(m2.is_coloop(Element(0)).unwrap());
        assert!(m2.is_coloop(fresh).unwrap());
    }

    #[test]
    fn series_rejects_bad_splits() {
        let m = single();
        let q = int(2);
        assert!(series_extend(&m, &w1(int(1)), Element(0), &q, &int(2), &int(2)).is_err());
        assert!(series_extend(&m, &w1(int(0)), Element(0), &q, &int(2), &int(2)).is_err());
        assert!(series_extend(&m, &w1(frac(2, 3)), Element(0), &int(0), &int(2), &int(2)).is_err());
    }

    #[test]
    fn side_conditions() {
        let m = BinaryMatroid::new(Gf2Matrix::from_rows(2, &[[1u8, 0], [0, 1]]).unwrap());
        let w = WeightMap::constant(m.ground(), &int(3));
        let (p, _, e) = parallel_extend(&m, &w, Element(0), &int(1), &int(1)).unwrap();
        assert!(is_parallel_pair(&p, Element(0), e).unwrap());
        assert!(!is_parallel_pair(&p, Element(1), e).unwrap());
        let m = BinaryMatroid::new(Gf2Matrix::from_rows(3, &[[1u8, 1, 0], [0, 0, 1]]).unwrap());
        let w = WeightMap::constant(m.ground(), &frac(2, 3));
        let (s, _, e, _) = series_extend(&m, &w, Element(0), &int(2), &int(2), &int(2)).unwrap();
        assert!(is_series_pair(&s, Element(0), e).unwrap());
        assert!(!is_series_pair(&s, Element(2), e).unwrap());
        let loops = BinaryMatroid::new(Gf2Matrix::zeros(1, 2));
        assert!(is_parallel_pair(&loops, Element(0), Element(1)).unwrap());
    }

    #[test]
    fn partners_solve_the_combination_rules() {
        let (gc, g1, q) = (frac(7, 2), frac(1, 3), frac(5, 4));
        let g2 = parallel_partner(&gc, &g1);
        assert_eq!(parallel_combine(&g1, &g2), gc);
        let gc = frac(1, 5);
        let g2 = series_partner(&q, &gc, &g1).unwrap();
        assert_eq!(series_combine(&q, &g1, &g2), gc);
    }

    #[test]
    fn synth_examples() {
        let q = int(2);
        let p = synthesize_weight(&int(3), &int(1), &q, &frac(1, 100), 16).unwrap();
        assert_eq!(p.to_text(), "P(1,1)");
        assert_eq!(p.effective(), &int(3));
        assert_eq!(p.prefactor(), &int(1));

        let p = synthesize_weight(&frac(2, 3), &int(2), &q, &frac(1, 100), 16).unwrap();
        assert_eq!(p.to_text(), "S(2,2)");
        assert_eq!(p.effective(), &frac(2, 3));
        assert_eq!(p.prefactor(), &int(3));

        let p = synthesize_weight(&frac(1, 2), &frac(1, 2), &q, &frac(1, 100), 16).unwrap();
        assert_eq!(p.to_text(), "1/2");
        assert_eq!(p.leaf_count(), 1);
    }

    #[test]
    fn synth_approximates_from_below() {
        let q = int(2);
        let target = frac(41421, 100000);
        let tol = frac(1, 100000);
        let p = synthesize_weight(&target, &int(1), &q, &tol, 64).unwrap();
        assert!(p.effective() <= &target);
        assert!(p.effective() >= &(&target - &tol));
    }

    #[test]
    fn synth_reports_budget_failure() {
        let r = synthesize_weight(&frac(41421, 100000), &int(1), &int(2), &frac(1, 10_000_000), 3);
        assert!(matches!(r, Err(Error::Synthesis(_))));
        assert!(synthesize_weight(&int(1), &int(1), &int(2), &int(1), 3).is_err());
    }

    #[test]
    fn plan_text_round_trip() {
        let p = GadgetPlan::parse("P(1, S(2,1/2))", int(2)).unwrap();
        assert_eq!(p.to_text(), "P(1,S(2,1/2))");
        assert_eq!(GadgetPlan::parse(&p.to_text(), int(2)).unwrap(), p);
        assert_eq!((p.leaf_count(), p.series_steps(), p.parallel_steps()), (3, 1, 1));
        assert!(GadgetPlan::parse("P(1,2", int(2)).is_err());
        assert!(GadgetPlan::parse("P(1,0)", int(2)).is_err());
        assert!(GadgetPlan::parse("Q(1,2)", int(2)).is_err());
    }

    #[test]
    fn apply_plan_examples() {
        let m = single();
        let w = w1(int(5));
        let q = int(2);
        let id = GadgetPlan::leaf(int(1), q.clone()).unwrap();
        let (m2, w2, p) = apply_plan(&m, &w, Element(0), &id).unwrap();
        assert_eq!((m2.clone(), p), (m.clone(), int(1)));
        assert_eq!(w2.get(Element(0)), Some(&int(1)));

        let par = GadgetPlan::parse("P(1,1)", q.clone()).unwrap();
        let (m2, w2, p) = apply_plan(&m, &w, Element(0), &par).unwrap();
        assert_eq!(p, int(1));
        assert_eq!(tutte_tilde(&m2, &q, &w2).unwrap(), frac(5, 2));

        let ser = GadgetPlan::parse("S(2,2)", q.clone()).unwrap();
        let (m2, w2, p) = apply_plan(&m, &w, Element(0), &ser).unwrap();
        assert_eq!(p, int(3));
        assert_eq!(tutte_tilde(&m2, &q, &w2).unwrap(), int(4));
    }
}
