//! The algebraic fan of a design: every saturated staircase model any term
//! order can identify, with exact certificates.
//!
//! Enumeration is depth-first over downward-closed monomial sets kept in
//! increasing DegRevLex order, pruning any partial staircase whose evaluation
//! vectors become linearly dependent. A completed size-n staircase is in the
//! fan iff its evaluation matrix is nonsingular and some non-negative weight
//! vector w puts every border monomial strictly above the support of its
//! unique expansion over the staircase; that feasibility question is decided
//! exactly, and a feasible w is cross-validated by recomputing the Groebner
//! basis under Weight(w, DegRevLex).

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::design::Design;
use crate::groebner::GroebnerBasis;
use crate::linalg::SpanTracker;
use crate::lp::{feasible_nonneg, Feasibility};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::rational::from_ratio;
use crate::staircase::{border_of_set, Staircase};
use crate::vars::Vars;
use crate::{Error, Result};

/// Search limits for fan-sized computations.
#[derive(Debug, Clone, Default)]
pub struct FanLimits {
    pub max_models: Option<usize>,
    pub time_budget: Option<Duration>,
}

#[derive(Debug, Error)]
pub enum FanError {
    /// Budget exhausted; carries the models found before the cutoff.
    #[error("fan search budget exhausted after {} models", partial.models.len())]
    Budget { partial: Box<FanReport> },
    #[error(transparent)]
    Core(#[from] Error),
}

/// One model of the fan with its certificate and summary statistics.
#[derive(Debug, Clone)]
pub struct FanModel {
    pub staircase: Staircase,
    /// Weight vector whose weight order (DegRevLex tiebreak) identifies the
    /// model; strictly positive, so it lies in the open cone interior.
    pub witness: Vec<BigRational>,
    pub state_vector: Vec<u64>,
    pub total_degree: u32,
    /// Hilbert-series coefficients of the model.
    pub series: Vec<u64>,
}

/// A variable-permutation orbit of fan models.
#[derive(Debug, Clone)]
pub struct FanClass {
    /// Indices into `FanReport::models`, ascending; the first is the
    /// representative.
    pub members: Vec<usize>,
    /// True when the whole symmetric-group orbit lies inside the fan.
    pub closed: bool,
}

#[derive(Debug, Clone)]
pub struct FanReport {
    pub vars: Vars,
    pub points: usize,
    /// False only in the partial report carried by a budget error.
    pub complete: bool,
    pub models: Vec<FanModel>,
    pub classes: Vec<FanClass>,
}

impl FanReport {
    pub fn contains(&self, staircase: &Staircase) -> bool {
        let key = staircase.sorted_exponents();
        self.models.iter().any(|m| m.staircase.sorted_exponents() == key)
    }
}

/// Outcome of testing one staircase against one design.
#[derive(Debug, Clone)]
pub enum Membership {
    Member { witness: Vec<BigRational> },
    /// The evaluation matrix is singular: the model is not even estimable.
    NotEstimable,
    /// Estimable but no term order selects it; the certificate is a convex
    /// combination of border-expansion constraints proving infeasibility.
    NotAchievable { certificate: Vec<BigRational> },
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member { .. })
    }
}

/// Reduced Groebner basis under the weight order w with DegRevLex tiebreak.
pub fn gb_for_weight(design: &Design, weights: &[BigRational]) -> Result<Arc<GroebnerBasis>> {
    let order = TermOrder::weight_degrevlex(weights.to_vec())?;
    design.groebner_basis(&order)
}

/// Constraint rows `beta - alpha` over every border monomial beta and every
/// alpha in the support of beta's expansion over the model.
fn achievability_rows(design: &Design, model: &Staircase) -> Result<Vec<Vec<BigRational>>> {
    let em = design.evaluation_matrix(model)?;
    let monomials = em.monomials;
    let mut rows: BTreeSet<Vec<i64>> = BTreeSet::new();
    for beta in model.border() {
        let values = design.monomial_values(&beta)?;
        let theta = em
            .matrix
            .solve(&values)
            .ok_or_else(|| Error::Internal("evaluation matrix became singular".into()))?;
        for (alpha, coeff) in monomials.iter().zip(&theta) {
            if coeff.is_zero() {
                continue;
            }
            let diff: Vec<i64> = beta
                .exponents()
                .iter()
                .zip(alpha.exponents())
                .map(|(&b, &a)| i64::from(b) - i64::from(a))
                .collect();
            rows.insert(diff);
        }
    }
    Ok(rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| BigRational::from_integer(v.into())).collect())
        .collect())
}

/// Nudge zero coordinates into the open orthant; cone scale-invariance makes
/// the margin harmless, and the nudge is re-verified against the rows.
fn strictly_positive_witness(
    w: Vec<BigRational>,
    rows: &[Vec<BigRational>],
    max_degree: u32,
) -> Vec<BigRational> {
    if w.iter().all(|x| *x > BigRational::zero()) {
        return w;
    }
    let k = w.len() as i64;
    let eps = from_ratio(1, 2 * k * i64::from(max_degree.max(1)));
    let nudged: Vec<BigRational> = w.iter().map(|x| x + &eps).collect();
    let ok = rows
        .iter()
        .all(|row| crate::lp::dot(row, &nudged) > BigRational::zero());
    if ok {
        nudged
    } else {
        w
    }
}

/// Is this staircase the quotient basis of the design ideal under some term
/// order? Each positive answer is certified by recomputing the basis at the
/// witness weight vector.
pub fn model_membership(design: &Design, model: &Staircase) -> Result<Membership> {
    if model.arity() != design.arity() {
        return Err(Error::ArityMismatch { expected: design.arity(), found: model.arity() });
    }
    if model.len() != design.len() {
        return Err(Error::WrongCardinality { expected: design.len(), found: model.len() });
    }
    let em = design.evaluation_matrix(model)?;
    if !em.matrix.is_nonsingular() {
        return Ok(Membership::NotEstimable);
    }
    let rows = achievability_rows(design, model)?;
    match feasible_nonneg(&rows, design.arity()) {
        Feasibility::Infeasible(certificate) => Ok(Membership::NotAchievable { certificate }),
        Feasibility::Feasible(w) => {
            let max_degree = model
                .border()
                .iter()
                .chain(model.iter())
                .map(Monomial::total_degree)
                .max()
                .unwrap_or(1);
            let witness = strictly_positive_witness(w, &rows, max_degree);
            let order = TermOrder::weight_degrevlex(witness.clone())?;
            let gb = design.groebner_basis_uncached(&order)?;
            if gb.quotient_basis()? != *model {
                return Err(Error::Internal(
                    "witness weight vector failed Groebner certification".into(),
                ));
            }
            Ok(Membership::Member { witness })
        }
    }
}

struct FanSearch<'a> {
    design: &'a Design,
    limits: &'a FanLimits,
    start: Instant,
    values: HashMap<Monomial, Vec<BigRational>>,
    found: Vec<(Staircase, Vec<BigRational>)>,
}

struct BudgetHit;

impl<'a> FanSearch<'a> {
    fn over_budget(&self) -> bool {
        if let Some(max) = self.limits.max_models {
            if self.found.len() >= max {
                return true;
            }
        }
        if let Some(budget) = self.limits.time_budget {
            if self.start.elapsed() > budget {
                return true;
            }
        }
        false
    }

    fn values_of(&mut self, m: &Monomial) -> Result<Vec<BigRational>> {
        if let Some(v) = self.values.get(m) {
            return Ok(v.clone());
        }
        let v = self.design.monomial_values(m)?;
        self.values.insert(m.clone(), v.clone());
        Ok(v)
    }

    fn dfs(
        &mut self,
        chain: &mut Vec<Monomial>,
        set: &mut BTreeSet<Monomial>,
        tracker: &SpanTracker,
    ) -> std::result::Result<(), FanErrorOrHit> {
        if self.over_budget() {
            return Err(FanErrorOrHit::Hit(BudgetHit));
        }
        let k = self.design.arity();
        if chain.len() == self.design.len() {
            let staircase = Staircase::new_unchecked(k, set.clone());
            match model_membership(self.design, &staircase).map_err(FanError::Core)? {
                Membership::Member { witness } => self.found.push((staircase, witness)),
                Membership::NotAchievable { .. } => {}
                Membership::NotEstimable => {
                    return Err(FanErrorOrHit::Fan(FanError::Core(Error::Internal(
                        "rank-pruned staircase reported non-estimable".into(),
                    ))))
                }
            }
            return Ok(());
        }
        let last = chain.last().expect("chain starts at 1").clone();
        let mut candidates: Vec<Monomial> = border_of_set(k, set)
            .into_iter()
            .filter(|m| {
                TermOrder::DegRevLex.compare(m, &last).expect("consistent arity")
                    == std::cmp::Ordering::Greater
            })
            .collect();
        candidates.sort_by(|a, b| {
            TermOrder::DegRevLex.compare(a, b).expect("consistent arity")
        });
        for m in candidates {
            let v = self.values_of(&m).map_err(FanError::Core)?;
            if tracker.is_independent(&v) {
                let mut next = tracker.clone();
                next.insert(v);
                chain.push(m.clone());
                set.insert(m.clone());
                let res = self.dfs(chain, set, &next);
                chain.pop();
                set.remove(&m);
                res?;
            }
        }
        Ok(())
    }

    fn build_report(&self, complete: bool) -> FanReport {
        let mut items: Vec<(Staircase, Vec<BigRational>)> = self.found.clone();
        items.sort_by(|a, b| a.0.sorted_exponents().cmp(&b.0.sorted_exponents()));
        let staircases: Vec<Staircase> = items.iter().map(|(s, _)| s.clone()).collect();
        let classes = classify_orbits(&staircases);
        let models = items
            .into_iter()
            .map(|(staircase, witness)| {
                let state_vector = staircase.state_vector();
                let total_degree = staircase.total_degree();
                let series = staircase.degree_histogram();
                FanModel { staircase, witness, state_vector, total_degree, series }
            })
            .collect();
        FanReport {
            vars: self.design.vars().clone(),
            points: self.design.len(),
            complete,
            models,
            classes,
        }
    }
}

enum FanErrorOrHit {
    Fan(FanError),
    Hit(BudgetHit),
}

impl From<FanError> for FanErrorOrHit {
    fn from(e: FanError) -> Self {
        FanErrorOrHit::Fan(e)
    }
}

/// Enumerate the full algebraic fan. The model set is canonical: it does not
/// depend on traversal order. On budget exhaustion the error carries the
/// models found so far.
pub fn enumerate_fan(design: &Design, limits: &FanLimits) -> std::result::Result<FanReport, FanError> {
    let k = design.arity();
    let n = design.len();
    let unit = Monomial::unit(k);
    let mut tracker = SpanTracker::new(n);
    tracker.insert(vec![BigRational::one(); n]);
    let mut search = FanSearch {
        design,
        limits,
        start: Instant::now(),
        values: HashMap::new(),
        found: Vec::new(),
    };
    search.values.insert(unit.clone(), vec![BigRational::one(); n]);
    let mut chain = vec![unit.clone()];
    let mut set: BTreeSet<Monomial> = BTreeSet::new();
    set.insert(unit);
    match search.dfs(&mut chain, &mut set, &tracker) {
        Ok(()) => Ok(search.build_report(true)),
        Err(FanErrorOrHit::Hit(BudgetHit)) => {
            Err(FanError::Budget { partial: Box::new(search.build_report(false)) })
        }
        Err(FanErrorOrHit::Fan(e)) => Err(e),
    }
}

/// Partition staircases into symmetric-group orbits (permutation of the
/// variable coordinates), flagging orbits fully contained in the input.
pub fn classify_orbits(models: &[Staircase]) -> Vec<FanClass> {
    if models.is_empty() {
        return Vec::new();
    }
    let k = models[0].arity();
    let index: BTreeMap<Vec<Vec<u32>>, usize> = models
        .iter()
        .enumerate()
        .map(|(i, s)| (s.sorted_exponents(), i))
        .collect();
    let mut assigned = vec![false; models.len()];
    let mut classes = Vec::new();
    for i in 0..models.len() {
        if assigned[i] {
            continue;
        }
        // full orbit by closure under adjacent transpositions
        let mut orbit: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
        orbit.insert(models[i].sorted_exponents());
        let mut queue = vec![models[i].clone()];
        while let Some(s) = queue.pop() {
            for t in 0..k.saturating_sub(1) {
                let swapped = s.swapped(t, t + 1);
                if orbit.insert(swapped.sorted_exponents()) {
                    queue.push(swapped);
                }
            }
        }
        let mut members: Vec<usize> = orbit.iter().filter_map(|key| index.get(key).copied()).collect();
        members.sort_unstable();
        let closed = members.len() == orbit.len();
        for &m in &members {
            assigned[m] = true;
        }
        classes.push(FanClass { members, closed });
    }
    classes
}

/// State vectors, the vertex set of their convex hull, and the linear
/// aberration optimum for unit cost.
#[derive(Debug, Clone)]
pub struct StateGeometry {
    /// One state vector per model, in model order.
    pub state_vectors: Vec<Vec<u64>>,
    /// Distinct state vectors that are vertices of the state polytope.
    pub vertices: Vec<Vec<u64>>,
    pub min_total_degree: u32,
}

/// A state vector is a vertex iff some direction strictly minimizes it over
/// the others. The witness weight of any model weakly minimizes that model's
/// state vector (the weight order picks the lightest estimable staircase), so
/// witnesses serve as cheap vertex certificates before the LP fallback.
pub fn state_geometry(report: &FanReport) -> StateGeometry {
    let state_vectors: Vec<Vec<u64>> = report.models.iter().map(|m| m.state_vector.clone()).collect();
    let mut witnesses: BTreeMap<Vec<u64>, Vec<&Vec<BigRational>>> = BTreeMap::new();
    for m in &report.models {
        witnesses.entry(m.state_vector.clone()).or_default().push(&m.witness);
    }
    let distinct: Vec<Vec<u64>> = witnesses.keys().cloned().collect();
    let k = report.vars.arity();
    let to_q = |v: &[u64]| -> Vec<BigRational> {
        v.iter().map(|&x| BigRational::from_integer(x.into())).collect()
    };
    let mut vertices = Vec::new();
    for v in &distinct {
        if distinct.len() == 1 {
            vertices.push(v.clone());
            break;
        }
        let vq = to_q(v);
        let strictly_minimized_by = |w: &[BigRational]| {
            let base = crate::lp::dot(w, &vq);
            distinct
                .iter()
                .filter(|o| *o != v)
                .all(|o| crate::lp::dot(w, &to_q(o)) > base)
        };
        if witnesses[v].iter().any(|w| strictly_minimized_by(w)) {
            vertices.push(v.clone());
            continue;
        }
        // u free, u.(v' - v) >= 1 for all other state vectors v';
        // split u = p - q with p, q >= 0
        let rows: Vec<Vec<BigRational>> = distinct
            .iter()
            .filter(|o| *o != v)
            .map(|o| {
                let diff: Vec<i64> = o
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| i64::try_from(a).unwrap() - i64::try_from(b).unwrap())
                    .collect();
                let mut row: Vec<BigRational> = Vec::with_capacity(2 * k);
                for d in &diff {
                    row.push(BigRational::from_integer((*d).into()));
                }
                for d in &diff {
                    row.push(BigRational::from_integer((-*d).into()));
                }
                row
            })
            .collect();
        if feasible_nonneg(&rows, 2 * k).is_feasible() {
            vertices.push(v.clone());
        }
    }
    let min_total_degree = report.models.iter().map(|m| m.total_degree).min().unwrap_or(0);
    StateGeometry { state_vectors, vertices, min_total_degree }
}

/// A staircase is a corner cut when a single strictly positive hyperplane
/// separates it from its complement.
pub fn is_corner_cut(model: &Staircase) -> bool {
    let k = model.arity();
    let mut rows: BTreeSet<Vec<i64>> = BTreeSet::new();
    for beta in model.border() {
        for alpha in model.iter() {
            let diff: Vec<i64> = beta
                .exponents()
                .iter()
                .zip(alpha.exponents())
                .map(|(&b, &a)| i64::from(b) - i64::from(a))
                .collect();
            rows.insert(diff);
        }
    }
    for i in 0..k {
        let mut e = vec![0i64; k];
        e[i] = 1;
        rows.insert(e);
    }
    let rows: Vec<Vec<BigRational>> = rows
        .into_iter()
        .map(|r| r.into_iter().map(|v| BigRational::from_integer(v.into())).collect())
        .collect();
    feasible_nonneg(&rows, k).is_feasible()
}

/// All downward-closed exponent sets of the given size, design-free.
pub fn enumerate_staircases(
    arity: usize,
    size: usize,
    time_budget: Option<Duration>,
) -> std::result::Result<Vec<Staircase>, Error> {
    let start = Instant::now();
    let mut out = Vec::new();
    if size == 0 {
        return Ok(out);
    }
    let unit = Monomial::unit(arity);
    let mut chain = vec![unit.clone()];
    let mut set: BTreeSet<Monomial> = BTreeSet::new();
    set.insert(unit);
    fn rec(
        arity: usize,
        size: usize,
        chain: &mut Vec<Monomial>,
        set: &mut BTreeSet<Monomial>,
        out: &mut Vec<Staircase>,
        start: Instant,
        budget: Option<Duration>,
    ) -> std::result::Result<(), Error> {
        if let Some(b) = budget {
            if start.elapsed() > b {
                return Err(Error::Unsupported(
                    "staircase enumeration exceeded its time budget".into(),
                ));
            }
        }
        if chain.len() == size {
            out.push(Staircase::new_unchecked(arity, set.clone()));
            return Ok(());
        }
        let last = chain.last().expect("nonempty").clone();
        let mut candidates: Vec<Monomial> = border_of_set(arity, set)
            .into_iter()
            .filter(|m| {
                TermOrder::DegRevLex.compare(m, &last).expect("consistent arity")
                    == std::cmp::Ordering::Greater
            })
            .collect();
        candidates.sort_by(|a, b| TermOrder::DegRevLex.compare(a, b).expect("consistent arity"));
        for m in candidates {
            chain.push(m.clone());
            set.insert(m.clone());
            let res = rec(arity, size, chain, set, out, start, budget);
            chain.pop();
            set.remove(&m);
            res?;
        }
        Ok(())
    }
    rec(arity, size, &mut chain, &mut set, &mut out, start, time_budget)?;
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct CornerCutReport {
    pub fan: FanReport,
    /// Indices of fan models that are corner cuts.
    pub fan_corner_cuts: Vec<usize>,
    /// Every corner-cut staircase of the design's size, design-free.
    pub all_corner_cuts: Vec<Staircase>,
    /// True when the fan contains every corner cut of its size.
    pub generic: bool,
}

/// Corner-cut diagnostics: which fan models are corner cuts, and whether the
/// design is generic (its fan contains every corner cut staircase).
pub fn corner_cut_analysis(
    design: &Design,
    limits: &FanLimits,
) -> std::result::Result<CornerCutReport, FanError> {
    let fan = enumerate_fan(design, limits)?;
    let fan_corner_cuts: Vec<usize> = fan
        .models
        .iter()
        .enumerate()
        .filter(|(_, m)| is_corner_cut(&m.staircase))
        .map(|(i, _)| i)
        .collect();
    let all = enumerate_staircases(design.arity(), design.len(), limits.time_budget)
        .map_err(|_| FanError::Budget { partial: Box::new(fan.clone()) })?;
    let fan_keys: BTreeSet<Vec<Vec<u32>>> =
        fan.models.iter().map(|m| m.staircase.sorted_exponents()).collect();
    let all_corner_cuts: Vec<Staircase> =
        all.into_iter().filter(is_corner_cut_ref).collect();
    let generic = all_corner_cuts
        .iter()
        .all(|s| fan_keys.contains(&s.sorted_exponents()));
    Ok(CornerCutReport { fan, fan_corner_cuts, all_corner_cuts, generic })
}

fn is_corner_cut_ref(s: &Staircase) -> bool {
    is_corner_cut(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_int as q;

    fn staircase(arity: usize, exps: &[&[u32]]) -> Staircase {
        Staircase::from_exponents(arity, exps.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn axis_chain_is_a_corner_cut() {
        let s = staircase(
            3,
            &[&[0, 0, 0], &[1, 0, 0], &[2, 0, 0], &[3, 0, 0], &[4, 0, 0], &[5, 0, 0]],
        );
        assert!(is_corner_cut(&s));
    }

    #[test]
    fn box_staircase_is_not_a_corner_cut() {
        // the 2x3 box in two variables cannot be cut off by one hyperplane
        let s = staircase(2, &[&[0, 0], &[1, 0], &[2, 0], &[0, 1], &[1, 1], &[2, 1]]);
        assert!(!is_corner_cut(&s));
    }

    #[test]
    fn staircase_enumeration_counts_partitions() {
        // order ideals of size 6 in two variables = partitions of 6
        let all = enumerate_staircases(2, 6, None).unwrap();
        assert_eq!(all.len(), 11);
        // and in one variable there is exactly the chain
        let one = enumerate_staircases(1, 4, None).unwrap();
        assert_eq!(one.len(), 1);
    }

    #[test]
    fn orbit_classification_closure() {
        let a = staircase(2, &[&[0, 0], &[1, 0]]);
        let b = a.swapped(0, 1);
        let classes = classify_orbits(&[a.clone(), b.clone()]);
        assert_eq!(classes.len(), 1);
        assert!(classes[0].closed);
        let half = classify_orbits(&[a]);
        assert_eq!(half.len(), 1);
        assert!(!half[0].closed);
    }

    #[test]
    fn symmetric_singleton_class() {
        let s = staircase(2, &[&[0, 0], &[1, 0], &[0, 1]]);
        let classes = classify_orbits(&[s]);
        assert_eq!(classes.len(), 1);
        assert!(classes[0].closed);
        assert_eq!(classes[0].members, vec![0]);
    }

    #[test]
    fn single_point_fan() {
        let design = Design::new(
            Vars::numbered("x", 2),
            vec![vec![q(2), q(3)]],
        )
        .unwrap();
        let fan = enumerate_fan(&design, &FanLimits::default()).unwrap();
        assert_eq!(fan.models.len(), 1);
        assert_eq!(fan.models[0].staircase.len(), 1);
        assert_eq!(state_geometry(&fan).vertices, vec![vec![0, 0]]);
    }

    #[test]
    fn budget_error_carries_partial() {
        let design = Design::two_level_full_factorial(2).unwrap();
        let limits = FanLimits { max_models: Some(0), time_budget: None };
        match enumerate_fan(&design, &limits) {
            Err(FanError::Budget { partial }) => {
                assert!(!partial.complete);
                assert!(partial.models.is_empty());
            }
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn full_factorial_is_echelon() {
        // 3x3 grid: a single model in the fan
        let levels = vec![vec![q(-1), q(0), q(1)], vec![q(-1), q(0), q(1)]];
        let design = Design::full_factorial(Vars::numbered("x", 2), &levels).unwrap();
        let fan = enumerate_fan(&design, &FanLimits::default()).unwrap();
        assert_eq!(fan.models.len(), 1);
        assert_eq!(fan.classes.len(), 1);
        assert!(fan.classes[0].closed);
        let geo = state_geometry(&fan);
        assert_eq!(geo.vertices.len(), 1);
    }

    #[test]
    fn membership_rejects_wrong_cardinality() {
        let design = Design::two_level_full_factorial(2).unwrap();
        let too_small = staircase(2, &[&[0, 0]]);
        assert!(matches!(
            model_membership(&design, &too_small),
            Err(Error::WrongCardinality { .. })
        ));
    }

    #[test]
    fn membership_detects_singular_models() {
        // two points sharing their first coordinate cannot estimate {1, x1}
        let design = Design::new(
            Vars::numbered("x", 2),
            vec![vec![q(1), q(0)], vec![q(1), q(2)]],
        )
        .unwrap();
        let m = staircase(2, &[&[0, 0], &[1, 0]]);
        assert!(matches!(
            model_membership(&design, &m).unwrap(),
            Membership::NotEstimable
        ));
        // while {1, x2} is identified, with a certified witness
        let m2 = staircase(2, &[&[0, 0], &[0, 1]]);
        match model_membership(&design, &m2).unwrap() {
            Membership::Member { witness } => {
                let gb = gb_for_weight(&design, &witness).unwrap();
                assert_eq!(gb.quotient_basis().unwrap(), m2);
            }
            other => panic!("expected member, got {other:?}"),
        }
    }
}
