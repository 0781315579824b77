//! Designs as finite rational point sets and their vanishing ideals.
//!
//! Point ideals are computed with the Buchberger-Moller algorithm: grow the
//! staircase in increasing term order, testing each candidate monomial's
//! evaluation vector for linear dependence on the staircase so far. Each
//! dependence yields one reduced-basis element, so the output is the unique
//! reduced Groebner basis without ever running generic Buchberger.

use std::collections::{BTreeSet, HashMap};
use std::io::Read;
use std::path::Path;
use std::sync::{Arc, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::groebner::{buchberger, GroebnerBasis, Ideal};
use crate::linalg::{Inserted, QMatrix, SpanTracker};
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::polynomial::Polynomial;
use crate::rational::parse_rational;
use crate::staircase::Staircase;
use crate::vars::Vars;
use crate::{Error, Result};

/// An ordered list of n distinct points in Q^k with named variables.
///
/// Reduced Groebner bases are memoized per term order; the cache is safe for
/// concurrent readers and cache writes are idempotent.
#[derive(Debug)]
pub struct Design {
    vars: Vars,
    points: Vec<Vec<BigRational>>,
    cache: RwLock<HashMap<TermOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Design {
    fn clone(&self) -> Self {
        Design {
            vars: self.vars.clone(),
            points: self.points.clone(),
            cache: RwLock::new(self.cache.read().expect("cache lock").clone()),
        }
    }
}

impl PartialEq for Design {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.points == other.points
    }
}

impl Eq for Design {}

impl Design {
    pub fn new(vars: Vars, points: Vec<Vec<BigRational>>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyDesign);
        }
        for point in &points {
            if point.len() != vars.arity() {
                return Err(Error::ArityMismatch { expected: vars.arity(), found: point.len() });
            }
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::DuplicatePoint { first: i, second: j });
                }
            }
        }
        Ok(Design { vars, points, cache: RwLock::new(HashMap::new()) })
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn arity(&self) -> usize {
        self.vars.arity()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<BigRational>] {
        &self.points
    }

    pub fn contains_point(&self, point: &[BigRational]) -> bool {
        self.points.iter().any(|p| p == point)
    }

    /// All coordinates in {-1, +1}.
    pub fn is_two_level(&self) -> bool {
        let one = BigRational::one();
        let minus_one = -BigRational::one();
        self.points
            .iter()
            .all(|p| p.iter().all(|c| *c == one || *c == minus_one))
    }

    /// Evaluation vector of a monomial over the design points.
    pub fn monomial_values(&self, m: &Monomial) -> Result<Vec<BigRational>> {
        self.points.iter().map(|p| m.evaluate(p)).collect()
    }

    /// Evaluation vector of a polynomial over the design points.
    pub fn support_vector(&self, f: &Polynomial) -> Result<Vec<BigRational>> {
        self.points.iter().map(|p| f.evaluate(p)).collect()
    }

    /// Reduced Groebner basis of the vanishing ideal, memoized per order.
    pub fn groebner_basis(&self, order: &TermOrder) -> Result<Arc<GroebnerBasis>> {
        if let Some(gb) = self.cache.read().expect("cache lock").get(order) {
            return Ok(Arc::clone(gb));
        }
        let gb = Arc::new(self.groebner_basis_uncached(order)?);
        self.cache
            .write()
            .expect("cache lock")
            .insert(order.clone(), Arc::clone(&gb));
        Ok(gb)
    }

    /// Buchberger-Moller without touching the cache.
    pub fn groebner_basis_uncached(&self, order: &TermOrder) -> Result<GroebnerBasis> {
        let k = self.arity();
        if let Some(fixed) = order.fixed_arity() {
            if fixed != k {
                return Err(Error::ArityMismatch { expected: fixed, found: k });
            }
        }
        let n = self.len();
        let mut tracker = SpanTracker::new(n);
        let mut staircase: Vec<Monomial> = Vec::new();
        let mut leading: Vec<Monomial> = Vec::new();
        let mut elements: Vec<Polynomial> = Vec::new();
        let mut values: HashMap<Monomial, Vec<BigRational>> = HashMap::new();
        let mut candidates: BTreeSet<Monomial> = BTreeSet::new();
        candidates.insert(Monomial::unit(k));
        values.insert(Monomial::unit(k), vec![BigRational::one(); n]);

        while !candidates.is_empty() {
            // pop the order-minimal candidate
            let mut iter = candidates.iter();
            let mut min = iter.next().expect("nonempty").clone();
            for c in iter {
                if order.compare(c, &min)? == std::cmp::Ordering::Less {
                    min = c.clone();
                }
            }
            candidates.remove(&min);
            if leading.iter().any(|lt| lt.divides(&min)) {
                continue;
            }
            let v = values
                .get(&min)
                .cloned()
                .expect("candidate values precomputed");
            match tracker.insert(v) {
                Inserted::Dependent(combo) => {
                    // min - sum combo_s * s vanishes on the design and its
                    // tail is supported on the staircase: a reduced element
                    let mut g = Polynomial::from_monomial(min.clone(), BigRational::one());
                    for (s, c) in staircase.iter().zip(&combo) {
                        g.add_term(s.clone(), -c.clone());
                    }
                    leading.push(min);
                    elements.push(g);
                }
                Inserted::Independent => {
                    for i in 0..k {
                        let next = min.times_variable(i);
                        if values.contains_key(&next) || leading.iter().any(|lt| lt.divides(&next))
                        {
                            continue;
                        }
                        let base = values.get(&min).expect("present");
                        let col: Vec<BigRational> = base
                            .iter()
                            .zip(&self.points)
                            .map(|(b, p)| b * &p[i])
                            .collect();
                        values.insert(next.clone(), col);
                        candidates.insert(next);
                    }
                    staircase.push(min);
                }
            }
        }
        debug_assert_eq!(staircase.len(), n, "staircase size must equal design size");

        let mut keyed: Vec<(Monomial, Polynomial)> =
            leading.into_iter().zip(elements).collect();
        keyed.sort_by(|(a, _), (b, _)| order.compare(a, b).expect("consistent arity"));
        Ok(GroebnerBasis::new_reduced(
            order.clone(),
            k,
            keyed.into_iter().map(|(_, g)| g).collect(),
        ))
    }

    /// The saturated model identified by the design under this order.
    pub fn model(&self, order: &TermOrder) -> Result<Staircase> {
        self.groebner_basis(order)?.quotient_basis()
    }

    /// Exact evaluation matrix: rows are design points, columns the model
    /// monomials. Square and nonsingular when the model is a quotient basis.
    pub fn evaluation_matrix(&self, model: &Staircase) -> Result<EvaluationMatrix> {
        if model.len() > self.len() {
            return Err(Error::WrongCardinality { expected: self.len(), found: model.len() });
        }
        self.monomial_matrix(&model.monomials())
    }

    /// Evaluation matrix over an arbitrary monomial list.
    pub fn monomial_matrix(&self, monomials: &[Monomial]) -> Result<EvaluationMatrix> {
        let mut rows = Vec::with_capacity(self.len());
        for p in &self.points {
            let mut row = Vec::with_capacity(monomials.len());
            for m in monomials {
                row.push(m.evaluate(p)?);
            }
            rows.push(row);
        }
        Ok(EvaluationMatrix { monomials: monomials.to_vec(), matrix: QMatrix::from_rows(rows) })
    }

    /// Unique interpolator of the observations, supported on the quotient
    /// basis for the given order.
    pub fn interpolate(&self, values: &[BigRational], order: &TermOrder) -> Result<Polynomial> {
        if values.len() != self.len() {
            return Err(Error::WrongCardinality { expected: self.len(), found: values.len() });
        }
        let model = self.model(order)?;
        let em = self.evaluation_matrix(&model)?;
        let coeffs = em
            .matrix
            .solve(values)
            .ok_or_else(|| Error::Internal("singular evaluation matrix on a quotient basis".into()))?;
        Polynomial::from_terms(
            self.arity(),
            em.monomials.into_iter().zip(coeffs),
        )
    }

    /// Same design with columns permuted so `ranking` lists the variables
    /// from highest to lowest.
    pub fn with_ranking(&self, ranking: &[String]) -> Result<Design> {
        if ranking.len() != self.arity() {
            return Err(Error::Parse(format!(
                "ranking must list all {} variables",
                self.arity()
            )));
        }
        let mut perm = Vec::with_capacity(ranking.len());
        for name in ranking {
            let idx = self
                .vars
                .index_of(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}` in ranking")))?;
            if perm.contains(&idx) {
                return Err(Error::Parse(format!("variable `{name}` repeated in ranking")));
            }
            perm.push(idx);
        }
        let vars = Vars::new(ranking.to_vec())?;
        let points = self
            .points
            .iter()
            .map(|p| perm.iter().map(|&i| p[i].clone()).collect())
            .collect();
        Design::new(vars, points)
    }

    // ---- constructors -------------------------------------------------

    /// Cartesian product of per-factor level lists; the last factor varies
    /// fastest.
    pub fn full_factorial(vars: Vars, levels: &[Vec<BigRational>]) -> Result<Design> {
        if levels.len() != vars.arity() {
            return Err(Error::ArityMismatch { expected: vars.arity(), found: levels.len() });
        }
        if levels.iter().any(Vec::is_empty) {
            return Err(Error::Parse("every factor needs at least one level".into()));
        }
        let mut points = vec![Vec::new()];
        for axis in levels {
            let mut next = Vec::with_capacity(points.len() * axis.len());
            for p in &points {
                for level in axis {
                    let mut q = p.clone();
                    q.push(level.clone());
                    next.push(q);
                }
            }
            points = next;
        }
        Design::new(vars, points)
    }

    /// The {-1,+1}^k factorial with variables x1..xk.
    pub fn two_level_full_factorial(k: usize) -> Result<Design> {
        let levels: Vec<Vec<BigRational>> =
            vec![vec![-BigRational::one(), BigRational::one()]; k];
        Design::full_factorial(Vars::numbered("x", k), &levels)
    }

    /// Regular two-level fraction: the points of {-1,+1}^k on which each
    /// defining word (a set of factor indices) has the given product sign.
    pub fn regular_fraction(k: usize, words: &[(Vec<usize>, bool)]) -> Result<Design> {
        for (word, _) in words {
            if word.is_empty() {
                return Err(Error::Parse("defining word must name at least one factor".into()));
            }
            if word.iter().any(|&i| i >= k) {
                return Err(Error::Parse("defining word names an unknown factor".into()));
            }
        }
        let full = Design::two_level_full_factorial(k)?;
        let one = BigRational::one();
        let points: Vec<Vec<BigRational>> = full
            .points
            .iter()
            .filter(|p| {
                words.iter().all(|(word, positive)| {
                    let mut prod = BigRational::one();
                    for &i in word {
                        prod *= &p[i];
                    }
                    (prod == one) == *positive
                })
            })
            .cloned()
            .collect();
        if points.is_empty() {
            return Err(Error::EmptyVariety);
        }
        Design::new(Vars::numbered("x", k), points)
    }

    /// The eight-run Plackett-Burman design: seven circular shifts of the
    /// generator + + + - + - - followed by the all-plus point.
    pub fn plackett_burman_8() -> Design {
        let generator = [1i64, 1, 1, -1, 1, -1, -1];
        let mut points = Vec::with_capacity(8);
        for shift in 0..7 {
            let row: Vec<BigRational> = (0..7)
                .map(|j| BigRational::from_integer(generator[(j + 7 - shift) % 7].into()))
                .collect();
            points.push(row);
        }
        points.push(vec![BigRational::one(); 7]);
        Design::new(Vars::numbered("x", 7), points).expect("valid by construction")
    }

    /// Fold each generator row (emit the row, then its negation), then add
    /// the center point.
    pub fn foldover_plus_center(vars: Vars, rows: &[Vec<BigRational>]) -> Result<Design> {
        let mut points = Vec::with_capacity(rows.len() * 2 + 1);
        for row in rows {
            if row.len() != vars.arity() {
                return Err(Error::ArityMismatch { expected: vars.arity(), found: row.len() });
            }
            points.push(row.clone());
            points.push(row.iter().map(|c| -c.clone()).collect());
        }
        points.push(vec![BigRational::zero(); vars.arity()]);
        Design::new(vars, points)
    }

    /// Read a design from CSV: a header row of variable names, then rows of
    /// exact rationals (`-1`, `0.4`, `2/5`). Lines starting with `#` are
    /// comments. The leftmost column is the highest-ranked variable.
    pub fn from_csv_reader<R: Read>(reader: R) -> Result<Design> {
        let mut rdr = csv::ReaderBuilder::new()
            .has_headers(true)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = rdr.headers()?.clone();
        let vars = Vars::new(headers.iter().map(str::to_string).collect::<Vec<_>>())?;
        let mut points = Vec::new();
        for record in rdr.records() {
            let record = record?;
            let mut point = Vec::with_capacity(vars.arity());
            for cell in record.iter() {
                point.push(parse_rational(cell)?);
            }
            if point.len() != vars.arity() {
                return Err(Error::ArityMismatch { expected: vars.arity(), found: point.len() });
            }
            points.push(point);
        }
        Design::new(vars, points)
    }

    pub fn from_csv_str(text: &str) -> Result<Design> {
        Design::from_csv_reader(text.as_bytes())
    }

    pub fn from_csv_path<P: AsRef<Path>>(path: P) -> Result<Design> {
        let file = std::fs::File::open(path)?;
        Design::from_csv_reader(file)
    }
}

/// Rows indexed by design points, columns by model monomials.
#[derive(Debug, Clone)]
pub struct EvaluationMatrix {
    pub monomials: Vec<Monomial>,
    pub matrix: QMatrix,
}

/// Reduced Groebner basis of the sum of two generator-presented ideals,
/// e.g. a full-factorial ideal plus defining-fraction equations. Errors if
/// the combined zero set is empty or not finite.
pub fn ideal_sum_gb(
    base: &[Polynomial],
    fraction: &[Polynomial],
    order: &TermOrder,
) -> Result<GroebnerBasis> {
    let gens: Vec<Polynomial> = base.iter().chain(fraction).cloned().collect();
    let arity = gens.first().map(Polynomial::arity).ok_or(Error::InvalidGenerators)?;
    let ideal = Ideal::new(arity, gens)?;
    let gb = buchberger(&ideal, order)?;
    if gb
        .elements()
        .iter()
        .any(|g| g.monomials().all(Monomial::is_unit))
    {
        return Err(Error::EmptyVariety);
    }
    gb.quotient_basis()?; // rejects positive-dimensional sums
    Ok(gb)
}
