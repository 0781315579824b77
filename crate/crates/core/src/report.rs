//! Serializable report schemas shared by the CLI and tests.
//!
//! Reports are plain data with deterministic field and element order, so two
//! runs over the same input produce byte-identical text and JSON.

use serde::Serialize;

use crate::alias::AliasTable;
use crate::design::Design;
use crate::fan::{CornerCutReport, FanReport, StateGeometry};
use crate::hilbert::HilbertSeries;
use crate::indicator::IndicatorFunction;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::polynomial::Polynomial;
use crate::rational::rational_to_string;
use crate::staircase::Staircase;
use crate::vars::Vars;

#[derive(Debug, Clone, Serialize)]
pub struct ModelReport {
    pub order: String,
    pub variables: Vec<String>,
    pub staircase: Vec<Vec<u32>>,
    pub monomials: Vec<String>,
}

/// Model monomials ascending under the active order.
pub fn model_report(design: &Design, model: &Staircase, order: &TermOrder) -> ModelReport {
    let mut monos = model.monomials();
    monos.sort_by(|a, b| order.compare(a, b).expect("consistent arity"));
    ModelReport {
        order: order.name(),
        variables: design.vars().names().to_vec(),
        staircase: monos.iter().map(|m| m.exponents().to_vec()).collect(),
        monomials: monos.iter().map(|m| m.to_string_with(design.vars())).collect(),
    }
}

impl ModelReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("order: {}\n", self.order));
        out.push_str(&format!("model ({} terms): {}\n", self.monomials.len(), self.monomials.join(", ")));
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GroebnerReport {
    pub order: String,
    pub variables: Vec<String>,
    pub basis: Vec<String>,
}

pub fn groebner_report(
    vars: &Vars,
    basis: &[Polynomial],
    order: &TermOrder,
) -> GroebnerReport {
    GroebnerReport {
        order: order.name(),
        variables: vars.names().to_vec(),
        basis: basis.iter().map(|g| g.to_string_with(vars, order)).collect(),
    }
}

impl GroebnerReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("order: {}\n", self.order));
        out.push_str(&format!("reduced Groebner basis ({} elements):\n", self.basis.len()));
        for g in &self.basis {
            out.push_str(&format!("  {g}\n"));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalFormReport {
    pub order: String,
    pub input: String,
    pub normal_form: String,
}

impl NormalFormReport {
    pub fn to_text(&self) -> String {
        format!("{}\n", self.normal_form)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AliasRowReport {
    pub key: String,
    pub members: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct AliasTableReport {
    pub order: String,
    pub variables: Vec<String>,
    pub rows: Vec<AliasRowReport>,
}

pub fn alias_table_report(design: &Design, table: &AliasTable) -> AliasTableReport {
    let vars = design.vars();
    AliasTableReport {
        order: table.order.name(),
        variables: vars.names().to_vec(),
        rows: table
            .rows
            .iter()
            .map(|row| AliasRowReport {
                key: row.key.to_string_with(vars, &table.order),
                members: row.members.iter().map(|m| m.to_string_with(vars)).collect(),
            })
            .collect(),
    }
}

impl AliasTableReport {
    /// One row per line, members joined by ` = `, read row-wise.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&row.members.join(" = "));
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AliasPairReport {
    pub order: String,
    pub f: String,
    pub g: String,
    pub aliased: bool,
}

impl AliasPairReport {
    pub fn to_text(&self) -> String {
        format!("{}\n", if self.aliased { "aliased" } else { "not aliased" })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CoefficientEntry {
    pub monomial: String,
    pub coefficient: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IndicatorReport {
    pub order: String,
    pub variables: Vec<String>,
    pub fraction_size: usize,
    pub base_size: usize,
    pub polynomial: String,
    pub coefficients: Vec<CoefficientEntry>,
}

pub fn indicator_report(ind: &IndicatorFunction) -> IndicatorReport {
    let vars = ind.base().vars();
    let order = ind.order();
    let mut terms: Vec<(&Monomial, String)> = ind
        .polynomial()
        .terms()
        .map(|(m, c)| (m, rational_to_string(c)))
        .collect();
    terms.sort_by(|a, b| order.compare(a.0, b.0).expect("consistent arity"));
    IndicatorReport {
        order: order.name(),
        variables: vars.names().to_vec(),
        fraction_size: ind.fraction_points().len(),
        base_size: ind.base().len(),
        polynomial: ind.polynomial().to_string_with(vars, order),
        coefficients: terms
            .into_iter()
            .map(|(m, coefficient)| CoefficientEntry {
                monomial: m.to_string_with(vars),
                coefficient,
            })
            .collect(),
    }
}

impl IndicatorReport {
    pub fn to_text(&self) -> String {
        format!(
            "indicator of a {}-point fraction in a {}-point base design:\n  g = {}\n",
            self.fraction_size, self.base_size, self.polynomial
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OrthPairReport {
    pub a: String,
    pub b: String,
    pub sum: String,
    pub orthogonal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrthReport {
    pub order: String,
    pub variables: Vec<String>,
    pub max_degree: u32,
    pub pairs: Vec<OrthPairReport>,
}

impl OrthReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.pairs {
            out.push_str(&format!(
                "{} , {} : sum = {} ({})\n",
                p.a,
                p.b,
                p.sum,
                if p.orthogonal { "orthogonal" } else { "not orthogonal" }
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HilbertReport {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub zero_dimensional: bool,
    pub series: Option<String>,
    pub coefficients: Option<Vec<u64>>,
    pub ideal_numerator: String,
}

pub fn hilbert_report(vars: &Vars, generators: &[Monomial], hs: &HilbertSeries) -> HilbertReport {
    HilbertReport {
        variables: vars.names().to_vec(),
        generators: generators.iter().map(|m| m.to_string_with(vars)).collect(),
        zero_dimensional: hs.is_zero_dimensional(),
        series: hs.quotient_string(),
        coefficients: hs.quotient.clone(),
        ideal_numerator: hs.ideal_numerator_string(),
    }
}

impl HilbertReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match &self.series {
            Some(s) => out.push_str(&format!("HS(s) = {s}\n")),
            None => out.push_str("quotient is not zero-dimensional (infinite staircase)\n"),
        }
        out.push_str(&format!(
            "monomials inside the ideal: ({}) / (1-s)^{}\n",
            self.ideal_numerator,
            self.variables.len()
        ));
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FanClassReport {
    pub representative: Vec<String>,
    pub size: usize,
    pub closed: bool,
    pub hilbert_series: String,
    pub total_degree: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct FanModelReport {
    pub monomials: Vec<String>,
    pub staircase: Vec<Vec<u32>>,
    pub state_vector: Vec<u64>,
    pub total_degree: u32,
    pub witness: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FanReportJson {
    pub variables: Vec<String>,
    pub points: usize,
    pub complete: bool,
    pub model_count: usize,
    pub class_count: usize,
    pub classes: Vec<FanClassReport>,
    pub models: Vec<FanModelReport>,
}

fn series_string(series: &[u64]) -> String {
    let hs = HilbertSeries {
        arity: 0,
        quotient: Some(series.to_vec()),
        ideal_numerator: Vec::new(),
    };
    hs.quotient_string().unwrap_or_else(|| "0".into())
}

pub fn fan_report_json(fan: &FanReport) -> FanReportJson {
    let vars = &fan.vars;
    let classes = fan
        .classes
        .iter()
        .map(|class| {
            let rep = &fan.models[class.members[0]];
            FanClassReport {
                representative: rep.staircase.to_strings(vars),
                size: class.members.len(),
                closed: class.closed,
                hilbert_series: series_string(&rep.series),
                total_degree: rep.total_degree,
            }
        })
        .collect();
    let models = fan
        .models
        .iter()
        .map(|m| FanModelReport {
            monomials: m.staircase.to_strings(vars),
            staircase: m.staircase.sorted_exponents(),
            state_vector: m.state_vector.clone(),
            total_degree: m.total_degree,
            witness: m.witness.iter().map(rational_to_string).collect(),
        })
        .collect();
    FanReportJson {
        variables: vars.names().to_vec(),
        points: fan.points,
        complete: fan.complete,
        model_count: fan.models.len(),
        class_count: fan.classes.len(),
        classes,
        models,
    }
}

impl FanReportJson {
    /// Summary table: one line per class, mirroring the per-class degree,
    /// Hilbert series and closure-flag presentation of fan summaries.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "algebraic fan: {} models in {} classes over {} points{}\n",
            self.model_count,
            self.class_count,
            self.points,
            if self.complete { "" } else { " (PARTIAL: budget exhausted)" }
        ));
        out.push_str("class  degree  HS(s)                 size  example model\n");
        for (i, class) in self.classes.iter().enumerate() {
            out.push_str(&format!(
                "{:<5}  {:<6}  {:<20}  {:>3}{}  {}\n",
                i + 1,
                class.total_degree,
                class.hilbert_series,
                class.size,
                if class.closed { "*" } else { " " },
                class.representative.join(", ")
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct StatePolytopeReport {
    pub variables: Vec<String>,
    pub model_count: usize,
    pub state_vectors: Vec<Vec<u64>>,
    pub vertices: Vec<Vec<u64>>,
    pub min_total_degree: u32,
}

pub fn state_polytope_report(fan: &FanReport, geometry: &StateGeometry) -> StatePolytopeReport {
    StatePolytopeReport {
        variables: fan.vars.names().to_vec(),
        model_count: fan.models.len(),
        state_vectors: geometry.state_vectors.clone(),
        vertices: geometry.vertices.clone(),
        min_total_degree: geometry.min_total_degree,
    }
}

impl StatePolytopeReport {
    pub fn to_text(&self) -> String {
        let fmt = |v: &Vec<u64>| {
            format!(
                "({})",
                v.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
            )
        };
        let mut out = String::new();
        out.push_str(&format!(
            "{} state vectors, {} polytope vertices, minimal total degree {}\n",
            self.state_vectors.len(),
            self.vertices.len(),
            self.min_total_degree
        ));
        out.push_str("vertices:\n");
        for v in &self.vertices {
            out.push_str(&format!("  {}\n", fmt(v)));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CornerCutsReport {
    pub variables: Vec<String>,
    pub fan_models: usize,
    pub fan_corner_cuts: usize,
    pub all_corner_cuts: usize,
    pub generic: bool,
}

pub fn corner_cuts_report(r: &CornerCutReport) -> CornerCutsReport {
    CornerCutsReport {
        variables: r.fan.vars.names().to_vec(),
        fan_models: r.fan.models.len(),
        fan_corner_cuts: r.fan_corner_cuts.len(),
        all_corner_cuts: r.all_corner_cuts.len(),
        generic: r.generic,
    }
}

impl CornerCutsReport {
    pub fn to_text(&self) -> String {
        format!(
            "fan models: {}\ncorner cuts in the fan: {}\ncorner cut staircases of this size: {}\ngeneric design: {}\n",
            self.fan_models, self.fan_corner_cuts, self.all_corner_cuts, self.generic
        )
    }
}
