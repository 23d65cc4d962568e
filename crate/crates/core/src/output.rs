//! Serializable output records and renderers shared by the CLI and the
//! verification report. All rendering is deterministic: fixed field order,
//! fixed float formatting, no timestamps.

use serde::Serialize;

use crate::catalog::{list_catalog, SymmetricSpace};
use crate::error::Result;
use crate::orbit::{DecisionCase, OrbitClass, SmoothnessVerdict};
use crate::plancherel::{SeriesDiagnosis, SeriesVerdict};

/// One catalog row as emitted by `rankone catalog`.
#[derive(Debug, Clone, Serialize)]
pub struct CatalogRow {
    pub family: String,
    pub q: Option<u32>,
    pub m_alpha: u32,
    pub m_2alpha: u32,
    pub root_kind: String,
    pub dim_gk: u32,
    pub a: f64,
    pub b: f64,
    pub name: String,
}

impl CatalogRow {
    pub fn from_space(s: &SymmetricSpace) -> Self {
        let p = s.jacobi_params();
        CatalogRow {
            family: s.family.tag().to_string(),
            q: s.family.q(),
            m_alpha: s.m_alpha,
            m_2alpha: s.m_2alpha,
            root_kind: format!("{:?}", s.root_kind),
            dim_gk: s.dim_gk,
            a: p.a,
            b: p.b,
            name: s.name.clone(),
        }
    }
}

pub fn catalog_rows(max_q: u32) -> Result<Vec<CatalogRow>> {
    Ok(list_catalog(max_q)?
        .iter()
        .map(CatalogRow::from_space)
        .collect())
}

pub fn catalog_json(max_q: u32) -> Result<String> {
    let rows = catalog_rows(max_q)?;
    Ok(serde_json::to_string_pretty(&rows).expect("catalog rows serialize"))
}

pub fn catalog_text(max_q: u32) -> Result<String> {
    let rows = catalog_rows(max_q)?;
    let mut out = String::new();
    out.push_str(&format!(
        "{:<6} {:>3} {:>7} {:>8} {:>9} {:>6} {:>5} {:>5}  {}\n",
        "family", "q", "m_alpha", "m_2alpha", "root_kind", "dim_gk", "a", "b", "name"
    ));
    for r in rows {
        out.push_str(&format!(
            "{:<6} {:>3} {:>7} {:>8} {:>9} {:>6} {:>5} {:>5}  {}\n",
            r.family,
            r.q.map_or("-".to_string(), |q| q.to_string()),
            r.m_alpha,
            r.m_2alpha,
            r.root_kind,
            r.dim_gk,
            r.a,
            r.b,
            r.name
        ));
    }
    Ok(out)
}

/// JSON document emitted by `rankone spherical`.
#[derive(Debug, Clone, Serialize)]
pub struct SphericalReport {
    pub space: String,
    pub q: Option<u32>,
    pub n: u32,
    pub t: f64,
    pub value: f64,
    pub prefactor_log: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<SphericalOracleReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SphericalOracleReport {
    pub hypergeometric: f64,
    pub abs_diff: f64,
}

/// JSON document emitted by `rankone classify`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassifyReport {
    pub space: String,
    pub q: Option<u32>,
    pub classes: Vec<OrbitClass>,
    pub l1: bool,
    pub l2: bool,
    pub case_fired: DecisionCase,
    pub case_label: String,
    pub dim_sum: u32,
    pub dim_gk: u32,
}

impl ClassifyReport {
    pub fn from_verdict(space: &SymmetricSpace, v: &SmoothnessVerdict) -> Self {
        ClassifyReport {
            space: space.family.tag().to_string(),
            q: space.family.q(),
            classes: v.classes.clone(),
            l1: v.l1,
            l2: v.l2,
            case_fired: v.route_case_analysis.case,
            case_label: v.route_case_analysis.case.label().to_string(),
            dim_sum: v.route_dimension.dim_sum,
            dim_gk: v.route_dimension.dim_gk,
        }
    }
}

/// JSON document emitted by `rankone norm`.
#[derive(Debug, Clone, Serialize)]
pub struct NormReport {
    pub verdict: SeriesVerdict,
    pub tail_exponent: Option<f64>,
    pub log_slope: f64,
    pub r_squared: f64,
    pub closed_form_l2: bool,
    pub agree: bool,
}

impl NormReport {
    pub fn new(d: &SeriesDiagnosis, closed_form_l2: bool, agree: bool) -> Self {
        NormReport {
            verdict: d.verdict,
            tail_exponent: d.tail_exponent,
            log_slope: d.log_slope,
            r_squared: d.r_squared,
            closed_form_l2,
            agree,
        }
    }
}

/// CSV rendering of series checkpoints next to their dyadic block means.
/// Columns: `N,S_N,block_mean` with the block mean given on the rows where
/// a block boundary has just been passed (empty otherwise).
pub fn checkpoints_csv(trace: &crate::plancherel::SeriesTrace) -> String {
    let mut out = String::from("N,S_N,block_mean\n");
    let mut block_iter = trace.block_means.iter().peekable();
    for (n, s) in &trace.checkpoints {
        let mut mean_cell = String::new();
        while let Some((j, m)) = block_iter.peek() {
            // block j is complete once n reaches 2^{j+1} - 1
            let block_end = 2u64.saturating_pow(*j + 1);
            if block_end <= *n + 1 {
                mean_cell = format!("{m:e}");
                block_iter.next();
            } else {
                break;
            }
        }
        out.push_str(&format!("{n},{s:e},{mean_cell}\n"));
    }
    out
}

/// CSV table emitted by `rankone dims`.
pub fn dims_csv(space: &SymmetricSpace, n_max: u32, check_quadrature: bool) -> Result<String> {
    let mut out = String::from("n,dim,quadrature_dim,rel_err\n");
    for n in 0..=n_max {
        let d = crate::dimension::dim_spherical(space, n);
        if check_quadrature && n <= 50 {
            let q = crate::dimension::dim_by_quadrature(space, n, 2 * n as usize + 64)?;
            let rel = (q - d.dim).abs() / d.dim;
            out.push_str(&format!("{n},{},{q:e},{rel:e}\n", d.dim));
        } else {
            out.push_str(&format!("{n},{},,\n", d.dim));
        }
    }
    Ok(out)
}
