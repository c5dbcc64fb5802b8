//! Output rendering: human tables, CSV, and JSON. The CSV and JSON
//! layouts are stable interfaces pinned by golden-file tests; integers in
//! JSON are decimal strings so arbitrary precision survives any consumer.

use ascent_core::cyclic_module::StabilityReport;
use ascent_core::growth::{GrowthSeries, RateReport};
use ascent_core::quotients::{CyclicSeparation, SeparationReport};
use ascent_core::witness::{render_pair_word, FreenessStatus, FreenessVerdict};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

// ---- growth ----------------------------------------------------------

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthJson {
    pub group: String,
    pub generators: Vec<String>,
    pub radius: u32,
    pub truncated: bool,
    pub spheres: Vec<String>,
    pub balls: Vec<String>,
}

impl GrowthJson {
    pub fn of(series: &GrowthSeries) -> Self {
        GrowthJson {
            group: series.group_spec.clone(),
            generators: series.generator_names.clone(),
            radius: series.radius(),
            truncated: series.truncated,
            spheres: series.spheres.iter().map(|v| v.to_string()).collect(),
            balls: series.balls.iter().map(|v| v.to_string()).collect(),
        }
    }
}

pub fn growth_csv(series: &GrowthSeries) -> String {
    let mut out = String::from("n,sphere,ball\n");
    for n in 0..series.spheres.len() {
        out.push_str(&format!(
            "{},{},{}\n",
            n, series.spheres[n], series.balls[n]
        ));
    }
    out
}

pub fn growth_table(series: &GrowthSeries, rates: Option<&RateReport>) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "growth of {} over generators {{{}}}\n",
        series.group_spec,
        series.generator_names.join(", ")
    ));
    out.push_str("  n  sphere    ball\n");
    for n in 0..series.spheres.len() {
        out.push_str(&format!(
            "{:>3}  {:>6}  {:>6}\n",
            n, series.spheres[n], series.balls[n]
        ));
    }
    if series.truncated {
        out.push_str("(truncated: element budget reached)\n");
    }
    if let Some(r) = rates {
        out.push_str("doubling ratios log2(ball(2n)/ball(n)):\n");
        for (n, v) in &r.doubling {
            out.push_str(&format!("  n={n}: {v:.6}\n"));
        }
    }
    out
}

pub fn render_growth(series: &GrowthSeries, rates: Option<&RateReport>, fmt: Format) -> String {
    match fmt {
        Format::Table => growth_table(series, rates),
        Format::Csv => growth_csv(series),
        Format::Json => to_json(&GrowthJson::of(series)),
    }
}

// ---- witness ---------------------------------------------------------

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub group: String,
    /// Coset representative in canonical display form.
    pub u: String,
    /// The pair (t, t*u) in canonical display form.
    pub pair: [String; 2],
    /// "FREE-UP-TO-L" or "COLLISION".
    pub status: String,
    pub budget: u32,
    pub distinct: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub collision: Option<[String; 2]>,
}

pub fn witness_json(
    group_spec: &str,
    u: &str,
    pair: [&str; 2],
    verdict: &FreenessVerdict,
) -> WitnessJson {
    let (status, collision) = match &verdict.status {
        FreenessStatus::FreeUpTo => (format!("FREE-UP-TO-{}", verdict.budget), None),
        FreenessStatus::Collision { first, second, .. } => (
            "COLLISION".to_string(),
            Some([render_pair_word(first), render_pair_word(second)]),
        ),
    };
    WitnessJson {
        group: group_spec.to_string(),
        u: u.to_string(),
        pair: [pair[0].to_string(), pair[1].to_string()],
        status,
        budget: verdict.budget,
        distinct: verdict.distinct.to_string(),
        collision,
    }
}

pub fn render_witness(j: &WitnessJson, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(j),
        // table and csv coincide: the verdict is a single record
        _ => {
            let mut out = String::new();
            out.push_str(&format!("group: {}\n", j.group));
            out.push_str(&format!("u: {}\n", j.u));
            out.push_str(&format!("pair: ({}, {})\n", j.pair[0], j.pair[1]));
            out.push_str(&format!(
                "verdict: {} ({} distinct elements)\n",
                j.status, j.distinct
            ));
            if let Some([w1, w2]) = &j.collision {
                out.push_str(&format!("collision: \"{w1}\" = \"{w2}\"\n"));
            }
            out
        }
    }
}

// ---- module ----------------------------------------------------------

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct ModuleJson {
    pub f: String,
    pub f0: String,
    #[serde(rename = "tStable")]
    pub t_stable: bool,
    #[serde(rename = "fgAbelian")]
    pub fg_abelian: bool,
    pub rank: Option<u32>,
    pub companion: Option<String>,
    pub witness: Option<String>,
    #[serde(rename = "groupSpec")]
    pub group_spec: Option<String>,
}

pub fn module_json(
    f: &ascent_core::LaurentPolynomial,
    f0: &ascent_core::LaurentPolynomial,
    report: &StabilityReport,
    group_spec: Option<String>,
) -> ModuleJson {
    ModuleJson {
        f: f.to_string(),
        f0: f0.to_string(),
        t_stable: report.t_stable,
        fg_abelian: report.fg_abelian,
        rank: report.rank.map(|r| r as u32),
        companion: report.companion.as_ref().map(|c| c.to_literal()),
        witness: report.witness.clone(),
        group_spec,
    }
}

pub fn render_module(j: &ModuleJson, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(j),
        _ => {
            let mut out = String::new();
            out.push_str(&format!("f: {}\n", j.f));
            out.push_str(&format!("f0: {}\n", j.f0));
            out.push_str(&format!("tStable: {}\n", j.t_stable));
            out.push_str(&format!("fgAbelian: {}\n", j.fg_abelian));
            if let Some(r) = j.rank {
                out.push_str(&format!("rank: {r}\n"));
            }
            if let Some(c) = &j.companion {
                out.push_str(&format!("companion: {c}\n"));
            }
            if let Some(w) = &j.witness {
                out.push_str(&format!("witness: {w}\n"));
            }
            if let Some(g) = &j.group_spec {
                out.push_str(&format!("group: {g}\n"));
            }
            out
        }
    }
}

// ---- separation ------------------------------------------------------

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparateRecordJson {
    pub degree: u32,
    pub a_perm: String,
    pub t_perm: String,
    pub order_a: String,
    pub in_subgroup: bool,
}

#[derive(Debug, PartialEq, Serialize, Deserialize)]
pub struct SeparateJson {
    pub n: String,
    #[serde(rename = "maxDegree")]
    pub max_degree: u32,
    pub records: Vec<SeparateRecordJson>,
    /// "never-separated" or "separated-in-some-quotient".
    pub verdict: String,
}

pub fn separate_json(report: &SeparationReport) -> SeparateJson {
    SeparateJson {
        n: report.n.to_string(),
        max_degree: report.max_degree as u32,
        records: report
            .records
            .iter()
            .map(|r| SeparateRecordJson {
                degree: r.hom.degree as u32,
                a_perm: r.hom.a.to_cycle_string(),
                t_perm: r.hom.t.to_cycle_string(),
                order_a: r.order_a.to_string(),
                in_subgroup: r.in_subgroup,
            })
            .collect(),
        verdict: if report.separated {
            "separated-in-some-quotient".to_string()
        } else {
            "never-separated".to_string()
        },
    }
}

pub fn separate_csv(j: &SeparateJson) -> String {
    let mut out = String::from("degree,a_perm,t_perm,order_a,in_subgroup\n");
    for r in &j.records {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.degree, r.a_perm, r.t_perm, r.order_a, r.in_subgroup
        ));
    }
    out
}

pub fn render_separate(j: &SeparateJson, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(j),
        Format::Csv => separate_csv(j),
        Format::Table => {
            let mut out = String::new();
            out.push_str(&format!(
                "homomorphisms BS(1,{}) -> S_m for m <= {}\n",
                j.n, j.max_degree
            ));
            out.push_str("degree  a            t            order(a)  a in <a^n>\n");
            for r in &j.records {
                out.push_str(&format!(
                    "{:>6}  {:<12} {:<12} {:>8}  {}\n",
                    r.degree, r.a_perm, r.t_perm, r.order_a, r.in_subgroup
                ));
            }
            out.push_str(&format!("verdict: {}\n", j.verdict));
            out
        }
    }
}

pub fn render_cyclic_separation(s: &CyclicSeparation, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json(&serde_json::json!({
            "modulus": s.modulus.to_string(),
            "imageOfA": s.image_of_a.to_string(),
            "subgroupImage": s.subgroup_image.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "verdict": "separated",
        })),
        _ => format!(
            "quotient Z -> Z/{}: image of a = {}, image of <a^{}> = {{0}}; separated\n",
            s.modulus, s.image_of_a, s.modulus
        ),
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
