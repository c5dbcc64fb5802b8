//! Command-line surface over the ascending-extension library: build a
//! group, run the witness pipeline, measure growth, analyze a cyclic
//! module, or enumerate finite quotients.
//!
//! Exit codes: 0 success; 2 parse error; 3 budget exceeded / truncated;
//! 4 not properly ascending; 5 free-semigroup collision; 6 separating
//! quotient found (signals a bug in the non-polycyclic cases).

mod parse;
mod render;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use ascent_core::cyclic_module::{self, CyclicModulePresentation};
use ascent_core::group::{Group, GroupSpec};
use ascent_core::growth;
use ascent_core::quotients;
use ascent_core::witness::{
    verify_free_semigroup, AscentData, FreenessStatus, WitnessError, DEFAULT_LENGTH_BUDGET,
};
use clap::{Parser, Subcommand};
use render::Format;

const EXIT_PARSE: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_NOT_ASCENDING: u8 = 4;
const EXIT_COLLISION: u8 = 5;
const EXIT_SEPARATED: u8 = 6;

#[derive(Parser)]
#[command(
    name = "ascent-lab",
    about = "Exact computations around properly ascending HNN extensions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Ball sizes of the Cayley graph, with rate diagnostics.
    Growth {
        #[arg(long)]
        group: String,
        /// Ball radius; defaults to 16 for polynomial-growth families
        /// (heis, zd) and 12 otherwise.
        #[arg(long)]
        radius: Option<u32>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Element cap (also via ASCENT_LAB_BUDGET).
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Coset representative, witness pair, and exhaustive freeness check.
    Witness {
        #[arg(long)]
        group: String,
        #[arg(long = "max-len", default_value_t = DEFAULT_LENGTH_BUDGET)]
        max_len: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        budget: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cyclic-module stability analysis of a Laurent polynomial.
    Module {
        #[arg(long)]
        poly: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Separation of a from <a^n> across all symmetric-group quotients.
    Separate {
        #[arg(long)]
        group: String,
        #[arg(long = "max-degree", default_value_t = 6)]
        max_degree: usize,
        /// Cyclic contrast mode (zd:1 only): separate <a^index> from a.
        #[arg(long)]
        index: Option<u64>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Module analysis followed by the witness pipeline on the induced
    /// group.
    Ascend {
        #[arg(long)]
        poly: String,
        #[arg(long = "max-len", default_value_t = 10)]
        max_len: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn element_budget(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("ASCENT_LAB_BUDGET")
            .ok()
            .and_then(|v| v.parse().ok())
    })
    .unwrap_or(ascent_core::witness::DEFAULT_ELEMENT_CAP)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), u8> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            eprintln!("cannot write {}: {e}", path.display());
            EXIT_PARSE
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|_| EXIT_PARSE)
        }
    }
}

fn build_group(spec_str: &str) -> Result<Group, u8> {
    let spec = parse::parse_group_spec(spec_str).map_err(|e| {
        eprintln!("{e}");
        EXIT_PARSE
    })?;
    Group::build(spec).map_err(|e| {
        eprintln!("invalid group: {e}");
        EXIT_PARSE
    })
}

fn default_radius(spec: &GroupSpec) -> u32 {
    match spec {
        GroupSpec::Heisenberg | GroupSpec::FreeAbelian { .. } => 16,
        _ => 12,
    }
}

fn cmd_growth(
    group: &str,
    radius: Option<u32>,
    format: Format,
    budget: Option<usize>,
    out: Option<&PathBuf>,
) -> Result<u8, u8> {
    let g = build_group(group)?;
    let radius = radius.unwrap_or_else(|| default_radius(g.spec()));
    let series = growth::growth_series(&g, radius, element_budget(budget));
    let rates = growth::rate_diagnostics(&series).ok();
    emit(
        &render::render_growth(&series, rates.as_ref(), format),
        out,
    )?;
    if series.truncated {
        eprintln!("series truncated by element budget");
        Ok(EXIT_BUDGET)
    } else {
        Ok(0)
    }
}

fn cmd_witness(
    group: &str,
    max_len: u32,
    format: Format,
    budget: Option<usize>,
    out: Option<&PathBuf>,
) -> Result<u8, u8> {
    let g = build_group(group)?;
    let run = || -> Result<(String, [String; 2], ascent_core::witness::FreenessVerdict), WitnessError> {
        let data = AscentData::new(&g)?;
        let u = data.find_coset_representative()?;
        let (s1, s2) = data.witness_pair()?;
        let verdict = verify_free_semigroup(&g, &s1, &s2, max_len, element_budget(budget))?;
        Ok((
            g.display_element(&u),
            [g.display_element(&s1), g.display_element(&s2)],
            verdict,
        ))
    };
    match run() {
        Ok((u, pair, verdict)) => {
            let j = render::witness_json(&g.spec_string(), &u, [&pair[0], &pair[1]], &verdict);
            emit(&render::render_witness(&j, format), out)?;
            match verdict.status {
                FreenessStatus::FreeUpTo => Ok(0),
                FreenessStatus::Collision { .. } => Ok(EXIT_COLLISION),
            }
        }
        Err(e) => {
            eprintln!("{e}");
            Ok(match e {
                WitnessError::NotProperlyAscending => EXIT_NOT_ASCENDING,
                WitnessError::BudgetExceeded => EXIT_BUDGET,
                WitnessError::UnsupportedFamily => EXIT_PARSE,
            })
        }
    }
}

fn analyze_module(poly: &str) -> Result<(CyclicModulePresentation, render::ModuleJson), u8> {
    let f = parse::parse_nonzero_polynomial(poly).map_err(|e| {
        eprintln!("{e}");
        EXIT_PARSE
    })?;
    let p = CyclicModulePresentation::new(f).map_err(|e| {
        eprintln!("{e}");
        EXIT_PARSE
    })?;
    let report = cyclic_module::t_stability(&p);
    let group_spec = cyclic_module::build_metabelian_group(&p)
        .ok()
        .map(|spec| Group::build(spec).expect("companion is injective").spec_string());
    let j = render::module_json(p.f(), p.f0(), &report, group_spec);
    Ok((p, j))
}

fn cmd_module(poly: &str, format: Format, out: Option<&PathBuf>) -> Result<u8, u8> {
    let (_, j) = analyze_module(poly)?;
    emit(&render::render_module(&j, format), out)?;
    Ok(0)
}

fn cmd_separate(
    group: &str,
    max_degree: usize,
    index: Option<u64>,
    format: Format,
    out: Option<&PathBuf>,
) -> Result<u8, u8> {
    let spec = parse::parse_group_spec(group).map_err(|e| {
        eprintln!("{e}");
        EXIT_PARSE
    })?;
    match (spec, index) {
        (GroupSpec::FreeAbelian { dim: 1 }, Some(k)) if k >= 2 => {
            let s = quotients::polycyclic_separation_demo(k);
            emit(&render::render_cyclic_separation(&s, format), out)?;
            Ok(0)
        }
        (GroupSpec::BaumslagSolitar { n }, None) => {
            let report = quotients::separation_report(n, max_degree).map_err(|e| {
                eprintln!("{e}");
                EXIT_PARSE
            })?;
            let j = render::separate_json(&report);
            emit(&render::render_separate(&j, format), out)?;
            if report.separated {
                eprintln!("unexpected separating quotient found");
                Ok(EXIT_SEPARATED)
            } else {
                Ok(0)
            }
        }
        _ => {
            eprintln!(
                "separate expects --group bs:<n>, or --group zd:1 with --index <k> for the cyclic contrast"
            );
            Err(EXIT_PARSE)
        }
    }
}

fn cmd_ascend(poly: &str, max_len: u32, format: Format, out: Option<&PathBuf>) -> Result<u8, u8> {
    let (_, j) = analyze_module(poly)?;
    let mut text = render::render_module(&j, format);
    let Some(spec) = &j.group_spec else {
        eprintln!("no induced group: polynomial is not monic after normalization");
        emit(&text, out)?;
        return Ok(EXIT_NOT_ASCENDING);
    };
    let spec = spec.clone();
    // run the witness pipeline on the induced group
    let g = build_group(&spec)?;
    let run = || -> Result<_, WitnessError> {
        let data = AscentData::new(&g)?;
        let u = data.find_coset_representative()?;
        let (s1, s2) = data.witness_pair()?;
        let verdict = verify_free_semigroup(&g, &s1, &s2, max_len, element_budget(None))?;
        Ok((
            g.display_element(&u),
            [g.display_element(&s1), g.display_element(&s2)],
            verdict,
        ))
    };
    match run() {
        Ok((u, pair, verdict)) => {
            let wj = render::witness_json(&spec, &u, [&pair[0], &pair[1]], &verdict);
            text.push_str(&render::render_witness(&wj, format));
            emit(&text, out)?;
            match verdict.status {
                FreenessStatus::FreeUpTo => Ok(0),
                FreenessStatus::Collision { .. } => Ok(EXIT_COLLISION),
            }
        }
        Err(WitnessError::NotProperlyAscending) => {
            text.push_str("not properly ascending: no witness pair\n");
            emit(&text, out)?;
            Ok(EXIT_NOT_ASCENDING)
        }
        Err(e) => {
            eprintln!("{e}");
            Ok(EXIT_BUDGET)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Growth {
            group,
            radius,
            format,
            budget,
            out,
        } => cmd_growth(group, *radius, *format, *budget, out.as_ref()),
        Cmd::Witness {
            group,
            max_len,
            format,
            budget,
            out,
        } => cmd_witness(group, *max_len, *format, *budget, out.as_ref()),
        Cmd::Module { poly, format, out } => cmd_module(poly, *format, out.as_ref()),
        Cmd::Separate {
            group,
            max_degree,
            index,
            format,
            out,
        } => cmd_separate(group, *max_degree, *index, *format, out.as_ref()),
        Cmd::Ascend {
            poly,
            max_len,
            format,
            out,
        } => cmd_ascend(poly, *max_len, *format, out.as_ref()),
    };
    match result {
        Ok(code) | Err(code) => ExitCode::from(code),
    }
}
