//! Command implementations. Each command is a thin adapter over the library:
//! it loads files, calls the corresponding operations and renders a report.
//! Exit codes: 0 success (all requested predicates hold), 1 mathematical
//! failure, 2 parse or I/O failure.

use std::path::Path;

use workbench_core::{
    build_tau, center_of_radical, decompose_elementary, enumerate_theta_with_limit, io,
    radical_power_basis, LinearMap, MapError, ProperKind,
};

use crate::report::Report;

#[derive(Debug)]
pub struct Failure {
    pub exit: i32,
    pub message: String,
}

impl Failure {
    pub fn parse(message: impl ToString) -> Self {
        Failure {
            exit: 2,
            message: message.to_string(),
        }
    }

    pub fn math(message: impl ToString) -> Self {
        Failure {
            exit: 1,
            message: message.to_string(),
        }
    }
}

/// Rendered stdout text plus the process exit code.
pub type Outcome = (String, i32);

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))
}

fn basename(path: &Path) -> String {
    path.file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn load_poset(path: &Path) -> Result<io::PosetFile, Failure> {
    let file = io::parse_poset_file(&read(path)?).map_err(Failure::parse)?;
    if file.field.characteristic() == 2 {
        eprintln!(
            "warning: field has characteristic 2; signs in sigma compatibility and in \
             decreasing-chain transport collapse (-1 = 1)"
        );
    }
    Ok(file)
}

fn load_map(path: &Path, file: &io::PosetFile) -> Result<LinearMap, Failure> {
    io::parse_map_file(&file.poset, file.field, &read(path)?).map_err(Failure::parse)
}

pub fn cmd_report(poset_path: &Path, machine: bool) -> Result<Outcome, Failure> {
    let file = load_poset(poset_path)?;
    let p = &file.poset;
    let mut report = Report::new();

    let section = report.section("poset");
    section.row("elements", p.size());
    section.row("labels", p.labels().join(" "));
    section.row("field", file.field);

    let chains = p.maximal_chains();
    let section = report.section("maximal chains");
    section.row("chains", chains.len());
    for (i, chain) in chains.iter().enumerate() {
        section.row(format!("chain.{i}"), p.render_vertices(chain));
    }

    let cycles = p.enumerate_cycles();
    let section = report.section("cycles");
    section.row("cycles", cycles.len());
    for (i, cycle) in cycles.iter().enumerate() {
        section.row(format!("cycle.{i}"), p.render_vertices(cycle.vertices()));
    }

    let section = report.section("radical filtration");
    for m in 1..=p.size() {
        let dim = radical_power_basis(p, m).len();
        section.row(format!("dim_j.{m}"), dim);
        if dim == 0 {
            break;
        }
    }

    let center = center_of_radical(p);
    let section = report.section("radical centre");
    section.row("dim_z", center.len());
    for (i, b) in center.iter().enumerate() {
        section.row(format!("z.{i}"), io::basis_token(p, b.x, b.y));
    }

    report.section("duality").row(
        "poset_anti_isomorphism",
        if p.self_anti_isomorphism_exists() {
            "yes"
        } else {
            "no"
        },
    );

    Ok((report.render(machine), 0))
}

pub fn cmd_verify(
    poset_path: &Path,
    map_path: &Path,
    lie: bool,
    elementary: bool,
    proper: bool,
    machine: bool,
) -> Result<Outcome, Failure> {
    if !(lie || elementary || proper) {
        return Err(Failure::parse(
            "nothing to verify: pass at least one of --lie, --elementary, --proper",
        ));
    }
    let file = load_poset(poset_path)?;
    let map = load_map(map_path, &file)?;

    let mut report = Report::new();
    let section = report.section("verdicts");
    let mut all_hold = true;
    if lie {
        let verdict = map.is_lie_automorphism();
        all_hold &= verdict;
        section.row("lie", verdict);
    }
    if elementary {
        let verdict = map.is_elementary();
        all_hold &= verdict;
        section.row("elementary", verdict);
    }
    if proper {
        match map.is_proper() {
            Ok(Some(witness)) => {
                section.row("proper", true);
                section.row(
                    "proper.kind",
                    match witness.kind {
                        ProperKind::Automorphism => "automorphism",
                        ProperKind::NegativeOfAntiAutomorphism => "negative-anti-automorphism",
                    },
                );
                let alphas: Vec<String> =
                    witness.alphas.iter().map(ToString::to_string).collect();
                section.row("proper.alpha", alphas.join(" "));
            }
            Ok(None) => {
                all_hold = false;
                section.row("proper", false);
            }
            Err(MapError::NotLieAutomorphism) => {
                all_hold = false;
                section.row("proper", false);
                section.row("proper.note", "not a Lie automorphism");
            }
            Err(e) => return Err(Failure::math(e)),
        }
    }
    Ok((report.render(machine), i32::from(!all_hold)))
}

pub fn cmd_decompose(poset_path: &Path, map_path: &Path, machine: bool) -> Result<Outcome, Failure> {
    let file = load_poset(poset_path)?;
    let map = load_map(map_path, &file)?;
    let (unit, tau) = map.decompose_inner_elementary().map_err(Failure::math)?;
    let triple = decompose_elementary(&tau).map_err(Failure::math)?;
    let p = &file.poset;

    let mut report = Report::new();
    report.section("inner unit").row("beta", unit.beta());
    let section = report.section("elementary part");
    for (&(x, y), &(u, v)) in triple.theta().pairs() {
        section.arrow_row(
            format!("theta {}", io::basis_token(p, x, y)),
            io::basis_token(p, u, v),
        );
    }
    for (&(x, y), value) in triple.sigma().entries() {
        section.row(format!("sigma {} {}", p.label(x), p.label(y)), value);
    }
    let c_text: Vec<String> = triple.c().values().iter().map(ToString::to_string).collect();
    section.row("c", c_text.join(" "));
    Ok((report.render(machine), 0))
}

pub fn cmd_build_tau(
    poset_path: &Path,
    triple_path: &Path,
    complete_sigma: bool,
    output: Option<&Path>,
) -> Result<Outcome, Failure> {
    let file = load_poset(poset_path)?;
    let data = io::parse_triple_file(&file.poset, file.field, &read(triple_path)?)
        .map_err(Failure::parse)?;
    let triple = io::assemble_triple(&file.poset, file.field, &data, complete_sigma)
        .map_err(Failure::math)?;
    let tau = build_tau(&triple);
    let text = io::format_map_file(&tau, Some(&basename(poset_path)));
    match output {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| Failure::parse(format!("{}: {e}", path.display())))?;
            Ok((String::new(), 0))
        }
        None => Ok((text, 0)),
    }
}

pub fn cmd_enumerate_theta(
    poset_path: &Path,
    count_only: bool,
    limit: usize,
    machine: bool,
) -> Result<Outcome, Failure> {
    let file = load_poset(poset_path)?;
    let p = &file.poset;
    let found = enumerate_theta_with_limit(p, limit).map_err(Failure::math)?;

    let mut report = Report::new();
    let section = report.section("enumeration");
    section.row("count", found.len());
    if !count_only {
        for (i, theta) in found.iter().enumerate() {
            let rendered: Vec<String> = theta
                .pairs()
                .map(|(&(x, y), &(u, v))| {
                    format!(
                        "{}->{}",
                        io::basis_token(p, x, y),
                        io::basis_token(p, u, v)
                    )
                })
                .collect();
            section.row(format!("theta.{i}"), rendered.join(" "));
        }
    }
    Ok((report.render(machine), 0))
}
