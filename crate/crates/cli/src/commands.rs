use std::io::Write;
use std::path::Path;
use std::time::Duration;

use hctree::coloring::{
    check_order, coloring_from_order, greedy_coloring, hc_via_conditions, lower_bound, verify as verify_coloring,
    ColoringError, LinearOrder,
};
use hctree::families::FamilySpec;
use hctree::oracle::{brute_force_hc, random_tree, OracleBudget};
use hctree::tree::{diameter, is_db_half, Tree};
use serde::Serialize;

use crate::files::{load_coloring, load_order, load_tree, to_json, ColoringFile, TreeFile};
use crate::{
    AnalyzeArgs, CliError, ColorArgs, FamilyKind, GenArgs, OracleArgs, VerifyArgs, EXIT_INVALID, EXIT_NO_ORDER, EXIT_OK,
};

pub(crate) fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => out.write_all(text.as_bytes()).map_err(CliError::Output),
    }
}

fn need(value: Option<u32>, flag: &str, family: &str) -> Result<u32, CliError> {
    value.ok_or_else(|| CliError::Input(format!("--{flag} is required for {family}")))
}

pub(crate) fn spec_for(
    kind: FamilyKind,
    k: Option<u32>,
    d: Option<u32>,
    m: Option<u32>,
) -> Result<FamilySpec, CliError> {
    let name = format!("{kind:?}").to_lowercase();
    Ok(match kind {
        FamilyKind::Symmetric => FamilySpec::Symmetric {
            k: need(k, "k", &name)?,
            d: need(d, "d", &name)?,
        },
        FamilyKind::Firecracker => FamilySpec::Firecracker {
            m: need(m, "m", &name)?,
            k: need(k, "k", &name)?,
        },
        FamilyKind::Caterpillar => FamilySpec::Caterpillar {
            m: need(m, "m", &name)?,
            k: need(k, "k", &name)?,
        },
        FamilyKind::Pathpendant => FamilySpec::PathPlusPendant {
            m: need(m, "m", &name)?,
        },
        FamilyKind::Random => return Err(CliError::Input("random is not a closed-form family".into())),
    })
}

pub fn gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let file = match args.family {
        FamilyKind::Random => {
            let n = args
                .n
                .ok_or_else(|| CliError::Input("--n is required for random".into()))?;
            if n == 0 {
                return Err(CliError::Input("--n must be at least 1".into()));
            }
            let seed = args
                .seed
                .ok_or_else(|| CliError::Input("--seed is required for random".into()))?;
            TreeFile::from_tree(&random_tree(n, seed))
        }
        kind => TreeFile::from_instance(&spec_for(kind, args.k, args.d, args.m)?.generate()?),
    };
    emit(args.output.as_deref(), &to_json(&file), out)?;
    Ok(EXIT_OK)
}

#[derive(Debug, Serialize)]
struct Analysis {
    n: usize,
    max_degree: usize,
    diameter: u32,
    centers: Vec<usize>,
    epsilon: u32,
    epsilon_prime: u32,
    total_level: u64,
    db_half: bool,
    lower_bound: Option<i64>,
}

fn analysis(tree: &Tree) -> Analysis {
    let c = tree.center_info();
    Analysis {
        n: tree.n(),
        max_degree: tree.max_degree(),
        diameter: diameter(tree),
        centers: c.centers.clone(),
        epsilon: c.epsilon(),
        epsilon_prime: c.epsilon_prime(),
        total_level: tree.level_table().total,
        db_half: is_db_half(tree),
        lower_bound: lower_bound(tree).ok(),
    }
}

pub fn analyze(args: &AnalyzeArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let loaded = load_tree(&args.tree)?;
    let a = analysis(&loaded.tree);
    let text = if args.json {
        to_json(&a)
    } else {
        let centers: Vec<String> = a.centers.iter().map(usize::to_string).collect();
        let bound = match a.lower_bound {
            Some(b) => b.to_string(),
            None => "n/a (the bound needs n >= 4 and max degree >= 3)".into(),
        };
        format!(
            "n: {}\nmax_degree: {}\ndiameter: {}\ncenters: {}\nepsilon: {}\nepsilon_prime: {}\ntotal_level: {}\ndb_half: {}\nlower_bound: {}\n",
            a.n,
            a.max_degree,
            a.diameter,
            centers.join(" "),
            a.epsilon,
            a.epsilon_prime,
            a.total_level,
            a.db_half,
            bound
        )
    };
    emit(None, &text, out)?;
    Ok(EXIT_OK)
}

/// Vertices by (level, id): the order the greedy fallback colors in.
fn level_order(tree: &Tree) -> LinearOrder {
    let levels = &tree.level_table().level;
    let mut vs: Vec<usize> = tree.vertices().collect();
    vs.sort_by_key(|&v| (levels[v], v));
    LinearOrder::new(tree.n(), vs).expect("vertices form a permutation")
}

pub fn color(args: &ColorArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let loaded = load_tree(&args.tree)?;
    let tree = &loaded.tree;
    let bound = lower_bound(tree).ok();
    let order = match args.order.as_str() {
        "auto" => None,
        "canonical" => Some(
            loaded
                .canonical_order()
                .ok_or_else(|| CliError::Input("tree file has no canonical order".into()))??,
        ),
        path => Some(load_order(Path::new(path), tree.n())?),
    };

    let (coloring, optimal, code) = match order {
        None => match hc_via_conditions(tree) {
            Ok(cert) => (cert.coloring, Some(true), EXIT_OK),
            Err(e @ (ColoringError::NoQualifiedOrder | ColoringError::HypothesisViolated { .. })) => {
                let _ = writeln!(err, "note: {e}; writing a greedy coloring instead");
                (greedy_coloring(tree, &level_order(tree)), None, EXIT_NO_ORDER)
            }
            Err(e) => return Err(CliError::Input(e.to_string())),
        },
        Some(order) => {
            let report = check_order(tree, &order, !is_db_half(tree)).map_err(|e| CliError::Input(e.to_string()))?;
            if bound.is_some() && report.all_hold() {
                let c = coloring_from_order(tree, &order).map_err(|e| CliError::Input(e.to_string()))?;
                (c, Some(true), EXIT_OK)
            } else {
                if let Some((pos, why)) = &report.first_violation {
                    let _ = writeln!(
                        err,
                        "note: order fails at position {pos} ({why:?}); writing a greedy coloring"
                    );
                } else {
                    let _ = writeln!(err, "note: the bound does not apply; writing a greedy coloring");
                }
                (greedy_coloring(tree, &order), None, EXIT_NO_ORDER)
            }
        }
    };
    emit(
        args.output.as_deref(),
        &to_json(&ColoringFile::new(&coloring, optimal, bound)),
        out,
    )?;
    if args.output.is_some() {
        emit(None, &format!("span: {}\n", coloring.span()), out)?;
    }
    Ok(code)
}

pub fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let loaded = load_tree(&args.tree)?;
    let coloring = load_coloring(&args.coloring, loaded.tree.n())?;
    let report = verify_coloring(&loaded.tree, &coloring).map_err(|e| CliError::Input(e.to_string()))?;
    if report.is_valid() {
        emit(None, &format!("valid: span {}\n", coloring.span()), out)?;
        return Ok(EXIT_OK);
    }
    let mut text = format!("invalid: {} violating pairs\n", report.violations.len());
    for v in report.violations.iter().take(20) {
        text.push_str(&format!(
            "  {} {}: distance {} + color gap {} < {}\n",
            v.u,
            v.v,
            v.distance,
            v.color_gap,
            loaded.tree.n() - 1
        ));
    }
    emit(None, &text, out)?;
    Ok(EXIT_INVALID)
}

pub fn oracle(args: &OracleArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let loaded = load_tree(&args.tree)?;
    let time_limit = match args.time_limit {
        Some(s) if !(s.is_finite() && s >= 0.0) => {
            return Err(CliError::Input(
                "--time-limit must be a non-negative number of seconds".into(),
            ))
        }
        s => s.map(Duration::from_secs_f64),
    };
    let budget = OracleBudget {
        max_n: args.max_n,
        node_limit: args.node_limit,
        time_limit,
    };
    let exact = brute_force_hc(&loaded.tree, &budget)?;
    let bound = lower_bound(&loaded.tree).ok();
    let order: Vec<String> = exact.order.as_slice().iter().map(usize::to_string).collect();
    let bound_text = bound.map_or_else(|| "n/a".to_string(), |b| b.to_string());
    emit(
        None,
        &format!(
            "hc: {}\nlower_bound: {}\norder: {}\n",
            exact.value,
            bound_text,
            order.join(" ")
        ),
        out,
    )?;
    if let Some(path) = &args.output {
        emit(
            Some(path),
            &to_json(&ColoringFile::new(&exact.witness, Some(true), bound)),
            out,
        )?;
    }
    Ok(EXIT_OK)
}
