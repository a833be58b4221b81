//! The acceptance criteria, one PASS/FAIL line each. Exits nonzero if any fails.

use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use nichols_core::braiding::{CartanSpec, CartanType};
use nichols_core::catalog::{catalog, example_rank2_basis, Family};
use nichols_core::errata::errata_report;
use nichols_core::oracle::{LieVariant, NicholsOracle};
use nichols_core::roots::{count_connected_oracle, dim_l_closed, dim_l_recursive};
use nichols_core::structure::lminus_rank2_basis;
use nichols_core::sweeps::{self, over_catalog, SweepTotals, DEFAULT_SEED};
use num_bigint::BigInt;

type Outcome = Result<Vec<String>, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, msg: impl Into<String>) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: nichols_core::Error) -> String {
    e.to_string()
}

fn totals(t: SweepTotals) -> Result<String, String> {
    if t.passed() {
        Ok(format!(
            "{}: {} checks over {} matrices",
            t.sweep, t.checked, t.matrices
        ))
    } else {
        let shown: Vec<_> = t.violations.iter().take(5).cloned().collect();
        Err(format!(
            "{}: {} violations, e.g. {}",
            t.sweep,
            t.violations.len(),
            shown.join("; ")
        ))
    }
}

fn rank2_basis_example() -> Outcome {
    let b = example_rank2_basis();
    let basis = lminus_rank2_basis(&b, 10).map_err(err)?;
    let words: Vec<String> = basis
        .pairs
        .iter()
        .map(|&p| nichols_core::structure::rank2_monomial(p).to_string())
        .collect();
    let expected = [
        (0, 1),
        (1, 0),
        (1, 1),
        (1, 2),
        (2, 1),
        (3, 1),
        (3, 2),
        (4, 1),
    ];
    check(basis.pairs == expected, format!("basis {:?}", basis.pairs))?;
    let oracle = NicholsOracle::new(&b);
    for pair in [(2u64, 2u64), (4, 2)] {
        let w = nichols_core::structure::rank2_monomial(pair);
        check(
            !oracle.is_zero_word(&w).map_err(err)?,
            format!("{w} vanishes"),
        )?;
        check(
            !oracle.in_lie_word(&w, LieVariant::Minus).map_err(err)?,
            format!("{w} lies in the Lie algebra"),
        )?;
    }
    Ok(vec![format!("basis {}", words.join(", "))])
}

fn triple(spec: &CartanSpec) -> Result<(BigInt, BigInt, BigInt), String> {
    Ok((
        dim_l_closed(spec).map_err(err)?,
        dim_l_recursive(spec).map_err(err)?,
        count_connected_oracle(spec),
    ))
}

fn type_a_dimensions() -> Outcome {
    let mut checked = 0;
    for rank in 1..=5 {
        for order in 2..=5 {
            let spec = CartanSpec::with_order(CartanType::A, rank, order).map_err(err)?;
            let (closed, recursive, oracle) = triple(&spec)?;
            check(
                closed == oracle && recursive == oracle,
                format!("A{rank}, N={order}: {closed} / {recursive} / {oracle}"),
            )?;
            checked += 1;
        }
    }
    for (rank, value) in [(2, 7), (3, 62)] {
        let spec = CartanSpec::with_order(CartanType::A, rank, 2).map_err(err)?;
        check(
            count_connected_oracle(&spec) == BigInt::from(value),
            format!("A{rank}, N=2 ≠ {value}"),
        )?;
    }
    Ok(vec![format!(
        "{checked} (rank, N) pairs agree; A2 → 7, A3 → 62"
    )])
}

fn type_g2_dimensions() -> Outcome {
    let mut values = Vec::new();
    for order in 2..=7u64 {
        let spec = CartanSpec::with_order(CartanType::G2, 2, order).map_err(err)?;
        let n = BigInt::from(order);
        let expected = if order % 3 == 0 {
            (BigInt::from(order / 3)).pow(3) * n.pow(3) - 1
        } else {
            n.pow(6) - 1
        };
        let (closed, recursive, oracle) = triple(&spec)?;
        check(
            closed == expected && recursive == expected && oracle == expected,
            format!("G2, N={order}: {closed} / {recursive} / {oracle}, expected {expected}"),
        )?;
        values.push(format!("N={order} → {expected}"));
    }
    Ok(vec![values.join(", ")])
}

fn other_types() -> Outcome {
    let mut grid = Vec::new();
    for (kind, ranks) in [
        (CartanType::B, 2..=4),
        (CartanType::C, 3..=4),
        (CartanType::D, 4..=5),
    ] {
        for rank in ranks {
            for order in 2..=4 {
                grid.push((kind, rank, order));
            }
        }
    }
    grid.push((CartanType::E6, 6, 2));
    for &(kind, rank, order) in &grid {
        let spec = CartanSpec::with_order(kind, rank, order).map_err(err)?;
        let (recursive, oracle) = (
            dim_l_recursive(&spec).map_err(err)?,
            count_connected_oracle(&spec),
        );
        check(
            recursive == oracle,
            format!("{kind}{rank}, N={order}: recursive {recursive}, oracle {oracle}"),
        )?;
    }
    let report = errata_report().map_err(err)?;
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../errata.json");
    let on_disk = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    check(on_disk == report.to_json(), "errata.json is stale")?;
    let bad: Vec<String> = report
        .formulas
        .iter()
        .filter(|f| f.mismatches > 0)
        .map(|f| format!("{} ({}/{})", f.id, f.mismatches, f.checked))
        .collect();
    Ok(vec![
        format!("{} recursive values agree", grid.len()),
        format!(
            "{} closed-form evaluations, mismatches recorded: {}",
            report.checked,
            bad.join(", ")
        ),
    ])
}

fn connectivity_sweep() -> Outcome {
    let n = catalog().len();
    let families = [Family::QuantumLinear, Family::CartanChain, Family::Mixed];
    check(
        n >= 20
            && families
                .iter()
                .all(|f| catalog().iter().any(|e| e.family == *f)),
        "catalog too small",
    )?;
    Ok(vec![totals(
        over_catalog("connectivity", |e| sweeps::connectivity(e, 4)).map_err(err)?,
    )?])
}

fn pairing_identities() -> Outcome {
    Ok(vec![
        totals(
            over_catalog("pairing_formulas", |e| sweeps::pairing_formulas(e, 3, 2)).map_err(err)?,
        )?,
        totals(
            over_catalog("bracket_identities", |e| sweeps::bracket_identities(e, 2))
                .map_err(err)?,
        )?,
    ])
}

fn ladder_and_rank2() -> Outcome {
    Ok(vec![
        totals(over_catalog("closed_forms", |e| sweeps::closed_forms(e, 3, 2)).map_err(err)?)?,
        totals(sweeps::rank2_criterion_over_grid(6).map_err(err)?)?,
    ])
}

fn decision_procedures() -> Outcome {
    let prop64 = sweeps::prop_6_4_over_catalog().map_err(err)?;
    check(
        prop64.matrices > 0,
        "no finite-dimensional quantum linear instances",
    )?;
    Ok(vec![
        totals(over_catalog("prop_6_3", sweeps::prop_6_3_brute_force).map_err(err)?)?,
        totals(prop64)?,
    ])
}

fn property_sweeps() -> Outcome {
    Ok(vec![
        totals(over_catalog("order_criterion", |e| sweeps::order_criterion(e, 5)).map_err(err)?)?,
        totals(
            over_catalog("disjoint_monomials", |e| sweeps::disjoint_monomials(e, 5))
                .map_err(err)?,
        )?,
        totals(
            over_catalog("disjoint_products", |e| {
                sweeps::disjoint_products(e, 5, 3, DEFAULT_SEED)
            })
            .map_err(err)?,
        )?,
        totals(
            over_catalog("disconnected_bracketings", |e| {
                sweeps::disconnected_bracketings(e, 5)
            })
            .map_err(err)?,
        )?,
    ])
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "rank-2 basis of the minus Lie algebra, golden example",
            rank2_basis_example,
        ),
        ("type A dimension agreement", type_a_dimensions),
        ("type G2 dimensions", type_g2_dimensions),
        ("types B, C, D, E6 with recorded errata", other_types),
        (
            "connectivity criterion over the catalog",
            connectivity_sweep,
        ),
        (
            "pairing formulas and bracket identities",
            pairing_identities,
        ),
        (
            "ladder closed form and rank-2 membership criterion",
            ladder_and_rank2,
        ),
        (
            "decision procedures against brute force",
            decision_procedures,
        ),
        (
            "nonvanishing and bracketing property sweeps",
            property_sweeps,
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(details) => {
                println!("PASS criterion {}: {name} ({secs:.1}s)", i + 1);
                for d in details {
                    println!("    {d}");
                }
            }
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.1}s)", i + 1);
                println!("    {why}");
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
