use std::fmt::Write as _;
use std::io::Read;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use polysym::algebra::multiply;
use polysym::coeff::structure_constants;
use polysym::oracle::{brute_force_structure, expansion_queries, matrix_cells};
use polysym::sequences::{
    sequence_table, stacked_tabular_mismatches, SequenceName, STACKED_TABULAR_VALUES,
};
use polysym::series::{gf_product_check, GfKind};
use polysym::stack::stack_partitions;
use polysym::{
    convert, divisor_coeff, eh_coeff, evaluate_identity, expand_type, omega_via, s_coeff,
    signed_coeff, structure_coeff, to_m, BasisTag, CoefficientQuery, EhKind, IdentityId,
    OmegaRoute, PolyElement, SignedKind, StackPartition,
};

use crate::cache::MatrixCache;
use crate::{Cli, CoeffKind, Command, Failure, Format, Route, Suite, TableName};

type Outcome = Result<String, Failure>;

pub fn run(cli: &Cli, cache: &MatrixCache) -> Outcome {
    let format = |default: Format| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Expand { basis, tau } => {
            let tag: BasisTag = basis.parse()?;
            let tau: StackPartition = tau.parse()?;
            Ok(render(&expand_type(tag, &tau), format(Format::Text)))
        }
        Command::Convert { from, to, element } => {
            let from: BasisTag = from.parse()?;
            let to: BasisTag = to.parse()?;
            let x = read_element(element)?;
            x.expect_basis(from)?;
            cache.prepare(from, to, x.degrees())?;
            Ok(render(&convert(&x, to)?, format(Format::Json)))
        }
        Command::Product { factors, basis } => {
            let tag: BasisTag = basis.parse()?;
            let mut product = PolyElement::one(tag);
            for f in factors {
                let tau: StackPartition = f.parse()?;
                product = multiply(&product, &PolyElement::singleton(tag, tau));
            }
            Ok(render(&to_m(&product), format(Format::Text)))
        }
        Command::Coeff { kind, args, degree } => coeff(*kind, args, *degree, format(Format::Text)),
        Command::Omega { element, route } => {
            let x = read_element(element)?;
            let (route, source, image) = match route {
                Route::EPlus => (OmegaRoute::EPlus, BasisTag::EPlus, BasisTag::HPlus),
                Route::H => (OmegaRoute::H, BasisTag::H, BasisTag::E),
                Route::E => (OmegaRoute::E, BasisTag::E, BasisTag::H),
                Route::HPlus => (OmegaRoute::HPlus, BasisTag::HPlus, BasisTag::EPlus),
                Route::P => (OmegaRoute::P, BasisTag::P, BasisTag::P),
            };
            cache.prepare(x.basis(), source, x.degrees())?;
            cache.prepare(image, x.basis(), x.degrees())?;
            Ok(render(&omega_via(&x, route)?, format(Format::Json)))
        }
        Command::Verify {
            suite,
            max_d,
            max_n,
        } => verify(*suite, *max_d, *max_n, format(Format::Text)),
        Command::Table {
            name,
            n_max,
            order,
            check_paper,
        } => table(*name, *n_max, *order, *check_paper, format(Format::Text)),
    }
}

fn render(x: &PolyElement, format: Format) -> String {
    match format {
        Format::Text => format!("{x}\n"),
        Format::Json => format!("{}\n", x.to_json_string()),
    }
}

fn read_element(arg: &str) -> Result<PolyElement, Failure> {
    let text = if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::usage(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        arg.to_string()
    };
    Ok(PolyElement::from_json_str(&text)?)
}

fn coeff(kind: CoeffKind, args: &[String], degree: Option<u32>, format: Format) -> Outcome {
    let parsed = args
        .iter()
        .map(|a| a.parse::<StackPartition>())
        .collect::<polysym::Result<Vec<_>>>()?;
    let (target, rest) = parsed.split_first().expect("clap requires one argument");
    let pair = || -> Result<&StackPartition, Failure> {
        match rest {
            [alpha] => Ok(alpha),
            _ => Err(Failure::usage(format!(
                "{kind:?} takes exactly two stack partitions: τ and α"
            ))),
        }
    };
    let value: String = match kind {
        CoeffKind::SmallS | CoeffKind::S => {
            if rest.is_empty() {
                return Err(Failure::usage("give the target and at least one source"));
            }
            let q = CoefficientQuery::new(rest.to_vec(), target.clone());
            if kind == CoeffKind::SmallS {
                let u = degree
                    .filter(|&u| u >= 1)
                    .ok_or_else(|| Failure::usage("s needs --degree u with u ≥ 1"))?;
                s_coeff(&q, u).to_string()
            } else {
                structure_coeff(&q).to_string()
            }
        }
        CoeffKind::D => divisor_coeff(target, pair()?).to_string(),
        CoeffKind::E => eh_coeff(target, pair()?, EhKind::EPlus).to_string(),
        CoeffKind::H => eh_coeff(target, pair()?, EhKind::H).to_string(),
        CoeffKind::Es => signed_coeff(target, pair()?, SignedKind::Es).to_string(),
        CoeffKind::Hs => signed_coeff(target, pair()?, SignedKind::Hs).to_string(),
    };
    Ok(match format {
        Format::Text => format!("{value}\n"),
        Format::Json => format!("{}\n", json!({ "value": value })),
    })
}

struct Check {
    name: String,
    pass: bool,
}

fn report(suite: &str, checks: Vec<Check>, format: Format) -> Outcome {
    let failed = checks.iter().filter(|c| !c.pass).count();
    let body = match format {
        Format::Text => {
            let mut out = String::new();
            for c in &checks {
                let _ = writeln!(out, "{} {}", if c.pass { "PASS" } else { "FAIL" }, c.name);
            }
            let _ = writeln!(
                out,
                "{suite}: {} passed, {failed} failed",
                checks.len() - failed
            );
            out
        }
        Format::Json => {
            let list: Vec<_> = checks
                .iter()
                .map(|c| json!({ "name": c.name, "pass": c.pass }))
                .collect();
            format!(
                "{}\n",
                json!({ "suite": suite, "checks": list, "failed": failed })
            )
        }
    };
    if failed == 0 {
        Ok(body)
    } else {
        Err(Failure::verification(body))
    }
}

fn verify(suite: Suite, max_d: u32, max_n: u32, format: Format) -> Outcome {
    match suite {
        Suite::Identities => {
            if max_d == 0 {
                return Err(Failure::usage("--max-d must be at least 1"));
            }
            let mut checks = Vec::new();
            for &id in IdentityId::ALL {
                for d in 1..=max_d {
                    for m in 1..=2 {
                        let pass = evaluate_identity(id, d, m)?.equal;
                        checks.push(Check {
                            name: format!("{id} d={d} m={m}"),
                            pass,
                        });
                    }
                }
            }
            report("identities", checks, format)
        }
        Suite::GeneratingFunctions => {
            let mut checks = Vec::new();
            for kind in GfKind::ALL {
                for m in 1..=2 {
                    let pass = gf_product_check(kind, max_n, max_n, m)?;
                    checks.push(Check {
                        name: format!("{kind} N={max_n} J={max_n} m={m}"),
                        pass,
                    });
                }
            }
            report("generating-functions", checks, format)
        }
        Suite::Oracle => {
            let mut checks = Vec::new();
            for n in 0..=max_n {
                let queries = expansion_queries(n);
                let bad = queries
                    .iter()
                    .filter(|q| structure_coeff(q) != brute_force_structure(q))
                    .count();
                checks.push(Check {
                    name: format!(
                        "expansion queries n={n} ({} queries, {bad} disagree)",
                        queries.len()
                    ),
                    pass: bad == 0,
                });
            }
            let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
            let random: Vec<CoefficientQuery> =
                (0..200).map(|_| random_query(&mut rng, 12)).collect();
            let bad = random
                .iter()
                .filter(|q| structure_coeff(q) != brute_force_structure(q))
                .count();
            checks.push(Check {
                name: format!("random queries ({} queries, {bad} disagree)", random.len()),
                pass: bad == 0,
            });
            report("oracle", checks, format)
        }
    }
}

/// A random query whose brute-force enumeration ranges over at most
/// `max_cells` matrix entries. Half of the targets come from the support of
/// the product so that many coefficients are nonzero.
pub fn random_query(rng: &mut impl Rng, max_cells: usize) -> CoefficientQuery {
    loop {
        let rows = rng.gen_range(1..=3);
        let sources: Vec<StackPartition> = (0..rows)
            .map(|_| {
                let all = stack_partitions(rng.gen_range(1..=3));
                all[rng.gen_range(0..all.len())].clone()
            })
            .collect();
        let target = if rng.gen_bool(0.5) {
            let support = structure_constants(&sources);
            support[rng.gen_range(0..support.len())].0.clone()
        } else {
            let weight = sources.iter().map(StackPartition::weight).sum();
            let all = stack_partitions(weight);
            all[rng.gen_range(0..all.len())].clone()
        };
        let q = CoefficientQuery::new(sources, target);
        if matrix_cells(&q) <= max_cells {
            return q;
        }
    }
}

fn table(name: TableName, n_max: u32, order: u32, check_paper: bool, format: Format) -> Outcome {
    let seq = match name {
        TableName::StackedTabular => SequenceName::StackedTabular,
        TableName::ClassicalTabular => SequenceName::ClassicalTabular,
        TableName::StackCount => SequenceName::StackCount,
        TableName::Psp => {
            if order == 0 {
                return Err(Failure::usage("--order must be at least 1"));
            }
            SequenceName::Psp(order)
        }
    };
    if check_paper && seq != SequenceName::StackedTabular {
        return Err(Failure::usage(
            "--check-paper applies to stacked-tabular only",
        ));
    }
    let result = sequence_table(seq, n_max)?;
    let mismatches = if check_paper {
        stacked_tabular_mismatches(&result.values)
    } else {
        Vec::new()
    };
    let compared = result.values.len().min(STACKED_TABULAR_VALUES.len());
    let body = match format {
        Format::Text => {
            let width = n_max.to_string().len();
            let mut out = String::new();
            for (n, v) in &result.values {
                let _ = writeln!(out, "{n:>width$}: {v}");
            }
            if check_paper {
                for (n, got, want) in &mismatches {
                    let _ = writeln!(out, "mismatch at {n}: computed {got}, published {want}");
                }
                if mismatches.is_empty() {
                    let _ = writeln!(out, "check: {compared} values match the published table");
                }
            }
            out
        }
        Format::Json => {
            let values: Vec<_> = result
                .values
                .iter()
                .map(|(n, v)| json!([n, v.to_string()]))
                .collect();
            let mut doc = json!({ "name": seq.label(), "values": values });
            if check_paper {
                let bad: Vec<_> = mismatches
                    .iter()
                    .map(|(n, got, want)| json!({ "n": n, "computed": got.to_string(), "published": want }))
                    .collect();
                doc["check"] = json!({ "compared": compared, "mismatches": bad });
            }
            format!("{doc}\n")
        }
    };
    if mismatches.is_empty() {
        Ok(body)
    } else {
        Err(Failure::verification(body))
    }
}
