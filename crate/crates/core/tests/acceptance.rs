//! Acceptance suite: one line per criterion, non-zero exit status if any fails.
//!
//! Golden tables are transcribed verbatim, including the zeros above the
//! diagonal, and compared cell by cell with exact equality.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use genocchi::akiyama::{at_matrix, verify_sum_identity, ATSpec, Seed, SUM_IDENTITY_IDS};
use genocchi::catalog::genocchi_routes;
use genocchi::connect::{
    a1_matrix, a2_matrix, genocchi_matrix, genocchi_matrix_squared, tangent_matrix, tangent_matrix_inverse_printed,
    verify_connection, verify_factorization, verify_property, CONNECTION_IDS, FACTORIZATION_IDS,
};
use genocchi::families::{FamilyRegistry, StirlingKind};
use genocchi::numbers::sequence;
use genocchi::polyalg::{basis_matrix, PolyBasis};
use genocchi::rational::{parse, render};
use genocchi::seidel::{kaneko_check, kaneko_even_form_check, seidel_array, seidel_identity_check, SeidelVariant};
use genocchi::stirling::{shifted_weight_check, stirling1, stirling2, transfer_check, PRESETS};
use genocchi::{IdentityReport, Rational, TriMatrix, WeightSpec};

type Outcome = Result<String, String>;

fn grid(text: &str) -> Vec<Vec<Rational>> {
    text.split(';')
        .map(|row| row.split_whitespace().map(|x| parse(x).expect("golden entry")).collect())
        .collect()
}

/// Compares every cell of a square golden table with `get(i, j)`.
fn same_cells(label: &str, golden: &str, get: impl Fn(usize, usize) -> Rational) -> Result<(), String> {
    for (i, row) in grid(golden).iter().enumerate() {
        for (j, want) in row.iter().enumerate() {
            let got = get(i, j);
            if &got != want {
                return Err(format!("{label} ({i},{j}): {} != {}", render(&got), render(want)));
            }
        }
    }
    Ok(())
}

fn same_matrix(label: &str, golden: &str, m: &TriMatrix) -> Result<(), String> {
    let order = grid(golden).len();
    if m.order() != order {
        return Err(format!("{label}: order {} != {order}", m.order()));
    }
    same_cells(label, golden, |i, j| m.get(i, j))
}

fn all_pass(reports: impl IntoIterator<Item = genocchi::Result<IdentityReport>>) -> Outcome {
    let mut count = 0;
    for r in reports {
        let r = r.map_err(|e| e.to_string())?;
        if !r.pass {
            return Err(r.to_string());
        }
        count += 1;
    }
    Ok(format!("{count} identities"))
}

const A5: &str = "1 0 0 0 0; -1 2 0 0 0; 3 -5 3 0 0; -17 28 -14 4 0; 155 -255 126 -30 5";
const A5_SQUARED: &str = "1 0 0 0 0; -3 4 0 0 0; 17 -25 9 0 0; -155 238 -98 16 0; 2073 -3255 1428 -270 25";
const B5: &str = "1/2 0 0 0 0; -1/4 3/2 0 0 0; 1/2 -5/2 5/2 0 0; -17/8 21/2 -35/4 7/2 0; 31/2 -153/2 63 -21 9/2";
const A1: &str = "1 0 0 0 0 0; -1 1 0 0 0 0; 3 -2 1 0 0 0; -17 11 -3 1 0 0; 155 -100 26 -4 1 0; \
                  -2073 1337 -346 50 -5 1";
const A2: &str = "2 0 0 0 0; -4 3 0 0 0; 20 -13 4 0 0; -172 111 -29 5 0; 2228 -1437 372 -54 6";
const T: &str = "1 0 0 0 0 0 0; 0 1 0 0 0 0 0; 0 1 1 0 0 0 0; 0 1 5 1 0 0 0; 0 1 21 14 1 0 0; \
                 0 1 85 147 30 1 0; 0 1 341 1408 627 55 1";
const T_FIRST: &str = "1 0 0 0 0 0 0; 0 1 0 0 0 0 0; 0 -1 1 0 0 0 0; 0 4 -5 1 0 0 0; 0 -36 49 -14 1 0 0; \
                       0 576 -820 273 -30 1 0; 0 -14400 21076 -7645 1023 -55 1";
const LS: &str = "1 0 0 0 0 0 0; 0 1 0 0 0 0 0; 0 2 1 0 0 0 0; 0 4 8 1 0 0 0; 0 8 52 20 1 0 0; \
                  0 16 320 292 40 1 0; 0 32 1936 3824 1092 70 1";
const LS_FIRST: &str = "1 0 0 0 0 0 0; 0 1 0 0 0 0 0; 0 -2 1 0 0 0 0; 0 12 -8 1 0 0 0; 0 -144 108 -20 1 0 0; \
                        0 2880 -2304 508 -40 1 0; 0 -86400 72000 -17544 1708 -70 1";
const U_SCALED: &str = "1 0 0 0 0 0 0; 1 1 0 0 0 0 0; 1 10 1 0 0 0 0; 1 91 35 1 0 0 0; 1 820 966 84 1 0 0; \
                        1 7381 24970 5082 165 1 0; 1 66430 631631 273988 18447 286 1";
const U_FIRST_SCALED: &str = "1 0 0 0 0 0 0; -1 1 0 0 0 0 0; 9 -10 1 0 0 0 0; -225 259 -35 1 0 0 0; \
                              11025 -12916 1974 -84 1 0 0; -893025 1057221 -172810 8778 -165 1 0; \
                              108056025 -128816766 21967231 -1234948 28743 -286 1";
const FIB_ODD_INVERSE: &str = "1 0 0 0 0 0; -1 1 0 0 0 0; 2 -3 1 0 0 0; -8 13 -6 1 0 0; 56 -92 45 -10 1 0; \
                               -608 1000 -493 115 -15 1";
const FIB_ODD_INVERSE_TIMES_EVEN: &str = "1 0 0 0 0 0; 0 2 0 0 0 0; 0 -2 3 0 0 0; 0 8 -8 4 0 0; \
                                          0 -56 56 -20 5 0; 0 608 -608 216 -40 6";
const SEIDEL_LS_K2: &str = "0 0 0 0 0 0 0 0 0; 0 0 0 0 0 0 0 0 0; 0 0 0 0 0 0 0 0 0; 0 0 0 0 0 0 0 0 0; \
                            1 1 1 0 0 0 0 0 0; 3 2 1 0 0 0 0 0 0; 14 11 9 8 0 0 0 0 0; 42 28 17 8 0 0 0 0 0; \
                            147 105 77 60 52 0 0 0 0";
const SEIDEL_GENOCCHI: &str = "1 0 0 0 0 0 0 0 0 0; 1 0 0 0 0 0 0 0 0 0; 0 -1 0 0 0 0 0 0 0 0; \
                               -1 -1 0 0 0 0 0 0 0 0; 0 1 2 0 0 0 0 0 0 0; 3 3 2 0 0 0 0 0 0 0; \
                               0 -3 -6 -8 0 0 0 0 0 0; -17 -17 -14 -8 0 0 0 0 0 0; \
                               0 17 34 48 56 0 0 0 0 0; 155 155 138 104 56 0 0 0 0 0";
const SEIDEL_V_K1: &str = "0 0 0 0 0 0 0; 0 0 0 0 0 0 0; 1 1 0 0 0 0 0; 3/2 1/2 0 0 0 0 0; \
                           5/2 1 1/2 0 0 0 0; 15/4 5/4 1/4 0 0 0 0; 91/16 31/16 11/16 7/16 0 0 0";
const AT_GENOCCHI: &str = "1 2 3 4 5 6; -1 -4 -9 -16 -25 -36; 3 20 63 144 275 468; \
                           -17 -172 -729 -2096 -4825 -9612; 155 2228 12303 43664 119675 276660; \
                           -2073 -40300 -282249 -1216176 -3924625 -10444428";
const AT_SQUARED_SEED: &str = "1 4 9 16 25 36; -3 -20 -63 -144 -275 -468; 17 172 729 2096 4825 9612; \
                               -155 -2228 -12303 -43664 -119675 -276660; \
                               2073 40300 282249 1216176 3924625 10444428; \
                               -38227 -967796 -8405343 -43335184 -162995075 -495672372";
const AT_RECIPROCAL_SEED: &str = "1 1/2 1/3 1/4 1/5 1/6; 1/2 2/3 3/4 4/5 5/6 6/7; \
                                  -1/6 -1/3 -9/20 -8/15 -25/42 -9/14; 1/6 7/15 3/4 104/105 25/21 19/14; \
                                  -3/10 -17/15 -303/140 -16/5 -25/6 -353/70; \
                                  5/6 433/105 261/28 232/15 460/21 4353/154";

fn golden_tables() -> Outcome {
    let e = |e: genocchi::Error| e.to_string();
    same_matrix("A_5", A5, &genocchi_matrix(5).map_err(e)?)?;
    same_matrix("A_5 squared (closed form)", A5_SQUARED, &genocchi_matrix_squared(5).map_err(e)?)?;
    let a = genocchi_matrix(5).map_err(e)?;
    same_matrix("A_5 squared (product)", A5_SQUARED, &a.mul(&a).map_err(|x| x.to_string())?)?;
    same_matrix("B_5", B5, &tangent_matrix(5).map_err(e)?)?;
    same_matrix("a1", A1, &a1_matrix(6).map_err(e)?)?;
    same_matrix("a2", A2, &a2_matrix(5).map_err(e)?)?;
    let triangles = [
        ("T", T, stirling2(&WeightSpec::central_factorial(), 7)),
        ("t", T_FIRST, stirling1(&WeightSpec::central_factorial(), 7)),
        ("LS", LS, stirling2(&WeightSpec::legendre_stirling(), 7)),
        ("ls", LS_FIRST, stirling1(&WeightSpec::legendre_stirling(), 7)),
    ];
    for (label, golden, m) in triangles {
        same_matrix(label, golden, &m.map_err(e)?)?;
    }
    let four = genocchi::rational::int(4);
    let u = stirling2(&WeightSpec::u_half_odd(), 7).map_err(e)?.scale_by_power(&four);
    same_matrix("4^(i-j) U", U_SCALED, &u)?;
    let u1 = stirling1(&WeightSpec::u_half_odd(), 7).map_err(e)?.scale_by_power(&four);
    same_matrix("4^(i-j) u", U_FIRST_SCALED, &u1)?;
    let odd_inv = basis_matrix(PolyBasis::FibOdd, 6).map_err(e)?.inverse().map_err(|x| x.to_string())?;
    same_matrix("(C(2i-j,j))^-1", FIB_ODD_INVERSE, &odd_inv)?;
    let prod = odd_inv.mul(&basis_matrix(PolyBasis::FibEven, 6).map_err(e)?).map_err(|x| x.to_string())?;
    same_matrix("(C(2i-j,j))^-1 (C(2i+1-j,j))", FIB_ODD_INVERSE_TIMES_EVEN, &prod)?;
    let arrays = [
        ("Seidel LS k=2", SEIDEL_LS_K2, SeidelVariant::LsFromT, 2, 9),
        ("Seidel Genocchi", SEIDEL_GENOCCHI, SeidelVariant::Genocchi, 0, 10),
        ("Seidel V k=1", SEIDEL_V_K1, SeidelVariant::VFromU, 1, 7),
    ];
    for (label, golden, variant, k, rows) in arrays {
        let arr = seidel_array(variant, k, rows).map_err(e)?;
        if arr.len() != rows {
            return Err(format!("{label}: {} rows", arr.len()));
        }
        same_cells(label, golden, |i, j| arr.get(i, j))?;
    }
    let square = WeightSpec::shifted_square(1);
    let at = [
        ("AT a(n) = n+1", AT_GENOCCHI, "index-plus-one"),
        ("AT a(n) = (n+1)^2", AT_SQUARED_SEED, "square-plus-one"),
        ("AT a(n) = 1/(n+1)", AT_RECIPROCAL_SEED, "reciprocal"),
    ];
    for (label, golden, seed) in at {
        let m = at_matrix(&ATSpec::new(square.clone(), Seed::preset(seed).map_err(e)?, 6, 6)).map_err(e)?;
        if m.len() != 6 || m.iter().any(|r| r.len() != 6) {
            return Err(format!("{label}: wrong shape"));
        }
        same_cells(label, golden, |i, j| m[i][j].clone())?;
    }
    Ok("19 tables".into())
}

fn sequence_lists() -> Outcome {
    let lists = [
        ("genocchi", "1 1 3 17 155 2073 38227 929569"),
        ("genocchi-signed", "1 -1 0 1 0 -3 0 17 0 -155"),
        ("tangent", "1 2 16 272 7936 353792 22368256"),
        ("median-genocchi", "1 1 2 8 56 608"),
        ("bernoulli", "1 -1/2 1/6 0 -1/30 0 1/42 0 -1/30 0 5/66 0 -691/2730 0 7/6 0 -3617/510"),
        ("scaled-bernoulli", "1 1/2 -1/6 1/6 -3/10 5/6 -691/210 35/2 -3617/30"),
    ];
    for (name, golden) in lists {
        let want: Vec<&str> = golden.split(' ').collect();
        let got = sequence(name, want.len()).map_err(|e| e.to_string())?;
        let got: Vec<String> = got.iter().map(render).collect();
        if got != want {
            return Err(format!("{name}: {} != {golden}", got.join(" ")));
        }
    }
    Ok("6 lists".into())
}

fn factorizations() -> Outcome {
    all_pass(FACTORIZATION_IDS.iter().map(|id| verify_factorization(id, 12).map(|c| c.report())))
}

fn connections() -> Outcome {
    all_pass(CONNECTION_IDS.iter().map(|id| verify_connection(id, 15)))
}

fn eigen_relation() -> Outcome {
    all_pass([verify_property("A-eigenvectors", 12)])
}

fn summations() -> Outcome {
    let mut reports = vec![seidel_identity_check(40), kaneko_check(40), kaneko_even_form_check(40)];
    reports.extend(SUM_IDENTITY_IDS.iter().map(|id| verify_sum_identity(id, 25)));
    all_pass(reports)
}

fn cross_oracles() -> Outcome {
    all_pass([genocchi_routes("genocchi-routes", 15), verify_property("4.47", 12), verify_property("5.13", 12)])?;
    let b = tangent_matrix(1).map_err(|e| e.to_string())?;
    let printed = tangent_matrix_inverse_printed(1).map_err(|e| e.to_string())?;
    let prod = b.mul(&printed).map_err(|e| e.to_string())?;
    if prod.is_identity() {
        return Err("printed inverse of B unexpectedly inverts B at order 1".into());
    }
    Ok(format!("3 routes agree, printed B^-1 gives B·B^-1 = {} at order 1", render(&prod.get(0, 0))))
}

fn properties() -> Outcome {
    let mut checked = 0;
    for kind in [StirlingKind::Second, StirlingKind::First] {
        for family in FamilyRegistry::standard(kind).iter() {
            let full = family.build(16).map_err(|e| e.to_string())?;
            for k in 1..=16 {
                let lead = full.leading_submatrix(k).map_err(|e| e.to_string())?;
                if lead != family.build(k).map_err(|e| e.to_string())? {
                    return Err(format!("{} ({kind}): truncation at k = {k}", family.name()));
                }
                checked += 1;
            }
        }
    }
    for p in PRESETS {
        let w = WeightSpec::preset(p.name).map_err(|e| e.to_string())?;
        let s = stirling2(&w, 16).and_then(|s| Ok(s.mul(&stirling1(&w, 16)?)?)).map_err(|e| e.to_string())?;
        if !s.is_identity() {
            return Err(format!("{}: S s != I", p.name));
        }
    }
    let w = WeightSpec::shifted_square(1);
    all_pass([
        shifted_weight_check("3.28", &w, 12),
        shifted_weight_check("3.29", &w, 12),
        transfer_check(&w, |l| genocchi::rational::int(l as i64 + 1), 12),
    ])?;
    Ok(format!("{checked} truncations, {} inverse pairs, 3 shifted-weight identities", PRESETS.len()))
}

struct Criterion {
    number: u32,
    title: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { number: 1, title: "golden tables", budget: Duration::from_secs(1), run: golden_tables },
        Criterion { number: 2, title: "sequence lists", budget: Duration::from_secs(1), run: sequence_lists },
        Criterion { number: 3, title: "factorizations at N = 12", budget: Duration::from_secs(5), run: factorizations },
        Criterion { number: 4, title: "connection constants for n <= 15", budget: Duration::from_secs(5), run: connections },
        Criterion { number: 5, title: "eigen-relation at N = 12", budget: Duration::from_secs(1), run: eigen_relation },
        Criterion { number: 6, title: "summation identities", budget: Duration::from_secs(10), run: summations },
        Criterion { number: 7, title: "cross-oracle equivalence", budget: Duration::from_secs(5), run: cross_oracles },
        Criterion { number: 8, title: "property suite", budget: Duration::from_secs(10), run: properties },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!("{detail}, but took {elapsed:.2?} (budget {:?})", c.budget)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {} ({detail}; {elapsed:.2?})", c.number, c.title),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {} ({why})", c.number, c.title);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
