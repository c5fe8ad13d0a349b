//! Acceptance criteria, one line per criterion.

use ice20v_core::apm::{
    check_sum_rules, q_bell, to_apm, validate, ApmType, Symmetry,
};
use ice20v_core::exactalg::{int_poly, Cyclotomic8, Ring};
use ice20v_core::genfun::{build_ik_matrix, restricted_schroder_gf, RefinedType};
use ice20v_core::icemodel::{
    count_20v, count_20v_refined, count_6v, count_configs, count_pentagon, count_rect_dwbc4,
    count_symmetry, enumerate_configs, naive_count, staggered_check, verify_kagome,
    verify_refinement_theorem, BoundaryKind, BoundarySpec, LatticeConfig,
};
use ice20v_core::tilings::{
    conjectured_nabc, domino_matchings, extended_triangle_count, kasteleyn_square,
    restricted_schroder, t4_by_principal_minors, t4_count, t4_refined, triangle_count,
    triangle_forms, Region,
};
use num_bigint::BigInt;
use std::time::{Duration, Instant};

const A_N: [u64; 8] = [1, 3, 23, 433, 19705, 2151843, 561696335, 349667866305];

const B_N: [u64; 6] = [1, 3, 29, 901, 89893, 28793575];

const DWBC4_N: [u64; 6] = [1, 3, 59, 7813, 6953685, 41634316343];

/// p_{n,k}: row k = 0..5, column n = 1..6.
const PENTAGON: [[u64; 6]; 6] = [
    [1, 3, 29, 901, 89893, 28793575],
    [1, 4, 56, 2640, 411840, 210613312],
    [1, 4, 60, 3268, 628420, 417062340],
    [1, 4, 60, 3328, 675584, 495222784],
    [1, 4, 60, 3328, 678912, 507356160],
    [1, 4, 60, 3328, 678912, 508035072],
];

/// N_{a,b,c}: rows (b, c), columns a = 0..6.
const NABC: [((usize, usize), [u64; 7]); 15] = [
    ((0, 1), [1, 3, 8, 21, 55, 144, 377]),
    ((0, 2), [1, 8, 59, 415, 2874, 19810, 136358]),
    ((1, 1), [3, 11, 41, 153, 571, 2131, 7953]),
    ((0, 3), [1, 21, 415, 7813, 143336, 2598735, 46881130]),
    ((1, 2), [8, 85, 959, 10934, 124869, 1426389, 16294360]),
    ((2, 1), [5, 23, 103, 456, 2009, 8833, 38803]),
    ((0, 4), [1, 55, 2874, 143336, 6953685, 331859360, 15697347566]),
    ((1, 3), [21, 604, 19018, 615405, 20055060, 654666505, 21378877706]),
    ((2, 2), [20, 333, 5331, 83821, 1305844, 20250090, 313317426]),
    ((3, 1), [7, 39, 201, 1000, 4888, 23673, 114087]),
    ((0, 5), [1, 144, 19810, 2598735, 331859360, 41634316343, 5164420164680]),
    ((1, 4), [55, 4194, 355234, 31391724, 2816672309, 254000932538, 22940968768675]),
    ((2, 3), [76, 4151, 213173, 10696445, 530068706, 26081095911, 1278122145554]),
    ((3, 2), [36, 881, 18859, 379449, 7391755, 141473217, 2681264915]),
    ((4, 1), [9, 59, 343, 1880, 9976, 51944, 267385]),
];

/// Refined counts by last-column statistic, n = 1..7.
const REFINED_1: [&[u64]; 7] = [
    &[1],
    &[1, 2],
    &[3, 14, 6],
    &[23, 198, 166, 46],
    &[433, 6322, 7874, 4210, 866],
    &[19705, 468866, 777258, 606026, 240578, 39410],
    &[2151843, 81652574, 169682406, 172604734, 99699558, 31601534, 4303686],
];

const REFINED_2: [&[u64]; 7] = [
    &[1],
    &[2, 1],
    &[10, 10, 3],
    &[122, 182, 106, 23],
    &[3594, 7098, 6042, 2538, 433],
    &[254138, 623062, 691642, 423302, 139994, 19705],
    &[42978130, 125667490, 171143570, 136152146, 65650546, 17952610, 2151843],
];

const SAPM_12: [u64; 5] = [1, 3, 13, 85, 861];
const TCAPM: [u64; 5] = [1, 2, 6, 28, 204];
const SAPM_3: [u64; 5] = [1, 3, 15, 135, 2223];
const SAPM_4: [u64; 4] = [1, 3, 27, 639];
const HTAPM: [u64; 4] = [1, 1, 7, 53];

/// Upper bound of (log A_n)/n².
const FREE_ENERGY_BOUND: f64 = 0.43153;

/// Configurations whose APM images are the worked example matrices,
/// with the expected label rows.
struct ApmExample {
    name: &'static str,
    config: &'static str,
    rows: &'static [&'static [&'static str]],
}

const APM_EXAMPLES: [ApmExample; 4] = [
    ApmExample {
        name: "type 1, n=5",
        config: r#"{"boundary":"DWBC1","cols":5,"d_bits":"fe961c4b00","h_bits":"c7f11d07","rows":5,"v_bits":"ff7f0600"}"#,
        rows: &[
            &["0", "0", "-w", "0", "0"],
            &["0", "0", "1", "-w2", "0"],
            &["-w2", "-w2", "0", "0", "1"],
            &["0", "0", "-w", "0", "0"],
            &["0", "0", "-w", "0", "0"],
        ],
    },
    ApmExample {
        name: "type 2, n=5",
        config: r#"{"boundary":"DWBC2","cols":5,"d_bits":"de726c0900","h_bits":"c7111c07","rows":5,"v_bits":"ff670000"}"#,
        rows: &[
            &["0", "0", "-w", "0", "0"],
            &["0", "0", "-w", "0", "0"],
            &["1", "0", "0", "-w2", "-w2"],
            &["0", "-w2", "1", "0", "0"],
            &["0", "0", "-w", "0", "0"],
        ],
    },
    ApmExample {
        name: "type 3, n=5",
        config: r#"{"boundary":"DWBC3","cols":5,"d_bits":"8025000000","h_bits":"cd130403","rows":5,"v_bits":"5f8c2100"}"#,
        rows: &[
            &["0", "1", "0", "0", "0"],
            &["1", "0", "0", "0", "0"],
            &["-w", "0", "0", "0", "0"],
            &["w2", "0", "0", "-w", "0"],
            &["1", "w", "-w2", "1", "-w2"],
        ],
    },
    ApmExample {
        name: "type 4, n=6",
        config: r#"{"boundary":"DWBC4","cols":6,"d_bits":"001f8c47f10000","h_bits":"e1e777390e03","rows":6,"v_bits":"3f740d67f803"}"#,
        rows: &[
            &["-w", "w2", "w2", "w2", "-1", "0"],
            &["0", "1", "-w2", "0", "w", "0"],
            &["0", "-w", "-1", "-w", "0", "-1"],
            &["0", "0", "-w2", "0", "1", "w"],
            &["w2", "w2", "w2", "-w", "0", "w"],
            &["1", "-w2", "-w2", "-w2", "w", "-w2"],
        ],
    },
];

/// Outcome of one criterion: failures carry a short explanation.
type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

const SQUARE_KINDS: [BoundaryKind; 4] =
    [BoundaryKind::Dwbc1, BoundaryKind::Dwbc2, BoundaryKind::Dwbc3, BoundaryKind::Dwbc4];

fn c1() -> Outcome {
    let t = Instant::now();
    for n in 1..=8 {
        for kind in [BoundaryKind::Dwbc1, BoundaryKind::Dwbc2] {
            let v = count_20v(&kind, n).map_err(|e| e.to_string())?;
            ensure(v == big(A_N[n - 1]), || format!("{kind} n={n}: {v} != {}", A_N[n - 1]))?;
        }
    }
    let el = t.elapsed();
    ensure(el < Duration::from_secs(60), || format!("took {el:?}"))?;
    Ok(format!("A_1..A_8 for DWBC1 and DWBC2 in {:.2}s", el.as_secs_f64()))
}

fn c2() -> Outcome {
    let one = Cyclotomic8::one();
    for n in 1..=6 {
        let z = count_6v(n, &one, &Cyclotomic8::sqrt2(), &one);
        ensure(z == Cyclotomic8::from_int(A_N[n - 1] as i64), || format!("n={n}: {z}"))?;
    }
    Ok("Z6V(n; 1, sqrt2, 1) = A_n, no sqrt2 part, n <= 6".into())
}

fn c3() -> Outcome {
    for n in 1..=8 {
        let t = t4_count(n, &BigInt::from(1));
        ensure(t == big(A_N[n - 1]), || format!("t4_count({n}) = {t}"))?;
    }
    for n in 1..=6 {
        let v = build_ik_matrix(n).value().map_err(|e| e.to_string())?;
        ensure(v == Cyclotomic8::from_int(A_N[n - 1] as i64), || format!("IK n={n}: {v}"))?;
    }
    Ok("t4_count = A_n (n <= 8); prefactor * det IK = A_n (n <= 6)".into())
}

fn c4() -> Outcome {
    for (kind, rt, table) in [
        (BoundaryKind::Dwbc1, RefinedType::One, &REFINED_1),
        (BoundaryKind::Dwbc2, RefinedType::Two, &REFINED_2),
    ] {
        for n in 1..=7 {
            let expected = int_poly(&table[n - 1].iter().map(|&c| c as i64).collect::<Vec<_>>());
            let t = t4_refined(n, rt);
            ensure(t == expected, || format!("{kind} n={n}: t4_refined = {t}"))?;
            if n <= 6 {
                let z = count_20v_refined(&kind, n).map_err(|e| e.to_string())?;
                ensure(z == t, || format!("{kind} n={n}: enumeration {z} vs {t}"))?;
            }
        }
    }
    Ok("refined enumeration = refined determinant (n <= 6), tables match (n <= 7)".into())
}

fn c5() -> Outcome {
    for n in 1..=6 {
        let r = verify_refinement_theorem(n);
        ensure(r.passed(), || format!("n={n}: {:?}", r.failures().collect::<Vec<_>>()))?;
    }
    Ok("refinement relations hold for n <= 6".into())
}

fn c6() -> Outcome {
    for n in 1..=6 {
        let z = count_20v(&BoundaryKind::Dwbc3, n).map_err(|e| e.to_string())?;
        let t = triangle_count(n).map_err(|e| e.to_string())?;
        ensure(z == big(B_N[n - 1]) && t == z, || format!("n={n}: {z} vs {t}"))?;
    }
    Ok("count_20v(DWBC3) = triangle_count = B_n for n <= 6".into())
}

fn c7() -> Outcome {
    for n in 1..=5 {
        for k in 0..=n {
            let p = count_pentagon(n, k);
            let t = extended_triangle_count(n, k);
            ensure(p == big(PENTAGON[k][n - 1]), || format!("p({n},{k}) = {p}"))?;
            ensure(p == t, || format!("p({n},{k}): {p} vs extended triangle {t}"))?;
            if k + 1 >= n {
                let sat = count_pentagon(n, n - 1);
                ensure(p == sat, || format!("no saturation at ({n},{k})"))?;
            }
        }
    }
    Ok("pentagon = extended triangle = table for n <= 5, 0 <= k <= n".into())
}

fn c8() -> Outcome {
    for n in 1..=5 {
        let r = count_rect_dwbc4(n - 1, 0, n - 1);
        let d = count_20v(&BoundaryKind::Dwbc4, n).map_err(|e| e.to_string())?;
        ensure(r == big(DWBC4_N[n - 1]) && d == r, || format!("n={n}: {r} vs {d}"))?;
    }
    let mut cells = 0;
    for &((b, c), row) in NABC.iter() {
        for (a, &v) in row.iter().enumerate() {
            let got = count_rect_dwbc4(a, b, c);
            ensure(got == big(v), || format!("N({a},{b},{c}) = {got}, table {v}"))?;
            cells += 1;
        }
    }
    Ok(format!("DWBC4 n <= 5 and all {cells} rectangle-table cells (a <= 6)"))
}

fn c9() -> Outcome {
    let mut cells = 0;
    for &((b, c), row) in NABC.iter() {
        for (a, &v) in row.iter().enumerate() {
            if c != 1 && a != 0 {
                continue;
            }
            let conj = conjectured_nabc(a, b, c).ok_or_else(|| format!("no closed form for ({a},{b},{c})"))?;
            let dp = count_rect_dwbc4(a, b, c);
            ensure(conj == dp && dp == big(v), || format!("N({a},{b},{c}): {conj} vs {dp}"))?;
            cells += 1;
        }
    }
    Ok(format!("closed forms agree on {cells} cells with c = 1 or a = 0"))
}

fn c10() -> Outcome {
    let mut total = 0;
    for kind in SQUARE_KINDS {
        let t = ApmType::for_kind(&kind).expect("DWBC kind");
        for n in 1..=4 {
            let spec = BoundarySpec::square(&kind, n).map_err(|e| e.to_string())?;
            for c in enumerate_configs(&spec, None).configs {
                let a = to_apm(&c).map_err(|e| format!("{kind} n={n}: {e}"))?;
                ensure(validate(&a, t), || format!("{kind} n={n}: invalid image\n{a}"))?;
                let s = check_sum_rules(&a, t);
                ensure(s.passed(), || format!("{kind} n={n}: {:?}", s.violations))?;
                total += 1;
            }
        }
    }
    for ex in APM_EXAMPLES.iter() {
        let v: serde_json::Value = serde_json::from_str(ex.config).expect("embedded JSON");
        let c = LatticeConfig::from_json(&v).map_err(|e| e.to_string())?;
        let a = to_apm(&c).map_err(|e| format!("{}: {e}", ex.name))?;
        let expected = serde_json::to_string(&ex.rows).expect("serializable");
        let actual = a.to_json().to_string();
        ensure(actual == expected, || format!("{}: {actual} != {expected}", ex.name))?;
    }
    Ok(format!("{total} configurations valid with sum rules; 4 worked examples reproduced"))
}

fn c11() -> Outcome {
    let cases: [(&str, BoundaryKind, Symmetry, &[u64]); 6] = [
        ("SAPM type 1", BoundaryKind::Dwbc1, Symmetry::Sapm, &SAPM_12),
        ("SAPM type 2", BoundaryKind::Dwbc2, Symmetry::Sapm, &SAPM_12),
        ("TCAPM", BoundaryKind::Dwbc1, Symmetry::Tcapm, &TCAPM),
        ("SAPM type 3", BoundaryKind::Dwbc3, Symmetry::Sapm, &SAPM_3),
        ("SAPM type 4", BoundaryKind::Dwbc4, Symmetry::Sapm, &SAPM_4),
        ("HTAPM", BoundaryKind::Dwbc4, Symmetry::Htapm, &HTAPM),
    ];
    for (name, kind, sym, table) in cases {
        for n in 1..=table.len() {
            let v = count_symmetry(&kind, n, sym).map_err(|e| e.to_string())?;
            ensure(v == table[n - 1], || format!("{name} n={n}: {v}"))?;
            if sym == Symmetry::Tcapm {
                let q = q_bell(n, &BigInt::from(2));
                ensure(q == big(v), || format!("q_bell({n}, 2) = {q} vs {v}"))?;
            }
        }
    }
    Ok("all symmetry-class sequences match; TCAPM = q-Bell(2) for n <= 5".into())
}

fn c12() -> Outcome {
    let r = verify_kagome();
    ensure(r.checks.passed(), || format!("{:?}", r.checks.failures().collect::<Vec<_>>()))?;
    ensure(!r.negative_control.checks.is_empty(), || "empty negative control".into())?;
    ensure(r.negative_control.checks.iter().all(|c| !c.pass), || "negative control passed".into())?;
    Ok(format!(
        "{} weight relations hold; {} perturbed relations fail as expected",
        r.checks.checks.len(),
        r.negative_control.checks.len()
    ))
}

fn c13() -> Outcome {
    for n in 1..=3 {
        let r = staggered_check(n);
        ensure(r.passed(), || format!("n={n}: {:?}", r.failures().collect::<Vec<_>>()))?;
    }
    Ok("staggered six-vertex reduction for DWBC1, 3, 4 at n <= 3".into())
}

fn c14() -> Outcome {
    for n in 1..=5 {
        let d = domino_matchings(&Region::triangle(n)).map_err(|e| e.to_string())?;
        ensure(d == big(B_N[n - 1]), || format!("T_{n}: {d}"))?;
    }
    let b = |n: usize| triangle_forms(n).0;
    for n in 1..=8 {
        let expected = (BigInt::from(1) << n) * b(n) * b(n);
        if n <= 4 {
            let d = domino_matchings(&Region::square(n)).map_err(|e| e.to_string())?;
            ensure(d == expected, || format!("S_{n}: {d} vs {expected}"))?;
        }
        let k = kasteleyn_square(n).map_err(|e| e.to_string())?;
        ensure(k.value == expected, || format!("Kasteleyn n={n}: {} vs {expected}", k.value))?;
        ensure(k.residue.abs() < 1e-6, || format!("Kasteleyn n={n}: residue {}", k.residue))?;
    }
    Ok("triangle and square tilings; Kasteleyn product to n = 8".into())
}

fn c15() -> Outcome {
    let f: Vec<f64> = A_N.iter().enumerate().map(|(i, &a)| (a as f64).ln() / ((i + 1) * (i + 1)) as f64).collect();
    for n in 3..=8 {
        ensure(f[n - 1] > f[n - 2], || format!("not increasing at n={n}"))?;
    }
    for n in 2..=8 {
        ensure(f[n - 1] < FREE_ENERGY_BOUND, || format!("n={n}: {} over bound", f[n - 1]))?;
    }
    ensure(f[7] >= 0.41, || format!("n=8 value {}", f[7]))?;
    Ok(format!("log A_n / n^2 increasing, A_8 gives {:.5}", f[7]))
}

fn c16() -> Outcome {
    let gf = restricted_schroder_gf::<BigInt>().coeff_table(10, 10);
    for i in 0..=10 {
        for j in 0..=10 {
            // coefficient (i, j) counts paths ending at (0, j + 1)
            let dp = restricted_schroder(i, j + 1);
            ensure(*gf.get(i, j) == dp, || format!("S~({i},{}): {} vs {dp}", j + 1, gf.get(i, j)))?;
        }
    }
    for n in 1..=5 {
        let m = t4_by_principal_minors(n).map_err(|e| e.to_string())?;
        let d = t4_count(n, &BigInt::from(1));
        ensure(m == d, || format!("n={n}: minors {m} vs det {d}"))?;
    }
    let mut specs = Vec::new();
    for n in 1..=4 {
        for kind in SQUARE_KINDS {
            specs.push(BoundarySpec::square(&kind, n).map_err(|e| e.to_string())?);
        }
        for k in 0..=n {
            specs.push(BoundarySpec::pentagon(n, k));
        }
    }
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=3 {
                let s = BoundarySpec::rect4(a, b, c);
                if s.rows() <= 4 && s.cols() <= 4 {
                    specs.push(s);
                }
            }
        }
    }
    for s in &specs {
        let dp = count_configs(s);
        let naive = naive_count(s);
        ensure(dp == BigInt::from(naive), || format!("{}: dp {dp} vs naive {naive}", s.kind()))?;
    }
    for n in 1..=8 {
        let (b, c) = triangle_forms(n);
        ensure(b == c, || format!("n={n}: {b} vs {c}"))?;
    }
    Ok(format!("GF vs path DP (i, j <= 10), minors (n <= 5), {} grids vs DFS, triangle forms (n <= 8)", specs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 16] = [
        ("A_n sequence for DWBC1 and DWBC2", c1),
        ("six-vertex sum at (1, sqrt2, 1)", c2),
        ("20V count equals T4 determinant", c3),
        ("refined counts", c4),
        ("20V-to-6V refinement relations", c5),
        ("B_n and triangle determinant", c6),
        ("pentagon counts", c7),
        ("DWBC4 and rectangle table", c8),
        ("closed-form rectangle counts", c9),
        ("alternating phase matrices", c10),
        ("symmetry classes", c11),
        ("Kagome and Yang-Baxter relations", c12),
        ("staggered reduction", c13),
        ("domino tilings", c14),
        ("free energy trend", c15),
        ("oracle equivalences", c16),
    ];
    let outcomes: Vec<(Outcome, Duration)> = std::thread::scope(|s| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|&(_, f)| {
                s.spawn(move || {
                    let t = Instant::now();
                    let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
                    (r, t.elapsed())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("joined")).collect()
    });
    let mut failed = 0;
    for (i, ((name, _), (r, t))) in criteria.iter().zip(&outcomes).enumerate() {
        match r {
            Ok(msg) => println!("criterion {:>2} PASS  {name}: {msg} [{:.2}s]", i + 1, t.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {msg} [{:.2}s]", i + 1, t.as_secs_f64());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
