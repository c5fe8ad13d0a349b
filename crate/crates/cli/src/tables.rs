//! Reference values the verification suites compare against.

pub const A_N: [u64; 8] = [1, 3, 23, 433, 19705, 2151843, 561696335, 349667866305];

pub const B_N: [u64; 6] = [1, 3, 29, 901, 89893, 28793575];

pub const DWBC4_N: [u64; 6] = [1, 3, 59, 7813, 6953685, 41634316343];

/// p_{n,k}: row k = 0..5, column n = 1..6.
pub const PENTAGON: [[u64; 6]; 6] = [
    [1, 3, 29, 901, 89893, 28793575],
    [1, 4, 56, 2640, 411840, 210613312],
    [1, 4, 60, 3268, 628420, 417062340],
    [1, 4, 60, 3328, 675584, 495222784],
    [1, 4, 60, 3328, 678912, 507356160],
    [1, 4, 60, 3328, 678912, 508035072],
];

/// N_{a,b,c}: rows (b, c), columns a = 0..6.
pub const NABC: [((usize, usize), [u64; 7]); 15] = [
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
pub const REFINED_1: [&[u64]; 7] = [
    &[1],
    &[1, 2],
    &[3, 14, 6],
    &[23, 198, 166, 46],
    &[433, 6322, 7874, 4210, 866],
    &[19705, 468866, 777258, 606026, 240578, 39410],
    &[2151843, 81652574, 169682406, 172604734, 99699558, 31601534, 4303686],
];

pub const REFINED_2: [&[u64]; 7] = [
    &[1],
    &[2, 1],
    &[10, 10, 3],
    &[122, 182, 106, 23],
    &[3594, 7098, 6042, 2538, 433],
    &[254138, 623062, 691642, 423302, 139994, 19705],
    &[42978130, 125667490, 171143570, 136152146, 65650546, 17952610, 2151843],
];

pub const SAPM_12: [u64; 5] = [1, 3, 13, 85, 861];
pub const TCAPM: [u64; 5] = [1, 2, 6, 28, 204];
pub const SAPM_3: [u64; 5] = [1, 3, 15, 135, 2223];
pub const SAPM_4: [u64; 4] = [1, 3, 27, 639];
pub const HTAPM: [u64; 4] = [1, 1, 7, 53];

/// Upper bound of (log A_n)/n².
pub const FREE_ENERGY_BOUND: f64 = 0.43153;

/// Configurations whose APM images are the worked example matrices,
/// with the expected label rows.
pub struct ApmExample {
    pub name: &'static str,
    pub config: &'static str,
    pub rows: &'static [&'static [&'static str]],
}

pub const APM_EXAMPLES: [ApmExample; 4] = [
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
