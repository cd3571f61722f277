//! Small graphs used throughout the examples, tests and CLI.
//!
//! The [7,4,3] Hamming representations:
//! * `A`: systematic, three rows, variables 5..7 have degree one.
//! * `B`: all seven nonzero dual codewords (A with every redundant check).
//! * `C`: A plus the sum of its first two rows.

use crate::graph::{add_redundant_checks, TannerGraph};

/// Rows of Hamming representation A. Columns 1..4 are `(1,1,0)`, `(0,1,1)`,
/// `(1,1,1)`, `(1,0,1)` and columns 5..7 are the identity.
pub const HAMMING7_A_ROWS: [&str; 3] = ["1011100", "1110010", "0111001"];

pub fn hamming7_a() -> TannerGraph {
    TannerGraph::from_bit_strings(&HAMMING7_A_ROWS).expect("fixture")
}

pub fn hamming7_b() -> TannerGraph {
    add_redundant_checks(&hamming7_a(), 3).expect("fixture")
}

pub fn hamming7_c() -> TannerGraph {
    add_redundant_checks(&hamming7_a(), 2).map(|g| {
        TannerGraph::new(7, g.checks()[..4].to_vec()).expect("fixture")
    })
    .expect("fixture")
}

/// [15,11,3] Hamming code: column `i` is the binary expansion of a nonzero
/// 4-bit value, weight-one columns last.
pub fn hamming15_a() -> TannerGraph {
    let mut cols: Vec<u32> = (1u32..16).filter(|v| v.count_ones() > 1).collect();
    cols.extend([8, 4, 2, 1]);
    let rows: Vec<Vec<u8>> = (0..4).map(|b| cols.iter().map(|c| (c >> (3 - b) & 1) as u8).collect()).collect();
    TannerGraph::from_rows(&rows).expect("fixture")
}

/// Hamming [15,11,3] with every pairwise row sum added (10 checks).
pub fn hamming15_c() -> TannerGraph {
    add_redundant_checks(&hamming15_a(), 2).expect("fixture")
}

/// Three variables on a single cycle of degree-two checks.
pub fn three_cycle() -> TannerGraph {
    TannerGraph::new(3, vec![vec![0, 1], vec![1, 2], vec![0, 2]]).expect("fixture")
}

/// [4,1,4] repetition code as a single cycle of four degree-two checks.
pub fn repetition_cycle() -> TannerGraph {
    TannerGraph::new(4, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![0, 3]]).expect("fixture")
}

/// The cycle with one redundant check over all four variables.
pub fn repetition_augmented() -> TannerGraph {
    repetition_cycle().with_check(vec![0, 1, 2, 3]).expect("fixture")
}

/// Acyclic graph: a degree-two check feeding a degree-three check.
pub fn tree_graph() -> TannerGraph {
    TannerGraph::new(4, vec![vec![0, 1], vec![1, 2, 3]]).expect("fixture")
}

/// Point-line incidence graph of the Fano plane: (3,3)-regular, girth 6.
/// The code is the [7,3,4] simplex code.
pub fn fano() -> TannerGraph {
    let lines = [[0, 1, 3], [1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 0], [5, 6, 1], [6, 0, 2]];
    TannerGraph::new(7, lines.iter().map(|l| l.to_vec()).collect()).expect("fixture")
}

/// A length-14 code with `d_min = 8` on which
/// `(1,0,1,1,1,1,3,0,0,1,1,1,1,0)` is a pseudocodeword with BSC and AWGN
/// weight 8 and the witness `w = (1,0,0,0,0,0,-1,0,...)` proves it bad.
pub fn len14_d8() -> TannerGraph {
    TannerGraph::from_bit_strings(&[
        "00100100000000",
        "00001100000000",
        "00000000001100",
        "00000000010100",
        "00000001000001",
        "00000000100001",
        "00000000000110",
        "00100001010000",
        "11010000000000",
        "10010000000001",
        "11001000000000",
        "00100110010000",
    ])
    .expect("fixture")
}

/// Vector used with [`len14_d8`].
pub const LEN14_D8_P: [i64; 14] = [1, 0, 1, 1, 1, 1, 3, 0, 0, 1, 1, 1, 1, 0];

/// Variable 0 joined to a ring of `m` variables: the ring is closed by `m`
/// degree-two checks and one check covers all `m + 1` variables. The
/// irreducible pseudocodewords are `(k,1,...,1)`.
pub fn star_ring(m: usize) -> TannerGraph {
    assert!(m >= 2, "ring needs at least two variables");
    let mut checks: Vec<Vec<usize>> = (0..m).map(|k| vec![1 + k, 1 + (k + 1) % m]).collect();
    checks.push((0..=m).collect());
    TannerGraph::new(m + 1, checks).expect("fixture")
}

/// Named fixtures for the CLI `--fixture` flag.
pub fn by_name(name: &str) -> Option<TannerGraph> {
    Some(match name {
        "hamming7-a" => hamming7_a(),
        "hamming7-b" => hamming7_b(),
        "hamming7-c" => hamming7_c(),
        "hamming15-a" => hamming15_a(),
        "hamming15-c" => hamming15_c(),
        "three-cycle" => three_cycle(),
        "repetition" => repetition_cycle(),
        "repetition-augmented" => repetition_augmented(),
        "tree" => tree_graph(),
        "fano" => fano(),
        "len14-d8" => len14_d8(),
        s => {
            let m = s.strip_prefix("star-ring-")?.parse().ok()?;
            if m < 2 {
                return None;
            }
            star_ring(m)
        }
    })
}

pub const NAMES: [&str; 12] = [
    "hamming7-a",
    "hamming7-b",
    "hamming7-c",
    "hamming15-a",
    "hamming15-c",
    "three-cycle",
    "repetition",
    "repetition-augmented",
    "tree",
    "fano",
    "len14-d8",
    "star-ring-<m>",
];
