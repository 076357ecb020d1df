//! Acceptance suite: one test per acceptance criterion, each printing a
//! single pass line (visible with `--nocapture`) and enforcing its runtime
//! budget. Library-level criteria use the library directly; CLI-level
//! criteria run the built `fencetile` binary.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use fence_tilings::arith::binomial;
use fence_tilings::bijections::{
    domino_pair_map, domino_pair_unmap, splice, unsplice, DominoPairImage, SdSymbol, SdTiling,
    SdTuple,
};
use fence_tilings::sequences::{
    count_board_tilings, count_board_tilings_general, count_n_tilings, fib_tilings, jacobsthal,
};
use fence_tilings::tiling::{
    classify_board_tilings, classify_n_tilings, enumerate_board_tilings_by_cells,
    for_each_board_tiling, for_each_n_tiling,
};
use fence_tilings::triangles::{
    board_riordan_pair, ntile_riordan_pair, riordan_entry, tri_board, tri_board_closed_form,
    tri_ntile, tri_ntile_closed_form,
};

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn run_binary(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_fencetile"))
        .args(args)
        .output()
        .expect("binary runs")
}

#[test]
fn criterion_1_golden_triangle_rows() {
    let start = Instant::now();
    let ntile = run_binary(&["triangle", "ntile", "--rows", "12"]);
    assert!(ntile.status.success());
    assert_eq!(
        ntile.stdout,
        include_bytes!("golden/triangle_ntile_rows12.txt"),
        "tile-count triangle differs from the golden file"
    );
    let board = run_binary(&["triangle", "board", "--rows", "12"]);
    assert!(board.status.success());
    assert_eq!(
        board.stdout,
        include_bytes!("golden/triangle_board_rows12.txt"),
        "board triangle differs from the golden file"
    );
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1 (golden triangle rows 0..=12 byte-identical): PASS");
}

#[test]
fn criterion_2_sequence_listings() {
    let board_expected: [u64; 17] = [
        1, 1, 1, 2, 4, 6, 9, 15, 25, 40, 64, 104, 169, 273, 441, 714, 1156,
    ];
    for (n, &want) in board_expected.iter().enumerate() {
        assert_eq!(count_board_tilings(n as i64), big(want), "A_{n}");
    }
    let jacobsthal_expected: [u64; 10] = [0, 1, 1, 3, 5, 11, 21, 43, 85, 171];
    for (n, &want) in jacobsthal_expected.iter().enumerate() {
        assert_eq!(jacobsthal(n as i64), big(want), "J_{n}");
    }
    println!("criterion 2 (published listings of A_n and J_n): PASS");
}

#[test]
fn criterion_3_oracle_equivalence() {
    let start = Instant::now();
    for n in 0..=24usize {
        let mut count = 0u64;
        for_each_board_tiling(n, 1, |_| count += 1).unwrap();
        assert_eq!(big(count), count_board_tilings(n as i64), "A_{n}");
    }
    for n in 0..=20usize {
        let mut count = 0u64;
        for_each_n_tiling(n, |_| count += 1);
        assert_eq!(big(count), count_n_tilings(n as i64), "B_{n}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 3 (enumeration equals recurrences, A<=24 B<=20): PASS");
}

#[test]
fn criterion_4_fibonacci_and_jacobsthal_laws() {
    for n in 0..=100i64 {
        let f = fib_tilings(n);
        assert_eq!(count_board_tilings(2 * n), &f * &f, "A_2n at n={n}");
        assert_eq!(
            count_board_tilings(2 * n + 1),
            &f * fib_tilings(n + 1),
            "A_2n+1 at n={n}"
        );
        assert_eq!(count_n_tilings(n), jacobsthal(n + 1), "B_n at n={n}");
    }
    println!("criterion 4 (A_2n=f_n^2, A_2n+1=f_n*f_n+1, B_n=J_n+1 for n<=100): PASS");
}

#[test]
fn criterion_5_general_family_brute_force() {
    let start = Instant::now();
    for m in 2..=4usize {
        for n in 0..=18usize {
            let mut count = 0u64;
            for_each_board_tiling(n, m - 1, |_| count += 1).unwrap();
            assert_eq!(
                big(count),
                count_board_tilings_general(m, n as i64).unwrap(),
                "m={m}, N={n}"
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!("criterion 5 (gap-(m-1) oracle equals Fibonacci products, m<=4 N<=18): PASS");
}

/// All square-and-domino tilings of a `len`-cell board.
fn all_sd_tilings(len: usize) -> Vec<SdTiling> {
    fn extend(len: usize, prefix: &mut Vec<SdSymbol>, out: &mut Vec<SdTiling>) {
        if len == 0 {
            out.push(SdTiling::new(prefix.clone()));
            return;
        }
        prefix.push(SdSymbol::Square);
        extend(len - 1, prefix, out);
        prefix.pop();
        if len >= 2 {
            prefix.push(SdSymbol::Domino);
            extend(len - 2, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(len, &mut Vec::new(), &mut out);
    out
}

/// Display strings of every length-patterned m-tuple totalling n cells.
fn all_tuples(n: usize, m: usize) -> BTreeSet<String> {
    let (q, r) = (n / m, n % m);
    let per_board: Vec<Vec<SdTiling>> = (0..m)
        .map(|j| all_sd_tilings(if j < r { q + 1 } else { q }))
        .collect();
    let mut out = BTreeSet::new();
    let mut choice = vec![0usize; m];
    'product: loop {
        let boards: Vec<SdTiling> = (0..m).map(|j| per_board[j][choice[j]].clone()).collect();
        out.insert(SdTuple::new(boards).unwrap().to_string());
        for j in 0..=m {
            if j == m {
                break 'product;
            }
            choice[j] += 1;
            if choice[j] < per_board[j].len() {
                continue 'product;
            }
            choice[j] = 0;
        }
    }
    out
}

#[test]
fn criterion_6_bijection_roundtrips() {
    // Splice: bijection between gap-(m-1) tilings and board tuples.
    for m in 2..=4usize {
        for n in 0..=18usize {
            let mut images = BTreeSet::new();
            for occ in &enumerate_board_tilings_by_cells(n, m - 1).unwrap() {
                let tuple = splice(occ, m).unwrap();
                assert_eq!(&unsplice(&tuple), occ, "roundtrip m={m} n={n}");
                assert!(images.insert(tuple.to_string()), "not injective m={m} n={n}");
            }
            assert_eq!(images, all_tuples(n, m), "image mismatch m={m} n={n}");
        }
    }
    // Domino pairing: realizes C(n,k) = tile(n,k) + tile(n-1,k-1).
    for n in 0..=12usize {
        for k in 0..=n {
            let mut full = 0u64;
            let mut reduced = 0u64;
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let sd = SdTiling::new(
                    (0..n)
                        .map(|i| {
                            if mask >> i & 1 == 1 {
                                SdSymbol::Domino
                            } else {
                                SdSymbol::Square
                            }
                        })
                        .collect(),
                );
                let image = domino_pair_map(&sd);
                assert_eq!(domino_pair_unmap(&image), sd, "roundtrip n={n} k={k}");
                match image {
                    DominoPairImage::Full(_) => full += 1,
                    DominoPairImage::Reduced(_) => reduced += 1,
                }
            }
            assert_eq!(big(full), tri_ntile(n as i64, k as i64), "full n={n} k={k}");
            assert_eq!(
                big(reduced),
                tri_ntile(n as i64 - 1, k as i64 - 1),
                "reduced n={n} k={k}"
            );
            assert_eq!(
                binomial(n as i64, k as i64),
                big(full) + big(reduced),
                "binomial split n={n} k={k}"
            );
        }
    }
    println!("criterion 6 (splice bijection m<=4 N<=18; domino pairing splits binomials n<=12): PASS");
}

#[test]
fn criterion_7_riordan_entry_grid() {
    let (p, q) = ntile_riordan_pair();
    for n in 0..=40usize {
        for k in 0..=n {
            assert_eq!(
                riordan_entry(&p, &q, n, k).unwrap(),
                tri_ntile(n as i64, (n - k) as i64).into(),
                "tile array at ({n},{k})"
            );
        }
    }
    let (p, q) = board_riordan_pair();
    for n in 0..=40usize {
        for k in 0..=n {
            assert_eq!(
                riordan_entry(&p, &q, n, k).unwrap(),
                tri_board(2 * n as i64 + 1, (n - k) as i64).into(),
                "board array at ({n},{k})"
            );
        }
    }
    println!("criterion 7 (Riordan entries equal both triangles, 0<=k<=n<=40): PASS");
}

#[test]
fn criterion_8_identity_suite() {
    let start = Instant::now();
    let out = run_binary(&["verify", "--max", "60"]);
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(
        out.status.success(),
        "verify exited {:?}:\n{stdout}",
        out.status.code()
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout.contains("55/55 identities passed"), "{stdout}");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!("criterion 8 (verify --max 60 passes the whole registry): PASS");
}

#[test]
fn criterion_9_triple_agreement() {
    // Closed form equals recurrence on both triangles.
    for n in 0..=60usize {
        for k in 0..=n {
            assert_eq!(
                tri_ntile(n as i64, k as i64),
                tri_ntile_closed_form(n, k),
                "tile({n},{k})"
            );
            assert_eq!(
                tri_board(n as i64, k as i64),
                tri_board_closed_form(n, k),
                "board({n},{k})"
            );
            assert_eq!(
                tri_board(n as i64, k as i64),
                tri_ntile(n as i64 - k as i64, k as i64),
                "board vs tile at ({n},{k})"
            );
        }
    }
    // Both equal exhaustive classification on the oracle ranges.
    for n in 0..=20usize {
        let histogram = classify_n_tilings(n).unwrap();
        for (k, count) in &histogram {
            assert_eq!(count, &tri_ntile(n as i64, *k as i64), "classify tile {n},{k}");
        }
    }
    for n in 0..=24usize {
        let histogram = classify_board_tilings(n).unwrap();
        for (k, count) in &histogram {
            assert_eq!(count, &tri_board(n as i64, *k as i64), "classify board {n},{k}");
        }
    }
    println!("criterion 9 (closed form = recurrence = exhaustive classification): PASS");
}
