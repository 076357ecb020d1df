//! Cross-checks the closed-form counting sequences against brute-force
//! enumeration of the tilings they claim to count.

use std::collections::HashSet;

use num_bigint::BigUint;

use fence_tilings::sequences::{
    count_board_tilings, count_board_tilings_general, count_n_tilings,
};
use fence_tilings::tiling::{
    classify_board_tilings, classify_n_tilings, enumerate_board_tilings_by_cells,
    enumerate_n_tilings, for_each_board_tiling, for_each_n_tiling, to_metatiles,
};

#[test]
fn test_board_counts_match_enumeration() {
    for n in 0..=24usize {
        let mut count = 0u64;
        for_each_board_tiling(n, 1, |_| count += 1).unwrap();
        assert_eq!(
            BigUint::from(count),
            count_board_tilings(n as i64),
            "boards of length {n}"
        );
    }
}

#[test]
fn test_n_tiling_counts_match_enumeration() {
    for n in 0..=20usize {
        let mut count = 0u64;
        for_each_n_tiling(n, |_| count += 1);
        assert_eq!(
            BigUint::from(count),
            count_n_tilings(n as i64),
            "tilings with {n} tiles"
        );
    }
}

#[test]
fn test_general_family_counts_match_enumeration() {
    for m in 2..=4usize {
        for n in 0..=16usize {
            let mut count = 0u64;
            for_each_board_tiling(n, m - 1, |_| count += 1).unwrap();
            assert_eq!(
                BigUint::from(count),
                count_board_tilings_general(m, n as i64).unwrap(),
                "m = {m}, n = {n}"
            );
        }
    }
}

#[test]
fn test_metatile_view_is_faithful() {
    for n in 0..=18usize {
        let occupancies = enumerate_board_tilings_by_cells(n, 1).unwrap();
        let mut seen = HashSet::new();
        for occ in &occupancies {
            let tiling = to_metatiles(occ).unwrap();
            assert_eq!(tiling.board_length(), n);
            assert_eq!(tiling.fence_count(), occ.fence_count());
            assert_eq!(tiling.tile_count(), occ.tile_count());
            assert_eq!(&tiling.to_occupancy(), occ, "round trip at n = {n}");
            assert!(
                seen.insert(tiling.symbols()),
                "duplicate symbol string {} at n = {n}",
                tiling.symbols()
            );
        }
        assert_eq!(BigUint::from(seen.len()), count_board_tilings(n as i64));
    }
}

#[test]
fn test_tiling_bookkeeping_is_consistent() {
    for n in 0..=12usize {
        for tiling in enumerate_n_tilings(n) {
            let (bifences, filled, squares) = tiling.metatile_counts();
            assert_eq!(tiling.tile_count(), n);
            assert_eq!(tiling.tile_count(), squares + 2 * filled + 2 * bifences);
            assert_eq!(tiling.fence_count(), filled + 2 * bifences);
            assert_eq!(tiling.board_length(), squares + 3 * filled + 4 * bifences);
        }
    }
}

#[test]
fn test_classification_totals_and_support() {
    for n in 0..=14usize {
        let by_fences = classify_board_tilings(n).unwrap();
        let keys: Vec<usize> = by_fences.keys().copied().collect();
        assert_eq!(keys, (0..=n / 2).collect::<Vec<_>>());
        let total: BigUint = by_fences.values().cloned().sum();
        assert_eq!(total, count_board_tilings(n as i64));
    }
    for n in 0..=14usize {
        let by_fences = classify_n_tilings(n).unwrap();
        let keys: Vec<usize> = by_fences.keys().copied().collect();
        assert_eq!(keys, (0..=n).collect::<Vec<_>>());
        let total: BigUint = by_fences.values().cloned().sum();
        assert_eq!(total, count_n_tilings(n as i64));
    }
}
