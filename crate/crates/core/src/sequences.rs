//! The counting sequences attached to square-and-fence tilings, computed by
//! their defining recurrences over arbitrary-precision integers.
//!
//! All index arguments are `i64` and every function is total: indices below
//! the seed region return 0, so convolution-style identities can be evaluated
//! without boundary guards. Values are memoized behind module-level mutexes,
//! which keeps repeated evaluation O(n) amortized without observable state.

use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::Error;

static FIBONACCI: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());
static JACOBSTHAL: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());
static BOARD: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());
static N_TILING: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// Grows `cache` up to index `n` using `step` and returns the cached value.
fn memo(cache: &Mutex<Vec<BigUint>>, n: usize, step: fn(&[BigUint], usize) -> BigUint) -> BigUint {
    let mut values = cache.lock().unwrap();
    while values.len() <= n {
        let next = step(&values, values.len());
        values.push(next);
    }
    values[n].clone()
}

/// `values[i - offset]`, or 0 when the index would fall off the front.
fn back(values: &[BigUint], i: usize, offset: usize) -> BigUint {
    i.checked_sub(offset)
        .map(|j| values[j].clone())
        .unwrap_or_default()
}

fn upow(base: &BigUint, exp: usize) -> BigUint {
    let mut acc = BigUint::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// `F(n)`: the Fibonacci numbers A000045, with `F(1) = F(2) = 1` and
/// `F(n) = 0` for all `n < 1`.
pub fn fibonacci(n: i64) -> BigUint {
    if n < 1 {
        return BigUint::zero();
    }
    memo(&FIBONACCI, n as usize, |v, i| match i {
        0 => BigUint::zero(),
        1 => BigUint::one(),
        _ => back(v, i, 1) + back(v, i, 2),
    })
}

/// `f(n) = F(n+1)`: the number of tilings of an n-board by unit squares and
/// dominoes, so `f(0) = f(1) = 1`. Combinatorial arguments index Fibonacci
/// numbers this way and all triangle code below uses `f` exclusively.
pub fn fib_tilings(n: i64) -> BigUint {
    fibonacci(n.saturating_add(1))
}

/// `J(n)`: the Jacobsthal numbers A001045 (0, 1, 1, 3, 5, 11, 21, ...), with
/// `J(n) = 0` for `n < 1` and `J(n) = J(n-1) + 2 J(n-2)` afterwards.
pub fn jacobsthal(n: i64) -> BigUint {
    if n < 1 {
        return BigUint::zero();
    }
    memo(&JACOBSTHAL, n as usize, |v, i| match i {
        0 => BigUint::zero(),
        1 => BigUint::one(),
        _ => back(v, i, 1) + back(v, i, 2) * 2u32,
    })
}

/// `A(n)`: the number of tilings of an n-board by unit squares and unit-gap
/// fences (A006498). Satisfies `A(n) = A(n-1) + A(n-3) + A(n-4)` with
/// `A(0) = 1` and `A(n) = 0` for `n < 0`; the three recurrence terms
/// correspond to a trailing free square, filled fence, or bifence.
pub fn count_board_tilings(n: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    memo(&BOARD, n as usize, |v, i| {
        if i == 0 {
            BigUint::one()
        } else {
            back(v, i, 1) + back(v, i, 3) + back(v, i, 4)
        }
    })
}

/// `B(n)`: the number of tilings that use exactly n tiles, each tile a unit
/// square or a unit-gap fence, on a board of whatever length those tiles
/// need. Satisfies `B(n) = B(n-1) + 2 B(n-2)` with `B(0) = 1`, which makes
/// `B(n)` the shifted Jacobsthal number `J(n+1)`.
pub fn count_n_tilings(n: i64) -> BigUint {
    if n < 0 {
        return BigUint::zero();
    }
    memo(&N_TILING, n as usize, |v, i| {
        if i == 0 {
            BigUint::one()
        } else {
            back(v, i, 1) + back(v, i, 2) * 2u32
        }
    })
}

/// Number of tilings of an n-board by unit squares and fences whose posts sit
/// m cells apart (gap m-1). Writing `n = m q + r` with `0 <= r < m`, the
/// count factors as `f(q)^(m-r) * f(q+1)^r`. Requires `m >= 2`; negative `n`
/// gives 0.
pub fn count_board_tilings_general(m: usize, n: i64) -> Result<BigUint, Error> {
    if m < 2 {
        return Err(Error::FamilyTooSmall { m });
    }
    if n < 0 {
        return Ok(BigUint::zero());
    }
    let q = n / m as i64;
    let r = (n % m as i64) as usize;
    Ok(upow(&fib_tilings(q), m - r) * upow(&fib_tilings(q + 1), r))
}

/// `f(n) * f(n+1)`: the golden-rectangle products A001654
/// (1, 1, 2, 6, 15, 40, ...), which also count (2n+1)-board tilings by
/// squares and unit-gap fences.
pub fn golden_rectangle(n: i64) -> BigUint {
    fib_tilings(n) * fib_tilings(n.saturating_add(1))
}

/// Name of a sequence exposed on the command line.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SequenceId {
    /// `F`: Fibonacci numbers A000045.
    Fibonacci,
    /// `f`: square-and-domino tiling counts, `f(n) = F(n+1)`.
    FibTilings,
    /// `J`: Jacobsthal numbers A001045.
    Jacobsthal,
    /// `A`: square-and-fence board tilings A006498.
    BoardTilings,
    /// `B`: tilings by exactly n squares or fences, `B(n) = J(n+1)`.
    NTilings,
    /// `goldenRect`: golden-rectangle products A001654.
    GoldenRectangle,
    /// `A<m>`: board tilings by squares and gap-(m-1) fences, `m >= 2`.
    GeneralBoardTilings(usize),
}

impl SequenceId {
    /// The sequence value at index `n` (total; 0 below the seed region).
    pub fn value(&self, n: i64) -> BigUint {
        match self {
            SequenceId::Fibonacci => fibonacci(n),
            SequenceId::FibTilings => fib_tilings(n),
            SequenceId::Jacobsthal => jacobsthal(n),
            SequenceId::BoardTilings => count_board_tilings(n),
            SequenceId::NTilings => count_n_tilings(n),
            SequenceId::GoldenRectangle => golden_rectangle(n),
            SequenceId::GeneralBoardTilings(m) => {
                count_board_tilings_general(*m, n).expect("m >= 2 is checked at parse time")
            }
        }
    }
}

impl FromStr for SequenceId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "F" => return Ok(SequenceId::Fibonacci),
            "f" => return Ok(SequenceId::FibTilings),
            "J" => return Ok(SequenceId::Jacobsthal),
            "A" => return Ok(SequenceId::BoardTilings),
            "B" => return Ok(SequenceId::NTilings),
            "goldenRect" => return Ok(SequenceId::GoldenRectangle),
            _ => {}
        }
        if let Some(digits) = s.strip_prefix('A') {
            if !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()) {
                let m: usize = digits
                    .parse()
                    .map_err(|_| Error::UnknownSequence(s.to_string()))?;
                if m < 2 {
                    return Err(Error::FamilyTooSmall { m });
                }
                return Ok(SequenceId::GeneralBoardTilings(m));
            }
        }
        Err(Error::UnknownSequence(s.to_string()))
    }
}

impl fmt::Display for SequenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceId::Fibonacci => write!(f, "F"),
            SequenceId::FibTilings => write!(f, "f"),
            SequenceId::Jacobsthal => write!(f, "J"),
            SequenceId::BoardTilings => write!(f, "A"),
            SequenceId::NTilings => write!(f, "B"),
            SequenceId::GoldenRectangle => write!(f, "goldenRect"),
            SequenceId::GeneralBoardTilings(m) => write!(f, "A{m}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn test_fibonacci_values() {
        assert_eq!(fibonacci(-3), u(0));
        assert_eq!(fibonacci(0), u(0));
        assert_eq!(fibonacci(1), u(1));
        assert_eq!(fibonacci(2), u(1));
        assert_eq!(fibonacci(6), u(8));
        assert_eq!(fibonacci(10), u(55));
    }

    #[test]
    fn test_fib_tilings_values() {
        let expected = [1u64, 1, 2, 3, 5, 8, 13, 21, 34, 55];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(fib_tilings(n as i64), u(want));
        }
        assert_eq!(fib_tilings(-1), u(0));
        assert_eq!(fib_tilings(4) * fib_tilings(5), u(40));
    }

    #[test]
    fn test_jacobsthal_values() {
        let expected = [0u64, 1, 1, 3, 5, 11, 21, 43, 85, 171];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(jacobsthal(n as i64), u(want));
        }
        assert_eq!(jacobsthal(-1), u(0));
    }

    #[test]
    fn test_jacobsthal_recurrence() {
        for n in 0..=400 {
            assert_eq!(
                jacobsthal(n + 2),
                jacobsthal(n + 1) + jacobsthal(n) * 2u32,
                "n = {n}"
            );
        }
    }

    #[test]
    fn test_board_tilings_values() {
        let expected = [
            1u64, 1, 1, 2, 4, 6, 9, 15, 25, 40, 64, 104, 169, 273, 441, 714, 1156,
        ];
        for (n, &want) in expected.iter().enumerate() {
            assert_eq!(count_board_tilings(n as i64), u(want));
        }
        assert_eq!(count_board_tilings(-2), u(0));
    }

    #[test]
    fn test_n_tilings_values() {
        assert_eq!(count_n_tilings(0), u(1));
        assert_eq!(count_n_tilings(3), u(5));
        assert_eq!(count_n_tilings(8), u(171));
        assert_eq!(count_n_tilings(9), u(341));
        assert_eq!(count_n_tilings(-1), u(0));
    }

    #[test]
    fn test_n_tilings_are_shifted_jacobsthal() {
        for n in 0..=400 {
            assert_eq!(count_n_tilings(n), jacobsthal(n + 1), "n = {n}");
        }
    }

    #[test]
    fn test_board_tilings_fibonacci_products() {
        for n in 0..=200 {
            let f = fib_tilings(n);
            let g = fib_tilings(n + 1);
            assert_eq!(count_board_tilings(2 * n), &f * &f, "even, n = {n}");
            assert_eq!(count_board_tilings(2 * n + 1), &f * &g, "odd, n = {n}");
        }
    }

    #[test]
    fn test_board_tilings_monotone() {
        for n in 0..=300 {
            assert!(count_board_tilings(n) <= count_board_tilings(n + 1));
            assert!(count_n_tilings(n) <= count_n_tilings(n + 1));
        }
    }

    #[test]
    fn test_general_board_tilings() {
        assert_eq!(count_board_tilings_general(2, 8).unwrap(), u(25));
        assert_eq!(count_board_tilings_general(3, 0).unwrap(), u(1));
        // 7 = 3*2 + 1, so the count is f(2)^2 * f(3) = 4 * 3.
        assert_eq!(count_board_tilings_general(3, 7).unwrap(), u(12));
        assert_eq!(count_board_tilings_general(4, -5).unwrap(), u(0));
        assert_eq!(
            count_board_tilings_general(1, 3),
            Err(Error::FamilyTooSmall { m: 1 })
        );
    }

    #[test]
    fn test_general_matches_unit_gap_family() {
        for n in 0..=60 {
            assert_eq!(
                count_board_tilings_general(2, n).unwrap(),
                count_board_tilings(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn test_golden_rectangle_values() {
        assert_eq!(golden_rectangle(0), u(1));
        assert_eq!(golden_rectangle(4), u(40));
        assert_eq!(golden_rectangle(7), u(714));
        assert_eq!(golden_rectangle(-1), u(0));
        for n in 0..=100 {
            assert_eq!(golden_rectangle(n), count_board_tilings(2 * n + 1));
        }
    }

    #[test]
    fn test_sequence_id_round_trip() {
        for name in ["F", "f", "J", "A", "B", "goldenRect", "A3", "A17"] {
            let id: SequenceId = name.parse().unwrap();
            assert_eq!(id.to_string(), name);
        }
        assert!("Q".parse::<SequenceId>().is_err());
        assert!("a".parse::<SequenceId>().is_err());
        assert_eq!(
            "A1".parse::<SequenceId>(),
            Err(Error::FamilyTooSmall { m: 1 })
        );
    }

    #[test]
    fn test_sequence_id_values() {
        let a3: SequenceId = "A3".parse().unwrap();
        assert_eq!(a3.value(7), u(12));
        let golden: SequenceId = "goldenRect".parse().unwrap();
        assert_eq!(golden.value(4), u(40));
    }

    /// Tiling counts restricted to a subset of the three unit-gap metatiles
    /// (free square length 1, filled fence length 3, bifence length 4) match
    /// known OEIS entries: dropping the square gives A017817, dropping the
    /// bifence gives A000930, and dropping the filled fence gives A003269
    /// shifted by one.
    #[test]
    fn test_metatile_subfamilies_match_oeis() {
        fn piece_counts(lengths: &[usize], upto: usize) -> Vec<u64> {
            let mut v = vec![0u64; upto + 1];
            for n in 0..=upto {
                let mut total = if n == 0 { 1 } else { 0 };
                for &len in lengths {
                    if n >= len {
                        total += v[n - len];
                    }
                }
                v[n] = total;
            }
            v
        }

        let a017817 = [1u64, 0, 0, 1, 1, 0, 1, 2, 1, 1, 3, 3, 2, 4, 6];
        assert_eq!(piece_counts(&[3, 4], 14), a017817);

        let a000930 = [1u64, 1, 1, 2, 3, 4, 6, 9, 13, 19, 28, 41, 60];
        assert_eq!(piece_counts(&[1, 3], 12), a000930);

        let a003269 = [0u64, 1, 1, 1, 1, 2, 3, 4, 5, 7, 10, 14, 19, 26];
        let ours = piece_counts(&[1, 4], 12);
        for n in 0..=12 {
            assert_eq!(ours[n], a003269[n + 1], "n = {n}");
        }

        // Using all three metatile lengths reproduces the main board count.
        let all = piece_counts(&[1, 3, 4], 16);
        for (n, &want) in all.iter().enumerate() {
            assert_eq!(count_board_tilings(n as i64), BigUint::from(want));
        }
    }
}
