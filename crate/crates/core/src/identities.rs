//! A registry of the library's combinatorial identities as executable
//! checks. Every identity is evaluated at many parameter points with the
//! two sides computed along independent routes (e.g. recurrence against
//! closed form, sequence memo against triangle row sum), and the outcome of
//! every point is reported.
//!
//! Notation used in the statement strings: `f_n` are the square-and-domino
//! tiling counts (Fibonacci shifted), `F_n` the Fibonacci numbers, `J_n`
//! the Jacobsthal numbers, `A_n` the n-board tiling counts, `B_n` the
//! n-tile tiling counts, `tile(n,k)` the fixed-tile-count triangle,
//! `board(n,k)` the board triangle, `half(n,k)` the half-length triangle,
//! `C(a,b)` binomial coefficients, and `R`/`Rb` the two Riordan arrays.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::arith::{binomial, ceil_div};
use crate::sequences::{
    count_board_tilings, count_board_tilings_general, count_n_tilings, fib_tilings, fibonacci,
    jacobsthal,
};
use crate::tiling::for_each_board_tiling;
use crate::triangles::{
    board_riordan_pair, ntile_riordan_pair, riordan_rows, seq_c, seq_d, square_array, tri_board,
    tri_board_binomial_split, tri_board_closed_form, tri_board_row, tri_half, tri_ntile,
    tri_ntile_closed_form, tri_ntile_row, RowParity,
};
use crate::Error;

/// Default upper bound for scaled parameter ranges.
pub const DEFAULT_MAX_N: u32 = 60;

/// A single evaluated parameter point of an identity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CheckPoint {
    params: String,
    lhs: BigInt,
    rhs: BigInt,
}

impl CheckPoint {
    pub fn new(params: String, lhs: BigInt, rhs: BigInt) -> Self {
        CheckPoint { params, lhs, rhs }
    }

    pub fn params(&self) -> &str {
        &self.params
    }

    pub fn lhs(&self) -> &BigInt {
        &self.lhs
    }

    pub fn rhs(&self) -> &BigInt {
        &self.rhs
    }

    pub fn ok(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The full outcome of checking one identity over a parameter range.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    id: &'static str,
    statement: &'static str,
    range: String,
    points: Vec<CheckPoint>,
}

impl IdentityReport {
    pub fn id(&self) -> &'static str {
        self.id
    }

    pub fn statement(&self) -> &'static str {
        self.statement
    }

    /// Human-readable description of the parameter range that was checked.
    pub fn range(&self) -> &str {
        &self.range
    }

    pub fn points(&self) -> &[CheckPoint] {
        &self.points
    }

    pub fn failures(&self) -> Vec<&CheckPoint> {
        self.points.iter().filter(|p| !p.ok()).collect()
    }

    /// Pass iff no point disagrees.
    pub fn passed(&self) -> bool {
        self.points.iter().all(CheckPoint::ok)
    }

    /// One machine-readable line per point:
    /// `id=... params=... lhs=... rhs=... ok=...`.
    pub fn kv_lines(&self) -> Vec<String> {
        self.points
            .iter()
            .map(|p| {
                format!(
                    "id={} params={} lhs={} rhs={} ok={}",
                    self.id,
                    p.params,
                    p.lhs,
                    p.rhs,
                    p.ok()
                )
            })
            .collect()
    }
}

type Eval = (String, Vec<CheckPoint>);

struct Def {
    id: &'static str,
    statement: &'static str,
    eval: fn(u32) -> Eval,
}

fn bi(v: BigUint) -> BigInt {
    BigInt::from(v)
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn delta(cond: bool) -> BigInt {
    BigInt::from(u8::from(cond))
}

/// Scaled upper bound for a range starting at `lo`: `max_n` clamped to the
/// identity's cap, but always leaving at least three points.
fn hi(lo: u32, max_n: u32, cap: u32) -> u32 {
    max_n.min(cap).max(lo + 2)
}

fn cf_tile(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 {
        BigUint::zero()
    } else {
        tri_ntile_closed_form(n as usize, k as usize)
    }
}

fn cf_board(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 {
        BigUint::zero()
    } else {
        tri_board_closed_form(n as usize, k as usize)
    }
}

fn riordan_at(rows: &[Vec<BigInt>], n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 {
        return BigInt::zero();
    }
    rows.get(n as usize)
        .and_then(|row| row.get(k as usize))
        .cloned()
        .unwrap_or_default()
}

fn sum_row(row: Vec<BigUint>) -> BigInt {
    bi(row.into_iter().fold(BigUint::zero(), |acc, v| acc + v))
}

// --- Board and tile totals ---

fn eval_t_a2n(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        let f = fib_tilings(n);
        pts.push(CheckPoint::new(
            format!("n={n},board=2n"),
            bi(count_board_tilings(2 * n)),
            bi(&f * &f),
        ));
        pts.push(CheckPoint::new(
            format!("n={n},board=2n+1"),
            bi(count_board_tilings(2 * n + 1)),
            bi(&f * fib_tilings(n + 1)),
        ));
    }
    (format!("n=0..={top}"), pts)
}

fn eval_t_bijj(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            CheckPoint::new(
                format!("n={n}"),
                bi(count_n_tilings(n)),
                bi(jacobsthal(n + 1)),
            )
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_t_amn(max: u32) -> Eval {
    let top = hi(0, max, 18);
    let mut pts = Vec::new();
    for m in 2..=4usize {
        for n in 0..=top as usize {
            let mut count = 0u64;
            for_each_board_tiling(n, m - 1, |_| count += 1).expect("positive gap");
            pts.push(CheckPoint::new(
                format!("m={m},N={n}"),
                int(count as i64),
                bi(count_board_tilings_general(m, n as i64).expect("family size >= 2")),
            ));
        }
    }
    (format!("m=2..=4, N=0..={top}"), pts)
}

fn eval_an_sum(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            CheckPoint::new(
                format!("n={n}"),
                bi(count_board_tilings(n)),
                sum_row(tri_board_row(n as usize)),
            )
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_bn_sum(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            CheckPoint::new(
                format!("n={n}"),
                bi(count_n_tilings(n)),
                sum_row(tri_ntile_row(n as usize)),
            )
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

// --- Square-and-domino (Fibonacci) sums ---

fn eval_sf2(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            let mut sum = BigUint::zero();
            for j in 0..=n {
                let f = fib_tilings(j);
                sum += &f * &f;
            }
            CheckPoint::new(
                format!("n={n}"),
                bi(sum),
                bi(fib_tilings(n) * fib_tilings(n + 1)),
            )
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_sff(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            let mut sum = BigUint::zero();
            for j in 0..=(2 * n - 1) {
                sum += fib_tilings(j) * fib_tilings(j + 1);
            }
            let f2n = fib_tilings(2 * n);
            CheckPoint::new(format!("n={n}"), bi(sum), bi(&f2n * &f2n) - 1)
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn double_ff_sum(n: i64) -> BigInt {
    let mut sum = BigUint::zero();
    for j in 0..=(n - 2) {
        sum += fib_tilings(j) * fib_tilings(j + 2);
    }
    bi(sum) * 2
}

fn eval_a2n1a(max: u32) -> Eval {
    let top = hi(2, max, u32::MAX) as i64;
    let pts = (2..=top)
        .map(|n| {
            let fn_ = fib_tilings(n);
            CheckPoint::new(
                format!("n={n}"),
                double_ff_sum(n) - bi(fib_tilings(n - 2) * fib_tilings(n - 1)),
                bi(&fn_ * &fn_) - 1,
            )
        })
        .collect();
    (format!("n=2..={top}"), pts)
}

fn eval_a2n1b(max: u32) -> Eval {
    let top = hi(1, max, u32::MAX) as i64;
    let pts = (1..=top)
        .map(|n| {
            let fm1 = fib_tilings(n - 1);
            CheckPoint::new(
                format!("n={n}"),
                double_ff_sum(n) + bi(&fm1 * &fm1),
                bi(fib_tilings(n) * fib_tilings(n + 1)) - 1,
            )
        })
        .collect();
    (format!("n=1..={top}"), pts)
}

fn eval_sjff(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            let mut rhs = int(1 + n / 2);
            for j in 1..=n {
                rhs += int(j) * bi(fib_tilings(n - j) * fib_tilings(n - j + 1));
            }
            CheckPoint::new(
                format!("n={n}"),
                bi(fib_tilings(n) * fib_tilings(n + 1)),
                rhs,
            )
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_sumbinff(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for p in 1..=6i64 {
        for n in 0..=top {
            let mut rhs = BigUint::zero();
            for r in 0..p {
                rhs += seq_c(r as usize, n);
            }
            for j in p..=n {
                rhs += binomial(j + p - 1, 2 * p - 1) * fib_tilings(n - j) * fib_tilings(n + 1 - j);
            }
            pts.push(CheckPoint::new(
                format!("p={p},n={n}"),
                bi(fib_tilings(n) * fib_tilings(n + 1)),
                bi(rhs),
            ));
        }
    }
    (format!("p=1..=6, n=0..={top}"), pts)
}

fn eval_l_cq(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for r in 0..=6i64 {
        for n in r..=top.max(r) {
            pts.push(CheckPoint::new(
                format!("r={r},n={n}"),
                bi(seq_c(r as usize, n)),
                bi(seq_c(r as usize, n - 2) + binomial(n + r, 2 * r)),
            ));
        }
    }
    (format!("r=0..=6, n=r..={top}"), pts)
}

// --- Jacobsthal sums ---

fn eval_sj(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            let mut sum = BigUint::zero();
            for r in 1..=n {
                sum += jacobsthal(r);
            }
            CheckPoint::new(format!("n={n}"), bi(sum) * 2, bi(jacobsthal(n + 2)) - 1)
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn jacobsthal_prefix(last: i64) -> BigUint {
    let mut sum = BigUint::zero();
    for r in 1..=last {
        sum += jacobsthal(r);
    }
    sum
}

fn eval_sj2n(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            CheckPoint::new(
                format!("n={n}"),
                bi(jacobsthal_prefix(2 * n)),
                bi(jacobsthal(2 * n + 1)) - 1,
            )
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_sj2n1(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            CheckPoint::new(
                format!("n={n}"),
                bi(jacobsthal_prefix(2 * n - 1)),
                bi(jacobsthal(2 * n)),
            )
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_jj(max: u32) -> Eval {
    let top = hi(0, max, 30) as i64;
    let mut pts = Vec::new();
    for m in 0..=top {
        for n in 0..=top {
            pts.push(CheckPoint::new(
                format!("m={m},n={n}"),
                bi(jacobsthal(m + n + 1)),
                bi(jacobsthal(m + 1) * jacobsthal(n + 1) + BigUint::from(2u8) * jacobsthal(m) * jacobsthal(n)),
            ));
        }
    }
    (format!("m=0..={top}, n=0..={top}"), pts)
}

fn eval_sumkj(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            let mut rhs = int(ceil_div(n + 1, 2));
            for j in 1..=(n - 1) {
                rhs += int(j) * bi(jacobsthal(n - j));
            }
            CheckPoint::new(format!("n={n}"), bi(jacobsthal(n + 1)), rhs)
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_sumbinj(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for p in 1..=6i64 {
        for n in 0..=top {
            let mut rhs = BigUint::zero();
            for r in 0..p {
                rhs += seq_d(r as usize, n);
            }
            for k in p..=n {
                rhs += binomial(k - 1, p - 1) * jacobsthal(n + 1 - k);
            }
            pts.push(CheckPoint::new(
                format!("p={p},n={n}"),
                bi(jacobsthal(n + 1)),
                bi(rhs),
            ));
        }
    }
    (format!("p=1..=6, n=0..={top}"), pts)
}

fn eval_sum2km5j(max: u32) -> Eval {
    let top = hi(1, max, u32::MAX) as i64;
    let pts = (1..=top)
        .map(|n| {
            let mut rhs = int(n) + bi(jacobsthal(n - 1));
            for k in 3..=n {
                rhs += int(2 * k - 5) * bi(jacobsthal(n + 1 - k));
            }
            CheckPoint::new(format!("n={n}"), bi(jacobsthal(n + 1)), rhs)
        })
        .collect();
    (format!("n=1..={top}"), pts)
}

fn eval_jf(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            let mut rhs = bi(fibonacci(n + 1));
            for j in 2..=n {
                rhs += bi(jacobsthal(j - 1) * fibonacci(n + 1 - j));
            }
            CheckPoint::new(format!("n={n}"), bi(jacobsthal(n + 1)), rhs)
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_l_dq(max: u32) -> Eval {
    let top = hi(1, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for r in 1..=6i64 {
        for n in r..=top.max(r) {
            pts.push(CheckPoint::new(
                format!("r={r},n={n}"),
                bi(seq_d(r as usize, n)),
                bi(seq_d(r as usize, n - 2) + binomial(n - 1, r - 1)),
            ));
        }
    }
    (format!("r=1..=6, n=r..={top}"), pts)
}

// --- Fixed-tile-count triangle ---

fn eval_chb_col0(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| CheckPoint::new(format!("n={n}"), bi(tri_ntile(n, 0)), int(1)))
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_chb_col1(max: u32) -> Eval {
    let top = hi(1, max, u32::MAX) as i64;
    let pts = (1..=top)
        .map(|n| CheckPoint::new(format!("n={n}"), bi(tri_ntile(n, 1)), int(n - 1)))
        .collect();
    (format!("n=1..={top}"), pts)
}

fn eval_chb_col2(max: u32) -> Eval {
    let top = hi(2, max, u32::MAX) as i64;
    let pts = (2..=top)
        .map(|n| {
            CheckPoint::new(
                format!("n={n}"),
                bi(tri_ntile(n, 2)),
                bi(binomial(n - 2, 2)) + int(n - 1),
            )
        })
        .collect();
    (format!("n=2..={top}"), pts)
}

fn eval_chb_col3(max: u32) -> Eval {
    let top = hi(3, max, u32::MAX) as i64;
    let pts = (3..=top)
        .map(|n| {
            CheckPoint::new(
                format!("n={n}"),
                bi(tri_ntile(n, 3)),
                bi(binomial(n - 3, 3) + BigUint::from(2u8) * binomial(n - 2, 2)),
            )
        })
        .collect();
    (format!("n=3..={top}"), pts)
}

fn eval_chb_diag0(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| CheckPoint::new(format!("n={n}"), bi(tri_ntile(n, n)), delta(n % 2 == 0)))
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_chb_diag1(max: u32) -> Eval {
    let top = hi(1, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for m in 1..=top {
        pts.push(CheckPoint::new(
            format!("m={m},row=2m-1"),
            bi(tri_ntile(2 * m - 1, 2 * m - 2)),
            int(m),
        ));
        pts.push(CheckPoint::new(
            format!("m={m},row=2m"),
            bi(tri_ntile(2 * m, 2 * m - 1)),
            int(m),
        ));
    }
    (format!("m=1..={top}"), pts)
}

fn eval_chb_diag2(max: u32) -> Eval {
    let top = hi(1, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for m in 1..=top {
        pts.push(CheckPoint::new(
            format!("m={m},row=2m"),
            bi(tri_ntile(2 * m, 2 * m - 2)),
            int(m * m),
        ));
        pts.push(CheckPoint::new(
            format!("m={m},row=2m+1"),
            bi(tri_ntile(2 * m + 1, 2 * m - 1)),
            int(m * (m + 1)),
        ));
    }
    (format!("m=1..={top}"), pts)
}

fn eval_bin_sum(max: u32) -> Eval {
    let top = hi(1, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 1..=top {
        for k in 1..=n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                bi(binomial(n, k)),
                bi(tri_ntile(n, k) + tri_ntile(n - 1, k - 1)),
            ));
        }
    }
    (format!("n=1..={top}, k=1..=n"), pts)
}

fn eval_rrb(max: u32) -> Eval {
    let top = hi(2, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 2..=top {
        for k in 1..n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                bi(tri_ntile(n, k)),
                bi(tri_ntile(n - 1, k) + tri_ntile(n - 1, k - 1)),
            ));
        }
    }
    (format!("n=2..={top}, k=1..n"), pts)
}

fn eval_tridq(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for r in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},r={r}"),
                bi(tri_ntile(n, n - r)),
                bi(seq_d(r as usize, n)),
            ));
        }
    }
    (format!("n=0..={top}, r=0..=n"), pts)
}

fn eval_rr2b(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n + 2 {
            let rhs = delta(n == 0 && k == 0)
                + bi(cf_tile(n - 1, k) + cf_tile(n - 2, k - 1) + cf_tile(n - 2, k - 2));
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                bi(cf_tile(n, k)),
                rhs,
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n+2"), pts)
}

fn eval_t_rnkb(max: u32) -> Eval {
    let top = hi(0, max, 40) as i64;
    let (p, q) = ntile_riordan_pair();
    let rows = riordan_rows(&p, &q, top as usize + 1).expect("valid generating pair");
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                riordan_at(&rows, n, n - k),
                bi(tri_ntile(n, k)),
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n"), pts)
}

fn eval_rshift(max: u32) -> Eval {
    let top = hi(0, max, 40) as i64;
    let (p, q) = ntile_riordan_pair();
    let rows = riordan_rows(&p, &q, top as usize + 1).expect("valid generating pair");
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n {
            if n == 0 && k == 0 {
                continue;
            }
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                riordan_at(&rows, n, k),
                riordan_at(&rows, n - 2, k) + bi(binomial(n - 1, k - 1)),
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n, (n,k)!=(0,0)"), pts)
}

fn eval_anm(max: u32) -> Eval {
    let top = hi(0, max, 30) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for m in 0..=top {
            pts.push(CheckPoint::new(
                format!("n={n},m={m}"),
                bi(tri_ntile(n + 2 * m, 2 * m)),
                bi(square_array(n as usize, m as usize + 1)),
            ));
        }
    }
    (format!("n=0..={top}, m=0..={top}"), pts)
}

fn eval_gfb(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                bi(tri_ntile(n, k)),
                bi(cf_tile(n, k)),
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n"), pts)
}

fn eval_corj(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            let mut rhs = BigUint::zero();
            for k in 0..=n {
                rhs += cf_tile(n, k);
            }
            CheckPoint::new(format!("n={n}"), bi(jacobsthal(n + 1)), bi(rhs))
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_nkhalf(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                bi(tri_half(n, k)),
                bi(tri_ntile(2 * n - k, k)),
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n"), pts)
}

// --- Board triangle ---

fn eval_ch_chb(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                bi(tri_board(n, k)),
                bi(tri_ntile(n - k, k)),
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n"), pts)
}

fn eval_2nk(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                bi(cf_board(2 * n, k)),
                bi(tri_half(n, k)),
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n"), pts)
}

fn eval_ch_col0(max: u32) -> Eval {
    let top = hi(1, max, u32::MAX) as i64;
    let pts = (1..=top)
        .map(|n| CheckPoint::new(format!("n={n}"), bi(tri_board(n, 0)), int(1)))
        .collect();
    (format!("n=1..={top}"), pts)
}

fn eval_ch_col1(max: u32) -> Eval {
    let top = hi(3, max, u32::MAX) as i64;
    let pts = (3..=top)
        .map(|n| CheckPoint::new(format!("n={n}"), bi(tri_board(n, 1)), int(n - 2)))
        .collect();
    (format!("n=3..={top}"), pts)
}

fn eval_k2(max: u32) -> Eval {
    let top = hi(4, max, u32::MAX) as i64;
    let pts = (4..=top)
        .map(|n| {
            CheckPoint::new(
                format!("n={n}"),
                bi(tri_board(n, 2)),
                bi(binomial(n - 4, 2)) + int(n - 3),
            )
        })
        .collect();
    (format!("n=4..={top}"), pts)
}

fn eval_k3(max: u32) -> Eval {
    let top = hi(6, max, u32::MAX) as i64;
    let pts = (6..=top)
        .map(|n| {
            CheckPoint::new(
                format!("n={n}"),
                bi(tri_board(n, 3)),
                bi(binomial(n - 6, 3) + BigUint::from(2u8) * binomial(n - 5, 2)),
            )
        })
        .collect();
    (format!("n=6..={top}"), pts)
}

fn eval_tricq(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for r in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},r={r}"),
                bi(tri_board(2 * n + 1, n - r)),
                bi(seq_c(r as usize, n)),
            ));
        }
    }
    (format!("n=0..={top}, r=0..=n"), pts)
}

fn eval_rr(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n + 2 {
            let rhs = delta(n == 0 && k == 0)
                + bi(cf_board(n - 1, k) + cf_board(n - 3, k - 1) + cf_board(n - 4, k - 2));
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                bi(cf_board(n, k)),
                rhs,
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n+2"), pts)
}

fn eval_rrodd(max: u32) -> Eval {
    let top = hi(0, max, 30) as i64;
    let tb = |n: i64, k: i64| bi(tri_board(n, k));
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=2 * n + 1 {
            let rhs = tb(2 * n - 1, k) + tb(2 * n - 1, k - 1) + tb(2 * n - 3, k - 1)
                + tb(2 * n - 3, k - 2)
                - tb(2 * n - 5, k - 3)
                + delta(n == 0 && k == 0);
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                tb(2 * n + 1, k),
                rhs,
            ));
        }
    }
    (format!("n=0..={top}, k=0..=2n+1"), pts)
}

fn eval_t_rnk(max: u32) -> Eval {
    let top = hi(0, max, 40) as i64;
    let (p, q) = board_riordan_pair();
    let rows = riordan_rows(&p, &q, top as usize + 1).expect("valid generating pair");
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                riordan_at(&rows, n, n - k),
                bi(tri_board(2 * n + 1, k)),
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n"), pts)
}

fn eval_rbshift(max: u32) -> Eval {
    let top = hi(0, max, 40) as i64;
    let (p, q) = board_riordan_pair();
    let rows = riordan_rows(&p, &q, top as usize + 1).expect("valid generating pair");
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                riordan_at(&rows, n, k),
                riordan_at(&rows, n - 2, k) + bi(binomial(n + k, 2 * k)),
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n"), pts)
}

fn eval_ch_4mp(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for m in 0..=top {
        let mut cases = vec![
            (0i64, 0i64, int(1)),
            (1, 0, int(m + 1)),
            (3, 1, int(m + 1)),
            (2, 0, int((m + 1) * (m + 1))),
        ];
        if m > 0 {
            cases.push((-1, -1, int(m)));
            cases.push((0, -1, int(m * (m + 1))));
        }
        for (p, q, rhs) in cases {
            pts.push(CheckPoint::new(
                format!("m={m},p={p},q={q}"),
                bi(tri_board(4 * m + p, 2 * m + q)),
                rhs,
            ));
        }
    }
    (format!("m=0..={top}"), pts)
}

fn eval_gf(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                bi(tri_board(n, k)),
                bi(cf_board(n, k)),
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n"), pts)
}

fn eval_corf2(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            let mut rhs = BigUint::zero();
            for k in 0..=2 * n {
                rhs += cf_board(2 * n, k);
            }
            let f = fib_tilings(n);
            CheckPoint::new(format!("n={n}"), bi(&f * &f), bi(rhs))
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_corff(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let pts = (0..=top)
        .map(|n| {
            let mut rhs = BigUint::zero();
            for k in 0..=2 * n + 1 {
                rhs += cf_board(2 * n + 1, k);
            }
            CheckPoint::new(
                format!("n={n}"),
                bi(fib_tilings(n) * fib_tilings(n + 1)),
                bi(rhs),
            )
        })
        .collect();
    (format!("n=0..={top}"), pts)
}

fn eval_2np1kbin(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                bi(tri_board(2 * n + 1, k)),
                bi(tri_board_binomial_split(
                    n as usize,
                    k as usize,
                    RowParity::Odd,
                )),
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n"), pts)
}

fn eval_2nkbin(max: u32) -> Eval {
    let top = hi(0, max, u32::MAX) as i64;
    let mut pts = Vec::new();
    for n in 0..=top {
        for k in 0..=n {
            pts.push(CheckPoint::new(
                format!("n={n},k={k}"),
                bi(tri_board(2 * n, k)),
                bi(tri_board_binomial_split(
                    n as usize,
                    k as usize,
                    RowParity::Even,
                )),
            ));
        }
    }
    (format!("n=0..={top}, k=0..=n"), pts)
}

static REGISTRY: &[Def] = &[
    Def {
        id: "T:A2n",
        statement: "A_{2n} = f_n^2 and A_{2n+1} = f_n*f_{n+1}",
        eval: eval_t_a2n,
    },
    Def {
        id: "T:bijJ",
        statement: "B_n = J_{n+1}",
        eval: eval_t_bijj,
    },
    Def {
        id: "T:Amn",
        statement: "A^(m)_N = f_q^(m-r) * f_{q+1}^r where N = m*q + r, 0 <= r < m",
        eval: eval_t_amn,
    },
    Def {
        id: "I:An=sum",
        statement: "A_n = sum_{k=0}^n board(n,k)",
        eval: eval_an_sum,
    },
    Def {
        id: "I:Bn=sum",
        statement: "B_n = sum_{k=0}^n tile(n,k)",
        eval: eval_bn_sum,
    },
    Def {
        id: "I:Sf2",
        statement: "sum_{j=0}^n f_j^2 = f_n*f_{n+1}",
        eval: eval_sf2,
    },
    Def {
        id: "I:Sff",
        statement: "sum_{j=0}^{2n-1} f_j*f_{j+1} = f_{2n}^2 - 1",
        eval: eval_sff,
    },
    Def {
        id: "I:A2n-1a",
        statement: "2*sum_{j=0}^{n-2} f_j*f_{j+2} - f_{n-2}*f_{n-1} = f_n^2 - 1 (n > 1)",
        eval: eval_a2n1a,
    },
    Def {
        id: "I:A2n-1b",
        statement: "2*sum_{j=0}^{n-2} f_j*f_{j+2} + f_{n-1}^2 = f_n*f_{n+1} - 1 (n > 0)",
        eval: eval_a2n1b,
    },
    Def {
        id: "I:Sjff",
        statement: "f_n*f_{n+1} = 1 + floor(n/2) + sum_{j=1}^n j*f_{n-j}*f_{n-j+1}",
        eval: eval_sjff,
    },
    Def {
        id: "I:sumbinff",
        statement: "f_n*f_{n+1} = sum_{r=0}^{p-1} C^(r)_n + sum_{j=p}^n C(j+p-1,2p-1)*f_{n-j}*f_{n+1-j} (p > 0)",
        eval: eval_sumbinff,
    },
    Def {
        id: "L:Cq",
        statement: "C^(r)_n = C^(r)_{n-2} + C(n+r,2r), with C^(r)_{n<0} = 0",
        eval: eval_l_cq,
    },
    Def {
        id: "I:SJ",
        statement: "2*sum_{r=1}^n J_r = J_{n+2} - 1",
        eval: eval_sj,
    },
    Def {
        id: "I:SJ2n",
        statement: "sum_{r=1}^{2n} J_r = J_{2n+1} - 1",
        eval: eval_sj2n,
    },
    Def {
        id: "I:SJ2n-1",
        statement: "sum_{r=1}^{2n-1} J_r = J_{2n}",
        eval: eval_sj2n1,
    },
    Def {
        id: "I:JJ",
        statement: "J_{m+n+1} = J_{m+1}*J_{n+1} + 2*J_m*J_n",
        eval: eval_jj,
    },
    Def {
        id: "I:sumkJ",
        statement: "J_{n+1} = ceil((n+1)/2) + sum_{j=1}^{n-1} j*J_{n-j}",
        eval: eval_sumkj,
    },
    Def {
        id: "I:sumbinJ",
        statement: "J_{n+1} = sum_{r=0}^{p-1} D^(r)_n + sum_{k=p}^n C(k-1,p-1)*J_{n+1-k} (p > 0)",
        eval: eval_sumbinj,
    },
    Def {
        id: "I:sum2km5J",
        statement: "J_{n+1} = n + J_{n-1} + sum_{k=3}^n (2k-5)*J_{n+1-k} (n > 0)",
        eval: eval_sum2km5j,
    },
    Def {
        id: "I:JF",
        statement: "J_{n+1} = F_{n+1} + sum_{j=2}^n J_{j-1}*F_{n+1-j}",
        eval: eval_jf,
    },
    Def {
        id: "L:Dq",
        statement: "D^(r)_n = D^(r)_{n-2} + C(n-1,r-1) (n >= r > 0)",
        eval: eval_l_dq,
    },
    Def {
        id: "I:chb-col0",
        statement: "tile(n,0) = 1",
        eval: eval_chb_col0,
    },
    Def {
        id: "I:chb-col1",
        statement: "tile(n,1) = n - 1 (n >= 1)",
        eval: eval_chb_col1,
    },
    Def {
        id: "I:chb-col2",
        statement: "tile(n,2) = C(n-2,2) + n - 1 (n >= 2)",
        eval: eval_chb_col2,
    },
    Def {
        id: "I:chb-col3",
        statement: "tile(n,3) = C(n-3,3) + 2*C(n-2,2) (n >= 3)",
        eval: eval_chb_col3,
    },
    Def {
        id: "I:chb-diag0",
        statement: "tile(n,n) = 1 if n is even, else 0",
        eval: eval_chb_diag0,
    },
    Def {
        id: "I:chb-diag1",
        statement: "tile(2m-1,2m-2) = tile(2m,2m-1) = m (m > 0)",
        eval: eval_chb_diag1,
    },
    Def {
        id: "I:chb-diag2",
        statement: "tile(2m,2m-2) = m^2 and tile(2m+1,2m-1) = m*(m+1) (m > 0)",
        eval: eval_chb_diag2,
    },
    Def {
        id: "I:bin=sum",
        statement: "C(n,k) = tile(n,k) + tile(n-1,k-1) (n >= k > 0)",
        eval: eval_bin_sum,
    },
    Def {
        id: "I:rrB",
        statement: "tile(n,k) = tile(n-1,k) + tile(n-1,k-1) (n > k > 0)",
        eval: eval_rrb,
    },
    Def {
        id: "I:triDq",
        statement: "tile(n,n-r) = D^(r)_n (n >= r >= 0)",
        eval: eval_tridq,
    },
    Def {
        id: "I:rr2B",
        statement: "tile(n,k) = delta_{n,0}delta_{k,0} + tile(n-1,k) + tile(n-2,k-1) + tile(n-2,k-2), all sides via the closed form",
        eval: eval_rr2b,
    },
    Def {
        id: "T:RnkB",
        statement: "tile(n,k) = R(n,n-k) for the (1/(1-x^2), x/(1-x)) Riordan array",
        eval: eval_t_rnkb,
    },
    Def {
        id: "I:Rshift",
        statement: "R(n,k) = R(n-2,k) + C(n-1,k-1) (n >= k >= 0, (n,k) != (0,0))",
        eval: eval_rshift,
    },
    Def {
        id: "I:anm",
        statement: "tile(n+2m,2m) = a(n,m+1)",
        eval: eval_anm,
    },
    Def {
        id: "I:gfB",
        statement: "tile(n,k) = sum_b C(n-k+b,k-b)*C(k-b,b) over b in [max(0,ceil(k-n/2)), floor(k/2)]",
        eval: eval_gfb,
    },
    Def {
        id: "I:corJ",
        statement: "J_{n+1} = sum_{k=0}^n sum_b C(n-k+b,k-b)*C(k-b,b)",
        eval: eval_corj,
    },
    Def {
        id: "I:nkhalf",
        statement: "half(n,k) = tile(2n-k,k) (n >= k >= 0)",
        eval: eval_nkhalf,
    },
    Def {
        id: "I:ch=chb",
        statement: "board(n,k) = tile(n-k,k)",
        eval: eval_ch_chb,
    },
    Def {
        id: "I:2nk",
        statement: "board(2n,k) = half(n,k), left side via the closed form",
        eval: eval_2nk,
    },
    Def {
        id: "I:ch-col0",
        statement: "board(n,0) = 1 (n > 0)",
        eval: eval_ch_col0,
    },
    Def {
        id: "I:ch-col1",
        statement: "board(n,1) = n - 2 (n > 2)",
        eval: eval_ch_col1,
    },
    Def {
        id: "I:k=2",
        statement: "board(n,2) = C(n-4,2) + n - 3 (n > 3)",
        eval: eval_k2,
    },
    Def {
        id: "I:k=3",
        statement: "board(n,3) = C(n-6,3) + 2*C(n-5,2) (n > 5)",
        eval: eval_k3,
    },
    Def {
        id: "I:triCq",
        statement: "board(2n+1,n-r) = C^(r)_n (n >= r >= 0)",
        eval: eval_tricq,
    },
    Def {
        id: "I:rr",
        statement: "board(n,k) = board(n-1,k) + board(n-3,k-1) + board(n-4,k-2) + delta_{0,k}delta_{0,n}, all sides via the closed form",
        eval: eval_rr,
    },
    Def {
        id: "I:rrodd",
        statement: "board(2n+1,k) = board(2n-1,k) + board(2n-1,k-1) + board(2n-3,k-1) + board(2n-3,k-2) - board(2n-5,k-3) + delta_{0,k}delta_{0,n}",
        eval: eval_rrodd,
    },
    Def {
        id: "T:Rnk",
        statement: "board(2n+1,k) = Rb(n,n-k) for the (1/((1-x)(1-x^2)), x/(1-x)^2) Riordan array",
        eval: eval_t_rnk,
    },
    Def {
        id: "I:Rbshift",
        statement: "Rb(n,k) = Rb(n-2,k) + C(n+k,2k) (n >= k >= 0)",
        eval: eval_rbshift,
    },
    Def {
        id: "I:ch-4mp",
        statement: "board(4m+p,2m+q): (p,q)=(0,0)->1, (1,0)->m+1, (3,1)->m+1, (2,0)->(m+1)^2; for m>0: (-1,-1)->m, (0,-1)->m(m+1)",
        eval: eval_ch_4mp,
    },
    Def {
        id: "I:gf",
        statement: "board(n,k) = sum_b C(n-2k+b,k-b)*C(k-b,b) over b in [max(0,ceil((3k-n)/2)), floor(k/2)]",
        eval: eval_gf,
    },
    Def {
        id: "I:corF2",
        statement: "f_n^2 = sum_{k=0}^{2n} sum_b C(2n-2k+b,k-b)*C(k-b,b)",
        eval: eval_corf2,
    },
    Def {
        id: "I:corff",
        statement: "f_n*f_{n+1} = sum_{k=0}^{2n+1} sum_b C(2n+1-2k+b,k-b)*C(k-b,b)",
        eval: eval_corff,
    },
    Def {
        id: "I:2n+1kbin",
        statement: "board(2n+1,k) = sum_{j=k-m}^m C(n+1-j,j)*C(n-(k-j),k-j), m = min(floor((n+1)/2),k)",
        eval: eval_2np1kbin,
    },
    Def {
        id: "I:2nkbin",
        statement: "board(2n,k) = sum_{j=k-m}^m C(n-j,j)*C(n-(k-j),k-j), m = min(floor(n/2),k)",
        eval: eval_2nkbin,
    },
];

fn sorted_defs() -> Vec<&'static Def> {
    let mut defs: Vec<&'static Def> = REGISTRY.iter().collect();
    defs.sort_by_key(|d| d.id);
    defs
}

/// All registered identity ids, sorted.
pub fn identity_ids() -> Vec<&'static str> {
    sorted_defs().iter().map(|d| d.id).collect()
}

fn run(def: &'static Def, max_n: u32) -> Result<IdentityReport, Error> {
    let (range, points) = (def.eval)(max_n.max(1));
    if points.is_empty() {
        return Err(Error::EmptyRange(def.id.to_string()));
    }
    Ok(IdentityReport {
        id: def.id,
        statement: def.statement,
        range,
        points,
    })
}

/// Checks one identity over its default range, or the default scaled to
/// `max_n`.
pub fn verify_identity(id: &str, max_n: Option<u32>) -> Result<IdentityReport, Error> {
    let def = REGISTRY
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))?;
    run(def, max_n.unwrap_or(DEFAULT_MAX_N))
}

/// Checks every registered identity, reports ordered by id.
pub fn verify_all(max_n: Option<u32>) -> Vec<IdentityReport> {
    let max_n = max_n.unwrap_or(DEFAULT_MAX_N);
    sorted_defs()
        .into_iter()
        .map(|def| run(def, max_n).expect("registered ranges are never empty"))
        .collect()
}
