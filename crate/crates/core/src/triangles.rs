//! Fence-count triangles: board tilings and fixed-tile-count tilings
//! refined by the number of fences used, together with closed forms,
//! binomial companions, and Riordan-array expansions.

use std::sync::Mutex;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::arith::{binomial, ceil_div};
use crate::series::{mul_trunc, pow_trunc, RationalSeries};
use crate::Error;

static NTILE_ROWS: Mutex<Vec<Vec<BigUint>>> = Mutex::new(Vec::new());
static BOARD_ROWS: Mutex<Vec<Vec<BigUint>>> = Mutex::new(Vec::new());

/// Looks up a previously computed entry while row `n` is being built,
/// treating anything outside the triangle as zero.
fn back(rows: &[Vec<BigUint>], n: usize, dn: usize, k: usize, dk: usize) -> BigUint {
    if dn > n || dk > k {
        return BigUint::zero();
    }
    rows[n - dn].get(k - dk).cloned().unwrap_or_default()
}

fn ntile_step(rows: &[Vec<BigUint>], n: usize, k: usize) -> BigUint {
    let mut value = if n == 0 && k == 0 {
        BigUint::one()
    } else {
        BigUint::zero()
    };
    value += back(rows, n, 1, k, 0);
    value += back(rows, n, 2, k, 1);
    value += back(rows, n, 2, k, 2);
    value
}

fn board_step(rows: &[Vec<BigUint>], n: usize, k: usize) -> BigUint {
    let mut value = if n == 0 && k == 0 {
        BigUint::one()
    } else {
        BigUint::zero()
    };
    value += back(rows, n, 1, k, 0);
    value += back(rows, n, 3, k, 1);
    value += back(rows, n, 4, k, 2);
    value
}

fn triangle_row(
    cache: &Mutex<Vec<Vec<BigUint>>>,
    n: usize,
    step: fn(&[Vec<BigUint>], usize, usize) -> BigUint,
) -> Vec<BigUint> {
    let mut rows = cache.lock().expect("triangle cache poisoned");
    while rows.len() <= n {
        let m = rows.len();
        let row: Vec<BigUint> = (0..=m).map(|k| step(&rows, m, k)).collect();
        rows.push(row);
    }
    rows[n].clone()
}

fn triangle_entry(
    cache: &Mutex<Vec<Vec<BigUint>>>,
    n: i64,
    k: i64,
    step: fn(&[Vec<BigUint>], usize, usize) -> BigUint,
) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let mut rows = cache.lock().expect("triangle cache poisoned");
    let n = n as usize;
    while rows.len() <= n {
        let m = rows.len();
        let row: Vec<BigUint> = (0..=m).map(|k| step(&rows, m, k)).collect();
        rows.push(row);
    }
    rows[n][k as usize].clone()
}

/// Number of square-and-fence tilings built from exactly `n` tiles, `k` of
/// which are fences. Zero outside `0 <= k <= n`. Row sums give the
/// fixed-tile-count totals (A001045 shifted).
pub fn tri_ntile(n: i64, k: i64) -> BigUint {
    triangle_entry(&NTILE_ROWS, n, k, ntile_step)
}

/// Number of tilings of an `n`-board by squares and fences that use exactly
/// `k` fences. Zero outside `0 <= k <= n`; entries with `k > n/2` vanish.
/// Row sums give the board totals (A006498).
pub fn tri_board(n: i64, k: i64) -> BigUint {
    triangle_entry(&BOARD_ROWS, n, k, board_step)
}

/// Row `n` of the fixed-tile-count triangle, entries `k = 0..=n`.
pub fn tri_ntile_row(n: usize) -> Vec<BigUint> {
    triangle_row(&NTILE_ROWS, n, ntile_step)
}

/// Row `n` of the board triangle, entries `k = 0..=n`.
pub fn tri_board_row(n: usize) -> Vec<BigUint> {
    triangle_row(&BOARD_ROWS, n, board_step)
}

/// Even-row half of the board triangle: entry `(n, k)` is the number of
/// tilings of a `2n`-board using exactly `k` fences (A123521 without its
/// zero padding).
pub fn tri_half(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    tri_board(n.saturating_mul(2), k)
}

/// Row `n` of the half triangle, entries `k = 0..=n`.
pub fn tri_half_row(n: usize) -> Vec<BigUint> {
    (0..=n).map(|k| tri_half(n as i64, k as i64)).collect()
}

/// Closed form for the fixed-tile-count triangle: the double-binomial sum
/// over the number of bifences `b`,
/// `sum_b C(n-k+b, k-b) * C(k-b, b)` for
/// `max(0, ceil((2k-n)/2)) <= b <= floor(k/2)`.
pub fn tri_ntile_closed_form(n: usize, k: usize) -> BigUint {
    let (n, k) = (n as i64, k as i64);
    let b_min = ceil_div(2 * k - n, 2).max(0);
    let b_max = k / 2;
    let mut total = BigUint::zero();
    for b in b_min..=b_max {
        total += binomial(n - k + b, k - b) * binomial(k - b, b);
    }
    total
}

/// Closed form for the board triangle: the double-binomial sum over the
/// number of bifences `b`,
/// `sum_b C(n-2k+b, k-b) * C(k-b, b)` for
/// `max(0, ceil((3k-n)/2)) <= b <= floor(k/2)`.
pub fn tri_board_closed_form(n: usize, k: usize) -> BigUint {
    let (n, k) = (n as i64, k as i64);
    let b_min = ceil_div(3 * k - n, 2).max(0);
    let b_max = k / 2;
    let mut total = BigUint::zero();
    for b in b_min..=b_max {
        total += binomial(n - 2 * k + b, k - b) * binomial(k - b, b);
    }
    total
}

/// Which board length parity a binomial row expansion targets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RowParity {
    Even,
    Odd,
}

/// Board-triangle entries on rows of fixed parity as a single binomial
/// convolution. With `Even` this evaluates the `2n`-board entry
/// `sum_j C(n-j, j) * C(n-(k-j), k-j)` over `k-m <= j <= m`,
/// `m = min(floor(n/2), k)`; with `Odd` the `2n+1`-board entry
/// `sum_j C(n+1-j, j) * C(n-(k-j), k-j)` over the same range with
/// `m = min(floor((n+1)/2), k)`.
pub fn tri_board_binomial_split(n: usize, k: usize, parity: RowParity) -> BigUint {
    let (n, k) = (n as i64, k as i64);
    let (first_row, m) = match parity {
        RowParity::Even => (n, (n / 2).min(k)),
        RowParity::Odd => (n + 1, ((n + 1) / 2).min(k)),
    };
    let mut total = BigUint::zero();
    for j in (k - m)..=m {
        total += binomial(first_row - j, j) * binomial(n - (k - j), k - j);
    }
    total
}

/// Stacked-binomial column sums `C^(r)_n = sum C(j+r, 2r)` over
/// `j = n, n-2, ...` down to 0 (A158909 family). Zero for `n < 0`.
pub fn seq_c(r: usize, n: i64) -> BigUint {
    let r = r as i64;
    let mut total = BigUint::zero();
    let mut j = n;
    while j >= 0 {
        total += binomial(j + r, 2 * r);
        j -= 2;
    }
    total
}

/// Stacked-binomial column sums `D^(r)_n` (A059260 family): for `r = 0` the
/// indicator of even `n >= 0`, and for `r > 0` the sum `C(j-1, r-1)` over
/// `j = n, n-2, ...` down to 1.
pub fn seq_d(r: usize, n: i64) -> BigUint {
    if r == 0 {
        return if n >= 0 && n % 2 == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let r = r as i64;
    let mut total = BigUint::zero();
    let mut j = n;
    while j >= 1 {
        total += binomial(j - 1, r - 1);
        j -= 2;
    }
    total
}

/// Square array `a(n, m)`: 1 when `n = 0`, otherwise
/// `sum_{r=0}^{m-1} C(n-1+2r, n-1)` (A071921 read by antidiagonals).
pub fn square_array(n: usize, m: usize) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let n = n as i64;
    let mut total = BigUint::zero();
    for r in 0..m as i64 {
        total += binomial(n - 1 + 2 * r, n - 1);
    }
    total
}

/// Generating pair `(1/(1-x^2), x/(1-x))`: the Riordan array it generates
/// holds the fixed-tile-count triangle along reversed rows.
pub fn ntile_riordan_pair() -> (RationalSeries, RationalSeries) {
    (
        RationalSeries::from_i64(&[1], &[1, 0, -1]).expect("nonzero constant denominator"),
        RationalSeries::from_i64(&[0, 1], &[1, -1]).expect("nonzero constant denominator"),
    )
}

/// Generating pair `(1/((1-x)(1-x^2)), x/(1-x)^2)`: the Riordan array it
/// generates holds the odd rows of the board triangle along reversed rows.
pub fn board_riordan_pair() -> (RationalSeries, RationalSeries) {
    (
        RationalSeries::from_i64(&[1], &[1, -1, -1, 1]).expect("nonzero constant denominator"),
        RationalSeries::from_i64(&[0, 1], &[1, -2, 1]).expect("nonzero constant denominator"),
    )
}

/// Entry `(n, k)` of the Riordan array for the pair `(p, q)`: the
/// coefficient of `x^n` in `p(x) * q(x)^k`. `q` must have constant term
/// zero so the array is lower triangular.
pub fn riordan_entry(
    p: &RationalSeries,
    q: &RationalSeries,
    n: usize,
    k: usize,
) -> Result<BigInt, Error> {
    if !q.constant_term_is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    let p_coeffs = p.expand(n)?;
    let q_coeffs = q.expand(n)?;
    let power = pow_trunc(&q_coeffs, k, n);
    let product = mul_trunc(&p_coeffs, &power, n);
    Ok(product[n].clone())
}

/// The first `rows` rows of the Riordan array for `(p, q)`, row `n` holding
/// entries `k = 0..=n`. Columns are built iteratively as `p * q^k`.
pub fn riordan_rows(
    p: &RationalSeries,
    q: &RationalSeries,
    rows: usize,
) -> Result<Vec<Vec<BigInt>>, Error> {
    if !q.constant_term_is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    if rows == 0 {
        return Ok(Vec::new());
    }
    let order = rows - 1;
    let q_coeffs = q.expand(order)?;
    let mut column = p.expand(order)?;
    let mut out: Vec<Vec<BigInt>> = (0..rows).map(|n| Vec::with_capacity(n + 1)).collect();
    for k in 0..rows {
        for (n, row) in out.iter_mut().enumerate().skip(k) {
            row.push(column[n].clone());
        }
        if k + 1 < rows {
            column = mul_trunc(&column, &q_coeffs, order);
        }
    }
    Ok(out)
}
