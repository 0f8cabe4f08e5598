//! Unsigned counting arithmetic shared by the cardinal-language code.
//!
//! Everything is generic over [`Count`], so the same code runs on machine
//! integers and on `BigUint`.

use num_bigint::BigUint;
use num_traits::{FromPrimitive, ToPrimitive, Unsigned};

/// An exact unsigned integer type usable as a coefficient or value.
pub trait Count:
    Unsigned + Clone + Ord + FromPrimitive + ToPrimitive + std::fmt::Debug + std::fmt::Display
{
    fn from_u64(n: u64) -> Self {
        <Self as FromPrimitive>::from_u64(n).expect("value fits the count type")
    }
}

impl Count for u32 {}
impl Count for u64 {}
impl Count for u128 {}
impl Count for BigUint {}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial<N: Count>(n: u64, k: u64) -> N {
    if k > n {
        return N::zero();
    }
    let k = k.min(n - k);
    let mut acc = N::one();
    // acc = C(n - k + i, i) after step i; each division is exact.
    for i in 1..=k {
        acc = acc * <N as Count>::from_u64(n - k + i) / <N as Count>::from_u64(i);
    }
    acc
}

/// `Π_j C(v_j, u_j)`.
pub fn multinomial<N: Count>(v: &[u64], u: &[u32]) -> N {
    v.iter()
        .zip(u)
        .fold(N::one(), |acc, (&vj, &uj)| {
            if acc.is_zero() {
                acc
            } else {
                acc * binomial::<N>(vj, uj as u64)
            }
        })
}

/// `C(n, k)` in `u64`, or `None` on overflow.
pub fn binomial_checked(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc.checked_mul((n as u128) - (k as u128) + i)? / i;
    }
    u64::try_from(acc).ok()
}
