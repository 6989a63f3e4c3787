//! Process-wide size caps for exhaustive enumerations.
//!
//! `max_n` bounds every loop over all `2^n` subsets of a carrier. It defaults
//! to 24 and can be overridden with the `ORDERKIT_MAX_N` environment variable
//! or [`set_max_n`]. `max_enum_n` bounds isomorphism-class enumeration
//! (default 7, env `ORDERKIT_MAX_ENUM_N`).

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{OrderError, Result};

pub const DEFAULT_MAX_N: usize = 24;
pub const DEFAULT_MAX_ENUM_N: usize = 7;
/// Default bound on the number of upper sets materialised at once.
pub const DEFAULT_UPPER_SET_LIMIT: usize = 1 << 20;

// Subsets are enumerated through `u64` masks.
const HARD_MAX_N: usize = 63;

static MAX_N: AtomicUsize = AtomicUsize::new(0);
static MAX_ENUM_N: AtomicUsize = AtomicUsize::new(0);

fn load(slot: &AtomicUsize, var: &str, default: usize) -> usize {
    match slot.load(Ordering::Relaxed) {
        0 => {
            let v = std::env::var(var)
                .ok()
                .and_then(|s| s.trim().parse::<usize>().ok())
                .filter(|&v| v > 0)
                .unwrap_or(default);
            slot.store(v, Ordering::Relaxed);
            v
        }
        v => v,
    }
}

pub fn max_n() -> usize {
    load(&MAX_N, "ORDERKIT_MAX_N", DEFAULT_MAX_N).min(HARD_MAX_N)
}

pub fn set_max_n(n: usize) {
    MAX_N.store(n.clamp(1, HARD_MAX_N), Ordering::Relaxed);
}

pub fn max_enum_n() -> usize {
    load(&MAX_ENUM_N, "ORDERKIT_MAX_ENUM_N", DEFAULT_MAX_ENUM_N)
}

pub fn set_max_enum_n(n: usize) {
    MAX_ENUM_N.store(n.max(1), Ordering::Relaxed);
}

/// Fails with `SizeLimit` when a `2^n` enumeration over `n` elements is not allowed.
pub fn check_subset_enumeration(what: &'static str, n: usize) -> Result<()> {
    let cap = max_n();
    if n > cap {
        return Err(OrderError::SizeLimit {
            what,
            size: n as u128,
            cap: cap as u128,
        });
    }
    Ok(())
}
