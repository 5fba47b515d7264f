use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Default cap on the dimension of any space handed to exact linear algebra.
pub const DEFAULT_MAX_DIM: usize = 20_000;

/// Environment variable overriding [`DEFAULT_MAX_DIM`].
pub const MAX_DIM_ENV: &str = "PBWDEGEN_MAX_DIM";

/// The active dimension cap, read once from `PBWDEGEN_MAX_DIM`.
pub fn max_dim() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var(MAX_DIM_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_DIM)
    })
}

pub(crate) fn check_dim(what: &str, size: usize) -> Result<()> {
    let limit = max_dim();
    if size > limit {
        return Err(Error::SizeLimit { what: what.to_string(), size, limit });
    }
    Ok(())
}
