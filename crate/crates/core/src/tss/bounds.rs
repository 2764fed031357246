use super::TssError;

fn half_bound(k: u32, shift: u32) -> Result<u128, TssError> {
    // 2^(k - 1 - shift) * (k - shift)!
    let f = (1..=(k - shift) as u128)
        .try_fold(1u128, |acc, j| acc.checked_mul(j))
        .ok_or(TssError::Overflow)?;
    1u128
        .checked_shl(k - 1 - shift)
        .and_then(|p| p.checked_mul(f))
        .ok_or(TssError::Overflow)
}

fn floor_half(n: u32) -> Result<u32, TssError> {
    if n < 5 {
        return Err(TssError::BoundDomain(n));
    }
    Ok(n / 2)
}

/// `2^(⌊n/2⌋-1) ⌊n/2⌋!`: lower bound on `|G|` for a non-cyclic `B_n -> G`, `n >= 5`.
pub fn thm1_bound(n: u32) -> Result<u128, TssError> {
    half_bound(floor_half(n)?, 0)
}

/// `2^(⌊n/2⌋-2) (⌊n/2⌋-1)!`: lower bound on `|G|` for a nontrivial `B_n' -> G`, `n >= 5`.
pub fn thm2_bound(n: u32) -> Result<u128, TssError> {
    half_bound(floor_half(n)?, 1)
}
