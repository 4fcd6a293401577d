//! Integer lower bounds: ceilings of the real-valued family-size bounds.
//! Results saturate at `u64::MAX`.

/// `⌈2^x⌉` for a real exponent.
pub fn ceil_pow2(x: f64) -> u64 {
    if x <= 0.0 {
        return 1;
    }
    let v = x.exp2();
    if v >= u64::MAX as f64 {
        return u64::MAX;
    }
    v.ceil() as u64
}

/// `⌈2^(num/den)⌉`, exact when `den` divides `num` (otherwise the power is
/// irrational and the float ceiling is exact in practice).
pub fn ceil_pow2_ratio(num: u64, den: u64) -> u64 {
    assert!(den > 0, "zero denominator");
    if num.is_multiple_of(den) {
        let k = num / den;
        return if k >= 64 { u64::MAX } else { 1u64 << k };
    }
    ceil_pow2(num as f64 / den as f64)
}

/// `⌈½ (base_num / base_den)^exp⌉`, computed exactly while it fits.
pub fn ceil_half_power(base_num: u64, base_den: u64, exp: u64) -> u64 {
    assert!(base_den > 0, "zero denominator");
    let mut num: u128 = 1;
    let mut den: u128 = 2;
    for _ in 0..exp {
        match (num.checked_mul(base_num as u128), den.checked_mul(base_den as u128)) {
            (Some(a), Some(b)) => {
                num = a;
                den = b;
            }
            _ => {
                let log2 = exp as f64 * ((base_num as f64).log2() - (base_den as f64).log2()) - 1.0;
                return ceil_pow2(log2);
            }
        }
    }
    let q = num.div_ceil(den);
    u64::try_from(q).unwrap_or(u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(ceil_pow2_ratio(1, 3), 2);
        assert_eq!(ceil_pow2_ratio(2, 3), 2);
        assert_eq!(ceil_pow2_ratio(5, 3), 4);
        assert_eq!(ceil_pow2_ratio(10, 3), 11);
        assert_eq!(ceil_pow2_ratio(6, 3), 4);
        assert_eq!(ceil_pow2_ratio(0, 3), 1);
        assert_eq!(ceil_pow2_ratio(200, 2), u64::MAX);
        assert_eq!(ceil_pow2_ratio(4, 6), 2);
        // K4 with Z8: ½ · 2² ; Z7: ½ · (½)²
        assert_eq!(ceil_half_power(4, 2, 2), 2);
        assert_eq!(ceil_half_power(1, 2, 2), 1);
        assert_eq!(ceil_half_power(3, 2, 6), 6);
        assert_eq!(ceil_half_power(100, 1, 40), u64::MAX);
    }
}
