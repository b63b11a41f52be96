//! JSON helpers for exact values. Integers above 2^53 are emitted as strings
//! so that consumers with double-precision numbers never round them.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::{json, Value};

const SAFE: u64 = 1 << 53;

pub fn uint(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) if v <= SAFE => json!(v),
        _ => Value::String(n.to_string()),
    }
}

pub fn int(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) if v.unsigned_abs() <= SAFE => json!(v),
        _ => Value::String(n.to_string()),
    }
}

pub fn u64(n: u64) -> Value {
    uint(&BigUint::from(n))
}

/// `{"num": …, "den": …}` in lowest terms.
pub fn rational(r: &BigRational) -> Value {
    json!({ "num": int(r.numer()), "den": int(r.denom()) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn large_numbers_become_strings() {
        assert_eq!(u64(7), json!(7));
        assert_eq!(u64(1 << 53), json!(9007199254740992u64));
        assert_eq!(u64((1 << 53) + 1), json!("9007199254740993"));
        let r = BigRational::new(BigInt::from(14), BigInt::from(4));
        assert_eq!(rational(&r), json!({"num": 7, "den": 2}));
    }
}
