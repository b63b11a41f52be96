//! Word-sized fast paths for numerical sets with small Frobenius number.
//!
//! A set `T` with Frobenius number `f <= 62` is encoded as the `u64` whose bit
//! `n` is set iff `n ∈ T`, for `n` in `[0, f]`. Bits above `f` are always zero;
//! membership above `f` is implicit.

/// Largest Frobenius number representable by a `u64` mask.
pub const MAX_MASK_FROBENIUS: u32 = 62;

/// Bits `0..=f`.
#[inline]
pub fn low(f: u32) -> u64 {
    debug_assert!(f <= MAX_MASK_FROBENIUS);
    (1u64 << (f + 1)) - 1
}

#[inline]
pub fn has(mask: u64, f: u32, n: u32) -> bool {
    n > f || (mask >> n) & 1 == 1
}

/// Whether `n + T ⊆ T`.
#[inline]
pub fn stabilizes(mask: u64, f: u32, n: u32) -> bool {
    if n > f {
        return true;
    }
    ((mask << n) & !mask & low(f)) == 0
}

/// The atom monoid of `T`, restricted to `[0, f]`.
pub fn atom_mask(mask: u64, f: u32) -> u64 {
    let mut out = 0u64;
    for n in 0..=f {
        if stabilizes(mask, f, n) {
            out |= 1 << n;
        }
    }
    out
}

/// True iff no element of `[1, f]` lies in the atom monoid.
pub fn atom_is_trivial_below(mask: u64, f: u32) -> bool {
    (1..=f).all(|n| !stabilizes(mask, f, n))
}

/// Closure under addition: every member stabilizes the set.
pub fn is_closed(mask: u64, f: u32) -> bool {
    let mut rest = mask & !1;
    while rest != 0 {
        let n = rest.trailing_zeros();
        if !stabilizes(mask, f, n) {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

/// Builds the mask of the numerical set with Frobenius number `f` whose
/// members in `[1, f-1]` are the bits of `inner` shifted up by one.
#[inline]
pub fn from_inner(inner: u64, f: u32) -> u64 {
    1 | ((inner << 1) & low(f) & !(1u64 << f))
}
