//! Scalar abstraction: every numeric routine in this crate is generic over a
//! floating point type implementing [`Scalar`]. Concrete aliases for the
//! `f64` instantiation live at the crate root.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};
use rand::Rng;
use rand_distr::{Distribution, Gamma, Normal, Poisson};
use serde::de::DeserializeOwned;
use serde::Serialize;

/// Floating point scalar usable everywhere in the crate: `f32` or `f64`.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Sum<Self>
    + Debug
    + Display
    + Serialize
    + DeserializeOwned
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from an `f64` literal or precomputed constant.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite constant")
    }

    /// Conversion from an index or count.
    fn from_index(i: usize) -> Self {
        Self::from_usize(i).expect("index fits in scalar")
    }

    /// Round-trip through `f64`, used when a routine needs `f64` precision
    /// internally (e.g. special functions) regardless of `Self`.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Scalar that additionally supports the random sampling primitives needed by
/// the simulators. Kept separate from [`Scalar`] so the purely deterministic
/// checkers do not drag in distribution bounds.
pub trait SimScalar: Scalar {
    /// One standard normal draw.
    fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One uniform draw in `[0, 1)`.
    fn standard_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self;

    /// One draw from Gamma(shape, scale). `shape > 0`, `scale > 0`.
    fn gamma<R: Rng + ?Sized>(rng: &mut R, shape: Self, scale: Self) -> Self;

    /// One Poisson(lambda) draw, returned as a nonnegative integer value.
    fn poisson<R: Rng + ?Sized>(rng: &mut R, lambda: Self) -> Self;
}

macro_rules! impl_sim_scalar {
    ($t:ty) => {
        impl SimScalar for $t {
            fn standard_normal<R: Rng + ?Sized>(rng: &mut R) -> Self {
                rand_distr::StandardNormal.sample(rng)
            }

            fn standard_uniform<R: Rng + ?Sized>(rng: &mut R) -> Self {
                rng.random()
            }

            fn gamma<R: Rng + ?Sized>(rng: &mut R, shape: Self, scale: Self) -> Self {
                Gamma::new(shape, scale)
                    .expect("valid gamma parameters")
                    .sample(rng)
            }

            fn poisson<R: Rng + ?Sized>(rng: &mut R, lambda: Self) -> Self {
                if lambda <= 0.0 {
                    return 0.0;
                }
                Poisson::new(lambda).expect("valid poisson rate").sample(rng)
            }
        }

        // Normal is referenced here only so both impls share the same bound
        // checks at compile time.
        const _: fn() = || {
            fn assert_distr<D: Distribution<$t>>() {}
            assert_distr::<Normal<$t>>();
        };
    };
}

impl_sim_scalar!(f32);
impl_sim_scalar!(f64);

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn conversions_round_trip() {
        assert_eq!(f64::of(0.25), 0.25);
        assert_eq!(f32::from_index(7), 7.0f32);
        assert_eq!(1.5f64.as_f64(), 1.5);
    }

    #[test]
    fn sampling_is_seed_deterministic() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        let xa: f64 = f64::standard_normal(&mut a);
        let xb: f64 = f64::standard_normal(&mut b);
        assert_eq!(xa, xb);
        let ga = f64::gamma(&mut a, 0.3, 1.0);
        let gb = f64::gamma(&mut b, 0.3, 1.0);
        assert_eq!(ga, gb);
        assert!(ga > 0.0);
    }

    #[test]
    fn poisson_handles_zero_rate() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert_eq!(f64::poisson(&mut rng, 0.0), 0.0);
        let draw = f32::poisson(&mut rng, 3.0);
        assert!(draw >= 0.0 && draw.fract() == 0.0);
    }
}
