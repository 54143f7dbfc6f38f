use std::fmt::Debug;

/// Numeric type usable as a vertex cost or matching weight.
///
/// The solver only needs ring operations, exact division by two and a
/// partial order. Exact types (`i64`, `i128`, [`num_rational::Ratio`]) give
/// exact certificates; `f64` works as long as the inputs are small integers
/// or dyadic fractions, since slack comparisons are made against zero.
pub trait Scalar: num_traits::Num + Copy + PartialOrd + Debug + Send + Sync + 'static {
    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}

impl<T> Scalar for T where T: num_traits::Num + Copy + PartialOrd + Debug + Send + Sync + 'static {}

pub(crate) fn sum<T: Scalar, I: IntoIterator<Item = T>>(iter: I) -> T {
    iter.into_iter().fold(T::zero(), |acc, x| acc + x)
}
