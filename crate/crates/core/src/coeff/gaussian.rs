use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::format_rational;

/// `re + im·i` in the Gaussian field `Q(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gaussian {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gaussian {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Gaussian { re, im }
    }

    pub fn zero() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Gaussian::new(BigRational::one(), BigRational::zero())
    }

    pub fn i() -> Self {
        Gaussian::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Gaussian::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn neg(&self) -> Self {
        Gaussian::new(-&self.re, -&self.im)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Gaussian::new(
            &self.re * &other.re - &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
        )
    }

    /// `(a - bi) / (a^2 + b^2)`; `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        Some(Gaussian::new(&self.re / &norm, -&self.im / &norm))
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |im: &BigRational| {
            if im.is_one() {
                "i".to_string()
            } else if (-im).is_one() {
                "-i".to_string()
            } else {
                format!("{}i", format_rational(im))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", format_rational(&self.re)),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(
                    f,
                    "{}{}{}",
                    format_rational(&self.re),
                    sign,
                    imag(&self.im.abs())
                )
            }
        }
    }
}
