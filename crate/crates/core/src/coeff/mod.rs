//! Exact coefficient rings.
//!
//! A [`RingSpec`] names one of six concrete rings and carries the facts the
//! decision procedures need about it (IBN, simplicity, coefficient grading).
//! [`RingElement`] values are plain data in normal form; all arithmetic goes
//! through the spec, which rejects elements of the wrong variant.

mod gaussian;
pub mod leavitt;
mod poly;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use gaussian::Gaussian;
pub use leavitt::{BaseField, LeavittElement, Letter};
pub use poly::Poly;

use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingVariant {
    Rationals,
    PrimeField(u64),
    Integers,
    /// `Q(i)`, graded by `Z/2` (real part in degree 0, imaginary part in degree 1).
    GaussianField,
    /// `Q[x]`, graded by `Z` via the x-degree.
    PolyRing,
    Leavitt(BaseField),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RingSpec {
    variant: RingVariant,
    has_ibn: bool,
    is_simple: bool,
    coeff_grading_group: Option<GroupSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingElement {
    Rational(BigRational),
    PrimeField(u64),
    Integer(BigInt),
    Gaussian(Gaussian),
    Poly(Poly),
    Leavitt(LeavittElement),
}

/// JSON form of a ring element: `{"variant": <ring>, "value": <element text>}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedElement {
    pub variant: String,
    pub value: String,
}

fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

impl RingSpec {
    pub fn new(variant: RingVariant) -> Result<Self> {
        let prime = match variant {
            RingVariant::PrimeField(p) | RingVariant::Leavitt(BaseField::PrimeField(p)) => Some(p),
            _ => None,
        };
        if let Some(p) = prime {
            if !is_prime(p) {
                return Err(Error::Domain(format!("F{p}: {p} is not prime")));
            }
        }
        // IBN and simplicity are known classification facts, not computed.
        let (has_ibn, is_simple, coeff_grading_group) = match variant {
            RingVariant::Rationals | RingVariant::PrimeField(_) => (true, true, None),
            RingVariant::Integers => (true, false, None),
            RingVariant::GaussianField => (true, true, Some(GroupSpec::cyclic(2)?)),
            RingVariant::PolyRing => (true, false, Some(GroupSpec::integers())),
            RingVariant::Leavitt(_) => (false, true, None),
        };
        Ok(RingSpec {
            variant,
            has_ibn,
            is_simple,
            coeff_grading_group,
        })
    }

    pub fn rationals() -> Self {
        Self::new(RingVariant::Rationals).expect("Q is valid")
    }

    pub fn variant(&self) -> RingVariant {
        self.variant
    }

    pub fn has_ibn(&self) -> bool {
        self.has_ibn
    }

    pub fn is_simple(&self) -> bool {
        self.is_simple
    }

    pub fn coeff_grading_group(&self) -> Option<&GroupSpec> {
        self.coeff_grading_group.as_ref()
    }

    pub fn is_field(&self) -> bool {
        matches!(
            self.variant,
            RingVariant::Rationals | RingVariant::PrimeField(_) | RingVariant::GaussianField
        )
    }

    fn base(&self) -> BaseField {
        match self.variant {
            RingVariant::Leavitt(b) => b,
            _ => BaseField::Rationals,
        }
    }

    pub fn zero(&self) -> RingElement {
        match self.variant {
            RingVariant::Rationals => RingElement::Rational(BigRational::zero()),
            RingVariant::PrimeField(_) => RingElement::PrimeField(0),
            RingVariant::Integers => RingElement::Integer(BigInt::zero()),
            RingVariant::GaussianField => RingElement::Gaussian(Gaussian::zero()),
            RingVariant::PolyRing => RingElement::Poly(Poly::zero()),
            RingVariant::Leavitt(_) => RingElement::Leavitt(LeavittElement::zero()),
        }
    }

    pub fn one(&self) -> RingElement {
        match self.variant {
            RingVariant::Rationals => RingElement::Rational(BigRational::one()),
            RingVariant::PrimeField(_) => RingElement::PrimeField(1),
            RingVariant::Integers => RingElement::Integer(BigInt::one()),
            RingVariant::GaussianField => RingElement::Gaussian(Gaussian::one()),
            RingVariant::PolyRing => RingElement::Poly(Poly::constant(BigRational::one())),
            RingVariant::Leavitt(_) => RingElement::Leavitt(LeavittElement::one()),
        }
    }

    /// Image of an integer under the unit map `Z -> R`.
    pub fn from_int(&self, k: i64) -> RingElement {
        let q = BigRational::from_integer(k.into());
        match self.variant {
            RingVariant::Rationals => RingElement::Rational(q),
            RingVariant::PrimeField(p) => RingElement::PrimeField(k.rem_euclid(p as i64) as u64),
            RingVariant::Integers => RingElement::Integer(k.into()),
            RingVariant::GaussianField => {
                RingElement::Gaussian(Gaussian::new(q, BigRational::zero()))
            }
            RingVariant::PolyRing => RingElement::Poly(Poly::constant(q)),
            RingVariant::Leavitt(b) => RingElement::Leavitt(LeavittElement::one().scale(&q, b)),
        }
    }

    pub fn contains(&self, a: &RingElement) -> bool {
        match (self.variant, a) {
            (RingVariant::Rationals, RingElement::Rational(_))
            | (RingVariant::Integers, RingElement::Integer(_))
            | (RingVariant::GaussianField, RingElement::Gaussian(_))
            | (RingVariant::PolyRing, RingElement::Poly(_))
            | (RingVariant::Leavitt(_), RingElement::Leavitt(_)) => true,
            (RingVariant::PrimeField(p), RingElement::PrimeField(r)) => *r < p,
            _ => false,
        }
    }

    fn mismatch(&self, a: &RingElement, b: &RingElement) -> Error {
        Error::Domain(format!(
            "operands {a:?} and {b:?} are not both elements of {self}"
        ))
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        use RingElement as E;
        if !self.contains(a) || !self.contains(b) {
            return Err(self.mismatch(a, b));
        }
        Ok(match (a, b) {
            (E::Rational(x), E::Rational(y)) => E::Rational(x + y),
            (E::PrimeField(x), E::PrimeField(y)) => {
                let RingVariant::PrimeField(p) = self.variant else {
                    unreachable!()
                };
                E::PrimeField(((*x as u128 + *y as u128) % p as u128) as u64)
            }
            (E::Integer(x), E::Integer(y)) => E::Integer(x + y),
            (E::Gaussian(x), E::Gaussian(y)) => E::Gaussian(x.add(y)),
            (E::Poly(x), E::Poly(y)) => E::Poly(x.add(y)),
            (E::Leavitt(x), E::Leavitt(y)) => E::Leavitt(x.add(y, self.base())),
            _ => return Err(self.mismatch(a, b)),
        })
    }

    pub fn neg(&self, a: &RingElement) -> Result<RingElement> {
        use RingElement as E;
        if !self.contains(a) {
            return Err(self.mismatch(a, a));
        }
        Ok(match a {
            E::Rational(x) => E::Rational(-x),
            E::PrimeField(x) => {
                let RingVariant::PrimeField(p) = self.variant else {
                    unreachable!()
                };
                E::PrimeField((p - x) % p)
            }
            E::Integer(x) => E::Integer(-x),
            E::Gaussian(x) => E::Gaussian(x.neg()),
            E::Poly(x) => E::Poly(x.neg()),
            E::Leavitt(x) => E::Leavitt(x.neg(self.base())),
        })
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        self.add(a, &self.neg(b)?)
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> Result<RingElement> {
        use RingElement as E;
        if !self.contains(a) || !self.contains(b) {
            return Err(self.mismatch(a, b));
        }
        Ok(match (a, b) {
            (E::Rational(x), E::Rational(y)) => E::Rational(x * y),
            (E::PrimeField(x), E::PrimeField(y)) => {
                let RingVariant::PrimeField(p) = self.variant else {
                    unreachable!()
                };
                E::PrimeField(((*x as u128 * *y as u128) % p as u128) as u64)
            }
            (E::Integer(x), E::Integer(y)) => E::Integer(x * y),
            (E::Gaussian(x), E::Gaussian(y)) => E::Gaussian(x.mul(y)),
            (E::Poly(x), E::Poly(y)) => E::Poly(x.mul(y)),
            (E::Leavitt(x), E::Leavitt(y)) => E::Leavitt(x.mul(y, self.base())),
            _ => return Err(self.mismatch(a, b)),
        })
    }

    pub fn is_zero(&self, a: &RingElement) -> bool {
        match a {
            RingElement::Rational(x) => x.is_zero(),
            RingElement::PrimeField(x) => *x == 0,
            RingElement::Integer(x) => x.is_zero(),
            RingElement::Gaussian(x) => x.is_zero(),
            RingElement::Poly(x) => x.is_zero(),
            RingElement::Leavitt(x) => x.is_zero(),
        }
    }

    /// Multiplicative inverse in the field variants; `None` for zero or when
    /// the ring is not a field.
    pub fn inverse(&self, a: &RingElement) -> Option<RingElement> {
        match (self.variant, a) {
            (RingVariant::Rationals, RingElement::Rational(x)) if !x.is_zero() => {
                Some(RingElement::Rational(x.recip()))
            }
            (RingVariant::PrimeField(p), RingElement::PrimeField(x)) if *x != 0 => {
                let inv = BaseField::PrimeField(p)
                    .normalize(&BigRational::new(BigInt::one(), BigInt::from(*x)));
                Some(RingElement::PrimeField(
                    inv.to_integer().try_into().expect("residue fits in u64"),
                ))
            }
            (RingVariant::GaussianField, RingElement::Gaussian(x)) => {
                x.inverse().map(RingElement::Gaussian)
            }
            _ => None,
        }
    }

    /// Splits `r` into its homogeneous components for the coefficient grading.
    pub fn homogeneous_parts(
        &self,
        r: &RingElement,
    ) -> Result<BTreeMap<GroupElement, RingElement>> {
        let group = self
            .coeff_grading_group
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("{self} carries no coefficient grading")))?;
        if !self.contains(r) {
            return Err(self.mismatch(r, r));
        }
        let mut parts = BTreeMap::new();
        match r {
            RingElement::Gaussian(z) => {
                if !z.re.is_zero() {
                    let d = group.element(vec![], vec![0])?;
                    parts.insert(
                        d,
                        RingElement::Gaussian(Gaussian::new(z.re.clone(), BigRational::zero())),
                    );
                }
                if !z.im.is_zero() {
                    let d = group.element(vec![], vec![1])?;
                    parts.insert(
                        d,
                        RingElement::Gaussian(Gaussian::new(BigRational::zero(), z.im.clone())),
                    );
                }
            }
            RingElement::Poly(p) => {
                for (deg, c) in p.terms() {
                    let d = group.element(vec![deg as i64], vec![])?;
                    parts.insert(d, RingElement::Poly(Poly::monomial(c.clone(), deg)));
                }
            }
            _ => unreachable!("only graded variants have a coefficient group"),
        }
        Ok(parts)
    }

    /// Homogeneous generators of `R` as an additive group over its prime
    /// subfield, up to `degree_bound` for `Q[x]`: `{1, i}` for `Q(i)`,
    /// `{1, x, ..., x^bound}` for `Q[x]`. Ungraded rings return `{1}` in the
    /// identity of the trivial group.
    pub fn homogeneous_generators(
        &self,
        degree_bound: u32,
    ) -> Result<Vec<(GroupElement, RingElement)>> {
        Ok(match (&self.coeff_grading_group, self.variant) {
            (Some(g), RingVariant::GaussianField) => vec![
                (g.element(vec![], vec![0])?, self.one()),
                (
                    g.element(vec![], vec![1])?,
                    RingElement::Gaussian(Gaussian::i()),
                ),
            ],
            (Some(g), RingVariant::PolyRing) => (0..=degree_bound)
                .map(|d| {
                    Ok((
                        g.element(vec![d as i64], vec![])?,
                        RingElement::Poly(Poly::monomial(BigRational::one(), d)),
                    ))
                })
                .collect::<Result<_>>()?,
            _ => vec![(GroupSpec::trivial().identity(), self.one())],
        })
    }

    /// Whether some nonzero coefficient has degree `a` in the coefficient grading.
    pub fn coeff_degree_occurs(&self, a: &GroupElement) -> Result<bool> {
        let group = self
            .coeff_grading_group
            .as_ref()
            .ok_or_else(|| Error::Unsupported(format!("{self} carries no coefficient grading")))?;
        if !group.contains(a) {
            return Err(Error::Domain(format!("{a:?} is not a degree in {group}")));
        }
        Ok(match self.variant {
            RingVariant::GaussianField => true,
            RingVariant::PolyRing => a.free_part()[0] >= 0,
            _ => unreachable!("only graded variants have a coefficient group"),
        })
    }

    pub fn parse_element(&self, text: &str) -> Result<RingElement> {
        let text = text.trim();
        Ok(match self.variant {
            RingVariant::Rationals => RingElement::Rational(parse_signed_rational(text)?),
            RingVariant::Integers => RingElement::Integer(
                text.parse()
                    .map_err(|_| Error::parse(text, "expected an integer"))?,
            ),
            RingVariant::PrimeField(p) => {
                let k: BigInt = text
                    .parse()
                    .map_err(|_| Error::parse(text, "expected an integer"))?;
                let r = BaseField::PrimeField(p).normalize(&BigRational::from_integer(k));
                RingElement::PrimeField(r.to_integer().try_into().expect("residue fits in u64"))
            }
            RingVariant::GaussianField => {
                let mut z = Gaussian::zero();
                for (negative, term) in split_signed_terms(text)? {
                    let part = match term.strip_suffix('i') {
                        Some(c) => {
                            let c = c.strip_suffix('*').unwrap_or(c);
                            let c = if c.is_empty() {
                                BigRational::one()
                            } else {
                                parse_rational(c)?
                            };
                            Gaussian::new(BigRational::zero(), c)
                        }
                        None => Gaussian::new(parse_rational(&term)?, BigRational::zero()),
                    };
                    z = z.add(&if negative { part.neg() } else { part });
                }
                RingElement::Gaussian(z)
            }
            RingVariant::PolyRing => {
                let mut p = Poly::zero();
                for (negative, term) in split_signed_terms(text)? {
                    let (c, d) = match term.find('x') {
                        Some(at) => {
                            let c = term[..at].strip_suffix('*').unwrap_or(&term[..at]);
                            let c = if c.is_empty() {
                                BigRational::one()
                            } else {
                                parse_rational(c)?
                            };
                            let rest = &term[at + 1..];
                            let d = match rest.strip_prefix('^') {
                                Some(e) => e
                                    .parse::<u32>()
                                    .map_err(|_| Error::parse(&term, "bad exponent"))?,
                                None if rest.is_empty() => 1,
                                None => return Err(Error::parse(&term, "unexpected text after x")),
                            };
                            (c, d)
                        }
                        None => (parse_rational(&term)?, 0),
                    };
                    let c = if negative { -c } else { c };
                    p = p.add(&Poly::monomial(c, d));
                }
                RingElement::Poly(p)
            }
            RingVariant::Leavitt(b) => RingElement::Leavitt(LeavittElement::parse(text, b)?),
        })
    }

    pub fn format_element(&self, a: &RingElement) -> String {
        match a {
            RingElement::Rational(x) => format_rational(x),
            RingElement::PrimeField(x) => x.to_string(),
            RingElement::Integer(x) => x.to_string(),
            RingElement::Gaussian(z) => z.to_string(),
            RingElement::Poly(p) => p.to_string(),
            RingElement::Leavitt(l) => l.to_string(),
        }
    }

    pub fn to_tagged(&self, a: &RingElement) -> TaggedElement {
        TaggedElement {
            variant: self.to_string(),
            value: self.format_element(a),
        }
    }
}

impl TaggedElement {
    pub fn decode(&self) -> Result<(RingSpec, RingElement)> {
        let ring: RingSpec = self.variant.parse()?;
        let value = ring.parse_element(&self.value)?;
        Ok((ring, value))
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.variant {
            RingVariant::Rationals => write!(f, "Q"),
            RingVariant::PrimeField(p) => write!(f, "F{p}"),
            RingVariant::Integers => write!(f, "Z"),
            RingVariant::GaussianField => write!(f, "Q(i)"),
            RingVariant::PolyRing => write!(f, "Q[x]"),
            RingVariant::Leavitt(BaseField::Rationals) => write!(f, "L(1,2)"),
            RingVariant::Leavitt(BaseField::PrimeField(p)) => write!(f, "L(1,2)/F{p}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// `Q`, `Z`, `F7` (or `GF(7)`), `Q(i)`, `Q[x]`, `L(1,2)`, `L(1,2)/F7`.
    fn from_str(text: &str) -> Result<Self> {
        let text: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let prime = |s: &str| -> Option<u64> {
            s.strip_prefix("GF(")
                .and_then(|r| r.strip_suffix(')'))
                .or_else(|| s.strip_prefix('F'))
                .and_then(|d| d.parse().ok())
        };
        let variant = match text.as_str() {
            "Q" => RingVariant::Rationals,
            "Z" => RingVariant::Integers,
            "Q(i)" => RingVariant::GaussianField,
            "Q[x]" => RingVariant::PolyRing,
            "L(1,2)" | "L(1,2)/Q" => RingVariant::Leavitt(BaseField::Rationals),
            other => {
                if let Some(base) = other.strip_prefix("L(1,2)/") {
                    let p = prime(base)
                        .ok_or_else(|| Error::parse(base, "unknown Leavitt base field"))?;
                    RingVariant::Leavitt(BaseField::PrimeField(p))
                } else if let Some(p) = prime(other) {
                    RingVariant::PrimeField(p)
                } else {
                    return Err(Error::parse(other, "unknown ring"));
                }
            }
        };
        RingSpec::new(variant)
    }
}

pub(crate) fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Unsigned `p` or `p/q`.
pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::parse(s, "expected a rational number");
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if num.starts_with(['+', '-']) || den.starts_with(['+', '-']) {
        return Err(bad());
    }
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Domain(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(num, den))
}

fn parse_signed_rational(s: &str) -> Result<BigRational> {
    match s.strip_prefix('-') {
        Some(rest) => Ok(-parse_rational(rest)?),
        None => parse_rational(s.strip_prefix('+').unwrap_or(s)),
    }
}

/// Splits `a+b-c` into signed terms, ignoring whitespace. A sign directly
/// after `/`, `*` or `^` is not a term separator.
pub(crate) fn split_signed_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::parse(text, "empty expression"));
    }
    let mut out = Vec::new();
    let mut negative = false;
    let mut current = String::new();
    let mut prev: Option<char> = None;
    for c in compact.chars() {
        let separator = (c == '+' || c == '-') && !matches!(prev, Some('/' | '*' | '^'));
        if separator {
            if !current.is_empty() {
                out.push((negative, std::mem::take(&mut current)));
            } else if prev.is_some() {
                return Err(Error::parse(text, "dangling sign"));
            }
            negative = c == '-';
        } else {
            current.push(c);
        }
        prev = Some(c);
    }
    if current.is_empty() {
        return Err(Error::parse(text, "expression ends with a sign"));
    }
    out.push((negative, current));
    Ok(out)
}
