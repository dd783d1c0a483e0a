//! The Leavitt algebra `L(1,2)` over `Q` or `F_p`.
//!
//! Elements are finite sums of scalar multiples of words in `x1, x2, y1, y2`.
//! The defining relations are oriented as rewriting rules
//!
//! ```text
//! y1 x1 -> 1      y2 x2 -> 1
//! y1 x2 -> 0      y2 x1 -> 0
//! x2 y2 -> 1 - x1 y1
//! ```
//!
//! and every stored element is fully reduced, so equality of elements is
//! equality of normal forms. Reduction always rewrites the leftmost redex
//! of a word first.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational};
use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X1,
    X2,
    Y1,
    Y2,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::X1, Letter::X2, Letter::Y1, Letter::Y2];

    pub fn name(self) -> &'static str {
        match self {
            Letter::X1 => "x1",
            Letter::X2 => "x2",
            Letter::Y1 => "y1",
            Letter::Y2 => "y2",
        }
    }

    fn from_name(s: &str) -> Option<Letter> {
        Letter::ALL.into_iter().find(|l| l.name() == s)
    }
}

pub type Word = Vec<Letter>;

/// Right-hand side of a rewriting rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rhs {
    One,
    Zero,
    /// `1 - x1 y1`
    OneMinusX1Y1,
}

pub const RULES: [(Letter, Letter, Rhs); 5] = [
    (Letter::Y1, Letter::X1, Rhs::One),
    (Letter::Y2, Letter::X2, Rhs::One),
    (Letter::Y1, Letter::X2, Rhs::Zero),
    (Letter::Y2, Letter::X1, Rhs::Zero),
    (Letter::X2, Letter::Y2, Rhs::OneMinusX1Y1),
];

pub fn rule_for(a: Letter, b: Letter) -> Option<Rhs> {
    RULES
        .iter()
        .find(|(l, r, _)| *l == a && *r == b)
        .map(|(_, _, rhs)| *rhs)
}

/// Rewrites the redex starting at `pos`, returning the signed words it becomes.
pub fn rewrite_at(word: &[Letter], pos: usize, rhs: Rhs) -> Vec<(Word, bool)> {
    let splice = |middle: &[Letter]| -> Word {
        word[..pos]
            .iter()
            .chain(middle)
            .chain(&word[pos + 2..])
            .copied()
            .collect()
    };
    match rhs {
        Rhs::One => vec![(splice(&[]), true)],
        Rhs::Zero => Vec::new(),
        Rhs::OneMinusX1Y1 => vec![
            (splice(&[]), true),
            (splice(&[Letter::X1, Letter::Y1]), false),
        ],
    }
}

pub fn leftmost_redex(word: &[Letter]) -> Option<(usize, Rhs)> {
    word.windows(2)
        .enumerate()
        .find_map(|(i, w)| rule_for(w[0], w[1]).map(|rhs| (i, rhs)))
}

pub fn is_reduced(word: &[Letter]) -> bool {
    leftmost_redex(word).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseField {
    Rationals,
    PrimeField(u64),
}

impl BaseField {
    /// Canonical representative of a scalar: itself over `Q`, a residue in
    /// `[0, p)` over `F_p`.
    pub fn normalize(&self, c: &BigRational) -> BigRational {
        match self {
            BaseField::Rationals => c.clone(),
            BaseField::PrimeField(p) => {
                let p = BigInt::from(*p);
                let den_inv = mod_inverse(&c.denom().mod_floor(&p), &p);
                BigRational::from_integer((c.numer() * den_inv).mod_floor(&p))
            }
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> BigInt {
    let e = a.extended_gcd(p);
    e.x.mod_floor(p)
}

/// A reduced element of `L(1,2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LeavittElement {
    terms: BTreeMap<Word, BigRational>,
}

impl LeavittElement {
    pub fn zero() -> Self {
        LeavittElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::word(Vec::new())
    }

    /// A single word, reduced.
    pub fn word(word: Word) -> Self {
        Self::normal_form([(word, BigRational::one())], BaseField::Rationals)
    }

    pub fn letter(l: Letter) -> Self {
        Self::word(vec![l])
    }

    /// Reduces a formal sum of scalar-word pairs to normal form.
    pub fn normal_form<I>(expr: I, base: BaseField) -> Self
    where
        I: IntoIterator<Item = (Word, BigRational)>,
    {
        let mut pending: Vec<(Word, BigRational)> = expr.into_iter().collect();
        let mut out = LeavittElement::zero();
        while let Some((word, c)) = pending.pop() {
            if c.is_zero() {
                continue;
            }
            match leftmost_redex(&word) {
                None => out.add_term(word, c, base),
                Some((pos, rhs)) => {
                    for (w, positive) in rewrite_at(&word, pos, rhs) {
                        let c = if positive { c.clone() } else { -c.clone() };
                        pending.push((w, c));
                    }
                }
            }
        }
        out
    }

    fn add_term(&mut self, word: Word, c: BigRational, base: BaseField) {
        let slot = self
            .terms
            .entry(word.clone())
            .or_insert_with(BigRational::zero);
        *slot = base.normalize(&(&*slot + c));
        if slot.is_zero() {
            self.terms.remove(&word);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self, base: BaseField) -> Self {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c.clone(), base);
        }
        out
    }

    pub fn neg(&self, base: BaseField) -> Self {
        let mut out = LeavittElement::zero();
        for (w, c) in self.terms() {
            out.add_term(w.clone(), -c, base);
        }
        out
    }

    pub fn scale(&self, s: &BigRational, base: BaseField) -> Self {
        let mut out = LeavittElement::zero();
        for (w, c) in self.terms() {
            out.add_term(w.clone(), c * s, base);
        }
        out
    }

    pub fn mul(&self, other: &Self, base: BaseField) -> Self {
        let products = self.terms().flat_map(|(u, a)| {
            other.terms().map(move |(v, b)| {
                let mut w = u.clone();
                w.extend_from_slice(v);
                (w, a * b)
            })
        });
        Self::normal_form(products, base)
    }

    /// Parses sums such as `1-x1*y1`, `2*y2*x1`, `1/2*x2`. The input need not
    /// be reduced.
    pub fn parse(text: &str, base: BaseField) -> Result<Self> {
        let terms = super::split_signed_terms(text)?
            .into_iter()
            .map(|(negative, term)| {
                let (c, w) = parse_leavitt_term(&term)?;
                Ok((w, if negative { -c } else { c }))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::normal_form(terms, base))
    }
}

fn parse_leavitt_term(term: &str) -> Result<(BigRational, Word)> {
    let mut coeff = BigRational::one();
    let mut word = Word::new();
    for factor in term.split('*') {
        let factor = factor.trim();
        if let Some(l) = Letter::from_name(factor) {
            word.push(l);
        } else {
            coeff *= parse_rational(factor)?;
        }
    }
    Ok((coeff, word))
}

pub fn format_word(w: &[Letter]) -> String {
    w.iter().map(|l| l.name()).collect::<Vec<_>>().join("*")
}

/// Renders a formal (possibly unreduced) sum of scalar-word pairs.
pub fn format_terms<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Word, &'a BigRational)>,
{
    let mut s = String::new();
    for (k, (w, c)) in terms.into_iter().enumerate() {
        let negative = c.is_negative();
        if k > 0 {
            s.push(if negative { '-' } else { '+' });
        } else if negative {
            s.push('-');
        }
        let mag = c.abs();
        match (w.is_empty(), mag.is_one()) {
            (true, _) => s.push_str(&format_rational(&mag)),
            (false, true) => s.push_str(&format_word(w)),
            (false, false) => {
                s.push_str(&format_rational(&mag));
                s.push('*');
                s.push_str(&format_word(w));
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Renders `Σ a_k b_k` with every product expanded into concatenated words
/// but not reduced, e.g. `x1*y1+x2*y2`.
pub fn format_formal_products(pairs: &[(&LeavittElement, &LeavittElement)]) -> String {
    let terms: Vec<(Word, BigRational)> = pairs
        .iter()
        .flat_map(|(a, b)| {
            a.terms().flat_map(move |(u, c)| {
                b.terms().map(move |(v, d)| {
                    let mut w = u.clone();
                    w.extend_from_slice(v);
                    (w, c * d)
                })
            })
        })
        .collect();
    format_terms(terms.iter().map(|(w, c)| (w, c)))
}

impl fmt::Display for LeavittElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_terms(self.terms()))
    }
}
