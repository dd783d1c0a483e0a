//! Finitely generated abelian groups `Z^r x Z/m_1 x ... x Z/m_k`, written additively.
//!
//! Elements store their free coordinates first and their torsion residues
//! second, whatever order the factors were written in. Torsion residues are
//! always kept reduced, so derived equality and ordering are the group's
//! equality and a fixed total order usable for map keys.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupSpec {
    free_rank: usize,
    torsion: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    free: Vec<i64>,
    torsion: Vec<u64>,
}

impl GroupElement {
    pub fn free_part(&self) -> &[i64] {
        &self.free
    }

    pub fn torsion_part(&self) -> &[u64] {
        &self.torsion
    }
}

impl GroupSpec {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if let Some(m) = torsion.iter().find(|&&m| m < 2) {
            return Err(Error::Domain(format!(
                "cyclic factor Z/{m} needs modulus >= 2"
            )));
        }
        Ok(GroupSpec { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        GroupSpec {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    /// The infinite cyclic group.
    pub fn integers() -> Self {
        GroupSpec {
            free_rank: 1,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(m: u64) -> Result<Self> {
        Self::new(0, vec![m])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of coordinates of an element.
    pub fn arity(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Group order, `None` for infinite groups.
    pub fn order(&self) -> Option<u64> {
        if self.is_finite() {
            Some(self.torsion.iter().product())
        } else {
            None
        }
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            free: vec![0; self.free_rank],
            torsion: vec![0; self.torsion.len()],
        }
    }

    /// Builds an element, reducing torsion coordinates modulo their factor.
    pub fn element(&self, free: Vec<i64>, torsion: Vec<i64>) -> Result<GroupElement> {
        if free.len() != self.free_rank || torsion.len() != self.torsion.len() {
            return Err(Error::Domain(format!(
                "element shape ({} free, {} torsion) does not match group {}",
                free.len(),
                torsion.len(),
                self
            )));
        }
        let torsion = torsion
            .iter()
            .zip(&self.torsion)
            .map(|(&t, &m)| t.rem_euclid(m as i64) as u64)
            .collect();
        Ok(GroupElement { free, torsion })
    }

    /// Builds an element from coordinates listed free-first.
    pub fn element_from_coords(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.arity() {
            return Err(Error::Domain(format!(
                "expected {} coordinates for group {}, got {}",
                self.arity(),
                self,
                coords.len()
            )));
        }
        let (free, torsion) = coords.split_at(self.free_rank);
        self.element(free.to_vec(), torsion.to_vec())
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        a.free.len() == self.free_rank
            && a.torsion.len() == self.torsion.len()
            && a.torsion.iter().zip(&self.torsion).all(|(t, m)| t < m)
    }

    fn check(&self, a: &GroupElement) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::Domain(format!("{a:?} is not an element of {self}")))
        }
    }

    pub fn op(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        let free = a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&b.torsion)
            .zip(&self.torsion)
            .map(|((x, y), m)| (x + y) % m)
            .collect();
        Ok(GroupElement { free, torsion })
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        let free = a.free.iter().map(|x| -x).collect();
        let torsion = a
            .torsion
            .iter()
            .zip(&self.torsion)
            .map(|(x, m)| (m - x) % m)
            .collect();
        Ok(GroupElement { free, torsion })
    }

    /// `a - b`.
    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.op(a, &self.neg(b)?)
    }

    /// All elements of a finite group in lexicographic order.
    pub fn enumerate(&self) -> Result<Vec<GroupElement>> {
        if !self.is_finite() {
            return Err(Error::Unsupported(format!(
                "cannot enumerate the infinite group {self}"
            )));
        }
        let mut out = vec![Vec::new()];
        for &m in &self.torsion {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u64>| {
                    (0..m).map(move |r| {
                        let mut next = prefix.clone();
                        next.push(r);
                        next
                    })
                })
                .collect();
        }
        Ok(out
            .into_iter()
            .map(|torsion| GroupElement {
                free: Vec::new(),
                torsion,
            })
            .collect())
    }

    /// The direct product `self x other`. Coordinates of the product are
    /// `self.free, other.free, self.torsion, other.torsion`.
    pub fn product(&self, other: &GroupSpec) -> GroupSpec {
        GroupSpec {
            free_rank: self.free_rank + other.free_rank,
            torsion: self.torsion.iter().chain(&other.torsion).copied().collect(),
        }
    }

    /// Embeds the pair `(a, b)` into `self.product(other)`.
    pub fn pair(
        &self,
        other: &GroupSpec,
        a: &GroupElement,
        b: &GroupElement,
    ) -> Result<GroupElement> {
        self.check(a)?;
        other.check(b)?;
        Ok(GroupElement {
            free: a.free.iter().chain(&b.free).copied().collect(),
            torsion: a.torsion.iter().chain(&b.torsion).copied().collect(),
        })
    }

    /// Inverse of [`GroupSpec::pair`].
    pub fn split(
        &self,
        other: &GroupSpec,
        ab: &GroupElement,
    ) -> Result<(GroupElement, GroupElement)> {
        self.product(other).check(ab)?;
        let (af, bf) = ab.free.split_at(self.free_rank);
        let (at, bt) = ab.torsion.split_at(self.torsion.len());
        Ok((
            GroupElement {
                free: af.to_vec(),
                torsion: at.to_vec(),
            },
            GroupElement {
                free: bf.to_vec(),
                torsion: bt.to_vec(),
            },
        ))
    }

    /// Parses element syntax: a bare integer for one-coordinate groups,
    /// a parenthesised tuple `(1,0)` otherwise, `0` or `()` for the trivial group.
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let text = text.trim();
        let inner = match text.strip_prefix('(') {
            Some(rest) => rest
                .strip_suffix(')')
                .ok_or_else(|| Error::parse(text, "unbalanced parenthesis"))?,
            None => text,
        };
        let coords: Vec<i64> = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| {
                    let t = t.trim();
                    t.parse::<i64>()
                        .map_err(|_| Error::parse(t, "expected an integer coordinate"))
                })
                .collect::<Result<_>>()?
        };
        if self.is_trivial() && coords == [0] {
            return Ok(self.identity());
        }
        self.element_from_coords(&coords)
    }

    pub fn format_element(&self, a: &GroupElement) -> String {
        let coords: Vec<String> = a
            .free
            .iter()
            .map(|x| x.to_string())
            .chain(a.torsion.iter().map(|x| x.to_string()))
            .collect();
        match coords.len() {
            0 => "0".to_string(),
            1 => coords[0].clone(),
            _ => format!("({})", coords.join(",")),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let factors: Vec<String> = std::iter::repeat_n("Z".to_string(), self.free_rank)
            .chain(self.torsion.iter().map(|m| format!("Z/{m}")))
            .collect();
        write!(f, "{}", factors.join(" x "))
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Grammar: factors `Z` or `Z/m` joined by `x`. `Zm` is accepted as
    /// shorthand for `Z/m`, and `0` or `1` denote the trivial group.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "0" || text == "1" {
            return Ok(GroupSpec::trivial());
        }
        let mut free_rank = 0;
        let mut torsion = Vec::new();
        for token in text.split('x') {
            let token = token.trim();
            let rest = token
                .strip_prefix('Z')
                .ok_or_else(|| Error::parse(token, "expected a factor `Z` or `Z/m`"))?;
            if rest.is_empty() {
                free_rank += 1;
                continue;
            }
            let modulus = rest.strip_prefix('/').unwrap_or(rest).trim();
            let m: u64 = modulus
                .parse()
                .map_err(|_| Error::parse(token, "expected a modulus after `Z/`"))?;
            if m < 2 {
                return Err(Error::Domain(format!(
                    "cyclic factor {token} needs modulus >= 2"
                )));
            }
            torsion.push(m);
        }
        Ok(GroupSpec { free_rank, torsion })
    }
}
