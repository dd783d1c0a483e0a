//! Good, very good and product gradings on `M_n(R)`.
//!
//! Indices are zero-based throughout the API: `e_{0,0}` is the top-left
//! matrix unit. Reports shift to one-based positions when rendering.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::coeff::RingSpec;
use crate::error::{Error, Result};
use crate::groups::{GroupElement, GroupSpec};

/// A very good grading, determined by its degree tuple `(g_1, ..., g_n)`
/// with `g_1 = e`. The matrix unit `e_{i,j}` has degree `g_i - g_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeryGoodGrading {
    group: GroupSpec,
    tuple: Vec<GroupElement>,
}

/// A good grading given by the degree of every matrix unit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodGrading {
    group: GroupSpec,
    n: usize,
    degrees: Vec<GroupElement>,
}

/// The `A x B` grading on `M_n(R)` where `R` is `A`-graded and the matrix
/// units carry a `B`-valued good grading: `r e_{i,j}` with `r` of degree `a`
/// has degree `(a, d(i,j))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductGrading {
    coeff_group: GroupSpec,
    position: GoodGrading,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum GradingDescriptor {
    VeryGood(VeryGoodGrading),
    Good(GoodGrading),
    Product(ProductGrading),
}

/// Degree classes `X_g = {i : g_i = g}` of the basis vectors and the support
/// `Supp(V) = {g : X_g nonempty}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeClasses {
    pub classes: BTreeMap<GroupElement, BTreeSet<usize>>,
    pub supp_v: BTreeSet<GroupElement>,
}

impl DegreeClasses {
    pub fn class(&self, g: &GroupElement) -> BTreeSet<usize> {
        self.classes.get(g).cloned().unwrap_or_default()
    }

    pub fn sizes(&self) -> BTreeMap<GroupElement, usize> {
        self.classes
            .iter()
            .map(|(g, c)| (g.clone(), c.len()))
            .collect()
    }

    /// Whether every nonempty class has the same cardinality.
    pub fn equal_sizes(&self) -> bool {
        let mut sizes = self.classes.values().map(BTreeSet::len);
        match sizes.next() {
            Some(first) => sizes.all(|s| s == first),
            None => true,
        }
    }
}

fn check_index(n: usize, i: usize, j: usize) -> Result<()> {
    if i < n && j < n {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { row: i, col: j, n })
    }
}

impl VeryGoodGrading {
    /// Builds the grading from a tuple whose first entry must be the identity.
    pub fn from_tuple(group: GroupSpec, tuple: Vec<GroupElement>) -> Result<Self> {
        if tuple.is_empty() {
            return Err(Error::InvalidGrading("degree tuple is empty".into()));
        }
        if let Some(bad) = tuple.iter().find(|g| !group.contains(g)) {
            return Err(Error::Domain(format!(
                "{bad:?} is not an element of {group}"
            )));
        }
        if tuple[0] != group.identity() {
            return Err(Error::InvalidGrading(format!(
                "g_1 = {} but a very good grading needs g_1 = e",
                group.format_element(&tuple[0])
            )));
        }
        Ok(VeryGoodGrading { group, tuple })
    }

    /// Builds the grading from any translate of its tuple by subtracting `g_1`
    /// from every entry. Translates define the same grading.
    pub fn from_translate(group: GroupSpec, tuple: Vec<GroupElement>) -> Result<Self> {
        let first = tuple
            .first()
            .cloned()
            .ok_or_else(|| Error::InvalidGrading("degree tuple is empty".into()))?;
        let tuple = tuple
            .iter()
            .map(|g| group.sub(g, &first))
            .collect::<Result<Vec<_>>>()?;
        Self::from_tuple(group, tuple)
    }

    /// Parses tuple entries with the group's element syntax.
    pub fn parse(group: GroupSpec, entries: &[&str]) -> Result<Self> {
        let tuple = entries
            .iter()
            .map(|t| group.parse_element(t))
            .collect::<Result<Vec<_>>>()?;
        Self::from_tuple(group, tuple)
    }

    /// The trivial grading: every entry of the tuple is `e`.
    pub fn trivial(group: GroupSpec, n: usize) -> Result<Self> {
        let e = group.identity();
        Self::from_tuple(group, vec![e; n])
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.tuple.len()
    }

    pub fn tuple(&self) -> &[GroupElement] {
        &self.tuple
    }

    pub fn unit_degree(&self, i: usize, j: usize) -> Result<GroupElement> {
        check_index(self.n(), i, j)?;
        self.group.sub(&self.tuple[i], &self.tuple[j])
    }

    pub(crate) fn degree(&self, i: usize, j: usize) -> GroupElement {
        self.unit_degree(i, j)
            .expect("indices and tuple entries are validated")
    }

    /// `degrees[i][j] = deg(e_{i,j})`.
    pub fn unit_degree_table(&self) -> Vec<Vec<GroupElement>> {
        (0..self.n())
            .map(|i| (0..self.n()).map(|j| self.degree(i, j)).collect())
            .collect()
    }

    /// Every degree carried by some matrix unit, i.e. `Supp(V) - Supp(V)`.
    pub fn unit_degree_support(&self) -> BTreeSet<GroupElement> {
        (0..self.n())
            .flat_map(|i| (0..self.n()).map(move |j| (i, j)))
            .map(|(i, j)| self.degree(i, j))
            .collect()
    }

    pub fn x_classes(&self) -> DegreeClasses {
        let mut classes: BTreeMap<GroupElement, BTreeSet<usize>> = BTreeMap::new();
        for (i, g) in self.tuple.iter().enumerate() {
            classes.entry(g.clone()).or_default().insert(i);
        }
        let supp_v = classes.keys().cloned().collect();
        DegreeClasses { classes, supp_v }
    }

    /// `RowDeg_i = {deg(e_{i,j}) : j}`.
    pub fn row_degrees(&self, i: usize) -> Result<BTreeSet<GroupElement>> {
        check_index(self.n(), i, 0)?;
        Ok((0..self.n()).map(|j| self.degree(i, j)).collect())
    }

    pub fn to_good(&self) -> GoodGrading {
        GoodGrading {
            group: self.group.clone(),
            n: self.n(),
            degrees: self.unit_degree_table().into_iter().flatten().collect(),
        }
    }
}

impl GoodGrading {
    /// Builds the grading with `deg(e_{i,i+1}) = f(i)`, extended by
    /// `d(i,j) = f(i) + ... + f(j-1)` for `i < j`, antisymmetry and `d(i,i) = e`.
    pub fn from_offdiagonal_map(group: GroupSpec, f: &[GroupElement]) -> Result<Self> {
        if let Some(bad) = f.iter().find(|g| !group.contains(g)) {
            return Err(Error::Domain(format!(
                "{bad:?} is not an element of {group}"
            )));
        }
        let n = f.len() + 1;
        // prefix[i] = f(0) + ... + f(i-1), so d(i,j) = prefix[j] - prefix[i].
        let mut prefix = vec![group.identity()];
        for g in f {
            let next = group.op(prefix.last().expect("nonempty"), g)?;
            prefix.push(next);
        }
        let mut degrees = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                degrees.push(group.sub(&prefix[j], &prefix[i])?);
            }
        }
        Ok(GoodGrading { group, n, degrees })
    }

    /// Builds the grading from an explicit `n x n` degree table, checking the
    /// cocycle conditions.
    pub fn from_unit_degrees(group: GroupSpec, table: Vec<Vec<GroupElement>>) -> Result<Self> {
        let g = Self::from_unit_degrees_unchecked(group, table)?;
        g.validate()?;
        Ok(g)
    }

    /// Like [`GoodGrading::from_unit_degrees`] but only checks the table's
    /// shape. Used to build deliberately broken gradings for negative tests.
    pub fn from_unit_degrees_unchecked(
        group: GroupSpec,
        table: Vec<Vec<GroupElement>>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGrading(
                "degree table must be square and nonempty".into(),
            ));
        }
        let degrees: Vec<GroupElement> = table.into_iter().flatten().collect();
        if let Some(bad) = degrees.iter().find(|g| !group.contains(g)) {
            return Err(Error::Domain(format!(
                "{bad:?} is not an element of {group}"
            )));
        }
        Ok(GoodGrading { group, n, degrees })
    }

    /// Checks `d(i,i) = e`, `d(i,j) = -d(j,i)` and `d(i,j) + d(j,k) = d(i,k)`.
    pub fn validate(&self) -> Result<()> {
        let e = self.group.identity();
        let n = self.n;
        for i in 0..n {
            if self.degree(i, i) != e {
                return Err(Error::InvalidGrading(format!(
                    "deg(e_{{{0},{0}}}) != e",
                    i + 1
                )));
            }
            for j in 0..n {
                if self.degree(i, j) != self.group.neg(&self.degree(j, i))? {
                    return Err(Error::InvalidGrading(format!(
                        "deg(e_{{{},{}}}) != -deg(e_{{{},{}}})",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
                for k in 0..n {
                    if self.group.op(&self.degree(i, j), &self.degree(j, k))? != self.degree(i, k) {
                        return Err(Error::InvalidGrading(format!(
                            "cocycle fails on ({}, {}, {})",
                            i + 1,
                            j + 1,
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn group(&self) -> &GroupSpec {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn degree(&self, i: usize, j: usize) -> GroupElement {
        self.degrees[i * self.n + j].clone()
    }

    pub fn unit_degree(&self, i: usize, j: usize) -> Result<GroupElement> {
        check_index(self.n, i, j)?;
        Ok(self.degree(i, j))
    }

    pub fn unit_degree_table(&self) -> Vec<Vec<GroupElement>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.degree(i, j)).collect())
            .collect()
    }

    /// The degree tuple `g_i = d(i, 1)` of the equivalent very good grading
    /// on an ungraded coefficient ring.
    pub fn to_very_good(&self) -> Result<VeryGoodGrading> {
        self.validate()?;
        let tuple = (0..self.n).map(|i| self.degree(i, 0)).collect();
        VeryGoodGrading::from_tuple(self.group.clone(), tuple)
    }
}

impl ProductGrading {
    pub fn new(coeff_group: GroupSpec, position: GoodGrading) -> Self {
        ProductGrading {
            coeff_group,
            position,
        }
    }

    pub fn coeff_group(&self) -> &GroupSpec {
        &self.coeff_group
    }

    pub fn position(&self) -> &GoodGrading {
        &self.position
    }

    pub fn n(&self) -> usize {
        self.position.n
    }

    /// `A x B`.
    pub fn total_group(&self) -> GroupSpec {
        self.coeff_group.product(&self.position.group)
    }

    /// Degree of `r e_{i,j}` for `r` homogeneous of coefficient degree `a`.
    pub fn degree_of(&self, a: &GroupElement, i: usize, j: usize) -> Result<GroupElement> {
        let b = self.position.unit_degree(i, j)?;
        self.coeff_group.pair(&self.position.group, a, &b)
    }

    /// The coefficient group must be the ring's grading group, or trivial for
    /// an ungraded ring.
    pub fn check_ring(&self, ring: &RingSpec) -> Result<()> {
        let ok = match ring.coeff_grading_group() {
            Some(a) => *a == self.coeff_group,
            None => self.coeff_group.is_trivial(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "coefficient grading group {} does not match ring {}",
                self.coeff_group, ring
            )))
        }
    }
}

impl GradingDescriptor {
    pub fn n(&self) -> usize {
        match self {
            GradingDescriptor::VeryGood(g) => g.n(),
            GradingDescriptor::Good(g) => g.n(),
            GradingDescriptor::Product(g) => g.n(),
        }
    }

    /// The group the whole ring is graded by.
    pub fn group(&self) -> GroupSpec {
        match self {
            GradingDescriptor::VeryGood(g) => g.group().clone(),
            GradingDescriptor::Good(g) => g.group().clone(),
            GradingDescriptor::Product(g) => g.total_group(),
        }
    }

    /// Degree of the matrix unit `e_{i,j}` (coefficient `1`).
    pub fn unit_degree(&self, i: usize, j: usize) -> Result<GroupElement> {
        match self {
            GradingDescriptor::VeryGood(g) => g.unit_degree(i, j),
            GradingDescriptor::Good(g) => g.unit_degree(i, j),
            GradingDescriptor::Product(g) => g.degree_of(&g.coeff_group.identity(), i, j),
        }
    }

    /// Checks that the descriptor can grade `M_n(ring)`.
    pub fn check_ring(&self, ring: &RingSpec) -> Result<()> {
        match self {
            GradingDescriptor::Product(p) => p.check_ring(ring),
            _ => Ok(()),
        }
    }

    /// Whether `R e_{i,i} ⊆ S_e` for every `i`, which for a good grading is
    /// equivalent to being very good. Tested on the homogeneous generators
    /// of the coefficient ring.
    pub fn is_very_good(&self, ring: &RingSpec) -> Result<bool> {
        match self {
            GradingDescriptor::VeryGood(_) => Ok(true),
            GradingDescriptor::Good(g) => g.validate().map(|_| true),
            GradingDescriptor::Product(p) => {
                p.check_ring(ring)?;
                let e = p.total_group().identity();
                for (a, _) in ring.homogeneous_generators(1)? {
                    let a = if p.coeff_group.is_trivial() {
                        p.coeff_group.identity()
                    } else {
                        a
                    };
                    for i in 0..p.n() {
                        if p.degree_of(&a, i, i)? != e {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
        }
    }

    /// The equivalent very good tuple, when the descriptor is very good.
    pub fn as_very_good(&self, ring: &RingSpec) -> Result<Option<VeryGoodGrading>> {
        Ok(match self {
            GradingDescriptor::VeryGood(g) => Some(g.clone()),
            GradingDescriptor::Good(g) => Some(g.to_very_good()?),
            GradingDescriptor::Product(p) if self.is_very_good(ring)? => {
                // Trivial coefficient degrees: the grading is the position grading.
                Some(p.position.to_very_good()?)
            }
            GradingDescriptor::Product(_) => None,
        })
    }
}
