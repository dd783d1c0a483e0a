//! Decision procedures for strength properties of gradings on `M_n(R)`.
//!
//! Every yes/no answer carries a [`Certificate`] that [`Verdict::verify`]
//! re-checks from scratch against the grading. Decision functions run that
//! check before returning, so a certificate that fails is reported as
//! [`Error::CertificateFailed`] rather than handed to the caller.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::coeff::RingSpec;
use crate::error::{Error, Result};
use crate::grading::{GradingDescriptor, VeryGoodGrading};
use crate::groups::GroupElement;
use crate::matrixring::{
    construct_witnesses, decompose, epsilon, homogeneous_basis, lies_in_degree, Matrix, WitnessPair,
};

/// Truncation of the `Q[x]` coefficient support used by the brute-force
/// checks inside certificates.
pub const DEFAULT_DEGREE_BOUND: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Property {
    LocallyStrong(GroupElement),
    Strong,
    EpsilonStrong,
    EpsilonCrossed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

impl Answer {
    /// Process exit code: 0 yes, 1 no, 2 unknown.
    pub fn exit_code(self) -> i32 {
        match self {
            Answer::Yes => 0,
            Answer::No => 1,
            Answer::Unknown => 2,
        }
    }
}

/// Class sizes and the rank identity `n^2 = |Supp(V)| · Rank(S_e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankCertificate {
    pub class_sizes: BTreeMap<GroupElement, usize>,
    /// `Σ |X_g|^2`
    pub rank_se: usize,
    pub supp_size: usize,
    /// `n^2`
    pub lhs: usize,
    /// `supp_size · rank_se`
    pub rhs: usize,
}

impl RankCertificate {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// For each row `i`, a column `j` with `deg(e_{i,j}) = g`.
    RowWitnesses {
        g: GroupElement,
        columns: Vec<usize>,
    },
    /// A row in which no matrix unit has degree `g`.
    MissingRowDegree {
        g: GroupElement,
        row: usize,
    },
    /// For each `g` of a finite group, an index `i` with `g_i = g`.
    Coverage(BTreeMap<GroupElement, usize>),
    /// A group element that no tuple entry equals.
    UncoveredDegree(GroupElement),
    /// A finite tuple cannot exhaust an infinite group.
    InfiniteGroup,
    /// `ε_g` for every degree carried by a matrix unit; all other `ε_g` are zero.
    EpsilonTable(BTreeMap<GroupElement, Matrix>),
    /// A nonzero homogeneous element of degree `g` while the component of
    /// degree `-g` is zero, so no `ε_g ∈ S_g S_{-g}` can fix it.
    VanishingComponent {
        g: GroupElement,
        element: Matrix,
    },
    WitnessSet(BTreeMap<GroupElement, WitnessPair>),
    Rank(RankCertificate),
    ClassSizeTable(BTreeMap<GroupElement, usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub property: Property,
    pub answer: Answer,
    pub certificate: Option<Certificate>,
}

fn fail(msg: impl Into<String>) -> Error {
    Error::CertificateFailed(msg.into())
}

impl Verdict {
    /// Re-checks the certificate against `grading`, returning whether it
    /// supports the stated answer.
    pub fn verify(&self, grading: &GradingDescriptor, ring: &RingSpec) -> Result<bool> {
        let very_good = grading.as_very_good(ring)?;
        let n = grading.n();
        let group = grading.group();
        use Answer::*;
        use Certificate as C;
        Ok(match (&self.property, self.answer, &self.certificate) {
            (Property::LocallyStrong(g), Yes, Some(C::RowWitnesses { g: cg, columns })) => {
                cg == g
                    && columns.len() == n
                    && columns
                        .iter()
                        .enumerate()
                        .all(|(i, &j)| j < n && grading.unit_degree(i, j).ok().as_ref() == Some(g))
            }
            (Property::LocallyStrong(g), No, Some(C::MissingRowDegree { g: cg, row })) => {
                cg == g
                    && *row < n
                    && (0..n).all(|j| grading.unit_degree(*row, j).ok().as_ref() != Some(g))
            }
            (Property::Strong, Yes, Some(C::Coverage(cover))) => match &very_good {
                Some(vg) => {
                    let all: BTreeSet<GroupElement> = group.enumerate()?.into_iter().collect();
                    cover.keys().cloned().collect::<BTreeSet<_>>() == all
                        && cover.iter().all(|(g, &i)| vg.tuple().get(i) == Some(g))
                }
                None => false,
            },
            (Property::Strong, No, Some(C::UncoveredDegree(g))) => match &very_good {
                Some(vg) => group.contains(g) && !vg.tuple().contains(g),
                None => false,
            },
            (Property::Strong, No, Some(C::InfiniteGroup)) => !group.is_finite(),
            (Property::EpsilonStrong, Yes, Some(C::EpsilonTable(table))) => match &very_good {
                Some(vg) => verify_epsilon_table(vg, ring, table)?,
                None => false,
            },
            (
                Property::EpsilonStrong | Property::EpsilonCrossed,
                No,
                Some(C::VanishingComponent { g, element }),
            ) => verify_vanishing(grading, ring, g, element)?,
            (Property::EpsilonStrong, Unknown, None) => {
                very_good.is_none() && find_vanishing_component(grading, ring)?.is_none()
            }
            (Property::EpsilonCrossed, Yes, Some(C::WitnessSet(pairs))) => match &very_good {
                Some(vg) => {
                    pairs.keys().cloned().collect::<BTreeSet<_>>() == vg.unit_degree_support()
                        && pairs
                            .iter()
                            .map(|(g, w)| Ok(&w.g == g && w.verify(vg)?))
                            .collect::<Result<Vec<bool>>>()?
                            .into_iter()
                            .all(|ok| ok)
                }
                None => false,
            },
            (Property::EpsilonCrossed, No, Some(C::Rank(cert))) => match &very_good {
                Some(vg) => ring.has_ibn() && *cert == rank_invariants(vg) && !cert.holds(),
                None => false,
            },
            (Property::EpsilonCrossed, Unknown, Some(C::ClassSizeTable(sizes))) => match &very_good
            {
                Some(vg) => {
                    let classes = vg.x_classes();
                    !ring.has_ibn() && *sizes == classes.sizes() && !classes.equal_sizes()
                }
                None => false,
            },
            (Property::EpsilonCrossed, Unknown, None) => {
                very_good.is_none() && find_vanishing_component(grading, ring)?.is_none()
            }
            _ => false,
        })
    }

    fn checked(self, grading: &GradingDescriptor, ring: &RingSpec) -> Result<Self> {
        if self.verify(grading, ring)? {
            Ok(self)
        } else {
            Err(fail(format!(
                "{:?} answer {:?} did not re-verify",
                self.property, self.answer
            )))
        }
    }
}

/// Checks each `ε_g`: it is a 0/1 diagonal idempotent lying in `S_g S_{-g}`,
/// fixes every basis element of `S_g` from the left and of `S_{-g}` from the
/// right, and the table covers exactly the degrees carried by matrix units.
fn verify_epsilon_table(
    grading: &VeryGoodGrading,
    ring: &RingSpec,
    table: &BTreeMap<GroupElement, Matrix>,
) -> Result<bool> {
    let support = grading.unit_degree_support();
    if table.keys().cloned().collect::<BTreeSet<_>>() != support {
        return Ok(false);
    }
    let group = grading.group();
    let descriptor = GradingDescriptor::VeryGood(grading.clone());
    let basis = homogeneous_basis(&descriptor, ring, 0)?;
    for (g, eps) in table {
        if eps.n() != grading.n() || eps.ring() != ring || eps.mul(eps)? != *eps {
            return Ok(false);
        }
        let Some(diagonal) = eps.diagonal_support() else {
            return Ok(false);
        };
        // e_{i,i} = e_{i,j} e_{j,i} with deg(e_{i,j}) = g puts ε_g in S_g S_{-g}.
        let in_product = diagonal
            .iter()
            .all(|&i| (0..grading.n()).any(|j| grading.unit_degree(i, j).ok().as_ref() == Some(g)));
        if !in_product {
            return Ok(false);
        }
        let neg = group.neg(g)?;
        let eps_neg = &table[&neg];
        for (h, s) in &basis {
            if h == g && eps.mul(s)? != *s {
                return Ok(false);
            }
            if *h == neg && s.mul(eps)? != *s {
                return Ok(false);
            }
            if h == g && s.mul(eps_neg)? != *s {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn verify_vanishing(
    grading: &GradingDescriptor,
    ring: &RingSpec,
    g: &GroupElement,
    element: &Matrix,
) -> Result<bool> {
    let GradingDescriptor::Product(p) = grading else {
        return Ok(false);
    };
    if element.is_zero() || !lies_in_degree(element, grading, g)? {
        return Ok(false);
    }
    let group = grading.group();
    let neg = group.neg(g)?;
    // S_{-g} = R_a e_{i,j} summed over positions with position degree b.
    let (a, b) = p.coeff_group().split(p.position().group(), &neg)?;
    let position_hit = (0..p.n())
        .flat_map(|i| (0..p.n()).map(move |j| (i, j)))
        .any(|(i, j)| p.position().unit_degree(i, j).ok().as_ref() == Some(&b));
    if position_hit && ring.coeff_degree_occurs(&a)? {
        return Ok(false);
    }
    let basis = homogeneous_basis(grading, ring, DEFAULT_DEGREE_BOUND)?;
    Ok(basis.iter().all(|(h, _)| *h != neg))
}

/// Searches the product grading for a degree `g = (a, e)` with `R_a ≠ 0`
/// and `R_{-a} = 0`; `r e_{1,1}` with `r ∈ R_a` then witnesses failure of
/// epsilon-strength.
fn find_vanishing_component(
    grading: &GradingDescriptor,
    ring: &RingSpec,
) -> Result<Option<(GroupElement, Matrix)>> {
    let GradingDescriptor::Product(p) = grading else {
        return Ok(None);
    };
    if p.coeff_group().is_trivial() {
        return Ok(None);
    }
    let a_group = p.coeff_group();
    for (a, r) in ring.homogeneous_generators(DEFAULT_DEGREE_BOUND)? {
        if ring.coeff_degree_occurs(&a_group.neg(&a)?)? {
            continue;
        }
        let g = p.degree_of(&a, 0, 0)?;
        let element = Matrix::unit(ring, p.n(), 0, 0, r)?;
        return Ok(Some((g, element)));
    }
    Ok(None)
}

/// `g` is locally strong (`S_g S_{-g} = S_e`) exactly when every row
/// contains a matrix unit of degree `g`, equivalently when `ε_g = I`.
pub fn is_locally_strong(grading: &VeryGoodGrading, g: &GroupElement) -> Result<Verdict> {
    let n = grading.n();
    let mut columns = Vec::with_capacity(n);
    let mut missing = None;
    for i in 0..n {
        match (0..n).find(|&j| grading.unit_degree(i, j).ok().as_ref() == Some(g)) {
            Some(j) => columns.push(j),
            None => {
                missing = Some(i);
                break;
            }
        }
    }
    let ring = RingSpec::rationals();
    let eps_is_identity = epsilon(grading, g, &ring)?.epsilon == Matrix::identity(&ring, n);
    if eps_is_identity != missing.is_none() {
        return Err(fail("row-degree criterion and ε_g = I disagree"));
    }
    let verdict = match missing {
        None => Verdict {
            property: Property::LocallyStrong(g.clone()),
            answer: Answer::Yes,
            certificate: Some(Certificate::RowWitnesses {
                g: g.clone(),
                columns,
            }),
        },
        Some(row) => Verdict {
            property: Property::LocallyStrong(g.clone()),
            answer: Answer::No,
            certificate: Some(Certificate::MissingRowDegree { g: g.clone(), row }),
        },
    };
    verdict.checked(&GradingDescriptor::VeryGood(grading.clone()), &ring)
}

/// Strong exactly when the tuple entries exhaust the group.
pub fn is_strong(grading: &VeryGoodGrading) -> Result<Verdict> {
    let group = grading.group();
    let ring = RingSpec::rationals();
    let verdict = if !group.is_finite() {
        Verdict {
            property: Property::Strong,
            answer: Answer::No,
            certificate: Some(Certificate::InfiniteGroup),
        }
    } else {
        let mut cover = BTreeMap::new();
        let mut uncovered = None;
        for g in group.enumerate()? {
            match grading.tuple().iter().position(|t| *t == g) {
                Some(i) => {
                    cover.insert(g, i);
                }
                None => {
                    uncovered = Some(g);
                    break;
                }
            }
        }
        match uncovered {
            None => Verdict {
                property: Property::Strong,
                answer: Answer::Yes,
                certificate: Some(Certificate::Coverage(cover)),
            },
            Some(g) => Verdict {
                property: Property::Strong,
                answer: Answer::No,
                certificate: Some(Certificate::UncoveredDegree(g)),
            },
        }
    };

    // Cross-check: strong iff every degree is locally strong.
    let mut degrees = grading.unit_degree_support();
    if group.is_finite() {
        degrees.extend(group.enumerate()?);
    }
    let all_local = degrees
        .iter()
        .map(|g| Ok(is_locally_strong(grading, g)?.answer == Answer::Yes))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    let strong = verdict.answer == Answer::Yes;
    if strong && !all_local || group.is_finite() && strong != all_local {
        return Err(fail("strongness disagrees with local strongness"));
    }
    verdict.checked(&GradingDescriptor::VeryGood(grading.clone()), &ring)
}

fn epsilon_table(
    grading: &VeryGoodGrading,
    ring: &RingSpec,
) -> Result<BTreeMap<GroupElement, Matrix>> {
    grading
        .unit_degree_support()
        .into_iter()
        .map(|g| {
            let eps = epsilon(grading, &g, ring)?.epsilon;
            Ok((g, eps))
        })
        .collect()
}

/// Very good gradings are epsilon-strong, with the `ε_g` table as
/// certificate. Product gradings are refuted by a vanishing component when
/// one exists; otherwise the answer is unknown.
pub fn is_epsilon_strong(grading: &GradingDescriptor, ring: &RingSpec) -> Result<Verdict> {
    grading.check_ring(ring)?;
    let verdict = if let Some(vg) = grading.as_very_good(ring)? {
        Verdict {
            property: Property::EpsilonStrong,
            answer: Answer::Yes,
            certificate: Some(Certificate::EpsilonTable(epsilon_table(&vg, ring)?)),
        }
    } else if let Some((g, element)) = find_vanishing_component(grading, ring)? {
        Verdict {
            property: Property::EpsilonStrong,
            answer: Answer::No,
            certificate: Some(Certificate::VanishingComponent { g, element }),
        }
    } else {
        Verdict {
            property: Property::EpsilonStrong,
            answer: Answer::Unknown,
            certificate: None,
        }
    };
    verdict.checked(grading, ring)
}

/// Class sizes `|X_g|`, `Rank(S_e) = Σ |X_g|^2` and the two sides of
/// `n^2 = |Supp(V)| · Rank(S_e)`.
pub fn rank_invariants(grading: &VeryGoodGrading) -> RankCertificate {
    let classes = grading.x_classes();
    let class_sizes = classes.sizes();
    let total: usize = class_sizes.values().sum();
    assert_eq!(total, grading.n(), "degree classes partition the indices");
    let rank_se = class_sizes.values().map(|s| s * s).sum();
    let supp_size = classes.supp_v.len();
    RankCertificate {
        class_sizes,
        rank_se,
        supp_size,
        lhs: grading.n() * grading.n(),
        rhs: supp_size * rank_se,
    }
}

/// Epsilon-crossed exactly when all nonempty degree classes have equal size
/// (certified by witness pairs). Unequal sizes refute it over IBN rings via
/// the rank identity and leave it open otherwise.
pub fn epsilon_crossed_verdict(grading: &VeryGoodGrading, ring: &RingSpec) -> Result<Verdict> {
    let classes = grading.x_classes();
    let verdict = if classes.equal_sizes() {
        let pairs = grading
            .unit_degree_support()
            .into_iter()
            .map(|g| {
                let w = construct_witnesses(grading, &g, ring)?;
                Ok((g, w))
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Verdict {
            property: Property::EpsilonCrossed,
            answer: Answer::Yes,
            certificate: Some(Certificate::WitnessSet(pairs)),
        }
    } else if ring.has_ibn() {
        let cert = rank_invariants(grading);
        debug_assert!(!cert.holds());
        Verdict {
            property: Property::EpsilonCrossed,
            answer: Answer::No,
            certificate: Some(Certificate::Rank(cert)),
        }
    } else {
        Verdict {
            property: Property::EpsilonCrossed,
            answer: Answer::Unknown,
            certificate: Some(Certificate::ClassSizeTable(classes.sizes())),
        }
    };
    verdict.checked(&GradingDescriptor::VeryGood(grading.clone()), ring)
}

/// Epsilon-crossed verdict for any descriptor: very good descriptors use
/// [`epsilon_crossed_verdict`]; other gradings are refuted when they fail
/// to be epsilon-strong and are unknown otherwise.
pub fn epsilon_crossed_for(grading: &GradingDescriptor, ring: &RingSpec) -> Result<Verdict> {
    if let Some(vg) = grading.as_very_good(ring)? {
        return epsilon_crossed_verdict(&vg, ring);
    }
    let strong = is_epsilon_strong(grading, ring)?;
    let verdict = Verdict {
        property: Property::EpsilonCrossed,
        answer: strong.answer,
        certificate: strong.certificate,
    };
    verdict.checked(grading, ring)
}

/// `N Σ x_i^2 - (Σ x_i)^2`, computed alongside `Σ_{i<j} (x_i - x_j)^2`.
/// The two agree, so the gap is zero exactly when all entries are equal.
pub fn qs_gap(xs: &[u64]) -> Result<u128> {
    if xs.is_empty() {
        return Err(Error::Domain("qs_gap needs at least one value".into()));
    }
    let n = xs.len() as u128;
    let sum: u128 = xs.iter().map(|&x| x as u128).sum();
    let squares: u128 = xs.iter().map(|&x| (x as u128) * (x as u128)).sum();
    let gap = n * squares - sum * sum;
    let pairwise: u128 = xs
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| {
            xs[i + 1..]
                .iter()
                .map(move |&b| (a.abs_diff(b) as u128).pow(2))
        })
        .sum();
    assert_eq!(gap, pairwise, "both forms of the quadratic gap agree");
    Ok(gap)
}

/// First violation found by [`brute_force_axiom_check`]: the product of the
/// basis elements at `left` and `right` does not lie in degree `expected`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomFailure {
    pub left: (usize, usize),
    pub right: (usize, usize),
    pub expected: GroupElement,
    pub found: Vec<GroupElement>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub products_checked: usize,
    pub failure: Option<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Multiplies every pair of homogeneous basis elements `r e_{i,j}` and
/// checks that the product lies in the sum of their degrees.
pub fn brute_force_axiom_check(
    grading: &GradingDescriptor,
    ring: &RingSpec,
    degree_bound: u32,
) -> Result<AxiomReport> {
    let group = grading.group();
    let basis = homogeneous_basis(grading, ring, degree_bound)?;
    let positions = |m: &Matrix| m.support()[0];
    let mut checked = 0;
    for (g, s) in &basis {
        for (h, t) in &basis {
            checked += 1;
            let product = s.mul(t)?;
            let expected = group.op(g, h)?;
            let parts = decompose(&product, grading)?;
            if !(parts.is_empty() || parts.len() == 1 && parts.contains_key(&expected)) {
                return Ok(AxiomReport {
                    products_checked: checked,
                    failure: Some(AxiomFailure {
                        left: positions(s),
                        right: positions(t),
                        expected,
                        found: parts.into_keys().collect(),
                    }),
                });
            }
        }
    }
    Ok(AxiomReport {
        products_checked: checked,
        failure: None,
    })
}

fn rank_over_q(mut rows: Vec<Vec<BigRational>>) -> usize {
    let mut rank = 0;
    let width = rows.first().map_or(0, Vec::len);
    for col in 0..width {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / &rows[rank][col];
        for x in &mut rows[rank][col..] {
            *x = &*x * &inv;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn flatten(m: &Matrix) -> Vec<BigRational> {
    let n = m.n();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| match m.get(i, j) {
            crate::coeff::RingElement::Rational(q) => q.clone(),
            other => panic!("rank oracle works over Q, got {other:?}"),
        })
        .collect()
}

/// Brute-force test of `S_g S_h = S_{g+h}` over `Q`: multiplies all matrix
/// units of degrees `g` and `h`, then compares ranks of the products with
/// the matrix units found in degree `g + h` by decomposition.
pub fn brute_force_product_spans(
    grading: &VeryGoodGrading,
    g: &GroupElement,
    h: &GroupElement,
) -> Result<bool> {
    let ring = RingSpec::rationals();
    let descriptor = GradingDescriptor::VeryGood(grading.clone());
    let group = grading.group();
    let target = group.op(g, h)?;
    let n = grading.n();
    let units: Vec<Matrix> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| Matrix::unit(&ring, n, i, j, ring.one()))
        .collect::<Result<_>>()?;
    let of_degree = |d: &GroupElement| -> Result<Vec<&Matrix>> {
        let mut out = Vec::new();
        for u in &units {
            if decompose(u, &descriptor)?.contains_key(d) {
                out.push(u);
            }
        }
        Ok(out)
    };
    let left = of_degree(g)?;
    let right = of_degree(h)?;
    let component = of_degree(&target)?;
    let mut products = Vec::new();
    for s in &left {
        for t in &right {
            let p = s.mul(t)?;
            if !p.is_zero() {
                products.push(flatten(&p));
            }
        }
    }
    let product_rank = rank_over_q(products.clone());
    let mut combined = products;
    combined.extend(component.iter().map(|m| flatten(m)));
    Ok(product_rank == component.len() && rank_over_q(combined) == component.len())
}
