//! Dense matrices over a coefficient ring, homogeneous decomposition, the
//! idempotents `ε_g` of a very good grading, and witness pairs for the
//! epsilon-crossed factorisation `ε_g = A_g B_{-g}`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::coeff::{RingElement, RingSpec};
use crate::error::{Error, Result};
use crate::grading::{GradingDescriptor, VeryGoodGrading};
use crate::groups::{GroupElement, GroupSpec};

/// An `n x n` matrix over `ring`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<RingElement>,
    ring: RingSpec,
}

impl Matrix {
    pub fn zero(ring: &RingSpec, n: usize) -> Self {
        Matrix {
            n,
            entries: vec![ring.zero(); n * n],
            ring: ring.clone(),
        }
    }

    pub fn identity(ring: &RingSpec, n: usize) -> Self {
        Self::diagonal(ring, n, &(0..n).collect())
    }

    /// `Σ_{i ∈ indices} e_{i,i}`.
    pub fn diagonal(ring: &RingSpec, n: usize, indices: &BTreeSet<usize>) -> Self {
        let mut m = Self::zero(ring, n);
        for &i in indices {
            m.entries[i * n + i] = ring.one();
        }
        m
    }

    /// `r e_{i,j}`.
    pub fn unit(ring: &RingSpec, n: usize, i: usize, j: usize, r: RingElement) -> Result<Self> {
        if i >= n || j >= n {
            return Err(Error::IndexOutOfRange { row: i, col: j, n });
        }
        if !ring.contains(&r) {
            return Err(Error::Domain(format!("{r:?} is not an element of {ring}")));
        }
        let mut m = Self::zero(ring, n);
        m.entries[i * n + j] = r;
        Ok(m)
    }

    pub fn from_rows(ring: &RingSpec, rows: Vec<Vec<RingElement>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Domain("matrix must be square and nonempty".into()));
        }
        let entries: Vec<RingElement> = rows.into_iter().flatten().collect();
        if let Some(bad) = entries.iter().find(|r| !ring.contains(r)) {
            return Err(Error::Domain(format!(
                "{bad:?} is not an element of {ring}"
            )));
        }
        Ok(Matrix {
            n,
            entries,
            ring: ring.clone(),
        })
    }

    /// Parses row-major entry strings with the ring's element syntax.
    pub fn parse_rows<S: AsRef<str>>(ring: &RingSpec, rows: &[Vec<S>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| row.iter().map(|t| ring.parse_element(t.as_ref())).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Self::from_rows(ring, rows)
    }

    pub fn to_text_rows(&self) -> Vec<Vec<String>> {
        (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| self.ring.format_element(self.get(i, j)))
                    .collect()
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|r| self.ring.is_zero(r))
    }

    /// Positions `(i, j)` of nonzero entries, row-major.
    pub fn support(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.ring.is_zero(self.get(i, j)))
            .collect()
    }

    fn check_compatible(&self, other: &Matrix) -> Result<()> {
        if self.n != other.n || self.ring != other.ring {
            return Err(Error::Domain(format!(
                "cannot combine {}x{} over {} with {}x{} over {}",
                self.n, self.n, self.ring, other.n, other.n, other.ring
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.add(a, b))
            .collect::<Result<_>>()?;
        Ok(Matrix {
            n: self.n,
            entries,
            ring: self.ring.clone(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| self.ring.sub(a, b))
            .collect::<Result<_>>()?;
        Ok(Matrix {
            n: self.n,
            entries,
            ring: self.ring.clone(),
        })
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_compatible(other)?;
        let n = self.n;
        let ring = &self.ring;
        let mut out = Matrix::zero(ring, n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let slot = &mut out.entries[i * n + j];
                    *slot = ring.add(slot, &ring.mul(a, b)?)?;
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let n = self.n;
        let entries = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| self.get(j, i).clone())
            .collect();
        Matrix {
            n,
            entries,
            ring: self.ring.clone(),
        }
    }

    /// Indices `i` with a `1` on the diagonal, provided the matrix is a 0/1
    /// diagonal matrix.
    pub fn diagonal_support(&self) -> Option<BTreeSet<usize>> {
        let one = self.ring.one();
        let mut out = BTreeSet::new();
        for (i, j) in self.support() {
            if i != j || *self.get(i, i) != one {
                return None;
            }
            out.insert(i);
        }
        Some(out)
    }
}

impl Serialize for Matrix {
    /// Row-major nested arrays of entry strings.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rows = self.to_text_rows();
        let mut seq = serializer.serialize_seq(Some(rows.len()))?;
        for row in &rows {
            seq.serialize_element(row)?;
        }
        seq.end()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.to_text_rows();
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        for row in rows {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            writeln!(f, "[ {} ]", cells.join("  "))?;
        }
        Ok(())
    }
}

/// Splits `m` into its nonzero homogeneous components.
pub fn decompose(
    m: &Matrix,
    grading: &GradingDescriptor,
) -> Result<BTreeMap<GroupElement, Matrix>> {
    if grading.n() != m.n {
        return Err(Error::Domain(format!(
            "grading is on {}x{} matrices, got {}x{}",
            grading.n(),
            grading.n(),
            m.n,
            m.n
        )));
    }
    grading.check_ring(&m.ring)?;
    let ring = &m.ring;
    let mut parts: BTreeMap<GroupElement, Matrix> = BTreeMap::new();
    let mut place = |deg: GroupElement, i: usize, j: usize, r: RingElement| -> Result<()> {
        let part = parts.entry(deg).or_insert_with(|| Matrix::zero(ring, m.n));
        let slot = &mut part.entries[i * m.n + j];
        *slot = ring.add(slot, &r)?;
        Ok(())
    };
    for (i, j) in m.support() {
        let r = m.get(i, j).clone();
        match grading {
            GradingDescriptor::VeryGood(_) | GradingDescriptor::Good(_) => {
                place(grading.unit_degree(i, j)?, i, j, r)?;
            }
            GradingDescriptor::Product(p) => {
                if p.coeff_group().is_trivial() {
                    place(p.degree_of(&p.coeff_group().identity(), i, j)?, i, j, r)?;
                } else {
                    for (a, part) in ring.homogeneous_parts(&r)? {
                        place(p.degree_of(&a, i, j)?, i, j, part)?;
                    }
                }
            }
        }
    }
    parts.retain(|_, part| !part.is_zero());
    Ok(parts)
}

/// The degree of `m` when it has exactly one nonzero homogeneous component.
pub fn homogeneous_degree(m: &Matrix, grading: &GradingDescriptor) -> Result<Option<GroupElement>> {
    let parts = decompose(m, grading)?;
    Ok(if parts.len() == 1 {
        parts.into_keys().next()
    } else {
        None
    })
}

pub fn is_homogeneous(m: &Matrix, grading: &GradingDescriptor) -> Result<bool> {
    Ok(decompose(m, grading)?.len() <= 1)
}

/// Whether `m` lies in the component of degree `g` (zero lies in all of them).
pub fn lies_in_degree(m: &Matrix, grading: &GradingDescriptor, g: &GroupElement) -> Result<bool> {
    let parts = decompose(m, grading)?;
    Ok(parts.is_empty() || (parts.len() == 1 && parts.contains_key(g)))
}

/// Homogeneous additive generators `r e_{i,j}` of `M_n(R)` with their
/// degrees, where `r` runs over the coefficient ring's homogeneous
/// generators (truncated at `degree_bound` for `Q[x]`).
pub fn homogeneous_basis(
    grading: &GradingDescriptor,
    ring: &RingSpec,
    degree_bound: u32,
) -> Result<Vec<(GroupElement, Matrix)>> {
    grading.check_ring(ring)?;
    let n = grading.n();
    let generators = match grading {
        GradingDescriptor::Product(p) if !p.coeff_group().is_trivial() => {
            ring.homogeneous_generators(degree_bound)?
        }
        GradingDescriptor::Product(p) => vec![(p.coeff_group().identity(), ring.one())],
        _ => vec![(GroupSpec::trivial().identity(), ring.one())],
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for (a, r) in &generators {
                let deg = match grading {
                    GradingDescriptor::Product(p) => p.degree_of(a, i, j)?,
                    _ => grading.unit_degree(i, j)?,
                };
                out.push((deg, Matrix::unit(ring, n, i, j, r.clone())?));
            }
        }
    }
    Ok(out)
}

/// `ε_g` together with the index sets it is built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsilonData {
    pub g: GroupElement,
    /// `L_g = {i : deg(e_{i,j}) = g for some j}`
    pub left_set: BTreeSet<usize>,
    /// `R_g = {j : deg(e_{i,j}) = g for some i}`
    pub right_set: BTreeSet<usize>,
    pub epsilon: Matrix,
}

/// `ε_g = Σ_{i ∈ L_g} e_{i,i}`; the zero matrix when no matrix unit has degree `g`.
pub fn epsilon(
    grading: &VeryGoodGrading,
    g: &GroupElement,
    ring: &RingSpec,
) -> Result<EpsilonData> {
    if !grading.group().contains(g) {
        return Err(Error::Domain(format!(
            "{g:?} is not an element of {}",
            grading.group()
        )));
    }
    let n = grading.n();
    let mut left_set = BTreeSet::new();
    let mut right_set = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if grading.unit_degree(i, j)? == *g {
                left_set.insert(i);
                right_set.insert(j);
            }
        }
    }
    let epsilon = Matrix::diagonal(ring, n, &left_set);
    Ok(EpsilonData {
        g: g.clone(),
        left_set,
        right_set,
        epsilon,
    })
}

/// Splits the standard basis `v_1, ..., v_n` into the kernel and the fixed
/// points of `ε_g`: `v_i` is fixed exactly when `g_i ∈ g + Supp(V)`.
pub fn epsilon_action_indices(
    grading: &VeryGoodGrading,
    g: &GroupElement,
) -> Result<(BTreeSet<usize>, BTreeSet<usize>)> {
    let group = grading.group();
    let supp = grading.x_classes().supp_v;
    let mut kernel = BTreeSet::new();
    let mut image = BTreeSet::new();
    for (i, gi) in grading.tuple().iter().enumerate() {
        if supp.contains(&group.sub(gi, g)?) {
            image.insert(i);
        } else {
            kernel.insert(i);
        }
    }
    Ok((kernel, image))
}

/// Homogeneous `A` of degree `g` and `B` of degree `-g` with
/// `A B = ε_g` and `B A = ε_{-g}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessPair {
    pub g: GroupElement,
    pub a: Matrix,
    pub b: Matrix,
}

impl WitnessPair {
    /// Re-checks both products against freshly computed idempotents and the
    /// degrees of both factors.
    pub fn verify(&self, grading: &VeryGoodGrading) -> Result<bool> {
        let ring = self.a.ring().clone();
        let group = grading.group();
        let neg = group.neg(&self.g)?;
        let eps = epsilon(grading, &self.g, &ring)?.epsilon;
        let eps_neg = epsilon(grading, &neg, &ring)?.epsilon;
        let descriptor = GradingDescriptor::VeryGood(grading.clone());
        Ok(self.a.mul(&self.b)? == eps
            && self.b.mul(&self.a)? == eps_neg
            && lies_in_degree(&self.a, &descriptor, &self.g)?
            && lies_in_degree(&self.b, &descriptor, &neg)?)
    }
}

/// Builds the witness pair for `g` from order-preserving bijections between
/// degree classes. Requires all nonempty degree classes to have equal size.
pub fn construct_witnesses(
    grading: &VeryGoodGrading,
    g: &GroupElement,
    ring: &RingSpec,
) -> Result<WitnessPair> {
    let classes = grading.x_classes();
    if !classes.equal_sizes() {
        let sizes: Vec<String> = classes
            .sizes()
            .iter()
            .map(|(h, s)| format!("|X_{}| = {s}", grading.group().format_element(h)))
            .collect();
        return Err(Error::Precondition(format!(
            "degree classes differ in size: {}",
            sizes.join(", ")
        )));
    }
    let group = grading.group();
    let n = grading.n();
    let mut a = Matrix::zero(ring, n);
    let mut b = Matrix::zero(ring, n);
    for (source_degree, source) in &classes.classes {
        let target_degree = group.sub(source_degree, g)?;
        let Some(target) = classes.classes.get(&target_degree) else {
            continue;
        };
        // b_{h, g_i}: the order-preserving bijection X_{g_i} -> X_{g_i - g}.
        for (&i, &k) in source.iter().zip(target) {
            b.entries[k * n + i] = ring.one();
            a.entries[i * n + k] = ring.one();
        }
    }
    Ok(WitnessPair { g: g.clone(), a, b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::{GoodGrading, ProductGrading};

    fn q() -> RingSpec {
        RingSpec::rationals()
    }

    fn z() -> GroupSpec {
        GroupSpec::integers()
    }

    fn zm(m: u64) -> GroupSpec {
        GroupSpec::cyclic(m).unwrap()
    }

    fn example_b() -> VeryGoodGrading {
        VeryGoodGrading::parse(z(), &["0", "-1", "-2"]).unwrap()
    }

    fn unit(n: usize, i: usize, j: usize) -> Matrix {
        Matrix::unit(&q(), n, i, j, q().one()).unwrap()
    }

    fn el(g: &GroupSpec, s: &str) -> GroupElement {
        g.parse_element(s).unwrap()
    }

    #[test]
    fn matrix_unit_calculus() {
        assert_eq!(unit(3, 0, 1).mul(&unit(3, 1, 2)).unwrap(), unit(3, 0, 2));
        assert!(unit(3, 0, 1).mul(&unit(3, 0, 1)).unwrap().is_zero());
        assert_eq!(unit(3, 0, 1).transpose(), unit(3, 1, 0));
        assert!(unit(3, 0, 1).mul(&unit(2, 0, 1)).is_err());
        let zr: RingSpec = "Z".parse().unwrap();
        assert!(unit(2, 0, 0).add(&Matrix::identity(&zr, 2)).is_err());
        assert!(Matrix::unit(&q(), 2, 2, 0, q().one()).is_err());
    }

    #[test]
    fn leavitt_matrix_squares_to_identity() {
        let l: RingSpec = "L(1,2)".parse().unwrap();
        let c = Matrix::parse_rows(
            &l,
            &[
                vec!["0", "0", "y1"],
                vec!["0", "0", "y2"],
                vec!["x1", "x2", "0"],
            ],
        )
        .unwrap();
        assert_eq!(c.mul(&c).unwrap(), Matrix::identity(&l, 3));
    }

    #[test]
    fn decompose_gaussian_product() {
        let gauss: RingSpec = "Q(i)".parse().unwrap();
        let pos = GoodGrading::from_offdiagonal_map(zm(2), &[el(&zm(2), "1")]).unwrap();
        let grading = GradingDescriptor::Product(ProductGrading::new(zm(2), pos));
        let m = Matrix::unit(&gauss, 2, 0, 0, gauss.parse_element("1+i").unwrap()).unwrap();
        let parts = decompose(&m, &grading).unwrap();
        let total = grading.group();
        assert_eq!(parts.len(), 2);
        assert_eq!(
            parts[&el(&total, "(0,0)")],
            Matrix::unit(&gauss, 2, 0, 0, gauss.one()).unwrap()
        );
        assert_eq!(
            parts[&el(&total, "(1,0)")],
            Matrix::unit(&gauss, 2, 0, 0, gauss.parse_element("i").unwrap()).unwrap()
        );
        assert!(!is_homogeneous(&m, &grading).unwrap());
    }

    #[test]
    fn decompose_poly_product() {
        let poly: RingSpec = "Q[x]".parse().unwrap();
        let pos = GoodGrading::from_offdiagonal_map(zm(2), &[el(&zm(2), "1")]).unwrap();
        let grading = GradingDescriptor::Product(ProductGrading::new(z(), pos));
        let m = Matrix::unit(&poly, 2, 0, 0, poly.parse_element("x").unwrap()).unwrap();
        let parts = decompose(&m, &grading).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&el(&grading.group(), "(1,0)")], m);
        let wrong = Matrix::identity(&q(), 2);
        assert!(decompose(&wrong, &grading).is_err());
    }

    #[test]
    fn identity_is_degree_e() {
        let grading = GradingDescriptor::VeryGood(example_b());
        let parts = decompose(&Matrix::identity(&q(), 3), &grading).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[&z().identity()], Matrix::identity(&q(), 3));
    }

    #[test]
    fn components_sum_back_and_are_disjoint() {
        let grading = GradingDescriptor::VeryGood(example_b());
        let rows: Vec<Vec<String>> = (0..3)
            .map(|i| (0..3).map(|j| format!("{}", 3 * i + j + 1)).collect())
            .collect();
        let m = Matrix::parse_rows(&q(), &rows).unwrap();
        let parts = decompose(&m, &grading).unwrap();
        assert_eq!(parts.len(), 5);
        let mut total = Matrix::zero(&q(), 3);
        for (g, part) in &parts {
            assert_eq!(
                homogeneous_degree(part, &grading).unwrap().as_ref(),
                Some(g)
            );
            total = total.add(part).unwrap();
        }
        assert_eq!(total, m);
    }

    // Brute-force check of ε·s = s and s·ε_{-g} = s over every matrix unit s of degree g.
    fn epsilon_fixes_component(grading: &VeryGoodGrading, g: &GroupElement) -> bool {
        let n = grading.n();
        let eps = epsilon(grading, g, &q()).unwrap().epsilon;
        let neg = grading.group().neg(g).unwrap();
        let eps_neg = epsilon(grading, &neg, &q()).unwrap().epsilon;
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| grading.unit_degree(i, j).unwrap() == *g)
            .all(|(i, j)| {
                let s = unit(n, i, j);
                eps.mul(&s).unwrap() == s && s.mul(&eps_neg).unwrap() == s
            })
    }

    #[test]
    fn epsilon_example_b() {
        let b = example_b();
        let e1 = epsilon(&b, &el(&z(), "1"), &q()).unwrap();
        assert_eq!(e1.left_set, BTreeSet::from([0, 1]));
        assert_eq!(e1.right_set, BTreeSet::from([1, 2]));
        assert_eq!(e1.epsilon, unit(3, 0, 0).add(&unit(3, 1, 1)).unwrap());
        assert!(epsilon_fixes_component(&b, &el(&z(), "1")));

        let e0 = epsilon(&b, &z().identity(), &q()).unwrap();
        assert_eq!(e0.epsilon, Matrix::identity(&q(), 3));

        let e3 = epsilon(&b, &el(&z(), "3"), &q()).unwrap();
        assert!(e3.epsilon.is_zero());
        assert!(e3.left_set.is_empty());
        assert!(epsilon(&b, &zm(2).identity(), &q()).is_err());
    }

    #[test]
    fn action_indices_example_b() {
        let b = example_b();
        let (kernel, image) = epsilon_action_indices(&b, &el(&z(), "1")).unwrap();
        assert_eq!(kernel, BTreeSet::from([2]));
        assert_eq!(image, BTreeSet::from([0, 1]));
        let (kernel, image) = epsilon_action_indices(&b, &z().identity()).unwrap();
        assert!(kernel.is_empty());
        assert_eq!(image.len(), 3);
        let (kernel, image) = epsilon_action_indices(&b, &el(&z(), "5")).unwrap();
        assert_eq!(kernel, BTreeSet::from([0, 1, 2]));
        assert!(image.is_empty());

        // Oracle: apply ε_g to each standard column vector.
        for k in -4..=4 {
            let g = el(&z(), &k.to_string());
            let eps = epsilon(&b, &g, &q()).unwrap().epsilon;
            let (kernel, image) = epsilon_action_indices(&b, &g).unwrap();
            for i in 0..3 {
                let v = unit(3, i, 0);
                let image_v = eps.mul(&v).unwrap();
                assert_eq!(image_v == v, image.contains(&i));
                assert_eq!(image_v.is_zero(), kernel.contains(&i));
            }
        }
    }

    #[test]
    fn witnesses_example_b() {
        let b = example_b();
        let w = construct_witnesses(&b, &el(&z(), "1"), &q()).unwrap();
        assert_eq!(w.a, unit(3, 0, 1).add(&unit(3, 1, 2)).unwrap());
        assert_eq!(w.b, unit(3, 1, 0).add(&unit(3, 2, 1)).unwrap());
        assert_eq!(
            w.a.mul(&w.b).unwrap(),
            epsilon(&b, &el(&z(), "1"), &q()).unwrap().epsilon
        );
        assert_eq!(
            w.b.mul(&w.a).unwrap(),
            epsilon(&b, &el(&z(), "-1"), &q()).unwrap().epsilon
        );
        assert!(w.verify(&b).unwrap());

        let w = construct_witnesses(&b, &z().identity(), &q()).unwrap();
        assert_eq!(w.a, Matrix::identity(&q(), 3));
        assert_eq!(w.b, Matrix::identity(&q(), 3));
    }

    #[test]
    fn witnesses_example_a_are_invertible() {
        let a = VeryGoodGrading::parse(zm(3), &["0", "1", "2"]).unwrap();
        let w = construct_witnesses(&a, &el(&zm(3), "1"), &q()).unwrap();
        let id = Matrix::identity(&q(), 3);
        assert_eq!(w.a.mul(&w.b).unwrap(), id);
        assert_eq!(w.b.mul(&w.a).unwrap(), id);
        assert!(w.verify(&a).unwrap());
    }

    #[test]
    fn witnesses_need_equal_classes() {
        let c = VeryGoodGrading::parse(zm(2), &["0", "0", "1"]).unwrap();
        match construct_witnesses(&c, &el(&zm(2), "1"), &q()) {
            Err(Error::Precondition(msg)) => {
                assert!(msg.contains("|X_0| = 2"));
                assert!(msg.contains("|X_1| = 1"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn epsilon_properties_exhaustive_small() {
        // Every tuple over Z/3 with n <= 4 and a window of Z with n <= 3.
        let mut gradings = Vec::new();
        for n in 1..=4 {
            let mut tuples = vec![vec![0i64]];
            for _ in 1..n {
                tuples = tuples
                    .into_iter()
                    .flat_map(|t| (0..3).map(move |k| [t.clone(), vec![k]].concat()))
                    .collect();
            }
            for t in tuples {
                let tuple = t
                    .iter()
                    .map(|&k| zm(3).element(vec![], vec![k]).unwrap())
                    .collect();
                gradings.push(VeryGoodGrading::from_tuple(zm(3), tuple).unwrap());
            }
        }
        for t in [[0, 2, -1], [0, 0, 3], [0, 1, 1]] {
            let tuple = t
                .iter()
                .map(|&k| z().element(vec![k], vec![]).unwrap())
                .collect();
            gradings.push(VeryGoodGrading::from_tuple(z(), tuple).unwrap());
        }
        for grading in &gradings {
            let group = grading.group();
            let support = grading.unit_degree_support();
            for g in &support {
                let data = epsilon(grading, g, &q()).unwrap();
                let eps = &data.epsilon;
                assert_eq!(&eps.mul(eps).unwrap(), eps);
                assert!(!eps.is_zero());
                let neg = epsilon(grading, &group.neg(g).unwrap(), &q()).unwrap();
                assert_eq!(data.right_set, neg.left_set);
                assert!(epsilon_fixes_component(grading, g));
                let (_, image) = epsilon_action_indices(grading, g).unwrap();
                assert_eq!(image, data.left_set);
            }
            assert_eq!(
                epsilon(grading, &group.identity(), &q()).unwrap().epsilon,
                Matrix::identity(&q(), grading.n())
            );
            // Grading axiom over matrix units: S_g S_h ⊆ S_{g+h}.
            let descriptor = GradingDescriptor::VeryGood(grading.clone());
            let basis = homogeneous_basis(&descriptor, &q(), 0).unwrap();
            for (g, s) in &basis {
                for (h, t) in &basis {
                    let gh = group.op(g, h).unwrap();
                    assert!(lies_in_degree(&s.mul(t).unwrap(), &descriptor, &gh).unwrap());
                }
            }
        }
    }
}
