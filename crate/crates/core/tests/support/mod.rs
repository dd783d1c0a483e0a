//! Independent oracles and check drivers shared by the integration tests and
//! the acceptance suite in the CLI crate (pulled in there via `#[path]`).
//!
//! Each driver returns `Err(description)` on the first disagreement so the
//! caller decides whether to panic or print a failure line.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use gradex_core::coeff::leavitt::{BaseField, LeavittElement, Letter, Word};
use gradex_core::coeff::RingSpec;
use gradex_core::decide::{
    brute_force_product_spans, epsilon_crossed_verdict, is_locally_strong, is_strong, qs_gap,
    rank_invariants, Answer,
};
use gradex_core::grading::{GradingDescriptor, VeryGoodGrading};
use gradex_core::groups::{GroupElement, GroupSpec};
use gradex_core::matrixring::{construct_witnesses, epsilon, homogeneous_basis};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

// ---------------------------------------------------------------------------
// Leavitt oracle. Letters are bytes a = x1, b = x2, c = y1, d = y2 and the
// relations are written out again here rather than taken from the library.

pub type Comb = BTreeMap<Vec<u8>, i64>;

fn oracle_rule(pair: &[u8]) -> Option<Vec<(Vec<u8>, i64)>> {
    match pair {
        b"ca" | b"db" => Some(vec![(vec![], 1)]),
        b"cb" | b"da" => Some(vec![]),
        b"bd" => Some(vec![(vec![], 1), (b"ac".to_vec(), -1)]),
        _ => None,
    }
}

/// Every normal form reachable from `w` by rewriting redexes in any order.
/// Memoized per word; a confluent system yields a single element.
pub struct AllOrdersOracle {
    memo: HashMap<Vec<u8>, BTreeSet<Comb>>,
}

impl AllOrdersOracle {
    pub fn new() -> Self {
        AllOrdersOracle {
            memo: HashMap::new(),
        }
    }

    pub fn normal_forms(&mut self, w: &[u8]) -> BTreeSet<Comb> {
        if let Some(hit) = self.memo.get(w) {
            return hit.clone();
        }
        let mut results = BTreeSet::new();
        let mut any_redex = false;
        for p in 0..w.len().saturating_sub(1) {
            let Some(rhs) = oracle_rule(&w[p..p + 2]) else {
                continue;
            };
            any_redex = true;
            // Breadth over the successor terms: combine every choice of
            // normal form for each successor word.
            let mut partial: BTreeSet<Comb> = [Comb::new()].into();
            for (mid, coeff) in rhs {
                let mut next = w[..p].to_vec();
                next.extend_from_slice(&mid);
                next.extend_from_slice(&w[p + 2..]);
                let options = self.normal_forms(&next);
                let mut grown = BTreeSet::new();
                for acc in &partial {
                    for opt in &options {
                        let mut sum = acc.clone();
                        for (word, c) in opt {
                            let slot = sum.entry(word.clone()).or_insert(0);
                            *slot += coeff * c;
                            if *slot == 0 {
                                sum.remove(word);
                            }
                        }
                        grown.insert(sum);
                    }
                }
                partial = grown;
            }
            results.extend(partial);
        }
        if !any_redex {
            results.insert([(w.to_vec(), 1)].into());
        }
        self.memo.insert(w.to_vec(), results.clone());
        results
    }
}

pub fn letter_byte(l: Letter) -> u8 {
    match l {
        Letter::X1 => b'a',
        Letter::X2 => b'b',
        Letter::Y1 => b'c',
        Letter::Y2 => b'd',
    }
}

pub fn to_comb(e: &LeavittElement) -> Comb {
    e.terms()
        .map(|(w, c)| {
            assert!(c.is_integer(), "integral input gives integral coefficients");
            (
                w.iter().map(|&l| letter_byte(l)).collect(),
                c.to_integer().to_i64().unwrap(),
            )
        })
        .collect()
}

/// All words of length `0..=max_len`, shortest first.
pub fn all_words(max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    let mut layer = vec![Word::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                Letter::ALL.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[derive(Debug, Default)]
pub struct LeavittStats {
    pub words: usize,
    pub pairs: usize,
    pub triples: usize,
}

/// Checks the defining relations, ring axioms on word pairs of length at
/// most `max_len` (plus `triples` random triples for associativity and
/// distributivity), and agreement with the all-orders oracle on every word
/// and every concatenation of two such words.
pub fn leavitt_soundness(
    max_len: usize,
    triples: usize,
    seed: u64,
) -> Result<LeavittStats, String> {
    let q = BaseField::Rationals;
    let el = |w: &Word| LeavittElement::word(w.clone());
    let one = LeavittElement::one();
    let zero = LeavittElement::zero();
    use Letter::*;

    // Defining relations.
    let relations: [(Word, LeavittElement); 5] = [
        (vec![Y1, X1], one.clone()),
        (vec![Y2, X2], one.clone()),
        (vec![Y1, X2], zero.clone()),
        (vec![Y2, X1], zero.clone()),
        (vec![X1, Y1], one.add(&el(&vec![X2, Y2]).neg(q), q)),
    ];
    for (w, expected) in &relations {
        if el(w) != *expected {
            return Err(format!("relation {w:?} reduced to {}", el(w)));
        }
    }
    let sum = el(&vec![X1, Y1]).add(&el(&vec![X2, Y2]), q);
    if sum != one {
        return Err(format!("x1*y1 + x2*y2 reduced to {sum}"));
    }

    let words = all_words(max_len);
    let forms: Vec<LeavittElement> = words.iter().map(el).collect();
    let mut oracle = AllOrdersOracle::new();
    for (w, f) in words.iter().zip(&forms) {
        let bytes: Vec<u8> = w.iter().map(|&l| letter_byte(l)).collect();
        let nfs = oracle.normal_forms(&bytes);
        if nfs.len() != 1 || !nfs.contains(&to_comb(f)) {
            return Err(format!("word {w:?}: library {f}, oracle {nfs:?}"));
        }
    }

    let mut pairs = 0;
    for (u, fu) in words.iter().zip(&forms) {
        if fu.mul(&one, q) != *fu || one.mul(fu, q) != *fu {
            return Err(format!("unit law fails on {u:?}"));
        }
        for (v, fv) in words.iter().zip(&forms) {
            let mut uv = u.clone();
            uv.extend_from_slice(v);
            let direct =
                LeavittElement::normal_form([(uv.clone(), BigRational::from_integer(1.into()))], q);
            let via_product = fu.mul(fv, q);
            if direct != via_product {
                return Err(format!(
                    "nf({uv:?}) = {direct} but nf(u) nf(v) = {via_product}"
                ));
            }
            // Strategy independence: every rewriting order from u v ends here.
            let bytes: Vec<u8> = uv.iter().map(|&l| letter_byte(l)).collect();
            let nfs = oracle.normal_forms(&bytes);
            if nfs.len() != 1 || !nfs.contains(&to_comb(&direct)) {
                return Err(format!(
                    "concatenation {uv:?}: library {direct}, oracle {nfs:?}"
                ));
            }
            if fu.add(fv, q) != fv.add(fu, q) {
                return Err(format!("addition not commutative on {u:?}, {v:?}"));
            }
            pairs += 1;
        }
    }

    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..triples {
        let pick = |rng: &mut StdRng| forms[rng.gen_range(0..forms.len())].clone();
        let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        if a.mul(&b, q).mul(&c, q) != a.mul(&b.mul(&c, q), q) {
            return Err(format!("associativity fails on {a}, {b}, {c}"));
        }
        if a.mul(&b.add(&c, q), q) != a.mul(&b, q).add(&a.mul(&c, q), q)
            || b.add(&c, q).mul(&a, q) != b.mul(&a, q).add(&c.mul(&a, q), q)
        {
            return Err(format!("distributivity fails on {a}, {b}, {c}"));
        }
    }

    Ok(LeavittStats {
        words: words.len(),
        pairs,
        triples,
    })
}

// ---------------------------------------------------------------------------
// Gradings.

/// Every tuple `(e, g_2, ..., g_n)` over a finite group.
pub fn all_tuples(group: &GroupSpec, n: usize) -> Vec<Vec<GroupElement>> {
    let elements = group.enumerate().expect("finite group");
    let mut out = vec![vec![group.identity()]];
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                elements.iter().map(move |g| {
                    let mut t = t.clone();
                    t.push(g.clone());
                    t
                })
            })
            .collect();
    }
    out
}

/// Local strongness and strongness against brute-force span computations
/// and the set-equality test. Returns the number of (tuple, g) pairs checked.
pub fn exhaustive_equivalence(groups: &[&str], max_n: usize) -> Result<usize, String> {
    let mut checked = 0;
    for text in groups {
        let group: GroupSpec = text.parse().unwrap();
        let elements = group.enumerate().unwrap();
        for n in 1..=max_n {
            for tuple in all_tuples(&group, n) {
                let vg = VeryGoodGrading::from_tuple(group.clone(), tuple.clone())
                    .map_err(|e| e.to_string())?;
                for g in &elements {
                    let fast =
                        is_locally_strong(&vg, g).map_err(|e| e.to_string())?.answer == Answer::Yes;
                    let neg = group.neg(g).unwrap();
                    let slow =
                        brute_force_product_spans(&vg, g, &neg).map_err(|e| e.to_string())?;
                    if fast != slow {
                        return Err(format!(
                            "{text} {tuple:?} g = {g:?}: decision {fast}, brute force {slow}"
                        ));
                    }
                    checked += 1;
                }
                let strong = is_strong(&vg).map_err(|e| e.to_string())?.answer == Answer::Yes;
                let covers = tuple.iter().collect::<BTreeSet<_>>().len() == elements.len();
                if strong != covers {
                    return Err(format!(
                        "{text} {tuple:?}: strong {strong}, set(tuple) = G {covers}"
                    ));
                }
            }
        }
    }
    Ok(checked)
}

pub const GROUP_POOL: [&str; 9] = [
    "Z/2",
    "Z/3",
    "Z/4",
    "Z/2 x Z/2",
    "Z/6",
    "Z/2 x Z/3",
    "Z",
    "Z x Z/2",
    "Z x Z",
];

/// A random very good grading: group from the pool, `1 <= n <= max_n`, free
/// coordinates in `-3..=3`.
pub fn random_instance(rng: &mut StdRng, max_n: usize) -> VeryGoodGrading {
    let group: GroupSpec = GROUP_POOL[rng.gen_range(0..GROUP_POOL.len())]
        .parse()
        .unwrap();
    let n = rng.gen_range(1..=max_n);
    let mut tuple = vec![group.identity()];
    for _ in 1..n {
        let free: Vec<i64> = (0..group.free_rank())
            .map(|_| rng.gen_range(-3..=3))
            .collect();
        let torsion: Vec<i64> = group
            .torsion()
            .iter()
            .map(|&m| rng.gen_range(0..m as i64))
            .collect();
        tuple.push(group.element(free, torsion).unwrap());
    }
    VeryGoodGrading::from_tuple(group, tuple).unwrap()
}

fn independent_gap(xs: &[u64]) -> (i128, i128) {
    let n = xs.len() as i128;
    let sum: i128 = xs.iter().map(|&x| x as i128).sum();
    let sq: i128 = xs.iter().map(|&x| (x as i128).pow(2)).sum();
    let mut pairwise = 0;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            pairwise += (xs[i] as i128 - xs[j] as i128).pow(2);
        }
    }
    (n * sq - sum * sum, pairwise)
}

/// One instance of the randomized consistency suite.
pub fn check_instance(vg: &VeryGoodGrading) -> Result<(), String> {
    let err = |e: gradex_core::Error| e.to_string();
    let q = RingSpec::rationals();
    let group = vg.group();
    let n = vg.n();
    let classes = vg.x_classes();
    let sizes: Vec<u64> = classes.sizes().values().map(|&s| s as u64).collect();
    let equal = classes.equal_sizes();

    let rank = rank_invariants(vg);
    let formula = n * n == rank.supp_size * rank.rank_se;
    let sum_sq: usize = sizes.iter().map(|&s| (s * s) as usize).sum();
    if rank.rank_se != sum_sq {
        return Err(format!(
            "rank(S_e) = {} but the class sizes give {sum_sq}",
            rank.rank_se
        ));
    }

    let support = vg.unit_degree_support();
    let mut witnesses_ok = true;
    for g in &support {
        match construct_witnesses(vg, g, &q) {
            Ok(pair) => witnesses_ok &= pair.verify(vg).map_err(err)?,
            Err(_) => witnesses_ok = false,
        }
    }
    let crossed = epsilon_crossed_verdict(vg, &q).map_err(err)?.answer == Answer::Yes;
    if !(equal == formula && formula == witnesses_ok && witnesses_ok == crossed) {
        return Err(format!(
            "tuple {:?}: equal sizes {equal}, rank formula {formula}, witnesses {witnesses_ok}, verdict {crossed}",
            vg.tuple()
        ));
    }

    let (gap, pairwise) = independent_gap(&sizes);
    let lib_gap = qs_gap(&sizes).map_err(err)? as i128;
    if gap != pairwise || gap != lib_gap || (gap == 0) != equal {
        return Err(format!(
            "gap mismatch on sizes {sizes:?}: {gap}, {pairwise}, {lib_gap}"
        ));
    }

    let descriptor = GradingDescriptor::VeryGood(vg.clone());
    let basis = homogeneous_basis(&descriptor, &q, 0).map_err(err)?;
    for g in &support {
        let neg = group.neg(g).unwrap();
        let eg = epsilon(vg, g, &q).map_err(err)?;
        let eneg = epsilon(vg, &neg, &q).map_err(err)?;
        if eg.epsilon.mul(&eg.epsilon).map_err(err)? != eg.epsilon {
            return Err(format!("eps_{g:?} is not idempotent"));
        }
        if eg.right_set != eneg.left_set {
            return Err(format!("R_g != L_-g for g = {g:?}"));
        }
        for (d, s) in basis.iter().filter(|(d, _)| d == g) {
            let left = eg.epsilon.mul(s).map_err(err)?;
            let right = s.mul(&eneg.epsilon).map_err(err)?;
            if left != *s || right != *s {
                return Err(format!(
                    "eps does not act as a unit on a generator of degree {d:?}"
                ));
            }
        }
    }
    Ok(())
}

pub fn characterization_suite(instances: usize, max_n: usize, seed: u64) -> Result<usize, String> {
    let mut rng = StdRng::seed_from_u64(seed);
    for k in 0..instances {
        let vg = random_instance(&mut rng, max_n);
        check_instance(&vg).map_err(|e| format!("instance {k} over {}: {e}", vg.group()))?;
    }
    Ok(instances)
}
