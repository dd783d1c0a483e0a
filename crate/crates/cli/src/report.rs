//! Analysis reports: the full pipeline over one grading config, its JSON
//! form, and re-verification of a saved report.
//!
//! Matrix indices in reports are one-based, matching the usual `e_{i,j}`
//! notation. Matrices are row-major nested arrays of entry strings.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use gradex_core::coeff::RingSpec;
use gradex_core::decide::{
    brute_force_axiom_check, epsilon_crossed_for, is_epsilon_strong, is_locally_strong, is_strong,
    rank_invariants, Answer, Certificate, Property, RankCertificate, Verdict, DEFAULT_DEGREE_BOUND,
};
use gradex_core::grading::GradingDescriptor;
use gradex_core::groups::{GroupElement, GroupSpec};
use gradex_core::matrixring::{epsilon, Matrix, WitnessPair};
use serde::{Deserialize, Serialize};

use crate::config::{GradingConfig, Resolved};
use crate::error::{CliError, Result};

pub type Rows = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub config: GradingConfig,
    /// `very_good`, `good` or `product`.
    pub grading_kind: String,
    pub group: String,
    pub very_good: bool,
    /// `degree_table[i][j] = deg(e_{i+1,j+1})`.
    pub degree_table: Rows,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree_classes: Option<Vec<DegreeClassJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub supp_v: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit_degree_support: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon_table: Option<Vec<EpsilonJson>>,
    pub verdicts: VerdictsJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_certificate: Option<RankJson>,
    pub axiom_check: AxiomJson,
}

/// `X_g`, one-based, in group order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeClassJson {
    pub g: String,
    pub indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EpsilonJson {
    pub g: String,
    pub left_set: Vec<usize>,
    pub right_set: Vec<usize>,
    pub epsilon: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictsJson {
    pub locally_strong: Vec<VerdictJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strong: Option<VerdictJson>,
    pub epsilon_strong: VerdictJson,
    pub epsilon_crossed: VerdictJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub property: String,
    pub answer: Answer,
    pub certificate: Option<CertificateJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankJson {
    pub class_sizes: BTreeMap<String, usize>,
    pub rank_se: usize,
    pub supp_size: usize,
    pub lhs: usize,
    pub rhs: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub g: String,
    pub a: Rows,
    pub b: Rows,
    /// `A·B`, equal to `ε_g`.
    pub ab: Rows,
    /// `B·A`, equal to `ε_{-g}`.
    pub ba: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeMatrixJson {
    pub g: String,
    pub matrix: Rows,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertificateJson {
    RowWitnesses {
        g: String,
        columns: Vec<usize>,
    },
    MissingRowDegree {
        g: String,
        row: usize,
    },
    Coverage {
        indices: BTreeMap<String, usize>,
    },
    UncoveredDegree {
        g: String,
    },
    InfiniteGroup,
    EpsilonTable {
        entries: Vec<DegreeMatrixJson>,
    },
    VanishingComponent {
        g: String,
        element: Rows,
    },
    WitnessSet {
        pairs: Vec<WitnessJson>,
    },
    Rank(RankJson),
    ClassSizeTable {
        class_sizes: BTreeMap<String, usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomJson {
    pub degree_bound: u32,
    pub passed: bool,
    pub products_checked: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

/// Which verdict drives the exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PropertySelector {
    LocallyStrong(String),
    Strong,
    EpsilonStrong,
    EpsilonCrossed,
}

impl FromStr for PropertySelector {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Ok(match s {
            "strong" => PropertySelector::Strong,
            "epsilon-strong" => PropertySelector::EpsilonStrong,
            "epsilon-crossed" => PropertySelector::EpsilonCrossed,
            other => {
                let g = other
                    .strip_prefix("locally-strong=")
                    .or_else(|| other.strip_prefix("locally-strong(").and_then(|r| r.strip_suffix(')')))
                    .ok_or_else(|| {
                        CliError::Usage(format!(
                            "unknown property `{other}`; expected epsilon-crossed, epsilon-strong, strong or locally-strong=<g>"
                        ))
                    })?;
                PropertySelector::LocallyStrong(g.to_string())
            }
        })
    }
}

fn property_name(p: &Property, group: &GroupSpec) -> String {
    match p {
        Property::LocallyStrong(g) => format!("locally-strong({})", group.format_element(g)),
        Property::Strong => "strong".into(),
        Property::EpsilonStrong => "epsilon-strong".into(),
        Property::EpsilonCrossed => "epsilon-crossed".into(),
    }
}

fn parse_property(s: &str, group: &GroupSpec) -> Result<Property> {
    Ok(match s.parse::<PropertySelector>()? {
        PropertySelector::LocallyStrong(g) => Property::LocallyStrong(group.parse_element(&g)?),
        PropertySelector::Strong => Property::Strong,
        PropertySelector::EpsilonStrong => Property::EpsilonStrong,
        PropertySelector::EpsilonCrossed => Property::EpsilonCrossed,
    })
}

fn one_based<I: IntoIterator<Item = usize>>(xs: I) -> Vec<usize> {
    xs.into_iter().map(|i| i + 1).collect()
}

fn zero_based(xs: &[usize]) -> Result<Vec<usize>> {
    xs.iter()
        .map(|&i| {
            i.checked_sub(1)
                .ok_or_else(|| CliError::Usage("report indices are one-based".into()))
        })
        .collect()
}

fn sizes_json(sizes: &BTreeMap<GroupElement, usize>, group: &GroupSpec) -> BTreeMap<String, usize> {
    sizes
        .iter()
        .map(|(g, s)| (group.format_element(g), *s))
        .collect()
}

fn sizes_from_json(
    sizes: &BTreeMap<String, usize>,
    group: &GroupSpec,
) -> Result<BTreeMap<GroupElement, usize>> {
    sizes
        .iter()
        .map(|(g, s)| Ok((group.parse_element(g)?, *s)))
        .collect()
}

impl RankJson {
    pub fn from_certificate(cert: &RankCertificate, group: &GroupSpec) -> Self {
        RankJson {
            class_sizes: sizes_json(&cert.class_sizes, group),
            rank_se: cert.rank_se,
            supp_size: cert.supp_size,
            lhs: cert.lhs,
            rhs: cert.rhs,
        }
    }

    fn to_certificate(&self, group: &GroupSpec) -> Result<RankCertificate> {
        Ok(RankCertificate {
            class_sizes: sizes_from_json(&self.class_sizes, group)?,
            rank_se: self.rank_se,
            supp_size: self.supp_size,
            lhs: self.lhs,
            rhs: self.rhs,
        })
    }
}

impl CertificateJson {
    pub fn from_certificate(cert: &Certificate, group: &GroupSpec) -> Result<Self> {
        let fmt = |g: &GroupElement| group.format_element(g);
        Ok(match cert {
            Certificate::RowWitnesses { g, columns } => CertificateJson::RowWitnesses {
                g: fmt(g),
                columns: one_based(columns.iter().copied()),
            },
            Certificate::MissingRowDegree { g, row } => CertificateJson::MissingRowDegree {
                g: fmt(g),
                row: row + 1,
            },
            Certificate::Coverage(cover) => CertificateJson::Coverage {
                indices: cover.iter().map(|(g, i)| (fmt(g), i + 1)).collect(),
            },
            Certificate::UncoveredDegree(g) => CertificateJson::UncoveredDegree { g: fmt(g) },
            Certificate::InfiniteGroup => CertificateJson::InfiniteGroup,
            Certificate::EpsilonTable(table) => CertificateJson::EpsilonTable {
                entries: table
                    .iter()
                    .map(|(g, m)| DegreeMatrixJson {
                        g: fmt(g),
                        matrix: m.to_text_rows(),
                    })
                    .collect(),
            },
            Certificate::VanishingComponent { g, element } => CertificateJson::VanishingComponent {
                g: fmt(g),
                element: element.to_text_rows(),
            },
            Certificate::WitnessSet(pairs) => CertificateJson::WitnessSet {
                pairs: pairs
                    .iter()
                    .map(|(g, w)| {
                        Ok(WitnessJson {
                            g: fmt(g),
                            a: w.a.to_text_rows(),
                            b: w.b.to_text_rows(),
                            ab: w.a.mul(&w.b)?.to_text_rows(),
                            ba: w.b.mul(&w.a)?.to_text_rows(),
                        })
                    })
                    .collect::<Result<_>>()?,
            },
            Certificate::Rank(cert) => {
                CertificateJson::Rank(RankJson::from_certificate(cert, group))
            }
            Certificate::ClassSizeTable(sizes) => CertificateJson::ClassSizeTable {
                class_sizes: sizes_json(sizes, group),
            },
        })
    }

    /// Rebuilds the typed certificate. Witness pairs whose embedded products
    /// disagree with the actual products are rejected here.
    pub fn to_certificate(&self, group: &GroupSpec, ring: &RingSpec) -> Result<Certificate> {
        let el = |s: &str| group.parse_element(s).map_err(CliError::from);
        let mat = |rows: &Rows| Matrix::parse_rows(ring, rows).map_err(CliError::from);
        Ok(match self {
            CertificateJson::RowWitnesses { g, columns } => Certificate::RowWitnesses {
                g: el(g)?,
                columns: zero_based(columns)?,
            },
            CertificateJson::MissingRowDegree { g, row } => Certificate::MissingRowDegree {
                g: el(g)?,
                row: zero_based(&[*row])?[0],
            },
            CertificateJson::Coverage { indices } => Certificate::Coverage(
                indices
                    .iter()
                    .map(|(g, i)| Ok((el(g)?, zero_based(&[*i])?[0])))
                    .collect::<Result<_>>()?,
            ),
            CertificateJson::UncoveredDegree { g } => Certificate::UncoveredDegree(el(g)?),
            CertificateJson::InfiniteGroup => Certificate::InfiniteGroup,
            CertificateJson::EpsilonTable { entries } => Certificate::EpsilonTable(
                entries
                    .iter()
                    .map(|e| Ok((el(&e.g)?, mat(&e.matrix)?)))
                    .collect::<Result<_>>()?,
            ),
            CertificateJson::VanishingComponent { g, element } => Certificate::VanishingComponent {
                g: el(g)?,
                element: mat(element)?,
            },
            CertificateJson::WitnessSet { pairs } => Certificate::WitnessSet(
                pairs
                    .iter()
                    .map(|w| {
                        let pair = WitnessPair {
                            g: el(&w.g)?,
                            a: mat(&w.a)?,
                            b: mat(&w.b)?,
                        };
                        if pair.a.mul(&pair.b)? != mat(&w.ab)?
                            || pair.b.mul(&pair.a)? != mat(&w.ba)?
                        {
                            return Err(CliError::Algebra(gradex_core::Error::CertificateFailed(
                                format!("embedded products for g = {} do not match", w.g),
                            )));
                        }
                        Ok((pair.g.clone(), pair))
                    })
                    .collect::<Result<_>>()?,
            ),
            CertificateJson::Rank(r) => Certificate::Rank(r.to_certificate(group)?),
            CertificateJson::ClassSizeTable { class_sizes } => {
                Certificate::ClassSizeTable(sizes_from_json(class_sizes, group)?)
            }
        })
    }
}

impl VerdictJson {
    pub fn from_verdict(v: &Verdict, group: &GroupSpec) -> Result<Self> {
        Ok(VerdictJson {
            property: property_name(&v.property, group),
            answer: v.answer,
            certificate: v
                .certificate
                .as_ref()
                .map(|c| CertificateJson::from_certificate(c, group))
                .transpose()?,
        })
    }

    pub fn to_verdict(&self, group: &GroupSpec, ring: &RingSpec) -> Result<Verdict> {
        Ok(Verdict {
            property: parse_property(&self.property, group)?,
            answer: self.answer,
            certificate: self
                .certificate
                .as_ref()
                .map(|c| c.to_certificate(group, ring))
                .transpose()?,
        })
    }
}

/// Runs every decision procedure on the grading described by `config`.
pub fn analyze(config: &GradingConfig) -> Result<AnalysisReport> {
    let Resolved { grading, ring } = config.resolve()?;
    let group = grading.group();
    let fmt = |g: &GroupElement| group.format_element(g);
    let n = grading.n();
    let degree_bound = config.degree_bound.unwrap_or(DEFAULT_DEGREE_BOUND);

    let degree_table = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| Ok(fmt(&grading.unit_degree(i, j)?)))
                .collect()
        })
        .collect::<Result<Rows>>()?;
    let very_good = grading.as_very_good(&ring)?;

    let mut locally_strong = Vec::new();
    let mut strong = None;
    let mut degree_classes = None;
    let mut supp_v = None;
    let mut unit_degree_support = None;
    let mut epsilon_table = None;
    let mut rank_certificate = None;
    if let Some(vg) = &very_good {
        let classes = vg.x_classes();
        degree_classes = Some(
            classes
                .classes
                .iter()
                .map(|(g, idx)| DegreeClassJson {
                    g: fmt(g),
                    indices: one_based(idx.iter().copied()),
                })
                .collect(),
        );
        supp_v = Some(classes.supp_v.iter().map(fmt).collect());
        let support = vg.unit_degree_support();
        unit_degree_support = Some(support.iter().map(fmt).collect());
        let mut table = Vec::new();
        for g in &support {
            let data = epsilon(vg, g, &ring)?;
            table.push(EpsilonJson {
                g: fmt(g),
                left_set: one_based(data.left_set.iter().copied()),
                right_set: one_based(data.right_set.iter().copied()),
                epsilon: data.epsilon.to_text_rows(),
            });
            locally_strong.push(VerdictJson::from_verdict(
                &is_locally_strong(vg, g)?,
                &group,
            )?);
        }
        epsilon_table = Some(table);
        strong = Some(VerdictJson::from_verdict(&is_strong(vg)?, &group)?);
        rank_certificate = Some(RankJson::from_certificate(&rank_invariants(vg), &group));
    }

    let axiom = brute_force_axiom_check(&grading, &ring, degree_bound)?;
    let axiom_check = AxiomJson {
        degree_bound,
        passed: axiom.passed(),
        products_checked: axiom.products_checked,
        failure: axiom.failure.map(|f| {
            format!(
                "e_{{{},{}}} * e_{{{},{}}} is not in degree {} (found {:?})",
                f.left.0 + 1,
                f.left.1 + 1,
                f.right.0 + 1,
                f.right.1 + 1,
                fmt(&f.expected),
                f.found.iter().map(fmt).collect::<Vec<_>>()
            )
        }),
    };

    Ok(AnalysisReport {
        config: config.clone(),
        grading_kind: match grading {
            GradingDescriptor::VeryGood(_) => "very_good",
            GradingDescriptor::Good(_) => "good",
            GradingDescriptor::Product(_) => "product",
        }
        .into(),
        group: group.to_string(),
        very_good: very_good.is_some(),
        degree_table,
        degree_classes,
        supp_v,
        unit_degree_support,
        epsilon_table,
        verdicts: VerdictsJson {
            locally_strong,
            strong,
            epsilon_strong: VerdictJson::from_verdict(
                &is_epsilon_strong(&grading, &ring)?,
                &group,
            )?,
            epsilon_crossed: VerdictJson::from_verdict(
                &epsilon_crossed_for(&grading, &ring)?,
                &group,
            )?,
        },
        rank_certificate,
        axiom_check,
    })
}

impl AnalysisReport {
    /// The answer for the selected property. A locally-strong degree not yet
    /// in the report is decided and appended.
    pub fn select(&mut self, selector: &PropertySelector) -> Result<Answer> {
        Ok(match selector {
            PropertySelector::EpsilonCrossed => self.verdicts.epsilon_crossed.answer,
            PropertySelector::EpsilonStrong => self.verdicts.epsilon_strong.answer,
            PropertySelector::Strong => self
                .verdicts
                .strong
                .as_ref()
                .map_or(Answer::Unknown, |v| v.answer),
            PropertySelector::LocallyStrong(text) => {
                let Resolved { grading, ring } = self.config.resolve()?;
                let Some(vg) = grading.as_very_good(&ring)? else {
                    return Ok(Answer::Unknown);
                };
                let group = vg.group().clone();
                let g = group.parse_element(text)?;
                let name = property_name(&Property::LocallyStrong(g.clone()), &group);
                if let Some(v) = self
                    .verdicts
                    .locally_strong
                    .iter()
                    .find(|v| v.property == name)
                {
                    return Ok(v.answer);
                }
                let v = VerdictJson::from_verdict(&is_locally_strong(&vg, &g)?, &group)?;
                let answer = v.answer;
                self.verdicts.locally_strong.push(v);
                answer
            }
        })
    }

    pub fn all_verdicts(&self) -> impl Iterator<Item = &VerdictJson> {
        self.verdicts
            .locally_strong
            .iter()
            .chain(self.verdicts.strong.as_ref())
            .chain([
                &self.verdicts.epsilon_strong,
                &self.verdicts.epsilon_crossed,
            ])
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let c = &self.config;
        let _ = writeln!(
            s,
            "grading: {} over {} on M_{}({})",
            self.grading_kind,
            self.group,
            c.config_n(),
            c.ring
        );
        if let Some(t) = &c.tuple {
            let _ = writeln!(s, "tuple: ({})", t.join(", "));
        }
        if let Some(f) = &c.offdiagonal {
            let _ = writeln!(s, "offdiagonal: ({})", f.join(", "));
        }
        let _ = writeln!(s, "very good: {}", self.very_good);
        let _ = writeln!(s, "unit degrees:");
        for row in &self.degree_table {
            let _ = writeln!(s, "  {}", row.join("  "));
        }
        if let Some(classes) = &self.degree_classes {
            let parts: Vec<String> = classes
                .iter()
                .map(|c| format!("X_{} = {:?}", c.g, c.indices))
                .collect();
            let _ = writeln!(s, "degree classes: {}", parts.join(", "));
        }
        if let Some(table) = &self.epsilon_table {
            for e in table {
                let _ = writeln!(s, "eps_{} = sum of e_ii for i in {:?}", e.g, e.left_set);
            }
        }
        if let Some(r) = &self.rank_certificate {
            let _ = writeln!(
                s,
                "rank: class sizes {:?}, Rank(S_e) = {}, |Supp(V)| = {}, n^2 = {} vs {}",
                r.class_sizes, r.rank_se, r.supp_size, r.lhs, r.rhs
            );
        }
        let _ = writeln!(
            s,
            "grading axioms: {} ({} products{})",
            if self.axiom_check.passed {
                "pass"
            } else {
                "FAIL"
            },
            self.axiom_check.products_checked,
            self.axiom_check
                .failure
                .as_ref()
                .map(|f| format!("; {f}"))
                .unwrap_or_default()
        );
        for v in self.all_verdicts() {
            let kind = match &v.certificate {
                Some(c) => serde_json::to_value(c)
                    .ok()
                    .and_then(|j| j.get("kind").and_then(|k| k.as_str()).map(str::to_string))
                    .unwrap_or_default(),
                None => "none".into(),
            };
            let _ = writeln!(s, "{}: {:?} [certificate: {}]", v.property, v.answer, kind);
        }
        s
    }
}

impl GradingConfig {
    fn config_n(&self) -> usize {
        self.n
    }
}

/// Result of re-checking one verdict from a loaded report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reverification {
    pub property: String,
    pub answer: Answer,
    pub certificate_ok: bool,
    /// A fresh run of the decision procedure gives the same answer.
    pub answer_reproduced: bool,
}

impl Reverification {
    pub fn ok(&self) -> bool {
        self.certificate_ok && self.answer_reproduced
    }
}

/// Re-checks every certificate in a report against the grading rebuilt from
/// its config, and recomputes every answer.
pub fn verify_report(report: &AnalysisReport) -> Result<Vec<Reverification>> {
    let Resolved { grading, ring } = report.config.resolve()?;
    let group = grading.group();
    let fresh = analyze(&report.config)?;
    let mut out = Vec::new();
    for v in report.all_verdicts() {
        let certificate_ok = match v.to_verdict(&group, &ring) {
            Ok(verdict) => verdict.verify(&grading, &ring)?,
            Err(CliError::Algebra(gradex_core::Error::CertificateFailed(_))) => false,
            Err(e) => return Err(e),
        };
        let answer_reproduced = match parse_property(&v.property, &group)? {
            Property::LocallyStrong(g) => {
                let vg = grading.as_very_good(&ring)?.ok_or_else(|| {
                    CliError::Usage(
                        "locally-strong verdict on a grading that is not very good".into(),
                    )
                })?;
                is_locally_strong(&vg, &g)?.answer == v.answer
            }
            Property::Strong => fresh.verdicts.strong.as_ref().map(|s| s.answer) == Some(v.answer),
            Property::EpsilonStrong => fresh.verdicts.epsilon_strong.answer == v.answer,
            Property::EpsilonCrossed => fresh.verdicts.epsilon_crossed.answer == v.answer,
        };
        out.push(Reverification {
            property: v.property.clone(),
            answer: v.answer,
            certificate_ok,
            answer_reproduced,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(text: &str) -> GradingConfig {
        GradingConfig::parse(text, "inline").unwrap()
    }

    const EXAMPLE_B: &str = "group = \"Z\"\nn = 3\ntuple = [\"0\", \"-1\", \"-2\"]\nring = \"Q\"\n";

    #[test]
    fn example_b_report() {
        let report = analyze(&config(EXAMPLE_B)).unwrap();
        assert_eq!(report.verdicts.epsilon_crossed.answer, Answer::Yes);
        assert_eq!(report.verdicts.epsilon_strong.answer, Answer::Yes);
        assert_eq!(report.verdicts.strong.as_ref().unwrap().answer, Answer::No);
        assert_eq!(report.degree_table[0], ["0", "1", "2"]);
        match &report.verdicts.epsilon_crossed.certificate {
            Some(CertificateJson::WitnessSet { pairs }) => assert_eq!(pairs.len(), 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(verify_report(&report)
            .unwrap()
            .iter()
            .all(Reverification::ok));
    }

    #[test]
    fn json_round_trip_reverifies() {
        let report = analyze(&config(EXAMPLE_B)).unwrap();
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
        assert!(verify_report(&back).unwrap().iter().all(Reverification::ok));
    }

    #[test]
    fn forged_report_fails_reverification() {
        let mut report = analyze(&config(EXAMPLE_B)).unwrap();
        if let Some(CertificateJson::WitnessSet { pairs }) =
            &mut report.verdicts.epsilon_crossed.certificate
        {
            pairs[0].a[0][0] = "5".into();
        }
        let lines = verify_report(&report).unwrap();
        assert!(lines.iter().any(|l| !l.certificate_ok));

        let mut report = analyze(&config(EXAMPLE_B)).unwrap();
        report.verdicts.strong.as_mut().unwrap().answer = Answer::Yes;
        let lines = verify_report(&report).unwrap();
        assert!(lines.iter().any(|l| l.property == "strong" && !l.ok()));
    }

    #[test]
    fn property_selection() {
        let mut report = analyze(&config(EXAMPLE_B)).unwrap();
        assert_eq!(
            report.select(&"strong".parse().unwrap()).unwrap(),
            Answer::No
        );
        assert_eq!(
            report.select(&"locally-strong=0".parse().unwrap()).unwrap(),
            Answer::Yes
        );
        assert_eq!(
            report.select(&"locally-strong=7".parse().unwrap()).unwrap(),
            Answer::No
        );
        assert!("bogus".parse::<PropertySelector>().is_err());
    }

    #[test]
    fn text_summary_mentions_verdicts() {
        let report = analyze(&config(EXAMPLE_B)).unwrap();
        let text = report.to_text();
        assert!(
            text.contains("epsilon-crossed: Yes [certificate: witness_set]"),
            "{text}"
        );
        assert!(
            text.contains("strong: No [certificate: infinite_group]"),
            "{text}"
        );
    }
}
