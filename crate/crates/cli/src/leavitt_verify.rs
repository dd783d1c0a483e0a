//! Checks that the 3x3 matrix
//!
//! ```text
//!     | 0   0   y1 |
//! C = | 0   0   y2 |
//!     | x1  x2  0  |
//! ```
//!
//! over `L(1,2)` squares to the identity, so that `M_3(L(1,2))` graded by
//! `(0, 0, 1)` over `Z/2` has an invertible element of degree 1.

use gradex_core::coeff::leavitt::{format_formal_products, LeavittElement};
use gradex_core::coeff::{RingElement, RingSpec};
use gradex_core::grading::{GradingDescriptor, VeryGoodGrading};
use gradex_core::matrixring::{homogeneous_degree, Matrix};
use serde::Serialize;

use crate::error::Result;

pub const C_ROWS: [[&str; 3]; 3] = [["0", "0", "y1"], ["0", "0", "y2"], ["x1", "x2", "0"]];

#[derive(Debug, Clone, Serialize)]
pub struct EntryTrace {
    /// One-based position in `C^2`.
    pub row: usize,
    pub col: usize,
    /// `Σ_k C[row][k] C[k][col]` before rewriting.
    pub unreduced: String,
    pub normal_form: String,
    pub expected: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LeavittReport {
    pub matrix: Vec<Vec<String>>,
    pub square: Vec<Vec<String>>,
    pub entries: Vec<EntryTrace>,
    pub degree_of_c: Option<String>,
    pub degree_of_square: Option<String>,
    pub square_is_identity: bool,
    pub invertible_in_degree_one: bool,
}

fn as_leavitt(r: &RingElement) -> LeavittElement {
    match r {
        RingElement::Leavitt(e) => e.clone(),
        other => unreachable!("non-Leavitt entry {other:?}"),
    }
}

pub fn run() -> Result<LeavittReport> {
    let ring: RingSpec = "L(1,2)".parse()?;
    let rows: Vec<Vec<&str>> = C_ROWS.iter().map(|r| r.to_vec()).collect();
    let c = Matrix::parse_rows(&ring, &rows)?;
    let square = c.mul(&c)?;

    let mut entries = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let factors: Vec<(LeavittElement, LeavittElement)> = (0..3)
                .map(|k| (as_leavitt(c.get(i, k)), as_leavitt(c.get(k, j))))
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .collect();
            let refs: Vec<(&LeavittElement, &LeavittElement)> =
                factors.iter().map(|(a, b)| (a, b)).collect();
            let unreduced = if refs.is_empty() {
                "0".to_string()
            } else {
                format_formal_products(&refs)
            };
            let normal_form = ring.format_element(square.get(i, j));
            let expected = if i == j { "1" } else { "0" }.to_string();
            entries.push(EntryTrace {
                row: i + 1,
                col: j + 1,
                ok: normal_form == expected,
                unreduced,
                normal_form,
                expected,
            });
        }
    }

    let group = "Z/2".parse()?;
    let vg = VeryGoodGrading::parse(group, &["0", "0", "1"])?;
    let grading = GradingDescriptor::VeryGood(vg.clone());
    let fmt =
        |g: Option<gradex_core::groups::GroupElement>| g.map(|g| vg.group().format_element(&g));
    let degree_of_c = fmt(homogeneous_degree(&c, &grading)?);
    let degree_of_square = fmt(homogeneous_degree(&square, &grading)?);
    let square_is_identity = square == Matrix::identity(&ring, 3);

    Ok(LeavittReport {
        matrix: c.to_text_rows(),
        square: square.to_text_rows(),
        invertible_in_degree_one: square_is_identity && degree_of_c.as_deref() == Some("1"),
        entries,
        degree_of_c,
        degree_of_square,
        square_is_identity,
    })
}

impl LeavittReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.ok)
            && self.square_is_identity
            && self.degree_of_c.as_deref() == Some("1")
            && self.degree_of_square.as_deref() == Some("0")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("C over L(1,2), graded by (0,0,1) over Z/2\n");
        for e in &self.entries {
            s.push_str(&format!(
                "(C^2)[{},{}] = {} -> {} [{}]\n",
                e.row,
                e.col,
                e.unreduced,
                e.normal_form,
                if e.ok { "ok" } else { "MISMATCH" }
            ));
        }
        s.push_str(&format!(
            "deg C = {}, deg C^2 = {}\n",
            self.degree_of_c.as_deref().unwrap_or("not homogeneous"),
            self.degree_of_square
                .as_deref()
                .unwrap_or("not homogeneous")
        ));
        s.push_str(if self.invertible_in_degree_one {
            "C is an invertible element of degree 1 (C^-1 = C)\n"
        } else {
            "no invertible element of degree 1 found\n"
        });
        s
    }
}
