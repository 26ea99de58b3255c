//! Classification of diagonal exchanges into the eight identification cases.
//!
//! A flip at edge e involves, besides e, the four outer sides of the
//! quadrilateral: with the left triangle mu and right triangle nu (both with
//! e at side 0), edge j bounds side 1 of mu, m side 2 of mu, l side 1 of nu
//! and k side 2 of nu. The case records which of j, k, l, m coincide. The
//! possible coincidence patterns are exactly the partial matchings on the
//! four labels; patterns {l,m} and {k,l} are brought to {j,k} and {j,m} by
//! swapping the roles of mu and nu, which leaves the case formulas invariant.

use crate::error::{Error, Result};
use crate::surface::{DecoratedTriangulation, Move};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseLabel {
    Case1,
    Case2,
    Case3,
    Case4,
    Case5,
    Case6,
    Case7,
    Case8,
}

impl CaseLabel {
    pub fn index(&self) -> u8 {
        match self {
            CaseLabel::Case1 => 1,
            CaseLabel::Case2 => 2,
            CaseLabel::Case3 => 3,
            CaseLabel::Case4 => 4,
            CaseLabel::Case5 => 5,
            CaseLabel::Case6 => 6,
            CaseLabel::Case7 => 7,
            CaseLabel::Case8 => 8,
        }
    }

    pub fn from_index(i: u8) -> Option<CaseLabel> {
        use CaseLabel::*;
        Some(match i {
            1 => Case1,
            2 => Case2,
            3 => Case3,
            4 => Case4,
            5 => Case5,
            6 => Case6,
            7 => Case7,
            8 => Case8,
            _ => return None,
        })
    }
}

/// Normalized description of one applicable diagonal exchange.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExchangeFrame {
    /// Triangle playing mu (left in the reference picture).
    pub tri_left: usize,
    /// Triangle playing nu.
    pub tri_right: usize,
    /// The flipped edge (side 0 of both triangles).
    pub diag: usize,
    /// Side 1 of mu.
    pub edge_j: usize,
    /// Side 2 of mu.
    pub edge_m: usize,
    /// Side 1 of nu.
    pub edge_l: usize,
    /// Side 2 of nu.
    pub edge_k: usize,
    pub case: CaseLabel,
}

/// Frame for the exchange of triangles (ti, tj), ti playing mu unless the
/// coincidence pattern forces the swapped normalization.
pub fn frame_for_triangles(
    tau: &DecoratedTriangulation,
    ti: usize,
    tj: usize,
) -> Result<ExchangeFrame> {
    tau.check_applicable(&Move::DiagonalExchange(ti, tj))?;
    let diag = tau.edge_at(ti, 0);
    let frame = |mu: usize, nu: usize| {
        (
            tau.edge_at(mu, 1),
            tau.edge_at(mu, 2),
            tau.edge_at(nu, 1),
            tau.edge_at(nu, 2),
        )
    };
    let (mut mu, mut nu) = (ti, tj);
    let (mut j, mut m, mut l, mut k) = frame(ti, tj);
    // Bring the patterns {l==m} and {k==l} to {j==k} and {j==m} by exchanging
    // the roles of mu and nu, which maps (j, m, l, k) to (l, k, j, m).
    let solo_lm = l == m && j != k && j != m && j != l && k != m && k != l;
    let solo_kl = k == l && j != k && j != m && j != l && k != m && l != m;
    if solo_lm || solo_kl {
        std::mem::swap(&mut mu, &mut nu);
        let (nj, nm, nl, nk) = (l, k, j, m);
        (j, m, l, k) = (nj, nm, nl, nk);
    }
    // Each edge has exactly two slots, so the coincidences among the four
    // outer labels form a partial matching; after normalization it is one of
    // the eight listed patterns.
    let case = match (j == k, j == m, j == l, k == m, k == l, l == m) {
        (false, false, false, false, false, false) => CaseLabel::Case1,
        (true, false, false, false, false, false) => CaseLabel::Case2,
        (false, true, false, false, false, false) => CaseLabel::Case3,
        (false, false, true, false, false, false) => CaseLabel::Case4,
        (false, false, false, true, false, false) => CaseLabel::Case5,
        (true, false, false, false, false, true) => CaseLabel::Case6,
        (false, true, false, false, true, false) => CaseLabel::Case7,
        (false, false, true, true, false, false) => CaseLabel::Case8,
        other => unreachable!("impossible identification pattern {other:?}"),
    };
    Ok(ExchangeFrame { tri_left: mu, tri_right: nu, diag, edge_j: j, edge_m: m, edge_l: l, edge_k: k, case })
}

/// Frame for the flip at `edge`, requiring it to sit at side 0 of two
/// distinct triangles; the lower triangle index plays mu before
/// normalization.
pub fn frame_for_edge(tau: &DecoratedTriangulation, edge: usize) -> Result<ExchangeFrame> {
    if edge >= tau.num_edges() {
        return Err(Error::NotApplicable(format!("edge {edge} out of range")));
    }
    let [a, b] = tau.edge_slots()[edge];
    if a.tri == b.tri {
        return Err(Error::NotApplicable(format!(
            "edge {edge} is self-folded on triangle {}",
            a.tri
        )));
    }
    if a.side != 0 || b.side != 0 {
        return Err(Error::NotApplicable(format!(
            "edge {edge} is not opposite both marks"
        )));
    }
    frame_for_triangles(tau, a.tri, b.tri)
}

/// Which of the eight identification patterns holds for the exchange of
/// triangles (i, j).
pub fn classify_exchange(
    tau: &DecoratedTriangulation,
    i: usize,
    j: usize,
) -> Result<CaseLabel> {
    Ok(frame_for_triangles(tau, i, j)?.case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::build_standard;
    use crate::search::find_case_flip;

    #[test]
    fn torus_flip_is_case_8() {
        let t = build_standard(1, 1).unwrap();
        assert_eq!(classify_exchange(&t, 0, 1).unwrap(), CaseLabel::Case8);
        let f = frame_for_triangles(&t, 0, 1).unwrap();
        assert_eq!(f.edge_j, f.edge_l);
        assert_eq!(f.edge_k, f.edge_m);
    }

    #[test]
    fn sphere_flip_is_case_6_or_7() {
        let t = build_standard(0, 3).unwrap();
        let case = classify_exchange(&t, 0, 1).unwrap();
        assert!(matches!(case, CaseLabel::Case6 | CaseLabel::Case7), "got {case:?}");
    }

    #[test]
    fn five_punctured_sphere_reaches_case_1() {
        let t = build_standard(0, 5).unwrap();
        let hit = find_case_flip(&t, CaseLabel::Case1, 4).expect("case 1 reachable");
        let (state, i, j) = hit;
        assert_eq!(classify_exchange(&state, i, j).unwrap(), CaseLabel::Case1);
        let f = frame_for_triangles(&state, i, j).unwrap();
        let outer = [f.edge_j, f.edge_k, f.edge_l, f.edge_m];
        for a in 0..4 {
            for b in (a + 1)..4 {
                assert_ne!(outer[a], outer[b]);
            }
        }
    }

    #[test]
    fn frame_symmetric_under_argument_order_for_case_8() {
        let t = build_standard(1, 1).unwrap();
        let f01 = frame_for_triangles(&t, 0, 1).unwrap();
        let f10 = frame_for_triangles(&t, 1, 0).unwrap();
        assert_eq!(f01.case, f10.case);
        assert_eq!(f01.diag, f10.diag);
    }

    #[test]
    fn edge_frame_agrees_with_triangle_frame() {
        let t = build_standard(1, 1).unwrap();
        let fe = frame_for_edge(&t, t.edge_at(0, 0)).unwrap();
        let ft = frame_for_triangles(&t, 0, 1).unwrap();
        assert_eq!(fe, ft);
    }
}
