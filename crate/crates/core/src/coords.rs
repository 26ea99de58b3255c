//! Exact-rational Kashaev, shear, and lambda-length coordinates and their
//! changes under the elementary moves.
//!
//! All coordinates are kept multiplicatively (the exponentials of the
//! additive quantities), so every change-of-coordinate formula is
//! subtraction-free and stays inside the positive rationals.

use crate::error::{Error, Result};
use crate::exchange::{frame_for_edge, CaseLabel, ExchangeFrame};
use crate::rat::{is_positive, Rat};
use crate::surface::{DecoratedTriangulation, Move};
use num_traits::One;

/// Per-triangle pairs (y, z), all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KashaevCoords(Vec<(Rat, Rat)>);

/// Per-triangle side triples (h0, h1, h2) with h0 h1 h2 = 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HCoords(pub Vec<[Rat; 3]>);

/// Per-edge exponential shear coordinates, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShearCoords(Vec<Rat>);

/// Per-edge lambda lengths, all positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaLengths(Vec<Rat>);

impl KashaevCoords {
    pub fn new(values: Vec<(Rat, Rat)>) -> Result<Self> {
        if values.iter().any(|(y, z)| !is_positive(y) || !is_positive(z)) {
            return Err(Error::InvalidInput("Kashaev coordinates must be positive".into()));
        }
        Ok(KashaevCoords(values))
    }

    pub fn ones(num_triangles: usize) -> Self {
        KashaevCoords(vec![(Rat::one(), Rat::one()); num_triangles])
    }

    pub fn values(&self) -> &[(Rat, Rat)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl ShearCoords {
    pub fn new(values: Vec<Rat>) -> Result<Self> {
        if values.iter().any(|x| !is_positive(x)) {
            return Err(Error::InvalidInput("shear coordinates must be positive".into()));
        }
        Ok(ShearCoords(values))
    }

    pub fn values(&self) -> &[Rat] {
        &self.0
    }
}

impl LambdaLengths {
    pub fn new(values: Vec<Rat>) -> Result<Self> {
        if values.iter().any(|x| !is_positive(x)) {
            return Err(Error::InvalidInput("lambda lengths must be positive".into()));
        }
        Ok(LambdaLengths(values))
    }

    pub fn ones(num_edges: usize) -> Self {
        LambdaLengths(vec![Rat::one(); num_edges])
    }

    pub fn values(&self) -> &[Rat] {
        &self.0
    }
}

/// Kashaev coordinate change along a move (reindexing, mark rotation with
/// (y, z) -> (z/y, 1/y), or diagonal exchange through the common denominator
/// D = y_i y_j + z_i z_j).
pub fn kashaev_change(
    coords: &KashaevCoords,
    mv: &Move,
    tau: &DecoratedTriangulation,
) -> Result<KashaevCoords> {
    tau.check_applicable(mv)?;
    if coords.len() != tau.num_triangles() {
        return Err(Error::InvalidInput("coordinate length mismatch".into()));
    }
    let mut v = coords.0.clone();
    match mv {
        Move::Reindex(perm) => {
            v = perm.iter().map(|&p| coords.0[p].clone()).collect();
        }
        Move::MarkRotation(i) => {
            let (y, z) = &coords.0[*i];
            v[*i] = (z / y, y.recip());
        }
        Move::DiagonalExchange(i, j) => {
            let (yi, zi) = coords.0[*i].clone();
            let (yj, zj) = coords.0[*j].clone();
            let d = &yi * &yj + &zi * &zj;
            v[*i] = (&zj / &d, &yi / &d);
            v[*j] = (&zi / &d, &yj / &d);
        }
    }
    Ok(KashaevCoords(v))
}

/// h-variables of a Kashaev vector: per triangle (y/z, z, 1/y).
pub fn to_h(coords: &KashaevCoords) -> HCoords {
    HCoords(
        coords
            .0
            .iter()
            .map(|(y, z)| [y / z, z.clone(), y.recip()])
            .collect(),
    )
}

/// Shear coordinates from Kashaev coordinates: x_e is the product of the two
/// h-values at the side slots bounded by edge e (the same triangle may
/// contribute both).
pub fn shear_from_kashaev(
    coords: &KashaevCoords,
    tau: &DecoratedTriangulation,
) -> Result<ShearCoords> {
    if coords.len() != tau.num_triangles() {
        return Err(Error::InvalidInput("coordinate length mismatch".into()));
    }
    let h = to_h(coords);
    let x = tau
        .edge_slots()
        .iter()
        .map(|&[a, b]| &h.0[a.tri][a.side as usize] * &h.0[b.tri][b.side as usize])
        .collect();
    ShearCoords::new(x)
}

/// Kashaev coordinates from lambda lengths: per triangle,
/// y = l(side 1)/l(side 0) and z = l(side 2)/l(side 0).
pub fn kashaev_from_penner(
    lengths: &LambdaLengths,
    tau: &DecoratedTriangulation,
) -> Result<KashaevCoords> {
    if lengths.0.len() != tau.num_edges() {
        return Err(Error::InvalidInput("lambda length mismatch".into()));
    }
    let v = tau
        .triangles()
        .iter()
        .map(|t| {
            let l0 = &lengths.0[t.sides[0]];
            (&lengths.0[t.sides[1]] / l0, &lengths.0[t.sides[2]] / l0)
        })
        .collect();
    KashaevCoords::new(v)
}

/// Ptolemy transformation of lambda lengths under the exchange of triangles
/// (i, j): the new diagonal gets (l_a l_c + l_b l_d) / l_diag, with a, b the
/// side-1/side-2 edges of triangle i and c, d those of triangle j.
pub fn ptolemy_exchange(
    lengths: &LambdaLengths,
    tau: &DecoratedTriangulation,
    i: usize,
    j: usize,
) -> Result<LambdaLengths> {
    tau.check_applicable(&Move::DiagonalExchange(i, j))?;
    if lengths.0.len() != tau.num_edges() {
        return Err(Error::InvalidInput("lambda length mismatch".into()));
    }
    let a = &lengths.0[tau.edge_at(i, 1)];
    let b = &lengths.0[tau.edge_at(i, 2)];
    let c = &lengths.0[tau.edge_at(j, 1)];
    let d = &lengths.0[tau.edge_at(j, 2)];
    let diag = tau.edge_at(i, 0);
    let mut out = lengths.0.clone();
    out[diag] = (a * c + b * d) / &lengths.0[diag];
    Ok(LambdaLengths(out))
}

/// Lambda lengths along an arbitrary move: only a flip changes them.
pub fn lambda_change(
    lengths: &LambdaLengths,
    mv: &Move,
    tau: &DecoratedTriangulation,
) -> Result<LambdaLengths> {
    tau.check_applicable(mv)?;
    match mv {
        Move::DiagonalExchange(i, j) => ptolemy_exchange(lengths, tau, *i, *j),
        _ => Ok(lengths.clone()),
    }
}

/// Shear coordinate change for the flip at `edge`, by the eight-case
/// formulas. `case` must match the classification of the flip.
pub fn shear_change(
    coords: &ShearCoords,
    tau: &DecoratedTriangulation,
    edge: usize,
    case: CaseLabel,
) -> Result<ShearCoords> {
    let frame = frame_for_edge(tau, edge)?;
    if frame.case != case {
        return Err(Error::NotApplicable(format!(
            "flip at edge {edge} classifies as {:?}, not {case:?}",
            frame.case
        )));
    }
    if coords.0.len() != tau.num_edges() {
        return Err(Error::InvalidInput("shear coordinate mismatch".into()));
    }
    Ok(apply_shear_frame(coords, &frame))
}

fn apply_shear_frame(coords: &ShearCoords, frame: &ExchangeFrame) -> ShearCoords {
    let xi = coords.0[frame.diag].clone();
    let one = Rat::one();
    let grow = &one + &xi; // 1 + x_i
    let shrink = (&one + &xi.recip()).recip(); // (1 + x_i^-1)^-1
    let mut out = coords.0.clone();
    out[frame.diag] = xi.recip();
    let mut mul = |e: usize, f: &Rat| {
        let v = &out[e] * f;
        out[e] = v;
    };
    match frame.case {
        CaseLabel::Case1 => {
            mul(frame.edge_j, &grow);
            mul(frame.edge_k, &shrink);
            mul(frame.edge_l, &grow);
            mul(frame.edge_m, &shrink);
        }
        CaseLabel::Case2 => {
            mul(frame.edge_j, &xi);
            mul(frame.edge_l, &grow);
            mul(frame.edge_m, &shrink);
        }
        CaseLabel::Case3 => {
            mul(frame.edge_j, &xi);
            mul(frame.edge_k, &shrink);
            mul(frame.edge_l, &grow);
        }
        CaseLabel::Case4 => {
            mul(frame.edge_j, &(&grow * &grow));
            mul(frame.edge_k, &shrink);
            mul(frame.edge_m, &shrink);
        }
        CaseLabel::Case5 => {
            mul(frame.edge_j, &grow);
            mul(frame.edge_k, &(&shrink * &shrink));
            mul(frame.edge_l, &grow);
        }
        CaseLabel::Case6 => {
            mul(frame.edge_j, &xi);
            mul(frame.edge_l, &xi);
        }
        CaseLabel::Case7 => {
            mul(frame.edge_j, &xi);
            mul(frame.edge_k, &xi);
        }
        CaseLabel::Case8 => {
            mul(frame.edge_j, &(&grow * &grow));
            mul(frame.edge_k, &(&shrink * &shrink));
        }
    }
    ShearCoords(out)
}

/// Shear coordinates along an arbitrary move: reindexings and mark rotations
/// are invisible to them, a flip applies the eight-case formulas.
pub fn shear_change_for_move(
    coords: &ShearCoords,
    mv: &Move,
    tau: &DecoratedTriangulation,
) -> Result<ShearCoords> {
    tau.check_applicable(mv)?;
    match mv {
        Move::DiagonalExchange(i, _) => {
            let edge = tau.edge_at(*i, 0);
            let frame = frame_for_edge(tau, edge)?;
            if coords.0.len() != tau.num_edges() {
                return Err(Error::InvalidInput("shear coordinate mismatch".into()));
            }
            Ok(apply_shear_frame(coords, &frame))
        }
        _ => Ok(coords.clone()),
    }
}

/// Commutativity of the square relating Kashaev and shear coordinate changes
/// along `mv`: both compositions are computed exactly and compared.
pub fn check_compat_diagram(
    tau: &DecoratedTriangulation,
    mv: &Move,
    coords: &KashaevCoords,
) -> Result<bool> {
    let tau2 = tau.apply_move(mv)?;
    let via_kashaev = shear_from_kashaev(&kashaev_change(coords, mv, tau)?, &tau2)?;
    let via_shear = shear_change_for_move(&shear_from_kashaev(coords, tau)?, mv, tau)?;
    Ok(via_kashaev == via_shear)
}

/// Commutativity of the square relating lambda-length and Kashaev changes.
pub fn penner_compat_check(
    tau: &DecoratedTriangulation,
    mv: &Move,
    lengths: &LambdaLengths,
) -> Result<bool> {
    let tau2 = tau.apply_move(mv)?;
    let via_penner = kashaev_from_penner(&lambda_change(lengths, mv, tau)?, &tau2)?;
    let via_kashaev = kashaev_change(&kashaev_from_penner(lengths, tau)?, mv, tau)?;
    Ok(via_penner == via_kashaev)
}
