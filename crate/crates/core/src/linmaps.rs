//! The additive (log) picture: exact rational matrices for the maps between
//! homology, Kashaev space, shear space, and the reals, plus the linearized
//! lambda-length map.
//!
//! Coordinates of the spaces:
//! - Kashaev space K: (ln y_1, ln z_1, ..., ln y_2m, ln z_2m), dimension 4m;
//! - h-space: (ln h_1^0, ln h_1^1, ln h_1^2, ...), dimension 6m;
//! - shear space: (ln x_1, ..., ln x_3m);
//! - lambda space: half-lengths (u_1, ..., u_3m) with u = delta/2, so the
//!   linearized Penner map has integer entries.

use crate::error::{Error, Result};
use crate::matq::MatQ;
use crate::rat::Rat;
use crate::surface::DecoratedTriangulation;
use num_traits::Zero;

/// Per-triangle block (y, z) -> (y - z, z, -y), assembled over all triangles.
pub fn matrix_m(tau: &DecoratedTriangulation) -> MatQ {
    let m = tau.surface().m();
    let mut out = MatQ::zeros(6 * m, 4 * m);
    for t in 0..2 * m {
        let (y, z) = (2 * t, 2 * t + 1);
        let h = 3 * t;
        out[(h, y)] = crate::rat::rat_int(1);
        out[(h, z)] = crate::rat::rat_int(-1);
        out[(h + 1, z)] = crate::rat::rat_int(1);
        out[(h + 2, y)] = crate::rat::rat_int(-1);
    }
    out
}

/// Slot-sum map from h-space to shear space: ln x_e = sum of the h-values at
/// the two slots of edge e.
pub fn matrix_f2(tau: &DecoratedTriangulation) -> MatQ {
    let mut out = MatQ::zeros(tau.num_edges(), 6 * tau.surface().m());
    for (e, &[a, b]) in tau.edge_slots().iter().enumerate() {
        for slot in [a, b] {
            let col = 3 * slot.tri + slot.side as usize;
            out[(e, col)] += crate::rat::rat_int(1);
        }
    }
    out
}

/// Sum-of-entries functional on shear space.
pub fn matrix_f1(tau: &DecoratedTriangulation) -> MatQ {
    let mut out = MatQ::zeros(1, tau.num_edges());
    for e in 0..tau.num_edges() {
        out[(0, e)] = crate::rat::rat_int(1);
    }
    out
}

/// The composite f2 . M from Kashaev space to shear space.
pub fn matrix_j(tau: &DecoratedTriangulation) -> MatQ {
    matrix_f2(tau).mul(&matrix_m(tau))
}

/// Block-antisymmetric matrix of the bivector sum_mu d/dln y_mu ^ d/dln z_mu.
pub fn matrix_bivector(num_triangles: usize) -> MatQ {
    let mut out = MatQ::zeros(2 * num_triangles, 2 * num_triangles);
    for t in 0..num_triangles {
        out[(2 * t, 2 * t + 1)] = crate::rat::rat_int(1);
        out[(2 * t + 1, 2 * t)] = crate::rat::rat_int(-1);
    }
    out
}

/// Boundary map of the dual graph, edges canonically oriented from the lower
/// slot to the higher slot: head gets +1, tail gets -1.
pub fn matrix_boundary(tau: &DecoratedTriangulation) -> MatQ {
    let mut out = MatQ::zeros(tau.num_triangles(), tau.num_edges());
    for (e, &[tail, head]) in tau.edge_slots().iter().enumerate() {
        out[(tail.tri, e)] -= crate::rat::rat_int(1);
        out[(head.tri, e)] += crate::rat::rat_int(1);
    }
    out
}

/// Chain-to-h map: the dual edge of e, oriented tail -> head as above, sets
/// the tail slot's h to -c_e and the head slot's to +c_e.
fn matrix_chain_to_h(tau: &DecoratedTriangulation) -> MatQ {
    let mut out = MatQ::zeros(6 * tau.surface().m(), tau.num_edges());
    for (e, &[tail, head]) in tau.edge_slots().iter().enumerate() {
        out[(3 * tail.tri + tail.side as usize, e)] -= crate::rat::rat_int(1);
        out[(3 * head.tri + head.side as usize, e)] += crate::rat::rat_int(1);
    }
    out
}

/// Section of M on the per-triangle zero-sum subspace: y = -h^2, z = h^1.
fn matrix_h_to_k(tau: &DecoratedTriangulation) -> MatQ {
    let m = tau.surface().m();
    let mut out = MatQ::zeros(4 * m, 6 * m);
    for t in 0..2 * m {
        out[(2 * t, 3 * t + 2)] = crate::rat::rat_int(-1);
        out[(2 * t + 1, 3 * t + 1)] = crate::rat::rat_int(1);
    }
    out
}

/// Matrix of f3 on dual-edge chains (only meaningful on cycles).
pub fn matrix_f3(tau: &DecoratedTriangulation) -> MatQ {
    matrix_h_to_k(tau).mul(&matrix_chain_to_h(tau))
}

/// Basis of the cycle space of the dual graph, dimension m + 1.
pub fn cycle_basis(tau: &DecoratedTriangulation) -> Vec<Vec<Rat>> {
    matrix_boundary(tau).kernel_basis()
}

/// Image of a dual-edge cycle under f3, as a Kashaev log-vector.
pub fn homology_embed(tau: &DecoratedTriangulation, chain: &[Rat]) -> Result<Vec<Rat>> {
    if chain.len() != tau.num_edges() {
        return Err(Error::InvalidInput("chain length mismatch".into()));
    }
    let boundary = matrix_boundary(tau).mul_vec(chain);
    if !boundary.iter().all(Rat::is_zero) {
        return Err(Error::NotACycle);
    }
    Ok(matrix_f3(tau).mul_vec(chain))
}

/// Results of the exactness verification for the sequence
/// 0 -> H_1 -> K -> shear -> R -> 0.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ExactnessReport {
    pub m: usize,
    pub f3_injective: bool,
    pub im_f3_eq_ker_f2: bool,
    pub im_f2_eq_ker_f1: bool,
    pub f1_surjective: bool,
    pub dim_ker_f2: usize,
    pub dim_im_f2: usize,
    pub expected_dim_ker_f2: usize,
    pub expected_dim_im_f2: usize,
}

impl ExactnessReport {
    pub fn all_pass(&self) -> bool {
        self.f3_injective
            && self.im_f3_eq_ker_f2
            && self.im_f2_eq_ker_f1
            && self.f1_surjective
            && self.dim_ker_f2 == self.expected_dim_ker_f2
            && self.dim_im_f2 == self.expected_dim_im_f2
    }
}

/// Computes exact ranks of f1, f2 (as J on Kashaev space), and f3 restricted
/// to the dual cycle space, and checks the four exactness conditions.
pub fn exactness_report(tau: &DecoratedTriangulation) -> ExactnessReport {
    let m = tau.surface().m();
    let j = matrix_j(tau);
    let f1 = matrix_f1(tau);
    let cycles = cycle_basis(tau);
    let f3 = matrix_f3(tau);
    let f3_on_cycles =
        MatQ::from_columns(cycles.iter().map(|c| f3.mul_vec(c)).collect(), 4 * m);

    let f3_injective = f3_on_cycles.rank() == cycles.len();
    let ker_j = MatQ::from_columns(j.kernel_basis(), 4 * m);
    let im_f3_eq_ker_f2 = ker_j.cols == f3_on_cycles.rank()
        && ker_j.column_span_contains(&f3_on_cycles)
        && f3_on_cycles.column_span_contains(&ker_j);

    let dim_ker_f2 = ker_j.cols;
    let dim_im_f2 = j.rank();
    // Im f2 subset Ker f1 is the matrix identity f1 J = 0; equality of the
    // spans then follows from the dimension count 3m - 1.
    let f1j_zero = f1.mul(&j).is_zero();
    let im_f2_eq_ker_f1 = f1j_zero && dim_im_f2 == 3 * m - 1;
    let f1_surjective = f1.rank() == 1;

    ExactnessReport {
        m,
        f3_injective,
        im_f3_eq_ker_f2,
        im_f2_eq_ker_f1,
        f1_surjective,
        dim_ker_f2,
        dim_im_f2,
        expected_dim_ker_f2: m + 1,
        expected_dim_im_f2: 3 * m - 1,
    }
}

/// The bivector pushforward identity: J B J^T equals the corner-count sigma
/// matrix, exactly.
pub fn bivector_check(tau: &DecoratedTriangulation) -> bool {
    let j = matrix_j(tau);
    let b = matrix_bivector(tau.num_triangles());
    let lhs = j.mul(&b).mul(&j.transpose());
    let sigma = MatQ::from_int_rows(&tau.sigma_matrix().entries);
    lhs == sigma
}

/// Linearized lambda-length map in half-log coordinates u = delta/2:
/// y_t = u(side 1) - u(side 0), z_t = u(side 2) - u(side 0).
pub fn matrix_penner(tau: &DecoratedTriangulation) -> MatQ {
    let m = tau.surface().m();
    let mut out = MatQ::zeros(4 * m, 3 * m);
    for (t, tri) in tau.triangles().iter().enumerate() {
        out[(2 * t, tri.sides[1])] += crate::rat::rat_int(1);
        out[(2 * t, tri.sides[0])] -= crate::rat::rat_int(1);
        out[(2 * t + 1, tri.sides[2])] += crate::rat::rat_int(1);
        out[(2 * t + 1, tri.sides[0])] -= crate::rat::rat_int(1);
    }
    out
}

/// Per-triangle cyclic two-form on lambda space: for each triangle with side
/// edges (e0, e1, e2), the pairs (e0,e1), (e1,e2), (e2,e0) each contribute a
/// unit wedge. As a matrix this coincides with the sigma corner tally.
pub fn matrix_penner_two_form(tau: &DecoratedTriangulation) -> MatQ {
    MatQ::from_int_rows(&tau.sigma_matrix().entries)
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct PennerReport {
    pub m: usize,
    pub rank: usize,
    pub expected_rank: usize,
    pub kernel_is_scaling_direction: bool,
    pub cokernel_dim: usize,
    pub expected_cokernel_dim: usize,
    pub two_form_pullback_ok: bool,
}

impl PennerReport {
    pub fn all_pass(&self) -> bool {
        self.rank == self.expected_rank
            && self.kernel_is_scaling_direction
            && self.cokernel_dim == self.expected_cokernel_dim
            && self.two_form_pullback_ok
    }
}

/// Rank/kernel/cokernel structure of the linearized lambda-length map and the
/// exact two-form pullback identity F^T B F = Omega.
pub fn penner_exact_report(tau: &DecoratedTriangulation) -> PennerReport {
    let m = tau.surface().m();
    let f = matrix_penner(tau);
    let rank = f.rank();
    let kernel = f.kernel_basis();
    // The kernel must be exactly the uniform scaling direction.
    let kernel_is_scaling_direction = kernel.len() == 1 && {
        let v = &kernel[0];
        let first = &v[0];
        !first.is_zero() && v.iter().all(|x| x == first)
    };
    let cokernel_dim = 4 * m - rank;
    let b = matrix_bivector(tau.num_triangles());
    let pullback = f.transpose().mul(&b).mul(&f);
    let two_form_pullback_ok = pullback == matrix_penner_two_form(tau);
    PennerReport {
        m,
        rank,
        expected_rank: 3 * m - 1,
        kernel_is_scaling_direction,
        cokernel_dim,
        expected_cokernel_dim: m + 1,
        two_form_pullback_ok,
    }
}
