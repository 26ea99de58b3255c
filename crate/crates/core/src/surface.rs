//! Decorated ideal triangulations of punctured surfaces and their moves.
//!
//! A surface of genus `g` with `p >= 1` punctures and `m = 2g - 2 + p > 0`
//! carries ideal triangulations with `2m` triangles and `3m` edges. A
//! *decorated* triangulation numbers the triangles and marks one corner of
//! each; we encode the mark through the side labelling: the three sides of a
//! triangle are labelled 0, 1, 2 counterclockwise with side 0 opposite the
//! marked corner. The gluing is stored as, per triangle, the edge id bounding
//! each side; every edge id occurs in exactly two side slots.
//!
//! Orientation convention: each triangle's side order is counterclockwise for
//! a fixed orientation of the surface, and gluing identifies the two slot
//! traversals head-to-tail, so any slot pairing describes an oriented surface.
//! Corner convention used by [`DecoratedTriangulation::sigma_matrix`]: the
//! corner between consecutive counterclockwise sides `s` and `s+1` is
//! delimited on the left by the edge at side `s` and on the right by the edge
//! at side `s+1`. The transposed matrix (see `sigma_matrix_fock`) is the one
//! under which the quantum torus relations of the `qtorus` module close up;
//! the two differ only by this global left/right reading.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// Genus and puncture count, with `m = 2g - 2 + p` required positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceSig {
    pub genus: u32,
    pub punctures: u32,
}

impl SurfaceSig {
    pub fn new(genus: u32, punctures: u32) -> Result<Self> {
        let sig = SurfaceSig { genus, punctures };
        if punctures == 0 {
            return Err(Error::InvalidSurface("at least one puncture required".into()));
        }
        if sig.m_checked() <= 0 {
            return Err(Error::InvalidSurface(format!(
                "m = 2g-2+p = {} must be positive",
                sig.m_checked()
            )));
        }
        Ok(sig)
    }

    fn m_checked(&self) -> i64 {
        2 * self.genus as i64 - 2 + self.punctures as i64
    }

    /// m = 2g - 2 + p.
    pub fn m(&self) -> usize {
        self.m_checked() as usize
    }

    pub fn num_triangles(&self) -> usize {
        2 * self.m()
    }

    pub fn num_edges(&self) -> usize {
        3 * self.m()
    }
}

/// A side slot: triangle index and side label 0/1/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    pub tri: usize,
    pub side: u8,
}

/// One decorated ideal triangle: `sides[s]` is the edge id bounding side `s`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Triangle {
    pub sides: [usize; 3],
}

/// Elementary moves on decorated ideal triangulations.
///
/// All indices are 0-based. `Reindex(perm)` renumbers triangles so that the
/// new triangle `i` is the old triangle `perm[i]`. `MarkRotation(i)` moves the
/// mark of triangle `i` to the next corner counterclockwise. A
/// `DiagonalExchange(i, j)` flips the edge shared by triangles `i` and `j`;
/// it requires both marks opposite that edge (the edge sits at side 0 of
/// both).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    Reindex(Vec<usize>),
    MarkRotation(usize),
    DiagonalExchange(usize, usize),
}

impl Move {
    /// The transposition swapping triangles `i` and `j` on `2m` triangles.
    pub fn transposition(i: usize, j: usize, num_triangles: usize) -> Move {
        let mut perm: Vec<usize> = (0..num_triangles).collect();
        perm.swap(i, j);
        Move::Reindex(perm)
    }
}

/// Antisymmetric integer matrix sigma built from corner counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl SigmaMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn transpose(&self) -> SigmaMatrix {
        let n = self.dim();
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                out[j][i] = self.entries[i][j];
            }
        }
        SigmaMatrix { entries: out }
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] + self.entries[j][i] == 0))
    }

    /// Sum over i < j, as appears in the quotient element exponent.
    pub fn upper_sum(&self) -> i64 {
        let n = self.dim();
        let mut s = 0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += self.entries[i][j];
            }
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DecoratedTriangulation {
    surface: SurfaceSig,
    triangles: Vec<Triangle>,
}

impl DecoratedTriangulation {
    /// Builds and fully validates a triangulation from its gluing table.
    pub fn new(surface: SurfaceSig, triangles: Vec<Triangle>) -> Result<Self> {
        let tri = DecoratedTriangulation { surface, triangles };
        tri.validate()?;
        Ok(tri)
    }

    pub fn surface(&self) -> SurfaceSig {
        self.surface
    }

    pub fn num_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn num_edges(&self) -> usize {
        self.surface.num_edges()
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn edge_at(&self, tri: usize, side: u8) -> usize {
        self.triangles[tri].sides[side as usize]
    }

    /// The two slots bounding each edge, sorted, indexed by edge id.
    pub fn edge_slots(&self) -> Vec<[Slot; 2]> {
        let mut acc: Vec<Vec<Slot>> = vec![Vec::new(); self.num_edges()];
        for (t, tri) in self.triangles.iter().enumerate() {
            for s in 0..3u8 {
                let e = tri.sides[s as usize];
                acc[e].push(Slot { tri: t, side: s });
            }
        }
        acc.into_iter()
            .map(|mut v| {
                debug_assert_eq!(v.len(), 2);
                v.sort();
                [v[0], v[1]]
            })
            .collect()
    }

    fn validate(&self) -> Result<()> {
        let m = self.surface.m();
        if self.triangles.len() != 2 * m {
            return Err(Error::InvalidTriangulation(format!(
                "expected {} triangles, got {}",
                2 * m,
                self.triangles.len()
            )));
        }
        let ne = 3 * m;
        let mut count = vec![0usize; ne];
        for tri in &self.triangles {
            for &e in &tri.sides {
                if e >= ne {
                    return Err(Error::InvalidTriangulation(format!(
                        "edge id {e} out of range (3m = {ne})"
                    )));
                }
                count[e] += 1;
            }
        }
        if let Some(e) = count.iter().position(|&c| c != 2) {
            return Err(Error::InvalidTriangulation(format!(
                "edge {e} bounds {} side slots, expected 2",
                count[e]
            )));
        }
        if !self.dual_connected() {
            return Err(Error::InvalidTriangulation("dual graph is disconnected".into()));
        }
        let v = self.vertex_count();
        if v != self.surface.punctures as usize {
            return Err(Error::InvalidTriangulation(format!(
                "vertex count {v} does not match punctures {}",
                self.surface.punctures
            )));
        }
        // Euler characteristic on the closed surface: V - E + F = 2 - 2g.
        let chi = v as i64 - ne as i64 + (2 * m) as i64;
        if chi != 2 - 2 * self.surface.genus as i64 {
            return Err(Error::InvalidTriangulation(format!(
                "Euler characteristic {chi} does not match genus {}",
                self.surface.genus
            )));
        }
        Ok(())
    }

    fn dual_connected(&self) -> bool {
        if self.triangles.is_empty() {
            return false;
        }
        let slots = self.edge_slots();
        let mut seen = vec![false; self.triangles.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            for s in 0..3u8 {
                let e = self.edge_at(t, s);
                for slot in slots[e] {
                    if !seen[slot.tri] {
                        seen[slot.tri] = true;
                        stack.push(slot.tri);
                    }
                }
            }
        }
        seen.into_iter().all(|b| b)
    }

    /// Counts vertices of the glued surface by walking corners around them.
    ///
    /// The corner opposite side `c` of a counterclockwise triangle is the head
    /// of side `c+1`; crossing that side lands on the partner slot, whose tail
    /// corner is the same vertex.
    pub fn vertex_count(&self) -> usize {
        let slots = self.edge_slots();
        let n = self.triangles.len();
        let mut seen = vec![[false; 3]; n];
        let mut orbits = 0;
        for t0 in 0..n {
            for c0 in 0..3u8 {
                if seen[t0][c0 as usize] {
                    continue;
                }
                orbits += 1;
                let (mut t, mut c) = (t0, c0);
                loop {
                    seen[t][c as usize] = true;
                    let side = (c + 1) % 3;
                    let e = self.edge_at(t, side);
                    let [a, b] = slots[e];
                    let partner = if (a.tri, a.side) == (t, side) { b } else { a };
                    t = partner.tri;
                    c = (partner.side + 1) % 3;
                    if (t, c) == (t0, c0) {
                        break;
                    }
                }
            }
        }
        orbits
    }

    /// Checks whether `mv` can be applied, returning the violated precondition.
    pub fn check_applicable(&self, mv: &Move) -> Result<()> {
        let n = self.triangles.len();
        match mv {
            Move::Reindex(perm) => {
                let mut seen = vec![false; n];
                if perm.len() != n {
                    return Err(Error::NotApplicable(format!(
                        "permutation length {} does not match {n} triangles",
                        perm.len()
                    )));
                }
                for &p in perm {
                    if p >= n || seen[p] {
                        return Err(Error::NotApplicable("not a permutation".into()));
                    }
                    seen[p] = true;
                }
                Ok(())
            }
            Move::MarkRotation(i) => {
                if *i >= n {
                    return Err(Error::NotApplicable(format!("triangle {i} out of range")));
                }
                Ok(())
            }
            Move::DiagonalExchange(i, j) => {
                if *i >= n || *j >= n {
                    return Err(Error::NotApplicable("triangle index out of range".into()));
                }
                if i == j {
                    return Err(Error::NotApplicable(
                        "diagonal exchange needs two distinct triangles".into(),
                    ));
                }
                let e = self.edge_at(*i, 0);
                if self.edge_at(*j, 0) != e {
                    return Err(Error::NotApplicable(format!(
                        "triangles {i} and {j} do not share an edge with both marks opposite it"
                    )));
                }
                Ok(())
            }
        }
    }

    /// Applies an elementary move. Edge ids are stable: a flipped diagonal
    /// keeps the id of the edge it replaces.
    pub fn apply_move(&self, mv: &Move) -> Result<DecoratedTriangulation> {
        self.check_applicable(mv)?;
        let mut triangles = self.triangles.clone();
        match mv {
            Move::Reindex(perm) => {
                triangles = perm.iter().map(|&p| self.triangles[p].clone()).collect();
            }
            Move::MarkRotation(i) => {
                let old = triangles[*i].sides;
                triangles[*i].sides = [old[1], old[2], old[0]];
            }
            Move::DiagonalExchange(i, j) => {
                let e = self.edge_at(*i, 0);
                let old_i = triangles[*i].sides;
                let old_j = triangles[*j].sides;
                triangles[*i].sides = [e, old_j[2], old_i[1]];
                triangles[*j].sides = [e, old_i[2], old_j[1]];
            }
        }
        Ok(DecoratedTriangulation { surface: self.surface, triangles })
    }

    pub fn apply_path(&self, path: &[Move]) -> Result<DecoratedTriangulation> {
        let mut cur = self.clone();
        for mv in path {
            cur = cur.apply_move(mv)?;
        }
        Ok(cur)
    }

    /// Corner list: for every triangle and side `s`, the ordered pair
    /// (edge at side `s`, edge at side `s+1`) — left then right.
    pub fn corners(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(6 * self.surface.m());
        for tri in &self.triangles {
            for s in 0..3 {
                out.push((tri.sides[s], tri.sides[(s + 1) % 3]));
            }
        }
        out
    }

    /// sigma_ij = a_ij - a_ji with a_ij the number of corners delimited on
    /// the left by edge i and on the right by edge j, under the ccw-left
    /// convention documented at module level. This is the matrix the bivector
    /// pushforward identity holds against.
    pub fn sigma_matrix(&self) -> SigmaMatrix {
        let ne = self.num_edges();
        let mut entries = vec![vec![0i64; ne]; ne];
        for (l, r) in self.corners() {
            entries[l][r] += 1;
            entries[r][l] -= 1;
        }
        SigmaMatrix { entries }
    }

    /// The transposed sigma: the commutation matrix of the Chekhov-Fock
    /// algebra generators, matching the per-triangle side table
    /// sigma_10 = sigma_02 = sigma_21 = +1 of the quantum layer.
    pub fn sigma_matrix_fock(&self) -> SigmaMatrix {
        self.sigma_matrix().transpose()
    }

    /// True when triangles `i, j, k` are glued in the pentagon configuration
    /// (`i`'s 0-side is `j`'s 1-side, `j`'s 0-side is `k`'s 1-side) with the
    /// marks placed accordingly.
    pub fn detect_pentagon(&self, i: usize, j: usize, k: usize) -> bool {
        let n = self.triangles.len();
        if i >= n || j >= n || k >= n || i == j || j == k || i == k {
            return false;
        }
        let slots = self.edge_slots();
        let d1 = self.edge_at(i, 0);
        let d2 = self.edge_at(j, 0);
        slots[d1] == sorted_pair(Slot { tri: i, side: 0 }, Slot { tri: j, side: 1 })
            && slots[d2] == sorted_pair(Slot { tri: j, side: 0 }, Slot { tri: k, side: 1 })
    }

    /// Equality key that forgets the arbitrary edge ids: edges are relabelled
    /// in first-occurrence order scanning triangles and sides. Triangle
    /// numbering and side labels (hence marks) stay rigid.
    pub fn canonical_key(&self) -> Vec<[usize; 3]> {
        let mut relabel: HashMap<usize, usize> = HashMap::new();
        let mut out = Vec::with_capacity(self.triangles.len());
        for tri in &self.triangles {
            let mut sides = [0usize; 3];
            for (s, &e) in tri.sides.iter().enumerate() {
                let next = relabel.len();
                sides[s] = *relabel.entry(e).or_insert(next);
            }
            out.push(sides);
        }
        out
    }

    /// Decorated triangulations are compared as labelled, marked objects but
    /// agnostically to edge names (which the moves do not canonically track).
    pub fn same_decorated(&self, other: &DecoratedTriangulation) -> bool {
        self.surface == other.surface && self.canonical_key() == other.canonical_key()
    }
}

fn sorted_pair(a: Slot, b: Slot) -> [Slot; 2] {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

/// Move path of omega_{mu,nu} = rho_mu . phi_{mu,nu} . rho_nu in application
/// order (rho_nu first).
pub fn omega_path(mu: usize, nu: usize) -> Vec<Move> {
    vec![Move::MarkRotation(nu), Move::DiagonalExchange(mu, nu), Move::MarkRotation(mu)]
}

/// Left side of the pentagon relation, omega_jk . omega_ik . omega_ij, as a
/// move path in application order.
pub fn pentagon_lhs(i: usize, j: usize, k: usize) -> Vec<Move> {
    let mut p = omega_path(i, j);
    p.extend(omega_path(i, k));
    p.extend(omega_path(j, k));
    p
}

/// Right side of the pentagon relation, omega_ij . omega_jk.
pub fn pentagon_rhs(i: usize, j: usize, k: usize) -> Vec<Move> {
    let mut p = omega_path(j, k);
    p.extend(omega_path(i, j));
    p
}

/// Inverse of a move path: reversed, with each move inverted
/// (rho^-1 = rho^2, phi_ij^-1 = alpha_{i<->j} . phi_ij, alpha^-1 = alpha^T).
pub fn invert_path(path: &[Move], num_triangles: usize) -> Vec<Move> {
    let mut out = Vec::new();
    for mv in path.iter().rev() {
        match mv {
            Move::MarkRotation(i) => {
                out.push(Move::MarkRotation(*i));
                out.push(Move::MarkRotation(*i));
            }
            Move::DiagonalExchange(i, j) => {
                out.push(Move::DiagonalExchange(*i, *j));
                out.push(Move::transposition(*i, *j, num_triangles));
            }
            Move::Reindex(perm) => {
                let mut inv = vec![0usize; perm.len()];
                for (i, &p) in perm.iter().enumerate() {
                    inv[p] = i;
                }
                out.push(Move::Reindex(inv));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{build_standard, pentagon_fixture};

    #[test]
    fn surface_counts() {
        let s = SurfaceSig::new(1, 1).unwrap();
        assert_eq!((s.m(), s.num_triangles(), s.num_edges()), (1, 2, 3));
        let s = SurfaceSig::new(0, 3).unwrap();
        assert_eq!(s.m(), 1);
        assert!(SurfaceSig::new(0, 2).is_err());
        assert!(SurfaceSig::new(0, 0).is_err());
        assert!(SurfaceSig::new(1, 0).is_err());
    }

    #[test]
    fn mark_rotation_is_cubic() {
        let t = build_standard(1, 1).unwrap();
        let r = Move::MarkRotation(0);
        let once = t.apply_move(&r).unwrap();
        assert!(!once.same_decorated(&t));
        let thrice = once.apply_move(&r).unwrap().apply_move(&r).unwrap();
        assert_eq!(thrice, t);
    }

    #[test]
    fn double_flip_is_transposition() {
        for (g, p) in [(1u32, 1u32), (0, 3), (0, 4)] {
            let t = build_standard(g, p).unwrap();
            for i in 0..t.num_triangles() {
                for j in 0..t.num_triangles() {
                    let mv = Move::DiagonalExchange(i, j);
                    if t.check_applicable(&mv).is_err() {
                        continue;
                    }
                    let twice = t.apply_move(&mv).unwrap().apply_move(&mv).unwrap();
                    let swapped = t
                        .apply_move(&Move::transposition(i, j, t.num_triangles()))
                        .unwrap();
                    assert!(twice.same_decorated(&swapped), "phi^2 != alpha on ({g},{p})");
                }
            }
        }
    }

    #[test]
    fn identity_reindex_is_identity() {
        let t = build_standard(0, 4).unwrap();
        let id = Move::Reindex((0..t.num_triangles()).collect());
        assert_eq!(t.apply_move(&id).unwrap(), t);
    }

    #[test]
    fn sigma_once_punctured_torus_frozen() {
        // Both triangles read [e0, e1, e2]; each contributes corners
        // (e0,e1), (e1,e2), (e2,e0), so sigma is twice the 3-cycle matrix.
        let t = build_standard(1, 1).unwrap();
        let sigma = t.sigma_matrix();
        assert_eq!(
            sigma.entries,
            vec![vec![0, 2, -2], vec![-2, 0, 2], vec![2, -2, 0]]
        );
        assert!(sigma.is_antisymmetric());
    }

    #[test]
    fn sigma_three_punctured_sphere_is_zero() {
        // The mirrored double triangle pairs every corner with its reverse.
        let t = build_standard(0, 3).unwrap();
        let sigma = t.sigma_matrix();
        assert!(sigma.entries.iter().all(|row| row.iter().all(|&v| v == 0)));
    }

    #[test]
    fn sigma_matches_brute_force_corner_tally() {
        for (g, p) in [(1u32, 1u32), (0, 3), (0, 4), (1, 2)] {
            let t = build_standard(g, p).unwrap();
            let ne = t.num_edges();
            // Independent tally: walk all corners, count (left, right) pairs.
            let mut a = vec![vec![0i64; ne]; ne];
            for tri in t.triangles() {
                for s in 0..3 {
                    a[tri.sides[s]][tri.sides[(s + 1) % 3]] += 1;
                }
            }
            let sigma = t.sigma_matrix();
            for i in 0..ne {
                for j in 0..ne {
                    assert_eq!(sigma.entries[i][j], a[i][j] - a[j][i]);
                    assert!(sigma.entries[i][j].abs() <= 2);
                }
            }
        }
    }

    #[test]
    fn sigma_invariant_under_reindexing() {
        let t = build_standard(0, 4).unwrap();
        let moved = t.apply_move(&Move::transposition(0, 2, 4)).unwrap();
        // Reindexing triangles leaves edge ids alone, so sigma is unchanged.
        assert_eq!(t.sigma_matrix(), moved.sigma_matrix());
    }

    #[test]
    fn pentagon_detection() {
        let t = pentagon_fixture();
        assert!(t.detect_pentagon(0, 1, 2));
        assert!(!t.detect_pentagon(0, 0, 2));
        assert!(!t.detect_pentagon(1, 0, 2));
        assert!(!t.detect_pentagon(0, 1, 3));
        // Only two triangles: no pentagon on the torus.
        let torus = build_standard(1, 1).unwrap();
        assert!(!torus.detect_pentagon(0, 1, 0));
    }

    #[test]
    fn pentagon_relation_at_move_level() {
        let t = pentagon_fixture();
        let lhs = t.apply_path(&pentagon_lhs(0, 1, 2)).unwrap();
        let rhs = t.apply_path(&pentagon_rhs(0, 1, 2)).unwrap();
        assert!(lhs.same_decorated(&rhs));
        // The two interior diagonals end up with transposed ids: strict
        // equality of the raw gluing tables fails, which is why decorated
        // equality is edge-label agnostic.
        assert_ne!(lhs.triangles(), rhs.triangles());
    }

    #[test]
    fn pentagon_loop_is_identity() {
        // lhs . rhs^-1 composes to the identity; the inverse word is only
        // applicable on the image of rhs, so the loop is based there.
        let t = pentagon_fixture();
        let base = t.apply_path(&pentagon_rhs(0, 1, 2)).unwrap();
        let mut word = invert_path(&pentagon_rhs(0, 1, 2), t.num_triangles());
        word.extend(pentagon_lhs(0, 1, 2));
        let back = base.apply_path(&word).unwrap();
        assert!(back.same_decorated(&base));
    }

    #[test]
    fn rho_commutation_and_alpha_transport() {
        let t = build_standard(0, 4).unwrap();
        let n = t.num_triangles();
        for i in 0..n {
            for j in 0..n {
                let a = t
                    .apply_move(&Move::MarkRotation(i))
                    .unwrap()
                    .apply_move(&Move::MarkRotation(j))
                    .unwrap();
                let b = t
                    .apply_move(&Move::MarkRotation(j))
                    .unwrap()
                    .apply_move(&Move::MarkRotation(i))
                    .unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn flip_rejects_bad_marks() {
        let t = build_standard(1, 1).unwrap();
        let rotated = t.apply_move(&Move::MarkRotation(0)).unwrap();
        // After rotating one mark the shared edge is no longer 0-side of both.
        assert!(rotated.check_applicable(&Move::DiagonalExchange(0, 1)).is_err());
        assert!(t.check_applicable(&Move::DiagonalExchange(0, 0)).is_err());
    }
}
