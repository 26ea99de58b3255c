//! Deterministic standard triangulations for every admissible surface.
//!
//! The gluing tables are fixed so that tests and the CLI always agree on what
//! "the" (g, p) triangulation is:
//!
//! - (0, 3): the double of a triangle, the second copy mirrored.
//! - (g, 1): the fan triangulation of the standard 4g-gon with side word
//!   a1 b1 a1' b1' ... ag bg ag' bg'.
//! - extra punctures: star subdivision of triangle 0, repeated.

use crate::error::Result;
use crate::surface::{DecoratedTriangulation, SurfaceSig, Triangle};

/// The canonical (g, p) triangulation described at module level.
pub fn build_standard(genus: u32, punctures: u32) -> Result<DecoratedTriangulation> {
    let sig = SurfaceSig::new(genus, punctures)?;
    let (mut tri, mut built) = if genus == 0 {
        (sphere3_base(), 3u32)
    } else {
        (polygon_fan(genus), 1u32)
    };
    while built < punctures {
        tri = star_subdivide(&sig_partial(genus, built), &tri, 0);
        built += 1;
    }
    DecoratedTriangulation::new(sig, tri)
}

fn sig_partial(genus: u32, punctures: u32) -> SurfaceSig {
    SurfaceSig::new(genus, punctures).expect("intermediate surface is admissible")
}

/// Double of a triangle: triangles [0,1,2] and [0,2,1] glued edge to edge.
fn sphere3_base() -> Vec<Triangle> {
    vec![Triangle { sides: [0, 1, 2] }, Triangle { sides: [0, 2, 1] }]
}

/// Fan triangulation of the 4g-gon with the standard commutator side word.
///
/// Boundary side i runs P_i -> P_{i+1}; sides 4k and 4k+2 are identified,
/// likewise 4k+1 and 4k+3. Fan triangle j = (P0, P_j, P_{j+1}) has ccw sides
/// [diagonal to P_j, boundary side j, diagonal to P_{j+1}]. Diagonals take
/// edge ids before the boundary pairs, and the first fan triangle's mark is
/// rotated so that for g = 1 both triangles read [0, 1, 2] with the diagonal
/// flip-ready at side 0.
fn polygon_fan(genus: u32) -> Vec<Triangle> {
    let n = 4 * genus as usize;
    let num_diagonals = n - 3; // (P0, P_j) for j = 2..=n-2
    let diag_edge = |j: usize| -> usize { j - 2 };
    let boundary_edge = |i: usize| -> usize {
        let k = i / 4;
        num_diagonals
            + match i % 4 {
                0 | 2 => 2 * k,
                _ => 2 * k + 1,
            }
    };
    let side_to_p0 = |j: usize| -> usize {
        // Edge from P_j back to P0: a diagonal unless j = 1 or j = n-1.
        if j == 1 {
            boundary_edge(0)
        } else if j == n - 1 {
            boundary_edge(n - 1)
        } else {
            diag_edge(j)
        }
    };
    (1..=(n - 2))
        .map(|j| {
            let sides = [side_to_p0(j), boundary_edge(j), side_to_p0(j + 1)];
            if j == 1 {
                Triangle { sides: [sides[2], sides[0], sides[1]] }
            } else {
                Triangle { sides }
            }
        })
        .collect()
}

/// Star-subdivides triangle `t`: replaces it by three triangles around a new
/// puncture, keeping the three outer edges at side 0 of the new triangles.
fn star_subdivide(
    sig: &SurfaceSig,
    triangles: &[Triangle],
    t: usize,
) -> Vec<Triangle> {
    let ne = sig.num_edges();
    let old = triangles[t].sides;
    // Spoke g_k joins the new vertex to corner k of the old triangle.
    let spoke = |k: usize| ne + k;
    let mut out = triangles.to_vec();
    // Sub-triangle keeping outer side e_s spans corners s+1, s+2 and the new
    // vertex; its ccw side order is [e_s, g_{s+2}, g_{s+1}].
    let sub = |s: usize| Triangle {
        sides: [old[s], spoke((s + 2) % 3), spoke((s + 1) % 3)],
    };
    out[t] = sub(0);
    out.push(sub(1));
    out.push(sub(2));
    out
}

/// A (0, 4) triangulation containing the pentagon configuration on triangles
/// (0, 1, 2): triangle 0's 0-side is 1's 1-side, 1's 0-side is 2's 1-side,
/// marks as the configuration requires. Triangle 3 caps the sphere.
pub fn pentagon_fixture() -> DecoratedTriangulation {
    let sig = SurfaceSig::new(0, 4).expect("(0,4) is admissible");
    let triangles = vec![
        Triangle { sides: [0, 2, 3] },
        Triangle { sides: [1, 0, 4] },
        Triangle { sides: [2, 1, 5] },
        Triangle { sides: [5, 4, 3] },
    ];
    DecoratedTriangulation::new(sig, triangles).expect("pentagon fixture is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_fixtures_validate() {
        for (g, p) in [
            (1u32, 1u32),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (2, 1),
            (2, 3),
            (3, 1),
        ] {
            let t = build_standard(g, p).unwrap_or_else(|e| panic!("({g},{p}): {e}"));
            assert_eq!(t.num_triangles(), t.surface().num_triangles());
            assert_eq!(t.vertex_count(), p as usize);
        }
    }

    #[test]
    fn invalid_surfaces_rejected() {
        assert!(build_standard(0, 2).is_err());
        assert!(build_standard(0, 1).is_err());
        assert!(build_standard(1, 0).is_err());
    }

    #[test]
    fn torus_fixture_edges_shared_by_both_triangles() {
        let t = build_standard(1, 1).unwrap();
        for slots in t.edge_slots() {
            assert_ne!(slots[0].tri, slots[1].tri);
        }
    }

    #[test]
    fn deterministic_per_signature() {
        assert_eq!(build_standard(0, 5).unwrap(), build_standard(0, 5).unwrap());
    }

    #[test]
    fn pentagon_fixture_is_a_four_punctured_sphere() {
        let t = pentagon_fixture();
        assert_eq!(t.surface(), SurfaceSig::new(0, 4).unwrap());
        assert_eq!(t.vertex_count(), 4);
    }
}
