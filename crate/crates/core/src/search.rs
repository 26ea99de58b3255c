//! Breadth-first search over the move graph of decorated triangulations.

use crate::error::{Error, Result};
use crate::exchange::{classify_exchange, CaseLabel};
use crate::surface::{DecoratedTriangulation, Move};
use std::collections::{HashSet, VecDeque};

/// Move alphabet used by the searches: every mark rotation, every applicable
/// diagonal exchange, and every transposition of triangle indices.
/// Transpositions generate the full symmetric group, so reachability is the
/// same as with arbitrary reindexings.
fn neighbor_moves(tau: &DecoratedTriangulation) -> Vec<Move> {
    let n = tau.num_triangles();
    let mut moves = Vec::new();
    for i in 0..n {
        moves.push(Move::MarkRotation(i));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && tau.check_applicable(&Move::DiagonalExchange(i, j)).is_ok() {
                moves.push(Move::DiagonalExchange(i, j));
            }
        }
    }
    for i in 0..n {
        for j in (i + 1)..n {
            moves.push(Move::transposition(i, j, n));
        }
    }
    moves
}

/// Shortest move sequence from `from` to `to` (as decorated triangulations,
/// edge labels ignored), or `NotFound` past `depth_limit` moves.
pub fn find_move_path(
    from: &DecoratedTriangulation,
    to: &DecoratedTriangulation,
    depth_limit: usize,
) -> Result<Vec<Move>> {
    if from.surface() != to.surface() {
        return Err(Error::InvalidInput("triangulations live on different surfaces".into()));
    }
    let target = to.canonical_key();
    if from.canonical_key() == target {
        return Ok(Vec::new());
    }
    let mut seen: HashSet<Vec<[usize; 3]>> = HashSet::new();
    seen.insert(from.canonical_key());
    let mut queue: VecDeque<(DecoratedTriangulation, Vec<Move>)> = VecDeque::new();
    queue.push_back((from.clone(), Vec::new()));
    while let Some((state, path)) = queue.pop_front() {
        if path.len() >= depth_limit {
            continue;
        }
        for mv in neighbor_moves(&state) {
            let next = state.apply_move(&mv).expect("neighbor moves are applicable");
            let key = next.canonical_key();
            if !seen.insert(key.clone()) {
                continue;
            }
            let mut next_path = path.clone();
            next_path.push(mv);
            if key == target {
                return Ok(next_path);
            }
            queue.push_back((next, next_path));
        }
    }
    Err(Error::NotFound { depth_limit })
}

/// Searches (breadth-first, depth-limited) for a reachable triangulation
/// carrying an applicable diagonal exchange of the requested case. Returns
/// the triangulation together with the triangle pair to flip.
pub fn find_case_flip(
    start: &DecoratedTriangulation,
    case: CaseLabel,
    depth_limit: usize,
) -> Option<(DecoratedTriangulation, usize, usize)> {
    let mut seen: HashSet<Vec<[usize; 3]>> = HashSet::new();
    seen.insert(start.canonical_key());
    let mut queue: VecDeque<(DecoratedTriangulation, usize)> = VecDeque::new();
    queue.push_back((start.clone(), 0));
    while let Some((state, depth)) = queue.pop_front() {
        let n = state.num_triangles();
        for i in 0..n {
            for j in 0..n {
                if i != j && classify_exchange(&state, i, j).ok() == Some(case) {
                    return Some((state, i, j));
                }
            }
        }
        if depth >= depth_limit {
            continue;
        }
        for mv in neighbor_moves(&state) {
            // Transpositions do not change which cases occur.
            if matches!(mv, Move::Reindex(_)) {
                continue;
            }
            let next = state.apply_move(&mv).expect("neighbor moves are applicable");
            if seen.insert(next.canonical_key()) {
                queue.push_back((next, depth + 1));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::build_standard;

    #[test]
    fn empty_path_for_identical_targets() {
        let t = build_standard(1, 1).unwrap();
        assert!(find_move_path(&t, &t, 3).unwrap().is_empty());
    }

    #[test]
    fn single_rotation_found_at_depth_one() {
        let t = build_standard(1, 1).unwrap();
        let goal = t.apply_move(&Move::MarkRotation(0)).unwrap();
        let path = find_move_path(&t, &goal, 3).unwrap();
        assert_eq!(path.len(), 1);
        assert!(t.apply_path(&path).unwrap().same_decorated(&goal));
    }

    #[test]
    fn single_flip_found_within_depth_one() {
        // On the once-punctured torus the flipped triangulation has the same
        // slot pairing as the original (only the edge curves change), so the
        // shortest path is empty; on the pentagon fixture the flip genuinely
        // changes the gluing and BFS needs exactly one move.
        let t = build_standard(1, 1).unwrap();
        let goal = t.apply_move(&Move::DiagonalExchange(0, 1)).unwrap();
        let path = find_move_path(&t, &goal, 2).unwrap();
        assert!(path.len() <= 1);
        assert!(t.apply_path(&path).unwrap().same_decorated(&goal));

        let t = build_standard(0, 4).unwrap();
        let goal = t.apply_move(&Move::DiagonalExchange(0, 1)).unwrap();
        let path = find_move_path(&t, &goal, 2).unwrap();
        assert_eq!(path.len(), 1);
        assert!(t.apply_path(&path).unwrap().same_decorated(&goal));
    }

    #[test]
    fn not_found_within_zero_depth() {
        let t = build_standard(1, 1).unwrap();
        let goal = t.apply_move(&Move::MarkRotation(1)).unwrap();
        match find_move_path(&t, &goal, 0) {
            Err(Error::NotFound { depth_limit: 0 }) => {}
            other => panic!("expected NotFound, got {other:?}"),
        }
    }

    #[test]
    fn mismatched_surfaces_rejected() {
        let a = build_standard(1, 1).unwrap();
        let b = build_standard(0, 3).unwrap();
        assert!(find_move_path(&a, &b, 1).is_err());
    }
}
