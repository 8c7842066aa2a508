//! Greedy Reidemeister I/II reduction.

use serde::{Deserialize, Serialize};

use crate::pd::PlanarDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MoveKind {
    R1,
    R2,
}

/// One applied move. Crossing positions refer to the diagram the move was
/// applied to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    #[serde(rename = "move")]
    pub kind: MoveKind,
    pub crossings: Vec<usize>,
}

/// Result of [`simplify_greedy`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplification {
    pub diagram: PlanarDiagram,
    pub moves: Vec<Move>,
    /// True when the step budget ran out while a move was still available.
    pub incomplete: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnlinkCertificate {
    /// Reduced to `n` crossingless circles.
    Certified(usize),
    Unknown,
}

/// Crossings where two adjacent slots carry the same label.
pub fn find_r1(pd: &PlanarDiagram) -> Vec<usize> {
    pd.crossings()
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            let x = c.labels();
            (0..4).any(|p| x[p] == x[(p + 1) % 4])
        })
        .map(|(i, _)| i)
        .collect()
}

/// Pairs of distinct crossings bounding a two-sided face where one edge of
/// the face passes over at both crossings.
pub fn find_r2(pd: &PlanarDiagram) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = pd
        .faces()
        .into_iter()
        .filter(|f| f.len() == 2 && f[0].0 != f[1].0)
        .filter(|f| {
            let (c1, p1) = f[0];
            let (c2, p2) = f[1];
            // the dart (c1, p1) runs along one face edge; at its far end the
            // same edge sits at slot (p2 + 1) % 4 of c2
            let far = (p2 + 1) % 4;
            debug_assert_eq!(
                pd.crossings()[c1].labels()[p1],
                pd.crossings()[c2].labels()[far]
            );
            p1 % 2 == far % 2
        })
        .map(|f| (f[0].0.min(f[1].0), f[0].0.max(f[1].0)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn strand_joins(pd: &PlanarDiagram, c: usize) -> [(u32, u32); 2] {
    let [i, j, k, l] = pd.crossings()[c].labels();
    [(i, k), (j, l)]
}

/// Removes the kink at crossing `c`.
pub fn apply_r1(pd: &PlanarDiagram, c: usize) -> PlanarDiagram {
    pd.splice(&[c], &strand_joins(pd, c))
}

/// Removes the bigon between crossings `c1` and `c2`.
pub fn apply_r2(pd: &PlanarDiagram, c1: usize, c2: usize) -> PlanarDiagram {
    let [a, b] = strand_joins(pd, c1);
    let [c, d] = strand_joins(pd, c2);
    pd.splice(&[c1, c2], &[a, b, c, d])
}

/// Applies R1 moves (lowest crossing first) until none remain, then one R2
/// move, and repeats, for at most `max_steps` moves.
pub fn simplify_greedy(pd: &PlanarDiagram, max_steps: usize) -> Simplification {
    let mut diagram = pd.clone();
    let mut moves = Vec::new();
    loop {
        let next = if let Some(&c) = find_r1(&diagram).first() {
            Some(Move {
                kind: MoveKind::R1,
                crossings: vec![c],
            })
        } else {
            find_r2(&diagram).first().map(|&(a, b)| Move {
                kind: MoveKind::R2,
                crossings: vec![a, b],
            })
        };
        let Some(m) = next else {
            return Simplification {
                diagram,
                moves,
                incomplete: false,
            };
        };
        if moves.len() == max_steps {
            return Simplification {
                diagram,
                moves,
                incomplete: true,
            };
        }
        diagram = match m.kind {
            MoveKind::R1 => apply_r1(&diagram, m.crossings[0]),
            MoveKind::R2 => apply_r2(&diagram, m.crossings[0], m.crossings[1]),
        };
        moves.push(m);
    }
}

/// `Certified(n)` when greedy reduction reaches a crossingless diagram of
/// `n` circles.
pub fn certify_unlink(pd: &PlanarDiagram) -> UnlinkCertificate {
    let s = simplify_greedy(pd, pd.crossing_count());
    if s.diagram.crossing_count() == 0 {
        UnlinkCertificate::Certified(s.diagram.free_loops())
    } else {
        UnlinkCertificate::Unknown
    }
}
