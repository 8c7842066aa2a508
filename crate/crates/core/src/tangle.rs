//! Tangles with ordered top and bottom ends: stitching, the top, bottom and
//! full closures, and cutting a knot diagram open along four edges.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::TangleError;
use crate::pd::{Crossing, EdgeLabel, PlanarDiagram};

/// A planar diagram with its open ends split into ordered tops `t₁..` and
/// bottoms `b₁..`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tangle {
    interior: PlanarDiagram,
    tops: Vec<EdgeLabel>,
    bottoms: Vec<EdgeLabel>,
}

/// A pair of open ends to be joined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Stitching {
    pub a: EdgeLabel,
    pub b: EdgeLabel,
}

impl Stitching {
    pub fn new(a: EdgeLabel, b: EdgeLabel) -> Self {
        Stitching { a, b }
    }
}

impl fmt::Display for Stitching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// Labels of the connections `(b₁,b₂)`, `(t₂,t₃)`, `(b₃,b₄)`; the
/// `(t₁,t₄)` connection is edge 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "[u32; 3]", into = "[u32; 3]")]
pub struct TangleValues {
    pub v1: EdgeLabel,
    pub v2: EdgeLabel,
    pub v3: EdgeLabel,
}

impl TangleValues {
    pub fn new(v1: u32, v2: u32, v3: u32) -> Option<Self> {
        Some(TangleValues {
            v1: EdgeLabel::new(v1)?,
            v2: EdgeLabel::new(v2)?,
            v3: EdgeLabel::new(v3)?,
        })
    }

    /// The cut set `[1, v1, v2, v3]`.
    pub fn cut_labels(&self) -> [u32; 4] {
        [1, self.v1.get(), self.v2.get(), self.v3.get()]
    }

    /// First label that occurs twice in the cut set, if any.
    pub fn repeated_label(&self) -> Option<u32> {
        first_repeat(&self.cut_labels())
    }
}

impl TryFrom<[u32; 3]> for TangleValues {
    type Error = String;

    fn try_from(v: [u32; 3]) -> Result<Self, Self::Error> {
        TangleValues::new(v[0], v[1], v[2]).ok_or_else(|| "tangle values must be >= 1".to_string())
    }
}

impl From<TangleValues> for [u32; 3] {
    fn from(v: TangleValues) -> Self {
        [v.v1.get(), v.v2.get(), v.v3.get()]
    }
}

impl fmt::Display for TangleValues {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.v1, self.v2, self.v3)
    }
}

fn first_repeat(labels: &[u32]) -> Option<u32> {
    let mut seen = BTreeSet::new();
    labels.iter().copied().find(|x| !seen.insert(*x))
}

/// Which piece of a cut edge takes which end role.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EndAssignment {
    /// The piece entering the next crossing along the knot's orientation
    /// becomes `t₁`, `b₂`, `t₃`, `b₄`.
    Forward,
    /// Heads and tails swapped.
    Mirrored,
}

impl Tangle {
    /// Checks that `tops` and `bottoms` are disjoint and together are exactly
    /// the open ends of `interior`.
    pub fn new(
        interior: PlanarDiagram,
        tops: Vec<EdgeLabel>,
        bottoms: Vec<EdgeLabel>,
    ) -> Result<Self, TangleError> {
        let mut ends = BTreeSet::new();
        for &x in tops.iter().chain(&bottoms) {
            if !ends.insert(x) {
                return Err(TangleError::EndMismatch);
            }
        }
        if ends != interior.boundary_labels() {
            return Err(TangleError::EndMismatch);
        }
        Ok(Tangle {
            interior,
            tops,
            bottoms,
        })
    }

    pub fn interior(&self) -> &PlanarDiagram {
        &self.interior
    }

    pub fn tops(&self) -> &[EdgeLabel] {
        &self.tops
    }

    pub fn bottoms(&self) -> &[EdgeLabel] {
        &self.bottoms
    }

    pub fn crossing_count(&self) -> usize {
        self.interior.crossing_count()
    }

    pub fn is_closed(&self) -> bool {
        self.tops.is_empty() && self.bottoms.is_empty()
    }

    /// The closed diagram of a tangle with no open ends.
    pub fn into_closed(self) -> Result<PlanarDiagram, TangleError> {
        self.interior.require_closed()?;
        Ok(self.interior)
    }

    /// Joins each pair of ends. Two crossing ends merge under the smaller
    /// label; an end attached to a crossingless arc takes the arc's other
    /// label. Ends not mentioned keep their names and relative order.
    pub fn stitch(&self, pairs: &[Stitching]) -> Result<Tangle, TangleError> {
        let ends: BTreeSet<EdgeLabel> = self.tops.iter().chain(&self.bottoms).copied().collect();
        let mut used = BTreeSet::new();
        for s in pairs {
            if s.a == s.b {
                return Err(TangleError::SelfStitch(s.a.get()));
            }
            for x in [s.a, s.b] {
                if !ends.contains(&x) {
                    return Err(TangleError::NotAnEnd(x.get()));
                }
                if !used.insert(x) {
                    return Err(TangleError::ReusedEnd(x.get()));
                }
            }
        }

        let mut crossings: Vec<[u32; 4]> = self
            .interior
            .crossings()
            .iter()
            .map(Crossing::labels)
            .collect();
        let mut arcs: Vec<(u32, u32)> = self
            .interior
            .arcs()
            .iter()
            .map(|&(a, b)| (a.get(), b.get()))
            .collect();
        let mut free_loops = self.interior.free_loops();
        let rename = |crossings: &mut Vec<[u32; 4]>, from: u32, to: u32| {
            for c in crossings.iter_mut() {
                for x in c.iter_mut() {
                    if *x == from {
                        *x = to;
                    }
                }
            }
        };
        let arc_with =
            |arcs: &[(u32, u32)], x: u32| arcs.iter().position(|&(a, b)| a == x || b == x);
        let other_end = |arc: (u32, u32), x: u32| if arc.0 == x { arc.1 } else { arc.0 };

        for s in pairs {
            let (a, b) = (s.a.get(), s.b.get());
            match (arc_with(&arcs, a), arc_with(&arcs, b)) {
                (None, None) => rename(&mut crossings, a.max(b), a.min(b)),
                (Some(i), None) | (None, Some(i)) => {
                    let (on_arc, on_crossing) = if arc_with(&arcs, a).is_some() {
                        (a, b)
                    } else {
                        (b, a)
                    };
                    let far = other_end(arcs[i], on_arc);
                    arcs.swap_remove(i);
                    rename(&mut crossings, on_crossing, far);
                }
                (Some(i), Some(j)) if i == j => {
                    arcs.swap_remove(i);
                    free_loops += 1;
                }
                (Some(i), Some(j)) => {
                    let merged = (other_end(arcs[i], a), other_end(arcs[j], b));
                    arcs[i] = (merged.0.min(merged.1), merged.0.max(merged.1));
                    arcs.swap_remove(j);
                }
            }
        }

        let interior = PlanarDiagram::with_arcs(
            crossings
                .into_iter()
                .map(Crossing::new)
                .collect::<Result<_, _>>()?,
            arcs.into_iter()
                .map(|(a, b)| {
                    (
                        EdgeLabel::new(a).expect("label >= 1"),
                        EdgeLabel::new(b).expect("label >= 1"),
                    )
                })
                .collect(),
            free_loops,
        )?;
        let keep = |xs: &[EdgeLabel]| xs.iter().copied().filter(|x| !used.contains(x)).collect();
        Tangle::new(interior, keep(&self.tops), keep(&self.bottoms))
    }

    /// τ: stitches `(t₁,t₂), (t₃,t₄), …`.
    pub fn top_closure(&self) -> Result<Tangle, TangleError> {
        self.stitch(&top_stitchings(&self.tops)?)
    }

    /// β: stitches `(b₁,b₂), (b₃,b₄), …`.
    pub fn bottom_closure(&self) -> Result<Tangle, TangleError> {
        self.stitch(&bottom_stitchings(&self.bottoms)?)
    }

    /// φ: stitches `(b₁,b₂), (t₂,t₃), (b₃,b₄), …, (b₂ₙ₋₁,b₂ₙ)`, leaving
    /// `t₁` and `t₂ₙ` open.
    pub fn full_closure(&self) -> Result<Tangle, TangleError> {
        self.stitch(&full_stitchings(&self.tops, &self.bottoms)?)
    }

    /// Pairs of ends joined by a strand, in the order their strands are
    /// first reached from the ends.
    pub fn strands(&self) -> Vec<(EdgeLabel, EdgeLabel)> {
        let mut out: Vec<(EdgeLabel, EdgeLabel)> = self.interior.arcs().to_vec();
        for walk in self.interior.walks() {
            if walk.closed {
                continue;
            }
            let first = *walk.labels.first().expect("open walk has labels");
            let last = *walk.labels.last().expect("open walk has labels");
            out.push((
                EdgeLabel::new(first).expect("label >= 1"),
                EdgeLabel::new(last).expect("label >= 1"),
            ));
        }
        out
    }

    /// Whether strand `k` joins `t_k` to `b_k` for every `k`.
    pub fn is_pure_braid(&self) -> bool {
        if self.tops.len() != self.bottoms.len() {
            return false;
        }
        let strands = self.strands();
        strands.len() == self.tops.len()
            && self.tops.iter().zip(&self.bottoms).all(|(&t, &b)| {
                strands
                    .iter()
                    .any(|&(x, y)| (x, y) == (t, b) || (x, y) == (b, t))
            })
    }
}

fn pairs_of(xs: &[EdgeLabel], side: &'static str) -> Result<Vec<Stitching>, TangleError> {
    if xs.len() % 2 != 0 {
        return Err(TangleError::OddEnds {
            side,
            count: xs.len(),
        });
    }
    Ok(xs.chunks(2).map(|p| Stitching::new(p[0], p[1])).collect())
}

/// The stitchings applied by τ.
pub fn top_stitchings(tops: &[EdgeLabel]) -> Result<Vec<Stitching>, TangleError> {
    pairs_of(tops, "top")
}

/// The stitchings applied by β.
pub fn bottom_stitchings(bottoms: &[EdgeLabel]) -> Result<Vec<Stitching>, TangleError> {
    pairs_of(bottoms, "bottom")
}

/// The stitchings applied by φ.
pub fn full_stitchings(
    tops: &[EdgeLabel],
    bottoms: &[EdgeLabel],
) -> Result<Vec<Stitching>, TangleError> {
    let shape = TangleError::FullClosureShape {
        tops: tops.len(),
        bottoms: bottoms.len(),
    };
    if tops.is_empty() || tops.len() != bottoms.len() || tops.len() % 2 != 0 {
        return Err(shape);
    }
    let n = tops.len() / 2;
    let mut out = Vec::with_capacity(2 * n - 1);
    for k in 0..n {
        out.push(Stitching::new(bottoms[2 * k], bottoms[2 * k + 1]));
        if k + 1 < n {
            out.push(Stitching::new(tops[2 * k + 1], tops[2 * k + 2]));
        }
    }
    Ok(out)
}

/// `n` crossingless strands; strand `k` has ends `t_k = 2k-1` and `b_k = 2k`.
pub fn untangle(n: usize) -> Result<Tangle, TangleError> {
    if n == 0 {
        return Err(TangleError::NoStrands);
    }
    let label = |x: usize| EdgeLabel::new(x as u32).expect("label >= 1");
    let arcs = (1..=n).map(|k| (label(2 * k - 1), label(2 * k))).collect();
    let tops = (1..=n).map(|k| label(2 * k - 1)).collect();
    let bottoms = (1..=n).map(|k| label(2 * k)).collect();
    Tangle::new(
        PlanarDiagram::with_arcs(Vec::new(), arcs, 0)?,
        tops,
        bottoms,
    )
}

/// Cuts a knot diagram along edges `[1, v1, v2, v3]` into a 4-strand
/// tangle. Each cut edge keeps its label on the piece entering the next
/// crossing; the other piece gets a fresh label above the current maximum.
pub fn cut(
    pd: &PlanarDiagram,
    labels: &[u32],
    assignment: EndAssignment,
) -> Result<Tangle, TangleError> {
    if labels.len() != 4 {
        return Err(TangleError::CutArity(labels.len()));
    }
    if let Some(x) = first_repeat(labels) {
        return Err(TangleError::DegenerateCut(x));
    }
    let components = pd.trace_components()?.count;
    if components != 1 {
        return Err(TangleError::NotAKnot(components));
    }
    let orientation = pd.orient()?;
    let index = pd.slot_index();
    let mut crossings: Vec<[u32; 4]> = pd.crossings().iter().map(Crossing::labels).collect();
    let mut next = pd.max_label();
    let mut heads = Vec::with_capacity(4);
    let mut tails = Vec::with_capacity(4);
    for &e in labels {
        let [Some(s1), Some(s2)] = index.slots_of(e) else {
            return Err(TangleError::UnknownEdge(e));
        };
        let is_incoming = |(c, p): (usize, usize)| orientation.incoming_slots(c).contains(&p);
        let tail = if is_incoming(s1) { s2 } else { s1 };
        debug_assert!(is_incoming(if tail == s1 { s2 } else { s1 }));
        next += 1;
        crossings[tail.0][tail.1] = next;
        let label = |x| EdgeLabel::new(x).expect("label >= 1");
        heads.push(label(e));
        tails.push(label(next));
    }
    let (heads, tails) = match assignment {
        EndAssignment::Forward => (heads, tails),
        EndAssignment::Mirrored => (tails, heads),
    };
    // flow t₁ → b₁, b₂ → t₂, t₃ → b₃, b₄ → t₄ around the knot
    let tops = vec![heads[0], tails[2], heads[2], tails[0]];
    let bottoms = vec![tails[1], heads[1], tails[3], heads[3]];
    let interior = PlanarDiagram::new(
        crossings
            .into_iter()
            .map(Crossing::new)
            .collect::<Result<_, _>>()?,
        pd.free_loops(),
    )?;
    Tangle::new(interior, tops, bottoms)
}

/// The four stitchings that undo [`cut`]: `(t₁,t₄), (b₁,b₂), (t₂,t₃), (b₃,b₄)`.
pub fn restitch(t: &Tangle) -> Result<PlanarDiagram, TangleError> {
    let (tp, bt) = (t.tops(), t.bottoms());
    if tp.len() != 4 || bt.len() != 4 {
        return Err(TangleError::CutArity(tp.len().max(bt.len())));
    }
    t.stitch(&[
        Stitching::new(tp[0], tp[3]),
        Stitching::new(bt[0], bt[1]),
        Stitching::new(tp[1], tp[2]),
        Stitching::new(bt[2], bt[3]),
    ])?
    .into_closed()
}

/// `(β∘τ)` of the tangle cut out of `pd` by `values`.
pub fn unlink_candidate(
    pd: &PlanarDiagram,
    values: &TangleValues,
    assignment: EndAssignment,
) -> Result<PlanarDiagram, TangleError> {
    cut(pd, &values.cut_labels(), assignment)?
        .top_closure()?
        .bottom_closure()?
        .into_closed()
}

/// Parses an end name such as `t1` or `b4` into its label.
pub fn end_by_name(t: &Tangle, name: &str) -> Option<EdgeLabel> {
    let (side, k) = name.split_at(1);
    let k: usize = k.parse().ok()?;
    let list = match side {
        "t" | "T" => t.tops(),
        "b" | "B" => t.bottoms(),
        _ => return None,
    };
    list.get(k.checked_sub(1)?).copied()
}

impl fmt::Display for Tangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = |xs: &[EdgeLabel]| {
            xs.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "{} | tops [{}] | bottoms [{}]",
            self.interior,
            names(&self.tops),
            names(&self.bottoms)
        )
    }
}
