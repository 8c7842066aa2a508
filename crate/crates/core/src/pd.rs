//! Planar diagram codes.
//!
//! A crossing is written `X_{i,j,k,l}`: `i` is the incoming edge of the
//! under-strand, and `j`, `k`, `l` follow counterclockwise from it. The
//! under-strand therefore always runs `i -> k`; the over-strand runs either
//! `j -> l` or `l -> j`, which [`PlanarDiagram::orient`] infers from the
//! strand structure.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::PdError;

/// A 1-based edge label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct EdgeLabel(u32);

impl EdgeLabel {
    pub fn new(value: u32) -> Option<Self> {
        (value >= 1).then_some(EdgeLabel(value))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl TryFrom<u32> for EdgeLabel {
    type Error = PdError;

    fn try_from(value: u32) -> Result<Self, Self::Error> {
        EdgeLabel::new(value).ok_or(PdError::ZeroLabel)
    }
}

impl From<EdgeLabel> for u32 {
    fn from(label: EdgeLabel) -> u32 {
        label.0
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One 4-valent crossing `X_{i,j,k,l}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing([u32; 4]);

impl Crossing {
    pub fn new(labels: [u32; 4]) -> Result<Self, PdError> {
        if labels.contains(&0) {
            return Err(PdError::ZeroLabel);
        }
        Ok(Crossing(labels))
    }

    /// All four labels in slot order `i, j, k, l`.
    pub fn labels(&self) -> [u32; 4] {
        self.0
    }

    pub fn label(&self, slot: usize) -> EdgeLabel {
        EdgeLabel(self.0[slot])
    }

    /// The same crossing seen in a mirror: slots are listed clockwise.
    pub fn mirrored(&self) -> Crossing {
        let [i, j, k, l] = self.0;
        Crossing([i, l, k, j])
    }
}

impl fmt::Display for Crossing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k, l] = self.0;
        write!(f, "X_{{{i},{j},{k},{l}}}")
    }
}

/// Sign of a crossing in an oriented diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CrossingSign {
    Positive,
    Negative,
}

impl CrossingSign {
    pub fn value(self) -> i64 {
        match self {
            CrossingSign::Positive => 1,
            CrossingSign::Negative => -1,
        }
    }
}

/// A slot is one of the four edge ends at a crossing: `(crossing index, position)`.
pub type Slot = (usize, usize);

/// A planar diagram: crossings, crossingless closed loops, and crossingless
/// open arcs (only present in tangle interiors).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PlanarDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    arcs: Vec<(EdgeLabel, EdgeLabel)>,
}

impl PlanarDiagram {
    pub fn new(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, PdError> {
        Self::with_arcs(crossings, Vec::new(), free_loops)
    }

    /// Builds a diagram with crossingless open arcs. Each arc endpoint is a
    /// boundary label and must not appear anywhere else.
    pub fn with_arcs(
        crossings: Vec<Crossing>,
        arcs: Vec<(EdgeLabel, EdgeLabel)>,
        free_loops: usize,
    ) -> Result<Self, PdError> {
        let pd = PlanarDiagram {
            crossings,
            free_loops,
            arcs,
        };
        pd.validate()?;
        Ok(pd)
    }

    fn validate(&self) -> Result<(), PdError> {
        let occ = self.crossing_occurrences();
        if let Some((&label, &count)) = occ.iter().find(|(_, &c)| c > 2) {
            return Err(PdError::LabelOverused { label, count });
        }
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.arcs {
            for end in [a, b] {
                if occ.contains_key(&end.0) || !seen.insert(end.0) {
                    return Err(PdError::ArcConflict { label: end.0 });
                }
            }
        }
        Ok(())
    }

    /// The empty diagram: no crossings, no loops.
    pub fn empty() -> Self {
        PlanarDiagram::default()
    }

    /// `n` disjoint crossingless circles.
    pub fn unlink(n: usize) -> Self {
        PlanarDiagram {
            free_loops: n,
            ..Default::default()
        }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn arcs(&self) -> &[(EdgeLabel, EdgeLabel)] {
        &self.arcs
    }

    fn crossing_occurrences(&self) -> BTreeMap<u32, usize> {
        let mut occ = BTreeMap::new();
        for c in &self.crossings {
            for x in c.0 {
                *occ.entry(x).or_insert(0) += 1;
            }
        }
        occ
    }

    /// Labels that are open ends: occurring once among crossings, or ending an arc.
    pub fn boundary_labels(&self) -> BTreeSet<EdgeLabel> {
        let mut out: BTreeSet<EdgeLabel> = self
            .crossing_occurrences()
            .into_iter()
            .filter(|&(_, c)| c == 1)
            .map(|(x, _)| EdgeLabel(x))
            .collect();
        for &(a, b) in &self.arcs {
            out.insert(a);
            out.insert(b);
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.boundary_labels().is_empty()
    }

    pub fn require_closed(&self) -> Result<(), PdError> {
        let b = self.boundary_labels();
        if b.is_empty() {
            Ok(())
        } else {
            Err(PdError::NotClosed(b.into_iter().map(|x| x.0).collect()))
        }
    }

    /// Every label used by a crossing or an arc.
    pub fn labels(&self) -> BTreeSet<EdgeLabel> {
        let mut out: BTreeSet<EdgeLabel> = self
            .crossings
            .iter()
            .flat_map(|c| c.0)
            .map(EdgeLabel)
            .collect();
        for &(a, b) in &self.arcs {
            out.insert(a);
            out.insert(b);
        }
        out
    }

    pub fn max_label(&self) -> u32 {
        self.labels().iter().next_back().map_or(0, |x| x.0)
    }

    /// The mirror image: every crossing has its counterclockwise order reversed.
    pub fn mirror(&self) -> PlanarDiagram {
        PlanarDiagram {
            crossings: self.crossings.iter().map(Crossing::mirrored).collect(),
            ..self.clone()
        }
    }

    /// Whether the two diagrams differ only by a bijective renaming of edge
    /// labels, with crossings compared position by position.
    pub fn same_up_to_relabel(&self, other: &PlanarDiagram) -> bool {
        if self.crossings.len() != other.crossings.len()
            || self.free_loops != other.free_loops
            || self.arcs.len() != other.arcs.len()
        {
            return false;
        }
        let mut fwd: HashMap<u32, u32> = HashMap::new();
        let mut back: HashMap<u32, u32> = HashMap::new();
        let mut bind = |a: u32, b: u32| -> bool {
            *fwd.entry(a).or_insert(b) == b && *back.entry(b).or_insert(a) == a
        };
        for (x, y) in self.crossings.iter().zip(&other.crossings) {
            for p in 0..4 {
                if !bind(x.0[p], y.0[p]) {
                    return false;
                }
            }
        }
        // arcs touch no crossing, so only their count matters
        true
    }

    pub(crate) fn slot_index(&self) -> SlotIndex {
        SlotIndex::new(&self.crossings)
    }

    /// Walks every strand through the diagram, following `p -> p+2` inside
    /// each crossing. Open strands start at a boundary slot; closed strands
    /// start at the lowest unvisited slot.
    pub(crate) fn walks(&self) -> Vec<Walk> {
        let index = self.slot_index();
        let n = self.crossings.len();
        let mut visited = vec![[false; 4]; n];
        let mut walks = Vec::new();

        let mut boundary_starts: Vec<Slot> = Vec::new();
        for c in 0..n {
            for p in 0..4 {
                if index.partner((c, p)).is_none() {
                    boundary_starts.push((c, p));
                }
            }
        }
        for start in boundary_starts {
            if visited[start.0][start.1] {
                continue;
            }
            walks.push(self.walk_from(start, &index, &mut visited));
        }
        for c in 0..n {
            for p in 0..4 {
                if !visited[c][p] {
                    walks.push(self.walk_from((c, p), &index, &mut visited));
                }
            }
        }
        walks
    }

    fn walk_from(&self, start: Slot, index: &SlotIndex, visited: &mut [[bool; 4]]) -> Walk {
        let mut passages = Vec::new();
        let mut labels = vec![self.crossings[start.0].0[start.1]];
        let mut entry = start;
        loop {
            let (c, p) = entry;
            let exit = (c, (p + 2) % 4);
            visited[c][p] = true;
            visited[exit.0][exit.1] = true;
            passages.push(entry);
            let label = self.crossings[c].0[exit.1];
            match index.partner(exit) {
                None => {
                    labels.push(label);
                    return Walk {
                        passages,
                        labels,
                        closed: false,
                    };
                }
                Some(next) if next == start => {
                    return Walk {
                        passages,
                        labels,
                        closed: true,
                    };
                }
                Some(next) => {
                    labels.push(label);
                    entry = next;
                }
            }
        }
    }

    /// Orients every strand. Strands with an under-passage follow `i -> k`;
    /// strands that only pass over keep the direction they were walked in.
    pub fn orient(&self) -> Result<Orientation, PdError> {
        let mut over_forward = vec![None; self.crossings.len()];
        for walk in self.walks() {
            let forward = walk.passages.iter().any(|&(_, p)| p == 0);
            let backward = walk.passages.iter().any(|&(_, p)| p == 2);
            if forward && backward {
                let &(c, p) = walk
                    .passages
                    .iter()
                    .find(|&&(_, p)| p == 2)
                    .expect("backward passage exists");
                return Err(PdError::Inconsistent {
                    label: self.crossings[c].0[p],
                });
            }
            for &(c, p) in &walk.passages {
                let entry = if backward { (p + 2) % 4 } else { p };
                match entry {
                    1 => over_forward[c] = Some(true),
                    3 => over_forward[c] = Some(false),
                    _ => {}
                }
            }
        }
        Ok(Orientation {
            over_forward: over_forward
                .into_iter()
                .map(|x| x.expect("every crossing has an over passage"))
                .collect(),
        })
    }

    /// Counts link components and assigns each edge label to a component.
    pub fn trace_components(&self) -> Result<Components, PdError> {
        self.require_closed()?;
        self.orient()?;
        let mut component_of = BTreeMap::new();
        let mut count = 0;
        for walk in self.walks() {
            for &x in &walk.labels {
                component_of.insert(EdgeLabel(x), count);
            }
            count += 1;
        }
        Ok(Components {
            count: count + self.free_loops,
            component_of,
        })
    }

    /// Faces of a closed diagram as cycles of darts. A dart `(c, p)` runs
    /// along the edge at that slot away from crossing `c`.
    pub fn faces(&self) -> Vec<Vec<Slot>> {
        let index = self.slot_index();
        let n = self.crossings.len();
        let mut seen = vec![[false; 4]; n];
        let mut faces = Vec::new();
        for c in 0..n {
            for p in 0..4 {
                if seen[c][p] {
                    continue;
                }
                let mut face = Vec::new();
                let mut dart = (c, p);
                while !seen[dart.0][dart.1] {
                    seen[dart.0][dart.1] = true;
                    face.push(dart);
                    let Some((c2, p2)) = index.partner(dart) else {
                        break;
                    };
                    dart = (c2, (p2 + 3) % 4);
                }
                faces.push(face);
            }
        }
        faces
    }

    /// Euler-characteristic check: each connected piece with `v` crossings
    /// must bound exactly `v + 2` faces on the sphere.
    pub fn is_planar(&self) -> bool {
        if self.require_closed().is_err() {
            return false;
        }
        let n = self.crossings.len();
        if n == 0 {
            return true;
        }
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            let mut y = x;
            while parent[y] != r {
                let next = parent[y];
                parent[y] = r;
                y = next;
            }
            r
        }
        let index = self.slot_index();
        for c in 0..n {
            for p in 0..4 {
                if let Some((c2, _)) = index.partner((c, p)) {
                    let (a, b) = (find(&mut parent, c), find(&mut parent, c2));
                    parent[a] = b;
                }
            }
        }
        let pieces = (0..n).filter(|&c| find(&mut parent, c) == c).count();
        self.faces().len() == n + 2 * pieces
    }

    /// Removes the listed crossings and joins label pairs in their place.
    /// Labels joined into one class are renamed to the class's smallest
    /// surviving label; a class with no surviving occurrence becomes a free
    /// loop.
    pub(crate) fn splice(&self, remove: &[usize], joins: &[(u32, u32)]) -> PlanarDiagram {
        let mut parent: BTreeMap<u32, u32> = BTreeMap::new();
        fn find(parent: &mut BTreeMap<u32, u32>, x: u32) -> u32 {
            let mut r = x;
            while let Some(&p) = parent.get(&r) {
                if p == r {
                    break;
                }
                r = p;
            }
            parent.insert(x, r);
            r
        }
        for &(a, b) in joins {
            parent.entry(a).or_insert(a);
            parent.entry(b).or_insert(b);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent.insert(ra.max(rb), ra.min(rb));
            }
        }
        let kept: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|(i, _)| !remove.contains(i))
            .map(|(_, c)| *c)
            .collect();
        let members: Vec<u32> = parent.keys().copied().collect();
        let mut classes: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for x in members {
            let r = find(&mut parent, x);
            classes.entry(r).or_default().push(x);
        }
        let surviving: BTreeSet<u32> = kept.iter().flat_map(|c| c.0).collect();
        let mut rename: HashMap<u32, u32> = HashMap::new();
        let mut free_loops = self.free_loops;
        for labels in classes.values() {
            match labels
                .iter()
                .copied()
                .filter(|x| surviving.contains(x))
                .min()
            {
                None => free_loops += 1,
                Some(rep) => {
                    for &x in labels {
                        rename.insert(x, rep);
                    }
                }
            }
        }
        let crossings = kept
            .into_iter()
            .map(|c| Crossing(c.0.map(|x| *rename.get(&x).unwrap_or(&x))))
            .collect();
        PlanarDiagram {
            crossings,
            free_loops,
            arcs: self.arcs.clone(),
        }
    }

    /// Applies a label map to every crossing and arc.
    pub fn relabeled(&self, f: impl Fn(u32) -> u32) -> PlanarDiagram {
        PlanarDiagram {
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing(c.0.map(&f)))
                .collect(),
            free_loops: self.free_loops,
            arcs: self
                .arcs
                .iter()
                .map(|&(a, b)| (EdgeLabel(f(a.0)), EdgeLabel(f(b.0))))
                .collect(),
        }
    }

    /// Renumbers a closed diagram `1..=2n` along its strands, component by
    /// component, so that labels increase by one through each crossing.
    pub fn renumbered(&self) -> Result<PlanarDiagram, PdError> {
        self.require_closed()?;
        let orientation = self.orient()?;
        let mut walks = self.walks();
        walks.sort_by_key(|w| w.labels.iter().copied().min());
        let mut map = HashMap::new();
        let mut next = 1;
        for walk in &walks {
            let oriented = orientation.orient_walk(walk);
            let start = oriented
                .iter()
                .enumerate()
                .min_by_key(|(_, x)| **x)
                .map_or(0, |(i, _)| i);
            for k in 0..oriented.len() {
                let x = oriented[(start + k) % oriented.len()];
                map.entry(x).or_insert_with(|| {
                    next += 1;
                    next - 1
                });
            }
        }
        Ok(self.relabeled(|x| map[&x]))
    }

    /// Whether the labels of a closed diagram run `1..=n` and increase by one
    /// (wrapping `n -> 1`) along every strand in its oriented direction.
    pub fn has_incrementing_labels(&self) -> bool {
        let Ok(orientation) = self.orient() else {
            return false;
        };
        let labels = self.labels();
        let n = labels.len() as u32;
        if labels.iter().enumerate().any(|(i, x)| x.0 != i as u32 + 1) {
            return false;
        }
        self.crossings.iter().enumerate().all(|(c, x)| {
            let [i, j, k, l] = x.0;
            let succ = |a: u32| a % n + 1;
            let (over_in, over_out) = if orientation.over_forward[c] {
                (j, l)
            } else {
                (l, j)
            };
            succ(i) == k && succ(over_in) == over_out
        })
    }

    /// Closure of a braid word on `strands` strands. Generator `s` (1-based)
    /// crosses positions `s` and `s + 1`; positive entries put the strand
    /// rising to the right on top.
    pub fn from_braid_word(strands: usize, word: &[i32]) -> PlanarDiagram {
        let mut current: Vec<u32> = (1..=strands as u32).collect();
        let mut next = strands as u32 + 1;
        let mut crossings = Vec::with_capacity(word.len());
        for &g in word {
            let p = g.unsigned_abs() as usize - 1;
            assert!(p + 1 < strands, "generator {g} out of range");
            let (sw, se) = (current[p], current[p + 1]);
            let (nw, ne) = (next, next + 1);
            next += 2;
            crossings.push(if g > 0 {
                Crossing([se, ne, nw, sw])
            } else {
                Crossing([sw, se, ne, nw])
            });
            current[p] = nw;
            current[p + 1] = ne;
        }
        let rename: HashMap<u32, u32> = current
            .iter()
            .enumerate()
            .map(|(p, &x)| (x, p as u32 + 1))
            .collect();
        let free_loops = current
            .iter()
            .enumerate()
            .filter(|&(p, &x)| x == p as u32 + 1)
            .count();
        PlanarDiagram {
            crossings,
            free_loops,
            arcs: Vec::new(),
        }
        .relabeled(|x| *rename.get(&x).unwrap_or(&x))
    }
}

/// Orientation of a diagram: the direction of each crossing's over-strand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    over_forward: Vec<bool>,
}

impl Orientation {
    /// True when the over-strand at crossing `c` runs from slot `j` to slot `l`.
    pub fn over_runs_j_to_l(&self, c: usize) -> bool {
        self.over_forward[c]
    }

    /// Crossing sign. With slots read counterclockwise from the incoming
    /// under-edge, an over-strand running `l -> j` makes a positive crossing.
    pub fn sign(&self, c: usize) -> CrossingSign {
        if self.over_forward[c] {
            CrossingSign::Negative
        } else {
            CrossingSign::Positive
        }
    }

    /// Slot positions at which strands enter crossing `c`.
    pub fn incoming_slots(&self, c: usize) -> [usize; 2] {
        [0, if self.over_forward[c] { 1 } else { 3 }]
    }

    /// Slot positions at which strands leave crossing `c`.
    pub fn outgoing_slots(&self, c: usize) -> [usize; 2] {
        [2, if self.over_forward[c] { 3 } else { 1 }]
    }

    pub(crate) fn orient_walk(&self, walk: &Walk) -> Vec<u32> {
        let backward = walk.passages.iter().any(|&(c, p)| {
            p == 2 || (p == 1 && !self.over_forward[c]) || (p == 3 && self.over_forward[c])
        });
        let mut labels = walk.labels.clone();
        if backward {
            labels.reverse();
        }
        labels
    }
}

/// Result of [`PlanarDiagram::trace_components`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub count: usize,
    pub component_of: BTreeMap<EdgeLabel, usize>,
}

#[derive(Debug, Clone)]
pub(crate) struct Walk {
    /// `(crossing, entry slot)` in walking order.
    pub passages: Vec<Slot>,
    /// Edge labels in walking order; an open walk lists both end labels.
    pub labels: Vec<u32>,
    pub closed: bool,
}

/// Locates the (at most two) slots carrying each label.
pub(crate) struct SlotIndex {
    labels: Vec<[u32; 4]>,
    slots: HashMap<u32, [Option<Slot>; 2]>,
}

impl SlotIndex {
    fn new(crossings: &[Crossing]) -> Self {
        let mut slots: HashMap<u32, [Option<Slot>; 2]> = HashMap::new();
        for (c, x) in crossings.iter().enumerate() {
            for (p, &label) in x.0.iter().enumerate() {
                let entry = slots.entry(label).or_insert([None, None]);
                if entry[0].is_none() {
                    entry[0] = Some((c, p));
                } else {
                    entry[1] = Some((c, p));
                }
            }
        }
        SlotIndex {
            labels: crossings.iter().map(|c| c.0).collect(),
            slots,
        }
    }

    /// The other slot carrying the same label, if any.
    pub fn partner(&self, slot: Slot) -> Option<Slot> {
        let [a, b] = self.slots[&self.labels[slot.0][slot.1]];
        if a == Some(slot) {
            b
        } else {
            a
        }
    }

    pub fn slots_of(&self, label: u32) -> [Option<Slot>; 2] {
        self.slots.get(&label).copied().unwrap_or([None, None])
    }
}

/// Parses whitespace- or comma-separated crossing tokens such as
/// `X_{1,2,3,4}`, `X[1,2,3,4]` or `X1,2,3,4`.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram, PdError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let mut crossings = Vec::new();
    let mut index = 0;
    let is_sep = |ch: char| ch.is_whitespace() || matches!(ch, ',' | ';' | '$');
    while pos < chars.len() {
        if is_sep(chars[pos]) {
            pos += 1;
            continue;
        }
        index += 1;
        let start = pos;
        let token_text =
            |end: usize| -> String { chars[start..end.min(chars.len())].iter().collect() };
        if chars[pos] != 'X' {
            let mut end = pos;
            while end < chars.len() && !chars[end].is_whitespace() {
                end += 1;
            }
            return Err(PdError::Malformed {
                index,
                token: token_text(end),
                reason: "expected a token starting with `X`",
            });
        }
        pos += 1;
        let mut labels = [0u32; 4];
        for slot in labels.iter_mut() {
            while pos < chars.len() && !chars[pos].is_ascii_digit() {
                match chars[pos] {
                    'X' => {
                        return Err(PdError::Malformed {
                            index,
                            token: token_text(pos),
                            reason: "fewer than 4 labels",
                        })
                    }
                    '-' => {
                        return Err(PdError::Malformed {
                            index,
                            token: token_text(pos + 1),
                            reason: "negative label",
                        })
                    }
                    ch if ch.is_alphabetic() => {
                        return Err(PdError::Malformed {
                            index,
                            token: token_text(pos + 1),
                            reason: "unexpected letter",
                        })
                    }
                    _ => pos += 1,
                }
            }
            if pos == chars.len() {
                return Err(PdError::Malformed {
                    index,
                    token: token_text(pos),
                    reason: "fewer than 4 labels",
                });
            }
            let digits_start = pos;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                pos += 1;
            }
            let digits: String = chars[digits_start..pos].iter().collect();
            *slot = digits.parse().map_err(|_| PdError::Malformed {
                index,
                token: token_text(pos),
                reason: "label out of range",
            })?;
            if *slot == 0 {
                return Err(PdError::Malformed {
                    index,
                    token: token_text(pos),
                    reason: "labels must be >= 1",
                });
            }
        }
        while pos < chars.len() && matches!(chars[pos], '}' | ']' | ')' | '$') {
            pos += 1;
        }
        if pos < chars.len() && !is_sep(chars[pos]) && chars[pos] != 'X' {
            return Err(PdError::Malformed {
                index,
                token: token_text(pos + 1),
                reason: "more than 4 labels or trailing garbage",
            });
        }
        crossings.push(Crossing(labels));
    }
    PlanarDiagram::new(crossings, 0)
}

/// Canonical text form: space-separated `X_{i,j,k,l}` tokens.
pub fn serialize_pd(pd: &PlanarDiagram) -> String {
    pd.crossings
        .iter()
        .map(Crossing::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_pd(self))
    }
}
