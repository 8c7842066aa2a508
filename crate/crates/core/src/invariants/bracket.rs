//! Kauffman bracket by crossing-at-a-time contraction.
//!
//! Crossings are absorbed one by one. The running state is a map from a
//! pairing of the currently open edge labels (how the smoothed arcs seen so
//! far connect them) to the accumulated polynomial weight of all partial
//! states producing that pairing. Closed loops are paid for immediately with
//! a factor of `δ = -A² - A⁻²`, so the frontier only carries open arcs.

use std::collections::HashMap;

use crate::error::InvariantError;
use crate::pd::PlanarDiagram;
use crate::poly::{Grid, LaurentPolynomial};

/// Dense polynomial in `A`: `coeffs[k]` multiplies `A^(low + k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Dense {
    low: i32,
    coeffs: Vec<i64>,
}

impl Dense {
    fn one() -> Self {
        Dense {
            low: 0,
            coeffs: vec![1],
        }
    }

    /// `self += other * A^shift`.
    fn add_shifted(&mut self, other: &Dense, shift: i32) -> Result<(), InvariantError> {
        let other_low = other.low + shift;
        let other_high = other_low + other.coeffs.len() as i32;
        if self.coeffs.is_empty() {
            self.low = other_low;
        }
        let new_low = self.low.min(other_low);
        let new_high = (self.low + self.coeffs.len() as i32).max(other_high);
        if new_low < self.low {
            let pad = (self.low - new_low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(0, pad));
            self.low = new_low;
        }
        self.coeffs.resize((new_high - self.low) as usize, 0);
        let offset = (other_low - self.low) as usize;
        for (k, &c) in other.coeffs.iter().enumerate() {
            let slot = &mut self.coeffs[offset + k];
            *slot = slot.checked_add(c).ok_or(InvariantError::Overflow)?;
        }
        Ok(())
    }

    /// Multiplies by `δ^loops`.
    fn times_delta_pow(&self, loops: u32) -> Result<Dense, InvariantError> {
        let mut cur = self.clone();
        for _ in 0..loops {
            let mut next = Dense {
                low: cur.low - 2,
                coeffs: vec![0; cur.coeffs.len() + 4],
            };
            for (k, &c) in cur.coeffs.iter().enumerate() {
                let neg = c.checked_neg().ok_or(InvariantError::Overflow)?;
                next.coeffs[k] = next.coeffs[k]
                    .checked_add(neg)
                    .ok_or(InvariantError::Overflow)?;
                next.coeffs[k + 4] = next.coeffs[k + 4]
                    .checked_add(neg)
                    .ok_or(InvariantError::Overflow)?;
            }
            cur = next;
        }
        Ok(cur)
    }

    fn into_laurent(self) -> LaurentPolynomial {
        let low = self.low;
        LaurentPolynomial::from_terms(
            Grid::A,
            self.coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| (low + k as i32, c)),
        )
    }
}

/// Pairing of open labels, kept sorted with `a < b` for hashing.
type Pairing = Vec<(u32, u32)>;

fn take_partner(pairing: &mut Pairing, x: u32) -> Option<u32> {
    let pos = pairing.iter().position(|&(a, b)| a == x || b == x)?;
    let (a, b) = pairing.swap_remove(pos);
    Some(if a == x { b } else { a })
}

/// Adds a smoothed arc between the slots labelled `x` and `y`; returns the
/// number of loops it closes.
fn join(pairing: &mut Pairing, x: u32, y: u32) -> u32 {
    if x == y {
        return 1;
    }
    let end_x = match take_partner(pairing, x) {
        Some(p) if p == y => return 1,
        Some(p) => p,
        None => x,
    };
    let end_y = take_partner(pairing, y).unwrap_or(y);
    pairing.push((end_x.min(end_y), end_x.max(end_y)));
    0
}

/// Greedy contraction order: each step takes the crossing sharing the most
/// slots with the already-open frontier, lowest index on ties.
pub(crate) fn contraction_order(pd: &PlanarDiagram) -> Vec<usize> {
    let crossings = pd.crossings();
    let n = crossings.len();
    let mut done = vec![false; n];
    let mut open: HashMap<u32, u32> = HashMap::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| {
                let shared = crossings[c]
                    .labels()
                    .iter()
                    .filter(|x| open.contains_key(x))
                    .count();
                (shared, std::cmp::Reverse(c))
            })
            .expect("an unprocessed crossing remains");
        done[next] = true;
        order.push(next);
        for x in crossings[next].labels() {
            *open.entry(x).or_insert(0) += 1;
            if open[&x] == 2 {
                open.remove(&x);
            }
        }
    }
    order
}

/// `⟨D⟩` normalized so that a single crossingless circle has bracket 1.
pub fn kauffman_bracket(pd: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    pd.require_closed()?;
    let delta = LaurentPolynomial::from_terms(Grid::A, [(2, -1), (-2, -1)]);
    if pd.crossing_count() == 0 {
        let loops = pd.free_loops();
        if loops == 0 {
            return Err(InvariantError::EmptyDiagram);
        }
        let mut out = LaurentPolynomial::one(Grid::A);
        for _ in 1..loops {
            out = out.checked_mul(&delta)?;
        }
        return Ok(out);
    }

    let mut states: HashMap<Pairing, Dense> = HashMap::new();
    states.insert(Vec::new(), Dense::one());
    for c in contraction_order(pd) {
        let [i, j, k, l] = pd.crossings()[c].labels();
        let mut next: HashMap<Pairing, Dense> = HashMap::with_capacity(states.len() * 2);
        for (pairing, weight) in &states {
            // A-smoothing joins (i,j)(k,l); B-smoothing joins (i,l)(j,k).
            for (arcs, a_power) in [([(i, j), (k, l)], 1), ([(i, l), (j, k)], -1)] {
                let mut p = pairing.clone();
                let loops: u32 = arcs.iter().map(|&(x, y)| join(&mut p, x, y)).sum();
                p.sort_unstable();
                let w = weight.times_delta_pow(loops)?;
                next.entry(p)
                    .or_insert_with(|| Dense {
                        low: 0,
                        coeffs: Vec::new(),
                    })
                    .add_shifted(&w, a_power)?;
            }
        }
        states = next;
    }
    let total = states
        .remove(&Vec::new())
        .map(Dense::into_laurent)
        .unwrap_or_else(|| LaurentPolynomial::zero(Grid::A));
    // every state closes at least one loop; drop one factor of δ
    let mut out = total
        .div_exact(&delta)
        .expect("state sum of a closed diagram is divisible by δ");
    for _ in 0..pd.free_loops() {
        out = out.checked_mul(&delta)?;
    }
    Ok(out)
}
