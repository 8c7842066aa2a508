//! Alexander polynomial from the crossing relations over diagram arcs.

use std::collections::HashMap;

use crate::error::InvariantError;
use crate::pd::{CrossingSign, PlanarDiagram};
use crate::poly::{Grid, LaurentPolynomial};

/// Polynomial in `t` with non-negative exponents; `self.0[k]` multiplies `t^k`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
struct Poly(Vec<i64>);

impl Poly {
    fn from_coeffs(mut c: Vec<i64>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly(c)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add(&mut self, k: usize, c: i64) {
        if self.0.len() <= k {
            self.0.resize(k + 1, 0);
        }
        self.0[k] += c;
        *self = Poly::from_coeffs(std::mem::take(&mut self.0));
    }

    fn mul(&self, rhs: &Poly) -> Result<Poly, InvariantError> {
        if self.is_zero() || rhs.is_zero() {
            return Ok(Poly::default());
        }
        let mut out = vec![0i64; self.0.len() + rhs.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in rhs.0.iter().enumerate() {
                let p = a.checked_mul(b).ok_or(InvariantError::Overflow)?;
                out[i + j] = out[i + j].checked_add(p).ok_or(InvariantError::Overflow)?;
            }
        }
        Ok(Poly::from_coeffs(out))
    }

    fn sub(&self, rhs: &Poly) -> Result<Poly, InvariantError> {
        let mut out = vec![0i64; self.0.len().max(rhs.0.len())];
        for (k, slot) in out.iter_mut().enumerate() {
            let a = self.0.get(k).copied().unwrap_or(0);
            let b = rhs.0.get(k).copied().unwrap_or(0);
            *slot = a.checked_sub(b).ok_or(InvariantError::Overflow)?;
        }
        Ok(Poly::from_coeffs(out))
    }

    /// Exact quotient; the caller guarantees divisibility.
    fn div_exact(&self, divisor: &Poly) -> Poly {
        let mut rem = self.0.clone();
        let dl = divisor.0.len();
        let lead = *divisor.0.last().expect("nonzero divisor");
        if rem.len() < dl {
            debug_assert!(rem.iter().all(|&c| c == 0));
            return Poly::default();
        }
        let mut q = vec![0i64; rem.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let c = rem[k + dl - 1];
            debug_assert_eq!(c % lead, 0, "inexact Bareiss division");
            let f = c / lead;
            q[k] = f;
            for (m, &d) in divisor.0.iter().enumerate() {
                rem[k + m] -= f * d;
            }
        }
        debug_assert!(rem.iter().all(|&c| c == 0), "inexact Bareiss division");
        Poly::from_coeffs(q)
    }
}

/// Fraction-free (Bareiss) determinant over `Z[t]`.
fn determinant(mut m: Vec<Vec<Poly>>) -> Result<Poly, InvariantError> {
    let n = m.len();
    if n == 0 {
        return Ok(Poly(vec![1]));
    }
    let mut negate = false;
    let mut prev = Poly(vec![1]);
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(Poly::default());
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul(&m[i][j])?.sub(&m[i][k].mul(&m[k][j])?)?;
                m[i][j] = num.div_exact(&prev);
            }
            m[i][k] = Poly::default();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate {
        Poly(det.0.iter().map(|c| -c).collect())
    } else {
        det
    })
}

/// Arcs are maximal over-strand pieces: the two over-slots of a crossing lie
/// on the same arc; under-slots break arcs.
fn arc_ids(pd: &PlanarDiagram) -> (usize, HashMap<u32, usize>) {
    let mut parent: HashMap<u32, u32> = HashMap::new();
    fn find(parent: &mut HashMap<u32, u32>, x: u32) -> u32 {
        let p = *parent.entry(x).or_insert(x);
        if p == x {
            return x;
        }
        let r = find(parent, p);
        parent.insert(x, r);
        r
    }
    for c in pd.crossings() {
        let [_, j, _, l] = c.labels();
        let (a, b) = (find(&mut parent, j), find(&mut parent, l));
        if a != b {
            parent.insert(a.max(b), a.min(b));
        }
        for x in c.labels() {
            find(&mut parent, x);
        }
    }
    let labels: Vec<u32> = parent.keys().copied().collect();
    let mut id_of_root = HashMap::new();
    let mut id = HashMap::new();
    let mut sorted = labels;
    sorted.sort_unstable();
    for x in sorted {
        let r = find(&mut parent, x);
        let next = id_of_root.len();
        let k = *id_of_root.entry(r).or_insert(next);
        id.insert(x, k);
    }
    (id_of_root.len(), id)
}

/// Normalized Alexander polynomial of a knot: symmetric in `t ↔ t⁻¹` with a
/// positive leading coefficient.
pub fn alexander(pd: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    let components = pd.trace_components()?.count;
    if components != 1 {
        return Err(InvariantError::NotAKnot(components));
    }
    if pd.crossing_count() == 0 {
        return Ok(LaurentPolynomial::one(Grid::T));
    }
    let orientation = pd.orient()?;
    let (arc_count, arc_of) = arc_ids(pd);
    let n = pd.crossing_count();
    debug_assert_eq!(arc_count, n, "a knot diagram has as many arcs as crossings");

    // Row for each crossing, from the abelianized Wirtinger relation
    // (Fox derivatives, negative rows multiplied through by t):
    //   positive: (1 - t)·over + t·in - out
    //   negative: (t - 1)·over + in - t·out
    let mut matrix = vec![vec![Poly::default(); n]; n];
    for (c, crossing) in pd.crossings().iter().enumerate() {
        let [i, j, k, _] = crossing.labels();
        let (over, inc, out) = (arc_of[&j], arc_of[&i], arc_of[&k]);
        let row = &mut matrix[c];
        match orientation.sign(c) {
            CrossingSign::Positive => {
                row[over].add(0, 1);
                row[over].add(1, -1);
                row[inc].add(1, 1);
                row[out].add(0, -1);
            }
            CrossingSign::Negative => {
                row[over].add(1, 1);
                row[over].add(0, -1);
                row[inc].add(0, 1);
                row[out].add(1, -1);
            }
        }
    }
    let minor: Vec<Vec<Poly>> = matrix[..n - 1]
        .iter()
        .map(|row| row[..n - 1].to_vec())
        .collect();
    let det = determinant(minor)?;
    Ok(normalize(LaurentPolynomial::from_terms(
        Grid::T,
        det.0.iter().enumerate().map(|(k, &c)| (k as i32, c)),
    )))
}

/// Multiplies by a unit `±t^k` so that the exponent range is centred on
/// zero and the top coefficient is positive.
pub fn normalize(p: LaurentPolynomial) -> LaurentPolynomial {
    let (Some(lo), Some(hi)) = (p.min_exponent(), p.max_exponent()) else {
        return p;
    };
    let centred = p.shifted(-(lo + hi).div_euclid(2));
    if centred.coefficient(centred.max_exponent().expect("nonzero")) < 0 {
        -centred
    } else {
        centred
    }
}

/// `|Δ(-1)|`.
pub fn determinant_of(pd: &PlanarDiagram) -> Result<u64, InvariantError> {
    Ok(alexander(pd)?.eval_at_minus_one().unsigned_abs())
}
