//! Brute-force reference computations for cross-checking the engine.
//! Everything here works from raw `[u32; 4]` crossing tuples and shares no
//! code with the library beyond reading those tuples.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use rand::Rng;
use ribbondb::poly::LaurentPolynomial;
use ribbondb::PlanarDiagram;

/// Exponent to coefficient, zero terms dropped.
pub type Poly = BTreeMap<i32, i64>;

pub fn tuples(pd: &PlanarDiagram) -> Vec<[u32; 4]> {
    pd.crossings().iter().map(|c| c.labels()).collect()
}

pub fn to_poly(p: &LaurentPolynomial) -> Poly {
    p.terms().filter(|&(_, c)| c != 0).collect()
}

fn add_term(p: &mut Poly, e: i32, c: i64) {
    let v = p.entry(e).or_insert(0);
    *v += c;
    if *v == 0 {
        p.remove(&e);
    }
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            add_term(&mut out, ea + eb, ca * cb);
        }
    }
    out
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

/// Kauffman bracket in `A` by summing over all `2^n` states. The
/// A-smoothing joins slots (0,1),(2,3); the B-smoothing joins (0,3),(1,2).
pub fn bracket(xs: &[[u32; 4]], free_loops: usize) -> Poly {
    assert!(xs.len() <= 24, "state sum too large");
    let mut ids: HashMap<u32, usize> = HashMap::new();
    for x in xs {
        for &l in x {
            let n = ids.len();
            ids.entry(l).or_insert(n);
        }
    }
    let m = ids.len();
    let idx: Vec<[usize; 4]> = xs.iter().map(|x| x.map(|l| ids[&l])).collect();
    // δ^k for k up to the loop bound
    let delta: Poly = [(-2, -1), (2, -1)].into_iter().collect();
    let max_loops = m + free_loops + 1;
    let mut powers = vec![Poly::from([(0, 1)])];
    for k in 1..=max_loops {
        let next = mul(&powers[k - 1], &delta);
        powers.push(next);
    }
    let mut total = Poly::new();
    for state in 0u64..(1u64 << xs.len()) {
        let mut dsu = Dsu::new(m);
        let mut a_count = 0i32;
        for (c, s) in idx.iter().enumerate() {
            if state >> c & 1 == 0 {
                a_count += 1;
                dsu.union(s[0], s[1]);
                dsu.union(s[2], s[3]);
            } else {
                dsu.union(s[0], s[3]);
                dsu.union(s[1], s[2]);
            }
        }
        let loops = (0..m).filter(|&i| dsu.find(i) == i).count() + free_loops;
        let b_count = xs.len() as i32 - a_count;
        for (&e, &c) in &powers[loops - 1] {
            add_term(&mut total, e + a_count - b_count, c);
        }
    }
    total
}

/// Writhe from a direct walk. Each walk starts on an under-strand entering
/// at slot 0; components that never pass under start at an arbitrary slot.
pub fn writhe(xs: &[[u32; 4]]) -> i64 {
    let mut occ: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
    for (c, x) in xs.iter().enumerate() {
        for (p, &l) in x.iter().enumerate() {
            occ.entry(l).or_default().push((c, p));
        }
    }
    // incoming[c][p]: Some(true) when the strand enters crossing c at slot p
    let mut incoming = vec![[None::<bool>; 4]; xs.len()];
    let walk = |start: (usize, usize), incoming: &mut Vec<[Option<bool>; 4]>| {
        let mut at = start;
        loop {
            incoming[at.0][at.1] = Some(true);
            let out = (at.0, (at.1 + 2) % 4);
            incoming[out.0][out.1] = Some(false);
            let label = xs[out.0][out.1];
            let next = *occ[&label]
                .iter()
                .find(|&&s| s != out)
                .expect("label used twice");
            if next == start {
                break;
            }
            at = next;
        }
    };
    for c in 0..xs.len() {
        if incoming[c][0].is_none() {
            walk((c, 0), &mut incoming);
        }
    }
    for c in 0..xs.len() {
        if incoming[c][1].is_none() {
            walk((c, 1), &mut incoming);
        }
    }
    incoming
        .iter()
        .map(|s| if s[3] == Some(true) { 1 } else { -1 })
        .sum()
}

/// Jones polynomial on the `t^(1/2)` grid: `(-A^3)^(-w) <D>` with `A = t^(-1/4)`.
pub fn jones(xs: &[[u32; 4]], free_loops: usize) -> Poly {
    let w = writhe(xs);
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let mut out = Poly::new();
    for (&e, &c) in &bracket(xs, free_loops) {
        let m = e - 3 * w as i32;
        assert_eq!(m % 2, 0, "odd A-exponent after normalization");
        add_term(&mut out, -m / 2, sign * c);
    }
    out
}

/// Knot determinant from the Fox colouring matrix: each crossing gives
/// `2·over − under_in − under_out`, one row and column deleted.
pub fn determinant(xs: &[[u32; 4]]) -> u64 {
    let n = xs.len();
    if n == 0 {
        return 1;
    }
    // arcs: over-strand edges j,l are the same arc; under edges i,k end arcs
    let mut ids: HashMap<u32, usize> = HashMap::new();
    for x in xs {
        for &l in x {
            let k = ids.len();
            ids.entry(l).or_insert(k);
        }
    }
    let mut dsu = Dsu::new(ids.len());
    for x in xs {
        dsu.union(ids[&x[1]], ids[&x[3]]);
    }
    let mut arc_of: HashMap<usize, usize> = HashMap::new();
    let mut arc = |l: u32, dsu: &mut Dsu| {
        let r = dsu.find(ids[&l]);
        let k = arc_of.len();
        *arc_of.entry(r).or_insert(k)
    };
    let mut m = vec![vec![0f64; n]; n];
    for (r, x) in xs.iter().enumerate() {
        let over = arc(x[1], &mut dsu);
        let a = arc(x[0], &mut dsu);
        let b = arc(x[2], &mut dsu);
        m[r][over] += 2.0;
        m[r][a] -= 1.0;
        m[r][b] -= 1.0;
    }
    let k = n - 1;
    let mut a: Vec<Vec<f64>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
    let mut det = 1.0;
    for col in 0..k {
        let piv = (col..k)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        if a[piv][col].abs() < 1e-9 {
            return 0;
        }
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        det *= a[col][col];
        for r in col + 1..k {
            let f = a[r][col] / a[col][col];
            for c in col..k {
                a[r][c] -= f * a[col][c];
            }
        }
    }
    det.abs().round() as u64
}

/// Number of link components, by walking strands straight through crossings.
pub fn components(xs: &[[u32; 4]], free_loops: usize) -> usize {
    let mut ids: HashMap<u32, usize> = HashMap::new();
    for x in xs {
        for &l in x {
            let k = ids.len();
            ids.entry(l).or_insert(k);
        }
    }
    let mut dsu = Dsu::new(ids.len());
    for x in xs {
        dsu.union(ids[&x[0]], ids[&x[2]]);
        dsu.union(ids[&x[1]], ids[&x[3]]);
    }
    (0..ids.len()).filter(|&i| dsu.find(i) == i).count() + free_loops
}

/// A random braid word on 2..=4 strands with `1..=max_len` letters.
pub fn random_braid(rng: &mut impl Rng, max_len: usize) -> (usize, Vec<i32>) {
    let strands = rng.gen_range(2..=4);
    let len = rng.gen_range(1..=max_len);
    let word = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    (strands, word)
}

/// Parses the text form used in fixtures, e.g. `-t^-4 + t^-3 + t^-1`, on the
/// `t^(1/2)` grid (exponent `k` stands for `t^(k/2)`).
pub fn half_t(text: &str) -> Poly {
    let mut out = Poly::new();
    let cleaned = text.replace(" - ", " + -").replace(' ', "");
    for term in cleaned.split('+').filter(|s| !s.is_empty()) {
        let (coef, rest) = match term.find('t') {
            Some(pos) => (&term[..pos], &term[pos..]),
            None => (term, ""),
        };
        let c: i64 = match coef {
            "" => 1,
            "-" => -1,
            s => s.parse().unwrap(),
        };
        let e2 = if rest.is_empty() {
            0
        } else if let Some(exp) = rest.strip_prefix("t^") {
            let exp = exp.trim_matches(|ch| ch == '(' || ch == ')');
            match exp.split_once('/') {
                Some((num, "2")) => num.parse::<i32>().unwrap(),
                _ => 2 * exp.parse::<i32>().unwrap(),
            }
        } else {
            2
        };
        add_term(&mut out, e2, c);
    }
    out
}
