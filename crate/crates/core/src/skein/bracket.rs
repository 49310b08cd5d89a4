use std::collections::{HashMap, HashSet};
use std::time::Instant;

use crate::cyclo::LaurentPoly;
use crate::error::{Error, Result};
use crate::knot::{PlanarDiagram, UnionFind};

/// δ = -A² - A⁻², the value of a crossingless circle.
pub fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(2, -1), (-2, -1)])
}

const SMOOTHINGS: [(i64, [(usize, usize); 2]); 2] = [(1, [(0, 1), (2, 3)]), (-1, [(0, 3), (1, 2)])];

/// Kauffman bracket with ⟨∅⟩ = 1 and ⟨L ⊔ U⟩ = δ⟨L⟩.
pub fn kauffman_bracket(d: &PlanarDiagram) -> LaurentPoly {
    bracket_until(d, None).expect("no deadline")
}

/// Same as [`kauffman_bracket`] but gives up with [`Error::Timeout`] after `deadline`.
pub fn bracket_until(d: &PlanarDiagram, deadline: Option<Instant>) -> Result<LaurentPoly> {
    let n = d.crossing_count();
    let x = d.crossings();

    // state: sorted flat list of open-arc pairs (a < b); value: dense polynomial in A
    let mut states: HashMap<Vec<u32>, Dense> = HashMap::new();
    states.insert(Vec::new(), Dense::one());
    let mut open: HashSet<u32> = HashSet::new();
    let mut done = vec![false; n];

    for _ in 0..n {
        if deadline.is_some_and(|t| Instant::now() > t) {
            return Err(Error::Timeout);
        }
        let c = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| (x[c].iter().filter(|a| open.contains(a)).count(), std::cmp::Reverse(c)))
            .unwrap();
        done[c] = true;
        let labels = x[c];

        let mut next: HashMap<Vec<u32>, Dense> = HashMap::with_capacity(states.len() * 2);
        for (state, poly) in &states {
            let partner = |a: u32| -> Option<u32> {
                state.chunks(2).find_map(|p| {
                    if p[0] == a {
                        Some(p[1])
                    } else if p[1] == a {
                        Some(p[0])
                    } else {
                        None
                    }
                })
            };
            for &(shift, pairs) in &SMOOTHINGS {
                let (key, loops) = smooth(state, &labels, pairs, &partner);
                let term = poly.shift(shift).times_delta_pow(loops);
                next.entry(key).and_modify(|p| p.add_assign(&term)).or_insert(term);
            }
        }
        next.retain(|_, p| !p.is_zero());
        states = next;

        for a in labels {
            if !open.remove(&a) {
                open.insert(a);
            }
        }
    }

    let poly = states.remove(&Vec::new()).unwrap_or_else(Dense::zero);
    Ok(poly.times_delta_pow(d.free_loops()).to_laurent())
}

/// Apply one smoothing at a crossing to a boundary matching. Returns the new matching and
/// the number of circles closed.
fn smooth(
    state: &[u32],
    labels: &[u32; 4],
    pairs: [(usize, usize); 2],
    partner: &dyn Fn(u32) -> Option<u32>,
) -> (Vec<u32>, usize) {
    // local multigraph: smoothing edges plus the paths already recorded in the state
    let mut edges: Vec<(u32, u32)> = pairs.iter().map(|&(p, q)| (labels[p], labels[q])).collect();
    let mut touched: Vec<u32> = labels.to_vec();
    touched.sort_unstable();
    touched.dedup();
    for &a in &touched {
        if let Some(b) = partner(a) {
            if !touched.contains(&b) || a < b {
                edges.push((a, b));
            }
        }
    }

    let mut nodes: Vec<u32> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    nodes.sort_unstable();
    nodes.dedup();
    let idx = |v: u32| nodes.binary_search(&v).unwrap();
    let mut parent: Vec<usize> = (0..nodes.len()).collect();
    fn root(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let mut degree = vec![0usize; nodes.len()];
    for &(a, b) in &edges {
        let (i, j) = (idx(a), idx(b));
        degree[i] += 1;
        degree[j] += 1;
        let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
        parent[ri] = rj;
    }

    // every node has degree 1 (boundary) or 2, so components are paths or circles
    let mut ends: Vec<(usize, u32)> = Vec::new();
    let mut has_end = vec![false; nodes.len()];
    for (i, &v) in nodes.iter().enumerate() {
        if degree[i] == 1 {
            let r = root(&mut parent, i);
            has_end[r] = true;
            ends.push((r, v));
        }
    }
    let loops = (0..nodes.len()).filter(|&i| root(&mut parent, i) == i && !has_end[i]).count();
    ends.sort_unstable();

    let mut all: Vec<(u32, u32)> = state
        .chunks(2)
        .map(|p| (p[0], p[1]))
        .filter(|p| !touched.contains(&p.0) && !touched.contains(&p.1))
        .collect();
    all.extend(ends.chunks(2).map(|e| (e[0].1.min(e[1].1), e[0].1.max(e[1].1))));
    all.sort_unstable();
    let key = all.into_iter().flat_map(|(a, b)| [a, b]).collect();
    (key, loops)
}

/// Reference 2ⁿ state sum. Exponential; for checking the contraction on small diagrams.
pub fn naive_bracket(d: &PlanarDiagram) -> LaurentPoly {
    let n = d.crossing_count();
    assert!(n <= 24, "naive state sum limited to 24 crossings");
    let x = d.crossings();
    let delta = loop_value();
    let mut total = LaurentPoly::zero();
    for mask in 0u32..(1u32 << n) {
        let mut uf = UnionFind::default();
        let mut a_minus_b = 0i64;
        for (c, cr) in x.iter().enumerate() {
            let (sgn, pairs) = SMOOTHINGS[((mask >> c) & 1) as usize];
            a_minus_b += sgn;
            for (p, q) in pairs {
                uf.union(cr[p], cr[q]);
            }
        }
        let mut roots: Vec<u32> = d.arc_labels().map(|a| uf.find(a)).collect();
        roots.sort_unstable();
        roots.dedup();
        let loops = roots.len() + d.free_loops();
        total = &total + &(&LaurentPoly::monomial(1, a_minus_b) * &delta.pow(loops as u32));
    }
    if n == 0 {
        return delta.pow(d.free_loops() as u32);
    }
    total
}

/// Dense Laurent polynomial with i128 coefficients, for the inner loop of the contraction.
#[derive(Clone, Debug)]
struct Dense {
    lo: i64,
    c: Vec<i128>,
}

impl Dense {
    fn zero() -> Self {
        Self { lo: 0, c: Vec::new() }
    }

    fn one() -> Self {
        Self { lo: 0, c: vec![1] }
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(|&v| v == 0)
    }

    fn shift(&self, k: i64) -> Self {
        Self { lo: self.lo + k, c: self.c.clone() }
    }

    fn times_delta_pow(mut self, k: usize) -> Self {
        for _ in 0..k {
            // multiply by -A² - A⁻²
            let mut out = vec![0i128; self.c.len() + 4];
            for (i, &v) in self.c.iter().enumerate() {
                if v != 0 {
                    out[i] = out[i].checked_sub(v).expect("bracket coefficient overflow");
                    out[i + 4] = out[i + 4].checked_sub(v).expect("bracket coefficient overflow");
                }
            }
            self = Self { lo: self.lo - 2, c: out };
        }
        self.trim()
    }

    fn add_assign(&mut self, other: &Dense) {
        if other.c.is_empty() {
            return;
        }
        if self.c.is_empty() {
            *self = other.clone();
            return;
        }
        let lo = self.lo.min(other.lo);
        let hi = (self.lo + self.c.len() as i64).max(other.lo + other.c.len() as i64);
        if lo < self.lo || hi > self.lo + self.c.len() as i64 {
            let mut c = vec![0i128; (hi - lo) as usize];
            let off = (self.lo - lo) as usize;
            c[off..off + self.c.len()].copy_from_slice(&self.c);
            self.c = c;
            self.lo = lo;
        }
        let off = (other.lo - self.lo) as usize;
        for (i, &v) in other.c.iter().enumerate() {
            self.c[off + i] = self.c[off + i].checked_add(v).expect("bracket coefficient overflow");
        }
    }

    fn trim(mut self) -> Self {
        while self.c.last() == Some(&0) {
            self.c.pop();
        }
        let lead = self.c.iter().take_while(|&&v| v == 0).count();
        if lead > 0 {
            self.c.drain(..lead);
            self.lo += lead as i64;
        }
        self
    }

    fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.c.iter().enumerate().map(|(i, &v)| (self.lo + i as i64, num_bigint::BigInt::from(v))),
        )
    }
}
