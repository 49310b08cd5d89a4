use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::diagram::{PlanarDiagram, Slot};
use crate::error::{Error, Result};

/// A link diagram with an integer framing on each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FramedLink {
    diagram: PlanarDiagram,
    framings: Vec<i64>,
}

impl FramedLink {
    pub fn new(diagram: PlanarDiagram, framings: Vec<i64>) -> Result<Self> {
        if framings.len() != diagram.component_count() {
            return Err(Error::FramingCount {
                expected: diagram.component_count(),
                got: framings.len(),
            });
        }
        Ok(Self { diagram, framings })
    }

    pub fn diagram(&self) -> &PlanarDiagram {
        &self.diagram
    }

    pub fn framings(&self) -> &[i64] {
        &self.framings
    }

    pub fn component_count(&self) -> usize {
        self.diagram.component_count()
    }

    /// Framings on the diagonal, pairwise linking numbers off it.
    pub fn linking_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.component_count();
        let mut twice = vec![vec![0i64; n]; n];
        let d = &self.diagram;
        for c in 0..d.crossing_count() {
            let (a, b) = d.strand_components(c);
            if a != b {
                let s = d.signs()[c] as i64;
                twice[a][b] += s;
                twice[b][a] += s;
            }
        }
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { self.framings[i] } else { twice[i][j] / 2 }).collect())
            .collect()
    }

    pub fn signature(&self) -> i64 {
        signature(&self.linking_matrix())
    }

    /// The same link with curls added so that each blackboard framing equals the
    /// requested one, with the new index of each original component.
    pub fn blackboard_with_index(&self) -> (PlanarDiagram, Vec<usize>) {
        let d = &self.diagram;
        let counts: Vec<i64> = (0..d.component_count())
            .map(|c| self.framings[c] - d.self_writhe(c))
            .collect();
        d.with_curls(&counts).expect("count matches components")
    }
}

/// Signature of a symmetric integer matrix, by exact rational congruence diagonalization.
pub fn signature(m: &[Vec<i64>]) -> i64 {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|row| row.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut sig = 0i64;
    while !a.is_empty() {
        let n = a.len();
        let pivot = (0..n).find(|&k| !a[k][k].is_zero());
        let k = match pivot {
            Some(k) => k,
            None => {
                let Some((i, j)) = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero())
                else {
                    break;
                };
                // row_i += row_j, col_i += col_j puts 2·a_ij on the diagonal
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for rrow in a.iter_mut() {
                    let v = rrow[j].clone();
                    rrow[i] += v;
                }
                i
            }
        };
        let p = a[k][k].clone();
        sig += if p.is_positive() { 1 } else { -1 };
        let mut next = Vec::with_capacity(n - 1);
        for i in (0..n).filter(|&i| i != k) {
            let row = (0..n)
                .filter(|&j| j != k)
                .map(|j| &a[i][j] - &a[i][k] * &a[k][j] / &p)
                .collect();
            next.push(row);
        }
        a = next;
    }
    sig
}

/// K framed 0 together with a meridian framed -k; integer surgery on it is 1/k surgery on K.
pub fn one_over_k_presentation(knot: &PlanarDiagram, k: i64) -> Result<FramedLink> {
    if knot.component_count() != 1 {
        return Err(Error::NotAKnot(knot.component_count()));
    }
    let base = knot.max_label();
    let (a2, m1, m2) = (base + 1, base + 2, base + 3);
    let mut crossings = knot.crossings().to_vec();
    if knot.crossing_count() == 0 {
        let a1 = base + 4;
        crossings.push([a1, m1, a2, m2]);
        crossings.push([m1, a1, m2, a2]);
    } else {
        let a = knot.traced_components()[0][0];
        let Slot { crossing, pos } = knot.arc(a).unwrap().head;
        let a3 = base + 4;
        crossings[crossing][pos] = a3;
        crossings.push([a, m1, a2, m2]);
        crossings.push([m1, a3, m2, a2]);
    }
    // new labels exceed every knot label, so the knot stays component 0
    let d = PlanarDiagram::new(crossings, 0)?.relabeled();
    FramedLink::new(d, vec![0, -k])
}
