use std::collections::{HashMap, HashSet};

use super::diagram::{PlanarDiagram, UnionFind};
use crate::error::{Error, Result};

/// Blackboard d-cable of a one-component diagram.
pub fn cable(d: &PlanarDiagram, copies: usize) -> Result<PlanarDiagram> {
    if d.component_count() != 1 {
        return Err(Error::NotAKnot(d.component_count()));
    }
    Ok(cable_components(d, &[copies]))
}

/// Replace component c by `copies[c]` blackboard-parallel copies; zero deletes it.
///
/// Copy s of a strand is pushed s units to its left, so every original crossing
/// becomes an n_under × n_over grid with the same sign.
pub fn cable_components(d: &PlanarDiagram, copies: &[usize]) -> PlanarDiagram {
    assert_eq!(copies.len(), d.component_count(), "one copy count per component");
    let mut uf = UnionFind::default();
    let mut next = 1u32;
    let mut ext: HashMap<(u32, usize), u32> = HashMap::new();
    let mut label = |uf: &mut UnionFind, key: Option<(u32, usize)>| -> u32 {
        if let Some(k) = key {
            if let Some(&l) = ext.get(&k) {
                return l;
            }
        }
        let l = next;
        next += 1;
        uf.add(l);
        if let Some(k) = key {
            ext.insert(k, l);
        }
        l
    };

    let mut crossings = Vec::new();
    for (c, &[i, j, k, l]) in d.crossings().iter().enumerate() {
        let (cu, co) = d.strand_components(c);
        let (nu, no) = (copies[cu], copies[co]);
        let positive = d.signs()[c] > 0;
        let (over_in, over_out) = if positive { (l, j) } else { (j, l) };
        match (nu, no) {
            (0, 0) => {}
            (0, _) => {
                for t in 0..no {
                    let a = label(&mut uf, Some((over_in, t)));
                    let b = label(&mut uf, Some((over_out, t)));
                    uf.union(a, b);
                }
            }
            (_, 0) => {
                for s in 0..nu {
                    let a = label(&mut uf, Some((i, s)));
                    let b = label(&mut uf, Some((k, s)));
                    uf.union(a, b);
                }
            }
            _ => {
                // under copy s sits at x = -s and meets over copies in increasing y;
                // over copy t sits at y = ±t and meets under copies along its direction
                let v_order: Vec<usize> =
                    if positive { (0..no).collect() } else { (0..no).rev().collect() };
                let h_order: Vec<usize> =
                    if positive { (0..nu).rev().collect() } else { (0..nu).collect() };
                let vseg: Vec<Vec<u32>> = (0..nu)
                    .map(|s| {
                        (0..=no)
                            .map(|idx| match idx {
                                0 => label(&mut uf, Some((i, s))),
                                _ if idx == no => label(&mut uf, Some((k, s))),
                                _ => label(&mut uf, None),
                            })
                            .collect()
                    })
                    .collect();
                let hseg: Vec<Vec<u32>> = (0..no)
                    .map(|t| {
                        (0..=nu)
                            .map(|idx| match idx {
                                0 => label(&mut uf, Some((over_in, t))),
                                _ if idx == nu => label(&mut uf, Some((over_out, t))),
                                _ => label(&mut uf, None),
                            })
                            .collect()
                    })
                    .collect();
                for s in 0..nu {
                    for t in 0..no {
                        let vi = v_order.iter().position(|&x| x == t).unwrap();
                        let hi = h_order.iter().position(|&x| x == s).unwrap();
                        let (before, after) = (hseg[t][hi], hseg[t][hi + 1]);
                        let (east, west) = if positive { (after, before) } else { (before, after) };
                        crossings.push([vseg[s][vi], east, vseg[s][vi + 1], west]);
                    }
                }
            }
        }
    }

    let crossings: Vec<[u32; 4]> = crossings.iter().map(|x| x.map(|a| uf.find(a))).collect();
    let used: HashSet<u32> = crossings.iter().flatten().copied().collect();

    let traced = d.traced_components().len();
    let mut free = 0usize;
    for (comp, arcs) in d.traced_components().iter().enumerate() {
        for s in 0..copies[comp] {
            // a copy none of whose arcs survive in a crossing closes up into a circle
            let r = uf.find(*ext.get(&(arcs[0], s)).expect("every arc meets a crossing"));
            if !used.contains(&r) {
                free += 1;
            }
        }
    }
    free += copies[traced..].iter().sum::<usize>();

    PlanarDiagram::new(crossings, free).expect("cabling preserves validity").relabeled()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::knot::parse_pd;

    #[test]
    fn unknot_cable() {
        let c = cable(&PlanarDiagram::unknot(), 3).unwrap();
        assert_eq!(c.component_count(), 3);
        assert_eq!(c.crossing_count(), 0);
    }

    #[test]
    fn trefoil_two_cable() {
        let t = parse_pd("[[1,4,2,5],[3,6,4,1],[5,2,6,3]]").unwrap();
        let c = cable(&t, 2).unwrap();
        assert_eq!(c.crossing_count(), 12);
        assert_eq!(c.component_count(), 2);
        assert_eq!(c.writhe(), 4 * t.writhe());
        // each copy inherits the blackboard framing of the original
        assert_eq!(c.self_writhe(0), t.writhe());
        assert_eq!(c.self_writhe(1), t.writhe());
    }

    #[test]
    fn one_copy_is_relabeling() {
        let t = parse_pd("[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]").unwrap();
        assert!(cable(&t, 1).unwrap().is_relabeling_of(&t));
        assert!(!cable(&t, 1).unwrap().is_relabeling_of(&t.mirror()));
    }

    #[test]
    fn deleting_a_component() {
        let hopf = parse_pd("[[1,3,2,4],[3,1,4,2]]").unwrap();
        let c = cable_components(&hopf, &[0, 2]);
        assert_eq!(c.crossing_count(), 0);
        assert_eq!(c.component_count(), 2);
        let c = cable_components(&hopf, &[2, 3]);
        assert_eq!(c.crossing_count(), 12);
        assert_eq!(c.component_count(), 5);
    }

    #[test]
    fn kinked_cable() {
        let k = parse_pd("[[1,1,2,2]]").unwrap();
        let c = cable(&k, 2).unwrap();
        assert_eq!(c.component_count(), 2);
        assert_eq!(c.self_writhe(0), 1);
        assert_eq!(c.self_writhe(1), 1);
    }
}
