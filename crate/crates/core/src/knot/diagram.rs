use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Position of an arc end at a crossing: PD slot 0..4.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slot {
    pub crossing: usize,
    pub pos: usize,
}

impl Slot {
    fn through(self) -> Slot {
        Slot { crossing: self.crossing, pos: (self.pos + 2) % 4 }
    }
}

/// Orientation data for one arc: it leaves `tail` and enters `head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ArcEnds {
    pub component: usize,
    pub tail: Slot,
    pub head: Slot,
}

/// An oriented link diagram given by a PD code.
///
/// Each crossing `[i, j, k, l]` lists its four arc labels counterclockwise
/// starting from the incoming under-strand, so the under-strand runs i → k.
/// The over-strand direction is recovered by tracing components. A crossing
/// is positive when the over-strand runs l → j.
///
/// Components without crossings are kept as a count of free loops; they are
/// numbered after the traced components.
#[derive(Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    crossings: Vec<[u32; 4]>,
    free_loops: usize,
    components: Vec<Vec<u32>>,
    arcs: BTreeMap<u32, ArcEnds>,
    signs: Vec<i8>,
}

impl PlanarDiagram {
    /// Validate arc incidence, trace components and orient them.
    pub fn new(crossings: Vec<[u32; 4]>, free_loops: usize) -> Result<Self> {
        let mut slots: BTreeMap<u32, Vec<Slot>> = BTreeMap::new();
        for (c, x) in crossings.iter().enumerate() {
            for (pos, &a) in x.iter().enumerate() {
                slots.entry(a).or_default().push(Slot { crossing: c, pos });
            }
        }
        if let Some((&arc, s)) = slots.iter().find(|(_, s)| s.len() != 2) {
            return Err(Error::ArcMultiplicity { arc, count: s.len() });
        }
        let label_at = |s: Slot| crossings[s.crossing][s.pos];
        let other_end = |arc: u32, s: Slot| {
            let v = &slots[&arc];
            if v[0] == s {
                v[1]
            } else {
                v[0]
            }
        };

        let mut arcs: BTreeMap<u32, ArcEnds> = BTreeMap::new();
        let mut components = Vec::new();
        let labels: Vec<u32> = slots.keys().copied().collect();
        for &start in &labels {
            if arcs.contains_key(&start) {
                continue;
            }
            // walk one way around, recording (arc, tail, head)
            let mut seq: Vec<(u32, Slot, Slot)> = Vec::new();
            let (mut arc, mut tail) = (start, slots[&start][0]);
            loop {
                let head = other_end(arc, tail);
                seq.push((arc, tail, head));
                let next_tail = head.through();
                arc = label_at(next_tail);
                tail = next_tail;
                if arc == start && tail == seq[0].1 {
                    break;
                }
                if seq.len() > labels.len() {
                    return Err(Error::Orientation(start));
                }
            }

            let mut forward = 0usize;
            let mut backward = 0usize;
            for &(_, t, h) in &seq {
                match h.pos {
                    0 => forward += 1,
                    2 => backward += 1,
                    _ => {}
                }
                match t.pos {
                    2 => forward += 1,
                    0 => backward += 1,
                    _ => {}
                }
            }
            if forward > 0 && backward > 0 {
                return Err(Error::Orientation(start));
            }
            let reverse = if forward + backward == 0 {
                // only over-crossings: prefer consecutive labels along the orientation
                let n = seq.len();
                n > 1 && seq[1].0 != start + 1 && seq[n - 1].0 == start + 1
            } else {
                backward > 0
            };
            if reverse {
                seq.reverse();
                for e in seq.iter_mut() {
                    std::mem::swap(&mut e.1, &mut e.2);
                }
                seq.rotate_right(1);
            }
            let comp = components.len();
            for &(a, t, h) in &seq {
                arcs.insert(a, ArcEnds { component: comp, tail: t, head: h });
            }
            components.push(seq.iter().map(|e| e.0).collect::<Vec<_>>());
        }

        let signs = crossings
            .iter()
            .enumerate()
            .map(|(c, x)| {
                let over_in = arcs[&x[3]].head == Slot { crossing: c, pos: 3 };
                if over_in {
                    1
                } else {
                    -1
                }
            })
            .collect();

        Ok(Self { crossings, free_loops, components, arcs, signs })
    }

    /// The empty diagram.
    pub fn empty() -> Self {
        Self::new(Vec::new(), 0).expect("empty diagram is valid")
    }

    /// The 0-crossing unknot.
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    /// n disjoint crossingless circles.
    pub fn unlink(n: usize) -> Self {
        Self::new(Vec::new(), n).expect("unlink is valid")
    }

    pub fn crossings(&self) -> &[[u32; 4]] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn component_count(&self) -> usize {
        self.components.len() + self.free_loops
    }

    /// Arcs of each traced component in traversal order (free loops excluded).
    pub fn traced_components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn arc(&self, label: u32) -> Option<&ArcEnds> {
        self.arcs.get(&label)
    }

    pub fn arc_labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.arcs.keys().copied()
    }

    pub fn max_label(&self) -> u32 {
        self.arcs.keys().next_back().copied().unwrap_or(0)
    }

    /// +1 or -1 per crossing.
    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Component index of the under- and over-strand at a crossing.
    pub fn strand_components(&self, c: usize) -> (usize, usize) {
        let x = &self.crossings[c];
        (self.arcs[&x[0]].component, self.arcs[&x[1]].component)
    }

    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|&s| s as i64).sum()
    }

    /// Sum of signs over crossings where both strands lie on `comp`: the blackboard framing.
    pub fn self_writhe(&self, comp: usize) -> i64 {
        (0..self.crossings.len())
            .filter(|&c| self.strand_components(c) == (comp, comp))
            .map(|c| self.signs[c] as i64)
            .sum()
    }

    pub fn component_of_arc(&self, label: u32) -> Option<usize> {
        self.arcs.get(&label).map(|a| a.component)
    }

    /// Swap over and under at every crossing.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .zip(&self.signs)
            .map(|(&[i, j, k, l], &s)| if s > 0 { [l, i, j, k] } else { [j, k, l, i] })
            .collect();
        Self::new(crossings, self.free_loops).expect("mirror of a valid diagram is valid")
    }

    /// Relabel arcs 1..N consecutively along components in traversal order.
    pub fn relabeled(&self) -> Self {
        let mut map = HashMap::new();
        let mut next = 1u32;
        for comp in &self.components {
            for &a in comp {
                map.insert(a, next);
                next += 1;
            }
        }
        let crossings = self.crossings.iter().map(|x| x.map(|a| map[&a])).collect();
        Self::new(crossings, self.free_loops).expect("relabeling preserves validity")
    }

    /// True when `other` is this diagram with arcs renamed by some bijection,
    /// crossings in the same order.
    pub fn is_relabeling_of(&self, other: &Self) -> bool {
        if self.crossings.len() != other.crossings.len() || self.free_loops != other.free_loops {
            return false;
        }
        let mut fwd = HashMap::new();
        let mut back = HashMap::new();
        for (x, y) in self.crossings.iter().zip(&other.crossings) {
            for (a, b) in x.iter().zip(y) {
                if *fwd.entry(*a).or_insert(*b) != *b || *back.entry(*b).or_insert(*a) != *a {
                    return false;
                }
            }
        }
        true
    }

    /// Disjoint union, placed side by side in the plane.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let off = self.max_label();
        let mut crossings = self.crossings.clone();
        crossings.extend(other.crossings.iter().map(|x| x.map(|a| a + off)));
        Self::new(crossings, self.free_loops + other.free_loops)
            .expect("disjoint union of valid diagrams is valid")
    }

    /// Insert |n| Reidemeister-I curls of sign sign(n) on each component,
    /// `counts[c]` for component c. Returns the new diagram and the new index of each old component.
    pub fn with_curls(&self, counts: &[i64]) -> Result<(Self, Vec<usize>)> {
        if counts.len() != self.component_count() {
            return Err(Error::FramingCount { expected: self.component_count(), got: counts.len() });
        }
        let mut crossings = self.crossings.clone();
        let mut next = self.max_label() + 1;
        let mut fresh = || {
            let l = next;
            next += 1;
            l
        };
        let mut anchors: Vec<u32> = Vec::with_capacity(counts.len());
        let mut free_loops = self.free_loops;

        for (c, &n) in counts.iter().enumerate() {
            if c < self.components.len() {
                let a = self.components[c][0];
                anchors.push(a);
                if n == 0 {
                    continue;
                }
                let head = self.arcs[&a].head;
                let mut inc = a;
                for step in 0..n.unsigned_abs() {
                    let y = fresh();
                    let out = fresh();
                    crossings.push(curl(inc, y, out, n > 0));
                    inc = out;
                    if step + 1 == n.unsigned_abs() {
                        crossings[head.crossing][head.pos] = out;
                    }
                }
            } else if n == 0 {
                anchors.push(0);
            } else {
                // a free loop becomes a closed chain of curls
                free_loops -= 1;
                let first = fresh();
                anchors.push(first);
                let mut inc = first;
                for step in 0..n.unsigned_abs() {
                    let y = fresh();
                    let out = if step + 1 == n.unsigned_abs() { first } else { fresh() };
                    crossings.push(curl(inc, y, out, n > 0));
                    inc = out;
                }
            }
        }

        let d = Self::new(crossings, free_loops)?;
        let traced = d.components.len();
        let mut free_idx = traced;
        let index = anchors
            .iter()
            .map(|&a| {
                if a == 0 {
                    free_idx += 1;
                    free_idx - 1
                } else {
                    d.arcs[&a].component
                }
            })
            .collect();
        Ok((d, index))
    }

    /// Closure of a braid on `strands` strands. Letter `+i` is σ_i (positive crossing
    /// between positions i and i+1), `-i` its inverse.
    pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Self> {
        let mut uf = UnionFind::default();
        let mut next = 1u32;
        let mut fresh = |uf: &mut UnionFind| {
            let l = next;
            next += 1;
            uf.add(l);
            l
        };
        let bottom: Vec<u32> = (0..strands).map(|_| fresh(&mut uf)).collect();
        let mut cur = bottom.clone();
        let mut crossings = Vec::new();
        for &g in word {
            let i = g.unsigned_abs() as usize;
            if i == 0 || i >= strands {
                return Err(Error::Parse { pos: 0, msg: format!("braid generator {g} out of range") });
            }
            let (left_in, right_in) = (cur[i - 1], cur[i]);
            let nw = fresh(&mut uf);
            let ne = fresh(&mut uf);
            // the right strand exits north-west, the left strand north-east
            crossings.push(if g > 0 {
                [right_in, ne, nw, left_in]
            } else {
                [left_in, right_in, ne, nw]
            });
            cur[i - 1] = nw;
            cur[i] = ne;
        }
        for (b, t) in bottom.iter().zip(&cur) {
            uf.union(*b, *t);
        }
        let crossings: Vec<[u32; 4]> = crossings.iter().map(|x| x.map(|a| uf.find(a))).collect();
        let used: std::collections::HashSet<u32> = crossings.iter().flatten().copied().collect();
        let mut roots: Vec<u32> = bottom.iter().map(|&b| uf.find(b)).collect();
        roots.sort_unstable();
        roots.dedup();
        let free = roots.iter().filter(|r| !used.contains(r)).count();
        Ok(Self::new(crossings, free)?.relabeled())
    }

    /// Bracketed PD text `[[a,b,c,d],...]`.
    pub fn to_pd_string(&self) -> String {
        let body: Vec<String> = self
            .crossings
            .iter()
            .map(|x| format!("[{},{},{},{}]", x[0], x[1], x[2], x[3]))
            .collect();
        format!("[{}]", body.join(","))
    }
}

fn curl(inc: u32, y: u32, out: u32, positive: bool) -> [u32; 4] {
    if positive {
        [inc, out, y, y]
    } else {
        [inc, y, y, out]
    }
}

impl fmt::Debug for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PD{}", self.to_pd_string())?;
        if self.free_loops > 0 {
            write!(f, " ⊔ {} circle(s)", self.free_loops)?;
        }
        Ok(())
    }
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}

/// Parse `[[1,4,2,5],[3,6,4,1],[5,2,6,3]]`. Whitespace is ignored; `[]` is the empty diagram.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram> {
    let mut p = Parser { s: text.as_bytes(), pos: 0 };
    p.expect(b'[')?;
    let mut crossings = Vec::new();
    if p.peek() == Some(b']') {
        p.bump();
    } else {
        loop {
            p.expect(b'[')?;
            let mut x = [0u32; 4];
            for (n, slot) in x.iter_mut().enumerate() {
                if n > 0 {
                    p.expect(b',')?;
                }
                *slot = p.number()?;
            }
            p.expect(b']')?;
            crossings.push(x);
            match p.next_tok() {
                Some(b',') => continue,
                Some(b']') => break,
                _ => return Err(p.error("expected ',' or ']'")),
            }
        }
    }
    if p.next_tok().is_some() {
        return Err(p.error("trailing characters"));
    }
    PlanarDiagram::new(crossings, 0)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn next_tok(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.error(&format!("expected '{}'", c as char))),
        }
    }

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a non-negative integer"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "integer out of range".into() })
    }
}

#[derive(Default)]
pub(crate) struct UnionFind {
    parent: HashMap<u32, u32>,
}

impl UnionFind {
    pub(crate) fn add(&mut self, x: u32) {
        self.parent.entry(x).or_insert(x);
    }

    pub(crate) fn find(&mut self, x: u32) -> u32 {
        let p = *self.parent.entry(x).or_insert(x);
        if p == x {
            return x;
        }
        let root = self.find(p);
        self.parent.insert(x, root);
        root
    }

    pub(crate) fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(hi, lo);
        }
    }
}
