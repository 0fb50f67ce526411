//! Bounce trees, the inverse of `G_m` for `m = kn +- 1`, and bounce paths.
//!
//! Generators are indexed `0..m` in increasing order. The tree is first
//! recovered on indices from the column vector `g`, and generator values are
//! only fixed afterwards, from residue comparisons.

use std::fmt;

use crate::diagrams::Frame;
use crate::error::{Error, Result};
use crate::gmaps::g_columns;
use crate::semimodules::Semimodule;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    /// `m = kn + 1`
    Plus,
    /// `m = kn - 1`
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BounceShape {
    pub k: u32,
    pub sign: Sign,
}

impl BounceShape {
    /// Classifies `m` relative to `n`. When both forms apply (`n <= 2`) the
    /// `kn + 1` form wins.
    pub fn of(f: &Frame) -> Result<Self> {
        let (m, n) = (f.m(), f.n());
        if m > n && (m - 1) % n == 0 {
            return Ok(BounceShape { k: (m - 1) / n, sign: Sign::Plus });
        }
        if (m + 1) % n == 0 {
            return Ok(BounceShape { k: (m + 1) / n, sign: Sign::Minus });
        }
        Err(Error::UnsupportedShape { m, n })
    }

    fn adjustment(&self) -> i64 {
        match self.sign {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A vertex of a bounce tree: a generator index, or the extra root used
/// when `m = kn - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Node {
    Gen(usize),
    Infinity,
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Gen(i) => write!(f, "{i}"),
            Node::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BounceTree {
    shape: BounceShape,
    parent: Vec<Option<Node>>,
}

impl BounceTree {
    pub fn shape(&self) -> BounceShape {
        self.shape
    }

    pub fn num_generators(&self) -> usize {
        self.parent.len()
    }

    pub fn parent(&self, i: usize) -> Option<Node> {
        self.parent[i]
    }

    pub fn root(&self) -> Node {
        match self.shape.sign {
            Sign::Plus => Node::Gen(self.parent.len() - 1),
            Sign::Minus => Node::Infinity,
        }
    }

    /// Edges `i -> parent(i)` in index order.
    pub fn edges(&self) -> Vec<(usize, Node)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (i, p)))
            .collect()
    }

    /// Generator indices with no incoming edge.
    pub fn leaves(&self) -> Vec<usize> {
        (0..self.parent.len())
            .filter(|&i| !self.parent.contains(&Some(Node::Gen(i))))
            .collect()
    }

    /// The vertices from `i` to the root, inclusive.
    pub fn path_from(&self, i: usize) -> Vec<Node> {
        let mut path = vec![Node::Gen(i)];
        let mut cur = i;
        while let Some(next) = self.parent[cur] {
            path.push(next);
            match next {
                Node::Gen(j) => cur = j,
                Node::Infinity => break,
            }
        }
        path
    }

    /// Index increments along the path from generator 0; the last step into
    /// the infinite root counts up to index `m`.
    pub fn steps_from_zero(&self) -> Vec<u32> {
        let m = self.parent.len();
        self.path_from(0)
            .windows(2)
            .map(|w| {
                let from = match w[0] {
                    Node::Gen(i) => i,
                    Node::Infinity => unreachable!(),
                };
                let to = match w[1] {
                    Node::Gen(j) => j,
                    Node::Infinity => m,
                };
                (to - from) as u32
            })
            .collect()
    }

    /// Renders the edges as `i->j` pairs, `inf` for the extra root.
    pub fn edges_string(&self) -> String {
        self.edges()
            .iter()
            .map(|(i, p)| format!("{i}->{p}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Builds the bounce tree of `s` with respect to its `m`-generators.
///
/// For `m = kn + 1` the edge from `a_i` goes to the largest generator
/// `<= a_i + n`; for `m = kn - 1` it goes to the smallest generator
/// `>= a_i + n`, or to infinity when there is none.
pub fn bounce_tree(s: &Semimodule) -> Result<BounceTree> {
    let f = s.frame();
    let shape = BounceShape::of(&f)?;
    let gens = s.generators(f.m());
    let n = f.n() as i64;
    let last = gens.len() - 1;
    let parent = gens
        .iter()
        .enumerate()
        .map(|(i, &a)| match shape.sign {
            Sign::Plus if i == last => None,
            Sign::Plus => {
                let j = gens.iter().rposition(|&b| b <= a + n).expect("a_0 <= a + n");
                Some(Node::Gen(j))
            }
            Sign::Minus => Some(match gens.iter().position(|&b| b >= a + n) {
                Some(j) => Node::Gen(j),
                None => Node::Infinity,
            }),
        })
        .collect();
    Ok(BounceTree { shape, parent })
}

/// Result of inverting `G_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reconstruction {
    pub semimodule: Semimodule,
    pub generators: Vec<i64>,
    pub tree: BounceTree,
}

/// The semimodule whose `G_m` column vector is `g`.
pub fn reconstruct_semimodule(f: &Frame, g: &[u32]) -> Result<Semimodule> {
    reconstruct(f, g).map(|r| r.semimodule)
}

/// Inverts `G_m` for `m = kn +- 1`: recovers the bounce tree path by path,
/// then the generator residues and values, and validates the answer by
/// recomputing `G_m`.
pub fn reconstruct(f: &Frame, g: &[u32]) -> Result<Reconstruction> {
    let shape = BounceShape::of(f)?;
    let m = f.m() as usize;
    if g.len() != m {
        return Err(Error::MalformedInput(format!("expected {m} entries, got {}", g.len())));
    }
    if g.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::MalformedInput("entries must be weakly decreasing".into()));
    }
    if let Some(&bad) = g.iter().find(|&&x| x >= f.n()) {
        return Err(Error::MalformedInput(format!("entry {bad} exceeds n - 1 = {}", f.n() - 1)));
    }

    let mut rec = TreeRecovery { shape, m, n: f.n() as i64, g, parent: vec![None; m] };
    rec.recover_tree()?;
    let generators = rec.recover_generators()?;
    let tree = BounceTree { shape, parent: rec.parent };

    let top = *generators.iter().max().expect("m >= 1");
    let gaps = (1..top).filter(|&x| {
        let a = generators[generators.iter().position(|&a| (a - x).rem_euclid(m as i64) == 0).unwrap()];
        x < a
    });
    let semimodule = Semimodule::new(*f, gaps.map(|x| x as u32))
        .map_err(|e| Error::NotRealizable(e.to_string()))?;
    if semimodule.generators(f.m()) != generators || g_columns(&semimodule, f.m()) != g {
        return Err(Error::NotRealizable("recomputed G_m does not match".into()));
    }
    if bounce_tree(&semimodule)? != tree {
        return Err(Error::NotRealizable("recovered tree is inconsistent".into()));
    }
    Ok(Reconstruction { semimodule, generators, tree })
}

struct TreeRecovery<'a> {
    shape: BounceShape,
    m: usize,
    n: i64,
    g: &'a [u32],
    parent: Vec<Option<Node>>,
}

impl TreeRecovery<'_> {
    fn not_realizable(msg: impl Into<String>) -> Error {
        Error::NotRealizable(msg.into())
    }

    fn is_root(&self, i: usize) -> bool {
        self.shape.sign == Sign::Plus && i == self.m - 1
    }

    /// `N_{ji}` read off the known part of the tree: the number of steps
    /// from `j` until the path reaches index `>= i` (`kn + 1`) or `> i`
    /// (`kn - 1`).
    fn steps(&self, j: usize, i: usize) -> Result<i64> {
        let plus = self.shape.sign == Sign::Plus;
        if plus && j >= i {
            return Ok(0);
        }
        if !plus && j == i {
            return Ok(1);
        }
        let mut cur = Node::Gen(j);
        for t in 0..=self.m as i64 {
            let reached = match cur {
                Node::Infinity => true,
                Node::Gen(c) if plus => c >= i,
                Node::Gen(c) => c > i,
            };
            if reached {
                return Ok(t);
            }
            let Node::Gen(c) = cur else { unreachable!() };
            cur = self.parent[c]
                .ok_or_else(|| Self::not_realizable(format!("path from {j} is not yet known")))?;
        }
        Err(Error::MalformedInput("tree walk did not terminate".into()))
    }

    /// `K_{ji} = ceil(N_{ji} / k)`.
    fn k_number(&self, j: usize, i: usize) -> Result<i64> {
        let k = self.shape.k as i64;
        Ok((self.steps(j, i)? + k - 1).div_euclid(k))
    }

    /// Elements of Delta below `a_i` (`kn + 1`) or up to `a_i` (`kn - 1`).
    fn below(&self, i: Option<usize>) -> Result<i64> {
        let Some(i) = i else { return Ok(0) };
        let upto = match self.shape.sign {
            Sign::Plus => i,
            Sign::Minus => i + 1,
        };
        (0..upto).map(|j| self.k_number(j, i)).sum()
    }

    /// Counts of `n`-cogenerators in the `k` windows preceding `a_l`,
    /// returned as `c_{-k}, ..., c_{-1}`.
    fn seeds(&self, l: usize) -> Result<Vec<i64>> {
        let k = self.shape.k as usize;
        let mut alpha: Vec<Option<usize>> = vec![None; k + 1];
        for (i, slot) in alpha.iter_mut().enumerate().skip(1) {
            *slot = match self.shape.sign {
                Sign::Plus => {
                    let mut found = None;
                    for j in 0..=l {
                        if self.steps(j, l)? <= i as i64 {
                            found = Some(j);
                            break;
                        }
                    }
                    found
                }
                Sign::Minus => {
                    let mut found = None;
                    for j in (0..=l).rev() {
                        if self.steps(j, l)? > i as i64 {
                            found = Some(j);
                            break;
                        }
                    }
                    found
                }
            };
        }
        // members[i] = #(I_{-i} cap Delta)
        let mut members = vec![0i64; k + 1];
        members[0] = self.n - self.g[l] as i64;
        if k >= 1 {
            members[1] = self.below(Some(l))? - self.below(alpha[1])? + self.shape.adjustment();
        }
        for i in 2..=k {
            members[i] = self.below(alpha[i - 1])? - self.below(alpha[i])?;
        }
        // c_{-i} = members[i-1] - members[i], listed from c_{-k} up to c_{-1}
        Ok((1..=k).rev().map(|i| members[i - 1] - members[i]).collect())
    }

    /// Recovers the path from leaf `l` to the root, filling `parent`.
    fn recover_path(&mut self, l: usize) -> Result<Vec<usize>> {
        let k = self.shape.k as usize;
        let mut c = self.seeds(l)?;
        let mut path = vec![l];
        let mut cur = l;
        for i in 0.. {
            if self.is_root(cur) {
                break;
            }
            if i > self.m {
                return Err(Error::MalformedInput("path recovery did not terminate".into()));
            }
            let mut b: i64 = c[i..i + k].iter().sum();
            if i + 1 == k {
                b += self.shape.adjustment();
            }
            if b <= 0 {
                return Err(Self::not_realizable(format!("non-positive step {b} from a_{cur}")));
            }
            let next = cur + b as usize;
            let node = match self.shape.sign {
                Sign::Minus if next == self.m => Node::Infinity,
                _ if next >= self.m => {
                    return Err(Self::not_realizable(format!("step from a_{cur} overshoots")));
                }
                _ => Node::Gen(next),
            };
            match self.parent[cur] {
                Some(known) if known != node => {
                    return Err(Self::not_realizable(format!("conflicting edges at a_{cur}")));
                }
                _ => self.parent[cur] = Some(node),
            }
            let Node::Gen(next) = node else { break };
            c.push(self.g[cur] as i64 - self.g[next] as i64);
            path.push(next);
            cur = next;
        }
        Ok(path)
    }

    fn recover_tree(&mut self) -> Result<()> {
        let mut covered = vec![false; self.m];
        while let Some(l) = covered.iter().position(|&c| !c) {
            for v in self.recover_path(l)? {
                covered[v] = true;
            }
        }
        Ok(())
    }

    /// Generator values from the finished tree: `K_{0i}` places `a_i` in a
    /// block of length `m`, and pairwise `K_{ij}` order the residues.
    fn recover_generators(&self) -> Result<Vec<i64>> {
        let m = self.m;
        let k0: Vec<i64> = (0..m).map(|i| self.k_number(0, i)).collect::<Result<_>>()?;
        let mut smaller = vec![vec![false; m]; m];
        for i in 1..m {
            for j in i + 1..m {
                let less = self.k_number(i, j)? > k0[j] - k0[i];
                smaller[i][j] = less;
                smaller[j][i] = !less;
            }
        }
        let mut rank = vec![0usize; m];
        for i in 1..m {
            rank[i] = 1 + (1..m).filter(|&j| j != i && smaller[j][i]).count();
        }
        let mut seen = vec![false; m];
        for &r in &rank[1..] {
            if r >= m || seen[r] {
                return Err(Self::not_realizable("residue comparisons are inconsistent"));
            }
            seen[r] = true;
        }
        let mut gens = vec![0i64; m];
        for i in 1..m {
            gens[i] = (k0[i] - 1) * m as i64 + rank[i] as i64;
        }
        if gens.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Self::not_realizable("recovered generators are not increasing"));
        }
        Ok(gens)
    }
}

/// A bounce path: alternating south and east steps, starting south.
/// Zero-length steps are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BouncePath {
    pub vertical: Vec<u32>,
    pub horizontal: Vec<u32>,
    pub n: u32,
}

impl BouncePath {
    /// Sum of the heights of the south-west corners.
    pub fn statistic(&self) -> u64 {
        let mut height = self.n as u64;
        self.vertical
            .iter()
            .map(|&v| {
                height -= v as u64;
                height
            })
            .sum()
    }

    /// `V2 E2 V0 E2 ...`
    pub fn steps_string(&self) -> String {
        self.vertical
            .iter()
            .zip(&self.horizontal)
            .map(|(v, h)| format!("V{v} E{h}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Corner points from `(0, n)`, with zero-length steps collapsed.
    pub fn corners(&self) -> Vec<(u32, u32)> {
        let mut pts = vec![(0, self.n)];
        let (mut x, mut y) = (0u32, self.n);
        for (&v, &h) in self.vertical.iter().zip(&self.horizontal) {
            for step in [(0, v), (h, 0)] {
                if step == (0, 0) {
                    continue;
                }
                x += step.0;
                y -= step.1;
                let len = pts.len();
                let straight = len >= 2 && {
                    let (px, py) = pts[len - 2];
                    let (qx, qy) = pts[len - 1];
                    (px == qx && qx == x) || (py == qy && qy == y)
                };
                if straight {
                    pts[len - 1] = (x, y);
                } else {
                    pts.push((x, y));
                }
            }
        }
        pts
    }
}

pub fn bounce_statistic(p: &BouncePath) -> u64 {
    p.statistic()
}

/// The bounce path outside the diagram with column heights `columns`
/// (padded with zeros to `m` columns) in the `m`-wide, `n`-high frame.
///
/// Each east step is the sum of the last `k` south steps; for `m = kn - 1`
/// the step with index `k - 1` is one shorter.
pub fn bounce_path(columns: &[u32], f: &Frame) -> Result<BouncePath> {
    let shape = BounceShape::of(f)?;
    let (m, n) = (f.m() as usize, f.n());
    if columns.len() > m {
        return Err(Error::MalformedInput(format!("more than {m} columns")));
    }
    if columns.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::MalformedInput("columns must be weakly decreasing".into()));
    }
    if columns.iter().any(|&c| c >= n) {
        return Err(Error::MalformedInput(format!("column heights must be below {n}")));
    }
    let target = match shape.sign {
        Sign::Plus => m - 1,
        Sign::Minus => m,
    };
    let k = shape.k as usize;
    let mut path = BouncePath { vertical: Vec::new(), horizontal: Vec::new(), n };
    let (mut x, mut y) = (0usize, n);
    while x < target {
        if path.vertical.len() > 2 * m + 2 {
            return Err(Error::MalformedInput("bounce path does not terminate".into()));
        }
        let floor = columns.get(x).copied().unwrap_or(0);
        let v = y - floor;
        y = floor;
        path.vertical.push(v);
        let i = path.horizontal.len();
        let window = &path.vertical[path.vertical.len().saturating_sub(k)..];
        let mut h: i64 = window.iter().map(|&v| v as i64).sum();
        if shape.sign == Sign::Minus && i + 1 == k {
            h -= 1;
        }
        if h < 0 {
            return Err(Error::MalformedInput("negative east step".into()));
        }
        path.horizontal.push(h as u32);
        x += h as usize;
    }
    if x > target {
        return Err(Error::MalformedInput(format!("bounce path overshoots to x = {x}")));
    }
    Ok(path)
}

/// Checks that every interval `[a - l(kn+1), a - lkn - 1]` (resp.
/// `[a - lkn + 1, a - l(kn-1)]`) below an `m`-generator `a` misses Delta.
pub fn gap_intervals_hold(s: &Semimodule) -> Result<bool> {
    let f = s.frame();
    let shape = BounceShape::of(&f)?;
    let kn = shape.k as i64 * f.n() as i64;
    for a in s.generators(f.m()) {
        for l in 1i64.. {
            let (lo, hi) = match shape.sign {
                Sign::Plus => (a - l * (kn + 1), a - l * kn - 1),
                Sign::Minus => (a - l * kn + 1, a - l * (kn - 1)),
            };
            if hi < 0 {
                break;
            }
            if (lo..=hi).any(|x| s.contains(x)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmaps::g_columns;

    fn frame(m: u32, n: u32) -> Frame {
        Frame::new(m, n).unwrap()
    }

    fn value_edges(s: &Semimodule) -> Vec<(i64, Option<i64>)> {
        let gens = s.generators(s.frame().m());
        let mut e: Vec<_> = bounce_tree(s)
            .unwrap()
            .edges()
            .into_iter()
            .map(|(i, p)| {
                (gens[i], match p {
                    Node::Gen(j) => Some(gens[j]),
                    Node::Infinity => None,
                })
            })
            .collect();
        e.sort();
        e
    }

    #[test]
    fn shapes() {
        assert_eq!(BounceShape::of(&frame(7, 3)).unwrap(), BounceShape { k: 2, sign: Sign::Plus });
        assert_eq!(BounceShape::of(&frame(8, 3)).unwrap(), BounceShape { k: 3, sign: Sign::Minus });
        assert_eq!(BounceShape::of(&frame(3, 2)).unwrap(), BounceShape { k: 1, sign: Sign::Plus });
        assert_eq!(BounceShape::of(&frame(3, 4)).unwrap(), BounceShape { k: 1, sign: Sign::Minus });
        assert_eq!(BounceShape::of(&frame(1, 2)).unwrap(), BounceShape { k: 1, sign: Sign::Minus });
        assert_eq!(BounceShape::of(&frame(7, 5)), Err(Error::UnsupportedShape { m: 7, n: 5 }));
    }

    #[test]
    fn tree_three_seven() {
        let s = Semimodule::new(frame(7, 3), [1, 4]).unwrap();
        let expect = [(0, 3), (2, 5), (3, 6), (5, 8), (6, 8), (8, 11)];
        let expect: Vec<_> = expect.iter().map(|&(a, b)| (a, Some(b))).collect();
        assert_eq!(value_edges(&s), expect);
        let t = bounce_tree(&s).unwrap();
        assert_eq!(t.root(), Node::Gen(6));
        assert_eq!(t.leaves(), [0, 1]);
    }

    #[test]
    fn tree_three_eight() {
        let s = Semimodule::new(frame(8, 3), [1, 2, 5]).unwrap();
        let expect = [
            (0, Some(3)),
            (3, Some(6)),
            (4, Some(7)),
            (6, Some(9)),
            (7, Some(10)),
            (9, Some(13)),
            (10, Some(13)),
            (13, None),
        ];
        assert_eq!(value_edges(&s), expect);
        assert_eq!(bounce_tree(&s).unwrap().root(), Node::Infinity);
    }

    #[test]
    fn tree_for_small_semigroup() {
        // Gamma_{2,3} with m = 3 = 1*2 + 1: generators 0, 2, 4.
        let s = Semimodule::semigroup(frame(3, 2));
        let t = bounce_tree(&s).unwrap();
        assert_eq!(t.edges(), [(0, Node::Gen(1)), (1, Node::Gen(2))]);
        assert_eq!(t.path_from(0).last(), Some(&t.root()));
    }

    #[test]
    fn reconstruct_four_nine() {
        let r = reconstruct(&frame(9, 4), &[2, 1, 1, 0, 0, 0, 0, 0, 0]).unwrap();
        assert_eq!(r.generators, [0, 3, 4, 6, 7, 8, 10, 11, 14]);
        // 0->2->5->7->8, 1->4->7, 3->6->8
        assert_eq!(r.tree.edges_string(), "0->2 1->4 2->5 3->6 4->7 5->7 6->8 7->8");
    }

    #[test]
    fn reconstruct_five_nine() {
        let r = reconstruct(&frame(9, 5), &[3, 2, 2, 2, 1, 0, 0, 0, 0]).unwrap();
        assert_eq!(r.generators, [0, 4, 5, 7, 10, 12, 15, 17, 20]);
        assert_eq!(r.tree.path_from(3), [Node::Gen(3), Node::Gen(5), Node::Gen(7), Node::Infinity]);
        assert_eq!(r.tree.path_from(1), [Node::Gen(1), Node::Gen(4), Node::Gen(6), Node::Gen(8), Node::Infinity]);
    }

    #[test]
    fn reconstruct_zero_vector() {
        for (m, n) in [(7, 3), (8, 3), (9, 4), (3, 2), (1, 2), (5, 1)] {
            let f = frame(m, n);
            let s = reconstruct_semimodule(&f, &vec![0; m as usize]).unwrap();
            assert_eq!(s, Semimodule::full(f));
        }
    }

    #[test]
    fn reconstruct_rejects_bad_input() {
        let f = frame(9, 4);
        assert!(matches!(reconstruct(&f, &[2, 1]), Err(Error::MalformedInput(_))));
        assert!(matches!(reconstruct(&f, &[0, 1, 0, 0, 0, 0, 0, 0, 0]), Err(Error::MalformedInput(_))));
        assert!(matches!(reconstruct(&f, &[4, 0, 0, 0, 0, 0, 0, 0, 0]), Err(Error::MalformedInput(_))));
        assert!(matches!(reconstruct(&frame(7, 5), &[0; 7]), Err(Error::UnsupportedShape { .. })));
        // Each realizable vector is accepted; every other decreasing vector is rejected.
        let images: Vec<Vec<u32>> = crate::semimodules::enumerate_semimodules(&f)
            .iter()
            .map(|s| g_columns(s, 9))
            .collect();
        let mut rejected = 0;
        for_each_decreasing(9, 3, &mut |g| match reconstruct(&f, g) {
            Ok(r) => assert!(images.contains(&g.to_vec()) && g_columns(&r.semimodule, 9) == g),
            Err(Error::NotRealizable(_)) => {
                assert!(!images.contains(&g.to_vec()));
                rejected += 1;
            }
            Err(e) => panic!("{g:?}: {e}"),
        });
        assert!(rejected > 0);
    }

    fn for_each_decreasing(len: usize, max: u32, visit: &mut dyn FnMut(&[u32])) {
        fn rec(v: &mut Vec<u32>, len: usize, cap: u32, visit: &mut dyn FnMut(&[u32])) {
            if v.len() == len {
                visit(v);
                return;
            }
            for x in 0..=cap {
                v.push(x);
                rec(v, len, x, visit);
                v.pop();
            }
        }
        rec(&mut Vec::new(), len, max, visit);
    }

    #[test]
    fn bounce_path_three_seven() {
        let p = bounce_path(&[1, 1, 1, 0, 0, 0, 0], &frame(7, 3)).unwrap();
        assert_eq!(p.vertical, [2, 0, 1, 0]);
        assert_eq!(p.horizontal, [2, 2, 1, 1]);
        assert_eq!(p.steps_string(), "V2 E2 V0 E2 V1 E1 V0 E1");
        assert_eq!(p.corners(), [(0, 3), (0, 1), (4, 1), (4, 0), (6, 0)]);
        assert_eq!(p.statistic(), 2);
    }

    #[test]
    fn bounce_path_three_eight() {
        let p = bounce_path(&[2, 1, 1, 0, 0, 0, 0, 0], &frame(8, 3)).unwrap();
        assert_eq!(p.vertical, [1, 1, 1, 0, 0]);
        assert_eq!(p.horizontal, [1, 2, 2, 2, 1]);
        assert_eq!(p.steps_string(), "V1 E1 V1 E2 V1 E2 V0 E2 V0 E1");
        assert_eq!(p.corners(), [(0, 3), (0, 2), (1, 2), (1, 1), (3, 1), (3, 0), (8, 0)]);
        assert_eq!(bounce_statistic(&p), 3);
    }

    #[test]
    fn bounce_path_empty_diagram() {
        let p = bounce_path(&[], &frame(7, 3)).unwrap();
        assert_eq!(p.vertical[0], 3);
        assert!(p.vertical[1..].iter().all(|&v| v == 0));
        assert_eq!(p.statistic(), 0);
    }

    #[test]
    fn gap_intervals_on_examples() {
        assert!(gap_intervals_hold(&Semimodule::new(frame(7, 3), [1, 4]).unwrap()).unwrap());
        assert!(gap_intervals_hold(&Semimodule::new(frame(8, 3), [1, 2, 5]).unwrap()).unwrap());
    }
}
