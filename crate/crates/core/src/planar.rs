//! Unlabeled planar rooted trees: every internal node has at least two
//! children and leaves may sit anywhere.
//!
//! Compact text form: `.` is a leaf and `( … )` a node with its children
//! juxtaposed, e.g. `((..).)` or `((. .) .)` for the left comb.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use crate::error::ParseError;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlanarTree {
    Leaf,
    Node(Vec<PlanarTree>),
}

impl PlanarTree {
    /// The one-node tree with `k` leaves.
    pub fn corolla(k: usize) -> PlanarTree {
        PlanarTree::Node(vec![PlanarTree::Leaf; k])
    }

    /// The one-node binary tree Y.
    pub fn y() -> PlanarTree {
        PlanarTree::corolla(2)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, PlanarTree::Leaf)
    }

    pub fn children(&self) -> &[PlanarTree] {
        match self {
            PlanarTree::Leaf => &[],
            PlanarTree::Node(c) => c,
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            PlanarTree::Leaf => 1,
            PlanarTree::Node(c) => c.iter().map(PlanarTree::leaves).sum(),
        }
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            PlanarTree::Leaf => 0,
            PlanarTree::Node(c) => 1 + c.iter().map(PlanarTree::internal_nodes).sum::<usize>(),
        }
    }

    /// `(leaves − 1, internal nodes)`, the bigrading of PT(n, m).
    pub fn degree(&self) -> (usize, usize) {
        (self.leaves() - 1, self.internal_nodes())
    }

    /// Every node has at least two children.
    pub fn is_valid(&self) -> bool {
        match self {
            PlanarTree::Leaf => true,
            PlanarTree::Node(c) => c.len() >= 2 && c.iter().all(PlanarTree::is_valid),
        }
    }

    /// Every node has exactly two children.
    pub fn is_binary(&self) -> bool {
        match self {
            PlanarTree::Leaf => true,
            PlanarTree::Node(c) => c.len() == 2 && c.iter().all(PlanarTree::is_binary),
        }
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanarTree::Leaf => write!(f, "."),
            PlanarTree::Node(children) => {
                write!(f, "(")?;
                for (k, c) in children.iter().enumerate() {
                    if k > 0 && !(c.is_leaf() && children[k - 1].is_leaf()) {
                        write!(f, " ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

impl FromStr for PlanarTree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let tree = parse_planar(s, &chars, &mut pos)?;
        if pos != chars.len() {
            return Err(ParseError::new("planar tree", s, "trailing input"));
        }
        if !tree.is_valid() {
            return Err(ParseError::new("planar tree", s, "a node needs at least two children"));
        }
        Ok(tree)
    }
}

fn parse_planar(src: &str, chars: &[char], pos: &mut usize) -> Result<PlanarTree, ParseError> {
    match chars.get(*pos) {
        Some('.') => {
            *pos += 1;
            Ok(PlanarTree::Leaf)
        }
        Some('(') => {
            *pos += 1;
            let mut children = Vec::new();
            loop {
                match chars.get(*pos) {
                    Some(')') => {
                        *pos += 1;
                        return Ok(PlanarTree::Node(children));
                    }
                    Some(_) => children.push(parse_planar(src, chars, pos)?),
                    None => return Err(ParseError::new("planar tree", src, "unclosed '('")),
                }
            }
        }
        _ => Err(ParseError::new("planar tree", src, "expected '.' or '('")),
    }
}

type SeqTable = HashMap<(usize, usize, usize), Rc<Vec<Vec<PlanarTree>>>>;

/// Memoized generator for planar trees by leaf and node count.
#[derive(Default)]
pub struct PlanarEnumerator {
    trees: HashMap<(usize, usize), Rc<Vec<PlanarTree>>>,
    seqs: SeqTable,
}

impl PlanarEnumerator {
    pub fn new() -> Self {
        Self::default()
    }

    /// PT(n, m): trees with n+1 leaves and m internal nodes, sorted.
    pub fn component(&mut self, n: usize, m: usize) -> Rc<Vec<PlanarTree>> {
        self.by_size(n + 1, m)
    }

    fn by_size(&mut self, leaves: usize, nodes: usize) -> Rc<Vec<PlanarTree>> {
        if let Some(v) = self.trees.get(&(leaves, nodes)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if leaves == 1 && nodes == 0 {
            out.push(PlanarTree::Leaf);
        } else if nodes >= 1 && leaves >= 2 {
            for seq in self.sequences(leaves, nodes - 1, 2).iter() {
                out.push(PlanarTree::Node(seq.clone()));
            }
        }
        out.sort();
        let rc = Rc::new(out);
        self.trees.insert((leaves, nodes), rc.clone());
        rc
    }

    /// Sequences of at least `min_len` trees with the given totals.
    fn sequences(&mut self, leaves: usize, nodes: usize, min_len: usize) -> Rc<Vec<Vec<PlanarTree>>> {
        if let Some(v) = self.seqs.get(&(leaves, nodes, min_len)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if min_len == 0 && leaves == 0 && nodes == 0 {
            out.push(Vec::new());
        }
        for l in 1..=leaves {
            for k in 0..=nodes {
                let heads = self.by_size(l, k);
                if heads.is_empty() {
                    continue;
                }
                let tails = self.sequences(leaves - l, nodes - k, min_len.saturating_sub(1));
                for h in heads.iter() {
                    for t in tails.iter() {
                        let mut seq = Vec::with_capacity(t.len() + 1);
                        seq.push(h.clone());
                        seq.extend(t.iter().cloned());
                        out.push(seq);
                    }
                }
            }
        }
        let rc = Rc::new(out);
        self.seqs.insert((leaves, nodes, min_len), rc.clone());
        rc
    }
}

/// All planar trees with n+1 leaves and m internal nodes.
pub fn enumerate_planar(n: usize, m: usize) -> Vec<PlanarTree> {
    PlanarEnumerator::new().component(n, m).as_ref().clone()
}

/// All planar trees with between 2 and `max_leaves` leaves.
pub fn planar_up_to_leaves(max_leaves: usize) -> Vec<PlanarTree> {
    let mut e = PlanarEnumerator::new();
    let mut out = Vec::new();
    for leaves in 2..=max_leaves {
        for m in 1..leaves {
            out.extend(e.component(leaves - 1, m).iter().cloned());
        }
    }
    out
}

/// All binary trees with n+1 leaves.
pub fn enumerate_binary(n: usize) -> Vec<PlanarTree> {
    fn go(leaves: usize, memo: &mut HashMap<usize, Vec<PlanarTree>>) -> Vec<PlanarTree> {
        if leaves == 1 {
            return vec![PlanarTree::Leaf];
        }
        if let Some(v) = memo.get(&leaves) {
            return v.clone();
        }
        let mut out = Vec::new();
        for l in 1..leaves {
            let left = go(l, memo);
            let right = go(leaves - l, memo);
            for a in &left {
                for b in &right {
                    out.push(PlanarTree::Node(vec![a.clone(), b.clone()]));
                }
            }
        }
        memo.insert(leaves, out.clone());
        out
    }
    if n == 0 {
        return Vec::new();
    }
    go(n + 1, &mut HashMap::new())
}
