//! Decorated planar trees and the four families T_{i,j}.
//!
//! A tree is either the bare leaf `•` or an internal node carrying a natural
//! label, at least two children and one positive angle label between each
//! pair of consecutive children. Text form: `0(1(. 1 .) 3 .)`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{DomainError, ParseError};

/// One coordinate of a family: `2` (idempotent / quasi-idempotent) or `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Exponent {
    Two,
    Inf,
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Exponent::Two => "2",
            Exponent::Inf => "inf",
        })
    }
}

impl FromStr for Exponent {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s.trim() {
            "2" => Ok(Exponent::Two),
            "inf" | "∞" | "infinity" => Ok(Exponent::Inf),
            _ => Err(ParseError::new("family exponent", s, "expected 2 or inf")),
        }
    }
}

/// The family (i, j): `i` bounds angle labels, `j` bounds node labels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Family {
    pub i: Exponent,
    pub j: Exponent,
}

impl Family {
    pub const INF_INF: Family = Family::new(Exponent::Inf, Exponent::Inf);
    pub const INF_TWO: Family = Family::new(Exponent::Inf, Exponent::Two);
    pub const TWO_INF: Family = Family::new(Exponent::Two, Exponent::Inf);
    pub const TWO_TWO: Family = Family::new(Exponent::Two, Exponent::Two);
    pub const ALL: [Family; 4] = [Family::INF_INF, Family::INF_TWO, Family::TWO_INF, Family::TWO_TWO];

    pub const fn new(i: Exponent, j: Exponent) -> Self {
        Family { i, j }
    }

    /// Largest admissible root label, `None` when unbounded.
    pub fn max_root_label(self) -> Option<u32> {
        match self.j {
            Exponent::Two => Some(1),
            Exponent::Inf => None,
        }
    }

    /// Largest admissible non-root label, `None` when unbounded.
    pub fn max_inner_label(self) -> Option<u32> {
        match self.j {
            Exponent::Two => Some(1),
            Exponent::Inf => None,
        }
    }

    /// Largest admissible angle label, `None` when unbounded.
    pub fn max_angle(self) -> Option<u32> {
        match self.i {
            Exponent::Two => Some(1),
            Exponent::Inf => None,
        }
    }

    /// Sum of two adjacent angle labels merged at graft time (1+1=1 when i=2).
    pub fn merge_angles(self, a: u32, b: u32) -> u32 {
        match self.i {
            Exponent::Two => 1,
            Exponent::Inf => a + b,
        }
    }

    /// `other` is coordinatewise ≤ `self` in the order 2 < ∞.
    pub fn dominates(self, other: Family) -> bool {
        self.i >= other.i && self.j >= other.j
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

impl FromStr for Family {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (i, j) = s
            .split_once(',')
            .ok_or_else(|| ParseError::new("family", s, "expected `i,j`"))?;
        Ok(Family::new(i.parse()?, j.parse()?))
    }
}

/// Angle and node degree `(n, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bidegree {
    pub n: u32,
    pub m: u32,
}

impl Bidegree {
    pub fn new(n: u32, m: u32) -> Self {
        Bidegree { n, m }
    }

    pub fn total(self) -> u32 {
        self.n + self.m
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.n, self.m)
    }
}

/// An internal node. Children and angles satisfy
/// `angles.len() + 1 == children.len() >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Node {
    label: u32,
    children: Vec<Tree>,
    angles: Vec<u32>,
}

impl Node {
    pub fn label(&self) -> u32 {
        self.label
    }

    pub fn children(&self) -> &[Tree] {
        &self.children
    }

    pub fn angles(&self) -> &[u32] {
        &self.angles
    }
}

/// A decorated planar tree, or the bare leaf `•`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Tree {
    Leaf,
    Node(Node),
}

impl Tree {
    /// Builds a node, checking the structural shape only (not family rules).
    pub fn node(label: u32, children: Vec<Tree>, angles: Vec<u32>) -> Result<Tree, DomainError> {
        if children.len() < 2 || angles.len() + 1 != children.len() {
            return Err(DomainError::Other(format!(
                "a node needs at least two children and one angle between each pair, got {} children and {} angles",
                children.len(),
                angles.len()
            )));
        }
        Ok(Tree::Node(Node {
            label,
            children,
            angles,
        }))
    }

    pub(crate) fn node_unchecked(label: u32, children: Vec<Tree>, angles: Vec<u32>) -> Tree {
        debug_assert!(children.len() >= 2 && angles.len() + 1 == children.len());
        Tree::Node(Node {
            label,
            children,
            angles,
        })
    }

    /// The one-node tree with root label `label` and a single angle `angle`.
    pub fn corolla(label: u32, angle: u32) -> Tree {
        Tree::node_unchecked(label, vec![Tree::Leaf, Tree::Leaf], vec![angle])
    }

    /// The generator `0(. 1 .)`.
    pub fn generator() -> Tree {
        Tree::corolla(0, 1)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Tree::Leaf)
    }

    pub fn as_node(&self) -> Option<&Node> {
        match self {
            Tree::Leaf => None,
            Tree::Node(n) => Some(n),
        }
    }

    /// Root label, `None` for the leaf.
    pub fn root_label(&self) -> Option<u32> {
        self.as_node().map(|n| n.label)
    }

    /// The same tree with its root label replaced (identity on the leaf).
    pub fn with_root_label(&self, label: u32) -> Tree {
        match self {
            Tree::Leaf => Tree::Leaf,
            Tree::Node(n) => Tree::Node(Node {
                label,
                children: n.children.clone(),
                angles: n.angles.clone(),
            }),
        }
    }

    /// `(deg_a, deg_n)`: sums of angle labels and of node labels.
    pub fn bidegree(&self) -> Bidegree {
        match self {
            Tree::Leaf => Bidegree::new(0, 0),
            Tree::Node(node) => {
                let mut d = Bidegree::new(node.angles.iter().sum(), node.label);
                for c in &node.children {
                    let b = c.bidegree();
                    d.n += b.n;
                    d.m += b.m;
                }
                d
            }
        }
    }

    /// Number of internal nodes.
    pub fn internal_nodes(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(n) => 1 + n.children.iter().map(Tree::internal_nodes).sum::<usize>(),
        }
    }

    /// Number of internal nodes with a positive label.
    pub fn positive_nodes(&self) -> usize {
        match self {
            Tree::Leaf => 0,
            Tree::Node(n) => usize::from(n.label > 0) + n.children.iter().map(Tree::positive_nodes).sum::<usize>(),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(n) => n.children.iter().map(Tree::leaves).sum(),
        }
    }

    /// Rebuilds the tree with every node label and angle label transformed.
    /// `node_label` receives `(is_root, label)`.
    pub fn relabel(&self, node_label: &impl Fn(bool, u32) -> u32, angle: &impl Fn(u32) -> u32) -> Tree {
        fn go(t: &Tree, root: bool, node_label: &impl Fn(bool, u32) -> u32, angle: &impl Fn(u32) -> u32) -> Tree {
            match t {
                Tree::Leaf => Tree::Leaf,
                Tree::Node(n) => Tree::Node(Node {
                    label: node_label(root, n.label),
                    children: n.children.iter().map(|c| go(c, false, node_label, angle)).collect(),
                    angles: n.angles.iter().map(|&a| angle(a)).collect(),
                }),
            }
        }
        go(self, true, node_label, angle)
    }
}

impl Ord for Tree {
    /// Leaf < Node; nodes compare by label, then child count, then the
    /// interleaved sequence child₁, angle₁, child₂, … .
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Tree::Leaf, Tree::Leaf) => Ordering::Equal,
            (Tree::Leaf, Tree::Node(_)) => Ordering::Less,
            (Tree::Node(_), Tree::Leaf) => Ordering::Greater,
            (Tree::Node(a), Tree::Node(b)) => a
                .label
                .cmp(&b.label)
                .then(a.children.len().cmp(&b.children.len()))
                .then_with(|| {
                    for k in 0..a.children.len() {
                        let c = a.children[k].cmp(&b.children[k]);
                        if c != Ordering::Equal {
                            return c;
                        }
                        if k < a.angles.len() {
                            let c = a.angles[k].cmp(&b.angles[k]);
                            if c != Ordering::Equal {
                                return c;
                            }
                        }
                    }
                    Ordering::Equal
                }),
        }
    }
}

impl PartialOrd for Tree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => write!(f, "."),
            Tree::Node(n) => {
                write!(f, "{}(", n.label)?;
                for (k, c) in n.children.iter().enumerate() {
                    if k > 0 {
                        write!(f, " {} ", n.angles[k - 1])?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Num(u32),
    Dot,
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let mut chars = s.char_indices().peekable();
    while let Some((i, ch)) = chars.next() {
        match ch {
            c if c.is_whitespace() => {}
            '.' => out.push(Token::Dot),
            '(' => out.push(Token::Open),
            ')' => out.push(Token::Close),
            c if c.is_ascii_digit() => {
                let mut end = i + 1;
                while let Some(&(j, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = j + 1;
                    chars.next();
                }
                let v = s[i..end]
                    .parse()
                    .map_err(|_| ParseError::new("tree", s, "label out of range"))?;
                out.push(Token::Num(v));
            }
            c => return Err(ParseError::new("tree", s, format!("unexpected character {c:?}"))),
        }
    }
    Ok(out)
}

struct TreeParser<'a> {
    src: &'a str,
    tokens: Vec<Token>,
    pos: usize,
}

impl TreeParser<'_> {
    fn err(&self, reason: &str) -> ParseError {
        ParseError::new("tree", self.src, format!("{reason} at token {}", self.pos))
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).copied();
        self.pos += 1;
        t
    }

    fn tree(&mut self) -> Result<Tree, ParseError> {
        match self.next() {
            Some(Token::Dot) => Ok(Tree::Leaf),
            Some(Token::Num(label)) => {
                if self.next() != Some(Token::Open) {
                    return Err(self.err("expected '('"));
                }
                let mut children = vec![self.tree()?];
                let mut angles = Vec::new();
                loop {
                    match self.next() {
                        Some(Token::Close) => break,
                        Some(Token::Num(0)) => return Err(self.err("angle labels are positive")),
                        Some(Token::Num(a)) => {
                            angles.push(a);
                            children.push(self.tree()?);
                        }
                        _ => return Err(self.err("expected an angle label or ')'")),
                    }
                }
                if children.len() < 2 {
                    return Err(self.err("a node needs at least two children"));
                }
                Ok(Tree::node_unchecked(label, children, angles))
            }
            _ => Err(self.err("expected '.' or a node label")),
        }
    }
}

impl FromStr for Tree {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut p = TreeParser {
            src: s,
            tokens: tokenize(s)?,
            pos: 0,
        };
        let t = p.tree()?;
        if p.pos != p.tokens.len() {
            return Err(p.err("trailing input"));
        }
        Ok(t)
    }
}

/// Which rule a tree breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Condition {
    /// Every internal node has at least two children.
    R1,
    /// Only the outermost children of a node may be leaves.
    R2,
    /// Only the root may carry label 0.
    R3,
    /// A label lies outside the family's admissible range.
    LabelRange,
    /// The bare leaf is not an algebra element.
    BareLeaf,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::R1 => "R1",
            Condition::R2 => "R2",
            Condition::R3 => "R3",
            Condition::LabelRange => "label-range",
            Condition::BareLeaf => "bare-leaf",
        })
    }
}

/// One violation, located by the child-index path from the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub at: Vec<usize>,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at node {:?}: {}", self.condition, self.at, self.detail)
    }
}

/// All violations found in one tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport(pub Vec<Violation>);

impl ValidationReport {
    pub fn conditions(&self) -> Vec<Condition> {
        self.0.iter().map(|v| v.condition).collect()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

/// Checks (R1)–(R3) and the family's label bounds.
pub fn validate(f: Family, t: &Tree) -> Result<(), ValidationReport> {
    let mut out = Vec::new();
    if t.is_leaf() {
        out.push(Violation {
            condition: Condition::BareLeaf,
            at: vec![],
            detail: "the bare leaf is only admissible in the augmented set".into(),
        });
    } else {
        check_node(f, t, true, &mut Vec::new(), &mut out);
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(ValidationReport(out))
    }
}

/// Like [`validate`], but also admits the bare leaf.
pub fn validate_augmented(f: Family, t: &Tree) -> Result<(), ValidationReport> {
    if t.is_leaf() {
        Ok(())
    } else {
        validate(f, t)
    }
}

pub(crate) fn require_valid(f: Family, t: &Tree) -> Result<(), DomainError> {
    validate(f, t).map_err(|r| DomainError::InvalidTree {
        family: f.to_string(),
        report: r.to_string(),
    })
}

fn check_node(f: Family, t: &Tree, root: bool, at: &mut Vec<usize>, out: &mut Vec<Violation>) {
    let Tree::Node(n) = t else { return };
    let mut push = |condition, detail: String| {
        out.push(Violation {
            condition,
            at: at.clone(),
            detail,
        })
    };
    if n.children.len() < 2 {
        push(Condition::R1, format!("{} child", n.children.len()));
    }
    let k = n.children.len();
    for (idx, c) in n.children.iter().enumerate() {
        if c.is_leaf() && idx > 0 && idx + 1 < k {
            push(Condition::R2, format!("child {idx} is an interior leaf"));
        }
    }
    if !root && n.label == 0 {
        push(Condition::R3, "non-root node with label 0".into());
    }
    let bound = if root { f.max_root_label() } else { f.max_inner_label() };
    if let Some(b) = bound {
        if n.label > b {
            push(Condition::LabelRange, format!("node label {} exceeds {b}", n.label));
        }
    }
    for &a in &n.angles {
        if a == 0 || f.max_angle().is_some_and(|b| a > b) {
            push(Condition::LabelRange, format!("angle label {a} not admissible"));
        }
    }
    for (idx, c) in n.children.iter().enumerate() {
        at.push(idx);
        check_node(f, c, false, at, out);
        at.pop();
    }
}

type ChildSeq = (Vec<Tree>, Vec<u32>);

/// Exhaustive generator for the components T_f(n, m), memoized per instance.
pub struct Enumerator {
    family: Family,
    trees: HashMap<(u32, u32, bool), Rc<Vec<Tree>>>,
    tails: HashMap<(u32, u32), Rc<Vec<ChildSeq>>>,
}

impl Enumerator {
    pub fn new(family: Family) -> Self {
        Enumerator {
            family,
            trees: HashMap::new(),
            tails: HashMap::new(),
        }
    }

    /// All trees of bidegree `(n, m)` in canonical order.
    pub fn component(&mut self, n: u32, m: u32) -> Rc<Vec<Tree>> {
        self.trees_of(n, m, true)
    }

    fn angle_range(&self, budget: u32) -> std::ops::RangeInclusive<u32> {
        match self.family.max_angle() {
            Some(b) => 1..=b.min(budget),
            None => 1..=budget,
        }
    }

    fn trees_of(&mut self, n: u32, m: u32, root: bool) -> Rc<Vec<Tree>> {
        if let Some(v) = self.trees.get(&(n, m, root)) {
            return v.clone();
        }
        let (lo, hi) = if root {
            (0, self.family.max_root_label().unwrap_or(m).min(m))
        } else {
            (1, self.family.max_inner_label().unwrap_or(m).min(m))
        };
        let mut out = Vec::new();
        if n >= 1 {
            for label in lo..=hi {
                for (children, angles) in self.node_seqs(n, m - label).iter() {
                    out.push(Tree::node_unchecked(label, children.clone(), angles.clone()));
                }
            }
        }
        out.sort();
        let rc = Rc::new(out);
        self.trees.insert((n, m, root), rc.clone());
        rc
    }

    /// Child sequences (≥ 2 children) of total bidegree `(n, m)`.
    fn node_seqs(&mut self, n: u32, m: u32) -> Vec<ChildSeq> {
        let mut out = Vec::new();
        // First child is a leaf.
        for a in self.angle_range(n) {
            for (cs, angs) in self.tails(n - a, m).iter() {
                let mut children = vec![Tree::Leaf];
                children.extend(cs.iter().cloned());
                let mut angles = vec![a];
                angles.extend(angs.iter().copied());
                out.push((children, angles));
            }
        }
        // First child is an internal subtree.
        for (first, rest) in self.inner_then_tail(n, m) {
            out.push((first, rest));
        }
        out
    }

    /// Sequences `c, a, tail` with `c` internal.
    fn inner_then_tail(&mut self, n: u32, m: u32) -> Vec<ChildSeq> {
        let mut out = Vec::new();
        for nc in 1..=n {
            for mc in 1..=m {
                let firsts = self.trees_of(nc, mc, false);
                if firsts.is_empty() {
                    continue;
                }
                for a in self.angle_range(n - nc) {
                    let tails = self.tails(n - nc - a, m - mc);
                    for t in firsts.iter() {
                        for (cs, angs) in tails.iter() {
                            let mut children = vec![t.clone()];
                            children.extend(cs.iter().cloned());
                            let mut angles = vec![a];
                            angles.extend(angs.iter().copied());
                            out.push((children, angles));
                        }
                    }
                }
            }
        }
        out
    }

    /// Sequences with ≥ 1 child, the last possibly a leaf, the others internal.
    fn tails(&mut self, n: u32, m: u32) -> Rc<Vec<ChildSeq>> {
        if let Some(v) = self.tails.get(&(n, m)) {
            return v.clone();
        }
        let mut out = Vec::new();
        if n == 0 && m == 0 {
            out.push((vec![Tree::Leaf], vec![]));
        }
        for t in self.trees_of(n, m, false).iter() {
            out.push((vec![t.clone()], vec![]));
        }
        out.extend(self.inner_then_tail(n, m));
        let rc = Rc::new(out);
        self.tails.insert((n, m), rc.clone());
        rc
    }
}

/// Counts T_f(n, m) by the same decomposition as [`Enumerator`] without
/// building the trees.
pub struct Counter {
    family: Family,
    trees: HashMap<(u32, u32, bool), BigInt>,
    tails: HashMap<(u32, u32), BigInt>,
}

impl Counter {
    pub fn new(family: Family) -> Self {
        Counter {
            family,
            trees: HashMap::new(),
            tails: HashMap::new(),
        }
    }

    /// |T_f(n, m)|.
    pub fn component(&mut self, n: u32, m: u32) -> BigInt {
        self.trees_of(n, m, true)
    }

    fn angles(&self, budget: u32) -> std::ops::RangeInclusive<u32> {
        match self.family.max_angle() {
            Some(b) => 1..=b.min(budget),
            None => 1..=budget,
        }
    }

    fn trees_of(&mut self, n: u32, m: u32, root: bool) -> BigInt {
        if let Some(v) = self.trees.get(&(n, m, root)) {
            return v.clone();
        }
        let (lo, hi) = if root {
            (0, self.family.max_root_label().unwrap_or(m).min(m))
        } else {
            (1, self.family.max_inner_label().unwrap_or(m).min(m))
        };
        let mut total = BigInt::zero();
        if n >= 1 {
            for label in lo..=hi {
                total += self.node_seqs(n, m - label);
            }
        }
        self.trees.insert((n, m, root), total.clone());
        total
    }

    fn node_seqs(&mut self, n: u32, m: u32) -> BigInt {
        let mut total = BigInt::zero();
        for a in self.angles(n) {
            total += self.tails(n - a, m);
        }
        total + self.inner_then_tail(n, m)
    }

    fn inner_then_tail(&mut self, n: u32, m: u32) -> BigInt {
        let mut total = BigInt::zero();
        for nc in 1..=n {
            for mc in 1..=m {
                let firsts = self.trees_of(nc, mc, false);
                if firsts.is_zero() {
                    continue;
                }
                for a in self.angles(n - nc) {
                    total += &firsts * self.tails(n - nc - a, m - mc);
                }
            }
        }
        total
    }

    fn tails(&mut self, n: u32, m: u32) -> BigInt {
        if let Some(v) = self.tails.get(&(n, m)) {
            return v.clone();
        }
        let mut total = BigInt::from(u8::from(n == 0 && m == 0));
        total += self.trees_of(n, m, false);
        total += self.inner_then_tail(n, m);
        self.tails.insert((n, m), total.clone());
        total
    }
}

/// All trees of T_f(n, m) in canonical order.
pub fn enumerate(f: Family, n: u32, m: u32) -> Vec<Tree> {
    Enumerator::new(f).component(n, m).as_ref().clone()
}

/// All trees of T_f with `n + m ≤ max_total`, in order of (n, m).
pub fn enumerate_up_to_total(f: Family, max_total: u32) -> Vec<Tree> {
    let mut e = Enumerator::new(f);
    let mut out = Vec::new();
    for n in 1..=max_total {
        for m in 0..=(max_total - n) {
            out.extend(e.component(n, m).iter().cloned());
        }
    }
    out
}
