//! Lattice paths and the bijections between trees and paths.
//!
//! Schröder paths use H=(1,0), V=(0,1), D=(1,1) and stay weakly below the
//! diagonal. Motzkin paths use U, H, D and stay weakly above the axis; the
//! colored variant paints each U and H red or blue.

use std::fmt;
use std::str::FromStr;

use crate::error::{DomainError, ParseError};
use crate::planar::PlanarTree;
use crate::trees::{require_valid, Family, Tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SStep {
    H,
    V,
    D,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchroderPath {
    pub steps: Vec<SStep>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MStep {
    U,
    H,
    D,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath {
    pub steps: Vec<MStep>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    R,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CStep {
    U(Color),
    H(Color),
    D,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredMotzkinPath {
    pub steps: Vec<CStep>,
}

impl SchroderPath {
    pub fn new(steps: Vec<SStep>) -> Self {
        SchroderPath { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

impl MotzkinPath {
    pub fn new(steps: Vec<MStep>) -> Self {
        MotzkinPath { steps }
    }
}

impl ColoredMotzkinPath {
    pub fn new(steps: Vec<CStep>) -> Self {
        ColoredMotzkinPath { steps }
    }

    /// Forgets the colors.
    pub fn uncolored(&self) -> MotzkinPath {
        MotzkinPath::new(
            self.steps
                .iter()
                .map(|s| match s {
                    CStep::U(_) => MStep::U,
                    CStep::H(_) => MStep::H,
                    CStep::D => MStep::D,
                })
                .collect(),
        )
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                SStep::H => "H",
                SStep::V => "V",
                SStep::D => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                MStep::U => "U",
                MStep::H => "H",
                MStep::D => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Display for CStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let color = |c: &Color| match c {
            Color::R => "r",
            Color::B => "b",
        };
        match self {
            CStep::U(c) => write!(f, "U{}", color(c)),
            CStep::H(c) => write!(f, "H{}", color(c)),
            CStep::D => write!(f, "D"),
        }
    }
}

impl fmt::Display for ColoredMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for SchroderPath {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'H' => Ok(SStep::H),
                'V' => Ok(SStep::V),
                'D' => Ok(SStep::D),
                other => Err(ParseError::new(
                    "Schröder path",
                    s,
                    format!("unexpected step {other:?}"),
                )),
            })
            .collect::<Result<_, _>>()
            .map(SchroderPath::new)
    }
}

impl FromStr for MotzkinPath {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'U' => Ok(MStep::U),
                'H' => Ok(MStep::H),
                'D' => Ok(MStep::D),
                other => Err(ParseError::new("Motzkin path", s, format!("unexpected step {other:?}"))),
            })
            .collect::<Result<_, _>>()
            .map(MotzkinPath::new)
    }
}

impl FromStr for ColoredMotzkinPath {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = Vec::new();
        let mut k = 0;
        while k < chars.len() {
            let color = |c: Option<&char>| match c {
                Some('r') | Some('R') => Ok(Color::R),
                Some('b') | Some('B') => Ok(Color::B),
                _ => Err(ParseError::new(
                    "colored Motzkin path",
                    s,
                    "U and H need a color r or b",
                )),
            };
            match chars[k] {
                'U' => {
                    out.push(CStep::U(color(chars.get(k + 1))?));
                    k += 2;
                }
                'H' => {
                    out.push(CStep::H(color(chars.get(k + 1))?));
                    k += 2;
                }
                'D' => {
                    out.push(CStep::D);
                    k += 1;
                }
                other => {
                    return Err(ParseError::new(
                        "colored Motzkin path",
                        s,
                        format!("unexpected step {other:?}"),
                    ))
                }
            }
        }
        Ok(ColoredMotzkinPath::new(out))
    }
}

/// Where and why a step sequence leaves a path class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathViolation {
    pub index: usize,
    pub reason: String,
}

impl fmt::Display for PathViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.index, self.reason)
    }
}

/// Membership report for a Schröder path in S(n, m).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SchroderClass {
    pub n: usize,
    pub m: usize,
    /// No D step lies on the diagonal (S⁺); otherwise S⁰.
    pub plus: bool,
    /// Every D is followed by H unless it is the last step (R).
    pub restricted: bool,
}

impl fmt::Display for SchroderClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.plus { "+" } else { "0" };
        let r = if self.restricted { "R" } else { "S" };
        write!(f, "{r}{sign}({}, {})", self.n, self.m)
    }
}

pub fn classify_schroder(p: &SchroderPath) -> Result<SchroderClass, PathViolation> {
    let (mut x, mut y) = (0usize, 0usize);
    let mut plus = true;
    let mut restricted = true;
    let mut h = 0;
    for (idx, s) in p.steps.iter().enumerate() {
        match s {
            SStep::H => {
                x += 1;
                h += 1;
            }
            SStep::V => y += 1,
            SStep::D => {
                if x == y {
                    plus = false;
                }
                if idx + 1 < p.steps.len() && p.steps[idx + 1] != SStep::H {
                    restricted = false;
                }
                x += 1;
                y += 1;
            }
        }
        if y > x {
            return Err(PathViolation {
                index: idx,
                reason: "rises above the diagonal".into(),
            });
        }
    }
    if x != y {
        return Err(PathViolation {
            index: p.steps.len(),
            reason: format!("ends at ({x}, {y}), off the diagonal"),
        });
    }
    Ok(SchroderClass {
        n: x,
        m: h,
        plus,
        restricted,
    })
}

/// Membership report for a Motzkin path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MotzkinClass {
    pub length: usize,
    /// Every H is followed by U unless it is the last step (RM).
    pub restricted: bool,
}

impl fmt::Display for MotzkinClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = if self.restricted { "RM" } else { "M" };
        write!(f, "{r}({})", self.length)
    }
}

pub fn classify_motzkin(p: &MotzkinPath) -> Result<MotzkinClass, PathViolation> {
    let mut height = 0i64;
    let mut restricted = true;
    for (idx, s) in p.steps.iter().enumerate() {
        match s {
            MStep::U => height += 1,
            MStep::D => height -= 1,
            MStep::H => {
                if idx + 1 < p.steps.len() && p.steps[idx + 1] != MStep::U {
                    restricted = false;
                }
            }
        }
        if height < 0 {
            return Err(PathViolation {
                index: idx,
                reason: "goes below the axis".into(),
            });
        }
    }
    if height != 0 {
        return Err(PathViolation {
            index: p.steps.len(),
            reason: format!("ends at height {height}"),
        });
    }
    Ok(MotzkinClass {
        length: p.steps.len(),
        restricted,
    })
}

/// Checks that a colored path is a Motzkin path; returns its length.
pub fn classify_colored(p: &ColoredMotzkinPath) -> Result<usize, PathViolation> {
    classify_motzkin(&p.uncolored()).map(|c| c.length)
}

fn domain(msg: impl Into<String>) -> DomainError {
    DomainError::PathClass(msg.into())
}

fn require_schroder(p: &SchroderPath) -> Result<SchroderClass, DomainError> {
    classify_schroder(p).map_err(|v| domain(v.to_string()))
}

/// f⁺ on T⁺_{∞,2}: each angle label j becomes j − 1 extra interior leaves.
pub fn strip_angles(t: &Tree) -> Result<PlanarTree, DomainError> {
    require_valid(Family::INF_TWO, t)?;
    if t.root_label() == Some(0) {
        return Err(domain("strip_angles needs a positive root label; apply beta first"));
    }
    Ok(strip_unchecked(t))
}

/// f⁰ on T⁰_{∞,2}: the same substitution with the root counted as a node.
pub fn strip_angles_zero(t: &Tree) -> Result<PlanarTree, DomainError> {
    require_valid(Family::INF_TWO, t)?;
    if t.root_label() != Some(0) {
        return Err(domain("strip_angles_zero needs root label 0"));
    }
    Ok(strip_unchecked(t))
}

fn strip_unchecked(t: &Tree) -> PlanarTree {
    match t.as_node() {
        None => PlanarTree::Leaf,
        Some(n) => {
            let mut children = Vec::new();
            for (k, c) in n.children().iter().enumerate() {
                if k > 0 {
                    let extra = n.angles()[k - 1] - 1;
                    children.extend(std::iter::repeat_n(PlanarTree::Leaf, extra as usize));
                }
                children.push(strip_unchecked(c));
            }
            PlanarTree::Node(children)
        }
    }
}

/// Inverse of the strip maps: runs of interior leaves become angle labels,
/// non-root nodes get label 1 and the root gets `root_label`.
pub fn restore_angles(p: &PlanarTree, root_label: u32) -> Result<Tree, DomainError> {
    if p.is_leaf() || !p.is_valid() {
        return Err(domain("restore_angles needs a planar tree with at least one node"));
    }
    Ok(restore(p, root_label))
}

fn restore(p: &PlanarTree, label: u32) -> Tree {
    let children = p.children();
    if children.is_empty() {
        return Tree::Leaf;
    }
    let k = children.len();
    let mut kept = vec![restore(&children[0], 1)];
    let mut angles = Vec::new();
    let mut run = 1;
    for (idx, c) in children.iter().enumerate().skip(1) {
        if c.is_leaf() && idx + 1 < k {
            run += 1;
            continue;
        }
        angles.push(run);
        kept.push(restore(c, 1));
        run = 1;
    }
    Tree::node_unchecked(label, kept, angles)
}

/// Preorder encoding: H into the first child, D before each middle child, V
/// before the last child, recursively.
pub fn tree_to_path(t: &PlanarTree) -> Result<SchroderPath, DomainError> {
    if t.is_leaf() || !t.is_valid() {
        return Err(domain("tree_to_path needs a planar tree with at least one node"));
    }
    let mut out = Vec::new();
    emit(t, &mut out);
    Ok(SchroderPath::new(out))
}

fn emit(t: &PlanarTree, out: &mut Vec<SStep>) {
    let c = t.children();
    if c.is_empty() {
        return;
    }
    out.push(SStep::H);
    emit(&c[0], out);
    for mid in &c[1..c.len() - 1] {
        out.push(SStep::D);
        emit(mid, out);
    }
    out.push(SStep::V);
    emit(&c[c.len() - 1], out);
}

/// Inverse of [`tree_to_path`] on S⁺: each step attaches a new child to
/// the nearest open ancestor.
pub fn path_to_tree(p: &SchroderPath) -> Result<PlanarTree, DomainError> {
    let class = require_schroder(p)?;
    if !class.plus || p.is_empty() {
        return Err(domain("path_to_tree needs a nonempty path in S+"));
    }
    struct Slot {
        children: Vec<usize>,
        parent: Option<usize>,
        available: bool,
    }
    let mut nodes = vec![Slot {
        children: vec![],
        parent: None,
        available: false,
    }];
    let mut current = 0;
    for (idx, s) in p.steps.iter().enumerate() {
        let attach = match s {
            SStep::H => {
                nodes[current].available = true;
                current
            }
            SStep::D | SStep::V => {
                let mut a = Some(current);
                while let Some(k) = a {
                    if nodes[k].available {
                        break;
                    }
                    a = nodes[k].parent;
                }
                let a = a.ok_or_else(|| domain(format!("step {idx} has no open node")))?;
                if *s == SStep::V {
                    nodes[a].available = false;
                }
                a
            }
        };
        nodes.push(Slot {
            children: vec![],
            parent: Some(attach),
            available: false,
        });
        let c = nodes.len() - 1;
        nodes[attach].children.push(c);
        current = c;
    }
    fn build(nodes: &[Slot], k: usize) -> PlanarTree {
        if nodes[k].children.is_empty() {
            PlanarTree::Leaf
        } else {
            PlanarTree::Node(nodes[k].children.iter().map(|&c| build(nodes, c)).collect())
        }
    }
    let t = build(&nodes, 0);
    if !t.is_valid() || nodes.iter().any(|n| n.available) {
        return Err(domain("path does not encode a planar tree"));
    }
    Ok(t)
}

/// The bijection T: S⁺(n, m+1) → S⁰(n, m).
///
/// Drop the first and last steps to get the core. An underdiagonal core
/// gets a D appended. Otherwise the core splits as A V B H C, where V is
/// the first step above the diagonal and H the last step back onto it,
/// and maps to A D H C V B.
pub fn t_map(p: &SchroderPath) -> Result<SchroderPath, DomainError> {
    let class = require_schroder(p)?;
    if !class.plus || class.m == 0 {
        return Err(domain("t_map needs a path in S+(n, m+1)"));
    }
    let core = &p.steps[1..p.len() - 1];
    // Diagonal offset y − x in the core frame, before each step.
    let mut offset = 0i64;
    let mut first_up = None;
    let mut last_back = None;
    for (idx, s) in core.iter().enumerate() {
        if offset == 1 {
            last_back = Some(idx);
        }
        match s {
            SStep::H => offset -= 1,
            SStep::V => {
                if offset == 0 && first_up.is_none() {
                    first_up = Some(idx);
                }
                offset += 1;
            }
            SStep::D => {}
        }
    }
    let mut out = Vec::with_capacity(core.len() + 1);
    match (first_up, last_back) {
        (None, _) => {
            out.extend_from_slice(core);
            out.push(SStep::D);
        }
        (Some(i), Some(j)) => {
            out.extend_from_slice(&core[..i]);
            out.extend([SStep::D, SStep::H]);
            out.extend_from_slice(&core[j + 1..]);
            out.push(SStep::V);
            out.extend_from_slice(&core[i + 1..j]);
        }
        (Some(_), None) => return Err(domain("core leaves the diagonal without returning")),
    }
    Ok(SchroderPath::new(out))
}

/// Inverse of [`t_map`]: S⁰(n, m) → S⁺(n, m+1).
pub fn t_map_inverse(q: &SchroderPath) -> Result<SchroderPath, DomainError> {
    let class = require_schroder(q)?;
    if class.plus {
        return Err(domain("t_map_inverse needs a path in S0(n, m)"));
    }
    let s = &q.steps;
    let mut core = Vec::with_capacity(s.len() + 1);
    if s.last() == Some(&SStep::D) {
        core.extend_from_slice(&s[..s.len() - 1]);
    } else {
        // Offset x − y before each step.
        let mut offsets = Vec::with_capacity(s.len() + 1);
        let mut d = 0i64;
        for st in s {
            offsets.push(d);
            match st {
                SStep::H => d += 1,
                SStep::V => d -= 1,
                SStep::D => {}
            }
        }
        offsets.push(d);
        let i = (0..s.len())
            .rev()
            .find(|&k| s[k] == SStep::D && offsets[k] == 0)
            .ok_or_else(|| domain("no D on the diagonal"))?;
        if s.get(i + 1) != Some(&SStep::H) {
            return Err(domain("last diagonal D is not followed by H"));
        }
        let j = (i + 2..s.len())
            .find(|&k| s[k] == SStep::V && offsets[k + 1] == 0)
            .ok_or_else(|| domain("excursion after the last diagonal D does not return"))?;
        core.extend_from_slice(&s[..i]);
        core.push(SStep::V);
        core.extend_from_slice(&s[j + 1..]);
        core.push(SStep::H);
        core.extend_from_slice(&s[i + 2..j]);
    }
    let mut out = Vec::with_capacity(core.len() + 2);
    out.push(SStep::H);
    out.extend(core);
    out.push(SStep::V);
    Ok(SchroderPath::new(out))
}

/// φ⁺ = g⁺ ∘ f⁺ on T⁺_{∞,2}.
pub fn phi_plus(t: &Tree) -> Result<SchroderPath, DomainError> {
    tree_to_path(&strip_angles(t)?)
}

/// Inverse of [`phi_plus`].
pub fn phi_plus_inverse(p: &SchroderPath) -> Result<Tree, DomainError> {
    restore_angles(&path_to_tree(p)?, 1)
}

/// φ⁰ = T ∘ g⁺ ∘ f⁰ on T⁰_{∞,2}.
pub fn phi_zero(t: &Tree) -> Result<SchroderPath, DomainError> {
    t_map(&tree_to_path(&strip_angles_zero(t)?)?)
}

/// Inverse of [`phi_zero`].
pub fn phi_zero_inverse(q: &SchroderPath) -> Result<Tree, DomainError> {
    restore_angles(&path_to_tree(&t_map_inverse(q)?)?, 0)
}

/// Heights of a colored path after each step.
fn levels(steps: &[CStep]) -> Vec<i64> {
    let mut h = 0;
    steps
        .iter()
        .map(|s| {
            match s {
                CStep::U(_) => h += 1,
                CStep::D => h -= 1,
                CStep::H(_) => {}
            }
            h
        })
        .collect()
}

/// Rewrites the core of a path in R⁺(n, m) into a colored Motzkin path of
/// length n − 1, pattern by pattern.
///
/// | core prefix | output |
/// |-------------|--------|
/// | H V | Hr |
/// | H D H | Ub Hr |
/// | H H | Ur |
/// | D H V | Ub D |
/// | D H D H | Ub Ub D |
/// | D H H | Ub Hb |
/// | V V | D |
/// | V D H | D, plus a Ub inserted before the last up step reaching the current level |
/// | V H | Hb |
pub fn schroder_to_colored(p: &SchroderPath) -> Result<ColoredMotzkinPath, DomainError> {
    use SStep::{D, H, V};
    let class = require_schroder(p)?;
    if !class.plus || !class.restricted || p.is_empty() {
        return Err(domain("colored rewriting needs a nonempty path in R+"));
    }
    let core = &p.steps[1..p.len() - 1];
    let mut out: Vec<CStep> = Vec::new();
    let (ur, ub, hr, hb) = (
        CStep::U(Color::R),
        CStep::U(Color::B),
        CStep::H(Color::R),
        CStep::H(Color::B),
    );
    let mut i = 0;
    while i < core.len() {
        let rest = &core[i..];
        let (emit, used): (&[CStep], usize) = match rest {
            [H, V, ..] => (&[hr], 2),
            [H, D, H, ..] => (&[ub, hr], 3),
            [H, H, ..] => (&[ur], 2),
            [D, H, V, ..] => (&[ub, CStep::D], 3),
            [D, H, D, H, ..] => (&[ub, ub, CStep::D], 4),
            [D, H, H, ..] => (&[ub, hb], 3),
            [V, V, ..] => (&[CStep::D], 2),
            [V, D, H, ..] => {
                let lv = levels(&out);
                let here = lv.last().copied().unwrap_or(0);
                let q = (0..out.len())
                    .rev()
                    .find(|&k| matches!(out[k], CStep::U(_)) && lv[k] == here)
                    .ok_or_else(|| domain(format!("no up step reaches level {here} before step {i}")))?;
                out.insert(q, ub);
                (&[CStep::D], 3)
            }
            [V, H, ..] => (&[hb], 2),
            _ => return Err(domain(format!("no rewriting pattern matches at core step {i}"))),
        };
        out.extend_from_slice(emit);
        i += used;
    }
    Ok(ColoredMotzkinPath::new(out))
}

/// Inverse of [`schroder_to_colored`].
///
/// A blue up step directly followed by an up step (other than the `Ub Ub D`
/// block) is an inserted step; the down step matching its successor came
/// from `V D H`. Removing inserted steps leaves a plain concatenation of
/// the output blocks.
pub fn colored_to_schroder(c: &ColoredMotzkinPath) -> Result<SchroderPath, DomainError> {
    use SStep::{D, H, V};
    classify_colored(c).map_err(|v| domain(v.to_string()))?;
    let s = &c.steps;
    let ub = CStep::U(Color::B);
    let n = s.len();
    let mut inserted = vec![false; n];
    for k in 0..n {
        if s[k] == ub && matches!(s.get(k + 1), Some(CStep::U(_))) {
            let block5 = s.get(k + 1) == Some(&ub) && s.get(k + 2) == Some(&CStep::D);
            inserted[k] = !block5;
        }
    }
    // Match each up step with its down step.
    let mut partner = vec![usize::MAX; n];
    let mut stack = Vec::new();
    for (k, st) in s.iter().enumerate() {
        match st {
            CStep::U(_) => stack.push(k),
            CStep::D => {
                let u = stack.pop().ok_or_else(|| domain("unbalanced path"))?;
                partner[u] = k;
            }
            CStep::H(_) => {}
        }
    }
    let mut from_vdh = vec![false; n];
    for k in 0..n {
        if inserted[k] {
            from_vdh[partner[k + 1]] = true;
        }
    }
    let kept: Vec<usize> = (0..n).filter(|&k| !inserted[k]).collect();
    let mut core = Vec::new();
    let mut i = 0;
    while i < kept.len() {
        let at = |d: usize| kept.get(i + d).map(|&k| s[k]);
        let (steps, used): (&[SStep], usize) = match (at(0), at(1), at(2)) {
            (Some(CStep::H(Color::R)), _, _) => (&[H, V], 1),
            (Some(CStep::H(Color::B)), _, _) => (&[V, H], 1),
            (Some(CStep::U(Color::R)), _, _) => (&[H, H], 1),
            (Some(CStep::D), _, _) => {
                if from_vdh[kept[i]] {
                    (&[V, D, H], 1)
                } else {
                    (&[V, V], 1)
                }
            }
            (Some(CStep::U(Color::B)), Some(CStep::H(Color::R)), _) => (&[H, D, H], 2),
            (Some(CStep::U(Color::B)), Some(CStep::H(Color::B)), _) => (&[D, H, H], 2),
            (Some(CStep::U(Color::B)), Some(CStep::D), _) => (&[D, H, V], 2),
            (Some(CStep::U(Color::B)), Some(CStep::U(Color::B)), Some(CStep::D)) => (&[D, H, D, H], 3),
            _ => return Err(domain(format!("colored path is not decodable at step {}", kept[i]))),
        };
        core.extend_from_slice(steps);
        i += used;
    }
    let mut out = vec![H];
    out.extend(core);
    out.push(V);
    let p = SchroderPath::new(out);
    if schroder_to_colored(&p).as_ref() != Ok(c) {
        return Err(domain("colored path is outside the image of the rewriting"));
    }
    Ok(p)
}

/// ψ⁺ followed by the colored rewriting, on T⁺_{2,2}.
pub fn to_colored_motzkin(t: &Tree) -> Result<ColoredMotzkinPath, DomainError> {
    require_valid(Family::TWO_TWO, t)?;
    if t.root_label() != Some(1) {
        return Err(domain("to_colored_motzkin needs root label 1; apply beta first"));
    }
    schroder_to_colored(&phi_plus(t)?)
}

/// Inverse of [`to_colored_motzkin`].
pub fn from_colored_motzkin(c: &ColoredMotzkinPath) -> Result<Tree, DomainError> {
    let t = phi_plus_inverse(&colored_to_schroder(c)?)?;
    require_valid(Family::TWO_TWO, &t)?;
    Ok(t)
}

/// H ↦ U, V ↦ D, D ↦ H.
pub fn rotate_to_motzkin(p: &SchroderPath) -> Result<MotzkinPath, DomainError> {
    require_schroder(p)?;
    Ok(MotzkinPath::new(
        p.steps
            .iter()
            .map(|s| match s {
                SStep::H => MStep::U,
                SStep::V => MStep::D,
                SStep::D => MStep::H,
            })
            .collect(),
    ))
}

/// U ↦ H, D ↦ V, H ↦ D.
pub fn rotate_from_motzkin(p: &MotzkinPath) -> Result<SchroderPath, DomainError> {
    classify_motzkin(p).map_err(|v| domain(v.to_string()))?;
    Ok(SchroderPath::new(
        p.steps
            .iter()
            .map(|s| match s {
                MStep::U => SStep::H,
                MStep::D => SStep::V,
                MStep::H => SStep::D,
            })
            .collect(),
    ))
}

/// All Schröder paths from (0,0) to (n,n).
pub fn all_schroder(n: usize) -> Vec<SchroderPath> {
    fn go(n: usize, x: usize, y: usize, cur: &mut Vec<SStep>, out: &mut Vec<SchroderPath>) {
        if x == n && y == n {
            out.push(SchroderPath::new(cur.clone()));
            return;
        }
        if x < n {
            cur.push(SStep::H);
            go(n, x + 1, y, cur, out);
            cur.pop();
        }
        if y < x {
            cur.push(SStep::V);
            go(n, x, y + 1, cur, out);
            cur.pop();
        }
        if x < n && y < n {
            cur.push(SStep::D);
            go(n, x + 1, y + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// All Motzkin paths of the given length.
pub fn all_motzkin(length: usize) -> Vec<MotzkinPath> {
    all_colored(length, false, false)
        .into_iter()
        .map(|c| c.uncolored())
        .collect()
}

/// All colored Motzkin paths of the given length; `color_h` and `color_u`
/// select which step kinds carry a color (uncolored steps are red).
pub fn all_colored(length: usize, color_h: bool, color_u: bool) -> Vec<ColoredMotzkinPath> {
    fn go(
        left: usize,
        h: usize,
        palette: (&[Color], &[Color]),
        cur: &mut Vec<CStep>,
        out: &mut Vec<ColoredMotzkinPath>,
    ) {
        if left == 0 {
            if h == 0 {
                out.push(ColoredMotzkinPath::new(cur.clone()));
            }
            return;
        }
        if h < left - 1 {
            for &c in palette.1 {
                cur.push(CStep::U(c));
                go(left - 1, h + 1, palette, cur, out);
                cur.pop();
            }
        }
        if h < left {
            for &c in palette.0 {
                cur.push(CStep::H(c));
                go(left - 1, h, palette, cur, out);
                cur.pop();
            }
        }
        if h > 0 {
            cur.push(CStep::D);
            go(left - 1, h - 1, palette, cur, out);
            cur.pop();
        }
    }
    const BOTH: &[Color] = &[Color::R, Color::B];
    const RED: &[Color] = &[Color::R];
    let palette = (if color_h { BOTH } else { RED }, if color_u { BOTH } else { RED });
    let mut out = Vec::new();
    go(length, 0, palette, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> SchroderPath {
        s.parse().unwrap()
    }

    fn pt(s: &str) -> PlanarTree {
        s.parse().unwrap()
    }

    #[test]
    fn algorithm_one_examples() {
        assert_eq!(tree_to_path(&pt("(. (..) (..))")).unwrap(), sp("HDHVVHV"));
        assert_eq!(tree_to_path(&PlanarTree::y()).unwrap(), sp("HV"));
        assert_eq!(tree_to_path(&pt("((..) .)")).unwrap(), sp("HHVV"));
        assert!(tree_to_path(&PlanarTree::Leaf).is_err());
    }

    #[test]
    fn algorithm_two_examples() {
        assert_eq!(path_to_tree(&sp("HV")).unwrap(), PlanarTree::y());
        assert_eq!(path_to_tree(&sp("HDHVVHV")).unwrap(), pt("(. (..) (..))"));
        assert!(path_to_tree(&sp("DHV")).is_err());
        assert!(path_to_tree(&sp("VH")).is_err());
    }

    #[test]
    fn strip_examples() {
        let t: Tree = "1(. 1 1(. 3 .) 2 .)".parse().unwrap();
        let p = strip_angles(&t).unwrap();
        assert_eq!(p, pt("(. (....) . .)"));
        assert_eq!(restore_angles(&p, 1).unwrap(), t);
        assert_eq!(strip_angles(&"1(. 1 .)".parse().unwrap()).unwrap(), PlanarTree::y());
        assert!(strip_angles(&Tree::generator()).is_err());
        let t: Tree = "1(. 1 1(. 1 .) 1 1(. 1 .))".parse().unwrap();
        assert_eq!(phi_plus(&t).unwrap(), sp("HDHVVHV"));
    }

    #[test]
    fn t_map_examples() {
        assert_eq!(t_map(&sp("HV")).unwrap(), sp("D"));
        assert_eq!(t_map(&sp("HHVV")).unwrap(), sp("HVD"));
        // Cores that cross the diagonal.
        assert_eq!(t_map(&sp("HVHDV")).unwrap(), sp("DHDV"));
        assert_eq!(t_map(&sp("HDHVVHV")).unwrap(), sp("DHVDHV"));
        for p in ["HV", "HHVV", "HVHDV", "HDHVVHV"] {
            assert_eq!(t_map_inverse(&t_map(&sp(p)).unwrap()).unwrap(), sp(p));
        }
        assert!(t_map(&sp("D")).is_err());
        assert!(t_map_inverse(&sp("HV")).is_err());
    }

    #[test]
    fn classification() {
        let c = classify_schroder(&sp("HDHVVHV")).unwrap();
        assert_eq!((c.n, c.m, c.plus, c.restricted), (4, 3, true, true));
        let c = classify_schroder(&sp("HVD")).unwrap();
        assert_eq!((c.n, c.m, c.plus, c.restricted), (2, 1, false, true));
        assert_eq!(classify_schroder(&sp("VH")).unwrap_err().index, 0);
        let m: MotzkinPath = "UUD".parse().unwrap();
        assert!(classify_motzkin(&m).is_err());
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotate_to_motzkin(&sp("HV")).unwrap().to_string(), "UD");
        assert_eq!(rotate_to_motzkin(&sp("HDHVVHV")).unwrap().to_string(), "UHUDDUD");
    }

    #[test]
    fn colored_examples() {
        let t: Tree = "1(. 1 .)".parse().unwrap();
        assert!(to_colored_motzkin(&t).unwrap().steps.is_empty());
        let a: Tree = "1(1(. 1 .) 1 .)".parse().unwrap();
        let b: Tree = "1(. 1 1(. 1 .))".parse().unwrap();
        assert_eq!(to_colored_motzkin(&a).unwrap().to_string(), "Hr");
        assert_eq!(to_colored_motzkin(&b).unwrap().to_string(), "Hb");
        let c: ColoredMotzkinPath = "Ub Ur D D".parse().unwrap();
        assert_eq!(c.to_string(), "Ub Ur D D");
    }
}
