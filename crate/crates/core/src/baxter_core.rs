//! Grafting, the Baxter map β, the products ⊙ and ∗, and the quotient
//! morphisms between the four tree algebras.
//!
//! Products are defined on basis trees by a mutual recursion and extended
//! bilinearly. A [`Baxter`] value owns the memo tables for one family.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::error::DomainError;
use crate::lincomb::LinComb;
use crate::scalars::LambdaPoly;
use crate::trees::{require_valid, validate_augmented, Exponent, Family, Tree};

/// An element of the algebra B_{i,j} (or of its augmentation when it holds
/// the leaf).
pub type Element = LinComb<Tree>;

/// Result of de-grafting a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    /// Root label 0: the subtrees below the root and the angles between them.
    Grafted { subtrees: Vec<Tree>, angles: Vec<u32> },
    /// Positive root label: the tree is its own one-element decomposition.
    Positive(Tree),
}

/// Grafts subtrees on a fresh root labeled 0, then removes interior leaves
/// by merging the two angles around each one.
pub fn graft(f: Family, subtrees: &[Tree], angles: &[u32]) -> Result<Tree, DomainError> {
    if subtrees.is_empty() || angles.len() + 1 != subtrees.len() {
        return Err(DomainError::AngleCount {
            expected: subtrees.len().saturating_sub(1),
            got: angles.len(),
        });
    }
    for (index, t) in subtrees.iter().enumerate() {
        if t.root_label() == Some(0) {
            return Err(DomainError::ZeroRootSubtree { index });
        }
        if !t.is_leaf() {
            require_valid(f, t)?;
        }
    }
    if let Some(&a) = angles.iter().find(|&&a| a == 0 || f.max_angle().is_some_and(|b| a > b)) {
        return Err(DomainError::Other(format!(
            "angle label {a} is not admissible in family {f}"
        )));
    }
    Ok(graft_unchecked(f, subtrees.iter().cloned(), angles.iter().copied()))
}

/// Graft without argument checks; inputs must already be admissible.
pub(crate) fn graft_unchecked(
    f: Family,
    subtrees: impl IntoIterator<Item = Tree>,
    angles: impl IntoIterator<Item = u32>,
) -> Tree {
    let subtrees: Vec<Tree> = subtrees.into_iter().collect();
    let angles: Vec<u32> = angles.into_iter().collect();
    if subtrees.len() == 1 {
        return subtrees.into_iter().next().unwrap_or(Tree::Leaf);
    }
    let k = subtrees.len();
    let mut children = Vec::with_capacity(k);
    let mut kept_angles = Vec::with_capacity(k - 1);
    let mut pending: Option<u32> = None;
    for (idx, t) in subtrees.into_iter().enumerate() {
        if idx > 0 {
            let a = angles[idx - 1];
            pending = Some(pending.map_or(a, |p| f.merge_angles(p, a)));
        }
        if t.is_leaf() && idx > 0 && idx + 1 < k {
            continue;
        }
        if let Some(a) = pending.take() {
            kept_angles.push(a);
        }
        children.push(t);
    }
    Tree::node_unchecked(0, children, kept_angles)
}

/// Splits a root-0 tree at its root; positive-root trees are returned whole.
pub fn degraft(f: Family, t: &Tree) -> Result<Decomposition, DomainError> {
    require_valid(f, t)?;
    Ok(degraft_unchecked(t))
}

fn degraft_unchecked(t: &Tree) -> Decomposition {
    match t.as_node() {
        Some(n) if n.label() == 0 => Decomposition::Grafted {
            subtrees: n.children().to_vec(),
            angles: n.angles().to_vec(),
        },
        _ => Decomposition::Positive(t.clone()),
    }
}

/// β on a single tree of the augmented algebra.
pub fn beta_tree(f: Family, t: &Tree) -> Element {
    match (t.root_label(), f.j) {
        (None, _) => Element::basis(Tree::Leaf),
        (Some(a), Exponent::Inf) => Element::basis(t.with_root_label(a + 1)),
        (Some(a), Exponent::Two) => Element::term(t.with_root_label(1), LambdaPoly::neg_lambda().pow(a)),
    }
}

/// β extended linearly.
pub fn beta(f: Family, v: &Element) -> Element {
    v.map_linear(|t| beta_tree(f, t))
}

/// The overline operation: decrements the root label; the leaf is fixed.
pub fn lower_bar(t: &Tree) -> Result<Tree, DomainError> {
    match t.root_label() {
        None => Ok(Tree::Leaf),
        Some(0) => Err(DomainError::ZeroRootBar),
        Some(a) => Ok(t.with_root_label(a - 1)),
    }
}

/// Subtrees and angles of H(t), with a positive-root tree as the 1-tuple (t).
fn parts(t: &Tree) -> (Vec<Tree>, Vec<u32>) {
    match degraft_unchecked(t) {
        Decomposition::Grafted { subtrees, angles } => (subtrees, angles),
        Decomposition::Positive(t) => (vec![t], vec![]),
    }
}

/// Product engine for one family with per-instance memo tables.
pub struct Baxter {
    family: Family,
    circle_memo: RefCell<HashMap<(Tree, Tree), Element>>,
    star_memo: RefCell<HashMap<(Tree, Tree), Element>>,
}

impl Baxter {
    pub fn new(family: Family) -> Self {
        Baxter {
            family,
            circle_memo: RefCell::new(HashMap::new()),
            star_memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    fn check(&self, v: &Element, augmented: bool) -> Result<(), DomainError> {
        for t in v.keys() {
            if t.is_leaf() && !augmented {
                return Err(DomainError::AugmentedInput);
            }
            validate_augmented(self.family, t).map_err(|r| DomainError::InvalidTree {
                family: self.family.to_string(),
                report: r.to_string(),
            })?;
        }
        Ok(())
    }

    /// β in this family.
    pub fn beta(&self, v: &Element) -> Element {
        beta(self.family, v)
    }

    /// `a ⊙ b` on non-augmented elements.
    pub fn circle(&self, a: &Element, b: &Element) -> Result<Element, DomainError> {
        self.check(a, false)?;
        self.check(b, false)?;
        Ok(self.circle_lin(a, b))
    }

    /// `a ∗ b`; the leaf acts as a two-sided unit.
    pub fn star(&self, a: &Element, b: &Element) -> Result<Element, DomainError> {
        self.check(a, true)?;
        self.check(b, true)?;
        Ok(a.bilinear(b, |u, v| self.star_trees(u, v)))
    }

    pub(crate) fn circle_lin(&self, a: &Element, b: &Element) -> Element {
        a.bilinear(b, |t, s| self.circle_trees(t, s))
    }

    /// `t ⊙ s` on basis trees (both non-leaf).
    pub fn circle_trees(&self, t: &Tree, s: &Tree) -> Element {
        let key = (t.clone(), s.clone());
        if let Some(v) = self.circle_memo.borrow().get(&key) {
            return v.clone();
        }
        let (mut left, left_angles) = parts(t);
        let (right, right_angles) = parts(s);
        let last = left.pop().unwrap_or(Tree::Leaf);
        let last = lower_bar(&last).unwrap_or(Tree::Leaf);
        let first = lower_bar(&right[0]).unwrap_or(Tree::Leaf);
        let middle = beta(self.family, &self.star_trees(&last, &first));
        let mut out = Element::zero();
        for (u, c) in &middle {
            let subtrees = left
                .iter()
                .cloned()
                .chain(std::iter::once(u.clone()))
                .chain(right[1..].iter().cloned());
            let angles = left_angles.iter().chain(&right_angles).copied();
            out.add_term(graft_unchecked(self.family, subtrees, angles), c.clone());
        }
        self.circle_memo.borrow_mut().insert(key, out.clone());
        out
    }

    /// `u ∗ v` on trees of the augmented algebra.
    pub fn star_trees(&self, u: &Tree, v: &Tree) -> Element {
        if u.is_leaf() {
            return Element::basis(v.clone());
        }
        if v.is_leaf() {
            return Element::basis(u.clone());
        }
        let key = (u.clone(), v.clone());
        if let Some(r) = self.star_memo.borrow().get(&key) {
            return r.clone();
        }
        let bu = beta_tree(self.family, u);
        let bv = beta_tree(self.family, v);
        let ue = Element::basis(u.clone());
        let ve = Element::basis(v.clone());
        let mut out = self.circle_lin(&bu, &ve);
        out.add_scaled(&self.circle_lin(&ue, &bv), &LambdaPoly::one());
        out.add_scaled(&self.circle_trees(u, v), &LambdaPoly::lambda());
        self.star_memo.borrow_mut().insert(key, out.clone());
        out
    }

    /// The i-fold ⊙-power of the generator, i ≥ 1.
    pub fn generator_power(&self, i: u32) -> Element {
        let g = Element::basis(Tree::generator());
        let mut acc = g.clone();
        for _ in 1..i {
            acc = self.circle_lin(&acc, &g);
        }
        acc
    }

    /// Rebuilds `t` as β^a(t₁ ⊙ Y^{i₁} ⊙ t₂ ⊙ … ⊙ t_n) with leaf ends dropped
    /// and reports whether the result is exactly `1·t`.
    pub fn decompose_check(&self, t: &Tree) -> bool {
        let Some(node) = t.as_node() else {
            return false;
        };
        let mut acc: Option<Element> = None;
        let push = |acc: &mut Option<Element>, x: Element| {
            *acc = Some(match acc.take() {
                None => x,
                Some(a) => self.circle_lin(&a, &x),
            });
        };
        for (k, child) in node.children().iter().enumerate() {
            if !child.is_leaf() {
                push(&mut acc, Element::basis(child.clone()));
            }
            if let Some(&i) = node.angles().get(k) {
                let y = match self.family.i {
                    Exponent::Inf => self.generator_power(i),
                    Exponent::Two => Element::basis(Tree::corolla(0, i)),
                };
                push(&mut acc, y);
            }
        }
        let mut v = acc.unwrap_or_default();
        for _ in 0..node.label() {
            v = self.beta(&v);
        }
        v.as_basis() == Some(t)
    }
}

/// `a ⊙ b` with a fresh engine.
pub fn product_circle(f: Family, a: &Element, b: &Element) -> Result<Element, DomainError> {
    Baxter::new(f).circle(a, b)
}

/// `a ∗ b` with a fresh engine.
pub fn product_star(f: Family, a: &Element, b: &Element) -> Result<Element, DomainError> {
    Baxter::new(f).star(a, b)
}

/// [`Baxter::decompose_check`] with a fresh engine, after validating `t`.
pub fn canonical_decompose_check(f: Family, t: &Tree) -> bool {
    require_valid(f, t).is_ok() && Baxter::new(f).decompose_check(t)
}

/// The quotient morphism φ from family `from` to family `to` on one tree.
pub fn phi_tree(from: Family, to: Family, t: &Tree) -> Element {
    let mut tree = t.clone();
    let mut coeff = LambdaPoly::one();
    if from.j == Exponent::Inf && to.j == Exponent::Two {
        let d = tree.bidegree().m as usize - tree.positive_nodes();
        coeff = LambdaPoly::neg_lambda().pow(d as u32);
        tree = tree.relabel(&|_, l| l.min(1), &|a| a);
    }
    if from.i == Exponent::Inf && to.i == Exponent::Two {
        tree = tree.relabel(&|_, l| l, &|_| 1);
    }
    Element::term(tree, coeff)
}

/// φ extended linearly; requires `to` ≤ `from` coordinatewise.
pub fn morphism_phi(from: Family, to: Family, v: &Element) -> Result<Element, DomainError> {
    if !from.dominates(to) {
        return Err(DomainError::NotComparable {
            from: from.to_string(),
            to: to.to_string(),
        });
    }
    for t in v.keys() {
        validate_augmented(from, t).map_err(|r| DomainError::InvalidTree {
            family: from.to_string(),
            report: r.to_string(),
        })?;
    }
    Ok(v.map_linear(|t| phi_tree(from, to, t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    fn e(s: &str) -> Element {
        s.parse().unwrap()
    }

    #[test]
    fn graft_examples() {
        let g = graft(Family::INF_INF, &[t("1(. 1 .)"), Tree::Leaf, Tree::Leaf], &[2, 1]).unwrap();
        assert_eq!(g.to_string(), "0(1(. 1 .) 3 .)");
        assert_eq!(graft(Family::INF_INF, &[t("2(. 1 .)")], &[]).unwrap(), t("2(. 1 .)"));
        let g = graft(Family::TWO_TWO, &[Tree::Leaf, Tree::Leaf, Tree::Leaf], &[1, 1]).unwrap();
        assert_eq!(g, t("0(. 1 .)"));
        assert!(graft(Family::INF_INF, &[Tree::Leaf, Tree::Leaf], &[]).is_err());
        assert!(graft(Family::INF_INF, &[t("0(. 1 .)"), Tree::Leaf], &[1]).is_err());
    }

    #[test]
    fn degraft_examples() {
        let d = degraft(Family::INF_INF, &t("0(1(. 1 .) 3 .)")).unwrap();
        assert_eq!(
            d,
            Decomposition::Grafted {
                subtrees: vec![t("1(. 1 .)"), Tree::Leaf],
                angles: vec![3]
            }
        );
        let p = t("1(1(. 1 .) 3 .)");
        assert_eq!(degraft(Family::INF_INF, &p).unwrap(), Decomposition::Positive(p));
    }

    #[test]
    fn beta_and_bar() {
        assert_eq!(beta_tree(Family::INF_INF, &t("0(. 3 .)")), e("1(. 3 .)"));
        assert_eq!(beta_tree(Family::TWO_TWO, &t("1(. 1 .)")), e("-l*1(. 1 .)"));
        assert_eq!(beta_tree(Family::TWO_TWO, &Tree::Leaf), Element::basis(Tree::Leaf));
        assert_eq!(lower_bar(&t("1(. 2 .)")).unwrap(), t("0(. 2 .)"));
        assert_eq!(lower_bar(&t("3(. 1 .)")).unwrap(), t("2(. 1 .)"));
        assert_eq!(lower_bar(&Tree::Leaf).unwrap(), Tree::Leaf);
        assert!(lower_bar(&t("0(. 1 .)")).is_err());
    }

    #[test]
    fn worked_products() {
        let b = Baxter::new(Family::INF_INF);
        assert_eq!(b.circle(&e("0(. 2 .)"), &e("0(. 3 .)")).unwrap(), e("0(. 5 .)"));
        assert_eq!(b.circle(&e("1(. 2 .)"), &e("0(. 3 .)")).unwrap(), e("0(1(. 2 .) 3 .)"));
        assert_eq!(
            b.star(&e("0(. 2 .)"), &e("0(. 3 .)")).unwrap(),
            e("0(1(. 2 .) 3 .) + 0(. 2 1(. 3 .)) + l*0(. 5 .)")
        );
        let b = Baxter::new(Family::INF_TWO);
        let p = b.circle(&e("1(. 2 .)"), &e("1(. 3 .)")).unwrap();
        assert_eq!(p.to_string(), "1(1(. 2 .) 3 .) + 1(. 2 1(. 3 .)) + l*1(. 5 .)");
        let b = Baxter::new(Family::TWO_TWO);
        assert_eq!(
            b.star(&e("0(. 1 .)"), &e("0(. 1 .)")).unwrap(),
            e("0(1(. 1 .) 1 .) + 0(. 1 1(. 1 .)) + l*0(. 1 .)")
        );
        assert!(b.circle(&Element::basis(Tree::Leaf), &e("0(. 1 .)")).is_err());
    }

    #[test]
    fn morphisms() {
        let v = morphism_phi(Family::INF_TWO, Family::TWO_TWO, &e("0(. 4 1(. 2 .) 1 1(. 5 .))")).unwrap();
        assert_eq!(v, e("0(. 1 1(. 1 .) 1 1(. 1 .))"));
        let v = morphism_phi(Family::INF_INF, Family::INF_TWO, &e("2(. 3 .)")).unwrap();
        assert_eq!(v, e("-l*1(. 3 .)"));
        let x = e("0(. 2 .) + l*1(. 1 .)");
        assert_eq!(morphism_phi(Family::INF_INF, Family::INF_INF, &x).unwrap(), x);
        assert!(morphism_phi(Family::TWO_INF, Family::INF_TWO, &x).is_err());
    }

    #[test]
    fn decomposition_examples() {
        assert!(canonical_decompose_check(Family::INF_INF, &t("1(. 2 .)")));
        assert!(canonical_decompose_check(Family::INF_INF, &t("0(1(. 1 .) 3 .)")));
        assert!(canonical_decompose_check(Family::TWO_TWO, &Tree::generator()));
    }
}
