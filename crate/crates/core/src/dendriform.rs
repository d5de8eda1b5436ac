//! The free λ-dendriform trialgebra on planar trees, the free dendriform
//! dialgebra on binary trees, the dendriform structure induced by β on a
//! Baxter algebra, and the embeddings of the free objects into it.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::baxter_core::{Baxter, Element};
use crate::error::{DomainError, ParseError};
use crate::lincomb::LinComb;
use crate::paths::restore_angles;
use crate::planar::PlanarTree;
use crate::scalars::LambdaPoly;
use crate::trees::{Family, Tree};

pub type PlanarElem = LinComb<PlanarTree>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DendVariant {
    /// λ symbolic, all planar trees.
    Trialgebra,
    /// λ = 0, binary trees, no dot.
    Dialgebra,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DendOp {
    Left,
    Right,
    Dot,
    Star,
}

impl DendOp {
    pub const ALL: [DendOp; 4] = [DendOp::Left, DendOp::Right, DendOp::Dot, DendOp::Star];
}

impl fmt::Display for DendOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DendOp::Left => "left",
            DendOp::Right => "right",
            DendOp::Dot => "dot",
            DendOp::Star => "star",
        })
    }
}

impl FromStr for DendOp {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "left" | "<" => Ok(DendOp::Left),
            "right" | ">" => Ok(DendOp::Right),
            "dot" | "." => Ok(DendOp::Dot),
            "star" | "*" => Ok(DendOp::Star),
            _ => Err(ParseError::new("operation", s, "expected left, right, dot or star")),
        }
    }
}

/// Operation engine for one variant, memoizing ∗ on basis pairs.
pub struct Dendriform {
    variant: DendVariant,
    star_memo: RefCell<HashMap<(PlanarTree, PlanarTree), PlanarElem>>,
}

/// Unlabeled graft: a fresh root over the given children, no normalization.
fn graft(children: Vec<PlanarTree>) -> PlanarTree {
    PlanarTree::Node(children)
}

impl Dendriform {
    pub fn new(variant: DendVariant) -> Self {
        Dendriform {
            variant,
            star_memo: RefCell::new(HashMap::new()),
        }
    }

    pub fn variant(&self) -> DendVariant {
        self.variant
    }

    fn check(&self, v: &PlanarElem, allow_leaf: bool) -> Result<(), DomainError> {
        for t in v.keys() {
            if t.is_leaf() {
                if allow_leaf {
                    continue;
                }
                return Err(DomainError::AugmentedInput);
            }
            if !t.is_valid() {
                return Err(DomainError::Other(format!("{t} is not a planar tree")));
            }
            if self.variant == DendVariant::Dialgebra && !t.is_binary() {
                return Err(DomainError::Other(format!("{t} is not a binary tree")));
            }
        }
        Ok(())
    }

    /// Applies `op` bilinearly; ∗ accepts the leaf as its unit.
    pub fn apply(&self, op: DendOp, x: &PlanarElem, y: &PlanarElem) -> Result<PlanarElem, DomainError> {
        if op == DendOp::Dot && self.variant == DendVariant::Dialgebra {
            return Err(DomainError::Other("the dialgebra has no dot operation".into()));
        }
        let unit_ok = op == DendOp::Star;
        self.check(x, unit_ok)?;
        self.check(y, unit_ok)?;
        Ok(x.bilinear(y, |a, b| self.op_trees(op, a, b)))
    }

    /// `op` on basis trees; inputs are assumed admissible.
    pub fn op_trees(&self, op: DendOp, x: &PlanarTree, y: &PlanarTree) -> PlanarElem {
        match op {
            DendOp::Left => self.left(x, y),
            DendOp::Right => self.right(x, y),
            DendOp::Dot => self.dot(x, y),
            DendOp::Star => self.star(x, y),
        }
    }

    /// x ≺ y = G(x₁, …, x_n ∗ y).
    fn left(&self, x: &PlanarTree, y: &PlanarTree) -> PlanarElem {
        let (last, init) = x.children().split_last().expect("non-leaf");
        self.star(last, y)
            .iter()
            .map(|(u, c)| {
                let mut cs = init.to_vec();
                cs.push(u.clone());
                (graft(cs), c.clone())
            })
            .collect()
    }

    /// x ≻ y = G(x ∗ y₁, y₂, …, y_m).
    fn right(&self, x: &PlanarTree, y: &PlanarTree) -> PlanarElem {
        let (first, rest) = y.children().split_first().expect("non-leaf");
        self.star(x, first)
            .iter()
            .map(|(u, c)| {
                let mut cs = vec![u.clone()];
                cs.extend_from_slice(rest);
                (graft(cs), c.clone())
            })
            .collect()
    }

    /// x · y = G(x₁, …, x_n ∗ y₁, y₂, …, y_m).
    fn dot(&self, x: &PlanarTree, y: &PlanarTree) -> PlanarElem {
        let (last, init) = x.children().split_last().expect("non-leaf");
        let (first, rest) = y.children().split_first().expect("non-leaf");
        self.star(last, first)
            .iter()
            .map(|(u, c)| {
                let mut cs = init.to_vec();
                cs.push(u.clone());
                cs.extend_from_slice(rest);
                (graft(cs), c.clone())
            })
            .collect()
    }

    /// x ∗ y = x ≺ y + x ≻ y + λ·x·y, with the leaf as unit.
    fn star(&self, x: &PlanarTree, y: &PlanarTree) -> PlanarElem {
        if x.is_leaf() {
            return PlanarElem::basis(y.clone());
        }
        if y.is_leaf() {
            return PlanarElem::basis(x.clone());
        }
        let key = (x.clone(), y.clone());
        if let Some(v) = self.star_memo.borrow().get(&key) {
            return v.clone();
        }
        let mut out = self.left(x, y);
        out.add_scaled(&self.right(x, y), &LambdaPoly::one());
        if self.variant == DendVariant::Trialgebra {
            out.add_scaled(&self.dot(x, y), &LambdaPoly::lambda());
        }
        self.star_memo.borrow_mut().insert(key, out.clone());
        out
    }
}

/// One-shot [`Dendriform::apply`].
pub fn dend_op(variant: DendVariant, op: DendOp, x: &PlanarElem, y: &PlanarElem) -> Result<PlanarElem, DomainError> {
    Dendriform::new(variant).apply(op, x, y)
}

/// The operations induced by β: x ≻ y = β(x)y, x ≺ y = xβ(y), x · y = xy.
pub fn rb_dendriform(bx: &Baxter, op: DendOp, a: &Element, b: &Element) -> Result<Element, DomainError> {
    Ok(match op {
        DendOp::Left => bx.circle(a, &bx.beta(b))?,
        DendOp::Right => bx.circle(&bx.beta(a), b)?,
        DendOp::Dot => bx.circle(a, b)?,
        DendOp::Star => {
            let mut out = bx.circle(a, &bx.beta(b))?;
            out.add_scaled(&bx.circle(&bx.beta(a), b)?, &LambdaPoly::one());
            out.add_scaled(&bx.circle(a, b)?, &LambdaPoly::lambda());
            out
        }
    })
}

/// One-shot [`rb_dendriform`] for a family.
pub fn rb_dendriform_in(f: Family, op: DendOp, a: &Element, b: &Element) -> Result<Element, DomainError> {
    rb_dendriform(&Baxter::new(f), op, a, b)
}

/// Runs of interior leaves become angle labels; root label 0, other
/// labels 1. Lands in T⁰_{∞,2}.
pub fn embed_trialgebra(x: &PlanarTree) -> Result<Tree, DomainError> {
    restore_angles(x, 0)
}

/// The binary tree itself with root label 0 and every other label and
/// angle 1. Lands in T_{2,2}(n, n−1).
pub fn embed_dialgebra(x: &PlanarTree) -> Result<Tree, DomainError> {
    if x.is_leaf() || !x.is_binary() {
        return Err(DomainError::Other(format!("{x} is not a binary tree with a node")));
    }
    restore_angles(x, 0)
}

/// Linear extension of an embedding.
pub fn embed_elem(
    v: &PlanarElem,
    embed: impl Fn(&PlanarTree) -> Result<Tree, DomainError>,
) -> Result<Element, DomainError> {
    let mut out = Element::zero();
    for (t, c) in v {
        out.add_term(embed(t)?, c.clone());
    }
    Ok(out)
}
