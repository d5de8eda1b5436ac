//! Named property suites behind the `verify` command.
//!
//! `Budget::Desk` uses the full bounds of the acceptance run; `Budget::Quick`
//! shrinks every bound so a suite finishes in well under a second.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::baxter_core::{beta, morphism_phi, Baxter, Element};
use crate::counting::{self, binomial_transform_2d, dim_formula, dt, monomial_dims, series_coeffs, Axis};
use crate::dendriform::{embed_elem, embed_trialgebra, rb_dendriform, DendOp, DendVariant, Dendriform, PlanarElem};
use crate::error::ParseError;
use crate::lincomb::LinComb;
use crate::monomial::{all_words, pi_recursive, pi_tree, tilde_equiv, Variant};
use crate::paths::{
    all_colored, all_schroder, classify_schroder, colored_to_schroder, path_to_tree, phi_plus, phi_plus_inverse,
    phi_zero, phi_zero_inverse, rotate_from_motzkin, rotate_to_motzkin, schroder_to_colored, t_map, t_map_inverse,
    tree_to_path, SStep, SchroderPath,
};
use crate::planar::{enumerate_planar, planar_up_to_leaves};
use crate::scalars::LambdaPoly;
use crate::trees::{enumerate_up_to_total, Enumerator, Exponent, Family, Tree};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_917;

pub const SUITES: [&str; 9] = [
    "enumeration",
    "transforms",
    "series",
    "identities",
    "bijections",
    "morphisms",
    "monomial",
    "dendriform",
    "random",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budget {
    Quick,
    Desk,
}

impl Budget {
    fn pick(self, quick: usize, desk: usize) -> usize {
        match self {
            Budget::Quick => quick,
            Budget::Desk => desk,
        }
    }
}

impl FromStr for Budget {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "quick" => Ok(Budget::Quick),
            "desk" => Ok(Budget::Desk),
            _ => Err(ParseError::new("budget", s, "expected quick or desk")),
        }
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            ..Self::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failures.push(what());
        }
    }

    pub fn failed(&self) -> usize {
        self.failures.len()
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}: {} passed, {} failed",
            self.suite,
            self.passed,
            self.failed()
        )?;
        for msg in self.failures.iter().take(5) {
            write!(f, "\n  {msg}")?;
        }
        if self.failures.len() > 5 {
            write!(f, "\n  … {} more", self.failures.len() - 5)?;
        }
        Ok(())
    }
}

/// Runs one suite by name, or every suite for `all`.
pub fn run(suite: &str, budget: Budget, seed: u64) -> Result<Vec<SuiteReport>, ParseError> {
    if suite == "all" {
        return Ok(SUITES.iter().map(|s| run_one(s, budget, seed)).collect());
    }
    if !SUITES.contains(&suite) {
        return Err(ParseError::new(
            "suite",
            suite,
            format!("expected all or one of {}", SUITES.join(", ")),
        ));
    }
    Ok(vec![run_one(suite, budget, seed)])
}

fn run_one(suite: &str, budget: Budget, seed: u64) -> SuiteReport {
    let mut r = SuiteReport::new(suite);
    match suite {
        "enumeration" => enumeration(&mut r, budget),
        "transforms" => transforms(&mut r, budget),
        "series" => series(&mut r, budget),
        "identities" => identities(&mut r, budget),
        "bijections" => bijections(&mut r, budget),
        "morphisms" => morphisms(&mut r, budget),
        "monomial" => monomial(&mut r, budget),
        "dendriform" => dendriform(&mut r, budget),
        "random" => random(&mut r, budget, seed),
        _ => unreachable!("suite names are checked by run"),
    }
    r
}

fn enumeration(r: &mut SuiteReport, budget: Budget) {
    let bounds = [
        (Family::TWO_TWO, budget.pick(6, 9)),
        (Family::INF_TWO, budget.pick(5, 7)),
        (Family::TWO_INF, budget.pick(4, 6)),
        (Family::INF_INF, budget.pick(4, 6)),
    ];
    for (f, top) in bounds {
        let mut e = Enumerator::new(f);
        for n in 1..=top {
            for m in 0..=top {
                let got = e.component(n as u32, m as u32).len();
                r.check(BigInt::from(got) == dim_formula(f, n, m), || {
                    format!("{f} ({n},{m}): enumerated {got}, formula {}", dim_formula(f, n, m))
                });
            }
        }
    }
    let mut e = Enumerator::new(Family::INF_TWO);
    for n in 1..=budget.pick(4, 6) {
        let total: usize = (0..=n).map(|m| e.component(n as u32, m as u32).len()).sum();
        r.check(BigInt::from(total) == counting::schroder_large(n), || {
            format!("large Schröder at n={n}")
        });
        let diag: usize = (1..=n).map(|k| e.component(k as u32, (n - k) as u32).len()).sum();
        r.check(BigInt::from(diag) == counting::motzkin(n), || {
            format!("Motzkin at total degree {n}")
        });
    }
}

fn transforms(r: &mut SuiteReport, budget: Budget) {
    let top = budget.pick(4, 6);
    let table = |f: Family| -> Vec<Vec<BigInt>> {
        let mut e = Enumerator::new(f);
        (1..=top)
            .map(|n| {
                (1..=top)
                    .map(|m| BigInt::from(e.component(n as u32, m as u32).len()))
                    .collect()
            })
            .collect()
    };
    let base = table(Family::TWO_TWO);
    for (f, axis) in [
        (Family::INF_TWO, Axis::N),
        (Family::TWO_INF, Axis::M),
        (Family::INF_INF, Axis::Both),
    ] {
        r.check(binomial_transform_2d(&base, axis) == table(f), || {
            format!("{f} is not the transform of (2,2)")
        });
    }
    for m in 1..=budget.pick(5, 8) {
        let col: BigInt = (1..=2 * m + 1).map(|n| dim_formula(Family::TWO_TWO, n, m)).sum();
        let want = BigInt::from(1u64 << (m + 1)) * counting::catalan(m);
        r.check(col == want, || format!("column sum at m={m}"));
    }
}

fn series(r: &mut SuiteReport, budget: Budget) {
    let order = budget.pick(5, 8);
    for f in Family::ALL {
        let Ok(s) = series_coeffs(f, order, order) else {
            r.check(false, || format!("{f}: series failed"));
            continue;
        };
        for n in 1..=order {
            for m in 0..=order - n {
                r.check(s.coeff(n, m) == dim_formula(f, n, m), || {
                    format!("{f}: coefficient ({n},{m})")
                });
            }
        }
    }
    let lhs = counting::monomial_series_inf(order, order);
    let rhs = counting::monomial_series_two(order, order).map(|s| s.substitute_x());
    r.check(lhs.is_ok() && lhs == rhs, || "M_inf(x,y) != M_2(x/(1-x), y)".into());
}

fn rb_identity(b: &Baxter, x: &Element, y: &Element) -> bool {
    let (bx, by) = (b.beta(x), b.beta(y));
    let mut inner = b.circle_lin(&bx, y);
    inner.add_scaled(&b.circle_lin(x, &by), &LambdaPoly::one());
    inner.add_scaled(&b.circle_lin(x, y), &LambdaPoly::lambda());
    b.circle_lin(&bx, &by) == b.beta(&inner)
}

fn identities(r: &mut SuiteReport, budget: Budget) {
    for f in Family::ALL {
        let b = Baxter::new(f);
        let pairs: Vec<Element> = enumerate_up_to_total(f, budget.pick(2, 3) as u32)
            .into_iter()
            .map(Element::basis)
            .collect();
        for x in &pairs {
            for y in &pairs {
                r.check(rb_identity(&b, x, y), || {
                    format!("{f}: Rota-Baxter identity on {x}, {y}")
                });
            }
        }
        let triples: Vec<Element> = enumerate_up_to_total(f, 2).into_iter().map(Element::basis).collect();
        for x in &triples {
            for y in &triples {
                for z in &triples {
                    let l = b.circle_lin(&b.circle_lin(x, y), z);
                    let rr = b.circle_lin(x, &b.circle_lin(y, z));
                    r.check(l == rr, || format!("{f}: associativity on {x}, {y}, {z}"));
                }
            }
        }
        if f.j == Exponent::Two {
            for t in enumerate_up_to_total(f, budget.pick(4, 5) as u32) {
                let once = beta(f, &Element::basis(t.clone()));
                r.check(beta(f, &once) == once.scale(&LambdaPoly::neg_lambda()), || {
                    format!("{f}: β² on {t}")
                });
            }
        }
        if f.i == Exponent::Two {
            let g = Element::basis(Tree::generator());
            r.check(b.circle_lin(&g, &g) == g, || {
                format!("{f}: generator is not idempotent")
            });
        }
    }
}

fn bijections(r: &mut SuiteReport, budget: Budget) {
    let top = budget.pick(5, 7);
    let mut e = Enumerator::new(Family::INF_TWO);
    for n in 1..=top {
        let (mut plus, mut zero) = (BTreeSet::new(), BTreeSet::new());
        for m in 0..=n as u32 {
            for t in e.component(n as u32, m).iter() {
                if t.root_label() == Some(1) {
                    let p = phi_plus(t);
                    r.check(p.as_ref().ok().map(phi_plus_inverse) == Some(Ok(t.clone())), || {
                        format!("φ⁺ round trip on {t}")
                    });
                    plus.extend(p.ok());
                } else {
                    let q = phi_zero(t);
                    r.check(q.as_ref().ok().map(phi_zero_inverse) == Some(Ok(t.clone())), || {
                        format!("φ⁰ round trip on {t}")
                    });
                    zero.extend(q.ok());
                }
            }
        }
        let small = counting::schroder_small(n);
        r.check(BigInt::from(plus.len()) == small, || format!("|S⁺({n})|"));
        r.check(BigInt::from(zero.len()) == small, || format!("|S⁰({n})|"));
        for p in all_schroder(n) {
            let rot = rotate_to_motzkin(&p).and_then(|m| rotate_from_motzkin(&m));
            r.check(rot.as_ref() == Ok(&p), || format!("rotation round trip on {p}"));
            if plus.contains(&p) {
                let back = t_map(&p).and_then(|q| t_map_inverse(&q));
                r.check(back.as_ref() == Ok(&p), || format!("T round trip on {p}"));
                let tree = path_to_tree(&p).and_then(|t| tree_to_path(&t));
                r.check(tree.as_ref() == Ok(&p), || format!("path/tree round trip on {p}"));
            }
        }
        if n >= 1 {
            let colored = all_colored(n - 1, true, true);
            let mut images = BTreeSet::new();
            for c in &colored {
                let p = colored_to_schroder(c);
                r.check(p.as_ref().ok().map(schroder_to_colored) == Some(Ok(c.clone())), || {
                    format!("colored round trip on {c}")
                });
                images.extend(p.ok());
            }
            r.check(images.len() == colored.len(), || {
                format!("colored decoding not injective at n={n}")
            });
        }
    }
}

fn morphisms(r: &mut SuiteReport, budget: Budget) {
    let bound = budget.pick(2, 3) as u32;
    for from in Family::ALL {
        for to in Family::ALL {
            if from == to || !from.dominates(to) {
                continue;
            }
            let (bf, bt) = (Baxter::new(from), Baxter::new(to));
            let basis: Vec<Element> = enumerate_up_to_total(from, bound)
                .into_iter()
                .map(Element::basis)
                .collect();
            let phi = |v: &Element| morphism_phi(from, to, v).unwrap_or_default();
            for x in &basis {
                r.check(phi(&bf.beta(x)) == bt.beta(&phi(x)), || {
                    format!("φ {from}→{to} and β on {x}")
                });
                for y in &basis {
                    let l = phi(&bf.circle_lin(x, y));
                    r.check(l == bt.circle_lin(&phi(x), &phi(y)), || {
                        format!("φ {from}→{to} on {x} ⊙ {y}")
                    });
                }
            }
        }
    }
    for f in Family::ALL {
        let b = Baxter::new(f);
        for t in enumerate_up_to_total(f, budget.pick(4, 5) as u32) {
            r.check(b.decompose_check(&t), || format!("{f}: decomposition of {t}"));
        }
    }
}

fn monomial(r: &mut SuiteReport, budget: Budget) {
    let trees = enumerate_up_to_total(Family::INF_TWO, budget.pick(4, 5) as u32);
    for t in &trees {
        let w = pi_tree(Variant::Infinity, t);
        r.check(w.as_ref().ok() == Some(&pi_recursive(Variant::Infinity, t)), || {
            format!("π on {t}")
        });
    }
    for x in &trees {
        for y in &trees {
            let same = tilde_equiv(x, y).unwrap_or(false);
            let eq = pi_tree(Variant::Infinity, x).ok() == pi_tree(Variant::Infinity, y).ok();
            r.check(same == eq, || format!("~ versus π on {x}, {y}"));
        }
    }
    for n in 1..=budget.pick(6, 8) {
        let words = all_words(Variant::Infinity, n);
        for m in 0..=n {
            let count = words.iter().filter(|w| w.bidegree().m as usize == m).count();
            r.check(BigInt::from(count) == monomial_dims(Variant::Infinity, n, m), || {
                format!("M_∞ words ({n},{m})")
            });
        }
    }
    for n in 1..=budget.pick(6, 10) {
        let words = all_words(Variant::Two, n);
        for m in 0..=n {
            let count = words.iter().filter(|w| w.bidegree().m as usize == m).count();
            r.check(BigInt::from(count) == monomial_dims(Variant::Two, n, m), || {
                format!("M_2 words ({n},{m})")
            });
        }
    }
}

/// A bilinear operation selected by name.
pub type OpFn<'a, T> = &'a dyn Fn(DendOp, &LinComb<T>, &LinComb<T>) -> LinComb<T>;

/// The seven trialgebra axioms, each as `(lhs, rhs)`.
pub fn trialgebra_axioms<T: Ord + Clone>(
    x: &LinComb<T>,
    y: &LinComb<T>,
    z: &LinComb<T>,
    op: OpFn<'_, T>,
) -> [(LinComb<T>, LinComb<T>); 7] {
    use DendOp::{Dot, Left, Right, Star};
    [
        (op(Left, &op(Left, x, y), z), op(Left, x, &op(Star, y, z))),
        (op(Left, &op(Right, x, y), z), op(Right, x, &op(Left, y, z))),
        (op(Right, &op(Star, x, y), z), op(Right, x, &op(Right, y, z))),
        (op(Dot, &op(Right, x, y), z), op(Right, x, &op(Dot, y, z))),
        (op(Dot, &op(Left, x, y), z), op(Dot, x, &op(Right, y, z))),
        (op(Left, &op(Dot, x, y), z), op(Dot, x, &op(Left, y, z))),
        (op(Dot, &op(Dot, x, y), z), op(Dot, x, &op(Dot, y, z))),
    ]
}

fn dendriform(r: &mut SuiteReport, budget: Budget) {
    let d = Dendriform::new(DendVariant::Trialgebra);
    let dop = |o: DendOp, a: &PlanarElem, b: &PlanarElem| a.bilinear(b, |x, y| d.op_trees(o, x, y));
    let basis: Vec<PlanarElem> = planar_up_to_leaves(budget.pick(3, 4))
        .into_iter()
        .map(PlanarElem::basis)
        .collect();
    for x in &basis {
        for y in &basis {
            for z in &basis {
                for (k, (l, rr)) in trialgebra_axioms(x, y, z, &dop).iter().enumerate() {
                    r.check(l == rr, || format!("axiom {} on {x}, {y}, {z}", k + 1));
                }
            }
        }
    }
    let b = Baxter::new(Family::INF_TWO);
    let trees = planar_up_to_leaves(budget.pick(4, 5));
    for x in &trees {
        for y in &trees {
            let (px, py) = (PlanarElem::basis(x.clone()), PlanarElem::basis(y.clone()));
            let (Ok(ix), Ok(iy)) = (embed_trialgebra(x), embed_trialgebra(y)) else {
                r.check(false, || format!("embedding failed on {x} or {y}"));
                continue;
            };
            for o in DendOp::ALL {
                let lhs = embed_elem(&dop(o, &px, &py), embed_trialgebra);
                let rhs = rb_dendriform(&b, o, &Element::basis(ix.clone()), &Element::basis(iy.clone()));
                r.check(lhs.is_ok() && lhs == rhs, || format!("embedding and {o} on {x}, {y}"));
            }
        }
    }
    let mut e = Enumerator::new(Family::INF_TWO);
    for n in 1..=budget.pick(5, 7) {
        for m in 0..=n {
            let b = BigInt::from(e.component(n as u32, m as u32).len());
            r.check(b == dt(n, m) + dt(n, m + 1), || format!("b(∞,2)({n},{m}) = dt + dt"));
            r.check(BigInt::from(enumerate_planar(n, m).len()) == dt(n, m), || {
                format!("|PT({n},{m})|")
            });
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng) -> LambdaPoly {
    let coeffs: Vec<BigInt> = (0..rng.gen_range(1..=3))
        .map(|_| BigInt::from(rng.gen_range(-3..=3)))
        .collect();
    LambdaPoly::from_coeffs(coeffs)
}

fn random_element(rng: &mut ChaCha8Rng, pool: &[Tree]) -> Element {
    let mut v = Element::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let t = pool.choose(rng).expect("nonempty pool").clone();
        v.add_term(t, random_poly(rng));
    }
    v
}

fn random_schroder(rng: &mut ChaCha8Rng, n: usize) -> SchroderPath {
    // Uniform steps with rejection of moves that leave the region.
    let (mut x, mut y) = (0, 0);
    let mut steps = Vec::new();
    while (x, y) != (n, n) {
        let step = [SStep::H, SStep::V, SStep::D][rng.gen_range(0..3)];
        let (nx, ny) = match step {
            SStep::H => (x + 1, y),
            SStep::V => (x, y + 1),
            SStep::D => (x + 1, y + 1),
        };
        if nx <= n && ny <= nx {
            steps.push(step);
            (x, y) = (nx, ny);
        }
    }
    SchroderPath::new(steps)
}

fn random(r: &mut SuiteReport, budget: Budget, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = budget.pick(10, 60);
    for f in Family::ALL {
        let b = Baxter::new(f);
        let pool = enumerate_up_to_total(f, 4);
        for _ in 0..samples {
            let (x, y, z) = (
                random_element(&mut rng, &pool),
                random_element(&mut rng, &pool),
                random_element(&mut rng, &pool),
            );
            r.check(rb_identity(&b, &x, &y), || {
                format!("{f}: Rota-Baxter identity on {x}, {y}")
            });
            let l = b.circle_lin(&b.circle_lin(&x, &y), &z);
            r.check(l == b.circle_lin(&x, &b.circle_lin(&y, &z)), || {
                format!("{f}: associativity on {x}, {y}, {z}")
            });
        }
    }
    for _ in 0..samples * 4 {
        let n = rng.gen_range(1..=budget.pick(10, 14));
        let p = random_schroder(&mut rng, n);
        let Ok(class) = classify_schroder(&p) else {
            r.check(false, || format!("sampler produced {p}"));
            continue;
        };
        let rot = rotate_to_motzkin(&p).and_then(|m| rotate_from_motzkin(&m));
        r.check(rot.as_ref() == Ok(&p), || format!("rotation on {p}"));
        if class.plus {
            let back = t_map(&p).and_then(|q| t_map_inverse(&q));
            r.check(back.as_ref() == Ok(&p), || format!("T round trip on {p}"));
            let tree = path_to_tree(&p).and_then(|t| tree_to_path(&t));
            r.check(tree.as_ref() == Ok(&p), || format!("path/tree round trip on {p}"));
            if class.restricted {
                let c = schroder_to_colored(&p).and_then(|c| colored_to_schroder(&c));
                r.check(c.as_ref() == Ok(&p), || format!("colored round trip on {p}"));
            }
        } else {
            let back = t_map_inverse(&p).and_then(|q| t_map(&q));
            r.check(back.as_ref() == Ok(&p), || format!("T⁻¹ round trip on {p}"));
        }
    }
}
