//! Words in x0, x1: the free algebra M_∞ with the idempotent morphism
//! x0, x1 ↦ x1, its quotient M_2 by x0² = x0 and x1² = x1, and the
//! projections π from the Baxter algebras of family (·, 2).

use std::fmt;
use std::str::FromStr;

use crate::baxter_core::Element;
use crate::error::{DomainError, ParseError};
use crate::lincomb::LinComb;
use crate::trees::{require_valid, Bidegree, Family, Tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Infinity,
    Two,
}

impl Variant {
    /// The tree family π is defined on.
    pub fn family(self) -> Family {
        match self {
            Variant::Infinity => Family::INF_TWO,
            Variant::Two => Family::TWO_TWO,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Infinity => "inf",
            Variant::Two => "2",
        })
    }
}

impl FromStr for Variant {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s {
            "inf" | "infinity" => Ok(Variant::Infinity),
            "2" | "two" => Ok(Variant::Two),
            _ => Err(ParseError::new("variant", s, "expected inf or 2")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X0,
    X1,
}

/// A word of M_∞ or M_2. The empty word only appears as the image of the
/// bare leaf.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    variant: Variant,
    letters: Vec<Letter>,
}

impl Word {
    /// A nonempty word, normalized when the variant is two.
    pub fn new(variant: Variant, letters: Vec<Letter>) -> Result<Word, DomainError> {
        if letters.is_empty() {
            return Err(DomainError::Other("a word needs at least one letter".into()));
        }
        Ok(Word { variant, letters }.normalize())
    }

    /// The empty word.
    pub fn unit(variant: Variant) -> Word {
        Word {
            variant,
            letters: Vec::new(),
        }
    }

    pub fn letter(variant: Variant, l: Letter) -> Word {
        Word {
            variant,
            letters: vec![l],
        }
    }

    /// `l^k`; `k = 0` gives the empty word.
    pub fn power(variant: Variant, l: Letter, k: usize) -> Word {
        Word {
            variant,
            letters: vec![l; k],
        }
        .normalize()
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_unit(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Result<Word, DomainError> {
        if self.variant != other.variant {
            return Err(DomainError::FamilyMismatch(
                self.variant.to_string(),
                other.variant.to_string(),
            ));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            variant: self.variant,
            letters,
        }
        .normalize())
    }

    /// Every letter becomes x1.
    pub fn beta(&self) -> Word {
        Word {
            variant: self.variant,
            letters: vec![Letter::X1; self.letters.len()],
        }
        .normalize()
    }

    /// (letter count, number of maximal x1 blocks).
    pub fn bidegree(&self) -> Bidegree {
        let blocks = self
            .letters
            .iter()
            .enumerate()
            .filter(|&(k, &l)| l == Letter::X1 && (k == 0 || self.letters[k - 1] != Letter::X1))
            .count();
        Bidegree::new(self.letters.len() as u32, blocks as u32)
    }

    /// Collapses equal adjacent letters in variant two; identity otherwise.
    pub fn normalize(mut self) -> Word {
        if self.variant == Variant::Two {
            self.letters.dedup();
        }
        self
    }

    /// The image in M_2.
    pub fn quotient(&self) -> Word {
        Word {
            variant: Variant::Two,
            letters: self.letters.clone(),
        }
        .normalize()
    }

    /// Parses with an explicit variant.
    pub fn parse_in(variant: Variant, s: &str) -> Result<Word, ParseError> {
        let w: Word = s.parse()?;
        Ok(Word {
            variant,
            letters: w.letters,
        }
        .normalize())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for run in self.letters.chunk_by(|a, b| a == b) {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let name = match run[0] {
                Letter::X0 => "x0",
                Letter::X1 => "x1",
            };
            if run.len() == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{}", run.len())?;
            }
        }
        Ok(())
    }
}

/// Parses `x1^2 x0^3`-style text as a word of M_∞; `1` is the empty word.
impl FromStr for Word {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact == "1" {
            return Ok(Word::unit(Variant::Infinity));
        }
        let bytes = compact.as_bytes();
        let mut letters = Vec::new();
        let mut k = 0;
        while k < bytes.len() {
            if bytes[k] != b'x' {
                return Err(ParseError::new("word", s, "expected x0 or x1"));
            }
            let l = match bytes.get(k + 1) {
                Some(b'0') => Letter::X0,
                Some(b'1') => Letter::X1,
                _ => return Err(ParseError::new("word", s, "expected x0 or x1")),
            };
            k += 2;
            let mut power = 1usize;
            if bytes.get(k) == Some(&b'^') {
                let start = k + 1;
                let mut end = start;
                while end < bytes.len() && bytes[end].is_ascii_digit() {
                    end += 1;
                }
                power = compact[start..end]
                    .parse()
                    .map_err(|_| ParseError::new("word", s, "bad exponent"))?;
                if power == 0 {
                    return Err(ParseError::new("word", s, "exponent must be positive"));
                }
                k = end;
            }
            letters.extend(std::iter::repeat_n(l, power));
        }
        if letters.is_empty() {
            return Err(ParseError::new("word", s, "empty word"));
        }
        Ok(Word {
            variant: Variant::Infinity,
            letters,
        })
    }
}

/// Product of two linear combinations of words.
pub fn word_product(a: &LinComb<Word>, b: &LinComb<Word>) -> Result<LinComb<Word>, DomainError> {
    let mut err = None;
    let out = a.bilinear(b, |u, v| match u.concat(v) {
        Ok(w) => LinComb::basis(w),
        Err(e) => {
            err = Some(e);
            LinComb::zero()
        }
    });
    err.map_or(Ok(out), Err)
}

pub fn word_beta(a: &LinComb<Word>) -> LinComb<Word> {
    a.map_linear(|w| LinComb::basis(w.beta()))
}

/// π on one tree by the closed formula: x1^{deg_a(t₁)} x0^{i₁} ⋯ x1^{deg_a(t_n)}
/// under a root labeled 0, and x1^{deg_a(t)} under a positive root.
pub fn pi_tree(variant: Variant, t: &Tree) -> Result<Word, DomainError> {
    if !t.is_leaf() {
        require_valid(variant.family(), t)?;
    }
    Ok(pi_formula(variant, t))
}

fn pi_formula(variant: Variant, t: &Tree) -> Word {
    let mut letters = Vec::new();
    match t.as_node() {
        None => {}
        Some(n) if n.label() > 0 => letters.extend(std::iter::repeat_n(Letter::X1, t.bidegree().n as usize)),
        Some(n) => {
            for (k, c) in n.children().iter().enumerate() {
                letters.extend(std::iter::repeat_n(Letter::X1, c.bidegree().n as usize));
                if let Some(&a) = n.angles().get(k) {
                    letters.extend(std::iter::repeat_n(Letter::X0, a as usize));
                }
            }
        }
    }
    Word { variant, letters }.normalize()
}

/// π extended linearly.
pub fn pi_map(variant: Variant, v: &Element) -> Result<LinComb<Word>, DomainError> {
    for t in v.keys() {
        if t.is_leaf() {
            return Err(DomainError::AugmentedInput);
        }
        require_valid(variant.family(), t)?;
    }
    Ok(v.map_linear(|t| LinComb::basis(pi_formula(variant, t))))
}

/// π through the universal recursion: a tree with root label a, children
/// t_k and angles i_k goes to β^a(π(t₁) x0^{i₁} π(t₂) ⋯ π(t_n)).
pub fn pi_recursive(variant: Variant, t: &Tree) -> Word {
    match t.as_node() {
        None => Word::unit(variant),
        Some(n) => {
            let mut w = Word::unit(variant);
            for (k, c) in n.children().iter().enumerate() {
                w = concat_unchecked(&w, &pi_recursive(variant, c));
                if let Some(&a) = n.angles().get(k) {
                    w = concat_unchecked(&w, &Word::power(variant, Letter::X0, a as usize));
                }
            }
            for _ in 0..n.label() {
                w = w.beta();
            }
            w
        }
    }
}

fn concat_unchecked(a: &Word, b: &Word) -> Word {
    let mut letters = a.letters.clone();
    letters.extend_from_slice(&b.letters);
    Word {
        variant: a.variant,
        letters,
    }
    .normalize()
}

/// The relation ~ on T_{∞,2}: same root label; for a positive root equal
/// angle degree; for root 0 the same number of children, the same angle
/// degree child by child and the same angles between children.
pub fn tilde_equiv(t: &Tree, s: &Tree) -> Result<bool, DomainError> {
    require_valid(Family::INF_TWO, t)?;
    require_valid(Family::INF_TWO, s)?;
    let (Some(a), Some(b)) = (t.as_node(), s.as_node()) else {
        return Ok(t.is_leaf() && s.is_leaf());
    };
    if a.label() != b.label() {
        return Ok(false);
    }
    if a.label() > 0 {
        return Ok(t.bidegree().n == s.bidegree().n);
    }
    Ok(a.children().len() == b.children().len()
        && a.angles() == b.angles()
        && a.children()
            .iter()
            .zip(b.children())
            .all(|(x, y)| x.bidegree().n == y.bidegree().n))
}

/// All words of the given length (normalized words in variant two).
pub fn all_words(variant: Variant, len: usize) -> Vec<Word> {
    if len == 0 {
        return vec![];
    }
    match variant {
        Variant::Infinity => (0..1u64 << len)
            .map(|bits| Word {
                variant,
                letters: (0..len)
                    .map(|k| {
                        if bits >> (len - 1 - k) & 1 == 1 {
                            Letter::X1
                        } else {
                            Letter::X0
                        }
                    })
                    .collect(),
            })
            .collect(),
        Variant::Two => [Letter::X0, Letter::X1]
            .into_iter()
            .map(|start| Word {
                variant,
                letters: (0..len)
                    .map(|k| match (start, k % 2) {
                        (Letter::X0, 0) | (Letter::X1, 1) => Letter::X0,
                        _ => Letter::X1,
                    })
                    .collect(),
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    #[test]
    fn word_ops() {
        assert_eq!(w("x0 x1 x0").beta(), w("x1^3"));
        assert_eq!(
            Word::parse_in(Variant::Two, "x0 x1 x0").unwrap().beta().to_string(),
            "x1"
        );
        assert_eq!(w("x0 x1 x1 x0").bidegree(), Bidegree::new(4, 1));
        assert_eq!(w("x1^2x0^3").to_string(), "x1^2 x0^3");
        assert!(w("x0").concat(&Word::parse_in(Variant::Two, "x0").unwrap()).is_err());
        assert!("x2".parse::<Word>().is_err());
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_tree(Variant::Infinity, &Tree::generator()).unwrap(), w("x0"));
        assert_eq!(pi_tree(Variant::Infinity, &t("1(. 1 .)")).unwrap(), w("x1"));
        assert_eq!(
            pi_tree(Variant::Infinity, &t("0(1(. 2 .) 3 .)")).unwrap(),
            w("x1^2 x0^3")
        );
        assert!(pi_tree(Variant::Two, &t("0(. 2 .)")).is_err());
        for s in ["0(1(. 2 .) 3 .)", "1(. 2 1(. 1 .))", "0(. 1 1(1(. 1 .) 2 .) 1 .)"] {
            assert_eq!(
                pi_recursive(Variant::Infinity, &t(s)),
                pi_formula(Variant::Infinity, &t(s))
            );
        }
    }

    #[test]
    fn tilde_examples() {
        let a = t("0(1(. 3 .) 2 1(. 1 .))");
        let b = t("0(1(. 1 1(. 2 .)) 2 1(. 1 .))");
        assert!(tilde_equiv(&a, &b).unwrap());
        assert!(tilde_equiv(&a, &a).unwrap());
        assert!(!tilde_equiv(&t("1(. 2 .)"), &t("0(. 2 .)")).unwrap());
    }

    #[test]
    fn word_counts() {
        assert_eq!(all_words(Variant::Infinity, 3).len(), 8);
        assert_eq!(all_words(Variant::Two, 3).len(), 2);
    }
}
