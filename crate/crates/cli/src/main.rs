//! `baxter`: command-line access to the free Rota-Baxter algebras, their
//! enumeration, the path bijections and the verification suites.

use std::fmt::Display;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use baxter_trees::baxter_core::{canonical_decompose_check, morphism_phi};
use baxter_trees::counting::{dim_formula, monomial_series_inf, monomial_series_two, series_coeffs};
use baxter_trees::dendriform::{
    embed_dialgebra, embed_elem, embed_trialgebra, DendOp, DendVariant, Dendriform, PlanarElem,
};
use baxter_trees::lincomb::LinComb;
use baxter_trees::monomial::{pi_map, tilde_equiv, word_beta, word_product, Variant, Word};
use baxter_trees::paths::{
    classify_colored, classify_motzkin, classify_schroder, colored_to_schroder, from_colored_motzkin, path_to_tree,
    phi_plus, phi_plus_inverse, phi_zero, phi_zero_inverse, restore_angles, rotate_from_motzkin, rotate_to_motzkin,
    schroder_to_colored, strip_angles, strip_angles_zero, t_map, t_map_inverse, to_colored_motzkin, tree_to_path,
    ColoredMotzkinPath, MotzkinPath, SchroderPath,
};
use baxter_trees::trees::{enumerate, validate};
use baxter_trees::verify::{self, Budget, DEFAULT_SEED};
use baxter_trees::{Baxter, DomainError, Element, Error, Exponent, Family, ParseError, PlanarTree, Tree};

const EXIT_FAILED: u8 = 1;
const EXIT_PARSE: u8 = 3;
const EXIT_DOMAIN: u8 = 4;

#[derive(Parser)]
#[command(name = "baxter", version, about = "Free Rota-Baxter algebras on decorated trees")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Tree family `i,j` with i, j in {2, inf}.
    #[arg(long, global = true, default_value = "inf,inf", value_parser = parse_with::<Family>)]
    family: Family,
    /// `sym` keeps λ symbolic; an integer specializes every coefficient.
    #[arg(long, global = true, default_value = "sym", allow_negative_numbers = true, value_parser = parse_lambda)]
    lambda: Lambda,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Clone, Debug)]
enum Lambda {
    Symbolic,
    Value(BigInt),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Records,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    /// Angle stripping and the tree/path bijection (root label > 0).
    Strip,
    /// The full bijection onto S⁺ or S⁰, chosen by the root label.
    Phi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Auto,
    Tree,
    Schroder,
    Motzkin,
    Colored,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WordOp {
    Product,
    Beta,
    Bidegree,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DendArg {
    Tri,
    Di,
}

impl From<DendArg> for DendVariant {
    fn from(d: DendArg) -> Self {
        match d {
            DendArg::Tri => DendVariant::Trialgebra,
            DendArg::Di => DendVariant::Dialgebra,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// The product a ⊙ b.
    Product { a: String, b: String },
    /// The augmented product a ∗ b, with the leaf `.` as unit.
    Star { a: String, b: String },
    /// The Baxter operator.
    Beta { a: String },
    /// List the basis trees of one bidegree.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: u32,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Dimension table for 1 ≤ n ≤ max-n, 0 ≤ m ≤ max-m.
    Dims {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
        /// Append full row and column sums; unbounded sums print as `inf`.
        #[arg(long)]
        marginals: bool,
    },
    /// Truncated generating function.
    Series {
        #[arg(long, default_value_t = 6)]
        order: usize,
        /// Print a monomial algebra series instead of the tree family's.
        #[arg(long, value_parser = parse_with::<Variant>)]
        monomial: Option<Variant>,
    },
    /// Tree in T_{∞,2} to Schröder path.
    TreeToPath {
        tree: String,
        #[arg(long, value_enum, default_value_t = Via::Phi)]
        via: Via,
    },
    /// Schröder path to tree in T_{∞,2}.
    PathToTree {
        path: String,
        #[arg(long, value_enum, default_value_t = Via::Phi)]
        via: Via,
        /// Root label for `--via strip`.
        #[arg(long, default_value_t = 1)]
        root_label: u32,
    },
    /// The bijection S⁺ → S⁰, or its inverse.
    TMap {
        path: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Tree in T_{2,2} with root label 1 to colored Motzkin path, or back.
    ToMotzkin {
        input: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Schröder path to Motzkin path by rotation, or back.
    Rotate {
        path: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Report the class of a tree or path.
    Classify {
        input: String,
        #[arg(long, value_enum, default_value_t = Kind::Auto)]
        kind: Kind,
    },
    /// Quotient morphism from `--family` to `--to`.
    Morphism {
        a: String,
        #[arg(long, value_parser = parse_with::<Family>)]
        to: Family,
    },
    /// Check that a tree is rebuilt from its canonical decomposition.
    DecomposeCheck { tree: String },
    /// Image in the monomial algebra; with `--compare`, test ~ equivalence.
    Pi {
        a: String,
        #[arg(long, default_value = "inf", value_parser = parse_with::<Variant>)]
        variant: Variant,
        #[arg(long)]
        compare: Option<String>,
    },
    /// Word operations in a monomial algebra.
    Word {
        #[arg(value_enum)]
        op: WordOp,
        a: String,
        b: Option<String>,
        #[arg(long, default_value = "inf", value_parser = parse_with::<Variant>)]
        variant: Variant,
    },
    /// Dendriform operation on planar trees.
    Dendriform {
        #[arg(value_parser = parse_with::<DendOp>)]
        op: DendOp,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = DendArg::Tri)]
        variant: DendArg,
    },
    /// Embed planar trees into B_{∞,2} (`tri`) or binary trees into B_{2,2} (`di`).
    Embed {
        a: String,
        #[arg(long, value_enum, default_value_t = DendArg::Tri)]
        variant: DendArg,
    },
    /// Run a named property suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value = "quick", value_parser = parse_with::<Budget>)]
        budget: Budget,
    },
}

fn parse_with<T: FromStr<Err = ParseError>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: ParseError| e.to_string())
}

fn parse_lambda(s: &str) -> Result<Lambda, String> {
    if s == "sym" {
        return Ok(Lambda::Symbolic);
    }
    s.parse::<BigInt>()
        .map(Lambda::Value)
        .map_err(|_| format!("expected `sym` or an integer, got {s:?}"))
}

/// Key/value output; plain format prints values only.
#[derive(Default)]
struct Output {
    records: Vec<(String, String)>,
    plain: Option<String>,
    failed: bool,
}

impl Output {
    fn one(key: &str, value: impl Display) -> Self {
        let mut o = Output::default();
        o.push(key, value);
        o
    }

    fn push(&mut self, key: &str, value: impl Display) {
        self.records.push((key.to_string(), value.to_string()));
    }

    fn print(&self, format: Format) {
        match (format, &self.plain) {
            (Format::Plain, Some(text)) => print!("{text}"),
            (Format::Plain, None) => {
                for (_, v) in &self.records {
                    println!("{v}");
                }
            }
            (Format::Records, _) => {
                for (k, v) in &self.records {
                    println!("{k}\t{v}");
                }
            }
        }
    }
}

fn parse<T: FromStr<Err = ParseError>>(s: &str) -> Result<T, Error> {
    Ok(s.parse()?)
}

fn tree_in(f: Family, s: &str) -> Result<Tree, Error> {
    let t: Tree = parse(s)?;
    validate(f, &t).map_err(|r| DomainError::InvalidTree {
        family: f.to_string(),
        report: r.to_string(),
    })?;
    Ok(t)
}

fn element_in(f: Family, s: &str) -> Result<Element, Error> {
    let v: Element = parse(s)?;
    for t in v.keys() {
        tree_in(f, &t.to_string())?;
    }
    Ok(v)
}

fn words_in(variant: Variant, s: &str) -> Result<LinComb<Word>, Error> {
    let raw: LinComb<Word> = parse(s)?;
    let mut out = LinComb::zero();
    for (w, c) in &raw {
        out.add_term(Word::new(variant, w.letters().to_vec())?, c.clone());
    }
    Ok(out)
}

fn specialize<K: Ord + Clone>(v: LinComb<K>, lambda: &Lambda) -> LinComb<K> {
    match lambda {
        Lambda::Symbolic => v,
        Lambda::Value(x) => v.specialize(x),
    }
}

fn dims(f: Family, max_n: usize, max_m: usize, marginals: bool) -> Output {
    let mut out = Output::default();
    let mut rows: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["n\\m".to_string()];
    header.extend((0..=max_m).map(|m| m.to_string()));
    if marginals {
        header.push("total".into());
    }
    rows.push(header);
    // Row sums are finite exactly when j = 2 (then m ≤ n); column sums
    // exactly when i = 2 (then n ≤ 2m + 1).
    let row_total = |n: usize| match f.j {
        Exponent::Two => (0..=n).map(|m| dim_formula(f, n, m)).sum::<BigInt>().to_string(),
        Exponent::Inf => "inf".to_string(),
    };
    let col_total = |m: usize| match f.i {
        Exponent::Two => (1..=2 * m + 1)
            .map(|n| dim_formula(f, n, m))
            .sum::<BigInt>()
            .to_string(),
        Exponent::Inf => "inf".to_string(),
    };
    for n in 1..=max_n {
        let mut row = vec![n.to_string()];
        for m in 0..=max_m {
            let d = dim_formula(f, n, m);
            out.push(&format!("{n},{m}"), &d);
            row.push(d.to_string());
        }
        if marginals {
            let t = row_total(n);
            out.push(&format!("{n},total"), &t);
            row.push(t);
        }
        rows.push(row);
    }
    if marginals {
        let mut row = vec!["total".to_string()];
        for m in 0..=max_m {
            let t = col_total(m);
            out.push(&format!("total,{m}"), &t);
            row.push(t);
        }
        row.push(String::new());
        rows.push(row);
    }
    let cols = rows[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut text = String::new();
    for r in &rows {
        let cells: Vec<String> = r.iter().zip(&widths).map(|(s, w)| format!("{s:>w$}")).collect();
        text.push_str(cells.join("  ").trim_end());
        text.push('\n');
    }
    out.plain = Some(text);
    out
}

fn classify(f: Family, input: &str, kind: Kind) -> Result<Output, Error> {
    let kind = match kind {
        Kind::Auto if input.contains('(') || input.trim() == "." => Kind::Tree,
        Kind::Auto if input.contains('r') || input.contains('b') => Kind::Colored,
        Kind::Auto if input.contains('U') => Kind::Motzkin,
        Kind::Auto => Kind::Schroder,
        k => k,
    };
    let class_err = |v: baxter_trees::paths::PathViolation| Error::from(DomainError::PathClass(v.to_string()));
    let mut out = Output::default();
    match kind {
        Kind::Tree => {
            let t = tree_in(f, input)?;
            let b = t.bidegree();
            out.push("family", f);
            out.push("bidegree", format!("({}, {})", b.n, b.m));
            out.push("root", if t.root_label() == Some(0) { "T0" } else { "T+" });
        }
        Kind::Schroder => {
            let p: SchroderPath = parse(input)?;
            out.push("class", classify_schroder(&p).map_err(class_err)?);
        }
        Kind::Motzkin => {
            let p: MotzkinPath = parse(input)?;
            out.push("class", classify_motzkin(&p).map_err(class_err)?);
        }
        Kind::Colored => {
            let p: ColoredMotzkinPath = parse(input)?;
            out.push("class", format!("M_hu({})", classify_colored(&p).map_err(class_err)?));
        }
        Kind::Auto => unreachable!("resolved above"),
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<Output, Error> {
    let Global {
        family: f,
        lambda,
        seed,
        ..
    } = cli.global;
    let out = match cli.command {
        Command::Product { a, b } => {
            let v = Baxter::new(f).circle(&parse(&a)?, &parse(&b)?)?;
            Output::one("result", specialize(v, &lambda))
        }
        Command::Star { a, b } => {
            let v = Baxter::new(f).star(&parse(&a)?, &parse(&b)?)?;
            Output::one("result", specialize(v, &lambda))
        }
        Command::Beta { a } => {
            let a = element_in(f, &a)?;
            Output::one("result", specialize(Baxter::new(f).beta(&a), &lambda))
        }
        Command::Enumerate { n, m, count } => {
            let trees = enumerate(f, n, m);
            if count {
                Output::one("count", trees.len())
            } else {
                let mut out = Output::default();
                for t in &trees {
                    out.push("tree", t);
                }
                out
            }
        }
        Command::Dims {
            max_n,
            max_m,
            marginals,
        } => dims(f, max_n, max_m, marginals),
        Command::Series { order, monomial } => {
            let s = match monomial {
                None => series_coeffs(f, order, order)?,
                Some(Variant::Infinity) => monomial_series_inf(order, order)?,
                Some(Variant::Two) => monomial_series_two(order, order)?,
            };
            Output::one("series", s)
        }
        Command::TreeToPath { tree, via } => {
            let t = tree_in(Family::INF_TWO, &tree)?;
            let p = match (via, t.root_label()) {
                (Via::Strip, Some(0)) => tree_to_path(&strip_angles_zero(&t)?)?,
                (Via::Strip, _) => tree_to_path(&strip_angles(&t)?)?,
                (Via::Phi, Some(0)) => phi_zero(&t)?,
                (Via::Phi, _) => phi_plus(&t)?,
            };
            Output::one("path", p)
        }
        Command::PathToTree { path, via, root_label } => {
            let p: SchroderPath = parse(&path)?;
            let t = match via {
                Via::Strip => restore_angles(&path_to_tree(&p)?, root_label)?,
                Via::Phi => {
                    let plus = classify_schroder(&p)
                        .map_err(|v| DomainError::PathClass(v.to_string()))?
                        .plus;
                    if plus {
                        phi_plus_inverse(&p)?
                    } else {
                        phi_zero_inverse(&p)?
                    }
                }
            };
            Output::one("tree", t)
        }
        Command::TMap { path, inverse } => {
            let p: SchroderPath = parse(&path)?;
            Output::one("path", if inverse { t_map_inverse(&p)? } else { t_map(&p)? })
        }
        Command::ToMotzkin { input, inverse } => {
            if inverse {
                let c: ColoredMotzkinPath = parse(&input)?;
                let t = from_colored_motzkin(&c)?;
                let mut out = Output::one("tree", &t);
                out.push("path", colored_to_schroder(&c)?);
                out
            } else {
                let t = tree_in(Family::TWO_TWO, &input)?;
                let c = to_colored_motzkin(&t)?;
                debug_assert_eq!(schroder_to_colored(&colored_to_schroder(&c)?)?, c);
                Output::one("path", c)
            }
        }
        Command::Rotate { path, inverse } => {
            if inverse {
                let p: MotzkinPath = parse(&path)?;
                Output::one("path", rotate_from_motzkin(&p)?)
            } else {
                let p: SchroderPath = parse(&path)?;
                Output::one("path", rotate_to_motzkin(&p)?)
            }
        }
        Command::Classify { input, kind } => classify(f, &input, kind)?,
        Command::Morphism { a, to } => {
            let v = morphism_phi(f, to, &parse(&a)?)?;
            Output::one("result", specialize(v, &lambda))
        }
        Command::DecomposeCheck { tree } => {
            let t = tree_in(f, &tree)?;
            let ok = canonical_decompose_check(f, &t);
            let mut out = Output::one("decompose", if ok { "ok" } else { "mismatch" });
            out.failed = !ok;
            out
        }
        Command::Pi { a, variant, compare } => match compare {
            Some(b) => {
                let (s, t) = (tree_in(variant.family(), &a)?, tree_in(variant.family(), &b)?);
                Output::one("equivalent", tilde_equiv(&s, &t)?)
            }
            None => Output::one("result", specialize(pi_map(variant, &parse(&a)?)?, &lambda)),
        },
        Command::Word { op, a, b, variant } => {
            let x = words_in(variant, &a)?;
            match op {
                WordOp::Product => {
                    let b = b.ok_or_else(|| ParseError::new("word", "", "product needs two operands"))?;
                    Output::one("result", word_product(&x, &words_in(variant, &b)?)?)
                }
                WordOp::Beta => Output::one("result", word_beta(&x)),
                WordOp::Bidegree => {
                    let mut out = Output::default();
                    for w in x.keys() {
                        let d = w.bidegree();
                        out.push(&w.to_string(), format!("({}, {})", d.n, d.m));
                    }
                    out
                }
            }
        }
        Command::Dendriform { op, a, b, variant } => {
            let (x, y): (PlanarElem, PlanarElem) = (parse(&a)?, parse(&b)?);
            let v = Dendriform::new(variant.into()).apply(op, &x, &y)?;
            Output::one("result", specialize(v, &lambda))
        }
        Command::Embed { a, variant } => {
            let x: LinComb<PlanarTree> = parse(&a)?;
            let v = match variant {
                DendArg::Tri => embed_elem(&x, embed_trialgebra)?,
                DendArg::Di => embed_elem(&x, embed_dialgebra)?,
            };
            Output::one("result", specialize(v, &lambda))
        }
        Command::Verify { suite, budget } => {
            let reports = verify::run(&suite, budget, seed)?;
            let mut out = Output::default();
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!("{r}\n"));
                let status = if r.ok() { "PASS" } else { "FAIL" };
                out.push(&r.suite, format!("{status} {} passed, {} failed", r.passed, r.failed()));
                for msg in &r.failures {
                    out.push("failure", msg);
                }
                out.failed |= !r.ok();
            }
            let (passed, failed): (usize, usize) =
                reports.iter().fold((0, 0), |(p, q), r| (p + r.passed, q + r.failed()));
            let total = format!("{passed} passed, {failed} failed (seed {seed})");
            text.push_str(&format!("total: {total}\n"));
            out.push("total", total);
            out.plain = Some(text);
            out
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.global.format;
    match run(cli) {
        Ok(out) => {
            out.print(format);
            if out.failed {
                ExitCode::from(EXIT_FAILED)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Parse(_) => EXIT_PARSE,
                Error::Domain(_) => EXIT_DOMAIN,
            })
        }
    }
}
