//! Free Rota–Baxter algebras on one generator, realized on decorated planar
//! trees, with their dendriform structures, monomial quotients, lattice-path
//! bijections and dimension counts. All arithmetic is exact over ℤ[λ].

pub mod baxter_core;
pub mod counting;
pub mod dendriform;
pub mod error;
pub mod lincomb;
pub mod monomial;
pub mod paths;
pub mod planar;
pub mod scalars;
pub mod trees;
pub mod verify;

pub use baxter_core::{Baxter, Element};
pub use error::{DomainError, Error, ParseError};
pub use lincomb::LinComb;
pub use planar::PlanarTree;
pub use scalars::LambdaPoly;
pub use trees::{Bidegree, Counter, Enumerator, Exponent, Family, Tree};
