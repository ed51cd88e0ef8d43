//! Exact computations with the seven frieze groups acting on formal series
//! in the variables `{xᵢ}` and `{xᵢ, yᵢ}`, `i ∈ ℤ`.
//!
//! - [`composition`], [`monomial`], [`group`]: compositions, normal-form
//!   monomials and normal-form group elements.
//! - [`action`]: actions on monomials, stabilizers, orbits in a window.
//! - [`basis`]: labels of the orbit-sum invariants and their expansion.
//! - [`series`]: window-truncated series with rational coefficients.
//! - [`module_structure`]: the F1 and F6 component census.
//!
//! ```
//! use frieze_core::*;
//!
//! let f = expand_basis_function(&"f7[(1,2),(1);Δ=1]".parse()?, 5)?;
//! assert!(is_invariant(FriezeGroupId::F7, &f, 1)?);
//! let e2 = elementary_sym(2, 6)?;
//! let expansion = expand_in_basis(FriezeGroupId::F1, &e2, 1)?;
//! assert!(expansion.coefficients.keys().all(|idx| idx.shape_x().parts().iter().all(|&p| p <= 1)));
//! # Ok::<(), Error>(())
//! ```

pub mod action;
pub mod basis;
pub mod composition;
pub mod error;
pub mod group;
pub mod module_structure;
pub mod monomial;
pub mod series;

pub use action::{act, act_x, act_xy, element_with_map, has_nontrivial_stabilizer, orbit_in_window, stabilizer, Stabilizer};
pub use basis::{canonical_index, enumerate_indices, expand_basis_function, index_of_monomial, BasisIndex, ParityClass};
pub use composition::Composition;
pub use error::{Error, Result};
pub use group::{FriezeGroupId, GroupElement, IndexMap};
pub use module_structure::{
    component_type, decomposition_census, embed_line, Census, Component, ComponentSequence, ComponentType,
};
pub use monomial::{Alphabet, ExponentMap, Monomial, MonomialX, MonomialXY};
pub use series::{
    format_rational,
    act_series, complete_sym, elementary_sym, expand_in_basis, generator_shift_bound, is_invariant, parse_rational,
    BasisExpansion, Rational, TruncatedSeries,
};
