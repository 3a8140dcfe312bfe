//! Cycle index of the unit group `U_n = Aut(Z_n)` acting on `Z_n` by
//! multiplication, computed three independent ways, plus Burnside/Pólya
//! counts of orbits of elements and subsets.
//!
//! ```
//! use zn_cycle_index::{cycle_index_blocks, cycle_index_formula};
//!
//! let z12 = cycle_index_formula(12).unwrap();
//! assert_eq!(z12.to_string(), "1/4 x1^12 + 1/4 x1^6 x2^3 + 1/4 x1^4 x2^4 + 1/4 x1^2 x2^5");
//! assert_eq!(z12, cycle_index_blocks(12).unwrap());
//! ```

pub mod arith;
pub mod cycle_poly;
pub mod enumerate;
pub mod error;
pub mod unit_action;

pub use cycle_poly::{star_monomial, CycleIndexPoly, CycleType, Format};
pub use error::{Error, Result};
pub use unit_action::{
    ctype_of_permutation_oracle, ctype_of_unit, ctype_on_orbit, cycle_index_blocks,
    cycle_index_formula, cycle_index_oracle, orbit_of_order, orbits, partial_cycle_index,
    GroupActionSpec, OrbitTable,
};
