//! Exact walk-count table and limiting even moments.
//!
//! `W_u(v)` counts closed walks of `2u` steps that return to the root exactly
//! `v` times, every step being matched by its reverse and new edges opened
//! leftmost-first. The table obeys
//!
//! ```text
//! W_u(v) = p · Σ_{i=1..v} Σ_{j=v-i..u-i} Σ_{l=0..u-i-j}
//!              W_{u-i-j}(l) · C(l+i-1, i-1) · C(v-1, i-1) · W_j(v-i)
//! W_j(0) = [j = 0]
//! ```
//!
//! and the limiting moment of `N⁻¹ Tr A^{2k}` is `m_k = Σ_r W_k(r)`. Odd
//! moments vanish in the limit.
//!
//! The factor `p` is applied once per expansion, i.e. once per tree edge, so
//! `W_u(v)` is a polynomial in `p` and the table at `p = 1` is integral.

mod bounds;
mod sequence;
mod table;

pub use bounds::{
    check_bounds, find_bound_constants, BoundConstants, BoundReport, LowerBoundRecord,
    MomentBoundRecord, WalkBoundRecord,
};
pub use sequence::{moment_limit, moment_sequence, MomentSequence};
pub use table::{build_walk_table, WalkCountTable, MAX_ORDER_CEILING};
