//! Exact symbolic arithmetic in the equivariant Real K-theory ring
//! `KR*_G(G)` of a compact simply-connected Lie group acting on itself by
//! conjugation, together with its coefficient ring `KR*_G(pt)`, the
//! Grothendieck-differential model of `K*_G(G)`, and the nonequivariant
//! shadow `KR*(G)`.
//!
//! Everything is computed over the integers: characters are
//! finitely-supported weight multisets, coefficient rings are presented on
//! explicit bases with their torsion relations (`2η = 0`, `η³ = 0`,
//! `μη = 0`, `μ² = 4`, `β⁴ = 1`), and products are returned in a canonical
//! normal form so that equality is structural equality.
//!
//! Supported groups: `U(n)` with the complex-conjugation or (for even `n`)
//! symplectic-type involution, and `SU(n)`, `Sp(2m)`, `G₂` with the trivial
//! involution. Tori appear as the target of the maximal-torus restriction,
//! and finite groups are served by the character-table oracle in
//! [`finoracle`].

pub mod charalg;
pub mod coeff;
pub mod exec;
pub mod finoracle;
pub mod krgring;
pub mod omega;
pub mod rootdata;
