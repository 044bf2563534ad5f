//! Root data for the supported groups: weight lattices, Weyl group
//! generators, fundamental weights, and the involution action on the
//! lattice.
//!
//! Conventions, fixed once and used by every downstream module:
//!
//! * `U(n)`: weights live in `Z^n` (the `e`-basis of torus characters).
//!   Fundamental weight `k` is the highest weight `(1,…,1,0,…,0)` of
//!   `∧^k σ_n`, for `k = 1..n`, in that order.
//! * `SU(n)`: weights are `U(n)` weights taken modulo the all-ones vector,
//!   normalized so that the last coordinate is zero. Fundamentals are
//!   `∧^k σ_n` for `k = 1..n-1`.
//! * `Sp(2m)` (CLI token `Cm`): weights live in `Z^m`; fundamental `k` has
//!   highest weight `L_1 + … + L_k`, for `k = 1..m`.
//! * `G₂`: weights live in `Z²` in the fundamental-weight basis; the two
//!   fundamentals are `(1,0)` (dimension 7) and `(0,1)` (dimension 14).
//! * Tori `T^n`: weights in `Z^n`, trivial Weyl group, no fundamentals.
//!
//! The involution enters only through the lattice involution `τ`: the
//! induced map on characters sends a weight `w` to `-τ(w)`.

use serde::Serialize;
use thiserror::Error;

/// Group families supported by the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    UnitaryU,
    SpecialUnitary,
    /// `Sp(2m)`; `rank` is the symplectic rank `m`.
    Symplectic,
    ExceptionalG2,
    Torus,
    /// Product of finite groups; served by the character-table oracle.
    FiniteProduct,
}

/// Lie group involution kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Involution {
    Trivial,
    /// `g ↦ ḡ` on `U(n)` or inversion on a torus.
    ComplexConjugation,
    /// `g ↦ J ḡ J⁻¹` on `U(2m)`.
    SymplecticType,
}

/// A validated group+involution descriptor. Cheap to copy and compare;
/// the heavy cached data lives in [`Group`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupSpec {
    pub family: Family,
    /// Family rank: `n` for `U(n)`/`SU(n)`/`T^n`, `m` for `Sp(2m)`, 2 for `G₂`.
    pub rank: usize,
    pub involution: Involution,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootDataError {
    #[error("symplectic-type involution requires U(n) with even n")]
    OddRankSymplectic,
    #[error("involution {0:?} is not defined for family {1:?}")]
    BadInvolution(Involution, Family),
    #[error("rank must be positive")]
    ZeroRank,
    #[error("G2 has rank 2")]
    BadG2Rank,
    #[error("family {0:?} has no fundamental weights")]
    UnsupportedFamily(Family),
}

/// A weight-lattice point in the group's fixed coordinate basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }
}

/// An integer lattice automorphism squaring to the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeInvolution {
    pub matrix: Vec<Vec<i64>>,
}

impl LatticeInvolution {
    pub fn apply(&self, w: &Weight) -> Weight {
        Weight(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&w.0).map(|(m, c)| m * c).sum())
                .collect(),
        )
    }
}

/// A validated group with cached root data.
#[derive(Debug)]
pub struct Group {
    pub spec: GroupSpec,
    /// Dimension of the stored weight vectors.
    pub lattice_rank: usize,
    n_simple: usize,
    fundamentals: Vec<Weight>,
    pos_roots: Vec<Weight>,
    rho: Weight,
    /// Gram matrix of the invariant inner product (identity except for G₂).
    gram: Vec<Vec<i64>>,
    /// Strictly positive on every simple root; refines the dominance order.
    dom_functional: Vec<i64>,
    tau: LatticeInvolution,
}

/// Builds and validates a group, caching simple roots, fundamental weights
/// and Weyl generators.
pub fn build_group(
    family: Family,
    rank: usize,
    involution: Involution,
) -> Result<Group, RootDataError> {
    match family {
        Family::ExceptionalG2 => {
            if rank != 2 {
                return Err(RootDataError::BadG2Rank);
            }
            if involution != Involution::Trivial {
                // The engine treats G2 with the trivial involution only.
                return Err(RootDataError::BadInvolution(involution, family));
            }
        }
        Family::UnitaryU => {
            if rank == 0 {
                return Err(RootDataError::ZeroRank);
            }
            if involution == Involution::SymplecticType && rank % 2 != 0 {
                return Err(RootDataError::OddRankSymplectic);
            }
        }
        Family::SpecialUnitary | Family::Symplectic | Family::Torus => {
            if rank == 0 {
                return Err(RootDataError::ZeroRank);
            }
            if involution == Involution::SymplecticType {
                return Err(RootDataError::BadInvolution(involution, family));
            }
            if involution == Involution::ComplexConjugation && family != Family::Torus {
                return Err(RootDataError::BadInvolution(involution, family));
            }
        }
        Family::FiniteProduct => {
            if involution != Involution::Trivial {
                return Err(RootDataError::BadInvolution(involution, family));
            }
        }
    }

    let spec = GroupSpec {
        family,
        rank,
        involution,
    };
    Ok(Group::assemble(spec))
}

fn identity_matrix(n: usize, sign: i64) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { sign } else { 0 }).collect())
        .collect()
}

fn reversal_matrix(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i + j == n - 1 { 1 } else { 0 }).collect())
        .collect()
}

impl Group {
    fn assemble(spec: GroupSpec) -> Group {
        let n = spec.rank;
        let (lattice_rank, n_simple) = match spec.family {
            Family::UnitaryU => (n, n - 1),
            Family::SpecialUnitary => (n, n - 1),
            Family::Symplectic => (n, n),
            Family::ExceptionalG2 => (2, 2),
            Family::Torus => (n, 0),
            Family::FiniteProduct => (0, 0),
        };

        let e = |i: usize| -> Weight {
            let mut v = vec![0; lattice_rank];
            v[i] = 1;
            Weight(v)
        };

        let mut fundamentals = Vec::new();
        let mut pos_roots = Vec::new();
        let mut rho = Weight::zero(lattice_rank);
        let mut gram = identity_matrix(lattice_rank, 1);

        match spec.family {
            Family::UnitaryU | Family::SpecialUnitary => {
                let top = if spec.family == Family::UnitaryU { n } else { n - 1 };
                for k in 1..=top {
                    let mut v = vec![0; n];
                    for c in v.iter_mut().take(k) {
                        *c = 1;
                    }
                    fundamentals.push(Weight(v));
                }
                for i in 0..n {
                    for j in (i + 1)..n {
                        pos_roots.push(e(i).sub(&e(j)));
                    }
                }
                rho = Weight((0..n).map(|i| (n - 1 - i) as i64).collect());
            }
            Family::Symplectic => {
                let m = n;
                for k in 1..=m {
                    let mut v = vec![0; m];
                    for c in v.iter_mut().take(k) {
                        *c = 1;
                    }
                    fundamentals.push(Weight(v));
                }
                for i in 0..m {
                    for j in (i + 1)..m {
                        pos_roots.push(e(i).sub(&e(j)));
                        pos_roots.push(e(i).add(&e(j)));
                    }
                    pos_roots.push(e(i).scale(2));
                }
                rho = Weight((0..m).map(|i| (m - i) as i64).collect());
            }
            Family::ExceptionalG2 => {
                fundamentals = vec![Weight(vec![1, 0]), Weight(vec![0, 1])];
                // Positive roots in the fundamental-weight basis; α1 short.
                pos_roots = vec![
                    Weight(vec![2, -1]),
                    Weight(vec![-3, 2]),
                    Weight(vec![-1, 1]),
                    Weight(vec![1, 0]),
                    Weight(vec![3, -1]),
                    Weight(vec![0, 1]),
                ];
                rho = Weight(vec![1, 1]);
                gram = vec![vec![2, 3], vec![3, 6]];
            }
            Family::Torus | Family::FiniteProduct => {}
        }

        let dom_functional: Vec<i64> = match spec.family {
            Family::UnitaryU | Family::SpecialUnitary => {
                (0..lattice_rank).map(|i| (n - i) as i64).collect()
            }
            Family::Symplectic => (0..lattice_rank).map(|i| (n - i) as i64).collect(),
            Family::ExceptionalG2 => vec![3, 5],
            Family::Torus | Family::FiniteProduct => vec![0; lattice_rank],
        };

        // τ is chosen so that the induced map on characters, w ↦ -τ(w),
        // realizes σ̄*_G: the longest Weyl element for the trivial involution
        // (so σ̄*[V] = [V̄]), and -1 for the conjugation/symplectic involutions
        // (so σ̄*_G is the identity on R(G)).
        let tau_matrix = match spec.involution {
            Involution::Trivial => match spec.family {
                Family::UnitaryU | Family::SpecialUnitary => reversal_matrix(lattice_rank),
                Family::Symplectic | Family::ExceptionalG2 => identity_matrix(lattice_rank, -1),
                Family::Torus => identity_matrix(lattice_rank, 1),
                Family::FiniteProduct => Vec::new(),
            },
            Involution::ComplexConjugation | Involution::SymplecticType => {
                identity_matrix(lattice_rank, -1)
            }
        };

        Group {
            spec,
            lattice_rank,
            n_simple,
            fundamentals,
            pos_roots,
            rho,
            gram,
            dom_functional,
            tau: LatticeInvolution { matrix: tau_matrix },
        }
    }

    pub fn num_simple(&self) -> usize {
        self.n_simple
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.pos_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Normalizes a lattice vector to the fixed section of the weight
    /// lattice: for `SU(n)` this subtracts the last coordinate times the
    /// all-ones vector; other families store weights verbatim.
    pub fn normalize(&self, w: &Weight) -> Weight {
        match self.spec.family {
            Family::SpecialUnitary => {
                let last = *w.0.last().expect("nonzero rank");
                if last == 0 {
                    w.clone()
                } else {
                    Weight(w.0.iter().map(|c| c - last).collect())
                }
            }
            _ => w.clone(),
        }
    }

    /// Applies the `i`-th simple reflection.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Weight {
        debug_assert!(i < self.n_simple);
        match self.spec.family {
            Family::UnitaryU | Family::SpecialUnitary => {
                let mut v = w.0.clone();
                v.swap(i, i + 1);
                self.normalize(&Weight(v))
            }
            Family::Symplectic => {
                let mut v = w.0.clone();
                if i + 1 < v.len() {
                    v.swap(i, i + 1);
                } else {
                    v[i] = -v[i];
                }
                Weight(v)
            }
            Family::ExceptionalG2 => {
                let (a, b) = (w.0[0], w.0[1]);
                if i == 0 {
                    Weight(vec![-a, a + b])
                } else {
                    Weight(vec![a + 3 * b, -b])
                }
            }
            Family::Torus | Family::FiniteProduct => w.clone(),
        }
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        match self.spec.family {
            Family::UnitaryU => w.0.windows(2).all(|p| p[0] >= p[1]),
            Family::SpecialUnitary => {
                let w = self.normalize(w);
                w.0.windows(2).all(|p| p[0] >= p[1])
            }
            Family::Symplectic => {
                w.0.windows(2).all(|p| p[0] >= p[1]) && *w.0.last().unwrap() >= 0
            }
            Family::ExceptionalG2 => w.0[0] >= 0 && w.0[1] >= 0,
            Family::Torus => true,
            Family::FiniteProduct => false,
        }
    }

    /// The dominant representative of the Weyl orbit of `w`.
    pub fn dominant_rep(&self, w: &Weight) -> Weight {
        match self.spec.family {
            Family::UnitaryU | Family::SpecialUnitary => {
                let w = self.normalize(w);
                let mut v = w.0;
                v.sort_unstable_by(|a, b| b.cmp(a));
                self.normalize(&Weight(v))
            }
            Family::Symplectic => {
                let mut v: Vec<i64> = w.0.iter().map(|c| c.abs()).collect();
                v.sort_unstable_by(|a, b| b.cmp(a));
                Weight(v)
            }
            Family::ExceptionalG2 => {
                let mut cur = w.clone();
                loop {
                    if cur.0[0] < 0 {
                        cur = self.simple_reflection(0, &cur);
                    } else if cur.0[1] < 0 {
                        cur = self.simple_reflection(1, &cur);
                    } else {
                        return cur;
                    }
                }
            }
            Family::Torus => w.clone(),
            Family::FiniteProduct => w.clone(),
        }
    }

    /// Dominance-refining functional; strictly decreases along subtraction
    /// of simple (hence positive) roots.
    pub fn height(&self, w: &Weight) -> i64 {
        self.dom_functional
            .iter()
            .zip(&w.0)
            .map(|(f, c)| f * c)
            .sum()
    }

    pub fn inner(&self, a: &Weight, b: &Weight) -> i64 {
        let mut acc = 0;
        for (i, ai) in a.0.iter().enumerate() {
            for (j, bj) in b.0.iter().enumerate() {
                acc += ai * self.gram[i][j] * bj;
            }
        }
        acc
    }

    /// Weyl group order, for orbit-size invariants.
    pub fn weyl_order(&self) -> u64 {
        fn fact(n: usize) -> u64 {
            (1..=n as u64).product()
        }
        match self.spec.family {
            Family::UnitaryU | Family::SpecialUnitary => fact(self.spec.rank),
            Family::Symplectic => fact(self.spec.rank) << self.spec.rank,
            Family::ExceptionalG2 => 12,
            Family::Torus | Family::FiniteProduct => 1,
        }
    }
}

/// The ordered fundamental dominant weights of the group.
pub fn fundamental_weights(g: &Group) -> Result<&[Weight], RootDataError> {
    match g.spec.family {
        Family::Torus | Family::FiniteProduct => {
            Err(RootDataError::UnsupportedFamily(g.spec.family))
        }
        _ => Ok(&g.fundamentals),
    }
}

/// The full Weyl orbit of `w`, as closure under simple reflections.
pub fn weyl_orbit(g: &Group, w: &Weight) -> std::collections::BTreeSet<Weight> {
    let mut orbit = std::collections::BTreeSet::new();
    let mut stack = vec![g.normalize(w)];
    while let Some(v) = stack.pop() {
        if !orbit.insert(v.clone()) {
            continue;
        }
        for i in 0..g.n_simple {
            let u = g.simple_reflection(i, &v);
            if !orbit.contains(&u) {
                stack.push(u);
            }
        }
    }
    orbit
}

/// The lattice involution `τ`; the induced map on characters is `w ↦ -τ(w)`.
pub fn involution_weight_map(g: &Group) -> &LatticeInvolution {
    &g.tau
}

/// Applies the character-level involution map `w ↦ -τ(w)` to one weight.
pub fn conj_weight(g: &Group, w: &Weight) -> Weight {
    g.normalize(&g.tau.apply(w).scale(-1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(n: usize) -> Group {
        build_group(Family::UnitaryU, n, Involution::ComplexConjugation).unwrap()
    }

    #[test]
    fn build_validation() {
        assert!(build_group(Family::UnitaryU, 3, Involution::ComplexConjugation).is_ok());
        assert_eq!(
            build_group(Family::UnitaryU, 3, Involution::SymplecticType).unwrap_err(),
            RootDataError::OddRankSymplectic
        );
        assert_eq!(
            build_group(Family::ExceptionalG2, 2, Involution::ComplexConjugation).unwrap_err(),
            RootDataError::BadInvolution(Involution::ComplexConjugation, Family::ExceptionalG2)
        );
        assert!(build_group(Family::Symplectic, 2, Involution::Trivial).is_ok());
    }

    #[test]
    fn fundamentals_u3_sp4_g2() {
        let g = u(3);
        let fw = fundamental_weights(&g).unwrap();
        assert_eq!(
            fw,
            &[
                Weight(vec![1, 0, 0]),
                Weight(vec![1, 1, 0]),
                Weight(vec![1, 1, 1])
            ]
        );
        let sp = build_group(Family::Symplectic, 2, Involution::Trivial).unwrap();
        assert_eq!(
            fundamental_weights(&sp).unwrap(),
            &[Weight(vec![1, 0]), Weight(vec![1, 1])]
        );
        let t = build_group(Family::Torus, 2, Involution::ComplexConjugation).unwrap();
        assert!(fundamental_weights(&t).is_err());
    }

    #[test]
    fn orbits() {
        let g = u(3);
        let orb = weyl_orbit(&g, &Weight(vec![1, 0, 0]));
        assert_eq!(orb.len(), 3);

        let sp = build_group(Family::Symplectic, 2, Involution::Trivial).unwrap();
        let orb = weyl_orbit(&sp, &Weight(vec![1, 0]));
        assert_eq!(orb.len(), 4);
        assert!(orb.contains(&Weight(vec![-1, 0])));

        // Short-root orbit of G2 has size 6; with the zero weight this is the
        // 7-dimensional representation.
        let g2 = build_group(Family::ExceptionalG2, 2, Involution::Trivial).unwrap();
        let orb = weyl_orbit(&g2, &Weight(vec![1, 0]));
        assert_eq!(orb.len(), 6);
        let orb2 = weyl_orbit(&g2, &Weight(vec![0, 1]));
        assert_eq!(orb2.len(), 6);
    }

    #[test]
    fn g2_weyl_group_order_by_closure() {
        // Enumerate the group generated by the two simple reflections acting
        // on a regular weight; the orbit of a regular weight is free.
        let g2 = build_group(Family::ExceptionalG2, 2, Involution::Trivial).unwrap();
        let orb = weyl_orbit(&g2, &Weight(vec![1, 2]));
        assert_eq!(orb.len() as u64, g2.weyl_order());
    }

    #[test]
    fn involution_squares_to_identity() {
        for g in [
            u(4),
            build_group(Family::UnitaryU, 4, Involution::SymplecticType).unwrap(),
            build_group(Family::SpecialUnitary, 3, Involution::Trivial).unwrap(),
            build_group(Family::Symplectic, 2, Involution::Trivial).unwrap(),
            build_group(Family::ExceptionalG2, 2, Involution::Trivial).unwrap(),
        ] {
            let tau = involution_weight_map(&g);
            for w in [Weight(vec![1, 0, 0, 0]), Weight(vec![2, -1, 3, 0])] {
                if w.0.len() != g.lattice_rank {
                    continue;
                }
                assert_eq!(tau.apply(&tau.apply(&w)), w);
                assert_eq!(conj_weight(&g, &conj_weight(&g, &w)), g.normalize(&w));
            }
        }
    }

    #[test]
    fn su3_conj_swaps_standard_and_dual() {
        let g = build_group(Family::SpecialUnitary, 3, Involution::Trivial).unwrap();
        // Highest weight of the standard goes to the highest weight of the
        // dual under w ↦ -τ(w).
        let std_hw = Weight(vec![1, 0, 0]);
        let dual_hw = Weight(vec![1, 1, 0]);
        assert_eq!(conj_weight(&g, &std_hw), dual_hw);
        assert_eq!(conj_weight(&g, &dual_hw), std_hw);
    }

    #[test]
    fn orbit_sizes_divide_weyl_order() {
        let sp = build_group(Family::Symplectic, 3, Involution::Trivial).unwrap();
        for w in [
            Weight(vec![1, 0, 0]),
            Weight(vec![1, 1, 0]),
            Weight(vec![2, 1, 0]),
        ] {
            let orb = weyl_orbit(&sp, &w);
            assert_eq!(sp.weyl_order() % orb.len() as u64, 0);
        }
    }
}
