//! Exact arithmetic in the graded coefficient rings: `KR*(pt)`, `K*(+)`,
//! and the equivariant coefficient ring `KR*_G(pt)` with the
//! realification/complexification maps.
//!
//! `KR*(pt) = Z[η, μ]/(2η, η³, μη, μ² - 4)` with `η` in degree -1 and `μ`
//! in degree -4; `K*(+) = Z[β]/(β⁴ - 1)` with `β` in degree -2.
//!
//! An element of `KR*_G(pt)` is stored on the basis
//! `(RR(G,R) ⊕ RH(G,R)) ⊗ {1, η, η², μ}  ⊕  r(R(G,C) ⊗ K*(+))`:
//! the free part maps each of the four point classes to an integer
//! combination of R-tagged and H-tagged irreducibles (H-tagged symbols
//! carry intrinsic degree -4), and the r part carries one slot per
//! (canonical complex-type irreducible, β-power). η and η² coefficients
//! are reduced mod 2, so normal forms are unique and equality is
//! structural.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::charalg::{classify_type, irrep_product, Algebra, RepType};
use crate::rootdata::{conj_weight, GroupSpec, Weight};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoeffError {
    #[error("elements belong to different groups")]
    MixedGroup,
}

/// Scalar in `KR*(pt)`: integer coefficients on {1, η, η², μ}, with the η
/// coefficients stored mod 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
pub struct KrPt {
    pub one: i64,
    pub eta: u8,
    pub eta2: u8,
    pub mu: i64,
}

impl KrPt {
    pub const ZERO: KrPt = KrPt { one: 0, eta: 0, eta2: 0, mu: 0 };
    pub const ONE: KrPt = KrPt { one: 1, eta: 0, eta2: 0, mu: 0 };
    pub const ETA: KrPt = KrPt { one: 0, eta: 1, eta2: 0, mu: 0 };
    pub const ETA2: KrPt = KrPt { one: 0, eta: 0, eta2: 1, mu: 0 };
    pub const MU: KrPt = KrPt { one: 0, eta: 0, eta2: 0, mu: 1 };

    pub fn integer(c: i64) -> KrPt {
        KrPt { one: c, ..KrPt::ZERO }
    }

    pub fn is_zero(&self) -> bool {
        *self == KrPt::ZERO
    }

    pub fn add(&self, o: &KrPt) -> KrPt {
        KrPt {
            one: self.one + o.one,
            eta: (self.eta + o.eta) % 2,
            eta2: (self.eta2 + o.eta2) % 2,
            mu: self.mu + o.mu,
        }
    }

    pub fn scale(&self, k: i64) -> KrPt {
        KrPt {
            one: self.one * k,
            eta: (self.eta as i64 * k).rem_euclid(2) as u8,
            eta2: (self.eta2 as i64 * k).rem_euclid(2) as u8,
            mu: self.mu * k,
        }
    }

    /// Product under 2η = 0, η³ = 0, μη = 0, μ² = 4.
    pub fn mul(&self, o: &KrPt) -> KrPt {
        let m2 = |x: i64| x.rem_euclid(2) as u8;
        KrPt {
            one: self.one * o.one + 4 * self.mu * o.mu,
            eta: m2(self.one * o.eta as i64 + self.eta as i64 * o.one),
            eta2: m2(
                self.one * o.eta2 as i64
                    + self.eta2 as i64 * o.one
                    + self.eta as i64 * o.eta as i64,
            ),
            mu: self.one * o.mu + self.mu * o.one,
        }
    }

    /// `r(β^j)`: 2, η², μ, 0 for j ≡ 0..3 mod 4.
    pub fn r_beta(j: u8) -> KrPt {
        match j % 4 {
            0 => KrPt::integer(2),
            1 => KrPt::ETA2,
            2 => KrPt::MU,
            _ => KrPt::ZERO,
        }
    }
}

/// Z₈-degrees of the point-class slots 1, η, η², μ.
pub const SLOT_DEGS: [u8; 4] = [0, 7, 6, 4];

/// An element of `R(G) ⊗ K*(+)` on the (irreducible, β-power) basis.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct KClassElement {
    pub terms: BTreeMap<(Weight, u8), i64>,
}

impl KClassElement {
    pub fn zero() -> KClassElement {
        KClassElement::default()
    }

    pub fn insert(&mut self, u: Weight, beta: u8, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((u, beta % 4)) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, o: &KClassElement) -> KClassElement {
        let mut out = self.clone();
        for ((u, b), c) in &o.terms {
            out.insert(u.clone(), *b, *c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> KClassElement {
        let mut out = KClassElement::zero();
        for ((u, b), c) in &self.terms {
            out.insert(u.clone(), *b, c * k);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Ring product in `R(G) ⊗ K*(+)`.
pub fn kclass_mul(alg: &Algebra, a: &KClassElement, b: &KClassElement) -> KClassElement {
    let mut out = KClassElement::zero();
    for ((u1, b1), c1) in &a.terms {
        for ((u2, b2), c2) in &b.terms {
            let combo = irrep_product(alg, u1, u2);
            for (u, m) in combo.iter() {
                out.insert(u.clone(), (b1 + b2) % 4, c1 * c2 * m);
            }
        }
    }
    out
}

/// `σ̄*` on `R(G) ⊗ K*(+)`: conjugate-dual on classes, `β ↦ -β`.
pub fn kclass_conj(alg: &Algebra, a: &KClassElement) -> KClassElement {
    let mut out = KClassElement::zero();
    for ((u, b), c) in &a.terms {
        let sign = if b % 2 == 1 { -1 } else { 1 };
        out.insert(conj_weight(&alg.g, u), *b, c * sign);
    }
    out
}

/// An element of the coefficient ring `KR*_G(pt)` in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffElement {
    pub spec: GroupSpec,
    /// `parts[k]` maps an R- or H-tagged dominant weight to its integer
    /// coefficient against the point class `{1, η, η², μ}[k]`; η and η²
    /// coefficients are kept in {0,1}.
    pub parts: [BTreeMap<Weight, i64>; 4],
    /// Realified part: slot `(γ, i)` holds the coefficient of `r(γ·β^i)`
    /// for `γ` the canonical (lexicographically larger) member of a
    /// complex-type conjugate pair.
    pub rpart: BTreeMap<(Weight, u8), i64>,
}

impl CoeffElement {
    pub fn zero(spec: GroupSpec) -> CoeffElement {
        CoeffElement {
            spec,
            parts: Default::default(),
            rpart: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|p| p.is_empty()) && self.rpart.is_empty()
    }

    pub fn integer(alg: &Algebra, c: i64) -> CoeffElement {
        let mut out = CoeffElement::zero(alg.spec());
        out.add_slot(0, &Weight::zero(alg.g.lattice_rank), c);
        out
    }

    pub fn one(alg: &Algebra) -> CoeffElement {
        CoeffElement::integer(alg, 1)
    }

    pub fn eta(alg: &Algebra) -> CoeffElement {
        let mut out = CoeffElement::zero(alg.spec());
        out.add_slot(1, &Weight::zero(alg.g.lattice_rank), 1);
        out
    }

    pub fn eta2(alg: &Algebra) -> CoeffElement {
        let mut out = CoeffElement::zero(alg.spec());
        out.add_slot(2, &Weight::zero(alg.g.lattice_rank), 1);
        out
    }

    pub fn mu(alg: &Algebra) -> CoeffElement {
        let mut out = CoeffElement::zero(alg.spec());
        out.add_slot(3, &Weight::zero(alg.g.lattice_rank), 1);
        out
    }

    /// An R-tagged irreducible as a degree-0 class, or an H-tagged one as
    /// the degree -4 class Θ_U. Complex-type classes are not free
    /// coefficients; they enter through [`realify`].
    pub fn from_irrep(alg: &Algebra, u: &Weight) -> CoeffElement {
        let t = classify_type(alg, u).expect("dominant weight");
        assert!(
            t != RepType::C,
            "complex-type class is not a free coefficient"
        );
        let mut out = CoeffElement::zero(alg.spec());
        out.add_slot(0, u, 1);
        out
    }

    pub fn add_slot(&mut self, slot: usize, u: &Weight, c: i64) {
        let c = if slot == 1 || slot == 2 { c.rem_euclid(2) } else { c };
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.parts[slot].entry(u.clone()) {
            Entry::Occupied(mut e) => {
                let mut v = *e.get() + c;
                if slot == 1 || slot == 2 {
                    v = v.rem_euclid(2);
                }
                if v == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
            Entry::Vacant(vac) => {
                vac.insert(c);
            }
        }
    }

    /// Adds `pt · U` with `U` an R/H-tagged irreducible.
    pub fn add_pt(&mut self, u: &Weight, pt: &KrPt) {
        self.add_slot(0, u, pt.one);
        self.add_slot(1, u, pt.eta as i64);
        self.add_slot(2, u, pt.eta2 as i64);
        self.add_slot(3, u, pt.mu);
    }

    /// Adds `k · r(U · β^j)`, folding by the type of `U`:
    /// R-tagged components via `U·r(β^j)`, H-tagged via `Θ_U·r(β^{j+2})`,
    /// C-tagged into the canonical r slot with the `(-1)^j` pair rewrite.
    pub fn add_r(&mut self, alg: &Algebra, u: &Weight, j: u8, k: i64) {
        if k == 0 {
            return;
        }
        match classify_type(alg, u).expect("dominant weight") {
            RepType::R => {
                let pt = KrPt::r_beta(j).scale(k);
                self.add_pt(u, &pt);
            }
            RepType::H => {
                let pt = KrPt::r_beta(j + 2).scale(k);
                self.add_pt(u, &pt);
            }
            RepType::C => {
                let cu = conj_weight(&alg.g, u);
                let (canon, sign) = if *u > cu {
                    (u.clone(), 1)
                } else {
                    (cu, if j % 2 == 1 { -1 } else { 1 })
                };
                use std::collections::btree_map::Entry;
                match self.rpart.entry((canon, j % 4)) {
                    Entry::Occupied(mut e) => {
                        *e.get_mut() += k * sign;
                        if *e.get() == 0 {
                            e.remove();
                        }
                    }
                    Entry::Vacant(v) => {
                        v.insert(k * sign);
                    }
                }
            }
        }
    }

    pub fn add(&self, o: &CoeffElement) -> CoeffElement {
        assert_eq!(self.spec, o.spec, "mixed groups in coefficient addition");
        let mut out = self.clone();
        for slot in 0..4 {
            for (w, c) in &o.parts[slot] {
                out.add_slot(slot, w, *c);
            }
        }
        for ((g, i), c) in &o.rpart {
            use std::collections::btree_map::Entry;
            match out.rpart.entry((g.clone(), *i)) {
                Entry::Occupied(mut e) => {
                    *e.get_mut() += c;
                    if *e.get() == 0 {
                        e.remove();
                    }
                }
                Entry::Vacant(v) => {
                    v.insert(*c);
                }
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> CoeffElement {
        let mut out = CoeffElement::zero(self.spec);
        for slot in 0..4 {
            for (w, c) in &self.parts[slot] {
                out.add_slot(slot, w, c * k);
            }
        }
        for ((g, i), c) in &self.rpart {
            if c * k != 0 {
                out.rpart.insert((g.clone(), *i), c * k);
            }
        }
        out
    }

    pub fn neg(&self) -> CoeffElement {
        self.scale(-1)
    }

    pub fn sub(&self, o: &CoeffElement) -> CoeffElement {
        self.add(&o.neg())
    }

    /// Multiplication by η: slot shift 1→η→η², μ→0; kills the r part.
    pub fn times_eta(&self) -> CoeffElement {
        let mut out = CoeffElement::zero(self.spec);
        for (w, c) in &self.parts[0] {
            out.add_slot(1, w, *c);
        }
        for (w, c) in &self.parts[1] {
            out.add_slot(2, w, *c);
        }
        out
    }

    /// Multiplication by μ: 1→μ, μ→4·1, η,η²→0; β²-shift and doubling on
    /// the r part.
    pub fn times_mu(&self, alg: &Algebra) -> CoeffElement {
        let mut out = CoeffElement::zero(self.spec);
        for (w, c) in &self.parts[0] {
            out.add_slot(3, w, *c);
        }
        for (w, c) in &self.parts[3] {
            out.add_slot(0, w, 4 * c);
        }
        for ((g, i), c) in &self.rpart {
            out.add_r(alg, g, (i + 2) % 4, 2 * c);
        }
        out
    }

    /// Z₈-degrees of the stored homogeneous pieces.
    pub fn degrees(&self, alg: &Algebra) -> std::collections::BTreeSet<u8> {
        let mut out = std::collections::BTreeSet::new();
        for slot in 0..4 {
            for w in self.parts[slot].keys() {
                let t = classify_type(alg, w).expect("dominant");
                let d = (SLOT_DEGS[slot] + if t == RepType::H { 4 } else { 0 }) % 8;
                out.insert(d);
            }
        }
        for (_, i) in self.rpart.keys() {
            out.insert(((8 - 2 * (*i as i32)) % 8) as u8);
        }
        out
    }
}

/// Normal-form product in `KR*_G(pt)`.
pub fn coeff_mul(
    alg: &Algebra,
    a: &CoeffElement,
    b: &CoeffElement,
) -> Result<CoeffElement, CoeffError> {
    if a.spec != b.spec {
        return Err(CoeffError::MixedGroup);
    }
    let mut out = CoeffElement::zero(a.spec);
    let unit = |slot: usize, c: i64| -> KrPt {
        match slot {
            0 => KrPt::integer(c),
            1 => KrPt::ETA.scale(c),
            2 => KrPt::ETA2.scale(c),
            _ => KrPt::MU.scale(c),
        }
    };

    // free × free
    for si in 0..4 {
        for sj in 0..4 {
            if a.parts[si].is_empty() || b.parts[sj].is_empty() {
                continue;
            }
            for (u1, c1) in &a.parts[si] {
                for (u2, c2) in &b.parts[sj] {
                    let pt = unit(si, *c1).mul(&unit(sj, *c2));
                    if pt.is_zero() {
                        continue;
                    }
                    mul_basis_reps(alg, u1, u2, &pt, &mut out);
                }
            }
        }
    }

    // free × r in both orders: x·r(y) = r(c(x)·y).
    for (x, y) in [(a, b), (b, a)] {
        for ((g, i), cr) in &y.rpart {
            for slot in [0usize, 3] {
                if x.parts[slot].is_empty() {
                    continue;
                }
                // c(1) = 1; c(μ) = 2β²; c(η) = c(η²) = 0.
                let (bshift, scalar) = if slot == 0 { (0u8, 1i64) } else { (2u8, 2i64) };
                for (u1, c1) in &x.parts[slot] {
                    let t1 = classify_type(alg, u1).expect("dominant");
                    // c(V) = V; c(Θ_U) = β²·U.
                    let ushift = if t1 == RepType::H { 2 } else { 0 };
                    let combo = irrep_product(alg, u1, g);
                    for (u, m) in combo.iter() {
                        out.add_r(alg, u, (i + bshift + ushift) % 4, c1 * cr * scalar * m);
                    }
                }
            }
        }
    }

    // r × r: r(x)·r(y) = r(x·(y + σ̄*y)).
    for ((g1, i), c1) in &a.rpart {
        for ((g2, j), c2) in &b.rpart {
            let beta = (i + j) % 4;
            let g2c = conj_weight(&alg.g, g2);
            let conj_sign = if j % 2 == 1 { -1 } else { 1 };
            for (other, sign) in [(g2, 1i64), (&g2c, conj_sign)] {
                let combo = irrep_product(alg, g1, other);
                for (u, m) in combo.iter() {
                    out.add_r(alg, u, beta, c1 * c2 * sign * m);
                }
            }
        }
    }

    Ok(out)
}

/// Adds `pt · (U₁·U₂)` for R/H-tagged basis irreducibles, re-housing each
/// constituent: same-side constituents land directly, cross-side ones pair
/// up into μ-multiples (a quaternionic constituent of a Real-side product
/// always has even multiplicity, and conversely), and complex-type pairs
/// fold into the r part through `(γ + σ̄*γ)·x = r(γ·c(x))`.
fn mul_basis_reps(alg: &Algebra, u1: &Weight, u2: &Weight, pt: &KrPt, out: &mut CoeffElement) {
    let t1 = classify_type(alg, u1).expect("dominant");
    let t2 = classify_type(alg, u2).expect("dominant");
    debug_assert!(t1 != RepType::C && t2 != RepType::C);
    let rh_side = (t1 == RepType::H) ^ (t2 == RepType::H);
    let combo = irrep_product(alg, u1, u2);
    for (u, m) in combo.iter() {
        match classify_type(alg, u).expect("dominant") {
            t @ (RepType::R | RepType::H) => {
                let needs_mu = (t == RepType::H) != rh_side;
                if needs_mu {
                    debug_assert!(m % 2 == 0, "cross-side constituents pair up");
                    let pt2 = pt.mul(&KrPt::MU).scale(m / 2);
                    out.add_pt(u, &pt2);
                } else {
                    out.add_pt(u, &pt.scale(*m));
                }
            }
            RepType::C => {
                // Handle each conjugate pair once, from its canonical member.
                let cu = conj_weight(&alg.g, u);
                if *u < cu {
                    continue;
                }
                debug_assert_eq!(combo.get(&cu), Some(m), "conjugate pairs match");
                out.add_r(alg, u, 0, pt.one * m);
                out.add_r(alg, u, 2, 2 * pt.mu * m);
            }
        }
    }
}

/// Complexification `c: KR*_G(pt) → R(G) ⊗ K*(+)`:
/// `c(1)=1`, `c(η)=0`, `c(μ)=2β²`, `c(Θ_U)=β²·U`, `c∘r = 1 + σ̄*`.
pub fn complexify(alg: &Algebra, a: &CoeffElement) -> KClassElement {
    let mut out = KClassElement::zero();
    for (slot, bshift, scalar) in [(0usize, 0u8, 1i64), (3, 2, 2)] {
        for (u, c) in &a.parts[slot] {
            let t = classify_type(alg, u).expect("dominant");
            let ushift = if t == RepType::H { 2 } else { 0 };
            out.insert(u.clone(), (bshift + ushift) % 4, c * scalar);
        }
    }
    for ((g, i), c) in &a.rpart {
        out.insert(g.clone(), *i, *c);
        let sign = if i % 2 == 1 { -1 } else { 1 };
        out.insert(conj_weight(&alg.g, g), *i, c * sign);
    }
    out
}

/// Realification `r: R(G) ⊗ K*(+) → KR*_G(pt)`: additive, folding
/// R/H-tagged components into the free part via `r(c(y)·β^i) = y·r(β^i)`.
pub fn realify(alg: &Algebra, x: &KClassElement) -> CoeffElement {
    let mut out = CoeffElement::zero(alg.spec());
    for ((u, i), c) in &x.terms {
        out.add_r(alg, u, *i, *c);
    }
    out
}

/// Abelian-group description of `KR^{-q}_G(pt)` with ranks computed from
/// the type counts `(r, s, t)` of the fundamental table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRank {
    pub q: u8,
    pub description: String,
    pub free_rank: usize,
    pub torsion2_rank: usize,
}

pub fn degree_rank(alg: &Algebra, q: u8) -> DegreeRank {
    let (r, s, t) = alg.type_counts();
    let (description, free_rank, torsion2_rank) = match q % 8 {
        0 => ("RR(G)".to_string(), r + s + t, 0),
        1 => ("RR(G)/rho(R(G))".to_string(), 0, r),
        2 => ("R(G)/j(RH(G))".to_string(), t, r),
        3 => ("0".to_string(), 0, 0),
        4 => ("RH(G)".to_string(), r + s + t, 0),
        5 => ("RH(G)/eta(R(G))".to_string(), 0, s),
        6 => ("R(G)/i(RR(G))".to_string(), t, s),
        _ => ("0".to_string(), 0, 0),
    };
    DegreeRank {
        q: q % 8,
        description,
        free_rank,
        torsion2_rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charalg::Algebra;
    use crate::rootdata::{build_group, Family, Involution};

    fn u2() -> Algebra {
        Algebra::new(build_group(Family::UnitaryU, 2, Involution::ComplexConjugation).unwrap())
    }

    fn su3() -> Algebra {
        Algebra::new(build_group(Family::SpecialUnitary, 3, Involution::Trivial).unwrap())
    }

    fn sp4() -> Algebra {
        Algebra::new(build_group(Family::Symplectic, 2, Involution::Trivial).unwrap())
    }

    #[test]
    fn kr_pt_relations() {
        let eta = KrPt::ETA;
        let mu = KrPt::MU;
        assert_eq!(eta.scale(2), KrPt::ZERO);
        assert_eq!(eta.mul(&eta).mul(&eta), KrPt::ZERO);
        assert_eq!(mu.mul(&eta), KrPt::ZERO);
        assert_eq!(mu.mul(&mu), KrPt::integer(4));
        assert_eq!(eta.mul(&eta), KrPt::ETA2);
    }

    #[test]
    fn eta_mu_and_mu_squared() {
        let a = u2();
        let eta = CoeffElement::eta(&a);
        let mu = CoeffElement::mu(&a);
        assert!(coeff_mul(&a, &eta, &mu).unwrap().is_zero());
        let musq = coeff_mul(&a, &mu, &mu).unwrap();
        assert_eq!(musq, CoeffElement::integer(&a, 4));
        let eta3 = coeff_mul(&a, &coeff_mul(&a, &eta, &eta).unwrap(), &eta).unwrap();
        assert!(eta3.is_zero());
    }

    #[test]
    fn complexify_table() {
        let a = u2();
        assert!(complexify(&a, &CoeffElement::eta(&a)).is_zero());
        let c_mu = complexify(&a, &CoeffElement::mu(&a));
        let mut expect = KClassElement::zero();
        expect.insert(Weight::zero(2), 2, 2);
        assert_eq!(c_mu, expect);
        let c_one = complexify(&a, &CoeffElement::one(&a));
        let mut expect1 = KClassElement::zero();
        expect1.insert(Weight::zero(2), 0, 1);
        assert_eq!(c_one, expect1);
    }

    #[test]
    fn realify_table() {
        let a = u2();
        let beta = |j: u8| {
            let mut x = KClassElement::zero();
            x.insert(Weight::zero(2), j, 1);
            realify(&a, &x)
        };
        assert_eq!(beta(0), CoeffElement::integer(&a, 2));
        assert_eq!(beta(1), CoeffElement::eta2(&a));
        assert_eq!(beta(2), CoeffElement::mu(&a));
        assert!(beta(3).is_zero());
    }

    #[test]
    fn realify_r_tagged_with_beta() {
        // r(ρ_R ⊗ β) = ρ_R · η² for an R-tagged class.
        let a = u2();
        let std = a.fund_weight(0);
        let mut x = KClassElement::zero();
        x.insert(std.clone(), 1, 1);
        let got = realify(&a, &x);
        let mut expect = CoeffElement::zero(a.spec());
        expect.add_slot(2, &std, 1);
        assert_eq!(got, expect);
    }

    #[test]
    fn rc_is_doubling_cr_is_one_plus_conj() {
        let su3 = su3();
        let std = su3.fund_weight(0);
        let adj = Weight(vec![2, 1, 0]);
        // rc on a free element and on an r element.
        let v = CoeffElement::from_irrep(&su3, &adj);
        let rc = realify(&su3, &complexify(&su3, &v));
        assert_eq!(rc, v.scale(2));

        let mut r_gamma = CoeffElement::zero(su3.spec());
        r_gamma.add_r(&su3, &std, 1, 1);
        let rc2 = realify(&su3, &complexify(&su3, &r_gamma));
        assert_eq!(rc2, r_gamma.scale(2));

        // cr = 1 + σ̄* on R(G)⊗K(+).
        let mut x = KClassElement::zero();
        x.insert(std.clone(), 1, 3);
        x.insert(adj, 2, -2);
        let cr = complexify(&su3, &realify(&su3, &x));
        let expect = x.add(&kclass_conj(&su3, &x));
        assert_eq!(cr, expect);
    }

    #[test]
    fn eta_kills_r_part_mu_shifts() {
        let su3 = su3();
        let std = su3.fund_weight(0);
        let mut r_gamma = CoeffElement::zero(su3.spec());
        r_gamma.add_r(&su3, &std, 1, 1);
        let eta = CoeffElement::eta(&su3);
        assert!(coeff_mul(&su3, &eta, &r_gamma).unwrap().is_zero());

        let mu = CoeffElement::mu(&su3);
        let got = coeff_mul(&su3, &mu, &r_gamma).unwrap();
        let mut expect = CoeffElement::zero(su3.spec());
        expect.add_r(&su3, &std, 3, 2);
        assert_eq!(got, expect);
        assert_eq!(got, r_gamma.times_mu(&su3));
    }

    #[test]
    fn r_of_beta_squares_to_zero() {
        // r(β)·r(β) folds through η²·η² = η⁴ = 0.
        let a = u2();
        let mut x = KClassElement::zero();
        x.insert(Weight::zero(2), 1, 1);
        let rb = realify(&a, &x);
        assert_eq!(rb, CoeffElement::eta2(&a));
        assert!(coeff_mul(&a, &rb, &rb).unwrap().is_zero());
    }

    #[test]
    fn theta_arithmetic_on_sp4() {
        let a = sp4();
        let theta = CoeffElement::from_irrep(&a, &Weight(vec![1, 0]));
        let sq = coeff_mul(&a, &theta, &theta).unwrap();
        assert!(!sq.is_zero());
        assert!(sq.rpart.is_empty());
        // Θ² has degree -8 ≡ 0: all contributions in the 1-slot.
        assert!(sq.parts[1].is_empty() && sq.parts[2].is_empty() && sq.parts[3].is_empty());
        // (μ·Θ)² = μ²·Θ² = 4Θ².
        let mu_theta = theta.times_mu(&a);
        let sq2 = coeff_mul(&a, &mu_theta, &mu_theta).unwrap();
        assert_eq!(sq2, sq.scale(4));
    }

    #[test]
    fn c_is_ring_map_on_samples() {
        let su3 = su3();
        let std = su3.fund_weight(0);
        let adj = Weight(vec![2, 1, 0]);
        let mut a = CoeffElement::from_irrep(&su3, &adj);
        a = a.add(&CoeffElement::mu(&su3));
        let mut b = CoeffElement::one(&su3);
        b.add_r(&su3, &std, 1, 1);
        b = b.add(&CoeffElement::eta(&su3));
        let lhs = complexify(&su3, &coeff_mul(&su3, &a, &b).unwrap());
        let rhs = kclass_mul(&su3, &complexify(&su3, &a), &complexify(&su3, &b));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_rank_table() {
        let su3 = su3();
        assert_eq!(su3.type_counts(), (0, 0, 1));
        let d0 = degree_rank(&su3, 0);
        assert_eq!((d0.free_rank, d0.torsion2_rank), (1, 0));
        assert_eq!(degree_rank(&su3, 3).free_rank, 0);
        assert_eq!(degree_rank(&su3, 7).free_rank, 0);
        assert_eq!(degree_rank(&su3, 2).free_rank, 1);

        let sp4 = sp4();
        assert_eq!(sp4.type_counts(), (1, 1, 0));
        let d1 = degree_rank(&sp4, 1);
        assert_eq!((d1.free_rank, d1.torsion2_rank), (0, 1));
        let d5 = degree_rank(&sp4, 5);
        assert_eq!((d5.free_rank, d5.torsion2_rank), (0, 1));
    }

    #[test]
    fn mixed_group_rejected() {
        let a = u2();
        let b = sp4();
        let x = CoeffElement::one(&a);
        let y = CoeffElement::one(&b);
        assert_eq!(coeff_mul(&a, &x, &y).unwrap_err(), CoeffError::MixedGroup);
    }
}
