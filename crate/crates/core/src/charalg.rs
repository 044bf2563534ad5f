//! Exact character arithmetic over the weight lattice: irreducible
//! characters by Freudenthal's recursion, tensor/exterior-power
//! decomposition, Adams operations, the induced involution `σ̄*_G`, the
//! real/complex/quaternionic type of an irreducible, and the expression of
//! a virtual representation as a polynomial in the fundamental classes.
//!
//! All arithmetic is integer-exact. Characters are Weyl-invariant weight
//! multisets; decomposition is by iterated highest-weight subtraction,
//! which terminates because the dominance-refining height functional
//! strictly decreases.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use serde::Serialize;
use thiserror::Error;

use crate::rootdata::{
    build_group, conj_weight, fundamental_weights, Family, Group, GroupSpec, Involution,
    RootDataError, Weight,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharError {
    #[error("weight is not dominant")]
    NonDominant,
    #[error("character is not Weyl-invariant")]
    NonInvariantInput,
    #[error("exterior power of a virtual class")]
    VirtualInput,
    #[error("irreducible type not determined by the twisted classification tables")]
    UnclassifiableTwisted,
    #[error("class is not a polynomial in the fundamental representations")]
    NotPolynomial,
    #[error(transparent)]
    RootData(#[from] RootDataError),
}

/// Commuting-field type of an irreducible relative to the involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum RepType {
    R,
    C,
    H,
}

/// A finitely-supported, Weyl-invariant integer weight multiset.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Character {
    pub support: BTreeMap<Weight, i64>,
}

impl Character {
    pub fn zero() -> Character {
        Character::default()
    }

    pub fn trivial(rank: usize) -> Character {
        let mut support = BTreeMap::new();
        support.insert(Weight::zero(rank), 1);
        Character { support }
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Virtual dimension: the sum of all multiplicities.
    pub fn dim(&self) -> i64 {
        self.support.values().sum()
    }

    pub fn insert(&mut self, w: Weight, m: i64) {
        if m == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.support.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += m;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(m);
            }
        }
    }

    pub fn add(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, m) in &other.support {
            out.insert(w.clone(), *m);
        }
        out
    }

    pub fn sub(&self, other: &Character) -> Character {
        let mut out = self.clone();
        for (w, m) in &other.support {
            out.insert(w.clone(), -*m);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Character {
        if k == 0 {
            return Character::zero();
        }
        Character {
            support: self
                .support
                .iter()
                .map(|(w, m)| (w.clone(), m * k))
                .collect(),
        }
    }

    /// Support convolution (the character of the tensor product).
    pub fn mul(&self, other: &Character, g: &Group) -> Character {
        let mut out = Character::zero();
        for (w1, m1) in &self.support {
            for (w2, m2) in &other.support {
                out.insert(g.normalize(&w1.add(w2)), m1 * m2);
            }
        }
        out
    }
}

/// A virtual representation in the irreducible basis: dominant weight to
/// integer coefficient.
pub type RepCombo = BTreeMap<Weight, i64>;

/// A decomposed virtual representation with the type of each constituent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepClass {
    pub parts: Vec<(Weight, i64, RepType)>,
}

/// An integer polynomial in the fundamental classes. Exponent vectors are
/// indexed by the group's fixed fundamental ordering.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FundPoly {
    pub terms: BTreeMap<Vec<u16>, i64>,
}

impl FundPoly {
    pub fn zero() -> FundPoly {
        FundPoly::default()
    }

    pub fn constant(nvars: usize, c: i64) -> FundPoly {
        let mut p = FundPoly::zero();
        if c != 0 {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> FundPoly {
        let mut exps = vec![0u16; nvars];
        exps[i] = 1;
        let mut p = FundPoly::zero();
        p.terms.insert(exps, 1);
        p
    }

    pub fn monomial(exps: Vec<u16>, c: i64) -> FundPoly {
        let mut p = FundPoly::zero();
        if c != 0 {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nvars(&self) -> Option<usize> {
        self.terms.keys().next().map(|k| k.len())
    }

    pub fn add_assign_term(&mut self, exps: Vec<u16>, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(exps.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, other: &FundPoly) -> FundPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_assign_term(e.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &FundPoly) -> FundPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_assign_term(e.clone(), -*c);
        }
        out
    }

    pub fn neg(&self) -> FundPoly {
        FundPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> FundPoly {
        if k == 0 {
            return FundPoly::zero();
        }
        FundPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &FundPoly) -> FundPoly {
        let mut out = FundPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps: Vec<u16> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_assign_term(exps, c1 * c2);
            }
        }
        out
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> FundPoly {
        let mut out = FundPoly::zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut exps = e.clone();
            exps[i] -= 1;
            out.add_assign_term(exps, c * e[i] as i64);
        }
        out
    }

    /// Reduces every coefficient mod 2 (to {0,1}).
    pub fn mod2(&self) -> FundPoly {
        let mut out = FundPoly::zero();
        for (e, c) in &self.terms {
            if c.rem_euclid(2) == 1 {
                out.terms.insert(e.clone(), 1);
            }
        }
        out
    }

    /// Exact division by an integer; panics if not exact (internal use on
    /// polynomials known to be divisible).
    pub fn div_exact(&self, k: i64) -> FundPoly {
        FundPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    assert!(c % k == 0, "inexact polynomial division by {k}");
                    (e.clone(), c / k)
                })
                .collect(),
        }
    }
}

/// A C-type fundamental pair: indices into the fundamental list.
/// `canon` is the member with the lexicographically larger highest weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CPair {
    pub canon: usize,
    pub other: usize,
}

/// The group together with its character-theoretic caches and the type
/// data of its fundamental representations.
pub struct Algebra {
    pub g: Group,
    fund_chars: Vec<Character>,
    fund_dims: Vec<i64>,
    fund_types: Vec<RepType>,
    /// The involution permutation on fundamental indices (identity except
    /// on C-type pairs); `None` when the fundamentals are not closed under
    /// `σ̄*_G` (e.g. `U(n)` with the trivial involution).
    sigma_perm: Option<Vec<usize>>,
    cpairs: Vec<CPair>,
    irreps: RwLock<HashMap<Weight, Arc<Character>>>,
    types: RwLock<HashMap<Weight, RepType>>,
    polys: RwLock<HashMap<Weight, Arc<FundPoly>>>,
    prods: RwLock<HashMap<(Weight, Weight), Arc<RepCombo>>>,
}

impl Algebra {
    pub fn new(g: Group) -> Algebra {
        let mut alg = Algebra {
            g,
            fund_chars: Vec::new(),
            fund_dims: Vec::new(),
            fund_types: Vec::new(),
            sigma_perm: None,
            cpairs: Vec::new(),
            irreps: RwLock::new(HashMap::new()),
            types: RwLock::new(HashMap::new()),
            polys: RwLock::new(HashMap::new()),
            prods: RwLock::new(HashMap::new()),
        };
        if let Ok(fw) = fundamental_weights(&alg.g) {
            let fw: Vec<Weight> = fw.to_vec();
            for w in &fw {
                let ch = irrep_character(&alg, w).expect("fundamental weights are dominant");
                alg.fund_dims.push(ch.dim());
                alg.fund_chars.push(ch);
            }
            for w in &fw {
                let t = classify_type(&alg, w).expect("fundamentals are classifiable");
                alg.fund_types.push(t);
            }
            // σ̄*_G permutes the fundamentals iff each conjugate-dual of a
            // fundamental is again a fundamental.
            let mut perm = Vec::with_capacity(fw.len());
            let mut closed = true;
            for w in &fw {
                let cw = conj_weight(&alg.g, w);
                match fw.iter().position(|v| *v == cw) {
                    Some(j) => perm.push(j),
                    None => {
                        closed = false;
                        break;
                    }
                }
            }
            if closed {
                for (i, &j) in perm.iter().enumerate() {
                    if alg.fund_types[i] == RepType::C && i < j {
                        // Canonical member of the pair: lexicographically
                        // larger highest weight.
                        let canon = if fw[i] > fw[j] { i } else { j };
                        let other = if canon == i { j } else { i };
                        alg.cpairs.push(CPair { canon, other });
                    }
                }
                alg.sigma_perm = Some(perm);
            }
        } else {
            alg.sigma_perm = Some(Vec::new());
        }
        alg
    }

    pub fn from_spec(spec: GroupSpec) -> Result<Algebra, RootDataError> {
        Ok(Algebra::new(build_group(
            spec.family,
            spec.rank,
            spec.involution,
        )?))
    }

    pub fn spec(&self) -> GroupSpec {
        self.g.spec
    }

    pub fn n_fundamentals(&self) -> usize {
        self.fund_chars.len()
    }

    pub fn fund_char(&self, i: usize) -> &Character {
        &self.fund_chars[i]
    }

    pub fn fund_dim(&self, i: usize) -> i64 {
        self.fund_dims[i]
    }

    pub fn fund_type(&self, i: usize) -> RepType {
        self.fund_types[i]
    }

    pub fn fund_weight(&self, i: usize) -> Weight {
        fundamental_weights(&self.g).expect("has fundamentals")[i].clone()
    }

    /// Indices of R-tagged, H-tagged fundamentals and C-pairs: the (r, s, t)
    /// of the polynomial presentation of R(G).
    pub fn type_counts(&self) -> (usize, usize, usize) {
        let r = self.fund_types.iter().filter(|t| **t == RepType::R).count();
        let s = self.fund_types.iter().filter(|t| **t == RepType::H).count();
        (r, s, self.cpairs.len())
    }

    pub fn cpairs(&self) -> &[CPair] {
        &self.cpairs
    }

    /// The σ̄*_G permutation on fundamental indices, when defined.
    pub fn sigma_perm(&self) -> Option<&[usize]> {
        self.sigma_perm.as_deref()
    }

    /// σ̄*_G image of a fundamental index (requires a closed presentation).
    pub fn sigma_fund(&self, i: usize) -> usize {
        self.sigma_perm.as_ref().expect("closed presentation")[i]
    }

    /// True if the polynomial presentation of R(G) on the fundamentals is
    /// available and σ̄*-closed.
    pub fn has_presentation(&self) -> bool {
        self.sigma_perm.is_some() && !self.fund_chars.is_empty()
    }
}

fn simple_roots(g: &Group) -> Vec<Weight> {
    let n = g.lattice_rank;
    let e = |i: usize| -> Weight {
        let mut v = vec![0i64; n];
        v[i] = 1;
        Weight(v)
    };
    match g.spec.family {
        Family::UnitaryU | Family::SpecialUnitary => {
            (0..n - 1).map(|i| e(i).sub(&e(i + 1))).collect()
        }
        Family::Symplectic => {
            let mut v: Vec<Weight> = (0..n - 1).map(|i| e(i).sub(&e(i + 1))).collect();
            v.push(e(n - 1).scale(2));
            v
        }
        Family::ExceptionalG2 => vec![Weight(vec![2, -1]), Weight(vec![-3, 2])],
        Family::Torus | Family::FiniteProduct => Vec::new(),
    }
}

/// The full weight multiset of the irreducible with highest weight `hw`,
/// by Freudenthal's multiplicity recursion. Exact integer arithmetic
/// throughout; results are memoized on the algebra.
pub fn irrep_character(alg: &Algebra, hw: &Weight) -> Result<Character, CharError> {
    let g = &alg.g;
    let hw_n = g.normalize(hw);
    if !g.is_dominant(&hw_n) {
        return Err(CharError::NonDominant);
    }
    if let Some(ch) = alg.irreps.read().unwrap().get(&hw_n) {
        return Ok((**ch).clone());
    }
    let ch = freudenthal(g, &hw_n);
    alg.irreps
        .write()
        .unwrap()
        .insert(hw_n, Arc::new(ch.clone()));
    Ok(ch)
}

fn freudenthal(g: &Group, hw: &Weight) -> Character {
    if g.num_simple() == 0 {
        // Torus: one weight, multiplicity one.
        let mut support = BTreeMap::new();
        support.insert(hw.clone(), 1);
        return Character { support };
    }
    // For SU(n) the recursion runs in the ambient U(n) lattice (fixed
    // coordinate sum); the support is normalized at the end.
    let lam = hw.clone();
    let simples = simple_roots(g);
    let rho = g.rho().clone();
    let lam_rho = lam.add(&rho);
    let c2_lam = g.inner(&lam_rho, &lam_rho);

    let mut mults: HashMap<Weight, i64> = HashMap::new();
    mults.insert(lam.clone(), 1);
    let mut layer = vec![lam.clone()];

    while !layer.is_empty() {
        let mut next = std::collections::BTreeSet::new();
        for w in &layer {
            for alpha in &simples {
                let mu = w.sub(alpha);
                if mults.contains_key(&mu) || next.contains(&mu) {
                    continue;
                }
                // Freudenthal sum over weight strings above mu.
                let mut num: i64 = 0;
                for root in g.positive_roots() {
                    let mut k = 1i64;
                    loop {
                        let up = mu.add(&root.scale(k));
                        match mults.get(&up) {
                            Some(&m) => {
                                num += 2 * m * g.inner(&up, root);
                                k += 1;
                            }
                            None => break,
                        }
                    }
                }
                if num == 0 {
                    continue;
                }
                let mu_rho = mu.add(&rho);
                let den = c2_lam - g.inner(&mu_rho, &mu_rho);
                debug_assert!(den > 0 && num % den == 0, "Freudenthal division");
                mults.insert(mu.clone(), num / den);
                next.insert(mu);
            }
        }
        layer = next.into_iter().collect();
    }

    let mut ch = Character::zero();
    for (w, m) in mults {
        ch.insert(g.normalize(&w), m);
    }
    ch
}

/// Weyl dimension formula, used as an independent cross-check on
/// Freudenthal in the tests.
pub fn weyl_dim(g: &Group, hw: &Weight) -> i64 {
    if g.num_simple() == 0 {
        return 1;
    }
    let rho = g.rho();
    let lam_rho = hw.add(rho);
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for alpha in g.positive_roots() {
        num *= g.inner(&lam_rho, alpha) as i128;
        den *= g.inner(rho, alpha) as i128;
        let d = gcd(num.unsigned_abs(), den.unsigned_abs()) as i128;
        num /= d;
        den /= d;
    }
    debug_assert_eq!(den, 1);
    num as i64
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn is_weyl_invariant(g: &Group, a: &Character) -> bool {
    for (w, m) in &a.support {
        for i in 0..g.num_simple() {
            let v = g.simple_reflection(i, w);
            if a.support.get(&v).copied().unwrap_or(0) != *m {
                return false;
            }
        }
    }
    true
}

/// Decomposes a Weyl-invariant virtual character into the irreducible
/// basis by iterated highest-weight subtraction.
pub fn decompose_character(alg: &Algebra, a: &Character) -> RepCombo {
    let g = &alg.g;
    let mut work = a.clone();
    let mut out: RepCombo = BTreeMap::new();
    while !work.is_zero() {
        let lead = work
            .support
            .keys()
            .filter(|w| g.is_dominant(w))
            .max_by(|x, y| {
                g.height(x)
                    .cmp(&g.height(y))
                    .then_with(|| x.cmp(y))
            })
            .expect("Weyl-invariant character has a dominant weight")
            .clone();
        let m = work.support[&lead];
        *out.entry(lead.clone()).or_insert(0) += m;
        let ch = irrep_character(alg, &lead).expect("dominant");
        work = work.sub(&ch.scale(m));
    }
    out.retain(|_, v| *v != 0);
    out
}

/// Tensor-product decomposition of two characters, with type tags.
pub fn tensor_decompose(
    alg: &Algebra,
    a: &Character,
    b: &Character,
) -> Result<RepClass, CharError> {
    if !is_weyl_invariant(&alg.g, a) || !is_weyl_invariant(&alg.g, b) {
        return Err(CharError::NonInvariantInput);
    }
    let combo = decompose_character(alg, &a.mul(b, &alg.g));
    let mut parts = Vec::with_capacity(combo.len());
    for (w, m) in combo {
        let t = classify_type(alg, &w)?;
        parts.push((w, m, t));
    }
    Ok(RepClass { parts })
}

/// Product of two irreducibles in the irreducible basis, memoized.
pub fn irrep_product(alg: &Algebra, a: &Weight, b: &Weight) -> Arc<RepCombo> {
    let key = if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if let Some(c) = alg.prods.read().unwrap().get(&key) {
        return c.clone();
    }
    let ca = irrep_character(alg, &key.0).expect("dominant");
    let cb = irrep_character(alg, &key.1).expect("dominant");
    let combo = Arc::new(decompose_character(alg, &ca.mul(&cb, &alg.g)));
    alg.prods.write().unwrap().insert(key, combo.clone());
    combo
}

/// Adams operation `ψ^k`: scales every weight by `k`.
pub fn adams(g: &Group, k: i64, a: &Character) -> Character {
    let mut out = Character::zero();
    for (w, m) in &a.support {
        out.insert(g.normalize(&w.scale(k)), *m);
    }
    out
}

/// Exterior power by the Newton identity
/// `k·λ^k = Σ_{i=1..k} (-1)^{i-1} ψ^i · λ^{k-i}`, with exact division.
pub fn exterior_power(alg: &Algebra, k: usize, a: &Character) -> Result<Character, CharError> {
    let g = &alg.g;
    if decompose_character(alg, a).values().any(|&m| m < 0) {
        return Err(CharError::VirtualInput);
    }
    let mut lams: Vec<Character> = vec![Character::trivial(g.lattice_rank)];
    let psis: Vec<Character> = (1..=k as i64).map(|i| adams(g, i, a)).collect();
    for j in 1..=k {
        let mut acc = Character::zero();
        for i in 1..=j {
            let term = psis[i - 1].mul(&lams[j - i], g);
            acc = if i % 2 == 1 {
                acc.add(&term)
            } else {
                acc.sub(&term)
            };
        }
        let mut divided = Character::zero();
        for (w, m) in acc.support {
            assert!(m % j as i64 == 0, "Newton identity division must be exact");
            divided.insert(w, m / j as i64);
        }
        lams.push(divided);
    }
    Ok(lams.pop().unwrap())
}

/// The induced involution `σ̄*_G` on characters: weight support mapped by
/// `w ↦ -τ(w)`.
pub fn conj_dual(g: &Group, a: &Character) -> Character {
    let mut out = Character::zero();
    for (w, m) in &a.support {
        out.insert(conj_weight(g, w), *m);
    }
    out
}

/// Multiplicity of the trivial representation in a genuine character.
fn trivial_mult(alg: &Algebra, a: &Character) -> i64 {
    let combo = decompose_character(alg, a);
    combo
        .get(&Weight::zero(alg.g.lattice_rank))
        .copied()
        .unwrap_or(0)
}

/// Classifies the irreducible with highest weight `hw` as real, complex or
/// quaternionic type relative to the group involution.
///
/// For the trivial involution this is the Frobenius–Schur indicator
/// computed as `mult(1, Sym²χ) - mult(1, ∧²χ)` with
/// `Sym²χ = (χ² + ψ²χ)/2`. For the conjugation involution on `U(n)` (and
/// tori) every self-conjugate irreducible carries the coordinatewise Real
/// structure and is of real type; for the symplectic-type involution on
/// `U(2m)` the type alternates with the parity of `|λ|` (even exterior
/// powers are real, odd ones quaternionic, and the tensor-induced
/// structures propagate the rule to every irreducible).
pub fn classify_type(alg: &Algebra, hw: &Weight) -> Result<RepType, CharError> {
    let g = &alg.g;
    let hw_n = g.normalize(hw);
    if !g.is_dominant(&hw_n) {
        return Err(CharError::NonDominant);
    }
    if let Some(t) = alg.types.read().unwrap().get(&hw_n) {
        return Ok(*t);
    }
    let ch = irrep_character(alg, &hw_n)?;
    let t = if conj_dual(g, &ch) != ch {
        RepType::C
    } else {
        match g.spec.involution {
            Involution::Trivial => {
                let sq = ch.mul(&ch, g);
                let psi2 = adams(g, 2, &ch);
                let sym2 = exact_half(&sq.add(&psi2));
                let alt2 = exact_half(&sq.sub(&psi2));
                let ind = trivial_mult(alg, &sym2) - trivial_mult(alg, &alt2);
                match ind {
                    1 => RepType::R,
                    -1 => RepType::H,
                    _ => unreachable!("self-dual irreducible has indicator ±1"),
                }
            }
            Involution::ComplexConjugation => RepType::R,
            Involution::SymplecticType => {
                let total: i64 = hw_n.0.iter().sum();
                if total.rem_euclid(2) == 0 {
                    RepType::R
                } else {
                    RepType::H
                }
            }
        }
    };
    alg.types.write().unwrap().insert(hw_n, t);
    Ok(t)
}

fn exact_half(a: &Character) -> Character {
    let mut out = Character::zero();
    for (w, m) in &a.support {
        assert!(m % 2 == 0, "character must be divisible by 2");
        out.insert(w.clone(), m / 2);
    }
    out
}

/// Exponents of `w` on the fundamental-weight basis, for the
/// leading-monomial elimination. `None` when the class is not polynomial
/// in the fundamentals (negative exponent).
fn fund_exponents(g: &Group, w: &Weight) -> Option<Vec<u16>> {
    let coords = match g.spec.family {
        Family::UnitaryU => {
            let mut c: Vec<i64> = w.0.windows(2).map(|p| p[0] - p[1]).collect();
            c.push(*w.0.last().unwrap());
            c
        }
        Family::SpecialUnitary => {
            let w = g.normalize(w);
            w.0.windows(2).map(|p| p[0] - p[1]).collect()
        }
        Family::Symplectic => {
            let mut c: Vec<i64> = w.0.windows(2).map(|p| p[0] - p[1]).collect();
            c.push(*w.0.last().unwrap());
            c
        }
        Family::ExceptionalG2 => w.0.clone(),
        Family::Torus | Family::FiniteProduct => return None,
    };
    if coords.iter().any(|&c| c < 0 || c > u16::MAX as i64) {
        return None;
    }
    Some(coords.iter().map(|&c| c as u16).collect())
}

/// The unique polynomial in the fundamental classes evaluating to the
/// given character, by iterated leading-monomial elimination in the
/// dominance order (ties broken lexicographically).
pub fn poly_of_character(alg: &Algebra, a: &Character) -> Result<FundPoly, CharError> {
    let g = &alg.g;
    let nv = alg.n_fundamentals();
    if nv == 0 {
        return Err(CharError::NotPolynomial);
    }
    let mut work = a.clone();
    let mut poly = FundPoly::zero();
    while !work.is_zero() {
        let lead = work
            .support
            .keys()
            .filter(|w| g.is_dominant(w))
            .max_by(|x, y| g.height(x).cmp(&g.height(y)).then_with(|| x.cmp(y)))
            .ok_or(CharError::NonInvariantInput)?
            .clone();
        let exps = fund_exponents(g, &lead).ok_or(CharError::NotPolynomial)?;
        let m = work.support[&lead];
        poly.add_assign_term(exps.clone(), m);
        let mut prod = Character::trivial(g.lattice_rank);
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                prod = prod.mul(&alg.fund_chars[i], g);
            }
        }
        work = work.sub(&prod.scale(m));
    }
    Ok(poly)
}

/// Polynomial of a decomposed class.
pub fn poly_in_fundamentals(alg: &Algebra, a: &RepClass) -> Result<FundPoly, CharError> {
    let mut out = FundPoly::zero();
    for (w, m, _) in &a.parts {
        out = out.add(&poly_of_irrep(alg, w)?.scale(*m));
    }
    Ok(out)
}

/// Memoized polynomial presentation of a single irreducible.
pub fn poly_of_irrep(alg: &Algebra, hw: &Weight) -> Result<Arc<FundPoly>, CharError> {
    let hw_n = alg.g.normalize(hw);
    if let Some(p) = alg.polys.read().unwrap().get(&hw_n) {
        return Ok(p.clone());
    }
    let ch = irrep_character(alg, &hw_n)?;
    let p = Arc::new(poly_of_character(alg, &ch)?);
    alg.polys.write().unwrap().insert(hw_n, p.clone());
    Ok(p)
}

/// Evaluates a fundamental-class polynomial back to a character.
pub fn eval_poly(alg: &Algebra, p: &FundPoly) -> Character {
    let g = &alg.g;
    let mut out = Character::zero();
    for (exps, c) in &p.terms {
        let mut prod = Character::trivial(g.lattice_rank);
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                prod = prod.mul(&alg.fund_chars[i], g);
            }
        }
        out = out.add(&prod.scale(*c));
    }
    out
}

/// Evaluates a polynomial at the dimensions of the fundamentals (the
/// augmentation).
pub fn eval_poly_dims(alg: &Algebra, p: &FundPoly) -> i64 {
    let mut out = 0i64;
    for (exps, c) in &p.terms {
        let mut prod = *c;
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                prod *= alg.fund_dims[i];
            }
        }
        out += prod;
    }
    out
}

/// σ̄*_G on a polynomial: permutes the fundamental symbols.
pub fn conj_poly(alg: &Algebra, p: &FundPoly) -> FundPoly {
    let perm = alg.sigma_perm.as_ref().expect("closed presentation");
    let mut out = FundPoly::zero();
    for (exps, c) in &p.terms {
        let mut e2 = vec![0u16; exps.len()];
        for (i, &e) in exps.iter().enumerate() {
            e2[perm[i]] = e;
        }
        out.add_assign_term(e2, *c);
    }
    out
}

/// Decomposes a polynomial into the irreducible basis.
pub fn decompose_poly(alg: &Algebra, p: &FundPoly) -> RepCombo {
    decompose_character(alg, &eval_poly(alg, p))
}

/// Recomposes an irreducible combo as a polynomial.
pub fn poly_of_combo(alg: &Algebra, combo: &RepCombo) -> Result<FundPoly, CharError> {
    let mut out = FundPoly::zero();
    for (w, m) in combo {
        out = out.add(&poly_of_irrep(alg, w)?.scale(*m));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_group, Family, Involution};

    fn alg(f: Family, r: usize, i: Involution) -> Algebra {
        Algebra::new(build_group(f, r, i).unwrap())
    }

    fn g2() -> Algebra {
        alg(Family::ExceptionalG2, 2, Involution::Trivial)
    }

    #[test]
    fn g2_fundamental_dimensions() {
        let a = g2();
        assert_eq!(a.fund_dim(0), 7);
        assert_eq!(a.fund_dim(1), 14);
    }

    #[test]
    fn u3_determinant_character() {
        let a = alg(Family::UnitaryU, 3, Involution::ComplexConjugation);
        let det = irrep_character(&a, &Weight(vec![1, 1, 1])).unwrap();
        assert_eq!(det.dim(), 1);
        assert_eq!(det.support.len(), 1);
    }

    #[test]
    fn sp4_dim5_freudenthal_vs_weyl() {
        let a = alg(Family::Symplectic, 2, Involution::Trivial);
        let hw = Weight(vec![1, 1]);
        let ch = irrep_character(&a, &hw).unwrap();
        assert_eq!(ch.dim(), 5);
        assert_eq!(weyl_dim(&a.g, &hw), 5);
        // dim of the standard
        assert_eq!(weyl_dim(&a.g, &Weight(vec![1, 0])), 4);
    }

    #[test]
    fn nondominant_rejected() {
        let a = g2();
        assert_eq!(
            irrep_character(&a, &Weight(vec![-1, 0])).unwrap_err(),
            CharError::NonDominant
        );
    }

    #[test]
    fn tensor_unit_law() {
        let a = g2();
        let triv = Character::trivial(2);
        let s1 = a.fund_char(0).clone();
        let rc = tensor_decompose(&a, &s1, &triv).unwrap();
        assert_eq!(rc.parts.len(), 1);
        assert_eq!(rc.parts[0].0, Weight(vec![1, 0]));
        assert_eq!(rc.parts[0].1, 1);
    }

    #[test]
    fn g2_sigma1_tensor_sigma1_contains_trivial_once() {
        let a = g2();
        let s1 = a.fund_char(0).clone();
        let rc = tensor_decompose(&a, &s1, &s1).unwrap();
        let total: i64 = rc.parts.iter().map(|(w, m, _)| m * weyl_dim(&a.g, w)).sum();
        assert_eq!(total, 49);
        let triv = rc
            .parts
            .iter()
            .find(|(w, _, _)| w.is_zero())
            .map(|(_, m, _)| *m);
        assert_eq!(triv, Some(1));
    }

    #[test]
    fn u2_plethysm_sym_alt_split() {
        let a = alg(Family::UnitaryU, 2, Involution::ComplexConjugation);
        let s = a.fund_char(0).clone();
        let sq = s.mul(&s, &a.g);
        let alt = exterior_power(&a, 2, &s).unwrap();
        let sym = sq.sub(&alt);
        assert_eq!(alt.dim(), 1);
        assert_eq!(sym.dim(), 3);
    }

    #[test]
    fn adams_examples() {
        let a = alg(Family::UnitaryU, 2, Involution::ComplexConjugation);
        let s = a.fund_char(0).clone();
        assert_eq!(adams(&a.g, 1, &s), s);
        let triv = Character::trivial(2);
        assert_eq!(adams(&a.g, 2, &triv), triv);
        let d = adams(&a.g, 2, &s);
        assert!(d.support.contains_key(&Weight(vec![2, 0])));
        assert!(d.support.contains_key(&Weight(vec![0, 2])));
    }

    #[test]
    fn g2_wedge2_sigma1() {
        let a = g2();
        let s1 = a.fund_char(0).clone();
        let w2 = exterior_power(&a, 2, &s1).unwrap();
        let combo = decompose_character(&a, &w2);
        // ∧²σ₁ = σ₁ + σ₂
        let mut expect: RepCombo = BTreeMap::new();
        expect.insert(Weight(vec![1, 0]), 1);
        expect.insert(Weight(vec![0, 1]), 1);
        assert_eq!(combo, expect);
    }

    #[test]
    fn g2_wedge2_sigma2_polynomial() {
        let a = g2();
        let s2 = a.fund_char(1).clone();
        let w2 = exterior_power(&a, 2, &s2).unwrap();
        let p = poly_of_character(&a, &w2).unwrap();
        // ∧²σ₂ = σ₁³ - σ₁² - 2σ₁σ₂ - σ₁
        let mut expect = FundPoly::zero();
        expect.add_assign_term(vec![3, 0], 1);
        expect.add_assign_term(vec![2, 0], -1);
        expect.add_assign_term(vec![1, 1], -2);
        expect.add_assign_term(vec![1, 0], -1);
        assert_eq!(p, expect);
        // Round trip.
        assert_eq!(eval_poly(&a, &p), w2);
    }

    #[test]
    fn sp2m_sigma_power_relation() {
        // σ^i + ∧^{i-2}σ = ∧^i σ for Sp(2m): check i=2 on Sp(4).
        let a = alg(Family::Symplectic, 2, Involution::Trivial);
        let std = a.fund_char(0).clone();
        let w2 = exterior_power(&a, 2, &std).unwrap();
        let sigma2 = irrep_character(&a, &Weight(vec![1, 1])).unwrap();
        let triv = Character::trivial(2);
        assert_eq!(sigma2.add(&triv), w2);
    }

    #[test]
    fn exterior_top_and_beyond() {
        let a = alg(Family::UnitaryU, 3, Involution::ComplexConjugation);
        let s = a.fund_char(0).clone();
        let top = exterior_power(&a, 3, &s).unwrap();
        assert_eq!(top.dim(), 1);
        let beyond = exterior_power(&a, 4, &s).unwrap();
        assert!(beyond.is_zero());
        // ∧² of the SU(2) standard is trivial.
        let su2 = alg(Family::SpecialUnitary, 2, Involution::Trivial);
        let std = su2.fund_char(0).clone();
        let w2 = exterior_power(&su2, 2, &std).unwrap();
        assert_eq!(w2, Character::trivial(2));
    }

    #[test]
    fn exterior_rejects_virtual() {
        let a = g2();
        let s1 = a.fund_char(0).clone();
        let virt = Character::trivial(2).sub(&s1);
        assert_eq!(
            exterior_power(&a, 2, &virt).unwrap_err(),
            CharError::VirtualInput
        );
    }

    #[test]
    fn conj_dual_is_involution_and_fixes_u_n() {
        let a = alg(Family::UnitaryU, 3, Involution::ComplexConjugation);
        for i in 0..3 {
            let ch = a.fund_char(i);
            assert_eq!(&conj_dual(&a.g, ch), ch);
        }
        let su3 = alg(Family::SpecialUnitary, 3, Involution::Trivial);
        let std = su3.fund_char(0).clone();
        let dual = su3.fund_char(1).clone();
        assert_eq!(conj_dual(&su3.g, &std), dual);
        assert_eq!(conj_dual(&su3.g, &conj_dual(&su3.g, &std)), std);
    }

    #[test]
    fn classification_tables() {
        // Sp(2m) trivial: odd fundamentals quaternionic, even ones real.
        let sp4 = alg(Family::Symplectic, 2, Involution::Trivial);
        assert_eq!(sp4.fund_type(0), RepType::H);
        assert_eq!(sp4.fund_type(1), RepType::R);
        // G2: both real.
        let a = g2();
        assert_eq!(a.fund_type(0), RepType::R);
        assert_eq!(a.fund_type(1), RepType::R);
        // SU(3) trivial: standard is complex.
        let su3 = alg(Family::SpecialUnitary, 3, Involution::Trivial);
        assert_eq!(su3.fund_type(0), RepType::C);
        assert_eq!(su3.fund_type(1), RepType::C);
        assert_eq!(su3.cpairs().len(), 1);
        // SU(2) trivial: standard is quaternionic.
        let su2 = alg(Family::SpecialUnitary, 2, Involution::Trivial);
        assert_eq!(su2.fund_type(0), RepType::H);
        // U(2m) symplectic involution: alternating pattern.
        let u4 = alg(Family::UnitaryU, 4, Involution::SymplecticType);
        assert_eq!(u4.fund_type(0), RepType::H);
        assert_eq!(u4.fund_type(1), RepType::R);
        assert_eq!(u4.fund_type(2), RepType::H);
        assert_eq!(u4.fund_type(3), RepType::R);
        // U(n) conjugation: all real.
        let u3 = alg(Family::UnitaryU, 3, Involution::ComplexConjugation);
        for i in 0..3 {
            assert_eq!(u3.fund_type(i), RepType::R);
        }
    }

    #[test]
    fn h_type_has_even_dimension() {
        for a in [
            alg(Family::Symplectic, 2, Involution::Trivial),
            alg(Family::SpecialUnitary, 2, Involution::Trivial),
            alg(Family::UnitaryU, 4, Involution::SymplecticType),
        ] {
            for i in 0..a.n_fundamentals() {
                if a.fund_type(i) == RepType::H {
                    assert_eq!(a.fund_dim(i) % 2, 0);
                }
            }
        }
    }

    #[test]
    fn fundamental_polys_round_trip() {
        let a = alg(Family::Symplectic, 2, Involution::Trivial);
        for i in 0..2 {
            let p = poly_of_character(&a, a.fund_char(i)).unwrap();
            assert_eq!(p.terms.len(), 1);
            assert_eq!(eval_poly(&a, &p), *a.fund_char(i));
        }
    }
}
