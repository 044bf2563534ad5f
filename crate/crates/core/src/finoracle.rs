//! Brute-force oracle over finite-group character tables: exact
//! Frobenius–Schur indicators computed in cyclotomic integers, and the
//! ranks of the Real/Quaternionic representation groups split by
//! commuting field.
//!
//! Values live in `Z[ζ_N]` for `N = |G|`, represented canonically modulo
//! the `N`-th cyclotomic polynomial so that indicator sums reduce to
//! honest rational integers.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error("table invariant violated: {0}")]
    Invariant(String),
    #[error("unknown builtin table `{0}`")]
    UnknownBuiltin(String),
}

/// Computes the `n`-th cyclotomic polynomial by exact division of
/// `x^n - 1` by the product of the lower cyclotomic polynomials.
fn cyclotomic_poly(n: u32, memo: &mut BTreeMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    // x^n - 1
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d, memo);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    memo.insert(n, num.clone());
    num
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    assert!(lead == 1, "cyclotomic polynomials are monic");
    let mut quot = vec![0i64; rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        let qi = i - dd;
        quot[qi] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[qi + j] -= c * dc;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
    quot
}

/// An element of `Z[ζ_n]`, reduced modulo the `n`-th cyclotomic
/// polynomial; `coeffs.len() == φ(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    pub n: u32,
    pub coeffs: Vec<i64>,
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Cyclotomic {
        let phi = euler_phi(n);
        Cyclotomic {
            n,
            coeffs: vec![0; phi],
        }
    }

    pub fn integer(n: u32, c: i64) -> Cyclotomic {
        let mut z = Cyclotomic::zero(n);
        if !z.coeffs.is_empty() {
            z.coeffs[0] = c;
        }
        z
    }

    /// `c · ζ_n^j`, reduced.
    pub fn root_term(n: u32, c: i64, j: u32) -> Cyclotomic {
        let mut raw = vec![0i64; n as usize];
        raw[(j % n) as usize] += c;
        Cyclotomic::reduce(n, raw)
    }

    fn reduce(n: u32, mut raw: Vec<i64>) -> Cyclotomic {
        let mut memo = BTreeMap::new();
        let phi_n = cyclotomic_poly(n, &mut memo);
        let deg = phi_n.len() - 1;
        if raw.len() < deg {
            raw.resize(deg, 0);
        }
        for i in (deg..raw.len()).rev() {
            let c = raw[i];
            if c == 0 {
                continue;
            }
            raw[i] = 0;
            for (j, &pc) in phi_n.iter().take(deg).enumerate() {
                raw[i - deg + j] -= c * pc;
            }
        }
        raw.truncate(deg);
        Cyclotomic { n, coeffs: raw }
    }

    pub fn add(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.n, other.n);
        Cyclotomic {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &Cyclotomic) -> Cyclotomic {
        assert_eq!(self.n, other.n);
        let mut raw = vec![0i64; 2 * self.coeffs.len().max(1)];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        Cyclotomic::reduce(self.n, raw)
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Cyclotomic {
        let mut raw = vec![0i64; self.n as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                raw[(self.n as usize - i) % self.n as usize] += c;
            }
        }
        Cyclotomic::reduce(self.n, raw)
    }

    /// Embedding `Z[ζ_n] → Z[ζ_m]` via `ζ_n ↦ ζ_m^{m/n}`.
    pub fn embed(&self, m: u32) -> Cyclotomic {
        assert!(m % self.n == 0, "embedding requires n | m");
        let k = m / self.n;
        let mut raw = vec![0i64; m as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            raw[(i as u32 * k % m) as usize] += c;
        }
        Cyclotomic::reduce(m, raw)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs.iter().skip(1).all(|&c| c == 0) {
            Some(self.coeffs.first().copied().unwrap_or(0))
        } else {
            None
        }
    }
}

fn euler_phi(n: u32) -> usize {
    (1..=n).filter(|k| gcd(*k, n) == 1).count()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// An exact finite-group character table.
#[derive(Clone, Debug)]
pub struct CharTable {
    pub name: String,
    pub order: u64,
    pub class_sizes: Vec<u64>,
    /// For each class, the class containing the squares of its elements.
    pub class_sq: Vec<usize>,
    /// Irreducible characters as class functions; values in `Z[ζ_order]`.
    pub chars: Vec<Vec<Cyclotomic>>,
}

impl CharTable {
    pub fn num_classes(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.chars[i][0].as_integer().expect("degree is an integer")
    }

    /// Checks row orthogonality and the degree sum.
    pub fn validate(&self) -> Result<(), TableError> {
        let k = self.num_classes();
        if self.class_sq.len() != k || self.chars.len() != k {
            return Err(TableError::Malformed(
                "class count mismatch between sections".into(),
            ));
        }
        if self.class_sizes.iter().sum::<u64>() != self.order {
            return Err(TableError::Invariant("class sizes must sum to |G|".into()));
        }
        let sq_sum: i64 = (0..k).map(|i| self.degree(i) * self.degree(i)).sum();
        if sq_sum as u64 != self.order {
            return Err(TableError::Invariant(
                "sum of squared degrees != |G|".into(),
            ));
        }
        let n = self.order as u32;
        for i in 0..k {
            for j in 0..k {
                let mut acc = Cyclotomic::zero(n);
                for c in 0..k {
                    let term = self.chars[i][c]
                        .mul(&self.chars[j][c].conj())
                        .scale(self.class_sizes[c] as i64);
                    acc = acc.add(&term);
                }
                let expect = if i == j { self.order as i64 } else { 0 };
                if acc.as_integer() != Some(expect) {
                    return Err(TableError::Invariant(format!(
                        "row orthogonality fails at ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Frobenius–Schur indicator `(1/|G|) Σ_g χ_i(g²)`, evaluated exactly via
/// the class squaring map.
pub fn fs_indicator(t: &CharTable, i: usize) -> i8 {
    let n = t.order as u32;
    let mut acc = Cyclotomic::zero(n);
    for c in 0..t.num_classes() {
        acc = acc.add(&t.chars[i][t.class_sq[c]].scale(t.class_sizes[c] as i64));
    }
    let v = acc.as_integer().expect("FS sum is a rational integer");
    assert!(v % t.order as i64 == 0, "FS sum divisible by |G|");
    let ind = v / t.order as i64;
    assert!((-1..=1).contains(&ind), "FS indicator in {{-1,0,1}}");
    ind as i8
}

/// Ranks `(R, C, H)` of a representation group split by commuting field.
pub type Ranks = (usize, usize, usize);

/// The nine ranks of `R(G)`, `RR(G)`, `RH(G)` split by commuting field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NineRanks {
    pub r: Ranks,
    pub rr: Ranks,
    pub rh: Ranks,
}

/// Computes the nine ranks from the Frobenius–Schur indicators.
///
/// Complex irreducibles of type R/C/H are counted by indicator +1/0/-1.
/// `RR` takes one generator per real irreducible (commuting field R), one
/// per conjugate pair (C), and one per quaternionic irreducible doubled
/// (H); `RH` swaps the roles of the real and quaternionic irreducibles.
pub fn real_quat_tables(t: &CharTable) -> NineRanks {
    let mut plus = 0;
    let mut zero = 0;
    let mut minus = 0;
    for i in 0..t.num_classes() {
        match fs_indicator(t, i) {
            1 => plus += 1,
            0 => zero += 1,
            -1 => minus += 1,
            _ => unreachable!(),
        }
    }
    assert!(zero % 2 == 0, "complex-type irreducibles come in pairs");
    NineRanks {
        r: (plus, zero, minus),
        rr: (plus, zero / 2, minus),
        rh: (minus, zero / 2, plus),
    }
}

/// Character table of a direct product, with outer-product characters.
pub fn direct_product(t1: &CharTable, t2: &CharTable) -> CharTable {
    let order = t1.order * t2.order;
    let n = order as u32;
    let k1 = t1.num_classes();
    let k2 = t2.num_classes();
    let mut class_sizes = Vec::with_capacity(k1 * k2);
    let mut class_sq = Vec::with_capacity(k1 * k2);
    for c1 in 0..k1 {
        for c2 in 0..k2 {
            class_sizes.push(t1.class_sizes[c1] * t2.class_sizes[c2]);
            class_sq.push(t1.class_sq[c1] * k2 + t2.class_sq[c2]);
        }
    }
    let mut chars = Vec::with_capacity(k1 * k2);
    for i1 in 0..k1 {
        for i2 in 0..k2 {
            let mut row = Vec::with_capacity(k1 * k2);
            for c1 in 0..k1 {
                for c2 in 0..k2 {
                    row.push(t1.chars[i1][c1].embed(n).mul(&t2.chars[i2][c2].embed(n)));
                }
            }
            chars.push(row);
        }
    }
    CharTable {
        name: format!("{}x{}", t1.name, t2.name),
        order,
        class_sizes,
        class_sq,
        chars,
    }
}

fn int_row(n: u32, vals: &[i64]) -> Vec<Cyclotomic> {
    vals.iter().map(|&v| Cyclotomic::integer(n, v)).collect()
}

/// Built-in tables: `trivial`, `C2`, `C3`, `C4`, `V4`, `Q8`, `Q8xC3`.
pub fn builtin_table(name: &str) -> Result<CharTable, TableError> {
    let t = match name {
        "trivial" => CharTable {
            name: "trivial".into(),
            order: 1,
            class_sizes: vec![1],
            class_sq: vec![0],
            chars: vec![int_row(1, &[1])],
        },
        "C2" => CharTable {
            name: "C2".into(),
            order: 2,
            class_sizes: vec![1, 1],
            class_sq: vec![0, 0],
            chars: vec![int_row(2, &[1, 1]), int_row(2, &[1, -1])],
        },
        "C3" => {
            let n = 3;
            let z = |j| Cyclotomic::root_term(n, 1, j);
            CharTable {
                name: "C3".into(),
                order: 3,
                class_sizes: vec![1, 1, 1],
                class_sq: vec![0, 2, 1],
                chars: vec![
                    int_row(n, &[1, 1, 1]),
                    vec![Cyclotomic::integer(n, 1), z(1), z(2)],
                    vec![Cyclotomic::integer(n, 1), z(2), z(1)],
                ],
            }
        }
        "C4" => {
            let n = 4;
            let z = |j| Cyclotomic::root_term(n, 1, j);
            // classes: 1, i, -1, -i
            CharTable {
                name: "C4".into(),
                order: 4,
                class_sizes: vec![1, 1, 1, 1],
                class_sq: vec![0, 2, 0, 2],
                chars: vec![
                    int_row(n, &[1, 1, 1, 1]),
                    vec![z(0), z(1), z(2), z(3)],
                    int_row(n, &[1, -1, 1, -1]),
                    vec![z(0), z(3), z(2), z(1)],
                ],
            }
        }
        "V4" => CharTable {
            name: "V4".into(),
            order: 4,
            class_sizes: vec![1, 1, 1, 1],
            class_sq: vec![0, 0, 0, 0],
            chars: vec![
                int_row(4, &[1, 1, 1, 1]),
                int_row(4, &[1, 1, -1, -1]),
                int_row(4, &[1, -1, 1, -1]),
                int_row(4, &[1, -1, -1, 1]),
            ],
        },
        "Q8" => CharTable {
            name: "Q8".into(),
            order: 8,
            // classes: 1, -1, ±i, ±j, ±k
            class_sizes: vec![1, 1, 2, 2, 2],
            class_sq: vec![0, 0, 1, 1, 1],
            chars: vec![
                int_row(8, &[1, 1, 1, 1, 1]),
                int_row(8, &[1, 1, 1, -1, -1]),
                int_row(8, &[1, 1, -1, 1, -1]),
                int_row(8, &[1, 1, -1, -1, 1]),
                int_row(8, &[2, -2, 0, 0, 0]),
            ],
        },
        "Q8xC3" => direct_product(&builtin_table("Q8")?, &builtin_table("C3")?),
        other => return Err(TableError::UnknownBuiltin(other.into())),
    };
    Ok(t)
}

pub fn builtin_names() -> &'static [&'static str] {
    &["trivial", "C2", "C3", "C4", "V4", "Q8", "Q8xC3"]
}

/// Parses the plain-text character-table format:
///
/// ```text
/// order <|G|> classes <k>
/// class <size> <square-class-index>      # k lines, 0-based index
/// char <entry> ; <entry> ; ... ; <entry> # k lines of k entries
/// ```
///
/// Entries are sums of terms `a`, `a*z^j` or `z^j` joined by `+`/`-`,
/// where `z` is a primitive `|G|`-th root of unity.
pub fn parse_table(text: &str) -> Result<CharTable, TableError> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| TableError::Malformed("empty table".into()))?;
    let hp: Vec<&str> = header.split_whitespace().collect();
    if hp.len() != 4 || hp[0] != "order" || hp[2] != "classes" {
        return Err(TableError::Malformed(
            "header must be `order <|G|> classes <k>`".into(),
        ));
    }
    let order: u64 = hp[1]
        .parse()
        .map_err(|_| TableError::Malformed("bad order".into()))?;
    let k: usize = hp[3]
        .parse()
        .map_err(|_| TableError::Malformed("bad class count".into()))?;
    let n = order as u32;

    let mut class_sizes = Vec::with_capacity(k);
    let mut class_sq = Vec::with_capacity(k);
    for _ in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| TableError::Malformed("missing class line".into()))?;
        let p: Vec<&str> = line.split_whitespace().collect();
        if p.len() != 3 || p[0] != "class" {
            return Err(TableError::Malformed(
                "class line must be `class <size> <sq-index>`".into(),
            ));
        }
        class_sizes.push(
            p[1].parse()
                .map_err(|_| TableError::Malformed("bad class size".into()))?,
        );
        let sq: usize = p[2]
            .parse()
            .map_err(|_| TableError::Malformed("bad square index".into()))?;
        if sq >= k {
            return Err(TableError::Malformed("square index out of range".into()));
        }
        class_sq.push(sq);
    }
    let mut chars = Vec::with_capacity(k);
    for _ in 0..k {
        let line = lines
            .next()
            .ok_or_else(|| TableError::Malformed("missing char line".into()))?;
        let rest = line
            .strip_prefix("char")
            .ok_or_else(|| TableError::Malformed("char line must start with `char`".into()))?;
        let entries: Vec<&str> = rest.split(';').map(str::trim).collect();
        if entries.len() != k {
            return Err(TableError::Malformed(format!(
                "expected {k} entries per char line"
            )));
        }
        let mut row = Vec::with_capacity(k);
        for e in entries {
            row.push(parse_cyclotomic(n, e)?);
        }
        chars.push(row);
    }
    let t = CharTable {
        name: "file".into(),
        order,
        class_sizes,
        class_sq,
        chars,
    };
    t.validate()?;
    Ok(t)
}

fn parse_cyclotomic(n: u32, s: &str) -> Result<Cyclotomic, TableError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(TableError::Malformed("empty entry".into()));
    }
    let mut acc = Cyclotomic::zero(n);
    let mut term = String::new();
    let mut chars = compact.chars().peekable();
    while let Some(c) = chars.next() {
        term.push(c);
        let at_end = chars.peek().is_none();
        let next_breaks = matches!(chars.peek(), Some('+') | Some('-'));
        if at_end || next_breaks {
            acc = acc.add(&parse_term(n, &term)?);
            term.clear();
        }
    }
    Ok(acc)
}

fn parse_term(n: u32, t: &str) -> Result<Cyclotomic, TableError> {
    let (sign, body) = match t.strip_prefix('-') {
        Some(b) => (-1i64, b),
        None => (1i64, t.strip_prefix('+').unwrap_or(t)),
    };
    let bad = || TableError::Malformed(format!("bad term `{t}`"));
    if let Some(zpart) = body.find('z') {
        let coeff_str = &body[..zpart];
        let coeff: i64 = if coeff_str.is_empty() {
            1
        } else {
            let c = coeff_str.strip_suffix('*').ok_or_else(bad)?;
            c.parse().map_err(|_| bad())?
        };
        let rest = &body[zpart + 1..];
        let j: u32 = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?
        };
        Ok(Cyclotomic::root_term(n, sign * coeff, j))
    } else {
        let c: i64 = body.parse().map_err(|_| bad())?;
        Ok(Cyclotomic::integer(n, sign * c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_validate() {
        for name in builtin_names() {
            let t = builtin_table(name).unwrap();
            t.validate().unwrap();
        }
    }

    #[test]
    fn q8_indicators() {
        let t = builtin_table("Q8").unwrap();
        assert_eq!(fs_indicator(&t, 0), 1);
        assert_eq!(fs_indicator(&t, 4), -1);
    }

    #[test]
    fn c3_indicators() {
        let t = builtin_table("C3").unwrap();
        assert_eq!(fs_indicator(&t, 0), 1);
        assert_eq!(fs_indicator(&t, 1), 0);
        assert_eq!(fs_indicator(&t, 2), 0);
    }

    #[test]
    fn q8xc3_nine_ranks() {
        let t = builtin_table("Q8xC3").unwrap();
        t.validate().unwrap();
        assert_eq!(t.num_classes(), 15);
        let nine = real_quat_tables(&t);
        assert_eq!(nine.r, (4, 10, 1));
        assert_eq!(nine.rr, (4, 5, 1));
        assert_eq!(nine.rh, (1, 5, 4));
    }

    #[test]
    fn trivial_and_c3_tables() {
        let t = builtin_table("trivial").unwrap();
        let nine = real_quat_tables(&t);
        assert_eq!(nine.r, (1, 0, 0));
        assert_eq!(nine.rr, (1, 0, 0));
        // The doubled trivial representation is the sole generator of
        // RH(1), and its commuting field is H.
        assert_eq!(nine.rh, (0, 0, 1));

        let c3 = real_quat_tables(&builtin_table("C3").unwrap());
        assert_eq!(c3.r, (1, 2, 0));
        assert_eq!(c3.rr, (1, 1, 0));
        assert_eq!(c3.rh, (0, 1, 1));
    }

    #[test]
    fn product_with_trivial_is_identity() {
        let q8 = builtin_table("Q8").unwrap();
        let t = direct_product(&q8, &builtin_table("trivial").unwrap());
        assert_eq!(t.order, 8);
        assert_eq!(t.num_classes(), 5);
        assert_eq!(real_quat_tables(&t), real_quat_tables(&q8));
    }

    #[test]
    fn c2xc2_four_linear() {
        let c2 = builtin_table("C2").unwrap();
        let t = direct_product(&c2, &c2);
        t.validate().unwrap();
        assert_eq!(t.num_classes(), 4);
        assert!((0..4).all(|i| t.degree(i) == 1));
        assert_eq!(
            real_quat_tables(&t),
            real_quat_tables(&builtin_table("V4").unwrap())
        );
    }

    #[test]
    fn corollary_rank_equalities() {
        for name in builtin_names() {
            let t = builtin_table(name).unwrap();
            let nine = real_quat_tables(&t);
            let (r_r, r_c, r_h) = nine.r;
            assert_eq!(nine.rr.0, r_r);
            assert_eq!(nine.rr.2, r_h);
            assert_eq!(nine.rh.0, r_h);
            assert_eq!(nine.rh.2, r_r);
            assert_eq!(nine.rr.1, r_c / 2);
            assert_eq!(nine.rh.1, r_c / 2);
        }
    }

    #[test]
    fn parse_round_trip_c3() {
        let text = "
order 3 classes 3
class 1 0
class 1 2
class 1 1
char 1 ; 1 ; 1
char 1 ; z ; z^2
char 1 ; z^2 ; z
";
        let t = parse_table(text).unwrap();
        assert_eq!(
            real_quat_tables(&t),
            real_quat_tables(&builtin_table("C3").unwrap())
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_table("order x classes 2").is_err());
        assert!(
            parse_table("order 2 classes 2\nclass 1 0\nclass 1 0\nchar 1 ; 1\nchar 1 ; q")
                .is_err()
        );
        // fails row orthogonality
        let bad = "
order 2 classes 2
class 1 0
class 1 0
char 1 ; 1
char 1 ; 1
";
        assert!(parse_table(bad).is_err());
    }

    #[test]
    fn cyclotomic_arithmetic() {
        // 1 + ζ3 + ζ3² = 0
        let a = Cyclotomic::integer(3, 1)
            .add(&Cyclotomic::root_term(3, 1, 1))
            .add(&Cyclotomic::root_term(3, 1, 2));
        assert!(a.is_zero());
        // ζ4² = -1
        let i = Cyclotomic::root_term(4, 1, 1);
        assert_eq!(i.mul(&i).as_integer(), Some(-1));
        // conj(ζ12) * ζ12 = 1
        let z = Cyclotomic::root_term(12, 1, 1);
        assert_eq!(z.mul(&z.conj()).as_integer(), Some(1));
    }
}
