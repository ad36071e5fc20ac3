//! Ascending D-schemes, congruence triangles, and the periodic products that
//! the two conjectured character formulas reduce to.
//!
//! A [`PeriodicProduct`] stores exponents of `(1 - q^j)`: a negative exponent
//! means parts `j` are available (with that many colors), a positive one is a
//! numerator factor. Numerators and denominators therefore combine by plain
//! integer addition.

mod notation;

use std::fmt;

use crate::error::{invalid, Result};

pub use notation::parse_residue_spec;

/// Ascending list `D(s_0, ..., s_l)` with `2l + 1` entries, starting at `s_0`
/// and stepping by the palindromic increments `s_1, ..., s_l, s_l, ..., s_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DScheme(Vec<u64>);

impl DScheme {
    pub fn values(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub fn build_d(s: &[u64]) -> Result<DScheme> {
    check_positive(s)?;
    let mut values = Vec::with_capacity(2 * s.len() - 1);
    let mut current = s[0];
    values.push(current);
    for &step in s[1..].iter().chain(s[1..].iter().rev()) {
        current += step;
        values.push(current);
    }
    Ok(DScheme(values))
}

/// The multiset `D(s_1..s_l) ∪ D(s_2..s_l) ∪ ... ∪ D(s_l)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CongruenceTriangle {
    rows: Vec<DScheme>,
}

impl CongruenceTriangle {
    /// Rows from the widest, `D(s_1..s_l)`, down to `D(s_l)`.
    pub fn rows(&self) -> &[DScheme] {
        &self.rows
    }

    pub fn values(&self) -> impl Iterator<Item = u64> + '_ {
        self.rows.iter().flat_map(|d| d.values().iter().copied())
    }

    /// Cardinality with multiplicity; always `l^2`.
    pub fn len(&self) -> usize {
        self.rows.iter().map(DScheme::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Values sorted ascending, multiplicities kept.
    pub fn sorted_values(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.values().collect();
        v.sort_unstable();
        v
    }
}

pub fn build_delta(s: &[u64]) -> Result<CongruenceTriangle> {
    check_positive(s)?;
    let rows = (0..s.len()).map(|start| build_d(&s[start..])).collect::<Result<Vec<_>>>()?;
    Ok(CongruenceTriangle { rows })
}

fn check_positive(s: &[u64]) -> Result<()> {
    if s.is_empty() {
        return Err(invalid("scheme parameters must be non-empty"));
    }
    if let Some(pos) = s.iter().position(|&x| x == 0) {
        return Err(invalid(format!("scheme parameters must be positive, found 0 at index {pos}")));
    }
    Ok(())
}

/// A `(1 + q^j)^exponent` factor for every `j ≥ 1` with `j ≡ residue (mod modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PlusFactor {
    pub residue: u64,
    pub modulus: u64,
    pub exponent: i64,
}

impl PlusFactor {
    pub fn new(residue: u64, modulus: u64, exponent: i64) -> Result<Self> {
        if modulus == 0 {
            return Err(invalid("plus-factor modulus must be positive"));
        }
        Ok(Self { residue: residue % modulus, modulus, exponent })
    }

    pub fn applies_to(&self, j: u64) -> bool {
        j % self.modulus == self.residue
    }
}

/// `∏_{j≥1} (1-q^j)^{global_all + [j odd]·global_odd + E(j mod m)}` times the
/// plus factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PeriodicProduct {
    modulus: u64,
    residue_exponents: Vec<i64>,
    global_all: i64,
    global_odd: i64,
    plus_factors: Vec<PlusFactor>,
}

impl PeriodicProduct {
    /// The empty product (the constant series 1) with the given modulus.
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(invalid("modulus must be positive"));
        }
        let len = usize::try_from(modulus).map_err(|_| invalid("modulus too large"))?;
        Ok(Self {
            modulus,
            residue_exponents: vec![0; len],
            global_all: 0,
            global_odd: 0,
            plus_factors: Vec::new(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `E(r)` for `r` in `0..modulus`.
    pub fn residue_exponents(&self) -> &[i64] {
        &self.residue_exponents
    }

    pub fn residue_exponent(&self, r: u64) -> i64 {
        self.residue_exponents[(r % self.modulus) as usize]
    }

    pub fn global_all(&self) -> i64 {
        self.global_all
    }

    pub fn global_odd(&self) -> i64 {
        self.global_odd
    }

    pub fn plus_factors(&self) -> &[PlusFactor] {
        &self.plus_factors
    }

    /// Adds `delta` to the exponent of the class of `value`; `value` may be
    /// any integer and is reduced here.
    pub fn add_to_class(&mut self, value: i64, delta: i64) {
        let r = value.rem_euclid(self.modulus as i64) as usize;
        self.residue_exponents[r] += delta;
    }

    pub fn add_global_all(&mut self, delta: i64) {
        self.global_all += delta;
    }

    pub fn add_global_odd(&mut self, delta: i64) {
        self.global_odd += delta;
    }

    pub fn push_plus_factor(&mut self, factor: PlusFactor) {
        self.plus_factors.push(factor);
    }

    /// Total exponent of `(1 - q^j)`.
    pub fn effective_exponent(&self, j: u64) -> i64 {
        let odd = if j % 2 == 1 { self.global_odd } else { 0 };
        self.global_all + odd + self.residue_exponent(j)
    }

    /// Exponent of `(1 + q^j)` summed over all plus factors.
    pub fn plus_exponent(&self, j: u64) -> i64 {
        self.plus_factors.iter().filter(|f| f.applies_to(j)).map(|f| f.exponent).sum()
    }

    /// Period of the effective exponents: the modulus, doubled when an odd
    /// modulus meets a nonzero odd-part factor.
    pub fn net_modulus(&self) -> u64 {
        if self.global_odd != 0 && self.modulus % 2 == 1 {
            2 * self.modulus
        } else {
            self.modulus
        }
    }

    /// Effective exponents of `(1 - q^j)` per residue `0..net_modulus()`,
    /// with both global factors folded in.
    pub fn net_exponents(&self) -> Vec<i64> {
        (0..self.net_modulus()).map(|r| self.effective_exponent(r)).collect()
    }

    /// Whether every `(1 - q^j)` exponent is ≤ 0 and every plus exponent ≥ 0,
    /// so the expansion has nonnegative coefficients.
    pub fn is_generating(&self) -> bool {
        self.net_exponents().iter().all(|&e| e <= 0) && self.plus_factors.iter().all(|f| f.exponent >= 0)
    }

    /// Renders the product in the residue notation accepted by
    /// [`parse_residue_spec`], pulling out as many `all`/`odd` globals as
    /// the class multiplicities allow. `None` when some class has a positive
    /// `(1 - q^j)` exponent, which the notation cannot express.
    pub fn to_residue_spec(&self) -> Option<String> {
        let m = self.net_modulus();
        let mults: Vec<u64> =
            self.net_exponents().into_iter().map(|e| u64::try_from(-e).ok()).collect::<Option<_>>()?;

        let all = mults.iter().copied().min().unwrap_or(0);
        let odd = if m.is_multiple_of(2) && m > 1 {
            mults.iter().skip(1).step_by(2).copied().min().unwrap_or(0) - all
        } else {
            0
        };

        let mut out = String::new();
        let globals: Vec<&str> = std::iter::repeat_n("all", all as usize)
            .chain(std::iter::repeat_n("odd", odd as usize))
            .collect();
        if !globals.is_empty() {
            out.push_str(&globals.join(", "));
            out.push_str("; ");
        }
        let classes: Vec<String> = mults
            .iter()
            .enumerate()
            .flat_map(|(r, &c)| {
                let extra = c - all - if r % 2 == 1 { odd } else { 0 };
                std::iter::repeat_n(r.to_string(), extra as usize)
            })
            .collect();
        if !classes.is_empty() {
            out.push_str(&classes.join(","));
            out.push(' ');
        }
        out.push_str(&format!("mod {m}"));

        if !self.plus_factors.is_empty() {
            let entries: Vec<String> = group_plus_factors(&self.plus_factors)
                .into_iter()
                .map(|(modulus, exponent, residues)| {
                    let rs: Vec<String> = residues.iter().map(u64::to_string).collect();
                    let mut s = format!("(+ {} mod {modulus})", rs.join(","));
                    if exponent != 1 {
                        s.push_str(&format!("^{exponent}"));
                    }
                    s
                })
                .collect();
            out.push_str(&format!(" [{}]", entries.join(", ")));
        }
        Some(out)
    }
}

fn group_plus_factors(factors: &[PlusFactor]) -> Vec<(u64, i64, Vec<u64>)> {
    let mut groups: Vec<(u64, i64, Vec<u64>)> = Vec::new();
    for f in factors {
        match groups.iter_mut().find(|(m, e, _)| *m == f.modulus && *e == f.exponent) {
            Some((_, _, rs)) => rs.push(f.residue),
            None => groups.push((f.modulus, f.exponent, vec![f.residue])),
        }
    }
    groups
}

impl fmt::Display for PeriodicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_residue_spec() {
            Some(s) => f.write_str(&s),
            None => write!(f, "net exponents {:?} mod {}", self.net_exponents(), self.net_modulus()),
        }
    }
}

fn level_of(k: &[u32]) -> Result<u64> {
    let total: u64 = k.iter().map(|&x| u64::from(x)).sum();
    if total == 0 {
        return Err(invalid("weight must have k_0 + ... + k_l > 0"));
    }
    Ok(total)
}

fn shifted(k: &[u32]) -> Vec<u64> {
    k.iter().map(|&x| u64::from(x) + 1).collect()
}

fn add_plus_minus(product: &mut PeriodicProduct, delta: &CongruenceTriangle) {
    // 2b ≡ 0 (mod M) deliberately contributes twice.
    for b in delta.values() {
        let b = b as i64;
        product.add_to_class(b, 1);
        product.add_to_class(-b, 1);
    }
}

/// Principally specialized character of the standard `C_l^(1)` module with
/// weight `(k_0, ..., k_l)`, `l ≥ 2`, as a product modulo `2l + 2k + 2`.
pub fn lepowsky_product(k: &[u32]) -> Result<PeriodicProduct> {
    if k.len() < 3 {
        return Err(invalid(format!(
            "odd-width product needs l >= 2, i.e. at least 3 weight entries, got {}",
            k.len()
        )));
    }
    let level = level_of(k)?;
    let rank = (k.len() - 1) as u64;
    let modulus = 2 * rank + 2 * level + 2;

    let mut product = PeriodicProduct::new(modulus)?;
    product.add_to_class(0, rank as i64);
    for a in build_d(&shifted(k))?.values() {
        product.add_to_class(*a as i64, 1);
    }
    add_plus_minus(&mut product, &build_delta(&shifted(&k[1..]))?);
    product.add_global_all(-(rank as i64));
    product.add_global_odd(-1);
    Ok(product)
}

/// The conjectured product for even-width arrays, weight `(k_0, ..., k_l)^e`,
/// `l ≥ 1`, modulo `2l + 2k + 1`.
pub fn even_product(k: &[u32]) -> Result<PeriodicProduct> {
    if k.len() < 2 {
        return Err(invalid(format!(
            "even-width product needs l >= 1, i.e. at least 2 weight entries, got {}",
            k.len()
        )));
    }
    let level = level_of(k)?;
    let rank = (k.len() - 1) as u64;
    let modulus = 2 * rank + 2 * level + 1;

    let mut product = PeriodicProduct::new(modulus)?;
    product.add_to_class(0, rank as i64);
    add_plus_minus(&mut product, &build_delta(&shifted(&k[1..]))?);
    product.add_global_all(-(rank as i64));
    Ok(product)
}
