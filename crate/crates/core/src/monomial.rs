//! Monomials and monomial ideals with exact exponent arithmetic.
//!
//! Ideals are always kept in canonical form: the stored generators are the
//! unique minimal generating set (a divisibility antichain), sorted in
//! descending lexicographic order of exponent vectors. Structural equality
//! of two `MonomialIdeal`s is therefore ideal equality.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A monomial in `n` variables, stored as its exponent vector.
///
/// Exponents are unsigned 64-bit integers; all arithmetic is checked and
/// overflow surfaces as [`Error::ExponentOverflow`] instead of wrapping.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u64>,
}

impl Monomial {
    pub fn new(exponents: Vec<u64>) -> Self {
        Monomial { exponents }
    }

    /// The monomial `1` in a ring with `ring_dim` variables.
    pub fn one(ring_dim: usize) -> Self {
        Monomial {
            exponents: vec![0; ring_dim],
        }
    }

    /// The variable `x_index` (0-based) in a ring with `ring_dim` variables.
    pub fn variable(index: usize, ring_dim: usize) -> Result<Self> {
        if index >= ring_dim {
            return Err(Error::IndexOutOfRange { index, ring_dim });
        }
        let mut exponents = vec![0; ring_dim];
        exponents[index] = 1;
        Ok(Monomial { exponents })
    }

    /// The squarefree monomial whose support is `vars` (0-based indices).
    pub fn squarefree(vars: &[usize], ring_dim: usize) -> Result<Self> {
        let mut exponents = vec![0; ring_dim];
        for &v in vars {
            if v >= ring_dim {
                return Err(Error::IndexOutOfRange { index: v, ring_dim });
            }
            exponents[v] = 1;
        }
        Ok(Monomial { exponents })
    }

    pub fn ring_dim(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn exponent(&self, index: usize) -> u64 {
        self.exponents[index]
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.exponents.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Indices of variables appearing with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.ring_dim(), other.ring_dim(), "ring dimension mismatch");
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_dims(self.ring_dim(), other.ring_dim())?;
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exponents })
    }

    pub fn pow(&self, k: u64) -> Result<Monomial> {
        let exponents = self
            .exponents
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial { exponents })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ring_dim(), other.ring_dim(), "ring dimension mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ring_dim(), other.ring_dim(), "ring dimension mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| *a.min(b))
                .collect(),
        }
    }

    /// Exact quotient `self / other`, or `None` when `other` does not divide.
    pub fn div_exact(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// `self / gcd(self, other)`, the generator of `(self) : other`.
    pub fn div_gcd(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.ring_dim(), other.ring_dim(), "ring dimension mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a - a.min(b))
                .collect(),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, &e) in self.exponents.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Reduce a generator list to its divisibility antichain.
///
/// When all inputs share one total degree this is just deduplication; the
/// general case keeps a monomial iff no other (distinct) input divides it.
fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    if gens.len() <= 1 {
        return gens;
    }
    let equigenerated = gens.first().map(|m| m.degree()) == gens.last().map(|m| m.degree());
    if equigenerated {
        // Distinct monomials of equal degree never divide one another.
        return gens;
    }
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    'next: for g in gens {
        for k in &kept {
            if k.divides(&g) {
                continue 'next;
            }
        }
        kept.push(g);
    }
    kept
}

/// A monomial ideal given by its minimal generating set.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
/// Generators are stored in descending lexicographic order of exponent
/// vectors, which fixes serialization and witness ordering.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MonomialIdeal {
    ring_dim: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Build an ideal from an arbitrary generator list, minimalizing it.
    pub fn new(ring_dim: usize, gens: Vec<Monomial>) -> Result<Self> {
        for g in &gens {
            check_dims(ring_dim, g.ring_dim())?;
        }
        let mut gens = minimal_antichain(gens);
        gens.sort_by(|a, b| b.cmp(a));
        Ok(MonomialIdeal { ring_dim, gens })
    }

    pub fn zero(ring_dim: usize) -> Self {
        MonomialIdeal {
            ring_dim,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring_dim: usize) -> Self {
        MonomialIdeal {
            ring_dim,
            gens: vec![Monomial::one(ring_dim)],
        }
    }

    /// The maximal ideal `(x1, ..., xn)`.
    pub fn maximal(ring_dim: usize) -> Self {
        let gens = (0..ring_dim)
            .map(|i| Monomial::variable(i, ring_dim).expect("index in range"))
            .collect();
        MonomialIdeal::new(ring_dim, gens).expect("dimensions agree")
    }

    pub fn principal(generator: Monomial) -> Self {
        let ring_dim = generator.ring_dim();
        MonomialIdeal {
            ring_dim,
            gens: vec![generator],
        }
    }

    pub fn ring_dim(&self) -> usize {
        self.ring_dim
    }

    /// Minimal generators, in descending lexicographic order.
    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    /// Common degree of the generators, when there is one.
    pub fn equigenerated_degree(&self) -> Option<u64> {
        let first = self.gens.first()?.degree();
        self.gens
            .iter()
            .all(|g| g.degree() == first)
            .then_some(first)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Componentwise maximum of the generators (exponents of their lcm).
    pub fn max_exponents(&self) -> Vec<u64> {
        let mut caps = vec![0u64; self.ring_dim];
        for g in &self.gens {
            for (c, &e) in caps.iter_mut().zip(g.exponents()) {
                *c = (*c).max(e);
            }
        }
        caps
    }

    /// Membership test: does some generator divide `m`?
    pub fn contains_monomial(&self, m: &Monomial) -> bool {
        assert_eq!(self.ring_dim, m.ring_dim(), "ring dimension mismatch");
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Ideal containment: is `other` a subideal of `self`?
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        assert_eq!(self.ring_dim, other.ring_dim, "ring dimension mismatch");
        other.gens.iter().all(|g| self.contains_monomial(g))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.ring_dim, other.ring_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.ring_dim));
        }
        let mut products = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                products.push(a.mul(b)?);
            }
        }
        MonomialIdeal::new(self.ring_dim, products)
    }

    /// `k`-th power, `k >= 1`.
    pub fn power(&self, k: u64) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::InvalidPower);
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.ring_dim, other.ring_dim)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.ring_dim, gens)
    }

    /// Intersection of two monomial ideals.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.ring_dim, other.ring_dim)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MonomialIdeal::zero(self.ring_dim));
        }
        let caps: Vec<u64> = self
            .max_exponents()
            .iter()
            .zip(other.max_exponents())
            .map(|(a, b)| (*a).max(b))
            .collect();
        if let Some(cells) = box_cells(&caps, BOX_CELL_LIMIT) {
            let sbox = IdealBox::with_caps(self, caps.clone(), cells);
            let obox = IdealBox::with_caps(other, caps.clone(), cells);
            let member: Vec<bool> = sbox
                .member
                .iter()
                .zip(&obox.member)
                .map(|(a, b)| *a && *b)
                .collect();
            let gens = minimal_generators_from_box(&caps, &member);
            return MonomialIdeal::new(self.ring_dim, gens);
        }
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.ring_dim, lcms)
    }

    /// Colon ideal `(self : other)`.
    ///
    /// Errors when `other` is the zero ideal; `(0 : J)` is the zero ideal.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dims(self.ring_dim, other.ring_dim)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if self.is_zero() {
            return Ok(MonomialIdeal::zero(self.ring_dim));
        }
        let caps = self.max_exponents();
        if let Some(cells) = box_cells(&caps, BOX_CELL_LIMIT) {
            let ibox = IdealBox::with_caps(self, caps.clone(), cells);
            let mut member = vec![false; cells];
            let mut exps = vec![0u64; self.ring_dim];
            for slot in member.iter_mut() {
                *slot = other
                    .gens
                    .iter()
                    .all(|v| ibox.member[ibox.clamped_shift_index(&exps, v.exponents())]);
                increment_odometer(&mut exps, &caps);
            }
            let gens = minimal_generators_from_box(&caps, &member);
            return MonomialIdeal::new(self.ring_dim, gens);
        }
        let mut acc: Option<MonomialIdeal> = None;
        for v in &other.gens {
            let single = MonomialIdeal::new(
                self.ring_dim,
                self.gens.iter().map(|u| u.div_gcd(v)).collect(),
            )?;
            acc = Some(match acc {
                None => single,
                Some(cur) => cur.intersect(&single)?,
            });
        }
        Ok(acc.expect("other has at least one generator"))
    }

    /// Variables appearing in some generator. Errors on the zero ideal.
    pub fn support(&self) -> Result<BTreeSet<usize>> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let mut vars = BTreeSet::new();
        for g in &self.gens {
            vars.extend(g.support());
        }
        Ok(vars)
    }

    /// Greatest common divisor of the generators. Errors on the zero ideal.
    pub fn gcd_of_generators(&self) -> Result<Monomial> {
        let mut iter = self.gens.iter();
        let first = iter.next().ok_or(Error::ZeroIdeal)?.clone();
        Ok(iter.fold(first, |acc, g| acc.gcd(g)))
    }

    /// Slice the generators by their exponent in one variable.
    ///
    /// Layer `j` is the ideal generated by `u / x_i^j` over all generators
    /// `u` with exponent exactly `j` in `x_i`; layers run from 0 up to the
    /// largest such exponent. Errors on the zero ideal and bad indices.
    pub fn fiber_decomposition(&self, variable: usize) -> Result<FiberDecomposition> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        if variable >= self.ring_dim {
            return Err(Error::IndexOutOfRange {
                index: variable,
                ring_dim: self.ring_dim,
            });
        }
        let top = self
            .gens
            .iter()
            .map(|g| g.exponent(variable))
            .max()
            .expect("nonzero ideal");
        let mut layers = Vec::with_capacity(top as usize + 1);
        for j in 0..=top {
            let divisor = Monomial::variable(variable, self.ring_dim)?.pow(j)?;
            let layer_gens: Vec<Monomial> = self
                .gens
                .iter()
                .filter(|g| g.exponent(variable) == j)
                .map(|g| g.div_exact(&divisor).expect("exponent matches layer"))
                .collect();
            layers.push(MonomialIdeal::new(self.ring_dim, layer_gens)?);
        }
        Ok(FiberDecomposition { variable, layers })
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[derive(Deserialize)]
#[serde(rename_all = "camelCase")]
struct RawIdeal {
    ring_dim: usize,
    gens: Vec<Monomial>,
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D>(deserializer: D) -> std::result::Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw = RawIdeal::deserialize(deserializer)?;
        MonomialIdeal::new(raw.ring_dim, raw.gens).map_err(serde::de::Error::custom)
    }
}

/// The slices of an ideal along the exponents of one fixed variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberDecomposition {
    variable: usize,
    layers: Vec<MonomialIdeal>,
}

impl FiberDecomposition {
    pub fn variable(&self) -> usize {
        self.variable
    }

    /// Layers indexed by exponent, from 0 to the maximal exponent.
    pub fn layers(&self) -> &[MonomialIdeal] {
        &self.layers
    }

    pub fn layer(&self, j: usize) -> &MonomialIdeal {
        &self.layers[j]
    }

    pub fn max_exponent(&self) -> usize {
        self.layers.len() - 1
    }

    /// Do the layers form an ascending chain `I_0 ⊆ I_1 ⊆ ... ⊆ I_d`?
    pub fn chain_holds(&self) -> bool {
        self.layers.windows(2).all(|w| w[1].contains_ideal(&w[0]))
    }

    /// Rebuild `Σ_j x_i^j · I_j`; equals the decomposed ideal.
    pub fn reassemble(&self) -> Result<MonomialIdeal> {
        let ring_dim = self.layers[0].ring_dim();
        let xi = Monomial::variable(self.variable, ring_dim)?;
        let mut gens = Vec::new();
        for (j, layer) in self.layers.iter().enumerate() {
            let shift = xi.pow(j as u64)?;
            for g in layer.gens() {
                gens.push(g.mul(&shift)?);
            }
        }
        MonomialIdeal::new(ring_dim, gens)
    }
}

/// Cap on dense membership tables (number of cells).
pub(crate) const BOX_CELL_LIMIT: usize = 1 << 22;

/// Number of cells in the exponent box `Π (caps_i + 1)`, if within `limit`.
pub(crate) fn box_cells(caps: &[u64], limit: usize) -> Option<usize> {
    let mut cells: u128 = 1;
    for &c in caps {
        cells = cells.checked_mul(c as u128 + 1)?;
        if cells > limit as u128 {
            return None;
        }
    }
    Some(cells as usize)
}

/// Advance `exps` through the box `0..=caps` in mixed-radix order,
/// least significant variable first.
pub(crate) fn increment_odometer(exps: &mut [u64], caps: &[u64]) {
    for (e, &c) in exps.iter_mut().zip(caps) {
        if *e < c {
            *e += 1;
            return;
        }
        *e = 0;
    }
}

/// Dense membership table for a monomial ideal over the exponent box of
/// its generators: `member[index(b)]` holds iff `x^b` lies in the ideal.
pub(crate) struct IdealBox {
    pub caps: Vec<u64>,
    pub strides: Vec<usize>,
    pub member: Vec<bool>,
}

impl IdealBox {
    /// Build the table when the box is at most `limit` cells.
    pub fn build(ideal: &MonomialIdeal, limit: usize) -> Option<IdealBox> {
        let caps = ideal.max_exponents();
        let cells = box_cells(&caps, limit)?;
        Some(IdealBox::with_caps(ideal, caps, cells))
    }

    fn with_caps(ideal: &MonomialIdeal, caps: Vec<u64>, cells: usize) -> IdealBox {
        let n = caps.len();
        let mut strides = vec![0usize; n];
        let mut s = 1usize;
        for (i, &c) in caps.iter().enumerate() {
            strides[i] = s;
            s *= c as usize + 1;
        }
        debug_assert_eq!(s, cells);
        let mut member = vec![false; cells];
        for g in ideal.gens() {
            member[index_of(g.exponents(), &strides)] = true;
        }
        // x^b lies in the ideal iff b is a generator or some x^(b - e_i) does.
        let mut exps = vec![0u64; n];
        for idx in 0..cells {
            if !member[idx] {
                for i in 0..n {
                    if exps[i] > 0 && member[idx - strides[i]] {
                        member[idx] = true;
                        break;
                    }
                }
            }
            increment_odometer(&mut exps, &caps);
        }
        IdealBox {
            caps,
            strides,
            member,
        }
    }

    /// Index of `min(b + v, caps)` componentwise; membership of a monomial
    /// above the box equals membership of its clamp.
    pub fn clamped_shift_index(&self, b: &[u64], v: &[u64]) -> usize {
        let mut idx = 0usize;
        for i in 0..b.len() {
            let e = (b[i] + v[i]).min(self.caps[i]);
            idx += e as usize * self.strides[i];
        }
        idx
    }
}

pub(crate) fn index_of(exps: &[u64], strides: &[usize]) -> usize {
    exps.iter()
        .zip(strides)
        .map(|(&e, &s)| e as usize * s)
        .sum()
}

/// Minimal generators of the ideal described by a membership table.
fn minimal_generators_from_box(caps: &[u64], member: &[bool]) -> Vec<Monomial> {
    let n = caps.len();
    let mut strides = vec![0usize; n];
    let mut s = 1usize;
    for (i, &c) in caps.iter().enumerate() {
        strides[i] = s;
        s *= c as usize + 1;
    }
    let mut gens = Vec::new();
    let mut exps = vec![0u64; n];
    for (idx, &m) in member.iter().enumerate() {
        if m {
            let minimal = (0..n).all(|i| exps[i] == 0 || !member[idx - strides[i]]);
            if minimal {
                gens.push(Monomial::new(exps.clone()));
            }
        }
        increment_odometer(&mut exps, caps);
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u64]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    fn ideal(ring_dim: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(ring_dim, gens.iter().map(|g| m(g)).collect()).unwrap()
    }

    mod minimalize {
        use super::*;

        #[test]
        fn drops_multiples() {
            let i = ideal(3, &[&[1, 1, 0], &[1, 1, 1], &[2, 1, 0]]);
            assert_eq!(i.gens(), &[m(&[1, 1, 0])]);
        }

        #[test]
        fn keeps_incomparable_generators() {
            let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 3]]);
            assert_eq!(i.num_gens(), 3);
        }

        #[test]
        fn unit_absorbs_everything() {
            let i = ideal(2, &[&[0, 0], &[1, 0], &[5, 5]]);
            assert!(i.is_unit());
            assert_eq!(i.num_gens(), 1);
        }

        #[test]
        fn deduplicates() {
            let i = ideal(2, &[&[1, 0], &[1, 0]]);
            assert_eq!(i.num_gens(), 1);
        }

        #[test]
        fn zero_ideal_has_no_generators() {
            let z = MonomialIdeal::zero(4);
            assert!(z.is_zero());
            assert!(z.is_proper());
            assert_eq!(z.max_exponents(), vec![0, 0, 0, 0]);
        }

        #[test]
        fn canonical_order_is_descending_lex() {
            let i = ideal(3, &[&[0, 0, 2], &[1, 1, 0], &[0, 2, 0]]);
            let got: Vec<&[u64]> = i.gens().iter().map(|g| g.exponents()).collect();
            assert_eq!(got, vec![&[1, 1, 0][..], &[0, 2, 0][..], &[0, 0, 2][..]]);
        }

        #[test]
        fn matches_pairwise_filter_on_pseudorandom_input() {
            // Deterministic LCG; compare against the obvious quadratic filter.
            let mut state: u64 = 0x243F6A8885A308D3;
            let mut next = move || {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 33) as usize
            };
            for round in 0..200 {
                let n = 2 + next() % 4;
                let count = 1 + next() % 12;
                let gens: Vec<Monomial> = (0..count)
                    .map(|_| Monomial::new((0..n).map(|_| (next() % 4) as u64).collect()))
                    .collect();
                let via_new = MonomialIdeal::new(n, gens.clone()).unwrap();
                let mut expected: Vec<Monomial> = gens
                    .iter()
                    .filter(|g| !gens.iter().any(|h| h.divides(g) && !g.divides(h)))
                    .cloned()
                    .collect();
                expected.sort();
                expected.dedup();
                expected.sort_by(|a, b| b.cmp(a));
                assert_eq!(via_new.gens(), &expected[..], "round {round}");
            }
        }
    }

    mod arithmetic {
        use super::*;

        #[test]
        fn multiply_principal_by_edge_ideal() {
            // (x4) times the edge ideal of the complete graph on
            // {x1, x2, x3, x5, x6} inside a 6-variable ring.
            let vars = [0usize, 1, 2, 4, 5];
            let mut edge_gens = Vec::new();
            for (a, &u) in vars.iter().enumerate() {
                for &v in &vars[a + 1..] {
                    edge_gens.push(Monomial::squarefree(&[u, v], 6).unwrap());
                }
            }
            let j = MonomialIdeal::new(6, edge_gens).unwrap();
            let x4 = MonomialIdeal::principal(Monomial::variable(3, 6).unwrap());
            let product = x4.multiply(&j).unwrap();
            assert_eq!(product.num_gens(), 10);
            assert!(product
                .gens()
                .iter()
                .all(|g| g.exponent(3) == 1 && g.degree() == 3 && g.is_squarefree()));
        }

        #[test]
        fn square_of_maximal_ideal() {
            let m2 = MonomialIdeal::maximal(2).power(2).unwrap();
            assert_eq!(m2, ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]),);
        }

        #[test]
        fn power_requires_positive_exponent() {
            assert_eq!(MonomialIdeal::maximal(2).power(0), Err(Error::InvalidPower));
        }

        #[test]
        fn zero_times_anything_is_zero() {
            let z = MonomialIdeal::zero(3);
            let i = ideal(3, &[&[1, 0, 0]]);
            assert!(z.multiply(&i).unwrap().is_zero());
        }

        #[test]
        fn dimension_mismatch_is_reported() {
            let a = ideal(2, &[&[1, 0]]);
            let b = ideal(3, &[&[1, 0, 0]]);
            assert!(matches!(
                a.multiply(&b),
                Err(Error::DimensionMismatch { .. })
            ));
        }

        #[test]
        fn intersect_principal_ideals() {
            let a = ideal(2, &[&[1, 0]]);
            let b = ideal(2, &[&[0, 1]]);
            assert_eq!(a.intersect(&b).unwrap(), ideal(2, &[&[1, 1]]));
        }
    }

    mod colon {
        use super::*;

        #[test]
        fn triangle_colon_by_variable() {
            let triangle = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
            let x1 = ideal(3, &[&[1, 0, 0]]);
            let got = triangle.colon(&x1).unwrap();
            assert_eq!(got, ideal(3, &[&[0, 1, 0], &[0, 0, 1]]));
        }

        #[test]
        fn colon_by_unit_is_identity() {
            let i = ideal(2, &[&[2, 0], &[0, 1]]);
            assert_eq!(i.colon(&MonomialIdeal::unit(2)).unwrap(), i);
        }

        #[test]
        fn colon_by_itself_is_unit_for_principal() {
            let i = ideal(2, &[&[1, 1]]);
            assert!(i.colon(&i).unwrap().is_unit());
        }

        #[test]
        fn colon_by_zero_errors() {
            let i = ideal(2, &[&[1, 0]]);
            assert_eq!(i.colon(&MonomialIdeal::zero(2)), Err(Error::ZeroIdeal));
        }

        #[test]
        fn box_and_fold_routes_agree() {
            // Exercise both code paths on the same input by comparing the
            // box-scan result against the explicit intersection fold.
            let i = ideal(3, &[&[2, 1, 0], &[0, 2, 1], &[1, 0, 2]]);
            let j = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
            let fast = i.colon(&j).unwrap();
            let slow = {
                let a = MonomialIdeal::new(
                    3,
                    i.gens().iter().map(|u| u.div_gcd(&j.gens()[0])).collect(),
                )
                .unwrap();
                let b = MonomialIdeal::new(
                    3,
                    i.gens().iter().map(|u| u.div_gcd(&j.gens()[1])).collect(),
                )
                .unwrap();
                a.intersect(&b).unwrap()
            };
            assert_eq!(fast, slow);
        }
    }

    mod support_and_gcd {
        use super::*;

        #[test]
        fn support_of_star_edge_ideal() {
            let i = ideal(3, &[&[1, 1, 0], &[1, 0, 1]]);
            assert_eq!(
                i.support().unwrap().into_iter().collect::<Vec<_>>(),
                vec![0, 1, 2]
            );
            assert_eq!(i.gcd_of_generators().unwrap(), m(&[1, 0, 0]));
        }

        #[test]
        fn zero_ideal_support_errors() {
            assert_eq!(MonomialIdeal::zero(2).support(), Err(Error::ZeroIdeal));
            assert_eq!(
                MonomialIdeal::zero(2).gcd_of_generators(),
                Err(Error::ZeroIdeal)
            );
        }
    }

    mod fiber {
        use super::*;

        #[test]
        fn triangle_layers_at_first_variable() {
            let triangle = ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]);
            let fd = triangle.fiber_decomposition(0).unwrap();
            assert_eq!(fd.max_exponent(), 1);
            assert_eq!(fd.layer(0), &ideal(3, &[&[0, 1, 1]]));
            assert_eq!(fd.layer(1), &ideal(3, &[&[0, 1, 0], &[0, 0, 1]]));
            assert!(fd.chain_holds());
            assert_eq!(fd.reassemble().unwrap(), triangle);
        }

        #[test]
        fn principal_with_gap_layer() {
            let i = ideal(2, &[&[2, 1]]);
            let fd = i.fiber_decomposition(0).unwrap();
            assert_eq!(fd.max_exponent(), 2);
            assert!(fd.layer(0).is_zero());
            assert!(fd.layer(1).is_zero());
            assert_eq!(fd.layer(2), &ideal(2, &[&[0, 1]]));
            assert!(fd.chain_holds());
            assert_eq!(fd.reassemble().unwrap(), i);
        }

        #[test]
        fn zero_ideal_errors() {
            assert!(matches!(
                MonomialIdeal::zero(2).fiber_decomposition(0),
                Err(Error::ZeroIdeal)
            ));
        }

        #[test]
        fn index_out_of_range_errors() {
            let i = ideal(2, &[&[1, 0]]);
            assert!(matches!(
                i.fiber_decomposition(5),
                Err(Error::IndexOutOfRange { .. })
            ));
        }
    }

    mod serialization {
        use super::*;

        #[test]
        fn ideal_round_trips_through_json() {
            let i = ideal(3, &[&[1, 1, 0], &[0, 1, 2]]);
            let text = serde_json::to_string(&i).unwrap();
            assert!(text.contains("\"ringDim\":3"));
            let back: MonomialIdeal = serde_json::from_str(&text).unwrap();
            assert_eq!(back, i);
        }

        #[test]
        fn deserialization_minimalizes() {
            let back: MonomialIdeal =
                serde_json::from_str(r#"{"ringDim":2,"gens":[[1,0],[1,1]]}"#).unwrap();
            assert_eq!(back.gens(), &[m(&[1, 0])]);
        }

        #[test]
        fn monomial_is_a_plain_array() {
            assert_eq!(serde_json::to_string(&m(&[0, 2, 1])).unwrap(), "[0,2,1]");
        }
    }

    mod display {
        use super::*;

        #[test]
        fn one_based_variable_names() {
            assert_eq!(m(&[1, 0, 2]).to_string(), "x1x3^2");
            assert_eq!(m(&[0, 0]).to_string(), "1");
        }
    }
}
