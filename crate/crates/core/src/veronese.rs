//! Veronese-type ideals and the Cohen-Macaulay classification of path
//! ideals of complete multipartite graphs.
//!
//! When every block of the partition holds at most `ceil(t/2)` vertices,
//! every `t`-subset of the vertices supports a `t`-path, so the path
//! ideal coincides with the squarefree Veronese ideal of degree `t` and
//! its quotient is Cohen-Macaulay. A block above that cap forces
//! non-Cohen-Macaulayness; the classifier reports the first such block.

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::spread::multipartite_has_t_path;
use crate::{Error, Monomial, MonomialIdeal, PartitionSpec, Result};

const VERONESE_GENERATOR_LIMIT: usize = 2_000_000;
const DIMENSION_VARIABLE_LIMIT: usize = 20;

/// The ideal generated by all monomials of the given degree whose
/// exponents respect the componentwise caps.
pub fn veronese_type_ideal(ring_dim: usize, degree: u64, caps: &[u64]) -> Result<MonomialIdeal> {
    if caps.len() != ring_dim {
        return Err(Error::DimensionMismatch {
            expected: ring_dim,
            found: caps.len(),
        });
    }
    if degree == 0 {
        return Err(Error::InvalidPower);
    }
    let total: u64 = caps.iter().sum();
    if total < degree {
        return Err(Error::CapsTooSmall { total, degree });
    }
    let mut gens = Vec::new();
    let mut exps = vec![0u64; ring_dim];
    // Remaining capacity of the variables right of each position prunes
    // branches that cannot reach the target degree.
    let mut tail = vec![0u64; ring_dim + 1];
    for i in (0..ring_dim).rev() {
        tail[i] = tail[i + 1] + caps[i];
    }
    fn fill(
        i: usize,
        remaining: u64,
        exps: &mut Vec<u64>,
        caps: &[u64],
        tail: &[u64],
        gens: &mut Vec<Monomial>,
    ) -> Result<()> {
        if remaining == 0 {
            for e in exps[i..].iter_mut() {
                *e = 0;
            }
            if gens.len() == VERONESE_GENERATOR_LIMIT {
                return Err(Error::BudgetExceeded(format!(
                    "more than {VERONESE_GENERATOR_LIMIT} generators"
                )));
            }
            gens.push(Monomial::new(exps.clone()));
            return Ok(());
        }
        if i == exps.len() || tail[i] < remaining {
            return Ok(());
        }
        for e in (0..=caps[i].min(remaining)).rev() {
            exps[i] = e;
            fill(i + 1, remaining - e, exps, caps, tail, gens)?;
        }
        exps[i] = 0;
        Ok(())
    }
    fill(0, degree, &mut exps, caps, &tail, &mut gens)?;
    MonomialIdeal::new(ring_dim, gens)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut b: u128 = 1;
    for i in 0..k {
        b = b * (n - i) as u128 / (i + 1) as u128;
    }
    b
}

/// If the ideal is the squarefree Veronese ideal of some degree `t >= 1`
/// in all its ring variables, return that degree.
pub fn recognize_squarefree_veronese(ideal: &MonomialIdeal) -> Option<usize> {
    if ideal.is_zero() || !ideal.is_squarefree() {
        return None;
    }
    let t = ideal.equigenerated_degree()? as usize;
    if t == 0 {
        return None;
    }
    if ideal.num_gens() as u128 == binomial(ideal.ring_dim(), t) {
        Some(t)
    } else {
        None
    }
}

/// Krull dimension of the quotient by a squarefree monomial ideal: the
/// largest vertex set containing no generator support.
pub(crate) fn squarefree_quotient_dimension(ideal: &MonomialIdeal) -> Result<usize> {
    let n = ideal.ring_dim();
    if ideal.is_zero() {
        return Ok(n);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if n > DIMENSION_VARIABLE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "dimension scan needs {n} variables, limit is {DIMENSION_VARIABLE_LIMIT}"
        )));
    }
    let gen_masks: Vec<u64> = ideal
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u64, |m, &v| m | (1 << v)))
        .collect();
    let mut dim = 0usize;
    for mask in 0..(1u64 << n) {
        let size = mask.count_ones() as usize;
        if size > dim && gen_masks.iter().all(|&g| g & !mask != 0) {
            dim = size;
        }
    }
    Ok(dim)
}

/// Structural reason behind a Cohen-Macaulay verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum CmKind {
    /// No `t`-path exists; the quotient is the whole polynomial ring.
    Zero,
    /// Every block fits under `ceil(t/2)`, so the path ideal is the
    /// squarefree Veronese ideal of degree `t`.
    SquarefreeVeronese,
    /// A block exceeds `ceil(t/2)` while paths still exist.
    OversizeBlock,
}

/// Cohen-Macaulay classification of a path ideal by block sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmVerdict {
    pub is_cm: bool,
    pub kind: CmKind,
    pub failing_block: Option<usize>,
}

impl Serialize for CmVerdict {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CmVerdict", 3)?;
        s.serialize_field("isCm", &self.is_cm)?;
        s.serialize_field("kind", &self.kind)?;
        s.serialize_field("failingBlock", &self.failing_block.map(|b| b + 1))?;
        s.end()
    }
}

/// Classify the `t`-path ideal of the complete multipartite graph as
/// Cohen-Macaulay or not, from the block sizes alone.
///
/// The verification sweeps check this classification against depth and
/// dimension computed independently from the ideal itself.
pub fn classify_path_ideal_cm(spec: &PartitionSpec, t: usize) -> Result<CmVerdict> {
    if t < 2 {
        return Err(Error::PathTooShort(t));
    }
    if !multipartite_has_t_path(spec, t) {
        return Ok(CmVerdict {
            is_cm: true,
            kind: CmKind::Zero,
            failing_block: None,
        });
    }
    let cap = t.div_ceil(2);
    match spec.sizes().iter().position(|&s| s > cap) {
        Some(block) => Ok(CmVerdict {
            is_cm: false,
            kind: CmKind::OversizeBlock,
            failing_block: Some(block),
        }),
        None => Ok(CmVerdict {
            is_cm: true,
            kind: CmKind::SquarefreeVeronese,
            failing_block: None,
        }),
    }
}
