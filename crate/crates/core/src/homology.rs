//! Multigraded Betti numbers, depth, and the simplicial homology they
//! reduce to.
//!
//! The multidegree-`a` Betti numbers of a monomial ideal are ranks of
//! reduced homology of the upper Koszul complex at `a`: the simplicial
//! complex of variable subsets whose removal from `x^a` stays inside the
//! ideal. Depth is computed from the projective dimension of the quotient
//! by the Auslander-Buchsbaum formula.
//!
//! Two engines share this formula but walk different degree sets. The
//! Betti table walks the lcm closure of the generators, which carries the
//! complete table. The depth engine scans the exponent box below the
//! componentwise generator maximum, where skip rules (degree outside the
//! ideal, full simplex present, support too small to raise the projective
//! dimension) keep the scan cheap; degrees above the box have a cone apex
//! and never contribute. A Hochster-style engine for squarefree ideals
//! provides an independent cross-check route.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::ser::SerializeStruct;
use serde::Serialize;

use crate::graph::mask_to_vertices;
use crate::matrix::DenseMatrix;
use crate::monomial::{IdealBox, BOX_CELL_LIMIT};
use crate::spread::analytic_spread;
use crate::{Error, Monomial, MonomialIdeal, Result};

const FACET_SIZE_LIMIT: usize = 22;
const LATTICE_SIZE_LIMIT: usize = 200_000;
const HOCHSTER_VARIABLE_LIMIT: usize = 16;

/// Reduced homology ranks per chain level of a downward-closed face list.
///
/// Faces are bitmasks; level `k` holds the faces with `k` bits, so level
/// `0` is the empty face and level `k` computes the rank of reduced
/// homology in dimension `k - 1`.
fn reduced_homology_profile(faces: &[u64]) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(|f| f.count_ones() as usize).max().unwrap();
    let mut levels: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in faces {
        levels[f.count_ones() as usize].push(f);
    }
    let mut ranks = vec![0usize; top + 2];
    for k in 1..=top {
        let rows = &levels[k - 1];
        let cols = &levels[k];
        if rows.is_empty() || cols.is_empty() {
            continue;
        }
        let row_index: HashMap<u64, usize> =
            rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut mat = DenseMatrix::new(rows.len(), cols.len());
        for (c, &face) in cols.iter().enumerate() {
            let mut sign = 1i64;
            let mut bits = face;
            while bits != 0 {
                let v = bits.trailing_zeros();
                bits &= bits - 1;
                if let Some(&r) = row_index.get(&(face & !(1u64 << v))) {
                    mat.set(r, c, sign);
                }
                sign = -sign;
            }
        }
        ranks[k] = mat.rank();
    }
    (0..=top)
        .map(|k| {
            let h = levels[k].len() as isize - ranks[k] as isize - ranks[k + 1] as isize;
            debug_assert!(h >= 0, "face list is not a chain complex");
            h.max(0) as usize
        })
        .collect()
}

/// An abstract simplicial complex on a fixed vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    faces: Vec<u64>,
}

impl SimplicialComplex {
    /// The complex generated by the given facets, closed under subsets.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<usize>]) -> Result<Self> {
        let mut faces = BTreeSet::new();
        for facet in facets {
            if facet.len() > FACET_SIZE_LIMIT {
                return Err(Error::BudgetExceeded(format!(
                    "facet on {} vertices exceeds the closure limit {}",
                    facet.len(),
                    FACET_SIZE_LIMIT
                )));
            }
            let mut mask = 0u64;
            for &v in facet {
                if v >= vertex_count {
                    return Err(Error::IndexOutOfRange {
                        index: v,
                        ring_dim: vertex_count,
                    });
                }
                mask |= 1 << v;
            }
            let mut sub = mask;
            loop {
                faces.insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        Ok(SimplicialComplex {
            vertex_count,
            faces: faces.into_iter().collect(),
        })
    }

    pub(crate) fn from_face_masks(vertex_count: usize, mut faces: Vec<u64>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        SimplicialComplex {
            vertex_count,
            faces,
        }
    }

    /// The complex with no faces at all (not even the empty face).
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex {
            vertex_count,
            faces: Vec::new(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Dimension of the largest face; `None` for the void complex and `-1`
    /// for the complex whose only face is empty.
    pub fn dimension(&self) -> Option<isize> {
        self.faces.iter().map(|f| f.count_ones() as isize - 1).max()
    }

    pub fn is_face(&self, vertices: &[usize]) -> bool {
        let mut mask = 0u64;
        for &v in vertices {
            if v >= self.vertex_count {
                return false;
            }
            mask |= 1 << v;
        }
        self.faces.binary_search(&mask).is_ok()
    }

    pub fn faces_as_sets(&self) -> Vec<Vec<usize>> {
        self.faces.iter().map(|&f| mask_to_vertices(f)).collect()
    }

    /// Ranks of reduced simplicial homology over the rationals, keyed by
    /// dimension; only nonzero ranks appear. The empty-face dimension `-1`
    /// carries rank one exactly when the complex is `{∅}`.
    pub fn reduced_homology_ranks(&self) -> BTreeMap<isize, usize> {
        let profile = reduced_homology_profile(&self.faces);
        profile
            .into_iter()
            .enumerate()
            .filter(|&(_, h)| h > 0)
            .map(|(k, h)| (k as isize - 1, h))
            .collect()
    }
}

/// The upper Koszul complex of `ideal` at multidegree `a`: all subsets
/// `σ` of the support of `a` with `x^a / x^σ` in the ideal.
pub fn upper_koszul_complex(ideal: &MonomialIdeal, a: &Monomial) -> Result<SimplicialComplex> {
    if ideal.ring_dim() != a.ring_dim() {
        return Err(Error::DimensionMismatch {
            expected: ideal.ring_dim(),
            found: a.ring_dim(),
        });
    }
    let supp = a.support();
    if supp.len() > FACET_SIZE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "multidegree support {} exceeds the enumeration limit {}",
            supp.len(),
            FACET_SIZE_LIMIT
        )));
    }
    if !ideal.contains_monomial(a) {
        return Ok(SimplicialComplex::void(ideal.ring_dim()));
    }
    let faces = koszul_face_masks(ideal, a, &supp);
    Ok(SimplicialComplex::from_face_masks(ideal.ring_dim(), faces))
}

/// Face masks of the upper Koszul complex at `a`, as global variable
/// masks. Assumes `x^a` lies in the ideal.
fn koszul_face_masks(ideal: &MonomialIdeal, a: &Monomial, supp: &[usize]) -> Vec<u64> {
    let s = supp.len();
    let mut faces = Vec::new();
    for sub in 0..(1u64 << s) {
        let mut exps = a.exponents().to_vec();
        let mut bits = sub;
        let mut mask = 0u64;
        while bits != 0 {
            let b = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            exps[supp[b]] -= 1;
            mask |= 1 << supp[b];
        }
        if ideal.contains_monomial(&Monomial::new(exps)) {
            faces.push(mask);
        }
    }
    faces
}

/// All least common multiples of subsets of the generators, the only
/// multidegrees where Betti numbers can be nonzero.
pub(crate) fn lcm_lattice(ideal: &MonomialIdeal) -> Result<BTreeSet<Monomial>> {
    let mut lattice: BTreeSet<Monomial> = ideal.gens().iter().cloned().collect();
    let mut queue: Vec<Monomial> = lattice.iter().cloned().collect();
    while let Some(a) = queue.pop() {
        for g in ideal.gens() {
            let l = a.lcm(g);
            if lattice.insert(l.clone()) {
                if lattice.len() > LATTICE_SIZE_LIMIT {
                    return Err(Error::BudgetExceeded(format!(
                        "lcm closure exceeds {LATTICE_SIZE_LIMIT} multidegrees"
                    )));
                }
                queue.push(l);
            }
        }
    }
    Ok(lattice)
}

/// Multigraded Betti numbers of a monomial ideal, indexed by homological
/// position and multidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    ring_dim: usize,
    entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    pub(crate) fn from_entries(
        ring_dim: usize,
        entries: BTreeMap<(usize, Monomial), usize>,
    ) -> Self {
        BettiTable { ring_dim, entries }
    }

    pub fn ring_dim(&self) -> usize {
        self.ring_dim
    }

    pub fn entry(&self, i: usize, a: &Monomial) -> usize {
        self.entries.get(&(i, a.clone())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Monomial, usize)> {
        self.entries.iter().map(|((i, a), &b)| (*i, a, b))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total Betti numbers, indexed by homological position.
    pub fn totals(&self) -> Vec<usize> {
        let Some(pd) = self.projective_dimension() else {
            return Vec::new();
        };
        let mut totals = vec![0usize; pd + 1];
        for ((i, _), b) in &self.entries {
            totals[*i] += b;
        }
        totals
    }

    /// Projective dimension of the ideal as a module; `None` for the zero
    /// ideal, whose table is empty.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Depth of the quotient ring by the Auslander-Buchsbaum formula.
    /// `None` when the ideal was the whole ring.
    pub fn quotient_depth(&self) -> Option<usize> {
        let Some(pd) = self.projective_dimension() else {
            return Some(self.ring_dim);
        };
        if self.entry(0, &Monomial::one(self.ring_dim)) > 0 {
            return None;
        }
        Some(self.ring_dim - (pd + 1))
    }
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let mut keyed = BTreeMap::new();
        for ((i, a), b) in &self.entries {
            let degree = a
                .exponents()
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(",");
            keyed.insert(format!("{i}:{degree}"), *b);
        }
        let mut s = serializer.serialize_struct("BettiTable", 2)?;
        s.serialize_field("ringDim", &self.ring_dim)?;
        s.serialize_field("entries", &keyed)?;
        s.end()
    }
}

/// Compute the full multigraded Betti table of an ideal by walking its
/// lcm closure and taking upper Koszul homology at each multidegree.
pub fn betti_numbers(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let mut entries = BTreeMap::new();
    if !ideal.is_zero() {
        for a in lcm_lattice(ideal)? {
            let supp = a.support();
            if supp.len() > FACET_SIZE_LIMIT {
                return Err(Error::BudgetExceeded(format!(
                    "multidegree support {} exceeds the enumeration limit {}",
                    supp.len(),
                    FACET_SIZE_LIMIT
                )));
            }
            let faces = koszul_face_masks(ideal, &a, &supp);
            for (i, h) in reduced_homology_profile(&faces).into_iter().enumerate() {
                if h > 0 {
                    entries.insert((i, a.clone()), h);
                }
            }
        }
    }
    Ok(BettiTable {
        ring_dim: ideal.ring_dim(),
        entries,
    })
}

/// Projective dimension of `S/I` computed by scanning the exponent box
/// under the componentwise maximum of the generators. `None` when the box
/// exceeds the cell budget.
fn quotient_pd_via_box(ideal: &MonomialIdeal) -> Option<usize> {
    let ibox = IdealBox::build(ideal, BOX_CELL_LIMIT)?;
    let n = ideal.ring_dim();
    let dims: Vec<usize> = ibox.caps.iter().map(|&c| c as usize + 1).collect();
    let mut maxd: isize = -1;
    let mut supp = Vec::with_capacity(n);
    let mut faces: Vec<u64> = Vec::new();
    for idx in (0..ibox.member.len()).rev() {
        if !ibox.member[idx] {
            continue;
        }
        supp.clear();
        let mut rem = idx;
        for (i, &dim) in dims.iter().enumerate() {
            let e = rem % dim;
            rem /= dim;
            if e > 0 {
                supp.push(i);
            }
        }
        let s = supp.len();
        // A non-full complex on s vertices has homology in dimension at
        // most s - 2, and full complexes are skipped below.
        if s as isize <= maxd + 2 {
            continue;
        }
        let top_delta: usize = supp.iter().map(|&i| ibox.strides[i]).sum();
        if ibox.member[idx - top_delta] {
            continue;
        }
        faces.clear();
        for sub in 0..(1u64 << s) {
            let mut delta = 0usize;
            let mut bits = sub;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                delta += ibox.strides[supp[b]];
            }
            if ibox.member[idx - delta] {
                faces.push(sub);
            }
        }
        for (k, h) in reduced_homology_profile(&faces).into_iter().enumerate() {
            if h > 0 {
                maxd = maxd.max(k as isize - 1);
            }
        }
        if maxd == n as isize - 2 {
            break;
        }
    }
    Some((maxd + 2) as usize)
}

/// Projective dimension of `S/I` by walking the lcm closure; fallback for
/// ideals whose exponent box is too large to scan.
pub(crate) fn quotient_pd_via_lattice(ideal: &MonomialIdeal) -> Result<usize> {
    let mut maxd: isize = -1;
    for a in lcm_lattice(ideal)? {
        let supp = a.support();
        if supp.len() > FACET_SIZE_LIMIT {
            return Err(Error::BudgetExceeded(format!(
                "multidegree support {} exceeds the enumeration limit {}",
                supp.len(),
                FACET_SIZE_LIMIT
            )));
        }
        let faces = koszul_face_masks(ideal, &a, &supp);
        for (k, h) in reduced_homology_profile(&faces).into_iter().enumerate() {
            if h > 0 {
                maxd = maxd.max(k as isize - 1);
            }
        }
    }
    Ok((maxd + 2) as usize)
}

/// Depth of `S/I` for a proper monomial ideal. The zero ideal yields the
/// ring dimension; the whole ring has no quotient to measure and errors.
pub fn depth_of_quotient(ideal: &MonomialIdeal) -> Result<usize> {
    let n = ideal.ring_dim();
    if ideal.is_zero() {
        return Ok(n);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let pd = match quotient_pd_via_box(ideal) {
        Some(pd) => pd,
        None => quotient_pd_via_lattice(ideal)?,
    };
    debug_assert!(pd >= 1 && pd <= n);
    Ok(n - pd)
}

/// Depth of `S/I` for a squarefree monomial ideal via the correspondence
/// with its Stanley-Reisner complex: Betti numbers of the quotient are
/// homology ranks of vertex-set restrictions of the complex.
///
/// This is a deliberately independent route from [`depth_of_quotient`],
/// used to cross-check it on squarefree inputs.
pub fn stanley_reisner_depth(ideal: &MonomialIdeal) -> Result<usize> {
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
    if n > HOCHSTER_VARIABLE_LIMIT {
        return Err(Error::BudgetExceeded(format!(
            "restriction scan needs {n} variables, limit is {HOCHSTER_VARIABLE_LIMIT}"
        )));
    }
    let mut is_face = vec![false; 1usize << n];
    for mask in 0..(1u64 << n) {
        let m = Monomial::squarefree(&mask_to_vertices(mask), n).expect("mask within range");
        is_face[mask as usize] = !ideal.contains_monomial(&m);
    }
    let mut pd = 0usize;
    let mut faces: Vec<u64> = Vec::new();
    for w in 0..(1u64 << n) {
        let size = w.count_ones() as usize;
        if size <= pd {
            continue;
        }
        faces.clear();
        let mut sub = w;
        loop {
            if is_face[sub as usize] {
                faces.push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & w;
        }
        for (k, h) in reduced_homology_profile(&faces).into_iter().enumerate() {
            if h > 0 {
                pd = pd.max(size - k);
            }
        }
    }
    Ok(n - pd)
}

/// Depths of the quotients by successive powers, with the stabilization
/// index and the limiting value predicted by the analytic spread.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DepthProfile {
    ring_dim: usize,
    depths: Vec<usize>,
    limit: usize,
    dstab: Option<usize>,
}

impl DepthProfile {
    pub fn ring_dim(&self) -> usize {
        self.ring_dim
    }

    /// Depths of `S/I^k` for `k = 1, 2, …` in order.
    pub fn depths(&self) -> &[usize] {
        &self.depths
    }

    /// The eventual depth, `ring_dim - analytic_spread`.
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// First power whose depth reaches the limit, when the scan got there.
    pub fn dstab(&self) -> Option<usize> {
        self.dstab
    }

    pub fn depth_at(&self, k: usize) -> Option<usize> {
        k.checked_sub(1).and_then(|i| self.depths.get(i)).copied()
    }
}

/// Compute `depth S/I^k` for `k = 1..=k_max`, stopping early once the
/// depth reaches the limiting value `n - ℓ(I)`.
///
/// The scan insists on a non-increasing profile, which holds for the
/// ideal families this crate targets, and reports the first violation as
/// an error rather than guessing at a stabilization index.
pub fn depth_profile(ideal: &MonomialIdeal, k_max: usize) -> Result<DepthProfile> {
    if k_max == 0 {
        return Err(Error::InvalidPower);
    }
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let n = ideal.ring_dim();
    let ell = analytic_spread(ideal)?;
    let limit = n.saturating_sub(ell);
    let mut depths = Vec::new();
    let mut dstab = None;
    let mut power = ideal.clone();
    for k in 1..=k_max {
        if k > 1 {
            power = power.multiply(ideal)?;
        }
        let d = depth_of_quotient(&power)?;
        if let Some(&prev) = depths.last() {
            if d > prev {
                return Err(Error::DepthNotMonotone { k, prev, next: d });
            }
        }
        depths.push(d);
        if d == limit {
            dstab = Some(k);
            break;
        }
    }
    Ok(DepthProfile {
        ring_dim: n,
        depths,
        limit,
        dstab,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(n, gens.iter().map(|g| Monomial::new(g.to_vec())).collect()).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[1, 0, 1], &[0, 1, 1]])
    }

    fn five_cycle() -> MonomialIdeal {
        ideal(
            5,
            &[
                &[1, 1, 0, 0, 0],
                &[0, 1, 1, 0, 0],
                &[0, 0, 1, 1, 0],
                &[0, 0, 0, 1, 1],
                &[1, 0, 0, 0, 1],
            ],
        )
    }

    mod complexes {
        use super::*;

        #[test]
        fn closure_and_membership() {
            let c = SimplicialComplex::from_facets(4, &[vec![0, 1, 2]]).unwrap();
            assert_eq!(c.face_count(), 8);
            assert!(c.is_face(&[0, 2]));
            assert!(c.is_face(&[]));
            assert!(!c.is_face(&[3]));
            assert_eq!(c.dimension(), Some(2));
        }

        #[test]
        fn homology_of_standard_spaces() {
            let void = SimplicialComplex::void(3);
            assert!(void.reduced_homology_ranks().is_empty());
            assert_eq!(void.dimension(), None);

            let point = SimplicialComplex::from_facets(1, &[vec![0]]).unwrap();
            assert!(point.reduced_homology_ranks().is_empty());

            let empty_face_only = SimplicialComplex::from_facets(2, &[vec![]]).unwrap();
            assert_eq!(
                empty_face_only.reduced_homology_ranks(),
                BTreeMap::from([(-1, 1)])
            );

            let two_points = SimplicialComplex::from_facets(2, &[vec![0], vec![1]]).unwrap();
            assert_eq!(
                two_points.reduced_homology_ranks(),
                BTreeMap::from([(0, 1)])
            );

            let circle = SimplicialComplex::from_facets(
                5,
                &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]],
            )
            .unwrap();
            assert_eq!(circle.reduced_homology_ranks(), BTreeMap::from([(1, 1)]));

            let solid = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]).unwrap();
            assert!(solid.reduced_homology_ranks().is_empty());

            let sphere =
                SimplicialComplex::from_facets(3, &[vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
            assert_eq!(sphere.reduced_homology_ranks(), BTreeMap::from([(1, 1)]));
        }
    }

    mod koszul {
        use super::*;

        #[test]
        fn at_a_generator_only_the_empty_face_remains() {
            let k = upper_koszul_complex(&triangle(), &Monomial::new(vec![1, 1, 0])).unwrap();
            assert_eq!(k.faces_as_sets(), vec![Vec::<usize>::new()]);
            assert_eq!(k.reduced_homology_ranks(), BTreeMap::from([(-1, 1)]));
        }

        #[test]
        fn outside_the_ideal_the_complex_is_void() {
            let k = upper_koszul_complex(&triangle(), &Monomial::new(vec![1, 0, 0])).unwrap();
            assert!(k.is_void());
        }

        #[test]
        fn at_the_full_degree_of_the_triangle() {
            let k = upper_koszul_complex(&triangle(), &Monomial::new(vec![1, 1, 1])).unwrap();
            // Three isolated vertices: removing any one variable leaves an
            // edge of the triangle, removing two does not.
            assert_eq!(k.face_count(), 4);
            assert_eq!(k.reduced_homology_ranks(), BTreeMap::from([(0, 2)]));
        }

        #[test]
        fn dimension_mismatch_is_rejected() {
            assert_eq!(
                upper_koszul_complex(&triangle(), &Monomial::new(vec![1, 1])),
                Err(Error::DimensionMismatch {
                    expected: 3,
                    found: 2
                })
            );
        }
    }

    mod betti {
        use super::*;

        #[test]
        fn triangle_table() {
            let table = betti_numbers(&triangle()).unwrap();
            assert_eq!(table.totals(), vec![3, 2]);
            assert_eq!(table.entry(1, &Monomial::new(vec![1, 1, 1])), 2);
            assert_eq!(table.entry(0, &Monomial::new(vec![1, 1, 0])), 1);
            assert_eq!(table.projective_dimension(), Some(1));
            assert_eq!(table.quotient_depth(), Some(1));
        }

        #[test]
        fn two_edge_path_has_one_linear_syzygy() {
            let i = ideal(3, &[&[1, 1, 0], &[0, 1, 1]]);
            let table = betti_numbers(&i).unwrap();
            assert_eq!(table.totals(), vec![2, 1]);
            assert_eq!(table.entry(1, &Monomial::new(vec![1, 1, 1])), 1);
        }

        #[test]
        fn koszul_resolution_of_the_maximal_ideal() {
            let table = betti_numbers(&MonomialIdeal::maximal(3)).unwrap();
            assert_eq!(table.totals(), vec![3, 3, 1]);
            assert_eq!(table.entry(2, &Monomial::new(vec![1, 1, 1])), 1);
            assert_eq!(table.quotient_depth(), Some(0));
        }

        #[test]
        fn square_of_the_maximal_ideal_in_two_variables() {
            let table = betti_numbers(&MonomialIdeal::maximal(2).power(2).unwrap()).unwrap();
            assert_eq!(table.totals(), vec![3, 2]);
            assert_eq!(table.quotient_depth(), Some(0));
        }

        #[test]
        fn zero_and_unit_edge_cases() {
            let zero = betti_numbers(&MonomialIdeal::zero(2)).unwrap();
            assert!(zero.is_empty());
            assert_eq!(zero.quotient_depth(), Some(2));
            let unit = betti_numbers(&MonomialIdeal::unit(2)).unwrap();
            assert_eq!(unit.totals(), vec![1]);
            assert_eq!(unit.quotient_depth(), None);
        }

        #[test]
        fn serializes_with_position_and_degree_keys() {
            let i = ideal(2, &[&[1, 1]]);
            let json = serde_json::to_value(betti_numbers(&i).unwrap()).unwrap();
            assert_eq!(
                json,
                serde_json::json!({"ringDim": 2, "entries": {"0:1,1": 1}})
            );
        }
    }

    mod depth {
        use super::*;

        #[test]
        fn classical_values() {
            assert_eq!(depth_of_quotient(&triangle()).unwrap(), 1);
            assert_eq!(depth_of_quotient(&five_cycle()).unwrap(), 2);
            assert_eq!(depth_of_quotient(&MonomialIdeal::maximal(4)).unwrap(), 0);
            let star = ideal(4, &[&[1, 1, 0, 0], &[1, 0, 1, 0], &[1, 0, 0, 1]]);
            assert_eq!(depth_of_quotient(&star).unwrap(), 1);
        }

        #[test]
        fn zero_is_the_ring_and_unit_errors() {
            assert_eq!(depth_of_quotient(&MonomialIdeal::zero(5)).unwrap(), 5);
            assert_eq!(
                depth_of_quotient(&MonomialIdeal::unit(5)),
                Err(Error::UnitIdeal)
            );
        }

        #[test]
        fn box_scan_and_lattice_walk_agree() {
            let samples = [
                triangle(),
                five_cycle(),
                ideal(2, &[&[2, 0], &[1, 1]]),
                ideal(3, &[&[2, 1, 0], &[0, 1, 2], &[1, 1, 1]]),
                triangle().power(2).unwrap(),
                MonomialIdeal::maximal(3).power(3).unwrap(),
            ];
            for i in samples {
                let n = i.ring_dim();
                let via_box = depth_of_quotient(&i).unwrap();
                let via_lattice = n - quotient_pd_via_lattice(&i).unwrap();
                assert_eq!(via_box, via_lattice, "{i:?}");
                assert_eq!(
                    betti_numbers(&i).unwrap().quotient_depth(),
                    Some(via_box),
                    "{i:?}"
                );
            }
        }

        #[test]
        fn pseudorandom_ideals_agree_across_engines() {
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                state
            };
            for _ in 0..40 {
                let n = 2 + (next() % 2) as usize;
                let count = 1 + (next() % 4) as usize;
                let gens: Vec<Monomial> = (0..count)
                    .map(|_| Monomial::new((0..n).map(|_| next() % 3).collect()))
                    .collect();
                let Ok(i) = MonomialIdeal::new(n, gens) else {
                    continue;
                };
                if i.is_unit() || i.is_zero() {
                    continue;
                }
                let via_box = depth_of_quotient(&i).unwrap();
                let via_lattice = i.ring_dim() - quotient_pd_via_lattice(&i).unwrap();
                assert_eq!(via_box, via_lattice, "{i:?}");
            }
        }

        #[test]
        fn hochster_route_matches_on_squarefree_ideals() {
            for i in [
                triangle(),
                five_cycle(),
                ideal(4, &[&[1, 1, 0, 0], &[0, 0, 1, 1]]),
                ideal(4, &[&[1, 1, 1, 0], &[0, 1, 1, 1]]),
                MonomialIdeal::maximal(3),
            ] {
                assert_eq!(
                    stanley_reisner_depth(&i).unwrap(),
                    depth_of_quotient(&i).unwrap(),
                    "{i:?}"
                );
            }
        }

        #[test]
        fn hochster_route_rejects_non_squarefree_input() {
            assert_eq!(
                stanley_reisner_depth(&ideal(2, &[&[2, 0]])),
                Err(Error::NotSquarefree)
            );
            assert_eq!(stanley_reisner_depth(&MonomialIdeal::zero(3)).unwrap(), 3);
            assert_eq!(
                stanley_reisner_depth(&MonomialIdeal::unit(3)),
                Err(Error::UnitIdeal)
            );
        }
    }

    mod profiles {
        use super::*;

        #[test]
        fn triangle_powers_stabilize_at_depth_zero() {
            let p = depth_profile(&triangle(), 5).unwrap();
            assert_eq!(p.depths(), &[1, 0]);
            assert_eq!(p.limit(), 0);
            assert_eq!(p.dstab(), Some(2));
            assert_eq!(p.depth_at(1), Some(1));
            assert_eq!(p.depth_at(3), None);
        }

        #[test]
        fn maximal_ideal_is_stable_from_the_start() {
            let p = depth_profile(&MonomialIdeal::maximal(2), 4).unwrap();
            assert_eq!(p.depths(), &[0]);
            assert_eq!(p.dstab(), Some(1));
        }

        #[test]
        fn exhausting_k_max_reports_no_stabilization() {
            let p = depth_profile(&triangle(), 1).unwrap();
            assert_eq!(p.depths(), &[1]);
            assert_eq!(p.dstab(), None);
        }

        #[test]
        fn rejects_degenerate_inputs() {
            assert_eq!(depth_profile(&triangle(), 0), Err(Error::InvalidPower));
            assert_eq!(
                depth_profile(&MonomialIdeal::zero(2), 3),
                Err(Error::ZeroIdeal)
            );
            assert_eq!(
                depth_profile(&MonomialIdeal::unit(2), 3),
                Err(Error::UnitIdeal)
            );
        }

        #[test]
        fn serializes_with_camel_case_fields() {
            let p = depth_profile(&triangle(), 5).unwrap();
            assert_eq!(
                serde_json::to_value(&p).unwrap(),
                serde_json::json!({
                    "ringDim": 3,
                    "depths": [1, 0],
                    "limit": 0,
                    "dstab": 2
                })
            );
        }
    }
}
