//! Truncated Fock space over the lattice {(k,l) : k,l ≥ 0, k+l ≤ cutoff}
//! and exact sparse operator algebra on it.
//!
//! Operators are stored column-sparse (by source index) with exact field
//! coefficients. Every operator carries its `reach` — the maximal lattice
//! displacement |Δk|+|Δl| over its transitions — and the set of sources on
//! which construction had to drop an out-of-cutoff target. Relation checks
//! compare operators only on the safe domain, where no truncation can have
//! occurred; the sticky `truncated` flag on state vectors is a second line
//! of defense against silent loss.

use crate::field::FieldElem;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub k: u32,
    pub l: u32,
}

impl BasisIndex {
    pub fn new(k: u32, l: u32) -> Self {
        BasisIndex { k, l }
    }

    pub fn level(&self) -> u32 {
        self.k + self.l
    }
}

/// All basis indices with k+l ≤ cutoff, in (level, k) order.
pub fn basis_indices(cutoff: u32) -> Vec<BasisIndex> {
    let mut out = Vec::new();
    for n in 0..=cutoff {
        for k in 0..=n {
            out.push(BasisIndex::new(k, n - k));
        }
    }
    out
}

pub fn space_dim(cutoff: u32) -> usize {
    ((cutoff as usize + 1) * (cutoff as usize + 2)) / 2
}

/// Finitely supported field-valued amplitude map. The `truncated` flag is
/// sticky: once an evaluation loses amplitude past the cutoff, every vector
/// derived from it stays flagged.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StateVector {
    amps: BTreeMap<BasisIndex, FieldElem>,
    truncated: bool,
}

impl StateVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(idx: BasisIndex) -> Self {
        let mut v = Self::default();
        v.amps.insert(idx, FieldElem::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn amplitude(&self, idx: BasisIndex) -> FieldElem {
        self.amps.get(&idx).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn amplitudes(&self) -> impl Iterator<Item = (&BasisIndex, &FieldElem)> {
        self.amps.iter()
    }

    fn insert_add(&mut self, idx: BasisIndex, val: FieldElem) {
        if val.is_zero() {
            return;
        }
        match self.amps.get_mut(&idx) {
            Some(existing) => {
                let sum = &*existing + &val;
                if sum.is_zero() {
                    self.amps.remove(&idx);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.amps.insert(idx, val);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.truncated |= other.truncated;
        for (idx, v) in &other.amps {
            out.insert_add(*idx, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.truncated |= other.truncated;
        for (idx, v) in &other.amps {
            out.insert_add(*idx, -v);
        }
        out
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        let mut out = Self {
            amps: BTreeMap::new(),
            truncated: self.truncated,
        };
        for (idx, v) in &self.amps {
            out.insert_add(*idx, v.mul_ref(c));
        }
        out
    }

    /// Largest coefficient magnitude, for residual reporting.
    pub fn max_abs(&self) -> f64 {
        self.amps
            .values()
            .map(|v| v.abs_approx())
            .fold(0.0, f64::max)
    }
}

/// Sparse operator on the truncated space, stored by source column.
///
/// `reach` is the maximal level displacement |Δ(k+l)| over transitions;
/// only level crossings can hit the cutoff, so this is the quantity that
/// governs truncation-free evaluation.
#[derive(Debug, Clone)]
pub struct SparseOp {
    cutoff: u32,
    cols: BTreeMap<BasisIndex, Vec<(BasisIndex, FieldElem)>>,
    reach: u32,
    /// Sources whose untruncated image would leave the space.
    lossy: BTreeSet<BasisIndex>,
}

impl PartialEq for SparseOp {
    fn eq(&self, other: &Self) -> bool {
        self.cutoff == other.cutoff && self.cols == other.cols
    }
}

impl Eq for SparseOp {}

fn displacement(src: BasisIndex, dst: BasisIndex) -> u32 {
    src.level().abs_diff(dst.level())
}

impl SparseOp {
    pub fn zero(cutoff: u32) -> Self {
        SparseOp {
            cutoff,
            cols: BTreeMap::new(),
            reach: 0,
            lossy: BTreeSet::new(),
        }
    }

    pub fn identity(cutoff: u32) -> Self {
        let mut cols = BTreeMap::new();
        for idx in basis_indices(cutoff) {
            cols.insert(idx, vec![(idx, FieldElem::one())]);
        }
        SparseOp {
            cutoff,
            cols,
            reach: 0,
            lossy: BTreeSet::new(),
        }
    }

    /// Build from raw transitions given with signed indices. Transitions
    /// with a negative index vanish; sources beyond the cutoff do not exist;
    /// targets beyond the cutoff are dropped and the source is marked lossy.
    pub fn from_transitions<I>(cutoff: u32, transitions: I) -> Self
    where
        I: IntoIterator<Item = ((i64, i64), (i64, i64), FieldElem)>,
    {
        let mut cols: BTreeMap<BasisIndex, BTreeMap<BasisIndex, FieldElem>> = BTreeMap::new();
        let mut lossy = BTreeSet::new();
        for ((sk, sl), (dk, dl), coeff) in transitions {
            if coeff.is_zero() || sk < 0 || sl < 0 || dk < 0 || dl < 0 {
                continue;
            }
            if sk + sl > cutoff as i64 {
                continue;
            }
            let src = BasisIndex::new(sk as u32, sl as u32);
            if dk + dl > cutoff as i64 {
                lossy.insert(src);
                continue;
            }
            let dst = BasisIndex::new(dk as u32, dl as u32);
            let entry = cols.entry(src).or_default();
            let cur = entry.entry(dst).or_insert_with(FieldElem::zero);
            *cur = &*cur + &coeff;
        }
        let cols: BTreeMap<_, Vec<_>> = cols
            .into_iter()
            .filter_map(|(src, m)| {
                let v: Vec<_> = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if v.is_empty() {
                    None
                } else {
                    Some((src, v))
                }
            })
            .collect();
        let reach = cols
            .iter()
            .flat_map(|(src, tr)| tr.iter().map(move |(dst, _)| displacement(*src, *dst)))
            .max()
            .unwrap_or(0);
        SparseOp {
            cutoff,
            cols,
            reach,
            lossy,
        }
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn reach(&self) -> u32 {
        self.reach
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    pub fn column(&self, src: BasisIndex) -> &[(BasisIndex, FieldElem)] {
        self.cols.get(&src).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn columns(&self) -> impl Iterator<Item = (&BasisIndex, &Vec<(BasisIndex, FieldElem)>)> {
        self.cols.iter()
    }

    /// Linear extension of the transition map. Amplitude on a lossy source
    /// sets the sticky truncation flag on the result.
    pub fn apply(&self, v: &StateVector) -> StateVector {
        let mut out = StateVector {
            amps: BTreeMap::new(),
            truncated: v.truncated,
        };
        for (idx, amp) in &v.amps {
            if self.lossy.contains(idx) {
                out.truncated = true;
            }
            for (dst, c) in self.column(*idx) {
                out.insert_add(*dst, c.mul_ref(amp));
            }
        }
        out
    }

    fn rebuild(cutoff: u32, cols: BTreeMap<BasisIndex, Vec<(BasisIndex, FieldElem)>>, lossy: BTreeSet<BasisIndex>) -> Self {
        let reach = cols
            .iter()
            .flat_map(|(src, tr)| tr.iter().map(move |(dst, _)| displacement(*src, *dst)))
            .max()
            .unwrap_or(0);
        SparseOp {
            cutoff,
            cols,
            reach,
            lossy,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.cutoff, other.cutoff, "cutoff mismatch");
        let mut cols: BTreeMap<BasisIndex, BTreeMap<BasisIndex, FieldElem>> = BTreeMap::new();
        for op in [self, other] {
            for (src, tr) in &op.cols {
                let entry = cols.entry(*src).or_default();
                for (dst, c) in tr {
                    let cur = entry.entry(*dst).or_insert_with(FieldElem::zero);
                    *cur = &*cur + c;
                }
            }
        }
        let cols = cols
            .into_iter()
            .filter_map(|(src, m)| {
                let v: Vec<_> = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if v.is_empty() {
                    None
                } else {
                    Some((src, v))
                }
            })
            .collect();
        let lossy = self.lossy.union(&other.lossy).copied().collect();
        Self::rebuild(self.cutoff, cols, lossy)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&FieldElem::from_int(-1)))
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.cutoff);
        }
        let cols = self
            .cols
            .iter()
            .map(|(src, tr)| {
                (
                    *src,
                    tr.iter().map(|(dst, v)| (*dst, v.mul_ref(c))).collect(),
                )
            })
            .collect();
        Self::rebuild(self.cutoff, cols, self.lossy.clone())
    }

    /// Composition self ∘ other (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.cutoff, other.cutoff, "cutoff mismatch");
        let mut cols: BTreeMap<BasisIndex, BTreeMap<BasisIndex, FieldElem>> = BTreeMap::new();
        let mut lossy = other.lossy.clone();
        for (src, tr) in &other.cols {
            let entry = cols.entry(*src).or_default();
            for (mid, c1) in tr {
                if self.lossy.contains(mid) {
                    lossy.insert(*src);
                }
                for (dst, c2) in self.column(*mid) {
                    let cur = entry.entry(*dst).or_insert_with(FieldElem::zero);
                    *cur = &*cur + &c1.mul_ref(c2);
                }
            }
        }
        let cols = cols
            .into_iter()
            .filter_map(|(src, m)| {
                let v: Vec<_> = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if v.is_empty() {
                    None
                } else {
                    Some((src, v))
                }
            })
            .collect();
        Self::rebuild(self.cutoff, cols, lossy)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.compose(other).sub(&other.compose(self))
    }

    /// Transpose with conjugated coefficients (the basis is orthonormal).
    /// Lossiness of the transpose is over-approximated by reach.
    pub fn adjoint(&self) -> Self {
        let mut cols: BTreeMap<BasisIndex, BTreeMap<BasisIndex, FieldElem>> = BTreeMap::new();
        for (src, tr) in &self.cols {
            for (dst, c) in tr {
                let entry = cols.entry(*dst).or_default();
                let cur = entry.entry(*src).or_insert_with(FieldElem::zero);
                *cur = &*cur + &c.conj();
            }
        }
        let cols: BTreeMap<_, Vec<_>> = cols
            .into_iter()
            .filter_map(|(src, m)| {
                let v: Vec<_> = m.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if v.is_empty() {
                    None
                } else {
                    Some((src, v))
                }
            })
            .collect();
        let reach = self.reach;
        let lossy = if reach == 0 {
            BTreeSet::new()
        } else {
            basis_indices(self.cutoff)
                .into_iter()
                .filter(|idx| idx.level() + reach > self.cutoff)
                .collect()
        };
        Self::rebuild(self.cutoff, cols, lossy)
    }

    /// Exact column-by-column comparison on basis vectors with level ≤
    /// `max_level`. Returns equality and the largest differing coefficient
    /// magnitude (zero when equal).
    pub fn equal_on_domain(&self, other: &Self, max_level: u32) -> (bool, f64) {
        match self.first_difference(other, max_level) {
            None => (true, 0.0),
            Some((_, residual)) => (false, residual),
        }
    }

    /// First column (in (level,k) order) where the two operators differ on
    /// the domain, together with the maximal residual over the whole domain.
    pub fn first_difference(
        &self,
        other: &Self,
        max_level: u32,
    ) -> Option<(BasisIndex, f64)> {
        let mut first = None;
        let mut residual = 0.0f64;
        for idx in basis_indices(self.cutoff.min(other.cutoff)) {
            if idx.level() > max_level {
                continue;
            }
            let a = self.apply(&StateVector::basis(idx));
            let b = other.apply(&StateVector::basis(idx));
            let diff = a.sub(&b);
            if !diff.is_zero() {
                if first.is_none() {
                    first = Some(idx);
                }
                residual = residual.max(diff.max_abs());
            }
        }
        first.map(|idx| (idx, residual))
    }

    /// Deterministic dump: rows "k,l -> k',l' : coeff" sorted by (k,l,k',l').
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (src, tr) in &self.cols {
            for (dst, c) in tr {
                writeln!(
                    out,
                    "{},{} -> {},{} : {}",
                    src.k,
                    src.l,
                    dst.k,
                    dst.l,
                    c.to_text()
                )
                .expect("string write");
            }
        }
        out
    }
}

/// Single-transition operator P^{m,n}_{s,t}: sends U_{m,n} to U_{s,t} and
/// annihilates everything else. Any negative index yields the zero operator.
pub fn matrix_unit(cutoff: u32, m: i64, n: i64, s: i64, t: i64) -> SparseOp {
    SparseOp::from_transitions(cutoff, [((m, n), (s, t), FieldElem::one())])
}

/// cutoff minus the summed reaches: basis vectors with level at most this
/// value evaluate truncation-free under any single product of the listed
/// operators. Negative means the cutoff is too small.
pub fn safe_domain(ops: &[&SparseOp], cutoff: u32) -> i64 {
    cutoff as i64 - ops.iter().map(|op| op.reach() as i64).sum::<i64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const CUT: u32 = 8;

    fn random_op(rng: &mut ChaCha8Rng) -> SparseOp {
        let mut tr = Vec::new();
        for _ in 0..rng.gen_range(1..10) {
            let sk = rng.gen_range(0..=4i64);
            let sl = rng.gen_range(0..=4i64);
            let dk = (sk + rng.gen_range(-2..=2i64)).max(0);
            let dl = (sl + rng.gen_range(-2..=2i64)).max(0);
            let c = FieldElem::from_ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4));
            tr.push(((sk, sl), (dk, dl), c));
        }
        SparseOp::from_transitions(CUT, tr)
    }

    #[test]
    fn identity_and_zero_application() {
        let id = SparseOp::identity(CUT);
        let z = SparseOp::zero(CUT);
        let v = StateVector::basis(BasisIndex::new(2, 3)).scale(&FieldElem::sqrt2());
        assert_eq!(id.apply(&v), v);
        assert!(z.apply(&v).is_zero());
        assert_eq!(id.compose(&z), z);
    }

    #[test]
    fn matrix_unit_examples() {
        let p = matrix_unit(CUT, 1, 0, 0, 1);
        let hit = p.apply(&StateVector::basis(BasisIndex::new(1, 0)));
        assert_eq!(hit, StateVector::basis(BasisIndex::new(0, 1)));
        assert!(p
            .apply(&StateVector::basis(BasisIndex::new(0, 0)))
            .is_zero());
        assert!(matrix_unit(CUT, 0, 0, -1, 0).is_zero());
        // adjoint of a single transition is the reversed transition
        assert_eq!(p.adjoint(), matrix_unit(CUT, 0, 1, 1, 0));
    }

    #[test]
    fn truncation_is_flagged_not_erred() {
        // transition leaving the cutoff marks the source lossy
        let op = SparseOp::from_transitions(3, [((3, 0), (4, 0), FieldElem::one())]);
        assert!(op.is_zero());
        let out = op.apply(&StateVector::basis(BasisIndex::new(3, 0)));
        assert!(out.is_zero());
        assert!(out.truncated());
        let ok = op.apply(&StateVector::basis(BasisIndex::new(0, 0)));
        assert!(!ok.truncated());
    }

    #[test]
    fn compose_bilinear_associative_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..25 {
            let a = random_op(&mut rng);
            let b = random_op(&mut rng);
            let c = random_op(&mut rng);
            assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
            assert_eq!(
                a.compose(&b.add(&c)),
                a.compose(&b).add(&a.compose(&c))
            );
            assert!(a.compose(&b).reach() <= a.reach() + b.reach());
            assert!(a.commutator(&b).reach() <= a.reach() + b.reach());
        }
    }

    #[test]
    fn adjoint_laws_on_safe_domain() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..20 {
            let a = random_op(&mut rng);
            let b = random_op(&mut rng);
            let margin = (a.reach() + b.reach()).min(CUT);
            let safe = CUT - margin;
            let (ok, _) = a.adjoint().adjoint().equal_on_domain(&a, CUT - a.reach().min(CUT));
            assert!(ok, "adjoint involution");
            let lhs = a.compose(&b).adjoint();
            let rhs = b.adjoint().compose(&a.adjoint());
            let (ok, _) = lhs.equal_on_domain(&rhs, safe);
            assert!(ok, "adjoint antihomomorphism");
        }
    }

    #[test]
    fn jacobi_identity_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..15 {
            let a = random_op(&mut rng);
            let b = random_op(&mut rng);
            let c = random_op(&mut rng);
            let total = a.reach() + b.reach() + c.reach();
            if total > CUT {
                continue;
            }
            let sum = a
                .commutator(&b)
                .commutator(&c)
                .add(&b.commutator(&c).commutator(&a))
                .add(&c.commutator(&a).commutator(&b));
            let (ok, residual) = sum.equal_on_domain(&SparseOp::zero(CUT), CUT - total);
            assert!(ok, "jacobi residual {residual}");
        }
    }

    #[test]
    fn safe_domain_examples() {
        let z_like = SparseOp::from_transitions(
            10,
            basis_indices(10).into_iter().flat_map(|i| {
                let (k, l) = (i.k as i64, i.l as i64);
                [
                    ((k, l), (k + 1, l), FieldElem::one()),
                    ((k, l), (k, l - 1), FieldElem::one()),
                    ((k, l), (k - 1, l + 1), FieldElem::one()),
                ]
            }),
        );
        assert_eq!(z_like.reach(), 1);
        assert_eq!(safe_domain(&[&z_like], 10), 9);
        let rad = SparseOp::from_transitions(
            10,
            basis_indices(10)
                .into_iter()
                .map(|i| ((i.k as i64, i.l as i64), (i.k as i64 + 1, i.l as i64 + 1), FieldElem::one())),
        );
        assert_eq!(rad.reach(), 2);
        assert_eq!(safe_domain(&[&rad, &rad], 10), 6);
        assert_eq!(safe_domain(&[&SparseOp::identity(10)], 10), 10);
    }

    #[test]
    fn dump_is_sorted() {
        let op = matrix_unit(CUT, 1, 0, 0, 1).add(&matrix_unit(CUT, 0, 2, 1, 1));
        let dump = op.dump();
        assert_eq!(dump, "0,2 -> 1,1 : 1\n1,0 -> 0,1 : 1\n");
    }
}
