//! Binary relations and congruences on a finite carrier.
//!
//! Partitions are kept in canonical restricted-growth form (class labels in
//! order of first appearance), so partition equality is value equality.
//! Relations are bit-packed boolean matrices; composition is the boolean
//! matrix product.

use crate::report::{CheckReport, CheckValue, CheckWitness, WitnessObject};
use crate::semigroup::CayleyTable;
use crate::{Error, Guards, Result, Side};

const WORD_BITS: usize = 64;

/// A binary relation on `{0..n-1}` as a bit-packed n×n boolean matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BinaryRelation {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(WORD_BITS);
        BinaryRelation {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    /// The identity (diagonal) relation.
    pub fn identity(n: usize) -> Self {
        let mut r = Self::new(n);
        for x in 0..n {
            r.set(x, x, true);
        }
        r
    }

    /// The universal (all-pairs) relation.
    pub fn universal(n: usize) -> Self {
        let mut r = Self::new(n);
        for x in 0..n {
            for y in 0..n {
                r.set(x, y, true);
            }
        }
        r
    }

    pub fn carrier(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        let w = self.bits[x * self.words_per_row + y / WORD_BITS];
        w >> (y % WORD_BITS) & 1 == 1
    }

    pub fn set(&mut self, x: usize, y: usize, value: bool) {
        let idx = x * self.words_per_row + y / WORD_BITS;
        let mask = 1u64 << (y % WORD_BITS);
        if value {
            self.bits[idx] |= mask;
        } else {
            self.bits[idx] &= !mask;
        }
    }

    fn row(&self, x: usize) -> &[u64] {
        &self.bits[x * self.words_per_row..(x + 1) * self.words_per_row]
    }

    fn check_compat(&self, other: &BinaryRelation) -> Result<()> {
        if self.n != other.n {
            return Err(Error::CarrierMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Relation composition: `(x,y) ∈ a∘b` iff there is a `z` with
    /// `(x,z) ∈ a` and `(z,y) ∈ b`.
    pub fn compose(&self, other: &BinaryRelation) -> Result<BinaryRelation> {
        self.check_compat(other)?;
        let mut out = BinaryRelation::new(self.n);
        for x in 0..self.n {
            let acc_start = x * self.words_per_row;
            for z in 0..self.n {
                if self.get(x, z) {
                    let zrow = other.row(z);
                    for (k, &w) in zrow.iter().enumerate() {
                        out.bits[acc_start + k] |= w;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn union(&self, other: &BinaryRelation) -> Result<BinaryRelation> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (a, &b) in out.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
        Ok(out)
    }

    /// In-place Warshall transitive closure.
    pub fn transitive_closure(&self) -> BinaryRelation {
        let mut r = self.clone();
        for k in 0..self.n {
            let krow = r.row(k).to_vec();
            for x in 0..self.n {
                if r.get(x, k) {
                    let start = x * r.words_per_row;
                    for (i, &w) in krow.iter().enumerate() {
                        r.bits[start + i] |= w;
                    }
                }
            }
        }
        r
    }

    /// Lexicographically smallest pair on which the two relations differ.
    pub fn first_difference(&self, other: &BinaryRelation) -> Option<(usize, usize)> {
        for x in 0..self.n {
            for y in 0..self.n {
                if self.get(x, y) != other.get(x, y) {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// The relation as a dense 0/1 matrix (report serialization form).
    pub fn to_matrix(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|x| (0..self.n).map(|y| u8::from(self.get(x, y))).collect())
            .collect()
    }

    fn equivalence_violation(&self) -> Option<(&'static str, usize, usize)> {
        for x in 0..self.n {
            if !self.get(x, x) {
                return Some(("reflexivity", x, x));
            }
        }
        for x in 0..self.n {
            for y in 0..self.n {
                if self.get(x, y) && !self.get(y, x) {
                    return Some(("symmetry", x, y));
                }
            }
        }
        for x in 0..self.n {
            for z in 0..self.n {
                if !self.get(x, z) {
                    continue;
                }
                for y in 0..self.n {
                    if self.get(z, y) && !self.get(x, y) {
                        return Some(("transitivity", x, y));
                    }
                }
            }
        }
        None
    }

    pub fn is_equivalence(&self) -> bool {
        self.equivalence_violation().is_none()
    }
}

/// A partition of `{0..n-1}` in canonical form: class labels are assigned
/// in order of first appearance, so `class_of[0] == 0` and labels form a
/// contiguous range.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    class_of: Vec<usize>,
}

impl Partition {
    /// Canonicalize an arbitrary labeling.
    pub fn from_labels(labels: &[usize]) -> Partition {
        let mut map = std::collections::HashMap::new();
        let class_of = labels
            .iter()
            .map(|&l| {
                let next = map.len();
                *map.entry(l).or_insert(next)
            })
            .collect();
        Partition { class_of }
    }

    /// The identity partition (every element alone).
    pub fn identity(n: usize) -> Partition {
        Partition {
            class_of: (0..n).collect(),
        }
    }

    /// The universal partition (a single class).
    pub fn universal(n: usize) -> Partition {
        Partition {
            class_of: vec![0; n],
        }
    }

    pub fn carrier(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_of(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }

    /// Classes as sorted index lists, in label order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.class_count()];
        for (i, &c) in self.class_of.iter().enumerate() {
            out[c].push(i);
        }
        out
    }

    /// `{{1,a²},{a,a³}}`-style rendering over the given element names.
    pub fn display_with_names(&self, names: &[String]) -> String {
        let inner = self
            .classes()
            .iter()
            .map(|cls| {
                let members = cls
                    .iter()
                    .map(|&i| names[i].as_str())
                    .collect::<Vec<_>>()
                    .join(",");
                format!("{{{members}}}")
            })
            .collect::<Vec<_>>()
            .join(",");
        format!("{{{inner}}}")
    }

    /// True iff every class of `self` is contained in a class of `other`.
    pub fn refines(&self, other: &Partition) -> Result<bool> {
        if self.carrier() != other.carrier() {
            return Err(Error::CarrierMismatch {
                left: self.carrier(),
                right: other.carrier(),
            });
        }
        Ok(meet(self, other)? == *self)
    }

    /// Sort key for the canonical congruence order: finer partitions first
    /// (descending class count), ties broken lexicographically.
    fn sort_key(&self) -> (usize, Vec<usize>) {
        (
            self.carrier() - self.class_count(),
            self.class_of.clone(),
        )
    }
}

/// The equivalence relation induced by a partition.
pub fn as_relation(p: &Partition) -> BinaryRelation {
    let n = p.carrier();
    let mut r = BinaryRelation::new(n);
    for x in 0..n {
        for y in 0..n {
            if p.same_class(x, y) {
                r.set(x, y, true);
            }
        }
    }
    r
}

/// Recover the partition from an equivalence relation.
///
/// Errors with the failing axiom and a witness pair if the relation is not
/// reflexive, symmetric, and transitive.
pub fn classify(r: &BinaryRelation) -> Result<Partition> {
    if let Some((axiom, x, y)) = r.equivalence_violation() {
        return Err(Error::NotAnEquivalence { axiom, x, y });
    }
    let n = r.carrier();
    let mut labels = vec![usize::MAX; n];
    let mut next = 0;
    for x in 0..n {
        if labels[x] == usize::MAX {
            for (y, label) in labels.iter_mut().enumerate() {
                if r.get(x, y) {
                    *label = next;
                }
            }
            next += 1;
        }
    }
    Ok(Partition::from_labels(&labels))
}

/// Class-wise intersection of two partitions.
pub fn meet(a: &Partition, b: &Partition) -> Result<Partition> {
    if a.carrier() != b.carrier() {
        return Err(Error::CarrierMismatch {
            left: a.carrier(),
            right: b.carrier(),
        });
    }
    let n = a.carrier();
    let mut pair_label = std::collections::HashMap::new();
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let key = (a.class_of[i], b.class_of[i]);
        let next = pair_label.len();
        labels.push(*pair_label.entry(key).or_insert(next));
    }
    Ok(Partition::from_labels(&labels))
}

/// Join of two partitions: the equivalence closure of the union of their
/// relations (transitive closure by Warshall).
pub fn join(a: &Partition, b: &Partition) -> Result<Partition> {
    let union = as_relation(a).union(&as_relation(b))?;
    classify(&union.transitive_closure())
}

/// A witness that a partition fails compatibility with the multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceViolation {
    /// Related pair whose products land in different classes.
    pub x: usize,
    pub y: usize,
    /// Multiplier.
    pub z: usize,
    pub side: Side,
}

/// Compatibility check; on failure returns the lexicographically smallest
/// failing `(x, y, z, side)` with right multiplication checked first.
pub fn congruence_violation(
    s: &CayleyTable,
    p: &Partition,
) -> Result<Option<CongruenceViolation>> {
    if p.carrier() != s.n() {
        return Err(Error::CarrierMismatch {
            left: p.carrier(),
            right: s.n(),
        });
    }
    let n = s.n();
    for x in 0..n {
        for y in 0..n {
            if !p.same_class(x, y) {
                continue;
            }
            for z in 0..n {
                if !p.same_class(s.product(x, z), s.product(y, z)) {
                    return Ok(Some(CongruenceViolation {
                        x,
                        y,
                        z,
                        side: Side::Right,
                    }));
                }
                if !p.same_class(s.product(z, x), s.product(z, y)) {
                    return Ok(Some(CongruenceViolation {
                        x,
                        y,
                        z,
                        side: Side::Left,
                    }));
                }
            }
        }
    }
    Ok(None)
}

pub fn is_congruence(s: &CayleyTable, p: &Partition) -> Result<bool> {
    Ok(congruence_violation(s, p)?.is_none())
}

/// Iterator over all set partitions of `{0..n-1}` as restricted growth
/// strings in lexicographic order.
pub struct PartitionIter {
    current: Option<Vec<usize>>,
    max_prefix: Vec<usize>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let mut cur = self.current.take()?;
        let item = Partition {
            class_of: cur.clone(),
        };
        // Advance the restricted growth string: rightmost position that can
        // still grow, reset the suffix to zero.
        let n = cur.len();
        let mut i = n;
        loop {
            if i <= 1 {
                return Some(item); // exhausted; `current` stays None
            }
            i -= 1;
            if cur[i] <= self.max_prefix[i - 1] {
                cur[i] += 1;
                let prefix_max = self.max_prefix[i - 1].max(cur[i]);
                self.max_prefix[i] = prefix_max;
                cur[i + 1..n].fill(0);
                self.max_prefix[i + 1..n].fill(prefix_max);
                self.current = Some(cur);
                return Some(item);
            }
        }
    }
}

/// All set partitions of an n-element carrier (Bell(n) of them).
pub fn enumerate_partitions(n: usize, guards: &Guards) -> Result<PartitionIter> {
    if n > guards.max_partition_carrier {
        return Err(Error::GuardExceeded {
            what: "partition enumeration carrier",
            value: n as u128,
            bound: guards.max_partition_carrier as u128,
        });
    }
    Ok(PartitionIter {
        current: if n == 0 { None } else { Some(vec![0; n]) },
        max_prefix: vec![0; n],
    })
}

/// All congruences of `s`, canonically sorted: finest (identity) first,
/// coarsest (universal) last, ties broken lexicographically.
pub fn enumerate_congruences(s: &CayleyTable, guards: &Guards) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for p in enumerate_partitions(s.n(), guards)? {
        if is_congruence(s, &p)? {
            out.push(p);
        }
    }
    out.sort_by_key(Partition::sort_key);
    Ok(out)
}

/// Cover relation (Hasse edges) of a congruence set under refinement.
///
/// Edge `(i, j)` means congruence `i` is strictly finer than `j` with
/// nothing strictly between.
pub fn congruence_lattice(congruences: &[Partition]) -> Result<Vec<(usize, usize)>> {
    let mut edges = Vec::new();
    for (i, a) in congruences.iter().enumerate() {
        for (j, b) in congruences.iter().enumerate() {
            if i == j || !a.refines(b)? || a == b {
                continue;
            }
            let mut covered = true;
            for (k, c) in congruences.iter().enumerate() {
                if k == i || k == j {
                    continue;
                }
                if a.refines(c)? && c.refines(b)? && c != a && c != b {
                    covered = false;
                    break;
                }
            }
            if covered {
                edges.push((i, j));
            }
        }
    }
    Ok(edges)
}

/// Exhaustive permutability check: every pair of congruences must commute
/// under relation composition. The report carries the lexicographically
/// first failing congruence pair and the smallest element pair in the
/// symmetric difference of the two compositions.
pub fn is_permutable(s: &CayleyTable, label: &str, guards: &Guards) -> Result<CheckReport> {
    let start = std::time::Instant::now();
    let congruences = enumerate_congruences(s, guards)?;
    let relations: Vec<BinaryRelation> = congruences.iter().map(as_relation).collect();
    let mut witnesses = Vec::new();
    'outer: for i in 0..congruences.len() {
        for j in i + 1..congruences.len() {
            let ab = relations[i].compose(&relations[j])?;
            let ba = relations[j].compose(&relations[i])?;
            if ab != ba {
                let (x, y) = ab.first_difference(&ba).expect("relations differ");
                witnesses.push(CheckWitness {
                    left: WitnessObject::labeled(
                        congruences[i].display_with_names(s.names()),
                    ),
                    right: WitnessObject::labeled(
                        congruences[j].display_with_names(s.names()),
                    ),
                    expected: CheckValue::Relation(ab.to_matrix()),
                    actual: CheckValue::Relation(ba.to_matrix()),
                    element_pair: Some([s.names()[x].clone(), s.names()[y].clone()]),
                });
                break 'outer;
            }
        }
    }
    let verdict = witnesses.is_empty();
    Ok(CheckReport {
        check: "permutability".to_string(),
        semigroup: label.to_string(),
        prime: None,
        verdict,
        witnesses,
        context_summary: format!("{} congruences", congruences.len()),
        timing_ms: start.elapsed().as_millis() as u64,
        semigroup_permutable: Some(verdict),
        kernel_join_compatible: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{build, FamilySpec};
    use proptest::prelude::*;

    fn part(labels: &[usize]) -> Partition {
        Partition::from_labels(labels)
    }

    #[test]
    fn compose_identity_is_neutral() {
        let alpha = as_relation(&part(&[0, 0, 1]));
        let iota = BinaryRelation::identity(3);
        assert_eq!(alpha.compose(&iota).unwrap(), alpha);
        assert_eq!(iota.compose(&alpha).unwrap(), alpha);
    }

    #[test]
    fn compose_universal_absorbs() {
        let omega = BinaryRelation::universal(4);
        assert_eq!(omega.compose(&omega).unwrap(), omega);
    }

    #[test]
    fn compose_chain_witness_is_one_sided() {
        // On the 3-chain: b1 = {e,f}{g}, b2 = {e}{f,g}. (e,g) is reachable
        // through f one way round but not the other.
        let b1 = as_relation(&part(&[0, 0, 1]));
        let b2 = as_relation(&part(&[0, 1, 1]));
        let fwd = b1.compose(&b2).unwrap();
        let bwd = b2.compose(&b1).unwrap();
        assert!(fwd.get(0, 2));
        assert!(!bwd.get(0, 2));
        assert_ne!(fwd, bwd);
    }

    #[test]
    fn classify_round_trips() {
        let iota = Partition::identity(3);
        assert_eq!(classify(&as_relation(&iota)).unwrap(), iota);
        let omega = Partition::universal(2);
        assert_eq!(classify(&as_relation(&omega)).unwrap(), omega);
    }

    #[test]
    fn classify_pairs_with_diagonal() {
        let mut r = BinaryRelation::identity(3);
        r.set(0, 1, true);
        r.set(1, 0, true);
        assert_eq!(classify(&r).unwrap(), part(&[0, 0, 1]));
    }

    #[test]
    fn classify_rejects_non_equivalences() {
        let mut r = BinaryRelation::identity(3);
        r.set(0, 1, true);
        assert_eq!(
            classify(&r),
            Err(Error::NotAnEquivalence {
                axiom: "symmetry",
                x: 0,
                y: 1
            })
        );
        let mut r = BinaryRelation::new(2);
        r.set(0, 1, true);
        assert_eq!(
            classify(&r),
            Err(Error::NotAnEquivalence {
                axiom: "reflexivity",
                x: 0,
                y: 0
            })
        );
    }

    #[test]
    fn identity_is_congruence_everywhere() {
        for spec in [
            FamilySpec::TwoElementSemilattice,
            FamilySpec::CyclicGroup(4),
            FamilySpec::RectangularBand(2, 3),
        ] {
            let s = build(spec).unwrap();
            assert!(is_congruence(&s, &Partition::identity(s.n())).unwrap());
            assert!(is_congruence(&s, &Partition::universal(s.n())).unwrap());
        }
    }

    #[test]
    fn band_projection_kernel_is_congruence() {
        let s = build(FamilySpec::RectangularBand(2, 2)).unwrap();
        // alpha_L classes group by the left coordinate.
        assert!(is_congruence(&s, &part(&[0, 0, 1, 1])).unwrap());
    }

    #[test]
    fn cyclic_group_non_congruence_witness() {
        let s = build(FamilySpec::CyclicGroup(4)).unwrap();
        let p = part(&[0, 0, 1, 1]); // {1,a}{a²,a³}
        let v = congruence_violation(&s, &p).unwrap().unwrap();
        // Smallest failing tuple: multiply the pair (1,a) by a on the right.
        assert_eq!(
            v,
            CongruenceViolation {
                x: 0,
                y: 1,
                z: 1,
                side: Side::Right
            }
        );
    }

    #[test]
    fn congruence_counts_of_builtin_families() {
        let two = build(FamilySpec::TwoElementSemilattice).unwrap();
        let cs = enumerate_congruences(&two, &Guards::default()).unwrap();
        assert_eq!(cs, vec![Partition::identity(2), Partition::universal(2)]);

        let band = build(FamilySpec::RectangularBand(2, 2)).unwrap();
        let cs = enumerate_congruences(&band, &Guards::default()).unwrap();
        assert_eq!(
            cs,
            vec![
                Partition::identity(4),
                part(&[0, 0, 1, 1]), // alpha_L
                part(&[0, 1, 0, 1]), // alpha_R
                Partition::universal(4),
            ]
        );

        let c4 = build(FamilySpec::CyclicGroup(4)).unwrap();
        let cs = enumerate_congruences(&c4, &Guards::default()).unwrap();
        assert_eq!(
            cs,
            vec![
                Partition::identity(4),
                part(&[0, 1, 0, 1]), // {1,a²}{a,a³}
                Partition::universal(4),
            ]
        );
    }

    #[test]
    fn congruence_enumeration_guard() {
        let s = build(FamilySpec::LeftZero(11)).unwrap();
        assert!(matches!(
            enumerate_congruences(&s, &Guards::default()),
            Err(Error::GuardExceeded { .. })
        ));
    }

    #[test]
    fn bell_numbers_small() {
        let bells = [1usize, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bells.iter().enumerate().skip(1) {
            let got = enumerate_partitions(n, &Guards::default()).unwrap().count();
            assert_eq!(got, b, "Bell({n})");
        }
    }

    #[test]
    fn join_and_meet_bounds() {
        let alpha = part(&[0, 1, 0, 1]);
        let iota = Partition::identity(4);
        let omega = Partition::universal(4);
        assert_eq!(join(&alpha, &iota).unwrap(), alpha);
        assert_eq!(meet(&alpha, &omega).unwrap(), alpha);
        assert_eq!(join(&alpha, &alpha).unwrap(), alpha);
    }

    #[test]
    fn join_on_chain_reaches_universal() {
        let j = join(&part(&[0, 0, 1]), &part(&[0, 1, 1])).unwrap();
        assert_eq!(j, Partition::universal(3));
    }

    #[test]
    fn congruences_closed_under_join_and_meet() {
        for spec in [
            FamilySpec::CyclicGroup(4),
            FamilySpec::RectangularBand(2, 2),
            FamilySpec::SemilatticeChain(3),
        ] {
            let s = build(spec).unwrap();
            let cs = enumerate_congruences(&s, &Guards::default()).unwrap();
            for a in &cs {
                for b in &cs {
                    assert!(cs.contains(&join(a, b).unwrap()));
                    assert!(cs.contains(&meet(a, b).unwrap()));
                }
            }
        }
    }

    #[test]
    fn permutable_families() {
        for spec in [
            FamilySpec::CyclicGroup(4),
            FamilySpec::TwoElementSemilattice,
            FamilySpec::LeftZero(2),
            FamilySpec::RightZero(2),
            FamilySpec::RectangularBand(2, 2),
        ] {
            let s = build(spec.clone()).unwrap();
            let report = is_permutable(&s, &format!("{spec:?}"), &Guards::default()).unwrap();
            assert!(report.verdict, "{spec:?} should be permutable");
            assert!(report.witnesses.is_empty());
        }
    }

    #[test]
    fn chain_three_is_not_permutable() {
        let s = build(FamilySpec::SemilatticeChain(3)).unwrap();
        let report = is_permutable(&s, "chain-semilattice:3", &Guards::default()).unwrap();
        assert!(!report.verdict);
        let w = &report.witnesses[0];
        assert_eq!(w.left.label, "{{e,f},{g}}");
        assert_eq!(w.right.label, "{{e},{f,g}}");
        assert_eq!(w.element_pair, Some(["e".to_string(), "g".to_string()]));
    }

    #[test]
    fn oversized_bands_are_not_permutable() {
        for (l, r) in [(2, 3), (3, 2)] {
            let s = build(FamilySpec::RectangularBand(l, r)).unwrap();
            let report = is_permutable(&s, "band", &Guards::default()).unwrap();
            assert!(!report.verdict, "band {l}x{r} must fail");
            assert!(!report.witnesses.is_empty());
        }
    }

    #[test]
    fn permutability_lemma_on_permutable_families() {
        // On a permutable semigroup, composition of congruences equals the
        // relation of their join.
        for spec in [
            FamilySpec::CyclicGroup(4),
            FamilySpec::TwoElementSemilattice,
            FamilySpec::RectangularBand(2, 2),
            FamilySpec::LeftZero(2),
            FamilySpec::RightZero(2),
        ] {
            let s = build(spec).unwrap();
            let cs = enumerate_congruences(&s, &Guards::default()).unwrap();
            for a in &cs {
                for b in &cs {
                    let composed = as_relation(a).compose(&as_relation(b)).unwrap();
                    let joined = as_relation(&join(a, b).unwrap());
                    assert_eq!(composed, joined);
                }
            }
        }
    }

    #[test]
    fn composition_of_equivalences_is_equivalence_iff_commuting() {
        // Exhaustive over all partition pairs on carriers up to 5.
        for n in 1..=5 {
            let parts: Vec<Partition> = enumerate_partitions(n, &Guards::default())
                .unwrap()
                .collect();
            for a in &parts {
                for b in &parts {
                    let ra = as_relation(a);
                    let rb = as_relation(b);
                    let ab = ra.compose(&rb).unwrap();
                    let ba = rb.compose(&ra).unwrap();
                    assert_eq!(ab.is_equivalence(), ab == ba, "n={n} a={a:?} b={b:?}");
                }
            }
        }
    }

    fn arb_relation(n: usize) -> impl Strategy<Value = BinaryRelation> {
        proptest::collection::vec(proptest::bool::ANY, n * n).prop_map(move |bits| {
            let mut r = BinaryRelation::new(n);
            for x in 0..n {
                for y in 0..n {
                    r.set(x, y, bits[x * n + y]);
                }
            }
            r
        })
    }

    proptest! {
        #[test]
        fn composition_is_associative(
            a in arb_relation(6),
            b in arb_relation(6),
            c in arb_relation(6),
        ) {
            let left = a.compose(&b).unwrap().compose(&c).unwrap();
            let right = a.compose(&b.compose(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn classify_as_relation_is_identity(labels in proptest::collection::vec(0usize..6, 1..9)) {
            let p = Partition::from_labels(&labels);
            prop_assert_eq!(classify(&as_relation(&p)).unwrap(), p);
        }
    }
}
