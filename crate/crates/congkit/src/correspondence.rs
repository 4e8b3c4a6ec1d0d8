//! The map `phi: J -> rho_J` from algebra ideals to semigroup congruences,
//! the reverse construction F[alpha], kernel classes of phi, and the three
//! executable verdicts.
//!
//! Composition on the congruence lattice of the algebra is realized through
//! ideal sums (`theta_I ∘ theta_J = theta_{I+J}`), which is itself verified
//! exhaustively by `SemigroupAlgebra::congruence_permutability_check` rather
//! than assumed.

use std::time::Instant;

use crate::algebra::{Ideal, SemigroupAlgebra};
use crate::gf::{self, Subspace};
use crate::relations::{
    as_relation, classify, congruence_violation, enumerate_congruences, join, meet,
    BinaryRelation, Partition,
};
use crate::report::{CheckReport, CheckValue, CheckWitness, WitnessObject};
use crate::{Error, Guards, Result};

/// rho_J: the congruence on S relating s and t iff s − t ∈ J.
///
/// The result is asserted to be a congruence; a failure is an internal
/// invariant violation and must never fire.
pub fn rho(algebra: &SemigroupAlgebra, ideal: &Ideal) -> Result<Partition> {
    let n = algebra.dim();
    let mut rel = BinaryRelation::new(n);
    for s in 0..n {
        for t in 0..n {
            let diff = algebra
                .basis_element(s)
                .sub(&algebra.basis_element(t))?;
            if gf::member(&diff, ideal.space())? {
                rel.set(s, t, true);
            }
        }
    }
    let partition = classify(&rel)
        .map_err(|e| Error::InternalInvariant(format!("rho produced a non-equivalence: {e}")))?;
    if congruence_violation(algebra.semigroup(), &partition)?.is_some() {
        return Err(Error::InternalInvariant(
            "rho produced a non-congruence".to_string(),
        ));
    }
    Ok(partition)
}

/// The span of `{s − t : (s,t) ∈ alpha}`.
pub fn span_of_differences(algebra: &SemigroupAlgebra, alpha: &Partition) -> Result<Subspace> {
    if alpha.carrier() != algebra.dim() {
        return Err(Error::CarrierMismatch {
            left: alpha.carrier(),
            right: algebra.dim(),
        });
    }
    let mut rows = Vec::new();
    for s in 0..algebra.dim() {
        for t in 0..algebra.dim() {
            if s != t && alpha.same_class(s, t) {
                rows.push(algebra.basis_element(s).sub(&algebra.basis_element(t))?);
            }
        }
    }
    gf::rref(algebra.field(), algebra.dim(), &rows)
}

/// Kernel of the extended canonical map F[S] → F[S/alpha], computed from
/// the class-indicator matrix (one equation per alpha-class).
pub fn quotient_map_kernel(algebra: &SemigroupAlgebra, alpha: &Partition) -> Result<Subspace> {
    if alpha.carrier() != algebra.dim() {
        return Err(Error::CarrierMismatch {
            left: alpha.carrier(),
            right: algebra.dim(),
        });
    }
    let matrix: Vec<Vec<u64>> = alpha
        .classes()
        .iter()
        .map(|cls| {
            let mut row = vec![0u64; algebra.dim()];
            for &i in cls {
                row[i] = 1;
            }
            row
        })
        .collect();
    gf::kernel(algebra.field(), algebra.dim(), &matrix)
}

/// F[alpha], the ideal of F[S] induced by a congruence alpha.
///
/// Built as the span of class differences and cross-checked against the
/// kernel of the quotient map; the two constructions must agree.
pub fn f_of_alpha(algebra: &SemigroupAlgebra, alpha: &Partition) -> Result<Ideal> {
    if congruence_violation(algebra.semigroup(), alpha)?.is_some() {
        return Err(Error::NotACongruence);
    }
    let span = span_of_differences(algebra, alpha)?;
    let kernel = quotient_map_kernel(algebra, alpha)?;
    if span != kernel {
        return Err(Error::InternalInvariant(
            "span-of-differences disagrees with quotient-map kernel".to_string(),
        ));
    }
    algebra
        .ideal_from_space(span)
        .map_err(|_| Error::InternalInvariant("F[alpha] is not an ideal".to_string()))
}

/// The fully materialized correspondence for one algebra: all ideals, all
/// congruences, and the index map `phi`.
#[derive(Debug, Clone)]
pub struct PhiContext {
    algebra: SemigroupAlgebra,
    prime: u64,
    label: String,
    ideals: Vec<Ideal>,
    congruences: Vec<Partition>,
    /// `phi[i]` = index into `congruences` of rho(ideals[i]).
    phi: Vec<usize>,
}

/// Compute rho for every ideal and assert the cited structure: phi is total
/// and surjective, phi(zero) = identity, phi(full) = universal.
pub fn build_phi_context(algebra: SemigroupAlgebra, guards: &Guards) -> Result<PhiContext> {
    let ideals = algebra.enumerate_ideals(guards)?;
    let congruences = enumerate_congruences(algebra.semigroup(), guards)?;
    let mut phi = Vec::with_capacity(ideals.len());
    for ideal in &ideals {
        let image = rho(&algebra, ideal)?;
        let index = congruences
            .iter()
            .position(|c| *c == image)
            .ok_or_else(|| {
                Error::InternalInvariant("rho image missing from congruence list".to_string())
            })?;
        phi.push(index);
    }
    for c in 0..congruences.len() {
        if !phi.contains(&c) {
            return Err(Error::InternalInvariant(format!(
                "phi is not surjective: congruence {c} has no preimage"
            )));
        }
    }
    let n = algebra.dim();
    if congruences.first() != Some(&Partition::identity(n))
        || congruences.last() != Some(&Partition::universal(n))
    {
        return Err(Error::InternalInvariant(
            "congruence list must run from identity to universal".to_string(),
        ));
    }
    if phi.first() != Some(&0) || phi.last() != Some(&(congruences.len() - 1)) {
        return Err(Error::InternalInvariant(
            "phi must send the zero ideal to identity and the full ideal to universal"
                .to_string(),
        ));
    }
    let label = algebra.semigroup().name().to_string();
    let prime = algebra.field().p();
    Ok(PhiContext {
        algebra,
        prime,
        label,
        ideals,
        congruences,
        phi,
    })
}

impl PhiContext {
    pub fn algebra(&self) -> &SemigroupAlgebra {
        &self.algebra
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn congruences(&self) -> &[Partition] {
        &self.congruences
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    /// The congruence rho(ideals[i]).
    pub fn image_of(&self, ideal_index: usize) -> &Partition {
        &self.congruences[self.phi[ideal_index]]
    }

    fn congruence_display(&self, p: &Partition) -> String {
        p.display_with_names(self.algebra.semigroup().names())
    }

    fn ideal_witness(&self, i: usize) -> WitnessObject {
        WitnessObject::with_basis(
            self.algebra.span_label(self.ideals[i].space()),
            self.ideals[i].space().basis().to_vec(),
        )
    }

    /// Group ideal indices by equal phi image, ordered by congruence index.
    pub fn kernel_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.congruences.len()];
        for (i, &c) in self.phi.iter().enumerate() {
            classes[c].push(i);
        }
        classes.retain(|c| !c.is_empty());
        classes
    }

    /// Whether every pair of semigroup congruences commutes (computed on
    /// the already-enumerated congruence list).
    fn semigroup_is_permutable(&self) -> Result<bool> {
        let rels: Vec<BinaryRelation> = self.congruences.iter().map(as_relation).collect();
        for a in &rels {
            for b in &rels {
                if a.compose(b)? != b.compose(a)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn summary(&self) -> String {
        format!(
            "{} ideals, {} congruences",
            self.ideals.len(),
            self.congruences.len()
        )
    }

    /// `rho(I ∩ J) = rho(I) ∧ rho(J)` for all ideal pairs. Expected true
    /// for every input; a failure indicates an implementation bug.
    pub fn check_meet_homomorphism(&self) -> Result<CheckReport> {
        let start = Instant::now();
        let mut witnesses = Vec::new();
        for i in 0..self.ideals.len() {
            for j in i..self.ideals.len() {
                let inter = self
                    .algebra
                    .ideal_intersect(&self.ideals[i], &self.ideals[j])?;
                let lhs = rho(&self.algebra, &inter)?;
                let rhs = meet(self.image_of(i), self.image_of(j))?;
                if lhs != rhs {
                    witnesses.push(self.partition_witness(i, j, &lhs, &rhs));
                }
            }
        }
        Ok(self.report("meet-homomorphism", witnesses, start, None, None))
    }

    /// `rho(I + J) = rho(I) ∨ rho(J)` for all ideal pairs: the
    /// join-compatibility of ker phi.
    pub fn check_join_compatible_kernel(&self) -> Result<CheckReport> {
        let start = Instant::now();
        let mut witnesses = Vec::new();
        for i in 0..self.ideals.len() {
            for j in i..self.ideals.len() {
                let sum = self.algebra.ideal_sum(&self.ideals[i], &self.ideals[j])?;
                let lhs = rho(&self.algebra, &sum)?;
                let rhs = join(self.image_of(i), self.image_of(j))?;
                if lhs != rhs {
                    witnesses.push(self.partition_witness(i, j, &lhs, &rhs));
                }
            }
        }
        Ok(self.report("join-compatibility", witnesses, start, None, None))
    }

    /// `as_relation(rho(I+J)) = as_relation(rho(I)) ∘ as_relation(rho(J))`
    /// for all ordered ideal pairs, using that composition of algebra
    /// congruences is realized by ideal sums. The report also records
    /// whether S is permutable and whether ker phi is join-compatible.
    pub fn check_circ_homomorphism(&self) -> Result<CheckReport> {
        let start = Instant::now();
        let mut witnesses = Vec::new();
        for i in 0..self.ideals.len() {
            for j in 0..self.ideals.len() {
                let sum = self.algebra.ideal_sum(&self.ideals[i], &self.ideals[j])?;
                let lhs = as_relation(&rho(&self.algebra, &sum)?);
                let rhs = as_relation(self.image_of(i)).compose(&as_relation(self.image_of(j)))?;
                if lhs != rhs {
                    let (x, y) = lhs.first_difference(&rhs).expect("relations differ");
                    let names = self.algebra.semigroup().names();
                    witnesses.push(CheckWitness {
                        left: self.ideal_witness(i),
                        right: self.ideal_witness(j),
                        expected: CheckValue::Relation(lhs.to_matrix()),
                        actual: CheckValue::Relation(rhs.to_matrix()),
                        element_pair: Some([names[x].clone(), names[y].clone()]),
                    });
                }
            }
        }
        let permutable = self.semigroup_is_permutable()?;
        let join_compatible = self.check_join_compatible_kernel()?.verdict;
        Ok(self.report(
            "circ-homomorphism",
            witnesses,
            start,
            Some(permutable),
            Some(join_compatible),
        ))
    }

    fn partition_witness(
        &self,
        i: usize,
        j: usize,
        expected: &Partition,
        actual: &Partition,
    ) -> CheckWitness {
        let element_pair = as_relation(expected)
            .first_difference(&as_relation(actual))
            .map(|(x, y)| {
                let names = self.algebra.semigroup().names();
                [names[x].clone(), names[y].clone()]
            });
        CheckWitness {
            left: self.ideal_witness(i),
            right: self.ideal_witness(j),
            expected: CheckValue::Partition(self.congruence_display(expected)),
            actual: CheckValue::Partition(self.congruence_display(actual)),
            element_pair,
        }
    }

    fn report(
        &self,
        check: &str,
        witnesses: Vec<CheckWitness>,
        start: Instant,
        semigroup_permutable: Option<bool>,
        kernel_join_compatible: Option<bool>,
    ) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            semigroup: self.label.clone(),
            prime: Some(self.prime),
            verdict: witnesses.is_empty(),
            witnesses,
            context_summary: self.summary(),
            timing_ms: start.elapsed().as_millis() as u64,
            semigroup_permutable,
            kernel_join_compatible,
        }
    }
}
