//! The semigroup algebra F_p[S] and its two-sided ideals.
//!
//! S is a basis of F_p[S], so multiplication of basis vectors is
//! basis-to-basis through the Cayley table and extends bilinearly.

use crate::gf::{self, PrimeField, Subspace, Vector};
use crate::relations::BinaryRelation;
use crate::semigroup::CayleyTable;
use crate::{Error, Guards, Result, Side};

/// An element of the algebra: a coefficient vector indexed by the
/// semigroup elements.
pub type AlgebraElement = Vector;

/// F_p[S] for a fixed finite semigroup S and prime field F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupAlgebra {
    semigroup: CayleyTable,
    field: PrimeField,
}

impl SemigroupAlgebra {
    pub fn new(semigroup: CayleyTable, field: PrimeField) -> Self {
        SemigroupAlgebra { semigroup, field }
    }

    pub fn semigroup(&self) -> &CayleyTable {
        &self.semigroup
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.semigroup.n()
    }

    pub fn zero(&self) -> AlgebraElement {
        Vector::zero(self.field, self.dim())
    }

    /// The characteristic vector of semigroup element `i`.
    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        Vector::unit(self.field, self.dim(), i)
    }

    pub fn element(&self, coords: Vec<u64>) -> AlgebraElement {
        Vector::new(self.field, coords)
    }

    fn check_element(&self, x: &AlgebraElement) -> Result<()> {
        if x.field() != self.field || x.len() != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Bilinear extension of the Cayley table:
    /// `(Σ x_i s_i)(Σ y_j s_j) = Σ x_i y_j s_{table[i][j]}`.
    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let n = self.dim();
        let mut out = vec![0u64; n];
        for i in 0..n {
            let xi = x.coords()[i];
            if xi == 0 {
                continue;
            }
            for j in 0..n {
                let yj = y.coords()[j];
                if yj == 0 {
                    continue;
                }
                let k = self.semigroup.product(i, j);
                out[k] = self.field.add(out[k], self.field.mul(xi, yj));
            }
        }
        Ok(Vector::new(self.field, out))
    }

    /// Render an element in the paper's style, e.g. `1+a²` or
    /// `(a₁,b₁)-(a₁,b₂)-(a₂,b₁)+(a₂,b₂)`. Coefficients above p/2 print as
    /// negatives.
    pub fn element_label(&self, x: &AlgebraElement) -> String {
        let p = self.field.p();
        let mut out = String::new();
        for (c, name) in x.coords().iter().zip(self.semigroup.names()) {
            if *c == 0 {
                continue;
            }
            let signed: i64 = if *c <= p / 2 {
                *c as i64
            } else {
                *c as i64 - p as i64
            };
            let negative = signed < 0;
            let mag = signed.unsigned_abs();
            let term = if name == "1" {
                format!("{mag}")
            } else if mag == 1 {
                name.clone()
            } else {
                format!("{mag}{name}")
            };
            if negative {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// `Span(...)` rendering of a subspace by its basis rows.
    pub fn span_label(&self, space: &Subspace) -> String {
        if space.is_zero() {
            return "{0}".to_string();
        }
        if space.is_full() {
            return "F[S]".to_string();
        }
        let rows: Vec<String> = space
            .basis_vectors()
            .map(|v| self.element_label(&v))
            .collect();
        format!("Span({})", rows.join(", "))
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal {
            space: Subspace::zero(self.field, self.dim()),
        }
    }

    pub fn full_ideal(&self) -> Ideal {
        Ideal {
            space: Subspace::full(self.field, self.dim()),
        }
    }

    /// Wrap a subspace known to be two-sided; errors with `NotAnIdeal`
    /// otherwise.
    pub fn ideal_from_space(&self, space: Subspace) -> Result<Ideal> {
        self.check_space(&space)?;
        if self.ideal_violation(&space)?.is_some() {
            return Err(Error::NotAnIdeal);
        }
        Ok(Ideal { space })
    }

    /// Sum of two ideals (always an ideal).
    pub fn ideal_sum(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        let space = gf::sum(&a.space, &b.space)?;
        debug_assert!(self.is_ideal(&space)?);
        Ok(Ideal { space })
    }

    /// Intersection of two ideals (always an ideal).
    pub fn ideal_intersect(&self, a: &Ideal, b: &Ideal) -> Result<Ideal> {
        let space = gf::intersect(&a.space, &b.space)?;
        debug_assert!(self.is_ideal(&space)?);
        Ok(Ideal { space })
    }

    fn check_space(&self, u: &Subspace) -> Result<()> {
        if u.field() != self.field {
            return Err(Error::FieldMismatch {
                left: self.field.p(),
                right: u.field().p(),
            });
        }
        if u.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: u.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Two-sidedness witness: a basis row and a semigroup element whose
    /// product escapes the subspace, or None if `u` is an ideal.
    pub fn ideal_violation(&self, u: &Subspace) -> Result<Option<IdealViolation>> {
        self.check_space(u)?;
        for (row_index, row) in u.basis_vectors().enumerate() {
            for s in 0..self.dim() {
                let e = self.basis_element(s);
                let left = self.multiply(&e, &row)?;
                if !gf::member(&left, u)? {
                    return Ok(Some(IdealViolation {
                        element: s,
                        basis_row: row_index,
                        side: Side::Left,
                        product: left,
                    }));
                }
                let right = self.multiply(&row, &e)?;
                if !gf::member(&right, u)? {
                    return Ok(Some(IdealViolation {
                        element: s,
                        basis_row: row_index,
                        side: Side::Right,
                        product: right,
                    }));
                }
            }
        }
        Ok(None)
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        Ok(self.ideal_violation(u)?.is_none())
    }

    /// Smallest two-sided ideal containing the generators: close the span
    /// under left and right multiplication by basis elements until the
    /// dimension stabilizes.
    pub fn ideal_closure(&self, generators: &[AlgebraElement]) -> Result<Ideal> {
        for g in generators {
            self.check_element(g)?;
        }
        let mut space = gf::rref(self.field, self.dim(), generators)?;
        loop {
            let mut rows: Vec<Vector> = space.basis_vectors().collect();
            for row in space.basis_vectors() {
                for s in 0..self.dim() {
                    let e = self.basis_element(s);
                    rows.push(self.multiply(&e, &row)?);
                    rows.push(self.multiply(&row, &e)?);
                }
            }
            let next = gf::rref(self.field, self.dim(), &rows)?;
            if next.dim() == space.dim() {
                debug_assert!(self.is_ideal(&space)?);
                return Ok(Ideal { space });
            }
            space = next;
        }
    }

    /// All two-sided ideals, canonically sorted by dimension then
    /// lexicographic flattened basis. Filters the exhaustive subspace
    /// stream through the ideal test.
    pub fn enumerate_ideals(&self, guards: &Guards) -> Result<Vec<Ideal>> {
        let mut out = Vec::new();
        for space in gf::enumerate_subspaces(self.field, self.dim(), guards)? {
            if self.is_ideal(&space)? {
                out.push(Ideal { space });
            }
        }
        out.sort_by_key(|a| a.space.sort_key());
        Ok(out)
    }

    /// Exhaustive check that the algebra congruences θ_I and θ_J defined by
    /// two ideals satisfy θ_I ∘ θ_J = θ_{I+J} = θ_J ∘ θ_I on the full
    /// p^dim-element carrier.
    ///
    /// Carrier vectors are encoded as integers base p (digit i = coordinate
    /// i); x θ_I y iff x − y ∈ I.
    pub fn congruence_permutability_check(
        &self,
        i: &Ideal,
        j: &Ideal,
        guards: &Guards,
    ) -> Result<bool> {
        self.check_space(&i.space)?;
        self.check_space(&j.space)?;
        let p = self.field.p() as u128;
        let carrier = p.checked_pow(self.dim() as u32);
        let carrier = match carrier {
            Some(c) if c <= guards.max_algebra_carrier => c as usize,
            other => {
                return Err(Error::GuardExceeded {
                    what: "algebra carrier p^dim",
                    value: other.unwrap_or(u128::MAX),
                    bound: guards.max_algebra_carrier,
                })
            }
        };
        let sum_space = gf::sum(&i.space, &j.space)?;
        let theta_i = self.theta(&i.space, carrier);
        let theta_j = self.theta(&j.space, carrier);
        let theta_sum = self.theta(&sum_space, carrier);
        let ij = theta_i.compose(&theta_j)?;
        let ji = theta_j.compose(&theta_i)?;
        Ok(ij == theta_sum && ji == theta_sum)
    }

    /// Materialize θ_U on the carrier: (x, y) related iff x − y ∈ U.
    fn theta(&self, u: &Subspace, carrier: usize) -> BinaryRelation {
        let p = self.field.p();
        let n = self.dim();
        let mut rel = BinaryRelation::new(carrier);
        let members = u.elements();
        let mut coords = vec![0u64; n];
        for x in 0..carrier {
            for m in &members {
                // y = x - m, digit by digit.
                let mut y = 0usize;
                let mut mult = 1usize;
                for k in 0..n {
                    let d = self.field.sub(coords[k], m[k]);
                    y += d as usize * mult;
                    mult *= p as usize;
                }
                rel.set(x, y, true);
            }
            // next carrier vector
            for c in coords.iter_mut() {
                *c += 1;
                if *c < p {
                    break;
                }
                *c = 0;
            }
        }
        rel
    }
}

/// A two-sided ideal, represented by its RREF-canonical subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    space: Subspace,
}

impl Ideal {
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// A product that escapes the candidate subspace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealViolation {
    /// Semigroup element used as multiplier.
    pub element: usize,
    /// Index of the basis row multiplied.
    pub basis_row: usize,
    pub side: Side,
    pub product: AlgebraElement,
}

/// Cover relation (Hasse edges) of an ideal list under inclusion: edge
/// `(a, b)` means ideal `a` ⊂ ideal `b` with nothing strictly between.
pub fn ideal_lattice(ideals: &[Ideal]) -> Result<Vec<(usize, usize)>> {
    let le = |a: &Ideal, b: &Ideal| gf::contains(&b.space, &a.space);
    let mut edges = Vec::new();
    for a in 0..ideals.len() {
        for b in 0..ideals.len() {
            if a == b || ideals[a] == ideals[b] || !le(&ideals[a], &ideals[b])? {
                continue;
            }
            let mut covered = true;
            for c in 0..ideals.len() {
                if c == a || c == b || ideals[c] == ideals[a] || ideals[c] == ideals[b] {
                    continue;
                }
                if le(&ideals[a], &ideals[c])? && le(&ideals[c], &ideals[b])? {
                    covered = false;
                    break;
                }
            }
            if covered {
                edges.push((a, b));
            }
        }
    }
    Ok(edges)
}
