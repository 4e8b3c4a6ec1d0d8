//! Exact linear algebra over prime fields GF(p).
//!
//! Subspaces are kept in reduced row echelon form at all times; the RREF
//! basis is the canonical representative, so subspace equality is plain
//! value equality on the basis matrix.

use crate::{Error, Guards, Result};

/// A prime field GF(p) with 2 <= p <= 97.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..=97).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b % self.p) % self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    pub fn neg(&self, a: u64) -> u64 {
        (self.p - a % self.p) % self.p
    }

    /// Multiplicative inverse by Fermat's little theorem.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        base %= self.p;
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            exp >>= 1;
        }
        acc
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A coordinate vector over a prime field, all entries reduced mod p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: PrimeField,
    coords: Vec<u64>,
}

impl Vector {
    pub fn new(field: PrimeField, coords: Vec<u64>) -> Self {
        let coords = coords.into_iter().map(|c| c % field.p()).collect();
        Vector { field, coords }
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        Vector {
            field,
            coords: vec![0; n],
        }
    }

    /// Standard basis vector e_i.
    pub fn unit(field: PrimeField, n: usize, i: usize) -> Self {
        let mut coords = vec![0; n];
        coords[i] = 1;
        Vector { field, coords }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        self.check_compat(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Ok(Vector {
            field: self.field,
            coords,
        })
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        self.check_compat(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect();
        Ok(Vector {
            field: self.field,
            coords,
        })
    }

    pub fn scale(&self, c: u64) -> Vector {
        let coords = self
            .coords
            .iter()
            .map(|&a| self.field.mul(a, c))
            .collect();
        Vector {
            field: self.field,
            coords,
        }
    }

    fn check_compat(&self, other: &Vector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.p(),
                right: other.field.p(),
            });
        }
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}

/// A linear subspace of GF(p)^n, stored as its RREF basis.
///
/// Invariant: `rows` is in exact reduced row echelon form with no zero rows;
/// two subspaces are equal iff their basis matrices are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut r = vec![0; ambient];
                r[i] = 1;
                r
            })
            .collect();
        Subspace {
            field,
            ambient,
            rows,
            pivots: (0..ambient).collect(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = Vector> + '_ {
        self.rows
            .iter()
            .map(move |r| Vector::new(self.field, r.clone()))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Sort key used for canonical subspace ordering: dimension first, then
    /// the flattened basis lexicographically.
    pub fn sort_key(&self) -> (usize, Vec<u64>) {
        (
            self.dim(),
            self.rows.iter().flatten().copied().collect(),
        )
    }

    fn check_compat(&self, field: PrimeField, ambient: usize) -> Result<()> {
        if self.field != field {
            return Err(Error::FieldMismatch {
                left: self.field.p(),
                right: field.p(),
            });
        }
        if self.ambient != ambient {
            return Err(Error::DimensionMismatch {
                left: self.ambient,
                right: ambient,
            });
        }
        Ok(())
    }

    /// Elements of the subspace as coordinate vectors (all p^dim of them).
    pub fn elements(&self) -> Vec<Vec<u64>> {
        let p = self.field.p();
        let mut out = vec![vec![0u64; self.ambient]];
        for row in &self.rows {
            let mut next = Vec::with_capacity(out.len() * p as usize);
            for v in &out {
                for c in 0..p {
                    let w: Vec<u64> = v
                        .iter()
                        .zip(row)
                        .map(|(&a, &b)| self.field.add(a, self.field.mul(c, b)))
                        .collect();
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }
}

/// Reduce `rows` to the canonical RREF basis of their span.
pub fn rref(field: PrimeField, ambient: usize, rows: &[Vector]) -> Result<Subspace> {
    for v in rows {
        if v.field() != field {
            return Err(Error::FieldMismatch {
                left: field.p(),
                right: v.field().p(),
            });
        }
        if v.len() != ambient {
            return Err(Error::DimensionMismatch {
                left: ambient,
                right: v.len(),
            });
        }
    }
    let raw: Vec<Vec<u64>> = rows.iter().map(|v| v.coords().to_vec()).collect();
    Ok(rref_raw(field, ambient, raw))
}

fn rref_raw(field: PrimeField, ambient: usize, mut m: Vec<Vec<u64>>) -> Subspace {
    let p = field;
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ambient {
        let Some(piv) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = p.inv(m[r][c]);
        for x in m[r].iter_mut() {
            *x = p.mul(*x, inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    *x = p.sub(*x, p.mul(f, pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    m.truncate(r);
    Subspace {
        field,
        ambient,
        rows: m,
        pivots,
    }
}

/// Membership test: true iff `v` reduces to zero against the basis of `u`.
pub fn member(v: &Vector, u: &Subspace) -> Result<bool> {
    u.check_compat(v.field(), v.len())?;
    let p = u.field;
    let mut w = v.coords().to_vec();
    for (row, &c) in u.rows.iter().zip(&u.pivots) {
        if w[c] != 0 {
            let f = w[c];
            for k in 0..u.ambient {
                let sub = p.mul(f, row[k]);
                w[k] = p.sub(w[k], sub);
            }
        }
    }
    Ok(w.iter().all(|&x| x == 0))
}

/// True iff every basis vector of `inner` lies in `outer`.
pub fn contains(outer: &Subspace, inner: &Subspace) -> Result<bool> {
    outer.check_compat(inner.field, inner.ambient)?;
    for v in inner.basis_vectors() {
        if !member(&v, outer)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Subspace sum U + W: the span of both bases.
pub fn sum(u: &Subspace, w: &Subspace) -> Result<Subspace> {
    u.check_compat(w.field, w.ambient)?;
    let mut rows = u.rows.clone();
    rows.extend(w.rows.iter().cloned());
    Ok(rref_raw(u.field, u.ambient, rows))
}

/// Subspace intersection via the Zassenhaus block construction.
///
/// Rows (u | u) for u in U and (w | 0) for w in W are echelonized; rows
/// whose left block vanished carry a spanning set of U ∩ W in the right
/// block.
pub fn intersect(u: &Subspace, w: &Subspace) -> Result<Subspace> {
    u.check_compat(w.field, w.ambient)?;
    let n = u.ambient;
    let mut block: Vec<Vec<u64>> = Vec::new();
    for r in &u.rows {
        let mut row = r.clone();
        row.extend(r.iter().copied());
        block.push(row);
    }
    for r in &w.rows {
        let mut row = r.clone();
        row.extend(std::iter::repeat_n(0, n));
        block.push(row);
    }
    let reduced = rref_raw(u.field, 2 * n, block);
    let inter_rows: Vec<Vec<u64>> = reduced
        .rows
        .iter()
        .filter(|row| row[..n].iter().all(|&x| x == 0))
        .map(|row| row[n..].to_vec())
        .collect();
    Ok(rref_raw(u.field, n, inter_rows))
}

/// Null space of the linear map given by `matrix` (rows = equations over
/// the ambient coordinates), returned as an RREF-canonical subspace.
pub fn kernel(field: PrimeField, ambient: usize, matrix: &[Vec<u64>]) -> Result<Subspace> {
    for row in matrix {
        if row.len() != ambient {
            return Err(Error::DimensionMismatch {
                left: ambient,
                right: row.len(),
            });
        }
    }
    let reduced = rref_raw(field, ambient, matrix.to_vec());
    let pivot_set: Vec<usize> = reduced.pivots.clone();
    let mut basis = Vec::new();
    for j in 0..ambient {
        if pivot_set.contains(&j) {
            continue;
        }
        let mut v = vec![0u64; ambient];
        v[j] = 1;
        for (i, &pc) in pivot_set.iter().enumerate() {
            v[pc] = field.neg(reduced.rows[i][j]);
        }
        basis.push(v);
    }
    Ok(rref_raw(field, ambient, basis))
}

/// Number of r-dimensional subspaces of GF(p)^n (Gaussian binomial),
/// computed by the Pascal-style recurrence with saturating arithmetic.
pub fn gaussian_binomial(n: usize, r: usize, p: u64) -> u128 {
    if r > n {
        return 0;
    }
    // g[j] = [i choose j]_p as i grows; [i,j] = [i-1,j-1] + p^j [i-1,j].
    let mut g = vec![0u128; r + 1];
    g[0] = 1;
    for _ in 1..=n {
        for j in (1..=r).rev() {
            let pj = (p as u128).saturating_pow(j as u32);
            let scaled = g[j].saturating_mul(pj);
            g[j] = g[j - 1].saturating_add(scaled);
        }
    }
    g[r]
}

/// Total number of subspaces of GF(p)^n.
pub fn subspace_count(n: usize, p: u64) -> u128 {
    (0..=n)
        .map(|r| gaussian_binomial(n, r, p))
        .fold(0u128, |a, b| a.saturating_add(b))
}

/// Exhaustive subspace stream: every subspace of GF(p)^n exactly once,
/// generated directly as RREF matrices (pivot-column sets, then free
/// entries in odometer order).
pub fn enumerate_subspaces(
    field: PrimeField,
    ambient: usize,
    guards: &Guards,
) -> Result<SubspaceIter> {
    let points = (field.p() as u128).checked_pow(ambient as u32);
    match points {
        Some(v) if v <= guards.max_subspace_points => {}
        _ => {
            return Err(Error::GuardExceeded {
                what: "subspace enumeration points p^n",
                value: points.unwrap_or(u128::MAX),
                bound: guards.max_subspace_points,
            })
        }
    }
    let total = subspace_count(ambient, field.p());
    if total > guards.max_subspace_count {
        return Err(Error::GuardExceeded {
            what: "subspace enumeration count",
            value: total,
            bound: guards.max_subspace_count,
        });
    }
    Ok(SubspaceIter {
        field,
        ambient,
        rank: 0,
        pivots: Vec::new(),
        free_positions: Vec::new(),
        free_values: Vec::new(),
        done: false,
        fresh_pivots: true,
    })
}

/// Iterator over all subspaces of a fixed ambient space.
#[derive(Debug)]
pub struct SubspaceIter {
    field: PrimeField,
    ambient: usize,
    rank: usize,
    pivots: Vec<usize>,
    free_positions: Vec<(usize, usize)>,
    free_values: Vec<u64>,
    done: bool,
    fresh_pivots: bool,
}

impl SubspaceIter {
    fn build_current(&self) -> Subspace {
        let mut rows = vec![vec![0u64; self.ambient]; self.rank];
        for (i, &c) in self.pivots.iter().enumerate() {
            rows[i][c] = 1;
        }
        for (&(i, j), &v) in self.free_positions.iter().zip(&self.free_values) {
            rows[i][j] = v;
        }
        Subspace {
            field: self.field,
            ambient: self.ambient,
            rows,
            pivots: self.pivots.clone(),
        }
    }

    fn set_pivots(&mut self, pivots: Vec<usize>) {
        let mut free = Vec::new();
        for (i, &piv) in pivots.iter().enumerate() {
            for j in piv + 1..self.ambient {
                if !pivots.contains(&j) {
                    free.push((i, j));
                }
            }
        }
        self.free_positions = free;
        self.free_values = vec![0; self.free_positions.len()];
        self.pivots = pivots;
    }

    /// Advance the base-p odometer over the free entries.
    fn advance_values(&mut self) -> bool {
        let p = self.field.p();
        for v in self.free_values.iter_mut().rev() {
            *v += 1;
            if *v < p {
                return true;
            }
            *v = 0;
        }
        false
    }

    /// Advance `pivots` to the next r-combination of 0..ambient in
    /// lexicographic order.
    fn advance_pivots(&mut self) -> bool {
        let n = self.ambient;
        let r = self.pivots.len();
        let mut i = r;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if self.pivots[i] < n - (r - i) {
                self.pivots[i] += 1;
                for k in i + 1..r {
                    self.pivots[k] = self.pivots[k - 1] + 1;
                }
                let next = self.pivots.clone();
                self.set_pivots(next);
                return true;
            }
        }
    }
}

impl Iterator for SubspaceIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.done {
            return None;
        }
        if self.rank == 0 {
            // The zero subspace, then move on to rank 1.
            self.rank = 1;
            if self.ambient == 0 {
                self.done = true;
            } else {
                self.set_pivots((0..1).collect());
                self.fresh_pivots = true;
            }
            return Some(Subspace::zero(self.field, self.ambient));
        }
        if self.rank > self.ambient {
            self.done = true;
            return None;
        }
        if self.fresh_pivots {
            self.fresh_pivots = false;
            return Some(self.build_current());
        }
        if self.advance_values() {
            return Some(self.build_current());
        }
        if self.advance_pivots() {
            return Some(self.build_current());
        }
        // Move to the next rank.
        self.rank += 1;
        if self.rank > self.ambient {
            self.done = true;
            return None;
        }
        self.set_pivots((0..self.rank).collect());
        Some(self.build_current())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn vecs(field: PrimeField, rows: &[&[u64]]) -> Vec<Vector> {
        rows.iter()
            .map(|r| Vector::new(field, r.to_vec()))
            .collect()
    }

    fn space(field: PrimeField, n: usize, rows: &[&[u64]]) -> Subspace {
        rref(field, n, &vecs(field, rows)).unwrap()
    }

    #[test]
    fn prime_validation() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(97).is_ok());
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(91), Err(Error::NotPrime(91))); // 7*13
        assert_eq!(PrimeField::new(101), Err(Error::NotPrime(101))); // above bound
    }

    #[test]
    fn field_arithmetic() {
        let f3 = f(3);
        assert_eq!(f3.sub(0, 1), 2);
        assert_eq!(f3.inv(2), 2);
        let f5 = f(5);
        for a in 1..5 {
            assert_eq!(f5.mul(a, f5.inv(a)), 1);
        }
    }

    #[test]
    fn rref_of_empty_is_zero_subspace() {
        let u = rref(f(3), 4, &[]).unwrap();
        assert_eq!(u.dim(), 0);
        assert!(u.is_zero());
    }

    #[test]
    fn rref_keeps_canonical_basis_fixed() {
        // Already-canonical basis of the span I = <1+a², a+a³> over GF(3).
        let f3 = f(3);
        let u = space(f3, 4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        assert_eq!(u.basis(), &[vec![1, 0, 1, 0], vec![0, 1, 0, 1]]);
        assert_eq!(u.dim(), 2);
        let again = rref(f3, 4, &u.basis_vectors().collect::<Vec<_>>()).unwrap();
        assert_eq!(again, u);
    }

    #[test]
    fn rref_gaussian_elimination_golden() {
        // Hand-eliminated: GF(3) span of (1,1,0,0),(0,1,1,0),(0,0,1,1).
        let u = space(f(3), 4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        assert_eq!(
            u.basis(),
            &[vec![1, 0, 0, 1], vec![0, 1, 0, 2], vec![0, 0, 1, 1]]
        );
        assert_eq!(u.dim(), 3);
    }

    #[test]
    fn member_zero_vector() {
        let u = space(f(2), 3, &[&[1, 0, 1]]);
        assert!(member(&Vector::zero(f(2), 3), &u).unwrap());
        assert!(member(&Vector::zero(f(2), 3), &Subspace::zero(f(2), 3)).unwrap());
    }

    #[test]
    fn member_example_span_over_gf3() {
        // 1-a² = (1,0,2,0) lies in J; 1-a = (1,2,0,0) does not. Both cross
        // checked below against exhaustive span enumeration.
        let f3 = f(3);
        let j = space(f3, 4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        let inside = Vector::new(f3, vec![1, 0, 2, 0]);
        let outside = Vector::new(f3, vec![1, 2, 0, 0]);
        assert!(member(&inside, &j).unwrap());
        assert!(!member(&outside, &j).unwrap());
        assert!(j.elements().contains(&vec![1, 0, 2, 0]));
        assert!(!j.elements().contains(&vec![1, 2, 0, 0]));
    }

    #[test]
    fn member_agrees_with_exhaustive_span() {
        // Every vector of GF(3)^4 against a rank-2 subspace.
        let f3 = f(3);
        let u = space(f3, 4, &[&[1, 0, 1, 2], &[0, 1, 2, 1]]);
        let elems = u.elements();
        let mut v = vec![0u64; 4];
        loop {
            let vv = Vector::new(f3, v.clone());
            assert_eq!(member(&vv, &u).unwrap(), elems.contains(&v));
            let mut i = 0;
            loop {
                if i == 4 {
                    return;
                }
                v[i] += 1;
                if v[i] < 3 {
                    break;
                }
                v[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn sum_and_intersect_bounds() {
        let f3 = f(3);
        let u = space(f3, 4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        let zero = Subspace::zero(f3, 4);
        let full = Subspace::full(f3, 4);
        assert_eq!(sum(&u, &zero).unwrap(), u);
        assert_eq!(intersect(&u, &full).unwrap(), u);
        assert_eq!(intersect(&u, &zero).unwrap(), zero);
        assert_eq!(sum(&u, &full).unwrap(), full);
    }

    #[test]
    fn sum_of_the_example_ideals_is_full() {
        let f3 = f(3);
        let i = space(f3, 4, &[&[1, 0, 1, 0], &[0, 1, 0, 1]]);
        let j = space(f3, 4, &[&[1, 1, 0, 0], &[0, 1, 1, 0], &[0, 0, 1, 1]]);
        assert_eq!(sum(&i, &j).unwrap().dim(), 4);
    }

    #[test]
    fn dimension_formula_exhaustive_small() {
        for p in [2u64, 3] {
            let field = f(p);
            let all: Vec<Subspace> = enumerate_subspaces(field, 3, &Guards::default())
                .unwrap()
                .collect();
            for u in &all {
                for w in &all {
                    let s = sum(u, w).unwrap();
                    let i = intersect(u, w).unwrap();
                    assert_eq!(
                        s.dim() + i.dim(),
                        u.dim() + w.dim(),
                        "dimension formula failed over GF({p})"
                    );
                    assert!(contains(&s, u).unwrap());
                    assert!(contains(u, &i).unwrap());
                }
            }
        }
    }

    #[test]
    fn kernel_of_sum_map() {
        // Map GF(3)^4 -> GF(3): x0+x1+x2+x3; kernel has dim 3.
        let f3 = f(3);
        let k = kernel(f3, 4, &[vec![1, 1, 1, 1]]).unwrap();
        assert_eq!(k.dim(), 3);
        for v in k.basis_vectors() {
            let s: u64 = v.coords().iter().sum();
            assert_eq!(s % 3, 0);
        }
    }

    #[test]
    fn gaussian_binomials_golden() {
        assert_eq!(gaussian_binomial(2, 1, 2), 3);
        assert_eq!(gaussian_binomial(4, 1, 3), 40);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        assert_eq!(subspace_count(1, 2), 2);
        assert_eq!(subspace_count(2, 2), 5);
        assert_eq!(subspace_count(4, 3), 212);
    }

    #[test]
    fn enumeration_counts_match_formula() {
        for n in 0..=4 {
            for p in [2u64, 3, 5] {
                let field = f(p);
                let got = enumerate_subspaces(field, n, &Guards::default())
                    .unwrap()
                    .count() as u128;
                assert_eq!(got, subspace_count(n, p), "count mismatch n={n} p={p}");
            }
        }
    }

    #[test]
    fn enumeration_yields_each_subspace_once() {
        let field = f(3);
        let all: Vec<Subspace> = enumerate_subspaces(field, 3, &Guards::default())
            .unwrap()
            .collect();
        for (i, u) in all.iter().enumerate() {
            // Each yielded basis is genuinely canonical.
            let re = rref(field, 3, &u.basis_vectors().collect::<Vec<_>>()).unwrap();
            assert_eq!(&re, u);
            for w in &all[i + 1..] {
                assert_ne!(u, w, "duplicate subspace in enumeration");
            }
        }
    }

    #[test]
    fn enumeration_guard_trips() {
        let guards = Guards {
            max_subspace_count: 10,
            ..Guards::default()
        };
        let err = enumerate_subspaces(f(3), 4, &guards).unwrap_err();
        assert!(matches!(err, Error::GuardExceeded { .. }));
        // p^n bound trips too: 2^25 > 10^6.
        let err = enumerate_subspaces(f(2), 25, &Guards::default()).unwrap_err();
        assert!(matches!(err, Error::GuardExceeded { .. }));
    }

    mod canonicity {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            // Many different generating sets of the same subspace must all
            // reduce to the bit-identical canonical basis.
            #[test]
            fn rref_is_canonical_across_generating_sets(
                seed_rows in proptest::collection::vec(
                    proptest::collection::vec(0u64..5, 4), 1..4),
                ops in proptest::collection::vec(
                    (0usize..32, 0usize..32, 1u64..5), 1..16),
            ) {
                let f5 = PrimeField::new(5).unwrap();
                let vecs: Vec<Vector> =
                    seed_rows.iter().map(|r| Vector::new(f5, r.clone())).collect();
                let u = rref(f5, 4, &vecs).unwrap();
                // Re-span: start from the basis and append random linear
                // combinations; the span never changes.
                let mut gens: Vec<Vector> = u.basis_vectors().collect();
                if gens.is_empty() {
                    gens.push(Vector::zero(f5, 4));
                }
                for (i, j, c) in ops {
                    let a = gens[i % gens.len()].clone();
                    let b = gens[j % gens.len()].clone();
                    gens.push(a.add(&b.scale(c)).unwrap());
                }
                gens.reverse();
                prop_assert_eq!(rref(f5, 4, &gens).unwrap(), u);
            }
        }
    }

    #[test]
    fn mismatch_errors() {
        let u = space(f(3), 4, &[&[1, 0, 1, 0]]);
        let v = Vector::new(f(3), vec![1, 0, 0]);
        assert_eq!(
            member(&v, &u),
            Err(Error::DimensionMismatch { left: 4, right: 3 })
        );
        let w = space(f(5), 4, &[&[1, 0, 1, 0]]);
        assert_eq!(
            sum(&u, &w),
            Err(Error::FieldMismatch { left: 3, right: 5 })
        );
    }
}
