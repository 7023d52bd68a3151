//! Exact rational subspaces of Q^n.
//!
//! A [`Subspace`] is stored as a basis in reduced row echelon form over
//! arbitrary-precision rationals, which makes equality of subspaces plain
//! structural equality — no tolerances anywhere. On top of the RREF kernel sit
//! the three operations the algebra needs: orthogonal complement (null space),
//! span sum, and orthogonal projection of one subspace onto another via the
//! Gram matrix.

use num::rational::BigRational;
use num::{BigInt, One, Zero};
use rand::Rng;

/// Shorthand for the scalar type: arbitrary-precision rationals.
pub type Rat = BigRational;

fn rat(n: i64) -> Rat {
    BigRational::from(BigInt::from(n))
}

/// A linear subspace of Q^n, canonicalized to reduced row echelon form.
///
/// Invariants: every row is nonzero, pivots are 1, pivot columns are otherwise
/// zero, and pivot columns strictly increase row to row. The zero subspace has
/// no rows. Two values are equal as subspaces iff they are equal as data.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
}

/// Reduce `rows` in place to RREF; returns the rank.
fn rref(rows: &mut Vec<Vec<Rat>>, cols: usize) -> usize {
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(src) = (pivot_row..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, src);
        let inv = rows[pivot_row][col].clone();
        for x in rows[pivot_row].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..rows.len() {
            if r != pivot_row && !rows[r][col].is_zero() {
                let factor = rows[r][col].clone();
                for c in 0..cols {
                    let delta = &factor * &rows[pivot_row][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    rows.len()
}

impl Subspace {
    /// The zero subspace of Q^n.
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
        }
    }

    /// The whole space Q^n.
    pub fn full(ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                (0..ambient)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        Subspace { ambient, rows }
    }

    /// The span of the given vectors, canonicalized. All vectors must have the
    /// same length, which becomes the ambient dimension.
    pub fn span(ambient: usize, vectors: Vec<Vec<Rat>>) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient),
            "span: vector length must equal ambient dimension"
        );
        let mut rows = vectors;
        rref(&mut rows, ambient);
        Subspace { ambient, rows }
    }

    /// Ambient dimension n.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The canonical (RREF) basis rows.
    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Membership test: is `v` in the span?
    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        let mut rows = self.rows.clone();
        rows.push(v.to_vec());
        rref(&mut rows, self.ambient) == self.dim()
    }

    /// Subspace inclusion: is every basis vector of `self` in `other`?
    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Span of the union: the smallest subspace containing both.
    pub fn span_sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        rref(&mut rows, self.ambient);
        Subspace {
            ambient: self.ambient,
            rows,
        }
    }

    /// Intersection of two subspaces, computed as the complement of the span
    /// of the complements.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        self.complement().span_sum(&other.complement()).complement()
    }

    /// Orthogonal complement: the null space of the basis matrix under the
    /// standard dot product.
    pub fn complement(&self) -> Subspace {
        let n = self.ambient;
        let mut m = self.rows.clone();
        let rank = rref(&mut m, n);
        // Pivot columns of the RREF; the rest are free.
        let mut pivot_cols = Vec::with_capacity(rank);
        let mut col = 0;
        for row in &m {
            while col < n && row[col].is_zero() {
                col += 1;
            }
            pivot_cols.push(col);
            col += 1;
        }
        let mut basis = Vec::with_capacity(n - rank);
        for free in 0..n {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![Rat::zero(); n];
            v[free] = Rat::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -m[r][free].clone();
            }
            basis.push(v);
        }
        Subspace::span(n, basis)
    }

    /// Orthogonal projection of the single vector `v` onto this subspace.
    ///
    /// With basis rows B (k x n), solves the normal equations
    /// `(B Bᵀ) w = B v` and returns `wᵀ B`. The Gram matrix `B Bᵀ` is
    /// invertible because the rows are independent and the form is definite
    /// over the rationals.
    pub fn project_vector(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient);
        let k = self.dim();
        if k == 0 {
            return vec![Rat::zero(); self.ambient];
        }
        // Gram matrix G = B Bᵀ and right-hand side B v.
        let mut aug: Vec<Vec<Rat>> = (0..k)
            .map(|i| {
                let mut row: Vec<Rat> = (0..k).map(|j| dot(&self.rows[i], &self.rows[j])).collect();
                row.push(dot(&self.rows[i], v));
                row
            })
            .collect();
        // Reduce over all k+1 columns so the augmented column is eliminated
        // too; the pivots all land in the Gram block because it is invertible.
        let rank = rref(&mut aug, k + 1);
        debug_assert_eq!(rank, k, "Gram matrix of independent rows is invertible");
        let w: Vec<Rat> = (0..k).map(|i| aug[i][k].clone()).collect();
        let mut out = vec![Rat::zero(); self.ambient];
        for (wi, row) in w.iter().zip(&self.rows) {
            for (o, x) in out.iter_mut().zip(row) {
                *o = &*o + &(wi * x);
            }
        }
        out
    }

    /// Orthogonal projection of the subspace `other` onto `self`: the span of
    /// the projections of `other`'s basis vectors.
    pub fn project_subspace_onto_self(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let vectors = other
            .rows
            .iter()
            .map(|v| self.project_vector(v))
            .collect::<Vec<_>>();
        Subspace::span(self.ambient, vectors)
    }

    /// Is `self` orthogonal to `other` (every pair of basis vectors has dot
    /// product zero)?
    pub fn is_orthogonal_to(&self, other: &Subspace) -> bool {
        self.rows
            .iter()
            .all(|u| other.rows.iter().all(|v| dot(u, v).is_zero()))
    }

    /// Draw a uniformly seeded random subspace: dimension uniform in
    /// `0..=ambient`, basis vectors with integer entries in `[-5, 5]`,
    /// re-drawn until independent.
    pub fn random(ambient: usize, rng: &mut (impl Rng + ?Sized)) -> Subspace {
        let target = rng.gen_range(0..=ambient);
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        while rows.len() < target {
            let v: Vec<Rat> = (0..ambient).map(|_| rat(rng.gen_range(-5..=5))).collect();
            let mut candidate = rows.clone();
            candidate.push(v);
            if rref(&mut candidate, ambient) == rows.len() + 1 {
                rows = candidate;
            }
        }
        Subspace { ambient, rows }
    }

    /// Render as a span literal, e.g. `span{(1,0,0),(0,1,1/2)}`.
    pub fn to_literal(&self) -> String {
        let vecs = self
            .rows
            .iter()
            .map(|row| {
                let body = row.iter().map(fmt_rat).collect::<Vec<_>>().join(",");
                format!("({body})")
            })
            .collect::<Vec<_>>()
            .join(",");
        format!("span{{{vecs}}}")
    }

    /// Parse a span literal produced by [`Subspace::to_literal`]. Entries are
    /// integers or fractions `p/q`. `span{}` needs an explicit ambient
    /// dimension, so the empty literal is only accepted via `ambient`.
    pub fn parse_literal(src: &str, ambient: usize) -> Result<Subspace, String> {
        let s = src.trim();
        let inner = s
            .strip_prefix("span{")
            .and_then(|x| x.strip_suffix('}'))
            .ok_or_else(|| format!("expected span{{...}}, got {src:?}"))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let mut vectors = Vec::new();
        let mut rest = inner;
        loop {
            let rest2 = rest
                .trim_start()
                .strip_prefix('(')
                .ok_or_else(|| format!("expected '(' in {src:?}"))?;
            let close = rest2
                .find(')')
                .ok_or_else(|| format!("missing ')' in {src:?}"))?;
            let body = &rest2[..close];
            let v = body
                .split(',')
                .map(parse_rat)
                .collect::<Result<Vec<_>, _>>()?;
            if v.len() != ambient {
                return Err(format!(
                    "vector ({body}) has {} entries, expected {ambient}",
                    v.len()
                ));
            }
            vectors.push(v);
            rest = rest2[close + 1..].trim_start();
            if rest.is_empty() {
                break;
            }
            rest = rest
                .strip_prefix(',')
                .ok_or_else(|| format!("expected ',' between vectors in {src:?}"))?;
        }
        Ok(Subspace::span(ambient, vectors))
    }
}

fn dot(u: &[Rat], v: &[Rat]) -> Rat {
    u.iter().zip(v).fold(Rat::zero(), |acc, (a, b)| acc + a * b)
}

fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|e| format!("bad number {t:?}: {e}"))
    };
    match s.split_once('/') {
        Some((num, den)) => {
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(BigRational::new(parse_int(num)?, d))
        }
        None => Ok(BigRational::from(parse_int(s)?)),
    }
}

/// Convenience: build a subspace from integer vectors.
pub fn span_i64(ambient: usize, vectors: &[&[i64]]) -> Subspace {
    Subspace::span(
        ambient,
        vectors
            .iter()
            .map(|v| v.iter().map(|&x| rat(x)).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rref_canonical_form_makes_equality_structural() {
        let a = span_i64(3, &[&[1, 1, 0], &[0, 1, 1]]);
        let b = span_i64(3, &[&[1, 0, -1], &[2, 1, -1]]);
        assert_eq!(a, b);
        let c = span_i64(3, &[&[1, 0, 0], &[0, 1, 1]]);
        assert_ne!(a, c);
    }

    #[test]
    fn complement_dimensions_add_up() {
        let a = span_i64(4, &[&[1, 2, 3, 4], &[0, 1, 0, 1]]);
        let c = a.complement();
        assert_eq!(a.dim() + c.dim(), 4);
        assert!(a.is_orthogonal_to(&c));
        assert_eq!(c.complement(), a);
    }

    #[test]
    fn complement_edge_cases() {
        let z = Subspace::zero(3);
        assert_eq!(z.complement(), Subspace::full(3));
        assert_eq!(Subspace::full(3).complement(), z);
    }

    #[test]
    fn projection_fixes_members_and_kills_orthogonals() {
        let a = span_i64(3, &[&[1, 1, 0], &[0, 0, 1]]);
        let member = vec![rat(2), rat(2), rat(5)];
        assert_eq!(a.project_vector(&member), member);
        // (1, -1, 0) is orthogonal to both basis vectors.
        let ortho = vec![rat(1), rat(-1), rat(0)];
        assert!(a.project_vector(&ortho).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn projection_is_idempotent_and_lands_inside() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = Subspace::random(4, &mut rng);
            let b = Subspace::random(4, &mut rng);
            let p = b.project_subspace_onto_self(&a);
            assert!(p.is_subspace_of(&b));
            assert_eq!(b.project_subspace_onto_self(&p), p);
        }
    }

    #[test]
    fn projection_of_nonorthogonal_line_onto_line_is_that_line() {
        let p = span_i64(2, &[&[1, 0]]);
        let q = span_i64(2, &[&[1, 1]]);
        assert_eq!(q.project_subspace_onto_self(&p), q);
        assert_eq!(p.project_subspace_onto_self(&q), p);
    }

    #[test]
    fn span_literals_round_trip() {
        let a = Subspace::span(
            3,
            vec![
                vec![
                    rat(1),
                    rat(0),
                    BigRational::new(BigInt::from(1), BigInt::from(2)),
                ],
                vec![rat(0), rat(1), rat(-3)],
            ],
        );
        let lit = a.to_literal();
        assert_eq!(lit, "span{(1,0,1/2),(0,1,-3)}");
        assert_eq!(Subspace::parse_literal(&lit, 3).unwrap(), a);
        assert_eq!(
            Subspace::parse_literal("span{}", 3).unwrap(),
            Subspace::zero(3)
        );
        assert!(Subspace::parse_literal("span{(1,0)}", 3).is_err());
    }

    #[test]
    fn random_subspaces_are_seed_deterministic() {
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..10)
                .map(|_| Subspace::random(3, &mut rng))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(42), draw(42));
        assert_ne!(draw(42), draw(43));
    }

    #[test]
    fn intersect_is_the_lattice_meet() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let a = Subspace::random(4, &mut rng);
            let b = Subspace::random(4, &mut rng);
            let m = a.intersect(&b);
            assert!(m.is_subspace_of(&a) && m.is_subspace_of(&b));
        }
    }
}
