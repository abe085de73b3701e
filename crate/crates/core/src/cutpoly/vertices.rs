//! Brute-force vertex enumeration for small H-polytopes.
//!
//! Every vertex is the unique solution of some `dim` linearly independent
//! tight inequalities, so we walk all linearly independent `dim`-subsets,
//! solve, and keep the feasible solutions. Subsets are grown one row at a time
//! on an integer Gauss–Jordan basis, which prunes dependent prefixes early.
//! Boundedness is checked the same way on `(dim − 1)`-subsets: a pointed
//! polyhedron is unbounded iff its recession cone has an extreme ray.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exact::{integer_row_of, Matrix, Rat};
use crate::{Error, Result};

use super::LinIneq;

const MAX_DIM: usize = 8;
const MAX_SUBSETS: u128 = 15_000_000;

/// Exact vertex list of `{x : ⟨alpha, x⟩ <= rhs for all ineqs}`, sorted.
///
/// Errors when the instance is beyond desk scale or the polyhedron is
/// unbounded.
pub fn h_polytope_vertices(ineqs: &[LinIneq], dim: usize) -> Result<Vec<Vec<Rat>>> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::ScaleGuard(format!("dimension {dim} outside 1..={MAX_DIM}")));
    }
    if let Some(bad) = ineqs.iter().find(|q| q.dim() != dim) {
        return Err(Error::Dimension(format!(
            "inequality of dimension {} in a {dim}-dimensional system",
            bad.dim()
        )));
    }
    let m = ineqs.len();
    let work = binomial(m, dim) + binomial(m, dim - 1);
    if work > MAX_SUBSETS {
        return Err(Error::ScaleGuard(format!(
            "{m} inequalities in dimension {dim} means {work} subsets"
        )));
    }
    let alphas = Matrix::from_rows(ineqs.iter().map(|q| q.alpha().to_vec()).collect())?;
    if m == 0 || alphas.rank() < dim {
        // no vertices; nonempty means a line is contained
        return Err(Error::Unbounded);
    }
    let rows: Vec<Vec<i128>> = ineqs.iter().map(integerize).collect::<Result<_>>()?;
    let search = Search { rows: &rows, dim };

    let mut points = BTreeSet::new();
    let mut overflow = false;
    search.walk(0, &Basis::default(), dim, &mut overflow, &mut |basis, overflow| {
        match search.basic_solution(basis) {
            Some(Some(pt)) => {
                points.insert(pt);
            }
            Some(None) => {}
            None => *overflow = true,
        }
    });
    if overflow {
        return Err(Error::ScaleGuard("integer overflow during elimination".into()));
    }

    if !points.is_empty() {
        let mut unbounded = false;
        search.walk(0, &Basis::default(), dim - 1, &mut overflow, &mut |basis, _| {
            if !unbounded && search.is_recession_ray(basis) != Some(false) {
                unbounded = true;
            }
        });
        if overflow {
            return Err(Error::ScaleGuard("integer overflow during elimination".into()));
        }
        if unbounded {
            return Err(Error::Unbounded);
        }
    }

    let mut out: Vec<Vec<Rat>> = points
        .into_iter()
        .map(|pt| {
            let den = BigInt::from(pt[dim]);
            pt[..dim]
                .iter()
                .map(|&n| Rat::new(BigInt::from(n), den.clone()))
                .collect()
        })
        .collect();
    out.sort();
    Ok(out)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `alpha` and `rhs` scaled to a common integer row `[alpha | rhs]`.
fn integerize(q: &LinIneq) -> Result<Vec<i128>> {
    let mut all = q.alpha().to_vec();
    all.push(q.rhs().clone());
    integer_row_of(&all)
        .iter()
        .map(|x| {
            x.to_i128()
                .ok_or_else(|| Error::ScaleGuard("coefficient exceeds 128 bits".into()))
        })
        .collect()
}

/// Rows `[coef | rhs]` in reduced integer form: each row's pivot column is
/// positive and zero in every other row.
#[derive(Clone, Default)]
struct Basis {
    rows: Vec<(Vec<i128>, usize)>,
}

struct Overflow;

struct Search<'a> {
    rows: &'a [Vec<i128>],
    dim: usize,
}

impl Search<'_> {
    fn walk(
        &self,
        start: usize,
        basis: &Basis,
        target: usize,
        overflow: &mut bool,
        visit: &mut impl FnMut(&Basis, &mut bool),
    ) {
        if basis.rows.len() == target {
            visit(basis, overflow);
            return;
        }
        let need = target - basis.rows.len();
        for i in start..self.rows.len() {
            if self.rows.len() - i < need {
                break;
            }
            match self.extend(basis, &self.rows[i]) {
                Ok(Some(next)) => self.walk(i + 1, &next, target, overflow, visit),
                Ok(None) => {}
                Err(Overflow) => *overflow = true,
            }
        }
    }

    /// Adds `row` to the basis; `Ok(None)` when it is dependent.
    fn extend(&self, basis: &Basis, row: &[i128]) -> Result<Option<Basis>, Overflow> {
        let mut r = row.to_vec();
        for (b, c) in &basis.rows {
            if r[*c] != 0 {
                r = combine(b[*c], &r, r[*c], b).ok_or(Overflow)?;
            }
        }
        let Some(pivot) = (0..self.dim).find(|&j| r[j] != 0) else {
            return Ok(None);
        };
        if r[pivot] < 0 {
            r.iter_mut().for_each(|x| *x = -*x);
        }
        let mut next = Basis {
            rows: Vec::with_capacity(basis.rows.len() + 1),
        };
        for (b, c) in &basis.rows {
            let b = if b[pivot] != 0 {
                combine(r[pivot], b, b[pivot], &r).ok_or(Overflow)?
            } else {
                b.clone()
            };
            next.rows.push((b, *c));
        }
        next.rows.push((r, pivot));
        Ok(Some(next))
    }

    /// Solution of a full basis: `Some(Some(point))` when feasible, as
    /// `[numerators…, denominator]` in lowest terms; `Some(None)` when
    /// infeasible; `None` on overflow.
    fn basic_solution(&self, basis: &Basis) -> Option<Option<Vec<i128>>> {
        let dim = self.dim;
        let den = basis.rows.iter().try_fold(1i128, |l, (b, c)| checked_lcm(l, b[*c]))?;
        let mut x = vec![0i128; dim + 1];
        for (b, c) in &basis.rows {
            x[*c] = b[dim].checked_mul(den / b[*c])?;
        }
        x[dim] = den;
        for row in self.rows {
            let mut lhs = 0i128;
            for j in 0..dim {
                lhs = lhs.checked_add(row[j].checked_mul(x[j])?)?;
            }
            if lhs > row[dim].checked_mul(den)? {
                return Some(None);
            }
        }
        let g = x.iter().fold(0i128, |g, &v| g.gcd(&v));
        if g > 1 {
            x.iter_mut().for_each(|v| *v /= g);
        }
        Some(Some(x))
    }

    /// For a basis of `dim − 1` rows, whether the one-dimensional kernel of
    /// its coefficient part meets the recession cone `{y : alpha·y <= 0}` in
    /// a nonzero direction.
    fn is_recession_ray(&self, basis: &Basis) -> Option<bool> {
        let dim = self.dim;
        let free = (0..dim).find(|j| basis.rows.iter().all(|(_, c)| c != j))?;
        let den = basis.rows.iter().try_fold(1i128, |l, (b, c)| checked_lcm(l, b[*c]))?;
        let mut y = vec![0i128; dim];
        y[free] = den;
        for (b, c) in &basis.rows {
            y[*c] = (-b[free]).checked_mul(den / b[*c])?;
        }
        let mut forward = true;
        let mut backward = true;
        for row in self.rows {
            let mut s = 0i128;
            for j in 0..dim {
                s = s.checked_add(row[j].checked_mul(y[j])?)?;
            }
            forward &= s <= 0;
            backward &= s >= 0;
        }
        Some(forward || backward)
    }
}

/// `a·x − b·y`, divided by the gcd of its entries.
fn combine(a: i128, x: &[i128], b: i128, y: &[i128]) -> Option<Vec<i128>> {
    let mut out = Vec::with_capacity(x.len());
    let mut g = 0i128;
    for (xi, yi) in x.iter().zip(y) {
        let v = a.checked_mul(*xi)?.checked_sub(b.checked_mul(*yi)?)?;
        g = g.gcd(&v);
        out.push(v);
    }
    if g > 1 {
        out.iter_mut().for_each(|v| *v /= g);
    }
    Some(out)
}

fn checked_lcm(a: i128, b: i128) -> Option<i128> {
    if a.is_zero() || b.is_zero() {
        return Some(0);
    }
    (a / a.gcd(&b)).checked_mul(b.abs())
}
