use std::fmt;

use num_traits::{Signed, Zero};

use super::{dot, Matrix, Rat};
use crate::{Error, Result};

/// Exactly symmetric rational `p × p` matrix, `p >= 1`. Indices are 0-based.
#[derive(Clone, PartialEq, Eq)]
pub struct SymMat {
    p: usize,
    data: Vec<Rat>,
}

impl fmt::Debug for SymMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SymMat {} [", self.p)?;
        for i in 0..self.p {
            let row: Vec<String> = self.row(i).iter().map(super::format_rat).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl SymMat {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let p = rows.len();
        if p == 0 {
            return Err(Error::Dimension("matrix must have dimension >= 1".into()));
        }
        if rows.iter().any(|r| r.len() != p) {
            return Err(Error::Dimension("matrix is not square".into()));
        }
        let data: Vec<Rat> = rows.into_iter().flatten().collect();
        for i in 0..p {
            for j in i + 1..p {
                if data[i * p + j] != data[j * p + i] {
                    return Err(Error::NotSymmetric);
                }
            }
        }
        Ok(SymMat { p, data })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| super::rat(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(p: usize) -> Self {
        assert!(p >= 1);
        SymMat {
            p,
            data: vec![Rat::zero(); p * p],
        }
    }

    pub fn dim(&self) -> usize {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.p + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[j * self.p + i] = v.clone();
        self.data[i * self.p + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.p..(i + 1) * self.p]
    }

    pub fn trace(&self) -> Rat {
        (0..self.p).map(|i| self.get(i, i)).sum()
    }

    pub fn scale(&self, c: &Rat) -> SymMat {
        SymMat {
            p: self.p,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &SymMat) -> Result<SymMat> {
        if self.p != other.p {
            return Err(Error::Dimension(format!("{} vs {}", self.p, other.p)));
        }
        Ok(SymMat {
            p: self.p,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows((0..self.p).map(|i| self.row(i).to_vec()).collect())
            .expect("square rows")
    }

    pub fn rank(&self) -> usize {
        super::rank(&self.to_matrix())
    }

    /// Whether `other = c · self` for some rational `c > 0`.
    pub fn is_positive_multiple_of(&self, other: &SymMat) -> bool {
        if self.p != other.p {
            return false;
        }
        let Some(k) = self.data.iter().position(|x| !x.is_zero()) else {
            return other.data.iter().all(Zero::is_zero);
        };
        let c = &other.data[k] / &self.data[k];
        c.is_positive() && self.data.iter().zip(&other.data).all(|(a, b)| a * &c == *b)
    }
}

/// `X = B · diag(D) · Bᵀ` with `B` of full column rank and every pivot in `D`
/// positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankFactorization {
    pub b: Matrix,
    pub d: Vec<Rat>,
}

impl RankFactorization {
    pub fn rank(&self) -> usize {
        self.d.len()
    }

    pub fn reconstruct(&self) -> SymMat {
        let p = self.b.rows();
        let mut out = SymMat::zeros(p);
        for i in 0..p {
            for j in i..p {
                let v: Rat = (0..self.d.len())
                    .map(|k| self.b.get(i, k) * &self.d[k] * self.b.get(j, k))
                    .sum();
                out.set(i, j, v);
            }
        }
        out
    }
}

/// Symmetric elimination without pivoting. A negative pivot refutes PSD; a
/// zero pivot is skipped when the rest of its row is zero and refutes PSD
/// otherwise. Each positive pivot contributes one column of `B`.
fn ldl(m: &SymMat) -> Option<RankFactorization> {
    let p = m.dim();
    let mut a: Vec<Vec<Rat>> = (0..p).map(|i| m.row(i).to_vec()).collect();
    let mut cols: Vec<Vec<Rat>> = Vec::new();
    let mut d = Vec::new();
    for k in 0..p {
        let piv = a[k][k].clone();
        if piv.is_negative() {
            return None;
        }
        if piv.is_zero() {
            if (k + 1..p).any(|j| !a[k][j].is_zero()) {
                return None;
            }
            continue;
        }
        let mut col = vec![Rat::zero(); p];
        for i in k..p {
            col[i] = &a[i][k] / &piv;
        }
        for i in k + 1..p {
            if a[i][k].is_zero() {
                continue;
            }
            for j in k + 1..p {
                let delta = &col[i] * &a[k][j];
                a[i][j] -= delta;
            }
        }
        cols.push(col);
        d.push(piv);
    }
    let rank = cols.len();
    let mut b = Matrix::zeros(p, rank);
    for (c, col) in cols.into_iter().enumerate() {
        for (i, v) in col.into_iter().enumerate() {
            b.set(i, c, v);
        }
    }
    Some(RankFactorization { b, d })
}

pub fn is_psd(m: &SymMat) -> bool {
    ldl(m).is_some()
}

/// Exact `B·diag(D)·Bᵀ` factorization of a PSD matrix, no square roots.
pub fn rank_factorize(m: &SymMat) -> Result<RankFactorization> {
    ldl(m).ok_or(Error::NotPsd)
}

/// Matrix of pairwise inner products.
pub fn gram(vectors: &[Vec<Rat>]) -> Result<SymMat> {
    let Some(first) = vectors.first() else {
        return Err(Error::Dimension("gram of an empty vector list".into()));
    };
    let k = first.len();
    if vectors.iter().any(|v| v.len() != k) {
        return Err(Error::Dimension("vectors of different lengths".into()));
    }
    let p = vectors.len();
    let mut out = SymMat::zeros(p);
    for i in 0..p {
        for j in i..p {
            out.set(i, j, dot(&vectors[i], &vectors[j]));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn vecs(v: &[&[i64]]) -> Vec<Vec<Rat>> {
        v.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn rejects_asymmetric_and_empty() {
        assert_eq!(SymMat::from_i64(&[&[1, 2], &[3, 4]]), Err(Error::NotSymmetric));
        assert!(SymMat::from_rows(vec![]).is_err());
        assert!(SymMat::from_i64(&[&[1, 2]]).is_err());
    }

    #[test]
    fn psd_examples() {
        assert!(!is_psd(&SymMat::from_i64(&[&[1, 0], &[0, -1]]).unwrap()));
        assert!(is_psd(&SymMat::from_i64(&[&[1, 1], &[1, 1]]).unwrap()));
        // zero pivot with a nonzero residual in its row
        assert!(!is_psd(&SymMat::from_i64(&[&[0, 1], &[1, 5]]).unwrap()));
        // zero pivot appearing only after elimination
        let m = SymMat::from_i64(&[&[1, 1, 1], &[1, 1, 2], &[1, 2, 9]]).unwrap();
        assert!(!is_psd(&m));
        assert!(is_psd(&SymMat::zeros(3)));
        assert!(!is_psd(&SymMat::from_i64(&[&[1, 2], &[2, 1]]).unwrap()));
    }

    #[test]
    fn factorize_identity() {
        let f = rank_factorize(&SymMat::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap())
            .unwrap();
        assert_eq!(f.b, Matrix::identity(3));
        assert_eq!(f.d, vec![rat(1); 3]);
    }

    #[test]
    fn factorize_all_ones() {
        let m = SymMat::from_i64(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]).unwrap();
        let f = rank_factorize(&m).unwrap();
        assert_eq!(f.rank(), 1);
        assert_eq!(f.reconstruct(), m);
    }

    #[test]
    fn factorize_rejects_indefinite() {
        let m = SymMat::from_i64(&[&[1, 0], &[0, -1]]).unwrap();
        assert_eq!(rank_factorize(&m), Err(Error::NotPsd));
    }

    #[test]
    fn gram_examples() {
        let e = vecs(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        assert_eq!(gram(&e).unwrap(), SymMat::from_i64(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap());
        let u = vecs(&[&[0, 1], &[1, -1], &[1, 0], &[1, 1]]);
        let expect = SymMat::from_i64(&[&[1, -1, 0, 1], &[-1, 2, 1, 0], &[0, 1, 1, 1], &[1, 0, 1, 2]])
            .unwrap();
        assert_eq!(gram(&u).unwrap(), expect);
        assert_eq!(expect.rank(), 2);
        let f = rank_factorize(&expect).unwrap();
        assert_eq!(f.rank(), 2);
        assert_eq!(f.reconstruct(), expect);
        assert!(gram(&vecs(&[&[1], &[1, 2]])).is_err());
    }

    #[test]
    fn positive_multiple() {
        let a = SymMat::from_i64(&[&[2, 1], &[1, 2]]).unwrap();
        assert!(a.is_positive_multiple_of(&a.scale(&rat(3))));
        assert!(!a.is_positive_multiple_of(&a.scale(&rat(-1))));
        assert!(!a.is_positive_multiple_of(&SymMat::from_i64(&[&[2, 1], &[1, 3]]).unwrap()));
    }
}
