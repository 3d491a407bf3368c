//! Dense complex matrices with just enough linear algebra for this crate.
//!
//! Storage is row-major `Vec<Complex64>`. Decompositions (eigenvalues,
//! singular values, Hermitian eigenpairs) are delegated to `faer`.

use faer::Mat;
use num_complex::Complex64;

use crate::error::Error;

#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Complex64::new(0.0, 0.0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn diagonal(d: &[Complex64]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, &v) in d.iter().enumerate() {
            m[(i, i)] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    pub fn conj(&self) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].conj())
    }

    pub fn matmul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        let mut out = CMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for c in 0..rhs.cols {
                    out[(r, c)] += a * rhs[(k, c)];
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len(), "matvec dimension mismatch");
        let mut out = vec![Complex64::new(0.0, 0.0); self.rows];
        for r in 0..self.rows {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..self.cols {
                acc += self[(r, c)] * v[c];
            }
            out[r] = acc;
        }
        out
    }

    pub fn sub(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)] - rhs[(r, c)])
    }

    pub fn add(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        CMatrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)] + rhs[(r, c)])
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)] * s)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    fn to_faer(&self) -> Mat<Complex64> {
        Mat::from_fn(self.rows, self.cols, |r, c| self[(r, c)])
    }

    /// Eigenvalues and right eigenvectors (columns), unordered.
    pub fn eigen(&self) -> Result<(Vec<Complex64>, CMatrix), Error> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let evd = self
            .to_faer()
            .eigen()
            .map_err(|e| Error::EigenFailure(format!("{e:?}")))?;
        let s = evd.S();
        let vals = (0..n).map(|i| s.column_vector()[i]).collect();
        let u = evd.U();
        let vecs = CMatrix::from_fn(n, n, |r, c| u[(r, c)]);
        Ok((vals, vecs))
    }

    pub fn eigenvalues(&self) -> Result<Vec<Complex64>, Error> {
        Ok(self.eigen()?.0)
    }

    /// Singular values in descending order.
    pub fn singular_values(&self) -> Result<Vec<f64>, Error> {
        let svd = self
            .to_faer()
            .svd()
            .map_err(|e| Error::EigenFailure(format!("{e:?}")))?;
        let s = svd.S();
        Ok((0..self.rows.min(self.cols)).map(|i| s.column_vector()[i].re).collect())
    }

    pub fn largest_singular_value(&self) -> Result<f64, Error> {
        Ok(self.singular_values()?.first().copied().unwrap_or(0.0))
    }

    pub fn smallest_singular_value(&self) -> Result<f64, Error> {
        Ok(self.singular_values()?.last().copied().unwrap_or(0.0))
    }

    /// Largest eigenvalue and a unit eigenvector of a Hermitian matrix.
    pub fn hermitian_top_eigenpair(&self) -> Result<(f64, Vec<Complex64>), Error> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let se = self
            .to_faer()
            .self_adjoint_eigen(faer::Side::Lower)
            .map_err(|e| Error::EigenFailure(format!("{e:?}")))?;
        // faer returns eigenvalues in ascending order
        let s = se.S();
        let top = n - 1;
        let val = s.column_vector()[top].re;
        let u = se.U();
        let vec = (0..n).map(|r| u[(r, top)]).collect();
        Ok((val, vec))
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.cols + c]
    }
}

/// `⟨x, y⟩ = Σ ȳ_k x_k`, conjugate-linear in the second argument.
pub fn cdot(x: &[Complex64], y: &[Complex64]) -> Complex64 {
    assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| b.conj() * a).sum()
}

pub fn cnorm(x: &[Complex64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}
