//! Right-linear quaternionic matrices and the complex-adjoint embedding.
//!
//! Vectors live in a right ℍ-module: matrix entries act on the left of
//! coordinates, scalars act on the right of vectors. Splitting every entry
//! as `a = x + y·j` with `x, y ∈ ℂ` identifies an `n×n` quaternionic matrix
//! `A = X + Y·j` with the `2n×2n` complex matrix
//!
//! ```text
//! χ(A) = [ X   -Y ]
//!        [ Y̅    X̅ ]
//! ```
//!
//! acting on stacked vectors `(x, y̅)` for `u = x + y·j`. The map χ is
//! multiplicative, adjoint-compatible (`χ(A*) = χ(A)ᴴ`) and a norm isometry
//! on stacked vectors, which reduces quaternionic spectral questions to
//! complex ones.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::cmat::CMatrix;
use crate::error::Error;
use crate::quat::{self, Quaternion};

/// A vector with quaternion coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct QVector(pub Vec<Quaternion>);

impl QVector {
    pub fn zeros(n: usize) -> Self {
        Self(vec![quat::ZERO; n])
    }

    pub fn basis(n: usize, k: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[k] = quat::ONE;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `‖u‖² = Σ |u_k|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|q| q.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Right scalar action `u·q`.
    pub fn scaled_right(&self, q: Quaternion) -> QVector {
        QVector(self.0.iter().map(|&u| u * q).collect())
    }

    pub fn scaled(&self, s: f64) -> QVector {
        QVector(self.0.iter().map(|&u| u.scale(s)).collect())
    }

    pub fn add(&self, rhs: &QVector) -> QVector {
        QVector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a + b).collect())
    }

    pub fn sub(&self, rhs: &QVector) -> QVector {
        QVector(self.0.iter().zip(&rhs.0).map(|(&a, &b)| a - b).collect())
    }

    pub fn normalized(&self) -> Result<QVector, Error> {
        let n = self.norm();
        if n == 0.0 {
            return Err(Error::NotUnitVector(0.0));
        }
        Ok(self.scaled(1.0 / n))
    }

    /// Stacks `u = x + y·j` as the complex vector `(x, y̅) ∈ ℂ^{2n}`.
    pub fn stack(&self) -> Vec<Complex64> {
        let n = self.len();
        let mut out = vec![Complex64::new(0.0, 0.0); 2 * n];
        for (k, q) in self.0.iter().enumerate() {
            let (a, b) = q.complex_parts();
            out[k] = a;
            out[n + k] = b.conj();
        }
        out
    }

    /// Inverse of [`stack`](Self::stack).
    pub fn unstack(w: &[Complex64]) -> QVector {
        assert!(w.len() % 2 == 0, "stacked vector must have even length");
        let n = w.len() / 2;
        QVector(
            (0..n)
                .map(|k| Quaternion::from_complex_parts(w[k], w[n + k].conj()))
                .collect(),
        )
    }

    /// Builds `x + y·j` from complex halves.
    pub fn from_complex_pair(x: &[Complex64], y: &[Complex64]) -> QVector {
        assert_eq!(x.len(), y.len());
        QVector(
            x.iter()
                .zip(y)
                .map(|(&a, &b)| Quaternion::from_complex_parts(a, b))
                .collect(),
        )
    }

    /// The complex halves `(x, y)` of `u = x + y·j`.
    pub fn complex_pair(&self) -> (Vec<Complex64>, Vec<Complex64>) {
        let mut xs = Vec::with_capacity(self.len());
        let mut ys = Vec::with_capacity(self.len());
        for q in &self.0 {
            let (a, b) = q.complex_parts();
            xs.push(a);
            ys.push(b);
        }
        (xs, ys)
    }
}

/// `⟨x, y⟩ = Σ y_k* x_k`; right-linear in the first argument.
pub fn inner(x: &QVector, y: &QVector) -> Result<Quaternion, Error> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch(format!("{} vs {}", x.len(), y.len())));
    }
    let mut acc = quat::ZERO;
    for (a, b) in x.0.iter().zip(&y.0) {
        acc += b.conj() * *a;
    }
    Ok(acc)
}

/// An `n×n` matrix of quaternions acting on the left of coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct QMatrix {
    n: usize,
    entries: Vec<Quaternion>,
}

/// The complex pair `(X, Y)` with `A = X + Y·j` entrywise.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSplit {
    pub x: CMatrix,
    pub y: CMatrix,
}

impl QMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![quat::ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = quat::ONE;
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut m = Self::zeros(n);
        for r in 0..n {
            for c in 0..n {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn diagonal(d: &[Quaternion]) -> Self {
        let mut m = Self::zeros(d.len());
        for (i, &q) in d.iter().enumerate() {
            m[(i, i)] = q;
        }
        m
    }

    /// Diagonal matrix with complex entries embedded in the `1, i` plane.
    pub fn complex_diagonal(d: &[Complex64]) -> Self {
        Self::diagonal(&d.iter().map(|&z| Quaternion::from_complex(z)).collect::<Vec<_>>())
    }

    /// Embeds a complex matrix entrywise (`j`, `k` parts zero).
    pub fn from_complex_matrix(m: &CMatrix) -> Self {
        assert_eq!(m.rows(), m.cols());
        Self::from_fn(m.rows(), |r, c| Quaternion::from_complex(m[(r, c)]))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `(Au)_p = Σ_q A_pq · u_q`.
    pub fn apply(&self, u: &QVector) -> Result<QVector, Error> {
        if u.len() != self.n {
            return Err(Error::DimensionMismatch(format!("{} vs {}", self.n, u.len())));
        }
        let mut out = QVector::zeros(self.n);
        for p in 0..self.n {
            let mut acc = quat::ZERO;
            for q in 0..self.n {
                acc += self[(p, q)] * u.0[q];
            }
            out.0[p] = acc;
        }
        Ok(out)
    }

    pub fn matmul(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.n, rhs.n, "matmul dimension mismatch");
        let mut out = QMatrix::zeros(self.n);
        for r in 0..self.n {
            for k in 0..self.n {
                let a = self[(r, k)];
                for c in 0..self.n {
                    out[(r, c)] += a * rhs[(k, c)];
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.n, rhs.n);
        QMatrix::from_fn(self.n, |r, c| self[(r, c)] + rhs[(r, c)])
    }

    pub fn sub(&self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.n, rhs.n);
        QMatrix::from_fn(self.n, |r, c| self[(r, c)] - rhs[(r, c)])
    }

    pub fn scaled(&self, s: f64) -> QMatrix {
        QMatrix::from_fn(self.n, |r, c| self[(r, c)].scale(s))
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> QMatrix {
        QMatrix::from_fn(self.n, |r, c| self[(c, r)].conj())
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|q| q.norm()).fold(0.0, f64::max)
    }

    /// Entrywise split `A = X + Y·j`.
    pub fn split(&self) -> ComplexSplit {
        let x = CMatrix::from_fn(self.n, self.n, |r, c| self[(r, c)].complex_parts().0);
        let y = CMatrix::from_fn(self.n, self.n, |r, c| self[(r, c)].complex_parts().1);
        ComplexSplit { x, y }
    }

    pub fn from_split(s: &ComplexSplit) -> QMatrix {
        assert_eq!(s.x.rows(), s.y.rows());
        QMatrix::from_fn(s.x.rows(), |r, c| {
            Quaternion::from_complex_parts(s.x[(r, c)], s.y[(r, c)])
        })
    }

    /// The complex-adjoint matrix `χ(A) = [[X, -Y], [Y̅, X̅]]`.
    pub fn chi(&self) -> CMatrix {
        let ComplexSplit { x, y } = self.split();
        let n = self.n;
        CMatrix::from_fn(2 * n, 2 * n, |r, c| match (r < n, c < n) {
            (true, true) => x[(r, c)],
            (true, false) => -y[(r, c - n)],
            (false, true) => y[(r - n, c)].conj(),
            (false, false) => x[(r - n, c - n)].conj(),
        })
    }

    /// Operator norm `sup{‖Au‖ : ‖u‖ = 1}`, the top singular value of χ(A).
    pub fn op_norm(&self) -> Result<f64, Error> {
        self.chi().largest_singular_value()
    }

    /// `‖A*A - AA*‖_F`, the normality defect.
    pub fn commutator_defect(&self) -> f64 {
        let adj = self.adjoint();
        adj.matmul(self).sub(&self.matmul(&adj)).frobenius_norm()
    }

    pub fn is_normal(&self, tol: f64) -> bool {
        let scale = 1.0 + self.frobenius_norm().powi(2);
        self.commutator_defect() <= tol * scale
    }

    pub fn is_self_adjoint(&self, tol: f64) -> bool {
        let scale = 1.0 + self.frobenius_norm();
        self.sub(&self.adjoint()).frobenius_norm() <= tol * scale
    }

    /// Whether every entry lies in ℂ in the standard basis.
    ///
    /// The notion of a complex operator is basis-dependent; this predicate
    /// checks the given coordinates only. When a revealing orthonormal basis
    /// `U` is known, test `a.conjugated_by(&u)` instead.
    pub fn is_complex_operator(&self, tol: f64) -> bool {
        let scale = 1.0 + self.max_abs();
        self.entries.iter().all(|q| q.is_complex(tol * scale))
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        let prod = self.adjoint().matmul(self);
        let defect = prod.sub(&QMatrix::identity(self.n)).frobenius_norm();
        defect <= tol * (1.0 + self.frobenius_norm().powi(2))
    }

    /// `U* A U` for a basis change `U`.
    pub fn conjugated_by(&self, u: &QMatrix) -> QMatrix {
        u.adjoint().matmul(self).matmul(u)
    }

    pub fn entries(&self) -> &[Quaternion] {
        &self.entries
    }
}

impl std::ops::Index<(usize, usize)> for QMatrix {
    type Output = Quaternion;
    fn index(&self, (r, c): (usize, usize)) -> &Quaternion {
        &self.entries[r * self.n + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quaternion {
        &mut self.entries[r * self.n + c]
    }
}

pub fn random_quaternion<R: rand::Rng>(rng: &mut R) -> Quaternion {
    let g = |rng: &mut R| StandardNormal.sample(rng);
    Quaternion::new(g(rng), g(rng), g(rng), g(rng))
}

/// Gaussian quaternion matrix, entries iid with unit-variance components.
pub fn random_matrix(n: usize, seed: u64) -> QMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    QMatrix::from_fn(n, |_, _| random_quaternion(&mut rng))
}

/// Uniform unit vector via normalized Gaussians on ℝ^{4n}.
pub fn random_unit_vector<R: rand::Rng>(n: usize, rng: &mut R) -> QVector {
    loop {
        let v = QVector((0..n).map(|_| random_quaternion(rng)).collect());
        let norm = v.norm();
        if norm > 1e-6 {
            return v.scaled(1.0 / norm);
        }
    }
}

const UNITARY_RETRIES: usize = 8;

/// Random unitary by right-coefficient Gram-Schmidt on a Gaussian matrix.
pub fn random_unitary(n: usize, seed: u64) -> Result<QMatrix, Error> {
    if n == 0 {
        return Err(Error::DimensionTooSmall { required: 1, actual: 0 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'retry: for _ in 0..UNITARY_RETRIES {
        let mut cols: Vec<QVector> = (0..n)
            .map(|_| QVector((0..n).map(|_| random_quaternion(&mut rng)).collect()))
            .collect();
        for k in 0..n {
            for m in 0..k {
                // subtract u_m · ⟨v_k, u_m⟩ ; coefficient multiplies on the right
                let coeff = inner(&cols[k], &cols[m])?;
                let proj = cols[m].scaled_right(coeff);
                cols[k] = cols[k].sub(&proj);
            }
            let norm = cols[k].norm();
            if norm < 1e-8 {
                continue 'retry;
            }
            cols[k] = cols[k].scaled(1.0 / norm);
        }
        return Ok(QMatrix::from_fn(n, |r, c| cols[c].0[r]));
    }
    Err(Error::SingularDraw(UNITARY_RETRIES))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::{I, J, K, ONE};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn apply_identity_and_scalar() {
        let id = QMatrix::identity(3);
        let u = QVector(vec![I, J, ONE + K]);
        assert_eq!(id.apply(&u).unwrap(), u);

        // 1x1: diag(j) applied to (i) gives j·i = -k
        let m = QMatrix::diagonal(&[J]);
        let v = m.apply(&QVector(vec![I])).unwrap();
        assert_eq!(v.0[0], -K);
    }

    #[test]
    fn apply_dimension_mismatch() {
        let m = QMatrix::identity(2);
        assert!(m.apply(&QVector::zeros(3)).is_err());
    }

    #[test]
    fn inner_basis() {
        let e1 = QVector::basis(2, 0);
        assert_eq!(inner(&e1, &e1).unwrap(), ONE);
        assert!(inner(&e1, &QVector::zeros(3)).is_err());
    }

    #[test]
    fn split_cases() {
        let m = QMatrix::diagonal(&[J]);
        let s = m.split();
        assert_eq!(s.x[(0, 0)], c(0.0, 0.0));
        assert_eq!(s.y[(0, 0)], c(1.0, 0.0));

        let m = QMatrix::diagonal(&[ONE + I]);
        let s = m.split();
        assert_eq!(s.x[(0, 0)], c(1.0, 1.0));
        assert_eq!(s.y[(0, 0)], c(0.0, 0.0));

        // 2j - 2k = (2 - 2i)·j; the sign of the k component is fixed by the
        // exact-reassembly requirement
        let m = QMatrix::diagonal(&[J.scale(2.0) - K.scale(2.0)]);
        let s = m.split();
        assert_eq!(s.x[(0, 0)], c(0.0, 0.0));
        assert_eq!(s.y[(0, 0)], c(2.0, -2.0));
        assert_eq!(QMatrix::from_split(&s), m);
    }

    #[test]
    fn chi_of_j_and_identity() {
        let m = QMatrix::diagonal(&[J]);
        let chi = m.chi();
        assert_eq!(chi[(0, 0)], c(0.0, 0.0));
        assert_eq!(chi[(0, 1)], c(-1.0, 0.0));
        assert_eq!(chi[(1, 0)], c(1.0, 0.0));
        assert_eq!(chi[(1, 1)], c(0.0, 0.0));
        let mut eigs = chi.eigenvalues().unwrap();
        eigs.sort_by(|a, b| a.im.partial_cmp(&b.im).unwrap());
        assert_relative_eq!(eigs[0].im, -1.0, epsilon = 1e-12);
        assert_relative_eq!(eigs[1].im, 1.0, epsilon = 1e-12);

        assert_eq!(QMatrix::identity(2).chi(), CMatrix::identity(4));
    }

    #[test]
    fn op_norm_cases() {
        assert_relative_eq!(QMatrix::identity(4).op_norm().unwrap(), 1.0, epsilon = 1e-12);
        assert_relative_eq!(QMatrix::diagonal(&[J]).op_norm().unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn adjoint_cases() {
        let m = QMatrix::diagonal(&[J]);
        assert_eq!(m.adjoint(), QMatrix::diagonal(&[-J]));
        assert!(QMatrix::complex_diagonal(&[c(0.0, 1.0), c(1.0, 2.0)]).is_normal(1e-12));
        let mut upper = QMatrix::zeros(2);
        upper[(0, 1)] = J;
        assert!(!upper.is_complex_operator(1e-12));
        assert!(!upper.is_normal(1e-12));
    }

    #[test]
    fn random_unitary_is_unitary() {
        for seed in [1u64, 7, 42] {
            let u = random_unitary(4, seed).unwrap();
            assert!(u.is_unitary(1e-10));
            assert_relative_eq!(u.op_norm().unwrap(), 1.0, epsilon = 1e-10);
        }
    }

    fn arb_quat() -> impl Strategy<Value = Quaternion> {
        let c = -3.0..3.0f64;
        (c.clone(), c.clone(), c.clone(), c).prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
    }

    fn arb_qmat(n: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec(arb_quat(), n * n)
            .prop_map(move |v| QMatrix::from_fn(n, |r, c| v[r * n + c]))
    }

    fn arb_qvec(n: usize) -> impl Strategy<Value = QVector> {
        proptest::collection::vec(arb_quat(), n).prop_map(QVector)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn right_linearity(m in arb_qmat(3), u in arb_qvec(3), q in arb_quat()) {
            let lhs = m.apply(&u.scaled_right(q)).unwrap();
            let rhs = m.apply(&u).unwrap().scaled_right(q);
            let scale = 1.0 + m.frobenius_norm() * u.norm() * q.norm();
            prop_assert!(lhs.sub(&rhs).norm() <= 1e-12 * scale);
        }

        #[test]
        fn inner_axioms(x in arb_qvec(3), y in arb_qvec(3), a in arb_quat()) {
            // (i) ⟨xa, w⟩ = ⟨x, w⟩·a
            let lhs = inner(&x.scaled_right(a), &y).unwrap();
            let rhs = inner(&x, &y).unwrap() * a;
            let scale = 1.0 + x.norm() * y.norm() * a.norm();
            prop_assert!(lhs.max_abs_diff(rhs) <= 1e-12 * scale);
            // (ii) ⟨x, y⟩ = ⟨y, x⟩*
            let sym = inner(&y, &x).unwrap().conj();
            prop_assert!(inner(&x, &y).unwrap().max_abs_diff(sym) <= 1e-12 * scale);
            // (iii) ⟨x, x⟩ ≥ 0, real
            let xx = inner(&x, &x).unwrap();
            prop_assert!(xx.w >= 0.0);
            prop_assert!(xx.im_norm() <= 1e-12 * (1.0 + xx.w));
        }

        #[test]
        fn split_reassembles(m in arb_qmat(3)) {
            prop_assert_eq!(QMatrix::from_split(&m.split()), m);
        }

        #[test]
        fn chi_multiplicative(a in arb_qmat(3), b in arb_qmat(3)) {
            let lhs = a.matmul(&b).chi();
            let rhs = a.chi().matmul(&b.chi());
            let scale = (1.0 + a.frobenius_norm()) * (1.0 + b.frobenius_norm());
            prop_assert!(lhs.sub(&rhs).frobenius_norm() <= 1e-12 * scale);
        }

        #[test]
        fn chi_adjoint_compatible(a in arb_qmat(3)) {
            // pure sign/transpose rearrangement, exact in floating point
            prop_assert_eq!(a.adjoint().chi(), a.chi().adjoint());
        }

        #[test]
        fn chi_norm_isometry(a in arb_qmat(3), u in arb_qvec(3)) {
            let lhs = a.apply(&u).unwrap().norm();
            let stacked = a.chi().matvec(&u.stack());
            let rhs = crate::cmat::cnorm(&stacked);
            let scale = (1.0 + a.frobenius_norm()) * (1.0 + u.norm());
            prop_assert!((lhs - rhs).abs() <= 1e-12 * scale);
        }

        #[test]
        fn stack_roundtrip(u in arb_qvec(4)) {
            prop_assert_eq!(QVector::unstack(&u.stack()), u);
        }

        #[test]
        fn adjoint_involution_and_pairing(a in arb_qmat(3), u in arb_qvec(3), v in arb_qvec(3)) {
            prop_assert_eq!(a.adjoint().adjoint(), a.clone());
            // ⟨Au, v⟩ = ⟨u, A*v⟩
            let lhs = inner(&a.apply(&u).unwrap(), &v).unwrap();
            let rhs = inner(&u, &a.adjoint().apply(&v).unwrap()).unwrap();
            let scale = 1.0 + a.frobenius_norm() * u.norm() * v.norm();
            prop_assert!(lhs.max_abs_diff(rhs) <= 1e-12 * scale);
        }

        #[test]
        fn op_norm_dominates(a in arb_qmat(3), u in arb_qvec(3)) {
            prop_assume!(u.norm() > 1e-3);
            let unit = u.normalized().unwrap();
            let norm = a.op_norm().unwrap();
            prop_assert!(a.apply(&unit).unwrap().norm() <= norm * (1.0 + 1e-10) + 1e-10);
        }
    }
}
