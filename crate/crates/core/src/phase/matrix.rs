use std::ops::{Index, IndexMut, Mul, Sub};

use num_complex::Complex64;

/// Dense square complex matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

/// Structural properties checked to a tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct MatrixFlags {
    pub hermitian: bool,
    pub antisymmetric_real: bool,
    pub unitary: bool,
}

impl ComplexMatrix {
    /// Tolerance used by [`ComplexMatrix::flags`].
    pub const FLAG_TOLERANCE: f64 = 1e-10;

    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        Self { dim, entries: vec![Complex64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| if r == c { Complex64::new(1.0, 0.0) } else { Complex64::new(0.0, 0.0) })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        assert!(dim > 0, "matrix dimension must be positive");
        let entries = (0..dim * dim).map(|k| f(k / dim, k % dim)).collect();
        Self { dim, entries }
    }

    pub fn from_real_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        Self::from_fn(dim, |r, c| Complex64::new(f(r, c), 0.0))
    }

    /// Diagonal matrix `diag(0, 1, …, dim − 1)`, the number operator.
    pub fn number_operator(dim: usize) -> Self {
        Self::from_real_fn(dim, |r, c| if r == c { r as f64 } else { 0.0 })
    }

    /// Outer product `|u⟩⟨v|`.
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Self {
        assert_eq!(u.len(), v.len(), "outer product of unequal lengths");
        Self::from_fn(u.len(), |r, c| u[r] * v[c].conj())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { dim: self.dim, entries: self.entries.iter().map(|z| z * s).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)])
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self[(c, r)].conj())
    }

    /// Entrywise (Schur) product.
    pub fn hadamard(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a * b).collect();
        Self { dim: self.dim, entries }
    }

    /// `AB − BA`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|k| self[(k, k)]).sum()
    }

    /// Largest entry modulus, ‖A‖_max.
    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        self.entries.chunks_exact(self.dim).map(|row| row.iter().zip(v).map(|(a, x)| a * x).sum()).collect()
    }

    /// `⟨v|A|v⟩`.
    pub fn expectation(&self, v: &[Complex64]) -> Complex64 {
        v.iter().zip(self.apply(v)).map(|(a, b)| a.conj() * b).sum()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (&self.adjoint() - self).max_abs() < tol
    }

    pub fn is_antisymmetric_real(&self, tol: f64) -> bool {
        self.entries.iter().all(|z| z.im.abs() < tol) && (&self.transpose() + self).max_abs() < tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (&(&self.adjoint() * self) - &Self::identity(self.dim)).max_abs() < tol
    }

    pub fn flags(&self) -> MatrixFlags {
        let tol = Self::FLAG_TOLERANCE;
        MatrixFlags {
            hermitian: self.is_hermitian(tol),
            antisymmetric_real: self.is_antisymmetric_real(tol),
            unitary: self.is_unitary(tol),
        }
    }
}

impl Index<(usize, usize)> for ComplexMatrix {
    type Output = Complex64;

    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.entries[r * self.dim + c]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[r * self.dim + c]
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self[(r, k)];
                if a.re == 0.0 && a.im == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out.entries[r * n + c] += a * rhs.entries[k * n + c];
                }
            }
        }
        out
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect();
        ComplexMatrix { dim: self.dim, entries }
    }
}

impl std::ops::Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect();
        ComplexMatrix { dim: self.dim, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn products_and_flags() {
        let x = ComplexMatrix::from_fn(2, |r, cc| if r != cc { c(1.0, 0.0) } else { c(0.0, 0.0) });
        let y = ComplexMatrix::from_fn(2, |r, cc| match (r, cc) {
            (0, 1) => c(0.0, -1.0),
            (1, 0) => c(0.0, 1.0),
            _ => c(0.0, 0.0),
        });
        assert!(x.flags().hermitian && x.flags().unitary);
        assert!(!x.flags().antisymmetric_real);
        // [X, Y] = 2iZ
        let comm = x.commutator(&y);
        assert_eq!(comm[(0, 0)], c(0.0, 2.0));
        assert_eq!(comm[(1, 1)], c(0.0, -2.0));
        assert_eq!((&x * &x), ComplexMatrix::identity(2));
        assert_eq!(x.trace(), c(0.0, 0.0));
    }

    #[test]
    fn expectation_of_number_operator() {
        let n = ComplexMatrix::number_operator(3);
        let v = [c(0.0, 0.0), c(0.0, 1.0), c(1.0, 0.0)];
        assert_eq!(n.expectation(&v), c(3.0, 0.0));
    }

    #[test]
    fn antisymmetric_detection() {
        let a = ComplexMatrix::from_real_fn(3, |r, cc| r as f64 - cc as f64);
        assert!(a.flags().antisymmetric_real);
        assert!(!a.flags().hermitian);
    }
}
