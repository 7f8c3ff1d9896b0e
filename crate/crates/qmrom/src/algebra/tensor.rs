//! Dense third-order tensors and their contractions.

use nalgebra::{DMatrix, DVector};

use crate::Real;

/// Third-order tensor of shape `n x m x m` storing the fiber `[:, i, j]`
/// contiguously (column-major in the leading index).
///
/// Houses the modal-derivative stacks: fiber `[:, i, j]` holds the derivative
/// of mode `i` in the direction of mode `j`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3<T> {
    n: usize,
    m: usize,
    data: Vec<T>,
}

impl<T: Real> Tensor3<T> {
    /// Zero tensor of shape `n x m x m`.
    pub fn zeros(n: usize, m: usize) -> Self {
        Self {
            n,
            m,
            data: vec![T::zero(); n * m * m],
        }
    }

    /// Shape as `(n, m, m)`.
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.n, self.m, self.m)
    }

    /// Leading (physical) dimension `n`.
    pub fn leading_dim(&self) -> usize {
        self.n
    }

    /// Mode dimension `m`.
    pub fn mode_dim(&self) -> usize {
        self.m
    }

    #[inline]
    fn offset(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.m && j < self.m);
        self.n * (i + self.m * j)
    }

    /// Contiguous view of the fiber `[:, i, j]`.
    pub fn fiber(&self, i: usize, j: usize) -> &[T] {
        let at = self.offset(i, j);
        &self.data[at..at + self.n]
    }

    /// Fiber `[:, i, j]` as an owned vector.
    pub fn fiber_vector(&self, i: usize, j: usize) -> DVector<T> {
        DVector::from_column_slice(self.fiber(i, j))
    }

    /// Overwrites the fiber `[:, i, j]`.
    pub fn set_fiber(&mut self, i: usize, j: usize, v: &DVector<T>) {
        assert_eq!(v.len(), self.n, "fiber length mismatch");
        let at = self.offset(i, j);
        self.data[at..at + self.n].copy_from_slice(v.as_slice());
    }

    /// Entry accessor.
    pub fn get(&self, i_lead: usize, i: usize, j: usize) -> T {
        debug_assert!(i_lead < self.n);
        self.data[self.offset(i, j) + i_lead]
    }

    pub fn set(&mut self, i_lead: usize, i: usize, j: usize, value: T) {
        debug_assert!(i_lead < self.n);
        let at = self.offset(i, j) + i_lead;
        self.data[at] = value;
    }

    /// True when every entry is finite.
    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|x| x.is_finite())
    }

    /// Splits into the part symmetric in the trailing index pair and its
    /// antisymmetric complement: `Theta[:,i,j] = (T[:,i,j] + T[:,j,i]) / 2`,
    /// `Lambda = T - Theta`.
    pub fn symmetric_split(&self) -> (Tensor3<T>, Tensor3<T>) {
        let mut sym = Tensor3::zeros(self.n, self.m);
        let mut antisym = Tensor3::zeros(self.n, self.m);
        let half = crate::cvt::<T>(0.5);
        for j in 0..self.m {
            for i in 0..self.m {
                let at = self.offset(i, j);
                let at_t = self.offset(j, i);
                for k in 0..self.n {
                    let v = self.data[at + k];
                    let v_t = self.data[at_t + k];
                    let s = half * (v + v_t);
                    sym.data[at + k] = s;
                    antisym.data[at + k] = v - s;
                }
            }
        }
        (sym, antisym)
    }

    /// Contraction over the trailing index: `R[:, i] = sum_j T[:, i, j] a[j]`.
    pub fn contract_once(&self, a: &DVector<T>) -> DMatrix<T> {
        assert_eq!(a.len(), self.m, "contraction length mismatch");
        let mut out = DMatrix::zeros(self.n, self.m);
        for j in 0..self.m {
            let aj = a[j];
            if aj == T::zero() {
                continue;
            }
            for i in 0..self.m {
                let fiber = self.fiber(i, j);
                let mut col = out.column_mut(i);
                for k in 0..self.n {
                    col[k] += fiber[k] * aj;
                }
            }
        }
        out
    }

    /// Double contraction over the trailing index pair:
    /// `r = sum_{i,j} T[:, i, j] a[i] b[j]`.
    pub fn contract_twice(&self, a: &DVector<T>, b: &DVector<T>) -> DVector<T> {
        assert_eq!(a.len(), self.m, "contraction length mismatch");
        assert_eq!(b.len(), self.m, "contraction length mismatch");
        let mut out = DVector::zeros(self.n);
        for j in 0..self.m {
            let bj = b[j];
            if bj == T::zero() {
                continue;
            }
            for i in 0..self.m {
                let c = a[i] * bj;
                if c == T::zero() {
                    continue;
                }
                let fiber = self.fiber(i, j);
                for k in 0..self.n {
                    out[k] += fiber[k] * c;
                }
            }
        }
        out
    }

    /// Largest absolute entry.
    pub fn amax(&self) -> T {
        self.data
            .iter()
            .fold(T::zero(), |acc, x| acc.max(x.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::dvector;

    fn filled(n: usize, m: usize, f: impl Fn(usize, usize, usize) -> f64) -> Tensor3<f64> {
        let mut t = Tensor3::zeros(n, m);
        for j in 0..m {
            for i in 0..m {
                for k in 0..n {
                    t.set(k, i, j, f(k, i, j));
                }
            }
        }
        t
    }

    #[test]
    fn symmetric_input_has_zero_antisymmetric_part() {
        let t = filled(3, 2, |k, i, j| (k + 1) as f64 * ((i + j) as f64 + 1.0));
        let (sym, antisym) = t.symmetric_split();
        assert_eq!(sym, t);
        assert!(antisym.amax() == 0.0);
    }

    #[test]
    fn one_sided_fiber_is_halved_on_both_sides() {
        let v = dvector![1.0, -2.0, 3.0];
        let mut t = Tensor3::zeros(3, 3);
        t.set_fiber(1, 2, &v);
        let (sym, _) = t.symmetric_split();
        for k in 0..3 {
            assert_eq!(sym.get(k, 1, 2), v[k] / 2.0);
            assert_eq!(sym.get(k, 2, 1), v[k] / 2.0);
        }
    }

    #[test]
    fn split_reconstructs_and_antisym_diagonal_vanishes() {
        let t = filled(4, 3, |k, i, j| {
            ((k * 7 + i * 3 + j * 11) % 13) as f64 - 6.0
        });
        let (sym, antisym) = t.symmetric_split();
        for j in 0..3 {
            for i in 0..3 {
                for k in 0..4 {
                    let back = sym.get(k, i, j) + antisym.get(k, i, j);
                    assert!((back - t.get(k, i, j)).abs() < 1e-15);
                }
            }
            for k in 0..4 {
                assert_eq!(antisym.get(k, j, j), 0.0);
            }
        }
    }

    #[test]
    fn hand_computed_double_contraction() {
        // n = 1, m = 2, entries (1 2; 2 3): contraction with ones gives 1+2+2+3.
        let mut t = Tensor3::zeros(1, 2);
        t.set(0, 0, 0, 1.0);
        t.set(0, 0, 1, 2.0);
        t.set(0, 1, 0, 2.0);
        t.set(0, 1, 1, 3.0);
        let ones = dvector![1.0, 1.0];
        let r = t.contract_twice(&ones, &ones);
        assert_eq!(r[0], 8.0);
    }

    #[test]
    fn zero_tensor_contracts_to_zero() {
        let t = Tensor3::<f64>::zeros(5, 3);
        let a = dvector![1.0, 2.0, 3.0];
        assert_eq!(t.contract_twice(&a, &a).norm(), 0.0);
    }

    #[test]
    fn double_contraction_matches_once_then_matvec() {
        let t = filled(6, 4, |k, i, j| {
            ((k * 5 + i * 2 + j * 3) % 17) as f64 / 3.0 - 2.0
        });
        let a = dvector![0.3, -1.2, 0.7, 2.1];
        let b = dvector![-0.4, 0.9, 1.5, -0.8];
        let direct = t.contract_twice(&a, &b);
        let via_matrix = t.contract_once(&b) * &a;
        assert!((direct - via_matrix).norm() < 1e-14);
    }

    #[test]
    fn f32_contraction_smoke() {
        let mut t = Tensor3::<f32>::zeros(2, 2);
        t.set(0, 0, 0, 1.0);
        t.set(1, 1, 1, 2.0);
        let a = nalgebra::dvector![1.0f32, 1.0];
        let r = t.contract_twice(&a, &a);
        assert_eq!(r, nalgebra::dvector![1.0f32, 2.0]);
    }
}
