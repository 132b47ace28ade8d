//! Symmetric integer matrices recording powers of the quasi-R-matrix factor
//! `D = q^{H ⊗ H / 4}` coupling the tensor slots of an element.
//!
//! Entry conventions: the diagonal entry `A[i][i]` counts copies of
//! `q^{H_i^2/4}` (a `D` whose two legs were merged into slot `i`), and an
//! off-diagonal entry `A[i][j] = A[j][i]` counts copies of `q^{H_i H_j / 4}`.
//! On a vector of integer weights `λ` the whole factor evaluates to
//! `v^{Σ_i A[i][i] λ_i² + Σ_{i<j} A[i][j] λ_i λ_j}` (recall `q^{1/4} = v`).

/// Power matrix of the Cartan coupling `q^{H ⊗ H / 4}` across slots.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DMatrix {
    n: usize,
    a: Vec<i64>,
}

impl DMatrix {
    pub fn zero(n: usize) -> Self {
        DMatrix { n, a: vec![0; n * n] }
    }

    /// Zero matrix with a single symmetric coupling added between `i` and `j`.
    pub fn coupling(n: usize, i: usize, j: usize, delta: i64) -> Self {
        let mut m = Self::zero(n);
        m.add(i, j, delta);
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    /// Add `delta` to the symmetric pair `(i, j)`; on the diagonal this is a
    /// single entry.
    pub fn add(&mut self, i: usize, j: usize, delta: i64) {
        self.a[i * self.n + j] += delta;
        if i != j {
            self.a[j * self.n + i] += delta;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    pub fn add_matrix(&self, other: &DMatrix) -> DMatrix {
        assert_eq!(self.n, other.n);
        DMatrix {
            n: self.n,
            a: self.a.iter().zip(&other.a).map(|(x, y)| x + y).collect(),
        }
    }

    /// v-exponent of the evaluation on integer weights.
    pub fn eval_vexp(&self, weights: &[i64]) -> i64 {
        assert_eq!(weights.len(), self.n);
        let mut e = 0;
        for i in 0..self.n {
            e += self.get(i, i) * weights[i] * weights[i];
            for j in (i + 1)..self.n {
                e += self.get(i, j) * weights[i] * weights[j];
            }
        }
        e
    }

    /// Matrix after the comultiplication of slot `j` into slots `j`, `j+1`
    /// (the Cartan generator is primitive, so `H_j ↦ H_j' + H_j''`).
    pub fn split_row(&self, j: usize) -> DMatrix {
        let n2 = self.n + 1;
        let map = |k: usize| if k <= j { k } else { k + 1 };
        let mut m = DMatrix::zero(n2);
        for i in 0..self.n {
            for k in 0..self.n {
                if i != j && k != j {
                    m.a[map(i) * n2 + map(k)] = self.get(i, k);
                }
            }
        }
        for k in 0..self.n {
            if k != j {
                let v = self.get(j, k);
                m.a[j * n2 + map(k)] = v;
                m.a[map(k) * n2 + j] = v;
                m.a[(j + 1) * n2 + map(k)] = v;
                m.a[map(k) * n2 + j + 1] = v;
            }
        }
        let d = self.get(j, j);
        m.a[j * n2 + j] = d;
        m.a[(j + 1) * n2 + j + 1] = d;
        m.a[j * n2 + j + 1] = 2 * d;
        m.a[(j + 1) * n2 + j] = 2 * d;
        m
    }

    /// Matrix after the counit of slot `j` (delete its row and column).
    pub fn remove_row(&self, j: usize) -> DMatrix {
        let n2 = self.n - 1;
        let mut m = DMatrix::zero(n2);
        let map = |k: usize| if k < j { k } else { k - 1 };
        for i in 0..self.n {
            for k in 0..self.n {
                if i != j && k != j {
                    m.a[map(i) * n2 + map(k)] = self.get(i, k);
                }
            }
        }
        m
    }

    /// Matrix after the antipode of slot `j`: `S(H) = -H` negates the
    /// off-diagonal couplings of row `j`; the diagonal is quadratic in `H_j`
    /// and unchanged.
    pub fn negate_offdiag_row(&self, j: usize) -> DMatrix {
        let mut m = self.clone();
        for k in 0..self.n {
            if k != j {
                m.a[j * self.n + k] = -m.a[j * self.n + k];
                m.a[k * self.n + j] = -m.a[k * self.n + j];
            }
        }
        m
    }

    /// Matrix after multiplying slots `j` and `j+1` together
    /// (`H_j, H_{j+1} ↦ H_j`).
    pub fn merge_rows(&self, j: usize) -> DMatrix {
        let n2 = self.n - 1;
        let mut m = DMatrix::zero(n2);
        let map = |k: usize| if k <= j { k } else { k - 1 };
        for i in 0..self.n {
            for k in 0..self.n {
                if i != j && i != j + 1 && k != j && k != j + 1 {
                    m.a[map(i) * n2 + map(k)] = self.get(i, k);
                }
            }
        }
        for k in 0..self.n {
            if k != j && k != j + 1 {
                let v = self.get(j, k) + self.get(j + 1, k);
                m.a[j * n2 + map(k)] = v;
                m.a[map(k) * n2 + j] = v;
            }
        }
        m.a[j * n2 + j] = self.get(j, j) + self.get(j + 1, j + 1) + self.get(j, j + 1);
        m
    }

    /// Relabel slots; `perm[new] = old`.
    pub fn permute(&self, perm: &[usize]) -> DMatrix {
        assert_eq!(perm.len(), self.n);
        let mut m = DMatrix::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                m.a[i * self.n + k] = self.get(perm[i], perm[k]);
            }
        }
        m
    }

    /// Block-diagonal sum, for tensor products of elements.
    pub fn block_diag(&self, other: &DMatrix) -> DMatrix {
        let n2 = self.n + other.n;
        let mut m = DMatrix::zero(n2);
        for i in 0..self.n {
            for k in 0..self.n {
                m.a[i * n2 + k] = self.get(i, k);
            }
        }
        for i in 0..other.n {
            for k in 0..other.n {
                m.a[(self.n + i) * n2 + self.n + k] = other.get(i, k);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_quadratic_form() {
        let mut m = DMatrix::zero(2);
        m.add(0, 0, 1);
        m.add(0, 1, 3);
        m.add(1, 1, -2);
        // v^{1*4 + 3*2*5 - 2*25}
        assert_eq!(m.eval_vexp(&[2, 5]), 4 + 30 - 50);
    }

    #[test]
    fn split_then_merge_roundtrip() {
        let mut m = DMatrix::zero(3);
        m.add(0, 1, 2);
        m.add(1, 1, 1);
        m.add(1, 2, -1);
        let s = m.split_row(1);
        assert_eq!(s.get(1, 2), 2);
        assert_eq!(s.get(1, 1), 1);
        assert_eq!(s.get(2, 2), 1);
        // splitting preserves the evaluation under any weight split
        for (x, y) in [(0, 3), (2, 1), (-1, 4)] {
            assert_eq!(m.eval_vexp(&[1, x + y, 2]), s.eval_vexp(&[1, x, y, 2]));
        }
        // merging identifies the two weights: eval at (w, w) before = eval at w after
        let g = s.merge_rows(1);
        for w in [-2i64, 0, 3] {
            assert_eq!(s.eval_vexp(&[1, w, w, 2]), g.eval_vexp(&[1, w, 2]));
        }
    }

    #[test]
    fn permute_relabels() {
        let mut m = DMatrix::zero(3);
        m.add(0, 1, 5);
        m.add(2, 2, 7);
        let p = m.permute(&[2, 0, 1]);
        assert_eq!(p.get(0, 0), 7);
        assert_eq!(p.get(1, 2), 5);
    }
}
