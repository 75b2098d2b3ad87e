//! Square matrices of integer polynomials in `t`, truncated modulo `t^(bound+1)`.

use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    size: usize,
    bound: usize,
    /// `coeffs[(u * size + v) * (bound + 1) + d]`
    coeffs: Vec<i64>,
}

impl PolyMatrix {
    pub fn zeros(size: usize, bound: usize) -> Self {
        Self {
            size,
            bound,
            coeffs: vec![0; size * size * (bound + 1)],
        }
    }

    pub fn identity(size: usize, bound: usize) -> Self {
        let mut m = Self::zeros(size, bound);
        for u in 0..size {
            m.set(u, u, 0, 1);
        }
        m
    }

    /// Builds from `(u, v, degree, coefficient)` entries.
    pub fn from_entries(size: usize, bound: usize, entries: &[(usize, usize, usize, i64)]) -> Self {
        let mut m = Self::zeros(size, bound);
        for &(u, v, d, c) in entries {
            m.set(u, v, d, m.get(u, v, d) + c);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn offset(&self, u: usize, v: usize, d: usize) -> usize {
        (u * self.size + v) * (self.bound + 1) + d
    }

    pub fn get(&self, u: usize, v: usize, d: usize) -> i64 {
        if d > self.bound {
            return 0;
        }
        self.coeffs[self.offset(u, v, d)]
    }

    pub fn set(&mut self, u: usize, v: usize, d: usize, c: i64) {
        if d <= self.bound {
            let i = self.offset(u, v, d);
            self.coeffs[i] = c;
        }
    }

    /// Re-truncates at a (smaller or larger) bound; new coefficients are zero.
    pub fn truncated(&self, bound: usize) -> Self {
        let mut m = Self::zeros(self.size, bound);
        for u in 0..self.size {
            for v in 0..self.size {
                for d in 0..=bound.min(self.bound) {
                    m.set(u, v, d, self.get(u, v, d));
                }
            }
        }
        m
    }

    pub fn add_scaled(&mut self, factor: i64, other: &PolyMatrix) {
        assert_eq!((self.size, self.bound), (other.size, other.bound));
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += factor * b;
        }
    }

    /// Product truncated at `min(bound)` of the two factors.
    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.size, other.size);
        let bound = self.bound.min(other.bound);
        let mut out = Self::zeros(self.size, bound);
        for u in 0..self.size {
            for w in 0..self.size {
                for v in 0..self.size {
                    for i in 0..=bound {
                        let a = self.get(u, v, i);
                        if a == 0 {
                            continue;
                        }
                        for j in 0..=(bound - i) {
                            let b = other.get(v, w, j);
                            if b != 0 {
                                let k = out.offset(u, w, i + j);
                                out.coeffs[k] += a * b;
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// First `(u, v, degree)` where the two matrices differ.
    pub fn first_difference(&self, other: &PolyMatrix) -> Option<(usize, usize, usize)> {
        let bound = self.bound.min(other.bound);
        for u in 0..self.size {
            for v in 0..self.size {
                for d in 0..=bound {
                    if self.get(u, v, d) != other.get(u, v, d) {
                        return Some((u, v, d));
                    }
                }
            }
        }
        None
    }

    /// Coefficient list of entry `(u, v)`, trailing zeros kept.
    pub fn entry(&self, u: usize, v: usize) -> Vec<i64> {
        (0..=self.bound).map(|d| self.get(u, v, d)).collect()
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix(mod t^{}) [", self.bound + 1)?;
        for u in 0..self.size {
            let row: Vec<String> = (0..self.size).map(|v| format!("{:?}", self.entry(u, v))).collect();
            writeln!(f, "  {}", row.join(", "))?;
        }
        write!(f, "]")
    }
}
