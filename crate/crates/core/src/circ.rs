//! Polynomials in Z>=0[x]/(x^N - 1), the algebra of N x N circulant matrices.

use crate::error::{QcError, Result};
use std::collections::BTreeMap;
use std::fmt;

/// Above this size products go through the sparse exponent map.
pub const SPARSE_THRESHOLD: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CircPoly {
    coeffs: Vec<u64>,
}

impl CircPoly {
    pub fn zero(n: usize) -> Self {
        assert!(n > 0, "circulant size must be positive");
        CircPoly { coeffs: vec![0; n] }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(n, 0)
    }

    pub fn monomial(n: usize, e: i64) -> Self {
        let mut p = Self::zero(n);
        p.coeffs[reduce(e, n)] = 1;
        p
    }

    /// Sum of monomials; repeated exponents accumulate.
    pub fn from_exponents(n: usize, exps: &[i64]) -> Self {
        let mut p = Self::zero(n);
        for &e in exps {
            p.coeffs[reduce(e, n)] += 1;
        }
        p
    }

    pub fn from_coeffs(coeffs: Vec<u64>) -> Self {
        assert!(!coeffs.is_empty(), "circulant size must be positive");
        CircPoly { coeffs }
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, e: i64) -> u64 {
        self.coeffs[reduce(e, self.n())]
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Sum of coefficients (row weight of the expanded circulant).
    pub fn weight(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn max_coeff(&self) -> u64 {
        self.coeffs.iter().copied().max().unwrap_or(0)
    }

    /// Exponents with non-zero coefficient, ascending.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(e, _)| e)
    }

    pub fn nnz(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    /// x^r -> x^(N-r).
    pub fn transpose(&self) -> Self {
        let n = self.n();
        let mut out = Self::zero(n);
        for (e, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[(n - e) % n] = c;
        }
        out
    }

    /// Multiply by x^e.
    pub fn shift(&self, e: i64) -> Self {
        let n = self.n();
        let s = reduce(e, n);
        let mut out = Self::zero(n);
        for (k, &c) in self.coeffs.iter().enumerate() {
            out.coeffs[(k + s) % n] = c;
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        same_n(self, other)?;
        let mut out = self.clone();
        out.add_assign(other);
        Ok(out)
    }

    pub(crate) fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.n(), other.n());
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.checked_add(b).expect("coefficient overflow");
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        same_n(self, other)?;
        Ok(if self.n() > SPARSE_THRESHOLD {
            self.mul_sparse(other)
        } else {
            self.mul_dense(other)
        })
    }

    /// Convolution over the dense coefficient vectors.
    pub fn mul_dense(&self, other: &Self) -> Self {
        let n = self.n();
        assert_eq!(n, other.n(), "circulant size mismatch");
        let (a, b) = if self.nnz() <= other.nnz() { (self, other) } else { (other, self) };
        let mut out = vec![0u64; n];
        for (i, &ca) in a.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            let (head, tail) = out.split_at_mut(i);
            // out[i + j] for j < n - i, then wrap around into head
            for (o, &cb) in tail.iter_mut().zip(&b.coeffs) {
                if cb != 0 {
                    *o = mul_add(*o, ca, cb);
                }
            }
            for (o, &cb) in head.iter_mut().zip(&b.coeffs[n - i..]) {
                if cb != 0 {
                    *o = mul_add(*o, ca, cb);
                }
            }
        }
        CircPoly { coeffs: out }
    }

    /// Product through exponent -> multiplicity maps.
    pub fn mul_sparse(&self, other: &Self) -> Self {
        let n = self.n();
        assert_eq!(n, other.n(), "circulant size mismatch");
        let a = self.to_sparse();
        let b = other.to_sparse();
        let mut acc: BTreeMap<usize, u64> = BTreeMap::new();
        for (&ea, &ca) in &a {
            for (&eb, &cb) in &b {
                let slot = acc.entry((ea + eb) % n).or_insert(0);
                *slot = mul_add(*slot, ca, cb);
            }
        }
        let mut out = Self::zero(n);
        for (e, c) in acc {
            out.coeffs[e] = c;
        }
        out
    }

    pub fn to_sparse(&self) -> BTreeMap<usize, u64> {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(e, &c)| (e, c)).collect()
    }

    /// Dense N x N expansion: row k has coefficient c_r at column (k + r) mod N.
    pub fn expand(&self) -> Vec<Vec<u64>> {
        let n = self.n();
        (0..n)
            .map(|k| (0..n).map(|col| self.coeffs[(col + n - k) % n]).collect())
            .collect()
    }
}

fn mul_add(acc: u64, a: u64, b: u64) -> u64 {
    a.checked_mul(b)
        .and_then(|p| acc.checked_add(p))
        .expect("coefficient overflow")
}

fn same_n(a: &CircPoly, b: &CircPoly) -> Result<()> {
    if a.n() != b.n() {
        return Err(QcError::ModulusMismatch(a.n(), b.n()));
    }
    Ok(())
}

pub fn reduce(e: i64, n: usize) -> usize {
    e.rem_euclid(n as i64) as usize
}

impl fmt::Debug for CircPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CircPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, e) {
                (_, 0) => write!(f, "{}", c)?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "x^{}", e)?,
                (_, 1) => write!(f, "{}x", c)?,
                _ => write!(f, "{}x^{}", c, e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_wraps() {
        let p = CircPoly::from_exponents(5, &[0, 3]);
        let q = CircPoly::from_exponents(5, &[4]);
        assert_eq!(p.checked_mul(&q).unwrap(), CircPoly::from_exponents(5, &[4, 2]));
    }

    #[test]
    fn transpose_negates_exponents() {
        let p = CircPoly::from_exponents(7, &[0, 1, 3]);
        assert_eq!(p.transpose(), CircPoly::from_exponents(7, &[0, 6, 4]));
    }

    #[test]
    fn expand_places_ones_right_of_diagonal() {
        let m = CircPoly::monomial(3, 1).expand();
        assert_eq!(m, vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 0, 0]]);
    }

    #[test]
    fn dense_and_sparse_agree() {
        let p = CircPoly::from_exponents(11, &[0, 2, 2, 9]);
        let q = CircPoly::from_exponents(11, &[1, 5, 10, 10]);
        assert_eq!(p.mul_dense(&q), p.mul_sparse(&q));
    }

    #[test]
    fn mismatched_sizes_rejected() {
        let p = CircPoly::one(3);
        let q = CircPoly::one(4);
        assert_eq!(p.checked_mul(&q), Err(QcError::ModulusMismatch(3, 4)));
    }

    #[test]
    fn display_form() {
        let p = CircPoly::from_exponents(16, &[0, 0, 1, 7]);
        assert_eq!(p.to_string(), "2 + x + x^7");
    }
}
