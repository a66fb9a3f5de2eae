//! Exact rational matrices.
//!
//! Principal minors, deletion of an index, the Schur complement of the
//! trailing entry, the characteristic polynomial, an exact Routh–Hurwitz
//! stability decision and the P-matrix classes used as necessary filters.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{lcm_of_denominators, parse_rational, rat, Rational};

/// Default upper bound on `n` for enumerating all `2^n` principal minors.
pub const DEFAULT_MINOR_CAP: usize = 12;

/// Dense square matrix of exact rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    entries: Vec<Rational>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Empty);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotSquare {
                    row: i + 1,
                    found: row.len(),
                    expected: n,
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { n, entries })
    }

    /// Convenience constructor for integer matrices.
    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let diag = vec![Rational::one(); n];
        Self::diagonal(&diag)
    }

    pub fn diagonal(diag: &[Rational]) -> Self {
        let n = diag.len();
        let mut entries = vec![Rational::zero(); n * n];
        for (i, d) in diag.iter().enumerate() {
            entries[i * n + i] = d.clone();
        }
        Matrix { n, entries }
    }

    /// Parses the plain-text matrix format: one row per line, entries
    /// separated by whitespace or commas, `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    parse_rational(t).map_err(|message| Error::Parse {
                        line: lineno + 1,
                        message,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Self::from_rows(rows)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at zero-based row `i`, column `j`.
    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Rational]> {
        self.entries.chunks(self.n)
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.rows()
            .map(|r| r.iter().map(crate::rational::to_f64).collect())
            .collect()
    }

    /// Principal submatrix on the (1-based) indices of `alpha`.
    pub fn submatrix(&self, alpha: &IndexSet) -> Result<Matrix> {
        alpha.check(self.n)?;
        let idx: Vec<usize> = alpha.iter().map(|i| i - 1).collect();
        let entries = idx
            .iter()
            .flat_map(|&i| idx.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Ok(Matrix {
            n: idx.len(),
            entries,
        })
    }

    /// Removes row and column `i` (1-based).
    pub fn delete_index(&self, i: usize) -> Result<Matrix> {
        if self.n < 2 {
            return Err(Error::DimensionTooSmall { n: self.n, min: 2 });
        }
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                n: self.n,
            });
        }
        let keep = IndexSet::from_mask(self.n, full_mask(self.n) & !(1u32 << (i - 1)));
        self.submatrix(&keep)
    }

    /// Schur complement of the trailing entry `a_nn`:
    /// `A|_n - (1/a_nn) * a_{1..n-1,n} * a_{n,1..n-1}`.
    pub fn schur_complement(&self) -> Result<Matrix> {
        let n = self.n;
        if n < 2 {
            return Err(Error::DimensionTooSmall { n, min: 2 });
        }
        let pivot = self.get(n - 1, n - 1);
        if pivot.is_zero() {
            return Err(Error::SingularPivot);
        }
        let m = n - 1;
        let mut entries = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                entries.push(self.get(i, j) - self.get(i, n - 1) * self.get(n - 1, j) / pivot);
            }
        }
        Ok(Matrix { n: m, entries })
    }

    /// Exact determinant by fraction-free (Bareiss) elimination after
    /// clearing the denominators of every row.
    pub fn determinant(&self) -> Rational {
        let mut scale = BigInt::one();
        let rows: Vec<Vec<BigInt>> = self
            .rows()
            .map(|row| {
                let l = lcm_of_denominators(row);
                let ints = row
                    .iter()
                    .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                    .collect();
                scale *= &l;
                ints
            })
            .collect();
        Rational::new(bareiss_det(rows), scale)
    }

    pub fn principal_minor(&self, alpha: &IndexSet) -> Result<Rational> {
        alpha.check(self.n)?;
        if alpha.is_empty() {
            return Ok(Rational::one());
        }
        Ok(self.submatrix(alpha)?.determinant())
    }

    /// All `2^n` principal minors, keyed by subset bitmask.
    pub fn all_principal_minors(&self, cap: usize) -> Result<MinorTable> {
        let n = self.n;
        if n > cap || n > 30 {
            return Err(Error::CapExceeded { n, cap });
        }
        // Scale every row to integers once; a principal minor of the scaled
        // matrix is the original minor times the product of its row scales.
        let scales: Vec<BigInt> = self.rows().map(lcm_of_denominators).collect();
        let ints: Vec<Vec<BigInt>> = self
            .rows()
            .zip(&scales)
            .map(|(row, l)| {
                row.iter()
                    .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
                    .collect()
            })
            .collect();
        let values = (0..1u32 << n)
            .into_par_iter()
            .map(|mask| {
                if mask == 0 {
                    return Rational::one();
                }
                let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                let sub = idx
                    .iter()
                    .map(|&i| idx.iter().map(|&j| ints[i][j].clone()).collect())
                    .collect();
                let denom: BigInt = idx.iter().map(|&i| scales[i].clone()).product();
                Rational::new(bareiss_det(sub), denom)
            })
            .collect();
        Ok(MinorTable { n, values })
    }

    /// Coefficients of `det(A - λI)`.
    pub fn char_poly(&self) -> CharPoly {
        let n = self.n;
        // Faddeev–LeVerrier on B = L·A with integer entries: every step
        // stays integral, and the coefficient of λ^k scales by L^(n-k).
        let l = lcm_of_denominators(&self.entries);
        let lr = Rational::from_integer(l.clone());
        let b: Vec<BigInt> = self
            .entries
            .iter()
            .map(|x| (x * &lr).to_integer())
            .collect();
        let mut monic = vec![BigInt::zero(); n + 1];
        monic[n] = BigInt::one();
        let mut m: Vec<BigInt> = (0..n * n)
            .map(|k| {
                if k % (n + 1) == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            })
            .collect();
        for k in 1..=n {
            let mut am = vec![BigInt::zero(); n * n];
            for i in 0..n {
                for t in 0..n {
                    let bit = &b[i * n + t];
                    if bit.is_zero() {
                        continue;
                    }
                    for j in 0..n {
                        am[i * n + j] += bit * &m[t * n + j];
                    }
                }
            }
            let trace: BigInt = (0..n).map(|i| &am[i * n + i]).sum();
            let c = -trace / BigInt::from(k);
            for i in 0..n {
                am[i * n + i] += &c;
            }
            monic[n - k] = c;
            m = am;
        }
        // det(A - λI) = (-1)^n det(λI - A)
        let sign = if n.is_multiple_of(2) {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        let coeffs = monic
            .into_iter()
            .enumerate()
            .map(|(k, c)| Rational::new(c * &sign, num_traits::pow(l.clone(), n - k)))
            .collect();
        CharPoly { coeffs }
    }

    /// Positive stability (every eigenvalue has positive real part), decided
    /// exactly by Routh–Hurwitz on the characteristic polynomial of `-A`.
    /// Any vanishing Routh pivot reports `false`.
    pub fn is_positive_stable(&self) -> bool {
        // det(λI + A) has roots σ(-A); its ascending coefficients are the
        // coefficients of det((-A) - λI) times (-1)^n.
        let cp = self.neg().char_poly();
        let flip = self.n % 2 == 1;
        let descending: Vec<Rational> = cp
            .coeffs
            .iter()
            .rev()
            .map(|c| if flip { -c } else { c.clone() })
            .collect();
        routh_hurwitz(&descending)
    }

    pub fn classify_p(&self, cap: usize) -> Result<PClass> {
        Ok(PClass::of(&self.all_principal_minors(cap)?))
    }

    pub fn neg(&self) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for k in 0..n {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc += a * other.get(k, j);
                }
                entries.push(acc);
            }
        }
        Matrix { n, entries }
    }

    /// `diag(d) * A`.
    pub fn scale_rows(&self, d: &[Rational]) -> Matrix {
        assert_eq!(d.len(), self.n, "diagonal length must match dimension");
        let entries = self
            .rows()
            .zip(d)
            .flat_map(|(row, di)| row.iter().map(move |x| x * di))
            .collect();
        Matrix { n: self.n, entries }
    }

    /// Permutation similarity `PᵀAP`: entry `(i, j)` of the result is
    /// `a_{perm[i], perm[j]}` (zero-based).
    pub fn permuted(&self, perm: &[usize]) -> Matrix {
        assert_eq!(perm.len(), self.n);
        let mut entries = Vec::with_capacity(self.n * self.n);
        for &pi in perm {
            for &pj in perm {
                entries.push(self.get(pi, pj).clone());
            }
        }
        Matrix { n: self.n, entries }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// True iff the polynomial with the given descending coefficients has all
/// roots in the open left half-plane.
pub fn routh_hurwitz(descending: &[Rational]) -> bool {
    let Some(lead) = descending.first() else {
        return false;
    };
    if lead.is_zero() {
        return false;
    }
    let coeffs: Vec<Rational> = if lead.is_negative() {
        descending.iter().map(|c| -c).collect()
    } else {
        descending.to_vec()
    };
    let degree = coeffs.len() - 1;
    let width = degree / 2 + 1;
    let row_of = |start: usize| -> Vec<Rational> {
        (0..width)
            .map(|j| {
                coeffs
                    .get(start + 2 * j)
                    .cloned()
                    .unwrap_or_else(Rational::zero)
            })
            .collect()
    };
    let mut upper = row_of(0);
    let mut lower = row_of(1);
    for _ in 1..=degree {
        if !lower[0].is_positive() {
            return false;
        }
        let next: Vec<Rational> = (0..width)
            .map(|j| {
                let a = upper.get(j + 1).cloned().unwrap_or_else(Rational::zero);
                let b = lower.get(j + 1).cloned().unwrap_or_else(Rational::zero);
                (&lower[0] * a - &upper[0] * b) / &lower[0]
            })
            .collect();
        upper = lower;
        lower = next;
    }
    true
}

/// Strictly increasing set of 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(mut indices: Vec<usize>) -> Result<Self> {
        indices.sort_unstable();
        if indices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidConfig("repeated index in index set".into()));
        }
        if let Some(&0) = indices.first() {
            return Err(Error::IndexOutOfRange { index: 0, n: 0 });
        }
        Ok(IndexSet(indices))
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    pub fn full(n: usize) -> Self {
        IndexSet((1..=n).collect())
    }

    pub fn from_mask(n: usize, mask: u32) -> Self {
        IndexSet((1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
    }

    pub fn mask(&self) -> u32 {
        self.0.iter().fold(0, |m, i| m | 1u32 << (i - 1))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    fn check(&self, n: usize) -> Result<()> {
        match self.0.iter().find(|&&i| i == 0 || i > n) {
            Some(&index) => Err(Error::IndexOutOfRange { index, n }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Every principal minor of an `n × n` matrix, including the empty minor 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorTable {
    n: usize,
    values: Vec<Rational>,
}

impl MinorTable {
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, alpha: &IndexSet) -> &Rational {
        &self.values[alpha.mask() as usize]
    }

    pub fn by_mask(&self, mask: u32) -> &Rational {
        &self.values[mask as usize]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Entries in order of subset size, then lexicographically.
    pub fn entries(&self) -> Vec<(IndexSet, &Rational)> {
        let mut out: Vec<(IndexSet, &Rational)> = self
            .values
            .iter()
            .enumerate()
            .map(|(mask, v)| (IndexSet::from_mask(self.n, mask as u32), v))
            .collect();
        out.sort_by(|a, b| a.0.len().cmp(&b.0.len()).then_with(|| a.0.cmp(&b.0)));
        out
    }

    /// Sum of the principal minors of order `k`.
    pub fn order_sum(&self, k: usize) -> Rational {
        self.values
            .iter()
            .enumerate()
            .filter(|(mask, _)| (*mask as u32).count_ones() as usize == k)
            .map(|(_, v)| v.clone())
            .sum()
    }
}

/// Coefficients `c_0..c_n` of `det(A - λI)`, ascending in `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub coeffs: Vec<Rational>,
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }
}

/// P-matrix classes, strongest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PClass {
    P,
    P0Plus,
    P0,
    None,
}

impl PClass {
    pub fn of(minors: &MinorTable) -> PClass {
        let nonempty = || minors.values.iter().skip(1);
        if nonempty().all(|v| v.is_positive()) {
            return PClass::P;
        }
        if !nonempty().all(|v| !v.is_negative()) {
            return PClass::None;
        }
        if (1..=minors.n).all(|k| minors.order_sum(k).is_positive()) {
            PClass::P0Plus
        } else {
            PClass::P0
        }
    }
}

/// Necessary condition for positive D-stability: the matrix must be P₀⁺.
/// `false` certifies that the matrix is not D-stable.
pub fn necessary_filter(minors: &MinorTable) -> bool {
    matches!(PClass::of(minors), PClass::P | PClass::P0Plus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn worked_example() -> Matrix {
        Matrix::from_i64(&[
            &[2, -2, 1, 0, 0],
            &[1, 0, 0, 0, -1],
            &[1, -1, 1, 0, 0],
            &[0, -1, 0, 1, -1],
            &[0, 1, 0, 0, 2],
        ])
        .unwrap()
    }

    #[test]
    fn parse_text_format() {
        let m = Matrix::parse("# header\n1, 2.5\n\n-3/4  0 # trailing\n").unwrap();
        assert_eq!(m.dim(), 2);
        assert_eq!(*m.get(0, 1), ratio(5, 2));
        assert_eq!(*m.get(1, 0), ratio(-3, 4));
    }

    #[test]
    fn parse_rejects_ragged_and_bad_tokens() {
        assert!(matches!(
            Matrix::parse("1 2\n3\n"),
            Err(Error::NotSquare { row: 2, .. })
        ));
        assert!(matches!(
            Matrix::parse("1 x\n3 4\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert_eq!(Matrix::parse("# nothing\n"), Err(Error::Empty));
    }

    #[test]
    fn identity_minors_are_one() {
        let id = Matrix::identity(4);
        let t = id.all_principal_minors(DEFAULT_MINOR_CAP).unwrap();
        assert_eq!(t.len(), 16);
        assert!(t.entries().iter().all(|(_, v)| v.is_one()));
    }

    #[test]
    fn worked_example_leading_two_by_two_minor() {
        // det [[2,-2],[1,0]] = 0 - (-2)(1) = 2
        let a = IndexSet::new(vec![1, 2]).unwrap();
        assert_eq!(worked_example().principal_minor(&a).unwrap(), rat(2));
    }

    #[test]
    fn principal_minor_index_out_of_range() {
        let a = IndexSet::new(vec![1, 7]).unwrap();
        assert_eq!(
            Matrix::identity(3).principal_minor(&a),
            Err(Error::IndexOutOfRange { index: 7, n: 3 })
        );
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            Matrix::identity(5).all_principal_minors(4),
            Err(Error::CapExceeded { n: 5, cap: 4 })
        );
    }

    #[test]
    fn delete_index_cases() {
        assert_eq!(
            Matrix::identity(3).delete_index(3).unwrap(),
            Matrix::identity(2)
        );
        let m = Matrix::from_i64(&[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(
            m.delete_index(2).unwrap(),
            Matrix::from_i64(&[&[1]]).unwrap()
        );
        assert!(matches!(
            Matrix::identity(1).delete_index(1),
            Err(Error::DimensionTooSmall { .. })
        ));
        let upper = worked_example().delete_index(5).unwrap();
        assert_eq!(
            upper,
            Matrix::from_i64(&[
                &[2, -2, 1, 0],
                &[1, 0, 0, 0],
                &[1, -1, 1, 0],
                &[0, -1, 0, 1]
            ])
            .unwrap()
        );
    }

    #[test]
    fn schur_complement_cases() {
        let m = Matrix::from_i64(&[&[1, 2], &[3, 4]]).unwrap();
        // a - bc/d = 1 - 6/4
        assert_eq!(*m.schur_complement().unwrap().get(0, 0), ratio(-1, 2));
        assert_eq!(
            Matrix::identity(4).schur_complement().unwrap(),
            Matrix::identity(3)
        );
        let singular = Matrix::from_i64(&[&[1, 2], &[3, 0]]).unwrap();
        assert_eq!(singular.schur_complement(), Err(Error::SingularPivot));
    }

    #[test]
    fn char_poly_small_cases() {
        let cp = Matrix::identity(2).char_poly();
        assert_eq!(cp.coeffs, vec![rat(1), rat(-2), rat(1)]);
        // (1-λ)(2-λ)(3-λ) = 6 - 11λ + 6λ² - λ³
        let cp = Matrix::diagonal(&[rat(1), rat(2), rat(3)]).char_poly();
        assert_eq!(cp.coeffs, vec![rat(6), rat(-11), rat(6), rat(-1)]);
    }

    #[test]
    fn stability_cases() {
        assert!(Matrix::identity(3).is_positive_stable());
        assert!(!Matrix::from_i64(&[&[0, 1], &[-1, 0]])
            .unwrap()
            .is_positive_stable());
        assert!(!Matrix::identity(2).neg().is_positive_stable());
        assert!(worked_example().is_positive_stable());
        // stable but not D-stable
        assert!(Matrix::from_i64(&[&[-1, -4], &[4, 3]])
            .unwrap()
            .is_positive_stable());
    }

    #[test]
    fn routh_hurwitz_boundaries() {
        // λ² + 1: imaginary roots
        assert!(!routh_hurwitz(&[rat(1), rat(0), rat(1)]));
        // λ + 1
        assert!(routh_hurwitz(&[rat(1), rat(1)]));
        // λ³ + λ² + λ + 1 = (λ+1)(λ²+1)
        assert!(!routh_hurwitz(&[rat(1), rat(1), rat(1), rat(1)]));
        // (λ+1)(λ+2)(λ+3)
        assert!(routh_hurwitz(&[rat(1), rat(6), rat(11), rat(6)]));
    }

    #[test]
    fn p_classes() {
        assert_eq!(Matrix::identity(3).classify_p(12).unwrap(), PClass::P);
        let zero = Matrix::from_i64(&[&[0, 0], &[0, 0]]).unwrap();
        assert_eq!(zero.classify_p(12).unwrap(), PClass::P0);
        let bad = Matrix::from_i64(&[&[-1, -4], &[4, 3]]).unwrap();
        assert_eq!(bad.classify_p(12).unwrap(), PClass::None);
        // P0 with positive order sums: [[1,0],[0,0]] has minors 1,0,0 and sum of order 2 is 0
        let p0 = Matrix::from_i64(&[&[1, 1], &[0, 0]]).unwrap();
        assert_eq!(p0.classify_p(12).unwrap(), PClass::P0);
        let p0plus = Matrix::from_i64(&[&[1, 1], &[-1, 0]]).unwrap();
        assert_eq!(p0plus.classify_p(12).unwrap(), PClass::P0Plus);
    }

    #[test]
    fn necessary_filter_cases() {
        let t = |m: &Matrix| necessary_filter(&m.all_principal_minors(12).unwrap());
        assert!(t(&worked_example()));
        assert!(t(&Matrix::identity(4)));
        assert!(!t(&Matrix::from_i64(&[&[-1, -4], &[4, 3]]).unwrap()));
    }

    #[test]
    fn permutation_similarity() {
        let m = Matrix::from_i64(&[&[1, 2], &[3, 4]]).unwrap();
        let p = m.permuted(&[1, 0]);
        assert_eq!(p, Matrix::from_i64(&[&[4, 3], &[2, 1]]).unwrap());
    }
}
