//! Dense vectors and matrices over an [`Algebra`], with semiring matrix
//! arithmetic and the product order on `Vⁿ`.
//!
//! Indices are 0-based in this API. The wire format in [`crate::format`]
//! converts to the 1-based convention.

use std::fmt;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector {
    algebra: Algebra,
    entries: Vec<Element>,
}

impl Vector {
    pub fn new(algebra: Algebra, entries: Vec<Element>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::dims("length >= 1", 0));
        }
        for e in &entries {
            algebra.check(e)?;
        }
        Ok(Vector { algebra, entries })
    }

    pub fn filled(algebra: Algebra, len: usize, value: Element) -> Result<Self> {
        Vector::new(algebra, vec![value; len])
    }

    pub fn bottom(algebra: Algebra, len: usize) -> Result<Self> {
        Vector::filled(algebra, len, algebra.bottom())
    }

    pub fn top(algebra: Algebra, len: usize) -> Result<Self> {
        Vector::filled(algebra, len, algebra.top())
    }

    /// Parses a vector from element literals.
    pub fn parse<S: AsRef<str>>(algebra: Algebra, literals: &[S]) -> Result<Self> {
        let entries = literals
            .iter()
            .map(|s| algebra.parse_element(s.as_ref()))
            .collect::<Result<_>>()?;
        Vector::new(algebra, entries)
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn get(&self, k: usize) -> &Element {
        &self.entries[k]
    }

    /// Returns a copy with coordinate `k` replaced.
    pub fn with(&self, k: usize, value: Element) -> Result<Self> {
        self.algebra.check(&value)?;
        let mut out = self.clone();
        out.entries[k] = value;
        Ok(out)
    }

    pub fn literals(&self) -> Vec<String> {
        self.entries
            .iter()
            .map(|e| self.algebra.format_element(e))
            .collect()
    }

    fn conformable(&self, other: &Vector) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::mismatch(format!(
                "vectors over {} and {}",
                self.algebra, other.algebra
            )));
        }
        if self.len() != other.len() {
            return Err(Error::dims(self.len(), other.len()));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &Vector,
        op: impl Fn(Algebra, &Element, &Element) -> Result<Element>,
    ) -> Result<Vector> {
        self.conformable(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| op(self.algebra, a, b))
            .collect::<Result<_>>()?;
        Ok(Vector {
            algebra: self.algebra,
            entries,
        })
    }

    /// Product order: `self(k) ≤ other(k)` for every `k`.
    pub fn leq(&self, other: &Vector) -> Result<bool> {
        self.conformable(other)?;
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !self.algebra.leq(a, b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn join(&self, other: &Vector) -> Result<Vector> {
        self.zip_with(other, |alg, a, b| alg.join(a, b))
    }

    pub fn meet(&self, other: &Vector) -> Result<Vector> {
        self.zip_with(other, |alg, a, b| alg.meet(a, b))
    }

    /// Componentwise join of a non-empty family.
    pub fn join_all<'a>(family: impl IntoIterator<Item = &'a Vector>) -> Result<Option<Vector>> {
        let mut acc: Option<Vector> = None;
        for v in family {
            acc = Some(match acc {
                None => v.clone(),
                Some(a) => a.join(v)?,
            });
        }
        Ok(acc)
    }

    /// Componentwise meet of a non-empty family.
    pub fn meet_all<'a>(family: impl IntoIterator<Item = &'a Vector>) -> Result<Option<Vector>> {
        let mut acc: Option<Vector> = None;
        for v in family {
            acc = Some(match acc {
                None => v.clone(),
                Some(a) => a.meet(v)?,
            });
        }
        Ok(acc)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.literals().join(", "))
    }
}

/// Dense row-major `m × n` matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    algebra: Algebra,
    rows: usize,
    cols: usize,
    data: Vec<Element>,
}

impl Matrix {
    pub fn from_rows(algebra: Algebra, rows: Vec<Vec<Element>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::dims("at least one row", 0));
        }
        let n = rows[0].len();
        if n == 0 {
            return Err(Error::dims("at least one column", 0));
        }
        let mut data = Vec::with_capacity(m * n);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != n {
                return Err(Error::dims(
                    format!("{n} columns"),
                    format!("{} in row {}", row.len(), i + 1),
                ));
            }
            for e in &row {
                algebra.check(e)?;
            }
            data.extend(row);
        }
        Ok(Matrix {
            algebra,
            rows: m,
            cols: n,
            data,
        })
    }

    pub fn parse<S: AsRef<str>>(algebra: Algebra, rows: &[Vec<S>]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|s| algebra.parse_element(s.as_ref()))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(algebra, rows)
    }

    /// Identity matrix: `one` on the diagonal, bottom elsewhere.
    pub fn identity(algebra: Algebra, n: usize) -> Result<Self> {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { algebra.one() } else { algebra.bottom() })
                    .collect()
            })
            .collect();
        Matrix::from_rows(algebra, rows)
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Element {
        &self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn literal_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| self.algebra.format_element(e))
                    .collect()
            })
            .collect()
    }

    fn same_algebra(&self, other: Algebra) -> Result<()> {
        if self.algebra == other {
            Ok(())
        } else {
            Err(Error::mismatch(format!(
                "matrix over {} combined with {}",
                self.algebra, other
            )))
        }
    }

    /// `(A v)(i) = ⋁_k A(i,k) ⊗ v(k)`.
    pub fn mat_vec(&self, v: &Vector) -> Result<Vector> {
        self.same_algebra(v.algebra())?;
        if v.len() != self.cols {
            return Err(Error::dims(
                format!("vector of length {}", self.cols),
                v.len(),
            ));
        }
        let alg = self.algebra;
        let entries = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v.entries())
                    .try_fold(alg.bottom(), |acc, (a, x)| alg.join(&acc, &alg.otimes(a, x)?))
            })
            .collect::<Result<_>>()?;
        Ok(Vector {
            algebra: alg,
            entries,
        })
    }

    /// Entrywise join.
    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.same_algebra(other.algebra)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::dims(
                format!("{}x{}", self.rows, self.cols),
                format!("{}x{}", other.rows, other.cols),
            ));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.algebra.join(a, b))
            .collect::<Result<_>>()?;
        Ok(Matrix { data, ..*self })
    }

    /// Semiring matrix product.
    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.same_algebra(other.algebra)?;
        if self.cols != other.rows {
            return Err(Error::dims(
                format!("{} rows", self.cols),
                format!("{} rows", other.rows),
            ));
        }
        let alg = self.algebra;
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = alg.bottom();
                for k in 0..self.cols {
                    acc = alg.join(&acc, &alg.otimes(self.get(i, k), other.get(k, j))?)?;
                }
                data.push(acc);
            }
        }
        Ok(Matrix {
            algebra: alg,
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(rows: &[&[&str]]) -> Matrix {
        let rows: Vec<Vec<&str>> = rows.iter().map(|r| r.to_vec()).collect();
        Matrix::parse(Algebra::MaxPlus, &rows).unwrap()
    }

    fn mpv(lits: &[&str]) -> Vector {
        Vector::parse(Algebra::MaxPlus, lits).unwrap()
    }

    #[test]
    fn mat_vec_examples() {
        assert_eq!(mp(&[&["0"]]).mat_vec(&mpv(&["5"])).unwrap(), mpv(&["5"]));
        assert_eq!(mp(&[&["1", "2"]]).mat_vec(&mpv(&["0", "0"])).unwrap(), mpv(&["2"]));

        // max(min(3,2),min(1,3)) = 2 and max(min(2,2),min(2,3)) = 2
        let chain = Algebra::ChainMin(3);
        let a = Matrix::parse(chain, &[vec!["3", "1"], vec!["2", "2"]]).unwrap();
        let v = Vector::parse(chain, &["2", "3"]).unwrap();
        assert_eq!(a.mat_vec(&v).unwrap(), Vector::parse(chain, &["2", "2"]).unwrap());
    }

    #[test]
    fn mat_vec_errors() {
        let a = mp(&[&["0", "1"]]);
        assert!(matches!(
            a.mat_vec(&mpv(&["1"])),
            Err(Error::DimensionMismatch { .. })
        ));
        let b = Vector::parse(Algebra::MaxMin, &["1", "2"]).unwrap();
        assert!(matches!(a.mat_vec(&b), Err(Error::AlgebraMismatch { .. })));
    }

    #[test]
    fn ragged_and_empty_matrices_are_rejected() {
        let ragged = Matrix::parse(Algebra::MaxPlus, &[vec!["1", "2"], vec!["3"]]);
        assert!(matches!(ragged, Err(Error::DimensionMismatch { .. })));
        let empty: Vec<Vec<&str>> = vec![];
        assert!(Matrix::parse(Algebra::MaxPlus, &empty).is_err());
        assert!(Vector::parse::<&str>(Algebra::MaxPlus, &[]).is_err());
    }

    #[test]
    fn add_and_mul_examples() {
        let a = mp(&[&["1", "-inf"], &["inf", "1/2"]]);
        assert_eq!(a.add(&a).unwrap(), a);
        let b = mp(&[&["3", "-2", "inf"]]);
        assert_eq!(mp(&[&["0"]]).mul(&b).unwrap(), b);

        let bool_id = Matrix::identity(Algebra::Bool, 2).unwrap();
        let b = Matrix::parse(Algebra::Bool, &[vec!["0", "1"], vec!["1", "1"]]).unwrap();
        assert_eq!(bool_id.mul(&b).unwrap(), b);
        assert!(b.mul(&mp(&[&["1"]])).is_err());
    }

    #[test]
    fn product_order() {
        let u = mpv(&["1", "-inf"]);
        assert!(u.leq(&u).unwrap());
        assert_eq!(u.join(&mpv(&["-inf", "2"])).unwrap(), mpv(&["1", "2"]));
        assert!(!mpv(&["1", "5"]).leq(&mpv(&["2", "3"])).unwrap());
        assert!(!mpv(&["2", "3"]).leq(&mpv(&["1", "5"])).unwrap());
        assert_eq!(mpv(&["1", "5"]).meet(&mpv(&["2", "3"])).unwrap(), mpv(&["1", "3"]));
        assert!(mpv(&["1"]).leq(&mpv(&["1", "2"])).is_err());
    }

    #[test]
    fn bool_matrix_laws_exhaustive() {
        let alg = Algebra::Bool;
        let all: Vec<Matrix> = (0u32..16)
            .map(|bits| {
                let e = |k: u32| Element::Bool(bits & (1 << k) != 0);
                Matrix::from_rows(alg, vec![vec![e(0), e(1)], vec![e(2), e(3)]]).unwrap()
            })
            .collect();
        for a in &all {
            for b in &all {
                for c in &all {
                    assert_eq!(
                        a.mul(b).unwrap().mul(c).unwrap(),
                        a.mul(&b.mul(c).unwrap()).unwrap()
                    );
                    assert_eq!(
                        a.mul(&b.add(c).unwrap()).unwrap(),
                        a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap()
                    );
                }
            }
        }
    }
}
