// Copyright 2026 The paritysynth Developers
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except
// in compliance with the License. You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under
// the License.

//! Phase polynomials and their parity-matrix form.

use std::collections::HashMap;

use crate::angle::Angle;
use crate::bits::BitVec;
use crate::error::{Error, Result};

/// One term of a phase polynomial: the rotation `angle` is applied to every
/// basis state whose parity over the set bits of `parity` is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ParityTerm {
    pub parity: BitVec,
    pub angle: Angle,
}

impl ParityTerm {
    pub fn new(parity: BitVec, angle: impl Into<Angle>) -> Self {
        Self {
            parity,
            angle: angle.into(),
        }
    }

    pub fn hamming_weight(&self) -> usize {
        self.parity.count_ones()
    }
}

/// Number of qubits participating in `term`.
pub fn hamming_weight(term: &ParityTerm) -> usize {
    term.hamming_weight()
}

/// A set of distinct, nonzero parity terms over `n` qubits.
///
/// Terms keep the order in which their parity first appeared; comparison
/// ignores that order.
#[derive(Debug, Clone)]
pub struct PhasePolynomial {
    n: usize,
    terms: Vec<ParityTerm>,
}

impl PhasePolynomial {
    pub fn empty(n: usize) -> Self {
        Self { n, terms: Vec::new() }
    }

    /// Builds a polynomial, folding repeated parities by adding their angles
    /// and dropping all-zero parities and terms whose angle vanishes.
    pub fn new<A: Into<Angle>>(
        n: usize,
        raw_terms: impl IntoIterator<Item = (BitVec, A)>,
    ) -> Result<Self> {
        let mut index: HashMap<BitVec, usize> = HashMap::new();
        let mut merged: Vec<ParityTerm> = Vec::new();
        for (parity, angle) in raw_terms {
            if parity.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: parity.len(),
                });
            }
            if parity.is_zero() {
                continue;
            }
            let angle = angle.into();
            match index.get(&parity) {
                Some(&k) => merged[k].angle = merged[k].angle + angle,
                None => {
                    index.insert(parity.clone(), merged.len());
                    merged.push(ParityTerm { parity, angle });
                }
            }
        }
        merged.retain(|t| !t.angle.is_zero());
        Ok(Self { n, terms: merged })
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = ParityTerm>) -> Result<Self> {
        Self::new(n, terms.into_iter().map(|t| (t.parity, t.angle)))
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    /// Number of terms, `g`.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[ParityTerm] {
        &self.terms
    }

    pub fn angles(&self) -> Vec<Angle> {
        self.terms.iter().map(|t| t.angle).collect()
    }

    pub fn parity_matrix(&self) -> ParityMatrix {
        ParityMatrix::from_columns(self.n, self.terms.iter().map(|t| t.parity.clone()))
            .expect("polynomial terms are distinct and nonzero")
    }

    /// Terms sorted by parity; the canonical form used for comparison.
    pub fn sorted_terms(&self) -> Vec<ParityTerm> {
        let mut t = self.terms.clone();
        t.sort_by(|a, b| a.parity.cmp(&b.parity));
        t
    }
}

impl PartialEq for PhasePolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms.len() == other.terms.len() && {
            self.sorted_terms() == other.sorted_terms()
        }
    }
}

/// The `n x g` GF(2) matrix whose columns are term parities.
///
/// Rows are qubits and are stored packed, so the row addition performed by a
/// CNOT is a word-wise XOR.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityMatrix {
    rows: Vec<BitVec>,
    cols: usize,
}

impl ParityMatrix {
    /// Builds a matrix from its columns, rejecting zero and duplicate columns.
    pub fn from_columns(n: usize, columns: impl IntoIterator<Item = BitVec>) -> Result<Self> {
        let columns: Vec<BitVec> = columns.into_iter().collect();
        let mut seen = std::collections::HashSet::new();
        for c in &columns {
            if c.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: c.len(),
                });
            }
            if c.is_zero() {
                return Err(Error::InvalidMatrix("all-zero column".into()));
            }
            if !seen.insert(c.clone()) {
                return Err(Error::InvalidMatrix(format!("duplicate column {c}")));
            }
        }
        Ok(Self::from_columns_unchecked(n, &columns))
    }

    pub(crate) fn from_columns_unchecked(n: usize, columns: &[BitVec]) -> Self {
        let g = columns.len();
        let mut rows = vec![BitVec::zeros(g); n];
        for (j, c) in columns.iter().enumerate() {
            for i in c.iter_ones() {
                rows[i].set(j, true);
            }
        }
        Self { rows, cols: g }
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn column(&self, j: usize) -> BitVec {
        BitVec::from_indices(
            self.rows.len(),
            (0..self.rows.len()).filter(|&i| self.rows[i].get(j)),
        )
    }

    pub fn columns(&self) -> Vec<BitVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// Number of set bits in column `j`.
    pub fn column_weight(&self, j: usize) -> usize {
        self.rows.iter().filter(|r| r.get(j)).count()
    }

    /// In-place CNOT: the target row is added to the control row.
    pub fn cnot(&mut self, control: usize, target: usize) -> Result<()> {
        let n = self.rows.len();
        for q in [control, target] {
            if q >= n {
                return Err(Error::QubitOutOfRange { qubit: q, n });
            }
        }
        if control == target {
            return Err(Error::EqualOperands(control));
        }
        let t = self.rows[target].clone();
        self.rows[control] ^= &t;
        Ok(())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        self.rows.swap(a, b);
    }

    /// Keeps only the columns set in `keep`, preserving their order.
    pub fn retain_columns(&self, keep: &BitVec) -> ParityMatrix {
        let cols: Vec<BitVec> = keep.iter_ones().map(|j| self.column(j)).collect();
        Self::from_columns_unchecked(self.rows.len(), &cols)
    }

    /// Pairs the columns with `angles` again. Columns must still be distinct.
    pub fn to_polynomial(&self, angles: &[Angle]) -> Result<PhasePolynomial> {
        if angles.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                got: angles.len(),
            });
        }
        PhasePolynomial::new(
            self.rows.len(),
            self.columns().into_iter().zip(angles.iter().copied()),
        )
    }
}

/// Returns a copy of `matrix` with CNOT(`control`, `target`) applied.
pub fn apply_cnot(matrix: &ParityMatrix, control: usize, target: usize) -> Result<ParityMatrix> {
    let mut m = matrix.clone();
    m.cnot(control, target)?;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn bv(s: &str) -> BitVec {
        BitVec::parse(s).unwrap()
    }

    #[test]
    fn duplicates_merge_by_angle_sum() {
        let p = PhasePolynomial::new(2, [(bv("11"), PI / 4.0), (bv("11"), PI / 4.0)]).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.terms()[0].parity, bv("11"));
        assert_eq!(p.terms()[0].angle, Angle::new(PI / 2.0));
    }

    #[test]
    fn empty_and_cancelling_inputs() {
        let p = PhasePolynomial::new::<f64>(3, []).unwrap();
        assert!(p.is_empty());
        let q = PhasePolynomial::new(2, [(bv("10"), PI), (bv("10"), -PI)]).unwrap();
        assert!(q.is_empty());
        let z = PhasePolynomial::new(2, [(bv("00"), 1.0)]).unwrap();
        assert!(z.is_empty());
    }

    #[test]
    fn wrong_length_is_rejected() {
        let e = PhasePolynomial::new(3, [(bv("11"), 1.0)]).unwrap_err();
        assert_eq!(e, Error::Dimension { expected: 3, got: 2 });
    }

    #[test]
    fn equality_ignores_order() {
        let a = PhasePolynomial::new(2, [(bv("10"), 1.0), (bv("01"), 2.0)]).unwrap();
        let b = PhasePolynomial::new(2, [(bv("01"), 2.0), (bv("10"), 1.0)]).unwrap();
        assert_eq!(a, b);
        let c = PhasePolynomial::new(2, [(bv("01"), 2.0), (bv("10"), 1.1)]).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn cnot_adds_target_row_to_control_row() {
        // rows r0 = 101, r1 = 011 over three columns
        let cols = [bv("10"), bv("01"), bv("11")];
        let m = ParityMatrix::from_columns(2, cols).unwrap();
        assert_eq!(m.row(0).to_string(), "101");
        assert_eq!(m.row(1).to_string(), "011");
        let m2 = apply_cnot(&m, 0, 1).unwrap();
        assert_eq!(m2.row(0).to_string(), "110");
        assert_eq!(m2.row(1).to_string(), "011");
        assert_eq!(apply_cnot(&m2, 0, 1).unwrap(), m);
    }

    #[test]
    fn cnot_disconnects_control_from_term() {
        let m = ParityMatrix::from_columns(3, [bv("111")]).unwrap();
        let m = apply_cnot(&m, 0, 1).unwrap();
        assert_eq!(m.column(0), bv("011"));
    }

    #[test]
    fn cnot_operand_errors() {
        let m = ParityMatrix::from_columns(2, [bv("11")]).unwrap();
        assert_eq!(apply_cnot(&m, 1, 1).unwrap_err(), Error::EqualOperands(1));
        assert!(matches!(
            apply_cnot(&m, 0, 2).unwrap_err(),
            Error::QubitOutOfRange { .. }
        ));
    }

    #[test]
    fn hamming_weights() {
        for (s, h) in [("111", 3), ("010", 1), ("1011", 3)] {
            assert_eq!(hamming_weight(&ParityTerm::new(bv(s), 1.0)), h);
        }
    }

    #[test]
    fn matrix_round_trip() {
        let p = PhasePolynomial::new(3, [(bv("110"), 1.0), (bv("011"), 2.0), (bv("111"), 3.0)])
            .unwrap();
        let m = p.parity_matrix();
        assert_eq!(m.num_rows(), 3);
        assert_eq!(m.num_cols(), 3);
        assert_eq!(m.to_polynomial(&p.angles()).unwrap(), p);
    }

    #[test]
    fn matrix_rejects_bad_columns() {
        assert!(ParityMatrix::from_columns(2, [bv("00")]).is_err());
        assert!(ParityMatrix::from_columns(2, [bv("01"), bv("01")]).is_err());
    }
}
