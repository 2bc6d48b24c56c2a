//! Dense complex-matrix representation of the algebra built from Kronecker
//! products of Pauli matrices.
//!
//! With `m` tensor factors the generators are
//!
//! ```text
//! e_{2k-1} = s1 x ... x s1 x s3 x 1 x ... x 1
//! e_{2k}   = s1 x ... x s1 x s2 x 1 x ... x 1
//! ```
//!
//! with `m - k` leading `s1` factors and `k - 1` trailing identities, giving
//! `2m` anticommuting generators that square to the identity. This module
//! exists to cross-check the bit-level kernel, so matrices are capped at
//! order `2^MAX_FACTORS`.

use std::ops::{Add, Mul};

use num_complex::Complex64;
use serde::Serialize;

use crate::blade::BladeIndex;
use crate::error::{Error, Result};
use crate::multivector::Multivector;

/// Largest supported factor count.
pub const MAX_FACTORS: usize = 12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Square complex matrix of power-of-two order, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    order: usize,
    entries: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn zeros(order: usize) -> Result<Self> {
        if !order.is_power_of_two() {
            return Err(Error::InvalidOrder(order));
        }
        Ok(Self {
            order,
            entries: vec![ZERO; order * order],
        })
    }

    pub fn identity(order: usize) -> Result<Self> {
        let mut out = Self::zeros(order)?;
        for i in 0..order {
            out.entries[i * order + i] = ONE;
        }
        Ok(out)
    }

    /// Builds a matrix from row-major entries.
    pub fn from_rows(order: usize, entries: Vec<Complex64>) -> Result<Self> {
        if !order.is_power_of_two() {
            return Err(Error::InvalidOrder(order));
        }
        if entries.len() != order * order {
            return Err(Error::Format(format!(
                "{} entries for a {order}x{order} matrix",
                entries.len()
            )));
        }
        Ok(Self { order, entries })
    }

    pub fn diagonal(entries: &[Complex64]) -> Result<Self> {
        let mut out = Self::zeros(entries.len())?;
        for (i, &v) in entries.iter().enumerate() {
            out.entries[i * out.order + i] = v;
        }
        Ok(out)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Entry at zero-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.order + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|&v| v * factor).collect(),
        }
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(Self {
            order: self.order,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut out = vec![ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == ZERO {
                    continue;
                }
                let row = &other.entries[k * n..(k + 1) * n];
                for (o, b) in out[i * n..(i + 1) * n].iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(Self {
            order: n,
            entries: out,
        })
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Largest entrywise modulus of the difference; infinite when the orders
    /// differ.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        if self.order != other.order {
            return f64::INFINITY;
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Row-major `[re, im]` pairs for JSON export.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Dump {
            order: usize,
            entries: Vec<[f64; 2]>,
        }
        serde_json::to_value(Dump {
            order: self.order,
            entries: self.entries.iter().map(|c| [c.re, c.im]).collect(),
        })
        .expect("matrix dump serializes")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: Self) -> ComplexMatrix {
        self.try_add(rhs).expect("matrix orders differ")
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: Self) -> ComplexMatrix {
        self.try_mul(rhs).expect("matrix orders differ")
    }
}

/// Pauli matrix `s1`, `s2` or `s3`.
pub fn pauli(which: u8) -> Result<ComplexMatrix> {
    let entries = match which {
        1 => vec![ZERO, ONE, ONE, ZERO],
        2 => vec![ZERO, -I, I, ZERO],
        3 => vec![ONE, ZERO, ZERO, -ONE],
        other => return Err(Error::InvalidPauli(other)),
    };
    ComplexMatrix::from_rows(2, entries)
}

/// Kronecker product: block `(i, j)` of the result is `a_ij * b`.
pub fn kron(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let (na, nb) = (a.order, b.order);
    let n = na * nb;
    let mut entries = vec![ZERO; n * n];
    for i in 0..na {
        for j in 0..na {
            let aij = a.get(i, j);
            if aij == ZERO {
                continue;
            }
            for r in 0..nb {
                for s in 0..nb {
                    entries[(i * nb + r) * n + (j * nb + s)] = aij * b.get(r, s);
                }
            }
        }
    }
    ComplexMatrix { order: n, entries }
}

/// Smallest factor count whose representation holds `dim` generators.
pub fn default_factor_count(dim: usize) -> usize {
    dim.div_ceil(2).max(1)
}

fn check_factors(factors: usize) -> Result<()> {
    if factors == 0 {
        return Err(Error::RepresentationTooSmall {
            dim: 0,
            factors,
            needed: 1,
        });
    }
    if factors > MAX_FACTORS {
        return Err(Error::RepresentationTooLarge {
            factors,
            max: MAX_FACTORS,
        });
    }
    Ok(())
}

fn check_fits(dim: usize, factors: usize) -> Result<()> {
    check_factors(factors)?;
    if dim > 2 * factors {
        return Err(Error::RepresentationTooSmall {
            dim,
            factors,
            needed: default_factor_count(dim),
        });
    }
    Ok(())
}

/// Matrix of generator `e_j`, `1 <= j <= 2 * factors`.
pub fn generator_matrix(j: usize, factors: usize) -> Result<ComplexMatrix> {
    check_factors(factors)?;
    if j == 0 || j > 2 * factors {
        return Err(Error::GeneratorOutOfRange {
            index: j,
            max: 2 * factors,
        });
    }
    let k = j.div_ceil(2);
    let middle = if j % 2 == 1 { pauli(3)? } else { pauli(2)? };
    let s1 = pauli(1)?;
    let id = ComplexMatrix::identity(2)?;
    let mut out = ComplexMatrix::identity(1)?;
    for _ in 0..factors - k {
        out = kron(&out, &s1);
    }
    out = kron(&out, &middle);
    for _ in 0..k - 1 {
        out = kron(&out, &id);
    }
    Ok(out)
}

/// All `2 * factors` generator matrices in index order.
pub fn cartan_generators(factors: usize) -> Result<Vec<ComplexMatrix>> {
    (1..=2 * factors)
        .map(|j| generator_matrix(j, factors))
        .collect()
}

/// `s1, s2`: the plane representation with `e_12 = i s3`.
pub fn plane_generators() -> Vec<ComplexMatrix> {
    vec![pauli(1).unwrap(), pauli(2).unwrap()]
}

/// `s1, s2, s3`: the 2x2 representation of 3-space, where `e_123 = i`.
pub fn space_generators() -> Vec<ComplexMatrix> {
    vec![pauli(1).unwrap(), pauli(2).unwrap(), pauli(3).unwrap()]
}

/// Ordered product of `generators[i - 1]` over the set positions `i` of the
/// blade, ascending; identity for the scalar blade.
pub fn blade_matrix_in(blade: &BladeIndex, generators: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    if generators.is_empty() {
        return Err(Error::RepresentationTooSmall {
            dim: blade.dim(),
            factors: 0,
            needed: default_factor_count(blade.dim()),
        });
    }
    if blade.dim() > generators.len() {
        return Err(Error::GeneratorOutOfRange {
            index: blade.dim(),
            max: generators.len(),
        });
    }
    let order = generators[0].order();
    let mut out = ComplexMatrix::identity(order)?;
    for p in blade.ones() {
        out = out.try_mul(&generators[p - 1])?;
    }
    Ok(out)
}

/// Cartan matrix of a basis blade with `factors` tensor factors.
pub fn blade_matrix(blade: &BladeIndex, factors: usize) -> Result<ComplexMatrix> {
    check_fits(blade.dim(), factors)?;
    blade_matrix_in(blade, &leading_generators(blade.dim(), factors)?)
}

fn leading_generators(dim: usize, factors: usize) -> Result<Vec<ComplexMatrix>> {
    (1..=dim).map(|j| generator_matrix(j, factors)).collect()
}

/// Coefficient-weighted sum of blade matrices in a given generator set.
pub fn rep_in(x: &Multivector, generators: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    let order =
        generators
            .first()
            .map(ComplexMatrix::order)
            .ok_or(Error::RepresentationTooSmall {
                dim: x.dim(),
                factors: 0,
                needed: default_factor_count(x.dim()),
            })?;
    if x.dim() > generators.len() {
        return Err(Error::GeneratorOutOfRange {
            index: x.dim(),
            max: generators.len(),
        });
    }
    let mut out = ComplexMatrix::zeros(order)?;
    for (b, c) in x.terms() {
        let m = blade_matrix_in(b, generators)?;
        out = out.try_add(&m.scale(Complex64::new(c, 0.0)))?;
    }
    Ok(out)
}

/// Cartan matrix of a multivector with `factors` tensor factors.
pub fn rep(x: &Multivector, factors: usize) -> Result<ComplexMatrix> {
    check_fits(x.dim(), factors)?;
    rep_in(x, &leading_generators(x.dim(), factors)?)
}

pub fn trace(a: &ComplexMatrix) -> Complex64 {
    a.trace()
}
