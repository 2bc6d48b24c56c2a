//! Sparse real combinations of basis blades.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::blade::{reversion_sign, sign_parity, BladeIndex, SignedBlade};
use crate::error::{Error, Result};

/// Absolute tolerance used by [`Multivector::approx_eq`] when none is given.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A sparse multivector. Coefficients that become exactly zero are removed;
/// terms iterate in lexicographic order of their blade literals.
#[derive(Clone, PartialEq)]
pub struct Multivector {
    dim: usize,
    terms: BTreeMap<BladeIndex, f64>,
}

impl Multivector {
    pub fn zero(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Self {
            dim,
            terms: BTreeMap::new(),
        })
    }

    /// `coeff * e_0`.
    pub fn scalar(dim: usize, coeff: f64) -> Result<Self> {
        Ok(Self::from_blade(
            &SignedBlade::positive(BladeIndex::zero(dim)?),
            coeff,
        ))
    }

    /// Single-term multivector `sign * coeff * e_index`.
    pub fn from_blade(blade: &SignedBlade, coeff: f64) -> Self {
        let mut out = Self {
            dim: blade.index().dim(),
            terms: BTreeMap::new(),
        };
        out.accumulate(blade.index().clone(), f64::from(blade.sign()) * coeff);
        out
    }

    /// Sums `(coeff, blade)` pairs; repeated blades accumulate.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (f64, BladeIndex)>,
    {
        let mut out = Self::zero(dim)?;
        for (c, b) in terms {
            if b.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: b.dim(),
                });
            }
            out.accumulate(b, c);
        }
        Ok(out)
    }

    /// Adds `coeff` to the coefficient of `blade`, dropping it on exact zero.
    fn accumulate(&mut self, blade: BladeIndex, coeff: f64) {
        if coeff == 0.0 {
            return;
        }
        match self.terms.entry(blade) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = *o.get() + coeff;
                if sum == 0.0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim == other.dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            })
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `blade`, zero when absent.
    pub fn coeff(&self, blade: &BladeIndex) -> f64 {
        self.terms.get(blade).copied().unwrap_or(0.0)
    }

    /// `(blade, coefficient)` in lexicographic blade order.
    pub fn terms(&self) -> impl Iterator<Item = (&BladeIndex, f64)> + '_ {
        self.terms.iter().map(|(b, &c)| (b, c))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (b, &c) in &other.terms {
            out.accumulate(b.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1.0))
    }

    pub fn scale(&self, factor: f64) -> Self {
        let mut out = Self {
            dim: self.dim,
            terms: BTreeMap::new(),
        };
        for (b, &c) in &self.terms {
            out.accumulate(b.clone(), c * factor);
        }
        out
    }

    /// Geometric product, distributed over all term pairs.
    pub fn gp(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let mut out = Self {
            dim: self.dim,
            terms: BTreeMap::new(),
        };
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let sign = if sign_parity(a.words(), b.words()) == 0 {
                    1.0
                } else {
                    -1.0
                };
                out.accumulate(a.xor_unchecked(b), sign * ca * cb);
            }
        }
        Ok(out)
    }

    /// Reverse: each grade-`k` term times `(-1)^(k(k-1)/2)`.
    pub fn reversion(&self) -> Self {
        Self {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(b, &c)| (b.clone(), f64::from(reversion_sign(b.grade())) * c))
                .collect(),
        }
    }

    /// Coefficient of the scalar blade.
    pub fn scalar_part(&self) -> f64 {
        self.terms
            .iter()
            .next()
            .filter(|(b, _)| b.is_scalar())
            .map_or(0.0, |(_, &c)| c)
    }

    /// Trace of the product in the `2^factors`-dimensional Pauli
    /// representation, evaluated algebraically: only the scalar blade has a
    /// nonzero trace there, so this is `2^factors * <x y>_0`.
    pub fn trace_product(&self, other: &Self, factors: usize) -> Result<f64> {
        self.check_dim(other)?;
        if factors == 0 || self.dim > 2 * factors {
            return Err(Error::RepresentationTooSmall {
                dim: self.dim,
                factors,
                needed: self.dim.div_ceil(2).max(1),
            });
        }
        let scale = 2f64.powi(i32::try_from(factors).unwrap_or(i32::MAX));
        Ok(scale * self.gp(other)?.scalar_part())
    }

    /// `<reverse(x) y>_0`: a symmetric positive-definite inner product in
    /// which distinct basis blades are orthonormal.
    pub fn similarity(&self, other: &Self) -> Result<f64> {
        self.check_dim(other)?;
        // Only matching blades reach the scalar part, and rev(e_A) e_A = 1.
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        Ok(small
            .terms
            .iter()
            .filter_map(|(b, &c)| large.terms.get(b).map(|&d| c * d))
            .sum())
    }

    /// Keeps terms whose bits beyond position `k` are all zero.
    pub fn project_to_support(&self, k: usize) -> Result<Self> {
        if k > self.dim {
            return Err(Error::InvalidSupport { n: self.dim, k });
        }
        Ok(Self {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.within_support(k))
                .map(|(b, &c)| (b.clone(), c))
                .collect(),
        })
    }

    /// Blade-by-blade comparison within an absolute tolerance; blades absent
    /// on one side count as zero.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let close = |a: f64, b: f64| (a - b).abs() <= tol;
        self.terms.iter().all(|(b, &c)| close(c, other.coeff(b)))
            && other.terms.iter().all(|(b, &c)| close(c, self.coeff(b)))
    }
}

impl fmt::Debug for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(b, c)| (b.to_literal(), c)))
            .finish()
    }
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(if *c < 0.0 { " - " } else { " + " })?;
            } else if *c < 0.0 {
                f.write_str("-")?;
            }
            write!(f, "{}e{}", c.abs(), b)?;
        }
        Ok(())
    }
}
