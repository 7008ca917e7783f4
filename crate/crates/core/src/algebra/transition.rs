//! Exact change-of-basis matrices, routed through the M basis.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::expand::expand_type_shared;
use super::{BasisTag, PolyElement};
use crate::error::{Error, Result};
use crate::stack::{stack_partitions, StackPartition};

/// `rows[i][j]` is the coefficient of `to_{α_j}` in `from_{τ_i}`, with rows
/// and columns indexed by the stack partitions of `degree` in global order.
/// A row vector of `from`-coefficients times the matrix gives the
/// `to`-coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    from: BasisTag,
    to: BasisTag,
    degree: u32,
    index: Arc<[StackPartition]>,
    rows: Vec<Vec<BigRational>>,
}

impl TransitionMatrix {
    /// Checks that `rows` is square of the right size for `degree`.
    pub fn from_rows(
        from: BasisTag,
        to: BasisTag,
        degree: u32,
        rows: Vec<Vec<BigRational>>,
    ) -> Result<Self> {
        let index = stack_partitions(degree);
        if rows.len() != index.len() || rows.iter().any(|r| r.len() != index.len()) {
            return Err(Error::InvalidArgument(format!(
                "{from}->{to} matrix in degree {degree} must be {0}x{0}",
                index.len()
            )));
        }
        Ok(TransitionMatrix {
            from,
            to,
            degree,
            index,
            rows,
        })
    }

    pub fn identity(basis: BasisTag, degree: u32) -> Self {
        let index = stack_partitions(degree);
        let n = index.len();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        TransitionMatrix {
            from: basis,
            to: basis,
            degree,
            index,
            rows,
        }
    }

    pub fn from(&self) -> BasisTag {
        self.from
    }

    pub fn to(&self) -> BasisTag {
        self.to
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    pub fn index(&self) -> &[StackPartition] {
        &self.index
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigRational {
        &self.rows[i][j]
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| {
            r.iter()
                .enumerate()
                .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
        })
    }

    /// `self · other`, read as `from → self.to = other.from → other.to`.
    pub fn compose(&self, other: &TransitionMatrix) -> Result<TransitionMatrix> {
        if self.to != other.from || self.degree != other.degree {
            return Err(Error::BasisMismatch {
                expected: self.to,
                found: other.from,
            });
        }
        let n = self.dim();
        let mut rows = vec![vec![BigRational::zero(); n]; n];
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.rows[k].iter().enumerate() {
                    if !b.is_zero() {
                        rows[i][j] += a * b;
                    }
                }
            }
        }
        Ok(TransitionMatrix {
            from: self.from,
            to: other.to,
            degree: self.degree,
            index: self.index.clone(),
            rows,
        })
    }

    /// Gauss-Jordan elimination over the rationals.
    pub fn inverse(&self) -> Result<TransitionMatrix> {
        let n = self.dim();
        let mut a = self.rows.clone();
        let mut inv = TransitionMatrix::identity(self.to, self.degree).rows;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[r][col].is_zero())
                .ok_or(Error::Singular {
                    from: self.from,
                    degree: self.degree,
                })?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let p = a[col][col].clone();
            if !p.is_one() {
                for x in a[col].iter_mut().chain(inv[col].iter_mut()) {
                    *x /= &p;
                }
            }
            for r in 0..n {
                if r == col || a[r][col].is_zero() {
                    continue;
                }
                let factor = a[r][col].clone();
                let (pivot_a, pivot_inv) = (a[col].clone(), inv[col].clone());
                for (x, y) in a[r].iter_mut().zip(&pivot_a) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
                for (x, y) in inv[r].iter_mut().zip(&pivot_inv) {
                    if !y.is_zero() {
                        *x -= &factor * y;
                    }
                }
            }
        }
        Ok(TransitionMatrix {
            from: self.to,
            to: self.from,
            degree: self.degree,
            index: self.index.clone(),
            rows: inv,
        })
    }

    /// Maps a homogeneous element of degree `self.degree` in `self.from`.
    pub fn apply(&self, x: &PolyElement) -> Result<PolyElement> {
        x.expect_basis(self.from)?;
        let mut out = PolyElement::zero(self.to);
        for (tau, c) in x.terms() {
            let i = self.position(tau)?;
            for (j, y) in self.rows[i].iter().enumerate() {
                if !y.is_zero() {
                    out.add_term(self.index[j].clone(), c * y);
                }
            }
        }
        Ok(out)
    }

    fn position(&self, tau: &StackPartition) -> Result<usize> {
        self.index.binary_search(tau).map_err(|_| {
            Error::InvalidArgument(format!("{tau} does not have weight {}", self.degree))
        })
    }
}

type MatrixCache = RwLock<HashMap<(BasisTag, BasisTag, u32), Arc<TransitionMatrix>>>;

fn cache() -> &'static MatrixCache {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Installs a precomputed matrix, for instance one loaded from disk.
pub fn seed_transition_matrix(matrix: TransitionMatrix) {
    let key = (matrix.from, matrix.to, matrix.degree);
    cache()
        .write()
        .unwrap()
        .entry(key)
        .or_insert_with(|| Arc::new(matrix));
}

/// The `from → to` matrix in degree `n`; memoized per `(from, to, n)`.
pub fn transition_matrix(from: BasisTag, to: BasisTag, n: u32) -> Result<Arc<TransitionMatrix>> {
    let key = (from, to, n);
    if let Some(hit) = cache().read().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let computed = if from == to {
        TransitionMatrix::identity(from, n)
    } else if to == BasisTag::M {
        let index = stack_partitions(n);
        let rows = index
            .iter()
            .map(|tau| {
                let expansion = expand_type_shared(from, tau);
                index.iter().map(|alpha| expansion.coeff(alpha)).collect()
            })
            .collect();
        TransitionMatrix::from_rows(from, BasisTag::M, n, rows)?
    } else if from == BasisTag::M {
        transition_matrix(to, BasisTag::M, n)?.inverse()?
    } else {
        transition_matrix(from, BasisTag::M, n)?.compose(&*transition_matrix(
            BasisTag::M,
            to,
            n,
        )?)?
    };
    let value = Arc::new(computed);
    Ok(cache().write().unwrap().entry(key).or_insert(value).clone())
}

/// Re-expresses `x` in the basis `to`, one homogeneous component at a time.
pub fn convert(x: &PolyElement, to: BasisTag) -> Result<PolyElement> {
    if x.basis() == to {
        return Ok(x.clone());
    }
    if to == BasisTag::M {
        return Ok(super::to_m(x));
    }
    let mut out = PolyElement::zero(to);
    for n in x.degrees() {
        let part = transition_matrix(x.basis(), to, n)?.apply(&x.homogeneous_component(n))?;
        out.add_scaled(&part, &BigRational::one())?;
    }
    Ok(out)
}
