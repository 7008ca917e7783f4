use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::One;

use super::{multiply, BasisTag, PolyElement};
use crate::error::{Error, Result};
use crate::stack::StackPartition;

/// `(−1)^d det(F_{(1−i+j)^m})_{1≤i,j≤d}` in the basis `tag`, where `F_0 = 1`
/// and `F_k = 0` for `k < 0`. Expanded along the first column, recursively.
pub fn toeplitz_determinant(tag: BasisTag, d: u32, m: u32) -> Result<PolyElement> {
    if !matches!(
        tag,
        BasisTag::H | BasisTag::E | BasisTag::HPlus | BasisTag::EPlus
    ) {
        return Err(Error::InvalidArgument(format!(
            "Toeplitz determinants are defined for H, E, H+ and E+, not {tag}"
        )));
    }
    if m == 0 {
        return Err(Error::InvalidArgument(
            "multiplicity must be positive".into(),
        ));
    }
    if d > 30 {
        return Err(Error::InvalidArgument(format!(
            "determinant size {d} is too large"
        )));
    }
    let n = d as usize;
    let entry = |i: usize, j: usize| -> Option<PolyElement> {
        let k = 1 + j as i64 - i as i64;
        match k {
            k if k < 0 => None,
            0 => Some(PolyElement::one(tag)),
            k => Some(PolyElement::singleton(
                tag,
                StackPartition::single(k as u32, m).expect("positive"),
            )),
        }
    };
    let mut memo: HashMap<u32, PolyElement> = HashMap::new();
    let full: u32 = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let det = minor(tag, n, full, &entry, &mut memo);
    Ok(if d % 2 == 1 { det.neg() } else { det })
}

/// Determinant of the submatrix with the rows in `rows` and the last
/// `popcount(rows)` columns.
fn minor(
    tag: BasisTag,
    n: usize,
    rows: u32,
    entry: &dyn Fn(usize, usize) -> Option<PolyElement>,
    memo: &mut HashMap<u32, PolyElement>,
) -> PolyElement {
    if rows == 0 {
        return PolyElement::one(tag);
    }
    if let Some(hit) = memo.get(&rows) {
        return hit.clone();
    }
    let col = n - rows.count_ones() as usize;
    let mut out = PolyElement::zero(tag);
    let mut position = 0;
    for i in 0..n {
        if rows & (1 << i) == 0 {
            continue;
        }
        if let Some(a) = entry(i + 1, col + 1) {
            let rest = minor(tag, n, rows & !(1 << i), entry, memo);
            if !rest.is_zero() {
                let sign = if position % 2 == 0 {
                    BigRational::one()
                } else {
                    -BigRational::one()
                };
                out.add_scaled(&multiply(&a, &rest), &sign)
                    .expect("same basis");
            }
        }
        position += 1;
    }
    memo.insert(rows, out.clone());
    out
}
