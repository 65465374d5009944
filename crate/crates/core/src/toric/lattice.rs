//! The kernel lattice `L = {v in Z^4 : v . n = 0}`.

use crate::error::{Error, Result};

/// A basis of `L` (three vectors), LLL-reduced.
///
/// Column operations reduce `n` to `(1, 0, 0, 0)` while tracking a unimodular
/// matrix `U` with `n U = e1`; the last three columns of `U` span `L`.
pub fn kernel_basis(gens: &[u64; 4]) -> Result<[[i64; 4]; 3]> {
    let mut row: [i128; 4] = gens.map(|n| n as i128);
    // columns of U
    let mut u: [[i128; 4]; 4] = std::array::from_fn(|c| std::array::from_fn(|r| (r == c) as i128));
    loop {
        let nonzero: Vec<usize> = (0..4).filter(|&c| row[c] != 0).collect();
        if nonzero.len() <= 1 {
            break;
        }
        let p = *nonzero.iter().min_by_key(|&&c| row[c].abs()).unwrap();
        for &c in &nonzero {
            if c == p {
                continue;
            }
            let q = row[c].div_euclid(row[p]);
            row[c] -= q * row[p];
            for r in 0..4 {
                u[c][r] -= q * u[p][r];
            }
        }
    }
    let p = (0..4).find(|&c| row[c] != 0).ok_or(Error::Invariant("zero generator vector".into()))?;
    if row[p].abs() != 1 {
        return Err(Error::InvalidInput("generators are not coprime".into()));
    }
    let mut basis: Vec<[i128; 4]> = (0..4).filter(|&c| c != p).map(|c| u[c]).collect();
    lll_reduce(&mut basis)?;
    let mut out = [[0i64; 4]; 3];
    for (k, v) in basis.iter().enumerate() {
        for r in 0..4 {
            out[k][r] = i64::try_from(v[r]).map_err(|_| Error::Overflow("reducing the kernel basis"))?;
        }
    }
    Ok(out)
}

fn dot(a: &[f64; 4], b: &[f64; 4]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Textbook LLL with `delta = 3/4`. Gram-Schmidt data is floating point,
/// but every update of the basis is an integral unimodular operation, so the
/// output spans the same lattice whatever rounding occurs.
fn lll_reduce(b: &mut [[i128; 4]]) -> Result<()> {
    let n = b.len();
    let to_f = |v: &[i128; 4]| v.map(|x| x as f64);
    let gso = |b: &[[i128; 4]]| {
        let mut bs: Vec<[f64; 4]> = Vec::with_capacity(n);
        let mut mu = vec![vec![0f64; n]; n];
        for i in 0..n {
            let mut v = to_f(&b[i]);
            for j in 0..i {
                let d = dot(&bs[j], &bs[j]);
                mu[i][j] = if d == 0.0 { 0.0 } else { dot(&to_f(&b[i]), &bs[j]) / d };
                for r in 0..4 {
                    v[r] -= mu[i][j] * bs[j][r];
                }
            }
            bs.push(v);
        }
        (bs, mu)
    };
    let mut k = 1;
    let mut iterations = 0u32;
    while k < n {
        iterations += 1;
        if iterations > 100_000 {
            return Err(Error::Budget("lattice reduction did not converge".into()));
        }
        for j in (0..k).rev() {
            let (_, mu) = gso(b);
            let q = mu[k][j].round();
            if q != 0.0 {
                let q = q as i128;
                for r in 0..4 {
                    b[k][r] -= q * b[j][r];
                }
            }
        }
        let (bs, mu) = gso(b);
        let lhs = dot(&bs[k], &bs[k]);
        let rhs = (0.75 - mu[k][k - 1] * mu[k][k - 1]) * dot(&bs[k - 1], &bs[k - 1]);
        if lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    Ok(())
}

/// Checks that `basis` spans `L`: every vector is orthogonal to `n` and the
/// 3x3 minors of the basis matrix are `+-n_i` (with `gcd = 1` this means
/// the index of the span in `L` is one).
pub fn is_kernel_basis(gens: &[u64; 4], basis: &[[i64; 4]; 3]) -> bool {
    if basis.iter().any(|v| (0..4).map(|i| v[i] as i128 * gens[i] as i128).sum::<i128>() != 0) {
        return false;
    }
    let det3 = |cols: [usize; 3]| -> i128 {
        let m = |r: usize, c: usize| basis[r][cols[c]] as i128;
        m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
            + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
    };
    (0..4).all(|skip| {
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
        det3([cols[0], cols[1], cols[2]]).abs() == gens[skip] as i128
    })
}
