use super::Poly;

/// Determinant of a square matrix of polynomials by fraction-free Bareiss
/// elimination. Every intermediate division is exact.
pub fn bareiss_det(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n), "matrix must be square");
    let mut negate = false;
    let mut prev = Poly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t
                    .exact_div(&prev)
                    .expect("Bareiss step divides exactly");
            }
            m[i][k] = Poly::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Wronskian determinant: row `r` holds the `r`-th derivatives of the entries,
/// columns follow the given order. The empty family has Wronskian 1.
pub fn wronskian(fs: &[Poly]) -> Poly {
    bareiss_det(derivative_rows(fs, |p| p.derivative()))
}

/// Rows `[f, D f, D^2 f, ...]` for an arbitrary derivation-like map `D`.
pub(crate) fn derivative_rows(fs: &[Poly], d: impl Fn(&Poly) -> Poly) -> Vec<Vec<Poly>> {
    let k = fs.len();
    let mut rows = Vec::with_capacity(k);
    let mut current: Vec<Poly> = fs.to_vec();
    for r in 0..k {
        if r + 1 < k {
            let next = current.iter().map(&d).collect();
            rows.push(std::mem::replace(&mut current, next));
        } else {
            rows.push(std::mem::take(&mut current));
        }
    }
    rows
}

#[cfg(test)]
pub(crate) fn cofactor_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Poly::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][c] * &cofactor_det(&minor);
        acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
