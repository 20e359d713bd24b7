use crate::error::Result;

use super::charpoly::char_poly;
use super::matrix::Matrix;
use super::poly::Poly;

/// Diagonal of the Smith normal form of a square polynomial matrix over
/// `F[x]`, each entry monic (zero entries kept as zero), in divisibility order.
pub fn smith_diagonal(mut m: Vec<Vec<Poly>>) -> Vec<Poly> {
    let n = m.len();
    for t in 0..n {
        loop {
            // pivot: nonzero entry of least degree in the trailing block
            let pivot = (t..n)
                .flat_map(|i| (t..n).map(move |j| (i, j)))
                .filter(|&(i, j)| !m[i][j].is_zero())
                .min_by_key(|&(i, j)| m[i][j].degree());
            let Some((pi, pj)) = pivot else {
                // the rest is zero
                return finish(m, n);
            };
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            let p = m[t][t].clone();
            for i in t + 1..n {
                if m[i][t].is_zero() {
                    continue;
                }
                let (q, r) = m[i][t].div_rem(&p);
                for j in t..n {
                    let sub = q.mul(&m[t][j]);
                    m[i][j] = m[i][j].sub(&sub);
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if m[t][j].is_zero() {
                    continue;
                }
                let (q, r) = m[t][j].div_rem(&p);
                for row in m.iter_mut().skip(t) {
                    let sub = q.mul(&row[t]);
                    row[j] = row[j].sub(&sub);
                }
                if !r.is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // the pivot must divide every remaining entry
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].div_rem(&p).1.is_zero());
            match bad {
                Some((i, _)) => {
                    for j in t..n {
                        let v = m[i][j].clone();
                        m[t][j] = m[t][j].add(&v);
                    }
                }
                None => break,
            }
        }
    }
    finish(m, n)
}

fn finish(m: Vec<Vec<Poly>>, n: usize) -> Vec<Poly> {
    let mut diag: Vec<Poly> = (0..n).map(|i| m[i][i].monic()).collect();
    // zero entries go last; nonzero ones by degree
    diag.sort_by_key(|p| p.degree().map_or(usize::MAX, |d| d));
    diag
}

/// The nonunit invariant factors of `xI - T`, monic, each dividing the next.
pub fn invariant_factors(t: &Matrix) -> Result<Vec<Poly>> {
    let n = t.require_square()?;
    let f = t.field();
    let x = Poly::from_i64(f, &[0, 1]);
    let m: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Poly::constant(-&t[(i, j)]);
                    if i == j {
                        c.add(&x)
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect();
    let factors: Vec<Poly> = smith_diagonal(m)
        .into_iter()
        .filter(|p| p.degree().is_some_and(|d| d > 0))
        .collect();
    if cfg!(debug_assertions) {
        let product = factors
            .iter()
            .fold(Poly::constant(f.one()), |acc, p| acc.mul(p));
        assert_eq!(product, char_poly(t)?, "invariant factors vs char poly");
        for w in factors.windows(2) {
            assert!(w[1].div_rem(&w[0]).1.is_zero(), "divisibility chain");
        }
    }
    Ok(factors)
}
