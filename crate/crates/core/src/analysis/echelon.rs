//! Exact linear algebra over K.

use crate::scalar::{gcd::gcd, Coefficient, Poly};

/// A subspace of `K^n` held in reduced row echelon form.
///
/// Rows are sorted by pivot column with unit pivots, and each pivot column
/// vanishes outside its own row. The row set is therefore canonical for the
/// subspace, and membership reduces to a single pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<(usize, Vec<Coefficient>)>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Coefficient]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|(p, _)| *p)
    }

    /// The remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[Coefficient]) -> Vec<Coefficient> {
        assert_eq!(
            v.len(),
            self.ncols,
            "vector length does not match the ambient space"
        );
        let mut v = v.to_vec();
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = &*x - &(&f * r);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Coefficient]) -> bool {
        self.reduce(v).iter().all(Coefficient::is_zero)
    }

    /// Adds `v` to the span. Returns the pivot and the new normalized row
    /// when the rank grows.
    pub fn insert(&mut self, v: &[Coefficient]) -> Option<(usize, Vec<Coefficient>)> {
        let mut r = self.reduce(v);
        let p = r.iter().position(|x| !x.is_zero())?;
        let inv = r[p].inv().expect("nonzero pivot");
        if !inv.is_one() {
            for x in r.iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p);
        self.rows.insert(at, (p, r.clone()));
        Some((p, r))
    }
}

/// Rank by fraction-free (Bareiss) elimination after clearing denominators
/// row by row.
pub fn bareiss_rank(rows: &[Vec<Coefficient>]) -> usize {
    let mut m: Vec<Vec<Poly>> = rows.iter().map(|r| clear_denominators(r)).collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = Poly::one();
    let mut r = 0;
    for col in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(piv) = (r..nrows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        for i in r + 1..nrows {
            for j in col + 1..ncols {
                let t = m[r][col].mul(&m[i][j]).sub(&m[i][col].mul(&m[r][j]));
                m[i][j] = t.div_exact(&prev).expect("Bareiss step divides exactly");
            }
            m[i][col] = Poly::zero();
        }
        prev = m[r][col].clone();
        r += 1;
    }
    r
}

fn clear_denominators(row: &[Coefficient]) -> Vec<Poly> {
    let mut l = Poly::one();
    for c in row {
        let d = c.denom();
        if !d.is_one() {
            let g = gcd(&l, d);
            l = l.mul(&d.div_exact(&g).expect("gcd divides"));
        }
    }
    row.iter()
        .map(|c| {
            c.numer()
                .mul(&l.div_exact(c.denom()).expect("lcm is a multiple"))
        })
        .collect()
}
