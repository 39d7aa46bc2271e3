//! Exact linear algebra over `F2` and `Z/4`.
//!
//! Vectors are `Vec<u8>` with entries reduced into `0..2` or `0..4`. Over
//! `Z/4` solvability is decided through the Howell form of the row module:
//! an echelon form in which, for every row with pivot 2, twice that row lies
//! in the span of the rows below it. With that property greedy reduction of
//! a target against the pivots is a complete membership test.

use crate::error::{Error, Result};

fn check_len(expected: usize, v: &[u8]) -> Result<()> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected,
            found: v.len(),
        })
    }
}

/// Row echelon basis over `F2`, built incrementally.
#[derive(Debug, Clone, Default)]
pub struct F2Echelon {
    ncols: usize,
    rows: Vec<(usize, Vec<u8>)>,
}

impl F2Echelon {
    pub fn new(ncols: usize) -> Self {
        F2Echelon {
            ncols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u8]) {
        for (p, row) in &self.rows {
            if v[*p] & 1 == 1 {
                for (a, b) in v.iter_mut().zip(row) {
                    *a ^= b;
                }
            }
        }
    }

    /// Adds a vector; returns true if it increased the rank.
    pub fn insert(&mut self, v: &[u8]) -> bool {
        let mut v: Vec<u8> = v.iter().map(|x| x & 1).collect();
        self.reduce(&mut v);
        match v.iter().position(|&x| x == 1) {
            Some(p) => {
                for (_, row) in self.rows.iter_mut() {
                    if row[p] == 1 {
                        for (a, b) in row.iter_mut().zip(&v) {
                            *a ^= b;
                        }
                    }
                }
                self.rows.push((p, v));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        let mut v: Vec<u8> = v.iter().map(|x| x & 1).collect();
        self.reduce(&mut v);
        v.iter().all(|&x| x == 0)
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }
}

/// True iff `target` is an `F2`-combination of `columns`.
pub fn f2_solve(columns: &[Vec<u8>], target: &[u8]) -> Result<bool> {
    let mut ech = F2Echelon::new(target.len());
    for c in columns {
        check_len(target.len(), c)?;
        ech.insert(c);
    }
    Ok(ech.contains(target))
}

/// Basis of `{ x : sum_i x_i rows[i] = 0 }` over `F2`.
pub fn f2_kernel(rows: &[Vec<u8>], ncols: usize) -> Result<Vec<Vec<u8>>> {
    let m = rows.len();
    let mut aug = Vec::with_capacity(m);
    for (i, r) in rows.iter().enumerate() {
        check_len(ncols, r)?;
        let mut v: Vec<u8> = r.iter().map(|x| x & 1).collect();
        v.extend((0..m).map(|k| u8::from(k == i)));
        aug.push(v);
    }
    // Forward elimination restricted to the first `ncols` columns.
    let mut pivot_row = 0;
    for c in 0..ncols {
        if let Some(p) = (pivot_row..m).find(|&i| aug[i][c] == 1) {
            aug.swap(pivot_row, p);
            let pivot = aug[pivot_row].clone();
            for (i, row) in aug.iter_mut().enumerate() {
                if i != pivot_row && row[c] == 1 {
                    for (a, b) in row.iter_mut().zip(&pivot) {
                        *a ^= b;
                    }
                }
            }
            pivot_row += 1;
        }
    }
    Ok(aug[pivot_row..]
        .iter()
        .map(|r| r[ncols..].to_vec())
        .collect())
}

/// A row of a Howell form with its pivot column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HowellRow {
    pub pivot: usize,
    pub row: Vec<u8>,
}

fn axpy4(target: &mut [u8], k: u8, row: &[u8]) {
    for (t, r) in target.iter_mut().zip(row) {
        *t = (*t + 4 * 4 - (k * r) % 4) % 4;
    }
}

/// Howell form over `Z/4` of the module spanned by `rows`.
pub fn howell_form(rows: &[Vec<u8>], ncols: usize) -> Result<Vec<HowellRow>> {
    let mut pool: Vec<Vec<u8>> = Vec::with_capacity(rows.len());
    for r in rows {
        check_len(ncols, r)?;
        pool.push(r.iter().map(|x| x % 4).collect());
    }
    pool.retain(|r| r.iter().any(|&x| x != 0));
    let mut out: Vec<HowellRow> = Vec::new();
    for c in 0..ncols {
        if let Some(i) = pool.iter().position(|r| r[c] % 2 == 1) {
            let mut p = pool.swap_remove(i);
            if p[c] == 3 {
                for x in p.iter_mut() {
                    *x = (*x * 3) % 4;
                }
            }
            for r in pool.iter_mut() {
                let e = r[c];
                if e != 0 {
                    axpy4(r, e, &p);
                }
            }
            for h in out.iter_mut() {
                let e = h.row[c];
                if e != 0 {
                    axpy4(&mut h.row, e, &p);
                }
            }
            out.push(HowellRow { pivot: c, row: p });
        } else if let Some(i) = pool.iter().position(|r| r[c] == 2) {
            let p = pool.swap_remove(i);
            for r in pool.iter_mut() {
                if r[c] == 2 {
                    axpy4(r, 1, &p);
                }
            }
            for h in out.iter_mut() {
                if h.row[c] >= 2 {
                    axpy4(&mut h.row, 1, &p);
                }
            }
            let twice: Vec<u8> = p.iter().map(|x| (2 * x) % 4).collect();
            if twice.iter().any(|&x| x != 0) {
                pool.push(twice);
            }
            out.push(HowellRow { pivot: c, row: p });
        }
        pool.retain(|r| r.iter().any(|&x| x != 0));
    }
    Ok(out)
}

/// Reduces `target` against a Howell form; returns the residue.
pub fn howell_reduce(form: &[HowellRow], target: &[u8]) -> Vec<u8> {
    let mut t: Vec<u8> = target.iter().map(|x| x % 4).collect();
    for h in form {
        let e = t[h.pivot];
        if e == 0 {
            continue;
        }
        let k = match h.row[h.pivot] {
            1 => e,
            2 if e.is_multiple_of(2) => e / 2,
            _ => continue,
        };
        axpy4(&mut t, k, &h.row);
    }
    t
}

/// True iff `target` is a `Z/4`-linear combination of `columns`.
pub fn howell_solve(columns: &[Vec<u8>], target: &[u8]) -> Result<bool> {
    let form = howell_form(columns, target.len())?;
    Ok(howell_reduce(&form, target).iter().all(|&x| x == 0))
}

/// Generating set of `{ x in (Z/4)^m : sum_i x_i rows[i] = 0 }`.
pub fn z4_kernel(rows: &[Vec<u8>], ncols: usize) -> Result<Vec<Vec<u8>>> {
    let m = rows.len();
    let mut aug = Vec::with_capacity(m);
    for (i, r) in rows.iter().enumerate() {
        check_len(ncols, r)?;
        let mut v: Vec<u8> = r.iter().map(|x| x % 4).collect();
        v.extend((0..m).map(|k| u8::from(k == i)));
        aug.push(v);
    }
    let form = howell_form(&aug, ncols + m)?;
    Ok(form
        .into_iter()
        .filter(|h| h.pivot >= ncols)
        .map(|h| h.row[ncols..].to_vec())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn howell_examples() {
        assert!(howell_solve(&[vec![2]], &[2]).unwrap());
        assert!(!howell_solve(&[vec![2]], &[1]).unwrap());
        assert!(howell_solve(&[vec![1, 1], vec![0, 2]], &[1, 3]).unwrap());
        assert_eq!(
            howell_solve(&[vec![1, 1]], &[1]),
            Err(Error::DimensionMismatch {
                expected: 1,
                found: 2
            })
        );
    }

    #[test]
    fn howell_needs_twice_rows() {
        // span{(2,1)} contains (0,2) = 2*(2,1); plain echelon reduction would miss it.
        assert!(howell_solve(&[vec![2, 1]], &[0, 2]).unwrap());
        assert!(!howell_solve(&[vec![2, 1]], &[0, 1]).unwrap());
    }

    #[test]
    fn f2_examples() {
        assert!(f2_solve(&[vec![1, 0, 1], vec![0, 1, 1]], &[1, 1, 0]).unwrap());
        assert!(!f2_solve(&[vec![1, 0, 1]], &[0, 1, 1]).unwrap());
    }

    #[test]
    fn kernels() {
        let k = f2_kernel(&[vec![1, 0], vec![1, 0], vec![0, 1]], 2).unwrap();
        assert_eq!(k, vec![vec![1, 1, 0]]);
        // 2*e_0 is killed by the row (2).
        let k = z4_kernel(&[vec![2]], 1).unwrap();
        assert_eq!(k, vec![vec![2]]);
    }

    #[test]
    fn brute_force_cross_check_small() {
        // every (columns, target) over Z/4 with two columns of length two.
        let vals: Vec<Vec<u8>> = (0..16).map(|v| vec![v / 4, v % 4]).collect();
        for a in &vals {
            for b in &vals {
                let mut reach = std::collections::HashSet::new();
                for x in 0..4u8 {
                    for y in 0..4u8 {
                        reach.insert(vec![(x * a[0] + y * b[0]) % 4, (x * a[1] + y * b[1]) % 4]);
                    }
                }
                for t in &vals {
                    let cols = vec![a.clone(), b.clone()];
                    assert_eq!(
                        howell_solve(&cols, t).unwrap(),
                        reach.contains(t),
                        "{a:?} {b:?} {t:?}"
                    );
                }
            }
        }
    }
}
