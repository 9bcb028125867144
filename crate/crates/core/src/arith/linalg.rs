//! Gaussian elimination over an exact field.

use super::field::Field;

/// Trait hook for pivot choice: smaller is preferred.
pub trait PivotCost {
    fn cost(&self) -> usize;
}

impl PivotCost for super::rat::Rat {
    fn cost(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl PivotCost for super::ufrac::URatFunc {
    fn cost(&self) -> usize {
        self.height()
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: Field + PivotCost>(m: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let best = (r..m.len())
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].cost());
        let Some(p) = best else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv();
        for j in c..ncols {
            m[r][j] = m[r][j].mul(&inv);
        }
        for i in 0..m.len() {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in c..ncols {
                if !m[r][j].is_zero() {
                    m[i][j] = m[i][j].sub(&f.mul(&m[r][j]));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of `{v : M v = 0}`.
pub fn nullspace<F: Field + PivotCost>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m: Vec<Vec<F>> = rows
        .iter()
        .filter(|r| r.iter().any(|a| !a.is_zero()))
        .cloned()
        .collect();
    let pivots = rref(&mut m, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = m[r][free].neg();
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat::{rat, Rat};

    #[test]
    fn kernel_of_rank_one() {
        let rows = vec![vec![rat(1), rat(2), rat(3)], vec![rat(2), rat(4), rat(6)]];
        let k = nullspace(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in k {
            let s: Rat = rows[0].iter().zip(&v).map(|(a, b)| a * b).sum();
            assert_eq!(s, rat(0));
        }
    }
}
