//! Syzygy modules of polynomial tuples, via a criterion-free Buchberger
//! completion with transformation bookkeeping and the classical S-pair
//! (Schreyer) generators.

use num_traits::One;

use super::groebner::s_polynomial;
use crate::polycore::{divide, Coeff, MonomialOrder, Polynomial, RingRef};
use crate::{Error, Result};

/// Generators of `Syz(g₁,…,gₖ) = {v : Σ vᵢ·gᵢ = 0}` as row vectors.
pub fn syzygies(gens: &[Polynomial], order: &MonomialOrder) -> Result<Vec<Vec<Polynomial>>> {
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let ring = gens[0].ring().clone();
    let k = gens.len();
    let zero_row = |n: usize| vec![Polynomial::zero(&ring); n];

    // Unit syzygies of zero generators; nonzero generators proceed.
    let mut rows_for_zero: Vec<Vec<Polynomial>> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            let mut row = zero_row(k);
            row[i] = Polynomial::one(&ring);
            rows_for_zero.push(row);
        }
    }
    let live: Vec<usize> = (0..k).filter(|&i| !gens[i].is_zero()).collect();
    if live.is_empty() {
        return Ok(rows_for_zero);
    }

    // Completion without criteria, tracking each basis row over `gens`.
    let mut basis: Vec<Polynomial> = live.iter().map(|&i| gens[i].clone()).collect();
    let mut rows: Vec<Vec<Polynomial>> = live
        .iter()
        .map(|&i| {
            let mut row = zero_row(k);
            row[i] = Polynomial::one(&ring);
            row
        })
        .collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let s = s_polynomial(&basis[i], &basis[j], order);
        let d = divide(&s, &basis, order)?;
        if !d.remainder.is_zero() {
            // row(s) = spair_row(i, j) − Σ q_t row(t)
            let mut row = spair_row(&basis, &rows, i, j, order, k, &ring);
            for (t, q) in d.quotients.iter().enumerate() {
                if !q.is_zero() {
                    for c in 0..k {
                        row[c] = &row[c] - &(q * &rows[t][c]);
                    }
                }
            }
            let new = basis.len();
            basis.push(d.remainder);
            rows.push(row);
            for t in 0..new {
                pairs.push((t, new));
            }
        }
    }

    // S-pair syzygies of the completed basis, pushed down to `gens`.
    let mut out = rows_for_zero;
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order);
            let d = divide(&s, &basis, order)?;
            debug_assert!(d.remainder.is_zero());
            // syzygy over basis: m_i/lc_i·E_i − m_j/lc_j·E_j − Σ q_t E_t
            let mut row = spair_row(&basis, &rows, i, j, order, k, &ring);
            for (t, q) in d.quotients.iter().enumerate() {
                if !q.is_zero() {
                    for c in 0..k {
                        row[c] = &row[c] - &(q * &rows[t][c]);
                    }
                }
            }
            if row.iter().any(|p| !p.is_zero()) {
                out.push(row);
            }
        }
    }

    // Rows of (Id − N·M): record how each gen reduces over the basis.
    for (orig, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let d = divide(g, &basis, order)?;
        debug_assert!(d.remainder.is_zero(), "generator must reduce over its own completion");
        let mut row = zero_row(k);
        row[orig] = Polynomial::one(&ring);
        for (t, q) in d.quotients.iter().enumerate() {
            if !q.is_zero() {
                for c in 0..k {
                    row[c] = &row[c] - &(q * &rows[t][c]);
                }
            }
        }
        if row.iter().any(|p| !p.is_zero()) {
            out.push(row);
        }
    }

    // Sanity: every row really is a syzygy.
    for row in &out {
        let mut acc = Polynomial::zero(&ring);
        for (c, v) in row.iter().enumerate() {
            acc = &acc + &(v * &gens[c]);
        }
        if !acc.is_zero() {
            return Err(Error::InvalidInput("internal: produced a non-syzygy".into()));
        }
    }
    Ok(out)
}

/// The leading row `m_i/lc_i·row_i − m_j/lc_j·row_j` of an S-pair.
fn spair_row(
    basis: &[Polynomial],
    rows: &[Vec<Polynomial>],
    i: usize,
    j: usize,
    order: &MonomialOrder,
    k: usize,
    ring: &RingRef,
) -> Vec<Polynomial> {
    let (mi, ci) = basis[i].leading_under(order).expect("nonzero");
    let (mj, cj) = basis[j].leading_under(order).expect("nonzero");
    let lcm = mi.lcm(mj);
    let ai = mi.divide_into(&lcm).unwrap();
    let aj = mj.divide_into(&lcm).unwrap();
    let inv_i = Coeff::one() / ci.clone();
    let inv_j = Coeff::one() / cj.clone();
    let mut row = vec![Polynomial::zero(ring); k];
    for c in 0..k {
        let left = rows[i][c].mul_term(&ai, &inv_i);
        let right = rows[j][c].mul_term(&aj, &inv_j);
        row[c] = &left - &right;
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_polynomial, PolyRing};

    #[test]
    fn koszul_syzygy() {
        // Syz(x, y) is generated by (y, -x)
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let x = parse_polynomial(&r, "x").unwrap();
        let y = parse_polynomial(&r, "y").unwrap();
        let syz = syzygies(&[x.clone(), y.clone()], r.default_order()).unwrap();
        assert!(!syz.is_empty());
        for row in &syz {
            let s = &(&row[0] * &x) + &(&row[1] * &y);
            assert!(s.is_zero());
        }
    }

    #[test]
    fn non_regular_pair() {
        // y·x^2 − x·xy = 0
        let r = PolyRing::new(vec!["x", "y"]).unwrap();
        let a = parse_polynomial(&r, "x^2").unwrap();
        let b = parse_polynomial(&r, "x*y").unwrap();
        let syz = syzygies(&[a.clone(), b.clone()], r.default_order()).unwrap();
        assert!(syz.iter().any(|row| !row[0].is_zero() || !row[1].is_zero()));
        for row in &syz {
            assert!((&(&row[0] * &a) + &(&row[1] * &b)).is_zero());
        }
    }
}
