//! Buchberger's algorithm with the two standard pair-elimination criteria,
//! plus reduction to the unique reduced Gröbner basis.

use num_traits::One;

use crate::polycore::{divide, Coeff, MonomialOrder, Polynomial};

/// Normal form of `f` against `basis` under `order` (full reduction).
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    if basis.is_empty() {
        return f.clone();
    }
    divide(f, basis, order).expect("normal form inputs validated").remainder
}

/// S-polynomial of `f` and `g` under `order`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, order: &MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_under(order).expect("nonzero");
    let (gm, gc) = g.leading_under(order).expect("nonzero");
    let lcm = fm.lcm(gm);
    let a = fm.divide_into(&lcm).unwrap();
    let b = gm.divide_into(&lcm).unwrap();
    let left = f.mul_term(&a, &(Coeff::one() / fc.clone()));
    let right = g.mul_term(&b, &(Coeff::one() / gc.clone()));
    &left - &right
}

/// The reduced Gröbner basis of the ideal generated by `gens` under
/// `order`: monic, autoreduced, sorted descending by leading monomial.
/// The zero ideal yields an empty basis.
pub fn groebner_basis(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if basis.is_empty() {
        return basis;
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pairs.push((i, j));
        }
    }

    while !pairs.is_empty() {
        // Normal selection: smallest pair lcm first; ties by index.
        let lead = |k: usize| basis[k].leading_under(order).unwrap().0.clone();
        let mut best = 0;
        let mut best_lcm = lead(pairs[0].0).lcm(&lead(pairs[0].1));
        for (k, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let l = lead(i).lcm(&lead(j));
            let ord = order
                .cmp_monomials(&l, &best_lcm)
                .then_with(|| (pairs[k].0, pairs[k].1).cmp(&(pairs[best].0, pairs[best].1)));
            if ord == std::cmp::Ordering::Less {
                best = k;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.remove(best);

        let li = lead(i);
        let lj = lead(j);
        // First criterion: coprime leading monomials.
        if li.coprime(&lj) {
            continue;
        }
        // Chain criterion: some k with lt(k) | lcm(i,j) and both pairs
        // (i,k), (j,k) already treated.
        let lcm = li.lcm(&lj);
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(k).divides(&lcm)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chained {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order);
        if !r.is_zero() {
            let new = basis.len();
            basis.push(r.monic());
            for t in 0..new {
                pairs.push((t, new));
            }
        }
    }

    reduce_basis(basis, order)
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimalizes and autoreduces a basis whose S-polynomials all reduce
/// to zero; the result is the unique reduced basis, sorted descending
/// by leading monomial.
pub fn reduce_basis(basis: Vec<Polynomial>, order: &MonomialOrder) -> Vec<Polynomial> {
    let mut work: Vec<Polynomial> =
        basis.into_iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    if work.is_empty() {
        return work;
    }
    // Minimalize: drop elements whose lead is divisible by another lead.
    work.sort_by(|a, b| {
        order.cmp_monomials(a.leading_under(order).unwrap().0, b.leading_under(order).unwrap().0)
    });
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in work {
        let lm = p.leading_under(order).unwrap().0.clone();
        if !minimal
            .iter()
            .any(|q| q.leading_under(order).unwrap().0.divides(&lm))
        {
            minimal.push(p);
        }
    }
    // Autoreduce tails against the rest until stable.
    loop {
        let mut changed = false;
        for i in 0..minimal.len() {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, q)| q.clone())
                .collect();
            if others.is_empty() {
                continue;
            }
            let r = normal_form(&minimal[i], &others, order).monic();
            if r != minimal[i] {
                minimal[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    minimal.retain(|p| !p.is_zero());
    minimal.sort_by(|a, b| {
        order.cmp_monomials(b.leading_under(order).unwrap().0, a.leading_under(order).unwrap().0)
    });
    minimal
}

/// Buchberger's criterion: every S-polynomial of `basis` reduces to zero.
pub fn is_groebner(basis: &[Polynomial], order: &MonomialOrder) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j], order);
            if !normal_form(&s, basis, order).is_zero() {
                return false;
            }
        }
    }
    true
}
