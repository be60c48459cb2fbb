use std::cmp::Ordering;

use super::Monomial;
use crate::{Error, Result};

/// The three supported order families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrevLex,
    /// Block elimination order: grevlex on the first `elim` permuted
    /// variables, ties broken by grevlex on the rest.
    Block { elim: usize },
}

/// A monomial order: an order kind plus a variable permutation.
///
/// `perm[k]` is the variable compared at position `k`; the identity
/// permutation gives the usual orders. All three kinds are total
/// multiplicative well-orders with 1 minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidInput(format!(
                    "order permutation {:?} is not a permutation of 0..{}",
                    perm, n
                )));
            }
            seen[p] = true;
        }
        if let OrderKind::Block { elim } = kind {
            if elim > n {
                return Err(Error::InvalidInput(format!(
                    "elimination block {} exceeds {} variables",
                    elim, n
                )));
            }
        }
        Ok(MonomialOrder { kind, perm })
    }

    pub fn lex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: (0..nvars).collect() }
    }

    pub fn grevlex(nvars: usize) -> Self {
        MonomialOrder { kind: OrderKind::GrevLex, perm: (0..nvars).collect() }
    }

    /// Elimination order with the given leading block.
    pub fn block(nvars: usize, leading: &[usize]) -> Result<Self> {
        let mut perm: Vec<usize> = leading.to_vec();
        for i in 0..nvars {
            if !leading.contains(&i) {
                perm.push(i);
            }
        }
        MonomialOrder::new(OrderKind::Block { elim: leading.len() }, perm)
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn nvars(&self) -> usize {
        self.perm.len()
    }

    /// Total comparison of same-length monomials.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.len() != self.perm.len() || b.len() != self.perm.len() {
            return Err(Error::Dimension(format!(
                "monomials of lengths {}/{} under an order on {} variables",
                a.len(),
                b.len(),
                self.perm.len()
            )));
        }
        Ok(self.cmp_monomials(a, b))
    }

    pub(crate) fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let ae = a.exps();
        let be = b.exps();
        match self.kind {
            OrderKind::Lex => self.lex_cmp(ae, be, 0, self.perm.len()),
            OrderKind::GrevLex => self.grevlex_cmp(ae, be, 0, self.perm.len()),
            OrderKind::Block { elim } => self
                .grevlex_cmp(ae, be, 0, elim)
                .then_with(|| self.grevlex_cmp(ae, be, elim, self.perm.len())),
        }
    }

    fn lex_cmp(&self, a: &[u32], b: &[u32], from: usize, to: usize) -> Ordering {
        for k in from..to {
            let p = self.perm[k];
            match a[p].cmp(&b[p]) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    fn grevlex_cmp(&self, a: &[u32], b: &[u32], from: usize, to: usize) -> Ordering {
        let da: u32 = (from..to).map(|k| a[self.perm[k]]).sum();
        let db: u32 = (from..to).map(|k| b[self.perm[k]]).sum();
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Graded reverse lex: the last differing variable decides,
        // smaller exponent wins.
        for k in (from..to).rev() {
            let p = self.perm[k];
            match a[p].cmp(&b[p]) {
                Ordering::Equal => continue,
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    #[test]
    fn lex_on_exponent_vectors() {
        // x^2 y vs x y^3 under lex(x > y)
        let o = MonomialOrder::lex(2);
        assert_eq!(o.compare(&m(&[2, 1]), &m(&[1, 3])).unwrap(), Ordering::Greater);
    }

    #[test]
    fn any_order_is_reflexive() {
        for o in [MonomialOrder::lex(3), MonomialOrder::grevlex(3), MonomialOrder::block(3, &[1]).unwrap()] {
            let a = m(&[1, 2, 0]);
            assert_eq!(o.compare(&a, &a).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn grevlex_is_graded() {
        // x vs y^2 under grevlex: total degree 1 < 2
        let o = MonomialOrder::grevlex(2);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 2])).unwrap(), Ordering::Less);
    }

    #[test]
    fn grevlex_tie_break() {
        // deg-equal: x > y, and x*z < y^2 (last differing var decides)
        let o = MonomialOrder::grevlex(2);
        assert_eq!(o.compare(&m(&[1, 0]), &m(&[0, 1])).unwrap(), Ordering::Greater);
        let o3 = MonomialOrder::grevlex(3);
        assert_eq!(o3.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])).unwrap(), Ordering::Less);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let o = MonomialOrder::lex(2);
        assert!(o.compare(&m(&[1]), &m(&[1, 0])).is_err());
    }

    #[test]
    fn block_order_eliminates() {
        // vars (x,y,t) with t leading: any t-monomial beats any t-free one
        let o = MonomialOrder::block(3, &[2]).unwrap();
        assert_eq!(o.compare(&m(&[0, 0, 1]), &m(&[5, 5, 0])).unwrap(), Ordering::Greater);
    }
}
