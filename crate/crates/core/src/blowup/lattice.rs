//! Finite lattices and lattice-indexed diagrams of closed subschemes.

use crate::geom::{Atlas, ClosedSubscheme};
use crate::{Error, Result};

/// A finite lattice: named elements, the order relation, and total
/// meet/join tables (their existence is what makes the poset a lattice).
#[derive(Clone, Debug)]
pub struct Lattice {
    elements: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

impl Lattice {
    /// From covering relations `a < b`; the order is the transitive
    /// closure. Fails unless the result is a lattice.
    pub fn from_covers<S: AsRef<str>>(elements: Vec<S>, covers: &[(usize, usize)]) -> Result<Lattice> {
        let n = elements.len();
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::InvalidLattice("cover references a missing element".into()));
            }
            if a == b {
                return Err(Error::InvalidLattice("reflexive cover".into()));
            }
            leq[a][b] = true;
        }
        // transitive closure
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        Lattice::from_leq(elements, leq)
    }

    pub fn from_leq<S: AsRef<str>>(elements: Vec<S>, leq: Vec<Vec<bool>>) -> Result<Lattice> {
        let elements: Vec<String> = elements.iter().map(|s| s.as_ref().to_string()).collect();
        let n = elements.len();
        if n == 0 {
            return Err(Error::InvalidLattice("empty lattice".into()));
        }
        {
            let mut seen = std::collections::BTreeSet::new();
            for e in &elements {
                if !seen.insert(e.clone()) {
                    return Err(Error::InvalidLattice(format!("duplicate element `{e}`")));
                }
            }
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::InvalidLattice("order is not reflexive".into()));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidLattice(format!(
                        "antisymmetry fails between `{}` and `{}`",
                        elements[i], elements[j]
                    )));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::InvalidLattice("order is not transitive".into()));
                    }
                }
            }
        }
        let mut meet = vec![vec![0usize; n]; n];
        let mut join = vec![vec![0usize; n]; n];
        for i in 0..n {
            for j in 0..n {
                meet[i][j] = bound(&leq, i, j, true).ok_or_else(|| {
                    Error::InvalidLattice(format!(
                        "no meet of `{}` and `{}`",
                        elements[i], elements[j]
                    ))
                })?;
                join[i][j] = bound(&leq, i, j, false).ok_or_else(|| {
                    Error::InvalidLattice(format!(
                        "no join of `{}` and `{}`",
                        elements[i], elements[j]
                    ))
                })?;
            }
        }
        Ok(Lattice { elements, leq, meet, join })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.elements
    }

    pub fn name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn minimum(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[i][j])).expect("lattice minimum")
    }

    pub fn maximum(&self) -> usize {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq[j][i])).expect("lattice maximum")
    }

    /// Longest chain length from the minimum.
    pub fn rank(&self, i: usize) -> usize {
        let below: Vec<usize> = (0..self.len()).filter(|&j| j != i && self.leq[j][i]).collect();
        1 + below.iter().map(|&j| self.rank(j)).max().unwrap_or(0)
    }
}

/// The greatest lower bound (`lower = true`) or least upper bound of two
/// elements, if it exists.
fn bound(leq: &[Vec<bool>], a: usize, b: usize, lower: bool) -> Option<usize> {
    let n = leq.len();
    let bounds: Vec<usize> = (0..n)
        .filter(|&c| {
            if lower {
                leq[c][a] && leq[c][b]
            } else {
                leq[a][c] && leq[b][c]
            }
        })
        .collect();
    bounds
        .iter()
        .copied()
        .find(|&c| {
            bounds.iter().all(|&d| if lower { leq[d][c] } else { leq[c][d] })
        })
}

/// A lattice-indexed diagram of closed subschemes with the ambient at the
/// top; monotone by reverse inclusion of ideals.
#[derive(Clone, Debug)]
pub struct PosetDiagram {
    pub lattice: Lattice,
    pub ambient: Atlas,
    pub assign: Vec<ClosedSubscheme>,
}

impl PosetDiagram {
    pub fn new(lattice: Lattice, ambient: &Atlas, assign: Vec<ClosedSubscheme>) -> Result<PosetDiagram> {
        if assign.len() != lattice.len() {
            return Err(Error::InvalidDiagram("one subscheme per lattice element".into()));
        }
        for sub in &assign {
            if sub.ambient() != ambient {
                return Err(Error::InvalidDiagram("diagram entries on different atlases".into()));
            }
        }
        let top = lattice.maximum();
        if !assign[top].same_subscheme(&ClosedSubscheme::whole(ambient))? {
            return Err(Error::InvalidDiagram("the lattice maximum must be the ambient".into()));
        }
        Ok(PosetDiagram { lattice, ambient: ambient.clone(), assign })
    }

    /// Monotonicity notes: p ≤ q must mean Y_p ⊆ Y_q (I_q ⊆ I_p).
    /// Subsumed by excessivity on comparable pairs, but reportable on its
    /// own for diagnostics.
    pub fn verify_monotone(&self) -> Result<Vec<String>> {
        let mut notes = Vec::new();
        for p in 0..self.lattice.len() {
            for q in 0..self.lattice.len() {
                if p != q
                    && self.lattice.leq(p, q)
                    && !self.assign[p].contained_in(&self.assign[q])?
                {
                    notes.push(format!(
                        "`{}` is not inside `{}`",
                        self.lattice.name(p),
                        self.lattice.name(q)
                    ));
                }
            }
        }
        Ok(notes)
    }
}

/// Classical excessivity of a lattice diagram: for all k, l the ideal sum
/// `I_k + I_l` equals `I_{k∧l}` chartwise.
pub fn excessive_check_lattice(d: &PosetDiagram) -> Result<bool> {
    let n = d.lattice.len();
    for k in 0..n {
        for l in (k + 1)..n {
            let m = d.lattice.meet(k, l);
            for chart in 0..d.ambient.charts().len() {
                let sum = d.assign[k].ideal(chart).sum(d.assign[l].ideal(chart))?;
                if !sum.equals(d.assign[m].ideal(chart))? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}
