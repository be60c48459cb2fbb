//! Open complements: the chart-covered cases.

use super::atlas::{Atlas, Chart, Gluing};
use super::subscheme::{ClosedSubscheme, Divisor};
use crate::idealcalc::{invert_mod, Ideal};
use crate::polycore::{MonomialOrder, Polynomial};
use crate::{Error, Result};

/// The complement of a divisor: every chart is localized at the divisor
/// generator, with gluings rebuilt on the localizations.
pub fn open_complement_divisor(x: &Atlas, d: &Divisor) -> Result<Atlas> {
    if x != d.ambient() {
        return Err(Error::RingMismatch("divisor on a different atlas".into()));
    }
    let mut charts = Vec::new();
    for (c, g) in x.charts().iter().zip(d.gens()) {
        let (ring, rel, _) = c.localized(g)?;
        charts.push(Chart::new(format!("{}\\D", c.label), &ring, rel)?);
    }

    let mut gluings = Vec::new();
    for g in x.gluings() {
        let li = g.left;
        let ri = g.right;
        let old_l = x.chart(li);
        let old_r = x.chart(ri);
        let lmul = g.left_mult.embed_by_name(&charts[li].ring)?;
        let rmul = g.right_mult.embed_by_name(&charts[ri].ring)?;
        let (lloc, lrel, linv) = charts[li].localized(&lmul)?;
        let (rloc, rrel, rinv) = charts[ri].localized(&rmul)?;

        // rename the old localization variable to the new one
        let (old_lloc, _, old_linv) = old_l.localized(&g.left_mult)?;
        let (old_rloc, _, old_rinv) = old_r.localized(&g.right_mult)?;
        let mut l_embed: Vec<usize> = (0..old_lloc.num_vars() - 1).collect();
        l_embed.push(linv);
        let mut r_embed: Vec<usize> = (0..old_rloc.num_vars() - 1).collect();
        r_embed.push(rinv);
        let _ = (old_linv, old_rinv);

        let mut left_images: Vec<Polynomial> = Vec::new();
        for img in g.left_to_right.images().iter().take(old_l.ring.num_vars()) {
            left_images.push(img.embed(&rloc, &r_embed));
        }
        // image of 1/g_left: invert the transported divisor generator
        let g_img = g
            .left_to_right
            .apply(&d.gen(li).embed_by_name(g.left_to_right.source())?)?
            .embed(&rloc, &r_embed);
        let inv = invert_mod(&g_img, &rrel).ok_or_else(|| {
            Error::UnsupportedComplement(format!(
                "divisor generator is not invertible on the overlap {} ~ {}",
                old_l.label, old_r.label
            ))
        })?;
        left_images.push(inv);
        // image of 1/left_mult
        left_images.push(
            g.left_to_right.images()[old_lloc.num_vars() - 1].embed(&rloc, &r_embed),
        );

        let mut right_images: Vec<Polynomial> = Vec::new();
        for img in g.right_to_left.images().iter().take(old_r.ring.num_vars()) {
            right_images.push(img.embed(&lloc, &l_embed));
        }
        let g_img = g
            .right_to_left
            .apply(&d.gen(ri).embed_by_name(g.right_to_left.source())?)?
            .embed(&lloc, &l_embed);
        let inv = invert_mod(&g_img, &lrel).ok_or_else(|| {
            Error::UnsupportedComplement(format!(
                "divisor generator is not invertible on the overlap {} ~ {}",
                old_r.label, old_l.label
            ))
        })?;
        right_images.push(inv);
        right_images.push(
            g.right_to_left.images()[old_rloc.num_vars() - 1].embed(&lloc, &l_embed),
        );

        gluings.push(Gluing::build(
            &charts,
            li,
            ri,
            lmul,
            rmul,
            left_images,
            right_images,
        )?);
    }
    Atlas::new(charts, gluings)
}

/// The complement of a subscheme that misses a subfamily of charts
/// entirely: those charts are returned as the complement, after checking
/// that they cover it — each dropped chart's locus away from the
/// subscheme must be reached through a gluing to a kept chart.
pub fn open_complement_family(x: &Atlas, sub: &ClosedSubscheme) -> Result<Atlas> {
    if x != sub.ambient() {
        return Err(Error::RingMismatch("subscheme on a different atlas".into()));
    }
    let keep: Vec<usize> = (0..x.charts().len())
        .filter(|&i| sub.ideal(i).is_unit())
        .collect();
    for i in 0..x.charts().len() {
        if keep.contains(&i) {
            continue;
        }
        // multipliers of gluings from chart i to kept charts
        let chart = x.chart(i);
        let mut mults = Vec::new();
        for g in x.gluings() {
            if g.left == i && keep.contains(&g.right) {
                mults.push(g.left_mult.clone());
            } else if g.right == i && keep.contains(&g.left) {
                mults.push(g.right_mult.clone());
            }
        }
        let cover = Ideal::new(&chart.ring, mults)?.sum(&chart.relations)?;
        // each subscheme generator must vanish wherever all multipliers do
        for gen in sub.ideal(i).gens() {
            if !in_radical(gen, &cover)? {
                return Err(Error::UnsupportedComplement(format!(
                    "complement not chart-covered on chart {}",
                    chart.label
                )));
            }
        }
    }
    x.restrict_to_charts(&keep)
}

/// Radical membership by the Rabinowitsch trick.
fn in_radical(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    let ring = ideal.ring();
    let zname = ring.fresh_name("z");
    let big = ring.extended(&[zname])?;
    let n = ring.num_vars();
    let var_map: Vec<usize> = (0..n).collect();
    let z = Polynomial::var(&big, n);
    let mut gens: Vec<Polynomial> =
        ideal.gens().iter().map(|g| g.embed(&big, &var_map)).collect();
    gens.push(&Polynomial::one(&big) - &(&z * &f.embed(&big, &var_map)));
    let gb = crate::idealcalc::groebner_basis(&gens, &MonomialOrder::grevlex(n + 1));
    Ok(gb.len() == 1 && gb[0].is_one())
}
