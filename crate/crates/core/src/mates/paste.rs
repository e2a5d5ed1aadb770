use super::square::{mate_of, same_adjunction, Filling, MateSquare};
use crate::error::{Error, Result};
use crate::fincat::{AdjunctionData, NatTrans};
use crate::report::{Report, Violation};

/// UT ⊣ SV from T ⊣ S (A ⇄ C) and U ⊣ V (C ⇄ E).
pub fn compose_adjunctions(top: &AdjunctionData, bottom: &AdjunctionData) -> Result<AdjunctionData> {
    let (t, s, u, v) = (&top.left, &top.right, &bottom.left, &bottom.right);
    let (a, e) = (t.src(), u.tgt());
    let unit = a.objects().map(|x| a.compose(s.mor(bottom.unit.at(t.ob(x))), top.unit.at(x))).collect();
    let counit = e.objects().map(|y| e.compose(bottom.counit.at(y), u.mor(top.counit.at(v.ob(y))))).collect();
    let (l, r) = (u.after(t)?, s.after(v)?);
    let id_a = crate::fincat::Functor::identity(a);
    let id_e = crate::fincat::Functor::identity(e);
    Ok(AdjunctionData {
        unit: NatTrans { src: id_a, tgt: r.after(&l)?, comp: unit },
        counit: NatTrans { src: l.after(&r)?, tgt: id_e, comp: counit },
        left: l,
        right: r,
    })
}

/// Side-by-side pasting: `a` on the left, `b` on the right.
pub fn paste_h(a: &MateSquare, b: &MateSquare) -> Result<MateSquare> {
    if !same_adjunction(&a.right, &b.left) {
        return Err(Error::NotComposable("squares do not share a vertical adjunction".into()));
    }
    let (h, k) = (b.h.after(&a.h)?, b.k.after(&a.k)?);
    let cell = match (&a.cell, &b.cell) {
        (Filling::Left(l1), Filling::Left(l2)) => {
            let d = k.tgt();
            let comp = a.h.src().objects().map(|x| d.compose(b.k.mor(l1.at(x)), l2.at(a.h.ob(x)))).collect();
            Filling::Left(NatTrans { src: b.right.left.after(&h)?, tgt: k.after(&a.left.left)?, comp })
        }
        (Filling::Right(r1), Filling::Right(r2)) => {
            let bb = h.tgt();
            let comp = a.k.src().objects().map(|y| bb.compose(r2.at(a.k.ob(y)), b.h.mor(r1.at(y)))).collect();
            Filling::Right(NatTrans { src: h.after(&a.left.right)?, tgt: b.right.right.after(&k)?, comp })
        }
        _ => return Err(Error::NotComposable("mixed fillings".into())),
    };
    Ok(MateSquare { h, k, left: a.left.clone(), right: b.right.clone(), cell })
}

/// Stacked pasting: `top` above `bottom`.
pub fn paste_v(top: &MateSquare, bottom: &MateSquare) -> Result<MateSquare> {
    if top.k != bottom.h {
        return Err(Error::NotComposable("bottom edge of the upper square is not the top edge of the lower".into()));
    }
    let left = compose_adjunctions(&top.left, &bottom.left)?;
    let right = compose_adjunctions(&top.right, &bottom.right)?;
    let cell = match (&top.cell, &bottom.cell) {
        (Filling::Left(lt), Filling::Left(lb)) => {
            let f = bottom.k.tgt();
            let comp = top.h.src().objects().map(|x| f.compose(lb.at(top.left.left.ob(x)), bottom.right.left.mor(lt.at(x)))).collect();
            Filling::Left(NatTrans { src: right.left.after(&top.h)?, tgt: bottom.k.after(&left.left)?, comp })
        }
        (Filling::Right(rt), Filling::Right(rb)) => {
            let b = top.h.tgt();
            let comp = bottom.k.src().objects().map(|y| b.compose(top.right.right.mor(rb.at(y)), rt.at(bottom.left.right.ob(y)))).collect();
            Filling::Right(NatTrans { src: top.h.after(&left.right)?, tgt: right.right.after(&bottom.k)?, comp })
        }
        _ => return Err(Error::NotComposable("mixed fillings".into())),
    };
    Ok(MateSquare { h: top.h.clone(), k: bottom.k.clone(), left, right, cell })
}

/// Rows first, then stack the rows.
pub fn paste_grid(grid: &[Vec<MateSquare>]) -> Result<MateSquare> {
    let rows = grid
        .iter()
        .map(|row| {
            let (first, rest) = row.split_first().ok_or_else(|| Error::Malformed("empty row".into()))?;
            rest.iter().try_fold(first.clone(), |acc, sq| paste_h(&acc, sq))
        })
        .collect::<Result<Vec<_>>>()?;
    let (first, rest) = rows.split_first().ok_or_else(|| Error::Malformed("empty grid".into()))?;
    rest.iter().try_fold(first.clone(), |acc, sq| paste_v(&acc, sq))
}

/// Columns first, then set the columns side by side.
pub fn paste_grid_columns(grid: &[Vec<MateSquare>]) -> Result<MateSquare> {
    let width = grid.first().map_or(0, |r| r.len());
    let cols = (0..width)
        .map(|j| {
            let (first, rest) = grid.split_first().ok_or_else(|| Error::Malformed("empty grid".into()))?;
            rest.iter().try_fold(first[j].clone(), |acc, row| paste_v(&acc, &row[j]))
        })
        .collect::<Result<Vec<_>>>()?;
    let (first, rest) = cols.split_first().ok_or_else(|| Error::Malformed("empty grid".into()))?;
    rest.iter().try_fold(first.clone(), |acc, sq| paste_h(&acc, sq))
}

/// Mate of the pasted square against the pasting of the mates, in both
/// pasting orders.
pub fn pasting_check(grid: &[Vec<MateSquare>]) -> Report {
    let mut out = Vec::new();
    let dump = || grid.iter().flatten().map(|s| s.describe()).collect::<Vec<_>>();
    let run = || -> Result<Vec<(&'static str, MateSquare, MateSquare)>> {
        let mates = grid.iter().map(|row| row.iter().map(mate_of).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        let p = paste_grid(grid)?;
        Ok(vec![
            ("mate of pasting = pasting of mates (rows first)", mate_of(&p)?, paste_grid(&mates)?),
            ("mate of pasting = pasting of mates (columns first)", mate_of(&paste_grid_columns(grid)?)?, paste_grid_columns(&mates)?),
            ("pasting is independent of order", p, paste_grid_columns(grid)?),
        ])
    };
    match run() {
        Ok(pairs) => {
            for (law, l, r) in pairs {
                if l.cell != r.cell {
                    out.push(Violation::new(law, dump(), format!("{:?}", l.cell.nat().comp), format!("{:?}", r.cell.nat().comp)));
                }
            }
        }
        Err(e) => out.push(Violation::new("grid pastes", dump(), e.to_string(), "")),
    }
    out
}
