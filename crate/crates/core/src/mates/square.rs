use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{same_cat, validate_adjunction, validate_functor, validate_nat, AdjunctionData, FinCat, Functor, NatTrans};
use crate::report::{Report, Violation};

/// λ : T′H ⇒ KT (left adjoints) or ρ : HS ⇒ S′K (right adjoints).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Filling {
    Left(NatTrans),
    Right(NatTrans),
}

impl Filling {
    pub fn nat(&self) -> &NatTrans {
        match self {
            Filling::Left(t) | Filling::Right(t) => t,
        }
    }

    pub fn is_left(&self) -> bool {
        matches!(self, Filling::Left(_))
    }
}

/// H : A → B on top, K : C → D below, T ⊣ S between A and C, T′ ⊣ S′
/// between B and D.
#[derive(Clone, Debug)]
pub struct MateSquare {
    pub h: Functor,
    pub k: Functor,
    pub left: AdjunctionData,
    pub right: AdjunctionData,
    pub cell: Filling,
}

pub fn same_adjunction(a: &AdjunctionData, b: &AdjunctionData) -> bool {
    a.left == b.left && a.right == b.right && a.unit == b.unit && a.counit == b.counit
}

impl PartialEq for MateSquare {
    fn eq(&self, o: &MateSquare) -> bool {
        self.h == o.h && self.k == o.k && same_adjunction(&self.left, &o.left) && same_adjunction(&self.right, &o.right) && self.cell == o.cell
    }
}

impl MateSquare {
    /// (A, B, C, D)
    pub fn corners(&self) -> [&Arc<FinCat>; 4] {
        [self.h.src(), self.h.tgt(), self.k.src(), self.k.tgt()]
    }

    /// Components of every functor and of the filling, for failure dumps.
    pub fn describe(&self) -> String {
        let f = |x: &Functor| format!("{:?}/{:?}", x.obj_table(), x.mor_table());
        format!(
            "H={} K={} T={} S={} T'={} S'={} {}={:?}",
            f(&self.h),
            f(&self.k),
            f(&self.left.left),
            f(&self.left.right),
            f(&self.right.left),
            f(&self.right.right),
            if self.cell.is_left() { "lambda" } else { "rho" },
            self.cell.nat().comp
        )
    }
}

pub fn validate_square(sq: &MateSquare) -> Report {
    let mut out = Vec::new();
    let [a, b, c, d] = sq.corners();
    let bound = [
        ("T : A -> C", &sq.left.left, a, c),
        ("S : C -> A", &sq.left.right, c, a),
        ("T' : B -> D", &sq.right.left, b, d),
        ("S' : D -> B", &sq.right.right, d, b),
    ];
    for (name, f, s, t) in bound {
        if !same_cat(f.src(), s) || !same_cat(f.tgt(), t) {
            out.push(Violation::new("boundary composes", vec![name.into(), sq.describe()], "mismatch", ""));
        }
    }
    if !out.is_empty() {
        return out;
    }
    for f in [&sq.h, &sq.k] {
        out.extend(validate_functor(f));
    }
    out.extend(validate_adjunction(&sq.left));
    out.extend(validate_adjunction(&sq.right));
    let t = sq.cell.nat();
    let (src, tgt) = match boundary_functors(sq) {
        Ok(p) => p,
        Err(e) => {
            out.push(Violation::new("boundary composes", vec![sq.describe()], e.to_string(), ""));
            return out;
        }
    };
    if t.src != src || t.tgt != tgt {
        out.push(Violation::new("filling has the drawn boundary", vec![sq.describe()], "mismatch", ""));
        return out;
    }
    out.extend(validate_nat(t));
    out
}

/// Source and target functors of the filling.
fn boundary_functors(sq: &MateSquare) -> Result<(Functor, Functor)> {
    Ok(match sq.cell {
        Filling::Left(_) => (sq.right.left.after(&sq.h)?, sq.k.after(&sq.left.left)?),
        Filling::Right(_) => (sq.h.after(&sq.left.right)?, sq.right.right.after(&sq.k)?),
    })
}

/// ρ = S′Kε · S′λ_S · ι_{HS} and λ = ν_{KT} · T′ρ_T · T′Hη.
pub fn mate_of(sq: &MateSquare) -> Result<MateSquare> {
    let (t, s) = (&sq.left.left, &sq.left.right);
    let (tp, sp) = (&sq.right.left, &sq.right.right);
    let (eta, eps) = (&sq.left.unit, &sq.left.counit);
    let (iota, nu) = (&sq.right.unit, &sq.right.counit);
    let cell = match &sq.cell {
        Filling::Left(lam) => {
            let b = sq.h.tgt();
            let c = sq.k.src();
            let comp = c
                .objects()
                .map(|x| {
                    let sx = s.ob(x);
                    let a = iota.at(sq.h.ob(sx));
                    let l = sp.mor(lam.at(sx));
                    let e = sp.mor(sq.k.mor(eps.at(x)));
                    b.compose(e, b.compose(l, a))
                })
                .collect();
            Filling::Right(NatTrans { src: sq.h.after(s)?, tgt: sp.after(&sq.k)?, comp })
        }
        Filling::Right(rho) => {
            let a = sq.h.src();
            let d = sq.k.tgt();
            let comp = a
                .objects()
                .map(|x| {
                    let tx = t.ob(x);
                    let u = tp.mor(sq.h.mor(eta.at(x)));
                    let r = tp.mor(rho.at(tx));
                    let n = nu.at(sq.k.ob(tx));
                    d.compose(n, d.compose(r, u))
                })
                .collect();
            Filling::Left(NatTrans { src: tp.after(&sq.h)?, tgt: sq.k.after(t)?, comp })
        }
    };
    let out = MateSquare { cell, ..sq.clone() };
    if !validate_nat(out.cell.nat()).is_empty() {
        return Err(Error::Malformed(format!("mate is not natural: {}", out.describe())));
    }
    Ok(out)
}

pub fn roundtrip_check(sq: &MateSquare) -> Report {
    match mate_of(sq).and_then(|m| mate_of(&m)) {
        Ok(back) if back == *sq => Vec::new(),
        Ok(back) => vec![Violation::new("mate involution", vec![sq.describe()], format!("{:?}", back.cell.nat().comp), format!("{:?}", sq.cell.nat().comp))],
        Err(e) => vec![Violation::new("mate involution", vec![sq.describe()], e.to_string(), "")],
    }
}
