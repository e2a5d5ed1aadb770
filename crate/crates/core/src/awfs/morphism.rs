use super::laws::{Awfs, Checker};
use crate::arrowcat::{Ambient, Square};
use crate::error::Result;
use crate::report::Report;

type Arr<W> = <<W as Awfs>::Amb as Ambient>::Arr;

/// Triangles, naturality and both pentagons for ξ : E ⇒ E′ between two awfs
/// on the same ambient category.
pub fn awfs_morphism_validate<W, V>(
    src: &W,
    tgt: &V,
    xi: impl Fn(&Arr<W>) -> Result<Arr<W>> + Sync,
    arrows: &[Arr<W>],
    squares: &[Square<Arr<W>>],
) -> Report
where
    W: Awfs,
    V: Awfs<Amb = W::Amb>,
{
    let amb = src.ambient();
    let mut c = Checker::new(amb);
    for f in arrows {
        let ids = [amb.describe(f)];
        let x = xi(f);
        let and = |a: Result<Arr<W>>, b: Result<Arr<W>>| amb.compose(&a?, &b?);
        let xr = || x.clone();
        c.eq("xi.L = L'", &ids, and(xr(), src.l(f)), tgt.l(f));
        c.eq("R'.xi = R", &ids, and(tgt.r(f), xr()), src.r(f));
        // δ′_f ∘ ξ_f = E′(1, ξ_f) ∘ ξ_{Lf} ∘ δ_f
        let lhs = and(tgt.delta(f), xr());
        let rhs = (|| {
            let lf = src.l(f)?;
            let sq = Square::new(&lf, &tgt.l(f)?, &amb.id(&amb.dom(f)), &x.clone()?);
            amb.compose_all(&[&tgt.e_sq(&sq)?, &xi(&lf)?, &src.delta(f)?])
        })();
        c.eq("comonad pentagon", &ids, lhs, rhs);
        // ξ_f ∘ μ_f = μ′_f ∘ ξ_{R′f} ∘ E(ξ_f, 1)
        let lhs = and(xr(), src.mu(f));
        let rhs = (|| {
            let r2 = tgt.r(f)?;
            let sq = Square::new(&src.r(f)?, &r2, &x.clone()?, &amb.id(&amb.cod(f)));
            amb.compose_all(&[&tgt.mu(f)?, &xi(&r2)?, &src.e_sq(&sq)?])
        })();
        c.eq("monad pentagon", &ids, lhs, rhs);
    }
    for sq in squares {
        let ids = [amb.describe(&sq.f), amb.describe(&sq.g), amb.describe(&sq.u), amb.describe(&sq.v)];
        let lhs = (|| amb.compose(&xi(&sq.g)?, &src.e_sq(sq)?))();
        let rhs = (|| amb.compose(&tgt.e_sq(sq)?, &xi(&sq.f)?))();
        c.eq("xi naturality", &ids, lhs, rhs);
    }
    c.out
}
