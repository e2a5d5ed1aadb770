use super::laws::Awfs;
use super::structure::{alg_compose, Algebra};
use crate::arrowcat::{Ambient, LiftingFunction, Square};
use crate::error::Result;
use crate::report::{Report, Violation};

type Arr<W> = <<W as Awfs>::Amb as Ambient>::Arr;

/// The "hom side" of a lifting assignment: for a parameter p and algebra
/// arrow f, the arrow whose lifting problems are being solved.
pub trait HomSide<A: Ambient>: Sync {
    type Param: Sync;

    fn param_name(&self, p: &Self::Param) -> String;
    fn carrier(&self, amb: &A, p: &Self::Param, f: &A::Arr) -> Result<A::Arr>;
    /// The square carrier(p, g∘f) ⇒ carrier(p, g) induced by f.
    fn right_square(&self, amb: &A, p: &Self::Param, f: &A::Arr, g: &A::Arr) -> Result<Square<A::Arr>>;
    /// Combine the first-stage diagonal d with the second-stage bottom bc into
    /// the bottom of the second-stage problem.
    fn pair(&self, amb: &A, p: &Self::Param, f: &A::Arr, g: &A::Arr, d: &A::Arr, bc: &A::Arr) -> Result<A::Arr>;
}

/// The parameterless side: carrier(f) = f, right square (f, 1), pair = d.
pub struct Direct;

impl<A: Ambient> HomSide<A> for Direct {
    type Param = ();

    fn param_name(&self, _: &()) -> String {
        "-".into()
    }

    fn carrier(&self, _: &A, _: &(), f: &A::Arr) -> Result<A::Arr> {
        Ok(f.clone())
    }

    fn right_square(&self, amb: &A, _: &(), f: &A::Arr, g: &A::Arr) -> Result<Square<A::Arr>> {
        Ok(Square::new(&amb.compose(g, f)?, g, f, &amb.id(&amb.cod(g))))
    }

    fn pair(&self, _: &A, _: &(), _: &A::Arr, _: &A::Arr, d: &A::Arr, _: &A::Arr) -> Result<A::Arr> {
        Ok(d.clone())
    }
}

/// For every parameter and composable algebra pair, the two-stage solution
/// must equal the solution assigned to the composite algebra.
pub fn composition_criterion_check<W, H>(
    aw: &W,
    side: &H,
    params: &[H::Param],
    pairs: &[(Algebra<Arr<W>>, Algebra<Arr<W>>)],
    liftassign: impl Fn(&H::Param, &Algebra<Arr<W>>) -> Result<LiftingFunction<Arr<W>>>,
) -> Report
where
    W: Awfs,
    H: HomSide<W::Amb>,
{
    let amb = aw.ambient();
    let mut out = Vec::new();
    for p in params {
        for (k, (fa, ga)) in pairs.iter().enumerate() {
            let ids = |extra: Vec<String>| {
                let mut v = vec![side.param_name(p), format!("pair {k}")];
                v.extend(extra);
                v
            };
            let run = || -> Result<Option<Violation>> {
                let gfa = alg_compose(aw, fa, ga)?;
                let (phi_f, phi_g, phi_gf) = (liftassign(p, fa)?, liftassign(p, ga)?, liftassign(p, &gfa)?);
                let rs = side.right_square(amb, p, &fa.g, &ga.g)?;
                for e in &phi_gf.entries {
                    let a2 = amb.compose(&rs.u, &e.a)?;
                    let b2 = amb.compose(&rs.v, &e.b)?;
                    let name = phi_gf.gens.names[e.gen].clone();
                    let Some(d) = phi_g.choose(amb, e.gen, &a2, &b2) else {
                        return Ok(Some(Violation::new("composition criterion", ids(vec![name]), "first stage unsolved", "solved")));
                    };
                    let bot = side.pair(amb, p, &fa.g, &ga.g, d, &e.b)?;
                    let Some(two) = phi_f.choose(amb, e.gen, &e.a, &bot) else {
                        return Ok(Some(Violation::new("composition criterion", ids(vec![name]), "second stage unsolved", "solved")));
                    };
                    if let Some((l, r)) = amb.diff(two, &e.diag) {
                        return Ok(Some(Violation::new("composition criterion", ids(vec![name, amb.describe(&e.a), amb.describe(&e.b)]), l, r)));
                    }
                }
                Ok(None)
            };
            match run() {
                Ok(Some(v)) => out.push(v),
                Ok(None) => {}
                Err(e) => out.push(Violation::new("composition criterion", ids(vec![]), e.to_string(), "computable")),
            }
        }
    }
    out
}
