use std::fmt::Debug;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{FinCat, FunctorSearch, Functor};

/// A category in which arrows, squares and lifting problems live.
pub trait Ambient: Send + Sync {
    type Obj: Clone + Debug + Send + Sync;
    type Arr: Clone + Debug + PartialEq + Send + Sync;

    fn dom(&self, f: &Self::Arr) -> Self::Obj;
    fn cod(&self, f: &Self::Arr) -> Self::Obj;
    fn id(&self, x: &Self::Obj) -> Self::Arr;
    /// g ∘ f
    fn compose(&self, g: &Self::Arr, f: &Self::Arr) -> Result<Self::Arr>;
    fn obj_eq(&self, x: &Self::Obj, y: &Self::Obj) -> bool;
    /// Hash of an arrow, equal for equal arrows.
    fn key(&self, f: &Self::Arr) -> u64;
    fn describe(&self, f: &Self::Arr) -> String;
    /// All arrows x → y, at most `limit` of them.
    fn hom(&self, x: &Self::Obj, y: &Self::Obj, limit: usize) -> Vec<Self::Arr>;

    /// A located difference between two parallel arrows, if any.
    fn diff(&self, f: &Self::Arr, g: &Self::Arr) -> Option<(String, String)> {
        if f == g {
            None
        } else {
            Some((self.describe(f), self.describe(g)))
        }
    }

    fn compose_all(&self, arrows: &[&Self::Arr]) -> Result<Self::Arr> {
        let (first, rest) = arrows.split_last().ok_or_else(|| Error::Malformed("empty composite".into()))?;
        let mut acc = (*first).clone();
        for g in rest.iter().rev() {
            acc = self.compose(g, &acc)?;
        }
        Ok(acc)
    }
}

/// Cat restricted to finite categories.
#[derive(Clone, Copy, Debug, Default)]
pub struct CatAmbient;

impl Ambient for CatAmbient {
    type Obj = Arc<FinCat>;
    type Arr = Functor;

    fn dom(&self, f: &Functor) -> Arc<FinCat> {
        f.src().clone()
    }

    fn cod(&self, f: &Functor) -> Arc<FinCat> {
        f.tgt().clone()
    }

    fn id(&self, x: &Arc<FinCat>) -> Functor {
        Functor::identity(x)
    }

    fn compose(&self, g: &Functor, f: &Functor) -> Result<Functor> {
        g.after(f)
    }

    fn obj_eq(&self, x: &Arc<FinCat>, y: &Arc<FinCat>) -> bool {
        crate::fincat::same_cat(x, y)
    }

    fn key(&self, f: &Functor) -> u64 {
        f.fingerprint()
    }

    fn describe(&self, f: &Functor) -> String {
        let objs: Vec<String> = f.src().objects().map(|x| format!("{}->{}", f.src().obj_label(x), f.tgt().obj_label(f.ob(x)))).collect();
        format!("{{{}}}", objs.join(", "))
    }

    fn hom(&self, x: &Arc<FinCat>, y: &Arc<FinCat>, limit: usize) -> Vec<Functor> {
        FunctorSearch::new(x, y).limit(limit).run()
    }

    fn diff(&self, f: &Functor, g: &Functor) -> Option<(String, String)> {
        f.first_difference(g)
    }
}
