use serde_json::{json, Value};

use super::cat::FinCat;
use super::functor::Functor;

pub fn cat_to_json(c: &FinCat) -> Value {
    let objects: Vec<String> = c.obj_labels().iter().map(|l| l.to_string()).collect();
    let morphisms: Vec<Value> = c
        .morphisms()
        .map(|m| json!({"label": c.mor_label(m).to_string(), "dom": c.dom(m), "cod": c.cod(m)}))
        .collect();
    let mut comp = Vec::new();
    for f in c.morphisms() {
        for g in c.out(c.cod(f)) {
            comp.push(json!([g, f, c.compose(g, f)]));
        }
    }
    json!({"objects": objects, "morphisms": morphisms, "composition": comp})
}

pub fn functor_to_json(f: &Functor) -> Value {
    json!({
        "src": f.src().fingerprint(),
        "tgt": f.tgt().fingerprint(),
        "obj": f.obj_table(),
        "mor": f.mor_table(),
    })
}
