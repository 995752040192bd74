//! Interpretations of base types and postulated adapters, read from JSON.

use indexmap::IndexMap;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

/// `types` lists the elements of each base type. `adapters` gives, for each
/// postulate, a table keyed by its printed `src->tgt` signature.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    #[serde(default)]
    pub types: IndexMap<String, Vec<String>>,
    #[serde(default)]
    pub adapters: IndexMap<String, IndexMap<String, IndexMap<String, String>>>,
}

impl Binding {
    pub fn from_json(s: &str) -> Result<Binding, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("bindings serialize")
    }

    /// Bases with the given sizes, elements named after the lowercased base
    /// (`a0`, `a1`, ...), and random total tables for postulates between
    /// bases.
    pub fn random(rng: &mut impl Rng, sizes: &[(&str, usize)], posts: &[(&str, &str, &str)]) -> Binding {
        let mut b = Binding::default();
        for (name, n) in sizes {
            let stem = name.to_lowercase();
            b.types.insert(name.to_string(), (0..*n).map(|i| format!("{stem}{i}")).collect());
        }
        for (name, s, t) in posts {
            let (Some(src), Some(tgt)) = (b.types.get(*s), b.types.get(*t)) else { continue };
            let table = src.iter().map(|x| (x.clone(), tgt.choose(rng).expect("nonempty base").clone())).collect();
            b.adapters.entry(name.to_string()).or_default().insert(format!("{s}->{t}"), table);
        }
        b
    }
}
