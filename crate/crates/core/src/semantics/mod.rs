//! Finite models `(W, R, v)` and the truth definition.
//!
//! Variables missing from a model's valuations denote the empty set (or empty relation).
//! Empty domains are allowed.

mod bits;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use bits::{PointSet, Relation};

use crate::syntax::{Formula, QuantPair, RelTerm, SetTerm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("duplicate point `{0}` in domain")]
    DuplicatePoint(String),
    #[error("point `{point}` used in valuation of `{var}` is not in the domain")]
    UnknownPoint { var: String, point: String },
    #[error("invalid model file: {0}")]
    Json(String),
}

/// A finite model. Points are opaque ids, ordered as given.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    domain: Vec<String>,
    index: HashMap<String, usize>,
    rel: BTreeMap<String, Relation>,
    set: BTreeMap<String, PointSet>,
}

/// The set and relational variables a model or a search ranges over.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Vocabulary {
    pub set_vars: Vec<String>,
    pub rel_vars: Vec<String>,
}

impl Vocabulary {
    pub fn new<S: Into<String>>(set_vars: impl IntoIterator<Item = S>, rel_vars: impl IntoIterator<Item = S>) -> Self {
        Vocabulary {
            set_vars: set_vars.into_iter().map(Into::into).collect(),
            rel_vars: rel_vars.into_iter().map(Into::into).collect(),
        }
    }

    /// Exactly the variables occurring in `f`, sorted.
    pub fn of_formula(f: &Formula) -> Self {
        let mut sets = BTreeSet::new();
        f.collect_set_vars(&mut sets);
        Vocabulary { set_vars: sets.into_iter().collect(), rel_vars: f.rel_vars().into_iter().collect() }
    }

    pub fn merge(&self, other: &Vocabulary) -> Vocabulary {
        let sets: BTreeSet<&String> = self.set_vars.iter().chain(&other.set_vars).collect();
        let rels: BTreeSet<&String> = self.rel_vars.iter().chain(&other.rel_vars).collect();
        Vocabulary { set_vars: sets.into_iter().cloned().collect(), rel_vars: rels.into_iter().cloned().collect() }
    }
}

/// On-disk model format.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelFile {
    pub domain: Vec<String>,
    #[serde(default)]
    pub rel: BTreeMap<String, Vec<[String; 2]>>,
    #[serde(default)]
    pub set: BTreeMap<String, Vec<String>>,
}

impl Model {
    pub fn new<S: Into<String>>(domain: impl IntoIterator<Item = S>) -> Result<Self, ModelError> {
        let domain: Vec<String> = domain.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(domain.len());
        for (i, p) in domain.iter().enumerate() {
            if index.insert(p.clone(), i).is_some() {
                return Err(ModelError::DuplicatePoint(p.clone()));
            }
        }
        Ok(Model { domain, index, rel: BTreeMap::new(), set: BTreeMap::new() })
    }

    /// A model whose points are named `w0, w1, ...`.
    pub fn with_size(n: usize) -> Self {
        Model::new((0..n).map(|i| format!("w{i}"))).expect("generated names are distinct")
    }

    pub fn size(&self) -> usize {
        self.domain.len()
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn point_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn set_valuation(&self, var: &str) -> PointSet {
        self.set.get(var).cloned().unwrap_or_else(|| PointSet::empty(self.size()))
    }

    pub fn rel_valuation(&self, var: &str) -> Relation {
        self.rel.get(var).cloned().unwrap_or_else(|| Relation::empty(self.size()))
    }

    pub fn set_vars(&self) -> impl Iterator<Item = &str> {
        self.set.keys().map(String::as_str)
    }

    pub fn rel_vars(&self) -> impl Iterator<Item = &str> {
        self.rel.keys().map(String::as_str)
    }

    pub fn assign_set(&mut self, var: impl Into<String>, value: PointSet) {
        assert_eq!(value.universe(), self.size());
        self.set.insert(var.into(), value);
    }

    pub fn assign_rel(&mut self, var: impl Into<String>, value: Relation) {
        assert_eq!(value.universe(), self.size());
        self.rel.insert(var.into(), value);
    }

    /// Assigns a set variable by point ids.
    pub fn assign_set_ids(&mut self, var: &str, ids: &[&str]) -> Result<(), ModelError> {
        let idx = ids.iter().map(|p| self.lookup(var, p)).collect::<Result<Vec<_>, _>>()?;
        self.assign_set(var, PointSet::from_indices(self.size(), idx));
        Ok(())
    }

    /// Assigns a relational variable by pairs of point ids.
    pub fn assign_rel_ids(&mut self, var: &str, pairs: &[(&str, &str)]) -> Result<(), ModelError> {
        let idx = pairs
            .iter()
            .map(|(x, y)| Ok((self.lookup(var, x)?, self.lookup(var, y)?)))
            .collect::<Result<Vec<_>, ModelError>>()?;
        self.assign_rel(var, Relation::from_pairs(self.size(), idx));
        Ok(())
    }

    fn lookup(&self, var: &str, point: &str) -> Result<usize, ModelError> {
        self.point_index(point)
            .ok_or_else(|| ModelError::UnknownPoint { var: var.to_string(), point: point.to_string() })
    }

    /// The submodel induced on `keep` (indices into the domain, order preserved as given).
    pub fn restrict(&self, keep: &[usize]) -> Model {
        let mut out = Model::new(keep.iter().map(|&i| self.domain[i].clone())).expect("distinct points");
        let n = keep.len();
        for (name, s) in &self.set {
            let sub = PointSet::from_indices(n, (0..n).filter(|&j| s.contains(keep[j])));
            out.set.insert(name.clone(), sub);
        }
        for (name, r) in &self.rel {
            let mut sub = Relation::empty(n);
            for (i, &x) in keep.iter().enumerate() {
                for (j, &y) in keep.iter().enumerate() {
                    if r.contains(x, y) {
                        sub.insert(i, j);
                    }
                }
            }
            out.rel.insert(name.clone(), sub);
        }
        out
    }

    pub fn from_file(file: &ModelFile) -> Result<Model, ModelError> {
        let mut m = Model::new(file.domain.iter().cloned())?;
        for (var, pts) in &file.set {
            let ids: Vec<&str> = pts.iter().map(String::as_str).collect();
            m.assign_set_ids(var, &ids)?;
        }
        for (var, pairs) in &file.rel {
            let ids: Vec<(&str, &str)> = pairs.iter().map(|[x, y]| (x.as_str(), y.as_str())).collect();
            m.assign_rel_ids(var, &ids)?;
        }
        Ok(m)
    }

    /// Serialisable form; members and pairs follow domain order.
    pub fn to_file(&self) -> ModelFile {
        let name = |i: usize| self.domain[i].clone();
        ModelFile {
            domain: self.domain.clone(),
            rel: self
                .rel
                .iter()
                .map(|(k, r)| (k.clone(), r.pairs().map(|(x, y)| [name(x), name(y)]).collect()))
                .collect(),
            set: self.set.iter().map(|(k, s)| (k.clone(), s.iter().map(name).collect())).collect(),
        }
    }

    pub fn from_json(text: &str) -> Result<Model, ModelError> {
        let file: ModelFile = serde_json::from_str(text).map_err(|e| ModelError::Json(e.to_string()))?;
        Model::from_file(&file)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("model serialises")
    }
}

/// The model with empty domain and empty valuations.
pub fn empty_model() -> Model {
    Model::with_size(0)
}

/// A random model over `vocab` with `n` points. Every membership and every edge is included
/// independently with probability `density`. Deterministic in `seed`.
pub fn random_model(n: usize, vocab: &Vocabulary, seed: u64, density: f64) -> Model {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_model_with(n, vocab, &mut rng, density)
}

pub fn random_model_with<R: Rng + ?Sized>(n: usize, vocab: &Vocabulary, rng: &mut R, density: f64) -> Model {
    let density = density.clamp(0.0, 1.0);
    let mut m = Model::with_size(n);
    for v in &vocab.set_vars {
        let s = PointSet::from_indices(n, (0..n).filter(|_| rng.random_bool(density)));
        m.assign_set(v.clone(), s);
    }
    for v in &vocab.rel_vars {
        let mut r = Relation::empty(n);
        for x in 0..n {
            for y in 0..n {
                if rng.random_bool(density) {
                    r.insert(x, y);
                }
            }
        }
        m.assign_rel(v.clone(), r);
    }
    m
}

pub fn eval_set_term(m: &Model, t: &SetTerm) -> PointSet {
    match t {
        SetTerm::Var(v) => m.set_valuation(v),
        SetTerm::Zero => PointSet::empty(m.size()),
        SetTerm::One => PointSet::full(m.size()),
        SetTerm::Complement(x) => eval_set_term(m, x).complement(),
        SetTerm::Meet(l, r) => eval_set_term(m, l).intersection(&eval_set_term(m, r)),
        SetTerm::Join(l, r) => eval_set_term(m, l).union(&eval_set_term(m, r)),
    }
}

pub fn eval_rel_term(m: &Model, t: &RelTerm) -> Relation {
    match t {
        RelTerm::Var(v) => m.rel_valuation(v),
        RelTerm::Zero => Relation::empty(m.size()),
        RelTerm::One => Relation::full(m.size()),
        RelTerm::Complement(x) => eval_rel_term(m, x).complement(),
        RelTerm::Meet(l, r) => eval_rel_term(m, l).intersection(&eval_rel_term(m, r)),
        RelTerm::Join(l, r) => eval_rel_term(m, l).union(&eval_rel_term(m, r)),
        RelTerm::Converse(x) => eval_rel_term(m, x).converse(),
    }
}

/// Truth of `Q1Q2(a,b)[alpha]` given the extensions of its arguments.
pub fn eval_quantified(q: QuantPair, a: &PointSet, b: &PointSet, rel: &Relation) -> bool {
    let mut subjects = a.iter();
    match q {
        QuantPair::EE => subjects.any(|x| rel.row(x).intersects(b)),
        QuantPair::AE => subjects.all(|x| rel.row(x).intersects(b)),
        QuantPair::AA => subjects.all(|x| b.is_subset(rel.row(x))),
        QuantPair::EA => subjects.any(|x| b.is_subset(rel.row(x))),
    }
}

pub fn eval_formula(m: &Model, f: &Formula) -> bool {
    match f {
        Formula::Leq(a, b) => eval_set_term(m, a).is_subset(&eval_set_term(m, b)),
        Formula::Atom(q, a, b, rel) => {
            eval_quantified(*q, &eval_set_term(m, a), &eval_set_term(m, b), &eval_rel_term(m, rel))
        }
        Formula::Not(x) => !eval_formula(m, x),
        Formula::And(l, r) => eval_formula(m, l) && eval_formula(m, r),
        Formula::Or(l, r) => eval_formula(m, l) || eval_formula(m, r),
        Formula::Implies(l, r) => !eval_formula(m, l) || eval_formula(m, r),
        Formula::Iff(l, r) => eval_formula(m, l) == eval_formula(m, r),
        Formula::Top => true,
        Formula::Bottom => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::{parse_formula, parse_rel_term, parse_set_term};

    fn f(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    fn small_model() -> Model {
        let mut m = Model::new(["1", "2"]).unwrap();
        m.assign_set_ids("a", &["1"]).unwrap();
        m.assign_set_ids("b", &["2"]).unwrap();
        m.assign_rel_ids("r", &[("1", "2")]).unwrap();
        m
    }

    #[test]
    fn set_term_identities() {
        let m = random_model(5, &Vocabulary::new(["a"], ["r"]), 7, 0.5);
        assert_eq!(eval_set_term(&m, &parse_set_term("-0").unwrap()), PointSet::full(5));
        assert!(eval_set_term(&m, &parse_set_term("a * -a").unwrap()).is_empty());
    }

    #[test]
    fn rel_term_identities() {
        let m = random_model(4, &Vocabulary::new(["a"], ["r"]), 3, 0.5);
        let r = eval_rel_term(&m, &parse_rel_term("r").unwrap());
        assert_eq!(eval_rel_term(&m, &parse_rel_term("r^^").unwrap()), r);
        assert_eq!(eval_rel_term(&m, &parse_rel_term("r + -r").unwrap()), Relation::full(4));
    }

    #[test]
    fn atoms_in_a_small_model() {
        let m = small_model();
        assert!(eval_formula(&m, &f("AA(a,b)[r]")));
        assert!(!eval_formula(&m, &f("EA(b,a)[r]")));
        assert!(eval_formula(&m, &f("EE(a,b)[r] & AE(a,b)[r] & EA(a,b)[r]")));
        assert!(!eval_formula(&m, &f("EE(b,a)[r]")));
        assert!(eval_formula(&m, &f("EE(b,a)[r^]")));
    }

    #[test]
    fn empty_model_semantics() {
        let m = empty_model();
        assert!(eval_formula(&m, &f("a <= b")));
        assert!(eval_formula(&m, &f("AE(a,b)[r]")));
        assert!(eval_formula(&m, &f("AA(a,b)[r]")));
        assert!(!eval_formula(&m, &f("EE(a,b)[r]")));
        assert!(!eval_formula(&m, &f("EA(a,b)[r]")));
    }

    #[test]
    fn random_model_properties() {
        let vocab = Vocabulary::new(["a", "b"], ["r"]);
        assert_eq!(random_model(0, &vocab, 1, 0.5).size(), 0);
        assert_eq!(random_model(6, &vocab, 99, 0.3), random_model(6, &vocab, 99, 0.3));
        let dense = random_model(3, &vocab, 5, 1.0);
        assert_eq!(dense.set_valuation("a"), PointSet::full(3));
        assert_eq!(dense.rel_valuation("r"), Relation::full(3));
    }

    #[test]
    fn json_round_trip_and_defaults() {
        let text = r#"{"domain": ["x", "y"], "rel": {"r": [["y", "x"]]}, "set": {"a": ["y"]}}"#;
        let m = Model::from_json(text).unwrap();
        assert!(eval_formula(&m, &f("EE(a,1)[r] & b <= 0")));
        assert_eq!(Model::from_json(&m.to_json()).unwrap(), m);
        let bad = r#"{"domain": ["x"], "set": {"a": ["z"]}}"#;
        assert!(matches!(Model::from_json(bad), Err(ModelError::UnknownPoint { .. })));
        assert!(matches!(Model::from_json(r#"{"domain": ["x", "x"]}"#), Err(ModelError::DuplicatePoint(_))));
    }

    #[test]
    fn restriction_keeps_term_values_consistent() {
        let m = random_model(6, &Vocabulary::new(["a", "b"], ["r", "s"]), 11, 0.5);
        let keep = [0, 2, 5];
        let sub = m.restrict(&keep);
        let t = parse_rel_term("-(r*s^) + r").unwrap();
        let full = eval_rel_term(&m, &t);
        let part = eval_rel_term(&sub, &t);
        for (i, &x) in keep.iter().enumerate() {
            for (j, &y) in keep.iter().enumerate() {
                assert_eq!(full.contains(x, y), part.contains(i, j));
            }
        }
    }
}
