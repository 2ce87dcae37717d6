//! Finite copying of a pre-frame: every point is copied `2κ+1` times and every ordered pair of
//! copies is assigned to exactly one relation index, so that the index relations partition the
//! square, respect converses, project onto the original relations and lift along `⊕`.
//!
//! Relation indices run over `1..=κ`; `conv` pairs each index with its converse index.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exec::Exec;
use crate::semantics::Relation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CopyError {
    #[error("kappa must be positive")]
    ZeroKappa,
    #[error("a pre-frame needs at least one point")]
    NoPoints,
    #[error("duplicate point `{0}`")]
    DuplicatePoint(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("index {0} is outside 1..=kappa")]
    BadIndex(usize),
    #[error("{0} is outside the carrier 0..={1}")]
    OutOfCarrier(usize, usize),
    #[error("conv is not an involution at index {0}")]
    NotInvolution(usize),
    #[error("relation {conv} is not the converse of relation {index}")]
    ConverseMismatch { index: usize, conv: usize },
    #[error("pair ({0}, {1}) lies in no relation")]
    Uncovered(String, String),
    #[error("point `{0}` has no symmetric index relating it to itself")]
    NoSymmetricDiagonal(String),
    #[error("choice for ({0}, {1}) is not admissible")]
    BadChoice(String, String),
    #[error("invalid file: {0}")]
    Json(String),
}

/// Arithmetic on the carrier `0..=2κ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IndexArithmetic {
    kappa: usize,
}

impl IndexArithmetic {
    pub fn new(kappa: usize) -> Result<Self, CopyError> {
        if kappa == 0 {
            return Err(CopyError::ZeroKappa);
        }
        Ok(IndexArithmetic { kappa })
    }

    pub fn kappa(self) -> usize {
        self.kappa
    }

    /// `2κ + 1`, the number of copies of each point.
    pub fn modulus(self) -> usize {
        2 * self.kappa + 1
    }

    fn check(self, m: usize) -> Result<usize, CopyError> {
        if m < self.modulus() {
            Ok(m)
        } else {
            Err(CopyError::OutOfCarrier(m, 2 * self.kappa))
        }
    }

    fn diff(self, m: usize, n: usize) -> usize {
        (m + self.modulus() - n) % self.modulus()
    }

    pub fn oplus(self, m: usize, n: usize) -> Result<usize, CopyError> {
        Ok((self.check(m)? + self.check(n)?) % self.modulus())
    }

    pub fn ominus(self, m: usize, n: usize) -> Result<usize, CopyError> {
        let (m, n) = (self.check(m)?, self.check(n)?);
        Ok(self.diff(m, n).min(self.diff(n, m)))
    }

    pub fn lessdot(self, m: usize, n: usize) -> Result<bool, CopyError> {
        let (m, n) = (self.check(m)?, self.check(n)?);
        Ok(self.diff(n, m) < self.diff(m, n))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreFrame {
    points: Vec<String>,
    kappa: usize,
    conv: Vec<usize>,
    r0: Vec<Relation>,
}

impl PreFrame {
    /// Builds and validates a pre-frame. `conv[i-1]` and `r0[i-1]` describe index `i`.
    pub fn new(points: Vec<String>, conv: Vec<usize>, r0: Vec<Relation>) -> Result<Self, CopyError> {
        let kappa = conv.len();
        if kappa == 0 {
            return Err(CopyError::ZeroKappa);
        }
        if points.is_empty() {
            return Err(CopyError::NoPoints);
        }
        let mut seen = HashMap::new();
        for p in &points {
            if seen.insert(p.as_str(), ()).is_some() {
                return Err(CopyError::DuplicatePoint(p.clone()));
            }
        }
        if r0.len() != kappa {
            return Err(CopyError::BadIndex(r0.len().max(kappa)));
        }
        let pf = PreFrame { points, kappa, conv, r0 };
        pf.validate()?;
        Ok(pf)
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn arithmetic(&self) -> IndexArithmetic {
        IndexArithmetic { kappa: self.kappa }
    }

    /// The converse index of `i`.
    pub fn conv(&self, i: usize) -> usize {
        self.conv[i - 1]
    }

    pub fn r0(&self, i: usize) -> &Relation {
        &self.r0[i - 1]
    }

    pub fn indices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.kappa
    }

    fn validate(&self) -> Result<(), CopyError> {
        let n = self.points.len();
        for i in self.indices() {
            let c = self.conv(i);
            if c == 0 || c > self.kappa {
                return Err(CopyError::BadIndex(c));
            }
            if self.conv(c) != i {
                return Err(CopyError::NotInvolution(i));
            }
            if self.r0(i).universe() != n {
                return Err(CopyError::BadIndex(i));
            }
        }
        for i in self.indices() {
            if *self.r0(self.conv(i)) != self.r0(i).converse() {
                return Err(CopyError::ConverseMismatch { index: i, conv: self.conv(i) });
            }
        }
        for u in 0..n {
            for v in 0..n {
                if !self.indices().any(|i| self.r0(i).contains(u, v)) {
                    return Err(CopyError::Uncovered(self.points[u].clone(), self.points[v].clone()));
                }
            }
            if !self.indices().any(|i| self.conv(i) == i && self.r0(i).contains(u, u)) {
                return Err(CopyError::NoSymmetricDiagonal(self.points[u].clone()));
            }
        }
        Ok(())
    }

    /// Indices admissible as the choice for `(u, v)`.
    fn admissible(&self, u: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.indices().filter(move |&i| self.r0(i).contains(u, v) && (u != v || self.conv(i) == i))
    }

    pub fn from_json(text: &str) -> Result<Self, CopyError> {
        let file: PreFrameFile = serde_json::from_str(text).map_err(|e| CopyError::Json(e.to_string()))?;
        PreFrame::from_file(&file)
    }

    pub fn from_file(file: &PreFrameFile) -> Result<Self, CopyError> {
        let n = file.points.len();
        let index: HashMap<&str, usize> = file.points.iter().enumerate().map(|(i, p)| (p.as_str(), i)).collect();
        let lookup = |p: &str| index.get(p).copied().ok_or_else(|| CopyError::UnknownPoint(p.to_string()));
        let check_index = |i: usize| if (1..=file.kappa).contains(&i) { Ok(i) } else { Err(CopyError::BadIndex(i)) };
        let mut conv = vec![0; file.kappa];
        for (&i, &c) in &file.conv {
            conv[check_index(i)? - 1] = check_index(c)?;
        }
        if let Some(i) = conv.iter().position(|c| *c == 0) {
            return Err(CopyError::Json(format!("conv has no entry for index {}", i + 1)));
        }
        let mut r0 = vec![Relation::empty(n); file.kappa];
        for (&i, pairs) in &file.r0 {
            let rel = &mut r0[check_index(i)? - 1];
            for [u, v] in pairs {
                rel.insert(lookup(u)?, lookup(v)?);
            }
        }
        PreFrame::new(file.points.clone(), conv, r0)
    }

    pub fn to_file(&self) -> PreFrameFile {
        PreFrameFile {
            points: self.points.clone(),
            kappa: self.kappa,
            conv: self.indices().map(|i| (i, self.conv(i))).collect(),
            r0: self
                .indices()
                .map(|i| {
                    let pairs = self.r0(i).pairs().map(|(u, v)| [self.points[u].clone(), self.points[v].clone()]);
                    (i, pairs.collect())
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("pre-frame serializes")
    }
}

/// On-disk pre-frame format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreFrameFile {
    pub points: Vec<String>,
    pub kappa: usize,
    pub conv: BTreeMap<usize, usize>,
    pub r0: BTreeMap<usize, Vec<[String; 2]>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChoicePolicy {
    /// Smallest admissible index; the orientation `(u, v)` with `u` listed no later than `v`.
    Deterministic,
    /// Uniform admissible index and orientation from a seeded stream.
    Seeded(u64),
}

/// The chosen index for every ordered pair of points, and the chosen orientation of every
/// unordered pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Choices {
    /// `index[u][v]`
    pub index: Vec<Vec<usize>>,
    /// Whether `(u, v)` is the chosen orientation; exactly one of `(u, v)`, `(v, u)` is.
    pub oriented: Vec<Vec<bool>>,
}

pub fn choose(pre: &PreFrame, policy: ChoicePolicy) -> Result<Choices, CopyError> {
    let n = pre.points.len();
    let mut rng = match policy {
        ChoicePolicy::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        ChoicePolicy::Deterministic => None,
    };
    let mut index = vec![vec![0; n]; n];
    let mut oriented = vec![vec![false; n]; n];
    for u in 0..n {
        for v in 0..n {
            let options: Vec<usize> = pre.admissible(u, v).collect();
            let pick = match &mut rng {
                _ if options.is_empty() => {
                    return Err(if u == v {
                        CopyError::NoSymmetricDiagonal(pre.points[u].clone())
                    } else {
                        CopyError::Uncovered(pre.points[u].clone(), pre.points[v].clone())
                    })
                }
                Some(rng) => *options.choose(rng).expect("non-empty"),
                None => options[0],
            };
            index[u][v] = pick;
            if u == v {
                oriented[u][v] = true;
            } else if u < v {
                let forward = match &mut rng {
                    Some(rng) => rng.random_bool(0.5),
                    None => true,
                };
                oriented[u][v] = forward;
                oriented[v][u] = !forward;
            }
        }
    }
    Ok(Choices { index, oriented })
}

fn check_choices(pre: &PreFrame, ch: &Choices) -> Result<(), CopyError> {
    let n = pre.points.len();
    let shaped = ch.index.len() == n
        && ch.index.iter().all(|row| row.len() == n)
        && ch.oriented.iter().all(|row| row.len() == n);
    if !shaped || ch.oriented.len() != n {
        return Err(CopyError::Json("choices do not match the pre-frame".into()));
    }
    for u in 0..n {
        for v in 0..n {
            let bad = !pre.admissible(u, v).any(|i| i == ch.index[u][v])
                || if u == v { !ch.oriented[u][u] } else { ch.oriented[u][v] == ch.oriented[v][u] };
            if bad {
                return Err(CopyError::BadChoice(pre.points[u].clone(), pre.points[v].clone()));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopiedFrame {
    kappa: usize,
    /// Copies `(point, level)`, point-major.
    pub w: Vec<(usize, usize)>,
    /// `r[i-1]` is the relation of index `i` on `w`.
    pub r: Vec<Relation>,
    pub choices: Choices,
}

impl CopiedFrame {
    /// Position of copy `(point, level)` in `w`.
    pub fn position(&self, point: usize, level: usize) -> usize {
        point * (2 * self.kappa + 1) + level
    }

    pub fn r(&self, i: usize) -> &Relation {
        &self.r[i - 1]
    }

    pub fn to_file(&self, pre: &PreFrame) -> CopiedFrameFile {
        let copy = |x: usize| {
            let (p, l) = self.w[x];
            (pre.points[p].clone(), l)
        };
        let n = pre.points.len();
        CopiedFrameFile {
            w: self.w.iter().map(|&(p, l)| (pre.points[p].clone(), l)).collect(),
            r: (1..=self.kappa).map(|i| (i, self.r(i).pairs().map(|(x, y)| (copy(x), copy(y))).collect())).collect(),
            choices: ChoicesFile {
                index: (0..n)
                    .flat_map(|u| (0..n).map(move |v| (u, v)))
                    .map(|(u, v)| (pre.points[u].clone(), pre.points[v].clone(), self.choices.index[u][v]))
                    .collect(),
                orientation: (0..n)
                    .flat_map(|u| (0..n).map(move |v| (u, v)))
                    .filter(|&(u, v)| self.choices.oriented[u][v])
                    .map(|(u, v)| [pre.points[u].clone(), pre.points[v].clone()])
                    .collect(),
            },
        }
    }

    pub fn to_json(&self, pre: &PreFrame) -> String {
        serde_json::to_string_pretty(&self.to_file(pre)).expect("frame serializes")
    }
}

/// A copy `(point, level)`.
pub type CopyId = (String, usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopiedFrameFile {
    pub w: Vec<CopyId>,
    pub r: BTreeMap<usize, Vec<(CopyId, CopyId)>>,
    pub choices: ChoicesFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoicesFile {
    /// `(u, v, index)` for every ordered pair.
    pub index: Vec<(String, String, usize)>,
    /// The chosen orientation of every unordered pair, diagonal included.
    pub orientation: Vec<[String; 2]>,
}

/// The index that receives the pair of copies `((u, m), (v, l))`.
fn assign(pre: &PreFrame, ch: &Choices, u: usize, m: usize, v: usize, l: usize) -> usize {
    let ar = pre.arithmetic();
    if m != l {
        let n = ar.ominus(m, l).expect("levels are in the carrier");
        let c = pre.conv(n);
        match (pre.r0(n).contains(u, v), pre.r0(c).contains(u, v)) {
            (true, true) => return if ar.lessdot(m, l).expect("in carrier") { n } else { c },
            (true, false) => return n,
            (false, true) => return c,
            (false, false) => {}
        }
    }
    if ch.oriented[u][v] {
        ch.index[u][v]
    } else {
        pre.conv(ch.index[v][u])
    }
}

pub fn build_copies(pre: &PreFrame, choices: &Choices) -> Result<CopiedFrame, CopyError> {
    build_copies_with(pre, choices, Exec::default())
}

/// Assigns every pair of copies to an index; rows are computed independently.
pub fn build_copies_with(pre: &PreFrame, choices: &Choices, exec: Exec) -> Result<CopiedFrame, CopyError> {
    check_choices(pre, choices)?;
    let levels = pre.arithmetic().modulus();
    let w: Vec<(usize, usize)> = (0..pre.points.len()).flat_map(|p| (0..levels).map(move |l| (p, l))).collect();
    let size = w.len();
    let rows: Vec<Vec<usize>> = exec.map_range(0..size as u64, |x| {
        let (u, m) = w[x as usize];
        w.iter().map(|&(v, l)| assign(pre, choices, u, m, v, l)).collect()
    });
    let mut r = vec![Relation::empty(size); pre.kappa];
    for (x, row) in rows.iter().enumerate() {
        for (y, &i) in row.iter().enumerate() {
            r[i - 1].insert(x, y);
        }
    }
    Ok(CopiedFrame { kappa: pre.kappa, w, r, choices: choices.clone() })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ContractProperty {
    Coverage,
    Disjointness,
    Converse,
    Projection,
    Lifting,
}

impl fmt::Display for ContractProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContractProperty::Coverage => "coverage",
            ContractProperty::Disjointness => "disjointness",
            ContractProperty::Converse => "converse",
            ContractProperty::Projection => "projection",
            ContractProperty::Lifting => "lifting",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyCheck {
    pub property: ContractProperty,
    pub holds: bool,
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContractReport {
    pub checks: Vec<PropertyCheck>,
}

impl ContractReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failed(&self) -> impl Iterator<Item = &PropertyCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Checks the five properties of a copied frame against its pre-frame.
pub fn verify_contract(cf: &CopiedFrame, pre: &PreFrame) -> ContractReport {
    let ar = pre.arithmetic();
    let size = cf.w.len();
    let name = |x: usize| {
        let (p, l) = cf.w[x];
        format!("({}, {l})", pre.points[p])
    };
    let pair = |x: usize, y: usize| format!("({}, {})", name(x), name(y));
    let all_pairs = || (0..size).flat_map(|x| (0..size).map(move |y| (x, y)));
    let indices = || 1..=cf.r.len();

    let coverage = all_pairs().find(|&(x, y)| !indices().any(|i| cf.r(i).contains(x, y))).map(|(x, y)| pair(x, y));
    let disjoint = all_pairs().find_map(|(x, y)| {
        let hits: Vec<usize> = indices().filter(|&i| cf.r(i).contains(x, y)).collect();
        (hits.len() > 1).then(|| format!("{} in relations {hits:?}", pair(x, y)))
    });
    let converse = indices().find_map(|i| {
        let c = pre.conv(i);
        all_pairs()
            .find(|&(x, y)| cf.r(i).contains(x, y) != cf.r(c).contains(y, x))
            .map(|(x, y)| format!("{} against relations {i} and {c}", pair(x, y)))
    });
    let projection = indices().find_map(|i| {
        cf.r(i)
            .pairs()
            .find(|&(x, y)| !pre.r0(i).contains(cf.w[x].0, cf.w[y].0))
            .map(|(x, y)| format!("{} in relation {i}", pair(x, y)))
    });
    let lifting = indices().find_map(|nu| {
        pre.r0(nu).pairs().find_map(|(u, v)| {
            (0..ar.modulus()).find_map(|mu| {
                let target = ar.oplus(mu, nu).ok()?;
                let (x, y) = (cf.position(u, mu), cf.position(v, target));
                (!cf.r(nu).contains(x, y)).then(|| format!("{} missing from relation {nu}", pair(x, y)))
            })
        })
    });
    let check = |property, counterexample: Option<String>| PropertyCheck {
        property,
        holds: counterexample.is_none(),
        counterexample,
    };
    ContractReport {
        checks: vec![
            check(ContractProperty::Coverage, coverage),
            check(ContractProperty::Disjointness, disjoint),
            check(ContractProperty::Converse, converse),
            check(ContractProperty::Projection, projection),
            check(ContractProperty::Lifting, lifting),
        ],
    }
}

fn involutions(kappa: usize) -> Vec<Vec<usize>> {
    fn go(conv: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = conv.iter().position(|c| *c == 0) else {
            out.push(conv.clone());
            return;
        };
        conv[i] = i + 1;
        go(conv, out);
        for j in i + 1..conv.len() {
            if conv[j] == 0 {
                conv[i] = j + 1;
                conv[j] = i + 1;
                go(conv, out);
                conv[j] = 0;
            }
        }
        conv[i] = 0;
    }
    let mut out = Vec::new();
    go(&mut vec![0; kappa], &mut out);
    out
}

/// Every valid pre-frame with the given number of points and indices.
pub fn all_preframes(points: usize, kappa: usize) -> Vec<PreFrame> {
    let names: Vec<String> = (0..points).map(|i| format!("u{i}")).collect();
    let cells = points * points;
    let mut out = Vec::new();
    for conv in involutions(kappa) {
        let reps: Vec<usize> = (1..=kappa).filter(|&i| i <= conv[i - 1]).collect();
        let total = 1u64 << (cells * reps.len());
        for code in 0..total {
            let mut r0 = vec![Relation::empty(points); kappa];
            for (k, &i) in reps.iter().enumerate() {
                let bits = code >> (k * cells);
                let rel = Relation::from_pairs(
                    points,
                    (0..cells).filter(|c| bits >> c & 1 == 1).map(|c| (c / points, c % points)),
                );
                r0[conv[i - 1] - 1] = rel.converse();
                r0[i - 1] = rel;
            }
            if let Ok(pf) = PreFrame::new(names.clone(), conv.clone(), r0) {
                out.push(pf);
            }
        }
    }
    out
}

/// A random valid pre-frame with `1..=max_points` points and `1..=max_kappa` indices.
pub fn random_preframe(max_points: usize, max_kappa: usize, seed: u64) -> PreFrame {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=max_points);
    let kappa = rng.random_range(1..=max_kappa);
    let mut order: Vec<usize> = (1..=kappa).collect();
    order.shuffle(&mut rng);
    let fixed = rng.random_range(1..=kappa);
    let mut conv = vec![0; kappa];
    for &i in &order[..fixed] {
        conv[i - 1] = i;
    }
    let mut rest = order[fixed..].iter();
    while let Some(&i) = rest.next() {
        match rest.next() {
            Some(&j) => {
                conv[i - 1] = j;
                conv[j - 1] = i;
            }
            None => conv[i - 1] = i,
        }
    }
    let symmetric: Vec<usize> = (1..=kappa).filter(|&i| conv[i - 1] == i).collect();
    let density = rng.random_range(0.0..0.6);
    let mut r0 = vec![Relation::empty(n); kappa];
    let add = |r0: &mut Vec<Relation>, i: usize, u: usize, v: usize| {
        r0[i - 1].insert(u, v);
        r0[conv[i - 1] - 1].insert(v, u);
    };
    for i in 1..=kappa {
        for u in 0..n {
            for v in 0..n {
                if rng.random_bool(density) {
                    add(&mut r0, i, u, v);
                }
            }
        }
    }
    for u in 0..n {
        let i = *symmetric.choose(&mut rng).expect("at least one symmetric index");
        add(&mut r0, i, u, u);
        for v in 0..n {
            if !(1..=kappa).any(|i| r0[i - 1].contains(u, v)) {
                let i = rng.random_range(1..=kappa);
                add(&mut r0, i, u, v);
            }
        }
    }
    let names = (0..n).map(|i| format!("u{i}")).collect();
    PreFrame::new(names, conv, r0).expect("generated pre-frames are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_examples() {
        let a = IndexArithmetic::new(1).unwrap();
        assert_eq!(a.ominus(1, 0), Ok(1));
        assert_eq!(a.ominus(2, 0), Ok(1));
        assert_eq!(a.ominus(2, 2), Ok(0));
        let b = IndexArithmetic::new(2).unwrap();
        assert_eq!(b.oplus(3, 2), Ok(0));
        assert_eq!(b.ominus(0, 3), Ok(2));
        for m in 0..5 {
            assert_eq!(b.lessdot(m, m), Ok(false));
        }
        assert_eq!(b.oplus(5, 0), Err(CopyError::OutOfCarrier(5, 4)));
        assert_eq!(IndexArithmetic::new(0), Err(CopyError::ZeroKappa));
    }

    fn single() -> PreFrame {
        PreFrame::new(vec!["x".into(), "y".into()], vec![1], vec![Relation::full(2)]).unwrap()
    }

    #[test]
    fn single_relation_takes_everything() {
        let pre = single();
        let cf = build_copies(&pre, &choose(&pre, ChoicePolicy::Deterministic).unwrap()).unwrap();
        assert_eq!(cf.w.len(), 6);
        assert_eq!(cf.r(1), &Relation::full(6));
        assert!(verify_contract(&cf, &pre).all_hold());
    }

    #[test]
    fn preframe_validation() {
        let p = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        // no symmetric index on the diagonal
        let r = Relation::full(1);
        assert_eq!(
            PreFrame::new(p(&["x"]), vec![2, 1], vec![r.clone(), r.clone()]),
            Err(CopyError::NoSymmetricDiagonal("x".into()))
        );
        assert_eq!(PreFrame::new(p(&["x"]), vec![2, 2], vec![r.clone(), r.clone()]), Err(CopyError::NotInvolution(1)));
        let half = Relation::from_pairs(2, [(0, 1), (0, 0), (1, 1)]);
        assert_eq!(
            PreFrame::new(p(&["x", "y"]), vec![1], vec![half]),
            Err(CopyError::ConverseMismatch { index: 1, conv: 1 })
        );
        let diag = Relation::from_pairs(2, [(0, 0), (1, 1)]);
        assert_eq!(
            PreFrame::new(p(&["x", "y"]), vec![1], vec![diag]),
            Err(CopyError::Uncovered("x".into(), "y".into()))
        );
    }

    #[test]
    fn corrupted_frame_is_caught() {
        let pre = random_preframe(3, 3, 11);
        let mut cf = build_copies(&pre, &choose(&pre, ChoicePolicy::Deterministic).unwrap()).unwrap();
        let (i, (x, y)) = (1..=pre.kappa()).find_map(|i| cf.r(i).pairs().next().map(|p| (i, p))).unwrap();
        let j = if i == pre.kappa() { 1 } else { i + 1 };
        let mut moved = cf.r[i - 1].clone();
        moved = Relation::from_pairs(moved.universe(), moved.pairs().filter(|p| *p != (x, y)));
        cf.r[i - 1] = moved;
        cf.r[j - 1].insert(x, y);
        let report = verify_contract(&cf, &pre);
        assert!(!report.all_hold());
    }

    #[test]
    fn json_round_trip() {
        let pre = random_preframe(4, 3, 5);
        assert_eq!(PreFrame::from_json(&pre.to_json()).unwrap(), pre);
        let cf = build_copies(&pre, &choose(&pre, ChoicePolicy::Seeded(3)).unwrap()).unwrap();
        let text = cf.to_json(&pre);
        let back: CopiedFrameFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cf.to_file(&pre));
    }

    #[test]
    fn exhaustive_counts() {
        // one point, one index: only the full symmetric relation is valid
        assert_eq!(all_preframes(1, 1).len(), 1);
        assert!(all_preframes(2, 2).len() > 10);
    }

    #[test]
    fn seeded_choices_are_admissible() {
        for seed in 0..200 {
            let pre = random_preframe(5, 4, seed);
            let ch = choose(&pre, ChoicePolicy::Seeded(seed)).unwrap();
            assert!(check_choices(&pre, &ch).is_ok());
        }
    }
}
