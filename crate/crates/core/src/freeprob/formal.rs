use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Mutex;

use num_traits::{One, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{SpaceA, SpaceB};
use crate::error::{Error, Result};
use crate::scalar::{int, parse_scalar, random_scalar, Scalar};
use crate::series::{DualScalar, Series, SeriesB};

/// Generator of the free algebra: an algebra generator or a vector generator, by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Alg(usize),
    Vec(usize),
}

/// Monomial in the generators.
pub type Word = Vec<Letter>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Poly(BTreeMap<Word, Scalar>);

impl Poly {
    fn monomial(word: Word) -> Self {
        Poly(BTreeMap::from([(word, Scalar::one())]))
    }

    fn add(&self, other: &Poly) -> Poly {
        let mut out = self.0.clone();
        for (w, c) in &other.0 {
            let entry = out.entry(w.clone()).or_insert_with(Scalar::zero);
            *entry += c;
            if entry.is_zero() {
                out.remove(w);
            }
        }
        Poly(out)
    }

    fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::default();
        }
        Poly(self.0.iter().map(|(w, v)| (w.clone(), v * c)).collect())
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (u, a) in &self.0 {
            for (v, b) in &other.0 {
                let w: Word = u.iter().chain(v).copied().collect();
                out = out.add(&Poly(BTreeMap::from([(w, a * b)])));
            }
        }
        out
    }
}

/// Element of the free algebra on the algebra generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalElem(Poly);

/// Element of the free bimodule spanned by words with exactly one vector generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalVector(Poly);

impl FormalElem {
    /// Terms as `(word, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.0 .0.iter()
    }
}

impl FormalVector {
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.0 .0.iter()
    }
}

/// One freely independent component: an algebra generator, an optional vector
/// generator, and the R-transform of the pair they form.
#[derive(Clone, Debug)]
pub struct Prescription {
    pub algebra: usize,
    pub vector: Option<usize>,
    pub r: SeriesB,
}

#[derive(Clone, Debug)]
enum Source {
    Table(HashMap<Word, Scalar>),
    Cumulants(Vec<Prescription>),
}

/// Type-B space on the free algebra over named generators.
///
/// Moments come either from an explicit table that is total up to a degree
/// bound, or are generated from prescribed cumulants so that distinct
/// components are free. Single moments can be overridden afterwards.
#[derive(Debug)]
pub struct FormalSpaceB {
    algebra: Vec<String>,
    vectors: Vec<String>,
    degree_bound: usize,
    source: Source,
    overrides: HashMap<Word, Scalar>,
    cache: Mutex<HashMap<Word, Scalar>>,
}

impl Clone for FormalSpaceB {
    fn clone(&self) -> Self {
        FormalSpaceB {
            algebra: self.algebra.clone(),
            vectors: self.vectors.clone(),
            degree_bound: self.degree_bound,
            source: self.source.clone(),
            overrides: self.overrides.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
        }
    }
}

fn check_names(algebra: &[String], vectors: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::new();
    for name in algebra.iter().chain(vectors) {
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            return Err(Error::Parse(format!("`{name}` is not a valid generator name")));
        }
        if !seen.insert(name) {
            return Err(Error::Domain(format!("generator `{name}` is declared twice")));
        }
    }
    Ok(())
}

/// Every word of length `1..=bound` with no vector letter or exactly one.
fn all_words(k: usize, v: usize, bound: usize) -> Vec<Word> {
    let mut out = Vec::new();
    let mut layer: Vec<Word> = vec![Vec::new()];
    for len in 1..=bound {
        if k > 0 {
            layer = layer
                .iter()
                .flat_map(|w| (0..k).map(move |i| w.iter().copied().chain([Letter::Alg(i)]).collect()))
                .collect();
        } else {
            layer.clear();
        }
        out.extend(layer.iter().cloned());
        for base in all_alg_words(k, len - 1) {
            for pos in 0..len {
                for j in 0..v {
                    let mut w = base.clone();
                    w.insert(pos, Letter::Vec(j));
                    out.push(w);
                }
            }
        }
    }
    out
}

fn all_alg_words(k: usize, len: usize) -> Vec<Word> {
    let mut layer: Vec<Word> = vec![Vec::new()];
    for _ in 0..len {
        layer = layer
            .iter()
            .flat_map(|w| (0..k).map(move |i| w.iter().copied().chain([Letter::Alg(i)]).collect()))
            .collect();
    }
    layer
}

impl FormalSpaceB {
    fn empty(algebra: Vec<String>, vectors: Vec<String>, degree_bound: usize, source: Source) -> Result<Self> {
        check_names(&algebra, &vectors)?;
        Ok(FormalSpaceB {
            algebra,
            vectors,
            degree_bound,
            source,
            overrides: HashMap::new(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    /// Space given by a moment table, which must cover every word up to `degree_bound`.
    pub fn from_moments(
        algebra: Vec<String>,
        vectors: Vec<String>,
        degree_bound: usize,
        entries: &[(String, Scalar)],
    ) -> Result<Self> {
        let mut space = Self::empty(algebra, vectors, degree_bound, Source::Table(HashMap::new()))?;
        let mut table = HashMap::new();
        for (text, value) in entries {
            let w = space.parse_word(text)?;
            if w.is_empty() {
                if !value.is_one() {
                    return Err(Error::Domain("the empty word has moment 1".into()));
                }
                continue;
            }
            if w.len() > degree_bound {
                return Err(Error::BeyondDegreeBound { word: text.clone(), bound: degree_bound });
            }
            if table.insert(w, value.clone()).is_some() {
                return Err(Error::Domain(format!("moment of `{text}` is given twice")));
            }
        }
        for w in all_words(space.algebra.len(), space.vectors.len(), degree_bound) {
            if !table.contains_key(&w) {
                return Err(Error::MissingMoment(space.format_word(&w)));
            }
        }
        space.source = Source::Table(table);
        Ok(space)
    }

    /// Space with random moments on generators `a1..ak` and `x1..xv`.
    pub fn random_moments<R: Rng + ?Sized>(k: usize, v: usize, degree_bound: usize, rng: &mut R) -> Result<Self> {
        let algebra = (1..=k).map(|i| format!("a{i}")).collect();
        let vectors = (1..=v).map(|j| format!("x{j}")).collect();
        let mut space = Self::empty(algebra, vectors, degree_bound, Source::Table(HashMap::new()))?;
        let table = all_words(k, v, degree_bound).into_iter().map(|w| (w, random_scalar(rng))).collect();
        space.source = Source::Table(table);
        Ok(space)
    }

    /// Space in which each component `(name, vector name, R)` is free from the others
    /// and the pair it forms has R-transform `R`.
    ///
    /// Type-A cumulants of the algebra generator are the first components of `R`;
    /// a type-A′ cumulant of order `n` with the vector in any one slot is the
    /// second component divided by `n`. Cumulants beyond the order of `R` vanish.
    pub fn from_cumulants(components: &[(String, Option<String>, SeriesB)], degree_bound: usize) -> Result<Self> {
        let algebra: Vec<String> = components.iter().map(|c| c.0.clone()).collect();
        let vectors: Vec<String> = components.iter().filter_map(|c| c.1.clone()).collect();
        let mut next_vec = 0;
        let prescriptions = components
            .iter()
            .enumerate()
            .map(|(i, (_, x, r))| {
                let vector = x.as_ref().map(|_| {
                    next_vec += 1;
                    next_vec - 1
                });
                Prescription { algebra: i, vector, r: r.clone() }
            })
            .collect();
        Self::empty(algebra, vectors, degree_bound, Source::Cumulants(prescriptions))
    }

    /// Copy of the space in which the moment of `word` is replaced by `value`.
    pub fn with_override(&self, word: &str, value: Scalar) -> Result<Self> {
        let w = self.parse_word(word)?;
        if w.is_empty() {
            return Err(Error::Domain("the moment of the empty word is fixed".into()));
        }
        let mut out = self.clone();
        out.overrides.insert(w, value);
        out.cache = Mutex::new(HashMap::new());
        Ok(out)
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn algebra_names(&self) -> &[String] {
        &self.algebra
    }

    pub fn vector_names(&self) -> &[String] {
        &self.vectors
    }

    /// Prescribed components, if the space was built from cumulants.
    pub fn prescriptions(&self) -> Option<&[Prescription]> {
        match &self.source {
            Source::Cumulants(p) => Some(p),
            Source::Table(_) => None,
        }
    }

    fn letter(&self, name: &str) -> Result<Letter> {
        if let Some(i) = self.algebra.iter().position(|a| a == name) {
            Ok(Letter::Alg(i))
        } else if let Some(j) = self.vectors.iter().position(|x| x == name) {
            Ok(Letter::Vec(j))
        } else {
            Err(Error::Parse(format!("unknown generator `{name}`")))
        }
    }

    /// Parses a space-separated word such as `a1 x a2`. At most one letter may be a vector.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let w: Word = text.split_whitespace().map(|t| self.letter(t)).collect::<Result<_>>()?;
        if w.iter().filter(|l| matches!(l, Letter::Vec(_))).count() > 1 {
            return Err(Error::Domain(format!("`{text}` contains more than one vector generator")));
        }
        Ok(w)
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        w.iter()
            .map(|l| match *l {
                Letter::Alg(i) => self.algebra[i].as_str(),
                Letter::Vec(j) => self.vectors[j].as_str(),
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn generator(&self, name: &str) -> Result<FormalElem> {
        match self.letter(name)? {
            l @ Letter::Alg(_) => Ok(FormalElem(Poly::monomial(vec![l]))),
            Letter::Vec(_) => Err(Error::Domain(format!("`{name}` is a vector generator"))),
        }
    }

    pub fn vector_generator(&self, name: &str) -> Result<FormalVector> {
        match self.letter(name)? {
            l @ Letter::Vec(_) => Ok(FormalVector(Poly::monomial(vec![l]))),
            Letter::Alg(_) => Err(Error::Domain(format!("`{name}` is an algebra generator"))),
        }
    }

    /// Monomial element named by a word without vector letters.
    pub fn word_elem(&self, text: &str) -> Result<FormalElem> {
        let w = self.parse_word(text)?;
        if w.iter().any(|l| matches!(l, Letter::Vec(_))) {
            return Err(Error::Domain(format!("`{text}` contains a vector generator")));
        }
        Ok(FormalElem(Poly::monomial(w)))
    }

    /// Monomial vector named by a word with exactly one vector letter.
    pub fn word_vector(&self, text: &str) -> Result<FormalVector> {
        let w = self.parse_word(text)?;
        if !w.iter().any(|l| matches!(l, Letter::Vec(_))) {
            return Err(Error::Domain(format!("`{text}` contains no vector generator")));
        }
        Ok(FormalVector(Poly::monomial(w)))
    }

    /// `φ` or `f` of a single word.
    pub fn moment(&self, w: &[Letter]) -> Result<Scalar> {
        if w.is_empty() {
            return Ok(Scalar::one());
        }
        if let Some(v) = self.overrides.get(w) {
            return Ok(v.clone());
        }
        if w.len() > self.degree_bound {
            return Err(Error::BeyondDegreeBound { word: self.format_word(w), bound: self.degree_bound });
        }
        match &self.source {
            Source::Table(t) => t.get(w).cloned().ok_or_else(|| Error::MissingMoment(self.format_word(w))),
            Source::Cumulants(p) => {
                if let Some(v) = self.cache.lock().unwrap().get(w) {
                    return Ok(v.clone());
                }
                let v = generated_moment(p, w)?;
                self.cache.lock().unwrap().insert(w.to_vec(), v.clone());
                Ok(v)
            }
        }
    }

    fn eval(&self, p: &Poly) -> Result<Scalar> {
        p.0.iter().try_fold(Scalar::zero(), |acc, (w, c)| Ok(acc + c * self.moment(w)?))
    }

    /// JSON-friendly description of this space (moment tables list every word up to the bound).
    pub fn describe(&self) -> SpaceDescription {
        match &self.source {
            Source::Table(t) => {
                let mut moments: Vec<MomentEntry> =
                    t.iter().map(|(w, v)| MomentEntry { word: self.format_word(w), value: v.to_string() }).collect();
                moments.sort_by(|a, b| (a.word.len(), &a.word).cmp(&(b.word.len(), &b.word)));
                SpaceDescription {
                    algebra: self.algebra.clone(),
                    vectors: self.vectors.clone(),
                    degree_bound: self.degree_bound,
                    moments,
                    pairs: Vec::new(),
                }
            }
            Source::Cumulants(p) => SpaceDescription {
                algebra: Vec::new(),
                vectors: Vec::new(),
                degree_bound: self.degree_bound,
                moments: self
                    .overrides
                    .iter()
                    .map(|(w, v)| MomentEntry { word: self.format_word(w), value: v.to_string() })
                    .collect(),
                pairs: p
                    .iter()
                    .enumerate()
                    .map(|(i, c)| PairEntry {
                        pair: format!("{}", i + 1),
                        r: c.r.coeffs().iter().map(|d| [d.prime.to_string(), d.double_prime.to_string()]).collect(),
                        a: Some(self.algebra[c.algebra].clone()),
                        x: c.vector.map(|j| self.vectors[j].clone()),
                    })
                    .collect(),
            },
        }
    }

    /// Builds a space from its JSON description.
    pub fn from_description(desc: &SpaceDescription) -> Result<Self> {
        if desc.pairs.is_empty() {
            let entries: Vec<(String, Scalar)> =
                desc.moments.iter().map(|e| Ok((e.word.clone(), parse_scalar(&e.value)?))).collect::<Result<_>>()?;
            let vectors = if desc.vectors.is_empty() { vec!["x".to_string()] } else { desc.vectors.clone() };
            return Self::from_moments(desc.algebra.clone(), vectors, desc.degree_bound, &entries);
        }
        let components = desc
            .pairs
            .iter()
            .map(|p| {
                let coeffs =
                    p.r.iter()
                        .map(|[a, b]| Ok(DualScalar::new(parse_scalar(a)?, parse_scalar(b)?)))
                        .collect::<Result<Vec<_>>>()?;
                let a = p.a.clone().unwrap_or_else(|| format!("a_{}", p.pair));
                let x = p.x.clone().unwrap_or_else(|| format!("x_{}", p.pair));
                Ok((a, Some(x), Series::new(coeffs)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut space = Self::from_cumulants(&components, desc.degree_bound)?;
        for e in &desc.moments {
            space = space.with_override(&e.word, parse_scalar(&e.value)?)?;
        }
        Ok(space)
    }

    /// Parses the JSON text of a [`SpaceDescription`].
    pub fn from_json(text: &str) -> Result<Self> {
        let desc: SpaceDescription = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_description(&desc)
    }
}

/// Moment of a word in a space given by free components.
///
/// The block of a non-crossing partition that contains the first letter only
/// holds letters of the same component; what lies between its letters is an
/// independent sub-word.
fn generated_moment(components: &[Prescription], w: &[Letter]) -> Result<Scalar> {
    let comp: Vec<usize> = w
        .iter()
        .map(|l| {
            components
                .iter()
                .position(|c| match *l {
                    Letter::Alg(i) => c.algebra == i,
                    Letter::Vec(j) => c.vector == Some(j),
                })
                .ok_or_else(|| Error::Structural("letter outside every component".into()))
        })
        .collect::<Result<_>>()?;
    let len = w.len();
    let mut memo: Vec<Vec<Option<Scalar>>> = vec![vec![None; len + 1]; len + 1];
    Ok(segment(components, w, &comp, 0, len, &mut memo))
}

fn segment(
    components: &[Prescription],
    w: &[Letter],
    comp: &[usize],
    i: usize,
    j: usize,
    memo: &mut Vec<Vec<Option<Scalar>>>,
) -> Scalar {
    if i == j {
        return Scalar::one();
    }
    if let Some(v) = &memo[i][j] {
        return v.clone();
    }
    let eligible: Vec<usize> = (i + 1..j).filter(|&t| comp[t] == comp[i]).collect();
    let r = &components[comp[i]].r;
    let mut acc = Scalar::zero();
    for subset in 0usize..1 << eligible.len() {
        let mut block = vec![i];
        block.extend(eligible.iter().enumerate().filter(|(b, _)| subset >> b & 1 == 1).map(|(_, &t)| t));
        let k = block.len();
        if k > r.order() {
            continue;
        }
        let kappa = if block.iter().any(|&t| matches!(w[t], Letter::Vec(_))) {
            &r.coeff(k).double_prime / int(k as i64)
        } else {
            r.coeff(k).prime.clone()
        };
        if kappa.is_zero() {
            continue;
        }
        let mut term = kappa;
        for (t, &start) in block.iter().enumerate() {
            let end = block.get(t + 1).copied().unwrap_or(j);
            term *= segment(components, w, comp, start + 1, end, memo);
            if term.is_zero() {
                break;
            }
        }
        acc += term;
    }
    memo[i][j] = Some(acc.clone());
    acc
}

impl SpaceA for FormalSpaceB {
    type Elem = FormalElem;

    fn unit(&self) -> FormalElem {
        FormalElem(Poly::monomial(Vec::new()))
    }

    fn mul(&self, a: &FormalElem, b: &FormalElem) -> FormalElem {
        FormalElem(a.0.mul(&b.0))
    }

    fn add(&self, a: &FormalElem, b: &FormalElem) -> FormalElem {
        FormalElem(a.0.add(&b.0))
    }

    fn scale(&self, c: &Scalar, a: &FormalElem) -> FormalElem {
        FormalElem(a.0.scale(c))
    }

    fn phi(&self, a: &FormalElem) -> Result<Scalar> {
        self.eval(&a.0)
    }
}

impl SpaceB for FormalSpaceB {
    type Vector = FormalVector;

    fn zero_vector(&self) -> FormalVector {
        FormalVector(Poly::default())
    }

    fn vadd(&self, x: &FormalVector, y: &FormalVector) -> FormalVector {
        FormalVector(x.0.add(&y.0))
    }

    fn vscale(&self, c: &Scalar, x: &FormalVector) -> FormalVector {
        FormalVector(x.0.scale(c))
    }

    fn act(&self, a: &FormalElem, xi: &FormalVector, b: &FormalElem) -> FormalVector {
        FormalVector(a.0.mul(&xi.0).mul(&b.0))
    }

    fn f(&self, xi: &FormalVector) -> Result<Scalar> {
        self.eval(&xi.0)
    }
}

impl fmt::Display for FormalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.0)
    }
}

impl fmt::Display for FormalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.0)
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &Poly) -> fmt::Result {
    if p.0.is_empty() {
        return write!(f, "0");
    }
    for (k, (w, c)) in p.0.iter().enumerate() {
        if k > 0 {
            write!(f, " + ")?;
        }
        let word: Vec<String> = w
            .iter()
            .map(|l| match l {
                Letter::Alg(i) => format!("A{i}"),
                Letter::Vec(j) => format!("V{j}"),
            })
            .collect();
        write!(f, "({c})[{}]", word.join(" "))?;
    }
    Ok(())
}

/// Moment entry of a space file; `value` is `p` or `p/q`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MomentEntry {
    pub word: String,
    #[serde(deserialize_with = "scalar_text")]
    pub value: String,
}

/// Marked pair of a space file given by its R-transform.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PairEntry {
    #[serde(deserialize_with = "scalar_text")]
    pub pair: String,
    #[serde(rename = "R", deserialize_with = "dual_list")]
    pub r: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
}

/// JSON form of a [`FormalSpaceB`]: either a moment table or a list of free pairs.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct SpaceDescription {
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub algebra: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub vectors: Vec<String>,
    pub degree_bound: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub moments: Vec<MomentEntry>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pairs: Vec<PairEntry>,
}

fn value_text(v: serde_json::Value) -> std::result::Result<String, String> {
    match v {
        serde_json::Value::String(s) => Ok(s),
        serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        other => Err(format!("expected an integer or a \"p/q\" string, found {other}")),
    }
}

fn scalar_text<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<String, D::Error> {
    value_text(serde_json::Value::deserialize(d)?).map_err(serde::de::Error::custom)
}

fn dual_list<'de, D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Vec<[String; 2]>, D::Error> {
    let raw: Vec<[serde_json::Value; 2]> = Vec::deserialize(d)?;
    raw.into_iter()
        .map(|[a, b]| Ok([value_text(a)?, value_text(b)?]))
        .collect::<std::result::Result<_, String>>()
        .map_err(serde::de::Error::custom)
}
