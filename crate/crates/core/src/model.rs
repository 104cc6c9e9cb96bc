//! Finite model of the zero-set intersection graph of C(X) for a discrete
//! n-point space X.
//!
//! On a discrete space every subset is a zero set, so a function is known to
//! the graph only through `Z(f)`. A vertex is therefore a pair
//! `(zero set, copy)`: the copies stand in for distinct functions sharing one
//! zero set (`f`, `2f`, `3f`, ...). The constant zero function is the only
//! function vanishing everywhere, so the full class has a single copy.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest space the bitmask representation accepts.
pub const MAX_POINTS: usize = 16;

/// Default class multiplicity; four copies are enough for every
/// scalar-multiple construction the checks rely on.
pub const DEFAULT_MULTIPLICITY: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteSpace {
    n: usize,
}

impl FiniteSpace {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_POINTS {
            return Err(Error::InvalidConfig(format!(
                "space size must be in 1..={MAX_POINTS}, got {n}"
            )));
        }
        Ok(Self { n })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> ZeroSet {
        ZeroSet((1u32 << self.n) - 1)
    }

    /// Checks that `s` is a legal vertex zero set of this space.
    pub fn contains(&self, s: ZeroSet) -> bool {
        s.0 != 0 && s.0 & !self.full().0 == 0
    }
}

/// Nonempty set of points, stored as a bitmask (bit `i` = point `i`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ZeroSet(u32);

impl ZeroSet {
    pub fn from_bits(bits: u32) -> Result<Self> {
        if bits == 0 {
            return Err(Error::InvalidConfig("zero set must be nonempty".into()));
        }
        Ok(Self(bits))
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Result<Self> {
        let mut bits = 0u32;
        for p in points {
            if p >= MAX_POINTS {
                return Err(Error::InvalidConfig(format!("point {p} out of range")));
            }
            bits |= 1 << p;
        }
        Self::from_bits(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn points(self) -> impl Iterator<Item = usize> {
        (0..MAX_POINTS).filter(move |&i| self.0 & (1 << i) != 0)
    }

    pub fn meets(self, other: ZeroSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union_bits(self, other: ZeroSet) -> u32 {
        self.0 | other.0
    }

    pub fn is_subset_of(self, other: ZeroSet) -> bool {
        self.0 & !other.0 == 0
    }
}

impl fmt::Display for ZeroSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in self.points() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// `X \ s`, or `None` when `s` is the whole space (the zero function has no
/// complementary zero set).
pub fn complement_class(space: FiniteSpace, s: ZeroSet) -> Option<ZeroSet> {
    let rest = space.full().0 & !s.0;
    (rest != 0).then_some(ZeroSet(rest))
}

/// One function of the model: its zero set and a copy index starting at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FunctionVertex {
    pub zero_set: ZeroSet,
    pub copy: usize,
}

impl FunctionVertex {
    pub fn new(zero_set: ZeroSet, copy: usize) -> Self {
        Self { zero_set, copy }
    }
}

impl fmt::Display for FunctionVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.zero_set, self.copy)
    }
}

impl FromStr for FunctionVertex {
    type Err = Error;

    /// Parses the wire label `"S:k"`, e.g. `"0,2:3"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse { what: "vertex label", input: s.to_string() };
        let (set, copy) = s.trim().rsplit_once(':').ok_or_else(bad)?;
        let copy: usize = copy.parse().map_err(|_| bad())?;
        if copy == 0 {
            return Err(bad());
        }
        let points = set
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let zero_set = ZeroSet::from_points(points).map_err(|_| bad())?;
        Ok(Self { zero_set, copy })
    }
}

/// Vertices sharing a zero set are adjacent to each other; distinct classes
/// are adjacent exactly when their zero sets meet.
pub fn adjacent(u: &FunctionVertex, v: &FunctionVertex) -> bool {
    u != v && u.zero_set.meets(v.zero_set)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModelConfig {
    pub n: usize,
    pub m: usize,
    pub include_zero: bool,
}

impl ModelConfig {
    pub fn new(n: usize, m: usize, include_zero: bool) -> Self {
        Self { n, m, include_zero }
    }

    pub fn validate(&self) -> Result<()> {
        FiniteSpace::new(self.n)?;
        if self.m == 0 {
            return Err(Error::InvalidConfig("multiplicity m must be at least 1".into()));
        }
        Ok(())
    }

    pub fn space(&self) -> Result<FiniteSpace> {
        FiniteSpace::new(self.n)
    }

    /// `(2^n - 2) * m + [include_zero]`.
    pub fn vertex_count(&self) -> usize {
        ((1usize << self.n) - 2) * self.m + usize::from(self.include_zero)
    }
}

impl fmt::Display for ModelConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} m={}", self.n, self.m)?;
        if self.include_zero {
            f.write_str(" +zero")?;
        }
        Ok(())
    }
}

/// Every vertex of the model, ordered by zero-set bitmask and then copy.
pub fn enumerate_vertices(config: &ModelConfig) -> Result<Vec<FunctionVertex>> {
    config.validate()?;
    let full = config.space()?.full().bits();
    let mut out = Vec::with_capacity(config.vertex_count());
    for bits in 1..full {
        for copy in 1..=config.m {
            out.push(FunctionVertex::new(ZeroSet(bits), copy));
        }
    }
    if config.include_zero {
        out.push(FunctionVertex::new(ZeroSet(full), 1));
    }
    Ok(out)
}

/// Γ(C(X)) for a configuration, with the vertex back-mapping.
#[derive(Debug, Clone)]
pub struct ZeroSetModel {
    config: ModelConfig,
    space: FiniteSpace,
    vertices: Vec<FunctionVertex>,
    graph: Graph,
}

pub fn build_gamma(config: &ModelConfig) -> Result<ZeroSetModel> {
    let vertices = enumerate_vertices(config)?;
    let labels = vertices.iter().map(ToString::to_string).collect();
    let graph = Graph::from_predicate(labels, |i, j| adjacent(&vertices[i], &vertices[j]));
    Ok(ZeroSetModel { config: *config, space: config.space()?, vertices, graph })
}

impl ZeroSetModel {
    pub fn config(&self) -> &ModelConfig {
        &self.config
    }

    pub fn space(&self) -> FiniteSpace {
        self.space
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn vertices(&self) -> &[FunctionVertex] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> Result<&FunctionVertex> {
        self.vertices.get(id).ok_or(Error::UnknownVertex(id))
    }

    pub fn zero_set(&self, id: usize) -> ZeroSet {
        self.vertices[id].zero_set
    }

    pub fn id_of(&self, v: &FunctionVertex) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    pub fn id_of_label(&self, label: &str) -> Result<usize> {
        let v: FunctionVertex = label.parse()?;
        self.id_of(&v).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// Index of the constant zero function, if the model includes it.
    pub fn zero_vertex(&self) -> Option<usize> {
        self.config.include_zero.then(|| self.vertices.len() - 1)
    }

    pub fn is_zero_vertex(&self, id: usize) -> bool {
        self.vertices[id].zero_set == self.space.full()
    }

    /// Distinct zero sets present in the model, in vertex order.
    pub fn classes(&self) -> Vec<ZeroSet> {
        let mut out: Vec<ZeroSet> = self.vertices.iter().map(|v| v.zero_set).collect();
        out.dedup();
        out
    }
}
