//! Deterministic constructors for the cubic graph families used by the
//! property suites, plus gadgets and seeded random cubic graphs.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{EdgeId, EdgeSet, Graph, Vertex};

/// Attempts allowed before random cubic generation gives up.
pub const RANDOM_RETRY_BUDGET: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("{family} expects {expected}, got {got:?}")]
    BadParams {
        family: Family,
        expected: &'static str,
        got: Vec<usize>,
    },
    #[error("{0} requires a seed")]
    MissingSeed(Family),
    #[error("no simple connected cubic graph on {n} vertices after {attempts} attempts")]
    RetryBudgetExceeded { n: usize, attempts: usize },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("cannot parse family spec `{0}`")]
    BadSpec(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    K4,
    K33,
    Cube,
    Petersen,
    /// Circular ladder `C_k x K_2`.
    Prism,
    /// (3,6)-fullerene tube with two adjacent triangles at each end.
    T36,
    /// (4,6)-fullerene tube with three quadrangles at each end.
    Tube46,
    TorusHex,
    KleinHex,
    BridgedDoubleGadget,
    NoPmGadget,
    RandomCubic,
    /// Two random cubic graphs, one edge of each subdivided, joined by a bridge.
    BridgedRandom,
}

impl Family {
    pub const ALL: [Family; 13] = [
        Family::K4,
        Family::K33,
        Family::Cube,
        Family::Petersen,
        Family::Prism,
        Family::T36,
        Family::Tube46,
        Family::TorusHex,
        Family::KleinHex,
        Family::BridgedDoubleGadget,
        Family::NoPmGadget,
        Family::RandomCubic,
        Family::BridgedRandom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::K4 => "k4",
            Family::K33 => "k33",
            Family::Cube => "cube",
            Family::Petersen => "petersen",
            Family::Prism => "prism",
            Family::T36 => "t36",
            Family::Tube46 => "tube46",
            Family::TorusHex => "torus_hex",
            Family::KleinHex => "klein_hex",
            Family::BridgedDoubleGadget => "bridged_double_gadget",
            Family::NoPmGadget => "no_pm_gadget",
            Family::RandomCubic => "random_cubic",
            Family::BridgedRandom => "bridged_random",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::Prism | Family::T36 | Family::Tube46 => 1,
            Family::RandomCubic | Family::BridgedRandom => 1,
            Family::TorusHex | Family::KleinHex => 2,
            _ => 0,
        }
    }

    pub fn needs_seed(self) -> bool {
        matches!(self, Family::RandomCubic | Family::BridgedRandom)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Family {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GenerateError::UnknownFamily(s.to_string()))
    }
}

/// A family member: family name, integer parameters and optional seed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
    pub seed: Option<u64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[usize]) -> Self {
        FamilySpec {
            family,
            params: params.to_vec(),
            seed: None,
        }
    }

    pub fn seeded(family: Family, params: &[usize], seed: u64) -> Self {
        FamilySpec {
            family,
            params: params.to_vec(),
            seed: Some(seed),
        }
    }

    /// Checks arity and parameter ranges.
    pub fn validate(&self) -> Result<(), GenerateError> {
        let bad = |expected| GenerateError::BadParams {
            family: self.family,
            expected,
            got: self.params.clone(),
        };
        let p = &self.params;
        if p.len() != self.family.arity() {
            return Err(bad(match self.family.arity() {
                0 => "no parameters",
                1 => "one parameter",
                _ => "two parameters",
            }));
        }
        match self.family {
            Family::Prism if p[0] < 3 => return Err(bad("k >= 3")),
            Family::T36 if p[0] < 1 => return Err(bad("n >= 1")),
            Family::TorusHex | Family::KleinHex if p[0] < 2 || p[1] < 2 => {
                return Err(bad("p >= 2 and q >= 2"))
            }
            Family::RandomCubic | Family::BridgedRandom if p[0] < 4 || p[0] % 2 == 1 => {
                return Err(bad("an even n >= 4"))
            }
            _ => {}
        }
        if self.family.needs_seed() && self.seed.is_none() {
            return Err(GenerateError::MissingSeed(self.family));
        }
        Ok(())
    }

    /// Vertex count of the generated graph, without building it.
    pub fn vertex_count(&self) -> usize {
        let p = &self.params;
        match self.family {
            Family::K4 => 4,
            Family::K33 => 6,
            Family::Cube => 8,
            Family::Petersen => 10,
            Family::Prism => 2 * p[0],
            Family::T36 => 4 * p[0] + 4,
            Family::Tube46 => 6 * p[0] + 8,
            Family::TorusHex | Family::KleinHex => 2 * p[0] * p[1],
            Family::BridgedDoubleGadget => 10,
            Family::NoPmGadget => 16,
            Family::RandomCubic => p[0],
            Family::BridgedRandom => 2 * p[0] + 2,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.family.name())?;
        for p in &self.params {
            write!(f, ":{p}")?;
        }
        if let Some(seed) = self.seed {
            write!(f, "@{seed}")?;
        }
        Ok(())
    }
}

/// Parses `name[:p1[:p2]][@seed]`, e.g. `t36:3`, `torus_hex:3:3`,
/// `random_cubic:10@7`.
impl FromStr for FamilySpec {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GenerateError::BadSpec(s.to_string());
        let (body, seed) = match s.split_once('@') {
            Some((body, seed)) => (body, Some(seed.parse::<u64>().map_err(|_| bad())?)),
            None => (s, None),
        };
        let mut parts = body.split(':');
        let family: Family = parts.next().ok_or_else(bad)?.parse()?;
        let params = parts
            .map(|p| p.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        let spec = FamilySpec {
            family,
            params,
            seed,
        };
        spec.validate()?;
        Ok(spec)
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Graph, GenerateError> {
    spec.validate()?;
    let p = &spec.params;
    let g = match spec.family {
        Family::K4 => k4(),
        Family::K33 => k33(),
        Family::Cube => cube(),
        Family::Petersen => petersen(),
        Family::Prism => prism(p[0]),
        Family::T36 => t36(p[0]),
        Family::Tube46 => tube46(p[0]),
        Family::TorusHex => hex_surface(p[0], p[1], false),
        Family::KleinHex => hex_surface(p[0], p[1], true),
        Family::BridgedDoubleGadget => bridged_double_gadget(),
        Family::NoPmGadget => no_pm_gadget(),
        Family::RandomCubic => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.unwrap_or_default());
            random_cubic_with(p[0], &mut rng)?
        }
        Family::BridgedRandom => {
            let mut rng = ChaCha8Rng::seed_from_u64(spec.seed.unwrap_or_default());
            let left = random_cubic_with(p[0], &mut rng)?;
            let right = random_cubic_with(p[0], &mut rng)?;
            let le = rng.random_range(0..left.edge_count());
            let re = rng.random_range(0..right.edge_count());
            bridge_join(&left, le, &right, re)
        }
    };
    Ok(g)
}

fn build(n: usize, pairs: &[(Vertex, Vertex)]) -> Graph {
    Graph::new(n, pairs).expect("generator wiring is simple")
}

pub fn k4() -> Graph {
    build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn k33() -> Graph {
    let pairs: Vec<_> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    build(6, &pairs)
}

/// Vertices are 3-bit words, adjacent when they differ in one bit.
pub fn cube() -> Graph {
    let mut pairs = Vec::new();
    for v in 0..8usize {
        for bit in [1, 2, 4] {
            if v & bit == 0 {
                pairs.push((v, v | bit));
            }
        }
    }
    build(8, &pairs)
}

/// Outer 5-cycle 0..5, spokes `i - i+5`, inner pentagram on 5..10.
pub fn petersen() -> Graph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        pairs.push((i, i + 5));
    }
    for i in 0..5 {
        pairs.push((5 + i, 5 + (i + 2) % 5));
    }
    build(10, &pairs)
}

pub fn prism(k: usize) -> Graph {
    let mut pairs = Vec::new();
    for i in 0..k {
        pairs.push((i, (i + 1) % k));
        pairs.push((k + i, k + (i + 1) % k));
        pairs.push((i, k + i));
    }
    build(2 * k, &pairs)
}

/// (3,6)-fullerene tube on `4n + 4` vertices.
///
/// Each cap is `{a, b, c, d}` with triangles `abc` and `abd` sharing `ab`;
/// its exits are `c` and `d`. Between the caps sit `n - 1` rings, each a
/// 4-cycle `r0 r1 r2 r3` entered at `r0, r2` and left from `r1, r3`. Every
/// consecutive pair of layers bounds two hexagons.
pub fn t36(n: usize) -> Graph {
    let v = 4 * n + 4;
    let mut pairs = Vec::with_capacity(6 * n + 6);
    let cap = |pairs: &mut Vec<_>, a: usize| {
        let (b, c, d) = (a + 1, a + 2, a + 3);
        pairs.extend([(a, b), (a, c), (b, c), (a, d), (b, d)]);
    };
    cap(&mut pairs, 0);
    let mut exits = (2, 3);
    for ring in 0..n.saturating_sub(1) {
        let r = 4 + 4 * ring;
        for i in 0..4 {
            pairs.push((r + i, r + (i + 1) % 4));
        }
        pairs.push((exits.0, r));
        pairs.push((exits.1, r + 2));
        exits = (r + 1, r + 3);
    }
    let last = v - 4;
    cap(&mut pairs, last);
    pairs.push((exits.0, last + 2));
    pairs.push((exits.1, last + 3));
    build(v, &pairs)
}

/// (4,6)-fullerene tube on `6n + 8` vertices.
///
/// Hexagonal rings `C_0..=C_n`; cap centre `0` joins the even positions of
/// `C_0`, the far centre joins the odd positions of `C_n`, and odd position
/// `2i + 1` of `C_j` joins even position `2i` of `C_{j+1}`. `tube46(0)` is the
/// cube.
pub fn tube46(n: usize) -> Graph {
    let v = 6 * n + 8;
    let far = v - 1;
    let ring = |j: usize, pos: usize| 1 + 6 * j + pos % 6;
    let mut pairs = Vec::new();
    for pos in [0, 2, 4] {
        pairs.push((0, ring(0, pos)));
    }
    for j in 0..=n {
        for pos in 0..6 {
            pairs.push((ring(j, pos), ring(j, pos + 1)));
        }
        for i in 0..3 {
            let from = ring(j, 2 * i + 1);
            let to = if j < n { ring(j + 1, 2 * i) } else { far };
            pairs.push((from, to));
        }
    }
    build(v, &pairs)
}

/// Hexagonal lattice on a `p x q` grid of two-vertex cells. Cell `(i, j)`
/// holds `A = 2(iq + j)` and `B = A + 1`; `A(i,j)` meets `B(i,j)`,
/// `B(i-1,j)` and `B(i,j-1)`, indices mod `p` and `q`. With `twisted`, the
/// wrap in `j` reflects `i -> p-1-i`, giving a Klein-bottle surface.
fn hex_surface(p: usize, q: usize, twisted: bool) -> Graph {
    let a = |i: usize, j: usize| 2 * (i * q + j);
    let b = |i: usize, j: usize| 2 * (i * q + j) + 1;
    let mut pairs = Vec::with_capacity(3 * p * q);
    for i in 0..p {
        for j in 0..q {
            pairs.push((a(i, j), b(i, j)));
            pairs.push((a(i, j), b((i + p - 1) % p, j)));
            let side = if j > 0 {
                b(i, j - 1)
            } else if twisted {
                b(p - 1 - i, q - 1)
            } else {
                b(i, q - 1)
            };
            pairs.push((a(i, j), side));
        }
    }
    build(2 * p * q, &pairs)
}

pub fn torus_hex(p: usize, q: usize) -> Graph {
    hex_surface(p, q, false)
}

pub fn klein_hex(p: usize, q: usize) -> Graph {
    hex_surface(p, q, true)
}

/// `K4` with edge `01` subdivided by vertex 4: the only degree-2 vertex.
pub fn subdivided_k4() -> Graph {
    build(5, &[(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Subdivides `left_edge` of `left` and `right_edge` of `right` and joins the
/// two new vertices by a bridge. Left vertices keep their ids, the left
/// subdivision vertex follows them, then the right graph shifted, then the
/// right subdivision vertex. The bridge is the last edge.
pub fn bridge_join(left: &Graph, left_edge: EdgeId, right: &Graph, right_edge: EdgeId) -> Graph {
    let nl = left.vertex_count();
    let nr = right.vertex_count();
    let sl = nl;
    let offset = nl + 1;
    let sr = offset + nr;
    let mut pairs = Vec::new();
    let mut splice = |g: &Graph, cut: EdgeId, shift: usize, mid: usize| {
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            if id == cut {
                pairs.push((u + shift, mid));
                pairs.push((mid, v + shift));
            } else {
                pairs.push((u + shift, v + shift));
            }
        }
    };
    splice(left, left_edge, 0, sl);
    splice(right, right_edge, offset, sr);
    pairs.push((sl, sr));
    build(nl + nr + 2, &pairs)
}

/// Two subdivided `K4`s joined by a bridge at their degree-2 vertices.
pub fn bridged_double_gadget() -> Graph {
    bridge_join(&k4(), 0, &k4(), 0)
}

/// Hub vertex 0 joined to the degree-2 vertex of three subdivided `K4`s
/// (vertices `1..=5`, `6..=10`, `11..=15`). `G - {0}` has three odd components.
pub fn no_pm_gadget() -> Graph {
    let gadget = subdivided_k4();
    let mut pairs = Vec::new();
    for copy in 0..3 {
        let shift = 1 + 5 * copy;
        pairs.extend(gadget.edges().iter().map(|&(u, v)| (u + shift, v + shift)));
        pairs.push((0, shift + 4));
    }
    build(16, &pairs)
}

/// Random connected simple cubic graph from the pairing model, rejecting
/// loops, multi-edges and disconnected outcomes.
pub fn random_cubic(n: usize, seed: u64) -> Result<Graph, GenerateError> {
    generate(&FamilySpec::seeded(Family::RandomCubic, &[n], seed))
}

fn random_cubic_with<R: Rng>(n: usize, rng: &mut R) -> Result<Graph, GenerateError> {
    let mut points: Vec<Vertex> = (0..3 * n).map(|p| p / 3).collect();
    for _ in 0..RANDOM_RETRY_BUDGET {
        points.shuffle(rng);
        let pairs: Vec<_> = points.chunks(2).map(|c| (c[0], c[1])).collect();
        if let Ok(g) = Graph::new(n, &pairs) {
            if g.is_connected(&EdgeSet::empty()) {
                return Ok(g);
            }
        }
    }
    Err(GenerateError::RetryBudgetExceeded {
        n,
        attempts: RANDOM_RETRY_BUDGET,
    })
}

/// Erdős–Rényi `G(n, p)` graph, deterministic per seed. Not necessarily
/// connected or cubic; used to stress the matching code.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                pairs.push((u, v));
            }
        }
    }
    build(n, &pairs)
}

/// Every named family member with at most `max_n` vertices, then `seeds`
/// random cubic graphs per even order in `4..=max_n` and `seeds` bridged
/// random graphs per admissible side order. Order is deterministic.
pub fn corpus(max_n: usize, seeds: u64) -> Vec<(FamilySpec, Graph)> {
    let mut specs = Vec::new();
    for family in [Family::K4, Family::K33, Family::Cube, Family::Petersen] {
        specs.push(FamilySpec::new(family, &[]));
    }
    specs.extend(
        (3..)
            .take_while(|k| 2 * k <= max_n)
            .map(|k| FamilySpec::new(Family::Prism, &[k])),
    );
    specs.extend(
        (1..)
            .take_while(|n| 4 * n + 4 <= max_n)
            .map(|n| FamilySpec::new(Family::T36, &[n])),
    );
    specs.extend(
        (0..)
            .take_while(|n| 6 * n + 8 <= max_n)
            .map(|n| FamilySpec::new(Family::Tube46, &[n])),
    );
    for (family, symmetric) in [(Family::TorusHex, true), (Family::KleinHex, false)] {
        for p in (2..).take_while(|p| 4 * p <= max_n) {
            let first_q = if symmetric { p } else { 2 };
            for q in (first_q..).take_while(|q| 2 * p * q <= max_n) {
                specs.push(FamilySpec::new(family, &[p, q]));
            }
        }
    }
    specs.push(FamilySpec::new(Family::BridgedDoubleGadget, &[]));
    specs.push(FamilySpec::new(Family::NoPmGadget, &[]));
    for n in (4..=max_n).step_by(2) {
        for seed in 0..seeds {
            specs.push(FamilySpec::seeded(Family::RandomCubic, &[n], seed));
        }
    }
    for side in (4..).step_by(2).take_while(|s| 2 * s + 2 <= max_n) {
        for seed in 0..seeds {
            specs.push(FamilySpec::seeded(Family::BridgedRandom, &[side], seed));
        }
    }
    specs
        .into_iter()
        .filter(|s| s.vertex_count() <= max_n)
        .map(|s| {
            let g = generate(&s).expect("corpus specs are valid");
            (s, g)
        })
        .collect()
}
