//! Degree-based edge-sum topological indices.
//!
//! Every index is a sum over edges of a symmetric contribution in the two
//! endpoint values (degrees, or neighbour-degree sums for the fourth ABC
//! and fifth GA variants). Contributions that are rational are accumulated
//! exactly; a single irrational term degrades the whole sum to compensated
//! floating point, summed in canonical edge order so results are
//! reproducible bit for bit.

use std::fmt;

use rayon::prelude::*;

use crate::construct::Family;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{partition, PartitionMode};
use crate::poly::{rat, rat_int, rat_to_f64, Rat};

/// A single edge contribution: exact where the arithmetic permits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Term {
    Exact(Rat),
    Approx(f64),
}

impl Term {
    fn to_f64(self) -> f64 {
        match self {
            Term::Exact(q) => rat_to_f64(q),
            Term::Approx(x) => x,
        }
    }
}

/// An index value: exact rational when every contribution was rational,
/// floating point otherwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Value {
    Exact(Rat),
    Approx(f64),
}

impl Value {
    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(q) => rat_to_f64(*q),
            Value::Approx(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn as_exact(&self) -> Option<Rat> {
        match self {
            Value::Exact(q) => Some(*q),
            Value::Approx(_) => None,
        }
    }

    fn scale_rat(self, k: Rat) -> Value {
        match self {
            Value::Exact(q) => Value::Exact(q * k),
            Value::Approx(x) => Value::Approx(x * rat_to_f64(k)),
        }
    }
}

/// Fixed-width significant-digit formatting for floats: plain decimal
/// notation, no exponent, no trailing separator surprises.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

impl fmt::Display for Value {
    /// Exact values print as integers or `numer/denom`; approximate ones
    /// with 12 significant digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => {
                if q.is_integer() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Value::Approx(x) => f.write_str(&format_significant(*x, 12)),
        }
    }
}

/// A computed index value with optional provenance tags.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexValue {
    pub name: String,
    pub value: Value,
    pub family: Option<Family>,
    pub r: Option<u32>,
}

impl IndexValue {
    fn new(name: &str, value: Value) -> Self {
        IndexValue {
            name: name.to_string(),
            value,
            family: None,
            r: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IndexKind {
    /// General Randic index, sum of (du*dv)^alpha.
    Randic { alpha: f64 },
    /// Forgotten index, sum of du^2 + dv^2.
    Forgotten,
    /// First Zagreb index, sum of du + dv.
    FirstZagreb,
    /// Second Zagreb index, sum of du*dv.
    SecondZagreb,
    /// Balaban index: m/(m-n+2) times the Randic sum at alpha = -1/2.
    Balaban,
    /// Redefined Zagreb indices.
    ReZG1,
    ReZG2,
    ReZG3,
    /// Harmonic index, sum of 2/(du+dv).
    Harmonic,
    /// Atom-bond connectivity index, sum of sqrt((du+dv-2)/(du*dv)).
    AtomBond,
    /// Geometric-arithmetic index, sum of 2*sqrt(du*dv)/(du+dv).
    GeometricArithmetic,
    /// Augmented Zagreb index, sum of (du*dv/(du+dv-2))^3.
    AugmentedZagreb,
    /// Fourth ABC index: the ABC form on neighbour-degree sums.
    AtomBond4,
    /// Fifth GA index: the GA form on neighbour-degree sums.
    GeometricArithmetic5,
}

/// A named index: its contribution function plus which endpoint values it
/// consumes.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexSpec {
    pub name: String,
    pub kind: IndexKind,
}

impl IndexSpec {
    pub fn new(name: &str, kind: IndexKind) -> Self {
        IndexSpec {
            name: name.to_string(),
            kind,
        }
    }

    /// Degree-based or degree-sum-based.
    pub fn mode(&self) -> PartitionMode {
        match self.kind {
            IndexKind::AtomBond4 | IndexKind::GeometricArithmetic5 => PartitionMode::DegreeSum,
            _ => PartitionMode::Degree,
        }
    }

    /// Only the Balaban index consults the graph's order and size.
    pub fn needs_graph_summary(&self) -> bool {
        self.kind == IndexKind::Balaban
    }

    /// Contribution of one edge with endpoint values (x, y). Symmetric in
    /// its arguments.
    pub fn contribution(&self, x: u64, y: u64) -> Result<Term> {
        let (p, s) = ((x * y) as i128, (x + y) as i128);
        Ok(match self.kind {
            IndexKind::Randic { alpha } => randic_term(p, alpha),
            IndexKind::Forgotten => Term::Exact(rat_int((x * x + y * y) as i128)),
            IndexKind::FirstZagreb => Term::Exact(rat_int(s)),
            IndexKind::SecondZagreb => Term::Exact(rat_int(p)),
            IndexKind::Balaban => randic_term(p, -0.5),
            IndexKind::ReZG1 => Term::Exact(rat(p, s)),
            IndexKind::ReZG2 => Term::Exact(rat(s, p)),
            IndexKind::ReZG3 => Term::Exact(rat_int(p * s)),
            IndexKind::Harmonic => Term::Exact(rat(2, s)),
            IndexKind::AtomBond => sqrt_term(rat(s - 2, p)),
            IndexKind::GeometricArithmetic => scale_term(sqrt_term(rat_int(p)), rat(2, s)),
            IndexKind::AugmentedZagreb => {
                if s == 2 {
                    return Err(self.degenerate(x, y, "du+dv-2 = 0"));
                }
                let base = rat(p, s - 2);
                Term::Exact(base * base * base)
            }
            IndexKind::AtomBond4 => {
                if p == 0 || s < 2 {
                    return Err(self.degenerate(x, y, "needs Su*Sv > 0 and Su+Sv >= 2"));
                }
                sqrt_term(rat(s - 2, p))
            }
            IndexKind::GeometricArithmetic5 => {
                if s == 0 {
                    return Err(self.degenerate(x, y, "Su+Sv = 0"));
                }
                scale_term(sqrt_term(rat_int(p)), rat(2, s))
            }
        })
    }

    fn degenerate(&self, x: u64, y: u64, detail: &str) -> Error {
        Error::DegenerateEdge {
            index: self.name.clone(),
            u: x.to_string(),
            v: y.to_string(),
            detail: detail.to_string(),
        }
    }
}

fn scale_term(t: Term, k: Rat) -> Term {
    match t {
        Term::Exact(q) => Term::Exact(q * k),
        Term::Approx(x) => Term::Approx(x * rat_to_f64(k)),
    }
}

/// (x*y)^alpha; exact for integer alpha, and for half-integer alpha when
/// the power is a perfect square.
fn randic_term(p: i128, alpha: f64) -> Term {
    let twice = 2.0 * alpha;
    if twice.fract() == 0.0 && twice.abs() <= 16.0 {
        let k = twice as i32;
        let q = rat_int(p).pow(k);
        sqrt_term(q)
    } else {
        Term::Approx((p as f64).powf(alpha))
    }
}

fn isqrt_u128(n: u128) -> u128 {
    if n == 0 {
        return 0;
    }
    let mut x = (n as f64).sqrt() as u128;
    while x > 0 && x * x > n {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= n {
        x += 1;
    }
    x
}

/// Square root of a nonnegative rational: exact when numerator and
/// denominator are both perfect squares.
fn sqrt_term(q: Rat) -> Term {
    debug_assert!(q >= rat_int(0));
    let (n, d) = (*q.numer() as u128, *q.denom() as u128);
    let (sn, sd) = (isqrt_u128(n), isqrt_u128(d));
    if sn * sn == n && sd * sd == d {
        Term::Exact(rat(sn as i128, sd as i128))
    } else {
        Term::Approx((n as f64 / d as f64).sqrt())
    }
}

/// Exact-until-degraded accumulator. The floating branch uses Neumaier
/// compensation so long sums stay accurate to a few ulps.
enum Accum {
    Exact(Rat),
    Float { sum: f64, comp: f64 },
}

impl Accum {
    fn new() -> Self {
        Accum::Exact(rat_int(0))
    }

    fn push(&mut self, t: Term) {
        match (&mut *self, t) {
            (Accum::Exact(acc), Term::Exact(q)) => *acc = *acc + q,
            (Accum::Exact(acc), Term::Approx(x)) => {
                let mut f = Accum::Float {
                    sum: rat_to_f64(*acc),
                    comp: 0.0,
                };
                f.push_f64(x);
                *self = f;
            }
            (Accum::Float { .. }, t) => self.push_f64(t.to_f64()),
        }
    }

    fn push_f64(&mut self, x: f64) {
        if let Accum::Float { sum, comp } = self {
            let t = *sum + x;
            if sum.abs() >= x.abs() {
                *comp += (*sum - t) + x;
            } else {
                *comp += (x - t) + *sum;
            }
            *sum = t;
        }
    }

    fn merge(self, other: Accum) -> Accum {
        match (self, other) {
            (Accum::Exact(a), Accum::Exact(b)) => Accum::Exact(a + b),
            (a, b) => {
                let mut f = Accum::Float {
                    sum: a.finish().to_f64(),
                    comp: 0.0,
                };
                f.push_f64(b.finish().to_f64());
                f
            }
        }
    }

    fn finish(self) -> Value {
        match self {
            Accum::Exact(q) => Value::Exact(q),
            Accum::Float { sum, comp } => Value::Approx(sum + comp),
        }
    }
}

/// Summation order for the deterministic edge fold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SumOrder {
    Forward,
    Reverse,
}

fn endpoint_values(g: &Graph, mode: PartitionMode) -> Vec<u64> {
    match mode {
        PartitionMode::Degree => g.degree_vec().iter().map(|&d| d as u64).collect(),
        PartitionMode::DegreeSum => g.degree_sums().to_vec(),
    }
}

fn apply_balaban_prefactor(g: &Graph, spec: &IndexSpec, value: Value) -> Result<Value> {
    if !spec.needs_graph_summary() {
        return Ok(value);
    }
    let s = g.summary();
    let denom = s.m as i128 - s.n as i128 + 2;
    if denom == 0 {
        return Err(Error::BalabanUndefined);
    }
    Ok(value.scale_rat(rat(s.m as i128, denom)))
}

/// Sum `spec`'s contribution over every edge of `g` in canonical order.
pub fn edge_sum_index_ordered(g: &Graph, spec: &IndexSpec, order: SumOrder) -> Result<IndexValue> {
    let values = endpoint_values(g, spec.mode());
    let mut acc = Accum::new();
    let mut push = |e: (u32, u32)| -> Result<()> {
        let (i, j) = e;
        acc.push(spec.contribution(values[i as usize], values[j as usize])?);
        Ok(())
    };
    match order {
        SumOrder::Forward => {
            for e in g.edges_dense() {
                push(e)?;
            }
        }
        SumOrder::Reverse => {
            let edges: Vec<(u32, u32)> = g.edges_dense().collect();
            for e in edges.into_iter().rev() {
                push(e)?;
            }
        }
    }
    apply_balaban_prefactor(g, spec, acc.finish()).map(|v| IndexValue::new(&spec.name, v))
}

/// Deterministic edge-sum evaluation of an index.
pub fn edge_sum_index(g: &Graph, spec: &IndexSpec) -> Result<IndexValue> {
    edge_sum_index_ordered(g, spec, SumOrder::Forward)
}

/// Parallel reduction over edge ranges. Exact sums are unaffected by the
/// reduction order; floating sums may differ from the deterministic path
/// in the last few ulps.
pub fn edge_sum_index_parallel(g: &Graph, spec: &IndexSpec) -> Result<IndexValue> {
    let values = endpoint_values(g, spec.mode());
    let edges: Vec<(u32, u32)> = g.edges_dense().collect();
    let acc = edges
        .par_chunks(16 * 1024)
        .map(|chunk| {
            let mut acc = Accum::new();
            for &(i, j) in chunk {
                acc.push(spec.contribution(values[i as usize], values[j as usize])?);
            }
            Ok(acc)
        })
        .try_reduce(Accum::new, |a, b| Ok(a.merge(b)));
    apply_balaban_prefactor(g, spec, acc?.finish()).map(|v| IndexValue::new(&spec.name, v))
}

/// Independent evaluation route: sum count * contribution over the
/// partition classes instead of over edges.
pub fn class_sum_index(g: &Graph, spec: &IndexSpec) -> Result<IndexValue> {
    let p = partition(g, spec.mode());
    let mut acc = Accum::new();
    for (key, &count) in p.counts() {
        match spec.contribution(key.lo(), key.hi())? {
            Term::Exact(q) => acc.push(Term::Exact(q * rat_int(count as i128))),
            Term::Approx(x) => acc.push(Term::Approx(x * count as f64)),
        }
    }
    apply_balaban_prefactor(g, spec, acc.finish()).map(|v| IndexValue::new(&spec.name, v))
}

/// All named indices, in report order.
pub fn registry() -> Vec<IndexSpec> {
    vec![
        IndexSpec::new("F", IndexKind::Forgotten),
        IndexSpec::new("J", IndexKind::Balaban),
        IndexSpec::new("ReZG1", IndexKind::ReZG1),
        IndexSpec::new("ReZG2", IndexKind::ReZG2),
        IndexSpec::new("ReZG3", IndexKind::ReZG3),
        IndexSpec::new("ABC4", IndexKind::AtomBond4),
        IndexSpec::new("GA5", IndexKind::GeometricArithmetic5),
        IndexSpec::new("M1", IndexKind::FirstZagreb),
        IndexSpec::new("M2", IndexKind::SecondZagreb),
        IndexSpec::new("H", IndexKind::Harmonic),
        IndexSpec::new("ABC", IndexKind::AtomBond),
        IndexSpec::new("GA", IndexKind::GeometricArithmetic),
        IndexSpec::new("AZI", IndexKind::AugmentedZagreb),
        IndexSpec::new("R1", IndexKind::Randic { alpha: 1.0 }),
        IndexSpec::new("R1/2", IndexKind::Randic { alpha: 0.5 }),
        IndexSpec::new("R-1/2", IndexKind::Randic { alpha: -0.5 }),
        IndexSpec::new("R-1", IndexKind::Randic { alpha: -1.0 }),
    ]
}

/// Look up an index by name.
pub fn find_index(name: &str) -> Result<IndexSpec> {
    registry()
        .into_iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::UnknownIndex {
            name: name.to_string(),
            known: registry()
                .iter()
                .map(|s| s.name.as_str())
                .collect::<Vec<_>>()
                .join(", "),
        })
}

/// Every registered index of `g`, deterministically.
pub fn compute_all(g: &Graph) -> Result<Vec<IndexValue>> {
    registry().iter().map(|s| edge_sum_index(g, s)).collect()
}

pub fn randic(g: &Graph, alpha: f64) -> Result<IndexValue> {
    let name = match alpha {
        a if a == -0.5 => "R-1/2".to_string(),
        a if a == 0.5 => "R1/2".to_string(),
        a if a == 1.0 => "R1".to_string(),
        a if a == -1.0 => "R-1".to_string(),
        a => format!("R({a})"),
    };
    edge_sum_index(g, &IndexSpec::new(&name, IndexKind::Randic { alpha }))
}

pub fn balaban(g: &Graph) -> Result<IndexValue> {
    edge_sum_index(g, &IndexSpec::new("J", IndexKind::Balaban))
}

pub fn rezg1(g: &Graph) -> Result<IndexValue> {
    edge_sum_index(g, &IndexSpec::new("ReZG1", IndexKind::ReZG1))
}

pub fn rezg2(g: &Graph) -> Result<IndexValue> {
    edge_sum_index(g, &IndexSpec::new("ReZG2", IndexKind::ReZG2))
}

pub fn rezg3(g: &Graph) -> Result<IndexValue> {
    edge_sum_index(g, &IndexSpec::new("ReZG3", IndexKind::ReZG3))
}

pub fn abc4(g: &Graph) -> Result<IndexValue> {
    edge_sum_index(g, &IndexSpec::new("ABC4", IndexKind::AtomBond4))
}

pub fn ga5(g: &Graph) -> Result<IndexValue> {
    edge_sum_index(g, &IndexSpec::new("GA5", IndexKind::GeometricArithmetic5))
}

/// The six classical degree-based companions: M1, M2, H, ABC, GA, AZI.
pub fn extended_indices(g: &Graph) -> Result<Vec<IndexValue>> {
    ["M1", "M2", "H", "ABC", "GA", "AZI"]
        .iter()
        .map(|name| edge_sum_index(g, &find_index(name)?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build_family, Family, FamilyParam};

    fn octahedron() -> Graph {
        build_family(FamilyParam::new(Family::Thdn3, 2)).unwrap()
    }

    fn hdn3_4() -> Graph {
        build_family(FamilyParam::new(Family::Hdn3, 4)).unwrap()
    }

    fn exact(v: &IndexValue) -> Rat {
        v.value.as_exact().expect("expected exact value")
    }

    #[test]
    fn octahedron_fixture_values() {
        let g = octahedron();
        assert_eq!(
            exact(&edge_sum_index(&g, &find_index("F").unwrap()).unwrap()),
            rat_int(384)
        );
        assert_eq!(exact(&randic(&g, -0.5).unwrap()), rat_int(3));
        assert_eq!(exact(&balaban(&g).unwrap()), rat(9, 2));
        assert_eq!(exact(&rezg1(&g).unwrap()), rat_int(24));
        assert_eq!(exact(&rezg2(&g).unwrap()), rat_int(6));
        assert_eq!(exact(&rezg3(&g).unwrap()), rat_int(1536));
        let abc4_v = abc4(&g).unwrap().value.to_f64();
        assert!((abc4_v - 3.0 * 30f64.sqrt() / 4.0).abs() < 1e-12);
        assert_eq!(exact(&ga5(&g).unwrap()), rat_int(12));
    }

    #[test]
    fn octahedron_extended_values() {
        let g = octahedron();
        let values = extended_indices(&g).unwrap();
        let by_name: std::collections::BTreeMap<&str, &IndexValue> =
            values.iter().map(|v| (v.name.as_str(), v)).collect();
        assert_eq!(exact(by_name["M1"]), rat_int(96));
        assert_eq!(exact(by_name["M2"]), rat_int(192));
        assert_eq!(exact(by_name["H"]), rat_int(3));
        assert_eq!(exact(by_name["GA"]), rat_int(12));
        assert_eq!(exact(by_name["AZI"]), rat(2048, 9));
        let abc = by_name["ABC"].value.to_f64();
        assert!((abc - 3.0 * 6f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn randic_alpha_one_is_second_zagreb() {
        for family in Family::ALL {
            let g = build_family(FamilyParam::new(family, 4)).unwrap();
            let r1 = randic(&g, 1.0).unwrap();
            let m2 = edge_sum_index(&g, &find_index("M2").unwrap()).unwrap();
            assert_eq!(r1.value, m2.value);
        }
    }

    #[test]
    fn path_of_two_has_abc4_zero() {
        let g = Graph::from_integer_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(exact(&abc4(&g).unwrap()), rat_int(0));
    }

    #[test]
    fn single_edge_azi_is_degenerate() {
        let g = Graph::from_integer_edges(2, &[(0, 1)]).unwrap();
        let err = edge_sum_index(&g, &find_index("AZI").unwrap()).unwrap_err();
        assert!(matches!(err, Error::DegenerateEdge { .. }));
    }

    #[test]
    fn star_balaban() {
        let g = Graph::from_integer_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let j = balaban(&g).unwrap().value.to_f64();
        assert!((j - 3.0 * 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn balaban_undefined_on_two_disjoint_edges() {
        // n=4, m=2 gives m-n+2 = 0
        let g = Graph::from_integer_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(balaban(&g), Err(Error::BalabanUndefined)));
    }

    #[test]
    fn hdn3_4_exact_values() {
        let g = hdn3_4();
        assert_eq!(
            exact(&edge_sum_index(&g, &find_index("F").unwrap()).unwrap()),
            rat_int(135234)
        );
        assert_eq!(exact(&rezg1(&g).unwrap()), rat(9251472, 4675));
        assert_eq!(exact(&rezg2(&g).unwrap()), rat_int(199));
        assert_eq!(exact(&rezg3(&g).unwrap()), rat_int(1085628));
        assert_eq!(
            exact(&edge_sum_index(&g, &find_index("H").unwrap()).unwrap()),
            rat(2311769, 28050)
        );
    }

    #[test]
    fn thdn3_4_rezg2_is_37() {
        let g = build_family(FamilyParam::new(Family::Thdn3, 4)).unwrap();
        assert_eq!(exact(&rezg2(&g).unwrap()), rat_int(37));
    }

    #[test]
    fn regular_graph_identity_on_cycles() {
        // on a k-regular graph every index is m * f(k,k)
        for n in [4usize, 5, 9] {
            let edges: Vec<(u32, u32)> =
                (0..n).map(|i| (i as u32, ((i + 1) % n) as u32)).collect();
            let g = Graph::from_integer_edges(n, &edges).unwrap();
            for spec in registry() {
                let whole = edge_sum_index(&g, &spec).unwrap().value.to_f64();
                let (x, y) = match spec.mode() {
                    PartitionMode::Degree => (2, 2),
                    PartitionMode::DegreeSum => (4, 4),
                };
                let mut expected = n as f64 * spec.contribution(x, y).unwrap().to_f64();
                if spec.needs_graph_summary() {
                    // m = n on a cycle, so the prefactor is n/2
                    expected *= n as f64 / 2.0;
                }
                assert!(
                    (whole - expected).abs() < 1e-9,
                    "{} on C{n}",
                    spec.name
                );
            }
        }
    }

    #[test]
    fn class_and_edge_sums_agree() {
        let g = hdn3_4();
        for spec in registry() {
            let by_edge = edge_sum_index(&g, &spec).unwrap();
            let by_class = class_sum_index(&g, &spec).unwrap();
            match (&by_edge.value, &by_class.value) {
                (Value::Exact(a), Value::Exact(b)) => assert_eq!(a, b, "{}", spec.name),
                (a, b) => assert!(
                    (a.to_f64() - b.to_f64()).abs() < 1e-9,
                    "{}: {} vs {}",
                    spec.name,
                    a.to_f64(),
                    b.to_f64()
                ),
            }
        }
    }

    #[test]
    fn parallel_matches_deterministic() {
        let g = build_family(FamilyParam::new(Family::Rhdn3, 6)).unwrap();
        for spec in registry() {
            let a = edge_sum_index(&g, &spec).unwrap().value;
            let b = edge_sum_index_parallel(&g, &spec).unwrap().value;
            match (a, b) {
                (Value::Exact(x), Value::Exact(y)) => assert_eq!(x, y, "{}", spec.name),
                (x, y) => assert!((x.to_f64() - y.to_f64()).abs() < 1e-9, "{}", spec.name),
            }
        }
    }

    #[test]
    fn unknown_index_lists_known_names() {
        let err = find_index("W").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("unknown index W") && msg.contains("GA5"), "{msg}");
    }

    #[test]
    fn ga_contributions_stay_in_unit_interval() {
        let g = hdn3_4();
        let ga = edge_sum_index(&g, &find_index("GA").unwrap()).unwrap();
        let ga5 = ga5(&g).unwrap();
        let m = g.edge_count() as f64;
        assert!(ga.value.to_f64() > 0.0 && ga.value.to_f64() <= m);
        assert!(ga5.value.to_f64() > 0.0 && ga5.value.to_f64() <= m);
    }

    #[test]
    fn format_significant_examples() {
        assert_eq!(format_significant(0.0, 12), "0");
        assert_eq!(format_significant(4.5, 12), "4.50000000000");
        assert_eq!(format_significant(135234.0, 12), "135234.000000");
        assert_eq!(format_significant(-0.001234567890123, 12), "-0.00123456789012");
    }
}
