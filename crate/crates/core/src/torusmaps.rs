//! Torus-equivariant maps: splitting a representation along rational
//! lines, assembling sphere maps blockwise by the join formula
//! `f(sum t_l u_l) = sum t_l f_l(u_l)`, and the explicit circle maps
//! `(x, y) -> (x^b + y^a, x^a' conj(y)^b')`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::repmod::{Label, RepT, Weight};
use crate::report::{CheckItem, VerificationReport};

/// `U^T` plus the blocks `U_lambda`, keyed by primitive line
/// representative (first nonzero coordinate positive).
#[derive(Debug, Clone, PartialEq)]
pub struct LineDecomposition {
    pub fixed_dim: u64,
    pub lines: BTreeMap<Weight, RepT>,
}

impl LineDecomposition {
    pub fn dims(&self) -> BTreeMap<Weight, u64> {
        self.lines.iter().map(|(k, v)| (k.clone(), v.dim())).collect()
    }
}

pub fn line_decomposition(u: &RepT) -> LineDecomposition {
    let mut lines: BTreeMap<Weight, Vec<(Weight, u64)>> = BTreeMap::new();
    for (w, m) in u.entries().filter(|(w, _)| !w.is_zero()) {
        lines.entry(w.primitive()).or_default().push((w.clone(), m));
    }
    LineDecomposition {
        fixed_dim: u.fixed_dim(),
        lines: lines
            .into_iter()
            .map(|(k, es)| {
                let t = RepT::from_entries(u.rank(), es).expect("entries come from a valid table");
                (k, t)
            })
            .collect(),
    }
}

/// `a, b, c >= 1` with `gcd(a, b) = 1`, and the least `a' >= 1` (with
/// `b' >= 1`) solving `a a' - b b' = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleExampleParams {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub a_prime: u64,
    pub b_prime: u64,
}

impl CircleExampleParams {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::Input(format!(
                "a, b, c must be positive, got ({a}, {b}, {c})"
            )));
        }
        if a.gcd(&b) != 1 {
            return Err(Error::Input(format!(
                "gcd(a,b) must be 1, got gcd({a},{b}) = {}",
                a.gcd(&b)
            )));
        }
        let (ai, bi) = (a as i128, b as i128);
        // a x + b y = 1, so a' = x mod b and b' = (a a' - 1) / b.
        let eg = ai.extended_gcd(&bi);
        let mut ap = eg.x.rem_euclid(bi);
        if ap == 0 {
            ap = bi;
        }
        let mut bp = (ai * ap - 1) / bi;
        while bp < 1 {
            ap += bi;
            bp += ai;
        }
        let (a_prime, b_prime) = (u64::try_from(ap), u64::try_from(bp));
        match (a_prime, b_prime) {
            (Ok(a_prime), Ok(b_prime)) => Ok(CircleExampleParams {
                a,
                b,
                c,
                a_prime,
                b_prime,
            }),
            _ => Err(Error::Resource("a', b' do not fit in 64 bits".into())),
        }
    }

    /// `a a' - b b'` in exact integer arithmetic.
    pub fn determinant(&self) -> i128 {
        self.a as i128 * self.a_prime as i128 - self.b as i128 * self.b_prime as i128
    }

    /// Source weights `(ac, bc)` and target weights `(abc, c)`.
    pub fn weights(&self) -> Result<(Vec<Weight>, Vec<Weight>)> {
        let big = |x: u64| i64::try_from(x).map_err(|_| Error::Resource("weight overflow".into()));
        let ac = big(self
            .a
            .checked_mul(self.c)
            .ok_or_else(|| Error::Resource("weight overflow".into()))?)?;
        let bc = big(self
            .b
            .checked_mul(self.c)
            .ok_or_else(|| Error::Resource("weight overflow".into()))?)?;
        let abc = ac
            .checked_mul(self.b as i64)
            .ok_or_else(|| Error::Resource("weight overflow".into()))?;
        let c = big(self.c)?;
        Ok((
            vec![Weight::new(vec![ac]), Weight::new(vec![bc])],
            vec![Weight::new(vec![abc]), Weight::new(vec![c])],
        ))
    }

    /// The map as monomials in `x, y` and their conjugates.
    pub fn monomials(&self) -> Result<MonomialMap> {
        let e = |x: u64| u32::try_from(x).map_err(|_| Error::Resource("exponent overflow".into()));
        Ok(MonomialMap {
            coords: vec![
                vec![
                    ComplexMonomial::new(vec![e(self.b)?, 0], vec![0, 0]),
                    ComplexMonomial::new(vec![0, e(self.a)?], vec![0, 0]),
                ],
                vec![ComplexMonomial::new(
                    vec![e(self.a_prime)?, 0],
                    vec![0, e(self.b_prime)?],
                )],
            ],
        })
    }
}

/// `z^p conj(z)^q` with multi-exponents `p`, `q` and coefficient 1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexMonomial {
    pub z: Vec<u32>,
    pub zbar: Vec<u32>,
}

impl ComplexMonomial {
    pub fn new(z: Vec<u32>, zbar: Vec<u32>) -> Self {
        ComplexMonomial { z, zbar }
    }

    pub fn eval(&self, x: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(1.0, 0.0);
        for (i, xi) in x.iter().enumerate() {
            acc *= xi.powu(self.z[i]) * xi.conj().powu(self.zbar[i]);
        }
        acc
    }

    /// Variables with a positive exponent.
    fn support(&self) -> u64 {
        (0..self.z.len())
            .filter(|&i| self.z[i] + self.zbar[i] > 0)
            .fold(0, |s, i| s | 1 << i)
    }

    /// `sum_i (p_i - q_i) w_i`.
    pub fn weight(&self, source: &[Weight]) -> Weight {
        let rank = source.first().map_or(0, Label::rank);
        let mut out = vec![0i64; rank];
        for (i, w) in source.iter().enumerate() {
            let k = self.z[i] as i64 - self.zbar[i] as i64;
            for (o, x) in out.iter_mut().zip(w.as_slice()) {
                *o += k * x;
            }
        }
        Weight::new(out)
    }
}

/// A polynomial map, one sum of monomials per target coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMap {
    pub coords: Vec<Vec<ComplexMonomial>>,
}

impl MonomialMap {
    pub fn eval(&self, x: &[Complex64]) -> Vec<Complex64> {
        self.coords
            .iter()
            .map(|ms| ms.iter().map(|m| m.eval(x)).sum())
            .collect()
    }

    /// Every monomial of coordinate `j` has the weight of target coordinate
    /// `j`; returns the first mismatch.
    pub fn weight_mismatch(&self, source: &[Weight], target: &[Weight]) -> Option<String> {
        for (j, ms) in self.coords.iter().enumerate() {
            for m in ms {
                let w = m.weight(source);
                if w != target[j] {
                    return Some(format!(
                        "coordinate {} has a monomial of weight {w}, expected {}",
                        j + 1,
                        target[j]
                    ));
                }
            }
        }
        None
    }

    /// Sufficient test for `Zero(f) = {0}`: whatever nonempty set of
    /// variables is nonzero, some coordinate keeps exactly one monomial.
    /// Returns the first support set that escapes the test.
    pub fn zero_set_escape(&self, nvars: usize) -> Option<u64> {
        (1..1u64 << nvars).find(|&s| {
            !self
                .coords
                .iter()
                .any(|ms| ms.iter().filter(|m| m.support() & !s == 0).count() == 1)
        })
    }
}

type Evaluator = Arc<dyn Fn(&[Complex64]) -> Vec<Complex64> + Send + Sync>;

/// How a [`MapDescription`] was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Construction {
    Identity,
    User {
        name: String,
    },
    CircleExample {
        params: CircleExampleParams,
    },
    Normalized {
        inner: Box<Construction>,
    },
    EmbeddedInLine {
        line: Vec<i64>,
        inner: Box<Construction>,
    },
    Join {
        lines: Vec<Vec<i64>>,
        parts: Vec<Construction>,
    },
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Construction::Identity => write!(f, "identity"),
            Construction::User { name } => write!(f, "map {name}"),
            Construction::CircleExample { params: p } => {
                write!(f, "circle map (a, b, c) = ({}, {}, {})", p.a, p.b, p.c)
            }
            Construction::Normalized { inner } => write!(f, "normalized {inner}"),
            Construction::EmbeddedInLine { line, inner } => write!(f, "{inner} on line {line:?}"),
            Construction::Join { parts, .. } => {
                write!(f, "join of ")?;
                for (i, c) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "[{c}]")?;
                }
                Ok(())
            }
        }
    }
}

/// A map between torus representations, coordinate `i` of the source
/// carrying weight `source[i]` (and likewise for the target).
#[derive(Clone)]
pub struct MapDescription {
    source: Vec<Weight>,
    target: Vec<Weight>,
    eval: Evaluator,
    construction: Construction,
    symbolic: Option<MonomialMap>,
}

impl fmt::Debug for MapDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MapDescription")
            .field("source", &self.source)
            .field("target", &self.target)
            .field("construction", &self.construction)
            .finish_non_exhaustive()
    }
}

fn check_layout(ws: &[Weight], what: &str) -> Result<usize> {
    let Some(rank) = ws.first().map(Label::rank) else {
        return Err(Error::Input(format!("{what} has no coordinates")));
    };
    if rank == 0 || ws.iter().any(|w| w.rank() != rank) {
        return Err(Error::Input(format!("{what} weights must share a positive rank")));
    }
    Ok(rank)
}

fn expand(t: &RepT) -> Vec<Weight> {
    t.entries()
        .flat_map(|(w, m)| std::iter::repeat_n(w.clone(), m as usize))
        .collect()
}

fn table(ws: &[Weight]) -> RepT {
    let mut counts: BTreeMap<Weight, u64> = BTreeMap::new();
    for w in ws {
        *counts.entry(w.clone()).or_default() += 1;
    }
    RepT::from_entries(ws[0].rank(), counts).expect("weights share a rank")
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(Complex64::norm_sqr).sum::<f64>().sqrt()
}

impl MapDescription {
    pub fn identity(u: &RepT) -> Result<Self> {
        let layout = expand(u);
        check_layout(&layout, "source")?;
        let n = layout.len();
        Ok(MapDescription {
            source: layout.clone(),
            target: layout,
            eval: Arc::new(|x: &[Complex64]| x.to_vec()),
            construction: Construction::Identity,
            symbolic: Some(MonomialMap {
                coords: (0..n)
                    .map(|i| {
                        let mut z = vec![0; n];
                        z[i] = 1;
                        vec![ComplexMonomial::new(z, vec![0; n])]
                    })
                    .collect(),
            }),
        })
    }

    /// A caller-supplied evaluator between the given coordinate layouts.
    pub fn user(
        name: impl Into<String>,
        source: Vec<Weight>,
        target: Vec<Weight>,
        eval: impl Fn(&[Complex64]) -> Vec<Complex64> + Send + Sync + 'static,
    ) -> Result<Self> {
        let r = check_layout(&source, "source")?;
        if check_layout(&target, "target")? != r {
            return Err(Error::Input("source and target ranks differ".into()));
        }
        Ok(MapDescription {
            source,
            target,
            eval: Arc::new(eval),
            construction: Construction::User { name: name.into() },
            symbolic: None,
        })
    }

    /// The same evaluator with the target layout redeclared.
    pub fn with_target(&self, target: Vec<Weight>) -> Result<Self> {
        if target.len() != self.target.len() || check_layout(&target, "target")? != self.rank() {
            return Err(Error::Input("target layout must keep length and rank".into()));
        }
        Ok(MapDescription {
            target,
            ..self.clone()
        })
    }

    /// `x -> f(x) / |f(x)|`, sphere-valued wherever `f` has no zero.
    pub fn normalized(&self) -> Self {
        let inner = Arc::clone(&self.eval);
        MapDescription {
            source: self.source.clone(),
            target: self.target.clone(),
            eval: Arc::new(move |x: &[Complex64]| {
                let y = inner(x);
                let n = norm(&y);
                if n == 0.0 {
                    y
                } else {
                    y.into_iter().map(|c| c / n).collect()
                }
            }),
            construction: Construction::Normalized {
                inner: Box::new(self.construction.clone()),
            },
            symbolic: None,
        }
    }

    /// A rank-one map viewed on the line through `line` in a torus of rank
    /// `line.rank()`: weight `k` becomes `k * line`.
    pub fn embed_in_line(&self, line: &Weight) -> Result<Self> {
        if self.rank() != 1 {
            return Err(Error::Input(format!(
                "expected a rank-1 map, got rank {}",
                self.rank()
            )));
        }
        if line.is_zero() {
            return Err(Error::Input("line must be nonzero".into()));
        }
        let lift = |ws: &[Weight]| ws.iter().map(|w| line.scaled(w.as_slice()[0])).collect();
        Ok(MapDescription {
            source: lift(&self.source),
            target: lift(&self.target),
            eval: Arc::clone(&self.eval),
            construction: Construction::EmbeddedInLine {
                line: line.coords(),
                inner: Box::new(self.construction.clone()),
            },
            symbolic: self.symbolic.clone(),
        })
    }

    pub fn rank(&self) -> usize {
        self.source[0].rank()
    }

    pub fn source_layout(&self) -> &[Weight] {
        &self.source
    }

    pub fn target_layout(&self) -> &[Weight] {
        &self.target
    }

    pub fn source(&self) -> RepT {
        table(&self.source)
    }

    pub fn target(&self) -> RepT {
        table(&self.target)
    }

    pub fn construction(&self) -> &Construction {
        &self.construction
    }

    pub fn symbolic(&self) -> Option<&MonomialMap> {
        self.symbolic.as_ref()
    }

    pub fn eval(&self, x: &[Complex64]) -> Result<Vec<Complex64>> {
        if x.len() != self.source.len() {
            return Err(Error::Input(format!(
                "expected {} coordinates, got {}",
                self.source.len(),
                x.len()
            )));
        }
        let y = (self.eval)(x);
        if y.len() != self.target.len() {
            return Err(Error::Structure(format!(
                "evaluator returned {} coordinates for a target of dimension {}",
                y.len(),
                self.target.len()
            )));
        }
        Ok(y)
    }

    /// `t . x` for the group element with angles `theta`.
    pub fn act(ws: &[Weight], theta: &[f64], x: &[Complex64]) -> Vec<Complex64> {
        ws.iter()
            .zip(x)
            .map(|(w, xi)| xi * Complex64::from_polar(1.0, w.dot(theta)))
            .collect()
    }

    pub fn summary(&self) -> MapSummary {
        MapSummary {
            source: self.source.iter().map(Label::coords).collect(),
            target: self.target.iter().map(Label::coords).collect(),
            construction: self.construction.clone(),
        }
    }
}

/// Serializable view of a [`MapDescription`]: layouts and construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapSummary {
    pub source: Vec<Vec<i64>>,
    pub target: Vec<Vec<i64>>,
    pub construction: Construction,
}

/// A uniformly distributed point of the unit sphere in `C^n`.
pub fn random_unit(rng: &mut impl Rng, n: usize) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..n)
            .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        let r = norm(&v);
        if r > 1e-12 {
            return v.into_iter().map(|c| c / r).collect();
        }
    }
}

fn random_angles(rng: &mut impl Rng, rank: usize) -> Vec<f64> {
    (0..rank)
        .map(|_| rng.random_range(0.0..std::f64::consts::TAU))
        .collect()
}

/// Samples drawn by [`join_assemble`] to check that parts are sphere maps.
pub const ASSEMBLY_SAMPLES: usize = 256;
pub const ASSEMBLY_TOL: f64 = 1e-9;

/// Largest `| |f(x)| - 1 |` over `samples` random unit vectors.
pub fn sphere_norm_deviation(m: &MapDescription, samples: usize, seed: u64) -> Result<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..samples {
        let x = random_unit(&mut rng, m.source.len());
        worst = worst.max((norm(&m.eval(&x)?) - 1.0).abs());
    }
    Ok(worst)
}

/// Joins sphere maps `f_l: S(U_l) -> S(V_l)` on distinct lines into
/// `f: S(sum U_l) -> S(sum V_l)`.
///
/// Coordinates are laid out line by line in key order. Each part must have
/// all its weights on its line and is sampled to confirm it is
/// sphere-valued.
pub fn join_assemble(parts: &BTreeMap<Weight, MapDescription>) -> Result<MapDescription> {
    let Some(first) = parts.values().next() else {
        return Err(Error::Input("join of no parts".into()));
    };
    let rank = first.rank();
    let mut source = Vec::new();
    let mut target = Vec::new();
    let mut blocks = Vec::new();
    for (line, part) in parts {
        if line.is_zero() || line.rank() != rank || part.rank() != rank {
            return Err(Error::Input(format!("part for line {line} has the wrong rank")));
        }
        let key = line.primitive();
        if key != *line {
            return Err(Error::Input(format!(
                "line key {line} is not primitive, use {key}"
            )));
        }
        if let Some(w) = part
            .source
            .iter()
            .chain(&part.target)
            .find(|w| w.primitive() != key)
        {
            return Err(Error::Input(format!(
                "weight {w} of the part for line {line} is off the line"
            )));
        }
        let dev = sphere_norm_deviation(part, ASSEMBLY_SAMPLES, 0)?;
        if dev > ASSEMBLY_TOL {
            return Err(Error::Input(format!(
                "part for line {line} is not sphere-valued: | |f(x)| - 1 | reaches {dev:.3e}"
            )));
        }
        let s0 = source.len();
        let t0 = target.len();
        source.extend(part.source.iter().cloned());
        target.extend(part.target.iter().cloned());
        blocks.push((s0..source.len(), t0..target.len(), Arc::clone(&part.eval)));
    }
    let tlen = target.len();
    let eval = move |x: &[Complex64]| {
        let mut y = vec![Complex64::new(0.0, 0.0); tlen];
        for (s, t, f) in &blocks {
            let xl = &x[s.clone()];
            let tl = norm(xl);
            if tl == 0.0 {
                continue;
            }
            let ul: Vec<Complex64> = xl.iter().map(|c| c / tl).collect();
            for (slot, v) in y[t.clone()].iter_mut().zip(f(&ul)) {
                *slot = v * tl;
            }
        }
        y
    };
    Ok(MapDescription {
        source,
        target,
        eval: Arc::new(eval),
        construction: Construction::Join {
            lines: parts.keys().map(Label::coords).collect(),
            parts: parts.values().map(|p| p.construction.clone()).collect(),
        },
        symbolic: None,
    })
}

/// The circle map `(x, y) -> (x^b + y^a, x^a' conj(y)^b')` from weights
/// `(ac, bc)` to `(abc, c)`. It is defined on all of `U`; use
/// [`MapDescription::normalized`] for the sphere map.
pub fn circle_example(a: u64, b: u64, c: u64) -> Result<(MapDescription, CircleExampleParams)> {
    let params = CircleExampleParams::new(a, b, c)?;
    let (source, target) = params.weights()?;
    let sym = params.monomials()?;
    let s2 = sym.clone();
    Ok((
        MapDescription {
            source,
            target,
            eval: Arc::new(move |x: &[Complex64]| s2.eval(x)),
            construction: Construction::CircleExample { params },
            symbolic: Some(sym),
        },
        params,
    ))
}

/// Options for [`verify_equivariance`].
#[derive(Debug, Clone, Copy)]
pub struct EquivarianceCheck {
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
}

impl Default for EquivarianceCheck {
    fn default() -> Self {
        EquivarianceCheck {
            samples: 10_000,
            tol: 1e-9,
            seed: 0,
        }
    }
}

fn is_circle(c: &Construction) -> bool {
    match c {
        Construction::CircleExample { .. } => true,
        Construction::EmbeddedInLine { inner, .. } => is_circle(inner),
        _ => false,
    }
}

fn sample_residual(m: &MapDescription, samples: usize, seed: u64) -> Result<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    let mut min_norm = f64::INFINITY;
    for _ in 0..samples {
        let x = random_unit(&mut rng, m.source.len());
        let theta = random_angles(&mut rng, m.rank());
        let fx = m.eval(&x)?;
        let lhs = m.eval(&MapDescription::act(&m.source, &theta, &x))?;
        let rhs = MapDescription::act(&m.target, &theta, &fx);
        let r = norm(&lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect::<Vec<_>>());
        worst = worst.max(r);
        min_norm = min_norm.min(norm(&fx));
    }
    Ok((worst, min_norm))
}

/// Largest `|f(t x) - t f(x)|` over `samples` seeded points of the sphere.
pub fn equivariance_residual(m: &MapDescription, samples: usize, seed: u64) -> Result<f64> {
    sample_residual(m, samples, seed).map(|r| r.0)
}

/// Samples `|f(t x) - t f(x)|` on the unit sphere. Maps with a monomial
/// description also get exact weight and zero-set checks; circle maps get
/// the minimum of `|f(x)|` over the samples.
pub fn verify_equivariance(m: &MapDescription, opts: &EquivarianceCheck) -> Result<VerificationReport> {
    if opts.tol.is_nan() || opts.tol <= 0.0 {
        return Err(Error::Input(format!(
            "tolerance must be positive, got {}",
            opts.tol
        )));
    }
    let (worst, min_norm) = sample_residual(m, opts.samples, opts.seed)?;
    let mut report = VerificationReport::new(format!("equivariance of {}", m.construction));
    report.push(CheckItem::new(
        "equivariance residual below tolerance",
        worst < opts.tol,
        format!(
            "max |f(t x) - t f(x)| = {worst:.3e} over {} samples, tol {:.1e}, seed {}",
            opts.samples, opts.tol, opts.seed
        ),
    ));
    if let Some(sym) = &m.symbolic {
        let mismatch = sym.weight_mismatch(&m.source, &m.target);
        report.push(CheckItem::new(
            "monomial weights match the target",
            mismatch.is_none(),
            mismatch.unwrap_or_else(|| "every monomial has its coordinate's weight".into()),
        ));
    }
    if is_circle(&m.construction) {
        report.push(CheckItem::new(
            "min |f(x)| > 0 on sphere samples",
            min_norm > 0.0,
            format!("min |f(x)| = {min_norm:.6e}"),
        ));
        let sym = m.symbolic.as_ref().expect("circle maps carry monomials");
        let escape = sym.zero_set_escape(m.source.len());
        report.push(CheckItem::new(
            "Zero(f) = {0} (symbolic)",
            escape.is_none(),
            match escape {
                None => "the second coordinate vanishes only if x = 0 or y = 0; then the first is a single nonzero power".to_string(),
                Some(s) => format!("no coordinate isolates a monomial when the nonzero variables are {s:#b}"),
            },
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::new(c.to_vec())
    }

    fn t(l: usize, entries: &[(&[i64], u64)]) -> RepT {
        RepT::from_entries(l, entries.iter().map(|(x, m)| (w(x), *m))).unwrap()
    }

    #[test]
    fn line_examples() {
        let d = line_decomposition(&t(1, &[(&[2], 1), (&[3], 1)]));
        assert_eq!(d.dims(), BTreeMap::from([(w(&[1]), 2)]));
        let d = line_decomposition(&t(2, &[(&[1, 0], 2), (&[2, 0], 1), (&[0, 1], 1)]));
        assert_eq!(d.dims(), BTreeMap::from([(w(&[1, 0]), 3), (w(&[0, 1]), 1)]));
        let d = line_decomposition(&t(2, &[(&[-1, 2], 1), (&[1, -2], 1), (&[0, 0], 4)]));
        assert_eq!(d.fixed_dim, 4);
        assert_eq!(d.dims(), BTreeMap::from([(w(&[1, -2]), 2)]));
        assert!(line_decomposition(&RepT::new(2).unwrap()).lines.is_empty());
    }

    #[test]
    fn circle_parameters() {
        let p = CircleExampleParams::new(2, 3, 1).unwrap();
        assert_eq!((p.a_prime, p.b_prime), (2, 1));
        let p = CircleExampleParams::new(1, 1, 1).unwrap();
        assert_eq!((p.a_prime, p.b_prime), (2, 1));
        let p = CircleExampleParams::new(5, 1, 1).unwrap();
        assert_eq!((p.a_prime, p.b_prime), (1, 4));
        let err = CircleExampleParams::new(2, 4, 1).unwrap_err();
        assert!(err.to_string().contains("gcd(a,b) must be 1"));
        for a in 1..20u64 {
            for b in 1..20u64 {
                if let Ok(p) = CircleExampleParams::new(a, b, 1) {
                    assert_eq!(p.determinant(), 1);
                    let least = (1..)
                        .find(|&x: &u64| (a * x - 1) % b == 0 && (a * x - 1) / b >= 1)
                        .unwrap();
                    assert_eq!(p.a_prime, least);
                }
            }
        }
    }

    #[test]
    fn circle_map_values() {
        let (m, _) = circle_example(2, 3, 1).unwrap();
        assert_eq!(m.source_layout(), &[w(&[2]), w(&[3])]);
        assert_eq!(m.target_layout(), &[w(&[6]), w(&[1])]);
        let x = Complex64::new(0.5, 0.25);
        let y = Complex64::new(-0.3, 0.7);
        let f = m.eval(&[x, y]).unwrap();
        assert!((f[0] - (x.powu(3) + y.powu(2))).norm() < 1e-15);
        assert!((f[1] - x.powu(2) * y.conj()).norm() < 1e-15);
    }

    #[test]
    fn circle_map_is_equivariant() {
        let (m, _) = circle_example(2, 3, 1).unwrap();
        let opts = EquivarianceCheck {
            samples: 2000,
            ..Default::default()
        };
        let r = verify_equivariance(&m, &opts).unwrap();
        assert!(r.all_passed(), "{r}");
        assert_eq!(r.items.len(), 4);
    }

    #[test]
    fn corrupted_weight_fails() {
        let (m, _) = circle_example(2, 3, 1).unwrap();
        let bad = m.with_target(vec![w(&[6]), w(&[2])]).unwrap();
        let r = verify_equivariance(
            &bad,
            &EquivarianceCheck {
                samples: 500,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!r.item("equivariance").unwrap().passed());
        assert!(!r.item("monomial weights").unwrap().passed());
        assert!(equivariance_residual(&bad, 500, 0).unwrap() > 1e-3);
        assert!(r.subject.contains("circle map (a, b, c) = (2, 3, 1)"));
    }

    #[test]
    fn identity_is_exact() {
        let m = MapDescription::identity(&t(2, &[(&[1, 2], 2)])).unwrap();
        let r = verify_equivariance(
            &m,
            &EquivarianceCheck {
                samples: 100,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(r.all_passed());
        assert!(r.items[0].evidence.contains("0.000e0"));
    }

    #[test]
    fn zero_set_escape_detects_common_zero() {
        // (x y, x^2): vanishes on x = 0.
        let m = MonomialMap {
            coords: vec![
                vec![ComplexMonomial::new(vec![1, 1], vec![0, 0])],
                vec![ComplexMonomial::new(vec![2, 0], vec![0, 0])],
            ],
        };
        assert_eq!(m.zero_set_escape(2), Some(0b10));
    }

    #[test]
    fn join_of_circle_parts_is_sphere_valued() {
        let (m1, _) = circle_example(2, 3, 1).unwrap();
        let (m2, _) = circle_example(1, 1, 2).unwrap();
        let parts = BTreeMap::from([
            (w(&[1, 0]), m1.normalized().embed_in_line(&w(&[1, 0])).unwrap()),
            (w(&[0, 1]), m2.normalized().embed_in_line(&w(&[0, 1])).unwrap()),
        ]);
        let j = join_assemble(&parts).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let x = [
            Complex64::new(h, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, h),
            Complex64::new(0.0, 0.0),
        ];
        assert!((norm(&j.eval(&x).unwrap()) - 1.0).abs() < 1e-12);
        assert!(sphere_norm_deviation(&j, 1000, 3).unwrap() < 1e-12);
        let r = verify_equivariance(
            &j,
            &EquivarianceCheck {
                samples: 500,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn join_rejects_bad_parts() {
        let (m, _) = circle_example(2, 3, 1).unwrap();
        let raw = BTreeMap::from([(w(&[1]), m.clone())]);
        assert!(join_assemble(&raw).is_err());
        let off = BTreeMap::from([(w(&[1, 0]), m.normalized().embed_in_line(&w(&[0, 1])).unwrap())]);
        assert!(join_assemble(&off).is_err());
        assert!(join_assemble(&BTreeMap::new()).is_err());
    }

    #[test]
    fn single_part_join_matches_part() {
        let id = MapDescription::identity(&t(1, &[(&[3], 2)])).unwrap();
        let j = join_assemble(&BTreeMap::from([(w(&[1]), id.clone())])).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let x = random_unit(&mut rng, 2);
            let (a, b) = (j.eval(&x).unwrap(), id.eval(&x).unwrap());
            assert!(norm(&a.iter().zip(&b).map(|(p, q)| p - q).collect::<Vec<_>>()) < 1e-15);
        }
    }
}
