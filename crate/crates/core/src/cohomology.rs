//! Quotient-ring presentations `S*(E*) / (e(U_1), ..., e(U_l))` and the
//! flag-manifold rings `F2[t_1..t_l] / (e_1, ..., e_l)`.
//!
//! When every `U_i` is nonzero the Euler classes `e(U_j)`, written in the
//! adapted coordinates of the flag, form a triangular system: `e(U_j)` only
//! involves `T_1..T_j` and its `T_j`-leading coefficient is a unit. Deciding
//! whether `e(V)` survives in the quotient is then a normal-form
//! computation.

use std::fmt;
use std::sync::{Arc, OnceLock};

use log::warn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polyring::{Field, FieldTag, Monomial, Poly, TriangularSystem, F2};
use crate::repmod::Representation;
use crate::report::{CheckItem, VerificationReport};

/// A presented quotient ring together with a note of where it came from.
#[derive(Debug, Clone)]
pub struct Presentation<K: Field> {
    system: Arc<TriangularSystem<K>>,
    provenance: String,
    by_degree: OnceLock<Vec<Vec<Monomial>>>,
}

impl<K: Field> PartialEq for Presentation<K> {
    fn eq(&self, other: &Self) -> bool {
        self.system == other.system
    }
}

/// Class of a polynomial in a presented quotient, held in normal form.
#[derive(Debug, Clone, PartialEq)]
pub struct QuotientClass<K: Field> {
    system: Arc<TriangularSystem<K>>,
    normal_form: Poly<K>,
}

impl<K: Field> QuotientClass<K> {
    pub fn normal_form(&self) -> &Poly<K> {
        &self.normal_form
    }

    pub fn is_zero(&self) -> bool {
        self.normal_form.is_zero()
    }

    pub fn system(&self) -> &TriangularSystem<K> {
        &self.system
    }
}

impl<K: Field> fmt::Display for QuotientClass<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.normal_form)
    }
}

impl<K: Field> Presentation<K> {
    pub fn new(system: TriangularSystem<K>, provenance: impl Into<String>) -> Self {
        Presentation {
            system: Arc::new(system),
            provenance: provenance.into(),
            by_degree: OnceLock::new(),
        }
    }

    pub fn field(&self) -> FieldTag {
        K::TAG
    }

    pub fn nvars(&self) -> usize {
        self.system.nvars()
    }

    pub fn system(&self) -> &TriangularSystem<K> {
        &self.system
    }

    pub fn relations(&self) -> &[Poly<K>] {
        self.system.generators()
    }

    pub fn degrees(&self) -> &[u32] {
        self.system.degrees()
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn quotient_dimension(&self) -> u128 {
        self.system.quotient_dimension()
    }

    fn basis_table(&self) -> &[Vec<Monomial>] {
        self.by_degree.get_or_init(|| {
            let mut table: Vec<Vec<Monomial>> = Vec::new();
            for m in self.system.quotient_basis() {
                let d = m.degree() as usize;
                if table.len() <= d {
                    table.resize(d + 1, Vec::new());
                }
                table[d].push(m);
            }
            table
        })
    }

    /// Quotient basis monomials of total degree `d`.
    pub fn basis_in_degree(&self, d: u32) -> &[Monomial] {
        self.basis_table().get(d as usize).map_or(&[], Vec::as_slice)
    }

    /// Top degree carrying a nonzero class: `sum_j (d_j - 1)`.
    pub fn top_degree(&self) -> u32 {
        self.degrees().iter().map(|d| d - 1).sum()
    }

    /// Graded dimensions of the quotient, counted from its monomial basis.
    pub fn hilbert_series(&self) -> Vec<u64> {
        self.basis_table().iter().map(|b| b.len() as u64).collect()
    }

    pub fn class(&self, p: &Poly<K>) -> Result<QuotientClass<K>> {
        Ok(QuotientClass {
            system: Arc::clone(&self.system),
            normal_form: self.system.reduce(p)?,
        })
    }
}

/// The presentation `S*(E*) / (e(U_1), ..., e(U_l))` attached to `U` and a
/// flag with every `U_i` nonzero.
///
/// A nonzero fixed part `U^G` does not enter the relations and is dropped
/// with a warning.
pub fn presentation<R: Representation>(u: &R, flag: &R::Flag) -> Result<Presentation<R::Field>> {
    let dec = u.decompose(flag)?;
    if let Some(i) = dec.parts.iter().position(|p| p.is_zero()) {
        return Err(Error::Hypothesis(format!("U_{} = 0 for the chosen flag", i + 1)));
    }
    if dec.fixed_dim > 0 {
        warn!(
            "ignoring fixed part of dimension {} when presenting the quotient ring",
            dec.fixed_dim
        );
    }
    let gens = dec
        .parts
        .iter()
        .map(|p| p.euler_poly(flag))
        .collect::<Result<Vec<_>>>()?;
    let dims: Vec<String> = dec.parts.iter().map(|p| p.dim().to_string()).collect();
    let system = TriangularSystem::new(gens)?;
    Ok(Presentation::new(
        system,
        format!("relations e(U_i) with dim U_i = ({})", dims.join(", ")),
    ))
}

/// Result of [`euler_nonvanishing`]: the class of `e(V)` and the dimension
/// profile that was compared.
#[derive(Debug, Clone, PartialEq)]
pub struct NonVanishing<K: Field> {
    pub nonzero: bool,
    pub class: QuotientClass<K>,
    pub u_dims: Vec<u64>,
    pub v_dims: Vec<u64>,
}

impl<K: Field> NonVanishing<K> {
    /// Whether `dim U_i > dim V_i` for every `i`.
    pub fn dims_dominate(&self) -> bool {
        self.u_dims.iter().zip(&self.v_dims).all(|(a, b)| a > b)
    }
}

/// Reduces `e(V)` modulo the relations `e(U_i)`; `nonzero` is the verdict.
pub fn euler_nonvanishing<R: Representation>(u: &R, v: &R, flag: &R::Flag) -> Result<NonVanishing<R::Field>> {
    if v.fixed_dim() > 0 {
        return Err(Error::Precondition(format!(
            "V must have no fixed vectors, found dimension {}",
            v.fixed_dim()
        )));
    }
    let pres = presentation(u, flag)?;
    let u_dims = u.decompose(flag)?.parts.iter().map(Representation::dim).collect();
    let v_dims = v.decompose(flag)?.parts.iter().map(Representation::dim).collect();
    let class = pres.class(&v.euler_poly(flag)?)?;
    Ok(NonVanishing {
        nonzero: !class.is_zero(),
        class,
        u_dims,
        v_dims,
    })
}

/// Sum of all monomials of total degree `degree` in the variables
/// `vars` (zero-based indices into `nvars` variables).
pub fn complete_homogeneous<K: Field>(nvars: usize, vars: std::ops::Range<usize>, degree: u32) -> Poly<K> {
    let vars: Vec<usize> = vars.collect();
    let mut out = Poly::zero(nvars);
    let mut exps = vec![0u32; nvars];
    fn rec<K: Field>(vars: &[usize], left: u32, exps: &mut Vec<u32>, out: &mut Poly<K>) {
        match vars.split_first() {
            None => {
                if left == 0 {
                    out.add_term(Monomial::new(exps.clone()), K::one());
                }
            }
            Some((&v, rest)) => {
                if rest.is_empty() {
                    exps[v] = left;
                    rec(rest, 0, exps, out);
                    exps[v] = 0;
                    return;
                }
                for e in 0..=left {
                    exps[v] = e;
                    rec(rest, left - e, exps, out);
                }
                exps[v] = 0;
            }
        }
    }
    rec(&vars, degree, &mut exps, &mut out);
    out
}

fn check_flag_ring_args(n: usize, l: usize, bounds: Option<&[usize]>) -> Result<Vec<usize>> {
    if l == 0 || l > n {
        return Err(Error::Input(format!("need 1 <= l <= n, got l = {l}, n = {n}")));
    }
    let Some(b) = bounds else {
        return Ok(vec![n; l]);
    };
    if b.len() != l {
        return Err(Error::Input(format!("{} bounds given for l = {l}", b.len())));
    }
    for (i, &ni) in b.iter().enumerate() {
        let idx = i + 1;
        if ni < idx || ni > n {
            return Err(Error::Input(format!(
                "bound n_{idx} = {ni} must satisfy {idx} <= n_{idx} <= {n}"
            )));
        }
        if i > 0 && ni < b[i - 1] {
            return Err(Error::Input(format!(
                "bounds must be nondecreasing: n_{} = {} > n_{idx} = {ni}",
                idx - 1,
                b[i - 1]
            )));
        }
    }
    Ok(b.to_vec())
}

/// `F2[t_1..t_l] / (e_1, ..., e_l)` with `e_i` the complete homogeneous sum
/// of degree `n - i + 1` in `t_1..t_i`; with `bounds = (n_1..n_l)` the
/// degrees become `n_i - i + 1`.
pub fn flag_ring(n: usize, l: usize, bounds: Option<&[usize]>) -> Result<Presentation<F2>> {
    flag_ring_over(n, l, bounds)
}

/// [`flag_ring`] over any coefficient field; over `Q` it presents the
/// rational cohomology of the complex flag manifold.
pub fn flag_ring_over<K: Field>(n: usize, l: usize, bounds: Option<&[usize]>) -> Result<Presentation<K>> {
    let ns = check_flag_ring_args(n, l, bounds)?;
    let gens = (0..l)
        .map(|i| complete_homogeneous(l, 0..i + 1, (ns[i] - i) as u32))
        .collect();
    let what = match bounds {
        Some(b) => format!("flag ring n = {n}, l = {l}, bounds {b:?}"),
        None => format!("flag ring n = {n}, l = {l}"),
    };
    Ok(Presentation::new(TriangularSystem::new(gens)?, what))
}

/// Options for [`verify_flag_ring`].
#[derive(Debug, Clone)]
pub struct FlagRingCheck {
    pub bounds: Option<Vec<usize>>,
    /// Number of random tables `Q` for the Euler-class item; 0 skips it.
    pub samples: usize,
    pub seed: u64,
}

impl Default for FlagRingCheck {
    fn default() -> Self {
        FlagRingCheck {
            bounds: None,
            samples: 100,
            seed: 0,
        }
    }
}

fn falling_factorial(n: usize, l: usize) -> u128 {
    (0..l).map(|i| (n - i) as u128).product()
}

/// Random `Q` with `Q^E = 0` and `dim Q_i <= caps[i]`, returned as the list
/// of its characters in the coordinates `t_1..t_l` (bit `j` is `t_{j+1}`).
fn random_q(rng: &mut ChaCha8Rng, caps: &[usize]) -> Vec<u64> {
    let mut chars = Vec::new();
    for (i, &cap) in caps.iter().enumerate() {
        let dim = rng.random_range(0..=cap);
        for _ in 0..dim {
            let low = if i == 0 { 0 } else { rng.random_range(0..1u64 << i) };
            chars.push(1u64 << i | low);
        }
    }
    chars
}

fn char_product(l: usize, chars: &[u64]) -> Poly<F2> {
    let forms: Vec<Poly<F2>> = chars
        .iter()
        .map(|&c| Poly::linear(&(0..l).map(|j| F2(c >> j & 1 == 1)).collect::<Vec<_>>()))
        .collect();
    Poly::product(l, &forms)
}

/// Exact checks on the flag-manifold ring:
///
/// * (a) `ebar_i = e_i + sum_{j>i} a_{i,j} e_j` as polynomials, where `ebar_i`
///   is the degree `n-i+1` complete homogeneous sum in all `l` variables and
///   `a_{i,j}` the degree `j-i` one in `t_j..t_l`;
/// * (b) the top class `prod t_i^{n-i}` has nonzero normal form;
/// * (c) the quotient has dimension `n!/(n-l)!`;
/// * (d) for random `Q` with `Q^E = 0` and `dim Q_i <= n-i`, `e(Q) != 0`.
///
/// With bounds, (a) is skipped and `n` is replaced by `n_i` in the others.
pub fn verify_flag_ring(n: usize, l: usize, opts: &FlagRingCheck) -> Result<VerificationReport> {
    let ns = check_flag_ring_args(n, l, opts.bounds.as_deref())?;
    let pres = flag_ring(n, l, opts.bounds.as_deref())?;
    let mut report = VerificationReport::new(pres.provenance().to_string());

    if opts.bounds.is_none() {
        let mut bad = Vec::new();
        for i in 0..l {
            let ebar: Poly<F2> = complete_homogeneous(l, 0..l, (n - i) as u32);
            let mut rhs = pres.relations()[i].clone();
            for j in i + 1..l {
                let a: Poly<F2> = complete_homogeneous(l, j..l, (j - i) as u32);
                rhs = &rhs + &(&a * &pres.relations()[j]);
            }
            if rhs != ebar {
                bad.push(i + 1);
            }
        }
        report.push(CheckItem::new(
            "a: ebar_i = e_i + sum a_ij e_j",
            bad.is_empty(),
            if bad.is_empty() {
                format!("identity holds for i = 1..{l}")
            } else {
                format!("identity fails for i in {bad:?}")
            },
        ));
    }

    let top = Monomial::new((0..l).map(|i| (ns[i] - i - 1) as u32).collect());
    let top_class = pres.class(&Poly::term(top.clone(), F2::ONE))?;
    report.push(CheckItem::new(
        "b: top class nonzero",
        !top_class.is_zero(),
        format!("normal form of {top} is {top_class}"),
    ));

    let expected: u128 = match opts.bounds {
        Some(_) => ns.iter().enumerate().map(|(i, &ni)| (ni - i) as u128).product(),
        None => falling_factorial(n, l),
    };
    let basis_len = pres.system().quotient_basis().len() as u128;
    report.push(CheckItem::new(
        "c: quotient dimension",
        basis_len == expected && pres.quotient_dimension() == expected,
        format!("basis has {basis_len} monomials, expected {expected}"),
    ));

    if opts.samples > 0 {
        let caps: Vec<usize> = (0..l).map(|i| ns[i] - i - 1).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mut failures = 0usize;
        let mut first_failure = None;
        for _ in 0..opts.samples {
            let q = random_q(&mut rng, &caps);
            if pres.class(&char_product(l, &q))?.is_zero() {
                failures += 1;
                first_failure.get_or_insert(q);
            }
        }
        report.push(CheckItem::new(
            "d: e(Q) nonzero for random Q",
            failures == 0,
            match first_failure {
                None => format!(
                    "{} samples, dim Q_i <= {caps:?}, seed {}",
                    opts.samples, opts.seed
                ),
                Some(q) => format!("{failures} of {} samples vanish; first Q = {q:?}", opts.samples),
            },
        ));
    }

    let top_deg = pres.top_degree();
    if opts.bounds.is_none() {
        let printed = (l * n) as i64 - (l * (l - 1) / 2) as i64;
        report.notes.push(format!(
            "top degree ln - l(l+1)/2 = {top_deg}; the alternative exponent ln - l(l-1)/2 = {printed} exceeds it by l"
        ));
    } else {
        report.notes.push(format!("top degree sum (n_i - i) = {top_deg}"));
    }
    Ok(report)
}
