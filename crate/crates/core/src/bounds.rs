//! Lower bounds for the covering dimension of zero-sets of equivariant
//! maps, each returned with the checklist and witness that justify it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cohomology::{euler_nonvanishing, flag_ring_over};
use crate::error::{Error, Result};
use crate::flagsearch::{find_free_flag, find_rational_flag, gap_inequality};
use crate::repmod::{FlagE, Label, RationalFlag, RepE, RepT, RepTable, Representation};
use crate::report::CheckItem;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    FreeZeroSet,
    StiefelReal,
    StiefelComplex,
    TorusInterior,
    TorusAnnulus,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::FreeZeroSet => "free-zero-set",
            Theorem::StiefelReal => "stiefel-real",
            Theorem::StiefelComplex => "stiefel-complex",
            Theorem::TorusInterior => "torus-interior",
            Theorem::TorusAnnulus => "torus-annulus",
        })
    }
}

/// Data from which the hypothesis verdicts can be recomputed.
///
/// Coordinates are integer vectors; flags are given by their adapted dual
/// bases.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Basis of the subgroup `F`, in coordinates of `E`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<Vec<i64>>>,
    /// Basis of `F°` in `E*`, the coordinates of the quotient `E/F`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient_basis: Option<Vec<Vec<i64>>>,
    /// Flag of the quotient, in the coordinates of `quotient_basis`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient_flag: Option<Vec<Vec<i64>>>,
    /// Adapted dual basis of the flag, in `E*` (or `L*`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub flag: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub source_dims: Vec<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub target_dims: Vec<u64>,
    /// Normal form of the Euler class that was shown nonzero.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub theorem: Theorem,
    pub hypotheses: Vec<CheckItem>,
    /// Present exactly when every hypothesis passes.
    pub bound: Option<i64>,
    /// A second, differently normalised formula shown alongside `bound`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub printed_bound: Option<i64>,
    pub witness: Witness,
    pub notes: Vec<String>,
}

impl BoundReport {
    fn new(theorem: Theorem) -> Self {
        BoundReport {
            theorem,
            hypotheses: Vec::new(),
            bound: None,
            printed_bound: None,
            witness: Witness::default(),
            notes: Vec::new(),
        }
    }

    /// Records an item; returns whether it passed.
    fn check(&mut self, item: &str, passed: bool, evidence: impl Into<String>) -> bool {
        self.hypotheses.push(CheckItem::new(item, passed, evidence));
        passed
    }

    pub fn applicable(&self) -> bool {
        self.bound.is_some()
    }

    pub fn first_failure(&self) -> Option<&CheckItem> {
        self.hypotheses.iter().find(|h| !h.passed())
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "theorem: {}", self.theorem)?;
        for h in &self.hypotheses {
            writeln!(f, "{}: {} ({})", h.item, h.status, h.evidence)?;
        }
        match self.bound {
            Some(b) => writeln!(f, "bound: {b}")?,
            None => writeln!(f, "bound: not applicable")?,
        }
        if let Some(p) = self.printed_bound {
            writeln!(f, "printed bound: {p}")?;
        }
        let w = &self.witness;
        if let Some(s) = &w.subgroup {
            writeln!(f, "witness subgroup F: {s:?}")?;
        }
        if let Some(s) = &w.flag {
            writeln!(f, "witness flag: {s:?}")?;
        }
        if let Some(c) = &w.certificate {
            writeln!(f, "witness certificate: {c}")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

fn same_rank<L: Label>(a: &RepTable<L>, b: &RepTable<L>) -> Result<()> {
    if a.rank() != b.rank() {
        return Err(Error::Structure(format!(
            "representations of ranks {} and {}",
            a.rank(),
            b.rank()
        )));
    }
    Ok(())
}

/// `dim Zero(f) >= dim U - dim V` for an `E`-map `f: S(U) -> V`, when
/// `dim U - dim V > dim U^E`.
///
/// The zero-set contains a compact subspace of `S(U^F)` on which `E/F` acts
/// freely, with `F` from [`crate::flagsearch::best_fixed_subgroup`].
pub fn bound_free_zero_set(u: &RepE, v: &RepE) -> Result<BoundReport> {
    same_rank(u, v)?;
    if v.fixed_dim() > 0 {
        return Err(Error::Precondition(format!(
            "V^E must be 0, found dimension {}",
            v.fixed_dim()
        )));
    }
    let mut r = BoundReport::new(Theorem::FreeZeroSet);
    let (ok, line) = gap_inequality(u, v);
    if !r.check("dim U - dim V > dim U^E", ok, line) {
        return Ok(r);
    }
    let ff = find_free_flag(u, v)?;
    let k = ff.fixed_u.rep.rank();
    let dims_u = ff.fixed_u.rep.dim() as i64;
    let dims_v = ff.fixed_v.rep.dim() as i64;
    let target = u.dim() as i64 - v.dim() as i64;
    r.check(
        "dim U^F - dim V^F >= dim U - dim V",
        dims_u - dims_v >= target,
        format!(
            "F of dimension {}, {dims_u} - {dims_v} >= {target}",
            ff.subgroup.dim()
        ),
    );
    let nv = euler_nonvanishing(&ff.fixed_u.rep, &ff.fixed_v.rep, &ff.flag)?;
    let dominate = nv.dims_dominate();
    r.check(
        "dim U_i > dim V_i for all i",
        dominate,
        format!("U_i {:?}, V_i {:?} over E/F of rank {k}", nv.u_dims, nv.v_dims),
    );
    r.check(
        "e(V^F) nonzero modulo e(U^F_i)",
        nv.nonzero,
        format!("normal form {}", nv.class),
    );
    r.witness = Witness {
        subgroup: Some(ff.subgroup.basis_coords()),
        quotient_basis: Some(ff.fixed_u.dual_basis.iter().map(Label::coords).collect()),
        quotient_flag: Some(ff.flag.dual_basis().iter().map(Label::coords).collect()),
        flag: Some(ff.lifted_dual_basis().iter().map(Label::coords).collect()),
        source_dims: nv.u_dims.clone(),
        target_dims: nv.v_dims.clone(),
        certificate: Some(nv.class.to_string()),
    };
    if r.hypotheses.iter().all(CheckItem::passed) {
        r.bound = Some(target);
        r.notes.push(format!(
            "the zero set meets S(U^F) in a compact subspace with free action of E/F, dim F = {}",
            ff.subgroup.dim()
        ));
    }
    Ok(r)
}

/// Groups for which [`bound_stiefel`] is defined: `E` for real Stiefel
/// manifolds and tori for complex ones.
pub trait StiefelGroup: Representation {
    type Label: Label;
    const COMPLEX: bool;
    fn table(&self) -> &RepTable<Self::Label>;
    fn flag_from(basis: Vec<Self::Label>) -> Result<Self::Flag>;
    fn flag_coords(flag: &Self::Flag) -> Vec<Vec<i64>>;
}

impl StiefelGroup for RepE {
    type Label = crate::repmod::CharF2;
    const COMPLEX: bool = false;
    fn table(&self) -> &RepE {
        self
    }
    fn flag_from(basis: Vec<Self::Label>) -> Result<FlagE> {
        FlagE::from_dual_basis(basis)
    }
    fn flag_coords(flag: &FlagE) -> Vec<Vec<i64>> {
        flag.dual_basis().iter().map(Label::coords).collect()
    }
}

impl StiefelGroup for RepT {
    type Label = crate::repmod::Weight;
    const COMPLEX: bool = true;
    fn table(&self) -> &RepT {
        self
    }
    fn flag_from(basis: Vec<Self::Label>) -> Result<RationalFlag> {
        RationalFlag::from_dual_basis(basis)
    }
    fn flag_coords(flag: &RationalFlag) -> Vec<Vec<i64>> {
        flag.dual_basis().iter().map(Label::coords).collect()
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn violations(dims: &[u64], n: usize) -> Vec<usize> {
    (0..dims.len())
        .filter(|&i| dims[i] as usize > n - i - 1)
        .map(|i| i + 1)
        .collect()
}

/// Bound for the zero-set of an equivariant map from the Stiefel manifold
/// of isometric embeddings `P -> R^n` (or `C^n` for tori) to `Q`.
///
/// The flag is the one with `P_i` spanned by the `i`-th character of `P`;
/// without an explicit flag every ordering of those characters is tried and
/// the first with `dim Q_i <= n - i` is kept.
pub fn bound_stiefel<R: StiefelGroup>(p: &R, q: &R, n: usize, flag: Option<&R::Flag>) -> Result<BoundReport>
where
    R::Flag: Clone,
{
    let (pt, qt) = (p.table(), q.table());
    same_rank(pt, qt)?;
    let l = pt.rank();
    let complex = R::COMPLEX;
    let g = if complex { "T" } else { "E" };
    let mut r = BoundReport::new(if complex {
        Theorem::StiefelComplex
    } else {
        Theorem::StiefelReal
    });
    if !r.check("n > l", n > l, format!("n = {n}, l = {l}")) {
        return Ok(r);
    }
    if !r.check(
        &format!("P^{g} = 0"),
        pt.fixed_dim() == 0,
        format!("dim P^{g} = {}", pt.fixed_dim()),
    ) {
        return Ok(r);
    }
    if !r.check(
        &format!("Q^{g} = 0"),
        qt.fixed_dim() == 0,
        format!("dim Q^{g} = {}", qt.fixed_dim()),
    ) {
        return Ok(r);
    }

    let labels: Vec<R::Label> = pt.labels().cloned().collect();
    let chosen: Option<R::Flag> = match flag {
        Some(f) => Some(f.clone()),
        None if pt.dim() as usize == l && labels.len() == l => {
            let mut perm: Vec<usize> = (0..l).collect();
            let mut first = None;
            let mut good = None;
            loop {
                let basis = perm.iter().map(|&i| labels[i].clone()).collect();
                if let Ok(f) = R::flag_from(basis) {
                    let dims = q
                        .decompose(&f)?
                        .parts
                        .iter()
                        .map(Representation::dim)
                        .collect::<Vec<_>>();
                    if violations(&dims, n).is_empty() {
                        good = Some(f);
                        break;
                    }
                    first.get_or_insert(f);
                }
                if !next_permutation(&mut perm) {
                    break;
                }
            }
            good.or(first)
        }
        None => None,
    };
    let p_dims = match &chosen {
        Some(f) => p.decompose(f)?.parts.iter().map(Representation::dim).collect(),
        None => Vec::new(),
    };
    let ok = chosen.is_some() && p_dims.iter().all(|&d| d == 1);
    if !r.check(
        "dim P_i = 1 for all i",
        ok,
        if chosen.is_some() {
            format!("P_i {p_dims:?}")
        } else {
            format!(
                "P has {} labels of total dimension {} for l = {l}",
                labels.len(),
                pt.dim()
            )
        },
    ) {
        return Ok(r);
    }
    let flag = chosen.expect("checked above");
    let q_dims: Vec<u64> = q
        .decompose(&flag)?
        .parts
        .iter()
        .map(Representation::dim)
        .collect();
    let bad = violations(&q_dims, n);
    let limits: Vec<usize> = (1..=l).map(|i| n - i).collect();
    r.witness.flag = Some(R::flag_coords(&flag));
    r.witness.source_dims = p_dims;
    r.witness.target_dims = q_dims.clone();
    if !r.check(
        "dim Q_i <= n - i for all i",
        bad.is_empty(),
        format!("Q_i {q_dims:?}, limits {limits:?}"),
    ) {
        return Ok(r);
    }

    let ring = flag_ring_over::<R::Field>(n, l, None)?;
    let class = if q.is_zero() {
        ring.class(&crate::polyring::Poly::one(l))?
    } else {
        ring.class(&q.euler_poly(&flag)?)?
    };
    r.witness.certificate = Some(class.to_string());
    if !r.check(
        "e(Q) nonzero in the flag ring",
        !class.is_zero(),
        format!("normal form {class} modulo {}", ring.provenance()),
    ) {
        return Ok(r);
    }

    let (nn, ll, dq) = (n as i64, l as i64, q.dim() as i64);
    if complex {
        r.bound = Some(2 * ll * nn - ll * ll - 2 * dq);
    } else {
        let consistent = ll * nn - ll * (ll + 1) / 2 - dq;
        let printed = ll * nn - ll * (ll - 1) / 2 - dq;
        r.bound = Some(consistent);
        r.printed_bound = Some(printed);
        r.notes.push(format!(
            "discrepancy: the formula ln - l(l-1)/2 - dim Q gives {printed}, but the orbit space has dimension ln - l(l+1)/2 = {}; the bound {consistent} uses the latter and is authoritative",
            ll * nn - ll * (ll + 1) / 2
        ));
    }
    Ok(r)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TorusVariant {
    /// Maps on the unit sphere `S(U)`.
    Interior,
    /// Maps on an annulus with a boundary condition `phi`.
    Annulus,
}

/// `2(dim_C U - dim_C V)` for `T`-maps `S(U) -> V` (interior) or
/// `2(dim_C U - dim_C V) - 1` for the annulus variant.
pub fn bound_torus(u: &RepT, v: &RepT, variant: TorusVariant) -> Result<BoundReport> {
    same_rank(u, v)?;
    for (name, t) in [("U", u), ("V", v)] {
        if t.fixed_dim() > 0 {
            return Err(Error::Precondition(format!(
                "{name}^T must be 0, found dimension {}",
                t.fixed_dim()
            )));
        }
    }
    let gap = u.dim() as i64 - v.dim() as i64;
    let mut r = BoundReport::new(match variant {
        TorusVariant::Interior => Theorem::TorusInterior,
        TorusVariant::Annulus => Theorem::TorusAnnulus,
    });
    if !r.check(
        "dim_C U > dim_C V",
        gap > 0,
        format!("{} - {} = {gap}", u.dim(), v.dim()),
    ) {
        return Ok(r);
    }
    match variant {
        TorusVariant::Interior => {
            let flag = match find_rational_flag(u, v) {
                Ok(f) => f,
                Err(Error::Hypothesis(msg)) => {
                    r.check("rational flag with dim U_i > dim V_i", false, msg);
                    return Ok(r);
                }
                Err(e) => return Err(e),
            };
            let nv = euler_nonvanishing(u, v, &flag)?;
            r.check(
                "rational flag with dim U_i > dim V_i",
                nv.dims_dominate(),
                format!("U_i {:?}, V_i {:?}", nv.u_dims, nv.v_dims),
            );
            r.check(
                "e(V) nonzero modulo e(U_i)",
                nv.nonzero,
                format!("normal form {}", nv.class),
            );
            r.witness = Witness {
                flag: Some(flag.dual_basis().iter().map(Label::coords).collect()),
                source_dims: nv.u_dims.clone(),
                target_dims: nv.v_dims.clone(),
                certificate: Some(nv.class.to_string()),
                ..Witness::default()
            };
            if r.hypotheses.iter().all(CheckItem::passed) {
                r.bound = Some(2 * gap);
            }
        }
        TorusVariant::Annulus => {
            r.hypotheses.push(CheckItem::assumed(
                "boundary condition on phi",
                "phi is analytic input and is not modelled; the caller vouches for it",
            ));
            r.bound = Some(2 * gap - 1);
        }
    }
    Ok(r)
}
