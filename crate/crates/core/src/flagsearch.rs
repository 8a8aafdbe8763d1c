//! Construction of flags with `dim U_i > dim V_i` for every `i`.
//!
//! For `E = (Z/2)^l` the search follows the inductive argument for the
//! maximal-subgroup corollary: pass to `U^F`, `V^F` for a maximal subgroup
//! `F` with `dim U^F - dim V^F >= dim U - dim V`, then pick the steps
//! `E^1 < E^2 < ...` one at a time so that each new layer has a positive
//! gap sum. Tori use the same greedy rule on rational lines.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::linalg::{rref, to_rational_row, F2Span};
use crate::polyring::Rational;
use crate::repmod::{
    fixed_dim, fixed_subrep, CharF2, FixedSubrep, FlagE, Label, RationalFlag, RepE, RepT, RepTable, Subgroup,
    Weight,
};

/// `d^alpha = dim U^alpha - dim V^alpha` on the union of the supports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapTable<L: Label> {
    gaps: BTreeMap<L, i64>,
}

impl<L: Label> GapTable<L> {
    pub fn new(u: &RepTable<L>, v: &RepTable<L>) -> Self {
        let mut gaps = BTreeMap::new();
        for (a, m) in u.entries() {
            *gaps.entry(a.clone()).or_insert(0) += m as i64;
        }
        for (a, m) in v.entries() {
            *gaps.entry(a.clone()).or_insert(0) -= m as i64;
        }
        GapTable { gaps }
    }

    pub fn get(&self, a: &L) -> i64 {
        self.gaps.get(a).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&L, i64)> {
        self.gaps.iter().map(|(a, &d)| (a, d))
    }
}

impl GapTable<Weight> {
    /// Gaps summed over rational lines, keyed by primitive representative.
    pub fn by_line(u: &RepT, v: &RepT) -> Self {
        let mut gaps = BTreeMap::new();
        for (w, d) in GapTable::new(u, v).entries() {
            if !w.is_zero() {
                *gaps.entry(w.primitive()).or_insert(0) += d;
            }
        }
        GapTable { gaps }
    }
}

fn check_ranks<L: Label>(u: &RepTable<L>, v: &RepTable<L>) -> Result<()> {
    if u.rank() != v.rank() {
        return Err(Error::Structure(format!(
            "U has rank {} but V has rank {}",
            u.rank(),
            v.rank()
        )));
    }
    Ok(())
}

fn require_no_fixed<L: Label>(v: &RepTable<L>, name: &str) -> Result<()> {
    if v.fixed_dim() > 0 {
        return Err(Error::Precondition(format!(
            "{name} must have no fixed vectors, found dimension {}",
            v.fixed_dim()
        )));
    }
    Ok(())
}

/// The inequality `dim U - dim V > dim U^E`, as a checklist line.
pub fn gap_inequality(u: &RepE, v: &RepE) -> (bool, String) {
    let lhs = u.dim() as i64 - v.dim() as i64;
    let rhs = u.fixed_dim() as i64;
    let holds = lhs > rhs;
    let rel = if holds { ">" } else { "<=" };
    (
        holds,
        format!(
            "dim U - dim V = {} - {} = {lhs} {rel} {rhs} = dim U^E",
            u.dim(),
            v.dim()
        ),
    )
}

/// Flag with `dim U_i > dim V_i` for every `i`.
///
/// Since `dim U_i - dim V_i` is the sum of `d^alpha` over
/// `E^i \ E^{i-1}`, every step needs a positive gap sum. At step `i` the
/// `i`-dimensional `E' > E^{i-1}` are tried by decreasing gap sum, ties
/// going to the least new covector. The first choice is the greedy one,
/// which succeeds when `F = 0` is maximal; later choices are only reached
/// by backtracking when the greedy path dead-ends.
pub fn find_flag(u: &RepE, v: &RepE) -> Result<FlagE> {
    check_ranks(u, v)?;
    require_no_fixed(v, "V")?;
    let (ok, line) = gap_inequality(u, v);
    if !ok {
        return Err(Error::Hypothesis(line));
    }
    let l = u.rank();
    let gaps = GapTable::new(u, v);
    let mut basis = Vec::with_capacity(l);
    let mut deepest = 0;
    if extend_flag(&gaps, l, &F2Span::new(), &mut basis, &mut deepest) {
        return FlagE::from_dual_basis(basis.into_iter().map(|b| CharF2::from_bits(l, b)).collect());
    }
    Err(Error::Hypothesis(format!(
        "no flag step E^{} with positive gap sum extends any admissible E^{deepest}",
        deepest + 1
    )))
}

fn extend_flag(
    gaps: &GapTable<CharF2>,
    l: usize,
    span: &F2Span,
    basis: &mut Vec<u64>,
    deepest: &mut usize,
) -> bool {
    if basis.len() == l {
        return true;
    }
    *deepest = (*deepest).max(basis.len());
    let mut scores: BTreeMap<u64, i64> = BTreeMap::new();
    for (a, d) in gaps.entries() {
        if !span.contains(a.bits()) {
            *scores.entry(span.coset_min(a.bits())).or_insert(0) += d;
        }
    }
    let mut ranked: Vec<(u64, i64)> = scores.into_iter().filter(|&(_, s)| s > 0).collect();
    ranked.sort_by(|x, y| y.1.cmp(&x.1).then(x.0.cmp(&y.0)));
    for (rep, _) in ranked {
        let mut next = span.clone();
        next.insert(rep);
        basis.push(rep);
        if extend_flag(gaps, l, &next, basis, deepest) {
            return true;
        }
        basis.pop();
    }
    false
}

/// A maximal `F <= E` (by inclusion) with
/// `dim U^F - dim V^F >= dim U - dim V`; ties go to the least basis.
pub fn best_fixed_subgroup(u: &RepE, v: &RepE) -> Result<Subgroup> {
    check_ranks(u, v)?;
    require_no_fixed(v, "V")?;
    let target = u.dim() as i64 - v.dim() as i64;
    let members: Vec<Subgroup> = Subgroup::all(u.rank())?
        .into_iter()
        .filter(|f| fixed_dim(u, f) as i64 - fixed_dim(v, f) as i64 >= target)
        .collect();
    let maximal = members
        .iter()
        .filter(|f| !members.iter().any(|g| g.dim() > f.dim() && f.is_subgroup_of(g)));
    Ok(maximal
        .min_by(|a, b| a.basis().cmp(b.basis()))
        .expect("the trivial subgroup always qualifies")
        .clone())
}

/// Subgroup, fixed representations and flag produced by [`find_free_flag`].
#[derive(Debug, Clone, PartialEq)]
pub struct FreeFlag {
    pub subgroup: Subgroup,
    pub fixed_u: FixedSubrep,
    pub fixed_v: FixedSubrep,
    /// Flag for `E/F`, in the coordinates of `fixed_u.dual_basis`.
    pub flag: FlagE,
}

impl FreeFlag {
    /// The flag's adapted basis written in `E*`.
    pub fn lifted_dual_basis(&self) -> Vec<CharF2> {
        self.flag
            .dual_basis()
            .iter()
            .map(|t| self.fixed_u.lift(t))
            .collect()
    }
}

/// [`best_fixed_subgroup`], then [`fixed_subrep`], then [`find_flag`] on the
/// quotient.
pub fn find_free_flag(u: &RepE, v: &RepE) -> Result<FreeFlag> {
    check_ranks(u, v)?;
    require_no_fixed(v, "V")?;
    let (ok, line) = gap_inequality(u, v);
    if !ok {
        return Err(Error::Hypothesis(line));
    }
    let subgroup = best_fixed_subgroup(u, v)?;
    let fixed_u = fixed_subrep(u, &subgroup)?;
    let fixed_v = fixed_subrep(v, &subgroup)?;
    let flag = find_flag(&fixed_u.rep, &fixed_v.rep)?;
    Ok(FreeFlag {
        subgroup,
        fixed_u,
        fixed_v,
        flag,
    })
}

/// Greedy rational flag with `dim U_i > dim V_i`.
///
/// Candidate steps are spanned by the previous step and either an occurring
/// line of `U` or a standard basis vector; only those can raise the gap sum.
pub fn find_rational_flag(u: &RepT, v: &RepT) -> Result<RationalFlag> {
    check_ranks(u, v)?;
    require_no_fixed(u, "U")?;
    require_no_fixed(v, "V")?;
    let l = u.rank();
    let gaps = GapTable::by_line(u, v);
    let lines: Vec<(Vec<Rational>, i64)> = gaps
        .entries()
        .map(|(w, d)| (to_rational_row(w.as_slice()), d))
        .collect();
    let mut generators: Vec<Weight> = u.labels().map(Weight::primitive).collect();
    generators.extend((0..l).map(|j| Weight::new((0..l).map(|k| (k == j) as i64).collect())));
    let generators: BTreeSet<Weight> = generators.into_iter().collect();

    let mut step: Vec<Vec<Rational>> = Vec::new();
    let mut basis = Vec::with_capacity(l);
    for i in 1..=l {
        let inside = |rows: &[Vec<Rational>], x: &[Rational]| {
            let mut ext = rows.to_vec();
            ext.push(x.to_vec());
            rref(&ext).len() == rref(rows).len()
        };
        // Candidate step keyed by its reduced echelon form.
        let mut candidates: BTreeMap<Vec<Vec<Rational>>, (Weight, i64)> = BTreeMap::new();
        for g in &generators {
            let row = to_rational_row(g.as_slice());
            if inside(&step, &row) {
                continue;
            }
            let mut ext = step.clone();
            ext.push(row);
            let key = rref(&ext);
            if let Some((w, _)) = candidates.get_mut(&key) {
                if g < w {
                    *w = g.clone();
                }
                continue;
            }
            let score: i64 = lines
                .iter()
                .filter(|(x, _)| !inside(&step, x) && inside(&key, x))
                .map(|(_, d)| d)
                .sum();
            candidates.insert(key, (g.clone(), score));
        }
        let best = candidates
            .values()
            .filter(|(_, s)| *s > 0)
            .max_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)));
        let Some((w, _)) = best else {
            return Err(Error::Hypothesis(format!(
                "no flag step E^{i} with positive gap sum extends the chosen E^{}",
                i - 1
            )));
        };
        step.push(to_rational_row(w.as_slice()));
        basis.push(w.clone());
    }
    RationalFlag::from_dual_basis(basis)
}
