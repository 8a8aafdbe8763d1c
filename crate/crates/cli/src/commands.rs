use eulerlab_core::bounds::{bound_free_zero_set, bound_stiefel, bound_torus, TorusVariant};
use eulerlab_core::cohomology::{
    euler_nonvanishing, flag_ring, presentation, verify_flag_ring, FlagRingCheck,
};
use eulerlab_core::flagsearch::{find_flag, find_free_flag, find_rational_flag};
use eulerlab_core::polyring::FieldTag;
use eulerlab_core::repmod::doc::{GroupKind, ModuleSpec};
use eulerlab_core::repmod::Label;
use eulerlab_core::sympow::{min_embedding_k, sym_multiplicities};
use eulerlab_core::torusmaps::{circle_example, line_decomposition, verify_equivariance, EquivarianceCheck};
use eulerlab_core::{
    Error, Field, FlagE, Poly, Rational, RationalFlag, RepE, RepT, Representation, Result, TriangularSystem,
    F2,
};

use crate::document::Document;
use crate::output::*;
use crate::{Cli, Command, FieldArg, TheoremArg};

fn need<T>(v: Option<T>, what: &str) -> Result<T> {
    v.ok_or_else(|| Error::Input(format!("missing {what}")))
}

fn small(n: u128) -> Result<u64> {
    u64::try_from(n).map_err(|_| Error::Input(format!("quotient dimension {n} does not fit in 64 bits")))
}

fn require_kind(doc: &Document, kind: GroupKind, what: &str) -> Result<()> {
    if doc.kind()? != kind {
        return Err(Error::Input(format!(
            "{what} needs a group of kind {}",
            match kind {
                GroupKind::ElemAbelian2 => "elem_abelian_2",
                GroupKind::Torus => "torus",
            }
        )));
    }
    Ok(())
}

fn coords<L: Label>(ls: &[L]) -> Vec<Vec<i64>> {
    ls.iter().map(Label::coords).collect()
}

pub fn execute(cli: &Cli) -> Result<Output> {
    let doc = cli.document()?;
    match &cli.command {
        Command::Reduce {
            field,
            relations,
            polynomial,
        } => {
            let field = match field {
                Some(FieldArg::F2) => FieldTag::F2,
                Some(FieldArg::Q) => FieldTag::Q,
                None => doc.field.unwrap_or(FieldTag::F2),
            };
            let rels = if relations.is_empty() {
                need(doc.relations.clone(), "relations (--relation or `relations`)")?
            } else {
                relations.clone()
            };
            let p = need(
                polynomial.clone().or(doc.polynomial.clone()),
                "polynomial (--poly or `polynomial`)",
            )?;
            match field {
                FieldTag::F2 => reduce::<F2>(&rels, &p),
                FieldTag::Q => reduce::<Rational>(&rels, &p),
            }
            .map(Output::Reduce)
        }
        Command::EulerCheck => match doc.kind()? {
            GroupKind::ElemAbelian2 => {
                let (u, v): (RepE, RepE) = (doc.source()?, doc.target()?);
                let flag = match &doc.flag {
                    Some(f) => f.to_flag_e(u.rank())?,
                    None => find_flag(&u, &v)?,
                };
                euler_check(GroupKind::ElemAbelian2, &u, &v, &flag, coords(flag.dual_basis()))
            }
            GroupKind::Torus => {
                let (u, v): (RepT, RepT) = (doc.source()?, doc.target()?);
                let flag = match &doc.flag {
                    Some(f) => f.to_rational_flag(u.rank())?,
                    None => find_rational_flag(&u, &v)?,
                };
                euler_check(GroupKind::Torus, &u, &v, &flag, coords(flag.dual_basis()))
            }
        }
        .map(Output::EulerCheck),
        Command::FlagFind => flag_find(&doc).map(Output::FlagFind),
        Command::Bound { theorem, n } => {
            let n = n.or(doc.n);
            let report = match theorem {
                TheoremArg::FreeZeroSet => {
                    require_kind(&doc, GroupKind::ElemAbelian2, "free-zero-set")?;
                    bound_free_zero_set(&doc.source()?, &doc.target()?)?
                }
                TheoremArg::StiefelReal => {
                    require_kind(&doc, GroupKind::ElemAbelian2, "stiefel-real")?;
                    let p: RepE = doc.source()?;
                    let flag: Option<FlagE> = doc.flag.as_ref().map(|f| f.to_flag_e(p.rank())).transpose()?;
                    bound_stiefel(&p, &doc.target()?, need(n, "n (-n or `n`)")?, flag.as_ref())?
                }
                TheoremArg::StiefelComplex => {
                    require_kind(&doc, GroupKind::Torus, "stiefel-complex")?;
                    let p: RepT = doc.source()?;
                    let flag: Option<RationalFlag> = doc
                        .flag
                        .as_ref()
                        .map(|f| f.to_rational_flag(p.rank()))
                        .transpose()?;
                    bound_stiefel(&p, &doc.target()?, need(n, "n (-n or `n`)")?, flag.as_ref())?
                }
                TheoremArg::TorusInterior | TheoremArg::TorusAnnulus => {
                    require_kind(&doc, GroupKind::Torus, "torus bounds")?;
                    let variant = if *theorem == TheoremArg::TorusInterior {
                        TorusVariant::Interior
                    } else {
                        TorusVariant::Annulus
                    };
                    bound_torus(&doc.source()?, &doc.target()?, variant)?
                }
            };
            Ok(Output::Bound(report))
        }
        Command::FlagRing {
            n,
            l,
            bounds,
            verify,
            samples,
        } => {
            let n = need(n.or(doc.n), "n (-n or `n`)")?;
            let l = need(l.or(doc.l), "l (-l or `l`)")?;
            let bounds = bounds.clone().or(doc.bounds.clone());
            let p = flag_ring(n, l, bounds.as_deref())?;
            let verification = if *verify {
                Some(verify_flag_ring(
                    n,
                    l,
                    &FlagRingCheck {
                        bounds: bounds.clone(),
                        samples: *samples,
                        seed: cli.seed,
                    },
                )?)
            } else {
                None
            };
            Ok(Output::FlagRing(FlagRingOutput {
                n,
                l,
                bounds,
                relations: p.relations().iter().map(|g| g.to_string()).collect(),
                degrees: p.degrees().to_vec(),
                quotient_dimension: small(p.quotient_dimension())?,
                top_degree: p.top_degree(),
                hilbert_series: p.hilbert_series(),
                verification,
            }))
        }
        Command::Sympow { d } => {
            require_kind(&doc, GroupKind::ElemAbelian2, "sympow")?;
            let d = need(d.or(doc.d), "d (-d or `d`)")?;
            let u: RepE = doc.source()?;
            if doc.target.is_some() {
                let flag = doc.flag.as_ref().map(|f| f.to_flag_e(u.rank())).transpose()?;
                let e = min_embedding_k(&u, &doc.target()?, d, flag.as_ref())?;
                Ok(Output::Sympow(SympowOutput {
                    d,
                    table: None,
                    embedding: Some(e),
                }))
            } else {
                let deg = u32::try_from(d).map_err(|_| Error::Input(format!("degree {d} is too large")))?;
                let t = sym_multiplicities(&u, deg)?;
                Ok(Output::Sympow(SympowOutput {
                    d,
                    table: Some(ModuleSpec::from_table(&t)),
                    embedding: None,
                }))
            }
        }
        Command::TorusDecompose => {
            require_kind(&doc, GroupKind::Torus, "torus-decompose")?;
            let u: RepT = doc.source()?;
            let dec = line_decomposition(&u);
            Ok(Output::TorusDecompose(TorusDecomposeOutput {
                fixed_dim: dec.fixed_dim,
                lines: dec
                    .lines
                    .iter()
                    .map(|(k, t)| LineBlock {
                        line: k.coords(),
                        dim: t.dim(),
                        module: ModuleSpec::from_table(t),
                    })
                    .collect(),
            }))
        }
        Command::TorusExample { a, b, c, samples } => {
            let a = need(a.or(doc.a), "a (-a or `a`)")?;
            let b = need(b.or(doc.b), "b (-b or `b`)")?;
            let c = c.or(doc.c).unwrap_or(1);
            let (m, params) = circle_example(a, b, c)?;
            let verification = verify_equivariance(
                &m,
                &EquivarianceCheck {
                    samples: *samples,
                    tol: cli.tol,
                    seed: cli.seed,
                },
            )?;
            Ok(Output::TorusExample(TorusExampleOutput {
                params,
                map: m.summary(),
                verification,
            }))
        }
    }
}

fn reduce<K: Field>(rels: &[String], p: &str) -> Result<ReduceOutput> {
    let l = rels.len();
    let gens = rels
        .iter()
        .map(|g| Poly::<K>::parse(g, l))
        .collect::<Result<Vec<_>>>()?;
    let sys = TriangularSystem::new(gens)?;
    let poly = Poly::<K>::parse(p, l)?;
    let nf = sys.reduce(&poly)?;
    Ok(ReduceOutput {
        field: K::TAG,
        relations: sys.generators().iter().map(|g| g.to_string()).collect(),
        degrees: sys.degrees().to_vec(),
        polynomial: poly.to_string(),
        in_ideal: nf.is_zero(),
        normal_form: nf.to_string(),
        quotient_dimension: small(sys.quotient_dimension())?,
    })
}

fn euler_check<R: Representation>(
    group: GroupKind,
    u: &R,
    v: &R,
    flag: &R::Flag,
    flag_coords: Vec<Vec<i64>>,
) -> Result<EulerCheckOutput> {
    let nv = euler_nonvanishing(u, v, flag)?;
    let pres = presentation(u, flag)?;
    let e = if v.is_zero() {
        "1".to_string()
    } else {
        v.euler_poly(flag)?.to_string()
    };
    Ok(EulerCheckOutput {
        group,
        flag: flag_coords,
        relations: pres.relations().iter().map(|g| g.to_string()).collect(),
        euler_class: e,
        nonzero: nv.nonzero,
        certificate: nv.class.to_string(),
        u_dims: nv.u_dims,
        v_dims: nv.v_dims,
    })
}

fn flag_find(doc: &Document) -> Result<FlagFindOutput> {
    match doc.kind()? {
        GroupKind::ElemAbelian2 => {
            let (u, v): (RepE, RepE) = (doc.source()?, doc.target()?);
            let ff = find_free_flag(&u, &v)?;
            let u_dims = ff.fixed_u.rep.decompose(&ff.flag)?.dims();
            let v_dims = ff.fixed_v.rep.decompose(&ff.flag)?.dims();
            Ok(FlagFindOutput {
                group: GroupKind::ElemAbelian2,
                subgroup: Some(ff.subgroup.basis_coords()),
                quotient_flag: Some(coords(ff.flag.dual_basis())),
                quotient_basis: Some(coords(&ff.fixed_u.dual_basis)),
                dual_basis: coords(&ff.lifted_dual_basis()),
                u_dims,
                v_dims,
            })
        }
        GroupKind::Torus => {
            let (u, v): (RepT, RepT) = (doc.source()?, doc.target()?);
            let flag = find_rational_flag(&u, &v)?;
            Ok(FlagFindOutput {
                group: GroupKind::Torus,
                subgroup: None,
                quotient_flag: None,
                quotient_basis: None,
                dual_basis: coords(flag.dual_basis()),
                u_dims: u.decompose(&flag)?.dims(),
                v_dims: v.decompose(&flag)?.dims(),
            })
        }
    }
}
