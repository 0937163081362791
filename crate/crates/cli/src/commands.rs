use num_bigint::BigInt;
use positroid::affperm::{enumerate_bound, BoundedAffinePermutation};
use positroid::cohom::{
    amplituhedron_class, degree_gcd_bound, degree_top_cell, kinematical_support, positroid_class,
    support_propagation_violations, truncate as truncate_class, DegreeInfo, GrassmannClass,
};
use positroid::geom::{numeric_image_dimension, positroid_label, sample_cell_point, sample_positive_z};
use positroid::symm::{affine_stanley_monomial_expansion, affine_stanley_schur, Partition};
use positroid::Error;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::output::Report;
use crate::{BasisArg, CliError, Opts};

/// A report plus, for `verify`, a description of the disagreeing cells.
pub type Outcome = Result<(Report, Option<String>), CliError>;

const MAX_N: usize = 8;
const MAX_N_NUMERIC: usize = 7;

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

fn check_size(n: usize, max: usize, o: &Opts) -> Result<(), CliError> {
    if n > max && !o.unsafe_large {
        return Err(config(format!("n = {n} exceeds the default limit {max}; pass --unsafe-large to override")));
    }
    Ok(())
}

fn cell(o: &Opts) -> Result<BoundedAffinePermutation, CliError> {
    let text = o.f.as_deref().ok_or_else(|| config("--f is required"))?;
    let f = match (o.k, o.n) {
        (Some(k), Some(n)) => BoundedAffinePermutation::parse_with(k, n, text)?,
        _ => BoundedAffinePermutation::parse_infer_k(text)?,
    };
    if let Some(k) = o.k.filter(|&k| k != f.k()) {
        return Err(config(format!("--k {k} does not match k = {} of {f}", f.k())));
    }
    if let Some(n) = o.n.filter(|&n| n != f.n()) {
        return Err(config(format!("--n {n} does not match n = {} of {f}", f.n())));
    }
    check_size(f.n(), MAX_N, o)?;
    Ok(f)
}

fn shape(o: &Opts, max: usize) -> Result<(usize, usize), CliError> {
    let (Some(k), Some(n)) = (o.k, o.n) else {
        return Err(config("--k and --n are required"));
    };
    if k > n || n == 0 {
        return Err(Error::KOutOfRange { k, n }.into());
    }
    check_size(n, max, o)?;
    Ok((k, n))
}

fn need_m(o: &Opts, k: usize, n: usize) -> Result<usize, CliError> {
    let m = o.m.ok_or_else(|| config("--m is required"))?;
    if n <= k + m {
        return Err(Error::BadTruncation { k, n, m }.into());
    }
    Ok(m)
}

fn coeff(c: &BigInt) -> Value {
    match i64::try_from(c) {
        Ok(v) => json!(v),
        Err(_) => json!(c.to_string()),
    }
}

fn partition(p: &Partition) -> Value {
    json!(p.parts())
}

fn window(f: &BoundedAffinePermutation) -> Value {
    json!(f.window())
}

fn cell_meta(r: &mut Report, f: &BoundedAffinePermutation) {
    r.meta("window", window(f)).meta("k", f.k()).meta("n", f.n());
}

fn push_terms<'a>(r: &mut Report, terms: impl Iterator<Item = (&'a Partition, &'a BigInt)>) {
    for (p, c) in terms {
        r.push(vec![partition(p), coeff(c)]);
    }
}

pub fn stanley(o: &Opts) -> Outcome {
    let f = cell(o)?;
    let g = match o.basis {
        BasisArg::Schur => affine_stanley_schur(&f),
        BasisArg::Monomial => affine_stanley_monomial_expansion(&f),
    };
    let mut r = Report::new("stanley", "terms", &["partition", "coeff"]);
    cell_meta(&mut r, &f);
    r.meta("length", f.length()).meta("basis", g.basis().name());
    push_terms(&mut r, g.terms());
    Ok((r, None))
}

pub fn class(o: &Opts) -> Outcome {
    let f = cell(o)?;
    let mut r = Report::new("class", "terms", &["partition", "coeff"]);
    cell_meta(&mut r, &f);
    let Some(m) = o.m else {
        r.meta("ambient", "positroid");
        push_terms(&mut r, positroid_class(&f).terms());
        return Ok((r, None));
    };
    need_m(o, f.k(), f.n())?;
    let a = amplituhedron_class(&f, m)?;
    r.meta("ambient", "amplituhedron").meta("m", m).meta("target_n", f.k() + m);
    match &a.degree {
        DegreeInfo::Exact(d) => r.meta("scalar_num", 1).meta("scalar_den", coeff(d)),
        DegreeInfo::DividesGcd(g) => r.meta("degree_divides", coeff(g)),
    };
    push_terms(&mut r, a.truncation.terms());
    Ok((r, None))
}

pub fn truncate(o: &Opts) -> Outcome {
    let f = cell(o)?;
    let m = need_m(o, f.k(), f.n())?;
    let t: GrassmannClass = truncate_class(&positroid_class(&f), m)?;
    let mut r = Report::new("truncate", "terms", &["partition", "coeff"]);
    cell_meta(&mut r, &f);
    r.meta("m", m).meta("target_n", t.n());
    push_terms(&mut r, t.terms());
    Ok((r, None))
}

const SUPPORT_COLUMNS: [&str; 6] = ["window", "length", "dim", "support", "degree", "gcd"];

fn support_row(f: &BoundedAffinePermutation, m: usize) -> Result<Vec<Value>, Error> {
    let support = kinematical_support(f, m)?;
    let degree = if f.cell_dimension() == f.k() * m {
        degree_top_cell(f, m)?.as_ref().map_or(Value::Null, coeff)
    } else {
        Value::Null
    };
    let gcd = match degree_gcd_bound(f, m) {
        Ok(g) => coeff(&g),
        Err(Error::NoSupport(_)) => Value::Null,
        Err(e) => return Err(e),
    };
    Ok(vec![
        window(f),
        json!(f.length()),
        json!(f.cell_dimension()),
        json!(support),
        degree,
        gcd,
    ])
}

pub fn support(o: &Opts) -> Outcome {
    let mut r = Report::new("support", "cells", &SUPPORT_COLUMNS);
    if o.f.is_some() {
        let f = cell(o)?;
        let m = need_m(o, f.k(), f.n())?;
        r.meta("k", f.k()).meta("n", f.n()).meta("m", m);
        r.push(support_row(&f, m)?);
        return Ok((r, None));
    }
    let (k, n) = shape(o, MAX_N)?;
    let m = need_m(o, k, n)?;
    let cells = enumerate_bound(k, n)?;
    let rows = cells
        .par_iter()
        .map(|f| support_row(f, m))
        .collect::<Result<Vec<_>, _>>()?;
    // diagnostic only: the unsupported set is not closed under boundaries in general
    let violations = support_propagation_violations(k, n, m)?.len();
    r.meta("k", k).meta("n", n).meta("m", m).meta("cell_count", cells.len());
    r.meta("boundary_support_reappearances", violations);
    rows.into_iter().for_each(|row| r.push(row));
    Ok((r, None))
}

pub fn degree(o: &Opts) -> Outcome {
    let f = cell(o)?;
    let m = need_m(o, f.k(), f.n())?;
    let mut r = Report::new("degree", "cells", &SUPPORT_COLUMNS);
    r.meta("k", f.k()).meta("n", f.n()).meta("m", m).meta("km", f.k() * m);
    r.push(support_row(&f, m)?);
    Ok((r, None))
}

pub fn enumerate(o: &Opts) -> Outcome {
    let (k, n) = shape(o, MAX_N)?;
    let cells = enumerate_bound(k, n)?;
    let mut r = Report::new("enumerate", "cells", &["window", "length", "dim"]);
    r.meta("k", k).meta("n", n).meta("cell_count", cells.len());
    for f in &cells {
        r.push(vec![window(f), json!(f.length()), json!(f.cell_dimension())]);
    }
    Ok((r, None))
}

pub fn sample_point(o: &Opts) -> Outcome {
    let f = cell(o)?;
    let x = sample_cell_point(&f, o.seed)?;
    let label = positroid_label(&x.matrix)?;
    let mut r = Report::new("sample-point", "rows", &["row", "entries"]);
    cell_meta(&mut r, &f);
    r.meta("label", window(&label));
    let rows = serde_json::to_value(&x.matrix).expect("matrices serialize");
    for (i, entries) in rows.as_array().into_iter().flatten().enumerate() {
        r.push(vec![json!(i + 1), entries.clone()]);
    }
    Ok((r, None))
}

pub fn verify(o: &Opts) -> Outcome {
    let (k, n) = shape(o, MAX_N_NUMERIC)?;
    let m = need_m(o, k, n)?;
    if k == 0 {
        return Err(config("verify needs k >= 1"));
    }
    if !(o.tol > 0.0 && o.tol < 1.0) {
        return Err(config(format!("--tol must lie in (0, 1), got {}", o.tol)));
    }
    let z = sample_positive_z(n, k + m, o.seed)?;
    let cells = enumerate_bound(k, n)?;
    let results = cells
        .par_iter()
        .map(|f| {
            let predicted = kinematical_support(f, m)?;
            let rank = numeric_image_dimension(f, &z, o.seed, o.tol)?;
            Ok((predicted, rank))
        })
        .collect::<Result<Vec<_>, Error>>()?;

    let mut r = Report::new("verify", "cells", &["window", "dim", "predicted", "numeric_rank", "agree"]);
    r.meta("k", k).meta("n", n).meta("m", m).meta("tol", o.tol);
    let mut bad = Vec::new();
    for (f, (predicted, rank)) in cells.iter().zip(results) {
        let agree = (rank == f.cell_dimension()) == predicted;
        if !agree {
            bad.push(f.to_string());
        }
        r.push(vec![
            window(f),
            json!(f.cell_dimension()),
            json!(predicted),
            json!(rank),
            json!(agree),
        ]);
    }
    r.meta("cell_count", cells.len()).meta("disagreements", bad.len());
    let failure = (!bad.is_empty()).then(|| format!("{} of {} cells disagree: {}", bad.len(), cells.len(), bad.join(" ")));
    Ok((r, failure))
}
