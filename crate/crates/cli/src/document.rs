//! JSON documents read and written by the command line tool.
//!
//! Every scalar is an exact string. Over Q an entry is `"p/q"` (or an
//! integer string); over a number field `Q[x]/(f)` it is the list of
//! coordinates on `1, x, ..., x^(d-1)`, each such a string.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use zariski_core::field::{factor_over_q, integer_poly_to_rational};
use zariski_core::{ClosureTrace, Field, GroupDescription, Matrix, NumberField};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Scalar(String),
    Coordinates(Vec<String>),
}

pub type MatrixDoc = Vec<Vec<Entry>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    /// Integer coefficients of a monic irreducible polynomial, constant
    /// term first. Absent for Q.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Vec<i64>>,
    pub generators: Vec<MatrixDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDocument {
    pub matrix: MatrixDoc,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub rounds: usize,
    pub dim_history: Vec<usize>,
    pub bfs_lengths: Vec<usize>,
    pub multrel_calls: usize,
    pub multrel_seconds: f64,
    pub multrel_max_degree: usize,
    pub membership_calls: usize,
    pub membership_seconds: f64,
    pub torus_max_degree: usize,
    pub total_seconds: f64,
}

impl From<&ClosureTrace> for TraceDocument {
    fn from(t: &ClosureTrace) -> Self {
        TraceDocument {
            rounds: t.rounds,
            dim_history: t.dim_history.clone(),
            bfs_lengths: t.bfs_lengths.clone(),
            multrel_calls: t.multrel_calls,
            multrel_seconds: t.multrel_time.as_secs_f64(),
            multrel_max_degree: t.multrel_max_degree,
            membership_calls: t.membership_calls,
            membership_seconds: t.membership_time.as_secs_f64(),
            torus_max_degree: t.torus_max_degree,
            total_seconds: t.total_time.as_secs_f64(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<Vec<i64>>,
    pub lie_dim: usize,
    pub lie_basis: Vec<MatrixDoc>,
    pub component_count: usize,
    pub component_reps: Vec<MatrixDoc>,
    pub certified: bool,
    pub trace: TraceDocument,
}

/// Emitted instead of an [`OutputDocument`] when the computation stops.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FailureDocument {
    pub error: String,
    pub trace: TraceDocument,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MembershipDocument {
    pub member: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub component_index: Option<usize>,
}

#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct ParseError(pub String);

fn err<T>(msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError(msg.into()))
}

/// Parses `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<BigRational, ParseError> {
    let t = s.trim();
    if let Some((p, q)) = t.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| ParseError(format!("bad numerator in {s:?}")))?;
        let q = BigInt::from_str(q.trim()).map_err(|_| ParseError(format!("bad denominator in {s:?}")))?;
        if q.is_zero() {
            return err(format!("zero denominator in {s:?}"));
        }
        Ok(BigRational::new(p, q))
    } else {
        BigInt::from_str(t).map(BigRational::from_integer).map_err(|_| ParseError(format!("not a rational: {s:?}")))
    }
}

/// The number field of `coeffs`, checked to be monic and irreducible.
pub fn parse_field(coeffs: &[i64]) -> Result<NumberField, ParseError> {
    if coeffs.len() < 2 {
        return err("field polynomial must have positive degree");
    }
    if *coeffs.last().unwrap() != 1 {
        return err("field polynomial must be monic");
    }
    let big: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
    let f = factor_over_q(&integer_poly_to_rational(&big));
    if f.len() != 1 || f[0].1 != 1 {
        return err("field polynomial must be irreducible over Q");
    }
    Ok(NumberField::new_monic(big))
}

pub fn parse_entry<F: Field>(field: &F, e: &Entry) -> Result<F::Elem, ParseError> {
    let d = field.degree();
    match e {
        Entry::Scalar(s) => Ok(field.from_rational(&parse_rational(s)?)),
        Entry::Coordinates(c) => {
            if c.len() != d {
                return err(format!("expected {d} coordinates, got {}", c.len()));
            }
            let q = c.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
            Ok(field.from_coords(&q))
        }
    }
}

pub fn parse_matrix<F: Field>(field: &F, m: &MatrixDoc) -> Result<Matrix<F>, ParseError> {
    let n = m.len();
    if n == 0 {
        return err("empty matrix");
    }
    let mut rows = Vec::with_capacity(n);
    for (i, r) in m.iter().enumerate() {
        if r.len() != n {
            return err(format!("row {i} has {} entries, expected {n}", r.len()));
        }
        rows.push(r.iter().map(|e| parse_entry(field, e)).collect::<Result<Vec<_>, _>>()?);
    }
    Ok(Matrix::from_rows(field.clone(), rows))
}

/// Generators of a common size, each invertible.
pub fn parse_generators<F: Field>(field: &F, gens: &[MatrixDoc]) -> Result<Vec<Matrix<F>>, ParseError> {
    if gens.is_empty() {
        return err("no generators");
    }
    let mats = gens.iter().map(|m| parse_matrix(field, m)).collect::<Result<Vec<_>, _>>()?;
    let n = mats[0].rows();
    for (i, m) in mats.iter().enumerate() {
        if m.rows() != n {
            return err(format!("generator {i} is {0}x{0}, expected {n}x{n}", m.rows()));
        }
        if !m.is_invertible() {
            return err(format!("generator {i} is singular"));
        }
    }
    Ok(mats)
}

pub fn format_entry<F: Field>(field: &F, a: &F::Elem) -> Entry {
    if field.degree() == 1 {
        Entry::Scalar(field.coords(a)[0].to_string())
    } else {
        Entry::Coordinates(field.coords(a).iter().map(|q| q.to_string()).collect())
    }
}

pub fn format_matrix<F: Field>(m: &Matrix<F>) -> MatrixDoc {
    (0..m.rows()).map(|i| m.row(i).iter().map(|a| format_entry(m.field(), a)).collect()).collect()
}

pub fn output_document<F: Field>(
    field: Option<Vec<i64>>,
    g: &GroupDescription<F>,
    trace: &ClosureTrace,
) -> OutputDocument {
    OutputDocument {
        n: g.n,
        field,
        lie_dim: g.lie_algebra.dim(),
        lie_basis: g.lie_algebra.basis().iter().map(format_matrix).collect(),
        component_count: g.components.len(),
        component_reps: g.components.iter().map(format_matrix).collect(),
        certified: g.certified,
        trace: trace.into(),
    }
}

/// The input document of a set of rational matrices.
pub fn input_document(gens: &[Matrix<zariski_core::Rationals>]) -> InputDocument {
    InputDocument { field: None, generators: gens.iter().map(format_matrix).collect() }
}
