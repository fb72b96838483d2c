//! JSON file format for matrices, operators, and bases.
//!
//! ```json
//! {
//!   "version": 1,
//!   "kind": "matrix",
//!   "shape": { "rows": 2, "cols": 2 },
//!   "encoding": "idempotent",
//!   "entries": [
//!     [ { "minus": { "re": "1", "im": "0" }, "plus": { "re": "1/2", "im": "0" } }, ... ],
//!     ...
//!   ]
//! }
//! ```
//!
//! - `kind` is `matrix` (default), `operator` (entries hold `T₁` in `minus`
//!   and `T₂` in `plus`), or `basis` (a complex matrix, encoding `complex`).
//! - `encoding` is `idempotent` (`minus`/`plus` complex parts), `cartesian`
//!   (`u1`..`u4` real coefficients of `u1 + u2 i1 + u3 i2 + u4 i1i2`), or
//!   `complex` (`re`/`im`, bases only).
//! - Rationals are strings `"p/q"` or integer strings; JSON integers are also
//!   accepted. Non-reduced values are normalized.
//! - An optional `metadata` object records how a generated instance was made.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::complex::{format_rational, parse_rational, Rational, RationalComplex};
use crate::error::{Error, Result};
use crate::generators::Certificate;
use crate::matrix::{BicomplexMatrix, ComplexMatrix};
use crate::operator::{Basis, BicomplexOperator};
use crate::scalar::BicomplexScalar;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DocumentKind {
    Matrix,
    Operator,
    Basis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Encoding {
    Idempotent,
    Cartesian,
    Complex,
}

impl Encoding {
    pub fn as_str(&self) -> &'static str {
        match self {
            Encoding::Idempotent => "idempotent",
            Encoding::Cartesian => "cartesian",
            Encoding::Complex => "complex",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Shape {
    pub rows: usize,
    pub cols: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentCertificates {
    pub minus: Certificate,
    pub plus: Certificate,
}

/// Provenance of a generated instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    pub rng: String,
    pub seed: u64,
    pub kind: String,
    pub n: usize,
    pub entry_bound: u32,
    pub certificate: ComponentCertificates,
}

/// Raw document; entries stay untyped until [`decode`](Self::decode) so
/// errors can name the offending field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDocument {
    pub version: u32,
    #[serde(default = "default_kind")]
    pub kind: DocumentKind,
    pub shape: Shape,
    pub encoding: Encoding,
    pub entries: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
}

fn default_kind() -> DocumentKind {
    DocumentKind::Matrix
}

/// Typed content of a document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decoded {
    Matrix(BicomplexMatrix),
    Operator(BicomplexOperator),
    Basis(Basis),
}

impl Decoded {
    /// Matrix and operator documents both describe a bicomplex matrix; a
    /// basis yields `e₁P + e₂P`.
    pub fn as_bicomplex(&self) -> BicomplexMatrix {
        match self {
            Decoded::Matrix(m) => m.clone(),
            Decoded::Operator(t) => t.to_matrix(),
            Decoded::Basis(b) => BicomplexMatrix::from_complex(b.matrix().clone()),
        }
    }
}

fn rational_value(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn complex_value(z: &RationalComplex) -> Value {
    let mut m = Map::new();
    m.insert("re".into(), rational_value(&z.re));
    m.insert("im".into(), rational_value(&z.im));
    Value::Object(m)
}

fn scalar_value(s: &BicomplexScalar, encoding: Encoding) -> Value {
    let mut m = Map::new();
    match encoding {
        Encoding::Cartesian => {
            for (name, u) in ["u1", "u2", "u3", "u4"].iter().zip(s.to_real_quad()) {
                m.insert((*name).into(), rational_value(&u));
            }
        }
        _ => {
            m.insert("minus".into(), complex_value(&s.minus));
            m.insert("plus".into(), complex_value(&s.plus));
        }
    }
    Value::Object(m)
}

fn field<'a>(v: &'a Value, key: &str, at: &str) -> Result<&'a Value> {
    v.get(key)
        .ok_or_else(|| Error::parse(at.to_string(), format!("missing field {key:?}")))
}

fn read_rational(v: &Value, at: &str) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| match e {
            Error::Parse { message, .. } => Error::parse(at.to_string(), message),
            other => other,
        }),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        _ => Err(Error::parse(at.to_string(), "expected a rational string \"p/q\"")),
    }
}

fn read_complex(v: &Value, at: &str) -> Result<RationalComplex> {
    Ok(RationalComplex::new(
        read_rational(field(v, "re", at)?, &format!("{at}.re"))?,
        read_rational(field(v, "im", at)?, &format!("{at}.im"))?,
    ))
}

fn read_scalar(v: &Value, encoding: Encoding, at: &str) -> Result<BicomplexScalar> {
    match encoding {
        Encoding::Idempotent => Ok(BicomplexScalar::new(
            read_complex(field(v, "minus", at)?, &format!("{at}.minus"))?,
            read_complex(field(v, "plus", at)?, &format!("{at}.plus"))?,
        )),
        Encoding::Cartesian => {
            let u = |k: &str| read_rational(field(v, k, at)?, &format!("{at}.{k}"));
            Ok(BicomplexScalar::from_real_quad(u("u1")?, u("u2")?, u("u3")?, u("u4")?))
        }
        Encoding::Complex => Ok(BicomplexScalar::from_complex(read_complex(v, at)?)),
    }
}

impl MatrixDocument {
    fn build(kind: DocumentKind, m: &BicomplexMatrix, encoding: Encoding) -> Self {
        let (rows, cols) = m.shape();
        let entries = (0..rows)
            .map(|i| (0..cols).map(|j| scalar_value(&m.entry(i, j), encoding)).collect())
            .collect();
        Self {
            version: FORMAT_VERSION,
            kind,
            shape: Shape { rows, cols },
            encoding,
            entries,
            metadata: None,
        }
    }

    /// `encoding` must be `idempotent` or `cartesian`; `complex` falls back
    /// to `idempotent`.
    pub fn from_matrix(m: &BicomplexMatrix, encoding: Encoding) -> Self {
        let encoding = if encoding == Encoding::Complex {
            Encoding::Idempotent
        } else {
            encoding
        };
        Self::build(DocumentKind::Matrix, m, encoding)
    }

    pub fn from_operator(t: &BicomplexOperator, encoding: Encoding) -> Self {
        let encoding = if encoding == Encoding::Complex {
            Encoding::Idempotent
        } else {
            encoding
        };
        Self::build(DocumentKind::Operator, &t.to_matrix(), encoding)
    }

    pub fn from_basis(b: &Basis) -> Self {
        let p = b.matrix();
        let entries = (0..p.rows())
            .map(|i| (0..p.cols()).map(|j| complex_value(p.get(i, j))).collect())
            .collect();
        Self {
            version: FORMAT_VERSION,
            kind: DocumentKind::Basis,
            shape: Shape {
                rows: p.rows(),
                cols: p.cols(),
            },
            encoding: Encoding::Complex,
            entries,
            metadata: None,
        }
    }

    pub fn with_metadata(mut self, metadata: Metadata) -> Self {
        self.metadata = Some(metadata);
        self
    }

    /// Deterministic pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))
    }

    pub fn decode(&self) -> Result<Decoded> {
        if self.version != FORMAT_VERSION {
            return Err(Error::parse("version", format!("unsupported version {}", self.version)));
        }
        let Shape { rows, cols } = self.shape;
        if rows == 0 || cols == 0 {
            return Err(Error::parse("shape", "rows and cols must be positive"));
        }
        if self.entries.len() != rows {
            return Err(Error::parse(
                "entries",
                format!("expected {rows} rows, found {}", self.entries.len()),
            ));
        }
        let mut grid = Vec::with_capacity(rows);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::parse(
                    format!("entries[{i}]"),
                    format!("expected {cols} columns, found {}", row.len()),
                ));
            }
            let decoded: Result<Vec<BicomplexScalar>> = row
                .iter()
                .enumerate()
                .map(|(j, v)| read_scalar(v, self.encoding, &format!("entries[{i}][{j}]")))
                .collect();
            grid.push(decoded?);
        }
        let enc_err = |what: &str| {
            Error::parse(
                "encoding",
                format!("{} encoding is not valid for a {what}", self.encoding.as_str()),
            )
        };
        match self.kind {
            DocumentKind::Matrix | DocumentKind::Operator if self.encoding == Encoding::Complex => {
                Err(enc_err(if self.kind == DocumentKind::Matrix {
                    "matrix"
                } else {
                    "operator"
                }))
            }
            DocumentKind::Basis if self.encoding != Encoding::Complex => Err(enc_err("basis")),
            DocumentKind::Matrix => Ok(Decoded::Matrix(BicomplexMatrix::from_scalar_rows(grid)?)),
            DocumentKind::Operator => {
                let m = BicomplexMatrix::from_scalar_rows(grid)?;
                BicomplexOperator::from_matrix(m)
                    .map(Decoded::Operator)
                    .map_err(|e| Error::parse("shape", e.to_string()))
            }
            DocumentKind::Basis => {
                let p = ComplexMatrix::from_rows(
                    grid.into_iter()
                        .map(|r| r.into_iter().map(|s| s.minus).collect())
                        .collect(),
                )?;
                Basis::new(p)
                    .map(Decoded::Basis)
                    .map_err(|e| Error::parse("entries", e.to_string()))
            }
        }
    }
}

pub fn read_document(text: &str) -> Result<(MatrixDocument, Decoded)> {
    let doc = MatrixDocument::from_json(text)?;
    let decoded = doc.decode()?;
    Ok((doc, decoded))
}
