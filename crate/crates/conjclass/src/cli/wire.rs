//! JSON documents for the command-line interface. every exact value
//! travels as a string ("p", "p/q", or a plain decimal on input) so no
//! precision is lost to JSON numbers; complex entries are {re, im}
//! objects. serialization is canonical: field order is fixed, optional
//! fields are omitted when absent, and parsing a canonical document and
//! re-serializing it reproduces the bytes.

use serde::{Deserialize, Serialize};

use crate::classify::{AffineMap, ConjugacySignature, Field, Verdict};
use crate::homeo::{
    Direction, ExactMatrix, ExactVector, Exponent, Homeomorphism, PrimitiveMap,
    VerificationReport,
};
use crate::numeric::gaussian::gauss;
use crate::numeric::{
    format_rational, parse_rational, ColVector, GaussianRational, Rational, SqMatrix,
};
use crate::spectral::{
    BlockSignature, ComplexBlockSignature, ComplexUnitBlock, RealBlockSignature, RealUnitBlock,
    Sign,
};
use num_traits::Zero;

pub const SCHEMA_VERSION: u32 = 1;

fn default_version() -> u32 {
    SCHEMA_VERSION
}

/// input problems map to exit code 2 (malformed document) or 4
/// (well-formed but outside the supported dimensions).
#[derive(Debug, thiserror::Error)]
pub enum WireError {
    #[error("{0}")]
    Schema(String),
    #[error("unsupported dimension {0}: only dimensions 1 and 2 are classified")]
    UnsupportedDimension(usize),
}

fn schema(msg: impl Into<String>) -> WireError {
    WireError::Schema(msg.into())
}

fn field_symbol(field: Field) -> &'static str {
    field.symbol()
}

fn field_from_symbol(s: &str) -> Result<Field, WireError> {
    match s {
        "R" => Ok(Field::Real),
        "C" => Ok(Field::Complex),
        other => Err(schema(format!("unknown field `{other}`, expected \"R\" or \"C\""))),
    }
}

fn parse_entry(s: &str, context: &str) -> Result<Rational, WireError> {
    parse_rational(s).map_err(|e| schema(format!("{context}: {e}")))
}

/// one complex scalar on the wire.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct ComplexEntry {
    pub re: String,
    pub im: String,
}

impl ComplexEntry {
    fn from_gauss(z: &GaussianRational) -> Self {
        ComplexEntry { re: format_rational(&z.re), im: format_rational(&z.im) }
    }

    fn to_gauss(&self, context: &str) -> Result<GaussianRational, WireError> {
        Ok(gauss(parse_entry(&self.re, context)?, parse_entry(&self.im, context)?))
    }
}

/// matrix/vector entry: a rational string over R, an {re, im} object
/// over C (plain strings are also accepted there and read as reals).
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(untagged)]
pub enum EntryDoc {
    Real(String),
    Complex(ComplexEntry),
}

impl EntryDoc {
    fn to_rational(&self, context: &str) -> Result<Rational, WireError> {
        match self {
            EntryDoc::Real(s) => parse_entry(s, context),
            EntryDoc::Complex(_) => {
                Err(schema(format!("{context}: complex entry in a real map")))
            }
        }
    }

    fn to_gaussian(&self, context: &str) -> Result<GaussianRational, WireError> {
        match self {
            EntryDoc::Real(s) => Ok(gauss(parse_entry(s, context)?, Rational::zero())),
            EntryDoc::Complex(c) => c.to_gauss(context),
        }
    }
}

/// an affine map f(x) = Ax + b as submitted to and emitted by the tool.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct MapDocument {
    #[serde(default = "default_version")]
    pub v: u32,
    pub field: String,
    pub dim: usize,
    #[serde(rename = "A")]
    pub a: Vec<Vec<EntryDoc>>,
    pub b: Vec<EntryDoc>,
}

impl MapDocument {
    pub fn from_affine(map: &AffineMap) -> Self {
        let dim = map.dim();
        let (a, b) = match map {
            AffineMap::Real(m) => {
                let a = (0..dim)
                    .map(|i| {
                        (0..dim).map(|j| EntryDoc::Real(format_rational(&m.a[(i, j)]))).collect()
                    })
                    .collect();
                let b = (0..dim).map(|i| EntryDoc::Real(format_rational(&m.b[i]))).collect();
                (a, b)
            }
            AffineMap::Complex(m) => {
                let a = (0..dim)
                    .map(|i| {
                        (0..dim)
                            .map(|j| EntryDoc::Complex(ComplexEntry::from_gauss(&m.a[(i, j)])))
                            .collect()
                    })
                    .collect();
                let b =
                    (0..dim).map(|i| EntryDoc::Complex(ComplexEntry::from_gauss(&m.b[i]))).collect();
                (a, b)
            }
        };
        MapDocument { v: SCHEMA_VERSION, field: field_symbol(map.field()).to_string(), dim, a, b }
    }

    pub fn to_affine(&self) -> Result<AffineMap, WireError> {
        if self.v != SCHEMA_VERSION {
            return Err(schema(format!("unsupported schema version {}", self.v)));
        }
        let field = field_from_symbol(&self.field)?;
        if self.dim != 1 && self.dim != 2 {
            return Err(WireError::UnsupportedDimension(self.dim));
        }
        if self.a.len() != self.dim || self.a.iter().any(|row| row.len() != self.dim) {
            return Err(schema(format!(
                "matrix A must be {0}x{0} to match dim {0}",
                self.dim
            )));
        }
        if self.b.len() != self.dim {
            return Err(schema(format!("vector b must have {} entries", self.dim)));
        }
        let map = match field {
            Field::Real => {
                let rows = self
                    .a
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(j, e)| e.to_rational(&format!("A[{i}][{j}]")))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let b = self
                    .b
                    .iter()
                    .enumerate()
                    .map(|(i, e)| e.to_rational(&format!("b[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                AffineMap::real(SqMatrix::from_rows(rows), ColVector::new(b))
            }
            Field::Complex => {
                let rows = self
                    .a
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter()
                            .enumerate()
                            .map(|(j, e)| e.to_gaussian(&format!("A[{i}][{j}]")))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let b = self
                    .b
                    .iter()
                    .enumerate()
                    .map(|(i, e)| e.to_gaussian(&format!("b[{i}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                AffineMap::complex(SqMatrix::from_rows(rows), ColVector::new(b))
            }
        };
        map.map_err(|e| match e {
            crate::classify::ClassifyError::UnsupportedDimension(n) => {
                WireError::UnsupportedDimension(n)
            }
            other => schema(other.to_string()),
        })
    }
}

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Positive => "+",
        Sign::Negative => "-",
    }
}

/// discriminated union of the per-eigenvalue-modulus-one blocks.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum UnitBlockDoc {
    One,
    MinusOne,
    Jordan2One,
    Jordan2MinusOne,
    Rotation { cos: String },
    Single { lambda: ComplexEntry },
    Jordan2 { lambda: ComplexEntry },
    IrreduciblePair { trace: ComplexEntry, det: ComplexEntry },
}

fn real_unit_block_doc(b: &RealUnitBlock) -> UnitBlockDoc {
    match b {
        RealUnitBlock::One => UnitBlockDoc::One,
        RealUnitBlock::MinusOne => UnitBlockDoc::MinusOne,
        RealUnitBlock::Jordan2One => UnitBlockDoc::Jordan2One,
        RealUnitBlock::Jordan2MinusOne => UnitBlockDoc::Jordan2MinusOne,
        RealUnitBlock::Rotation { cos } => UnitBlockDoc::Rotation { cos: format_rational(cos) },
    }
}

fn complex_unit_block_doc(b: &ComplexUnitBlock) -> UnitBlockDoc {
    match b {
        ComplexUnitBlock::Single { lambda } => {
            UnitBlockDoc::Single { lambda: ComplexEntry::from_gauss(lambda) }
        }
        ComplexUnitBlock::Jordan2 { lambda } => {
            UnitBlockDoc::Jordan2 { lambda: ComplexEntry::from_gauss(lambda) }
        }
        ComplexUnitBlock::IrreduciblePair { trace, det } => UnitBlockDoc::IrreduciblePair {
            trace: ComplexEntry::from_gauss(trace),
            det: ComplexEntry::from_gauss(det),
        },
    }
}

/// the linear-part invariant for fixed-point classes. the det-sign
/// fields only appear over R, and only when the corresponding expanding
/// or contracting part is nonempty.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct BlocksDoc {
    pub rank_plus: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub det_sign_plus: Option<String>,
    pub rank_minus: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub det_sign_minus: Option<String>,
    pub nilpotent_blocks: Vec<u8>,
    pub unit_blocks: Vec<UnitBlockDoc>,
}

fn real_blocks_doc(s: &RealBlockSignature) -> BlocksDoc {
    BlocksDoc {
        rank_plus: s.rank_plus,
        det_sign_plus: s.det_sign_plus.map(|x| sign_str(x).to_string()),
        rank_minus: s.rank_minus,
        det_sign_minus: s.det_sign_minus.map(|x| sign_str(x).to_string()),
        nilpotent_blocks: s.nilpotent_blocks.clone(),
        unit_blocks: s.unit_blocks.iter().map(real_unit_block_doc).collect(),
    }
}

fn complex_blocks_doc(s: &ComplexBlockSignature) -> BlocksDoc {
    BlocksDoc {
        rank_plus: s.rank_plus,
        det_sign_plus: None,
        rank_minus: s.rank_minus,
        det_sign_minus: None,
        nilpotent_blocks: s.nilpotent_blocks.clone(),
        unit_blocks: s.unit_blocks.iter().map(complex_unit_block_doc).collect(),
    }
}

/// the complete conjugacy invariant of one map, as emitted by
/// `classify` and embedded in comparison verdicts.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
#[serde(deny_unknown_fields)]
pub struct SignatureDocument {
    #[serde(default = "default_version")]
    pub v: u32,
    pub field: String,
    pub dim: usize,
    pub kind: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub identity: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub blocks: Option<BlocksDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub singular: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orbit: Option<Vec<Vec<f64>>>,
}

pub fn signature_to_doc(sig: &ConjugacySignature) -> SignatureDocument {
    match sig {
        ConjugacySignature::HasFixedPoint { field, dim, blocks, identity } => SignatureDocument {
            v: SCHEMA_VERSION,
            field: field_symbol(*field).to_string(),
            dim: *dim,
            kind: "has_fixed_point".to_string(),
            identity: Some(*identity),
            blocks: Some(match blocks {
                BlockSignature::Real(s) => real_blocks_doc(s),
                BlockSignature::Complex(s) => complex_blocks_doc(s),
            }),
            singular: None,
            orbit: None,
        },
        ConjugacySignature::NoFixedPoint { field, dim, singular } => SignatureDocument {
            v: SCHEMA_VERSION,
            field: field_symbol(*field).to_string(),
            dim: *dim,
            kind: "no_fixed_point".to_string(),
            identity: None,
            blocks: None,
            singular: Some(*singular),
            orbit: None,
        },
    }
}

/// the signed-power exponent: the evaluation value is re-derived from
/// the decimal, and the exact moduli that define it ride along.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct ExponentDoc {
    pub decimal: String,
    pub abs_a: String,
    pub abs_c: String,
}

fn exponent_to_doc(e: &Exponent) -> ExponentDoc {
    ExponentDoc {
        decimal: e.decimal.clone(),
        abs_a: format_rational(&e.abs_a),
        abs_c: format_rational(&e.abs_c),
    }
}

fn exponent_from_doc(d: &ExponentDoc) -> Result<Exponent, WireError> {
    let value: f64 = d
        .decimal
        .parse()
        .map_err(|_| schema(format!("exponent decimal `{}` is not numeric", d.decimal)))?;
    if !value.is_finite() || value <= 0.0 {
        return Err(schema(format!("exponent `{}` must be positive", d.decimal)));
    }
    let abs_a = parse_entry(&d.abs_a, "exponent abs_a")?;
    let abs_c = parse_entry(&d.abs_c, "exponent abs_c")?;
    if abs_a < Rational::zero() || abs_c < Rational::zero() {
        return Err(schema("exponent moduli must be nonnegative"));
    }
    Ok(Exponent { value, decimal: d.decimal.clone(), abs_a, abs_c })
}

/// one primitive map of a witness chain.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PrimitiveDoc {
    Linear { matrix: Vec<Vec<EntryDoc>> },
    Translate { vector: Vec<EntryDoc> },
    SignedPower { center_in: String, center_out: String, exponent: ExponentDoc },
    ParabolicShear,
    ExpFiberScale { alpha: String },
    Conjugate,
}

/// a chain entry: the primitive plus which way it is applied.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
#[serde(deny_unknown_fields)]
pub struct ChainStepDoc {
    pub map: PrimitiveDoc,
    pub direction: String,
}

/// a witness homeomorphism. `chain` lists the steps in application
/// order: the first entry acts on the input first.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
#[serde(deny_unknown_fields)]
pub struct WitnessDocument {
    #[serde(default = "default_version")]
    pub v: u32,
    pub field: String,
    pub dim: usize,
    pub chain: Vec<ChainStepDoc>,
}

fn matrix_entries(m: &ExactMatrix) -> Vec<Vec<EntryDoc>> {
    match m {
        ExactMatrix::Real(m) => (0..m.n())
            .map(|i| (0..m.n()).map(|j| EntryDoc::Real(format_rational(&m[(i, j)]))).collect())
            .collect(),
        ExactMatrix::Complex(m) => (0..m.n())
            .map(|i| {
                (0..m.n()).map(|j| EntryDoc::Complex(ComplexEntry::from_gauss(&m[(i, j)]))).collect()
            })
            .collect(),
    }
}

fn vector_entries(v: &ExactVector) -> Vec<EntryDoc> {
    match v {
        ExactVector::Real(v) => {
            (0..v.dim()).map(|i| EntryDoc::Real(format_rational(&v[i]))).collect()
        }
        ExactVector::Complex(v) => {
            (0..v.dim()).map(|i| EntryDoc::Complex(ComplexEntry::from_gauss(&v[i]))).collect()
        }
    }
}

fn primitive_to_doc(m: &PrimitiveMap) -> PrimitiveDoc {
    match m {
        PrimitiveMap::Linear { b } => PrimitiveDoc::Linear { matrix: matrix_entries(b) },
        PrimitiveMap::Translate { v } => PrimitiveDoc::Translate { vector: vector_entries(v) },
        PrimitiveMap::SignedPower1D { center_in, center_out, exponent } => {
            PrimitiveDoc::SignedPower {
                center_in: format_rational(center_in),
                center_out: format_rational(center_out),
                exponent: exponent_to_doc(exponent),
            }
        }
        PrimitiveMap::ParabolicShear => PrimitiveDoc::ParabolicShear,
        PrimitiveMap::ExpFiberScale { alpha } => {
            PrimitiveDoc::ExpFiberScale { alpha: format_rational(alpha) }
        }
        PrimitiveMap::Conjugate => PrimitiveDoc::Conjugate,
    }
}

pub fn witness_to_doc(h: &Homeomorphism) -> WitnessDocument {
    WitnessDocument {
        v: SCHEMA_VERSION,
        field: field_symbol(h.field).to_string(),
        dim: h.dim,
        chain: h
            .chain
            .iter()
            .rev()
            .map(|(m, d)| ChainStepDoc {
                map: primitive_to_doc(m),
                direction: match d {
                    Direction::Forward => "forward".to_string(),
                    Direction::Inverse => "inverse".to_string(),
                },
            })
            .collect(),
    }
}

fn parse_matrix(
    rows: &[Vec<EntryDoc>],
    field: Field,
    dim: usize,
) -> Result<ExactMatrix, WireError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(schema(format!("witness linear map must be {dim}x{dim}")));
    }
    match field {
        Field::Real => {
            let rows = rows
                .iter()
                .map(|r| {
                    r.iter().map(|e| e.to_rational("witness matrix")).collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let m = SqMatrix::from_rows(rows);
            if m.det().is_zero() {
                return Err(schema("witness linear map must be invertible"));
            }
            Ok(ExactMatrix::Real(m))
        }
        Field::Complex => {
            let rows = rows
                .iter()
                .map(|r| {
                    r.iter().map(|e| e.to_gaussian("witness matrix")).collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            let m = SqMatrix::from_rows(rows);
            if m.det().is_zero() {
                return Err(schema("witness linear map must be invertible"));
            }
            Ok(ExactMatrix::Complex(m))
        }
    }
}

fn parse_vector(v: &[EntryDoc], field: Field, dim: usize) -> Result<ExactVector, WireError> {
    if v.len() != dim {
        return Err(schema(format!("witness translation must have {dim} entries")));
    }
    match field {
        Field::Real => Ok(ExactVector::Real(ColVector::new(
            v.iter().map(|e| e.to_rational("witness vector")).collect::<Result<Vec<_>, _>>()?,
        ))),
        Field::Complex => Ok(ExactVector::Complex(ColVector::new(
            v.iter().map(|e| e.to_gaussian("witness vector")).collect::<Result<Vec<_>, _>>()?,
        ))),
    }
}

fn primitive_from_doc(
    d: &PrimitiveDoc,
    field: Field,
    dim: usize,
) -> Result<PrimitiveMap, WireError> {
    match d {
        PrimitiveDoc::Linear { matrix } => {
            Ok(PrimitiveMap::Linear { b: parse_matrix(matrix, field, dim)? })
        }
        PrimitiveDoc::Translate { vector } => {
            Ok(PrimitiveMap::Translate { v: parse_vector(vector, field, dim)? })
        }
        PrimitiveDoc::SignedPower { center_in, center_out, exponent } => {
            if field != Field::Real || dim != 1 {
                return Err(schema("signed_power only acts on R^1"));
            }
            Ok(PrimitiveMap::SignedPower1D {
                center_in: parse_entry(center_in, "signed_power center_in")?,
                center_out: parse_entry(center_out, "signed_power center_out")?,
                exponent: exponent_from_doc(exponent)?,
            })
        }
        PrimitiveDoc::ParabolicShear => {
            if field != Field::Real || dim != 2 {
                return Err(schema("parabolic_shear only acts on R^2"));
            }
            Ok(PrimitiveMap::ParabolicShear)
        }
        PrimitiveDoc::ExpFiberScale { alpha } => {
            if field != Field::Real || dim != 2 {
                return Err(schema("exp_fiber_scale only acts on R^2"));
            }
            let alpha = parse_entry(alpha, "exp_fiber_scale alpha")?;
            if alpha <= Rational::zero() {
                return Err(schema("exp_fiber_scale alpha must be positive"));
            }
            Ok(PrimitiveMap::ExpFiberScale { alpha })
        }
        PrimitiveDoc::Conjugate => {
            if field != Field::Complex {
                return Err(schema("conjugate only acts on complex maps"));
            }
            Ok(PrimitiveMap::Conjugate)
        }
    }
}

pub fn witness_from_doc(doc: &WitnessDocument) -> Result<Homeomorphism, WireError> {
    if doc.v != SCHEMA_VERSION {
        return Err(schema(format!("unsupported schema version {}", doc.v)));
    }
    let field = field_from_symbol(&doc.field)?;
    if doc.dim != 1 && doc.dim != 2 {
        return Err(WireError::UnsupportedDimension(doc.dim));
    }
    let steps = doc
        .chain
        .iter()
        .map(|step| {
            let direction = match step.direction.as_str() {
                "forward" => Direction::Forward,
                "inverse" => Direction::Inverse,
                other => {
                    return Err(schema(format!(
                        "unknown direction `{other}`, expected \"forward\" or \"inverse\""
                    )))
                }
            };
            Ok((primitive_from_doc(&step.map, field, doc.dim)?, direction))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Homeomorphism::from_application_order(field, doc.dim, steps))
}

/// one warning attached to a verdict.
#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
#[serde(deny_unknown_fields)]
pub struct WarningDoc {
    pub code: String,
    pub message: String,
}

/// numerical spot-check summary for a witness.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
#[serde(deny_unknown_fields)]
pub struct VerificationDocument {
    #[serde(default = "default_version")]
    pub v: u32,
    pub samples: usize,
    pub range: f64,
    pub tolerance: f64,
    pub max_residual: f64,
    pub max_roundtrip: f64,
    pub pass: bool,
}

pub fn report_to_doc(r: &VerificationReport) -> VerificationDocument {
    VerificationDocument {
        v: SCHEMA_VERSION,
        samples: r.samples,
        range: r.range,
        tolerance: r.tolerance,
        max_residual: r.max_residual,
        max_roundtrip: r.max_roundtrip,
        pass: r.pass,
    }
}

/// the full output of a pairwise comparison.
#[derive(Serialize, Deserialize, Clone, PartialEq, Debug)]
#[serde(deny_unknown_fields)]
pub struct VerdictDocument {
    #[serde(default = "default_version")]
    pub v: u32,
    pub conjugate: bool,
    pub signature_f: SignatureDocument,
    pub signature_g: SignatureDocument,
    pub basis: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub distinguishing_invariant: Option<String>,
    pub warnings: Vec<WarningDoc>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessDocument>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verification: Option<VerificationDocument>,
}

pub fn verdict_to_doc(
    verdict: &Verdict,
    sig_f: &ConjugacySignature,
    sig_g: &ConjugacySignature,
) -> VerdictDocument {
    VerdictDocument {
        v: SCHEMA_VERSION,
        conjugate: verdict.conjugate,
        signature_f: signature_to_doc(sig_f),
        signature_g: signature_to_doc(sig_g),
        basis: verdict.basis.to_string(),
        distinguishing_invariant: verdict.distinguishing_invariant.clone(),
        warnings: verdict
            .warnings
            .iter()
            .map(|w| WarningDoc { code: w.code.as_str().to_string(), message: w.message.clone() })
            .collect(),
        witness: None,
        verification: None,
    }
}
