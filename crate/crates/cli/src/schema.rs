//! JSON schemas for triples, states and elements, plus their resolution
//! into core objects.
//!
//! Complex entries are encoded as `[re, im]` pairs of decimal floats, a
//! matrix as an array of rows. Signs are `1`/`-1`.

use serde::{Deserialize, Serialize};
use specdist::matcore::{pauli_string, CMatrix, HermitianMatrix, Sign};
use specdist::states::{density_from_bloch, BlochVector, DensityMatrix};
use specdist::triple::{
    dirac_corner, dirac_d4, dirac_d4n, dirac_tensor_insert, dirac_two_point, D4nFactor,
    Representation,
};
use specdist::{Mat, Triple};

pub type ComplexMatrixSpec = Vec<Vec<[f64; 2]>>;

/// Declarative description of a spectral triple.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TripleSpec {
    pub algebra_dim: usize,
    pub representation: RepSpec,
    pub dirac: DiracSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subalgebra_mask: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RepSpec {
    Identity,
    Diagonal { copies: usize },
    Corner,
    Custom { basis_images: Vec<ComplexMatrixSpec> },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum DiracSpec {
    TwoPoint,
    Corner,
    D4 {
        #[serde(default = "default_signs")]
        signs: [i8; 3],
        #[serde(default = "default_perm")]
        perm: [usize; 3],
    },
    D4n {
        factors: Vec<FactorSpec>,
    },
    TensorInsert {
        base: Box<DiracSpec>,
        matrix: ComplexMatrixSpec,
    },
    PauliSum {
        terms: Vec<PauliTermSpec>,
    },
    Matrix {
        entries: ComplexMatrixSpec,
    },
}

fn default_signs() -> [i8; 3] {
    [1, 1, 1]
}

fn default_perm() -> [usize; 3] {
    [1, 2, 3]
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorSpec {
    pub left: [usize; 3],
    pub right: [usize; 3],
    #[serde(default = "default_sign")]
    pub sign: i8,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PauliTermSpec {
    pub coeff: f64,
    /// Letters `I`, `X`, `Y`, `Z`, outermost tensor factor first.
    pub string: Vec<String>,
    #[serde(default = "default_sign")]
    pub sign: i8,
}

fn default_sign() -> i8 {
    1
}

/// A quantum state: either a Bloch vector (qubits) or an explicit matrix.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bloch: Option<[f64; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<ComplexMatrixSpec>,
}

/// Input of the `table` command.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StatesFile {
    pub states: Vec<StateSpec>,
}

/// Input of the `seminorm` command: a general algebra element.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ElementSpec {
    pub matrix: ComplexMatrixSpec,
}

fn parse_matrix(spec: &ComplexMatrixSpec) -> Result<Mat, String> {
    let rows: Vec<Vec<(f64, f64)>> = spec
        .iter()
        .map(|row| row.iter().map(|&[re, im]| (re, im)).collect())
        .collect();
    Mat::from_rows_f64(&rows).map_err(|e| format!("bad matrix: {e}"))
}

fn parse_sign(s: i8) -> Result<Sign, String> {
    match s {
        1 => Ok(Sign::Plus),
        -1 => Ok(Sign::Minus),
        other => Err(format!("sign must be 1 or -1, got {other}")),
    }
}

fn pauli_index(letter: &str) -> Result<usize, String> {
    match letter {
        "I" => Ok(0),
        "X" => Ok(1),
        "Y" => Ok(2),
        "Z" => Ok(3),
        other => Err(format!("Pauli letter must be I/X/Y/Z, got '{other}'")),
    }
}

fn resolve_representation(spec: &RepSpec, n: usize) -> Result<Representation<f64>, String> {
    Ok(match spec {
        RepSpec::Identity => Representation::Identity { n },
        RepSpec::Diagonal { copies } => {
            if *copies < 1 {
                return Err("diagonal representation needs copies >= 1".into());
            }
            Representation::Diagonal { n, copies: *copies }
        }
        RepSpec::Corner => Representation::Corner { n },
        RepSpec::Custom { basis_images } => {
            let images = basis_images
                .iter()
                .map(|m| {
                    let mat = parse_matrix(m)?;
                    HermitianMatrix::new(mat)
                        .map_err(|e| format!("custom basis image must be Hermitian: {e}"))
                })
                .collect::<Result<Vec<_>, String>>()?;
            Representation::custom(n, images).map_err(|e| e.to_string())?
        }
    })
}

/// Check that the representation written in the file matches the one a
/// Dirac constructor dictates.
fn ensure_rep_matches(spec: &RepSpec, built: &Representation<f64>) -> Result<(), String> {
    let ok = matches!(
        (spec, built),
        (RepSpec::Identity, Representation::Identity { .. })
            | (RepSpec::Corner, Representation::Corner { .. })
    ) || match (spec, built) {
        (RepSpec::Diagonal { copies }, Representation::Diagonal { copies: built, .. }) => {
            copies == built
        }
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(format!(
            "representation in file does not match this Dirac construction (expected {})",
            describe_rep(built)
        ))
    }
}

fn describe_rep(rep: &Representation<f64>) -> String {
    match rep {
        Representation::Identity { n } => format!("identity on C^{n}"),
        Representation::Diagonal { n, copies } => {
            format!("diagonal with {copies} copies on C^{}", n * copies)
        }
        Representation::Corner { n } => format!("corner on C^{}", 2 * n),
        Representation::Custom { .. } => "custom".to_string(),
    }
}

/// Resolve constructor-style Dirac specs that fix their own representation.
fn resolve_constructor_dirac(spec: &DiracSpec, algebra_dim: usize) -> Result<Triple, String> {
    match spec {
        DiracSpec::TwoPoint => {
            if algebra_dim != 2 {
                return Err("two_point requires algebra_dim = 2".into());
            }
            dirac_two_point().map_err(|e| e.to_string())
        }
        DiracSpec::Corner => dirac_corner(algebra_dim).map_err(|e| e.to_string()),
        DiracSpec::D4 { signs, perm } => {
            if algebra_dim != 2 {
                return Err("d4 requires algebra_dim = 2".into());
            }
            let signs = [
                parse_sign(signs[0])?,
                parse_sign(signs[1])?,
                parse_sign(signs[2])?,
            ];
            dirac_d4(signs, *perm).map_err(|e| e.to_string())
        }
        DiracSpec::D4n { factors } => {
            if algebra_dim != 2 {
                return Err("d4n requires algebra_dim = 2".into());
            }
            let factors = factors
                .iter()
                .map(|f| {
                    Ok(D4nFactor {
                        left: f.left,
                        right: f.right,
                        sign: parse_sign(f.sign)?,
                    })
                })
                .collect::<Result<Vec<_>, String>>()?;
            dirac_d4n(&factors).map_err(|e| e.to_string())
        }
        DiracSpec::TensorInsert { base, matrix } => {
            let base_triple = resolve_constructor_dirac(base, algebra_dim)?;
            let m = parse_matrix(matrix)?;
            let m = HermitianMatrix::new(m)
                .map_err(|e| format!("tensor_insert matrix must be Hermitian: {e}"))?;
            dirac_tensor_insert(&base_triple, &m).map_err(|e| e.to_string())
        }
        DiracSpec::PauliSum { terms } => {
            if terms.is_empty() {
                return Err("pauli_sum needs at least one term".into());
            }
            let len = terms[0].string.len();
            if terms.iter().any(|t| t.string.len() != len) {
                return Err("pauli_sum strings must share one length".into());
            }
            if algebra_dim != 2 || len < 2 {
                return Err(
                    "pauli_sum as a standalone construction needs algebra_dim = 2 and \
                     strings of length >= 2 (use dirac kind 'matrix' otherwise)"
                        .into(),
                );
            }
            // Split each string into an S factor (all but the last letter)
            // and the T factor acting on the algebra slot.
            let mut tensor_terms = Vec::with_capacity(terms.len());
            for t in terms {
                let sign = parse_sign(t.sign)?;
                let indices = t
                    .string
                    .iter()
                    .map(|l| pauli_index(l))
                    .collect::<Result<Vec<_>, String>>()?;
                let s = pauli_string::<f64>(&indices[..len - 1], sign)
                    .map_err(|e| e.to_string())?
                    .into_matrix()
                    .scale_re(t.coeff);
                let tt = pauli_string::<f64>(&indices[len - 1..], Sign::Plus)
                    .map_err(|e| e.to_string())?
                    .into_matrix();
                tensor_terms.push((s, tt));
            }
            Triple::from_tensor_terms(2, tensor_terms, "pauli_sum").map_err(|e| e.to_string())
        }
        DiracSpec::Matrix { .. } => unreachable!("matrix kind handled separately"),
    }
}

/// Resolve a full spec into a spectral triple.
pub fn resolve_triple(spec: &TripleSpec) -> Result<Triple, String> {
    if spec.algebra_dim < 1 {
        return Err("algebra_dim must be >= 1".into());
    }
    let triple = match &spec.dirac {
        DiracSpec::Matrix { entries } => {
            let rep = resolve_representation(&spec.representation, spec.algebra_dim)?;
            let d = parse_matrix(entries)?;
            let d = HermitianMatrix::new(d)
                .map_err(|e| format!("Dirac matrix must be Hermitian: {e}"))?;
            match &spec.subalgebra_mask {
                Some(mask) => Triple::new_with_subalgebra(rep, d, "matrix", mask.clone())
                    .map_err(|e| e.to_string())?,
                None => Triple::new(rep, d, "matrix").map_err(|e| e.to_string())?,
            }
        }
        other => {
            let built = resolve_constructor_dirac(other, spec.algebra_dim)?;
            ensure_rep_matches(&spec.representation, built.representation())?;
            if let Some(mask) = &spec.subalgebra_mask {
                let built_mask = built.subalgebra_mask();
                if built_mask != Some(mask.as_slice()) {
                    return Err(
                        "subalgebra_mask may not override a constructor-defined subalgebra"
                            .into(),
                    );
                }
            }
            built
        }
    };
    Ok(triple)
}

/// Resolve a state description against the triple's algebra dimension.
pub fn resolve_state(spec: &StateSpec, algebra_dim: usize) -> Result<DensityMatrix<f64>, String> {
    match (&spec.bloch, &spec.matrix) {
        (Some(r), None) => {
            if algebra_dim != 2 {
                return Err("bloch states require a qubit algebra (dim 2)".into());
            }
            let b = BlochVector::new(*r).map_err(|e| e.to_string())?;
            density_from_bloch(&b).map_err(|e| e.to_string())
        }
        (None, Some(m)) => {
            let mat = parse_matrix(m)?;
            if mat.dim() != algebra_dim {
                return Err(format!(
                    "state dimension {} does not match algebra dimension {algebra_dim}",
                    mat.dim()
                ));
            }
            let h =
                HermitianMatrix::new(mat).map_err(|e| format!("state must be Hermitian: {e}"))?;
            DensityMatrix::new(h).map_err(|e| e.to_string())
        }
        (Some(_), Some(_)) => Err("state must have either 'bloch' or 'matrix', not both".into()),
        (None, None) => Err("state needs a 'bloch' vector or a 'matrix'".into()),
    }
}

/// Resolve a general (not necessarily Hermitian) algebra element.
pub fn resolve_element(spec: &ElementSpec, algebra_dim: usize) -> Result<Mat, String> {
    let m = parse_matrix(&spec.matrix)?;
    if m.dim() != algebra_dim {
        return Err(format!(
            "element dimension {} does not match algebra dimension {algebra_dim}",
            m.dim()
        ));
    }
    Ok(m)
}

/// Serialize a complex matrix back into the `[re, im]` schema.
pub fn matrix_to_spec(m: &CMatrix<f64>) -> ComplexMatrixSpec {
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}
