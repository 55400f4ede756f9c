use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};

/// Selects one of the six parametrised 3×3 RREF shapes of rank 1 or 2.
///
/// | rank | form | matrix                          | parameters |
/// |------|------|---------------------------------|------------|
/// | 1    | 1    | `[[1,a,b],[0,0,0],[0,0,0]]`     | a, b       |
/// | 1    | 2    | `[[0,1,c],[0,0,0],[0,0,0]]`     | c          |
/// | 1    | 3    | `[[0,0,1],[0,0,0],[0,0,0]]`     | none       |
/// | 2    | 1    | `[[1,0,a],[0,1,b],[0,0,0]]`     | a, b       |
/// | 2    | 2    | `[[1,a,0],[0,0,1],[0,0,0]]`     | a          |
/// | 2    | 3    | `[[0,1,0],[0,0,1],[0,0,0]]`     | none       |
///
/// Omitted parameters default to zero. Supplying a parameter the form does
/// not use is an error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogParams {
    pub field: Field,
    pub rank: u8,
    pub form: u8,
    pub a: Option<Scalar>,
    pub b: Option<Scalar>,
    pub c: Option<Scalar>,
}

impl CatalogParams {
    pub fn new(field: Field, rank: u8, form: u8) -> Self {
        CatalogParams {
            field,
            rank,
            form,
            a: None,
            b: None,
            c: None,
        }
    }

    pub fn with_a(mut self, a: Scalar) -> Self {
        self.a = Some(a);
        self
    }

    pub fn with_b(mut self, b: Scalar) -> Self {
        self.b = Some(b);
        self
    }

    pub fn with_c(mut self, c: Scalar) -> Self {
        self.c = Some(c);
        self
    }

    /// `(uses a, uses b, uses c)` for the selected form.
    fn uses(&self) -> Result<(bool, bool, bool)> {
        match (self.rank, self.form) {
            (1, 1) | (2, 1) => Ok((true, true, false)),
            (1, 2) => Ok((false, false, true)),
            (2, 2) => Ok((true, false, false)),
            (1, 3) | (2, 3) => Ok((false, false, false)),
            (r, f) => Err(Error::InvalidParams(format!(
                "no form {f} in rank {r}; rank must be 1 or 2 and form 1..=3"
            ))),
        }
    }
}

pub fn catalog_3x3(params: &CatalogParams) -> Result<Matrix> {
    let (uses_a, uses_b, uses_c) = params.uses()?;
    let field = params.field;
    let get = |name: &str, value: &Option<Scalar>, used: bool| -> Result<Scalar> {
        match value {
            Some(_) if !used => Err(Error::InvalidParams(format!(
                "rank {} form {} takes no parameter `{name}`",
                params.rank, params.form
            ))),
            Some(v) => {
                field.ensure_same(&v.field())?;
                Ok(v.clone())
            }
            None => Ok(field.zero()),
        }
    };
    let a = get("a", &params.a, uses_a)?;
    let b = get("b", &params.b, uses_b)?;
    let c = get("c", &params.c, uses_c)?;
    let template = match (params.rank, params.form) {
        (1, 1) => ["1ab", "000", "000"],
        (1, 2) => ["01c", "000", "000"],
        (1, 3) => ["001", "000", "000"],
        (2, 1) => ["10a", "01b", "000"],
        (2, 2) => ["1a0", "001", "000"],
        (2, 3) => ["010", "001", "000"],
        _ => unreachable!("validated by uses()"),
    };
    let entry = |t: char| match t {
        '1' => field.one(),
        'a' => a.clone(),
        'b' => b.clone(),
        'c' => c.clone(),
        _ => field.zero(),
    };
    let rows = template.iter().map(|r| r.chars().map(entry).collect()).collect();
    Matrix::from_rows(field, rows)
}

/// `T(a, b) = [[1,0,a],[0,1,b],[0,0,0]]`, the rank-2 form 1.
pub fn rank2_form1(a: &Scalar, b: &Scalar) -> Result<Matrix> {
    catalog_3x3(&CatalogParams::new(a.field(), 2, 1).with_a(a.clone()).with_b(b.clone()))
}
