//! JSON interchange format for frames:
//!
//! ```json
//! {"dim_h": 2, "operators": [{"rows": 1, "re": [[1.0, 0.0]], "im": [[0.0, 0.5]]}]}
//! ```
//!
//! Matrices are nested row-major arrays; a missing `"im"` means a zero
//! imaginary part. Values are written in shortest round-trip form, so a
//! write/read cycle reproduces every entry exactly.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::GFrame;
use crate::numeric::ComplexMatrix;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FrameDocument {
    pub dim_h: usize,
    pub operators: Vec<OperatorDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDocument {
    pub rows: usize,
    pub re: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<f64>>>,
}

impl FrameDocument {
    pub fn from_frame(frame: &GFrame) -> Self {
        let operators = frame
            .operators()
            .iter()
            .map(|op| {
                let (re, im) = op.to_parts();
                let has_imag = im.iter().flatten().any(|&v| v != 0.0);
                OperatorDocument {
                    rows: op.rows(),
                    re,
                    im: has_imag.then_some(im),
                }
            })
            .collect();
        Self {
            dim_h: frame.dim(),
            operators,
        }
    }

    pub fn to_frame(&self) -> Result<GFrame> {
        let ops = self
            .operators
            .iter()
            .enumerate()
            .map(|(i, doc)| {
                if doc.rows != doc.re.len() {
                    return Err(Error::Format(format!(
                        "operator {i}: \"rows\" is {} but \"re\" has {} rows",
                        doc.rows,
                        doc.re.len()
                    )));
                }
                if let Some((r, row)) = doc.re.iter().enumerate().find(|(_, row)| row.len() != self.dim_h) {
                    return Err(Error::Format(format!(
                        "operator {i}: row {r} has {} entries, expected dim_h = {}",
                        row.len(),
                        self.dim_h
                    )));
                }
                ComplexMatrix::from_parts(&doc.re, doc.im.as_deref())
                    .map_err(|e| Error::Format(format!("operator {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        GFrame::new(self.dim_h, ops).map_err(|e| Error::Format(e.to_string()))
    }
}

pub fn to_json(frame: &GFrame) -> String {
    serde_json::to_string_pretty(&FrameDocument::from_frame(frame))
        .expect("frame documents always serialise")
}

pub fn from_json(text: &str) -> Result<GFrame> {
    let doc: FrameDocument =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    doc.to_frame()
}

pub fn read_frame(path: impl AsRef<Path>) -> Result<GFrame> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    from_json(&text)
}

pub fn write_frame(path: impl AsRef<Path>, frame: &GFrame) -> Result<()> {
    let path = path.as_ref();
    let mut text = to_json(frame);
    text.push('\n');
    fs::write(path, text).map_err(|e| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}
