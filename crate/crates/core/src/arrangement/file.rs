use serde::{Deserialize, Serialize};

use super::Arrangement;
use crate::error::Result;
use crate::field::FieldElement;

/// On-disk form of an arrangement; covector entries use the field grammar.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrangementFile {
    pub name: String,
    pub lines: Vec<LineEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineEntry {
    pub label: String,
    pub covector: [String; 3],
}

impl ArrangementFile {
    pub fn to_arrangement(&self) -> Result<Arrangement> {
        let lines = self
            .lines
            .iter()
            .map(|l| {
                let c = [
                    FieldElement::parse(&l.covector[0])?,
                    FieldElement::parse(&l.covector[1])?,
                    FieldElement::parse(&l.covector[2])?,
                ];
                Ok((l.label.clone(), c))
            })
            .collect::<Result<Vec<_>>>()?;
        Arrangement::build(self.name.clone(), lines)
    }
}

impl From<&Arrangement> for ArrangementFile {
    /// Canonical form: normalized covectors in canonical text.
    fn from(a: &Arrangement) -> Self {
        ArrangementFile {
            name: a.name().to_string(),
            lines: a
                .lines()
                .iter()
                .map(|l| LineEntry { label: l.label.clone(), covector: l.covector.clone().map(|c| c.serialize()) })
                .collect(),
        }
    }
}
