//! The JSON algebra file format.
//!
//! ```json
//! { "field": 1009, "kupisch": { "series": [2, 2, 2, 1], "cyclic": false } }
//! { "field": 1009,
//!   "quiver": { "vertices": 2, "arrows": [{ "name": "a", "from": 0, "to": 1 }] },
//!   "relations": [[{ "coef": 1, "path": ["a", "b"] }]],
//!   "max_path_length": 64 }
//! ```
//!
//! `field` defaults to 1009; an optional `label` names the algebra.

use serde::{Deserialize, Serialize};

use crate::algebra::{
    build_algebra, Algebra, AlgebraPresentation, KupischSeries, Orientation, Quiver, QuiverArrow, Relation,
};
use crate::error::{Error, Result};
use crate::field::{Fp, DEFAULT_PRIME};

fn default_field() -> u64 {
    DEFAULT_PRIME as u64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default = "default_field")]
    pub field: u64,
    #[serde(flatten)]
    pub body: AlgebraBody,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraBody {
    Kupisch {
        kupisch: KupischSpec,
    },
    Quiver {
        quiver: QuiverSpec,
        #[serde(default)]
        relations: Vec<Vec<TermSpec>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        max_path_length: Option<usize>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KupischSpec {
    pub series: Vec<usize>,
    #[serde(default)]
    pub cyclic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverSpec {
    pub vertices: usize,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub name: String,
    pub from: usize,
    pub to: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coef: i64,
    pub path: Vec<String>,
}

/// Overrides applied when building an algebra from a file.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildOptions {
    pub field: Option<u64>,
    pub max_path_length: Option<usize>,
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<AlgebraFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn from_kupisch(k: &KupischSeries) -> AlgebraFile {
        AlgebraFile {
            label: Some(k.label()),
            field: default_field(),
            body: AlgebraBody::Kupisch { kupisch: KupischSpec { series: k.lengths().to_vec(), cyclic: k.is_cyclic() } },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("algebra files serialize")
    }

    /// The Kupisch series, for files in Kupisch form.
    pub fn kupisch(&self) -> Result<Option<KupischSeries>> {
        match &self.body {
            AlgebraBody::Kupisch { kupisch } => {
                let o = if kupisch.cyclic { Orientation::Cyclic } else { Orientation::Linear };
                Ok(Some(KupischSeries::new(kupisch.series.clone(), o)?))
            }
            AlgebraBody::Quiver { .. } => Ok(None),
        }
    }

    pub fn presentation(&self, opts: BuildOptions) -> Result<AlgebraPresentation> {
        let field = Fp::new(opts.field.unwrap_or(self.field))?;
        let mut p = match &self.body {
            AlgebraBody::Kupisch { .. } => self.kupisch()?.expect("Kupisch form").presentation(field),
            AlgebraBody::Quiver { quiver, relations, max_path_length } => {
                let arrows = quiver
                    .arrows
                    .iter()
                    .map(|a| QuiverArrow { name: a.name.clone(), source: a.from, target: a.to })
                    .collect();
                let relations = relations
                    .iter()
                    .map(|terms| Relation { terms: terms.iter().map(|t| (t.coef, t.path.clone())).collect() })
                    .collect();
                let label = self.label.clone().unwrap_or_else(|| "algebra".to_string());
                let mut p =
                    AlgebraPresentation::new(field, label, Quiver { vertex_count: quiver.vertices, arrows }, relations);
                if let Some(l) = max_path_length {
                    p.max_path_length = *l;
                }
                p
            }
        };
        if let Some(l) = opts.max_path_length {
            p.max_path_length = l;
        }
        if let Some(label) = &self.label {
            p.label = label.clone();
        }
        Ok(p)
    }

    pub fn build(&self, opts: BuildOptions) -> Result<Algebra> {
        build_algebra(&self.presentation(opts)?)
    }
}
