//! JSON documents for every object that crosses the CLI boundary.
//!
//! All documents carry a `type` discriminator. Operation tables are
//! row-major index lists over the `elements` array; relations are pair
//! lists over 0-based forest nodes. Emitted documents are deterministic,
//! so `parse(emit(x))` is structural identity for every object type.

use gf_core::duality::DownsetAlgebra;
use gf_core::{Elem, Error, Forest, Gao, GodelAlgebra, OneRelFrame, Rel, TwoRelFrame};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Doc {
    Forest(ForestDoc),
    Algebra(AlgebraDoc),
    Gao(GaoDoc),
    Frame2(Frame2Doc),
    Frame1(Frame1Doc),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ForestDoc {
    pub nodes: usize,
    pub covers: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub elements: Vec<String>,
    pub meet: Vec<Elem>,
    pub join: Vec<Elem>,
    pub imp: Vec<Elem>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaoDoc {
    pub algebra: AlgebraDoc,
    #[serde(rename = "box")]
    pub box_table: Vec<Elem>,
    #[serde(rename = "diamond")]
    pub dia_table: Vec<Elem>,
}

/// The optional `ra` field appears only on emitted induced-relation frames
/// (the `dual` of a GAO); it is informative and ignored when read back.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Frame2Doc {
    pub forest: ForestDoc,
    pub rbox: Vec<(usize, usize)>,
    pub rdia: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ra: Option<Vec<(usize, usize)>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Frame1Doc {
    pub forest: ForestDoc,
    pub r: Vec<(usize, usize)>,
}

/// A parsed and validated document, with element names kept alongside the
/// algebraic carriers so reports can speak the input's language.
pub enum Object {
    Forest(Forest),
    Algebra(GodelAlgebra, Vec<String>),
    Gao(Gao, Vec<String>),
    Frame2(TwoRelFrame),
    Frame1(OneRelFrame),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Forest(_) => "forest",
            Object::Algebra(..) => "algebra",
            Object::Gao(..) => "gao",
            Object::Frame2(_) => "frame2",
            Object::Frame1(_) => "frame1",
        }
    }
}

impl ForestDoc {
    pub fn realize(&self) -> Result<Forest, Error> {
        Forest::from_covers(self.nodes, &self.covers)
    }

    pub fn of(f: &Forest) -> ForestDoc {
        ForestDoc { nodes: f.n(), covers: f.covers() }
    }
}

impl AlgebraDoc {
    pub fn realize(&self) -> Result<GodelAlgebra, Error> {
        let n = self.elements.len();
        for (i, a) in self.elements.iter().enumerate() {
            if self.elements[..i].contains(a) {
                return Err(Error::MalformedTable {
                    table: "elements",
                    why: format!("duplicate element name {a:?}"),
                });
            }
        }
        GodelAlgebra::new(n, self.meet.clone(), self.join.clone(), self.imp.clone())
    }

    pub fn of(a: &GodelAlgebra, names: &[String]) -> AlgebraDoc {
        AlgebraDoc {
            elements: names.to_vec(),
            meet: a.meet_table().to_vec(),
            join: a.join_table().to_vec(),
            imp: a.imp_table().to_vec(),
        }
    }
}

impl GaoDoc {
    pub fn realize(&self) -> Result<(Gao, Vec<String>), Error> {
        let a = self.algebra.realize()?;
        let g = Gao::new(a, self.box_table.clone(), self.dia_table.clone())?;
        Ok((g, self.algebra.elements.clone()))
    }

    pub fn of(g: &Gao, names: &[String]) -> GaoDoc {
        GaoDoc {
            algebra: AlgebraDoc::of(g.algebra(), names),
            box_table: g.box_table().to_vec(),
            dia_table: g.dia_table().to_vec(),
        }
    }
}

fn rel_from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Rel, Error> {
    Rel::from_pairs(n, pairs)
}

impl Frame2Doc {
    pub fn realize(&self) -> Result<TwoRelFrame, Error> {
        let f = self.forest.realize()?;
        let rbox = rel_from_pairs(f.n(), &self.rbox)?;
        let rdia = rel_from_pairs(f.n(), &self.rdia)?;
        TwoRelFrame::new(f, rbox, rdia)
    }

    pub fn of(fr: &TwoRelFrame) -> Frame2Doc {
        Frame2Doc {
            forest: ForestDoc::of(fr.forest()),
            rbox: fr.rbox().pairs(),
            rdia: fr.rdia().pairs(),
            ra: None,
        }
    }
}

impl Frame1Doc {
    pub fn realize(&self) -> Result<OneRelFrame, Error> {
        let f = self.forest.realize()?;
        let r = rel_from_pairs(f.n(), &self.r)?;
        OneRelFrame::new(f, r)
    }

    pub fn of(fr: &OneRelFrame) -> Frame1Doc {
        Frame1Doc { forest: ForestDoc::of(fr.forest()), r: fr.r().pairs() }
    }
}

impl Doc {
    pub fn realize(&self) -> Result<Object, Error> {
        Ok(match self {
            Doc::Forest(d) => Object::Forest(d.realize()?),
            Doc::Algebra(d) => {
                let names = d.elements.clone();
                Object::Algebra(d.realize()?, names)
            }
            Doc::Gao(d) => {
                let (g, names) = d.realize()?;
                Object::Gao(g, names)
            }
            Doc::Frame2(d) => Object::Frame2(d.realize()?),
            Doc::Frame1(d) => Object::Frame1(d.realize()?),
        })
    }
}

/// Canonical names for the elements of a downset algebra: the downset's
/// node list in braces, `{}` for bottom.
pub fn downset_names(dual: &DownsetAlgebra) -> Vec<String> {
    dual.downsets
        .iter()
        .map(|m| {
            let inner: Vec<String> = m.iter().map(|i| i.to_string()).collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect()
}
