//! Command results and their JSON and table renderings.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use gradalg_core::groebner::ReductionSystem;
use gradalg_core::linalg::Subspace;
use gradalg_core::scalars::Scalar;
use serde::Serialize;

/// A scalar as it appears in JSON: `3/2` over the rationals, `r mod p` over
/// a prime field.
pub fn scalar_text(s: &Scalar) -> String {
    match s.residue() {
        Some(r) => format!("{r} mod {}", s.field().characteristic()),
        None => s.to_string(),
    }
}

pub fn scalar_row(v: &[Scalar]) -> Vec<String> {
    v.iter().map(scalar_text).collect()
}

/// A subspace of `A_d`: the normal words used as coordinates and the RREF
/// rows of a basis.
#[derive(Debug, Serialize)]
pub struct SubspaceReport {
    pub degree: u32,
    pub words: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl SubspaceReport {
    pub fn new(rs: &ReductionSystem, degree: u32, space: &Subspace) -> Self {
        SubspaceReport {
            degree,
            words: rs.normal_words(degree).iter().map(|w| w.to_text(rs.gens())).collect(),
            rows: space.basis().iter().map(|r| scalar_row(r)).collect(),
        }
    }

    fn table(&self, out: &mut String) {
        let _ = writeln!(out, "  degree {}: dim {} over [{}]", self.degree, self.rows.len(), self.words.join(", "));
        for r in &self.rows {
            let _ = writeln!(out, "    ({})", r.join(", "));
        }
    }
}

#[derive(Debug, Serialize)]
pub struct HilbertReport {
    pub hilbert: Vec<usize>,
    #[serde(rename = "D")]
    pub truncation: u32,
}

#[derive(Debug, Serialize)]
pub struct Rule {
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Serialize)]
pub struct GbReport {
    pub rules: Vec<Rule>,
    #[serde(rename = "D")]
    pub truncation: u32,
}

#[derive(Debug, Serialize)]
pub struct CharactersReport {
    pub characters: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct Profile {
    pub point: Vec<String>,
    pub cotangent: usize,
    pub powers: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct TangentReport {
    pub depth: usize,
    pub profiles: Vec<Profile>,
}

#[derive(Debug, Serialize)]
pub struct IdealReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<Vec<usize>>,
    #[serde(rename = "D")]
    pub truncation: u32,
    pub dim: usize,
    pub codim: usize,
    pub parts: Vec<SubspaceReport>,
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum NormalReport {
    Element { element: String, bound: u32, normal: bool },
    Lines { bound: u32, normal_lines: Vec<String> },
}

#[derive(Debug, Serialize)]
pub struct CenterReport {
    #[serde(flatten)]
    pub part: SubspaceReport,
    pub elements: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct BracketPart {
    pub power: u32,
    pub part: String,
}

#[derive(Debug, Serialize)]
pub struct BracketsReport {
    pub input: String,
    pub distinguished: String,
    pub degree: u32,
    pub parts: Vec<BracketPart>,
    pub decomposition: String,
    pub verified: bool,
}

#[derive(Debug, Serialize)]
pub struct FingerprintReport {
    #[serde(rename = "D")]
    pub truncation: u32,
    pub hilbert: Vec<usize>,
    pub commutator_dims: Vec<usize>,
    pub normal_line_count: Option<usize>,
    pub cotangent_multiset: Option<BTreeMap<usize, usize>>,
}

#[derive(Debug, Serialize)]
pub struct IsoReport {
    pub isomorphic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalars: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix: Option<Vec<Vec<String>>>,
    pub checked_degree: u32,
}

#[derive(Debug, Serialize)]
pub struct CancelReport {
    pub presentation: String,
    pub hilbert: Vec<usize>,
    #[serde(rename = "D")]
    pub truncation: u32,
}

/// Any command result.
#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Report {
    Hilbert(HilbertReport),
    Gb(GbReport),
    Characters(CharactersReport),
    Tangent(TangentReport),
    Ideal(IdealReport),
    Normal(NormalReport),
    Center(CenterReport),
    Brackets(BracketsReport),
    Fingerprint(FingerprintReport),
    Iso(IsoReport),
    Cancel(CancelReport),
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn point(p: &[String]) -> String {
    format!("({})", p.join(", "))
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let o = &mut out;
        match self {
            Report::Hilbert(r) => {
                let _ = writeln!(o, "degree  dim");
                for (d, h) in r.hilbert.iter().enumerate() {
                    let _ = writeln!(o, "{d:>6}  {h}");
                }
            }
            Report::Gb(r) => {
                let _ = writeln!(o, "{} rules up to degree {}", r.rules.len(), r.truncation);
                for rule in &r.rules {
                    let _ = writeln!(o, "  {} -> {}", rule.lhs, rule.rhs);
                }
            }
            Report::Characters(r) => {
                let _ = writeln!(o, "{} characters", r.characters.len());
                for c in &r.characters {
                    let _ = writeln!(o, "  {}", point(c));
                }
            }
            Report::Tangent(r) => {
                let _ = writeln!(o, "point  cotangent  powers (depth {})", r.depth);
                for p in &r.profiles {
                    let _ = writeln!(o, "  {}  {}  [{}]", point(&p.point), p.cotangent, join(&p.powers));
                }
            }
            Report::Ideal(r) => {
                match (&r.s, &r.profile) {
                    (Some(s), _) => {
                        let _ = writeln!(o, "J_{s} up to degree {}", r.truncation);
                    }
                    (_, Some(p)) => {
                        let _ = writeln!(o, "J_({}) up to degree {}", join(p), r.truncation);
                    }
                    _ => {}
                }
                let _ = writeln!(o, "dim {}  codim {}", r.dim, r.codim);
                for part in &r.parts {
                    part.table(o);
                }
            }
            Report::Normal(NormalReport::Element { element, bound, normal }) => {
                let verdict = if *normal { "normal" } else { "not normal" };
                let _ = writeln!(o, "{element} is {verdict} up to degree {bound}");
            }
            Report::Normal(NormalReport::Lines { bound, normal_lines }) => {
                let _ = writeln!(o, "{} normal lines in degree 1 (checked up to degree {bound})", normal_lines.len());
                for l in normal_lines {
                    let _ = writeln!(o, "  {l}");
                }
            }
            Report::Center(r) => {
                let _ = writeln!(o, "center in degree {}: dim {}", r.part.degree, r.elements.len());
                for e in &r.elements {
                    let _ = writeln!(o, "  {e}");
                }
            }
            Report::Brackets(r) => {
                let _ = writeln!(o, "input         {}", r.input);
                let _ = writeln!(o, "distinguished {}", r.distinguished);
                let _ = writeln!(o, "degree        {}", r.degree);
                let _ = writeln!(o, "decomposition {}", r.decomposition);
                let _ = writeln!(o, "verified      {}", r.verified);
            }
            Report::Fingerprint(r) => {
                let _ = writeln!(o, "hilbert            [{}]", join(&r.hilbert));
                let _ = writeln!(o, "commutator dims    [{}]", join(&r.commutator_dims));
                let lines = r.normal_line_count.map_or("skipped".to_string(), |n| n.to_string());
                let _ = writeln!(o, "normal lines       {lines}");
                let multiset = r
                    .cotangent_multiset
                    .as_ref()
                    .map_or("skipped".to_string(), |m| m.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" "));
                let _ = writeln!(o, "cotangent multiset {multiset}");
            }
            Report::Iso(r) => {
                let _ = writeln!(o, "isomorphic {} (checked up to degree {})", r.isomorphic, r.checked_degree);
                if let (Some(s), Some(a)) = (&r.sigma, &r.scalars) {
                    let _ = writeln!(o, "sigma   [{}]", join(s));
                    let _ = writeln!(o, "scalars [{}]", a.join(", "));
                }
                if let Some(m) = &r.matrix {
                    let _ = writeln!(o, "matrix");
                    for row in m {
                        let _ = writeln!(o, "  ({})", row.join(", "));
                    }
                }
            }
            Report::Cancel(r) => {
                let _ = write!(o, "{}", r.presentation);
                let _ = writeln!(o, "# hilbert [{}] up to degree {}", join(&r.hilbert), r.truncation);
            }
        }
        out
    }
}
