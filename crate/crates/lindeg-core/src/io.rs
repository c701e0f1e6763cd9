//! JSON schemas and text parsing for all externally visible data.
//!
//! Rationals are serialized as `"p/q"` or plain integer strings, `∞` as
//! the string `"inf"`. Plücker vectors list their subsets
//! lexicographically; entries may be omitted on input, meaning `∞`.
//! Points serialize as coordinate arrays, the missing projection result
//! as `null`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{usage, Result};
use crate::fan::{cone_h_description, FanResult, FanSystem, PosetReport};
use crate::matroid::{PlueckerVector, ValuatedMatroid};
use crate::quotient::{FlagInstance, TheoremAReport};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::realization::{LaurentElement, ValuedMatrix};
use crate::relations::{DegenerationType, MembershipReport};
use crate::sets::Subset;
use crate::trop::{TropicalPoint, TropicalValue};

pub fn value_to_string(v: &TropicalValue) -> String {
    match v {
        TropicalValue::Finite(r) => format_rat(r),
        TropicalValue::Infinity => "inf".to_string(),
    }
}

pub fn parse_value(s: &str) -> Result<TropicalValue> {
    if s.trim() == "inf" {
        Ok(TropicalValue::Infinity)
    } else {
        Ok(TropicalValue::Finite(parse_rat(s)?))
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PvEntryDto {
    pub set: Vec<usize>,
    pub val: String,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PlueckerVectorDto {
    pub n: usize,
    pub r: usize,
    pub values: Vec<PvEntryDto>,
}

impl PlueckerVectorDto {
    pub fn from_vector(pv: &PlueckerVector) -> Self {
        PlueckerVectorDto {
            n: pv.n(),
            r: pv.r(),
            values: pv
                .entries()
                .map(|(b, v)| PvEntryDto {
                    set: b.iter().collect(),
                    val: value_to_string(v),
                })
                .collect(),
        }
    }

    pub fn to_vector(&self) -> Result<PlueckerVector> {
        let mut map = BTreeMap::new();
        for e in &self.values {
            let set = Subset::checked(e.set.clone(), self.n)?;
            if set.len() != self.r {
                return Err(usage(format!(
                    "subset {set} does not have cardinality {}",
                    self.r
                )));
            }
            if map.insert(set.clone(), parse_value(&e.val)?).is_some() {
                return Err(usage(format!("duplicate subset {set}")));
            }
        }
        PlueckerVector::new(self.n, self.r, map)
    }
}

/// Input file for membership and equivalence commands.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FlagFileDto {
    pub n: usize,
    pub matroids: Vec<PlueckerVectorDto>,
    #[serde(rename = "S", default)]
    pub sets: Vec<Vec<usize>>,
}

impl FlagFileDto {
    pub fn vectors(&self) -> Result<Vec<PlueckerVector>> {
        self.matroids.iter().map(|m| m.to_vector()).collect()
    }

    pub fn degeneration_type(&self) -> Result<DegenerationType> {
        let vectors = self.vectors()?;
        let ranks = vectors.iter().map(|v| v.r()).collect();
        let sets = self
            .sets
            .iter()
            .map(|s| Subset::checked(s.clone(), self.n))
            .collect::<Result<Vec<_>>>()?;
        DegenerationType::new(self.n, ranks, sets)
    }

    pub fn flag_instance(&self) -> Result<FlagInstance> {
        let matroids = self
            .vectors()?
            .into_iter()
            .map(ValuatedMatroid::from_vector)
            .collect::<Result<Vec<_>>>()?;
        FlagInstance::new(matroids, self.degeneration_type()?)
    }

    pub fn from_instance(fi: &FlagInstance) -> Self {
        FlagFileDto {
            n: fi.dt().n(),
            matroids: fi
                .matroids()
                .iter()
                .map(|m| PlueckerVectorDto::from_vector(m.vector()))
                .collect(),
            sets: fi.dt().sets().iter().map(|s| s.iter().collect()).collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TheoremADto {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub agree: bool,
    pub member: bool,
    pub witnesses: Vec<String>,
}

impl TheoremADto {
    pub fn from_report(r: &TheoremAReport) -> Self {
        TheoremADto {
            a: r.dressian,
            b: r.ld_flag_matroid,
            c: r.projection_containment,
            d: r.morphisms,
            agree: r.agree(),
            member: r.member(),
            witnesses: r.witnesses.clone(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MembershipDto {
    pub member: bool,
    pub failures: Vec<FailureDto>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FailureDto {
    pub block: String,
    pub relation: String,
}

impl MembershipDto {
    pub fn from_report(r: &MembershipReport) -> Self {
        MembershipDto {
            member: r.member,
            failures: r
                .failures
                .iter()
                .map(|f| FailureDto {
                    block: f.block.clone(),
                    relation: f.relation.text(),
                })
                .collect(),
        }
    }
}

pub fn point_to_json(p: &Option<TropicalPoint>) -> serde_json::Value {
    match p {
        None => serde_json::Value::Null,
        Some(p) => serde_json::Value::Array(
            p.coords()
                .iter()
                .map(|v| serde_json::Value::String(value_to_string(v)))
                .collect(),
        ),
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct TermDto {
    pub c: String,
    pub e: String,
}

/// A matrix entry: either a list of `{c, e}` term pairs or an expression
/// string such as `"t^1 + 3*t^-1/2"`.
#[derive(Serialize, Deserialize, Clone, Debug)]
#[serde(untagged)]
pub enum EntryDto {
    Terms(Vec<TermDto>),
    Expr(String),
}

impl EntryDto {
    fn to_element(&self) -> Result<LaurentElement> {
        match self {
            EntryDto::Expr(s) => {
                if s.trim() == "0" {
                    Ok(LaurentElement::zero())
                } else {
                    LaurentElement::parse(s)
                }
            }
            EntryDto::Terms(terms) => {
                let mut acc = LaurentElement::zero();
                for t in terms {
                    acc = acc.add(&LaurentElement::monomial(parse_rat(&t.c)?, parse_rat(&t.e)?));
                }
                Ok(acc)
            }
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct MatrixDto {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<EntryDto>>,
}

impl MatrixDto {
    pub fn from_matrix(m: &ValuedMatrix) -> Self {
        MatrixDto {
            rows: m.rows(),
            cols: m.cols(),
            entries: (1..=m.rows())
                .map(|r| {
                    (1..=m.cols())
                        .map(|c| {
                            EntryDto::Terms(
                                m.entry(r, c)
                                    .terms()
                                    .map(|(e, co)| TermDto {
                                        c: format_rat(co),
                                        e: format_rat(e),
                                    })
                                    .collect(),
                            )
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ValuedMatrix> {
        if self.entries.len() != self.rows {
            return Err(usage("row count mismatch"));
        }
        let entries = self
            .entries
            .iter()
            .map(|row| {
                if row.len() != self.cols {
                    return Err(usage("column count mismatch"));
                }
                row.iter().map(EntryDto::to_element).collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        ValuedMatrix::new(entries)
    }
}

/// Input file for verifying an existing realization chain.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct RealizationFileDto {
    pub n: usize,
    #[serde(rename = "S", default)]
    pub sets: Vec<Vec<usize>>,
    pub matrices: Vec<MatrixDto>,
}

impl RealizationFileDto {
    pub fn matrices(&self) -> Result<Vec<ValuedMatrix>> {
        let out = self
            .matrices
            .iter()
            .map(|m| m.to_matrix())
            .collect::<Result<Vec<_>>>()?;
        if out.iter().any(|m| m.cols() != self.n) {
            return Err(usage(format!("matrices must have {} columns", self.n)));
        }
        Ok(out)
    }

    pub fn subsets(&self) -> Result<Vec<Subset>> {
        self.sets
            .iter()
            .map(|s| Subset::checked(s.clone(), self.n))
            .collect()
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct ConeDto {
    pub dim: usize,
    pub equalities: Vec<Vec<String>>,
    pub inequalities: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FanDto {
    pub n: usize,
    pub ranks: Vec<usize>,
    #[serde(rename = "S")]
    pub sets: Vec<Vec<usize>>,
    pub ambient_dim: usize,
    pub is_empty: bool,
    pub lineality_dim: Option<usize>,
    pub homogeneity_dim: usize,
    pub homogeneity_equals_lineality: bool,
    pub f_vector: Vec<usize>,
    pub maximal_cone_count: usize,
    pub simplicial: bool,
    pub nodes_visited: u64,
    pub rays: Vec<Vec<String>>,
    pub maximal_cones: Vec<ConeDto>,
}

fn rat_row(row: &[Rat]) -> Vec<String> {
    row.iter().map(format_rat).collect()
}

impl FanDto {
    pub fn from_result(sys: &FanSystem, fan: &FanResult) -> Self {
        let s = &fan.summary;
        FanDto {
            n: sys.dt.n(),
            ranks: sys.dt.ranks().to_vec(),
            sets: sys.dt.sets().iter().map(|x| x.iter().collect()).collect(),
            ambient_dim: s.ambient_dim,
            is_empty: s.is_empty,
            lineality_dim: s.lineality_dim,
            homogeneity_dim: s.homogeneity_dim,
            homogeneity_equals_lineality: s.homogeneity_equals_lineality,
            f_vector: s.f_vector.clone(),
            maximal_cone_count: s.maximal_cones,
            simplicial: s.simplicial,
            nodes_visited: s.nodes_visited,
            rays: s.rays.iter().map(|r| rat_row(r)).collect(),
            maximal_cones: fan
                .maximal
                .iter()
                .map(|&i| {
                    let cone = &fan.cones[i];
                    let (eqs, ineqs) = cone_h_description(sys, cone);
                    ConeDto {
                        dim: cone.dim,
                        equalities: eqs.iter().map(|r| rat_row(r)).collect(),
                        inequalities: ineqs.iter().map(|r| rat_row(r)).collect(),
                    }
                })
                .collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct CoverDto {
    #[serde(rename = "S")]
    pub set: Vec<usize>,
    pub added: usize,
    pub homogeneity_contained: bool,
    pub boundary_samples: usize,
    pub boundary_transfers: usize,
}

#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct PosetDto {
    pub covers: Vec<CoverDto>,
    pub bottom_agrees: bool,
    pub top_agrees: bool,
}

impl PosetDto {
    pub fn from_report(r: &PosetReport) -> Self {
        PosetDto {
            covers: r
                .covers
                .iter()
                .map(|c| CoverDto {
                    set: c.set.iter().collect(),
                    added: c.added,
                    homogeneity_contained: c.homogeneity_contained,
                    boundary_samples: c.boundary_samples,
                    boundary_transfers: c.boundary_transfers,
                })
                .collect(),
            bottom_agrees: r.bottom_agrees,
            top_agrees: r.top_agrees,
        }
    }
}

/// Parses a single subset: `{1,2}`, `1,2`, or an empty string for `∅`.
pub fn parse_subset(input: &str, n: usize) -> Result<Subset> {
    let trimmed = input.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if trimmed.is_empty() {
        return Ok(Subset::empty());
    }
    let elements = trimmed
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("invalid element '{p}'")))
        })
        .collect::<Result<Vec<_>>>()?;
    Subset::checked(elements, n)
}

/// Parses a list of subsets: `{1},{2,3}`, `({1},{2,3})`, `1;2,3`, or an
/// empty string for no sets. Semicolons always split groups; commas
/// split groups only at brace boundaries.
pub fn parse_set_list(input: &str, n: usize) -> Result<Vec<Subset>> {
    let trimmed = input.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    let mut groups: Vec<String> = Vec::new();
    if trimmed.contains('{') {
        let mut depth = 0usize;
        let mut current = String::new();
        for ch in trimmed.chars() {
            match ch {
                '{' => {
                    depth += 1;
                    current.push(ch);
                }
                '}' => {
                    depth = depth
                        .checked_sub(1)
                        .ok_or_else(|| usage("unbalanced braces in set list"))?;
                    current.push(ch);
                }
                ',' | ';' if depth == 0 => {
                    groups.push(std::mem::take(&mut current));
                }
                _ => current.push(ch),
            }
        }
        if depth != 0 {
            return Err(usage("unbalanced braces in set list"));
        }
        groups.push(current);
    } else {
        groups = trimmed.split(';').map(str::to_string).collect();
    }
    groups.iter().map(|g| parse_subset(g, n)).collect()
}

/// Parses a comma-separated rank vector, e.g. `1,2,3`.
pub fn parse_ranks(input: &str) -> Result<Vec<usize>> {
    input
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| usage(format!("invalid rank '{p}'")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pluecker_vector_round_trip() {
        let pv = PlueckerVector::from_dense(4, 2, &[Some(1), Some(1), Some(0), Some(2), Some(0), None])
            .unwrap();
        let dto = PlueckerVectorDto::from_vector(&pv);
        let json = serde_json::to_string(&dto).unwrap();
        let back: PlueckerVectorDto = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_vector().unwrap(), pv);
    }

    #[test]
    fn sparse_input_means_infinity() {
        let dto: PlueckerVectorDto = serde_json::from_str(
            r#"{"n":4,"r":1,"values":[{"set":[2],"val":"0"},{"set":[3],"val":"1/2"}]}"#,
        )
        .unwrap();
        let pv = dto.to_vector().unwrap();
        assert!(!pv.value(&Subset::new(vec![1])).is_finite());
        assert!(pv.value(&Subset::new(vec![3])).is_finite());
    }

    #[test]
    fn flag_file_round_trip() {
        let json = r#"{
            "n": 4,
            "matroids": [
                {"n":4,"r":1,"values":[{"set":[1],"val":"0"},{"set":[2],"val":"0"},{"set":[3],"val":"0"},{"set":[4],"val":"0"}]},
                {"n":4,"r":2,"values":[{"set":[1,2],"val":"1"},{"set":[1,3],"val":"1"},{"set":[1,4],"val":"0"},{"set":[2,3],"val":"2"},{"set":[2,4],"val":"0"},{"set":[3,4],"val":"0"}]}
            ],
            "S": [[1]]
        }"#;
        let dto: FlagFileDto = serde_json::from_str(json).unwrap();
        let fi = dto.flag_instance().unwrap();
        assert_eq!(fi.matroids().len(), 2);
        assert_eq!(fi.dt().sets()[0], Subset::new(vec![1]));
        let back = FlagFileDto::from_instance(&fi);
        assert_eq!(back.matroids.len(), 2);
    }

    #[test]
    fn matrix_round_trip() {
        let (_, a2) = crate::realization::counterexample_matrices();
        let dto = MatrixDto::from_matrix(&a2);
        let back = dto.to_matrix().unwrap();
        assert_eq!(back, a2);
    }

    #[test]
    fn matrix_entries_accept_expression_strings() {
        let json = r#"{
            "rows": 2, "cols": 4,
            "entries": [
                ["1", "1", "1", "1"],
                ["t^1", "0", "t^2", "1"]
            ]
        }"#;
        let dto: MatrixDto = serde_json::from_str(json).unwrap();
        let m = dto.to_matrix().unwrap();
        let (_, a2) = crate::realization::counterexample_matrices();
        assert_eq!(m, a2);

        let mixed = r#"{
            "rows": 1, "cols": 2,
            "entries": [[[{"c":"3","e":"-1/2"}], "t^1 + 3*t^-1/2"]]
        }"#;
        let dto: MatrixDto = serde_json::from_str(mixed).unwrap();
        assert!(dto.to_matrix().is_ok());
    }

    #[test]
    fn set_parsing() {
        assert_eq!(parse_subset("{1,3}", 4).unwrap(), Subset::new(vec![1, 3]));
        assert_eq!(parse_subset("2", 4).unwrap(), Subset::new(vec![2]));
        assert_eq!(parse_subset("", 4).unwrap(), Subset::empty());
        assert!(parse_subset("5", 4).is_err());

        let sets = parse_set_list("{1},{2,3}", 4).unwrap();
        assert_eq!(sets, vec![Subset::new(vec![1]), Subset::new(vec![2, 3])]);
        let sets = parse_set_list("1;2,3", 4).unwrap();
        assert_eq!(sets, vec![Subset::new(vec![1]), Subset::new(vec![2, 3])]);
        let sets = parse_set_list("({1},{})", 4).unwrap();
        assert_eq!(sets, vec![Subset::new(vec![1]), Subset::empty()]);
        assert!(parse_set_list("", 4).unwrap().is_empty());
        assert!(parse_set_list("{1", 4).is_err());

        assert_eq!(parse_ranks("1,2,3").unwrap(), vec![1, 2, 3]);
        assert!(parse_ranks("1,x").is_err());
    }

    #[test]
    fn point_serialization() {
        let p = TropicalPoint::from_ints(&[Some(0), None, Some(2)]).unwrap();
        assert_eq!(
            serde_json::to_string(&point_to_json(&Some(p))).unwrap(),
            r#"["0","inf","2"]"#
        );
        assert_eq!(serde_json::to_string(&point_to_json(&None)).unwrap(), "null");
    }
}
