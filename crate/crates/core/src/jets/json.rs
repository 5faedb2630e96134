//! File forms of candidates and towers. The approach is written as the
//! object the candidate lives over: `D^n` is the second approach, `D_n` the
//! third, anything else an induced map. Points are polynomial texts in the
//! parameters; body entries are polynomial texts in the parameters and
//! the inputs `g{j}_{exps}`, keyed by basis monomial, zeros omitted.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::tower::FirstApproachTower;
use super::{Approach, JetCandidate};
use crate::error::{Error, Result};
use crate::infinitesimal::InfObject;
use crate::poly::{format_poly, parse_poly_with, Polynomial};
use crate::prolong::CoordSpace;
use crate::weil::json::{monomial_text, parse_monomial};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct CandidateJson {
    pub approach: String,
    #[serde(default)]
    pub params: Vec<String>,
    pub base: Vec<String>,
    pub fiber: Vec<String>,
    pub body: Vec<BTreeMap<String, String>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
pub struct TowerJson {
    #[serde(default)]
    pub params: Vec<String>,
    pub base: Vec<String>,
    pub fiber: Vec<String>,
    /// `levels[k-1][row][col]` is entry `(row, col)` of `A_k`.
    pub levels: Vec<Vec<Vec<String>>>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JetFile {
    Candidate(CandidateJson),
    Tower(TowerJson),
}

impl JetFile {
    pub fn parse(text: &str) -> Result<JetFile> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn to_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }
}

fn approach_text(a: &Approach) -> String {
    a.object().to_string()
}

fn parse_approach(s: &str) -> Result<Approach> {
    let obj: InfObject = s.parse().map_err(|e| Error::Schema(format!("approach {s:?}: {e}")))?;
    Ok(match obj {
        InfObject::Basic(n) => Approach::Second(n),
        InfObject::Power(n) => Approach::Third(n),
        other => Approach::Induced(other),
    })
}

fn texts(ps: &[Polynomial], names: &[String]) -> Vec<String> {
    ps.iter().map(|p| format_poly(p, names)).collect()
}

fn parse_all(ss: &[String], names: &[String]) -> Result<Vec<Polynomial>> {
    ss.iter().map(|s| parse_poly_with(s, names)).collect()
}

impl CandidateJson {
    pub fn from_candidate(j: &JetCandidate) -> Self {
        let alg = j.algebra();
        let names = j.input_names();
        let body = j
            .body()
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(_, q)| !q.is_zero())
                    .map(|(k, q)| (monomial_text(&alg.basis()[k + 1], alg.nvars()), format_poly(q, &names)))
                    .collect()
            })
            .collect();
        CandidateJson {
            approach: approach_text(j.approach()),
            params: j.params().to_vec(),
            base: texts(j.base_point(), j.params()),
            fiber: texts(j.fiber_point(), j.params()),
            body,
        }
    }

    pub fn to_candidate(&self) -> Result<JetCandidate> {
        let approach = parse_approach(&self.approach)?;
        let space = CoordSpace::bundle(self.base.len(), self.fiber.len());
        let base = parse_all(&self.base, &self.params)?;
        let fiber = parse_all(&self.fiber, &self.params)?;
        let alg = approach.object().algebra()?;
        let n = self.params.len() + space.base * (alg.dim() - 1);
        if self.body.len() != space.fiber {
            return Err(Error::Schema(format!("{} body rows for {} fiber coordinates", self.body.len(), space.fiber)));
        }
        let skeleton = JetCandidate::new(
            approach.clone(),
            space,
            self.params.clone(),
            base.clone(),
            fiber.clone(),
            vec![vec![Polynomial::zero(n); alg.dim() - 1]; space.fiber],
        )?;
        let names = skeleton.input_names();
        let body = self
            .body
            .iter()
            .map(|map| {
                let mut row = vec![Polynomial::zero(n); alg.dim() - 1];
                for (m, q) in map {
                    let mono = parse_monomial(m, alg.nvars())?;
                    let idx = alg
                        .index_of(&mono)
                        .filter(|&i| i > 0)
                        .ok_or_else(|| Error::Schema(format!("{m} is not a non-unit basis monomial")))?;
                    row[idx - 1] = parse_poly_with(q, &names)?;
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        JetCandidate::new(approach, space, self.params.clone(), base, fiber, body)
    }
}

impl TowerJson {
    pub fn from_tower(t: &FirstApproachTower) -> Self {
        let names = t.params();
        TowerJson {
            params: names.to_vec(),
            base: texts(t.base_point(), names),
            fiber: texts(t.fiber_point(), names),
            levels: t.levels().iter().map(|a| a.iter().map(|row| texts(row, names)).collect()).collect(),
        }
    }

    pub fn to_tower(&self) -> Result<FirstApproachTower> {
        let levels = self
            .levels
            .iter()
            .map(|a| a.iter().map(|row| parse_all(row, &self.params)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        FirstApproachTower::new(
            self.base.len(),
            self.params.clone(),
            parse_all(&self.base, &self.params)?,
            parse_all(&self.fiber, &self.params)?,
            levels,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::SectionJet;
    use crate::poly::int;

    #[test]
    fn candidate_round_trip() {
        let s = SectionJet::symbolic(2, 1, 2, &[int(0), int(1)]).unwrap();
        for j in [s.second(2).unwrap(), s.third(2).unwrap()] {
            let file = JetFile::Candidate(CandidateJson::from_candidate(&j));
            let JetFile::Candidate(c) = JetFile::parse(&file.to_pretty()).unwrap() else { panic!() };
            assert_eq!(c.to_candidate().unwrap(), j);
        }
    }

    #[test]
    fn tower_round_trip() {
        let t = SectionJet::symbolic(1, 1, 2, &[int(3)]).unwrap().first(2).unwrap();
        let file = JetFile::Tower(TowerJson::from_tower(&t));
        let JetFile::Tower(back) = JetFile::parse(&file.to_pretty()).unwrap() else { panic!() };
        assert_eq!(back.to_tower().unwrap(), t);
    }

    #[test]
    fn schema_errors() {
        assert!(matches!(JetFile::parse("{\"kind\": \"nope\"}"), Err(Error::Schema(_))));
        let bad = CandidateJson {
            approach: "D^1".into(),
            params: vec![],
            base: vec!["0".into()],
            fiber: vec!["0".into()],
            body: vec![BTreeMap::from([("X2".to_string(), "1".to_string())])],
        };
        assert!(bad.to_candidate().is_err());
    }
}
