//! Value documents: per-state breakpoint lists as JSON
//! (`{"horizon", "values": {id: [{"t", "v"}]}, "infinite": [ids]}`) or CSV
//! rows `state,t,v` (an infinite state is one row with empty `t` and `v` =
//! `inf`).

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::Game;
use crate::pwl::PwlFunction;
use crate::rational::Rational;
use crate::values::ValueMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Breakpoint {
    pub t: Rational,
    pub v: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValueDocument {
    pub horizon: Rational,
    /// Finite states in game order.
    pub values: IndexMap<String, Vec<Breakpoint>>,
    #[serde(default)]
    pub infinite: Vec<String>,
}

impl ValueDocument {
    pub fn new(game: &Game, vm: &ValueMap) -> Self {
        let mut values = IndexMap::new();
        let mut infinite = Vec::new();
        for s in game.state_ids() {
            let f = vm.get(s);
            if f.is_infinite() {
                infinite.push(game.id(s).to_string());
            } else {
                let pts = f.breakpoints().iter().map(|(t, v)| Breakpoint { t: t.clone(), v: v.clone() }).collect();
                values.insert(game.id(s).to_string(), pts);
            }
        }
        ValueDocument { horizon: vm.horizon().clone(), values, infinite }
    }

    pub fn function(&self, id: &str) -> Result<PwlFunction> {
        if self.infinite.iter().any(|s| s == id) {
            return Ok(PwlFunction::infinite(self.horizon.clone()));
        }
        let pts = self.values.get(id).ok_or_else(|| Error::UnknownState(id.to_string()))?;
        Ok(PwlFunction::new(self.horizon.clone(), pts.iter().map(|b| (b.t.clone(), b.v.clone())).collect())?)
    }

    /// State ids in document order, finite ones first.
    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str).chain(self.infinite.iter().map(String::as_str))
    }

    /// Every function must be a valid breakpoint list over the horizon.
    pub fn check(&self) -> Result<()> {
        for id in self.values.keys() {
            self.function(id)?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("serializable");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: ValueDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        doc.check()?;
        Ok(doc)
    }

    /// CSV with a header row; the horizon is the last `t` of any finite state
    /// and is passed separately when reading back.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["state", "t", "v"]).unwrap();
        for (id, pts) in &self.values {
            for b in pts {
                w.write_record([id.as_str(), &b.t.to_string(), &b.v.to_string()]).unwrap();
            }
        }
        for id in &self.infinite {
            w.write_record([id.as_str(), "", "inf"]).unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    pub fn from_csv(text: &str, horizon: Rational) -> Result<Self> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let mut values: IndexMap<String, Vec<Breakpoint>> = IndexMap::new();
        let mut infinite = Vec::new();
        for (k, rec) in r.records().enumerate() {
            let rec = rec.map_err(|e| Error::Parse(e.to_string()))?;
            let line = k + 2;
            let [id, t, v] = [0, 1, 2].map(|i| rec.get(i).unwrap_or(""));
            if v == "inf" {
                infinite.push(id.to_string());
                continue;
            }
            let parse = |x: &str| x.parse::<Rational>().map_err(|e| Error::Parse(format!("line {line}: {e}")));
            values.entry(id.to_string()).or_default().push(Breakpoint { t: parse(t)?, v: parse(v)? });
        }
        let doc = ValueDocument { horizon, values, infinite };
        doc.check()?;
        Ok(doc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::gen_exp_family;
    use crate::solve::event_point_iteration;

    #[test]
    fn json_and_csv_agree() {
        let mut g = gen_exp_family(2);
        let a = g.add_state("stuck", crate::Owner::Max, Rational::zero()).unwrap();
        let _ = a;
        let vm = event_point_iteration(&g).unwrap();
        let doc = ValueDocument::new(&g, &vm);
        assert_eq!(doc.infinite, vec!["stuck".to_string()]);
        assert_eq!(ValueDocument::from_json(&doc.to_json()).unwrap(), doc);
        assert_eq!(ValueDocument::from_csv(&doc.to_csv(), Rational::one()).unwrap(), doc);
        assert_eq!(doc.function("vl2").unwrap(), *vm.get(g.find("vl2").unwrap()));
    }
}
