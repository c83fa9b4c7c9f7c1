//! Loading sequences, topologies and neighbourhoods from files or inline flags.
//!
//! A file that cannot be read or does not have the expected shape is a parse error. A
//! well-formed descriptor whose values break a precondition (say, a sequence gap of 1) is
//! a domain error.

use std::path::{Path, PathBuf};

use bicyclic_core::element::parse_pair_list;
use bicyclic_core::topology::NbhdPayload;
use bicyclic_core::{Nbhd, Pair, Sequence, SequencePair, TopologySpec};
use clap::{Args, ValueEnum};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone)]
pub struct ApexList(pub Vec<Pair>);

pub fn parse_apex_list(s: &str) -> Result<ApexList, String> {
    parse_pair_list(s).map(ApexList).map_err(|e| e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Discrete,
    Lcshift,
    #[value(name = "min_sh")]
    MinSh,
    #[value(name = "min_i")]
    MinI,
}

impl Kind {
    pub fn from_name(s: &str) -> Option<Kind> {
        Kind::from_str(s, false).ok()
    }
}

#[derive(Debug, Args)]
pub struct SeqArgs {
    /// JSON file `{"x":{"prefix":[..],"step":..},"y":{..}}`
    #[arg(long, value_name = "FILE")]
    pub seqs: Option<PathBuf>,
    /// Inline x sequence such as `[2]+2`
    #[arg(long, value_name = "SEQ")]
    pub x: Option<Sequence>,
    /// Inline y sequence such as `[3]+2`
    #[arg(long, value_name = "SEQ")]
    pub y: Option<Sequence>,
}

impl SeqArgs {
    pub fn given(&self) -> bool {
        self.seqs.is_some() || self.x.is_some() || self.y.is_some()
    }

    pub fn load(&self) -> Result<SequencePair, CliError> {
        if let Some(path) = &self.seqs {
            return seqs_from_value(read_json(path)?);
        }
        match (&self.x, &self.y) {
            (Some(x), Some(y)) => Ok(SequencePair::new(x.clone(), y.clone())?),
            (Some(_), None) | (None, Some(_)) => {
                Err(CliError::Parse("--x and --y must be given together".into()))
            }
            (None, None) => Err(CliError::Parse(
                "no sequences given: use --seqs FILE or --x/--y".into(),
            )),
        }
    }

    pub fn load_optional(&self) -> Result<Option<SequencePair>, CliError> {
        if self.given() {
            self.load().map(Some)
        } else {
            Ok(None)
        }
    }
}

#[derive(Debug, Args)]
pub struct TopologyArgs {
    /// JSON topology file, e.g. `{"kind":"min_sh"}`
    #[arg(long, value_name = "FILE")]
    pub topology: Option<PathBuf>,
    /// Topology family when no file is given
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,
    #[command(flatten)]
    pub seqs: SeqArgs,
}

impl TopologyArgs {
    pub fn load(&self) -> Result<TopologySpec, CliError> {
        if let Some(path) = &self.topology {
            return topology_from_value(read_json(path)?);
        }
        let kind = match self.kind {
            Some(k) => k,
            None if self.seqs.given() => Kind::Lcshift,
            None => {
                return Err(CliError::Parse(
                    "no topology given: use --topology FILE or --kind".into(),
                ))
            }
        };
        topology_of_kind(kind, &self.seqs)
    }
}

pub fn topology_of_kind(kind: Kind, seqs: &SeqArgs) -> Result<TopologySpec, CliError> {
    Ok(match kind {
        Kind::Discrete => TopologySpec::Discrete,
        Kind::Lcshift => TopologySpec::lc_shift(seqs.load()?),
        Kind::MinSh => TopologySpec::MinShift,
        Kind::MinI => TopologySpec::MinInverse,
    })
}

#[derive(Debug, Args)]
pub struct NbhdArgs {
    /// JSON neighbourhood file; its topology replaces any topology flags
    #[arg(long, value_name = "FILE")]
    pub nbhd: Option<PathBuf>,
    /// Removed apexes, e.g. `(1,1),(0,3)`
    #[arg(long, value_name = "LIST", value_parser = parse_apex_list, allow_hyphen_values = true)]
    pub apexes: Option<ApexList>,
    /// Quadrant threshold on the first coordinate
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<i64>,
    /// Quadrant threshold on the second coordinate
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<i64>,
}

impl NbhdArgs {
    /// The file wins; otherwise the inline parameters are read against `topology`.
    pub fn load(
        &self,
        topology: impl FnOnce() -> Result<TopologySpec, CliError>,
    ) -> Result<Nbhd, CliError> {
        if let Some(path) = &self.nbhd {
            return nbhd_from_value(read_json(path)?);
        }
        let payload = NbhdPayload {
            apexes: self.apexes.as_ref().map(|l| l.0.clone()),
            a: self.a,
            b: self.b,
        };
        Ok(Nbhd::from_payload(topology()?, payload)?)
    }
}

pub fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn shape<T: for<'de> Deserialize<'de>>(v: Value, what: &str) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| CliError::Parse(format!("malformed {what}: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSeqs {
    x: Sequence,
    y: Sequence,
}

pub fn seqs_from_value(v: Value) -> Result<SequencePair, CliError> {
    let raw: RawSeqs = shape(v, "sequence pair")?;
    Ok(SequencePair::new(raw.x, raw.y)?)
}

pub fn topology_from_value(mut v: Value) -> Result<TopologySpec, CliError> {
    let kind = v
        .get("kind")
        .and_then(Value::as_str)
        .and_then(Kind::from_name)
        .ok_or_else(|| {
            CliError::Parse("topology needs \"kind\": discrete, lcshift, min_sh or min_i".into())
        })?;
    if kind == Kind::Lcshift {
        let seqs = v
            .get_mut("seqs")
            .map(Value::take)
            .ok_or_else(|| CliError::Parse("lcshift topology needs \"seqs\"".into()))?;
        return Ok(TopologySpec::lc_shift(seqs_from_value(seqs)?));
    }
    shape(v, "topology")
}

pub fn nbhd_from_value(mut v: Value) -> Result<Nbhd, CliError> {
    let obj = v
        .as_object_mut()
        .ok_or_else(|| CliError::Parse("neighbourhood must be a JSON object".into()))?;
    let topology = obj
        .remove("topology")
        .ok_or_else(|| CliError::Parse("neighbourhood needs \"topology\"".into()))?;
    let topology = topology_from_value(topology)?;
    let payload: NbhdPayload = shape(v, "neighbourhood payload")?;
    Ok(Nbhd::from_payload(topology, payload)?)
}
