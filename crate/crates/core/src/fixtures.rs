//! The five proof graphs, their realizing profiles, and the four voter-addition transitions,
//! shipped as plain-text data files.

use crate::error::{Error, Result};
use crate::omg::OrdinalMarginGraph;
use crate::profile::{Alternative, Profile};

pub const GRAPH_FILES: [(&str, &str); 5] = [
    ("m1", include_str!("../fixtures/m1.json")),
    ("m2", include_str!("../fixtures/m2.json")),
    ("m3", include_str!("../fixtures/m3.json")),
    ("m4", include_str!("../fixtures/m4.json")),
    ("m5", include_str!("../fixtures/m5.json")),
];

pub const PROFILE_FILES: [(&str, &str); 8] = [
    ("p1", include_str!("../fixtures/p1.txt")),
    ("p2", include_str!("../fixtures/p2.txt")),
    ("q2", include_str!("../fixtures/q2.txt")),
    ("q3", include_str!("../fixtures/q3.txt")),
    ("r1", include_str!("../fixtures/r1.txt")),
    ("r4", include_str!("../fixtures/r4.txt")),
    ("s4", include_str!("../fixtures/s4.txt")),
    ("s5", include_str!("../fixtures/s5.txt")),
];

pub const ADDED_FILES: [(&str, &str); 4] = [
    ("p1_to_p2", include_str!("../fixtures/p1_to_p2.txt")),
    ("q3_to_q2", include_str!("../fixtures/q3_to_q2.txt")),
    ("r1_to_r4", include_str!("../fixtures/r1_to_r4.txt")),
    ("s5_to_s4", include_str!("../fixtures/s5_to_s4.txt")),
];

pub const MARGIN_LISTINGS: &str = include_str!("../fixtures/margins.txt");

/// Which graph each fixture profile realizes.
pub const REALIZES: [(&str, &str); 8] = [
    ("p1", "m1"),
    ("p2", "m2"),
    ("q2", "m2"),
    ("q3", "m3"),
    ("r1", "m1"),
    ("r4", "m4"),
    ("s4", "m4"),
    ("s5", "m5"),
];

/// A voter-addition transition `source =>_favorite destination` with its witnessing profiles.
#[derive(Clone, Debug)]
pub struct TransitionFixture {
    pub name: &'static str,
    pub source: &'static str,
    pub destination: &'static str,
    pub favorite: &'static str,
    pub base: &'static str,
    pub added: &'static str,
    pub result: &'static str,
}

pub const TRANSITIONS: [TransitionFixture; 4] = [
    TransitionFixture {
        name: "M1 =>_d M2",
        source: "m1",
        destination: "m2",
        favorite: "d",
        base: "p1",
        added: "p1_to_p2",
        result: "p2",
    },
    TransitionFixture {
        name: "M3 =>_b M2",
        source: "m3",
        destination: "m2",
        favorite: "b",
        base: "q3",
        added: "q3_to_q2",
        result: "q2",
    },
    TransitionFixture {
        name: "M1 =>_a M4",
        source: "m1",
        destination: "m4",
        favorite: "a",
        base: "r1",
        added: "r1_to_r4",
        result: "r4",
    },
    TransitionFixture {
        name: "M5 =>_d M4",
        source: "m5",
        destination: "m4",
        favorite: "d",
        base: "s5",
        added: "s5_to_s4",
        result: "s4",
    },
];

fn lookup<'a>(table: &'a [(&'static str, &'static str)], name: &str) -> Result<&'a str> {
    table
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Fixture(format!("no fixture named `{name}`")))
}

pub fn graph(name: &str) -> Result<OrdinalMarginGraph> {
    OrdinalMarginGraph::from_json(lookup(&GRAPH_FILES, name)?)
}

pub fn profile(name: &str) -> Result<Profile> {
    Profile::parse(lookup(&PROFILE_FILES, name)?)
}

pub fn added(name: &str) -> Result<Profile> {
    Profile::parse(lookup(&ADDED_FILES, name)?)
}

/// The proof graphs `M1..M5` in order.
pub fn proof_graphs() -> Vec<OrdinalMarginGraph> {
    GRAPH_FILES
        .iter()
        .map(|(_, t)| OrdinalMarginGraph::from_json(t).expect("shipped fixture parses"))
        .collect()
}

/// Printed margin lines per profile, in printed order.
pub fn margin_listings() -> Vec<(String, Vec<String>)> {
    parse_listings(MARGIN_LISTINGS)
}

fn parse_listings(text: &str) -> Vec<(String, Vec<String>)> {
    let mut out: Vec<(String, Vec<String>)> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            out.push((name.to_string(), Vec::new()));
        } else if let Some(last) = out.last_mut() {
            last.1.push(line.to_string());
        }
    }
    out
}

pub fn alternative(label: &str) -> Alternative {
    Alternative::new(label).expect("valid fixture label")
}

/// Every fixture, parsed; either the shipped copies or files of the same names in a directory.
#[derive(Clone, Debug)]
pub struct FixtureSet {
    pub graphs: Vec<(String, OrdinalMarginGraph)>,
    pub profiles: Vec<(String, Profile)>,
    pub added: Vec<(String, Profile)>,
    pub margin_listings: Vec<(String, Vec<String>)>,
}

impl FixtureSet {
    pub fn builtin() -> FixtureSet {
        FixtureSet::from_texts(|name| {
            GRAPH_FILES
                .iter()
                .chain(&PROFILE_FILES)
                .chain(&ADDED_FILES)
                .find(|(n, _)| name == format!("{n}.json") || name == format!("{n}.txt"))
                .map(|(_, t)| t.to_string())
                .or_else(|| (name == "margins.txt").then(|| MARGIN_LISTINGS.to_string()))
                .ok_or_else(|| Error::Fixture(format!("no fixture named `{name}`")))
        })
        .expect("shipped fixtures parse")
    }

    pub fn from_dir(dir: &std::path::Path) -> Result<FixtureSet> {
        FixtureSet::from_texts(|name| {
            std::fs::read_to_string(dir.join(name))
                .map_err(|e| Error::Fixture(format!("{}: {e}", dir.join(name).display())))
        })
    }

    fn from_texts(read: impl Fn(&str) -> Result<String>) -> Result<FixtureSet> {
        let with_name =
            |name: &str, r: Result<Profile>| r.map_err(|e| Error::Fixture(format!("{name}: {e}")));
        let mut graphs = Vec::new();
        for (name, _) in GRAPH_FILES {
            let g = OrdinalMarginGraph::from_json(&read(&format!("{name}.json"))?)
                .map_err(|e| Error::Fixture(format!("{name}: {e}")))?;
            graphs.push((name.to_string(), g));
        }
        let mut profiles = Vec::new();
        for (name, _) in PROFILE_FILES {
            let p = with_name(name, Profile::parse(&read(&format!("{name}.txt"))?))?;
            profiles.push((name.to_string(), p));
        }
        let mut added = Vec::new();
        for (name, _) in ADDED_FILES {
            let p = with_name(name, Profile::parse(&read(&format!("{name}.txt"))?))?;
            added.push((name.to_string(), p));
        }
        Ok(FixtureSet {
            graphs,
            profiles,
            added,
            margin_listings: parse_listings(&read("margins.txt")?),
        })
    }

    pub fn graph(&self, name: &str) -> Result<&OrdinalMarginGraph> {
        find(&self.graphs, name)
    }

    pub fn profile(&self, name: &str) -> Result<&Profile> {
        find(&self.profiles, name)
    }

    pub fn added(&self, name: &str) -> Result<&Profile> {
        find(&self.added, name)
    }
}

fn find<'a, T>(items: &'a [(String, T)], name: &str) -> Result<&'a T> {
    items
        .iter()
        .find(|(n, _)| n == name)
        .map(|(_, t)| t)
        .ok_or_else(|| Error::Fixture(format!("no fixture named `{name}`")))
}
