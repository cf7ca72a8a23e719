use std::fmt::Write as _;

use hmclass_core::ktheory::{hm_pushforward, GradedProjClass};
use hmclass_core::lattice::{Arrangement, Lattice};
use hmclass_core::spectrum::{
    hm_p2, hm_p3, p2_strata_spectra, p3_strata_spectra, SigmaClass, StratumSpec,
};
use hmclass_core::{Error, Result};
use serde_json::{json, Value};

use crate::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Algorithm {
    Ktheory,
    Spectrum,
    Both,
}

impl Algorithm {
    fn runs_ktheory(self) -> bool {
        self != Algorithm::Spectrum
    }

    fn runs_spectrum(self) -> bool {
        self != Algorithm::Ktheory
    }
}

#[derive(Clone, Debug)]
pub struct SpectrumOutput {
    pub class: SigmaClass,
    pub pushforward: GradedProjClass,
    pub strata: Vec<StratumSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Crosscheck {
    Match,
    /// `ktheory - spectrum pushforward`.
    Mismatch(GradedProjClass),
    Skipped,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub path: String,
    pub arrangement: Arrangement,
    pub lattice: Lattice,
    pub ktheory: Option<GradedProjClass>,
    pub spectrum: Option<SpectrumOutput>,
    pub crosscheck: Crosscheck,
}

impl Report {
    pub fn build(
        path: &str,
        arrangement: Arrangement,
        lattice: Lattice,
        algorithm: Algorithm,
    ) -> Result<Self> {
        let ktheory = if algorithm.runs_ktheory() {
            Some(hm_pushforward(&lattice)?)
        } else {
            None
        };
        let spectrum = if algorithm.runs_spectrum() {
            Some(run_spectrum(&lattice)?)
        } else {
            None
        };
        let crosscheck = match (&ktheory, &spectrum) {
            (Some(k), Some(s)) if *k == s.pushforward => Crosscheck::Match,
            (Some(k), Some(s)) => Crosscheck::Mismatch(k - &s.pushforward),
            _ => Crosscheck::Skipped,
        };
        Ok(Report {
            path: path.to_string(),
            arrangement,
            lattice,
            ktheory,
            spectrum,
            crosscheck,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let lat = &self.lattice;
        let _ = writeln!(out, "input: {}", self.path);
        let _ = writeln!(
            out,
            "arrangement: n={} m={} flats={:?} essential={}",
            lat.dim(),
            lat.num_hyperplanes(),
            lat.rank_counts(),
            if lat.is_essential() { "yes" } else { "no" }
        );
        let _ = writeln!(out, "charpoly: {}", lat.charpoly_string());
        let _ = writeln!(out, "mu(1): {}", lat.mu_one());
        if let Some(k) = &self.ktheory {
            let _ = writeln!(out, "ktheory: {k}");
        }
        if let Some(s) = &self.spectrum {
            for st in &s.strata {
                let _ = writeln!(
                    out,
                    "spectrum {} {} (m={}): {}",
                    st.kind.as_str(),
                    st.label,
                    st.multiplicity,
                    st.spectrum
                );
            }
            let _ = writeln!(out, "spectrum: {}", s.class);
            let _ = writeln!(out, "spectrum pushforward: {}", s.pushforward);
        }
        let _ = match &self.crosscheck {
            Crosscheck::Match => writeln!(out, "crosscheck: match"),
            Crosscheck::Mismatch(diff) => {
                writeln!(out, "crosscheck: mismatch (ktheory - spectrum = {diff})")
            }
            Crosscheck::Skipped => writeln!(out, "crosscheck: skipped"),
        };
        out
    }

    pub fn to_json(&self) -> Value {
        let lat = &self.lattice;
        let crosscheck = match &self.crosscheck {
            Crosscheck::Match => json!({ "status": "match" }),
            Crosscheck::Mismatch(diff) => {
                json!({ "status": "mismatch", "difference": json::class(diff) })
            }
            Crosscheck::Skipped => json!({ "status": "skipped" }),
        };
        let ktheory = match &self.ktheory {
            Some(k) => json!({ "class": json::class(k), "text": k.to_string() }),
            None => Value::Null,
        };
        let spectrum = match &self.spectrum {
            Some(s) => json!({
                "class": json::sigma(&s.class),
                "pushforward": json::class(&s.pushforward),
                "strata": s.strata.iter().map(json::stratum).collect::<Vec<_>>(),
            }),
            None => Value::Null,
        };
        json!({
            "input": {
                "path": self.path,
                "n": lat.dim(),
                "m": lat.num_hyperplanes(),
                "hyperplanes": self.arrangement.forms().iter()
                    .map(|f| f.iter().map(json::rational).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            },
            "lattice": lattice_json(lat),
            "ktheory": ktheory,
            "spectrum": spectrum,
            "crosscheck": crosscheck,
        })
    }
}

fn run_spectrum(lat: &Lattice) -> Result<SpectrumOutput> {
    let (class, strata) = match lat.dim() {
        2 => (hm_p2(lat)?, p2_strata_spectra(lat)?),
        3 => (hm_p3(lat)?, p3_strata_spectra(lat)?),
        n => {
            return Err(Error::Dimension {
                found: n,
                expected: "2 or 3",
            })
        }
    };
    let pushforward = class.pushforward();
    Ok(SpectrumOutput {
        class,
        pushforward,
        strata,
    })
}

pub fn lattice_json(lat: &Lattice) -> Value {
    let flats: Vec<Value> = lat
        .flats()
        .iter()
        .map(|f| {
            json!({
                "label": f.label,
                "rank": f.rank,
                "dim": f.dim,
                "multiplicity": f.multiplicity(),
                "hyperplanes": f.hyperplanes.iter().map(|h| h + 1).collect::<Vec<_>>(),
                "mobius": json::bigint(&f.mobius),
            })
        })
        .collect();
    json!({
        "rank_counts": lat.rank_counts(),
        "essential": lat.is_essential(),
        "charpoly": lat.charpoly().iter().map(json::bigint).collect::<Vec<_>>(),
        "mu_one": json::bigint(&lat.mu_one()),
        "flats": flats,
    })
}

pub fn lattice_text(lat: &Lattice) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<6} {:>4} {:>4} {:>4} {:>7}  hyperplanes",
        "flat", "rank", "dim", "mult", "mobius"
    );
    for f in lat.flats() {
        let hs: Vec<String> = f
            .hyperplanes
            .iter()
            .map(|h| format!("H{}", h + 1))
            .collect();
        let _ = writeln!(
            out,
            "{:<6} {:>4} {:>4} {:>4} {:>7}  {}",
            f.label,
            f.rank,
            f.dim,
            f.multiplicity(),
            f.mobius.to_string(),
            if hs.is_empty() {
                "-".to_string()
            } else {
                hs.join(",")
            }
        );
    }
    let _ = writeln!(out, "charpoly: {}", lat.charpoly_string());
    let _ = writeln!(out, "mu(1): {}", lat.mu_one());
    out
}
