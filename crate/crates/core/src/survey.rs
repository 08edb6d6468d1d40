//! Per-dimension table comparing plane existence with MUB evidence.

use serde::{Deserialize, Serialize};

use crate::algebra::{classify_order, plane_existence_status, PlaneStatus};
use crate::error::{Error, Result};
use crate::mub::{check_mub_set, construct_mub_set, CERTIFY_TOL};
use crate::search::{search_max_mubs, SearchConfig};

/// Largest dimension searched by default.
pub const DEFAULT_SEARCH_CAP: u64 = 7;

pub const CSV_HEADER: [&str; 6] = [
    "d",
    "prime_power",
    "plane_status",
    "mub_constructed",
    "mub_searched",
    "consistency",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Consistency {
    Consistent,
    Open,
    Refutes,
}

impl Consistency {
    pub fn as_str(self) -> &'static str {
        match self {
            Consistency::Consistent => "Consistent",
            Consistency::Open => "Open",
            Consistency::Refutes => "Refutes",
        }
    }
}

impl std::fmt::Display for Consistency {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence available for one dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Evidence {
    pub d: u64,
    pub plane_status: PlaneStatus,
    /// Size of a set certified by [`check_mub_set`].
    pub certified_count: Option<u64>,
    /// Largest count reached by numerical search. Never a proof.
    pub searched_max: Option<u64>,
    /// Proven upper bound on the number of MUBs. Nothing here produces one.
    pub proven_upper_bound: Option<u64>,
}

/// Decision rule for the plane/MUB correspondence.
///
/// `Refutes` needs either a certified complete set where no plane can exist,
/// or a proven bound below `d + 1` where a plane does exist. Search results
/// count as support only.
pub fn conjecture_consistency(e: &Evidence) -> Consistency {
    let complete = e.d + 1;
    let certified_complete = e.certified_count.is_some_and(|c| c >= complete);
    let plane_exists = e.plane_status == PlaneStatus::ExistsPrimePower;
    let ruled_out = e.plane_status.is_ruled_out();
    if (ruled_out && certified_complete)
        || (plane_exists && e.proven_upper_bound.is_some_and(|b| b < complete))
    {
        return Consistency::Refutes;
    }
    let below_complete = |x: Option<u64>| x.is_some_and(|m| m < complete);
    if (plane_exists && certified_complete)
        || (ruled_out && (below_complete(e.searched_max) || below_complete(e.proven_upper_bound)))
    {
        return Consistency::Consistent;
    }
    Consistency::Open
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub d: u64,
    pub prime_power: bool,
    pub plane_status: PlaneStatus,
    pub mub_constructed: Option<u64>,
    pub mub_searched: Option<u64>,
    pub consistency: Consistency,
}

/// Certification of a constructed set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certification {
    pub d: u64,
    pub basis_count: usize,
    pub overall_max_deviation: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Search outcome for one dimension, kept for provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub d: u64,
    pub max_found: usize,
    /// Best cost for each target count tried, starting at 2.
    pub best_costs: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub d_min: u64,
    pub d_max: u64,
    pub enable_search: bool,
    pub search_cap: u64,
    pub search_config: SearchConfig,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SurveyTable {
    pub rows: Vec<SurveyRow>,
    pub provenance: Provenance,
    pub certifications: Vec<Certification>,
    pub searches: Vec<SearchRecord>,
}

impl SurveyTable {
    /// Rows as CSV under [`CSV_HEADER`]; absent values are empty fields.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).map_err(|e| Error::Format(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Format(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Format(e.to_string()))
    }

    /// Parses rows written by [`SurveyTable::to_csv`].
    pub fn rows_from_csv(text: &str) -> Result<Vec<SurveyRow>> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let header: Vec<String> = r
            .headers()
            .map_err(|e| Error::Format(e.to_string()))?
            .iter()
            .map(str::to_owned)
            .collect();
        if header != CSV_HEADER {
            return Err(Error::Format(format!("unexpected CSV header {header:?}")));
        }
        r.deserialize()
            .map(|row| row.map_err(|e| Error::Format(e.to_string())))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SurveyOptions {
    pub enable_search: bool,
    pub search_cap: u64,
    pub search: SearchConfig,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            enable_search: false,
            search_cap: DEFAULT_SEARCH_CAP,
            search: SearchConfig::default(),
        }
    }
}

impl SurveyOptions {
    pub fn with_search(enable_search: bool) -> SurveyOptions {
        SurveyOptions {
            enable_search,
            ..SurveyOptions::default()
        }
    }
}

/// Builds the table for `d_min ..= d_max`.
///
/// Prime-power dimensions get a constructed and certified complete set.
/// Other dimensions up to the search cap are searched when enabled; beyond
/// the cap they are left without MUB evidence.
pub fn survey(d_min: u64, d_max: u64, options: &SurveyOptions) -> Result<SurveyTable> {
    if d_min < 2 || d_min > d_max {
        return Err(Error::Usage(format!(
            "survey range must satisfy 2 <= d_min <= d_max, got {d_min}..{d_max}"
        )));
    }
    let mut rows = Vec::new();
    let mut certifications = Vec::new();
    let mut searches = Vec::new();
    for d in d_min..=d_max {
        let plane_status = plane_existence_status(d)?.status;
        let prime_power = classify_order(d)?.is_some();
        let mut certified_count = None;
        let mut mub_constructed = None;
        let mut mub_searched = None;
        if prime_power {
            let set = construct_mub_set(d)?;
            let report = check_mub_set(&set, CERTIFY_TOL)?;
            mub_constructed = Some(set.len() as u64);
            if report.pass {
                certified_count = Some(set.len() as u64);
            }
            certifications.push(Certification {
                d,
                basis_count: set.len(),
                overall_max_deviation: report.overall_max_deviation,
                tolerance: CERTIFY_TOL,
                pass: report.pass,
            });
        } else if options.enable_search && d <= options.search_cap {
            let found = search_max_mubs(d as usize, &options.search)?;
            mub_searched = Some(found.max_found as u64);
            searches.push(SearchRecord {
                d,
                max_found: found.max_found,
                best_costs: found.attempts.iter().map(|a| a.best_cost).collect(),
            });
        }
        let consistency = conjecture_consistency(&Evidence {
            d,
            plane_status,
            certified_count,
            searched_max: mub_searched,
            proven_upper_bound: None,
        });
        rows.push(SurveyRow {
            d,
            prime_power,
            plane_status,
            mub_constructed,
            mub_searched,
            consistency,
        });
    }
    Ok(SurveyTable {
        rows,
        provenance: Provenance {
            d_min,
            d_max,
            enable_search: options.enable_search,
            search_cap: options.search_cap,
            search_config: options.search.clone(),
            seed: options.search.seed,
        },
        certifications,
        searches,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn evidence(d: u64, plane_status: PlaneStatus) -> Evidence {
        Evidence {
            d,
            plane_status,
            certified_count: None,
            searched_max: None,
            proven_upper_bound: None,
        }
    }

    #[test]
    fn decision_rule() {
        use Consistency::{Consistent, Refutes};
        use PlaneStatus::*;
        let full = |d| Evidence {
            certified_count: Some(d + 1),
            ..evidence(d, ExistsPrimePower)
        };
        assert_eq!(conjecture_consistency(&full(4)), Consistent);
        assert_eq!(
            conjecture_consistency(&evidence(4, ExistsPrimePower)),
            Consistency::Open
        );
        let six = Evidence {
            searched_max: Some(3),
            ..evidence(6, RuledOutBruckRyser)
        };
        assert_eq!(conjecture_consistency(&six), Consistent);
        assert_eq!(
            conjecture_consistency(&evidence(10, RuledOutByComputation)),
            Consistency::Open
        );
        assert_eq!(
            conjecture_consistency(&evidence(12, Open)),
            Consistency::Open
        );
        let searched_full = Evidence {
            searched_max: Some(7),
            ..evidence(6, RuledOutBruckRyser)
        };
        assert_eq!(conjecture_consistency(&searched_full), Consistency::Open);
        let refuting = Evidence {
            certified_count: Some(7),
            ..evidence(6, RuledOutBruckRyser)
        };
        assert_eq!(conjecture_consistency(&refuting), Refutes);
        let bounded = Evidence {
            proven_upper_bound: Some(3),
            ..full(4)
        };
        assert_eq!(conjecture_consistency(&bounded), Refutes);
        let open_plane = Evidence {
            searched_max: Some(3),
            ..evidence(12, Open)
        };
        assert_eq!(conjecture_consistency(&open_plane), Consistency::Open);
    }

    #[test]
    fn prime_power_rows() {
        let t = survey(2, 5, &SurveyOptions::default()).unwrap();
        assert_eq!(t.rows.len(), 4);
        for row in &t.rows {
            assert_eq!(row.consistency, Consistency::Consistent);
            assert_eq!(row.mub_constructed, Some(row.d + 1));
            assert_eq!(row.mub_searched, None);
        }
        assert!(t
            .certifications
            .iter()
            .all(|c| c.pass && c.overall_max_deviation < 1e-9));
    }

    #[test]
    fn order_ten_is_open() {
        let t = survey(10, 10, &SurveyOptions::with_search(true)).unwrap();
        let row = &t.rows[0];
        assert_eq!(row.plane_status, PlaneStatus::RuledOutByComputation);
        assert_eq!((row.mub_constructed, row.mub_searched), (None, None));
        assert_eq!(row.consistency, Consistency::Open);
        assert!(t.searches.is_empty());
    }

    #[test]
    fn invalid_ranges() {
        for (a, b) in [(1, 4), (5, 4), (0, 0)] {
            assert!(matches!(
                survey(a, b, &SurveyOptions::default()),
                Err(Error::Usage(_))
            ));
        }
    }

    #[test]
    fn csv_matches_rows() {
        let t = survey(5, 7, &SurveyOptions::default()).unwrap();
        let text = t.to_csv().unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(
            lines.next().unwrap(),
            "5,true,ExistsPrimePower,6,,Consistent"
        );
        assert_eq!(lines.next().unwrap(), "6,false,RuledOutBruckRyser,,,Open");
        assert_eq!(SurveyTable::rows_from_csv(&text).unwrap(), t.rows);
        assert!(SurveyTable::rows_from_csv("a,b\n1,2\n").is_err());
    }
}
