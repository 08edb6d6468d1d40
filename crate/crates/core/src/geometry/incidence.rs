use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Points, lines and a point × line incidence table.
///
/// JSON form: `{"points": int, "lines": int, "incidence": [[0|1, ...], ...],
/// "point_labels": [...], "line_labels": [...]}`, one incidence row per
/// point. Absent labels are written as empty lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceStructure {
    points: usize,
    lines: usize,
    incidence: Vec<bool>,
    point_labels: Option<Vec<String>>,
    line_labels: Option<Vec<String>>,
}

impl IncidenceStructure {
    pub fn new(points: usize, lines: usize, incidence: Vec<Vec<bool>>) -> Result<Self> {
        if incidence.len() != points {
            return Err(Error::Domain(format!(
                "incidence has {} rows for {points} points",
                incidence.len()
            )));
        }
        if let Some((p, row)) = incidence.iter().enumerate().find(|(_, r)| r.len() != lines) {
            return Err(Error::Domain(format!(
                "incidence row {p} has {} entries for {lines} lines",
                row.len()
            )));
        }
        Ok(IncidenceStructure {
            points,
            lines,
            incidence: incidence.into_iter().flatten().collect(),
            point_labels: None,
            line_labels: None,
        })
    }

    /// Structure whose line `l` contains exactly the points `lines[l]`.
    pub fn from_lines(points: usize, lines: &[Vec<usize>]) -> Result<Self> {
        let mut incidence = vec![false; points * lines.len()];
        for (l, members) in lines.iter().enumerate() {
            for &p in members {
                if p >= points {
                    return Err(Error::Domain(format!(
                        "line {l} names point {p} of {points}"
                    )));
                }
                incidence[p * lines.len() + l] = true;
            }
        }
        Ok(IncidenceStructure {
            points,
            lines: lines.len(),
            incidence,
            point_labels: None,
            line_labels: None,
        })
    }

    pub fn with_labels(
        mut self,
        point_labels: Vec<String>,
        line_labels: Vec<String>,
    ) -> Result<Self> {
        if point_labels.len() != self.points || line_labels.len() != self.lines {
            return Err(Error::Domain(format!(
                "expected {} point and {} line labels, got {} and {}",
                self.points,
                self.lines,
                point_labels.len(),
                line_labels.len()
            )));
        }
        self.point_labels = Some(point_labels);
        self.line_labels = Some(line_labels);
        Ok(self)
    }

    pub fn point_count(&self) -> usize {
        self.points
    }

    pub fn line_count(&self) -> usize {
        self.lines
    }

    #[inline]
    pub fn incident(&self, point: usize, line: usize) -> bool {
        self.incidence[point * self.lines + line]
    }

    /// Toggles one incidence bit.
    pub fn flip(&mut self, point: usize, line: usize) {
        let at = point * self.lines + line;
        self.incidence[at] = !self.incidence[at];
    }

    pub fn points_on(&self, line: usize) -> Vec<usize> {
        (0..self.points)
            .filter(|&p| self.incident(p, line))
            .collect()
    }

    pub fn lines_through(&self, point: usize) -> Vec<usize> {
        (0..self.lines)
            .filter(|&l| self.incident(point, l))
            .collect()
    }

    pub fn point_labels(&self) -> Option<&[String]> {
        self.point_labels.as_deref()
    }

    pub fn line_labels(&self) -> Option<&[String]> {
        self.line_labels.as_deref()
    }

    /// Points and lines exchanged; the incidence table is transposed.
    pub fn dualize(&self) -> IncidenceStructure {
        let mut incidence = Vec::with_capacity(self.incidence.len());
        for l in 0..self.lines {
            incidence.extend((0..self.points).map(|p| self.incident(p, l)));
        }
        IncidenceStructure {
            points: self.lines,
            lines: self.points,
            incidence,
            point_labels: self.line_labels.clone(),
            line_labels: self.point_labels.clone(),
        }
    }

    /// Substructure on the kept points and lines, in their given order.
    pub(crate) fn restrict(&self, points: &[usize], lines: &[usize]) -> IncidenceStructure {
        let mut incidence = Vec::with_capacity(points.len() * lines.len());
        for &p in points {
            incidence.extend(lines.iter().map(|&l| self.incident(p, l)));
        }
        let pick = |labels: &Option<Vec<String>>, keep: &[usize]| {
            labels
                .as_ref()
                .map(|all| keep.iter().map(|&i| all[i].clone()).collect())
        };
        IncidenceStructure {
            points: points.len(),
            lines: lines.len(),
            incidence,
            point_labels: pick(&self.point_labels, points),
            line_labels: pick(&self.line_labels, lines),
        }
    }

    /// Each point's row as a bitset over lines.
    pub(crate) fn point_rows(&self) -> Vec<BitRow> {
        (0..self.points)
            .map(|p| {
                BitRow::from_iter(self.lines, (0..self.lines).filter(|&l| self.incident(p, l)))
            })
            .collect()
    }

    /// Each line's column as a bitset over points.
    pub(crate) fn line_rows(&self) -> Vec<BitRow> {
        (0..self.lines)
            .map(|l| {
                BitRow::from_iter(
                    self.points,
                    (0..self.points).filter(|&p| self.incident(p, l)),
                )
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitRow(Vec<u64>);

impl BitRow {
    fn from_iter(len: usize, set: impl Iterator<Item = usize>) -> BitRow {
        let mut words = vec![0u64; len.div_ceil(64)];
        for i in set {
            words[i / 64] |= 1 << (i % 64);
        }
        BitRow(words)
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn common(&self, other: &BitRow) -> usize {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersection(&self, other: &BitRow) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, (a, b)) in self.0.iter().zip(&other.0).enumerate() {
            let mut bits = a & b;
            while bits != 0 {
                out.push(w * 64 + bits.trailing_zeros() as usize);
                bits &= bits - 1;
            }
        }
        out
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
}

#[derive(Serialize, Deserialize)]
struct RawIncidence {
    points: usize,
    lines: usize,
    incidence: Vec<Vec<u8>>,
    #[serde(default)]
    point_labels: Vec<String>,
    #[serde(default)]
    line_labels: Vec<String>,
}

impl Serialize for IncidenceStructure {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RawIncidence {
            points: self.points,
            lines: self.lines,
            incidence: (0..self.points)
                .map(|p| (0..self.lines).map(|l| self.incident(p, l) as u8).collect())
                .collect(),
            point_labels: self.point_labels.clone().unwrap_or_default(),
            line_labels: self.line_labels.clone().unwrap_or_default(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for IncidenceStructure {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawIncidence::deserialize(deserializer)?;
        let mut table = Vec::with_capacity(raw.incidence.len());
        for row in raw.incidence {
            let bits = row
                .into_iter()
                .map(|b| match b {
                    0 => Ok(false),
                    1 => Ok(true),
                    other => Err(D::Error::custom(format!(
                        "incidence entry {other} is not 0 or 1"
                    ))),
                })
                .collect::<std::result::Result<Vec<bool>, _>>()?;
            table.push(bits);
        }
        let s = IncidenceStructure::new(raw.points, raw.lines, table).map_err(D::Error::custom)?;
        if raw.point_labels.is_empty() && raw.line_labels.is_empty() {
            return Ok(s);
        }
        s.with_labels(raw.point_labels, raw.line_labels)
            .map_err(D::Error::custom)
    }
}
