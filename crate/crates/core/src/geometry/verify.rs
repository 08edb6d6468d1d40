//! Exhaustive axiom checks for projective and affine planes.
//!
//! Failures are returned as values carrying a concrete witness, together
//! with every check that ran before the failing one.

use serde::{Deserialize, Serialize};

use super::incidence::{BitRow, IncidenceStructure};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Axiom {
    /// Any two points lie on exactly one line.
    TwoPointsOneLine,
    /// Any two lines meet in exactly one point.
    TwoLinesOnePoint,
    /// Four points exist, no three on a line.
    Quadrangle,
    /// Through a point off a line there is exactly one disjoint line.
    Playfair,
    /// Three non-collinear points exist.
    Triangle,
    DistinctPoints,
    DistinctLines,
    /// Uniform line sizes and point degrees, with the counts the order forces.
    Counting,
    /// Parallelism is an equivalence with `d + 1` classes of `d` lines.
    ParallelClasses,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    PointPair {
        points: [usize; 2],
        common_lines: Vec<usize>,
    },
    LinePair {
        lines: [usize; 2],
        common_points: Vec<usize>,
    },
    /// No four points in general position (or no three for a triangle).
    NoConfiguration {
        point_count: usize,
    },
    Parallels {
        point: usize,
        line: usize,
        parallels: Vec<usize>,
    },
    DuplicatePoints {
        points: [usize; 2],
    },
    DuplicateLines {
        lines: [usize; 2],
    },
    LineSize {
        line: usize,
        size: usize,
        expected: usize,
    },
    PointDegree {
        point: usize,
        degree: usize,
        expected: usize,
    },
    Count {
        what: String,
        found: usize,
        expected: usize,
    },
    NonTransitive {
        lines: [usize; 3],
    },
    ClassSize {
        class: usize,
        size: usize,
        expected: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomCheck {
    pub axiom: Axiom,
    pub pass: bool,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomFailure {
    pub axiom: Axiom,
    pub witness: Witness,
    pub axioms_checked: Vec<AxiomCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaneCertificate {
    pub order: usize,
    pub point_count: usize,
    pub line_count: usize,
    pub points_per_line: usize,
    pub lines_per_point: usize,
    pub axioms_checked: Vec<AxiomCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineCertificate {
    pub order: usize,
    pub point_count: usize,
    pub line_count: usize,
    pub points_per_line: usize,
    pub lines_per_point: usize,
    /// Line indices of each parallel class, classes ordered by first line.
    pub parallel_classes: Vec<Vec<usize>>,
    pub axioms_checked: Vec<AxiomCheck>,
}

struct Checker {
    checked: Vec<AxiomCheck>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            checked: Vec::new(),
        }
    }

    fn run(&mut self, axiom: Axiom, outcome: Option<Witness>) -> Result<(), AxiomFailure> {
        match outcome {
            None => {
                self.checked.push(AxiomCheck {
                    axiom,
                    pass: true,
                    witness: None,
                });
                Ok(())
            }
            Some(witness) => {
                self.checked.push(AxiomCheck {
                    axiom,
                    pass: false,
                    witness: Some(witness.clone()),
                });
                Err(AxiomFailure {
                    axiom,
                    witness,
                    axioms_checked: std::mem::take(&mut self.checked),
                })
            }
        }
    }
}

/// Checks that every pair of points shares exactly one line, returning the
/// pair → line table on success.
fn unique_joins(points: &[BitRow]) -> Result<Vec<Vec<usize>>, Witness> {
    let n = points.len();
    let mut join = vec![vec![usize::MAX; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            let common = points[a].intersection(&points[b]);
            if common.len() != 1 {
                return Err(Witness::PointPair {
                    points: [a, b],
                    common_lines: common,
                });
            }
            join[a][b] = common[0];
            join[b][a] = common[0];
        }
    }
    Ok(join)
}

fn unique_meets(lines: &[BitRow]) -> Option<Witness> {
    for l in 0..lines.len() {
        for m in l + 1..lines.len() {
            let common = lines[l].intersection(&lines[m]);
            if common.len() != 1 {
                return Some(Witness::LinePair {
                    lines: [l, m],
                    common_points: common,
                });
            }
        }
    }
    None
}

fn collinear(join: &[Vec<usize>], lines: &[BitRow], a: usize, b: usize, c: usize) -> bool {
    lines[join[a][b]].contains(c)
}

fn find_triangle(join: &[Vec<usize>], lines: &[BitRow]) -> Option<[usize; 3]> {
    let n = join.len();
    for a in 0..n {
        for b in a + 1..n {
            if let Some(c) = (b + 1..n).find(|&c| !collinear(join, lines, a, b, c)) {
                return Some([a, b, c]);
            }
        }
    }
    None
}

fn find_quadrangle(join: &[Vec<usize>], lines: &[BitRow]) -> Option<[usize; 4]> {
    let n = join.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if collinear(join, lines, a, b, c) {
                    continue;
                }
                let fourth = (c + 1..n).find(|&e| {
                    !collinear(join, lines, a, b, e)
                        && !collinear(join, lines, a, c, e)
                        && !collinear(join, lines, b, c, e)
                });
                if let Some(e) = fourth {
                    return Some([a, b, c, e]);
                }
            }
        }
    }
    None
}

fn duplicate(rows: &[BitRow]) -> Option<[usize; 2]> {
    for a in 0..rows.len() {
        for b in a + 1..rows.len() {
            if rows[a] == rows[b] {
                return Some([a, b]);
            }
        }
    }
    None
}

fn uniform_lines(lines: &[BitRow], expected: usize) -> Option<Witness> {
    lines.iter().enumerate().find_map(|(line, r)| {
        let size = r.count();
        (size != expected).then_some(Witness::LineSize {
            line,
            size,
            expected,
        })
    })
}

fn uniform_points(points: &[BitRow], expected: usize) -> Option<Witness> {
    points.iter().enumerate().find_map(|(point, r)| {
        let degree = r.count();
        (degree != expected).then_some(Witness::PointDegree {
            point,
            degree,
            expected,
        })
    })
}

fn count(what: &str, found: usize, expected: usize) -> Option<Witness> {
    (found != expected).then(|| Witness::Count {
        what: what.into(),
        found,
        expected,
    })
}

/// Projective plane axioms, followed by the counting consequences
/// (`d + 1` points per line and lines per point, `d² + d + 1` of each).
pub fn verify_projective_plane(s: &IncidenceStructure) -> Result<PlaneCertificate, AxiomFailure> {
    let points = s.point_rows();
    let lines = s.line_rows();
    let mut ck = Checker::new();

    let join = match unique_joins(&points) {
        Ok(join) => {
            ck.run(Axiom::TwoPointsOneLine, None)?;
            join
        }
        Err(w) => return Err(ck.run(Axiom::TwoPointsOneLine, Some(w)).unwrap_err()),
    };
    ck.run(Axiom::TwoLinesOnePoint, unique_meets(&lines))?;
    ck.run(
        Axiom::Quadrangle,
        find_quadrangle(&join, &lines)
            .is_none()
            .then_some(Witness::NoConfiguration {
                point_count: s.point_count(),
            }),
    )?;
    ck.run(
        Axiom::DistinctPoints,
        duplicate(&points).map(|p| Witness::DuplicatePoints { points: p }),
    )?;
    ck.run(
        Axiom::DistinctLines,
        duplicate(&lines).map(|l| Witness::DuplicateLines { lines: l }),
    )?;

    // a quadrangle guarantees at least one line
    let k = lines[0].count();
    let order = k.saturating_sub(1);
    let expected = order * order + order + 1;
    let counting = uniform_lines(&lines, k)
        .or_else(|| uniform_points(&points, k))
        .or_else(|| count("points", s.point_count(), expected))
        .or_else(|| count("lines", s.line_count(), expected));
    ck.run(Axiom::Counting, counting)?;

    Ok(PlaneCertificate {
        order,
        point_count: s.point_count(),
        line_count: s.line_count(),
        points_per_line: k,
        lines_per_point: k,
        axioms_checked: ck.checked,
    })
}

/// Affine plane axioms (unique joins, Playfair, a triangle), then the
/// counting and parallel-class structure: `d²` points, `d² + d` lines,
/// `d + 1` classes of `d` mutually disjoint lines.
pub fn verify_affine_plane(s: &IncidenceStructure) -> Result<AffineCertificate, AxiomFailure> {
    let points = s.point_rows();
    let lines = s.line_rows();
    let mut ck = Checker::new();

    let join = match unique_joins(&points) {
        Ok(join) => {
            ck.run(Axiom::TwoPointsOneLine, None)?;
            join
        }
        Err(w) => return Err(ck.run(Axiom::TwoPointsOneLine, Some(w)).unwrap_err()),
    };

    let mut playfair = None;
    'outer: for line in 0..lines.len() {
        for point in (0..points.len()).filter(|&p| !lines[line].contains(p)) {
            let parallels: Vec<usize> = (0..lines.len())
                .filter(|&m| lines[m].contains(point) && lines[m].common(&lines[line]) == 0)
                .collect();
            if parallels.len() != 1 {
                playfair = Some(Witness::Parallels {
                    point,
                    line,
                    parallels,
                });
                break 'outer;
            }
        }
    }
    ck.run(Axiom::Playfair, playfair)?;
    ck.run(
        Axiom::Triangle,
        find_triangle(&join, &lines)
            .is_none()
            .then_some(Witness::NoConfiguration {
                point_count: s.point_count(),
            }),
    )?;
    ck.run(
        Axiom::DistinctPoints,
        duplicate(&points).map(|p| Witness::DuplicatePoints { points: p }),
    )?;
    ck.run(
        Axiom::DistinctLines,
        duplicate(&lines).map(|l| Witness::DuplicateLines { lines: l }),
    )?;

    let order = lines[0].count();
    let counting = uniform_lines(&lines, order)
        .or_else(|| uniform_points(&points, order + 1))
        .or_else(|| count("points", s.point_count(), order * order))
        .or_else(|| count("lines", s.line_count(), order * order + order));
    ck.run(Axiom::Counting, counting)?;

    let parallel = |l: usize, m: usize| l == m || lines[l].common(&lines[m]) == 0;
    let mut transitivity = None;
    'trans: for a in 0..lines.len() {
        for b in (0..lines.len()).filter(|&b| parallel(a, b)) {
            if let Some(c) = (0..lines.len()).find(|&c| parallel(b, c) && !parallel(a, c)) {
                transitivity = Some(Witness::NonTransitive { lines: [a, b, c] });
                break 'trans;
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    if transitivity.is_none() {
        for l in 0..lines.len() {
            match classes.iter_mut().find(|c| parallel(c[0], l)) {
                Some(c) => c.push(l),
                None => classes.push(vec![l]),
            }
        }
    }
    let class_check = transitivity
        .or_else(|| count("parallel classes", classes.len(), order + 1))
        .or_else(|| {
            classes.iter().enumerate().find_map(|(class, c)| {
                (c.len() != order).then_some(Witness::ClassSize {
                    class,
                    size: c.len(),
                    expected: order,
                })
            })
        });
    ck.run(Axiom::ParallelClasses, class_check)?;

    Ok(AffineCertificate {
        order,
        point_count: s.point_count(),
        line_count: s.line_count(),
        points_per_line: order,
        lines_per_point: order + 1,
        parallel_classes: classes,
        axioms_checked: ck.checked,
    })
}
