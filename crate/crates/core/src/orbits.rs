//! Direction-pair orbits, pairwise kernels and the 25 prototype lines that
//! carry every nonzero frequency with `mu >= 2`.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::lattice::{
    dot_mod, mu, signed_permutation_group, Direction, FrequencyPoint, Modulus, SignedPermutation,
    DIRECTIONS,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LineFamily {
    Axis,
    FaceDiagonal,
    SpaceDiagonal,
    Skew,
}

impl LineFamily {
    pub const ALL: [LineFamily; 4] = [
        LineFamily::Axis,
        LineFamily::FaceDiagonal,
        LineFamily::SpaceDiagonal,
        LineFamily::Skew,
    ];

    /// `mu` at every nonzero point of a line of this family (generic regime).
    pub fn mu_value(self) -> u32 {
        match self {
            LineFamily::Axis | LineFamily::FaceDiagonal => 4,
            LineFamily::SpaceDiagonal => 3,
            LineFamily::Skew => 2,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            LineFamily::Axis => "axis",
            LineFamily::FaceDiagonal => "face_diagonal",
            LineFamily::SpaceDiagonal => "space_diagonal",
            LineFamily::Skew => "skew",
        }
    }

    /// Recognizes the coordinate pattern of a primitive generator.
    fn of_pattern(g: [i64; 3]) -> Option<LineFamily> {
        let zeros = g.iter().filter(|&&c| c == 0).count();
        let ones = g.iter().filter(|&&c| c.abs() == 1).count();
        let twos = g.iter().filter(|&&c| c.abs() == 2).count();
        match (zeros, ones, twos) {
            (2, 1, 0) => Some(LineFamily::Axis),
            (1, 2, 0) => Some(LineFamily::FaceDiagonal),
            (0, 3, 0) => Some(LineFamily::SpaceDiagonal),
            (0, 2, 1) => Some(LineFamily::Skew),
            _ => None,
        }
    }
}

impl fmt::Display for LineFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A cyclic submodule `{t * generator}`. The generator is primitive (gcd 1)
/// with first nonzero component positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Line {
    pub generator: [i64; 3],
    pub family: LineFamily,
}

impl Line {
    /// Normalizes `v` and recognizes its family. `None` for the zero vector
    /// or a pattern outside the four families.
    pub fn from_vector(v: [i64; 3]) -> Option<Line> {
        let g = gcd(gcd(v[0], v[1]), v[2]);
        if g == 0 {
            return None;
        }
        let lead = v.iter().copied().find(|&c| c != 0)?.signum();
        let generator = v.map(|c| c / g * lead);
        let family = LineFamily::of_pattern(generator)?;
        Some(Line { generator, family })
    }

    /// Index and sign of the first `+-1` component; every family has one.
    fn unit_component(&self) -> (usize, i64) {
        self.generator
            .iter()
            .enumerate()
            .find(|(_, c)| c.abs() == 1)
            .map(|(i, &c)| (i, c))
            .expect("all four line families have a unit component")
    }

    /// Membership of `a` in `{t * generator mod n}`. The unit component
    /// pins down `t`; the remaining coordinates are then checked.
    pub fn contains(&self, a: &FrequencyPoint, n: Modulus) -> bool {
        let (i, sign) = self.unit_component();
        let c = a.coords().map(i64::from);
        let t = sign * c[i];
        (0..3).all(|j| n.reduce(t * self.generator[j]) == c[j] as u32)
    }

    /// `t * generator mod n` for `t` in `0..n`.
    pub fn points(&self, n: Modulus) -> impl Iterator<Item = FrequencyPoint> + '_ {
        (0..i64::from(n.get())).map(move |t| FrequencyPoint::new(self.generator.map(|c| t * c), n))
    }

    pub fn transform(&self, g: &SignedPermutation) -> Line {
        Line::from_vector(g.apply_vector(self.generator))
            .expect("signed permutations preserve line patterns")
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.generator;
        write!(f, "<({a},{b},{c})>")
    }
}

/// The 25 prototype lines: 3 axis, 6 face-diagonal, 4 space-diagonal and
/// 12 skew, in that order.
pub fn prototype_lines() -> Vec<Line> {
    let mut lines: Vec<Line> = DIRECTIONS
        .iter()
        .map(|u| Line::from_vector(u.as_vector()).expect("directions are primitive"))
        .collect();
    lines.sort_by_key(|l| l.family);
    // skew: one coordinate 2, the other two +-1
    for pos in 0..3 {
        for (s1, s2) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
            let mut signs = [s1, s2].into_iter();
            let v = [0, 1, 2].map(|j| if j == pos { 2 } else { signs.next().unwrap() });
            lines.push(Line::from_vector(v).expect("skew pattern"));
        }
    }
    lines
}

/// Unordered pair of distinct directions, stored as indices into
/// [`DIRECTIONS`] with `first < second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DirectionPair {
    first: usize,
    second: usize,
}

impl DirectionPair {
    pub fn new(u: Direction, v: Direction) -> Option<DirectionPair> {
        let (a, b) = (u.index(), v.index());
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(DirectionPair { first: a, second: b }),
            std::cmp::Ordering::Greater => Some(DirectionPair { first: b, second: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn indices(&self) -> (usize, usize) {
        (self.first, self.second)
    }

    pub fn directions(&self) -> (Direction, Direction) {
        (DIRECTIONS[self.first], DIRECTIONS[self.second])
    }

    /// All `C(13, 2) = 78` pairs in lexicographic index order.
    pub fn all() -> Vec<DirectionPair> {
        (0..13)
            .flat_map(|a| (a + 1..13).map(move |b| DirectionPair { first: a, second: b }))
            .collect()
    }

    pub fn transform(&self, g: &SignedPermutation) -> DirectionPair {
        let (u, v) = self.directions();
        DirectionPair::new(g.apply_direction(&u), g.apply_direction(&v))
            .expect("group elements act bijectively on directions")
    }
}

impl Serialize for DirectionPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (u, v) = self.directions();
        [u, v].serialize(s)
    }
}

impl fmt::Display for DirectionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (u, v) = self.directions();
        write!(f, "{{{u},{v}}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairOrbit {
    /// Lexicographically smallest member.
    pub representative: DirectionPair,
    pub members: Vec<DirectionPair>,
}

/// Orbits of the 78 unordered direction pairs under the signed permutation
/// group (the pair being unordered already accounts for swapping the two
/// directions). Sorted by representative.
pub fn pair_orbits() -> Vec<PairOrbit> {
    let group = signed_permutation_group();
    let mut remaining: BTreeSet<DirectionPair> = DirectionPair::all().into_iter().collect();
    let mut orbits = Vec::new();
    while let Some(&rep) = remaining.iter().next() {
        let members: BTreeSet<DirectionPair> = group.iter().map(|g| rep.transform(g)).collect();
        for p in &members {
            remaining.remove(p);
        }
        orbits.push(PairOrbit {
            representative: rep,
            members: members.into_iter().collect(),
        });
    }
    orbits
}

/// Representative pairs with their kernel generators as listed in the
/// standard orbit table (pairs given as raw vectors, possibly non-canonical).
pub const LISTED_PAIR_KERNELS: [([i64; 3], [i64; 3], [i64; 3]); 14] = [
    ([1, 1, 1], [1, 1, 0], [1, -1, 0]),
    ([1, 1, 1], [1, 1, -1], [1, -1, 0]),
    ([1, 1, 1], [1, 0, 0], [0, 1, -1]),
    ([1, 1, 1], [1, 0, -1], [1, -2, 1]),
    ([1, 1, 1], [1, -1, -1], [0, 1, -1]),
    ([1, 1, 1], [0, 0, -1], [1, -1, 0]),
    ([1, 1, 1], [0, -1, -1], [0, 1, -1]),
    ([1, 1, 0], [1, 0, 1], [1, -1, -1]),
    ([1, 1, 0], [1, 0, 0], [0, 0, 1]),
    ([1, 1, 0], [1, -1, 0], [0, 0, 1]),
    ([1, 1, 0], [0, 0, 1], [1, -1, 0]),
    ([1, 1, 0], [0, -1, 1], [1, -1, -1]),
    ([1, 1, 0], [0, -1, 0], [0, 0, 1]),
    ([1, 0, 0], [0, 1, 0], [0, 0, 1]),
];

/// The listed pairs as canonical [`DirectionPair`]s, in listing order.
pub fn listed_pairs() -> Vec<DirectionPair> {
    LISTED_PAIR_KERNELS
        .iter()
        .map(|(u, v, _)| {
            DirectionPair::new(
                Direction::from_vector(*u).expect("listed vectors are queen directions"),
                Direction::from_vector(*v).expect("listed vectors are queen directions"),
            )
            .expect("listed pairs are distinct")
        })
        .collect()
}

/// The integer kernel line of `a . u = a . v = 0`, from the cross product
/// `u x v` reduced by its content.
pub fn kernel_line(u: &Direction, v: &Direction) -> Result<Line> {
    let (p, q) = (u.as_vector(), v.as_vector());
    let cross = [
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    ];
    if cross == [0, 0, 0] {
        return Err(Error::DegenerateKernel(u.components(), v.components()));
    }
    Line::from_vector(cross).ok_or_else(|| Error::ClassificationViolation {
        point: [0, 0, 0],
        n: 0,
        reason: format!("kernel of {u} and {v} is not a prototype pattern: {cross:?}"),
    })
}

/// Kernel line of the two congruences `a . u = a . v = 0 (mod n)`.
///
/// The generator is checked against both congruences mod `n`; use
/// [`validate_pair_kernel`] for the full enumerated comparison.
pub fn solve_pair_kernel(u: &Direction, v: &Direction, n: Modulus) -> Result<Line> {
    n.require_generic()?;
    let line = kernel_line(u, v)?;
    let g = FrequencyPoint::new(line.generator, n);
    if dot_mod(&g, u, n) != 0 || dot_mod(&g, v, n) != 0 {
        return Err(Error::ClassificationViolation {
            point: g.coords(),
            n: n.get(),
            reason: format!("generator of {line} does not annihilate {u} and {v}"),
        });
    }
    Ok(line)
}

/// Enumerates `{a : a.u = a.v = 0 (mod n)}` and compares it with the points
/// of the kernel line.
pub fn validate_pair_kernel(u: &Direction, v: &Direction, n: Modulus, budget: Budget) -> Result<bool> {
    budget.check("kernel validation", n.volume())?;
    let line = solve_pair_kernel(u, v, n)?;
    let solutions: BTreeSet<FrequencyPoint> = FrequencyPoint::all(n)
        .filter(|a| dot_mod(a, u, n) == 0 && dot_mod(a, v, n) == 0)
        .collect();
    let on_line: BTreeSet<FrequencyPoint> = line.points(n).collect();
    Ok(solutions == on_line)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "line", rename_all = "snake_case")]
pub enum Classification {
    Zero,
    OnLine(Line),
    SingleHyperplane,
    Generic,
}

/// Classifies a frequency by orthogonality type. Points with `mu >= 2` must
/// lie on exactly one prototype line; anything else is reported as a
/// [`Error::ClassificationViolation`].
pub fn classify(a: &FrequencyPoint, n: Modulus) -> Result<Classification> {
    n.require_generic()?;
    classify_with(a, n, &prototype_lines())
}

fn classify_with(a: &FrequencyPoint, n: Modulus, lines: &[Line]) -> Result<Classification> {
    if a.is_zero() {
        return Ok(Classification::Zero);
    }
    match mu(a, n) {
        0 => Ok(Classification::Generic),
        1 => Ok(Classification::SingleHyperplane),
        k => {
            let hits: Vec<&Line> = lines.iter().filter(|l| l.contains(a, n)).collect();
            match hits.as_slice() {
                [line] => Ok(Classification::OnLine(**line)),
                [] => Err(Error::ClassificationViolation {
                    point: a.coords(),
                    n: n.get(),
                    reason: format!("mu = {k} but the point is on no prototype line"),
                }),
                _ => Err(Error::ClassificationViolation {
                    point: a.coords(),
                    n: n.get(),
                    reason: format!("point lies on {} prototype lines", hits.len()),
                }),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCoverage {
    pub family: LineFamily,
    pub lines: usize,
    pub expected_mu: u32,
    /// Distinct `mu` values seen at nonzero points of this family's lines.
    pub observed_mu: Vec<u32>,
}

/// Outcome of the full-enumeration coverage check for one modulus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub n: Modulus,
    pub line_count: usize,
    /// Nonzero points on the union of the lines.
    pub union_size: u64,
    /// Nonzero points with `mu >= 2`.
    pub high_mu_points: u64,
    /// `mu >= 2` but on no line.
    pub uncovered: u64,
    /// On a line but `mu < 2`.
    pub spurious: u64,
    /// Nonzero points on more than one line.
    pub intersections: u64,
    /// Lines whose point count differs from `n`.
    pub short_lines: usize,
    pub families: Vec<FamilyCoverage>,
}

impl CoverageReport {
    pub fn pass(&self) -> bool {
        let n = u64::from(self.n.get());
        self.uncovered == 0
            && self.spurious == 0
            && self.intersections == 0
            && self.short_lines == 0
            && self.union_size == self.line_count as u64 * (n - 1)
            && self.union_size == self.high_mu_points
            && self
                .families
                .iter()
                .all(|f| f.observed_mu == vec![f.expected_mu])
    }
}

/// Checks by full enumeration that the prototype lines carry exactly the
/// nonzero points with `mu >= 2`, meet only at the origin, have `n` points
/// each and a constant per-family `mu`.
pub fn coverage_check(n: Modulus, budget: Budget) -> Result<CoverageReport> {
    n.require_generic()?;
    budget.check("coverage enumeration", n.volume())?;
    let lines = prototype_lines();
    let volume = n.volume() as usize;

    const NONE: u8 = u8::MAX;
    let mut owner = vec![NONE; volume];
    let mut hits = vec![0u8; volume];
    let mut short_lines = 0;
    let mut family_mu: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); LineFamily::ALL.len()];
    for (id, line) in lines.iter().enumerate() {
        let pts: BTreeSet<FrequencyPoint> = line.points(n).collect();
        if pts.len() != n.get() as usize {
            short_lines += 1;
        }
        for p in pts.iter().filter(|p| !p.is_zero()) {
            let idx = p.index(n);
            owner[idx] = id as u8;
            hits[idx] = hits[idx].saturating_add(1);
            family_mu[line.family as usize].insert(mu(p, n));
        }
    }

    #[derive(Default)]
    struct Tally {
        union: u64,
        high: u64,
        uncovered: u64,
        spurious: u64,
        intersections: u64,
    }
    let tally = (1..volume)
        .into_par_iter()
        .fold(Tally::default, |mut t, idx| {
            let a = FrequencyPoint::from_index(idx, n);
            let high = mu(&a, n) >= 2;
            let covered = owner[idx] != NONE;
            t.union += u64::from(covered);
            t.high += u64::from(high);
            t.uncovered += u64::from(high && !covered);
            t.spurious += u64::from(covered && !high);
            t.intersections += u64::from(hits[idx] > 1);
            t
        })
        .reduce(Tally::default, |a, b| Tally {
            union: a.union + b.union,
            high: a.high + b.high,
            uncovered: a.uncovered + b.uncovered,
            spurious: a.spurious + b.spurious,
            intersections: a.intersections + b.intersections,
        });

    let families = LineFamily::ALL
        .iter()
        .map(|&family| FamilyCoverage {
            family,
            lines: lines.iter().filter(|l| l.family == family).count(),
            expected_mu: family.mu_value(),
            observed_mu: family_mu[family as usize].iter().copied().collect(),
        })
        .collect();

    Ok(CoverageReport {
        n,
        line_count: lines.len(),
        union_size: tally.union,
        high_mu_points: tally.high,
        uncovered: tally.uncovered,
        spurious: tally.spurious,
        intersections: tally.intersections,
        short_lines,
        families,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn m(n: u32) -> Modulus {
        Modulus::new(n).unwrap()
    }

    fn dir(v: [i64; 3]) -> Direction {
        Direction::from_vector(v).unwrap()
    }

    #[test]
    fn line_normalization() {
        let l = Line::from_vector([-2, 4, -2]).unwrap();
        assert_eq!(l.generator, [1, -2, 1]);
        assert_eq!(l.family, LineFamily::Skew);
        assert_eq!(Line::from_vector([0, 0, 0]), None);
        assert_eq!(Line::from_vector([1, 2, 3]), None);
        assert_eq!(Line::from_vector([0, -1, 1]).unwrap().generator, [0, 1, -1]);
    }

    #[test]
    fn prototype_line_counts() {
        let lines = prototype_lines();
        assert_eq!(lines.len(), 25);
        let count = |f| lines.iter().filter(|l| l.family == f).count();
        assert_eq!(
            LineFamily::ALL.map(count),
            [3, 6, 4, 12]
        );
        let distinct: HashSet<_> = lines.iter().map(|l| l.generator).collect();
        assert_eq!(distinct.len(), 25);
        for l in &lines {
            assert_eq!(Line::from_vector(l.generator), Some(*l));
        }
    }

    #[test]
    fn prototype_lines_not_proportional() {
        let lines = prototype_lines();
        for (i, a) in lines.iter().enumerate() {
            for b in &lines[i + 1..] {
                let (p, q) = (a.generator, b.generator);
                let cross = [
                    p[1] * q[2] - p[2] * q[1],
                    p[2] * q[0] - p[0] * q[2],
                    p[0] * q[1] - p[1] * q[0],
                ];
                assert_ne!(cross, [0, 0, 0], "{a} vs {b}");
            }
        }
    }

    #[test]
    fn space_diagonals_and_skew_members() {
        let lines = prototype_lines();
        let space: BTreeSet<_> = lines
            .iter()
            .filter(|l| l.family == LineFamily::SpaceDiagonal)
            .map(|l| l.generator)
            .collect();
        let expected: BTreeSet<_> = [[1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1]]
            .into_iter()
            .collect();
        assert_eq!(space, expected);
        assert!(lines.iter().any(|l| l.generator == [1, 1, 2]));
        assert!(lines.iter().any(|l| l.generator == [2, 1, 1]));
    }

    #[test]
    fn group_maps_lines_to_lines_of_same_family() {
        let lines: HashSet<Line> = prototype_lines().into_iter().collect();
        for g in signed_permutation_group() {
            for l in &lines {
                let image = l.transform(&g);
                assert!(lines.contains(&image));
                assert_eq!(image.family, l.family);
            }
        }
    }

    #[test]
    fn pair_orbits_partition_the_78_pairs() {
        let orbits = pair_orbits();
        let total: usize = orbits.iter().map(|o| o.members.len()).sum();
        assert_eq!(total, 78);
        let all: HashSet<_> = orbits.iter().flat_map(|o| o.members.iter()).collect();
        assert_eq!(all.len(), 78);
        for o in &orbits {
            assert_eq!(o.members.first(), Some(&o.representative));
        }
    }

    #[test]
    fn coordinate_permutation_pairs_share_an_orbit() {
        let orbits = pair_orbits();
        let find = |p: DirectionPair| orbits.iter().position(|o| o.members.contains(&p));
        let p = DirectionPair::new(dir([1, 0, 0]), dir([0, 1, 0])).unwrap();
        let q = DirectionPair::new(dir([0, 1, 0]), dir([0, 0, 1])).unwrap();
        assert_eq!(find(p), find(q));
    }

    #[test]
    fn kernel_examples() {
        let n = m(7);
        let k = |u, v| solve_pair_kernel(&dir(u), &dir(v), n).unwrap().generator;
        assert_eq!(k([1, 1, 1], [1, 1, 0]), [1, -1, 0]);
        assert_eq!(k([1, 1, 1], [1, 0, -1]), [1, -2, 1]);
        assert_eq!(k([1, 0, 0], [0, 1, 0]), [0, 0, 1]);
    }

    #[test]
    fn kernel_errors() {
        let u = dir([1, 1, 0]);
        assert_eq!(
            solve_pair_kernel(&u, &u, m(5)),
            Err(Error::DegenerateKernel([1, 1, 0], [1, 1, 0]))
        );
        assert_eq!(
            solve_pair_kernel(&u, &dir([1, 0, 0]), m(9)),
            Err(Error::NonGenericModulus { n: 9 })
        );
    }

    #[test]
    fn listed_kernels_agree_with_cross_products() {
        for (u, v, w) in LISTED_PAIR_KERNELS {
            let line = kernel_line(&dir(u), &dir(v)).unwrap();
            assert_eq!(Some(line), Line::from_vector(w), "{u:?} {v:?}");
        }
    }

    #[test]
    fn every_pair_kernel_is_a_prototype_line_and_all_lines_are_hit() {
        let lines: HashSet<Line> = prototype_lines().into_iter().collect();
        let mut hit = HashSet::new();
        for p in DirectionPair::all() {
            let (u, v) = p.directions();
            let l = solve_pair_kernel(&u, &v, m(5)).unwrap();
            assert!(lines.contains(&l), "{p} -> {l}");
            hit.insert(l);
        }
        assert_eq!(hit, lines);
    }

    #[test]
    fn enumerated_kernels_match_lines() {
        for n in [5, 7] {
            for p in DirectionPair::all() {
                let (u, v) = p.directions();
                assert!(validate_pair_kernel(&u, &v, m(n), Budget::default()).unwrap());
            }
        }
    }

    #[test]
    fn classify_examples() {
        let c = classify(&FrequencyPoint::new([0, 0, 3], m(7)), m(7)).unwrap();
        assert_eq!(
            c,
            Classification::OnLine(Line { generator: [0, 0, 1], family: LineFamily::Axis })
        );
        let c = classify(&FrequencyPoint::new([1, 4, 2], m(5)), m(5)).unwrap();
        assert_eq!(
            c,
            Classification::OnLine(Line { generator: [1, -1, 2], family: LineFamily::Skew })
        );
        assert_eq!(
            classify(&FrequencyPoint::new([1, 2, 3], m(7)), m(7)),
            Ok(Classification::SingleHyperplane)
        );
        assert_eq!(classify(&FrequencyPoint::ZERO, m(7)), Ok(Classification::Zero));
        assert_eq!(
            classify(&FrequencyPoint::ZERO, m(6)),
            Err(Error::NonGenericModulus { n: 6 })
        );
    }

    #[test]
    fn classify_is_total_and_consistent() {
        for n in [5, 7, 11] {
            let n = m(n);
            for a in FrequencyPoint::all(n) {
                let c = classify(&a, n).unwrap();
                let k = mu(&a, n);
                match c {
                    Classification::Zero => assert!(a.is_zero()),
                    Classification::OnLine(l) => assert_eq!(k, l.family.mu_value()),
                    Classification::SingleHyperplane => assert_eq!(k, 1),
                    Classification::Generic => assert_eq!(k, 0),
                }
            }
        }
    }

    #[test]
    fn classify_reports_violation_with_a_missing_line() {
        let n = m(5);
        let lines: Vec<Line> = prototype_lines()
            .into_iter()
            .filter(|l| l.generator != [0, 0, 1])
            .collect();
        let err = classify_with(&FrequencyPoint::new([0, 0, 1], n), n, &lines).unwrap_err();
        assert!(matches!(err, Error::ClassificationViolation { .. }));
    }

    #[test]
    fn coverage_n5() {
        let r = coverage_check(m(5), Budget::default()).unwrap();
        assert!(r.pass(), "{r:?}");
        assert_eq!(r.union_size, 100);
        assert_eq!(r.high_mu_points, 36 + 16 + 48);
    }

    #[test]
    fn coverage_budget_and_regime() {
        assert!(matches!(
            coverage_check(m(5), Budget::new(100).unwrap()),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(
            coverage_check(m(15), Budget::default()),
            Err(Error::NonGenericModulus { n: 15 })
        );
    }
}
