//! The literal Cayley graph, built vertex by vertex, used to check the
//! spectrum without going through the eigenvalue formula: exact closed-walk
//! counts for `trace(A^k)`, and per-character eigenvector residuals.

use std::f64::consts::TAU;
use std::io::{self, Write};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::lattice::{FrequencyPoint, Modulus, DIRECTIONS};
use crate::spectrum::eigenvalue;

/// The connection set `S = {t*u mod n : u in U, 1 <= t < n}`, deduplicated
/// and sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorSet {
    pub n: Modulus,
    pub elements: Vec<FrequencyPoint>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `13 (n - 1)`, the size when the 13 punctured lines are disjoint.
    pub fn expected_len(&self) -> usize {
        13 * (self.n.get() as usize - 1)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.expected_len()
    }

    pub fn contains_zero(&self) -> bool {
        self.elements.binary_search(&FrequencyPoint::ZERO).is_ok()
    }

    pub fn closed_under_negation(&self) -> bool {
        self.elements
            .iter()
            .all(|s| self.elements.binary_search(&s.neg(self.n)).is_ok())
    }
}

pub fn generator_set(n: Modulus) -> GeneratorSet {
    let mut elements: Vec<FrequencyPoint> = DIRECTIONS
        .iter()
        .flat_map(|u| {
            let u = u.as_vector();
            (1..i64::from(n.get())).map(move |t| FrequencyPoint::new(u.map(|c| t * c), n))
        })
        .collect();
    elements.sort_unstable();
    elements.dedup();
    GeneratorSet { n, elements }
}

/// Neighbor lists of `Cay((Z_n)^3, S)`, indexed by `a1 + n*a2 + n^2*a3`.
/// Every list has length `|S|` and is sorted.
#[derive(Debug, Clone)]
pub struct AdjacencyStructure {
    n: Modulus,
    degree: usize,
    neighbors: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub n: Modulus,
    pub vertices: u64,
    pub degree: usize,
    pub edges: u64,
    pub symmetric: bool,
    pub loop_free: bool,
    pub regular: bool,
}

impl StructureReport {
    pub fn pass(&self) -> bool {
        self.symmetric && self.loop_free && self.regular
    }
}

pub fn build_adjacency(n: Modulus, budget: Budget) -> Result<AdjacencyStructure> {
    budget.check("graph construction", n.volume())?;
    let s = generator_set(n);
    let degree = s.len();
    let volume = n.volume() as usize;
    let mut neighbors = vec![0u32; volume * degree];
    if degree > 0 {
        neighbors
            .par_chunks_mut(degree)
            .enumerate()
            .for_each(|(idx, row)| {
                let x = FrequencyPoint::from_index(idx, n);
                for (slot, g) in row.iter_mut().zip(&s.elements) {
                    *slot = x.add(g, n).index(n) as u32;
                }
                row.sort_unstable();
            });
    }
    Ok(AdjacencyStructure {
        n,
        degree,
        neighbors,
    })
}

impl AdjacencyStructure {
    pub fn n(&self) -> Modulus {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.n.volume() as usize
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn edge_count(&self) -> u64 {
        self.vertex_count() as u64 * self.degree as u64 / 2
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[v * self.degree..(v + 1) * self.degree]
    }

    /// Symmetry, loop-freeness and regularity (no repeated neighbor).
    pub fn check(&self) -> StructureReport {
        let verts = self.vertex_count();
        let (symmetric, loop_free, regular) = (0..verts)
            .into_par_iter()
            .map(|v| {
                let row = self.neighbors(v);
                let sym = row
                    .iter()
                    .all(|&w| self.neighbors(w as usize).binary_search(&(v as u32)).is_ok());
                let no_loop = row.binary_search(&(v as u32)).is_err();
                let simple = row.windows(2).all(|p| p[0] < p[1]);
                (sym, no_loop, simple)
            })
            .reduce(|| (true, true, true), |a, b| (a.0 && b.0, a.1 && b.1, a.2 && b.2));
        StructureReport {
            n: self.n,
            vertices: verts as u64,
            degree: self.degree,
            edges: self.edge_count(),
            symmetric,
            loop_free,
            regular: regular && self.degree == generator_set(self.n).len(),
        }
    }

    /// Number of closed walks of length `1..=max_len` at the origin, by
    /// repeated exact neighbor sums of the origin indicator.
    pub fn closed_walks_at_origin(&self, max_len: u32) -> Vec<u128> {
        let mut current = vec![0u128; self.vertex_count()];
        current[0] = 1;
        let mut out = Vec::with_capacity(max_len as usize);
        for _ in 0..max_len {
            let next: Vec<u128> = (0..self.vertex_count())
                .into_par_iter()
                .map(|v| self.neighbors(v).iter().map(|&w| current[w as usize]).sum())
                .collect();
            current = next;
            out.push(current[0]);
        }
        out
    }

    /// `trace(A^k)` for `k = 1..=max_k`. The graph is vertex-transitive, so
    /// the trace is `n^3` times the closed-walk count at the origin.
    pub fn trace_powers(&self, max_k: u32) -> Vec<i128> {
        let volume = self.vertex_count() as i128;
        self.closed_walks_at_origin(max_k)
            .into_iter()
            .map(|w| volume * w as i128)
            .collect()
    }

    /// `max_x |(A chi_a)(x) - lambda * chi_a(x)|`, in floating point.
    pub fn character_residual(&self, a: &FrequencyPoint, lambda: i64) -> f64 {
        let chi = Character::new(*a, self.n);
        let roots = chi.roots();
        let phases: Vec<u32> = (0..self.vertex_count())
            .into_par_iter()
            .map(|v| chi.phase(&FrequencyPoint::from_index(v, self.n)))
            .collect();
        let lambda = lambda as f64;
        (0..self.vertex_count())
            .into_par_iter()
            .map(|v| {
                let applied: Complex64 = self
                    .neighbors(v)
                    .iter()
                    .map(|&w| roots[phases[w as usize] as usize])
                    .sum();
                (applied - roots[phases[v] as usize] * lambda).norm()
            })
            .reduce(|| 0.0, f64::max)
    }

    /// Writes `"i j"` per edge with `i < j`, after the header line.
    pub fn write_edge_list<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(
            out,
            "# queen3d-torus n={} vertices={} degree={}",
            self.n,
            self.vertex_count(),
            self.degree
        )?;
        for v in 0..self.vertex_count() {
            for &w in self.neighbors(v).iter().filter(|&&w| w as usize > v) {
                writeln!(out, "{v} {w}")?;
            }
        }
        out.flush()
    }
}

/// `trace(A^k)` by closed-walk counting on the explicit graph; `1 <= k <= 4`.
pub fn trace_power(k: u32, n: Modulus, budget: Budget) -> Result<i128> {
    if !(1..=4).contains(&k) {
        return Err(Error::UnsupportedWalkLength(k));
    }
    let graph = build_adjacency(n, budget)?;
    Ok(graph.trace_powers(k)[k as usize - 1])
}

/// The Fourier character `x -> exp(2 pi i (a . x) / n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Character {
    pub a: FrequencyPoint,
    pub n: Modulus,
}

impl Character {
    pub fn new(a: FrequencyPoint, n: Modulus) -> Self {
        Character { a, n }
    }

    /// `a . x mod n`.
    pub fn phase(&self, x: &FrequencyPoint) -> u32 {
        let s: u64 = (0..3)
            .map(|i| u64::from(self.a.coords()[i]) * u64::from(x.coords()[i]))
            .sum();
        (s % u64::from(self.n.get())) as u32
    }

    /// The `n` roots of unity `omega^j`, `j = 0..n`.
    pub fn roots(&self) -> Vec<Complex64> {
        let m = f64::from(self.n.get());
        (0..self.n.get())
            .map(|j| Complex64::from_polar(1.0, TAU * f64::from(j) / m))
            .collect()
    }

    pub fn value(&self, x: &FrequencyPoint) -> Complex64 {
        let m = f64::from(self.n.get());
        Complex64::from_polar(1.0, TAU * f64::from(self.phase(x)) / m)
    }
}

/// Residual of `chi_a` as an eigenvector with eigenvalue `n*mu(a) - 13`.
pub fn character_residual(a: &FrequencyPoint, n: Modulus, budget: Budget) -> Result<f64> {
    let lambda = eigenvalue(a, n)?;
    let graph = build_adjacency(n, budget)?;
    Ok(graph.character_residual(a, lambda))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeometricSum {
    pub exponent: u32,
    pub n: Modulus,
    /// `n - 1` when the exponent vanishes mod `n`, else `-1`.
    pub exact: i64,
    pub numeric_re: f64,
    pub numeric_im: f64,
    pub agrees: bool,
}

/// `sum_{t=1}^{n-1} omega^(t*e)`, exactly and in floating point.
pub fn geometric_sum_check(exponent: u32, n: Modulus) -> GeometricSum {
    let m = n.get();
    let e = exponent % m;
    let exact = if e == 0 { i64::from(m) - 1 } else { -1 };
    let numeric: Complex64 = (1..m)
        .map(|t| {
            let k = (u64::from(t) * u64::from(e)) % u64::from(m);
            Complex64::from_polar(1.0, TAU * k as f64 / f64::from(m))
        })
        .sum();
    let agrees = (numeric - Complex64::new(exact as f64, 0.0)).norm() < 1e-9 * f64::from(m);
    GeometricSum {
        exponent,
        n,
        exact,
        numeric_re: numeric.re,
        numeric_im: numeric.im,
        agrees,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::mu;

    fn m(n: u32) -> Modulus {
        Modulus::new(n).unwrap()
    }

    #[test]
    fn generator_set_sizes() {
        let s5 = generator_set(m(5));
        assert_eq!(s5.len(), 52);
        assert!(s5.is_full());
        let s7 = generator_set(m(7));
        assert_eq!(s7.len(), 78);
        assert!(s7.closed_under_negation());
        assert!(!s7.contains_zero());
        let s2 = generator_set(m(2));
        assert!(s2.len() < 13);
        assert!(s2.closed_under_negation());
        assert!(generator_set(m(1)).is_empty());
    }

    #[test]
    fn generator_set_collapses_exactly_for_even_n() {
        for n in [3, 9, 15] {
            assert!(generator_set(m(n)).is_full(), "n = {n}");
        }
        for n in [2, 4, 6, 8] {
            let s = generator_set(m(n));
            assert!(!s.is_full(), "n = {n}");
            assert!(s.closed_under_negation());
            assert!(!s.contains_zero());
        }
    }

    #[test]
    fn adjacency_n5() {
        let g = build_adjacency(m(5), Budget::ORACLE_DEFAULT).unwrap();
        let r = g.check();
        assert_eq!((r.vertices, r.degree, r.edges), (125, 52, 3250));
        assert!(r.pass());
    }

    #[test]
    fn adjacency_n7() {
        let g = build_adjacency(m(7), Budget::ORACLE_DEFAULT).unwrap();
        let r = g.check();
        assert_eq!((r.vertices, r.degree), (343, 78));
        assert_eq!(r.edges, 343 * 78 / 2);
        assert!(r.pass());
    }

    #[test]
    fn adjacency_is_translation_invariant() {
        let n = m(5);
        let g = build_adjacency(n, Budget::ORACLE_DEFAULT).unwrap();
        let base: Vec<FrequencyPoint> = g
            .neighbors(0)
            .iter()
            .map(|&w| FrequencyPoint::from_index(w as usize, n))
            .collect();
        for v in [1usize, 17, 63, 124] {
            let x = FrequencyPoint::from_index(v, n);
            let mut shifted: Vec<u32> = base.iter().map(|b| x.add(b, n).index(n) as u32).collect();
            shifted.sort_unstable();
            assert_eq!(g.neighbors(v), shifted.as_slice());
        }
    }

    #[test]
    fn adjacency_budget() {
        assert!(matches!(
            build_adjacency(m(5), Budget::new(124).unwrap()),
            Err(Error::BudgetExceeded { required: 125, .. })
        ));
    }

    #[test]
    fn trace_powers_frozen() {
        // Frozen from an independent brute-force walk count.
        let g5 = build_adjacency(m(5), Budget::ORACLE_DEFAULT).unwrap();
        assert_eq!(g5.trace_powers(4), vec![0, 6500, 139_500, 7_500_500]);
        assert_eq!(trace_power(2, m(5), Budget::ORACLE_DEFAULT), Ok(6500));
        assert_eq!(trace_power(1, m(7), Budget::ORACLE_DEFAULT), Ok(0));
        assert_eq!(
            trace_power(5, m(5), Budget::ORACLE_DEFAULT),
            Err(Error::UnsupportedWalkLength(5))
        );
    }

    #[test]
    fn character_is_multiplicative_and_unimodular() {
        let n = m(7);
        let chi = Character::new(FrequencyPoint::new([1, 3, 5], n), n);
        let x = FrequencyPoint::new([2, 6, 1], n);
        let y = FrequencyPoint::new([4, 4, 3], n);
        let lhs = chi.value(&x.add(&y, n));
        let rhs = chi.value(&x) * chi.value(&y);
        assert!((lhs - rhs).norm() < 1e-12);
        assert!((chi.value(&x).norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn residual_examples() {
        let n = m(7);
        let tol = 1e-8 * 78.0;
        for a in [[0, 0, 0], [1, 1, 1], [1, 2, 3]] {
            let a = FrequencyPoint::new(a, n);
            let r = character_residual(&a, n, Budget::ORACLE_DEFAULT).unwrap();
            assert!(r < tol, "a = {a}: {r}");
        }
        assert_eq!(mu(&FrequencyPoint::new([1, 1, 1], n), n), 3);
        let zero = character_residual(&FrequencyPoint::ZERO, m(5), Budget::ORACLE_DEFAULT).unwrap();
        assert!(zero < 1e-9);
    }

    #[test]
    fn residual_detects_a_wrong_eigenvalue() {
        let n = m(5);
        let g = build_adjacency(n, Budget::ORACLE_DEFAULT).unwrap();
        let a = FrequencyPoint::new([1, 1, 2], n);
        assert!(g.character_residual(&a, -3) < 1e-9);
        assert!(g.character_residual(&a, -2) > 0.5);
    }

    #[test]
    fn residual_rejects_non_generic() {
        assert_eq!(
            character_residual(&FrequencyPoint::ZERO, m(6), Budget::ORACLE_DEFAULT),
            Err(Error::NonGenericModulus { n: 6 })
        );
    }

    #[test]
    fn geometric_sums() {
        assert_eq!(geometric_sum_check(0, m(9)).exact, 8);
        assert_eq!(geometric_sum_check(3, m(9)).exact, -1);
        assert_eq!(geometric_sum_check(1, m(2)).exact, -1);
        assert_eq!(geometric_sum_check(18, m(9)).exact, 8);
        for n in 1..=13 {
            for e in 0..2 * n {
                assert!(geometric_sum_check(e, m(n)).agrees, "e = {e}, n = {n}");
            }
        }
    }

    #[test]
    fn edge_list_format() {
        let g = build_adjacency(m(5), Budget::ORACLE_DEFAULT).unwrap();
        let mut buf = Vec::new();
        g.write_edge_list(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("# queen3d-torus n=5 vertices=125 degree=52"));
        let edges: Vec<(u32, u32)> = lines
            .map(|l| {
                let (i, j) = l.split_once(' ').unwrap();
                (i.parse().unwrap(), j.parse().unwrap())
            })
            .collect();
        assert_eq!(edges.len(), 3250);
        assert!(edges.iter().all(|(i, j)| i < j));
    }
}
