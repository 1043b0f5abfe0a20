//! Endomorphism pairs (σ, δ) and the π-maps of an Ore extension.
//!
//! π_j^i is the sum of all C(i, j) compositions of j copies of σ and
//! i − j copies of δ. Two builders are provided: a dynamic-programming
//! route through the one-shift recurrence π_j^{k+1} = π_{j−1}^k∘σ + π_j^k∘δ,
//! and a brute-force route that literally enumerates and sums the words.
//! They must agree; the brute-force route is the oracle.

use crate::algebra::group::FiniteAbelianGroup;
use crate::algebra::structure::GroupWithOperators;
use crate::error::Result;

/// Additive endomorphisms σ, δ of a group, with optional companion maps
/// σ_A, δ_A on the operator side (arbitrary maps, no axioms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoPair {
    sigma: Vec<u16>,
    delta: Vec<u16>,
    sigma_a: Option<Vec<u16>>,
    delta_a: Option<Vec<u16>>,
}

impl EndoPair {
    /// Validates that both maps are additive endomorphisms of `group`.
    pub fn new(group: &FiniteAbelianGroup, sigma: Vec<u16>, delta: Vec<u16>) -> Result<Self> {
        group.check_additive(&sigma)?;
        group.check_additive(&delta)?;
        Ok(EndoPair { sigma, delta, sigma_a: None, delta_a: None })
    }

    /// Attaches companion maps on an operator set of size `ops_len`.
    pub fn with_companions(mut self, ops_len: usize, sigma_a: Vec<u16>, delta_a: Vec<u16>) -> Self {
        assert_eq!(sigma_a.len(), ops_len, "sigma_a table shape mismatch");
        assert_eq!(delta_a.len(), ops_len, "delta_a table shape mismatch");
        assert!(sigma_a.iter().chain(&delta_a).all(|&x| (x as usize) < ops_len));
        self.sigma_a = Some(sigma_a);
        self.delta_a = Some(delta_a);
        self
    }

    /// The identity-σ, zero-δ pair (the plain polynomial-group case).
    pub fn trivial(group: &FiniteAbelianGroup) -> Self {
        EndoPair {
            sigma: group.elements().collect(),
            delta: vec![group.zero(); group.order()],
            sigma_a: None,
            delta_a: None,
        }
    }

    #[inline]
    pub fn sigma(&self, b: u16) -> u16 {
        self.sigma[b as usize]
    }

    #[inline]
    pub fn delta(&self, b: u16) -> u16 {
        self.delta[b as usize]
    }

    pub fn sigma_table(&self) -> &[u16] {
        &self.sigma
    }

    pub fn delta_table(&self) -> &[u16] {
        &self.delta
    }

    pub fn companions(&self) -> Option<(&[u16], &[u16])> {
        match (&self.sigma_a, &self.delta_a) {
            (Some(s), Some(d)) => Some((s, d)),
            _ => None,
        }
    }

    /// σ composed with itself `i` times, as a table.
    pub fn sigma_power(&self, i: u32, order: usize) -> Vec<u16> {
        let mut t: Vec<u16> = (0..order as u16).collect();
        for _ in 0..i {
            t = t.iter().map(|&b| self.sigma(b)).collect();
        }
        t
    }
}

/// How a π-map table was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PiBuilder {
    /// One-shift recurrence (production path).
    Dp,
    /// Word enumeration (oracle path).
    Bruteforce,
}

/// One π_j^i as an explicit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiOperator {
    pub i: u32,
    pub j: u32,
    pub table: Vec<u16>,
    pub builder: PiBuilder,
}

/// Builds π_j^i with the requested builder. Out-of-range indices (j > i)
/// yield the zero map, matching the defining convention.
pub fn pi_map(
    group: &FiniteAbelianGroup,
    pair: &EndoPair,
    i: u32,
    j: u32,
    builder: PiBuilder,
) -> PiOperator {
    let table = match builder {
        PiBuilder::Dp => {
            let maps = PiTriangle::build(group, pair, i);
            maps.table(i, j as i64).to_vec()
        }
        PiBuilder::Bruteforce => pi_bruteforce(group, pair, i, j),
    };
    PiOperator { i, j, table, builder }
}

fn pi_bruteforce(group: &FiniteAbelianGroup, pair: &EndoPair, i: u32, j: u32) -> Vec<u16> {
    let n = group.order();
    let mut sum = vec![group.zero(); n];
    if j > i {
        return sum;
    }
    for word in sigma_delta_words(i, j) {
        // Compose right-to-left: the last letter is applied first.
        let mut t: Vec<u16> = (0..n as u16).collect();
        for &is_sigma in word.iter().rev() {
            t = t
                .iter()
                .map(|&b| if is_sigma { pair.sigma(b) } else { pair.delta(b) })
                .collect();
        }
        for b in 0..n {
            sum[b] = group.add(sum[b], t[b]);
        }
    }
    sum
}

/// All length-`m` words with exactly `k` σ letters (`true` = σ), in
/// lexicographic order with σ before δ.
pub fn sigma_delta_words(m: u32, k: u32) -> Vec<Vec<bool>> {
    fn go(m: u32, k: u32, prefix: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if m == 0 {
            out.push(prefix.clone());
            return;
        }
        if k > 0 {
            prefix.push(true);
            go(m - 1, k - 1, prefix, out);
            prefix.pop();
        }
        if m - k > 0 {
            prefix.push(false);
            go(m - 1, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if k <= m {
        go(m, k, &mut Vec::new(), &mut out);
    }
    out
}

/// The full triangle of π tables for superscripts 0..=max_sup, built once by
/// the one-shift recurrence and shared by the identity checkers.
#[derive(Debug, Clone)]
pub struct PiTriangle {
    /// rows[i][j] = table of π_j^i for 0 ≤ j ≤ i.
    rows: Vec<Vec<Vec<u16>>>,
    zero_row: Vec<u16>,
}

impl PiTriangle {
    pub fn build(group: &FiniteAbelianGroup, pair: &EndoPair, max_sup: u32) -> Self {
        let n = group.order();
        let identity: Vec<u16> = (0..n as u16).collect();
        let mut rows: Vec<Vec<Vec<u16>>> = vec![vec![identity]];
        for k in 0..max_sup {
            let prev = &rows[k as usize];
            let mut row = Vec::with_capacity(k as usize + 2);
            for j in 0..=(k + 1) as usize {
                let table: Vec<u16> = (0..n as u16)
                    .map(|b| {
                        let via_sigma = if j >= 1 && j - 1 < prev.len() {
                            prev[j - 1][pair.sigma(b) as usize]
                        } else {
                            group.zero()
                        };
                        let via_delta = if j < prev.len() {
                            prev[j][pair.delta(b) as usize]
                        } else {
                            group.zero()
                        };
                        group.add(via_sigma, via_delta)
                    })
                    .collect();
                row.push(table);
            }
            rows.push(row);
        }
        PiTriangle { rows, zero_row: vec![group.zero(); n] }
    }

    pub fn max_sup(&self) -> u32 {
        self.rows.len() as u32 - 1
    }

    /// Table of π_j^i; the zero map when j < 0 or j > i.
    pub fn table(&self, i: u32, j: i64) -> &[u16] {
        if j < 0 || j > i as i64 {
            &self.zero_row
        } else {
            &self.rows[i as usize][j as usize]
        }
    }

    #[inline]
    pub fn apply(&self, i: u32, j: i64, b: u16) -> u16 {
        self.table(i, j)[b as usize]
    }
}

/// The formal sum π_k^m(a) of operator words: all arrangements of k σ_A and
/// m − k δ_A letters applied to a base operator. The operator set has no
/// addition, so the sum only becomes an element once the words act on a
/// group element and the images are added there.
#[derive(Debug, Clone)]
pub struct FormalPiWords {
    pub m: u32,
    pub k: u32,
    words: Vec<Vec<bool>>,
}

impl FormalPiWords {
    pub fn new(m: u32, k: u32) -> Self {
        FormalPiWords { m, k, words: sigma_delta_words(m, k) }
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    /// Applies every word to `base` using companion tables, in word order.
    /// Returns one operator per word (a multiset of A-elements).
    pub fn images(&self, base: u16, sigma_a: &[u16], delta_a: &[u16]) -> Vec<u16> {
        self.words
            .iter()
            .map(|word| {
                let mut a = base;
                for &is_sigma in word.iter().rev() {
                    a = if is_sigma { sigma_a[a as usize] } else { delta_a[a as usize] };
                }
                a
            })
            .collect()
    }

    /// Evaluates (π_k^m(a))·c = Σ_w (w(a))·c inside the target group.
    pub fn eval_on(
        &self,
        base: u16,
        c: u16,
        sigma_a: &[u16],
        delta_a: &[u16],
        action: &GroupWithOperators,
    ) -> u16 {
        let mut acc = action.group().zero();
        for w in self.images(base, sigma_a, delta_a) {
            acc = action.group().add(acc, action.act(w, c));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mult_pair(n: u32, s: u16, d: u16) -> (FiniteAbelianGroup, EndoPair) {
        let g = FiniteAbelianGroup::cyclic(n);
        let sigma = (0..n as u16).map(|b| ((b as u32 * s as u32) % n) as u16).collect();
        let delta = (0..n as u16).map(|b| ((b as u32 * d as u32) % n) as u16).collect();
        let pair = EndoPair::new(&g, sigma, delta).unwrap();
        (g, pair)
    }

    #[test]
    fn pi_small_cases_on_z5() {
        // σ = x2, δ = x3 on Z/5: π_1^2 = σδ + δσ, π_1^2(1) = 12 mod 5 = 2.
        let (g, pair) = mult_pair(5, 2, 3);
        let p12 = pi_map(&g, &pair, 2, 1, PiBuilder::Dp);
        assert_eq!(p12.table[1], 2);
        let p22 = pi_map(&g, &pair, 2, 2, PiBuilder::Dp);
        assert_eq!(p22.table[1], 4); // σ²(1) = 4
        let p13 = pi_map(&g, &pair, 3, 1, PiBuilder::Bruteforce);
        assert_eq!(p13.table[1], 4); // σδδ + δσδ + δδσ at 1 = 54 mod 5 = 4
        let p02 = pi_map(&g, &pair, 2, 0, PiBuilder::Dp);
        assert_eq!(p02.table[1], 4); // δ²(1) = 9 mod 5
    }

    #[test]
    fn out_of_range_indices_are_zero() {
        let (g, pair) = mult_pair(5, 2, 3);
        let p = pi_map(&g, &pair, 2, 3, PiBuilder::Dp);
        assert!(p.table.iter().all(|&x| x == 0));
        let q = pi_map(&g, &pair, 2, 3, PiBuilder::Bruteforce);
        assert_eq!(p.table, q.table);
    }

    #[test]
    fn dp_matches_bruteforce_on_product_group() {
        let g = FiniteAbelianGroup::cyclic_product(&[2, 4]);
        // σ = negation twist (x, y) -> (x, -y); δ = (x, y) -> (0, 2y).
        let sigma: Vec<u16> = g
            .elements()
            .map(|b| {
                let (x, y) = (b / 4, b % 4);
                x * 4 + (4 - y) % 4
            })
            .collect();
        let delta: Vec<u16> = g.elements().map(|b| (b % 4) * 2 % 4).collect();
        let pair = EndoPair::new(&g, sigma, delta).unwrap();
        for i in 0..=6 {
            for j in 0..=i {
                let dp = pi_map(&g, &pair, i, j, PiBuilder::Dp);
                let bf = pi_map(&g, &pair, i, j, PiBuilder::Bruteforce);
                assert_eq!(dp.table, bf.table, "π_{j}^{i} differs");
            }
        }
    }

    #[test]
    fn word_enumeration_counts_binomials() {
        assert_eq!(sigma_delta_words(8, 4).len(), 70);
        assert_eq!(sigma_delta_words(3, 1), vec![
            vec![true, false, false],
            vec![false, true, false],
            vec![false, false, true],
        ]);
        assert_eq!(sigma_delta_words(0, 0), vec![Vec::<bool>::new()]);
        assert!(sigma_delta_words(2, 3).is_empty());
    }

    #[test]
    fn pi_maps_are_additive() {
        let (g, pair) = mult_pair(6, 5, 3);
        let tri = PiTriangle::build(&g, &pair, 5);
        for i in 0..=5u32 {
            for j in 0..=i as i64 {
                for b in g.elements() {
                    for c in g.elements() {
                        assert_eq!(
                            tri.apply(i, j, g.add(b, c)),
                            g.add(tri.apply(i, j, b), tri.apply(i, j, c))
                        );
                    }
                }
            }
        }
    }
}
