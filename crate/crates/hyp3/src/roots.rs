//! Vanishing sums of roots of unity with rational coefficients (Mann's bound), an
//! exhaustive oracle, and the two factor analyses used for the boundary coefficients.

use std::collections::BTreeSet;
use std::f64::consts::PI;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::exact::{rational::to_f64, Cyclotomic, Rational, RootOfUnity};
use crate::{Error, Result};

/// Longest relation [`solve_vanishing_sum`] accepts.
pub const SOLVER_CAP: usize = 6;
/// Largest order [`brute_force_vanishing`] accepts.
pub const BRUTE_FORCE_MAX_ORDER: u64 = 60;
const BRUTE_FORCE_BUDGET: u64 = 50_000_000;
const NUMERIC_PREFILTER: f64 = 1e-8;

/// `Σ aᵢ ζᵢ = 0` with nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    coefficients: Vec<Rational>,
}

impl Relation {
    pub fn new(coefficients: Vec<Rational>) -> Result<Self> {
        if coefficients.len() < 2 {
            return Err(Error::InvalidInput("a relation needs at least two terms".into()));
        }
        if coefficients.iter().any(|a| a.is_zero()) {
            return Err(Error::InvalidInput("relation coefficients must be nonzero".into()));
        }
        Ok(Relation { coefficients })
    }

    pub fn from_ints(c: &[i64]) -> Result<Self> {
        Self::new(c.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn sub(&self, idx: &[usize]) -> Vec<Rational> {
        idx.iter().map(|&i| self.coefficients[i].clone()).collect()
    }
}

/// Exact test of `Σ aᵢ roots[i] = 0`.
pub fn relation_vanishes(coeffs: &[Rational], roots: &[RootOfUnity]) -> Result<bool> {
    let n = roots.iter().fold(1u64, |l, r| l.lcm(&r.order()));
    let exps: Vec<u64> = roots
        .iter()
        .map(|r| (r.exponent() * Rational::from_integer(n.into())).to_integer().to_u64().expect("reduced exponent"))
        .collect();
    vanishes_at_order(coeffs, &exps, n)
}

fn vanishes_at_order(coeffs: &[Rational], exps: &[u64], n: u64) -> Result<bool> {
    let mut poly = vec![Rational::zero(); n as usize];
    for (a, &e) in coeffs.iter().zip(exps) {
        poly[e as usize] += a;
    }
    Ok(Cyclotomic::from_poly(n, poly)?.is_zero())
}

fn primes_up_to(k: usize) -> Vec<u64> {
    (2..=k as u64).filter(|&p| (2..p).all(|d| p % d != 0)).collect()
}

/// Divisors of the product of the primes `≤ k`, ascending.
pub fn mann_candidate_orders(k: usize) -> Vec<u64> {
    let mut out = vec![1u64];
    for p in primes_up_to(k) {
        let more: Vec<u64> = out.iter().map(|d| d * p).collect();
        out.extend(more);
    }
    out.sort_unstable();
    out
}

/// Numeric-then-exact vanishing test on exponent tuples of a fixed order.
struct Checker {
    n: u64,
    cos: Vec<f64>,
    sin: Vec<f64>,
}

impl Checker {
    fn new(n: u64) -> Self {
        let ang = |k: u64| 2.0 * PI * k as f64 / n as f64;
        Checker { n, cos: (0..n).map(|k| ang(k).cos()).collect(), sin: (0..n).map(|k| ang(k).sin()).collect() }
    }

    fn check(&self, coeffs: &[Rational], coeffs_f: &[f64], exps: &[u64]) -> Result<bool> {
        let (mut re, mut im) = (0.0, 0.0);
        for (a, &e) in coeffs_f.iter().zip(exps) {
            re += a * self.cos[e as usize];
            im += a * self.sin[e as usize];
        }
        let scale: f64 = coeffs_f.iter().map(|a| a.abs()).sum();
        if re.hypot(im) > NUMERIC_PREFILTER * scale {
            return Ok(false);
        }
        vanishes_at_order(coeffs, exps, self.n)
    }
}

/// Whether some nonempty proper sub-sum vanishes.
fn has_vanishing_subsum(coeffs: &[Rational], roots: &[RootOfUnity]) -> Result<bool> {
    let m = coeffs.len();
    for mask in 1u32..(1 << m) - 1 {
        if mask.count_ones() < 2 {
            continue;
        }
        let idx: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        let c: Vec<Rational> = idx.iter().map(|&i| coeffs[i].clone()).collect();
        let r: Vec<RootOfUnity> = idx.iter().map(|&i| roots[i].clone()).collect();
        if relation_vanishes(&c, &r)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// All irreducible solutions with the first root pinned to 1.
fn irreducible_solutions(coeffs: &[Rational]) -> Result<BTreeSet<Vec<RootOfUnity>>> {
    let m = coeffs.len();
    let coeffs_f: Vec<f64> = coeffs.iter().map(to_f64).collect();
    let mut out = BTreeSet::new();
    for n in mann_candidate_orders(m) {
        let checker = Checker::new(n);
        let mut exps = vec![0u64; m];
        'odometer: loop {
            if checker.check(coeffs, &coeffs_f, &exps)? {
                let roots: Vec<RootOfUnity> = exps.iter().map(|&e| RootOfUnity::from_fraction(e as i64, n as i64)).collect();
                if !has_vanishing_subsum(coeffs, &roots)? {
                    out.insert(roots);
                }
            }
            let mut k = 1;
            loop {
                if k == m {
                    break 'odometer;
                }
                exps[k] += 1;
                if exps[k] == n {
                    exps[k] = 0;
                    k += 1;
                } else {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// Set partitions of `0..k` whose blocks all have at least two elements.
pub fn partitions_min2(k: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(i: usize, k: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == k {
            if cur.iter().all(|b| b.len() >= 2) {
                out.push(cur.clone());
            }
            return;
        }
        // Prune: blocks that are still too small need the remaining elements.
        let missing: usize = cur.iter().map(|b| 2usize.saturating_sub(b.len())).sum();
        if missing > k - i {
            return;
        }
        for j in 0..cur.len() {
            cur[j].push(i);
            rec(i + 1, k, cur, out);
            cur[j].pop();
        }
        cur.push(vec![i]);
        rec(i + 1, k, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    rec(0, k, &mut Vec::new(), &mut out);
    out
}

/// Solutions that split along `partition` into irreducible vanishing blocks.
///
/// `shapes[j]` lists the roots of block `j` divided by the root of its first index.  The
/// block containing index 0 is pinned (its first root is 1); every other block carries a
/// free rotation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SolutionFamily {
    pub partition: Vec<Vec<usize>>,
    pub shapes: Vec<Vec<RootOfUnity>>,
}

impl SolutionFamily {
    pub fn is_irreducible(&self) -> bool {
        self.partition.len() == 1
    }

    pub fn free_rotations(&self) -> usize {
        self.partition.len() - 1
    }

    pub fn len(&self) -> usize {
        self.partition.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The tuple obtained with the given rotations of the non-pinned blocks.
    pub fn with_rotations(&self, rot: &[RootOfUnity]) -> Vec<RootOfUnity> {
        assert_eq!(rot.len(), self.free_rotations());
        let mut out = vec![RootOfUnity::one(); self.len()];
        for (j, (block, shape)) in self.partition.iter().zip(&self.shapes).enumerate() {
            let r = if j == 0 { RootOfUnity::one() } else { rot[j - 1].clone() };
            for (&i, s) in block.iter().zip(shape) {
                out[i] = r.mul(s);
            }
        }
        out
    }

    /// Every member whose roots all have order dividing `order`.
    pub fn instances(&self, order: u64) -> Vec<Vec<RootOfUnity>> {
        let f = self.free_rotations();
        let mut out = Vec::new();
        let mut idx = vec![0u64; f];
        loop {
            let rot: Vec<RootOfUnity> = idx.iter().map(|&e| RootOfUnity::from_fraction(e as i64, order as i64)).collect();
            let t = self.with_rotations(&rot);
            if t.iter().all(|r| order % r.order() == 0) {
                out.push(t);
            }
            let mut k = 0;
            loop {
                if k == f {
                    return out;
                }
                idx[k] += 1;
                if idx[k] == order {
                    idx[k] = 0;
                    k += 1;
                } else {
                    break;
                }
            }
        }
    }
}

/// All solutions of a relation up to a global rotation (first root pinned to 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub relation: Relation,
    pub families: Vec<SolutionFamily>,
}

impl SolutionSet {
    /// The finitely many solutions without a free rotation.
    pub fn irreducible(&self) -> Vec<Vec<RootOfUnity>> {
        self.families.iter().filter(|f| f.is_irreducible()).map(|f| f.shapes[0].clone()).collect()
    }

    /// All solutions whose roots have order dividing `order`.
    pub fn tuples_of_order(&self, order: u64) -> BTreeSet<Vec<RootOfUnity>> {
        self.families.iter().flat_map(|f| f.instances(order)).collect()
    }
}

/// Solves `Σ aᵢ ζᵢ = 0` over roots of unity: every solution is a union of irreducible
/// blocks, and each irreducible block of length `m` lives (after rotation) in `μ_N` with
/// `N` dividing the product of the primes `≤ m`.
pub fn solve_vanishing_sum(r: &Relation) -> Result<SolutionSet> {
    let k = r.len();
    if k > SOLVER_CAP {
        return Err(Error::RelationTooLong { len: k, cap: SOLVER_CAP });
    }
    let mut families = Vec::new();
    for partition in partitions_min2(k) {
        let per_block: Vec<Vec<Vec<RootOfUnity>>> = partition
            .iter()
            .map(|b| irreducible_solutions(&r.sub(b)).map(|s| s.into_iter().collect()))
            .collect::<Result<_>>()?;
        if per_block.iter().any(Vec::is_empty) {
            continue;
        }
        let mut choice = vec![0usize; partition.len()];
        loop {
            let shapes = choice.iter().zip(&per_block).map(|(&c, sols)| sols[c].clone()).collect();
            families.push(SolutionFamily { partition: partition.clone(), shapes });
            let mut j = 0;
            loop {
                if j == choice.len() {
                    break;
                }
                choice[j] += 1;
                if choice[j] == per_block[j].len() {
                    choice[j] = 0;
                    j += 1;
                } else {
                    break;
                }
            }
            if j == choice.len() {
                break;
            }
        }
    }
    families.sort();
    Ok(SolutionSet { relation: r.clone(), families })
}

/// Every tuple in `μ_maxOrder` (first root pinned to 1) satisfying the relation.
pub fn brute_force_vanishing(r: &Relation, max_order: u64) -> Result<BTreeSet<Vec<RootOfUnity>>> {
    if max_order == 0 || max_order > BRUTE_FORCE_MAX_ORDER {
        return Err(Error::InvalidInput(format!("order must be in 1..={BRUTE_FORCE_MAX_ORDER}")));
    }
    let k = r.len();
    let space = (max_order as f64).powi(k as i32 - 1);
    if space > BRUTE_FORCE_BUDGET as f64 {
        return Err(Error::SearchSpaceTooLarge(format!("{max_order}^{} tuples", k - 1)));
    }
    let coeffs_f: Vec<f64> = r.coefficients.iter().map(to_f64).collect();
    let checker = Checker::new(max_order);
    let mut out = BTreeSet::new();
    let mut exps = vec![0u64; k];
    loop {
        if checker.check(&r.coefficients, &coeffs_f, &exps)? {
            out.insert(exps.iter().map(|&e| RootOfUnity::from_fraction(e as i64, max_order as i64)).collect());
        }
        let mut j = 1;
        loop {
            if j == k {
                return Ok(out);
            }
            exps[j] += 1;
            if exps[j] == max_order {
                exps[j] = 0;
                j += 1;
            } else {
                break;
            }
        }
    }
}

/// Sign patterns `(c₀, c₁, c₂)` of the four factors `c₀ + c₁S̃₁ + c₂S̃₂` of the `C4`
/// coefficient.
pub const C4_FACTORS: [[i64; 3]; 4] = [[1, -1, -1], [-1, -1, 1], [-1, 1, -1], [1, 1, 1]];

#[derive(Clone, Debug, PartialEq)]
pub struct C4Solution {
    pub factor: [i64; 3],
    pub s1_root: RootOfUnity,
    pub s2_root: RootOfUnity,
}

impl C4Solution {
    pub fn is_sixth_root_pair(&self) -> bool {
        6 % self.s1_root.order() == 0 && 6 % self.s2_root.order() == 0
    }

    /// `S₁S₂ = (S̃₁S̃₂)² = 1`.
    pub fn product_is_one(&self) -> bool {
        self.s1_root.mul(&self.s2_root).pow(2).is_one()
    }
}

/// Zeros of the `C4` coefficient in roots of unity.  The constant term is the pinned
/// index, so the solver's normalization yields `S̃₁, S̃₂` directly.
pub fn analyze_c4_factors() -> Result<Vec<C4Solution>> {
    let mut out = Vec::new();
    for f in C4_FACTORS {
        let set = solve_vanishing_sum(&Relation::from_ints(&f)?)?;
        for t in set.irreducible() {
            out.push(C4Solution { factor: f, s1_root: t[1].clone(), s2_root: t[2].clone() });
        }
    }
    Ok(out)
}

/// Sign patterns `(s₁, s₂, s₃)` of the four factors `h₁₂h₁₃h₂₃ + s₁h₁₂ + s₂h₁₃ + s₃h₂₃` of the
/// standard-cone coefficient (`h = q^{1/2}`).
pub const L_FACTORS: [[i64; 3]; 4] = [[-1, -1, 1], [-1, 1, -1], [1, -1, -1], [1, 1, 1]];

/// A value of one of the three variables `(h₁₂, h₁₃, h₂₃)` in a family of zeros.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Slot {
    Fixed(RootOfUnity),
    Free,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LZeroFamily {
    pub signs: [i64; 3],
    pub vars: [Slot; 3],
}

impl LZeroFamily {
    /// Variables pinned to `±1` (so that `q = h² = 1`).
    pub fn forced_to_sign(&self) -> Vec<usize> {
        (0..3)
            .filter(|&i| matches!(&self.vars[i], Slot::Fixed(r) if r.pow(2).is_one()))
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LFactorReport {
    pub families: Vec<LZeroFamily>,
    /// Zeros coming from irreducible 4-term relations (none exist).
    pub irreducible_count: usize,
}

impl LFactorReport {
    /// Every family pins at least two variables to `±1`.
    pub fn forces_two_trivial(&self) -> bool {
        self.families.iter().all(|f| f.forced_to_sign().len() >= 2)
    }
}

/// The two square roots of a root of unity.
fn square_roots(r: &RootOfUnity) -> [RootOfUnity; 2] {
    let half = RootOfUnity::new(r.exponent() / Rational::from_integer(2.into()));
    [half.clone(), half.mul(&RootOfUnity::from_fraction(1, 2))]
}

/// Zeros of the 4-term factors in roots of unity.
///
/// Each factor is the relation `(1, s₁, s₂, s₃)` on the monomials `(abc, a, b, c)`.  Its
/// solution families are lifted back to `(a, b, c)` by imposing that the first monomial
/// is the product of the other three.
pub fn analyze_l_factors() -> Result<LFactorReport> {
    let mut families = BTreeSet::new();
    let mut irreducible_count = 0;
    for s in L_FACTORS {
        let set = solve_vanishing_sum(&Relation::from_ints(&[1, s[0], s[1], s[2]])?)?;
        for fam in &set.families {
            match fam.partition.len() {
                1 => {
                    // m_i = ξ n_i with ξ² = n₀ / (n₁n₂n₃).
                    let n = &fam.shapes[0];
                    let target = n[0].mul(&n[1].mul(&n[2]).mul(&n[3]).inv());
                    for xi in square_roots(&target) {
                        irreducible_count += 1;
                        let vars = [1, 2, 3].map(|i| Slot::Fixed(xi.mul(&n[i])));
                        families.insert(LZeroFamily { signs: s, vars });
                    }
                }
                2 => {
                    // Blocks {0, j} (rotation ξ, free) and {k, l} (rotation η): the monomial
                    // constraint reads η² n_l = 1 / n_j.
                    let (b0, b1) = (&fam.partition[0], &fam.partition[1]);
                    let j = b0[1];
                    let (k, l) = (b1[0], b1[1]);
                    let nj = &fam.shapes[0][1];
                    let nl = &fam.shapes[1][1];
                    for eta in square_roots(&nj.mul(nl).inv()) {
                        let mut vars = [Slot::Free, Slot::Free, Slot::Free];
                        vars[k - 1] = Slot::Fixed(eta.clone());
                        vars[l - 1] = Slot::Fixed(eta.mul(nl));
                        vars[j - 1] = Slot::Free;
                        families.insert(LZeroFamily { signs: s, vars });
                    }
                }
                _ => unreachable!("four terms split into at most two blocks"),
            }
        }
    }
    Ok(LFactorReport { families: families.into_iter().collect(), irreducible_count })
}

/// Direct enumeration: all `(a, b, c) ∈ μ_order³` on which some 4-term factor vanishes
/// exactly.
pub fn enumerate_l_factor_zeros(order: u64) -> Result<Vec<([i64; 3], [RootOfUnity; 3])>> {
    let mut out = Vec::new();
    let r = |k: u64| RootOfUnity::from_fraction(k as i64, order as i64);
    for s in L_FACTORS {
        let coeffs: Vec<Rational> = [1, s[0], s[1], s[2]].iter().map(|&x| Rational::from_integer(x.into())).collect();
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    let m = [(a + b + c) % order, a, b, c];
                    if vanishes_at_order(&coeffs, &m, order)? {
                        out.push((s, [r(a), r(b), r(c)]));
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ru(k: i64, n: i64) -> RootOfUnity {
        RootOfUnity::from_fraction(k, n)
    }

    #[test]
    fn candidate_orders() {
        assert_eq!(mann_candidate_orders(2), vec![1, 2]);
        assert_eq!(mann_candidate_orders(4), vec![1, 2, 3, 6]);
        assert_eq!(mann_candidate_orders(6), vec![1, 2, 3, 5, 6, 10, 15, 30]);
    }

    #[test]
    fn small_relations() {
        let s = solve_vanishing_sum(&Relation::from_ints(&[1, 1]).unwrap()).unwrap();
        assert_eq!(s.irreducible(), vec![vec![ru(0, 1), ru(1, 2)]]);
        let s = solve_vanishing_sum(&Relation::from_ints(&[1, 1, 1]).unwrap()).unwrap();
        let got: BTreeSet<_> = s.irreducible().into_iter().collect();
        let want: BTreeSet<_> = [vec![ru(0, 1), ru(1, 3), ru(2, 3)], vec![ru(0, 1), ru(2, 3), ru(1, 3)]].into();
        assert_eq!(got, want);
        assert!(solve_vanishing_sum(&Relation::from_ints(&[2, 1]).unwrap()).unwrap().families.is_empty());
        assert!(brute_force_vanishing(&Relation::from_ints(&[2, 1]).unwrap(), 12).unwrap().is_empty());
        let b = brute_force_vanishing(&Relation::from_ints(&[1, 1]).unwrap(), 4).unwrap();
        assert_eq!(b, [vec![ru(0, 1), ru(1, 2)]].into());
        assert_eq!(brute_force_vanishing(&Relation::from_ints(&[1, 1, 1]).unwrap(), 6).unwrap().len(), 2);
        assert!(matches!(
            solve_vanishing_sum(&Relation::from_ints(&[1; 7]).unwrap()),
            Err(Error::RelationTooLong { .. })
        ));
    }

    #[test]
    fn five_term_relation_needs_fifth_roots() {
        let s = solve_vanishing_sum(&Relation::from_ints(&[1; 5]).unwrap()).unwrap();
        let irr = s.irreducible();
        assert_eq!(irr.len(), 24);
        assert!(irr.iter().all(|t| t.iter().skip(1).all(|r| r.order() == 5)));
    }

    #[test]
    fn reducible_families_split_exactly() {
        let r = Relation::from_ints(&[1, -1, 1, -1]).unwrap();
        let s = solve_vanishing_sum(&r).unwrap();
        for f in &s.families {
            for inst in f.instances(12) {
                assert!(relation_vanishes(r.coefficients(), &inst).unwrap());
                for block in &f.partition {
                    let c: Vec<Rational> = block.iter().map(|&i| r.coefficients()[i].clone()).collect();
                    let z: Vec<RootOfUnity> = block.iter().map(|&i| inst[i].clone()).collect();
                    assert!(relation_vanishes(&c, &z).unwrap());
                }
            }
        }
    }

    #[test]
    fn c4_zeros_are_sixth_roots_with_unit_product() {
        let sols = analyze_c4_factors().unwrap();
        assert_eq!(sols.len(), 8);
        assert!(sols.iter().all(|s| s.is_sixth_root_pair() && s.product_is_one()));
    }

    #[test]
    fn l_factor_zeros_force_two_trivial_variables() {
        let rep = analyze_l_factors().unwrap();
        assert_eq!(rep.irreducible_count, 0);
        assert!(!rep.families.is_empty());
        assert!(rep.forces_two_trivial());
        for (s, [a, b, c]) in enumerate_l_factor_zeros(12).unwrap() {
            let trivial = [&a, &b, &c].iter().filter(|r| r.pow(2).is_one()).count();
            assert!(trivial >= 2, "{s:?}: {a} {b} {c}");
        }
    }

    #[test]
    fn l_factor_example_values() {
        // h13 = 1, h23 = −1 in abc − a − b + c: −2a − 2 = 0 forces a = −1.
        let zeros = enumerate_l_factor_zeros(4).unwrap();
        let hits: Vec<_> = zeros
            .iter()
            .filter(|(s, v)| *s == [-1, -1, 1] && v[1] == ru(0, 1) && v[2] == ru(1, 2))
            .collect();
        assert_eq!(hits.len(), 1);
        assert_eq!(hits[0].1[0], ru(1, 2));
    }

    #[test]
    fn solver_agrees_with_brute_force_up_to_four_terms() {
        let choices = [-2i64, -1, 1, 2];
        for k in 2..=4u32 {
            for code in 0..4usize.pow(k) {
                let coeffs: Vec<i64> = (0..k).map(|i| choices[code / 4usize.pow(i) % 4]).collect();
                let r = Relation::from_ints(&coeffs).unwrap();
                let solved = solve_vanishing_sum(&r).unwrap().tuples_of_order(12);
                let brute = brute_force_vanishing(&r, 12).unwrap();
                assert_eq!(solved, brute, "{coeffs:?}");
                for t in &solved {
                    let z: num_complex::Complex64 =
                        r.coefficients().iter().zip(t).map(|(a, x)| x.to_complex() * to_f64(a)).sum();
                    assert!(z.norm() < 1e-12);
                }
            }
        }
    }
}
