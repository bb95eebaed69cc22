//! Finite-geometry engine over prime fields.
//!
//! Everything the subspace-counting side of the theory needs lives under this
//! module:
//!
//! * [`PrimeField`] — arithmetic mod a prime `p`,
//! * [`Subspace`] — a subspace of `F_p^n` held as a reduced row-echelon
//!   matrix, so equal spaces have equal representations,
//! * enumeration of all `k`-dimensional subspaces (of the ambient space or of
//!   any subspace) by echelon pivot patterns,
//! * lattice operations: sum, intersection, containment,
//! * the *fixed subspace* `U_{X,d}` (greedy lexicographically smallest
//!   independent vectors) and the *fixed complement* `X^perp(Y)`
//!   (lexicographically smallest complement as a sorted vector set) — the two
//!   canonical choices the bijective proof relies on,
//! * [`counting`] — exhaustive verifiers for the counting lemmas,
//! * [`bijection`] — the quadruple counter and the explicit bijection.
//!
//! The vector order used throughout is coordinate-wise lexicographic with
//! the *first* coordinate most significant and residues ordered
//! `0 < 1 < ... < p-1`.  Any fixed total order makes the constructions
//! canonical; this one is pinned so results are reproducible.

pub mod bijection;
pub mod counting;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// A prime field `F_p`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Constructs `F_p`, verifying primality by trial division.
    pub fn new(p: u64) -> Result<Self> {
        if p < 2
            || (2..p)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    /// The modulus.
    pub fn p(&self) -> u64 {
        self.p
    }

    fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    fn neg(&self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }

    /// Multiplicative inverse of `a != 0`, by Fermat's little theorem
    /// (exponent p-2; p is small so repeated squaring is instant).
    fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p), "inverse of zero");
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

/// A vector in `F_p^n`: a coordinate sequence with entries in `[0, p)`.
///
/// The derived `Ord` on `Vec<u64>` is exactly the vector order fixed for the
/// canonical constructions (first coordinate most significant).
pub type Vector = Vec<u64>;

/// Enumeration ceiling: operations that would visit more than `max_points`
/// field elements / candidates refuse with [`Error::BudgetExceeded`].
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Maximum number of points an enumeration may visit (default `2^20`).
    pub max_points: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_points: 1 << 20,
        }
    }
}

impl Budget {
    /// A budget admitting `max_points` points.
    pub fn new(max_points: u128) -> Self {
        Budget { max_points }
    }

    fn check(&self, needed: u128) -> Result<()> {
        if needed > self.max_points {
            Err(Error::BudgetExceeded {
                needed,
                budget: self.max_points,
            })
        } else {
            Ok(())
        }
    }
}

/// `p^e` as u128 (enumeration sizes; caller guards against overflow via the
/// budget check right after).
fn pow_u128(p: u64, e: u32) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(p as u128))
}

/// A subspace of `F_p^n` in reduced row-echelon form.
///
/// The representation is canonical: two values compare equal exactly when
/// they are the same subspace of the same ambient space.  The derived `Ord`
/// gives a deterministic total order used for cache keys and reporting.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subspace {
    field: PrimeField,
    ambient: usize,
    rows: Vec<Vector>,
}

impl Subspace {
    /// The zero subspace of `F_p^ambient`.
    pub fn zero(field: PrimeField, ambient: usize) -> Self {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
        }
    }

    /// The full space `F_p^ambient`.
    pub fn full(field: PrimeField, ambient: usize) -> Self {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![0u64; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace {
            field,
            ambient,
            rows,
        }
    }

    /// The span of the given vectors (entries are reduced mod p; vectors must
    /// all have `ambient` coordinates).
    pub fn from_spanning(field: PrimeField, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        for v in vectors {
            if v.len() != ambient {
                return Err(Error::Precondition(format!(
                    "spanning vector has {} coordinates, ambient is {ambient}",
                    v.len()
                )));
            }
        }
        let reduced: Vec<Vector> = vectors
            .iter()
            .map(|v| v.iter().map(|c| c % field.p).collect())
            .collect();
        Ok(Subspace {
            field,
            ambient,
            rows: rref(field, reduced),
        })
    }

    /// The field this subspace lives over.
    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Dimension of the ambient space.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The canonical (reduced row-echelon) basis.
    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    fn same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.field == other.field && self.ambient == other.ambient {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Reduces `v` by the echelon basis, returning the residue (zero iff `v`
    /// lies in the subspace).
    fn reduce_vector(&self, v: &Vector) -> Vector {
        let f = self.field;
        let mut v: Vector = v.iter().map(|c| c % f.p).collect();
        for row in &self.rows {
            let pivot = row.iter().position(|&c| c != 0).expect("no zero rows");
            if v[pivot] != 0 {
                let factor = v[pivot]; // row has pivot entry 1 in RREF
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = f.add(*vi, f.mul(f.neg(factor), *ri));
                }
            }
        }
        v
    }

    /// Membership test for a single vector.
    pub fn contains_vector(&self, v: &Vector) -> bool {
        self.reduce_vector(v).iter().all(|&c| c == 0)
    }

    /// Whether `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.same_ambient(other)?;
        Ok(other.rows.iter().all(|r| self.contains_vector(r)))
    }

    /// The sum (join) `self + other`.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Subspace {
            field: self.field,
            ambient: self.ambient,
            rows: rref(self.field, rows),
        })
    }

    /// The annihilator (orthogonal complement under the standard dot
    /// product): all `x` with `r . x = 0` for every basis row `r`.  Double
    /// annihilation is the identity, and `ann(U ∩ W) = ann U + ann W`, which
    /// is how [`Subspace::intersect`] is computed.
    pub fn annihilator(&self) -> Subspace {
        let f = self.field;
        let n = self.ambient;
        let pivots: Vec<usize> = self
            .rows
            .iter()
            .map(|r| r.iter().position(|&c| c != 0).expect("no zero rows"))
            .collect();
        let mut basis = Vec::new();
        for free in (0..n).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u64; n];
            v[free] = 1;
            for (row, &pc) in self.rows.iter().zip(&pivots) {
                v[pc] = f.neg(row[free]);
            }
            basis.push(v);
        }
        Subspace {
            field: f,
            ambient: n,
            rows: rref(f, basis),
        }
    }

    /// The intersection (meet) `self ∩ other`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.same_ambient(other)?;
        let joined = self.annihilator().sum(&other.annihilator())?;
        Ok(joined.annihilator())
    }

    /// Every vector of the subspace (all `p^dim` of them), sorted ascending
    /// in the canonical vector order.  The zero vector is always first.
    pub fn sorted_vectors(&self) -> Vec<Vector> {
        let f = self.field;
        let k = self.dim();
        let mut out = Vec::with_capacity(pow_u128(f.p, k as u32) as usize);
        let mut coeffs = vec![0u64; k];
        loop {
            let mut v = vec![0u64; self.ambient];
            for (c, row) in coeffs.iter().zip(&self.rows) {
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = f.add(*vi, f.mul(*c, *ri));
                }
            }
            out.push(v);
            if !increment(&mut coeffs, f.p) {
                break;
            }
        }
        out.sort_unstable();
        out
    }

    /// All `k`-dimensional subspaces of this subspace, canonically embedded
    /// in the ambient space.  Budgeted by `p^dim`.
    pub fn subspaces(&self, k: usize, budget: &Budget) -> Result<Vec<Subspace>> {
        let inner = enumerate_subspaces(self.field, self.dim(), k, budget)?;
        inner
            .into_iter()
            .map(|s| {
                // Lift coordinate rows through this subspace's basis.
                let lifted: Vec<Vector> = s
                    .rows
                    .iter()
                    .map(|coeffs| {
                        let f = self.field;
                        let mut v = vec![0u64; self.ambient];
                        for (c, row) in coeffs.iter().zip(&self.rows) {
                            for (vi, ri) in v.iter_mut().zip(row) {
                                *vi = f.add(*vi, f.mul(*c, *ri));
                            }
                        }
                        v
                    })
                    .collect();
                Subspace::from_spanning(self.field, self.ambient, &lifted)
            })
            .collect()
    }

    /// The fixed `d`-dimensional subspace `U_{X,d}`: scan this subspace's
    /// vectors in increasing order and keep each vector that is independent
    /// of those already kept, until `d` are kept.  The kept label set is
    /// lexicographically smallest among all independent `d`-subsets (greedy
    /// exchange argument; brute-force-verified in the tests).
    ///
    /// The zero vector participates in the scan (it is the minimum) but is
    /// never kept, since it never enlarges the span.
    pub fn fixed_subspace(&self, d: usize, budget: &Budget) -> Result<Subspace> {
        Ok(self.fixed_subspace_witness(d, budget)?.1)
    }

    /// [`Subspace::fixed_subspace`] together with the chosen vectors, in scan
    /// order (exposed so tests can compare the witness against brute force).
    pub fn fixed_subspace_witness(
        &self,
        d: usize,
        budget: &Budget,
    ) -> Result<(Vec<Vector>, Subspace)> {
        if d > self.dim() {
            return Err(Error::Precondition(format!(
                "fixed_subspace: d = {d} exceeds dim = {}",
                self.dim()
            )));
        }
        budget.check(pow_u128(self.field.p, self.dim() as u32))?;
        let mut chosen = Vec::with_capacity(d);
        let mut span = Subspace::zero(self.field, self.ambient);
        for v in self.sorted_vectors() {
            if chosen.len() == d {
                break;
            }
            if !span.contains_vector(&v) {
                span = span.sum(&Subspace::from_spanning(
                    self.field,
                    self.ambient,
                    core::slice::from_ref(&v),
                )?)?;
                chosen.push(v);
            }
        }
        debug_assert_eq!(chosen.len(), d);
        Ok((chosen, span))
    }

    /// The fixed complement `X^perp(Y)` of `self = X` inside `y = Y`: among
    /// all `p^(k·r)` complements of `X` in `Y` (`k = dim X`, `r = dim Y - k`),
    /// the one whose full sorted vector list is lexicographically smallest.
    ///
    /// Complements are enumerated through their unique bases `w_i + u_i`
    /// with `u_i` ranging over `X` and `w_1..w_r` a seed complement basis —
    /// the same parameterization that proves there are exactly `p^(k·r)` of
    /// them.
    pub fn fixed_complement_in(&self, y: &Subspace, budget: &Budget) -> Result<Subspace> {
        self.same_ambient(y)?;
        if !y.contains(self)? {
            return Err(Error::Precondition(
                "fixed_complement: X must lie inside Y".into(),
            ));
        }
        let f = self.field;
        let k = self.dim();
        let r = y.dim() - k;
        if r == 0 {
            return Ok(Subspace::zero(f, self.ambient));
        }
        if k == 0 {
            return Ok(y.clone());
        }
        budget.check(pow_u128(f.p, (k * r) as u32).saturating_mul(pow_u128(f.p, r as u32)))?;
        // Seed complement: extend X's basis greedily by Y's basis rows.
        let mut seed = Vec::with_capacity(r);
        let mut span = self.clone();
        for row in &y.rows {
            if !span.contains_vector(row) {
                span = span.sum(&Subspace::from_spanning(
                    f,
                    self.ambient,
                    core::slice::from_ref(row),
                )?)?;
                seed.push(row.clone());
            }
        }
        debug_assert_eq!(seed.len(), r);
        // Odometer over all r×k coefficient matrices phi; basis w_i + phi_i(x).
        let mut phi = vec![0u64; r * k];
        let mut best: Option<(Vec<Vector>, Subspace)> = None;
        loop {
            let rows: Vec<Vector> = (0..r)
                .map(|i| {
                    let mut v = seed[i].clone();
                    for (j, xrow) in self.rows.iter().enumerate() {
                        let c = phi[i * k + j];
                        for (vi, xi) in v.iter_mut().zip(xrow) {
                            *vi = f.add(*vi, f.mul(c, *xi));
                        }
                    }
                    v
                })
                .collect();
            let candidate = Subspace::from_spanning(f, self.ambient, &rows)?;
            debug_assert_eq!(candidate.dim(), r);
            let key = candidate.sorted_vectors();
            if best.as_ref().is_none_or(|(bk, _)| key < *bk) {
                best = Some((key, candidate));
            }
            if !increment(&mut phi, f.p) {
                break;
            }
        }
        Ok(best.expect("at least one complement").1)
    }

    /// Renders the subspace as its list of basis rows, e.g.
    /// `span{(1,0,1),(0,1,0)}` (the zero subspace prints `span{}`).
    pub fn render(&self) -> String {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let coords: Vec<String> = r.iter().map(|c| format!("{c}")).collect();
                format!("({})", coords.join(","))
            })
            .collect();
        format!("span{{{}}}", rows.join(","))
    }
}

impl core::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Advances a base-`p` odometer; returns false when it wraps to all zeros.
fn increment(digits: &mut [u64], p: u64) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < p {
            return true;
        }
        *d = 0;
    }
    false
}

/// Reduced row-echelon form; drops zero rows.
fn rref(f: PrimeField, mut rows: Vec<Vector>) -> Vec<Vector> {
    let n = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = f.inv(rows[rank][col]);
        for c in rows[rank].iter_mut() {
            *c = f.mul(*c, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let factor = f.neg(row[col]);
                for (dst, &src) in row.iter_mut().zip(&pivot_row) {
                    *dst = f.add(*dst, f.mul(factor, src));
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// Every `k`-dimensional subspace of `F_p^n`, each exactly once, by iterating
/// pivot-column patterns of reduced echelon forms and filling the free
/// entries.  The output order is deterministic (pivot patterns in
/// lexicographic order, free entries in odometer order).
pub fn enumerate_subspaces(
    field: PrimeField,
    n: usize,
    k: usize,
    budget: &Budget,
) -> Result<Vec<Subspace>> {
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    budget.check(pow_u128(field.p, n as u32))?;
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        // Free slots: entries right of the pivot in non-pivot columns.
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|row| {
                let pivots = &pivots;
                (pivots[row] + 1..n)
                    .filter(move |col| !pivots.contains(col))
                    .map(move |col| (row, col))
            })
            .collect();
        let mut values = vec![0u64; free.len()];
        loop {
            let mut rows = vec![vec![0u64; n]; k];
            for (row, &pc) in pivots.iter().enumerate() {
                rows[row][pc] = 1;
            }
            for (&(row, col), &val) in free.iter().zip(&values) {
                rows[row][col] = val;
            }
            debug_assert_eq!(rref(field, rows.clone()), rows);
            out.push(Subspace {
                field,
                ambient: n,
                rows,
            });
            if !increment(&mut values, field.p) {
                break;
            }
        }
    }
    Ok(out)
}

/// All k-element subsets of `0..n` in lexicographic order.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for i in start..n {
            current.push(i);
            go(i + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

/// A per-computation cache for the expensive canonical constructions
/// (subspace lists, fixed subspaces, fixed complements); keyed by canonical
/// subspace values, so hits are exact.
#[derive(Default)]
pub struct FixedCache {
    sub_lists: BTreeMap<(Subspace, usize), Vec<Subspace>>,
    fixed_subs: BTreeMap<(Subspace, usize), Subspace>,
    complements: BTreeMap<(Subspace, Subspace), Subspace>,
}

impl FixedCache {
    /// An empty cache.
    pub fn new() -> Self {
        FixedCache::default()
    }

    /// Cached `space.subspaces(k, budget)`.
    pub fn subspaces(
        &mut self,
        space: &Subspace,
        k: usize,
        budget: &Budget,
    ) -> Result<Vec<Subspace>> {
        if let Some(hit) = self.sub_lists.get(&(space.clone(), k)) {
            return Ok(hit.clone());
        }
        let value = space.subspaces(k, budget)?;
        self.sub_lists.insert((space.clone(), k), value.clone());
        Ok(value)
    }

    /// Cached `space.fixed_subspace(d, budget)`.
    pub fn fixed_subspace(
        &mut self,
        space: &Subspace,
        d: usize,
        budget: &Budget,
    ) -> Result<Subspace> {
        if let Some(hit) = self.fixed_subs.get(&(space.clone(), d)) {
            return Ok(hit.clone());
        }
        let value = space.fixed_subspace(d, budget)?;
        self.fixed_subs.insert((space.clone(), d), value.clone());
        Ok(value)
    }

    /// Cached `x.fixed_complement_in(y, budget)`.
    pub fn complement(&mut self, x: &Subspace, y: &Subspace, budget: &Budget) -> Result<Subspace> {
        if let Some(hit) = self.complements.get(&(x.clone(), y.clone())) {
            return Ok(hit.clone());
        }
        let value = x.fixed_complement_in(y, budget)?;
        self.complements
            .insert((x.clone(), y.clone()), value.clone());
        Ok(value)
    }
}
