//! The subspace-quadruple cells and the explicit bijection behind the
//! convolution identity.
//!
//! Fix `V = F_p^(m+e)` and its canonical `m`-dimensional subspace
//! `W = U_{V,m}`.  The left side of the identity counts pairs `(A, B)` with
//! `A <= W` of dimension `t` and `B <= V` of dimension `s`.  The right side
//! counts quadruples `(A, B, C, D)` stratified into cells `S_(j,k)` by two
//! extra indices; each cell's size is a closed-form product of a power of
//! `p` and Gaussian binomials.  The bijection sends
//!
//! ```text
//!   (A, B)  |->  (A, B, C, D),   C = A + (B ∩ A^perp(W)),
//!                                D = A ∩ U_(C, s-e),
//! ```
//!
//! and its inverse is the plain projection back to `(A, B)`.  The cell of
//! the image is read off as `j = e + dim D`, `k = s + t - dim C`.
//!
//! [`verify_bijection`] checks all of this exhaustively for one parameter
//! tuple: cell sizes against the closed form, the forward map's validity,
//! round-tripping, and exact agreement of forward images with the
//! independently enumerated cells.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::counting::{binom_at, p_pow};
use super::{Budget, FixedCache, PrimeField, Subspace};
use crate::error::{Error, Result};
use crate::report::VerificationReport;

/// One quadruple `(A, B, C, D)` of subspaces.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Quadruple {
    /// The `t`-dimensional space `A <= C`.
    pub a: Subspace,
    /// The `s`-dimensional space `B <= V`.
    pub b: Subspace,
    /// The `(s+t-k)`-dimensional space `C` with `A <= C <= W`.
    pub c: Subspace,
    /// The `(j-e)`-dimensional space `D <= U_(C, s-e)`.
    pub d: Subspace,
}

/// Ambient data for one parameter tuple `(m, s, t, e)` over `F_p`: the space
/// `V = F_p^(m+e)`, the fixed subspace `W = U_(V,m)`, and caches for the
/// canonical constructions.
pub struct BijectionContext {
    field: PrimeField,
    budget: Budget,
    m: i64,
    s: i64,
    t: i64,
    e: i64,
    v: Subspace,
    w: Subspace,
    cache: FixedCache,
}

impl BijectionContext {
    /// Sets up the ambient spaces.  Requires `m, s, t, e >= 0` (the cell
    /// machinery is meaningful for any such tuple; the bijection itself
    /// additionally wants `e <= s`, which [`verify_bijection`] enforces).
    pub fn new(field: PrimeField, m: i64, s: i64, t: i64, e: i64, budget: Budget) -> Result<Self> {
        if m < 0 || s < 0 || t < 0 || e < 0 {
            return Err(Error::Precondition(format!(
                "quadruple parameters must be non-negative, got m={m} s={s} t={t} e={e}"
            )));
        }
        let v = Subspace::full(field, (m + e) as usize);
        let w = v.fixed_subspace(m as usize, &budget)?;
        Ok(BijectionContext {
            field,
            budget,
            m,
            s,
            t,
            e,
            v,
            w,
            cache: FixedCache::new(),
        })
    }

    /// The ambient space `V = F_p^(m+e)`.
    pub fn ambient(&self) -> &Subspace {
        &self.v
    }

    /// The fixed `m`-dimensional subspace `W = U_(V,m)`.
    pub fn fixed_w(&self) -> &Subspace {
        &self.w
    }

    /// The forward map `(A, B) |-> (A, B, C, D)`.
    pub fn forward(&mut self, a: &Subspace, b: &Subspace) -> Result<Quadruple> {
        if !(self.w.contains(a)? && a.dim() as i64 == self.t) {
            return Err(Error::Precondition(
                "forward: A must be a t-dim subspace of W".into(),
            ));
        }
        if !(self.v.contains(b)? && b.dim() as i64 == self.s) {
            return Err(Error::Precondition(
                "forward: B must be an s-dim subspace of V".into(),
            ));
        }
        if self.e > self.s {
            return Err(Error::Precondition("forward: requires e <= s".into()));
        }
        let aperp = self.cache.complement(a, &self.w.clone(), &self.budget)?;
        let c = a.sum(&b.intersect(&aperp)?)?;
        // dim C = t + dim(B ∩ A^perp(W)) >= t + (s + (m-t) - (m+e)) = s - e,
        // so the fixed (s-e)-subspace of C below is well defined.
        let ucse = self
            .cache
            .fixed_subspace(&c, (self.s - self.e) as usize, &self.budget)?;
        let d = a.intersect(&ucse)?;
        Ok(Quadruple {
            a: a.clone(),
            b: b.clone(),
            c,
            d,
        })
    }

    /// The backward map — the projection `(A, B, C, D) |-> (A, B)`.
    pub fn backward(&self, q: &Quadruple) -> (Subspace, Subspace) {
        (q.a.clone(), q.b.clone())
    }

    /// The cell indices `(j, k)` a quadruple lies in:
    /// `j = e + dim D`, `k = s + t - dim C`.
    pub fn induced_cell(&self, q: &Quadruple) -> (i64, i64) {
        (
            self.e + q.d.dim() as i64,
            self.s + self.t - q.c.dim() as i64,
        )
    }

    /// Whether `q` satisfies every defining condition of the cell `S_(j,k)`.
    pub fn validate(&mut self, q: &Quadruple, j: i64, k: i64) -> Result<bool> {
        let (dim_c, dim_d) = (self.s + self.t - k, j - self.e);
        if dim_c < 0 || dim_d < 0 || self.s - self.e < 0 {
            return Ok(false);
        }
        let dims = q.a.dim() as i64 == self.t
            && q.b.dim() as i64 == self.s
            && q.c.dim() as i64 == dim_c
            && q.d.dim() as i64 == dim_d;
        if !dims {
            return Ok(false);
        }
        if !(q.c.contains(&q.a)? && self.w.contains(&q.c)? && self.v.contains(&q.b)?) {
            return Ok(false);
        }
        if (self.s - self.e) as usize > q.c.dim() {
            return Ok(false);
        }
        let ucse = self
            .cache
            .fixed_subspace(&q.c, (self.s - self.e) as usize, &self.budget)?;
        if !(ucse.contains(&q.d)? && q.a.intersect(&ucse)? == q.d) {
            return Ok(false);
        }
        let aperp = self.cache.complement(&q.a, &self.w.clone(), &self.budget)?;
        Ok(q.b.intersect(&aperp)? == aperp.intersect(&q.c)?)
    }

    /// Exhaustively enumerates the cell `S_(j,k)`; structurally impossible
    /// cells come back empty.
    pub fn enumerate_cell(&mut self, j: i64, k: i64) -> Result<Vec<Quadruple>> {
        let (dim_c, dim_d) = (self.s + self.t - k, j - self.e);
        let se = self.s - self.e;
        let possible = (0..=self.m).contains(&dim_c)
            && (0..=dim_c).contains(&se)
            && (0..=se).contains(&dim_d)
            && (0..=dim_c).contains(&self.t)
            && (0..=self.m + self.e).contains(&self.s);
        if !possible {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let b_list = self
            .cache
            .subspaces(&self.v.clone(), self.s as usize, &self.budget)?;
        for c in self
            .cache
            .subspaces(&self.w.clone(), dim_c as usize, &self.budget)?
        {
            let ucse = self.cache.fixed_subspace(&c, se as usize, &self.budget)?;
            for a in self.cache.subspaces(&c, self.t as usize, &self.budget)? {
                // D is forced: the cell requires A ∩ U_(C, s-e) = D, so only
                // the actual intersection (of the right dimension) qualifies.
                let d = a.intersect(&ucse)?;
                if d.dim() as i64 != dim_d {
                    continue;
                }
                let aperp = self.cache.complement(&a, &self.w.clone(), &self.budget)?;
                let x = aperp.intersect(&c)?;
                for b in &b_list {
                    if b.intersect(&aperp)? == x {
                        out.push(Quadruple {
                            a: a.clone(),
                            b: b.clone(),
                            c: c.clone(),
                            d: d.clone(),
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    /// The closed-form size of the cell `S_(j,k)` evaluated at `q = p`:
    ///
    /// ```text
    ///   [m // s+t-k] [s-e // s-j] q^((s-j)(t+e-j)) [t+e-k // j-k]
    ///                             q^(k(m-s-t+k))   [t+e // k]
    /// ```
    pub fn cell_formula(&self, j: i64, k: i64) -> BigInt {
        let (m, s, t, e) = (self.m, self.s, self.t, self.e);
        let p = self.field.p();
        let binoms = binom_at(m, s + t - k, p)
            * binom_at(s - e, s - j, p)
            * binom_at(t + e - k, j - k, p)
            * binom_at(t + e, k, p);
        if binoms == BigInt::from(0) {
            return binoms;
        }
        // Whenever all four binomials are nonzero both exponents are
        // non-negative (e <= j <= s and k <= j <= t+e force the first;
        // s+t-k <= m forces the second).
        binoms * p_pow(p, (s - j) * (t + e - j)) * p_pow(p, k * (m - s - t + k))
    }
}

/// Enumerates one quadruple cell `S_(j,k)` for the parameters
/// `(m, s, t, e)` over `F_p`, returning the quadruples together with the
/// closed-form cell size (the callers — and the tests — assert the two
/// agree).
// The argument list is the cell's full coordinate tuple; bundling it into a
// struct would just rename the same seven numbers.
#[allow(clippy::too_many_arguments)]
pub fn enumerate_quadruples(
    field: PrimeField,
    m: i64,
    s: i64,
    t: i64,
    e: i64,
    j: i64,
    k: i64,
    budget: &Budget,
) -> Result<(Vec<Quadruple>, BigInt)> {
    if j < 0 || k < 0 {
        return Err(Error::Precondition(format!(
            "cell indices must be non-negative, got j={j} k={k}"
        )));
    }
    let mut ctx = BijectionContext::new(field, m, s, t, e, *budget)?;
    let cell = ctx.enumerate_cell(j, k)?;
    let formula = ctx.cell_formula(j, k);
    Ok((cell, formula))
}

/// Exhaustively verifies the bijection for one tuple `(m, s, t, e)` with
/// `m, s, t >= 0` and `0 <= e <= s` over `F_p`:
///
/// * every pair `(A, B)` maps forward to a quadruple satisfying its cell's
///   defining conditions and projects straight back,
/// * every cell, enumerated independently, has exactly the closed-form
///   size, and
/// * the forward images, bucketed by cell, coincide with the enumerated
///   cells as sets — so the map is a bijection onto the disjoint union.
///
/// The report's `lhs` carries the measured cell sizes and check outcomes,
/// `rhs` the closed-form sizes with every check expected to pass.
pub fn verify_bijection(
    field: PrimeField,
    m: i64,
    s: i64,
    t: i64,
    e: i64,
    budget: &Budget,
) -> Result<VerificationReport> {
    if m < 0 || s < 0 || t < 0 || !(0..=s).contains(&e) {
        return Err(Error::Precondition(format!(
            "verify_bijection: need m,s,t >= 0 and 0 <= e <= s, got m={m} s={s} t={t} e={e}"
        )));
    }
    let p = field.p();
    let mut ctx = BijectionContext::new(field, m, s, t, e, *budget)?;
    let a_list = ctx
        .cache
        .subspaces(&ctx.w.clone(), t as usize, &ctx.budget)?;
    let b_list = ctx
        .cache
        .subspaces(&ctx.v.clone(), s as usize, &ctx.budget)?;

    // Forward pass over all of T = {(A, B)}.
    let measured_pairs = BigInt::from(a_list.len() as u64) * BigInt::from(b_list.len() as u64);
    let expected_pairs = binom_at(m, t, p) * binom_at(m + e, s, p);
    let mut buckets: BTreeMap<(i64, i64), Vec<Quadruple>> = BTreeMap::new();
    let mut invalid_images = 0usize;
    let mut roundtrip_failures = 0usize;
    for a in &a_list {
        for b in &b_list {
            let q = ctx.forward(a, b)?;
            let (j, k) = ctx.induced_cell(&q);
            if !ctx.validate(&q, j, k)? {
                invalid_images += 1;
            }
            if ctx.backward(&q) != (a.clone(), b.clone()) {
                roundtrip_failures += 1;
            }
            buckets.entry((j, k)).or_default().push(q);
        }
    }

    // Probe grid: the theoretical support is e <= j <= s, 0 <= k <= t+e;
    // pad by one and widen to any observed bucket so strays are caught.
    let j_hi = (s + 1).max(buckets.keys().map(|&(j, _)| j).max().unwrap_or(0));
    let k_hi = (t + e + 1).max(buckets.keys().map(|&(_, k)| k).max().unwrap_or(0));
    let mut measured_cells: Vec<String> = Vec::new();
    let mut formula_cells: Vec<String> = Vec::new();
    let mut images_match = true;
    let mut measured_total = BigInt::from(0);
    let mut formula_total = BigInt::from(0);
    for j in 0..=j_hi {
        for k in 0..=k_hi {
            let mut cell = ctx.enumerate_cell(j, k)?;
            let formula = ctx.cell_formula(j, k);
            let mut bucket = buckets.remove(&(j, k)).unwrap_or_default();
            cell.sort_unstable();
            bucket.sort_unstable();
            if cell != bucket {
                images_match = false;
            }
            measured_total += BigInt::from(cell.len() as u64);
            formula_total += formula.clone();
            if !cell.is_empty() || formula != BigInt::from(0) || !bucket.is_empty() {
                measured_cells.push(format!("{j},{k}:{}", cell.len()));
                formula_cells.push(format!("{j},{k}:{formula}"));
            }
        }
    }
    debug_assert!(
        buckets.is_empty(),
        "probe grid covers all buckets by construction"
    );

    let status = |flag: bool| if flag { "ok" } else { "FAIL" };
    let lhs = format!(
        "pairs={measured_pairs}; cells=[{}]; cell_total={measured_total}; valid={}; roundtrip={}; images_match_cells={}",
        measured_cells.join(","),
        status(invalid_images == 0),
        status(roundtrip_failures == 0),
        status(images_match),
    );
    let rhs = format!(
        "pairs={expected_pairs}; cells=[{}]; cell_total={expected_pairs}; valid=ok; roundtrip=ok; images_match_cells=ok",
        formula_cells.join(","),
    );
    Ok(VerificationReport::new(
        "bijection",
        crate::report::params(&[("m", m), ("s", s), ("t", t), ("e", e), ("p", p as i64)]),
        lhs,
        rhs,
    )
    .with_note(format!("probe grid j in [0,{j_hi}], k in [0,{k_hi}]"))
    .with_note(format!("formula cell total {formula_total}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    // ==== frozen instances ====

    /// The degenerate tuple m = s = t = 1, e = 0: a single pair, a single
    /// quadruple, all in cell (1, 1).
    #[test]
    fn singleton_tuple() {
        let budget = Budget::default();
        let (cell, formula) = enumerate_quadruples(field(2), 1, 1, 1, 0, 1, 1, &budget).unwrap();
        assert_eq!(cell.len(), 1);
        assert_eq!(formula, BigInt::from(1));
        let q = &cell[0];
        assert_eq!(q.a, q.b);
        assert_eq!(q.a, q.c);
        assert_eq!(q.a, q.d);
        let report = verify_bijection(field(2), 1, 1, 1, 0, &budget).unwrap();
        assert!(report.equal, "{report:?}");
        assert!(report.lhs.contains("pairs=1"));
    }

    /// An out-of-range cell is empty and its formula vanishes.
    #[test]
    fn out_of_range_cell_is_empty() {
        let budget = Budget::default();
        // j = 2 > s = 1 forces dim D = 2 > s - e = 1.
        let (cell, formula) = enumerate_quadruples(field(2), 2, 1, 1, 0, 2, 0, &budget).unwrap();
        assert!(cell.is_empty());
        assert_eq!(formula, BigInt::from(0));
        // k = 2 > t + e = 1 kills [t+e // k].
        let (cell, formula) = enumerate_quadruples(field(2), 2, 1, 1, 0, 1, 2, &budget).unwrap();
        assert!(cell.is_empty());
        assert_eq!(formula, BigInt::from(0));
    }

    /// Every enumerated quadruple validates, and the count matches the
    /// closed form cell by cell, on a tuple with all indices active.
    #[test]
    fn cells_match_closed_form_f2_m2() {
        let budget = Budget::default();
        let mut ctx = BijectionContext::new(field(2), 2, 1, 1, 0, budget).unwrap();
        let mut total = BigInt::from(0);
        for j in 0..=2 {
            for k in 0..=2 {
                let cell = ctx.enumerate_cell(j, k).unwrap();
                let formula = ctx.cell_formula(j, k);
                assert_eq!(BigInt::from(cell.len() as u64), formula, "j={j} k={k}");
                for q in &cell {
                    assert!(ctx.validate(q, j, k).unwrap());
                }
                total += formula;
            }
        }
        // Sum over cells equals [2//1][2//1] at q = 2.
        assert_eq!(total, BigInt::from(9));
    }

    #[test]
    fn bijection_report_f2_small() {
        let budget = Budget::default();
        let report = verify_bijection(field(2), 2, 1, 1, 0, &budget).unwrap();
        assert!(report.equal, "{report:?}");
        assert!(report.lhs.contains("pairs=9"), "{}", report.lhs);
        assert!(report
            .lhs
            .ends_with("valid=ok; roundtrip=ok; images_match_cells=ok"));
    }

    /// A tuple with e > 0 so the D-component is active.
    #[test]
    fn bijection_with_positive_shift() {
        let budget = Budget::default();
        for (m, s, t, e) in [(2, 1, 1, 1), (2, 2, 1, 1), (1, 2, 1, 2)] {
            let report = verify_bijection(field(2), m, s, t, e, &budget).unwrap();
            assert!(report.equal, "{report:?}");
        }
    }

    #[test]
    fn bijection_over_f3() {
        let budget = Budget::default();
        let report = verify_bijection(field(3), 2, 1, 1, 0, &budget).unwrap();
        assert!(report.equal, "{report:?}");
        assert!(report.lhs.contains("pairs=16"), "{}", report.lhs); // [2//1]_3 squared
    }

    #[test]
    fn preconditions_are_enforced() {
        let budget = Budget::default();
        assert!(verify_bijection(field(2), 2, 1, 1, 2, &budget).is_err()); // e > s
        assert!(BijectionContext::new(field(2), -1, 1, 1, 0, budget).is_err());
        assert!(enumerate_quadruples(field(2), 1, 1, 1, 0, -1, 0, &budget).is_err());
    }

    /// Forward rejects malformed inputs.
    #[test]
    fn forward_rejects_wrong_dimensions() {
        let budget = Budget::default();
        let mut ctx = BijectionContext::new(field(2), 2, 1, 1, 0, budget).unwrap();
        let w = ctx.fixed_w().clone();
        let v = ctx.ambient().clone();
        assert!(ctx.forward(&w, &v).is_err()); // dim A = 2 != t, dim B = 3 != s
    }
}
