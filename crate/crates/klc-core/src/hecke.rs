//! The Hecke algebra of the symmetric group over `Z[u, u^-1]`, its bar
//! involution, and the canonical basis.
//!
//! The standard basis `T_w` multiplies by `T_s T_w = T_{sw}` when
//! `ℓ(sw) > ℓ(w)` and `T_s T_w = T_{sw} + (u - u^-1) T_w` otherwise, so each
//! generator satisfies `(T_s - u)(T_s + u^-1) = 0`.  The bar involution sends
//! `u` to `u^-1` and `T_w` to `T_{w^-1}^{-1}`.  The canonical basis element
//! `C'_w = T_w + sum_{x<w} p(x,w) T_x` is the unique bar-invariant element
//! with all `p(x,w)` in `u^-1 Z[u^-1]`.

use crate::icengine::{self, IcError, IcOptions, SparseVec};
use crate::laurent::Laurent;
use crate::permgrp::{all_perms, Perm};
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

/// An element `sum_w f_w T_w` of the Hecke algebra of `S_n`.
#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElt {
    n: usize,
    terms: BTreeMap<Perm, Laurent>,
}

impl HeckeElt {
    pub fn zero(n: usize) -> Self {
        HeckeElt { n, terms: BTreeMap::new() }
    }

    /// The basis element `T_w`.
    pub fn t(w: &Perm) -> Self {
        HeckeElt {
            n: w.n(),
            terms: BTreeMap::from([(w.clone(), Laurent::one())]),
        }
    }

    pub fn one(n: usize) -> Self {
        HeckeElt::t(&Perm::identity(n))
    }

    /// `C_s = T_s + u^-1` for `s = s_i`.
    pub fn c_s(n: usize, i: u8) -> Self {
        let mut out = HeckeElt::t(&Perm::simple(n, i).unwrap());
        out.add_term(&Perm::identity(n), &Laurent::u_pow(-1));
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Perm) -> Laurent {
        self.terms.get(w).cloned().unwrap_or_else(Laurent::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Perm, &Laurent)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Perm> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, w: &Perm, f: &Laurent) {
        if f.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(w.clone())
            .or_insert_with(Laurent::zero);
        slot.add_assign(f);
        if slot.is_zero() {
            self.terms.remove(w);
        }
    }

    pub fn add_scaled(&mut self, other: &HeckeElt, f: &Laurent) {
        assert_eq!(self.n, other.n, "size mismatch in Hecke sum");
        for (w, g) in &other.terms {
            self.add_term(w, &(f * g));
        }
    }

    pub fn scale(&self, f: &Laurent) -> HeckeElt {
        let mut out = HeckeElt::zero(self.n);
        out.add_scaled(self, f);
        out
    }

    /// Left multiplication by the generator: `T_{s_i} · self`.
    pub fn t_mul_left(&self, i: u8) -> HeckeElt {
        let s = Perm::simple(self.n, i).unwrap();
        let shift = &Laurent::u_pow(1) - &Laurent::u_pow(-1);
        let mut out = HeckeElt::zero(self.n);
        for (w, f) in &self.terms {
            let sw = s.mul(w);
            out.add_term(&sw, f);
            if sw.length() < w.length() {
                out.add_term(w, &(f * &shift));
            }
        }
        out
    }

    /// Right multiplication by the generator: `self · T_{s_i}`.
    pub fn t_mul_right(&self, i: u8) -> HeckeElt {
        let s = Perm::simple(self.n, i).unwrap();
        let shift = &Laurent::u_pow(1) - &Laurent::u_pow(-1);
        let mut out = HeckeElt::zero(self.n);
        for (w, f) in &self.terms {
            let ws = w.mul(&s);
            out.add_term(&ws, f);
            if ws.length() < w.length() {
                out.add_term(w, &(f * &shift));
            }
        }
        out
    }

    /// Evaluate every coefficient at `u = 1`, landing in the group algebra.
    pub fn specialize_u1(&self) -> BTreeMap<Perm, BigInt> {
        self.terms
            .iter()
            .map(|(w, f)| (w.clone(), f.eval_at_one()))
            .filter(|(_, c)| *c != BigInt::from(0))
            .collect()
    }

    /// The product, expanding the left factor through reduced words.
    pub fn mul(&self, rhs: &HeckeElt) -> HeckeElt {
        assert_eq!(self.n, rhs.n, "size mismatch in Hecke product");
        let mut out = HeckeElt::zero(self.n);
        for (x, f) in &self.terms {
            let mut part = rhs.clone();
            for i in x.left_reduced_word().into_iter().rev() {
                part = part.t_mul_left(i);
            }
            out.add_scaled(&part, f);
        }
        out
    }
}

impl std::ops::Add for &HeckeElt {
    type Output = HeckeElt;
    fn add(self, rhs: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &Laurent::one());
        out
    }
}

impl std::ops::Sub for &HeckeElt {
    type Output = HeckeElt;
    fn sub(self, rhs: &HeckeElt) -> HeckeElt {
        let mut out = self.clone();
        out.add_scaled(rhs, &Laurent::constant(-1));
        out
    }
}

impl std::ops::Mul for &HeckeElt {
    type Output = HeckeElt;
    fn mul(self, rhs: &HeckeElt) -> HeckeElt {
        HeckeElt::mul(self, rhs)
    }
}

impl fmt::Display for HeckeElt {
    /// Renders like `T[2,1,3] + u^-1 T[1,2,3]`, higher terms first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Perm> = self.terms.keys().collect();
        keys.sort_by_key(|w| (w.length(), w.oneline().to_vec()));
        keys.reverse();
        for (pos, w) in keys.iter().enumerate() {
            if pos > 0 {
                write!(f, " + ")?;
            }
            let c = &self.terms[*w];
            let rendered = c.to_string();
            if !c.is_one() {
                if rendered.contains(' ') {
                    write!(f, "({rendered}) ")?;
                } else {
                    write!(f, "{rendered} ")?;
                }
            }
            let parts: Vec<String> = w.oneline().iter().map(|v| v.to_string()).collect();
            write!(f, "T[{}]", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for HeckeElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The Hecke algebra of `S_n`, carrying the memoized bar involution and the
/// lazily computed canonical basis.
pub struct HeckeAlg {
    n: usize,
    bar_cache: Mutex<BTreeMap<Perm, Arc<HeckeElt>>>,
    kl: Mutex<Option<Arc<KlBasis>>>,
}

impl HeckeAlg {
    pub fn new(n: usize) -> Self {
        HeckeAlg {
            n,
            bar_cache: Mutex::new(BTreeMap::new()),
            kl: Mutex::new(None),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `bar(T_w) = T_{w^-1}^{-1}`, built up one generator at a time using
    /// `T_s^{-1} = T_s + (u^-1 - u)`.
    pub fn bar_t(&self, w: &Perm) -> Arc<HeckeElt> {
        if let Some(hit) = self.bar_cache.lock().unwrap().get(w) {
            return hit.clone();
        }
        let result = match w.left_descents().iter().next().copied() {
            None => Arc::new(HeckeElt::one(self.n)),
            Some(i) => {
                let rest = self.bar_t(&Perm::simple(self.n, i).unwrap().mul(w));
                let mut out = rest.t_mul_left(i);
                out.add_scaled(&rest, &(&Laurent::u_pow(-1) - &Laurent::u_pow(1)));
                Arc::new(out)
            }
        };
        self.bar_cache
            .lock()
            .unwrap()
            .entry(w.clone())
            .or_insert(result)
            .clone()
    }

    pub fn bar(&self, x: &HeckeElt) -> HeckeElt {
        assert_eq!(self.n, x.n());
        let mut out = HeckeElt::zero(self.n);
        for (w, f) in &x.terms {
            out.add_scaled(&self.bar_t(w), &f.bar());
        }
        out
    }

    /// The canonical basis of the whole algebra, computed once and shared.
    pub fn kl_basis(&self) -> Result<Arc<KlBasis>, IcError> {
        if let Some(hit) = self.kl.lock().unwrap().as_ref() {
            return Ok(hit.clone());
        }
        let order = all_perms(self.n);
        let index: BTreeMap<Perm, usize> =
            order.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let bars: Vec<SparseVec> = order
            .iter()
            .map(|w| {
                self.bar_t(w)
                    .iter()
                    .map(|(x, f)| (index[x], f.clone()))
                    .collect()
            })
            .collect();
        let opts = IcOptions { check_involutive: self.n <= 5 };
        let cols = icengine::canonical_basis(&bars, opts)?;
        let basis = Arc::new(KlBasis { order, index, cols });
        let mut slot = self.kl.lock().unwrap();
        Ok(slot.get_or_insert(basis).clone())
    }
}

/// The canonical basis `{C'_w}` of the Hecke algebra of `S_n`, stored as
/// columns over the length-sorted enumeration of `S_n`.
pub struct KlBasis {
    order: Vec<Perm>,
    index: BTreeMap<Perm, usize>,
    cols: Vec<SparseVec>,
}

impl KlBasis {
    /// The linear extension the columns are indexed by.
    pub fn order(&self) -> &[Perm] {
        &self.order
    }

    pub fn index_of(&self, w: &Perm) -> usize {
        self.index[w]
    }

    /// `C'_w` as a Hecke element.
    pub fn c(&self, w: &Perm) -> HeckeElt {
        let mut out = HeckeElt::zero(w.n());
        for (&i, f) in &self.cols[self.index[w]] {
            out.add_term(&self.order[i], f);
        }
        out
    }

    /// The coefficient of `T_x` in `C'_w`, in `u^-1 Z[u^-1]` for `x != w`.
    pub fn p(&self, x: &Perm, w: &Perm) -> Laurent {
        self.cols[self.index[w]]
            .get(&self.index[x])
            .cloned()
            .unwrap_or_else(Laurent::zero)
    }

    /// `mu(x, w)`: the coefficient of `u^-1` in `p(x, w)`.
    pub fn mu(&self, x: &Perm, w: &Perm) -> BigInt {
        self.p(x, w).coeff(-1)
    }

    /// Rewrite an element in the canonical basis.
    pub fn expand(&self, elt: &HeckeElt) -> BTreeMap<Perm, Laurent> {
        let mut rest: SparseVec = elt
            .iter()
            .map(|(w, f)| (self.index[w], f.clone()))
            .collect();
        let mut out = BTreeMap::new();
        while let Some((&j, f)) = rest.last_key_value() {
            let f = f.clone();
            out.insert(self.order[j].clone(), f.clone());
            icengine::add_scaled(&mut rest, &self.cols[j], &-&f);
            debug_assert!(!rest.contains_key(&j));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::str::FromStr;

    fn l(s: &str) -> Laurent {
        Laurent::from_str(s).unwrap()
    }

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    #[test]
    fn quadratic_relation() {
        let n = 3;
        let ts = HeckeElt::t(&Perm::simple(n, 1).unwrap());
        let sq = &ts * &ts;
        let mut expect = HeckeElt::one(n);
        expect.add_scaled(&ts, &l("u - u^-1"));
        assert_eq!(sq, expect);
    }

    #[test]
    fn products_of_generators_match_reduced_words() {
        let n = 4;
        for w in all_perms(n) {
            let mut prod = HeckeElt::one(n);
            for i in w.left_reduced_word() {
                let ts = HeckeElt::t(&Perm::simple(n, i).unwrap());
                prod = &prod * &ts;
            }
            assert_eq!(prod, HeckeElt::t(&w));
        }
    }

    #[test]
    fn associativity_on_a_sample() {
        let n = 4;
        let elts = [
            HeckeElt::t(&p("4321")),
            HeckeElt::c_s(n, 2),
            &HeckeElt::t(&p("3142")) - &HeckeElt::t(&p("2413")).scale(&l("u")),
        ];
        for a in &elts {
            for b in &elts {
                for c in &elts {
                    assert_eq!(&(a * b) * c, a * &(b * c));
                }
            }
        }
    }

    #[test]
    fn left_and_right_generator_actions_agree_with_mul() {
        let n = 4;
        let x = &HeckeElt::t(&p("3142")) + &HeckeElt::t(&p("1234")).scale(&l("u^-2"));
        let ts = HeckeElt::t(&Perm::simple(n, 3).unwrap());
        assert_eq!(x.t_mul_left(3), &ts * &x);
        assert_eq!(x.t_mul_right(3), &x * &ts);
    }

    #[test]
    fn bar_is_a_multiplicative_involution() {
        let n = 4;
        let h = HeckeAlg::new(n);
        for w in all_perms(n) {
            let b = h.bar_t(&w);
            assert_eq!(h.bar(&b), HeckeElt::t(&w), "bar^2 fails at {w}");
        }
        let a = HeckeElt::t(&p("3412"));
        let b = &HeckeElt::t(&p("2143")).scale(&l("u + 1")) + &HeckeElt::one(n);
        assert_eq!(h.bar(&(&a * &b)), &h.bar(&a) * &h.bar(&b));
    }

    #[test]
    fn s3_canonical_basis_is_the_full_interval() {
        let h = HeckeAlg::new(3);
        let kl = h.kl_basis().unwrap();
        for w in all_perms(3) {
            for x in all_perms(3) {
                let expect = if crate::permgrp::bruhat_leq(&x, &w) {
                    Laurent::u_pow(x.length() as i32 - w.length() as i32)
                } else {
                    Laurent::zero()
                };
                assert_eq!(kl.p(&x, &w), expect, "p({x}, {w})");
            }
        }
    }

    #[test]
    fn s4_singular_values() {
        let h = HeckeAlg::new(4);
        let kl = h.kl_basis().unwrap();
        assert_eq!(kl.p(&p("1324"), &p("3412")), l("u^-1 + u^-3"));
        assert_eq!(kl.p(&p("1234"), &p("3412")), l("u^-2 + u^-4"));
        assert_eq!(kl.p(&p("1234"), &p("4231")), l("u^-3 + u^-5"));
        assert_eq!(kl.p(&p("1234"), &p("4321")), l("u^-6"));
        assert_eq!(kl.mu(&p("1324"), &p("3412")), BigInt::from(1));
        assert_eq!(kl.mu(&p("1234"), &p("3412")), BigInt::from(0));
    }

    #[test]
    fn canonical_basis_is_bar_invariant_and_supported_on_bruhat_intervals() {
        let h = HeckeAlg::new(4);
        let kl = h.kl_basis().unwrap();
        for w in all_perms(4) {
            let c = kl.c(&w);
            assert_eq!(h.bar(&c), c, "C'_{w} not bar-invariant");
            for x in c.support() {
                assert!(crate::permgrp::bruhat_leq(x, &w), "support {x} of C'_{w}");
            }
        }
    }

    #[test]
    fn multiplication_rule_in_the_canonical_basis() {
        // C_s C'_w = [2] C'_w when s w < w, and otherwise
        // C'_{sw} + sum of mu(z, w) C'_z over z < w with s z < z.
        let n = 4;
        let h = HeckeAlg::new(n);
        let kl = h.kl_basis().unwrap();
        for w in all_perms(n) {
            for i in 1..n as u8 {
                let prod = &HeckeElt::c_s(n, i) * &kl.c(&w);
                let expansion = kl.expand(&prod);
                let mut expect: BTreeMap<Perm, Laurent> = BTreeMap::new();
                if w.left_descents().contains(&i) {
                    expect.insert(w.clone(), Laurent::u_integer(2).unwrap());
                } else {
                    let s = Perm::simple(n, i).unwrap();
                    expect.insert(s.mul(&w), Laurent::one());
                    for z in all_perms(n) {
                        if z.left_descents().contains(&i) {
                            let m = kl.mu(&z, &w);
                            if m != BigInt::from(0) {
                                expect.insert(z.clone(), Laurent::term(m, 0));
                            }
                        }
                    }
                }
                assert_eq!(expansion, expect, "C_s C'_w at s_{i}, w = {w}");
            }
        }
    }

    #[test]
    fn expand_inverts_the_basis_change() {
        let h = HeckeAlg::new(4);
        let kl = h.kl_basis().unwrap();
        let w = p("4213");
        assert_eq!(kl.expand(&kl.c(&w)), BTreeMap::from([(w, Laurent::one())]));
        let x = &HeckeElt::t(&p("3421")).scale(&l("u - 5")) + &HeckeElt::t(&p("2134"));
        let mut back = HeckeElt::zero(4);
        for (w, f) in kl.expand(&x) {
            back.add_scaled(&kl.c(&w), &f);
        }
        assert_eq!(back, x);
    }

    #[test]
    fn rendering_matches_the_documented_shape() {
        let c = HeckeElt::c_s(3, 1);
        assert_eq!(c.to_string(), "T[2,1,3] + u^-1 T[1,2,3]");
    }
}
