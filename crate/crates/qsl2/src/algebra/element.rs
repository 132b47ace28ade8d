//! Exact symbolic elements of tensor powers of the h-adic quantized
//! enveloping algebra, restricted to the subspace actually produced by
//! universal-invariant computations: finite sums
//!
//! ```text
//!   Σ  coeff · D^A · (F^{a_1} K^{b_1} e^{c_1} ⊗ … ⊗ F^{a_n} K^{b_n} e^{c_n})
//! ```
//!
//! where `D^A` is a power matrix of Cartan couplings `q^{H_i H_j / 4}` (see
//! [`DMatrix`]) and coefficients live in the fraction field of `Z[v^{±1}]`.
//! All Hopf-algebra operations keep this normal form closed: the only
//! commutation needed is moving monomials past `D`-factors, which produces
//! `K`-powers and `q`-power scalars via `f(H) x = x f(H + 2 deg x)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::qarith::{qbrace, qintfact, LaurentPoly, RationalLaurent};

use super::dmatrix::DMatrix;
use super::slot::{antipode_mono, k_fold, slot_mul, SlotMono};

type Key = (DMatrix, Vec<SlotMono>);
type MonoSum = Vec<(LaurentPoly, SlotMono)>;

/// An element of the n-fold tensor power in `D`-times-monomial normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element {
    slots: usize,
    terms: BTreeMap<Key, RationalLaurent>,
}

impl Element {
    pub fn zero(slots: usize) -> Self {
        Element {
            slots,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(slots: usize) -> Self {
        Self::scalar(slots, RationalLaurent::one())
    }

    pub fn scalar(slots: usize, coeff: RationalLaurent) -> Self {
        let mut el = Self::zero(slots);
        el.add_term(DMatrix::zero(slots), vec![SlotMono::ONE; slots], coeff);
        el
    }

    /// Single monomial `coeff · m` in the given slot, identity elsewhere.
    pub fn from_mono(slots: usize, slot: usize, m: SlotMono, coeff: RationalLaurent) -> Self {
        let mut monos = vec![SlotMono::ONE; slots];
        monos[slot] = m;
        let mut el = Self::zero(slots);
        el.add_term(DMatrix::zero(slots), monos, coeff);
        el
    }

    pub fn f_pow(slots: usize, slot: usize, k: u32) -> Self {
        Self::from_mono(slots, slot, SlotMono::new(k, 0, 0), RationalLaurent::one())
    }

    pub fn e_pow(slots: usize, slot: usize, k: u32) -> Self {
        Self::from_mono(slots, slot, SlotMono::new(0, 0, k), RationalLaurent::one())
    }

    pub fn k_pow(slots: usize, slot: usize, b: i64) -> Self {
        Self::from_mono(slots, slot, SlotMono::new(0, b, 0), RationalLaurent::one())
    }

    /// Divided power `F̃^{(k)} = F^k K^k / [k]_q!`.
    pub fn f_tilde(slots: usize, slot: usize, k: u32) -> Self {
        let coeff = RationalLaurent::new(LaurentPoly::one(), qintfact(k))
            .expect("factorial is nonzero");
        Self::from_mono(slots, slot, SlotMono::new(k, k as i64, 0), coeff)
    }

    /// Divided power `Ẽ^{(k)} = (q^{-1/2} E)^k / [k]_q!`, expressed through
    /// `e = (q^{1/2} - q^{-1/2}) E`.
    pub fn e_tilde(slots: usize, slot: usize, k: u32) -> Self {
        let scale = (&LaurentPoly::v_pow(2) - &LaurentPoly::v_pow(-2)).pow(k as u64);
        let coeff = RationalLaurent::new(LaurentPoly::v_pow(-2 * k as i64), &scale * &qintfact(k))
            .expect("nonzero denominator");
        Self::from_mono(slots, slot, SlotMono::new(0, 0, k), coeff)
    }

    /// The pure Cartan coupling `D^{±p}` between slots `i` and `j`
    /// (`i == j` gives the merged `q^{p H^2/4}`).
    pub fn d_power(slots: usize, i: usize, j: usize, p: i64) -> Self {
        let mut el = Self::zero(slots);
        el.add_term(
            DMatrix::coupling(slots, i, j, p),
            vec![SlotMono::ONE; slots],
            RationalLaurent::one(),
        );
        el
    }

    pub fn slots(&self) -> usize {
        self.slots
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&DMatrix, &[SlotMono], &RationalLaurent)> {
        self.terms
            .iter()
            .map(|((d, m), c)| (d, m.as_slice(), c))
    }

    /// The coefficient of a 0-slot (fully contracted) element.
    pub fn as_scalar(&self) -> Option<RationalLaurent> {
        if self.slots != 0 {
            return None;
        }
        if self.terms.is_empty() {
            return Some(RationalLaurent::zero());
        }
        self.terms
            .get(&(DMatrix::zero(0), Vec::new()))
            .cloned()
    }

    pub fn add_term(&mut self, d: DMatrix, m: Vec<SlotMono>, coeff: RationalLaurent) {
        debug_assert_eq!(d.size(), self.slots);
        debug_assert_eq!(m.len(), self.slots);
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((d, m)) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn scale(&self, coeff: &RationalLaurent) -> Self {
        if coeff.is_zero() {
            return Self::zero(self.slots);
        }
        Element {
            slots: self.slots,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * coeff))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Element) -> Self {
        assert_eq!(self.slots, rhs.slots);
        let mut out = self.clone();
        for ((d, m), c) in &rhs.terms {
            out.add_term(d.clone(), m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Element) -> Self {
        self.add(&rhs.scale(&-&RationalLaurent::one()))
    }

    /// Product in the tensor-power algebra.
    pub fn mul(&self, rhs: &Element) -> Self {
        assert_eq!(self.slots, rhs.slots);
        let n = self.slots;
        let mut out = Element::zero(n);
        for ((am, ms), ca) in &self.terms {
            let deg: Vec<i64> = ms.iter().map(SlotMono::degree).collect();
            for ((bm, ns), cb) in &rhs.terms {
                // Move the monomials of the left factor past D^B:
                //   (⊗ m_j) D^B = D^B (⊗ K^{s_j} m_j) q^{Σ B_jj d_j² + Σ_{i<j} B_ij d_i d_j}
                // with s_j = -2 B_jj d_j - Σ_{k≠j} B_jk d_k.
                let mut qexp = 0i64;
                for i in 0..n {
                    qexp += bm.get(i, i) * deg[i] * deg[i];
                    for j in (i + 1)..n {
                        qexp += bm.get(i, j) * deg[i] * deg[j];
                    }
                }
                let mut sums: Vec<MonoSum> = Vec::with_capacity(n);
                for j in 0..n {
                    let mut s = -2 * bm.get(j, j) * deg[j];
                    for k in 0..n {
                        if k != j {
                            s -= bm.get(j, k) * deg[k];
                        }
                    }
                    let (qe, mj) = k_fold(&ms[j], s);
                    qexp += qe;
                    sums.push(slot_mul(&mj, &ns[j]));
                }
                let base = &(ca * cb) * &RationalLaurent::q_pow(qexp);
                out.distribute(am.add_matrix(bm), &sums, base);
            }
        }
        out
    }

    /// Accumulate `base · D^d · (cartesian product of the per-slot sums)`.
    fn distribute(&mut self, d: DMatrix, sums: &[MonoSum], base: RationalLaurent) {
        if base.is_zero() || sums.iter().any(|s| s.is_empty()) {
            return;
        }
        if sums.is_empty() {
            self.add_term(d, Vec::new(), base);
            return;
        }
        let mut idx = vec![0usize; sums.len()];
        loop {
            let mut coeff = base.clone();
            let mut monos = Vec::with_capacity(sums.len());
            for (j, s) in sums.iter().enumerate() {
                let (c, m) = &s[idx[j]];
                coeff = &coeff * &RationalLaurent::from_laurent(c.clone());
                monos.push(*m);
            }
            self.add_term(d.clone(), monos, coeff);
            // odometer
            let mut j = 0;
            loop {
                if j == sums.len() {
                    return;
                }
                idx[j] += 1;
                if idx[j] < sums[j].len() {
                    break;
                }
                idx[j] = 0;
                j += 1;
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Element::one(self.slots);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Tensor product: `self` occupies the first slots.
    pub fn tensor(&self, rhs: &Element) -> Self {
        let mut out = Element::zero(self.slots + rhs.slots);
        for ((ad, am), ca) in &self.terms {
            for ((bd, bm), cb) in &rhs.terms {
                let mut monos = am.clone();
                monos.extend_from_slice(bm);
                out.add_term(ad.block_diag(bd), monos, ca * cb);
            }
        }
        out
    }

    /// Comultiplication of slot `j`, splitting it into slots `j`, `j+1`.
    pub fn coproduct(&self, j: usize) -> Self {
        let mut out = Element::zero(self.slots + 1);
        for ((d, m), c) in &self.terms {
            let d2 = d.split_row(j);
            for (coef, m1, m2) in delta_mono(&m[j]).iter() {
                let mut monos = Vec::with_capacity(self.slots + 1);
                monos.extend_from_slice(&m[..j]);
                monos.push(*m1);
                monos.push(*m2);
                monos.extend_from_slice(&m[j + 1..]);
                out.add_term(
                    d2.clone(),
                    monos,
                    c * &RationalLaurent::from_laurent(coef.clone()),
                );
            }
        }
        out
    }

    /// Counit of slot `j`, removing it.
    pub fn counit(&self, j: usize) -> Self {
        let mut out = Element::zero(self.slots - 1);
        for ((d, m), c) in &self.terms {
            if m[j].a != 0 || m[j].c != 0 {
                continue;
            }
            let mut monos = Vec::with_capacity(self.slots - 1);
            monos.extend_from_slice(&m[..j]);
            monos.extend_from_slice(&m[j + 1..]);
            out.add_term(d.remove_row(j), monos, c.clone());
        }
        out
    }

    /// Antipode `S^{±1}` applied to slot `j`.
    pub fn antipode(&self, j: usize, inverse: bool) -> Self {
        let n = self.slots;
        let mut out = Element::zero(n);
        for ((d, m), c) in &self.terms {
            let dj = m[j].degree();
            // Moving the (antipoded) D-factors of slot j back to the left
            // past S(m_j) produces these corrections.
            let mut coeff = c * &RationalLaurent::q_pow(d.get(j, j) * dj * dj);
            let d2 = d.negate_offdiag_row(j);
            let mut monos = m.clone();
            let mut qext = 0i64;
            for k in 0..n {
                if k != j {
                    let (qe, mk) = k_fold(&m[k], d.get(j, k) * dj);
                    qext += qe;
                    monos[k] = mk;
                }
            }
            coeff = &coeff * &RationalLaurent::q_pow(qext);
            for (coef, sm) in antipode_mono(&m[j], inverse) {
                let (qe, smk) = k_fold(&sm, -2 * d.get(j, j) * dj);
                let mut monos2 = monos.clone();
                monos2[j] = smk;
                let c2 = &(&coeff * &RationalLaurent::from_laurent(coef))
                    * &RationalLaurent::q_pow(qe);
                out.add_term(d2.clone(), monos2, c2);
            }
        }
        out
    }

    /// Relabel tensor slots; `perm[new] = old`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.slots);
        let mut out = Element::zero(self.slots);
        for ((d, m), c) in &self.terms {
            let monos: Vec<SlotMono> = perm.iter().map(|&o| m[o]).collect();
            out.add_term(d.permute(perm), monos, c.clone());
        }
        out
    }

    /// Multiply slots `j` and `j+1` together into slot `j`.
    pub fn merge_adjacent(&self, j: usize) -> Self {
        let n = self.slots;
        let mut out = Element::zero(n - 1);
        for ((d, m), c) in &self.terms {
            let dj = m[j].degree();
            // Move slot-(j+1) D-factors left past m_j.
            let mut coeff = c * &RationalLaurent::q_pow(d.get(j + 1, j + 1) * dj * dj);
            let d2 = d.merge_rows(j);
            let s_j = -2 * d.get(j + 1, j + 1) * dj - d.get(j, j + 1) * dj;
            let (qe, mj) = k_fold(&m[j], s_j);
            let mut qext = qe;
            let mut rest = Vec::with_capacity(n - 1);
            for k in 0..n {
                if k == j || k == j + 1 {
                    continue;
                }
                let (qe, mk) = k_fold(&m[k], -d.get(j + 1, k) * dj);
                qext += qe;
                rest.push((k, mk));
            }
            coeff = &coeff * &RationalLaurent::q_pow(qext);
            for (coef, merged) in slot_mul(&mj, &m[j + 1]) {
                let mut monos = Vec::with_capacity(n - 1);
                for &(k, mk) in &rest {
                    if k < j {
                        monos.push(mk);
                    }
                }
                monos.push(merged);
                for &(k, mk) in &rest {
                    if k > j + 1 {
                        monos.push(mk);
                    }
                }
                out.add_term(
                    d2.clone(),
                    monos,
                    &coeff * &RationalLaurent::from_laurent(coef),
                );
            }
        }
        out
    }

    /// Multiply all slots together left to right, producing a 1-slot element.
    pub fn merge_all(&self) -> Self {
        assert!(self.slots >= 1);
        let mut acc = self.clone();
        while acc.slots > 1 {
            acc = acc.merge_adjacent(0);
        }
        acc
    }

    /// Fold `K^s` into slot `j` from the left.
    pub fn k_fold_left(&self, j: usize, s: i64) -> Self {
        let mut out = Element::zero(self.slots);
        for ((d, m), c) in &self.terms {
            let (qe, mj) = k_fold(&m[j], s);
            let mut monos = m.clone();
            monos[j] = mj;
            out.add_term(d.clone(), monos, c * &RationalLaurent::q_pow(qe));
        }
        out
    }

    /// Whether an element with no Cartan coupling lies, slot by slot, in the
    /// `Z[q, q^{-1}]`-span of the monomials `f^a K^{2b} e^c`, where
    /// `f = (q - 1) F K`. Since the PBW tensor monomials are independent,
    /// this is a per-term test: in each slot `F^a K^β e^c` contributes
    /// `f^a K^{β - a} e^c` up to the unit `(q-1)^a q^{-a(a-1)/2}`, so the
    /// K-parity must match in every slot and the coefficient must become an
    /// integer Laurent polynomial in `q` after dividing out the product of
    /// those units.
    pub fn in_even_integral_span(&self) -> bool {
        self.span_failure().is_none()
    }

    /// First term violating the span condition, if any, with the reduced
    /// coefficient that failed integrality.
    pub fn span_failure(&self) -> Option<(Vec<SlotMono>, RationalLaurent)> {
        for ((d, m), c) in &self.terms {
            if !d.is_zero() {
                return Some((m.clone(), c.clone()));
            }
            if m.iter()
                .any(|mono| (mono.b - mono.a as i64).rem_euclid(2) != 0)
            {
                return Some((m.clone(), c.clone()));
            }
            let a_total: u64 = m.iter().map(|mono| mono.a as u64).sum();
            let q_shift: i64 = m
                .iter()
                .map(|mono| {
                    let a = mono.a as i64;
                    a * (a - 1) / 2
                })
                .sum();
            let unit = RationalLaurent::new(
                LaurentPoly::q_pow(q_shift),
                qbrace(1).pow(a_total),
            )
            .expect("q - 1 is nonzero");
            let t = c * &unit;
            match t.as_laurent() {
                Some(p) if p.is_q_polynomial() => {}
                _ => return Some((m.clone(), t)),
            }
        }
        None
    }
}

/// `Δ(F^a K^b e^c)` as a sum over 2-slot monomials, from
/// `Δ(F) = F ⊗ K^{-1} + 1 ⊗ F`, `Δ(K) = K ⊗ K`, `Δ(e) = e ⊗ 1 + K ⊗ e`.
fn delta_mono(m: &SlotMono) -> Arc<Vec<(LaurentPoly, SlotMono, SlotMono)>> {
    type Cache = Mutex<HashMap<SlotMono, Arc<Vec<(LaurentPoly, SlotMono, SlotMono)>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(m) {
        return hit.clone();
    }
    let pair = |x: SlotMono, y: SlotMono| -> Element {
        let mut el = Element::zero(2);
        el.add_term(DMatrix::zero(2), vec![x, y], RationalLaurent::one());
        el
    };
    let df = pair(SlotMono::new(1, 0, 0), SlotMono::new(0, -1, 0))
        .add(&pair(SlotMono::ONE, SlotMono::new(1, 0, 0)));
    let de = pair(SlotMono::new(0, 0, 1), SlotMono::ONE)
        .add(&pair(SlotMono::new(0, 1, 0), SlotMono::new(0, 0, 1)));
    let dk = pair(SlotMono::new(0, m.b, 0), SlotMono::new(0, m.b, 0));
    let el = df.pow(m.a).mul(&dk).mul(&de.pow(m.c));
    let result: Vec<(LaurentPoly, SlotMono, SlotMono)> = el
        .terms
        .iter()
        .map(|((d, monos), c)| {
            debug_assert!(d.is_zero());
            let p = c
                .as_laurent()
                .expect("coproduct of a monomial has integer coefficients")
                .clone();
            (p, monos[0], monos[1])
        })
        .collect();
    let arc = Arc::new(result);
    cache.lock().unwrap().insert(*m, arc.clone());
    arc
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((d, m), c) in &self.terms {
            if !first {
                write!(f, "\n+ ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if !d.is_zero() {
                write!(f, " D[")?;
                for i in 0..d.size() {
                    if i > 0 {
                        write!(f, "; ")?;
                    }
                    for j in 0..d.size() {
                        if j > 0 {
                            write!(f, " ")?;
                        }
                        write!(f, "{}", d.get(i, j))?;
                    }
                }
                write!(f, "]")?;
            }
            for (j, s) in m.iter().enumerate() {
                write!(f, " {} ", if j == 0 { "*" } else { "(x)" })?;
                if s.a == 0 && s.b == 0 && s.c == 0 {
                    write!(f, "1")?;
                    continue;
                }
                let mut parts = Vec::new();
                if s.a > 0 {
                    parts.push(if s.a == 1 {
                        "F".to_string()
                    } else {
                        format!("F^{}", s.a)
                    });
                }
                if s.b != 0 {
                    parts.push(if s.b == 1 {
                        "K".to_string()
                    } else {
                        format!("K^{}", s.b)
                    });
                }
                if s.c > 0 {
                    parts.push(if s.c == 1 {
                        "e".to_string()
                    } else {
                        format!("e^{}", s.c)
                    });
                }
                write!(f, "{}", parts.join("."))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e1() -> Element {
        Element::e_pow(1, 0, 1)
    }
    fn f1() -> Element {
        Element::f_pow(1, 0, 1)
    }
    fn k1(b: i64) -> Element {
        Element::k_pow(1, 0, b)
    }

    #[test]
    fn commutation_relation() {
        let lhs = e1().mul(&f1()).sub(&f1().mul(&e1()));
        let rhs = k1(1).sub(&k1(-1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_commutation() {
        // (1 ⊗ x) D = D (K^{-|x|} ⊗ x) for x of pure degree
        let d = Element::d_power(2, 0, 1, 1);
        for (x, degree) in [
            (Element::e_pow(2, 1, 1), 1i64),
            (Element::f_pow(2, 1, 1), -1),
            (Element::e_pow(2, 1, 2), 2),
        ] {
            let lhs = x.mul(&d);
            let rhs = d.mul(&Element::k_pow(2, 0, -degree)).mul(&x);
            assert_eq!(lhs, rhs);
        }
        // x D^{-1} symmetric check
        let dinv = Element::d_power(2, 0, 1, -1);
        let x = Element::e_pow(2, 1, 1);
        assert_eq!(
            x.mul(&dinv),
            dinv.mul(&Element::k_pow(2, 0, 1)).mul(&x)
        );
        // D D^{-1} = 1
        assert_eq!(d.mul(&dinv), Element::one(2));
    }

    fn samples() -> Vec<Element> {
        let mut v = vec![
            e1(),
            f1(),
            k1(2),
            f1().mul(&k1(-1)).mul(&e1().pow(2)),
        ];
        // include a term with a merged Cartan coupling
        v.push(Element::d_power(1, 0, 0, 1).mul(&f1()).mul(&e1()));
        v
    }

    #[test]
    fn coassociativity() {
        for x in samples() {
            let d = x.coproduct(0);
            assert_eq!(d.coproduct(0), d.coproduct(1), "on {}", x);
        }
    }

    #[test]
    fn counit_axiom() {
        for x in samples() {
            let d = x.coproduct(0);
            assert_eq!(d.counit(0), x, "left counit on {}", x);
            assert_eq!(d.counit(1), x, "right counit on {}", x);
        }
    }

    #[test]
    fn coproduct_is_algebra_map() {
        let x = f1().mul(&e1());
        let y = e1().mul(&k1(1));
        assert_eq!(
            x.mul(&y).coproduct(0),
            x.coproduct(0).mul(&y.coproduct(0))
        );
    }

    #[test]
    fn antipode_axiom() {
        for x in samples() {
            let lhs = x.coproduct(0).antipode(0, false).merge_adjacent(0);
            let rhs = match x.counit(0).as_scalar() {
                Some(c) => Element::scalar(1, c),
                None => unreachable!(),
            };
            assert_eq!(lhs, rhs, "μ(S⊗1)Δ on {}", x);
            let lhs2 = x.coproduct(0).antipode(1, false).merge_adjacent(0);
            assert_eq!(lhs2, rhs, "μ(1⊗S)Δ on {}", x);
        }
    }

    #[test]
    fn antipode_is_antihomomorphism() {
        let x = f1().mul(&e1());
        let y = e1().mul(&k1(-1));
        assert_eq!(
            x.mul(&y).antipode(0, false),
            y.antipode(0, false).mul(&x.antipode(0, false))
        );
    }

    #[test]
    fn antipode_on_coupled_slots() {
        // On a 2-slot element with a coupling, S² in one slot must equal
        // conjugation by K^{-1} in that slot.
        let x = Element::d_power(2, 0, 1, 1)
            .mul(&Element::f_pow(2, 0, 1))
            .mul(&Element::e_pow(2, 1, 2));
        let s2 = x.antipode(0, false).antipode(0, false);
        let conj = Element::k_pow(2, 0, -1)
            .mul(&x)
            .mul(&Element::k_pow(2, 0, 1));
        assert_eq!(s2, conj);
        // and S^{-1} inverts S with the coupling present
        assert_eq!(x.antipode(0, false).antipode(0, true), x);
    }

    #[test]
    fn merge_is_multiplication() {
        // μ(x ⊗ y) = x y for 1-slot x, y including Cartan couplings
        let xs = samples();
        for x in &xs {
            for y in &xs {
                assert_eq!(
                    x.tensor(y).merge_adjacent(0),
                    x.mul(y),
                    "merge of {} and {}",
                    x,
                    y
                );
            }
        }
    }

    #[test]
    fn merge_with_spectator_coupling() {
        // Couple slot 2 to both merged slots and check against evaluation of
        // the coupling on weight vectors after reduction: structural identity
        // μ_01 ∘ (x ⊗ y ⊗ z) respects associativity of a triple product.
        let x = Element::d_power(3, 0, 2, 1)
            .mul(&Element::d_power(3, 1, 2, -1))
            .mul(&Element::e_pow(3, 0, 1))
            .mul(&Element::f_pow(3, 1, 1));
        let merged = x.merge_adjacent(0);
        // merging twice in different orders agrees
        let all1 = x.merge_adjacent(0).merge_adjacent(0);
        let all2 = x.merge_adjacent(1).merge_adjacent(0);
        assert_eq!(all1, all2);
        assert_eq!(merged.slots(), 2);
    }

    #[test]
    fn span_membership() {
        // f K^2 e with f = (q-1) F K expands to (q-1) F K^3 e
        let f_small = f1().mul(&k1(1)).scale(&RationalLaurent::from_laurent(
            &LaurentPoly::q_pow(1) - &LaurentPoly::one(),
        ));
        let x = f_small.mul(&k1(2)).mul(&e1());
        assert!(x.in_even_integral_span());
        // F alone: coefficient 1/(q-1) is not integral
        assert!(!f1().mul(&k1(1)).in_even_integral_span());
        // K-parity violation
        assert!(!f_small.mul(&k1(1)).in_even_integral_span());
    }
}
