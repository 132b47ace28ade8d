//! Single tensor-slot monomials in the Poincaré–Birkhoff–Witt order
//! `F^a K^b e^c` and their structure constants.
//!
//! The generators satisfy `K e = q e K`, `K F = q^{-1} F K`, and
//! `e F = F e + K - K^{-1}` (with `e = (q^{1/2} - q^{-1/2}) E`, which clears
//! the denominator from the usual `[E, F]` relation). Every product of
//! monomials straightens to an integer Laurent combination of monomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::qarith::LaurentPoly;

/// `F^a K^b e^c` in one tensor slot.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SlotMono {
    pub a: u32,
    pub b: i64,
    pub c: u32,
}

impl SlotMono {
    pub const ONE: SlotMono = SlotMono { a: 0, b: 0, c: 0 };

    pub fn new(a: u32, b: i64, c: u32) -> Self {
        SlotMono { a, b, c }
    }

    /// Weight-grading degree: `e` raises by 1, `F` lowers by 1.
    pub fn degree(&self) -> i64 {
        self.c as i64 - self.a as i64
    }

    /// Lies in the Cartan part (a power of `K`).
    pub fn is_cartan(&self) -> bool {
        self.a == 0 && self.c == 0
    }
}

type MonoSum = Vec<(LaurentPoly, SlotMono)>;

fn ef_cache() -> &'static Mutex<HashMap<(u32, u32), Arc<MonoSum>>> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<MonoSum>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn collect(map: BTreeMap<SlotMono, LaurentPoly>) -> MonoSum {
    map.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (c, m))
        .collect()
}

/// Normal form of `e^c F^a` as `Σ coeff · F^α K^β e^γ` with integer Laurent
/// coefficients in q.
fn ef_normal(c: u32, a: u32) -> Arc<MonoSum> {
    if let Some(hit) = ef_cache().lock().unwrap().get(&(c, a)) {
        return hit.clone();
    }
    let result: MonoSum = if c == 0 {
        vec![(LaurentPoly::one(), SlotMono::new(a, 0, 0))]
    } else if a == 0 {
        vec![(LaurentPoly::one(), SlotMono::new(0, 0, c))]
    } else if c == 1 {
        // e F^a = F (e F^{a-1}) + q^{-(a-1)} F^{a-1} K - q^{a-1} F^{a-1} K^{-1}
        let prev = ef_normal(1, a - 1);
        let mut acc: BTreeMap<SlotMono, LaurentPoly> = BTreeMap::new();
        for (coef, m) in prev.iter() {
            let key = SlotMono::new(m.a + 1, m.b, m.c);
            *acc.entry(key).or_default() += coef;
        }
        let lo = SlotMono::new(a - 1, 1, 0);
        *acc.entry(lo).or_default() += &LaurentPoly::q_pow(-(a as i64 - 1));
        let hi = SlotMono::new(a - 1, -1, 0);
        *acc.entry(hi).or_default() -= &LaurentPoly::q_pow(a as i64 - 1);
        collect(acc)
    } else {
        // e (e^{c-1} F^a), with e · F^α K^β e^γ expanded through ef(1, α)
        let prev = ef_normal(c - 1, a);
        let mut acc: BTreeMap<SlotMono, LaurentPoly> = BTreeMap::new();
        for (coef, m) in prev.iter() {
            for (coef2, m2) in ef_normal(1, m.a).iter() {
                // e^{γ₂} K^β = q^{-γ₂ β} K^β e^{γ₂}
                let shift = LaurentPoly::q_pow(-(m2.c as i64) * m.b);
                let key = SlotMono::new(m2.a, m2.b + m.b, m2.c + m.c);
                *acc.entry(key).or_default() += &(&(coef * coef2) * &shift);
            }
        }
        collect(acc)
    };
    let arc = Arc::new(result);
    ef_cache()
        .lock()
        .unwrap()
        .insert((c, a), arc.clone());
    arc
}

/// Straightened product of two slot monomials.
pub fn slot_mul(m: &SlotMono, n: &SlotMono) -> MonoSum {
    ef_normal(m.c, n.a)
        .iter()
        .map(|(coef, t)| {
            // K^{m.b} F^α = q^{-m.b α} F^α K^{m.b};  e^γ K^{n.b} = q^{-γ n.b} K^{n.b} e^γ
            let shift = -(m.b * t.a as i64) - t.c as i64 * n.b;
            let coeff = coef * &LaurentPoly::q_pow(shift);
            let mono = SlotMono::new(m.a + t.a, m.b + t.b + n.b, t.c + n.c);
            (coeff, mono)
        })
        .collect()
}

/// `S^{±1}(F^a K^b e^c)` straightened, using the antipode values
/// `S(e) = -K^{-1} e`, `S(F) = -F K`, `S^{-1}(e) = -e K^{-1}`,
/// `S^{-1}(F) = -K F`, and `S^{±1}(K) = K^{-1}`.
pub fn antipode_mono(m: &SlotMono, inverse: bool) -> MonoSum {
    let (a, b, c) = (m.a as i64, m.b, m.c as i64);
    // S^{±1}(e)^c = (-1)^c q^{c(c∓1)/2} K^{-c} e^c
    // S^{±1}(F)^a = (-1)^a q^{-a(a∓1)/2} F^a K^a
    let (e_exp, f_exp) = if inverse {
        (c * (c + 1) / 2, -a * (a + 1) / 2)
    } else {
        (c * (c - 1) / 2, -a * (a - 1) / 2)
    };
    let sign = if (a + c) % 2 == 0 { 1 } else { -1 };
    // S^{±1}(e)^c · K^{-b}: pull K^{-b} through e^c
    let left = SlotMono::new(0, -c - b, m.c);
    let right = SlotMono::new(m.a, a, 0);
    let pre = LaurentPoly::monomial(sign, 4 * (e_exp + f_exp + c * b));
    slot_mul(&left, &right)
        .into_iter()
        .map(|(coef, t)| (&coef * &pre, t))
        .collect()
}

/// Fold `K^s` into the monomial from the left; returns the monomial together
/// with the q-exponent picked up from `K^s F^a = q^{-s a} F^a K^s`.
pub fn k_fold(m: &SlotMono, s: i64) -> (i64, SlotMono) {
    (-s * m.a as i64, SlotMono::new(m.a, m.b + s, m.c))
}
