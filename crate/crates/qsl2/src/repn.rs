//! Finite-dimensional irreducible representations `V_m`, the evaluation
//! functor from symbolic elements to matrices, quantum traces, and the
//! representation ring with its interpolation bases.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{Element, SlotMono};
use crate::qarith::{qfact, qint_balanced, LaurentPoly, RationalLaurent};

/// Dense matrix over the coefficient field, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<RationalLaurent>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![RationalLaurent::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = RationalLaurent::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalLaurent {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RationalLaurent) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &RationalLaurent) {
        self.data[i * self.cols + j] += v;
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let p = a * b;
                        out.data[i * rhs.cols + j] += &p;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, c: &RationalLaurent) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn trace(&self) -> RationalLaurent {
        assert_eq!(self.rows, self.cols);
        let mut t = RationalLaurent::zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Scalar multiple of the identity? Returns the scalar if so.
    pub fn as_scalar(&self) -> Option<RationalLaurent> {
        assert_eq!(self.rows, self.cols);
        let c = self.get(0, 0).clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let expect = if i == j {
                    c.clone()
                } else {
                    RationalLaurent::zero()
                };
                if *self.get(i, j) != expect {
                    return None;
                }
            }
        }
        Some(c)
    }
}

/// The m-dimensional irreducible representation on the weight basis
/// `u_0, …, u_{m-1}` with weights `m-1, m-3, …, -(m-1)`:
///
/// ```text
///   K u_j = v^{2 λ_j} u_j,   E u_j = [j] u_{j-1},   F u_j = [m-1-j] u_{j+1}
/// ```
///
/// with balanced quantum integers `[k]`. The bracket identity
/// `[j+1][m-1-j] - [j][m-j] = [m-1-2j]` makes the commutation relation exact.
#[derive(Clone, Debug)]
pub struct Rep {
    pub m: u32,
    pub weights: Vec<i64>,
}

impl Rep {
    fn new(m: u32) -> Self {
        assert!(m >= 1, "dimension must be positive");
        let weights = (0..m).map(|j| m as i64 - 1 - 2 * j as i64).collect();
        Rep { m, weights }
    }

    pub fn dim(&self) -> usize {
        self.m as usize
    }

    /// Coefficient of `E u_j` on `u_{j-1}` (zero at j = 0).
    fn e_coeff(&self, j: usize) -> LaurentPoly {
        qint_balanced(j as i64)
    }

    /// Coefficient of `F u_j` on `u_{j+1}` (zero at j = m-1).
    fn f_coeff(&self, j: usize) -> LaurentPoly {
        qint_balanced(self.m as i64 - 1 - j as i64)
    }

    /// Action of a PBW monomial on basis vector `u_j`: at most one target.
    /// Returns `(target index, coefficient)`.
    pub fn mono_action(&self, s: &SlotMono, j: usize) -> Option<(usize, LaurentPoly)> {
        // e^c first (e = (q^{1/2} - q^{-1/2}) E raises the basis index down by c)
        let c = s.c as usize;
        if j < c {
            return None;
        }
        let mut coef = LaurentPoly::one();
        let step = &LaurentPoly::v_pow(2) - &LaurentPoly::v_pow(-2);
        let mut pos = j;
        for _ in 0..c {
            coef = &coef * &(&step * &self.e_coeff(pos));
            pos -= 1;
        }
        // K^b on u_pos
        if s.b != 0 {
            coef = &coef * &LaurentPoly::v_pow(2 * s.b * self.weights[pos]);
        }
        // F^a
        let a = s.a as usize;
        if pos + a >= self.dim() {
            return None;
        }
        for _ in 0..a {
            coef = &coef * &self.f_coeff(pos);
            pos += 1;
        }
        if coef.is_zero() {
            None
        } else {
            Some((pos, coef))
        }
    }

    /// Dense matrix of a single generator-word monomial.
    pub fn mono_matrix(&self, s: &SlotMono) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zero(n, n);
        for j in 0..n {
            if let Some((i, coef)) = self.mono_action(s, j) {
                out.set(i, j, RationalLaurent::from_laurent(coef));
            }
        }
        out
    }
}

/// Shared cache of representations.
pub fn rep(m: u32) -> Arc<Rep> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Rep>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap();
    guard.entry(m).or_insert_with(|| Arc::new(Rep::new(m))).clone()
}

/// Matrix of a symbolic element on `V_{m_1} ⊗ … ⊗ V_{m_n}`.
///
/// Each term acts as: per-slot monomial action (at most one target basis
/// vector per source), then the Cartan coupling `D^A` acting diagonally on
/// the *output* basis vector by `v^{A(λ)}`, then the coefficient.
pub fn evaluate(x: &Element, colors: &[u32]) -> Matrix {
    assert_eq!(x.slots(), colors.len(), "slot/color mismatch");
    let reps: Vec<Arc<Rep>> = colors.iter().map(|&m| rep(m)).collect();
    let dims: Vec<usize> = reps.iter().map(|r| r.dim()).collect();
    let total: usize = dims.iter().product();
    let mut out = Matrix::zero(total, total);
    let unrank = |mut b: usize| -> Vec<usize> {
        let mut idx = vec![0; dims.len()];
        for i in (0..dims.len()).rev() {
            idx[i] = b % dims[i];
            b /= dims[i];
        }
        idx
    };
    let rank = |idx: &[usize]| -> usize {
        let mut b = 0;
        for i in 0..dims.len() {
            b = b * dims[i] + idx[i];
        }
        b
    };
    for (d, monos, coeff) in x.terms() {
        for col in 0..total {
            let src = unrank(col);
            let mut tgt = vec![0usize; dims.len()];
            let mut coef = LaurentPoly::one();
            let mut dead = false;
            for i in 0..dims.len() {
                match reps[i].mono_action(&monos[i], src[i]) {
                    Some((t, c)) => {
                        tgt[i] = t;
                        coef = &coef * &c;
                    }
                    None => {
                        dead = true;
                        break;
                    }
                }
            }
            if dead {
                continue;
            }
            let weights: Vec<i64> = (0..dims.len()).map(|i| reps[i].weights[tgt[i]]).collect();
            let dval = LaurentPoly::v_pow(d.eval_vexp(&weights));
            let entry = coeff * &RationalLaurent::from_laurent(&coef * &dval);
            out.add_at(rank(&tgt), col, &entry);
        }
    }
    out
}

/// Quantum trace of an element on `V_{m_1} ⊗ … ⊗ V_{m_n}`: the ordinary
/// trace against the pivotal element `K^{-1}` in every slot. The identity on
/// `V_m` traces to the balanced quantum integer
/// `[m] = (q^{m/2} - q^{-m/2})/(q^{1/2} - q^{-1/2})`.
pub fn quantum_trace(x: &Element, colors: &[u32]) -> RationalLaurent {
    let mut pivot = Element::one(x.slots());
    for i in 0..x.slots() {
        pivot = pivot.mul(&Element::k_pow(x.slots(), i, -1));
    }
    evaluate(&pivot.mul(x), colors).trace()
}

/// Quantum trace of an explicit matrix on a single `V_m` (used by the
/// matrix-transfer evaluation path).
pub fn quantum_trace_matrix(f: &Matrix, m: u32) -> RationalLaurent {
    let r = rep(m);
    let mut t = RationalLaurent::zero();
    for j in 0..r.dim() {
        let piv = LaurentPoly::v_pow(-2 * r.weights[j]);
        let p = f.get(j, j) * &RationalLaurent::from_laurent(piv);
        t += &p;
    }
    t
}

/// Element of the representation ring: a finite `Σ c_m V_m`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RepRingElement {
    coeffs: BTreeMap<u32, RationalLaurent>,
}

impl RepRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(m: u32) -> Self {
        assert!(m >= 1);
        let mut r = Self::default();
        r.coeffs.insert(m, RationalLaurent::one());
        r
    }

    pub fn one() -> Self {
        Self::basis(1)
    }

    pub fn add_coeff(&mut self, m: u32, c: &RationalLaurent) {
        let entry = self.coeffs.entry(m).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &RationalLaurent)> {
        self.coeffs.iter().map(|(&m, c)| (m, c))
    }

    pub fn scale(&self, c: &RationalLaurent) -> Self {
        let mut out = Self::default();
        for (m, x) in &self.coeffs {
            out.add_coeff(*m, &(x * c));
        }
        out
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &rhs.coeffs {
            out.add_coeff(*m, c);
        }
        out
    }

    /// Largest dimension with nonzero coefficient.
    pub fn max_dim(&self) -> u32 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    /// Character `Σ_m c_m Σ_{w ∈ weights(V_m)} v^{2w}` (coefficients must be
    /// Laurent for an exact character).
    pub fn character(&self) -> RationalLaurent {
        let mut acc = RationalLaurent::zero();
        for (m, c) in &self.coeffs {
            let mut ch = LaurentPoly::zero();
            for w in &rep(*m).weights {
                ch.add_term(2 * w, 1.into());
            }
            let p = c * &RationalLaurent::from_laurent(ch);
            acc += &p;
        }
        acc
    }
}

/// Product in the representation ring via the Clebsch–Gordan rule
/// `V_a · V_b = V_{|a-b|+1} + V_{|a-b|+3} + … + V_{a+b-1}`.
pub fn rep_ring_mul(a: &RepRingElement, b: &RepRingElement) -> RepRingElement {
    let mut out = RepRingElement::zero();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let c = ca * cb;
            let lo = ma.abs_diff(mb) + 1;
            let hi = ma + mb - 1;
            let mut m = lo;
            while m <= hi {
                out.add_coeff(m, &c);
                m += 2;
            }
        }
    }
    out
}

/// Expansion of `P_l = ∏_{i=0}^{l-1} (V_2 - q^{i+1/2} - q^{-i-1/2})` in the
/// `V_m` basis.
pub fn expand_p(l: u32) -> RepRingElement {
    let mut acc = RepRingElement::one();
    for i in 0..l as i64 {
        let mut scalar = LaurentPoly::v_pow(4 * i + 2);
        scalar += &LaurentPoly::v_pow(-4 * i - 2);
        let factor = RepRingElement::basis(2).add(
            &RepRingElement::one().scale(&-&RationalLaurent::from_laurent(scalar)),
        );
        acc = rep_ring_mul(&acc, &factor);
    }
    acc
}

/// Expansion of `P̃'_l = (q^{l/2} / {l}_q!) P_l`.
pub fn expand_ptilde(l: u32) -> RepRingElement {
    let scale = RationalLaurent::new(LaurentPoly::v_pow(2 * l as i64), qfact(l))
        .expect("factorial nonzero");
    expand_p(l).scale(&scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::r_pair;
    use crate::qarith::qint_balanced;

    fn gen_e(n: usize, s: usize) -> Element {
        Element::e_pow(n, s, 1)
    }
    fn gen_f(n: usize, s: usize) -> Element {
        Element::f_pow(n, s, 1)
    }
    fn gen_k(n: usize, s: usize, b: i64) -> Element {
        Element::k_pow(n, s, b)
    }

    #[test]
    fn defining_relations_hold_in_v5() {
        for m in 1..=6u32 {
            let colors = [m];
            // K e K^{-1} = q e
            let ke = evaluate(
                &gen_k(1, 0, 1).mul(&gen_e(1, 0)).mul(&gen_k(1, 0, -1)),
                &colors,
            );
            let qe = evaluate(&gen_e(1, 0), &colors).scale(&RationalLaurent::q_pow(1));
            assert_eq!(ke, qe, "KeK^-1 = qe on V_{}", m);
            // e F - F e = (v^2 - v^{-2})^2 E F - … = (K - K^{-1}) scaled:
            // in terms of e: eF - Fe = K - K^{-1}
            let lhs = evaluate(
                &gen_e(1, 0).mul(&gen_f(1, 0)).sub(&gen_f(1, 0).mul(&gen_e(1, 0))),
                &colors,
            );
            let rhs = evaluate(&gen_k(1, 0, 1).sub(&gen_k(1, 0, -1)), &colors);
            assert_eq!(lhs, rhs, "commutation on V_{}", m);
            // nilpotency
            let em = evaluate(&Element::e_pow(1, 0, m), &colors);
            let fm = evaluate(&Element::f_pow(1, 0, m), &colors);
            assert!(em.is_zero(), "e^m = 0 on V_{}", m);
            assert!(fm.is_zero(), "F^m = 0 on V_{}", m);
        }
    }

    #[test]
    fn evaluate_is_algebra_morphism() {
        let xs = [
            gen_e(2, 0).mul(&gen_f(2, 1)),
            Element::d_power(2, 0, 1, 1).mul(&gen_k(2, 0, 1)),
            r_pair(1, true),
            r_pair(2, false),
        ];
        for x in &xs {
            for y in &xs {
                let lhs = evaluate(&x.mul(y), &[2, 3]);
                let rhs = evaluate(x, &[2, 3]).mul(&evaluate(y, &[2, 3]));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn evaluate_respects_coproduct() {
        // ρ_{V_a ⊗ V_b}(Δ(x)) computed through the symbolic coproduct equals
        // the direct two-slot evaluation of the same element.
        let x = gen_f(1, 0).mul(&gen_e(1, 0)).mul(&gen_k(1, 0, 1));
        let dx = x.coproduct(0);
        let via_split = evaluate(&dx, &[2, 3]);
        // independent path: evaluate Δ(generators) and multiply matrices
        let de = gen_e(2, 0).add(&gen_k(2, 0, 1).mul(&gen_e(2, 1)));
        let df = gen_f(2, 0).mul(&gen_k(2, 1, -1)).add(&gen_f(2, 1));
        let dk = gen_k(2, 0, 1).mul(&gen_k(2, 1, 1));
        let direct = evaluate(&df.mul(&de).mul(&dk), &[2, 3]);
        assert_eq!(via_split, direct);
    }

    #[test]
    fn quantum_dimension() {
        for m in 1..=5u32 {
            let t = quantum_trace(&Element::one(1), &[m]);
            assert_eq!(t, RationalLaurent::from_laurent(qint_balanced(m as i64)), "V_{}", m);
            let f = Matrix::identity(m as usize);
            assert_eq!(quantum_trace_matrix(&f, m), t);
        }
    }

    #[test]
    fn trace_multiplicative_over_slots() {
        let x = gen_f(1, 0).mul(&gen_e(1, 0));
        let y = gen_k(1, 0, 2);
        let t2 = quantum_trace(&x.tensor(&y), &[2, 3]);
        let t = &quantum_trace(&x, &[2]) * &quantum_trace(&y, &[3]);
        assert_eq!(t2, t);
    }

    #[test]
    fn r_matrix_truncation_stabilizes() {
        let sum = |n: u32, pos: bool| {
            let mut acc = Element::zero(2);
            for k in 0..=n {
                acc = acc.add(&r_pair(k, pos));
            }
            acc
        };
        // on V_2 ⊗ V_3, legs k ≥ 2 act as zero
        let a = evaluate(&sum(1, true), &[2, 3]);
        let b = evaluate(&sum(4, true), &[2, 3]);
        assert_eq!(a, b);
        // R R^{-1} = 1 under evaluation
        let rr = sum(4, true).mul(&sum(4, false));
        assert_eq!(evaluate(&rr, &[2, 3]), Matrix::identity(6));
    }

    #[test]
    fn ribbon_acts_by_scalar() {
        use crate::algebra::ribbon;
        for m in 2..=3u32 {
            let r = evaluate(&ribbon(4, false), &[m]);
            let rinv = evaluate(&ribbon(4, true), &[m]);
            let s = r.as_scalar().expect("central element acts by scalar");
            let si = rinv.as_scalar().expect("central element acts by scalar");
            assert_eq!(&s * &si, RationalLaurent::one(), "on V_{}", m);
        }
    }

    #[test]
    fn straightening_matches_matrices() {
        // products of monomials straightened symbolically agree with direct
        // matrix products, all a, c ≤ 5 on V_6
        use crate::algebra::SlotMono;
        let r6 = rep(6);
        for a1 in 0..=5u32 {
            for c1 in 0..=5u32 {
                let m1 = SlotMono::new(a1, 1, c1);
                let m2 = SlotMono::new(c1 % 3, -1, a1 % 3);
                let x = Element::from_mono(1, 0, m1, RationalLaurent::one());
                let y = Element::from_mono(1, 0, m2, RationalLaurent::one());
                let sym = evaluate(&x.mul(&y), &[6]);
                let direct = r6.mono_matrix(&m1).mul(&r6.mono_matrix(&m2));
                assert_eq!(sym, direct, "a1={} c1={}", a1, c1);
            }
        }
    }

    #[test]
    fn clebsch_gordan_vs_characters() {
        let v = RepRingElement::basis;
        let p = rep_ring_mul(&v(2), &v(2));
        let expected = v(1).add(&v(3));
        assert_eq!(p, expected);
        let p23 = rep_ring_mul(&v(2), &v(3));
        assert_eq!(p23, v(2).add(&v(4)));
        // characters multiply
        for (a, b) in [(2, 2), (2, 3), (3, 4), (4, 4)] {
            let prod = rep_ring_mul(&v(a), &v(b));
            assert_eq!(
                prod.character(),
                &v(a).character() * &v(b).character(),
                "V_{} · V_{}",
                a,
                b
            );
        }
        // unit
        assert_eq!(rep_ring_mul(&v(1), &v(5)), v(5));
    }

    #[test]
    fn p_basis_expansions() {
        let p0 = expand_p(0);
        assert_eq!(p0, RepRingElement::one());
        // P_1 = V_2 - (q^{1/2} + q^{-1/2}) V_1
        let p1 = expand_p(1);
        let mut scalar = LaurentPoly::v_pow(2);
        scalar += &LaurentPoly::v_pow(-2);
        let expected = RepRingElement::basis(2).add(
            &RepRingElement::one().scale(&-&RationalLaurent::from_laurent(scalar)),
        );
        assert_eq!(p1, expected);
        // P̃'_2 = (q / {2}_q!) P_2
        let pt2 = expand_ptilde(2);
        let scale = RationalLaurent::new(LaurentPoly::q_pow(1), qfact(2)).unwrap();
        assert_eq!(pt2, expand_p(2).scale(&scale));
    }
}
