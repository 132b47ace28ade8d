//! Structural maps built from the Hopf operations: adjoint actions, the
//! commutator-type maps used by the universal invariant of boundary bottom
//! tangles, the R-matrix legs, and the ribbon element.
//!
//! The R-matrix is the infinite sum `R = D Σ_k q^{k(k-1)/2} F̃^{(k)} K^{-k} ⊗ e^k`
//! (and `R^{-1} = D^{-1} Σ_k (-1)^k F̃^{(k)} ⊗ K^{-k} e^k`); everything here
//! that sums over its legs takes an explicit truncation bound. Because `e` is
//! nilpotent in every finite-dimensional representation and raises the
//! e-degree symbolically, all uses in this crate are exact once the bound
//! exceeds the relevant e-degree.

use crate::qarith::{qintfact, LaurentPoly, RationalLaurent};

use super::dmatrix::DMatrix;
use super::element::Element;
use super::slot::SlotMono;

/// The k-th summand `α_k ⊗ β_k` of `R` (`positive`) or `α_k^- ⊗ β_k^-` of
/// `R^{-1}` (`!positive`), as a 2-slot element.
pub fn r_pair(k: u32, positive: bool) -> Element {
    let mut el = Element::zero(2);
    if positive {
        // q^{k(k-1)/2} / [k]_q! · D · (F^k ⊗ e^k), using F̃^{(k)} K^{-k} = F^k/[k]_q!
        let kk = k as i64;
        let coeff = RationalLaurent::new(LaurentPoly::q_pow(kk * (kk - 1) / 2), qintfact(k))
            .expect("factorial nonzero");
        el.add_term(
            DMatrix::coupling(2, 0, 1, 1),
            vec![SlotMono::new(k, 0, 0), SlotMono::new(0, 0, k)],
            coeff,
        );
    } else {
        // (-1)^k / [k]_q! · D^{-1} · (F^k K^k ⊗ K^{-k} e^k)
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coeff = RationalLaurent::new(LaurentPoly::constant(sign), qintfact(k))
            .expect("factorial nonzero");
        el.add_term(
            DMatrix::coupling(2, 0, 1, -1),
            vec![
                SlotMono::new(k, k as i64, 0),
                SlotMono::new(0, -(k as i64), k),
            ],
            coeff,
        );
    }
    el
}

/// The ribbon element `r = Σ_k α_k^- K^{-1} β_k^-` or its inverse
/// `r^{-1} = Σ_k α_k K β_k`, truncated at `trunc` R-matrix legs.
pub fn ribbon(trunc: u32, inverse: bool) -> Element {
    let mut acc = Element::zero(1);
    for k in 0..=trunc {
        let rp = r_pair(k, inverse);
        let s = if inverse { 1 } else { -1 };
        acc = acc.add(&rp.k_fold_left(1, s).merge_adjacent(0));
    }
    acc
}

/// Left adjoint action contracted at slots `(p, p+1)`:
/// `… ⊗ x ⊗ y ⊗ … ↦ … ⊗ (x ▷ y) ⊗ …` with `x ▷ y = Σ x_(1) y S(x_(2))`.
pub fn ad_at(z: &Element, p: usize) -> Element {
    let n = z.slots();
    let z = z.coproduct(p); // (…, x1, x2, y, …)
    let z = z.antipode(p + 1, false);
    let mut perm: Vec<usize> = (0..n + 1).collect();
    perm[p + 1] = p + 2;
    perm[p + 2] = p + 1;
    z.permute(&perm).merge_adjacent(p).merge_adjacent(p)
}

/// `x ⊗ y ↦ x ▷ y` on a 2-slot element.
pub fn ad(z: &Element) -> Element {
    ad_at(z, 0)
}

/// Right adjoint action `y ⊗ x ↦ y ◁ x = Σ S^{-1}(x_(2)) y x_(1)` on a 2-slot
/// element.
pub fn sad(z: &Element) -> Element {
    let z = z.coproduct(1); // (y, x1, x2)
    let z = z.antipode(2, true);
    z.permute(&[2, 0, 1]).merge_adjacent(0).merge_adjacent(0)
}

/// The commutator-type map
/// `Ẏ(x ⊗ y) = Σ x_(1) S^{-1}(y_(2)) S(x_(2)) y_(1)` contracted at slots
/// `(p, p+1)`, leaving the other slots untouched.
pub fn ydot_at(z: &Element, p: usize) -> Element {
    let z = z.coproduct(p).coproduct(p + 2); // (…, x1, x2, y1, y2, …)
    let z = z.antipode(p + 1, false).antipode(p + 3, true);
    let mut perm: Vec<usize> = (0..z.slots()).collect();
    perm[p + 1] = p + 3;
    perm[p + 2] = p + 1;
    perm[p + 3] = p + 2;
    z.permute(&perm)
        .merge_adjacent(p)
        .merge_adjacent(p)
        .merge_adjacent(p)
}

/// `Ẏ` on a 2-slot element.
pub fn ydot(z: &Element) -> Element {
    ydot_at(z, 0)
}

/// The variant `Ȳ(x ⊗ y) = Σ x_(1) K S(y_(2)) K S(x_(2)) y_(1)` contracted
/// at slots `(p, p+1)`.
pub fn ybar_at(z: &Element, p: usize) -> Element {
    let z = z.coproduct(p).coproduct(p + 2);
    let z = z.antipode(p + 1, false).antipode(p + 3, false);
    let mut perm: Vec<usize> = (0..z.slots()).collect();
    perm[p + 1] = p + 3;
    perm[p + 2] = p + 1;
    perm[p + 3] = p + 2;
    z.permute(&perm)
        .k_fold_left(p + 1, 1)
        .k_fold_left(p + 2, 1)
        .merge_adjacent(p)
        .merge_adjacent(p)
        .merge_adjacent(p)
}

/// `Ȳ` on a 2-slot element.
pub fn ybar(z: &Element) -> Element {
    ybar_at(z, 0)
}

/// `ν(x ⊗ y) = Σ_k x β_k ⊗ α_k y`, truncated at `trunc` R-matrix legs.
pub fn nu_map(z: &Element, trunc: u32) -> Element {
    let mut acc = Element::zero(z.slots());
    for k in 0..=trunc {
        let t = z.tensor(&r_pair(k, true)); // (x, y, α, β)
        let t = t.permute(&[0, 3, 2, 1]); // (x, β, α, y)
        acc = acc.add(&t.merge_adjacent(0).merge_adjacent(1));
    }
    acc
}

/// The commutator map in the adjoint form,
/// `Y(x ⊗ y) = Σ_k x ▷ (β_k S((α_k ▷ y)_(1))) (α_k ▷ y)_(2)`,
/// truncated at `trunc` R-matrix legs.
pub fn y_adjoint(z: &Element, trunc: u32) -> Element {
    let mut acc = Element::zero(1);
    for k in 0..=trunc {
        let t = z.tensor(&r_pair(k, true)); // (x, y, α, β)
        let t = t.permute(&[0, 3, 2, 1]); // (x, β, α, y)
        let t = ad_at(&t, 2); // (x, β, α ▷ y)
        let t = t.coproduct(2); // (x, β, w1, w2)
        let t = t.antipode(2, false); // (x, β, S(w1), w2)
        let t = t.merge_adjacent(1); // (x, β S(w1), w2)
        let t = ad_at(&t, 0); // (x ▷ (β S(w1)), w2)
        acc = acc.add(&t.merge_adjacent(0));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_acts_trivially() {
        // 1 ▷ y = y and y ◁ 1 = y
        let y = Element::f_pow(1, 0, 1).mul(&Element::e_pow(1, 0, 2));
        let z = Element::one(1).tensor(&y);
        assert_eq!(ad(&z), y);
        let z2 = y.tensor(&Element::one(1));
        assert_eq!(sad(&z2), y);
    }

    #[test]
    fn cartan_acts_by_conjugation() {
        // K ▷ y = K y K^{-1}; y ◁ K = K^{-1} y K
        let y = Element::e_pow(1, 0, 1);
        let k = Element::k_pow(1, 0, 1);
        let z = k.tensor(&y);
        let expected = k.mul(&y).mul(&Element::k_pow(1, 0, -1));
        assert_eq!(ad(&z), expected);
        let z2 = y.tensor(&k);
        let expected2 = Element::k_pow(1, 0, -1).mul(&y).mul(&k);
        assert_eq!(sad(&z2), expected2);
    }

    #[test]
    fn ad_is_a_module_action() {
        // (x x') ▷ y = x ▷ (x' ▷ y)
        let x = Element::e_pow(1, 0, 1);
        let x2 = Element::f_pow(1, 0, 1);
        let y = Element::k_pow(1, 0, 1);
        let lhs = ad(&x.mul(&x2).tensor(&y));
        let rhs = ad(&x.tensor(&ad(&x2.tensor(&y))));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn r_pair_zeroth_legs() {
        // k = 0 legs are the pure Cartan couplings D^{±1}
        assert_eq!(r_pair(0, true), Element::d_power(2, 0, 1, 1));
        assert_eq!(r_pair(0, false), Element::d_power(2, 0, 1, -1));
    }

    #[test]
    fn ydot_vanishing_coefficient_on_cartan() {
        // Ẏ(K^a ⊗ K^b) = (ε ⊗ ε)(K^a ⊗ K^b) = 1
        for (a, b) in [(1, 1), (2, -1), (0, 3)] {
            let z = Element::k_pow(1, 0, a).tensor(&Element::k_pow(1, 0, b));
            assert_eq!(ydot(&z), Element::one(1), "on K^{} ⊗ K^{}", a, b);
        }
    }
}
