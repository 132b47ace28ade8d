//! The universal invariant of bottom tangles as a state sum, colored Jones
//! evaluation of closure links by slice-by-slice matrix transfer, framing
//! correction, the boundary-tangle composition formula, and the per-state
//! even-subalgebra membership test.
//!
//! Two independent evaluation paths are provided on purpose. The symbolic
//! state sum ([`universal_invariant`]) materializes the invariant as an
//! [`Element`] with one tensor slot per component; the transfer path
//! ([`colored_jones`]) never builds the symbolic element and contracts the
//! diagram row by row in chosen representations, which is the only feasible
//! route for crossing-rich diagrams.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use crate::algebra::{antipode_mono, r_pair, ybar_at, Element, SlotMono};
use crate::diagram::{kink_rows, BoundaryData, LabelSite, SlicedDiagram, Token};
use crate::qarith::{LaurentPoly, RationalLaurent};
use crate::repn::{quantum_trace, rep, Matrix, Rep, RepRingElement};

/// Sign convention for the Cartan labels on rightward-read extrema: a
/// rightward maximum carries `K^{S_EXT}`, a rightward minimum `K^{-S_EXT}`.
/// Pinned jointly with [`PIVOT`] by the cross-path equality tests.
const S_EXT: i64 = 1;

/// Pivotal element `g = K^{PIVOT}` used by the transfer path for the
/// orientation-sensitive cups and caps and the closure contraction.
const PIVOT: i64 = -1;

/// Whether the dual (upward-strand) representation uses `S^{-1}` instead of
/// `S`: `ρ*(x) = ρ(S^{±1}(x))ᵀ`.
const DUAL_S_INVERSE: bool = false;

/// A state assigns a nonnegative R-matrix leg index to every crossing,
/// indexed by crossing id.
pub type State = Vec<u32>;

/// Embed a 2-slot element into `n` slots at positions `(a, b)`.
fn embed_pair(pair: &Element, n: usize, a: usize, b: usize) -> Element {
    debug_assert_eq!(pair.slots(), 2);
    let ext = pair.tensor(&Element::one(n - 2));
    let mut rest = 2..n;
    let perm: Vec<usize> = (0..n)
        .map(|s| {
            if s == a {
                0
            } else if s == b {
                1
            } else {
                rest.next().unwrap()
            }
        })
        .collect();
    ext.permute(&perm)
}

/// The labeled-diagram contribution of a single state: one tensor slot per
/// component, labels multiplied in reading order (from the left endpoint,
/// against the orientation), with the antipode applied on upward crossing
/// passages and `K^{±1}` on rightward extrema.
pub fn state_term(d: &SlicedDiagram, state: &[u32]) -> Element {
    assert_eq!(state.len(), d.crossings().len(), "state/crossing mismatch");
    #[derive(Clone, Copy)]
    enum Site {
        Unit,
        Cross { id: usize, alpha: bool, upward: bool },
        Ext { sign: i64 },
    }
    let mut sites: Vec<Site> = Vec::new();
    let mut comp_spans: Vec<(usize, usize)> = Vec::new();
    for comp in d.components() {
        let start = sites.len();
        for site in &comp.sites {
            match *site {
                LabelSite::Crossing { id, alpha_leg, upward } => {
                    sites.push(Site::Cross { id, alpha: alpha_leg, upward });
                }
                LabelSite::Extremum { maximum, rightward } => {
                    if rightward {
                        sites.push(Site::Ext {
                            sign: if maximum { S_EXT } else { -S_EXT },
                        });
                    }
                }
            }
        }
        if sites.len() == start {
            sites.push(Site::Unit);
        }
        comp_spans.push((start, sites.len()));
    }
    let n = sites.len();
    let mut cross_slots: Vec<(Option<usize>, Option<usize>)> =
        vec![(None, None); state.len()];
    let mut upward_slots = Vec::new();
    let mut el = Element::one(n);
    for (slot, site) in sites.iter().enumerate() {
        match *site {
            Site::Cross { id, alpha, upward } => {
                let legs = &mut cross_slots[id];
                if alpha {
                    legs.0 = Some(slot);
                } else {
                    legs.1 = Some(slot);
                }
                if upward {
                    upward_slots.push(slot);
                }
            }
            Site::Ext { sign } => {
                el = el.mul(&Element::k_pow(n, slot, sign));
            }
            Site::Unit => {}
        }
    }
    for (id, &(a, b)) in cross_slots.iter().enumerate() {
        let pair = r_pair(state[id], d.crossings()[id].positive);
        el = el.mul(&embed_pair(&pair, n, a.unwrap(), b.unwrap()));
    }
    for &slot in &upward_slots {
        el = el.antipode(slot, false);
    }
    let mut out = el;
    for (ci, &(start, end)) in comp_spans.iter().enumerate() {
        for _ in 0..(end - start).saturating_sub(1) {
            out = out.merge_adjacent(ci);
        }
    }
    out
}

/// Sum of [`state_term`] over all states with entries `≤ trunc`, in parallel.
/// Exact in any representation of dimension `≤ trunc + 1`.
pub fn universal_invariant(d: &SlicedDiagram, trunc: u32) -> Element {
    let c = d.crossings().len();
    let slots = d.num_components();
    let base = trunc as usize + 1;
    let total = base.checked_pow(c as u32).expect("state space fits in usize");
    (0..total)
        .into_par_iter()
        .map(|mut ix| {
            let mut st = vec![0u32; c];
            for i in (0..c).rev() {
                st[i] = (ix % base) as u32;
                ix /= base;
            }
            state_term(d, &st)
        })
        .reduce(|| Element::zero(slots), |a, b| a.add(&b))
}

// ---------------------------------------------------------------------------
// Matrix-transfer evaluation
// ---------------------------------------------------------------------------

#[derive(Clone, Copy)]
struct Edge {
    m: u32,
    upward: bool,
}

fn edge_weight(r: &Rep, upward: bool, idx: usize) -> i64 {
    if upward {
        -r.weights[idx]
    } else {
        r.weights[idx]
    }
}

/// Action of a PBW monomial on basis index `j` of the edge space: the plain
/// representation on downward edges, `ρ(S(x))ᵀ` on upward (dual) edges.
fn slot_action(r: &Rep, upward: bool, s: &SlotMono, j: usize) -> Option<(usize, LaurentPoly)> {
    if !upward {
        return r.mono_action(s, j);
    }
    let sum = antipode_mono(s, DUAL_S_INVERSE);
    debug_assert_eq!(sum.len(), 1, "antipode of a monomial is a monomial");
    let (pre, t) = (&sum[0].0, sum[0].1);
    let i = j as i64 + t.c as i64 - t.a as i64;
    if i < 0 || i >= r.dim() as i64 {
        return None;
    }
    let (tj, c) = r.mono_action(&t, i as usize)?;
    debug_assert_eq!(tj, j);
    Some((i as usize, pre * &c))
}

/// Operator of one crossing on the two adjacent edge spaces, output already
/// in swapped order. A positive crossing applies `Σ α_k ⊗ β_k` then swaps;
/// a negative one applies `Σ β̄_k ⊗ ᾱ_k` then swaps, which is its exact
/// inverse.
fn crossing_op(e1: Edge, e2: Edge, positive: bool) -> Matrix {
    let (r1, r2) = (rep(e1.m), rep(e2.m));
    let (d1, d2) = (r1.dim(), r2.dim());
    let mut op = Matrix::zero(d2 * d1, d1 * d2);
    for k in 0..e1.m.min(e2.m) {
        let pair = r_pair(k, positive);
        for (dmat, monos, coeff) in pair.terms() {
            let coupling = dmat.get(0, 1);
            let (ml, mr) = if positive {
                (monos[0], monos[1])
            } else {
                (monos[1], monos[0])
            };
            for a in 0..d1 {
                let Some((a2, ca)) = slot_action(&r1, e1.upward, &ml, a) else {
                    continue;
                };
                for b in 0..d2 {
                    let Some((b2, cb)) = slot_action(&r2, e2.upward, &mr, b) else {
                        continue;
                    };
                    let w = coupling
                        * edge_weight(&r1, e1.upward, a2)
                        * edge_weight(&r2, e2.upward, b2);
                    let amp = &(&ca * &cb) * &LaurentPoly::v_pow(w);
                    let entry = coeff * &RationalLaurent::from_laurent(amp);
                    op.add_at(b2 * d1 + a2, a * d2 + b, &entry);
                }
            }
        }
    }
    op
}

/// Coevaluation column for a cup. The extremum is passed rightward by the
/// orientation exactly when the left leg points up; a rightward maximum
/// carries the label `K^{S_EXT}`, a leftward one the unit.
fn cup_op(m: u32, left_up: bool) -> Matrix {
    let r = rep(m);
    let d = r.dim();
    let mut op = Matrix::zero(d * d, 1);
    for j in 0..d {
        let amp = if left_up {
            LaurentPoly::v_pow(2 * S_EXT * r.weights[j])
        } else {
            LaurentPoly::one()
        };
        op.set(j * d + j, 0, RationalLaurent::from_laurent(amp));
    }
    op
}

/// Evaluation row for a cap. The extremum is rightward exactly when the left
/// leg points down; a rightward minimum carries `K^{-S_EXT}`, a leftward one
/// the unit.
fn cap_op(m: u32, left_up: bool) -> Matrix {
    let r = rep(m);
    let d = r.dim();
    let mut op = Matrix::zero(1, d * d);
    for j in 0..d {
        let amp = if left_up {
            LaurentPoly::one()
        } else {
            LaurentPoly::v_pow(-2 * S_EXT * r.weights[j])
        };
        op.set(0, j * d + j, RationalLaurent::from_laurent(amp));
    }
    op
}

/// Apply a local operator consuming `consumed` adjacent frontier factors at
/// position `p` and producing factors of the given dimensions.
fn apply_span(
    vec: Vec<RationalLaurent>,
    dims: &mut Vec<usize>,
    p: usize,
    consumed: usize,
    produced: &[usize],
    op: &Matrix,
) -> Vec<RationalLaurent> {
    let pre: usize = dims[..p].iter().product();
    let mid: usize = dims[p..p + consumed].iter().product();
    let post: usize = dims[p + consumed..].iter().product();
    let out_mid: usize = produced.iter().product();
    debug_assert_eq!(op.rows(), out_mid);
    debug_assert_eq!(op.cols(), mid);
    let mut out = vec![RationalLaurent::zero(); pre * out_mid * post];
    for o in 0..out_mid {
        for i in 0..mid {
            let c = op.get(o, i);
            if c.is_zero() {
                continue;
            }
            for a in 0..pre {
                for b in 0..post {
                    let x = &vec[(a * mid + i) * post + b];
                    if !x.is_zero() {
                        out[(a * out_mid + o) * post + b] += &(c * x);
                    }
                }
            }
        }
    }
    dims.splice(p..p + consumed, produced.iter().copied());
    out
}

/// Value of the closure link of a bottom tangle in the given irreducible
/// colors, at the diagram's blackboard framing, normalized so that the
/// unknot in `V_m` evaluates to `[m]_q = (q^m - 1)/(q - 1)`.
fn transfer_value(d: &SlicedDiagram, colors: &[u32]) -> RationalLaurent {
    assert_eq!(colors.len(), d.num_components());
    assert!(d.is_bottom_tangle(), "closure needs a bottom tangle");
    let mut dims: Vec<usize> = Vec::new();
    let mut edges: Vec<Edge> = Vec::new();
    let mut vec = vec![RationalLaurent::one()];
    for (r, row) in d.rows().iter().enumerate() {
        let mut pos = 0usize;
        let mut out_col = 0usize;
        for &tok in row {
            match tok {
                Token::I => {
                    pos += 1;
                    out_col += 1;
                }
                Token::U => {
                    let comp = d.port_component(r + 1, out_col);
                    let m = colors[comp];
                    let left_up = d.port_upward(r + 1, out_col);
                    let right_up = d.port_upward(r + 1, out_col + 1);
                    debug_assert_ne!(left_up, right_up);
                    let op = cup_op(m, left_up);
                    let md = m as usize;
                    vec = apply_span(vec, &mut dims, pos, 0, &[md, md], &op);
                    edges.insert(pos, Edge { m, upward: left_up });
                    edges.insert(pos + 1, Edge { m, upward: right_up });
                    pos += 2;
                    out_col += 2;
                }
                Token::C => {
                    let e = edges[pos];
                    let op = cap_op(e.m, e.upward);
                    vec = apply_span(vec, &mut dims, pos, 2, &[], &op);
                    edges.drain(pos..pos + 2);
                }
                Token::P | Token::M => {
                    let (e1, e2) = (edges[pos], edges[pos + 1]);
                    let op = crossing_op(e1, e2, tok == Token::P);
                    let out = [e2.m as usize, e1.m as usize];
                    vec = apply_span(vec, &mut dims, pos, 2, &out, &op);
                    edges.swap(pos, pos + 1);
                    pos += 2;
                    out_col += 2;
                }
            }
        }
    }
    // Close each component pair with the quantum-trace contraction: the
    // closing arc inserts the pivot K^{PIVOT}.
    for &m in colors {
        debug_assert!(!edges[0].upward && edges[1].upward);
        let r = rep(m);
        let d = r.dim();
        let mut op = Matrix::zero(1, d * d);
        for j in 0..d {
            let amp = LaurentPoly::v_pow(2 * PIVOT * r.weights[j]);
            op.set(0, j * d + j, RationalLaurent::from_laurent(amp));
        }
        vec = apply_span(vec, &mut dims, 0, 2, &[], &op);
        edges.drain(0..2);
    }
    debug_assert_eq!(vec.len(), 1);
    vec.pop().unwrap()
}

fn rat_pow(x: &RationalLaurent, e: i64) -> RationalLaurent {
    let b = if e < 0 {
        x.inverse().expect("framing factor is invertible")
    } else {
        x.clone()
    };
    let mut acc = RationalLaurent::one();
    for _ in 0..e.unsigned_abs() {
        acc = &acc * &b;
    }
    acc
}

/// Multiplier of the `V_m`-colored value per unit of framing: the value of a
/// positively kinked unknot divided by the unkinked one.
pub fn kink_factor(m: u32) -> RationalLaurent {
    static CACHE: OnceLock<Mutex<HashMap<u32, RationalLaurent>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&m) {
        return hit.clone();
    }
    let plain = SlicedDiagram::new(vec![vec![Token::U]]).unwrap();
    let mut rows = vec![vec![Token::U]];
    rows.extend(kink_rows(2, 0, Token::P));
    let kinked = SlicedDiagram::new(rows).unwrap();
    let f = &transfer_value(&kinked, &[m]) / &transfer_value(&plain, &[m]);
    cache.lock().unwrap().insert(m, f.clone());
    f
}

fn framing_correction(d: &SlicedDiagram, colors: &[u32], target: &[i64]) -> RationalLaurent {
    let lk = d.linking_matrix();
    let mut f = RationalLaurent::one();
    for (i, &m) in colors.iter().enumerate() {
        f = &f * &rat_pow(&kink_factor(m), target[i] - lk.writhe(i));
    }
    f
}

/// Colored Jones value of the closure link: matrix-transfer evaluation in
/// each combination of irreducible constituents of the colors, corrected to
/// the target framings, combined by linearity.
pub fn colored_jones(
    d: &SlicedDiagram,
    colors: &[RepRingElement],
    target_framing: &[i64],
) -> RationalLaurent {
    let n = d.num_components();
    assert_eq!(colors.len(), n, "color/component mismatch");
    assert_eq!(target_framing.len(), n, "framing/component mismatch");
    let supports: Vec<Vec<(u32, RationalLaurent)>> = colors
        .iter()
        .map(|c| c.terms().map(|(m, x)| (m, x.clone())).collect())
        .collect();
    let mut combos: Vec<(Vec<u32>, RationalLaurent)> =
        vec![(Vec::new(), RationalLaurent::one())];
    for sup in &supports {
        let mut next = Vec::with_capacity(combos.len() * sup.len());
        for (ms, c) in &combos {
            for (m, x) in sup {
                let mut ms2 = ms.clone();
                ms2.push(*m);
                next.push((ms2, c * x));
            }
        }
        combos = next;
    }
    combos
        .into_par_iter()
        .map(|(ms, coeff)| {
            let v = transfer_value(d, &ms);
            let f = framing_correction(d, &ms, target_framing);
            &(&v * &f) * &coeff
        })
        .reduce(RationalLaurent::zero, |a, b| &a + &b)
}

/// Colored Jones value through the symbolic universal invariant and the
/// quantum trace; the boolean flags a truncation that may be inexact for the
/// requested colors.
pub fn jones_via_universal(
    d: &SlicedDiagram,
    colors: &[u32],
    trunc: u32,
    target_framing: &[i64],
) -> (RationalLaurent, bool) {
    let el = universal_invariant(d, trunc);
    let t = quantum_trace(&el, colors);
    let f = framing_correction(d, colors, target_framing);
    let truncated = colors.iter().any(|&m| trunc + 1 < m);
    (&t * &f, truncated)
}

/// The pair contractions and block multiplications of the boundary formula:
/// `μ^{[g_1,…,g_n]} ∘ Ȳ^{⊗g}` on a 2g-slot element.
pub fn apply_boundary_maps(z: Element, bd: &BoundaryData) -> Element {
    debug_assert_eq!(z.slots(), 2 * bd.g);
    let mut z = z;
    for p in 0..bd.g {
        z = ybar_at(&z, p);
    }
    let mut base = 0usize;
    for &gi in &bd.partition {
        for _ in 0..gi.saturating_sub(1) {
            z = z.merge_adjacent(base);
        }
        base += 1;
    }
    z
}

/// Universal invariant of the bottom tangle presented by boundary data,
/// computed through the clasp-closed tangle. The boundary maps are linear,
/// so they are pushed inside the state sum: per-state terms stay small,
/// which keeps the symbolic blow-up of the coproducts in check.
pub fn boundary_invariant(bd: &BoundaryData, trunc: u32) -> Element {
    let c = bd.tangle.crossings().len();
    let base = trunc as usize + 1;
    let total = base.checked_pow(c as u32).expect("state space fits in usize");
    (0..total)
        .into_par_iter()
        .map(|mut ix| {
            let mut st = vec![0u32; c];
            for i in (0..c).rev() {
                st[i] = (ix % base) as u32;
                ix /= base;
            }
            apply_boundary_maps(state_term(&bd.tangle, &st), bd)
        })
        .reduce(|| Element::zero(bd.partition.len()), |a, b| a.add(&b))
}

/// Whether a single state's contribution to the boundary formula lands in
/// the even integral subalgebra tensor power; on failure returns the
/// offending term and reduced coefficient.
pub fn per_state_membership(
    bd: &BoundaryData,
    state: &[u32],
) -> (bool, Option<(Vec<SlotMono>, RationalLaurent)>) {
    let z = apply_boundary_maps(state_term(&bd.tangle, state), bd);
    match z.span_failure() {
        None => (true, None),
        Some(c) => (false, Some(c)),
    }
}

/// Run [`per_state_membership`] over every state with entries at most
/// `trunc`, in parallel. Returns the number of states checked and the first
/// failing state in enumeration order, if any.
pub fn membership_sweep(bd: &BoundaryData, trunc: u32) -> (usize, Option<State>) {
    let c = bd.tangle.crossings().len();
    let base = trunc as usize + 1;
    let total = base.checked_pow(c as u32).expect("state space fits in usize");
    let failure = (0..total)
        .into_par_iter()
        .filter_map(|mut ix| {
            let mut st = vec![0u32; c];
            for i in (0..c).rev() {
                st[i] = (ix % base) as u32;
                ix /= base;
            }
            match per_state_membership(bd, &st) {
                (true, _) => None,
                (false, _) => Some(st),
            }
        })
        .min();
    (total, failure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ribbon;
    use crate::diagram::{builtin, Builtin};
    use crate::qarith::qint_balanced;
    use crate::repn::evaluate;

    fn get(name: &str) -> SlicedDiagram {
        match builtin(name).unwrap() {
            Builtin::Diagram(d) => d,
            Builtin::Boundary(_) => panic!("{name} is boundary data"),
        }
    }

    fn vm(m: u32) -> RepRingElement {
        RepRingElement::basis(m)
    }

    #[test]
    fn clasp_state_terms_match_closed_form() {
        // (-1)^{m+n} q^{-n+2mn} D^{-2} (F̃^{(m)} K^{-2n} e^n ⊗ F̃^{(n)} K^{-2m} e^m)
        let b = get("B");
        for m in 0..=2u32 {
            for n in 0..=2u32 {
                let got = state_term(&b, &[m, n]);
                let sign = if (m + n) % 2 == 0 { 1 } else { -1 };
                let scale = &RationalLaurent::from_int(sign)
                    * &RationalLaurent::q_pow(-(n as i64) + 2 * (m as i64) * n as i64);
                let expected = Element::d_power(2, 0, 1, -2)
                    .mul(&Element::f_tilde(2, 0, m))
                    .mul(&Element::k_pow(2, 0, -2 * n as i64))
                    .mul(&Element::e_pow(2, 0, n))
                    .mul(&Element::f_tilde(2, 1, n))
                    .mul(&Element::k_pow(2, 1, -2 * m as i64))
                    .mul(&Element::e_pow(2, 1, m))
                    .scale(&scale);
                assert_eq!(got, expected, "state (m, n) = ({m}, {n})");
            }
        }
    }

    #[test]
    fn unknot_invariant_is_one() {
        assert_eq!(universal_invariant(&get("unknot"), 3), Element::one(1));
        assert_eq!(universal_invariant(&get("unlink(2)"), 2), Element::one(2));
    }

    #[test]
    fn state_d_matrix_equals_linking() {
        for name in ["B", "trefoil", "borromean"] {
            let d = get(name);
            let want = d.linking_matrix().to_coupling_matrix();
            let c = d.crossings().len();
            let states: Vec<Vec<u32>> = vec![
                vec![0; c],
                vec![1; c],
                (0..c as u32).map(|i| i % 2).collect(),
            ];
            for st in states {
                let term = state_term(&d, &st);
                for (dm, _, _) in term.terms() {
                    assert_eq!(*dm, want, "{name} state {st:?}");
                }
            }
        }
    }

    #[test]
    fn unknot_jones_is_quantum_integer() {
        let u = get("unknot");
        for m in 1..=4u32 {
            let v = colored_jones(&u, &[vm(m)], &[0]);
            assert_eq!(v, RationalLaurent::from_laurent(qint_balanced(m as i64)));
        }
    }

    #[test]
    fn kink_factor_is_ribbon_scalar() {
        for m in 1..=3u32 {
            let f = kink_factor(m);
            let r = evaluate(&ribbon(m, false), &[m])
                .as_scalar()
                .expect("ribbon acts by scalar");
            let rinv = evaluate(&ribbon(m, true), &[m])
                .as_scalar()
                .expect("ribbon acts by scalar");
            assert!(
                f == r || f == rinv,
                "kink factor on V_{m}: {f} vs ribbon {r} / {rinv}"
            );
        }
    }

    #[test]
    fn framing_shift_multiplies_by_kink_factor() {
        let t = get("trefoil");
        let v0 = colored_jones(&t, &[vm(2)], &[0]);
        let v1 = colored_jones(&t, &[vm(2)], &[1]);
        assert_eq!(v1, &v0 * &kink_factor(2));
    }

    #[test]
    fn paths_agree_on_small_examples() {
        for (name, m) in [("unknot", 3u32), ("B", 2), ("trefoil", 2)] {
            let d = get(name);
            let colors: Vec<u32> = vec![m; d.num_components()];
            let framing = vec![0i64; d.num_components()];
            let rings: Vec<RepRingElement> = colors.iter().map(|&c| vm(c)).collect();
            let fast = colored_jones(&d, &rings, &framing);
            let (slow, truncated) = jones_via_universal(&d, &colors, m, &framing);
            assert!(!truncated);
            assert_eq!(fast, slow, "{name} with V_{m}");
        }
    }

    #[test]
    fn transfer_is_isotopy_invariant() {
        for name in ["B", "trefoil"] {
            let d = get(name);
            let rings: Vec<RepRingElement> =
                (0..d.num_components()).map(|_| vm(2)).collect();
            let framing = vec![0i64; d.num_components()];
            let base = colored_jones(&d, &rings, &framing);
            assert_eq!(
                colored_jones(&d.with_identity_row(1), &rings, &framing),
                base
            );
            for flip in [false, true] {
                assert_eq!(
                    colored_jones(&d.with_zigzag(1, 0, flip), &rings, &framing),
                    base,
                    "{name} zigzag flip={flip}"
                );
            }
        }
    }

    #[test]
    fn hopf_truncation_stabilizes() {
        let b = get("B");
        let (a, _) = jones_via_universal(&b, &[2, 2], 1, &[0, 0]);
        let (c, _) = jones_via_universal(&b, &[2, 2], 3, &[0, 0]);
        assert_eq!(a, c);
    }

    // Summing the composed boundary maps over all states with entries <= 2
    // takes several minutes even in parallel; the full check runs in the
    // acceptance suite. The default run keeps this behind `--ignored`.
    #[test]
    #[ignore = "slow; exercised by the acceptance suite"]
    fn boundary_data_reproduces_trefoil() {
        let data = match builtin("trefoil_boundary_data").unwrap() {
            Builtin::Boundary(d) => d,
            _ => panic!("expected boundary data"),
        };
        let t = get("trefoil");
        let el = boundary_invariant(&data, 2);
        let traced = quantum_trace(&el, &[2]);
        // the boundary tangle is 0-framed by construction
        let direct = colored_jones(&t, &[vm(2)], &[0]);
        assert_eq!(traced, direct);
    }

    #[test]
    fn zero_state_membership_on_trefoil_data() {
        let data = match builtin("trefoil_boundary_data").unwrap() {
            Builtin::Boundary(d) => d,
            _ => panic!("expected boundary data"),
        };
        let c = data.tangle.crossings().len();
        let (ok, cert) = per_state_membership(&data, &vec![0; c]);
        assert!(ok, "zero state failed: {cert:?}");
        let (ok, cert) = per_state_membership(&data, &vec![1; c]);
        assert!(ok, "all-ones state failed: {cert:?}");
    }

    /// J_{M_n} with all components colored by P̃'_1 equals
    /// (-1)^n q^{-2n+4} Φ1^{n-2} Φ2^{n-2} Φ3 Φ4^{n-3}.
    #[test]
    fn milnor_links_match_closed_form() {
        use crate::qarith::cyclotomic;
        use crate::repn::expand_ptilde;
        for n in [3usize, 4] {
            let d = get(&format!("milnor({n})"));
            let val = colored_jones(&d, &vec![expand_ptilde(1); n], &vec![0; n]);
            let mut t = LaurentPoly::one();
            for _ in 0..n - 2 {
                t = &(&t * &cyclotomic(1)) * &cyclotomic(2);
            }
            t = &t * &cyclotomic(3);
            for _ in 0..n - 3 {
                t = &t * &cyclotomic(4);
            }
            let sign = if n % 2 == 0 { 1 } else { -1 };
            let expected = &(&RationalLaurent::from_laurent(t)
                * &RationalLaurent::q_pow(4 - 2 * n as i64))
                * &RationalLaurent::from_int(sign);
            assert_eq!(val, expected, "milnor({n})");
        }
    }

    /// Deleting any single component of the Brunnian diagram (coloring it by
    /// the trivial representation) leaves an unlink.
    #[test]
    fn milnor_is_brunnian_under_deletion() {
        use crate::qarith::qint_balanced;
        let d = get("milnor(3)");
        let two = RationalLaurent::from_laurent(qint_balanced(2));
        let unlink2 = &two * &two;
        for del in 0..3 {
            let cols: Vec<RepRingElement> = (0..3)
                .map(|i| RepRingElement::basis(if i == del { 1 } else { 2 }))
                .collect();
            let val = colored_jones(&d, &cols, &[0, 0, 0]);
            assert_eq!(val, unlink2, "deleting component {del}");
        }
    }

    /// The Borromean rings are amphichiral: the all-V_2 value is invariant
    /// under v -> v^{-1}.
    #[test]
    fn borromean_value_is_mirror_symmetric() {
        let d = get("borromean");
        let val = colored_jones(&d, &[vm(2), vm(2), vm(2)], &[0, 0, 0]);
        let p = val.as_laurent().expect("link value is polynomial");
        let mirrored = LaurentPoly::from_terms(p.terms().map(|(e, c)| (-e, c.clone())));
        assert_eq!(*p, mirrored);
    }
}
