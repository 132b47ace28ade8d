//! Ideals of `ℤ[q, q^{-1}]` used by the divisibility statement for the
//! `P̃'_l`-colored values of 0-framed boundary links: the ideals `I_l`, the
//! composite target ideal with its scalar prefactor, principal cyclotomic
//! bounds, and a three-stage membership decision with machine-checkable
//! certificates.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::diagram::SlicedDiagram;
use crate::invariant::colored_jones;
use crate::qarith::{
    factor_cyclotomic, qbrace, qbrace_falling, qfact, CycloFactorization, LaurentPoly,
    QArithError, RationalLaurent,
};
use crate::repn::expand_ptilde;

/// A finitely generated ideal of `ℤ[q, q^{-1}]` together with a principal
/// ideal known to contain it (a product of cyclotomic polynomials).
#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub generators: Vec<LaurentPoly>,
    /// Generator of a principal ideal containing this one; membership in it
    /// is a cheap necessary condition.
    pub principal_bound: LaurentPoly,
    pub description: String,
}

impl IdealSpec {
    fn new(generators: Vec<LaurentPoly>, principal_bound: LaurentPoly, description: String) -> Self {
        for g in &generators {
            assert!(
                g.is_zero() || g.exact_div(&principal_bound).is_ok(),
                "generator {g} of {description} escapes its principal bound {principal_bound}"
            );
        }
        IdealSpec {
            generators,
            principal_bound,
            description,
        }
    }

    /// The ideal is all of `ℤ[q, q^{-1}]`.
    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(|g| g.is_unit_monomial())
    }
}

/// Multiplicity of `Φ_m` in the principal bound for `I_l`:
/// `f(l, m) = max(0, ⌊(l+1)/m⌋ - 1)`.
fn phi_multiplicity(l: u32, m: u32) -> u32 {
    ((l + 1) / m).saturating_sub(1)
}

/// The ideal `I_l` generated by `{l-k}_q! {k}_q!` for `k = 0, …, l`, bounded
/// by the principal ideal `( ∏_m Φ_m(q)^{f(l,m)} )`.
pub fn ideal_il(l: u32) -> IdealSpec {
    let generators: Vec<LaurentPoly> = (0..=l)
        .map(|k| &qfact(l - k) * &qfact(k))
        .collect();
    let mut bound = LaurentPoly::one();
    for m in 1..=l + 1 {
        let e = phi_multiplicity(l, m);
        if e > 0 {
            bound = &bound * &crate::qarith::cyclotomic(m).pow(e as u64);
        }
    }
    IdealSpec::new(generators, bound, format!("I_{l}"))
}

/// The scalar prefactor `{2l+1}_{q,l+1} / {1}_q`, an exact division
/// (`= 1` at `l = 0`).
pub fn prefactor(l: u32) -> LaurentPoly {
    qbrace_falling(2 * l as i64 + 1, l + 1)
        .exact_div(&qbrace(1))
        .expect("{1}_q divides the falling product")
}

/// Indices attaining the maximum color (the statement leaves the choice
/// among ties open).
pub fn maximal_indices(ls: &[u32]) -> Vec<usize> {
    let max = *ls.iter().max().expect("at least one color");
    ls.iter()
        .enumerate()
        .filter(|&(_, &l)| l == max)
        .map(|(i, _)| i)
        .collect()
}

/// The target ideal `({2l_j+1}_{q,l_j+1}/{1}_q) · I_{l_1} ⋯ Î_{l_j} ⋯ I_{l_n}`
/// for a given omitted index `j` (which must attain the maximum).
pub fn theorem_ideal_for(ls: &[u32], j: usize) -> IdealSpec {
    assert!(ls[j] == *ls.iter().max().unwrap(), "omitted index must be maximal");
    let pre = prefactor(ls[j]);
    let mut generators = vec![pre.clone()];
    let mut bound = pre;
    let mut parts = Vec::new();
    for (i, &l) in ls.iter().enumerate() {
        if i == j {
            continue;
        }
        let ideal = ideal_il(l);
        let mut next = Vec::new();
        for g in &generators {
            for h in &ideal.generators {
                let prod = g * h;
                if !next.contains(&prod) {
                    next.push(prod);
                }
            }
        }
        generators = next;
        bound = &bound * &ideal.principal_bound;
        parts.push(format!("I_{l}"));
    }
    let description = format!(
        "({{{}}}_{{q,{}}}/{{1}}_q)·{}",
        2 * ls[j] + 1,
        ls[j] + 1,
        if parts.is_empty() {
            "(1)".to_string()
        } else {
            parts.join("·")
        }
    );
    IdealSpec::new(generators, bound, description)
}

/// The target ideal with the tie among maximal colors broken by the smallest
/// index.
pub fn theorem_ideal(ls: &[u32]) -> IdealSpec {
    theorem_ideal_for(ls, maximal_indices(ls)[0])
}

/// One term of a membership certificate: `coeff · q^{q_shift} · g_{generator}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinationTerm {
    pub generator: usize,
    pub q_shift: i64,
    pub coeff: BigInt,
}

/// Missing cyclotomic multiplicity certificate for a failed necessary
/// condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deficit {
    pub m: u32,
    pub required: u32,
    pub found: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// In the ideal, with an explicit integer combination of shifted
    /// generators that reassembles the queried value exactly.
    Member { combination: Vec<CombinationTerm> },
    /// Provably not in the ideal.
    NotMember { reason: String, deficit: Option<Deficit> },
    /// The bounded search was exhausted without a certificate either way.
    Unknown { window: i64 },
}

impl Verdict {
    pub fn is_member(&self) -> bool {
        matches!(self, Verdict::Member { .. })
    }
}

/// Default shift window for the lattice search: twice the degree span of the
/// query in `q`.
pub fn default_window(p: &LaurentPoly) -> i64 {
    (p.degree_span() / 2).max(4)
}

/// Coefficient vector of a Laurent polynomial in `q`, as (lowest q-exponent,
/// dense coefficients). Requires all `v`-exponents divisible by 4.
fn q_vector(p: &LaurentPoly) -> (i64, Vec<BigInt>) {
    debug_assert!(p.is_q_polynomial() && !p.is_zero());
    let lo = p.min_exp().unwrap() / 4;
    let hi = p.max_exp().unwrap() / 4;
    let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
    for (&e, c) in p.terms() {
        coeffs[(e / 4 - lo) as usize] = c.clone();
    }
    (lo, coeffs)
}

/// Decide membership of `p` in the ideal.
///
/// Three stages: (1) the necessary cyclotomic condition against the
/// principal bound, with a deficit certificate on failure; (2) exact search
/// for an integer combination of the generators shifted by `q^t`,
/// `|t| ≤ window`, by integer row reduction (Hermite form) over the finite
/// exponent range; (3) `Unknown` when the window is exhausted.
pub fn member(p: &RationalLaurent, ideal: &IdealSpec, window: i64) -> Verdict {
    if p.is_zero() {
        return Verdict::Member {
            combination: Vec::new(),
        };
    }
    let poly = match p.as_laurent() {
        Some(poly) => poly,
        None => {
            return Verdict::NotMember {
                reason: "value has a nontrivial denominator".into(),
                deficit: None,
            }
        }
    };
    if !poly.is_q_polynomial() {
        return Verdict::NotMember {
            reason: "value is not a Laurent polynomial in q".into(),
            deficit: None,
        };
    }

    // Stage 1: cyclotomic multiplicities against the principal bound.
    if !ideal.principal_bound.is_one() {
        let b = cyclo_bound_for(&ideal.principal_bound);
        let need = factor_cyclotomic(&ideal.principal_bound, b).expect("bound is nonzero");
        let have = factor_cyclotomic(poly, b).expect("value is nonzero");
        for (&m, &e) in &need.cyclotomic_exponents {
            let found = have.cyclotomic_exponents.get(&m).copied().unwrap_or(0);
            if found < e {
                return Verdict::NotMember {
                    reason: format!("missing cyclotomic factor Φ_{m}^{e} (found Φ_{m}^{found})"),
                    deficit: Some(Deficit {
                        m,
                        required: e,
                        found,
                    }),
                };
            }
        }
    }

    // Stage 2: bounded lattice search.
    match lattice_member(poly, &ideal.generators, window) {
        Some(combination) => Verdict::Member { combination },
        None => Verdict::Unknown { window },
    }
}

/// Peeling bound that provably captures every cyclotomic factor of `p`:
/// `Φ_m | p` forces `deg Φ_m = φ(m) ≤ deg p`, and `φ(m) ≥ √(m/2)`.
fn cyclo_bound_for(p: &LaurentPoly) -> u32 {
    let d = (p.degree_span() / 4).unsigned_abs().max(1);
    (2 * d * d + 1) as u32
}

/// Search for `p = Σ c_{i,t} q^t g_i` with integer coefficients and
/// `|t| ≤ window`, returning the combination if one exists in the window.
fn lattice_member(
    p: &LaurentPoly,
    generators: &[LaurentPoly],
    window: i64,
) -> Option<Vec<CombinationTerm>> {
    let (p_lo, target) = q_vector(p);
    let p_span = target.len() as i64 - 1;

    // Row per (generator, shift), columns over a fixed exponent range
    // relative to the lowest exponent of p.
    let mut meta: Vec<(usize, i64)> = Vec::new();
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    let col_lo = -window;
    let col_hi = p_span + window;
    let ncols = (col_hi - col_lo + 1) as usize;
    for (gi, g) in generators.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let (g_lo, gv) = q_vector(g);
        for t in -window..=window {
            // exponent of gv[0] in the column frame is t - window offset
            let start = t - col_lo;
            if start < 0 || start + gv.len() as i64 - 1 > col_hi - col_lo {
                continue;
            }
            let mut row = vec![BigInt::zero(); ncols];
            for (k, c) in gv.iter().enumerate() {
                row[start as usize + k] = c.clone();
            }
            // the row represents q^{p_lo + t - g_lo} * g_i
            meta.push((gi, p_lo + t - g_lo));
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return None;
    }

    // Hermite reduction of the row lattice, carrying the transform back to
    // the original rows.
    let nrows = rows.len();
    let mut trans: Vec<Vec<BigInt>> = (0..nrows)
        .map(|i| {
            let mut u = vec![BigInt::zero(); nrows];
            u[i] = BigInt::from(1);
            u
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0usize;
    for col in 0..ncols {
        loop {
            // smallest nonzero entry in this column at or below r
            let best = (r..nrows)
                .filter(|&i| !rows[i][col].is_zero())
                .min_by_key(|&i| rows[i][col].magnitude().clone());
            let Some(b) = best else { break };
            rows.swap(r, b);
            trans.swap(r, b);
            let mut done = true;
            for i in r + 1..nrows {
                if rows[i][col].is_zero() {
                    continue;
                }
                let f = rows[i][col].div_floor(&rows[r][col]);
                if !f.is_zero() {
                    for c in col..ncols {
                        let d = &f * &rows[r][c];
                        rows[i][c] -= d;
                    }
                    for c in 0..nrows {
                        let d = &f * &trans[r][c];
                        trans[i][c] -= d;
                    }
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if r < nrows && !rows[r][col].is_zero() {
            if rows[r][col].is_negative() {
                for c in rows[r].iter_mut() {
                    *c = -&*c;
                }
                for c in trans[r].iter_mut() {
                    *c = -&*c;
                }
            }
            pivots.push((r, col));
            r += 1;
            if r == nrows {
                break;
            }
        }
    }

    // Reduce the target against the Hermite rows (embedded into the same
    // column frame as the generator rows).
    let mut b = vec![BigInt::zero(); ncols];
    for (k, c) in target.into_iter().enumerate() {
        b[(k as i64 - col_lo) as usize] = c;
    }
    let mut combo = vec![BigInt::zero(); nrows];
    for &(pr, pc) in &pivots {
        if b[pc].is_zero() {
            continue;
        }
        let (f, rem) = b[pc].div_rem(&rows[pr][pc]);
        if !rem.is_zero() {
            return None;
        }
        for c in pc..ncols {
            let d = &f * &rows[pr][c];
            b[c] -= d;
        }
        for c in 0..nrows {
            let d = &f * &trans[pr][c];
            combo[c] += d;
        }
    }
    if b.iter().any(|c| !c.is_zero()) {
        return None;
    }

    let combination: Vec<CombinationTerm> = combo
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| CombinationTerm {
            generator: meta[i].0,
            q_shift: meta[i].1,
            coeff: c,
        })
        .collect();
    // The certificate is rechecked before being returned, so a `Member`
    // verdict is sound by construction.
    let mut check = LaurentPoly::zero();
    for t in &combination {
        let mut g = generators[t.generator].shifted(4 * t.q_shift);
        g.scale(&t.coeff, 0);
        check = &check + &g;
    }
    assert_eq!(&check, p, "membership certificate failed to reassemble");
    Some(combination)
}

/// Outcome of checking one link value against the target ideal.
#[derive(Clone, Debug)]
pub struct Report {
    /// The computed `P̃'`-colored value.
    pub value: RationalLaurent,
    /// Cyclotomic factorization of the value (when it is a nonzero Laurent
    /// polynomial).
    pub factored: Option<CycloFactorization>,
    pub colors: Vec<u32>,
    /// Whether the divisibility statement applies (it constrains 0-framed
    /// boundary links only); when false the verdicts are informational.
    pub claimed: bool,
    /// One verdict per admissible choice of omitted maximal index.
    pub verdicts: Vec<(usize, IdealSpec, Verdict)>,
}

impl Report {
    pub fn all_member(&self) -> bool {
        self.verdicts.iter().all(|(_, _, v)| v.is_member())
    }
}

/// Compute the `(P̃'_{l_1}, …, P̃'_{l_n})`-colored value of the closure of
/// `d` at 0-framing and test it against the target ideal for every
/// admissible omitted index.
pub fn report(d: &SlicedDiagram, ls: &[u32], boundary: bool) -> Result<Report, QArithError> {
    assert_eq!(ls.len(), d.num_components(), "one color per component");
    let colors: Vec<_> = ls.iter().map(|&l| expand_ptilde(l)).collect();
    let value = colored_jones(d, &colors, &vec![0; ls.len()]);
    let factored = match value.as_laurent() {
        Some(p) if !p.is_zero() => Some(factor_cyclotomic(p, cyclo_bound_for(p))?),
        _ => None,
    };
    let window = value
        .as_laurent()
        .map(|p| if p.is_zero() { 4 } else { default_window(p) })
        .unwrap_or(4);
    let verdicts = maximal_indices(ls)
        .into_iter()
        .map(|j| {
            let ideal = theorem_ideal_for(ls, j);
            let verdict = member(&value, &ideal, window);
            (j, ideal, verdict)
        })
        .collect();
    Ok(Report {
        value,
        factored,
        colors: ls.to_vec(),
        claimed: boundary,
        verdicts,
    })
}
