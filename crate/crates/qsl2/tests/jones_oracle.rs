//! Independent cross-check of the state-sum engine against the Kauffman
//! bracket. The bracket is computed by brute force over all 2^c crossing
//! smoothings with a union-find loop counter, so it shares no code with the
//! ribbon-algebra evaluation it validates.

use num_bigint::BigInt;
use qsl2::diagram::{builtin, milnor, Builtin, SlicedDiagram, Token};
use qsl2::invariant::colored_jones;
use qsl2::qarith::{qint_balanced, LaurentPoly, RationalLaurent};
use qsl2::repn::RepRingElement;

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new() -> Self {
        UnionFind { parent: Vec::new() }
    }

    fn make(&mut self) -> usize {
        self.parent.push(self.parent.len());
        self.parent.len() - 1
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.parent[ra] = rb;
    }

    fn classes(&mut self) -> usize {
        (0..self.parent.len())
            .filter(|&x| self.find(x) == x)
            .count()
    }
}

/// Kauffman bracket of the clasp closure of the diagram, in the variable
/// `A = v` (so that `q = A^4` matches the engine's crossing chirality:
/// calibrated once against the kinked unknot and the trefoil, then frozen).
fn bracket(d: &SlicedDiagram) -> LaurentPoly {
    let crossings: usize = d
        .rows()
        .iter()
        .flatten()
        .filter(|t| matches!(t, Token::P | Token::M))
        .count();
    assert!(crossings <= 20, "brute-force bracket is exponential");

    let mut total = LaurentPoly::zero();
    for state in 0u32..1 << crossings {
        let mut uf = UnionFind::new();
        let mut wires: Vec<usize> = Vec::new();
        let mut a_exp: i64 = 0;
        let mut cx = 0usize;
        for row in d.rows() {
            let mut out: Vec<usize> = Vec::new();
            let mut ip = 0usize;
            for &tok in row {
                match tok {
                    Token::I => {
                        out.push(wires[ip]);
                        ip += 1;
                    }
                    Token::U => {
                        let w = uf.make();
                        out.push(w);
                        out.push(w);
                    }
                    Token::C => {
                        uf.union(wires[ip], wires[ip + 1]);
                        ip += 2;
                    }
                    Token::P | Token::M => {
                        // For a `P` crossing the A-smoothing is the identity;
                        // `M` is its mirror, so the weights swap.
                        let bit = state >> cx & 1 == 1;
                        cx += 1;
                        let sign = if tok == Token::P { 1 } else { -1 };
                        if !bit {
                            a_exp += sign;
                            out.push(wires[ip]);
                            out.push(wires[ip + 1]);
                        } else {
                            a_exp -= sign;
                            uf.union(wires[ip], wires[ip + 1]);
                            let w = uf.make();
                            out.push(w);
                            out.push(w);
                        }
                        ip += 2;
                    }
                }
            }
            wires = out;
        }
        // clasp closure joins adjacent pairs of bottom endpoints
        for pair in wires.chunks(2) {
            uf.union(pair[0], pair[1]);
        }
        let loops = uf.classes() as u64;
        // A^{a_exp} * delta^{loops - 1}, delta = -A^2 - A^{-2}, A = v^{-1}
        let delta = {
            let mut t = LaurentPoly::v_pow(2);
            t = &t + &LaurentPoly::v_pow(-2);
            t.scale(&BigInt::from(-1), 0);
            t
        };
        let term = &LaurentPoly::v_pow(a_exp) * &delta.pow(loops - 1);
        total = &total + &term;
    }
    total
}

/// The engine's all-`V_2`, 0-framed value predicted from the bracket:
/// `(-1)^{n-1} [2] (-A)^{-3w} <D>` where `w` is the sum of the
/// per-component writhes. Only the self-writhe is corrected (the engine
/// value is the 0-framed invariant, so inter-component crossings stay), and
/// the `(-1)^{n-1}` converts the bracket's loop weight `delta = -[2]` into
/// the `[2]` the engine assigns each unknot component.
fn bracket_prediction(d: &SlicedDiagram) -> RationalLaurent {
    let lk = d.linking_matrix();
    let n = lk.size();
    let w: i64 = (0..n).map(|i| lk.writhe(i)).sum();
    let mut p = &bracket(d) * &LaurentPoly::v_pow(-3 * w);
    if (w % 2 != 0) != (n % 2 == 0) {
        p.scale(&BigInt::from(-1), 0);
    }
    RationalLaurent::from_laurent(&p * &qint_balanced(2))
}

fn engine_value(d: &SlicedDiagram) -> RationalLaurent {
    let n = d.num_components();
    let colors = vec![RepRingElement::basis(2); n];
    colored_jones(d, &colors, &vec![0; n])
}

fn get(name: &str) -> SlicedDiagram {
    match builtin(name).unwrap() {
        Builtin::Diagram(d) => d,
        _ => panic!("{name} is not a plain diagram"),
    }
}

#[test]
fn bracket_normalization_on_the_unknot() {
    let d = get("unknot");
    assert_eq!(bracket(&d), LaurentPoly::one());
    assert_eq!(engine_value(&d), bracket_prediction(&d));
}

#[test]
fn bracket_matches_engine_on_hopf_link() {
    let d = get("B");
    assert_eq!(engine_value(&d), bracket_prediction(&d));
}

#[test]
fn bracket_matches_engine_on_trefoil() {
    let d = get("trefoil");
    assert_eq!(engine_value(&d), bracket_prediction(&d));
}

#[test]
fn bracket_matches_engine_on_borromean_rings() {
    let d = get("borromean");
    assert_eq!(engine_value(&d), bracket_prediction(&d));
}

#[test]
fn bracket_matches_engine_on_two_component_unlink() {
    let d = get("unlink(2)");
    assert_eq!(engine_value(&d), bracket_prediction(&d));
}

#[test]
fn bracket_matches_engine_on_kinked_unknots() {
    // Reidemeister-I kinks exercise the framing correction on both sides.
    for tok in [Token::P, Token::M] {
        let d = SlicedDiagram::new(vec![vec![Token::U], vec![tok], vec![tok]]).unwrap();
        assert_eq!(engine_value(&d), bracket_prediction(&d));
    }
}

#[test]
fn bracket_matches_engine_on_mixed_crossing_plat() {
    let d = SlicedDiagram::new(vec![
        vec![Token::U, Token::U],
        vec![Token::I, Token::M, Token::I],
        vec![Token::I, Token::P, Token::I],
        vec![Token::I, Token::M, Token::I],
        vec![Token::C, Token::I, Token::I],
    ])
    .unwrap();
    assert_eq!(engine_value(&d), bracket_prediction(&d));
}

#[test]
fn bracket_matches_engine_on_cinquefoil_plat() {
    let mut rows = vec![vec![Token::U, Token::U]];
    rows.extend(std::iter::repeat_n(vec![Token::I, Token::M, Token::I], 5));
    rows.push(vec![Token::C, Token::I, Token::I]);
    let d = SlicedDiagram::new(rows).unwrap();
    assert_eq!(engine_value(&d), bracket_prediction(&d));
}

#[test]
fn bracket_matches_engine_on_mirrored_borromean_rings() {
    let mirrored: Vec<Vec<Token>> = milnor(3)
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|&t| match t {
                    Token::P => Token::M,
                    Token::M => Token::P,
                    other => other,
                })
                .collect()
        })
        .collect();
    let d = SlicedDiagram::new(mirrored).unwrap();
    assert_eq!(engine_value(&d), bracket_prediction(&d));
}
