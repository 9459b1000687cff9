use proptest::prelude::*;

use twisted_n2::algebra::{Algebra, AlgebraElement, BasisElement, BasisKind, Parity};
use twisted_n2::analysis::echelon::{bareiss_rank, Echelon};
use twisted_n2::expr::{
    parse_ast, parse_element, parse_scalar, parse_vector, render_ast, render_coefficient,
    render_element, render_vector, Ast,
};
use twisted_n2::repr::{
    act, module_axiom_defect, Family, Letter, ModuleSpec, ModuleVector, PolyVector, UPoly,
};
use twisted_n2::scalar::{Coefficient, HalfInt, Sign, Var};

const VARS: [Var; 5] = [Var::S, Var::A, Var::B, Var::C, Var::Sigma];

/// Small polynomials in s, a, b, c, sigma with Gaussian integer coefficients.
fn poly() -> impl Strategy<Value = Coefficient> {
    prop::collection::vec(
        (-3i64..=3, 0i64..=1, prop::collection::vec(0i64..=2, 5)),
        1..4,
    )
    .prop_map(|terms| {
        let mut acc = Coefficient::zero();
        for (c, im, exps) in terms {
            let mut t = Coefficient::from_int(c);
            if im == 1 {
                t = &t * &Coefficient::i();
            }
            for (v, e) in VARS.iter().zip(exps) {
                t = &t * &Coefficient::var(*v).powi(e).unwrap();
            }
            acc = &acc + &t;
        }
        acc
    })
}

fn coeff() -> impl Strategy<Value = Coefficient> {
    (poly(), poly()).prop_map(|(n, d)| {
        if d.is_zero() {
            n
        } else {
            n.arith_div(&d).unwrap()
        }
    })
}

fn basis_element(bound: i64) -> impl Strategy<Value = BasisElement> {
    (0usize..3, -bound..=bound).prop_filter_map("kind/index", |(k, twice)| {
        let kind = [BasisKind::L, BasisKind::I, BasisKind::G][k];
        BasisElement::new(kind, HalfInt::from_twice(twice)).ok()
    })
}

fn element(bound: i64) -> impl Strategy<Value = AlgebraElement> {
    prop::collection::vec((basis_element(bound), -4i64..=4), 0..4).prop_map(|terms| {
        let mut x = AlgebraElement::zero();
        for (b, c) in terms {
            x.add_term(b, &Coefficient::from_int(c));
        }
        x
    })
}

fn homogeneous(bound: i64, parity: Parity) -> impl Strategy<Value = AlgebraElement> {
    element(bound).prop_map(move |x| {
        let mut out = AlgebraElement::zero();
        for (b, c) in x.terms() {
            if b.parity() == parity {
                out.add_term(*b, c);
            }
        }
        out
    })
}

fn ast() -> impl Strategy<Value = Ast> {
    let leaf = prop_oneof![
        (0i64..20).prop_map(|n| Ast::Int(n.into())),
        prop::sample::select(VARS.to_vec()).prop_map(Ast::Param),
        Just(Ast::ImaginaryUnit),
        prop::sample::select(vec!['d', 'x', 'y']).prop_map(Ast::PolyVar),
        (0usize..3, -6i64..=6).prop_map(|(k, t)| {
            Ast::Basis(
                [BasisKind::L, BasisKind::I, BasisKind::G][k],
                HalfInt::from_twice(t),
            )
        }),
        (prop::bool::ANY, -6i64..=6).prop_map(|(x, t)| {
            Ast::Weight(
                if x { Letter::X } else { Letter::Y },
                HalfInt::from_twice(t),
            )
        }),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Ast::Neg(Box::new(a))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ast::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ast::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ast::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Ast::Div(Box::new(a), Box::new(b))),
            (inner, 0i64..4).prop_map(|(a, e)| Ast::Pow(Box::new(a), e)),
        ]
    })
}

fn upoly() -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-3i64..=3, 0..4)
        .prop_map(|cs| UPoly::from_coeffs(cs.into_iter().map(Coefficient::from_int).collect()))
}

fn poly_vector() -> impl Strategy<Value = ModuleVector> {
    (upoly(), upoly()).prop_map(|(e, o)| ModuleVector::Poly(PolyVector::new(e, o)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(x in coeff(), y in coeff(), z in coeff()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
            prop_assert_eq!((&y * &x).arith_div(&x).unwrap(), y.clone());
        }
    }

    #[test]
    fn canonical_form_is_idempotent(x in coeff()) {
        let again = Coefficient::from_fraction(x.numer().clone(), x.denom().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(parse_scalar(&render_coefficient(&x)).unwrap(), x);
    }

    #[test]
    fn lambda_powers_add(p in -6i64..=6, q in -6i64..=6, t in prop::bool::ANY) {
        let spec = ModuleSpec::m(if t { Sign::Plus } else { Sign::Minus });
        let (p, q) = (HalfInt::from_twice(p), HalfInt::from_twice(q));
        let lhs = &spec.lambda_pow(p).unwrap() * &spec.lambda_pow(q).unwrap();
        prop_assert_eq!(lhs, spec.lambda_pow(p + q).unwrap());
    }

    #[test]
    fn parser_round_trip(a in ast()) {
        let once = parse_ast(&render_ast(&a)).unwrap();
        let twice = parse_ast(&render_ast(&once)).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn element_render_round_trip(x in element(6)) {
        prop_assert_eq!(parse_element(&render_element(&x)).unwrap(), x);
    }

    #[test]
    fn vector_render_round_trip(v in poly_vector()) {
        prop_assert_eq!(parse_vector(&render_vector(Family::M, &v), Family::M).unwrap(), v);
    }

    #[test]
    fn super_antisymmetry(px in prop::bool::ANY, py in prop::bool::ANY, seed in (element(6), element(6))) {
        let parity = |odd| if odd { Parity::Odd } else { Parity::Even };
        let keep = |x: &AlgebraElement, p: Parity| {
            let mut out = AlgebraElement::zero();
            for (b, c) in x.terms() {
                if b.parity() == p {
                    out.add_term(*b, c);
                }
            }
            out
        };
        let (x, y) = (keep(&seed.0, parity(px)), keep(&seed.1, parity(py)));
        let alg = Algebra::standard();
        let sign = Coefficient::from_int(if px && py { -1 } else { 1 });
        let sum = alg.bracket(&x, &y).add(&alg.bracket(&y, &x).scale(&sign));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn module_axiom_on_combinations(
        x in homogeneous(4, Parity::Odd),
        y in homogeneous(4, Parity::Even),
        v in poly_vector(),
        t in prop::bool::ANY,
    ) {
        let spec = ModuleSpec::m(if t { Sign::Plus } else { Sign::Minus });
        let alg = Algebra::standard();
        prop_assert!(module_axiom_defect(&alg, &spec, &x, &y, &v).unwrap().is_zero());
        prop_assert!(module_axiom_defect(&alg, &spec, &x, &x, &v).unwrap().is_zero());
        // the action is linear in the vector
        let w = v.add(&v.scale(&Coefficient::var(Var::B)));
        let lhs = act(&spec, &x, &w).unwrap();
        let xv = act(&spec, &x, &v).unwrap();
        prop_assert_eq!(lhs, xv.add(&xv.scale(&Coefficient::var(Var::B))));
    }

    #[test]
    fn echelon_reduce_is_a_projection(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 4), 0..5), v in prop::collection::vec(-3i64..=3, 4)) {
        let to_c = |r: &Vec<i64>| r.iter().map(|n| Coefficient::from_int(*n)).collect::<Vec<_>>();
        let mut ech = Echelon::new(4);
        for r in &rows {
            ech.insert(&to_c(r));
        }
        for r in &rows {
            prop_assert!(ech.contains(&to_c(r)));
        }
        let red = ech.reduce(&to_c(&v));
        prop_assert_eq!(ech.reduce(&red), red.clone());
        for p in ech.pivots() {
            prop_assert!(red[p].is_zero());
        }
        let all: Vec<_> = rows.iter().map(to_c).collect();
        prop_assert_eq!(bareiss_rank(&all), ech.rank());
    }
}
