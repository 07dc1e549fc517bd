use orbitcat_cli::resolve::{resolve, Overrides, ResolveError};
use orbitcat_cli::syntax::*;
use proptest::prelude::*;

const FIXTURES: &[&str] = &[
    "classical.oc",
    "truncated_gf2.oc",
    "truncated_q.oc",
    "idempotent_monoid.oc",
    "trivial_ext_a.oc",
    "trivial_ext_b.oc",
];

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

#[test]
fn classical_fixture_shape() {
    let d = parse(&fixture("classical.oc")).unwrap();
    assert_eq!(d.field, Some(FieldDecl::Rationals));
    assert_eq!(d.vertices.len(), 5);
    assert_eq!(d.arrows.len(), 4);
    assert_eq!(d.monoid.gens, vec!["g"]);
    assert_eq!(d.monoid.rels.len(), 1);
    let r = resolve(&d, &Overrides::default()).unwrap();
    assert_eq!(r.monoid.unwrap().len(), 2);
}

#[test]
fn fixtures_round_trip_through_the_printer() {
    for name in FIXTURES {
        let d = parse(&fixture(name)).unwrap();
        let printed = d.to_string();
        assert_eq!(parse(&printed).unwrap(), d, "{name}");
        assert_eq!(parse(&printed).unwrap().to_string(), printed, "{name}");
    }
}

#[test]
fn unknown_vertex_is_reported() {
    let text = "field Q\nquiver {\n  vertices: 1 2;\n  arrows: a: 1 -> 3;\n}\n";
    let d = parse(text).unwrap();
    assert!(matches!(resolve(&d, &Overrides::default()), Err(ResolveError::UnknownVertex(v)) if v == "3"));
}

#[test]
fn missing_monoid_gives_the_trivial_group() {
    let text = "field GF(3)\nquiver { vertices: 1 2; arrows: a: 1 -> 2; }\n";
    let r = resolve(&parse(text).unwrap(), &Overrides::default()).unwrap();
    assert_eq!(r.monoid.unwrap().len(), 1);
}

#[test]
fn field_is_required_somewhere() {
    let d = parse("quiver { vertices: 1; }").unwrap();
    assert!(matches!(resolve(&d, &Overrides::default()), Err(ResolveError::NoField)));
    let o = Overrides { field: Some(FieldDecl::Prime(7)), ..Overrides::default() };
    assert!(resolve(&d, &o).is_ok());
    let o = Overrides { field: Some(FieldDecl::Prime(6)), ..Overrides::default() };
    assert!(matches!(resolve(&d, &o), Err(ResolveError::NotPrime(6))));
}

#[test]
fn action_must_respect_relations() {
    // g swaps the arrows but only one composite is zero
    let text = "field Q
quiver { vertices: 1 2 3; arrows: a: 1 -> 2, b: 2 -> 3, c: 1 -> 2; }
relations { b*a = 0; }
monoid { gens: g; rels: g^2 = 1; }
action { g: arrows (a -> c, c -> a); }
";
    assert!(matches!(resolve(&parse(text).unwrap(), &Overrides::default()), Err(ResolveError::Action(_))));
}

#[test]
fn parse_errors_point_at_the_token() {
    let e = parse("field Q\nquiver {\n  vertices 1 2;\n}").unwrap_err();
    assert_eq!((e.line, e.column), (3, 12));
}

fn label() -> impl Strategy<Value = String> {
    prop::sample::select(vec!["a", "b'", "alpha", "(g,1)", "(G,2')", "two words", "x_1"]).prop_map(String::from)
}

fn expr() -> impl Strategy<Value = Expr> {
    let leaf = label().prop_map(Atom::Label);
    let atom = leaf.prop_recursive(2, 8, 3, |inner| {
        prop::collection::vec((any::<bool>(), prop::collection::vec((inner, 1u32..4), 1..3)), 1..3).prop_map(|ts| {
            Atom::Group(Expr {
                terms: ts
                    .into_iter()
                    .map(|(negative, fs)| Term { negative, coeff: None, factors: fs.into_iter().map(|(atom, power)| Factor { atom, power }).collect() })
                    .collect(),
            })
        })
    });
    let coeff = prop::option::of((1u32..20, prop::option::of(2u32..9))).prop_map(|c| {
        c.map(|(n, d)| Coeff { num: n.to_string(), den: d.map(|d| d.to_string()) })
    });
    let term = (any::<bool>(), coeff, prop::collection::vec((atom, 1u32..4), 0..3))
        .prop_filter("a term needs a factor or a coefficient", |(_, c, fs)| c.is_some() || !fs.is_empty())
        .prop_map(|(negative, coeff, fs)| Term { negative, coeff, factors: fs.into_iter().map(|(atom, power)| Factor { atom, power }).collect() });
    prop::collection::vec(term, 1..4).prop_map(|terms| Expr { terms })
}

proptest! {
    #[test]
    fn printed_expressions_parse_back(e in expr()) {
        let printed = e.to_string();
        prop_assert_eq!(parse_expr(&printed).unwrap(), e, "{}", printed);
    }
}
