mod common;

use proptest::prelude::*;

use common::{arb_algebra, small_rational};
use lie_entropy::catalog::builtin_catalog;
use lie_entropy::input::{parse_input, InputDocument, Mode, Options};
use lie_entropy::report::{analyze_document, embedded_input};
use lie_entropy::{Error, MatrixQ};

fn arb_document() -> impl Strategy<Value = InputDocument> {
    arb_algebra().prop_flat_map(|algebra| {
        let n = algebra.dim();
        (
            Just(algebra),
            prop::collection::vec(prop::collection::vec(small_rational(), n), 0..3),
            prop::option::of(prop::collection::vec(small_rational(), n * n)),
            any::<bool>(),
            1e-12f64..1e-3,
        )
            .prop_map(move |(algebra, lattice, d, estimate, tol)| InputDocument {
                name: "random".into(),
                algebra,
                lattice,
                endomorphism: d.map(|data| MatrixQ::new(n, n, data).unwrap()),
                options: Options {
                    tol,
                    mode: if estimate { Mode::WithEstimate } else { Mode::Standard },
                },
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn documents_round_trip(doc in arb_document()) {
        prop_assert_eq!(parse_input(&doc.to_json_string()).unwrap(), doc);
    }
}

#[test]
fn reports_reproduce_from_embedded_input() {
    for entry in builtin_catalog() {
        let (_, first) = analyze_document(&entry.document).unwrap();
        let again = embedded_input(&first).unwrap();
        assert_eq!(again, entry.document, "{}", entry.name);
        let (_, second) = analyze_document(&again).unwrap();
        assert_eq!(first, second, "{}", entry.name);
    }
}

#[test]
fn errors_name_their_location() {
    let cases = [
        (r#"{"algebra": {"dim": 2}, "lattice": [["1"]]}"#, "lattice[0]"),
        (r#"{"algebra": {"dim": 2}, "lattice": [["1", "x"]]}"#, "lattice[0][1]"),
        (r#"{"algebra": {"dim": 2, "basis": ["a"]}}"#, "algebra.basis"),
        (r#"{"algebra": {"dim": 2, "brackets": [[0, 5, 1, "1"]]}}"#, "algebra.brackets[0]"),
        (r#"{"algebra": {"dim": 1}, "options": {"tol": -1}}"#, "options.tol"),
        ("{\"algebra\": \n {\"dim\": }", "line 2"),
    ];
    for (text, expected) in cases {
        match parse_input(text) {
            Err(Error::Parse { location, .. }) => assert!(location.starts_with(expected), "{location} for {text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}
