use fpsoft_core::{Context, Document, FpSoftSet, Grade, Rational, Subset};
use proptest::prelude::*;

/// Universe size, parameter count and per-set cells `(p, q, bits)`.
type Source = (usize, usize, Vec<Vec<(i64, i64, u64)>>);

/// Random documents with unreduced fractions, printed by hand the way a user
/// would write them.
fn source_text() -> impl Strategy<Value = Source> {
    (1usize..=4, 1usize..=3).prop_flat_map(|(nx, ne)| {
        let cell = (1i64..=12).prop_flat_map(move |q| (0..=q, Just(q), 0u64..(1 << nx)));
        let set = proptest::collection::vec(cell, ne);
        (Just(nx), Just(ne), proptest::collection::vec(set, 1..5))
    })
}

fn render(nx: usize, ne: usize, sets: &[Vec<(i64, i64, u64)>]) -> String {
    let xs: Vec<String> = (1..=nx).map(|i| format!("x{i}")).collect();
    let es: Vec<String> = (1..=ne).map(|i| format!("e{i}")).collect();
    let mut out = format!(
        "context {{ universe: {} ; parameters: {} }}\n",
        xs.join(" "),
        es.join(" ")
    );
    for (n, cells) in sets.iter().enumerate() {
        let body: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(e, &(p, q, bits))| {
                let members: Vec<&str> = (0..nx).filter(|b| bits >> b & 1 == 1).map(|b| xs[b].as_str()).collect();
                format!("e{}: {p}/{q} {{ {} }}", e + 1, members.join(" "))
            })
            .collect();
        out.push_str(&format!("set S{n} {{ {} }}\n", body.join(" ; ")));
    }
    let names: Vec<String> = (0..sets.len()).map(|n| format!("S{n}")).collect();
    out.push_str(&format!("topology t {{ {} }}\n", names.join(" ")));
    out.push_str(&format!("cover c {{ of: S0 ; members: {} }}\n", names.join(" ")));
    out
}

proptest! {
    #[test]
    fn parse_print_parse_is_stable((nx, ne, sets) in source_text()) {
        let text = render(nx, ne, &sets);
        let doc = Document::parse(&text).unwrap();
        let printed = doc.print();
        let again = Document::parse(&printed).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(again.print(), printed);
    }

    #[test]
    fn printed_grades_are_reduced((nx, ne, sets) in source_text()) {
        let doc = Document::parse(&render(nx, ne, &sets)).unwrap();
        for (n, cells) in sets.iter().enumerate() {
            let set = doc.set(&format!("S{n}")).unwrap();
            for (e, &(p, q, bits)) in cells.iter().enumerate() {
                prop_assert_eq!(set.grade(e).value(), &Rational::new(p, q));
                prop_assert_eq!(set.approx(e), Subset::from_bits(bits));
            }
        }
        for line in doc.print().lines().filter(|l| l.starts_with("set ")) {
            for frac in line.split_whitespace().filter(|w| w.contains('/')) {
                let (p, q) = frac.split_once('/').unwrap();
                let (p, q): (i64, i64) = (p.parse().unwrap(), q.parse().unwrap());
                let reduced = Rational::new(p, q);
                prop_assert_eq!((*reduced.numer(), *reduced.denom()), (p, q));
            }
        }
    }
}

#[test]
fn programmatic_documents_round_trip() {
    let ctx = Context::numbered(3, 2).unwrap();
    let mut doc = Document::new(ctx.clone());
    let half = Grade::new(Rational::new(2, 4)).unwrap();
    let set = FpSoftSet::from_cells(
        ctx.clone(),
        vec![(half, Subset::from_bits(0b101)), (Grade::zero(), Subset::EMPTY)],
    )
    .unwrap();
    let name = doc.insert_set("A", set.clone(), None);
    assert_eq!(doc.insert_set("A", set, None), "A2");
    let printed = doc.print();
    assert!(
        printed.contains(&format!("set {name} {{ e1: 1/2 {{ x1 x3 }} ; e2: 0/1 {{ }} }}")),
        "{printed}"
    );
    assert_eq!(Document::parse(&printed).unwrap(), doc);
}
