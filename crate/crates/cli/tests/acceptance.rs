//! One PASS/FAIL line per acceptance criterion. Exits nonzero when any
//! criterion fails.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use fpsoft_cli::{run, Outcome};
use fpsoft_core::{check_compactness, registry, run_law, Document, LawReport, Verdict};

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    path.to_string_lossy().into_owned()
}

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("fpsoft").chain(args.iter().copied()))
}

/// Runs every law whose id satisfies `pick` at its default sizes.
fn laws(pick: impl Fn(&str) -> bool) -> Vec<LawReport> {
    registry()
        .iter()
        .filter(|l| pick(l.id))
        .map(|l| run_law(l.id, None, 1).expect("registered law runs"))
        .collect()
}

/// Laws whose reports differ from what the registry expects.
fn unexpected(reports: &[LawReport]) -> Vec<String> {
    reports
        .iter()
        .filter(|r| !r.matches_expectation())
        .map(|r| format!("{}: {}", r.id, r.summary()))
        .collect()
}

fn check_laws(reports: &[LawReport]) -> Result<String, String> {
    let bad = unexpected(reports);
    if bad.is_empty() {
        Ok(format!("{} laws as expected", reports.len()))
    } else {
        Err(bad.join("; "))
    }
}

fn criterion_1() -> Result<String, String> {
    let input = fixture("four_sets.fps");
    let printed = cli(&["--input", &input, "validate", "--topology", "tau_printed"]);
    let cites = printed
        .stdout
        .lines()
        .any(|l| l.starts_with("T3 violated") && l.contains("F_A2, F_A3") && l.ends_with("at e3"));
    if printed.code != 1 || !cites {
        return Err(format!(
            "printed data: exit {}, output {:?}",
            printed.code, printed.stdout
        ));
    }
    let corrected = cli(&["--input", &input, "validate", "--topology", "tau_corrected"]);
    if corrected.code != 0 {
        return Err(format!(
            "corrected data: exit {}, output {:?}",
            corrected.code, corrected.stdout
        ));
    }
    Ok("printed data cites T3 (F_A2, F_A3) at e3; corrected data valid".into())
}

fn criterion_2() -> Result<String, String> {
    let args = [
        "continuity",
        "--mapping",
        "m",
        "--source-topology",
        "tau1",
        "--target-topology",
        "tau2",
    ];
    let first_input = fixture("continuity.fps");
    let first = cli(&[&["--input", first_input.as_str()], &args[..]].concat());
    let line = first
        .stdout
        .lines()
        .find(|l| l.starts_with("set preimage_G_S "))
        .ok_or("no preimage of G_S printed")?;
    let doc = Document::parse(&std::fs::read_to_string(&first_input).unwrap()).unwrap();
    let with_preimage = Document::parse(&format!("{}\n{line}\n", doc.print())).map_err(|e| e.to_string())?;
    let preimage = with_preimage.set("preimage_G_S").unwrap();
    if first.code != 0 || !first.stdout.starts_with("yes") || preimage != doc.set("F_A").unwrap() {
        return Err(format!("first example: exit {}, output {:?}", first.code, first.stdout));
    }
    let second = cli(&[&["--input", fixture("continuity_constant.fps").as_str()], &args[..]].concat());
    if second.code != 1 || !second.stdout.starts_with("no: preimage of G_S ") {
        return Err(format!(
            "second example: exit {}, output {:?}",
            second.code, second.stdout
        ));
    }
    Ok("first continuous with preimage F_A; second not continuous at G_S".into())
}

const ALGEBRA: [&str; 9] = [
    "complement-involution",
    "cover-duality",
    "de-morgan-family",
    "equal-mutual-subset",
    "normalize-idempotent",
    "point-decomposition",
    "q-union-family",
    "p7-",
    "pc-",
];

fn criterion_3() -> Result<String, String> {
    check_laws(&laws(|id| {
        ALGEBRA
            .iter()
            .any(|a| if a.ends_with('-') { id.starts_with(a) } else { id == *a })
    }))
}

fn criterion_4() -> Result<String, String> {
    check_laws(&laws(|id| id.starts_with("fo-")))
}

fn criterion_5() -> Result<String, String> {
    check_laws(&laws(|id| {
        ["kap-oz-", "ic-oz-", "ik-", "base-qnbd-criterion"]
            .iter()
            .any(|p| id.starts_with(p))
            || [
                "closed-family",
                "qnbd-closure",
                "continuity-equivalence",
                "base-continuity",
            ]
            .contains(&id)
    }))
}

fn criterion_6() -> Result<String, String> {
    check_laws(&laws(|id| id == "kap-op" || id == "ic-op"))
}

fn criterion_7() -> Result<String, String> {
    let reports = laws(|id| id == "constant-map-enriched");
    check_laws(&reports).map_err(|e| {
        let Verdict::Counterexample(w) = &reports[0].verdict else {
            return e;
        };
        let body: Vec<&str> = w.document.lines().filter(|l| !l.starts_with('#')).collect();
        format!("{e}; witness: {}", body.join(" | "))
    })
}

fn criterion_8() -> Result<String, String> {
    let text = std::fs::read_to_string(fixture("four_sets_corrected.fps")).unwrap();
    let t = Document::parse(&text)
        .unwrap()
        .topology("tau")
        .map_err(|e| e.to_string())?;
    let report = check_compactness(&t).map_err(|e| e.to_string())?;
    if !(report.compact && report.fip_equivalence_verified) {
        return Err(format!("corrected example: {report:?}"));
    }
    check_laws(&laws(|id| id == "compact-fip" || id == "compact-image"))
        .map(|s| format!("corrected example compact; {s}"))
}

fn criterion_9() -> Result<String, String> {
    let reports = laws(|_| true);
    let split: Vec<String> = reports
        .iter()
        .filter(|r| matches!(r.verdict, Verdict::Disagreement { .. }))
        .map(|r| format!("{}: {}", r.id, r.summary()))
        .collect();
    if !split.is_empty() {
        return Err(split.join("; "));
    }
    let instances: u64 = reports.iter().map(|r| r.instances).sum();
    Ok(format!(
        "{} laws, {instances} instances, library and oracle agree",
        reports.len()
    ))
}

fn criterion_10() -> Result<String, String> {
    let to = fixture("four_sets.fps");
    let cont = fixture("continuity.fps");
    let constant = fixture("continuity_constant.fps");
    let commands: Vec<Vec<&str>> = vec![
        vec!["--input", &to, "validate", "--topology", "tau_printed"],
        vec!["--input", &to, "validate", "--topology", "tau_corrected"],
        vec![
            "--input",
            &to,
            "closure",
            "--topology",
            "tau_corrected",
            "--set",
            "F_A1",
        ],
        vec![
            "--input",
            &to,
            "interior",
            "--topology",
            "tau_corrected",
            "--set",
            "not_A1",
        ],
        vec![
            "--input",
            &to,
            "qnbd",
            "--topology",
            "tau_corrected",
            "--set",
            "F_A3",
            "--point",
            "e1:5/10:{x1}",
        ],
        vec![
            "--input",
            &to,
            "base",
            "--topology",
            "tau_corrected",
            "--base",
            "F_empty",
            "F_A1",
            "F_A2",
            "F_A3",
            "F_E",
        ],
        vec![
            "--input",
            &to,
            "base",
            "--topology",
            "tau_corrected",
            "--base",
            "F_empty",
            "F_A1",
            "F_A3",
            "F_E",
        ],
        vec!["--input", &to, "subcover", "--cover", "small"],
        vec!["--input", &to, "subcover", "--cover", "whole"],
        vec!["--input", &to, "compactness", "--topology", "tau_corrected"],
        vec![
            "--input",
            &cont,
            "continuity",
            "--mapping",
            "m",
            "--source-topology",
            "tau1",
            "--target-topology",
            "tau2",
        ],
        vec![
            "--input",
            &constant,
            "continuity",
            "--mapping",
            "m",
            "--source-topology",
            "tau1",
            "--target-topology",
            "tau2",
        ],
        vec![
            "laws",
            "--law",
            "pc-1",
            "--universe",
            "2",
            "--parameters",
            "2",
            "--resolution",
            "2",
        ],
        vec!["laws", "--law", "fo-10"],
        vec!["laws", "--law", "base-qnbd-criterion"],
        vec![
            "laws",
            "--law",
            "fo-6-equality-without-injectivity",
            "--universe",
            "1",
            "--parameters",
            "2",
            "--resolution",
            "1",
        ],
    ];
    for args in &commands {
        let baseline = cli(args);
        for jobs in ["1", "2", "4"] {
            let again = cli(&[&["--jobs", jobs][..], args].concat());
            if again != baseline {
                return Err(format!("`{}` differs with --jobs {jobs}", args.join(" ")));
            }
        }
    }
    // Reparsing a printed document prints the same bytes.
    for path in [&to, &cont, &constant, &fixture("four_sets_corrected.fps")] {
        let doc = Document::parse(&std::fs::read_to_string(path).unwrap()).map_err(|e| e.to_string())?;
        let printed = doc.print();
        if Document::parse(&printed).map(|d| d.print()).ok().as_deref() != Some(printed.as_str()) {
            return Err(format!("{path} does not round-trip"));
        }
    }
    Ok(format!(
        "{} commands identical across runs and --jobs 1/2/4; fixtures round-trip",
        commands.len()
    ))
}

fn main() {
    type Check = fn() -> Result<String, String>;
    let criteria: [(&str, Check, Duration); 10] = [
        (
            "printed and corrected four-set example",
            criterion_1,
            Duration::from_secs(1),
        ),
        ("continuity examples", criterion_2, Duration::from_secs(1)),
        ("algebra laws at |X|=2 |E|=2 q=2", criterion_3, Duration::from_secs(60)),
        (
            "mapping laws up to |X|,|Y|,|E|,|K| = 2, q=2",
            criterion_4,
            Duration::from_secs(300),
        ),
        (
            "topology theorems on the q=1 carrier",
            criterion_5,
            Duration::from_secs(120),
        ),
        (
            "closure and interior operator round trips",
            criterion_6,
            Duration::from_secs(60),
        ),
        (
            "constant maps out of enriched spaces",
            criterion_7,
            Duration::from_secs(120),
        ),
        ("compactness", criterion_8, Duration::from_secs(60)),
        ("library and oracle agree on every instance", criterion_9, Duration::MAX),
        ("CLI determinism and round trip", criterion_10, Duration::MAX),
    ];
    let mut failed = 0;
    for (n, (name, check, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > budget => Err(format!(
                "{detail}, but took {elapsed:.2?} against a budget of {budget:.0?}"
            )),
            other => other,
        };
        let (status, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        failed += usize::from(result.is_err());
        println!("criterion {:>2}: {status} [{elapsed:.2?}] {name}: {detail}", n + 1);
    }
    println!("{} of 10 criteria pass", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
