//! Acceptance report: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p adic-cli --test acceptance -- --nocapture` to
//! see the report. Every tolerance is exact equality; the sample sizes and
//! seed are pinned below.

use std::process::Command;

use adic_core::{
    add, associativity_witness, add_transfinite, classify_sqrt, div_general, from_rational,
    koenig_search, mirror_check, mul, root_branches, root_stream, sub, to_rational,
    zero_divisor_pair, Base, CarryRule, Fraction, QuoteNumber, SqrtVerdict, TransfiniteNumber,
};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;

const SEED: u64 = 0x5eed_0adc;
const MIRROR_BLOCKS: usize = 200;
const MIRROR_MAX_LEN: usize = 8;
const ROUND_TRIPS: usize = 500;
const PAIRS_PER_OP: usize = 500;
const SQRT_LIMIT: u64 = 1000;
const SEARCH_DEPTH: usize = 5;
const STREAM_DEPTH: usize = 100;
const ZERO_DIVISOR_DEPTH: usize = 50;
const COMMUTATIVITY_PAIRS: usize = 200;

/// Criteria that cannot be met as worded; they are still evaluated and
/// reported, and the run fails if one of them starts passing unnoticed.
const EXPECTED_FAILURES: &[&str] = &["5"];

struct Outcome {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn q(s: &str) -> QuoteNumber {
    s.parse().unwrap()
}

fn frac(m: i64, n: i64) -> Fraction {
    Fraction::new(m, n).unwrap()
}

fn pow10(n: usize) -> BigUint {
    BigUint::from(10u32).pow(n as u32)
}

fn random_quote(rng: &mut StdRng, max_period: usize, max_pre: usize, max_frac: usize) -> QuoteNumber {
    let mut digits = |lo: usize, hi: usize| -> Vec<u8> {
        let n = rng.gen_range(lo..=hi);
        (0..n).map(|_| rng.gen_range(0..10u8)).collect()
    };
    let p = digits(1, max_period);
    let pre = digits(0, max_pre);
    let f = digits(0, max_frac);
    QuoteNumber::new(Base::TEN, p, pre, f).unwrap()
}

fn golden_identities() -> Outcome {
    let checks = [
        add(&q("9'"), &q("0'1")) == q("0'"),
        to_rational(&q("9'")) == frac(-1, 1),
        from_rational(&frac(-17, 1), Base::TEN).to_string() == "9'83",
        from_rational(&frac(1, 3), Base::TEN).to_string() == "6'7",
        from_rational(&frac(-1, 3), Base::TEN).to_string() == "3'",
        from_rational(&frac(1, 7), Base::TEN).to_string() == "285714'3",
        from_rational(&frac(-1, 7), Base::TEN).to_string() == "142857'",
        to_rational(&q("9'83")) == frac(-17, 1),
        to_rational(&q("6'7")) == frac(1, 3),
        to_rational(&q("285714'3")) == frac(1, 7),
    ];
    let ok = checks.iter().filter(|&&c| c).count();
    Outcome {
        id: "1",
        title: "golden identities",
        pass: ok == checks.len(),
        detail: format!("{ok}/{} exact", checks.len()),
    }
}

fn golden_arithmetic() -> Outcome {
    let product = mul(&q("37'14"), &q("0'23"));
    let checks = [
        add(&q("0'19"), &q("9'83")).to_string() == "0'2",
        add(&q("0'2"), &q("9'83")).to_string() == "9'85",
        // same string as 59'5422 after minimizing the preperiod
        product == q("59'5422") && product.to_string() == "95'422",
        mul(&q("3'5"), &q("8'3")).to_string() == "148'05",
    ];
    let ok = checks.iter().filter(|&&c| c).count();
    Outcome {
        id: "2",
        title: "golden arithmetic",
        pass: ok == checks.len(),
        detail: format!("{ok}/{} exact; 37'14 * 23 = {product}", checks.len()),
    }
}

fn division() -> Outcome {
    let one = q("0'1");
    let third = div_general(&one, &q("0'3")).unwrap();
    let seventh = div_general(&one, &q("0'7")).unwrap();
    let x = q("5'8");
    let r = div_general(&x, &q("0'13")).unwrap();
    let oracle = from_rational(&frac(22, 117), Base::TEN);
    let checks = [
        third.to_string() == "6'7",
        seventh.to_string() == "285714'3",
        r == oracle,
        mul(&r, &q("0'13")) == x,
        r.to_string() != "18'4966",
    ];
    let ok = checks.iter().filter(|&&c| c).count();
    Outcome {
        id: "3",
        title: "division",
        pass: ok == checks.len(),
        detail: format!("{ok}/{} exact; 5'8 / 13 = {r} (printed 18'4966 rejected)", checks.len()),
    }
}

fn mirror_and_homomorphism() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SEED);
    let mut mirror_ok = 0;
    for _ in 0..MIRROR_BLOCKS {
        let len = rng.gen_range(1..=MIRROR_MAX_LEN);
        let block: Vec<u8> = (0..len).map(|_| rng.gen_range(0..10u8)).collect();
        let (left, right) = mirror_check(&block, Base::TEN).unwrap();
        mirror_ok += usize::from(left == right);
    }
    let mut trip_ok = 0;
    for _ in 0..ROUND_TRIPS {
        let x = random_quote(&mut rng, 4, 4, 3);
        trip_ok += usize::from(from_rational(&to_rational(&x), Base::TEN) == x);
    }
    let mut op_ok = [0usize; 4];
    for _ in 0..PAIRS_PER_OP {
        let x = random_quote(&mut rng, 3, 3, 2);
        let y = random_quote(&mut rng, 3, 3, 2);
        let (fx, fy) = (to_rational(&x), to_rational(&y));
        op_ok[0] += usize::from(to_rational(&add(&x, &y)) == &fx + &fy);
        op_ok[1] += usize::from(to_rational(&sub(&x, &y)) == &fx - &fy);
        op_ok[2] += usize::from(to_rational(&mul(&x, &y)) == &fx * &fy);
        // the quotient's period can be as long as the divisor's numerator,
        // so divisors are drawn from a smaller range
        let d = random_quote(&mut rng, 2, 1, 1);
        let fd = to_rational(&d);
        op_ok[3] += usize::from(if d.is_zero() {
            div_general(&x, &d).is_err()
        } else {
            to_rational(&div_general(&x, &d).unwrap()) == &fx / &fd
        });
    }
    let pass = mirror_ok == MIRROR_BLOCKS
        && trip_ok == ROUND_TRIPS
        && op_ok.iter().all(|&c| c == PAIRS_PER_OP);
    Outcome {
        id: "4",
        title: "mirror identity and homomorphism",
        pass,
        detail: format!(
            "mirror {mirror_ok}/{MIRROR_BLOCKS}, round trip {trip_ok}/{ROUND_TRIPS}, \
             add/sub/mul/div {}/{}/{}/{} of {PAIRS_PER_OP}",
            op_ok[0], op_ok[1], op_ok[2], op_ok[3]
        ),
    }
}

fn has_root(class_verdict: SqrtVerdict) -> bool {
    class_verdict != SqrtVerdict::NotRepresentable
}

fn search_nonempty(q: u64, depth: usize) -> bool {
    !koenig_search(&BigInt::from(q), 2, depth, depth).unwrap().is_empty()
}

/// Criterion as worded: agreement with the depth-5 search for every q.
fn sqrt_classification_literal() -> (Outcome, Vec<u64>) {
    let mismatches: Vec<u64> = (1..=SQRT_LIMIT)
        .filter(|&q| has_root(classify_sqrt(q).verdict) != search_nonempty(q, SEARCH_DEPTH))
        .collect();
    let spots = classify_sqrt(2).verdict == SqrtVerdict::NotRepresentable
        && classify_sqrt(5).verdict == SqrtVerdict::NotRepresentable
        && classify_sqrt(4 * 41).verdict == SqrtVerdict::Representable
        && classify_sqrt(25 * 41).verdict == SqrtVerdict::Representable;
    let outcome = Outcome {
        id: "5",
        title: "square-root classification vs depth-5 search",
        pass: mismatches.is_empty() && spots,
        detail: format!(
            "{} mismatches for q <= {SQRT_LIMIT} (first: {:?}); spot values {}",
            mismatches.len(),
            &mismatches[..mismatches.len().min(6)],
            if spots { "ok" } else { "WRONG" }
        ),
    };
    (outcome, mismatches)
}

fn solvable_mod(q: u64, m: u64) -> bool {
    (0..m).any(|x| (x * x) % m == q % m)
}

/// Restricted to q coprime to 10, where depth 5 sees every obstruction.
fn sqrt_classification_units() -> Outcome {
    let units: Vec<u64> = (1..=SQRT_LIMIT).filter(|q| q % 2 != 0 && q % 5 != 0).collect();
    let agree = units
        .iter()
        .filter(|&&q| has_root(classify_sqrt(q).verdict) == search_nonempty(q, SEARCH_DEPTH))
        .count();
    let mod40 = units
        .iter()
        .filter(|&&q| has_root(classify_sqrt(q).verdict) == matches!(q % 40, 1 | 9))
        .count();
    Outcome {
        id: "5a",
        title: "square-root classification, q coprime to 10",
        pass: agree == units.len() && mod40 == units.len(),
        detail: format!("depth-5 search {agree}/{n}, mod-40 rule {mod40}/{n}", n = units.len()),
    }
}

/// Exhaustive search deep enough for every q <= 1000: 2-adic valuation at
/// most 9 needs modulus 2^12, 5-adic valuation at most 4 needs 5^6.
fn sqrt_classification_deep() -> Outcome {
    let agree = (1..=SQRT_LIMIT)
        .filter(|&q| {
            let solvable = solvable_mod(q, 1 << 12) && solvable_mod(q, 5u64.pow(6));
            has_root(classify_sqrt(q).verdict) == solvable
        })
        .count();
    Outcome {
        id: "5b",
        title: "square-root classification vs search modulo 2^12 and 5^6",
        pass: agree as u64 == SQRT_LIMIT,
        detail: format!("{agree}/{SQRT_LIMIT} agree"),
    }
}

fn root_streams() -> Outcome {
    let mut checked = 0;
    let mut ok = 0;
    for q in [41u64, 89, 201] {
        for mut s in root_branches(q, 2).unwrap() {
            for n in 1..=STREAM_DEPTH {
                let x = s.residue(n).unwrap();
                checked += 1;
                ok += usize::from((&x * &x) % pow10(n) == BigUint::from(q) % pow10(n));
            }
        }
    }
    let mut cube = root_stream(3, 3, 0).unwrap();
    for n in 1..=STREAM_DEPTH {
        let x = cube.residue(n).unwrap();
        checked += 1;
        ok += usize::from(x.modpow(&BigUint::from(3u32), &pow10(n)) == BigUint::from(3u32));
    }
    let digits = (cube.digit(1).unwrap(), cube.digit(2).unwrap());
    let brute: Vec<u64> = (0..10_000u64).filter(|x| x * x % 10_000 * x % 10_000 == 3).collect();
    let brute_ok = brute.len() == 1 && BigUint::from(brute[0]) == cube.residue(4).unwrap();
    Outcome {
        id: "6",
        title: "root streams",
        pass: ok == checked && digits == (7, 8) && brute_ok,
        detail: format!(
            "{ok}/{checked} levels verified to depth {STREAM_DEPTH}; cube root of 3 ends ...{}{}",
            digits.1, digits.0
        ),
    }
}

/// Idempotent `e ≡ 1 (mod 2^n)`, `e ≡ 0 (mod 5^n)`, lifted digit by digit.
fn idempotent(n: usize) -> BigUint {
    let mut e = BigUint::from(5u32);
    for level in 1..n {
        let m = pow10(level + 1);
        let place = pow10(level);
        e = (0..10u32)
            .map(|d| &e + BigUint::from(d) * &place)
            .find(|c| (c * c) % &m == c % &m)
            .unwrap();
    }
    e
}

fn zero_divisors() -> Outcome {
    let small = zero_divisor_pair(1).unwrap() == (BigUint::from(2u32), BigUint::from(5u32))
        && zero_divisor_pair(2).unwrap() == (BigUint::from(12u32), BigUint::from(25u32));
    let e5 = idempotent(5);
    let e_ok = e5 == BigUint::from(90625u32) && (&e5 * &e5) % pow10(5) == e5;
    let mut ok = 0;
    for n in 1..=ZERO_DIVISOR_DEPTH {
        let (a, b) = zero_divisor_pair(n).unwrap();
        let m = pow10(n);
        let e = idempotent(n);
        let one_minus_e = (&m + 1u32 - &e) % &m;
        let good = ((&a * &b) % &m).is_zero()
            && !(&a % &m).is_zero()
            && !(&b % &m).is_zero()
            && ((&a * &e) % &m).is_zero()
            && ((&b * &one_minus_e) % &m).is_zero();
        ok += usize::from(good);
    }
    Outcome {
        id: "7",
        title: "zero divisors",
        pass: small && e_ok && ok == ZERO_DIVISOR_DEPTH,
        detail: format!("{ok}/{ZERO_DIVISOR_DEPTH} depths; idempotent oracle e mod 10^5 = {e5}"),
    }
}

fn transfinite() -> Outcome {
    let t = |s: &str| TransfiniteNumber::parse(s, Base::TEN).unwrap();
    let a = associativity_witness(CarryRule::RuleA);
    let b = associativity_witness(CarryRule::RuleB);
    let witnesses = a.left == t("1|8'7") && a.right == t("8'7") && !a.equal
        && b.left.head() == [1] && b.right.head() == [2] && b.left.tail() == b.right.tail() && !b.equal;
    let mut rng = StdRng::seed_from_u64(SEED ^ 8);
    let mut ok = 0;
    for _ in 0..COMMUTATIVITY_PAIRS {
        let operand = |rng: &mut StdRng| {
            let head: Vec<u8> = (0..rng.gen_range(0..=2)).map(|_| rng.gen_range(0..10u8)).collect();
            TransfiniteNumber::new(head, random_quote(rng, 3, 3, 0)).unwrap()
        };
        let (x, y) = (operand(&mut rng), operand(&mut rng));
        let both = [CarryRule::RuleA, CarryRule::RuleB]
            .iter()
            .all(|&r| add_transfinite(&x, &y, r).unwrap() == add_transfinite(&y, &x, r).unwrap());
        ok += usize::from(both);
    }
    Outcome {
        id: "8",
        title: "transfinite lab",
        pass: witnesses && ok == COMMUTATIVITY_PAIRS,
        detail: format!(
            "A: {} vs {}; B: {} vs {}; commutative {ok}/{COMMUTATIVITY_PAIRS}",
            a.left, a.right, b.left, b.right
        ),
    }
}

fn adic(args: &[&str]) -> (bool, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_adic")).args(args).output().unwrap();
    (out.status.success(), String::from_utf8(out.stdout).unwrap())
}

fn schema_ok(v: &Value, command: &str) -> bool {
    let Some(obj) = v.as_object() else { return false };
    let mut keys: Vec<&str> = obj.keys().map(String::as_str).collect();
    keys.sort_unstable();
    keys == ["command", "diagnostics", "inputs", "result"]
        && v["command"] == command
        && v["inputs"].is_object()
        && v["result"].is_object()
        && v["diagnostics"].as_array().is_some_and(|d| d.iter().all(Value::is_string))
}

fn cli_end_to_end() -> Outcome {
    let cases: &[(&str, &str, &str)] = &[
        ("eval", "9' + 1", "0'"),
        ("convert", "9'", "-1"),
        ("convert", "-17", "9'83"),
        ("convert", "1/3", "6'7"),
        ("convert", "-1/3", "3'"),
        ("convert", "1/7", "285714'3"),
        ("convert", "-1/7", "142857'"),
        ("eval", "19 + 9'83", "0'2"),
        ("eval", "2 + 9'83", "9'85"),
        ("eval", "37'14 * 23", "95'422"),
        ("eval", "3'5 * 8'3", "148'05"),
        ("eval", "1 / 3", "6'7"),
        ("eval", "1 / 7", "285714'3"),
        ("eval", "5'8 / 13", "581196'6"),
    ];
    let mut ok = 0;
    let mut failures = Vec::new();
    for &(cmd, arg, expected) in cases {
        let (s1, first) = adic(&[cmd, arg]);
        let (s2, second) = adic(&[cmd, arg]);
        let (s3, json) = adic(&["--json", cmd, arg]);
        let parsed: Value = serde_json::from_str(json.trim()).unwrap_or(Value::Null);
        let good = s1 && s2 && s3
            && first == format!("{expected}\n")
            && first == second
            && schema_ok(&parsed, cmd)
            && parsed["result"]["value"] == expected;
        if good {
            ok += 1;
        } else {
            failures.push(format!("{cmd} {arg:?}"));
        }
    }
    Outcome {
        id: "9",
        title: "CLI end to end",
        pass: failures.is_empty(),
        detail: format!("{ok}/{} text+json cases; failing: {failures:?}", cases.len()),
    }
}

#[test]
fn acceptance_report() {
    let (literal, mismatches) = sqrt_classification_literal();
    let outcomes = vec![
        golden_identities(),
        golden_arithmetic(),
        division(),
        mirror_and_homomorphism(),
        literal,
        sqrt_classification_units(),
        sqrt_classification_deep(),
        root_streams(),
        zero_divisors(),
        transfinite(),
        cli_end_to_end(),
    ];
    for o in &outcomes {
        let mark = if o.pass { "PASS" } else { "FAIL" };
        let note = if EXPECTED_FAILURES.contains(&o.id) { " (expected)" } else { "" };
        println!("[{mark}]{note} criterion {:<3} {}: {}", o.id, o.title, o.detail);
    }
    // every miss of the literal criterion is a q without a root whose
    // 2-adic obstruction only shows modulo 2^(v+1) or 2^(v+3), v >= 4
    assert!(mismatches.iter().all(|&q| {
        q.trailing_zeros() >= 4 && classify_sqrt(q).verdict == SqrtVerdict::NotRepresentable
    }));
    for o in &outcomes {
        let expected_failure = EXPECTED_FAILURES.contains(&o.id);
        assert_eq!(
            o.pass, !expected_failure,
            "criterion {} ({}) changed status: {}",
            o.id, o.title, o.detail
        );
    }
}
