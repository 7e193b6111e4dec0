use jacobi_mde::{catalog, QZSeries};
use jacobi_mde_cli::json::series_from_str;
use jacobi_mde_cli::run;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("jacobi-mde").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn expand_phi_0_1_to_order_two() {
    let (code, out, _) = call(&["expand", "--form", "phi_0_1", "--q-order", "2"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "q^0: ζ^-1 + 10 + ζ^1\nq^1: 10ζ^-2 − 64ζ^-1 + 108 − 64ζ^1 + 10ζ^2\n"
    );
}

#[test]
fn half_integral_exponents_render_as_fractions() {
    let (code, out, _) = call(&["expand", "--form", "theta", "--q-order", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "q^{1/8}: −ζ^{-1/2} + ζ^{1/2}\nq^{9/8}: ζ^{-3/2} − ζ^{3/2}\n");
}

#[test]
fn expand_json_round_trips() {
    for name in ["phi_0_1", "phi_0_3_half", "theta_cube", "e2", "phi_0_4"] {
        let (code, out, _) = call(&["expand", "--form", name, "--q-order", "4", "--json"]);
        assert_eq!(code, 0);
        let parsed: QZSeries = series_from_str(&out).unwrap();
        assert_eq!(parsed, catalog::form(name, 96).unwrap(), "{name}");
    }
}

#[test]
fn json_terms_are_sorted_and_reduced() {
    let (_, out, _) = call(&["expand", "--form", "phi_0_2", "--q-order", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["weight2"], 0);
    assert_eq!(v["index2"], 4);
    assert_eq!(v["trunc24"], 72);
    let terms = v["terms"].as_array().unwrap();
    let keys: Vec<(i64, i64)> = terms
        .iter()
        .map(|t| (t["n24"].as_i64().unwrap(), t["l2"].as_i64().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    for t in terms {
        let c = t["c"].as_str().unwrap();
        let (p, q) = c.split_once('/').unwrap();
        let (p, q): (i64, i64) = (p.parse().unwrap(), q.parse().unwrap());
        assert!(q > 0);
        assert_eq!(num_integer_gcd(p.abs(), q), 1, "{c}");
    }
}

fn num_integer_gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[test]
fn output_is_byte_stable() {
    let args = ["verify", "--equation", "deq:K3", "--q-order", "4", "--json"];
    assert_eq!(call(&args), call(&args));
    let args = ["discover", "--form", "phi_0_2", "--q-order", "4", "--json"];
    assert_eq!(call(&args), call(&args));
}

#[test]
fn basis_accepts_fractions_and_negative_values() {
    let (code, out, _) = call(&["basis", "--weight", "0", "--index", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "J_{0,2}: dimension 2\n  phi_0_1^2\n  E4*phi_m2_1^2\n");
    let (code, out, _) = call(&["basis", "--weight", "-1", "--index", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "J_{-1,1/2}: dimension 1\n  phi_m1_1_half\n");
    let (code, _, _) = call(&["basis", "--weight", "1/3", "--index", "1"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_single_entry() {
    let (code, out, _) = call(&["verify", "--equation", "deq:CY5", "--q-order", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("deq:CY5"));
    assert!(out.contains("1 passed, 0 failed, 0 inconclusive"));
}

#[test]
fn verify_reports_insufficient_order_as_inconclusive() {
    let (code, out, _) = call(&["verify", "--equation", "deq:phi03", "--q-order", "1"]);
    assert_eq!(code, 1);
    assert!(out.contains("INCONCLUSIVE"));
}

#[test]
fn discover_prints_exact_coefficients() {
    let (code, out, _) = call(&[
        "discover",
        "--form",
        "phi_0_1",
        "--max-degree",
        "3",
        "--q-order",
        "3",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("equation: H_4H_2H_0(phi_0_1) − (101/4)·E4·H_0(phi_0_1) + 10·E6·phi_0_1 = 0"));
    let (code, out, _) = call(&[
        "discover",
        "--form",
        "phi_0_1",
        "--max-degree",
        "2",
        "--q-order",
        "3",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("no equation of degree ≤ 2"));
}

#[test]
fn genus_exit_codes() {
    let (code, out, _) = call(&["genus", "--dim", "2", "--euler", "24", "--q-order", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("elliptic genus in J_{0,1} = 2·phi_0_1\n"));
    // χ_y data outside the image of J_{0,1}
    let (code, out, _) = call(&["genus", "--dim", "2", "--chi", "2,-20,3", "--json"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["kind"], "inconsistent_hodge_data");
    let (code, _, _) = call(&["genus", "--dim", "13", "--euler", "0"]);
    assert_eq!(code, 2);
    let (code, out, _) = call(&["genus", "--dim", "5", "--euler", "23", "--q-order", "1", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["warnings"][0], "non_integral");
    assert_eq!(v["coordinates"][0]["c"], "23/24");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["expand", "--form", "phi_0_1", "--q-order", "0"]).0, 2);
    assert_eq!(call(&["expand", "--form", "phi_0_1", "--bogus"]).0, 2);
    assert_eq!(call(&["verify", "--q-order", "2"]).0, 2);
    let (code, out, _) = call(&["expand", "--form", "nope", "--json"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["kind"], "unknown_form");
    let (code, out, _) = call(&["expand", "--json", "--q-order", "x"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["error"]["kind"], "usage");
}

#[test]
fn list_names_every_form() {
    let (code, out, _) = call(&["list"]);
    assert_eq!(code, 0);
    for e in catalog::entries() {
        assert!(out.contains(e.name));
    }
}
