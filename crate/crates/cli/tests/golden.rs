mod common;

#[test]
fn every_golden_matches() {
    let goldens = common::goldens();
    assert!(goldens.len() >= 20, "fixture corpus went missing");
    let failures: Vec<String> = goldens.iter().filter_map(common::check).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn every_subcommand_has_a_golden() {
    let covered: Vec<String> = common::goldens().into_iter().map(|g| g.args[0].clone()).collect();
    for sub in [
        "show", "parse", "map-demo", "zip-demo", "remap-demo", "avg", "encode-bin", "decode-bin",
        "to-json", "from-json",
    ] {
        assert!(covered.iter().any(|c| c == sub), "no golden for {sub}");
    }
}

#[test]
fn encode_then_decode_through_a_pipe() {
    for (ty, json) in common::round_trip_fixtures() {
        assert_eq!(common::shell_round_trip(ty, &json).unwrap(), format!("{json}\n"));
    }
}

#[test]
fn lisp_and_scott_agree_on_the_command_line() {
    for args in [["map-demo"], ["zip-demo"]] {
        let mut scott: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        scott.extend(["--encoding".into(), "scott".into()]);
        let lisp: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        assert_eq!(common::run(&lisp, None).stdout, common::run(&scott, None).stdout);
    }
}
