mod common;

use applike::codec::json::{parse_object, JsonObject};
use applike::codec::lexeme::{p_bool, p_int, p_number, p_str, parse_text};
use applike::codec::{decode_binary, encode_binary, from_named, p_ap, p_pure, to_lexemes, to_named, Identity};
use applike::pipeline::{run_show, show_device};
use applike::{Record, RecordType};
use proptest::prelude::*;
use proptest::sample::Index;

fn device_record() -> impl Strategy<Value = Record> {
    common::device().prop_map(Record::from)
}

fn int_record() -> impl Strategy<Value = Record> {
    prop_oneof![
        common::device().prop_map(Record::from),
        common::int_benchmark().prop_map(Record::from),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn show_then_parse_devices(r in device_record()) {
        let d = r.as_device().unwrap();
        let text = run_show(show_device().run(d).unwrap());
        prop_assert_eq!(parse_text(&text, RecordType::Device).unwrap(), r);
    }

    #[test]
    fn show_then_parse_benchmarks(b in common::word_benchmark()) {
        let r = Record::from(b);
        let text = to_lexemes(&r).unwrap();
        prop_assert_eq!(parse_text(&text, RecordType::Benchmark).unwrap(), r);
    }

    #[test]
    fn binary_round_trip(r in int_record()) {
        let img = encode_binary(&r).unwrap();
        prop_assert_eq!(decode_binary(&img, r.record_type()).unwrap(), r);
    }

    #[test]
    fn named_round_trip(r in common::record()) {
        let text = to_named(&r).unwrap();
        prop_assert_eq!(from_named(&text, r.record_type()).unwrap(), r);
    }

    #[test]
    fn named_lookup_ignores_key_order(r in common::record(), swaps in prop::collection::vec((any::<Index>(), any::<Index>()), 0..6)) {
        let JsonObject { mut entries } = parse_object(&to_named(&r).unwrap()).unwrap();
        for (i, j) in swaps {
            let (i, j) = (i.index(entries.len()), j.index(entries.len()));
            entries.swap(i, j);
        }
        let shuffled = applike::codec::json::from_object(&JsonObject { entries }, r.record_type());
        prop_assert_eq!(shuffled.unwrap(), r);
    }

    #[test]
    fn identity_step_is_transparent(lexemes in prop::collection::vec("[-0-9A-Za-z]{0,4}", 0..4), cursor in 0usize..4) {
        let lexemes: Vec<String> = lexemes;
        let cursor = cursor.min(lexemes.len());
        for p in [p_bool(), p_int(), p_str(), p_number()] {
            let wrapped = p_ap(p_pure(Identity), p.clone());
            prop_assert_eq!(wrapped.run(&lexemes, cursor), p.run(&lexemes, cursor));
        }
    }
}

#[test]
fn fixture_images() {
    let cases: [(Record, &str); 2] = [
        (
            applike::Device::new(false, 19, 1).into(),
            "0013000000000000000100000000000000",
        ),
        (
            applike::Device::new(true, 0, 0).into(),
            "0100000000000000000000000000000000",
        ),
    ];
    for (r, hex) in cases {
        let img = encode_binary(&r).unwrap();
        let got: String = img.iter().map(|b| format!("{b:02x}")).collect();
        assert_eq!(got, hex);
    }
}
