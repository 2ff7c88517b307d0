use std::collections::BTreeMap;

use proptest::prelude::*;
use psmooth::cache::{Cache, CacheEntry};
use psmooth::error::{exit, CliError};
use psmooth::{AbsF, ScanRecord};
use psmooth_core::{BigInt, Gcm, Table, WeylGroup, Word};

fn abs_f() -> impl Strategy<Value = AbsF> {
    prop_oneof![
        any::<u64>().prop_map(|a| AbsF::Integer(BigInt::from(a))),
        (1u64.., 2u64..).prop_map(|(a, b)| AbsF::NonIntegral(BigInt::from(a), BigInt::from(b))),
        Just(AbsF::NonConstant),
    ]
}

fn record() -> impl Strategy<Value = ScanRecord> {
    (
        "[A-G][1-8]|affine-A1|gcm-[0-9a-f]{16}",
        prop::collection::vec(1usize..9, 0..10),
        prop::collection::vec(1usize..9, 0..10),
        abs_f(),
        any::<(bool, bool)>(),
        prop::collection::btree_map(prop::sample::select(vec![2u64, 3, 5, 7, 11]), any::<bool>(), 0..4),
    )
        .prop_map(|(group, w, y, abs_f, (smooth, rs), p_smooth)| ScanRecord {
            group,
            len_w: w.len(),
            len_y: y.len(),
            w: Word(w),
            y: Word(y),
            abs_f,
            smooth,
            rationally_smooth: rs,
            p_smooth,
        })
}

proptest! {
    #[test]
    fn scan_record_round_trip(r in record()) {
        let line = r.to_json();
        prop_assert!(!line.contains('\n'));
        prop_assert_eq!(ScanRecord::from_json(&line).unwrap(), r);
    }

    #[test]
    fn abs_f_text_round_trip(a in abs_f()) {
        prop_assert_eq!(a.to_string().parse::<AbsF>().unwrap(), a);
    }
}

#[test]
fn abs_f_rejects_garbage() {
    for s in ["", "x", "nonintegral:3", "nonintegral:a/b", "1.5"] {
        assert!(s.parse::<AbsF>().is_err(), "{s}");
    }
}

#[test]
fn record_layout() {
    let r = ScanRecord {
        group: "B2".into(),
        w: Word(vec![2, 1, 2]),
        y: Word(vec![]),
        abs_f: AbsF::Integer(BigInt::from(2)),
        len_w: 3,
        len_y: 0,
        smooth: false,
        rationally_smooth: true,
        p_smooth: BTreeMap::from([(2, false), (3, true)]),
    };
    assert_eq!(
        r.to_json(),
        r#"{"group":"B2","w":"2,1,2","y":"e","abs_f":"2","len_w":3,"len_y":0,"smooth":false,"rationally_smooth":true,"p_smooth":{"2":false,"3":true}}"#
    );
    assert_eq!(r.csv_fields(&[2, 3, 5]).len(), ScanRecord::csv_header(&[2, 3, 5]).len());
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("nested").join("cache.jsonl");
    let g = WeylGroup::new(Gcm::builtin_gcm('G', 2).unwrap());
    let w = g.longest_element().unwrap();
    let t = Table::new(&g, &w).unwrap();
    let mut c = Cache::open(&path).unwrap();
    assert!(c.is_empty());
    c.append(vec![CacheEntry::from_table(&g, &t)]).unwrap();

    let c = Cache::open(&path).unwrap();
    assert_eq!(c.len(), 1);
    let entry = c.get(&g.gcm().digest(), &g.canonical_reduced_word(&w)).unwrap();
    let back = entry.to_table(&g).unwrap();
    assert_eq!(back.reports(), t.reports());
    assert!(c.get("0000000000000000", &g.canonical_reduced_word(&w)).is_none());
}

#[test]
fn exit_code_mapping() {
    assert_eq!(CliError::Usage("x".into()).exit_code(), exit::USAGE);
    assert_eq!(CliError::Core(psmooth_core::Error::LengthCap(25, 24)).exit_code(), exit::CAP);
    assert_eq!(CliError::Invariant("x".into()).exit_code(), exit::INVARIANT);
    assert_eq!(CliError::Core(psmooth_core::Error::NonFinite).exit_code(), exit::USAGE);
}
