use gradalg::report::{CharactersReport, IsoReport, Report};

#[test]
fn empty_character_list() {
    let r = Report::Characters(CharactersReport { characters: vec![] });
    assert_eq!(r.to_json(), r#"{"characters":[]}"#);
    assert_eq!(r.to_table(), "0 characters\n");
}

#[test]
fn negative_verdict_omits_witness() {
    let r = Report::Iso(IsoReport { isomorphic: false, sigma: None, scalars: None, matrix: None, checked_degree: 5 });
    assert_eq!(r.to_json(), r#"{"isomorphic":false,"checked_degree":5}"#);
}
