use positroid_wasm::{class_json, stanley_json, support_scan_json};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn stanley_of_the_example_cell() {
    let v = parse(stanley_json("[4,3,6,5,8,7,10,9]").unwrap());
    assert_eq!(v["k"], 2);
    assert_eq!(v["dim"], 8);
    let terms = v["expansion"]["terms"].as_array().unwrap();
    assert!(terms.contains(&serde_json::json!({"partition": [2, 2], "coeff": 2})));
    assert_eq!(v["text"], "s[4] + 3 s[3,1] + 2 s[2,2] + 3 s[2,1,1] + s[1,1,1,1]");
}

#[test]
fn class_of_the_example_cell() {
    let v = parse(class_json("[4,3,6,5,8,7,10,9]", 4).unwrap());
    assert_eq!(v["degree"]["exact"], "2");
    assert_eq!(v["class"]["scalar_den"], 2);
    let err = class_json("[2,3,4,6,10]", 2).unwrap_err();
    assert!(err.contains("no kinematical support"), "{err}");
}

#[test]
fn scan_lists_every_cell() {
    let v = parse(support_scan_json(1, 4, 2).unwrap());
    let cells = v["cells"].as_array().unwrap();
    // Bound(1, 4) has 15 cells; the 4 of dimension 2 are the top cells
    assert_eq!(cells.len(), 15);
    let top: Vec<_> = cells.iter().filter(|c| c["dim"] == 2).collect();
    assert_eq!(top.len(), 4);
    assert!(top.iter().all(|c| c["support"] == true && c["degree"] == "1"));
}

#[test]
fn bad_input_is_reported_not_panicked() {
    assert!(stanley_json("[1,1]").unwrap_err().contains("bijection"));
    assert!(stanley_json("[2,3,4,5,6,7,8,9,10]").unwrap_err().contains("demo limit"));
    assert!(support_scan_json(2, 4, 2).is_err());
}
