use hfl_demo::{construction_json, curves_json, solve_json};
use serde_json::Value;

#[test]
fn heatmap_is_symmetric_with_exact_degree() {
    let v: Value =
        serde_json::from_str(&construction_json("prop2", 3, "2/3", 9, 0).unwrap()).unwrap();
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 81);
    for i in 0..9 {
        assert_eq!(cells[i * 9 + i], 0.0);
        for j in 0..9 {
            assert_eq!(cells[i * 9 + j], cells[j * 9 + i]);
        }
    }
    assert_eq!(v["min_weighted_degree"], "6/1");
}

#[test]
fn solve_round_trips_the_heatmap_graph() {
    let v: Value =
        serde_json::from_str(&construction_json("prop2", 3, "2/3", 9, 0).unwrap()).unwrap();
    let graph = v["graph"].to_string();
    let cert: Value = serde_json::from_str(&solve_json(&graph, 3, "2/3", true).unwrap()).unwrap();
    assert_eq!(cert["outcome"], "exhausted");
    let cert: Value = serde_json::from_str(&solve_json(&graph, 3, "2/3", false).unwrap()).unwrap();
    assert_eq!(cert["outcome"], "factor");
}

#[test]
fn curves_hit_the_known_points() {
    let v: Value = serde_json::from_str(&curves_json(&[2, 3], 6).unwrap()).unwrap();
    let r3 = &v["lower"][1]["conjecture"][4];
    assert_eq!(r3[0].as_f64().unwrap(), 4.0 / 6.0);
    assert!((r3[1].as_f64().unwrap() - 7.0 / 9.0).abs() < 1e-12);
    assert!((v["upper"][4][1].as_f64().unwrap() - 5.0 / 6.0).abs() < 1e-12);
    let r2 = &v["lower"][0]["conjecture"];
    let up = &v["upper"];
    assert_eq!(r2, up);
}

#[test]
fn bad_input_is_an_error() {
    assert!(construction_json("nope", 3, "1/2", 9, 0).is_err());
    assert!(construction_json("prop2", 3, "0.5", 9, 0).is_err());
    assert!(construction_json("prop2", 3, "1/2", 90, 0).is_err());
    assert!(solve_json("{", 3, "1/2", false).is_err());
    assert!(curves_json(&[1], 4).is_err());
}
