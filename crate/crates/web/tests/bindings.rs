use arithphase_web::{
    expectation_beta_data, expectation_data, ford_circle_data, spectrum_data, tangent_neighbour_count,
};

#[test]
fn ford_circles_of_order_three() {
    let data = ford_circle_data(3).unwrap();
    assert_eq!(data.len(), 5 * 4);
    assert_eq!(&data[8..12], &[0.5, 0.125, 0.125, 2.0]);
    assert_eq!(tangent_neighbour_count(3), Ok(4));
    assert_eq!(tangent_neighbour_count(30).unwrap() as usize, ford_circle_data(30).unwrap().len() / 4 - 1);
    assert!(ford_circle_data(0).is_err());
    assert!(ford_circle_data(61).is_err());
}

#[test]
fn expectation_layout() {
    let data = expectation_data(1.0, 12, "totient").unwrap();
    assert_eq!(data.len(), 2 * 11);
    // q = 7 is the sixth entry, its mangoldt fit is π
    assert!((data[2 * 5 + 1] - std::f64::consts::PI).abs() < 1e-15);
    assert!(data[2 * 5] > data[2 * 4]);
    assert!(expectation_data(1.0, 12, "half").is_err());
    let curve = expectation_beta_data(13, 50, "full").unwrap();
    assert_eq!(curve.len(), 50);
    assert!((curve[0] - curve[49]).abs() < 1e-9);
}

#[test]
fn spectrum_slopes() {
    let s = spectrum_data("carmichael", 1 << 14).unwrap();
    assert!((s.slope() + 0.70).abs() <= 0.15, "{}", s.slope());
    assert_eq!(s.freqs().len(), 1 << 13);
    assert!(spectrum_data("epsilon_b", 32).is_err());
    assert!(spectrum_data("noise", 1024).is_err());
}
