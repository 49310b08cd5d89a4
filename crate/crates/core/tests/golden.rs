use cosmetic_core::census::show_constants;
use cosmetic_core::cyclo::Level;

const CONSTANTS_R5: &str = include_str!("fixtures/constants_r5.txt");

fn exact_part(text: &str) -> Vec<&str> {
    text.lines().map(|l| l.split('≈').next().unwrap().trim_end()).collect()
}

#[test]
fn level_five_dump_is_stable() {
    let now = show_constants(5, 1).unwrap();
    assert_eq!(exact_part(&now), exact_part(CONSTANTS_R5));
}

#[test]
fn level_five_closed_forms() {
    let lvl = Level::new(5).unwrap();
    let golden_ratio = (1.0 + 5f64.sqrt()) / 2.0;
    // η₅ = 2 sin(2π/5)/√5 and [2] = A² + A⁻² = 1/φ
    let eta = lvl.eta().to_complex();
    assert!((eta.re - 2.0 * (2.0 * std::f64::consts::PI / 5.0).sin() / 5f64.sqrt()).abs() < 1e-12);
    assert!(eta.im.abs() < 1e-12);
    assert!((lvl.quantum_int(2).to_complex().re - 1.0 / golden_ratio).abs() < 1e-12);
    assert!(CONSTANTS_R5.contains("eta = (0, 2, 0, 1, 0, 1, 0, -3)/5 @ 20"));
}
