//! Build `f(z) = z + 0.2 z^2`, average its derivative over the two
//! canonical boundary points, and run the first sufficient-condition
//! check with the minimal amplification factor.
//!
//! ```console
//! cargo run -p gft --example verify
//! ```

use gft::{alpha_mean, check_thm1, AlphaMode, ClassMember, Complex64, SamplingConfig};

fn main() -> gft::Result<()> {
    let a = Complex64::new(0.2, 0.0);
    let f = ClassMember::monomial(1, a)?; // f(z) = z + 0.2 z^2
    let (z1, z2) = gft::monomial_boundary_points(a, 1); // f'(z1) = 1.4, f'(z2) = 1 + 0.4i
    let spec = alpha_mean(&f, &[z1, z2], AlphaMode::DerivativeMean)?.with_rho(gft::rho_min(
        gft::ExampleId::Ex1,
        1,
        0.2,
    )?)?;
    let report = check_thm1(&f, &spec, &SamplingConfig::default())?;
    assert!(report.hypothesis_ok && report.conclusion_ok);
    println!("{}", report.to_json_string());
    Ok(())
}
