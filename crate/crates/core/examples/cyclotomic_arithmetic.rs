//! Exact arithmetic in cyclotomic fields.
//!
//! Run with `cargo run --example cyclotomic_arithmetic`.

use strong_gelfand::cyclo::cyclotomic_polynomial;
use strong_gelfand::{Cyclotomic, Result};

fn main() -> Result<()> {
    let z5 = |k| Cyclotomic::zeta(5, k);
    let golden = z5(1)? + z5(4)?;
    let other = z5(2)? + z5(3)?;
    println!("ζ5 + ζ5^4       = {golden}  ≈ {:.12}", golden.approx().re);
    println!("(ζ5 + ζ5^4)(ζ5^2 + ζ5^3) = {}", &golden * &other);

    let i = Cyclotomic::zeta(4, 1)?;
    println!("i² = {}", &i * &i);
    println!("conj(i) = {}", i.conj());

    let w = Cyclotomic::zeta(3, 1)?;
    println!("ζ3 lifted to Q(ζ6) = {}", w.lift(6)?);
    println!("ζ3 + ζ3² as an integer: {:?}", (&w + &w.pow(2)).as_rational_integer());

    let parsed: Cyclotomic = "-z12^1 + z12^3".parse()?;
    println!("parsed {parsed} equals ζ12^5: {}", parsed == Cyclotomic::zeta(12, 5)?);

    for n in [1, 4, 6, 12] {
        println!("Φ_{n} coefficients: {:?}", cyclotomic_polynomial(n)?);
    }
    Ok(())
}
