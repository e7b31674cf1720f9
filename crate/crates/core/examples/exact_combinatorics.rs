//! Exact rational combinatorics: harmonic numbers, multiple harmonic star
//! sums, Stirling numbers of the first kind, Bell polynomial values and the
//! partial-fraction expansion of 1/C(n+k, k).

use altsums::exact::{
    bell_y, bell_y_closed, binom_recip_coeffs, harmonic, mhs_star, parse_composition, stirling1, stirling1_closed,
};

fn main() -> altsums::Result<()> {
    println!("H_10 = {}", harmonic(10, 1));
    println!("H_10^(2) = {}", harmonic(10, 2));

    for s in ["2,1", "3,-1", "2,1,-1"] {
        let comp = parse_composition(s)?;
        println!("zeta*_6({s}) = {}", mhs_star(6, &comp));
    }

    let n = 12;
    for k in 1..=4 {
        let table = stirling1(n, k);
        let closed = stirling1_closed(n, k as u32)?;
        println!("s({n},{k}) = {table}, closed form gives {closed}");
    }

    for k in 1..=4 {
        println!("Y_{k}({n}) = {} (closed {})", bell_y(k, n), bell_y_closed(k, n)?);
    }

    let k = 4;
    let terms: Vec<String> = binom_recip_coeffs(k)
        .into_iter()
        .map(|(r, a)| format!("({a})/(n+{r})"))
        .collect();
    println!("1/C(n+{k},{k}) = {}", terms.join(" + "));
    Ok(())
}
