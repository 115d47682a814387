//! Dimensions of P^u_k, by the sandwich method and by transfer matrices, and
//! the cyclic-symmetry check on the dephased Paley matrix.
//!
//! cargo run --release --example relative_commutant

use planar::biunitary::{dim_pu_k, dim_pu_k_transfer, prop_21117_check, star_triangle_solve, temperley_lieb_comparison, GenHadamard};

fn main() -> planar::Result<()> {
    for q in 2..=4 {
        let h = GenHadamard::fourier(q)?;
        for k in 1..=3 {
            println!("Fourier-{q}, k = {k}: {} / {}", dim_pu_k(&h, k)?, dim_pu_k_transfer(&h, k)?);
        }
        println!("  star-triangle solutions: {}", star_triangle_solve(&h)?.len());
    }
    let h = GenHadamard::paley(12)?.dephase();
    let t = temperley_lieb_comparison(&h, 2)?;
    println!("Paley-12: dim P_2 {} vs Catalan {}", t.dim, t.catalan);
    let r = prop_21117_check(&h)?;
    println!("  star {}, cycle {:?}, dim P_2 {}, conclusion holds: {}", r.star, r.cycle, r.dim_p2, r.conclusion_holds);
    Ok(())
}
