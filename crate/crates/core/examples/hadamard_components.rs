//! Profile components, standardness and gauge invariance of Hadamard matrices.
//!
//! cargo run --release --example hadamard_components

use planar::biunitary::{components, standardness_report, GenHadamard, Gauge};

fn main() -> planar::Result<()> {
    let fixtures = [
        ("Fourier-5", GenHadamard::fourier(5)?),
        ("Sylvester-8", GenHadamard::sylvester(3)?),
        ("Paley-12", GenHadamard::paley(12)?),
    ];
    for (name, h) in &fixtures {
        h.validate()?;
        let c = components(h)?;
        println!("{name}: {} components, sizes {:?}, traces {}", c.count(), c.sizes(), c.traces().iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
        println!("  {}", standardness_report(h)?.verdict());
    }

    let h = &fixtures[2].1;
    let g = Gauge::Root {
        order: 4,
        row: (0..12).map(|i| i % 4).collect(),
        col: (0..12).map(|i| (3 * i) % 4).collect(),
        row_perm: (0..12).rev().collect(),
        col_perm: (0..12).map(|i| (5 * i) % 12).collect(),
    };
    let moved = h.gauge(&g)?;
    println!("after a gauge: {} components", components(&moved)?.count());
    Ok(())
}
