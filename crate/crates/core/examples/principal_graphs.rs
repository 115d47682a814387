//! Path algebras on principal graphs, Perron traces and the ADE test.
//!
//! cargo run --example principal_graphs

use planar::pathalg::{ade_admissibility, perron_trace, walk_basis, walk_multiply, Ade, PrincipalGraph};

fn main() -> planar::Result<()> {
    let e6 = PrincipalGraph::e(6)?;
    let t = perron_trace(&e6, None)?;
    println!("E6: delta = {:.6}, trace vector {:.4?}", t.delta, t.t);
    for k in 0..=4 {
        println!("  {} loops of length 2*{k}", walk_basis(&e6, k)?.len());
    }

    let walks = walk_basis(&PrincipalGraph::a(4)?, 2)?;
    for a in &walks {
        for b in &walks {
            if let Some(w) = walk_multiply(a, b)? {
                println!("A4: {:?} * {:?} = {:?}", a.vertices, b.vertices, w.vertices);
            }
        }
    }

    for f in [Ade::D(4), Ade::D(5), Ade::D(6), Ade::E6, Ade::E7, Ade::E8] {
        let v = ade_admissibility(f)?;
        println!("{}: admissible {}, chirality exponents {:?}", v.graph, v.admissible, v.chirality);
    }
    Ok(())
}
