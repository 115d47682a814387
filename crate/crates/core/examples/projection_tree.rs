//! The principal graph built from words in two projections, and traces of
//! products of Jones-Wenzl-like idempotents.
//!
//! cargo run --example projection_tree

use planar::coeff::rat;
use planar::pathalg::{build_tree, runs, tree_level_sizes, word_trace, TreeSpec};

fn main() -> planar::Result<()> {
    let spec = TreeSpec::two_projection_example(5);
    let (g, words) = build_tree(&spec)?;
    println!("{} vertices, level sizes {:?}", g.n(), tree_level_sizes(&spec)?);
    println!("first words: {:?}", &words[..6.min(words.len())]);

    let (delta, tp) = (rat(5, 1), rat(2, 5));
    let tq = rat(1, 1) - &tp;
    for w in [vec![0], vec![0, 1], vec![1, 1, 0], vec![0, 1, 1, 0]] {
        let r: Vec<_> = runs(&w).into_iter().map(|(s, m)| (if s == 0 { tp.clone() } else { tq.clone() }, m)).collect();
        println!("tr {w:?} = {}", word_trace(&r, &delta)?);
    }
    Ok(())
}
