//! Draws and certifies random instances of every kind in every applicable mode.
//! Usage: `cargo run --release --example corpus [count]`.

use std::time::Instant;
use visrep::drawers::{draw, Mode};
use visrep::io::{generate_instance, InstanceKind};
use visrep::verifier::{check_area, check_thickness_two, verify};

fn main() -> visrep::Result<()> {
    let count: u64 = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(50);
    let start = Instant::now();
    for kind in [InstanceKind::Planar, InstanceKind::Ic, InstanceKind::OnePlanar] {
        let (mut drawn, mut certified) = (0, 0);
        for seed in 0..count {
            let n = 8 + (seed as usize * 37) % 193;
            let emb = generate_instance(n, seed, kind)?;
            let mut modes = vec![Mode::TShape];
            if emb.is_ic() {
                modes.push(Mode::FlatRectangle);
            }
            if emb.crossings().is_empty() {
                modes.push(Mode::Planar);
            }
            for mode in modes {
                let rep = draw(&emb, mode)?;
                drawn += 1;
                let ok = verify(&rep, emb.graph().edges()).ok() && check_thickness_two(&rep) && check_area(&rep, n, mode);
                certified += ok as usize;
            }
        }
        println!("{}: {certified}/{drawn} drawings certified", kind.as_str());
    }
    println!("{:?}", start.elapsed());
    Ok(())
}
