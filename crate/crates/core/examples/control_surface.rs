//! Prints the wash-time surface over dirt degree and load volume as a
//! character map, with fabric thickness held at its midpoint.

use mamdani_flc::washer::{WashRequest, Washer};

fn main() -> Result<(), mamdani_flc::Error> {
    let washer = Washer::new();
    let shades: Vec<char> = " .:-=+*#%@".chars().collect();
    println!("wash time, dirt 0..100 left to right, load 8..0 top to bottom");
    for row in (0..=16).rev() {
        let load = row as f64 * 0.5;
        let mut line = format!("{load:>4} |");
        for col in 0..=50 {
            let dirt = col as f64 * 2.0;
            let minutes = washer.recommend(&WashRequest::new(dirt, 5.0, load))?.wash_time;
            let k = ((minutes / 60.0) * (shades.len() - 1) as f64).round() as usize;
            line.push(shades[k.min(shades.len() - 1)]);
        }
        println!("{line}");
    }
    Ok(())
}
