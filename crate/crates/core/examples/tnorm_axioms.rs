//! Tabulates the min and product t-norms on a coarse grid and checks the
//! four t-norm axioms on it.

use mamdani_flc::fuzzy::{snorm_max, Degree, TNorm};

fn main() {
    let grid: Vec<Degree> = (0..=4).map(|k| Degree::new(k as f64 / 4.0).unwrap()).collect();

    for t in [TNorm::Min, TNorm::Product] {
        println!("{} t-norm", t.keyword());
        print!("{:>6}", "");
        for b in &grid {
            print!("{:>8}", b.value());
        }
        println!();
        for &a in &grid {
            print!("{:>6}", a.value());
            for &b in &grid {
                print!("{:>8.4}", t.apply(a, b).value());
            }
            println!();
        }

        let mut ok = true;
        for &a in &grid {
            ok &= t.apply(a, Degree::ONE) == a;
            for &b in &grid {
                ok &= t.apply(a, b) == t.apply(b, a);
                for &c in &grid {
                    ok &= b > c || t.apply(a, b) <= t.apply(a, c);
                    ok &= (t.apply(t.apply(a, b), c).value() - t.apply(a, t.apply(b, c)).value()).abs() <= 1e-15;
                }
            }
        }
        println!("axioms hold: {ok}\n");
    }

    let (a, b) = (grid[1], grid[3]);
    println!("max s-norm: max({a}, {b}) = {}", snorm_max(a, b));
}
