//! Recommends wash cycles with the built-in washing-machine controller.

use mamdani_flc::washer::{recommend, WashRequest};

fn main() -> Result<(), mamdani_flc::Error> {
    let requests = [
        ("lightly soiled shirts", WashRequest::new(10.0, 1.5, 2.0)),
        ("average mixed load", WashRequest::new(50.0, 5.0, 4.0)),
        ("muddy jeans", WashRequest::new(85.0, 8.0, 5.5)),
        ("full load of towels", WashRequest::new(40.0, 9.0, 8.0)),
    ];
    println!("{:<24} {:>10} {:>10} {:>10}", "load", "time/min", "water/L", "soap/g");
    for (label, req) in requests {
        let plan = recommend(&req)?;
        println!(
            "{label:<24} {:>10.1} {:>10.1} {:>10.1}",
            plan.wash_time, plan.water_volume, plan.detergent
        );
    }
    Ok(())
}
