use affine_h2::group::named;
use affine_h2::matrix::matrix_export;

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "C1".into());
    let Some(e) = named::by_name(&name) else {
        eprintln!("unknown element {name}; try one of {}", named::NAMES.join(" "));
        std::process::exit(2);
    };
    let (plane, full) = matrix_export(&e);
    println!("{name} = {e}");
    if let Some(m) = plane {
        println!("{m}");
    }
    println!("{full}");
}
