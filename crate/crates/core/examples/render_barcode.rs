//! Draws barcodes as text and writes an SVG next to the working directory.

use flatmorse::render::{render_bars, render_barcode, Barcode, Format, RenderSpec};
use flatmorse::samples;

fn main() {
    let spec = RenderSpec { format: Format::Ascii, width: 72, show_grid: true };
    println!("{}", render_barcode(&samples::reference_diagram(), &spec).unwrap());
    println!("{}", render_barcode(&samples::small_barcode(), &spec).unwrap());
    println!("{}", render_bars(&Barcode::from_bars(samples::inadmissible_bars()), &spec).unwrap());
    println!("{}", render_barcode(&samples::hexagon_unreachable_diagram(), &spec).unwrap());

    let svg = RenderSpec { format: Format::Svg, width: 640, show_grid: true };
    let path = std::env::temp_dir().join("reference_barcode.svg");
    std::fs::write(&path, render_barcode(&samples::reference_diagram(), &svg).unwrap()).unwrap();
    println!("wrote {}", path.display());
}
