//! Rendered barcodes compared against files in `tests/golden`.
//! Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;

use flatmorse::render::{render_bars, Barcode, Format, RenderSpec};
use flatmorse::samples;

fn check(name: &str, bars: &Barcode, spec: RenderSpec) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    let got = render_bars(bars, &spec).unwrap();
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &got).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(got, want, "{name} changed; rerun with UPDATE_GOLDEN=1 if intended");
}

fn ascii(width: usize, show_grid: bool) -> RenderSpec {
    RenderSpec { format: Format::Ascii, width, show_grid }
}

const SVG: RenderSpec = RenderSpec { format: Format::Svg, width: 480, show_grid: true };

#[test]
fn reference_diagram() {
    let bars = Barcode::from(&samples::reference_diagram());
    check("reference.txt", &bars, ascii(80, true));
    check("reference_plain.txt", &bars, ascii(40, false));
    check("reference.svg", &bars, SVG);
}

#[test]
fn small_barcode() {
    let bars = Barcode::from(&samples::small_barcode());
    check("small.txt", &bars, ascii(40, true));
    check("small.svg", &bars, SVG);
}

#[test]
fn inadmissible_bars() {
    let bars = Barcode::from_bars(samples::inadmissible_bars());
    check("inadmissible.txt", &bars, ascii(60, true));
    check("inadmissible.svg", &bars, SVG);
}
