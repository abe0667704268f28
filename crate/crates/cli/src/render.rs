//! Domain coloring: sample a complex function on a grid and write a binary
//! PPM where the hue encodes arg f (red at argument 0, through yellow,
//! green, teal at the negative reals, blue, magenta) and the brightness
//! encodes |f| (poles clip to full brightness).

use num_complex::Complex64;
use std::f64::consts::PI;

#[derive(Debug, Clone, Copy)]
pub struct Window {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Window {
    pub fn parse(text: &str) -> Result<Window, String> {
        let parts: Vec<f64> = text
            .split(',')
            .map(|p| p.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .map_err(|e| format!("window `{text}`: {e}"))?;
        if parts.len() != 4 {
            return Err(format!("window `{text}`: expected x0,x1,y0,y1"));
        }
        if parts[0] >= parts[1] || parts[2] >= parts[3] {
            return Err(format!("window `{text}`: empty extent"));
        }
        Ok(Window {
            x0: parts[0],
            x1: parts[1],
            y0: parts[2],
            y1: parts[3],
        })
    }
}

fn hsv_to_rgb(h: f64, s: f64, v: f64) -> [u8; 3] {
    let h = h.rem_euclid(360.0);
    let c = v * s;
    let x = c * (1.0 - ((h / 60.0) % 2.0 - 1.0).abs());
    let m = v - c;
    let (r, g, b) = match (h / 60.0) as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let to_byte = |u: f64| ((u + m).clamp(0.0, 1.0) * 255.0).round() as u8;
    [to_byte(r), to_byte(g), to_byte(b)]
}

/// Map one function value to a pixel.
pub fn color_of(value: Complex64) -> [u8; 3] {
    if !value.re.is_finite() || !value.im.is_finite() {
        return [255, 255, 255]; // poles clip to maximum brightness
    }
    let modulus = value.norm();
    let hue = value.arg().rem_euclid(2.0 * PI) / (2.0 * PI) * 360.0;
    let brightness = modulus / (1.0 + modulus);
    hsv_to_rgb(hue, 1.0, brightness)
}

/// Render a grid to binary PPM (P6, maxval 255). Rows run from y1 down to
/// y0 so the image has mathematical orientation.
pub fn render_ppm<F>(window: Window, resolution: u32, mut f: F) -> Vec<u8>
where
    F: FnMut(Complex64) -> Complex64,
{
    let width = resolution;
    let aspect = (window.y1 - window.y0) / (window.x1 - window.x0);
    let height = ((resolution as f64) * aspect).round().max(1.0) as u32;
    let mut out = format!("P6\n{width} {height}\n255\n").into_bytes();
    for row in 0..height {
        let y = window.y1 - (row as f64 + 0.5) / height as f64 * (window.y1 - window.y0);
        for col in 0..width {
            let x = window.x0 + (col as f64 + 0.5) / width as f64 * (window.x1 - window.x0);
            let value = f(Complex64::new(x, y));
            out.extend_from_slice(&color_of(value));
        }
    }
    out
}
