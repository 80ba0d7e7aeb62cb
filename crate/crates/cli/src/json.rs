//! Minimal deterministic JSON writer: keys in insertion order and floats in
//! a fixed %.17g-style rendering, so identical configurations produce
//! byte-identical output.

use num_complex::Complex64;

/// %.17g-style rendering: 17 significant digits, scientific notation outside
/// [1e-4, 1e17), trailing zeros stripped.
pub fn g17(x: f64) -> String {
    if x.is_nan() {
        return "\"nan\"".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "\"inf\"".into() } else { "\"-inf\"".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let s = format!("{:.16e}", x);
    let epos = s.find('e').expect("exponent marker");
    let exp: i32 = s[epos + 1..].parse().expect("exponent digits");
    let mantissa = &s[..epos];
    if exp < -4 || exp >= 17 {
        let m = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{}e{}{:02}", m, if exp < 0 { "-" } else { "+" }, exp.abs())
    } else {
        let prec = (16 - exp).max(0) as usize;
        let t = format!("{:.*}", prec, x);
        if t.contains('.') {
            t.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            t
        }
    }
}

/// JSON value with deterministic rendering.
pub enum Json {
    Null,
    Bool(bool),
    Num(f64),
    Int(i64),
    Str(String),
    /// Complex numbers as two-element [re, im] arrays.
    Complex(Complex64),
    Arr(Vec<Json>),
    Obj(Vec<(&'static str, Json)>),
}

impl Json {
    pub fn complex(z: Complex64) -> Json {
        Json::Complex(z)
    }

    pub fn render(&self, out: &mut String) {
        match self {
            Json::Null => out.push_str("null"),
            Json::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
            Json::Num(x) => out.push_str(&g17(*x)),
            Json::Int(i) => out.push_str(&i.to_string()),
            Json::Str(s) => {
                out.push('"');
                for ch in s.chars() {
                    match ch {
                        '"' => out.push_str("\\\""),
                        '\\' => out.push_str("\\\\"),
                        '\n' => out.push_str("\\n"),
                        c if (c as u32) < 0x20 => {
                            out.push_str(&format!("\\u{:04x}", c as u32));
                        }
                        c => out.push(c),
                    }
                }
                out.push('"');
            }
            Json::Complex(z) => {
                out.push('[');
                out.push_str(&g17(z.re));
                out.push(',');
                out.push_str(&g17(z.im));
                out.push(']');
            }
            Json::Arr(items) => {
                out.push('[');
                for (i, it) in items.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    it.render(out);
                }
                out.push(']');
            }
            Json::Obj(fields) => {
                out.push('{');
                for (i, (k, v)) in fields.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push('"');
                    out.push_str(k);
                    out.push_str("\":");
                    v.render(out);
                }
                out.push('}');
            }
        }
    }

}

impl std::fmt::Display for Json {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut s = String::new();
        self.render(&mut s);
        s.push('\n');
        f.write_str(&s)
    }
}
