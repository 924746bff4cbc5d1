use num_traits::{One, Signed};

use crate::algebra::SuperAlgebra;
use crate::rational::format_rational;

/// Canonical text: header lines, then one line per nonzero product sorted by
/// `(left label, right label)` as strings, terms in basis order of the result.
pub fn serialize(a: &SuperAlgebra) -> String {
    let (n, m) = a.dims();
    let mut out = format!("dims {n} {m}\n");
    for (kw, labels) in [("even", a.labels_even()), ("odd", a.labels_odd())] {
        out.push_str(kw);
        for l in labels {
            out.push(' ');
            out.push_str(l);
        }
        out.push('\n');
    }
    let mut products: Vec<_> = a.nonzero_products().collect();
    products.sort_by(|x, y| (a.label(x.0), a.label(x.1)).cmp(&(a.label(y.0), a.label(y.1))));
    for (i, j, terms) in products {
        out.push_str(&format!("[{},{}] =", a.label(i), a.label(j)));
        for (idx, (k, c)) in terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    out.push_str(" -");
                } else {
                    out.push(' ');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            if !mag.is_one() {
                out.push_str(&format_rational(&mag));
                out.push(' ');
            }
            out.push_str(a.label(*k));
        }
        out.push('\n');
    }
    out
}
