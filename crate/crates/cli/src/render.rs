//! Plain-text rendering: exact fractions, `ζ^k` exponents, one `q`-slice per line.

use jacobi_mde::mde::{MDEquation, ModularCoefficient};
use jacobi_mde::ring::Monomial;
use jacobi_mde::series::Slice;
use jacobi_mde::{QZSeries, Rational};
use num_traits::{One, Signed, Zero};

/// `p/q`, or `p` for integers.
pub fn rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An exponent `num/den` for use after `^`: `3`, `-1`, `{1/8}`, `{-3/2}`.
pub fn exponent(num: i64, den: i64) -> String {
    let r = Rational::new(num.into(), den.into());
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{{{}/{}}}", r.numer(), r.denom())
    }
}

/// A weight or index given in doubled units: `3`, `-1/2`.
pub fn halves(v2: i64) -> String {
    rational(&Rational::new(v2.into(), 2.into()))
}

/// Joins signed terms as `a + b − c`, with a leading `−` if the first is negative.
/// Each item is `(negative, magnitude_text)`.
fn join_signed(items: impl IntoIterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, text)) in items.into_iter().enumerate() {
        match (i, neg) {
            (0, false) => {}
            (0, true) => out.push('−'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" − "),
        }
        out.push_str(&text);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `|c|·x` where `x` is a symbol (empty for a constant term).
fn scaled(c: &Rational, symbol: &str) -> (bool, String) {
    let mag = c.abs();
    let text = if symbol.is_empty() {
        rational(&mag)
    } else if mag.is_one() {
        symbol.to_string()
    } else if mag.is_integer() {
        format!("{mag}{symbol}")
    } else {
        format!("({}){symbol}", rational(&mag))
    };
    (c.is_negative(), text)
}

/// A Laurent polynomial in `ζ`: `ζ^-1 + 10 + ζ^1`.
pub fn slice(s: &Slice) -> String {
    join_signed(s.iter().filter(|(_, c)| !c.is_zero()).map(|(&l2, c)| {
        let symbol = if l2 == 0 {
            String::new()
        } else {
            format!("ζ^{}", exponent(l2, 2))
        };
        scaled(c, &symbol)
    }))
}

/// One line per nonzero `q`-slice: `q^1: 10ζ^-2 − 64ζ^-1 + 108 − 64ζ^1 + 10ζ^2`.
pub fn series(s: &QZSeries) -> String {
    let mut out = String::new();
    for (n24, sl) in s.slices() {
        out.push_str(&format!("q^{}: {}\n", exponent(n24, 24), slice(sl)));
    }
    if out.is_empty() {
        out.push_str("0\n");
    }
    out
}

/// `Σ cᵢ·mᵢ` for named symbols, e.g. `−(119/16)·E4^2`.
pub fn combination<'a>(terms: impl IntoIterator<Item = (&'a Rational, String)>) -> String {
    join_signed(terms.into_iter().filter(|(c, _)| !c.is_zero()).map(|(c, sym)| {
        if sym.is_empty() {
            return scaled(c, "");
        }
        let (neg, text) = scaled(c, &format!("·{sym}"));
        (neg, text.trim_start_matches('·').to_string())
    }))
}

/// `E4^a·E6^b`, or `1`.
pub fn eisenstein_monomial(a: u32, b: u32) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("E4", a), ("E6", b)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("·")
    }
}

pub fn monomial(m: &Monomial) -> String {
    m.to_string()
}

/// `ψ_j = H_{k+2j−2}⋯H_k(φ)` as text, e.g. `H_4H_2H_0(phi_0_1)`; `ψ_0` is `φ`.
pub fn chain(weight2: i64, j: usize, name: &str) -> String {
    if j == 0 {
        return name.to_string();
    }
    let ops: String = (0..j)
        .rev()
        .map(|i| format!("H_{}", exponent(weight2 + 4 * i as i64, 2)))
        .collect();
    format!("{ops}({name})")
}

/// `g_{2i} = …` over `E4^a·E6^b`.
pub fn modular_coefficient(g: &ModularCoefficient) -> String {
    let body = combination(g.terms().map(|(c, (a, b))| (c, eisenstein_monomial(a, b))));
    format!("g_{} = {body}", halves(g.weight2))
}

/// The whole equation, e.g.
/// `H_4H_2H_0(phi_0_1) − (101/4)·E4·H_0(phi_0_1) + 10·E6·phi_0_1 = 0`.
pub fn equation(eq: &MDEquation) -> String {
    let mut items = vec![(false, chain(eq.weight2, eq.degree, &eq.base_form))];
    for g in &eq.coeffs {
        let psi = chain(eq.weight2, g.chain_index, &eq.base_form);
        let terms: Vec<_> = g.terms().collect();
        match terms.as_slice() {
            [] => {}
            [(c, (a, b))] => {
                let (neg, text) = scaled(c, &format!("·{}·{psi}", eisenstein_monomial(*a, *b)));
                items.push((neg, text.trim_start_matches('·').to_string()));
            }
            _ => {
                let inner = combination(terms.iter().map(|(c, (a, b))| (*c, eisenstein_monomial(*a, *b))));
                items.push((false, format!("({inner})·{psi}")));
            }
        }
    }
    format!("{} = 0", join_signed(items))
}

#[cfg(test)]
mod tests {
    use super::*;
    use jacobi_mde::series::{int, rat};

    #[test]
    fn slices_render_with_unicode_minus() {
        let s: Slice = [
            (-4, int(10)),
            (-2, int(-64)),
            (0, int(108)),
            (2, int(-64)),
            (4, int(10)),
        ]
        .into_iter()
        .collect();
        assert_eq!(slice(&s), "10ζ^-2 − 64ζ^-1 + 108 − 64ζ^1 + 10ζ^2");
    }

    #[test]
    fn half_integral_exponents_and_fractions() {
        let s: Slice = [(-3, rat(3, 2)), (1, int(-1)), (0, rat(-1, 2))]
            .into_iter()
            .collect();
        assert_eq!(slice(&s), "(3/2)ζ^{-3/2} − 1/2 − ζ^{1/2}");
        assert_eq!(exponent(3, 24), "{1/8}");
        assert_eq!(exponent(-48, 24), "-2");
    }

    #[test]
    fn combinations() {
        let a = rat(-119, 16);
        let b = int(10);
        assert_eq!(
            combination([(&a, "E4^2".to_string()), (&b, "E6".to_string())]),
            "−(119/16)·E4^2 + 10·E6"
        );
        assert_eq!(combination([(&int(1), "E4".to_string())]), "E4");
        assert_eq!(combination(std::iter::empty()), "0");
    }
}
