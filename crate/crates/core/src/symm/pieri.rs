use super::symfn::{Basis, SymFn};
use crate::error::{Error, Result};

/// `e_k * g` in the Schur basis (dual Pieri rule: add a vertical strip of size `k`).
pub fn pieri_multiply_ek(g: &SymFn, k: usize) -> Result<SymFn> {
    if g.basis() != Basis::Schur {
        return Err(Error::WrongBasis { expected: "schur" });
    }
    let mut out = SymFn::zero(Basis::Schur);
    for (lambda, c) in g.terms() {
        for mu in lambda.add_vertical_strip(k) {
            out.add_term(mu, c.clone());
        }
    }
    Ok(out)
}

/// `e_k^times * g`, optionally discarding everything outside a `rows x cols`
/// box after each step (this is the ring map to `H*(Gr(rows, rows + cols))`).
pub fn pieri_power_ek(g: &SymFn, k: usize, times: usize, clip: Option<(usize, usize)>) -> Result<SymFn> {
    let mut cur = g.clone();
    for _ in 0..times {
        cur = pieri_multiply_ek(&cur, k)?;
        if let Some((rows, cols)) = clip {
            cur = SymFn::from_terms(
                Basis::Schur,
                cur.terms()
                    .filter(|(p, _)| p.fits_in_box(rows, cols))
                    .map(|(p, c)| (p.clone(), c.clone())),
            );
        }
    }
    Ok(cur)
}
