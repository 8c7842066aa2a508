//! Knot and link invariants: Kauffman bracket, writhe, Jones, Alexander,
//! and the determinant.

mod alexander;
mod bracket;

pub use crate::pd::CrossingSign;
pub use alexander::{alexander, determinant_of as determinant, normalize as normalize_alexander};
pub use bracket::kauffman_bracket;

use crate::error::InvariantError;
use crate::pd::PlanarDiagram;
use crate::poly::{Grid, LaurentPolynomial};

/// Signed crossing count under the orientation inferred from the diagram.
pub fn writhe(pd: &PlanarDiagram) -> Result<i64, InvariantError> {
    pd.require_closed()?;
    let orientation = pd.orient()?;
    Ok((0..pd.crossing_count())
        .map(|c| orientation.sign(c).value())
        .sum())
}

/// Jones polynomial `V = (-A)^(-3w) ⟨D⟩` with `A = t^(-1/4)`, on the
/// `t^(1/2)` grid.
pub fn jones(pd: &PlanarDiagram) -> Result<LaurentPolynomial, InvariantError> {
    let w = writhe(pd)?;
    let bracket = kauffman_bracket(pd)?;
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    let shift = i32::try_from(-3 * w).map_err(|_| InvariantError::Overflow)?;
    let normalized = LaurentPolynomial::monomial(Grid::A, shift, sign).checked_mul(&bracket)?;
    debug_assert!(normalized.terms().all(|(e, _)| e % 2 == 0));
    // A^m = t^(-m/4) = (t^(1/2))^(-m/2)
    Ok(normalized.map_exponents(Grid::HalfT, |m| -m / 2))
}

/// Jones polynomial of the `n`-component unlink, `(-t^(1/2) - t^(-1/2))^(n-1)`.
pub fn unlink_jones(n: usize) -> LaurentPolynomial {
    let delta = LaurentPolynomial::from_terms(Grid::HalfT, [(-1, -1), (1, -1)]);
    (1..n).fold(LaurentPolynomial::one(Grid::HalfT), |acc, _| &acc * &delta)
}

/// How a computed Jones polynomial relates to a reference one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChiralMatch {
    /// Equal as polynomials.
    Same,
    /// Equal after `t -> 1/t`.
    Mirror,
    Different,
}

pub fn compare_jones(computed: &LaurentPolynomial, reference: &LaurentPolynomial) -> ChiralMatch {
    if computed == reference {
        ChiralMatch::Same
    } else if computed.inverted() == *reference {
        ChiralMatch::Mirror
    } else {
        ChiralMatch::Different
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pd::parse_pd;

    const TREFOIL: &str = "X_{1,4,2,5} X_{3,6,4,1} X_{5,2,6,3}";

    fn half(terms: &[(i32, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(Grid::HalfT, terms.iter().copied())
    }

    #[test]
    fn writhe_examples() {
        assert_eq!(writhe(&PlanarDiagram::unlink(1)).unwrap(), 0);
        assert_eq!(writhe(&parse_pd("X_{1,1,2,2}").unwrap()).unwrap(), 1);
        assert_eq!(writhe(&parse_pd("X_{1,2,2,1}").unwrap()).unwrap(), -1);
        // sign rule calibration: this diagram is the left-handed trefoil
        assert_eq!(writhe(&parse_pd(TREFOIL).unwrap()).unwrap(), -3);
    }

    #[test]
    fn jones_examples() {
        assert_eq!(jones(&PlanarDiagram::unlink(1)).unwrap(), half(&[(0, 1)]));
        assert_eq!(
            jones(&PlanarDiagram::unlink(2)).unwrap(),
            half(&[(-1, -1), (1, -1)])
        );
        assert_eq!(
            jones(&parse_pd("X_{1,1,2,2}").unwrap()).unwrap(),
            half(&[(0, 1)])
        );
        assert_eq!(
            jones(&parse_pd("X_{1,2,2,1}").unwrap()).unwrap(),
            half(&[(0, 1)])
        );
        let trefoil = jones(&parse_pd(TREFOIL).unwrap()).unwrap();
        assert_eq!(trefoil, half(&[(-8, -1), (-6, 1), (-2, 1)]));
        assert_eq!(trefoil.to_string(), "-t^-4 + t^-3 + t^-1");
    }

    #[test]
    fn mirror_inverts_jones() {
        let pd = parse_pd(TREFOIL).unwrap();
        let v = jones(&pd).unwrap();
        let m = jones(&pd.mirror()).unwrap();
        assert_eq!(m, v.inverted());
        assert_eq!(compare_jones(&m, &v), ChiralMatch::Mirror);
        assert_eq!(compare_jones(&v, &v), ChiralMatch::Same);
    }

    #[test]
    fn unlink_reference() {
        assert_eq!(unlink_jones(1), half(&[(0, 1)]));
        assert_eq!(unlink_jones(2).to_string(), "-t^-1/2 - t^1/2");
        assert_eq!(unlink_jones(3), jones(&PlanarDiagram::unlink(3)).unwrap());
    }
}
