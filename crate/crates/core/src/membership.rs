//! Membership in a computed closure, possibly with several components.

use crate::closure::{ClosureConfig, Engine, GroupDescription};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Matrix;

pub use crate::closure::member_connected;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    /// Index into `GroupDescription::components`.
    pub component_index: Option<usize>,
}

/// Tests `g b^{-1}` against the identity component for every component
/// representative `b`, in order.
pub fn member<F: Field>(group: &GroupDescription<F>, g: &Matrix<F>, config: &ClosureConfig) -> Result<MembershipVerdict> {
    if (g.rows(), g.cols()) != (group.n, group.n) {
        return Err(Error::DimensionMismatch(format!("expected {0}x{0}, got {1}x{2}", group.n, g.rows(), g.cols())));
    }
    if !g.is_invertible() {
        return Err(Error::Singular);
    }
    let mut engine = Engine::new(g.field().clone(), group.n, config.clone());
    let mut found = None;
    for (i, b) in group.components.iter().enumerate() {
        let bi = b.inverse().ok_or(Error::Singular)?;
        if engine.member_connected(&group.lie_algebra, &g.mul(&bi))? {
            if let Some(j) = found {
                return Err(Error::InvariantViolation(format!("element lies in components {j} and {i}")));
            }
            found = Some(i);
        }
    }
    Ok(MembershipVerdict { member: found.is_some(), component_index: found })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::zariski_closure;
    use crate::field::QQ;

    #[test]
    fn sign_group() {
        let cfg = ClosureConfig::default();
        let s = Matrix::from_ints(QQ, &[vec![-1, 0], vec![0, 1]]);
        let (g, _) = zariski_closure(&QQ, 2, std::slice::from_ref(&s), &cfg).unwrap();
        let v = member(&g, &s, &cfg).unwrap();
        assert_eq!(v, MembershipVerdict { member: true, component_index: Some(1) });
        let v = member(&g, &Matrix::identity(QQ, 2), &cfg).unwrap();
        assert_eq!(v.component_index, Some(0));
        let v = member(&g, &Matrix::from_ints(QQ, &[vec![2, 0], vec![0, 1]]), &cfg).unwrap();
        assert!(!v.member && v.component_index.is_none());
    }
}
