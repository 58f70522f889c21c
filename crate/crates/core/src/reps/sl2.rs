use crate::scalars::Scalar;

use super::{Matrix, RepError};

/// a_λ = [[1, λ], [0, 1]].
pub fn a_lambda<S: Scalar>(lambda: &S) -> Matrix<S> {
    let (o, z) = (lambda.one_like(), lambda.zero_like());
    Matrix::from_rows(vec![vec![o.clone(), lambda.clone()], vec![z, o]])
}

/// b_λ(u) = [[1−u, λu²], [−1/λ, 1+u]].
pub fn b_lambda<S: Scalar>(lambda: &S, u: &S) -> Result<Matrix<S>, RepError> {
    let inv = lambda.inverse().ok_or(RepError::NotInvertible)?;
    let o = lambda.one_like();
    Ok(Matrix::from_rows(vec![
        vec![o.minus(u), lambda.times(&u.times(u))],
        vec![inv.negate(), o.plus(u)],
    ]))
}

/// b(u) = b_1(u).
pub fn b_of<S: Scalar>(u: &S) -> Matrix<S> {
    b_lambda(&u.one_like(), u).expect("1 is invertible")
}

/// c(v) = [[1, v], [0, 1]].
pub fn c_of<S: Scalar>(v: &S) -> Matrix<S> {
    a_lambda(v)
}

/// d_λ = diag(1, λ).
pub fn d_lambda<S: Scalar>(lambda: &S) -> Matrix<S> {
    Matrix::diagonal(&[lambda.one_like(), lambda.clone()])
}

/// The right action x.λ = d_λ⁻¹ x d_λ.
pub fn dot_lambda<S: Scalar>(x: &Matrix<S>, lambda: &S) -> Result<Matrix<S>, RepError> {
    let d = d_lambda(lambda);
    let dinv = d.inverse().ok_or(RepError::NotInvertible)?;
    Ok(dinv.mul(x).mul(&d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, rat_int, Rational, ResidueScalar, Ring};

    #[test]
    fn determinants_are_one() {
        for (l, u) in [(rat(3, 2), rat(-5, 7)), (rat_int(1), rat_int(4)), (rat(-2, 9), rat_int(0))] {
            assert_eq!(b_lambda(&l, &u).unwrap().det().unwrap(), rat_int(1));
        }
        assert!(b_lambda(&rat_int(0), &rat_int(1)).is_err());
    }

    #[test]
    fn conjugation_identities() {
        let v = rat(5, 3);
        let b = b_of(&rat_int(0));
        let lhs = c_of(&v).mul(&b).mul(&c_of(&v).inverse().unwrap());
        assert_eq!(lhs.distance(&b_of(&v)), 0.0);
        let (l, u) = (rat(7, 2), rat(-1, 3));
        assert_eq!(dot_lambda(&b_of(&u), &l).unwrap().distance(&b_lambda(&l, &u).unwrap()), 0.0);
        // c(v) b_λ(0) c(v)⁻¹ = b_λ(v/λ)
        let lhs = c_of(&v).mul(&b_lambda(&l, &rat_int(0)).unwrap()).mul(&c_of(&v).inverse().unwrap());
        assert_eq!(lhs.distance(&b_lambda(&l, &(v.clone() / l.clone())).unwrap()), 0.0);
    }

    #[test]
    fn braid_relation_over_residues() {
        let l = ResidueScalar::new(5, 3, 7).unwrap();
        let u = l.from_i64_like(11);
        let a = a_lambda(&l);
        let b = b_lambda(&l, &u).unwrap();
        assert!(a.mul(&b).mul(&a).sub(&b.mul(&a).mul(&b)).is_zero());
        let _: Rational = rat_int(0);
    }
}
