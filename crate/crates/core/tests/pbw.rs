//! Product identities coming from the Poincaré–Birkhoff–Witt decomposition
//! of the tensor algebra: the numeric Witt-dimension identity
//! Π_k (1−tᵏ)^{−d(n,k)} = 1/(1−nt) and its characteristic-class refinement
//! Π_k s(𝔏ᵏ(E))(tᵏ) = 1/(1−ch(E)t).

use liegiambelli_core::bundle::{class_to_char, symmetric_series, FormalBundle, TruncatedPoly};
use liegiambelli_core::free_lie::{lie_char, witt_dim};
use liegiambelli_core::ring::{Family, Field, GradedSeries, Generator};

use num_bigint::BigInt;
use num_traits::{One, Zero};

const T_ORDER: usize = 12;

/// Multiply a dense integer polynomial (mod t^{T_ORDER+1}) by
/// (1 − tᵏ)^{−d} = Σ_j C(d−1+j, j) t^{kj}.
fn mul_geometric_power(poly: &mut [BigInt], k: usize, d: &BigInt) {
    if d.is_zero() {
        return; // (1 - t^k)^0 = 1
    }
    let mut factor = vec![BigInt::zero(); poly.len()];
    let mut j = 0usize;
    while k * j < poly.len() {
        factor[k * j] = num_integer::binomial(d + BigInt::from(j) - 1, BigInt::from(j));
        j += 1;
    }
    let mut out = vec![BigInt::zero(); poly.len()];
    for (i, a) in poly.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in factor.iter().enumerate().take(poly.len() - i) {
            if !b.is_zero() {
                out[i + j] += a * b;
            }
        }
    }
    poly.clone_from_slice(&out);
}

#[test]
fn witt_dimensions_satisfy_the_generating_identity() {
    for n in 1..=5u64 {
        let mut poly = vec![BigInt::zero(); T_ORDER + 1];
        poly[0] = BigInt::one();
        for k in 1..=T_ORDER {
            let d = witt_dim(n, k as u64).unwrap();
            mul_geometric_power(&mut poly, k, &d);
        }
        let mut expect = BigInt::one();
        for (j, c) in poly.iter().enumerate() {
            assert_eq!(c, &expect, "n={n} t^{j}");
            expect *= BigInt::from(n);
        }
    }
}

#[test]
fn lie_pieces_satisfy_the_master_product_identity() {
    // Π_{k=1}^{5} s(𝔏ᵏ(E))(tᵏ) = Σ_j ch(E)ʲ tʲ up to t⁵, through weight 4,
    // for the universal rank-n bundle with class 1 + c_1 + ... + c_4.
    let t_order = 5usize;
    let order = 4u32;
    for n in [2i64, 3] {
        let mut class = GradedSeries::one(Field::Q, order);
        for i in 1..=order {
            class = class
                .add(&GradedSeries::generator(
                    Field::Q,
                    order,
                    Generator::new(Family::C, i),
                ))
                .unwrap();
        }
        let ch = class_to_char(&FormalBundle::new(n, class).unwrap()).unwrap();

        let mut lhs = TruncatedPoly::one(Field::Q, order, t_order);
        for k in 1..=t_order {
            let piece = symmetric_series(&lie_char(&ch, k as u32).unwrap(), t_order).unwrap();
            lhs = lhs.mul(&piece.stretch(k, t_order).unwrap()).unwrap();
        }

        let mut rhs = TruncatedPoly::new(Field::Q, order, t_order);
        for j in 0..=t_order {
            rhs.set_coeff(j, ch.series().pow(j as u32)).unwrap();
        }

        for j in 0..=t_order {
            assert_eq!(lhs.coeff(j), rhs.coeff(j), "n={n} t^{j}");
        }
    }
}
