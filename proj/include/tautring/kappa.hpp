#ifndef TAUTRING_KAPPA_HPP
#define TAUTRING_KAPPA_HPP

#include <optional>
#include <vector>

#include "tautring/family.hpp"
#include "tautring/poly.hpp"
#include "tautring/weyl.hpp"

namespace tautring {

/// Closed-form tautological class kappa_{p1^a e^b} of weighted degree
/// 4(a+b) - 4 as a polynomial in the D_i_j (n >= 2) or in {B, C} (n = 1).
/// Odd e-powers carry the choice index the correction sum depends on.
struct KappaExpression {
    int n = 0;
    int a = 0;
    int b = 0;
    std::optional<int> choice_i;
    Poly value;

    KappaExpression() : value(bc_space()) {}
};

/// kappa_{p1^a e^b} for even b: sum_i phi_{a,b}(B_i, C_i).
Poly kappa_even(int n, int a, int b);

/// kappa_{p1^a e^b} for odd b:
/// sum_j phi_{a,b}(B_j, C_j) - 2 sum_{j != i} (3D_ij^2+2B_j)^a (3D_ij^2-B_j)^{b-1}.
/// For n = 1 the correction sum is empty and i is ignored.
Poly kappa_odd(int n, int a, int b, int i);

/// Dispatcher producing the full expression record (choice_i defaulting to 1
/// for odd b when not supplied).
KappaExpression kappa(int n, int a, int b, std::optional<int> choice_i = std::nullopt);

/// Action of a signed permutation on a polynomial in the D variables:
/// D_ij -> sign(j) D_{perm(i) perm(j)} extended multiplicatively.
Poly weyl_act(const WeylElement& g, const Poly& p);

/// Invariance under the generator set of W_n.
bool is_invariant(int n, const Poly& p);

/// Group average over all of W_n (group order 2^n n!; intended for n <= 4).
Poly reynolds_average(int n, const Poly& p);

struct InvariantSpan {
    int dimension = 0;
    std::vector<Poly> basis;  // canonical echelon basis, primitive integer rows
};

/// Invariant subspace of the weighted-degree-`degree` slice of Q[D_ij].
InvariantSpan invariant_subspace(int n, long degree);

/// The degree-4 invariant slice, which must be spanned by
/// I1 = sum D_ij^2 and I2 = sum_{i,j,k distinct} D_ik D_jk. Supported for
/// 2 <= n <= 4; the span is verified to contain I1 and I2.
InvariantSpan i4_span_check(int n);

/// I1 and I2 as polynomials in d_space(n).
Poly invariant_i1(int n);
Poly invariant_i2(int n);

/// Generator space {u = kappa_{p1^2}, v = kappa_{p1^4}} for n = 1.
VarSpacePtr cp2_generator_space();
/// Rewrite a {B, C}-polynomial with even C-powers in terms of u, v via
/// B = u/21 and C^2 = v/81 - (203/27)(u/21)^3.
Poly express_in_generators_n1(const Poly& p);

/// Generator space {kp12 = kappa_{p1^2}, kp13 = kappa_{p1^3}} for n = 2.
VarSpacePtr cp2cp2_generator_space();
/// Rewrite a swap- and sign-invariant polynomial in D_1_2, D_2_1 in terms of
/// kp12, kp13 via the elementary symmetric functions of D_1_2^2, D_2_1^2.
Poly express_in_generators_n2(const Poly& p);

/// Coefficients (alpha, beta, gamma1, gamma2) of the unique expansion
///   p1^3 = alpha k p1^2 + beta k^2 p1 + gamma1 k^3 + gamma2 kappa_{p1^4},
/// k = kappa_{p1^2}, computed in Q[B,C][x]/(x^3 - Bx - C).
struct PointedRelation {
    Rational alpha, beta, gamma1, gamma2;
};
PointedRelation cp2_pointed_relation();

}  // namespace tautring

#endif
