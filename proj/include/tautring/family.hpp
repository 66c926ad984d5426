#ifndef TAUTRING_FAMILY_HPP
#define TAUTRING_FAMILY_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tautring/poly.hpp"

namespace tautring {

enum class RingMode { Free, Constrained };

std::string d_var_name(int i, int j);  // "D_i_j"

/// Coefficient variable space for n >= 2: one D_i_j (i != j) of weight 2 per
/// ordered pair, pairs in lexicographic order.
VarSpacePtr d_space(int n);

class FamilyPresentation;
using FamilyPtr = std::shared_ptr<const FamilyPresentation>;

/// Symbolic presentation of the cohomology ring of a framed family with n =
/// b_2 of the fibre, over the basis {1, x_1..x_n, nu}. The coefficient ring
/// depends on the mode:
///
///  - Free: the table coefficients D_i_j, G_i, J_i, omega are independent
///    variables (weights 2, 4, 6, 8).
///  - Constrained: only the D_i_j are variables; mu, B_i, C_i, G_i, J_i and
///    omega are the derived polynomials forced by the structure results
///    (omega by averaging the nu^2-associativity equation over i). For n = 1
///    there are no D's and the free parameters are B (weight 2) and C
///    (weight 3) with G = B/2, J = C, omega = B^2/4, mu = 2B.
class FamilyPresentation : public std::enable_shared_from_this<FamilyPresentation> {
public:
    static FamilyPtr constrained(int n);
    static FamilyPtr free_mode(int n);

    int n() const { return n_; }
    RingMode mode() const { return mode_; }
    const VarSpacePtr& space() const { return space_; }

    // indices are 1-based
    const Poly& D(int i, int j) const;
    const Poly& B(int i) const { return B_.at(check_index(i) - 1); }
    const Poly& C(int i) const { return C_.at(check_index(i) - 1); }
    const Poly& G(int i) const { return G_.at(check_index(i) - 1); }
    const Poly& J(int i) const { return J_.at(check_index(i) - 1); }
    const Poly& omega() const { return omega_; }
    const Poly& mu() const;  // throws in free mode

    Poly zero() const { return Poly(space_); }
    Poly constant(const Rational& c) const { return Poly::constant(space_, c); }

private:
    FamilyPresentation(int n, RingMode mode);
    int check_index(int i) const;

    int n_;
    RingMode mode_;
    VarSpacePtr space_;
    std::vector<std::vector<Poly>> D_;  // D_[i-1][j-1], diagonal unused
    std::vector<Poly> B_, C_, G_, J_;
    Poly omega_;
    std::optional<Poly> mu_;
};

/// Element c0 + sum_i cx_i x_i + cnu nu of the basis module, with
/// coefficients in the presentation's variable space. Closed under the
/// product table; products of three or more factors reduce left to right.
class RingElement {
public:
    explicit RingElement(FamilyPtr pres);

    static RingElement one(const FamilyPtr& pres);
    static RingElement x(const FamilyPtr& pres, int i);  // 1-based
    static RingElement nu(const FamilyPtr& pres);
    static RingElement scalar(const FamilyPtr& pres, const Poly& c0);

    const FamilyPtr& presentation() const { return pres_; }
    const Poly& c0() const { return c0_; }
    const Poly& cx(int i) const { return cx_.at(i - 1); }  // 1-based
    const Poly& cnu() const { return cnu_; }
    bool is_zero() const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& o);
    RingElement& operator-=(const RingElement& o);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(const RingElement& a, const RingElement& b);
    friend RingElement operator*(const Poly& c, RingElement e);
    friend RingElement operator*(const Rational& c, RingElement e);
    RingElement pow(int k) const;  // left-associative power

    friend bool operator==(const RingElement& a, const RingElement& b);
    friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }

private:
    FamilyPtr pres_;
    Poly c0_;
    std::vector<Poly> cx_;
    Poly cnu_;
};

/// Fibre integration: the nu-coefficient of the reduced form.
Poly fibre_integrate(const RingElement& u);

/// p_1 = 3(x_1^2 + ... + x_n^2) + mu. In free mode mu must be supplied.
RingElement class_p1(const FamilyPtr& pres, const std::optional<Poly>& mu = std::nullopt);

/// e = 2 nu + x_1^2 + ... + x_n^2.
RingElement class_e(const FamilyPtr& pres);

struct CubicCheck {
    RingElement x_residual;          // x_i^3 - B_i x_i - C_i, reduced
    std::vector<Poly> d_residuals;   // D_ji^3 - B_i D_ji - C_i for each j != i
};
CubicCheck cubic_check(const FamilyPtr& pres, int i);

struct Obstruction {
    std::string triple;  // e.g. "x1*x2*nu"
    RingElement residual;
};
/// Residuals (u v) w - u (v w) for every ordered triple of generators among
/// {x_1..x_n, nu}.
std::vector<Obstruction> associativity_obstructions(const FamilyPtr& pres);

/// The presentation's coefficient space extended by fibre variables t_1..t_n
/// (weight 2), coefficient variables first.
VarSpacePtr extended_space(const FamilyPtr& pres);
/// Lift a coefficient-space polynomial into the extended space.
Poly promote(const FamilyPtr& pres, const Poly& p);
/// Project an extended-space polynomial with no t-dependence back down.
Poly restrict_to_coeff(const FamilyPtr& pres, const Poly& p);

/// Diagonalised fibre integral of f(x_1..x_n): sum over j of the
/// single-variable integral of f with t_k -> D_jk for k != j, the remaining
/// variable reduced by t^3 = B_j t + C_j with only the t^2 coefficient
/// surviving. `f` lives in extended_space(pres).
Poly integrate_poly_diagonal(const FamilyPtr& pres, const Poly& f);

/// Fibre integral of f(x_1..x_n) e via the second integration formula:
/// sum_j int f_j(x_j) e(j) - 2 sum_{j != i} f_j(D_ij), with e(j) = 3x_j^2 - B_j.
Poly integrate_poly_times_e(const FamilyPtr& pres, const Poly& f, int i);

/// Trace of multiplication by u on the free module with basis {1, x_1..x_n, nu}.
Poly trace_integral(const RingElement& u);

/// Evaluate an extended-space polynomial into the ring, t_i -> x_i, with
/// monomials expanded left to right in variable order. Test/oracle helper.
RingElement ring_eval_poly(const FamilyPtr& pres, const Poly& f);

/// Residuals of the four vanishing-integral identities coming from the
/// index-theoretic constraints; all must vanish for n <= 2 identically and
/// at symmetric specializations for any n.
std::vector<std::pair<std::string, Poly>> verify_sw_identities(const FamilyPtr& pres);

/// The n = 1 coefficient space {B (weight 2), C (weight 3)}.
VarSpacePtr bc_space();

/// Element of the n = 1 quotient model Q[B,C][x]/(x^3 - B x - C), stored as
/// coefficients of 1, x, x^2 over bc_space(). Fibre integration is the x^2
/// coefficient (int 1 = int x = 0, int x^2 = 1).
class N1Quotient {
public:
    std::array<Poly, 3> c;

    N1Quotient();
    static N1Quotient scalar(const Poly& c0);
    static N1Quotient scalar(const Rational& c0);
    static N1Quotient x();
    static N1Quotient p1();  // 3x^2 + 2B
    static N1Quotient e();   // 3x^2 - B

    friend N1Quotient operator+(const N1Quotient& a, const N1Quotient& b);
    friend N1Quotient operator-(const N1Quotient& a, const N1Quotient& b);
    friend N1Quotient operator*(const N1Quotient& a, const N1Quotient& b);
    friend N1Quotient operator*(const Poly& s, const N1Quotient& a);
    N1Quotient pow(int k) const;

    Poly integrate() const { return c[2]; }
};

/// Fibre integral of (3x^2+2B)^a (3x^2-B)^b computed purely by reduction in
/// Q[B,C][x]/(x^3 - B x - C), the integral being the x^2 coefficient. Third
/// independent oracle for phi_{a,b}.
Poly kappa_n1(int a, int b);

}  // namespace tautring

#endif
