#ifndef TAUTRING_PHI_HPP
#define TAUTRING_PHI_HPP

#include <map>
#include <mutex>
#include <utility>

#include "tautring/poly.hpp"

namespace tautring {

/// The two-variable space {x (weight 2), y (weight 3)} the phi family lives in.
VarSpacePtr phi_space();

/// Memoized table of the polynomials phi_{a,b}(x,y) in Z[x,y], defined by
///   phi_{0,0} = 0,  phi_{0,1} = 3,  phi_{0,2} = 3x,
///   phi_{a+1,b} = phi_{a,b+1} + 3x phi_{a,b},
///   phi_{0,b+3} = 3x phi_{0,b+2} + (27y^2 - 4x^3) phi_{0,b}.
/// Evaluation reduces a to 0 via the first recursion, then b modulo the
/// depth-3 second recursion; all intermediate cells are memoized. The table
/// behaves as a once-computed pure cache and is safe for concurrent readers.
class PhiTable {
public:
    PhiTable();
    Poly phi(int a, int b) const;

private:
    const Poly& phi_locked(int a, int b) const;

    VarSpacePtr space_;
    Poly three_x_;
    Poly depth3_factor_;  // 27y^2 - 4x^3
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, Poly> memo_;
};

/// Process-wide shared table.
const PhiTable& shared_phi_table();

/// phi_{a,b} via the shared memo table.
Poly phi(int a, int b);

/// phi_{a,b} computed without the recursion: form (p'(z)+3x)^a (p'(z))^b with
/// p(z) = z^3 - x z - y and p'(z) = 3z^2 - x, reduce modulo p(z) to
/// q2 z^2 + q1 z + q0, and return q2. For a monic cubic the sum of residues
/// of f/p over the roots equals that top coefficient, so this is the contour
/// definition evaluated purely algebraically. Shares no code path with the
/// recursion.
Poly phi_oracle_residue(int a, int b);

/// phi_{a,b} evaluated at a rational point.
Rational phi_numeric(int a, int b, const Rational& x0, const Rational& y0);

}  // namespace tautring

#endif
