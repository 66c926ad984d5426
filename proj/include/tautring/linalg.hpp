#ifndef TAUTRING_LINALG_HPP
#define TAUTRING_LINALG_HPP

#include <vector>

#include "tautring/rational.hpp"

namespace tautring {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;

struct RrefResult {
    QMatrix mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};

/// Reduced row echelon form, computed exactly over Q.
RrefResult rref(QMatrix m);

int rank(const QMatrix& m);

/// Scale a rational vector to coprime integers with the first nonzero entry
/// positive. The zero vector maps to itself.
std::vector<Integer> primitive_normalize(const QVector& v);

/// Basis of the right nullspace of `m`, computed exactly. The basis is
/// canonical: the reduced row echelon form of the nullspace (one row per
/// pivot, pivots in ascending column order), each row scaled to coprime
/// integers with positive leading entry. Empty kernel gives an empty list.
std::vector<std::vector<Integer>> kernel_basis(const QMatrix& m);

/// Unique exact solution of a (possibly overdetermined) consistent linear
/// system A x = b. Throws if the system is inconsistent or underdetermined.
QVector solve_unique(const QMatrix& a, const QVector& b);

}  // namespace tautring

#endif
