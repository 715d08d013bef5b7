#pragma once

#include "miqf/correspondence.hpp"

namespace miqf {

/// Strictly increasing 0-based index tuples of length k, lexicographic.
using WedgeIndex = std::vector<int>;

std::vector<WedgeIndex> wedge_basis(int dim, int k);

long long binomial(int n, int k);

/// k-th compound matrix: entry (S, T) is the minor of m on rows S, columns T,
/// with S, T running over wedge_basis in lexicographic order. The parallel
/// variant evaluates independent minors under OpenMP and is bitwise identical
/// to the serial one (each entry is an independent computation).
KMatrix compound_serial(const KMatrix& m, int k);
KMatrix compound(const KMatrix& m, int k);
CMatrix compound_serial(const CMatrix& m, int k);
CMatrix compound(const CMatrix& m, int k);

/// Hermitian form induced on the k-th exterior power, including the
/// (-1)^(k-1) normalization that makes it the polarization form: entry (S, T)
/// is (-1)^(k-1) * det(g[S x T]).
KMatrix exterior_hermitian(const KMatrix& g, int k);

/// A short exact sequence presented by matrices: kernel's columns embed into
/// the middle space, quotient maps it onto the cokernel.
struct ExactSeq {
  int total_dim = 0;  // dimension of the middle space
  CMatrix kernel;     // total_dim x d
  CMatrix quotient;   // (total_dim - d) x total_dim
};

/// Largest |quotient * kernel| entry; exactness defect.
double exact_seq_defect(const ExactSeq& s);

/// Functor on the k-th exterior power: kernel becomes the compound of the
/// kernel (empty when k exceeds its dimension), quotient becomes a
/// deterministic cokernel basis (row space of the left null space, via the
/// kernel_basis pivot policy on the transpose).
ExactSeq exterior_sequence(const ExactSeq& s, int k, double tol);

/// Exterior power of a normalized triple. Requires n == 1 (direct) or
/// n == r-1 (first flipped to the equivalent triple with n == 1, which is
/// what k == 1 then returns unchanged). The output basis is reordered so
/// that wedge monomials containing the first basis vector come first, making
/// the output gram exactly the signature matrix of (C(r-1,k-1), C(r-1,k)).
/// k == r is accepted and yields the degenerate one-dimensional triple.
Triple exterior_power(const Triple& t, int k, double tol);

}  // namespace miqf
