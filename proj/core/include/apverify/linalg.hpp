#pragma once

// Exact integer linear algebra at desk scale: Hermite and Smith normal forms
// with transformation matrices, kernels, and sublattices of Z^n presented by
// Hermite-form bases.

#include "apverify/ints.hpp"

#include <optional>
#include <vector>

namespace apv {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major

IntMat identity_matrix(std::size_t n);
IntMat matmul(const IntMat& a, const IntMat& b);
IntVec vecmat(const IntVec& x, const IntMat& a);
Int det(IntMat a);

struct SnfResult {
  IntMat u, d, v;  // u * a * v = d, u and v unimodular, d diagonal with
                   // successive divisibility
};

/// Smith normal form of an arbitrary integer matrix.
SnfResult smith_normal_form(const IntMat& a);

/// Row-style Hermite normal form: returns the echelon basis of the row
/// lattice (zero rows dropped, pivots positive, entries above pivots reduced).
IntMat hnf_rows(IntMat a);

/// Solves x a = b over the integers; nullopt when no integral solution.
std::optional<IntVec> solve_left(const IntMat& a, const IntVec& b);

/// Basis (rows) of {x : x a = 0}.
IntMat left_kernel(const IntMat& a);

/// A full or partial-rank sublattice of Z^n, stored by its HNF basis.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::size_t ambient, IntMat generators)
      : n_(ambient), basis_(hnf_rows(std::move(generators))) {}

  std::size_t ambient_dim() const { return n_; }
  std::size_t rank() const { return basis_.size(); }
  const IntMat& basis() const { return basis_; }

  bool contains(const IntVec& v) const;
  /// Index [Z^n : L]; throws unless the lattice has full rank.
  Int index_in_ambient() const;

  static Lattice sum(const Lattice& a, const Lattice& b);

 private:
  std::size_t n_ = 0;
  IntMat basis_;
};

}  // namespace apv
