#include "apverify/linalg.hpp"

#include <algorithm>

namespace apv {

IntMat identity_matrix(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t n = a.size(), k = b.size(), m = b[0].size();
  IntMat r(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    }
  return r;
}

IntVec vecmat(const IntVec& x, const IntMat& a) {
  if (a.empty()) return {};
  IntVec r(a[0].size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += x[i] * a[i][j];
  }
  return r;
}

Int det(IntMat a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  // fraction-free Gaussian elimination (Bareiss)
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = t / prev;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

struct SnfWork {
  IntMat a, u, v;
  std::size_t m, n;

  void row_swap(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void col_swap(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < m; ++r) std::swap(a[r][i], a[r][j]);
    for (std::size_t r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
  }
  void row_add(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += c * a[src][j];
    for (std::size_t j = 0; j < u[dst].size(); ++j) u[dst][j] += c * u[src][j];
  }
  void col_add(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t r = 0; r < m; ++r) a[r][dst] += c * a[r][src];
    for (std::size_t r = 0; r < n; ++r) v[r][dst] += c * v[r][src];
  }
  void row_negate(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
};

Int floordiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SnfResult smith_normal_form(const IntMat& input) {
  SnfWork w;
  w.a = input;
  w.m = input.size();
  w.n = w.m ? input[0].size() : 0;
  w.u = identity_matrix(w.m);
  w.v = identity_matrix(w.n);

  const std::size_t r = std::min(w.m, w.n);
  for (std::size_t t = 0; t < r; ++t) {
    // locate a pivot: nonzero entry of least absolute value in the tail
    std::size_t pi = t, pj = t;
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < w.m; ++i)
      for (std::size_t j = t; j < w.n; ++j) {
        if (w.a[i][j] == 0) continue;
        Int v = abs(w.a[i][j]);
        if (!found || v < best) { found = true; best = v; pi = i; pj = j; }
      }
    if (!found) break;
    if (pi != t) w.row_swap(t, pi);
    if (pj != t) w.col_swap(t, pj);

    for (bool settled = false; !settled;) {
      for (;;) {
        bool dirty = false;
        for (std::size_t i = t + 1; i < w.m; ++i) {
          if (w.a[i][t] == 0) continue;
          Int q = floordiv(w.a[i][t], w.a[t][t]);
          w.row_add(i, t, -q);
          if (w.a[i][t] != 0) { w.row_swap(t, i); dirty = true; }
        }
        for (std::size_t j = t + 1; j < w.n; ++j) {
          if (w.a[t][j] == 0) continue;
          Int q = floordiv(w.a[t][j], w.a[t][t]);
          w.col_add(j, t, -q);
          if (w.a[t][j] != 0) { w.col_swap(t, j); dirty = true; }
        }
        if (!dirty) break;
      }
      // enforce divisibility of the remaining block by the pivot
      settled = true;
      for (std::size_t i = t + 1; i < w.m && settled; ++i)
        for (std::size_t j = t + 1; j < w.n && settled; ++j)
          if (w.a[i][j] % w.a[t][t] != 0) {
            w.row_add(t, i, Int(1));
            settled = false;
          }
    }
    if (w.a[t][t] < 0) w.row_negate(t);
  }

  return SnfResult{w.u, w.a, w.v};
}

IntMat hnf_rows(IntMat a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::size_t row = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    // gcd-reduce rows >= row on this column
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = row; i < m; ++i)
        if (a[i][col] != 0 &&
            (best == m || abs(a[i][col]) < abs(a[best][col])))
          best = i;
      if (best == m) break;
      std::swap(a[row], a[best]);
      bool clean = true;
      for (std::size_t i = row + 1; i < m; ++i) {
        if (a[i][col] == 0) continue;
        Int q = floordiv(a[i][col], a[row][col]);
        for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[row][j];
        if (a[i][col] != 0) clean = false;
      }
      if (clean) break;
    }
    if (a[row][col] == 0) continue;
    if (a[row][col] < 0)
      for (auto& x : a[row]) x = -x;
    // reduce entries above the pivot into [0, pivot)
    for (std::size_t i = 0; i < row; ++i) {
      Int q = floordiv(a[i][col], a[row][col]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= q * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return a;
}

std::optional<IntVec> solve_left(const IntMat& a, const IntVec& b) {
  if (a.empty()) {
    for (const auto& x : b)
      if (x != 0) return std::nullopt;
    return IntVec{};
  }
  SnfResult s = smith_normal_form(a);
  // x a = b  <=>  y d = b v with x = y u
  IntVec c = vecmat(b, s.v);
  const std::size_t m = a.size();
  const std::size_t r = std::min(m, a[0].size());
  IntVec y(m, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Int di = (i < r) ? s.d[i][i] : Int(0);
    if (di == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % di != 0) return std::nullopt;
      if (i < m) y[i] = c[i] / di;
    }
  }
  return vecmat(y, s.u);
}

IntMat left_kernel(const IntMat& a) {
  if (a.empty()) return {};
  SnfResult s = smith_normal_form(a);
  const std::size_t m = a.size();
  IntMat out;
  const std::size_t r = std::min(m, a[0].size());
  for (std::size_t i = 0; i < m; ++i) {
    const bool zero_row = (i >= r) || (s.d[i][i] == 0);
    if (zero_row) out.push_back(s.u[i]);
  }
  return out;
}

bool Lattice::contains(const IntVec& v) const {
  IntVec w = v;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n_ && row < basis_.size(); ++col) {
    if (basis_[row][col] == 0) continue;
    if (w[col] % basis_[row][col] != 0) return false;
    Int q = w[col] / basis_[row][col];
    for (std::size_t j = 0; j < n_; ++j) w[j] -= q * basis_[row][j];
    ++row;
  }
  for (const auto& x : w)
    if (x != 0) return false;
  return true;
}

Int Lattice::index_in_ambient() const {
  if (basis_.size() != n_) throw MathError("lattice is not of full rank");
  Int idx = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n_ && row < basis_.size(); ++col) {
    if (basis_[row][col] == 0) continue;
    idx *= basis_[row][col];
    ++row;
  }
  return idx;
}

Lattice Lattice::sum(const Lattice& a, const Lattice& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw MathError("ambient mismatch");
  IntMat gens = a.basis();
  for (const auto& r : b.basis()) gens.push_back(r);
  return Lattice(a.ambient_dim(), std::move(gens));
}

}  // namespace apv
