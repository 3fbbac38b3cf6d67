// Copyright 2026 The dp4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dp4/linalg.hpp"

#include <utility>

#include "dp4/errors.hpp"

namespace dp4 {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVector>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(0, rows.front().size());
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void RatMatrix::append_row(const RatVector& r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw InputError("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  RatMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("matrix sum shape mismatch");
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  }
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) { return a + Rat(-1) * b; }

RatMatrix operator*(const Rat& c, const RatMatrix& a) {
  RatMatrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= c;
  }
  return out;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  if (a.cols() != x.size()) throw InputError("matrix-vector shape mismatch");
  RatVector out(a.rows(), Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  }
  return out;
}

BareissEchelon bareiss_echelon(const RatMatrix& m) {
  BareissEchelon out;
  const std::size_t nr = m.rows();
  const std::size_t nc = m.cols();
  auto& a = out.rows;
  a.assign(nr, std::vector<Int>(nc));
  for (std::size_t i = 0; i < nr; ++i) {
    const RatVector r = m.row(i);
    const Int l = lcm_of_denominators(r);
    for (std::size_t j = 0; j < nc; ++j) {
      Rat s = r[j] * l;
      a[i][j] = s.get_num();
    }
  }
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t p = r;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      out.swap_sign = -out.swap_sign;
    }
    for (std::size_t i = r + 1; i < nr; ++i) {
      for (std::size_t j = c + 1; j < nc; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const RatMatrix& m) { return bareiss_echelon(m).pivots.size(); }

RatMatrix rref(const RatMatrix& m) {
  const auto ech = bareiss_echelon(m);
  const std::size_t k = ech.pivots.size();
  const std::size_t nc = m.cols();
  std::vector<RatVector> rows(k, RatVector(nc));
  for (std::size_t i = 0; i < k; ++i) {
    const Rat lead(ech.rows[i][ech.pivots[i]]);
    for (std::size_t j = 0; j < nc; ++j) rows[i][j] = Rat(ech.rows[i][j]) / lead;
  }
  for (std::size_t i = k; i-- > 0;) {
    const std::size_t pc = ech.pivots[i];
    for (std::size_t h = 0; h < i; ++h) {
      const Rat f = rows[h][pc];
      if (sgn(f) == 0) continue;
      for (std::size_t j = pc; j < nc; ++j) rows[h][j] -= f * rows[i][j];
    }
  }
  RatMatrix out(0, nc);
  for (const auto& r : rows) out.append_row(r);
  return out;
}

RatVector primitive_vector(const RatVector& v) {
  const Int l = lcm_of_denominators(v);
  RatVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * l;
  const Int g = gcd_of_numerators(out);
  if (g == 0) return out;
  Rat s = make_rat(Int(1), g);
  for (const auto& x : out) {
    if (sgn(x) != 0) {
      if (sgn(x) < 0) s = -s;
      break;
    }
  }
  for (auto& x : out) x *= s;
  return out;
}

std::vector<RatVector> canonical_row_basis(const std::vector<RatVector>& rows, std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  const RatMatrix red = rref(m);
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < red.rows(); ++i) out.push_back(primitive_vector(red.row(i)));
  return out;
}

std::vector<RatVector> kernel(const RatMatrix& m) {
  const std::size_t nc = m.cols();
  const RatMatrix red = rref(m);
  std::vector<bool> is_pivot(nc, false);
  std::vector<std::size_t> pivot_of_row;
  for (std::size_t i = 0; i < red.rows(); ++i) {
    for (std::size_t j = 0; j < nc; ++j) {
      if (sgn(red(i, j)) != 0) {
        is_pivot[j] = true;
        pivot_of_row.push_back(j);
        break;
      }
    }
  }
  std::vector<RatVector> raw;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(nc, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < red.rows(); ++i) v[pivot_of_row[i]] = -red(i, f);
    raw.push_back(std::move(v));
  }
  return canonical_row_basis(raw, nc);
}

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  const auto ech = bareiss_echelon(m);
  if (ech.pivots.size() < n) return 0;
  // The last pivot is the determinant of the integer-scaled matrix.
  Rat det(ech.rows[n - 1][n - 1]);
  det *= ech.swap_sign;
  for (std::size_t i = 0; i < n; ++i) det /= Rat(lcm_of_denominators(m.row(i)));
  return det;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Rat piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a(i, c)) == 0) continue;
      const Rat f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  auto inv = inverse(a);
  if (!inv) return std::nullopt;
  return *inv * b;
}

}  // namespace dp4
