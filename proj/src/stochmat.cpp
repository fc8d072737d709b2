// Copyright 2026 The qsd authors
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

#include "qsd/stochmat.hpp"

#include <sstream>

namespace qsd {

namespace {
void guard_size(long long rows, long long cols) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  if (rows * cols > kMaxMatrixEntries)
    throw DomainError("matrix of " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " entries exceeds the dense storage cap");
}
}  // namespace

Prob::Prob(Rat v) : v_(std::move(v)) {
  if (v_ < 0 || v_ > 1) throw DomainError("probability outside [0,1]: " + rat_to_string(v_));
}

Distribution::Distribution(std::vector<Rat> weights) : w_(std::move(weights)) {
  if (w_.empty()) throw DomainError("distribution must have at least one outcome");
  Rat total = 0;
  for (const Rat& w : w_) {
    if (w < 0 || w > 1) throw DomainError("distribution weight outside [0,1]");
    total += w;
  }
  if (total != 1) throw DomainError("distribution weights sum to " + rat_to_string(total));
}

Distribution Distribution::dirac(int size, int at) {
  if (size < 1 || at < 0 || at >= size) throw DomainError("bad dirac parameters");
  std::vector<Rat> w(static_cast<size_t>(size), Rat(0));
  w[static_cast<size_t>(at)] = 1;
  return Distribution(std::move(w));
}

Distribution Distribution::uniform(int size) {
  if (size < 1) throw DomainError("uniform distribution needs at least one outcome");
  std::vector<Rat> w(static_cast<size_t>(size), make_rat(1, size));
  return Distribution(std::move(w));
}

StochMatrix::StochMatrix(Storage entries) : m_(std::move(entries)) {
  if (m_.rows() == 0) return;  // empty matrices are unconstrained
  for (Eigen::Index j = 0; j < m_.cols(); ++j) {
    Rat total = 0;
    for (Eigen::Index i = 0; i < m_.rows(); ++i) {
      const Rat& e = m_(i, j);
      if (e < 0 || e > 1) throw InvalidMatrixError("entry outside [0,1]: " + rat_to_string(e));
      total += e;
    }
    if (total != 1)
      throw InvalidMatrixError("column " + std::to_string(j) + " sums to " + rat_to_string(total));
  }
}

StochMatrix StochMatrix::identity(int n) {
  guard_size(n, n);
  Storage m = Storage::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return StochMatrix(std::move(m));
}

StochMatrix StochMatrix::empty(int rows, int cols) {
  if (rows != 0 && cols != 0) throw InvalidMatrixError("empty matrix needs a zero dimension");
  return StochMatrix(Storage::Zero(rows, cols));
}

StochMatrix StochMatrix::from_columns(int rows, const std::vector<Distribution>& cols) {
  Storage m(rows, static_cast<Eigen::Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionError("column height mismatch");
    for (int i = 0; i < rows; ++i) m(i, static_cast<Eigen::Index>(j)) = cols[j][i];
  }
  return StochMatrix(std::move(m));
}

bool StochMatrix::operator==(const StochMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) return false;
  for (int j = 0; j < cols(); ++j)
    for (int i = 0; i < rows(); ++i)
      if (m_(i, j) != o.m_(i, j)) return false;
  return true;
}

StochMatrix matmul(const StochMatrix& g, const StochMatrix& f) {
  if (g.cols() != f.rows())
    throw DimensionError("matmul: " + std::to_string(g.rows()) + "x" + std::to_string(g.cols()) +
                         " after " + std::to_string(f.rows()) + "x" + std::to_string(f.cols()));
  guard_size(g.rows(), f.cols());
  StochMatrix::Storage out = StochMatrix::Storage::Zero(g.rows(), f.cols());
  // Zero-skip keeps products with permutation-like factors near linear.
  for (int i = 0; i < g.rows(); ++i)
    for (int k = 0; k < g.cols(); ++k) {
      const Rat& gik = g.at(i, k);
      if (gik == 0) continue;
      for (int j = 0; j < f.cols(); ++j) {
        const Rat& fkj = f.at(k, j);
        if (fkj != 0) out(i, j) += gik * fkj;
      }
    }
  return StochMatrix(std::move(out));
}

StochMatrix kron(const StochMatrix& a, const StochMatrix& b) {
  guard_size(static_cast<long long>(a.rows()) * b.rows(), static_cast<long long>(a.cols()) * b.cols());
  StochMatrix::Storage out = StochMatrix::Storage::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Rat& aij = a.at(i, j);
      if (aij == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
    }
  return StochMatrix(std::move(out));
}

StochMatrix dsum(const StochMatrix& a, const StochMatrix& b) {
  guard_size(a.rows() + b.rows(), a.cols() + b.cols());
  StochMatrix::Storage out = StochMatrix::Storage::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b.at(i, j);
  return StochMatrix(std::move(out));
}

StochMatrix swap_kron_dims(int a, int b) {
  guard_size(static_cast<long long>(a) * b, static_cast<long long>(a) * b);
  StochMatrix::Storage out = StochMatrix::Storage::Zero(a * b, a * b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) out(j * a + i, i * b + j) = 1;
  return StochMatrix(std::move(out));
}

StochMatrix swap_kron(int n_wires, int m_wires) {
  if (n_wires < 0 || m_wires < 0) throw DomainError("negative wire count");
  return swap_kron_dims(1 << n_wires, 1 << m_wires);
}

StochMatrix swap_dsum(int n, int m) {
  if (n < 0 || m < 0) throw DomainError("negative dimension");
  guard_size(n + m, n + m);
  StochMatrix::Storage out = StochMatrix::Storage::Zero(n + m, n + m);
  for (int j = 0; j < n; ++j) out(m + j, j) = 1;
  for (int j = 0; j < m; ++j) out(j, n + j) = 1;
  return StochMatrix(std::move(out));
}

StochMatrix codiag(int n, int m) {
  if (n < 1 || m < 0) throw DomainError("codiag requires n >= 1, m >= 0");
  guard_size(m, static_cast<long long>(n) * m);
  StochMatrix::Storage out = StochMatrix::Storage::Zero(m, n * m);
  for (int block = 0; block < n; ++block)
    for (int i = 0; i < m; ++i) out(i, block * m + i) = 1;
  return StochMatrix(std::move(out));
}

Distribution column(const StochMatrix& a, int j) {
  if (j < 0 || j >= a.cols()) throw DimensionError("column index out of range");
  if (a.rows() < 1) throw DimensionError("column of a zero-row matrix");
  std::vector<Rat> w;
  w.reserve(static_cast<size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) w.push_back(a.at(i, j));
  return Distribution(std::move(w));
}

namespace {
bool is_power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }
}  // namespace

StochMatrix restrict_first_bit(const StochMatrix& f, bool bit_one) {
  if (f.cols() < 2 || !is_power_of_two(f.cols()))
    throw DimensionError("restrict_first_bit needs a power-of-two column count >= 2");
  int half = f.cols() / 2;
  int start = bit_one ? 0 : half;
  StochMatrix::Storage out(f.rows(), half);
  for (int j = 0; j < half; ++j)
    for (int i = 0; i < f.rows(); ++i) out(i, j) = f.at(i, start + j);
  return StochMatrix(std::move(out));
}

BitSplit cond_split_bit(const Distribution& mu) {
  if (mu.size() < 2 || !is_power_of_two(mu.size()))
    throw DimensionError("cond_split_bit needs a power-of-two size >= 2");
  int half = mu.size() / 2;
  Rat mass_one = 0;
  for (int i = 0; i < half; ++i) mass_one += mu[i];
  auto renorm = [&](int start, const Rat& mass) {
    if (mass == 0) return Distribution::uniform(half);
    std::vector<Rat> w;
    w.reserve(static_cast<size_t>(half));
    for (int i = 0; i < half; ++i) w.push_back(Rat(mu[start + i] / mass));
    return Distribution(std::move(w));
  };
  Rat mass_zero = 1 - mass_one;
  return BitSplit{Prob(mass_one), renorm(0, mass_one), renorm(half, mass_zero)};
}

FirstSplit cond_split_first(const Distribution& mu) {
  if (mu.size() < 2) throw DimensionError("cond_split_first needs at least two outcomes");
  Rat p = mu[0];
  Rat rest_mass = 1 - p;
  if (rest_mass == 0) return FirstSplit{Prob(p), Distribution::uniform(mu.size() - 1)};
  std::vector<Rat> w;
  w.reserve(static_cast<size_t>(mu.size() - 1));
  for (int i = 1; i < mu.size(); ++i) w.push_back(Rat(mu[i] / rest_mass));
  return FirstSplit{Prob(p), Distribution(std::move(w))};
}

std::string matrix_to_text(const StochMatrix& a) {
  std::ostringstream out;
  out << a.rows() << " " << a.cols() << "\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j > 0) out << " ";
      out << rat_to_string(a.at(i, j));
    }
    out << "\n";
  }
  return out.str();
}

StochMatrix matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  long long m = -1, n = -1;
  if (!(in >> m >> n) || m < 0 || n < 0) throw DomainError("matrix text: bad header");
  StochMatrix::Storage out(m, n);
  for (long long i = 0; i < m; ++i)
    for (long long j = 0; j < n; ++j) {
      std::string tok;
      if (!(in >> tok)) throw DomainError("matrix text: missing entries");
      out(i, j) = rat_from_string(tok);
    }
  std::string extra;
  if (in >> extra) throw DomainError("matrix text: trailing data");
  return StochMatrix(std::move(out));
}

}  // namespace qsd
