#pragma once

// Exact two-phase simplex (Bland's rule) for
//     maximize c.x  subject to  A x = b,  x >= 0
// over any ordered field type T providing + - * / and sign().
// Infeasible problems come back with a Farkas vector y such that
// y.A >= 0 componentwise and y.b < 0.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coxwo::lp {

enum class Status { Optimal, Infeasible, Unbounded };

template <class T>
struct Result {
  Status status = Status::Infeasible;
  std::vector<T> x;       // primal solution when Optimal
  T value{};              // objective value when Optimal
  std::vector<T> farkas;  // certificate when Infeasible
};

template <class T>
class Tableau {
 public:
  Tableau(const std::vector<std::vector<T>>& a, const std::vector<T>& b) : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
    // columns: n_ structural, m_ artificial, then rhs
    rows_.assign(m_, std::vector<T>(n_ + m_ + 1));
    flip_.assign(m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      flip_[i] = sign(b[i]) < 0;
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip_[i] ? -a[i][j] : a[i][j];
      rows_[i][n_ + i] = T(1);
      rows_[i][n_ + m_] = flip_[i] ? -b[i] : b[i];
    }
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = n_ + i;
    active_.assign(m_, true);
  }

  /// Phase 1. Returns false (and fills the certificate) when infeasible.
  bool phase_one(std::vector<T>& farkas) {
    // maximize -sum(artificials); reduced costs d_j = y.A_j - c_j
    cost_.assign(n_ + m_, T(0));
    for (std::size_t i = 0; i < m_; ++i) cost_[n_ + i] = T(-1);
    run(n_ + m_);
    recompute_reduced();
    T objective{};
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i]) objective += cost_[basis_[i]] * rows_[i][n_ + m_];
    if (sign(objective) < 0) {
      farkas.assign(m_, T(0));
      for (std::size_t i = 0; i < m_; ++i) {
        T y = reduced_[n_ + i] - T(1);
        farkas[i] = flip_[i] ? -y : y;
      }
      return false;
    }
    drive_out_artificials();
    return true;
  }

  /// Phase 2 on the structural columns only.
  Status phase_two(const std::vector<T>& c) {
    cost_.assign(n_ + m_, T(0));
    for (std::size_t j = 0; j < n_; ++j) cost_[j] = c[j];
    return run(n_) ? Status::Optimal : Status::Unbounded;
  }

  std::vector<T> solution() const {
    std::vector<T> x(n_, T(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i] && basis_[i] < n_) x[basis_[i]] = rows_[i][n_ + m_];
    return x;
  }

 private:
  void recompute_reduced() {
    reduced_.assign(n_ + m_, T(0));
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      T d = -cost_[j];
      for (std::size_t i = 0; i < m_; ++i)
        if (active_[i] && sign(rows_[i][j]) != 0 && sign(cost_[basis_[i]]) != 0) d += cost_[basis_[i]] * rows_[i][j];
      reduced_[j] = d;
    }
  }

  // Bland's rule iterations over columns [0, limit). Returns false if unbounded.
  bool run(std::size_t limit) {
    for (;;) {
      recompute_reduced();
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j)
        if (sign(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      T best{};
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || sign(rows_[i][*enter]) <= 0) continue;
        T ratio = rows_[i][n_ + m_] / rows_[i][*enter];
        if (!leave || ratio < best || (!(best < ratio) && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const T p = rows_[r][c];
    for (auto& v : rows_[r]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || !active_[i] || sign(rows_[i][c]) == 0) continue;
      const T f = rows_[i][c];
      for (std::size_t j = 0; j < rows_[i].size(); ++j)
        if (sign(rows_[r][j]) != 0) rows_[i][j] -= f * rows_[r][j];
    }
    basis_[r] = c;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i] || basis_[i] < n_) continue;
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < n_; ++j)
        if (sign(rows_[i][j]) != 0) {
          col = j;
          break;
        }
      if (col) pivot(i, *col);
      else active_[i] = false;  // redundant equation
    }
    // artificial columns must never re-enter
    for (auto& row : rows_)
      for (std::size_t j = n_; j < n_ + m_; ++j) row[j] = T(0);
  }

  std::size_t m_, n_;
  std::vector<std::vector<T>> rows_;
  std::vector<bool> flip_;
  std::vector<bool> active_;
  std::vector<std::size_t> basis_;
  std::vector<T> cost_;
  std::vector<T> reduced_;
};

/// maximize c.x s.t. A x = b, x >= 0. A is m x n (row major).
template <class T>
Result<T> solve(const std::vector<std::vector<T>>& a, const std::vector<T>& b, const std::vector<T>& c) {
  if (a.size() != b.size()) throw std::invalid_argument("lp: row count mismatch");
  Result<T> result;
  Tableau<T> tab(a, b);
  if (!tab.phase_one(result.farkas)) {
    result.status = Status::Infeasible;
    return result;
  }
  result.status = tab.phase_two(c);
  if (result.status == Status::Optimal) {
    result.x = tab.solution();
    result.value = T(0);
    for (std::size_t j = 0; j < c.size(); ++j) result.value += c[j] * result.x[j];
  }
  return result;
}

/// Feasibility only.
template <class T>
Result<T> feasible(const std::vector<std::vector<T>>& a, const std::vector<T>& b) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  return solve(a, b, std::vector<T>(n, T(0)));
}

}  // namespace coxwo::lp
