#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "coxwo/lp.hpp"
#include "coxwo/scalar.hpp"

using coxwo::Scalar;
namespace lp = coxwo::lp;

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

// Solves M y = rhs exactly when the columns of M are independent; nullopt when
// they are dependent or the system is inconsistent.
std::optional<std::vector<Scalar>> solve_independent(Matrix m, std::vector<Scalar> rhs) {
  const std::size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) return std::nullopt;  // dependent column
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  std::vector<Scalar> y(cols);
  for (std::size_t i = 0; i < r; ++i) y[pivot_col[i]] = rhs[i] / m[i][pivot_col[i]];
  return y;
}

// Brute force over supports with independent columns: every nonempty polyhedron
// {Ax = b, x >= 0} has such a vertex, and a bounded LP attains its optimum at one.
struct Brute {
  bool feasible = false;
  Scalar best;
};

Brute brute_force(const Matrix& a, const std::vector<Scalar>& b, const std::vector<Scalar>& c) {
  const std::size_t m = a.size(), n = a[0].size();
  Brute out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1u) support.push_back(j);
    if (support.size() > m) continue;
    Matrix sub(m, std::vector<Scalar>(support.size()));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < support.size(); ++k) sub[i][k] = a[i][support[k]];
    auto y = solve_independent(sub, b);
    if (!y) continue;
    bool nonneg = true;
    for (const auto& v : *y) nonneg = nonneg && v.sign() >= 0;
    if (!nonneg) continue;
    Scalar val;
    for (std::size_t k = 0; k < support.size(); ++k) val += c[support[k]] * (*y)[k];
    if (!out.feasible || out.best < val) out.best = val;
    out.feasible = true;
  }
  return out;
}

}  // namespace

TEST(Lp, SimpleOptimum) {
  // max x + y  s.t.  x + 2y + s1 = 4, 3x + y + s2 = 6
  Matrix a{{Scalar(1), Scalar(2), Scalar(1), Scalar(0)}, {Scalar(3), Scalar(1), Scalar(0), Scalar(1)}};
  auto r = lp::solve(a, {Scalar(4), Scalar(6)}, {Scalar(1), Scalar(1), Scalar(0), Scalar(0)});
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_EQ(r.value, Scalar::rational(14, 5));
}

TEST(Lp, Unbounded) {
  Matrix a{{Scalar(1), Scalar(-1)}};
  auto r = lp::solve(a, {Scalar(1)}, {Scalar(1), Scalar(0)});
  EXPECT_EQ(r.status, lp::Status::Unbounded);
}

TEST(Lp, InfeasibleWithCertificate) {
  // x + y = -1 has no nonnegative solution
  Matrix a{{Scalar(1), Scalar(1)}};
  auto r = lp::feasible(a, {Scalar(-1)});
  ASSERT_EQ(r.status, lp::Status::Infeasible);
  ASSERT_EQ(r.farkas.size(), 1u);
  EXPECT_LT(r.farkas[0] * Scalar(-1), Scalar(0));
  EXPECT_GE(r.farkas[0], Scalar(0));
}

TEST(Lp, IrrationalData) {
  const Scalar r2 = Scalar::root_of(2);
  // max x s.t. sqrt2 x + y = 1
  Matrix a{{r2, Scalar(1)}};
  auto r = lp::solve(a, {Scalar(1)}, {Scalar(1), Scalar(0)});
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_EQ(r.value * r2, Scalar(1));
}

TEST(Lp, RedundantRows) {
  Matrix a{{Scalar(1), Scalar(1)}, {Scalar(2), Scalar(2)}};
  auto r = lp::solve(a, {Scalar(1), Scalar(2)}, {Scalar(1), Scalar(0)});
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_EQ(r.value, Scalar(1));
}

class LpRandom : public ::testing::TestWithParam<long> {};

TEST_P(LpRandom, AgreesWithVertexEnumeration) {
  const long d = GetParam();
  std::mt19937 rng(7 + static_cast<unsigned>(d));
  std::uniform_int_distribution<long> coef(-3, 3), rows(1, 3), cols(2, 5);
  std::bernoulli_distribution irr(d == 1 ? 0.0 : 0.3);
  auto entry = [&] { return irr(rng) ? Scalar(mpq_class(coef(rng)), mpq_class(coef(rng)), d) : Scalar(coef(rng)); };
  int infeasible = 0, optimal = 0;
  for (int trial = 0; trial < 250; ++trial) {
    const std::size_t m = static_cast<std::size_t>(rows(rng)), n0 = static_cast<std::size_t>(cols(rng));
    // a bounding row sum(x) + slack = 5 keeps every feasible problem bounded
    Matrix a(m + 1, std::vector<Scalar>(n0 + 1));
    std::vector<Scalar> b(m + 1), c(n0 + 1);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n0; ++j) a[i][j] = entry();
      b[i] = entry();
    }
    for (std::size_t j = 0; j <= n0; ++j) a[m][j] = Scalar(1);
    b[m] = Scalar(5);
    for (std::size_t j = 0; j < n0; ++j) c[j] = entry();

    const auto r = lp::solve(a, b, c);
    const auto oracle = brute_force(a, b, c);
    ASSERT_NE(r.status, lp::Status::Unbounded);
    EXPECT_EQ(r.status == lp::Status::Optimal, oracle.feasible) << "trial " << trial;
    if (r.status == lp::Status::Optimal) {
      ++optimal;
      EXPECT_EQ(r.value, oracle.best) << "trial " << trial;
      for (std::size_t i = 0; i <= m; ++i) {
        Scalar lhs;
        for (std::size_t j = 0; j <= n0; ++j) lhs += a[i][j] * r.x[j];
        EXPECT_EQ(lhs, b[i]);
      }
      for (const auto& x : r.x) EXPECT_GE(x.sign(), 0);
    } else {
      ++infeasible;
      ASSERT_EQ(r.farkas.size(), m + 1);
      Scalar yb;
      for (std::size_t i = 0; i <= m; ++i) yb += r.farkas[i] * b[i];
      EXPECT_LT(yb.sign(), 0);
      for (std::size_t j = 0; j <= n0; ++j) {
        Scalar ya;
        for (std::size_t i = 0; i <= m; ++i) ya += r.farkas[i] * a[i][j];
        EXPECT_GE(ya.sign(), 0);
      }
    }
  }
  EXPECT_GT(infeasible, 10);
  EXPECT_GT(optimal, 10);
}

INSTANTIATE_TEST_SUITE_P(Fields, LpRandom, ::testing::Values(1L, 2L, 5L));
