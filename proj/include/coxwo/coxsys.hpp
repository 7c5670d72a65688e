#pragma once

// Coxeter systems with a geometric representation: Gram matrix of the
// bilinear form B on the basis of simple roots, validation of the simple
// system axioms, reflections, and the inertia/irreducibility classification.

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coxwo/scalar.hpp"

namespace coxwo {

/// Bad system specification, literal or word.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A search ran out of its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Element of V in the basis of simple roots.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : c_(n) {}
  explicit Vector(std::vector<Scalar> c) : c_(std::move(c)) {}
  Vector(std::initializer_list<Scalar> c) : c_(c) {}

  static Vector unit(std::size_t n, std::size_t i) {
    Vector v(n);
    v.c_[i] = Scalar(1);
    return v;
  }

  std::size_t size() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& coords() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  Scalar sum() const {
    Scalar s;
    for (const auto& x : c_) s += x;
    return s;
  }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& x) { return x.is_zero(); });
  }
  /// +1 if nonzero coordinates are all positive, -1 if all negative, 0 otherwise.
  int orientation() const {
    int seen = 0;
    for (const auto& x : c_) {
      const int s = x.sign();
      if (s == 0) continue;
      if (seen == 0) seen = s;
      else if (seen != s) return 0;
    }
    return seen;
  }
  std::vector<double> to_doubles() const {
    std::vector<double> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x.to_double());
    return r;
  }

  Vector& operator+=(const Vector& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Vector& operator*=(const Scalar& k) {
    for (auto& x : c_) x *= k;
    return *this;
  }
  Vector& operator/=(const Scalar& k) {
    for (auto& x : c_) x /= k;
    return *this;
  }
  /// this += k * o
  void axpy(const Scalar& k, const Vector& o) {
    if (k.is_zero()) return;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!o.c_[i].is_zero()) c_[i] += k * o.c_[i];
  }
  Vector operator-() const {
    Vector r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& k, Vector a) { return a *= k; }

  friend bool operator==(const Vector& a, const Vector& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }
  // lexicographic value order, used for map keys and deterministic tie-breaks
  friend bool operator<(const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < a.c_.size() && i < b.c_.size(); ++i) {
      const int s = (a.c_[i] - b.c_[i]).sign();
      if (s != 0) return s < 0;
    }
    return a.c_.size() < b.c_.size();
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].str();
    }
    return s + ")";
  }

 private:
  std::vector<Scalar> c_;
};

/// Order on canonical coordinates, for map keys.
struct CanonicalLess {
  bool operator()(const Vector& a, const Vector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (int c = Scalar::canonical_cmp(a[i], b[i])) return c < 0;
    return false;
  }
};

inline Scalar dot(const Vector& a, const Vector& b) {
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

struct Signature {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Coxeter label: 0 encodes infinity.
using CoxeterLabel = int;
inline constexpr CoxeterLabel kInfinity = 0;

/// -cos(pi/m) in Q(sqrt d), if representable there.
inline std::optional<Scalar> negative_cosine(int m, long d) {
  switch (m) {
    case 2: return Scalar(0);
    case 3: return Scalar::rational(-1, 2);
    case 4:
      if (d != 2) return std::nullopt;
      return Scalar(mpq_class(0), mpq_class(-1, 2), 2);
    case 5:
      if (d != 5) return std::nullopt;
      return Scalar(mpq_class(-1, 4), mpq_class(-1, 4), 5);
    case 6:
      if (d != 3) return std::nullopt;
      return Scalar(mpq_class(0), mpq_class(-1, 2), 3);
    default: return std::nullopt;
  }
}

inline long field_for_label(int m) {
  switch (m) {
    case 4: return 2;
    case 5: return 5;
    case 6: return 3;
    default: return 1;
  }
}

class CoxeterSystem {
 public:
  CoxeterSystem() = default;

  /// Validates and builds a system from names and a Gram matrix.
  CoxeterSystem(std::vector<std::string> names, std::vector<std::vector<Scalar>> gram, long field_d,
                std::string label = {})
      : names_(std::move(names)), gram_(std::move(gram)), d_(field_d), label_(std::move(label)) {
    validate();
  }

  /// Builds from Coxeter labels (kInfinity for infinity) plus optional explicit entries.
  static CoxeterSystem from_labels(std::vector<std::string> names, const std::vector<std::vector<int>>& m,
                                   long field_d = 0,
                                   const std::map<std::pair<int, int>, Scalar>& overrides = {},
                                   std::string label = {});

  static CoxeterSystem from_json(const nlohmann::json& spec);

  std::size_t rank() const { return names_.size(); }
  long field() const { return d_; }
  const std::string& label() const { return label_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t s) const { return names_.at(s); }
  const Scalar& gram(std::size_t s, std::size_t t) const { return gram_[s][t]; }
  const std::vector<std::vector<Scalar>>& gram_matrix() const { return gram_; }

  std::optional<std::size_t> find_generator(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }
  std::size_t generator(std::string_view name) const {
    if (auto g = find_generator(name)) return *g;
    throw InputError("unknown generator '" + std::string(name) + "'");
  }

  Vector simple_root(std::size_t s) const { return Vector::unit(rank(), s); }

  /// B(u, v) = u^T G v.
  Scalar bilinear(const Vector& u, const Vector& v) const {
    Scalar total;
    for (std::size_t s = 0; s < rank(); ++s) {
      if (u[s].is_zero()) continue;
      total += u[s] * form_with_simple(s, v);
    }
    return total;
  }
  /// B(alpha_s, v)
  Scalar form_with_simple(std::size_t s, const Vector& v) const {
    Scalar total;
    for (std::size_t t = 0; t < rank(); ++t)
      if (!v[t].is_zero() && !gram_[s][t].is_zero()) total += gram_[s][t] * v[t];
    return total;
  }

  /// s_alpha(v) = v - 2 B(alpha, v) / B(alpha, alpha) alpha
  Vector reflect(const Vector& alpha, const Vector& v) const {
    const Scalar norm = bilinear(alpha, alpha);
    if (norm.is_zero()) throw InputError("cannot reflect in an isotropic vector");
    Vector r = v;
    r.axpy(Scalar(-2) * bilinear(alpha, v) / norm, alpha);
    return r;
  }
  /// s(v) for a generator s
  Vector reflect_simple(std::size_t s, const Vector& v) const {
    Vector r = v;
    r[s] -= Scalar(2) * form_with_simple(s, v);
    return r;
  }

  /// Inertia of the Gram matrix by congruence diagonalization over the field.
  Signature signature() const;

  bool is_irreducible() const { return connected(all_generators()); }
  /// Connectivity of the Coxeter graph induced on a subset of generators.
  bool connected(const std::vector<std::size_t>& subset) const;

  bool is_finite() const {
    const Signature sig = signature();
    return sig.positive == static_cast<int>(rank());
  }
  /// Positive semidefinite with a nontrivial radical.
  bool is_affine_type() const {
    const Signature sig = signature();
    return sig.negative == 0 && sig.zero > 0;
  }

  /// Coxeter label recovered from the Gram entry (kInfinity when B <= -1 or B >= 1).
  CoxeterLabel coxeter_label(std::size_t s, std::size_t t) const;

  nlohmann::json to_json() const;

 private:
  std::vector<std::size_t> all_generators() const {
    std::vector<std::size_t> v(rank());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }
  void validate() const;

  std::vector<std::string> names_;
  std::vector<std::vector<Scalar>> gram_;
  long d_ = 1;
  std::string label_;
};

inline void CoxeterSystem::validate() const {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("a Coxeter system needs at least one generator");
  if (!is_square_free(d_)) throw InputError("field_d must be a positive square-free integer");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate generator name '" + names_[i] + "'");
  if (gram_.size() != n) throw InputError("Gram matrix has the wrong number of rows");
  for (std::size_t s = 0; s < n; ++s) {
    if (gram_[s].size() != n) throw InputError("Gram matrix is not square");
    if (gram_[s][s] != Scalar(1)) throw InputError("diagonal Gram entries must equal 1");
    for (std::size_t t = 0; t < n; ++t) {
      const Scalar& e = gram_[s][t];
      if (e.field() != 1 && e.field() != d_) throw InputError("Gram entry outside Q(sqrt field_d)");
      if (e != gram_[t][s]) throw InputError("Gram matrix must be symmetric");
      if (s == t) continue;
      if (e.sign() > 0)
        throw InputError("off-diagonal entry B(" + names_[s] + "," + names_[t] + ") = " + e.str() +
                         " is positive");
      if (e <= Scalar(-1) || e.is_zero()) continue;
      bool ok = false;
      for (int m = 3; m <= 6 && !ok; ++m)
        if (auto c = negative_cosine(m, d_); c && *c == e) ok = true;
      if (!ok)
        throw InputError("off-diagonal entry B(" + names_[s] + "," + names_[t] + ") = " + e.str() +
                         " lies in (-1,0) but is not -cos(pi/m) in this field");
    }
  }
}

inline CoxeterSystem CoxeterSystem::from_labels(std::vector<std::string> names,
                                                const std::vector<std::vector<int>>& m, long field_d,
                                                const std::map<std::pair<int, int>, Scalar>& overrides,
                                                std::string label) {
  const std::size_t n = names.size();
  if (m.size() != n) throw InputError("Coxeter matrix has the wrong number of rows");
  long d = field_d;
  if (d == 0) {
    d = 1;
    for (const auto& row : m)
      for (int x : row) {
        const long need = field_for_label(x);
        if (need == 1) continue;
        if (d != 1 && d != need)
          throw InputError("labels need two different quadratic fields; a single extension is supported");
        d = need;
      }
    for (const auto& [k, v] : overrides)
      if (v.field() != 1) {
        if (d != 1 && d != v.field()) throw InputError("override literal conflicts with the inferred field");
        d = v.field();
      }
  }
  std::vector<std::vector<Scalar>> gram(n, std::vector<Scalar>(n));
  for (std::size_t s = 0; s < n; ++s) {
    if (m[s].size() != n) throw InputError("Coxeter matrix is not square");
    for (std::size_t t = 0; t < n; ++t) {
      if (m[s][t] != m[t][s]) throw InputError("Coxeter matrix must be symmetric");
      if (s == t) {
        if (m[s][t] != 1) throw InputError("diagonal Coxeter labels must be 1");
        gram[s][t] = Scalar(1);
        continue;
      }
      const int label_st = m[s][t];
      auto it = overrides.find({static_cast<int>(std::min(s, t)), static_cast<int>(std::max(s, t))});
      if (it != overrides.end()) {
        const Scalar& e = it->second;
        if (label_st == kInfinity) {
          if (e > Scalar(-1)) throw InputError("explicit entry for an infinite label must be <= -1");
        } else {
          auto c = negative_cosine(label_st, d);
          if (!c || *c != e) throw InputError("explicit entry contradicts the Coxeter label");
        }
        gram[s][t] = e;
        continue;
      }
      if (label_st == kInfinity) {
        gram[s][t] = Scalar(-1);
      } else if (label_st < 2) {
        throw InputError("off-diagonal Coxeter labels must be >= 2 or inf");
      } else {
        auto c = negative_cosine(label_st, d);
        if (!c)
          throw InputError("-cos(pi/" + std::to_string(label_st) + ") is not representable in Q(sqrt " +
                           std::to_string(d) + ")");
        gram[s][t] = *c;
      }
    }
  }
  return CoxeterSystem(std::move(names), std::move(gram), d, std::move(label));
}

inline CoxeterSystem CoxeterSystem::from_json(const nlohmann::json& spec) {
  try {
    std::vector<std::string> names = spec.at("generators").get<std::vector<std::string>>();
    const long d = spec.value("field_d", 0L);
    if (d < 0 || (d > 0 && !is_square_free(d))) throw InputError("field_d must be a positive square-free integer");
    const std::size_t n = names.size();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    if (spec.contains("coxeter_matrix")) {
      const auto& cm = spec.at("coxeter_matrix");
      if (!cm.is_array() || cm.size() != n) throw InputError("coxeter_matrix must have one row per generator");
      for (std::size_t i = 0; i < n; ++i) {
        if (!cm[i].is_array() || cm[i].size() != n) throw InputError("coxeter_matrix rows must have length n");
        for (std::size_t j = 0; j < n; ++j) {
          const auto& x = cm[i][j];
          if (x.is_string()) {
            const auto s = x.get<std::string>();
            if (s == "inf" || s == "infinity" || s == "oo") m[i][j] = kInfinity;
            else m[i][j] = std::stoi(s);
          } else if (x.is_number_integer()) {
            m[i][j] = x.get<int>();
            if (m[i][j] == 0 || m[i][j] == -1) m[i][j] = kInfinity;
          } else {
            throw InputError("coxeter_matrix entries must be integers or \"inf\"");
          }
        }
      }
    }
    // the field must be known before literals containing rt are read
    long field = d;
    if (field == 0) {
      field = 1;
      for (const auto& row : m)
        for (int x : row)
          if (field_for_label(x) != 1) field = field_for_label(x);
    }
    std::map<std::pair<int, int>, Scalar> overrides;
    if (spec.contains("gram_overrides")) {
      for (const auto& [key, value] : spec.at("gram_overrides").items()) {
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw InputError("gram_overrides keys look like \"s,t\"");
        const auto s = key.substr(0, comma);
        const auto t = key.substr(comma + 1);
        int i = -1, j = -1;
        for (std::size_t k = 0; k < n; ++k) {
          if (names[k] == s) i = static_cast<int>(k);
          if (names[k] == t) j = static_cast<int>(k);
        }
        if (i < 0 || j < 0 || i == j) throw InputError("gram_overrides key '" + key + "' names unknown generators");
        Scalar e = value.is_string() ? Scalar::parse(value.get<std::string>(), field)
                                     : throw InputError("gram_overrides values must be scalar literals");
        overrides[{std::min(i, j), std::max(i, j)}] = e;
      }
    }
    return from_labels(std::move(names), m, d, overrides, spec.value("name", std::string{}));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed system spec: ") + e.what());
  } catch (const ScalarError& e) {
    throw InputError(e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline Signature CoxeterSystem::signature() const {
  const std::size_t n = rank();
  std::vector<std::vector<Scalar>> a = gram_;
  Signature sig;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // pick a remaining index with nonzero diagonal
    std::optional<std::size_t> p;
    for (std::size_t i = 0; i < n && !p; ++i)
      if (!done[i] && !a[i][i].is_zero()) p = i;
    if (!p) {
      // all remaining diagonals vanish; look for a nonzero off-diagonal entry
      std::optional<std::pair<std::size_t, std::size_t>> ij;
      for (std::size_t i = 0; i < n && !ij; ++i)
        for (std::size_t j = i + 1; j < n && !ij; ++j)
          if (!done[i] && !done[j] && !a[i][j].is_zero()) ij = std::make_pair(i, j);
      if (!ij) break;
      const auto [i, j] = *ij;
      // congruence: e_i <- e_i + e_j gives a[i][i] = 2 a[i][j]
      for (std::size_t k = 0; k < n; ++k) a[i][k] += a[j][k];
      for (std::size_t k = 0; k < n; ++k) a[k][i] += a[k][j];
      p = i;
    }
    const std::size_t k = *p;
    done[k] = true;
    const Scalar pivot = a[k][k];
    if (pivot.sign() > 0) ++sig.positive;
    else ++sig.negative;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || a[i][k].is_zero()) continue;
      const Scalar f = a[i][k] / pivot;
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (done[j] || a[k][j].is_zero()) continue;
      a[k][j] = Scalar(0);
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i]) a[i][k] = Scalar(0);
  }
  sig.zero = static_cast<int>(n) - sig.positive - sig.negative;
  return sig;
}

inline bool CoxeterSystem::connected(const std::vector<std::size_t>& subset) const {
  if (subset.empty()) return true;
  std::vector<bool> in(rank(), false), seen(rank(), false);
  for (auto s : subset) in.at(s) = true;
  std::vector<std::size_t> stack{subset.front()};
  seen[subset.front()] = true;
  std::size_t count = 0;
  while (!stack.empty()) {
    const auto s = stack.back();
    stack.pop_back();
    ++count;
    for (std::size_t t = 0; t < rank(); ++t)
      if (in[t] && !seen[t] && !gram_[s][t].is_zero()) {
        seen[t] = true;
        stack.push_back(t);
      }
  }
  return count == subset.size();
}

inline CoxeterLabel CoxeterSystem::coxeter_label(std::size_t s, std::size_t t) const {
  if (s == t) return 1;
  const Scalar& e = gram_[s][t];
  if (e <= Scalar(-1)) return kInfinity;
  for (int m = 2; m <= 6; ++m)
    if (auto c = negative_cosine(m, d_); c && *c == e) return m;
  return kInfinity;
}

inline nlohmann::json CoxeterSystem::to_json() const {
  nlohmann::json j;
  if (!label_.empty()) j["name"] = label_;
  j["field_d"] = d_;
  j["generators"] = names_;
  nlohmann::json cm = nlohmann::json::array();
  nlohmann::json overrides = nlohmann::json::object();
  for (std::size_t s = 0; s < rank(); ++s) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t t = 0; t < rank(); ++t) {
      const auto m = coxeter_label(s, t);
      if (m == kInfinity) row.push_back("inf");
      else row.push_back(m);
      if (s < t && m == kInfinity && gram_[s][t] != Scalar(-1))
        overrides[names_[s] + "," + names_[t]] = gram_[s][t].str();
    }
    cm.push_back(row);
  }
  j["coxeter_matrix"] = cm;
  if (!overrides.empty()) j["gram_overrides"] = overrides;
  return j;
}

/// Linear map of V stored by the images of the simple roots (columns); a
/// group element acts through its reflection representation.
class ElementMatrix {
 public:
  explicit ElementMatrix(std::size_t n) {
    cols_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) cols_.push_back(Vector::unit(n, i));
  }

  const Vector& column(std::size_t s) const { return cols_[s]; }
  std::size_t size() const { return cols_.size(); }

  Vector apply(const Vector& v) const {
    Vector r(cols_.size());
    for (std::size_t t = 0; t < cols_.size(); ++t) r.axpy(v[t], cols_[t]);
    return r;
  }
  /// this <- this * s
  void right_multiply(const CoxeterSystem& sys, std::size_t s) {
    const Vector image_s = cols_[s];
    for (std::size_t t = 0; t < cols_.size(); ++t) {
      if (t == s) continue;
      const Scalar& b = sys.gram(s, t);
      if (b.is_zero()) continue;
      cols_[t].axpy(Scalar(-2) * b, image_s);
    }
    cols_[s] = -image_s;
  }
  /// this <- s * this
  void left_multiply(const CoxeterSystem& sys, std::size_t s) {
    for (auto& c : cols_) c = sys.reflect_simple(s, c);
  }

  friend bool operator==(const ElementMatrix& a, const ElementMatrix& b) { return a.cols_ == b.cols_; }
  friend bool operator<(const ElementMatrix& a, const ElementMatrix& b) {
    CanonicalLess less;
    for (std::size_t i = 0; i < a.cols_.size(); ++i) {
      if (less(a.cols_[i], b.cols_[i])) return true;
      if (less(b.cols_[i], a.cols_[i])) return false;
    }
    return false;
  }

 private:
  std::vector<Vector> cols_;
};

}  // namespace coxwo
