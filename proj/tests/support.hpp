#pragma once

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxwo/coxsys.hpp"
#include "coxwo/weakorder.hpp"

namespace testing_support {

inline coxwo::CoxeterSystem load(const std::string& name) {
  std::ifstream in(std::string(COXWO_SYSTEMS_DIR) + "/" + name + ".json");
  if (!in) throw std::runtime_error("missing system file " + name);
  return coxwo::CoxeterSystem::from_json(nlohmann::json::parse(in));
}

inline coxwo::Word word(const coxwo::CoxeterSystem& sys, const std::string& text) {
  return coxwo::Word::parse(sys, text);
}

inline coxwo::Vector vec(std::initializer_list<long> xs) {
  std::vector<coxwo::Scalar> c;
  for (long x : xs) c.emplace_back(x);
  return coxwo::Vector(std::move(c));
}

/// Random reduced word of length <= max_len (uniform length, random reduced extensions).
inline coxwo::Word random_reduced(coxwo::RootStore& store, std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  const std::size_t len = len_dist(rng);
  coxwo::Word w;
  for (std::size_t k = 0; k < len; ++k) {
    std::vector<std::size_t> options;
    for (std::size_t s = 0; s < store.rank(); ++s)
      if (coxwo::is_positive(coxwo::apply_word(store, w, static_cast<int>(s)))) options.push_back(s);
    if (options.empty()) break;  // longest element reached
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    w.letters.push_back(options[pick(rng)]);
  }
  return w;
}

}  // namespace testing_support
