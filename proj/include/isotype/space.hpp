#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "isotype/error.hpp"

namespace isotype {

// Finite-dimensional space with an ordered, labeled basis. Basis order is
// part of every contract downstream (reports, tensor conventions, golden
// files), so construction is deterministic everywhere.
struct Space {
  std::vector<std::string> labels;

  Space() = default;
  explicit Space(std::vector<std::string> lab) : labels(std::move(lab)) {
    check_labels();
  }

  static Space indexed(std::size_t n, const std::string &prefix) {
    std::vector<std::string> lab;
    lab.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
      lab.push_back(prefix + std::to_string(i));
    return Space(std::move(lab));
  }

  std::size_t dim() const { return labels.size(); }

  void check_labels() const {
    std::unordered_set<std::string> seen;
    for (const auto &l : labels)
      if (!seen.insert(l).second)
        throw Error("Space: duplicate basis label '" + l + "'");
  }
};

// Left-factor-major tensor basis: (u1⊗v1, u1⊗v2, ..., u2⊗v1, ...).
inline Space tensor_space(const Space &u, const Space &v) {
  std::vector<std::string> lab;
  lab.reserve(u.dim() * v.dim());
  for (const auto &lu : u.labels)
    for (const auto &lv : v.labels)
      lab.push_back(lu + "⊗" + lv);
  return Space(std::move(lab));
}

inline std::size_t tensor_index(const Space &u, const Space &v, std::size_t i,
                                std::size_t j) {
  (void)u;
  return i * v.dim() + j;
}

// Direct sum in summand order; labels kept as-is (callers pick prefixes that
// cannot clash).
inline Space direct_sum(const Space &u, const Space &v) {
  std::vector<std::string> lab = u.labels;
  lab.insert(lab.end(), v.labels.begin(), v.labels.end());
  return Space(std::move(lab));
}

} // namespace isotype
