#pragma once

#include <string>
#include <vector>

#include "braid.hpp"

namespace bmf {

// One factor of a braid monodromy factorization: the braid itself plus where
// it came from and, when available, its display expression in the DSL.
struct Factor {
  BraidWord braid;
  std::string provenance;
  std::string expr;
};

struct Factorization {
  int strands = 1;
  std::vector<Factor> factors;

  explicit Factorization(int n = 1) : strands(n) {}

  void push(BraidWord b, std::string prov = "", std::string expr = "") {
    factors.push_back({std::move(b), std::move(prov), std::move(expr)});
  }

  void append(const Factorization& other) {
    for (const auto& f : other.factors) factors.push_back(f);
  }

  BraidWord product() const {
    BraidWord p(strands);
    for (const auto& f : factors) p.append(f.braid);
    return p;
  }

  long long total_degree() const {
    long long d = 0;
    for (const auto& f : factors) d += degree(f.braid);
    return d;
  }

  size_t size() const { return factors.size(); }
};

}  // namespace bmf
