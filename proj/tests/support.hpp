// Shared helpers for the test binaries.
#pragma once

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "alexlink/fixture.hpp"
#include "alexlink/laurent.hpp"

namespace alexlink::testing {

inline std::filesystem::path fixture_dir() { return ALEXLINK_FIXTURE_DIR; }

inline Fixture fixture(const std::string& name) { return load_fixture(fixture_dir() / (name + ".link")); }

inline std::vector<Fixture> corpus() {
  std::vector<Fixture> out;
  for (const auto& p : fixture_paths(fixture_dir())) out.push_back(load_fixture(p));
  return out;
}

inline LaurentPoly P(const std::string& text, std::size_t vars) { return parse_laurent(text, vars); }

inline bool associate(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return normalize_unit(a) == normalize_unit(b);
}

/// Deterministic generator of small random Laurent polynomials.
class PolyGen {
 public:
  explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  LaurentPoly poly(std::size_t vars, int max_terms, int min_exp, int max_exp, int max_coeff) {
    LaurentPoly p(vars);
    const int terms = uniform(1, max_terms);
    for (int i = 0; i < terms; ++i) {
      Monomial m(vars);
      for (std::size_t v = 0; v < vars; ++v) m[v] = uniform(min_exp, max_exp);
      p.add_term(m, uniform(-max_coeff, max_coeff));
    }
    return p;
  }

  LaurentPoly nonzero(std::size_t vars, int max_terms, int min_exp, int max_exp, int max_coeff) {
    for (;;) {
      LaurentPoly p = poly(vars, max_terms, min_exp, max_exp, max_coeff);
      if (!p.is_zero()) return p;
    }
  }

  /// Nonconstant in the normal form, so factor counts are meaningful.
  LaurentPoly nonunit(std::size_t vars, int max_terms, int max_exp, int max_coeff) {
    for (;;) {
      LaurentPoly p = poly(vars, max_terms, 0, max_exp, max_coeff);
      if (!p.is_zero() && !p.is_unit() && p.content() == 1) return p;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace alexlink::testing
