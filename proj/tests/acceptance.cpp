// Acceptance gate: one PASS/FAIL line per criterion. Exit status 1 when any
// criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "alexlink/obstructions.hpp"
#include "alexlink/report.hpp"
#include "alexlink/search.hpp"
#include "support.hpp"

using namespace alexlink;
using alexlink::testing::associate;
using alexlink::testing::corpus;
using alexlink::testing::fixture;
using alexlink::testing::P;
using alexlink::testing::PolyGen;

namespace {

constexpr double kTimeLimitSeconds = 10.0;
constexpr int kRandomCases = 1000;
constexpr int kSearchDepth = 3;

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(const std::string& id, const std::string& text, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > kTimeLimitSeconds) {
    o.ok = false;
    o.detail += " over the time limit";
  }
  if (!o.ok) ++failures;
  std::printf("%s [%s] %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id.c_str(), text.c_str(), secs,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
}

Outcome expect(bool ok, std::string detail = {}) { return {ok, ok ? std::string() : std::move(detail)}; }

Outcome delta_equals(const char* name, const char* expected) {
  const auto d = fixture(name).diagram;
  const auto a = alexander_data(d);
  const auto want = P(expected, static_cast<std::size_t>(d.component_count()));
  return expect(associate(a.delta, want), "computed " + to_string(normalize_unit(a.delta).poly()));
}

Outcome lower_bound_is(const char* name, Quantity q, int value) {
  const auto r = obstruct(fixture(name).diagram, name);
  const int got = r.bounds.at(q).lower;
  return expect(got == value, "computed " + std::to_string(got));
}

bool property(std::uint64_t seed, const std::function<bool(PolyGen&)>& one) {
  PolyGen gen(seed);
  for (int i = 0; i < kRandomCases; ++i)
    if (!one(gen)) return false;
  return true;
}

}  // namespace

int main() {
  // Values printed for specific links.
  criterion("1.L8a16.delta", "Delta(L8a16) = (t1-1)(t2-1)(t3-1)(t2t3-1)",
            [] { return delta_equals("L8a16", "(t1 - 1)*(t2 - 1)*(t3 - 1)*(t2*t3 - 1)"); });
  criterion("1.L8a16.unlinking", "L8a16 unlinking bound = 3",
            [] { return lower_bound_is("L8a16", Quantity::unlinking, 3); });
  criterion("1.L8a16.weak_splitting", "L8a16 weak-splitting bound = 3",
            [] { return lower_bound_is("L8a16", Quantity::weak_splitting, 3); });
  criterion("1.L9a54.delta", "Delta(L9a54) = (t3-1)(t2-1)(t1-1)(t3^2-t3+1)",
            [] { return delta_equals("L9a54", "(t3 - 1)*(t2 - 1)*(t1 - 1)*(t3^2 - t3 + 1)"); });
  criterion("1.L9a54.unlinking", "L9a54 unlinking bound = 3",
            [] { return lower_bound_is("L9a54", Quantity::unlinking, 3); });
  criterion("1.L9a1.delta", "Delta(L9a1) = (t2-1)(t1-1)(2t2^2-3t2+2)",
            [] { return delta_equals("L9a1", "(t2 - 1)*(t1 - 1)*(2*t2^2 - 3*t2 + 2)"); });
  criterion("1.L9a1.unlinking", "L9a1 unlinking bound = 2",
            [] { return lower_bound_is("L9a1", Quantity::unlinking, 2); });

  const char* printed_l12 =
      "t1^3*t2^3 - 2*t1^2*t2^3 - t1^3*t2^2 + t1*t2^3 + 5*t1^2*t2^2 - 4*t1*t2^2 - 4*t1^2*t2 + 5*t1*t2 + t1^2 - t2 - "
      "2*t1 + 1";
  criterion("1.L12n1320.delta", "Delta(L12n1320) = printed 12-term polynomial",
            [&] { return delta_equals("L12n1320", printed_l12); });
  criterion("1.L12n1320.factors", "printed L12n1320 polynomial = (t1-1)(t2-1)(t1^2t2^2-t1t2^2+3t1t2-t1+1)", [&] {
    const auto f = factor_irreducible(P(printed_l12, 2));
    const bool ok = f.factors.size() == 3 && f.multiplicity_of(normalize_unit(P("t1 - 1", 2))) == 1 &&
                    f.multiplicity_of(normalize_unit(P("t2 - 1", 2))) == 1 &&
                    f.multiplicity_of(normalize_unit(P("t1^2*t2^2 - t1*t2^2 + 3*t1*t2 - t1 + 1", 2))) == 1;
    return expect(ok, "factorization differs");
  });
  criterion("1.L12n1320.splitting", "L12n1320 splitting bound = 3 via norm rule and parity", [] {
    const auto r = obstruct(fixture("L12n1320").diagram, "L12n1320");
    const auto& b = r.bounds.at(Quantity::splitting);
    const bool reasons = std::find(b.reasons.begin(), b.reasons.end(), reason::component_norm) != b.reasons.end() &&
                         std::find(b.reasons.begin(), b.reasons.end(), reason::parity) != b.reasons.end();
    return expect(b.lower == 3 && reasons, "computed " + std::to_string(b.lower));
  });
  criterion("1.L12n1320.weak_splitting", "L12n1320 weak-splitting bound excludes 1", [] {
    const auto r = obstruct(fixture("L12n1320").diagram, "L12n1320");
    return expect(r.bounds.at(Quantity::weak_splitting).lower >= 2, "bound admits 1");
  });
  for (const char* name : {"L6a4", "L9a46", "L9a53"}) {
    criterion(std::string("1.") + name + ".unlinking", std::string("Delta(") + name + ") != 0, unlinking bound = 2",
              [name] {
                const auto r = obstruct(fixture(name).diagram, name);
                const int got = r.bounds.at(Quantity::unlinking).lower;
                return expect(!r.alexander.delta.is_zero() && got == 2, "computed " + std::to_string(got));
              });
  }
  criterion("1.band_clasping", "band-clasping of two trefoils yields g in the class of s-1+t^-1", [] {
    const auto l = P("(1 - t1 + t1^2)*(1 - t2 + t2^2)*(t1^-1 - 1 + t2)*(t1 - 1 + t2^-1)", 2);
    const auto trefoil = P("t^2 - t + 1", 1);
    const auto v = band_clasping_check(l, trefoil, trefoil);
    if (!v.holds || !v.g) return Outcome{false, "check did not succeed"};
    // g is determined only up to conjugation by the identity Delta = Delta_K Delta_J g gbar.
    const auto want = P("t1 - 1 + t2^-1", 2);
    return expect(associate(*v.g, want) || associate(*v.g, involute(want)), "g = " + to_string(*v.g));
  });

  // Structural statements.
  for (const char* name : {"unlink2", "unlink3", "unlink4"}) {
    criterion(std::string("2.") + name, std::string(name) + ": beta = m-1, Delta^tor = 1, all bounds 0", [name] {
      const auto d = fixture(name).diagram;
      const auto r = obstruct(d, name);
      bool ok = r.alexander.beta == d.component_count() - 1 && associate(r.alexander.delta_tor, P("1", r.m));
      for (Quantity q : kAllQuantities) ok = ok && r.bounds.at(q).lower == 0;
      return expect(ok, "beta " + std::to_string(r.alexander.beta));
    });
  }
  for (const char* name : {"trefoil_trefoil", "trefoil_unknot"}) {
    criterion(std::string("2.") + name, std::string(name) + ": beta = m-1, Delta^tor = product of component Deltas",
              [name] {
                const auto d = fixture(name).diagram;
                const auto a = alexander_data(d);
                LaurentPoly prod = LaurentPoly::constant(static_cast<std::size_t>(d.component_count()), 1);
                for (const auto& p : component_polynomials(d)) prod *= p;
                return expect(a.beta == d.component_count() - 1 && associate(a.delta_tor, prod),
                              "Delta^tor " + to_string(a.delta_tor));
              });
  }
  criterion("2.kawauchi", "Delta(t,...,t)(t-1) = one-variable Delta on multi-component corpus links", [] {
    int checked = 0;
    for (const auto& f : corpus()) {
      const auto& d = f.diagram;
      if (d.component_count() < 2 || d.crossing_count() > kDefaultConwayBudget) continue;
      const auto a = alexander_data(d);
      const auto diag = evaluate(a.delta, Substitution::diagonal(a.delta.var_count()));
      if (!associate(diag * P("t - 1", 1), one_variable_alexander(d))) return Outcome{false, f.name};
      ++checked;
    }
    return expect(checked > 0, "no links checked");
  });

  // Property suites.
  criterion("3.involution", "involute is an involution and a ring map", [] {
    return expect(property(101, [](PolyGen& g) {
      const auto a = g.poly(3, 4, -2, 2, 5), b = g.poly(3, 4, -2, 2, 5);
      return involute(involute(a)) == a && involute(a * b) == involute(a) * involute(b);
    }));
  });
  criterion("3.normalization", "unit normal form is invariant under units and idempotent", [] {
    return expect(property(102, [](PolyGen& g) {
      const auto a = g.nonzero(3, 4, -2, 2, 5);
      const auto u = LaurentPoly::monomial(Monomial{g.uniform(-3, 3), g.uniform(-3, 3), g.uniform(-3, 3)},
                                           g.uniform(0, 1) ? 1 : -1);
      const auto n = normalize_unit(a);
      return n == normalize_unit(a * u) && normalize_unit(n.poly()) == n;
    }));
  });
  criterion("3.factor_roundtrip", "factorizations expand back to the input", [] {
    return expect(property(103, [](PolyGen& g) {
      const auto p = g.nonunit(2, 3, 2, 3) * g.nonunit(2, 3, 2, 3);
      return factor_irreducible(p).expand() == p;
    }));
  });
  criterion("3.gcd_divides", "gcd divides both inputs and contains the common factor", [] {
    return expect(property(104, [](PolyGen& g) {
      const auto c = g.nonzero(2, 3, 0, 2, 3);
      const auto a = c * g.nonzero(2, 3, -1, 2, 3), b = c * g.nonzero(2, 3, -1, 2, 3);
      const auto d = gcd(a, b);
      return divide_exact(a, d) && divide_exact(b, d) && divide_exact(d, c);
    }));
  });
  criterion("3.divide_exact", "divide_exact(a*b, b) = a", [] {
    return expect(property(105, [](PolyGen& g) {
      const auto a = g.poly(2, 4, -2, 2, 6), b = g.nonzero(2, 3, -2, 2, 6);
      const auto q = divide_exact(a * b, b);
      return q && *q == a;
    }));
  });
  criterion("3.norm", "f * conj(f) * negligible is a norm up to negligible factors", [] {
    return expect(property(106, [](PolyGen& g) {
      const auto f = g.nonzero(2, 3, -1, 2, 3);
      auto n = LaurentPoly::monomial(Monomial{g.uniform(-2, 2), g.uniform(-2, 2)}, g.uniform(0, 1) ? 1 : -1);
      for (int k = g.uniform(0, 2); k > 0; --k) n *= P("t1 - 1", 2);
      for (int k = g.uniform(0, 2); k > 0; --k) n *= P("t2 - 1", 2);
      return is_norm_up_to_negligible(f * involute(f) * n).is_norm;
    }));
  });
  criterion("3.fox", "Fox row identity and deleted-column consistency on the corpus", [] {
    for (const auto& f : corpus()) {
      const auto j = fox_jacobian(f.diagram);
      const std::size_t vars = j.vars;
      const auto one = LaurentPoly::constant(vars, 1);
      for (std::size_t r = 0; r < j.rows(); ++r) {
        LaurentPoly sum(vars);
        for (std::size_t c = 0; c < j.cols(); ++c)
          sum += j.entries[r][c] * (LaurentPoly::variable(vars, j.column_component[c]) - one);
        if (!sum.is_zero()) return Outcome{false, f.name + " row identity"};
      }
      std::vector<std::size_t> first(vars, j.cols());
      for (std::size_t c = j.cols(); c-- > 0;) first[j.column_component[c]] = c;
      for (std::size_t a = 0; a < vars; ++a)
        for (std::size_t b = a + 1; b < vars; ++b) {
          if (first[a] == j.cols() || first[b] == j.cols()) continue;
          const auto lhs = deleted_column_gcd(j, first[a]) * (LaurentPoly::variable(vars, b) - one);
          const auto rhs = deleted_column_gcd(j, first[b]) * (LaurentPoly::variable(vars, a) - one);
          if (!associate(lhs, rhs)) return Outcome{false, f.name + " deleted columns"};
        }
    }
    return Outcome{true, {}};
  });
  criterion("3.beta_symmetry", "beta <= m-1 and Delta = involute(Delta) on the corpus", [] {
    for (const auto& f : corpus()) {
      const auto a = alexander_data(f.diagram);
      if (a.beta > f.diagram.component_count() - 1) return Outcome{false, f.name + " beta"};
      if (!a.delta.is_zero() && !associate(a.delta, involute(a.delta))) return Outcome{false, f.name + " symmetry"};
    }
    return Outcome{true, {}};
  });
  criterion("3.diagram_invariance", "beta, Delta, Delta^tor agree on two diagrams of the Hopf link and the trefoil", [] {
    for (auto [a, b] : {std::pair{"hopf_positive", "hopf_positive_4"}, std::pair{"trefoil", "trefoil_stabilized"}}) {
      const auto x = alexander_data(fixture(a).diagram), y = alexander_data(fixture(b).diagram);
      if (x.beta != y.beta || !associate(x.delta, y.delta) || !associate(x.delta_tor, y.delta_tor))
        return Outcome{false, a};
    }
    return Outcome{true, {}};
  });

  // End-to-end.
  criterion("4.search_consistency", "search upper bounds never fall below obstruction lower bounds", [] {
    for (const auto& f : corpus()) {
      const auto report = obstruct(f.diagram, f.name);
      std::map<Quantity, SearchResult> s{
          {Quantity::splitting, bounded_split_search(f.diagram, kSearchDepth, SearchMode::inter_component)},
          {Quantity::weak_splitting, bounded_split_search(f.diagram, kSearchDepth, SearchMode::any_crossing)},
          {Quantity::unlinking,
           bounded_split_search(f.diagram, kSearchDepth, SearchMode::any_crossing, SearchTarget::unlink)}};
      for (const auto& [q, r] : s)
        if (r.found && r.depth < report.bounds.at(q).lower) return Outcome{false, f.name};
      (void)certify_gap(report, s);
    }
    return Outcome{true, {}};
  });
  criterion("4.hopf", "Hopf link splitting number sandwiched to [1,1]", [] {
    const auto d = fixture("hopf_negative").diagram;
    const auto gaps =
        certify_gap(obstruct(d, "hopf"), {{Quantity::splitting, bounded_split_search(d, 1, SearchMode::inter_component)}});
    const auto& g = gaps.at(Quantity::splitting);
    return expect(g.lower == 1 && g.exact(), "interval differs");
  });

  // Annotations.
  criterion("5.open_links", "the five open links are reported inconclusive", [] {
    RecordOptions o;
    o.kind = RecordKind::obstruct;
    o.search_depth = kSearchDepth;
    int count = 0;
    for (const auto& f : corpus()) {
      if (f.open.empty()) continue;
      const auto r = build_record(f, o);
      for (const auto& [q, range] : f.open)
        if (r.quantities.at(*parse_quantity(q)).status != "inconclusive") return Outcome{false, f.name};
      ++count;
    }
    return expect(count == 5, std::to_string(count) + " open fixtures");
  });
  criterion("5.external", "known values are carried as annotations, never as derived bounds", [] {
    RecordOptions o;
    o.kind = RecordKind::obstruct;
    o.search_depth = kSearchDepth;
    for (const auto& f : corpus()) {
      const auto r = build_record(f, o);
      const auto computed = obstruct(f.diagram, f.name);
      for (Quantity q : kAllQuantities) {
        const auto& rec = r.quantities.at(q);
        const auto known = f.known.find(std::string(to_string(q)));
        if (known != f.known.end() && rec.known != known->second) return Outcome{false, f.name + " annotation"};
        if (rec.bound.lower != computed.bounds.at(q).lower) return Outcome{false, f.name + " bound"};
        if (rec.status == "exact" && rec.upper != rec.bound.lower) return Outcome{false, f.name + " status"};
      }
    }
    return Outcome{true, {}};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
