#include "latgenus/verify.hpp"

#include <algorithm>
#include <sstream>

#include "latgenus/chi_y.hpp"
#include "latgenus/epoly.hpp"

namespace latgenus {

using nlohmann::json;

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{
      "nonnegativity", "positivity",   "pipeline",     "p0-law",      "reciprocity", "hstar",
      "pyramid",       "mixed-volume", "me-endpoints", "kgenus-sign", "cayley",      "curve"};
  return names;
}

namespace {

std::string mismatch(const std::string& what, const Integer& lhs, const Integer& rhs) {
  return what + ": " + lhs.get_str() + " != " + rhs.get_str();
}

using SuiteResult = std::optional<std::string>;
const SuiteResult kPass = std::string();

SuiteResult check_nonnegativity(const FamilyCounter& c) {
  const Integer v = dmv(c);
  if (v < 0) return "dmv is negative: " + v.get_str();
  return kPass;
}

SuiteResult check_positivity(const FamilyCounter& c) {
  const bool positive = dmv(c) > 0;
  const bool segments = has_independent_segments(c.family());
  if (positive != segments)
    return std::string("dmv > 0 is ") + (positive ? "true" : "false") + " but independent segments " +
           (segments ? "exist" : "do not exist");
  return kPass;
}

SuiteResult check_pipeline(const FamilyCounter& c) {
  for (long p = 0; p <= static_cast<long>(c.ambient_dim()); ++p) {
    const Integer closed = chi_y_closed(c, p);
    const Integer cayley = chi_y_cayley(c, p);
    if (closed != cayley) return mismatch("e^{" + std::to_string(p) + ",+} closed vs cayley", closed, cayley);
  }
  return kPass;
}

SuiteResult check_p0(const FamilyCounter& c) {
  const long n = static_cast<long>(c.ambient_dim());
  const long k = static_cast<long>(c.size());
  const Integer expected = pow_neg_one(n - k) * dmv(c);
  const Integer got = chi_y_closed(c, 0);
  if (got != expected) return mismatch("e^{0,+} vs (-1)^{n-k} dmv", got, expected);
  return kPass;
}

SuiteResult check_reciprocity(const FamilyCounter& c) {
  for (const auto& p : c.family().polytopes()) {
    const Integer via = interior_via_reciprocity(p, c.options());
    const Integer direct = to_integer(count_interior_lattice_points(p, c.options()));
    if (via != direct) return mismatch("reciprocity vs direct interior count", via, direct);
  }
  return kPass;
}

SuiteResult check_hstar(const FamilyCounter& c) {
  for (const auto& p : c.family().polytopes()) {
    const HStarVector h = h_star(p, c.options());
    if (h.front() != 1) return "h*_0 = " + h.front().get_str();
    Integer sum = 0;
    for (const auto& x : h) {
      if (x < 0) return "negative h* entry " + x.get_str();
      sum += x;
    }
    Integer fact;
    mpz_fac_ui(fact.get_mpz_t(), p.dim());
    const Rational normalized = relative_volume(p) * fact;
    if (Rational(sum) != normalized)
      return "sum of h* is " + sum.get_str() + ", normalized volume " + fraction_string(normalized);
  }
  return kPass;
}

SuiteResult check_pyramid(const FamilyCounter& c) {
  for (const auto& p : c.family().polytopes()) {
    const HStarVector base = h_star(p, c.options());
    HStarVector pyr = h_star(pyramid_over(p), c.options());
    if (pyr.size() != base.size() + 1 || pyr.back() != 0) return std::string("pyramid h* has wrong shape");
    pyr.pop_back();
    if (pyr != base) return std::string("h* changed under the lattice pyramid");
  }
  return kPass;
}

SuiteResult check_mixed_volume(const FamilyCounter& c) {
  if (c.size() != c.ambient_dim()) return std::nullopt;
  const Integer d = dmv(c);
  const Integer mv = normalized_mixed_volume(c);
  if (d != mv) return mismatch("dmv vs normalized mixed volume", d, mv);
  return kPass;
}

SuiteResult check_me_endpoints(const FamilyCounter& c) {
  const RationalPolynomial me = mixed_ehrhart(c);
  if (ehr_eval(me, 0) != 0) return "ME(0) = " + fraction_string(ehr_eval(me, 0));
  const Rational at_one = ehr_eval(me, 1);
  const Integer d = dmv(c);
  if (at_one != Rational(d)) return "ME(1) = " + fraction_string(at_one) + " but dmv = " + d.get_str();
  return kPass;
}

SuiteResult check_kgenus_sign(const FamilyCounter& c) {
  const Integer lhs = kgenus_interior_sum(c);
  const Integer rhs = pow_neg_one(static_cast<long>(c.size())) * khovanskii_genus_me(c);
  if (lhs != rhs) return mismatch("interior sum vs (-1)^k ME(-1)", lhs, rhs);
  return kPass;
}

SuiteResult check_cayley(const FamilyCounter& c) {
  const auto& family = c.family();
  for (const auto& subset : subsets(family.size())) {
    if (subset.empty()) continue;
    const LatticePolytope cay = cayley(family, subset);
    const std::size_t expected_dim = c.polytope(c.indicator(subset)).dim() + subset.size() - 1;
    if (cay.dim() != expected_dim)
      return "dim C_I = " + std::to_string(cay.dim()) + ", expected " + std::to_string(expected_dim);
    for (long j = 0; j <= 3; ++j) {
      const Integer via_sum = ehr_cayley_sum(family.size(), subset, j,
                                             [&](const std::vector<long>& v) { return c.count(v); });
      const Integer direct = to_integer(count_lattice_points(dilate(cay, j), c.options()));
      if (via_sum != direct) return mismatch("ehr(C_I; " + std::to_string(j) + ")", via_sum, direct);
    }
  }
  return kPass;
}

SuiteResult check_curve(const FamilyCounter& c) {
  if (c.size() != 1 || c.ambient_dim() != 2 || c.family()[0].dim() != 2) return std::nullopt;
  const auto& poly = c.family()[0];
  const long total = static_cast<long>(count_lattice_points(poly, c.options()));
  const long g = static_cast<long>(count_interior_lattice_points(poly, c.options()));
  const long b = total - g;
  const Integer d = dmv(c);
  if (d != g + b - 1) return mismatch("dmv vs g + b - 1", d, Integer(g + b - 1));
  const BivariatePolynomial e = curve_e_expected(g, b);
  for (long p = 0; p <= 2; ++p) {
    const Integer got = chi_y_closed(c, p);
    const Integer want = chi_y_from_E(e, p);
    if (got != want) return mismatch("curve model e^{" + std::to_string(p) + ",+}", got, want);
  }
  return kPass;
}

SuiteResult dispatch(const std::string& suite, const FamilyCounter& c) {
  if (suite == "nonnegativity") return check_nonnegativity(c);
  if (suite == "positivity") return check_positivity(c);
  if (suite == "pipeline") return check_pipeline(c);
  if (suite == "p0-law") return check_p0(c);
  if (suite == "reciprocity") return check_reciprocity(c);
  if (suite == "hstar") return check_hstar(c);
  if (suite == "pyramid") return check_pyramid(c);
  if (suite == "mixed-volume") return check_mixed_volume(c);
  if (suite == "me-endpoints") return check_me_endpoints(c);
  if (suite == "kgenus-sign") return check_kgenus_sign(c);
  if (suite == "cayley") return check_cayley(c);
  if (suite == "curve") return check_curve(c);
  throw InputError("unknown verification suite: " + suite);
}

SuiteResult guarded(const std::string& suite, const FamilyCounter& c) {
  try {
    return dispatch(suite, c);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
}

bool still_fails(const std::string& suite, const FamilySpec& spec, const EnumOptions& opts) {
  const SuiteResult r = guarded(suite, FamilyCounter(build_family(spec), opts));
  return r.has_value() && !r->empty();
}

// Greedy shrinking: drop whole members, then single vertices, while the
// suite keeps failing.
FamilySpec shrink(const std::string& suite, FamilySpec spec, const EnumOptions& opts) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; spec.vertex_lists.size() > 1 && i < spec.vertex_lists.size(); ++i) {
      FamilySpec trial = spec;
      trial.vertex_lists.erase(trial.vertex_lists.begin() + static_cast<std::ptrdiff_t>(i));
      trial.names.erase(trial.names.begin() + static_cast<std::ptrdiff_t>(i));
      if (still_fails(suite, trial, opts)) {
        spec = std::move(trial);
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t i = 0; i < spec.vertex_lists.size() && !changed; ++i) {
      for (std::size_t v = 0; spec.vertex_lists[i].size() > 1 && v < spec.vertex_lists[i].size(); ++v) {
        FamilySpec trial = spec;
        trial.vertex_lists[i].erase(trial.vertex_lists[i].begin() + static_cast<std::ptrdiff_t>(v));
        if (still_fails(suite, trial, opts)) {
          spec = std::move(trial);
          changed = true;
          break;
        }
      }
    }
  }
  return spec;
}

void observe_vanishing(const FamilyCounter& c, std::size_t idx, VanishingTally& tally) {
  const long n = static_cast<long>(c.ambient_dim());
  const long k = static_cast<long>(c.size());
  const bool positive = dmv(c) > 0;
  bool nonzero = false;
  for (long p = std::max(0L, n - k + 1); p <= n; ++p) {
    const Integer v = chi_y_closed(c, p);
    if (v == 0) continue;
    nonzero = true;
    if (tally.nonzero_examples.size() < 5)
      tally.nonzero_examples.push_back({{"case", idx}, {"p", p}, {"value", integer_json(v)}, {"dmv_positive", positive}});
  }
  (positive ? tally.positive_cases : tally.empty_cases) += 1;
  if (nonzero) (positive ? tally.positive_nonzero : tally.empty_nonzero) += 1;
}

}  // namespace

std::optional<std::string> run_suite(const std::string& suite, const PolytopeFamily& family,
                                     const EnumOptions& opts) {
  return guarded(suite, FamilyCounter(family, opts));
}

json sign_convention_report(const EnumOptions& opts) {
  json rows = json::array();
  for (long a : {6L, 12L}) {
    std::vector<LatticePolytope> members{
        LatticePolytope::hull({make_vector({0, 0, 0}), make_vector({a, 0, 0}), make_vector({0, a, 0})}, 3),
        LatticePolytope::hull({make_vector({0, 0, 1}), make_vector({1, 0, 1})}, 3)};
    const FamilyCounter counter(PolytopeFamily(3, std::move(members)), opts);
    const GenusReport r = genus_report(counter);
    rows.push_back({{"a", a},
                    {"me_at_minus_one", integer_json(r.khovanskii_me)},
                    {"signed_me_at_minus_one", integer_json(r.signed_khovanskii_me)},
                    {"kgenus_interior_sum", integer_json(r.kgenus_interior_sum)},
                    {"mixed_ehrhart", r.mixed_ehrhart.fraction_strings()}});
  }
  return {{"family", "conv{0, a e1, a e2} and conv{e3, e1 + e3} in R^3"},
          {"rows", std::move(rows)},
          {"note",
           "ME(-1) grows positively with a; only the signed value (-1)^n ME(-1) becomes very "
           "negative. Both are reported; neither is chosen as the genus."}};
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  std::vector<std::string> suites = cfg.checks.empty() ? verify_suite_names() : cfg.checks;
  for (const auto& s : suites)
    if (std::find(verify_suite_names().begin(), verify_suite_names().end(), s) == verify_suite_names().end())
      throw InputError("unknown verification suite: " + s);
  if (cfg.max_dim < 1) throw InputError("--max-dim must be at least 1");
  if (cfg.max_k < 1) throw InputError("--max-k must be at least 1");
  if (cfg.max_vertices < 1) throw InputError("--max-vertices must be at least 1");
  if (cfg.coord_bound < 0) throw InputError("--coord-bound must be nonnegative");

  RandomFamilyConfig gen_cfg;
  gen_cfg.max_dim = cfg.max_dim;
  gen_cfg.max_k = cfg.max_k;
  gen_cfg.coord_lo = -cfg.coord_bound;
  gen_cfg.coord_hi = cfg.coord_bound;
  gen_cfg.max_vertices = cfg.max_vertices;

  VerifyReport report;
  for (const auto& s : suites) report.tallies.emplace_back(s, SuiteTally{});

  CaseGenerator gen(cfg.seed);
  for (std::size_t idx = 0; idx < cfg.cases; ++idx) {
    const PolytopeFamily family = gen.family(gen_cfg);
    const FamilyCounter counter(family, cfg.enum_options);
    for (auto& [suite, tally] : report.tallies) {
      const SuiteResult r = guarded(suite, counter);
      if (!r) {
        ++tally.skipped;
      } else if (r->empty()) {
        ++tally.passed;
      } else {
        ++tally.failed;
        const bool first = std::none_of(report.failures.begin(), report.failures.end(),
                                        [&](const VerifyFailure& f) { return f.suite == suite; });
        if (first)
          report.failures.push_back(
              {suite, idx, *r, shrink(suite, spec_from_family(family), cfg.enum_options)});
      }
    }
    try {
      observe_vanishing(counter, idx, report.vanishing);
    } catch (const BudgetExceeded&) {
      // Observation only; the suites above already report budget trouble.
    }
  }
  report.sign_convention = sign_convention_report(cfg.enum_options);
  return report;
}

json VerifyReport::to_json(const VerifyConfig& cfg) const {
  json suites = json::object();
  for (const auto& [name, t] : tallies)
    suites[name] = {{"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}};
  json failures_json = json::array();
  for (const auto& f : failures)
    failures_json.push_back({{"suite", f.suite},
                             {"case", f.case_index},
                             {"detail", f.detail},
                             {"reproducer", latgenus::to_json(f.reproducer)}});
  return {{"config",
           {{"seed", cfg.seed},
            {"cases", cfg.cases},
            {"max_dim", cfg.max_dim},
            {"max_k", cfg.max_k},
            {"coord_bound", cfg.coord_bound},
            {"max_vertices", cfg.max_vertices},
            {"max_enum", cfg.enum_options.max_candidates}}},
          {"suites", std::move(suites)},
          {"failures", std::move(failures_json)},
          {"vanishing_above_n_minus_k",
           {{"dmv_positive", {{"cases", vanishing.positive_cases}, {"nonzero", vanishing.positive_nonzero}}},
            {"dmv_zero", {{"cases", vanishing.empty_cases}, {"nonzero", vanishing.empty_nonzero}}},
            {"nonzero_examples", vanishing.nonzero_examples}}},
          {"sign_convention", sign_convention},
          {"all_passed", all_passed()}};
}

}  // namespace latgenus
