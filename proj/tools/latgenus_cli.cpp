// latgenus: lattice-polytope invariants from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input,
// 3 enumeration budget exceeded, 4 chi_y pipelines disagree.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "latgenus/chi_y.hpp"
#include "latgenus/io.hpp"
#include "latgenus/kernels.hpp"
#include "latgenus/verify.hpp"

namespace {

using nlohmann::json;
using namespace latgenus;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitPipelineMismatch = 4;

struct PipelineMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  bool pretty = false;
  std::uint64_t max_enum = EnumOptions{}.max_candidates;
  long p = -1;
  bool all = false;
  std::string pipeline = "closed";
  std::string subset;
  VerifyConfig verify;
  std::string checks;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json polynomial_json(const RationalPolynomial& poly) { return poly.fraction_strings(); }

json integers_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

json polytope_header(const std::string& name, const LatticePolytope& p) {
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(vector_json(v));
  return {{"name", name}, {"dim", p.dim()}, {"vertices", std::move(verts)}};
}

json per_polytope(const FamilySpec& spec, const PolytopeFamily& family, const EnumOptions& opts,
                  const std::string& what) {
  json rows = json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const LatticePolytope& p = family[i];
    json row = polytope_header(spec.names[i], p);
    if (what == "count") {
      row["count"] = count_lattice_points(p, opts);
      row["interior_count"] = count_interior_lattice_points(p, opts);
      row["relative_volume"] = fraction_string(relative_volume(p));
    } else if (what == "ehrhart") {
      row["ehrhart"] = polynomial_json(ehrhart_polynomial(p, opts));
    } else {
      row["hstar"] = integers_json(h_star(p, opts));
    }
    rows.push_back(std::move(row));
  }
  return {{"ambient_dim", family.ambient_dim()}, {"polytopes", std::move(rows)}};
}

// Values are computed before any JSON is built: an exception thrown inside
// a braced json initializer leaks the elements constructed so far.
json genus_json(const FamilyCounter& counter, const std::string& what) {
  if (what == "dmv") {
    const Integer d = dmv(counter);
    return {{"dmv", integer_json(d)}};
  }
  if (what == "mixed-ehrhart") {
    const RationalPolynomial me = mixed_ehrhart(counter);
    const Integer d = dmv(counter);
    return {{"mixed_ehrhart", polynomial_json(me)}, {"dmv", integer_json(d)}};
  }
  const GenusReport r = genus_report(counter);
  return {{"dmv", integer_json(r.dmv)},
          {"mixed_ehrhart", polynomial_json(r.mixed_ehrhart)},
          {"motivic_genus", integer_json(r.motivic_genus)},
          {"khovanskii_me", integer_json(r.khovanskii_me)},
          {"kgenus_interior_sum", integer_json(r.kgenus_interior_sum)},
          {"signed_khovanskii_me", integer_json(r.signed_khovanskii_me)}};
}

json chiy_json(const FamilyCounter& counter, const Options& opt) {
  if (opt.pipeline != "closed" && opt.pipeline != "cayley" && opt.pipeline != "both")
    throw InputError("--pipeline must be closed, cayley or both");
  const long n = static_cast<long>(counter.ambient_dim());
  long first = 0;
  long last = n;
  if (!opt.all && opt.p >= 0) first = last = opt.p;
  json rows = json::array();
  bool agree_all = true;
  for (long p = first; p <= last; ++p) {
    json row = {{"p", p}};
    if (opt.pipeline == "closed" || opt.pipeline == "both") row["closed"] = integer_json(chi_y_closed(counter, p));
    if (opt.pipeline == "cayley" || opt.pipeline == "both") row["cayley"] = integer_json(chi_y_cayley(counter, p));
    if (opt.pipeline == "both") {
      const bool agree = row["closed"] == row["cayley"];
      row["agree"] = agree;
      agree_all = agree_all && agree;
    }
    rows.push_back(std::move(row));
  }
  json out = {{"n", n}, {"k", counter.size()}, {"pipeline", opt.pipeline}, {"rows", std::move(rows)}};
  if (opt.pipeline == "both") out["agree"] = agree_all;
  if (!agree_all) {
    std::cout << out.dump(opt.pretty ? 2 : -1) << "\n";
    throw PipelineMismatch("chi_y pipelines disagree");
  }
  return out;
}

IndexSet parse_subset(const std::string& text, std::size_t k) {
  IndexSet set;
  if (text.empty()) {
    for (std::size_t i = 0; i < k; ++i) set.push_back(i);
    return set;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    long v = 0;
    try {
      v = std::stol(item);
    } catch (const std::exception&) {
      throw InputError("--subset expects comma-separated indices, got " + text);
    }
    if (v < 1 || static_cast<std::size_t>(v) > k) throw InputError("--subset index out of range: " + item);
    set.push_back(static_cast<std::size_t>(v - 1));
  }
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

json cayley_json(const PolytopeFamily& family, const Options& opt, const EnumOptions& opts) {
  const IndexSet subset = parse_subset(opt.subset, family.size());
  const LatticePolytope cay = cayley(family, subset);
  json idx = json::array();
  for (auto i : subset) idx.push_back(i + 1);
  json out = polytope_header("C", cay);
  out["subset"] = std::move(idx);
  out["ambient_dim"] = cay.ambient_dim();
  if (!subset.empty()) {
    json counts = json::array();
    for (long j = 0; j <= 3; ++j) counts.push_back(integer_json(ehr_cayley(family, subset, j, opts)));
    out["ehrhart_counts"] = std::move(counts);
  }
  return out;
}

json mixed_volume_json(const FamilyCounter& counter) {
  const Integer d = dmv(counter);
  const Integer mv = normalized_mixed_volume(counter);
  return {{"dmv", integer_json(d)}, {"normalized_mixed_volume", integer_json(mv)}};
}

int run(const std::string& command, Options& opt) {
  const EnumOptions enum_opts{opt.max_enum};
  json out;
  if (command == "verify") {
    opt.verify.enum_options = enum_opts;
    opt.verify.checks.clear();
    std::stringstream ss(opt.checks);
    std::string item;
    while (std::getline(ss, item, ','))
      if (!item.empty()) opt.verify.checks.push_back(item);
    const VerifyReport report = run_verify(opt.verify);
    std::cout << report.to_json(opt.verify).dump(opt.pretty ? 2 : -1) << "\n";
    for (const auto& [name, t] : report.tallies)
      std::cerr << name << ": " << t.passed << " passed, " << t.failed << " failed, " << t.skipped
                << " skipped\n";
    std::cerr << "kernel: " << kernels::isa_name(kernels::selected_isa()) << "\n";
    return report.all_passed() ? 0 : kExitVerifyFailed;
  }

  const FamilySpec spec = parse_family_spec(read_input(opt.input));
  const PolytopeFamily family = build_family(spec);
  const FamilyCounter counter(family, enum_opts);

  if (command == "count" || command == "ehrhart" || command == "hstar") {
    out = per_polytope(spec, family, enum_opts, command);
  } else if (command == "dmv" || command == "mixed-ehrhart" || command == "genus") {
    out = genus_json(counter, command);
  } else if (command == "chiy") {
    out = chiy_json(counter, opt);
  } else if (command == "cayley") {
    out = cayley_json(family, opt, enum_opts);
  } else if (command == "mixed-volume") {
    out = mixed_volume_json(counter);
  }
  std::cout << out.dump(opt.pretty ? 2 : -1) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice-polytope invariants: Ehrhart data, discrete mixed volumes, chi_y genera"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Family JSON file (default: stdin)");
    sub->add_flag("--pretty", opt.pretty, "Indent the JSON output");
    sub->add_option("--max-enum", opt.max_enum, "Candidate-point budget per enumeration");
  };

  for (const char* name : {"count", "ehrhart", "hstar", "dmv", "mixed-ehrhart", "genus", "mixed-volume"})
    add_common(app.add_subcommand(name, std::string("Compute ") + name));

  CLI::App* chiy = app.add_subcommand("chiy", "chi_y-characteristics e^{p,+} of the complete intersection");
  add_common(chiy);
  chiy->add_option("--p", opt.p, "Single p")->check(CLI::NonNegativeNumber);
  chiy->add_flag("--all", opt.all, "All p = 0..n (default)");
  chiy->add_option("--pipeline", opt.pipeline, "closed, cayley or both");

  CLI::App* cay = app.add_subcommand("cayley", "Cayley polytope of a subfamily");
  add_common(cay);
  cay->add_option("--subset", opt.subset, "Comma-separated 1-based member indices (default: all)");

  CLI::App* verify = app.add_subcommand("verify", "Seeded randomized verification harness");
  verify->add_flag("--pretty", opt.pretty, "Indent the JSON output");
  verify->add_option("--max-enum", opt.max_enum, "Candidate-point budget per enumeration");
  verify->add_option("--seed", opt.verify.seed, "PRNG seed");
  verify->add_option("--cases", opt.verify.cases, "Number of random families");
  verify->add_option("--max-dim", opt.verify.max_dim, "Largest ambient dimension");
  verify->add_option("--max-k", opt.verify.max_k, "Largest family size");
  verify->add_option("--coord-bound", opt.verify.coord_bound, "Coordinates drawn from [-b, b]");
  verify->add_option("--max-vertices", opt.verify.max_vertices, "Largest number of points per polytope");
  verify->add_option("--checks", opt.checks, "Comma-separated suites (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(command, opt);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const PipelineMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPipelineMismatch;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
