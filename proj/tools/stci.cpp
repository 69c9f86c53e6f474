// Command-line driver: runs the named example scenarios or user files and
// emits human-readable or JSON report bundles.
//
// Exit status: 0 all verdicts true, 1 some false, 2 some inconclusive,
// 3 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stci/fixtures.hpp"
#include "stci/groebner.hpp"
#include "stci/schmitt_vogel.hpp"
#include "stci/scroll.hpp"
#include "stci/varieties.hpp"

namespace {

using namespace stci;

struct RunConfig {
  std::string field = "q";  // "q" or "gf:<p>"
  std::string order = "degrevlex";
  BuchbergerCaps caps;
  std::uint32_t power_cap = 16;
  std::size_t products_cap = 10000;
  std::uint64_t points_budget = 10000000;
  bool json = false;
  std::uint64_t seed = 20240101;  // reserved for randomized suites
  std::vector<std::string> checks;

  bool wants(const std::string& id) const {
    return checks.empty() ||
           std::find(checks.begin(), checks.end(), id) != checks.end();
  }
  MonomialOrder monomial_order() const {
    if (order == "lex") return MonomialOrder::lex();
    if (order == "degrevlex") return MonomialOrder::degrevlex();
    throw domain_error("unknown order: " + order);
  }
  std::optional<std::int64_t> gf_prime() const {
    if (field == "q") return std::nullopt;
    if (field.rfind("gf:", 0) == 0) return std::stoll(field.substr(3));
    throw domain_error("unknown field: " + field + " (use q or gf:<p>)");
  }
};

struct Bundle {
  std::vector<VerificationReport> reports;
  std::vector<std::string> lines;  // human-readable output accumulated in order

  void add(VerificationReport rep) {
    lines.push_back("[" + to_string(rep.verdict) + "] " + rep.claim + " (field " +
                    rep.field + ", " + std::to_string(rep.stats.millis) + " ms)");
    reports.push_back(std::move(rep));
  }
  void note(std::string line) { lines.push_back(std::move(line)); }

  int exit_status() const {
    bool any_false = false, any_inconclusive = false;
    for (const auto& r : reports) {
      if (r.verdict == Verdict::False) any_false = true;
      if (r.verdict == Verdict::Inconclusive) any_inconclusive = true;
    }
    if (any_false) return 1;
    if (any_inconclusive) return 2;
    return 0;
  }

  int finish(const RunConfig& cfg) const {
    if (cfg.json) {
      nlohmann::json reps = nlohmann::json::array();
      for (const auto& r : reports) reps.push_back(r.to_json());
      nlohmann::json out{{"schema", "stci.bundle/1"},
                         {"reports", std::move(reps)},
                         {"exit_status", exit_status()}};
      std::cout << out.dump(2) << "\n";
    } else {
      for (const auto& l : lines) std::cout << l << "\n";
    }
    return exit_status();
  }
};

// Radical equality with the modular pre-check: over GF(32003) first, then the
// certified run over the requested field (Q by default).
void radical_equal_checked(Bundle& bundle, const IdealGens<Rational>& A,
                           const IdealGens<Rational>& B, const RunConfig& cfg) {
  auto p = cfg.gf_prime();
  if (!p) {
    PrimeFieldSpec pre(32003);
    bundle.add(radical_equal(mod_p(A, pre), mod_p(B, pre), cfg.caps));
    bundle.add(radical_equal(A, B, cfg.caps));
  } else {
    PrimeFieldSpec gf(*p);
    bundle.add(radical_equal(mod_p(A, gf), mod_p(B, gf), cfg.caps));
  }
}

void points_check(Bundle& bundle, const IdealGens<Rational>& A,
                  const IdealGens<Rational>& B, const RunConfig& cfg) {
  for (std::int64_t p : {2, 3})
    bundle.add(same_vanishing_set(A, B, p, cfg.points_budget));
}

void print_gens(Bundle& bundle, const IdealGens<Rational>& I) {
  bundle.note(I.label + " (" + std::to_string(I.gens.size()) + " generators):");
  for (const auto& g : I.gens) bundle.note("  " + canonical_string(g));
}

void membership_check(Bundle& bundle, const IdealGens<Rational>& sys,
                      const IdealGens<Rational>& J, const RunConfig& cfg) {
  VerificationReport rep;
  rep.claim = "every " + sys.label + " polynomial lies in " + J.label;
  rep.field = "Q";
  rep.order = J.ring->order.name();
  rep.verdict = Verdict::True;
  GroebnerBasis<Rational> gb = buchberger(J, cfg.caps);
  rep.stats = gb.stats;
  for (const auto& f : sys.gens) {
    bool in = ideal_contains(gb, f);
    rep.per_generator.push_back(
        {canonical_string(f), in ? "in-ideal" : "not-in-ideal", std::nullopt});
    if (!in) rep.verdict = Verdict::False;
  }
  bundle.add(std::move(rep));
}

void min_powers_check(Bundle& bundle, const IdealGens<Rational>& J,
                      const IdealGens<Rational>& sys, const RunConfig& cfg,
                      std::uint32_t cap = 13) {
  VerificationReport rep;
  rep.claim = "every generator of " + J.label + " has a power <= " +
              std::to_string(cap) + " in " + sys.label;
  rep.field = "Q";
  rep.order = J.ring->order.name();
  rep.verdict = Verdict::True;
  for (const auto& g : J.gens) {
    auto e = min_power_in_ideal(g, sys, cap, cfg.caps);
    VerificationReport::Entry entry;
    entry.generator = canonical_string(g);
    if (e) {
      entry.result = "power-found";
      entry.power = static_cast<int>(*e);
    } else {
      entry.result = "no power within cap";
      rep.verdict = Verdict::False;
    }
    rep.per_generator.push_back(std::move(entry));
  }
  bundle.add(std::move(rep));
}

void sv_check(Bundle& bundle, const BarredMatrix& M, const RunConfig& cfg) {
  if (M.block_count() < 2) {
    bundle.note("(single block: no Schmitt-Vogel layers)");
    return;
  }
  SVSystem<Rational> S(M.ring, sv_partition(M));
  bundle.add(verify_conditions(S, cfg.power_cap));
}

int run_example(const std::string& name, std::size_t scroll_width, RunConfig cfg) {
  Bundle bundle;
  MonomialOrder ord = cfg.monomial_order();

  if (name == "ex1" || name == "ex3") {
    BarredMatrix M = fixtures::ex1_matrix(ord);
    IdealGens<Rational> J = ideal_J(M);
    IdealGens<Rational> sys = stci_system(M);
    if (cfg.wants("generators")) {
      print_gens(bundle, J);
      print_gens(bundle, sys);
    }
    if (cfg.wants("membership")) membership_check(bundle, sys, J, cfg);
    if (cfg.wants("sv")) sv_check(bundle, M, cfg);
    if (cfg.wants("radical-equal")) radical_equal_checked(bundle, J, sys, cfg);
    if (cfg.wants("min-powers")) min_powers_check(bundle, J, sys, cfg);
    if (cfg.wants("points")) points_check(bundle, J, sys, cfg);
  } else if (name == "ex4") {
    BarredMatrix M = fixtures::ex4_matrix(ord);
    IdealGens<Rational> J = ideal_J(M, "J_T");
    IdealGens<Rational> sys = stci_system(M);
    if (cfg.wants("generators")) {
      print_gens(bundle, J);
      print_gens(bundle, sys);
    }
    if (cfg.wants("power-containment"))
      bundle.add(ideal_power_contained(J, sys, 2, cfg.products_cap, cfg.caps));
    if (cfg.wants("radical-equal")) radical_equal_checked(bundle, J, sys, cfg);
    if (cfg.wants("points")) points_check(bundle, J, sys, cfg);
  } else if (name == "ex4prime") {
    BarredMatrix M = fixtures::ex4prime_matrix(ord);
    IdealGens<Rational> J = ideal_J(M);
    IdealGens<Rational> sys = fixtures::ex4prime_system(M.ring);
    if (cfg.wants("generators")) {
      print_gens(bundle, J);
      print_gens(bundle, sys);
    }
    if (cfg.wants("certificates")) {
      RationalField Q;
      const auto& P1 = sys.gens[0];
      const auto& P2 = sys.gens[1];
      auto ring = M.ring;
      bool c1 = parse_polynomial("X1*X5", ring, Q).pow(2) ==
                parse_polynomial("X1*X5 - X1*X2*X4", ring, Q) * P1 +
                    parse_polynomial("X1*X2^2", ring, Q) * P2;
      bool c2 = parse_polynomial("X3*X5", ring, Q).pow(2) ==
                parse_polynomial("X3*X5 + X2*X3*X4", ring, Q) * P2 -
                    parse_polynomial("X3*X4^2", ring, Q) * P1;
      VerificationReport rep;
      rep.claim = "certificate identities for (X1*X5)^2 and (X3*X5)^2";
      rep.field = "Q";
      rep.order = ring->order.name();
      rep.verdict = (c1 && c2) ? Verdict::True : Verdict::False;
      rep.per_generator.push_back({"(X1*X5)^2", c1 ? "identity-holds" : "identity-fails", std::nullopt});
      rep.per_generator.push_back({"(X3*X5)^2", c2 ? "identity-holds" : "identity-fails", std::nullopt});
      bundle.add(std::move(rep));
    }
    if (cfg.wants("radical-equal")) radical_equal_checked(bundle, J, sys, cfg);
    if (cfg.wants("points")) points_check(bundle, J, sys, cfg);
  } else if (name == "ex5") {
    BarredMatrix M = fixtures::ex5_matrix(ord);
    IdealGens<Rational> J = ideal_J(M, "J5");
    IdealGens<Rational> sys = fixtures::ex5_system(M.ring);
    if (cfg.wants("generators")) {
      print_gens(bundle, J);
      print_gens(bundle, sys);
    }
    if (cfg.wants("radical-equal")) radical_equal_checked(bundle, J, sys, cfg);
    if (cfg.wants("points")) points_check(bundle, J, sys, cfg);
  } else if (name == "scroll-c") {
    BarredMatrix M = fixtures::single_scroll_matrix(scroll_width, ord);
    IdealGens<Rational> I = minors(M);
    I.label = "scroll-minors(c=" + std::to_string(scroll_width) + ")";
    IdealGens<Rational> sys = stci_system(M);
    if (cfg.wants("generators")) {
      print_gens(bundle, I);
      print_gens(bundle, sys);
    }
    if (cfg.wants("radical-equal")) radical_equal_checked(bundle, I, sys, cfg);
    if (cfg.wants("points")) points_check(bundle, I, sys, cfg);
  } else {
    throw domain_error("unknown example: " + name);
  }
  return bundle.finish(cfg);
}

int run_file(const std::string& path, RunConfig cfg) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  BarredMatrix M = matrix_from_json(j, cfg.monomial_order());

  Bundle bundle;
  VerificationReport v = validate(M);
  bundle.add(v);
  if (!v.ok()) return bundle.finish(cfg);

  IdealGens<Rational> J = ideal_J(M);
  if (cfg.wants("generators")) print_gens(bundle, J);
  if (!M.simple()) {
    bundle.note("(matrix is not simple: no equation system is derived)");
    return bundle.finish(cfg);
  }
  IdealGens<Rational> sys = stci_system(M);
  if (cfg.wants("generators")) print_gens(bundle, sys);
  if (cfg.wants("membership")) membership_check(bundle, sys, J, cfg);
  if (cfg.wants("sv")) sv_check(bundle, M, cfg);
  if (cfg.wants("radical-equal")) radical_equal_checked(bundle, J, sys, cfg);
  if (cfg.wants("points")) {
    std::uint64_t needed = 1;
    bool fits = true;
    for (std::size_t i = 0; i < M.ring->nvars() && fits; ++i) {
      if (needed > cfg.points_budget / 3) fits = false;
      needed *= 3;
    }
    if (fits)
      points_check(bundle, J, sys, cfg);
    else
      bundle.note("(point enumeration skipped: exceeds budget)");
  }
  return bundle.finish(cfg);
}

int run_sv(const std::string& path, RunConfig cfg) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  Bundle bundle;
  RationalField Q;
  SVSystem<Rational> S = sv_system_from_json(j, Q, cfg.monomial_order());
  bundle.add(verify_conditions(S, cfg.power_cap));
  bundle.note("layer sums:");
  for (const auto& q : build_sums(S)) bundle.note("  " + canonical_string(q));
  auto p = cfg.gf_prime();
  if (!p) {
    bundle.add(check_radical_claim(S, cfg.caps));
  } else {
    PrimeFieldSpec gf(*p);
    std::vector<std::vector<Polynomial<Fp>>> layers;
    for (const auto& l : S.layers) {
      std::vector<Polynomial<Fp>> lp;
      for (const auto& f : l) lp.push_back(to_prime_field(f, gf));
      layers.push_back(std::move(lp));
    }
    bundle.add(check_radical_claim(SVSystem<Fp>(S.ring, std::move(layers), S.exponents),
                                   cfg.caps));
  }
  return bundle.finish(cfg);
}

int run_points(const std::string& path, std::int64_t p, const std::string& out_path,
               RunConfig cfg) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::string line;
  std::vector<std::string> vars;
  std::vector<std::string> poly_lines;
  while (std::getline(in, line)) {
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    if (vars.empty()) {
      std::istringstream vs(trimmed);
      std::string name;
      while (vs >> name) {
        if (!name.empty() && name.back() == ',') name.pop_back();
        vars.push_back(name);
      }
    } else {
      poly_lines.push_back(trimmed);
    }
  }
  if (vars.empty()) throw parse_error("no variable line in " + path);
  RingPtr ring = make_ring(VariableSet(vars), cfg.monomial_order());
  RationalField Q;
  std::vector<Polynomial<Rational>> gens;
  for (const auto& s : poly_lines) gens.push_back(parse_polynomial(s, ring, Q));
  IdealGens<Rational> I(ring, std::move(gens), path);

  PointSet ps = enumerate_points(I, p, cfg.points_budget);
  std::cout << ps.points.size() << " common zeros in GF(" << p << ")^" << vars.size()
            << "\n";
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    dump_points(ps, out);
  } else if (!cfg.json) {
    dump_points(ps, std::cout);
  }
  return 0;
}

int run_toric(const std::string& path, RunConfig cfg) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  MonomialParametrization P = parametrization_from_json(j);
  Bundle bundle;
  VerificationReport rep;
  rep.claim = "binomials vanish under the parametrization and are homogeneous";
  rep.field = "Z";
  rep.verdict = Verdict::True;
  for (const auto& s : j.at("binomials")) {
    CurveBinomial b = parse_binomial(s.get<std::string>(), P);
    bool toric = binomial_in_toric(P, b);
    bool homog = homogeneity_check(P, b);
    rep.per_generator.push_back(
        {s.get<std::string>(),
         std::string(toric ? "in-toric" : "not-in-toric") + ", " +
             (homog ? "homogeneous" : "inhomogeneous"),
         std::nullopt});
    if (!toric || !homog) rep.verdict = Verdict::False;
  }
  bundle.add(std::move(rep));
  return bundle.finish(cfg);
}

const std::set<std::string> kKnownChecks = {
    "generators", "membership",        "radical-equal", "min-powers",
    "sv",         "power-containment", "certificates",  "points"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification toolkit for barred-matrix ideals and their equation systems"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--field", cfg.field, "coefficient field: q or gf:<p>");
  app.add_option("--order", cfg.order, "monomial order: degrevlex or lex");
  app.add_option("--cap-spairs", cfg.caps.max_spairs, "S-pair processing cap");
  app.add_option("--cap-degree", cfg.caps.max_degree, "degree bound");
  app.add_option("--cap-power", cfg.power_cap, "power search cap");
  app.add_option("--cap-products", cfg.products_cap, "product enumeration cap");
  app.add_option("--points-budget", cfg.points_budget, "point enumeration budget");
  app.add_flag("--json", cfg.json, "emit a JSON report bundle");
  app.add_option("--seed", cfg.seed, "seed for randomized suites");
  app.add_option("--check", cfg.checks, "run only the named checks (repeatable)");

  auto* ex = app.add_subcommand("example", "run a named example scenario");
  std::string ex_name;
  std::size_t scroll_width = 3;
  ex->add_option("name", ex_name, "ex1|ex3|ex4|ex4prime|ex5|scroll-c")->required();
  ex->add_option("-c,--width", scroll_width, "scroll width for scroll-c");

  auto* vf = app.add_subcommand("verify", "verify a barred-matrix JSON file");
  std::string vf_path;
  vf->add_option("file", vf_path, "matrix JSON file")->required();

  auto* sv = app.add_subcommand("sv", "check a layered system file");
  std::string sv_path;
  sv->add_option("file", sv_path, "SV system JSON file")->required();

  auto* pt = app.add_subcommand("points", "enumerate common zeros over GF(p)");
  std::string pt_path, pt_out;
  std::int64_t pt_prime = 2;
  pt->add_option("file", pt_path, "ideal text file (variables line, then polynomials)")
      ->required();
  pt->add_option("-p,--prime", pt_prime, "field characteristic")->required();
  pt->add_option("-o,--out", pt_out, "write points to file");

  auto* tc = app.add_subcommand("toric", "check binomials against a parametrization");
  std::string tc_path;
  tc->add_option("file", tc_path, "curve fixture JSON file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& c : cfg.checks)
      if (!kKnownChecks.count(c)) throw domain_error("unknown check identifier: " + c);

    if (ex->parsed()) return run_example(ex_name, scroll_width, cfg);
    if (vf->parsed()) return run_file(vf_path, cfg);
    if (sv->parsed()) return run_sv(sv_path, cfg);
    if (pt->parsed()) return run_points(pt_path, pt_prime, pt_out, cfg);
    if (tc->parsed()) return run_toric(tc_path, cfg);
  } catch (const cap_error& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
