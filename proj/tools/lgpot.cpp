#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lgpot/ehx.hpp"
#include "lgpot/minrep.hpp"
#include "lgpot/pipeline.hpp"

using namespace lgpot;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitInconsistency = 3;

struct Options {
  std::string space;
  int k = 0;
  int n = 0;
  int dim = 0;
  std::string format;
  std::vector<std::string> checks;
  int trials = 50;
  std::uint64_t seed = 0;
  std::string word;
  std::string output;
};

CominusculeSpace resolve_space(const Options& opt) {
  const std::string& s = opt.space;
  if (s == "gr" || s == "grassmannian") {
    if (opt.k == 0 || opt.n == 0)
      throw InvalidParameters("--space gr needs --k and --n");
    if (opt.n > 12) throw InvalidParameters("gr supports n <= 12");
    return CominusculeSpace::grassmannian(opt.k, opt.n);
  }
  if (s == "quadric" || s == "q") {
    if (opt.dim == 0) throw InvalidParameters("--space quadric needs --dim");
    if (opt.dim > 20) throw InvalidParameters("quadric supports dim <= 20");
    return CominusculeSpace::quadric(opt.dim);
  }
  if (s == "lg" || s == "lagrangian") {
    if (opt.n == 0) throw InvalidParameters("--space lg needs --n");
    if (opt.n > 8) throw InvalidParameters("lg supports n <= 8");
    return CominusculeSpace::lagrangian_grassmannian(opt.n);
  }
  if (s == "og" || s == "orthogonal") {
    if (opt.n == 0) throw InvalidParameters("--space og needs --n");
    if (opt.n > 8) throw InvalidParameters("og supports n <= 8");
    return CominusculeSpace::orthogonal_grassmannian(opt.n);
  }
  if (s == "e6" || s == "cayley") return CominusculeSpace::cayley_plane();
  if (s == "e7" || s == "freudenthal") return CominusculeSpace::freudenthal();
  throw InvalidParameters("unknown space selector '" + s + "'");
}

std::optional<WeylWord> parse_word(const std::string& text) {
  if (text.empty()) return std::nullopt;
  WeylWord w;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw InvalidParameters("bad --word entry: " + tok);
    w.push_back(v);
  }
  if (w.empty()) throw InvalidParameters("--word is empty");
  return w;
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw InvalidParameters("cannot open " + opt.output);
  out << text << "\n";
}

int run_potential(const Options& opt) {
  const SpacePotential sp =
      compute_potential(resolve_space(opt), parse_word(opt.word));

  std::string fmt = opt.format;
  if (fmt.empty()) {
    const char* env = std::getenv("LGPOT_FORMAT");
    fmt = env ? env : "text";
  }
  if (fmt == "text") emit(opt, render(sp.potential, RenderFormat::Text));
  else if (fmt == "latex") emit(opt, render(sp.potential, RenderFormat::Latex));
  else if (fmt == "json") emit(opt, render(sp.potential, RenderFormat::Json));
  else if (fmt == "dot") emit(opt, quiver_to_dot(sp.quiver));
  else throw InvalidParameters("unknown format '" + fmt + "'");
  return 0;
}

nlohmann::json monomial_diff(const std::vector<std::vector<int>>& expect,
                             const std::vector<std::vector<int>>& actual) {
  std::set<std::vector<int>> e(expect.begin(), expect.end());
  std::set<std::vector<int>> a(actual.begin(), actual.end());
  std::vector<std::vector<int>> missing, extra;
  for (const auto& m : e)
    if (!a.count(m)) missing.push_back(m);
  for (const auto& m : a)
    if (!e.count(m)) extra.push_back(m);
  return {{"missing", missing}, {"extra", extra}};
}

nlohmann::json check_oracle(const SpacePotential& sp) {
  const RepGraph rep = build_rep(sp.dual, sp.data.k);
  const int ell = static_cast<int>(sp.word.size());
  const std::int64_t num_sign = ell % 2 == 0 ? -1 : +1; // (-1)^{ell+1}
  const std::int64_t den_sign = ell % 2 == 0 ? +1 : -1; // (-1)^{ell}

  IndexPoly expect_num;
  for (const auto& mono : sp.potential.numerator) expect_num.add(mono, num_sign);
  IndexPoly expect_den;
  std::vector<int> full(ell);
  for (int i = 0; i < ell; ++i) full[i] = i + 1;
  expect_den.add(full, den_sign);

  const IndexPoly got_num = oracle_numerator(rep, sp.word, sp.wprime.wPprime_word);
  const IndexPoly got_den = oracle_denominator(rep, sp.word);

  nlohmann::json j;
  j["name"] = "oracle";
  j["monomials"] = sp.potential.numerator.size();
  j["numerator_sign"] = num_sign;
  j["pass"] = got_num == expect_num && got_den == expect_den;
  if (got_num != expect_num)
    j["numerator_diff"] = {{"expected", expect_num.str()},
                           {"actual", got_num.str()}};
  if (got_den != expect_den)
    j["denominator_diff"] = {{"expected", expect_den.str()},
                             {"actual", got_den.str()}};
  return j;
}

nlohmann::json check_moves(const SpacePotential& sp) {
  const auto brute = enumerate_subexpressions_bruteforce(
      sp.dual, sp.word, sp.wprime.wprime, sp.wprime.ellprime);
  nlohmann::json j;
  j["name"] = "moves";
  j["moves_count"] = sp.subsets.size();
  j["bruteforce_count"] = brute.size();
  j["pass"] = sp.subsets == brute;
  if (sp.subsets != brute) j["diff"] = monomial_diff(brute, sp.subsets);
  return j;
}

nlohmann::json check_ehx(const Options& opt, const SpacePotential& sp) {
  if (sp.space.family != Family::Grassmannian)
    throw InvalidParameters("--check ehx only applies to --space gr");
  const PullbackReport r =
      phi_pullback_check(sp.space.k, sp.space.n, opt.trials, opt.seed);
  nlohmann::json j = nlohmann::json::parse(report_to_json(r));
  j["name"] = "ehx";
  j["seed"] = opt.seed;
  j["pass"] = r.all_equal();
  return j;
}

int run_checks(const Options& opt) {
  const SpacePotential sp =
      compute_potential(resolve_space(opt), parse_word(opt.word));

  nlohmann::json report;
  report["space"] = sp.space.name();
  auto checks = nlohmann::json::array();
  bool all_pass = true;
  for (const std::string& name : opt.checks) {
    nlohmann::json c;
    if (name == "oracle") c = check_oracle(sp);
    else if (name == "moves") c = check_moves(sp);
    else if (name == "ehx") c = check_ehx(opt, sp);
    else throw InvalidParameters("unknown check '" + name + "'");
    all_pass = all_pass && c["pass"].get<bool>();
    checks.push_back(std::move(c));
  }
  report["checks"] = checks;
  report["pass"] = all_pass;
  emit(opt, report.dump());
  return all_pass ? 0 : kExitCheckFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laurent polynomial Landau-Ginzburg potentials of cominuscule "
               "homogeneous spaces"};
  Options opt;
  app.add_option("--space", opt.space,
                 "space selector: gr, quadric, lg, og, e6, e7")
      ->required();
  app.add_option("--k", opt.k, "Grassmannian subspace dimension");
  app.add_option("--n", opt.n, "family rank parameter");
  app.add_option("--dim", opt.dim, "quadric dimension");
  app.add_option("--format", opt.format,
                 "output format: text, latex, json, dot (default text or "
                 "$LGPOT_FORMAT)");
  app.add_option("--check", opt.checks,
                 "run a verification suite instead: oracle, moves, ehx");
  app.add_option("--trials", opt.trials, "ehx sampling trials");
  app.add_option("--seed", opt.seed, "ehx RNG seed");
  app.add_option("--word", opt.word,
                 "comma-separated override for the reduced word of w^P");
  app.add_option("--output", opt.output, "write output to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadArguments;
  }

  try {
    return opt.checks.empty() ? run_potential(opt) : run_checks(opt);
  } catch (const InconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInconsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArguments;
  }
}
