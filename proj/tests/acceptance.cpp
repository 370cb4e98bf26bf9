// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Expected monomial families are frozen from the worked examples; every
// tolerance is exact.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "lgpot/ehx.hpp"
#include "lgpot/minrep.hpp"
#include "lgpot/pipeline.hpp"

using namespace lgpot;

namespace {

using Monomials = std::vector<std::vector<int>>;

// The 78 index sequences of the Freudenthal quantum term, lexicographic.
const Monomials kFreudenthal = {
    {1, 2, 3, 4, 5, 6, 7, 8, 9, 10},   {1, 2, 3, 4, 5, 6, 7, 8, 9, 27},
    {1, 2, 3, 4, 5, 6, 7, 8, 16, 27},  {1, 2, 3, 4, 5, 6, 7, 8, 26, 27},
    {1, 2, 3, 4, 5, 6, 7, 15, 16, 27}, {1, 2, 3, 4, 5, 6, 7, 15, 26, 27},
    {1, 2, 3, 4, 5, 6, 7, 18, 26, 27}, {1, 2, 3, 4, 5, 6, 7, 25, 26, 27},
    {1, 2, 3, 4, 5, 6, 13, 15, 16, 27},
    {1, 2, 3, 4, 5, 6, 13, 15, 26, 27},
    {1, 2, 3, 4, 5, 6, 13, 18, 26, 27},
    {1, 2, 3, 4, 5, 6, 13, 25, 26, 27},
    {1, 2, 3, 4, 5, 6, 17, 18, 26, 27},
    {1, 2, 3, 4, 5, 6, 17, 25, 26, 27},
    {1, 2, 3, 4, 5, 6, 20, 25, 26, 27},
    {1, 2, 3, 4, 5, 6, 24, 25, 26, 27},
    {1, 2, 3, 4, 5, 12, 13, 15, 16, 27},
    {1, 2, 3, 4, 5, 12, 13, 15, 26, 27},
    {1, 2, 3, 4, 5, 12, 13, 18, 26, 27},
    {1, 2, 3, 4, 5, 12, 13, 25, 26, 27},
    {1, 2, 3, 4, 5, 12, 17, 18, 26, 27},
    {1, 2, 3, 4, 5, 12, 17, 25, 26, 27},
    {1, 2, 3, 4, 5, 12, 20, 25, 26, 27},
    {1, 2, 3, 4, 5, 12, 24, 25, 26, 27},
    {1, 2, 3, 4, 5, 19, 20, 25, 26, 27},
    {1, 2, 3, 4, 5, 19, 24, 25, 26, 27},
    {1, 2, 3, 4, 5, 23, 24, 25, 26, 27},
    {1, 2, 3, 4, 6, 14, 17, 18, 26, 27},
    {1, 2, 3, 4, 6, 14, 17, 25, 26, 27},
    {1, 2, 3, 4, 6, 14, 20, 25, 26, 27},
    {1, 2, 3, 4, 6, 14, 24, 25, 26, 27},
    {1, 2, 3, 4, 6, 21, 24, 25, 26, 27},
    {1, 2, 3, 4, 12, 14, 17, 18, 26, 27},
    {1, 2, 3, 4, 12, 14, 17, 25, 26, 27},
    {1, 2, 3, 4, 12, 14, 20, 25, 26, 27},
    {1, 2, 3, 4, 12, 14, 24, 25, 26, 27},
    {1, 2, 3, 4, 12, 21, 24, 25, 26, 27},
    {1, 2, 3, 4, 14, 19, 20, 25, 26, 27},
    {1, 2, 3, 4, 14, 19, 24, 25, 26, 27},
    {1, 2, 3, 4, 14, 23, 24, 25, 26, 27},
    {1, 2, 3, 4, 19, 21, 24, 25, 26, 27},
    {1, 2, 3, 4, 21, 23, 24, 25, 26, 27},
    {1, 2, 3, 7, 12, 14, 17, 18, 26, 27},
    {1, 2, 3, 7, 12, 14, 17, 25, 26, 27},
    {1, 2, 3, 7, 12, 14, 20, 25, 26, 27},
    {1, 2, 3, 7, 12, 14, 24, 25, 26, 27},
    {1, 2, 3, 7, 12, 21, 24, 25, 26, 27},
    {1, 2, 3, 7, 14, 19, 20, 25, 26, 27},
    {1, 2, 3, 7, 14, 19, 24, 25, 26, 27},
    {1, 2, 3, 7, 14, 23, 24, 25, 26, 27},
    {1, 2, 3, 7, 19, 21, 24, 25, 26, 27},
    {1, 2, 3, 7, 21, 23, 24, 25, 26, 27},
    {1, 2, 3, 13, 14, 19, 20, 25, 26, 27},
    {1, 2, 3, 13, 14, 19, 24, 25, 26, 27},
    {1, 2, 3, 13, 14, 23, 24, 25, 26, 27},
    {1, 2, 3, 13, 19, 21, 24, 25, 26, 27},
    {1, 2, 3, 13, 21, 23, 24, 25, 26, 27},
    {1, 2, 3, 17, 19, 21, 24, 25, 26, 27},
    {1, 2, 3, 17, 21, 23, 24, 25, 26, 27},
    {1, 2, 3, 20, 21, 23, 24, 25, 26, 27},
    {1, 2, 8, 13, 14, 19, 20, 25, 26, 27},
    {1, 2, 8, 13, 14, 19, 24, 25, 26, 27},
    {1, 2, 8, 13, 14, 23, 24, 25, 26, 27},
    {1, 2, 8, 13, 19, 21, 24, 25, 26, 27},
    {1, 2, 8, 13, 21, 23, 24, 25, 26, 27},
    {1, 2, 8, 17, 19, 21, 24, 25, 26, 27},
    {1, 2, 8, 17, 21, 23, 24, 25, 26, 27},
    {1, 2, 8, 20, 21, 23, 24, 25, 26, 27},
    {1, 2, 15, 17, 19, 21, 24, 25, 26, 27},
    {1, 2, 15, 17, 21, 23, 24, 25, 26, 27},
    {1, 2, 15, 20, 21, 23, 24, 25, 26, 27},
    {1, 2, 18, 20, 21, 23, 24, 25, 26, 27},
    {1, 9, 15, 17, 19, 21, 24, 25, 26, 27},
    {1, 9, 15, 17, 21, 23, 24, 25, 26, 27},
    {1, 9, 15, 20, 21, 23, 24, 25, 26, 27},
    {1, 9, 18, 20, 21, 23, 24, 25, 26, 27},
    {1, 16, 18, 20, 21, 23, 24, 25, 26, 27},
    {10, 16, 18, 20, 21, 23, 24, 25, 26, 27},
};

const Monomials kGr47 = {
    {1, 2, 3, 5, 6, 7},      {1, 2, 3, 5, 6, 12},   {1, 2, 5, 6, 8, 12},
    {1, 2, 3, 5, 11, 12},    {1, 2, 5, 8, 11, 12},  {1, 5, 7, 8, 11, 12},
    {1, 2, 3, 10, 11, 12},   {1, 2, 8, 10, 11, 12}, {1, 7, 8, 10, 11, 12},
    {6, 7, 8, 10, 11, 12}};

const Monomials kGr46 = {{1, 2, 3}, {1, 2, 8}, {1, 7, 8}, {6, 7, 8}};

const Monomials kLG48 = {
    {1, 2, 3, 4, 5, 6},  {1, 2, 3, 4, 5, 10}, {1, 2, 3, 4, 9, 10},
    {1, 2, 4, 6, 9, 10}, {1, 2, 3, 8, 9, 10}, {1, 2, 6, 8, 9, 10},
    {1, 5, 6, 8, 9, 10}, {3, 5, 6, 8, 9, 10}};

const Monomials kOG510 = {
    {1, 2, 3}, {1, 2, 10}, {1, 5, 10}, {1, 9, 10}, {6, 9, 10}};

const Monomials kCayley = {
    {1, 2, 3, 5, 6},      {1, 2, 3, 5, 16},    {1, 2, 3, 8, 16},
    {1, 2, 7, 8, 16},     {1, 2, 3, 15, 16},   {1, 2, 7, 15, 16},
    {1, 2, 10, 15, 16},   {1, 9, 10, 15, 16},  {1, 2, 14, 15, 16},
    {1, 9, 14, 15, 16},   {1, 13, 14, 15, 16}, {12, 13, 14, 15, 16}};

std::set<std::vector<int>> as_set(const Monomials& m) {
  return {m.begin(), m.end()};
}

std::vector<CominusculeSpace> criteria_spaces() {
  std::vector<CominusculeSpace> out;
  for (int d = 3; d <= 10; ++d) out.push_back(CominusculeSpace::quadric(d));
  out.push_back(CominusculeSpace::grassmannian(4, 7));
  out.push_back(CominusculeSpace::grassmannian(4, 6));
  out.push_back(CominusculeSpace::lagrangian_grassmannian(4));
  out.push_back(CominusculeSpace::orthogonal_grassmannian(5));
  out.push_back(CominusculeSpace::cayley_plane());
  out.push_back(CominusculeSpace::freudenthal());
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Independent counter for the Young-diagram law (partition recursion).
long count_diagrams_in_box(int a, int b) {
  if (a < 0 || b < 0) return 0;
  std::vector<std::vector<long>> d(a + 1, std::vector<long>(b + 1, 1));
  for (int r = 1; r <= a; ++r)
    for (int c = 1; c <= b; ++c) d[r][c] = d[r][c - 1] + d[r - 1][c];
  return d[a][b];
}

int orbit_size(const CartanData& c, int k) {
  Weight start(c.rank, 0);
  start[k - 1] = 1;
  std::set<Weight> seen{start};
  std::vector<Weight> frontier{start};
  while (!frontier.empty()) {
    Weight mu = frontier.back();
    frontier.pop_back();
    for (int i = 1; i <= c.rank; ++i) {
      Weight nu = apply_reflection(c, i, mu);
      if (seen.insert(nu).second) frontier.push_back(nu);
    }
  }
  return static_cast<int>(seen.size());
}

bool check_monomials(std::ostream& log, const CominusculeSpace& s,
                     const Monomials& expect) {
  auto sp = compute_potential(s);
  if (as_set(sp.potential.numerator) == as_set(expect)) return true;
  log << s.name() << ": got " << sp.potential.numerator.size()
      << " monomials, expected " << expect.size();
  return false;
}

// ---- criteria ----

bool criterion_quadrics(std::ostream& log) {
  bool ok = true;
  for (int d = 3; d <= 10; ++d)
    ok = check_monomials(log, CominusculeSpace::quadric(d),
                         {{1}, {d}}) && ok;
  return ok;
}

bool criterion_gr47(std::ostream& log) {
  return check_monomials(log, CominusculeSpace::grassmannian(4, 7), kGr47);
}

bool criterion_gr46(std::ostream& log) {
  return check_monomials(log, CominusculeSpace::grassmannian(4, 6), kGr46);
}

bool criterion_lg48(std::ostream& log) {
  return check_monomials(log, CominusculeSpace::lagrangian_grassmannian(4),
                         kLG48);
}

bool criterion_og510(std::ostream& log) {
  return check_monomials(log, CominusculeSpace::orthogonal_grassmannian(5),
                         kOG510);
}

bool criterion_cayley(std::ostream& log) {
  return check_monomials(log, CominusculeSpace::cayley_plane(), kCayley);
}

bool criterion_freudenthal(std::ostream& log) {
  auto sp = compute_potential(CominusculeSpace::freudenthal());
  if (sp.potential.numerator == kFreudenthal) return true;
  log << "Freudenthal sequence mismatch (" << sp.potential.numerator.size()
      << " sequences)";
  return false;
}

bool criterion_oracle(std::ostream& log) {
  bool ok = true;
  for (const auto& s : criteria_spaces()) {
    auto sp = compute_potential(s);
    auto rep = build_rep(sp.dual, sp.data.k);
    const int ell = sp.potential.ell;
    const std::int64_t num_sign = ell % 2 == 0 ? -1 : +1;
    const std::int64_t den_sign = -num_sign;

    IndexPoly expect_num;
    for (const auto& mono : sp.potential.numerator)
      expect_num.add(mono, num_sign);
    IndexPoly expect_den;
    std::vector<int> full(ell);
    for (int i = 0; i < ell; ++i) full[i] = i + 1;
    expect_den.add(full, den_sign);

    if (oracle_numerator(rep, sp.word, sp.wprime.wPprime_word) != expect_num ||
        oracle_denominator(rep, sp.word) != expect_den) {
      log << s.name() << ": oracle mismatch; ";
      ok = false;
    }
  }
  return ok;
}

bool criterion_moves(std::ostream& log) {
  bool ok = true;
  for (const auto& s : criteria_spaces()) {
    auto sp = compute_potential(s); // subsets come from the move closure
    auto brute = enumerate_subexpressions_bruteforce(
        sp.dual, sp.word, sp.wprime.wprime, sp.wprime.ellprime);
    if (sp.subsets != brute) {
      log << s.name() << ": moves " << sp.subsets.size() << " != brute "
          << brute.size() << "; ";
      ok = false;
    }
  }
  return ok;
}

bool criterion_rep_dims(std::ostream& log) {
  auto expect_dim = [](const CominusculeSpace& s) -> long {
    switch (s.family) {
      case Family::Grassmannian: return binomial(s.n, s.k);
      case Family::OddQuadric: return 2L * s.n;
      case Family::EvenQuadric: return 2L * s.n;
      case Family::LagrangianGrassmannian: return 1L << s.n;
      case Family::OrthogonalGrassmannian: return 1L << (s.n - 1);
      case Family::CayleyPlane: return 27;
      case Family::Freudenthal: return 56;
    }
    return -1;
  };
  bool ok = true;
  for (const auto& s : criteria_spaces()) {
    auto data = space_data(s);
    auto dual = langlands_dual(data.group);
    auto rep = build_rep(dual, data.k);
    const long want = expect_dim(s);
    if (rep.size() != want || rep.size() != orbit_size(dual, data.k)) {
      log << s.name() << ": dim " << rep.size() << " want " << want << "; ";
      ok = false;
    }
  }
  return ok;
}

bool criterion_count_law(std::ostream& log) {
  bool ok = true;
  for (int n = 4; n <= 8; ++n) {
    for (int k = 2; k <= n - 2; ++k) {
      auto sp = compute_potential(CominusculeSpace::grassmannian(k, n));
      const long want = count_diagrams_in_box(n - k - 1, k - 1);
      if (static_cast<long>(sp.subsets.size()) != want ||
          want != binomial(n - 2, k - 1)) {
        log << "Gr(" << k << "," << n << "): " << sp.subsets.size()
            << " != C(n-2,k-1); ";
        ok = false;
      }
    }
  }
  return ok;
}

bool criterion_ehx(std::ostream& log) {
  bool ok = true;
  for (auto [k, n] : {std::pair{4, 7}, {2, 5}}) {
    auto report = phi_pullback_check(k, n, 50, 7);
    auto again = phi_pullback_check(k, n, 50, 7);
    if (!report.all_equal() ||
        report_to_json(report) != report_to_json(again)) {
      log << "Gr(" << k << "," << n << "): " << report.failures.size()
          << " failing trials; ";
      ok = false;
    }
  }
  return ok;
}

bool criterion_word_covariance(std::ostream& log) {
  std::mt19937_64 rng(13);
  bool ok = true;
  for (const auto& s : criteria_spaces()) {
    auto base = compute_potential(s);
    const auto& word = base.word;
    std::vector<int> swappable;
    for (int p = 0; p + 1 < static_cast<int>(word.size()); ++p) {
      const int b1 = word[p], b2 = word[p + 1];
      if (b1 != b2 && base.dual.cartan[b1 - 1][b2 - 1] == 0)
        swappable.push_back(p);
    }
    // odd quadric words are chains with no commuting adjacent pair at all
    if (swappable.empty()) continue;
    for (int trial = 0; trial < 20; ++trial) {
      const int p = swappable[rng() % swappable.size()];
      WeylWord swapped = word;
      std::swap(swapped[p], swapped[p + 1]);
      auto moved = compute_potential(s, swapped);

      std::set<std::vector<int>> expect;
      for (auto mono : base.potential.numerator) {
        for (auto& i : mono) {
          if (i == p + 1) i = p + 2;
          else if (i == p + 2) i = p + 1;
        }
        std::sort(mono.begin(), mono.end());
        expect.insert(mono);
      }
      if (as_set(moved.potential.numerator) != expect) {
        log << s.name() << ": swap at " << p + 1 << " not covariant; ";
        ok = false;
        break;
      }
    }
  }
  return ok;
}

struct Criterion {
  std::string title;
  double budget_ms;
  std::function<bool(std::ostream&)> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"quadrics d=3..10: numerator {a_1, a_d}", 1000, criterion_quadrics},
      {"Gr(4,7): the 10 listed monomials", 1000, criterion_gr47},
      {"Gr(4,6): the 4 subexpression index sets", 1000, criterion_gr46},
      {"LG(4,8): the 8 listed monomials", 1000, criterion_lg48},
      {"OG(5,10): the 5 listed monomials", 1000, criterion_og510},
      {"Cayley plane: the 12 listed monomials", 5000, criterion_cayley},
      {"Freudenthal: all 78 index sequences in lex order", 60000,
       criterion_freudenthal},
      {"oracle equivalence on all criteria spaces", 120000, criterion_oracle},
      {"move closure equals brute force on all criteria spaces", 60000,
       criterion_moves},
      {"representation dimensions with orbit cross-count", 10000,
       criterion_rep_dims},
      {"Grassmannian count law |S| = C(n-2,k-1), n <= 8", 60000,
       criterion_count_law},
      {"EHX pullback for Gr(4,7) and Gr(2,5), 50 seeded trials", 5000,
       criterion_ehx},
      {"word-commutation covariance, 20 random swaps per space", 60000,
       criterion_word_covariance},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::ostringstream log;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(log);
    } catch (const std::exception& e) {
      log << "exception: " << e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    if (ms > c.budget_ms) {
      log << " [over budget " << c.budget_ms << " ms]";
      ok = false;
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2)
              << i + 1 << ": " << c.title << " (" << std::fixed
              << std::setprecision(1) << ms << " ms)";
    if (!ok) std::cout << "  -- " << log.str();
    std::cout << "\n";
    if (!ok) ++failures;
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED"
                              : "CRITERIA FAILED: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}
