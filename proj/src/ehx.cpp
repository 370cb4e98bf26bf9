#include "lgpot/ehx.hpp"

#include <json.hpp>

#include <random>

#include "lgpot/pipeline.hpp"

namespace lgpot {

LadderQuiver make_ladder(int k, int n) {
  if (k < 1 || k > n - 1)
    throw InvalidParameters("ladder needs 1 <= k <= n-1");
  return LadderQuiver{k, n};
}

namespace {

// z_{[i,j]} with the formal endpoints and zero outside the ladder.
Rational z_value(const LadderQuiver& lq, int i, int j, const LadderPoint& pt) {
  if (i == 1 && j == 0) return 1;
  if (i == lq.rows() && j == lq.cols() + 1) return pt.q;
  if (i < 1 || i > lq.rows() || j < 1 || j > lq.cols()) return 0;
  return pt.at(i, j);
}

} // namespace

Rational ehx_term(const LadderQuiver& lq, int i, int j, const LadderPoint& pt) {
  const Rational down = z_value(lq, i + 1, j, pt);
  const Rational right = z_value(lq, i, j + 1, pt);
  const Rational self = z_value(lq, i, j, pt);
  if (self == 0) throw ZeroDenominator("ladder coordinate is zero");
  return (down + right) / self;
}

Rational ehx_potential(const LadderQuiver& lq, const LadderPoint& pt) {
  Rational sum = ehx_term(lq, 1, 0, pt); // the empty diagram
  for (int i = 1; i <= lq.rows(); ++i)
    for (int j = 1; j <= lq.cols(); ++j) sum += ehx_term(lq, i, j, pt);
  return sum; // the infinity term is 0
}

int phi_index(const LadderQuiver& lq, int i, int j) {
  if (i == 1 && j == 0) return phi_index_empty(lq);
  if (i < 1 || i > lq.rows() || j < 1 || j > lq.cols() ||
      (i == lq.rows() && j == lq.cols()))
    throw IndexOutOfRange("hook outside the domain of phi");
  return i * lq.k - j + 1;
}

int phi_index_empty(const LadderQuiver& lq) {
  return (lq.rows() - 1) * lq.k + 1;
}

PullbackReport phi_pullback_check(int k, int n, int trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw InvalidParameters("trials must be positive");
  const LadderQuiver lq = make_ladder(k, n);
  const SpacePotential sp =
      compute_potential(CominusculeSpace::grassmannian(k, n));
  const int ell = sp.potential.ell;

  std::mt19937_64 rng(seed);
  // raw engine output only, so runs are reproducible across platforms
  auto rand_rational = [&rng]() {
    const long r = 1 + static_cast<long>(rng() % 200); // 1..200
    const long num = r <= 100 ? r : 100 - r;           // -100..-1, 1..100
    const long den = 1 + static_cast<long>(rng() % 100);
    return make_rational(num, den);
  };

  PullbackReport report;
  report.space = sp.space.name();
  report.trials = trials;

  for (int trial = 0; trial < trials; ++trial) {
    std::vector<Rational> avals;
    Rational q;
    LadderPoint pt;
    for (;;) {
      pt.z.assign(lq.rows(), std::vector<Rational>(lq.cols()));
      for (int i = 1; i <= lq.rows(); ++i)
        for (int j = 1; j <= lq.cols(); ++j) pt.z[i - 1][j - 1] = rand_rational();
      pt.q = rand_rational();
      q = pt.q;

      // a_i := T_{phi^{-1}(i)}; resample the whole point if some a_i = 0
      avals.assign(ell, Rational(0));
      avals[phi_index_empty(lq) - 1] = ehx_term(lq, 1, 0, pt);
      for (int i = 1; i <= lq.rows(); ++i)
        for (int j = 1; j <= lq.cols(); ++j) {
          if (i == lq.rows() && j == lq.cols()) continue;
          avals[phi_index(lq, i, j) - 1] = ehx_term(lq, i, j, pt);
        }
      bool degenerate = false;
      for (const auto& a : avals)
        if (a == 0) degenerate = true;
      if (!degenerate) break;
    }

    if (evaluate(sp.potential, avals, q) != ehx_potential(lq, pt))
      report.failures.push_back(trial);
  }
  return report;
}

std::string report_to_json(const PullbackReport& r) {
  nlohmann::json j;
  j["space"] = r.space;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  return j.dump();
}

} // namespace lgpot
