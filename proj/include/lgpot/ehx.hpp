#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lgpot/potential.hpp"

namespace lgpot {

/// Ladder of hook diagrams for Gr(k,n): vertices [i,j] with 1 <= i <= n-k,
/// 1 <= j <= k, plus the formal endpoints [1,0] (empty diagram, coordinate 1)
/// and [n-k,k+1] (infinity, coordinate q).  Arrows go [i,j] -> [i,j+1] and
/// [i,j] -> [i+1,j]; the quantum arrow [n-k,k] -> infinity is unique.
struct LadderQuiver {
  int k = 0;
  int n = 0;

  int rows() const { return n - k; }
  int cols() const { return k; }
};

LadderQuiver make_ladder(int k, int n);

/// Grid of ladder coordinates z_{[i,j]}, row-major with 1-based accessors.
struct LadderPoint {
  std::vector<std::vector<Rational>> z; // z[i-1][j-1]
  Rational q;

  const Rational& at(int i, int j) const { return z.at(i - 1).at(j - 1); }
};

/// T_{[i,j]} = (z_{[i+1,j]} + z_{[i,j+1]}) / z_{[i,j]}, where coordinates
/// outside the ladder are 0, z_{[1,0]} = 1 and z_{[n-k,k+1]} = q.  Accepts
/// (i,j) = (1,0) for the empty diagram.  Throws ZeroDenominator.
Rational ehx_term(const LadderQuiver& lq, int i, int j, const LadderPoint& pt);

/// Sum of T over the empty diagram and every hook; the infinity term is 0.
Rational ehx_potential(const LadderQuiver& lq, const LadderPoint& pt);

/// Index map onto the toric coordinates of the fixed word for w^P:
/// phi([i,j]) = i*k - j + 1 for hooks other than [n-k,k], and
/// phi(empty) = (n-k-1)*k + 1.  Bijection onto {1..k(n-k)}.
int phi_index(const LadderQuiver& lq, int i, int j);
int phi_index_empty(const LadderQuiver& lq);

struct PullbackReport {
  std::string space;
  int trials = 0;
  std::vector<int> failures; // trial numbers with W(a(z), q) != W_EHX(z, q)

  bool all_equal() const { return failures.empty(); }
};

/// Samples `trials` random rational ladder points (numerators and
/// denominators bounded by 100, coordinates nonzero, resampled if some
/// pulled-back a_i vanishes) and compares the potential of Gr(k,n) evaluated
/// at a_i = T_{phi^{-1}(i)} against the ladder potential, exactly.
PullbackReport phi_pullback_check(int k, int n, int trials,
                                  std::uint64_t seed);

/// {"space": ..., "trials": N, "failures": [...]}
std::string report_to_json(const PullbackReport& r);

} // namespace lgpot
