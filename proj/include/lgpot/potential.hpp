#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "lgpot/rootdata.hpp"
#include "lgpot/weyl.hpp"

namespace lgpot {

using Rational = mpq_class;

/// Exact rational num/den (den != 0), canonicalized.
Rational make_rational(long num, long den = 1);

/// The Laurent polynomial potential
///   sum_{i=1}^ell a_i + q * (sum over numerator monomials) / (a_1...a_ell),
/// with unit coefficients.  Monomials are index subsets of {1..ell}, all of
/// size ell_prime, kept sorted and distinct; the denominator is never
/// reduced against the numerator.  For projective space the list holds the
/// single empty monomial (ell_prime = 0) and the numerator is 1.
struct LaurentPotential {
  std::string space; // display label of the underlying space
  int ell = 0;
  int ell_prime = 0;
  WeylWord word; // the fixed reduced word the variables are attached to
  std::vector<std::vector<int>> numerator; // sorted index sets, sorted lex

  bool operator==(const LaurentPotential&) const = default;
};

/// Builds the potential from an enumerated subset family.  Monomials are
/// sorted and deduplicated; throws SizeMismatch if the subsets do not all
/// have the same size or contain indices outside 1..ell.
LaurentPotential assemble(const std::string& space_label, int ell,
                          const WeylWord& word,
                          const std::vector<SubexprIndexSet>& subsets);

/// Exact value at a point with all coordinates nonzero.
/// Throws ZeroCoordinate if some a_i or q is zero.
Rational evaluate(const LaurentPotential& p, const std::vector<Rational>& point,
                  const Rational& q);

enum class RenderFormat { Text, Latex, Json };

/// Deterministic rendering; monomials appear in lexicographic index order.
///   Text:  "a1 + a2 + a3 + q*(a1 + a3)/(a1*a2*a3)"
///   Latex: "a_1 + a_2 + a_3 + q\frac{a_1 + a_3}{a_1a_2a_3}"
///   Json:  {"space","ell","ell_prime","numerator","word"}
std::string render(const LaurentPotential& p, RenderFormat format);

/// Inverse of render(..., Json).  Throws InvalidParameters on malformed
/// input.
LaurentPotential potential_from_json(const std::string& text);

} // namespace lgpot
