#include "lgpot/potential.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace lgpot {

Rational make_rational(long num, long den) {
  if (den == 0) throw ZeroDenominator("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

LaurentPotential assemble(const std::string& space_label, int ell,
                          const WeylWord& word,
                          const std::vector<SubexprIndexSet>& subsets) {
  if (subsets.empty()) throw SizeMismatch("empty subset family");
  const int size = static_cast<int>(subsets.front().size());
  std::set<std::vector<int>> monos;
  for (const auto& s : subsets) {
    if (static_cast<int>(s.size()) != size)
      throw SizeMismatch("subsets of unequal size");
    std::vector<int> m(s.begin(), s.end());
    std::sort(m.begin(), m.end());
    for (int i : m)
      if (i < 1 || i > ell) throw SizeMismatch("index outside 1..ell");
    monos.insert(std::move(m));
  }
  LaurentPotential p;
  p.space = space_label;
  p.ell = ell;
  p.ell_prime = size;
  p.word = word;
  p.numerator.assign(monos.begin(), monos.end());
  return p;
}

Rational evaluate(const LaurentPotential& p, const std::vector<Rational>& point,
                  const Rational& q) {
  if (static_cast<int>(point.size()) != p.ell)
    throw SizeMismatch("point dimension != ell");
  if (q == 0) throw ZeroCoordinate("q = 0");
  for (const auto& a : point)
    if (a == 0) throw ZeroCoordinate("toric coordinate = 0");

  Rational sum = 0, denom = 1;
  for (const auto& a : point) {
    sum += a;
    denom *= a;
  }
  Rational numer = 0;
  if (p.numerator.empty()) {
    numer = 1; // the empty product
  } else {
    for (const auto& mono : p.numerator) {
      Rational term = 1;
      for (int i : mono) term *= point[i - 1];
      numer += term;
    }
  }
  return sum + q * numer / denom;
}

namespace {

std::string var_text(int i) {
  return "a" + std::to_string(i);
}

std::string var_latex(int i) {
  std::ostringstream s;
  s << "a_";
  if (i >= 10) s << "{" << i << "}";
  else s << i;
  return s.str();
}

} // namespace

std::string render(const LaurentPotential& p, RenderFormat format) {
  if (format == RenderFormat::Json) {
    nlohmann::json j;
    j["space"] = p.space;
    j["ell"] = p.ell;
    j["ell_prime"] = p.ell_prime;
    j["numerator"] = p.numerator;
    j["word"] = p.word;
    return j.dump();
  }

  const bool latex = format == RenderFormat::Latex;
  std::ostringstream s;
  for (int i = 1; i <= p.ell; ++i) {
    if (i > 1) s << " + ";
    s << (latex ? var_latex(i) : var_text(i));
  }

  std::ostringstream numer;
  bool first = true;
  for (const auto& mono : p.numerator) {
    if (!first) numer << " + ";
    first = false;
    bool inner_first = true;
    for (int i : mono) {
      if (!inner_first && !latex) numer << "*";
      inner_first = false;
      numer << (latex ? var_latex(i) : var_text(i));
    }
  }

  std::ostringstream denom;
  for (int i = 1; i <= p.ell; ++i) {
    if (i > 1 && !latex) denom << "*";
    denom << (latex ? var_latex(i) : var_text(i));
  }

  const bool unit_numerator = p.numerator.empty() || p.ell_prime == 0;
  if (latex) {
    s << " + q\\frac{" << (unit_numerator ? "1" : numer.str()) << "}{"
      << denom.str() << "}";
  } else if (unit_numerator) {
    s << " + q/(" << denom.str() << ")";
  } else {
    s << " + q*(" << numer.str() << ")/(" << denom.str() << ")";
  }
  return s.str();
}

LaurentPotential potential_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    LaurentPotential p;
    p.space = j.at("space").get<std::string>();
    p.ell = j.at("ell").get<int>();
    p.ell_prime = j.at("ell_prime").get<int>();
    p.numerator = j.at("numerator").get<std::vector<std::vector<int>>>();
    p.word = j.at("word").get<WeylWord>();
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameters(std::string("bad potential JSON: ") + e.what());
  }
}

} // namespace lgpot
