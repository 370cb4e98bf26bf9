#include "lgpot/quiver.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace lgpot {

namespace {

// Group commutation of simple reflections; equal letters commute trivially.
bool commutes(const CartanData& c, int b1, int b2) {
  return b1 == b2 || c.cartan[b1 - 1][b2 - 1] == 0;
}

} // namespace

int Quiver::position(int beta, int j) const {
  if (j == 0) return 0;
  auto it = occurrence_count.find(beta);
  const int m = it == occurrence_count.end() ? 0 : it->second;
  if (j > m) return ell + 1; // the infinity sentinel
  int seen = 0;
  for (int p = 1; p <= ell; ++p) {
    if (word[p - 1] == beta && ++seen == j) return p;
  }
  throw IndexOutOfRange("no such occurrence");
}

Quiver build_quiver(const CartanData& c_dual, const WeylWord& wP_word) {
  Quiver q;
  q.cartan = c_dual;
  q.word = wP_word;
  q.ell = static_cast<int>(wP_word.size());
  q.vertex_at.assign(q.ell + 1, {});
  for (int p = 1; p <= q.ell; ++p) {
    const int beta = wP_word[p - 1];
    q.vertex_at[p] = QuiverVertex{beta, ++q.occurrence_count[beta]};
  }
  // arrow (beta,j) -> (beta',j') iff non-commuting letters and
  // J(beta',j'-1) < J(beta,j) < J(beta',j') < J(beta,j+1)
  for (int from = 1; from <= q.ell; ++from) {
    const auto [beta, j] = q.vertex_at[from];
    for (int to = from + 1; to <= q.ell; ++to) {
      const auto [betap, jp] = q.vertex_at[to];
      if (beta == betap || commutes(c_dual, beta, betap)) continue;
      if (q.position(betap, jp - 1) < from && to < q.position(beta, j + 1))
        q.arrows.emplace_back(from, to);
    }
  }
  return q;
}

QuiverSubset subset_from_indices(const Quiver& q, const SubexprIndexSet& idx) {
  QuiverSubset s;
  s.reserve(idx.size());
  for (int p : idx) {
    if (p < 1 || p > q.ell) throw IndexOutOfRange("position outside the word");
    s.push_back(q.vertex_at[p]);
  }
  return s;
}

SubexprIndexSet indices_of_subset(const Quiver& q, const QuiverSubset& s) {
  SubexprIndexSet idx;
  idx.reserve(s.size());
  for (const auto& v : s) idx.push_back(q.position(v.beta, v.j));
  return idx;
}

QuiverSubset lex_minimal_subset(const Quiver& q, const WeylElement& wprime,
                                int ellprime) {
  return subset_from_indices(
      q, lex_minimal_subexpression(q.cartan, q.word, wprime, ellprime));
}

std::vector<QuiverSubset> legal_moves(const Quiver& q,
                                      const WeylElement& wprime,
                                      const QuiverSubset& S) {
  SubexprIndexSet idx = indices_of_subset(q, S);
  if (!std::is_sorted(idx.begin(), idx.end()) ||
      std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw InvalidSubset("subset is not strictly J-increasing");
  WeylWord sub;
  for (int p : idx) sub.push_back(q.word[p - 1]);
  if (element_of(q.cartan, sub) != wprime || !is_reduced(q.cartan, sub))
    throw InvalidSubset("subset is not a reduced subexpression of w'");

  std::set<int> selected(idx.begin(), idx.end());
  std::set<SubexprIndexSet> results;
  for (int pos : idx) {
    const int beta = q.word[pos - 1];
    for (int cand = 1; cand <= q.ell; ++cand) {
      if (selected.count(cand) || q.word[cand - 1] != beta) continue;
      const int lo = std::min(cand, pos), hi = std::max(cand, pos);
      bool ok = true;
      for (int t : selected) {
        if (lo < t && t < hi && !commutes(q.cartan, q.word[t - 1], beta)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      SubexprIndexSet moved;
      for (int t : selected)
        if (t != pos) moved.push_back(t);
      moved.push_back(cand);
      std::sort(moved.begin(), moved.end());
      results.insert(moved);
    }
  }

  std::vector<QuiverSubset> out;
  out.reserve(results.size());
  for (const auto& r : results) out.push_back(subset_from_indices(q, r));
  return out;
}

std::vector<SubexprIndexSet> enumerate_by_moves(const Quiver& q,
                                                const WeylElement& wprime,
                                                int ellprime) {
  QuiverSubset seed = lex_minimal_subset(q, wprime, ellprime);
  std::set<SubexprIndexSet> seen{indices_of_subset(q, seed)};
  std::vector<QuiverSubset> frontier{seed};
  while (!frontier.empty()) {
    QuiverSubset s = frontier.back();
    frontier.pop_back();
    for (auto& next : legal_moves(q, wprime, s)) {
      if (seen.insert(indices_of_subset(q, next)).second)
        frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream s;
  s << "digraph quiver {\n";
  for (int p = 1; p <= q.ell; ++p) {
    const auto [beta, j] = q.vertex_at[p];
    s << "  v" << p << " [label=\"(" << beta << "," << j << ") @" << p
      << "\"];\n";
  }
  for (const auto& [from, to] : q.arrows)
    s << "  v" << from << " -> v" << to << ";\n";
  s << "}\n";
  return s.str();
}

std::string quiver_to_json(const Quiver& q) {
  nlohmann::json j;
  j["word"] = q.word;
  auto verts = nlohmann::json::array();
  for (int p = 1; p <= q.ell; ++p)
    verts.push_back({{"beta", q.vertex_at[p].beta},
                     {"j", q.vertex_at[p].j},
                     {"pos", p}});
  j["vertices"] = verts;
  auto arrows = nlohmann::json::array();
  for (const auto& [from, to] : q.arrows) arrows.push_back({from, to});
  j["arrows"] = arrows;
  return j.dump();
}

} // namespace lgpot
