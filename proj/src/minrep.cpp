#include "lgpot/minrep.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <sstream>

namespace lgpot {

int RepGraph::vertex_of(const Weight& w) const {
  for (int v = 0; v < size(); ++v)
    if (weights[v] == w) return v;
  throw WeightNotInRep("weight does not occur in the representation");
}

RepGraph build_rep(const CartanData& c_dual, int k) {
  if (k < 1 || k > c_dual.rank)
    throw IndexOutOfRange("marked node outside 1..rank");
  const int n = c_dual.rank;

  RepGraph rep;
  rep.cartan = c_dual;
  rep.k = k;

  Weight hw(n, 0);
  hw[k - 1] = 1;

  std::map<Weight, int> index;
  index[hw] = 0;
  rep.weights.push_back(hw);

  std::deque<int> queue{0};
  std::vector<std::vector<int>> f_to;
  f_to.push_back(std::vector<int>(n, -1));

  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const Weight mu = rep.weights[v];
    for (int i = 1; i <= n; ++i) {
      const int c = mu[i - 1];
      if (c < -1 || c > 1) {
        std::ostringstream msg;
        msg << "pairing " << c << " at node " << i
            << ": omega_" << k << " is not minuscule for "
            << to_string(c_dual.type) << "_" << n;
        throw NotMinuscule(msg.str());
      }
      if (c != 1) continue;
      Weight nu = mu;
      for (int t = 0; t < n; ++t) nu[t] -= c_dual.cartan[t][i - 1];
      auto [it, fresh] = index.try_emplace(nu, rep.size());
      if (fresh) {
        rep.weights.push_back(nu);
        f_to.push_back(std::vector<int>(n, -1));
        queue.push_back(it->second);
      }
      f_to[v][i - 1] = it->second;
    }
  }

  rep.f_to = std::move(f_to);
  rep.e_to.assign(rep.size(), std::vector<int>(n, -1));
  for (int v = 0; v < rep.size(); ++v)
    for (int i = 0; i < n; ++i)
      if (rep.f_to[v][i] >= 0) rep.e_to[rep.f_to[v][i]][i] = v;

  rep.highest = 0;
  int lowest = -1;
  for (int v = 0; v < rep.size(); ++v) {
    const Weight& mu = rep.weights[v];
    if (std::all_of(mu.begin(), mu.end(), [](int x) { return x <= 0; })) {
      if (lowest >= 0)
        throw InconsistencyError("two weights without raising edges");
      lowest = v;
    }
  }
  if (lowest < 0) throw InconsistencyError("no lowest weight found");
  rep.lowest = lowest;
  return rep;
}

SignedVertex act_f(const RepGraph& rep, int i, int v) {
  const int t = rep.f_to.at(v).at(i - 1);
  return t < 0 ? SignedVertex{} : SignedVertex{t, +1};
}

SignedVertex act_e(const RepGraph& rep, int i, int v) {
  const int t = rep.e_to.at(v).at(i - 1);
  return t < 0 ? SignedVertex{} : SignedVertex{t, +1};
}

SignedVertex act_sbar(const RepGraph& rep, int i, int v) {
  const int c = rep.weights.at(v).at(i - 1);
  if (c == 1) return {rep.f_to[v][i - 1], +1};
  if (c == -1) return {rep.e_to[v][i - 1], -1};
  return {v, +1};
}

SignedVertex act_sdot(const RepGraph& rep, int i, int v) {
  const int c = rep.weights.at(v).at(i - 1);
  if (c == 1) return {rep.f_to[v][i - 1], -1};
  if (c == -1) return {rep.e_to[v][i - 1], +1};
  return {v, +1};
}

WeylWord coset_path(const RepGraph& rep, const Weight& target) {
  const int goal = rep.vertex_of(target);
  // BFS along f-edges, expanding the smallest i first
  std::vector<int> via_letter(rep.size(), 0), parent(rep.size(), -1);
  std::deque<int> queue{rep.highest};
  std::vector<bool> seen(rep.size(), false);
  seen[rep.highest] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rep.cartan.rank; ++i) {
      const int t = rep.f_to[v][i - 1];
      if (t >= 0 && !seen[t]) {
        seen[t] = true;
        parent[t] = v;
        via_letter[t] = i;
        queue.push_back(t);
      }
    }
  }
  if (!seen[goal])
    throw InconsistencyError("representation graph is not connected");
  // Following parents collects letters innermost-first, which is already the
  // left-to-right order of the reduced word (the first f applied is the
  // rightmost factor).
  WeylWord word;
  for (int v = goal; v != rep.highest; v = parent[v])
    word.push_back(via_letter[v]);
  return word;
}

void IndexPoly::add(const std::vector<int>& mono, std::int64_t coeff) {
  auto it = terms.find(mono);
  if (it == terms.end()) {
    if (coeff != 0) terms.emplace(mono, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms.erase(it);
}

std::string IndexPoly::str() const {
  std::ostringstream s;
  bool first = true;
  for (const auto& [mono, coeff] : terms) {
    if (!first) s << " ";
    first = false;
    s << (coeff >= 0 ? "+" : "-");
    if (std::abs(coeff) != 1 || mono.empty()) s << std::abs(coeff);
    for (int i : mono) s << "a" << i;
  }
  return first ? "0" : s.str();
}

namespace {

// Coefficient vector over the representation: vertex -> polynomial.
using VertexPoly = std::map<int, IndexPoly>;

// Applies (1 - a_1 f_{r_1}) ... (1 - a_ell f_{r_ell}) to the state, rightmost
// factor first.  Each factor keeps the state and adds -a_p * (f_{r_p} state).
void apply_expansion(const RepGraph& rep, const WeylWord& word,
                     VertexPoly& state) {
  for (int p = static_cast<int>(word.size()); p >= 1; --p) {
    const int b = word[p - 1];
    VertexPoly shifted;
    for (const auto& [v, poly] : state) {
      const int t = rep.f_to[v][b - 1];
      if (t < 0) continue;
      IndexPoly& dest = shifted[t];
      for (const auto& [mono, coeff] : poly.terms) {
        std::vector<int> m;
        m.reserve(mono.size() + 1);
        // position p is smaller than anything already in the monomial
        m.push_back(p);
        m.insert(m.end(), mono.begin(), mono.end());
        dest.add(m, -coeff);
      }
    }
    for (auto& [v, poly] : shifted) {
      IndexPoly& dest = state[v];
      for (const auto& [mono, coeff] : poly.terms) dest.add(mono, coeff);
    }
  }
}

} // namespace

IndexPoly oracle_denominator(const RepGraph& rep, const WeylWord& wP_word) {
  VertexPoly state;
  state[rep.highest].add({}, 1);
  apply_expansion(rep, wP_word, state);
  auto it = state.find(rep.lowest);
  return it == state.end() ? IndexPoly{} : it->second;
}

IndexPoly oracle_numerator(const RepGraph& rep, const WeylWord& wP_word,
                           const WeylWord& wPprime_word) {
  // bar{w}_{o,P}^{-1} bar{s}_k . v+ = (-1)^{l''+1} f_{j_1}...f_{j_{l''}} . v+
  int v = rep.highest;
  for (auto it = wPprime_word.rbegin(); it != wPprime_word.rend(); ++it) {
    v = rep.f_to[v][*it - 1];
    if (v < 0)
      throw ZeroVector("w_P' word annihilates the highest weight vector");
  }
  const std::int64_t sign = (wPprime_word.size() % 2 == 0) ? -1 : +1;

  VertexPoly state;
  state[v].add({}, sign);
  apply_expansion(rep, wP_word, state);
  auto it = state.find(rep.lowest);
  return it == state.end() ? IndexPoly{} : it->second;
}

std::string rep_to_json(const RepGraph& rep) {
  nlohmann::json j;
  j["type"] = to_string(rep.cartan.type);
  j["rank"] = rep.cartan.rank;
  j["k"] = rep.k;
  j["weights"] = rep.weights;
  j["highest"] = rep.highest;
  j["lowest"] = rep.lowest;
  auto edges = nlohmann::json::array();
  for (int v = 0; v < rep.size(); ++v)
    for (int i = 1; i <= rep.cartan.rank; ++i)
      if (rep.f_to[v][i - 1] >= 0)
        edges.push_back({v, i, rep.f_to[v][i - 1]});
  j["f_edges"] = edges;
  return j.dump();
}

} // namespace lgpot
