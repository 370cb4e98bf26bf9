#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lgpot/rootdata.hpp"
#include "lgpot/weyl.hpp"

namespace lgpot {

/// The minuscule representation V(omega_k) of the Lie algebra with the given
/// Cartan data, as a weight graph in the Green basis.  Callers working with a
/// cominuscule space X = G/P_k must pass the LANGLANDS DUAL Cartan data: the
/// potential lives in the representation of g^dual, and for types B/C the
/// two differ.
///
/// Every weight occurs once (weight spaces are one-dimensional) and all
/// simple-coroot pairings lie in {-1,0,+1}.  f_i moves a vertex of weight mu
/// to mu - alpha_i exactly when mu[i] = +1; e_i is the reverse edge.
struct RepGraph {
  CartanData cartan; // the (dual) data the representation was built from
  int k = 0;
  std::vector<Weight> weights; // vertex id = index into this list
  int highest = 0;             // vertex of weight omega_k
  int lowest = 0;              // vertex of weight w_0(omega_k)
  std::vector<std::vector<int>> f_to; // f_to[v][i-1] = target vertex or -1
  std::vector<std::vector<int>> e_to; // reverse edges

  int size() const { return static_cast<int>(weights.size()); }

  /// Vertex carrying the given weight; throws WeightNotInRep.
  int vertex_of(const Weight& w) const;
};

/// BFS from omega_k applying f_i wherever the pairing is +1.
/// Throws NotMinuscule if a visited weight has a pairing outside {-1,0,1}.
RepGraph build_rep(const CartanData& c_dual, int k);

/// Result of a basis-vector action: target vertex with sign, or zero.
struct SignedVertex {
  int vertex = -1; // -1 encodes the zero vector
  int sign = 0;    // +1 or -1 when vertex >= 0

  bool is_zero() const { return vertex < 0; }
  bool operator==(const SignedVertex&) const = default;
};

/// Chevalley and Weyl actions on a basis vector of weight mu, writing
/// c = mu[i]:
///   f_i:    c=+1 -> +v_{mu-alpha_i},           else 0
///   e_i:    c=-1 -> +v_{mu+alpha_i},           else 0
///   s_bar:  c=+1 -> +f_i v,  c=-1 -> -e_i v,   c=0 -> +v
///   s_dot:  c=+1 -> -f_i v,  c=-1 -> +e_i v,   c=0 -> +v
/// (s_bar = s_dot^{-1}).
SignedVertex act_f(const RepGraph& rep, int i, int v);
SignedVertex act_e(const RepGraph& rep, int i, int v);
SignedVertex act_sbar(const RepGraph& rep, int i, int v);
SignedVertex act_sdot(const RepGraph& rep, int i, int v);

/// Word read off an f-edge path from the highest weight to the target
/// (deterministic: BFS expanding the smallest i first).  By the minuscule
/// word property any such path spells a reduced word for the unique minimal
/// coset representative sending omega_k to the target weight.
/// Throws WeightNotInRep.
WeylWord coset_path(const RepGraph& rep, const Weight& target);

/// Sparse polynomial in the variables a_1..a_ell with square-free monomials
/// keyed by their sorted index set.  Exact integer coefficients.
struct IndexPoly {
  std::map<std::vector<int>, std::int64_t> terms;

  bool operator==(const IndexPoly&) const = default;
  void add(const std::vector<int>& mono, std::int64_t coeff);
  std::string str() const; // for diagnostics
};

/// Coefficient of the lowest-weight vertex in
///   (1 - a_1 f_{r_1}) ... (1 - a_ell f_{r_ell}) . v+,
/// the expansion of u_-^{-1} acting on the highest weight vector (rightmost
/// factor acts first).  Contract: equals (-1)^ell * a_1...a_ell.
IndexPoly oracle_denominator(const RepGraph& rep, const WeylWord& wP_word);

/// Same expansion applied to (-1)^{l''+1} f_{j_1}...f_{j_{l''}} . v+, the
/// image of the highest weight vector under bar{w}_{o,P}^{-1} bar{s}_k,
/// where (j_1..j_{l''}) = wPprime_word.  Contract: equals
/// (-1)^{ell+1} * sum over reduced subexpressions of w' of their monomials.
/// Throws ZeroVector if wPprime_word annihilates v+.
IndexPoly oracle_numerator(const RepGraph& rep, const WeylWord& wP_word,
                           const WeylWord& wPprime_word);

/// JSON adjacency: {"k", "type", "rank", "weights": [[...]], "highest",
/// "lowest", "f_edges": [[from, i, to], ...]}.
std::string rep_to_json(const RepGraph& rep);

} // namespace lgpot
