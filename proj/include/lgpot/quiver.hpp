#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lgpot/rootdata.hpp"
#include "lgpot/weyl.hpp"

namespace lgpot {

/// Quiver vertex: the j-th occurrence (j >= 1) of the letter beta in the
/// fixed word for w^P.
struct QuiverVertex {
  int beta = 0;
  int j = 0;

  bool operator==(const QuiverVertex&) const = default;
  auto operator<=>(const QuiverVertex&) const = default;
};

/// The occurrence quiver of a fully commutative reduced word.  Vertices are
/// letter occurrences (beta, j); there is an arrow (beta,j) -> (beta',j')
/// exactly when s_beta and s_beta' do not commute and
///   J(beta',j'-1) < J(beta,j) < J(beta',j') < J(beta,j+1),
/// with the sentinels J(beta,0) = 0 and J(beta, m(beta)+1) = ell+1.
/// Because w^P is fully commutative the quiver does not depend on the choice
/// of reduced word.
struct Quiver {
  CartanData cartan; // dual Cartan data (only commutation is used)
  WeylWord word;
  int ell = 0;
  std::map<int, int> occurrence_count;  // m^P(beta)
  std::vector<QuiverVertex> vertex_at;  // 1-based: vertex_at[p] at position p
  std::vector<std::pair<int, int>> arrows; // positions (from, to), J-increasing

  /// J(beta, j), including the sentinel values for j = 0 and j = m+1.
  int position(int beta, int j) const;
  QuiverVertex vertex(int pos) const { return vertex_at.at(pos); }
};

Quiver build_quiver(const CartanData& c_dual, const WeylWord& wP_word);

/// Vertices listed with strictly increasing J; the J-image is a
/// SubexprIndexSet for w'.
using QuiverSubset = std::vector<QuiverVertex>;

QuiverSubset subset_from_indices(const Quiver& q, const SubexprIndexSet& idx);
SubexprIndexSet indices_of_subset(const Quiver& q, const QuiverSubset& s);

/// Subset whose J-image is the lexicographically smallest reduced
/// subexpression of wprime in the word.
QuiverSubset lex_minimal_subset(const Quiver& q, const WeylElement& wprime,
                                int ellprime);

/// All subsets reachable from S in one legal move, in both directions.
/// A move replaces a selected occurrence of s_beta by an unselected one,
/// provided every selected vertex strictly J-between the two commutes with
/// s_beta; sliding within a gap of the selection (operation (i)) is the
/// special case with nothing in between.  Throws InvalidSubset if S is not a
/// reduced subexpression of wprime.
std::vector<QuiverSubset> legal_moves(const Quiver& q,
                                      const WeylElement& wprime,
                                      const QuiverSubset& S);

/// BFS closure of {lex_minimal_subset} under legal_moves; returns the
/// J-images sorted lexicographically.  Matches the brute-force enumeration.
std::vector<SubexprIndexSet> enumerate_by_moves(const Quiver& q,
                                                const WeylElement& wprime,
                                                int ellprime);

/// Graphviz digraph with one node per occurrence and the quiver arrows.
std::string quiver_to_dot(const Quiver& q);

/// {"word": [...], "vertices": [{"beta","j","pos"}...], "arrows": [[p,q]...]}
std::string quiver_to_json(const Quiver& q);

} // namespace lgpot
