#pragma once

#include <vector>

#include "lgpot/rootdata.hpp"

namespace lgpot {

/// Weight vector in fundamental-weight coordinates; entry i-1 is the pairing
/// against the i-th simple coroot.
using Weight = std::vector<int>;

/// Word in the simple reflections, 1-based letters, read left to right:
/// [i_1,...,i_m] denotes the product s_{i_1} s_{i_2} ... s_{i_m}.  As a map
/// on weights the rightmost factor acts first.
using WeylWord = std::vector<int>;

/// Weyl group element, identified by a regular-orbit vector.
///
/// rho_image is the fold of apply_reflection over rho = (1,...,1) along a
/// word of the element read left to right; folding applies s_{i_1} first, so
/// the stored vector is the image of rho under the INVERSE element.  Since
/// rho is regular this determines the element uniquely, and appending a
/// letter on the right of the word is a single reflection on the vector.
/// Identity <=> rho_image = (1,...,1).
struct WeylElement {
  Weight rho_image;

  bool operator==(const WeylElement&) const = default;
  bool operator<(const WeylElement& o) const { return rho_image < o.rho_image; }
};

/// s_i(mu) = mu - mu[i] * (column i of the Cartan matrix).  Involution.
/// Throws IndexOutOfRange unless 1 <= i <= rank.
Weight apply_reflection(const CartanData& c, int i, const Weight& mu);

/// w(mu) for w the product of `word` left to right (rightmost letter acts
/// first).
Weight apply_word(const CartanData& c, const WeylWord& word, Weight mu);

WeylElement identity_element(const CartanData& c);
bool is_identity(const WeylElement& e);

/// Element of the product s_{i_1} ... s_{i_m}.
WeylElement element_of(const CartanData& c, const WeylWord& word);

/// Coxeter length, computed by greedy descent to the identity.
int length(const CartanData& c, const WeylElement& e);

/// A reduced word for the element (canonical: smallest descent first).
WeylWord reduced_word(const CartanData& c, const WeylElement& e);

WeylElement inverse(const CartanData& c, const WeylElement& e);

bool is_reduced(const CartanData& c, const WeylWord& word);

/// Reduced word for the longest element of the parabolic subgroup generated
/// by {s_i : i in subset}.  Greedy: while some i in the subset has positive
/// pairing in the current rho image, append the smallest such i.
WeylWord longest_element(const CartanData& c, const std::vector<int>& subset);

/// The fixed reduced expression for w^P of each catalog space:
///   Gr(k,n):    (s_{n-k}...s_{n-1})(s_{n-k-1}...s_{n-2})...(s_1...s_k)
///   Q_{2n-1}:   s_1...s_{n-1}(s_n)s_{n-1}...s_1
///   Q_{2n-2}:   s_1...s_{n-2}(s_{n-1}s_n)s_{n-2}...s_1
///   LG(n,2n):   (s_n)(s_{n-1}s_n)...(s_1s_2...s_n)
///   OG(n,2n):   tail letters alternate between s_{n-1} and s_n around
///               growing runs (s_{n-1-j}...s_{n-2}); ends with s_n
///   E6/P6, E7/P7: fixed words of length 16 and 27
/// Word length equals dim X.
WeylWord canonical_wP_word(const CominusculeSpace& s);

struct WPrimeData {
  WeylElement wprime;    // w' = w^P (w_P')^{-1}
  int ellprime;          // l(w') = l(w^P) - l(w_P')
  WeylWord wPprime_word; // reduced word for w_P'
};

/// Computes w_{o,P} = longest element of <s_i : i != k>, the minimal coset
/// representative w_P' of w_{o,P} s_k W_P, and w' = w^P (w_P')^{-1}.
/// w' is returned as an element, never as a fixed word: its reduced
/// expressions inside wP_word are exactly what the enumeration below finds.
/// Throws InconsistencyError if l(w') + l(w_P') != l(w^P).
WPrimeData compute_wprime(const CartanData& c_dual, int k,
                          const WeylWord& wP_word);

/// Strictly increasing positions (1-based) into the fixed word for w^P whose
/// subword is a reduced expression for w'.
using SubexprIndexSet = std::vector<int>;

/// All reduced subexpressions of wprime inside wP_word, in lexicographic
/// order.  DP over positions: a partial product is extended only while the
/// remaining quotient stays a right factor of wprime formable from the
/// remaining positions, so the search is linear in the output.
std::vector<SubexprIndexSet> enumerate_subexpressions_bruteforce(
    const CartanData& c_dual, const WeylWord& wP_word,
    const WeylElement& wprime, int ellprime);

/// The lexicographically smallest element of the set above, by the greedy
/// left-to-right choice of the smallest extendable position.
SubexprIndexSet lex_minimal_subexpression(const CartanData& c_dual,
                                          const WeylWord& wP_word,
                                          const WeylElement& wprime,
                                          int ellprime);

} // namespace lgpot
