#include "lgpot/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lgpot {

Weight apply_reflection(const CartanData& c, int i, const Weight& mu) {
  if (i < 1 || i > c.rank) {
    std::ostringstream msg;
    msg << "reflection index " << i << " outside 1.." << c.rank;
    throw IndexOutOfRange(msg.str());
  }
  const int coeff = mu.at(i - 1);
  Weight out = mu;
  if (coeff == 0) return out;
  for (int t = 0; t < c.rank; ++t) out[t] -= coeff * c.cartan[t][i - 1];
  return out;
}

Weight apply_word(const CartanData& c, const WeylWord& word, Weight mu) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    mu = apply_reflection(c, *it, mu);
  return mu;
}

WeylElement identity_element(const CartanData& c) {
  return WeylElement{Weight(c.rank, 1)};
}

bool is_identity(const WeylElement& e) {
  return std::all_of(e.rho_image.begin(), e.rho_image.end(),
                     [](int v) { return v == 1; });
}

WeylElement element_of(const CartanData& c, const WeylWord& word) {
  Weight v(c.rank, 1);
  for (int i : word) v = apply_reflection(c, i, v);
  return WeylElement{std::move(v)};
}

// Strips the element to the identity by right multiplication with descents
// (an entry < 0 in the stored vector marks a right descent); the letters,
// reversed, spell a reduced word.
WeylWord reduced_word(const CartanData& c, const WeylElement& e) {
  Weight v = e.rho_image;
  WeylWord stripped;
  for (;;) {
    int desc = 0;
    for (int i = 1; i <= c.rank; ++i) {
      if (v[i - 1] < 0) {
        desc = i;
        break;
      }
    }
    if (desc == 0) break;
    stripped.push_back(desc);
    v = apply_reflection(c, desc, v);
  }
  if (!std::all_of(v.begin(), v.end(), [](int x) { return x == 1; }))
    throw InconsistencyError("descent strip did not reach the identity");
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

int length(const CartanData& c, const WeylElement& e) {
  return static_cast<int>(reduced_word(c, e).size());
}

WeylElement inverse(const CartanData& c, const WeylElement& e) {
  WeylWord w = reduced_word(c, e);
  std::reverse(w.begin(), w.end());
  return element_of(c, w);
}

bool is_reduced(const CartanData& c, const WeylWord& word) {
  return length(c, element_of(c, word)) == static_cast<int>(word.size());
}

WeylWord longest_element(const CartanData& c, const std::vector<int>& subset) {
  Weight v(c.rank, 1);
  WeylWord word;
  for (;;) {
    int pick = 0;
    for (int i : subset) {
      if (v.at(i - 1) > 0 && (pick == 0 || i < pick)) pick = i;
    }
    if (pick == 0) break;
    word.push_back(pick);
    v = apply_reflection(c, pick, v);
  }
  return word;
}

WeylWord canonical_wP_word(const CominusculeSpace& s) {
  WeylWord w;
  const int n = s.n;
  switch (s.family) {
    case Family::Grassmannian:
      // (s_{n-k}...s_{n-1})(s_{n-k-1}...s_{n-2})...(s_1...s_k)
      for (int b = n - s.k; b >= 1; --b)
        for (int i = b; i < b + s.k; ++i) w.push_back(i);
      break;
    case Family::OddQuadric:
      for (int i = 1; i <= n; ++i) w.push_back(i);
      for (int i = n - 1; i >= 1; --i) w.push_back(i);
      break;
    case Family::EvenQuadric:
      for (int i = 1; i <= n - 2; ++i) w.push_back(i);
      w.push_back(n - 1);
      w.push_back(n);
      for (int i = n - 2; i >= 1; --i) w.push_back(i);
      break;
    case Family::LagrangianGrassmannian:
      for (int b = n; b >= 1; --b)
        for (int i = b; i <= n; ++i) w.push_back(i);
      break;
    case Family::OrthogonalGrassmannian:
      // runs (s_{n-1-j}...s_{n-2}) between tail letters that alternate
      // between s_{n-1} and s_n; the final tail is s_n
      for (int j = 0; j <= n - 2; ++j) {
        for (int i = n - 1 - j; i <= n - 2; ++i) w.push_back(i);
        w.push_back((n + j) % 2 == 1 ? n - 1 : n);
      }
      break;
    case Family::CayleyPlane:
      w = {1, 3, 4, 2, 5, 6, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6};
      break;
    case Family::Freudenthal:
      w = {7, 6, 5, 4, 2, 3, 4, 5, 6, 7, 1, 3, 4, 2,
           5, 6, 4, 5, 3, 4, 2, 1, 3, 4, 5, 6, 7};
      break;
  }
  return w;
}

WPrimeData compute_wprime(const CartanData& c_dual, int k,
                          const WeylWord& wP_word) {
  std::vector<int> others;
  for (int i = 1; i <= c_dual.rank; ++i)
    if (i != k) others.push_back(i);

  WeylWord wop = longest_element(c_dual, others);

  // Minimal coset representative of w_{o,P} s_k W_P: strip right descents
  // within the parabolic.
  wop.push_back(k);
  Weight v = element_of(c_dual, wop).rho_image;
  for (;;) {
    int pick = 0;
    for (int i : others) {
      if (v[i - 1] < 0) {
        pick = i;
        break;
      }
    }
    if (pick == 0) break;
    v = apply_reflection(c_dual, pick, v);
  }
  WeylElement wPprime{v};
  WeylWord wPprime_word = reduced_word(c_dual, wPprime);

  // w' = w^P (w_P')^{-1}: the stored vector of w' is w_P' applied (as a map)
  // to the stored vector of w^P.
  WeylElement wP = element_of(c_dual, wP_word);
  WeylElement wprime{apply_word(c_dual, wPprime_word, wP.rho_image)};

  const int ellP = static_cast<int>(wP_word.size());
  const int ellPP = static_cast<int>(wPprime_word.size());
  const int ellprime = length(c_dual, wprime);
  if (ellprime + ellPP != ellP) {
    std::ostringstream msg;
    msg << "l(w') + l(w_P') = " << ellprime << " + " << ellPP
        << " != l(w^P) = " << ellP;
    throw InconsistencyError(msg.str());
  }
  return WPrimeData{std::move(wprime), ellprime, std::move(wPprime_word)};
}

namespace {

// Feasibility machinery for the subexpression search.  All elements here are
// encoded by their FORWARD rho image w.rho (left multiplication by s_i is a
// reflection on that vector, and entry i < 0 marks a left descent).
struct SubwordSearch {
  const CartanData& c;
  const WeylWord& word;
  int ell;
  Weight rho;
  Weight start; // forward image of w'
  std::set<Weight> right_factors;
  std::vector<std::set<Weight>> formable; // formable[p]: from positions >= p

  SubwordSearch(const CartanData& cartan, const WeylWord& w,
                const WeylElement& wprime)
      : c(cartan), word(w), ell(static_cast<int>(w.size())),
        rho(cartan.rank, 1) {
    // forward image of w' from its stored (inverse) image
    WeylWord wp_word = reduced_word(c, wprime);
    start = apply_word(c, wp_word, rho);

    // right factors of w', closed under stripping left descents
    std::vector<Weight> stack{start};
    while (!stack.empty()) {
      Weight v = stack.back();
      stack.pop_back();
      if (!right_factors.insert(v).second) continue;
      for (int i = 1; i <= c.rank; ++i)
        if (v[i - 1] < 0) stack.push_back(apply_reflection(c, i, v));
    }

    // formable[p] = right factors expressible as reduced increasing
    // subwords of positions p..ell
    formable.assign(ell + 2, {});
    formable[ell + 1] = {rho};
    for (int p = ell; p >= 1; --p) {
      formable[p] = formable[p + 1];
      const int b = word[p - 1];
      for (const Weight& v : formable[p + 1]) {
        if (v[b - 1] > 0) {
          Weight w2 = apply_reflection(c, b, v);
          if (right_factors.count(w2)) formable[p].insert(w2);
        }
      }
    }
  }

  // Emits, in lexicographic order, every increasing index sequence whose
  // subword reduces the remaining quotient to the identity.  With
  // `first_only` the search stops after one result (the lex-minimal one).
  void enumerate(std::vector<SubexprIndexSet>& out, bool first_only) const {
    SubexprIndexSet idx;
    dfs(1, start, idx, out, first_only);
  }

private:
  void dfs(int p, const Weight& rem, SubexprIndexSet& idx,
           std::vector<SubexprIndexSet>& out, bool first_only) const {
    if (rem == rho) {
      out.push_back(idx);
      return;
    }
    if (p > ell) return;
    if (first_only && !out.empty()) return;
    const int b = word[p - 1];
    if (rem[b - 1] < 0) {
      Weight next = apply_reflection(c, b, rem);
      if (formable[p + 1].count(next)) {
        idx.push_back(p);
        dfs(p + 1, next, idx, out, first_only);
        idx.pop_back();
        if (first_only && !out.empty()) return;
      }
    }
    if (formable[p + 1].count(rem)) dfs(p + 1, rem, idx, out, first_only);
  }
};

} // namespace

std::vector<SubexprIndexSet> enumerate_subexpressions_bruteforce(
    const CartanData& c_dual, const WeylWord& wP_word,
    const WeylElement& wprime, int ellprime) {
  SubwordSearch search(c_dual, wP_word, wprime);
  std::vector<SubexprIndexSet> out;
  search.enumerate(out, false);
  for (const auto& s : out) {
    if (static_cast<int>(s.size()) != ellprime)
      throw InconsistencyError("subexpression of unexpected length");
  }
  return out;
}

SubexprIndexSet lex_minimal_subexpression(const CartanData& c_dual,
                                          const WeylWord& wP_word,
                                          const WeylElement& wprime,
                                          int ellprime) {
  SubwordSearch search(c_dual, wP_word, wprime);
  std::vector<SubexprIndexSet> out;
  search.enumerate(out, true);
  if (out.empty() || static_cast<int>(out.front().size()) != ellprime)
    throw InconsistencyError("no subexpression of the requested length");
  return out.front();
}

} // namespace lgpot
