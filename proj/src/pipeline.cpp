#include "lgpot/pipeline.hpp"

namespace lgpot {

SpacePotential compute_potential(const CominusculeSpace& space,
                                 const std::optional<WeylWord>& word_override) {
  SpacePotential out;
  out.space = space;
  out.data = space_data(space);
  out.dual = langlands_dual(out.data.group);

  const WeylWord canonical = canonical_wP_word(space);
  if (word_override) {
    const WeylWord& w = *word_override;
    if (w.size() != canonical.size() || !is_reduced(out.dual, w) ||
        element_of(out.dual, w) != element_of(out.dual, canonical))
      throw InvalidParameters(
          "word override must be a reduced word for w^P of " + space.name());
    out.word = w;
  } else {
    out.word = canonical;
  }

  out.wprime = compute_wprime(out.dual, out.data.k, out.word);
  out.quiver = build_quiver(out.dual, out.word);
  out.subsets =
      enumerate_by_moves(out.quiver, out.wprime.wprime, out.wprime.ellprime);
  out.potential = assemble(space.name(), static_cast<int>(out.word.size()),
                           out.word, out.subsets);
  return out;
}

} // namespace lgpot
