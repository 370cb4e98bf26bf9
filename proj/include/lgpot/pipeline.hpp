#pragma once

#include <optional>

#include "lgpot/potential.hpp"
#include "lgpot/quiver.hpp"
#include "lgpot/rootdata.hpp"
#include "lgpot/weyl.hpp"

namespace lgpot {

/// Everything computed for one space: dual root data, the fixed word, w',
/// the quiver, the subset family and the assembled potential.
struct SpacePotential {
  CominusculeSpace space;
  SpaceData data;
  CartanData dual;
  WeylWord word;
  WPrimeData wprime;
  Quiver quiver;
  std::vector<SubexprIndexSet> subsets; // via quiver moves, sorted lex
  LaurentPotential potential;
};

/// Runs the pipeline on the canonical word, or on word_override if given.
/// An override must be a reduced word multiplying to w^P; anything else
/// throws InvalidParameters before any computation.
SpacePotential compute_potential(
    const CominusculeSpace& space,
    const std::optional<WeylWord>& word_override = std::nullopt);

} // namespace lgpot
