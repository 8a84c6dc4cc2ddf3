#pragma once

#include "mcgcoh/presentation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mcgcoh {

enum class RelatorTag { disjointness, braid, chain, hyperlantern };

std::string_view to_string(RelatorTag tag);

/// Wajnryb's presentation of the mapping class group over the Humphries
/// generators c1, b1, ..., cg, bg, a2. Equalities L = R are stored as L R^-1.
struct WajnrybPresentation {
  int genus = 0;
  Presentation presentation;
  std::vector<RelatorTag> tags;

  std::size_t count(RelatorTag tag) const;
};

std::vector<std::string> humphries_generators(int genus);

/// genus == 1 gives <c1, b1 | braid>; genus == 2 is rejected (UnsupportedGenus).
WajnrybPresentation wajnryb_presentation(int genus);

/// Auxiliary words of the chain and lantern relations, fully expanded.
struct AuxiliaryWords {
  Word w;
  Word w1, w2, w3, w4;
  Word x1, x2, x3, x4;
};

/// Requires genus >= 3.
AuxiliaryWords auxiliary_words(int genus);

/// Word C_j with C_j a2 C_j^-1 equal to the twist about alpha_j (2 <= j <= genus).
///
/// For j = 3 this is w4: x4 is the twist about the fourth boundary curve of
/// the lantern bounded by alpha_1, gamma_2, gamma_3 and alpha_3, so
/// w4(alpha_2) = alpha_3. For j > 3 the same lantern construction is
/// transported one handle to the right: alpha_{j-2}, beta_{j-2}, gamma_{j-1},
/// beta_{j-1}, gamma_j, beta_j, alpha_{j-1} play the roles of c1, b1, c2, b2,
/// c3, b3, a2, which gives C_j = w4' C_{j-1}.
Word alpha_conjugator(int genus, int j);

/// A word representing the twist about alpha_j: c1 for j = 1, a2 for j = 2,
/// and C_j a2 C_j^-1 beyond.
Word alpha_twist_word(int genus, int j);

}  // namespace mcgcoh
