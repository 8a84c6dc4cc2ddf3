#include "mcgcoh/wajnryb.hpp"

#include "mcgcoh/errors.hpp"
#include "mcgcoh/symplectic.hpp"

#include <algorithm>

namespace mcgcoh {
namespace {

void require_full_genus(int genus) {
  if (genus < 1) throw Error(ErrorCode::InvalidGenus, "genus must be at least 1");
  if (genus < 3) {
    throw Error(ErrorCode::UnsupportedGenus,
                "the lantern relation needs gamma_3; genus " + std::to_string(genus) + " is not supported");
  }
}

// Replaces every letter s^{+-1} by images[s]^{+-1}.
Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (const Letter& l : w.letters()) {
    const Word& img = images.at(l.generator);
    out *= l.inverse ? invert(img) : img;
  }
  return out;
}

Word commutator_relator(std::size_t x, std::size_t y) {
  return Word({{x, false}, {y, false}, {x, true}, {y, true}});
}

Word braid_relator(std::size_t x, std::size_t y) {
  const Word gx = Word::generator(x);
  const Word gy = Word::generator(y);
  return gx * gy * gx * invert(gy * gx * gy);
}

}  // namespace

std::string_view to_string(RelatorTag tag) {
  switch (tag) {
    case RelatorTag::disjointness: return "disjointness";
    case RelatorTag::braid: return "braid";
    case RelatorTag::chain: return "chain";
    case RelatorTag::hyperlantern: return "hyperlantern";
  }
  return "unknown";
}

std::size_t WajnrybPresentation::count(RelatorTag tag) const {
  return static_cast<std::size_t>(std::count(tags.begin(), tags.end(), tag));
}

std::vector<std::string> humphries_generators(int genus) { return CurveSystem(genus).generator_names(); }

AuxiliaryWords auxiliary_words(int genus) {
  require_full_genus(genus);
  const auto names = humphries_generators(genus);
  auto word = [&](std::string_view text) { return parse_word(text, names); };

  AuxiliaryWords aux;
  const Word a2 = word("a2");
  aux.w = word("b2 c2 b1 c1 c1 b1 c2 b2");
  aux.w1 = word("b2 c3 c2 b2");
  aux.w2 = word("b1 c2 c1 b1");
  aux.w3 = word("b3 c3");
  aux.x1 = invert(aux.w1) * a2 * aux.w1;
  aux.x2 = invert(aux.w2) * aux.x1 * aux.w2;
  aux.x3 = invert(aux.w3) * aux.x1 * aux.w3;
  aux.w4 = word("b3 c3 b2 c2 b1") * aux.x3 * word("c1^-1 b1^-1 c2^-1 b2^-1");
  aux.x4 = aux.w4 * a2 * invert(aux.w4);
  return aux;
}

WajnrybPresentation wajnryb_presentation(int genus) {
  if (genus < 1) throw Error(ErrorCode::InvalidGenus, "genus must be at least 1");
  if (genus == 2) {
    throw Error(ErrorCode::UnsupportedGenus, "genus 2 is not supported (the lantern relation needs gamma_3)");
  }
  const CurveSystem curves(genus);
  const auto& names = curves.generator_names();

  std::vector<Word> relators;
  std::vector<RelatorTag> tags;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t k = i + 1; k < names.size(); ++k) {
      if (curves.intersection(i, k) == 1) {
        relators.push_back(braid_relator(i, k));
        tags.push_back(RelatorTag::braid);
      } else {
        relators.push_back(commutator_relator(i, k));
        tags.push_back(RelatorTag::disjointness);
      }
    }
  }

  if (genus >= 3) {
    const AuxiliaryWords aux = auxiliary_words(genus);
    auto word = [&](std::string_view text) { return parse_word(text, names); };
    const Word a2 = word("a2");

    const Word chain_lhs = power(word("c1 b1 c2"), 4);
    const Word chain_rhs = a2 * aux.w * a2 * invert(aux.w);
    relators.push_back(chain_lhs * invert(chain_rhs));
    tags.push_back(RelatorTag::chain);

    const Word lantern_lhs = a2 * aux.x2 * aux.x1;
    const Word lantern_rhs = word("c1 c2 c3") * aux.x4;
    relators.push_back(lantern_lhs * invert(lantern_rhs));
    tags.push_back(RelatorTag::hyperlantern);
  }

  return WajnrybPresentation{genus, Presentation(names, std::move(relators)), std::move(tags)};
}

Word alpha_conjugator(int genus, int j) {
  if (genus < 1) throw Error(ErrorCode::InvalidGenus, "genus must be at least 1");
  if (j < 2 || j > genus) {
    throw Error(ErrorCode::IndexOutOfRange, "alpha_" + std::to_string(j) + " has no conjugator in genus " +
                                                std::to_string(genus));
  }
  if (j == 2) return Word();
  const auto names = humphries_generators(genus);
  const AuxiliaryWords aux = auxiliary_words(genus);
  auto gen = [&](std::string_view name) {
    const auto it = std::find(names.begin(), names.end(), name);
    return static_cast<std::size_t>(it - names.begin());
  };
  auto named = [&](char kind, int k) { return Word::generator(gen(std::string(1, kind) + std::to_string(k))); };

  // twist[k] is a word for the twist about alpha_k.
  std::vector<Word> twist(static_cast<std::size_t>(j) + 1);
  twist[1] = Word::generator(gen("c1"));
  twist[2] = Word::generator(gen("a2"));
  Word conjugator;  // C_2
  for (int k = 3; k <= j; ++k) {
    std::vector<Word> images;
    images.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) images.push_back(Word::generator(i));
    images[gen("c1")] = twist[k - 2];
    images[gen("b1")] = named('b', k - 2);
    images[gen("c2")] = named('c', k - 1);
    images[gen("b2")] = named('b', k - 1);
    images[gen("c3")] = named('c', k);
    images[gen("b3")] = named('b', k);
    images[gen("a2")] = twist[k - 1];
    conjugator = substitute(aux.w4, images) * conjugator;
    twist[k] = conjugator * twist[2] * invert(conjugator);
  }
  return conjugator;
}

Word alpha_twist_word(int genus, int j) {
  if (genus < 1) throw Error(ErrorCode::InvalidGenus, "genus must be at least 1");
  if (j < 1 || j > genus) {
    throw Error(ErrorCode::IndexOutOfRange, "alpha_" + std::to_string(j) + " outside genus " + std::to_string(genus));
  }
  const auto names = humphries_generators(genus);
  if (j == 1) return parse_word("c1", names);
  const Word a2 = parse_word("a2", names);
  if (j == 2) return a2;
  const Word c = alpha_conjugator(genus, j);
  return c * a2 * invert(c);
}

}  // namespace mcgcoh
