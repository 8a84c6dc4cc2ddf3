#include "mcgcoh/presentation.hpp"

#include "mcgcoh/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace mcgcoh {
namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<std::string_view> split_tokens(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string_view strip_comment(std::string_view line) {
  if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  return line;
}

bool is_blank(std::string_view line) { return std::all_of(line.begin(), line.end(), is_space); }

void validate_name(std::string_view name) {
  if (name.empty() || name.find('^') != std::string_view::npos ||
      std::any_of(name.begin(), name.end(), is_space) || name.find('#') != std::string_view::npos) {
    throw Error(ErrorCode::InvalidGeneratorName, "invalid generator name '" + std::string(name) + "'");
  }
}

}  // namespace

Word& Word::operator*=(const Word& rhs) {
  letters_.insert(letters_.end(), rhs.letters_.begin(), rhs.letters_.end());
  return *this;
}

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(Letter{it->generator, !it->inverse});
  }
  return Word(std::move(out));
}

Word concat(const Word& w1, const Word& w2) { return Word(w1) *= w2; }

Word power(const Word& w, std::size_t times) {
  Word out;
  for (std::size_t i = 0; i < times; ++i) out *= w;
  return out;
}

Word parse_word(std::string_view text, std::span<const std::string> generators) {
  std::vector<Letter> letters;
  for (std::string_view token : split_tokens(text)) {
    bool inverse = false;
    if (const auto caret = token.find('^'); caret != std::string_view::npos) {
      if (token.substr(caret) != "^-1") {
        throw Error(ErrorCode::SyntaxError,
                    "bad exponent in '" + std::string(token) + "' (only ^-1 is accepted)");
      }
      inverse = true;
      token = token.substr(0, caret);
    }
    const auto it = std::find(generators.begin(), generators.end(), token);
    if (it == generators.end()) {
      throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + std::string(token) + "'");
    }
    letters.push_back(Letter{static_cast<std::size_t>(it - generators.begin()), inverse});
  }
  return Word(std::move(letters));
}

std::string to_string(const Word& w, std::span<const std::string> generators) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (l.generator >= generators.size()) {
      throw Error(ErrorCode::UnknownGenerator,
                  "generator index " + std::to_string(l.generator) + " out of range");
    }
    if (!out.empty()) out += ' ';
    out += generators[l.generator];
    if (l.inverse) out += "^-1";
  }
  return out;
}

Presentation::Presentation(std::vector<std::string> generators, std::vector<Word> relators)
    : generators_(std::move(generators)), relators_(std::move(relators)) {
  if (generators_.empty()) throw Error(ErrorCode::EmptyGeneratorList, "presentation has no generators");
  std::set<std::string_view> seen;
  for (const auto& g : generators_) {
    validate_name(g);
    if (!seen.insert(g).second) throw Error(ErrorCode::DuplicateGenerator, "duplicate generator '" + g + "'");
  }
  for (const Word& r : relators_) {
    for (const Letter& l : r.letters()) {
      if (l.generator >= generators_.size()) {
        throw Error(ErrorCode::UnknownGenerator, "relator references an undeclared generator");
      }
    }
  }
}

std::optional<std::size_t> Presentation::index_of(std::string_view name) const {
  const auto it = std::find(generators_.begin(), generators_.end(), name);
  if (it == generators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - generators_.begin());
}

std::size_t Presentation::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + std::string(name) + "'");
}

Presentation parse_presentation(std::string_view text) {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  bool have_generators = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = strip_comment(line);
    if (is_blank(line)) continue;
    if (!have_generators) {
      for (auto tok : split_tokens(line)) generators.emplace_back(tok);
      have_generators = true;
      if (generators.empty()) break;
      std::set<std::string_view> seen;
      for (const auto& g : generators) {
        validate_name(g);
        if (!seen.insert(g).second) {
          throw Error(ErrorCode::DuplicateGenerator,
                      "duplicate generator '" + g + "' on line " + std::to_string(line_no));
        }
      }
      continue;
    }
    try {
      relators.push_back(parse_word(line, generators));
    } catch (const Error& e) {
      throw Error(e.code(), e.detail() + " (line " + std::to_string(line_no) + ")");
    }
  }
  if (generators.empty()) throw Error(ErrorCode::EmptyGeneratorList, "no generator line found");
  return Presentation(std::move(generators), std::move(relators));
}

std::string format_presentation(const Presentation& p, std::span<const std::string> annotations) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.generators().size(); ++i) {
    if (i) os << ' ';
    os << p.generators()[i];
  }
  os << '\n';
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    os << to_string(p.relators()[i], p.generators());
    if (i < annotations.size() && !annotations[i].empty()) os << "  # " << annotations[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace mcgcoh
