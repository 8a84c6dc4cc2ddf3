#include "mcgcoh/json_io.hpp"

#include "mcgcoh/errors.hpp"

#include <set>

namespace mcgcoh::json_io {
namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::optional<int> read_genus(const Json& j) {
  if (!j.contains("genus")) return std::nullopt;
  const Json& g = j.at("genus");
  if (!g.is_number_integer()) malformed("'genus' must be an integer");
  return g.get<int>();
}

}  // namespace

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) malformed("bad integer string '" + j.get<std::string>() + "'");
    return x;
  }
  malformed("expected an integer, got " + j.dump());
}

Json to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of integers");
  IntVector out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(integer_from_json(x));
  return out;
}

Json to_json(const Representation& rep) {
  Json out;
  if (rep.genus()) {
    out["genus"] = *rep.genus();
  } else {
    out["dimension"] = rep.dimension();
  }
  Json gens = Json::array();
  for (std::size_t i = 0; i < rep.generator_count(); ++i) {
    Json rows = Json::array();
    const IntMatrix& m = rep.matrix(i);
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
    gens.push_back(Json{{"name", rep.generators()[i]}, {"matrix", std::move(rows)}});
  }
  out["generators"] = std::move(gens);
  return out;
}

Representation representation_from_json(const Json& j) {
  const std::optional<int> genus = read_genus(j);
  std::optional<std::size_t> dimension;
  if (j.contains("dimension")) {
    if (!j.at("dimension").is_number_unsigned()) malformed("'dimension' must be a nonnegative integer");
    dimension = j.at("dimension").get<std::size_t>();
  }
  if (!genus && !dimension) malformed("representation needs 'genus' or 'dimension'");
  if (genus && dimension && *dimension != static_cast<std::size_t>(2 * *genus)) {
    malformed("'dimension' must equal twice 'genus'");
  }
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) malformed("'generators' must be an array");
  std::vector<std::string> names;
  std::vector<IntMatrix> matrices;
  const std::size_t n = genus ? static_cast<std::size_t>(2 * *genus) : *dimension;
  for (const auto& g : gens) {
    const Json& name = field(g, "name");
    if (!name.is_string()) malformed("generator name must be a string");
    const Json& rows = field(g, "matrix");
    if (!rows.is_array() || rows.size() != n) malformed("matrix for '" + name.get<std::string>() + "' needs " +
                                                          std::to_string(n) + " rows");
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      const IntVector row = vector_from_json(rows[r]);
      if (row.size() != n) malformed("matrix row has the wrong length");
      for (std::size_t c = 0; c < n; ++c) m(r, c) = row[c];
    }
    names.push_back(name.get<std::string>());
    matrices.push_back(std::move(m));
  }
  return Representation(std::move(names), std::move(matrices), genus);
}

Json to_json(const WajnrybPresentation& p) {
  Json out;
  out["genus"] = p.genus;
  out["generators"] = p.presentation.generators();
  Json rels = Json::array();
  for (std::size_t i = 0; i < p.presentation.relators().size(); ++i) {
    rels.push_back(Json{{"tag", std::string(to_string(p.tags.at(i)))},
                        {"word", to_string(p.presentation.relators()[i], p.presentation.generators())}});
  }
  out["relators"] = std::move(rels);
  return out;
}

TaggedPresentation presentation_from_json(const Json& j) {
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) malformed("'generators' must be an array");
  std::vector<std::string> names;
  for (const auto& g : gens) {
    if (!g.is_string()) malformed("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  std::vector<Word> relators;
  std::vector<std::string> tags;
  if (j.contains("relators")) {
    for (const auto& r : j.at("relators")) {
      const Json& word = field(r, "word");
      if (!word.is_string()) malformed("relator word must be a string");
      relators.push_back(parse_word(word.get<std::string>(), names));
      tags.push_back(r.contains("tag") && r.at("tag").is_string() ? r.at("tag").get<std::string>() : "");
    }
  }
  return {Presentation(std::move(names), std::move(relators)), std::move(tags)};
}

Json to_json(const CocycleAssignment& u) {
  Json out;
  if (u.genus()) {
    out["genus"] = *u.genus();
  } else {
    out["dimension"] = u.dimension();
  }
  Json values = Json::object();
  for (std::size_t i = 0; i < u.generators().size(); ++i) values[u.generators()[i]] = to_json(u.value(i));
  out["values"] = std::move(values);
  return out;
}

CocycleAssignment cocycle_from_json(const Json& j, const Representation& rep) {
  const std::optional<int> genus = read_genus(j);
  if (genus && rep.genus() != genus) {
    throw Error(ErrorCode::GenusMismatch, "cocycle genus " + std::to_string(*genus) + " does not match");
  }
  const Json& values = field(j, "values");
  if (!values.is_object()) malformed("'values' must be an object");
  for (const auto& [name, _] : values.items()) {
    if (!rep.index_of(name)) throw Error(ErrorCode::UnknownGenerator, "unknown generator '" + name + "'");
  }
  std::vector<IntVector> out;
  for (const auto& name : rep.generators()) {
    if (!values.contains(name)) malformed("no value for generator '" + name + "'");
    IntVector v = vector_from_json(values.at(name));
    if (v.size() != rep.dimension()) {
      throw Error(ErrorCode::GenusMismatch, "value for '" + name + "' has " + std::to_string(v.size()) +
                                                " entries, expected " + std::to_string(rep.dimension()));
    }
    out.push_back(std::move(v));
  }
  return CocycleAssignment(rep.generators(), std::move(out), rep.dimension(), rep.genus());
}

Json to_json(const VerificationReport& report, std::span<const std::string> tags) {
  Json out = Json::array();
  for (const auto& c : report.checks) {
    Json entry;
    entry["relator_index"] = c.relator_index;
    entry["tag"] = c.relator_index < tags.size() ? tags[c.relator_index] : std::string();
    entry["ok"] = c.ok;
    entry["residue"] = to_json(c.residue);
    out.push_back(std::move(entry));
  }
  return out;
}

Json to_json(const AbelianInvariants& inv) {
  return Json{{"rank", inv.rank}, {"torsion", to_json(inv.torsion)}};
}

AbelianInvariants invariants_from_json(const Json& j) {
  AbelianInvariants inv;
  const Json& rank = field(j, "rank");
  if (!rank.is_number_unsigned()) malformed("'rank' must be a nonnegative integer");
  inv.rank = rank.get<std::size_t>();
  inv.torsion = vector_from_json(field(j, "torsion"));
  return inv;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace mcgcoh::json_io
