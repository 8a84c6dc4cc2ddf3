#include "mcgcoh/cli.hpp"

#include "mcgcoh/cocycle.hpp"
#include "mcgcoh/errors.hpp"
#include "mcgcoh/json_io.hpp"
#include "mcgcoh/wajnryb.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

namespace mcgcoh::cli {
namespace {

using json_io::Json;

enum class Format { text, json };

struct CliConfig {
  int genus = 0;
  bool genus_given = false;
  std::string presentation_path;
  std::string representation_path;
  std::string cocycle_path;
  std::string word;
  std::string aux;
  std::string target = "S";
  Format format = Format::text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::MalformedInput, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedGenus:
    case ErrorCode::InvalidGenus: return unsupported;
    case ErrorCode::NotACocycle:
    case ErrorCode::NotAdaptedToS:
    case ErrorCode::NotProportional: return semantic_failure;
    default: return input_error;
  }
}

void print_cocycle_text(std::ostream& out, const CocycleAssignment& u, const std::string& indent) {
  for (std::size_t i = 0; i < u.generators().size(); ++i) {
    out << indent << u.generators()[i] << ' ' << to_string(std::span<const Integer>(u.value(i))) << '\n';
  }
}

Representation humphries_rep(int genus) { return humphries_representation(genus).second; }

CocycleAssignment load_cocycle_or_default(const CliConfig& cfg, const Representation& rep) {
  if (!cfg.cocycle_path.empty()) {
    return json_io::cocycle_from_json(json_io::parse(read_file(cfg.cocycle_path)), rep);
  }
  return theorem1_cocycle(cfg.genus);
}

int cmd_present(const CliConfig& cfg, std::ostream& out) {
  const WajnrybPresentation wp = wajnryb_presentation(cfg.genus);
  if (cfg.format == Format::json) {
    out << json_io::to_json(wp).dump(2) << '\n';
  } else {
    std::vector<std::string> tags;
    for (auto t : wp.tags) tags.emplace_back(to_string(t));
    out << "# Wajnryb presentation, genus " << cfg.genus << ": " << wp.presentation.generator_count()
        << " generators, " << wp.presentation.relators().size() << " relators\n";
    out << format_presentation(wp.presentation, tags);
  }
  return ok;
}

int cmd_h1(const CliConfig& cfg, std::ostream& out) {
  CohomologyResult result;
  if (cfg.genus_given) {
    if (!cfg.presentation_path.empty() || !cfg.representation_path.empty()) {
      throw Error(ErrorCode::MalformedInput, "--genus cannot be combined with --presentation/--rep");
    }
    result = compute_mapping_class_h1(cfg.genus);
  } else {
    if (cfg.presentation_path.empty() || cfg.representation_path.empty()) {
      throw Error(ErrorCode::MalformedInput, "h1 needs --genus or both --presentation and --rep");
    }
    const Presentation p = parse_presentation(read_file(cfg.presentation_path));
    const Representation rep = json_io::representation_from_json(json_io::parse(read_file(cfg.representation_path)));
    result = compute_h1(p, rep);
  }

  if (cfg.format == Format::json) {
    Json j = json_io::to_json(result.h1);
    j["z1_rank"] = result.z1_rank;
    j["b1_rank"] = result.b1_rank;
    Json gens = Json::array();
    for (const auto& u : result.generator_cocycles) gens.push_back(json_io::to_json(u));
    j["generators"] = std::move(gens);
    out << j.dump(2) << '\n';
    return ok;
  }
  out << "H1 = " << to_string(result.h1) << '\n';
  out << "rank: " << result.h1.rank << '\n';
  out << "torsion: " << json_io::to_json(result.h1.torsion).dump() << '\n';
  out << "z1_rank: " << result.z1_rank << '\n';
  out << "b1_rank: " << result.b1_rank << '\n';
  for (std::size_t i = 0; i < result.generator_cocycles.size(); ++i) {
    out << "generator " << i + 1 << ":\n";
    print_cocycle_text(out, result.generator_cocycles[i], "  ");
  }
  return ok;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  const WajnrybPresentation wp = wajnryb_presentation(cfg.genus);
  const Representation rep = humphries_rep(cfg.genus);
  const CocycleAssignment u = load_cocycle_or_default(cfg, rep);
  const VerificationReport report = verify_cocycle(u, wp.presentation, rep);

  std::vector<std::string> tags;
  for (auto t : wp.tags) tags.emplace_back(to_string(t));
  if (cfg.format == Format::json) {
    out << json_io::to_json(report, tags).dump(2) << '\n';
  } else {
    for (const auto& c : report.checks) {
      out << "relator " << c.relator_index << " [" << tags[c.relator_index] << "] "
          << (c.ok ? "ok" : "FAIL residue " + to_string(std::span<const Integer>(c.residue))) << '\n';
    }
    out << (report.passed() ? "all " + std::to_string(report.checks.size()) + " relators pass"
                            : std::to_string(report.failures()) + " of " + std::to_string(report.checks.size()) +
                                  " relators fail")
        << '\n';
  }
  return report.passed() ? ok : semantic_failure;
}

int cmd_eval(const CliConfig& cfg, std::ostream& out) {
  const Representation rep = humphries_rep(cfg.genus);
  Word w;
  if (!cfg.aux.empty()) {
    if (!cfg.word.empty()) throw Error(ErrorCode::MalformedInput, "--word and --aux are exclusive");
    const AuxiliaryWords aux = auxiliary_words(cfg.genus);
    const std::vector<std::pair<std::string, const Word*>> table = {
        {"w", &aux.w},   {"w1", &aux.w1}, {"w2", &aux.w2}, {"w3", &aux.w3}, {"w4", &aux.w4},
        {"x1", &aux.x1}, {"x2", &aux.x2}, {"x3", &aux.x3}, {"x4", &aux.x4}};
    const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == cfg.aux; });
    if (it == table.end()) throw Error(ErrorCode::MalformedInput, "unknown auxiliary word '" + cfg.aux + "'");
    w = *it->second;
  } else {
    w = parse_word(cfg.word, rep.generators());
  }
  const CocycleAssignment u = load_cocycle_or_default(cfg, rep);
  const IntVector v = evaluate(u, rep, w);
  if (cfg.format == Format::json) {
    out << json_io::to_json(v).dump() << '\n';
  } else {
    out << to_string(std::span<const Integer>(v)) << '\n';
  }
  return ok;
}

int cmd_adapt(const CliConfig& cfg, std::ostream& out) {
  if (cfg.target != "S" && cfg.target != "Sprime") {
    throw Error(ErrorCode::MalformedInput, "--target must be S or Sprime");
  }
  const Representation rep = humphries_rep(cfg.genus);
  const CocycleAssignment u = json_io::cocycle_from_json(json_io::parse(read_file(cfg.cocycle_path)), rep);
  Adaptation result = adapt_to_S(u, rep);
  if (cfg.target == "Sprime") {
    const Adaptation second = adapt_to_Sprime(result.adapted, rep);
    result = Adaptation{second.adapted, result.shift + second.shift};
  }
  if (cfg.format == Format::json) {
    Json j;
    j["target"] = cfg.target;
    j["shift"] = json_io::to_json(result.shift.coords());
    j["cocycle"] = json_io::to_json(result.adapted);
    out << j.dump(2) << '\n';
  } else {
    out << "target: " << cfg.target << '\n';
    out << "shift: " << to_string(result.shift) << '\n';
    out << "cocycle:\n";
    print_cocycle_text(out, result.adapted, "  ");
  }
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted first cohomology of the mapping class group with coefficients in H_1", "mcgcoh"};
  app.require_subcommand(1);
  CliConfig cfg;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};

  auto add_genus = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-g,--genus", cfg.genus, "Surface genus");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("-f,--format", cfg.format, "Output format: text or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  auto* present = app.add_subcommand("present", "Emit the Wajnryb presentation");
  add_genus(present, true);
  add_format(present);

  auto* h1 = app.add_subcommand("h1", "Compute H^1 of a presentation with module coefficients");
  add_genus(h1, false);
  h1->add_option("--presentation", cfg.presentation_path, "Presentation text file");
  h1->add_option("--rep", cfg.representation_path, "Representation JSON file");
  add_format(h1);

  auto* verify = app.add_subcommand("verify", "Check a cocycle against every Wajnryb relator");
  add_genus(verify, true);
  verify->add_option("--cocycle", cfg.cocycle_path, "Cocycle JSON (default: the generator cocycle)");
  add_format(verify);

  auto* eval = app.add_subcommand("eval", "Evaluate a cocycle on a word");
  add_genus(eval, true);
  eval->add_option("-w,--word", cfg.word, "Word over c1 b1 ... cg bg a2");
  eval->add_option("--aux", cfg.aux, "Auxiliary word name instead of --word (w, w1..w4, x1..x4)");
  eval->add_option("--cocycle", cfg.cocycle_path, "Cocycle JSON (default: the generator cocycle)");
  add_format(eval);

  auto* adapt = app.add_subcommand("adapt", "Normalize a cocycle by adding a coboundary");
  add_genus(adapt, true);
  adapt->add_option("--cocycle", cfg.cocycle_path, "Cocycle JSON")->required();
  adapt->add_option("--target", cfg.target, "S or Sprime");
  add_format(adapt);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }
  cfg.genus_given = h1->count("--genus") > 0;

  try {
    if (present->parsed()) return cmd_present(cfg, out);
    if (h1->parsed()) return cmd_h1(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (eval->parsed()) return cmd_eval(cfg, out);
    if (adapt->parsed()) return cmd_adapt(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.code() == ErrorCode::UnsupportedGenus) {
      err << "note: only genus 1 and genus >= 3 are supported; genus 2 would need a different relation set\n";
    }
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace mcgcoh::cli
