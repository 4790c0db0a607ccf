#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>

#include "fbc/automorphism_text.hpp"
#include "fbc/error.hpp"
#include "fbc/finite_quotients.hpp"
#include "fbc/free_map.hpp"
#include "fbc/intlin.hpp"
#include "fbc/mapping_torus.hpp"
#include "fbc/version.hpp"
#include "fbc/word_text.hpp"

namespace fbc::cli {

const std::vector<std::string> kCommands = {"parse",  "invert",    "compose",     "b1",     "h1",
                                            "stretch", "atoroidal", "fingerprint", "compare"};

namespace {

using nlohmann::json;

// Two stretch estimates closer than this are treated as equal.
constexpr double kStretchTolerance = 0.02;

std::string read_input(const std::string& value) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(value, ec)) return value;
  std::ifstream in(value);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json big_to_json(const BigInt& x) {
  if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min()) {
    return x.convert_to<std::int64_t>();
  }
  return x.str();
}

std::string torsion_text(const std::vector<BigInt>& torsion) {
  if (torsion.empty()) return "none";
  std::string s;
  for (const auto& d : torsion) s += (s.empty() ? "Z/" : " + Z/") + d.str();
  return s;
}

std::string h1_text(const AbelianInvariants& h) {
  std::vector<std::string> parts;
  if (h.betti == 1) parts.emplace_back("Z");
  if (h.betti > 1) parts.push_back("Z^" + std::to_string(h.betti));
  for (const auto& d : h.torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "0";
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : " + ") + p;
  return s;
}

json invariants_json(const AbelianInvariants& h) {
  json torsion = json::array();
  for (const auto& d : h.torsion) torsion.push_back(big_to_json(d));
  return {{"betti", h.betti}, {"torsion", torsion}};
}

struct Report {
  json inputs = json::object();
  json results = json::object();
  json diagnostics = json::object();
  std::vector<std::string> lines;

  void line(const std::string& key, const std::string& value) { lines.push_back(key + ": " + value); }
};

/// A group given either as the mapping torus of an automorphism or as a
/// presentation.
struct Subject {
  std::optional<FreeMap> map;
  Presentation presentation;
  std::string echo;
};

FreeMap load_map(const std::string& value, const RunConfig& config) {
  return parse_automorphism(read_input(value), config.rank);
}

Subject load_subject(const std::string& map, const std::string& presentation, const RunConfig& config) {
  if (!map.empty()) {
    FreeMap f = load_map(map, config);
    Presentation p = mapping_torus_presentation(f);
    std::string echo = format_automorphism(f);
    return {std::move(f), std::move(p), std::move(echo)};
  }
  Presentation p = parse_presentation(read_input(presentation));
  std::string echo = format_presentation(p);
  return {std::nullopt, std::move(p), std::move(echo)};
}

AbelianInvariants invariants_of(const Subject& s) {
  return s.map ? mapping_torus_invariants(*s.map) : abelian_invariants(s.presentation);
}

json seed_diagnostics(const StretchEstimate& e) {
  const auto& best = e.seeds[e.best_seed];
  return {{"converged", e.converged},
          {"truncated", e.truncated},
          {"best_seed", format_word(best.seed)},
          {"iterations", best.lengths.empty() ? 0 : best.lengths.size() - 1},
          {"window", {best.window.first, best.window.second}}};
}

StretchOptions stretch_options(const RunConfig& config) {
  StretchOptions opts;
  opts.depth = config.depth;
  opts.length_cap = config.length_cap;
  opts.workers = config.workers;
  return opts;
}

std::vector<FiniteGroup> library_of(const RunConfig& config) {
  auto lib = standard_library(config.deep);
  for (const auto& path : config.group_files) lib.push_back(load_permutation_group_file(path));
  return lib;
}

std::unique_ptr<FingerprintCache> cache_of(const RunConfig& config) {
  if (config.cache_file.empty() || config.no_cache) return nullptr;
  return std::make_unique<FingerprintCache>(config.cache_file);
}

json fingerprint_json(const Fingerprint& fp) {
  json entries = json::array();
  for (const auto& e : fp.entries) {
    entries.push_back({{"label", e.label}, {"order", e.order}, {"homs", e.homs}, {"epis", e.epis}});
  }
  return entries;
}

std::string fingerprint_line(const FingerprintEntry& e) {
  return e.label + " order " + std::to_string(e.order) + " homs " + std::to_string(e.homs) + " epis " +
         std::to_string(e.epis);
}

void echo_subject(Report& r, const std::string& key, const Subject& s) {
  r.inputs[key] = s.echo;
}

std::string subject_key(const Subject& s, const std::string& suffix) {
  return (s.map ? "map" : "presentation") + suffix;
}

// Commands

void cmd_parse(const RunConfig& config, Report& r) {
  const FreeMap f = load_map(config.map, config);
  r.inputs["map"] = format_automorphism(f);
  const bool automorphism = invert(f).has_value();
  r.results = {{"map", format_automorphism(f)},
               {"rank", f.rank()},
               {"max_image_length", f.max_image_length()},
               {"automorphism", automorphism}};
  r.line("map", format_automorphism(f));
  r.line("rank", std::to_string(f.rank()));
  r.line("max_image_length", std::to_string(f.max_image_length()));
  r.line("automorphism", automorphism ? "yes" : "no");
}

void cmd_invert(const RunConfig& config, Report& r) {
  const FreeMap f = load_map(config.map, config);
  r.inputs["map"] = format_automorphism(f);
  const auto g = invert(f);
  if (!g) throw NotAutomorphism("not an automorphism: " + format_automorphism(f));
  r.results = {{"inverse", format_automorphism(*g)}};
  r.line("inverse", format_automorphism(*g));
}

void cmd_compose(const RunConfig& config, Report& r) {
  const FreeMap f = load_map(config.map1, config);
  const FreeMap g = load_map(config.map2, config);
  r.inputs["map1"] = format_automorphism(f);
  r.inputs["map2"] = format_automorphism(g);
  const FreeMap h = compose(f, g);
  r.results = {{"composite", format_automorphism(h)}};
  r.diagnostics["order"] = "map1 after map2";
  r.line("composite", format_automorphism(h));
}

void cmd_b1(const RunConfig& config, Report& r) {
  const Subject s = load_subject(config.map, config.presentation, config);
  echo_subject(r, subject_key(s, ""), s);
  const AbelianInvariants h = invariants_of(s);
  r.results = invariants_json(h);
  r.line("betti", std::to_string(h.betti));
  r.line("torsion", torsion_text(h.torsion));
}

void cmd_h1(const RunConfig& config, Report& r) {
  const Subject s = load_subject(config.map, config.presentation, config);
  echo_subject(r, subject_key(s, ""), s);
  const AbelianInvariants h = invariants_of(s);
  r.results = invariants_json(h);
  r.results["h1"] = h1_text(h);
  r.results["presentation"] = format_presentation(s.presentation);
  r.line("H1", h1_text(h));
  r.line("betti", std::to_string(h.betti));
  r.line("torsion", torsion_text(h.torsion));
  if (s.map) {
    const IntMatrix a = abelianization_matrix(*s.map) - IntMatrix::identity(static_cast<std::size_t>(s.map->rank()));
    const BigInt det = determinant(a);
    r.results["det_a_minus_i"] = big_to_json(det);
    r.line("det(A - I)", det.str());
  }
  r.line("presentation", format_presentation(s.presentation));
}

void cmd_stretch(const RunConfig& config, Report& r) {
  const FreeMap f = load_map(config.map, config);
  r.inputs["map"] = format_automorphism(f);
  r.inputs["depth"] = config.depth;
  r.inputs["length_cap"] = config.length_cap;
  const StretchPair pair = stretch_pair(f, stretch_options(config));
  r.results = {{"lambda_plus", pair.forward.lambda_hat},
               {"lambda_minus", pair.inverse.lambda_hat},
               {"min", pair.min()},
               {"max", pair.max()}};
  r.diagnostics = {{"forward", seed_diagnostics(pair.forward)}, {"inverse", seed_diagnostics(pair.inverse)}};
  r.line("lambda_plus", format_double(pair.forward.lambda_hat));
  r.line("lambda_minus", format_double(pair.inverse.lambda_hat));
  r.line("min", format_double(pair.min()));
  r.line("max", format_double(pair.max()));
  r.line("converged", std::string(pair.forward.converged ? "yes" : "no") + " / " +
                          (pair.inverse.converged ? "yes" : "no"));
  if (pair.forward.truncated || pair.inverse.truncated) {
    r.line("note", "orbits truncated at length cap " + std::to_string(config.length_cap));
  }
}

void cmd_atoroidal(const RunConfig& config, Report& r) {
  const FreeMap f = load_map(config.map, config);
  r.inputs["map"] = format_automorphism(f);
  r.inputs["max_len"] = config.max_len;
  r.inputs["max_period"] = config.max_period;
  const ScanResult scan = scan_periodic_classes(f, {config.max_len, config.max_period, config.workers});
  json orbits = json::array();
  for (const auto& o : scan.orbits) {
    orbits.push_back({{"rep", format_word(o.rep.to_word())}, {"period", o.period}});
  }
  r.results = {{"orbits", orbits}, {"periodic_found", !scan.orbits.empty()}};
  r.diagnostics = {{"candidates", scan.candidates}, {"bounded_search", true}};
  if (scan.orbits.empty()) {
    r.line("periodic classes", "none with length <= " + std::to_string(config.max_len) +
                                   " and period <= " + std::to_string(config.max_period) +
                                   " (bounded search, not a proof)");
  }
  for (const auto& o : scan.orbits) {
    r.line("periodic", "[" + format_word(o.rep.to_word()) + "] period " + std::to_string(o.period));
  }
  r.line("candidates", std::to_string(scan.candidates));
}

void cmd_fingerprint(const RunConfig& config, Report& r) {
  const Subject s = load_subject(config.map, config.presentation, config);
  echo_subject(r, subject_key(s, ""), s);
  const auto lib = library_of(config);
  auto cache = cache_of(config);
  const Fingerprint fp = fingerprint(s.presentation, lib, {config.workers}, cache.get());
  r.results = {{"hash", presentation_hash(s.presentation)}, {"entries", fingerprint_json(fp)}};
  r.diagnostics["library_size"] = lib.size();
  if (cache) r.diagnostics["cache"] = {{"path", config.cache_file}, {"hits", cache->hits()}};
  r.line("hash", presentation_hash(s.presentation));
  for (const auto& e : fp.entries) r.lines.push_back(fingerprint_line(e));
}

void cmd_compare(const RunConfig& config, Report& r) {
  const Subject a = load_subject(config.map1, config.presentation1, config);
  const Subject b = load_subject(config.map2, config.presentation2, config);
  echo_subject(r, subject_key(a, "1"), a);
  echo_subject(r, subject_key(b, "2"), b);

  bool distinguished = false;
  json checks = json::object();

  // free rank of the fibre and b₁
  const AbelianInvariants ha = invariants_of(a), hb = invariants_of(b);
  if (a.map && b.map) {
    const bool same_rank = a.map->rank() == b.map->rank();
    checks["rank"] = {{"first", a.map->rank()}, {"second", b.map->rank()}, {"same", same_rank}};
    r.line("rank", std::to_string(a.map->rank()) + " vs " + std::to_string(b.map->rank()) +
                       (same_rank ? " (same)" : " (differ)"));
  }
  const bool same_h1 = ha == hb;
  distinguished |= !same_h1;
  checks["h1"] = {{"first", invariants_json(ha)}, {"second", invariants_json(hb)}, {"same", same_h1}};
  r.line("H1", h1_text(ha) + " vs " + h1_text(hb) + (same_h1 ? " (same)" : " (differ)"));

  if (a.map && b.map) {
    const auto opts = stretch_options(config);
    const StretchPair pa = stretch_pair(*a.map, opts), pb = stretch_pair(*b.map, opts);
    const bool all_converged =
        pa.forward.converged && pa.inverse.converged && pb.forward.converged && pb.inverse.converged;
    const bool close = std::abs(pa.min() - pb.min()) <= kStretchTolerance &&
                       std::abs(pa.max() - pb.max()) <= kStretchTolerance;
    distinguished |= all_converged && !close;
    checks["stretch"] = {{"first", {pa.min(), pa.max()}},
                         {"second", {pb.min(), pb.max()}},
                         {"tolerance", kStretchTolerance},
                         {"converged", all_converged},
                         {"same", close}};
    r.line("stretch pair", "(" + format_double(pa.min()) + ", " + format_double(pa.max()) + ") vs (" +
                               format_double(pb.min()) + ", " + format_double(pb.max()) + ")" +
                               (close ? " (same within tolerance)" : " (differ)"));
  }

  const auto lib = library_of(config);
  auto cache = cache_of(config);
  const Fingerprint fa = fingerprint(a.presentation, lib, {config.workers}, cache.get());
  const Fingerprint fb = fingerprint(b.presentation, lib, {config.workers}, cache.get());
  const FingerprintComparison cmp = compare_fingerprints(fa, fb);
  distinguished |= !cmp.identical;
  checks["fingerprint"] = {{"same", cmp.identical}, {"summary", cmp.describe(fa, fb)}};
  r.line("fingerprint", cmp.describe(fa, fb));
  if (cache) r.diagnostics["cache"] = {{"path", config.cache_file}, {"hits", cache->hits()}};

  r.results = {{"checks", checks}, {"distinguished", distinguished}};
  r.line("verdict", distinguished ? "distinguished"
                                  : "not distinguished (consistent with profinite isomorphism, not a proof)");
}

using Handler = void (*)(const RunConfig&, Report&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"parse", cmd_parse},     {"invert", cmd_invert},       {"compose", cmd_compose},
      {"b1", cmd_b1},           {"h1", cmd_h1},               {"stretch", cmd_stretch},
      {"atoroidal", cmd_atoroidal}, {"fingerprint", cmd_fingerprint}, {"compare", cmd_compare},
  };
  return table;
}

json versions() { return {{"fbc", kVersion}, {"format", 1}}; }

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void validate(const RunConfig& config) {
  if (!handlers().count(config.command)) throw UsageError("unknown command: " + config.command);
  const std::map<std::string, bool> given = {
      {"--map", !config.map.empty()},
      {"--map1", !config.map1.empty()},
      {"--map2", !config.map2.empty()},
      {"--presentation", !config.presentation.empty()},
      {"--presentation1", !config.presentation1.empty()},
      {"--presentation2", !config.presentation2.empty()},
  };
  std::vector<std::vector<std::string>> slots;  // each slot needs exactly one of its flags
  const std::string& c = config.command;
  if (c == "parse" || c == "invert" || c == "stretch" || c == "atoroidal") {
    slots = {{"--map"}};
  } else if (c == "compose") {
    slots = {{"--map1"}, {"--map2"}};
  } else if (c == "b1" || c == "h1" || c == "fingerprint") {
    slots = {{"--map", "--presentation"}};
  } else {
    slots = {{"--map1", "--presentation1"}, {"--map2", "--presentation2"}};
  }
  std::vector<std::string> allowed;
  for (const auto& slot : slots) {
    int count = 0;
    for (const auto& flag : slot) count += given.at(flag);
    if (count != 1) {
      std::string names;
      for (const auto& flag : slot) names += (names.empty() ? "" : " or ") + flag;
      throw UsageError(c + " needs exactly one of " + names);
    }
    allowed.insert(allowed.end(), slot.begin(), slot.end());
  }
  for (const auto& [flag, present] : given) {
    if (present && std::find(allowed.begin(), allowed.end(), flag) == allowed.end()) {
      throw UsageError(flag + " is not used by " + c);
    }
  }
  if (config.rank && (*config.rank < 1 || *config.rank > 26)) throw UsageError("--rank must be in 1..26");
  if (config.depth < 1 || config.length_cap < 1 || config.max_len < 1 || config.max_period < 1 ||
      config.workers < 1) {
    throw UsageError("numeric parameters must be positive");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  int code = kOk;
  std::string kind, message;
  try {
    validate(config);
    handlers().at(config.command)(config, report);
  } catch (const UsageError& e) {
    code = kUsage, kind = "UsageError", message = e.what();
  } catch (const NotAutomorphism& e) {
    code = kNotAutomorphism, kind = "NotAutomorphism", message = e.what();
  } catch (const CapacityExceeded& e) {
    code = kCapHit, kind = "CapacityExceeded", message = e.what();
  } catch (const OrderCapExceeded& e) {
    code = kCapHit, kind = "OrderCapExceeded", message = e.what();
  } catch (const ParseError& e) {
    code = kUsage, kind = "ParseError", message = e.what();
  } catch (const DuplicateRule& e) {
    code = kUsage, kind = "DuplicateRule", message = e.what();
  } catch (const MissingGenerator& e) {
    code = kUsage, kind = "MissingGenerator", message = e.what();
  } catch (const Error& e) {
    code = kUsage, kind = "Error", message = e.what();
  } catch (const std::invalid_argument& e) {
    code = kUsage, kind = "InvalidArgument", message = e.what();
  }

  if (config.json) {
    json doc = {{"command", config.command}, {"inputs", report.inputs}, {"versions", versions()}};
    if (code == kOk) {
      doc["results"] = report.results;
      doc["diagnostics"] = report.diagnostics;
    } else {
      doc["error"] = {{"kind", kind}, {"message", message}, {"exit_code", code}};
    }
    out << doc.dump(2) << '\n';
  } else if (code == kOk) {
    for (const auto& l : report.lines) out << l << '\n';
  }
  if (code != kOk) err << "fbc " << config.command << ": " << kind << ": " << message << '\n';
  return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.workers = std::max(1u, std::thread::hardware_concurrency());
  double length_cap = static_cast<double>(config.length_cap);

  CLI::App app{"Invariants of free-by-cyclic groups F_r x| Z.", "fbc"};
  app.add_option("command", config.command, "One of: parse invert compose b1 h1 stretch atoroidal fingerprint compare")
      ->required()
      ->check(CLI::IsMember(kCommands));
  app.add_option("--map", config.map, "Automorphism, e.g. \"a->b; b->c; c->cA\", or a file")->envname("FBC_MAP");
  app.add_option("--map1", config.map1, "First automorphism")->envname("FBC_MAP1");
  app.add_option("--map2", config.map2, "Second automorphism")->envname("FBC_MAP2");
  app.add_option("--presentation", config.presentation, "Presentation text or file")->envname("FBC_PRESENTATION");
  app.add_option("--presentation1", config.presentation1)->envname("FBC_PRESENTATION1");
  app.add_option("--presentation2", config.presentation2)->envname("FBC_PRESENTATION2");
  app.add_option("--rank", config.rank, "Rank of the free group (default: inferred)")->envname("FBC_RANK");
  app.add_option("--depth", config.depth, "Iterations for stretch estimates")
      ->check(CLI::PositiveNumber)
      ->envname("FBC_DEPTH");
  app.add_option("--length-cap", length_cap, "Stop iterating past this cyclic length")
      ->check(CLI::PositiveNumber)
      ->envname("FBC_LENGTH_CAP");
  app.add_option("--max-len", config.max_len, "Longest conjugacy class to scan")
      ->check(CLI::PositiveNumber)
      ->envname("FBC_MAX_LEN");
  app.add_option("--max-period", config.max_period, "Largest period to scan")
      ->check(CLI::PositiveNumber)
      ->envname("FBC_MAX_PERIOD");
  app.add_flag("--deep", config.deep, "Add S5 to the group library")->envname("FBC_DEEP");
  app.add_option("--group-file", config.group_files, "Extra library group: permutation generators, one per line")
      ->check(CLI::ExistingFile)
      ->envname("FBC_GROUP_FILE");
  app.add_flag("--json", config.json, "Structured output")->envname("FBC_JSON");
  app.add_option("--cache-file", config.cache_file, "Fingerprint cache file")->envname("FBC_CACHE_FILE");
  app.add_flag("--no-cache", config.no_cache, "Ignore --cache-file")->envname("FBC_NO_CACHE");
  app.add_option("--workers", config.workers, "Worker threads")->check(CLI::PositiveNumber)->envname("FBC_WORKERS");
  app.set_version_flag("--version", kVersion);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (length_cap > static_cast<double>(std::numeric_limits<std::uint64_t>::max() / 2)) {
    err << "fbc: --length-cap is too large\n";
    return kUsage;
  }
  config.length_cap = static_cast<std::uint64_t>(length_cap);
  return run(config, out, err);
}

}  // namespace fbc::cli
