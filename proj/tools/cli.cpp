#include "cli.hpp"

#include <charconv>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "nonevade/certifier.hpp"
#include "nonevade/chain_game.hpp"
#include "nonevade/corpus.hpp"
#include "nonevade/crosscheck.hpp"
#include "nonevade/error.hpp"
#include "nonevade/generate.hpp"
#include "nonevade/json_io.hpp"
#include "nonevade/lattice_io.hpp"
#include "nonevade/oracles.hpp"
#include "nonevade/order_complex.hpp"

namespace nonevade::cli {

using nlohmann::json;

namespace {

std::size_t parse_cap(std::string_view key, std::string_view value) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || ptr != value.data() + value.size() || v == 0)
    throw std::invalid_argument("cap '" + std::string(key) + "' must be a positive integer");
  return v;
}

bool is_semantic(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidOrder:
    case ErrorCode::CycleDetected:
    case ErrorCode::NoUniqueBottom:
    case ErrorCode::NoUniqueTop:
    case ErrorCode::NotALattice:
    case ErrorCode::NotFreePair:
    case ErrorCode::ReplayMismatch:
    case ErrorCode::InternalAssertion:
    case ErrorCode::TraceMismatch:
    case ErrorCode::VerificationFailed:
    case ErrorCode::GroundMismatch:
      return true;
    default:
      return false;
  }
}

std::string join(const std::vector<std::string>& items, std::string_view sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

// Writes `doc` to the -o path, or to stdout when none was given.
void emit_document(const RunConfig& cfg, const json& doc, std::ostream& out) {
  if (cfg.output.empty()) {
    out << dump(doc);
  } else {
    write_file(cfg.output, dump(doc));
  }
}

struct Instance {
  Lattice lattice;
  ElementIndex x;
};

Instance load_instance(const RunConfig& cfg) {
  if (cfg.element.empty()) throw Error(ErrorCode::UnknownElement, "this command requires -x ELEMENT");
  Lattice lattice = load_lattice(cfg.input);
  const ElementIndex x = lattice.index_of(cfg.element);
  if (!lattice.is_interior(x))
    throw Error(ErrorCode::ElementOnBoundary, "'" + cfg.element + "' is the bottom or top");
  return {std::move(lattice), x};
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  const Lattice lattice = load_lattice(cfg.input);
  const auto atoms = labels_of(lattice, lattice.atoms());
  const auto coatoms = labels_of(lattice, lattice.coatoms());
  if (cfg.json) {
    out << dump({{"valid", true},
                 {"size", lattice.size()},
                 {"bottom", lattice.label(lattice.bottom())},
                 {"top", lattice.label(lattice.top())},
                 {"atoms", atoms},
                 {"coatoms", coatoms}});
  } else {
    out << "lattice: " << lattice.size() << " elements\n"
        << "bottom: " << lattice.label(lattice.bottom()) << "\n"
        << "top: " << lattice.label(lattice.top()) << "\n"
        << "atoms: " << join(atoms) << "\n"
        << "coatoms: " << join(coatoms) << "\n";
  }
  return kExitOk;
}

int cmd_complements(const RunConfig& cfg, std::ostream& out) {
  const Lattice lattice = load_lattice(cfg.input);
  const ElementIndex x = lattice.index_of(cfg.element);
  const auto co = labels_of(lattice, complements(lattice, x));
  if (cfg.json) {
    out << dump({{"element", cfg.element}, {"complements", co}});
  } else {
    out << "Co(" << cfg.element << ") = {" << join(co, ",") << "}\n";
  }
  return kExitOk;
}

json trace_summary(const CertifyTrace& trace) {
  std::map<std::string, std::size_t> counts;
  for (const auto& e : trace.entries) ++counts[std::string(decision_name(e.decision))];
  return {{"steps", trace.entries.size()}, {"decisions", counts}};
}

std::string describe_root(const Certificate& cert) {
  if (auto* l = std::get_if<LeafNode>(&cert.node)) return "leaf " + l->vertex;
  if (auto* p = std::get_if<PruneNode>(&cert.node)) return "prune {" + join(p->removed, ",") + "}";
  const auto& s = std::get<SplitNode>(cert.node);
  return "split at " + s.vertex + " (" + std::string(split_mode_name(s.mode)) + ", z = " + s.context.z + ")";
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
  const auto inst = load_instance(cfg);
  const auto result = certify(inst.lattice, inst.x);
  const json cert = to_json(*result.certificate);
  if (!cfg.output.empty()) write_file(cfg.output, dump(cert));
  if (cfg.json) {
    json doc = {{"root", describe_root(*result.certificate)}, {"trace", trace_summary(result.trace)}};
    if (cfg.output.empty()) doc["certificate"] = cert;
    out << dump(doc);
    return kExitOk;
  }
  out << "root: " << describe_root(*result.certificate) << "\n"
      << "nodes: " << certificate_size(*result.certificate) << "\n"
      << "trace: " << result.trace.entries.size() << " steps";
  const json summary = trace_summary(result.trace);
  for (const auto& [name, count] : summary["decisions"].items()) out << ", " << name << " " << count.get<std::size_t>();
  out << "\n";
  if (cfg.output.empty()) out << dump(cert);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto inst = load_instance(cfg);
  if (cfg.cert_path.empty()) throw Error(ErrorCode::IoError, "verify requires --cert FILE");
  const auto cert = certificate_from_json(parse_json(read_file(cfg.cert_path)));
  const Complex complex = order_complex(interior_without_complements(inst.lattice, inst.x));
  const auto verdict = verify_certificate(complex, *cert);
  if (cfg.json) {
    json doc = {{"verified", verdict.ok}};
    if (!verdict) doc.update({{"path", verdict.path}, {"reason", verdict.reason}});
    out << dump(doc);
  } else if (verdict) {
    out << "verified: certificate is valid for " << complex.vertex_count() << " vertices\n";
  } else {
    out << "verification failed at " << verdict.path << ": " << verdict.reason << "\n";
  }
  return verdict ? kExitOk : kExitFailure;
}

int cmd_collapse(const RunConfig& cfg, std::ostream& out) {
  const auto inst = load_instance(cfg);
  const Complex complex = order_complex(interior_without_complements(inst.lattice, inst.x));
  const auto result = certify(inst.lattice, inst.x);
  // extract_collapses replays the sequence before returning it.
  const auto seq = extract_collapses(*result.certificate, complex);
  emit_document(cfg, to_json(seq), out);
  if (!cfg.output.empty() && !cfg.json)
    out << "collapse sequence: " << seq.pairs.size() << " pairs over " << complex.face_count()
        << " faces, final vertex " << seq.final_vertex << "\n";
  return kExitOk;
}

int cmd_strategy(const RunConfig& cfg, std::ostream& out) {
  const auto inst = load_instance(cfg);
  const auto ground = interior_without_complements(inst.lattice, inst.x).labels();
  const auto result = certify(inst.lattice, inst.x);
  const auto strategy = compile_strategy(*result.certificate, ground);
  emit_document(cfg, to_json(*strategy), out);
  if (!cfg.output.empty() && !cfg.json)
    out << "strategy: at most " << strategy_depth(*strategy) << " queries over " << ground.size()
        << " elements\n";
  return kExitOk;
}

std::set<std::string> split_hidden(const std::string& spec) {
  std::set<std::string> out;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.insert(item);
  return out;
}

int cmd_game(const RunConfig& cfg, std::ostream& out) {
  const auto inst = load_instance(cfg);
  const auto ground = interior_without_complements(inst.lattice, inst.x).labels();
  const auto result = certify(inst.lattice, inst.x);
  const auto strategy = compile_strategy(*result.certificate, ground);

  if (cfg.exhaustive == cfg.hidden.has_value())
    throw std::invalid_argument("game needs exactly one of --exhaustive or --hidden");

  if (cfg.hidden) {
    const auto hidden = split_hidden(*cfg.hidden);
    for (const auto& h : hidden)
      if (std::ranges::find(ground, h) == ground.end())
        throw Error(ErrorCode::UnknownElement, "'" + h + "' is not in the ground set");
    const auto t = play(*strategy, hidden);
    if (cfg.json) {
      out << dump(to_json(t));
    } else {
      for (const auto& [v, answer] : t.queries) out << "is " << v << " in A? " << (answer ? "yes" : "no") << "\n";
      out << "verdict: " << (t.verdict ? "chain" : "not a chain") << " after " << t.queries.size()
          << " queries\n";
    }
    return kExitOk;
  }

  const auto report = exhaustive_check(*strategy, ground, inst.lattice, cfg.caps.game);
  const bool ok = report.mismatches == 0 && report.repeated_queries == 0 &&
                  report.max_queries + 1 <= report.ground_size;
  if (cfg.json) {
    json doc = to_json(report);
    doc["within_budget"] = report.max_queries + 1 <= report.ground_size;
    out << dump(doc);
  } else {
    out << "ground: " << report.ground_size << " elements\n"
        << "subsets: " << report.subsets_tested << " (" << report.chains << " chains)\n"
        << "mismatches: " << report.mismatches << "\n"
        << "max queries: " << report.max_queries << " (budget " << report.ground_size - 1 << ")\n"
        << "histogram:";
    for (auto [q, plays] : report.histogram) out << " " << q << ":" << plays;
    out << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_mobius(const RunConfig& cfg, std::ostream& out) {
  const Lattice lattice = load_lattice(cfg.input);
  const auto mu = mobius(lattice);
  const auto chi = interior_reduced_euler(lattice);
  const auto witness = find_noncomplemented_element(lattice);
  if (cfg.json) {
    out << dump({{"mobius", mu},
                 {"reduced_euler", chi},
                 {"noncomplemented", witness ? json(lattice.label(*witness)) : json(nullptr)}});
  } else {
    out << "mobius: " << mu << "\n"
        << "reduced euler: " << chi << "\n"
        << "noncomplemented element: " << (witness ? lattice.label(*witness) : "none") << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out) {
  const auto inst = load_instance(cfg);
  const Complex complex = order_complex(interior_without_complements(inst.lattice, inst.x));
  const bool nonevasive = brute_nonevasive(complex, cfg.caps.nonevasive);
  const auto collapses = brute_collapsible(complex, cfg.caps.collapsible);
  const auto chi = reduced_euler(complex);
  if (cfg.json) {
    out << dump({{"vertices", complex.vertex_count()},
                 {"faces", complex.face_count()},
                 {"nonevasive", nonevasive},
                 {"collapsible", collapses.has_value()},
                 {"collapses", collapses ? to_json(*collapses) : json(nullptr)},
                 {"reduced_euler", chi}});
  } else {
    out << "vertices: " << complex.vertex_count() << "\n"
        << "faces: " << complex.face_count() << "\n"
        << "nonevasive: " << (nonevasive ? "yes" : "no") << "\n"
        << "collapsible: "
        << (collapses ? "yes (" + std::to_string(collapses->pairs.size()) + " pairs)" : std::string("no"))
        << "\n"
        << "reduced euler: " << chi << "\n";
  }
  return nonevasive ? kExitOk : kExitFailure;
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  FamilyParams params;
  params.n = cfg.n;
  params.m = cfg.m;
  params.edge_probability = cfg.edge_probability;
  params.seed = cfg.seed;
  const Lattice lattice = generate(cfg.family, params);
  std::ostringstream comment;
  comment << "gen " << cfg.family << " n=" << cfg.n;
  if (cfg.family == "product") comment << " m=" << cfg.m;
  if (cfg.family == "random") comment << " p=" << cfg.edge_probability << " seed=" << cfg.seed;
  const std::string text = format_lattice(lattice, comment.str());
  if (cfg.output.empty()) {
    out << text;
  } else {
    write_file(cfg.output, text);
  }
  return kExitOk;
}

int cmd_suite(const RunConfig& cfg, std::ostream& out) {
  CorpusOptions options;
  options.random_count = cfg.random_count;
  options.seed = cfg.seed;
  const auto corpus = build_corpus(options);
  SuiteCaps caps;
  caps.nonevasive = cfg.caps.nonevasive;
  caps.game = cfg.caps.game;
  caps.collapsible = cfg.caps.collapsible;
  caps.oracle_interior = std::min<std::size_t>(10, caps.nonevasive);
  const auto report = run_suite(corpus, caps);

  std::size_t oracle_runs = 0, game_runs = 0, failed = 0;
  for (const auto& r : report.instances) {
    oracle_runs += r.oracle_run;
    game_runs += r.game_run;
    failed += !r.ok();
  }
  std::size_t crapo_failed = 0;
  for (const auto& l : report.lattices) crapo_failed += !l.crapo_ok;

  if (cfg.json) {
    json instances = json::array();
    for (const auto& r : report.instances)
      instances.push_back({{"lattice", r.lattice},
                           {"element", r.element},
                           {"interior_size", r.interior_size},
                           {"faces", r.faces},
                           {"collapse_pairs", r.pairs},
                           {"max_queries", r.game_run ? json(r.max_queries) : json(nullptr)},
                           {"ok", r.ok()},
                           {"failures", r.failures}});
    json lattices = json::array();
    for (const auto& l : report.lattices)
      lattices.push_back({{"name", l.name},
                          {"provenance", l.provenance},
                          {"size", l.size},
                          {"mobius", l.mobius},
                          {"reduced_euler", l.reduced_euler},
                          {"noncomplemented", l.noncomplemented},
                          {"ok", l.crapo_ok}});
    out << dump({{"seed", cfg.seed},
                 {"random_count", cfg.random_count},
                 {"caps", {{"nonevasive", caps.nonevasive}, {"game", caps.game}, {"collapsible", caps.collapsible}}},
                 {"lattices", lattices},
                 {"instances", instances},
                 {"ok", report.ok()}});
  } else {
    out << "seed " << cfg.seed << ", " << report.lattices.size() << " lattices, "
        << report.instances.size() << " instances\n";
    for (const auto& r : report.instances) {
      if (r.ok()) continue;
      out << "FAIL " << r.lattice << " x=" << r.element << ": " << join(r.failures, "; ") << "\n";
    }
    for (const auto& l : report.lattices)
      if (!l.crapo_ok)
        out << "FAIL " << l.name << ": mobius " << l.mobius << ", reduced euler " << l.reduced_euler << "\n";
    out << "certified and verified: " << report.instances.size() - failed << "/" << report.instances.size() << "\n"
        << "oracle checked: " << oracle_runs << ", game checked: " << game_runs << "\n"
        << "mobius/euler agreement: " << report.lattices.size() - crapo_failed << "/" << report.lattices.size()
        << "\n"
        << (report.ok() ? "suite: PASS" : "suite: FAIL") << "\n";
  }
  return report.ok() ? kExitOk : kExitFailure;
}

void report_error(const RunConfig& cfg, std::ostream& err, std::string_view code, const std::string& message,
                  const json& details = nullptr) {
  if (cfg.json) {
    json doc = {{"error", code}, {"message", message}};
    if (!details.is_null()) doc["details"] = details;
    err << doc.dump() << "\n";
  } else {
    err << "error: " << message << "\n";
  }
}

}  // namespace

Caps resolve_caps(const CapOverrides& flags, const char* env) {
  Caps caps;
  if (env && *env) {
    std::stringstream in(env);
    std::string item;
    while (std::getline(in, item, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("NONEVADE_CAPS entry '" + item + "' lacks '='");
      const auto key = item.substr(0, eq);
      const auto value = parse_cap(key, item.substr(eq + 1));
      if (key == "nonevasive") caps.nonevasive = value;
      else if (key == "game") caps.game = value;
      else if (key == "collapsible") caps.collapsible = value;
      else throw std::invalid_argument("unknown cap '" + key + "' in NONEVADE_CAPS");
    }
  }
  if (flags.nonevasive) caps.nonevasive = parse_cap("nonevasive", std::to_string(*flags.nonevasive));
  if (flags.game) caps.game = parse_cap("game", std::to_string(*flags.game));
  if (flags.collapsible) caps.collapsible = parse_cap("collapsible", std::to_string(*flags.collapsible));
  return caps;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "validate") return cmd_validate(cfg, out);
    if (cfg.command == "complements") return cmd_complements(cfg, out);
    if (cfg.command == "certify") return cmd_certify(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "collapse") return cmd_collapse(cfg, out);
    if (cfg.command == "strategy") return cmd_strategy(cfg, out);
    if (cfg.command == "game") return cmd_game(cfg, out);
    if (cfg.command == "mobius") return cmd_mobius(cfg, out);
    if (cfg.command == "oracle") return cmd_oracle(cfg, out);
    if (cfg.command == "gen") return cmd_gen(cfg, out);
    if (cfg.command == "suite") return cmd_suite(cfg, out);
    report_error(cfg, err, "UsageError", "unknown command '" + cfg.command + "'");
    return kExitUsage;
  } catch (const NotALatticeError& e) {
    report_error(cfg, err, error_code_name(e.code()), e.what(),
                 {{"u", e.first()}, {"v", e.second()}, {"witnesses", e.witnesses()}});
    return kExitFailure;
  } catch (const Error& e) {
    report_error(cfg, err, error_code_name(e.code()), e.what());
    return is_semantic(e.code()) ? kExitFailure : kExitUsage;
  } catch (const std::invalid_argument& e) {
    report_error(cfg, err, "UsageError", e.what());
    return kExitUsage;
  }
}

std::variant<RunConfig, int> parse_command_line(int argc, const char* const* argv, std::ostream& out,
                                                std::ostream& err) {
  RunConfig cfg;
  CapOverrides caps;
  CLI::App app{"Certify nonevasiveness of order complexes of lattices with complements removed"};
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "Machine-readable output; errors as JSON on stderr");

  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input, "Lattice file (cover list or JSON)")->required();
  };
  auto with_element = [&](CLI::App* sub) {
    sub->add_option("-x,--element", cfg.element, "Interior element x")->required();
  };
  auto with_output = [&](CLI::App* sub) { sub->add_option("-o,--output", cfg.output, "Output path"); };
  auto with_caps = [&](CLI::App* sub) {
    sub->add_option("--cap-nonevasive", caps.nonevasive, "Vertex cap for the nonevasiveness oracle");
    sub->add_option("--cap-game", caps.game, "Ground-set cap for exhaustive games");
    sub->add_option("--cap-collapsible", caps.collapsible, "Face cap for the collapsibility oracle");
  };

  auto* validate = app.add_subcommand("validate", "Check a lattice file; print atoms and coatoms");
  with_file(validate);

  auto* comp = app.add_subcommand("complements", "Print the complements of an element");
  with_file(comp);
  with_element(comp);

  auto* cert = app.add_subcommand("certify", "Certify nonevasiveness of the complex");
  with_file(cert);
  with_element(cert);
  with_output(cert);

  auto* verify = app.add_subcommand("verify", "Check a certificate against the complex");
  with_file(verify);
  with_element(verify);
  verify->add_option("--cert", cfg.cert_path, "Certificate JSON")->required();

  auto* collapse = app.add_subcommand("collapse", "Emit a replay-checked collapse sequence");
  with_file(collapse);
  with_element(collapse);
  with_output(collapse);

  auto* strategy = app.add_subcommand("strategy", "Compile the chain-membership query strategy");
  with_file(strategy);
  with_element(strategy);
  with_output(strategy);

  auto* game = app.add_subcommand("game", "Play the chain game exhaustively or for one hidden set");
  with_file(game);
  with_element(game);
  with_caps(game);
  auto* exhaustive = game->add_flag("--exhaustive", cfg.exhaustive, "Play every hidden subset");
  auto* hidden = game->add_option("--hidden", cfg.hidden, "Hidden subset, comma separated");
  exhaustive->excludes(hidden);

  auto* mob = app.add_subcommand("mobius", "Mobius function and reduced Euler characteristic");
  with_file(mob);

  auto* oracle = app.add_subcommand("oracle", "Run the brute-force oracles on the complex");
  with_file(oracle);
  with_element(oracle);
  with_caps(oracle);

  auto* gen = app.add_subcommand("gen", "Generate a lattice file");
  gen->add_option("family", cfg.family, "chain|boolean|divisor|partition|product|diamond|pentagon|random")
      ->required();
  gen->add_option("--n", cfg.n, "Size parameter");
  gen->add_option("--m", cfg.m, "Second factor (product)");
  gen->add_option("--p", cfg.edge_probability, "Edge probability (random)");
  gen->add_option("--seed", cfg.seed, "Seed (random)");
  with_output(gen);

  auto* suite = app.add_subcommand("suite", "Cross-check the whole corpus");
  with_caps(suite);
  suite->add_option("--seed", cfg.seed, "Seed for the random corpus lattices");
  suite->add_option("--random-count", cfg.random_count, "Number of random lattices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    cfg.caps = resolve_caps(caps, std::getenv("NONEVADE_CAPS"));
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return cfg;
}

}  // namespace nonevade::cli
