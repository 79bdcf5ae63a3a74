#include "eicat/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "eicat/classifier.hpp"
#include "eicat/constructors.hpp"
#include "eicat/freeness.hpp"
#include "eicat/io.hpp"
#include "eicat/oracle.hpp"
#include "eicat/projectivity.hpp"
#include "eicat/triangular.hpp"

namespace eicat {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const Json& j, std::ostream& out) {
  if (cfg.out.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write '" + cfg.out + "'");
  f << j.dump(2) << "\n";
}

const std::string& single_input(const RunConfig& cfg) {
  if (cfg.inputs.size() != 1) throw UsageError(cfg.command + " expects exactly one input file");
  return cfg.inputs[0];
}

FiniteCategory load_category(const std::string& path) { return validate(category_from_json(read_json_file(path))); }

// Skeleton with its admissible ordering; throws OrderError for non-EI input.
Presentation load_presentation(const std::string& path) {
  const FiniteCategory c = load_category(path);
  const auto ei = is_ei(c);
  if (!ei.ei)
    throw OrderError(OrderError::Kind::NotEI, "NotEI: endomorphism '" + c.morphism_name(*ei.witness) + "' is not invertible");
  return admissible_order(skeletalize(c).category);
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  FiniteCategory c;
  try {
    c = load_category(single_input(cfg));
  } catch (const CategoryError& e) {
    Json v = Json::array();
    for (const auto& x : e.violations()) v.push_back({{"kind", std::string(to_string(x.kind))}, {"detail", x.detail}});
    emit(cfg, Json{{"valid", false}, {"violations", std::move(v)}}, out);
    return kDomainFailure;
  }
  const auto ei = is_ei(c);
  Json j{{"valid", true},
         {"objects", c.object_count()},
         {"morphisms", c.morphism_count()},
         {"ei", ei.ei},
         {"skeletal", is_skeletal(c)}};
  if (!ei.ei) j["witness"] = c.morphism_name(*ei.witness);
  emit(cfg, j, out);
  return ei.ei ? kOk : kDomainFailure;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
  const FiniteCategory c = load_category(single_input(cfg));
  const auto r = classify(c, FieldSpec(cfg.characteristic));
  emit(cfg, report_to_json(r, cfg.explain), out);
  return kOk;
}

int cmd_freeness(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = load_presentation(single_input(cfg));
  const auto& c = p.category();
  const auto rep = is_free(p);
  Json from = Json::object();
  for (ObjectId x = 0; x < c.object_count(); ++x) from[c.object_name(x)] = static_cast<bool>(rep.free_from[x]);
  Json j{{"free", rep.free}, {"ufp_direct", ufp_direct(p)}, {"free_from", std::move(from)}};
  if (rep.counterexample) {
    const auto& ce = *rep.counterexample;
    j["counterexample"] = {{"morphism", c.morphism_name(ce.morphism)},
                           {"a", {{"first", c.morphism_name(ce.a.first)}, {"second", c.morphism_name(ce.a.second)}}},
                           {"b", {{"first", c.morphism_name(ce.b.first)}, {"second", c.morphism_name(ce.b.second)}}}};
  } else {
    j["counterexample"] = nullptr;
  }
  emit(cfg, j, out);
  return kOk;
}

int cmd_projectivity(const RunConfig& cfg, std::ostream& out) {
  const Presentation p = load_presentation(single_input(cfg));
  const auto rep = is_projective_over(p, FieldSpec(cfg.characteristic));
  Json w = Json::array();
  for (const auto& x : rep.witnesses)
    w.push_back({{"morphism", p.category().morphism_name(x.morphism)}, {"left", x.orders.left}, {"right", x.orders.right}});
  emit(cfg, Json{{"characteristic", cfg.characteristic}, {"projective", rep.projective}, {"witnesses", std::move(w)}},
       out);
  return kOk;
}

int cmd_matrix(const RunConfig& cfg, std::ostream& out) {
  const FieldSpec field(cfg.characteristic);
  const auto tp = build_triangular(load_presentation(single_input(cfg)), field);
  const bool projective = is_projective_over(tp.presentation(), field).projective;
  Json j = with_field(field, [&](auto f) { return algebra_to_json(triangular_algebra(tp, f)); });
  Json ledger = Json::array();
  for (std::size_t t = 1; t < tp.size(); ++t) {
    const std::size_t dim = m_star_dim(tp, t), phi = phi_domain_dim(tp, t);
    ledger.push_back({{"t", t},
                      {"dim", dim},
                      {"phi_domain_dim", phi},
                      {"projective", projective ? Json(dim == phi) : Json(nullptr)}});
  }
  j["m_star"] = std::move(ledger);
  emit(cfg, j, out);
  return kOk;
}

int cmd_oracle(const RunConfig& cfg, bool char_given, std::ostream& out) {
  const Json input = read_json_file(single_input(cfg));
  std::int64_t ch = cfg.characteristic;
  if (input.is_object() && input.contains("basis")) {
    if (!char_given && input.contains("characteristic")) {
      if (!input["characteristic"].is_number_unsigned()) throw ParseError("algebra: bad characteristic");
      ch = input["characteristic"].get<std::int64_t>();
    }
    const FieldSpec field(ch);
    const auto v = with_field(field, [&](auto f) {
      auto a = algebra_from_json(input, f);
      if (a.dim() > cfg.max_dim)
        throw DimensionLimitExceeded("algebra dimension " + std::to_string(a.dim()) + " exceeds the limit " +
                                     std::to_string(cfg.max_dim));
      return is_gorenstein_oracle(a, cfg.cap);
    });
    emit(cfg, verdict_to_json(v, cfg.cap, std::nullopt), out);
    return kOk;
  }
  const FieldSpec field(ch);
  const FiniteCategory c = validate(category_from_json(input));
  const auto report = classify(c, field);
  const auto tp = build_triangular(admissible_order(skeletalize(c).category), field);
  if (tp.total_dim() > cfg.max_dim)
    throw DimensionLimitExceeded("algebra dimension " + std::to_string(tp.total_dim()) + " exceeds the limit " +
                                 std::to_string(cfg.max_dim));
  const auto v = with_field(field, [&](auto f) { return is_gorenstein_oracle(triangular_algebra(tp, f), cfg.cap); });
  emit(cfg, verdict_to_json(v, cfg.cap, compare_with_oracle(report, v).all()), out);
  return kOk;
}

std::size_t parse_size(const std::string& s) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos == s.size()) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw UsageError("expected a non-negative integer, got '" + s + "'");
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  if (cfg.inputs.empty()) throw UsageError("gen needs a family: poset, transporter, group, biset or corpus");
  const std::string& family = cfg.inputs[0];
  const std::vector<std::string> params(cfg.inputs.begin() + 1, cfg.inputs.end());
  auto arity = [&](std::size_t n) {
    if (params.size() != n) throw UsageError("gen " + family + ": expected " + std::to_string(n) + " parameter(s)");
  };
  try {
    if (family == "poset") {
      if (params.empty()) throw UsageError("gen poset: expected chain N, antichain N, diamond or a poset file");
      const std::string& kind = params[0];
      std::optional<Poset> p;
      if (kind == "chain" || kind == "antichain") {
        arity(2);
        const std::size_t n = parse_size(params[1]);
        p = kind == "chain" ? Poset::chain(n) : Poset::antichain(n);
      } else if (kind == "diamond") {
        arity(1);
        p = Poset::diamond();
      } else {
        arity(1);
        p = poset_from_json(read_json_file(kind));
      }
      emit(cfg, category_to_json(poset_category(*p)), out);
    } else if (family == "transporter") {
      arity(3);
      const GroupTable g = group_from_json(read_json_file(params[0]));
      const Poset p = poset_from_json(read_json_file(params[1]));
      const GroupAction a = action_from_json(read_json_file(params[2]), g);
      emit(cfg, category_to_json(transporter_category(a, p)), out);
    } else if (family == "group") {
      arity(1);
      const auto names = named_group_names();
      const bool named = std::find(names.begin(), names.end(), params[0]) != names.end();
      const GroupTable g = named ? named_group(params[0]) : group_from_json(read_json_file(params[0]));
      emit(cfg, category_to_json(group_category(g)), out);
    } else if (family == "biset") {
      arity(1);
      FiniteCategory c;
      if (params[0] == "regular-orbit") c = examples::regular_orbit();
      else if (params[0] == "stabilized-alpha") c = examples::stabilized_alpha();
      else c = biset_category(biset_from_json(read_json_file(params[0])));
      emit(cfg, category_to_json(c), out);
    } else if (family == "corpus") {
      arity(0);
      const auto entries = corpus(cfg.seed, cfg.count);
      if (cfg.out.empty()) {
        Json all = Json::array();
        for (const auto& e : entries)
          all.push_back({{"name", e.name}, {"family", e.family}, {"category", category_to_json(e.category)}});
        out << all.dump(2) << "\n";
      } else {
        std::filesystem::create_directories(cfg.out);
        for (const auto& e : entries) {
          std::ofstream f(std::filesystem::path(cfg.out) / (e.name + ".json"));
          if (!f) throw UsageError("cannot write into '" + cfg.out + "'");
          f << category_to_json(e.category).dump(2) << "\n";
        }
      }
    } else {
      throw UsageError("unknown family '" + family + "'");
    }
  } catch (const PosetError& e) {
    throw UsageError(e.what());
  } catch (const NotOrderPreserving& e) {
    throw UsageError(e.what());
  } catch (const AssociativityFailure& e) {
    throw UsageError(e.what());
  } catch (const GroupError& e) {
    throw UsageError(e.what());
  } catch (const CategoryError& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gorenstein and freeness analysis of finite EI category algebras", "eicat"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  auto* char_opt = app.add_option("--char", cfg.characteristic, "field characteristic: 0 or a prime");
  app.add_option("--cap", cfg.cap, "largest dimension the oracle certifies")->check(CLI::PositiveNumber);
  app.add_flag("--explain", cfg.explain, "include witnesses and the M* ledger in classify output");
  app.add_option("--out", cfg.out, "output file (gen corpus: output directory)");
  app.add_option("--seed", cfg.seed, "corpus seed");
  app.add_option("--count", cfg.count, "corpus size");
  app.add_option("--max-dim", cfg.max_dim, "oracle algebra dimension limit");

  const std::vector<std::pair<const char*, const char*>> commands{
      {"validate", "check a category file"},
      {"classify", "classification report"},
      {"freeness", "unique factorization check"},
      {"projectivity", "stabilizer-order check over the field"},
      {"matrix", "structure constants of the triangular algebra with the M* ledger"},
      {"oracle", "measured self-injective and global dimensions"},
      {"gen", "generate categories: poset, transporter, group, biset, corpus"}};
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->add_option("inputs", cfg.inputs);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageFailure;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    FieldSpec check(cfg.characteristic);
    (void)check;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageFailure;
  }

  try {
    if (cfg.command == "validate") return cmd_validate(cfg, out);
    if (cfg.command == "classify") return cmd_classify(cfg, out);
    if (cfg.command == "freeness") return cmd_freeness(cfg, out);
    if (cfg.command == "projectivity") return cmd_projectivity(cfg, out);
    if (cfg.command == "matrix") return cmd_matrix(cfg, out);
    if (cfg.command == "oracle") return cmd_oracle(cfg, char_opt->count() > 0, out);
    return cmd_gen(cfg, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageFailure;
  } catch (const CategoryError& e) {
    for (const auto& v : e.violations()) err << to_string(v.kind) << ": " << v.detail << "\n";
    return kDomainFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
}

}  // namespace eicat
