#include "cli.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "tetrabox/classify.hpp"
#include "tetrabox/errors.hpp"
#include "tetrabox/flags.hpp"
#include "tetrabox/json_io.hpp"
#include "tetrabox/tetra.hpp"

namespace tetrabox::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kBadInput = 2;
constexpr int kOracleDisagrees = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ModuleSpec load_spec(const std::string& path) { return jsonio::spec_from_json(jsonio::parse(read_file(path))); }

// A build output ({"spec","module","tetra"}), a bare Onsager module, or a bare
// tetrahedron module.
struct LoadedModule {
  std::optional<ModuleSpec> spec;
  std::optional<OnsagerModule> module;
  std::optional<TetraModule> tetra;
};

LoadedModule load_module(const std::string& path) {
  const json doc = jsonio::parse(read_file(path));
  if (!doc.is_object()) throw ParseError(path + ": expected a JSON object");
  LoadedModule loaded;
  if (doc.contains("module") || doc.contains("tetra")) {
    if (doc.contains("spec")) loaded.spec = jsonio::spec_from_json(doc.at("spec"));
    if (doc.contains("module")) loaded.module = jsonio::onsager_from_json(doc.at("module"));
    if (doc.contains("tetra")) loaded.tetra = jsonio::tetra_from_json(doc.at("tetra"));
  } else if (doc.contains("x")) {
    loaded.tetra = jsonio::tetra_from_json(doc);
  } else {
    loaded.module = jsonio::onsager_from_json(doc);
  }
  if (loaded.tetra && loaded.module && loaded.tetra->dim != loaded.module->dim())
    throw ParseError(path + ": module and tetra dimensions differ");
  return loaded;
}

const OnsagerModule& module_of(LoadedModule& loaded) {
  if (!loaded.module) loaded.module = OnsagerModule{(*loaded.tetra)(0, 1), (*loaded.tetra)(2, 3), std::nullopt};
  return *loaded.module;
}

// Criterion when the spec is known, Burnside test otherwise.
std::optional<std::string> reducible_reason(LoadedModule& loaded) {
  if (loaded.spec) return reducibility_reason(*loaded.spec);
  const OnsagerModule& m = module_of(loaded);
  if (m.dim() <= kOracleGuard && !is_irreducible_burnside(m))
    return std::string("reducible: (A, A*) have a common invariant subspace");
  return std::nullopt;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

Report eigentable_report(const EigenTable& table) {
  Report r;
  r.entries.push_back({"eigentable", "constant_across_pairs", table.constant_across_pairs, std::nullopt});
  r.entries.push_back({"eigentable", "symmetric", table.symmetric, std::nullopt});
  r.entries.push_back({"eigentable", "sums_to_dim", table.sums_to_dim, std::nullopt});
  r.entries.push_back({"eigentable", "all_nonzero", table.all_nonzero, std::nullopt});
  return r;
}

template <typename Fn>
int guarded(Streams io, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    io.err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const DimensionError& e) {
    io.err << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const ReducibleError& e) {
    io.err << e.what() << '\n';
    return kFailed;
  } catch (const ModuleTypeError& e) {
    io.err << "wrong type: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kFailed;
  }
}

}  // namespace

int cmd_build(const std::string& spec_path, const std::optional<std::string>& out_path, Streams io) {
  return guarded(io, [&] {
    const ModuleSpec spec = load_spec(spec_path);
    if (auto reason = reducibility_reason(spec)) {
      io.err << *reason << '\n';
      return kFailed;
    }
    const OnsagerModule module = build_from_spec(spec);
    const TetraModule tetra = build_tetra(module);
    const json doc = {{"spec", jsonio::to_json(spec)}, {"module", jsonio::to_json(module)}, {"tetra", jsonio::to_json(tetra)}};
    if (out_path) {
      std::ofstream out(*out_path, std::ios::binary);
      if (!out) throw ParseError("cannot write " + *out_path);
      emit(out, doc);
    } else {
      emit(io.out, doc);
    }
    return kOk;
  });
}

int cmd_verify(const std::string& module_path, bool deep, Streams io) {
  return guarded(io, [&] {
    LoadedModule loaded = load_module(module_path);
    if (auto reason = reducible_reason(loaded)) {
      io.err << *reason << '\n';
      return kFailed;
    }
    if (!loaded.tetra) loaded.tetra = build_tetra(module_of(loaded));
    const TetraModule& t = *loaded.tetra;

    Report report = verify_relations(t);
    report.append(eigentable_report(eigentable(t)));
    report.append(verify_action_table(t));
    report.append(flag_independence_report(t));
    report.append(shift_lemma_report(t));
    if (loaded.module) report.append(identification_report(t, *loaded.module));
    if (deep) {
      const bool fixed_point = roundtrip_uniqueness(module_of(loaded));
      report.entries.push_back({"roundtrip", "rebuild from x01, x23", fixed_point, std::nullopt});
      if (t.dim <= kOracleGuard) report.append(pairwise_irreducibility_report(t));
    }

    const bool pass = report.all_pass();
    emit(io.out, {{"pass", pass}, {"failures", report.failure_count()}, {"checks", jsonio::to_json(report)}});
    if (!pass)
      for (const auto& e : report.entries)
        if (!e.pass) io.err << "FAIL " << e.relation << ' ' << e.instance << '\n';
    return pass ? kOk : kFailed;
  });
}

int cmd_classify(const std::string& spec_path, Streams io) {
  return guarded(io, [&] {
    const ModuleSpec spec = load_spec(spec_path);
    const auto reason = reducibility_reason(spec);
    json doc = {{"irreducible", !reason.has_value()},
                {"dim", spec.dimension()},
                {"d", spec.diameter()},
                {"trivial", spec.diameter() == 0},
                {"type", json::array({jsonio::to_json(spec.alpha), jsonio::to_json(spec.alpha_star)})},
                {"equivalence_key", jsonio::to_json(equivalence_key(spec))}};
    if (reason) doc["reason"] = *reason;
    emit(io.out, doc);
    return kOk;
  });
}

int cmd_compare(const std::string& spec1, const std::string& spec2, bool oracle, Streams io) {
  return guarded(io, [&] {
    const ModuleSpec s1 = load_spec(spec1);
    const ModuleSpec s2 = load_spec(spec2);
    for (const auto* s : {&s1, &s2}) {
      if (auto reason = reducibility_reason(*s)) {
        io.err << *reason << '\n';
        return kBadInput;
      }
      if (s->has_shift()) {
        io.err << "compare requires type (0,0) specs\n";
        return kBadInput;
      }
    }
    const bool iso = is_isomorphic(s1, s2);
    json doc = {{"isomorphic", iso},
                {"equivalence_key_1", jsonio::to_json(equivalence_key(s1))},
                {"equivalence_key_2", jsonio::to_json(equivalence_key(s2))}};
    int code = iso ? kOk : kFailed;
    if (oracle) {
      if (s1.dimension() > kOracleGuard || s2.dimension() > kOracleGuard) {
        doc["oracle"] = {{"skipped", "dimension exceeds the oracle guard"}};
      } else {
        const auto s = find_intertwiner(build_from_spec(s1), build_from_spec(s2));
        const bool agrees = s.has_value() == iso;
        doc["oracle"] = {{"intertwiner_found", s.has_value()}, {"agrees", agrees}};
        if (s) doc["oracle"]["intertwiner"] = jsonio::to_json(*s);
        if (!agrees) {
          io.err << "oracle disagrees with the equivalence criterion\n";
          code = kOracleDisagrees;
        }
      }
    }
    emit(io.out, doc);
    return code;
  });
}

int cmd_inspect(const std::string& module_path, bool flags, bool table, Streams io) {
  return guarded(io, [&] {
    LoadedModule loaded = load_module(module_path);
    if (auto reason = reducible_reason(loaded)) {
      io.err << *reason << '\n';
      return kFailed;
    }
    if (!flags && !table) flags = table = true;
    json doc = json::object();
    if (flags) {
      const auto f = four_flags(module_of(loaded));
      json out = json::object();
      for (int r = 0; r < 4; ++r) out[std::to_string(r)] = jsonio::to_json(f[r]);
      doc["flags"] = std::move(out);
    }
    if (table) {
      if (!loaded.tetra) loaded.tetra = build_tetra(module_of(loaded));
      doc["table"] = jsonio::to_json(eigentable(*loaded.tetra));
    }
    emit(io.out, doc);
    return kOk;
  });
}

int run(int argc, const char* const* argv, Streams io) {
  CLI::App app{"Exact construction and verification of tetrahedron-algebra and Onsager-algebra modules", "tetrabox"};
  app.require_subcommand(1, 1);

  std::string spec_path, out_path, module_path, spec2_path;
  bool deep = false, oracle = false, show_flags = false, show_table = false;

  auto* build = app.add_subcommand("build", "Build the Onsager and tetrahedron modules for a spec");
  build->add_option("spec", spec_path, "Module spec JSON")->required();
  build->add_option("-o,--out", out_path, "Output file (stdout if omitted)");

  auto* verify = app.add_subcommand("verify", "Check every relation and spectral property of a built module");
  verify->add_option("module", module_path, "Module JSON")->required();
  verify->add_flag("--deep", deep, "Add the rebuild fixed-point test and pairwise Burnside tests");

  auto* classify = app.add_subcommand("classify", "Irreducibility, diameter, type and equivalence key of a spec");
  classify->add_option("spec", spec_path, "Module spec JSON")->required();

  auto* compare = app.add_subcommand("compare", "Decide isomorphism of two irreducible specs");
  compare->add_option("spec1", spec_path, "First module spec")->required();
  compare->add_option("spec2", spec2_path, "Second module spec")->required();
  compare->add_flag("--oracle", oracle, "Also search for an intertwiner and report agreement");

  auto* inspect = app.add_subcommand("inspect", "Dump the four flags and/or the eigenvalue table");
  inspect->add_option("module", module_path, "Module JSON")->required();
  inspect->add_flag("--flags", show_flags, "Print the four flags");
  inspect->add_flag("--table", show_table, "Print the eigenvalue-multiplicity table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "error: " << e.what() << '\n' << app.help();
    return kBadInput;
  }

  if (*build) return cmd_build(spec_path, out_path.empty() ? std::nullopt : std::optional(out_path), io);
  if (*verify) return cmd_verify(module_path, deep, io);
  if (*classify) return cmd_classify(spec_path, io);
  if (*compare) return cmd_compare(spec_path, spec2_path, oracle, io);
  return cmd_inspect(module_path, show_flags, show_table, io);
}

}  // namespace tetrabox::cli
