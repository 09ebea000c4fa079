#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cycgraph/errors.hpp"
#include "cycgraph/formulas.hpp"
#include "cycgraph/graphs.hpp"
#include "cycgraph/spec_doc.hpp"
#include "cycgraph/structure.hpp"
#include "cycgraph/verify.hpp"

namespace {

using namespace cycgraph;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalidSpec = 2;
constexpr int kExitCapExceeded = 3;

struct Options {
  std::string spec_text;
  Caps caps;
  bool json = false;
  std::string method = "auto";
  std::string graph = "cyclic";
  std::string out_path;
  bool labels = false;
};

// Enumerates the group a document denotes, when it fits the cap.
std::optional<EnumeratedGroup> enumerate_spec(const RealizedSpec& realized, const Caps& caps) {
  if (realized.affine) {
    if (realized.affine->group_order() > caps.enum_cap) return std::nullopt;
    return EnumeratedGroup::enumerate(to_permutation_group(*realized.affine, caps.degree_cap),
                                      caps.enum_cap);
  }
  return EnumeratedGroup::enumerate(realized.generators, caps.enum_cap, realized.degree);
}

ComponentReport formula_report(GraphKind kind, CountMethod method, std::uint64_t value,
                               std::uint64_t order) {
  ComponentReport report;
  report.graph_kind = kind;
  report.method = method;
  report.component_count = value;
  report.vertex_count = order - 1;  // trivial center in every formula case
  return report;
}

void print_component_report(const Options& opt, const GroupSpecDocument& doc,
                            const ComponentReport& report) {
  if (opt.json) {
    std::cout << component_report_to_json(doc, report).dump(2) << "\n";
    return;
  }
  std::cout << to_string(report.graph_kind) << " graph components (" << to_string(report.method)
            << "): " << report.component_count << " on " << report.vertex_count << " vertices\n";
  if (!report.component_sizes.empty()) {
    std::cout << "component sizes:";
    std::uint64_t current = report.component_sizes.front();
    std::uint64_t repeat = 0;
    for (std::uint64_t s : report.component_sizes) {
      if (s == current) {
        ++repeat;
      } else {
        std::cout << " " << current << "x" << repeat;
        current = s;
        repeat = 1;
      }
    }
    std::cout << " " << current << "x" << repeat << "\n";
  }
}

// Closed-form cyclic-graph count of an enumerated group, when one applies.
std::optional<ComponentReport> delta_formula_enumerated(const EnumeratedGroup& G) {
  if (auto dec = detect_two_frobenius(G)) {
    auto count = delta_count_two_frobenius(G, *dec);
    return formula_report(GraphKind::Cyclic, CountMethod::Formula, count.value, G.order());
  }
  if (auto frob = detect_frobenius(G)) {
    auto count = delta_count_frobenius(G, *frob);
    return formula_report(GraphKind::Cyclic, CountMethod::Formula, count.value, G.order());
  }
  return std::nullopt;
}

int run_delta(const Options& opt, const GroupSpecDocument& doc) {
  RealizedSpec realized = realize(doc, opt.caps);

  if (opt.method == "brute" || opt.method == "auto") {
    if (realized.affine && realized.affine->group_order() > opt.caps.enum_cap) {
      if (opt.method == "brute") {
        std::cerr << "error: group order " << realized.affine->group_order()
                  << " exceeds the enumeration cap\n";
        return kExitCapExceeded;
      }
    } else {
      auto G = enumerate_spec(realized, opt.caps);
      print_component_report(opt, doc, delta_components(*G));
      return kExitOk;
    }
  }

  // Formula / structured path.
  if (realized.affine) {
    auto sc = structured_counts(*realized.affine);
    if (sc.delta_component_count) {
      print_component_report(opt, doc,
                             formula_report(GraphKind::Cyclic, CountMethod::Structured,
                                            *sc.delta_component_count, sc.group_order));
      return kExitOk;
    }
    if (realized.affine->group_order() > opt.caps.enum_cap) {
      std::cerr << "error: no structured count for this family and the group exceeds the "
                   "enumeration cap\n";
      return kExitCapExceeded;
    }
  }
  auto G = enumerate_spec(realized, opt.caps);
  if (auto report = delta_formula_enumerated(*G)) {
    print_component_report(opt, doc, *report);
    return kExitOk;
  }
  std::cerr << "error: no closed-form count applies (group is not Frobenius or 2-Frobenius)\n";
  return kExitCapExceeded;
}

int run_gamma(const Options& opt, const GroupSpecDocument& doc) {
  RealizedSpec realized = realize(doc, opt.caps);

  if (opt.method == "brute" || opt.method == "auto") {
    bool enumerable =
        !realized.affine || realized.affine->group_order() <= opt.caps.enum_cap;
    if (enumerable) {
      auto G = enumerate_spec(realized, opt.caps);
      try {
        print_component_report(opt, doc, gamma_components(*G, opt.caps.pair_cap));
        return kExitOk;
      } catch (const CapExceededError&) {
        if (opt.method == "brute") throw;
      }
    } else if (opt.method == "brute") {
      std::cerr << "error: group order " << realized.affine->group_order()
                << " exceeds the enumeration cap\n";
      return kExitCapExceeded;
    }
  }

  // Formula path: |K| + 1 for a verified or structured chain.
  std::optional<std::uint64_t> k_order;
  std::uint64_t order = 0;
  if (realized.affine && realized.affine->group_order() > opt.caps.enum_cap) {
    auto sc = structured_counts(*realized.affine);
    k_order = sc.K_order;
    order = sc.group_order;
  } else {
    auto G = enumerate_spec(realized, opt.caps);
    order = G->order();
    if (auto dec = detect_two_frobenius(*G)) k_order = dec->K.order();
  }
  if (!k_order) {
    std::cerr << "error: the commuting-graph formula needs a 2-Frobenius chain\n";
    return kExitCapExceeded;
  }
  print_component_report(
      opt, doc,
      formula_report(GraphKind::Commuting,
                     realized.affine && order > opt.caps.enum_cap ? CountMethod::Structured
                                                                  : CountMethod::Formula,
                     *k_order + 1, order));
  return kExitOk;
}

int run_report(const Options& opt, const GroupSpecDocument& doc, bool with_brute) {
  RealizedSpec realized = realize(doc, opt.caps);
  VerificationReport report;
  if (realized.affine) {
    report = run_verification(*realized.affine, opt.caps, with_brute);
  } else {
    auto G = enumerate_spec(realized, opt.caps);
    report = run_verification(*G, opt.caps, with_brute);
  }
  if (opt.json)
    std::cout << report_to_json(doc, report).dump(2) << "\n";
  else
    std::cout << report_to_text(doc, report);
  if (with_brute && !report.all_match()) return kExitMismatch;
  return kExitOk;
}

int run_export_dot(const Options& opt, const GroupSpecDocument& doc) {
  RealizedSpec realized = realize(doc, opt.caps);
  if (realized.affine && realized.affine->group_order() > opt.caps.enum_cap) {
    std::cerr << "error: group order exceeds the enumeration cap\n";
    return kExitCapExceeded;
  }
  auto G = enumerate_spec(realized, opt.caps);
  GraphKind kind = opt.graph == "commuting" ? GraphKind::Commuting : GraphKind::Cyclic;
  std::string dot = export_dot(*G, kind, opt.labels, opt.caps.pair_cap);
  if (opt.out_path.empty() || opt.out_path == "-") {
    std::cout << dot;
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << opt.out_path << "\n";
      return kExitInvalidSpec;
    }
    out << dot;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycgraph: cyclic/commuting graph components of 2-Frobenius groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--enum-cap", opt.caps.enum_cap, "maximum group order to enumerate")
      ->capture_default_str();
  app.add_option("--pair-cap", opt.caps.pair_cap, "maximum vertex-pair count for pairwise scans")
      ->capture_default_str();
  app.add_flag("--json", opt.json, "emit JSON instead of text");

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("spec", opt.spec_text, "spec file path or inline JSON")->required();
  };

  CLI::App* info = app.add_subcommand("info", "order, detection result and structural checks");
  add_spec(info);

  CLI::App* delta = app.add_subcommand("delta", "cyclic-graph component count");
  add_spec(delta);
  delta->add_option("--method", opt.method, "formula|brute|auto")
      ->check(CLI::IsMember({"formula", "brute", "auto"}))
      ->capture_default_str();

  CLI::App* gamma = app.add_subcommand("gamma", "commuting-graph component count");
  add_spec(gamma);
  gamma->add_option("--method", opt.method, "formula|brute|auto")
      ->check(CLI::IsMember({"formula", "brute", "auto"}))
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "formula vs brute-force cross-check");
  add_spec(verify);

  CLI::App* export_dot_cmd = app.add_subcommand("export-dot", "write the graph as DOT");
  add_spec(export_dot_cmd);
  export_dot_cmd->add_option("--graph", opt.graph, "cyclic|commuting")
      ->check(CLI::IsMember({"cyclic", "commuting"}))
      ->capture_default_str();
  export_dot_cmd->add_option("--out", opt.out_path, "output path (default stdout)");
  export_dot_cmd->add_flag("--labels", opt.labels, "label vertices with cycle notation");

  CLI11_PARSE(app, argc, argv);

  try {
    GroupSpecDocument doc = GroupSpecDocument::load(opt.spec_text);
    if (info->parsed()) return run_report(opt, doc, /*with_brute=*/false);
    if (delta->parsed()) return run_delta(opt, doc);
    if (gamma->parsed()) return run_gamma(opt, doc);
    if (verify->parsed()) return run_report(opt, doc, /*with_brute=*/true);
    if (export_dot_cmd->parsed()) return run_export_dot(opt, doc);
  } catch (const SpecParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const InvalidFamilyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const EmptyVertexSetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidSpec;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const UncomputableError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidSpec;
  }
  return kExitOk;
}
