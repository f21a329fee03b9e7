#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "vqs/io.hpp"

using nlohmann::json;

namespace {

// exit statuses: 0 success, 1 verification mismatch, 2 input/validation
// error, 3 budget exhaustion
constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vqs::ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string input;
  std::string output = "json";
  uint64_t q = 0;
  size_t dim = 0;
  size_t n = 0;
  std::string type;  // "+" or "-"
  bool classical = false;
  bool virt = false;
  uint64_t qmax = 3;
  size_t dimmax = 4;
  uint64_t seed = 0;
  vqs::Budget budget;
};

vqs::FieldPtr field_of_order(uint64_t q) {
  uint64_t p = 0, rest = q;
  for (uint64_t c = 2; c * c <= rest; ++c)
    if (rest % c == 0) {
      p = c;
      while (rest % c == 0) rest /= c;
      break;
    }
  if (p == 0) p = q;
  if (rest != 1 && rest != q)
    throw vqs::ValidationError("q = " + std::to_string(q) +
                               " is not a prime power");
  unsigned d = 0;
  for (uint64_t t = q; t > 1; t /= p) ++d;
  return vqs::Field::make(p, d);
}

int epsilon_of(const Options& opt) {
  if (opt.dim % 2 == 1) {
    if (!opt.type.empty())
      throw vqs::ValidationError("--type applies to even dimensions only");
    return 0;
  }
  if (opt.type == "+") return 1;
  if (opt.type == "-") return -1;
  throw vqs::ValidationError("even dimension requires --type + or --type -");
}

int run_classify(const Options& opt) {
  vqs::QuadraticSpace qs =
      vqs::form_from_json(vqs::parse_json_text(read_file(opt.input)));
  vqs::ClassificationReport rep = vqs::canonical_form(qs, opt.budget);
  print_json(vqs::classification_to_json(rep));
  return kExitOk;
}

int run_embed(const Options& opt) {
  vqs::QuadraticSpace qs =
      vqs::form_from_json(vqs::parse_json_text(read_file(opt.input)));
  vqs::VirtualQuadraticSpace vspace = vqs::embed_ambient(qs);
  vqs::MinimalizeResult min = vqs::minimalize(vspace);
  json out{{"virtual_space", vqs::virtual_to_json(vspace)},
           {"decomposition", vqs::decomposition_to_json(min.decomp)}};
  print_json(out);
  return kExitOk;
}

int run_minimalize(const Options& opt) {
  vqs::VirtualQuadraticSpace vspace =
      vqs::virtual_from_json(vqs::parse_json_text(read_file(opt.input)));
  vqs::MinimalizeResult min = vqs::minimalize(vspace);
  json out{{"virtual_space", vqs::virtual_to_json(min.space)},
           {"decomposition", vqs::decomposition_to_json(min.decomp)}};
  print_json(out);
  return kExitOk;
}

int run_order(const Options& opt) {
  int eps = epsilon_of(opt);
  bool classical = opt.dim % 2 == 0 || !opt.virt;
  vqs::BigInt value = vqs::order_formula(opt.q, opt.dim, eps, classical);
  std::cout << value.str() << "\n";
  return kExitOk;
}

int run_enumerate(const Options& opt) {
  vqs::BigInt enumerated;
  vqs::BigInt formula;
  if (!opt.input.empty()) {
    json j = vqs::parse_json_text(read_file(opt.input));
    if (j.contains("subspace")) {
      vqs::VirtualQuadraticSpace vspace = vqs::virtual_from_json(j);
      enumerated = vqs::enumerate_virtual_isometries(vspace, opt.budget).order;
      vqs::ClassificationReport rep =
          vqs::canonical_form(vspace.restricted_form(), opt.budget);
      int eps = rep.kind == vqs::ClassificationReport::Kind::Plus    ? 1
                : rep.kind == vqs::ClassificationReport::Kind::Minus ? -1
                                                                     : 0;
      formula = vqs::order_formula(vspace.ambient().field()->q(),
                                   vspace.virtual_dim(), eps, false);
    } else {
      vqs::QuadraticSpace qs = vqs::form_from_json(j);
      enumerated = vqs::enumerate_isometries(qs, opt.budget).order;
      vqs::ClassificationReport rep = vqs::canonical_form(qs, opt.budget);
      int eps = rep.kind == vqs::ClassificationReport::Kind::Plus    ? 1
                : rep.kind == vqs::ClassificationReport::Kind::Minus ? -1
                                                                     : 0;
      formula = vqs::order_formula(qs.field()->q(), qs.dim(), eps, true);
    }
  } else {
    int eps = epsilon_of(opt);
    vqs::FieldPtr f = field_of_order(opt.q);
    vqs::QuadraticSpace qs = vqs::canonical_space(f, opt.dim, eps);
    if (opt.virt && opt.dim % 2 == 1) {
      vqs::VirtualQuadraticSpace vspace = vqs::embed_ambient(qs);
      enumerated = vqs::enumerate_virtual_isometries(vspace, opt.budget).order;
      formula = vqs::order_formula(opt.q, opt.dim, eps, false);
    } else {
      enumerated = vqs::enumerate_isometries(qs, opt.budget).order;
      formula = vqs::order_formula(opt.q, opt.dim, eps, true);
    }
  }
  bool match = enumerated == formula;
  print_json(json{{"enumerated", enumerated.str()},
                  {"formula", formula.str()},
                  {"match", match}});
  return match ? kExitOk : kExitMismatch;
}

int run_census(const Options& opt) {
  vqs::FieldPtr f = field_of_order(opt.q);
  vqs::CensusReport rep = vqs::class_census(f, opt.n, opt.budget);
  print_json(vqs::census_to_json(rep));
  size_t expected = opt.n % 2 == 0 ? 2 : 1;
  return rep.classes.size() == expected ? kExitOk : kExitMismatch;
}

int run_verify(const Options& opt) {
  std::vector<vqs::GroupOrderReport> reports =
      vqs::verify_orders(opt.qmax, opt.dimmax, opt.budget);
  // test hook: force a formula mismatch to exercise the exit status
  if (std::getenv("VQS_TEST_PERTURB_FORMULA") != nullptr) {
    for (auto& rep : reports) {
      rep.formula_value += 1;
      if (rep.enumerated_value)
        rep.match = (*rep.enumerated_value == rep.formula_value);
    }
  }
  bool all_match = true;
  for (const auto& rep : reports)
    if (!rep.skipped && !rep.match) all_match = false;

  if (opt.output == "json") {
    json arr = json::array();
    for (const auto& rep : reports)
      arr.push_back(vqs::group_order_report_to_json(rep));
    print_json(arr);
  } else {
    std::cout << "  q dim type semantics   formula      enumerated  status\n";
    for (const auto& rep : reports) {
      std::string type = rep.dim % 2 == 0 ? (rep.epsilon == 1 ? "+" : "-") : " ";
      std::string status = rep.skipped ? "skipped"
                           : rep.match ? "ok"
                                       : "MISMATCH";
      std::string enumerated =
          rep.enumerated_value ? rep.enumerated_value->str() : "-";
      std::printf("%3llu %3zu  %s   %-9s %12s %12s  %s\n",
                  static_cast<unsigned long long>(rep.q), rep.dim, type.c_str(),
                  rep.classical ? "classical" : "virtual",
                  rep.formula_value.str().c_str(), enumerated.c_str(),
                  status.c_str());
    }
  }
  return all_match ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with virtual quadratic spaces over "
               "finite fields"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  if (const char* env = std::getenv("VQS_BUDGET_NODES"))
    opt.budget.max_nodes = std::strtoull(env, nullptr, 10);

  app.add_option("--budget-nodes", opt.budget.max_nodes,
                 "backtracking node cap");
  app.add_option("--budget-scan", opt.budget.max_scan,
                 "exhaustive scan cap");
  app.add_option("--seed", opt.seed, "seed for randomized suites");
  app.add_option("--output", opt.output, "output format: json|table")
      ->check(CLI::IsMember({"json", "table"}));

  auto* classify = app.add_subcommand("classify", "classify a form JSON");
  classify->add_option("--input", opt.input, "form JSON file")->required();

  auto* embed = app.add_subcommand("embed", "embed a form into a minimal "
                                            "virtual quadratic space");
  embed->add_option("--input", opt.input, "form JSON file")->required();

  auto* minimalize =
      app.add_subcommand("minimalize", "minimalize a virtual space JSON");
  minimalize->add_option("--input", opt.input, "virtual space JSON file")
      ->required();

  auto* order = app.add_subcommand("order", "closed-form group order");
  order->add_option("--q", opt.q, "field order")->required();
  order->add_option("--dim", opt.dim, "virtual dimension")->required();
  order->add_option("--type", opt.type, "+ or - (even dimension)");
  order->add_flag("--classical", opt.classical, "classical Iso(U) semantics");
  order->add_flag("--virtual", opt.virt, "virtual Iso(V,U) semantics");

  auto* enumerate =
      app.add_subcommand("enumerate", "enumerate isometries and compare "
                                      "with the formula");
  enumerate->add_option("--input", opt.input, "form or virtual JSON file");
  enumerate->add_option("--q", opt.q, "field order");
  enumerate->add_option("--dim", opt.dim, "dimension");
  enumerate->add_option("--type", opt.type, "+ or - (even dimension)");
  enumerate->add_flag("--classical", opt.classical, "classical semantics");
  enumerate->add_flag("--virtual", opt.virt, "virtual semantics");

  auto* census = app.add_subcommand("census", "exhaustive class census");
  census->add_option("--q", opt.q, "field order")->required();
  census->add_option("--n", opt.n, "dimension")->required();

  auto* verify = app.add_subcommand("verify", "formula-vs-enumeration sweep");
  verify->add_option("--qmax", opt.qmax, "largest field order");
  verify->add_option("--dimmax", opt.dimmax, "largest dimension");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return run_classify(opt);
    if (embed->parsed()) return run_embed(opt);
    if (minimalize->parsed()) return run_minimalize(opt);
    if (order->parsed()) return run_order(opt);
    if (enumerate->parsed()) return run_enumerate(opt);
    if (census->parsed()) return run_census(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const vqs::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const vqs::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
