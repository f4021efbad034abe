// fibpoly command line: evaluate polynomials, run law suites, extract
// polynomials from registered functor boxes, and run the example suites.
// Exit codes: 0 pass, 1 suite/extraction failure, 2 input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "fibpoly/counterexamples.hpp"
#include "fibpoly/extract.hpp"
#include "fibpoly/json_io.hpp"
#include "fibpoly/registry.hpp"
#include "fibpoly/suites.hpp"

namespace {

using fibpoly::Report;
using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw fibpoly::structure_error("cannot open file: " + path);
  return json::parse(in);
}

void print_report(const std::string& name, const Report& report, bool as_json) {
  if (as_json) {
    std::cout << json{{"suite", name}, {"report", report.to_json()}}.dump(2) << "\n";
  } else {
    std::cout << name << ": " << report.verdict << "\n";
    if (!report.ok()) std::cout << report.details.dump(2) << "\n";
  }
}

int run_eval(const std::string& poly_file, const std::string& obj_file, bool as_json) {
  fibpoly::Polynomial p = load_json(poly_file).get<fibpoly::Polynomial>();
  fibpoly::SliceObj x = load_json(obj_file).get<fibpoly::SliceObj>();
  if (x.base != p.I) throw fibpoly::structure_error("object base does not match the polynomial");
  fibpoly::SliceObj y = eval_plain(p, x);
  if (as_json) {
    std::cout << json{{"result", y}, {"fiber_sizes", fiber_sizes(y)}}.dump(2) << "\n";
  } else {
    std::cout << json(y).dump(2) << "\n";
    std::cout << "fiber sizes over J: " << json(fiber_sizes(y)).dump() << "\n";
  }
  return kPass;
}

int run_laws(int bound, std::uint64_t seed, bool as_json) {
  bool ok = true;
  for (const auto& [name, report] :
       {std::pair<std::string, Report>{"adjunctions", fibpoly::adjunction_suite(bound, bound + 1)},
        {"beck-chevalley", fibpoly::beck_chevalley_suite(bound)},
        {"bifibration", fibpoly::bifibration_suite(bound, seed)}}) {
    print_report(name, report, as_json);
    ok = ok && report.ok();
  }
  return ok ? kPass : kFail;
}

int run_extract(const std::string& spec_file, int size_bound, int bound, std::uint64_t seed,
                bool as_json) {
  fibpoly::BoxPtr box = fibpoly::make_box(load_json(spec_file));
  fibpoly::ExtractBounds bounds;
  bounds.search.size_bound = size_bound;
  bounds.span_bound = bound;
  bounds.audit.max_size = bound;
  bounds.audit.seed = seed;
  fibpoly::ExtractPolynomialResult res = fibpoly::extract_polynomial(box, nullptr, bounds);
  print_report("extract", res.report, as_json);
  if (!res.poly) return kFail;
  if (!as_json) std::cout << "polynomial: " << json(*res.poly).dump(2) << "\n";
  return kPass;
}

int run_examples(const std::string& which, int bound, bool as_json) {
  if (which == "weber") {
    fibpoly::WeberWitness witness = fibpoly::weber_mono_failure();
    print_report("subdivision-witness", witness.report, as_json);
    Report suite = fibpoly::mono_preservation_suite(bound);
    print_report("mono-preservation", suite, as_json);
    return witness.report.ok() && suite.ok() ? kPass : kFail;
  }
  if (which == "gset") {
    fibpoly::Group z2 = fibpoly::cyclic_group(2);
    Report impossible = fibpoly::strength_impossible(fibpoly::regular_representation(z2));
    print_report("strength-impossibility", impossible, as_json);

    // Adjunction orbits -| fixed points, exhaustively at small carrier sizes.
    bool adj_ok = true;
    std::int64_t pairs = 0;
    std::vector<fibpoly::GSet> gsets;
    for (int n = 0; n <= 3; ++n)
      for (const fibpoly::FinMap& a :
           all_maps(fibpoly::FinSet(2 * n), fibpoly::FinSet(n))) {
        try {
          gsets.emplace_back(z2, fibpoly::FinSet(n), a);
        } catch (const fibpoly::structure_error&) {
        }
      }
    for (const fibpoly::GSet& x : gsets)
      for (const fibpoly::GSet& y : gsets) {
        ++pairs;
        adj_ok = adj_ok && equivariant_hom_count(gset_orbits(x), y) ==
                               equivariant_hom_count(x, gset_fixed_points(y));
      }
    Report adjunction =
        adj_ok ? Report::pass(json{{"pairs", pairs}}) : Report::fail("adjunction mismatch");
    print_report("orbits-fixed-points-adjunction", adjunction, as_json);
    return impossible.ok() && adjunction.ok() ? kPass : kFail;
  }
  throw CLI::ValidationError("examples", "unknown suite '" + which + "' (expected weber|gset)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-set polynomial functors between fibered slices"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON reports");

  std::string poly_file, obj_file, spec_file, example_name;
  int bound = 3, size_bound = 9, example_bound = 2;
  std::uint64_t seed = 0xf1b0f1b0ULL;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a polynomial on a slice object");
  eval->add_option("polynomial", poly_file, "polynomial JSON file")->required();
  eval->add_option("object", obj_file, "slice object JSON file")->required();

  CLI::App* laws = app.add_subcommand("laws", "run the categorical law suites");
  laws->add_option("--bound", bound, "size bound for exhaustive suites");
  laws->add_option("--seed", seed, "seed for sampled suites");

  CLI::App* extract = app.add_subcommand("extract", "extract a polynomial from a box spec");
  extract->add_option("spec", spec_file, "box spec JSON file")->required();
  extract->add_option("--size-bound", size_bound, "candidate size bound for the adjoint search");
  extract->add_option("--bound", bound, "audit/verification size bound");
  extract->add_option("--seed", seed, "audit seed");

  CLI::App* examples = app.add_subcommand("examples", "run a boundary-example suite");
  examples->add_option("name", example_name, "weber|gset")->required();
  examples->add_option("--bound", example_bound, "exhaustive bound for the mono suite");

  for (CLI::App* sub : {eval, laws, extract, examples})
    sub->add_flag("--json", as_json, "emit JSON reports");

  try {
    app.parse(argc, argv);
    if (eval->parsed()) return run_eval(poly_file, obj_file, as_json);
    if (laws->parsed()) return run_laws(bound, seed, as_json);
    if (extract->parsed()) return run_extract(spec_file, size_bound, bound, seed, as_json);
    if (examples->parsed()) return run_examples(example_name, example_bound, as_json);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  } catch (const fibpoly::structure_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
