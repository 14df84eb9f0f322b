// Command line front end: metric analyses over exact rational arithmetic.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lipkr/classify.hpp"
#include "lipkr/error.hpp"
#include "lipkr/faces.hpp"
#include "lipkr/io.hpp"
#include "lipkr/metric.hpp"
#include "lipkr/norms.hpp"
#include "lipkr/oracle.hpp"
#include "lipkr/triangulate.hpp"

using namespace lipkr;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  return read_text_file(path);
}

MetricSpace load_metric(const std::string& path) {
  return metric_from_json(read_input(path));
}

std::string outdeg_text(const std::vector<int>& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::string check_int_list(std::string& text) {
  bool expect_digit = true;
  for (char c : text) {
    if (c == ',') {
      if (expect_digit) return "expected a comma-separated list of nonnegative integers";
      expect_digit = true;
    } else if (c >= '0' && c <= '9') {
      expect_digit = false;
    } else {
      return "expected a comma-separated list of nonnegative integers";
    }
  }
  if (expect_digit) return "expected a comma-separated list of nonnegative integers";
  return {};
}

std::vector<std::string> witness_strings(const WitnessFunction& f) {
  std::vector<std::string> out;
  for (const Rational& v : f.values()) out.push_back(to_string(v));
  return out;
}

void require_format(const std::string& format,
                    const std::vector<std::string>& allowed) {
  for (const std::string& a : allowed) {
    if (format == a) return;
  }
  throw Error(ErrorCode::InvalidArgument,
              "format '" + format + "' is not supported by this command");
}

void run_check(const std::string& path, const std::string& format) {
  require_format(format, {"text", "json"});
  MetricSpace ms = load_metric(path);
  bool generic = false;
  std::string tie;
  if (ms.strict()) {
    GenericityReport report = is_generic(ms);
    generic = report.generic;
    if (report.tie) tie = describe(*report.tie);
  }
  if (format == "json") {
    ordered_json out;
    out["points"] = ms.points();
    out["strict"] = ms.strict();
    out["generic"] = generic;
    if (!tie.empty()) out["tie"] = tie;
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "points: " << ms.points() << "\n";
  std::cout << "strict: " << (ms.strict() ? "true" : "false") << "\n";
  std::cout << "generic: " << (generic ? "true" : "false") << "\n";
  if (!tie.empty()) std::cout << "tie: " << tie << "\n";
}

void run_fvector(const std::string& path, const std::string& format, int jobs) {
  require_format(format, {"text", "json"});
  MetricSpace ms = load_metric(path);
  std::vector<Integer> fv = f_vector(ms, jobs);
  std::vector<Integer> formula;
  for (int m = 0; m <= ms.dim(); ++m) {
    formula.push_back(face_count_formula(ms.dim(), m));
  }
  if (format == "json") {
    ordered_json out;
    out["measured"] = ordered_json::array();
    out["formula"] = ordered_json::array();
    for (const Integer& v : fv) out["measured"].push_back(v.str());
    for (const Integer& v : formula) out["formula"].push_back(v.str());
    std::cout << out.dump(2) << "\n";
    return;
  }
  auto line = [](const std::vector<Integer>& vs) {
    std::string text;
    for (size_t i = 0; i < vs.size(); ++i) {
      if (i > 0) text += " ";
      text += vs[i].str();
    }
    return text;
  };
  std::cout << "measured: " << line(fv) << "\n";
  std::cout << "formula: " << line(formula) << "\n";
}

void run_facets(const std::string& path, const std::string& format, int jobs) {
  require_format(format, {"text", "json", "dot"});
  MetricSpace ms = load_metric(path);
  std::vector<Facet> facets = enumerate_facets(ms, jobs);
  if (format == "json") {
    ordered_json out = ordered_json::array();
    for (const Facet& f : facets) {
      ordered_json item;
      item["outdeg"] = f.outdeg.p;
      item["edges"] = canonical_key(f.tree);
      item["witness"] = witness_strings(f.witness);
      out.push_back(item);
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  if (format == "dot") {
    for (const Facet& f : facets) std::cout << to_dot(f.tree, ms.points());
    return;
  }
  for (const Facet& f : facets) {
    std::cout << "p=" << outdeg_text(f.outdeg.p)
              << " tree=" << canonical_key(f.tree) << "\n";
  }
}

void run_faces(const std::string& path, const std::string& format,
               const std::vector<int>& outdeg) {
  require_format(format, {"text", "json", "dot"});
  MetricSpace ms = load_metric(path);
  auto faces = faces_with_outdegrees(ms, OutdegreeSequence{outdeg});
  if (format == "json") {
    ordered_json out;
    out["count"] = faces.size();
    out["faces"] = ordered_json::array();
    for (const DirectedEdgeSet& g : faces) out["faces"].push_back(canonical_key(g));
    std::cout << out.dump(2) << "\n";
    return;
  }
  if (format == "dot") {
    for (const DirectedEdgeSet& g : faces) std::cout << to_dot(g, ms.points());
    return;
  }
  std::cout << "count: " << faces.size() << "\n";
  for (const DirectedEdgeSet& g : faces) std::cout << canonical_key(g) << "\n";
}

void run_norm(const std::string& metric_path, const std::string& measure_path,
              const std::string& format, bool dual, int jobs) {
  require_format(format, {"text", "json"});
  MetricSpace ms = load_metric(metric_path);
  SignedMeasure mu = measure_from_json(read_input(measure_path));
  Rational value = dual ? kr_norm_dual(ms, mu, jobs) : kr_norm(ms, mu);
  if (format == "json") {
    ordered_json out;
    out["norm"] = to_string(value);
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << to_string(value) << "\n";
}

void run_triangulate(const std::string& path, const std::string& format,
                     int jobs) {
  require_format(format, {"text", "json"});
  MetricSpace ms = load_metric(path);
  std::vector<Facet> facets = enumerate_facets(ms, jobs);
  Triangulation t = triangulate_root_polytope(ms, facets);
  UnimodularityReport report = check_unimodular(t);
  if (format == "json") {
    ordered_json out;
    out["points"] = t.n_points;
    out["unimodular"] = report.ok;
    out["simplices"] = ordered_json::array();
    for (size_t i = 0; i < t.simplices.size(); ++i) {
      const LatticeSimplex& s = t.simplices[i];
      ordered_json item;
      item["tree"] = canonical_key(s.tree);
      item["det"] = s.det.str();
      item["margin"] = to_string(regularity_certificate(ms, facets[i]).margin);
      out["simplices"].push_back(item);
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const LatticeSimplex& s : t.simplices) {
    std::cout << "tree=" << canonical_key(s.tree) << " det=" << s.det.str()
              << "\n";
  }
  std::cout << "unimodular: " << (report.ok ? "true" : "false") << "\n";
}

void run_product(const std::string& path, const std::string& format,
                 const std::vector<int>& plus) {
  require_format(format, {"text", "json", "dot"});
  MetricSpace ms = load_metric(path);
  auto cells = product_triangulation(ms, plus);
  if (format == "json") {
    ordered_json out;
    out["count"] = cells.size();
    out["cells"] = ordered_json::array();
    for (const DirectedEdgeSet& g : cells) out["cells"].push_back(canonical_key(g));
    std::cout << out.dump(2) << "\n";
    return;
  }
  if (format == "dot") {
    for (const DirectedEdgeSet& g : cells) std::cout << to_dot(g, ms.points());
    return;
  }
  for (const DirectedEdgeSet& g : cells) std::cout << canonical_key(g) << "\n";
}

void run_classify(const std::vector<std::string>& paths,
                  const std::string& format, int jobs, bool unlabelled) {
  require_format(format, {"text", "json"});
  std::vector<MetricSpace> family;
  for (const std::string& p : paths) family.push_back(load_metric(p));
  ClassReport report = count_classes(family, jobs, unlabelled);
  if (format == "json") {
    ordered_json out;
    out["classes"] = report.count;
    out["class_of"] = report.class_of;
    out["representative"] = report.representative;
    out["class_size"] = report.class_size;
    out["hashes"] = ordered_json::array();
    for (std::uint64_t h : report.hashes) {
      char buf[17];
      std::snprintf(buf, sizeof(buf), "%016llx",
                    static_cast<unsigned long long>(h));
      out["hashes"].push_back(buf);
    }
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "classes: " << report.count << "\n";
  for (int c = 0; c < report.count; ++c) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(
                      report.hashes[static_cast<size_t>(c)]));
    std::cout << "class " << c << ": size "
              << report.class_size[static_cast<size_t>(c)]
              << ", representative "
              << report.representative[static_cast<size_t>(c)] << " ("
              << paths[static_cast<size_t>(
                     report.representative[static_cast<size_t>(c)])]
              << "), hash " << buf << "\n";
  }
  for (size_t i = 0; i < paths.size(); ++i) {
    std::cout << "metric " << i << " -> class " << report.class_of[i] << "\n";
  }
}

void run_random(int n, std::uint64_t seed) {
  std::cout << metric_to_json(random_generic_metric(n, seed));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of Lipschitz-function polytopes and "
               "their transport-norm duals over finite metric spaces"};
  app.require_subcommand(1);

  std::string format = "text";
  int jobs = 1;

  auto add_common = [&](CLI::App* cmd, bool with_jobs) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    if (with_jobs) {
      cmd->add_option("--jobs", jobs, "Worker threads")
          ->check(CLI::Range(1, 1 << 16));
    }
  };

  std::string metric_path = "-";
  std::string measure_path;
  std::vector<std::string> family_paths;
  std::string outdeg_arg;
  std::string plus_arg;
  bool unlabelled = false;
  int random_n = 0;
  std::uint64_t seed = 0;

  CLI::App* check = app.add_subcommand(
      "check", "Validate a metric and report strictness and genericity");
  check->add_option("metric", metric_path, "Metric JSON file, or - for stdin");
  add_common(check, false);

  CLI::App* fvector = app.add_subcommand(
      "fvector", "Count faces per dimension and compare with the closed formula");
  fvector->add_option("metric", metric_path, "Metric JSON file, or - for stdin");
  add_common(fvector, true);

  CLI::App* facets = app.add_subcommand(
      "facets", "Enumerate all facet trees with their tight functions");
  facets->add_option("metric", metric_path, "Metric JSON file, or - for stdin");
  add_common(facets, true);

  CLI::App* faces = app.add_subcommand(
      "faces", "List the faces with a prescribed outdegree sequence");
  faces->add_option("metric", metric_path, "Metric JSON file, or - for stdin");
  faces->add_option("--outdeg", outdeg_arg, "Outdegree per point, e.g. 2,1,0,0")
      ->required()
      ->check(CLI::Validator(check_int_list, "INTLIST"));
  add_common(faces, false);

  CLI::App* norm = app.add_subcommand(
      "norm", "Transport norm of a balanced signed measure");
  norm->add_option("metric", metric_path, "Metric JSON file")->required();
  norm->add_option("measure", measure_path, "Measure JSON file")->required();
  add_common(norm, false);

  CLI::App* dual = app.add_subcommand(
      "dual-norm", "The same norm through the facet-maximum dual");
  dual->add_option("metric", metric_path, "Metric JSON file")->required();
  dual->add_option("measure", measure_path, "Measure JSON file")->required();
  add_common(dual, true);

  CLI::App* triangulate = app.add_subcommand(
      "triangulate", "Unimodular triangulation induced on the root polytope");
  triangulate->add_option("metric", metric_path,
                          "Metric JSON file, or - for stdin");
  add_common(triangulate, true);

  CLI::App* product = app.add_subcommand(
      "product", "Cells of the product-of-simplices triangulation");
  product->add_option("metric", metric_path, "Metric JSON file, or - for stdin");
  product->add_option("--plus", plus_arg, "Source side of the bipartition, e.g. 1,2")
      ->required()
      ->check(CLI::Validator(check_int_list, "INTLIST"));
  add_common(product, false);

  CLI::App* classify = app.add_subcommand(
      "classify", "Group metrics by the combinatorics of their polytopes");
  classify->add_option("metrics", family_paths, "Metric JSON files")
      ->required()
      ->expected(-1);
  classify->add_flag("--unlabelled", unlabelled,
                     "Quotient by point relabeling");
  add_common(classify, true);

  CLI::App* random = app.add_subcommand(
      "random", "Print a seeded random generic metric as JSON");
  random->add_option("--n", random_n, "Dimension (points - 1)")
      ->required()
      ->check(CLI::Range(1, 64));
  random->add_option("--seed", seed, "Deterministic seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) {
      run_check(metric_path, format);
    } else if (fvector->parsed()) {
      run_fvector(metric_path, format, jobs);
    } else if (facets->parsed()) {
      run_facets(metric_path, format, jobs);
    } else if (faces->parsed()) {
      run_faces(metric_path, format, parse_int_list(outdeg_arg));
    } else if (norm->parsed()) {
      run_norm(metric_path, measure_path, format, false, 1);
    } else if (dual->parsed()) {
      run_norm(metric_path, measure_path, format, true, jobs);
    } else if (triangulate->parsed()) {
      run_triangulate(metric_path, format, jobs);
    } else if (product->parsed()) {
      run_product(metric_path, format, parse_int_list(plus_arg));
    } else if (classify->parsed()) {
      run_classify(family_paths, format, jobs, unlabelled);
    } else if (random->parsed()) {
      run_random(random_n, seed);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
