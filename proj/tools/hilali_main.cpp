// hilali: enumerate homotopy rank types of simply connected rationally
// elliptic spaces, verify the Hilali inequality through cohomology lower
// bounds, query the strong arithmetic condition, and compute cohomology of
// minimal Sullivan models given as JSON files.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hilali/catalog.hpp"
#include "hilali/enumerate.hpp"
#include "hilali/model_io.hpp"
#include "hilali/pipeline.hpp"
#include "hilali/report.hpp"
#include "hilali/sullivan.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSacFails = 1;
constexpr int kExitFileError = 2;     // also: sac parse error
constexpr int kExitParseError = 3;    // model file syntax
constexpr int kExitValidationError = 4;
constexpr int kExitIoError = 5;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

constexpr const char* kExitTable =
    "Exit codes:\n"
    "  0  success (sac: condition holds)\n"
    "  1  sac: condition fails\n"
    "  2  unreadable input file; sac/rank-type parse error\n"
    "  3  model file parse error (JSON or polynomial syntax)\n"
    "  4  model validation failure\n"
    "  5  output I/O failure\n"
    "  64 usage error\n"
    "  70 internal error\n";

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return std::cout ? kExitOk : kExitIoError;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return kExitIoError;
  }
  f << text;
  return f ? kExitOk : kExitIoError;
}

int cmd_enumerate(int max_fd, const std::string& format,
                  const std::string& out_path) {
  auto buckets = hilali::enumerate_rank_types(max_fd);
  return write_output(
      hilali::render_enumeration(buckets, hilali::parse_format(format)),
      out_path);
}

int cmd_pipeline(int max_fd, const std::string& format,
                 const std::string& out_path) {
  auto report = hilali::run_pipeline(max_fd);
  return write_output(
      hilali::render_report(report, hilali::parse_format(format)), out_path);
}

std::string render_gamma(const std::vector<int>& support,
                         const std::vector<int>& gamma) {
  std::string s;
  for (size_t i = 0; i < support.size(); ++i) {
    if (gamma[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += std::to_string(gamma[i]) + "*" + std::to_string(support[i]);
  }
  return s.empty() ? "0" : s;
}

int cmd_sac(const std::string& text) {
  hilali::RankType t;
  try {
    t = hilali::parse_rank_type(text);
  } catch (const hilali::RankTypeParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitFileError;
  }
  auto [holds, witness] = hilali::check_sac(t);
  std::cout << (holds ? "true" : "false") << "\n";
  if (holds) {
    // one gamma witness per (support subset, expressible odd half-degree)
    std::vector<int> current_support;
    for (const auto& e : witness.entries) {
      if (e.support != current_support) {
        current_support = e.support;
        std::cout << "support {";
        for (size_t i = 0; i < e.support.size(); ++i)
          std::cout << (i ? "," : "") << e.support[i];
        std::cout << "}:\n";
      }
      std::cout << "  b=" << e.b << " = " << render_gamma(e.support, e.gamma)
                << "\n";
    }
    return kExitOk;
  }
  return kExitSacFails;
}

int cmd_check_model(const std::string& path, std::optional<int> up_to) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return kExitFileError;
  }
  std::stringstream buf;
  buf << f.rdbuf();

  hilali::SullivanModel model;
  try {
    model = hilali::read_model(buf.str());
  } catch (const hilali::ModelParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }

  std::cout << "generators: " << model.gens.size();
  if (model.declared_rank_type)
    std::cout << "  rank type " << model.declared_rank_type->canonical();
  if (model.truncation_degree)
    std::cout << "  truncated at " << *model.truncation_degree;
  std::cout << "\n";

  auto validation = hilali::validate_model(model);
  if (!validation.ok()) {
    std::cout << "validation: FAILED\n" << validation.to_string() << "\n";
    return kExitValidationError;
  }
  std::cout << "validation: ok\n";

  int bound;
  if (up_to) {
    bound = *up_to;
  } else if (model.truncation_degree) {
    bound = *model.truncation_degree;
  } else {
    int fd = hilali::model_formal_dimension(model);
    bound = fd >= 1 ? hilali::completeness_scan_bound(model) : 12;
  }
  if (model.truncation_degree && bound > *model.truncation_degree) {
    std::cerr << "error: --up-to " << bound
              << " exceeds the truncation degree "
              << *model.truncation_degree << "\n";
    return kExitUsage;
  }

  auto profile = hilali::cohomology_profile(model, bound);
  int print_to = profile.complete
                     ? std::max(profile.top_nonzero(), 0)
                     : bound;
  for (int i = 0; i <= print_to; ++i)
    std::cout << "H^" << i << " = " << profile.dims[i] << "\n";

  if (model.truncation_degree) {
    std::cout << "truncated model: degrees above " << *model.truncation_degree
              << " not computed\n";
    return kExitOk;
  }
  if (!profile.complete) {
    std::cout << "complete: no (cohomology persists past the elliptic bound)\n";
    return kExitOk;
  }
  std::cout << "complete: yes (top degree " << profile.top_nonzero() << ")\n";
  auto euler = hilali::euler_characteristics(model);
  std::cout << "chi = " << euler.chi << ", chi_pi = " << euler.chi_pi << "\n";
  std::cout << "poincare duality: "
            << (hilali::poincare_check(profile) ? "ok" : "VIOLATED") << "\n";
  auto hil = hilali::check_hilali(model);
  std::cout << "hilali: dim H = " << hil.dim_h << " >= dim V = " << hil.dim_v
            << ": " << (hil.holds ? "holds" : "FAILS") << "\n";
  return kExitOk;
}

int check_catalog_entry(const hilali::CatalogEntry& entry, bool& all_ok) {
  const auto& m = entry.model;
  std::cout << entry.name << "  ";
  if (m.declared_rank_type)
    std::cout << m.declared_rank_type->display() << "  ";
  std::cout << (m.truncated()
                    ? "truncated at " + std::to_string(*m.truncation_degree)
                    : std::string("complete"));

  auto validation = hilali::validate_model(m);
  if (!validation.ok()) {
    std::cout << "  validation FAILED\n";
    all_ok = false;
    return kExitValidationError;
  }

  int bound = 0;
  for (const auto& [deg, dim] : entry.expected_dims)
    bound = std::max(bound, deg);
  auto profile = hilali::cohomology_profile(m, bound);
  bool dims_ok = true;
  for (const auto& [deg, dim] : entry.expected_dims)
    if (profile.dims[static_cast<size_t>(deg)] != dim) dims_ok = false;

  bool classes_ok = true;
  std::map<int, std::vector<hilali::Polynomial>> by_degree;
  for (const auto& text : entry.nonzero_classes) {
    auto p = hilali::parse_polynomial(m.gens, text);
    auto deg = p.homogeneous_degree();
    if (!deg) {
      classes_ok = false;
      continue;
    }
    by_degree[*deg].push_back(std::move(p));
  }
  for (const auto& [deg, polys] : by_degree)
    if (!hilali::independent_cohomology_classes(m, polys)) classes_ok = false;

  std::cout << "  H " << (dims_ok ? "ok" : "MISMATCH");
  if (!entry.nonzero_classes.empty())
    std::cout << "  classes " << (classes_ok ? "ok" : "NOT INDEPENDENT");
  std::cout << "\n";
  if (!dims_ok || !classes_ok) all_ok = false;
  return kExitOk;
}

int cmd_catalog(const std::string& dump_name) {
  auto catalog = hilali::witness_catalog();
  if (!dump_name.empty()) {
    const auto* entry = hilali::find_catalog_entry(catalog, dump_name);
    if (!entry) {
      std::cerr << "error: no catalog entry named '" << dump_name << "'\n";
      return kExitUsage;
    }
    std::cout << hilali::write_model(entry->model);
    return kExitOk;
  }
  bool all_ok = true;
  for (const auto& entry : catalog) check_catalog_entry(entry, all_ok);
  return all_ok ? kExitOk : kExitValidationError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hilali: homotopy rank types of rationally elliptic spaces, cohomology "
      "lower-bound verification of the Hilali inequality, and exact "
      "cohomology of minimal Sullivan models"};
  app.footer(kExitTable);
  app.require_subcommand(1);

  int max_fd = 20;
  std::string format = "text";
  std::string out_path;
  std::string sac_text;
  std::string model_path;
  std::optional<int> up_to;
  std::string dump_name;

  auto* enumerate =
      app.add_subcommand("enumerate", "List all homotopy rank types per "
                                      "formal dimension up to --max-fd");
  enumerate->add_option("--max-fd", max_fd, "largest formal dimension")
      ->check(CLI::Range(1, hilali::kMaxSupportedFd))
      ->capture_default_str();
  enumerate->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  enumerate->add_option("--out", out_path, "write to file instead of stdout");

  auto* pipeline = app.add_subcommand(
      "pipeline", "Run every verification filter over all rank types and "
                  "report residual types per formal dimension");
  pipeline->add_option("--max-fd", max_fd, "largest formal dimension")
      ->check(CLI::Range(1, hilali::kMaxSupportedFd))
      ->capture_default_str();
  pipeline->add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  pipeline->add_option("--out", out_path, "write to file instead of stdout");

  auto* sac = app.add_subcommand(
      "sac", "Decide the strong arithmetic condition for one rank type");
  sac->add_option("rank_type", sac_text, "e.g. \"2,4,4:3,5,7,7\"")
      ->required();

  auto* check = app.add_subcommand(
      "check-model", "Validate a Sullivan model file and print its "
                     "cohomology, Euler characteristics and Hilali verdict");
  check->add_option("path", model_path, "JSON model file")->required();
  check->add_option("--up-to", up_to, "compute H^i for i <= this bound");

  auto* catalog = app.add_subcommand(
      "catalog", "Check the built-in witness models against their expected "
                 "cohomology");
  catalog->add_option("--dump", dump_name,
                      "print the named entry as a model JSON file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (enumerate->parsed()) return cmd_enumerate(max_fd, format, out_path);
    if (pipeline->parsed()) return cmd_pipeline(max_fd, format, out_path);
    if (sac->parsed()) return cmd_sac(sac_text);
    if (check->parsed()) return cmd_check_model(model_path, up_to);
    if (catalog->parsed()) return cmd_catalog(dump_name);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
