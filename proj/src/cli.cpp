#include "ballspec/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "ballspec/contradiction.hpp"
#include "ballspec/distances.hpp"
#include "ballspec/domains.hpp"
#include "ballspec/errors.hpp"
#include "ballspec/ortho.hpp"
#include "ballspec/search.hpp"

namespace ballspec::cli {

namespace {

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write '" + path + "'");
  file << text;
}

Domain require_ball(const std::string& spec) {
  const Domain domain = parse_domain(spec);
  if (!domain.is_ball()) throw std::invalid_argument("this command needs a ball domain");
  return domain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier zero sets, orthogonal exponentials and distinct distances"};
  app.name("ballspec");
  app.require_subcommand(1);

  std::string domain_spec;
  std::string output;
  double tol = 1e-9;
  double horizon = 0.0;
  std::string points_path;
  std::string mode = "exact";
  std::vector<double> radii;
  double density_constant = 1.0;
  double search_R = 1.0;
  std::string strategy = "chain";
  std::size_t budget = 1'000'000;
  std::uint64_t seed = 0;
  std::string log_path;

  auto* zeros = app.add_subcommand("zeros", "List the sphere radii of the ball transform's zero set");
  zeros->add_option("--domain", domain_spec, "ball:D")->required();
  zeros->add_option("--horizon", horizon, "Largest radius to enumerate")->required();
  zeros->add_option("--output", output, "Write to this file instead of stdout");

  auto* check = app.add_subcommand("check", "Test Lambda - Lambda against the zero set");
  check->add_option("--domain", domain_spec, "cube:D or ball:D")->required();
  check->add_option("--points,points", points_path, "Point-set CSV")->required();
  check->add_option("--tol", tol, "Membership tolerance");
  check->add_option("--output", output, "Write to this file instead of stdout");

  auto* dist = app.add_subcommand("distances", "Distinct pairwise distances of a point set");
  dist->add_option("--points,points", points_path, "Point-set CSV")->required();
  dist->add_option("--mode", mode, "exact or clustered")->check(CLI::IsMember({"exact", "clustered"}));
  dist->add_option("--tol", tol, "Cluster merge tolerance");
  dist->add_option("--output", output, "Write to this file instead of stdout");

  auto* contra = app.add_subcommand("contradiction", "Available vs demanded distinct distances");
  contra->add_option("--domain", domain_spec, "ball:D")->required();
  contra->add_option("--R", radii, "Ascending radii, comma separated")->delimiter(',');
  contra->add_option("--density-constant", density_constant, "c in (c R^d)^{3/(3d-2)}");
  contra->add_option("--output", output, "Write to this file instead of stdout");

  auto* search = app.add_subcommand("search", "Search for a large orthogonal set in the ball");
  search->add_option("--domain", domain_spec, "ball:D")->required();
  search->add_option("--R", search_R, "Radius of the region searched");
  search->add_option("--strategy", strategy, "chain or clique")->check(CLI::IsMember({"chain", "clique"}));
  search->add_option("--budget", budget, "Search-node budget");
  search->add_option("--seed", seed, "Vertex-order seed");
  search->add_option("--tol", tol, "Membership tolerance");
  search->add_option("--output", output, "Write the point set here instead of stdout");
  search->add_option("--log", log_path, "Write the JSON search log here instead of stderr");

  std::vector<std::string> argv_storage{"ballspec"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ballspec: " << e.what() << '\n';
    return kExitError;
  }

  try {
    if (*zeros) {
      const Domain domain = require_ball(domain_spec);
      if (!(horizon > 0.0)) throw std::invalid_argument("--horizon must be positive");
      emit(to_csv(ball_zero_set(domain.dimension(), horizon)), output, out);
      return kExitOk;
    }
    if (*check) {
      const Domain domain = parse_domain(domain_spec);
      const PointSet points = read_point_set(points_path);
      const OrthoReport report = check_orthogonal(domain, points, tol);
      emit(to_json(report), output, out);
      return report.verdict ? kExitOk : kExitVerdictFalse;
    }
    if (*dist) {
      const PointSet points = read_point_set(points_path);
      const auto m = mode == "exact" ? DistanceMode::Exact : DistanceMode::Clustered;
      emit(to_csv(distinct_distances(points, m, tol)), output, out);
      return kExitOk;
    }
    if (*contra) {
      const Domain domain = require_ball(domain_spec);
      emit(to_csv(contradiction_table(domain.dimension(), radii, density_constant)), output, out);
      return kExitOk;
    }
    if (*search) {
      const Domain domain = require_ball(domain_spec);
      const SearchResult result = search_orthogonal_set(domain.dimension(), search_R,
                                                        parse_strategy(strategy), budget, seed, tol);
      emit(to_csv(result.points), output, out);
      if (log_path.empty()) {
        err << to_json(result.log);
      } else {
        emit(to_json(result.log), log_path, out);
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "ballspec: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace ballspec::cli
