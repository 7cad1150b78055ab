#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "trop/io.hpp"
#include "trop/svg.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kTheoremViolation = 1;
constexpr int kUsageError = 2;

std::vector<long> parse_seeds(const std::string& csv) {
  if (csv.empty()) return trop::default_seeds();
  std::vector<long> seeds;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    const std::size_t comma = csv.find(',', pos);
    const std::string token =
        csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty()) throw trop::ParseError("empty entry in --seeds");
    std::size_t used = 0;
    const long value = std::stol(token, &used);
    if (used != token.size()) throw trop::ParseError("bad entry in --seeds: " + token);
    seeds.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (seeds.empty()) throw trop::ParseError("--seeds needs at least one integer");
  return seeds;
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    trop::save_text(path, text);
}

int cmd_hypersurface(const std::string& in_file, const std::string& out_file) {
  trop::Instance inst = trop::load_instance(in_file);
  if (inst.polynomials.size() != 1) {
    std::cerr << "hypersurface: instance must contain exactly 1 polynomial\n";
    return kUsageError;
  }
  write_or_print(out_file, trop::hypersurface_to_json(
                               trop::hypersurface(inst.polynomials[0])));
  return kOk;
}

int cmd_verify(const std::string& in_file, const std::string& seeds_csv,
               const std::string& report_path, bool subset_experiment,
               int corpus_count, const std::string& params_csv) {
  const std::vector<long> seeds = parse_seeds(seeds_csv);

  if (corpus_count > 0) {
    int n = 0, k = 0, degree = 0;
    if (std::sscanf(params_csv.c_str(), "%d,%d,%d", &n, &k, &degree) != 3) {
      std::cerr << "--corpus requires --params n,k,d\n";
      return kUsageError;
    }
    std::vector<trop::CorpusEntry> entries(corpus_count);
    trop::parallel_for_indices(corpus_count, [&](int i) {
      const long seed = 1 + i;
      trop::Instance inst = trop::random_instance(n, k, degree, 6, seed);
      entries[i].seed = seed;
      entries[i].audit = trop::audit_instance(inst, seeds, trop::shifted_seeds(50000));
    });
    write_or_print(report_path, trop::corpus_report_to_json(n, k, degree, entries));
    for (const trop::CorpusEntry& e : entries)
      if (e.audit.verdict == trop::Verdict::Fail) return kTheoremViolation;
    return kOk;
  }

  trop::Instance inst = trop::load_instance(in_file);
  const int k = static_cast<int>(inst.polynomials.size());

  if (subset_experiment) {
    if (k <= inst.n) {
      std::cerr << "--subset-experiment requires more polynomials than the "
                   "ambient dimension\n";
      return kUsageError;
    }
    trop::SubsetSeedingReport report =
        trop::experiment_subset_seeding(inst, seeds);
    write_or_print(report_path,
                   trop::subset_report_to_json(report, inst.n, k, seeds));
    return kOk;
  }

  trop::VerificationReport report = trop::check_seed_property(inst, seeds);
  write_or_print(report_path, trop::report_to_json(report));
  return report.verdict == trop::Verdict::Fail ? kTheoremViolation : kOk;
}

int cmd_plot(const std::string& in_file, const std::string& out_svg,
             const std::string& seeds_csv) {
  trop::Instance inst = trop::load_instance(in_file);
  if (inst.n != 2) {
    std::cerr << "plot: only planar instances (n = 2) can be rendered\n";
    return kUsageError;
  }
  write_or_print(out_svg, trop::render_plot(inst, parse_seeds(seeds_csv)));
  return kOk;
}

int cmd_mv(const std::string& in_file) {
  trop::Instance inst = trop::load_instance(in_file);
  if (static_cast<int>(inst.polynomials.size()) != inst.n) {
    std::cerr << "mv: need exactly n = " << inst.n << " polynomials\n";
    return kUsageError;
  }
  std::vector<trop::Support> supports;
  for (const trop::TropicalPolynomial& f : inst.polynomials)
    supports.push_back(f.support);
  std::cout << trop::rat_to_string(trop::Rat(trop::mixed_volume(supports, inst.n)))
            << "\n";
  return kOk;
}

int cmd_yu(const std::string& in_file) {
  trop::Instance inst = trop::load_instance(in_file);
  if (static_cast<int>(inst.polynomials.size()) > inst.n) {
    std::cerr << "yu: need at most n = " << inst.n << " polynomials\n";
    return kUsageError;
  }
  std::vector<trop::Support> supports;
  for (const trop::TropicalPolynomial& f : inst.polynomials)
    supports.push_back(f.support);
  trop::YuResult result = trop::yu_conditions(supports, inst.n);
  if (result.satisfied) {
    std::cout << "satisfied\n";
  } else {
    std::vector<int> witness(*result.witness);
    std::sort(witness.begin(), witness.end());
    std::cout << "violated J={";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i) std::cout << ",";
      std::cout << witness[i] + 1;
    }
    std::cout << "}\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tropical hypersurfaces, intersections and stable intersections"};
  app.require_subcommand(1);

  std::string in_file, out_file, seeds_csv, report_path, params_csv;
  bool subset_experiment = false;
  int corpus_count = 0;

  CLI::App* hyper = app.add_subcommand(
      "hypersurface", "compute a tropical hypersurface (cells, weights, dual edges)");
  hyper->add_option("input", in_file, "instance file (1 polynomial)")->required();
  hyper->add_option("output", out_file, "output file (default: stdout)");

  CLI::App* verify = app.add_subcommand(
      "verify", "check that every component of the intersection holds a stable point");
  verify->add_option("input", in_file, "instance file");
  verify->add_option("--seeds", seeds_csv, "comma-separated displacement seeds");
  verify->add_option("--report", report_path, "write the report here (default: stdout)");
  verify->add_flag("--subset-experiment", subset_experiment,
                   "classify stable points of n-subsets (requires k > n)");
  verify->add_option("--corpus", corpus_count, "verify this many random instances");
  verify->add_option("--params", params_csv, "corpus parameters n,k,d");

  CLI::App* plot = app.add_subcommand("plot", "render a planar instance as SVG");
  plot->add_option("input", in_file, "instance file (n = 2)")->required();
  plot->add_option("output", out_file, "SVG output path")->required();
  plot->add_option("--seeds", seeds_csv, "comma-separated displacement seeds");

  CLI::App* mv = app.add_subcommand("mv", "normalized mixed volume of the Newton polytopes");
  mv->add_option("input", in_file, "instance file (exactly n polynomials)")->required();

  CLI::App* yu = app.add_subcommand(
      "yu", "span/mixed-volume support conditions with violating subset");
  yu->add_option("input", in_file, "instance file (at most n polynomials)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsageError;
  }

  try {
    if (hyper->parsed()) return cmd_hypersurface(in_file, out_file);
    if (verify->parsed()) {
      if (corpus_count <= 0 && in_file.empty()) {
        std::cerr << "verify: need an instance file (or --corpus)\n";
        return kUsageError;
      }
      return cmd_verify(in_file, seeds_csv, report_path, subset_experiment,
                        corpus_count, params_csv);
    }
    if (plot->parsed()) return cmd_plot(in_file, out_file, seeds_csv);
    if (mv->parsed()) return cmd_mv(in_file);
    if (yu->parsed()) return cmd_yu(in_file);
  } catch (const trop::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
