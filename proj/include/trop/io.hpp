#pragma once

#include <string>

#include "trop/theorem_lab.hpp"

namespace trop {

/// Instance file, version 1:
/// {
///   "version": 1,
///   "n": 2,
///   "polynomials": [
///     { "support": [[0,0],[1,0],[0,1]], "coeffs": ["0", "-1/2", "3"] }
///   ]
/// }
/// Rationals are "p/q" strings ("p" for integers); exponents are integers.
Instance parse_instance(const std::string& json_text);
std::string instance_to_json(const Instance& instance);

Instance load_instance(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

std::string hypersurface_to_json(const TropicalHypersurface& surface);
std::string report_to_json(const VerificationReport& report);
std::string subset_report_to_json(const SubsetSeedingReport& report, int n, int k,
                                  const std::vector<long>& seeds);

struct CorpusEntry {
  long seed = 0;
  InstanceAudit audit;
};
std::string corpus_report_to_json(int n, int k, int degree,
                                  const std::vector<CorpusEntry>& entries);

}  // namespace trop
