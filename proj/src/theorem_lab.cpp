#include "trop/theorem_lab.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <random>
#include <thread>

namespace trop {

namespace {

std::vector<IntVec> simplex_lattice_points(int n, int degree) {
  std::vector<IntVec> points;
  IntVec current(n, Int(0));
  std::function<void(int, int)> rec = [&](int coord, int used) {
    if (coord == n) {
      points.push_back(current);
      return;
    }
    for (int v = 0; v + used <= degree; ++v) {
      current[coord] = v;
      rec(coord + 1, used + v);
    }
    current[coord] = 0;
  };
  rec(0, 0);
  std::sort(points.begin(), points.end());
  return points;
}

bool is_simplex_vertex(const IntVec& p, int degree) {
  Int total = 0;
  int nonzero = 0;
  for (const Int& x : p) {
    total += x;
    if (x != 0) ++nonzero;
  }
  if (total == 0) return true;
  return nonzero == 1 && total == degree;
}

Rat draw_coeff(std::mt19937_64& eng, int coeff_bound) {
  const long p = static_cast<long>(eng() % (2 * coeff_bound + 1)) - coeff_bound;
  const long q = static_cast<long>(eng() % coeff_bound) + 1;
  Rat c(p, q);
  c.canonicalize();
  return c;
}

Instance random_instance_impl(int n, int k, int degree, int coeff_bound,
                              long seed, bool force_vertices) {
  if (n < 1 || n > 3 || k < 1 || k > n)
    throw std::invalid_argument("random_instance: need 1 <= k <= n <= 3");
  if (degree < 1 || degree > 4)
    throw std::invalid_argument("random_instance: need 1 <= degree <= 4");
  if (coeff_bound < 1)
    throw std::invalid_argument("random_instance: coefficient bound must be >= 1");

  std::mt19937_64 eng(static_cast<std::uint64_t>(seed) * 0x9e3779b97f4a7c15ULL +
                      0x2545f4914f6cdd1dULL);
  const std::vector<IntVec> lattice = simplex_lattice_points(n, degree);

  Instance inst;
  inst.n = n;
  inst.seed = seed;
  for (int poly = 0; poly < k; ++poly) {
    std::vector<IntVec> support;
    for (const IntVec& p : lattice) {
      const bool keep = (force_vertices && is_simplex_vertex(p, degree)) ||
                        (eng() & 1);
      if (keep) support.push_back(p);
    }
    if (support.empty()) support.push_back(lattice.front());
    RatVec coeffs;
    coeffs.reserve(support.size());
    for (std::size_t i = 0; i < support.size(); ++i)
      coeffs.push_back(draw_coeff(eng, coeff_bound));
    inst.polynomials.push_back(make_polynomial(n, std::move(support), std::move(coeffs)));
  }
  return inst;
}

std::vector<WeightedComplex> surface_complexes(
    const std::vector<TropicalHypersurface>& surfaces) {
  std::vector<WeightedComplex> complexes;
  complexes.reserve(surfaces.size());
  for (const TropicalHypersurface& s : surfaces) complexes.push_back(as_complex(s));
  return complexes;
}

}  // namespace

Instance random_instance(int n, int k, int degree, int coeff_bound, long seed) {
  return random_instance_impl(n, k, degree, coeff_bound, seed, true);
}

Instance random_sparse_instance(int n, int k, int degree, int coeff_bound,
                                long seed) {
  return random_instance_impl(n, k, degree, coeff_bound, seed, false);
}

VerificationReport check_seed_property(const Instance& instance,
                                       const std::vector<long>& seeds) {
  VerificationReport report;
  report.n = instance.n;
  report.k = static_cast<int>(instance.polynomials.size());
  report.seeds = seeds;
  for (const TropicalPolynomial& f : instance.polynomials)
    report.surfaces.push_back(hypersurface(f));

  report.cover = support_intersection(report.surfaces);
  report.components = connected_components(report.cover);
  report.stable = stable_intersection_many(surface_complexes(report.surfaces), seeds);

  for (std::size_t g = 0; g < report.components.groups.size(); ++g) {
    ComponentInfo info;
    info.cover_cells = report.components.groups[g];
    report.component_info.push_back(std::move(info));
  }

  if (report.stable.empty()) {
    report.verdict = Verdict::Vacuous;
    return report;
  }

  for (std::size_t s = 0; s < report.stable.cells.size(); ++s) {
    const StableCell& cell = report.stable.cells[s];
    int assigned = -1;
    for (std::size_t g = 0; g < report.components.groups.size(); ++g) {
      for (int idx : report.components.groups[g]) {
        Polyhedron shared = intersect(cell.cell, report.cover[idx]);
        InteriorProbe probe = strict_interior(shared);
        if (probe.empty) continue;
        if (assigned >= 0 && assigned != static_cast<int>(g))
          throw std::logic_error(
              "stable cell meets two distinct components of the intersection");
        if (assigned < 0) {
          assigned = static_cast<int>(g);
          ComponentInfo& info = report.component_info[g];
          if (!info.witness_cell) {
            info.witness_cell = static_cast<int>(s);
            info.witness_point = probe.point;
          }
        }
      }
    }
    if (assigned < 0)
      throw std::logic_error(
          "stable cell lies outside the intersection of the supports");
  }

  report.verdict = Verdict::Pass;
  for (const ComponentInfo& info : report.component_info)
    if (!info.witness_cell) report.verdict = Verdict::Fail;
  return report;
}

bool check_translate_lemma(const TropicalHypersurface& surface,
                           const RatMat& a_rows, const RatVec& v,
                           const RatVec& v2, const std::vector<long>& seeds) {
  const int n = surface.n;
  auto subspace = [&](const RatVec& offset) {
    Polyhedron p;
    p.ambient = n;
    for (const RatVec& row : a_rows)
      p.eqs.push_back(Constraint{row, dot(row, offset)});
    return make_complex(n, n - rank(a_rows), {{std::move(p), Int(1)}});
  };
  const WeightedComplex sigma = as_complex(surface);
  const bool empty1 =
      stable_intersection_many({subspace(v), sigma}, seeds).empty();
  const bool empty2 =
      stable_intersection_many({subspace(v2), sigma}, seeds).empty();
  return empty1 == empty2;
}

TriState check_component_conspiracy(const Instance& instance,
                                    const TropicalPolynomial& extra,
                                    const std::vector<long>& seeds) {
  std::vector<TropicalHypersurface> surfaces;
  for (const TropicalPolynomial& f : instance.polynomials)
    surfaces.push_back(hypersurface(f));
  StableIntersection stable =
      stable_intersection_many(surface_complexes(surfaces), seeds);
  if (stable.empty()) return TriState::Inconclusive;

  std::vector<Polyhedron> cell_polys;
  for (const StableCell& c : stable.cells) cell_polys.push_back(c.cell);
  ComponentPartition partition = connected_components(cell_polys);
  if (partition.groups.size() < 2) return TriState::Inconclusive;

  const WeightedComplex extra_complex = as_complex(hypersurface(extra));
  std::optional<bool> flag;
  for (const std::vector<int>& group : partition.groups) {
    WeightedComplex gamma;
    gamma.ambient = stable.ambient;
    gamma.pure_dim = stable.pure_dim();
    for (int idx : group) {
      const StableCell& c = stable.cells[idx];
      WCell cell;
      cell.poly = c.cell;
      cell.weight = c.multiplicity;
      cell.interior = c.interior;
      cell.dim = c.dim;
      cell.dir_basis = c.dir_basis;
      cell.dir_lattice = c.dir_lattice;
      gamma.cells.push_back(std::move(cell));
    }
    const bool empty =
        stable_intersection_many({gamma, extra_complex}, seeds).empty();
    if (!flag)
      flag = empty;
    else if (*flag != empty)
      return TriState::False;
  }
  return TriState::True;
}

SubsetSeedingReport experiment_subset_seeding(const Instance& instance,
                                              const std::vector<long>& seeds) {
  const int n = instance.n;
  const int k = static_cast<int>(instance.polynomials.size());
  if (k <= n)
    throw std::invalid_argument("experiment_subset_seeding: requires k > n");

  std::vector<TropicalHypersurface> surfaces;
  for (const TropicalPolynomial& f : instance.polynomials)
    surfaces.push_back(hypersurface(f));

  SubsetSeedingReport report;
  std::vector<Polyhedron> cover = support_intersection(surfaces);
  if (cover.empty()) {
    report.vacuous = true;
    return report;
  }
  ComponentPartition partition = connected_components(cover);
  report.component_count = static_cast<int>(partition.groups.size());
  report.per_component.resize(partition.groups.size());

  std::vector<int> cover_group(cover.size(), -1);
  for (std::size_t g = 0; g < partition.groups.size(); ++g)
    for (int idx : partition.groups[g]) cover_group[idx] = static_cast<int>(g);

  // all n-subsets of [k], lexicographic
  std::vector<std::vector<int>> subsets;
  std::vector<int> pick(n);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      subsets.push_back(pick);
      return;
    }
    for (int i = start; i < k; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);

  for (const std::vector<int>& subset : subsets) {
    std::vector<WeightedComplex> chosen;
    for (int j : subset) chosen.push_back(as_complex(surfaces[j]));
    StableIntersection stable = stable_intersection_many(chosen, seeds);
    for (const StableCell& cell : stable.cells) {
      SubsetSeedingReport::PointRecord rec_point;
      rec_point.subset = subset;
      rec_point.point = cell.interior;
      rec_point.multiplicity = cell.multiplicity;
      for (std::size_t idx = 0; idx < cover.size(); ++idx) {
        if (contains(cover[idx], cell.interior)) {
          rec_point.component = cover_group[idx];
          break;
        }
      }
      if (rec_point.component >= 0)
        report.per_component[rec_point.component].push_back(
            SubsetWitness{subset, cell.interior});
      report.points.push_back(std::move(rec_point));
    }
  }

  report.every_component_witnessed = true;
  for (const auto& witnesses : report.per_component)
    if (witnesses.empty()) report.every_component_witnessed = false;
  return report;
}

InstanceAudit audit_instance(const Instance& instance,
                             const std::vector<long>& seeds_a,
                             const std::vector<long>& seeds_b) {
  InstanceAudit audit;
  const int n = instance.n;
  const int k = static_cast<int>(instance.polynomials.size());

  VerificationReport report = check_seed_property(instance, seeds_a);
  audit.verdict = report.verdict;
  audit.component_count = static_cast<int>(report.components.groups.size());
  audit.stable_count = static_cast<int>(report.stable.cells.size());
  audit.total_multiplicity = report.stable.total_multiplicity();

  for (const TropicalHypersurface& s : report.surfaces)
    if (!is_balanced(as_complex(s)).balanced) audit.surfaces_balanced = false;

  if (!report.stable.empty()) {
    audit.stable_balanced = is_balanced(report.stable.as_complex()).balanced;
    audit.codim_additive = report.stable.codim == k;
    for (const StableCell& c : report.stable.cells)
      if (c.dim != n - k) audit.codim_additive = false;
    audit.witness_bound_ok = audit.component_count <= audit.stable_count;

    for (const StableCell& c : report.stable.cells)
      for (const TropicalPolynomial& f : instance.polynomials)
        if (eval_trop(f, c.interior).argmin.size() < 2) audit.containment_ok = false;
  }

  // second, independent displacement draw: supports and multiplicities agree
  StableIntersection again =
      stable_intersection_many(surface_complexes(report.surfaces), seeds_b);
  if (again.cells.size() != report.stable.cells.size()) {
    audit.perturbation_independent = false;
  } else {
    for (std::size_t i = 0; i < again.cells.size(); ++i) {
      if (canonical_key(again.cells[i].cell) !=
              canonical_key(report.stable.cells[i].cell) ||
          again.cells[i].multiplicity != report.stable.cells[i].multiplicity)
        audit.perturbation_independent = false;
    }
  }

  if (k == n) {
    std::vector<Support> supports;
    for (const TropicalPolynomial& f : instance.polynomials)
      supports.push_back(f.support);
    audit.bernstein = mixed_volume(supports, n);
  }
  return audit;
}

void parallel_for_indices(int count, const std::function<void(int)>& fn) {
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = std::max(1, std::min<int>(static_cast<int>(hw ? hw : 1), 8));
  if (workers == 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (std::thread& t : pool) t.join();
}

const std::vector<long>& default_seeds() {
  static const std::vector<long> seeds = {1001, 1002, 1003, 1004,
                                          1005, 1006, 1007, 1008};
  return seeds;
}

std::vector<long> shifted_seeds(long offset) {
  std::vector<long> seeds = default_seeds();
  for (long& s : seeds) s += offset;
  return seeds;
}

}  // namespace trop
