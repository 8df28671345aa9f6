#pragma once

#include <cstddef>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "nesphere/dictionary.h"
#include "nesphere/embedding.h"
#include "nesphere/types.h"

namespace nesphere {

/// Open NE model: every vector within `radius` of `center` (boundary
/// inclusive) is predicted to be an entity of `ne_type`.
struct Hypersphere {
  Vector center;
  double radius = 0.0;
  NeType ne_type = NeType::Per;

  int dim() const { return static_cast<int>(center.size()); }
};

bool sphere_contains(const Hypersphere& sphere, const Vector& x);

/// E(x, center). Smaller means more entity-like; the radius is the
/// detection threshold.
double ne_likelihood(const Hypersphere& sphere, const Vector& x);

struct EvalReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  /// Dictionary entries with no token in the vocabulary; excluded from the
  /// counts above.
  std::size_t unresolved = 0;
};

/// precision = tp/(tp+fp), recall = tp/(tp+fn), zero denominators give 0;
/// f1 is the harmonic mean (0 when either rate is 0).
EvalReport make_eval_report(std::size_t tp, std::size_t fp, std::size_t fn,
                            std::size_t unresolved);

enum class RadiusCandidates { kTrainDistances, kUniformGrid };

struct FitConfig {
  /// Outlier-discard distance thresholds. Empty selects the default family:
  /// the {0.90, 0.95, 0.99, 1.0} quantiles of the initial train distances.
  std::vector<double> q_grid;
  int max_iterations = 20;
  double f1_tolerance = 1e-4;
  RadiusCandidates radius_candidates = RadiusCandidates::kTrainDistances;
  /// Number of radii when radius_candidates is kUniformGrid.
  int grid_size = 64;
};

struct FitResult {
  Hypersphere sphere;
  EvalReport report;
  /// Threshold that produced the winning center; +inf for the unfiltered
  /// iteration-0 sphere.
  double q = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

/// Counts over the candidate set (all vocabulary tokens plus every
/// resolvable dictionary phrase vector): TP = resolvable entries inside the
/// sphere, FN = resolvable entries outside, FP = vocabulary tokens inside
/// whose surface form is not an entry.
EvalReport evaluate_hypersphere(const Hypersphere& sphere,
                                const EmbeddingSpace& space,
                                const std::set<Phrase>& dict_entries);

/// Fits center and radius to maximize F1 against `eval_dict`.
///
/// Search schedule (tests replay it verbatim against a naive oracle):
///   0. C0 = mean of the resolvable train vectors; scan all candidate radii
///      at C0 and record the best sphere (tagged q = +inf).
///   1..max_iterations: one pass over q_grid in ascending order, filtering
///      train vectors to distance <= q around the best center found so far
///      (C0 on the first pass), recentering on the survivors and rescanning
///      radii. A pass that improves the best F1 by less than f1_tolerance
///      ends the search.
/// Candidate radii are the sorted distinct train distances to the center
/// under scan (or a uniform grid over [minDist, maxDist] when configured).
/// Best-so-far ordering: higher F1, then smaller radius, then smaller q.
FitResult fit_hypersphere(const EmbeddingSpace& space,
                          const std::set<Phrase>& train,
                          const std::set<Phrase>& eval_dict,
                          const FitConfig& config = {});

/// Persistence: line 1 "<ne_type> <dim> <radius>", line 2 the center
/// components, space separated, shortest round-trip form.
void save_sphere(const Hypersphere& sphere, const std::string& path);
Hypersphere load_sphere(const std::string& path);

/// "type\ttp\tfp\tfn\tprecision\trecall\tf1"
std::string eval_report_row(NeType type, const EvalReport& report);

}  // namespace nesphere
