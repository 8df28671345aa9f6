#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "nesphere/types.h"

namespace nesphere {

using Vector = Eigen::VectorXd;

struct LoadReport {
  std::size_t loaded = 0;
  std::size_t duplicates = 0;
};

/// Token -> vector table with a fixed dimension. Immutable once built and
/// safe to share across threads.
///
/// File format: line 1 "<count> <dim>", then one "<token> <v1> ... <vd>"
/// line per vector, single-space separated, '\n' endings. Values are
/// written in shortest round-trip form, so save/load is bit-exact.
class EmbeddingSpace {
 public:
  static EmbeddingSpace load(const std::string& path,
                             std::optional<int> expected_dim = std::nullopt,
                             LoadReport* report = nullptr);

  /// Builder for generated spaces. Tokens must be nonempty and unique,
  /// vectors finite and of equal dimension.
  static EmbeddingSpace from_rows(
      int dim, std::vector<std::pair<std::string, Vector>> rows,
      std::string language_tag);

  void save(const std::string& path) const;

  int dim() const { return dim_; }
  std::size_t size() const { return tokens_.size(); }
  const std::string& language_tag() const { return language_tag_; }

  /// Tokens in insertion (file) order.
  const std::vector<std::string>& tokens() const { return tokens_; }

  bool contains(std::string_view token) const;
  std::optional<Eigen::Index> index_of(std::string_view token) const;

  /// Row view of one embedding; valid while the space lives.
  Eigen::MatrixXd::ConstRowXpr row(Eigen::Index i) const {
    return vectors_.row(i);
  }
  Vector vector_of(std::string_view token) const;

  /// size() x dim() matrix, rows in token order.
  const Eigen::MatrixXd& matrix() const { return vectors_; }

  /// Mean of the vectors of the phrase tokens present in this space;
  /// absent when no token resolves.
  std::optional<Vector> phrase_vector(const Phrase& phrase) const;

 private:
  EmbeddingSpace() = default;

  int dim_ = 0;
  std::string language_tag_;
  std::vector<std::string> tokens_;
  Eigen::MatrixXd vectors_;
  // token -> row index; keys point into tokens_.
  std::vector<Eigen::Index> sorted_index_;  // token order, binary searched
};

/// sqrt(sum((a_i - b_i)^2)); throws DataError on length mismatch.
double euclidean_distance(const Vector& a, const Vector& b);

struct Neighbor {
  std::string token;
  double distance;
};

/// The k tokens nearest to `query`, ascending by distance, ties broken by
/// token order, tokens in `exclude` skipped. Returns fewer than k when the
/// vocabulary is exhausted. Exact brute-force scan.
std::vector<Neighbor> nearest_neighbors(const EmbeddingSpace& space,
                                        const Vector& query, std::size_t k,
                                        const std::set<std::string>& exclude = {});

struct Projected {
  std::string token;
  double x;
  double y;
};

/// PCA of the selected (resolvable) tokens onto the top two principal
/// components. Sign convention: the first nonzero loading of each component
/// is positive. Tokens missing from the space are skipped; fewer than two
/// resolvable tokens is an error.
std::vector<Projected> project_2d(const EmbeddingSpace& space,
                                  const std::vector<std::string>& tokens);

}  // namespace nesphere
