#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>

#include "nesphere/embedding.h"
#include "nesphere/types.h"

namespace nesphere {

/// Per-type sets of named-entity surface forms.
struct NeDictionary {
  std::map<NeType, std::set<Phrase>> entries;
  std::string language_tag;

  const std::set<Phrase>& of(NeType type) const;
  std::size_t total_size() const;
};

/// Loads one entity type from a text file: one NE per line, tokens
/// space-separated, blank lines and '#' comments skipped, duplicates
/// collapsed. Empty result after filtering is an error.
NeDictionary load_dictionary(const std::string& path, NeType type,
                             std::string language_tag = {});

struct DatasetSplit {
  NeDictionary train;
  NeDictionary test;
  std::uint64_t seed = 0;
  double ratio = 0.0;
};

/// Deterministic per-type split: entries are shuffled by `seed` and the
/// first floor(ratio*n) go to train, the remainder to test. Every type
/// needs at least two entries. Identical inputs give identical splits.
DatasetSplit split_dictionary(const NeDictionary& dict, double ratio,
                              std::uint64_t seed);

struct CoverageEntry {
  std::size_t covered = 0;
  std::size_t total = 0;
  double fraction = 0.0;
};

/// An entry is covered iff phrase_vector resolves (at least one token in
/// the vocabulary).
std::map<NeType, CoverageEntry> coverage_report(const NeDictionary& dict,
                                                const EmbeddingSpace& space);

}  // namespace nesphere
