#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "gdelta/pipeline.hpp"

namespace gdelta {

/// Complete computation results persisted as JSON, keyed by (delta, r, mode, algorithm version).
/// Every put rewrites the file.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path path);

  std::optional<ComputationResult> get(Entry delta, std::size_t r, CandidateMode mode, bool allow_negations = false) const;
  /// Incomplete results are rejected with InvalidInput.
  void put(const ComputationResult& res);
  std::size_t size() const;

  static std::string key(Entry delta, std::size_t r, CandidateMode mode, bool allow_negations);

 private:
  void save() const;

  std::filesystem::path path_;
  mutable std::mutex mu_;
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

}  // namespace gdelta
