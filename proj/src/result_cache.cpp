#include "gdelta/result_cache.hpp"

#include <fstream>
#include <json.hpp>

#include "gdelta/errors.hpp"
#include "gdelta/matrix_io.hpp"

namespace gdelta {

using nlohmann::json;

struct ResultCache::Impl {
  json entries = json::object();
};

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)), impl_(std::make_shared<Impl>()) {
  if (!std::filesystem::exists(path_)) return;
  std::ifstream in(path_);
  try {
    json doc = json::parse(in);
    if (doc.contains("entries") && doc["entries"].is_object()) impl_->entries = doc["entries"];
  } catch (const json::exception& e) {
    throw InvalidInput("cache " + path_.string() + " is not valid JSON: " + e.what());
  }
}

std::string ResultCache::key(Entry delta, std::size_t r, CandidateMode mode, bool allow_negations) {
  return std::to_string(delta) + "/" + std::to_string(r) + "/" + mode_name(mode) + (allow_negations ? "+neg" : "") + "/" +
         kAlgorithmVersion;
}

std::optional<ComputationResult> ResultCache::get(Entry delta, std::size_t r, CandidateMode mode, bool allow_negations) const {
  std::lock_guard lock(mu_);
  const auto it = impl_->entries.find(key(delta, r, mode, allow_negations));
  if (it == impl_->entries.end()) return std::nullopt;
  const json& j = *it;
  ComputationResult res;
  res.delta = delta;
  res.r = r;
  res.mode = mode;
  res.allow_negations = allow_negations;
  res.value = j.at("value").get<Entry>();
  res.witness = parse_witness(j.at("witness").get<std::string>());
  if (j.contains("source_hnf")) res.source_hnf = HnfMatrix(parse_witness(j.at("source_hnf").get<std::string>()));
  res.source_index = j.at("source_index").get<std::size_t>();
  res.clique_size = j.at("clique_size").get<std::size_t>();
  res.hnfs_processed = j.at("hnfs_processed").get<std::size_t>();
  res.nodes = j.at("nodes").get<std::uint64_t>();
  res.elapsed = std::chrono::milliseconds(j.at("elapsed_ms").get<std::int64_t>());
  res.complete = true;
  return res;
}

void ResultCache::put(const ComputationResult& res) {
  if (!res.complete) throw InvalidInput("ResultCache: refusing to store an incomplete result");
  json j;
  j["value"] = res.value;
  j["witness"] = format_witness(res.witness);
  if (res.source_hnf) j["source_hnf"] = format_witness(res.source_hnf->matrix());
  j["source_index"] = res.source_index;
  j["clique_size"] = res.clique_size;
  j["hnfs_processed"] = res.hnfs_processed;
  j["nodes"] = res.nodes;
  j["elapsed_ms"] = res.elapsed.count();
  {
    std::lock_guard lock(mu_);
    impl_->entries[key(res.delta, res.r, res.mode, res.allow_negations)] = std::move(j);
  }
  save();
}

std::size_t ResultCache::size() const {
  std::lock_guard lock(mu_);
  return impl_->entries.size();
}

void ResultCache::save() const {
  std::lock_guard lock(mu_);
  const auto tmp = std::filesystem::path(path_.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw InvalidInput("cannot write cache " + tmp.string());
    out << json{{"entries", impl_->entries}}.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path_);
}

}  // namespace gdelta
