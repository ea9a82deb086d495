#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vrel/graph.hpp"
#include "vrel/random.hpp"

namespace vrel {

enum class GraphModel { kErdosRenyi, kBarabasiAlbert, kWattsStrogatz };

std::string_view model_name(GraphModel model);  // "er", "ba", "ws"
std::optional<GraphModel> parse_model(std::string_view name);

// G(n, p): each pair independently, visited in row-major upper-triangle order.
SimpleGraph gen_er(int n, double p, Rng& rng);
// Preferential attachment grown from a clique on m_attach vertices.
SimpleGraph gen_ba(int n, int m_attach, Rng& rng);
// Ring lattice of degree k, each lattice edge rewired with probability beta.
SimpleGraph gen_ws(int n, int k, double beta, Rng& rng);

struct DatasetSpec {
  std::vector<int> orders;
  int er_count = 0;
  int ba_count = 0;
  int ws_count = 0;
  double er_p = 0.3;
  int ba_m = 2;
  int ws_k = 4;
  double ws_beta = 0.2;
  std::uint64_t master_seed = 0;
  std::uint64_t max_attempts = 100000;  // per accepted graph

  void validate() const;
};

// A graph together with the labels the evaluation pipeline reports on.
struct DatasetGraph {
  std::string id;
  std::string model;
  SimpleGraph graph;
};

struct DatasetEntry {
  DatasetGraph item;
  std::uint64_t seed = 0;
  std::uint64_t attempt = 0;
  std::string canonical_key;
};

struct CellStats {
  GraphModel model = GraphModel::kErdosRenyi;
  int order = 0;
  std::uint64_t attempts = 0;
  std::uint64_t accepted = 0;
  std::uint64_t rejected_disconnected = 0;
  std::uint64_t rejected_pendant = 0;
  std::uint64_t rejected_isomorphic = 0;
};

struct Dataset {
  DatasetSpec spec;
  std::vector<DatasetEntry> graphs;
  std::vector<CellStats> cells;
};

// Seed of one generation attempt; depends only on its own cell, so changing
// one model's quota leaves the other streams untouched.
std::uint64_t attempt_seed(std::uint64_t master_seed, GraphModel model, int order, std::uint64_t attempt);

// Rejection sampling per (order, model) cell: connected, minimum degree >= 2,
// no isomorph anywhere in the dataset. Throws kQuotaFailure with the
// acceptance rate when a cell stalls for max_attempts draws.
Dataset build_dataset(const DatasetSpec& spec);

// Directory layout: graphs/<id>.el plus manifest.json.
void write_dataset(const std::filesystem::path& dir, const Dataset& dataset);

struct LoadedDataset {
  std::string manifest_hash;
  std::string spec_json;  // compact JSON of the generating spec
  std::vector<DatasetGraph> graphs;
};

// Verifies the manifest hash and every graph file digest (kManifestMismatch).
LoadedDataset load_dataset(const std::filesystem::path& dir);

}  // namespace vrel
