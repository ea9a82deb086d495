#include <gtest/gtest.h>

#include <filesystem>
#include <numeric>
#include <set>

#include "support.hpp"
#include "vrel/canonical.hpp"
#include "vrel/error.hpp"
#include "vrel/generators.hpp"
#include "vrel/graph_io.hpp"

namespace vrel {
namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no vrel::Error thrown";
  return Errc::kIo;
}

TEST(Rng, PortableHelpers) {
  Rng rng(1);
  for (int k = 0; k < 1000; ++k) {
    EXPECT_LT(uniform_index(rng, 7), 7U);
    const double u = uniform_unit(rng);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_NE(derive_seed({1, 2}), derive_seed({2, 1}));
  EXPECT_EQ(derive_seed({5, 6, 7}), derive_seed({5, 6, 7}));
  // mt19937_64 reference: the 10000th output for the default seed.
  Rng reference;
  reference.discard(9999);
  EXPECT_EQ(reference(), 9981545732273789042ULL);
}

TEST(ErdosRenyi, Extremes) {
  Rng rng(1);
  EXPECT_EQ(gen_er(6, 1.0, rng), testing::complete_graph(6));
  EXPECT_EQ(gen_er(6, 0.0, rng).size(), 0);
  Rng a(42), b(42);
  EXPECT_EQ(gen_er(12, 0.3, a), gen_er(12, 0.3, b));
  EXPECT_EQ(code_of([&] { gen_er(1, 0.5, rng); }), Errc::kParameterRange);
  EXPECT_EQ(code_of([&] { gen_er(5, 1.5, rng); }), Errc::kParameterRange);
}

TEST(ErdosRenyi, EdgeDensity) {
  Rng rng(3);
  long edges = 0;
  const int trials = 400;
  for (int k = 0; k < trials; ++k) edges += gen_er(20, 0.3, rng).size();
  const double expected = trials * 190 * 0.3;
  EXPECT_NEAR(edges, expected, 5 * std::sqrt(trials * 190 * 0.3 * 0.7));
}

TEST(BarabasiAlbert, Properties) {
  Rng rng(5);
  EXPECT_EQ(gen_ba(3, 2, rng), testing::complete_graph(3));
  EXPECT_EQ(gen_ba(5, 4, rng), testing::complete_graph(5));
  for (int k = 0; k < 100; ++k) {
    const int n = 5 + k % 15;
    const int m = 2 + k % 3;
    const SimpleGraph g = gen_ba(n, m, rng);
    EXPECT_GE(g.min_degree(), m);
    EXPECT_TRUE(is_connected(g));
    EXPECT_EQ(g.size(), m * (m - 1) / 2 + (n - m) * m);
  }
  Rng a(8), b(8);
  EXPECT_EQ(gen_ba(15, 2, a), gen_ba(15, 2, b));
  EXPECT_EQ(code_of([&] { gen_ba(5, 1, rng); }), Errc::kParameterRange);
  EXPECT_EQ(code_of([&] { gen_ba(5, 5, rng); }), Errc::kParameterRange);
}

TEST(WattsStrogatz, Properties) {
  Rng rng(6);
  EXPECT_EQ(gen_ws(7, 2, 0.0, rng), testing::cycle_graph(7));
  const SimpleGraph lattice = gen_ws(10, 4, 0.0, rng);
  for (int v = 0; v < 10; ++v) EXPECT_EQ(lattice.degree(v), 4);
  for (int k = 0; k < 100; ++k) EXPECT_EQ(gen_ws(12, 4, 0.5, rng).size(), 24);
  Rng a(9), b(9);
  EXPECT_EQ(gen_ws(15, 4, 0.2, a), gen_ws(15, 4, 0.2, b));
  EXPECT_EQ(code_of([&] { gen_ws(6, 3, 0.1, rng); }), Errc::kParameterRange);
  EXPECT_EQ(code_of([&] { gen_ws(6, 6, 0.1, rng); }), Errc::kParameterRange);
  EXPECT_EQ(code_of([&] { gen_ws(6, 2, 1.1, rng); }), Errc::kParameterRange);
}

DatasetSpec small_spec() {
  DatasetSpec s;
  s.orders = {10};
  s.er_count = 5;
  s.ba_count = 3;
  s.ws_count = 3;
  s.master_seed = 2024;
  return s;
}

TEST(BuildDataset, FilterContract) {
  const Dataset d = build_dataset(small_spec());
  ASSERT_EQ(d.graphs.size(), 11U);
  std::set<std::string> keys;
  for (const auto& e : d.graphs) {
    EXPECT_EQ(e.item.graph.order(), 10);
    EXPECT_TRUE(is_connected(e.item.graph));
    EXPECT_GE(e.item.graph.min_degree(), 2);
    EXPECT_EQ(e.canonical_key, canonical_key(e.item.graph));
    EXPECT_TRUE(keys.insert(e.canonical_key).second);
    EXPECT_EQ(e.seed, attempt_seed(2024, *parse_model(e.item.model), 10, e.attempt));
  }
  EXPECT_EQ(d.graphs.front().item.id, "n10-er-0001");
  EXPECT_EQ(d.graphs.back().item.id, "n10-ws-0003");
  ASSERT_EQ(d.cells.size(), 3U);
  for (const auto& c : d.cells) {
    EXPECT_EQ(c.attempts, c.accepted + c.rejected_disconnected + c.rejected_pendant + c.rejected_isomorphic);
  }
}

TEST(BuildDataset, Reproducible) {
  const Dataset a = build_dataset(small_spec());
  const Dataset b = build_dataset(small_spec());
  ASSERT_EQ(a.graphs.size(), b.graphs.size());
  for (std::size_t k = 0; k < a.graphs.size(); ++k) {
    EXPECT_EQ(to_edge_list(a.graphs[k].item.graph), to_edge_list(b.graphs[k].item.graph));
  }
}

// Dropping the BA quota leaves the ER and WS streams untouched.
TEST(BuildDataset, IndependentCellStreams) {
  const Dataset full = build_dataset(small_spec());
  DatasetSpec spec = small_spec();
  spec.ba_count = 0;
  const Dataset partial = build_dataset(spec);
  std::vector<std::string> a, b;
  for (const auto& e : full.graphs) {
    if (e.item.model != "ba") a.push_back(to_edge_list(e.item.graph));
  }
  for (const auto& e : partial.graphs) b.push_back(to_edge_list(e.item.graph));
  EXPECT_EQ(a, b);
}

TEST(BuildDataset, QuotaFailureAtZeroProbability) {
  DatasetSpec spec = small_spec();
  spec.er_p = 0.0;
  spec.max_attempts = 100;
  try {
    build_dataset(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kQuotaFailure);
    EXPECT_NE(std::string(e.what()).find("acceptance rate 0"), std::string::npos);
  }
}

TEST(BuildDataset, ValidationErrors) {
  auto expect_invalid = [](auto mutate) {
    DatasetSpec s = small_spec();
    mutate(s);
    EXPECT_EQ(code_of([&] { build_dataset(s); }), Errc::kParameterRange);
  };
  expect_invalid([](DatasetSpec& s) { s.orders.clear(); });
  expect_invalid([](DatasetSpec& s) { s.er_count = -1; });
  expect_invalid([](DatasetSpec& s) { s.er_p = 1.5; });
  expect_invalid([](DatasetSpec& s) { s.ba_m = 1; });
  expect_invalid([](DatasetSpec& s) { s.ws_k = 3; });
  expect_invalid([](DatasetSpec& s) { s.ws_k = 10; });
  expect_invalid([](DatasetSpec& s) { s.ws_beta = -0.5; });
  expect_invalid([](DatasetSpec& s) { s.orders = {1}; });
}

TEST(DatasetFiles, RoundTripAndTamperDetection) {
  const auto dir = std::filesystem::temp_directory_path() / "vrel_dataset_test";
  std::filesystem::remove_all(dir);
  const Dataset d = build_dataset(small_spec());
  write_dataset(dir, d);
  const LoadedDataset loaded = load_dataset(dir);
  ASSERT_EQ(loaded.graphs.size(), d.graphs.size());
  for (std::size_t k = 0; k < d.graphs.size(); ++k) {
    EXPECT_EQ(loaded.graphs[k].id, d.graphs[k].item.id);
    EXPECT_EQ(loaded.graphs[k].model, d.graphs[k].item.model);
    EXPECT_EQ(loaded.graphs[k].graph, d.graphs[k].item.graph);
  }
  EXPECT_NE(loaded.spec_json.find("\"master_seed\":2024"), std::string::npos);

  // Edited graph file.
  const auto victim = dir / "graphs" / (d.graphs[0].item.id + ".el");
  const std::string original = read_text_file(victim);
  write_text_file(victim, original + "\n");
  EXPECT_EQ(code_of([&] { load_dataset(dir); }), Errc::kManifestMismatch);
  write_text_file(victim, original);

  // Edited manifest content.
  std::string manifest = read_text_file(dir / "manifest.json");
  const auto pos = manifest.find("\"er_p\": 0.3");
  ASSERT_NE(pos, std::string::npos);
  manifest.replace(pos, 11, "\"er_p\": 0.4");
  write_text_file(dir / "manifest.json", manifest);
  EXPECT_EQ(code_of([&] { load_dataset(dir); }), Errc::kManifestMismatch);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace vrel
