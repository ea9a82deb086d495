#include <nlohmann/json.hpp>

#include "vrel/canonical.hpp"
#include "vrel/error.hpp"
#include "vrel/generators.hpp"
#include "vrel/graph_io.hpp"

namespace vrel {
namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "vrel-dataset/1";

json spec_to_json(const DatasetSpec& s) {
  return json{{"orders", s.orders},   {"er_count", s.er_count},       {"ba_count", s.ba_count},
              {"ws_count", s.ws_count}, {"er_p", s.er_p},             {"ba_m", s.ba_m},
              {"ws_k", s.ws_k},         {"ws_beta", s.ws_beta},       {"master_seed", s.master_seed},
              {"max_attempts", s.max_attempts}};
}

std::string manifest_digest(json manifest) {
  manifest.erase("manifest_hash");
  return hex64(fnv1a64(manifest.dump()));
}

}  // namespace

void write_dataset(const std::filesystem::path& dir, const Dataset& dataset) {
  std::error_code ec;
  std::filesystem::create_directories(dir / "graphs", ec);
  if (ec) throw Error(Errc::kIo, "cannot create " + (dir / "graphs").string() + ": " + ec.message());

  json cells = json::array();
  for (const auto& c : dataset.cells) {
    cells.push_back({{"model", model_name(c.model)},
                     {"order", c.order},
                     {"attempts", c.attempts},
                     {"accepted", c.accepted},
                     {"acceptance_rate", c.attempts == 0 ? 0.0 : static_cast<double>(c.accepted) / c.attempts},
                     {"rejected_disconnected", c.rejected_disconnected},
                     {"rejected_pendant", c.rejected_pendant},
                     {"rejected_isomorphic", c.rejected_isomorphic}});
  }
  json graphs = json::array();
  for (const auto& e : dataset.graphs) {
    const std::string file = "graphs/" + e.item.id + ".el";
    const std::string text = to_edge_list(e.item.graph);
    write_text_file(dir / file, text);
    graphs.push_back({{"id", e.item.id},
                      {"model", e.item.model},
                      {"order", e.item.graph.order()},
                      {"seed", e.seed},
                      {"attempt", e.attempt},
                      {"file", file},
                      {"file_hash", hex64(fnv1a64(text))},
                      {"canonical_key_hash", hex64(fnv1a64(e.canonical_key))}});
  }
  json manifest{{"format", kFormat}, {"spec", spec_to_json(dataset.spec)}, {"cells", cells}, {"graphs", graphs}};
  manifest["manifest_hash"] = manifest_digest(manifest);
  write_text_file(dir / "manifest.json", manifest.dump(2) + "\n");
}

LoadedDataset load_dataset(const std::filesystem::path& dir) {
  json manifest;
  try {
    manifest = json::parse(read_text_file(dir / "manifest.json"));
  } catch (const json::exception& e) {
    throw Error(Errc::kParse, "manifest.json: " + std::string(e.what()));
  }
  try {
    if (manifest.at("format") != kFormat) throw Error(Errc::kManifestMismatch, "unsupported manifest format");
    const std::string recorded = manifest.at("manifest_hash");
    if (manifest_digest(manifest) != recorded) {
      throw Error(Errc::kManifestMismatch, "manifest hash does not match its contents");
    }
    LoadedDataset out{recorded, manifest.at("spec").dump(), {}};
    for (const auto& entry : manifest.at("graphs")) {
      const std::string file = entry.at("file");
      const std::string text = read_text_file(dir / file);
      if (hex64(fnv1a64(text)) != entry.at("file_hash").get<std::string>()) {
        throw Error(Errc::kManifestMismatch, file + " does not match its recorded digest");
      }
      SimpleGraph g = parse_edge_list(text);
      if (g.order() != entry.at("order").get<int>()) {
        throw Error(Errc::kManifestMismatch, file + " has the wrong order");
      }
      out.graphs.push_back({entry.at("id"), entry.at("model"), std::move(g)});
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(Errc::kManifestMismatch, "malformed manifest: " + std::string(e.what()));
  }
}

}  // namespace vrel
