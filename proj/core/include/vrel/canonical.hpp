#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vrel/graph.hpp"

namespace vrel {

// Byte string that is identical for two graphs iff they are isomorphic: the
// lexicographically smallest upper-triangle adjacency encoding over all
// labelings reachable by colour refinement plus individualization.
std::string canonical_key(const SimpleGraph& g);

// Cheap isomorphism invariant over (n, m, degree sequence, distance
// multiset). Equal graphs always hash equal; the converse is not implied.
std::uint64_t invariant_hash(const SimpleGraph& g);

// 64-bit FNV-1a, used for manifest and key digests.
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t value);

// Rejects graphs isomorphic to one already admitted. Invariant hashes bucket
// the admitted keys so most rejections never compare canonical keys.
class IsomorphismFilter {
 public:
  // Returns false (and keeps state unchanged) if an isomorph was admitted before.
  bool admit(const SimpleGraph& g);
  bool admit(const SimpleGraph& g, std::string* key_out);
  std::size_t size() const { return count_; }

 private:
  std::map<std::uint64_t, std::vector<std::string>> buckets_;
  std::size_t count_ = 0;
};

}  // namespace vrel
