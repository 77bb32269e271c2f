#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "projwidth/faces.hpp"

namespace projwidth {

/// Consecutive support vertices and the face they share, located by boundary
/// positions on that face.
struct SupportPair {
  int face;
  int from;
  int to;
};

enum class PairKind { Same, Adjacent, Opposite };

/// Circular vertex sequence in which consecutive vertices lie on a common
/// face. pairs[i] joins vertices[i] to vertices[(i+1) % size].
///
/// A pair is adjacent when its two positions are consecutive on the face
/// boundary and opposite otherwise; the face witness is fixed at construction
/// and never recomputed, so any edit of the host graph invalidates the set.
struct SupportSet {
  std::vector<VertexId> vertices;
  std::vector<SupportPair> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
};

inline PairKind pair_kind(const Surface& s, const SupportPair& p) {
  const int len = s.face(p.face).length();
  const int diff = (((p.to - p.from) % len) + len) % len;
  if (diff == 0) return PairKind::Same;
  if (diff == 1 || diff == len - 1) return PairKind::Adjacent;
  return PairKind::Opposite;
}

inline int order(const Surface& s, const SupportSet& set) {
  int count = 0;
  for (const auto& p : set.pairs)
    if (pair_kind(s, p) == PairKind::Adjacent) ++count;
  return count;
}

inline bool parity_odd(const Surface& s, const SupportSet& set) {
  return order(s, set) % 2 == 1;
}

/// Checks that every pair's face positions carry the listed vertices.
inline bool is_valid_support(const Surface& s, const SupportSet& set) {
  if (set.vertices.size() != set.pairs.size() || set.vertices.empty())
    return false;
  const int k = set.size();
  for (int i = 0; i < k; ++i) {
    const auto& p = set.pairs[i];
    if (p.face < 0 || p.face >= s.num_faces()) return false;
    const Face& f = s.face(p.face);
    if (f.vertex_at(p.from) != set.vertices[i]) return false;
    if (f.vertex_at(p.to) != set.vertices[(i + 1) % k]) return false;
  }
  return true;
}

inline std::string to_string(const Surface& s, const SupportSet& set) {
  std::ostringstream out;
  out << "S:";
  for (int i = 0; i < set.size(); ++i) {
    out << ' ' << set.vertices[i] << ' ';
    switch (pair_kind(s, set.pairs[i])) {
      case PairKind::Adjacent: out << "(adj)"; break;
      case PairKind::Opposite: out << "(opp)"; break;
      case PairKind::Same: out << "(same)"; break;
    }
  }
  const int o = order(s, set);
  out << " | order=" << o << " size=" << set.size()
      << " parity=" << (o % 2 ? "odd" : "even");
  return out.str();
}

}  // namespace projwidth
