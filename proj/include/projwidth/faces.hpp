#pragma once

#include <string>
#include <vector>

#include "projwidth/flags.hpp"

namespace projwidth {

/// One step along a face boundary: leave `vertex` along `dart`.
struct FaceStep {
  VertexId vertex;
  EdgeId edge;
  DartId dart;
  FlagId flag;  // departing flag of this step
};

struct Face {
  std::vector<FaceStep> boundary;

  int length() const { return static_cast<int>(boundary.size()); }
  VertexId vertex_at(int position) const {
    const int len = length();
    return boundary[((position % len) + len) % len].vertex;
  }
};

/// Traces all faces. Each flag lies on exactly one face orbit; faces are
/// numbered by their smallest flag and traced starting from it, followed by
/// one empty face per isolated vertex.
///
/// Walking rule: carry an orientation flag along the walk, on arrival take the
/// rotation successor (predecessor when reversed); negative edges toggle it.
inline std::vector<Face> trace_faces(const EmbeddedGraph& g,
                                     const FlagSystem& fs) {
  std::vector<Face> faces;
  std::vector<char> used(fs.size(), 0);
  for (FlagId start = 0; start < fs.size(); ++start) {
    if (used[start]) continue;
    Face face;
    FlagId x = start;
    do {
      const FlagId across = fs.vertex_switch[x];
      used[x] = used[across] = 1;
      const DartId d = flag_dart(x);
      face.boundary.push_back({g.tail(d), edge_of(d), d, x});
      x = fs.edge_switch[across];
    } while (x != start);
    faces.push_back(std::move(face));
  }
  // An isolated vertex is a sphere with one face of length 0.
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0) faces.emplace_back();
  return faces;
}

inline std::vector<Face> trace_faces(const EmbeddedGraph& g) {
  return trace_faces(g, flag_system(g));
}

/// An embedded graph together with its faces and flag bookkeeping. Built once
/// and shared read-only by the width, support-set and transversal code.
class Surface {
 public:
  explicit Surface(EmbeddedGraph g)
      : graph_(std::move(g)), flags_(flag_system(graph_)) {
    faces_ = trace_faces(graph_, flags_);
    flag_face_.assign(flags_.size(), -1);
    flag_step_.assign(flags_.size(), -1);
    flag_departs_.assign(flags_.size(), 0);
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
      const auto& b = faces_[f].boundary;
      for (int i = 0; i < static_cast<int>(b.size()); ++i) {
        const FlagId dep = b[i].flag;
        const FlagId arr = flags_.vertex_switch[dep];
        flag_face_[dep] = flag_face_[arr] = f;
        flag_step_[dep] = flag_step_[arr] = i;
        flag_departs_[dep] = 1;
      }
    }
    neighbors_.resize(graph_.num_vertices());
    for (VertexId v = 0; v < graph_.num_vertices(); ++v)
      for (DartId d : graph_.rotation(v)) neighbors_[v].push_back(graph_.head(d));
    for (auto& nb : neighbors_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    vertex_faces_.resize(graph_.num_vertices());
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f)
      for (int i = 0; i < faces_[f].length(); ++i)
        vertex_faces_[faces_[f].boundary[i].vertex].push_back({f, i});
  }

  const EmbeddedGraph& graph() const { return graph_; }
  const FlagSystem& flags() const { return flags_; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_[f]; }
  int num_faces() const { return static_cast<int>(faces_.size()); }

  int euler_characteristic() const {
    return graph_.num_vertices() - graph_.num_edges() + num_faces();
  }

  int face_of_flag(FlagId x) const { return flag_face_[x]; }
  /// Boundary position of the corner a flag sits in: the departing flag of
  /// step i and the arriving flag of step i-1 both sit at position i.
  int corner_position(FlagId x) const {
    const int f = flag_face_[x];
    const int i = flag_step_[x];
    return flag_departs_[x] ? i : (i + 1) % faces_[f].length();
  }
  /// Face step (edge-side) a flag belongs to.
  int step_of_flag(FlagId x) const { return flag_step_[x]; }
  bool flag_departs(FlagId x) const { return flag_departs_[x] != 0; }

  bool adjacent(VertexId u, VertexId v) const {
    return std::binary_search(neighbors_[u].begin(), neighbors_[u].end(), v);
  }
  const std::vector<VertexId>& neighbors(VertexId v) const {
    return neighbors_[v];
  }

  struct Corner {
    int face;
    int position;
  };
  const std::vector<Corner>& corners_at(VertexId v) const {
    return vertex_faces_[v];
  }

  /// Dart at the vertex on boundary position `from` of the face edge joining
  /// positions `from` and `to` (which must be cyclically consecutive).
  DartId face_edge_dart(int f, int from, int to) const {
    const auto& face = faces_[f];
    const int len = face.length();
    from = ((from % len) + len) % len;
    to = ((to % len) + len) % len;
    if ((from + 1) % len == to) return face.boundary[from].dart;
    if ((to + 1) % len == from) return opposite_dart(face.boundary[to].dart);
    throw Error("face positions are not consecutive");
  }

 private:
  EmbeddedGraph graph_;
  FlagSystem flags_;
  std::vector<Face> faces_;
  std::vector<int> flag_face_;
  std::vector<int> flag_step_;
  std::vector<char> flag_departs_;
  std::vector<std::vector<VertexId>> neighbors_;
  std::vector<std::vector<Corner>> vertex_faces_;
};

struct ValidationReport {
  int euler_characteristic = 0;
  bool connected = false;
  bool orientable = false;
  bool is_quadrangulation = false;
  bool is_bipartite_graph = false;
  std::vector<std::string> messages;

  /// Connected scheme of Euler genus 1.
  bool projective() const { return connected && euler_characteristic == 1; }
};

}  // namespace projwidth
