#include "pds/kernels/exact_cover.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace pds::kernels {

namespace {

class BallCoverSearch {
 public:
  BallCoverSearch(const TorusParams& params, bool prune_lines)
      : params_(params),
        m_(params.num_vertices()),
        width_(static_cast<std::size_t>(2 * params.n() + 1)),
        prune_(prune_lines),
        balls_(m_ * width_),
        covered_(m_, 0),
        uncovered_(m_) {
    for (VertexIndex v = 0; v < m_; ++v) {
      closed_ball_indices(v, params_, std::span<VertexIndex>(balls_.data() + v * width_, width_));
    }
    if (prune_) line_used_.assign(static_cast<std::size_t>(params_.n()) * m_, 0);
  }

  std::span<const VertexIndex> ball(VertexIndex v) const {
    return {balls_.data() + v * width_, width_};
  }

  bool can_place(VertexIndex center) const {
    for (VertexIndex u : ball(center)) {
      if (covered_[u]) return false;
    }
    if (prune_) {
      for (int axis = 0; axis < params_.n(); ++axis) {
        if (line_used_[line_slot(center, axis)]) return false;
      }
    }
    return true;
  }

  void place(VertexIndex center) {
    for (VertexIndex u : ball(center)) covered_[u] = 1;
    uncovered_ -= width_;
    if (prune_) {
      for (int axis = 0; axis < params_.n(); ++axis) line_used_[line_slot(center, axis)] = 1;
    }
    chosen_.push_back(center);
  }

  void unplace() {
    const VertexIndex center = chosen_.back();
    chosen_.pop_back();
    for (VertexIndex u : ball(center)) covered_[u] = 0;
    uncovered_ += width_;
    if (prune_) {
      for (int axis = 0; axis < params_.n(); ++axis) line_used_[line_slot(center, axis)] = 0;
    }
  }

  // Uncovered vertex with the fewest placeable covering balls, and those
  // balls' centers (ascending). Returns false when every vertex is covered.
  bool choose(std::vector<VertexIndex>& centers) {
    centers.clear();
    if (uncovered_ == 0) return false;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    VertexIndex best_vertex = 0;
    for (VertexIndex v = 0; v < m_ && best > 0; ++v) {
      if (covered_[v]) continue;
      std::size_t count = 0;
      for (VertexIndex c : ball(v)) count += can_place(c) ? 1 : 0;
      if (count < best) {
        best = count;
        best_vertex = v;
      }
    }
    if (best > 0) {
      for (VertexIndex c : ball(best_vertex)) {
        if (can_place(c)) centers.push_back(c);
      }
      std::sort(centers.begin(), centers.end());
    }
    return true;
  }

  void run(std::vector<CenterList>& out) {
    ++nodes_;
    std::vector<VertexIndex> centers;
    if (!choose(centers)) {
      CenterList solution = chosen_;
      std::sort(solution.begin(), solution.end());
      out.push_back(std::move(solution));
      return;
    }
    for (VertexIndex c : centers) {
      place(c);
      run(out);
      unplace();
    }
  }

  // Partial placements reached after `depth` branching steps (or earlier
  // leaves), in search order.
  void frontier(int depth, std::vector<CenterList>& out) {
    std::vector<VertexIndex> centers;
    if (depth == 0 || !choose(centers)) {
      out.push_back(chosen_);
      return;
    }
    for (VertexIndex c : centers) {
      place(c);
      frontier(depth - 1, out);
      unplace();
    }
  }

  unsigned long long nodes() const noexcept { return nodes_; }

 private:
  std::size_t line_slot(VertexIndex v, int axis) const {
    const VertexIndex line = v - static_cast<VertexIndex>(coordinate_of(v, axis, params_)) * params_.stride(axis);
    return static_cast<std::size_t>(axis) * m_ + line;
  }

  TorusParams params_;
  VertexIndex m_;
  std::size_t width_;
  bool prune_;
  std::vector<VertexIndex> balls_;
  std::vector<std::uint8_t> covered_;
  std::vector<std::uint8_t> line_used_;
  std::size_t uncovered_;
  CenterList chosen_;
  unsigned long long nodes_ = 0;
};

}  // namespace

namespace serial {

std::vector<CenterList> ball_partitions(const TorusParams& params, bool prune_lines,
                                        ExactCoverStats* stats) {
  BallCoverSearch search(params, prune_lines);
  std::vector<CenterList> out;
  search.run(out);
  std::sort(out.begin(), out.end());
  if (stats) stats->nodes = search.nodes();
  return out;
}

}  // namespace serial

namespace omp {

std::vector<CenterList> ball_partitions(const TorusParams& params, bool prune_lines,
                                        ExactCoverStats* stats) {
  constexpr int kSplitDepth = 2;
  std::vector<CenterList> roots;
  BallCoverSearch(params, prune_lines).frontier(kSplitDepth, roots);

  const auto count = static_cast<std::int64_t>(roots.size());
  std::vector<std::vector<CenterList>> found(roots.size());
  unsigned long long nodes = 0;
#pragma omp parallel for schedule(dynamic, 1) reduction(+ : nodes)
  for (std::int64_t i = 0; i < count; ++i) {
    BallCoverSearch search(params, prune_lines);
    for (VertexIndex c : roots[static_cast<std::size_t>(i)]) search.place(c);
    search.run(found[static_cast<std::size_t>(i)]);
    nodes += search.nodes();
  }

  std::vector<CenterList> out;
  for (auto& part : found) {
    for (auto& s : part) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  if (stats) stats->nodes = nodes;
  return out;
}

}  // namespace omp

}  // namespace pds::kernels
