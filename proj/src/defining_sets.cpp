#include "pds/defining_sets.hpp"

#include "pds/errors.hpp"
#include "pds/kernels/bareiss.hpp"

#include <algorithm>
#include <stdexcept>

namespace pds {

namespace {

struct Block {
  int start;   // 1-based coordinate of alpha_{start,0}
  int length;  // number of signs recovered, k_start + 1
};

// Blocks begin at coordinates 1, m+1, 2m+1, ... and together cover the
// n-1 free coordinates.
std::vector<Block> proposition_blocks(const TorusParams& params) {
  const int m = floor_log2(params.p());
  std::vector<Block> blocks;
  for (int i = 1; i <= params.n() - 1; i += m) {
    blocks.push_back(Block{i, std::min(m - 1, params.n() - i - 1) + 1});
  }
  return blocks;
}

std::vector<VertexIndex> to_indices(std::span<const TorusPoint> points, const TorusParams& params) {
  std::vector<VertexIndex> out;
  out.reserve(points.size());
  for (const auto& pt : points) out.push_back(index_of(pt, params));
  return out;
}

bool contains_all(const CodeSet& code, std::span<const VertexIndex> points) {
  return std::all_of(points.begin(), points.end(), [&](VertexIndex v) { return code.contains(v); });
}

std::vector<const CodeSet*> members_containing(std::span<const VertexIndex> points,
                                               const CodeFamily& family) {
  std::vector<const CodeSet*> out;
  for (const auto& code : family.codes) {
    if (contains_all(code, points)) out.push_back(&code);
  }
  return out;
}

// rank(M) = rank(M M^T) over Q, and the Gram matrix of 0/1 rows is small.
std::size_t rank_of_rows(const std::vector<const CodeSet*>& rows) {
  kernels::IntegerMatrix gram(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      const auto overlap = static_cast<unsigned long>((rows[i]->bits() & rows[j]->bits()).count());
      gram.at(i, j) = overlap;
      gram.at(j, i) = overlap;
    }
  }
  return kernels::serial::bareiss_rank(std::move(gram));
}

void require_member(const CodeSet& target, const CodeFamily& family) {
  if (!family.find(target)) throw InvalidInputError("target code is not a member of the family");
}

}  // namespace

int floor_log2(int p) {
  if (p < 1) throw InvalidInputError("floor_log2 of a non-positive value");
  int m = 0;
  while ((2LL << m) <= p) ++m;
  return m;
}

std::size_t proposition_size(const TorusParams& params) {
  const int m = floor_log2(params.p());
  return 1 + static_cast<std::size_t>((params.n() - 1 + m - 1) / m);
}

CodeFamily linear_family(const TorusParams& params) {
  CodeFamily family{params, {}, true};
  for (const auto& spec : all_eq1_specs(params)) family.codes.push_back(build_eq1(spec, params));
  std::sort(family.codes.begin(), family.codes.end(), code_less);
  return family;
}

bool is_defining(std::span<const TorusPoint> points, const CodeSet& target, const CodeFamily& family) {
  require_member(target, family);
  const auto idx = to_indices(points, target.params());
  if (!contains_all(target, idx)) throw InvalidInputError("defining-set points must lie in the target");
  return members_containing(idx, family).size() == 1;
}

std::size_t span_dimension(std::span<const TorusPoint> points, const CodeFamily& family) {
  return rank_of_rows(members_containing(to_indices(points, family.params), family));
}

DefiningSet greedy_defining(const CodeSet& target, const CodeFamily& family) {
  if (!family.complete) throw InvalidInputError("greedy defining set needs a complete family");
  require_member(target, family);
  const TorusParams& params = family.params;

  std::vector<VertexIndex> chosen;
  auto current = members_containing(chosen, family);
  std::size_t dim = rank_of_rows(current);
  while (current.size() > 1) {
    bool dropped = false;
    for (VertexIndex v : target.indices()) {
      if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
      std::vector<const CodeSet*> next;
      for (const CodeSet* code : current) {
        if (code->contains(v)) next.push_back(code);
      }
      if (next.size() == current.size()) continue;
      const std::size_t next_dim = rank_of_rows(next);
      if (next_dim < dim) {
        chosen.push_back(v);
        current = std::move(next);
        dim = next_dim;
        dropped = true;
        break;
      }
    }
    if (!dropped) throw std::logic_error("no vertex lowers the span dimension");
  }

  DefiningSet out{{}, target, FamilyKind::Full};
  for (VertexIndex v : chosen) out.points.push_back(point_of(v, params));
  return out;
}

std::optional<DefiningSet> min_defining(const CodeSet& target, const CodeFamily& family, int cap) {
  require_member(target, family);
  const TorusParams& params = family.params;
  const auto members = target.indices();
  const std::size_t total = members.size();

  for (int size = 0; size <= cap && static_cast<std::size_t>(size) <= total; ++size) {
    // positions of the current combination, lexicographic order
    std::vector<std::size_t> pos(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) pos[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    std::vector<VertexIndex> chosen(static_cast<std::size_t>(size));
    while (true) {
      for (int i = 0; i < size; ++i) chosen[static_cast<std::size_t>(i)] = members[pos[static_cast<std::size_t>(i)]];
      std::size_t hits = 0;
      for (const auto& code : family.codes) {
        if (contains_all(code, chosen) && ++hits > 1) break;
      }
      if (hits == 1) {
        DefiningSet out{{}, target, FamilyKind::Full};
        for (VertexIndex v : chosen) out.points.push_back(point_of(v, params));
        return out;
      }
      int i = size - 1;
      while (i >= 0 && pos[static_cast<std::size_t>(i)] == total - static_cast<std::size_t>(size - i)) --i;
      if (i < 0) break;
      ++pos[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return std::nullopt;
}

DefiningSet proposition_defining(const Eq1Spec& spec, const TorusParams& params) {
  params.require_prime("proposition_defining");
  const CodeSet target = build_eq1(spec, params);
  const int p = params.p();
  const int n = params.n();

  // Last coordinate of the codeword whose first n-1 coordinates are `head`.
  auto complete = [&](TorusPoint head) {
    long long last = spec.k;
    for (int i = 1; i < n; ++i) {
      last += static_cast<long long>(spec.eps[static_cast<std::size_t>(i - 1)]) * (i + 1) *
              head.coords[static_cast<std::size_t>(i - 1)];
    }
    head.coords.back() = mod(last, p);
    if (!target.contains(head)) throw std::logic_error("completed point is not a codeword");
    return head;
  };

  DefiningSet out{{}, target, FamilyKind::Linear};
  TorusPoint zero{std::vector<int>(static_cast<std::size_t>(n), 0)};
  out.points.push_back(complete(zero));
  if (n == 1) return out;

  for (const Block& block : proposition_blocks(params)) {
    TorusPoint head = zero;
    for (int j = 0; j < block.length; ++j) {
      // (i+j+1) alpha = 2^j
      const int i = block.start;
      const long long power = (1LL << j) % p;
      head.coords[static_cast<std::size_t>(i + j - 1)] = mod(power * inverse_mod(i + j + 1, p), p);
    }
    out.points.push_back(complete(head));
  }
  return out;
}

Eq1Spec recover_eq1(std::span<const TorusPoint> points, const TorusParams& params) {
  params.require_prime("recover_eq1");
  const auto blocks = params.n() == 1 ? std::vector<Block>{} : proposition_blocks(params);
  if (points.size() != blocks.size() + 1) {
    throw InvalidInputError("expected " + std::to_string(blocks.size() + 1) + " points, got " +
                            std::to_string(points.size()));
  }
  for (const auto& pt : points) validate_point(pt, params);
  Eq1Spec spec;
  spec.k = points[0].coords.back();
  spec.eps.assign(static_cast<std::size_t>(params.n() - 1), 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const int c = mod(points[b + 1].coords.back() - spec.k, params.p());
    const auto signs = signed_binary_solve(c, blocks[b].length, params.p());
    if (!signs) {
      throw InvalidInputError("block " + std::to_string(b + 1) + " residue " + std::to_string(c) +
                              " has no signed-binary form");
    }
    for (int j = 0; j < blocks[b].length; ++j) {
      spec.eps[static_cast<std::size_t>(blocks[b].start + j - 1)] = signs->eps[static_cast<std::size_t>(j)];
    }
  }
  return spec;
}

std::vector<int> signed_binary_values(int m, int p) {
  std::vector<int> values;
  values.reserve(std::size_t{1} << m);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    long long sum = 0;
    for (int j = 0; j < m; ++j) sum += ((mask >> j) & 1u ? -1LL : 1LL) << j;
    values.push_back(mod(sum, p));
  }
  return values;
}

std::optional<SignedBinary> signed_binary_solve(int c, int m, int p) {
  if (m < 0 || m > floor_log2(p)) {
    throw InvalidInputError("signed-binary length " + std::to_string(m) + " exceeds floor(log2 " +
                            std::to_string(p) + ")");
  }
  const auto values = signed_binary_values(m, p);
  const int target = mod(c, p);
  for (unsigned mask = 0; mask < values.size(); ++mask) {
    if (values[mask] != target) continue;
    SignedBinary out;
    for (int j = 0; j < m; ++j) out.eps.push_back((mask >> j) & 1u ? -1 : 1);
    return out;
  }
  return std::nullopt;
}

}  // namespace pds
