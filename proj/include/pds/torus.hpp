#pragma once

// Vertex arithmetic for the torus graph Z_p^n with generators {±e_1,...,±e_n}
// and p = 2n+1.
//
// Coordinates are numbered 1..n in user-facing text and 0..n-1 in storage.
// The canonical vertex index is mixed radix with coordinate 1 most
// significant:  index = sum_i coords[i] * p^(n-1-i)  (0-based i).

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pds {

using VertexIndex = std::size_t;

bool is_prime(long long value);

// Residue of value in {0,...,p-1}.
inline int mod(long long value, int p) {
  long long r = value % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Representative of y in {-(p-1)/2,...,(p-1)/2}.
inline int signed_residue(long long y, int p) {
  int r = mod(y, p);
  return r > p / 2 ? r - p : r;
}

// Lee absolute value min(y, p-y).
inline int abs_residue(long long y, int p) {
  int r = mod(y, p);
  return r > p - r ? p - r : r;
}

// Multiplicative inverse modulo a prime p; value must be nonzero mod p.
int inverse_mod(long long value, int p);

class TorusParams {
 public:
  // p must be odd, p >= 3; n is derived as (p-1)/2.
  explicit TorusParams(int p);
  // Checks p = 2n+1.
  TorusParams(int p, int n);

  int p() const noexcept { return p_; }
  int n() const noexcept { return n_; }
  bool prime() const noexcept { return prime_; }

  // p^n
  VertexIndex num_vertices() const noexcept { return num_vertices_; }
  // p^(n-1): size of a perfect code.
  VertexIndex code_size() const noexcept { return num_vertices_ / p_; }
  // p^(n-1-axis), 0-based axis.
  VertexIndex stride(int axis) const { return strides_[axis]; }

  // Throws UnsupportedParametersError when p is composite.
  void require_prime(const char* operation) const;

  friend bool operator==(const TorusParams& a, const TorusParams& b) {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

  std::string to_string() const;

 private:
  int p_;
  int n_;
  bool prime_;
  VertexIndex num_vertices_;
  std::vector<VertexIndex> strides_;
};

struct TorusPoint {
  std::vector<int> coords;

  friend bool operator==(const TorusPoint&, const TorusPoint&) = default;
  friend auto operator<=>(const TorusPoint&, const TorusPoint&) = default;
};

// Throws InvalidInputError on a wrong length or an unreduced entry.
void validate_point(const TorusPoint& pt, const TorusParams& params);

VertexIndex index_of(const TorusPoint& pt, const TorusParams& params);
// Throws InvalidInputError when index >= p^n.
TorusPoint point_of(VertexIndex index, const TorusParams& params);

// Residue of coordinate `axis` (0-based) of the vertex with this index.
inline int coordinate_of(VertexIndex index, int axis, const TorusParams& params) {
  return static_cast<int>((index / params.stride(axis)) % params.p());
}

// Index of v + delta*e_axis with delta in {-1,+1}.
VertexIndex step(VertexIndex index, int axis, int delta, const TorusParams& params);

// {pt} ∪ {pt ± e_i}, in the order pt, pt+e_1, pt-e_1, ..., pt+e_n, pt-e_n.
std::vector<TorusPoint> closed_ball(const TorusPoint& pt, const TorusParams& params);
// Same ball as indices, same order; `out` must hold 2n+1 entries.
void closed_ball_indices(VertexIndex index, const TorusParams& params,
                         std::span<VertexIndex> out);
std::vector<VertexIndex> closed_ball_indices(VertexIndex index, const TorusParams& params);

TorusPoint add(const TorusPoint& a, const TorusPoint& b, const TorusParams& params);

// Subset of Z_p^n as a bit-vector over canonical indices.
class CodeSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  explicit CodeSet(const TorusParams& params);
  CodeSet(const TorusParams& params, std::span<const VertexIndex> members);

  static CodeSet full(const TorusParams& params);

  const TorusParams& params() const noexcept { return params_; }
  const Bits& bits() const noexcept { return bits_; }

  bool contains(VertexIndex index) const { return bits_.test(index); }
  bool contains(const TorusPoint& pt) const { return contains(index_of(pt, params_)); }
  void insert(VertexIndex index) { bits_.set(index); }
  void insert(const TorusPoint& pt) { insert(index_of(pt, params_)); }
  void erase(VertexIndex index) { bits_.reset(index); }
  void erase(const TorusPoint& pt) { erase(index_of(pt, params_)); }

  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  // Members in increasing index order.
  std::vector<VertexIndex> indices() const;
  std::vector<TorusPoint> points() const;

  // {x + shift : x in this}
  CodeSet translated(const TorusPoint& shift) const;

  friend bool operator==(const CodeSet& a, const CodeSet& b) {
    return a.params_ == b.params_ && a.bits_ == b.bits_;
  }

 private:
  TorusParams params_;
  Bits bits_;
};

// Lexicographic order on sorted member-index lists.
bool code_less(const CodeSet& a, const CodeSet& b);

}  // namespace pds
