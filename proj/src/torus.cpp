#include "pds/torus.hpp"

#include "pds/errors.hpp"

#include <sstream>

namespace pds {

bool is_prime(long long value) {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (long long d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

int inverse_mod(long long value, int p) {
  long long a = mod(value, p);
  if (a == 0) throw InvalidInputError("zero has no inverse modulo " + std::to_string(p));
  // extended Euclid
  long long old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw InvalidInputError(std::to_string(value) + " is not invertible modulo " +
                            std::to_string(p));
  }
  return mod(old_s, p);
}

TorusParams::TorusParams(int p) : TorusParams(p, (p - 1) / 2) {}

TorusParams::TorusParams(int p, int n) : p_(p), n_(n), prime_(is_prime(p)) {
  if (p < 3 || p % 2 == 0) {
    throw InvalidInputError("cycle length p must be odd and >= 3, got " + std::to_string(p));
  }
  if (p != 2 * n + 1) {
    throw InvalidInputError("p must equal 2n+1, got p=" + std::to_string(p) +
                            " n=" + std::to_string(n));
  }
  strides_.assign(static_cast<std::size_t>(n), 1);
  for (int i = n - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * static_cast<VertexIndex>(p);
  num_vertices_ = strides_[0] * static_cast<VertexIndex>(p);
}

void TorusParams::require_prime(const char* operation) const {
  if (!prime_) {
    throw UnsupportedParametersError(std::string(operation) + " requires prime p, got p=" +
                                     std::to_string(p_));
  }
}

std::string TorusParams::to_string() const {
  std::ostringstream os;
  os << "p=" << p_ << " n=" << n_;
  return os.str();
}

void validate_point(const TorusPoint& pt, const TorusParams& params) {
  if (pt.coords.size() != static_cast<std::size_t>(params.n())) {
    throw InvalidInputError("point has " + std::to_string(pt.coords.size()) +
                            " coordinates, expected " + std::to_string(params.n()));
  }
  for (int c : pt.coords) {
    if (c < 0 || c >= params.p()) {
      throw InvalidInputError("coordinate " + std::to_string(c) + " not reduced modulo " +
                              std::to_string(params.p()));
    }
  }
}

VertexIndex index_of(const TorusPoint& pt, const TorusParams& params) {
  validate_point(pt, params);
  VertexIndex index = 0;
  for (int c : pt.coords) index = index * static_cast<VertexIndex>(params.p()) + static_cast<VertexIndex>(c);
  return index;
}

TorusPoint point_of(VertexIndex index, const TorusParams& params) {
  if (index >= params.num_vertices()) {
    throw InvalidInputError("index " + std::to_string(index) + " out of range for " +
                            params.to_string());
  }
  TorusPoint pt;
  pt.coords.resize(static_cast<std::size_t>(params.n()));
  for (int i = params.n() - 1; i >= 0; --i) {
    pt.coords[i] = static_cast<int>(index % static_cast<VertexIndex>(params.p()));
    index /= static_cast<VertexIndex>(params.p());
  }
  return pt;
}

VertexIndex step(VertexIndex index, int axis, int delta, const TorusParams& params) {
  const VertexIndex s = params.stride(axis);
  const int c = coordinate_of(index, axis, params);
  const auto wrap = static_cast<VertexIndex>(params.p() - 1) * s;
  if (delta > 0) return c == params.p() - 1 ? index - wrap : index + s;
  return c == 0 ? index + wrap : index - s;
}

void closed_ball_indices(VertexIndex index, const TorusParams& params,
                         std::span<VertexIndex> out) {
  out[0] = index;
  for (int axis = 0; axis < params.n(); ++axis) {
    out[1 + 2 * axis] = step(index, axis, +1, params);
    out[2 + 2 * axis] = step(index, axis, -1, params);
  }
}

std::vector<VertexIndex> closed_ball_indices(VertexIndex index, const TorusParams& params) {
  std::vector<VertexIndex> out(static_cast<std::size_t>(2 * params.n() + 1));
  closed_ball_indices(index, params, out);
  return out;
}

std::vector<TorusPoint> closed_ball(const TorusPoint& pt, const TorusParams& params) {
  std::vector<TorusPoint> ball;
  for (VertexIndex v : closed_ball_indices(index_of(pt, params), params)) {
    ball.push_back(point_of(v, params));
  }
  return ball;
}

TorusPoint add(const TorusPoint& a, const TorusPoint& b, const TorusParams& params) {
  validate_point(a, params);
  validate_point(b, params);
  TorusPoint sum = a;
  for (std::size_t i = 0; i < sum.coords.size(); ++i) {
    sum.coords[i] = mod(a.coords[i] + b.coords[i], params.p());
  }
  return sum;
}

CodeSet::CodeSet(const TorusParams& params) : params_(params), bits_(params.num_vertices()) {}

CodeSet::CodeSet(const TorusParams& params, std::span<const VertexIndex> members)
    : CodeSet(params) {
  for (VertexIndex v : members) {
    if (v >= params.num_vertices()) {
      throw InvalidInputError("member index " + std::to_string(v) + " out of range");
    }
    bits_.set(v);
  }
}

CodeSet CodeSet::full(const TorusParams& params) {
  CodeSet all(params);
  all.bits_.set();
  return all;
}

std::vector<VertexIndex> CodeSet::indices() const {
  std::vector<VertexIndex> out;
  out.reserve(size());
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) out.push_back(i);
  return out;
}

std::vector<TorusPoint> CodeSet::points() const {
  std::vector<TorusPoint> out;
  for (VertexIndex v : indices()) out.push_back(point_of(v, params_));
  return out;
}

CodeSet CodeSet::translated(const TorusPoint& shift) const {
  validate_point(shift, params_);
  CodeSet out(params_);
  for (VertexIndex v : indices()) out.insert(index_of(add(point_of(v, params_), shift, params_), params_));
  return out;
}

bool code_less(const CodeSet& a, const CodeSet& b) {
  if (a.params().p() != b.params().p()) return a.params().p() < b.params().p();
  const CodeSet::Bits diff = a.bits() ^ b.bits();
  const auto d = diff.find_first();
  if (d == CodeSet::Bits::npos) return false;
  // Both lists agree below d. The list containing d is smaller unless the
  // other list ends before d (then it is a proper prefix).
  const CodeSet::Bits& holder = a.bits().test(d) ? a.bits() : b.bits();
  const CodeSet::Bits& other = a.bits().test(d) ? b.bits() : a.bits();
  const bool other_continues = other.find_next(d) != CodeSet::Bits::npos;
  const bool holder_is_smaller = other_continues;
  return (&holder == &a.bits()) == holder_is_smaller;
}

}  // namespace pds
