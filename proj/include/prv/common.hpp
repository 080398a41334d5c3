#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace prv {

// All weight and root arithmetic is exact 64-bit integer arithmetic in the
// fundamental-weight basis.  Oversized inputs are rejected at the API
// boundary and every product/accumulation in the oracle is overflow-checked,
// so a result is either exact or an Error of kind Overflow.
using Int = std::int64_t;
using Vec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

enum class ErrorKind {
  IndexOutOfRange,
  DimensionMismatch,
  NonDominantInput,
  NotDiagonalPair,
  InvalidPair,
  ParseError,
  Overflow,
  NegativeCoefficient,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

inline Int checked_dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "dot product of vectors of unequal length");
  Int acc = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) acc = checked_add(acc, checked_mul(a[i], b[i]));
  return acc;
}

// Bound on accepted input coordinates.  Orbit points, restrictions and
// segment endpoints of desk-scale inputs stay far below INT64_MAX when
// inputs respect this bound; the oracle additionally checks every product.
inline constexpr Int kMaxInputCoord = Int(1) << 30;

inline void require_input_scale(const Vec& v, const char* what) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] > kMaxInputCoord || v[i] < -kMaxInputCoord)
      fail(ErrorKind::Overflow, std::string(what) + ": coordinate exceeds supported range");
  }
}

struct VecHash {
  std::size_t operator()(const Vec& v) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      std::uint64_t x = static_cast<std::uint64_t>(v[i]);
      x ^= x >> 30;
      x *= 0xbf58476d1ce4e5b9ull;
      x ^= x >> 27;
      h = (h ^ x) * 0x94d049bb133111ebull;
    }
    return static_cast<std::size_t>(h);
  }
};

struct VecEq {
  bool operator()(const Vec& a, const Vec& b) const noexcept {
    return a.size() == b.size() && a == b;
  }
};

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

inline std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os << '(';
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

inline Vec make_vec(std::initializer_list<Int> values) {
  Vec v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (Int x : values) v[i++] = x;
  return v;
}

inline Vec concat_vec(const Vec& a, const Vec& b) {
  Vec r(a.size() + b.size());
  r << a, b;
  return r;
}

}  // namespace prv
