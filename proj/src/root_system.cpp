#include "prv/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace prv {

namespace {

Mat cartan_matrix(const SimpleFactor& f) {
  const int n = f.rank;
  Mat c = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      c(i, i + 1) = -1;
      c(i + 1, i) = -1;
    }
  };
  switch (f.family) {
    case 'A':
      chain(n);
      break;
    case 'B':
      // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2.
      chain(n);
      c(n - 2, n - 1) = -2;
      c(n - 1, n - 2) = -1;
      break;
    case 'C':
      // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2.
      chain(n);
      c(n - 2, n - 1) = -1;
      c(n - 1, n - 2) = -2;
      break;
    case 'D':
      chain(n - 1);
      c(n - 3, n - 1) = -1;
      c(n - 1, n - 3) = -1;
      break;
    case 'G':
      c(0, 1) = -1;  // alpha_1 short
      c(1, 0) = -3;
      break;
    default:
      fail(ErrorKind::Internal, "unknown family");
  }
  return c;
}

std::vector<Int> half_norms(const SimpleFactor& f) {
  // Short roots of each factor have squared length 2.
  std::vector<Int> d(static_cast<size_t>(f.rank), 1);
  switch (f.family) {
    case 'B':
      for (int i = 0; i + 1 < f.rank; ++i) d[static_cast<size_t>(i)] = 2;
      break;
    case 'C':
      d[static_cast<size_t>(f.rank - 1)] = 2;
      break;
    case 'G':
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

Int factorial(int n) {
  Int r = 1;
  for (int k = 2; k <= n; ++k) r = checked_mul(r, k);
  return r;
}

Int weyl_group_order(const SimpleFactor& f) {
  switch (f.family) {
    case 'A':
      return factorial(f.rank + 1);
    case 'B':
    case 'C':
      return checked_mul(Int(1) << f.rank, factorial(f.rank));
    case 'D':
      return checked_mul(Int(1) << (f.rank - 1), factorial(f.rank));
    case 'G':
      return 12;
    default:
      fail(ErrorKind::Internal, "unknown family");
  }
}

size_t positive_root_count(const SimpleFactor& f) {
  const size_t n = static_cast<size_t>(f.rank);
  switch (f.family) {
    case 'A':
      return n * (n + 1) / 2;
    case 'B':
    case 'C':
      return n * n;
    case 'D':
      return n * (n - 1);
    case 'G':
      return 6;
    default:
      fail(ErrorKind::Internal, "unknown family");
  }
}

// Exact adjugate and determinant of a small integer matrix (cofactor
// expansion; ranks here never exceed a dozen).
Int int_det(const Mat& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int det = 0;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    Mat minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r) {
      Eigen::Index cc = 0;
      for (Eigen::Index c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Int term = checked_mul(m(0, j), int_det(minor));
    det = (j % 2 == 0) ? checked_add(det, term) : checked_sub(det, term);
  }
  return det;
}

Mat int_adjugate(const Mat& m) {
  const Eigen::Index n = m.rows();
  Mat adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      Mat minor(n - 1, n - 1);
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Int cof = int_det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj(j, i) = cof;
    }
  }
  return adj;
}

}  // namespace

GroupType GroupType::parse(const std::string& text) {
  GroupType gt;
  size_t pos = 0;
  if (text.empty()) fail(ErrorKind::ParseError, "empty group type");
  while (pos < text.size()) {
    size_t end = text.find_first_of("xX", pos);
    std::string tok = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    if (tok.empty()) fail(ErrorKind::ParseError, "empty factor in group type '" + text + "'");
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
    std::string digits = tok.substr(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorKind::ParseError, "bad factor '" + tok + "' in group type '" + text + "'");
    int rank = std::stoi(digits);
    if (fam == 'T') {
      gt.torus_rank += rank;
    } else if (fam == 'A' || fam == 'B' || fam == 'C' || fam == 'D' || fam == 'G') {
      if (rank < 1) fail(ErrorKind::ParseError, "factor rank must be >= 1");
      if (fam == 'G' && rank != 2) fail(ErrorKind::ParseError, "G factors must have rank 2");
      if ((fam == 'B' || fam == 'C') && rank < 2)
        fail(ErrorKind::ParseError, std::string(1, fam) + "1 is A1; write A1");
      if (fam == 'D' && rank < 3) fail(ErrorKind::ParseError, "D2 is A1xA1, D1 is A1; write those");
      if (rank > 12) fail(ErrorKind::ParseError, "factor rank above 12 is not supported");
      gt.factors.push_back({fam, rank});
    } else {
      fail(ErrorKind::ParseError, "unsupported family '" + std::string(1, fam) + "' (A,B,C,D,G2,T)");
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  if (gt.factors.empty() && gt.torus_rank == 0) fail(ErrorKind::ParseError, "empty group type");
  return gt;
}

std::string GroupType::str() const {
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += 'x';
    s += f.family;
    s += std::to_string(f.rank);
  }
  if (torus_rank > 0) {
    if (!s.empty()) s += 'x';
    s += 'T';
    s += std::to_string(torus_rank);
  }
  return s;
}

int GroupType::semisimple_rank() const {
  int r = 0;
  for (const auto& f : factors) r += f.rank;
  return r;
}

bool GroupType::operator==(const GroupType& other) const {
  if (torus_rank != other.torus_rank || factors.size() != other.factors.size()) return false;
  for (size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].family != other.factors[i].family || factors[i].rank != other.factors[i].rank)
      return false;
  }
  return true;
}

RootSystem::RootSystem(GroupType type) : type_(std::move(type)) {
  ss_ = type_.semisimple_rank();
  total_ = type_.total_rank();
  signature_ = type_.str();

  cartan_ = Mat::Zero(ss_, ss_);
  d_.resize(static_cast<size_t>(ss_), 1);
  int off = 0;
  weyl_order_ = 1;
  for (const auto& f : type_.factors) {
    spans_.emplace_back(off, f.rank);
    cartan_.block(off, off, f.rank, f.rank) = cartan_matrix(f);
    auto dd = half_norms(f);
    for (int i = 0; i < f.rank; ++i) d_[static_cast<size_t>(off + i)] = dd[static_cast<size_t>(i)];
    weyl_order_ = checked_mul(weyl_order_, weyl_group_order(f));
    off += f.rank;
  }

  delta_ = Vec::Zero(total_);
  delta_.head(ss_).setOnes();

  if (ss_ > 0) {
    Mat ct = cartan_.transpose();
    cartan_t_det_ = int_det(ct);
    cartan_t_adj_ = int_adjugate(ct);
  } else {
    cartan_t_det_ = 1;
    cartan_t_adj_ = Mat::Zero(0, 0);
  }

  // Positive roots: close the simple roots under simple reflections,
  // keeping the points whose simple-root coordinates stay nonnegative.
  std::unordered_set<Vec, VecHash, VecEq> seen;
  std::deque<PositiveRoot> queue;
  size_t expected = 0;
  for (const auto& f : type_.factors) expected += positive_root_count(f);
  for (int i = 0; i < ss_; ++i) {
    PositiveRoot r;
    r.fund = simple_root(i);
    r.simple_coords = Vec::Zero(ss_);
    r.simple_coords[i] = 1;
    seen.insert(r.fund);
    queue.push_back(std::move(r));
  }
  std::vector<PositiveRoot> found(queue.begin(), queue.end());
  while (!queue.empty()) {
    PositiveRoot r = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < ss_; ++i) {
      Int p = r.fund[i];
      Vec fund = r.fund;
      fund -= p * simple_root(i);
      Vec sc = r.simple_coords;
      sc[i] -= p;
      if ((sc.array() < 0).any()) continue;
      if (seen.insert(fund).second) {
        PositiveRoot nr;
        nr.fund = std::move(fund);
        nr.simple_coords = std::move(sc);
        found.push_back(nr);
        queue.push_back(found.back());
      }
    }
  }
  if (found.size() != expected) fail(ErrorKind::Internal, "positive root closure has wrong size");

  for (auto& r : found) {
    // (gamma,gamma)/2 from the symmetrized Cartan matrix.
    Int norm2 = 0;
    for (int i = 0; i < ss_; ++i) {
      if (r.simple_coords[i] == 0) continue;
      for (int j = 0; j < ss_; ++j) {
        if (r.simple_coords[j] == 0) continue;
        norm2 = checked_add(norm2,
                            checked_mul(checked_mul(r.simple_coords[i], r.simple_coords[j]),
                                        checked_mul(d_[static_cast<size_t>(j)], cartan_(i, j))));
      }
    }
    if (norm2 <= 0 || norm2 % 2 != 0) fail(ErrorKind::Internal, "bad root norm");
    r.half_norm = norm2 / 2;
    r.coroot = Vec::Zero(ss_);
    for (int i = 0; i < ss_; ++i) {
      Int num = checked_mul(r.simple_coords[i], d_[static_cast<size_t>(i)]);
      if (num % r.half_norm != 0) fail(ErrorKind::Internal, "coroot coefficients not integral");
      r.coroot[i] = num / r.half_norm;
    }
  }
  std::sort(found.begin(), found.end(), [](const PositiveRoot& a, const PositiveRoot& b) {
    Int ha = a.simple_coords.sum(), hb = b.simple_coords.sum();
    if (ha != hb) return ha < hb;
    return VecLess{}(a.simple_coords, b.simple_coords);
  });
  positive_ = std::move(found);

  height_functional_ = Vec::Zero(total_);
  for (const auto& r : positive_) height_functional_.head(ss_) += r.coroot;
}

void RootSystem::check_index(int i) const {
  if (i < 0 || i >= ss_) fail(ErrorKind::IndexOutOfRange, "simple root index out of range");
}

Vec RootSystem::simple_root(int i) const {
  check_index(i);
  Vec r = Vec::Zero(total_);
  r.head(ss_) = cartan_.row(i).transpose();
  return r;
}

Int RootSystem::pairing(const Vec& lambda, int i) const {
  check_index(i);
  if (lambda.size() != total_) fail(ErrorKind::DimensionMismatch, "weight has wrong length");
  return lambda[i];
}

Int RootSystem::coroot_pairing(const Vec& x, const PositiveRoot& gamma) const {
  Int acc = 0;
  for (int i = 0; i < ss_; ++i) acc = checked_add(acc, checked_mul(gamma.coroot[i], x[i]));
  return acc;
}

Vec RootSystem::reflect(const Vec& lambda, int i) const {
  check_index(i);
  if (lambda.size() != total_) fail(ErrorKind::DimensionMismatch, "weight has wrong length");
  Vec r = lambda;
  r.head(ss_) -= lambda[i] * cartan_.row(i).transpose();
  return r;
}

Vec RootSystem::reflect_root(const Vec& lambda, const PositiveRoot& gamma) const {
  Vec r = lambda;
  Int p = coroot_pairing(lambda, gamma);
  r -= p * gamma.fund;
  return r;
}

Vec RootSystem::apply_word(const Vec& lambda, const WeylWord& u) const {
  Vec r = lambda;
  for (auto it = u.rbegin(); it != u.rend(); ++it) r = reflect(r, *it);
  return r;
}

bool RootSystem::is_dominant(const Vec& lambda) const {
  if (lambda.size() != total_) fail(ErrorKind::DimensionMismatch, "weight has wrong length");
  for (int i = 0; i < ss_; ++i)
    if (lambda[i] < 0) return false;
  return true;
}

bool RootSystem::is_strictly_dominant(const Vec& lambda) const {
  if (lambda.size() != total_) fail(ErrorKind::DimensionMismatch, "weight has wrong length");
  for (int i = 0; i < ss_; ++i)
    if (lambda[i] <= 0) return false;
  return true;
}

std::pair<Vec, WeylWord> RootSystem::dominant_representative(const Vec& lambda) const {
  Vec cur = lambda;
  WeylWord word;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < ss_; ++i) {
      if (cur[i] < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) break;
    cur = reflect(cur, neg);
    word.insert(word.begin(), neg);
  }
  return {cur, word};
}

std::vector<Vec> RootSystem::weyl_orbit(const Vec& lambda) const {
  std::vector<Vec> out;
  std::unordered_set<Vec, VecHash, VecEq> seen;
  std::deque<Vec> queue;
  seen.insert(lambda);
  queue.push_back(lambda);
  out.push_back(lambda);
  while (!queue.empty()) {
    Vec cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < ss_; ++i) {
      if (cur[i] == 0) continue;
      Vec next = reflect(cur, i);
      if (seen.insert(next).second) {
        out.push_back(next);
        queue.push_back(std::move(next));
      }
    }
  }
  return out;
}

std::vector<std::pair<Vec, WeylWord>> RootSystem::orbit_with_words(const Vec& lambda) const {
  std::vector<std::pair<Vec, WeylWord>> out;
  std::unordered_set<Vec, VecHash, VecEq> seen;
  std::deque<size_t> queue;
  seen.insert(lambda);
  out.emplace_back(lambda, WeylWord{});
  queue.push_back(0);
  while (!queue.empty()) {
    size_t at = queue.front();
    queue.pop_front();
    for (int i = 0; i < ss_; ++i) {
      if (out[at].first[i] == 0) continue;
      Vec next = reflect(out[at].first, i);
      if (seen.insert(next).second) {
        WeylWord w = out[at].second;
        w.insert(w.begin(), i);
        out.emplace_back(std::move(next), std::move(w));
        queue.push_back(out.size() - 1);
      }
    }
  }
  return out;
}

Int RootSystem::length(const WeylWord& u) const {
  for (int letter : u) check_index(letter);
  const WeylWord uinv = inverse_word(u);
  Int count = 0;
  for (const auto& gamma : positive_) {
    // Track fundamental and simple-root coordinates through u^{-1}.
    Vec fund = gamma.fund;
    Vec sc = gamma.simple_coords;
    for (auto it = uinv.rbegin(); it != uinv.rend(); ++it) {
      Int p = fund[*it];
      fund -= p * simple_root(*it);
      sc[*it] -= p;
    }
    bool negative = false;
    for (int i = 0; i < ss_; ++i) {
      if (sc[i] < 0) {
        negative = true;
        break;
      }
    }
    if (negative) ++count;
  }
  return count;
}

WeylWord RootSystem::longest_element() const {
  Vec neg = -delta_;
  auto [dom, word] = dominant_representative(neg);
  if (!(dom == delta_)) fail(ErrorKind::Internal, "longest element computation failed");
  return inverse_word(word);
}

Vec RootSystem::simple_coordinates(const Vec& x) const {
  if (x.size() != total_) fail(ErrorKind::DimensionMismatch, "weight has wrong length");
  for (int i = ss_; i < total_; ++i)
    if (x[i] != 0) fail(ErrorKind::Internal, "nonzero torus part is not in the root lattice");
  Vec c(ss_);
  for (int i = 0; i < ss_; ++i) {
    Int acc = 0;
    for (int j = 0; j < ss_; ++j) acc = checked_add(acc, checked_mul(cartan_t_adj_(i, j), x[j]));
    if (cartan_t_det_ == 0 || acc % cartan_t_det_ != 0)
      fail(ErrorKind::Internal, "weight is not in the root lattice");
    c[i] = acc / cartan_t_det_;
  }
  return c;
}

bool RootSystem::in_positive_root_cone(const Vec& x) const {
  for (int i = ss_; i < total_; ++i)
    if (x[i] != 0) return false;
  Vec c = simple_coordinates(x);
  return (c.array() >= 0).all();
}

Int RootSystem::height(const Vec& x) const {
  return checked_dot(height_functional_, x);
}

std::optional<int> RootSystem::simple_root_index(const Vec& x) const {
  if (x.size() != total_) return std::nullopt;
  for (int i = 0; i < ss_; ++i) {
    if (x == simple_root(i)) return i;
  }
  return std::nullopt;
}

}  // namespace prv
