#include "prv/pairs.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace prv {

namespace {

// rho for the diagonal pair.  Ambient coordinates are laid out as
// (ss_1, ss_2, t_1, t_2); a diagonal weight (mu, nu) therefore maps in with
// its torus slots interleaved, and rho adds the matching blocks.
Mat diagonal_rho(const GroupType& g) {
  const int n = g.total_rank();
  const int ss = g.semisimple_rank();
  const int t = g.torus_rank;
  Mat rho = Mat::Zero(n, 2 * n);
  for (int i = 0; i < ss; ++i) {
    rho(i, i) = 1;
    rho(i, ss + i) = 1;
  }
  for (int i = 0; i < t; ++i) {
    rho(ss + i, 2 * ss + i) = 1;
    rho(ss + i, 2 * ss + t + i) = 1;
  }
  return rho;
}

}  // namespace

SphericalPair SphericalPair::diagonal(const GroupType& g) {
  GroupType amb;
  amb.factors = g.factors;
  amb.factors.insert(amb.factors.end(), g.factors.begin(), g.factors.end());
  amb.torus_rank = 2 * g.torus_rank;
  return from_data("diag:" + g.str(), g, amb, diagonal_rho(g));
}

SphericalPair SphericalPair::g2_spin7() {
  Mat rho(2, 3);
  rho << 1, 0, 1,
         0, 1, 0;
  return from_data("g2-spin7", GroupType::parse("G2"), GroupType::parse("B3"), rho);
}

SphericalPair SphericalPair::from_data_unchecked(std::string name, GroupType sub, GroupType amb,
                                                 Mat rho) {
  SphericalPair p;
  p.name_ = std::move(name);
  p.sub_ = std::make_shared<RootSystem>(std::move(sub));
  p.amb_ = std::make_shared<RootSystem>(std::move(amb));
  if (rho.rows() != p.sub_->rank() || rho.cols() != p.amb_->rank())
    fail(ErrorKind::ParseError, "rho must be (sub rank) x (amb rank), got " +
                                    std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
  p.rho_ = std::move(rho);
  p.classify();
  p.diagonal_ = p.classified_ && p.detect_diagonal();
  return p;
}

SphericalPair SphericalPair::from_data(std::string name, GroupType sub, GroupType amb, Mat rho) {
  SphericalPair p = from_data_unchecked(std::move(name), std::move(sub), std::move(amb), std::move(rho));
  if (!p.classified_) fail(ErrorKind::InvalidPair, p.classify_error_);
  return p;
}

SphericalPair SphericalPair::by_name(const std::string& name) {
  if (name == "g2-spin7") return g2_spin7();
  if (name.rfind("diag:", 0) == 0) return diagonal(GroupType::parse(name.substr(5)));
  fail(ErrorKind::ParseError, "unknown pair name '" + name + "' (use diag:<type> or g2-spin7)");
}

std::vector<std::string> SphericalPair::builtin_names() {
  return {"diag:A1", "diag:A2", "diag:A3", "diag:B3", "diag:C3", "diag:D4",
          "diag:G2", "diag:A1xA1", "g2-spin7"};
}

SphericalPair SphericalPair::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) fail(ErrorKind::ParseError, "pair document must be a JSON object");
    if (!doc.contains("sub_type") || !doc.contains("amb_type") || !doc.contains("rho"))
      fail(ErrorKind::ParseError, "pair document needs sub_type, amb_type and rho");
    GroupType sub = GroupType::parse(doc["sub_type"].get<std::string>());
    GroupType amb = GroupType::parse(doc["amb_type"].get<std::string>());
    const auto& jr = doc["rho"];
    if (!jr.is_array() || jr.empty()) fail(ErrorKind::ParseError, "rho must be a non-empty array of rows");
    const size_t rows = jr.size();
    size_t cols = 0;
    for (const auto& row : jr) {
      if (!row.is_array()) fail(ErrorKind::ParseError, "rho rows must be arrays");
      if (cols == 0) cols = row.size();
      if (row.size() != cols || cols == 0) fail(ErrorKind::ParseError, "rho rows must have equal nonzero length");
    }
    Mat rho(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        if (!jr[i][j].is_number_integer()) fail(ErrorKind::ParseError, "rho entries must be integers");
        rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = jr[i][j].get<Int>();
      }
    std::string name = doc.value("name", sub.str() + "<" + amb.str());
    SphericalPair p = from_data(name, sub, amb, rho);
    ValidationReport report = p.validate();
    if (!report.all_passed()) {
      for (const auto& c : report.checks)
        if (!c.passed) fail(ErrorKind::InvalidPair, "pair fails check '" + c.name + "': " + c.detail);
    }
    return p;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::ParseError, std::string("invalid pair document: ") + e.what());
  }
}

SphericalPair SphericalPair::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open pair file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

Vec SphericalPair::restrict_weight(const Vec& chi) const {
  if (chi.size() != amb_->rank())
    fail(ErrorKind::DimensionMismatch, "ambient weight has wrong length for " + name_);
  Vec out(sub_->rank());
  for (Eigen::Index i = 0; i < rho_.rows(); ++i) {
    Int acc = 0;
    for (Eigen::Index j = 0; j < rho_.cols(); ++j)
      acc = checked_add(acc, checked_mul(rho_(i, j), chi[j]));
    out[i] = acc;
  }
  return out;
}

void SphericalPair::classify() {
  classified_ = false;
  fibers_.assign(static_cast<size_t>(sub_->ss_rank()), Fiber{});
  for (int i = 0; i < sub_->ss_rank(); ++i) fibers_[static_cast<size_t>(i)].sub_root = i;
  for (int j = 0; j < amb_->ss_rank(); ++j) {
    Vec image = restrict_weight(amb_->simple_root(j));
    auto idx = sub_->simple_root_index(image);
    if (!idx) {
      classify_error_ = "rho(alpha_hat_" + std::to_string(j + 1) + ") = " + format_vec(image) +
                        " is not a simple root of " + sub_->signature();
      return;
    }
    fibers_[static_cast<size_t>(*idx)].amb_roots.push_back(j);
  }
  for (const auto& f : fibers_) {
    if (f.amb_roots.empty()) {
      classify_error_ = "simple root " + std::to_string(f.sub_root + 1) + " of " +
                        sub_->signature() + " has empty fiber";
      return;
    }
    if (f.amb_roots.size() > 2) {
      classify_error_ = "fiber of simple root " + std::to_string(f.sub_root + 1) + " has size " +
                        std::to_string(f.amb_roots.size());
      return;
    }
    if (f.amb_roots.size() == 2 &&
        amb_->cartan()(f.amb_roots[0], f.amb_roots[1]) != 0) {
      classify_error_ = "fiber of simple root " + std::to_string(f.sub_root + 1) +
                        " consists of non-orthogonal ambient roots";
      return;
    }
  }
  embedding_.clear();
  for (const auto& f : fibers_) embedding_.push_back(WeylWord(f.amb_roots.begin(), f.amb_roots.end()));
  classified_ = true;
}

bool SphericalPair::detect_diagonal() const {
  const auto& s = sub_->type();
  const auto& a = amb_->type();
  if (a.torus_rank != 2 * s.torus_rank || a.factors.size() != 2 * s.factors.size()) return false;
  for (size_t i = 0; i < s.factors.size(); ++i) {
    for (size_t half = 0; half < 2; ++half) {
      const auto& f = a.factors[i + half * s.factors.size()];
      if (f.family != s.factors[i].family || f.rank != s.factors[i].rank) return false;
    }
  }
  // rho must add the matching blocks of the two copies.
  return rho_ == diagonal_rho(s);
}

std::vector<int> SphericalPair::delta1() const {
  std::vector<int> out;
  for (const auto& f : fibers_)
    if (f.amb_roots.size() == 1) out.push_back(f.sub_root);
  return out;
}

std::vector<int> SphericalPair::delta2() const {
  std::vector<int> out;
  for (const auto& f : fibers_)
    if (f.amb_roots.size() == 2) out.push_back(f.sub_root);
  return out;
}

WeylWord SphericalPair::embed_weyl(const WeylWord& u) const {
  WeylWord out;
  for (int letter : u) {
    if (letter < 0 || letter >= static_cast<int>(embedding_.size()))
      fail(ErrorKind::IndexOutOfRange, "simple reflection index out of range");
    const auto& image = embedding_[static_cast<size_t>(letter)];
    out.insert(out.end(), image.begin(), image.end());
  }
  return out;
}

std::pair<Vec, Vec> SphericalPair::split_diagonal(const Vec& nuhat) const {
  if (!diagonal_) fail(ErrorKind::NotDiagonalPair, name_ + " is not a diagonal pair");
  if (nuhat.size() != amb_->rank()) fail(ErrorKind::DimensionMismatch, "ambient weight has wrong length");
  const int ss = sub_->ss_rank();
  const int t = sub_->rank() - ss;
  Vec mu(sub_->rank()), nu(sub_->rank());
  mu.head(ss) = nuhat.segment(0, ss);
  nu.head(ss) = nuhat.segment(ss, ss);
  if (t > 0) {
    mu.tail(t) = nuhat.segment(2 * ss, t);
    nu.tail(t) = nuhat.segment(2 * ss + t, t);
  }
  return {mu, nu};
}

Vec SphericalPair::join_diagonal(const Vec& mu, const Vec& nu) const {
  if (!diagonal_) fail(ErrorKind::NotDiagonalPair, name_ + " is not a diagonal pair");
  if (mu.size() != sub_->rank() || nu.size() != sub_->rank())
    fail(ErrorKind::DimensionMismatch, "mu and nu must have the sub rank");
  const int ss = sub_->ss_rank();
  const int t = sub_->rank() - ss;
  Vec out(amb_->rank());
  out.segment(0, ss) = mu.head(ss);
  out.segment(ss, ss) = nu.head(ss);
  if (t > 0) {
    out.segment(2 * ss, t) = mu.tail(t);
    out.segment(2 * ss + t, t) = nu.tail(t);
  }
  return out;
}

ValidationReport SphericalPair::validate() const {
  ValidationReport report;
  auto add = [&report](const std::string& name, bool ok, const std::string& detail) {
    report.checks.push_back({name, ok, detail});
  };

  // Check 1: rho maps ambient simple roots onto sub simple roots, with
  // fibers of size 1 or 2 covering every sub simple root.
  if (!classified_) {
    add("fiber-classification", false, classify_error_);
    add("delta2-orthogonality", false, "skipped: classification failed");
    add("delta2-coroot-relation", false, "skipped: classification failed");
    add("delta1-pairing-compatibility", false, "skipped: classification failed");
    add("weyl-embedding-intertwines", false, "skipped: classification failed");
    return report;
  }
  add("fiber-classification", true,
      std::to_string(delta1().size()) + " Delta_1 and " + std::to_string(delta2().size()) +
          " Delta_2 fibers");

  {
    bool ok = true;
    std::string detail;
    for (int i : delta2()) {
      const auto& f = fibers_[static_cast<size_t>(i)];
      if (amb_->cartan()(f.amb_roots[0], f.amb_roots[1]) != 0 ||
          amb_->cartan()(f.amb_roots[1], f.amb_roots[0]) != 0) {
        ok = false;
        detail = "fiber of alpha_" + std::to_string(i + 1) + " is not orthogonal";
        break;
      }
    }
    add("delta2-orthogonality", ok, detail);
  }

  // Checks 3 and 4 verify <rho(chi), alpha^vee> against fiber pairings on
  // every ambient fundamental weight; linearity extends them to all chi.
  {
    bool ok = true;
    std::string detail;
    for (int i : delta2()) {
      const auto& f = fibers_[static_cast<size_t>(i)];
      for (int j = 0; j < amb_->rank() && ok; ++j) {
        Vec chi = Vec::Zero(amb_->rank());
        chi[j] = 1;
        Int lhs = restrict_weight(chi)[i];
        Int rhs = chi[f.amb_roots[0]] + chi[f.amb_roots[1]];
        if (lhs != rhs) {
          ok = false;
          detail = "fails at alpha_" + std::to_string(i + 1) + ", fundamental " + std::to_string(j + 1);
        }
      }
    }
    add("delta2-coroot-relation", ok, detail);
  }
  {
    bool ok = true;
    std::string detail;
    for (int i : delta1()) {
      const auto& f = fibers_[static_cast<size_t>(i)];
      for (int j = 0; j < amb_->rank() && ok; ++j) {
        Vec chi = Vec::Zero(amb_->rank());
        chi[j] = 1;
        Int lhs = restrict_weight(chi)[i];
        Int rhs = chi[f.amb_roots[0]];
        if (lhs != rhs) {
          ok = false;
          detail = "fails at alpha_" + std::to_string(i + 1) + ", fundamental " + std::to_string(j + 1);
        }
      }
    }
    add("delta1-pairing-compatibility", ok, detail);
  }

  // Check 5: rho intertwines each embedded simple reflection with the sub
  // reflection, on every ambient fundamental weight.
  {
    bool ok = true;
    std::string detail;
    for (int i = 0; i < sub_->ss_rank() && ok; ++i) {
      WeylWord embedded = embed_weyl({i});
      for (int j = 0; j < amb_->rank() && ok; ++j) {
        Vec chi = Vec::Zero(amb_->rank());
        chi[j] = 1;
        Vec lhs = restrict_weight(amb_->apply_word(chi, embedded));
        Vec rhs = sub_->reflect(restrict_weight(chi), i);
        if (!(lhs == rhs)) {
          ok = false;
          detail = "s_" + std::to_string(i + 1) + " fails on fundamental " + std::to_string(j + 1);
        }
      }
    }
    add("weyl-embedding-intertwines", ok, detail);
  }

  return report;
}

}  // namespace prv
