#include "dca/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace dca {

namespace {

using Json = nlohmann::ordered_json;

struct FamilyData {
  std::vector<std::vector<int>> cartan;  // cartan[j][i] = <alpha_i, alpha_j^vee>
  std::vector<int> norms;                // squared lengths, short = 2
};

void add_bond(FamilyData& fd, int a, int b) {
  // Bond between equal-length simple roots.
  fd.cartan[a][b] = -1;
  fd.cartan[b][a] = -1;
}

FamilyData family_data(Family family, int rank) {
  const auto reject = [&](const std::string& why) {
    throw std::invalid_argument("invalid root system " + family_name(family) + " rank " +
                                std::to_string(rank) + ": " + why);
  };
  switch (family) {
    case Family::A:
      if (rank < 1) reject("type A requires rank >= 1");
      break;
    case Family::B:
    case Family::C:
      if (rank < 2) reject("types B and C require rank >= 2");
      break;
    case Family::D:
      if (rank < 3) reject("type D requires rank >= 3");
      break;
    case Family::G2:
      if (rank != 2) reject("G2 has rank 2");
      break;
    case Family::F4:
      if (rank != 4) reject("F4 has rank 4");
      break;
    case Family::E6:
      if (rank != 6) reject("E6 has rank 6");
      break;
    case Family::E7:
      if (rank != 7) reject("E7 has rank 7");
      break;
    case Family::E8:
      if (rank != 8) reject("E8 has rank 8");
      break;
  }

  FamilyData fd;
  fd.cartan.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) fd.cartan[i][i] = 2;
  fd.norms.assign(rank, 2);

  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < rank; ++i) add_bond(fd, i, i + 1);
      break;
    case Family::B:
      // alpha_{rank-1} is the short root.
      for (int i = 0; i + 2 < rank; ++i) add_bond(fd, i, i + 1);
      for (int i = 0; i + 1 < rank; ++i) fd.norms[i] = 4;
      fd.cartan[rank - 1][rank - 2] = -2;
      fd.cartan[rank - 2][rank - 1] = -1;
      break;
    case Family::C:
      // alpha_{rank-1} is the long root.
      for (int i = 0; i + 2 < rank; ++i) add_bond(fd, i, i + 1);
      fd.norms[rank - 1] = 4;
      fd.cartan[rank - 1][rank - 2] = -1;
      fd.cartan[rank - 2][rank - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < rank; ++i) add_bond(fd, i, i + 1);
      add_bond(fd, rank - 3, rank - 1);
      break;
    case Family::G2:
      // alpha_1 short, alpha_2 long; highest root 3*alpha_1 + 2*alpha_2.
      fd.norms = {2, 6};
      fd.cartan[0][1] = -3;
      fd.cartan[1][0] = -1;
      break;
    case Family::F4:
      fd.norms = {4, 4, 2, 2};
      add_bond(fd, 0, 1);
      fd.cartan[2][1] = -2;
      fd.cartan[1][2] = -1;
      add_bond(fd, 2, 3);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      add_bond(fd, 0, 2);
      add_bond(fd, 2, 3);
      add_bond(fd, 3, 4);
      add_bond(fd, 4, 5);
      add_bond(fd, 1, 3);
      if (rank >= 7) add_bond(fd, 5, 6);
      if (rank >= 8) add_bond(fd, 6, 7);
      break;
    }
  }
  return fd;
}

std::size_t classical_positive_count(Family family, int rank) {
  switch (family) {
    case Family::A: return static_cast<std::size_t>(rank) * (rank + 1) / 2;
    case Family::B:
    case Family::C: return static_cast<std::size_t>(rank) * rank;
    case Family::D: return static_cast<std::size_t>(rank) * (rank - 1);
    case Family::G2: return 6;
    case Family::F4: return 24;
    case Family::E6: return 36;
    case Family::E7: return 63;
    case Family::E8: return 120;
  }
  return 0;
}

/// Canonical order: ascending height, then larger leading coefficients
/// first, so alpha_1 precedes alpha_2 within a height level.
bool canonical_less(const std::vector<int>& a, const std::vector<int>& b) {
  int ha = 0, hb = 0;
  for (int x : a) ha += x;
  for (int x : b) hb += x;
  if (ha != hb) return ha < hb;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
    case Family::F4: return "F4";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "C") return Family::C;
  if (name == "D") return Family::D;
  if (name == "G2" || name == "G") return Family::G2;
  if (name == "F4" || name == "F") return Family::F4;
  if (name == "E6") return Family::E6;
  if (name == "E7") return Family::E7;
  if (name == "E8") return Family::E8;
  throw std::invalid_argument("unknown family '" + name + "'");
}

RootSystem RootSystem::build(Family family, int rank) {
  const FamilyData fd = family_data(family, rank);

  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.cartan_ = fd.cartan;
  rs.simple_norms_.reserve(rank);
  for (int n : fd.norms) rs.simple_norms_.push_back(rat(n));

  // Gram matrix from the Cartan matrix: (alpha_i, alpha_j) = norm_j/2 *
  // <alpha_i, alpha_j^vee>. Symmetry is a consistency check on the family
  // tables.
  rs.gram_.assign(rank, std::vector<Rational>(rank));
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < rank; ++i) rs.gram_[j][i] = rs.simple_norms_[j] / 2 * fd.cartan[j][i];
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (rs.gram_[i][j] != rs.gram_[j][i])
        throw std::logic_error("asymmetric invariant form in family table");

  // Close the simple roots under the simple reflections. Every root is a
  // Weyl image of a simple root, so the closure is the whole system.
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> c(rank, 0);
    c[i] = 1;
    seen.insert(c);
    queue.push_back(c);
  }
  while (!queue.empty()) {
    const std::vector<int> c = queue.back();
    queue.pop_back();
    for (int j = 0; j < rank; ++j) {
      // <c, alpha_j^vee> = sum_i c_i * cartan[j][i]
      int pairing = 0;
      for (int i = 0; i < rank; ++i) pairing += c[i] * fd.cartan[j][i];
      std::vector<int> image = c;
      image[j] -= pairing;
      if (seen.insert(image).second) queue.push_back(image);
    }
  }

  for (const auto& c : seen) {
    const bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    const bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos)
      throw std::logic_error("generated vector with mixed coefficient signs");
    Root r;
    r.coeffs = c;
    for (int x : c) r.height += x;
    r.components.resize(rank);
    for (int j = 0; j < rank; ++j) {
      long v = 0;
      for (int i = 0; i < rank; ++i) v += static_cast<long>(c[i]) * fd.cartan[j][i];
      r.components[j] = rat(v);
    }
    if (nonneg) rs.positive_.push_back(r);
    rs.all_.emplace(c, std::move(r));
  }

  std::sort(rs.positive_.begin(), rs.positive_.end(),
            [](const Root& a, const Root& b) { return canonical_less(a.coeffs, b.coeffs); });
  for (std::size_t i = 0; i < rs.positive_.size(); ++i)
    rs.positive_index_.emplace(rs.positive_[i].coeffs, i);
  rs.max_height_ = rs.positive_.empty() ? 0 : rs.positive_.back().height;

  if (rs.positive_.size() != classical_positive_count(family, rank))
    throw std::logic_error("generated positive root count does not match the classical count");
  return rs;
}

bool RootSystem::contains(const std::vector<int>& coeffs) const {
  return all_.count(coeffs) != 0;
}

const Root& RootSystem::root(const std::vector<int>& coeffs) const {
  const auto it = all_.find(coeffs);
  if (it == all_.end()) throw std::invalid_argument("not a root of this system");
  return it->second;
}

std::size_t RootSystem::positive_index(const Root& r) const {
  const auto it = positive_index_.find(r.coeffs);
  if (it == positive_index_.end()) throw std::invalid_argument("not a positive root");
  return it->second;
}

void RootSystem::require_member(const Root& r) const {
  if (!contains(r.coeffs)) throw std::invalid_argument("root does not belong to this system");
}

std::optional<Root> RootSystem::root_sum(const Root& a, const Root& b) const {
  require_member(a);
  require_member(b);
  std::vector<int> sum(rank_);
  bool zero = true;
  for (int i = 0; i < rank_; ++i) {
    sum[i] = a.coeffs[i] + b.coeffs[i];
    zero = zero && sum[i] == 0;
  }
  if (zero) return std::nullopt;
  const auto it = all_.find(sum);
  if (it == all_.end()) return std::nullopt;
  return it->second;
}

const std::vector<Rational>& RootSystem::cartan_components(const Root& r) const {
  require_member(r);
  return all_.at(r.coeffs).components;
}

Root RootSystem::negated(const Root& r) const {
  require_member(r);
  std::vector<int> c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = -r.coeffs[i];
  return all_.at(c);
}

Root RootSystem::reflect(const Root& mirror, const Root& b) const {
  require_member(mirror);
  require_member(b);
  const Rational pairing = 2 * inner(b, mirror) / inner(mirror, mirror);
  if (pairing.get_den() != 1) throw std::logic_error("non-integral Cartan pairing");
  const long n = pairing.get_num().get_si();
  std::vector<int> c(rank_);
  for (int i = 0; i < rank_; ++i) c[i] = b.coeffs[i] - static_cast<int>(n) * mirror.coeffs[i];
  const auto it = all_.find(c);
  if (it == all_.end()) throw std::logic_error("reflection left the root system");
  return it->second;
}

Rational RootSystem::inner(const Root& a, const Root& b) const {
  Rational s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (b.coeffs[j] == 0) continue;
      s += rat(a.coeffs[i]) * rat(b.coeffs[j]) * gram_[i][j];
    }
  }
  return s;
}

int RootSystem::string_down_count(const Root& a, const Root& b) const {
  require_member(a);
  require_member(b);
  int p = 0;
  std::vector<int> c = b.coeffs;
  while (true) {
    for (int i = 0; i < rank_; ++i) c[i] -= a.coeffs[i];
    if (!contains(c)) return p;
    ++p;
  }
}

std::string RootSystem::to_json() const {
  Json j;
  j["family"] = family_name(family_);
  j["rank"] = rank_;
  j["cartan_matrix"] = cartan_;
  Json roots = Json::array();
  for (const Root& r : positive_) {
    Json jr;
    jr["coeffs"] = r.coeffs;
    jr["height"] = r.height;
    Json comps = Json::array();
    for (const Rational& c : r.components) comps.push_back(rat_str(c));
    jr["components"] = comps;
    roots.push_back(jr);
  }
  j["positive_roots"] = roots;
  return j.dump(2);
}

}  // namespace dca
