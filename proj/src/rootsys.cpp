#include "bsfold/rootsys.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "bsfold/linalg.hpp"

namespace bsfold {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw std::invalid_argument(std::string("unknown family '") + c + "'");
  }
}

char family_to_char(Family f) { return static_cast<char>(f); }

bool Root::is_positive() const {
  bool any = false;
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0) return false;
    if (coeffs[i] > 0) any = true;
  }
  return any;
}

namespace {

void check_component(Family f, int rank) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 3; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument(std::string("invalid root system ") +
                                family_to_char(f) + std::to_string(rank));
  if (rank > 8)
    throw std::invalid_argument("component rank capped at 8");
}

// Cartan matrix C(i,j) = <alpha_j, alpha_i> and half-norms d_i, 0-based.
void component_cartan(Family f, int n, LMatrix& cartan, LVector& d) {
  cartan = LMatrix::Zero(n, n);
  d = LVector::Ones(n);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) {
      cartan(i, i + 1) = -1;
      cartan(i + 1, i) = -1;
    }
  };
  for (int i = 0; i < n; ++i) cartan(i, i) = 2;
  switch (f) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      // alpha_n short: <alpha_{n-1}, alpha_n> = -2.
      chain(n);
      cartan(n - 1, n - 2) = -2;
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C:
      // alpha_n long: <alpha_n, alpha_{n-1}> = -2.
      chain(n);
      cartan(n - 2, n - 1) = -2;
      d[n - 1] = 2;
      break;
    case Family::D:
      chain(n - 1);
      cartan(n - 3, n - 1) = -1;
      cartan(n - 1, n - 3) = -1;
      break;
    case Family::E:
      // Bourbaki numbering: node 2 attaches to node 4 of the chain 1-3-4-5-...
      chain(0);
      {
        std::vector<std::pair<int, int>> edges = {{0, 2}, {2, 3}, {1, 3}};
        for (int i = 4; i < n; ++i) edges.push_back({i - 1, i});
        for (auto [a, b] : edges) {
          cartan(a, b) = -1;
          cartan(b, a) = -1;
        }
      }
      break;
    case Family::F:
      chain(n);
      // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
      cartan(2, 1) = -2;
      d[0] = d[1] = 2;
      break;
    case Family::G:
      // alpha_1 long, alpha_2 short.
      cartan(0, 1) = -1;
      cartan(1, 0) = -3;
      d[0] = 3;
      break;
  }
}

// Height first, then leading coordinates first: a1, a2, ..., a1+a2, ...
bool positive_root_less(const Root& a, const Root& b) {
  std::int64_t ha = a.coeffs.sum(), hb = b.coeffs.sum();
  if (ha != hb) return ha < hb;
  return std::lexicographical_compare(b.coeffs.data(), b.coeffs.data() + b.coeffs.size(),
                                      a.coeffs.data(), a.coeffs.data() + a.coeffs.size());
}

}  // namespace

RootSystem RootSystem::build(Family family, int rank) {
  return build(std::vector<Component>{{family, rank}});
}

RootSystem RootSystem::build(const std::vector<Component>& components) {
  if (components.empty()) throw std::invalid_argument("no components given");
  for (const auto& c : components) check_component(c.family, c.rank);

  RootSystem rs;
  rs.components_ = components;
  int total = 0;
  for (const auto& c : components) total += c.rank;
  rs.rank_ = total;
  rs.cartan_ = LMatrix::Zero(total, total);
  rs.half_norms_ = LVector::Ones(total);

  int offset = 0;
  for (const auto& c : components) {
    LMatrix block;
    LVector d;
    component_cartan(c.family, c.rank, block, d);
    rs.cartan_.block(offset, offset, c.rank, c.rank) = block;
    rs.half_norms_.segment(offset, c.rank) = d;
    offset += c.rank;
  }

  // The symmetrized matrix d_i C(i,j) must come out symmetric.
  for (int i = 0; i < total; ++i)
    for (int j = 0; j < total; ++j)
      if (rs.half_norms_[i] * rs.cartan_(i, j) != rs.half_norms_[j] * rs.cartan_(j, i))
        throw std::logic_error("Cartan data is not symmetrizable");

  // Positive roots: orbit of the simple roots under simple reflections,
  // filtered by positivity.
  auto cmp = [](const LVector& a, const LVector& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                        b.data(), b.data() + b.size());
  };
  std::set<LVector, decltype(cmp)> orbit(cmp);
  std::vector<LVector> frontier;
  for (int i = 0; i < total; ++i) {
    LVector e = LVector::Zero(total);
    e[i] = 1;
    orbit.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<LVector> next;
    for (const auto& v : frontier) {
      for (int i = 1; i <= total; ++i) {
        Root image = reflect(rs, i, Root(v));
        if (orbit.insert(image.coeffs).second) next.push_back(image.coeffs);
      }
    }
    frontier = std::move(next);
  }
  for (const auto& v : orbit) {
    Root r{v};
    if (r.is_positive()) rs.positive_.push_back(r);
  }
  std::sort(rs.positive_.begin(), rs.positive_.end(), positive_root_less);
  return rs;
}

Root RootSystem::simple_root(int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("simple root index out of range");
  LVector e = LVector::Zero(rank_);
  e[i - 1] = 1;
  return Root(e);
}

bool RootSystem::is_root(const Root& r) const {
  return is_positive_root(r) || is_positive_root(-r);
}

bool RootSystem::is_positive_root(const Root& r) const {
  return std::binary_search(positive_.begin(), positive_.end(), r, positive_root_less);
}

std::int64_t RootSystem::pairing_with_simple(const Root& beta, int i) const {
  if (i < 1 || i > rank_) throw std::out_of_range("simple root index out of range");
  std::int64_t acc = 0;
  for (int j = 0; j < rank_; ++j) acc += cartan_(i - 1, j) * beta.coeffs[j];
  return acc;
}

std::int64_t RootSystem::bilinear(const Root& a, const Root& b) const {
  // (alpha_i, alpha_j) = d_i C(i, j).
  std::int64_t acc = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      acc += a.coeffs[i] * b.coeffs[j] * half_norms_[i] * cartan_(i, j);
  }
  return acc;
}

std::int64_t RootSystem::pairing(const Root& beta, const Root& alpha) const {
  std::int64_t num = 2 * bilinear(beta, alpha);
  std::int64_t den = bilinear(alpha, alpha);
  if (den == 0 || num % den != 0)
    throw std::invalid_argument("pairing: alpha is not a root of this system");
  return num / den;
}

bool RootSystem::is_simply_laced() const {
  for (const auto& c : components_)
    if (c.family != Family::A && c.family != Family::D && c.family != Family::E)
      return false;
  return true;
}

std::string RootSystem::format_root(const Root& r) const {
  std::string out;
  for (int i = 0; i < rank_; ++i) {
    std::int64_t c = r.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    std::int64_t a = c > 0 ? c : -c;
    if (a != 1) out += std::to_string(a) + "*";
    out += "a" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

Root reflect(const RootSystem& rs, int i, const Root& beta) {
  std::int64_t pairing = rs.pairing_with_simple(beta, i);
  LVector out = beta.coeffs;
  out[i - 1] -= pairing;
  return Root(out);
}

WeylElt simple_reflection(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw std::out_of_range("simple reflection index out of range");
  LMatrix m = LMatrix::Identity(rs.rank(), rs.rank());
  for (int j = 0; j < rs.rank(); ++j) m(i - 1, j) -= rs.cartan()(i - 1, j);
  return WeylElt{m};
}

WeylElt root_reflection(const RootSystem& rs, const Root& alpha) {
  LMatrix m(rs.rank(), rs.rank());
  for (int j = 1; j <= rs.rank(); ++j) {
    Root image = rs.simple_root(j);
    std::int64_t pairing = rs.pairing(image, alpha);
    m.col(j - 1) = image.coeffs - pairing * alpha.coeffs;
  }
  return WeylElt{m};
}

WeylElt weyl_identity(const RootSystem& rs) {
  return WeylElt{LMatrix::Identity(rs.rank(), rs.rank())};
}

WeylElt weyl_from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElt acc = weyl_identity(rs);
  for (int i : word) acc = weyl_mul(acc, simple_reflection(rs, i));
  return acc;
}

Root weyl_apply(const WeylElt& w, const Root& beta) {
  if (w.action.cols() != beta.coeffs.size())
    throw std::invalid_argument("weyl_apply: rank mismatch");
  return Root(w.action * beta.coeffs);
}

WeylElt weyl_mul(const WeylElt& a, const WeylElt& b) {
  if (a.action.cols() != b.action.rows())
    throw std::invalid_argument("weyl_mul: rank mismatch");
  return WeylElt{a.action * b.action};
}

WeylElt weyl_inv(const WeylElt& w) { return WeylElt{lattice_inverse(w.action)}; }

}  // namespace bsfold
