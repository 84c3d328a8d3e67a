#include "bsfold/gkm.hpp"

#include <algorithm>
#include <stdexcept>

#include "bsfold/linalg.hpp"

namespace bsfold {

namespace {

// Monomial exponent vectors of total degree d, lexicographically descending
// in the exponent vector (deterministic unknown order for the solver).
void monomials_of_degree_rec(int nvars, int pos, int left, Monomial& cur,
                             std::vector<Monomial>& out) {
  if (pos == nvars - 1) {
    cur[static_cast<size_t>(pos)] = left;
    out.push_back(cur);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur[static_cast<size_t>(pos)] = e;
    monomials_of_degree_rec(nvars, pos + 1, left - e, cur, out);
  }
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(static_cast<size_t>(nvars), 0);
  monomials_of_degree_rec(nvars, 0, d, cur, out);
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long acc = 1;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

struct Congruence {
  Root alpha;
  Gallery gallery;
  int multiplicity;                       // |J_alpha(gamma)|
  std::vector<std::pair<std::uint64_t, int>> terms;  // (gallery index, sign)
};

// The signed summation underlying one wall congruence.
std::optional<Congruence> build_congruence(const Root& alpha, const Gallery& gamma) {
  std::vector<int> m = m_set(gamma, alpha);
  std::vector<int> j = j_set(gamma, alpha);
  if (j.empty()) return std::nullopt;  // trivially satisfied
  Congruence out{alpha, gamma, static_cast<int>(j.size()), {}};
  const size_t mm = m.size();
  for (std::uint64_t sub = 0; sub < (static_cast<std::uint64_t>(1) << mm); ++sub) {
    Gallery delta = gamma;
    for (size_t t = 0; t < mm; ++t)
      if ((sub >> t) & 1) delta = fold(delta, m[t]);
    std::vector<int> jd = j_set(delta, alpha);
    if (!std::includes(j.begin(), j.end(), jd.begin(), jd.end())) continue;
    out.terms.push_back({delta.order_index(), jd.size() % 2 == 0 ? 1 : -1});
  }
  return out;
}

}  // namespace

GkmClass constant_class(const SimpleSeq& s, const Rational& c) {
  GkmClass out{s, {}, c == 0 ? std::optional<int>{} : std::optional<int>{0}};
  out.values.assign(static_cast<size_t>(1) << s.length(), Poly(s.rs().rank(), c));
  return out;
}

MembershipVerdict membership(const GkmClass& f, bool strict_dyadic) {
  const SimpleSeq& s = f.seq;
  if (f.values.size() != (static_cast<size_t>(1) << s.length()))
    throw std::invalid_argument("membership: wrong tuple size");
  if (strict_dyadic)
    for (const Poly& v : f.values)
      if (!v.is_dyadic())
        throw std::invalid_argument("membership: coefficients are not in Z[1/2]");

  std::vector<Gallery> galleries = enumerate_galleries(s);
  for (const Root& alpha : s.rs().positive_roots()) {
    for (const Gallery& gamma : galleries) {
      auto cong = build_congruence(alpha, gamma);
      if (!cong) continue;
      Poly sum(s.rs().rank());
      for (const auto& [idx, sign] : cong->terms)
        sum += Rational(sign) * f.values[static_cast<size_t>(idx)];
      // Report the first nonzero stage remainder on failure.
      Poly cur = sum;
      for (int t = 0; t < cong->multiplicity && !cur.is_zero(); ++t) {
        LinearDivision d = divide_by_linear(cur, alpha);
        if (!d.remainder.is_zero())
          return {false, MembershipViolation{alpha, gamma, d.remainder}};
        cur = d.quotient;
      }
    }
  }
  return {true, std::nullopt};
}

long long gkm_expected_dimension(const SimpleSeq& s, int degree) {
  const int rank = s.rs().rank();
  long long acc = 0;
  for (int j = 0; j <= s.length() && j <= degree; ++j)
    acc += binomial(s.length(), j) * binomial(degree - j + rank - 1, rank - 1);
  return acc;
}

std::vector<GkmClass> gkm_basis(const SimpleSeq& s, int degree) {
  if (degree < 0) return {};
  const int rank = s.rs().rank();
  const std::vector<Monomial> monos = monomials_of_degree(rank, degree);
  const size_t ngal = static_cast<size_t>(1) << s.length();
  const size_t ncols = ngal * monos.size();

  // Divisibility of the congruence sums is linear in the unknown
  // coefficients: each stage remainder of the iterated division must vanish.
  std::vector<std::map<size_t, Rational>> rows;
  std::vector<Gallery> galleries = enumerate_galleries(s);
  for (const Root& alpha : s.rs().positive_roots()) {
    // Remainder chains per monomial are shared across galleries.
    std::vector<std::vector<Poly>> chains(monos.size());
    auto chain_for = [&](size_t t) -> const std::vector<Poly>& {
      if (chains[t].empty()) {
        Poly cur(rank);
        cur.add_term(monos[t], 1);
        std::vector<Poly> chain;
        for (int level = 0; level <= degree; ++level) {
          LinearDivision d = divide_by_linear(cur, alpha);
          chain.push_back(d.remainder);
          cur = d.quotient;
        }
        chains[t] = std::move(chain);
      }
      return chains[t];
    };

    for (const Gallery& gamma : galleries) {
      auto cong = build_congruence(alpha, gamma);
      if (!cong) continue;
      const int depth = std::min(cong->multiplicity, degree + 1);
      // Rows of this congruence, keyed by (stage, remainder monomial).
      std::map<std::pair<int, Monomial>, std::map<size_t, Rational>> block;
      for (const auto& [gidx, sign] : cong->terms) {
        for (size_t t = 0; t < monos.size(); ++t) {
          const size_t col = static_cast<size_t>(gidx) * monos.size() + t;
          const std::vector<Poly>& chain = chain_for(t);
          for (int level = 0; level < depth; ++level)
            for (const auto& [m, c] : chain[static_cast<size_t>(level)].terms()) {
              Rational& slot = block[{level, m}][col];
              slot += Rational(sign) * c;
            }
        }
      }
      for (auto& [key, row] : block) {
        std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }

  QMatrix system = QMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                 static_cast<Eigen::Index>(ncols));
  for (size_t r = 0; r < rows.size(); ++r)
    for (const auto& [col, c] : rows[r])
      system(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(col)) = c;
  QMatrix basis = nullspace(system);

  std::vector<GkmClass> out;
  for (Eigen::Index k = 0; k < basis.cols(); ++k) {
    // Scale to a primitive integer vector.
    mpz_class lcm_den = 1, gcd_num = 0;
    for (Eigen::Index r = 0; r < basis.rows(); ++r)
      if (basis(r, k) != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                    basis(r, k).get_den().get_mpz_t());
    for (Eigen::Index r = 0; r < basis.rows(); ++r)
      if (basis(r, k) != 0) {
        Rational scaled = basis(r, k) * Rational(lcm_den);
        mpz_class num = scaled.get_num();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
      }
    Rational scale = gcd_num == 0 ? Rational(1) : Rational(lcm_den) / Rational(gcd_num);

    GkmClass cls{s, std::vector<Poly>(ngal, Poly(rank)), degree};
    for (size_t g = 0; g < ngal; ++g)
      for (size_t t = 0; t < monos.size(); ++t) {
        Rational c = basis(static_cast<Eigen::Index>(g * monos.size() + t), k) * scale;
        if (c != 0) cls.values[g].add_term(monos[t], c);
      }
    out.push_back(std::move(cls));
  }
  return out;
}

GkmClass restrict_class(const FoldMorphism& m, const GkmClass& g) {
  if (!(g.seq == m.target()))
    throw std::invalid_argument("restrict_class: class is not over the morphism target");
  WeylElt w_inv = weyl_inv(m.rotation());
  GkmClass out{m.source(), {}, g.degree};
  out.values.reserve(static_cast<size_t>(1) << m.source().length());
  for (const Gallery& gamma : enumerate_galleries(m.source()))
    out.values.push_back(weyl_act(w_inv, g.at(m.apply(gamma))));
  return out;
}

DualClass dual_push(const FoldMorphism& m, const DualClass& f) {
  if (!(f.seq == m.source()))
    throw std::invalid_argument("dual_push: class is not over the morphism source");
  const int rank = m.source().rs().rank();
  DualClass out{m.target(),
                std::vector<RatFunc>(static_cast<size_t>(1) << m.target().length(),
                                     RatFunc::zero(rank))};
  for (const Gallery& gamma : enumerate_galleries(m.source()))
    out.at(m.apply(gamma)) = weyl_act(m.rotation(), f.at(gamma));
  return out;
}

RatFunc pairing(const DualClass& f, const GkmClass& g) {
  if (!(f.seq == g.seq)) throw std::invalid_argument("pairing: different words");
  RatFunc acc = RatFunc::zero(f.seq.rs().rank());
  for (const Gallery& gamma : enumerate_galleries(f.seq))
    acc = acc + f.at(gamma) * RatFunc(g.at(gamma));
  return acc.reduced();
}

LocalizationSum localization_sum(const RootSystem& rs, const Root& alpha, int ell,
                                 const std::map<int, bool>& k_map,
                                 const std::map<int, bool>& l_map,
                                 const std::vector<Poly>& f) {
  if (ell < 0 || ell > 62) throw std::invalid_argument("localization_sum: bad length");
  if (f.size() != (static_cast<size_t>(1) << ell))
    throw std::invalid_argument("localization_sum: wrong tuple size");
  for (const auto& [i, v] : k_map) {
    if (i < 1 || i > ell) throw std::out_of_range("localization_sum: K index out of range");
    if (l_map.count(i)) throw std::invalid_argument("localization_sum: K and L overlap");
  }
  for (const auto& [i, v] : l_map)
    if (i < 1 || i > ell) throw std::out_of_range("localization_sum: L index out of range");

  const int free_count = ell - static_cast<int>(k_map.size() + l_map.size());
  Poly numerator(rs.rank());
  for (std::uint64_t idx = 0; idx < (static_cast<std::uint64_t>(1) << ell); ++idx) {
    // Letter i of mu, in enumeration order (first letter most significant).
    auto letter = [&](int i) { return ((idx >> (ell - i)) & 1) != 0; };
    bool ok = true;
    int denom_sign = 1;
    bool parity = false;  // mu^i = s iff parity
    for (int i = 1; i <= ell && ok; ++i) {
      parity ^= letter(i);
      if (auto it = l_map.find(i); it != l_map.end() && it->second != letter(i)) ok = false;
      if (auto it = k_map.find(i); it != k_map.end() && it->second != parity) ok = false;
      if (!k_map.count(i) && !l_map.count(i)) denom_sign *= parity ? 1 : -1;
    }
    if (!ok) continue;
    numerator += Rational(denom_sign) * f[static_cast<size_t>(idx)];
  }
  Poly denominator = Poly::linear_form(alpha).pow(free_count);
  LocalizationSum out{RatFunc(numerator, denominator).reduced(),
                      divisible(numerator, alpha, free_count)};
  return out;
}

}  // namespace bsfold
