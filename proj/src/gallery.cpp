#include "bsfold/gallery.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsfold {

SimpleSeq::SimpleSeq(std::shared_ptr<const RootSystem> rs, std::vector<int> indices)
    : rs_(std::move(rs)), indices_(std::move(indices)) {
  if (!rs_) throw std::invalid_argument("SimpleSeq: null root system");
  if (indices_.size() > 62) throw std::invalid_argument("SimpleSeq: length capped at 62");
  for (int i : indices_)
    if (i < 1 || i > rs_->rank())
      throw std::out_of_range("SimpleSeq: letter index out of range");
}

bool SimpleSeq::operator==(const SimpleSeq& other) const {
  if (indices_ != other.indices_) return false;
  if (rs_ == other.rs_) return true;
  return rs_ && other.rs_ && rs_->cartan() == other.rs_->cartan();
}

Gallery::Gallery(SimpleSeq seq, std::uint64_t mask) : seq_(std::move(seq)), mask_(mask) {
  if (seq_.length() < 64 && (mask_ >> seq_.length()) != 0)
    throw std::invalid_argument("Gallery: mask has bits beyond the word length");
}

std::uint64_t Gallery::order_index() const {
  const int r = length();
  std::uint64_t idx = 0;
  for (int i = 1; i <= r; ++i) idx = (idx << 1) | (reflected(i) ? 1u : 0u);
  return idx;
}

bool Gallery::operator==(const Gallery& other) const {
  return mask_ == other.mask_ && seq_ == other.seq_;
}

std::string Gallery::to_string() const {
  std::string out = "(";
  for (int i = 1; i <= length(); ++i) {
    if (i > 1) out += ",";
    out += reflected(i) ? "s" + std::to_string(seq_.letter(i)) : "e";
  }
  return out + ")";
}

std::vector<Gallery> enumerate_galleries(const SimpleSeq& s) {
  const int r = s.length();
  std::vector<Gallery> out;
  out.reserve(static_cast<size_t>(1) << r);
  for (std::uint64_t idx = 0; idx < (static_cast<std::uint64_t>(1) << r); ++idx)
    out.push_back(gallery_from_order_index(s, idx));
  return out;
}

Gallery gallery_from_order_index(const SimpleSeq& s, std::uint64_t index) {
  const int r = s.length();
  if (r < 64 && (index >> r) != 0) throw std::out_of_range("gallery index out of range");
  std::uint64_t mask = 0;
  for (int i = 1; i <= r; ++i)
    if ((index >> (r - i)) & 1) mask |= (static_cast<std::uint64_t>(1) << (i - 1));
  return Gallery(s, mask);
}

Gallery parse_gallery(const SimpleSeq& s, const std::string& text) {
  std::string t = text;
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw std::invalid_argument("gallery literal must look like \"(e,s2,e)\"");
  t = t.substr(1, t.size() - 2);
  std::vector<std::string> parts;
  std::string cur;
  for (char c : t) {
    if (c == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  if (static_cast<int>(parts.size()) != s.length())
    throw std::invalid_argument("gallery literal has wrong length for the word");
  std::uint64_t mask = 0;
  for (int i = 1; i <= s.length(); ++i) {
    const std::string& p = parts[static_cast<size_t>(i - 1)];
    if (p == "e") continue;
    if (p.size() >= 2 && p[0] == 's' && std::stoi(p.substr(1)) == s.letter(i))
      mask |= (static_cast<std::uint64_t>(1) << (i - 1));
    else
      throw std::invalid_argument("gallery entry '" + p + "' does not match letter s" +
                                  std::to_string(s.letter(i)));
  }
  return Gallery(s, mask);
}

WeylElt prefix(const Gallery& gamma, int i) {
  if (i < 0 || i > gamma.length()) throw std::out_of_range("prefix index out of range");
  WeylElt acc = weyl_identity(gamma.seq().rs());
  for (int k = 1; k <= i; ++k)
    if (gamma.reflected(k))
      acc = weyl_mul(acc, simple_reflection(gamma.seq().rs(), gamma.seq().letter(k)));
  return acc;
}

Root beta(const Gallery& gamma, int i) {
  if (i < 1 || i > gamma.length()) throw std::out_of_range("beta index out of range");
  Root alpha = gamma.seq().rs().simple_root(gamma.seq().letter(i));
  return weyl_apply(prefix(gamma, i), -alpha);
}

std::vector<Root> all_betas(const Gallery& gamma) {
  // Incremental prefixes; one matrix product per letter.
  std::vector<Root> out;
  out.reserve(static_cast<size_t>(gamma.length()));
  const RootSystem& rs = gamma.seq().rs();
  WeylElt acc = weyl_identity(rs);
  for (int i = 1; i <= gamma.length(); ++i) {
    if (gamma.reflected(i))
      acc = weyl_mul(acc, simple_reflection(rs, gamma.seq().letter(i)));
    out.push_back(weyl_apply(acc, -rs.simple_root(gamma.seq().letter(i))));
  }
  return out;
}

Gallery fold(const Gallery& gamma, int i) {
  if (i < 1 || i > gamma.length()) throw std::out_of_range("fold index out of range");
  return Gallery(gamma.seq(), gamma.mask() ^ (static_cast<std::uint64_t>(1) << (i - 1)));
}

std::vector<int> m_set(const Gallery& gamma, const Root& alpha) {
  std::vector<int> out;
  std::vector<Root> betas = all_betas(gamma);
  for (int i = 1; i <= gamma.length(); ++i)
    if (betas[static_cast<size_t>(i - 1)] == alpha || betas[static_cast<size_t>(i - 1)] == -alpha)
      out.push_back(i);
  return out;
}

std::vector<int> j_set(const Gallery& gamma, const Root& alpha) {
  std::vector<int> out;
  std::vector<Root> betas = all_betas(gamma);
  for (int i = 1; i <= gamma.length(); ++i)
    if (betas[static_cast<size_t>(i - 1)] == alpha) out.push_back(i);
  return out;
}

bool equivalent(const Gallery& gamma, const Gallery& delta, const Root& alpha,
                const std::vector<int>& x) {
  if (!gamma.same_shape(delta)) throw std::invalid_argument("equivalent: different words");
  std::vector<Root> betas = all_betas(gamma);
  for (int i = 1; i <= gamma.length(); ++i) {
    if (gamma.reflected(i) == delta.reflected(i)) continue;
    const Root& b = betas[static_cast<size_t>(i - 1)];
    if (b != alpha && b != -alpha) return false;
    if (!std::binary_search(x.begin(), x.end(), i)) return false;
  }
  return true;
}

bool equivalent(const Gallery& gamma, const Gallery& delta, const Root& alpha) {
  std::vector<int> x(static_cast<size_t>(gamma.length()));
  for (int i = 0; i < gamma.length(); ++i) x[static_cast<size_t>(i)] = i + 1;
  return equivalent(gamma, delta, alpha, x);
}

bool equivalent_by_fold_path(const Gallery& gamma, const Gallery& delta,
                             const Root& alpha, const std::vector<int>& x) {
  if (!gamma.same_shape(delta)) throw std::invalid_argument("equivalent: different words");
  Gallery cur = gamma;
  for (;;) {
    int i = 0;
    for (int k = cur.length(); k >= 1; --k)
      if (cur.reflected(k) != delta.reflected(k)) { i = k; break; }
    if (i == 0) return true;
    if (!std::binary_search(x.begin(), x.end(), i)) return false;
    Root b = beta(cur, i);
    if (b != alpha && b != -alpha) return false;
    cur = fold(cur, i);
  }
}

}  // namespace bsfold
