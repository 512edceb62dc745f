#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>
#include <string>
#include <vector>

#include "mcgl/class_analyzer.hpp"
#include "mcgl/error.hpp"
#include "mcgl/field.hpp"
#include "mcgl/mat.hpp"

namespace mcgl::oracle {

inline constexpr std::uint64_t kDefaultCap = 2'000'000;

/// Plain residue matrices over 𝔽_q (q prime, n ≤ 4), independent of Mat.
/// Codes pack entries base q, little-endian in row-major order.
class SmallGroup {
 public:
  using Raw = std::array<std::uint32_t, 16>;

  SmallGroup(FieldSpec f, std::size_t n, std::uint64_t cap = kDefaultCap) : f_(f), n_(n) {
    if (!f.is_prime()) fail(Errc::PreconditionViolated, "the oracle works over prime fields only");
    if (n < 1 || n > 4) fail(Errc::TooLarge, "the oracle supports 1 <= n <= 4");
    q_ = f.p();
    size_ = 1;
    for (std::size_t k = 0; k < n * n; ++k) {
      if (size_ > cap / q_) fail(Errc::TooLarge, "q^(n^2) exceeds the enumeration cap " + std::to_string(cap));
      size_ *= q_;
    }
  }

  FieldSpec field() const { return f_; }
  std::size_t n() const { return n_; }
  std::uint32_t q() const { return q_; }
  /// q^{n²}
  std::uint64_t code_space() const { return size_; }

  std::uint64_t order() const {
    std::uint64_t qn = 1, total = 1;
    for (std::size_t k = 0; k < n_; ++k) qn *= q_;
    for (std::uint64_t qk = 1, k = 0; k < n_; ++k, qk *= q_) total *= qn - qk;
    return total;
  }

  std::uint64_t encode(const Raw& m) const {
    std::uint64_t c = 0;
    for (std::size_t k = n_ * n_; k-- > 0;) c = c * q_ + m[k];
    return c;
  }
  Raw decode(std::uint64_t c) const {
    Raw m{};
    for (std::size_t k = 0; k < n_ * n_; ++k, c /= q_) m[k] = static_cast<std::uint32_t>(c % q_);
    return m;
  }

  Raw from_mat(const Mat& a) const {
    if (!(a.field() == f_) || a.rows() != n_ || a.cols() != n_) fail(Errc::FieldMismatch, "matrix does not match the group");
    Raw m{};
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) m[i * n_ + j] = a.at(i, j).residue();
    return m;
  }
  Mat to_mat(const Raw& m) const {
    Mat a(f_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) a.at(i, j) = Scalar(f_, static_cast<long>(m[i * n_ + j]));
    return a;
  }

  Raw mul(const Raw& a, const Raw& b) const {
    Raw c{};
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < n_; ++k) s += std::uint64_t{a[i * n_ + k]} * b[k * n_ + j];
        c[i * n_ + j] = static_cast<std::uint32_t>(s % q_);
      }
    return c;
  }

  std::uint32_t det(Raw m) const {
    std::uint64_t d = 1;
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t p = c;
      while (p < n_ && m[p * n_ + c] == 0) ++p;
      if (p == n_) return 0;
      if (p != c) {
        for (std::size_t k = 0; k < n_; ++k) std::swap(m[p * n_ + k], m[c * n_ + k]);
        d = (q_ - d) % q_;
      }
      d = d * m[c * n_ + c] % q_;
      const std::uint64_t inv = inverse_of(m[c * n_ + c]);
      for (std::size_t r = c + 1; r < n_; ++r) {
        const std::uint64_t factor = m[r * n_ + c] * inv % q_;
        for (std::size_t k = c; k < n_; ++k)
          m[r * n_ + k] = static_cast<std::uint32_t>((m[r * n_ + k] + (q_ - factor) * m[c * n_ + k]) % q_);
      }
    }
    return static_cast<std::uint32_t>(d);
  }

  Raw inverse(Raw m) const {
    Raw inv = identity();
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t p = c;
      while (p < n_ && m[p * n_ + c] == 0) ++p;
      if (p == n_) fail(Errc::Singular, "matrix is singular");
      for (std::size_t k = 0; k < n_; ++k) {
        std::swap(m[p * n_ + k], m[c * n_ + k]);
        std::swap(inv[p * n_ + k], inv[c * n_ + k]);
      }
      const std::uint64_t s = inverse_of(m[c * n_ + c]);
      for (std::size_t k = 0; k < n_; ++k) {
        m[c * n_ + k] = static_cast<std::uint32_t>(m[c * n_ + k] * s % q_);
        inv[c * n_ + k] = static_cast<std::uint32_t>(inv[c * n_ + k] * s % q_);
      }
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == c || m[r * n_ + c] == 0) continue;
        const std::uint64_t factor = q_ - m[r * n_ + c];
        for (std::size_t k = 0; k < n_; ++k) {
          m[r * n_ + k] = static_cast<std::uint32_t>((m[r * n_ + k] + factor * m[c * n_ + k]) % q_);
          inv[r * n_ + k] = static_cast<std::uint32_t>((inv[r * n_ + k] + factor * inv[c * n_ + k]) % q_);
        }
      }
    }
    return inv;
  }

  Raw identity() const {
    Raw m{};
    for (std::size_t i = 0; i < n_; ++i) m[i * n_ + i] = 1;
    return m;
  }

  /// t_ij(−a)·m·t_ij(a), i.e. m^{t_ij(a)}; 0-based i ≠ j.
  Raw conj_transvection(Raw m, std::size_t i, std::size_t j, std::uint32_t a) const {
    for (std::size_t r = 0; r < n_; ++r)  // column j += a·column i
      m[r * n_ + j] = static_cast<std::uint32_t>((m[r * n_ + j] + std::uint64_t{a} * m[r * n_ + i]) % q_);
    for (std::size_t k = 0; k < n_; ++k)  // row i −= a·row j
      m[i * n_ + k] = static_cast<std::uint32_t>((m[i * n_ + k] + std::uint64_t{q_ - a} * m[j * n_ + k]) % q_);
    return m;
  }

 private:
  std::uint64_t inverse_of(std::uint64_t x) const {
    std::uint64_t r = 1, b = x % q_, e = q_ - 2;
    for (; e; e >>= 1, b = b * b % q_)
      if (e & 1) r = r * b % q_;
    return r;
  }

  FieldSpec f_;
  std::size_t n_;
  std::uint32_t q_ = 0;
  std::uint64_t size_ = 1;
};

struct ClassSet {
  std::vector<std::uint64_t> elements;  // sorted codes
  std::uint32_t det = 0;
  Mat representative;
};

namespace detail {

/// Orbit of one code under conjugation by every t_ij(a), a ≠ 0.
template <class Visit>
void orbit(const SmallGroup& g, std::uint64_t start, Visit&& visit) {
  std::queue<std::uint64_t> todo;
  visit(start);
  todo.push(start);
  std::unordered_set<std::uint64_t> seen{start};
  while (!todo.empty()) {
    const auto m = g.decode(todo.front());
    todo.pop();
    for (std::size_t i = 0; i < g.n(); ++i)
      for (std::size_t j = 0; j < g.n(); ++j) {
        if (i == j) continue;
        for (std::uint32_t a = 1; a < g.q(); ++a) {
          const auto c = g.encode(g.conj_transvection(m, i, j, a));
          if (seen.insert(c).second) {
            visit(c);
            todo.push(c);
          }
        }
      }
  }
}

}  // namespace detail

/// The E-class σ^E as an explicit set.
inline ClassSet enumerate_E_class(const Mat& sigma, std::uint64_t cap = kDefaultCap) {
  require_square(sigma);
  const SmallGroup g(sigma.field(), sigma.n(), cap);
  const auto raw = g.from_mat(sigma);
  ClassSet out;
  out.det = g.det(raw);
  out.representative = sigma;
  detail::orbit(g, g.encode(raw), [&](std::uint64_t c) { out.elements.push_back(c); });
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

/// Partition of GL_n(𝔽_q) into E-classes, each keyed by its smallest code.
class ClassAtlas {
 public:
  static constexpr std::int32_t kNone = -1;

  explicit ClassAtlas(FieldSpec f, std::size_t n, std::uint64_t cap = kDefaultCap) : g_(f, n, cap) {
    id_.assign(g_.code_space(), kNone);
    for (std::uint64_t c = 0; c < g_.code_space(); ++c) {
      if (id_[c] != kNone) continue;
      const auto m = g_.decode(c);
      const auto d = g_.det(m);
      if (d == 0) continue;
      const auto k = static_cast<std::int32_t>(reps_.size());
      reps_.push_back(c);
      dets_.push_back(d);
      members_.emplace_back();
      auto& mem = members_.back();
      orbit_fill(c, k, mem);
      std::sort(mem.begin(), mem.end());
    }
  }

  const SmallGroup& group() const { return g_; }
  std::size_t class_count() const { return reps_.size(); }
  std::int32_t id_of(std::uint64_t code) const { return id_.at(code); }
  std::int32_t id_of(const Mat& m) const { return id_of(g_.encode(g_.from_mat(m))); }
  const std::vector<std::uint64_t>& members(std::int32_t k) const { return members_.at(static_cast<std::size_t>(k)); }
  std::uint64_t rep_code(std::int32_t k) const { return reps_.at(static_cast<std::size_t>(k)); }
  Mat representative(std::int32_t k) const { return g_.to_mat(g_.decode(rep_code(k))); }
  std::uint32_t det(std::int32_t k) const { return dets_.at(static_cast<std::size_t>(k)); }

  std::int32_t inverse_class(std::int32_t k) const { return id_of(g_.encode(g_.inverse(g_.decode(rep_code(k))))); }

  bool is_central(std::int32_t k) const {
    const auto m = g_.decode(rep_code(k));
    for (std::size_t i = 0; i < g_.n(); ++i)
      for (std::size_t j = 0; j < g_.n(); ++j)
        if (i == j ? m[i * g_.n() + j] != m[0] : m[i * g_.n() + j] != 0) return false;
    return true;
  }

  std::int32_t t12_class() const {
    auto m = g_.identity();
    m[1] = 1;
    return id_of(g_.encode(m));
  }

  /// Classes making up D·C for class sets D and a class C.
  std::set<std::int32_t> product(const std::set<std::int32_t>& left, std::int32_t right) const {
    std::set<std::int32_t> out;
    for (auto d : left) {
      const auto rd = g_.decode(rep_code(d));
      for (auto y : members(right)) out.insert(id_of(g_.encode(g_.mul(rd, g_.decode(y)))));
    }
    return out;
  }

 private:
  void orbit_fill(std::uint64_t start, std::int32_t k, std::vector<std::uint64_t>& mem) {
    std::vector<std::uint64_t> todo{start};
    id_[start] = k;
    mem.push_back(start);
    while (!todo.empty()) {
      const auto m = g_.decode(todo.back());
      todo.pop_back();
      for (std::size_t i = 0; i < g_.n(); ++i)
        for (std::size_t j = 0; j < g_.n(); ++j) {
          if (i == j) continue;
          for (std::uint32_t a = 1; a < g_.q(); ++a) {
            const auto c = g_.encode(g_.conj_transvection(m, i, j, a));
            if (id_[c] != kNone) continue;
            id_[c] = k;
            mem.push_back(c);
            todo.push_back(c);
          }
        }
    }
  }

  SmallGroup g_;
  std::vector<std::int32_t> id_;
  std::vector<std::uint64_t> reps_;
  std::vector<std::uint32_t> dets_;
  std::vector<std::vector<std::uint64_t>> members_;
};

/// Is t_12(1) in C_1^{s_1}⋯C_m^{s_m}? Each entry is (class representative, sign).
inline bool class_product_contains_t(const ClassAtlas& atlas, const std::vector<std::pair<Mat, int>>& factors) {
  if (factors.empty()) return false;
  std::vector<std::int32_t> ids;
  for (const auto& [m, s] : factors) {
    if (!(m.field() == atlas.group().field())) fail(Errc::FieldMismatch, "class over a different field");
    const auto k = atlas.id_of(m);
    if (k == ClassAtlas::kNone) fail(Errc::Singular, "matrix is singular");
    ids.push_back(s > 0 ? k : atlas.inverse_class(k));
  }
  std::set<std::int32_t> acc{ids[0]};
  for (std::size_t i = 1; i < ids.size(); ++i) acc = atlas.product(acc, ids[i]);
  return acc.count(atlas.t12_class()) > 0;
}

struct OracleVerdict {
  int m_min = 0;
  std::vector<SignPattern> realizing_patterns;
};

/// Smallest m ≤ 4 with a sign pattern whose class product contains t_12(1),
/// and every pattern of that length that works.
inline OracleVerdict minimal_m_search(const ClassAtlas& atlas, std::int32_t cls, int max_len = 4) {
  if (atlas.is_central(cls)) fail(Errc::CentralMatrix, "scalar matrices have no m(C)");
  const std::int32_t ids[2] = {cls, atlas.inverse_class(cls)};
  const std::int32_t t = atlas.t12_class();
  std::map<SignPattern, std::set<std::int32_t>> prefix;
  OracleVerdict out;
  for (int len = 1; len <= max_len; ++len) {
    for (const auto& p : all_patterns(static_cast<std::size_t>(len))) {
      std::set<std::int32_t> cur;
      const int last = p.back() > 0 ? 0 : 1;
      if (len == 1) {
        cur = {ids[last]};
      } else {
        const SignPattern head(p.begin(), p.end() - 1);
        cur = atlas.product(prefix.at(head), ids[last]);
      }
      if (cur.count(t)) out.realizing_patterns.push_back(p);
      prefix.emplace(p, std::move(cur));
    }
    if (!out.realizing_patterns.empty()) {
      out.m_min = len;
      return out;
    }
  }
  fail(Errc::PreconditionViolated, "no pattern up to length " + std::to_string(max_len) + " reaches t_12(1)");
}

inline OracleVerdict minimal_m_search(const ClassAtlas& atlas, const Mat& sigma, int max_len = 4) {
  const auto k = atlas.id_of(sigma);
  if (k == ClassAtlas::kNone) fail(Errc::Singular, "matrix is singular");
  return minimal_m_search(atlas, k, max_len);
}

/// Every pattern of the given length whose product contains t_12(1).
inline std::vector<SignPattern> realizing_patterns(const ClassAtlas& atlas, std::int32_t cls, std::size_t length) {
  std::vector<SignPattern> out;
  const auto inv = atlas.inverse_class(cls);
  for (const auto& p : all_patterns(length)) {
    std::set<std::int32_t> acc{p[0] > 0 ? cls : inv};
    for (std::size_t i = 1; i < p.size(); ++i) acc = atlas.product(acc, p[i] > 0 ? cls : inv);
    if (acc.count(atlas.t12_class())) out.push_back(p);
  }
  return out;
}

}  // namespace mcgl::oracle
