#include "paving/weaver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace paving::weaver {
namespace {

std::int64_t b_count(int m) { return 2 * static_cast<std::int64_t>(m) + 1; }
std::int64_t d_width(int m) { return (static_cast<std::int64_t>(m) + 1) * (m + 1); }

// Linear offset of C(i, i+1) within the C block: rows 1..i-1 hold
// (N-1) + (N-2) + ... + (N-i+1) entries.
std::int64_t c_row_offset(std::int64_t n_b, std::int64_t i) { return (i - 1) * n_b - (i - 1) * i / 2; }

struct Offsets {
  std::int64_t b, c, d, end;
};

Offsets offsets(int m) {
  const BlockSizes s = block_sizes(m);
  return {s.a, s.a + s.b, s.a + s.b + s.c, s.total()};
}

}  // namespace

void require_valid_m(int m) {
  if (m < 2) throw std::invalid_argument("weaver: m must be at least 2, got " + std::to_string(m));
}

BlockSizes block_sizes(int m) {
  require_valid_m(m);
  const std::int64_t mm = m;
  const std::int64_t n_b = b_count(m);
  return {mm * mm, n_b, n_b * (n_b - 1) / 2, n_b * d_width(m)};
}

std::int64_t dimension(int m) {
  require_valid_m(m);
  const std::int64_t mm = m;
  return 2 * mm * mm * mm + 8 * mm * mm + 7 * mm + 2;
}

bool BasisIndex::valid(int m) const {
  if (m < 2) return false;
  const std::int64_t n_b = b_count(m);
  switch (block) {
    case Block::A:
      return i >= 1 && i <= static_cast<std::int64_t>(m) * m;
    case Block::B:
      return i >= 1 && i <= n_b;
    case Block::C:
      return i >= 1 && i < j && j <= n_b;
    case Block::D:
      return i >= 1 && i <= n_b && j >= 1 && j <= d_width(m);
  }
  return false;
}

std::size_t BasisIndex::to_linear(int m) const {
  if (!valid(m)) throw std::out_of_range("BasisIndex " + to_string() + " out of range for m=" + std::to_string(m));
  const Offsets off = offsets(m);
  switch (block) {
    case Block::A:
      return static_cast<std::size_t>(i - 1);
    case Block::B:
      return static_cast<std::size_t>(off.b + i - 1);
    case Block::C:
      return static_cast<std::size_t>(off.c + c_row_offset(b_count(m), i) + (j - i - 1));
    case Block::D:
      return static_cast<std::size_t>(off.d + (i - 1) * d_width(m) + (j - 1));
  }
  return 0;
}

BasisIndex BasisIndex::from_linear(int m, std::size_t index) {
  const Offsets off = offsets(m);
  const auto x = static_cast<std::int64_t>(index);
  if (x < off.b) return A(static_cast<int>(x + 1));
  if (x < off.c) return B(static_cast<int>(x - off.b + 1));
  if (x < off.d) {
    const std::int64_t n_b = b_count(m);
    const std::int64_t local = x - off.c;
    std::int64_t i = 1;
    while (c_row_offset(n_b, i + 1) <= local) ++i;
    const std::int64_t j = local - c_row_offset(n_b, i) + i + 1;
    return C(static_cast<int>(i), static_cast<int>(j));
  }
  if (x < off.end) {
    const std::int64_t local = x - off.d;
    return D(static_cast<int>(local / d_width(m) + 1), static_cast<int>(local % d_width(m) + 1));
  }
  throw std::out_of_range("linear index " + std::to_string(index) + " exceeds dimension for m=" + std::to_string(m));
}

std::string BasisIndex::to_string() const {
  switch (block) {
    case Block::A:
      return "a(" + std::to_string(i) + ")";
    case Block::B:
      return "b(" + std::to_string(i) + ")";
    case Block::C:
      return "c(" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Block::D:
      return "d(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return "?";
}

Rational radicand(int m) {
  require_valid_m(m);
  return Rational(m - 1, m + 1);
}

QuadExt frame_entry(int m, std::size_t k, const BasisIndex& x) {
  if (!x.valid(m)) throw std::out_of_range("frame_entry: invalid basis index " + x.to_string());
  if (k >= frame_rank(m)) throw std::out_of_range("frame_entry: frame vector index out of range");
  const Rational rho = radicand(m);
  const std::int64_t mm = m;
  const auto zero = QuadExt::rational(Rational(0), rho);

  if (k == 0) {
    if (x.block == BasisIndex::Block::A || x.block == BasisIndex::Block::B) {
      return QuadExt::rational(Rational(1, mm + 1), rho);
    }
    return zero;
  }
  const int i = static_cast<int>(k);
  switch (x.block) {
    case BasisIndex::Block::A:
      return QuadExt::rational(Rational(-1, mm * mm * (mm + 1)), rho);
    case BasisIndex::Block::B:
      return x.i == i ? QuadExt::rational(Rational(1, mm + 1), rho) : zero;
    case BasisIndex::Block::C:
      if (x.j == i) return QuadExt::rational(Rational(1, mm * (mm + 1)), rho);
      if (x.i == i) return QuadExt::rational(Rational(-1, mm * (mm + 1)), rho);
      return zero;
    case BasisIndex::Block::D:
      return x.i == i ? QuadExt(Rational(0), Rational(1, mm), rho) : zero;
  }
  return zero;
}

ExactFrame::ExactFrame(int m, std::vector<std::vector<Entry>> vectors)
    : m_(m), dim_(static_cast<std::size_t>(dimension(m))), rho_(radicand(m)), vectors_(std::move(vectors)) {
  for (auto& v : vectors_) {
    std::sort(v.begin(), v.end(), [](const Entry& x, const Entry& y) { return x.first < y.first; });
    for (std::size_t t = 0; t < v.size(); ++t) {
      if (v[t].first >= dim_) throw std::out_of_range("ExactFrame: coordinate beyond dimension");
      if (t > 0 && v[t - 1].first == v[t].first) throw std::invalid_argument("ExactFrame: duplicate coordinate");
      if (v[t].second.rho() != rho_) throw std::invalid_argument("ExactFrame: entry radicand differs from frame");
    }
  }
}

QuadExt ExactFrame::entry(std::size_t k, const BasisIndex& x) const {
  const std::size_t idx = x.to_linear(m_);
  const auto& v = vectors_.at(k);
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const Entry& e, std::size_t key) { return e.first < key; });
  if (it != v.end() && it->first == idx) return it->second;
  return QuadExt::rational(Rational(0), rho_);
}

void ExactFrame::set_entry(std::size_t k, const BasisIndex& x, const QuadExt& value) {
  const std::size_t idx = x.to_linear(m_);
  auto& v = vectors_.at(k);
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const Entry& e, std::size_t key) { return e.first < key; });
  const bool present = it != v.end() && it->first == idx;
  if (value.is_zero()) {
    if (present) v.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    v.insert(it, Entry{idx, value});
  }
}

Projection ExactFrame::to_projection() const {
  std::vector<double> rows(rank() * dim_, 0.0);
  for (std::size_t k = 0; k < rank(); ++k) {
    for (const auto& [idx, value] : vectors_[k]) rows[k * dim_ + idx] = value.to_double();
  }
  return Projection(OrthonormalFrame(rank(), dim_, std::move(rows)));
}

Vector ExactFrame::to_vector(std::size_t k) const {
  Vector v(dim_);
  for (const auto& [idx, value] : vectors_.at(k)) v[idx] = value.to_double();
  return v;
}

ExactFrame build_frame(int m) {
  require_valid_m(m);
  const Rational rho = radicand(m);
  const int n_b = 2 * m + 1;
  const int n_d = (m + 1) * (m + 1);
  const int n_a = m * m;
  std::vector<std::vector<ExactFrame::Entry>> vectors(frame_rank(m));

  auto push = [&](std::size_t k, const BasisIndex& x) { vectors[k].emplace_back(x.to_linear(m), frame_entry(m, k, x)); };

  for (int i = 1; i <= n_a; ++i) push(0, BasisIndex::A(i));
  for (int i = 1; i <= n_b; ++i) push(0, BasisIndex::B(i));

  for (int i = 1; i <= n_b; ++i) {
    const auto k = static_cast<std::size_t>(i);
    for (int j = 1; j <= n_a; ++j) push(k, BasisIndex::A(j));
    push(k, BasisIndex::B(i));
    for (int j = 1; j < i; ++j) push(k, BasisIndex::C(j, i));
    for (int j = i + 1; j <= n_b; ++j) push(k, BasisIndex::C(i, j));
    for (int j = 1; j <= n_d; ++j) push(k, BasisIndex::D(i, j));
  }
  return ExactFrame(m, std::move(vectors));
}

QuadExt exact_inner(const ExactFrame& f, std::size_t k, std::size_t l) {
  const auto x = f.vector(k);
  const auto y = f.vector(l);
  QuadExt acc = QuadExt::rational(Rational(0), f.rho());
  std::size_t s = 0;
  std::size_t t = 0;
  while (s < x.size() && t < y.size()) {
    if (x[s].first < y[t].first) {
      ++s;
    } else if (y[t].first < x[s].first) {
      ++t;
    } else {
      acc = acc + x[s].second * y[t].second;
      ++s;
      ++t;
    }
  }
  return acc;
}

bool verify_orthonormal(const ExactFrame& f) {
  for (std::size_t k = 0; k < f.rank(); ++k) {
    for (std::size_t l = k; l < f.rank(); ++l) {
      const QuadExt g = exact_inner(f, k, l);
      if (!g.b().is_zero() || g.a() != Rational(k == l ? 1 : 0)) return false;
    }
  }
  return true;
}

Rational row_norm_sq(int m, const BasisIndex& x) {
  QuadExt acc = QuadExt::rational(Rational(0), radicand(m));
  for (std::size_t k = 0; k < frame_rank(m); ++k) {
    const QuadExt e = frame_entry(m, k, x);
    acc = acc + e * e;
  }
  // Every entry is purely rational or purely a multiple of √ρ, so squares
  // are rational.
  if (!acc.b().is_zero()) throw std::logic_error("row_norm_sq: irrational squared norm");
  return acc.a();
}

BlockRowNorms block_row_norms(int m) {
  return {row_norm_sq(m, BasisIndex::A(1)), row_norm_sq(m, BasisIndex::B(1)), row_norm_sq(m, BasisIndex::C(1, 2)),
          row_norm_sq(m, BasisIndex::D(1, 1))};
}

Rational delta_p_exact(int m) {
  const BlockRowNorms r = block_row_norms(m);
  return std::max({r.a, r.b, r.c, r.d});
}

int SignProfile::alpha() const { return static_cast<int>(std::count(eps.begin(), eps.end(), std::int8_t{1})); }
int SignProfile::beta() const {
  return static_cast<int>(std::count(eps_prime.begin(), eps_prime.end(), std::int8_t{1}));
}

void SignProfile::validate(int m) const {
  require_valid_m(m);
  if (eps.size() != static_cast<std::size_t>(m) * m || eps_prime.size() != static_cast<std::size_t>(2 * m + 1)) {
    throw std::invalid_argument("SignProfile: expected lengths m² and 2m+1");
  }
  auto bad = [](std::int8_t s) { return s != 1 && s != -1; };
  if (std::any_of(eps.begin(), eps.end(), bad) || std::any_of(eps_prime.begin(), eps_prime.end(), bad)) {
    throw std::invalid_argument("SignProfile: entries must be +1 or -1");
  }
}

Symmetry extend_profile(int m, const SignProfile& profile, std::span<const std::int8_t> rest) {
  profile.validate(m);
  const auto dim = static_cast<std::size_t>(dimension(m));
  const std::size_t head = profile.eps.size() + profile.eps_prime.size();
  if (rest.size() != dim - head) throw std::invalid_argument("extend_profile: C/D sign vector has wrong length");
  std::vector<std::int8_t> signs;
  signs.reserve(dim);
  signs.insert(signs.end(), profile.eps.begin(), profile.eps.end());
  signs.insert(signs.end(), profile.eps_prime.begin(), profile.eps_prime.end());
  signs.insert(signs.end(), rest.begin(), rest.end());
  return Symmetry(std::move(signs));
}

Rational V0Coefficients::norm_sq() const {
  Rational acc = c0 * c0;
  for (const auto& x : c) acc += x * x;
  return acc;
}

V0Coefficients psp_v0_coeffs(int m, const SignProfile& profile) {
  profile.validate(m);
  const std::int64_t mm = m;
  const Rational scale(1, (mm + 1) * (mm + 1));
  std::int64_t sum_eps = 0;
  for (auto e : profile.eps) sum_eps += e;
  std::int64_t sum_prime = 0;
  for (auto e : profile.eps_prime) sum_prime += e;

  V0Coefficients out;
  out.c0 = Rational(sum_eps + sum_prime) * scale;
  const Rational a_part = Rational(-sum_eps, mm * mm);
  out.c.reserve(profile.eps_prime.size());
  for (auto e : profile.eps_prime) out.c.push_back((a_part + Rational(e)) * scale);
  return out;
}

Rational psp_v0_norm_sq(int m, int alpha, int beta) {
  require_valid_m(m);
  const std::int64_t mm = m;
  const std::int64_t n_a = mm * mm;
  const std::int64_t n_b = 2 * mm + 1;
  if (alpha < 0 || alpha > n_a || beta < 0 || beta > n_b) {
    throw std::out_of_range("psp_v0_norm_sq: counts (" + std::to_string(alpha) + ", " + std::to_string(beta) +
                            ") outside [0, m²] × [0, 2m+1]");
  }
  const std::int64_t s = 2 * alpha - n_a;
  const std::int64_t t = 2 * beta - n_b;
  const Rational scale(1, (mm + 1) * (mm + 1));
  const Rational c0 = Rational(s + t) * scale;
  const Rational a_part(-s, n_a);
  const Rational c_plus = (a_part + Rational(1)) * scale;
  const Rational c_minus = (a_part - Rational(1)) * scale;
  return c0 * c0 + Rational(beta) * c_plus * c_plus + Rational(n_b - beta) * c_minus * c_minus;
}

const char* to_string(Verdict v) { return v == Verdict::FalsifiesA ? "FALSIFIES_A" : "INCONCLUSIVE"; }

CertificateReport min_over_symmetries_v0(int m, unsigned workers) {
  require_valid_m(m);
  const int n_a = m * m;
  const int n_b = 2 * m + 1;

  struct Best {
    Rational value;
    int alpha = -1;
    int beta = -1;
  };
  auto scan_alpha = [&](int lo, int hi) {
    Best best;
    for (int a = lo; a < hi; ++a) {
      for (int b = 0; b <= n_b; ++b) {
        Rational v = psp_v0_norm_sq(m, a, b);
        if (best.alpha < 0 || v < best.value) best = {std::move(v), a, b};
      }
    }
    return best;
  };

  const unsigned parts = std::clamp(workers, 1u, static_cast<unsigned>(n_a + 1));
  std::vector<Best> partial(parts);
  const int chunk = (n_a + 1 + static_cast<int>(parts) - 1) / static_cast<int>(parts);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < parts; ++w) {
      const int lo = static_cast<int>(w) * chunk;
      const int hi = std::min(n_a + 1, lo + chunk);
      if (parts == 1) {
        partial[w] = scan_alpha(lo, hi);
      } else {
        pool.emplace_back([&, w, lo, hi] { partial[w] = scan_alpha(lo, hi); });
      }
    }
  }
  // Chunks are ordered by alpha, so keeping the first strict minimum gives
  // the lexicographically smallest argmin.
  Best best;
  for (auto& b : partial) {
    if (b.alpha < 0) continue;
    if (best.alpha < 0 || b.value < best.value) best = std::move(b);
  }

  CertificateReport r;
  r.m = m;
  r.delta_p = delta_p_exact(m);
  r.two_delta_p = Rational(2) * r.delta_p;
  r.two_delta_p_sq = r.two_delta_p * r.two_delta_p;
  r.min_norm_sq = best.value;
  r.argmin_alpha = best.alpha;
  r.argmin_beta = best.beta;
  if (claims_apply(m)) r.branch_bound = overall_branch_bound(m);
  r.verdict = r.min_norm_sq > r.two_delta_p_sq ? Verdict::FalsifiesA : Verdict::Inconclusive;
  return r;
}

double branch_bound(int m, int alpha) {
  if (!claims_apply(m)) throw std::invalid_argument("branch_bound: requires m >= 6");
  const std::int64_t mm = m;
  if (alpha < 0 || 2 * static_cast<std::int64_t>(alpha) > mm * mm) {
    throw std::invalid_argument("branch_bound: alpha must lie in [0, m²/2]");
  }
  const double delta = delta_p_exact(m).to_double();
  if (4 * static_cast<std::int64_t>(alpha) < mm * mm) {
    return static_cast<double>(mm * mm - 4 * mm - 2) / 4.0 * delta;
  }
  const double denom = static_cast<double>(mm * mm * (mm + 1) * (mm + 1));
  return std::sqrt(static_cast<double>(2 * mm + 1)) * 2.0 * alpha / denom;
}

double overall_branch_bound(int m) {
  if (!claims_apply(m)) throw std::invalid_argument("overall_branch_bound: requires m >= 6");
  const double mm = m;
  const double delta = delta_p_exact(m).to_double();
  return delta / 4.0 * std::min(mm * mm - 4 * mm - 2, std::sqrt(2 * mm + 1));
}

}  // namespace paving::weaver
