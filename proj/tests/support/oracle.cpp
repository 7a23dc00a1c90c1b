#include "oracle.hpp"

#include <bit>
#include <cstdint>

namespace tccs::oracle {
namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

Matrix square(std::size_t n) { return Matrix(n, std::vector<bool>(n, false)); }

Matrix compose(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c = square(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (b[k][j]) c[i][j] = true;
  return c;
}

// Warshall; reflexive when asked.
Matrix closure(Matrix m, bool reflexive) {
  const std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (m[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = true;
  if (reflexive)
    for (std::size_t i = 0; i < n; ++i) m[i][i] = true;
  return m;
}

}  // namespace

BruteForce::BruteForce(const Lts& lts) : n_(lts.num_states()), tau_(npos), tick_(npos) {
  lts.require_complete();
  const std::size_t nl = lts.num_labels();
  strong_.assign(nl, square(n_));
  comm_.assign(nl, false);
  for (std::size_t l = 0; l < nl; ++l) {
    const Label& lab = lts.label(static_cast<LabelId>(l));
    if (lab.is_tau()) tau_ = l;
    if (lab.is_tick()) tick_ = l;
    comm_[l] = lab.is_comm();
  }
  for (const auto& e : lts.edges()) strong_[e.label][e.src][e.dst] = true;

  const Matrix tau = tau_ == npos ? square(n_) : strong_[tau_];
  tau_star_ = closure(tau, true);
  const Matrix tau_plus = closure(tau, false);
  weak_.resize(nl);
  for (std::size_t l = 0; l < nl; ++l) {
    weak_[l] = l == tau_ ? tau_star_ : compose(compose(tau_star_, strong_[l]), tau_star_);
  }
  Matrix alpha = square(n_);
  for (std::size_t l = 0; l < nl; ++l) {
    if (l == tick_) continue;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (strong_[l][i][j]) alpha[i][j] = true;
  }
  const Matrix alpha_star = closure(alpha, true);

  stable_.assign(n_, true);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (tau[i][j]) stable_[i] = false;
  conv_.assign(n_, false);
  ctxconv_.assign(n_, false);
  div_.assign(n_, false);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (tau_star_[i][j] && stable_[j]) conv_[i] = true;
      if (alpha_star[i][j] && stable_[j]) ctxconv_[i] = true;
      if (tau_star_[i][j] && tau_plus[j][j]) div_[i] = true;
    }
  }
}

// Some q' with q =label=> q' (or q =tau=> q' when allowed) and p2 R q'.
bool BruteForce::answer(std::size_t q, std::size_t label, std::size_t p2,
                        const Matrix& r, bool or_tau) const {
  for (std::size_t q2 = 0; q2 < n_; ++q2) {
    const bool reach = weak_[label][q][q2] || (or_tau && tau_star_[q][q2]);
    if (reach && r[p2][q2]) return true;
  }
  return false;
}

bool BruteForce::pair_ok(std::size_t p, std::size_t q, const Matrix& r, Mode mode) const {
  if (mode == Mode::ConvDiv && div_[p] && !div_[q]) return false;
  if (mode == Mode::ConvUntimed && conv_[p] && !conv_[q]) return false;
  for (std::size_t l = 0; l < weak_.size(); ++l) {
    const bool is_tick = l == tick_;
    const bool is_tau = l == tau_;
    bool challenged = true;
    bool lab = false;
    switch (mode) {
      case Mode::Usual:
        break;
      case Mode::UsualUntimed:
      case Mode::ConvUntimed:
        challenged = !is_tick;
        lab = mode == Mode::ConvUntimed && comm_[l];
        break;
      case Mode::Conv:
      case Mode::ConvDiv:
        lab = comm_[l];
        break;
    }
    if (!challenged) continue;
    if (lab && !ctxconv_[p]) continue;
    for (std::size_t p2 = 0; p2 < n_; ++p2) {
      if (!weak_[l][p][p2]) continue;
      const bool or_tau = lab && !ctxconv_[p2];
      if (!answer(q, l, p2, r, or_tau && !is_tau)) return false;
    }
  }
  return true;
}

bool BruteForce::valid(const Matrix& r, Mode mode) const {
  for (std::size_t p = 0; p < n_; ++p)
    for (std::size_t q = 0; q < n_; ++q)
      if (r[p][q] && !pair_ok(p, q, r, mode)) return false;
  return true;
}

std::optional<Matrix> BruteForce::greatest(Mode mode, std::size_t max_candidates) const {
  Matrix full = square(n_);
  for (auto& row : full) row.assign(n_, true);
  // Pre-filter: pairs that fail even against the full relation.
  std::vector<std::pair<std::size_t, std::size_t>> cand;
  for (std::size_t p = 0; p < n_; ++p)
    for (std::size_t q = p + 1; q < n_; ++q)
      if (pair_ok(p, q, full, mode) && pair_ok(q, p, full, mode)) cand.emplace_back(p, q);
  if (cand.size() > max_candidates) return std::nullopt;

  const std::size_t k = cand.size();
  auto build = [&](std::uint64_t mask) {
    Matrix r = square(n_);
    for (std::size_t i = 0; i < n_; ++i) r[i][i] = true;
    for (std::size_t b = 0; b < k; ++b) {
      if (mask >> b & 1) {
        r[cand[b].first][cand[b].second] = true;
        r[cand[b].second][cand[b].first] = true;
      }
    }
    return r;
  };
  // Largest first. Valid relations are closed under union, so the first
  // valid one found at the largest size is the greatest.
  for (std::size_t size = k + 1; size-- > 0;) {
    if (size == 0) return build(0);  // the identity is always valid
    std::uint64_t mask = (std::uint64_t{1} << size) - 1;
    const std::uint64_t limit = std::uint64_t{1} << k;
    while (mask < limit) {
      Matrix r = build(mask);
      if (valid(r, mode)) return r;
      // Gosper's hack: next mask with the same popcount
      const std::uint64_t c = mask & -mask;
      const std::uint64_t hi = mask + c;
      mask = (((hi ^ mask) >> 2) / c) | hi;
    }
  }
  return build(0);
}

}  // namespace tccs::oracle
