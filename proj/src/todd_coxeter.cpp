#include "usm/todd_coxeter.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "usm/error.hpp"

namespace usm {
namespace {

constexpr std::uint32_t kUndef = std::numeric_limits<std::uint32_t>::max();

// Columns: 2i is generator i, 2i+1 its inverse.
inline std::size_t column(int token) {
  return token > 0 ? 2 * static_cast<std::size_t>(token - 1) : 2 * static_cast<std::size_t>(-token - 1) + 1;
}
inline std::size_t inverse_column(std::size_t col) { return col ^ 1U; }

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t limit)
      : cols_(2 * p.generator_count()), limit_(limit) {
    for (const Word& r : p.relators) {
      std::vector<std::size_t> w;
      w.reserve(r.size());
      for (int t : r) w.push_back(column(t));
      if (!w.empty()) relators_.push_back(std::move(w));
    }
    new_coset();
  }

  CosetTable run() {
    for (std::uint32_t alpha = 0; alpha < forward_.size(); ++alpha) {
      if (forward_.size() > 2 * live_ + 4096) alpha = compact_before(alpha);
      if (!is_live(alpha)) continue;
      for (const auto& r : relators_) {
        scan_and_fill(alpha, r);
        if (!is_live(alpha)) break;
      }
      if (!is_live(alpha)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        if (at(alpha, x) == kUndef) define(alpha, x);
      }
    }
    return finish();
  }

 private:
  std::uint32_t& at(std::uint32_t c, std::size_t x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  bool is_live(std::uint32_t c) const { return forward_[c] == c; }

  std::uint32_t new_coset() {
    if (live_ >= limit_) {
      throw ResourceError("coset enumeration exceeded the limit of " + std::to_string(limit_) + " cosets");
    }
    auto c = static_cast<std::uint32_t>(forward_.size());
    forward_.push_back(c);
    table_.resize(table_.size() + cols_, kUndef);
    ++live_;
    ++defined_;
    max_live_ = std::max(max_live_, live_);
    return c;
  }

  void define(std::uint32_t alpha, std::size_t x) {
    std::uint32_t beta = new_coset();
    at(alpha, x) = beta;
    at(beta, inverse_column(x)) = alpha;
  }

  void scan_and_fill(std::uint32_t alpha, const std::vector<std::size_t>& w) {
    std::uint32_t f = alpha;
    std::uint32_t b = alpha;
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    for (;;) {
      while (i < j && at(f, w[i]) != kUndef) f = at(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && at(b, inverse_column(w[j - 1])) != kUndef) b = at(b, inverse_column(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        at(f, w[i]) = b;
        at(b, inverse_column(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  std::uint32_t rep(std::uint32_t c) {
    std::uint32_t r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      std::uint32_t next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(std::uint32_t k, std::uint32_t l) {
    std::uint32_t phi = rep(k);
    std::uint32_t psi = rep(l);
    if (phi == psi) return;
    std::uint32_t mu = std::min(phi, psi);
    std::uint32_t nu = std::max(phi, psi);
    forward_[nu] = mu;
    --live_;
    queue_.push_back(nu);
  }

  void coincidence(std::uint32_t a, std::uint32_t b) {
    queue_.clear();
    merge(a, b);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      std::uint32_t gamma = queue_[qi];
      for (std::size_t x = 0; x < cols_; ++x) {
        std::uint32_t delta = at(gamma, x);
        if (delta == kUndef) continue;
        if (at(delta, inverse_column(x)) == gamma) at(delta, inverse_column(x)) = kUndef;
        std::uint32_t mu = rep(gamma);
        std::uint32_t nu = rep(delta);
        if (at(mu, x) != kUndef) {
          merge(nu, at(mu, x));
        } else if (at(nu, inverse_column(x)) != kUndef) {
          merge(mu, at(nu, inverse_column(x)));
        } else {
          at(mu, x) = nu;
          at(nu, inverse_column(x)) = mu;
        }
      }
    }
  }

  // Drops dead cosets, preserving the relative order of live ones, and
  // returns the new index of the first live coset at or after `alpha`.
  std::uint32_t compact_before(std::uint32_t alpha) {
    std::vector<std::uint32_t> map(forward_.size(), kUndef);
    std::uint32_t next = 0;
    std::uint32_t new_alpha = kUndef;
    for (std::uint32_t c = 0; c < forward_.size(); ++c) {
      if (c == alpha) new_alpha = next;
      if (is_live(c)) map[c] = next++;
    }
    if (new_alpha == kUndef) new_alpha = next;
    std::vector<std::uint32_t> table(static_cast<std::size_t>(next) * cols_, kUndef);
    for (std::uint32_t c = 0; c < forward_.size(); ++c) {
      if (!is_live(c)) continue;
      for (std::size_t x = 0; x < cols_; ++x) {
        std::uint32_t t = at(c, x);
        table[static_cast<std::size_t>(map[c]) * cols_ + x] = t == kUndef ? kUndef : map[rep(t)];
      }
    }
    table_ = std::move(table);
    forward_.resize(next);
    for (std::uint32_t c = 0; c < next; ++c) forward_[c] = c;
    return new_alpha;
  }

  CosetTable finish() {
    compact_before(0);
    const std::size_t n = forward_.size();
    const std::size_t k = cols_ / 2;
    CosetTable out;
    out.size = n;
    out.generator_count = k;
    out.max_live = max_live_;
    out.defined = defined_;
    out.graph.resize(n * k);
    for (std::uint32_t c = 0; c < n; ++c) {
      for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t t = at(c, 2 * i);
        if (t == kUndef) throw InvariantError("coset table incomplete after enumeration");
        out.graph[c * k + i] = t;
      }
    }
    return out;
  }

  std::size_t cols_;
  std::size_t limit_;
  std::vector<std::vector<std::size_t>> relators_;
  std::vector<std::uint32_t> table_;
  std::vector<std::uint32_t> forward_;
  std::vector<std::uint32_t> queue_;
  std::size_t live_ = 0;
  std::size_t max_live_ = 0;
  std::size_t defined_ = 0;
};

}  // namespace

CosetTable enumerate_cosets(const Presentation& p, std::size_t coset_limit) {
  p.validate();
  if (coset_limit == 0) throw ResourceError("coset limit must be positive");
  return Enumerator(p, coset_limit).run();
}

}  // namespace usm
