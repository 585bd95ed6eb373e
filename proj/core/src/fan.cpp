#include "rootlie/fan.hpp"

#include "rootlie/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace rootlie {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw DefectError("64-bit overflow in lattice arithmetic");
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw DefectError("64-bit overflow in lattice arithmetic");
  }
  return r;
}

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

std::string format(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << (i ? "," : "") << v[i];
  }
  os << ')';
  return os.str();
}

std::int64_t gcd_of(const LatticeVector& v) {
  std::int64_t g = 0;
  for (auto x : v) {
    g = std::gcd(g, x);
  }
  return g;
}

}  // namespace

Fan::Fan(int rank, std::vector<LatticeVector> rays,
         std::optional<std::vector<std::vector<RayIndex>>> cones)
    : rank_(rank), rays_(std::move(rays)), cones_(std::move(cones)) {
  std::vector<std::string> problems;
  if (rank_ <= 0) {
    problems.push_back("rank must be positive, got " + std::to_string(rank_));
  }
  std::set<LatticeVector> seen;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& r = rays_[i];
    const std::string where = "ray " + std::to_string(i) + " " + format(r);
    if (static_cast<int>(r.size()) != rank_) {
      problems.push_back(where + ": expected length " + std::to_string(rank_));
      continue;
    }
    const auto g = gcd_of(r);
    if (g == 0) {
      problems.push_back(where + ": zero ray");
    } else if (g != 1) {
      problems.push_back(where + ": not primitive (gcd " + std::to_string(g) + ")");
    }
    if (!seen.insert(r).second) {
      problems.push_back(where + ": duplicate ray");
    }
  }
  if (cones_) {
    std::vector<bool> used(rays_.size(), false);
    for (std::size_t c = 0; c < cones_->size(); ++c) {
      for (auto idx : (*cones_)[c]) {
        if (idx >= rays_.size()) {
          problems.push_back("cone " + std::to_string(c) + ": ray index " +
                             std::to_string(idx) + " out of range");
        } else {
          used[idx] = true;
        }
      }
    }
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (!used[i]) {
        problems.push_back("ray " + std::to_string(i) + " is in no cone");
      }
    }
  }
  if (!problems.empty()) {
    throw ValidationError("invalid fan", std::move(problems));
  }
}

LatticeVector Fan::ray_sum() const {
  LatticeVector s(static_cast<std::size_t>(rank_), 0);
  for (const auto& r : rays_) {
    s = s + r;
  }
  return s;
}

bool Fan::rays_span() const {
  std::vector<RationalVector> rows;
  for (const auto& r : rays_) {
    rows.push_back(to_rational(r));
  }
  std::size_t rank = 0;
  const auto n = static_cast<std::size_t>(rank_);
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      const Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) {
        rows[i][c] -= f * rows[rank][c];
      }
    }
    ++rank;
  }
  return rank == n;
}

std::int64_t pairing(const LatticeVector& v, const LatticeVector& u) {
  require_same_length(v.size(), u.size());
  std::int64_t s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    s = checked_add(s, checked_mul(v[i], u[i]));
  }
  return s;
}

Rational pairing(const RationalVector& v, const LatticeVector& u) {
  require_same_length(v.size(), u.size());
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (u[i] != 0) {
      s += v[i] * static_cast<long>(u[i]);
    }
  }
  return s;
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (auto x : v) {
    r.emplace_back(static_cast<long>(x));
  }
  return r;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same_length(a.size(), b.size());
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = checked_add(a[i], b[i]);
  }
  return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  return a + (-1) * b;
}

LatticeVector operator*(std::int64_t k, const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = checked_mul(k, a[i]);
  }
  return r;
}

std::pair<LatticeVector, std::int64_t> primitive_normalize(const LatticeVector& v) {
  const auto g = gcd_of(v);
  if (g == 0) {
    throw ValidationError("cannot normalize the zero vector");
  }
  LatticeVector p(v.size());
  std::transform(v.begin(), v.end(), p.begin(), [g](auto x) { return x / g; });
  return {std::move(p), g};
}

std::optional<RayIndex> is_demazure_root(const Fan& fan, const LatticeVector& e) {
  require_same_length(static_cast<std::size_t>(fan.rank()), e.size());
  std::optional<RayIndex> associated;
  for (RayIndex i = 0; i < fan.ray_count(); ++i) {
    const auto p = pairing(fan.ray(i), e);
    if (p == -1) {
      if (associated) {
        return std::nullopt;  // two rays at -1
      }
      associated = i;
    } else if (p < 0) {
      return std::nullopt;
    }
  }
  return associated;
}

std::optional<ElementaryRoot> is_elementary_root(const Fan& fan, const LatticeVector& e) {
  require_same_length(static_cast<std::size_t>(fan.rank()), e.size());
  std::optional<RayIndex> minus;
  std::optional<RayIndex> plus;
  for (RayIndex i = 0; i < fan.ray_count(); ++i) {
    const auto p = pairing(fan.ray(i), e);
    if (p == 0) {
      continue;
    }
    if (p == -1 && !minus) {
      minus = i;
    } else if (p == 1 && !plus) {
      plus = i;
    } else {
      return std::nullopt;
    }
  }
  if (minus && plus) {
    return ElementaryRoot{*minus, *plus};
  }
  return std::nullopt;
}

Box Box::cube(int rank, std::int64_t bound) {
  return Box{LatticeVector(static_cast<std::size_t>(rank), -bound),
             LatticeVector(static_cast<std::size_t>(rank), bound)};
}

std::vector<RootEntry> enumerate_roots(const Fan& fan, const Box& box) {
  const auto n = static_cast<std::size_t>(fan.rank());
  require_same_length(n, box.lo.size());
  require_same_length(n, box.hi.size());
  std::vector<RootEntry> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (box.lo[i] > box.hi[i]) {
      return out;
    }
  }
  LatticeVector e = box.lo;
  while (true) {
    if (auto ray = is_demazure_root(fan, e)) {
      out.push_back({e, *ray});
    }
    // odometer, last coordinate fastest -> lexicographic order
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (e[k] < box.hi[k]) {
        ++e[k];
        break;
      }
      e[k] = box.lo[k];
      if (k == 0) {
        return out;
      }
    }
  }
}

}  // namespace rootlie
