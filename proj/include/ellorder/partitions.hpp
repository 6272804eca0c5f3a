#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ellorder/error.hpp"

namespace ellorder {

inline constexpr int kDefaultPartitionBound = 60;

class Partition {
 public:
  Partition() = default;

  // Trailing zeros are dropped; anything else that is not weakly decreasing
  // and positive is rejected.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw Error(ErrorKind::InvalidPartition, "not a partition: " + join(parts_));
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }

  // 1-based, zero past the end.
  int part(std::size_t i) const { return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0; }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

  std::string to_string() const { return "[" + join(parts_) + "]"; }

  // Accepts "[6,6,4,2]", "6,6,4,2", "6+6+4+2", "6 6 4 2" and "[]".
  static Partition parse(std::string_view text) {
    std::vector<int> out;
    int cur = -1;
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
        if (cur > 1000000) throw Error(ErrorKind::Parse, "part too large in '" + std::string(text) + "'");
      } else if (c == ',' || c == '+' || c == ' ' || c == '[' || c == ']') {
        if (cur >= 0) out.push_back(cur);
        cur = -1;
      } else {
        throw Error(ErrorKind::Parse, "unexpected character in partition '" + std::string(text) + "'");
      }
    }
    if (cur >= 0) out.push_back(cur);
    std::vector<int> sorted = out;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (sorted != out) throw Error(ErrorKind::Parse, "parts must be weakly decreasing: '" + std::string(text) + "'");
    try {
      return Partition(std::move(out));
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
  }

 private:
  static std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(v[i]);
    }
    return s;
  }

  std::vector<int> parts_;
};

inline bool dominance_leq(const Partition& a, const Partition& b) {
  if (a.total() != b.total())
    throw Error(ErrorKind::MismatchedTotal,
                "dominance: totals differ (" + a.to_string() + " vs " + b.to_string() + ")");
  int sa = 0, sb = 0;
  std::size_t len = std::max(a.length(), b.length());
  for (std::size_t k = 1; k <= len; ++k) {
    sa += a.part(k);
    sb += b.part(k);
    if (sa > sb) return false;
  }
  return true;
}

inline Partition transpose(const Partition& a) {
  std::vector<int> t(a.empty() ? 0 : a.part(1), 0);
  for (int p : a.parts())
    for (int j = 0; j < p; ++j) ++t[j];
  return Partition(std::move(t));
}

inline int multiplicity(const Partition& a, int k) {
  if (k <= 0) return 0;
  return static_cast<int>(std::count(a.parts().begin(), a.parts().end(), k));
}

enum class FamilyKind { All, Kappa, EvenLength, OddLength, OddParts };

struct PartitionFamily {
  FamilyKind kind = FamilyKind::All;
  int n = 0;
  int kappa = 0;  // only for Kappa, +1 or -1

  static PartitionFamily all(int n) { return {FamilyKind::All, n, 0}; }
  static PartitionFamily with_kappa(int n, int kappa) { return {FamilyKind::Kappa, n, kappa}; }
  static PartitionFamily even_length(int n) { return {FamilyKind::EvenLength, n, 0}; }
  static PartitionFamily odd_length(int n) { return {FamilyKind::OddLength, n, 0}; }
  static PartitionFamily odd_parts(int n) { return {FamilyKind::OddParts, n, 0}; }

  bool contains(const Partition& a) const {
    if (a.total() != n) return false;
    switch (kind) {
      case FamilyKind::All:
        return true;
      case FamilyKind::Kappa: {
        // m(i) even whenever (-1)^i = kappa
        for (int p : a.parts()) {
          int sign = (p % 2 == 0) ? 1 : -1;
          if (sign == kappa && multiplicity(a, p) % 2 != 0) return false;
        }
        return true;
      }
      case FamilyKind::EvenLength:
        return a.length() % 2 == 0;
      case FamilyKind::OddLength:
        return a.length() % 2 == 1;
      case FamilyKind::OddParts:
        return std::all_of(a.parts().begin(), a.parts().end(), [](int p) { return p % 2 == 1; });
    }
    return false;
  }
};

namespace detail {
template <class F>
void partitions_rec(int remaining, int max_part, std::vector<int>& cur, F& f) {
  if (remaining == 0) {
    f(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, f);
    cur.pop_back();
  }
}
}  // namespace detail

// Visits every partition of n in reverse-lexicographic order.
template <class F>
void for_each_partition(int n, F&& f) {
  if (n < 0) return;
  std::vector<int> cur;
  auto g = [&](const std::vector<int>& v) { f(Partition(v)); };
  detail::partitions_rec(n, n, cur, g);
}

inline std::vector<Partition> family_members(const PartitionFamily& fam, int bound = kDefaultPartitionBound) {
  if (fam.n > bound)
    throw Error(ErrorKind::BoundExceeded,
                "partition family size " + std::to_string(fam.n) + " exceeds bound " + std::to_string(bound));
  std::vector<Partition> out;
  for_each_partition(fam.n, [&](const Partition& p) {
    if (fam.contains(p)) out.push_back(p);
  });
  return out;
}

inline std::vector<Partition> partitions_of(int n, int bound = kDefaultPartitionBound) {
  return family_members(PartitionFamily::all(n), bound);
}

struct PsiVector {
  std::vector<int> values;  // values[0] is psi(1)

  int at(std::size_t i) const { return values.at(i - 1); }
  int prefix_sum(std::size_t k) const {
    return std::accumulate(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(k), 0);
  }
  bool operator==(const PsiVector&) const = default;
};

inline PsiVector psi(const Partition& a) {
  if (a.empty()) throw Error(ErrorKind::EmptyPartition, "psi of the empty partition");
  PsiVector out;
  out.values.assign(a.length(), 0);
  out.values[0] = 1;
  for (std::size_t i = 2; i <= a.length(); ++i) {
    if (i % 2 == 1 && a.part(i - 1) > a.part(i)) out.values[i - 1] = 1;
    if (i % 2 == 0 && a.part(i) > a.part(i + 1)) out.values[i - 1] = -1;
  }
  return out;
}

inline bool all_parts_even(const Partition& a) {
  return std::all_of(a.parts().begin(), a.parts().end(), [](int p) { return p % 2 == 0; });
}

inline Partition add_psi(const Partition& a) {
  if (!all_parts_even(a)) throw Error(ErrorKind::OddPart, "add_psi needs even parts, got " + a.to_string());
  if (a.empty()) return a;
  PsiVector v = psi(a);
  std::vector<int> out(a.parts().begin(), a.parts().end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += v.values[i];
  return Partition(std::move(out));
}

inline Partition scale(const Partition& a, int c) {
  std::vector<int> out(a.parts().begin(), a.parts().end());
  for (int& p : out) p *= c;
  return Partition(std::move(out));
}

inline Partition append_one(const Partition& a) {
  std::vector<int> out(a.parts().begin(), a.parts().end());
  out.push_back(1);
  return Partition(std::move(out));
}

}  // namespace ellorder
