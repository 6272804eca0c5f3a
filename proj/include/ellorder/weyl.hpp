#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellorder/error.hpp"
#include "ellorder/partitions.hpp"

namespace ellorder {

inline constexpr int kMaxRank = 16;
inline constexpr long long kDefaultGroupCap = 1000000;

// A signed permutation of {±1,…,±n}, stored as the window w(1),…,w(n).
class SignedPermutation {
 public:
  SignedPermutation() = default;

  static SignedPermutation identity(int n) {
    check_rank(n);
    SignedPermutation w;
    w.n_ = static_cast<std::int8_t>(n);
    for (int i = 0; i < n; ++i) w.img_[i] = static_cast<std::int8_t>(i + 1);
    return w;
  }

  static SignedPermutation from_images(const std::vector<int>& images) {
    int n = static_cast<int>(images.size());
    check_rank(n);
    std::vector<bool> seen(n + 1, false);
    SignedPermutation w;
    w.n_ = static_cast<std::int8_t>(n);
    for (int i = 0; i < n; ++i) {
      int a = std::abs(images[i]);
      if (a < 1 || a > n || seen[a])
        throw Error(ErrorKind::NotInGroup, "window is not a signed permutation");
      seen[a] = true;
      w.img_[i] = static_cast<std::int8_t>(images[i]);
    }
    return w;
  }

  int rank() const { return n_; }

  // w(i) for i in ±1..±n.
  int operator()(int i) const { return i > 0 ? img_[i - 1] : -img_[-i - 1]; }

  std::vector<int> images() const { return std::vector<int>(img_.begin(), img_.begin() + n_); }

  int negatives() const {
    int c = 0;
    for (int i = 0; i < n_; ++i) c += img_[i] < 0;
    return c;
  }

  bool operator==(const SignedPermutation& o) const {
    return n_ == o.n_ && std::equal(img_.begin(), img_.begin() + n_, o.img_.begin());
  }
  bool operator<(const SignedPermutation& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return std::lexicographical_compare(img_.begin(), img_.begin() + n_, o.img_.begin(), o.img_.begin() + n_);
  }

  std::string window() const {
    std::string s = "[";
    for (int i = 0; i < n_; ++i) {
      if (i) s += ',';
      s += std::to_string(img_[i]);
    }
    return s + "]";
  }

  // Right multiplication by a permutation of positions, in place.
  void swap_positions(int i, int j) { std::swap(img_[i - 1], img_[j - 1]); }
  void negate_position(int i) { img_[i - 1] = static_cast<std::int8_t>(-img_[i - 1]); }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(n_);
    for (int i = 0; i < n_; ++i) h = h * 37 + static_cast<std::size_t>(img_[i] + 64);
    return h;
  }

 private:
  static void check_rank(int n) {
    if (n < 0 || n > kMaxRank) throw Error(ErrorKind::IndexOutOfRange, "rank out of range: " + std::to_string(n));
  }

  std::int8_t n_ = 0;
  std::array<std::int8_t, kMaxRank> img_{};
};

struct SignedPermutationHash {
  std::size_t operator()(const SignedPermutation& w) const { return w.hash(); }
};

inline SignedPermutation multiply(const SignedPermutation& x, const SignedPermutation& y) {
  if (x.rank() != y.rank()) throw Error(ErrorKind::RankMismatch, "multiply: rank mismatch");
  std::vector<int> out(y.rank());
  for (int i = 1; i <= y.rank(); ++i) out[i - 1] = x(y(i));
  return SignedPermutation::from_images(out);
}

inline SignedPermutation operator*(const SignedPermutation& x, const SignedPermutation& y) { return multiply(x, y); }

inline SignedPermutation inverse(const SignedPermutation& x) {
  std::vector<int> out(x.rank());
  for (int i = 1; i <= x.rank(); ++i) {
    int v = x(i);
    if (v > 0)
      out[v - 1] = i;
    else
      out[-v - 1] = -i;
  }
  return SignedPermutation::from_images(out);
}

enum class Family { A, BC, D, TwistedA };
enum class Component { Identity, Twisted };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::BC: return "BC";
    case Family::D: return "D";
    case Family::TwistedA: return "2A";
  }
  return "?";
}

inline std::string component_name(Component c) { return c == Component::Identity ? "id" : "twisted"; }

struct GroupContext {
  Family family = Family::BC;
  int rank = 0;  // n: the group acts on {±1,…,±n} (or {1,…,n} for A and 2A)
  Component component = Component::Identity;

  static GroupContext A(int n) { return {Family::A, n, Component::Identity}; }
  static GroupContext BC(int n) { return {Family::BC, n, Component::Identity}; }
  static GroupContext D(int n, Component c = Component::Identity) { return {Family::D, n, c}; }
  static GroupContext TwistedA(int n) { return {Family::TwistedA, n, Component::Twisted}; }

  bool signed_model() const { return family == Family::BC || family == Family::D; }
  int num_simple() const { return signed_model() ? rank : rank - 1; }

  bool operator==(const GroupContext&) const = default;

  std::string to_string() const {
    std::string s = family_name(family) + "(" + std::to_string(rank) + ")";
    if (family == Family::D) s += "[" + component_name(component) + "]";
    return s;
  }

  void validate() const {
    if (rank < 1 || rank > kMaxRank) throw Error(ErrorKind::IndexOutOfRange, "rank out of range: " + std::to_string(rank));
    if (family == Family::D && rank < 2) throw Error(ErrorKind::IndexOutOfRange, "type D needs rank >= 2");
    if ((family == Family::A || family == Family::BC) && component != Component::Identity)
      throw Error(ErrorKind::ComponentMismatch, family_name(family) + " has no twisted component");
    if (family == Family::TwistedA && component != Component::Twisted)
      throw Error(ErrorKind::ComponentMismatch, "2A elements live in the twisted component");
  }
};

inline bool contains(const GroupContext& ctx, const SignedPermutation& w) {
  if (w.rank() != ctx.rank) return false;
  switch (ctx.family) {
    case Family::A:
    case Family::TwistedA:
      return w.negatives() == 0;
    case Family::BC:
      return true;
    case Family::D:
      return (w.negatives() % 2 == 0) == (ctx.component == Component::Identity);
  }
  return false;
}

inline void require_member(const GroupContext& ctx, const SignedPermutation& w) {
  if (!contains(ctx, w)) throw Error(ErrorKind::NotInGroup, w.window() + " is not an element of " + ctx.to_string());
}

// Right multiplication by the simple reflection s_i, in place.
inline void apply_simple_right(const GroupContext& ctx, SignedPermutation& w, int i) {
  if (i < 1 || i > ctx.num_simple())
    throw Error(ErrorKind::IndexOutOfRange, "simple reflection index " + std::to_string(i) + " out of range for " + ctx.to_string());
  switch (ctx.family) {
    case Family::A:
    case Family::TwistedA:
      w.swap_positions(i, i + 1);
      break;
    case Family::BC:
      if (i == 1)
        w.negate_position(1);
      else
        w.swap_positions(i - 1, i);
      break;
    case Family::D:
      if (i == 1) {
        w.swap_positions(1, 2);
      } else if (i == 2) {
        w.swap_positions(1, 2);
        w.negate_position(1);
        w.negate_position(2);
      } else {
        w.swap_positions(i - 1, i);
      }
      break;
  }
}

inline SignedPermutation simple_reflection(const GroupContext& ctx, int i) {
  SignedPermutation w = SignedPermutation::identity(ctx.rank);
  apply_simple_right(ctx, w, i);
  return w;
}

// s_a s_{a+1} ⋯ s_b, identity when a > b.
inline SignedPermutation s_interval(const GroupContext& ctx, int a, int b) {
  SignedPermutation w = SignedPermutation::identity(ctx.rank);
  for (int i = a; i <= b; ++i) apply_simple_right(ctx, w, i);
  return w;
}

// ℓ(w s_i) < ℓ(w), i.e. w sends the simple root α_i negative.
inline bool is_right_descent(const GroupContext& ctx, const SignedPermutation& w, int i) {
  switch (ctx.family) {
    case Family::A:
    case Family::TwistedA:
      return w(i + 1) < w(i);
    case Family::BC:
      return i == 1 ? w(1) < 0 : w(i) < w(i - 1);
    case Family::D:
      if (i == 1) return w(2) < w(1);
      if (i == 2) return w(1) + w(2) < 0;
      return w(i) < w(i - 1);
  }
  return false;
}

// Number of positive roots sent negative. For the twisted components this is
// the length of the W⁰ part (the coset base point has length 0).
inline int length(const GroupContext& ctx, const SignedPermutation& w) {
  require_member(ctx, w);
  const int n = w.rank();
  int inv = 0, nsp = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) > w(j)) ++inv;
      if (w(i) + w(j) < 0) ++nsp;
    }
  switch (ctx.family) {
    case Family::A:
    case Family::TwistedA:
      return inv;
    case Family::BC:
      return inv + nsp + w.negatives();
    case Family::D:
      return inv + nsp;
  }
  return 0;
}

// The length-0 element of the twisted coset, as it acts on {±1,…,±n}:
// the sign change at 1 for D, the reversal w₀ for 2A.
inline SignedPermutation delta(const GroupContext& ctx) {
  std::vector<int> img(ctx.rank);
  std::iota(img.begin(), img.end(), 1);
  if (ctx.family == Family::D) {
    img[0] = -1;
  } else if (ctx.family == Family::TwistedA || ctx.family == Family::A) {
    std::reverse(img.begin(), img.end());
  } else {
    throw Error(ErrorKind::UnsupportedFamily, "no diagram automorphism for " + ctx.to_string());
  }
  return SignedPermutation::from_images(img);
}

inline SignedPermutation longest_A(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = n - i;
  return SignedPermutation::from_images(img);
}

// |{k ≤ i : w(k) ≥ j}| with k over {−n..−1, 1..n} (signed families) or {1..n}.
inline int count_entry(const GroupContext& ctx, const SignedPermutation& w, int i, int j) {
  const int n = w.rank();
  int c = 0;
  if (ctx.signed_model())
    for (int k = -n; k <= -1; ++k)
      if (k <= i && w(k) >= j) ++c;
  for (int k = 1; k <= n && k <= i; ++k)
    if (w(k) >= j) ++c;
  return c;
}

class CountMatrix {
 public:
  CountMatrix(const GroupContext& ctx, const SignedPermutation& w) : n_(w.rank()), signed_(ctx.signed_model()) {
    for (int i : indices())
      for (int j : indices()) values_.push_back(count_entry(ctx, w, i, j));
  }

  std::vector<int> indices() const {
    std::vector<int> ix;
    if (signed_)
      for (int k = -n_; k <= -1; ++k) ix.push_back(k);
    for (int k = 1; k <= n_; ++k) ix.push_back(k);
    return ix;
  }

  int at(int i, int j) const { return values_.at(pos(i) * dim() + pos(j)); }
  int dim() const { return signed_ ? 2 * n_ : n_; }

 private:
  int pos(int i) const {
    if (i == 0 || std::abs(i) > n_ || (!signed_ && i < 0)) throw Error(ErrorKind::IndexOutOfRange, "count matrix index");
    if (!signed_) return i - 1;
    return i < 0 ? i + n_ : i + n_ - 1;
  }

  int n_;
  bool signed_;
  std::vector<int> values_;
};

inline CountMatrix count_matrix(const GroupContext& ctx, const SignedPermutation& w) { return CountMatrix(ctx, w); }

// First (i,j) with x[i,j] > y[i,j], if any.
inline std::optional<std::pair<int, int>> count_violation(const GroupContext& ctx, const SignedPermutation& x,
                                                          const SignedPermutation& y) {
  if (x.rank() != y.rank()) throw Error(ErrorKind::RankMismatch, "count comparison: rank mismatch");
  CountMatrix cx(ctx, x), cy(ctx, y);
  for (int i : cx.indices())
    for (int j : cx.indices())
      if (cx.at(i, j) > cy.at(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

inline bool bruhat_leq_counts(const GroupContext& ctx, const SignedPermutation& x, const SignedPermutation& y) {
  if (ctx.family == Family::D)
    throw Error(ErrorKind::UnsupportedFamily, "count criterion is only an implication in type D; use bruhat_leq_generic");
  require_member(ctx, x);
  require_member(ctx, y);
  return !count_violation(ctx, x, y).has_value();
}

inline bool bruhat_leq_generic(const GroupContext& ctx, SignedPermutation x, SignedPermutation y) {
  GroupContext cx = ctx, cy = ctx;
  if (ctx.family == Family::D) {
    cx.component = x.negatives() % 2 ? Component::Twisted : Component::Identity;
    cy.component = y.negatives() % 2 ? Component::Twisted : Component::Identity;
    if (cx.component != cy.component) throw Error(ErrorKind::ComponentMismatch, "Bruhat comparison across cosets");
  }
  int lx = length(cx, x), ly = length(cy, y);
  const int ns = ctx.num_simple();
  while (true) {
    if (lx > ly) return false;
    if (ly == 0) return x == y;
    int s = 1;
    while (s <= ns && !is_right_descent(ctx, y, s)) ++s;
    apply_simple_right(ctx, y, s);
    --ly;
    if (is_right_descent(ctx, x, s)) {
      apply_simple_right(ctx, x, s);
      --lx;
    }
  }
}

struct SignedCycleType {
  Partition negative;
  Partition positive;
  bool operator==(const SignedCycleType&) const = default;
};

inline SignedCycleType signed_cycle_type(const SignedPermutation& w) {
  const int n = w.rank();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> neg, pos;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    bool hits_minus = false;
    int x = i;
    do {
      seen[std::abs(x)] = true;
      if (x == -i) hits_minus = true;
      x = w(x);
      ++len;
    } while (x != i);
    if (hits_minus)
      neg.push_back(len / 2);
    else
      pos.push_back(len);
  }
  std::sort(neg.begin(), neg.end(), std::greater<>());
  std::sort(pos.begin(), pos.end(), std::greater<>());
  return {Partition(neg), Partition(pos)};
}

// Cycle type of an unsigned permutation (entries must be positive).
inline Partition cycle_type(const SignedPermutation& w) {
  const int n = w.rank();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int x = i; !seen[x]; x = w(x)) {
      if (x < 0) throw Error(ErrorKind::NotInGroup, "cycle_type of a signed element");
      seen[x] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return Partition(out);
}

struct EllipticClassLabel {
  GroupContext ctx;
  Partition partition;

  Component component() const { return ctx.component; }
  bool operator==(const EllipticClassLabel&) const = default;
  std::string to_string() const { return partition.to_string() + (ctx.component == Component::Twisted ? "*d" : ""); }
};

// Whether α parametrizes an elliptic class of ctx (in ctx's component).
inline bool is_elliptic_parameter(const GroupContext& ctx, const Partition& a) {
  if (a.total() != ctx.rank) return false;
  switch (ctx.family) {
    case Family::A:
      return a == Partition{ctx.rank};
    case Family::BC:
      return true;
    case Family::D:
      return (a.length() % 2 == 0) == (ctx.component == Component::Identity);
    case Family::TwistedA:
      return PartitionFamily::odd_parts(ctx.rank).contains(a);
  }
  return false;
}

inline std::vector<Partition> elliptic_parameters(const GroupContext& ctx) {
  std::vector<Partition> out;
  for_each_partition(ctx.rank, [&](const Partition& p) {
    if (is_elliptic_parameter(ctx, p)) out.push_back(p);
  });
  return out;
}

inline std::optional<EllipticClassLabel> class_label(const GroupContext& ctx, const SignedPermutation& w) {
  if (w.rank() != ctx.rank) return std::nullopt;
  switch (ctx.family) {
    case Family::A: {
      if (w.negatives()) return std::nullopt;
      Partition c = cycle_type(w);
      if (c.length() != 1) return std::nullopt;
      return EllipticClassLabel{ctx, c};
    }
    case Family::BC:
    case Family::D: {
      SignedCycleType t = signed_cycle_type(w);
      if (!t.positive.empty()) return std::nullopt;
      GroupContext c = ctx;
      if (ctx.family == Family::D)
        c.component = (t.negative.length() % 2 == 0) ? Component::Identity : Component::Twisted;
      return EllipticClassLabel{c, t.negative};
    }
    case Family::TwistedA: {
      if (w.negatives()) return std::nullopt;
      Partition c = cycle_type(w * longest_A(w.rank()));
      if (!PartitionFamily::odd_parts(w.rank()).contains(c)) return std::nullopt;
      return EllipticClassLabel{ctx, c};
    }
  }
  return std::nullopt;
}

namespace detail {
inline void require_total(const Partition& a, int n) {
  if (a.total() != n)
    throw Error(ErrorKind::SumMismatch, a.to_string() + " is not a partition of " + std::to_string(n));
}
}  // namespace detail

// w_α = ∏_k s_{[2, n+1−A_k]}⁻¹ s_{[1, n−A_{k−1}]}, A_k the prefix sums of α.
inline SignedPermutation rep_BC(int n, const Partition& a) {
  detail::require_total(a, n);
  GroupContext ctx = GroupContext::BC(n);
  SignedPermutation w = SignedPermutation::identity(n);
  int prev = 0;
  for (int part : a.parts()) {
    int cur = prev + part;
    w = w * inverse(s_interval(ctx, 2, n + 1 - cur)) * s_interval(ctx, 1, n - prev);
    prev = cur;
  }
  return w;
}

// Factors w_{a,b} = s_{[3,n+1−b]}⁻¹ s_{[1,n−a]} for b < n and s_{[2,n−a]} for
// b = n, followed by δ when α has an odd number of parts.
inline SignedPermutation rep_D(int n, const Partition& a) {
  detail::require_total(a, n);
  if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "type D needs rank >= 2");
  GroupContext ctx = GroupContext::D(n);
  SignedPermutation w = SignedPermutation::identity(n);
  int prev = 0;
  for (int part : a.parts()) {
    int cur = prev + part;
    if (cur <= n - 1)
      w = w * inverse(s_interval(ctx, 3, n + 1 - cur)) * s_interval(ctx, 1, n - prev);
    else
      w = w * s_interval(ctx, 2, n - prev);
    prev = cur;
  }
  if (a.length() % 2) w = w * delta(GroupContext::D(n, Component::Twisted));
  return w;
}

// The S_n part u of the twisted element u·ε:
// u = ∏_k s_{[H_{k−1}+1, n+k−1−H_k]}⁻¹ with H_k = Σ_{i≤k} (α_i+1)/2.
inline SignedPermutation rep_2A(int n, const Partition& a) {
  detail::require_total(a, n);
  if (!PartitionFamily::odd_parts(n).contains(a))
    throw Error(ErrorKind::EvenPart, "twisted A classes need odd parts, got " + a.to_string());
  GroupContext ctx = GroupContext::TwistedA(n);
  SignedPermutation w = SignedPermutation::identity(n);
  int h = 0;
  int k = 0;
  for (int part : a.parts()) {
    ++k;
    int lo = h + 1;
    h += (part + 1) / 2;
    w = w * inverse(s_interval(ctx, lo, n + k - 1 - h));
  }
  return w;
}

// The Coxeter element s₁⋯s_{n−1} of S_n.
inline SignedPermutation rep_A(int n) { return s_interval(GroupContext::A(n), 1, n - 1); }

inline SignedPermutation representative(const EllipticClassLabel& c) {
  if (!is_elliptic_parameter(c.ctx, c.partition))
    throw Error(ErrorKind::InvalidLabel, c.partition.to_string() + " does not label an elliptic class of " + c.ctx.to_string());
  switch (c.ctx.family) {
    case Family::A: return rep_A(c.ctx.rank);
    case Family::BC: return rep_BC(c.ctx.rank, c.partition);
    case Family::D: return rep_D(c.ctx.rank, c.partition);
    case Family::TwistedA: return rep_2A(c.ctx.rank, c.partition);
  }
  throw Error(ErrorKind::UnsupportedFamily, "representative");
}

inline long long group_order(const GroupContext& ctx) {
  long long f = 1;
  for (int i = 2; i <= ctx.rank; ++i) f *= i;
  switch (ctx.family) {
    case Family::A:
    case Family::TwistedA:
      return f;
    case Family::BC:
      return f << ctx.rank;
    case Family::D:
      return f << (ctx.rank - 1);
  }
  return 0;
}

// Visits every element of ctx's component once, in a fixed order:
// permutations lexicographically, then sign masks in increasing order.
template <class F>
void for_each_element(const GroupContext& ctx, F&& f, long long cap = kDefaultGroupCap) {
  ctx.validate();
  if (group_order(ctx) > cap)
    throw Error(ErrorKind::CapExceeded, ctx.to_string() + " has " + std::to_string(group_order(ctx)) +
                                            " elements, above the cap of " + std::to_string(cap));
  const int n = ctx.rank;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<int> img(n);
  do {
    if (!ctx.signed_model()) {
      f(SignedPermutation::from_images(perm));
      continue;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (ctx.family == Family::D) {
        bool odd = std::popcount(mask) % 2;
        if (odd != (ctx.component == Component::Twisted)) continue;
      }
      for (int i = 0; i < n; ++i) img[i] = (mask >> i) & 1u ? -perm[i] : perm[i];
      f(SignedPermutation::from_images(img));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

inline std::vector<SignedPermutation> enumerate_group(const GroupContext& ctx, long long cap = kDefaultGroupCap) {
  std::vector<SignedPermutation> out;
  for_each_element(ctx, [&](const SignedPermutation& w) { out.push_back(w); }, cap);
  return out;
}

inline std::vector<SignedPermutation> enumerate_class(const EllipticClassLabel& c, long long cap = kDefaultGroupCap) {
  std::vector<SignedPermutation> out;
  for_each_element(
      c.ctx,
      [&](const SignedPermutation& w) {
        auto l = class_label(c.ctx, w);
        if (l && *l == c) out.push_back(w);
      },
      cap);
  return out;
}

inline std::vector<SignedPermutation> min_length_elements(const EllipticClassLabel& c, long long cap = kDefaultGroupCap) {
  std::vector<SignedPermutation> all = enumerate_class(c, cap);
  if (all.empty()) return all;
  std::vector<int> lens;
  for (const auto& w : all) lens.push_back(length(c.ctx, w));
  int m = *std::min_element(lens.begin(), lens.end());
  std::vector<SignedPermutation> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (lens[i] == m) out.push_back(all[i]);
  return out;
}

// Window notation; twisted 2A elements carry the suffix "*d".
inline std::string format_element(const GroupContext& ctx, const SignedPermutation& w) {
  return w.window() + (ctx.family == Family::TwistedA ? "*d" : "");
}

// Parses "[-2,1,3]". A "*d" suffix means "times the length-0 element δ on the
// right": for D the window is the W⁰ part, for 2A it only marks the coset.
inline SignedPermutation parse_element(const GroupContext& ctx, std::string_view text) {
  std::string s(text);
  bool twisted = false;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "*d") {
    twisted = true;
    s.resize(s.size() - 2);
  }
  std::vector<int> img;
  std::string num;
  auto flush = [&] {
    if (num.empty()) return;
    if (num == "-" || num == "+") throw Error(ErrorKind::Parse, "bad element '" + std::string(text) + "'");
    try {
      img.push_back(std::stoi(num));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "bad element '" + std::string(text) + "'");
    }
    num.clear();
  };
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c)) || ((c == '-' || c == '+') && num.empty())) {
      num += c;
    } else if (c == ',' || c == ' ' || c == '[' || c == ']') {
      flush();
    } else {
      throw Error(ErrorKind::Parse, "unexpected character in element '" + std::string(text) + "'");
    }
  }
  flush();
  if (static_cast<int>(img.size()) != ctx.rank)
    throw Error(ErrorKind::Parse, "element '" + std::string(text) + "' does not have " + std::to_string(ctx.rank) + " entries");
  SignedPermutation w;
  try {
    w = SignedPermutation::from_images(img);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  if (twisted) {
    if (ctx.family == Family::D)
      w = w * delta(GroupContext::D(ctx.rank, Component::Twisted));
    else if (ctx.family != Family::TwistedA)
      throw Error(ErrorKind::Parse, "'*d' is meaningless in " + ctx.to_string());
  }
  return w;
}

}  // namespace ellorder
