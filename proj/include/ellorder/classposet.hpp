#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ellorder/error.hpp"
#include "ellorder/partitions.hpp"
#include "ellorder/weyl.hpp"

namespace ellorder {

// Every elliptic class of one component, bucketed and sorted by length.
// Built once per context; all ⪯_W queries read from it.
class ClassCatalog {
 public:
  struct Bucket {
    std::vector<SignedPermutation> elements;
    std::vector<int> lengths;  // ascending, parallel to elements
  };

  explicit ClassCatalog(const GroupContext& ctx, long long cap = kDefaultGroupCap) : ctx_(ctx) {
    ctx.validate();
    params_ = elliptic_parameters(ctx);
    std::map<Partition, std::vector<std::pair<int, SignedPermutation>>> tmp;
    for (const auto& p : params_) tmp[p];
    for_each_element(
        ctx,
        [&](const SignedPermutation& w) {
          auto l = class_label(ctx, w);
          if (l && l->ctx == ctx) tmp[l->partition].emplace_back(length(ctx, w), w);
        },
        cap);
    for (auto& [p, v] : tmp) {
      std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      Bucket b;
      for (auto& [len, w] : v) {
        b.lengths.push_back(len);
        b.elements.push_back(w);
      }
      buckets_.emplace(p, std::move(b));
    }
  }

  const GroupContext& context() const { return ctx_; }
  const std::vector<Partition>& parameters() const { return params_; }

  const Bucket& bucket(const Partition& a) const {
    auto it = buckets_.find(a);
    if (it == buckets_.end())
      throw Error(ErrorKind::InvalidLabel, a.to_string() + " is not an elliptic class of " + ctx_.to_string());
    return it->second;
  }

  int min_length(const Partition& a) const { return bucket(a).lengths.front(); }

  std::vector<SignedPermutation> min_elements(const Partition& a) const {
    const Bucket& b = bucket(a);
    std::vector<SignedPermutation> out;
    for (std::size_t i = 0; i < b.elements.size() && b.lengths[i] == b.lengths.front(); ++i) out.push_back(b.elements[i]);
    return out;
  }

  EllipticClassLabel label(const Partition& a) const { return {ctx_, a}; }

 private:
  GroupContext ctx_;
  std::vector<Partition> params_;
  std::map<Partition, Bucket> buckets_;
};

namespace detail {
// Is there some element of `lower` (restricted to its first `limit` entries)
// below w in the Bruhat order?
inline bool some_below(const GroupContext& ctx, const ClassCatalog::Bucket& lower, const SignedPermutation& w, int lw,
                       std::size_t limit) {
  for (std::size_t i = 0; i < limit && lower.lengths[i] <= lw; ++i)
    if (bruhat_leq_generic(ctx, lower.elements[i], w)) return true;
  return false;
}

inline std::size_t min_count(const ClassCatalog::Bucket& b) {
  std::size_t k = 0;
  while (k < b.lengths.size() && b.lengths[k] == b.lengths.front()) ++k;
  return k;
}
}  // namespace detail

// a ⪯_W b: some element of C_a lies below the fixed representative of C_b.
inline bool class_leq_W(const ClassCatalog& cat, const Partition& a, const Partition& b) {
  const auto& ctx = cat.context();
  SignedPermutation w = representative(cat.label(b));
  const auto& lower = cat.bucket(a);
  return detail::some_below(ctx, lower, w, length(ctx, w), lower.elements.size());
}

inline void require_same_context(const EllipticClassLabel& a, const EllipticClassLabel& b) {
  if (!(a.ctx == b.ctx))
    throw Error(ErrorKind::ContextMismatch, "classes from different contexts: " + a.ctx.to_string() + " vs " + b.ctx.to_string());
}

inline bool class_leq_W(const EllipticClassLabel& a, const EllipticClassLabel& b, long long cap = kDefaultGroupCap) {
  require_same_context(a, b);
  ClassCatalog cat(a.ctx, cap);
  return class_leq_W(cat, a.partition, b.partition);
}

struct ConditionRecord {
  bool c1 = false;  // ∃ w ∈ C_min ∃ w′ ∈ C′_min, w′ ≤ w
  bool c2 = false;  // ∀ w ∈ C_min ∃ w′ ∈ C′_min, w′ ≤ w
  bool c3 = false;  // ∃ w ∈ C_min ∃ w′ ∈ C′, w′ ≤ w
  bool c4 = false;  // ∀ w ∈ C_min ∃ w′ ∈ C′, w′ ≤ w
  bool agree() const { return c1 == c2 && c2 == c3 && c3 == c4; }
  bool operator==(const ConditionRecord&) const = default;
};

// The four defining conditions for C_a ⪯_W C_b, each by brute force.
inline ConditionRecord class_leq_W_all_variants(const ClassCatalog& cat, const Partition& a, const Partition& b) {
  const auto& ctx = cat.context();
  const auto& lower = cat.bucket(a);
  const auto& upper = cat.bucket(b);
  const std::size_t lower_min = detail::min_count(lower);
  const std::size_t upper_min = detail::min_count(upper);
  ConditionRecord r;
  r.c2 = r.c4 = true;
  for (std::size_t i = 0; i < upper_min; ++i) {
    const auto& w = upper.elements[i];
    int lw = upper.lengths[i];
    bool in_min = detail::some_below(ctx, lower, w, lw, lower_min);
    bool in_all = in_min || detail::some_below(ctx, lower, w, lw, lower.elements.size());
    r.c1 = r.c1 || in_min;
    r.c2 = r.c2 && in_min;
    r.c3 = r.c3 || in_all;
    r.c4 = r.c4 && in_all;
  }
  return r;
}

inline ConditionRecord class_leq_W_all_variants(const EllipticClassLabel& a, const EllipticClassLabel& b,
                                                long long cap = kDefaultGroupCap) {
  require_same_context(a, b);
  ClassCatalog cat(a.ctx, cap);
  return class_leq_W_all_variants(cat, a.partition, b.partition);
}

// C_a ⪯_W C_b is expected exactly when b ≤ a in dominance.
inline bool predicted_leq_W(const EllipticClassLabel& a, const EllipticClassLabel& b) {
  require_same_context(a, b);
  return dominance_leq(b.partition, a.partition);
}

// M[i][j] = class_leq_W(params[i], params[j]), rows split across `jobs` threads.
inline std::vector<std::vector<bool>> weyl_order_matrix(const ClassCatalog& cat, unsigned jobs = 1) {
  const auto& ps = cat.parameters();
  const std::size_t m = ps.size();
  std::vector<std::vector<char>> raw(m, std::vector<char>(m, 0));
  auto work = [&](std::size_t start, std::size_t step) {
    for (std::size_t i = start; i < m; i += step)
      for (std::size_t j = 0; j < m; ++j) raw[i][j] = class_leq_W(cat, ps[i], ps[j]) ? 1 : 0;
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(m, 1))));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
  }
  std::vector<std::vector<bool>> out(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out[i][j] = raw[i][j] != 0;
  return out;
}

struct HasseDiagram {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, upper)

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["nodes"] = nodes;
    j["covers"] = nlohmann::json::array();
    for (auto [a, b] : covers) j["covers"].push_back({a, b});
    return j;
  }

  std::string to_dot(const std::string& name = "hasse") const {
    std::string s = "digraph \"" + name + "\" {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) s += "  n" + std::to_string(i) + " [label=\"" + nodes[i] + "\"];\n";
    for (auto [a, b] : covers) s += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    return s + "}\n";
  }
};

// Covering relation of the partial order given by leq(i, j) on node indices.
template <class Leq>
HasseDiagram hasse(std::vector<std::string> labels, Leq&& leq) {
  const std::size_t m = labels.size();
  std::vector<std::vector<char>> r(m, std::vector<char>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r[i][j] = leq(i, j) ? 1 : 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (!r[i][i]) throw Error(ErrorKind::PosetViolation, "not reflexive at " + labels[i]);
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && r[i][j] && r[j][i])
        throw Error(ErrorKind::PosetViolation, "antisymmetry fails for " + labels[i] + " and " + labels[j]);
      for (std::size_t k = 0; k < m; ++k)
        if (r[i][j] && r[j][k] && !r[i][k])
          throw Error(ErrorKind::PosetViolation,
                      "transitivity fails for " + labels[i] + " <= " + labels[j] + " <= " + labels[k]);
    }
  }
  HasseDiagram h;
  h.nodes = std::move(labels);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || !r[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < m && cover; ++k)
        if (k != i && k != j && r[i][k] && r[k][j]) cover = false;
      if (cover) h.covers.emplace_back(i, j);
    }
  return h;
}

// Same node set, every cover reversed.
inline bool is_opposite(const HasseDiagram& a, const HasseDiagram& b) {
  if (a.nodes.size() != b.nodes.size()) return false;
  std::vector<std::pair<std::size_t, std::size_t>> rev;
  for (auto [x, y] : b.covers) rev.emplace_back(y, x);
  auto ca = a.covers;
  std::sort(ca.begin(), ca.end());
  std::sort(rev.begin(), rev.end());
  return ca == rev;
}

}  // namespace ellorder
