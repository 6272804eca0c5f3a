#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "ellorder/error.hpp"
#include "ellorder/partitions.hpp"

namespace ellorder {

// Values of an ε-function, ordered ω < 0 < 1.
enum class Eps : int { Omega = -1, Zero = 0, One = 1 };

enum class EpsFamily { MinusOne, PlusOne };

// O = O(2n), SO = SO(2n), SOodd = SO/O(2n+1).
enum class UGroup { GL, GLdagger, SOodd, Sp, O, SO };

enum class Characteristic { Good, Two };

enum class Split { None, I, II };

inline std::string group_name(UGroup g) {
  switch (g) {
    case UGroup::GL: return "GL";
    case UGroup::GLdagger: return "GLdagger";
    case UGroup::SOodd: return "O_odd";
    case UGroup::Sp: return "Sp";
    case UGroup::O: return "O";
    case UGroup::SO: return "SO";
  }
  return "?";
}

// Size of the natural representation: n, 2n or 2n+1.
inline int natural_dimension(UGroup g, int n) {
  switch (g) {
    case UGroup::GL:
    case UGroup::GLdagger: return n;
    case UGroup::SOodd: return 2 * n + 1;
    case UGroup::Sp:
    case UGroup::O:
    case UGroup::SO: return 2 * n;
  }
  return 0;
}

struct EpsilonFunction {
  EpsFamily family = EpsFamily::MinusOne;
  bool symplectic = false;       // ε(0) = 1 for Sp, 0 for O (MinusOne only)
  std::map<int, Eps> free;       // only the indices with a genuine choice

  bool operator==(const EpsilonFunction&) const = default;
};

// The indices i > 0 where ε may be chosen in {0,1}.
inline std::vector<int> free_indices(const Partition& a, EpsFamily fam) {
  std::vector<int> out;
  std::set<int> seen(a.parts().begin(), a.parts().end());
  for (auto it = seen.rbegin(); it != seen.rend(); ++it) {
    int i = *it;
    int m = multiplicity(a, i);
    bool right_parity = (fam == EpsFamily::MinusOne) ? i % 2 == 0 : i % 2 == 1;
    if (right_parity && m > 0 && m % 2 == 0) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ε(i) on the totalization: forced values from the family rules, free values
// from the stored map.
inline Eps eps_value(const Partition& a, const EpsilonFunction& e, int i) {
  if (i == 0) {
    if (e.family == EpsFamily::MinusOne) return e.symplectic ? Eps::One : Eps::Zero;
    return Eps::Omega;
  }
  int m = multiplicity(a, i);
  bool right_parity = (e.family == EpsFamily::MinusOne) ? i % 2 == 0 : i % 2 == 1;
  if (!right_parity || m == 0) return Eps::Omega;
  if (m % 2 == 1) return Eps::One;
  auto it = e.free.find(i);
  if (it == e.free.end()) throw Error(ErrorKind::InvalidLabel, "ε(" + std::to_string(i) + ") not assigned");
  return it->second;
}

inline PartitionFamily family_for(EpsFamily fam, int total) {
  return PartitionFamily::with_kappa(total, fam == EpsFamily::MinusOne ? -1 : 1);
}

inline EpsilonFunction epsilon_max(const Partition& a, EpsFamily fam, bool symplectic = false) {
  if (!family_for(fam, a.total()).contains(a))
    throw Error(ErrorKind::InvalidPartition, a.to_string() + " is not valid for this ε-family");
  EpsilonFunction e{fam, symplectic, {}};
  for (int i : free_indices(a, fam)) e.free[i] = Eps::One;
  return e;
}

inline std::vector<EpsilonFunction> all_epsilons(const Partition& a, EpsFamily fam, bool symplectic = false) {
  std::vector<int> fi = free_indices(a, fam);
  std::vector<EpsilonFunction> out;
  for (unsigned mask = 0; mask < (1u << fi.size()); ++mask) {
    EpsilonFunction e{fam, symplectic, {}};
    for (std::size_t k = 0; k < fi.size(); ++k) e.free[fi[k]] = (mask >> k) & 1u ? Eps::One : Eps::Zero;
    out.push_back(e);
  }
  return out;
}

struct UnipotentLabel {
  UGroup group = UGroup::Sp;
  int rank = 0;
  Partition partition;
  std::optional<EpsilonFunction> epsilon;  // present for the characteristic-2 parametrization
  // O(2n): inside SO(2n). GL†(n): inside GL(n). Unset elsewhere.
  std::optional<bool> in_identity_component;
  Split split = Split::None;

  bool is_bad() const { return epsilon.has_value(); }
  bool operator==(const UnipotentLabel&) const = default;
};

namespace detail {
inline bool ends_with_extra_one(const Partition& a) { return !a.empty() && a.part(a.length()) == 1; }

inline Partition drop_last(const Partition& a) {
  std::vector<int> v(a.parts().begin(), a.parts().end());
  v.pop_back();
  return Partition(v);
}
}  // namespace detail

// Throws InvalidLabel with a reason when the label breaks a family rule.
inline void validate(const UnipotentLabel& u) {
  const int dim = natural_dimension(u.group, u.rank);
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::InvalidLabel, u.partition.to_string() + ": " + why); };
  if (u.partition.total() != dim) fail("partition of the wrong size");
  if (!u.is_bad()) {
    switch (u.group) {
      case UGroup::GL:
      case UGroup::GLdagger:
        break;
      case UGroup::Sp:
        if (!PartitionFamily::with_kappa(dim, -1).contains(u.partition)) fail("odd parts need even multiplicity");
        break;
      default:
        if (!PartitionFamily::with_kappa(dim, 1).contains(u.partition)) fail("even parts need even multiplicity");
    }
    return;
  }
  const EpsilonFunction& e = *u.epsilon;
  Partition base = u.partition;
  switch (u.group) {
    case UGroup::GL:
      fail("GL has no ε-parametrized classes");
      break;
    case UGroup::GLdagger:
      if (e.family != EpsFamily::PlusOne) fail("GL† uses the +1 family");
      break;
    case UGroup::SOodd:
      if (!detail::ends_with_extra_one(u.partition)) fail("odd orthogonal labels carry an extra part 1");
      base = detail::drop_last(u.partition);
      [[fallthrough]];
    default:
      if (e.family != EpsFamily::MinusOne) fail("orthogonal and symplectic groups use the -1 family");
      if (e.symplectic != (u.group == UGroup::Sp)) fail("ε(0) does not match the group");
  }
  if (!family_for(e.family, base.total()).contains(base)) fail("multiplicity rule violated");
  std::vector<int> fi = free_indices(base, e.family);
  if (e.free.size() != fi.size()) fail("ε assigns a forced index or misses a free one");
  for (int i : fi) {
    auto it = e.free.find(i);
    if (it == e.free.end() || it->second == Eps::Omega) fail("ε(" + std::to_string(i) + ") must be 0 or 1");
  }
}

inline bool is_valid(const UnipotentLabel& u) {
  try {
    validate(u);
    return true;
  } catch (const Error&) {
    return false;
  }
}

inline void require_same_group(const UnipotentLabel& a, const UnipotentLabel& b) {
  if (a.group != b.group || a.rank != b.rank)
    throw Error(ErrorKind::FamilyMismatch, "unipotent labels from different groups");
}

inline bool good_leq(const UnipotentLabel& a, const UnipotentLabel& b) {
  require_same_group(a, b);
  if (a.is_bad() || b.is_bad()) throw Error(ErrorKind::FamilyMismatch, "good_leq needs partition labels");
  return dominance_leq(a.partition, b.partition);
}

// (α,ε) ≤ (β,δ): dominance, the column-sum inequalities and the parity rule.
inline bool bad_leq_raw(const Partition& a, const EpsilonFunction& e, const Partition& b, const EpsilonFunction& d) {
  if (!dominance_leq(a, b)) return false;
  const Partition at = transpose(a), bt = transpose(b);
  const int kmax = static_cast<int>(std::max(at.length(), bt.length())) + 1;
  int sa = 0, sb = 0;
  for (int k = 1; k <= kmax; ++k) {
    sa += at.part(k);
    sb += bt.part(k);
    int ek = std::max(static_cast<int>(eps_value(a, e, k)), 0);
    int dk = std::max(static_cast<int>(eps_value(b, d, k)), 0);
    if (sb - dk > sa - ek) return false;
    if (sa == sb && (at.part(k + 1) - bt.part(k + 1)) % 2 != 0 && eps_value(b, d, k) == Eps::Zero) return false;
  }
  return true;
}

inline bool bad_leq(const UnipotentLabel& a, const UnipotentLabel& b) {
  require_same_group(a, b);
  if (!a.is_bad() || !b.is_bad()) throw Error(ErrorKind::FamilyMismatch, "bad_leq needs (α,ε) labels");
  if (a.epsilon->family != b.epsilon->family) throw Error(ErrorKind::FamilyMismatch, "ε-families differ");
  if (a.in_identity_component != b.in_identity_component)
    throw Error(ErrorKind::ComponentMismatch, "labels lie in different components");
  return bad_leq_raw(a.partition, *a.epsilon, b.partition, *b.epsilon);
}

inline bool unipotent_leq(const UnipotentLabel& a, const UnipotentLabel& b) {
  return a.is_bad() ? bad_leq(a, b) : good_leq(a, b);
}

enum class ClassicalType { B, C, D };

// δ* from the column recipe, for α with only even parts.
inline Partition theta2_columns(const Partition& a) {
  if (!all_parts_even(a)) throw Error(ErrorKind::OddPart, "column recipe needs even parts, got " + a.to_string());
  const Partition at = transpose(a);
  std::vector<int> d;
  const int len = static_cast<int>(at.length()) + 1;
  for (int i = 1; i <= len; ++i) {
    int c = at.part(i);
    if (i % 2 == 1 && c % 2 == 0 && multiplicity(a, i - 1) > 0)
      d.push_back(c + 1);
    else if (i % 2 == 0 && c % 2 == 0 && multiplicity(a, i) > 0)
      d.push_back(c - 1);
    else
      d.push_back(c);
  }
  try {
    return Partition(d);
  } catch (const Error&) {
    throw Error(ErrorKind::Precondition, "column recipe produced a non-partition for " + a.to_string());
  }
}

inline Partition theta2_column_recipe(const Partition& a) { return transpose(theta2_columns(a)); }

inline Partition theta2(const UnipotentLabel& u, ClassicalType type) {
  if (!u.is_bad()) throw Error(ErrorKind::Precondition, "θ₂ takes a characteristic-2 label");
  Partition base = u.partition;
  if (type == ClassicalType::B) {
    if (!detail::ends_with_extra_one(base)) throw Error(ErrorKind::Precondition, "type B input must end in an extra 1");
    base = detail::drop_last(base);
  }
  if (!all_parts_even(base)) throw Error(ErrorKind::Precondition, "θ₂ is implemented on even-part labels only");
  if (!(*u.epsilon == epsilon_max(base, EpsFamily::MinusOne, u.epsilon->symplectic)))
    throw Error(ErrorKind::Precondition, "θ₂ is implemented for ε = ε_max only");
  switch (type) {
    case ClassicalType::C:
      return base;
    case ClassicalType::D:
      return add_psi(base);
    case ClassicalType::B: {
      Partition g = add_psi(base);
      return g.total() == base.total() ? append_one(g) : g;
    }
  }
  return base;
}

namespace detail {
inline bool strongly_even(const Partition& a) {
  for (int p : a.parts())
    if (p % 2 != 0 || multiplicity(a, p) % 2 != 0) return false;
  return !a.empty();
}

inline bool all_free_zero(const EpsilonFunction& e) {
  return std::all_of(e.free.begin(), e.free.end(), [](const auto& kv) { return kv.second == Eps::Zero; });
}
}  // namespace detail

inline std::vector<UnipotentLabel> enumerate_unipotent(UGroup g, int n, Characteristic p,
                                                       int bound = kDefaultPartitionBound) {
  std::vector<UnipotentLabel> out;
  const int dim = natural_dimension(g, n);
  if (dim > bound) throw Error(ErrorKind::CapExceeded, "unipotent enumeration above the partition bound");
  auto good = [&](int kappa, std::optional<bool> comp) {
    for (const auto& a : family_members(kappa == 0 ? PartitionFamily::all(dim) : PartitionFamily::with_kappa(dim, kappa), bound)) {
      if (g == UGroup::SO && detail::strongly_even(a)) {
        out.push_back({g, n, a, std::nullopt, comp, Split::I});
        out.push_back({g, n, a, std::nullopt, comp, Split::II});
      } else {
        out.push_back({g, n, a, std::nullopt, comp, Split::None});
      }
    }
  };
  auto bad_minus_one = [&](bool symplectic) {
    const int base_dim = 2 * n;
    for (const auto& a : family_members(PartitionFamily::with_kappa(base_dim, -1), bound)) {
      bool in_so = a.length() % 2 == 0;
      if (g == UGroup::SO && !in_so) continue;
      for (const auto& e : all_epsilons(a, EpsFamily::MinusOne, symplectic)) {
        UnipotentLabel u{g, n, a, e, std::nullopt, Split::None};
        if (g == UGroup::SOodd) u.partition = append_one(a);
        if (g == UGroup::O) u.in_identity_component = in_so;
        if (g == UGroup::SO) {
          u.in_identity_component = true;
          if (detail::strongly_even(a) && detail::all_free_zero(e)) {
            u.split = Split::I;
            out.push_back(u);
            u.split = Split::II;
          }
        }
        out.push_back(u);
      }
    }
  };
  switch (g) {
    case UGroup::GL:
      good(0, std::nullopt);
      break;
    case UGroup::GLdagger:
      good(0, true);
      if (p == Characteristic::Two)
        for (const auto& a : family_members(PartitionFamily::with_kappa(n, 1), bound))
          for (const auto& e : all_epsilons(a, EpsFamily::PlusOne))
            out.push_back({g, n, a, e, false, Split::None});
      break;
    case UGroup::Sp:
      if (p == Characteristic::Good)
        good(-1, std::nullopt);
      else
        bad_minus_one(true);
      break;
    case UGroup::SOodd:
      if (p == Characteristic::Good)
        good(1, std::nullopt);
      else
        bad_minus_one(false);
      break;
    case UGroup::O:
      if (p == Characteristic::Good)
        good(1, true);
      else
        bad_minus_one(false);
      break;
    case UGroup::SO:
      if (p == Characteristic::Good)
        good(1, true);
      else
        bad_minus_one(false);
      break;
  }
  return out;
}

inline std::string format_label(const UnipotentLabel& u) {
  std::string suffix = u.split == Split::I ? "_I" : u.split == Split::II ? "_II" : "";
  if (!u.is_bad()) return u.partition.to_string() + suffix;
  const auto& fr = u.epsilon->free;
  std::string eps;
  if (fr.empty()) {
    eps = "*";
  } else {
    for (Eps v : {Eps::One, Eps::Zero}) {
      std::string group;
      for (auto it = fr.rbegin(); it != fr.rend(); ++it)
        if (it->second == v) group += "ε(" + std::to_string(it->first) + ")=";
      if (group.empty()) continue;
      if (!eps.empty()) eps += ',';
      eps += group + (v == Eps::One ? "1" : "0");
    }
  }
  return "(" + u.partition.to_string() + "," + eps + ")" + suffix;
}

inline nlohmann::json to_json(const UnipotentLabel& u) {
  nlohmann::json j;
  j["partition"] = u.partition.vec();
  if (u.is_bad()) {
    nlohmann::json e = nlohmann::json::object();
    for (auto [i, v] : u.epsilon->free) e[std::to_string(i)] = static_cast<int>(v);
    j["epsilon"] = e;
    j["family"] = u.epsilon->family == EpsFamily::MinusOne ? "minus_one" : "plus_one";
  }
  j["group"] = group_name(u.group);
  if (u.in_identity_component) {
    if (u.group == UGroup::GLdagger)
      j["component"] = *u.in_identity_component ? "GL" : "GLd";
    else
      j["component"] = *u.in_identity_component ? "SO" : "O";
  }
  if (u.split != Split::None) j["split"] = u.split == Split::I ? "I" : "II";
  return j;
}

}  // namespace ellorder
