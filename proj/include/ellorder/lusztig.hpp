#pragma once

#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "ellorder/classposet.hpp"
#include "ellorder/error.hpp"
#include "ellorder/partitions.hpp"
#include "ellorder/unipotent.hpp"
#include "ellorder/weyl.hpp"

namespace ellorder {

struct GroupSpec {
  UGroup group = UGroup::Sp;
  Characteristic ch = Characteristic::Good;
};

inline std::string char_name(Characteristic c) { return c == Characteristic::Good ? "good" : "2"; }

// The Weyl-group context of the given component of the group.
inline GroupContext weyl_context(UGroup g, int n, Component c = Component::Identity) {
  GroupContext ctx;
  switch (g) {
    case UGroup::GL:
      ctx = GroupContext::A(n);
      break;
    case UGroup::GLdagger:
      ctx = c == Component::Identity ? GroupContext::A(n) : GroupContext::TwistedA(n);
      break;
    case UGroup::SOodd:
    case UGroup::Sp:
      ctx = GroupContext::BC(n);
      break;
    case UGroup::O:
    case UGroup::SO:
      ctx = GroupContext::D(n, c);
      break;
  }
  if ((g == UGroup::GL || g == UGroup::SOodd || g == UGroup::Sp || g == UGroup::SO) && c == Component::Twisted)
    throw Error(ErrorKind::ComponentMismatch, group_name(g) + " is connected; no twisted component");
  return ctx;
}

// Whether the given component carries unipotent elements in this characteristic.
inline bool has_unipotents(const GroupSpec& spec, Component c) {
  return c == Component::Identity || spec.ch == Characteristic::Two;
}

inline UnipotentLabel phi(const GroupSpec& spec, const EllipticClassLabel& c) {
  const int n = c.ctx.rank;
  const Component comp = c.ctx.component;
  if (!(weyl_context(spec.group, n, comp) == c.ctx))
    throw Error(ErrorKind::FamilyMismatch, c.ctx.to_string() + " is not the Weyl group of " + group_name(spec.group));
  if (!is_elliptic_parameter(c.ctx, c.partition))
    throw Error(ErrorKind::InvalidLabel, c.partition.to_string() + " is not an elliptic class of " + c.ctx.to_string());
  if (!has_unipotents(spec, comp))
    throw Error(ErrorKind::Precondition, "the twisted component has no unipotent elements in good characteristic");

  const Partition& a = c.partition;
  const bool two = spec.ch == Characteristic::Two;
  UnipotentLabel u{spec.group, n, {}, std::nullopt, std::nullopt, Split::None};
  switch (spec.group) {
    case UGroup::GL:
      u.partition = Partition{n};
      break;
    case UGroup::GLdagger:
      if (comp == Component::Identity) {
        u.partition = Partition{n};
        u.in_identity_component = true;
      } else {
        u.partition = a;
        u.epsilon = epsilon_max(a, EpsFamily::PlusOne);
        u.in_identity_component = false;
      }
      break;
    case UGroup::Sp:
      u.partition = scale(a, 2);
      if (two) u.epsilon = epsilon_max(u.partition, EpsFamily::MinusOne, true);
      break;
    case UGroup::SOodd: {
      Partition d = scale(a, 2);
      if (two) {
        u.partition = append_one(d);
        u.epsilon = epsilon_max(d, EpsFamily::MinusOne, false);
      } else {
        Partition g = add_psi(d);
        u.partition = a.length() % 2 == 0 ? append_one(g) : g;
      }
      break;
    }
    case UGroup::O:
    case UGroup::SO: {
      Partition d = scale(a, 2);
      u.in_identity_component = comp == Component::Identity;
      if (two) {
        u.partition = d;
        u.epsilon = epsilon_max(d, EpsFamily::MinusOne, false);
      } else {
        u.partition = add_psi(d);
      }
      break;
    }
  }
  validate(u);
  return u;
}

inline ClassicalType classical_type(UGroup g) {
  switch (g) {
    case UGroup::Sp: return ClassicalType::C;
    case UGroup::SOodd: return ClassicalType::B;
    case UGroup::O:
    case UGroup::SO: return ClassicalType::D;
    default: break;
  }
  throw Error(ErrorKind::UnsupportedFamily, group_name(g) + " has no θ₂ transfer");
}

// θ₂(Φ in characteristic 2) agrees with Φ in good characteristic.
inline bool phi_good_char_equals_theta2_of_phi_char2(UGroup g, const EllipticClassLabel& c) {
  UnipotentLabel good = phi({g, Characteristic::Good}, c);
  UnipotentLabel bad = phi({g, Characteristic::Two}, c);
  return theta2(bad, classical_type(g)) == good.partition;
}

struct FailureRecord {
  Partition alpha, beta;
  bool unipotent_leq = false;
  bool dominance_leq = false;
  bool weyl_leq = false;
  std::string note;
};

struct VerificationReport {
  std::string family;
  UGroup group = UGroup::Sp;
  int n = 0;
  Characteristic ch = Characteristic::Good;
  Component component = Component::Identity;
  long long pairs = 0;
  std::vector<FailureRecord> failures;

  bool ok() const { return failures.empty(); }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["family"] = family;
    j["group"] = group_name(group);
    j["n"] = n;
    j["char"] = char_name(ch);
    j["component"] = component_name(component);
    j["pairs"] = pairs;
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures) {
      nlohmann::json r;
      r["alpha"] = f.alpha.vec();
      r["beta"] = f.beta.vec();
      r["unipotent_leq"] = f.unipotent_leq;
      r["dominance_leq"] = f.dominance_leq;
      r["weyl_leq"] = f.weyl_leq;
      if (!f.note.empty()) r["note"] = f.note;
      j["failures"].push_back(r);
    }
    return j;
  }
};

// For every ordered pair (α, β) of elliptic classes checks
//   Φ(C_α) ⪯_u Φ(C_β)  ⇔  α ≤ β  ⇔  C_β ⪯_W C_α
// with ⪯_W computed by brute force, and that Φ is injective.
inline VerificationReport verify_theorem(const GroupSpec& spec, int n, Component comp, long long cap = kDefaultGroupCap,
                                         unsigned jobs = 1) {
  GroupContext ctx = weyl_context(spec.group, n, comp);
  if (!has_unipotents(spec, comp))
    throw Error(ErrorKind::Precondition, "nothing to verify: no unipotent elements in this component");
  VerificationReport rep;
  rep.family = family_name(ctx.family);
  rep.group = spec.group;
  rep.n = n;
  rep.ch = spec.ch;
  rep.component = comp;

  ClassCatalog cat(ctx, cap);
  const auto& ps = cat.parameters();
  std::vector<UnipotentLabel> images;
  for (const auto& a : ps) images.push_back(phi(spec, cat.label(a)));
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j)
      if (images[i] == images[j]) rep.failures.push_back({ps[i], ps[j], true, false, false, "phi not injective"});

  auto weyl = weyl_order_matrix(cat, jobs);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j) {
      ++rep.pairs;
      bool u = unipotent_leq(images[i], images[j]);
      bool d = dominance_leq(ps[i], ps[j]);
      bool w = weyl[j][i];
      if (u != d || d != w) rep.failures.push_back({ps[i], ps[j], u, d, w, ""});
    }
  return rep;
}

struct MapRow {
  std::string weyl;  // class partition, "*d" for twisted classes
  std::string good;  // "-" when that characteristic has no unipotents here
  std::string bad;
};

inline std::vector<MapRow> map_rows(UGroup g, int n, Component comp = Component::Identity) {
  GroupContext ctx = weyl_context(g, n, comp);
  std::vector<MapRow> rows;
  for (const auto& a : elliptic_parameters(ctx)) {
    EllipticClassLabel c{ctx, a};
    MapRow r;
    r.weyl = c.to_string();
    r.good = has_unipotents({g, Characteristic::Good}, comp) ? format_label(phi({g, Characteristic::Good}, c)) : "-";
    r.bad = format_label(phi({g, Characteristic::Two}, c));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace ellorder
