#pragma once

#include <fstream>
#include <iomanip>
#include <set>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ellorder/ellorder.hpp"

namespace ellorder::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

inline constexpr int kDefaultMaxRank = 7;

struct Options {
  std::string family = "BC";
  std::string rank = "2";
  std::string characteristic;  // empty: verb default
  std::string component;       // empty: verb default
  std::string side = "both";
  std::string format = "text";
  std::string out;
  long long cap = kDefaultGroupCap;
  bool allow_large = false;
  unsigned jobs = 1;
  std::string x, y;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RankRange {
  int lo = 0, hi = 0;
};

inline RankRange parse_rank(const std::string& s) {
  RankRange r;
  try {
    auto dots = s.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
    } else {
      std::string a = s.substr(0, dots), b = s.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(s);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(s);
    }
  } catch (const std::exception&) {
    throw UsageError("--rank expects N or A..B, got '" + s + "'");
  }
  if (r.lo < 1 || r.hi < r.lo) throw UsageError("empty or invalid rank range '" + s + "'");
  return r;
}

// One group/component combination selected by --family and --component.
struct Target {
  UGroup group;
  Component component;
};

inline std::vector<Component> components(const std::string& flag, std::vector<Component> fallback) {
  if (flag.empty()) return fallback;
  if (flag == "id") return {Component::Identity};
  if (flag == "twisted") return {Component::Twisted};
  return {Component::Identity, Component::Twisted};
}

// D and O2n name the same Weyl group; the identity component is shown as
// SO(2n) in tables and the full O(2n) is used for verification.
inline std::vector<Target> targets(const Options& o, bool for_tables) {
  const std::string& f = o.family;
  std::vector<Target> t;
  auto add = [&](UGroup g, const std::vector<Component>& cs) {
    for (Component c : cs) t.push_back({g, c});
  };
  if (f == "A" || f == "GL") {
    add(UGroup::GL, components(o.component, {Component::Identity}));
  } else if (f == "2A" || f == "GLd") {
    add(UGroup::GLdagger, components(o.component, {Component::Twisted}));
  } else if (f == "BC") {
    add(UGroup::Sp, components(o.component, {Component::Identity}));
    add(UGroup::SOodd, components(o.component, {Component::Identity}));
  } else if (f == "B") {
    add(UGroup::SOodd, components(o.component, {Component::Identity}));
  } else if (f == "C") {
    add(UGroup::Sp, components(o.component, {Component::Identity}));
  } else if (f == "D" || f == "O2n") {
    std::vector<Component> def = f == "D" ? std::vector<Component>{Component::Identity}
                                          : std::vector<Component>{Component::Identity, Component::Twisted};
    for (Component c : components(o.component, def))
      t.push_back({(for_tables && c == Component::Identity) ? UGroup::SO : UGroup::O, c});
  } else {
    throw UsageError("unknown family '" + f + "'");
  }
  return t;
}

inline std::vector<Characteristic> characteristics(const std::string& flag, std::vector<Characteristic> fallback) {
  if (flag.empty()) return fallback;
  if (flag == "good") return {Characteristic::Good};
  if (flag == "2") return {Characteristic::Two};
  return {Characteristic::Good, Characteristic::Two};
}

inline std::string group_title(UGroup g, int n) {
  switch (g) {
    case UGroup::GL: return "GL(" + std::to_string(n) + ")";
    case UGroup::GLdagger: return "GL+(" + std::to_string(n) + ")";
    case UGroup::SOodd: return "SO(" + std::to_string(2 * n + 1) + ")";
    case UGroup::Sp: return "Sp(" + std::to_string(2 * n) + ")";
    case UGroup::O: return "O(" + std::to_string(2 * n) + ")";
    case UGroup::SO: return "SO(" + std::to_string(2 * n) + ")";
  }
  return "?";
}

inline void check_weyl_rank(const Options& o, int n) {
  if (n > kDefaultMaxRank && !o.allow_large)
    throw UsageError("rank " + std::to_string(n) + " is above " + std::to_string(kDefaultMaxRank) +
                     "; pass --allow-large to enumerate anyway");
}

// Counts code points so that columns containing ε line up.
inline std::size_t display_width(const std::string& s) {
  std::size_t cp = 0;
  for (unsigned char c : s) cp += (c & 0xC0) != 0x80;
  return cp;
}

inline std::string pad(const std::string& s, std::size_t w) {
  std::size_t cp = display_width(s);
  return s + std::string(w > cp ? w - cp : 0, ' ');
}

inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (w.size() <= i) w.push_back(0);
      w[i] = std::max(w[i], display_width(r[i]));
    }
  std::string s;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) line += i + 1 < r.size() ? pad(r[i], w[i] + 2) : r[i];
    s += line + "\n";
  }
  return s;
}

inline std::string run_classes(const Options& o) {
  RankRange rr = parse_rank(o.rank);
  nlohmann::json j = nlohmann::json::array();
  std::string text;
  std::set<std::string> seen;
  for (int n = rr.lo; n <= rr.hi; ++n) {
    check_weyl_rank(o, n);
    for (const Target& t : targets(o, false)) {
      GroupContext ctx = weyl_context(t.group, n, t.component);
      if (!seen.insert(ctx.to_string()).second) continue;
      ClassCatalog cat(ctx, o.cap);
      std::vector<std::vector<std::string>> rows{{"class", "representative", "length", "min_length", "size"}};
      for (const auto& a : cat.parameters()) {
        SignedPermutation r = representative(cat.label(a));
        int len = length(ctx, r);
        const auto& b = cat.bucket(a);
        rows.push_back({cat.label(a).to_string(), format_element(ctx, r), std::to_string(len),
                        std::to_string(b.lengths.front()), std::to_string(b.elements.size())});
        j.push_back({{"context", ctx.to_string()},
                     {"class", a.vec()},
                     {"component", component_name(ctx.component)},
                     {"representative", format_element(ctx, r)},
                     {"length", len},
                     {"min_length", b.lengths.front()},
                     {"size", b.elements.size()}});
      }
      text += ctx.to_string() + "\n" + table(rows);
    }
  }
  if (o.format == "json") return j.dump(2) + "\n";
  return text;
}

inline std::string run_unipotent(const Options& o) {
  RankRange rr = parse_rank(o.rank);
  nlohmann::json j = nlohmann::json::array();
  std::string text;
  std::set<std::pair<int, int>> seen;
  for (int n = rr.lo; n <= rr.hi; ++n)
    for (const Target& t : targets(o, true)) {
      if (!seen.insert({static_cast<int>(t.group), n}).second) continue;
      for (Characteristic p : characteristics(o.characteristic, {Characteristic::Good, Characteristic::Two})) {
        auto labels = enumerate_unipotent(t.group, n, p);
        text += group_title(t.group, n) + " char " + char_name(p) + ": " + std::to_string(labels.size()) + " classes\n";
        for (const auto& u : labels) {
          std::string line = "  " + format_label(u);
          if (u.in_identity_component && (t.group == UGroup::O || t.group == UGroup::GLdagger))
            line += t.group == UGroup::O ? (*u.in_identity_component ? "  SO" : "  O") : (*u.in_identity_component ? "  GL" : "  GLd");
          text += line + "\n";
          nlohmann::json e = to_json(u);
          e["char"] = char_name(p);
          e["n"] = n;
          j.push_back(e);
        }
      }
    }
  if (o.format == "json") return j.dump(2) + "\n";
  return text;
}

inline std::string run_map(const Options& o) {
  RankRange rr = parse_rank(o.rank);
  nlohmann::json j = nlohmann::json::array();
  std::string text;
  for (int n = rr.lo; n <= rr.hi; ++n)
    for (const Target& t : targets(o, true)) {
      std::vector<std::vector<std::string>> rows{{"[W]", group_title(t.group, n) + " good", group_title(t.group, n) + " char 2"}};
      for (const auto& r : map_rows(t.group, n, t.component)) {
        rows.push_back({r.weyl, r.good, r.bad});
        j.push_back({{"group", group_name(t.group)},
                     {"n", n},
                     {"component", component_name(t.component)},
                     {"class", r.weyl},
                     {"good", r.good},
                     {"char2", r.bad}});
      }
      text += group_title(t.group, n) + (t.component == Component::Twisted ? " twisted" : "") + "\n" + table(rows);
    }
  if (o.format == "json") return j.dump(2) + "\n";
  return text;
}

struct HassePair {
  HasseDiagram weyl, unipotent;
  bool opposite = false;
};

inline HassePair hasse_pair(UGroup g, int n, Component c, Characteristic p, long long cap, unsigned jobs) {
  GroupContext ctx = weyl_context(g, n, c);
  ClassCatalog cat(ctx, cap);
  const auto& ps = cat.parameters();
  auto m = weyl_order_matrix(cat, jobs);
  std::vector<std::string> wl;
  for (const auto& a : ps) wl.push_back(cat.label(a).to_string());
  HassePair hp;
  hp.weyl = hasse(wl, [&](std::size_t i, std::size_t k) { return m[i][k]; });
  std::vector<UnipotentLabel> im;
  std::vector<std::string> ul;
  for (const auto& a : ps) {
    im.push_back(phi({g, p}, cat.label(a)));
    ul.push_back(format_label(im.back()));
  }
  hp.unipotent = hasse(ul, [&](std::size_t i, std::size_t k) { return unipotent_leq(im[i], im[k]); });
  hp.opposite = is_opposite(hp.weyl, hp.unipotent);
  return hp;
}

inline std::string covers_text(const HasseDiagram& h) {
  std::string s;
  for (auto [a, b] : h.covers) s += "  " + h.nodes[a] + " < " + h.nodes[b] + "\n";
  if (h.covers.empty()) s += "  (no covers; " + std::to_string(h.nodes.size()) + " node)\n";
  return s;
}

inline std::string run_hasse(const Options& o, int& status) {
  RankRange rr = parse_rank(o.rank);
  if (o.side != "weyl" && o.side != "unipotent" && o.side != "both") throw UsageError("--side must be weyl, unipotent or both");
  nlohmann::json j = nlohmann::json::array();
  std::string text, dot;
  std::set<std::pair<int, int>> seen;
  for (int n = rr.lo; n <= rr.hi; ++n) {
    check_weyl_rank(o, n);
    for (const Target& t : targets(o, true)) {
      if (!seen.insert({static_cast<int>(t.group) * 2 + static_cast<int>(t.component), n}).second) continue;
      Characteristic p = characteristics(o.characteristic, {Characteristic::Two}).back();
      if (!has_unipotents({t.group, p}, t.component)) p = Characteristic::Two;
      HassePair hp = hasse_pair(t.group, n, t.component, p, o.cap, o.jobs);
      std::string title = group_title(t.group, n) + (t.component == Component::Twisted ? " twisted" : "");
      std::string tag = group_name(t.group) + std::to_string(n) + (t.component == Component::Twisted ? "_twisted" : "");
      nlohmann::json e{{"group", group_name(t.group)}, {"n", n}, {"component", component_name(t.component)}, {"char", char_name(p)}};
      if (o.side != "unipotent") {
        e["weyl"] = hp.weyl.to_json();
        text += title + " Weyl side\n" + covers_text(hp.weyl);
        dot += hp.weyl.to_dot(tag + "_weyl");
      }
      if (o.side != "weyl") {
        e["unipotent"] = hp.unipotent.to_json();
        text += title + " unipotent side (char " + char_name(p) + ")\n" + covers_text(hp.unipotent);
        dot += hp.unipotent.to_dot(tag + "_unipotent");
      }
      if (o.side == "both") {
        e["opposite"] = hp.opposite;
        text += std::string("  opposite: ") + (hp.opposite ? "yes" : "NO") + "\n";
        if (!hp.opposite) status = kVerificationFailed;
      }
      j.push_back(e);
    }
  }
  if (o.format == "json") return j.dump(2) + "\n";
  if (o.format == "dot") return dot;
  return text;
}

inline std::string run_verify(const Options& o, int& status) {
  RankRange rr = parse_rank(o.rank);
  nlohmann::json j = nlohmann::json::array();
  std::string text;
  for (int n = rr.lo; n <= rr.hi; ++n) {
    check_weyl_rank(o, n);
    for (const Target& t : targets(o, false)) {
      if (t.group == UGroup::SO) continue;
      for (Characteristic p : characteristics(o.characteristic, {Characteristic::Good, Characteristic::Two})) {
        if (!has_unipotents({t.group, p}, t.component)) continue;
        VerificationReport r = verify_theorem({t.group, p}, n, t.component, o.cap, o.jobs);
        if (!r.ok()) status = kVerificationFailed;
        j.push_back(r.to_json());
        std::ostringstream line;
        line << r.family << " " << group_title(t.group, n) << " char=" << char_name(p)
             << " component=" << component_name(t.component) << " pairs=" << r.pairs
             << " failures=" << r.failures.size() << (r.ok() ? "" : "  FAIL") << "\n";
        for (const auto& f : r.failures)
          line << "    alpha=" << f.alpha.to_string() << " beta=" << f.beta.to_string() << " unipotent=" << f.unipotent_leq
               << " dominance=" << f.dominance_leq << " weyl=" << f.weyl_leq << (f.note.empty() ? "" : " " + f.note) << "\n";
        text += line.str();
      }
    }
  }
  if (j.empty()) throw UsageError("nothing to verify for this family/component/characteristic selection");
  if (o.format == "json") return j.dump(2) + "\n";
  return text;
}

inline std::string run_bruhat(const Options& o) {
  RankRange rr = parse_rank(o.rank);
  if (rr.lo != rr.hi) throw UsageError("bruhat takes a single rank");
  const int n = rr.lo;
  GroupContext ctx;
  const std::string& f = o.family;
  if (f == "A" || f == "GL") ctx = GroupContext::A(n);
  else if (f == "2A" || f == "GLd") ctx = GroupContext::TwistedA(n);
  else if (f == "BC" || f == "B" || f == "C") ctx = GroupContext::BC(n);
  else if (f == "D" || f == "O2n") ctx = GroupContext::D(n);
  else throw UsageError("unknown family '" + f + "'");
  ctx.validate();
  if (o.x.empty() || o.y.empty()) throw UsageError("bruhat needs two elements");
  SignedPermutation x = parse_element(ctx, o.x), y = parse_element(ctx, o.y);
  if (ctx.family == Family::D) ctx.component = x.negatives() % 2 ? Component::Twisted : Component::Identity;
  if (!contains(ctx, x) || !contains(ctx, y))
    throw Error(ErrorKind::Parse, "elements are not both in " + ctx.to_string());
  bool generic = bruhat_leq_generic(ctx, x, y);
  auto witness = count_violation(ctx, x, y);
  nlohmann::json j{{"context", ctx.to_string()},
                   {"x", format_element(ctx, x)},
                   {"y", format_element(ctx, y)},
                   {"length_x", length(ctx, x)},
                   {"length_y", length(ctx, y)},
                   {"generic", generic},
                   {"counts", !witness.has_value()},
                   {"counts_exact", ctx.family != Family::D}};
  if (witness) j["witness"] = {witness->first, witness->second};
  if (o.format == "json") return j.dump(2) + "\n";
  std::ostringstream s;
  s << ctx.to_string() << ": x=" << format_element(ctx, x) << " (length " << length(ctx, x) << "), y=" << format_element(ctx, y)
    << " (length " << length(ctx, y) << ")\n";
  s << "generic recursion: x <= y is " << (generic ? "true" : "false") << "\n";
  s << "count criterion" << (ctx.family == Family::D ? " (necessary only)" : "") << ": " << (witness ? "false" : "true");
  if (witness) s << ", witness x[" << witness->first << "," << witness->second << "] > y[" << witness->first << "," << witness->second << "]";
  s << "\n";
  return s.str();
}

// Runs one command line; returns the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elliptic conjugacy classes, unipotent classes and the orders between them"};
  app.name("ellorder");
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "A, BC, B, C, D, 2A, O2n, GL or GLd")
        ->check(CLI::IsMember({"A", "BC", "B", "C", "D", "2A", "O2n", "GL", "GLd"}));
    sub->add_option("--rank", o.rank, "rank N, or a range A..B");
    sub->add_option("--char", o.characteristic, "good, 2 or both")->check(CLI::IsMember({"good", "2", "both"}));
    sub->add_option("--component", o.component, "id, twisted or both")->check(CLI::IsMember({"id", "twisted", "both"}));
    sub->add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--out", o.out, "write output to this file");
    sub->add_option("--cap", o.cap, "largest group order to enumerate")->check(CLI::PositiveNumber);
    sub->add_flag("--allow-large", o.allow_large, "permit ranks above 7");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };
  auto* classes = app.add_subcommand("classes", "elliptic classes with representatives");
  auto* unip = app.add_subcommand("unipotent", "unipotent class labels");
  auto* map = app.add_subcommand("map", "table of the map from elliptic classes to unipotent classes");
  auto* hs = app.add_subcommand("hasse", "Hasse diagrams of both orders");
  auto* ver = app.add_subcommand("verify", "exhaustive check of the order-reversing bijection");
  auto* br = app.add_subcommand("bruhat", "compare two elements in the Bruhat order");
  for (auto* s : {classes, unip, map, hs, ver, br}) common(s);
  hs->add_option("--side", o.side, "weyl, unipotent or both")->check(CLI::IsMember({"weyl", "unipotent", "both"}));
  br->add_option("x", o.x, "lower element, e.g. [-2,1,3]")->required();
  br->add_option("y", o.y, "upper element")->required();

  std::vector<const char*> argv{"ellorder"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << "error: " << e.what() << "\n" << sub->help();
    return kUsage;
  }

  int status = kOk;
  std::string text;
  try {
    if (o.format == "dot" && !hs->parsed()) throw UsageError("--format dot is only available for hasse");
    if (classes->parsed()) text = run_classes(o);
    else if (unip->parsed()) text = run_unipotent(o);
    else if (map->parsed()) text = run_map(o);
    else if (hs->parsed()) text = run_hasse(o, status);
    else if (ver->parsed()) text = run_verify(o, status);
    else if (br->parsed()) text = run_bruhat(o);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f) {
      err << "error: cannot write " << o.out << "\n";
      return kUsage;
    }
    f << text;
  }
  return status;
}

}  // namespace ellorder::cli
