#include "catalog.hpp"

#include <algorithm>
#include <fstream>
#include <regex>

namespace bikoid::app {

using nlohmann::json;

namespace {

std::string strip_prefix(std::string const& s, std::string const& prefix) {
  return s.rfind(prefix, 0) == 0 ? s.substr(prefix.size()) : s;
}

bool has_prefix(std::string const& s, std::string const& prefix) { return s.rfind(prefix, 0) == 0; }

Table table_from(json const& j, char const* what) {
  if (!j.is_array()) throw LookupError(std::string(what) + " must be an array of arrays");
  Table t;
  for (auto const& row : j) t.push_back(row.get<std::vector<int>>());
  return t;
}

// Action tables may be given bare or as {"act": [[...]]}.
Table action_from_json(json const& j) { return table_from(j.is_object() ? j.at("act") : j, "action"); }

// Max order accepted for groups built from a name pattern.
constexpr int kMaxBuiltinOrder = 200;

}  // namespace

Catalog::Catalog() = default;

std::optional<FiniteGroup> Catalog::builtin_group(std::string const& name) const {
  std::smatch m;
  if (name == "trivial" || name == "1") return trivial_group();
  if (name == "sign") return sign_group();
  if (std::regex_match(name, m, std::regex("Z([0-9]+)"))) {
    int n = std::stoi(m[1]);
    if (n < 1 || n > kMaxBuiltinOrder) throw LookupError("cyclic group order out of range: " + name);
    return cyclic_group(n);
  }
  if (std::regex_match(name, m, std::regex("S([0-9]+)"))) {
    int n = std::stoi(m[1]);
    if (n < 1 || n > 5) throw LookupError("symmetric group degree out of range: " + name);
    return symmetric_group(n);
  }
  if (std::regex_match(name, m, std::regex("GL([0-9]+)-Z([0-9]+)"))) {
    int d = std::stoi(m[1]), p = std::stoi(m[2]);
    if (d < 1 || d > 2 || p < 2 || p > 7) throw LookupError("linear group out of range: " + name);
    return general_linear_group(d, p).group;
  }
  return std::nullopt;
}

FiniteGroup const& Catalog::group(std::string const& full) const {
  std::string name = strip_prefix(full, "group:");
  if (auto it = groups_.find(name); it != groups_.end()) return it->second;
  if (auto it = group_cache_.find(name); it != group_cache_.end()) return it->second;
  if (auto g = builtin_group(name)) return group_cache_.emplace(name, *g).first->second;
  throw LookupError("unknown group: " + full);
}

std::optional<AbelianGrGroup> Catalog::builtin_gr(std::string const& name) const {
  std::smatch m;
  if (name == "Z2-Z3") return gr_z2_z3();
  if (std::regex_match(name, m, std::regex("GL([0-9]+)-Z([0-9]+)"))) {
    int d = std::stoi(m[1]), p = std::stoi(m[2]);
    if (d < 1 || d > 2 || p < 2 || p > 5 || (d == 2 && p > 3))
      throw LookupError("gr-group out of desk-scale range: " + name);
    return gr_general_linear(d, p);
  }
  return std::nullopt;
}

AbelianGrGroup const& Catalog::gr(std::string const& full) const {
  std::string name = strip_prefix(full, "gr:");
  if (auto it = grs_.find(name); it != grs_.end()) return it->second;
  if (auto it = gr_cache_.find(name); it != gr_cache_.end()) return it->second;
  if (auto g = builtin_gr(name)) return gr_cache_.emplace(name, *g).first->second;
  throw LookupError("unknown gr-group: " + full);
}

CrossedModule const& Catalog::xmod(std::string const& full) const {
  std::string name = strip_prefix(full, "xmod:");
  if (auto it = xmods_.find(name); it != xmods_.end()) return it->second;
  if (auto it = xmod_cache_.find(name); it != xmod_cache_.end()) return it->second;
  CrossedModule cm;
  if (has_prefix(name, "id-")) cm = identity_xmod(group(name.substr(3)));
  else if (has_prefix(name, "ad-")) cm = ad_xmod(group(name.substr(3)));
  else cm = gr_to_xmod(gr(name));
  cm.name = name;
  return xmod_cache_.emplace(name, std::move(cm)).first->second;
}

Birack const& Catalog::birack(std::string const& full) const {
  std::string name = strip_prefix(full, "birack:");
  if (auto it = biracks_.find(name); it != biracks_.end()) return it->second;
  if (auto it = birack_cache_.find(name); it != birack_cache_.end()) return it->second;
  std::smatch m;
  if (std::regex_match(name, m, std::regex("trivial-([0-9]+)"))) {
    int n = std::stoi(m[1]);
    if (n < 1 || n > kMaxBuiltinOrder) throw LookupError("birack size out of range: " + name);
    return birack_cache_.emplace(name, trivial_birack(n)).first->second;
  }
  if (has_prefix(name, "conj-")) return birack_cache_.emplace(name, conjugation_quandle(group(name.substr(5)))).first->second;
  throw LookupError("unknown birack: " + full);
}

TargetKind Catalog::classify(std::string const& t) const {
  if (has_prefix(t, "group:")) return TargetKind::Group;
  if (has_prefix(t, "gr:")) return TargetKind::Gr;
  if (has_prefix(t, "xmod:")) return TargetKind::Xmod;
  if (has_prefix(t, "birack:")) return TargetKind::Birack;
  return TargetKind::Bikoid;
}

BikoidPtr Catalog::bikoid(std::string const& name) {
  if (auto it = bikoid_cache_.find(name); it != bikoid_cache_.end()) return it->second;
  auto e = std::make_shared<BikoidEntry>();
  e->name = name;
  std::smatch m;
  if (has_prefix(name, "finite-group:") || has_prefix(name, "finite-group-bikoid:")) {
    std::string g = name.substr(name.find(':') + 1);
    e->family = "finite-group";
    e->group = group(g);
    e->bikoid = finite_group_bikoid(*e->group);
  } else if (has_prefix(name, "gr:")) {
    e->family = "gr";
    e->bikoid = abelian_gr_bikoid(gr(name)).bikoid;
  } else if (has_prefix(name, "xmod-gr-star:")) {
    e->family = "xmod-gr-star";
    e->bikoid = xmod_bikoid_gr_star(xmod(name.substr(13))).bikoid;
  } else if (std::regex_match(name, m, std::regex("xmod-R:(.+):R=(.+)"))) {
    e->family = "xmod-R";
    CrossedModule const& cm = xmod(m[1]);
    std::string r = m[2];
    int idx = cm.e.find_label(r);
    if (idx < 0 && std::regex_match(r, std::regex("[0-9]+"))) idx = std::stoi(r);
    if (idx < 0 || idx >= cm.e.order()) throw LookupError("no element " + r + " in E of " + std::string(m[1]));
    e->bikoid = xmod_bikoid_R(cm, idx).bikoid;
  } else if (has_prefix(name, "trivial:")) {
    e->family = "trivial";
    e->bikoid = trivial_bikoid(std::make_shared<const Groupoid>(aut_groupoid(group(name.substr(8)))));
  } else if (has_prefix(name, "bikoid:")) {
    auto it = bikoid_descriptors_.find(name.substr(7));
    if (it == bikoid_descriptors_.end()) throw LookupError("unknown bikoid: " + name);
    json const& j = it->second;
    FiniteGroup g = group_ref(j.at("group"));
    int space = j.at("space").get<int>();
    GroupAction act{action_from_json(j.at("action"))};
    if (!verify_action(g, act) || act.space_size() != space)
      throw LookupError("bikoid " + name + ": action fails verification");
    auto gd = std::make_shared<const Groupoid>(action_groupoid(g, space, act));
    Table l = table_from(j.at("L"), "L"), r = table_from(j.at("R"), "R");
    Bikoid k{gd, Table(space, std::vector<int>(space)), Table(space, std::vector<int>(space)), name};
    if (static_cast<int>(l.size()) != space || static_cast<int>(r.size()) != space)
      throw LookupError("bikoid " + name + ": L and R must be |objects| x |objects|");
    for (int x = 0; x < space; ++x)
      for (int y = 0; y < space; ++y) {
        if (static_cast<int>(l[x].size()) != space || static_cast<int>(r[x].size()) != space)
          throw LookupError("bikoid " + name + ": L and R must be square");
        int a = l[x][y], b = r[x][y];
        if (a < 0 || a >= g.order() || b < 0 || b >= g.order())
          throw LookupError("bikoid " + name + ": label out of range");
        k.l_map[x][y] = gd->arrow(x, a);
        k.r_map[x][y] = gd->arrow(y, b);
      }
    e->family = "custom";
    e->bikoid = std::move(k);
    if (auto rep = verify_bikoid(e->bikoid); !rep) throw LookupError("bikoid " + name + " fails verification: " + rep.str());
  } else {
    throw LookupError("unknown bikoid: " + name);
  }
  e->bikoid.name = name;
  e->welded = static_cast<bool>(verify_welded_bikoid(e->bikoid));
  BikoidPtr p = e;
  bikoid_cache_[name] = p;
  return p;
}

RepPtr Catalog::representation(std::string const& name, BikoidPtr const& k) {
  std::string kind = name, bound;
  if (auto c = name.find(':'); c != std::string::npos) {
    kind = name.substr(0, c);
    bound = name.substr(c + 1);
    if (bound != k->name && bikoid(bound)->bikoid.gamma != k->bikoid.gamma)
      throw LookupError("representation " + name + " is not over the groupoid of " + k->name);
  }
  if (kind != "right-regular" && kind != "object-regular") throw LookupError("unknown representation: " + name);
  auto key = std::make_pair(kind, k->name);
  if (auto it = rep_cache_.find(key); it != rep_cache_.end()) return it->second;
  RepPtr r = std::make_shared<const Representation>(kind == "right-regular" ? right_regular(k->bikoid.gamma)
                                                                            : object_regular(k->bikoid.gamma));
  rep_cache_[key] = r;
  return r;
}

FiniteGroup Catalog::group_ref(json const& j) const {
  if (j.is_string()) return group(j.get<std::string>());
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  FiniteGroup g(table_from(j.contains("mul") ? j.at("mul") : j.at("table"), "mul"), labels);
  if (j.contains("order") && j.at("order").get<int>() != g.order()) throw LookupError("inline group: order does not match table");
  if (auto r = verify_group(g); !r) throw LookupError("inline group fails verification: " + r.str());
  return g;
}

void Catalog::load_descriptor(json const& j, std::string const& source) {
  std::string kind = j.at("kind").get<std::string>();
  std::string name = j.at("name").get<std::string>();
  auto fail = [&](std::string const& why) { throw LookupError(source + ": " + kind + " " + name + ": " + why); };
  auto unique = [&](auto const& m) {
    if (m.count(name)) fail("duplicate name");
  };
  if (kind == "group") {
    unique(groups_);
    FiniteGroup g = group_ref(j);
    groups_.emplace(name, g);
  } else if (kind == "gr") {
    unique(grs_);
    FiniteGroup g = group_ref(j.at("G")), a = group_ref(j.at("A"));
    AbelianGrGroup gr{g, a, GroupAction{action_from_json(j.at("action"))}};
    if (auto r = verify_gr_group(gr); !r) fail(r.str());
    grs_.emplace(name, gr);
  } else if (kind == "xmod") {
    unique(xmods_);
    FiniteGroup g = group_ref(j.at("G")), e = group_ref(j.at("E"));
    CrossedModule cm{e, g, j.at("boundary").get<std::vector<int>>(), GroupAction{action_from_json(j.at("action"))},
                     name};
    if (auto r = verify_crossed_module(cm); !r) fail(r.str());
    xmods_.emplace(name, cm);
  } else if (kind == "birack") {
    unique(biracks_);
    Birack b;
    try {
      b = Birack(table_from(j.at("over"), "over"), table_from(j.at("under"), "under"));
      if (j.contains("size") && j.at("size").get<int>() != b.size()) fail("size does not match tables");
    } catch (StructuralError const& e) {
      fail(e.what());
    }
    if (auto r = verify_birack(b); !r) fail(r.str());
    biracks_.emplace(name, b);
  } else if (kind == "bikoid") {
    unique(bikoid_descriptors_);
    bikoid_descriptors_.emplace(name, j);
    try {
      bikoid("bikoid:" + name);  // verify on load
    } catch (...) {
      bikoid_descriptors_.erase(name);
      throw;
    }
  } else {
    fail("unknown descriptor kind");
  }
}

void Catalog::load_directory(std::filesystem::path const& dir) {
  if (!std::filesystem::is_directory(dir)) throw LookupError("catalog directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (auto const& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<std::pair<json, std::string>> descs;
  for (auto const& f : files) {
    std::ifstream in(f);
    try {
      json j = json::parse(in);
      if (j.is_array())
        for (auto const& d : j) descs.push_back({d, f.string()});
      else
        descs.push_back({j, f.string()});
    } catch (json::exception const& e) {
      throw LookupError(f.string() + ": " + e.what());
    }
  }
  for (auto const& [d, src] : descs) {
    static const std::vector<std::string> known = {"group", "gr", "xmod", "birack", "bikoid"};
    if (!d.is_object() || !d.contains("kind") || !d.at("kind").is_string() ||
        std::find(known.begin(), known.end(), d.at("kind").get<std::string>()) == known.end())
      throw LookupError(src + ": descriptor needs a \"kind\" of group, gr, xmod, birack or bikoid");
  }
  // Dependencies only point at earlier kinds in this order.
  for (char const* kind : {"group", "gr", "xmod", "birack", "bikoid"})
    for (auto const& [d, src] : descs) {
      if (d.at("kind") != kind) continue;
      try {
        load_descriptor(d, src);
      } catch (json::exception const& e) {
        throw LookupError(src + ": " + e.what());
      }
    }
}

std::vector<std::string> Catalog::builtin_bikoids() {
  return {"finite-group:Z2",     "finite-group:Z3",     "finite-group:S3",     "gr:Z2-Z3",
          "xmod-gr-star:Z2-Z3",  "xmod-R:Z2-Z3:R=0",    "xmod-R:Z2-Z3:R=1",    "xmod-R:Z2-Z3:R=2"};
}

std::vector<std::string> Catalog::names() const {
  std::vector<std::string> r;
  for (auto const& [n, _] : groups_) r.push_back("group:" + n);
  for (auto const& [n, _] : grs_) r.push_back("gr:" + n);
  for (auto const& [n, _] : xmods_) r.push_back("xmod:" + n);
  for (auto const& [n, _] : biracks_) r.push_back("birack:" + n);
  for (auto const& [n, _] : bikoid_descriptors_) r.push_back("bikoid:" + n);
  return r;
}

}  // namespace bikoid::app
