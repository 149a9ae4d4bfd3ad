#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bikoid/bikoid_all.hpp"

namespace bikoid::app {

// Unknown or malformed catalog reference.
struct LookupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BikoidEntry {
  std::string name;
  std::string family;  // finite-group, gr, xmod-gr-star, xmod-R, trivial, custom
  Bikoid bikoid;
  bool welded = false;
  std::optional<FiniteGroup> group;  // for finite-group bikoids
};

using BikoidPtr = std::shared_ptr<const BikoidEntry>;

enum class TargetKind { Group, Gr, Xmod, Birack, Bikoid };

// Named groups, gr-groups, crossed modules, biracks and bikoids.  Built-ins
// are always present; JSON descriptors add to them.  Bikoids and their
// representations are built on first use and cached so that every
// representation of one bikoid shares its groupoid.
class Catalog {
 public:
  Catalog();

  void load_directory(std::filesystem::path const& dir);
  void load_descriptor(nlohmann::json const& j, std::string const& source);

  FiniteGroup const& group(std::string const& name) const;
  AbelianGrGroup const& gr(std::string const& name) const;
  CrossedModule const& xmod(std::string const& name) const;
  Birack const& birack(std::string const& name) const;
  BikoidPtr bikoid(std::string const& name);
  RepPtr representation(std::string const& name, BikoidPtr const& k);

  TargetKind classify(std::string const& target) const;

  // Built-in W-bikoids used by the acceptance suites.
  static std::vector<std::string> builtin_bikoids();
  std::vector<std::string> names() const;

 private:
  FiniteGroup group_ref(nlohmann::json const& j) const;
  std::optional<FiniteGroup> builtin_group(std::string const& name) const;
  std::optional<AbelianGrGroup> builtin_gr(std::string const& name) const;

  std::map<std::string, FiniteGroup> groups_;
  std::map<std::string, AbelianGrGroup> grs_;
  std::map<std::string, CrossedModule> xmods_;
  std::map<std::string, Birack> biracks_;
  std::map<std::string, nlohmann::json> bikoid_descriptors_;
  std::map<std::string, BikoidPtr> bikoid_cache_;
  std::map<std::pair<std::string, std::string>, RepPtr> rep_cache_;
  mutable std::map<std::string, FiniteGroup> group_cache_;
  mutable std::map<std::string, AbelianGrGroup> gr_cache_;
  mutable std::map<std::string, CrossedModule> xmod_cache_;
  mutable std::map<std::string, Birack> birack_cache_;
};

}  // namespace bikoid::app
