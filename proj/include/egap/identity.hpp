#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace egap {

enum class Category { RaceOrEthnicity, Nationality, Religion };

inline constexpr std::array<Category, 3> kAllCategories = {Category::RaceOrEthnicity, Category::Nationality,
                                                           Category::Religion};

// Config/file identifier: "race_or_ethnicity", "nationality", "religion".
std::string_view category_id(Category c);
// Human label used in tables: "Race or Ethnicity", ...
std::string_view category_label(Category c);
// Accepts the identifier or the label (case-insensitive); throws on unknown.
Category parse_category(std::string_view s);

struct Identity {
  Category category = Category::RaceOrEthnicity;
  std::string group;         // empty for the unspecified identity
  std::string display_name;  // exact surface string substituted into prompts
  bool unspecified = false;

  bool operator==(const Identity&) const = default;
};

enum class Relation { Same, Different, Undefined };

enum class CulturalZone {
  EnglishSpeaking,
  ProtestantEurope,
  CatholicEurope,
  Confucian,
  WestSouthAsia,
  OrthodoxEurope,
  LatinAmerica,
  AfricanIslamic,
};

inline constexpr std::array<CulturalZone, 8> kAllZones = {
    CulturalZone::EnglishSpeaking, CulturalZone::ProtestantEurope, CulturalZone::CatholicEurope,
    CulturalZone::Confucian,       CulturalZone::WestSouthAsia,    CulturalZone::OrthodoxEurope,
    CulturalZone::LatinAmerica,    CulturalZone::AfricanIslamic,
};

std::string_view zone_label(CulturalZone z);
CulturalZone parse_zone(std::string_view label);

class RegistryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kUnspecifiedName = "a person";
inline constexpr std::string_view kNationalityPrefix = "a person from ";

// Social-group registry. Each category axis is ordered: unspecified first,
// then groups in declaration order, each group's names in declaration order.
// Immutable after construction.
class GroupRegistry {
 public:
  struct Group {
    std::string label;
    std::vector<std::string> names;
    std::optional<CulturalZone> zone;  // nationality only
  };

  // Built-in registry: race/ethnicity 19, nationality 22, religion 6 axis members.
  static GroupRegistry paper_default();
  static GroupRegistry from_toml(std::string_view text);
  static GroupRegistry load(const std::string& path);
  std::string to_toml() const;

  bool has_category(Category c) const;
  const std::vector<Identity>& axis(Category c) const;
  const std::vector<Group>& groups(Category c) const;

  // Looks a display name up in one category / across all categories.
  std::optional<Identity> find(Category c, std::string_view display_name) const;
  std::optional<Identity> find_any(std::string_view display_name) const;
  std::optional<std::size_t> index_of(Category c, std::string_view display_name) const;

  // Cultural zone of a nationality group (accepts long and short country spellings).
  std::optional<CulturalZone> zone_of(std::string_view country) const;

 private:
  void add_category(Category c, std::vector<Group> groups);

  std::map<Category, std::vector<Group>> groups_;
  std::map<Category, std::vector<Identity>> axes_;
};

// Throws RegistryError when the identities come from different categories.
Relation same_group(const Identity& a, const Identity& b);

// Same-relation over an axis as a row-major n*n matrix.
std::vector<Relation> relation_matrix(const std::vector<Identity>& axis);

// Zone of one of the 21 built-in countries. Accepts "the United States",
// "United States", "U.S.A.", "a person from Canada", etc. Throws on unknown.
CulturalZone cultural_zone(std::string_view country);

// Strips "a person from " and a leading "the ", maps short forms to the canonical label.
std::string canonical_country(std::string_view country);

}  // namespace egap
