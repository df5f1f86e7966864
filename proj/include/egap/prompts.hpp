#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "egap/corpus.hpp"
#include "egap/identity.hpp"

namespace egap {

enum class Persona { P0, P1, P2, P3 };
enum class Scale { S0, S1 };  // 0-100, 0-10
enum class TaskFrame { T0, T1, T2 };

struct PromptSetting {
  Persona persona = Persona::P0;
  Scale scale = Scale::S0;
  TaskFrame task = TaskFrame::T0;

  bool operator==(const PromptSetting&) const = default;

  // "P0S0T0"
  std::string label() const;
  // "(P0, S0, T0)"
  std::string paper_label() const;
  int scale_max() const { return scale == Scale::S0 ? 100 : 10; }
  bool is_paper_setting() const;
};

// Accepts "P0S0T0", "(P0,S0,T0)", "(P0, S0, T0)", "p0s0t0".
PromptSetting parse_setting(std::string_view s);

// The seven settings varied one component at a time from (P0, S0, T0), in table order.
const std::array<PromptSetting, 7>& paper_settings();

class PromptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PromptPair {
  std::string system_text;
  std::string user_text;
  std::string digest;  // depends only on the two texts
};

// Template fragments, shared with the synthetic endpoint's prompt matcher.
namespace templates {
// Persona sentences, split around the perceiver slot.
struct Split {
  std::string_view before;
  std::string_view after;
};
Split persona(Persona p);
std::string_view system_instructions(Scale s);
// First line of the task block, split around the experiencer slot. T0 carries
// the emotion too: "...in which they felt {Emotion}." (handled by the renderer).
Split task_intro(TaskFrame t);
inline constexpr std::string_view kT0EmotionLead = " describes a situation in which they felt ";
inline constexpr std::string_view kQuestionBefore = "How much ";
inline constexpr std::string_view kQuestionAfter = " did the person feel while experiencing the event?";
inline constexpr std::string_view kAnswerCue = "Emotion intensity:";
}  // namespace templates

std::string render_system(Persona persona, Scale scale, std::string_view perceiver);
std::string render_user(TaskFrame task, std::string_view experiencer, Emotion emotion, std::string_view narrative);

// Narrative text the setting's task frame uses for this event.
// T0: raw text; T1: first-person text (composed on the fly if absent); T2: third-person text.
std::string narrative_for(const Event& event, TaskFrame task);

PromptPair mk_prompt(const Event& event, const Identity& perceiver, const Identity& experiencer,
                     const PromptSetting& setting);

struct GridCell {
  std::uint64_t index = 0;
  std::size_t setting = 0;  // index into GridSpec::settings
  std::size_t perceiver = 0;
  std::size_t experiencer = 0;
  std::size_t event = 0;
};

// One category's audit grid. Cell order: setting, perceiver, experiencer, event.
struct GridSpec {
  Category category = Category::RaceOrEthnicity;
  std::vector<Identity> axis;
  std::size_t event_count = 0;
  std::vector<PromptSetting> settings;

  static GridSpec make(const GroupRegistry& registry, Category category, std::size_t event_count,
                       std::vector<PromptSetting> settings);

  void validate() const;
  std::uint64_t cell_count() const;
  GridCell cell_at(std::uint64_t index) const;
};

// Restartable stream over [offset, cell_count()).
class GridStream {
 public:
  explicit GridStream(const GridSpec& spec, std::uint64_t offset = 0);
  std::uint64_t total() const { return total_; }
  std::uint64_t position() const { return next_; }
  std::optional<GridCell> next();

 private:
  const GridSpec* spec_;
  std::uint64_t total_;
  std::uint64_t next_;
};

// (sum over categories of axis^2) * events * settings.
std::uint64_t grid_total(const GroupRegistry& registry, const std::vector<Category>& categories,
                         std::size_t event_count, std::size_t setting_count);

}  // namespace egap
