#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace egap {

class ChatClient;

enum class Emotion { Anger, Disgust, Fear, Guilt, Sadness, Shame, Boredom, Joy, Pride, Trust, Relief, Surprise };

inline constexpr std::array<Emotion, 12> kAllEmotions = {
    Emotion::Anger, Emotion::Disgust, Emotion::Fear,  Emotion::Guilt, Emotion::Sadness, Emotion::Shame,
    Emotion::Boredom, Emotion::Joy,   Emotion::Pride, Emotion::Trust, Emotion::Relief,  Emotion::Surprise,
};

// Corpus label, e.g. "sadness".
std::string_view emotion_label(Emotion e);
// Adjectival surface form used inside narratives and prompts, e.g. "sad".
std::string_view emotion_adjective(Emotion e);
// Parses a label or adjective; nullopt for unknown text. "no emotion" is not an Emotion.
std::optional<Emotion> parse_emotion(std::string_view s);
// "no emotion", "no-emotion", "noemo", ... (case-insensitive).
bool is_no_emotion_label(std::string_view s);

struct Event {
  std::string id;
  Emotion emotion = Emotion::Anger;
  std::string raw_text;
  std::optional<std::string> first_person_text;
  std::optional<std::string> third_person_text;
  std::string provenance;  // "<source>#row<N>"; rewrite model appended as "|t2:<model>"

  bool operator==(const Event&) const = default;
};

struct MalformedRow {
  std::size_t row = 0;  // 1-based data row (header excluded)
  std::string reason;
};

struct LoadReport {
  std::size_t input_rows = 0;
  std::size_t no_emotion_rows = 0;
  std::vector<MalformedRow> malformed;
};

struct Corpus {
  std::vector<Event> events;
  std::string source_digest;

  const Event* find(std::string_view id) const;
  // source_digest = SHA-256 of the JSON-lines archive; provenance carries the rewriter id.
  void refresh_digest();
};

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ColumnMapping {
  std::string emotion_column = "emotion";
  std::string text_column = "generated_text";
  std::string id_column;  // optional; ids derived from row + content when empty
  char delimiter = 0;     // 0 = infer from extension (.tsv -> tab, else comma)
};

// Parses RFC 4180-style delimited text (quoted fields, doubled quotes, CRLF).
std::vector<std::vector<std::string>> parse_delimited(std::string_view text, char delimiter);

Corpus load_corpus(const std::string& path, const ColumnMapping& mapping, LoadReport* report = nullptr);
Corpus load_corpus_text(std::string_view text, const ColumnMapping& mapping, std::string_view source_name,
                        LoadReport* report = nullptr);

// "I felt {adjective} {fragment}." unless the text already begins with "I felt".
std::string compose_first_person(Emotion emotion, std::string_view raw_text);
inline std::string compose_first_person(const Event& e) { return compose_first_person(e.emotion, e.raw_text); }

// Fills first_person_text for every event.
void compose_all_first_person(Corpus& corpus);

// One-shot dialogue-format rewrite prompt, narrative substituted.
std::string rewrite_prompt(std::string_view first_person_narrative);
// Completion up to the closing brace, trimmed.
std::string extract_rewrite(std::string_view completion);

struct RewriteOutcome {
  std::string text;
  bool needs_review = false;  // empty completion
  int attempts = 0;
};

// Sends the rewrite prompt for the event's first-person text and stores the
// result on the event. Throws CorpusError for an empty narrative (nothing is sent).
RewriteOutcome rewrite_third_person(Event& event, ChatClient& client);

// JSON-lines archive: {id, emotion, raw, t1, t2, provenance} per line.
std::string corpus_to_jsonl(const Corpus& corpus);
Corpus corpus_from_jsonl(std::string_view text);
void save_corpus(const Corpus& corpus, const std::string& path);
Corpus load_corpus_archive(const std::string& path);

}  // namespace egap
