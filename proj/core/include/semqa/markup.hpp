#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semqa {

enum class SegmentKind { FreeText, Quote };

// One piece of a quoted answer: either connector text or a span attributed
// to a 1-based source index.
struct Segment {
  SegmentKind kind = SegmentKind::FreeText;
  int source_index = 0;  // meaningful for quotes only
  std::string text;

  static Segment free_text(std::string text);
  static Segment quote(int source_index, std::string text);

  bool is_quote() const { return kind == SegmentKind::Quote; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

// An answer as an ordered mix of free text and source-attributed quotes.
struct QuotedAnswer {
  std::vector<Segment> segments;
  std::optional<int> source_count_hint;

  // Canonical form: adjacent free-text segments coalesced, empty free-text
  // segments dropped, quote spans trimmed of surrounding whitespace.
  QuotedAnswer canonical() const;
  bool has_quotes() const;
  int max_source_index() const;

  friend bool operator==(const QuotedAnswer&, const QuotedAnswer&) = default;
};

enum class ParseMode { Strict, Lenient };

enum class ParseErrorKind {
  UnmatchedOpenBracket,
  UnmatchedCloseBracket,
  MissingIndex,
  IndexOutOfRange,
  EmptySpan,
  NestedQuote,
};

std::string_view to_string(ParseErrorKind kind);

struct ParseIssue {
  ParseErrorKind kind = ParseErrorKind::UnmatchedOpenBracket;
  std::size_t position = 0;  // byte offset into the input text
  std::string detail;
};

class MarkupError : public std::runtime_error {
 public:
  explicit MarkupError(ParseIssue issue);
  const ParseIssue& issue() const { return issue_; }

 private:
  ParseIssue issue_;
};

struct ParseResult {
  QuotedAnswer answer;
  // In lenient mode, one entry per demoted construct; always empty in strict
  // mode (strict failures throw MarkupError instead).
  std::vector<ParseIssue> warnings;
};

// Parses `[ k span ]` markup. Strict mode throws MarkupError on any malformed
// construct; lenient mode never fails and demotes bad constructs to free text.
ParseResult parse(std::string_view text, ParseMode mode,
                  std::optional<int> source_count = std::nullopt);

// Emits the canonical textual form: quotes as `[ k span ]`, free text verbatim.
std::string serialize(const QuotedAnswer& answer);

// Concatenation, in answer order, of the spans quoted from source k,
// joined by single spaces. Empty when source k is never quoted.
std::string psi_k(const QuotedAnswer& answer, int k);

// The answer rendered as plain text with all attribution marks removed.
// Free-text spacing is preserved verbatim. At a junction that touches a
// quote, whitespace runs collapse to a single space; when the junction has
// no whitespace at all, one space is inserted unless either contact
// character is punctuation (so `"` + `span` stays fused, `a` + `b` gets a
// separating space).
std::string strip_marks(const QuotedAnswer& answer);

// Byte range a quote span occupies inside the stripped text.
struct QuoteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  int source_index = 0;
};

struct StrippedAnswer {
  std::string text;
  std::vector<QuoteSpan> quotes;  // in answer order
};

// strip_marks plus the location of every quote in the result; used by
// renderers and the sentence-citation converter.
StrippedAnswer strip_marks_with_spans(const QuotedAnswer& answer);

}  // namespace semqa
