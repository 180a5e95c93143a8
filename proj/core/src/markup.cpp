#include "semqa/markup.hpp"

#include <charconv>
#include <utility>

#include "unicode.hpp"

namespace semqa {
namespace {

bool is_markup_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_markup_space(text[begin])) ++begin;
  while (end > begin && is_markup_space(text[end - 1])) --end;
  return std::string(text.substr(begin, end - begin));
}

bool all_digits(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Segment Segment::free_text(std::string text) {
  return Segment{SegmentKind::FreeText, 0, std::move(text)};
}

Segment Segment::quote(int source_index, std::string text) {
  return Segment{SegmentKind::Quote, source_index, std::move(text)};
}

QuotedAnswer QuotedAnswer::canonical() const {
  QuotedAnswer out;
  out.source_count_hint = source_count_hint;
  for (const Segment& segment : segments) {
    if (segment.is_quote()) {
      std::string text = trim(segment.text);
      if (text.empty()) continue;
      out.segments.push_back(Segment::quote(segment.source_index, std::move(text)));
      continue;
    }
    if (segment.text.empty()) continue;
    if (!out.segments.empty() && !out.segments.back().is_quote()) {
      out.segments.back().text += segment.text;
    } else {
      out.segments.push_back(segment);
    }
  }
  return out;
}

bool QuotedAnswer::has_quotes() const {
  for (const Segment& segment : segments) {
    if (segment.is_quote()) return true;
  }
  return false;
}

int QuotedAnswer::max_source_index() const {
  int max_index = 0;
  for (const Segment& segment : segments) {
    if (segment.is_quote() && segment.source_index > max_index) {
      max_index = segment.source_index;
    }
  }
  return max_index;
}

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::UnmatchedOpenBracket: return "UnmatchedOpenBracket";
    case ParseErrorKind::UnmatchedCloseBracket: return "UnmatchedCloseBracket";
    case ParseErrorKind::MissingIndex: return "MissingIndex";
    case ParseErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ParseErrorKind::EmptySpan: return "EmptySpan";
    case ParseErrorKind::NestedQuote: return "NestedQuote";
  }
  return "UnknownParseError";
}

namespace {

std::string format_issue(const ParseIssue& issue) {
  std::string message(to_string(issue.kind));
  message += " at byte ";
  message += std::to_string(issue.position);
  if (!issue.detail.empty()) {
    message += ": ";
    message += issue.detail;
  }
  return message;
}

}  // namespace

MarkupError::MarkupError(ParseIssue issue)
    : std::runtime_error(format_issue(issue)), issue_(std::move(issue)) {}

namespace {

struct QuoteScan {
  // Outcome of scanning one bracket construct starting at `open`.
  bool well_formed = false;       // grammar matched (index may still be bad)
  ParseIssue issue;               // meaningful when not fully valid
  bool valid = false;             // well-formed and index in range
  int source_index = 0;
  std::string span;
  std::size_t interior_begin = 0;  // first byte after '['
  std::size_t end = 0;             // first byte after the construct (for a
                                   // nested '[', the inner bracket itself)
};

// Scans the construct at text[open] == '['. Never throws; the caller decides
// how to treat the recorded issue per parse mode.
QuoteScan scan_quote(std::string_view text, std::size_t open,
                     std::optional<int> source_count) {
  QuoteScan scan;
  scan.interior_begin = open + 1;
  std::size_t i = open + 1;

  const std::size_t ws1_begin = i;
  while (i < text.size() && is_markup_space(text[i])) ++i;
  const bool has_ws1 = i > ws1_begin;

  const std::size_t token_begin = i;
  while (i < text.size() && !is_markup_space(text[i]) && text[i] != '[' &&
         text[i] != ']') {
    ++i;
  }
  const std::string_view token = text.substr(token_begin, i - token_begin);

  while (i < text.size() && is_markup_space(text[i])) ++i;

  const std::size_t span_begin = i;
  while (i < text.size() && text[i] != '[' && text[i] != ']') ++i;

  if (i >= text.size()) {
    scan.issue = {ParseErrorKind::UnmatchedOpenBracket, open,
                  "quote is never closed"};
    scan.end = text.size();
    return scan;
  }
  if (text[i] == '[') {
    scan.issue = {ParseErrorKind::NestedQuote, i,
                  "'[' inside a quote span"};
    scan.end = i;
    return scan;
  }

  // Closed construct; everything below consumes up to and including ']'.
  scan.end = i + 1;
  scan.span = trim(text.substr(span_begin, i - span_begin));

  if (!has_ws1 || !all_digits(token)) {
    scan.issue = {ParseErrorKind::MissingIndex, token_begin,
                  "expected '[ <index> <span> ]'"};
    return scan;
  }
  int index = 0;
  const auto result =
      std::from_chars(token.data(), token.data() + token.size(), index);
  if (result.ec != std::errc()) {
    scan.issue = {ParseErrorKind::MissingIndex, token_begin,
                  "index does not fit an integer"};
    return scan;
  }
  if (scan.span.empty()) {
    scan.issue = {ParseErrorKind::EmptySpan, span_begin, "empty quote span"};
    return scan;
  }
  scan.well_formed = true;
  scan.source_index = index;
  if (index < 1) {
    scan.issue = {ParseErrorKind::IndexOutOfRange, token_begin,
                  "source index must be >= 1"};
    return scan;
  }
  if (source_count && index > *source_count) {
    scan.issue = {ParseErrorKind::IndexOutOfRange, token_begin,
                  "source index " + std::to_string(index) + " exceeds " +
                      std::to_string(*source_count) + " sources"};
    return scan;
  }
  scan.valid = true;
  return scan;
}

}  // namespace

ParseResult parse(std::string_view text, ParseMode mode,
                  std::optional<int> source_count) {
  ParseResult result;
  result.answer.source_count_hint = source_count;
  std::vector<Segment>& segments = result.answer.segments;
  std::string free_text;

  const auto flush_free_text = [&] {
    if (!free_text.empty()) {
      segments.push_back(Segment::free_text(std::move(free_text)));
      free_text.clear();
    }
  };
  const auto fail_or_demote = [&](const ParseIssue& issue,
                                  std::string_view demoted) {
    if (mode == ParseMode::Strict) throw MarkupError(issue);
    free_text.append(demoted);
    result.warnings.push_back(issue);
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ']') {
      fail_or_demote({ParseErrorKind::UnmatchedCloseBracket, i,
                      "']' without a matching '['"},
                     text.substr(i, 1));
      ++i;
      continue;
    }
    if (c != '[') {
      free_text.push_back(c);
      ++i;
      continue;
    }

    const QuoteScan scan = scan_quote(text, i, source_count);
    if (scan.valid) {
      flush_free_text();
      segments.push_back(Segment::quote(scan.source_index, scan.span));
      i = scan.end;
      continue;
    }
    if (scan.well_formed) {
      // In-range grammar, bad index: demote the interior, drop the brackets.
      fail_or_demote(scan.issue,
                     text.substr(scan.interior_begin,
                                 scan.end - 1 - scan.interior_begin));
    } else {
      // Malformed construct: demote verbatim. For a nested '[', scan.end
      // points at the inner bracket so parsing resumes there.
      fail_or_demote(scan.issue, text.substr(i, scan.end - i));
    }
    i = scan.end;
  }
  flush_free_text();

  result.answer = result.answer.canonical();
  return result;
}

std::string serialize(const QuotedAnswer& answer) {
  std::string out;
  for (const Segment& segment : answer.segments) {
    if (!segment.is_quote()) {
      out += segment.text;
      continue;
    }
    out += "[ ";
    out += std::to_string(segment.source_index);
    out += ' ';
    out += segment.text;
    out += " ]";
  }
  return out;
}

std::string psi_k(const QuotedAnswer& answer, int k) {
  std::string out;
  for (const Segment& segment : answer.segments) {
    if (!segment.is_quote() || segment.source_index != k) continue;
    if (!out.empty()) out += ' ';
    out += segment.text;
  }
  return out;
}

namespace {

std::size_t trailing_space_run(std::string_view text) {
  std::size_t count = 0;
  while (count < text.size() && is_markup_space(text[text.size() - 1 - count])) {
    ++count;
  }
  return count;
}

std::size_t leading_space_run(std::string_view text) {
  std::size_t count = 0;
  while (count < text.size() && is_markup_space(text[count])) ++count;
  return count;
}

}  // namespace

StrippedAnswer strip_marks_with_spans(const QuotedAnswer& answer) {
  StrippedAnswer out;
  const QuotedAnswer canonical = answer.canonical();
  for (const Segment& segment : canonical.segments) {
    const std::string& piece = segment.text;
    if (out.text.empty()) {
      if (segment.is_quote()) {
        out.quotes.push_back({0, piece.size(), segment.source_index});
      }
      out.text = piece;
      continue;
    }
    // Every junction in canonical form touches a quote. Whitespace runs that
    // met at a removed marker collapse to one space; a junction with no
    // whitespace gets one inserted unless either contact character is
    // punctuation.
    const std::size_t left_ws = trailing_space_run(out.text);
    const std::size_t right_ws = leading_space_run(piece);
    std::string_view rest = piece;
    if (left_ws + right_ws > 0) {
      out.text.erase(out.text.size() - left_ws);
      out.text += ' ';
      rest.remove_prefix(right_ws);
    } else {
      const char32_t left = uni::codepoint_before(out.text, out.text.size());
      const char32_t right = uni::codepoint_at(piece, 0);
      if (!uni::is_punctuation(left) && !uni::is_punctuation(right)) {
        out.text += ' ';
      }
    }
    const std::size_t begin = out.text.size();
    out.text.append(rest);
    if (segment.is_quote()) {
      out.quotes.push_back({begin, out.text.size(), segment.source_index});
    }
  }
  return out;
}

std::string strip_marks(const QuotedAnswer& answer) {
  return strip_marks_with_spans(answer).text;
}

}  // namespace semqa
