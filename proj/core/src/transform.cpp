#include "semqa/transform.hpp"

#include <algorithm>

#include "semqa/textnorm.hpp"

namespace semqa {
namespace {

bool is_terminal(char c) { return c == '.' || c == '!' || c == '?'; }

std::string rtrim(std::string text) {
  while (!text.empty() &&
         (text.back() == ' ' || text.back() == '\t' || text.back() == '\n' ||
          text.back() == '\r')) {
    text.pop_back();
  }
  return text;
}

}  // namespace

std::string to_sentence_citations(const QuotedAnswer& answer) {
  const StrippedAnswer stripped = strip_marks_with_spans(answer);
  if (stripped.quotes.empty()) return stripped.text;

  std::string out;
  for (const SentenceSpan& span : split_sentence_spans(stripped.text)) {
    std::string sentence =
        stripped.text.substr(span.begin, span.end - span.begin);
    std::vector<int> sources;
    for (const QuoteSpan& quote : stripped.quotes) {
      if (quote.end <= span.begin || quote.begin >= span.end) continue;
      if (std::find(sources.begin(), sources.end(), quote.source_index) ==
          sources.end()) {
        sources.push_back(quote.source_index);
      }
    }
    if (!sources.empty()) {
      std::string citations;
      for (int source : sources) {
        citations += " [" + std::to_string(source) + "]";
      }
      if (!sentence.empty() && is_terminal(sentence.back())) {
        const char terminal = sentence.back();
        sentence.pop_back();
        sentence = rtrim(std::move(sentence)) + citations + terminal;
      } else {
        sentence += citations;
      }
    }
    if (!out.empty()) out += ' ';
    out += sentence;
  }
  return out;
}

namespace {

constexpr int kPaletteSize = 8;

const char* ansi_background(int source_index) {
  static const char* kCodes[kPaletteSize] = {
      "\x1b[44m", "\x1b[42m", "\x1b[43m", "\x1b[45m",
      "\x1b[46m", "\x1b[41m", "\x1b[104m", "\x1b[102m",
  };
  return kCodes[(source_index - 1) % kPaletteSize];
}

const char* html_color(int source_index) {
  static const char* kColors[kPaletteSize] = {
      "#aecbfa", "#ccff90", "#fff475", "#fdcfe8",
      "#a7ffeb", "#f28b82", "#d7aefb", "#cbf0f8",
  };
  return kColors[(source_index - 1) % kPaletteSize];
}

std::string html_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render_ansi(const QuotedAnswer& answer) {
  std::string out;
  for (const Segment& segment : answer.segments) {
    if (!segment.is_quote()) {
      out += segment.text;
      continue;
    }
    out += ansi_background(segment.source_index);
    out += segment.text;
    out += "\x1b[0m";
  }
  return out;
}

std::string render_html(const QuotedAnswer& answer) {
  std::vector<int> sources;
  for (const Segment& segment : answer.segments) {
    if (segment.is_quote() &&
        std::find(sources.begin(), sources.end(), segment.source_index) ==
            sources.end()) {
      sources.push_back(segment.source_index);
    }
  }
  std::sort(sources.begin(), sources.end());

  std::string out = "<style>\n.semqa-answer span { padding: 0 2px; }\n";
  for (int source : sources) {
    out += ".semqa-src-" + std::to_string(source) + " { background-color: " +
           html_color(source) + "; }\n";
  }
  out += "</style><div class=\"semqa-answer\">";
  for (const Segment& segment : answer.segments) {
    if (!segment.is_quote()) {
      out += html_escape(segment.text);
      continue;
    }
    out += "<span class=\"semqa-src-" + std::to_string(segment.source_index) +
           "\">" + html_escape(segment.text) + "</span>";
  }
  out += "</div>";
  return out;
}

}  // namespace

std::string render(const QuotedAnswer& answer, RenderTarget target) {
  return target == RenderTarget::Ansi ? render_ansi(answer)
                                      : render_html(answer);
}

namespace {

std::string collapse_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    const bool space = c == ' ' || c == '\t' || c == '\n' || c == '\r' ||
                       c == '\f' || c == '\v';
    if (space) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out += ' ';
      pending_space = false;
    }
    out += c;
  }
  return out;
}

// Longest common substring; returns (offset in haystack, length).
std::pair<std::size_t, std::size_t> longest_common_substring(
    std::string_view needle, std::string_view haystack) {
  if (needle.empty() || haystack.empty()) return {0, 0};
  std::vector<std::size_t> prev(haystack.size() + 1, 0);
  std::vector<std::size_t> curr(haystack.size() + 1, 0);
  std::size_t best_len = 0;
  std::size_t best_end = 0;
  for (std::size_t i = 1; i <= needle.size(); ++i) {
    for (std::size_t j = 1; j <= haystack.size(); ++j) {
      if (needle[i - 1] == haystack[j - 1]) {
        curr[j] = prev[j - 1] + 1;
        if (curr[j] > best_len) {
          best_len = curr[j];
          best_end = j;
        }
      } else {
        curr[j] = 0;
      }
    }
    std::swap(prev, curr);
  }
  return {best_end - best_len, best_len};
}

}  // namespace

std::vector<FaithfulnessViolation> check_faithfulness(
    const QuotedAnswer& answer, const std::vector<Passage>& passages) {
  std::vector<FaithfulnessViolation> violations;
  std::vector<std::string> collapsed;
  collapsed.reserve(passages.size());
  for (const Passage& passage : passages) {
    collapsed.push_back(collapse_whitespace(passage.text));
  }
  for (std::size_t s = 0; s < answer.segments.size(); ++s) {
    const Segment& segment = answer.segments[s];
    if (!segment.is_quote()) continue;
    if (segment.source_index < 1 ||
        static_cast<std::size_t>(segment.source_index) > passages.size()) {
      throw std::out_of_range(
          "check_faithfulness: quote cites source " +
          std::to_string(segment.source_index) + " but only " +
          std::to_string(passages.size()) + " passages were given");
    }
    const std::string& haystack = collapsed[segment.source_index - 1];
    const std::string needle = collapse_whitespace(segment.text);
    if (haystack.find(needle) != std::string::npos) continue;
    const auto [offset, length] = longest_common_substring(needle, haystack);
    violations.push_back({s, segment.source_index, segment.text, offset, length});
  }
  return violations;
}

}  // namespace semqa
