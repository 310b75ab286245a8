#pragma once

// Parser for BioNLP shared-task standoff annotation files (.a1/.a2/.ann).
// One annotation per physical line:
//
//   T1<TAB>Protein 0 3<TAB>YAP            text-bound annotation (trigger)
//   E2<TAB>Regulation:T3 Theme:E1 Cause:T1 event annotation
//
// M/A/N/*/# lines are classified and kept verbatim but carry no model
// content. Parsing is total: every line becomes exactly one of
// trigger/event/ignored/diagnostic.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "st2x/diagnostics.hpp"

namespace st2x {

// Orders annotation ids numerically within a letter prefix: T2 < T10 < T10_x.
// Ids without a numeric part fall back to plain byte comparison.
struct AnnotationIdLess {
  using Key = std::tuple<std::string_view, long long, std::string_view>;

  static Key split(std::string_view id) {
    std::size_t i = 0;
    while (i < id.size() && std::isalpha(static_cast<unsigned char>(id[i]))) ++i;
    std::size_t j = i;
    while (j < id.size() && std::isdigit(static_cast<unsigned char>(id[j]))) ++j;
    long long num = -1;
    if (j > i && j - i <= 18) num = std::stoll(std::string(id.substr(i, j - i)));
    return {id.substr(0, i), num, id.substr(j)};
  }

  bool operator()(std::string_view a, std::string_view b) const {
    Key ka = split(a), kb = split(b);
    if (ka != kb) return ka < kb;
    return a < b;
  }
  // allow heterogeneous lookup
  using is_transparent = void;
};

struct TextBoundAnnotation {
  std::string id;        // "T" + digits
  std::string ann_type;  // e.g. "Protein", "Phosphorylation"
  long start = 0;        // 0-based, inclusive
  long end = 0;          // exclusive
  std::string text;      // annotated surface string

  bool operator==(const TextBoundAnnotation&) const = default;
};

// Canonical role names. Role tokens with a trailing index digit
// ("Theme2") are normalized to (name, index).
inline const std::vector<std::string>& canonical_roles() {
  static const std::vector<std::string> roles = {
      "Theme", "Cause", "Product", "Site", "AtLoc",
      "FromLoc", "ToLoc", "Participant", "Complex"};
  return roles;
}

struct RoleBinding {
  std::string role;    // canonical name when recognized, verbatim otherwise
  int index = 1;       // 1 for "Theme", 2 for "Theme2", ...
  std::string target;  // T- or E-prefixed annotation id

  bool operator==(const RoleBinding&) const = default;
};

struct EventAnnotation {
  std::string id;          // "E" + digits
  std::string event_type;  // e.g. "Phosphorylation"
  std::string trigger;     // T-prefixed annotation id
  std::vector<RoleBinding> roles;  // source-line order

  bool operator==(const EventAnnotation&) const = default;

  // all bindings whose canonical role matches `name`, in source order
  std::vector<const RoleBinding*> roles_named(std::string_view name) const {
    std::vector<const RoleBinding*> out;
    for (const auto& r : roles)
      if (r.role == name) out.push_back(&r);
    return out;
  }
  const RoleBinding* first_role(std::string_view name) const {
    for (const auto& r : roles)
      if (r.role == name) return &r;
    return nullptr;
  }
  bool has_role(std::string_view name) const { return first_role(name) != nullptr; }
};

struct IgnoredLine {
  int line = 0;
  std::string kind;  // modifier | attribute | normalization | equivalence | note | blank
  std::string raw;
};

using ParseResult = std::variant<TextBoundAnnotation, EventAnnotation, IgnoredLine, Diagnostic>;

template <class T>
using IdMap = std::map<std::string, T, AnnotationIdLess>;

struct StandoffDocument {
  std::string doc_id;
  IdMap<TextBoundAnnotation> triggers;
  IdMap<EventAnnotation> events;
  std::vector<IgnoredLine> ignored_lines;
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

inline bool is_ws(char c) { return c == ' ' || c == '\t'; }

inline std::string_view skip_ws(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && is_ws(s[i])) ++i;
  return s.substr(i);
}

// take the next run of non-whitespace characters
inline std::string_view take_token(std::string_view& s) {
  s = skip_ws(s);
  std::size_t i = 0;
  while (i < s.size() && !is_ws(s[i])) ++i;
  std::string_view tok = s.substr(0, i);
  s = s.substr(i);
  return tok;
}

inline bool matches_id(std::string_view tok, char prefix) {
  if (tok.size() < 2 || tok[0] != prefix) return false;
  return std::all_of(tok.begin() + 1, tok.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

inline bool is_annotation_ref(std::string_view tok) {
  return matches_id(tok, 'T') || matches_id(tok, 'E');
}

inline std::optional<long> parse_offset(std::string_view tok) {
  if (tok.empty() || tok.size() > 12) return std::nullopt;
  long v = 0;
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + (c - '0');
  }
  return v;
}

// Normalize a role token: strip a trailing index ("Theme2" -> Theme, 2) and
// canonicalize case against the known role names. Unrecognized names are
// kept verbatim with index 1.
inline RoleBinding normalize_role(std::string_view name, std::string target) {
  std::string_view base = name;
  std::size_t d = base.size();
  while (d > 0 && std::isdigit(static_cast<unsigned char>(base[d - 1]))) --d;
  int index = 1;
  if (d < base.size() && base.size() - d <= 6) {
    long v = std::stol(std::string(base.substr(d)));
    if (v >= 1) {
      index = static_cast<int>(v);
      base = base.substr(0, d);
    }
  }
  for (const auto& canon : canonical_roles()) {
    if (base.size() == canon.size() &&
        std::equal(base.begin(), base.end(), canon.begin(), [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        })) {
      return {canon, index, std::move(target)};
    }
  }
  return {std::string(name), 1, std::move(target)};
}

}  // namespace detail

// Classifies and parses one physical line (no trailing newline).
// T-lines and E-lines become annotations; M/A/N/*/# lines and blank lines
// are ignored records; anything else is a MALFORMED_LINE error.
inline ParseResult parse_line(std::string_view line, int line_number) {
  using namespace detail;

  std::string_view rest = line;
  if (skip_ws(rest).empty())
    return IgnoredLine{line_number, "blank", std::string(line)};

  auto malformed = [&](const std::string& why) {
    return Diagnostic::error(diag::MALFORMED_LINE, line_number,
                             why + ": '" + std::string(line) + "'");
  };

  char head = skip_ws(rest).front();
  switch (head) {
    case 'M':
      return IgnoredLine{line_number, "modifier", std::string(line)};
    case 'A':
      return IgnoredLine{line_number, "attribute", std::string(line)};
    case 'N':
      return IgnoredLine{line_number, "normalization", std::string(line)};
    case '*':
      return IgnoredLine{line_number, "equivalence", std::string(line)};
    case '#':
      return IgnoredLine{line_number, "note", std::string(line)};
    default:
      break;
  }

  std::string_view id = take_token(rest);

  if (matches_id(id, 'T')) {
    std::string_view type = take_token(rest);
    if (type.empty()) return malformed("missing annotation type");
    std::string_view start_tok = take_token(rest);
    std::string_view end_tok = take_token(rest);
    auto start = parse_offset(start_tok);
    auto end = parse_offset(end_tok);
    if (!start) return malformed("non-numeric start offset");
    if (!end) return malformed("non-numeric end offset");  // covers "0 3;5 8" spans
    if (*start >= *end) return malformed("empty or inverted span");
    if (rest.empty() || !is_ws(rest.front())) return malformed("missing annotated text");
    std::string_view text = skip_ws(rest);
    if (text.empty()) return malformed("missing annotated text");
    return TextBoundAnnotation{std::string(id), std::string(type), *start, *end,
                               std::string(text)};
  }

  if (matches_id(id, 'E')) {
    std::string_view first = take_token(rest);
    std::size_t colon = first.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 >= first.size())
      return malformed("event requires Type:Trigger");
    std::string_view type = first.substr(0, colon);
    std::string_view trig = first.substr(colon + 1);
    if (!matches_id(trig, 'T')) return malformed("event trigger must be a T id");

    EventAnnotation ev{std::string(id), std::string(type), std::string(trig), {}};
    for (;;) {
      std::string_view tok = take_token(rest);
      if (tok.empty()) break;
      std::size_t c = tok.find(':');
      if (c == std::string_view::npos || c == 0 || c + 1 >= tok.size())
        return malformed("role requires Role:Target");
      std::string_view role = tok.substr(0, c);
      std::string_view target = tok.substr(c + 1);
      if (!is_annotation_ref(target)) return malformed("role target must be a T or E id");
      ev.roles.push_back(normalize_role(role, std::string(target)));
    }
    return ev;
  }

  return malformed("unrecognized annotation id");
}

// --- round-trip serialization (canonical tab-separated form) ---

inline std::string to_standoff(const TextBoundAnnotation& t) {
  std::ostringstream os;
  os << t.id << '\t' << t.ann_type << ' ' << t.start << ' ' << t.end << '\t' << t.text;
  return os.str();
}

inline std::string to_standoff(const EventAnnotation& e) {
  std::ostringstream os;
  os << e.id << '\t' << e.event_type << ':' << e.trigger;
  for (const auto& r : e.roles) {
    os << ' ' << r.role;
    if (r.index > 1) os << r.index;
    os << ':' << r.target;
  }
  return os.str();
}

// Parses one document from its source files (an .ann file, or an .a1/.a2
// pair, or a single .a1/.a2). Later files continue the merge; duplicate ids
// keep the first occurrence and record an error. Dangling references and
// unrecognized role names are reported as warnings, never dropped silently.
inline StandoffDocument parse_document(
    const std::string& doc_id,
    const std::vector<std::pair<std::string, std::string>>& sources) {
  StandoffDocument doc;
  doc.doc_id = doc_id;

  std::map<std::string, int> event_lines;

  for (const auto& [filename, content] : sources) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= content.size()) {
      std::size_t nl = content.find('\n', pos);
      std::string_view line;
      if (nl == std::string::npos) {
        if (pos >= content.size()) break;
        line = std::string_view(content).substr(pos);
        pos = content.size() + 1;
      } else {
        line = std::string_view(content).substr(pos, nl - pos);
        pos = nl + 1;
      }
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      if (line.empty()) continue;

      ParseResult res = parse_line(line, line_no);
      if (auto* t = std::get_if<TextBoundAnnotation>(&res)) {
        if (doc.triggers.count(t->id) || doc.events.count(t->id)) {
          doc.diagnostics.push_back(Diagnostic::error(
              diag::DUPLICATE_ID, line_no,
              filename + ": duplicate annotation id " + t->id + " (first occurrence kept)"));
        } else {
          doc.triggers.emplace(t->id, std::move(*t));
        }
      } else if (auto* e = std::get_if<EventAnnotation>(&res)) {
        if (doc.triggers.count(e->id) || doc.events.count(e->id)) {
          doc.diagnostics.push_back(Diagnostic::error(
              diag::DUPLICATE_ID, line_no,
              filename + ": duplicate annotation id " + e->id + " (first occurrence kept)"));
        } else {
          event_lines[e->id] = line_no;
          doc.events.emplace(e->id, std::move(*e));
        }
      } else if (auto* ig = std::get_if<IgnoredLine>(&res)) {
        doc.ignored_lines.push_back(std::move(*ig));
      } else {
        doc.diagnostics.push_back(std::get<Diagnostic>(std::move(res)));
      }
    }
  }

  // reference resolution: trigger ids, role targets, role names
  for (const auto& [id, ev] : doc.events) {
    int line = event_lines.count(id) ? event_lines[id] : 0;
    if (!doc.triggers.count(ev.trigger)) {
      doc.diagnostics.push_back(Diagnostic::warning(
          diag::DANGLING_REFERENCE, line,
          "event " + id + " references missing trigger " + ev.trigger));
    }
    for (const auto& r : ev.roles) {
      if (!doc.triggers.count(r.target) && !doc.events.count(r.target)) {
        doc.diagnostics.push_back(Diagnostic::warning(
            diag::DANGLING_REFERENCE, line,
            "event " + id + " role " + r.role + " references missing id " + r.target));
      }
      bool known = std::find(canonical_roles().begin(), canonical_roles().end(), r.role) !=
                   canonical_roles().end();
      if (!known) {
        doc.diagnostics.push_back(Diagnostic::warning(
            diag::UNKNOWN_ROLE, line,
            "event " + id + " uses unrecognized role name '" + r.role + "'"));
      }
    }
  }
  return doc;
}

}  // namespace st2x
