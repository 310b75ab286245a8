#pragma once

// Intermediate representation between the standoff parser and the two
// converters: triggers partitioned into entities and event anchors, events
// classified into handling categories, and the recursive Theme-chain
// resolution both converters rely on.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "st2x/diagnostics.hpp"
#include "st2x/mapping.hpp"
#include "st2x/standoff.hpp"

namespace st2x {

enum class EventCategory {
  Conversion,
  GeneExpression,
  Localization,
  Regulation,
  Degradation,
  BindingDissociation,
  Pathway,
  Unknown,
};

inline EventCategory classify_event(std::string_view event_type) {
  const std::string k = canonical_type_key(event_type);
  if (k == "phosphorylation" || k == "dephosphorylation" || k == "acetylation" ||
      k == "deacetylation" || k == "methylation" || k == "demethylation" ||
      k == "ubiquitination" || k == "deubiquitination" || k == "conversion")
    return EventCategory::Conversion;
  if (k == "geneexpression" || k == "transcription" || k == "translation")
    return EventCategory::GeneExpression;
  if (k == "localization" || k == "transport") return EventCategory::Localization;
  if (k == "regulation" || k == "positiveregulation" || k == "negativeregulation" ||
      k == "activation" || k == "inactivation" || k == "catalysis")
    return EventCategory::Regulation;
  if (k == "degradation" || k == "catabolism" || k == "proteincatabolism")
    return EventCategory::Degradation;
  if (k == "association" || k == "binding" || k == "dissociation")
    return EventCategory::BindingDissociation;
  if (k == "pathway") return EventCategory::Pathway;
  return EventCategory::Unknown;
}

struct PathwayGraph {
  std::string doc_id;
  IdMap<TextBoundAnnotation> entities;        // triggers of entity types (plus unknown types)
  IdMap<TextBoundAnnotation> event_triggers;  // triggers of event types
  IdMap<EventAnnotation> events;
  std::vector<Diagnostic> diagnostics;

  bool is_entity(std::string_view id) const { return entities.find(id) != entities.end(); }
  bool is_event(std::string_view id) const { return events.find(id) != events.end(); }

  const TextBoundAnnotation* entity(std::string_view id) const {
    auto it = entities.find(id);
    return it == entities.end() ? nullptr : &it->second;
  }
  const EventAnnotation* event(std::string_view id) const {
    auto it = events.find(id);
    return it == events.end() ? nullptr : &it->second;
  }
};

namespace detail {

// events reachable from themselves over Theme edges
inline std::set<std::string> theme_cycle_members(const IdMap<EventAnnotation>& events) {
  std::set<std::string> cyclic;
  for (const auto& [start, ev] : events) {
    (void)ev;
    // bounded walk: follow every Theme edge depth-first from `start`
    std::set<std::string> visited;
    std::vector<std::string> stack{start};
    bool found = false;
    while (!stack.empty() && !found) {
      std::string cur = stack.back();
      stack.pop_back();
      auto it = events.find(cur);
      if (it == events.end()) continue;
      for (const auto& role : it->second.roles) {
        if (role.role != "Theme") continue;
        if (role.target == start) {
          found = true;
          break;
        }
        if (visited.insert(role.target).second && events.count(role.target))
          stack.push_back(role.target);
      }
    }
    if (found) cyclic.insert(start);
  }
  return cyclic;
}

}  // namespace detail

// Builds the resolution-ready graph: triggers are partitioned by the
// mapping-table vocabularies (unknown types default to the entity side so
// they stay available as compartment sources), and structural problems in
// the event set are surfaced as diagnostics.
inline PathwayGraph build_graph(const StandoffDocument& doc,
                                const Mappings& mappings = Mappings::defaults()) {
  PathwayGraph g;
  g.doc_id = doc.doc_id;
  g.diagnostics = doc.diagnostics;

  for (const auto& [id, trig] : doc.triggers) {
    if (mappings.is_event_type(trig.ann_type)) {
      g.event_triggers.emplace(id, trig);
    } else {
      if (!mappings.is_entity_type(trig.ann_type)) {
        g.diagnostics.push_back(Diagnostic::warning(
            diag::UNKNOWN_TYPE, 0,
            "trigger " + id + " has unrecognized type '" + trig.ann_type + "'"));
      }
      g.entities.emplace(id, trig);
    }
  }
  g.events = doc.events;

  for (const auto& id : detail::theme_cycle_members(g.events)) {
    g.diagnostics.push_back(Diagnostic::warning(
        diag::CYCLIC_THEME, 0, "event " + id + " participates in a Theme cycle"));
  }

  for (const auto& [id, ev] : g.events) {
    const bool has_theme = ev.has_role("Theme");
    const bool has_cause = ev.has_role("Cause");
    if (classify_event(ev.event_type) == EventCategory::Localization && has_theme &&
        !ev.has_role("AtLoc") && !ev.has_role("FromLoc") && !ev.has_role("ToLoc")) {
      g.diagnostics.push_back(Diagnostic::warning(
          diag::THEME_ONLY_LOCALIZATION, 0,
          "localization event " + id + " carries only a Theme role"));
    }
    if (has_cause && !has_theme) {
      g.diagnostics.push_back(Diagnostic::warning(
          diag::MODIFIER_ONLY_EVENT, 0, "event " + id + " has a Cause but no Theme"));
    }
  }
  return g;
}

// Follows Theme targets through successive events until an event id in
// `realized` is reached. Entity targets, missing events, theme-less events
// and cycles all yield NotFound (an empty optional); cycles additionally
// record a CYCLIC_THEME diagnostic when a sink is supplied. Terminates in
// at most |events| hops.
inline std::optional<std::string> resolve_theme_chain(
    const PathwayGraph& graph, const std::string& event_id,
    const std::set<std::string>& realized, std::vector<Diagnostic>* diags = nullptr) {
  std::set<std::string> visited;
  std::string cur = event_id;
  for (;;) {
    if (!visited.insert(cur).second) {
      if (diags)
        diags->push_back(Diagnostic::warning(
            diag::CYCLIC_THEME, 0,
            "theme chain from " + event_id + " revisits " + cur));
      return std::nullopt;
    }
    const EventAnnotation* ev = graph.event(cur);
    if (!ev) return std::nullopt;
    const RoleBinding* theme = ev->first_role("Theme");
    if (!theme) return std::nullopt;
    if (realized.count(theme->target)) return theme->target;
    if (!graph.is_event(theme->target)) return std::nullopt;
    cur = theme->target;
  }
}

}  // namespace st2x
