#pragma once

// The four annotation-type mapping tables as pure lookups: entity type to
// SBO term, event type to SBO/GO term, entity type to BioPAX class, event
// type to BioPAX interaction class. Lookups are case-insensitive and ignore
// underscores/spaces, since shared-task corpora vary in capitalization.
//
// The built-in tables are the defaults; `Mappings` can dump them as a TSV
// for auditing and load a TSV that extends or overrides individual rows.

#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace st2x {

enum class TermNamespace { SBO, GO };

struct OntologyTerm {
  TermNamespace ns = TermNamespace::SBO;
  std::string identifier;  // "SBO:0000252" / "GO:0006476"
  std::string label;

  bool operator==(const OntologyTerm&) const = default;
  bool is_sbo() const { return ns == TermNamespace::SBO; }
};

// BioPAX Level 3 class names used by the converters.
enum class BiopaxClass {
  PhysicalEntity,
  Protein,
  Dna,
  Rna,
  Gene,
  SmallMolecule,
  Complex,
  CellularLocationVocabulary,
  Conversion,
  BiochemicalReaction,
  TemplateReaction,
  Catalysis,
  Degradation,
  ComplexAssembly,
  Control,
  Transport,
};

inline const char* biopax_class_name(BiopaxClass c) {
  switch (c) {
    case BiopaxClass::PhysicalEntity: return "PhysicalEntity";
    case BiopaxClass::Protein: return "Protein";
    case BiopaxClass::Dna: return "Dna";
    case BiopaxClass::Rna: return "Rna";
    case BiopaxClass::Gene: return "Gene";
    case BiopaxClass::SmallMolecule: return "SmallMolecule";
    case BiopaxClass::Complex: return "Complex";
    case BiopaxClass::CellularLocationVocabulary: return "CellularLocationVocabulary";
    case BiopaxClass::Conversion: return "Conversion";
    case BiopaxClass::BiochemicalReaction: return "BiochemicalReaction";
    case BiopaxClass::TemplateReaction: return "TemplateReaction";
    case BiopaxClass::Catalysis: return "Catalysis";
    case BiopaxClass::Degradation: return "Degradation";
    case BiopaxClass::ComplexAssembly: return "ComplexAssembly";
    case BiopaxClass::Control: return "Control";
    case BiopaxClass::Transport: return "Transport";
  }
  return "PhysicalEntity";
}

// canonical lookup key: lowercase, underscores and spaces removed
inline std::string canonical_type_key(std::string_view type) {
  std::string key;
  key.reserve(type.size());
  for (char c : type) {
    if (c == '_' || c == ' ') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return key;
}

struct Mappings {
  std::map<std::string, OntologyTerm> entity_sbo;      // key canonicalized
  std::map<std::string, OntologyTerm> event_term;      // key canonicalized
  std::map<std::string, BiopaxClass> entity_biopax;    // key canonicalized
  std::map<std::string, BiopaxClass> event_biopax;     // key canonicalized
  std::map<std::string, std::string> modification;     // event type -> feature vocabulary
  std::map<std::string, std::string> completion;       // event type -> product name template
                                                       //   ({name} = substrate, {type} = lowercased type)

  // display names for TSV export, keyed canonically
  std::map<std::string, std::string> display_names;

  static const Mappings& defaults();

  std::optional<OntologyTerm> lookup_entity_sbo(std::string_view type) const {
    auto it = entity_sbo.find(canonical_type_key(type));
    if (it == entity_sbo.end()) return std::nullopt;
    return it->second;
  }
  std::optional<OntologyTerm> lookup_event_term(std::string_view type) const {
    auto it = event_term.find(canonical_type_key(type));
    if (it == event_term.end()) return std::nullopt;
    return it->second;
  }
  std::optional<BiopaxClass> lookup_entity_biopax(std::string_view type) const {
    auto it = entity_biopax.find(canonical_type_key(type));
    if (it == entity_biopax.end()) return std::nullopt;
    return it->second;
  }
  std::optional<BiopaxClass> lookup_event_biopax(std::string_view type) const {
    auto it = event_biopax.find(canonical_type_key(type));
    if (it == event_biopax.end()) return std::nullopt;
    return it->second;
  }
  std::string modification_vocab(std::string_view event_type) const {
    auto it = modification.find(canonical_type_key(event_type));
    return it == modification.end() ? std::string("modified residue") : it->second;
  }

  bool is_entity_type(std::string_view type) const {
    std::string k = canonical_type_key(type);
    return entity_sbo.count(k) || entity_biopax.count(k);
  }
  bool is_event_type(std::string_view type) const {
    std::string k = canonical_type_key(type);
    return event_term.count(k) || event_biopax.count(k);
  }

  // Renders the synthesized product name for a completed reaction:
  // "pho{name}" with name=Akt1 gives phoAkt1. Falls back to
  // "{type}_{name}" for types without a template.
  std::string completion_product_name(std::string_view event_type,
                                      std::string_view substrate_name) const {
    auto it = completion.find(canonical_type_key(event_type));
    std::string tmpl = it == completion.end() ? std::string("{type}_{name}") : it->second;
    std::string type_lc;
    for (char c : event_type)
      type_lc.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    std::string out;
    for (std::size_t i = 0; i < tmpl.size();) {
      if (tmpl.compare(i, 6, "{name}") == 0) {
        out += substrate_name;
        i += 6;
      } else if (tmpl.compare(i, 6, "{type}") == 0) {
        out += type_lc;
        i += 6;
      } else {
        out.push_back(tmpl[i++]);
      }
    }
    return out;
  }

  std::string dump_tsv() const;
  // merges TSV rows over the current tables; throws std::runtime_error on
  // malformed input
  void load_tsv(std::istream& in);
};

namespace detail {

inline void put_entity_sbo(Mappings& m, const char* key, const char* id, const char* label) {
  m.entity_sbo[canonical_type_key(key)] = {TermNamespace::SBO, id, label};
  m.display_names[canonical_type_key(key)] = key;
}
inline void put_event_term(Mappings& m, const char* key, TermNamespace ns, const char* id,
                           const char* label) {
  m.event_term[canonical_type_key(key)] = {ns, id, label};
  m.display_names[canonical_type_key(key)] = key;
}
inline void put_entity_bp(Mappings& m, const char* key, BiopaxClass c) {
  m.entity_biopax[canonical_type_key(key)] = c;
  m.display_names[canonical_type_key(key)] = key;
}
inline void put_event_bp(Mappings& m, const char* key, BiopaxClass c) {
  m.event_biopax[canonical_type_key(key)] = c;
  m.display_names[canonical_type_key(key)] = key;
}

inline Mappings build_default_mappings() {
  Mappings m;

  // entity type -> SBO term
  put_entity_sbo(m, "Complex", "SBO:0000253", "non-covalent complex");
  put_entity_sbo(m, "Gene_or_gene_product", "SBO:0000245", "macromolecule");
  put_entity_sbo(m, "Dna", "SBO:0000251", "deoxyribonucleic acid");
  put_entity_sbo(m, "DnaRegion", "SBO:0000251", "deoxyribonucleic acid");
  put_entity_sbo(m, "Drug", "SBO:0000247", "simple chemical");
  put_entity_sbo(m, "Ion", "SBO:0000327", "non-macromolecular ion");
  put_entity_sbo(m, "Protein", "SBO:0000252", "polypeptide chain");
  put_entity_sbo(m, "Rna", "SBO:0000250", "ribonucleic acid");
  put_entity_sbo(m, "RnaRegion", "SBO:0000250", "ribonucleic acid");
  put_entity_sbo(m, "Gene", "SBO:0000354", "informational molecule segment");
  put_entity_sbo(m, "SmallMolecule", "SBO:0000247", "simple chemical");
  put_entity_sbo(m, "Simple_molecule", "SBO:0000247", "simple chemical");

  // event type -> SBO/GO term
  const auto SBO = TermNamespace::SBO;
  const auto GO = TermNamespace::GO;
  put_event_term(m, "Conversion", SBO, "SBO:0000182", "conversion");
  put_event_term(m, "Acetylation", SBO, "SBO:0000215", "acetylation");
  put_event_term(m, "Deacetylation", GO, "GO:0006476", "Protein Deacetylation");
  put_event_term(m, "Methylation", SBO, "SBO:0000214", "Methylation");
  put_event_term(m, "Demethylation", GO, "GO:0006482", "Protein Demethylation");
  put_event_term(m, "Phosphorylation", SBO, "SBO:0000216", "phosphorylation");
  // id authoritative; label follows the SBO entry for 0000330
  put_event_term(m, "Dephosphorylation", SBO, "SBO:0000330", "dephosphorylation");
  put_event_term(m, "Ubiquitination", SBO, "SBO:0000224", "Ubiquitination");
  put_event_term(m, "Deubiquitination", GO, "GO:0016579", "Protein Deubiquitination");
  put_event_term(m, "Degradation", SBO, "SBO:0000179", "degradation");
  put_event_term(m, "Catabolism", GO, "GO:0009056", "Catabolic Process");
  put_event_term(m, "Catalysis", SBO, "SBO:0000172", "Catalysis");
  put_event_term(m, "Protein_catabolism", GO, "GO:0009056", "Catabolic Process");
  put_event_term(m, "Association", SBO, "SBO:0000177", "non-covalent binding");
  put_event_term(m, "Binding", SBO, "SBO:0000177", "non-covalent binding");
  put_event_term(m, "Dissociation", SBO, "SBO:0000180", "dissociation");
  put_event_term(m, "Regulation", GO, "GO:0065007", "biological regulation");
  put_event_term(m, "Positive_regulation", GO, "GO:0048518", "positive regulation");
  put_event_term(m, "Activation", SBO, "SBO:0000412", "biological activity");
  put_event_term(m, "Negative_regulation", GO, "GO:0048519", "negative regulation");
  put_event_term(m, "Inactivation", SBO, "SBO:0000412", "biological activity");
  put_event_term(m, "Gene_expression", GO, "GO:0010467", "Genetic Production");
  put_event_term(m, "Transcription", SBO, "SBO:0000183", "Transcription");
  put_event_term(m, "Translation", SBO, "SBO:0000184", "Translation");
  put_event_term(m, "Localization", GO, "GO:0051179", "Localization");
  put_event_term(m, "Transport", SBO, "SBO:0000185", "Transport Reaction");
  put_event_term(m, "Pathway", SBO, "SBO:0000375", "Process");

  // entity type -> BioPAX class
  put_entity_bp(m, "Cellular_component", BiopaxClass::CellularLocationVocabulary);
  put_entity_bp(m, "Complex", BiopaxClass::Complex);
  put_entity_bp(m, "DNA", BiopaxClass::Dna);
  put_entity_bp(m, "Drug", BiopaxClass::PhysicalEntity);
  put_entity_bp(m, "Entity", BiopaxClass::PhysicalEntity);
  put_entity_bp(m, "Gene_or_gene_product", BiopaxClass::PhysicalEntity);
  put_entity_bp(m, "Gene_product", BiopaxClass::PhysicalEntity);
  put_entity_bp(m, "Gene", BiopaxClass::Gene);
  put_entity_bp(m, "Ion", BiopaxClass::PhysicalEntity);
  put_entity_bp(m, "Protein", BiopaxClass::Protein);
  put_entity_bp(m, "Receptor", BiopaxClass::PhysicalEntity);
  put_entity_bp(m, "RNA", BiopaxClass::Rna);
  put_entity_bp(m, "Simple_molecule", BiopaxClass::SmallMolecule);
  put_entity_bp(m, "Simple_chemical", BiopaxClass::SmallMolecule);
  put_entity_bp(m, "Tag", BiopaxClass::PhysicalEntity);

  // event type -> BioPAX interaction class
  put_event_bp(m, "Conversion", BiopaxClass::Conversion);
  put_event_bp(m, "Acetylation", BiopaxClass::BiochemicalReaction);
  put_event_bp(m, "Deacetylation", BiopaxClass::BiochemicalReaction);
  put_event_bp(m, "Methylation", BiopaxClass::BiochemicalReaction);
  put_event_bp(m, "Demethylation", BiopaxClass::BiochemicalReaction);
  put_event_bp(m, "Phosphorylation", BiopaxClass::BiochemicalReaction);
  put_event_bp(m, "Dephosphorylation", BiopaxClass::BiochemicalReaction);
  put_event_bp(m, "Ubiquitination", BiopaxClass::BiochemicalReaction);
  put_event_bp(m, "Deubiquitination", BiopaxClass::BiochemicalReaction);
  put_event_bp(m, "Gene_expression", BiopaxClass::TemplateReaction);
  put_event_bp(m, "Transcription", BiopaxClass::TemplateReaction);
  put_event_bp(m, "Translation", BiopaxClass::TemplateReaction);
  put_event_bp(m, "Catalysis", BiopaxClass::Catalysis);
  put_event_bp(m, "Degradation", BiopaxClass::Degradation);
  put_event_bp(m, "Catabolism", BiopaxClass::Degradation);
  put_event_bp(m, "Protein_catabolism", BiopaxClass::Degradation);
  put_event_bp(m, "Association", BiopaxClass::ComplexAssembly);
  put_event_bp(m, "Binding", BiopaxClass::ComplexAssembly);
  put_event_bp(m, "Dissociation", BiopaxClass::ComplexAssembly);
  put_event_bp(m, "Regulation", BiopaxClass::Control);
  put_event_bp(m, "Positive_regulation", BiopaxClass::Catalysis);
  put_event_bp(m, "Activation", BiopaxClass::Control);
  put_event_bp(m, "Negative_regulation", BiopaxClass::Control);
  put_event_bp(m, "Inactivation", BiopaxClass::Control);
  put_event_bp(m, "Localization", BiopaxClass::Transport);
  put_event_bp(m, "Transport", BiopaxClass::Transport);

  // covalent-modification feature vocabulary
  m.modification[canonical_type_key("Phosphorylation")] = "phosphorylated residue";
  m.modification[canonical_type_key("Dephosphorylation")] = "dephosphorylated residue";
  m.modification[canonical_type_key("Acetylation")] = "acetylated residue";
  m.modification[canonical_type_key("Deacetylation")] = "deacetylated residue";
  m.modification[canonical_type_key("Methylation")] = "methylated residue";
  m.modification[canonical_type_key("Demethylation")] = "demethylated residue";
  m.modification[canonical_type_key("Ubiquitination")] = "ubiquitinylated residue";
  m.modification[canonical_type_key("Deubiquitination")] = "deubiquitinylated residue";

  // completed-product naming templates
  m.completion[canonical_type_key("Phosphorylation")] = "pho{name}";
  m.completion[canonical_type_key("Ubiquitination")] = "ub{name}";
  m.completion[canonical_type_key("Acetylation")] = "ace{name}";
  m.completion[canonical_type_key("Methylation")] = "met{name}";
  m.completion[canonical_type_key("Dephosphorylation")] = "{name}_demod";
  m.completion[canonical_type_key("Deacetylation")] = "{name}_demod";
  m.completion[canonical_type_key("Demethylation")] = "{name}_demod";
  m.completion[canonical_type_key("Deubiquitination")] = "{name}_demod";

  return m;
}

}  // namespace detail

inline const Mappings& Mappings::defaults() {
  static const Mappings m = detail::build_default_mappings();
  return m;
}

inline std::string Mappings::dump_tsv() const {
  std::ostringstream os;
  os << "# st2x mapping tables\n"
     << "# columns: table<TAB>key<TAB>value<TAB>label\n"
     << "# tables: entity_sbo, event_term, entity_biopax, event_biopax,\n"
     << "#         modification (feature vocabulary), completion (product name template;\n"
     << "#         {name} = substrate name, {type} = lowercased event type)\n";
  auto display = [&](const std::string& key) {
    auto it = display_names.find(key);
    return it == display_names.end() ? key : it->second;
  };
  for (const auto& [k, v] : entity_sbo)
    os << "entity_sbo\t" << display(k) << '\t' << v.identifier << '\t' << v.label << '\n';
  for (const auto& [k, v] : event_term)
    os << "event_term\t" << display(k) << '\t' << v.identifier << '\t' << v.label << '\n';
  for (const auto& [k, v] : entity_biopax)
    os << "entity_biopax\t" << display(k) << '\t' << biopax_class_name(v) << "\t\n";
  for (const auto& [k, v] : event_biopax)
    os << "event_biopax\t" << display(k) << '\t' << biopax_class_name(v) << "\t\n";
  for (const auto& [k, v] : modification)
    os << "modification\t" << display(k) << '\t' << v << "\t\n";
  for (const auto& [k, v] : completion)
    os << "completion\t" << display(k) << '\t' << v << "\t\n";
  return os.str();
}

inline void Mappings::load_tsv(std::istream& in) {
  auto parse_term = [](const std::string& id, const std::string& label) -> OntologyTerm {
    if (id.rfind("SBO:", 0) == 0) return {TermNamespace::SBO, id, label};
    if (id.rfind("GO:", 0) == 0) return {TermNamespace::GO, id, label};
    throw std::runtime_error("mapping TSV: unknown term namespace in '" + id + "'");
  };
  auto parse_class = [](const std::string& name) -> BiopaxClass {
    for (int c = 0; c <= static_cast<int>(BiopaxClass::Transport); ++c) {
      auto cls = static_cast<BiopaxClass>(c);
      if (name == biopax_class_name(cls)) return cls;
    }
    throw std::runtime_error("mapping TSV: unknown BioPAX class '" + name + "'");
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::size_t pos = 0;
    while (cols.size() < 4) {
      std::size_t tab = line.find('\t', pos);
      if (tab == std::string::npos) {
        cols.push_back(line.substr(pos));
        break;
      }
      cols.push_back(line.substr(pos, tab - pos));
      pos = tab + 1;
    }
    if (cols.size() < 3)
      throw std::runtime_error("mapping TSV line " + std::to_string(line_no) +
                               ": expected at least 3 columns");
    const std::string& table = cols[0];
    const std::string key = canonical_type_key(cols[1]);
    const std::string& value = cols[2];
    const std::string label = cols.size() > 3 ? cols[3] : "";
    display_names[key] = cols[1];
    if (table == "entity_sbo")
      entity_sbo[key] = parse_term(value, label);
    else if (table == "event_term")
      event_term[key] = parse_term(value, label);
    else if (table == "entity_biopax")
      entity_biopax[key] = parse_class(value);
    else if (table == "event_biopax")
      event_biopax[key] = parse_class(value);
    else if (table == "modification")
      modification[key] = value;
    else if (table == "completion")
      completion[key] = value;
    else
      throw std::runtime_error("mapping TSV line " + std::to_string(line_no) +
                               ": unknown table '" + table + "'");
  }
}

// --- default-table lookups ---

inline std::optional<OntologyTerm> entity_to_sbo(std::string_view entity_type) {
  return Mappings::defaults().lookup_entity_sbo(entity_type);
}
inline std::optional<OntologyTerm> event_to_term(std::string_view event_type) {
  return Mappings::defaults().lookup_event_term(event_type);
}
inline std::optional<BiopaxClass> entity_to_biopax(std::string_view entity_type) {
  return Mappings::defaults().lookup_entity_biopax(entity_type);
}
inline std::optional<BiopaxClass> event_to_biopax(std::string_view event_type) {
  return Mappings::defaults().lookup_event_biopax(event_type);
}

}  // namespace st2x
