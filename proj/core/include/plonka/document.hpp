#ifndef PLONKA_DOCUMENT_HPP
#define PLONKA_DOCUMENT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "plonka/system.hpp"

namespace plonka {

// Line-oriented keyword documents.  A file holds exactly one document:
//
//   system <name>            raw <name>               state <name>
//   semilattice i0 i j k     elements 0 a a' 1 b b'   component i: a=1/2, a'=1/2
//   join i j = k             zero 0                   ...or...
//   component i atoms=2 a a' one 1                    top-measure c=1/2, d=1/6, e=1/3
//   hom i -> k: c=a, d=a'    join 0: 0 a a' 1 b b'
//                            meet 0: ...              measure <name>
//                            not: 1 a' a 0 b' b       weights c=1/2, d=1/6, e=1/3
//
// hom lines give the dual map, target-atom = source-atom.  Leading '#'
// comments belong to the document; parse ∘ print is the identity.

enum class DocKind { System, Raw, State, Measure };

struct SystemDoc {
  std::vector<std::string> indices;
  struct Join {
    std::string i, j, value;
    bool operator==(const Join&) const = default;
  };
  std::vector<Join> joins;
  struct Component {
    std::string index;
    std::vector<std::string> atoms;
    bool operator==(const Component&) const = default;
  };
  std::vector<Component> components;
  struct Hom {
    std::string source, target;
    std::vector<std::pair<std::string, std::string>> dual;  // target atom = source atom
    bool operator==(const Hom&) const = default;
  };
  std::vector<Hom> homs;

  bool operator==(const SystemDoc&) const = default;
};

struct RawDoc {
  std::vector<std::string> elements;
  std::string zero, one;
  std::vector<std::vector<std::string>> join_rows;  // one row per element, declaration order
  std::vector<std::vector<std::string>> meet_rows;
  std::vector<std::string> comp_row;

  bool operator==(const RawDoc&) const = default;
};

struct StateDoc {
  std::vector<std::pair<std::string, Rat>> top;  // engaged iff components empty
  struct ComponentWeights {
    std::string index;
    std::vector<std::pair<std::string, Rat>> weights;
    bool operator==(const ComponentWeights&) const = default;
  };
  std::vector<ComponentWeights> components;

  bool componentwise() const { return !components.empty(); }
  bool operator==(const StateDoc&) const = default;
};

struct MeasureDoc {
  std::vector<std::pair<std::string, Rat>> weights;

  bool operator==(const MeasureDoc&) const = default;
};

struct Document {
  DocKind kind = DocKind::System;
  std::string name;
  std::vector<std::string> comments;  // leading comment lines, without '#'
  std::variant<SystemDoc, RawDoc, StateDoc, MeasureDoc> body;

  bool operator==(const Document&) const = default;
};

/// Parses one document.  Besides syntax this validates the internal
/// cross-references: names declared once (DuplicateName), every reference
/// resolving (UnresolvedReference), join table and hom dual maps complete.
Document parse_document(std::string_view text);

/// Canonical printer; emits entries in stored order so that
/// parse(print(d)) == d.
std::string print_document(const Document& doc);

/** A system document compiled into core structures, with the name tables
 * needed to render reports.  Law failures are check results, not errors. */
struct CompiledSystem {
  SemilatticeCheck index_check;
  std::optional<SystemCheck> system_check;  // engaged when the index validates
  std::vector<std::string> index_names;
  std::vector<std::vector<std::string>> atom_names;

  bool ok() const { return system_check && system_check->ok(); }
  const DirectSystem& system() const { return *system_check->system; }
};

CompiledSystem compile_system(const SystemDoc& doc);

/// Raw tables by element position; RawDoc is self-contained.
RawAlgebra compile_raw(const RawDoc& doc);

struct CompiledState {
  bool componentwise = false;
  std::vector<std::vector<Rat>> component_weights;  // one per component, system order
  std::vector<Rat> top_weights;                     // atom order of the top component
};

/// Resolves a state document against a compiled system (UnresolvedReference
/// on unknown names, Syntax on incomplete weight lists).
CompiledState compile_state(const StateDoc& doc, const CompiledSystem& system);

/// Resolves measure weights against the top component of a system.
std::vector<Rat> compile_measure(const MeasureDoc& doc, const CompiledSystem& system);

/// Display name for an element: 0_i/1_i (plain 0/1 when the subscript is
/// empty, i.e. the component holding the constants), atom names, primes for
/// co-atoms, and a {a,b,...} set for anything bigger.
std::string element_name(const std::vector<std::string>& atom_names, Elem bits,
                         const std::string& subscript);

/// Documents synthesized from core values (names generated positionally);
/// used to render results and by the round-trip tests.
Document document_from_system(const DirectSystem& system, const std::string& name);
Document document_from_raw(const RawAlgebra& algebra, const std::string& name,
                           const std::vector<std::string>& element_names);

}  // namespace plonka

#endif
