// Command-line front end: parse algebra documents, run the checks, print
// text or JSON reports.  Exit codes: 0 all checks pass, 1 a check failed
// (the report names it, with witness), 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "plonka/booleanisation.hpp"
#include "plonka/counting.hpp"
#include "plonka/document.hpp"
#include "plonka/metric.hpp"
#include "plonka/states.hpp"
#include "plonka/system.hpp"
#include "plonka/topology.hpp"

using nlohmann::json;
using namespace plonka;

namespace {

struct Options {
  std::string format = "text";
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultCarrierCap;
};

struct Report {
  json data = json::object();
  std::vector<std::string> lines;
  bool pass = true;

  void line(const std::string& text) { lines.push_back(text); }
  int emit(const Options& options) const {
    if (options.format == "json") {
      json out = data;
      out["pass"] = pass;
      std::cout << out.dump(2) << "\n";
    } else {
      for (const std::string& text : lines) std::cout << text << "\n";
    }
    return pass ? 0 : 1;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Document load(const std::string& path, DocKind expected, const char* what) {
  Document doc = parse_document(read_file(path));
  if (doc.kind != expected)
    throw Error("'" + path + "' is not a " + std::string(what) + " document");
  return doc;
}

/// Display names for the elements of a materialized sum (0_i, 1_i, primes).
std::vector<std::string> sum_element_names(const CompiledSystem& compiled, const PlonkaSum& sum) {
  const DirectSystem& system = compiled.system();
  std::vector<std::string> names;
  names.reserve(sum.raw.size);
  for (const PlonkaElement& e : sum.labels) {
    const bool constants = e.index == system.index().least();
    names.push_back(element_name(compiled.atom_names[static_cast<std::size_t>(e.index)], e.inner,
                                 constants ? ""
                                           : compiled.index_names[static_cast<std::size_t>(
                                                 e.index)]));
  }
  return names;
}

struct LoadedSystem {
  CompiledSystem compiled;
  PlonkaSum sum;
  std::vector<std::string> names;
};

/// Compiles and fully validates a system document; fills the report and
/// returns nothing if a law fails.
std::optional<LoadedSystem> require_system(const std::string& path, const Options& options,
                                           Report& report) {
  const Document doc = load(path, DocKind::System, "system");
  CompiledSystem compiled = compile_system(std::get<SystemDoc>(doc.body));
  if (!compiled.index_check.ok()) {
    report.pass = false;
    report.line("Invalid index semilattice: " + compiled.index_check.describe());
    report.data["fault"] = compiled.index_check.describe();
    return std::nullopt;
  }
  if (!compiled.system_check->ok()) {
    report.pass = false;
    report.line("Invalid direct system: " + compiled.system_check->describe());
    report.data["fault"] = compiled.system_check->describe();
    return std::nullopt;
  }
  PlonkaSum sum = plonka_sum(compiled.system(), options.cap);
  std::vector<std::string> names = sum_element_names(compiled, sum);
  return LoadedSystem{std::move(compiled), std::move(sum), std::move(names)};
}

struct LoadedState {
  CompiledState compiled;
  std::vector<Rat> values;  // table on the sum
  StateReport direct;
  StateReport componentwise;
  std::optional<State> state;  // engaged when valid
};

std::vector<Rat> table_from_componentwise(const LoadedSystem& loaded,
                                          const std::vector<std::vector<Rat>>& weights) {
  const DirectSystem& system = loaded.compiled.system();
  std::vector<Rat> values(loaded.sum.raw.size, Rat(0));
  for (std::uint32_t raw = 0; raw < loaded.sum.raw.size; ++raw) {
    const PlonkaElement e = loaded.sum.labels[raw];
    Rat total = 0;
    for (int a = 0; a < system.component(e.index).atom_count(); ++a)
      if (e.inner >> a & 1)
        total += weights[static_cast<std::size_t>(e.index)][static_cast<std::size_t>(a)];
    values[raw] = total;
  }
  return values;
}

LoadedState check_state(const LoadedSystem& loaded, const std::string& state_path) {
  const Document doc = load(state_path, DocKind::State, "state");
  LoadedState result;
  result.compiled = compile_state(std::get<StateDoc>(doc.body), loaded.compiled);
  const DirectSystem& system = loaded.compiled.system();
  const Decomposition dec = decompose(loaded.sum.raw);

  std::vector<std::vector<Rat>> component_weights;
  if (result.compiled.componentwise) {
    component_weights = result.compiled.component_weights;
  } else {
    // derive the per-component view from the top weights through the homs
    const int top = system.index().top();
    component_weights.resize(static_cast<std::size_t>(system.component_count()));
    MeasureCheck top_check = measure_check(system.component(top), result.compiled.top_weights);
    if (top_check.ok()) {
      const Measure m(system.component(top), result.compiled.top_weights);
      for (int i = 0; i < system.component_count(); ++i) {
        const BooleanHom& hom = system.hom(i, top);
        for (int a = 0; a < system.component(i).atom_count(); ++a)
          component_weights[static_cast<std::size_t>(i)].push_back(
              m.value(hom.apply(system.component(i).atom(a))));
      }
    } else {
      // still produce a table so the direct route can report the violations
      component_weights.assign(static_cast<std::size_t>(system.component_count()), {});
      component_weights[static_cast<std::size_t>(top)] = result.compiled.top_weights;
      for (int i = 0; i < system.component_count(); ++i)
        if (i != top)
          component_weights[static_cast<std::size_t>(i)].assign(
              static_cast<std::size_t>(system.component(i).atom_count()), Rat(0));
    }
  }
  result.componentwise = check_state_componentwise(system, component_weights);
  result.values = table_from_componentwise(loaded, component_weights);
  result.direct = check_state_direct(loaded.sum.raw, dec, result.values);
  if (result.direct.valid != result.componentwise.valid)
    throw InternalInconsistency("direct and componentwise validation disagree");
  if (result.direct.valid) {
    const int top = system.index().top();
    result.state = make_state(system, Measure(system.component(top),
                                              component_weights[static_cast<std::size_t>(top)]));
  }
  return result;
}

json weights_json(const CompiledSystem& compiled, int component, const Measure& m) {
  json out = json::object();
  for (int a = 0; a < m.algebra().atom_count(); ++a)
    out[compiled.atom_names[static_cast<std::size_t>(component)][static_cast<std::size_t>(a)]] =
        to_string(m.weight(a));
  return out;
}

std::string weights_text(const CompiledSystem& compiled, int component, const Measure& m) {
  std::string text;
  for (int a = 0; a < m.algebra().atom_count(); ++a) {
    if (a) text += ", ";
    text +=
        compiled.atom_names[static_cast<std::size_t>(component)][static_cast<std::size_t>(a)] +
        "=" + to_string(m.weight(a));
  }
  return text;
}

int cmd_validate(const std::string& path, const Options& options) {
  Report report;
  const Document doc = parse_document(read_file(path));
  if (doc.kind == DocKind::System) {
    report.data["command"] = "validate";
    report.data["kind"] = "system";
    auto loaded = require_system(path, options, report);
    if (!loaded) return report.emit(options);
    const IbslCheck ibsl = check_ibsl(loaded->sum.raw);
    if (!ibsl.pass) throw InternalInconsistency("sum of a valid system " + ibsl.describe());
    report.line("Valid direct system; Płonka sum passes I1–I8");
    report.data["carrier"] = loaded->sum.raw.size;
    report.data["ibsl"] = true;
    return report.emit(options);
  }
  if (doc.kind == DocKind::Raw) {
    report.data["command"] = "validate";
    report.data["kind"] = "raw";
    const RawAlgebra algebra = compile_raw(std::get<RawDoc>(doc.body));
    const IbslCheck ibsl = check_ibsl(algebra);
    report.data["ibsl"] = ibsl.pass;
    if (!ibsl.pass) {
      report.pass = false;
      report.line("Raw algebra " + ibsl.describe());
      report.data["fault"] = ibsl.describe();
      return report.emit(options);
    }
    const PartitionCheck partition = check_partition_function(algebra);
    report.data["partition_function"] = partition.pass;
    if (!partition.pass) {
      report.pass = false;
      report.line("Raw algebra passes I1–I8 but " + partition.describe());
      report.data["fault"] = partition.describe();
      return report.emit(options);
    }
    report.line("Raw algebra passes I1–I8; x∧(x∨y) is a partition function");
    return report.emit(options);
  }
  throw Error("validate expects a system or raw document");
}

int cmd_decompose(const std::string& path, const Options& options) {
  Report report;
  report.data["command"] = "decompose";
  const Document doc = load(path, DocKind::Raw, "raw");
  const auto& raw_doc = std::get<RawDoc>(doc.body);
  const RawAlgebra algebra = compile_raw(raw_doc);
  const IbslCheck ibsl = check_ibsl(algebra);
  if (!ibsl.pass) {
    report.pass = false;
    report.line("Not an involutive bisemilattice: " + ibsl.describe());
    report.data["fault"] = ibsl.describe();
    return report.emit(options);
  }
  const Decomposition dec = decompose(algebra);
  report.line("Decomposed into " + std::to_string(dec.system.component_count()) +
              " Boolean components");
  json components = json::array();
  for (int i = 0; i < dec.system.component_count(); ++i) {
    std::string members;
    for (std::uint32_t raw : dec.component_raw[static_cast<std::size_t>(i)]) {
      if (!members.empty()) members += ", ";
      members += raw_doc.elements[raw];
    }
    report.line("  component k" + std::to_string(i) + " (" +
                std::to_string(dec.system.component(i).size()) + " elements): {" + members + "}");
    components.push_back({{"index", "k" + std::to_string(i)},
                          {"size", dec.system.component(i).size()},
                          {"members", members}});
  }
  report.data["components"] = components;
  const Document out = document_from_system(dec.system, doc.name + "-system");
  report.line("");
  std::istringstream stream(print_document(out));
  for (std::string text; std::getline(stream, text);) report.line(text);
  report.data["system"] = print_document(out);
  return report.emit(options);
}

int cmd_sum(const std::string& path, const Options& options) {
  Report report;
  report.data["command"] = "sum";
  auto loaded = require_system(path, options, report);
  if (!loaded) return report.emit(options);
  const RawAlgebra& raw = loaded->sum.raw;
  report.line("Płonka sum carrier: " + std::to_string(raw.size) + " elements");
  report.data["carrier"] = raw.size;
  report.data["elements"] = loaded->names;
  auto table = [&](const char* label, auto&& cell) {
    report.line(label);
    for (std::uint32_t a = 0; a < raw.size; ++a) {
      std::string row = "  " + loaded->names[a] + ":";
      for (std::uint32_t b = 0; b < raw.size; ++b) row += " " + loaded->names[cell(a, b)];
      report.line(row);
    }
  };
  table("join table:", [&raw](std::uint32_t a, std::uint32_t b) { return raw.join(a, b); });
  table("meet table:", [&raw](std::uint32_t a, std::uint32_t b) { return raw.meet(a, b); });
  std::string comp_row = "not:";
  for (std::uint32_t a = 0; a < raw.size; ++a) comp_row += " " + loaded->names[raw.comp(a)];
  report.line(comp_row);
  report.data["zero"] = loaded->names[raw.zero];
  report.data["one"] = loaded->names[raw.one];
  return report.emit(options);
}

int cmd_booleanise(const std::string& path, const Options& options) {
  Report report;
  report.data["command"] = "booleanise";
  auto loaded = require_system(path, options, report);
  if (!loaded) return report.emit(options);
  const Booleanisation b = booleanise(loaded->compiled.system(), loaded->sum);
  report.line("Booleanisation: " + std::to_string(b.quotient.size()) + " elements (" +
              std::to_string(b.quotient.atom_count()) + " atoms), the top component");
  report.data["size"] = b.quotient.size();
  report.data["trivial"] = is_trivial_booleanisation(loaded->compiled.system());
  json classes = json::object();
  for (Elem q = 0; q < b.quotient.size(); ++q) {
    std::string members;
    for (std::uint32_t raw : b.classes[q]) {
      if (!members.empty()) members += ", ";
      members += loaded->names[raw];
    }
    const std::string rep =
        loaded->names[loaded->sum.id_of({b.top_index, q})];
    report.line("  [" + rep + "] = {" + members + "}");
    classes[rep] = members;
  }
  report.data["classes"] = classes;
  report.data["sections"] = to_string(b.section_count());
  report.line("distinct sections: " + to_string(b.section_count()));
  return report.emit(options);
}

int cmd_check_state(const std::string& system_path, const std::string& state_path,
                    const Options& options) {
  Report report;
  report.data["command"] = "check-state";
  auto loaded = require_system(system_path, options, report);
  if (!loaded) return report.emit(options);
  const LoadedState state = check_state(*loaded, state_path);
  report.data["valid"] = state.direct.valid;
  report.data["faithful"] = state.direct.faithful;
  report.data["routes_agree"] = state.direct.valid == state.componentwise.valid;
  if (!state.direct.valid) {
    report.pass = false;
    report.line(state.direct.describe());
    report.line("componentwise route: " + state.componentwise.describe());
    return report.emit(options);
  }
  report.line(state.direct.describe());
  report.line("componentwise route agrees: " + state.componentwise.describe());
  const Decomposition dec = decompose(loaded->sum.raw);
  const AltStateCheck alt = check_alt_state(loaded->sum.raw, dec, state.values);
  report.line("alternative (global-zero) condition: " + alt.describe());
  report.data["alternative_condition"] = alt.satisfies;
  const AltEquivalenceCertificate cert =
      alt_state_equivalence(loaded->compiled.system(), loaded->sum, options.seed);
  report.line("alternative-notion certificate: " + std::to_string(cert.extensions_tested) +
              " constant extensions, " + std::to_string(cert.candidates_tested) +
              " candidate tables, " +
              std::to_string(cert.extension_failures + cert.restriction_failures) + " failures");
  report.data["alternative_certificate_ok"] = cert.ok();
  if (!cert.ok()) report.pass = false;
  return report.emit(options);
}

int cmd_phi(const std::string& system_path, const std::string& state_path,
            const Options& options) {
  Report report;
  report.data["command"] = "phi";
  auto loaded = require_system(system_path, options, report);
  if (!loaded) return report.emit(options);
  const LoadedState state = check_state(*loaded, state_path);
  if (!state.direct.valid) {
    report.pass = false;
    report.line("state " + state.direct.describe());
    return report.emit(options);
  }
  const Booleanisation b = booleanise(loaded->compiled.system(), loaded->sum);
  const Measure m = quotient_measure_from_table(loaded->sum, b, state.values);
  report.line("Φ(s): measure on the Booleanisation with atom weights " +
              weights_text(loaded->compiled, b.top_index, m));
  report.data["weights"] = weights_json(loaded->compiled, b.top_index, m);
  report.data["regular"] = m.is_regular();
  return report.emit(options);
}

int cmd_phi_inverse(const std::string& system_path, const std::string& measure_path,
                    const Options& options) {
  Report report;
  report.data["command"] = "phi-inverse";
  auto loaded = require_system(system_path, options, report);
  if (!loaded) return report.emit(options);
  const Document doc = load(measure_path, DocKind::Measure, "measure");
  const std::vector<Rat> weights =
      compile_measure(std::get<MeasureDoc>(doc.body), loaded->compiled);
  const DirectSystem& system = loaded->compiled.system();
  const int top = system.index().top();
  const MeasureCheck check = measure_check(system.component(top), weights);
  if (!check.ok()) {
    report.pass = false;
    report.line(check.describe());
    report.data["fault"] = check.describe();
    return report.emit(options);
  }
  const CarriesState carries = carries_state(system);
  if (!carries.carries) {
    report.pass = false;
    report.line("no state exists: component k" + std::to_string(carries.trivial_component) +
                " is trivial");
    return report.emit(options);
  }
  const State state = state_from_quotient_measure(system, Measure(system.component(top), weights));
  std::vector<std::vector<Rat>> component_weights;
  json components = json::object();
  for (int i = 0; i < system.component_count(); ++i) {
    const Measure restriction = restrict_state(system, state, i);
    component_weights.push_back(restriction.weights());
    const std::string index = loaded->compiled.index_names[static_cast<std::size_t>(i)];
    report.line("component " + index + ": " + weights_text(loaded->compiled, i, restriction));
    components[index] = weights_json(loaded->compiled, i, restriction);
  }
  const StateReport componentwise =
      check_state_componentwise(system, component_weights);
  report.line("componentwise validation: " + componentwise.describe());
  report.data["components"] = components;
  report.data["valid"] = componentwise.valid;
  if (!componentwise.valid) report.pass = false;
  return report.emit(options);
}

int cmd_faithful(const std::string& system_path, const std::string& state_path,
                 const Options& options) {
  Report report;
  report.data["command"] = "faithful";
  auto loaded = require_system(system_path, options, report);
  if (!loaded) return report.emit(options);
  const LoadedState state = check_state(*loaded, state_path);
  if (!state.direct.valid) {
    report.pass = false;
    report.line("state " + state.direct.describe());
    return report.emit(options);
  }
  const FaithfulDiagnosis diagnosis =
      faithful_diagnosis(loaded->compiled.system(), *state.state);
  report.line(std::string("faithful: ") + (diagnosis.faithful ? "yes" : "no"));
  report.line(std::string("  all restrictions regular: ") +
              (diagnosis.restrictions_regular ? "yes" : "no"));
  report.line(std::string("  all transition homs injective: ") +
              (diagnosis.homs_injective ? "yes" : "no"));
  report.data["faithful"] = diagnosis.faithful;
  report.data["restrictions_regular"] = diagnosis.restrictions_regular;
  report.data["homs_injective"] = diagnosis.homs_injective;
  report.pass = diagnosis.faithful;
  return report.emit(options);
}

int cmd_metric(const std::string& system_path, const std::string& state_path,
               const Options& options) {
  Report report;
  report.data["command"] = "metric";
  auto loaded = require_system(system_path, options, report);
  if (!loaded) return report.emit(options);
  const LoadedState state = check_state(*loaded, state_path);
  if (!state.direct.valid) {
    report.pass = false;
    report.line("state " + state.direct.describe());
    return report.emit(options);
  }
  const PseudometricSpace space =
      pseudometric(loaded->compiled.system(), loaded->sum, *state.state);
  report.line("pseudometric axioms verified exhaustively (" + std::to_string(space.size) +
              " elements)");
  report.line("distance table:");
  for (std::uint32_t a = 0; a < space.size; ++a) {
    std::string row = "  " + loaded->names[a] + ":";
    for (std::uint32_t b = 0; b < space.size; ++b) row += " " + to_string(space.d(a, b));
    report.line(row);
  }
  const Booleanisation b = booleanise(loaded->compiled.system(), loaded->sum);
  const MetricCertificate cert =
      is_metric_certificate(space, loaded->compiled.system(), b, *state.state);
  report.line(std::string("is a metric: ") + (cert.metric ? "yes" : "no") +
              (cert.metric ? "" : " (some distinct elements at distance 0)"));
  report.data["metric"] = cert.metric;
  report.data["quotient_fibers_singleton"] = cert.quotient_fibers_singleton;
  report.data["criterion_matches"] = cert.criterion_matches;
  return report.emit(options);
}

int cmd_quotient(const std::string& system_path, const std::string& state_path,
                 const Options& options) {
  Report report;
  report.data["command"] = "quotient";
  auto loaded = require_system(system_path, options, report);
  if (!loaded) return report.emit(options);
  const LoadedState state = check_state(*loaded, state_path);
  if (!state.direct.valid) {
    report.pass = false;
    report.line("state " + state.direct.describe());
    return report.emit(options);
  }
  const PseudometricSpace space =
      pseudometric(loaded->compiled.system(), loaded->sum, *state.state);
  const Booleanisation b = booleanise(loaded->compiled.system(), loaded->sum);
  const KolmogorovResult kolmogorov =
      kolmogorov_quotient(space, loaded->compiled.system(), b, *state.state);
  report.line("Kolmogorov quotient: " + std::to_string(kolmogorov.classes.size()) +
              " indistinguishability classes");
  for (const auto& cls : kolmogorov.classes) {
    std::string members;
    for (std::uint32_t raw : cls) {
      if (!members.empty()) members += ", ";
      members += loaded->names[raw];
    }
    report.line("  {" + members + "}");
  }
  report.line(std::string("hypotheses (injective + faithful): ") +
              (kolmogorov.hypotheses_met ? "met" : "not met"));
  report.line(std::string("classes coincide with the Booleanisation classes: ") +
              (kolmogorov.matches_booleanisation ? "yes" : "no"));
  report.data["classes"] = kolmogorov.classes.size();
  report.data["hypotheses_met"] = kolmogorov.hypotheses_met;
  report.data["matches_booleanisation"] = kolmogorov.matches_booleanisation;
  return report.emit(options);
}

int cmd_topology(const std::string& system_path, const std::string& state_path,
                 const Options& options) {
  Report report;
  report.data["command"] = "topology";
  auto loaded = require_system(system_path, options, report);
  if (!loaded) return report.emit(options);
  const LoadedState state = check_state(*loaded, state_path);
  if (!state.direct.valid) {
    report.pass = false;
    report.line("state " + state.direct.describe());
    return report.emit(options);
  }
  const DirectSystem& system = loaded->compiled.system();
  const PseudometricSpace space = pseudometric(system, loaded->sum, *state.state);
  const Booleanisation b = booleanise(system, loaded->sum);
  const Measure mu = quotient_measure(system, *state.state);
  const PseudometricSpace quotient_space = quotient_pseudometric(b, mu);
  const bool hypotheses = is_injective_system(system) && is_faithful(system, *state.state);
  const TopologyReport topo = topology_report(space, quotient_space, b, hypotheses);

  report.line(std::string("hypotheses (injective + faithful): ") +
              (topo.hypotheses_met ? "met" : "not met (informational mode)"));
  report.line(std::string("every open π-saturated: ") + (topo.opens_saturated ? "yes" : "no"));
  report.line(std::string("π open and closed: ") +
              (topo.projection_open && topo.projection_closed ? "yes" : "no"));
  report.line(std::string("π interior-preserving: ") +
              (topo.interior.preserving ? "yes" : "no"));
  if (!topo.interior.preserving) {
    std::string witness;
    for (std::uint32_t x : topo.interior.witness) {
      if (!witness.empty()) witness += ", ";
      witness += loaded->names[x];
    }
    report.line("  witness subset: {" + witness + "}");
  }
  report.line(std::string("  matches the singleton-fiber criterion: ") +
              (topo.interior.matches_singleton_criterion ? "yes" : "no"));
  report.line(std::string("Reg(B) ≅ Reg(A_∞): ") + (topo.reg.isomorphic ? "yes" : "no") +
              (topo.reg.full_table_checked
                   ? " (full table over " + std::to_string(topo.reg.opens_checked) + " opens)"
                   : ""));
  if (topo.capped) report.line("note: " + topo.cap_note);

  const Section section = make_section(b);
  const SectionCertificate cert =
      verify_section(section, b, space, quotient_space, state.values, mu);
  report.line(std::string("canonical section: retraction ") + (cert.retraction ? "ok" : "FAIL") +
              ", continuous " + (cert.continuous ? "ok" : "FAIL") + ", dense " +
              (cert.dense ? "ok" : "FAIL") + ", state-preserving " +
              (cert.preserves_state ? "ok" : "FAIL"));
  if (hypotheses) {
    const UniquenessCertificate unique =
        state_uniqueness_check(system, loaded->sum, b, *state.state);
    report.line(std::string("unique continuous extension equals the state: ") +
                (unique.equals_state ? "yes" : "no"));
    report.data["unique_extension"] = unique.equals_state;
  }
  report.data["opens_saturated"] = topo.opens_saturated;
  report.data["projection_open"] = topo.projection_open;
  report.data["projection_closed"] = topo.projection_closed;
  report.data["interior_preserving"] = topo.interior.preserving;
  report.data["interior_criterion_matches"] = topo.interior.matches_singleton_criterion;
  report.data["reg_isomorphic"] = topo.reg.isomorphic;
  report.data["section_ok"] = cert.all();
  report.pass = topo.opens_saturated && topo.projection_open && topo.projection_closed &&
                topo.interior.matches_singleton_criterion && topo.reg.isomorphic && cert.all();
  return report.emit(options);
}

int cmd_count(std::vector<int> nd, std::vector<int> forest_args, std::vector<int> chain_args,
              const Options& options) {
  Report report;
  report.data["command"] = "count";
  const int given = (nd.empty() ? 0 : 1) + (forest_args.empty() ? 0 : 1) +
                    (chain_args.empty() ? 0 : 1);
  if (given != 1) throw Error("count needs exactly one of --nd, --forests, --chain-factor");
  if (!nd.empty()) {
    const CountingResult result = n_d(nd[0], nd[1]);
    report.line("N_d = " + to_string(result.value) + " (chain " + to_string(result.chain_factor) +
                " × forests " + to_string(result.forest_count) + ")");
    report.data["n"] = result.n;
    report.data["k"] = result.k;
    report.data["chain_factor"] = to_string(result.chain_factor);
    report.data["forest_count"] = to_string(result.forest_count);
    report.data["value"] = to_string(result.value);
  } else if (!forest_args.empty()) {
    const Int value = forests(forest_args[0]);
    report.line("forests(" + std::to_string(forest_args[0]) + ") = " + to_string(value));
    report.data["m"] = forest_args[0];
    report.data["value"] = to_string(value);
    if (forest_args[0] <= 7) {
      const Int oracle = forest_oracle(forest_args[0]);
      report.line("oracle (exhaustive graph enumeration): " + to_string(oracle));
      report.data["oracle"] = to_string(oracle);
      if (oracle != value) report.pass = false;
    }
  } else {
    const ChainFactor result = chain_factor(chain_args[0], chain_args[1]);
    report.line("chain-factor(" + std::to_string(chain_args[0]) + ", " +
                std::to_string(chain_args[1]) + ") = " + to_string(result.binomial_route) +
                " (subset route = binomial route)");
    report.data["value"] = to_string(result.binomial_route);
  }
  return report.emit(options);
}

int cmd_enumerate(int n, int k, const Options& options) {
  Report report;
  report.data["command"] = "enumerate";
  const InclusiveEnumeration result = enumerate_inclusive(n, k);
  report.line("inclusive isomorphism classes (n=" + std::to_string(n) +
              ", k=" + std::to_string(k) + "): " + std::to_string(result.classes.size()));
  report.line("formula N_d = " + to_string(result.formula));
  report.line(std::string("enumeration agrees with the formula: ") +
              (result.agrees ? "yes" : "NO"));
  if (!result.note.empty()) report.line("note: " + result.note);
  for (std::size_t c = 0; c < result.classes.size(); ++c) {
    const DirectSystem& system = result.classes[c];
    std::string shape = "  class " + std::to_string(c + 1) + ": atoms";
    for (int i = 0; i < system.component_count(); ++i)
      shape += " " + std::to_string(system.component(i).atom_count());
    shape += is_injective_system(system) ? " (injective)" : " (NOT injective)";
    report.line(shape);
  }
  report.data["count"] = result.classes.size();
  report.data["formula"] = to_string(result.formula);
  report.data["agrees"] = result.agrees;
  report.data["note"] = result.note;
  report.pass = result.agrees;
  return report.emit(options);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for Płonka sums of finite Boolean algebras"};
  app.require_subcommand(1);
  Options options;
  if (const char* env_cap = std::getenv("PLONKA_CAP")) options.cap = std::strtoull(env_cap, nullptr, 10);
  app.add_option("--format", options.format, "report encoding")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", options.seed, "seed for randomized certificates")
      ->capture_default_str();
  app.add_option("--cap", options.cap, "carrier cap for materialized sums (PLONKA_CAP honored)")
      ->capture_default_str();

  std::string file_a, file_b;
  auto* validate = app.add_subcommand("validate", "validate a system or raw document");
  validate->add_option("file", file_a)->required();
  auto* decompose_cmd = app.add_subcommand("decompose", "decompose a raw IBSL");
  decompose_cmd->add_option("file", file_a)->required();
  auto* sum = app.add_subcommand("sum", "materialize the Płonka sum of a system");
  sum->add_option("file", file_a)->required();
  auto* booleanise_cmd = app.add_subcommand("booleanise", "compute the Booleanisation");
  booleanise_cmd->add_option("file", file_a)->required();
  auto* check_state_cmd = app.add_subcommand("check-state", "validate a state document");
  check_state_cmd->add_option("system", file_a)->required();
  check_state_cmd->add_option("state", file_b)->required();
  auto* phi = app.add_subcommand("phi", "the measure on the Booleanisation for a state");
  phi->add_option("system", file_a)->required();
  phi->add_option("state", file_b)->required();
  auto* phi_inverse = app.add_subcommand("phi-inverse", "the state for a measure on the top");
  phi_inverse->add_option("system", file_a)->required();
  phi_inverse->add_option("measure", file_b)->required();
  auto* faithful = app.add_subcommand("faithful", "faithfulness diagnosis for a state");
  faithful->add_option("system", file_a)->required();
  faithful->add_option("state", file_b)->required();
  auto* metric = app.add_subcommand("metric", "state pseudometric with axioms and table");
  metric->add_option("system", file_a)->required();
  metric->add_option("state", file_b)->required();
  auto* quotient = app.add_subcommand("quotient", "Kolmogorov quotient and comparison");
  quotient->add_option("system", file_a)->required();
  quotient->add_option("state", file_b)->required();
  auto* topology = app.add_subcommand("topology", "full topology report");
  topology->add_option("system", file_a)->required();
  topology->add_option("state", file_b)->required();
  auto* count = app.add_subcommand("count", "counting formulas");
  std::vector<int> nd, forest_args, chain_args;
  count->add_option("--nd", nd, "N_d(n, k)")->expected(2);
  count->add_option("--forests", forest_args, "labeled forests on m vertices")->expected(1);
  count->add_option("--chain-factor", chain_args, "chain factor, both routes")->expected(2);
  auto* enumerate = app.add_subcommand("enumerate", "enumerate inclusive structures");
  int enum_n = 0, enum_k = 0;
  enumerate->add_option("n", enum_n)->required();
  enumerate->add_option("k", enum_k)->required();
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(file_a, options);
    if (decompose_cmd->parsed()) return cmd_decompose(file_a, options);
    if (sum->parsed()) return cmd_sum(file_a, options);
    if (booleanise_cmd->parsed()) return cmd_booleanise(file_a, options);
    if (check_state_cmd->parsed()) return cmd_check_state(file_a, file_b, options);
    if (phi->parsed()) return cmd_phi(file_a, file_b, options);
    if (phi_inverse->parsed()) return cmd_phi_inverse(file_a, file_b, options);
    if (faithful->parsed()) return cmd_faithful(file_a, file_b, options);
    if (metric->parsed()) return cmd_metric(file_a, file_b, options);
    if (quotient->parsed()) return cmd_quotient(file_a, file_b, options);
    if (topology->parsed()) return cmd_topology(file_a, file_b, options);
    if (count->parsed()) return cmd_count(nd, forest_args, chain_args, options);
    if (enumerate->parsed()) return cmd_enumerate(enum_n, enum_k, options);
  } catch (const ParseError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.column << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
