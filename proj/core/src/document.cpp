#include "plonka/document.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace plonka {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;
  std::vector<Token> tokens;  // specials '=', ',', ':', '->' are their own tokens
};

bool special(char c) { return c == '=' || c == ',' || c == ':'; }

std::vector<Line> tokenize(std::string_view text, std::vector<std::string>& comments) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  bool before_content = true;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++number;
    Line out;
    out.number = number;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      if (line[i] == '#') {
        if (before_content) {
          std::size_t start = i + 1;
          if (start < line.size() && line[start] == ' ') ++start;
          comments.emplace_back(line.substr(start));
        }
        i = line.size();
        continue;
      }
      const int column = static_cast<int>(i) + 1;
      if (special(line[i])) {
        out.tokens.push_back({std::string(1, line[i]), column});
        ++i;
        continue;
      }
      if (line[i] == '-' && i + 1 < line.size() && line[i + 1] == '>') {
        out.tokens.push_back({"->", column});
        i += 2;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r' &&
             line[j] != '#' && !special(line[j]) && !(line[j] == '-' && j + 1 < line.size() && line[j + 1] == '>'))
        ++j;
      out.tokens.push_back({std::string(line.substr(i, j - i)), column});
      i = j;
    }
    if (!out.tokens.empty()) {
      before_content = false;
      lines.push_back(std::move(out));
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return lines;
}

[[noreturn]] void syntax(const Line& line, int token_index, const std::string& expected) {
  const int column = token_index < static_cast<int>(line.tokens.size())
                         ? line.tokens[static_cast<std::size_t>(token_index)].column
                         : (line.tokens.empty() ? 1 : line.tokens.back().column + 1);
  throw ParseError(ParseError::Kind::Syntax, line.number, column, "expected " + expected);
}

class LineReader {
 public:
  explicit LineReader(const Line& line) : line_(line) {}

  bool done() const { return next_ >= line_.tokens.size(); }
  const Token& peek() const {
    if (done()) syntax(line_, static_cast<int>(next_), "more input");
    return line_.tokens[next_];
  }
  std::string take(const std::string& expected) {
    if (done()) syntax(line_, static_cast<int>(next_), expected);
    return line_.tokens[next_++].text;
  }
  std::string name(const std::string& what) {
    const Token& token = peek();
    if (token.text == "=" || token.text == "," || token.text == ":" || token.text == "->")
      syntax(line_, static_cast<int>(next_), what);
    ++next_;
    return token.text;
  }
  void expect(const std::string& literal) {
    if (done() || peek().text != literal) syntax(line_, static_cast<int>(next_), "'" + literal + "'");
    ++next_;
  }
  void finish() {
    if (!done()) syntax(line_, static_cast<int>(next_), "end of line");
  }
  const Line& line() const { return line_; }

 private:
  const Line& line_;
  std::size_t next_ = 0;
};

Rat read_rational(LineReader& reader) {
  const Token token = reader.peek();
  const std::string text = reader.name("a rational p/q");
  // names may contain '/', so reuse the strict parser and re-raise in place
  try {
    return parse_rational(text);
  } catch (const BadRange&) {
    throw ParseError(ParseError::Kind::Syntax, reader.line().number, token.column,
                     "expected a rational p/q");
  }
}

std::vector<std::pair<std::string, Rat>> read_weight_list(LineReader& reader) {
  std::vector<std::pair<std::string, Rat>> weights;
  while (!reader.done()) {
    std::string atom = reader.name("an atom name");
    reader.expect("=");
    weights.emplace_back(std::move(atom), read_rational(reader));
    if (!reader.done()) reader.expect(",");
  }
  return weights;
}

void require_unique(const std::vector<std::string>& names, const Line& line, int column_hint) {
  for (std::size_t a = 0; a < names.size(); ++a)
    for (std::size_t b = a + 1; b < names.size(); ++b)
      if (names[a] == names[b])
        throw ParseError(ParseError::Kind::DuplicateName, line.number, column_hint,
                         "duplicate name '" + names[a] + "'");
}

int position_of(const std::vector<std::string>& names, const Token& token, const Line& line) {
  const auto it = std::ranges::find(names, token.text);
  if (it == names.end())
    throw ParseError(ParseError::Kind::UnresolvedReference, line.number, token.column,
                     "unknown name '" + token.text + "'");
  return static_cast<int>(it - names.begin());
}

Document parse_system(const std::string& name, std::vector<std::string> comments,
                      std::span<const Line> lines) {
  SystemDoc doc;
  const Line* semilattice_line = nullptr;
  for (const Line& line : lines) {
    LineReader reader(line);
    const std::string keyword = reader.take("a keyword");
    if (keyword == "semilattice") {
      if (semilattice_line)
        throw ParseError(ParseError::Kind::Syntax, line.number, 1, "second semilattice block");
      while (!reader.done()) doc.indices.push_back(reader.name("an index name"));
      if (doc.indices.empty()) syntax(line, 1, "at least one index");
      require_unique(doc.indices, line, 1);
      semilattice_line = &line;
    } else if (keyword == "join") {
      if (!semilattice_line) syntax(line, 0, "semilattice before join");
      SystemDoc::Join join;
      const Token ti = reader.peek();
      join.i = reader.name("an index");
      (void)position_of(doc.indices, ti, line);
      const Token tj = reader.peek();
      join.j = reader.name("an index");
      (void)position_of(doc.indices, tj, line);
      reader.expect("=");
      const Token tv = reader.peek();
      join.value = reader.name("an index");
      (void)position_of(doc.indices, tv, line);
      reader.finish();
      doc.joins.push_back(std::move(join));
    } else if (keyword == "component") {
      if (!semilattice_line) syntax(line, 0, "semilattice before component");
      SystemDoc::Component component;
      const Token tidx = reader.peek();
      component.index = reader.name("an index");
      (void)position_of(doc.indices, tidx, line);
      for (const SystemDoc::Component& seen : doc.components)
        if (seen.index == component.index)
          throw ParseError(ParseError::Kind::DuplicateName, line.number, tidx.column,
                           "component '" + component.index + "' declared twice");
      const Token tatoms = reader.peek();
      const std::string atoms_token = reader.take("atoms=<n>");
      if (atoms_token != "atoms") syntax(line, 0, "atoms=<n>");
      reader.expect("=");
      const std::string count_text = reader.take("an atom count");
      int count = -1;
      try {
        count = std::stoi(count_text);
      } catch (...) {
        syntax(line, 0, "an atom count");
      }
      if (count < 0 || count > kMaxAtoms)
        throw ParseError(ParseError::Kind::Syntax, line.number, tatoms.column,
                         "atom count out of range");
      while (!reader.done()) component.atoms.push_back(reader.name("an atom name"));
      if (static_cast<int>(component.atoms.size()) != count)
        throw ParseError(ParseError::Kind::Syntax, line.number, tatoms.column,
                         "atom list does not match atoms=" + count_text);
      require_unique(component.atoms, line, tatoms.column);
      doc.components.push_back(std::move(component));
    } else if (keyword == "hom") {
      if (!semilattice_line) syntax(line, 0, "semilattice before hom");
      SystemDoc::Hom hom;
      const Token tsrc = reader.peek();
      hom.source = reader.name("a source index");
      (void)position_of(doc.indices, tsrc, line);
      reader.expect("->");
      const Token tdst = reader.peek();
      hom.target = reader.name("a target index");
      (void)position_of(doc.indices, tdst, line);
      reader.expect(":");
      while (!reader.done()) {
        std::string target_atom = reader.name("a target atom");
        reader.expect("=");
        std::string source_atom = reader.name("a source atom");
        hom.dual.emplace_back(std::move(target_atom), std::move(source_atom));
        if (!reader.done()) reader.expect(",");
      }
      for (const SystemDoc::Hom& seen : doc.homs)
        if (seen.source == hom.source && seen.target == hom.target)
          throw ParseError(ParseError::Kind::DuplicateName, line.number, tsrc.column,
                           "hom " + hom.source + " -> " + hom.target + " given twice");
      doc.homs.push_back(std::move(hom));
    } else {
      syntax(line, 0, "semilattice/join/component/hom");
    }
  }
  if (!semilattice_line)
    throw ParseError(ParseError::Kind::Syntax, lines.empty() ? 2 : lines.back().number, 1,
                     "expected a semilattice block");

  // internal resolution: one component per index, every hom atom resolving,
  // dual maps total, join table complete
  std::map<std::string, const SystemDoc::Component*> components;
  for (const SystemDoc::Component& component : doc.components)
    components[component.index] = &component;
  for (const std::string& index : doc.indices)
    if (!components.contains(index))
      throw ParseError(ParseError::Kind::UnresolvedReference, semilattice_line->number, 1,
                       "index '" + index + "' has no component");
  for (const SystemDoc::Hom& hom : doc.homs) {
    const auto& target_atoms = components.at(hom.target)->atoms;
    const auto& source_atoms = components.at(hom.source)->atoms;
    std::vector<std::string> covered;
    for (const auto& [target_atom, source_atom] : hom.dual) {
      if (std::ranges::find(target_atoms, target_atom) == target_atoms.end())
        throw ParseError(ParseError::Kind::UnresolvedReference, semilattice_line->number, 1,
                         "hom " + hom.source + " -> " + hom.target + ": unknown target atom '" +
                             target_atom + "'");
      if (std::ranges::find(source_atoms, source_atom) == source_atoms.end())
        throw ParseError(ParseError::Kind::UnresolvedReference, semilattice_line->number, 1,
                         "hom " + hom.source + " -> " + hom.target + ": unknown source atom '" +
                             source_atom + "'");
      covered.push_back(target_atom);
    }
    require_unique(covered, *semilattice_line, 1);
    if (covered.size() != target_atoms.size())
      throw ParseError(ParseError::Kind::Syntax, semilattice_line->number, 1,
                       "hom " + hom.source + " -> " + hom.target +
                           " must map every target atom");
  }
  std::map<std::pair<std::string, std::string>, std::string> join_of;
  for (const SystemDoc::Join& join : doc.joins) {
    auto key = std::minmax(join.i, join.j);
    const auto [it, fresh] = join_of.insert({{key.first, key.second}, join.value});
    if (!fresh && it->second != join.value)
      throw ParseError(ParseError::Kind::Syntax, semilattice_line->number, 1,
                       "conflicting join for (" + join.i + ", " + join.j + ")");
  }
  for (std::size_t a = 0; a < doc.indices.size(); ++a)
    for (std::size_t b = a + 1; b < doc.indices.size(); ++b) {
      auto key = std::minmax(doc.indices[a], doc.indices[b]);
      if (!join_of.contains({key.first, key.second}))
        throw ParseError(ParseError::Kind::Syntax, semilattice_line->number, 1,
                         "missing join for (" + doc.indices[a] + ", " + doc.indices[b] + ")");
    }

  Document document;
  document.kind = DocKind::System;
  document.name = name;
  document.comments = std::move(comments);
  document.body = std::move(doc);
  return document;
}

Document parse_raw(const std::string& name, std::vector<std::string> comments,
                   std::span<const Line> lines) {
  RawDoc doc;
  std::vector<std::pair<std::string, std::vector<std::string>>> join_rows, meet_rows;
  bool have_zero = false, have_one = false, have_not = false;
  const Line* elements_line = nullptr;

  for (const Line& line : lines) {
    LineReader reader(line);
    const std::string keyword = reader.take("a keyword");
    if (keyword == "elements") {
      if (elements_line) syntax(line, 0, "a single elements line");
      while (!reader.done()) doc.elements.push_back(reader.name("an element"));
      if (doc.elements.empty()) syntax(line, 1, "at least one element");
      require_unique(doc.elements, line, 1);
      elements_line = &line;
    } else if (keyword == "zero" || keyword == "one") {
      if (!elements_line) syntax(line, 0, "elements before constants");
      const Token token = reader.peek();
      const std::string value = reader.name("an element");
      (void)position_of(doc.elements, token, line);
      reader.finish();
      (keyword == "zero" ? doc.zero : doc.one) = value;
      (keyword == "zero" ? have_zero : have_one) = true;
    } else if (keyword == "join" || keyword == "meet") {
      if (!elements_line) syntax(line, 0, "elements before tables");
      const Token trow = reader.peek();
      const std::string row = reader.name("a row element");
      (void)position_of(doc.elements, trow, line);
      reader.expect(":");
      std::vector<std::string> cells;
      while (!reader.done()) {
        const Token token = reader.peek();
        cells.push_back(reader.name("an element"));
        (void)position_of(doc.elements, token, line);
      }
      if (cells.size() != doc.elements.size())
        throw ParseError(ParseError::Kind::Syntax, line.number, trow.column,
                         "row must list one entry per element");
      auto& rows = keyword == "join" ? join_rows : meet_rows;
      for (const auto& [seen, cells_seen] : rows)
        if (seen == row)
          throw ParseError(ParseError::Kind::DuplicateName, line.number, trow.column,
                           "row '" + row + "' given twice");
      rows.emplace_back(row, std::move(cells));
    } else if (keyword == "not") {
      if (!elements_line) syntax(line, 0, "elements before tables");
      if (have_not) syntax(line, 0, "a single not row");
      reader.expect(":");
      while (!reader.done()) {
        const Token token = reader.peek();
        doc.comp_row.push_back(reader.name("an element"));
        (void)position_of(doc.elements, token, line);
      }
      if (doc.comp_row.size() != doc.elements.size())
        syntax(line, 0, "one entry per element");
      have_not = true;
    } else {
      syntax(line, 0, "elements/zero/one/join/meet/not");
    }
  }
  if (!elements_line)
    throw ParseError(ParseError::Kind::Syntax, lines.empty() ? 2 : lines.back().number, 1,
                     "expected an elements line");
  auto order_rows = [&](std::vector<std::pair<std::string, std::vector<std::string>>>& rows,
                        const char* what) {
    if (rows.size() != doc.elements.size())
      throw ParseError(ParseError::Kind::Syntax, elements_line->number, 1,
                       std::string("missing ") + what + " rows");
    std::vector<std::vector<std::string>> ordered(doc.elements.size());
    for (auto& [row, cells] : rows) {
      const std::size_t at = static_cast<std::size_t>(
          std::ranges::find(doc.elements, row) - doc.elements.begin());
      ordered[at] = std::move(cells);
    }
    return ordered;
  };
  doc.join_rows = order_rows(join_rows, "join");
  doc.meet_rows = order_rows(meet_rows, "meet");
  if (!have_zero || !have_one)
    throw ParseError(ParseError::Kind::Syntax, elements_line->number, 1,
                     "zero and one lines required");
  if (!have_not)
    throw ParseError(ParseError::Kind::Syntax, elements_line->number, 1, "not row required");

  Document document;
  document.kind = DocKind::Raw;
  document.name = name;
  document.comments = std::move(comments);
  document.body = std::move(doc);
  return document;
}

Document parse_state(const std::string& name, std::vector<std::string> comments,
                     std::span<const Line> lines) {
  StateDoc doc;
  bool have_top = false;
  for (const Line& line : lines) {
    LineReader reader(line);
    const std::string keyword = reader.take("a keyword");
    if (keyword == "top-measure") {
      if (have_top || !doc.components.empty())
        syntax(line, 0, "a single weight specification");
      doc.top = read_weight_list(reader);
      have_top = true;
    } else if (keyword == "component") {
      if (have_top) syntax(line, 0, "either top-measure or component lines");
      StateDoc::ComponentWeights component;
      const Token token = reader.peek();
      component.index = reader.name("an index");
      reader.expect(":");
      component.weights = read_weight_list(reader);
      for (const auto& seen : doc.components)
        if (seen.index == component.index)
          throw ParseError(ParseError::Kind::DuplicateName, line.number, token.column,
                           "component '" + component.index + "' given twice");
      doc.components.push_back(std::move(component));
    } else {
      syntax(line, 0, "top-measure/component");
    }
  }
  if (!have_top && doc.components.empty())
    throw ParseError(ParseError::Kind::Syntax, lines.empty() ? 2 : lines.back().number, 1,
                     "expected weights");

  Document document;
  document.kind = DocKind::State;
  document.name = name;
  document.comments = std::move(comments);
  document.body = std::move(doc);
  return document;
}

Document parse_measure(const std::string& name, std::vector<std::string> comments,
                       std::span<const Line> lines) {
  MeasureDoc doc;
  bool have_weights = false;
  for (const Line& line : lines) {
    LineReader reader(line);
    const std::string keyword = reader.take("a keyword");
    if (keyword == "weights") {
      if (have_weights) syntax(line, 0, "a single weights line");
      doc.weights = read_weight_list(reader);
      have_weights = true;
    } else {
      syntax(line, 0, "weights");
    }
  }
  if (!have_weights)
    throw ParseError(ParseError::Kind::Syntax, lines.empty() ? 2 : lines.back().number, 1,
                     "expected a weights line");

  Document document;
  document.kind = DocKind::Measure;
  document.name = name;
  document.comments = std::move(comments);
  document.body = std::move(doc);
  return document;
}

}  // namespace

Document parse_document(std::string_view text) {
  std::vector<std::string> comments;
  const std::vector<Line> lines = tokenize(text, comments);
  if (lines.empty())
    throw ParseError(ParseError::Kind::Syntax, 1, 1, "expected a document header");
  LineReader header(lines.front());
  const std::string kind = header.take("system/raw/state/measure");
  const std::string name = header.name("a document name");
  header.finish();
  const std::span<const Line> body{lines.data() + 1, lines.size() - 1};
  if (kind == "system") return parse_system(name, std::move(comments), body);
  if (kind == "raw") return parse_raw(name, std::move(comments), body);
  if (kind == "state") return parse_state(name, std::move(comments), body);
  if (kind == "measure") return parse_measure(name, std::move(comments), body);
  throw ParseError(ParseError::Kind::Syntax, lines.front().number, 1,
                   "unknown document kind '" + kind + "'");
}

namespace {

void print_weights(std::ostream& out, const std::vector<std::pair<std::string, Rat>>& weights) {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out << ", ";
    out << weights[i].first << "=" << to_string(weights[i].second);
  }
}

}  // namespace

std::string print_document(const Document& doc) {
  std::ostringstream out;
  for (const std::string& comment : doc.comments) out << "# " << comment << "\n";
  switch (doc.kind) {
    case DocKind::System: {
      const auto& body = std::get<SystemDoc>(doc.body);
      out << "system " << doc.name << "\n";
      out << "semilattice";
      for (const std::string& index : body.indices) out << " " << index;
      out << "\n";
      for (const auto& join : body.joins)
        out << "join " << join.i << " " << join.j << " = " << join.value << "\n";
      for (const auto& component : body.components) {
        out << "component " << component.index << " atoms=" << component.atoms.size();
        for (const std::string& atom : component.atoms) out << " " << atom;
        out << "\n";
      }
      for (const auto& hom : body.homs) {
        out << "hom " << hom.source << " -> " << hom.target << ":";
        for (std::size_t i = 0; i < hom.dual.size(); ++i)
          out << (i ? ", " : " ") << hom.dual[i].first << "=" << hom.dual[i].second;
        out << "\n";
      }
      break;
    }
    case DocKind::Raw: {
      const auto& body = std::get<RawDoc>(doc.body);
      out << "raw " << doc.name << "\n";
      out << "elements";
      for (const std::string& element : body.elements) out << " " << element;
      out << "\n";
      out << "zero " << body.zero << "\n";
      out << "one " << body.one << "\n";
      auto rows = [&](const char* keyword, const std::vector<std::vector<std::string>>& table) {
        for (std::size_t r = 0; r < table.size(); ++r) {
          out << keyword << " " << body.elements[r] << ":";
          for (const std::string& cell : table[r]) out << " " << cell;
          out << "\n";
        }
      };
      rows("join", body.join_rows);
      rows("meet", body.meet_rows);
      out << "not:";
      for (const std::string& cell : body.comp_row) out << " " << cell;
      out << "\n";
      break;
    }
    case DocKind::State: {
      const auto& body = std::get<StateDoc>(doc.body);
      out << "state " << doc.name << "\n";
      if (body.componentwise()) {
        for (const auto& component : body.components) {
          out << "component " << component.index << ": ";
          print_weights(out, component.weights);
          out << "\n";
        }
      } else {
        out << "top-measure ";
        print_weights(out, body.top);
        out << "\n";
      }
      break;
    }
    case DocKind::Measure: {
      const auto& body = std::get<MeasureDoc>(doc.body);
      out << "measure " << doc.name << "\n";
      out << "weights ";
      print_weights(out, body.weights);
      out << "\n";
      break;
    }
  }
  return out.str();
}

CompiledSystem compile_system(const SystemDoc& doc) {
  CompiledSystem compiled;
  compiled.index_names = doc.indices;
  const int n = static_cast<int>(doc.indices.size());
  auto position = [&doc](const std::string& name) {
    return static_cast<int>(std::ranges::find(doc.indices, name) - doc.indices.begin());
  };
  std::vector<int> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  auto at = [&table, n](int i, int j) -> int& {
    return table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                 static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < n; ++i) at(i, i) = i;
  for (const auto& join : doc.joins) {
    const int i = position(join.i), j = position(join.j), v = position(join.value);
    at(i, j) = v;
    at(j, i) = v;
  }
  compiled.index_check = validate_semilattice(n, table);
  // component and atom tables in index order
  compiled.atom_names.resize(static_cast<std::size_t>(n));
  std::vector<BooleanAlgebra> components;
  components.reserve(static_cast<std::size_t>(n));
  for (const std::string& index : doc.indices) {
    const auto it = std::ranges::find_if(
        doc.components, [&index](const auto& c) { return c.index == index; });
    if (it == doc.components.end())
      throw ParseError(ParseError::Kind::UnresolvedReference, 1, 1,
                       "index '" + index + "' has no component");
    compiled.atom_names[static_cast<std::size_t>(position(index))] = it->atoms;
    components.emplace_back(static_cast<int>(it->atoms.size()));
  }
  if (!compiled.index_check.ok()) return compiled;

  std::vector<HomSpec> homs;
  for (const auto& hom : doc.homs) {
    const int source = position(hom.source), target = position(hom.target);
    const auto& source_atoms = compiled.atom_names[static_cast<std::size_t>(source)];
    const auto& target_atoms = compiled.atom_names[static_cast<std::size_t>(target)];
    std::vector<int> dual(target_atoms.size());
    for (const auto& [target_atom, source_atom] : hom.dual) {
      const auto t = std::ranges::find(target_atoms, target_atom) - target_atoms.begin();
      const auto s = std::ranges::find(source_atoms, source_atom) - source_atoms.begin();
      dual[static_cast<std::size_t>(t)] = static_cast<int>(s);
    }
    homs.push_back({source, target,
                    BooleanHom(components[static_cast<std::size_t>(source)],
                               components[static_cast<std::size_t>(target)], std::move(dual))});
  }
  compiled.system_check =
      validate_system(*compiled.index_check.lattice, std::move(components), std::move(homs));
  return compiled;
}

RawAlgebra compile_raw(const RawDoc& doc) {
  RawAlgebra algebra;
  algebra.size = doc.elements.size();
  auto position = [&doc](const std::string& name) {
    return static_cast<std::uint32_t>(std::ranges::find(doc.elements, name) -
                                      doc.elements.begin());
  };
  algebra.join_table.reserve(algebra.size * algebra.size);
  algebra.meet_table.reserve(algebra.size * algebra.size);
  for (const auto& row : doc.join_rows)
    for (const std::string& cell : row) algebra.join_table.push_back(position(cell));
  for (const auto& row : doc.meet_rows)
    for (const std::string& cell : row) algebra.meet_table.push_back(position(cell));
  for (const std::string& cell : doc.comp_row) algebra.comp_table.push_back(position(cell));
  algebra.zero = position(doc.zero);
  algebra.one = position(doc.one);
  return algebra;
}

CompiledState compile_state(const StateDoc& doc, const CompiledSystem& system) {
  CompiledState compiled;
  const DirectSystem& target = system.system();
  auto weights_for = [&](const std::vector<std::pair<std::string, Rat>>& named, int component,
                         const std::string& where) {
    const auto& atoms = system.atom_names[static_cast<std::size_t>(component)];
    std::vector<Rat> weights(atoms.size(), Rat(-1));
    for (const auto& [atom, value] : named) {
      const auto it = std::ranges::find(atoms, atom);
      if (it == atoms.end())
        throw ParseError(ParseError::Kind::UnresolvedReference, 1, 1,
                         where + ": unknown atom '" + atom + "'");
      weights[static_cast<std::size_t>(it - atoms.begin())] = value;
    }
    for (std::size_t i = 0; i < weights.size(); ++i)
      if (weights[i] == -1)
        throw ParseError(ParseError::Kind::Syntax, 1, 1,
                         where + ": no weight for atom '" + atoms[i] + "'");
    return weights;
  };
  if (doc.componentwise()) {
    compiled.componentwise = true;
    compiled.component_weights.resize(static_cast<std::size_t>(target.component_count()));
    std::vector<bool> seen(static_cast<std::size_t>(target.component_count()), false);
    for (const auto& component : doc.components) {
      const auto it = std::ranges::find(system.index_names, component.index);
      if (it == system.index_names.end())
        throw ParseError(ParseError::Kind::UnresolvedReference, 1, 1,
                         "state: unknown component '" + component.index + "'");
      const int at = static_cast<int>(it - system.index_names.begin());
      seen[static_cast<std::size_t>(at)] = true;
      compiled.component_weights[static_cast<std::size_t>(at)] =
          weights_for(component.weights, at, "component " + component.index);
    }
    for (int i = 0; i < target.component_count(); ++i)
      if (!seen[static_cast<std::size_t>(i)])
        throw ParseError(ParseError::Kind::Syntax, 1, 1,
                         "state: no weights for component '" +
                             system.index_names[static_cast<std::size_t>(i)] + "'");
  } else {
    compiled.top_weights = weights_for(doc.top, target.index().top(), "top-measure");
  }
  return compiled;
}

std::vector<Rat> compile_measure(const MeasureDoc& doc, const CompiledSystem& system) {
  const int top = system.system().index().top();
  const auto& atoms = system.atom_names[static_cast<std::size_t>(top)];
  std::vector<Rat> weights(atoms.size(), Rat(-1));
  for (const auto& [atom, value] : doc.weights) {
    const auto it = std::ranges::find(atoms, atom);
    if (it == atoms.end())
      throw ParseError(ParseError::Kind::UnresolvedReference, 1, 1,
                       "measure: unknown atom '" + atom + "'");
    weights[static_cast<std::size_t>(it - atoms.begin())] = value;
  }
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i] == -1)
      throw ParseError(ParseError::Kind::Syntax, 1, 1,
                       "measure: no weight for atom '" + atoms[i] + "'");
  return weights;
}

std::string element_name(const std::vector<std::string>& atom_names, Elem bits,
                         const std::string& subscript) {
  const int n = static_cast<int>(atom_names.size());
  const Elem full = static_cast<Elem>((std::uint64_t{1} << n) - 1);
  const std::string tag = subscript.empty() ? "" : "_" + subscript;
  if (bits == 0) return "0" + tag;
  if (bits == full) return "1" + tag;
  if ((bits & (bits - 1)) == 0) {
    for (int i = 0; i < n; ++i)
      if (bits >> i & 1) return atom_names[static_cast<std::size_t>(i)];
  }
  const Elem complement = ~bits & full;
  if ((complement & (complement - 1)) == 0) {
    for (int i = 0; i < n; ++i)
      if (complement >> i & 1) return atom_names[static_cast<std::size_t>(i)] + "'";
  }
  std::string text = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    if (bits >> i & 1) {
      if (!first) text += ",";
      text += atom_names[static_cast<std::size_t>(i)];
      first = false;
    }
  return text + "}";
}

Document document_from_system(const DirectSystem& system, const std::string& name) {
  SystemDoc doc;
  const int n = system.component_count();
  for (int i = 0; i < n; ++i) doc.indices.push_back("k" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      doc.joins.push_back({doc.indices[static_cast<std::size_t>(i)],
                           doc.indices[static_cast<std::size_t>(j)],
                           doc.indices[static_cast<std::size_t>(system.index().join(i, j))]});
  for (int i = 0; i < n; ++i) {
    SystemDoc::Component component;
    component.index = doc.indices[static_cast<std::size_t>(i)];
    for (int a = 0; a < system.component(i).atom_count(); ++a)
      component.atoms.push_back(component.index + "a" + std::to_string(a));
    doc.components.push_back(std::move(component));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !system.index().leq(i, j)) continue;
      const BooleanHom& hom = system.hom(i, j);
      SystemDoc::Hom out;
      out.source = doc.indices[static_cast<std::size_t>(i)];
      out.target = doc.indices[static_cast<std::size_t>(j)];
      for (int t = 0; t < system.component(j).atom_count(); ++t)
        out.dual.emplace_back(
            doc.components[static_cast<std::size_t>(j)].atoms[static_cast<std::size_t>(t)],
            doc.components[static_cast<std::size_t>(i)]
                .atoms[static_cast<std::size_t>(hom.dual(t))]);
      doc.homs.push_back(std::move(out));
    }
  Document document;
  document.kind = DocKind::System;
  document.name = name;
  document.body = std::move(doc);
  return document;
}

Document document_from_raw(const RawAlgebra& algebra, const std::string& name,
                           const std::vector<std::string>& element_names) {
  if (element_names.size() != algebra.size)
    throw MalformedElement("one name per element required");
  RawDoc doc;
  doc.elements = element_names;
  doc.zero = element_names[algebra.zero];
  doc.one = element_names[algebra.one];
  doc.join_rows.resize(algebra.size);
  doc.meet_rows.resize(algebra.size);
  for (std::uint32_t a = 0; a < algebra.size; ++a) {
    for (std::uint32_t b = 0; b < algebra.size; ++b) {
      doc.join_rows[a].push_back(element_names[algebra.join(a, b)]);
      doc.meet_rows[a].push_back(element_names[algebra.meet(a, b)]);
    }
    doc.comp_row.push_back(element_names[algebra.comp(a)]);
  }
  Document document;
  document.kind = DocKind::Raw;
  document.name = name;
  document.body = std::move(doc);
  return document;
}

}  // namespace plonka
