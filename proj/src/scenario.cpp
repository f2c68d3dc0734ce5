#include "semiframe/scenario.hpp"

#include <map>
#include <sstream>
#include <utility>

#include "semiframe/errors.hpp"
#include "semiframe/reference.hpp"

namespace semiframe {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream stream(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(stream, raw)) {
    ++number;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    Line line;
    line.number = number;
    std::string tok;
    while (fields >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

Expr parse_formula(const std::string& token, std::size_t line) {
  try {
    return parse_expr(token);
  } catch (const Error& e) {
    throw ScenarioError("in formula '" + token + "': " + e.what(), line);
  }
}

Rational parse_entry(const std::string& token, std::size_t line) {
  Expr e = parse_formula(token, line);
  if (e.depends_on_n()) {
    throw ScenarioError("explicit entry '" + token + "' must be a constant", line);
  }
  try {
    return e.eval(1);
  } catch (const Error& err) {
    throw ScenarioError("in entry '" + token + "': " + err.what(), line);
  }
}

std::size_t parse_count(const std::string& token, const char* what, std::size_t line) {
  std::size_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') throw ScenarioError(std::string(what) + " '" + token + "' must be a positive integer", line);
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 1'000'000) throw ScenarioError(std::string(what) + " '" + token + "' is out of range", line);
  }
  if (value == 0) throw ScenarioError(std::string(what) + " '" + token + "' must be a positive integer", line);
  return value;
}

void expect_tokens(const Line& line, std::size_t count, const std::string& shape) {
  if (line.tokens.size() != count) {
    throw ScenarioError("expected '" + shape + "'", line.number);
  }
}

OperatorDecl parse_operator_decl(const Line& line) {
  if (line.tokens.size() < 2) throw ScenarioError("expected '<name> <kind> ...'", line.number);
  OperatorDecl d;
  d.name = line.tokens[0];
  d.kind = line.tokens[1];
  d.line = line.number;
  const std::string head = d.name + " " + d.kind;
  if (d.kind == "diagonal") {
    expect_tokens(line, 3, head + " <weight>");
    d.weight = parse_formula(line.tokens[2], line.number);
  } else if (d.kind == "identity" || d.kind == "pair_collapse") {
    expect_tokens(line, 2, head);
  } else if (d.kind == "identity_plus" || d.kind == "adjoint") {
    expect_tokens(line, 3, head + " <operator>");
    d.lhs = line.tokens[2];
  } else if (d.kind == "sum" || d.kind == "compose") {
    expect_tokens(line, 4, head + " <operator> <operator>");
    d.lhs = line.tokens[2];
    d.rhs = line.tokens[3];
  } else if (d.kind == "shift_weighted") {
    expect_tokens(line, 4, head + " <index-map> <weight>");
    d.index_map = parse_formula(line.tokens[2], line.number);
    d.weight = parse_formula(line.tokens[3], line.number);
  } else {
    throw ScenarioError("unknown operator kind '" + d.kind + "'", line.number);
  }
  return d;
}

SequenceDecl parse_sequence_decl(const Line& line) {
  if (line.tokens.size() < 2) throw ScenarioError("expected '<name> <kind> ...'", line.number);
  SequenceDecl d;
  d.name = line.tokens[0];
  d.kind = line.tokens[1];
  d.line = line.number;
  const std::string head = d.name + " " + d.kind;
  if (d.kind == "weighted_basis") {
    expect_tokens(line, 4, head + " <weight> <index-map>");
    d.weight = parse_formula(line.tokens[2], line.number);
    d.index_map = parse_formula(line.tokens[3], line.number);
  } else if (d.kind == "explicit") {
    if (line.tokens.size() < 3) throw ScenarioError("expected '" + head + " <dim> : <entries> ...'", line.number);
    const std::size_t dim = parse_count(line.tokens[2], "dimension", line.number);
    std::size_t pos = 3;
    while (pos < line.tokens.size()) {
      if (line.tokens[pos] != ":") {
        throw ScenarioError("expected ':' before each explicit vector", line.number);
      }
      ++pos;
      if (pos + dim > line.tokens.size()) {
        throw ScenarioError("explicit vector needs " + std::to_string(dim) + " entries", line.number);
      }
      std::vector<Rational> row;
      row.reserve(dim);
      for (std::size_t i = 0; i < dim; ++i) row.push_back(parse_entry(line.tokens[pos + i], line.number));
      d.rows.push_back(std::move(row));
      pos += dim;
    }
    if (d.rows.empty()) throw ScenarioError("explicit family needs at least one vector", line.number);
  } else if (d.kind == "operator_image") {
    expect_tokens(line, 4, head + " <sequence> <operator>");
    d.base = line.tokens[2];
    d.other = line.tokens[3];
  } else if (d.kind == "pointwise_sum" || d.kind == "direct_sum") {
    expect_tokens(line, 4, head + " <sequence> <sequence>");
    d.base = line.tokens[2];
    d.other = line.tokens[3];
  } else {
    throw ScenarioError("unknown sequence kind '" + d.kind + "'", line.number);
  }
  return d;
}

// Builds every operator from its recipe, resolving references in any
// declaration order and rejecting cycles.
class OperatorTable {
 public:
  explicit OperatorTable(const std::vector<OperatorDecl>& decls) : decls_(decls) {
    for (std::size_t i = 0; i < decls.size(); ++i) {
      if (!index_.emplace(decls[i].name, i).second) {
        throw ScenarioError("duplicate operator name '" + decls[i].name + "'", decls[i].line);
      }
    }
    built_.resize(decls.size());
    state_.assign(decls.size(), 0);
  }

  OperatorSpec get(const std::string& name, std::size_t ref_line) {
    const auto it = index_.find(name);
    if (it == index_.end()) {
      throw ScenarioError("references undefined operator '" + name + "'", ref_line);
    }
    return build(it->second);
  }

  std::vector<OperatorSpec> all() {
    std::vector<OperatorSpec> out;
    out.reserve(decls_.size());
    for (std::size_t i = 0; i < decls_.size(); ++i) out.push_back(build(i));
    return out;
  }

 private:
  OperatorSpec build(std::size_t i) {
    if (built_[i]) return *built_[i];
    const OperatorDecl& d = decls_[i];
    if (state_[i] == 1) {
      throw ScenarioError("circular definition of operator '" + d.name + "'", d.line);
    }
    state_[i] = 1;
    OperatorSpec spec = realize(d);
    state_[i] = 2;
    built_[i] = spec;
    return spec;
  }

  OperatorSpec realize(const OperatorDecl& d) {
    if (d.kind == "diagonal") return OperatorSpec::diagonal(*d.weight, d.name);
    if (d.kind == "identity") return OperatorSpec::identity();
    if (d.kind == "identity_plus") return OperatorSpec::identity_plus(get(d.lhs, d.line));
    if (d.kind == "adjoint") return OperatorSpec::adjoint(get(d.lhs, d.line));
    if (d.kind == "sum") return OperatorSpec::sum(get(d.lhs, d.line), get(d.rhs, d.line));
    if (d.kind == "compose") return OperatorSpec::compose(get(d.lhs, d.line), get(d.rhs, d.line));
    if (d.kind == "shift_weighted") return OperatorSpec::permutation_weighted(*d.index_map, *d.weight, d.name);
    return pair_collapse_operator();
  }

  const std::vector<OperatorDecl>& decls_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::optional<OperatorSpec>> built_;
  std::vector<char> state_;  // 0 untouched, 1 in progress, 2 done
};

class SequenceTable {
 public:
  SequenceTable(const std::vector<SequenceDecl>& decls, OperatorTable& ops)
      : decls_(decls), ops_(ops) {
    for (std::size_t i = 0; i < decls.size(); ++i) {
      if (!index_.emplace(decls[i].name, i).second) {
        throw ScenarioError("duplicate sequence name '" + decls[i].name + "'", decls[i].line);
      }
    }
    built_.resize(decls.size());
    state_.assign(decls.size(), 0);
  }

  SequenceFamily get(const std::string& name, std::size_t ref_line) {
    const auto it = index_.find(name);
    if (it == index_.end()) {
      throw ScenarioError("references undefined sequence '" + name + "'", ref_line);
    }
    return build(it->second);
  }

  std::vector<SequenceFamily> all() {
    std::vector<SequenceFamily> out;
    out.reserve(decls_.size());
    for (std::size_t i = 0; i < decls_.size(); ++i) out.push_back(build(i));
    return out;
  }

 private:
  SequenceFamily build(std::size_t i) {
    if (built_[i]) return *built_[i];
    const SequenceDecl& d = decls_[i];
    if (state_[i] == 1) {
      throw ScenarioError("circular definition of sequence '" + d.name + "'", d.line);
    }
    state_[i] = 1;
    SequenceFamily fam = realize(d);
    state_[i] = 2;
    built_[i] = fam;
    return fam;
  }

  SequenceFamily realize(const SequenceDecl& d) {
    if (d.kind == "weighted_basis") return SequenceFamily::weighted_basis(*d.weight, *d.index_map, d.name);
    if (d.kind == "explicit") {
      std::vector<std::vector<Complex>> vectors;
      vectors.reserve(d.rows.size());
      for (const auto& row : d.rows) {
        std::vector<Complex> v;
        v.reserve(row.size());
        for (const Rational& r : row) v.emplace_back(r.value(), 0.0);
        vectors.push_back(std::move(v));
      }
      return SequenceFamily::explicit_vectors(std::move(vectors), d.name);
    }
    SequenceFamily base = get(d.base, d.line);
    if (d.kind == "operator_image") {
      return SequenceFamily::operator_image(std::move(base), ops_.get(d.other, d.line), d.name);
    }
    SequenceFamily other = get(d.other, d.line);
    if (d.kind == "pointwise_sum") {
      return SequenceFamily::pointwise_sum(std::move(base), std::move(other), d.name);
    }
    return SequenceFamily::direct_sum_of(std::move(base), std::move(other), d.name);
  }

  const std::vector<SequenceDecl>& decls_;
  OperatorTable& ops_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::optional<SequenceFamily>> built_;
  std::vector<char> state_;
};

bool binding_is_operator(const std::string& binding) {
  return binding.find("operator") != std::string::npos;
}

ScenarioTask parse_task(const Line& line) {
  ScenarioTask t;
  t.line = line.number;
  const std::string& head = line.tokens[0];
  if (head == "classify" || head == "classify_sequence" || head == "rf_check") {
    t.kind = head == "classify"            ? TaskKind::Classify
             : head == "classify_sequence" ? TaskKind::ClassifySequence
                                           : TaskKind::RfCheck;
    expect_tokens(line, 2, head + " <sequence>");
    t.names = {line.tokens[1]};
  } else if (head == "spectral" || head == "density") {
    t.kind = head == "spectral" ? TaskKind::Spectral : TaskKind::Density;
    expect_tokens(line, 2, head + " <operator>");
    t.names = {line.tokens[1]};
  } else if (head == "transform") {
    t.kind = TaskKind::Transform;
    if (line.tokens.size() < 2) throw ScenarioError("expected 'transform <mode> ...'", line.number);
    const std::string& mode = line.tokens[1];
    if (mode == "image" || mode == "identity_plus") {
      t.mode = mode == "image" ? TransformMode::Image : TransformMode::IdentityPlus;
      expect_tokens(line, 4, "transform " + mode + " <sequence> <operator>");
      t.names = {line.tokens[2], line.tokens[3]};
    } else if (mode == "operator_sum") {
      t.mode = TransformMode::OperatorSum;
      expect_tokens(line, 5, "transform operator_sum <sequence> <operator> <operator>");
      t.names = {line.tokens[2], line.tokens[3], line.tokens[4]};
    } else if (mode == "family_sum") {
      t.mode = TransformMode::FamilySum;
      expect_tokens(line, 4, "transform family_sum <sequence> <sequence>");
      t.names = {line.tokens[2], line.tokens[3]};
    } else {
      throw ScenarioError("unknown transform mode '" + mode + "'", line.number);
    }
  } else if (head == "direct_sum") {
    t.kind = TaskKind::DirectSum;
    expect_tokens(line, 3, "direct_sum <sequence> <sequence>");
    t.names = {line.tokens[1], line.tokens[2]};
  } else if (head == "check") {
    t.kind = TaskKind::Check;
    if (line.tokens.size() < 2) throw ScenarioError("expected 'check <proposition> <names...>'", line.number);
    t.prop_id = line.tokens[1];
    t.names.assign(line.tokens.begin() + 2, line.tokens.end());
  } else if (head == "check_all") {
    t.kind = TaskKind::CheckAll;
    expect_tokens(line, 1, "check_all");
  } else {
    throw ScenarioError("unknown task '" + head + "'", line.number);
  }
  return t;
}

// Confirms every name a task mentions resolves in the right table.
void validate_task(const ScenarioTask& t, OperatorTable& ops, SequenceTable& seqs) {
  switch (t.kind) {
    case TaskKind::Classify:
    case TaskKind::ClassifySequence:
    case TaskKind::RfCheck:
      seqs.get(t.names[0], t.line);
      return;
    case TaskKind::Spectral:
    case TaskKind::Density:
      ops.get(t.names[0], t.line);
      return;
    case TaskKind::Transform:
      seqs.get(t.names[0], t.line);
      if (t.mode == TransformMode::FamilySum) {
        seqs.get(t.names[1], t.line);
      } else {
        ops.get(t.names[1], t.line);
        if (t.mode == TransformMode::OperatorSum) ops.get(t.names[2], t.line);
      }
      return;
    case TaskKind::DirectSum:
      seqs.get(t.names[0], t.line);
      seqs.get(t.names[1], t.line);
      return;
    case TaskKind::Check: {
      std::vector<std::string> bindings;
      try {
        bindings = proposition_bindings(t.prop_id);
      } catch (const UnknownProposition& e) {
        throw ScenarioError(e.what(), t.line);
      }
      if (bindings.size() != t.names.size()) {
        std::string shape;
        for (const auto& b : bindings) shape += " <" + b + ">";
        throw ScenarioError("check " + t.prop_id + " expects" + shape + ", got " +
                                std::to_string(t.names.size()) + " name(s)",
                            t.line);
      }
      for (std::size_t i = 0; i < bindings.size(); ++i) {
        if (binding_is_operator(bindings[i])) {
          ops.get(t.names[i], t.line);
        } else {
          seqs.get(t.names[i], t.line);
        }
      }
      return;
    }
    case TaskKind::CheckAll:
      return;
  }
}

enum class Section { None, Spaces, Operators, Sequences, Tasks };

}  // namespace

std::string to_string(TaskKind k) {
  switch (k) {
    case TaskKind::Classify: return "classify";
    case TaskKind::ClassifySequence: return "classify_sequence";
    case TaskKind::RfCheck: return "rf_check";
    case TaskKind::Spectral: return "spectral";
    case TaskKind::Density: return "density";
    case TaskKind::Transform: return "transform";
    case TaskKind::DirectSum: return "direct_sum";
    case TaskKind::Check: return "check";
    case TaskKind::CheckAll: return "check_all";
  }
  return "unknown";
}

const OperatorSpec& Scenario::op(const std::string& name) const {
  for (std::size_t i = 0; i < operator_decls.size(); ++i) {
    if (operator_decls[i].name == name) return operators[i];
  }
  throw Error("no operator named '" + name + "' in the scenario");
}

const SequenceFamily& Scenario::sequence(const std::string& name) const {
  for (std::size_t i = 0; i < sequence_decls.size(); ++i) {
    if (sequence_decls[i].name == name) return sequences[i];
  }
  throw Error("no sequence named '" + name + "' in the scenario");
}

Scenario parse_scenario(const std::string& text) {
  Scenario s;
  Section section = Section::None;
  bool seen[5] = {false, false, false, false, false};
  bool ladder_set = false;

  for (const Line& line : tokenize(text)) {
    const std::string& head = line.tokens[0];
    Section next = Section::None;
    if (head == "SPACES") next = Section::Spaces;
    else if (head == "OPERATORS") next = Section::Operators;
    else if (head == "SEQUENCES") next = Section::Sequences;
    else if (head == "TASKS") next = Section::Tasks;

    if (next != Section::None) {
      expect_tokens(line, 1, head);
      if (seen[static_cast<int>(next)]) {
        throw ScenarioError("duplicate section " + head, line.number);
      }
      seen[static_cast<int>(next)] = true;
      section = next;
      continue;
    }

    switch (section) {
      case Section::None:
        throw ScenarioError("expected a section header (SPACES, OPERATORS, SEQUENCES or TASKS)",
                            line.number);
      case Section::Spaces: {
        if (head != "ladder") throw ScenarioError("expected 'ladder <levels...>'", line.number);
        if (ladder_set) throw ScenarioError("duplicate ladder line", line.number);
        std::vector<std::size_t> levels;
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
          levels.push_back(parse_count(line.tokens[i], "ladder level", line.number));
        }
        try {
          s.ladder = TruncationLadder(std::move(levels));
        } catch (const Error& e) {
          throw ScenarioError(e.what(), line.number);
        }
        ladder_set = true;
        break;
      }
      case Section::Operators:
        s.operator_decls.push_back(parse_operator_decl(line));
        break;
      case Section::Sequences:
        s.sequence_decls.push_back(parse_sequence_decl(line));
        break;
      case Section::Tasks:
        s.tasks.push_back(parse_task(line));
        break;
    }
  }

  OperatorTable ops(s.operator_decls);
  SequenceTable seqs(s.sequence_decls, ops);
  s.operators = ops.all();
  s.sequences = seqs.all();
  for (const ScenarioTask& t : s.tasks) validate_task(t, ops, seqs);
  return s;
}

std::string print_scenario(const Scenario& s) {
  std::string out = "SPACES\nladder";
  for (std::size_t level : s.ladder.levels()) out += " " + std::to_string(level);
  out += "\n";

  if (!s.operator_decls.empty()) {
    out += "\nOPERATORS\n";
    for (const OperatorDecl& d : s.operator_decls) {
      out += d.name + " " + d.kind;
      if (d.kind == "diagonal") {
        out += " " + d.weight->str();
      } else if (d.kind == "identity_plus" || d.kind == "adjoint") {
        out += " " + d.lhs;
      } else if (d.kind == "sum" || d.kind == "compose") {
        out += " " + d.lhs + " " + d.rhs;
      } else if (d.kind == "shift_weighted") {
        out += " " + d.index_map->str() + " " + d.weight->str();
      }
      out += "\n";
    }
  }

  if (!s.sequence_decls.empty()) {
    out += "\nSEQUENCES\n";
    for (const SequenceDecl& d : s.sequence_decls) {
      out += d.name + " " + d.kind;
      if (d.kind == "weighted_basis") {
        out += " " + d.weight->str() + " " + d.index_map->str();
      } else if (d.kind == "explicit") {
        out += " " + std::to_string(d.rows.front().size());
        for (const auto& row : d.rows) {
          out += " :";
          for (const Rational& r : row) out += " " + r.str();
        }
      } else {
        out += " " + d.base + " " + d.other;
      }
      out += "\n";
    }
  }

  if (!s.tasks.empty()) {
    out += "\nTASKS\n";
    for (const ScenarioTask& t : s.tasks) {
      out += to_string(t.kind);
      if (t.kind == TaskKind::Transform) out += " " + to_string(t.mode);
      if (t.kind == TaskKind::Check) out += " " + t.prop_id;
      for (const std::string& name : t.names) out += " " + name;
      out += "\n";
    }
  }
  return out;
}

Instance instance_for_check(const Scenario& s, const ScenarioTask& task) {
  const std::vector<std::string> bindings = proposition_bindings(task.prop_id);
  Instance in;
  for (std::size_t i = 0; i < bindings.size() && i < task.names.size(); ++i) {
    const std::string& b = bindings[i];
    if (binding_is_operator(b)) {
      if (b.find("second") != std::string::npos) {
        in.l2 = s.op(task.names[i]);
      } else {
        in.l = s.op(task.names[i]);
      }
    } else {
      if (b.find("second") != std::string::npos) {
        in.g = s.sequence(task.names[i]);
      } else {
        in.f = s.sequence(task.names[i]);
      }
    }
  }
  return in;
}

namespace {

// The weighted coordinate family, its bounded image under diag(1/n) and the
// Bessel-only reciprocal family, with the checks that separate the three.
constexpr const char* kWeightedIndexScenario =
    "SPACES\n"
    "ladder 8 16 32 64 128\n"
    "\n"
    "OPERATORS\n"
    "inv diagonal 1/n\n"
    "\n"
    "SEQUENCES\n"
    "base weighted_basis n n\n"
    "image operator_image base inv\n"
    "recip weighted_basis 1/n n\n"
    "\n"
    "TASKS\n"
    "classify base\n"
    "classify image\n"
    "classify recip\n"
    "spectral inv\n"
    "density inv\n"
    "transform image base inv\n"
    "check Prop-3.3 base inv\n";

// The pair-collapse image: lower semi-frame bounds taken on the span of the
// image rather than the whole space.
constexpr const char* kPairCollapseScenario =
    "SPACES\n"
    "ladder 8 16 32 64 128\n"
    "\n"
    "OPERATORS\n"
    "collapse pair_collapse\n"
    "\n"
    "SEQUENCES\n"
    "base weighted_basis n n\n"
    "image operator_image base collapse\n"
    "\n"
    "TASKS\n"
    "classify base\n"
    "classify_sequence image\n"
    "spectral collapse\n"
    "density collapse\n"
    "transform image base collapse\n"
    "check Prop-3.7 base collapse\n";

// Two embedded coordinate families on complementary subspaces and their
// direct sum.
constexpr const char* kEvenOddScenario =
    "SPACES\n"
    "ladder 8 16 32 64 128\n"
    "\n"
    "SEQUENCES\n"
    "even weighted_basis 2*n 2*n\n"
    "odd weighted_basis 2*n-1 2*n-1\n"
    "\n"
    "TASKS\n"
    "classify even\n"
    "classify odd\n"
    "direct_sum even odd\n"
    "check Prop-5.2 even odd\n"
    "check Prop-5.4 even odd\n"
    "check Prop-5.5 even odd\n";

}  // namespace

std::vector<std::string> builtin_scenario_names() {
  return {"example-3.4", "example-3.8", "example-5.7"};
}

Scenario builtin_scenario(const std::string& name) {
  if (name == "example-3.4") return parse_scenario(kWeightedIndexScenario);
  if (name == "example-3.8") return parse_scenario(kPairCollapseScenario);
  if (name == "example-5.7") return parse_scenario(kEvenOddScenario);
  std::string known;
  for (const std::string& n : builtin_scenario_names()) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw Error("unknown scenario '" + name + "' (known: " + known + ")");
}

}  // namespace semiframe
