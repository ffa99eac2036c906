#include "ucalc/io.hpp"

#include <unistd.h>

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace ucalc {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream in(body);
  std::vector<std::string> tokens;
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

ParseError at_line(std::size_t line_no, const std::string& what) {
  return ParseError("line " + std::to_string(line_no) + ": " + what, line_no);
}

struct Lines {
  std::istream& in;
  std::size_t line_no = 0;

  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      auto tokens = tokenize(line);
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }
};

Algebra algebra_from_tokens(const std::vector<std::string>& words,
                            std::size_t line_no) {
  if (words.empty()) throw at_line(line_no, "missing algebra kind");
  RankGroup group = RankGroup::Integers;
  if (words.size() > 1) {
    if (words[1] == "q") group = RankGroup::Rationals;
    else if (words[1] != "z")
      throw at_line(line_no, "unknown rank group '" + words[1] + "'");
  }
  if (words[0] == "real") {
    if (words.size() > 1)
      throw at_line(line_no, "the real algebra takes no rank group");
    return Algebra::real();
  }
  if (words[0] == "ranking") return Algebra::ranking(group);
  if (words[0] == "cumulative") return Algebra::cumulative(group);
  throw at_line(line_no, "unknown algebra kind '" + words[0] + "'");
}

Algebra read_algebra_header(Lines& lines) {
  auto tokens = lines.next();
  if (!tokens || (*tokens)[0] != "algebra")
    throw at_line(lines.line_no, "expected an 'algebra' header line");
  return algebra_from_tokens({tokens->begin() + 1, tokens->end()},
                             lines.line_no);
}

}  // namespace

Algebra parse_algebra_spec(std::string_view spec) {
  std::string normalized(spec);
  for (char& c : normalized)
    if (c == '-' || c == ':') c = ' ';
  auto words = tokenize(normalized);
  return algebra_from_tokens(words, 0);
}

std::string algebra_spec(const Algebra& alg) {
  if (alg.kind() == ValueKind::Real) return "real";
  std::string group = alg.group() == RankGroup::Integers ? "z" : "q";
  return std::string(to_string(alg.kind())) + " " + group;
}

QuasiMeasure read_measure(std::istream& in) {
  Lines lines{in};
  const Algebra alg = read_algebra_header(lines);

  std::vector<std::pair<std::string, Value>> entries;
  std::vector<std::string> atoms;
  bool has_atoms = false;
  bool normalize_at_end = false;
  while (auto tokens = lines.next()) {
    const auto& words = *tokens;
    if (words[0] == "atoms") {
      if (has_atoms || !entries.empty())
        throw at_line(lines.line_no, "misplaced 'atoms' line");
      has_atoms = true;
      atoms.assign(words.begin() + 1, words.end());
      continue;
    }
    if (words[0] == "normalize" && words.size() == 1) {
      normalize_at_end = true;
      continue;
    }
    if (normalize_at_end)
      throw at_line(lines.line_no, "'normalize' must be the last directive");
    if (words.size() != 2)
      throw at_line(lines.line_no, "expected '<world-id> <value>'");
    try {
      entries.emplace_back(words[0], parse_value(alg, words[1]));
    } catch (const ParseError& e) {
      throw at_line(lines.line_no, e.what());
    }
  }
  if (entries.empty()) throw at_line(lines.line_no, "no world lines");

  std::shared_ptr<const WorldSpace> space;
  std::vector<Value> table;
  if (has_atoms) {
    try {
      space = WorldSpace::assignments(std::move(atoms));
    } catch (const VocabularyError& e) {
      throw ParseError(e.what(), 0);
    }
    table.assign(space->size(), alg.n());
    std::vector<bool> seen(space->size(), false);
    for (auto& [id, value] : entries) {
      auto world = space->index_of(id);
      if (!world)
        throw ParseError("world '" + id + "' is not an assignment over the atoms", 0);
      if (seen[*world])
        throw ParseError("world '" + id + "' listed twice", 0);
      seen[*world] = true;
      table[*world] = std::move(value);
    }
    for (std::size_t w = 0; w < space->size(); ++w)
      if (!seen[w])
        throw ParseError("world '" + space->id(w) + "' is missing", 0);
  } else {
    std::vector<std::string> ids;
    for (auto& [id, value] : entries) {
      ids.push_back(id);
      table.push_back(std::move(value));
    }
    try {
      space = WorldSpace::labeled(std::move(ids));
    } catch (const VocabularyError& e) {
      throw ParseError(e.what(), 0);
    }
  }
  if (normalize_at_end) return normalize(alg, std::move(space), std::move(table));
  return QuasiMeasure(alg, std::move(space), std::move(table));
}

QuasiMeasure load_measure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return read_measure(in);
}

void write_measure(std::ostream& out, const QuasiMeasure& m) {
  out << "algebra " << algebra_spec(m.algebra()) << "\n";
  const WorldSpace& space = *m.space();
  if (space.is_assignment_space()) {
    out << "atoms";
    for (const std::string& a : space.atoms()) out << ' ' << a;
    out << "\n";
  }
  for (std::size_t w = 0; w < space.size(); ++w)
    out << space.id(w) << ' ' << print_value(m.at(w)) << "\n";
}

void save_measure(const std::filesystem::path& path, const QuasiMeasure& m) {
  std::filesystem::path dir = path.parent_path();
  if (dir.empty()) dir = ".";
  std::filesystem::path tmp =
      dir / (path.filename().string() + ".tmp" +
             std::to_string(static_cast<unsigned>(::getpid())));
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    write_measure(out, m);
    out.flush();
    if (!out) throw Error("short write to '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, path);
}

PartitionMeasure read_partition(std::istream& in) {
  Lines lines{in};
  const Algebra alg = read_algebra_header(lines);

  std::shared_ptr<const WorldSpace> space;
  std::vector<Event> blocks;
  std::vector<Value> values;
  while (auto tokens = lines.next()) {
    const auto& words = *tokens;
    if (words[0] == "worlds" || words[0] == "atoms") {
      if (space) throw at_line(lines.line_no, "space already declared");
      std::vector<std::string> names(words.begin() + 1, words.end());
      try {
        space = words[0] == "worlds"
                    ? WorldSpace::labeled(std::move(names))
                    : WorldSpace::assignments(std::move(names));
      } catch (const VocabularyError& e) {
        throw at_line(lines.line_no, e.what());
      }
      continue;
    }
    if (words[0] == "block") {
      if (!space)
        throw at_line(lines.line_no, "'worlds' or 'atoms' must come first");
      if (words.size() < 3)
        throw at_line(lines.line_no, "expected 'block <value> <world-id>...'");
      Value value = [&] {
        try {
          return parse_value(alg, words[1]);
        } catch (const ParseError& e) {
          throw at_line(lines.line_no, e.what());
        }
      }();
      std::vector<bool> bits(space->size(), false);
      for (std::size_t i = 2; i < words.size(); ++i) {
        auto world = space->index_of(words[i]);
        if (!world)
          throw at_line(lines.line_no, "unknown world '" + words[i] + "'");
        bits[*world] = true;
      }
      blocks.emplace_back(space, std::move(bits));
      values.push_back(std::move(value));
      continue;
    }
    throw at_line(lines.line_no, "unknown directive '" + words[0] + "'");
  }
  if (!space) throw at_line(lines.line_no, "missing 'worlds' or 'atoms' line");
  return PartitionMeasure(alg, std::move(blocks), std::move(values));
}

PartitionMeasure load_partition(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  return read_partition(in);
}

}  // namespace ucalc
