#include "selsolve/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "selsolve/errors.hpp"

namespace selsolve {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool skippable(const std::string& line) {
  const std::string t = trim(line);
  return t.empty() || t[0] == '%';
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return in;
}

}  // namespace

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::filesystem::path name_map_path(const std::filesystem::path& system_path) {
  std::filesystem::path p = system_path;
  p += ".names";
  return p;
}

void write_system(const LinearSystem& system, std::ostream& out) {
  const auto& universe = system.universe();
  out << system.size() << ' ' << universe.size() << '\n';
  for (std::size_t i = 0; i < system.size(); ++i) {
    const AffineForm& f = system.equations()[i].lhs;
    if (!is_zero(f.constant())) out << (i + 1) << " 0 " << f.constant().get_str() << '\n';
    for (const auto& t : f.terms()) {
      auto it = std::lower_bound(universe.begin(), universe.end(), t.id);
      if (it == universe.end() || *it != t.id)
        throw BoundsError("unknown " + to_string(t.id) + " missing from the universe");
      out << (i + 1) << ' ' << (it - universe.begin() + 1) << ' ' << t.coef.get_str() << '\n';
    }
  }
  out << "0 0 0\n";
}

void write_name_map(const std::vector<UnknownId>& universe, std::ostream& out) {
  for (std::size_t j = 0; j < universe.size(); ++j)
    out << (j + 1) << ' ' << kind_letter(universe[j].kind) << ' ' << universe[j].index << ' '
        << to_string(universe[j]) << '\n';
}

void write_system(const LinearSystem& system, const std::filesystem::path& path) {
  std::ostringstream body;
  write_system(system, body);
  std::ostringstream names;
  write_name_map(system.universe(), names);
  atomic_write(path, body.str());
  atomic_write(name_map_path(path), names.str());
}

std::vector<UnknownId> read_name_map(std::istream& in) {
  std::vector<UnknownId> names;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream ls(line);
    std::size_t j = 0;
    std::string kind, name;
    std::uint64_t index = 0;
    if (!(ls >> j >> kind >> index >> name) || kind.size() != 1)
      throw ParseError(line_no, "expected 'j kind index name'");
    if (j != names.size() + 1) throw ParseError(line_no, "name map columns must be consecutive");
    try {
      names.push_back(UnknownId{kind_from_letter(kind[0]), static_cast<std::uint32_t>(index)});
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return names;
}

LinearSystem read_system(std::istream& in, const std::vector<UnknownId>* names) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!skippable(line)) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(line_no, "missing header");
  std::size_t m = 0, n = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> m >> n) || (hs >> extra)) throw ParseError(line_no, "expected header 'm n'");
  }

  std::vector<UnknownId> columns;
  if (names) {
    if (names->size() != n)
      throw ParseError(line_no, "name map has " + std::to_string(names->size()) +
                                    " columns, header says " + std::to_string(n));
    columns = *names;
  } else {
    for (std::size_t j = 0; j < n; ++j) columns.push_back(UnknownId::c(static_cast<std::uint32_t>(j)));
  }

  std::vector<std::vector<Term>> rows(m);
  std::vector<Rational> constants(m);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  bool terminated = false;
  while (next_line()) {
    std::istringstream ls(line);
    long long i = 0, j = 0;
    std::string value, extra;
    if (!(ls >> i >> j >> value) || (ls >> extra))
      throw ParseError(line_no, "expected 'i j num/den'");
    if (i == 0 && j == 0) {
      if (value != "0") throw ParseError(line_no, "terminator must be '0 0 0'");
      terminated = true;
      break;
    }
    if (i < 1 || static_cast<std::size_t>(i) > m || j < 0 || static_cast<std::size_t>(j) > n)
      throw BoundsError("line " + std::to_string(line_no) + ": entry (" + std::to_string(i) + ", " +
                        std::to_string(j) + ") outside " + std::to_string(m) + " x " +
                        std::to_string(n));
    const auto key = std::make_pair(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    if (!seen.insert(key).second) throw ParseError(line_no, "duplicate entry");
    Rational r;
    try {
      r = parse_rational(value);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    const auto row = static_cast<std::size_t>(i - 1);
    if (j == 0)
      constants[row] = r;
    else
      rows[row].push_back({columns[static_cast<std::size_t>(j - 1)], r});
  }
  if (!terminated) throw ParseError(line_no, "missing terminator '0 0 0'");
  if (next_line()) throw ParseError(line_no, "content after terminator");

  LinearSystem system;
  system.add_unknowns(columns);
  for (std::size_t r = 0; r < m; ++r)
    system.add_equation(AffineForm::from_terms(std::move(rows[r]), constants[r]));
  return system;
}

LinearSystem read_system(const std::filesystem::path& path) {
  auto in = open_input(path);
  const auto sidecar = name_map_path(path);
  if (std::filesystem::exists(sidecar)) {
    auto ns = open_input(sidecar);
    const auto names = read_name_map(ns);
    return read_system(in, &names);
  }
  return read_system(in);
}

void write_solution(const SolutionState& state, std::ostream& out) {
  out << "ZEROS\n";
  for (UnknownId z : state.zeros.sorted()) out << to_string(z) << '\n';
  out << "PIVOTS\n";
  for (const auto& [id, rhs] : state.pivots) out << to_string(id) << " = " << rhs.to_string() << '\n';
  out << "FREE\n";
  for (UnknownId f : state.free) out << to_string(f) << '\n';
}

void write_solution(const SolutionState& state, const std::filesystem::path& path) {
  std::ostringstream s;
  write_solution(state, s);
  atomic_write(path, s.str());
}

SolutionState read_solution(std::istream& in) {
  enum class Section { None, Zeros, Pivots, Free } section = Section::None;
  std::set<std::string> seen_sections;
  SolutionState state;
  std::set<UnknownId> used;
  std::string raw;
  std::size_t line_no = 0;
  auto claim = [&](UnknownId id) {
    if (!used.insert(id).second) throw ParseError(line_no, to_string(id) + " listed twice");
  };
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '%') continue;
    if (line == "ZEROS" || line == "PIVOTS" || line == "FREE") {
      if (!seen_sections.insert(line).second) throw ParseError(line_no, "repeated section " + line);
      section = line == "ZEROS" ? Section::Zeros : line == "PIVOTS" ? Section::Pivots : Section::Free;
      continue;
    }
    try {
      switch (section) {
        case Section::None:
          throw ParseError(line_no, "entry before any section header");
        case Section::Zeros: {
          const UnknownId id = parse_unknown(line);
          claim(id);
          state.zeros.insert(id);
          break;
        }
        case Section::Free: {
          const UnknownId id = parse_unknown(line);
          claim(id);
          state.free.insert(id);
          break;
        }
        case Section::Pivots: {
          const auto eq = line.find('=');
          if (eq == std::string::npos) throw ParseError(line_no, "expected 'name = expression'");
          const UnknownId id = parse_unknown(trim(line.substr(0, eq)));
          claim(id);
          state.pivots.emplace(id, parse_affine(line.substr(eq + 1)));
          break;
        }
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (seen_sections.size() != 3) throw ParseError(line_no, "expected ZEROS, PIVOTS and FREE sections");
  for (const auto& [id, rhs] : state.pivots)
    for (const auto& t : rhs.terms())
      if (!state.free.count(t.id))
        throw ParseError(line_no, "pivot " + to_string(id) + " depends on non-free " + to_string(t.id));
  return state;
}

SolutionState read_solution(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_solution(in);
}

}  // namespace selsolve
